//! Exact computations in equivariant stable cohomotopy at desk scale:
//! Burnside rings of finite groups, equivariant Brouwer degree, and the
//! index of compact perturbations of Fredholm operators.

pub mod burnside;
pub mod catalog;
pub mod degree;
pub mod group;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod rep;
pub mod schwartz;
pub mod univariate;

pub use burnside::{BurnsideElement, MarksVector, TableOfMarks};
pub use group::{FiniteGroup, Permutation, Subgroup, SubgroupClassTable};
pub use matrix::RationalMatrix;
pub use poly::{Polynomial, PolynomialMap};
pub use rational::Q;
pub use rep::{FixedSubspace, OrthogonalRep};
