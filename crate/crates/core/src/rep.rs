//! Exact orthogonal representations of finite groups, fixed-point
//! subspaces, and equivariance of polynomial maps.

use crate::group::{FiniteGroup, GroupError, GroupJson, Subgroup, DEFAULT_GROUP_CAP};
use crate::matrix::RationalMatrix;
use crate::poly::{Polynomial, PolynomialMap};
use crate::rational::{ParseRationalError, Q};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("NotASubgroup: {0}")]
    NotASubgroup(String),
    #[error("NotInvariant: {0}")]
    NotInvariant(String),
    #[error("NotARepresentation: {0}")]
    NotARepresentation(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}

/// A representation stored element by element, indexed like `group.elements()`.
#[derive(Debug, Clone)]
pub struct OrthogonalRep {
    group: FiniteGroup,
    dimension: usize,
    matrices: Vec<RationalMatrix>,
}

impl OrthogonalRep {
    /// Takes one matrix per group element without validation; see [`check_rep`].
    pub fn from_matrices(group: FiniteGroup, dimension: usize, matrices: Vec<RationalMatrix>) -> Result<Self, RepError> {
        if matrices.len() != group.order() {
            return Err(RepError::DimensionMismatch(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        if let Some(m) = matrices.iter().find(|m| m.rows() != dimension || m.cols() != dimension) {
            return Err(RepError::DimensionMismatch(format!(
                "{}x{} matrix in a representation of dimension {dimension}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(OrthogonalRep { group, dimension, matrices })
    }

    /// Extends generator images along the group's breadth-first words and
    /// verifies the result is a homomorphism.
    pub fn from_generators(
        group: FiniteGroup,
        dimension: usize,
        gen_matrices: &[RationalMatrix],
    ) -> Result<Self, RepError> {
        if gen_matrices.len() != group.generators().len() {
            return Err(RepError::DimensionMismatch(format!(
                "{} generator matrices for {} generators",
                gen_matrices.len(),
                group.generators().len()
            )));
        }
        if gen_matrices.iter().any(|m| m.rows() != dimension || m.cols() != dimension) {
            return Err(RepError::DimensionMismatch("generator matrix size differs from dimension".into()));
        }
        let mut matrices = vec![RationalMatrix::identity(dimension)];
        for i in 1..group.order() {
            let (p, s) = group.bfs_parent(i).expect("non-identity element has a parent");
            matrices.push(gen_matrices[s].mul(&matrices[p]));
        }
        let rep = Self::from_matrices(group, dimension, matrices)?;
        if !check_rep(&rep)? {
            return Err(RepError::NotARepresentation("generator matrices do not define an orthogonal homomorphism".into()));
        }
        Ok(rep)
    }

    pub fn trivial(group: FiniteGroup, dimension: usize) -> Self {
        let matrices = vec![RationalMatrix::identity(dimension); group.order()];
        OrthogonalRep { group, dimension, matrices }
    }

    /// Permutation action on coordinates: `ρ(g)·e_i = e_{g(i)}`.
    pub fn permutation(group: FiniteGroup) -> Self {
        let n = group.degree();
        let matrices = group
            .elements()
            .iter()
            .map(|p| {
                let mut m = RationalMatrix::zeros(n, n);
                for i in 0..n {
                    m[(p.apply(i), i)] = Q::one();
                }
                m
            })
            .collect();
        OrthogonalRep { group, dimension: n, matrices }
    }

    /// One-dimensional rep through a character `χ: G → {±1}` given on elements.
    pub fn one_dimensional(group: FiniteGroup, chi: impl Fn(usize) -> i64) -> Self {
        let matrices = (0..group.order()).map(|i| RationalMatrix::from_i64(&[&[chi(i)]])).collect();
        OrthogonalRep { group, dimension: 1, matrices }
    }

    /// `dimension` copies of the sign of the permutation, acting diagonally.
    pub fn sign(group: FiniteGroup, dimension: usize) -> Self {
        let signs: Vec<i64> = group.elements().iter().map(permutation_sign).collect();
        let matrices = signs
            .iter()
            .map(|&s| RationalMatrix::identity(dimension).scale(&Q::from_integer(s.into())))
            .collect();
        OrthogonalRep { group, dimension, matrices }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        if self.group != other.group {
            return Err(RepError::DimensionMismatch("direct sum over different groups".into()));
        }
        let matrices = self.matrices.iter().zip(&other.matrices).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(OrthogonalRep { group: self.group.clone(), dimension: self.dimension + other.dimension, matrices })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn matrix(&self, g: usize) -> &RationalMatrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    /// Reynolds projector `(1/|H|) Σ_{h∈H} ρ(h)`.
    pub fn reynolds(&self, h: &Subgroup) -> Result<RationalMatrix, RepError> {
        self.group.check_subgroup(h).map_err(|e| RepError::NotASubgroup(e.to_string()))?;
        let mut p = RationalMatrix::zeros(self.dimension, self.dimension);
        for &m in h.members() {
            p = p.add(&self.matrices[m]);
        }
        Ok(p.scale(&Q::new(1.into(), (h.order() as i64).into())))
    }

    pub fn to_json(&self) -> RepJson {
        RepJson {
            group: self.group.to_json(),
            dimension: self.dimension,
            matrices: Some(self.matrices.iter().enumerate().map(|(i, m)| (i.to_string(), m.to_strings())).collect()),
            generator_matrices: None,
        }
    }

    /// Accepts either a full per-element table or generator images.
    pub fn from_json(j: &RepJson, cap: usize) -> Result<Self, RepError> {
        let group = FiniteGroup::from_json(&j.group, cap)?;
        if let Some(gens) = &j.generator_matrices {
            let mats = gens.iter().map(|m| RationalMatrix::parse(m)).collect::<Result<Vec<_>, _>>()?;
            return Self::from_generators(group, j.dimension, &mats);
        }
        let table = j
            .matrices
            .as_ref()
            .ok_or_else(|| RepError::DimensionMismatch("neither matrices nor generator_matrices given".into()))?;
        let mut mats = Vec::with_capacity(group.order());
        for i in 0..group.order() {
            let m = table
                .get(&i.to_string())
                .ok_or_else(|| RepError::DimensionMismatch(format!("missing matrix for element {i}")))?;
            mats.push(RationalMatrix::parse(m)?);
        }
        Self::from_matrices(group, j.dimension, mats)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub group: GroupJson,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<BTreeMap<String, Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_matrices: Option<Vec<Vec<Vec<String>>>>,
}

impl OrthogonalRep {
    pub fn load(j: &RepJson) -> Result<Self, RepError> {
        Self::from_json(j, DEFAULT_GROUP_CAP)
    }
}

pub fn permutation_sign(p: &crate::group::Permutation) -> i64 {
    let n = p.degree();
    let mut seen = vec![false; n];
    let mut s = 1;
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p.apply(j);
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// Exact check of orthogonality, identity at `e`, and `ρ(gh) = ρ(g)ρ(h)`.
pub fn check_rep(rho: &OrthogonalRep) -> Result<bool, RepError> {
    let g = &rho.group;
    if rho.matrices.len() != g.order() {
        return Err(RepError::DimensionMismatch("matrix count differs from group order".into()));
    }
    if rho.matrices.iter().any(|m| m.rows() != rho.dimension || m.cols() != rho.dimension) {
        return Err(RepError::DimensionMismatch("matrix size differs from dimension".into()));
    }
    if !rho.matrices[0].is_identity() {
        return Ok(false);
    }
    for m in &rho.matrices {
        if !m.transpose().mul(m).is_identity() {
            return Ok(false);
        }
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            if rho.matrices[a].mul(&rho.matrices[b]) != rho.matrices[g.mul(a, b)] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Basis of `V^H` together with the class it was computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSubspace {
    pub ambient: usize,
    pub basis: Vec<Vec<Q>>,
    pub class_index: Option<usize>,
}

impl FixedSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient, &self.basis)
    }

    pub fn full(n: usize) -> Self {
        let basis = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
        FixedSubspace { ambient: n, basis, class_index: None }
    }
}

/// `V^H` as the column space of the Reynolds projector.
pub fn fixed_subspace(rho: &OrthogonalRep, h: &Subgroup) -> Result<FixedSubspace, RepError> {
    let p = rho.reynolds(h)?;
    Ok(FixedSubspace { ambient: rho.dimension, basis: p.column_space(), class_index: None })
}

/// `f(ρ(g)x) = ρ(g)f(x)` coefficientwise for every generator `g`.
pub fn check_equivariance(f: &PolynomialMap, rho: &OrthogonalRep) -> Result<bool, RepError> {
    if f.nvars() != rho.dimension || f.ncomponents() != rho.dimension {
        return Err(RepError::DimensionMismatch(format!(
            "map {}→{} against representation of dimension {}",
            f.nvars(),
            f.ncomponents(),
            rho.dimension
        )));
    }
    for s in rho.group.generator_indices() {
        let m = &rho.matrices[s];
        if f.compose_linear(m) != f.left_multiply(m) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x ↦ ρ(g)⁻¹ f(ρ(g)x)`.
pub fn conjugate_map(f: &PolynomialMap, rho: &OrthogonalRep, g: usize) -> PolynomialMap {
    let m = &rho.matrices[g];
    f.compose_linear(m).left_multiply(&m.transpose())
}

/// Expresses `f` on `span(S)` in the coordinates of the basis of `S`.
pub fn restrict_map(f: &PolynomialMap, s: &FixedSubspace) -> Result<PolynomialMap, RepError> {
    if f.nvars() != s.ambient || f.ncomponents() != s.ambient {
        return Err(RepError::DimensionMismatch(format!(
            "map of dimension {} restricted to a subspace of ℝ^{}",
            f.nvars(),
            s.ambient
        )));
    }
    let d = s.dim();
    if d == 0 {
        return Ok(PolynomialMap::zero(0, 0));
    }
    let b = s.basis_matrix();
    let subs: Vec<Polynomial> = (0..s.ambient).map(|i| Polynomial::linear(b.row(i))).collect();
    let image = f.compose(&subs);
    // rows of B where it is invertible
    let pivots = b.transpose().rref().pivots;
    let bp = b.select_rows(&pivots);
    let bp_inv = bp.inverse().expect("pivot rows of a basis are independent");
    let picked = PolynomialMap::new(d, pivots.iter().map(|&i| image.component(i).clone()).collect())
        .expect("consistent variable count");
    let g = picked.left_multiply(&bp_inv);
    if g.left_multiply(&b) != image {
        return Err(RepError::NotInvariant("f maps the subspace outside itself".into()));
    }
    Ok(g)
}

/// Symbolic Jacobian `∂f_i/∂x_j`.
pub fn jacobian(f: &PolynomialMap) -> Vec<Vec<Polynomial>> {
    f.jacobian()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::library;
    use crate::rational::q;

    fn cubic() -> PolynomialMap {
        PolynomialMap::new(1, vec![Polynomial::from_terms(1, [(vec![3], q(1)), (vec![1], q(-1))])]).unwrap()
    }

    fn sign_c2() -> OrthogonalRep {
        OrthogonalRep::sign(library::symmetric(2), 1)
    }

    #[test]
    fn check_rep_examples() {
        let c2 = library::cyclic(2);
        assert!(check_rep(&OrthogonalRep::trivial(c2.clone(), 1)).unwrap());
        assert!(check_rep(&sign_c2()).unwrap());
        let bad = OrthogonalRep::from_matrices(
            c2,
            1,
            vec![RationalMatrix::from_i64(&[&[1]]), RationalMatrix::from_i64(&[&[2]])],
        )
        .unwrap();
        assert!(!check_rep(&bad).unwrap());
    }

    #[test]
    fn fixed_subspace_examples() {
        let rho = sign_c2();
        let g = rho.group().clone();
        assert_eq!(fixed_subspace(&rho, &g.whole()).unwrap().dim(), 0);
        let swap = OrthogonalRep::permutation(library::cyclic(2));
        let fs = fixed_subspace(&swap, &swap.group().whole()).unwrap();
        assert_eq!(fs.dim(), 1);
        assert_eq!(fs.basis[0][0], fs.basis[0][1]);
        assert_eq!(fixed_subspace(&swap, &swap.group().trivial_subgroup()).unwrap().dim(), 2);
    }

    #[test]
    fn equivariance_examples() {
        let rho = sign_c2();
        assert!(check_equivariance(&cubic(), &rho).unwrap());
        let sq = PolynomialMap::new(1, vec![Polynomial::from_terms(1, [(vec![2], q(1))])]).unwrap();
        assert!(!check_equivariance(&sq, &rho).unwrap());
        let s3 = OrthogonalRep::permutation(library::symmetric(3));
        assert!(check_equivariance(&PolynomialMap::identity(3), &s3).unwrap());
    }

    #[test]
    fn restrict_examples() {
        let swap = OrthogonalRep::permutation(library::cyclic(2));
        let s = fixed_subspace(&swap, &swap.group().whole()).unwrap();
        let cubes = PolynomialMap::new(
            2,
            vec![
                Polynomial::from_terms(2, [(vec![3, 0], q(1))]),
                Polynomial::from_terms(2, [(vec![0, 3], q(1))]),
            ],
        )
        .unwrap();
        let r = restrict_map(&cubes, &s).unwrap();
        let c = &s.basis[0][0];
        // t ↦ c²·t³ in the coordinate of the basis vector (c, c)
        let expected = Polynomial::from_terms(1, [(vec![3], c * c)]);
        assert_eq!(r.component(0), &expected);
        assert_eq!(restrict_map(&PolynomialMap::identity(2), &s).unwrap(), PolynomialMap::identity(1));

        let axis = FixedSubspace { ambient: 2, basis: vec![vec![q(1), q(0)]], class_index: None };
        let leaky = PolynomialMap::new(
            2,
            vec![
                Polynomial::from_terms(2, [(vec![0, 1], q(1))]),
                Polynomial::from_terms(2, [(vec![2, 0], q(1))]),
            ],
        )
        .unwrap();
        assert!(matches!(restrict_map(&leaky, &axis), Err(RepError::NotInvariant(_))));
    }

    #[test]
    fn jacobian_of_cubic() {
        let j = jacobian(&cubic());
        assert_eq!(j[0][0], Polynomial::from_terms(1, [(vec![2], q(3)), (vec![0], q(-1))]));
    }

    #[test]
    fn generator_extension_matches_table() {
        let g = library::symmetric(3);
        let perm = OrthogonalRep::permutation(g.clone());
        let gens: Vec<RationalMatrix> = g.generator_indices().iter().map(|&i| perm.matrix(i).clone()).collect();
        let rebuilt = OrthogonalRep::from_generators(g, 3, &gens).unwrap();
        assert_eq!(rebuilt.matrices(), perm.matrices());
        let json = rebuilt.to_json();
        let back = OrthogonalRep::load(&json).unwrap();
        assert_eq!(back.matrices(), perm.matrices());
    }
}
