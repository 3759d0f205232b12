//! Named cocycles used by the examples, the tests and `selftest`.

use super::cocycle::{Cocycle, GroupData, Picture};
use super::operator::{CompactPerturbation, FredholmOperator};
use crate::group::library;
use crate::matrix::RationalMatrix;
use crate::poly::{Polynomial, PolynomialMap};
use crate::rational::{q, q_frac, Q};
use crate::rep::OrthogonalRep;

fn univariate(terms: &[(u32, Q)]) -> PolynomialMap {
    PolynomialMap::new(1, vec![Polynomial::from_terms(1, terms.iter().map(|(e, c)| (vec![*e], c.clone())))])
        .expect("one variable")
}

/// `l + c = 1 − 2P` with `P` the projection onto `e₀`; index −1.
pub fn i_minus_2p() -> Cocycle {
    Cocycle::linear(&RationalMatrix::from_i64(&[&[2]]), q(1)).expect("valid")
}

/// Quarter turn in the first two coordinates, `c = 0`; index 1.
pub fn rotation() -> Cocycle {
    let op = FredholmOperator::with_block(RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]), q(1)).expect("invertible");
    Cocycle::new(op, CompactPerturbation::zero(), Picture::Pointed, q(1), None).expect("valid")
}

/// Backward shift by one place, index 1.
pub fn shift_one() -> Cocycle {
    let op = FredholmOperator::new(1, RationalMatrix::from_i64(&[&[1]]), 1, vec![q(1)]).expect("Fredholm");
    Cocycle::new(op, CompactPerturbation::zero(), Picture::Pointed, q(1), None).expect("valid")
}

/// `l = diag(0, 1, 1, …)` with `c(x) = x₀³ + x₀` on the first coordinate;
/// the span condition uses `ξ ⊇ coker l`.
pub fn singular_block() -> Cocycle {
    let op = FredholmOperator::with_block(RationalMatrix::from_i64(&[&[0]]), q(1)).expect("Fredholm");
    let c = CompactPerturbation::new(univariate(&[(3, q(1)), (1, q(1))])).expect("small");
    Cocycle::new(op, c, Picture::Pointed, q(2), None).expect("valid")
}

/// `C₂` acting by sign on every coordinate, with `l + c` equal to
/// `x ↦ x³ − x` on the first coordinate; index `[C₂/C₂]`.
pub fn sign_cubic() -> Cocycle {
    let c = CompactPerturbation::new(univariate(&[(3, q(1)), (1, q(-2))])).expect("small");
    let g = library::cyclic(2);
    let gd = GroupData::blockwise(OrthogonalRep::sign(g, 1));
    Cocycle::new(FredholmOperator::identity(), c, Picture::Pointed, q(2), Some(gd)).expect("equivariant")
}

/// `z ↦ zᵏ − 2⁻ᵏ` on `ℂ = ℝ²`: `k` simple zeros on the circle of radius ½.
pub fn power_map(k: u32) -> PolynomialMap {
    let mut re = Polynomial::zero(2);
    let mut im = Polynomial::zero(2);
    // (x + iy)^k = Σ C(k,j) x^{k−j} (iy)^j
    let mut binom: i64 = 1;
    for j in 0..=k {
        let c = q(binom);
        match j % 4 {
            0 => re.add_term(vec![k - j, j], c),
            1 => im.add_term(vec![k - j, j], c),
            2 => re.add_term(vec![k - j, j], -c),
            _ => im.add_term(vec![k - j, j], -c),
        }
        binom = binom * (k - j) as i64 / (j + 1) as i64;
    }
    re.add_term(vec![0, 0], -q_frac(1, 1 << k));
    PolynomialMap::new(2, vec![re, im]).expect("two variables")
}

/// The cocycle `l = 1` with `l + c` equal to [`power_map`] on `ℝ²`; index `k`.
pub fn power_cocycle(k: u32) -> Cocycle {
    Cocycle::from_map(&power_map(k), q(1)).expect("valid")
}

/// Collapse of a framed pair of points with opposite framings:
/// `x ↦ x² − 1` on the ball of radius 2.
pub fn opposite_pair() -> Cocycle {
    Cocycle::from_map(&univariate(&[(2, q(1)), (0, q(-1))]), q(2)).expect("valid")
}

/// The same map with the radius on the zero set, so no sphere of that
/// radius is admissible.
pub fn zero_on_sphere() -> Cocycle {
    Cocycle::from_map(&univariate(&[(2, q(1)), (0, q(-1))]), q(1)).expect("valid")
}
