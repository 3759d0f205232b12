//! Inputs shared by the benchmarks in `benches/`.

use eqcoh_core::degree::Domain;
use eqcoh_core::group::library;
use eqcoh_core::matrix::RationalMatrix;
use eqcoh_core::rational::{q, q_frac};
use eqcoh_core::schwartz::{cup_product, fixtures, Cocycle};
use eqcoh_core::{FiniteGroup, OrthogonalRep};

pub fn groups() -> Vec<(&'static str, FiniteGroup)> {
    ["S3", "D4", "A4", "S4"]
        .into_iter()
        .map(|n| library::corpus().into_iter().find(|(name, _)| *name == n).expect("corpus group"))
        .collect()
}

pub fn permutation_setting(g: &FiniteGroup) -> (OrthogonalRep, Domain) {
    let rho = OrthogonalRep::permutation(g.clone());
    let d = Domain::origin_ball(rho.dimension(), q(1));
    (rho, d)
}

/// `1 − K` with `K` a dense `k × k` matrix of small rationals.
pub fn dense_linear_cocycle(k: usize) -> Cocycle {
    let rows = (0..k)
        .map(|i| (0..k).map(|j| q_frac(((i * 7 + j * 3) % 11) as i64 - 5, 4)).collect())
        .collect();
    Cocycle::linear(&RationalMatrix::from_rows(rows).expect("square"), q(1)).expect("valid")
}

pub fn cup_of_powers() -> Cocycle {
    cup_product(&fixtures::power_cocycle(2), &fixtures::power_cocycle(3)).expect("pointed")
}
