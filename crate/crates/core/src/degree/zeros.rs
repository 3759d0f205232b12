//! Zero location by grid-seeded Newton iteration.

use super::{DegreeConfig, DegreeError, Domain};
use crate::poly::{CompiledMap, PolynomialMap};
use crate::rational::to_f64;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub point: Vec<f64>,
    /// Sign of `det J` at the zero.
    pub sign: i32,
    pub determinant: f64,
    /// Radius of a ball around the point containing no other located zero
    /// and no boundary point.
    pub isolation_radius: f64,
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

/// Full Newton steps while the residual keeps shrinking. A simple zero
/// stalls at rounding level within a few steps; a multiple zero keeps
/// creeping, driving `det J` towards zero where the degeneracy test sees it.
fn polish(cf: &CompiledMap, mut x: Vec<f64>) -> Vec<f64> {
    let mut r = norm(&cf.eval(&x));
    for _ in 0..48 {
        if r == 0.0 {
            break;
        }
        let fx = cf.eval(&x);
        let Some(step) = cf.jacobian(&x).lu().solve(&DVector::from_column_slice(&fx)) else { break };
        let y: Vec<f64> = x.iter().zip(step.iter()).map(|(a, s)| a - s).collect();
        let ry = norm(&cf.eval(&y));
        if ry >= r {
            break;
        }
        x = y;
        r = ry;
    }
    x
}

fn newton(cf: &CompiledMap, mut x: Vec<f64>, bound: f64, cfg: &DegreeConfig) -> Option<Vec<f64>> {
    let n = x.len();
    let mut fx = cf.eval(&x);
    for _ in 0..cfg.max_newton {
        if norm(&fx) <= cfg.tol_residual {
            return Some(polish(cf, x));
        }
        let j = cf.jacobian(&x);
        let step = j.lu().solve(&DVector::from_column_slice(&fx))?;
        // damp until the residual decreases
        let mut t = 1.0;
        let current = norm(&fx);
        loop {
            let y: Vec<f64> = (0..n).map(|i| x[i] - t * step[i]).collect();
            let fy = cf.eval(&y);
            if t < 1e-4 && norm(&fy) >= current {
                // stalled at a local minimum of |f|
                return None;
            }
            if norm(&fy) < current {
                let moved = t * step.norm();
                x = y;
                fx = fy;
                if moved <= 1e-15 * (1.0 + norm(&x)) {
                    return (norm(&fx) <= cfg.tol_residual.max(1e-9)).then(|| polish(cf, x));
                }
                break;
            }
            t *= 0.5;
        }
        if x.iter().any(|v| !v.is_finite() || v.abs() > bound) {
            return None;
        }
    }
    (norm(&fx) <= cfg.tol_residual).then(|| polish(cf, x))
}

/// Zeros of `f` inside `d`, each with the sign of its Jacobian determinant.
/// A zero within the cluster radius of the boundary, or with a nearly
/// singular Jacobian, is an error.
pub fn locate_zeros(f: &PolynomialMap, d: &Domain, cfg: &DegreeConfig) -> Result<Vec<ZeroRecord>, DegreeError> {
    let n = d.dim();
    let cf = f.compile();
    let per_axis = {
        let budget = (cfg.max_seeds as f64).powf(1.0 / n as f64).floor() as usize;
        cfg.grid.min(budget).max(2)
    };
    let center: Vec<f64> = d.center().iter().map(to_f64).collect();
    let ext: Vec<f64> = (0..n).map(|i| d.extent(i)).collect();
    let bound = 10.0 * (1.0 + d.sup_radius());
    let mut found: Vec<Vec<f64>> = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let seed: Vec<f64> =
            (0..n).map(|i| center[i] - ext[i] + ext[i] * (2 * idx[i] + 1) as f64 / per_axis as f64).collect();
        if let Some(z) = newton(&cf, seed, bound, cfg) {
            let gap = d.boundary_distance(&z);
            if gap.abs() < cfg.cluster_radius {
                return Err(DegreeError::BoundaryZeroSuspected(format!("zero at {z:?} lies on or near the boundary")));
            }
            if gap > 0.0 && found.iter().all(|w| dist(w, &z) >= cfg.cluster_radius) {
                found.push(z);
            }
        }
        let mut pos = 0;
        while pos < n {
            idx[pos] += 1;
            if idx[pos] < per_axis {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    found.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let mut out = Vec::with_capacity(found.len());
    for (k, z) in found.iter().enumerate() {
        let j: DMatrix<f64> = cf.jacobian(z);
        let det = j.determinant();
        if det.abs() <= cfg.tol_jacobian {
            return Err(DegreeError::DegenerateZero { point: z.clone(), det });
        }
        let nearest = found
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, w)| dist(w, z) / 2.0)
            .fold(f64::INFINITY, f64::min);
        out.push(ZeroRecord {
            point: z.clone(),
            sign: if det > 0.0 { 1 } else { -1 },
            determinant: det,
            isolation_radius: nearest.min(d.boundary_distance(z)),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::rational::q;

    #[test]
    fn cubic_has_three_signed_zeros() {
        let f = PolynomialMap::new(1, vec![Polynomial::from_terms(1, [(vec![3], q(1)), (vec![1], q(-1))])]).unwrap();
        let d = Domain::origin_ball(1, q(2));
        let z = locate_zeros(&f, &d, &DegreeConfig::default()).unwrap();
        let signs: Vec<i32> = z.iter().map(|r| r.sign).collect();
        assert_eq!(signs, vec![1, -1, 1]);
        assert!(z.iter().all(|r| r.isolation_radius > 0.4));
    }

    #[test]
    fn double_zero_is_degenerate() {
        let f = PolynomialMap::new(1, vec![Polynomial::from_terms(1, [(vec![2], q(1))])]).unwrap();
        let err = locate_zeros(&f, &Domain::unit_ball(1), &DegreeConfig::default()).unwrap_err();
        assert!(matches!(err, DegreeError::DegenerateZero { .. }));
    }
}
