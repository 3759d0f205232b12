//! Boundary certification: Lipschitz bounds, cube-face sampling of
//! spheres and boxes, and the adaptive winding number in the plane.

use super::{DegreeConfig, DegreeError, Domain};
use crate::poly::PolynomialMap;
use crate::rational::to_f64;
use num_traits::Signed;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCertificate {
    /// Certified lower bound for `|f|` on the boundary.
    pub margin: f64,
    pub samples: usize,
    /// Image radius of the smallest accepted cell.
    pub spacing: f64,
}

/// Euclidean Lipschitz constant of `f` on the domain, from coefficient
/// norms: `√Σ_i (Σ |c|·deg·R^(deg−1))²` with `R` the sup-radius.
pub fn lipschitz_bound(f: &PolynomialMap, d: &Domain) -> f64 {
    let r = d.sup_radius();
    let s: f64 = f.components().iter().map(|p| p.gradient_bound(r).powi(2)).sum();
    s.sqrt() * (1.0 + 1e-9)
}

/// Bound for `|∇f|` on the box `|x_j| ≤ b_j`, term by term.
struct LocalLipschitz {
    terms: Vec<Vec<(f64, Vec<u32>)>>,
}

impl LocalLipschitz {
    fn new(f: &PolynomialMap) -> Self {
        let terms = f
            .components()
            .iter()
            .map(|p| p.terms().map(|(e, c)| (to_f64(&c.abs()), e.clone())).collect())
            .collect();
        LocalLipschitz { terms }
    }

    fn bound(&self, b: &[f64]) -> f64 {
        let mut total = 0.0;
        for comp in &self.terms {
            let mut grad = vec![0.0; b.len()];
            for (c, e) in comp {
                for (i, g) in grad.iter_mut().enumerate() {
                    if e[i] == 0 {
                        continue;
                    }
                    let mut t = c * e[i] as f64;
                    for (j, &k) in e.iter().enumerate() {
                        let k = if j == i { k - 1 } else { k };
                        t *= b[j].powi(k as i32);
                    }
                    *g += t;
                }
            }
            total += grad.iter().map(|g| g * g).sum::<f64>();
        }
        total.sqrt() * (1.0 + 1e-9)
    }
}

/// A square patch of a cube face: `u_axis = side`, the other coordinates
/// within `half` of `center`.
struct Cell {
    axis: usize,
    side: f64,
    center: Vec<f64>,
    half: f64,
}

impl Cell {
    fn point(&self) -> Vec<f64> {
        let mut u = Vec::with_capacity(self.center.len() + 1);
        u.extend_from_slice(&self.center[..self.axis]);
        u.push(self.side);
        u.extend_from_slice(&self.center[self.axis..]);
        u
    }

    fn split(&self) -> impl Iterator<Item = Cell> + '_ {
        let k = self.center.len();
        let h = self.half / 2.0;
        (0..1usize << k).map(move |mask| Cell {
            axis: self.axis,
            side: self.side,
            center: (0..k).map(|j| self.center[j] + if mask >> j & 1 == 1 { h } else { -h }).collect(),
            half: h,
        })
    }
}

/// Covers the boundary by cube-face cells, splitting a cell until
/// `|f(center)| > L·ρ` with `ρ` the cell's image radius and `L` a
/// Lipschitz bound on a box around it; then `|f| ≥ |f(center)| − L·ρ > 0`
/// on the whole cell.
pub fn certify_boundary(f: &PolynomialMap, d: &Domain, cfg: &DegreeConfig) -> Result<BoundaryCertificate, DegreeError> {
    let n = d.dim();
    let cf = f.compile();
    let lip = LocalLipschitz::new(f);
    let center: Vec<f64> = d.center().iter().map(to_f64).collect();
    let reach: Vec<f64> = (0..n).map(|i| center[i].abs() + d.extent(i)).collect();
    let mut stack = Vec::new();
    for axis in 0..n {
        for side in [-1.0, 1.0] {
            let root = Cell { axis, side, center: vec![0.0; n - 1], half: 1.0 };
            stack.extend(root.split().flat_map(|c| c.split().collect::<Vec<_>>()));
        }
    }
    let (mut samples, mut margin, mut finest) = (0usize, f64::INFINITY, f64::INFINITY);
    while let Some(cell) = stack.pop() {
        let x = d.boundary_point(&cell.point());
        let v = cf.norm(&x);
        samples += 1;
        let rho = d.face_cell_radius(cell.half);
        let bbox: Vec<f64> = (0..n).map(|i| (x[i].abs() + rho).min(reach[i])).collect();
        let lr = lip.bound(&bbox) * rho;
        if v > lr {
            margin = margin.min(v - lr);
            finest = finest.min(rho);
            continue;
        }
        if v < 1e-300 {
            return Err(DegreeError::BoundaryZeroSuspected(format!(
                "f vanishes at the boundary point {x:?}"
            )));
        }
        if samples + stack.len() >= cfg.max_boundary_samples {
            return Err(DegreeError::BoundaryZeroSuspected(format!(
                "boundary not certified within {} samples (|f| = {v:.3e} near {x:?}, needed > {lr:.3e})",
                cfg.max_boundary_samples
            )));
        }
        stack.extend(cell.split());
    }
    Ok(BoundaryCertificate { margin, samples, spacing: finest })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Winding {
    pub value: i64,
    pub total_angle: f64,
    pub samples: usize,
    pub margin: f64,
}

/// Winding number of `f` along the boundary curve of a planar domain.
/// Each accepted arc has Lipschitz length below `|f|` at its start, so the
/// image arc stays in a disc missing the origin and no turn is missed.
pub fn winding_number(f: &PolynomialMap, d: &Domain, cfg: &DegreeConfig) -> Result<Winding, DegreeError> {
    let lip = lipschitz_bound(f, d) * d.curve_speed();
    let cf = f.compile();
    let eval = |s: f64| {
        let p = d.curve_point(s);
        let v = cf.eval(&p);
        [v[0], v[1]]
    };
    let n0 = 64;
    let mut stack: Vec<(f64, [f64; 2], f64, [f64; 2])> = Vec::new();
    let mut vals: Vec<[f64; 2]> = (0..=n0).map(|k| eval(k as f64 / n0 as f64)).collect();
    vals[n0] = vals[0];
    for k in (0..n0).rev() {
        stack.push((k as f64 / n0 as f64, vals[k], (k + 1) as f64 / n0 as f64, vals[k + 1]));
    }
    let mut samples = n0;
    let mut total = 0.0;
    let mut margin = f64::INFINITY;
    while let Some((s0, f0, s1, f1)) = stack.pop() {
        let r0 = f0[0].hypot(f0[1]);
        let len = lip * (s1 - s0);
        if len < r0 {
            margin = margin.min(r0 - len);
            total += (f0[0] * f1[1] - f0[1] * f1[0]).atan2(f0[0] * f1[0] + f0[1] * f1[1]);
            continue;
        }
        if s1 - s0 < 1e-13 || samples >= cfg.max_boundary_samples {
            return Err(DegreeError::BoundaryZeroSuspected(format!(
                "winding refinement stalled near s = {s0:.6} with |f| = {r0:.3e}"
            )));
        }
        let sm = 0.5 * (s0 + s1);
        let fm = eval(sm);
        samples += 1;
        stack.push((sm, fm, s1, f1));
        stack.push((s0, f0, sm, fm));
    }
    let turns = total / std::f64::consts::TAU;
    let value = turns.round();
    if (turns - value).abs() > 1e-6 {
        return Err(DegreeError::BoundaryZeroSuspected(format!("total angle {total} is not a multiple of 2π")));
    }
    Ok(Winding { value: value as i64, total_angle: total, samples, margin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::rational::q;

    fn z_power(k: u32) -> PolynomialMap {
        // real and imaginary parts of (x + iy)^k
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let (mut re, mut im) = (Polynomial::constant(2, q(1)), Polynomial::zero(2));
        for _ in 0..k {
            let nre = re.mul(&x).sub(&im.mul(&y));
            let nim = re.mul(&y).add(&im.mul(&x));
            re = nre;
            im = nim;
        }
        PolynomialMap::new(2, vec![re, im]).unwrap()
    }

    #[test]
    fn cells_tile_the_faces() {
        let root = Cell { axis: 1, side: 1.0, center: vec![0.0, 0.0], half: 1.0 };
        let kids: Vec<Cell> = root.split().collect();
        assert_eq!(kids.len(), 4);
        assert!(kids.iter().all(|c| c.half == 0.5 && c.center.iter().all(|x| x.abs() == 0.5)));
        assert_eq!(kids[0].point()[1], 1.0);
    }

    #[test]
    fn product_of_powers_certifies_in_four_dimensions() {
        let f = z_power(3).direct_sum(&z_power(2));
        let c = certify_boundary(&f, &Domain::origin_ball(4, q(2)), &DegreeConfig::default()).unwrap();
        assert!(c.margin > 0.0);
    }

    #[test]
    fn winding_of_powers() {
        let cfg = DegreeConfig::default();
        for k in 1..=5 {
            let w = winding_number(&z_power(k), &Domain::unit_ball(2), &cfg).unwrap();
            assert_eq!(w.value, k as i64);
        }
    }

    #[test]
    fn identity_boundary_certifies() {
        let c = certify_boundary(&PolynomialMap::identity(3), &Domain::unit_ball(3), &DegreeConfig::default()).unwrap();
        assert!(c.margin > 0.0 && c.margin <= 1.0);
    }
}
