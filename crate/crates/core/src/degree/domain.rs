//! Admissible domains: balls, boxes and axis-aligned ellipsoids.

use crate::rational::{format_q, parse_q, to_f64, ParseRationalError, Q};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domain {
    Ball { center: Vec<Q>, radius: Q },
    Box { center: Vec<Q>, half_widths: Vec<Q> },
    /// `Σ w_i (x_i − c_i)² ≤ r²`; arises as a ball cut down to a subspace
    /// in orthogonal (not orthonormal) coordinates.
    Ellipsoid { center: Vec<Q>, radius: Q, weights: Vec<Q> },
}

/// Where a point sits relative to a domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Inside,
    Boundary,
    Outside,
}

impl Domain {
    pub fn ball(center: Vec<Q>, radius: Q) -> Self {
        Domain::Ball { center, radius }
    }

    pub fn origin_ball(n: usize, radius: Q) -> Self {
        Domain::Ball { center: vec![Q::zero(); n], radius }
    }

    pub fn dim(&self) -> usize {
        self.center().len()
    }

    pub fn center(&self) -> &[Q] {
        match self {
            Domain::Ball { center, .. } | Domain::Box { center, .. } | Domain::Ellipsoid { center, .. } => center,
        }
    }

    pub fn is_origin_centered(&self) -> bool {
        self.center().iter().all(Zero::is_zero)
    }

    /// Positive sizes and consistent lengths.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            Domain::Ball { radius, .. } if !radius.is_positive() => Err("radius must be positive".into()),
            Domain::Box { center, half_widths } => {
                if half_widths.len() != center.len() {
                    Err("half_widths and center differ in length".into())
                } else if half_widths.iter().any(|h| !h.is_positive()) {
                    Err("half widths must be positive".into())
                } else {
                    Ok(())
                }
            }
            Domain::Ellipsoid { center, radius, weights } => {
                if weights.len() != center.len() {
                    Err("weights and center differ in length".into())
                } else if !radius.is_positive() || weights.iter().any(|w| !w.is_positive()) {
                    Err("radius and weights must be positive".into())
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Half-extent along axis `i`, as a float.
    pub fn extent(&self, i: usize) -> f64 {
        match self {
            Domain::Ball { radius, .. } => to_f64(radius),
            Domain::Box { half_widths, .. } => to_f64(&half_widths[i]),
            Domain::Ellipsoid { radius, weights, .. } => to_f64(radius) / to_f64(&weights[i]).sqrt(),
        }
    }

    /// Smallest `R` with the domain inside `[−R, R]ⁿ`.
    pub fn sup_radius(&self) -> f64 {
        (0..self.dim()).map(|i| to_f64(&self.center()[i]).abs() + self.extent(i)).fold(0.0, f64::max)
    }

    /// Exact position of a rational point.
    pub fn position(&self, x: &[Q]) -> Position {
        let c = self.center();
        let cmp = match self {
            Domain::Ball { radius, .. } => {
                let s: Q = x.iter().zip(c).map(|(a, b)| (a - b) * (a - b)).sum();
                s.cmp(&(radius * radius))
            }
            Domain::Ellipsoid { radius, weights, .. } => {
                let s: Q = x.iter().zip(c).zip(weights).map(|((a, b), w)| w * (a - b) * (a - b)).sum();
                s.cmp(&(radius * radius))
            }
            Domain::Box { half_widths, .. } => {
                let mut worst = std::cmp::Ordering::Less;
                for ((a, b), h) in x.iter().zip(c).zip(half_widths) {
                    worst = worst.max((a - b).abs().cmp(h));
                }
                worst
            }
        };
        match cmp {
            std::cmp::Ordering::Less => Position::Inside,
            std::cmp::Ordering::Equal => Position::Boundary,
            std::cmp::Ordering::Greater => Position::Outside,
        }
    }

    /// Signed distance lower bound to the boundary (positive inside).
    pub fn boundary_distance(&self, x: &[f64]) -> f64 {
        let c: Vec<f64> = self.center().iter().map(to_f64).collect();
        match self {
            Domain::Ball { radius, .. } => {
                to_f64(radius) - x.iter().zip(&c).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt()
            }
            Domain::Ellipsoid { radius, weights, .. } => {
                let w: Vec<f64> = weights.iter().map(to_f64).collect();
                let s = x.iter().zip(&c).zip(&w).map(|((a, b), w)| w * (a - b).powi(2)).sum::<f64>().sqrt();
                let wmax = w.iter().cloned().fold(0.0, f64::max);
                (to_f64(radius) - s) / wmax.sqrt()
            }
            Domain::Box { half_widths, .. } => x
                .iter()
                .zip(&c)
                .zip(half_widths)
                .map(|((a, b), h)| to_f64(h) - (a - b).abs())
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// Radial image on the boundary of a nonzero direction `u`.
    pub fn boundary_point(&self, u: &[f64]) -> Vec<f64> {
        let c: Vec<f64> = self.center().iter().map(to_f64).collect();
        match self {
            Domain::Box { .. } => {
                let m = u.iter().fold(0.0f64, |a, b| a.max(b.abs()));
                (0..u.len()).map(|i| c[i] + self.extent(i) * u[i] / m).collect()
            }
            _ => {
                let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt();
                (0..u.len()).map(|i| c[i] + self.extent(i) * u[i] / norm).collect()
            }
        }
    }

    /// Radius of the image of a face cell of half-width `h` under
    /// [`Domain::boundary_point`], which is `max extent`-Lipschitz on faces.
    pub fn face_cell_radius(&self, h: f64) -> f64 {
        let n = self.dim();
        let emax = (0..n).map(|i| self.extent(i)).fold(0.0, f64::max);
        emax * h * ((n.max(2) - 1) as f64).sqrt()
    }

    /// Boundary curve of a planar domain, `s ∈ [0, 1)`.
    pub fn curve_point(&self, s: f64) -> [f64; 2] {
        let c: Vec<f64> = self.center().iter().map(to_f64).collect();
        let (e0, e1) = (self.extent(0), self.extent(1));
        match self {
            Domain::Box { .. } => {
                let perim = 4.0 * (e0 + e1);
                let mut t = s.rem_euclid(1.0) * perim;
                // counterclockwise from the lower-left corner
                let sides = [2.0 * e0, 2.0 * e1, 2.0 * e0, 2.0 * e1];
                let corners = [(-e0, -e1), (e0, -e1), (e0, e1), (-e0, e1)];
                let dirs = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
                for k in 0..4 {
                    if t <= sides[k] || k == 3 {
                        return [c[0] + corners[k].0 + dirs[k].0 * t, c[1] + corners[k].1 + dirs[k].1 * t];
                    }
                    t -= sides[k];
                }
                unreachable!()
            }
            _ => {
                let th = std::f64::consts::TAU * s;
                [c[0] + e0 * th.cos(), c[1] + e1 * th.sin()]
            }
        }
    }

    /// Upper bound on `|dγ/ds|` for [`Domain::curve_point`].
    pub fn curve_speed(&self) -> f64 {
        let (e0, e1) = (self.extent(0), self.extent(1));
        match self {
            Domain::Box { .. } => 4.0 * (e0 + e1),
            _ => std::f64::consts::TAU * e0.max(e1),
        }
    }

    /// The slice `{x_i = 0 : i ∉ keep}` in the kept coordinates; requires a
    /// zero center on the dropped coordinates.
    pub fn slice(&self, keep: &[usize]) -> Option<Domain> {
        let n = self.dim();
        if (0..n).any(|i| !keep.contains(&i) && !self.center()[i].is_zero()) {
            return None;
        }
        let pick = |v: &[Q]| keep.iter().map(|&i| v[i].clone()).collect::<Vec<_>>();
        Some(match self {
            Domain::Ball { center, radius } => Domain::Ball { center: pick(center), radius: radius.clone() },
            Domain::Box { center, half_widths } => Domain::Box { center: pick(center), half_widths: pick(half_widths) },
            Domain::Ellipsoid { center, radius, weights } => {
                Domain::Ellipsoid { center: pick(center), radius: radius.clone(), weights: pick(weights) }
            }
        })
    }

    /// Exact endpoints `c − e ≤ c + e` of a one-dimensional domain when `e`
    /// is rational, otherwise `None` together with `e²`.
    pub fn interval(&self) -> (Option<(Q, Q)>, Q) {
        assert_eq!(self.dim(), 1);
        let c = self.center()[0].clone();
        let e2 = match self {
            Domain::Ball { radius, .. } => radius * radius,
            Domain::Box { half_widths, .. } => &half_widths[0] * &half_widths[0],
            Domain::Ellipsoid { radius, weights, .. } => radius * radius / &weights[0],
        };
        let root = |x: &num_bigint::BigInt| {
            let s = x.sqrt();
            (&s * &s == *x).then_some(s)
        };
        match (root(e2.numer()), root(e2.denom())) {
            (Some(a), Some(b)) => {
                let e = Q::new(a, b);
                (Some((&c - &e, &c + &e)), e2)
            }
            _ => (None, e2),
        }
    }

    pub fn to_json(&self) -> DomainJson {
        let s = |v: &[Q]| v.iter().map(format_q).collect::<Vec<_>>();
        match self {
            Domain::Ball { center, radius } => DomainJson::Ball { center: s(center), radius: format_q(radius) },
            Domain::Box { center, half_widths } => DomainJson::Box { center: s(center), half_widths: s(half_widths) },
            Domain::Ellipsoid { center, radius, weights } => {
                DomainJson::Ellipsoid { center: s(center), radius: format_q(radius), weights: s(weights) }
            }
        }
    }

    pub fn from_json(j: &DomainJson) -> Result<Self, ParseRationalError> {
        let p = |v: &[String]| v.iter().map(|x| parse_q(x)).collect::<Result<Vec<_>, _>>();
        Ok(match j {
            DomainJson::Ball { center, radius } => Domain::Ball { center: p(center)?, radius: parse_q(radius)? },
            DomainJson::Box { center, half_widths } => Domain::Box { center: p(center)?, half_widths: p(half_widths)? },
            DomainJson::Ellipsoid { center, radius, weights } => {
                Domain::Ellipsoid { center: p(center)?, radius: parse_q(radius)?, weights: p(weights)? }
            }
        })
    }

    /// Same domain with every size multiplied by `s`.
    pub fn scaled(&self, s: &Q) -> Domain {
        match self {
            Domain::Ball { center, radius } => Domain::Ball { center: center.clone(), radius: radius * s },
            Domain::Box { center, half_widths } => {
                Domain::Box { center: center.clone(), half_widths: half_widths.iter().map(|h| h * s).collect() }
            }
            Domain::Ellipsoid { center, radius, weights } => {
                Domain::Ellipsoid { center: center.clone(), radius: radius * s, weights: weights.clone() }
            }
        }
    }

    pub fn unit_ball(n: usize) -> Self {
        Self::origin_ball(n, Q::one())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainJson {
    Ball { center: Vec<String>, radius: String },
    Box { center: Vec<String>, half_widths: Vec<String> },
    Ellipsoid { center: Vec<String>, radius: String, weights: Vec<String> },
}
