//! Brouwer degree of polynomial maps on bounded domains and the
//! equivariant degree with values in the Burnside ring.

mod boundary;
mod domain;
mod equivariant;
mod exact;
mod zeros;

pub use boundary::{certify_boundary, lipschitz_bound, winding_number, BoundaryCertificate};
pub use domain::{Domain, DomainJson, Position};
pub use equivariant::{equivariant_degree, fixed_point_degree, orthogonal_basis, EquivariantDegree};
pub use exact::{eliminate_decoupled, endpoint_degree, linear_degree, Elimination};
pub use zeros::{locate_zeros, ZeroRecord};

pub use crate::schwartz::degree_of_cocycle_at_point;

use crate::burnside::BurnsideError;
use crate::poly::PolynomialMap;
use crate::rational::{rational_below, serde_q, Q};
use crate::rep::RepError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DegreeError {
    #[error("BoundaryZeroSuspected: {0}")]
    BoundaryZeroSuspected(String),
    #[error("DegenerateZero: |det J| = {det:e} at {point:?}")]
    DegenerateZero { point: Vec<f64>, det: f64 },
    #[error("UnsupportedDimension: method {method} needs dimension {needed}, map has dimension {found}")]
    UnsupportedDimension { method: &'static str, needed: usize, found: usize },
    #[error("MethodDisagreement: zero count {zero_count} but winding number {winding}")]
    MethodDisagreement { zero_count: i64, winding: i64 },
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("InvalidDomain: {0}")]
    InvalidDomain(String),
    #[error("NotEquivariant: the map does not commute with the representation")]
    NotEquivariant,
    #[error("NonIntegralSolve: fixed-point degrees {fixed_degrees:?} are not the marks of an integral element (class {class})")]
    NonIntegralSolve { class: usize, fixed_degrees: Vec<i64> },
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
}

impl DegreeError {
    /// Whether the failure is a certification failure rather than bad input.
    pub fn is_certification_failure(&self) -> bool {
        matches!(
            self,
            DegreeError::BoundaryZeroSuspected(_)
                | DegreeError::DegenerateZero { .. }
                | DegreeError::MethodDisagreement { .. }
                | DegreeError::NonIntegralSolve { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeConfig {
    /// Newton seeds per axis.
    pub grid: usize,
    /// Total seed budget; the per-axis count shrinks in high dimension.
    pub max_seeds: usize,
    pub tol_residual: f64,
    pub cluster_radius: f64,
    pub tol_jacobian: f64,
    pub max_newton: usize,
    /// Budget of boundary evaluations during certification.
    pub max_boundary_samples: usize,
}

impl Default for DegreeConfig {
    fn default() -> Self {
        DegreeConfig {
            grid: 32,
            max_seeds: 40_000,
            tol_residual: 1e-12,
            cluster_radius: 1e-6,
            tol_jacobian: 1e-8,
            max_newton: 60,
            max_boundary_samples: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Auto,
    ZeroCount,
    Winding,
    /// Exact solve for affine maps.
    Linear,
    /// Exact endpoint signs in dimension one.
    Endpoint,
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Method::Auto),
            "zero-count" | "zero_count" => Ok(Method::ZeroCount),
            "winding" => Ok(Method::Winding),
            "linear" => Ok(Method::Linear),
            "endpoint" => Ok(Method::Endpoint),
            _ => Err(format!("unknown degree method {s:?}")),
        }
    }
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::ZeroCount => "zero-count",
            Method::Winding => "winding",
            Method::Linear => "linear",
            Method::Endpoint => "endpoint",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    ZeroCount { zeros: Vec<ZeroRecord>, boundary_samples: usize },
    Winding { boundary_samples: usize, total_angle: f64 },
    Linear { determinant: String, zero_position: Option<String> },
    Endpoint { left_sign: i32, right_sign: i32 },
    /// Zero-dimensional space: degree read from `f(0)`.
    Point { origin_is_zero: bool },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeResult {
    pub value: i64,
    pub method: Method,
    pub certificate: Certificate,
    /// Lower bound for `|f|` on the boundary of the domain on which the
    /// degree was finally evaluated (after eliminating decoupled linear
    /// coordinates).
    #[serde(with = "serde_q")]
    pub admissibility_margin: Q,
    /// Coordinates removed by decoupled-linear elimination.
    pub eliminated: usize,
    /// Second method run for cross-validation, with its value.
    pub cross_check: Option<(Method, i64)>,
}

fn check_dims(f: &PolynomialMap, d: &Domain) -> Result<(), DegreeError> {
    d.validate().map_err(DegreeError::InvalidDomain)?;
    if f.nvars() != f.ncomponents() || f.nvars() != d.dim() {
        return Err(DegreeError::DimensionMismatch(format!(
            "map {}→{} on a domain of dimension {}",
            f.nvars(),
            f.ncomponents(),
            d.dim()
        )));
    }
    Ok(())
}

/// On ℝ⁰ the only point is a zero, so the induced map of `S⁰` is the identity.
fn point_degree() -> DegreeResult {
    DegreeResult {
        value: 1,
        method: Method::Auto,
        certificate: Certificate::Point { origin_is_zero: true },
        admissibility_margin: Q::from_integer(1.into()),
        eliminated: 0,
        cross_check: None,
    }
}

/// Degree of `f` on `d`. `Auto` first removes decoupled linear
/// coordinates, then uses the exact affine or endpoint rule when it
/// applies; in the plane it runs both zero counting and winding and
/// insists they agree.
pub fn brouwer_degree(
    f: &PolynomialMap,
    d: &Domain,
    method: Method,
    cfg: &DegreeConfig,
) -> Result<DegreeResult, DegreeError> {
    check_dims(f, d)?;
    if d.dim() == 0 {
        return Ok(point_degree());
    }
    match method {
        Method::Auto => auto_degree(f, d, cfg),
        Method::Linear => {
            if !f.is_affine() {
                return Err(DegreeError::DimensionMismatch("linear method needs an affine map".into()));
            }
            linear_degree(f, d).and_then(|r| r.ok_or_else(fallback_needed))
        }
        Method::Endpoint => {
            if d.dim() != 1 {
                return Err(DegreeError::UnsupportedDimension { method: "endpoint", needed: 1, found: d.dim() });
            }
            endpoint_degree(f, d)
        }
        Method::Winding => {
            if d.dim() != 2 {
                return Err(DegreeError::UnsupportedDimension { method: "winding", needed: 2, found: d.dim() });
            }
            winding_result(f, d, cfg)
        }
        Method::ZeroCount => zero_count_result(f, d, cfg),
    }
}

fn fallback_needed() -> DegreeError {
    DegreeError::BoundaryZeroSuspected("affine zero set meets the domain without isolated zeros".into())
}

fn auto_degree(f: &PolynomialMap, d: &Domain, cfg: &DegreeConfig) -> Result<DegreeResult, DegreeError> {
    let el = eliminate_decoupled(f, d);
    let (g, dom) = (&el.map, &el.domain);
    let mut result = if dom.dim() == 0 {
        point_degree()
    } else if let Some(r) = g.is_affine().then(|| linear_degree(g, dom)).transpose()?.flatten() {
        r
    } else if dom.dim() == 1 {
        endpoint_degree(g, dom)?
    } else if dom.dim() == 2 {
        let w = winding_result(g, dom, cfg)?;
        match zero_count_result(g, dom, cfg) {
            Ok(zc) if zc.value != w.value => {
                return Err(DegreeError::MethodDisagreement { zero_count: zc.value, winding: w.value });
            }
            Ok(zc) => DegreeResult { cross_check: Some((Method::Winding, w.value)), ..zc },
            // a multiple zero leaves the winding number as the only certified value
            Err(DegreeError::DegenerateZero { .. }) => w,
            Err(e) => return Err(e),
        }
    } else {
        zero_count_result(g, dom, cfg)?
    };
    result.value *= el.sign as i64;
    result.eliminated = el.removed;
    if result.method == Method::Auto {
        result.method = Method::Linear;
    }
    Ok(result)
}

fn winding_result(f: &PolynomialMap, d: &Domain, cfg: &DegreeConfig) -> Result<DegreeResult, DegreeError> {
    let w = winding_number(f, d, cfg)?;
    Ok(DegreeResult {
        value: w.value,
        method: Method::Winding,
        certificate: Certificate::Winding { boundary_samples: w.samples, total_angle: w.total_angle },
        admissibility_margin: rational_below(w.margin),
        eliminated: 0,
        cross_check: None,
    })
}

fn zero_count_result(f: &PolynomialMap, d: &Domain, cfg: &DegreeConfig) -> Result<DegreeResult, DegreeError> {
    let (margin, samples) = if d.dim() == 1 {
        let e = endpoint_degree(f, d)?;
        (e.admissibility_margin, 2)
    } else {
        let c = certify_boundary(f, d, cfg)?;
        (rational_below(c.margin), c.samples)
    };
    let zeros = locate_zeros(f, d, cfg)?;
    let value = zeros.iter().map(|z| z.sign as i64).sum();
    Ok(DegreeResult {
        value,
        method: Method::ZeroCount,
        certificate: Certificate::ZeroCount { zeros, boundary_samples: samples },
        admissibility_margin: margin,
        eliminated: 0,
        cross_check: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::library;
    use crate::matrix::RationalMatrix;
    use crate::poly::Polynomial;
    use crate::burnside::TableOfMarks;
    use crate::rational::{q, q_frac};
    use crate::rep::OrthogonalRep;

    fn cubic() -> PolynomialMap {
        PolynomialMap::new(1, vec![Polynomial::from_terms(1, [(vec![3], q(1)), (vec![1], q(-1))])]).unwrap()
    }

    fn square_z() -> PolynomialMap {
        let re = Polynomial::from_terms(2, [(vec![2, 0], q(1)), (vec![0, 2], q(-1))]);
        let im = Polynomial::from_terms(2, [(vec![1, 1], q(2))]);
        PolynomialMap::new(2, vec![re, im]).unwrap()
    }

    #[test]
    fn identity_and_negation() {
        let cfg = DegreeConfig::default();
        for n in 1..=5 {
            let d = Domain::unit_ball(n);
            assert_eq!(brouwer_degree(&PolynomialMap::identity(n), &d, Method::Auto, &cfg).unwrap().value, 1);
            let neg = PolynomialMap::identity(n).neg();
            let want = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(brouwer_degree(&neg, &d, Method::Auto, &cfg).unwrap().value, want);
        }
    }

    #[test]
    fn square_map_has_degree_two() {
        let cfg = DegreeConfig::default();
        let d = Domain::unit_ball(2);
        assert_eq!(brouwer_degree(&square_z(), &d, Method::Auto, &cfg).unwrap().value, 2);
        let r = brouwer_degree(&square_z(), &d, Method::ZeroCount, &cfg);
        assert!(matches!(r, Err(DegreeError::DegenerateZero { .. })));
        assert_eq!(brouwer_degree(&square_z(), &d, Method::Winding, &cfg).unwrap().value, 2);
        // shifting the target splits the zero into two simple zeros
        let shifted = square_z().add(&PolynomialMap::new(2, vec![Polynomial::constant(2, q_frac(-1, 10)), Polynomial::zero(2)]).unwrap());
        let r = brouwer_degree(&shifted, &d, Method::Auto, &cfg).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.cross_check, Some((Method::Winding, 2)));
    }

    #[test]
    fn cubic_on_interval() {
        let cfg = DegreeConfig::default();
        let d = Domain::origin_ball(1, q(2));
        for m in [Method::Auto, Method::ZeroCount, Method::Endpoint] {
            assert_eq!(brouwer_degree(&cubic(), &d, m, &cfg).unwrap().value, 1);
        }
        let r = brouwer_degree(&cubic(), &Domain::origin_ball(1, q(1)), Method::Auto, &cfg);
        assert!(matches!(r, Err(DegreeError::BoundaryZeroSuspected(_))));
    }

    #[test]
    fn elimination_sign_matches_linear_oracle() {
        let cfg = DegreeConfig::default();
        // (y, x) on ℝ² has determinant −1
        let swap = PolynomialMap::linear(&RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]));
        let d = Domain::unit_ball(2);
        let el = eliminate_decoupled(&swap, &d);
        assert_eq!(el.removed, 2);
        assert_eq!(el.sign, -1);
        assert_eq!(linear_degree(&swap, &d).unwrap().unwrap().value, -1);
        // (x³ − x, −z, y): g on the first coordinate, a rotation block on the others
        let c = cubic().component(0).remap_vars(3, |_| 0);
        let f = PolynomialMap::new(
            3,
            vec![c, Polynomial::var(3, 2).neg(), Polynomial::var(3, 1)],
        )
        .unwrap();
        let d3 = Domain::origin_ball(3, q(2));
        let r = brouwer_degree(&f, &d3, Method::Auto, &cfg).unwrap();
        assert_eq!(r.eliminated, 2);
        assert_eq!(r.value, 1);
        assert_eq!(brouwer_degree(&f, &d3, Method::ZeroCount, &cfg).unwrap().value, 1);
        // (y, x³ − x) swaps a component with a variable block: sign −1
        let f = PolynomialMap::new(2, vec![Polynomial::var(2, 1), cubic().component(0).remap_vars(2, |_| 0)]).unwrap();
        let d2 = Domain::origin_ball(2, q(2));
        let a = brouwer_degree(&f, &d2, Method::Auto, &cfg).unwrap().value;
        let b = brouwer_degree(&f, &d2, Method::ZeroCount, &cfg).unwrap().value;
        assert_eq!((a, b), (-1, -1));
    }

    #[test]
    fn equivariant_cubic_on_sign_rep() {
        let cfg = DegreeConfig::default();
        let g = library::cyclic(2);
        let rho = OrthogonalRep::sign(g.clone(), 1);
        let m = TableOfMarks::new(&g);
        let d = Domain::origin_ball(1, q(2));
        let e = equivariant_degree(&cubic(), &rho, &d, &m, &cfg).unwrap();
        assert_eq!(e.fixed_degrees.values, vec![1, 1]);
        assert_eq!(e.element.coefficients, vec![0, 1]);
        let x3 = PolynomialMap::new(1, vec![Polynomial::from_terms(1, [(vec![3], q(1))])]).unwrap();
        let e = equivariant_degree(&x3, &rho, &d, &m, &cfg).unwrap();
        assert_eq!(e.element.coefficients, vec![0, 1]);
    }

    #[test]
    fn equivariant_identity_is_the_unit() {
        let cfg = DegreeConfig::default();
        for g in [library::cyclic(3), library::symmetric(3), library::klein_four()] {
            let rho = OrthogonalRep::permutation(g.clone());
            let m = TableOfMarks::new(&g);
            let d = Domain::unit_ball(rho.dimension());
            let e = equivariant_degree(&PolynomialMap::identity(rho.dimension()), &rho, &d, &m, &cfg).unwrap();
            assert_eq!(e.element, m.one());
        }
    }

    #[test]
    fn non_equivariant_map_is_rejected() {
        let g = library::cyclic(2);
        let rho = OrthogonalRep::sign(g.clone(), 1);
        let f = PolynomialMap::new(1, vec![Polynomial::from_terms(1, [(vec![2], q(1)), (vec![0], q(-1))])]).unwrap();
        let r = equivariant_degree(&f, &rho, &Domain::origin_ball(1, q(2)), &TableOfMarks::new(&g), &DegreeConfig::default());
        assert_eq!(r.unwrap_err(), DegreeError::NotEquivariant);
    }
}
