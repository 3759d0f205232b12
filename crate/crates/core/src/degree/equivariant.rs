use super::{brouwer_degree, DegreeConfig, DegreeError, DegreeResult, Domain, Method};
use crate::burnside::{membership_check, BurnsideElement, MarksVector, TableOfMarks};
use crate::poly::PolynomialMap;
use crate::rep::{check_equivariance, fixed_subspace, restrict_map, FixedSubspace, OrthogonalRep};
use crate::rational::Q;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Degree in `A(G)` together with the fixed-point degrees it was solved from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivariantDegree {
    pub element: BurnsideElement,
    pub fixed_degrees: MarksVector,
    pub labels: Vec<String>,
    /// Dimension of `V^H` per class.
    pub fixed_dimensions: Vec<usize>,
    pub per_class: Vec<DegreeResult>,
}

/// Rational Gram–Schmidt without normalization; the result spans the same
/// space and is pairwise orthogonal.
pub fn orthogonal_basis(basis: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let dot = |a: &[Q], b: &[Q]| -> Q { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let mut out: Vec<Vec<Q>> = Vec::with_capacity(basis.len());
    for v in basis {
        let mut w = v.clone();
        for u in &out {
            let c = dot(v, u) / dot(u, u);
            for (wi, ui) in w.iter_mut().zip(u) {
                *wi -= &c * ui;
            }
        }
        if w.iter().any(|x| !x.is_zero()) {
            out.push(w);
        }
    }
    out
}

/// The ball of radius `r` intersected with `span(basis)`, in the coordinates
/// of the pairwise orthogonal `basis`.
fn slice_domain(basis: &[Vec<Q>], radius: &Q) -> Domain {
    let n = basis.len();
    let weights: Vec<Q> = basis.iter().map(|b| b.iter().map(|x| x * x).sum()).collect();
    let center = vec![Q::zero(); n];
    if weights.iter().all(|w| w.is_one()) {
        Domain::Ball { center, radius: radius.clone() }
    } else {
        Domain::Ellipsoid { center, radius: radius.clone(), weights }
    }
}

/// Degree of `f` restricted to `V^H` on the ball slice.
pub fn fixed_point_degree(
    f: &PolynomialMap,
    rho: &OrthogonalRep,
    h: &crate::group::Subgroup,
    radius: &Q,
    cfg: &DegreeConfig,
) -> Result<(usize, DegreeResult), DegreeError> {
    let fixed = fixed_subspace(rho, h)?;
    let basis = orthogonal_basis(&fixed.basis);
    let sub = FixedSubspace { ambient: fixed.ambient, basis, class_index: fixed.class_index };
    let g = restrict_map(f, &sub)?;
    let dom = slice_domain(&sub.basis, radius);
    let r = brouwer_degree(&g, &dom, Method::Auto, cfg)?;
    Ok((sub.dim(), r))
}

/// Element of `A(G)` whose marks are the degrees of `f` on the fixed
/// subspaces `V^H`, one per class.
pub fn equivariant_degree(
    f: &PolynomialMap,
    rho: &OrthogonalRep,
    d: &Domain,
    m: &TableOfMarks,
    cfg: &DegreeConfig,
) -> Result<EquivariantDegree, DegreeError> {
    let Domain::Ball { radius, .. } = d else {
        return Err(DegreeError::InvalidDomain("the equivariant degree needs a ball".into()));
    };
    if !d.is_origin_centered() {
        return Err(DegreeError::InvalidDomain("the ball must be centered at the origin".into()));
    }
    d.validate().map_err(DegreeError::InvalidDomain)?;
    if d.dim() != rho.dimension() {
        return Err(DegreeError::DimensionMismatch(format!(
            "ball of dimension {} for a representation of dimension {}",
            d.dim(),
            rho.dimension()
        )));
    }
    if m.group().order() != rho.group().order() {
        return Err(DegreeError::DimensionMismatch("table of marks belongs to another group".into()));
    }
    if !check_equivariance(f, rho)? {
        return Err(DegreeError::NotEquivariant);
    }
    let mut values = Vec::with_capacity(m.len());
    let mut dims = Vec::with_capacity(m.len());
    let mut per_class = Vec::with_capacity(m.len());
    for class in m.classes().classes() {
        let (dim, r) = fixed_point_degree(f, rho, &class.representative, radius, cfg)?;
        values.push(r.value);
        dims.push(dim);
        per_class.push(r);
    }
    let fixed_degrees = MarksVector { values };
    let verdict = membership_check(m, &fixed_degrees)?;
    let element = match (verdict.witness, verdict.congruences_hold) {
        (Some(w), true) => w,
        _ => {
            let class = verdict
                .congruences
                .iter()
                .find(|c| c.residue != 0)
                .map(|c| c.class)
                .unwrap_or_default();
            return Err(DegreeError::NonIntegralSolve { class, fixed_degrees: fixed_degrees.values });
        }
    };
    Ok(EquivariantDegree { element, fixed_degrees, labels: m.labels(), fixed_dimensions: dims, per_class })
}
