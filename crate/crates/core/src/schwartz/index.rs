use super::cocycle::{Cocycle, Picture};
use super::operator::CompactPerturbation;
use super::SchwartzError;
use crate::burnside::{membership_check, BurnsideElement, MarksVector, TableOfMarks};
use crate::degree::{brouwer_degree, equivariant_degree, DegreeConfig, DegreeError, Domain, Method};
use crate::group::library;
use crate::matrix::RationalMatrix;
use crate::poly::PolynomialMap;
use crate::rational::{format_q, serde_q, sign, Q};
use crate::univariate::{self, Bound};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Truncations tried before giving up on the span condition.
pub const GALERKIN_CAP: usize = 256;

/// `ξ = span(e₀ … e_{N−1})` and the exact preimage `l⁻¹(ξ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GalerkinData {
    pub n: usize,
    /// Columns span `l⁻¹(ξ)` inside the first `preimage_basis.rows()` coordinates.
    pub preimage_basis: RationalMatrix,
    pub surjectivity: SpanWitness,
}

/// `rank [ξ | l(e₀ … e_{c−1})] = rows` on the first `rows` output
/// coordinates, so `ξ + im l` is everything.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanWitness {
    pub rows: usize,
    pub columns: usize,
    pub rank: usize,
}

impl GalerkinData {
    pub fn preimage_dim(&self) -> usize {
        self.preimage_basis.cols()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "preimage_dim": self.preimage_dim(),
            "preimage_basis": self.preimage_basis.transpose().to_strings(),
            "surjectivity": self.surjectivity,
        })
    }
}

/// Least admissible truncation: the window, both sides of the
/// perturbation and the shifted window fit, and blocks are whole.
pub fn minimal_truncation(c: &Cocycle) -> usize {
    let op = &c.operator;
    let p = &c.perturbation;
    let q = (-op.shift_power()).max(0) as usize;
    let n = 1.max(p.input_dim()).max(p.output_dim()).max(op.window() + q);
    match &c.group {
        Some(g) => g.align_up(n),
        None => n,
    }
}

fn is_admissible(c: &Cocycle, n: usize) -> bool {
    n >= minimal_truncation(c) && c.group.as_ref().is_none_or(|g| g.is_aligned(n))
}

/// Galerkin data at a given truncation.
pub fn galerkin_at(c: &Cocycle, n: usize) -> Result<GalerkinData, SchwartzError> {
    if !is_admissible(c, n) {
        return Err(SchwartzError::TruncationTooSmall { n, minimum: minimal_truncation(c) });
    }
    let op = &c.operator;
    let p = op.shift_power();
    // preimage: coordinates below n + p; beyond them the tail forces zeros
    let dim = (n as i64 + p) as usize;
    let preimage_basis = RationalMatrix::identity(dim);
    let rows = n + 1;
    let cols = dim + 1;
    let l = op.section(rows, cols);
    let mut xi = RationalMatrix::zeros(rows, n);
    for i in 0..n {
        xi[(i, i)] = Q::one();
    }
    let both = RationalMatrix::from_columns(rows, &(0..n).map(|i| xi.column(i)).chain((0..cols).map(|i| l.column(i))).collect::<Vec<_>>());
    let rank = both.rank();
    let surjectivity = SpanWitness { rows, columns: n + cols, rank };
    if rank != rows {
        return Err(SchwartzError::NotSpanned(format!("rank {rank} < {rows} at N = {n}")));
    }
    Ok(GalerkinData { n, preimage_basis, surjectivity })
}

/// The least truncation certifying the span condition.
pub fn galerkin_subspace(c: &Cocycle) -> Result<GalerkinData, SchwartzError> {
    let start = minimal_truncation(c);
    let mut last = None;
    for n in start..start + GALERKIN_CAP {
        if !is_admissible(c, n) {
            continue;
        }
        match galerkin_at(c, n) {
            Ok(g) => return Ok(g),
            Err(e @ SchwartzError::NotSpanned(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| SchwartzError::NotSpanned(format!("no truncation up to {}", start + GALERKIN_CAP))))
}

/// `p_ξ ∘ (l + c)` on `l⁻¹(ξ)`, for index-zero operators where both are `ℝᴺ`.
pub fn reduced_map(c: &Cocycle, n: usize) -> Result<PolynomialMap, SchwartzError> {
    if c.operator.index() != 0 {
        return Err(SchwartzError::UnsupportedIndex(c.operator.index()));
    }
    galerkin_at(c, n)?;
    let lin = PolynomialMap::linear(&c.operator.section(n, n));
    Ok(lin.add(&c.perturbation.padded(n)))
}

/// Reference isomorphism `1 ⊕ tail` whose fixed-point degrees orient
/// the truncations consistently.
fn reference_map(c: &Cocycle, n: usize) -> PolynomialMap {
    let w = c.operator.window().min(n);
    let mut d = Vec::with_capacity(n);
    d.extend((0..w).map(|_| Q::one()));
    d.extend((w..n).map(|j| c.operator.tail_at(j).clone()));
    PolynomialMap::linear(&RationalMatrix::diagonal(&d))
}

/// The index as an element of `A(G)`, or of `A(1) = ℤ` without a group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchwartzIndex {
    pub n: usize,
    pub element: BurnsideElement,
    pub fixed_degrees: MarksVector,
    pub labels: Vec<String>,
    /// The integer index when the group is trivial.
    pub value: Option<i64>,
    #[serde(with = "serde_q")]
    pub radius: Q,
    /// Least boundary margin over the reduced maps that were evaluated.
    #[serde(with = "serde_q")]
    pub admissibility_margin: Q,
    pub method: String,
}

fn lift(e: DegreeError, radius: &Q) -> SchwartzError {
    match e {
        DegreeError::BoundaryZeroSuspected(reason) => SchwartzError::InadmissibleRadius { radius: format_q(radius), reason },
        e => SchwartzError::Degree(e),
    }
}

/// Index at the least admissible truncation.
pub fn schwartz_index(c: &Cocycle, cfg: &DegreeConfig) -> Result<SchwartzIndex, SchwartzError> {
    let g = galerkin_subspace(c)?;
    schwartz_index_at(c, g.n, cfg)
}

pub fn schwartz_index_at(c: &Cocycle, n: usize, cfg: &DegreeConfig) -> Result<SchwartzIndex, SchwartzError> {
    let f = reduced_map(c, n)?;
    let reference = reference_map(c, n);
    let radius = c.index_radius().clone();
    let ball = Domain::origin_ball(n, radius.clone());
    match &c.group {
        None => {
            let r = brouwer_degree(&f, &ball, Method::Auto, cfg).map_err(|e| lift(e, &radius))?;
            let orient: i64 = (0..n).map(|i| sign(&reference.component(i).linear_coefficient(i)) as i64).product();
            let value = r.value * orient * c.orientation as i64;
            let labels = TableOfMarks::new(&library::trivial()).labels();
            Ok(SchwartzIndex {
                n,
                element: BurnsideElement { coefficients: vec![value] },
                fixed_degrees: MarksVector { values: vec![value] },
                labels,
                value: Some(value),
                radius,
                admissibility_margin: r.admissibility_margin,
                method: r.method.name().into(),
            })
        }
        Some(gd) => {
            let rho = gd.rep_on(n);
            let m = TableOfMarks::new(gd.group());
            let e = equivariant_degree(&f, &rho, &ball, &m, cfg).map_err(|e| lift(e, &radius))?;
            let e_ref = equivariant_degree(&reference, &rho, &ball, &m, cfg).map_err(|e| lift(e, &radius))?;
            let values: Vec<i64> = e
                .fixed_degrees
                .values
                .iter()
                .zip(&e_ref.fixed_degrees.values)
                .map(|(a, b)| a * b * c.orientation as i64)
                .collect();
            let marks = MarksVector { values };
            let verdict = membership_check(&m, &marks)?;
            let element = match (verdict.witness, verdict.congruences_hold) {
                (Some(w), true) => w,
                _ => {
                    let class = verdict.congruences.iter().find(|r| r.residue != 0).map_or(0, |r| r.class);
                    return Err(SchwartzError::Degree(DegreeError::NonIntegralSolve { class, fixed_degrees: marks.values }));
                }
            };
            let value = (m.len() == 1).then(|| element.coefficients[0]);
            let margin = e.per_class.iter().map(|r| r.admissibility_margin.clone()).min().unwrap_or_else(Q::one);
            Ok(SchwartzIndex {
                n,
                element,
                fixed_degrees: marks,
                labels: m.labels(),
                value,
                radius,
                admissibility_margin: margin,
                method: "equivariant".into(),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilizationEntry {
    pub n: usize,
    pub element: BurnsideElement,
    pub value: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilizationReport {
    pub entries: Vec<StabilizationEntry>,
    pub consistent: bool,
}

/// Index at every truncation in `n_list`; `consistent` is false as soon as
/// two of them differ.
pub fn stabilization_check(c: &Cocycle, n_list: &[usize], cfg: &DegreeConfig) -> Result<StabilizationReport, SchwartzError> {
    let mut entries = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let r = schwartz_index_at(c, n, cfg)?;
        entries.push(StabilizationEntry { n, element: r.element, value: r.value });
    }
    let consistent = entries.windows(2).all(|w| w[0].element == w[1].element);
    Ok(StabilizationReport { entries, consistent })
}

/// `(−1)^{#(real eigenvalues of K in (1, ∞))}` with multiplicity, the
/// Leray–Schauder degree of `1 − K` at the origin.
pub fn linear_ls_oracle(k: &CompactPerturbation) -> Result<i64, SchwartzError> {
    let m = k
        .linear_matrix()
        .ok_or_else(|| SchwartzError::InvalidPerturbation("the oracle needs a linear core".into()))?;
    if m.rows() == 0 {
        return Ok(1);
    }
    let chi = m.characteristic_polynomial();
    if univariate::eval(&chi, &Q::one()).is_zero() {
        return Err(SchwartzError::EigenvalueOnOne);
    }
    let above = univariate::count_roots_with_multiplicity(&chi, &Bound::Finite(Q::one()), &Bound::PosInf);
    Ok(if above.is_multiple_of(2) { 1 } else { -1 })
}

/// Integer degree of a cocycle with trivial group, read in the disk picture.
pub fn degree_of_cocycle_at_point(c: &Cocycle, cfg: &DegreeConfig) -> Result<i64, SchwartzError> {
    if c.group.as_ref().is_some_and(|g| g.group().order() > 1) {
        return Err(SchwartzError::GroupMismatch("degree at a point needs the trivial group".into()));
    }
    let disk = match c.picture {
        Picture::Boundary => c.clone(),
        Picture::Pointed => super::picture_convert(c, Picture::Boundary, &Default::default(), cfg)?,
    };
    let r = schwartz_index(&disk, cfg)?;
    Ok(r.element.coefficients[0])
}
