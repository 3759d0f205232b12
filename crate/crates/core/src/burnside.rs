//! The Burnside ring `A(G)` of a finite group, computed through its table
//! of marks.

use crate::group::{orbit_decomposition, subgroup_classes, FiniteGroup, Subgroup, SubgroupClassTable, SubgroupEmbedding};
use crate::lattice::{self, IntRow};
use crate::rational::Q;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BurnsideError {
    #[error("DimensionMismatch: expected {expected} coefficients, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("NotASubgroup: {0}")]
    NotASubgroup(String),
    #[error("NonIntegralSolve: marks system has no integral solution at class {class}")]
    NonIntegralSolve { class: usize },
    #[error("CoefficientOverflow: Burnside coefficient exceeds 64 bits")]
    CoefficientOverflow,
}

/// Integer combination `Σ a_j [G/K_j]` over subgroup classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BurnsideElement {
    pub coefficients: Vec<i64>,
}

impl BurnsideElement {
    pub fn zero(k: usize) -> Self {
        BurnsideElement { coefficients: vec![0; k] }
    }

    /// The basis element `[G/K_j]`.
    pub fn basis(k: usize, j: usize) -> Self {
        let mut c = vec![0; k];
        c[j] = 1;
        BurnsideElement { coefficients: c }
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        BurnsideElement { coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, s: i64) -> Self {
        BurnsideElement { coefficients: self.coefficients.iter().map(|a| a * s).collect() }
    }

    fn to_row(&self) -> IntRow {
        self.coefficients.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn from_row(r: &[BigInt]) -> Result<Self, BurnsideError> {
        let coefficients = r.iter().map(|x| x.to_i64().ok_or(BurnsideError::CoefficientOverflow)).collect::<Result<_, _>>()?;
        Ok(BurnsideElement { coefficients })
    }
}

/// Mark values `H ↦ |X^H|` indexed by subgroup classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarksVector {
    pub values: Vec<i64>,
}

/// One explicit congruence: `Σ_K n(H,K)·v(K) ≡ 0 (mod |W_H|)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceResidue {
    pub class: usize,
    pub modulus: i64,
    pub residue: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    /// Verdict of the exact triangular solve.
    pub integral: bool,
    pub witness: Option<BurnsideElement>,
    /// Verdict of the explicit congruence list.
    pub congruences_hold: bool,
    pub congruences: Vec<CongruenceResidue>,
}

/// The marks matrix `m[i][j] = |(G/K_j)^{H_i}|`; upper triangular in the
/// class order, with `m[i][i] = |W_{H_i}|`.
#[derive(Debug, Clone)]
pub struct TableOfMarks {
    group: FiniteGroup,
    classes: SubgroupClassTable,
    marks: Vec<Vec<i64>>,
    /// `n[h][k]`: coefficient of class `k` in the congruence at class `h`.
    congruence: Vec<Vec<i64>>,
}

fn euler_phi(n: usize) -> i64 {
    let mut phi = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi as i64
}

/// Left-coset index table of `k` in `g`: `coset[x]` numbers `x·K`.
fn coset_ids(g: &FiniteGroup, k: &Subgroup) -> (Vec<usize>, Vec<usize>) {
    let n = g.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] != usize::MAX {
            continue;
        }
        for &m in k.members() {
            coset[g.mul(x, m)] = reps.len();
        }
        reps.push(x);
    }
    (coset, reps)
}

/// Builds the marks matrix by counting fixed cosets directly.
pub fn table_of_marks(g: &FiniteGroup, t: &SubgroupClassTable) -> TableOfMarks {
    let k = t.len();
    let mut marks = vec![vec![0i64; k]; k];
    for j in 0..k {
        let (coset, reps) = coset_ids(g, t.representative(j));
        for i in 0..k {
            let h = t.representative(i);
            marks[i][j] = reps
                .iter()
                .filter(|&&x| h.members().iter().all(|&y| coset[g.mul(y, x)] == coset[x]))
                .count() as i64;
        }
    }
    let congruence = congruence_coefficients(g, t);
    TableOfMarks { group: g.clone(), classes: t.clone(), marks, congruence }
}

/// For each class `H`, sums `|Gen(K/H)|` over all subgroups `K` with
/// `H ⊴ K` and `K/H` cyclic, grouped by the class of `K`. Grouping the
/// subgroups `K` of one class into `W_H`-orbits gives the orbit-size factor
/// `|W_H : N_{W_H}(K/H)|`.
fn congruence_coefficients(g: &FiniteGroup, t: &SubgroupClassTable) -> Vec<Vec<i64>> {
    let k = t.len();
    let mut n = vec![vec![0i64; k]; k];
    for (hi, row) in n.iter_mut().enumerate() {
        let h = t.representative(hi);
        let norm = g.normalizer(h).expect("representative is a subgroup");
        for kj in 0..k {
            if !t.class(kj).order().is_multiple_of(h.order()) {
                continue;
            }
            for kk in t.class(kj).conjugates() {
                if !h.is_subset(&kk) || !kk.is_subset(&norm) {
                    continue;
                }
                let index = kk.order() / h.order();
                let cyclic = kk.members().iter().any(|&x| quotient_order(g, h, x) == index);
                if cyclic {
                    row[kj] += euler_phi(index);
                }
            }
        }
    }
    n
}

/// Order of `x·H` in `N(H)/H`.
fn quotient_order(g: &FiniteGroup, h: &Subgroup, x: usize) -> usize {
    let mut y = x;
    let mut k = 1;
    while !h.contains(y) {
        y = g.mul(x, y);
        k += 1;
    }
    k
}

impl TableOfMarks {
    pub fn new(g: &FiniteGroup) -> Self {
        table_of_marks(g, &subgroup_classes(g))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &SubgroupClassTable {
        &self.classes
    }

    pub fn marks(&self) -> &[Vec<i64>] {
        &self.marks
    }

    pub fn congruence_coefficients(&self) -> &[Vec<i64>] {
        &self.congruence
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    /// `[G/G]`, the multiplicative unit.
    pub fn one(&self) -> BurnsideElement {
        BurnsideElement::basis(self.len(), self.len() - 1)
    }

    pub fn basis(&self, j: usize) -> BurnsideElement {
        BurnsideElement::basis(self.len(), j)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.classes.label(i)).collect()
    }

    fn check_len(&self, n: usize) -> Result<(), BurnsideError> {
        if n != self.len() {
            return Err(BurnsideError::DimensionMismatch { expected: self.len(), found: n });
        }
        Ok(())
    }

    /// Back substitution for `marks · a = v`; `Err(class)` at the first
    /// class where the quotient is not an integer.
    fn solve_integral(&self, v: &[i64]) -> Result<Vec<i64>, usize> {
        let k = self.len();
        let mut a = vec![0i64; k];
        for i in (0..k).rev() {
            let rest: i128 = (i + 1..k).map(|j| self.marks[i][j] as i128 * a[j] as i128).sum();
            let num = v[i] as i128 - rest;
            let d = self.marks[i][i] as i128;
            if num % d != 0 {
                return Err(i);
            }
            a[i] = i64::try_from(num / d).map_err(|_| i)?;
        }
        Ok(a)
    }

    /// Exact rational solution of `marks · a = v`.
    pub fn solve_rational(&self, v: &[Q]) -> Vec<Q> {
        let k = self.len();
        let mut a = vec![Q::zero(); k];
        for i in (0..k).rev() {
            let mut num = v[i].clone();
            for j in i + 1..k {
                num -= Q::from_integer(self.marks[i][j].into()) * &a[j];
            }
            a[i] = num / Q::from_integer(self.marks[i][i].into());
        }
        a
    }

    /// Recovers the element with the given marks (runtime integrality check).
    pub fn from_marks(&self, v: &MarksVector) -> Result<BurnsideElement, BurnsideError> {
        self.check_len(v.values.len())?;
        self.solve_integral(&v.values)
            .map(|coefficients| BurnsideElement { coefficients })
            .map_err(|class| BurnsideError::NonIntegralSolve { class })
    }

    /// Residue of each explicit congruence on `v`.
    pub fn congruence_residues(&self, v: &MarksVector) -> Vec<CongruenceResidue> {
        (0..self.len())
            .map(|h| {
                let modulus = self.classes.class(h).weyl_order as i64;
                let s: i128 = self.congruence[h].iter().zip(&v.values).map(|(&n, &x)| n as i128 * x as i128).sum();
                CongruenceResidue { class: h, modulus, residue: s.rem_euclid(modulus as i128) as i64 }
            })
            .collect()
    }
}

/// `H ↦ Σ_j a_j · m[H][j]`.
pub fn char(m: &TableOfMarks, a: &BurnsideElement) -> Result<MarksVector, BurnsideError> {
    m.check_len(a.len())?;
    let values = m.marks.iter().map(|row| row.iter().zip(&a.coefficients).map(|(x, c)| x * c).sum()).collect();
    Ok(MarksVector { values })
}

/// Ring product, via pointwise multiplication of marks.
pub fn mul(m: &TableOfMarks, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
    let ca = char(m, a)?;
    let cb = char(m, b)?;
    let values = ca.values.iter().zip(&cb.values).map(|(x, y)| x * y).collect();
    m.from_marks(&MarksVector { values })
}

/// Decides whether `v` is the mark vector of an element of `A(G)`, by
/// integrality of the triangular solve and independently by the explicit
/// congruences.
pub fn membership_check(m: &TableOfMarks, v: &MarksVector) -> Result<Membership, BurnsideError> {
    m.check_len(v.values.len())?;
    let witness = m.solve_integral(&v.values).ok().map(|coefficients| BurnsideElement { coefficients });
    let congruences = m.congruence_residues(v);
    let congruences_hold = congruences.iter().all(|c| c.residue == 0);
    Ok(Membership { integral: witness.is_some(), witness, congruences_hold, congruences })
}

/// A subgroup `H ≤ G` with its own table of marks.
#[derive(Debug, Clone)]
pub struct SubgroupRing {
    pub embedding: SubgroupEmbedding,
    pub marks: TableOfMarks,
}

impl TableOfMarks {
    pub fn subgroup_ring(&self, h: &Subgroup) -> Result<SubgroupRing, BurnsideError> {
        let embedding = self.group.embed(h).map_err(|e| BurnsideError::NotASubgroup(e.to_string()))?;
        let marks = table_of_marks(&embedding.group, &embedding.table);
        Ok(SubgroupRing { embedding, marks })
    }
}

/// `res[G/K] = Σ_{H-orbits of G/K} [H/stabilizer]`.
pub fn restriction(mg: &TableOfMarks, h: &SubgroupRing, a: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
    mg.check_len(a.len())?;
    let mut out = BurnsideElement::zero(h.marks.len());
    for (j, &c) in a.coefficients.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let orbits = orbit_decomposition(&mg.group, &h.embedding, mg.classes.representative(j))
            .map_err(|e| BurnsideError::NotASubgroup(e.to_string()))?;
        for (cls, mult) in orbits {
            out.coefficients[cls] += c * mult as i64;
        }
    }
    Ok(out)
}

/// `ind[H/K] = [G/K]`.
pub fn induction(mg: &TableOfMarks, h: &SubgroupRing, b: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
    h.marks.check_len(b.len())?;
    let mut out = BurnsideElement::zero(mg.len());
    for (j, &c) in b.coefficients.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let k = h.embedding.lift(h.marks.classes.representative(j));
        let cls = mg.classes.class_of(&k).expect("subgroup of H is a subgroup of G");
        out.coefficients[cls] += c;
    }
    Ok(out)
}

/// An ideal of `A(G)` as an integer lattice in Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealBasis {
    pub generators: Vec<BurnsideElement>,
    pub power: u32,
}

impl IdealBasis {
    pub fn rows(&self) -> Vec<IntRow> {
        self.generators.iter().map(BurnsideElement::to_row).collect()
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Lattice containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &IdealBasis) -> bool {
        lattice::sublattice(&self.rows(), &other.rows())
    }

    pub fn same_lattice(&self, other: &IdealBasis) -> bool {
        lattice::lattice_eq(&self.rows(), &other.rows())
    }
}

fn ideal_from_rows(rows: &[IntRow], power: u32) -> Result<IdealBasis, BurnsideError> {
    let generators = lattice::hermite_normal_form(rows)
        .iter()
        .map(|r| BurnsideElement::from_row(r))
        .collect::<Result<_, _>>()?;
    Ok(IdealBasis { generators, power })
}

/// Kernel of the mark at the trivial subgroup, i.e. of restriction to `{e}`.
pub fn augmentation_ideal(m: &TableOfMarks) -> IdealBasis {
    let row: IntRow = m.marks[0].iter().map(|&x| BigInt::from(x)).collect();
    ideal_from_rows(&lattice::integer_kernel(&[row], m.len()), 1).expect("kernel entries fit in 64 bits")
}

/// Lattice spanned by all `n`-fold products of generators of `b`.
pub fn ideal_power(m: &TableOfMarks, b: &IdealBasis, n: u32) -> Result<IdealBasis, BurnsideError> {
    assert!(n >= 1, "ideal power must be at least 1");
    let base = ideal_from_rows(&b.rows(), 1)?;
    let mut cur = base.clone();
    for p in 2..=n {
        let mut rows = Vec::new();
        for x in &cur.generators {
            for y in &base.generators {
                rows.push(mul(m, x, y)?.to_row());
            }
        }
        cur = ideal_from_rows(&rows, p)?;
    }
    cur.power = n * b.power;
    Ok(cur)
}

/// Abelian invariants of `A(G)/I`: free rank and torsion orders (> 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientInvariants {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl QuotientInvariants {
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = vec!["Z".to_string(); self.free_rank];
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

pub fn quotient_invariants(m: &TableOfMarks, ideal: &IdealBasis) -> QuotientInvariants {
    let inv = lattice::smith_invariants(&ideal.rows());
    let torsion = inv.iter().filter(|d| !d.is_one()).map(|d| d.to_i64().expect("torsion order fits in 64 bits")).collect();
    QuotientInvariants { free_rank: m.len() - inv.len(), torsion }
}

/// Primitive idempotents of `A(G) ⊗ ℚ`: `char(e_H)` is the indicator of `(H)`.
pub fn rational_idempotents(m: &TableOfMarks) -> Vec<Vec<Q>> {
    let k = m.len();
    (0..k)
        .map(|i| {
            let delta: Vec<Q> = (0..k).map(|j| if i == j { Q::one() } else { Q::zero() }).collect();
            m.solve_rational(&delta)
        })
        .collect()
}

/// Marks of a rational combination.
pub fn char_rational(m: &TableOfMarks, a: &[Q]) -> Vec<Q> {
    m.marks.iter().map(|row| row.iter().zip(a).map(|(&x, c)| Q::from_integer(x.into()) * c).sum()).collect()
}

/// Product of rational combinations via marks.
pub fn mul_rational(m: &TableOfMarks, a: &[Q], b: &[Q]) -> Vec<Q> {
    let ca = char_rational(m, a);
    let cb = char_rational(m, b);
    let prod: Vec<Q> = ca.iter().zip(&cb).map(|(x, y)| x * y).collect();
    m.solve_rational(&prod)
}
