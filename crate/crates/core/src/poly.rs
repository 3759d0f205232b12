//! Multivariate polynomials with rational coefficients and polynomial maps.

use crate::matrix::RationalMatrix;
use crate::rational::{format_q, parse_q, to_f64, ParseRationalError, Q};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

pub const DEFAULT_DEGREE_CAP: u32 = 8;

/// Canonical sparse polynomial: exponent vectors map to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Q::one());
        p
    }

    /// Linear form `Σ coeffs[i]·x_i`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> Q {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient of `x_i` (degree-one monomial).
    pub fn linear_coefficient(&self, i: usize) -> Q {
        let mut e = vec![0; self.nvars];
        e[i] = 1;
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    pub fn is_homogeneous_linear(&self) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == 1)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut p = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Q::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            p.add_term(d, c * Q::from_integer(e[i].into()));
        }
        p
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        assert_eq!(x.len(), self.nvars);
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(xi.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                to_f64(c) * x.iter().zip(e).filter(|(_, &k)| k > 0).map(|(v, &k)| v.powi(k as i32)).product::<f64>()
            })
            .sum()
    }

    /// Replaces variable `i` by `subs[i]`; every entry of `subs` shares one
    /// variable count, which becomes the result's.
    pub fn substitute(&self, subs: &[Polynomial]) -> Self {
        assert_eq!(subs.len(), self.nvars);
        let m = subs.first().map_or(0, |p| p.nvars);
        let mut out = Self::zero(m);
        let mut cache: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut t = Self::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = cache.entry((i, k)).or_insert_with(|| subs[i].pow(k)).clone();
                t = t.mul(&pw);
            }
            out = out.add(&t);
        }
        out
    }

    /// Reindexes variables into a space of `nvars` variables.
    pub fn remap_vars(&self, nvars: usize, map: impl Fn(usize) -> usize) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    ne[map(i)] += k;
                }
            }
            p.add_term(ne, c.clone());
        }
        p
    }

    /// `Σ |c|` over all terms.
    pub fn l1_norm(&self) -> f64 {
        self.terms.values().map(|c| to_f64(&c.abs())).sum()
    }

    /// Upper bound on `|∇p|` over `|x|∞ ≤ r`: `Σ |c|·deg·r^(deg−1)`.
    pub fn gradient_bound(&self, r: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let d: u32 = e.iter().sum();
                if d == 0 {
                    0.0
                } else {
                    to_f64(&c.abs()) * d as f64 * r.powi(d as i32 - 1)
                }
            })
            .sum()
    }

    /// Univariate coefficient list (lowest degree first); one variable only.
    pub fn univariate_coefficients(&self) -> Vec<Q> {
        assert_eq!(self.nvars, 1);
        let d = self.total_degree() as usize;
        let mut v = vec![Q::zero(); d + 1];
        for (e, c) in &self.terms {
            v[e[0] as usize] = c.clone();
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("DegreeCapExceeded: total degree {degree} exceeds cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
    #[error("ParseError: {0}")]
    Parse(#[from] ParseRationalError),
}

/// A polynomial map `ℚᵐ → ℚᵏ`; square maps (`m = k`) are self-maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolynomialMap {
    nvars: usize,
    components: Vec<Polynomial>,
}

impl PolynomialMap {
    pub fn new(nvars: usize, components: Vec<Polynomial>) -> Result<Self, PolyError> {
        if let Some(p) = components.iter().find(|p| p.nvars != nvars) {
            return Err(PolyError::DimensionMismatch(format!(
                "component in {} variables, map declared in {nvars}",
                p.nvars
            )));
        }
        Ok(PolynomialMap { nvars, components })
    }

    pub fn identity(n: usize) -> Self {
        PolynomialMap { nvars: n, components: (0..n).map(|i| Polynomial::var(n, i)).collect() }
    }

    pub fn linear(m: &RationalMatrix) -> Self {
        PolynomialMap { nvars: m.cols(), components: (0..m.rows()).map(|i| Polynomial::linear(m.row(i))).collect() }
    }

    pub fn zero(nvars: usize, ncomponents: usize) -> Self {
        PolynomialMap { nvars, components: vec![Polynomial::zero(nvars); ncomponents] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ncomponents(&self) -> usize {
        self.components.len()
    }

    pub fn dimension(&self) -> usize {
        self.nvars
    }

    pub fn is_square(&self) -> bool {
        self.nvars == self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.components.iter().map(Polynomial::total_degree).max().unwrap_or(0)
    }

    pub fn check_degree(&self, cap: u32) -> Result<(), PolyError> {
        let d = self.total_degree();
        if d > cap {
            return Err(PolyError::DegreeCapExceeded { degree: d, cap });
        }
        Ok(())
    }

    pub fn is_affine(&self) -> bool {
        self.total_degree() <= 1
    }

    pub fn neg(&self) -> Self {
        PolynomialMap { nvars: self.nvars, components: self.components.iter().map(Polynomial::neg).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nvars, self.ncomponents()), (other.nvars, other.ncomponents()));
        PolynomialMap {
            nvars: self.nvars,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect(),
        }
    }

    /// Jacobian matrix of polynomials, `[i][j] = ∂f_i/∂x_j`.
    pub fn jacobian(&self) -> Vec<Vec<Polynomial>> {
        self.components.iter().map(|p| (0..self.nvars).map(|j| p.derivative(j)).collect()).collect()
    }

    /// Linear part at the origin, as a rational matrix.
    pub fn linear_part(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.ncomponents(), self.nvars);
        for (i, p) in self.components.iter().enumerate() {
            for j in 0..self.nvars {
                m[(i, j)] = p.linear_coefficient(j);
            }
        }
        m
    }

    pub fn constant_part(&self) -> Vec<Q> {
        self.components.iter().map(Polynomial::constant_term).collect()
    }

    pub fn eval(&self, x: &[Q]) -> Vec<Q> {
        self.components.iter().map(|p| p.eval(x)).collect()
    }

    /// `x ↦ f(A·x)` for a matrix `A` with `nvars` rows.
    pub fn compose_linear(&self, a: &RationalMatrix) -> Self {
        assert_eq!(a.rows(), self.nvars);
        let subs: Vec<Polynomial> = (0..a.rows()).map(|i| Polynomial::linear(a.row(i))).collect();
        self.compose(&subs)
    }

    /// Substitutes `x_i ← subs[i]` in every component.
    pub fn compose(&self, subs: &[Polynomial]) -> Self {
        let m = subs.first().map_or(0, |p| p.nvars());
        PolynomialMap { nvars: m, components: self.components.iter().map(|p| p.substitute(subs)).collect() }
    }

    /// `x ↦ A·f(x)`.
    pub fn left_multiply(&self, a: &RationalMatrix) -> Self {
        assert_eq!(a.cols(), self.ncomponents());
        let components = (0..a.rows())
            .map(|i| {
                let mut p = Polynomial::zero(self.nvars);
                for (j, c) in a.row(i).iter().enumerate() {
                    if !c.is_zero() {
                        p = p.add(&self.components[j].scale(c));
                    }
                }
                p
            })
            .collect();
        PolynomialMap { nvars: self.nvars, components }
    }

    /// Block map `(x, y) ↦ (f(x), g(y))`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.nvars + other.nvars;
        let mut components: Vec<Polynomial> = self.components.iter().map(|p| p.remap_vars(n, |i| i)).collect();
        components.extend(other.components.iter().map(|p| p.remap_vars(n, |i| i + self.nvars)));
        PolynomialMap { nvars: n, components }
    }

    pub fn compile(&self) -> CompiledMap {
        CompiledMap::new(self)
    }

    pub fn to_json(&self) -> Vec<Vec<TermJson>> {
        self.components
            .iter()
            .map(|p| p.terms().map(|(e, c)| TermJson { coeff: format_q(c), exponents: e.clone() }).collect())
            .collect()
    }

    /// Parses the list-of-components wire form. The variable count is taken
    /// from the exponent vectors, or from `nvars` when given (needed for
    /// maps with all-zero components).
    pub fn from_json(components: &[Vec<TermJson>], nvars: Option<usize>) -> Result<Self, PolyError> {
        let n = match nvars {
            Some(n) => n,
            None => components
                .iter()
                .flatten()
                .map(|t| t.exponents.len())
                .next()
                .unwrap_or(components.len()),
        };
        let mut comps = Vec::with_capacity(components.len());
        for terms in components {
            let mut p = Polynomial::zero(n);
            for t in terms {
                if t.exponents.len() != n {
                    return Err(PolyError::DimensionMismatch(format!(
                        "exponent vector of length {} in a map of {n} variables",
                        t.exponents.len()
                    )));
                }
                p.add_term(t.exponents.clone(), parse_q(&t.coeff)?);
            }
            comps.push(p);
        }
        PolynomialMap::new(n, comps)
    }
}

/// Floating-point evaluator for a map and its Jacobian.
#[derive(Debug, Clone)]
pub struct CompiledMap {
    nvars: usize,
    values: Vec<Vec<(f64, Vec<(usize, i32)>)>>,
    jacobian: Vec<Vec<Vec<(f64, Vec<(usize, i32)>)>>>,
}

fn compile_poly(p: &Polynomial) -> Vec<(f64, Vec<(usize, i32)>)> {
    p.terms()
        .map(|(e, c)| {
            let vars = e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, &k)| (i, k as i32)).collect();
            (to_f64(c), vars)
        })
        .collect()
}

fn eval_compiled(terms: &[(f64, Vec<(usize, i32)>)], x: &[f64]) -> f64 {
    terms.iter().map(|(c, vars)| vars.iter().fold(*c, |acc, &(i, k)| acc * x[i].powi(k))).sum()
}

impl CompiledMap {
    fn new(f: &PolynomialMap) -> Self {
        CompiledMap {
            nvars: f.nvars,
            values: f.components.iter().map(compile_poly).collect(),
            jacobian: f.jacobian().iter().map(|row| row.iter().map(compile_poly).collect()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        self.values.iter().map(|t| eval_compiled(t, x)).collect()
    }

    pub fn norm(&self, x: &[f64]) -> f64 {
        self.values.iter().map(|t| eval_compiled(t, x).powi(2)).sum::<f64>().sqrt()
    }

    pub fn jacobian(&self, x: &[f64]) -> nalgebra::DMatrix<f64> {
        let n = self.values.len();
        nalgebra::DMatrix::from_fn(n, self.nvars, |i, j| eval_compiled(&self.jacobian[i][j], x))
    }
}
