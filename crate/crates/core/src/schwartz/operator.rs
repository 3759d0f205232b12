use super::SchwartzError;
use crate::matrix::RationalMatrix;
use crate::poly::{Polynomial, PolynomialMap, TermJson, DEFAULT_DEGREE_CAP};
use crate::rational::{format_q, parse_q, Q};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Operator on square-summable sequences in canonical form: the block `B`
/// acts on coordinates `0..w`, coordinate `j ≥ w` is scaled by
/// `tail[(j − w) mod len]`, and then the result is shifted `p` places.
/// For `p ≥ 0` the first `p` coordinates are dropped (index `+p`); for
/// `p < 0` the sequence is moved up by `−p` places (index `p`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FredholmOperator {
    window: usize,
    block: RationalMatrix,
    shift_power: i64,
    tail: Vec<Q>,
    index: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TailJson {
    Constant(String),
    Periodic(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub window: usize,
    pub block: Vec<Vec<String>>,
    #[serde(default)]
    pub shift_power: i64,
    pub tail: TailJson,
}

impl FredholmOperator {
    pub fn new(window: usize, block: RationalMatrix, shift_power: i64, tail: Vec<Q>) -> Result<Self, SchwartzError> {
        if block.rows() != window || block.cols() != window {
            return Err(SchwartzError::InvalidOperator(format!(
                "block is {}x{} but the window is {window}",
                block.rows(),
                block.cols()
            )));
        }
        if tail.is_empty() || tail.iter().any(Zero::is_zero) {
            return Err(SchwartzError::InvalidOperator("tail entries must be nonzero".into()));
        }
        let mut op = FredholmOperator { window, block, shift_power, tail, index: 0 };
        let (k, c) = (op.kernel_dim(), op.cokernel_dim());
        let index = k as i64 - c as i64;
        let ker = op.block.nullspace().len() as i64;
        let coker = window as i64 - op.block.rank() as i64;
        if index != shift_power + ker - coker {
            return Err(SchwartzError::InvalidOperator(format!(
                "index {index} from the finite section disagrees with shift {shift_power} + {ker} − {coker}"
            )));
        }
        op.index = index;
        Ok(op)
    }

    pub fn identity() -> Self {
        Self::new(0, RationalMatrix::zeros(0, 0), 0, vec![Q::one()]).expect("identity is Fredholm")
    }

    /// `B` on the window and the constant `λ` beyond it.
    pub fn with_block(block: RationalMatrix, tail: Q) -> Result<Self, SchwartzError> {
        Self::new(block.rows(), block, 0, vec![tail])
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn block(&self) -> &RationalMatrix {
        &self.block
    }

    pub fn shift_power(&self) -> i64 {
        self.shift_power
    }

    pub fn tail(&self) -> &[Q] {
        &self.tail
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    /// Scale applied to coordinate `j ≥ w`.
    pub fn tail_at(&self, j: usize) -> &Q {
        &self.tail[(j - self.window) % self.tail.len()]
    }

    /// Entry `(a, b)` of the unshifted part.
    pub fn diagonal_entry(&self, a: usize, b: usize) -> Q {
        if a < self.window && b < self.window {
            self.block[(a, b)].clone()
        } else if a == b {
            self.tail_at(a).clone()
        } else {
            Q::zero()
        }
    }

    /// The unshifted part on the first `n ≥ w` coordinates.
    pub fn diagonal_part(&self, n: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                m[(a, b)] = self.diagonal_entry(a, b);
            }
        }
        m
    }

    /// Finite section: inputs `0..cols` to outputs `0..rows`.
    pub fn section(&self, rows: usize, cols: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(rows, cols);
        for j in 0..rows {
            let src = j as i64 + self.shift_power;
            if src < 0 {
                continue;
            }
            for i in 0..cols {
                m[(j, i)] = self.diagonal_entry(src as usize, i);
            }
        }
        m
    }

    /// A section large enough that kernel and cokernel of the operator
    /// are those of the section.
    fn kernel_section(&self) -> RationalMatrix {
        let r = self.window.max(1) + self.shift_power.unsigned_abs() as usize;
        if self.shift_power >= 0 {
            self.section(r, r + self.shift_power as usize)
        } else {
            self.section(r + self.shift_power.unsigned_abs() as usize, r)
        }
    }

    pub fn kernel_dim(&self) -> usize {
        let s = self.kernel_section();
        s.cols() - s.rank()
    }

    pub fn cokernel_dim(&self) -> usize {
        let s = self.kernel_section();
        s.rows() - s.rank()
    }

    /// `1_k ⊕ l` on `ℝᵏ ⊕ E`.
    pub fn prepend_identity(&self, k: usize) -> Self {
        FredholmOperator {
            window: self.window + k,
            block: RationalMatrix::identity(k).direct_sum(&self.block),
            shift_power: self.shift_power,
            tail: self.tail.clone(),
            index: self.index,
        }
    }

    pub fn to_json(&self) -> OperatorJson {
        let tail = match self.tail.as_slice() {
            [one] => TailJson::Constant(format_q(one)),
            many => TailJson::Periodic(many.iter().map(format_q).collect()),
        };
        OperatorJson { window: self.window, block: self.block.to_strings(), shift_power: self.shift_power, tail }
    }

    pub fn from_json(j: &OperatorJson) -> Result<Self, SchwartzError> {
        let block = if j.window == 0 && j.block.is_empty() {
            RationalMatrix::zeros(0, 0)
        } else {
            RationalMatrix::parse(&j.block)?
        };
        let tail = match &j.tail {
            TailJson::Constant(s) => vec![parse_q(s)?],
            TailJson::Periodic(v) => v.iter().map(|s| parse_q(s)).collect::<Result<_, _>>()?,
        };
        Self::new(j.window, block, j.shift_power, tail)
    }
}

/// `c = ι_k ∘ core ∘ π_m`: read the first `m` coordinates, write the first `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactPerturbation {
    input_dim: usize,
    output_dim: usize,
    core: PolynomialMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerturbationJson {
    pub input_dim: usize,
    pub output_dim: usize,
    pub core: Vec<Vec<TermJson>>,
}

impl CompactPerturbation {
    pub fn new(core: PolynomialMap) -> Result<Self, SchwartzError> {
        core.check_degree(DEFAULT_DEGREE_CAP)?;
        Ok(CompactPerturbation { input_dim: core.nvars(), output_dim: core.ncomponents(), core })
    }

    pub fn zero() -> Self {
        CompactPerturbation { input_dim: 0, output_dim: 0, core: PolynomialMap::zero(0, 0) }
    }

    /// The linear operator `x ↦ Kx` for a `k × m` matrix.
    pub fn linear(k: &RationalMatrix) -> Self {
        let comps = (0..k.rows()).map(|i| Polynomial::linear(k.row(i))).collect();
        let core = PolynomialMap::new(k.cols(), comps).expect("row lengths agree");
        CompactPerturbation { input_dim: k.cols(), output_dim: k.rows(), core }
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn output_dim(&self) -> usize {
        self.output_dim
    }

    pub fn core(&self) -> &PolynomialMap {
        &self.core
    }

    pub fn is_linear(&self) -> bool {
        self.core.components().iter().all(|p| p.is_zero() || p.is_homogeneous_linear())
    }

    /// The perturbation as a self-map of `ℝⁿ`, `n ≥ max(m, k)`.
    pub fn padded(&self, n: usize) -> PolynomialMap {
        assert!(n >= self.input_dim && n >= self.output_dim);
        let comps = (0..n)
            .map(|j| match j < self.output_dim {
                true => self.core.component(j).remap_vars(n, |i| i),
                false => Polynomial::zero(n),
            })
            .collect();
        PolynomialMap::new(n, comps).expect("consistent variable count")
    }

    /// Square matrix of a linear core on `max(m, k)` coordinates.
    pub fn linear_matrix(&self) -> Option<RationalMatrix> {
        if !self.is_linear() {
            return None;
        }
        let n = self.input_dim.max(self.output_dim);
        Some(self.padded(n).linear_part())
    }

    /// Relocates input `i` to `pos_in(i)` and output `j` to `pos_out(j)` in a
    /// space whose first `m` coordinates are read and first `k` written.
    pub fn relocate(
        &self,
        m: usize,
        k: usize,
        pos_in: impl Fn(usize) -> usize,
        pos_out: impl Fn(usize) -> usize,
    ) -> Self {
        let mut comps = vec![Polynomial::zero(m); k];
        for j in 0..self.output_dim {
            comps[pos_out(j)] = self.core.component(j).remap_vars(m, &pos_in);
        }
        CompactPerturbation { input_dim: m, output_dim: k, core: PolynomialMap::new(m, comps).expect("sized") }
    }

    /// The same perturbation on `ℝˢ ⊕ E`, ignoring and not touching the new
    /// leading coordinates.
    pub fn shifted(&self, s: usize) -> Self {
        let m = if self.input_dim == 0 { 0 } else { self.input_dim + s };
        let k = if self.output_dim == 0 { 0 } else { self.output_dim + s };
        self.relocate(m, k, |i| i + s, |j| j + s)
    }

    pub fn to_json(&self) -> PerturbationJson {
        PerturbationJson { input_dim: self.input_dim, output_dim: self.output_dim, core: self.core.to_json() }
    }

    pub fn from_json(j: &PerturbationJson) -> Result<Self, SchwartzError> {
        let core = PolynomialMap::from_json(&j.core, Some(j.input_dim))?;
        if core.ncomponents() != j.output_dim {
            return Err(SchwartzError::InvalidPerturbation(format!(
                "core has {} components but output_dim is {}",
                core.ncomponents(),
                j.output_dim
            )));
        }
        Self::new(core)
    }
}
