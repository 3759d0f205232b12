use super::operator::{CompactPerturbation, FredholmOperator, OperatorJson, PerturbationJson};
use super::SchwartzError;
use crate::group::FiniteGroup;
use crate::matrix::RationalMatrix;
use crate::poly::{Polynomial, PolynomialMap};
use crate::rational::{format_q, parse_q, q, Q};
use crate::rep::{check_equivariance, OrthogonalRep, RepJson};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Picture {
    /// `l + c` is proper; `radius` bounds every zero.
    Pointed,
    /// `l + c` has no zeros on the sphere of radius `radius`.
    Boundary,
}

impl std::str::FromStr for Picture {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pointed" => Ok(Picture::Pointed),
            "boundary" => Ok(Picture::Boundary),
            _ => Err(format!("unknown picture {s:?}")),
        }
    }
}

/// Action on the sequence space: `head` on the first `h` coordinates, then
/// `block` on each consecutive run of `d` coordinates.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub head: OrthogonalRep,
    pub block: OrthogonalRep,
}

impl PartialEq for GroupData {
    fn eq(&self, other: &Self) -> bool {
        let same = |a: &OrthogonalRep, b: &OrthogonalRep| {
            a.group() == b.group() && a.dimension() == b.dimension() && a.matrices() == b.matrices()
        };
        same(&self.head, &other.head) && same(&self.block, &other.block)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDataJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub head: Option<RepJson>,
    pub block: RepJson,
}

impl GroupData {
    pub fn new(head: OrthogonalRep, block: OrthogonalRep) -> Result<Self, SchwartzError> {
        if head.group() != block.group() {
            return Err(SchwartzError::GroupMismatch("head and block act through different groups".into()));
        }
        if block.dimension() == 0 {
            return Err(SchwartzError::GroupMismatch("block representation must be nonzero".into()));
        }
        Ok(GroupData { head, block })
    }

    /// The same representation on every block.
    pub fn blockwise(block: OrthogonalRep) -> Self {
        let head = OrthogonalRep::trivial(block.group().clone(), 0);
        GroupData { head, block }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.block.group()
    }

    pub fn head_dim(&self) -> usize {
        self.head.dimension()
    }

    pub fn block_dim(&self) -> usize {
        self.block.dimension()
    }

    pub fn is_aligned(&self, n: usize) -> bool {
        n >= self.head_dim() && (n - self.head_dim()).is_multiple_of(self.block_dim())
    }

    /// Least `n' ≥ n` at which a block ends.
    pub fn align_up(&self, n: usize) -> usize {
        let (h, d) = (self.head_dim(), self.block_dim());
        if n <= h {
            h
        } else {
            h + (n - h).div_ceil(d) * d
        }
    }

    /// The action on the first `n` coordinates; `n` must be aligned.
    pub fn rep_on(&self, n: usize) -> OrthogonalRep {
        assert!(self.is_aligned(n));
        let mut rep = self.head.clone();
        for _ in 0..(n - self.head_dim()) / self.block_dim() {
            rep = rep.direct_sum(&self.block).expect("same group");
        }
        rep
    }

    /// Prepends `k` coordinates with trivial action.
    pub fn prepend_trivial(&self, k: usize) -> Self {
        let t = OrthogonalRep::trivial(self.group().clone(), k);
        GroupData { head: t.direct_sum(&self.head).expect("same group"), block: self.block.clone() }
    }

    pub fn to_json(&self) -> GroupDataJson {
        let head = (self.head_dim() > 0).then(|| self.head.to_json());
        GroupDataJson { head, block: self.block.to_json() }
    }

    pub fn from_json(j: &GroupDataJson, cap: usize) -> Result<Self, SchwartzError> {
        let block = OrthogonalRep::from_json(&j.block, cap)?;
        let head = match &j.head {
            Some(h) => OrthogonalRep::from_json(h, cap)?,
            None => OrthogonalRep::trivial(block.group().clone(), 0),
        };
        Self::new(head, block)
    }
}

/// `(E, F, l, c)` over a point, with the data needed to evaluate its index.
#[derive(Debug, Clone, PartialEq)]
pub struct Cocycle {
    pub operator: FredholmOperator,
    pub perturbation: CompactPerturbation,
    pub picture: Picture,
    pub radius: Q,
    /// Set when a boundary cocycle was made pointed by collapsing the
    /// exterior of this ball to the basepoint.
    pub collapse_radius: Option<Q>,
    /// `−1` records one reflection of an extra trivial line, which is how
    /// inverses are formed.
    pub orientation: i32,
    /// Suspension degree relative to the operator index.
    pub degree_label: i64,
    pub group: Option<GroupData>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleJson {
    pub operator: OperatorJson,
    pub perturbation: PerturbationJson,
    pub picture: Picture,
    pub radius: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub collapse_radius: Option<String>,
    #[serde(default = "plus_one")]
    pub orientation: i32,
    #[serde(default)]
    pub degree_label: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDataJson>,
}

fn plus_one() -> i32 {
    1
}

impl Cocycle {
    /// Validates the data, including commutation of `l` and equivariance of
    /// `c` when a group action is present.
    pub fn new(
        operator: FredholmOperator,
        perturbation: CompactPerturbation,
        picture: Picture,
        radius: Q,
        group: Option<GroupData>,
    ) -> Result<Self, SchwartzError> {
        let c = Cocycle {
            operator,
            perturbation,
            picture,
            radius,
            collapse_radius: None,
            orientation: 1,
            degree_label: 0,
            group,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), SchwartzError> {
        if !self.radius.is_positive() {
            return Err(SchwartzError::InvalidCocycle("radius must be positive".into()));
        }
        if let Some(r) = &self.collapse_radius {
            if self.picture != Picture::Pointed || !r.is_positive() {
                return Err(SchwartzError::InvalidCocycle("a collapse radius needs a pointed cocycle".into()));
            }
        }
        if self.orientation.abs() != 1 {
            return Err(SchwartzError::InvalidCocycle("orientation must be ±1".into()));
        }
        if let Some(g) = &self.group {
            self.check_group(g)?;
        }
        Ok(())
    }

    fn check_group(&self, g: &GroupData) -> Result<(), SchwartzError> {
        let op = &self.operator;
        if op.shift_power() != 0 {
            return Err(SchwartzError::InvalidOperator("an equivariant operator must have shift power 0".into()));
        }
        // one full tail period past the window, in whole blocks
        let n = g.align_up(op.window().max(1)) + g.block_dim() * op.tail().len();
        let rep = g.rep_on(n);
        let d = op.diagonal_part(n);
        for s in rep.group().generator_indices() {
            let m = rep.matrix(s);
            if m.mul(&d) != d.mul(m) {
                return Err(SchwartzError::NotEquivariant("the operator does not commute with the action".into()));
            }
        }
        let p = &self.perturbation;
        let n = g.align_up(p.input_dim().max(p.output_dim()));
        if n > 0 && !check_equivariance(&p.padded(n), &g.rep_on(n))? {
            return Err(SchwartzError::NotEquivariant("the perturbation does not intertwine the action".into()));
        }
        Ok(())
    }

    /// Radius of the ball on which the index is evaluated.
    pub fn index_radius(&self) -> &Q {
        self.collapse_radius.as_ref().unwrap_or(&self.radius)
    }

    pub fn with_group(mut self, g: GroupData) -> Result<Self, SchwartzError> {
        self.group = Some(g);
        self.validate()?;
        Ok(self)
    }

    /// `l = 1`, `c = 0` on the unit ball.
    pub fn identity() -> Self {
        Self::new(FredholmOperator::identity(), CompactPerturbation::zero(), Picture::Pointed, q(1), None)
            .expect("valid")
    }

    /// `l = 1` and `c` moving the first coordinate to `x₀² + 1`, which
    /// has no zeros.
    pub fn zero() -> Self {
        let c = Polynomial::from_terms(1, [(vec![2], q(1)), (vec![1], q(-1)), (vec![0], q(1))]);
        let p = CompactPerturbation::new(PolynomialMap::new(1, vec![c]).expect("one variable")).expect("small");
        Self::new(FredholmOperator::identity(), p, Picture::Pointed, q(1), None).expect("valid")
    }

    /// `l = 1`, `c = −K`, so `l + c = 1 − K`.
    pub fn linear(k: &RationalMatrix, radius: Q) -> Result<Self, SchwartzError> {
        let c = CompactPerturbation::linear(&k.scale(&-Q::one()));
        Self::new(FredholmOperator::identity(), c, Picture::Pointed, radius, None)
    }

    /// `l = 1` and `l + c` equal to `f` on the first `n` coordinates.
    pub fn from_map(f: &PolynomialMap, radius: Q) -> Result<Self, SchwartzError> {
        let n = f.nvars();
        let core = f.add(&PolynomialMap::identity(n).neg());
        Self::new(FredholmOperator::identity(), CompactPerturbation::new(core)?, Picture::Pointed, radius, None)
    }

    pub fn to_json(&self) -> CocycleJson {
        CocycleJson {
            operator: self.operator.to_json(),
            perturbation: self.perturbation.to_json(),
            picture: self.picture,
            radius: format_q(&self.radius),
            collapse_radius: self.collapse_radius.as_ref().map(format_q),
            orientation: self.orientation,
            degree_label: self.degree_label,
            group: self.group.as_ref().map(GroupData::to_json),
        }
    }

    pub fn from_json(j: &CocycleJson, cap: usize) -> Result<Self, SchwartzError> {
        let c = Cocycle {
            operator: FredholmOperator::from_json(&j.operator)?,
            perturbation: CompactPerturbation::from_json(&j.perturbation)?,
            picture: j.picture,
            radius: parse_q(&j.radius)?,
            collapse_radius: j.collapse_radius.as_deref().map(parse_q).transpose()?,
            orientation: j.orientation,
            degree_label: j.degree_label,
            group: j.group.as_ref().map(|g| GroupData::from_json(g, cap)).transpose()?,
        };
        c.validate()?;
        Ok(c)
    }
}

impl Default for Cocycle {
    fn default() -> Self {
        Self::identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::library;

    #[test]
    fn json_roundtrip() {
        let c = Cocycle::linear(&RationalMatrix::from_i64(&[&[2, 0], &[1, 0]]), q(3)).unwrap();
        let j = serde_json::to_string(&c.to_json()).unwrap();
        let back: CocycleJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Cocycle::from_json(&back, 64).unwrap(), c);
    }

    #[test]
    fn equivariance_is_checked() {
        let g = library::cyclic(2);
        let sign = OrthogonalRep::sign(g.clone(), 1);
        let odd = Polynomial::from_terms(1, [(vec![3], q(1)), (vec![1], q(-1))]);
        let c = Cocycle::from_map(&PolynomialMap::new(1, vec![odd]).unwrap(), q(2)).unwrap();
        assert!(c.clone().with_group(GroupData::blockwise(sign.clone())).is_ok());
        let even = PolynomialMap::new(1, vec![Polynomial::from_terms(1, [(vec![2], q(1))])]).unwrap();
        let bad = Cocycle::from_map(&even, q(2)).unwrap();
        assert!(matches!(bad.with_group(GroupData::blockwise(sign)), Err(SchwartzError::NotEquivariant(_))));
    }

    #[test]
    fn alignment() {
        let g = library::cyclic(2);
        let gd = GroupData::new(OrthogonalRep::trivial(g.clone(), 1), OrthogonalRep::permutation(g)).unwrap();
        assert_eq!(gd.align_up(0), 1);
        assert_eq!(gd.align_up(2), 3);
        assert!(gd.is_aligned(5) && !gd.is_aligned(4));
        assert_eq!(gd.rep_on(5).dimension(), 5);
    }
}
