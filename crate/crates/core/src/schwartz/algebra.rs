use super::cocycle::{Cocycle, GroupData, Picture};
use super::index::schwartz_index;
use super::operator::{CompactPerturbation, FredholmOperator};
use super::SchwartzError;
use crate::degree::DegreeConfig;
use crate::matrix::RationalMatrix;
use crate::poly::{Polynomial, PolynomialMap};
use crate::rational::{format_q, q, q_frac, Q};
use num_integer::Integer;

/// Reverses the orientation; the index negates and a second inverse
/// restores the stored data.
pub fn inverse(a: &Cocycle) -> Cocycle {
    Cocycle { orientation: -a.orientation, ..a.clone() }
}

/// `(ℝ ⊕ E, 1 ⊕ l, 0 ⊕ c)`: one more coordinate where the map is the
/// identity, with the degree label raised by one.
pub fn suspension(a: &Cocycle) -> Cocycle {
    Cocycle {
        operator: a.operator.prepend_identity(1),
        perturbation: a.perturbation.shifted(1),
        degree_label: a.degree_label + 1,
        group: a.group.as_ref().map(|g| g.prepend_trivial(1)),
        ..a.clone()
    }
}

fn require_proper(c: &Cocycle, op: &str) -> Result<(), SchwartzError> {
    if c.picture != Picture::Pointed || c.collapse_radius.is_some() {
        return Err(SchwartzError::PictureMismatch(format!(
            "{op} needs pointed cocycles whose zeros are bounded by their radius"
        )));
    }
    Ok(())
}

fn same_group(a: &Cocycle, b: &Cocycle) -> Result<(), SchwartzError> {
    match (&a.group, &b.group) {
        (None, None) => Ok(()),
        (Some(x), Some(y)) if x.group() == y.group() => Ok(()),
        _ => Err(SchwartzError::GroupMismatch("the cocycles carry different group data".into())),
    }
}

/// The sum through the fold `z ↦ z² − 1` on two extra trivial coordinates
/// `z = s + it`: near `z = 1` the map is `l + c_a`, near `z = −1` it is
/// `l + c_b`, and `z²` preserves orientation at both. Opposite
/// orientations are carried by a third trivial coordinate `u ↦ s·u`.
pub fn sum(a: &Cocycle, b: &Cocycle) -> Result<Cocycle, SchwartzError> {
    if a.operator != b.operator {
        return Err(SchwartzError::OperatorMismatch("summands must share the operator".into()));
    }
    if a.degree_label != b.degree_label {
        return Err(SchwartzError::OperatorMismatch("summands have different degree labels".into()));
    }
    if a.group != b.group {
        return Err(SchwartzError::GroupMismatch("summands carry different group data".into()));
    }
    require_proper(a, "sum")?;
    require_proper(b, "sum")?;
    let flip = a.orientation != b.orientation;
    let extra = if flip { 3 } else { 2 };
    let (pa, pb) = (&a.perturbation, &b.perturbation);
    let m = extra + pa.input_dim().max(pb.input_dim());
    let k = extra + pa.output_dim().max(pb.output_dim());
    let s = Polynomial::var(m, 0);
    let t = Polynomial::var(m, 1);
    let half = q_frac(1, 2);
    let wa = Polynomial::constant(m, half.clone()).add(&s.scale(&half));
    let wb = Polynomial::constant(m, half.clone()).sub(&s.scale(&half));
    let mut comps = vec![Polynomial::zero(m); k];
    // l acts as the identity on s and t, so c supplies the rest of z² − 1
    comps[0] = s.mul(&s).sub(&t.mul(&t)).sub(&Polynomial::constant(m, q(1))).sub(&s);
    comps[1] = s.mul(&t).scale(&q(2)).sub(&t);
    if flip {
        let u = Polynomial::var(m, 2);
        let su = s.scale(&Q::from_integer(a.orientation.into())).mul(&u);
        comps[2] = su.sub(&u);
    }
    let ca = pa.relocate(m, k, |i| i + extra, |j| j + extra);
    let cb = pb.relocate(m, k, |i| i + extra, |j| j + extra);
    for j in extra..k {
        comps[j] = wa.mul(ca.core().component(j)).add(&wb.mul(cb.core().component(j)));
    }
    let perturbation = CompactPerturbation::new(PolynomialMap::new(m, comps).expect("sized"))?;
    let radius = a.radius.clone().max(b.radius.clone()) + q(1);
    Ok(Cocycle {
        operator: a.operator.prepend_identity(extra),
        perturbation,
        picture: Picture::Pointed,
        radius,
        collapse_radius: None,
        orientation: if flip { 1 } else { a.orientation },
        degree_label: a.degree_label,
        group: a.group.as_ref().map(|g| g.prepend_trivial(extra)),
    })
}

/// Where the coordinates of two interleaved sequence spaces land: both
/// heads first, then blocks alternate.
struct Interleave {
    h: [usize; 2],
    d: [usize; 2],
}

impl Interleave {
    fn pos(&self, side: usize, i: usize) -> usize {
        let heads = self.h[0] + self.h[1];
        if i < self.h[side] {
            return if side == 0 { i } else { self.h[0] + i };
        }
        let r = i - self.h[side];
        let (blk, off) = (r / self.d[side], r % self.d[side]);
        heads + blk * (self.d[0] + self.d[1]) + if side == 0 { off } else { self.d[0] + off }
    }

    /// Inverse of `pos`.
    fn source(&self, c: usize) -> (usize, usize) {
        let heads = self.h[0] + self.h[1];
        if c < self.h[0] {
            return (0, c);
        }
        if c < heads {
            return (1, c - self.h[0]);
        }
        let r = c - heads;
        let period = self.d[0] + self.d[1];
        let (blk, off) = (r / period, r % period);
        if off < self.d[0] {
            (0, self.h[0] + blk * self.d[0] + off)
        } else {
            (1, self.h[1] + blk * self.d[1] + off - self.d[0])
        }
    }

    /// Coordinates covering `n` of side 0 and `m` of side 1, whole blocks.
    fn blocks_covering(&self, n: [usize; 2]) -> usize {
        let count = |side: usize| n[side].saturating_sub(self.h[side]).div_ceil(self.d[side]);
        self.h[0] + self.h[1] + count(0).max(count(1)) * (self.d[0] + self.d[1])
    }
}

fn layout(c: &Cocycle) -> (usize, usize) {
    match &c.group {
        Some(g) => (g.head_dim(), g.block_dim()),
        None => (0, 1),
    }
}

/// `(E₁ ⊕ E₂, l₁ ⊕ l₂, c₁ × c₂)` with the two sequence spaces interleaved.
pub fn cup_product(a: &Cocycle, b: &Cocycle) -> Result<Cocycle, SchwartzError> {
    same_group(a, b)?;
    for c in [a, b] {
        if c.operator.shift_power() != 0 {
            return Err(SchwartzError::UnsupportedIndex(c.operator.index()));
        }
        require_proper(c, "cup product")?;
    }
    let (ha, da) = layout(a);
    let (hb, db) = layout(b);
    let il = Interleave { h: [ha, hb], d: [da, db] };
    let ops = [&a.operator, &b.operator];
    let w = il.blocks_covering([ops[0].window(), ops[1].window()]);
    let mut block = RationalMatrix::zeros(w, w);
    for x in 0..w {
        for y in 0..w {
            let ((sx, ix), (sy, iy)) = (il.source(x), il.source(y));
            if sx == sy {
                block[(x, y)] = ops[sx].diagonal_entry(ix, iy);
            }
        }
    }
    let period = (da + db) * ops[0].tail().len().lcm(&ops[1].tail().len());
    let tail = (w..w + period)
        .map(|x| {
            let (s, i) = il.source(x);
            ops[s].tail_at(i).clone()
        })
        .collect();
    let operator = FredholmOperator::new(w, block, 0, tail)?;
    let (pa, pb) = (&a.perturbation, &b.perturbation);
    let span = |n: usize, side: usize| if n == 0 { 0 } else { il.pos(side, n - 1) + 1 };
    let m = span(pa.input_dim(), 0).max(span(pb.input_dim(), 1));
    let k = span(pa.output_dim(), 0).max(span(pb.output_dim(), 1));
    let ra = pa.relocate(m, k, |i| il.pos(0, i), |j| il.pos(0, j));
    let rb = pb.relocate(m, k, |i| il.pos(1, i), |j| il.pos(1, j));
    let comps = (0..k).map(|j| ra.core().component(j).add(rb.core().component(j))).collect();
    let perturbation = CompactPerturbation::new(PolynomialMap::new(m, comps).expect("sized"))?;
    let group = match (&a.group, &b.group) {
        (Some(x), Some(y)) => Some(GroupData::new(x.head.direct_sum(&y.head)?, x.block.direct_sum(&y.block)?)?),
        _ => None,
    };
    let c = Cocycle {
        operator,
        perturbation,
        picture: Picture::Pointed,
        radius: &a.radius + &b.radius,
        collapse_radius: None,
        orientation: a.orientation * b.orientation,
        degree_label: a.degree_label + b.degree_label,
        group,
    };
    c.validate()?;
    Ok(c)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvertOptions {
    /// Radius to certify; when absent the cocycle's radius is doubled
    /// until certification succeeds.
    pub radius: Option<Q>,
    pub max_doublings: u32,
}

impl Default for ConvertOptions {
    fn default() -> Self {
        ConvertOptions { radius: None, max_doublings: 8 }
    }
}

/// Switches between the pointed and boundary pictures.
pub fn picture_convert(
    a: &Cocycle,
    target: Picture,
    opts: &ConvertOptions,
    cfg: &DegreeConfig,
) -> Result<Cocycle, SchwartzError> {
    match (a.picture, target) {
        (Picture::Boundary, Picture::Pointed) => {
            Ok(Cocycle { picture: Picture::Pointed, collapse_radius: Some(a.radius.clone()), ..a.clone() })
        }
        (Picture::Pointed, Picture::Boundary) => {
            if let Some(r) = &a.collapse_radius {
                return Ok(Cocycle { picture: Picture::Boundary, radius: r.clone(), collapse_radius: None, ..a.clone() });
            }
            let candidates: Vec<Q> = match &opts.radius {
                Some(r) => vec![r.clone()],
                None => (0..=opts.max_doublings).map(|i| &a.radius * Q::from_integer((1i64 << i).into())).collect(),
            };
            for r in &candidates {
                let c = Cocycle { picture: Picture::Boundary, radius: r.clone(), ..a.clone() };
                match schwartz_index(&c, cfg) {
                    Ok(_) => return Ok(c),
                    Err(e) if e.is_certification_failure() => continue,
                    Err(e) => return Err(e),
                }
            }
            Err(SchwartzError::NoAdmissibleRadius(candidates.iter().map(format_q).collect()))
        }
        _ => Ok(a.clone()),
    }
}
