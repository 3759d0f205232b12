//! Dense univariate polynomials over ℚ, lowest coefficient first, with
//! Sturm-sequence root counting.

use crate::rational::{sign, Q};
use num_traits::{One, Signed, Zero};

/// Endpoint of a root-counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Q),
    PosInf,
}

/// Removes trailing zero coefficients.
pub fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(p: &[Q]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

pub fn derivative(p: &[Q]) -> Vec<Q> {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * Q::from_integer((k as i64).into())).collect())
}

pub fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Quotient and remainder of `a` by nonzero `b`.
pub fn div_rem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else { return (Vec::new(), Vec::new()) };
    if da < db {
        return (Vec::new(), r);
    }
    let mut quo = vec![Q::zero(); da - db + 1];
    let lead = &b[db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / lead;
        for (i, bi) in b.iter().enumerate().take(db + 1) {
            r[dr - db + i] -= &c * bi;
        }
        quo[dr - db] = c;
        r = trim(r);
    }
    (trim(quo), r)
}

fn monic(p: Vec<Q>) -> Vec<Q> {
    match p.last().cloned() {
        Some(l) => p.into_iter().map(|c| c / &l).collect(),
        None => p,
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while degree(&y).is_some() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

/// Yun's square-free factorization: `p = c · Π f_i^i`; returns `(i, f_i)`
/// for nonconstant `f_i`.
pub fn squarefree_factors(p: &[Q]) -> Vec<(usize, Vec<Q>)> {
    let p = trim(p.to_vec());
    if degree(&p).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let dp = derivative(&p);
    let mut a = gcd(&p, &dp);
    let mut b = div_rem(&p, &a).0;
    let mut c = div_rem(&dp, &a).0;
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while degree(&b).unwrap_or(0) > 0 {
        a = gcd(&b, &d);
        if degree(&a).unwrap_or(0) > 0 {
            out.push((i, a.clone()));
        }
        b = div_rem(&b, &a).0;
        c = div_rem(&d, &a).0;
        d = sub(&c, &derivative(&b));
        i += 1;
    }
    out
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| a.get(i).cloned().unwrap_or_else(Q::zero) - b.get(i).cloned().unwrap_or_else(Q::zero))
        .collect())
}

pub fn sturm_chain(p: &[Q]) -> Vec<Vec<Q>> {
    let p = trim(p.to_vec());
    let mut chain = vec![p.clone(), derivative(&p)];
    loop {
        let n = chain.len();
        if degree(&chain[n - 1]).is_none() {
            chain.pop();
            break;
        }
        let (_, r) = div_rem(&chain[n - 2], &chain[n - 1]);
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn sign_at(p: &[Q], at: &Bound) -> i32 {
    let Some(d) = degree(p) else { return 0 };
    match at {
        Bound::Finite(x) => sign(&eval(p, x)),
        Bound::PosInf => sign(&p[d]),
        Bound::NegInf => {
            let s = sign(&p[d]);
            if d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }
}

fn variations(chain: &[Vec<Q>], at: &Bound) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| sign_at(p, at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_distinct_roots(p: &[Q], lo: &Bound, hi: &Bound) -> usize {
    let chain = sturm_chain(p);
    if chain.is_empty() {
        return 0;
    }
    variations(&chain, lo).saturating_sub(variations(&chain, hi))
}

/// Number of real roots in `(lo, hi]` counted with multiplicity.
pub fn count_roots_with_multiplicity(p: &[Q], lo: &Bound, hi: &Bound) -> usize {
    squarefree_factors(p).iter().map(|(m, f)| m * count_distinct_roots(f, lo, hi)).sum()
}

/// A rational interval `[lo, hi]` of width at most `tol` containing
/// `sqrt(x)` for `x ≥ 0`.
pub fn sqrt_bracket(x: &Q, tol: &Q) -> (Q, Q) {
    assert!(!x.is_negative());
    let mut lo = Q::zero();
    let mut hi = if x > &Q::one() { x.clone() } else { Q::one() };
    let two = Q::from_integer(2.into());
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if &mid * &mid <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    fn p(c: &[i64]) -> Vec<Q> {
        c.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn division_and_gcd() {
        let (quo, r) = div_rem(&p(&[-1, 0, 1]), &p(&[1, 1]));
        assert_eq!(quo, p(&[-1, 1]));
        assert!(r.is_empty());
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[2, 2])), p(&[1, 1]));
    }

    #[test]
    fn sturm_counts() {
        // x³ − x has roots −1, 0, 1
        let f = p(&[0, -1, 0, 1]);
        assert_eq!(count_distinct_roots(&f, &Bound::NegInf, &Bound::PosInf), 3);
        assert_eq!(count_distinct_roots(&f, &Bound::Finite(q_frac(1, 2)), &Bound::PosInf), 1);
        assert_eq!(count_distinct_roots(&p(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf), 0);
    }

    #[test]
    fn multiplicities() {
        // (x − 2)²(x − 3)
        let f = mul(&mul(&p(&[-2, 1]), &p(&[-2, 1])), &p(&[-3, 1]));
        let sf = squarefree_factors(&f);
        assert_eq!(sf.len(), 2);
        assert_eq!(count_roots_with_multiplicity(&f, &Bound::Finite(q(1)), &Bound::PosInf), 3);
        assert_eq!(count_distinct_roots(&f, &Bound::Finite(q(1)), &Bound::PosInf), 2);
    }

    #[test]
    fn sqrt_bracket_contains_root() {
        let (lo, hi) = sqrt_bracket(&q(2), &q_frac(1, 1000));
        assert!(&lo * &lo <= q(2) && &hi * &hi >= q(2));
        assert!(&hi - &lo <= q_frac(1, 1000));
    }
}
