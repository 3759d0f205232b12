//! Integer lattices: Hermite and Smith normal forms, integer kernels.
//!
//! A lattice is given by generator rows; all arithmetic is over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type IntRow = Vec<BigInt>;

fn to_big(rows: &[Vec<i64>]) -> Vec<IntRow> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn from_i64(rows: &[Vec<i64>]) -> Vec<IntRow> {
    to_big(rows)
}

/// Row-style Hermite normal form: echelon, positive pivots, entries above
/// each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rows: &[IntRow]) -> Vec<IntRow> {
    let mut m: Vec<IntRow> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let Some(ncols) = m.first().map(|r| r.len()) else { return Vec::new() };
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c among rows r..
            let mut best: Option<usize> = None;
            for i in r..m.len() {
                if !m[i][c].is_zero() && best.is_none_or(|b| m[i][c].abs() < m[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].div_floor(&m[r][c]);
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot_row = m[r].clone();
        for i in 0..r {
            let f = m[i][c].div_floor(&pivot_row[c]);
            if !f.is_zero() {
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Nonzero invariant factors `d₁ | d₂ | …` of the row lattice.
pub fn smith_invariants(rows: &[IntRow]) -> Vec<BigInt> {
    let mut m: Vec<IntRow> = rows.to_vec();
    if m.is_empty() {
        return Vec::new();
    }
    let nr = m.len();
    let nc = m[0].len();
    let mut diag = Vec::new();
    for t in 0..nr.min(nc) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..nr {
                for j in t..nc {
                    if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { return diag };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..nr {
                let f = m[i][t].div_floor(&m[t][t]);
                if !f.is_zero() {
                    let pr = m[t].clone();
                    for (x, p) in m[i].iter_mut().zip(&pr) {
                        *x -= &f * p;
                    }
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..nc {
                let f = m[t][j].div_floor(&m[t][t]);
                if !f.is_zero() {
                    for row in m.iter_mut() {
                        let p = row[t].clone();
                        row[j] -= &f * p;
                    }
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t
            let piv = m[t][t].clone();
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !(&m[i][j] % &piv).is_zero()));
            match bad {
                Some(i) => {
                    let ri = m[i].clone();
                    for (x, y) in m[t].iter_mut().zip(&ri) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

/// Basis (in Hermite normal form) of `{x ∈ ℤⁿ : A·x = 0}` for `A` given by
/// rows of length `n`.
pub fn integer_kernel(a: &[IntRow], n: usize) -> Vec<IntRow> {
    let r = a.len();
    let aug: Vec<IntRow> = (0..n)
        .map(|j| {
            let mut row: IntRow = a.iter().map(|ai| ai[j].clone()).collect();
            row.extend((0..n).map(|k| BigInt::from((k == j) as i64)));
            row
        })
        .collect();
    let h = hermite_normal_form(&aug);
    let kernel: Vec<IntRow> = h
        .into_iter()
        .filter(|row| row[..r].iter().all(Zero::is_zero))
        .map(|row| row[r..].to_vec())
        .collect();
    hermite_normal_form(&kernel)
}

/// Whether `v` lies in the lattice spanned by the HNF rows `hnf`.
pub fn contains(hnf: &[IntRow], v: &[BigInt]) -> bool {
    let mut w: IntRow = v.to_vec();
    for row in hnf {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else { continue };
        if w[..c].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (f, rem) = w[c].div_rem(&row[c]);
        if !rem.is_zero() {
            return false;
        }
        for (x, p) in w.iter_mut().zip(row) {
            *x -= &f * p;
        }
    }
    w.iter().all(Zero::is_zero)
}

pub fn lattice_eq(a: &[IntRow], b: &[IntRow]) -> bool {
    hermite_normal_form(a) == hermite_normal_form(b)
}

pub fn sublattice(a: &[IntRow], b: &[IntRow]) -> bool {
    let hb = hermite_normal_form(b);
    a.iter().all(|v| contains(&hb, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<IntRow> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn hnf_of_simple_lattice() {
        let h = hermite_normal_form(&big(&[&[2, 4], &[3, 5]]));
        assert_eq!(h, big(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn smith_of_diag() {
        let s = smith_invariants(&big(&[&[2, 0], &[0, 3]]));
        assert_eq!(s, vec![BigInt::from(1), BigInt::from(6)]);
        let s = smith_invariants(&big(&[&[4, 2], &[2, 4]]));
        assert_eq!(s, vec![BigInt::from(2), BigInt::from(6)]);
    }

    #[test]
    fn kernel_of_row() {
        let k = integer_kernel(&big(&[&[2, 1]]), 2);
        assert_eq!(k, big(&[&[1, -2]]));
        let k = integer_kernel(&big(&[&[6, 3, 2, 1]]), 4);
        assert_eq!(k.len(), 3);
        assert_eq!(k, big(&[&[1, 0, 0, -6], &[0, 1, 0, -3], &[0, 0, 1, -2]]));
    }

    #[test]
    fn membership() {
        let h = hermite_normal_form(&big(&[&[2, 0], &[0, 3]]));
        assert!(contains(&h, &big(&[&[4, -3]])[0]));
        assert!(!contains(&h, &big(&[&[1, 0]])[0]));
    }
}
