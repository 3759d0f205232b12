//! Exact degree rules: elimination of decoupled linear blocks, affine
//! maps, and endpoint signs on intervals.

use super::{lipschitz_bound, Certificate, DegreeError, DegreeResult, Domain, Method, Position};
use crate::matrix::RationalMatrix;
use crate::poly::{Polynomial, PolynomialMap};
use crate::rational::{format_q, rational_below, sign, to_f64, QList, Q};
use crate::univariate::{self, Bound};
use num_traits::{Signed, Zero};

/// A map reduced by removing linear coordinate blocks.
#[derive(Debug, Clone)]
pub struct Elimination {
    pub map: PolynomialMap,
    pub domain: Domain,
    /// `deg(original) = sign · deg(map on domain)`.
    pub sign: i32,
    pub removed: usize,
}

fn permutation_parity(order: &[usize]) -> i32 {
    let mut seen = vec![false; order.len()];
    let mut s = 1;
    for i in 0..order.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = order[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// Finds groups of components that are homogeneous linear in a set of
/// variables of the same size, touched by no other linear component, with
/// invertible coefficient block `A` and zero domain center on those
/// variables. Then `f(y, z) = (g(y, z), A·z)` is homotopic through
/// admissible maps to `(g(y, 0), A·z)`, so `deg f = ±sign(det A)·deg g(·, 0)`.
pub fn eliminate_decoupled(f: &PolynomialMap, d: &Domain) -> Elimination {
    let mut cur = Elimination { map: f.clone(), domain: d.clone(), sign: 1, removed: 0 };
    while let Some(next) = eliminate_once(&cur.map, &cur.domain) {
        cur = Elimination {
            map: next.map,
            domain: next.domain,
            sign: cur.sign * next.sign,
            removed: cur.removed + next.removed,
        };
    }
    cur
}

fn block(f: &PolynomialMap, comps: &[usize], vars: &[usize]) -> RationalMatrix {
    RationalMatrix::from_rows(
        comps.iter().map(|&j| vars.iter().map(|&v| f.component(j).linear_coefficient(v)).collect()).collect(),
    )
    .expect("rectangular block")
}

fn eliminate_once(f: &PolynomialMap, d: &Domain) -> Option<Elimination> {
    let n = f.nvars();
    let linear: Vec<usize> = (0..n).filter(|&j| f.component(j).is_homogeneous_linear()).collect();
    let support = |j: usize| (0..n).filter(move |&i| f.component(j).depends_on(i));
    // connected components of the bipartite component–variable graph
    let mut comp_of_var = vec![usize::MAX; n];
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut assigned = vec![false; n];
    for &start in &linear {
        if assigned[start] {
            continue;
        }
        let gid = groups.len();
        let (mut comps, mut vars) = (vec![start], Vec::new());
        assigned[start] = true;
        let mut k = 0;
        while k < comps.len() {
            for v in support(comps[k]) {
                if comp_of_var[v] == usize::MAX {
                    comp_of_var[v] = gid;
                    vars.push(v);
                    for &other in &linear {
                        if !assigned[other] && f.component(other).depends_on(v) {
                            assigned[other] = true;
                            comps.push(other);
                        }
                    }
                }
            }
            k += 1;
        }
        groups.push((comps, vars));
    }
    let mut drop_comps = Vec::new();
    let mut drop_vars = Vec::new();
    for (comps, vars) in groups {
        if comps.len() != vars.len() || vars.iter().any(|&v| !d.center()[v].is_zero()) {
            continue;
        }
        if block(f, &comps, &vars).determinant().is_zero() {
            continue;
        }
        drop_comps.extend(comps);
        drop_vars.extend(vars);
    }
    if drop_vars.is_empty() {
        return None;
    }
    drop_comps.sort_unstable();
    drop_vars.sort_unstable();
    let keep_vars: Vec<usize> = (0..n).filter(|v| !drop_vars.contains(v)).collect();
    let keep_comps: Vec<usize> = (0..n).filter(|j| !drop_comps.contains(j)).collect();
    let var_order: Vec<usize> = keep_vars.iter().chain(&drop_vars).copied().collect();
    let comp_order: Vec<usize> = keep_comps.iter().chain(&drop_comps).copied().collect();
    let det_sign = if block(f, &drop_comps, &drop_vars).determinant().is_positive() { 1 } else { -1 };
    let sign = det_sign * permutation_parity(&var_order) * permutation_parity(&comp_order);
    let subs: Vec<Polynomial> = (0..n)
        .map(|v| match keep_vars.iter().position(|&k| k == v) {
            Some(p) => Polynomial::var(keep_vars.len(), p),
            None => Polynomial::zero(keep_vars.len()),
        })
        .collect();
    let comps = keep_comps.iter().map(|&j| f.component(j).substitute(&subs)).collect();
    let map = PolynomialMap::new(keep_vars.len(), comps).expect("consistent variable count");
    let domain = d.slice(&keep_vars)?;
    Some(Elimination { map, domain, sign, removed: drop_vars.len() })
}

/// Exact degree of an affine map `x ↦ Ax + b`; `None` for a singular
/// consistent system on a box, which needs a numerical method.
pub fn linear_degree(f: &PolynomialMap, d: &Domain) -> Result<Option<DegreeResult>, DegreeError> {
    let a = f.linear_part();
    let b = f.constant_part();
    let minus_b: Vec<Q> = b.iter().map(|x| -x).collect();
    let det = a.determinant();
    let result = |value: i64, margin: f64, zero: Option<String>| DegreeResult {
        value,
        method: Method::Linear,
        certificate: Certificate::Linear { determinant: format_q(&det), zero_position: zero },
        admissibility_margin: rational_below(margin * 0.999),
        eliminated: 0,
        cross_check: None,
    };
    let af = a.to_f64();
    let sv = af.svd(false, false).singular_values;
    let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    let splus = sv.iter().cloned().filter(|&s| s > 1e-12).fold(f64::INFINITY, f64::min);
    if !det.is_zero() {
        let z = a.solve(&minus_b).expect("invertible");
        let zf: Vec<f64> = z.iter().map(to_f64).collect();
        let gap = d.boundary_distance(&zf).abs();
        return match d.position(&z) {
            Position::Boundary => {
                Err(DegreeError::BoundaryZeroSuspected(format!("the unique zero {} lies on the boundary", QList(&z))))
            }
            Position::Inside => Ok(Some(result(sign(&det) as i64, smin * gap, Some(format!("inside at {}", QList(&z)))))),
            Position::Outside => Ok(Some(result(0, smin * gap, Some(format!("outside at {}", QList(&z)))))),
        };
    }
    match a.solve(&minus_b) {
        None => {
            // |Ax + b| ≥ distance from −b to the column space of A
            let cs = a.column_space();
            let resid = if cs.is_empty() {
                b.clone()
            } else {
                let m = RationalMatrix::from_columns(a.rows(), &cs);
                let gram = m.transpose().mul(&m);
                let coef = gram.solve(&m.transpose().mul_vec(&b)).expect("independent columns");
                let proj = m.mul_vec(&coef);
                b.iter().zip(&proj).map(|(x, y)| x - y).collect()
            };
            let r = resid.iter().map(|x| to_f64(x).powi(2)).sum::<f64>().sqrt();
            Ok(Some(result(0, r, None)))
        }
        Some(x0) => {
            let (center, radius, weights) = match d {
                Domain::Ball { center, radius } => (center, radius, vec![Q::from_integer(1.into()); center.len()]),
                Domain::Ellipsoid { center, radius, weights } => (center, radius, weights.clone()),
                Domain::Box { .. } => return Ok(None),
            };
            // weighted distance² from the center to x0 + ker A
            let w = RationalMatrix::diagonal(&weights);
            let k = a.nullspace();
            let km = RationalMatrix::from_columns(a.rows(), &k);
            let diff: Vec<Q> = x0.iter().zip(center).map(|(x, c)| x - c).collect();
            let gram = km.transpose().mul(&w).mul(&km);
            let t = gram.solve(&km.transpose().mul(&w).mul_vec(&diff)).expect("independent kernel basis");
            let nearest: Vec<Q> = diff.iter().zip(km.mul_vec(&t)).map(|(x, y)| x - y).collect();
            let d2: Q = nearest.iter().zip(&weights).map(|(x, w)| w * x * x).sum();
            if d2 <= radius * radius {
                return Err(DegreeError::BoundaryZeroSuspected(
                    "a positive-dimensional affine zero set meets the domain".into(),
                ));
            }
            // |A(x − x0)| ≥ σ⁺·dist(x, x0 + ker A) with σ⁺ the least nonzero singular value
            let wmax = weights.iter().map(to_f64).fold(0.0, f64::max);
            let gap = (to_f64(&d2).sqrt() - to_f64(radius)) / wmax.sqrt();
            Ok(Some(result(0, splus * gap, None)))
        }
    }
}

/// Exact one-dimensional degree `(sign f(b) − sign f(a)) / 2`. Irrational
/// endpoints are bracketed until a Sturm count shows no root in the bracket.
pub fn endpoint_degree(f: &PolynomialMap, d: &Domain) -> Result<DegreeResult, DegreeError> {
    let p = f.component(0);
    let coeffs = p.univariate_coefficients();
    let c = d.center()[0].clone();
    let (exact, e2) = d.interval();
    let lip = lipschitz_bound(f, d);
    let (sa, sb, margin) = match exact {
        Some((a, b)) => {
            let (fa, fb) = (p.eval(std::slice::from_ref(&a)), p.eval(std::slice::from_ref(&b)));
            if fa.is_zero() || fb.is_zero() {
                let at = if fa.is_zero() { a } else { b };
                return Err(DegreeError::BoundaryZeroSuspected(format!("f vanishes at the endpoint {}", format_q(&at))));
            }
            let m = to_f64(&fa.abs()).min(to_f64(&fb.abs()));
            (sign(&fa), sign(&fb), rational_below(m * 0.999))
        }
        None => {
            let mut tol = Q::new(1.into(), 1000.into());
            let mut tries = 0;
            loop {
                let (lo, hi) = univariate::sqrt_bracket(&e2, &tol);
                let left = (&c - &hi, &c - &lo);
                let right = (&c + &lo, &c + &hi);
                let clean = |(x, y): &(Q, Q)| {
                    !univariate::eval(&coeffs, x).is_zero()
                        && univariate::count_distinct_roots(&coeffs, &Bound::Finite(x.clone()), &Bound::Finite(y.clone())) == 0
                };
                if clean(&left) && clean(&right) {
                    let (fa, fb) = (univariate::eval(&coeffs, &left.0), univariate::eval(&coeffs, &right.0));
                    let width = to_f64(&(&hi - &lo));
                    let m = to_f64(&fa.abs()).min(to_f64(&fb.abs())) - lip * width;
                    if m > 0.0 {
                        break (sign(&fa), sign(&fb), rational_below(m * 0.999));
                    }
                }
                tries += 1;
                if tries > 40 {
                    return Err(DegreeError::BoundaryZeroSuspected("a root lies at an irrational endpoint".into()));
                }
                tol /= Q::from_integer(1000.into());
            }
        }
    };
    Ok(DegreeResult {
        value: ((sb - sa) / 2) as i64,
        method: Method::Endpoint,
        certificate: Certificate::Endpoint { left_sign: sa, right_sign: sb },
        admissibility_margin: margin,
        eliminated: 0,
        cross_check: None,
    })
}
