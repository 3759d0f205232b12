use crate::error::CliError;
use crate::report::Inputs;
use crate::{BurnsideCmd, CatalogCmd, DegreeCmd, DomainArgs, Global, GroupCmd, SchwartzCmd};
use eqcoh_core::burnside::{self, BurnsideElement, MarksVector, TableOfMarks};
use eqcoh_core::catalog::{almost_connected_reduce, catalog_names};
use eqcoh_core::degree::{brouwer_degree, equivariant_degree, DegreeConfig, Domain, DomainJson, Method};
use eqcoh_core::group::{FiniteGroup, GroupJson};
use eqcoh_core::poly::{PolynomialMap, TermJson};
use eqcoh_core::rational::{format_q, parse_q};
use eqcoh_core::rep::{OrthogonalRep, RepJson};
use eqcoh_core::schwartz::{self as sz, Cocycle, CocycleJson, ConvertOptions, Picture};
use serde_json::{json, Value};
use std::path::Path;

pub fn degree_config(g: &Global) -> DegreeConfig {
    let mut cfg = DegreeConfig::default();
    if let Some(t) = g.tol_jacobian {
        cfg.tol_jacobian = t;
    }
    if let Some(t) = g.tol_residual {
        cfg.tol_residual = t;
    }
    if let Some(n) = g.grid {
        cfg.grid = n;
    }
    cfg
}

fn load_group(path: &Path, g: &Global, inputs: &mut Inputs) -> Result<FiniteGroup, CliError> {
    let j: GroupJson = inputs.json(path)?;
    Ok(FiniteGroup::from_json(&j, g.cap)?)
}

fn load_map(path: &Path, nvars: Option<usize>, inputs: &mut Inputs) -> Result<PolynomialMap, CliError> {
    let j: Vec<Vec<TermJson>> = inputs.json(path)?;
    Ok(PolynomialMap::from_json(&j, nvars)?)
}

fn load_cocycle(path: &Path, g: &Global, inputs: &mut Inputs) -> Result<Cocycle, CliError> {
    let j: CocycleJson = inputs.json(path)?;
    Ok(Cocycle::from_json(&j, g.cap)?)
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn check_class(m: &TableOfMarks, class: usize) -> Result<(), CliError> {
    if class >= m.len() {
        return Err(CliError::Domain(format!("NotASubgroup: class {class} out of range (the group has {} classes)", m.len())));
    }
    Ok(())
}

pub fn group(c: &GroupCmd, g: &Global, inputs: &mut Inputs) -> Result<Value, CliError> {
    let GroupCmd::Classes { group } = c;
    let grp = load_group(group, g, inputs)?;
    let m = TableOfMarks::new(&grp);
    Ok(json!({
        "order": grp.order(),
        "class_count": m.len(),
        "classes": m.classes().to_json(),
        "labels": m.labels(),
    }))
}

pub fn burnside(c: &BurnsideCmd, g: &Global, inputs: &mut Inputs) -> Result<Value, CliError> {
    let group_path = match c {
        BurnsideCmd::Marks { group }
        | BurnsideCmd::Mul { group, .. }
        | BurnsideCmd::Check { group, .. }
        | BurnsideCmd::Ideal { group, .. }
        | BurnsideCmd::Quotient { group, .. }
        | BurnsideCmd::Res { group, .. }
        | BurnsideCmd::Ind { group, .. }
        | BurnsideCmd::Idempotents { group } => group,
    };
    let m = TableOfMarks::new(&load_group(group_path, g, inputs)?);
    let labels = m.labels();
    let out = match c {
        BurnsideCmd::Marks { .. } => json!({ "labels": labels, "marks": m.marks() }),
        BurnsideCmd::Mul { a, b, .. } => {
            let a: BurnsideElement = inputs.json(a)?;
            let b: BurnsideElement = inputs.json(b)?;
            json!({ "labels": labels, "product": burnside::mul(&m, &a, &b)? })
        }
        BurnsideCmd::Check { marks, .. } => {
            let v: MarksVector = inputs.json(marks)?;
            let r = burnside::membership_check(&m, &v)?;
            let mut out = to_value(&r);
            out["labels"] = to_value(&labels);
            out
        }
        BurnsideCmd::Ideal { power, .. } => {
            let i = ideal(&m, *power)?;
            json!({ "labels": labels, "power": power, "rank": i.rank(), "generators": to_value(&i.generators) })
        }
        BurnsideCmd::Quotient { power, .. } => {
            let q = burnside::quotient_invariants(&m, &ideal(&m, *power)?);
            json!({ "power": power, "free_rank": q.free_rank, "torsion": q.torsion, "description": q.describe() })
        }
        BurnsideCmd::Res { element, class, .. } | BurnsideCmd::Ind { element, class, .. } => {
            check_class(&m, *class)?;
            let sub = m.subgroup_ring(m.classes().representative(*class))?;
            let x: BurnsideElement = inputs.json(element)?;
            let (name, y, out_labels) = if matches!(c, BurnsideCmd::Res { .. }) {
                ("restriction", burnside::restriction(&m, &sub, &x)?, sub.marks.labels())
            } else {
                ("induction", burnside::induction(&m, &sub, &x)?, labels)
            };
            json!({
                "subgroup_class": class,
                "subgroup_order": sub.marks.group().order(),
                "subgroup_labels": sub.marks.labels(),
                "labels": out_labels,
                name: y,
            })
        }
        BurnsideCmd::Idempotents { .. } => {
            let e: Vec<Vec<String>> =
                burnside::rational_idempotents(&m).iter().map(|r| r.iter().map(format_q).collect()).collect();
            json!({ "labels": labels, "idempotents": e })
        }
    };
    Ok(out)
}

fn ideal(m: &TableOfMarks, power: u32) -> Result<burnside::IdealBasis, CliError> {
    if power == 0 {
        return Err(CliError::Domain("DimensionMismatch: ideal power must be at least 1".into()));
    }
    Ok(burnside::ideal_power(m, &burnside::augmentation_ideal(m), power)?)
}

pub fn catalog(c: &CatalogCmd) -> Result<Value, CliError> {
    Ok(match c {
        CatalogCmd::Reduce { name } => {
            let e = almost_connected_reduce(name)?;
            json!({
                "name": e.name,
                "maximal_compact": e.maximal_compact.token(),
                "maximal_compact_detail": e.maximal_compact,
                "burnside": e.burnside,
                "rank": e.rank,
                "finite_weyl_classes": e.finite_weyl_classes,
                "notes": e.notes,
                "version": e.version,
            })
        }
        CatalogCmd::List => json!({ "names": catalog_names() }),
    })
}

fn domain(args: &DomainArgs, n: usize, inputs: &mut Inputs) -> Result<Domain, CliError> {
    let d = match (&args.domain, &args.radius) {
        (Some(text), _) => {
            let j: DomainJson = if Path::new(text).is_file() { inputs.json(Path::new(text))? } else { inputs.inline("domain", text)? };
            Domain::from_json(&j)?
        }
        (None, Some(r)) => Domain::origin_ball(n, parse_q(r)?),
        (None, None) => Domain::unit_ball(n),
    };
    d.validate().map_err(|e| CliError::Domain(format!("InvalidDomain: {e}")))?;
    Ok(d)
}

pub fn degree(c: &DegreeCmd, g: &Global, cfg: &DegreeConfig, inputs: &mut Inputs) -> Result<Value, CliError> {
    Ok(match c {
        DegreeCmd::Brouwer { map, domain: d, method } => {
            let f = load_map(map, None, inputs)?;
            let method: Method = method.parse().map_err(|e: String| CliError::Parse(format!("ParseError: {e}")))?;
            let dom = domain(d, f.nvars(), inputs)?;
            let r = brouwer_degree(&f, &dom, method, cfg)?;
            let mut out = to_value(&r);
            out["domain"] = to_value(&dom.to_json());
            out
        }
        DegreeCmd::Equivariant { map, rep, domain: d } => {
            let j: RepJson = inputs.json(rep)?;
            let rho = OrthogonalRep::from_json(&j, g.cap)?;
            let f = load_map(map, Some(rho.dimension()), inputs)?;
            let dom = domain(d, f.nvars(), inputs)?;
            let m = TableOfMarks::new(rho.group());
            let e = equivariant_degree(&f, &rho, &dom, &m, cfg)?;
            let per_class: Vec<Value> = e
                .per_class
                .iter()
                .zip(&e.fixed_dimensions)
                .zip(&e.labels)
                .map(|((r, dim), label)| json!({ "class": label, "fixed_dimension": dim, "degree": r.value, "method": r.method.name() }))
                .collect();
            json!({
                "element": e.element,
                "labels": e.labels,
                "fixed_degrees": e.fixed_degrees,
                "per_class": per_class,
                "domain": dom.to_json(),
            })
        }
    })
}

/// `a..b` (inclusive), `a..=b`, or a comma-separated list.
pub fn parse_n_list(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Parse(format!("ParseError: malformed --n-list {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let list = if let Some((a, b)) = s.split_once("..") {
        let (lo, hi) = (num(a)?, num(b.trim_start_matches('='))?);
        (lo..=hi).collect()
    } else {
        s.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if list.is_empty() {
        return Err(bad());
    }
    Ok(list)
}

fn index_value(r: &sz::SchwartzIndex) -> Value {
    match r.value {
        Some(v) => v.into(),
        None => to_value(&r.element),
    }
}

fn cocycle_out(c: &Cocycle) -> Value {
    json!({ "cocycle": c.to_json() })
}

pub fn schwartz(c: &SchwartzCmd, g: &Global, cfg: &DegreeConfig, inputs: &mut Inputs) -> Result<Value, CliError> {
    Ok(match c {
        SchwartzCmd::Index { cocycle, n } => {
            let a = load_cocycle(cocycle, g, inputs)?;
            let gal = match n {
                Some(n) => sz::galerkin_at(&a, *n)?,
                None => sz::galerkin_subspace(&a)?,
            };
            let r = sz::schwartz_index_at(&a, gal.n, cfg)?;
            json!({
                "index": index_value(&r),
                "element": r.element,
                "labels": r.labels,
                "fixed_degrees": r.fixed_degrees,
                "n": r.n,
                "radius": format_q(&r.radius),
                "admissibility_margin": format_q(&r.admissibility_margin),
                "method": r.method,
                "galerkin": gal.to_json(),
            })
        }
        SchwartzCmd::Stabilize { cocycle, n_list } => {
            let a = load_cocycle(cocycle, g, inputs)?;
            let ns = match n_list {
                Some(s) => parse_n_list(s)?,
                None => {
                    let n0 = sz::minimal_truncation(&a);
                    (n0..=n0 + 8).collect()
                }
            };
            let ns: Vec<usize> = match &a.group {
                Some(gd) => ns.into_iter().filter(|&n| gd.is_aligned(n)).collect(),
                None => ns,
            };
            to_value(&sz::stabilization_check(&a, &ns, cfg)?)
        }
        SchwartzCmd::Sum { a, b } => {
            let (a, b) = (load_cocycle(a, g, inputs)?, load_cocycle(b, g, inputs)?);
            cocycle_out(&sz::sum(&a, &b)?)
        }
        SchwartzCmd::Cup { a, b } => {
            let (a, b) = (load_cocycle(a, g, inputs)?, load_cocycle(b, g, inputs)?);
            cocycle_out(&sz::cup_product(&a, &b)?)
        }
        SchwartzCmd::Inverse { a } => cocycle_out(&sz::inverse(&load_cocycle(a, g, inputs)?)),
        SchwartzCmd::Suspend { a } => cocycle_out(&sz::suspension(&load_cocycle(a, g, inputs)?)),
        SchwartzCmd::Convert { a, to, radius } => {
            let a = load_cocycle(a, g, inputs)?;
            let target: Picture = to.parse().map_err(|e: String| CliError::Parse(format!("ParseError: {e}")))?;
            let opts = ConvertOptions { radius: radius.as_deref().map(parse_q).transpose()?, ..Default::default() };
            cocycle_out(&sz::picture_convert(&a, target, &opts, cfg)?)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::parse_n_list;

    #[test]
    fn n_lists() {
        assert_eq!(parse_n_list("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_n_list("2..=3").unwrap(), vec![2, 3]);
        assert_eq!(parse_n_list("5, 7,9").unwrap(), vec![5, 7, 9]);
        assert!(parse_n_list("4..2").is_err());
        assert!(parse_n_list("x").is_err());
    }
}
