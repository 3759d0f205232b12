//! Static catalog reducing almost connected Lie groups to their maximal
//! compact subgroup, with the resulting Burnside ring description.

use crate::burnside::TableOfMarks;
use crate::group::library;
use serde::{Deserialize, Serialize};

pub const CATALOG_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("UnknownGroup: {0:?} is not in the catalog")]
    UnknownGroup(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MaximalCompact {
    /// A finite group, given by its fixture name.
    Finite { name: String, order: usize },
    Torus { rank: u32 },
    /// A compact group of neither kind, named symbolically.
    Named { name: String },
}

impl MaximalCompact {
    pub fn token(&self) -> String {
        match self {
            MaximalCompact::Finite { name, .. } => name.clone(),
            MaximalCompact::Torus { rank } => format!("TORUS({rank})"),
            MaximalCompact::Named { name } => name.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieCatalogEntry {
    pub name: String,
    pub maximal_compact: MaximalCompact,
    /// Closed subgroups with finite Weyl group (up to conjugacy), as text.
    pub finite_weyl_classes: Vec<String>,
    /// Additive structure of the Burnside ring, e.g. `"Z"` or `"Z^4"`.
    pub burnside: String,
    /// Rank of `A(K)`; `None` when free of infinite rank.
    pub rank: Option<usize>,
    pub notes: String,
    pub version: u32,
}

fn torus_entry(name: &str, rank: u32, notes: &str) -> LieCatalogEntry {
    LieCatalogEntry {
        name: name.into(),
        maximal_compact: MaximalCompact::Torus { rank },
        finite_weyl_classes: vec![format!("T^{rank}")],
        burnside: "Z".into(),
        rank: Some(1),
        notes: format!(
            "{notes} A closed subgroup H of a torus T has Weyl group T/H, which is finite only for H = T, so A(T^{rank}) is Z generated by [T/T]."
        ),
        version: CATALOG_VERSION,
    }
}

/// Looks up `name`; finite-group fixture names are accepted verbatim.
pub fn almost_connected_reduce(name: &str) -> Result<LieCatalogEntry, CatalogError> {
    let entry = match name {
        "SL2R" => torus_entry("SL2R", 1, "Maximal compact subgroup SO(2) (Iwasawa decomposition KAN)."),
        "GL2R+" | "GL2Rplus" => torus_entry(name, 1, "Maximal compact subgroup SO(2); GL+(2,R) retracts onto it."),
        "SO2" | "U1" | "S1" => torus_entry(name, 1, "A torus is its own maximal compact subgroup."),
        "Rn" => LieCatalogEntry {
            name: "Rn".into(),
            maximal_compact: MaximalCompact::Finite { name: "C1".into(), order: 1 },
            finite_weyl_classes: vec!["1".into()],
            burnside: "Z".into(),
            rank: Some(1),
            notes: "The vector group is contractible; its maximal compact subgroup is trivial and A(1) = Z.".into(),
            version: CATALOG_VERSION,
        },
        "SL2C" => LieCatalogEntry {
            name: "SL2C".into(),
            maximal_compact: MaximalCompact::Named { name: "SU(2)".into() },
            finite_weyl_classes: vec![
                "SU(2)".into(),
                "N(T)".into(),
                "T".into(),
                "binary dihedral Q_4n (n >= 2)".into(),
                "binary tetrahedral".into(),
                "binary octahedral".into(),
                "binary icosahedral".into(),
            ],
            burnside: "Z^(infinity)".into(),
            rank: None,
            notes: "Maximal compact subgroup SU(2). The finite subgroups other than cyclic ones have finite normalizers, so infinitely many classes have finite Weyl group.".into(),
            version: CATALOG_VERSION,
        },
        "O2_as_compact" | "O2" => LieCatalogEntry {
            name: name.into(),
            maximal_compact: MaximalCompact::Named { name: "O(2)".into() },
            finite_weyl_classes: vec!["O(2)".into(), "SO(2)".into(), "D_n (n >= 1)".into()],
            burnside: "Z^(infinity)".into(),
            rank: None,
            notes: "O(2) is compact. W(O(2)) = 1 and W(SO(2)) = O(2)/SO(2) = Z/2. The dihedral subgroup D_n has normalizer D_2n, so W(D_n) = Z/2 is finite as well; cyclic subgroups C_n have Weyl group O(2)/C_n, which is infinite. The two connected-component classes SO(2), O(2) generate a rank-2 subring.".into(),
            version: CATALOG_VERSION,
        },
        _ => {
            let g = library::by_name(name).ok_or_else(|| CatalogError::UnknownGroup(name.into()))?;
            let k = TableOfMarks::new(&g).len();
            LieCatalogEntry {
                name: name.into(),
                maximal_compact: MaximalCompact::Finite { name: name.into(), order: g.order() },
                finite_weyl_classes: vec![format!("all {k} conjugacy classes of subgroups")],
                burnside: if k == 1 { "Z".into() } else { format!("Z^{k}") },
                rank: Some(k),
                notes: "A finite group is its own maximal compact subgroup.".into(),
                version: CATALOG_VERSION,
            }
        }
    };
    Ok(entry)
}

pub fn catalog_names() -> &'static [&'static str] {
    &["SL2R", "GL2R+", "SO2", "Rn", "SL2C", "O2_as_compact"]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2r_reduces_to_circle() {
        let e = almost_connected_reduce("SL2R").unwrap();
        assert_eq!(e.maximal_compact.token(), "TORUS(1)");
        assert_eq!(e.burnside, "Z");
    }

    #[test]
    fn vector_group_is_trivial() {
        let e = almost_connected_reduce("Rn").unwrap();
        assert_eq!(e.maximal_compact, MaximalCompact::Finite { name: "C1".into(), order: 1 });
        assert_eq!(e.rank, Some(1));
    }

    #[test]
    fn orthogonal_group_lists_component_classes() {
        let e = almost_connected_reduce("O2_as_compact").unwrap();
        assert!(e.finite_weyl_classes.contains(&"SO(2)".to_string()));
        assert!(e.finite_weyl_classes.contains(&"O(2)".to_string()));
    }

    #[test]
    fn finite_groups_verbatim_and_unknown_names() {
        assert_eq!(almost_connected_reduce("S3").unwrap().burnside, "Z^4");
        assert_eq!(almost_connected_reduce("nope"), Err(CatalogError::UnknownGroup("nope".into())));
        for n in catalog_names() {
            assert!(almost_connected_reduce(n).is_ok());
        }
    }
}
