//! The embedded diagram catalogue.
//!
//! Exceptional elliptic/parabolic diagrams and the finite quasi-Lanner
//! catalogue (ranks 4-10) ship as `.cox` files compiled into the binary,
//! together with manifests listing name, rank, and expected classification.
//! Parameterized families (`A_n`, `B_n`, `D_n`, `I2(m)` and their affine
//! counterparts) are generated from [`Family`] instead of being stored.

use std::sync::OnceLock;

use crate::diagram::{parse_diagram, CoxeterMatrix};
use crate::spectral::min_eigenvalue;

use super::ql_data;
use super::{classify, numeric_kind, Family, Kind};

/// Tolerance of the numeric eigenvalue oracle used in self-checks.
pub const ORACLE_TOL: f64 = 1e-9;

static EXCEPTIONAL_MANIFEST: &str = include_str!("../../tables/manifest.tsv");

static EXCEPTIONAL_FILES: &[(&str, &str)] = &[
    ("e6.cox", include_str!("../../tables/e6.cox")),
    ("e7.cox", include_str!("../../tables/e7.cox")),
    ("e8.cox", include_str!("../../tables/e8.cox")),
    ("f4.cox", include_str!("../../tables/f4.cox")),
    ("h3.cox", include_str!("../../tables/h3.cox")),
    ("h4.cox", include_str!("../../tables/h4.cox")),
    ("aff_e6.cox", include_str!("../../tables/aff_e6.cox")),
    ("aff_e7.cox", include_str!("../../tables/aff_e7.cox")),
    ("aff_e8.cox", include_str!("../../tables/aff_e8.cox")),
    ("aff_f4.cox", include_str!("../../tables/aff_f4.cox")),
    ("aff_g2.cox", include_str!("../../tables/aff_g2.cox")),
];

/// One catalogued diagram.
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub name: String,
    pub rank: usize,
    pub expected: Kind,
    pub matrix: CoxeterMatrix,
}

/// The full embedded catalogue.
#[derive(Debug)]
pub struct TemplateTable {
    exceptional: Vec<TableEntry>,
    quasi_lanner: Vec<TableEntry>,
}

fn parse_manifest(manifest: &str, files: &[(&str, &str)], what: &str) -> Vec<TableEntry> {
    let mut out = Vec::new();
    for line in manifest.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 4, "{what} manifest line `{line}`");
        let name = fields[0].to_string();
        let rank: usize = fields[1]
            .parse()
            .unwrap_or_else(|_| panic!("{what} manifest rank in `{line}`"));
        let expected = match fields[2] {
            "elliptic" => Kind::Elliptic,
            "parabolic" => Kind::Parabolic,
            "indefinite" => Kind::Indefinite,
            other => panic!("{what} manifest kind `{other}`"),
        };
        let file = fields[3];
        let text = files
            .iter()
            .find(|(f, _)| *f == file)
            .unwrap_or_else(|| panic!("{what} manifest references missing file `{file}`"))
            .1;
        let matrix = parse_diagram(text).unwrap_or_else(|e| panic!("embedded table {file}: {e}"));
        assert_eq!(matrix.rank(), rank, "{what} manifest rank for {name}");
        out.push(TableEntry {
            name,
            rank,
            expected,
            matrix,
        });
    }
    out
}

impl TemplateTable {
    fn load() -> TemplateTable {
        TemplateTable {
            exceptional: parse_manifest(EXCEPTIONAL_MANIFEST, EXCEPTIONAL_FILES, "exceptional"),
            quasi_lanner: parse_manifest(
                ql_data::QUASI_LANNER_MANIFEST,
                ql_data::QUASI_LANNER_FILES,
                "quasi-Lanner",
            ),
        }
    }

    /// The catalogue, parsed once per process.
    pub fn global() -> &'static TemplateTable {
        static TABLE: OnceLock<TemplateTable> = OnceLock::new();
        TABLE.get_or_init(TemplateTable::load)
    }

    /// Exceptional elliptic and parabolic diagrams.
    pub fn exceptional(&self) -> &[TableEntry] {
        &self.exceptional
    }

    /// The quasi-Lanner catalogue, ranks 4-10 (Lanner diagrams included).
    pub fn quasi_lanner(&self) -> &[TableEntry] {
        &self.quasi_lanner
    }

    /// All connected elliptic catalogue instances with at most `max_rank`
    /// vertices (parameterized families instantiated per rank).
    pub fn elliptic_instances(&self, max_rank: usize) -> Vec<(Family, CoxeterMatrix)> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            for f in super::elliptic_families_of_rank(n) {
                out.push((f, f.diagram().to_matrix()));
            }
        }
        out
    }

    /// All connected parabolic catalogue instances with at most `max_order`
    /// vertices.
    pub fn parabolic_instances(&self, max_order: usize) -> Vec<(Family, CoxeterMatrix)> {
        let mut out = Vec::new();
        for n in 2..=max_order {
            for f in super::parabolic_families_of_order(n) {
                out.push((f, f.diagram().to_matrix()));
            }
        }
        out
    }

    /// Verifies that every catalogue entry classifies as its manifest says,
    /// by both the template classifier and the numeric eigenvalue oracle.
    pub fn self_check(&self) -> Result<(), String> {
        for e in self.exceptional.iter().chain(&self.quasi_lanner) {
            let by_tables = classify(&e.matrix.to_diagram()).kind;
            if by_tables != e.expected {
                return Err(format!(
                    "{}: classifier says {by_tables}, manifest says {}",
                    e.name, e.expected
                ));
            }
            let by_oracle = numeric_kind(&e.matrix, ORACLE_TOL);
            if by_oracle != e.expected {
                let eig = min_eigenvalue(&e.matrix.cosine_gram().to_f64_matrix());
                return Err(format!(
                    "{}: numeric oracle says {by_oracle} (min eigenvalue {eig:.3e}), manifest says {}",
                    e.name, e.expected
                ));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn catalogue_self_check() {
        TemplateTable::global().self_check().unwrap();
    }

    #[test]
    fn exceptional_files_match_programmatic_families() {
        let table = TemplateTable::global();
        for (name, family) in [
            ("E6", Family::E6),
            ("E7", Family::E7),
            ("E8", Family::E8),
            ("F4", Family::F4),
            ("H3", Family::H3),
            ("H4", Family::H4),
            ("E~6", Family::AffE6),
            ("E~7", Family::AffE7),
            ("E~8", Family::AffE8),
            ("F~4", Family::AffF4),
            ("G~2", Family::AffG2),
        ] {
            let entry = table
                .exceptional()
                .iter()
                .find(|e| e.name == name)
                .unwrap_or_else(|| panic!("missing entry {name}"));
            assert!(
                are_isomorphic(&entry.matrix.to_diagram(), &family.diagram()),
                "embedded {name} differs from the family template"
            );
        }
    }

    #[test]
    fn family_instances_classify_consistently() {
        let table = TemplateTable::global();
        for (f, m) in table.elliptic_instances(9) {
            assert_eq!(numeric_kind(&m, ORACLE_TOL), Kind::Elliptic, "family {f}");
        }
        for (f, m) in table.parabolic_instances(10) {
            assert_eq!(numeric_kind(&m, ORACLE_TOL), Kind::Parabolic, "family {f}");
        }
    }
}
