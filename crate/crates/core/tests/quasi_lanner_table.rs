//! Independent enumeration of the quasi-Lanner catalogue.
//!
//! A quasi-Lanner diagram is connected and indefinite with every proper
//! subdiagram elliptic or parabolic.  For ranks >= 4 such a diagram can
//! contain no infinite label and no label above 6: an edge labeled `inf` or
//! `m >= 7` together with any third vertex adjacent to one of its endpoints
//! induces an indefinite proper 3-vertex subdiagram, and connectivity forces
//! such a vertex to exist.  Deleting any vertex therefore leaves a positive
//! semidefinite diagram with labels in {2,...,6}, i.e. a disjoint union of
//! finite-label connected elliptic/parabolic templates.  The enumeration
//! below walks exactly these: every template multiset as a base, extended by
//! one vertex in all label patterns, pruning partial extensions whose
//! decided prefix is already indefinite (sound, since that prefix is a
//! proper induced subdiagram of every completion).
//!
//! The per-rank counts are cross-checked against the classification of
//! hyperbolic Coxeter simplices: 9 compact + 23 ideal in rank 4, 5 + 9 in
//! rank 5, then 12, 3, 4, 4, 3 ideal ones in ranks 6-10.

use coxkit_core::classify::{
    self, elliptic_families_of_rank, is_quasi_lanner, parabolic_families_of_order, Family, Kind,
    TemplateTable,
};
use coxkit_core::diagram::{CoxeterMatrix, Diagram, EdgeLabel};
use coxkit_core::iso::are_isomorphic;
use coxkit_core::spectral::min_eigenvalue;

const EXPECTED_COUNTS: &[(usize, usize)] =
    &[(4, 32), (5, 14), (6, 12), (7, 3), (8, 4), (9, 4), (10, 3)];

/// Connected elliptic/parabolic templates with `size` vertices and finite labels.
fn finite_connected_templates(size: usize) -> Vec<Diagram> {
    let mut out: Vec<Diagram> = elliptic_families_of_rank(size)
        .into_iter()
        .map(|f| f.diagram())
        .collect();
    out.extend(
        parabolic_families_of_order(size)
            .into_iter()
            .filter(|&f| f != Family::AffA1)
            .map(|f| f.diagram()),
    );
    out
}

/// Disjoint union of template pieces as one Coxeter matrix (cross labels 2).
fn disjoint_union(pieces: &[&Diagram]) -> CoxeterMatrix {
    let mut names = Vec::new();
    for (p, piece) in pieces.iter().enumerate() {
        for q in 0..piece.vertex_count() {
            names.push(format!("b{p}_{q}"));
        }
    }
    let mut m = CoxeterMatrix::new(names).unwrap();
    let mut offset = 0;
    for piece in pieces {
        for (i, j, l) in piece.edges() {
            m.set_label(offset + i, offset + j, l);
        }
        offset += piece.vertex_count();
    }
    m
}

/// All iso classes of infinite-label-free positive semidefinite diagrams on
/// `k` vertices: multisets of connected templates.
fn psd_bases(k: usize) -> Vec<CoxeterMatrix> {
    let templates: Vec<Vec<Diagram>> = (0..=k).map(finite_connected_templates).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();

    fn rec(
        remaining: usize,
        max_choice: (usize, usize),
        templates: &[Vec<Diagram>],
        stack: &mut Vec<(usize, usize)>,
        out: &mut Vec<CoxeterMatrix>,
    ) {
        if remaining == 0 {
            let pieces: Vec<&Diagram> = stack.iter().map(|&(s, i)| &templates[s][i]).collect();
            out.push(disjoint_union(&pieces));
            return;
        }
        for size in (1..=remaining.min(max_choice.0)).rev() {
            let idx_cap = if size == max_choice.0 {
                max_choice.1.min(templates[size].len())
            } else {
                templates[size].len()
            };
            for idx in 0..idx_cap {
                stack.push((size, idx));
                rec(remaining - size, (size, idx + 1), templates, stack, out);
                stack.pop();
            }
        }
    }

    rec(k, (k, usize::MAX), &templates, &mut stack, &mut out);
    out
}

/// True when the diagram is quasi-Lanner, checked with the exact classifier.
fn exact_quasi_lanner(d: &Diagram) -> bool {
    d.is_connected() && is_quasi_lanner(d).unwrap_or(false)
}

/// All quasi-Lanner diagrams (not deduplicated) extending `base` by one vertex.
fn quasi_lanner_extensions(base: &CoxeterMatrix) -> Vec<Diagram> {
    let k = base.rank();
    let mut names: Vec<String> = base.names().to_vec();
    names.push("x".to_string());
    let mut m = CoxeterMatrix::new(names).unwrap();
    for i in 0..k {
        for j in i + 1..k {
            m.set_label(i, j, base.label(i, j));
        }
    }

    let mut found = Vec::new();
    fn rec(m: &mut CoxeterMatrix, p: usize, k: usize, found: &mut Vec<Diagram>) {
        if p == k {
            let d = m.to_diagram();
            if exact_quasi_lanner(&d) {
                found.push(d);
            }
            return;
        }
        for label in [2u32, 3, 4, 5, 6] {
            m.set_label(p, k, EdgeLabel::Finite(label));
            // The decided prefix {0..=p, x} is a proper induced subdiagram
            // of every completion once p < k - 1, so an indefinite prefix
            // kills the whole subtree.  The final exact check never relies
            // on this float screen.
            let viable = if p < k - 1 {
                let subset: Vec<usize> = (0..=p).chain([k]).collect();
                let sub = m.induced(&subset);
                min_eigenvalue(&sub.cosine_gram().to_f64_matrix()) > -1e-9
            } else {
                true
            };
            if viable {
                rec(m, p + 1, k, found);
            }
        }
        m.set_label(p, k, EdgeLabel::Finite(2));
    }
    rec(&mut m, 0, k, &mut found);
    found
}

/// Iso classes of quasi-Lanner diagrams of the given rank.
fn enumerate_rank(rank: usize) -> Vec<Diagram> {
    let mut classes: Vec<Diagram> = Vec::new();
    for base in psd_bases(rank - 1) {
        for cand in quasi_lanner_extensions(&base) {
            if !classes.iter().any(|c| are_isomorphic(c, &cand)) {
                classes.push(cand);
            }
        }
    }
    classes
}

fn catalogue_of_rank(rank: usize) -> Vec<Diagram> {
    TemplateTable::global()
        .quasi_lanner()
        .iter()
        .filter(|e| e.rank == rank)
        .map(|e| e.matrix.to_diagram())
        .collect()
}

fn assert_same_up_to_iso(rank: usize, enumerated: &[Diagram], catalogued: &[Diagram]) {
    assert_eq!(
        enumerated.len(),
        catalogued.len(),
        "rank {rank}: enumeration found {} classes, catalogue has {}",
        enumerated.len(),
        catalogued.len()
    );
    for (k, d) in enumerated.iter().enumerate() {
        assert!(
            catalogued.iter().any(|c| are_isomorphic(c, d)),
            "rank {rank}: enumerated diagram {k} missing from catalogue:\n{}",
            d.to_matrix().to_cox_string()
        );
    }
}

#[test]
fn catalogue_counts_match_simplex_classification() {
    let table = TemplateTable::global();
    for &(rank, expected) in EXPECTED_COUNTS {
        let n = table
            .quasi_lanner()
            .iter()
            .filter(|e| e.rank == rank)
            .count();
        assert_eq!(n, expected, "rank {rank}");
    }
    assert_eq!(table.quasi_lanner().len(), 72);
}

#[test]
fn every_catalogue_entry_is_quasi_lanner() {
    for e in TemplateTable::global().quasi_lanner() {
        let d = e.matrix.to_diagram();
        assert!(
            exact_quasi_lanner(&d),
            "{} fails the quasi-Lanner predicate",
            e.name
        );
    }
}

#[test]
fn enumeration_matches_catalogue_ranks_4_to_6() {
    for rank in 4..=6 {
        let enumerated = enumerate_rank(rank);
        assert_same_up_to_iso(rank, &enumerated, &catalogue_of_rank(rank));
    }
}

#[test]
#[ignore = "full sweep; run with --ignored (release recommended)"]
fn enumeration_matches_catalogue_all_ranks() {
    for rank in 4..=10 {
        let enumerated = enumerate_rank(rank);
        assert_same_up_to_iso(rank, &enumerated, &catalogue_of_rank(rank));
    }
}

/// Rank 4 admits a full brute-force sweep over all 5^6 label assignments,
/// independent of the template-multiset enumeration above.
#[test]
fn rank4_brute_force_sweep() {
    let labels = [2u32, 3, 4, 5, 6];
    let mut classes: Vec<Diagram> = Vec::new();
    let names: Vec<String> = (0..4).map(|i| format!("v{i}")).collect();
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut assignment = [0usize; 6];
    loop {
        let mut m = CoxeterMatrix::new(names.clone()).unwrap();
        for (slot, &(i, j)) in pairs.iter().enumerate() {
            m.set_label(i, j, EdgeLabel::Finite(labels[assignment[slot]]));
        }
        let d = m.to_diagram();
        if d.is_connected()
            && exact_quasi_lanner(&d)
            && !classes.iter().any(|c| are_isomorphic(c, &d))
        {
            classes.push(d);
        }
        // Next assignment.
        let mut carry = 0;
        loop {
            assignment[carry] += 1;
            if assignment[carry] < labels.len() {
                break;
            }
            assignment[carry] = 0;
            carry += 1;
            if carry == 6 {
                break;
            }
        }
        if carry == 6 {
            break;
        }
    }
    assert_same_up_to_iso(4, &classes, &catalogue_of_rank(4));
}

#[test]
fn classifier_agrees_with_oracle_on_catalogue_deletions() {
    // Every single-vertex deletion of a catalogue entry classifies the same
    // way by tables and by the eigenvalue oracle.
    for e in TemplateTable::global().quasi_lanner() {
        let d = e.matrix.to_diagram();
        for skip in 0..d.vertex_count() {
            let rest: Vec<usize> = (0..d.vertex_count()).filter(|&v| v != skip).collect();
            let sub = d.induced_subdiagram(&rest);
            let exact = classify::classify(&sub).kind;
            let numeric = classify::numeric_kind(&sub.to_matrix(), 1e-9);
            assert_eq!(exact, numeric, "{} minus {}", e.name, d.name(skip));
            assert_ne!(exact, Kind::Indefinite);
        }
    }
}

/// Regenerates the embedded catalogue from the enumeration: writes the
/// `.cox` files, the manifest, and `src/classify/ql_data.rs`.  Development
/// tool; the committed outputs are frozen.
#[test]
#[ignore = "writes table files into the source tree"]
fn regenerate_quasi_lanner_tables() {
    use std::fmt::Write as _;
    use std::path::Path;

    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut manifest = String::from("# name\trank\tkind\tfile\n");
    let mut includes = String::new();

    for &(rank, expected) in EXPECTED_COUNTS {
        let classes = enumerate_rank(rank);
        assert_eq!(classes.len(), expected, "rank {rank} enumeration count");
        for (idx, d) in classes.iter().enumerate() {
            let idx = idx + 1;
            // Relabel canonically as v1..vr in the generated order.
            let names: Vec<String> = (1..=d.vertex_count()).map(|i| format!("v{i}")).collect();
            let mut m = CoxeterMatrix::new(names).unwrap();
            for (i, j, l) in d.edges() {
                m.set_label(i, j, l);
            }
            let file = format!("ql{rank:02}_{idx:02}.cox");
            let mut text = String::from("coxeter v1\n");
            writeln!(text, "# quasi-Lanner catalogue: rank {rank}, entry {idx}").unwrap();
            text.push_str(m.to_cox_string().strip_prefix("coxeter v1\n").unwrap());
            std::fs::write(root.join("tables").join(&file), text).unwrap();
            writeln!(manifest, "QL{rank}.{idx}\t{rank}\tindefinite\t{file}").unwrap();
            writeln!(
                includes,
                "    (\"{file}\", include_str!(\"../../tables/{file}\")),"
            )
            .unwrap();
        }
    }

    std::fs::write(root.join("tables/ql_manifest.tsv"), &manifest).unwrap();
    let module = format!(
        "//! Embedded quasi-Lanner catalogue (generated; see `tests/quasi_lanner_table.rs`).\n\n\
         pub(super) static QUASI_LANNER_MANIFEST: &str = include_str!(\"../../tables/ql_manifest.tsv\");\n\n\
         pub(super) static QUASI_LANNER_FILES: &[(&str, &str)] = &[\n{includes}];\n"
    );
    std::fs::write(root.join("src/classify/ql_data.rs"), module).unwrap();
}
