//! Classification of Coxeter diagrams.
//!
//! The classifier of record is table-driven: a connected diagram is matched
//! by labeled-graph isomorphism against the catalogue of connected elliptic
//! diagrams, then against the connected parabolic (affine) ones; anything
//! left over is indefinite, which is complete by the classification of
//! connected diagrams.  Floating point appears only in the numeric oracle
//! ([`numeric_kind`]) used to cross-check the tables.

mod ql_data;
mod tables;

pub use tables::{TableEntry, TemplateTable};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{CoxeterMatrix, Diagram, Distance, EdgeLabel};
use crate::iso::are_isomorphic;
use crate::spectral::min_eigenvalue;

/// Definiteness class of the cosine Gram form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Elliptic,
    Parabolic,
    Indefinite,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Elliptic => write!(f, "elliptic"),
            Kind::Parabolic => write!(f, "parabolic"),
            Kind::Indefinite => write!(f, "indefinite"),
        }
    }
}

/// Irreducible family of a connected elliptic or parabolic diagram.
///
/// Affine families are written with a trailing tilde, e.g. `A~2` for the
/// 3-cycle.  `I2(m)` covers the dihedral diagrams with `m >= 5` (so `I2(6)`
/// rather than a separate `G2` name).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
    AffA1,
    AffA(usize),
    AffB(usize),
    AffC(usize),
    AffD(usize),
    AffE6,
    AffE7,
    AffE8,
    AffF4,
    AffG2,
}

impl Family {
    /// Number of vertices of the diagram (affine rank plus one).
    pub fn vertex_count(self) -> usize {
        match self {
            Family::A(n) | Family::B(n) | Family::D(n) => n,
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            Family::F4 => 4,
            Family::H3 => 3,
            Family::H4 => 4,
            Family::I2(_) => 2,
            Family::AffA1 => 2,
            Family::AffA(n) | Family::AffB(n) | Family::AffC(n) | Family::AffD(n) => n + 1,
            Family::AffE6 => 7,
            Family::AffE7 => 8,
            Family::AffE8 => 9,
            Family::AffF4 => 5,
            Family::AffG2 => 3,
        }
    }

    pub fn is_affine(self) -> bool {
        matches!(
            self,
            Family::AffA1
                | Family::AffA(_)
                | Family::AffB(_)
                | Family::AffC(_)
                | Family::AffD(_)
                | Family::AffE6
                | Family::AffE7
                | Family::AffE8
                | Family::AffF4
                | Family::AffG2
        )
    }

    /// Reference diagram for the family, on vertices `t0, t1, ...`.
    pub fn diagram(self) -> Diagram {
        let t = EdgeLabel::Finite(3);
        match self {
            Family::A(n) => {
                assert!(n >= 1);
                path_diagram(&vec![t; n - 1])
            }
            Family::B(n) => {
                assert!(n >= 2);
                let mut labels = vec![t; n - 1];
                labels[n - 2] = EdgeLabel::Finite(4);
                path_diagram(&labels)
            }
            Family::D(n) => {
                assert!(n >= 4);
                tripod_diagram(1, 1, n - 3)
            }
            Family::E6 => tripod_diagram(1, 2, 2),
            Family::E7 => tripod_diagram(1, 2, 3),
            Family::E8 => tripod_diagram(1, 2, 4),
            Family::F4 => path_diagram(&[t, EdgeLabel::Finite(4), t]),
            Family::H3 => path_diagram(&[EdgeLabel::Finite(5), t]),
            Family::H4 => path_diagram(&[EdgeLabel::Finite(5), t, t]),
            Family::I2(m) => {
                assert!(m >= 3);
                path_diagram(&[EdgeLabel::Finite(m)])
            }
            Family::AffA1 => path_diagram(&[EdgeLabel::Infinite]),
            Family::AffA(n) => {
                assert!(n >= 2);
                cycle_diagram(n + 1)
            }
            Family::AffB(n) => {
                assert!(n >= 3);
                // Fork at one end, a 4-labeled edge at the other.
                let mut d = tripod_edges(1, 1, n - 2);
                let last = d.len();
                d[last - 1].2 = EdgeLabel::Finite(4);
                diagram_from_edges(n + 1, &d)
            }
            Family::AffC(n) => {
                assert!(n >= 2);
                let mut labels = vec![t; n];
                labels[0] = EdgeLabel::Finite(4);
                labels[n - 1] = EdgeLabel::Finite(4);
                path_diagram(&labels)
            }
            Family::AffD(n) => {
                assert!(n >= 4);
                // Forks at both ends of a path.
                let m = n + 1;
                let mut edges = vec![(0, 2, t), (1, 2, t)];
                for k in 2..m - 3 {
                    edges.push((k, k + 1, t));
                }
                edges.push((m - 3, m - 2, t));
                edges.push((m - 3, m - 1, t));
                diagram_from_edges(m, &edges)
            }
            Family::AffE6 => tripod_diagram(2, 2, 2),
            Family::AffE7 => tripod_diagram(1, 3, 3),
            Family::AffE8 => tripod_diagram(1, 2, 5),
            Family::AffF4 => path_diagram(&[t, t, EdgeLabel::Finite(4), t]),
            Family::AffG2 => path_diagram(&[t, EdgeLabel::Finite(6)]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(n) => write!(f, "A{n}"),
            Family::B(n) => write!(f, "B{n}"),
            Family::D(n) => write!(f, "D{n}"),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            Family::E8 => write!(f, "E8"),
            Family::F4 => write!(f, "F4"),
            Family::H3 => write!(f, "H3"),
            Family::H4 => write!(f, "H4"),
            Family::I2(m) => write!(f, "I2({m})"),
            Family::AffA1 => write!(f, "A~1"),
            Family::AffA(n) => write!(f, "A~{n}"),
            Family::AffB(n) => write!(f, "B~{n}"),
            Family::AffC(n) => write!(f, "C~{n}"),
            Family::AffD(n) => write!(f, "D~{n}"),
            Family::AffE6 => write!(f, "E~6"),
            Family::AffE7 => write!(f, "E~7"),
            Family::AffE8 => write!(f, "E~8"),
            Family::AffF4 => write!(f, "F~4"),
            Family::AffG2 => write!(f, "G~2"),
        }
    }
}

/// Classification result: the kind, and for elliptic/parabolic diagrams the
/// irreducible family of each connected component (in component order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramType {
    pub kind: Kind,
    pub families: Vec<Family>,
}

impl DiagramType {
    fn indefinite() -> Self {
        DiagramType {
            kind: Kind::Indefinite,
            families: Vec::new(),
        }
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.families.is_empty() {
            write!(f, "{}", self.kind)
        } else {
            let fams: Vec<String> = self.families.iter().map(|x| x.to_string()).collect();
            write!(f, "{} ({})", self.kind, fams.join(" + "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("diagram is not connected")]
    NotConnected,
    #[error("diagram has {0} vertices; at least {1} required")]
    TooSmall(usize, usize),
    #[error("diagram is indefinite; operation needs an elliptic or parabolic diagram")]
    IndefiniteInput,
}

pub(crate) fn path_diagram(labels: &[EdgeLabel]) -> Diagram {
    let edges: Vec<(usize, usize, EdgeLabel)> = labels
        .iter()
        .enumerate()
        .map(|(i, &l)| (i, i + 1, l))
        .collect();
    diagram_from_edges(labels.len() + 1, &edges)
}

pub(crate) fn cycle_diagram(n: usize) -> Diagram {
    let t = EdgeLabel::Finite(3);
    let mut edges: Vec<(usize, usize, EdgeLabel)> = (0..n - 1).map(|i| (i, i + 1, t)).collect();
    edges.push((0, n - 1, t));
    diagram_from_edges(n, &edges)
}

fn tripod_edges(a: usize, b: usize, c: usize) -> Vec<(usize, usize, EdgeLabel)> {
    // Center is vertex 0; arms of a, b, c vertices follow.
    let t = EdgeLabel::Finite(3);
    let mut edges = Vec::new();
    let mut next = 1;
    for &arm in &[a, b, c] {
        let mut prev = 0;
        for _ in 0..arm {
            edges.push((prev, next, t));
            prev = next;
            next += 1;
        }
    }
    edges
}

/// Star of three paths with `a`, `b`, `c` vertices glued at a common center.
pub(crate) fn tripod_diagram(a: usize, b: usize, c: usize) -> Diagram {
    diagram_from_edges(a + b + c + 1, &tripod_edges(a, b, c))
}

pub(crate) fn diagram_from_edges(n: usize, edges: &[(usize, usize, EdgeLabel)]) -> Diagram {
    let names: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
    let mut m = CoxeterMatrix::new(names).expect("generated names are distinct");
    for &(i, j, l) in edges {
        m.set_label(i, j, l);
    }
    m.to_diagram()
}

/// Elliptic candidate families with exactly `n` vertices.
pub fn elliptic_families_of_rank(n: usize) -> Vec<Family> {
    let mut out = Vec::new();
    match n {
        0 => {}
        1 => out.push(Family::A(1)),
        2 => out.extend([Family::A(2), Family::B(2), Family::I2(5), Family::I2(6)]),
        _ => {
            out.push(Family::A(n));
            out.push(Family::B(n));
            if n >= 4 {
                out.push(Family::D(n));
            }
            match n {
                3 => out.push(Family::H3),
                4 => out.extend([Family::F4, Family::H4]),
                6 => out.push(Family::E6),
                7 => out.push(Family::E7),
                8 => out.push(Family::E8),
                _ => {}
            }
        }
    }
    out
}

/// Parabolic (affine) candidate families with exactly `n` vertices.
pub fn parabolic_families_of_order(n: usize) -> Vec<Family> {
    let mut out = Vec::new();
    match n {
        0 | 1 => {}
        2 => out.push(Family::AffA1),
        _ => {
            out.push(Family::AffA(n - 1));
            out.push(Family::AffC(n - 1));
            if n >= 4 {
                out.push(Family::AffB(n - 1));
            }
            if n >= 5 {
                out.push(Family::AffD(n - 1));
            }
            match n {
                3 => out.push(Family::AffG2),
                5 => out.push(Family::AffF4),
                7 => out.push(Family::AffE6),
                8 => out.push(Family::AffE7),
                9 => out.push(Family::AffE8),
                _ => {}
            }
        }
    }
    out
}

/// Classifies a connected, nonempty diagram by template matching.
pub fn classify_connected(d: &Diagram) -> DiagramType {
    assert!(!d.is_empty(), "classify_connected needs a nonempty diagram");
    debug_assert!(
        d.is_connected(),
        "classify_connected needs a connected diagram"
    );
    let n = d.vertex_count();

    if n == 1 {
        return DiagramType {
            kind: Kind::Elliptic,
            families: vec![Family::A(1)],
        };
    }
    if n == 2 {
        let family = match d.label_between(0, 1) {
            EdgeLabel::Finite(2) => unreachable!("label-2 pair is disconnected"),
            EdgeLabel::Finite(3) => Family::A(2),
            EdgeLabel::Finite(4) => Family::B(2),
            EdgeLabel::Finite(m) => Family::I2(m),
            EdgeLabel::Infinite => {
                return DiagramType {
                    kind: Kind::Parabolic,
                    families: vec![Family::AffA1],
                }
            }
        };
        return DiagramType {
            kind: Kind::Elliptic,
            families: vec![family],
        };
    }

    // Connected elliptic diagrams are trees (n - 1 edges) and connected
    // parabolic ones have at most n edges (the only cycle is the A~ family),
    // so anything denser is indefinite without any matching.
    if d.edge_count() > n {
        return DiagramType::indefinite();
    }

    for family in elliptic_families_of_rank(n) {
        if are_isomorphic(d, &family.diagram()) {
            return DiagramType {
                kind: Kind::Elliptic,
                families: vec![family],
            };
        }
    }
    for family in parabolic_families_of_order(n) {
        if are_isomorphic(d, &family.diagram()) {
            return DiagramType {
                kind: Kind::Parabolic,
                families: vec![family],
            };
        }
    }
    DiagramType::indefinite()
}

/// Classifies an arbitrary diagram componentwise.
///
/// Elliptic iff all components are elliptic; parabolic iff all components
/// are elliptic or parabolic with at least one parabolic; indefinite
/// otherwise.  The empty diagram is elliptic with no families.
pub fn classify(d: &Diagram) -> DiagramType {
    let mut families = Vec::new();
    let mut kind = Kind::Elliptic;
    for comp in d.connected_components() {
        let sub = d.induced_subdiagram(&comp);
        let t = classify_connected(&sub);
        match t.kind {
            Kind::Indefinite => return DiagramType::indefinite(),
            Kind::Parabolic => kind = Kind::Parabolic,
            Kind::Elliptic => {}
        }
        families.extend(t.families);
    }
    DiagramType { kind, families }
}

/// Numeric oracle: classifies by the smallest eigenvalue of the cosine Gram
/// matrix at the given tolerance.  Test and self-check use only.
pub fn numeric_kind(m: &CoxeterMatrix, tol: f64) -> Kind {
    let eig = min_eigenvalue(&m.cosine_gram().to_f64_matrix());
    if eig > tol {
        Kind::Elliptic
    } else if eig >= -tol {
        Kind::Parabolic
    } else {
        Kind::Indefinite
    }
}

/// True iff the diagram is indefinite and every vertex-deleted subdiagram is
/// elliptic or parabolic.
///
/// Checking vertex deletions suffices for all proper subdiagrams because
/// principal submatrices of positive-semidefinite matrices stay positive
/// semidefinite.
pub fn is_quasi_lanner(d: &Diagram) -> Result<bool, ClassifyError> {
    if !d.is_connected() {
        return Err(ClassifyError::NotConnected);
    }
    if d.vertex_count() < 3 {
        return Err(ClassifyError::TooSmall(d.vertex_count(), 3));
    }
    if classify(d).kind != Kind::Indefinite {
        return Ok(false);
    }
    let n = d.vertex_count();
    for skip in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&v| v != skip).collect();
        if classify(&d.induced_subdiagram(&rest)).kind == Kind::Indefinite {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-diagram diameter data for the embedded quasi-Lanner catalogue.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QlDiameterEntry {
    pub name: String,
    pub rank: usize,
    pub diameter: Distance,
    /// Vertex pairs at distance exactly 8, by name.
    pub distance8_pairs: Vec<(String, String)>,
}

/// Diameter sweep over the quasi-Lanner catalogue.
///
/// `at_most_one_pair_per_diagram` and `total_distance8_pairs` expose both
/// readings of the uniqueness claim (per diagram and across the whole list).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QlDiameterReport {
    pub entries: Vec<QlDiameterEntry>,
    pub all_within_8: bool,
    pub at_most_one_pair_per_diagram: bool,
    pub total_distance8_pairs: usize,
}

pub fn quasi_lanner_diameter_report(table: &TemplateTable) -> QlDiameterReport {
    let mut entries = Vec::new();
    for e in table.quasi_lanner() {
        let d = e.matrix.to_diagram();
        let mut diameter = Distance::Finite(0);
        let mut pairs = Vec::new();
        for u in 0..d.vertex_count() {
            for v in u + 1..d.vertex_count() {
                let dist = d.distance(u, v);
                diameter = diameter.max(dist);
                if dist == Distance::Finite(8) {
                    pairs.push((d.name(u).to_string(), d.name(v).to_string()));
                }
            }
        }
        entries.push(QlDiameterEntry {
            name: e.name.clone(),
            rank: e.rank,
            diameter,
            distance8_pairs: pairs,
        });
    }
    QlDiameterReport {
        all_within_8: entries.iter().all(|e| e.diameter <= Distance::Finite(8)),
        at_most_one_pair_per_diagram: entries.iter().all(|e| e.distance8_pairs.len() <= 1),
        total_distance8_pairs: entries.iter().map(|e| e.distance8_pairs.len()).sum(),
        entries,
    }
}

/// Result of the pair-count bound check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCount {
    pub count: usize,
    pub bound: usize,
    pub ok: bool,
}

/// Counts unordered vertex pairs within distance `c` and compares with
/// `c * rank`, where rank means the vertex count.
pub fn pair_count_check(d: &Diagram, c: u32) -> Result<PairCount, ClassifyError> {
    if !d.is_connected() {
        return Err(ClassifyError::NotConnected);
    }
    if classify(d).kind == Kind::Indefinite {
        return Err(ClassifyError::IndefiniteInput);
    }
    let n = d.vertex_count();
    let mut count = 0;
    for u in 0..n {
        for v in u + 1..n {
            if d.distance(u, v) <= Distance::Finite(c) {
                count += 1;
            }
        }
    }
    let bound = c as usize * n;
    Ok(PairCount {
        count,
        bound,
        ok: count <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;

    fn classify_cox(text: &str) -> DiagramType {
        classify(&parse_diagram(text).unwrap().to_diagram())
    }

    #[test]
    fn single_vertex_is_a1() {
        let t = classify_cox("coxeter v1\nvertices a\n");
        assert_eq!(t.kind, Kind::Elliptic);
        assert_eq!(t.families, vec![Family::A(1)]);
    }

    #[test]
    fn infinite_edge_is_affine_a1() {
        let t = classify_cox("coxeter v1\nvertices a b\nedge a b inf\n");
        assert_eq!(t.kind, Kind::Parabolic);
        assert_eq!(t.families, vec![Family::AffA1]);
    }

    #[test]
    fn triangle_of_threes_is_affine_a2() {
        let t = classify_cox("coxeter v1\nvertices a b c\nedge a b 3\nedge b c 3\nedge a c 3\n");
        assert_eq!(t.kind, Kind::Parabolic);
        assert_eq!(t.families, vec![Family::AffA(2)]);
    }

    #[test]
    fn h4_path() {
        let t = classify_cox("coxeter v1\nvertices a b c d\nedge a b 5\nedge b c 3\nedge c d 3\n");
        assert_eq!(t.kind, Kind::Elliptic);
        assert_eq!(t.families, vec![Family::H4]);
    }

    #[test]
    fn componentwise_rules() {
        // Two disjoint 3-edges.
        let t = classify_cox("coxeter v1\nvertices a b c d\nedge a b 3\nedge c d 3\n");
        assert_eq!(t.kind, Kind::Elliptic);
        assert_eq!(t.families, vec![Family::A(2), Family::A(2)]);
        // A1 plus affine A1.
        let t = classify_cox("coxeter v1\nvertices a b c\nedge b c inf\n");
        assert_eq!(t.kind, Kind::Parabolic);
        assert_eq!(t.families, vec![Family::A(1), Family::AffA1]);
        // Empty diagram.
        let t = classify_cox("coxeter v1\nvertices\n");
        assert_eq!(t.kind, Kind::Elliptic);
        assert!(t.families.is_empty());
    }

    #[test]
    fn exceptional_families_match_their_own_templates() {
        for family in [
            Family::E6,
            Family::E7,
            Family::E8,
            Family::F4,
            Family::H3,
            Family::H4,
            Family::AffE6,
            Family::AffE7,
            Family::AffE8,
            Family::AffF4,
            Family::AffG2,
            Family::AffB(3),
            Family::AffC(4),
            Family::AffD(5),
            Family::AffA(4),
            Family::B(5),
            Family::D(6),
        ] {
            let t = classify_connected(&family.diagram());
            assert_eq!(t.families, vec![family], "family {family}");
            assert_eq!(
                t.kind,
                if family.is_affine() {
                    Kind::Parabolic
                } else {
                    Kind::Elliptic
                }
            );
        }
    }

    #[test]
    fn dense_diagram_short_circuits_to_indefinite() {
        // Complete graph on 4 vertices, all labels 3: edge count 6 > 4.
        let mut m = CoxeterMatrix::new(vec!["a", "b", "c", "d"]).unwrap();
        for i in 0..4usize {
            for j in i + 1..4 {
                m.set_label(i, j, EdgeLabel::Finite(3));
            }
        }
        assert_eq!(classify(&m.to_diagram()).kind, Kind::Indefinite);
    }

    #[test]
    fn quasi_lanner_triangle() {
        let d = parse_diagram("coxeter v1\nvertices a b c\nedge a b 3\nedge b c 3\nedge a c inf\n")
            .unwrap()
            .to_diagram();
        assert!(is_quasi_lanner(&d).unwrap());
    }

    #[test]
    fn quasi_lanner_rejects_affine_and_elliptic() {
        let affine = Family::AffA(2).diagram();
        assert!(!is_quasi_lanner(&affine).unwrap());
        let e8 = Family::E8.diagram();
        assert!(!is_quasi_lanner(&e8).unwrap());
    }

    #[test]
    fn quasi_lanner_needs_connected_input() {
        let m = parse_diagram("coxeter v1\nvertices a b c d\nedge a b inf\n").unwrap();
        assert_eq!(
            is_quasi_lanner(&m.to_diagram()).unwrap_err(),
            ClassifyError::NotConnected
        );
    }

    #[test]
    fn pair_count_examples() {
        // Affine A2 (3-cycle), C = 1: three pairs at distance 1, bound 3.
        let r = pair_count_check(&Family::AffA(2).diagram(), 1).unwrap();
        assert_eq!((r.count, r.bound, r.ok), (3, 3, true));
        // Affine A7 (8-cycle), C = 2.
        let r = pair_count_check(&Family::AffA(7).diagram(), 2).unwrap();
        assert_eq!((r.count, r.bound, r.ok), (16, 16, true));
        // A4 path, C = 1.
        let r = pair_count_check(&Family::A(4).diagram(), 1).unwrap();
        assert_eq!((r.count, r.bound, r.ok), (3, 4, true));
    }

    #[test]
    fn pair_count_rejects_indefinite() {
        let d = parse_diagram("coxeter v1\nvertices a b c\nedge a b 3\nedge b c 3\nedge a c inf\n")
            .unwrap()
            .to_diagram();
        assert_eq!(
            pair_count_check(&d, 3).unwrap_err(),
            ClassifyError::IndefiniteInput
        );
    }
}
