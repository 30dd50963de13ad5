//! Coxeter matrices and diagrams.
//!
//! A Coxeter matrix stores an order `m(u, v)` in `{2, 3, ..., inf}` for every
//! unordered pair of generators; the diagonal is implicitly 1 and never
//! stored.  The associated diagram keeps only the pairs with `m >= 3` or
//! `m = inf` as labeled edges — absence of an edge means the generators
//! commute (`m = 2`).

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Surd;

/// Off-diagonal entry of a Coxeter matrix: a finite order `m >= 2` or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeLabel {
    /// Finite order, always at least 2.
    Finite(u32),
    /// No relation between the two generators.
    Infinite,
}

impl EdgeLabel {
    pub fn is_infinite(self) -> bool {
        matches!(self, EdgeLabel::Infinite)
    }

    pub fn as_finite(self) -> Option<u32> {
        match self {
            EdgeLabel::Finite(m) => Some(m),
            EdgeLabel::Infinite => None,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Finite(m) => write!(f, "{m}"),
            EdgeLabel::Infinite => write!(f, "inf"),
        }
    }
}

/// Graph distance in a diagram: number of edges on a shortest path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn as_finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => a.cmp(b),
            (Distance::Finite(_), Distance::Infinite) => std::cmp::Ordering::Less,
            (Distance::Infinite, Distance::Finite(_)) => std::cmp::Ordering::Greater,
            (Distance::Infinite, Distance::Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Errors from diagram construction and vertex lookup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertexName(String),
    #[error("label {0} is below 2")]
    LabelTooSmall(u32),
}

/// Errors from parsing the `.cox` file format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing `coxeter v1` header")]
    MissingHeader,
    #[error("line {0}: unsupported header `{1}`")]
    BadHeader(usize, String),
    #[error("no `vertices` line found")]
    MissingVertices,
    #[error("line {0}: second `vertices` line")]
    DuplicateVerticesLine(usize),
    #[error("line {0}: duplicate vertex name `{1}`")]
    DuplicateVertexName(usize, String),
    #[error("line {0}: unknown vertex `{1}` in edge")]
    UnknownVertex(usize, String),
    #[error("line {0}: duplicate edge declaration `{1} {2}`")]
    DuplicateEdge(usize, String, String),
    #[error("line {0}: edge from `{1}` to itself")]
    SelfEdge(usize, String),
    #[error("line {0}: invalid label `{1}` (want an integer >= 2 or `inf`)")]
    InvalidLabel(usize, String),
    #[error("line {0}: unknown directive `{1}`")]
    UnknownDirective(usize, String),
    #[error("line {0}: malformed line")]
    Malformed(usize),
}

fn tri_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Symmetric matrix of Coxeter orders over a named generator set.
///
/// Generators keep their declaration order; every off-diagonal pair carries a
/// label, with 2 (commuting) as the default.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    names: Vec<String>,
    labels: Vec<EdgeLabel>,
}

impl CoxeterMatrix {
    /// All-commuting matrix over the given generators.
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self, DiagramError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (k, name) in names.iter().enumerate() {
            if names[..k].contains(name) {
                return Err(DiagramError::DuplicateVertexName(name.clone()));
            }
        }
        let n = names.len();
        Ok(CoxeterMatrix {
            names,
            labels: vec![EdgeLabel::Finite(2); n * n.saturating_sub(1) / 2],
        })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Label between two distinct generators.
    pub fn label(&self, i: usize, j: usize) -> EdgeLabel {
        assert!(i != j, "diagonal entries are implicitly 1");
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.labels[tri_index(self.rank(), i, j)]
    }

    pub fn set_label(&mut self, i: usize, j: usize, label: EdgeLabel) {
        assert!(i != j, "diagonal entries are implicitly 1");
        if let EdgeLabel::Finite(m) = label {
            assert!(m >= 2, "off-diagonal labels are at least 2");
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let idx = tri_index(self.rank(), i, j);
        self.labels[idx] = label;
    }

    pub fn set_label_by_name(
        &mut self,
        u: &str,
        v: &str,
        label: EdgeLabel,
    ) -> Result<(), DiagramError> {
        let i = self
            .index_of(u)
            .ok_or_else(|| DiagramError::UnknownVertex(u.to_string()))?;
        let j = self
            .index_of(v)
            .ok_or_else(|| DiagramError::UnknownVertex(v.to_string()))?;
        self.set_label(i, j, label);
        Ok(())
    }

    /// Restriction to a generator subset (indices into this matrix).
    /// Generators keep their relative order.
    pub fn induced(&self, subset: &[usize]) -> CoxeterMatrix {
        let mut subset: Vec<usize> = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        let names: Vec<String> = subset.iter().map(|&i| self.names[i].clone()).collect();
        let mut m = CoxeterMatrix::new(names).expect("subset of distinct names");
        for a in 0..subset.len() {
            for b in a + 1..subset.len() {
                m.set_label(a, b, self.label(subset[a], subset[b]));
            }
        }
        m
    }

    /// Drops the label-2 pairs, keeping the `>= 3` and infinite edges.
    pub fn to_diagram(&self) -> Diagram {
        let mut edges = BTreeMap::new();
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                match self.label(i, j) {
                    EdgeLabel::Finite(2) => {}
                    l => {
                        edges.insert((i, j), l);
                    }
                }
            }
        }
        Diagram {
            names: self.names.clone(),
            edges,
        }
    }

    /// Matrix of `-cos(pi / m(i, j))`, with 1 on the diagonal.
    pub fn cosine_gram(&self) -> CosineGram {
        let n = self.rank();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(if i == j {
                    CosEntry::Exact(Box::new(Surd::from_integer(1)))
                } else {
                    cos_entry(self.label(i, j))
                });
            }
        }
        CosineGram { n, entries }
    }

    /// Canonical `.cox` serialization: declaration order, commuting pairs omitted.
    pub fn to_cox_string(&self) -> String {
        let mut out = String::from("coxeter v1\n");
        out.push_str("vertices");
        for n in &self.names {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
        let mut edges: Vec<(String, String, EdgeLabel)> = Vec::new();
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                match self.label(i, j) {
                    EdgeLabel::Finite(2) => {}
                    l => edges.push((self.names[i].clone(), self.names[j].clone(), l)),
                }
            }
        }
        edges.sort();
        for (u, v, l) in edges {
            out.push_str(&format!("edge {u} {v} {l}\n"));
        }
        out
    }

    /// Parses the `.cox` line format.  See the crate README for the grammar.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_diagram(text)
    }
}

fn cos_entry(label: EdgeLabel) -> CosEntry {
    // -cos(pi/m) = -sqrt(q)/2 for q = 0, 1, 2, 3, 4 at m = 2, 3, 4, 6, inf.
    match label {
        EdgeLabel::Finite(2) => CosEntry::Exact(Box::new(Surd::zero())),
        EdgeLabel::Finite(3) => CosEntry::Exact(Box::new(Surd::from_ratio(-1, 2))),
        EdgeLabel::Finite(4) => CosEntry::Exact(Box::new(Surd::sqrt2_over(-1, 2))),
        EdgeLabel::Finite(6) => CosEntry::Exact(Box::new(Surd::sqrt3_over(-1, 2))),
        EdgeLabel::Infinite => CosEntry::Exact(Box::new(Surd::from_integer(-1))),
        EdgeLabel::Finite(m) => CosEntry::Approx(-(std::f64::consts::PI / m as f64).cos()),
    }
}

/// One entry of a cosine Gram matrix: exact in `Q(sqrt2, sqrt3)` when the
/// label allows it, floating otherwise (labels 5, 7, ...).
#[derive(Debug, Clone, PartialEq)]
pub enum CosEntry {
    Exact(Box<Surd>),
    Approx(f64),
}

impl CosEntry {
    pub fn to_f64(&self) -> f64 {
        match self {
            CosEntry::Exact(s) => s.to_f64(),
            CosEntry::Approx(x) => *x,
        }
    }
}

/// The cosine Gram matrix of a Coxeter matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CosineGram {
    n: usize,
    entries: Vec<CosEntry>,
}

impl CosineGram {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &CosEntry {
        &self.entries[i * self.n + j]
    }

    /// True when every entry is exact (all labels in `{2, 3, 4, 6, inf}`).
    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(|e| matches!(e, CosEntry::Exact(_)))
    }

    pub fn to_f64_matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).to_f64()).collect())
            .collect()
    }

    /// Exact determinant over `Q(sqrt2, sqrt3)`; `None` if any entry is inexact.
    pub fn determinant(&self) -> Option<Surd> {
        if !self.is_exact() {
            return None;
        }
        let mut m: Vec<Vec<Surd>> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| match self.entry(i, j) {
                        CosEntry::Exact(s) => (**s).clone(),
                        CosEntry::Approx(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        let mut det = Surd::from_integer(1);
        for col in 0..self.n {
            let pivot_row = (col..self.n).find(|&r| !m[r][col].is_zero());
            let Some(pr) = pivot_row else {
                return Some(Surd::zero());
            };
            if pr != col {
                m.swap(pr, col);
                det = det.neg();
            }
            let pivot = m[col][col].clone();
            det = det.mul(&pivot);
            let inv = pivot.inverse().expect("nonzero pivot");
            for r in col + 1..self.n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].mul(&inv);
                let (top, bottom) = m.split_at_mut(r);
                let pivot_row = &top[col];
                for (cell, pv) in bottom[0].iter_mut().zip(pivot_row).skip(col) {
                    *cell = cell.sub(&factor.mul(pv));
                }
            }
        }
        Some(det)
    }
}

/// Labeled graph view of a Coxeter matrix: vertices plus the edges with
/// label at least 3 or infinite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    names: Vec<String>,
    edges: BTreeMap<(usize, usize), EdgeLabel>,
}

impl Diagram {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeLabel)> + '_ {
        self.edges.iter().map(|(&(i, j), &l)| (i, j, l))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Label between two distinct vertices; 2 when there is no edge.
    pub fn label_between(&self, i: usize, j: usize) -> EdgeLabel {
        assert!(i != j);
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges
            .get(&key)
            .copied()
            .unwrap_or(EdgeLabel::Finite(2))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Restores the full matrix: unlisted pairs become label 2.
    pub fn to_matrix(&self) -> CoxeterMatrix {
        let mut m = CoxeterMatrix::new(self.names.clone()).expect("names already distinct");
        for (&(i, j), &l) in &self.edges {
            m.set_label(i, j, l);
        }
        m
    }

    /// Shortest-path length between two vertices by breadth-first search.
    pub fn distance(&self, u: usize, v: usize) -> Distance {
        assert!(u < self.vertex_count() && v < self.vertex_count());
        if u == v {
            return Distance::Finite(0);
        }
        let mut dist = vec![u32::MAX; self.vertex_count()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return Distance::Finite(dist[y]);
                    }
                    queue.push_back(y);
                }
            }
        }
        Distance::Infinite
    }

    pub fn distance_by_name(&self, u: &str, v: &str) -> Result<Distance, DiagramError> {
        let i = self
            .index_of(u)
            .ok_or_else(|| DiagramError::UnknownVertex(u.to_string()))?;
        let j = self
            .index_of(v)
            .ok_or_else(|| DiagramError::UnknownVertex(v.to_string()))?;
        Ok(self.distance(i, j))
    }

    /// Largest pairwise distance; `Infinite` when disconnected, 0 when the
    /// diagram has at most one vertex.
    pub fn diameter(&self) -> Distance {
        let n = self.vertex_count();
        let mut best = Distance::Finite(0);
        for u in 0..n {
            for v in u + 1..n {
                best = best.max(self.distance(u, v));
            }
        }
        best
    }

    /// Keeps exactly the edges with both endpoints in `vs` (indices into this
    /// diagram).  Vertices keep their relative order.
    pub fn induced_subdiagram(&self, vs: &[usize]) -> Diagram {
        let mut vs: Vec<usize> = vs.to_vec();
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs {
            assert!(v < self.vertex_count(), "vertex index out of range");
        }
        let pos: BTreeMap<usize, usize> = vs.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let names = vs.iter().map(|&v| self.names[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(&(i, j), &l)| match (pos.get(&i), pos.get(&j)) {
                (Some(&a), Some(&b)) => Some(((a, b), l)),
                _ => None,
            })
            .collect();
        Diagram { names, edges }
    }

    pub fn induced_by_names(&self, names: &[&str]) -> Result<Diagram, DiagramError> {
        let vs: Result<Vec<usize>, DiagramError> = names
            .iter()
            .map(|n| {
                self.index_of(n)
                    .ok_or_else(|| DiagramError::UnknownVertex(n.to_string()))
            })
            .collect();
        Ok(self.induced_subdiagram(&vs?))
    }

    /// Connected components as index sets.  Each component is sorted by
    /// vertex name; components are ordered by their least vertex name.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_by(|&a, &b| self.names[a].cmp(&self.names[b]));
            comps.push(comp);
        }
        comps.sort_by(|a, b| self.names[a[0]].cmp(&self.names[b[0]]));
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// True when every label is 2 or infinite.
    pub fn is_right_angled(&self) -> bool {
        self.edges.values().all(|l| l.is_infinite())
    }
}

/// Parses the `.cox` file format into a Coxeter matrix.
///
/// Line 1 is `coxeter v1`; one `vertices <name>...` line declares the
/// generators in order; `edge <u> <v> <m|inf>` lines set labels.  `#` starts
/// a comment.  Unlisted pairs default to label 2.
pub fn parse_diagram(text: &str) -> Result<CoxeterMatrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    match lines.next() {
        Some((_, "coxeter v1")) => {}
        Some((k, other)) => return Err(ParseError::BadHeader(k, other.to_string())),
        None => return Err(ParseError::MissingHeader),
    }

    let mut matrix: Option<CoxeterMatrix> = None;
    let mut declared: BTreeMap<(usize, usize), ()> = BTreeMap::new();

    for (lineno, line) in lines {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("vertices") => {
                if matrix.is_some() {
                    return Err(ParseError::DuplicateVerticesLine(lineno));
                }
                let names: Vec<String> = words.map(str::to_string).collect();
                for (k, name) in names.iter().enumerate() {
                    if names[..k].contains(name) {
                        return Err(ParseError::DuplicateVertexName(lineno, name.clone()));
                    }
                }
                matrix = Some(CoxeterMatrix::new(names).expect("duplicates checked above"));
            }
            Some("edge") => {
                let m = matrix.as_mut().ok_or(ParseError::MissingVertices)?;
                let (u, v, label) = match (words.next(), words.next(), words.next(), words.next()) {
                    (Some(u), Some(v), Some(l), None) => (u, v, l),
                    _ => return Err(ParseError::Malformed(lineno)),
                };
                let i = m
                    .index_of(u)
                    .ok_or_else(|| ParseError::UnknownVertex(lineno, u.to_string()))?;
                let j = m
                    .index_of(v)
                    .ok_or_else(|| ParseError::UnknownVertex(lineno, v.to_string()))?;
                if i == j {
                    return Err(ParseError::SelfEdge(lineno, u.to_string()));
                }
                let label = match label {
                    "inf" => EdgeLabel::Infinite,
                    t => match t.parse::<u32>() {
                        Ok(mij) if mij >= 2 => EdgeLabel::Finite(mij),
                        _ => return Err(ParseError::InvalidLabel(lineno, t.to_string())),
                    },
                };
                let key = if i < j { (i, j) } else { (j, i) };
                if declared.insert(key, ()).is_some() {
                    return Err(ParseError::DuplicateEdge(
                        lineno,
                        u.to_string(),
                        v.to_string(),
                    ));
                }
                m.set_label(i, j, label);
            }
            Some(other) => return Err(ParseError::UnknownDirective(lineno, other.to_string())),
            None => unreachable!("blank lines filtered"),
        }
    }

    matrix.ok_or(ParseError::MissingVertices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(labels: &[EdgeLabel]) -> Diagram {
        let names: Vec<String> = (0..labels.len() + 1).map(|i| format!("v{i}")).collect();
        let mut m = CoxeterMatrix::new(names).unwrap();
        for (i, &l) in labels.iter().enumerate() {
            m.set_label(i, i + 1, l);
        }
        m.to_diagram()
    }

    #[test]
    fn parse_infinite_edge() {
        let m = parse_diagram("coxeter v1\nvertices a b\nedge a b inf\n").unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.label(0, 1), EdgeLabel::Infinite);
    }

    #[test]
    fn parse_defaults_to_two() {
        let m = parse_diagram("coxeter v1\nvertices a b c\nedge a b 3\n").unwrap();
        assert_eq!(m.label(0, 1), EdgeLabel::Finite(3));
        assert_eq!(m.label(0, 2), EdgeLabel::Finite(2));
        assert_eq!(m.label(1, 2), EdgeLabel::Finite(2));
    }

    #[test]
    fn parse_duplicate_edge_is_an_error() {
        let err = parse_diagram("coxeter v1\nvertices a b\nedge a b 3\nedge a b 4\n").unwrap_err();
        assert!(matches!(err, ParseError::DuplicateEdge(..)));
        // Declaring the reverse orientation is the same pair.
        let err = parse_diagram("coxeter v1\nvertices a b\nedge a b 3\nedge b a 4\n").unwrap_err();
        assert!(matches!(err, ParseError::DuplicateEdge(..)));
    }

    #[test]
    fn parse_rejects_bad_labels_and_vertices() {
        assert!(matches!(
            parse_diagram("coxeter v1\nvertices a b\nedge a b 1\n").unwrap_err(),
            ParseError::InvalidLabel(..)
        ));
        assert!(matches!(
            parse_diagram("coxeter v1\nvertices a b\nedge a c 3\n").unwrap_err(),
            ParseError::UnknownVertex(..)
        ));
        assert!(matches!(
            parse_diagram("vertices a b\n").unwrap_err(),
            ParseError::BadHeader(..)
        ));
    }

    #[test]
    fn parse_comments_and_blanks() {
        let m = parse_diagram("coxeter v1\n# a comment\n\nvertices a b # trailing\nedge a b 5\n")
            .unwrap();
        assert_eq!(m.label(0, 1), EdgeLabel::Finite(5));
    }

    #[test]
    fn cox_roundtrip() {
        let text = "coxeter v1\nvertices a b c\nedge a b 3\nedge a c inf\n";
        let m = parse_diagram(text).unwrap();
        assert_eq!(m.to_cox_string(), text);
    }

    #[test]
    fn diagram_matrix_roundtrip() {
        let m = parse_diagram("coxeter v1\nvertices x y z w\nedge x y 4\nedge z w inf\n").unwrap();
        let d = m.to_diagram();
        assert_eq!(d.to_matrix(), m);
        assert_eq!(d.edge_count(), 2);
    }

    #[test]
    fn distance_on_a_path() {
        let d = path(&[EdgeLabel::Finite(3), EdgeLabel::Finite(3)]);
        assert_eq!(d.distance(0, 2), Distance::Finite(2));
        assert_eq!(d.distance(0, 0), Distance::Finite(0));
    }

    #[test]
    fn distance_disconnected() {
        let m = CoxeterMatrix::new(vec!["a", "b"]).unwrap();
        let d = m.to_diagram();
        assert_eq!(d.distance(0, 1), Distance::Infinite);
    }

    #[test]
    fn induced_subdiagram_keeps_inner_edges() {
        // Triangle with all labels 3.
        let mut m = CoxeterMatrix::new(vec!["a", "b", "c"]).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            m.set_label(i, j, EdgeLabel::Finite(3));
        }
        let d = m.to_diagram();
        let sub = d.induced_subdiagram(&[0, 1]);
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.label_between(0, 1), EdgeLabel::Finite(3));
        assert_eq!(d.induced_subdiagram(&[0, 1, 2]), d);
        assert_eq!(d.induced_subdiagram(&[]).vertex_count(), 0);
    }

    #[test]
    fn induced_subdiagram_is_monotone() {
        let m = parse_diagram(
            "coxeter v1\nvertices a b c d e\nedge a b 3\nedge b c 4\nedge c d inf\nedge d e 6\n",
        )
        .unwrap();
        let d = m.to_diagram();
        let big = d.induced_subdiagram(&[0, 1, 2, 3]);
        let small_direct = d.induced_subdiagram(&[0, 1, 2]);
        let small_via_big = big.induced_subdiagram(&[0, 1, 2]);
        assert_eq!(small_direct, small_via_big);
    }

    #[test]
    fn components_canonical_order() {
        let m = parse_diagram("coxeter v1\nvertices d c b a\nedge d c 3\nedge b a 3\n").unwrap();
        let d = m.to_diagram();
        let comps = d.connected_components();
        assert_eq!(comps.len(), 2);
        // First component is the one containing the least name, `a`.
        assert_eq!(d.name(comps[0][0]), "a");
        assert_eq!(d.name(comps[1][0]), "c");
        assert!(CoxeterMatrix::new(Vec::<String>::new())
            .unwrap()
            .to_diagram()
            .connected_components()
            .is_empty());
    }

    #[test]
    fn cosine_entries_exact_values() {
        let mut m = CoxeterMatrix::new(vec!["a", "b", "c"]).unwrap();
        m.set_label(0, 1, EdgeLabel::Finite(3));
        m.set_label(0, 2, EdgeLabel::Infinite);
        let g = m.cosine_gram();
        assert!(g.is_exact());
        assert_eq!(g.entry(0, 1).to_f64(), -0.5);
        assert_eq!(g.entry(1, 2).to_f64(), 0.0);
        assert_eq!(g.entry(0, 2).to_f64(), -1.0);
        assert_eq!(g.entry(0, 0).to_f64(), 1.0);
    }

    #[test]
    fn cosine_label_five_is_inexact() {
        let mut m = CoxeterMatrix::new(vec!["a", "b"]).unwrap();
        m.set_label(0, 1, EdgeLabel::Finite(5));
        let g = m.cosine_gram();
        assert!(!g.is_exact());
        let expected = -(std::f64::consts::PI / 5.0).cos();
        assert!((g.entry(0, 1).to_f64() - expected).abs() < 1e-15);
        assert!(g.determinant().is_none());
    }

    #[test]
    fn exact_determinant_of_hyperbolic_triangle() {
        // Triangle (3, 3, inf): det of the cosine Gram is exactly -1.
        let mut m = CoxeterMatrix::new(vec!["a", "b", "c"]).unwrap();
        m.set_label(0, 1, EdgeLabel::Finite(3));
        m.set_label(1, 2, EdgeLabel::Finite(3));
        m.set_label(0, 2, EdgeLabel::Infinite);
        let det = m.cosine_gram().determinant().unwrap();
        assert_eq!(det, Surd::from_integer(-1));
    }

    #[test]
    fn exact_determinant_with_sqrt_entries() {
        // B3 = path (4, 3): det = (2 - sqrt2)/... just check against f64.
        let mut m = CoxeterMatrix::new(vec!["a", "b", "c"]).unwrap();
        m.set_label(0, 1, EdgeLabel::Finite(4));
        m.set_label(1, 2, EdgeLabel::Finite(3));
        let det = m.cosine_gram().determinant().unwrap();
        let f = det.to_f64();
        // Numeric determinant by cofactor expansion of the 3x3.
        let g = m.cosine_gram().to_f64_matrix();
        let num = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
            - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
            + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
        assert!((f - num).abs() < 1e-12);
        assert!(f > 0.0);
    }
}
