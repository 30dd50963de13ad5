//! Integer simplicial homology via Smith normal form, and the generalized
//! homology sphere certificate.
//!
//! Boundary matrices use the lexicographic orientation convention (simplices
//! stored with increasing vertex indices).  The Smith reduction keeps exact
//! arbitrary-precision integers with minimal-absolute-value pivoting; the
//! instances here are tiny, so correctness wins over asymptotics.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::nerve::SimplicialComplex;
use crate::report::AuditReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("subset is not a simplex of the complex")]
    NotASimplex,
    #[error("complex is empty")]
    EmptyComplex,
}

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = IntegerMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = q * self.get(t, j);
            let v = self.get(i, j) - delta;
            self.set(i, j, v);
        }
    }

    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = q * self.get(i, t);
            let v = self.get(i, j) - delta;
            self.set(i, j, v);
        }
    }

    fn row_add(&mut self, i: usize, t: usize) {
        for j in 0..self.cols {
            let v = self.get(i, j) + self.get(t, j);
            self.set(i, j, v);
        }
    }
}

/// Invariant factors `d1 | d2 | ... | dr` (all positive) and the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

/// Smith normal form by pivoting on a minimal-absolute-value entry.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithNormalForm {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut t = 0;

    while t < rows && t < cols {
        // Minimal nonzero entry of the trailing submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m.get(i, j).is_zero()
                    && pivot.is_none_or(|(pi, pj)| m.get(i, j).abs() < m.get(pi, pj).abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);

        // Clear row and column t; restart whenever a remainder survives,
        // which shrinks the pivot and so terminates.
        let mut dirty = false;
        for i in t + 1..rows {
            if !m.get(i, t).is_zero() {
                let q = m.get(i, t) / m.get(t, t);
                m.row_sub(i, t, &q);
                if !m.get(i, t).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        for j in t + 1..cols {
            if !m.get(t, j).is_zero() {
                let q = m.get(t, j) / m.get(t, t);
                m.col_sub(j, t, &q);
                if !m.get(t, j).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }

        // Divisibility: fold a bad row in and redo this pivot.
        let pv = m.get(t, t).clone();
        let bad_row =
            (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(m.get(i, j) % &pv).is_zero()));
        if let Some(i) = bad_row {
            m.row_add(t, i);
            continue;
        }
        t += 1;
    }

    let mut factors: Vec<BigInt> = (0..t).map(|k| m.get(k, k).abs()).collect();
    factors.sort();
    SmithNormalForm { factors, rank: t }
}

/// Reduced integer homology groups, indexed by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroups {
    /// `groups[k] = (betti, torsion factors > 1)` for reduced homology in
    /// dimension k.
    pub groups: Vec<(usize, Vec<BigInt>)>,
}

impl HomologyGroups {
    pub fn betti(&self, dim: usize) -> usize {
        self.groups.get(dim).map_or(0, |g| g.0)
    }

    pub fn torsion(&self, dim: usize) -> &[BigInt] {
        self.groups.get(dim).map_or(&[], |g| &g.1)
    }

    /// Reduced homology of the d-sphere: one Z in dimension d, nothing else.
    pub fn matches_sphere(&self, d: usize) -> bool {
        self.groups
            .iter()
            .enumerate()
            .all(|(k, (betti, torsion))| torsion.is_empty() && *betti == usize::from(k == d))
            && self.betti(d) == 1
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(|(b, t)| *b == 0 && t.is_empty())
    }
}

impl fmt::Display for HomologyGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, (betti, torsion)) in self.groups.iter().enumerate() {
            if *betti == 0 && torsion.is_empty() {
                continue;
            }
            let mut terms = Vec::new();
            if *betti > 0 {
                terms.push(if *betti == 1 {
                    "Z".to_string()
                } else {
                    format!("Z^{betti}")
                });
            }
            for t in torsion {
                terms.push(format!("Z/{t}"));
            }
            parts.push(format!("H~{k} = {}", terms.join(" + ")));
        }
        if parts.is_empty() {
            write!(f, "trivial")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

/// Boundary matrix from dimension `d` to `d - 1` in the lexicographic basis.
fn boundary_matrix(lower: &[Vec<usize>], upper: &[Vec<usize>]) -> IntegerMatrix {
    let index: BTreeMap<&[usize], usize> = lower
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let mut m = IntegerMatrix::zero(lower.len(), upper.len());
    for (j, s) in upper.iter().enumerate() {
        for drop in 0..s.len() {
            let mut face: Vec<usize> = s.clone();
            face.remove(drop);
            let i = index[face.as_slice()];
            let sign = if drop % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            m.set(i, j, sign);
        }
    }
    m
}

/// Reduced integer homology of a nonempty complex, in all dimensions.
pub fn reduced_homology(c: &SimplicialComplex) -> Result<HomologyGroups, HomologyError> {
    let top = c.dim().ok_or(HomologyError::EmptyComplex)?;
    let by_dim: Vec<Vec<Vec<usize>>> = (0..=top).map(|d| c.simplices_of_size(d + 1)).collect();

    // rank and invariant factors of each boundary map; dimension d maps
    // C_d -> C_{d-1}, with the augmentation in place of d = 0.
    let mut ranks = vec![0usize; top + 2];
    let mut torsions: Vec<Vec<BigInt>> = vec![Vec::new(); top + 2];
    ranks[0] = 1; // augmentation C_0 -> Z is onto for a nonempty complex
    for d in 1..=top {
        let snf = smith_normal_form(&boundary_matrix(&by_dim[d - 1], &by_dim[d]));
        ranks[d] = snf.rank;
        torsions[d] = snf.factors.into_iter().filter(|f| !f.is_one()).collect();
    }

    let groups = (0..=top)
        .map(|d| {
            let betti = by_dim[d].len() - ranks[d] - ranks[d + 1];
            (betti, torsions[d + 1].clone())
        })
        .collect();
    Ok(HomologyGroups { groups })
}

/// Link of a simplex: all simplices disjoint from it whose union with it is
/// a simplex.  The vertex set is exactly the vertices appearing in the link.
pub fn link(c: &SimplicialComplex, simplex: &[usize]) -> Result<SimplicialComplex, HomologyError> {
    let mut sigma: Vec<usize> = simplex.to_vec();
    sigma.sort_unstable();
    sigma.dedup();
    if !c.contains(&sigma) || sigma.is_empty() {
        return Err(HomologyError::NotASimplex);
    }
    let mut vertices: Vec<usize> = Vec::new();
    let mut facets_raw: Vec<Vec<usize>> = Vec::new();
    for f in c.facets() {
        if sigma.iter().all(|v| f.binary_search(v).is_ok()) {
            let rest: Vec<usize> = f
                .iter()
                .copied()
                .filter(|v| sigma.binary_search(v).is_err())
                .collect();
            for &v in &rest {
                if !vertices.contains(&v) {
                    vertices.push(v);
                }
            }
            if !rest.is_empty() {
                facets_raw.push(rest);
            }
        }
    }
    vertices.sort_unstable();
    let pos: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let names: Vec<String> = vertices.iter().map(|&v| c.name(v).to_string()).collect();
    let facets = facets_raw
        .into_iter()
        .map(|f| f.into_iter().map(|v| pos[&v]).collect())
        .collect();
    Ok(SimplicialComplex::from_facets(names, facets))
}

fn simplex_label(c: &SimplicialComplex, s: &[usize]) -> String {
    let names: Vec<&str> = s.iter().map(|&v| c.name(v)).collect();
    format!("{{{}}}", names.join(","))
}

/// Generalized-homology-sphere certificate in dimension `d`.
///
/// Passes iff the complex is pure of dimension `d`, has the reduced homology
/// of `S^d`, and the link of every nonempty k-simplex has the reduced
/// homology of `S^(d-k-1)` (the empty complex for facets).
pub fn is_ghs(c: &SimplicialComplex, d: usize) -> AuditReport {
    let mut report = AuditReport::new(format!("generalized homology {d}-sphere"));
    if !c.is_pure(d) {
        let witness = c
            .facets()
            .iter()
            .find(|f| f.len() != d + 1)
            .map(|f| {
                format!(
                    "facet {} has dimension {}",
                    simplex_label(c, f),
                    f.len() - 1
                )
            })
            .unwrap_or_else(|| "complex is empty".to_string());
        report.check(format!("pure of dimension {d}"), false, Some(witness));
        return report;
    }
    report.check(format!("pure of dimension {d}"), true, None);

    match reduced_homology(c) {
        Ok(h) => {
            let pass = h.matches_sphere(d);
            report.check(
                format!("global homology matches S^{d}"),
                pass,
                (!pass).then(|| h.to_string()),
            );
        }
        Err(e) => report.check(
            format!("global homology matches S^{d}"),
            false,
            Some(e.to_string()),
        ),
    }

    for sigma in c.all_simplices() {
        let k = sigma.len() - 1;
        let l = link(c, &sigma).expect("sigma ranges over simplices");
        if k == d {
            let pass = l.vertex_count() == 0;
            report.check(
                format!("link of facet {} is empty", simplex_label(c, &sigma)),
                pass,
                (!pass).then(|| format!("{} extra vertices", l.vertex_count())),
            );
            continue;
        }
        let expected = d - k - 1;
        let label = format!("link of {} matches S^{expected}", simplex_label(c, &sigma));
        match reduced_homology(&l) {
            Ok(h) => {
                let pass = h.matches_sphere(expected);
                report.check(label, pass, (!pass).then(|| h.to_string()));
            }
            Err(_) => report.check(label, false, Some("empty link".to_string())),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        SimplicialComplex::from_facets(names, facets.iter().map(|f| f.to_vec()).collect())
    }

    /// Boundary of the (d+1)-simplex on d+2 vertices, a d-sphere.
    fn simplex_boundary(d: usize) -> SimplicialComplex {
        let n = d + 2;
        let facets: Vec<Vec<usize>> = (0..n)
            .map(|skip| (0..n).filter(|&v| v != skip).collect())
            .collect();
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        SimplicialComplex::from_facets(names, facets)
    }

    /// Boundary of the d-dimensional cross-polytope, a (d-1)-sphere.
    fn cross_polytope_boundary(d: usize) -> SimplicialComplex {
        let n = 2 * d;
        // Vertices 2i, 2i+1 are antipodal; facets pick one from each pair.
        let mut facets = Vec::new();
        for mask in 0..(1u32 << d) {
            facets.push((0..d).map(|i| 2 * i + ((mask >> i & 1) as usize)).collect());
        }
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        SimplicialComplex::from_facets(names, facets)
    }

    #[test]
    fn snf_examples() {
        // diag(2, 3) -> (1, 6).
        let snf = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(snf.factors, vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(snf.rank, 2);

        let snf = smith_normal_form(&IntegerMatrix::from_rows(&[vec![1, 0], vec![0, 0]]));
        assert_eq!(snf.factors, vec![BigInt::from(1)]);
        assert_eq!(snf.rank, 1);

        // [[2, 4], [6, 8]]: d1 = gcd = 2, d1*d2 = |det| = 8.
        let snf = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(snf.factors, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn snf_divisibility_chain() {
        let snf = smith_normal_form(&IntegerMatrix::from_rows(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]));
        assert_eq!(snf.rank, 3);
        for w in snf.factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "{:?}", snf.factors);
        }
    }

    /// gcd-of-minors oracle: the product of the first k invariant factors
    /// equals the gcd of all k-by-k minors.
    fn gcd_of_minors_check(m: &IntegerMatrix) {
        fn det(rows: &[usize], cols: &[usize], m: &IntegerMatrix) -> BigInt {
            // Cofactor expansion; minors here are at most 8x8.
            if rows.is_empty() {
                return BigInt::one();
            }
            let mut acc = BigInt::zero();
            for (k, &c) in cols.iter().enumerate() {
                let sub_rows = &rows[1..];
                let sub_cols: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, &x)| x)
                    .collect();
                let minor = det(sub_rows, &sub_cols, m);
                let term = m.get(rows[0], c) * minor;
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }

        fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur: Vec<usize> = (0..k).collect();
            if k > n {
                return out;
            }
            loop {
                out.push(cur.clone());
                let mut i = k;
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    if cur[i] != i + n - k {
                        break;
                    }
                }
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
            }
        }

        let snf = smith_normal_form(m);
        let max_k = m.rows().min(m.cols());
        let mut expected_product = BigInt::one();
        for k in 1..=max_k {
            let mut gcd = BigInt::zero();
            'outer: for rows in combinations(m.rows(), k) {
                for cols in combinations(m.cols(), k) {
                    gcd = num_integer_gcd(&gcd, &det(&rows, &cols, m));
                    if gcd.is_one() {
                        break 'outer;
                    }
                }
            }
            if k <= snf.rank {
                expected_product *= &snf.factors[k - 1];
                assert_eq!(gcd, expected_product, "k = {k}");
            } else {
                assert!(gcd.is_zero(), "rank too small at k = {k}");
            }
        }
    }

    fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
        let (mut a, mut b) = (a.abs(), b.abs());
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        a
    }

    #[test]
    fn snf_matches_gcd_of_minors_on_random_matrices() {
        // Deterministic xorshift; 200 matrices up to 8x8.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let rows = (next() % 8 + 1) as usize;
            let cols = (next() % 8 + 1) as usize;
            let mut m = IntegerMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    let v = (next() % 19) as i64 - 9;
                    m.set(i, j, BigInt::from(v));
                }
            }
            gcd_of_minors_check(&m);
        }
    }

    #[test]
    fn circle_homology() {
        let circle = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let h = reduced_homology(&circle).unwrap();
        assert!(h.matches_sphere(1));
    }

    #[test]
    fn octahedron_homology() {
        let h = reduced_homology(&cross_polytope_boundary(3)).unwrap();
        assert!(h.matches_sphere(2));
    }

    #[test]
    fn projective_plane_homology() {
        let rp2 = complex(
            6,
            &[
                &[0, 1, 3],
                &[0, 1, 4],
                &[0, 2, 3],
                &[0, 2, 5],
                &[0, 4, 5],
                &[1, 2, 4],
                &[1, 2, 5],
                &[1, 3, 5],
                &[2, 3, 4],
                &[3, 4, 5],
            ],
        );
        let h = reduced_homology(&rp2).unwrap();
        assert_eq!(h.betti(0), 0);
        assert_eq!(h.betti(1), 0);
        assert_eq!(h.betti(2), 0);
        assert_eq!(h.torsion(1), &[BigInt::from(2)]);
        assert!(h.torsion(2).is_empty());
    }

    #[test]
    fn torus_homology() {
        let h = reduced_homology(&torus7()).unwrap();
        assert_eq!(h.betti(1), 2);
        assert_eq!(h.betti(2), 1);
        assert!(h.torsion(1).is_empty());
    }

    /// The 7-vertex torus: facets {i, i+1, i+3} and {i, i+2, i+3} mod 7
    /// (14 triangles, and every vertex pair is an edge).
    fn torus7() -> SimplicialComplex {
        let mut facets: Vec<Vec<usize>> =
            (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
        facets.extend((0..7).map(|i| vec![i, (i + 2) % 7, (i + 3) % 7]));
        complex(7, &facets.iter().map(|f| f.as_slice()).collect::<Vec<_>>())
    }

    #[test]
    fn link_examples() {
        let octa = cross_polytope_boundary(3);
        // Vertex link in the octahedron: a 4-cycle.
        let l = link(&octa, &[0]).unwrap();
        assert_eq!(l.vertex_count(), 4);
        assert_eq!(l.simplices_of_size(2).len(), 4);
        assert!(reduced_homology(&l).unwrap().matches_sphere(1));
        // Edge link: two points.
        let l = link(&octa, &[0, 2]).unwrap();
        assert_eq!(l.vertex_count(), 2);
        assert!(reduced_homology(&l).unwrap().matches_sphere(0));
        // An edge of the full 2-simplex links to the opposite vertex.
        let full = complex(3, &[&[0, 1, 2]]);
        let l = link(&full, &[0, 1]).unwrap();
        assert_eq!(l.vertex_count(), 1);
        // Not a simplex.
        assert_eq!(
            link(&octa, &[0, 1]).unwrap_err(),
            HomologyError::NotASimplex
        );
    }

    #[test]
    fn ghs_accepts_spheres() {
        for d in 1..=4 {
            assert!(
                is_ghs(&simplex_boundary(d - 1), d - 1).pass,
                "boundary of simplex, S^{}",
                d - 1
            );
        }
        for d in 2..=4 {
            assert!(
                is_ghs(&cross_polytope_boundary(d), d - 1).pass,
                "cross polytope {d}"
            );
        }
        assert!(is_ghs(&presets::icosahedron_complex(), 2).pass);
    }

    #[test]
    fn ghs_rejects_torus_and_projective_plane() {
        let torus = is_ghs(&torus7(), 2);
        assert!(!torus.pass);
        let rp2 = complex(
            6,
            &[
                &[0, 1, 3],
                &[0, 1, 4],
                &[0, 2, 3],
                &[0, 2, 5],
                &[0, 4, 5],
                &[1, 2, 4],
                &[1, 2, 5],
                &[1, 3, 5],
                &[2, 3, 4],
                &[3, 4, 5],
            ],
        );
        assert!(!is_ghs(&rp2, 2).pass);
    }

    #[test]
    fn ghs_rejects_free_faces_and_impure_complexes() {
        // Full triangle: pure, but the boundary edges are free.
        let disk = complex(3, &[&[0, 1, 2]]);
        assert!(!is_ghs(&disk, 2).pass);
        // Impure: a triangle with a dangling edge.
        let dangling = complex(4, &[&[0, 1, 2], &[2, 3]]);
        let report = is_ghs(&dangling, 2);
        assert!(!report.pass);
        assert!(report.checks[0].label.contains("pure"));
        assert!(!report.checks[0].pass);
    }

    #[test]
    fn euler_characteristic_matches_betti_numbers() {
        for c in [
            simplex_boundary(2),
            cross_polytope_boundary(3),
            presets::icosahedron_complex(),
            torus7(),
        ] {
            let h = reduced_homology(&c).unwrap();
            let alt: i64 = h
                .groups
                .iter()
                .enumerate()
                .map(|(k, (b, _))| if k % 2 == 0 { *b as i64 } else { -(*b as i64) })
                .sum();
            // chi = 1 + reduced alternating sum.
            assert_eq!(c.euler_characteristic(), 1 + alt);
        }
    }
}
