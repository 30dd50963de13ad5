//! The face poset of the dual polytope, with cusps.
//!
//! Faces are indexed by spherical cone-free generator subsets: `F_T` has
//! dimension `n - |T|`, the empty set is the polytope itself, and
//! `F_T <= F_T'` iff `T` contains `T'`.  Cusps are the maximal affine flats
//! of dimension `n - 1` (equivalently, after boundary normalization, the
//! cone vertices); a cusp lies on `F_T` iff its generator set contains `T`.
//! Cusps count separately from ordinary vertices throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::nerve::{maximal_flats, Nerve, NerveError, DEFAULT_CAP};
use crate::report::AuditReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("maximal flat {{{0}}} has dimension {1}, not {2}")]
    WrongFlatDimension(String, usize, usize),
    #[error("spherical cone-free subset {{{0}}} has {1} generators, more than the dimension {2}")]
    FaceTooLarge(String, usize, usize),
    #[error("subset {{{0}}} is not a face")]
    NotAFace(String),
    #[error("operation needs a right-angled matrix")]
    NotRightAngled,
    #[error("no faces of dimension {0}")]
    NoFaces(usize),
    #[error("parameters out of range: need i < k <= n/2, got i={i}, k={k}, n={n}")]
    BadParameters { i: usize, k: usize, n: usize },
    #[error(transparent)]
    Nerve(#[from] NerveError),
}

/// Face counts of the polytope: `a[k]` is the number of k-dimensional faces
/// for `k < n` (finite vertices only at `k = 0`), `c` the number of cusps.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FVector {
    pub a: Vec<usize>,
    pub c: usize,
}

/// Local counts of one face: `a[i]` for `i` below the face dimension, the
/// cusps on the face, and for 2-faces the excess `a1 + c - 5`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FaceLocalCounts {
    pub face: Vec<String>,
    pub face_dim: usize,
    pub a: Vec<usize>,
    pub c: usize,
    pub excess: Option<i64>,
}

/// The average number of i-faces of a k-face: total incidences over the
/// number of k-faces, kept as an exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AverageCounts {
    pub i: usize,
    pub k: usize,
    pub incidences: usize,
    pub alpha_k: usize,
    pub value: BigRational,
}

/// The combinatorial model of the dual polytope.
#[derive(Debug, Clone)]
pub struct PolytopeModel {
    dim: usize,
    nerve: Nerve,
    /// `faces_by_size[s]` = sorted generator sets of size `s` (face dim `dim - s`).
    faces_by_size: Vec<Vec<Vec<usize>>>,
    cusps: Vec<Vec<usize>>,
}

impl PolytopeModel {
    /// Builds the model, first checking that every maximal flat of rank >= 2
    /// has dimension `dim - 1`.
    pub fn build(nerve: &Nerve, dim: usize) -> Result<Self, PolytopeError> {
        for f in maximal_flats(&nerve.matrix, DEFAULT_CAP)? {
            if f.flat_dim != dim - 1 {
                return Err(PolytopeError::WrongFlatDimension(
                    f.names(&nerve.matrix).join(","),
                    f.flat_dim,
                    dim - 1,
                ));
            }
        }
        Self::build_unchecked(nerve, dim)
    }

    /// Builds the model without the codimension-1 hypothesis; audits on the
    /// result then report the damage instead of refusing the input.
    pub fn build_unchecked(nerve: &Nerve, dim: usize) -> Result<Self, PolytopeError> {
        let cones = nerve.cone_indices();
        let mut faces_by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim + 1];
        faces_by_size[0].push(Vec::new());
        for simplex in nerve.complex.all_simplices() {
            if simplex.iter().any(|v| cones.contains(v)) {
                continue;
            }
            if simplex.len() > dim {
                let names: Vec<&str> = simplex.iter().map(|&v| nerve.matrix.name(v)).collect();
                return Err(PolytopeError::FaceTooLarge(
                    names.join(","),
                    simplex.len(),
                    dim,
                ));
            }
            faces_by_size[simplex.len()].push(simplex);
        }
        for level in &mut faces_by_size {
            level.sort();
        }
        let cusps = maximal_flats(&nerve.matrix, DEFAULT_CAP)?
            .into_iter()
            .filter(|f| f.flat_dim + 1 == dim)
            .map(|f| f.generators)
            .collect();
        Ok(PolytopeModel {
            dim,
            nerve: nerve.clone(),
            faces_by_size,
            cusps,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nerve(&self) -> &Nerve {
        &self.nerve
    }

    pub fn cusps(&self) -> &[Vec<usize>] {
        &self.cusps
    }

    /// Generator sets of the faces of dimension `k`.
    pub fn faces_of_dim(&self, k: usize) -> &[Vec<usize>] {
        &self.faces_by_size[self.dim - k]
    }

    pub fn is_face(&self, t: &[usize]) -> bool {
        let mut t: Vec<usize> = t.to_vec();
        t.sort_unstable();
        t.dedup();
        t.len() <= self.dim && self.faces_by_size[t.len()].binary_search(&t).is_ok()
    }

    pub fn face_names(&self, t: &[usize]) -> Vec<String> {
        let mut names: Vec<String> = t
            .iter()
            .map(|&v| self.nerve.matrix.name(v).to_string())
            .collect();
        names.sort();
        names
    }

    fn face_label(&self, t: &[usize]) -> String {
        if t.is_empty() {
            "{} (whole polytope)".to_string()
        } else {
            format!("{{{}}}", self.face_names(t).join(","))
        }
    }

    pub fn fvector(&self) -> FVector {
        FVector {
            a: (0..self.dim)
                .map(|k| self.faces_by_size[self.dim - k].len())
                .collect(),
            c: self.cusps.len(),
        }
    }

    fn count_cofaces(&self, t: &[usize], size: usize) -> usize {
        self.faces_by_size[size]
            .iter()
            .filter(|f| t.iter().all(|v| f.binary_search(v).is_ok()))
            .count()
    }

    fn count_cusps_on(&self, t: &[usize]) -> usize {
        self.cusps
            .iter()
            .filter(|a| t.iter().all(|v| a.binary_search(v).is_ok()))
            .count()
    }

    pub fn face_local_counts(&self, t: &[usize]) -> Result<FaceLocalCounts, PolytopeError> {
        let mut t: Vec<usize> = t.to_vec();
        t.sort_unstable();
        t.dedup();
        if !self.is_face(&t) {
            return Err(PolytopeError::NotAFace(self.face_names(&t).join(",")));
        }
        let face_dim = self.dim - t.len();
        let a: Vec<usize> = (0..face_dim)
            .map(|i| self.count_cofaces(&t, self.dim - i))
            .collect();
        let c = self.count_cusps_on(&t);
        let excess = (face_dim == 2).then(|| a[1] as i64 + c as i64 - 5);
        Ok(FaceLocalCounts {
            face: self.face_names(&t),
            face_dim,
            a,
            c,
            excess,
        })
    }

    /// The face-count inequalities on faces of dimension 2 through
    /// `min(5, n)` (the polytope itself included when its dimension is in
    /// range): 2-faces have `a1 + c >= 5`; 3-faces satisfy
    /// `a1 + c = 3 a2 - 6`, `a2 + 2c >= 12`, `a2 >= 6`, `a2 + c >= 9`;
    /// 4-faces `a3 >= 10`, `a3 + c >= 15`; 5-faces `a4 >= 16`.
    pub fn audit_section4(&self) -> AuditReport {
        let mut report = AuditReport::new("face-count inequalities");
        if self.dim < 2 {
            report.note("dimension below 2: nothing to audit");
            return report;
        }
        for face_dim in 2..=self.dim.min(5) {
            for t in &self.faces_by_size[self.dim - face_dim] {
                let lc = self.face_local_counts(t).expect("iterating over faces");
                let label =
                    |what: &str| format!("{}-face {}: {what}", face_dim, self.face_label(t));
                match face_dim {
                    2 => {
                        let v = lc.a[1] + lc.c;
                        report.check(label("a1 + c >= 5"), v >= 5, Some(format!("a1 + c = {v}")));
                    }
                    3 => {
                        let lhs = lc.a[1] + lc.c;
                        let rhs = 3 * lc.a[2] as i64 - 6;
                        report.check(
                            label("a1 + c = 3 a2 - 6"),
                            lhs as i64 == rhs,
                            Some(format!("a1 + c = {lhs}, 3 a2 - 6 = {rhs}")),
                        );
                        let sum_excess: i64 = self.faces_by_size[self.dim - 2]
                            .iter()
                            .filter(|q| t.iter().all(|v| q.binary_search(v).is_ok()))
                            .map(|q| {
                                self.face_local_counts(q)
                                    .expect("face")
                                    .excess
                                    .expect("2-face")
                            })
                            .sum();
                        let v = lc.a[2] + 2 * lc.c;
                        report.check(
                            label("a2 + 2c >= 12"),
                            v >= 12,
                            Some(format!(
                                "a2 + 2c = {v}, excess sum over 2-faces = {sum_excess}"
                            )),
                        );
                        report.check(
                            label("a2 >= 6"),
                            lc.a[2] >= 6,
                            Some(format!("a2 = {}", lc.a[2])),
                        );
                        let v = lc.a[2] + lc.c;
                        report.check(label("a2 + c >= 9"), v >= 9, Some(format!("a2 + c = {v}")));
                    }
                    4 => {
                        report.check(
                            label("a3 >= 10"),
                            lc.a[3] >= 10,
                            Some(format!("a3 = {}", lc.a[3])),
                        );
                        let v = lc.a[3] + lc.c;
                        report.check(
                            label("a3 + c >= 15"),
                            v >= 15,
                            Some(format!("a3 + c = {v}")),
                        );
                    }
                    5 => {
                        report.check(
                            label("a4 >= 16"),
                            lc.a[4] >= 16,
                            Some(format!("a4 = {}", lc.a[4])),
                        );
                    }
                    _ => unreachable!(),
                }
            }
        }
        report
    }

    /// Exhaustive verification of the three facet-intersection statements
    /// for right-angled models: mutually adjacent facet triples meet in an
    /// (n-3)-face; a facet adjacent to a parallel pair meets it at a cusp;
    /// two facets adjacent to a parallel pair meet it at one cusp.
    pub fn check_proposition4(&self) -> Result<AuditReport, PolytopeError> {
        if !self.nerve.matrix.to_diagram().is_right_angled() {
            return Err(PolytopeError::NotRightAngled);
        }
        let mut report = AuditReport::new("facet intersection properties");
        let facets: Vec<usize> = self.faces_by_size[1].iter().map(|f| f[0]).collect();
        let adjacent = |s: usize, t: usize| self.is_face(&[s, t]);
        let parallel =
            |s: usize, t: usize| !adjacent(s, t) && self.count_cusps_on(&sorted(&[s, t])) > 0;

        let mut part1 = 0usize;
        for (ai, &a) in facets.iter().enumerate() {
            for (bi, &b) in facets.iter().enumerate().skip(ai + 1) {
                if !adjacent(a, b) {
                    continue;
                }
                for &c in facets.iter().skip(bi + 1) {
                    if adjacent(a, c) && adjacent(b, c) {
                        part1 += 1;
                        if !self.is_face(&sorted(&[a, b, c])) {
                            report.check(
                                "part 1: adjacent triples meet in a codim-3 face",
                                false,
                                Some(self.face_label(&sorted(&[a, b, c]))),
                            );
                        }
                    }
                }
            }
        }
        report.check(
            format!("part 1: all {part1} mutually adjacent facet triples meet in a codim-3 face"),
            true,
            None,
        );

        let mut part2 = 0usize;
        let mut part3 = 0usize;
        for (ai, &a) in facets.iter().enumerate() {
            for &b in facets.iter().skip(ai + 1) {
                if !parallel(a, b) {
                    continue;
                }
                let common: Vec<usize> = facets
                    .iter()
                    .copied()
                    .filter(|&x| x != a && x != b && adjacent(x, a) && adjacent(x, b))
                    .collect();
                for &x in &common {
                    part2 += 1;
                    if self.count_cusps_on(&sorted(&[a, b, x])) == 0 {
                        report.check(
                            "part 2: a facet adjacent to a parallel pair meets it at a cusp",
                            false,
                            Some(format!(
                                "parallel {} with facet {}",
                                self.face_label(&sorted(&[a, b])),
                                self.face_label(&[x])
                            )),
                        );
                    }
                }
                for (xi, &x) in common.iter().enumerate() {
                    for &y in common.iter().skip(xi + 1) {
                        part3 += 1;
                        if self.count_cusps_on(&sorted(&[a, b, x, y])) == 0 {
                            report.check(
                                "part 3: two facets adjacent to a parallel pair meet it at one cusp",
                                false,
                                Some(format!(
                                    "parallel {} with facets {}",
                                    self.face_label(&sorted(&[a, b])),
                                    self.face_label(&sorted(&[x, y]))
                                )),
                            );
                        }
                    }
                }
            }
        }
        report.check(
            format!("part 2: {part2} parallel-pair/facet triples checked"),
            true,
            None,
        );
        report.check(
            format!("part 3: {part3} parallel-pair/facet-pair quadruples checked"),
            true,
            None,
        );
        Ok(report)
    }

    /// Average number of i-faces per k-face, as an exact rational.
    pub fn average_count(&self, i: usize, k: usize) -> Result<BigRational, PolytopeError> {
        Ok(self.average_counts(i, k)?.value)
    }

    /// Average face counts with their defining totals.
    pub fn average_counts(&self, i: usize, k: usize) -> Result<AverageCounts, PolytopeError> {
        if k > self.dim || i >= k {
            return Err(PolytopeError::BadParameters { i, k, n: self.dim });
        }
        let k_faces = &self.faces_by_size[self.dim - k];
        if k_faces.is_empty() {
            return Err(PolytopeError::NoFaces(k));
        }
        let total: usize = k_faces
            .iter()
            .map(|t| self.count_cofaces(t, self.dim - i))
            .sum();
        Ok(AverageCounts {
            i,
            k,
            incidences: total,
            alpha_k: k_faces.len(),
            value: BigRational::new(BigInt::from(total), BigInt::from(k_faces.len())),
        })
    }

    /// Strict comparison of the average i-per-k face count against the
    /// simple/edge-simple polytope bound.
    pub fn audit_nikulin(&self, i: usize, k: usize) -> Result<AuditReport, PolytopeError> {
        let bound = nikulin_bound(self.dim, i, k)?;
        let average = self.average_count(i, k)?;
        let mut report = AuditReport::new(format!(
            "face-count average bound (i={i}, k={k}, n={})",
            self.dim
        ));
        report.check(
            format!("average {average} < bound {bound}"),
            average < bound,
            (average >= bound).then(|| format!("average = {average}, bound = {bound}")),
        );
        Ok(report)
    }
}

fn sorted(xs: &[usize]) -> Vec<usize> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}

fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..b {
        acc = acc * BigInt::from(a - t) / BigInt::from(t + 1);
    }
    acc
}

/// The bound on the average number of i-faces of a k-face of a simple (or
/// edge-simple) n-polytope:
/// `C(n-i, n-k) * (C(floor(n/2), i) + C(ceil(n/2), i)) / (C(floor(n/2), k) + C(ceil(n/2), k))`,
/// with `C(a, b) = 0` for `b > a`.  At `(i, k) = (4, 5)` this is
/// `10(n-4)/(n-8)` for even `n` and `10(n-3)/(n-7)` for odd `n`.
pub fn nikulin_bound(n: usize, i: usize, k: usize) -> Result<BigRational, PolytopeError> {
    if !(i < k && 2 * k <= n) {
        return Err(PolytopeError::BadParameters { i, k, n });
    }
    let (n, i, k) = (n as i64, i as i64, k as i64);
    let lo = n / 2;
    let hi = n - lo;
    let numerator = binom(n - i, n - k) * (binom(lo, i) + binom(hi, i));
    let denominator = binom(lo, k) + binom(hi, k);
    Ok(BigRational::new(numerator, denominator))
}

/// Largest dimension at which a 5-face can still average 16 or more 4-faces
/// under the simple-polytope bound; evaluates to 14.
pub fn rightangled_dimension_bound() -> usize {
    let sixteen = BigRational::from(BigInt::from(16));
    // At (i, k) = (4, 5) the bound is 10(n-4)/(n-8) for even n and
    // 10(n-3)/(n-7) for odd n, both strictly decreasing towards 10, and both
    // below 16 from n = 15 on; scanning a little past that is exhaustive.
    (10..=24)
        .filter(|&n| nikulin_bound(n, 4, 5).expect("valid parameters") > sixteen)
        .max()
        .expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::build_nerve;
    use crate::presets;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn model(m: &crate::diagram::CoxeterMatrix, dim: usize) -> PolytopeModel {
        let nerve = build_nerve(m, DEFAULT_CAP).unwrap();
        PolytopeModel::build(&nerve, dim).unwrap()
    }

    fn forced_model(m: &crate::diagram::CoxeterMatrix, dim: usize) -> PolytopeModel {
        let nerve = build_nerve(m, DEFAULT_CAP).unwrap();
        PolytopeModel::build_unchecked(&nerve, dim).unwrap()
    }

    #[test]
    fn cube_from_the_octahedron_nerve() {
        // (D-infinity)^3 pushed through the model at dimension 3: no cusps
        // because the one maximal flat has dimension 3, not 2.
        let p = forced_model(&presets::rac_cube(3), 3);
        assert_eq!(
            p.fvector(),
            FVector {
                a: vec![8, 12, 6],
                c: 0
            }
        );
    }

    #[test]
    fn checked_build_rejects_wrong_flat_dimensions() {
        let nerve = build_nerve(&presets::rac_cube(3), DEFAULT_CAP).unwrap();
        assert!(matches!(
            PolytopeModel::build(&nerve, 3).unwrap_err(),
            PolytopeError::WrongFlatDimension(_, 3, 2)
        ));
    }

    #[test]
    fn dodecahedron_model() {
        let p = model(&presets::right_angled_dodecahedron(), 3);
        assert_eq!(
            p.fvector(),
            FVector {
                a: vec![20, 30, 12],
                c: 0
            }
        );
        // Every 2-face is a pentagon with no cusps, excess 0.
        for t in p.faces_of_dim(2).to_vec() {
            let lc = p.face_local_counts(&t).unwrap();
            assert_eq!((lc.a[1], lc.c, lc.excess), (5, 0, Some(0)));
        }
        assert!(p.audit_section4().pass);
        assert!(p.check_proposition4().unwrap().pass);
    }

    #[test]
    fn ideal_octahedron_model() {
        let p = model(&presets::ideal_octahedron(), 3);
        assert_eq!(
            p.fvector(),
            FVector {
                a: vec![0, 12, 8],
                c: 6
            }
        );
        for t in p.faces_of_dim(2).to_vec() {
            let lc = p.face_local_counts(&t).unwrap();
            assert_eq!((lc.a[1], lc.c, lc.excess), (3, 3, Some(1)));
        }
        // Whole-polytope counts match the global f-vector.
        let whole = p.face_local_counts(&[]).unwrap();
        assert_eq!(whole.a, vec![0, 12, 8]);
        assert_eq!(whole.c, 6);
        let report = p.audit_section4();
        assert!(report.pass, "{report:?}");
        assert!(p.check_proposition4().unwrap().pass);
    }

    #[test]
    fn forced_cube_fails_the_2face_inequality() {
        let p = forced_model(&presets::rac_cube(3), 3);
        let report = p.audit_section4();
        assert!(!report.pass);
        let failure = report.failures().next().unwrap();
        assert!(failure.label.contains("a1 + c >= 5"));
        assert!(failure.witness.as_ref().unwrap().contains("a1 + c = 4"));
    }

    #[test]
    fn truncated_pieces_model_equals_ideal_model() {
        let truncated = presets::ideal_octahedron_truncated();
        let p = PolytopeModel::build(&truncated, 3).unwrap();
        assert_eq!(
            p.fvector(),
            FVector {
                a: vec![0, 12, 8],
                c: 6
            }
        );
        assert!(p.audit_section4().pass);
    }

    #[test]
    fn proposition4_rejects_non_right_angled() {
        let m = crate::diagram::parse_diagram("coxeter v1\nvertices a b c\nedge a b 3\n").unwrap();
        let p = forced_model(&m, 3);
        assert_eq!(
            p.check_proposition4().unwrap_err(),
            PolytopeError::NotRightAngled
        );
    }

    #[test]
    fn proposition4_part3_catches_a_shared_diagonal() {
        // Squares {a,b,c,d} and {a,b,e,f} share the infinite pair a, b; the
        // extra c-e edge keeps them from merging into one flat.  The facets
        // c and f are both adjacent to the parallel pair (a, b) but no cusp
        // carries all four.
        let mut m = crate::diagram::CoxeterMatrix::new(vec!["a", "b", "c", "d", "e", "f"]).unwrap();
        let inf = crate::diagram::EdgeLabel::Infinite;
        for (u, v) in [("a", "b"), ("c", "d"), ("e", "f"), ("c", "e")] {
            m.set_label_by_name(u, v, inf).unwrap();
        }
        let p = forced_model(&m, 3);
        let report = p.check_proposition4().unwrap();
        assert!(!report.pass);
        let part3 = report
            .failures()
            .find(|c| c.label.contains("part 3"))
            .expect("a part-3 failure");
        assert!(part3.witness.as_ref().unwrap().contains("a,b"));
    }

    #[test]
    fn cross_polytope_duality() {
        // The model over the k-pair right-angled cube group is the k-cube:
        // a_j = 2^(k-j) C(k, j).
        for k in 2..=4usize {
            let p = forced_model(&presets::rac_cube(k), k);
            let fv = p.fvector();
            for j in 0..k {
                let expected = (1usize << (k - j))
                    * binom(k as i64, j as i64)
                        .to_string()
                        .parse::<usize>()
                        .unwrap();
                assert_eq!(fv.a[j], expected, "k={k}, j={j}");
            }
            assert_eq!(fv.c, 0);
        }
    }

    #[test]
    fn euler_relation_on_cuspless_3faces() {
        for p in [
            forced_model(&presets::rac_cube(3), 3),
            model(&presets::right_angled_dodecahedron(), 3),
            forced_model(&presets::rac_cube(4), 4),
        ] {
            for t in p.faces_of_dim(3).to_vec() {
                let lc = p.face_local_counts(&t).unwrap();
                if lc.c > 0 {
                    continue;
                }
                assert_eq!(lc.a[0] as i64 - lc.a[1] as i64 + lc.a[2] as i64, 2);
                assert_eq!(2 * lc.a[1], 3 * lc.a[0]);
            }
        }
    }

    #[test]
    fn nikulin_bound_specializations() {
        assert_eq!(nikulin_bound(14, 4, 5).unwrap(), rational(50, 3));
        assert_eq!(nikulin_bound(15, 4, 5).unwrap(), rational(15, 1));
        for n in (10..=30).step_by(2) {
            assert_eq!(
                nikulin_bound(n, 4, 5).unwrap(),
                rational(10 * (n as i64 - 4), n as i64 - 8),
                "even n = {n}"
            );
        }
        for n in (11..=29).step_by(2) {
            assert_eq!(
                nikulin_bound(n, 4, 5).unwrap(),
                rational(10 * (n as i64 - 3), n as i64 - 7),
                "odd n = {n}"
            );
        }
        assert!(matches!(
            nikulin_bound(9, 4, 5).unwrap_err(),
            PolytopeError::BadParameters { .. }
        ));
        // Low-dimensional sanity value: both numerator binomials are C(2, 0).
        assert_eq!(nikulin_bound(4, 0, 1).unwrap(), rational(2, 1));
    }

    #[test]
    fn nikulin_audit_on_the_4cube() {
        let p = forced_model(&presets::rac_cube(4), 4);
        assert_eq!(p.average_count(1, 2).unwrap(), rational(4, 1));
        assert_eq!(nikulin_bound(4, 1, 2).unwrap(), rational(6, 1));
        assert!(p.audit_nikulin(1, 2).unwrap().pass);
        // Vertices per edge: the bound degenerates to equality at (0, 1), so
        // the strict audit reports a violation there by design.
        assert_eq!(p.average_count(0, 1).unwrap(), rational(2, 1));
        assert_eq!(nikulin_bound(4, 0, 1).unwrap(), rational(2, 1));
        assert!(!p.audit_nikulin(0, 1).unwrap().pass);
    }

    #[test]
    fn average_count_agrees_with_transposed_incidence_count() {
        let p = model(&presets::ideal_octahedron(), 3);
        // Count (1-face, 2-face) incidences from the 1-face side.
        let mut incidences = 0usize;
        for e in p.faces_of_dim(1) {
            incidences += p
                .faces_of_dim(2)
                .iter()
                .filter(|f| f.iter().all(|v| e.binary_search(v).is_ok()))
                .count();
        }
        let alpha_2 = p.faces_of_dim(2).len();
        assert_eq!(
            p.average_count(1, 2).unwrap(),
            BigRational::new(BigInt::from(incidences), BigInt::from(alpha_2))
        );
    }

    #[test]
    fn dimension_bound_is_14() {
        assert_eq!(rightangled_dimension_bound(), 14);
        let sixteen = BigRational::from(BigInt::from(16));
        assert!(nikulin_bound(14, 4, 5).unwrap() > sixteen);
        assert!(nikulin_bound(15, 4, 5).unwrap() < sixteen);
        assert!(nikulin_bound(16, 4, 5).unwrap() < sixteen);
    }
}
