//! The dihedral-angle weight calculus on 3-faces of the polytope model.
//!
//! A dihedral angle of a 3-face `F_T` is a pair of its 2-faces meeting in an
//! edge; its diagram is the induced (elliptic, rank n-1) diagram on the
//! edge's generators with the two extra generators marked.  The angle gets
//! weight 1 when the marked vertices are at distance at most 7, 1/3 at
//! distance 8 through 15, and 0 otherwise.  Edge sums are bounded by
//! `29(n-1)/3`; good 3-faces with `k <= 6` 2-faces need face sums of at
//! least `7 - k`.  Bad 3-faces are the triangular bipyramids with three
//! ideal equator vertices; their share of all 3-faces is bounded separately.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Diagram, Distance};
use crate::polytope::PolytopeModel;
use crate::report::AuditReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightsError {
    #[error("{{{0}}} is not a face of the expected dimension {1}")]
    NotAFaceOfDim(String, usize),
    #[error("{{{0}}} is not a dihedral angle of the face")]
    NotADihedralAngle(String),
    #[error("dimension {0} is below the lemma's hypothesis {1}")]
    DimensionTooSmall(usize, usize),
    #[error("no 3-faces in the model")]
    No3Faces,
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An elliptic subdiagram of rank n-1 with the two generators of a dihedral
/// angle marked.
#[derive(Debug, Clone)]
pub struct AngleDiagram {
    /// Generators of the 3-face, sorted global indices.
    pub base: Vec<usize>,
    /// The induced diagram on the base plus the two marked generators.
    pub diagram: Diagram,
    /// Positions of the marked vertices inside `diagram`.
    pub marked: (usize, usize),
}

/// The diagram of the dihedral angle of `F_T` spanned by the 2-faces
/// `F_(T+u)` and `F_(T+v)`.
pub fn angle_diagram(
    p: &PolytopeModel,
    t: &[usize],
    u: usize,
    v: usize,
) -> Result<AngleDiagram, WeightsError> {
    let mut base: Vec<usize> = t.to_vec();
    base.sort_unstable();
    base.dedup();
    if base.len() + 3 != p.dim() || !p.is_face(&base) {
        return Err(WeightsError::NotAFaceOfDim(
            p.face_names(&base).join(","),
            3,
        ));
    }
    let mut full = base.clone();
    full.extend([u, v]);
    full.sort_unstable();
    full.dedup();
    if full.len() != base.len() + 2 || !p.is_face(&full) {
        return Err(WeightsError::NotADihedralAngle(
            p.face_names(&full).join(","),
        ));
    }
    let diagram = p.nerve().matrix.to_diagram().induced_subdiagram(&full);
    let marked = (
        full.iter().position(|&x| x == u).expect("u in the union"),
        full.iter().position(|&x| x == v).expect("v in the union"),
    );
    Ok(AngleDiagram {
        base,
        diagram,
        marked,
    })
}

/// Weight of a marked-vertex distance: 1 up to 7, 1/3 up to 15, 0 beyond.
pub fn weight_of_distance(d: Distance) -> BigRational {
    match d {
        Distance::Finite(x) if x <= 7 => rational(1, 1),
        Distance::Finite(x) if x <= 15 => rational(1, 3),
        _ => BigRational::zero(),
    }
}

pub fn weight(a: &AngleDiagram) -> BigRational {
    weight_of_distance(a.diagram.distance(a.marked.0, a.marked.1))
}

/// Sum of the weights of all dihedral angles of the 3-face `F_T`.
pub fn sigma_face(p: &PolytopeModel, t: &[usize]) -> Result<BigRational, WeightsError> {
    let mut base: Vec<usize> = t.to_vec();
    base.sort_unstable();
    base.dedup();
    if base.len() + 3 != p.dim() || !p.is_face(&base) {
        return Err(WeightsError::NotAFaceOfDim(
            p.face_names(&base).join(","),
            3,
        ));
    }
    let n = p.nerve().matrix.rank();
    let mut sum = BigRational::zero();
    for u in 0..n {
        if base.binary_search(&u).is_ok() {
            continue;
        }
        for v in u + 1..n {
            if base.binary_search(&v).is_ok() {
                continue;
            }
            if let Ok(a) = angle_diagram(p, &base, u, v) {
                sum += weight(&a);
            }
        }
    }
    Ok(sum)
}

/// Weight sum over all unordered vertex pairs of a diagram, by distance.
pub fn edge_weight_sum(d: &Diagram) -> BigRational {
    let mut sum = BigRational::zero();
    for u in 0..d.vertex_count() {
        for v in u + 1..d.vertex_count() {
            sum += weight_of_distance(d.distance(u, v));
        }
    }
    sum
}

/// Edge weight sum against the `29(n-1)/3` bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaEdge {
    pub value: BigRational,
    pub bound: BigRational,
    pub ok: bool,
}

/// Sums the weights of all dihedral angles at the edge `F_T` (`|T| = n-1`):
/// every angle at the edge is determined by two marked vertices in the
/// edge's own elliptic diagram, so the sum ranges over its vertex pairs.
pub fn sigma_edge(p: &PolytopeModel, t: &[usize]) -> Result<SigmaEdge, WeightsError> {
    let mut base: Vec<usize> = t.to_vec();
    base.sort_unstable();
    base.dedup();
    if base.len() + 1 != p.dim() || !p.is_face(&base) {
        return Err(WeightsError::NotAFaceOfDim(
            p.face_names(&base).join(","),
            1,
        ));
    }
    let induced = p.nerve().matrix.to_diagram().induced_subdiagram(&base);
    let value = edge_weight_sum(&induced);
    let bound = edge_weight_bound(base.len());
    Ok(SigmaEdge {
        ok: value <= bound,
        value,
        bound,
    })
}

/// `29 r / 3` where `r` is the rank of the edge diagram (`n - 1`).
pub fn edge_weight_bound(rank: usize) -> BigRational {
    rational(29, 3) * BigRational::from(BigInt::from(rank as i64))
}

fn count_supersets(faces: &[Vec<usize>], t: &[usize]) -> usize {
    faces
        .iter()
        .filter(|f| t.iter().all(|v| f.binary_search(v).is_ok()))
        .count()
}

fn supersets<'a>(faces: &'a [Vec<usize>], t: &'a [usize]) -> impl Iterator<Item = &'a Vec<usize>> {
    faces
        .iter()
        .filter(move |f| t.iter().all(|v| f.binary_search(v).is_ok()))
}

/// True iff the face poset of the 3-face `F_T` is the triangular bipyramid
/// with two finite apexes and three ideal equator vertices: 2 finite
/// vertices, 3 cusps, 9 edges, 6 triangles, each triangle carrying one apex
/// and two cusps, the cusps pairwise joined by an edge, and each apex joined
/// to each cusp by exactly one edge.
pub fn is_bad_3face(p: &PolytopeModel, t: &[usize]) -> Result<bool, WeightsError> {
    let mut base: Vec<usize> = t.to_vec();
    base.sort_unstable();
    base.dedup();
    if base.len() + 3 != p.dim() || !p.is_face(&base) {
        return Err(WeightsError::NotAFaceOfDim(
            p.face_names(&base).join(","),
            3,
        ));
    }
    let vertices: Vec<&Vec<usize>> = supersets(p.faces_of_dim(0), &base).collect();
    let cusps: Vec<&Vec<usize>> = p
        .cusps()
        .iter()
        .filter(|a| base.iter().all(|v| a.binary_search(v).is_ok()))
        .collect();
    let edges: Vec<&Vec<usize>> = supersets(p.faces_of_dim(1), &base).collect();
    let two_faces: Vec<&Vec<usize>> = supersets(p.faces_of_dim(2), &base).collect();
    if vertices.len() != 2 || cusps.len() != 3 || edges.len() != 9 || two_faces.len() != 6 {
        return Ok(false);
    }

    let contains =
        |big: &[usize], small: &[usize]| small.iter().all(|v| big.binary_search(v).is_ok());

    // Each triangle: one apex, two cusps, three edges.
    for q in &two_faces {
        let apexes = vertices.iter().filter(|p| contains(p, q)).count();
        let on_cusps = cusps.iter().filter(|a| contains(a, q)).count();
        let q_edges = edges.iter().filter(|e| contains(e, q)).count();
        if (apexes, on_cusps, q_edges) != (1, 2, 3) {
            return Ok(false);
        }
    }
    // Equator: the three cusps pairwise share exactly one edge.
    for (i, a) in cusps.iter().enumerate() {
        for b in &cusps[i + 1..] {
            let shared = edges
                .iter()
                .filter(|e| contains(a, e) && contains(b, e))
                .count();
            if shared != 1 {
                return Ok(false);
            }
        }
    }
    // Each apex meets each cusp along exactly one edge.
    for apex in &vertices {
        for a in &cusps {
            let shared = edges
                .iter()
                .filter(|e| contains(apex, e) && contains(a, e))
                .count();
            if shared != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Counts of bad (bipyramid) versus good 3-faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadFaceReport {
    pub total: usize,
    pub bad: usize,
    pub good: usize,
    /// `bad / total`, absent when there are no 3-faces.
    pub ratio: Option<BigRational>,
}

pub fn bad_face_report(p: &PolytopeModel) -> Result<BadFaceReport, WeightsError> {
    if p.dim() < 3 {
        return Err(WeightsError::DimensionTooSmall(p.dim(), 3));
    }
    let mut bad = 0usize;
    let faces = p.faces_of_dim(3).to_vec();
    for t in &faces {
        if is_bad_3face(p, t)? {
            bad += 1;
        }
    }
    let total = faces.len();
    Ok(BadFaceReport {
        total,
        bad,
        good: total - bad,
        ratio: (total > 0)
            .then(|| BigRational::new(BigInt::from(bad as i64), BigInt::from(total as i64))),
    })
}

/// The strict upper bound on the bad-face ratio: `(3n+6)/(4(n-3))` for even
/// `n`, `(3n+9)/(4(n-2))` for odd `n`.
pub fn bad_ratio_bound(n: usize) -> BigRational {
    let n = n as i64;
    if n % 2 == 0 {
        rational(3 * n + 6, 4 * (n - 3))
    } else {
        rational(3 * n + 9, 4 * (n - 2))
    }
}

/// Arithmetic core of the bad-face audit, usable on bare counts.
pub fn check_bad_ratio(n: usize, total: usize, bad: usize) -> AuditReport {
    let mut report = AuditReport::new(format!("bad 3-face ratio at dimension {n}"));
    let bound = bad_ratio_bound(n);
    if total == 0 {
        report.note("no 3-faces: vacuous pass");
        return report;
    }
    let ratio = BigRational::new(BigInt::from(bad as i64), BigInt::from(total as i64));
    report.check(
        format!("bad/total = {bad}/{total} < {bound}"),
        ratio < bound,
        Some(format!("ratio {ratio}, bound {bound}")),
    );
    report
}

/// Bad-face ratio audit; the hypothesis needs `n >= 8`.
pub fn bad_ratio_audit(p: &PolytopeModel) -> Result<AuditReport, WeightsError> {
    if p.dim() < 8 {
        return Err(WeightsError::DimensionTooSmall(p.dim(), 8));
    }
    let counts = bad_face_report(p)?;
    Ok(check_bad_ratio(p.dim(), counts.total, counts.bad))
}

/// Intersection pattern classes of a set of 2-faces of one 3-face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KprimeType {
    /// Four 2-faces, pairwise meeting in edges.
    Type1,
    /// Three 2-faces, pairwise meeting in edges.
    Type2,
    /// Three 2-faces: one pair meets only at a cusp, the other two pairs in
    /// edges.
    Type3,
    /// Two pairs of opposite (non-adjacent) 2-faces, all four cross pairs
    /// meeting in edges, and not all four on one cusp.
    Type4,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Meet {
    Edge,
    CuspOnly,
    Nothing,
}

/// Classifies the intersection pattern of `kprime`, a set of 2-faces of the
/// 3-face `F_T` given by their generator sets.
pub fn classify_kprime(
    p: &PolytopeModel,
    t: &[usize],
    kprime: &[Vec<usize>],
) -> Result<KprimeType, WeightsError> {
    let mut base: Vec<usize> = t.to_vec();
    base.sort_unstable();
    base.dedup();
    if base.len() + 3 != p.dim() || !p.is_face(&base) {
        return Err(WeightsError::NotAFaceOfDim(
            p.face_names(&base).join(","),
            3,
        ));
    }
    // Extract the marked generator of each 2-face.
    let mut marks = Vec::with_capacity(kprime.len());
    for q in kprime {
        let mut q: Vec<usize> = q.clone();
        q.sort_unstable();
        q.dedup();
        let extra: Vec<usize> = q
            .iter()
            .copied()
            .filter(|v| base.binary_search(v).is_err())
            .collect();
        if extra.len() != 1 || q.len() != base.len() + 1 || !p.is_face(&q) {
            return Err(WeightsError::NotAFaceOfDim(p.face_names(&q).join(","), 2));
        }
        marks.push(extra[0]);
    }

    let meet = |x: usize, y: usize| -> Meet {
        let mut union = base.clone();
        union.extend([x, y]);
        union.sort_unstable();
        if p.is_face(&union) {
            Meet::Edge
        } else if p
            .cusps()
            .iter()
            .any(|a| union.iter().all(|v| a.binary_search(v).is_ok()))
        {
            Meet::CuspOnly
        } else {
            Meet::Nothing
        }
    };

    match marks.len() {
        4 => {
            let all_edges =
                (0..4).all(|i| (i + 1..4).all(|j| meet(marks[i], marks[j]) == Meet::Edge));
            if all_edges {
                return Ok(KprimeType::Type1);
            }
            // Try the three pairings into two groups of opposite faces.
            let pairings = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
            for pairing in pairings {
                let opposite_inside = pairing
                    .iter()
                    .all(|&(i, j)| meet(marks[i], marks[j]) != Meet::Edge);
                let edges_across = (0..4).all(|i| {
                    (i + 1..4).all(|j| {
                        let same_group = pairing.iter().any(|&(a, b)| (a, b) == (i, j));
                        same_group || meet(marks[i], marks[j]) == Meet::Edge
                    })
                });
                let mut all_four = base.clone();
                all_four.extend(marks.iter().copied());
                all_four.sort_unstable();
                let common_cusp = p
                    .cusps()
                    .iter()
                    .any(|a| all_four.iter().all(|v| a.binary_search(v).is_ok()));
                if opposite_inside && edges_across && !common_cusp {
                    return Ok(KprimeType::Type4);
                }
            }
            Ok(KprimeType::None)
        }
        3 => {
            let meets: Vec<Meet> = [(0, 1), (0, 2), (1, 2)]
                .iter()
                .map(|&(i, j)| meet(marks[i], marks[j]))
                .collect();
            if meets.iter().all(|&m| m == Meet::Edge) {
                return Ok(KprimeType::Type2);
            }
            let cusp_pairs = meets.iter().filter(|&&m| m == Meet::CuspOnly).count();
            let edge_pairs = meets.iter().filter(|&&m| m == Meet::Edge).count();
            if cusp_pairs == 1 && edge_pairs == 2 {
                return Ok(KprimeType::Type3);
            }
            Ok(KprimeType::None)
        }
        _ => Ok(KprimeType::None),
    }
}

/// Combinatorial shape of a small 3-face, recognized from its face profile.
///
/// The catalogue of 3-faces with at most six 2-faces is reconstructed from
/// the polytope constraints (finite vertices have degree 3, ideal vertices
/// degree 4); shapes beyond the unambiguous ones are reported by their
/// fingerprint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum FaceShape {
    Tetrahedron,
    TriangularPrism,
    SquarePyramidIdealApex,
    Cube,
    TriangularBipyramid,
    /// A cone over a pentagon; not a product of simplices, so its presence
    /// flags a non-conforming model.
    ConeOverPentagon,
    Other {
        two_faces: usize,
        fingerprint: String,
    },
}

impl std::fmt::Display for FaceShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FaceShape::Tetrahedron => write!(f, "tetrahedron"),
            FaceShape::TriangularPrism => write!(f, "triangular prism"),
            FaceShape::SquarePyramidIdealApex => write!(f, "square pyramid with ideal apex"),
            FaceShape::Cube => write!(f, "cube"),
            FaceShape::TriangularBipyramid => write!(f, "triangular bipyramid"),
            FaceShape::ConeOverPentagon => write!(f, "cone over a pentagon (excluded shape)"),
            FaceShape::Other {
                two_faces,
                fingerprint,
            } => {
                write!(f, "other {two_faces}-faced shape [{fingerprint}]")
            }
        }
    }
}

/// Recognizes the shape of the 3-face `F_T` from its local counts.
pub fn face_shape(p: &PolytopeModel, t: &[usize]) -> Result<FaceShape, WeightsError> {
    let mut base: Vec<usize> = t.to_vec();
    base.sort_unstable();
    base.dedup();
    if base.len() + 3 != p.dim() || !p.is_face(&base) {
        return Err(WeightsError::NotAFaceOfDim(
            p.face_names(&base).join(","),
            3,
        ));
    }
    let a0 = count_supersets(p.faces_of_dim(0), &base);
    let cusps: Vec<&Vec<usize>> = p
        .cusps()
        .iter()
        .filter(|a| base.iter().all(|v| a.binary_search(v).is_ok()))
        .collect();
    let c = cusps.len();
    let two_faces: Vec<&Vec<usize>> = supersets(p.faces_of_dim(2), &base).collect();
    let k = two_faces.len();
    // Per-2-face profile: (edges, cusps).
    let mut profiles: Vec<(usize, usize)> = two_faces
        .iter()
        .map(|q| {
            let e = count_supersets(p.faces_of_dim(1), q);
            let qc = cusps
                .iter()
                .filter(|a| q.iter().all(|v| a.binary_search(v).is_ok()))
                .count();
            (e, qc)
        })
        .collect();
    profiles.sort_unstable();

    let shape = match (k, a0, c, profiles.as_slice()) {
        (4, 4, 0, [(3, 0), (3, 0), (3, 0), (3, 0)]) => FaceShape::Tetrahedron,
        (5, 6, 0, [(3, 0), (3, 0), (4, 0), (4, 0), (4, 0)]) => FaceShape::TriangularPrism,
        (5, 4, 1, [(3, 1), (3, 1), (3, 1), (3, 1), (4, 0)]) => FaceShape::SquarePyramidIdealApex,
        (6, 8, 0, [(4, 0), (4, 0), (4, 0), (4, 0), (4, 0), (4, 0)]) => FaceShape::Cube,
        (6, 2, 3, [(3, 2), (3, 2), (3, 2), (3, 2), (3, 2), (3, 2)]) => {
            FaceShape::TriangularBipyramid
        }
        (6, 5, 1, [(3, 1), (3, 1), (3, 1), (3, 1), (3, 1), (5, 0)]) => FaceShape::ConeOverPentagon,
        _ => FaceShape::Other {
            two_faces: k,
            fingerprint: format!("a0={a0}, c={c}, 2-face profiles {profiles:?}"),
        },
    };
    Ok(shape)
}

/// Checks `sigma(F) >= 7 - k` on every good 3-face with `k <= 6` 2-faces and
/// reports the recognized shape of each; bad faces and faces with more than
/// six 2-faces are listed as skipped.
pub fn good_face_audit(p: &PolytopeModel) -> Result<AuditReport, WeightsError> {
    let mut report = AuditReport::new("good 3-face weight sums");
    if p.dim() < 3 {
        report.note("dimension below 3: nothing to audit");
        return Ok(report);
    }
    let faces = p.faces_of_dim(3).to_vec();
    let mut audited = 0usize;
    for t in &faces {
        let label = format!("{{{}}}", p.face_names(t).join(","));
        if is_bad_3face(p, t)? {
            report.note(format!("3-face {label}: bad (bipyramid), skipped"));
            continue;
        }
        let k = count_supersets(p.faces_of_dim(2), t);
        if k > 6 {
            report.note(format!(
                "3-face {label}: {k} 2-faces, above the audit range"
            ));
            continue;
        }
        audited += 1;
        let sigma = sigma_face(p, t)?;
        let needed = rational(7 - k as i64, 1);
        let shape = face_shape(p, t)?;
        report.check(
            format!(
                "good 3-face {label} ({shape}, k={k}): sigma >= {}",
                7 - k as i64
            ),
            sigma >= needed,
            Some(format!("sigma = {sigma}")),
        );
        if matches!(shape, FaceShape::ConeOverPentagon) {
            report.check(
                format!("3-face {label} is not a cone over a pentagon"),
                false,
                Some("cone over a pentagon is not a product of simplices".to_string()),
            );
        }
    }
    if audited == 0 {
        report.note("no good 3-faces with at most six 2-faces: vacuous pass");
    }
    Ok(report)
}

/// The dimension bound from the weighted counting argument: `96 C + 68`.
pub fn general_bound(c: &BigRational) -> BigRational {
    BigRational::from(BigInt::from(96)) * c + BigRational::from(BigInt::from(68))
}

/// Per-3-face weight sum with its 2-face count and bad flag.
#[derive(Debug, Clone, Serialize)]
pub struct FaceWeight {
    pub face: Vec<String>,
    pub two_faces: usize,
    pub bad: bool,
    /// Weight sum as an exact rational string.
    pub sigma: String,
}

/// Per-edge weight sum against its bound.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeWeight {
    pub edge: Vec<String>,
    pub value: String,
    pub bound: String,
    pub ok: bool,
}

/// The full weight report: every 3-face and every edge of the model.
#[derive(Debug, Clone, Serialize)]
pub struct WeightReport {
    pub faces: Vec<FaceWeight>,
    pub edges: Vec<EdgeWeight>,
    pub all_edges_ok: bool,
}

pub fn weight_report(p: &PolytopeModel) -> Result<WeightReport, WeightsError> {
    let mut faces = Vec::new();
    if p.dim() >= 3 {
        for t in p.faces_of_dim(3).to_vec() {
            faces.push(FaceWeight {
                face: p.face_names(&t),
                two_faces: count_supersets(p.faces_of_dim(2), &t),
                bad: is_bad_3face(p, &t)?,
                sigma: sigma_face(p, &t)?.to_string(),
            });
        }
    }
    let mut edges = Vec::new();
    if p.dim() >= 1 {
        for t in p.faces_of_dim(1).to_vec() {
            let e = sigma_edge(p, &t)?;
            edges.push(EdgeWeight {
                edge: p.face_names(&t),
                value: e.value.to_string(),
                bound: e.bound.to_string(),
                ok: e.ok,
            });
        }
    }
    Ok(WeightReport {
        all_edges_ok: edges.iter().all(|e| e.ok),
        faces,
        edges,
    })
}
