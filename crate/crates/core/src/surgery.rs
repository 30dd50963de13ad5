//! Cutting a nerve along a codimension-1 flat and the inverse gluing.
//!
//! Cutting an interior flat splits the nerve into the two complement
//! components, each completed by the flat and coned by one fresh generator.
//! The cone vertex commutes with every flat generator (label 2: the only
//! label making every flat simplex extend to a spherical set) and is
//! unrelated (infinite) to everything else, so the cone is exactly over the
//! flat.  Gluing reverses this: the two cone vertices disappear, the flats
//! are identified along a label-preserving match, and all cross-piece labels
//! are infinite so no simplices appear beyond the two pieces.

use thiserror::Error;

use crate::diagram::{CoxeterMatrix, EdgeLabel};
use crate::nerve::{
    build_nerve, complement_components, enumerate_affine_flats, flat_boundary_position,
    maximal_flats, AffineFlat, FlatPosition, Nerve, NerveError, DEFAULT_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("flat is already in boundary position (cone vertex `{0}`); nothing to cut")]
    AlreadyBoundary(String),
    #[error("complement has {0} components; cutting needs exactly 2")]
    BadComplement(usize),
    #[error("subset is not an affine flat of the nerve")]
    NotAFlat,
    #[error("the {0} flat is not in boundary position")]
    NotBoundary(&'static str),
    #[error("match does not pair the flats bijectively")]
    MatchNotBijective,
    #[error("match is not label-preserving: m({0},{1}) differs from m({2},{3})")]
    MatchLabelMismatch(String, String, String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("normalization exceeded its cut budget of {0}")]
    NormalizationCap(usize),
    #[error(transparent)]
    Nerve(#[from] NerveError),
}

/// Outcome of a cut: the two coned pieces, the fresh cone vertex of each,
/// and the generators of the flat that was cut.
#[derive(Debug, Clone)]
pub struct CutResult {
    pub pieces: [Nerve; 2],
    pub cone_vertex_names: [String; 2],
    pub flat_generators: Vec<String>,
}

fn fresh_cone_name(taken: &[String]) -> String {
    (0..)
        .map(|k| format!("c{k}"))
        .find(|cand| !taken.contains(cand))
        .expect("unbounded name supply")
}

/// Looks up the enumerated flat with the given generator set.
pub fn find_flat(nerve: &Nerve, generators: &[usize]) -> Result<AffineFlat, SurgeryError> {
    let mut wanted: Vec<usize> = generators.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    enumerate_affine_flats(&nerve.matrix, DEFAULT_CAP)?
        .into_iter()
        .find(|f| f.generators == wanted)
        .ok_or(SurgeryError::NotAFlat)
}

/// Cuts the nerve along an interior flat and cones each side.
pub fn cut_along_flat(nerve: &Nerve, flat: &AffineFlat) -> Result<CutResult, SurgeryError> {
    match flat_boundary_position(nerve, flat) {
        FlatPosition::Boundary { cone_vertex } => {
            return Err(SurgeryError::AlreadyBoundary(cone_vertex))
        }
        FlatPosition::NonSeparating { components } => {
            return Err(SurgeryError::BadComplement(components))
        }
        FlatPosition::Interior => {}
    }
    let comps = complement_components(nerve, flat);
    debug_assert_eq!(comps.len(), 2);

    let mut pieces = Vec::with_capacity(2);
    let mut cone_names = Vec::with_capacity(2);
    for comp in &comps {
        let mut kept: Vec<usize> = comp.iter().chain(flat.generators.iter()).copied().collect();
        kept.sort_unstable();
        let mut names: Vec<String> = kept
            .iter()
            .map(|&v| nerve.matrix.name(v).to_string())
            .collect();
        let cone = fresh_cone_name(&names);
        names.push(cone.clone());
        let cone_idx = names.len() - 1;

        let mut m = CoxeterMatrix::new(names).unwrap();
        for (a, &va) in kept.iter().enumerate() {
            for (b, &vb) in kept.iter().enumerate().skip(a + 1) {
                m.set_label(a, b, nerve.matrix.label(va, vb));
            }
            let in_flat = flat.generators.binary_search(&va).is_ok();
            m.set_label(
                a,
                cone_idx,
                if in_flat {
                    EdgeLabel::Finite(2)
                } else {
                    EdgeLabel::Infinite
                },
            );
        }

        let mut piece = build_nerve(&m, DEFAULT_CAP)?;
        piece.cone_vertices = nerve
            .cone_vertices
            .iter()
            .filter(|c| m.index_of(c).is_some())
            .cloned()
            .collect();
        piece.cone_vertices.insert(cone.clone());
        pieces.push(piece);
        cone_names.push(cone);
    }

    Ok(CutResult {
        pieces: pieces.try_into().expect("two components"),
        cone_vertex_names: cone_names.try_into().expect("two components"),
        flat_generators: flat
            .generators
            .iter()
            .map(|&v| nerve.matrix.name(v).to_string())
            .collect(),
    })
}

/// Glues two nerves along boundary flats identified by `pairing`
/// (names in the first matrix mapped to names in the second).
pub fn glue_along_flat(
    n1: &Nerve,
    f1: &AffineFlat,
    n2: &Nerve,
    f2: &AffineFlat,
    pairing: &[(String, String)],
) -> Result<Nerve, SurgeryError> {
    let c1 = match flat_boundary_position(n1, f1) {
        FlatPosition::Boundary { cone_vertex } => cone_vertex,
        _ => return Err(SurgeryError::NotBoundary("first")),
    };
    let c2 = match flat_boundary_position(n2, f2) {
        FlatPosition::Boundary { cone_vertex } => cone_vertex,
        _ => return Err(SurgeryError::NotBoundary("second")),
    };

    // The pairing must be a bijection between the two generator sets.
    if pairing.len() != f1.generators.len() || pairing.len() != f2.generators.len() {
        return Err(SurgeryError::MatchNotBijective);
    }
    let mut map: Vec<(usize, usize)> = Vec::with_capacity(pairing.len());
    for (a, x) in pairing {
        let ia = n1
            .matrix
            .index_of(a)
            .ok_or_else(|| SurgeryError::UnknownVertex(a.clone()))?;
        let ix = n2
            .matrix
            .index_of(x)
            .ok_or_else(|| SurgeryError::UnknownVertex(x.clone()))?;
        if f1.generators.binary_search(&ia).is_err() || f2.generators.binary_search(&ix).is_err() {
            return Err(SurgeryError::MatchNotBijective);
        }
        if map.iter().any(|&(pa, px)| pa == ia || px == ix) {
            return Err(SurgeryError::MatchNotBijective);
        }
        map.push((ia, ix));
    }
    for (k, &(a1, x1)) in map.iter().enumerate() {
        for &(a2, x2) in &map[k + 1..] {
            if n1.matrix.label(a1, a2) != n2.matrix.label(x1, x2) {
                return Err(SurgeryError::MatchLabelMismatch(
                    n1.matrix.name(a1).to_string(),
                    n1.matrix.name(a2).to_string(),
                    n2.matrix.name(x1).to_string(),
                    n2.matrix.name(x2).to_string(),
                ));
            }
        }
    }

    let c1_idx = n1.matrix.index_of(&c1).expect("cone vertex exists");
    let c2_idx = n2.matrix.index_of(&c2).expect("cone vertex exists");

    // Kept generators: piece 1 without its cone vertex, then piece 2 without
    // its cone vertex and without the identified flat.
    let keep1: Vec<usize> = (0..n1.matrix.rank()).filter(|&v| v != c1_idx).collect();
    let keep2: Vec<usize> = (0..n2.matrix.rank())
        .filter(|&v| v != c2_idx && f2.generators.binary_search(&v).is_err())
        .collect();

    let mut names: Vec<String> = keep1
        .iter()
        .map(|&v| n1.matrix.name(v).to_string())
        .collect();
    let mut renamed2: Vec<String> = Vec::with_capacity(keep2.len());
    for &v in &keep2 {
        let base = n2.matrix.name(v).to_string();
        let mut candidate = base.clone();
        let mut k = 2;
        while names.contains(&candidate) || renamed2.contains(&candidate) {
            candidate = format!("{base}_{k}");
            k += 1;
        }
        renamed2.push(candidate);
    }
    names.extend(renamed2.iter().cloned());

    let mut m = CoxeterMatrix::new(names).unwrap();
    let off = keep1.len();
    // Piece 1 labels (flat included).
    for a in 0..keep1.len() {
        for b in a + 1..keep1.len() {
            m.set_label(a, b, n1.matrix.label(keep1[a], keep1[b]));
        }
    }
    // Piece 2 internal labels, and piece-2-to-flat labels through the match.
    let flat_in_1: Vec<usize> = map
        .iter()
        .map(|&(a, _)| keep1.binary_search(&a).expect("flat survives in piece 1"))
        .collect();
    for a in 0..keep2.len() {
        for b in a + 1..keep2.len() {
            m.set_label(off + a, off + b, n2.matrix.label(keep2[a], keep2[b]));
        }
        for (&(_, x), &pos1) in map.iter().zip(&flat_in_1) {
            m.set_label(off + a, pos1, n2.matrix.label(keep2[a], x));
        }
        // Cross-piece labels default to infinity.
        for b in 0..keep1.len() {
            if flat_in_1.contains(&b) {
                continue;
            }
            m.set_label(off + a, b, EdgeLabel::Infinite);
        }
    }

    let mut glued = build_nerve(&m, DEFAULT_CAP)?;
    let mut cones: std::collections::BTreeSet<String> = n1
        .cone_vertices
        .iter()
        .filter(|c| **c != c1)
        .cloned()
        .collect();
    for (pos, &v) in keep2.iter().enumerate() {
        let original = n2.matrix.name(v);
        if n2.cone_vertices.contains(original) && original != c2 {
            cones.insert(m.name(off + pos).to_string());
        }
    }
    glued.cone_vertices = cones;
    Ok(glued)
}

/// Repeatedly cuts the first interior codimension-1 flat (canonical order)
/// until every maximal codimension-1 flat of every piece is in boundary
/// position.  The cut budget equals the initial flat count; a non-separating
/// flat is refused rather than guessed at.
pub fn normalize_boundary(nerve: &Nerve, dim: usize) -> Result<Vec<Nerve>, SurgeryError> {
    let budget = maximal_flats(&nerve.matrix, DEFAULT_CAP)?
        .into_iter()
        .filter(|f| f.flat_dim + 1 == dim)
        .count();
    let mut pieces = vec![nerve.clone()];
    let mut cuts = 0;
    loop {
        let mut action: Option<(usize, AffineFlat)> = None;
        'pieces: for (k, piece) in pieces.iter().enumerate() {
            for flat in maximal_flats(&piece.matrix, DEFAULT_CAP)? {
                if flat.flat_dim + 1 != dim {
                    continue;
                }
                match flat_boundary_position(piece, &flat) {
                    FlatPosition::Boundary { .. } => {}
                    FlatPosition::Interior => {
                        action = Some((k, flat));
                        break 'pieces;
                    }
                    FlatPosition::NonSeparating { components } => {
                        return Err(SurgeryError::BadComplement(components));
                    }
                }
            }
        }
        let Some((k, flat)) = action else {
            return Ok(pieces);
        };
        if cuts == budget {
            return Err(SurgeryError::NormalizationCap(budget));
        }
        cuts += 1;
        let cut = cut_along_flat(&pieces[k], &flat)?;
        pieces.remove(k);
        let [p1, p2] = cut.pieces;
        pieces.push(p1);
        pieces.push(p2);
    }
}
