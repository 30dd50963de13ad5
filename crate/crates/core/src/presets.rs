//! Built-in example matrices.
//!
//! These are the concrete instances the command-line `example` subcommand
//! emits and the test suites audit.

use crate::diagram::{CoxeterMatrix, EdgeLabel};
use crate::nerve::SimplicialComplex;

/// Right-angled group with `k` commuting infinite dihedral pairs.
///
/// Generators come in pairs `u{i}`, `l{i}` (upper and lower) with label
/// infinity inside a pair and 2 across pairs.  The nerve is the boundary of
/// the `k`-dimensional cross-polytope.
pub fn rac_cube(k: usize) -> CoxeterMatrix {
    assert!(k >= 1);
    let mut names = Vec::with_capacity(2 * k);
    for i in 1..=k {
        names.push(format!("u{i}"));
        names.push(format!("l{i}"));
    }
    let mut m = CoxeterMatrix::new(names).unwrap();
    for i in 0..k {
        m.set_label(2 * i, 2 * i + 1, EdgeLabel::Infinite);
    }
    m
}

/// The 16-generator example: an 8-pair cube with extra infinite edges
/// between the `A` pairs and the `B` triples.
///
/// Pairs 1 and 2 form the groups `A1`, `A2`; pairs 3-5 form `B1` and pairs
/// 6-8 form `B2`.  The upper vertex of `A1` is joined to the three upper
/// vertices of `B1`, the lower vertex of `A1` to the lower vertices of `B2`,
/// and symmetrically for `A2`.  Added edges carry label infinity so the
/// group stays right-angled.
pub fn pv_example() -> CoxeterMatrix {
    pv_example_with_pairs(8)
}

/// Variant of [`pv_example`] on `k >= 8` pairs; pairs beyond the eighth are
/// left untouched.
pub fn pv_example_with_pairs(k: usize) -> CoxeterMatrix {
    assert!(k >= 8, "the construction uses 8 pairs");
    let mut m = rac_cube(k);
    let upper = |i: usize| format!("u{i}");
    let lower = |i: usize| format!("l{i}");
    // (A1 upper, B1 uppers), (A1 lower, B2 lowers), (A2 upper, B2 uppers),
    // (A2 lower, B1 lowers).
    for b in 3..=5 {
        m.set_label_by_name(&upper(1), &upper(b), EdgeLabel::Infinite)
            .unwrap();
        m.set_label_by_name(&lower(2), &lower(b), EdgeLabel::Infinite)
            .unwrap();
    }
    for b in 6..=8 {
        m.set_label_by_name(&lower(1), &lower(b), EdgeLabel::Infinite)
            .unwrap();
        m.set_label_by_name(&upper(2), &upper(b), EdgeLabel::Infinite)
            .unwrap();
    }
    m
}

/// Reflection group in the faces of the right-angled ideal octahedron.
///
/// The 8 generators are the octahedron faces, one per sign octant; two faces
/// get label 2 when they share an edge (octants at Hamming distance 1) and
/// infinity otherwise.  The six ideal vertices show up as the maximal
/// 2-dimensional flats.
pub fn ideal_octahedron() -> CoxeterMatrix {
    let name = |bits: usize| {
        let c = |b: usize| if bits >> b & 1 == 1 { 'p' } else { 'n' };
        format!("f{}{}{}", c(0), c(1), c(2))
    };
    let names: Vec<String> = (0..8).map(name).collect();
    let mut m = CoxeterMatrix::new(names).unwrap();
    for a in 0..8usize {
        for b in a + 1..8 {
            if (a ^ b).count_ones() > 1 {
                m.set_label(a, b, EdgeLabel::Infinite);
            }
        }
    }
    m
}

/// The generator subsets corresponding to the six ideal vertices of
/// [`ideal_octahedron`]: for each coordinate and sign, the four faces lying
/// in that half-space.
pub fn ideal_octahedron_flats() -> Vec<Vec<usize>> {
    let mut flats = Vec::new();
    for coord in 0..3usize {
        for sign in [0usize, 1] {
            let mut flat: Vec<usize> = (0..8).filter(|b| b >> coord & 1 == sign).collect();
            flat.sort_unstable();
            flats.push(flat);
        }
    }
    flats
}

/// The ideal octahedron group with every ideal vertex truncated: one new
/// generator per maximal flat, commuting with the flat and infinite to
/// everything else.  The nerve is a 14-vertex 2-sphere, every
/// codimension-1 flat sits in the boundary, and the new generators are the
/// marked cone vertices.
pub fn ideal_octahedron_truncated() -> crate::nerve::Nerve {
    let base = ideal_octahedron();
    let flats = ideal_octahedron_flats();
    let mut names: Vec<String> = base.names().to_vec();
    let cone_names: Vec<String> = ["kxn", "kxp", "kyn", "kyp", "kzn", "kzp"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend(cone_names.iter().cloned());
    let mut m = CoxeterMatrix::new(names).unwrap();
    for a in 0..8usize {
        for b in a + 1..8 {
            m.set_label(a, b, base.label(a, b));
        }
    }
    for (k, flat) in flats.iter().enumerate() {
        let cone = 8 + k;
        for v in 0..8usize {
            if !flat.contains(&v) {
                m.set_label(cone, v, EdgeLabel::Infinite);
            }
        }
        for other in 8..8 + flats.len() {
            if other != cone && other > cone {
                m.set_label(cone, other, EdgeLabel::Infinite);
            }
        }
    }
    let mut nerve = crate::nerve::build_nerve(&m, crate::nerve::DEFAULT_CAP).unwrap();
    nerve.cone_vertices = cone_names.into_iter().collect();
    nerve
}

/// Right-angled group whose polytope is the triangular bipyramid with three
/// ideal equator vertices (the "bad 3-face" shape).
///
/// Generators are the six bipyramid faces `u12, u23, u13, l12, l23, l13`;
/// upper faces and lower faces are pairwise adjacent (label 2), a matching
/// upper/lower pair shares an equator edge (label 2), and everything else is
/// infinite.
pub fn bad_bipyramid() -> CoxeterMatrix {
    let names = vec!["u12", "u23", "u13", "l12", "l23", "l13"];
    let mut m = CoxeterMatrix::new(names).unwrap();
    // Infinite labels between upper and lower faces with different subscripts.
    for i in 0..3usize {
        for j in 3..6usize {
            if j - 3 != i {
                m.set_label(i, j, EdgeLabel::Infinite);
            }
        }
    }
    m
}

/// Right-angled group on the icosahedron: 12 generators, label 2 on
/// icosahedron edges, infinity otherwise.  The nerve is the icosahedron
/// boundary and the dual polytope is the right-angled dodecahedron.
pub fn right_angled_dodecahedron() -> CoxeterMatrix {
    let complex = icosahedron_complex();
    let names: Vec<String> = complex.names().to_vec();
    let n = names.len();
    let mut m = CoxeterMatrix::new(names).unwrap();
    for a in 0..n {
        for b in a + 1..n {
            if !complex.contains(&[a, b]) {
                m.set_label(a, b, EdgeLabel::Infinite);
            }
        }
    }
    m
}

/// The boundary of the icosahedron: 12 vertices, 30 edges, 20 triangles.
pub fn icosahedron_complex() -> SimplicialComplex {
    let mut names: Vec<String> = vec!["n".into(), "s".into()];
    for i in 0..5 {
        names.push(format!("a{i}"));
    }
    for i in 0..5 {
        names.push(format!("b{i}"));
    }
    // n = 0, s = 1, upper ring a_i = 2 + i, lower ring b_i = 7 + i.
    let a = |i: usize| 2 + i % 5;
    let b = |i: usize| 7 + i % 5;
    let mut facets = Vec::new();
    for i in 0..5 {
        facets.push(vec![0, a(i), a(i + 1)]);
        facets.push(vec![1, b(i), b(i + 1)]);
        facets.push(vec![a(i), b(i), a(i + 1)]);
        facets.push(vec![b(i), a(i + 1), b(i + 1)]);
    }
    SimplicialComplex::from_facets(names, facets)
}
