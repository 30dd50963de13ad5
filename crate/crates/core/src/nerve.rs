//! The nerve of a Coxeter system and its Euclidean flats.
//!
//! A generator subset spans a simplex of the nerve iff its induced diagram
//! is elliptic; a subset is an affine flat iff every connected component of
//! its induced diagram is parabolic.  Codimension-1 flats, their isolation,
//! and their position relative to the boundary of the nerve are the standing
//! hypotheses every later audit builds on.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{classify, Kind};
use crate::diagram::{CoxeterMatrix, Diagram};
use crate::report::AuditReport;

/// Default ceiling on enumerated subsets; subset lattices explode, so the
/// tool fails loudly instead of truncating.
pub const DEFAULT_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NerveError {
    #[error("enumeration cap of {cap} exceeded after {reached} subsets (size {depth} reached)")]
    CapExceeded {
        cap: usize,
        reached: usize,
        depth: usize,
    },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

/// Finite abstract simplicial complex over named vertices.
///
/// Stored canonically as the sorted list of facets (maximal simplices);
/// every vertex of the vertex set is a simplex, so isolated vertices are
/// singleton facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    names: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Normalizes: sorts each facet, drops duplicates and faces of other
    /// facets, and adds singleton facets for uncovered vertices.
    pub fn from_facets(names: Vec<String>, facets: Vec<Vec<usize>>) -> Self {
        let n = names.len();
        let mut cleaned: Vec<Vec<usize>> = Vec::new();
        let mut covered = vec![false; n];
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            assert!(f.iter().all(|&v| v < n), "facet vertex out of range");
            for &v in &f {
                covered[v] = true;
            }
            cleaned.push(f);
        }
        for (v, was_covered) in covered.iter().enumerate() {
            if !was_covered {
                cleaned.push(vec![v]);
            }
        }
        cleaned.sort();
        cleaned.dedup();
        // Drop non-maximal entries.
        let maximal: Vec<Vec<usize>> = cleaned
            .iter()
            .filter(|f| {
                !cleaned
                    .iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|v| g.binary_search(v).is_ok()))
            })
            .cloned()
            .collect();
        SimplicialComplex {
            names,
            facets: maximal,
        }
    }

    pub fn empty() -> Self {
        SimplicialComplex {
            names: Vec::new(),
            facets: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Dimension of the complex, or `None` when it has no simplices.
    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    pub fn is_pure(&self, d: usize) -> bool {
        !self.facets.is_empty() && self.facets.iter().all(|f| f.len() == d + 1)
    }

    /// Membership test; `simplex` need not be sorted.
    pub fn contains(&self, simplex: &[usize]) -> bool {
        if simplex.is_empty() {
            return true;
        }
        self.facets
            .iter()
            .any(|f| simplex.iter().all(|v| f.binary_search(v).is_ok()))
    }

    /// Every nonempty simplex, grouped by number of vertices.
    pub fn all_simplices(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            let k = f.len();
            // All nonempty subsets of the facet.
            for mask in 1u64..(1 << k) {
                let sub: Vec<usize> = (0..k)
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| f[b])
                    .collect();
                out.insert(sub);
            }
        }
        out
    }

    /// Simplices with exactly `k` vertices (dimension `k - 1`), sorted.
    pub fn simplices_of_size(&self, k: usize) -> Vec<Vec<usize>> {
        self.all_simplices()
            .into_iter()
            .filter(|s| s.len() == k)
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for s in self.all_simplices() {
            chi += if (s.len() - 1) % 2 == 0 { 1 } else { -1 };
        }
        chi
    }

    fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertex_count()];
        for f in &self.facets {
            for (a, &u) in f.iter().enumerate() {
                for &v in &f[a + 1..] {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        adj
    }

    /// Connected components of the 1-skeleton, as sorted vertex sets ordered
    /// by least vertex name.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by(|a, b| self.names[a[0]].cmp(&self.names[b[0]]));
        comps
    }

    /// Full subcomplex on a vertex subset: all simplices contained in it.
    pub fn full_subcomplex(&self, vs: &[usize]) -> SimplicialComplex {
        let mut vs: Vec<usize> = vs.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let pos: BTreeMap<usize, usize> = vs.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let names: Vec<String> = vs.iter().map(|&v| self.names[v].clone()).collect();
        let mut facets = Vec::new();
        // Restrictions of facets generate the full subcomplex.
        for f in &self.facets {
            let restricted: Vec<usize> = f.iter().filter_map(|v| pos.get(v).copied()).collect();
            if !restricted.is_empty() {
                facets.push(restricted);
            }
        }
        SimplicialComplex::from_facets(names, facets)
    }

    /// True iff every set of pairwise-adjacent vertices spans a simplex.
    ///
    /// Walks cliques of the 1-skeleton in index order, stopping at the first
    /// clique that is not a simplex; on a flag complex this visits each
    /// simplex once.
    pub fn is_flag(&self) -> bool {
        let adj = self.adjacency();
        let n = self.vertex_count();

        fn extend(
            complex: &SimplicialComplex,
            adj: &[BTreeSet<usize>],
            clique: &mut Vec<usize>,
            n: usize,
        ) -> bool {
            let last = *clique.last().unwrap();
            for v in last + 1..n {
                if clique.iter().all(|&u| adj[u].contains(&v)) {
                    clique.push(v);
                    if !complex.contains(clique) || !extend(complex, adj, clique, n) {
                        return false;
                    }
                    clique.pop();
                }
            }
            true
        }

        for start in 0..n {
            let mut clique = vec![start];
            if !extend(self, &adj, &mut clique, n) {
                return false;
            }
        }
        true
    }
}

/// The nerve: simplicial complex of spherical generator subsets, together
/// with the matrix it came from and the generators marked as cone points of
/// flats (empty unless produced by surgery or marked explicitly).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nerve {
    pub complex: SimplicialComplex,
    pub matrix: CoxeterMatrix,
    pub cone_vertices: BTreeSet<String>,
}

impl Nerve {
    pub fn cone_indices(&self) -> BTreeSet<usize> {
        self.cone_vertices
            .iter()
            .filter_map(|n| self.matrix.index_of(n))
            .collect()
    }

    /// JSON export document: vertex list, facet list, cone vertices, flats.
    pub fn to_json(&self) -> Result<NerveJson, NerveError> {
        let flats = enumerate_affine_flats(&self.matrix, DEFAULT_CAP)?;
        Ok(NerveJson {
            vertices: self.complex.names().to_vec(),
            facets: self
                .complex
                .facets()
                .iter()
                .map(|f| {
                    f.iter()
                        .map(|&v| self.complex.name(v).to_string())
                        .collect()
                })
                .collect(),
            cone_vertices: self.cone_vertices.iter().cloned().collect(),
            flats: flats
                .iter()
                .map(|fl| FlatJson {
                    generators: fl.names(&self.matrix),
                    flat_dim: fl.flat_dim,
                    maximal: fl.maximal,
                })
                .collect(),
        })
    }
}

/// Serialized nerve document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NerveJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    pub cone_vertices: Vec<String>,
    pub flats: Vec<FlatJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlatJson {
    pub generators: Vec<String>,
    pub flat_dim: usize,
    pub maximal: bool,
}

impl NerveJson {
    /// Rebuilds the simplicial complex (for homology checks on an imported
    /// nerve; the Coxeter matrix is not part of the document).
    pub fn complex(&self) -> SimplicialComplex {
        let names = self.vertices.clone();
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|n| index[n.as_str()]).collect())
            .collect();
        SimplicialComplex::from_facets(names, facets)
    }
}

/// Builds the nerve: enumerates every nonempty generator subset whose
/// induced diagram is elliptic, by extension of spherical sets (complete
/// because ellipticity is hereditary).  Errors out when more than `cap`
/// subsets appear.
pub fn build_nerve(matrix: &CoxeterMatrix, cap: usize) -> Result<Nerve, NerveError> {
    let spherical = spherical_subsets(matrix, cap)?;
    let facets: Vec<Vec<usize>> = spherical
        .iter()
        .filter(|t| {
            (0..matrix.rank()).all(|v| {
                if t.binary_search(&v).is_ok() {
                    return true;
                }
                let mut ext = (*t).clone();
                ext.push(v);
                ext.sort_unstable();
                !spherical.contains(&ext)
            })
        })
        .cloned()
        .collect();
    Ok(Nerve {
        complex: SimplicialComplex::from_facets(matrix.names().to_vec(), facets),
        matrix: matrix.clone(),
        cone_vertices: BTreeSet::new(),
    })
}

/// All nonempty spherical (elliptic) generator subsets, sorted.
pub fn spherical_subsets(
    matrix: &CoxeterMatrix,
    cap: usize,
) -> Result<BTreeSet<Vec<usize>>, NerveError> {
    let d = matrix.to_diagram();
    let n = matrix.rank();
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for t in &frontier {
        out.insert(t.clone());
    }
    if out.len() > cap {
        return Err(NerveError::CapExceeded {
            cap,
            reached: out.len(),
            depth: 1,
        });
    }
    let mut depth = 1;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for t in &frontier {
            let last = *t.last().unwrap();
            for v in last + 1..n {
                let mut ext = t.clone();
                ext.push(v);
                if classify(&d.induced_subdiagram(&ext)).kind == Kind::Elliptic {
                    if out.len() + 1 > cap {
                        return Err(NerveError::CapExceeded {
                            cap,
                            reached: out.len() + 1,
                            depth,
                        });
                    }
                    out.insert(ext.clone());
                    next.push(ext);
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// An affine (Euclidean) generator subset: every connected component of its
/// induced diagram is parabolic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineFlat {
    /// Generator indices, sorted.
    pub generators: Vec<usize>,
    /// `|T|` minus the number of connected components.
    pub flat_dim: usize,
    /// True when no affine superset exists.
    pub maximal: bool,
}

impl AffineFlat {
    pub fn names(&self, matrix: &CoxeterMatrix) -> Vec<String> {
        let mut names: Vec<String> = self
            .generators
            .iter()
            .map(|&v| matrix.name(v).to_string())
            .collect();
        names.sort();
        names
    }
}

/// Enumerates every affine subset with dimension and maximality flags.
///
/// An affine subset decomposes uniquely into connected parabolic pieces with
/// pairwise label 2; the enumeration first collects the connected parabolic
/// subsets (pruned by positive semidefiniteness, which connected subsets of
/// a parabolic diagram satisfy), then combines compatible pieces.  Canonical
/// order: by size, then by sorted name list.
pub fn enumerate_affine_flats(
    matrix: &CoxeterMatrix,
    cap: usize,
) -> Result<Vec<AffineFlat>, NerveError> {
    let d = matrix.to_diagram();
    let n = matrix.rank();

    // Connected subsets whose induced diagram is connected parabolic.
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0usize;

    fn grow(
        d: &Diagram,
        current: &mut Vec<usize>,
        banned: &mut Vec<usize>,
        pieces: &mut Vec<Vec<usize>>,
        counter: &mut usize,
        cap: usize,
        root: usize,
    ) -> Result<(), NerveError> {
        *counter += 1;
        if *counter > cap {
            return Err(NerveError::CapExceeded {
                cap,
                reached: *counter,
                depth: current.len(),
            });
        }
        let mut sorted = current.clone();
        sorted.sort_unstable();
        match classify(&d.induced_subdiagram(&sorted)).kind {
            Kind::Indefinite => return Ok(()),
            Kind::Parabolic => pieces.push(sorted),
            Kind::Elliptic => {}
        }
        // Frontier: neighbors of the current set, above the root, not banned.
        let frontier: Vec<usize> = {
            let mut f = BTreeSet::new();
            for &u in current.iter() {
                for v in d.neighbors(u) {
                    if v > root && !current.contains(&v) && !banned.contains(&v) {
                        f.insert(v);
                    }
                }
            }
            f.into_iter().collect()
        };
        let banned_mark = banned.len();
        for v in frontier {
            current.push(v);
            grow(d, current, banned, pieces, counter, cap, root)?;
            current.pop();
            banned.push(v);
        }
        banned.truncate(banned_mark);
        Ok(())
    }

    for root in 0..n {
        grow(
            &d,
            &mut vec![root],
            &mut Vec::new(),
            &mut pieces,
            &mut counter,
            cap,
            root,
        )?;
    }
    pieces.sort();
    pieces.dedup();

    // Compatibility: disjoint pieces with label 2 between them.
    let compatible = |a: &[usize], b: &[usize]| -> bool {
        a.iter().all(|&x| {
            b.iter()
                .all(|&y| x != y && d.label_between(x, y) == crate::diagram::EdgeLabel::Finite(2))
        })
    };

    // Unions of pairwise compatible pieces.
    let mut flats_raw: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();

    fn combine(
        pieces: &[Vec<usize>],
        compatible: &dyn Fn(&[usize], &[usize]) -> bool,
        from: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, usize)>,
        counter: &mut usize,
        cap: usize,
    ) -> Result<(), NerveError> {
        if !chosen.is_empty() {
            *counter += 1;
            if *counter > cap {
                return Err(NerveError::CapExceeded {
                    cap,
                    reached: *counter,
                    depth: chosen.len(),
                });
            }
            let mut union: Vec<usize> = chosen
                .iter()
                .flat_map(|&i| pieces[i].iter().copied())
                .collect();
            union.sort_unstable();
            out.push((union, chosen.len()));
        }
        for i in from..pieces.len() {
            if chosen.iter().all(|&j| compatible(&pieces[j], &pieces[i])) {
                chosen.push(i);
                combine(pieces, compatible, i + 1, chosen, out, counter, cap)?;
                chosen.pop();
            }
        }
        Ok(())
    }

    let mut combo_counter = 0usize;
    combine(
        &pieces,
        &compatible,
        0,
        &mut chosen,
        &mut flats_raw,
        &mut combo_counter,
        cap,
    )?;

    let mut flats: Vec<AffineFlat> = flats_raw
        .into_iter()
        .map(|(generators, components)| {
            let maximal = pieces.iter().all(|p| !compatible(p, &generators));
            AffineFlat {
                flat_dim: generators.len() - components,
                generators,
                maximal,
            }
        })
        .collect();
    flats.sort_by(|a, b| {
        (a.generators.len(), a.names(matrix)).cmp(&(b.generators.len(), b.names(matrix)))
    });
    Ok(flats)
}

/// Position of a codimension-1 flat relative to the boundary of the nerve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FlatPosition {
    /// Some complement component is a single vertex coning the whole flat
    /// subcomplex (the canonically least such vertex is reported).
    Boundary { cone_vertex: String },
    /// Exactly two complement components, neither a cone point.
    Interior,
    /// Anything else, with the complement component count.
    NonSeparating { components: usize },
}

/// Connected components of the full subcomplex on the complement of the
/// flat's generators, as sets of global vertex indices.
pub fn complement_components(nerve: &Nerve, flat: &AffineFlat) -> Vec<Vec<usize>> {
    let n = nerve.complex.vertex_count();
    let complement: Vec<usize> = (0..n)
        .filter(|v| flat.generators.binary_search(v).is_err())
        .collect();
    let sub = nerve.complex.full_subcomplex(&complement);
    sub.connected_components()
        .into_iter()
        .map(|comp| comp.into_iter().map(|v| complement[v]).collect())
        .collect()
}

/// Computes the [`FlatPosition`] of a flat from the components of the full
/// subcomplex on the complement of its generators.
pub fn flat_boundary_position(nerve: &Nerve, flat: &AffineFlat) -> FlatPosition {
    let comps = complement_components(nerve, flat);

    let flat_sub = nerve.complex.full_subcomplex(&flat.generators);
    let mut cone_vertices: Vec<&str> = Vec::new();
    for comp in &comps {
        if comp.len() != 1 {
            continue;
        }
        let v = comp[0];
        // v cones the flat iff sigma + {v} is a simplex for every simplex of
        // the flat subcomplex; facets suffice.
        let cones = flat_sub.facets().iter().all(|f| {
            let mut s: Vec<usize> = f.iter().map(|&x| flat.generators[x]).collect();
            s.push(v);
            nerve.complex.contains(&s)
        });
        if cones {
            cone_vertices.push(nerve.complex.name(v));
        }
    }
    if let Some(least) = cone_vertices.iter().min() {
        return FlatPosition::Boundary {
            cone_vertex: least.to_string(),
        };
    }
    if comps.len() == 2 {
        FlatPosition::Interior
    } else {
        FlatPosition::NonSeparating {
            components: comps.len(),
        }
    }
}

fn flat_label(matrix: &CoxeterMatrix, flat: &AffineFlat) -> String {
    format!(
        "{{{}}} (dim {})",
        flat.names(matrix).join(","),
        flat.flat_dim
    )
}

/// Maximal flats of rank at least 2 (the Euclidean subgroups the
/// codimension-1 hypotheses quantify over; rank-1 infinite dihedral pairs
/// are enumerated but not peripheral).
pub fn maximal_flats(matrix: &CoxeterMatrix, cap: usize) -> Result<Vec<AffineFlat>, NerveError> {
    Ok(enumerate_affine_flats(matrix, cap)?
        .into_iter()
        .filter(|f| f.maximal && f.flat_dim >= 2)
        .collect())
}

/// Pass iff every maximal flat (of rank >= 2) has dimension `dim - 1`.
pub fn check_codim1_flats(nerve: &Nerve, dim: usize) -> Result<AuditReport, NerveError> {
    let mut report = AuditReport::new(format!("codimension-1 flats at dimension {dim}"));
    let flats = maximal_flats(&nerve.matrix, DEFAULT_CAP)?;
    if flats.is_empty() {
        report.note("no affine flats of rank >= 2: vacuous pass");
    }
    for f in &flats {
        report.check(
            format!(
                "flat {} has dimension {}",
                flat_label(&nerve.matrix, f),
                dim - 1
            ),
            f.flat_dim == dim - 1,
            (f.flat_dim != dim - 1).then(|| flat_label(&nerve.matrix, f)),
        );
    }
    Ok(report)
}

/// Pass iff the pairwise intersections of distinct maximal flats induce
/// elliptic diagrams (no two flats share an affine piece).
pub fn check_flat_isolation(nerve: &Nerve) -> Result<AuditReport, NerveError> {
    let mut report = AuditReport::new("flat isolation");
    let flats = maximal_flats(&nerve.matrix, DEFAULT_CAP)?;
    if flats.len() <= 1 {
        report.note("at most one maximal flat of rank >= 2: vacuous pass");
    }
    let d = nerve.matrix.to_diagram();
    for (a, fa) in flats.iter().enumerate() {
        for fb in &flats[a + 1..] {
            let inter: Vec<usize> = fa
                .generators
                .iter()
                .copied()
                .filter(|v| fb.generators.binary_search(v).is_ok())
                .collect();
            let kind = classify(&d.induced_subdiagram(&inter)).kind;
            report.check(
                format!(
                    "{} and {} intersect elliptically",
                    flat_label(&nerve.matrix, fa),
                    flat_label(&nerve.matrix, fb)
                ),
                kind == Kind::Elliptic,
                (kind != Kind::Elliptic).then(|| {
                    let names: Vec<&str> = inter.iter().map(|&v| nerve.matrix.name(v)).collect();
                    format!("shared subset {{{}}} is {kind}", names.join(","))
                }),
            );
        }
    }
    Ok(report)
}
