//! Core library of the coxkit toolkit.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`diagram`] — Coxeter matrices and diagrams (`.cox` format, graph
//!   distance, induced subdiagrams, cosine Gram matrices);
//! * [`mod@classify`] — table-driven classification into elliptic / parabolic /
//!   indefinite, quasi-Lanner detection, and the embedded diagram catalogue;
//! * [`nerve`] — the nerve of a Coxeter system, flagness, and enumeration of
//!   affine (Euclidean) flats;
//! * [`homology`] — integer simplicial homology via Smith normal form and
//!   generalized-homology-sphere certification;
//! * [`surgery`] — cutting a nerve along a codimension-1 flat and the inverse
//!   gluing;
//! * [`polytope`] — the face poset of the dual polytope with cusps, f-vectors,
//!   and the face-count inequality audits;
//! * [`weights`] — the dihedral-angle weight calculus on 3-faces and the
//!   dimension bounds derived from it.
//!
//! Everything is pure and deterministic; values are immutable once built.

pub mod classify;
pub mod diagram;
pub mod exact;
pub mod homology;
pub mod iso;
pub mod nerve;
pub mod polytope;
pub mod presets;
pub mod report;
pub mod spectral;
pub mod surgery;
pub mod weights;

pub use classify::{
    classify, classify_connected, is_quasi_lanner, DiagramType, Family, Kind, TemplateTable,
};
pub use diagram::{parse_diagram, CosineGram, CoxeterMatrix, Diagram, Distance, EdgeLabel};
pub use homology::{
    is_ghs, link, reduced_homology, smith_normal_form, HomologyGroups, IntegerMatrix,
};
pub use nerve::{
    build_nerve, enumerate_affine_flats, AffineFlat, FlatPosition, Nerve, SimplicialComplex,
};
pub use polytope::{nikulin_bound, rightangled_dimension_bound, PolytopeModel};
pub use report::{AuditReport, Check};
pub use surgery::{cut_along_flat, glue_along_flat, normalize_boundary, CutResult};
