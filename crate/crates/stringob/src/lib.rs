//! Exact decision procedures for crossing obstructions of string graphs.
//!
//! A graph is a string graph when it is the intersection graph of curves
//! in the plane. This crate decides vanishing of the crossing-parity
//! obstructions that every string graph must satisfy — the string
//! obstruction, its subdivided form, and the classical planarity
//! obstruction — over GF(2) and over ℤ, and implements both constructive
//! directions of the characterization: curves to a drawing of the
//! barycentric subdivision, and such a drawing back to curves.
//!
//! All geometry is exact: coordinates are arbitrary-precision rationals
//! and every predicate is decided by sign computations, never by epsilon.

pub mod corpus;
pub mod drawing;
pub mod geom;
pub mod gf2;
pub mod graph;
pub mod lattice;
pub mod obstruction;
pub mod strings;

pub use drawing::{
    CrossingVector, Drawing, DrawingError, SvgOptions, apply_finger_move, crossing_vector,
    export_svg, layout_convex_order, layout_moment_curve, layout_random, subdivide_drawing,
};
pub use graph::{
    EdgePairSet, Family, Graph, GraphError, PairKind, SubdivisionMap, barycentric_subdivision,
    generate, pair_set, pair_set_of_subdivision,
};
pub use obstruction::{
    FingerMoveSystem, Mode, ObstructionReport, build_system, decide_integer, decide_mod2,
    finger_move_vector, planarity_obstruction, string_obstruction, subdivided_obstruction,
};
pub use strings::{
    StringRepresentation, StringsError, drawing_from_strings, strings_from_drawing,
    verify_sd_disjointness, verify_string_representation,
};
