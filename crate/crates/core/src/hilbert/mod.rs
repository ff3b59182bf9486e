//! Hilbert geometry of properly convex planar domains: chords, the cross-ratio
//! distance, its infinitesimal Finsler norm and Busemann area.

mod area;
mod domain;

pub use area::{
    busemann_area, busemann_area_of, busemann_density, standard_triangles,
    triangle_area_experiment, truncated_area, unit_ball_area, AreaOptions, EmptyRegion,
    HilbertBall, Intersection, Region,
};
pub use domain::{chord, finsler_norm, hilbert_distance, Chord, ConicOval, ConvexDomain, Polygon, Vec2};
