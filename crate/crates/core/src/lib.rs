//! Flag invariants, isometry classification, Hilbert geometry and coordinate
//! conversions for convex real projective surfaces.

pub mod coords;
pub mod error;
pub mod hilbert;
pub mod invariants;
pub mod isometry;
pub mod rp2;

pub use error::{Error, Result};
pub use nalgebra;
pub use rp2::{Flag, ProjLine, ProjPoint};
