//! Knot mosaics on square boards of the eleven standard tiles.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values; file handling, rendering and the
//! command-line front end live in the `knotile` crate.
//!
//! - [`tiles`]: the tile alphabet, boards, symmetry and structural queries.
//! - [`trace`]: curve tracing, planar diagram codes, reducedness, writhe.
//! - [`poly`] and [`invariants`]: Laurent polynomials, the Kauffman bracket,
//!   the Jones normalization and table identification.
//! - [`moves`]: the planar isotopy rewrites and a greedy simplifier.
//! - [`enumerate`]: exhaustive generation, census, layouts and tile-number
//!   searches.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod enumerate;
pub mod invariants;
pub mod moves;
pub mod poly;
pub mod tiles;
pub mod trace;
mod unionfind;

pub use invariants::{Identification, KnotTable};
pub use poly::LaurentPoly;
pub use tiles::{EdgeSide, EdgeSet, KnotMosaic, Mosaic, Symmetry, TileKind};
pub use trace::{trace, PlanarDiagram, TraceResult};
