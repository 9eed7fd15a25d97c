//! File formats, drawing and the command line for knot mosaics.
//!
//! The engine lives in `knotile-core`; this crate adds what needs `std`:
//! reading files, the bundled layouts and example mosaics, SVG and text
//! rendering, threaded searches and the `knotile` binary.

pub mod assets;
pub mod cli;
pub mod io;
pub mod record;
pub mod render;
pub mod shard;
