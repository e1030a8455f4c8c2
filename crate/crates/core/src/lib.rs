//! Colourings with bounded monochromatic components for graphs of bounded
//! circumference.
//!
//! A graph with no cycle longer than `k` can be coloured with at most
//! `floor(3 log2 k)` colours so that every monochromatic component has at
//! most `k` vertices. [`fragment::fragment_colour`] builds such a colouring
//! by recursing on separations of order at most two and, in 3-connected
//! pieces, on the graph left after deleting a longest cycle.
//!
//! Around the engine:
//! - [`graph`]: the graph type, edge-list I/O and test families;
//! - [`cycles`]: exact circumference, longest cycles and paths;
//! - [`connectivity`]: cut vertices, blocks, small separations;
//! - [`verify`]: independent checks of a colouring;
//! - [`bounds`]: the closed-form colour bounds;
//! - [`extremal`]: the graphs `G_{k,d}` that force many colours;
//! - [`oracle`]: exhaustive optimal colourings for small graphs.

pub mod bounds;
pub mod colouring;
pub mod connectivity;
pub mod cycles;
pub mod error;
pub mod extremal;
pub mod fragment;
pub mod graph;
pub mod oracle;
pub mod verify;

pub use colouring::{Colour, Colouring, PrecolouredClique};
pub use error::{Error, Result};
pub use fragment::{colour_bounded_circumference, fragment_colour, ColourOptions, TraceNode};
pub use graph::{Graph, VertexSet};
