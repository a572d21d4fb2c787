//! Precubical sets as combinatorial models of concurrent systems.
//!
//! The crate covers four layers:
//!
//! * [`pcs`]: the presheaf kernel. Precubical sets with explicit face maps,
//!   validation of the cubical relations, the representable cubes `□[n]` and
//!   their boundaries, skeleta, the category of cubes, pushouts and tensor
//!   products.
//! * [`flow`]: the combinatorial flow realization. States are the vertices,
//!   execution paths are edge paths modulo square moves, and loopless
//!   complexes carry a partial order on states.
//! * [`globular`]: the globular cell ledger, one cell per positive-dimensional
//!   cube, attached in skeletal order.
//! * [`homology`]: integer homology of the standard cubical complex.
//!
//! [`io`] and [`generate`] provide the JSON document format and the named
//! families used by the command-line tool.

pub mod error;
pub mod flow;
pub mod generate;
pub mod globular;
pub mod homology;
pub mod io;
pub mod pcs;
pub mod word;

pub use error::{Error, Result};
pub use flow::{
    corner, count_flow_morphisms, enumerate_path_classes, path_equal, realize_states, staircase, state_order, CombFlow,
    EdgePath, LoopReport, PathClass, StateOrder, StatePoset,
};
pub use globular::{decomposition_report, globular_decomposition, GlobularCell, GlobularDecomposition};
pub use homology::{chain_complex, euler_characteristic, homology, ChainComplex, HomologyResult};
pub use pcs::{
    apply_cube_map, boundary_cube, cube_category, pushout, skeleton, standard_cube, tensor, validate, CellId,
    CubeDiagram, CubicalMap, PrecubicalSet, Presentation, ValidationReport,
};
pub use word::{CubeWord, Letter, Sign};
