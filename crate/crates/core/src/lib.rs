//! Cyclic covers of the sphere branched over four points, viewed as
//! square-tiled surfaces: strata, Veech group orbits, Lyapunov exponent
//! sums and spin parity.

pub mod check;
pub mod lyapunov;
pub mod origami;
pub mod params;
pub mod perm;
pub mod report;
pub mod search;
pub mod spin;
pub mod strata;
pub mod veech;

pub use lyapunov::{LyapunovReport, Rational};
pub use origami::{Cylinder, CylinderDecomposition, Direction, Origami, VerificationFailure};
pub use report::{CoverReport, DescribeOptions};
pub use search::{SearchFilter, SearchOptions, SearchResult};
pub use params::{CoverParams, ParamsError, Symmetry};
pub use perm::{Perm4, SquarePerm};
pub use spin::SpinParity;
pub use strata::{DifferentialKind, GenusData, Stratum};
pub use veech::{CaseLabel, VeechDescriptor};
