//! Exact zonotopal algebra for rational vector configurations.

pub mod configuration;
pub mod error;
pub mod exactla;
pub mod geometry;
pub mod gradedspaces;
pub mod hitting;
pub mod polyring;
pub mod report;
pub mod zonotopal;

pub use configuration::{ColumnSet, Config, Facet, SemiExternalFamily};
pub use error::{Error, Result};
pub use exactla::{Mat, Rat};
pub use gradedspaces::{GradedSubspace, HilbertFn, IdealGens};
pub use polyring::{HPoly, MultiIndex};
