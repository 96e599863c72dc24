//! Cyclic reverse layered permutations.
//!
//! A reverse layered permutation is a skew sum of increasing runs, and is
//! identified with the composition of its run lengths. This crate decides
//! whether such a permutation is a single cycle by equalizing and reducing
//! the composition, counts the cyclic ones, and draws cycle diagrams.
//!
//! ```
//! use revlayer::{is_cyclic, Composition, Permutation};
//!
//! let c: Composition = "1,2,2".parse().unwrap();
//! assert_eq!(Permutation::from_composition(&c).to_string(), "53412");
//! assert!(is_cyclic(&c).verdict().is_cyclic());
//! ```

pub mod comp;
pub mod diagram;
pub mod enumeration;
pub mod error;
pub mod perm;
pub mod reduction;
pub mod verify;

pub use comp::{compositions, BalancedComposition, Composition, Compositions, NearlyEqualDivision};
pub use diagram::{build_diagram, CycleDiagram, RenderFormat};
pub use enumeration::{
    count, count_balanced_cyclic, count_cyclic, enumerate_cyclic, CountTable, EngineConfig, Kind,
    Method, TableFormat,
};
pub use error::{Error, Result};
pub use perm::{skew_sum, CycleDecomposition, Pattern, Permutation};
pub use reduction::{
    is_cyclic, is_cyclic_parts, reduce, repeated_reduction, CyclicityReport, ReductionStep,
    ReductionTrace, Verdict,
};
