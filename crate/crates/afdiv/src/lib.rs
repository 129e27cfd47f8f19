//! Exact reasoning about the diversity of extensions in abstract
//! argumentation frameworks.
//!
//! The crate bundles:
//!
//! - a framework data model with ICCMA and APX readers and writers,
//! - exact enumeration and membership checks for the conflict-free,
//!   naive, admissible, complete, stable, preferred, semi-stable, and
//!   stage semantics,
//! - symmetric-difference diversity queries over extension pairs
//!   (exact / at-most / at-least `k`, maximum, minimum, and the set of
//!   attainable levels), with anchor and cover constraints,
//! - generators that turn SAT, QBF, and dominating-set instances into
//!   frameworks with known diversity thresholds,
//! - a brute-force oracle for differential testing, and
//! - a corpus benchmark harness with timeouts, CSV summaries, and
//!   distribution plots.
//!
//! Pair scans and the corpus runner parallelize over rayon when the
//! default `parallel` feature is enabled; disabling it leaves the
//! sequential implementations.

pub mod af;
pub mod bench;
pub mod bitset;
pub mod cancel;
pub mod diversity;
pub mod io;
pub mod oracle;
pub mod random;
pub mod reductions;
pub mod samples;
pub mod semantics;

pub use af::{AfBuilder, ArgumentationFramework, Extension};
pub use cancel::CancelToken;
pub use diversity::{CompareMode, DiversityAnswer, DiversityQuery};
pub use semantics::{SearchLimits, Semantics, SizeGuard};
