//! Decides whether a map of a closed surface into the 3-torus is homotopic to
//! an embedding, working entirely from the induced map on first homology, and
//! builds a constructive witness when it is.

pub mod decide;
pub mod error;
pub mod exactlin;
pub mod invariants;
pub mod job;
pub mod report;
pub mod sampling;
pub mod selfcheck;
pub mod surfaces;
pub mod witness;

pub use decide::{decide, disjoint_pair_solutions, CaseTag, Condition, Evidence, Verdict};
pub use error::{Error, Result};
pub use exactlin::{IntMatrix, IntVector, Mod2Matrix};
pub use invariants::{BasisTag, OmegaClass, TorusMap};
pub use surfaces::{SurfaceKind, SurfaceModel};
pub use witness::{build_witness, verify_witness, BuildOutcome, EmbeddingWitness, WitnessShape};
