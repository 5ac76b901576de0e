//! Extremal trees for degree-based indices.
//!
//! Computes the zeroth-order general Randić index and the variable sum exdeg
//! index on trees, evaluates closed-form extremal bounds over families fixed
//! by pendent vertices, segments or branching vertices, applies the edge
//! moves used to reach the extremal trees, and checks everything against an
//! exhaustive enumeration of free trees.

pub mod canon;
pub mod cli;
pub mod degseq;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod indices;
pub mod structure;
pub mod transforms;
pub mod tree;
pub mod verify;

pub use canon::{canonical_code, CanonicalCode};
pub use degseq::{realize_caterpillar, DegreeSequence};
pub use enumerate::{free_trees, Catalogue};
pub use error::{Error, Result};
pub use extremal::{construct_extremal, Direction, FamilyConstraint, FamilyKind, Population, Theorem};
pub use indices::{Index, IndexKind};
pub use structure::{segment_decomposition, squeeze, structural_profile, StructuralProfile};
pub use transforms::{MoveRecord, TransformKind};
pub use tree::{parse_tree, Tree};
