// Divisibility tests read better as `n % d == 0` in this codebase.
#![allow(clippy::manual_is_multiple_of)]

//! Power graphs of small finite groups.
//!
//! The power graph of a finite group has the group elements as vertices,
//! with distinct `x`, `y` adjacent exactly when one is a power of the other.
//! This crate builds those graphs for a catalog of small groups, searches
//! them for forbidden induced subgraphs (claws, stars, four-cycles,
//! triangles), and cross-checks fast structural predicates on the group
//! against the brute-force graph searches.
//!
//! ```
//! use powergraph::{classify, forbidden, groups, pgraph};
//!
//! let q8 = groups::generalized_quaternion(8)?;
//! let graph = pgraph::power_graph(&q8);
//!
//! // Q8's power graph contains a claw but no induced K1,4,
//! // and the structural predicates agree with the searches.
//! assert!(forbidden::is_k1r_free(&graph, 3).is_some());
//! assert!(forbidden::is_k1r_free(&graph, 4).is_none());
//! assert!(!classify::claw_free_structural(&q8));
//! assert!(classify::k14_free_structural(&q8));
//!
//! let report = classify::audit_group(&q8);
//! assert!(report.disagreements().next().is_none());
//! # Ok::<(), groups::GroupError>(())
//! ```

pub mod bitset;
pub mod catalog;
pub mod classify;
pub mod forbidden;
pub mod groups;
pub mod numth;
pub mod pgraph;
