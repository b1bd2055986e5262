//! Token graphs and their invariants.
//!
//! The vertices of a token graph are the k-element subsets of a base
//! graph's vertex set — configurations of k indistinguishable tokens — and
//! edges describe legal simultaneous moves.  This crate builds those graphs
//! (exact move counts, symmetric-difference variants, unions over move
//! counts), computes exact invariants (independence, clique, chromatic,
//! domination numbers) with witnesses, canonicalizes graphs and counts
//! automorphisms, and ships a seeded check harness that replays the known
//! structural facts about these constructions.
//!
//! Module map:
//! - [`graph`], [`bits`], [`family`], [`combin`]: simple graphs, bit sets,
//!   named families, subset ranking.
//! - [`codec`]: graph6, edge-list text, DOT.
//! - [`token`], [`matching`]: the token-graph constructions.
//! - [`invariants`]: exact solvers with certificates and budgets.
//! - [`canon`]: canonical forms, isomorphism, automorphism groups.
//! - [`harness`]: the seeded structural check suite and its JSON report.

pub mod bits;
pub mod budget;
pub mod canon;
pub mod codec;
pub mod combin;
pub mod family;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod matching;
pub mod token;

pub use budget::{Budget, ResourceError};
pub use family::{Family, FamilySpec, ParamError};
pub use graph::{Graph, GraphError};
pub use token::{TokenConfig, TokenGraph, TokenVariant, VariantKind};
