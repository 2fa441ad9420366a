//! Graph analysis engine for nonbipartite graphs: least signless-Laplacian
//! (Q-)eigenvalues, exact domination numbers, the extremal family
//! `C*_{s,l}`, unicyclic spanning-subgraph extraction, and exhaustive
//! small-order verification campaigns.
//!
//! The crate is organized along the problem's natural seams:
//!
//! * [`graph`] — immutable simple graphs, structural queries, surgery
//! * [`spectral`] — Q = D + A, dense symmetric eigensolver, eigenvector
//!   structure checks
//! * [`domination`] — exact minimum dominating sets (branch and bound over
//!   closed-neighborhood bitmasks)
//! * [`extremal`] — constructors and comparison facts for `C*_{s,l}` and
//!   odd-cycle-with-trees graphs
//! * [`spanning`] — the constructive unicyclic spanning-subgraph extraction
//! * [`enumerate`] — exhaustive isomorphism-free generation at small order
//!   and the minimizer verifiers
//! * [`verify`] — named claim campaigns producing [`report::VerificationReport`]s
//!
//! With the default `parallel` feature the enumeration and sweep drivers
//! fan out over rayon; disabling it yields a fully sequential build with
//! identical results.

pub mod domination;
pub mod enumerate;
pub mod extremal;
pub mod graph;
pub mod parallel;
pub mod random;
pub mod report;
pub mod spanning;
pub mod spectral;
pub mod tol;
pub mod verify;

pub use graph::{CycleWitness, Graph, GraphError};
pub use report::{Outcome, VerificationReport};
