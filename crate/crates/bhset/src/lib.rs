//! Greedy B_h-sets: construction, certification, and verification.
//!
//! A set of nonnegative integers is a B_h-set when every integer has
//! at most one representation as a sum of h elements with repetition,
//! counting reorderings once. This crate builds the greedy B_h-set
//! (start at 0, always append the least integer that keeps the
//! property), certifies arbitrary finite sets with collision witnesses
//! when they fail, and verifies the known closed forms and growth
//! bounds for the early greedy terms.
//!
//! ```
//! use bhset::{greedy_prefix, is_bh, IntegerSet, Order};
//!
//! let h = Order::new(2)?;
//! let sidon = greedy_prefix(h, 4)?;
//! assert_eq!(sidon.elements(), &[0, 1, 3, 7, 12]);
//! assert!(is_bh(&sidon, h)?.is_certified());
//! # Ok::<(), bhset::Error>(())
//! ```
//!
//! Certification runs two independent routes: [`is_bh`] compares the
//! h-fold sumset against the multiset count, while [`oracle_is_bh`]
//! enumerates every h-tuple naively. They share no code, which is the
//! point: each one checks the other in the test suites.
//!
//! All arithmetic is checked 128-bit; overflow and oversized
//! enumerations surface as typed [`Error`]s, never as wrapped values
//! or unbounded memory growth.

mod error;
mod greedy;
mod oracle;
mod set;
mod sumset;
mod theorems;

pub use error::{Error, Result};
pub use greedy::{greedy_prefix, GreedyState, SumLayers, DEFAULT_LAYER_CAP};
pub use oracle::{oracle_greedy, oracle_is_bh, oracle_is_bh_capped, DEFAULT_ENUMERATION_CAP};
pub use set::{IntegerSet, Order};
pub use sumset::{
    binomial, h_fold_sumset, is_bh, rep_count, representations, BhVerdict, CollisionWitness,
    Representation,
};
pub use theorems::{
    a_formula, geometric_bound, repunit_set, safe_extension, verify_suite, ClaimRecord,
    VerificationReport, VerifyOptions,
};
