//! Exact classification of numerical semigroups.
//!
//! A numerical semigroup `H ⊆ ℕ` stands in for the one-dimensional local
//! ring `k[[t^h : h ∈ H]]`. This crate decides whether `H` is Arf, symmetric,
//! almost symmetric and (under minimal multiplicity) generalized Gorenstein,
//! and cross-checks the criteria relating those classes through Lipman
//! blowup sequences, the canonical ideal and brute-force oracles.
//!
//! ```
//! use arfkit::{classify_report, NumericalSemigroup};
//!
//! let h: NumericalSemigroup = "3,7,11".parse().unwrap();
//! let report = classify_report(&h);
//! assert!(report.flags.almost_symmetric && !report.flags.arf);
//! assert!(report.consistent);
//! ```

pub mod canonical;
pub mod classify;
pub mod cli;
pub mod error;
pub mod golden;
pub mod ideal;
pub mod lipman;
pub mod oracle;
pub mod semigroup;

pub use canonical::{b_extension_length, canonical_ideal, conductor_and_length, extension_s, CanonicalData};
pub use classify::{
    arf_closure, classify_report, consistency_audit, criterion_bf, criterion_endo, criterion_gg, criterion_main,
    ggl_min_mult, idealization_c_arf, idealization_m_ag_arf, is_almost_symmetric, is_almost_symmetric_numeric,
    is_arf, is_symmetric, Analysis, ClassificationReport, CriterionVerdict, Flags, TriState, Violation,
};
pub use error::{ArfError, Result};
pub use ideal::RelativeIdeal;
pub use lipman::{blowup, blowup_oracle, endomorphism_semigroup, lipman_sequence, LipmanSequence};
pub use oracle::{arf_by_pattern, arf_pattern_witness, enumerate_by_genus, survey, SurveyOptions, SurveyRecord};
pub use semigroup::{parse_generators, NumericalSemigroup};
