//! Command-line harness for `mugen-core`: ideal syntax, seeded corpora,
//! theorem suites, counterexample search and report formats.

pub mod corpus;
pub mod parse;
pub mod report;
pub mod rng;
pub mod search;
pub mod suites;

/// Every check passed.
pub const EXIT_OK: i32 = 0;
/// Some check failed, or a search found a witness against a theorem.
pub const EXIT_FAIL: i32 = 1;
/// Bad command line or unparsable input.
pub const EXIT_USAGE: i32 = 2;
/// A resource ceiling cut the run short.
pub const EXIT_RESOURCE: i32 = 3;
