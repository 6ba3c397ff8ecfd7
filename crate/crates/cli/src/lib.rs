//! File formats, reports and command implementations for the `lielocder`
//! binary.

pub mod analysis;
pub mod conjecture;
pub mod dsl;
pub mod report;
pub mod reproduce;
pub mod source;

pub const EXIT_OK: u8 = 0;
/// A claim did not hold (or could not be settled).
pub const EXIT_CLAIM: u8 = 1;
/// The input is not a valid algebra.
pub const EXIT_INVALID: u8 = 2;
/// Bad usage or I/O failure.
pub const EXIT_USAGE: u8 = 64;
