//! Deciding whether integer sequences are W sequences, and scanning for them.
//!
//! A *W sequence* is a strictly increasing sequence of at least two positive
//! integers containing a *W number*: an element coprime to every other
//! element. This crate provides:
//!
//! - [`arith`]: exact integer arithmetic (gcd, deterministic 64-bit
//!   primality, factorization, sieves, big-integer Fibonacci numbers);
//! - [`wcore`]: the W-sequence decision engine (a quadratic pairwise-gcd
//!   oracle, a factor-map fast path, and Monte Carlo coprimality
//!   estimators);
//! - [`windows`]: factorization-free W checks for consecutive windows
//!   `m+1..=m+n` and the scanners built on them;
//! - [`families`]: W checkers for structured families (squares plus one,
//!   arithmetic progressions, shifted odd primes, Fibonacci windows);
//! - [`grimm`]: maximal composite runs and injective assignments of
//!   distinct prime divisors to their elements.
//!
//! All operations are pure functions; scans parallelize internally with
//! deterministic, order-preserving merges, so identical inputs always
//! produce identical outputs.

pub mod arith;
pub mod error;
pub mod families;
pub mod grimm;
pub mod wcore;
pub mod windows;

pub use error::{Error, Result};
pub use wcore::{Sequence, Verdict, WReport, Witness};
pub use windows::Window;
