//! Command-line front end: expression parsing, rendering and the built-in
//! verification suites behind the `singlet` binary.

pub mod app;
pub mod checks;
pub mod parse;

pub use app::{run, Outcome};
