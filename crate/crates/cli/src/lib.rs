//! Command-line front end for `enumgeom`: a small expression language for
//! Schubert calculus, recipe runners, ledger checks and verification suites.

pub mod app;
pub mod eval;
pub mod syntax;

pub use app::{run, Cli, EXIT_FAILURE, EXIT_INTERNAL, EXIT_OK};
pub use eval::{evaluate, EvalError, Value};
pub use syntax::{parse, Bundle, Context, Expr, ParseError, Query};
