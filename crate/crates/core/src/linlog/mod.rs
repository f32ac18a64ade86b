//! Multiplicative-additive linear logic interpreted in the CL-algebra
//! `([0, inf], >=, ·, 1)` with dualising element `1`.

mod ast;
mod eval;
mod parse;

pub use ast::{Constant, Formula};
pub use eval::{eval, extend_environments, grid_environments, valid, valid_on_grid, Environment, EvalError, Validity};
pub use parse::{parse, ParseError};
