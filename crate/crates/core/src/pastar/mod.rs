//! PA extended with a constant `ω` and the axiom schema `ω > n`, with a
//! Hilbert-style checker and the rewrite that removes `ω` from any finished
//! proof.

pub mod check;
pub mod eliminate;
pub mod parse;
pub mod proof;
pub mod schemes;
pub mod syntax;

pub use check::{check, CheckError, CheckErrorKind};
pub use eliminate::{collect_omega_instances, eliminate_omega, omega_report, Elimination, OmegaReport};
pub use parse::{parse_formula, parse_proof, ParseError};
pub use proof::{AxiomFamily, Binding, Bindings, Justification, Line, Proof};
pub use syntax::{Formula, Term};
