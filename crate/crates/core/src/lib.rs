//! A signature-based Groebner basis engine over prime fields, a classic
//! Gebauer-Moeller Buchberger baseline, and the instrumentation to count and
//! attribute the zero reductions each criterion does or does not predict.

pub mod audit;
pub mod corpus;
pub mod event;
pub mod field;
pub mod generate;
pub mod gm;
pub mod monomial;
pub mod polynomial;
pub mod problem;
pub mod rb;
pub mod report;
pub mod ring;
pub mod signature;
pub mod stats;
pub mod syzygy;
pub mod verify;

pub use event::{Decision, Event};
pub use field::{FieldError, FieldScalar, PrimeField};
pub use monomial::{cmp_grevlex, Monomial};
pub use polynomial::{normal_form, normal_form_with_trace, reduce_step, spoly, Polynomial, Term};
pub use problem::{parse_poly, parse_problem, ProblemSpec};
pub use rb::{rb_run, LabeledPoly, RbConfig, RbRun, RewriteOrder, SPair};
pub use ring::Ring;
pub use signature::{
    sig_div, sig_divides, sig_mul, ModuleOrderContext, OrderKind, Signature,
};
pub use stats::RunStats;
pub use syzygy::SyzygySigSet;
