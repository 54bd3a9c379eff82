use super::algebra::AlgebraSC;
use crate::error::Result;
use crate::exact::{MatrixQ, Rational};
use crate::report::Check;

/// `B(eᵢ, eⱼ) = tr L_{eᵢeⱼ}`.
pub fn trace_form(a: &AlgebraSC) -> MatrixQ {
    let n = a.dim();
    let traces: Vec<Rational> = a.basis_left_mults().iter().map(MatrixQ::trace).collect();
    MatrixQ::from_fn(n, n, |i, j| a.basis_product(i, j).iter().map(|(k, c)| c * &traces[*k]).sum())
}

/// Formal reality decided as exact positive definiteness of the trace form.
pub fn euclidean_check(a: &AlgebraSC) -> Result<bool> {
    let b = trace_form(a);
    if !b.is_symmetric() {
        return Ok(false);
    }
    b.is_positive_definite()
}

pub fn euclidean_report(a: &AlgebraSC) -> Check {
    let b = trace_form(a);
    if !b.is_symmetric() {
        return Check::fail("trace-form-positive", 0, "trace form is not symmetric");
    }
    let minors = b.leading_minors().expect("square");
    let witness = minors
        .iter()
        .position(|m| !m.is_positive())
        .map(|k| format!("leading minor {} of the trace form is {}", k + 1, minors[k]));
    Check::from_witness("trace-form-positive", minors.len(), witness)
}

/// Trace form evaluated on two elements.
pub fn trace_pairing(a: &AlgebraSC, x: &[Rational], y: &[Rational]) -> Rational {
    a.left_mult(&a.mul(x, y)).trace()
}
