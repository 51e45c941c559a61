//! Gaussian binomial coefficients in the half-area variable.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::vars::{Mono, Var};

/// The q-binomial coefficient with `q = Qh^2`, computed by the q-Pascal
/// recurrence `[a, b] = [a-1, b-1] + q^b [a-1, b]`. The result is a
/// polynomial with nonnegative integer coefficients, equal to
/// `prod_{j=1}^{b} (1 - q^{a-b+j}) / (1 - q^j)`.
pub fn q_binomial(a: i64, b: i64) -> Result<Poly> {
    if b < 0 || b > a {
        return Err(Error::IndexOutOfRange { a, b });
    }
    // row[j] holds [row_index, j] while filling rows top down.
    let mut row: Vec<Poly> = vec![Poly::one()];
    for n in 1..=a {
        let top = n.min(b) as usize;
        let mut next = vec![Poly::zero(); top + 1];
        next[0] = Poly::one();
        for j in 1..=top {
            let upper = if j == row.len() { Poly::zero() } else { row[j].clone() };
            let qb = Poly::monomial(Mono::var_pow(Var::Qh, 2 * j as i32), crate::poly::coef_int(1));
            next[j] = &row[j - 1] + &(qb * upper);
        }
        row = next;
    }
    Ok(row[b as usize].clone())
}

/// q-binomial with the base `q` replaced by `q^step` (exponents stretch).
pub fn q_binomial_stretched(a: i64, b: i64, step: i32) -> Result<Poly> {
    Ok(q_binomial(a, b)?.stretch_qh(step))
}
