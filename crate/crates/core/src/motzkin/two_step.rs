//! The two-step alternating process that embeds a ceiling-`k` path walk
//! into a taller two-weight walk.
//!
//! The transition matrix lives on `2k + 3` interleaved levels. Odd levels
//! carry the original walk; one original step is two alternating steps
//! with weights `z1`, `z2`. The identification `z = z1 z2`,
//! `zh = z1^2 + z2^2`, `q = qo^2` involves square roots, so the two
//! weights stay independent formal variables here and the secular
//! identity `det(1 - H2) = F_k` is checked as a polynomial identity in
//! `z1`, `z2`, `qo`.

use crate::matrix::PolyMatrix;
use crate::poly::{Coef, Poly};
use crate::vars::{Mono, Var};

use super::secular::secular_recursive;

/// The `(2k+3)`-dimensional two-step transition matrix. The diagonal is
/// zero; the symmetric off-diagonal entry between levels `i` and `i+1`
/// is `z1 qo^j` for `i = 2j` and `z2 qo^j` for `i = 2j + 1` (the area
/// root `qo` shares the `Qh` slot).
pub fn two_step(k: usize) -> PolyMatrix {
    let dim = 2 * k + 3;
    PolyMatrix::from_fn(dim, |i, j| {
        if i + 1 != j && j + 1 != i {
            return Poly::zero();
        }
        let lower = i.min(j);
        let (var, level) = if lower % 2 == 0 {
            (Var::Z1, lower / 2)
        } else {
            (Var::Z2, lower / 2)
        };
        Poly::monomial(
            Mono::var(var).with_exp(Var::Qh, level as i32),
            Coef::from_integer(1.into()),
        )
    })
}

/// Verify `det(1 - H2) = F_k` under the weight identification, and the
/// parity identity `det(1 - H2) = det(1 + H2)`.
pub fn embedding_check(k: usize) -> bool {
    let h2 = two_step(k);
    let minus = h2.identity_minus().det();
    let plus = h2.identity_plus().det();
    if minus != plus {
        return false;
    }
    let fk = secular_recursive(k as i64).subst_two_step();
    minus == fk
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k0_determinant_by_hand() {
        // 3x3 ladder: det(1 - H2) = 1 - z1^2 - z2^2.
        let d = two_step(0).identity_minus().det();
        let expect = Poly::one() - Poly::var(Var::Z1).pow(2) - Poly::var(Var::Z2).pow(2);
        assert_eq!(d, expect);
    }

    #[test]
    fn matrix_is_symmetric_with_zero_diagonal() {
        let h = two_step(2);
        assert!(h.is_symmetric());
        for i in 0..h.dim() {
            assert!(h[(i, i)].is_zero());
        }
    }

    #[test]
    fn embedding_holds_small() {
        for k in 0..=2usize {
            assert!(embedding_check(k), "k={k}");
        }
    }

    #[test]
    fn identification_on_f0() {
        let f0 = secular_recursive(0).subst_two_step();
        let expect = Poly::one() - Poly::var(Var::Z1).pow(2) - Poly::var(Var::Z2).pow(2);
        assert_eq!(f0, expect);
    }
}
