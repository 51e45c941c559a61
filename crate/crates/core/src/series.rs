//! Truncated formal power series graded by path length.
//!
//! A `Series` holds one polynomial coefficient per combined step degree
//! (degree in `Z` plus degree in `Zh`) from 0 up to the truncation order.
//! Coefficient `d` is homogeneous of step degree `d`; area and marker
//! exponents ride along inside the coefficients. Inversion, logarithm and
//! exponential use the Euler operator `theta(sum s_d) = sum d s_d`, which
//! obeys the product rule on this grading, so all three reduce to short
//! exact-rational convolutions.

use crate::error::{Error, Result};
use crate::poly::{coef_int, Coef, Poly};
use crate::vars::Mono;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Poly>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    /// Slice a polynomial into its graded parts, discarding anything above
    /// the truncation order.
    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Series {
            coeffs: p.graded_parts(order),
        }
    }

    /// Truncation order: the highest retained step degree.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &Poly {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, d: usize, p: Poly) {
        debug_assert!(p.graded_parts(self.order()).iter().enumerate().all(
            |(i, part)| i == d || part.is_zero()
        ));
        self.coeffs[d] = p;
    }

    pub fn truncated(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, Poly::zero());
        Series { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut out = Series::zero(order);
        for d in 0..=order {
            out.coeffs[d] = &self.coeffs[d] + &other.coeffs[d];
        }
        out
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut out = Series::zero(order);
        for d in 0..=order {
            out.coeffs[d] = &self.coeffs[d] - &other.coeffs[d];
        }
        out
    }

    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut out = Series::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        out
    }

    pub fn mul_poly(&self, p: &Poly) -> Series {
        self.mul(&Series::from_poly(p, self.order()))
    }

    pub fn scaled(&self, c: &Coef) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|p| p.scaled(c)).collect(),
        }
    }

    /// Multiply by a monomial, shifting grades up by its step degree.
    pub fn mul_monomial(&self, m: &Mono, c: &Coef) -> Series {
        let shift = m.step_degree();
        assert!(shift >= 0);
        let shift = shift as usize;
        let mut out = Series::zero(self.order());
        for d in 0..=self.order() {
            if d + shift > self.order() {
                break;
            }
            out.coeffs[d + shift] = self.coeffs[d].mul_monomial(m, c);
        }
        out
    }

    /// Exact division by a monomial; every term of every coefficient must
    /// be divisible. Grades shift down by the monomial's step degree.
    pub fn div_monomial(&self, m: &Mono) -> Result<Series> {
        let shift = m.step_degree();
        assert!(shift >= 0);
        let shift = shift as usize;
        let mut out = Series::zero(self.order());
        for d in 0..=self.order() {
            if self.coeffs[d].is_zero() {
                continue;
            }
            if d < shift {
                return Err(Error::NonZeroRemainder(format!(
                    "grade {d} below monomial step degree {shift}"
                )));
            }
            let mut q = Poly::zero();
            for (mm, cc) in self.coeffs[d].terms() {
                match mm.try_div(m) {
                    Some(dm) => q.add_term(dm, cc.clone()),
                    None => {
                        return Err(Error::NonZeroRemainder(
                            "series coefficient not divisible by prefactor".into(),
                        ))
                    }
                }
            }
            out.coeffs[d - shift] = q;
        }
        Ok(out)
    }

    /// Multiplicative inverse of a polynomial, as a series: the grade-0
    /// part of `p` must be exactly 1.
    pub fn invert_poly(p: &Poly, order: usize) -> Result<Series> {
        let parts = p.graded_parts(order);
        if !parts[0].is_one() {
            return Err(Error::NonUnitConstantTerm(format!(
                "degree-0 part is {}",
                parts[0]
            )));
        }
        let mut inv = Series::zero(order);
        inv.coeffs[0] = Poly::one();
        for d in 1..=order {
            let mut acc = Poly::zero();
            for i in 1..=d {
                if parts[i].is_zero() || inv.coeffs[d - i].is_zero() {
                    continue;
                }
                acc = &acc + &(&parts[i] * &inv.coeffs[d - i]);
            }
            inv.coeffs[d] = -acc;
        }
        Ok(inv)
    }

    /// Logarithm of a series with grade-0 part 1. Solved from
    /// `d s_d = sum_{i=1}^{d} i u_i s_{d-i}`.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm(format!(
                "degree-0 part is {}",
                self.coeffs[0]
            )));
        }
        let order = self.order();
        let mut u = Series::zero(order);
        for d in 1..=order {
            let mut acc = self.coeffs[d].clone();
            for i in 1..d {
                if u.coeffs[i].is_zero() || self.coeffs[d - i].is_zero() {
                    continue;
                }
                let conv = (&u.coeffs[i] * &self.coeffs[d - i]).scaled(&coef_int(i as i64));
                acc = &acc - &conv.scaled(&coef_int(d as i64).recip());
            }
            u.coeffs[d] = acc;
        }
        Ok(u)
    }

    /// Exponential of a series with zero grade-0 part.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonUnitConstantTerm(format!(
                "exp needs zero degree-0 part, got {}",
                self.coeffs[0]
            )));
        }
        let order = self.order();
        let mut s = Series::zero(order);
        s.coeffs[0] = Poly::one();
        for d in 1..=order {
            let mut acc = Poly::zero();
            for i in 1..=d {
                if self.coeffs[i].is_zero() || s.coeffs[d - i].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[i] * &s.coeffs[d - i]).scaled(&coef_int(i as i64));
            }
            s.coeffs[d] = acc.scaled(&coef_int(d as i64).recip());
        }
        Ok(s)
    }

    /// True when every coefficient of every grade is a nonnegative integer.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|p| p.has_nonneg_integer_coeffs())
    }

    /// First grade and monomial where two series differ.
    pub fn first_difference(&self, other: &Series) -> Option<(usize, Mono, Coef, Coef)> {
        let order = self.order().min(other.order());
        for d in 0..=order {
            if let Some((m, a, b)) = self.coeffs[d].first_difference(&other.coeffs[d]) {
                return Some((d, m, a, b));
            }
        }
        None
    }
}
