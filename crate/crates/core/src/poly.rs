//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` under graded-lex monomial order, with
//! zero coefficients never stored, so equal polynomials always have
//! identical term maps. Coefficients are `BigRational`; the closed-form
//! secular sums and cluster coefficients are rational term by term and
//! only integral in aggregate, so exactness matters everywhere.
//!
//! A polynomial is Laurent when it may carry negative `Qh` exponents.
//! The flag is sticky under arithmetic; ordinary construction paths all
//! produce non-Laurent values.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::vars::{Mono, Var};

/// Exact rational coefficient.
pub type Coef = BigRational;

pub fn coef_int(n: i64) -> Coef {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coef_ratio(num: i64, den: i64) -> Coef {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Coef>,
    laurent: bool,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        // The Laurent flag is bookkeeping, not part of the value.
        self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Coef::one())
    }

    pub fn constant(c: Coef) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms, laurent: false }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(coef_int(n))
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Mono::var(v), Coef::one())
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Poly::monomial(Mono::var_pow(v, e), Coef::one())
    }

    pub fn monomial(m: Mono, c: Coef) -> Self {
        let mut terms = BTreeMap::new();
        let laurent = m.exps.iter().any(|&e| e < 0);
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms, laurent }
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Coef)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Coef)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Coef {
        self.terms.get(m).cloned().unwrap_or_else(Coef::zero)
    }

    pub fn constant_term(&self) -> Coef {
        self.coeff(&Mono::one())
    }

    /// Accumulate one term, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, m: Mono, c: Coef) {
        if c.is_zero() {
            return;
        }
        if m.exps.iter().any(|&e| e < 0) {
            self.laurent = true;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, c: &Coef) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
            laurent: self.laurent,
        }
    }

    pub fn mul_monomial(&self, m: &Mono, c: &Coef) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        out.laurent = self.laurent;
        for (mm, cc) in &self.terms {
            out.add_term(mm.mul(m), cc * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / den`. Fails with `NonZeroRemainder` when the
    /// division does not come out exactly, which in this crate always
    /// signals a mistranscribed formula. Leading terms multiply under the
    /// graded-lex order, so the greedy loop below succeeds exactly on
    /// divisible inputs and detects the rest at the first leading term.
    pub fn exact_div(&self, den: &Poly) -> Result<Poly> {
        assert!(!den.is_zero(), "exact_div by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        quot.laurent = self.laurent || den.laurent;
        let (dm, dc) = den
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (*m, c.clone()))
            .expect("nonzero divisor has a leading term");
        while !rem.is_zero() {
            let (lm, lc) = {
                let (m, c) = rem.terms.iter().next_back().unwrap();
                (*m, c.clone())
            };
            let qm = match lm.try_div(&dm) {
                Some(q) => q,
                None => {
                    return Err(Error::NonZeroRemainder(format!(
                        "leading term {} not divisible",
                        Poly::monomial(lm, lc)
                    )))
                }
            };
            let qc = &lc / &dc;
            quot.add_term(qm, qc.clone());
            rem = &rem - &den.mul_monomial(&qm, &qc);
        }
        Ok(quot)
    }

    /// Substitute `z -> z q^shift`, `zh -> zh q^shift`: every monomial is
    /// multiplied by `Qh^(2 shift (deg_z + deg_zh))`. Negative shifts put
    /// the result in Laurent mode.
    pub fn scale_shift(&self, shift: i32) -> Poly {
        if shift == 0 {
            return self.clone();
        }
        let mut out = Poly::zero();
        out.laurent = self.laurent || shift < 0;
        let qh = Var::Qh.index();
        for (m, c) in &self.terms {
            let mut mm = *m;
            mm.exps[qh] += 2 * shift * (m.step_degree() as i32);
            out.add_term(mm, c.clone());
        }
        out
    }

    /// Apply an arbitrary monomial remap. Used by the substitution helpers.
    fn map_monomials(&self, laurent: bool, f: impl Fn(&Mono) -> Mono) -> Poly {
        let mut out = Poly::zero();
        out.laurent = laurent;
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Invert the area variable: `q -> 1/q`. Always Laurent.
    pub fn invert_qh(&self) -> Poly {
        let qh = Var::Qh.index();
        self.map_monomials(true, |m| {
            let mut mm = *m;
            mm.exps[qh] = -mm.exps[qh];
            mm
        })
    }

    /// The vertical-reflection substitution `z -> z q^k`, `zh -> zh q^k`,
    /// `q -> 1/q` in one pass (Laurent mode).
    pub fn dual_substitution(&self, k: i32) -> Poly {
        let qh = Var::Qh.index();
        self.map_monomials(true, |m| {
            let mut mm = *m;
            mm.exps[qh] = 2 * k * (m.step_degree() as i32) - mm.exps[qh];
            mm
        })
    }

    /// Evaluate at `q = 1` by erasing all area exponents.
    pub fn subst_qh_one(&self) -> Poly {
        let qh = Var::Qh.index();
        self.map_monomials(false, |m| {
            let mut mm = *m;
            mm.exps[qh] = 0;
            mm
        })
    }

    /// Set the horizontal weight to zero: terms containing `Zh` drop.
    pub fn subst_zh_zero(&self) -> Poly {
        let mut out = Poly::zero();
        out.laurent = self.laurent;
        for (m, c) in &self.terms {
            if m.exp(Var::Zh) == 0 {
                out.add_term(*m, c.clone());
            }
        }
        out
    }

    /// Weight horizontal steps like the others: `zh -> z`.
    pub fn subst_zh_to_z(&self) -> Poly {
        let z = Var::Z.index();
        let zh = Var::Zh.index();
        self.map_monomials(self.laurent, |m| {
            let mut mm = *m;
            mm.exps[z] += mm.exps[zh];
            mm.exps[zh] = 0;
            mm
        })
    }

    /// Multiply every `Qh` exponent by `r` (reinterpreting the base, e.g.
    /// building q-binomials in `q^2` or `q^3`).
    pub fn stretch_qh(&self, r: i32) -> Poly {
        let qh = Var::Qh.index();
        self.map_monomials(self.laurent || r < 0, |m| {
            let mut mm = *m;
            mm.exps[qh] *= r;
            mm
        })
    }

    /// Exchange the exponent slots of two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Poly {
        self.map_monomials(self.laurent, |m| {
            let mut mm = *m;
            mm.exps.swap(a.index(), b.index());
            mm
        })
    }

    /// Two-step identification `z -> z1 z2`, `zh -> z1^2 + z2^2`, with the
    /// area slot shared (`qh` already stands for the two-step area root).
    pub fn subst_two_step(&self) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let a = m.exp(Var::Z);
            let b = m.exp(Var::Zh);
            debug_assert!(a >= 0 && b >= 0);
            let mut base = *m;
            base.exps[Var::Z.index()] = 0;
            base.exps[Var::Zh.index()] = 0;
            base.exps[Var::Z1.index()] += a;
            base.exps[Var::Z2.index()] += a;
            // (z1^2 + z2^2)^b expanded by the binomial theorem.
            for i in 0..=b {
                let mut mm = base;
                mm.exps[Var::Z1.index()] += 2 * i;
                mm.exps[Var::Z2.index()] += 2 * (b - i);
                let bin = num_integer::binomial(BigInt::from(b), BigInt::from(i));
                out.add_term(mm, c * BigRational::from_integer(bin));
            }
        }
        out
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.denom().is_one() && !c.numer().is_negative())
    }

    /// Largest combined degree in the step variables.
    pub fn step_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.step_degree())
            .max()
            .unwrap_or(0)
    }

    /// Split into homogeneous parts by combined step degree, up to `max`
    /// inclusive. Terms of higher degree are discarded.
    pub fn graded_parts(&self, max: usize) -> Vec<Poly> {
        let mut parts = vec![Poly::zero(); max + 1];
        for (m, c) in &self.terms {
            let d = m.step_degree();
            if d >= 0 && (d as usize) <= max {
                parts[d as usize].add_term(*m, c.clone());
            }
        }
        parts
    }

    /// Range of `Qh` exponents present, or `None` for the zero polynomial.
    pub fn qh_support(&self) -> Option<(i32, i32)> {
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for m in self.terms.keys() {
            let e = m.exp(Var::Qh);
            lo = lo.min(e);
            hi = hi.max(e);
        }
        if lo > hi {
            None
        } else {
            Some((lo, hi))
        }
    }

    /// Maximum exponent of one variable across all terms.
    pub fn max_exp(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// True if the variable appears in any term.
    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }

    /// Exact evaluation at a full rational assignment. Every variable
    /// occurring in the polynomial must be assigned; a negative exponent on
    /// a zero value is reported as division by zero.
    pub fn eval_rational(&self, assignment: &BTreeMap<Var, Coef>) -> Result<Coef> {
        let mut total = Coef::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = Var::ALL[i];
                let val = assignment
                    .get(&v)
                    .ok_or(Error::MissingAssignment(v.name()))?;
                if val.is_zero() {
                    if e < 0 {
                        return Err(Error::DivisionByZero(v.name()));
                    }
                    term = Coef::zero();
                    break;
                }
                term *= pow_rational(val, e);
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluate with the area weight given as `q` itself rather than its
    /// square root. All `Qh` exponents must be even (they track doubled
    /// areas), otherwise the value would be irrational.
    pub fn eval_at_q(
        &self,
        q: &Coef,
        others: &BTreeMap<Var, Coef>,
    ) -> Result<Coef> {
        let mut total = Coef::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = Var::ALL[i];
                if v == Var::Qh {
                    if e % 2 != 0 {
                        return Err(Error::InvalidQuery(
                            "odd half-area exponent cannot be evaluated at rational q".into(),
                        ));
                    }
                    if q.is_zero() {
                        if e < 0 {
                            return Err(Error::DivisionByZero("qh"));
                        }
                        term = Coef::zero();
                        break;
                    }
                    term *= pow_rational(q, e / 2);
                    continue;
                }
                let val = others
                    .get(&v)
                    .ok_or(Error::MissingAssignment(v.name()))?;
                if val.is_zero() {
                    if e < 0 {
                        return Err(Error::DivisionByZero(v.name()));
                    }
                    term = Coef::zero();
                    break;
                }
                term *= pow_rational(val, e);
            }
            total += term;
        }
        Ok(total)
    }

    /// First monomial (graded-lex) where two polynomials differ, with both
    /// coefficients. Drives the mismatch details in verification reports.
    pub fn first_difference(&self, other: &Poly) -> Option<(Mono, Coef, Coef)> {
        let mut keys: Vec<&Mono> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for m in keys {
            let a = self.coeff(m);
            let b = other.coeff(m);
            if a != b {
                return Some((*m, a, b));
            }
        }
        None
    }
}

fn pow_rational(base: &Coef, e: i32) -> Coef {
    // Callers guard the zero-base, negative-exponent case.
    base.pow(e)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.laurent = out.laurent || rhs.laurent;
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.laurent = out.laurent || rhs.laurent;
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        out.laurent = self.laurent || rhs.laurent;
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
            laurent: self.laurent,
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut printed = false;
            if !mag.is_one() || m.is_one() {
                write!(f, "{mag}")?;
                printed = true;
            }
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                write!(f, "{}", Var::ALL[i].name())?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
                printed = true;
            }
        }
        Ok(())
    }
}
