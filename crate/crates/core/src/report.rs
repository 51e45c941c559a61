//! Pass/fail reports for the identity suites.

use crate::poly::Poly;
use crate::series::Series;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    /// Record equality of two polynomials, reporting the first differing
    /// monomial on mismatch.
    pub fn push_poly_eq(&mut self, name: impl Into<String>, lhs: &Poly, rhs: &Poly) {
        match lhs.first_difference(rhs) {
            None => self.push(name, true, ""),
            Some((m, a, b)) => self.push(
                name,
                false,
                format!("first differing monomial {}: {a} vs {b}", Poly::monomial(m, crate::poly::coef_int(1))),
            ),
        }
    }

    pub fn push_series_eq(&mut self, name: impl Into<String>, lhs: &Series, rhs: &Series) {
        match lhs.first_difference(rhs) {
            None => self.push(name, true, ""),
            Some((d, m, a, b)) => self.push(
                name,
                false,
                format!(
                    "grade {d}, first differing monomial {}: {a} vs {b}",
                    Poly::monomial(m, crate::poly::coef_int(1))
                ),
            ),
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coef_int;
    use crate::vars::Var;

    #[test]
    fn mismatch_names_first_differing_monomial() {
        let mut report = CheckReport::new();
        let a = Poly::one() + Poly::var(Var::Zh);
        let b = Poly::one() + Poly::var(Var::Zh).scaled(&coef_int(3)) + Poly::var(Var::Z).pow(2);
        report.push_poly_eq("demo", &a, &b);
        assert!(!report.all_pass());
        let check = &report.checks[0];
        assert!(check.detail.contains("zh"), "{}", check.detail);
        assert!(check.detail.contains("1 vs 3"), "{}", check.detail);

        let mut s1 = crate::series::Series::zero(2);
        s1.set_coeff(1, Poly::var(Var::Z));
        let s2 = crate::series::Series::zero(2);
        report.push_series_eq("series_demo", &s1, &s2);
        assert!(report.checks[1].detail.contains("grade 1"));
    }
}
