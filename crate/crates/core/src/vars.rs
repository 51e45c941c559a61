//! The fixed variable set and exponent vectors.
//!
//! Every polynomial in this crate lives over one global, ordered variable
//! set. The areas under paths are counted in half-plaquettes, so the area
//! variable `Qh` is a formal square root: `Qh^2` is the area weight `q`,
//! and a stored `Qh` exponent is always a doubled area. The pair `U`, `V`
//! carries the two-step weights `u = z1^2`, `v = z2^2` used by the
//! exclusion-statistics forms, while `Z1`, `Z2` are the auxiliary square
//! roots themselves; the latter two appear only inside the two-step
//! embedding check and are never serialized.

/// Number of exponent slots, including the two auxiliary square roots.
pub const NUM_VARS: usize = 11;

/// Number of serializable variables (everything except `Z1`, `Z2`).
pub const NUM_PUBLIC_VARS: usize = 9;

/// A variable of the global polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Weight of a single up- or down-step.
    Z = 0,
    /// Weight of a horizontal step.
    Zh = 1,
    /// Half-area variable; `Qh^2` is the area weight per plaquette.
    Qh = 2,
    /// First two-step weight, `u = z1^2`.
    U = 3,
    /// Second two-step weight, `v = z2^2`.
    V = 4,
    /// Touch-down marker (down-step landing on the floor).
    Td = 5,
    /// Creep-down marker (horizontal step on the floor).
    Cd = 6,
    /// Touch-up marker (up-step reaching the ceiling).
    Tu = 7,
    /// Creep-up marker (horizontal step on the ceiling).
    Cu = 8,
    /// Auxiliary square root of `U`; internal to the two-step check.
    Z1 = 9,
    /// Auxiliary square root of `V`; internal to the two-step check.
    Z2 = 10,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [
        Var::Z,
        Var::Zh,
        Var::Qh,
        Var::U,
        Var::V,
        Var::Td,
        Var::Cd,
        Var::Tu,
        Var::Cu,
        Var::Z1,
        Var::Z2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::Zh => "zh",
            Var::Qh => "qh",
            Var::U => "u",
            Var::V => "v",
            Var::Td => "t",
            Var::Cd => "s",
            Var::Tu => "tc",
            Var::Cu => "sc",
            Var::Z1 => "z1",
            Var::Z2 => "z2",
        }
    }
}

/// An exponent vector over [`Var::ALL`]. Negative entries are only valid
/// in Laurent mode (duality substitutions invert the area variable).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono {
    pub exps: [i32; NUM_VARS],
}

impl Mono {
    pub fn one() -> Self {
        Mono { exps: [0; NUM_VARS] }
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        let mut m = Self::one();
        m.exps[v.index()] = e;
        m
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.exps[v.index()]
    }

    pub fn with_exp(mut self, v: Var, e: i32) -> Self {
        self.exps[v.index()] = e;
        self
    }

    /// Product of two monomials: exponents add.
    pub fn mul(&self, other: &Mono) -> Mono {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a += *b;
        }
        Mono { exps }
    }

    /// Exact quotient, or `None` if any exponent would go negative.
    /// Used by polynomial division; Laurent callers subtract directly.
    pub fn try_div(&self, other: &Mono) -> Option<Mono> {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a -= *b;
            if *a < 0 {
                return None;
            }
        }
        Some(Mono { exps })
    }

    pub fn div_laurent(&self, other: &Mono) -> Mono {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a -= *b;
        }
        Mono { exps }
    }

    /// Sum of all exponents; the grade used for term ordering.
    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    /// Combined degree in the step variables `Z` and `Zh`: the path length
    /// a monomial accounts for. Series are graded by this.
    pub fn step_degree(&self) -> i64 {
        self.exps[Var::Z.index()] as i64 + self.exps[Var::Zh.index()] as i64
    }

    /// Degree in the two-step weights `U` and `V`.
    pub fn uv_degree(&self) -> i64 {
        self.exps[Var::U.index()] as i64 + self.exps[Var::V.index()] as i64
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    /// Graded lexicographic order: total degree first, then the exponent
    /// vector itself. This is a monomial order (compatible with
    /// multiplication), which exact division relies on.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}
