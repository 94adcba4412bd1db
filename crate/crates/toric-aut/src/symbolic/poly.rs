//! Exact polynomials and rational functions in three blocks of formal
//! variables: Laurent monomials `x^alpha` over the character lattice,
//! polynomial parameters `t_j`, and invertible parameters `l_j` (one per
//! ray) for torus elements.
//!
//! Fractions are never reduced by a multivariate gcd; equality is decided by
//! cross-multiplication, which is exact and cheap at this scale.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Shape of the variable blocks. All operands of an operation must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarSpec {
    pub x_vars: usize,
    pub t_vars: usize,
    pub lam_vars: usize,
}

impl VarSpec {
    pub fn new(x_vars: usize, t_vars: usize, lam_vars: usize) -> Self {
        VarSpec {
            x_vars,
            t_vars,
            lam_vars,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Mono {
    pub x: Vec<BigInt>,
    pub t: Vec<u32>,
    pub lam: Vec<BigInt>,
}

impl Mono {
    fn unit(vars: VarSpec) -> Self {
        Mono {
            x: vec![BigInt::zero(); vars.x_vars],
            t: vec![0; vars.t_vars],
            lam: vec![BigInt::zero(); vars.lam_vars],
        }
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            t: self.t.iter().zip(&other.t).map(|(a, b)| a + b).collect(),
            lam: self
                .lam
                .iter()
                .zip(&other.lam)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Polynomial with exact rational coefficients; `x` and `lam` exponents may
/// be negative (Laurent), `t` exponents are nonnegative.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: VarSpec,
    terms: BTreeMap<Mono, BigRational>,
}

impl Poly {
    pub fn zero(vars: VarSpec) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: VarSpec) -> Self {
        Poly::constant(vars, BigRational::one())
    }

    pub fn constant(vars: VarSpec, c: BigRational) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Mono::unit(vars), c);
        }
        p
    }

    pub(crate) fn from_mono(vars: VarSpec, mono: Mono, coeff: BigRational) -> Self {
        debug_assert_eq!(mono.x.len(), vars.x_vars);
        debug_assert_eq!(mono.t.len(), vars.t_vars);
        debug_assert_eq!(mono.lam.len(), vars.lam_vars);
        let mut p = Poly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    /// The Laurent monomial `x^alpha`.
    pub fn x_monomial(vars: VarSpec, alpha: &[BigInt]) -> Self {
        let mut mono = Mono::unit(vars);
        mono.x = alpha.to_vec();
        Poly::from_mono(vars, mono, BigRational::one())
    }

    /// The parameter `t_j`.
    pub fn t_var(vars: VarSpec, j: usize) -> Self {
        let mut mono = Mono::unit(vars);
        mono.t[j] = 1;
        Poly::from_mono(vars, mono, BigRational::one())
    }

    /// The invertible monomial `l^exps`.
    pub fn lam_monomial(vars: VarSpec, exps: &[BigInt]) -> Self {
        let mut mono = Mono::unit(vars);
        mono.lam = exps.to_vec();
        Poly::from_mono(vars, mono, BigRational::one())
    }

    pub fn vars(&self) -> VarSpec {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, mono: Mono, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars, "variable shape mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars, "variable shape mismatch");
        let mut out = Poly::zero(self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.vars);
        }
        Poly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u64) -> Poly {
        let mut out = Poly::one(self.vars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The coefficient of `t_0^k`, as a polynomial with the `t` exponent
    /// removed. Requires a single `t` variable.
    pub fn t_coefficient(&self, k: u32) -> Poly {
        assert_eq!(self.vars.t_vars, 1, "t-coefficient needs one t variable");
        let mut out = Poly::zero(self.vars);
        for (m, c) in &self.terms {
            if m.t[0] == k {
                let mut stripped = m.clone();
                stripped.t[0] = 0;
                out.insert(stripped, c.clone());
            }
        }
        out
    }

    /// Multiply every term by `l^(weight(x-part))` for a term-wise weight.
    pub(crate) fn lam_twist(&self, weight: impl Fn(&[BigInt]) -> Vec<BigInt>) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (m, c) in &self.terms {
            let w = weight(&m.x);
            debug_assert_eq!(w.len(), self.vars.lam_vars);
            let mut twisted = m.clone();
            for (l, delta) in twisted.lam.iter_mut().zip(&w) {
                *l += delta;
            }
            out.insert(twisted, c.clone());
        }
        out
    }

    /// Group the terms by an integer key of their `x`-part.
    pub(crate) fn split_by_x(&self, key: impl Fn(&[BigInt]) -> i64) -> BTreeMap<i64, Poly> {
        let mut out: BTreeMap<i64, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(key(&m.x))
                .or_insert_with(|| Poly::zero(self.vars))
                .insert(m.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if !m.x.iter().all(|e| e.is_zero()) {
                let exps: Vec<String> = m.x.iter().map(BigInt::to_string).collect();
                parts.push(format!("x^({})", exps.join(",")));
            }
            for (j, e) in m.t.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("t{j}")),
                    _ => parts.push(format!("t{j}^{e}")),
                }
            }
            if !m.lam.iter().all(|e| e.is_zero()) {
                let exps: Vec<String> = m.lam.iter().map(BigInt::to_string).collect();
                parts.push(format!("l^({})", exps.join(",")));
            }
            if parts.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", parts.join("*"))?;
            } else if (-c).is_one() {
                write!(f, "-{}", parts.join("*"))?;
            } else {
                write!(f, "{c}*{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Quotient of two [`Poly`] values with a nonzero denominator. Equality is
/// cross-multiplication, a congruence for the arithmetic here.
#[derive(Clone)]
pub struct LaurentRational {
    num: Poly,
    den: Poly,
}

impl LaurentRational {
    pub fn from_poly(p: Poly) -> Self {
        let one = Poly::one(p.vars());
        LaurentRational { num: p, den: one }
    }

    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        LaurentRational { num, den }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn vars(&self) -> VarSpec {
        self.num.vars()
    }

    pub fn add(&self, other: &LaurentRational) -> LaurentRational {
        LaurentRational::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &LaurentRational) -> LaurentRational {
        LaurentRational::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &LaurentRational) -> LaurentRational {
        assert!(!other.num.is_zero(), "division by the zero function");
        LaurentRational::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }
}

impl PartialEq for LaurentRational {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for LaurentRational {}

impl fmt::Display for LaurentRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.num_terms() == 1 && self.den == Poly::one(self.den.vars()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for LaurentRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
