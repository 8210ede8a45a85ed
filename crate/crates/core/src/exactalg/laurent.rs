//! Sparse multivariable Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors, so iteration is
//! in lexicographic order of exponents. All equality and hashing is
//! structural; comparisons "up to units" go through [`LaurentPoly::unit_normalize`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

/// Exponent vector of a monomial.
pub type Exponent = SmallVec<[i32; 4]>;

/// Shared, ordered list of variable names.
pub type Vars = Arc<[String]>;

/// Build a variable list from names.
pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

/// Conventional names for a free abelian group of rank `b`.
pub fn standard_vars(b: usize) -> Vars {
    match b {
        1 => vars(&["t"]),
        2 => vars(&["x", "y"]),
        3 => vars(&["x", "y", "z"]),
        _ => (1..=b).map(|i| format!("t_{i}")).collect::<Vec<_>>().into(),
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: Vars) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: Vars, c: impl Into<BigInt>) -> Self {
        let n = vars.len();
        Self::monomial(vars, std::iter::repeat_n(0, n).collect(), c)
    }

    pub fn monomial(vars: Vars, exp: Exponent, c: impl Into<BigInt>) -> Self {
        assert_eq!(exp.len(), vars.len(), "exponent length must match variable count");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { vars, terms }
    }

    /// The `i`-th variable raised to the power `e`.
    pub fn var_pow(vars: Vars, i: usize, e: i32) -> Self {
        let mut exp: Exponent = std::iter::repeat_n(0, vars.len()).collect();
        exp[i] = e;
        Self::monomial(vars, exp, 1)
    }

    pub fn from_terms<I, C>(vars: Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Univariate helper: coefficients indexed from exponent `low` upwards.
    pub fn univariate(var: &str, low: i32, coeffs: &[i64]) -> Self {
        let v = vars(&[var]);
        Self::from_terms(
            v,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (smallvec::smallvec![low + i as i32], c)),
        )
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigInt> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Exponent, BigInt> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(e, c)| {
                c.is_one() && e.iter().all(|&x| x == 0)
            })
    }

    /// `±` a monomial: the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().is_some_and(|c| c.abs().is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&x| x == 0))
    }

    pub fn coeff(&self, exp: &[i32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        let z: Exponent = std::iter::repeat_n(0, self.nvars()).collect();
        self.coeff(&z)
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: BigInt) {
        debug_assert_eq!(exp.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            self.same_ring(other),
            "polynomials over different variable lists: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    /// Componentwise minimum of the exponents, `None` for zero.
    pub fn min_exponents(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e.iter()) {
                *a = (*a).min(*b);
            }
        }
        Some(m)
    }

    /// Componentwise maximum of the exponents, `None` for zero.
    pub fn max_exponents(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e.iter()) {
                *a = (*a).max(*b);
            }
        }
        Some(m)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Lexicographically smallest term.
    pub fn trailing_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next()
    }

    /// Span `max - min` of exponents in variable `i` (0 for the zero polynomial).
    pub fn degree_span(&self, i: usize) -> i32 {
        match (self.min_exponents(), self.max_exponents()) {
            (Some(lo), Some(hi)) => hi[i] - lo[i],
            _ => 0,
        }
    }

    pub fn max_degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Gcd of the integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Exact division of every coefficient by `c`; panics if inexact.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    let (q, r) = x.div_rem(c);
                    assert!(r.is_zero(), "inexact scalar division");
                    (e.clone(), q)
                })
                .collect(),
        }
    }

    /// Multiply by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let ne: Exponent = e.iter().zip(shift).map(|(a, b)| a + b).collect();
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// Divide by the componentwise-minimal monomial so every exponent is
    /// non-negative and each variable attains exponent zero.
    pub fn shift_to_polynomial(&self) -> Self {
        match self.min_exponents() {
            Some(m) => {
                let neg: Exponent = m.iter().map(|x| -x).collect();
                self.shift(&neg)
            }
            None => self.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.vars.clone());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitute `t ↦ t⁻¹` in every variable.
    pub fn invert_variables(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Ring homomorphism sending variable `i` to the monomial with exponent
    /// `images[i]` in the target variable list.
    pub fn substitute_monomials(&self, target: Vars, images: &[Exponent]) -> Self {
        assert_eq!(images.len(), self.nvars());
        let m = target.len();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne: Exponent = std::iter::repeat_n(0, m).collect();
            for (k, &ek) in e.iter().enumerate() {
                if ek != 0 {
                    for (slot, img) in ne.iter_mut().zip(images[k].iter()) {
                        *slot += ek * img;
                    }
                }
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Re-label the ring without changing the terms (same number of variables).
    pub fn with_vars(&self, vars: Vars) -> Self {
        assert_eq!(vars.len(), self.nvars());
        LaurentPoly {
            vars,
            terms: self.terms.clone(),
        }
    }

    /// Embed into a ring with more variables: variable `i` goes to `slots[i]`.
    pub fn embed(&self, target: Vars, slots: &[usize]) -> Self {
        let m = target.len();
        let images: Vec<Exponent> = slots
            .iter()
            .map(|&s| {
                let mut e: Exponent = std::iter::repeat_n(0, m).collect();
                e[s] = 1;
                e
            })
            .collect();
        self.substitute_monomials(target, &images)
    }

    /// Evaluate at an integer point. Every exponent must be non-negative.
    pub fn eval_nonneg(&self, point: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                assert!(k >= 0, "negative exponent in eval_nonneg");
                if k > 0 {
                    term *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Canonical representative of the class `{± monomial · self}`: shifted so
    /// that every variable's minimal exponent is zero, sign chosen so that the
    /// lexicographically smallest term has positive coefficient.
    pub fn unit_normalize(&self) -> Self {
        let p = self.shift_to_polynomial();
        match p.trailing_term() {
            Some((_, c)) if c.is_negative() => -&p,
            _ => p,
        }
    }

    /// Equality up to multiplication by `± monomial`.
    pub fn associated(&self, other: &Self) -> bool {
        self.unit_normalize() == other.unit_normalize()
    }

    /// Exact division in the Laurent ring; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check_ring(d);
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.vars.clone()));
        }
        if d.len() == 1 {
            let (de, dc) = d.terms.iter().next().unwrap();
            let mut terms = BTreeMap::new();
            for (e, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                let ne: Exponent = e.iter().zip(de.iter()).map(|(a, b)| a - b).collect();
                terms.insert(ne, q);
            }
            return Some(LaurentPoly {
                vars: self.vars.clone(),
                terms,
            });
        }
        let (amin, amax) = (self.min_exponents()?, self.max_exponents()?);
        let (dmin, dmax) = (d.min_exponents()?, d.max_exponents()?);
        let n = self.nvars();
        for i in 0..n {
            if amax[i] - amin[i] < dmax[i] - dmin[i] {
                return None;
            }
        }
        let (lde, ldc) = d.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let (qc, r) = rc.div_rem(&ldc);
            if !r.is_zero() {
                return None;
            }
            let qe: Exponent = re.iter().zip(lde.iter()).map(|(a, b)| a - b).collect();
            for i in 0..n {
                if qe[i] < amin[i] - dmin[i] || qe[i] > amax[i] - dmax[i] {
                    return None;
                }
            }
            for (de, dc) in &d.terms {
                let e: Exponent = qe.iter().zip(de.iter()).map(|(a, b)| a + b).collect();
                let delta = &qc * dc;
                match rem.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.insert(qe, qc);
        }
        Some(LaurentPoly {
            vars: self.vars.clone(),
            terms: quot,
        })
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Coefficients with respect to variable `i`: map from exponent of `x_i`
    /// to the coefficient polynomial (with the `i`-th exponent zeroed).
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] = 0;
            out.entry(e[i])
                .or_insert_with(|| LaurentPoly::zero(self.vars.clone()))
                .terms
                .insert(ne, c.clone());
        }
        out
    }

    /// Single-variable view: `(exponent, coefficient)` pairs in increasing order.
    pub fn univariate_terms(&self) -> Vec<(i32, BigInt)> {
        assert_eq!(self.nvars(), 1);
        self.terms.iter().map(|(e, c)| (e[0], c.clone())).collect()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(k, _)| **k != 0)
                .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_ring(rhs);
        let mut out = LaurentPoly::zero(self.vars.clone());
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn t(low: i32, c: &[i64]) -> LaurentPoly {
        LaurentPoly::univariate("t", low, c)
    }

    #[test]
    fn normalize_examples() {
        // -t^3 + t^2 and t - 1 are associates
        let p = t(2, &[1, -1]);
        assert_eq!(p.unit_normalize(), t(0, &[1, -1]));
        assert_eq!(p.unit_normalize(), t(0, &[-1, 1]).unit_normalize());
        assert_eq!(t(0, &[1]).unit_normalize(), t(0, &[1]));
        let s = t(-1, &[1, -1, 1]);
        assert_eq!(s.unit_normalize(), (-&s).unit_normalize());
        assert_eq!(s.unit_normalize(), t(0, &[1, -1, 1]));
        assert!(LaurentPoly::zero(vars(&["t"])).unit_normalize().is_zero());
    }

    #[test]
    fn exact_division() {
        let a = t(0, &[-1, 0, 1]); // t^2 - 1
        let b = t(0, &[-1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), t(0, &[1, 1]));
        assert!(t(0, &[1, 0, 1]).div_exact(&b).is_none());
        assert!(t(0, &[2]).div_exact(&t(0, &[3])).is_none());
        // Laurent shifts
        assert_eq!(t(-3, &[-1, 0, 1]).div_exact(&t(5, &[1, 1])).unwrap(), t(-8, &[-1, 1]));
    }

    #[test]
    fn multivariate_division() {
        let v = vars(&["x", "y"]);
        let x = LaurentPoly::var_pow(v.clone(), 0, 1);
        let y = LaurentPoly::var_pow(v.clone(), 1, 1);
        let one = LaurentPoly::one(v.clone());
        let a = &(&x - &one) * &(&(&x * &y) + &one);
        assert_eq!(a.div_exact(&(&x - &one)).unwrap(), &(&x * &y) + &one);
        assert!(a.div_exact(&(&y - &one)).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(t(0, &[2, -3, 2]).to_string(), "2*t^2 - 3*t + 2");
        assert_eq!(t(-1, &[1]).to_string(), "t^-1");
    }
}
