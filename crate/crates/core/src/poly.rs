//! Exact polynomials in `x` and `y` with arbitrary-precision coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `x` and `y` over the integers. Zero coefficients
/// are never stored, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0, 0)
    }

    pub fn monomial(c: BigInt, a: i32, b: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn add_term(&mut self, a: i32, b: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i32, b: i32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Terms in increasing `(x-degree, y-degree)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn shift(&self, da: i32, db: i32) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&(a, b), v)| ((a + da, b + db), v.clone())).collect(),
        }
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&(a, b), v)| ((b, a), v.clone())).collect(),
        }
    }

    /// Substitutes `y = 1`.
    pub fn at_y_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, _), v) in &self.terms {
            out.add_term(a, 0, v.clone());
        }
        out
    }

    /// Evaluates at `x = y = 1`.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `±x^a y^b`: the units of the Laurent ring.
    pub fn as_unit(&self) -> Option<(i32, i32, bool)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(a, b), c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some((a, b, c.is_positive()))
        } else {
            None
        }
    }

    /// Multiplicative inverse when `self` is a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (a, b, positive) = self.as_unit()?;
        let c = if positive { BigInt::one() } else { -BigInt::one() };
        Some(Self::monomial(c, -a, -b))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a, b), c) in &self.terms {
            for (&(d, e), f) in &rhs.terms {
                out.add_term(a + d, b + e, c * f);
            }
        }
        out
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[(&str, i64)], c: &BigInt, first: bool) -> fmt::Result {
    let negative = c.is_negative();
    if first {
        if negative {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if negative { " - " } else { " + " })?;
    }
    let mag = c.abs();
    let powers: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if powers.is_empty() {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    f.write_str(&powers.join("*"))
}

/// Canonical text: terms by decreasing total degree, then decreasing
/// `x`-degree, e.g. `x^3*y + x*y^3 + 3*x*y`.
impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&(i32, i32)> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (i, k) in keys.into_iter().enumerate() {
            write_monomial(f, &[("x", k.0 as i64), ("y", k.1 as i64)], &self.terms[k], i == 0)?;
        }
        Ok(())
    }
}

/// A polynomial in `x` and `y` with non-negative exponents, used for joint
/// distributions and the Catalan–Schett polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct BivariatePolynomial(LaurentPoly2);

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds `x^a y^b` once; used to accumulate distributions.
    pub fn add_monomial(&mut self, a: usize, b: usize) {
        self.0.add_term(a as i32, b as i32, BigInt::one());
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: BigInt) {
        self.0.add_term(a as i32, b as i32, c);
    }

    pub fn coeff(&self, a: usize, b: usize) -> BigInt {
        self.0.coeff(a as i32, b as i32)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.0.terms().map(|(a, b, c)| (a as usize, b as usize, c))
    }

    pub fn swap_xy(&self) -> Self {
        BivariatePolynomial(self.0.swap_xy())
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.0.sum_of_coefficients()
    }

    pub fn as_laurent(&self) -> &LaurentPoly2 {
        &self.0
    }

    /// Builds a polynomial from a distribution over `(x-degree, y-degree)`.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut p = Self::zero();
        for (a, b) in pairs {
            p.add_monomial(a, b);
        }
        p
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A polynomial in `t` whose coefficients are Laurent polynomials in `x, y`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TPoly {
    coeffs: Vec<LaurentPoly2>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_laurent(c: LaurentPoly2) -> Self {
        let mut p = TPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn t() -> Self {
        TPoly {
            coeffs: vec![LaurentPoly2::zero(), LaurentPoly2::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<LaurentPoly2>) -> Self {
        let mut p = TPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(LaurentPoly2::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[LaurentPoly2] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly2 {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn at_y_one(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(LaurentPoly2::at_y_one).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::from_laurent(LaurentPoly2::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![LaurentPoly2::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        TPoly::from_coeffs(out)
    }
}

/// Canonical text: increasing `t`-degree, and within one `t`-degree the
/// order of [`LaurentPoly2`]'s display.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut keys: Vec<(i32, i32)> = c.terms().map(|(a, b, _)| (a, b)).collect();
            keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
            for (a, b) in keys {
                let vars = [("t", k as i64), ("x", a as i64), ("y", b as i64)];
                write_monomial(f, &vars, &c.coeff(a, b), first)?;
                first = false;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_canonical() {
        let mut p = BivariatePolynomial::zero();
        p.add_term(1, 1, BigInt::from(3));
        p.add_monomial(1, 3);
        p.add_monomial(3, 1);
        assert_eq!(p.to_string(), "x^3*y + x*y^3 + 3*x*y");
        assert_eq!(LaurentPoly2::zero().to_string(), "0");
        let q = &LaurentPoly2::x().shift(-2, 0) - &LaurentPoly2::constant(2);
        assert_eq!(q.to_string(), "-2 + x^-1");
    }

    #[test]
    fn arithmetic() {
        let x = LaurentPoly2::x();
        let y = LaurentPoly2::y();
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.coeff(1, 1), BigInt::from(2));
        assert!((&sq - &sq).is_zero());
        assert_eq!(x.unit_inverse().unwrap(), x.shift(-2, 0));
        assert!(s.unit_inverse().is_none());
    }

    #[test]
    fn t_polynomials() {
        let one_plus_t = &TPoly::from_laurent(LaurentPoly2::one()) + &TPoly::t();
        let sq = one_plus_t.pow(2);
        assert_eq!(sq.to_string(), "1 + 2*t + t^2");
    }
}
