use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly2, TPoly};

/// A power series in `t` with [`LaurentPoly2`] coefficients, known modulo
/// `t^{order+1}`. Binary operations truncate to the smaller order, which is
/// always the order up to which the result is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<LaurentPoly2>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![LaurentPoly2::zero(); order + 1],
        }
    }

    pub fn constant(c: LaurentPoly2, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LaurentPoly2::one(), order)
    }

    /// `c · t^k`.
    pub fn monomial(c: LaurentPoly2, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn t(order: usize) -> Self {
        Self::monomial(LaurentPoly2::one(), 1, order)
    }

    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly2>, order: usize) -> Self {
        coeffs.resize(order + 1, LaurentPoly2::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_tpoly(p: &TPoly, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly2 {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPoly2] {
        &self.coeffs
    }

    pub fn add_to_coeff(&mut self, k: usize, c: &LaurentPoly2) {
        self.coeffs[k] += c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    /// Lowest `k` with a non-zero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn scale(&self, c: &LaurentPoly2) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(&c)).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![LaurentPoly2::zero(); k.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take(order + 1 - coeffs.len()).cloned());
        TruncatedSeries { coeffs }
    }

    pub fn swap_xy(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(LaurentPoly2::swap_xy).collect(),
        }
    }

    pub fn at_y_one(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(LaurentPoly2::at_y_one).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be `±x^a y^b`.
    pub fn inverse(&self) -> Result<Self> {
        let order = self.order();
        let c0_inv = self.coeffs[0].unit_inverse().ok_or_else(|| {
            Error::Series(format!("constant term {} is not invertible", self.coeffs[0]))
        })?;
        let mut inv = vec![LaurentPoly2::zero(); order + 1];
        inv[0] = c0_inv.clone();
        for k in 1..=order {
            let mut acc = LaurentPoly2::zero();
            for j in 1..=k {
                acc += &(&self.coeffs[j] * &inv[k - j]);
            }
            inv[k] = -&(&acc * &c0_inv);
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// `1 / (1 - t^2)`.
    pub fn geometric_even(order: usize) -> Self {
        let mut s = Self::zero(order);
        for k in (0..=order).step_by(2) {
            s.coeffs[k] = LaurentPoly2::one();
        }
        s
    }
}

fn zip_with(a: &TruncatedSeries, b: &TruncatedSeries, f: impl Fn(&LaurentPoly2, &LaurentPoly2) -> LaurentPoly2) -> TruncatedSeries {
    TruncatedSeries {
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f(x, y)).collect(),
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![LaurentPoly2::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

// Owned and mixed operands, so identities can be written as plain formulas.
macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                (&self).$m(rhs)
            }
        }
        impl $tr<TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_one_minus_t_squared() {
        let one_minus = &TruncatedSeries::one(8) - &TruncatedSeries::t(8).pow(2);
        assert_eq!(one_minus.inverse().unwrap(), TruncatedSeries::geometric_even(8));
    }

    #[test]
    fn non_unit_constant_term_is_rejected() {
        let two = TruncatedSeries::constant(LaurentPoly2::constant(2), 4);
        assert!(two.inverse().is_err());
        assert!(TruncatedSeries::t(4).inverse().is_err());
    }

    #[test]
    fn shift_and_truncate() {
        let s = TruncatedSeries::t(3).shift(2);
        assert_eq!(s.valuation(), Some(3));
        assert!(TruncatedSeries::t(3).shift(5).is_zero());
        assert_eq!((&TruncatedSeries::t(5) * &TruncatedSeries::t(2)).order(), 2);
    }
}
