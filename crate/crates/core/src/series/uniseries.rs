//! Dense truncated power series in one formal variable.
//!
//! Used for the profile-function work at the basepoint: the variable is
//! `t = N - 1` and coefficients are exact rationals. All operations truncate
//! to the fixed order of the receiver.

use num::{One, Zero};

use crate::series::rational::Rational;

/// `c_0 + c_1 t + ... + c_order t^order`, all coefficients stored densely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniSeries {
    coeffs: Vec<Rational>,
}

impl UniSeries {
    pub fn zero(order: u32) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order as usize + 1],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: u32, value: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// Build from coefficients, truncating or zero-padding to `order`.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        let mut c = coeffs;
        c.resize(order as usize + 1, Rational::zero());
        Self { coeffs: c }
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.coeffs
            .get(k as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for k in 0..=order as usize {
            out.coeffs[k] = self.coeffs[k].clone() + other.coeffs[k].clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scalar_mul(&self, factor: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.clone() * factor).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order()) as usize;
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > order || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                if !b.is_zero() {
                    out[i + j] += a.clone() * b.clone();
                }
            }
        }
        Self { coeffs: out }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Evaluate a polynomial `p(x)` (coefficients ascending) at `x = 1 + t`.
    pub fn polynomial_at_one_plus_t(poly: &[Rational], order: u32) -> Self {
        // Horner against (1 + t)
        let mut acc = Self::zero(order);
        for c in poly.iter().rev() {
            // acc = acc * (1 + t) + c
            let mut next = vec![Rational::zero(); order as usize + 1];
            for (k, a) in acc.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                next[k] += a.clone();
                if k < order as usize {
                    next[k + 1] += a.clone();
                }
            }
            next[0] += c.clone();
            acc = Self { coeffs: next };
        }
        acc
    }
}
