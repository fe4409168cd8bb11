//! Taylor jets of the profile function at the basepoint.
//!
//! A [`Jet`] holds scaled Taylor coefficients `c_k` of a univariate function
//! `f` at its basepoint, so that `f^(k)(basepoint) = k! * c_k`. The artifact
//! only ever uses basepoint 1.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::series::biseries::BiSeries;
use crate::series::rational::{factorial_rat, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jet {
    basepoint: Rational,
    coeffs: Vec<Rational>,
}

impl Jet {
    /// Jet at basepoint 1 from scaled Taylor coefficients `c_0..c_K`.
    pub fn from_taylor(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least c_0");
        Self {
            basepoint: Rational::one(),
            coeffs,
        }
    }

    /// Jet at basepoint 1 from raw derivatives `f(1), f'(1), ..., f^(K)(1)`.
    pub fn from_derivatives(derivatives: &[Rational]) -> Self {
        let coeffs = derivatives
            .iter()
            .enumerate()
            .map(|(k, d)| d / factorial_rat(k as u32))
            .collect();
        Self::from_taylor(coeffs)
    }

    /// The identity jet `t -> basepoint + (t - basepoint)` i.e. c_0 = 0, c_1 = 1
    /// shifted to report values relative to zero: used in tests.
    pub fn identity(order: u32) -> Self {
        let mut coeffs = vec![Rational::zero(); order as usize + 1];
        if order >= 1 {
            coeffs[1] = Rational::one();
        }
        Self::from_taylor(coeffs)
    }

    pub fn basepoint(&self) -> &Rational {
        &self.basepoint
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// Scaled Taylor coefficient `c_k = f^(k)/k!`; zero beyond the order.
    pub fn taylor_coeff(&self, k: u32) -> Rational {
        self.coeffs
            .get(k as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn taylor_coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `f^(k)(basepoint) = k! * c_k`.
    pub fn derivative(&self, k: u32) -> Rational {
        self.taylor_coeff(k) * factorial_rat(k)
    }

    /// Keep only `c_0..c_order`.
    pub fn truncated(&self, order: u32) -> Jet {
        let end = (order as usize + 1).min(self.coeffs.len());
        Self::from_taylor(self.coeffs[..end].to_vec())
    }
}

/// Compose a jet with a series whose constant term equals the basepoint:
/// `sum_k c_k (g - basepoint)^k`, exact inside the box.
///
/// The jet must have order at least twice the cutoff so every box monomial is
/// saturated.
pub fn jet_compose(jet: &Jet, g: &BiSeries) -> Result<BiSeries> {
    if g.constant_term() != *jet.basepoint() {
        return Err(Error::Domain(format!(
            "composition needs constant term {} but found {}",
            jet.basepoint(),
            g.constant_term()
        )));
    }
    if jet.order() < 2 * g.cutoff() {
        return Err(Error::JetOrderTooSmall {
            order: jet.order(),
            required: 2 * g.cutoff(),
        });
    }
    let shifted = g.sub(&BiSeries::constant(
        g.var_count(),
        g.cutoff(),
        jet.basepoint().clone(),
    ))?;
    let mut acc = BiSeries::constant(g.var_count(), g.cutoff(), jet.taylor_coeff(0));
    let mut power = BiSeries::one(g.var_count(), g.cutoff());
    for k in 1..=jet.order() {
        power = power.mul(&shifted)?;
        if power.is_zero() {
            break;
        }
        let c = jet.taylor_coeff(k);
        if !c.is_zero() {
            acc = acc.add(&power.scalar_mul(&c))?;
        }
    }
    Ok(acc)
}
