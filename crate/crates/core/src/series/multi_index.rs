//! Exponent vectors for monomials in one variable block.
//!
//! Ordering is graded: lower total degree first, and inside a degree the
//! exponent vectors are compared lexicographically with the larger leading
//! exponent sorting earlier. For two variables this yields
//! `1, z1, z2, z1^2, z1*z2, z2^2, ...`.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::One;

use crate::error::{Error, Result};
use crate::series::rational::factorial;

/// Multi-index `(a_1, ..., a_V)` with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex {
    exps: Vec<u32>,
    degree: u32,
}

impl MultiIndex {
    /// The zero index (constant monomial) on `var_count` variables.
    pub fn zero(var_count: usize) -> Self {
        Self {
            exps: vec![0; var_count],
            degree: 0,
        }
    }

    /// Unit index `e_var`.
    pub fn unit(var_count: usize, var: usize) -> Self {
        Self::single(var_count, var, 1)
    }

    /// `power * e_var`.
    pub fn single(var_count: usize, var: usize, power: u32) -> Self {
        assert!(var < var_count, "variable index out of range");
        let mut exps = vec![0; var_count];
        exps[var] = power;
        Self {
            exps,
            degree: power,
        }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Self { exps, degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn var_count(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn is_zero(&self) -> bool {
        self.degree == 0
    }

    /// Component-wise sum (monomial product).
    pub fn sum(&self, other: &Self) -> Self {
        debug_assert_eq!(self.var_count(), other.var_count());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// `prod_i a_i!`, the normalization between coefficients and derivatives.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &e in &self.exps {
            acc *= factorial(e);
        }
        acc
    }

    /// True when every nonzero exponent sits on `var`.
    pub fn supported_only_on(&self, var: usize) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| i == var || e == 0)
    }

    /// Project onto a single variable, yielding a one-variable index.
    pub fn project_to(&self, var: usize) -> Result<MultiIndex> {
        if !self.supported_only_on(var) {
            return Err(Error::InvalidArgument(format!(
                "index {:?} not supported on variable {var} alone",
                self.exps
            )));
        }
        Ok(MultiIndex::single(1, 0, self.exps[var]))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            // larger leading exponent earlier within a degree
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
