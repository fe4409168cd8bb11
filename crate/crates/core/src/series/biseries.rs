//! Truncated formal power series in paired variable blocks.
//!
//! A [`BiSeries`] stores coefficients `c[(alpha, beta)]` for monomials
//! `z^alpha * zeta^beta`, where `alpha` ranges over the holomorphic block and
//! `beta` over the antiholomorphic block, both of size `var_count`. Only the
//! box `|alpha| <= cutoff, |beta| <= cutoff` is kept.
//!
//! Invariants:
//! - every stored key lies inside the box;
//! - no stored coefficient is zero;
//! - every coefficient inside the box equals the coefficient of the exact
//!   infinite series (degrees only add, so the box is closed under ring ops).

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::series::multi_index::MultiIndex;
use crate::series::rational::Rational;

type Key = (MultiIndex, MultiIndex);
type TermRef<'a> = (&'a MultiIndex, &'a MultiIndex, &'a Rational);
type BidegreeBuckets<'a> = BTreeMap<(u32, u32), Vec<TermRef<'a>>>;

/// Sparse truncated series in `var_count` holomorphic/antiholomorphic pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries {
    var_count: usize,
    cutoff: u32,
    terms: BTreeMap<Key, Rational>,
}

impl BiSeries {
    pub fn zero(var_count: usize, cutoff: u32) -> Self {
        Self {
            var_count,
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var_count: usize, cutoff: u32) -> Self {
        Self::constant(var_count, cutoff, Rational::one())
    }

    pub fn constant(var_count: usize, cutoff: u32, value: Rational) -> Self {
        let mut s = Self::zero(var_count, cutoff);
        if !value.is_zero() {
            s.terms.insert(
                (MultiIndex::zero(var_count), MultiIndex::zero(var_count)),
                value,
            );
        }
        s
    }

    /// Single term `coeff * z^alpha * zeta^beta`.
    pub fn monomial(
        var_count: usize,
        cutoff: u32,
        alpha: MultiIndex,
        beta: MultiIndex,
        coeff: Rational,
    ) -> Result<Self> {
        if alpha.var_count() != var_count || beta.var_count() != var_count {
            return Err(Error::ShapeMismatch(format!(
                "monomial index length {}/{} does not match var_count {var_count}",
                alpha.var_count(),
                beta.var_count()
            )));
        }
        if alpha.degree() > cutoff || beta.degree() > cutoff {
            return Err(Error::OutOfRange(format!(
                "monomial degrees ({}, {}) exceed cutoff {cutoff}",
                alpha.degree(),
                beta.degree()
            )));
        }
        let mut s = Self::zero(var_count, cutoff);
        if !coeff.is_zero() {
            s.terms.insert((alpha, beta), coeff);
        }
        Ok(s)
    }

    /// Accumulate `(alpha, beta, coeff)` triples; keys outside the box error.
    pub fn from_terms<I>(var_count: usize, cutoff: u32, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, MultiIndex, Rational)>,
    {
        let mut s = Self::zero(var_count, cutoff);
        for (alpha, beta, coeff) in iter {
            if alpha.var_count() != var_count || beta.var_count() != var_count {
                return Err(Error::ShapeMismatch("index length mismatch".into()));
            }
            if alpha.degree() > cutoff || beta.degree() > cutoff {
                return Err(Error::OutOfRange("term outside truncation box".into()));
            }
            s.add_term(alpha, beta, coeff);
        }
        Ok(s)
    }

    fn add_term(&mut self, alpha: MultiIndex, beta: MultiIndex, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = (alpha, beta);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        let key = (
            MultiIndex::zero(self.var_count),
            MultiIndex::zero(self.var_count),
        );
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterate stored (nonzero) terms in deterministic order.
    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &MultiIndex, &Rational)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    /// Exact coefficient of `z^alpha * zeta^beta`; zero when absent.
    pub fn coefficient(&self, alpha: &MultiIndex, beta: &MultiIndex) -> Result<Rational> {
        if alpha.var_count() != self.var_count || beta.var_count() != self.var_count {
            return Err(Error::ShapeMismatch("index length mismatch".into()));
        }
        if alpha.degree() > self.cutoff || beta.degree() > self.cutoff {
            return Err(Error::OutOfRange(format!(
                "coefficient ({}, {}) outside box of cutoff {}",
                alpha.degree(),
                beta.degree(),
                self.cutoff
            )));
        }
        Ok(self
            .terms
            .get(&(alpha.clone(), beta.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.var_count != other.var_count || self.cutoff != other.cutoff {
            return Err(Error::ShapeMismatch(format!(
                "({} vars, cutoff {}) vs ({} vars, cutoff {})",
                self.var_count, self.cutoff, other.var_count, other.cutoff
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scalar_mul(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.var_count, self.cutoff);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= factor;
        }
        out
    }

    pub fn add_constant(&self, value: &Rational) -> Self {
        let mut out = self.clone();
        out.add_term(
            MultiIndex::zero(self.var_count),
            MultiIndex::zero(self.var_count),
            value.clone(),
        );
        out
    }

    /// Group terms by bidegree `(|alpha|, |beta|)` for pruned products.
    fn buckets(&self) -> BidegreeBuckets<'_> {
        let mut map: BidegreeBuckets<'_> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            map.entry((a.degree(), b.degree()))
                .or_default()
                .push((a, b, c));
        }
        map
    }

    /// Exact product inside the box; products leaving the box are dropped.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let d = self.cutoff;
        let lhs = self.buckets();
        let rhs = other.buckets();
        let mut acc: BTreeMap<Key, Rational> = BTreeMap::new();
        for (&(a1, b1), terms1) in &lhs {
            for (&(a2, b2), terms2) in &rhs {
                if a1 + a2 > d || b1 + b2 > d {
                    continue;
                }
                for (ma1, mb1, c1) in terms1 {
                    for (ma2, mb2, c2) in terms2 {
                        let key = (ma1.sum(ma2), mb1.sum(mb2));
                        let prod = (*c1).clone() * (*c2).clone();
                        match acc.get_mut(&key) {
                            Some(v) => *v += prod,
                            None => {
                                acc.insert(key, prod);
                            }
                        }
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(Self {
            var_count: self.var_count,
            cutoff: self.cutoff,
            terms: acc,
        })
    }

    /// Smallest total degree `|alpha| + |beta|` among stored terms.
    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|(a, b)| a.degree() + b.degree())
            .min()
    }

    /// Exponential of a series with zero constant term.
    ///
    /// Computed by the graded recurrence `d * E[m] = sum deg(m1) s[m1] E[m - m1]`
    /// over total degree, which agrees exactly with summing `s^k / k!`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::Domain(
                "exp requires a zero constant term".into(),
            ));
        }
        let d = self.cutoff;
        // generator terms bucketed by total degree
        let mut gen_by_deg: BTreeMap<u32, Vec<(&MultiIndex, &MultiIndex, &Rational)>> =
            BTreeMap::new();
        for ((a, b), c) in &self.terms {
            gen_by_deg
                .entry(a.degree() + b.degree())
                .or_default()
                .push((a, b, c));
        }
        let mut out_by_deg: Vec<Vec<(Key, Rational)>> = vec![Vec::new(); (2 * d + 1) as usize];
        out_by_deg[0].push((
            (MultiIndex::zero(self.var_count), MultiIndex::zero(self.var_count)),
            Rational::one(),
        ));
        for total in 1..=2 * d {
            let mut bucket: BTreeMap<Key, Rational> = BTreeMap::new();
            for (&gdeg, gterms) in gen_by_deg.range(1..=total) {
                let scale = Rational::new(gdeg.into(), total.into());
                for ((pa, pb), pc) in &out_by_deg[(total - gdeg) as usize] {
                    for (ga, gb, gc) in gterms {
                        let a = pa.sum(ga);
                        if a.degree() > d {
                            continue;
                        }
                        let b = pb.sum(gb);
                        if b.degree() > d {
                            continue;
                        }
                        let contrib = (*gc).clone() * pc.clone() * scale.clone();
                        match bucket.get_mut(&(a.clone(), b.clone())) {
                            Some(v) => *v += contrib,
                            None => {
                                bucket.insert((a, b), contrib);
                            }
                        }
                    }
                }
            }
            out_by_deg[total as usize] =
                bucket.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        let mut terms = BTreeMap::new();
        for level in out_by_deg {
            terms.extend(level);
        }
        Ok(Self {
            var_count: self.var_count,
            cutoff: self.cutoff,
            terms,
        })
    }

    /// Multiplicative inverse of a series with constant term one.
    ///
    /// Graded recurrence `T[m] = -sum u[m1] T[m - m1]` with `u = s - 1`.
    pub fn reciprocal(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::Domain(
                "reciprocal requires constant term one".into(),
            ));
        }
        let d = self.cutoff;
        let mut gen_by_deg: BTreeMap<u32, Vec<(&MultiIndex, &MultiIndex, &Rational)>> =
            BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let total = a.degree() + b.degree();
            if total > 0 {
                gen_by_deg.entry(total).or_default().push((a, b, c));
            }
        }
        let mut out_by_deg: Vec<Vec<(Key, Rational)>> = vec![Vec::new(); (2 * d + 1) as usize];
        out_by_deg[0].push((
            (MultiIndex::zero(self.var_count), MultiIndex::zero(self.var_count)),
            Rational::one(),
        ));
        for total in 1..=2 * d {
            let mut bucket: BTreeMap<Key, Rational> = BTreeMap::new();
            for (&gdeg, gterms) in gen_by_deg.range(1..=total) {
                for ((pa, pb), pc) in &out_by_deg[(total - gdeg) as usize] {
                    for (ga, gb, gc) in gterms {
                        let a = pa.sum(ga);
                        if a.degree() > d {
                            continue;
                        }
                        let b = pb.sum(gb);
                        if b.degree() > d {
                            continue;
                        }
                        let contrib = -((*gc).clone() * pc.clone());
                        match bucket.get_mut(&(a.clone(), b.clone())) {
                            Some(v) => *v += contrib,
                            None => {
                                bucket.insert((a, b), contrib);
                            }
                        }
                    }
                }
            }
            out_by_deg[total as usize] =
                bucket.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        let mut terms = BTreeMap::new();
        for level in out_by_deg {
            terms.extend(level);
        }
        Ok(Self {
            var_count: self.var_count,
            cutoff: self.cutoff,
            terms,
        })
    }

    /// Logarithm of a series with constant term one (Mercator sum).
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::Domain("log requires constant term one".into()));
        }
        let u = self.sub(&Self::one(self.var_count, self.cutoff))?;
        let mut acc = Self::zero(self.var_count, self.cutoff);
        let mut power = Self::one(self.var_count, self.cutoff);
        let mut k: u32 = 0;
        loop {
            power = power.mul(&u)?;
            k += 1;
            if power.is_zero() || k > 2 * self.cutoff {
                break;
            }
            let sign = if k % 2 == 1 {
                Rational::one()
            } else {
                -Rational::one()
            };
            acc = acc.add(&power.scalar_mul(&(sign / Rational::from_integer(k.into()))))?;
        }
        Ok(acc)
    }

    /// Restrict to a smaller box.
    pub fn truncate(&self, cutoff: u32) -> Result<Self> {
        if cutoff > self.cutoff {
            return Err(Error::OutOfRange(format!(
                "cannot grow cutoff {} to {cutoff}",
                self.cutoff
            )));
        }
        let terms = self
            .terms
            .iter()
            .filter(|((a, b), _)| a.degree() <= cutoff && b.degree() <= cutoff)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        Ok(Self {
            var_count: self.var_count,
            cutoff,
            terms,
        })
    }

    /// Set every variable except `var` to zero and renumber to one pair.
    pub fn restrict_to_pair(&self, var: usize) -> Result<Self> {
        if var >= self.var_count {
            return Err(Error::InvalidArgument(format!(
                "variable {var} out of range for {} pairs",
                self.var_count
            )));
        }
        let mut out = Self::zero(1, self.cutoff);
        for ((a, b), c) in &self.terms {
            if a.supported_only_on(var) && b.supported_only_on(var) {
                out.terms.insert(
                    (
                        MultiIndex::single(1, 0, a.exp(var)),
                        MultiIndex::single(1, 0, b.exp(var)),
                    ),
                    c.clone(),
                );
            }
        }
        Ok(out)
    }

    /// Swap the holomorphic and antiholomorphic sides.
    pub fn swap_sides(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
            .collect();
        Self {
            var_count: self.var_count,
            cutoff: self.cutoff,
            terms,
        }
    }

    /// Drop every term whose holomorphic or antiholomorphic index is zero.
    /// This is the coefficient-level content of passing to the diastasis.
    pub fn drop_pure_terms(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|((a, b), _)| !a.is_zero() && !b.is_zero())
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        Self {
            var_count: self.var_count,
            cutoff: self.cutoff,
            terms,
        }
    }

    /// True when `c[(alpha, beta)] == c[(beta, alpha)]` throughout.
    pub fn is_reality_symmetric(&self) -> bool {
        self.terms.iter().all(|((a, b), c)| {
            self.terms
                .get(&(b.clone(), a.clone()))
                .map(|c2| c2 == c)
                .unwrap_or(false)
        })
    }

}
