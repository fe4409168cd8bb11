//! Analytic extensions of the catalog Kähler potentials.
//!
//! Each metric is described in a fixed affine chart; the potential's analytic
//! extension promotes conjugated coordinates to an independent variable
//! block. Variable layout (holomorphic side, mirrored on the other side):
//!
//! - flat / Fubini-Study on dimension d: `z1..zd`;
//! - projective family with parameter n: `z1..zn, w1..wn` (2n pairs);
//! - quaternionic family with parameter n: `z1..z2n, w1..w2n` (4n pairs);
//! - the Taub-NUT family: `z1, z2`.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::profile::{lee2_ode, lee3_ode, solve_profile_jet};
use crate::series::biseries::BiSeries;
use crate::series::implicit::implicit_series_solve;
use crate::series::jet::jet_compose;
use crate::series::multi_index::MultiIndex;
use crate::series::rational::Rational;

/// Catalog descriptor for a metric whose potential the crate can expand.
#[derive(Clone, Debug, PartialEq)]
pub enum MetricSpec {
    Flat { dim: usize },
    FubiniStudy { dim: usize },
    LeeII { n: u32 },
    LeeIII { n: u32 },
    TaubNut { m: Rational },
}

impl MetricSpec {
    /// Number of holomorphic/antiholomorphic variable pairs.
    pub fn var_count(&self) -> usize {
        match self {
            MetricSpec::Flat { dim } | MetricSpec::FubiniStudy { dim } => *dim,
            MetricSpec::LeeII { n } => 2 * *n as usize,
            MetricSpec::LeeIII { n } => 4 * *n as usize,
            MetricSpec::TaubNut { .. } => 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            MetricSpec::Flat { dim } | MetricSpec::FubiniStudy { dim } => {
                if *dim < 1 {
                    return Err(Error::InvalidArgument("dimension must be >= 1".into()));
                }
            }
            MetricSpec::LeeII { n } | MetricSpec::LeeIII { n } => {
                if *n < 1 {
                    return Err(Error::InvalidArgument("n must be >= 1".into()));
                }
            }
            MetricSpec::TaubNut { m } => {
                if m.is_negative() {
                    return Err(Error::InvalidArgument(
                        "Taub-NUT parameter must be >= 0".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Display name of holomorphic variable `var` (0-based).
    pub fn var_label(&self, var: usize) -> String {
        let split = match self {
            MetricSpec::LeeII { n } => *n as usize,
            MetricSpec::LeeIII { n } => 2 * *n as usize,
            _ => self.var_count(),
        };
        if var < split {
            format!("z{}", var + 1)
        } else {
            format!("w{}", var - split + 1)
        }
    }

    /// All holomorphic variable labels in layout order.
    pub fn var_labels(&self) -> Vec<String> {
        (0..self.var_count()).map(|v| self.var_label(v)).collect()
    }
}

/// Sum of `z_j zeta_j` over a block of variable indices.
fn paired_sum(var_count: usize, cutoff: u32, vars: impl Iterator<Item = usize>) -> Result<BiSeries> {
    let terms = vars.map(|v| {
        (
            MultiIndex::unit(var_count, v),
            MultiIndex::unit(var_count, v),
            Rational::one(),
        )
    });
    BiSeries::from_terms(var_count, cutoff, terms)
}

/// Invariant of the projective family:
/// `N = (1 + sum z_j zeta_j)(1 + sum w_j omega_j) / ((1 + sum z_j w_j)(1 + sum zeta_j omega_j))`.
pub fn n_series_ii(n: u32, cutoff: u32) -> Result<BiSeries> {
    if n < 1 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let n = n as usize;
    let v = 2 * n;
    let one = BiSeries::one(v, cutoff);
    let num = one
        .add(&paired_sum(v, cutoff, 0..n)?)?
        .mul(&one.add(&paired_sum(v, cutoff, n..2 * n)?)?)?;
    // purely holomorphic sum z_j w_j (degree 2, truncated away at cutoff 1)
    // and its antiholomorphic mirror
    let den_hol = BiSeries::from_terms(
        v,
        cutoff,
        (0..n)
            .map(|j| {
                (
                    MultiIndex::unit(v, j).sum(&MultiIndex::unit(v, n + j)),
                    MultiIndex::zero(v),
                    Rational::one(),
                )
            })
            .filter(|(a, b, _)| a.degree() <= cutoff && b.degree() <= cutoff),
    )?;
    let den_anti = den_hol.swap_sides();
    num.mul(&one.add(&den_hol)?.reciprocal()?)?
        .mul(&one.add(&den_anti)?.reciprocal()?)
}

/// Invariant of the quaternionic family:
/// numerator `(1 + |z|^2)(1 + |w|^2) - (sum z_j omega_j)(sum zeta_k w_k)`,
/// denominator `(S - 1)(S~ - 1)` with `S = sum (z_{2j} w_{2j-1} - z_{2j-1} w_{2j})`.
pub fn n_series_iii(n: u32, cutoff: u32) -> Result<BiSeries> {
    if n < 1 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let n = n as usize;
    let v = 4 * n;
    let two_n = 2 * n;
    let one = BiSeries::one(v, cutoff);
    let z_sum = paired_sum(v, cutoff, 0..two_n)?;
    let w_sum = paired_sum(v, cutoff, two_n..2 * two_n)?;
    // sum_j z_j omega_j (hol z against anti w) and sum_k zeta_k w_k
    let cross_a = BiSeries::from_terms(
        v,
        cutoff,
        (0..two_n).map(|j| {
            (
                MultiIndex::unit(v, j),
                MultiIndex::unit(v, two_n + j),
                Rational::one(),
            )
        }),
    )?;
    let cross_b = BiSeries::from_terms(
        v,
        cutoff,
        (0..two_n).map(|k| {
            (
                MultiIndex::unit(v, two_n + k),
                MultiIndex::unit(v, k),
                Rational::one(),
            )
        }),
    )?;
    let num = one
        .add(&z_sum)?
        .mul(&one.add(&w_sum)?)?
        .sub(&cross_a.mul(&cross_b)?)?;
    // S = sum_j (z_{2j} w_{2j-1} - z_{2j-1} w_{2j}), purely holomorphic;
    // the denominator (S - 1)(S~ - 1) is (1 - S)(1 - S~).
    let mut s_terms = Vec::with_capacity(two_n);
    for j in 0..n {
        let (lo, hi) = (2 * j, 2 * j + 1);
        s_terms.push((
            MultiIndex::unit(v, hi).sum(&MultiIndex::unit(v, two_n + lo)),
            MultiIndex::zero(v),
            Rational::one(),
        ));
        s_terms.push((
            MultiIndex::unit(v, lo).sum(&MultiIndex::unit(v, two_n + hi)),
            MultiIndex::zero(v),
            -Rational::one(),
        ));
    }
    let s_hol = BiSeries::from_terms(
        v,
        cutoff,
        s_terms
            .into_iter()
            .filter(|(a, b, _)| a.degree() <= cutoff && b.degree() <= cutoff),
    )?;
    let s_anti = s_hol.swap_sides();
    num.mul(&one.sub(&s_hol)?.reciprocal()?)?
        .mul(&one.sub(&s_anti)?.reciprocal()?)
}

/// Potential extension of the Taub-NUT family with exact parameter `m`.
///
/// With `s = z1 zeta1`, `t = z2 zeta2`, the squared implicit chart relations
/// read `s = x exp(2m(x + y))`, `t = y exp(2m(y - x))`; the potential is
/// `x + y + m(x^2 + y^2)`.
pub fn taubnut_extension(m: &Rational, cutoff: u32) -> Result<BiSeries> {
    if m.is_negative() {
        return Err(Error::InvalidArgument(
            "Taub-NUT parameter must be >= 0".into(),
        ));
    }
    let v = 2;
    let s = BiSeries::monomial(
        v,
        cutoff,
        MultiIndex::unit(v, 0),
        MultiIndex::unit(v, 0),
        Rational::one(),
    )?;
    let t = BiSeries::monomial(
        v,
        cutoff,
        MultiIndex::unit(v, 1),
        MultiIndex::unit(v, 1),
        Rational::one(),
    )?;
    let two_m = m.clone() * Rational::from_integer(2.into());
    let solution = implicit_series_solve(
        |x| {
            let grow = x[0].add(&x[1])?.scalar_mul(&two_m).exp()?;
            let shrink = x[1].sub(&x[0])?.scalar_mul(&two_m).exp()?;
            Ok(vec![
                x[0].mul(&grow)?.sub(&s)?,
                x[1].mul(&shrink)?.sub(&t)?,
            ])
        },
        v,
        cutoff,
        &[Rational::zero(), Rational::zero()],
        2 * cutoff,
    )?;
    let (x, y) = (&solution[0], &solution[1]);
    let squares = x.mul(x)?.add(&y.mul(y)?)?;
    x.add(y)?.add(&squares.scalar_mul(m))
}

/// Analytic extension of the catalog potential at the chart origin.
pub fn extension(spec: &MetricSpec, cutoff: u32) -> Result<BiSeries> {
    spec.validate()?;
    match spec {
        MetricSpec::Flat { dim } => paired_sum(*dim, cutoff, 0..*dim),
        MetricSpec::FubiniStudy { dim } => BiSeries::one(*dim, cutoff)
            .add(&paired_sum(*dim, cutoff, 0..*dim)?)?
            .log(),
        MetricSpec::LeeII { n } => {
            let jet = solve_profile_jet(&lee2_ode(*n)?, 2 * cutoff)?;
            jet_compose(&jet, &n_series_ii(*n, cutoff)?)
        }
        MetricSpec::LeeIII { n } => {
            let jet = solve_profile_jet(&lee3_ode(*n)?, 2 * cutoff)?;
            jet_compose(&jet, &n_series_iii(*n, cutoff)?)
        }
        MetricSpec::TaubNut { m } => taubnut_extension(m, cutoff),
    }
}

/// Extension restricted to the single variable pair `var` (others set to 0),
/// as a one-pair series.
///
/// For both Lee families every single-variable slice of the invariant is
/// exactly `1 + z zeta`, so the slice is the profile jet composed with it;
/// the equality with restricting the full extension is covered by tests.
pub fn slice_extension(spec: &MetricSpec, var: usize, cutoff: u32) -> Result<BiSeries> {
    spec.validate()?;
    if var >= spec.var_count() {
        return Err(Error::InvalidArgument(format!(
            "variable {var} out of range for {} pairs",
            spec.var_count()
        )));
    }
    let pair = BiSeries::monomial(
        1,
        cutoff,
        MultiIndex::unit(1, 0),
        MultiIndex::unit(1, 0),
        Rational::one(),
    )?;
    let one_plus = BiSeries::one(1, cutoff).add(&pair)?;
    match spec {
        MetricSpec::Flat { .. } => Ok(pair),
        MetricSpec::FubiniStudy { .. } => one_plus.log(),
        MetricSpec::LeeII { n } => {
            let jet = solve_profile_jet(&lee2_ode(*n)?, 2 * cutoff)?;
            jet_compose(&jet, &one_plus)
        }
        MetricSpec::LeeIII { n } => {
            let jet = solve_profile_jet(&lee3_ode(*n)?, 2 * cutoff)?;
            jet_compose(&jet, &one_plus)
        }
        MetricSpec::TaubNut { m } => taubnut_extension(m, cutoff)?.restrict_to_pair(var),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::{int, rat};

    fn mi(exps: &[u32]) -> MultiIndex {
        MultiIndex::new(exps.to_vec())
    }

    #[test]
    fn n_ii_constant_and_slice() {
        let s = n_series_ii(1, 3).unwrap();
        assert_eq!(s.constant_term(), int(1));
        // slice w = omega = 0 for n = 1: exactly 1 + z1 zeta1
        let sliced = s.restrict_to_pair(0).unwrap();
        assert_eq!(sliced.coefficient(&mi(&[0]), &mi(&[0])).unwrap(), int(1));
        assert_eq!(sliced.coefficient(&mi(&[1]), &mi(&[1])).unwrap(), int(1));
        assert_eq!(sliced.term_count(), 2);
        // purely holomorphic z1 w1 coefficient: geometric expansion gives -1
        assert_eq!(
            s.coefficient(&mi(&[1, 1]), &mi(&[0, 0])).unwrap(),
            int(-1)
        );
    }

    #[test]
    fn n_ii_reality_and_symmetry() {
        let s = n_series_ii(1, 3).unwrap();
        assert!(s.is_reality_symmetric());
        let s2 = n_series_ii(2, 2).unwrap();
        assert!(s2.is_reality_symmetric());
    }

    #[test]
    fn n_iii_constant_slice_and_cross_terms() {
        let s = n_series_iii(1, 2).unwrap();
        assert_eq!(s.constant_term(), int(1));
        let sliced = s.restrict_to_pair(0).unwrap();
        assert_eq!(sliced.term_count(), 2);
        assert_eq!(sliced.coefficient(&mi(&[1]), &mi(&[1])).unwrap(), int(1));
        // Hand expansion: at j = k the cross sum cancels the matching term of
        // (1 + sum z zeta)(1 + sum w omega), so z1 w1 zeta1 omega1 gets
        // 1 - 1 = 0. At j = 1, k = 2 two sources contribute -1 each: the
        // cross sum, and (-z1 w2)(zeta2 omega1) from expanding the
        // denominator reciprocals to first order.
        assert_eq!(
            s.coefficient(&mi(&[1, 0, 1, 0]), &mi(&[1, 0, 1, 0])).unwrap(),
            int(0)
        );
        assert_eq!(
            s.coefficient(&mi(&[1, 0, 0, 1]), &mi(&[0, 1, 1, 0])).unwrap(),
            int(-2)
        );
        assert!(s.is_reality_symmetric());
    }

    #[test]
    fn flat_extension_is_diagonal() {
        let e = extension(&MetricSpec::Flat { dim: 2 }, 2).unwrap();
        assert_eq!(e.coefficient(&mi(&[1, 0]), &mi(&[1, 0])).unwrap(), int(1));
        assert_eq!(e.coefficient(&mi(&[1, 0]), &mi(&[0, 1])).unwrap(), int(0));
        assert_eq!(e.term_count(), 2);
        assert_eq!(e.constant_term(), int(0));
    }

    #[test]
    fn fubini_study_mercator_coefficient() {
        let e = extension(&MetricSpec::FubiniStudy { dim: 1 }, 3).unwrap();
        assert_eq!(e.coefficient(&mi(&[2]), &mi(&[2])).unwrap(), rat(-1, 2));
        assert_eq!(e.constant_term(), int(0));
    }

    #[test]
    fn lee2_slice_second_coefficient() {
        // composing the profile jet with 1 + z1 zeta1 puts f''(1)/2 = -1/4
        // on the second diagonal monomial
        let slice = slice_extension(&MetricSpec::LeeII { n: 1 }, 0, 2).unwrap();
        assert_eq!(slice.coefficient(&mi(&[2]), &mi(&[2])).unwrap(), rat(-1, 4));
    }

    #[test]
    fn lee2_extension_first_coefficient() {
        // coefficient of z1 zeta1 is f'(1) = 1
        let e = extension(&MetricSpec::LeeII { n: 1 }, 2).unwrap();
        assert_eq!(e.coefficient(&mi(&[1, 0]), &mi(&[1, 0])).unwrap(), int(1));
        assert_eq!(e.constant_term(), int(0));
        assert!(e.is_reality_symmetric());
    }

    #[test]
    fn lee_extension_swap_symmetry() {
        // swapping the z-block with the w-block leaves the projective
        // invariant unchanged
        let e = extension(&MetricSpec::LeeII { n: 1 }, 3).unwrap();
        let swapped = BiSeries::from_terms(
            e.var_count(),
            e.cutoff(),
            e.iter().map(|(a, b, c)| {
                let flip = |m: &MultiIndex| {
                    MultiIndex::new(vec![m.exp(1), m.exp(0)])
                };
                (flip(a), flip(b), c.clone())
            }),
        )
        .unwrap();
        assert_eq!(e, swapped);
    }

    #[test]
    fn slice_matches_restriction_lee2() {
        let d = 3;
        let spec = MetricSpec::LeeII { n: 1 };
        let full = extension(&spec, d).unwrap();
        for var in 0..2 {
            assert_eq!(
                full.restrict_to_pair(var).unwrap(),
                slice_extension(&spec, var, d).unwrap()
            );
        }
    }

    #[test]
    fn slice_matches_restriction_lee3() {
        let d = 3;
        let spec = MetricSpec::LeeIII { n: 1 };
        let full = extension(&spec, d).unwrap();
        for var in 0..4 {
            assert_eq!(
                full.restrict_to_pair(var).unwrap(),
                slice_extension(&spec, var, d).unwrap()
            );
        }
    }

    #[test]
    fn taubnut_zero_parameter_is_flat() {
        let e = taubnut_extension(&int(0), 3).unwrap();
        let flat = extension(&MetricSpec::Flat { dim: 2 }, 3).unwrap();
        assert_eq!(e, flat);
    }

    #[test]
    fn taubnut_second_order_oracle() {
        // Oracle (second-order reversion by hand): substituting the
        // first-order solution back once gives
        //   x = s - 2m s(s + t), y = t - 2m t(t - s),
        // hence the potential is s + t - m(s^2 + t^2) + O(degree 3 in s, t).
        let m = int(1);
        let e = taubnut_extension(&m, 2).unwrap();
        assert_eq!(e.coefficient(&mi(&[1, 0]), &mi(&[1, 0])).unwrap(), int(1));
        assert_eq!(e.coefficient(&mi(&[0, 1]), &mi(&[0, 1])).unwrap(), int(1));
        assert_eq!(e.coefficient(&mi(&[2, 0]), &mi(&[2, 0])).unwrap(), int(-1));
        assert_eq!(e.coefficient(&mi(&[0, 2]), &mi(&[0, 2])).unwrap(), int(-1));
        assert_eq!(e.coefficient(&mi(&[1, 1]), &mi(&[1, 1])).unwrap(), int(0));
        let m_q = rat(1, 4);
        let e2 = taubnut_extension(&m_q, 2).unwrap();
        assert_eq!(
            e2.coefficient(&mi(&[2, 0]), &mi(&[2, 0])).unwrap(),
            rat(-1, 4)
        );
        assert!(taubnut_extension(&rat(-1, 2), 2).is_err());
    }

    #[test]
    fn catalog_constant_terms_vanish() {
        let specs = [
            MetricSpec::Flat { dim: 2 },
            MetricSpec::FubiniStudy { dim: 2 },
            MetricSpec::LeeII { n: 1 },
            MetricSpec::LeeIII { n: 1 },
            MetricSpec::TaubNut { m: rat(1, 2) },
        ];
        for spec in specs {
            let e = extension(&spec, 2).unwrap();
            assert_eq!(e.constant_term(), int(0), "{spec:?}");
        }
    }

    #[test]
    fn labels_follow_block_layout() {
        let spec = MetricSpec::LeeII { n: 2 };
        assert_eq!(spec.var_labels(), vec!["z1", "z2", "w1", "w2"]);
        let spec3 = MetricSpec::LeeIII { n: 1 };
        assert_eq!(spec3.var_labels(), vec!["z1", "z2", "w1", "w2"]);
        let flat = MetricSpec::Flat { dim: 3 };
        assert_eq!(flat.var_labels(), vec!["z1", "z2", "z3"]);
    }

    #[test]
    fn validation_errors() {
        assert!(MetricSpec::Flat { dim: 0 }.validate().is_err());
        assert!(MetricSpec::LeeII { n: 0 }.validate().is_err());
        assert!(MetricSpec::TaubNut { m: rat(-1, 1) }.validate().is_err());
        assert!(slice_extension(&MetricSpec::Flat { dim: 1 }, 3, 2).is_err());
    }
}
