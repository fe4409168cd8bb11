//! Profile functions of the Ricci-flat catalog metrics.
//!
//! Each metric's potential is `f(N)` for an invariant series `N`, with `f`
//! pinned down by an implicit first-order ODE in `N`. This module extracts
//! exact Taylor jets of `f` at the basepoint `N = 1`, order by order, and
//! provides the residual oracle that certifies a jet against its ODE.
//!
//! Normalizations: `f(1) = 0` (the diastasis ignores additive constants) and
//! `f'(1) = +1` (the positive root of the degree-zero relation).

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::series::jet::Jet;
use crate::series::rational::{int, rat, Rational};
use crate::series::uniseries::UniSeries;

/// One term `poly(N) * (f')^p * (f'')^q` of an implicit profile ODE.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdeTerm {
    /// Polynomial coefficient in `N`, ascending powers.
    pub coeff_poly: Vec<Rational>,
    /// Exponent of `f'`.
    pub dfirst_pow: u32,
    /// Exponent of `f''`; zero or one.
    pub dsecond_pow: u32,
}

/// Implicit ODE `sum_terms poly_i(N) (f')^{p_i} (f'')^{q_i} = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitProfileOde {
    pub terms: Vec<OdeTerm>,
    pub rhs: Rational,
}

/// Multiply two dense polynomials (ascending coefficients).
fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca.clone() * cb.clone();
        }
    }
    out
}

/// `x^k` as a dense polynomial.
fn poly_power_of_x(k: u32) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); k as usize + 1];
    out[k as usize] = Rational::one();
    out
}

fn poly_eval_at_one(poly: &[Rational]) -> Rational {
    poly.iter().cloned().sum()
}

/// ODE of the Ricci-flat metric on the complexified projective family:
/// `(2N - 1) N^(n-1) (f')^(2n) + 2 (N - 1) N^n (f')^(2n-1) f'' = 1`.
pub fn lee2_ode(n: u32) -> Result<ImplicitProfileOde> {
    if n < 1 {
        return Err(Error::InvalidArgument("lee2 needs n >= 1".into()));
    }
    let first = OdeTerm {
        coeff_poly: poly_mul(&[int(-1), int(2)], &poly_power_of_x(n - 1)),
        dfirst_pow: 2 * n,
        dsecond_pow: 0,
    };
    let second = OdeTerm {
        coeff_poly: poly_mul(&[int(-2), int(2)], &poly_power_of_x(n)),
        dfirst_pow: 2 * n - 1,
        dsecond_pow: 1,
    };
    Ok(ImplicitProfileOde {
        terms: vec![first, second],
        rhs: Rational::one(),
    })
}

/// ODE of the Ricci-flat metric on the complexified quaternionic family:
/// `(2N - 1) N^(2n-2) (f')^(4n) + 2 (N - 1) N^(2n-1) (f')^(4n-1) f'' = 1`.
pub fn lee3_ode(n: u32) -> Result<ImplicitProfileOde> {
    if n < 1 {
        return Err(Error::InvalidArgument("lee3 needs n >= 1".into()));
    }
    let first = OdeTerm {
        coeff_poly: poly_mul(&[int(-1), int(2)], &poly_power_of_x(2 * n - 2)),
        dfirst_pow: 4 * n,
        dsecond_pow: 0,
    };
    let second = OdeTerm {
        coeff_poly: poly_mul(&[int(-2), int(2)], &poly_power_of_x(2 * n - 1)),
        dfirst_pow: 4 * n - 1,
        dsecond_pow: 1,
    };
    Ok(ImplicitProfileOde {
        terms: vec![first, second],
        rhs: Rational::one(),
    })
}

/// Evaluate the ODE left-hand side on scaled Taylor coefficients `c_0..c_K`,
/// as a series in `t = N - 1` truncated at `out_order`.
fn eval_lhs(ode: &ImplicitProfileOde, taylor: &[Rational], out_order: u32) -> UniSeries {
    // f'(1 + t) and f''(1 + t) as series in t
    let order = out_order;
    let mut fp = vec![Rational::zero(); order as usize + 1];
    let mut fpp = vec![Rational::zero(); order as usize + 1];
    for (k, c) in taylor.iter().enumerate() {
        if k >= 1 && k - 1 <= order as usize {
            fp[k - 1] = c.clone() * int(k as i64);
        }
        if k >= 2 && k - 2 <= order as usize {
            fpp[k - 2] = c.clone() * int((k * (k - 1)) as i64);
        }
    }
    let fp = UniSeries::from_coeffs(order, fp);
    let fpp = UniSeries::from_coeffs(order, fpp);

    let mut acc = UniSeries::zero(order);
    for term in &ode.terms {
        let mut value = UniSeries::polynomial_at_one_plus_t(&term.coeff_poly, order);
        if term.dfirst_pow > 0 {
            value = value.mul(&fp.pow(term.dfirst_pow));
        }
        if term.dsecond_pow > 0 {
            value = value.mul(&fpp.pow(term.dsecond_pow));
        }
        acc = acc.add(&value);
    }
    acc
}

/// Solve the jet of `f` at `N = 1` to the requested order.
///
/// `c_0 = 0` and `c_1 = 1` are fixed; each higher coefficient enters the ODE
/// linearly at its order and is recovered by one exact division.
pub fn solve_profile_jet(ode: &ImplicitProfileOde, order: u32) -> Result<Jet> {
    if order < 1 {
        return Err(Error::InvalidArgument(
            "jet order must be at least 1".into(),
        ));
    }
    for term in &ode.terms {
        if term.dsecond_pow > 1 {
            return Err(Error::InvalidArgument(
                "profile ODE must be at most linear in f''".into(),
            ));
        }
        if term.dsecond_pow == 1 && !poly_eval_at_one(&term.coeff_poly).is_zero() {
            return Err(Error::InvalidArgument(
                "f'' terms must carry a factor vanishing at N = 1".into(),
            ));
        }
    }
    let mut taylor = vec![Rational::zero(), Rational::one()];
    // degree-zero consistency with f'(1) = 1
    let at_base = eval_lhs(ode, &taylor, 0).coeff(0);
    if at_base != ode.rhs {
        return Err(Error::Domain(format!(
            "ODE gives {at_base} at the basepoint, expected {}",
            ode.rhs
        )));
    }
    for m in 1..order {
        // determine c_{m+1} from the t^m coefficient
        taylor.push(Rational::zero());
        let r0 = eval_lhs(ode, &taylor, m).coeff(m);
        *taylor.last_mut().unwrap() = Rational::one();
        let r1 = eval_lhs(ode, &taylor, m).coeff(m);
        let linear = r1 - r0.clone();
        if linear.is_zero() {
            return Err(Error::DegenerateJetRecursion { order: m + 1 });
        }
        *taylor.last_mut().unwrap() = -r0 / linear;
    }
    Ok(Jet::from_taylor(taylor))
}

/// Closed-form jet for the projective family: `f'(N) = N^(-1/2)`, so
/// `f^(k+1)(1) = prod_{i=0}^{k-1} (-1/2 - i)` with `f(1) = 0`.
pub fn mii_closed_jet(order: u32) -> Jet {
    let mut derivs = vec![Rational::zero(); order as usize + 1];
    if order >= 1 {
        derivs[1] = Rational::one();
        let mut acc = Rational::one();
        for k in 1..order {
            acc *= rat(-1, 2) - int(k as i64 - 1);
            derivs[k as usize + 1] = acc.clone();
        }
    }
    Jet::from_derivatives(&derivs)
}

/// Left-hand side of the ODE evaluated on a jet, as a series in `N - 1`
/// to order `jet.order() - 2`. Equals the constant `rhs` for a true solution.
pub fn ode_residual(ode: &ImplicitProfileOde, jet: &Jet) -> Result<UniSeries> {
    if jet.order() < 2 {
        return Err(Error::InvalidArgument(
            "residual needs a jet of order at least 2".into(),
        ));
    }
    Ok(eval_lhs(ode, jet.taylor_coeffs(), jet.order() - 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lee2_terms_match_small_n() {
        let ode = lee2_ode(1).unwrap();
        // (2N - 1) with p = 2, and 2(N - 1)N = -2N + 2N^2 with p = 1, q = 1
        assert_eq!(ode.terms[0].coeff_poly, vec![int(-1), int(2)]);
        assert_eq!(ode.terms[0].dfirst_pow, 2);
        assert_eq!(ode.terms[0].dsecond_pow, 0);
        assert_eq!(ode.terms[1].coeff_poly, vec![int(0), int(-2), int(2)]);
        assert_eq!(ode.terms[1].dfirst_pow, 1);
        assert_eq!(ode.terms[1].dsecond_pow, 1);

        let ode2 = lee2_ode(2).unwrap();
        // (2N - 1)N with p = 4; 2(N - 1)N^2 with p = 3
        assert_eq!(ode2.terms[0].coeff_poly, vec![int(0), int(-1), int(2)]);
        assert_eq!(ode2.terms[0].dfirst_pow, 4);
        assert_eq!(
            ode2.terms[1].coeff_poly,
            vec![int(0), int(0), int(-2), int(2)]
        );
        assert_eq!(ode2.terms[1].dfirst_pow, 3);
        assert!(lee2_ode(0).is_err());
    }

    #[test]
    fn lee3_exponents() {
        let ode = lee3_ode(1).unwrap();
        assert_eq!(ode.terms[0].dfirst_pow, 4);
        assert_eq!(ode.terms[1].dfirst_pow, 3);
        assert_eq!(ode.terms[1].dsecond_pow, 1);
        let ode2 = lee3_ode(2).unwrap();
        assert_eq!(ode2.terms[0].dfirst_pow, 8);
        assert_eq!(ode2.terms[1].dfirst_pow, 7);
        assert!(lee3_ode(0).is_err());
    }

    #[test]
    fn basepoint_evaluation_is_one() {
        for n in 1..=4 {
            for ode in [lee2_ode(n).unwrap(), lee3_ode(n).unwrap()] {
                let jet = solve_profile_jet(&ode, 2).unwrap();
                assert_eq!(ode_residual(&ode, &jet).unwrap().coeff(0), int(1));
            }
        }
    }

    #[test]
    fn lee2_jet_values() {
        // f'(1) = 1, f''(1) = -1/2, f'''(1) = 3/4, f''''(1) = -15/8,
        // independent of n.
        for n in 1..=5 {
            let jet = solve_profile_jet(&lee2_ode(n).unwrap(), 4).unwrap();
            assert_eq!(jet.derivative(0), int(0));
            assert_eq!(jet.derivative(1), int(1));
            assert_eq!(jet.derivative(2), rat(-1, 2));
            assert_eq!(jet.derivative(3), rat(3, 4));
            assert_eq!(jet.derivative(4), rat(-15, 8));
        }
    }

    #[test]
    fn lee3_jet_values_n1() {
        let jet = solve_profile_jet(&lee3_ode(1).unwrap(), 6).unwrap();
        assert_eq!(jet.derivative(2), rat(-1, 3));
        assert_eq!(jet.derivative(3), rat(1, 2));
        assert_eq!(jet.derivative(4), rat(-23, 18));
        assert_eq!(jet.derivative(5), rat(493, 108));
        assert_eq!(jet.derivative(6), rat(-2255, 108));
    }

    #[test]
    fn lee3_jet_values_n2() {
        let jet = solve_profile_jet(&lee3_ode(2).unwrap(), 4).unwrap();
        assert_eq!(jet.derivative(2), rat(-2, 5));
        assert_eq!(jet.derivative(3), rat(29, 50));
        assert_eq!(jet.derivative(4), rat(-36, 25));
    }

    #[test]
    fn closed_jet_matches_derivative_ladder() {
        // Oracle: differentiate N^(-1/2) symbolically four times:
        // f^(5)(1) = (-1/2)(-3/2)(-5/2)(-7/2) = 105/16.
        let jet = mii_closed_jet(5);
        assert_eq!(jet.derivative(1), int(1));
        assert_eq!(jet.derivative(2), rat(-1, 2));
        assert_eq!(jet.derivative(3), rat(3, 4));
        assert_eq!(jet.derivative(4), rat(-15, 8));
        assert_eq!(jet.derivative(5), rat(105, 16));
    }

    #[test]
    fn residual_of_solution_is_constant_one() {
        let ode = lee2_ode(1).unwrap();
        let jet = solve_profile_jet(&ode, 6).unwrap();
        let res = ode_residual(&ode, &jet).unwrap();
        assert_eq!(res.coeff(0), int(1));
        for k in 1..=4 {
            assert_eq!(res.coeff(k), int(0), "order {k}");
        }
    }

    #[test]
    fn residual_detects_wrong_jet() {
        // Oracle: differentiating the quaternionic ODE once at N = 1 gives
        // 2n + (4n + 2) f''(1) = 0; with f'' forced to zero the residual
        // picks up 2n at first order (n = 1 here).
        let ode = lee3_ode(1).unwrap();
        let jet = Jet::from_derivatives(&[int(0), int(1), int(0)]);
        let res = ode_residual(&ode, &jet).unwrap();
        assert_eq!(res.coeff(0), int(1));
        // jet order 2 truncates the residual at order 0; extend to see t^1
        let jet4 = Jet::from_derivatives(&[int(0), int(1), int(0), int(0), int(0)]);
        let res4 = ode_residual(&ode, &jet4).unwrap();
        assert_eq!(res4.coeff(1), int(2));
    }

    #[test]
    fn closed_form_satisfies_lee2_for_higher_n() {
        let ode = lee2_ode(2).unwrap();
        let res = ode_residual(&ode, &mii_closed_jet(6)).unwrap();
        assert_eq!(res.coeff(0), int(1));
        for k in 1..=4 {
            assert_eq!(res.coeff(k), int(0));
        }
    }

    #[test]
    fn degenerate_recursion_is_reported() {
        // LHS identically 1: every order has zero linear coefficient.
        let ode = ImplicitProfileOde {
            terms: vec![OdeTerm {
                coeff_poly: vec![int(1)],
                dfirst_pow: 0,
                dsecond_pow: 0,
            }],
            rhs: int(1),
        };
        let err = solve_profile_jet(&ode, 3).unwrap_err();
        assert_eq!(err, Error::DegenerateJetRecursion { order: 2 });
    }
}
