//! Floating-point cross-checks of the exact pipeline.
//!
//! Everything here is advisory: potentials are re-evaluated numerically at
//! sample points (extended precision, so that high-order central differences
//! survive the cancellation), series coefficients are compared against
//! finite differences, and positivity verdicts are compared against the
//! smallest eigenvalue of the float-converted matrix. A disagreement fails
//! a test; it never overrides the exact arithmetic.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num::complex::Complex64;
use num::{ToPrimitive, Zero};

use crate::catalog::MetricSpec;
use crate::engine::{psd_check, CalabiMatrix, Verdict};
use crate::error::{Error, Result};
use crate::profile::{lee2_ode, lee3_ode, solve_profile_jet};
use crate::series::multi_index::MultiIndex;
use crate::series::rational::Rational;

/// Relative tolerance for finite-difference versus exact coefficients.
pub const FD_TOLERANCE: f64 = 1e-6;
/// Dead band around zero when comparing eigenvalue signs with verdicts.
pub const EIGEN_DEAD_BAND: f64 = 1e-10;

/// Working precision in bits. Central differences of order up to eight at
/// step 1e-3 cancel roughly 25 decimal digits; 320 bits (~96 digits) leaves
/// a wide margin.
const PRECISION: usize = 320;
/// Taylor order used for numeric profile evaluation; inside the sampling
/// radius the tail is far below 1e-12.
const NUMERIC_JET_ORDER: u32 = 40;
/// Newton residual target for the implicit Taub-NUT chart.
const NEWTON_RESIDUAL: f64 = 1e-20;

/// One finite-difference comparison.
#[derive(Clone, Debug)]
pub struct FdEntry {
    pub exact: f64,
    pub estimate: f64,
    pub relative_error: f64,
}

/// Aggregate oracle outcome.
#[derive(Clone, Debug)]
pub struct NumericReport {
    pub checked_coefficients: usize,
    pub max_relative_error: f64,
    pub eigen_min: f64,
    pub consistent: bool,
}

// ---------------------------------------------------------------------------
// extended-precision scalar context

struct Ctx {
    p: usize,
    rm: RoundingMode,
    cc: Consts,
}

impl Ctx {
    fn new() -> Result<Self> {
        Ok(Self {
            p: PRECISION,
            rm: RoundingMode::ToEven,
            cc: Consts::new().map_err(|e| Error::Numeric(format!("constants cache: {e:?}")))?,
        })
    }

    fn real(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }

    fn rational(&mut self, r: &Rational) -> BigFloat {
        let numer = BigFloat::parse(&r.numer().to_string(), Radix::Dec, self.p, self.rm, &mut self.cc);
        let denom = BigFloat::parse(&r.denom().to_string(), Radix::Dec, self.p, self.rm, &mut self.cc);
        numer.div(&denom, self.p, self.rm)
    }

    fn to_f64(x: &BigFloat) -> f64 {
        // decimal round trip; 17 significant digits preserve any f64
        format!("{x}").parse::<f64>().unwrap_or(f64::NAN)
    }

    fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, self.rm)
    }

    fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, self.rm)
    }

    fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, self.rm)
    }

    fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, self.rm)
    }

    fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, self.rm, &mut self.cc)
    }

    fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.p, self.rm, &mut self.cc)
    }

    fn zero(&self) -> BigFloat {
        self.real(0.0)
    }

    fn one(&self) -> BigFloat {
        self.real(1.0)
    }

    fn abs_below(x: &BigFloat, bound: f64) -> bool {
        Ctx::to_f64(x).abs() < bound
    }
}

/// Minimal complex number over extended floats.
#[derive(Clone)]
struct Cx {
    re: BigFloat,
    im: BigFloat,
}

impl Cx {
    fn real(ctx: &Ctx, x: f64) -> Self {
        Self {
            re: ctx.real(x),
            im: ctx.zero(),
        }
    }

    fn from_c64(ctx: &Ctx, z: Complex64) -> Self {
        Self {
            re: ctx.real(z.re),
            im: ctx.real(z.im),
        }
    }

    fn conj(&self, _ctx: &Ctx) -> Self {
        Self {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    fn add(&self, ctx: &Ctx, other: &Self) -> Self {
        Self {
            re: ctx.add(&self.re, &other.re),
            im: ctx.add(&self.im, &other.im),
        }
    }

    fn sub(&self, ctx: &Ctx, other: &Self) -> Self {
        Self {
            re: ctx.sub(&self.re, &other.re),
            im: ctx.sub(&self.im, &other.im),
        }
    }

    fn mul(&self, ctx: &Ctx, other: &Self) -> Self {
        Self {
            re: ctx.sub(
                &ctx.mul(&self.re, &other.re),
                &ctx.mul(&self.im, &other.im),
            ),
            im: ctx.add(
                &ctx.mul(&self.re, &other.im),
                &ctx.mul(&self.im, &other.re),
            ),
        }
    }

}

// ---------------------------------------------------------------------------
// pointwise potential evaluation

/// Family-specific data resolved once per evaluation batch.
struct Evaluator {
    spec: MetricSpec,
    ctx: Ctx,
    /// Scaled Taylor coefficients of the profile at 1, as floats.
    jet: Vec<BigFloat>,
    m_param: BigFloat,
}

impl Evaluator {
    fn new(spec: &MetricSpec) -> Result<Self> {
        spec.validate()?;
        let mut ctx = Ctx::new()?;
        let jet = match spec {
            MetricSpec::LeeII { n } => solve_profile_jet(&lee2_ode(*n)?, NUMERIC_JET_ORDER)?,
            MetricSpec::LeeIII { n } => solve_profile_jet(&lee3_ode(*n)?, NUMERIC_JET_ORDER)?,
            _ => crate::series::jet::Jet::identity(1),
        };
        let jet_bf = jet
            .taylor_coeffs()
            .iter()
            .map(|c| ctx.rational(c))
            .collect();
        let m_param = match spec {
            MetricSpec::TaubNut { m } => ctx.rational(m),
            _ => ctx.zero(),
        };
        Ok(Self {
            spec: spec.clone(),
            ctx,
            jet: jet_bf,
            m_param,
        })
    }

    /// Value of the analytic extension at independent points `(z, zeta)`.
    fn extension_value(&mut self, z: &[Cx], zeta: &[Cx]) -> Result<BigFloat> {
        match self.spec.clone() {
            MetricSpec::Flat { dim } => {
                let mut acc = self.ctx.zero();
                for j in 0..dim {
                    acc = self
                        .ctx
                        .add(&acc, &z[j].mul(&self.ctx, &zeta[j]).re);
                }
                Ok(acc)
            }
            MetricSpec::FubiniStudy { dim } => {
                let mut acc = self.ctx.one();
                for j in 0..dim {
                    acc = self
                        .ctx
                        .add(&acc, &z[j].mul(&self.ctx, &zeta[j]).re);
                }
                Ok(self.ctx.ln(&acc))
            }
            MetricSpec::LeeII { n } => {
                let n = n as usize;
                let inv = self.projective_invariant(z, zeta, n)?;
                self.profile_at(&inv)
            }
            MetricSpec::LeeIII { n } => {
                let n = n as usize;
                let inv = self.quaternionic_invariant(z, zeta, n)?;
                self.profile_at(&inv)
            }
            MetricSpec::TaubNut { .. } => {
                let s = z[0].mul(&self.ctx, &zeta[0]).re.clone();
                let t = z[1].mul(&self.ctx, &zeta[1]).re.clone();
                self.taubnut_value(&s, &t)
            }
        }
    }

    /// `N` of the projective family at `(z, zeta)`; variables: z-block then
    /// w-block of length n each.
    fn projective_invariant(&mut self, z: &[Cx], zeta: &[Cx], n: usize) -> Result<BigFloat> {
        let ctx = &self.ctx;
        let mut zz = ctx.one();
        let mut ww = ctx.one();
        for j in 0..n {
            zz = ctx.add(&zz, &z[j].mul(ctx, &zeta[j]).re);
            ww = ctx.add(&ww, &z[n + j].mul(ctx, &zeta[n + j]).re);
        }
        let mut zw_hol = Cx::real(ctx, 1.0);
        let mut zw_anti = Cx::real(ctx, 1.0);
        for j in 0..n {
            zw_hol = zw_hol.add(ctx, &z[j].mul(ctx, &z[n + j]));
            zw_anti = zw_anti.add(ctx, &zeta[j].mul(ctx, &zeta[n + j]));
        }
        let den = zw_hol.mul(ctx, &zw_anti);
        if !Ctx::abs_below(&den.im, 1e-40) {
            return Err(Error::Numeric(
                "projective invariant picked up an imaginary part".into(),
            ));
        }
        Ok(ctx.div(&ctx.mul(&zz, &ww), &den.re))
    }

    /// `N` of the quaternionic family; variables: z-block then w-block of
    /// length 2n each.
    fn quaternionic_invariant(&mut self, z: &[Cx], zeta: &[Cx], n: usize) -> Result<BigFloat> {
        let ctx = &self.ctx;
        let two_n = 2 * n;
        let mut zz = ctx.one();
        let mut ww = ctx.one();
        for j in 0..two_n {
            zz = ctx.add(&zz, &z[j].mul(ctx, &zeta[j]).re);
            ww = ctx.add(&ww, &z[two_n + j].mul(ctx, &zeta[two_n + j]).re);
        }
        let mut cross_a = Cx::real(ctx, 0.0);
        let mut cross_b = Cx::real(ctx, 0.0);
        for j in 0..two_n {
            cross_a = cross_a.add(ctx, &z[j].mul(ctx, &zeta[two_n + j]));
            cross_b = cross_b.add(ctx, &zeta[j].mul(ctx, &z[two_n + j]));
        }
        let num = ctx.sub(&ctx.mul(&zz, &ww), &cross_a.mul(ctx, &cross_b).re);
        let mut s_hol = Cx::real(ctx, 0.0);
        let mut s_anti = Cx::real(ctx, 0.0);
        for j in 0..n {
            let (lo, hi) = (2 * j, 2 * j + 1);
            s_hol = s_hol
                .add(ctx, &z[hi].mul(ctx, &z[two_n + lo]))
                .sub(ctx, &z[lo].mul(ctx, &z[two_n + hi]));
            s_anti = s_anti
                .add(ctx, &zeta[hi].mul(ctx, &zeta[two_n + lo]))
                .sub(ctx, &zeta[lo].mul(ctx, &zeta[two_n + hi]));
        }
        let one = Cx::real(ctx, 1.0);
        let den = one.sub(ctx, &s_hol).mul(ctx, &one.sub(ctx, &s_anti));
        if !Ctx::abs_below(&den.im, 1e-40) || !Ctx::abs_below(&cross_a.mul(ctx, &cross_b).im, 1e-40)
        {
            return Err(Error::Numeric(
                "quaternionic invariant picked up an imaginary part".into(),
            ));
        }
        Ok(ctx.div(&num, &den.re))
    }

    /// `f(N) = sum c_k (N - 1)^k` using the precomputed float jet.
    fn profile_at(&mut self, invariant: &BigFloat) -> Result<BigFloat> {
        let u = self.ctx.sub(invariant, &self.ctx.one());
        let mut acc = self.ctx.zero();
        let mut power = self.ctx.one();
        for k in 1..self.jet.len() {
            power = self.ctx.mul(&power, &u);
            acc = self.ctx.add(&acc, &self.ctx.mul(&self.jet[k], &power));
        }
        Ok(acc)
    }

    /// Invert the implicit chart by Newton iteration and evaluate the
    /// potential `x + y + m(x^2 + y^2)`.
    ///
    /// Newton runs on the exponents `u = 2m(x + y)`, `v = 2m(y - x)`, where
    /// `x = s e^-u` and `y = t e^-v`: with `A = 2ms e^-u`, `B = 2mt e^-v`
    /// the Jacobian determinant is `1 + A + B + 2AB >= 1`, so the step never
    /// degenerates for nonnegative parameters.
    fn taubnut_value(&mut self, s: &BigFloat, t: &BigFloat) -> Result<BigFloat> {
        let two_m = self.ctx.add(&self.m_param, &self.m_param);
        let mut u = self.ctx.zero();
        let mut v = self.ctx.zero();
        let mut converged = false;
        for _ in 0..256 {
            let ctx = &mut self.ctx;
            let x = {
                let e = ctx.exp(&u.neg());
                ctx.mul(s, &e)
            };
            let y = {
                let e = ctx.exp(&v.neg());
                ctx.mul(t, &e)
            };
            let a = ctx.mul(&two_m, &x);
            let b = ctx.mul(&two_m, &y);
            // F = u - (a + b), G = v - (b - a)
            let f = ctx.sub(&u, &ctx.add(&a, &b));
            let g = ctx.sub(&v, &ctx.sub(&b, &a));
            if Ctx::abs_below(&f, NEWTON_RESIDUAL) && Ctx::abs_below(&g, NEWTON_RESIDUAL) {
                converged = true;
                break;
            }
            // J = [[1 + a, b], [-a, 1 + b]], det = 1 + a + b + 2ab
            let det = {
                let linear = ctx.add(&a, &b);
                let cross = ctx.mul(&ctx.add(&a, &a), &b);
                ctx.add(&ctx.one(), &ctx.add(&linear, &cross))
            };
            let du = ctx.div(
                &ctx.sub(
                    &ctx.mul(&f, &ctx.add(&ctx.one(), &b)),
                    &ctx.mul(&g, &b),
                ),
                &det,
            );
            let dv = ctx.div(
                &ctx.add(
                    &ctx.mul(&g, &ctx.add(&ctx.one(), &a)),
                    &ctx.mul(&f, &a),
                ),
                &det,
            );
            u = ctx.sub(&u, &du);
            v = ctx.sub(&v, &dv);
        }
        if !converged {
            return Err(Error::Numeric("Newton iteration did not converge".into()));
        }
        let ctx = &mut self.ctx;
        let x = {
            let e = ctx.exp(&u.neg());
            ctx.mul(s, &e)
        };
        let y = {
            let e = ctx.exp(&v.neg());
            ctx.mul(t, &e)
        };
        // confirm on the original chart relations
        let r1 = {
            let e = ctx.exp(&ctx.mul(&two_m, &ctx.add(&x, &y)));
            ctx.sub(&ctx.mul(&x, &e), s)
        };
        let r2 = {
            let e = ctx.exp(&ctx.mul(&two_m, &ctx.sub(&y, &x)));
            ctx.sub(&ctx.mul(&y, &e), t)
        };
        if !Ctx::abs_below(&r1, NEWTON_RESIDUAL) || !Ctx::abs_below(&r2, NEWTON_RESIDUAL) {
            return Err(Error::Numeric(
                "chart inversion residual did not reach target".into(),
            ));
        }
        let squares = ctx.add(&ctx.mul(&x, &x), &ctx.mul(&y, &y));
        Ok(ctx.add(&ctx.add(&x, &y), &ctx.mul(&self.m_param, &squares)))
    }
}

/// Evaluate the potential at a complex point (conjugates paired off), to
/// better than 1e-12 relative. The point must satisfy `sum |z_j|^2 <= 1/16`.
pub fn numeric_potential(spec: &MetricSpec, point: &[Complex64]) -> Result<f64> {
    if point.len() != spec.var_count() {
        return Err(Error::InvalidArgument(format!(
            "expected {} coordinates, got {}",
            spec.var_count(),
            point.len()
        )));
    }
    let norm_sq: f64 = point.iter().map(|z| z.norm_sqr()).sum();
    if norm_sq > 1.0 / 16.0 {
        return Err(Error::Domain(
            "point outside the sampling radius 1/4".into(),
        ));
    }
    let mut eval = Evaluator::new(spec)?;
    let z: Vec<Cx> = point.iter().map(|w| Cx::from_c64(&eval.ctx, *w)).collect();
    let zeta: Vec<Cx> = z.iter().map(|w| w.conj(&eval.ctx)).collect();
    let value = eval.extension_value(&z, &zeta)?;
    Ok(Ctx::to_f64(&value))
}

/// Compare the exact series coefficient at `(alpha, beta)` against a
/// Richardson-extrapolated central finite difference with base step `h`.
pub fn finite_difference_check(
    spec: &MetricSpec,
    alpha: &MultiIndex,
    beta: &MultiIndex,
    h: f64,
) -> Result<FdEntry> {
    let v = spec.var_count();
    if alpha.var_count() != v || beta.var_count() != v {
        return Err(Error::ShapeMismatch("index length mismatch".into()));
    }
    if alpha.degree() > 4 || beta.degree() > 4 {
        return Err(Error::InvalidArgument(
            "finite differences are limited to orders <= 4 per side".into(),
        ));
    }
    if h <= 0.0 || h > 0.01 {
        return Err(Error::InvalidArgument("step must lie in (0, 0.01]".into()));
    }
    let cutoff = alpha.degree().max(beta.degree()).max(1);
    let exact = crate::catalog::extension(spec, cutoff)?.coefficient(alpha, beta)?;

    let mut eval = Evaluator::new(spec)?;
    let coarse = fd_derivative(&mut eval, alpha, beta, h)?;
    let fine = fd_derivative(&mut eval, alpha, beta, h / 2.0)?;
    // central differences have an even error expansion: one Richardson step
    let ctx = &eval.ctx;
    let four = ctx.real(4.0);
    let three = ctx.real(3.0);
    let derivative = ctx.div(&ctx.sub(&ctx.mul(&four, &fine), &coarse), &three);
    let scale = Rational::from_integer(alpha.factorial() * beta.factorial());
    let estimate = {
        let s = eval.ctx.rational(&scale);
        Ctx::to_f64(&eval.ctx.div(&derivative, &s))
    };
    let exact_f = exact.to_f64().unwrap_or(f64::NAN);
    let relative_error = if exact.is_zero() {
        estimate.abs()
    } else {
        (estimate - exact_f).abs() / exact_f.abs()
    };
    Ok(FdEntry {
        exact: exact_f,
        estimate,
        relative_error,
    })
}

/// Tensored central difference approximating the mixed derivative
/// `d^alpha_z d^beta_zeta` of the extension at the origin.
fn fd_derivative(
    eval: &mut Evaluator,
    alpha: &MultiIndex,
    beta: &MultiIndex,
    h: f64,
) -> Result<BigFloat> {
    let v = alpha.var_count();
    // (side, var, order): side 0 differentiates z_var, side 1 zeta_var
    let mut dims: Vec<(usize, usize, u32)> = Vec::new();
    for i in 0..v {
        if alpha.exp(i) > 0 {
            dims.push((0, i, alpha.exp(i)));
        }
    }
    for i in 0..v {
        if beta.exp(i) > 0 {
            dims.push((1, i, beta.exp(i)));
        }
    }
    let total_order: u32 = alpha.degree() + beta.degree();
    let mut acc = eval.ctx.zero();
    let mut counters = vec![0u32; dims.len()];
    loop {
        // weight and offsets for this grid node
        let mut weight = 1i64;
        let mut z = vec![Cx::real(&eval.ctx, 0.0); v];
        let mut zeta = vec![Cx::real(&eval.ctx, 0.0); v];
        for (d, &(side, var, order)) in dims.iter().enumerate() {
            let i = counters[d];
            weight *= signed_binomial(order, i);
            let offset = (order as f64 / 2.0 - i as f64) * h;
            match side {
                0 => z[var] = Cx::real(&eval.ctx, offset),
                _ => zeta[var] = Cx::real(&eval.ctx, offset),
            }
        }
        let value = eval.extension_value(&z, &zeta)?;
        let w = eval.ctx.real(weight as f64);
        acc = eval.ctx.add(&acc, &eval.ctx.mul(&w, &value));
        // next node
        let mut d = 0;
        loop {
            if d == dims.len() {
                let step = eval.ctx.real(h);
                let denom = step.powi(total_order as usize, eval.ctx.p, eval.ctx.rm);
                return Ok(eval.ctx.div(&acc, &denom));
            }
            counters[d] += 1;
            if counters[d] <= dims[d].2 {
                break;
            }
            counters[d] = 0;
            d += 1;
        }
    }
}

fn signed_binomial(n: u32, k: u32) -> i64 {
    let mut c: i64 = 1;
    for i in 0..k {
        c = c * (n - i) as i64 / (i + 1) as i64;
    }
    if k.is_multiple_of(2) {
        c
    } else {
        -c
    }
}

/// Smallest eigenvalue of the float-converted matrix (cyclic Jacobi), with
/// its sign compared against the exact verdict. Meant for desk-scale
/// matrices (up to a few hundred rows, matching the exporter's basis cap).
#[allow(clippy::needless_range_loop)] // rotations touch rows and columns at once
pub fn numeric_psd(matrix: &CalabiMatrix) -> NumericReport {
    let n = matrix.size();
    let mut a: Vec<Vec<f64>> = matrix
        .entries()
        .iter()
        .map(|row| row.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect())
        .collect();
    let scale: f64 = a
        .iter()
        .flatten()
        .fold(0.0f64, |m, &x| m.max(x.abs()))
        .max(1.0);
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off.sqrt() < 1e-14 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let eigen_min = (0..n).map(|i| a[i][i]).fold(f64::INFINITY, f64::min);
    let eigen_min = if n == 0 { 0.0 } else { eigen_min };
    let consistent = match psd_check(matrix) {
        Verdict::NoObstructionUpTo { .. } => eigen_min > -EIGEN_DEAD_BAND,
        _ => eigen_min < EIGEN_DEAD_BAND,
    };
    NumericReport {
        checked_coefficients: 0,
        max_relative_error: 0.0,
        eigen_min,
        consistent,
    }
}

/// Run finite-difference checks (orders <= 2 on the first couple of
/// variables) plus the eigenvalue comparison, aggregated into one report.
pub fn oracle_report(spec: &MetricSpec, matrix: &CalabiMatrix) -> Result<NumericReport> {
    let v = spec.var_count().min(2);
    let probes = crate::engine::monomial_basis(v, 2);
    let widen = |m: &MultiIndex| {
        let mut exps = vec![0u32; spec.var_count()];
        exps[..v].copy_from_slice(&m.exps()[..v]);
        MultiIndex::new(exps)
    };
    let mut checked = 0usize;
    let mut max_rel = 0.0f64;
    for a in &probes {
        for b in &probes {
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let entry = finite_difference_check(spec, &widen(a), &widen(b), 1e-3)?;
            checked += 1;
            if entry.exact != 0.0 {
                max_rel = max_rel.max(entry.relative_error);
            }
        }
    }
    let eigen = numeric_psd(matrix);
    Ok(NumericReport {
        checked_coefficients: checked,
        max_relative_error: max_rel,
        eigen_min: eigen.eigen_min,
        consistent: eigen.consistent && max_rel <= FD_TOLERANCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::rat;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn flat_point_value() {
        let v = numeric_potential(
            &MetricSpec::Flat { dim: 2 },
            &[Complex64::new(0.1, 0.0), Complex64::new(0.0, 0.2)],
        )
        .unwrap();
        assert!((v - 0.05).abs() < 1e-14);
    }

    #[test]
    fn fubini_study_point_value() {
        let v = numeric_potential(&MetricSpec::FubiniStudy { dim: 1 }, &[c(0.1)]).unwrap();
        assert!((v - 1.01f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn lee2_point_value_matches_closed_form() {
        // f' = N^(-1/2) integrates to 2(sqrt(N) - 1); at z1 = 0.1, w = 0 the
        // invariant is 1.01. The jet evaluation must agree with the closed
        // form to full reported precision.
        let v = numeric_potential(
            &MetricSpec::LeeII { n: 1 },
            &[c(0.1), c(0.0)],
        )
        .unwrap();
        let closed = 2.0 * (1.01f64.sqrt() - 1.0);
        assert!((v - closed).abs() < 1e-13, "{v} vs {closed}");
    }

    #[test]
    fn radius_guard() {
        assert!(matches!(
            numeric_potential(&MetricSpec::Flat { dim: 1 }, &[c(0.6)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn taubnut_reduces_to_flat_at_zero() {
        let p = [c(0.05), c(0.1)];
        let v0 = numeric_potential(&MetricSpec::TaubNut { m: rat(0, 1) }, &p).unwrap();
        assert!((v0 - 0.0125).abs() < 1e-13);
        // against the truncated exact series for m = 1
        let v1 = numeric_potential(&MetricSpec::TaubNut { m: rat(1, 1) }, &p).unwrap();
        assert!(v1.is_finite() && (v1 - 0.0125).abs() < 0.01);
    }

    #[test]
    fn fd_flat_first_coefficient() {
        let a = MultiIndex::new(vec![1]);
        let entry =
            finite_difference_check(&MetricSpec::Flat { dim: 1 }, &a, &a, 1e-3).unwrap();
        assert!(entry.relative_error < 1e-8, "{entry:?}");
        assert!((entry.exact - 1.0).abs() < 1e-15);
    }

    #[test]
    fn fd_lee2_first_derivative() {
        let a = MultiIndex::new(vec![1, 0]);
        let entry =
            finite_difference_check(&MetricSpec::LeeII { n: 1 }, &a, &a, 1e-3).unwrap();
        // f'(1) = 1
        assert!((entry.exact - 1.0).abs() < 1e-15);
        assert!(entry.relative_error < 1e-6, "{entry:?}");
    }

    #[test]
    fn fd_taubnut_second_order() {
        let a = MultiIndex::new(vec![2, 0]);
        let entry =
            finite_difference_check(&MetricSpec::TaubNut { m: rat(1, 1) }, &a, &a, 1e-3)
                .unwrap();
        // the extension coefficient at z1^2 zeta1^2 is -m = -1
        assert!((entry.exact + 1.0).abs() < 1e-15);
        assert!(entry.relative_error < 1e-4, "{entry:?}");
    }

    #[test]
    fn taubnut_newton_handles_stiff_parameters() {
        let spec = MetricSpec::TaubNut { m: rat(100, 1) };
        let v = numeric_potential(&spec, &[c(0.2), c(0.1)]).unwrap();
        assert!(v.is_finite() && v > 0.0);
        // first-order coefficients are 1 for every m; the finite difference
        // drives the Newton inversion at tiny sample points
        let a = MultiIndex::new(vec![1, 0]);
        let entry = finite_difference_check(&spec, &a, &a, 1e-3).unwrap();
        assert!((entry.exact - 1.0).abs() < 1e-15);
        assert!(entry.relative_error < 1e-6, "{entry:?}");
    }

    #[test]
    fn fd_rejects_high_orders() {
        let a = MultiIndex::new(vec![5]);
        assert!(finite_difference_check(&MetricSpec::Flat { dim: 1 }, &a, &a, 1e-3).is_err());
    }

    #[test]
    fn jacobi_identity_matrix() {
        use crate::series::rational::int;
        let basis = crate::engine::monomial_basis(1, 4);
        let n = basis.len(); // 5x5
        let entries = (0..n)
            .map(|j| (0..n).map(|k| if j == k { int(1) } else { int(0) }).collect())
            .collect();
        let id = CalabiMatrix::from_parts(4, basis, entries).unwrap();
        let report = numeric_psd(&id);
        assert!((report.eigen_min - 1.0).abs() < 1e-12);
        // identity has no zero row, so the exact verdict is "no obstruction"
        assert!(report.consistent);
    }
}
