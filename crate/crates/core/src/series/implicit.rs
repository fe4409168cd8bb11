//! Degree-by-degree solver for implicit series systems.
//!
//! Solves `G_i(x_1, ..., x_k) = 0` for unknown series with prescribed
//! degree-zero values, assuming each total degree is fixed by an invertible
//! linear step given all lower degrees. The linear step is the constant-term
//! Jacobian of `G`, which is obtained exactly by probing with the corner
//! monomial `z_1^D zeta_1^D`: the corner is nilpotent against every monomial
//! of positive degree, so the response to the probe is purely linear.

use num::Zero;

use crate::error::{Error, Result};
use crate::series::biseries::BiSeries;
use crate::series::multi_index::MultiIndex;
use crate::series::rational::Rational;

/// Solve `system(x) = 0` to total degree `order` inside the box.
///
/// `system` maps candidate unknowns to residual series; `initial` gives the
/// degree-zero value of each unknown. The residuals must vanish at degree
/// zero for the initial values, and the constant-term Jacobian must be
/// invertible wherever a nonzero residual needs correcting.
pub fn implicit_series_solve<F>(
    system: F,
    var_count: usize,
    cutoff: u32,
    initial: &[Rational],
    order: u32,
) -> Result<Vec<BiSeries>>
where
    F: Fn(&[BiSeries]) -> Result<Vec<BiSeries>>,
{
    let k = initial.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    if var_count == 0 {
        return Err(Error::InvalidArgument(
            "implicit solve needs at least one variable pair".into(),
        ));
    }
    let mut unknowns: Vec<BiSeries> = initial
        .iter()
        .map(|c| BiSeries::constant(var_count, cutoff, c.clone()))
        .collect();

    let base = system(&unknowns)?;
    check_residual_shape(&base, k, var_count, cutoff)?;
    for r in &base {
        if !r.constant_term().is_zero() {
            return Err(Error::Domain(
                "initial values do not solve the system at degree zero".into(),
            ));
        }
    }
    if order == 0 {
        return Ok(unknowns);
    }
    if cutoff == 0 {
        return Err(Error::OutOfRange(
            "cannot solve to positive degree with cutoff zero".into(),
        ));
    }

    // Constant-term Jacobian via the nilpotent corner probe.
    let corner = (
        MultiIndex::single(var_count, 0, cutoff),
        MultiIndex::single(var_count, 0, cutoff),
    );
    let probe = BiSeries::monomial(
        var_count,
        cutoff,
        corner.0.clone(),
        corner.1.clone(),
        Rational::from_integer(1.into()),
    )?;
    let mut jacobian = vec![vec![Rational::zero(); k]; k];
    for j in 0..k {
        let mut probed = unknowns.clone();
        probed[j] = probed[j].add(&probe)?;
        let shifted = system(&probed)?;
        check_residual_shape(&shifted, k, var_count, cutoff)?;
        for i in 0..k {
            let response = shifted[i].coefficient(&corner.0, &corner.1)?
                - base[i].coefficient(&corner.0, &corner.1)?;
            jacobian[i][j] = response;
        }
    }
    let solver = LinearSolver::factor(jacobian);

    for degree in 1..=order {
        let residuals = system(&unknowns)?;
        check_residual_shape(&residuals, k, var_count, cutoff)?;
        // All box monomials of this total degree with a nonzero residual.
        let mut keys: Vec<(MultiIndex, MultiIndex)> = Vec::new();
        for r in &residuals {
            for (a, b, _) in r.iter() {
                if a.degree() + b.degree() == degree {
                    let key = (a.clone(), b.clone());
                    if !keys.contains(&key) {
                        keys.push(key);
                    }
                }
            }
        }
        if keys.is_empty() {
            continue;
        }
        let solver = solver
            .as_ref()
            .ok_or(Error::DegenerateReversion { degree })?;
        let mut corrections: Vec<Vec<(MultiIndex, MultiIndex, Rational)>> =
            vec![Vec::new(); k];
        for key in keys {
            let rhs: Vec<Rational> = residuals
                .iter()
                .map(|r| -r.coefficient(&key.0, &key.1).unwrap_or_else(|_| Rational::zero()))
                .collect();
            let delta = solver.solve(&rhs);
            for (j, d) in delta.into_iter().enumerate() {
                if !d.is_zero() {
                    corrections[j].push((key.0.clone(), key.1.clone(), d));
                }
            }
        }
        for (j, terms) in corrections.into_iter().enumerate() {
            if !terms.is_empty() {
                let update = BiSeries::from_terms(var_count, cutoff, terms)?;
                unknowns[j] = unknowns[j].add(&update)?;
            }
        }
    }
    Ok(unknowns)
}

fn check_residual_shape(
    residuals: &[BiSeries],
    k: usize,
    var_count: usize,
    cutoff: u32,
) -> Result<()> {
    if residuals.len() != k {
        return Err(Error::ShapeMismatch(format!(
            "system returned {} residuals for {k} unknowns",
            residuals.len()
        )));
    }
    for r in residuals {
        if r.var_count() != var_count || r.cutoff() != cutoff {
            return Err(Error::ShapeMismatch(
                "residual series shape differs from unknowns".into(),
            ));
        }
    }
    Ok(())
}

/// Exact LU factorization of a small rational matrix, or `None` if singular.
struct LinearSolver {
    lu: Vec<Vec<Rational>>,
    perm: Vec<usize>,
}

impl LinearSolver {
    fn factor(matrix: Vec<Vec<Rational>>) -> Option<Self> {
        let n = matrix.len();
        let mut lu = matrix;
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !lu[r][col].is_zero())?;
            lu.swap(col, pivot_row);
            perm.swap(col, pivot_row);
            let pivot = lu[col][col].clone();
            for r in col + 1..n {
                if lu[r][col].is_zero() {
                    continue;
                }
                let factor = lu[r][col].clone() / pivot.clone();
                let (top, bottom) = lu.split_at_mut(r);
                let pivot_row = &top[col];
                let row = &mut bottom[0];
                for (cell, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *cell -= factor.clone() * p.clone();
                }
                row[col] = factor;
            }
        }
        Some(Self { lu, perm })
    }

    #[allow(clippy::needless_range_loop)] // substitution reads and writes y
    fn solve(&self, rhs: &[Rational]) -> Vec<Rational> {
        let n = rhs.len();
        let mut y: Vec<Rational> = self.perm.iter().map(|&i| rhs[i].clone()).collect();
        for r in 1..n {
            for c in 0..r {
                let sub = self.lu[r][c].clone() * y[c].clone();
                y[r] -= sub;
            }
        }
        for r in (0..n).rev() {
            for c in r + 1..n {
                let sub = self.lu[r][c].clone() * y[c].clone();
                y[r] -= sub;
            }
            y[r] = y[r].clone() / self.lu[r][r].clone();
        }
        y
    }
}
