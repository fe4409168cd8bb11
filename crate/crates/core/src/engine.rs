//! Diastasis expansion, coefficient matrix, and the exact positivity test.
//!
//! The pipeline: pass a potential extension to its diastasis (delete every
//! purely holomorphic or antiholomorphic term), exponentiate, and read the
//! coefficients of `e^D0 - 1` off the graded monomial basis. The metric is
//! projectively induced only if that matrix is positive semidefinite at
//! every truncation degree, so a single negative witness settles the
//! question; no truncation degree can certify the converse.

use std::collections::HashMap;

use num::{Signed, Zero};

use crate::catalog::{slice_extension, MetricSpec};
use crate::error::{Error, Result};
use crate::series::biseries::BiSeries;
use crate::series::multi_index::MultiIndex;
use crate::series::rational::Rational;

/// Coefficient matrix of `e^D0 - 1` over the graded monomial basis.
///
/// Entries are exact rationals; symmetry holds because every catalog
/// potential is real with rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct CalabiMatrix {
    degree: u32,
    basis: Vec<MultiIndex>,
    entries: Vec<Vec<Rational>>,
}

impl CalabiMatrix {
    pub fn from_parts(
        degree: u32,
        basis: Vec<MultiIndex>,
        entries: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let n = basis.len();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(
                "matrix must be square over the basis".into(),
            ));
        }
        for j in 0..n {
            for k in j + 1..n {
                if entries[j][k] != entries[k][j] {
                    return Err(Error::ShapeMismatch(format!(
                        "matrix must be symmetric; entries ({j},{k}) and ({k},{j}) differ"
                    )));
                }
            }
        }
        Ok(Self {
            degree,
            basis,
            entries,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MultiIndex] {
        &self.basis
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row][col]
    }

    /// Leading block over monomials of degree at most `degree`.
    pub fn leading_block(&self, degree: u32) -> Result<Self> {
        if degree > self.degree {
            return Err(Error::OutOfRange(format!(
                "block degree {degree} exceeds matrix degree {}",
                self.degree
            )));
        }
        let keep = self
            .basis
            .iter()
            .take_while(|m| m.degree() <= degree)
            .count();
        Ok(Self {
            degree,
            basis: self.basis[..keep].to_vec(),
            entries: self.entries[..keep]
                .iter()
                .map(|r| r[..keep].to_vec())
                .collect(),
        })
    }
}

/// Outcome of the positivity test.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// A diagonal entry of the coefficient matrix is negative; `entry` is the
    /// matrix value at `monomial`, so the corresponding derivative of
    /// `e^potential` at the origin is `(monomial!)^2 * entry < 0`.
    ObstructedDiagonal {
        monomial: MultiIndex,
        entry: Rational,
    },
    /// Exact elimination found a negative principal minor (in basis order;
    /// a leading one when no zero pivot rows were skipped).
    ObstructedMinor {
        minor_size: usize,
        minor_value: Rational,
    },
    /// The matrix truncated at `degree` is positive semidefinite with the
    /// reported rank. This never certifies an immersion; it only means no
    /// obstruction is visible at this truncation.
    NoObstructionUpTo { degree: u32, rank: usize },
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        !matches!(self, Verdict::NoObstructionUpTo { .. })
    }
}

/// Diastasis at the origin: delete every term with a zero index on either
/// side. Additive constants and purely (anti)holomorphic gauge terms die here.
pub fn diastasis_at_origin(extension: &BiSeries) -> BiSeries {
    extension.drop_pure_terms()
}

/// All multi-indices of degree 0..=max_degree in graded order (degree first,
/// larger leading exponents earlier within a degree).
pub fn monomial_basis(var_count: usize, max_degree: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut current = vec![0u32; var_count];
    enumerate(&mut out, &mut current, 0, max_degree);
    out.sort();
    out
}

fn enumerate(out: &mut Vec<MultiIndex>, current: &mut Vec<u32>, var: usize, left: u32) {
    if var == current.len() {
        out.push(MultiIndex::new(current.clone()));
        return;
    }
    for e in 0..=left {
        current[var] = e;
        enumerate(out, current, var + 1, left - e);
    }
    current[var] = 0;
}

/// Assemble the coefficient matrix of `e^D0 - 1` at the given degree.
pub fn calabi_matrix(diastasis: &BiSeries, degree: u32) -> Result<CalabiMatrix> {
    if diastasis.cutoff() < degree {
        return Err(Error::OutOfRange(format!(
            "series cutoff {} is below requested degree {degree}",
            diastasis.cutoff()
        )));
    }
    let expanded = diastasis.exp()?;
    matrix_from_exponential(&expanded, degree)
}

/// Shared assembly path: `expanded` must be `e^D0` at cutoff >= degree.
fn matrix_from_exponential(expanded: &BiSeries, degree: u32) -> Result<CalabiMatrix> {
    if expanded.cutoff() < degree {
        return Err(Error::OutOfRange(format!(
            "series cutoff {} is below requested degree {degree}",
            expanded.cutoff()
        )));
    }
    let basis = monomial_basis(expanded.var_count(), degree);
    let position: HashMap<&MultiIndex, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = basis.len();
    let mut entries = vec![vec![Rational::zero(); n]; n];
    for (alpha, beta, coeff) in expanded.iter() {
        if alpha.is_zero() && beta.is_zero() {
            continue; // the -1 of e^D0 - 1
        }
        if let (Some(&j), Some(&k)) = (position.get(alpha), position.get(beta)) {
            entries[j][k] = coeff.clone();
        }
    }
    CalabiMatrix::from_parts(degree, basis, entries)
}

/// Exact semidefiniteness test by symmetric elimination in basis order.
///
/// Diagonal entries are scanned first; during elimination a zero pivot with a
/// zero row is skipped (rank deficiency is allowed), a zero pivot with a
/// nonzero residual or a negative pivot yields a negative principal minor.
pub fn psd_check(matrix: &CalabiMatrix) -> Verdict {
    let n = matrix.size();
    for j in 0..n {
        if matrix.entries[j][j].is_negative() {
            return Verdict::ObstructedDiagonal {
                monomial: matrix.basis[j].clone(),
                entry: matrix.entries[j][j].clone(),
            };
        }
    }
    let mut work = matrix.entries.clone();
    let mut rank = 0usize;
    let mut pivot_product = Rational::from_integer(1.into());
    for i in 0..n {
        let pivot = work[i][i].clone();
        if pivot.is_zero() {
            // zero pivot: the residual row must vanish for semidefiniteness
            if let Some(j) = (i + 1..n).find(|&j| !work[i][j].is_zero()) {
                // principal minor on the pivoted rows plus {i, j}:
                // det [[0, a], [a, d]] = -a^2 scaled by the earlier pivots
                let a = work[i][j].clone();
                return Verdict::ObstructedMinor {
                    minor_size: rank + 2,
                    minor_value: pivot_product * (-(a.clone() * a)),
                };
            }
            continue;
        }
        if pivot.is_negative() {
            return Verdict::ObstructedMinor {
                minor_size: rank + 1,
                minor_value: pivot_product * pivot,
            };
        }
        rank += 1;
        pivot_product *= pivot.clone();
        for r in i + 1..n {
            if work[r][i].is_zero() {
                continue;
            }
            let factor = work[r][i].clone() / pivot.clone();
            let (top, bottom) = work.split_at_mut(r);
            let pivot_row = &top[i];
            let row = &mut bottom[0];
            for c in i + 1..n {
                if !pivot_row[c].is_zero() {
                    let sub = factor.clone() * pivot_row[c].clone();
                    row[c] -= sub;
                }
            }
            row[i] = Rational::zero();
        }
    }
    Verdict::NoObstructionUpTo {
        degree: matrix.degree,
        rank,
    }
}

/// `d^(2k) e^potential / dz_var^k dzeta_var^k` at the origin, computed as
/// `(k!)^2` times the `z^k zeta^k` coefficient of `e^D0` restricted to the
/// single variable pair.
pub fn diagonal_derivative(spec: &MetricSpec, var: usize, k: u32) -> Result<Rational> {
    if k < 1 {
        return Err(Error::InvalidArgument("derivative order must be >= 1".into()));
    }
    let slice = slice_extension(spec, var, k)?;
    let expanded = diastasis_at_origin(&slice).exp()?;
    let index = MultiIndex::single(1, 0, k);
    let coeff = expanded.coefficient(&index, &index)?;
    let scale = Rational::from_integer(crate::series::rational::factorial(k));
    Ok(coeff * scale.clone() * scale)
}

/// Scan diagonal entries in basis order through degree `max_degree`; report
/// the first negative one, otherwise run the full elimination test.
pub fn first_obstruction(spec: &MetricSpec, max_degree: u32) -> Result<Verdict> {
    if max_degree < 1 {
        return Err(Error::InvalidArgument("degree must be >= 1".into()));
    }
    let ext = crate::catalog::extension(spec, max_degree)?;
    let expanded = diastasis_at_origin(&ext).exp()?;
    let basis = monomial_basis(spec.var_count(), max_degree);
    for monomial in basis.iter().skip(1) {
        let entry = expanded.coefficient(monomial, monomial)?;
        if entry.is_negative() {
            return Ok(Verdict::ObstructedDiagonal {
                monomial: monomial.clone(),
                entry,
            });
        }
    }
    Ok(psd_check(&matrix_from_exponential(&expanded, max_degree)?))
}
