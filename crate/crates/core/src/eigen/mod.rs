//! Two independent spectral engines: a cyclic Jacobi solver for symmetric
//! matrices and an exact characteristic-polynomial route with real-root
//! isolation. Agreement between them backs every spectral claim in the crate.

mod jacobi;
mod poly;

pub use jacobi::{sym_eigen, SymEigen, MAX_SWEEPS};
pub use poly::{
    exact_char_poly, principal_minor_sum, real_roots, ExactPolynomial, RealRoots, MAX_EXACT_DIM,
    ROOT_WIDTH,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::spectrum::Spectrum;

/// Closed interval on the real line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        x >= self.lo - tol && x <= self.hi + tol
    }
}

/// Row-wise Gershgorin intervals `[m_ii - R_i, m_ii + R_i]` with
/// `R_i = sum_{j != i} |m_ij|`. For real spectra these are the real
/// projections of the Gershgorin discs.
pub fn gershgorin_intervals(m: &DenseMatrix) -> Vec<Interval> {
    (0..m.dim())
        .map(|i| {
            let radius: f64 = (0..m.dim())
                .filter(|&j| j != i)
                .map(|j| m.get(i, j).abs())
                .sum();
            let c = m.get(i, i);
            Interval {
                lo: c - radius,
                hi: c + radius,
            }
        })
        .collect()
}

/// True if `x` lies in the union of the intervals (with slack `tol`).
pub fn in_union(intervals: &[Interval], x: f64, tol: f64) -> bool {
    intervals.iter().any(|iv| iv.contains(x, tol))
}

/// Spectrum of an integer matrix through the exact route: characteristic
/// polynomial, then isolated real roots. Fails if any root is non-real.
pub fn exact_spectrum(m: &DenseMatrix) -> Result<Spectrum> {
    let p = exact_char_poly(m)?;
    let r = real_roots(&p, ROOT_WIDTH)?;
    if r.non_real > 0 {
        return Err(Error::PolynomialDomain(format!(
            "{} non-real roots in characteristic polynomial {p}",
            r.non_real
        )));
    }
    let radius = r.roots.iter().fold(0.0f64, |m, x| m.max(x.0.abs()));
    Ok(Spectrum::from_grouped(
        r.roots,
        crate::spectrum::GROUPING_RELATIVE * radius.max(1.0),
    ))
}

/// Expands `prod (x - v_i)` in floating point, coefficients low to high.
pub fn poly_from_values(values: &[f64]) -> Vec<f64> {
    let mut p = vec![1.0];
    for &v in values {
        let mut next = vec![0.0; p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * v;
        }
        p = next;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gershgorin_examples() {
        let q = DenseMatrix::from_int_rows(&[vec![3, 3, 0], vec![1, 7, 2], vec![0, 3, 5]]);
        let iv = gershgorin_intervals(&q);
        let bounds: Vec<(f64, f64)> = iv.iter().map(|i| (i.lo, i.hi)).collect();
        assert_eq!(bounds, vec![(0.0, 6.0), (4.0, 10.0), (2.0, 8.0)]);
        for r in [9.0, 4.0, 2.0] {
            assert!(in_union(&iv, r, 0.0));
        }
        let id = gershgorin_intervals(&DenseMatrix::identity(3));
        assert!(id.iter().all(|i| i.lo == 1.0 && i.hi == 1.0));
    }

    #[test]
    fn exact_spectrum_of_petersen() {
        let g = crate::family::build(&crate::family::FamilySpec::Petersen).unwrap();
        let a = crate::spectral::matrix_of(&g, crate::spectral::MatrixKind::Adjacency);
        let exact = exact_spectrum(&a).unwrap();
        assert_eq!(exact.to_string(), "3 1^5 -2^4");
        let numeric = sym_eigen(&a, false).unwrap().spectrum;
        assert!(numeric.approx_eq(&exact, 1e-8));
    }

    #[test]
    fn poly_from_values_matches_exact() {
        let p = poly_from_values(&[9.0, 4.0, 2.0]);
        assert_eq!(p, vec![-72.0, 62.0, -15.0, 1.0]);
    }
}
