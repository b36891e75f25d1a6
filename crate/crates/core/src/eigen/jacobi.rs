use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::spectrum::Spectrum;

/// Sweep cap for the cyclic Jacobi iteration. Quadratic convergence makes
/// anything past ~15 sweeps a sign of trouble.
pub const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition of a real symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymEigen {
    pub spectrum: Spectrum,
    /// Eigenvalues with repetition, descending.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors aligned with `values`, when requested.
    pub vectors: Option<Vec<Vec<f64>>>,
    pub sweeps: usize,
}

/// Cyclic (row-wise) Jacobi eigenvalue iteration.
///
/// Stops once the off-diagonal Frobenius norm drops below `1e-12 * ||M||_F`
/// (or `1e-14` when `M` is zero). Eigenvalues are grouped at
/// `1e-8 * max(1, spectral radius)`.
pub fn sym_eigen(m: &DenseMatrix, want_vectors: bool) -> Result<SymEigen> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::Structure("sym_eigen needs dimension >= 1".into()));
    }
    let asym = m.max_asymmetry();
    if asym != 0.0 {
        return Err(Error::NotSymmetric { asymmetry: asym });
    }

    let mut a = m.clone();
    let mut v = want_vectors.then(|| DenseMatrix::identity(n));
    let norm = m.frobenius_norm();
    let threshold = if norm == 0.0 { 1e-14 } else { 1e-12 * norm };

    let off_norm = |a: &DenseMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a.get(i, j) * a.get(i, j);
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off < threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                // theta == 0 gives signum 1: 45 degree rotation
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, p, q, c, s);
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v.get(k, p);
                        let vkq = v.get(k, q);
                        v.set(k, p, c * vkp - s * vkq);
                        v.set(k, q, s * vkp + c * vkq);
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(j, j).total_cmp(&a.get(i, i)));
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i)).collect();
    let vectors = v.map(|v| {
        order
            .iter()
            .map(|&col| (0..n).map(|row| v.get(row, col)).collect())
            .collect()
    });
    Ok(SymEigen {
        spectrum: Spectrum::from_values(&values),
        values,
        vectors,
        sweeps,
    })
}

/// Applies the off-diagonal part of the rotation in the (p, q) plane to rows
/// and columns other than p and q.
fn rotate(a: &mut DenseMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.dim();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a.set(k, p, new_kp);
        a.set(p, k, new_kp);
        a.set(k, q, new_kq);
        a.set(q, k, new_kq);
    }
}
