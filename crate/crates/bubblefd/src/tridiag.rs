//! Thomas algorithm for tridiagonal systems.

use crate::error::{Error, Result};

/// Solve the tridiagonal system with sub-diagonal `lower` (first entry
/// unused), main diagonal `diag` and super-diagonal `upper` (last entry
/// unused). Returns an error on a vanishing pivot.
pub fn thomas_solve(lower: &[f64], diag: &[f64], upper: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = rhs.len();
    assert!(n > 0, "empty system");
    assert_eq!(lower.len(), n);
    assert_eq!(diag.len(), n);
    assert_eq!(upper.len(), n);

    let mut c_prime = vec![0.0; n];
    let mut d_prime = vec![0.0; n];

    if diag[0] == 0.0 {
        return Err(Error::SolverFailure(
            "singular tridiagonal system: zero leading pivot".into(),
        ));
    }
    c_prime[0] = upper[0] / diag[0];
    d_prime[0] = rhs[0] / diag[0];

    for i in 1..n {
        let den = diag[i] - lower[i] * c_prime[i - 1];
        if den == 0.0 || !den.is_finite() {
            return Err(Error::SolverFailure(format!(
                "singular tridiagonal system: pivot {den} at row {i}"
            )));
        }
        if i < n - 1 {
            c_prime[i] = upper[i] / den;
        }
        d_prime[i] = (rhs[i] - lower[i] * d_prime[i - 1]) / den;
    }

    let mut x = vec![0.0; n];
    x[n - 1] = d_prime[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d_prime[i] - c_prime[i] * x[i + 1];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn multiply(lower: &[f64], diag: &[f64], upper: &[f64], x: &[f64]) -> Vec<f64> {
        let n = x.len();
        (0..n)
            .map(|i| {
                let mut v = diag[i] * x[i];
                if i > 0 {
                    v += lower[i] * x[i - 1];
                }
                if i < n - 1 {
                    v += upper[i] * x[i + 1];
                }
                v
            })
            .collect()
    }

    #[test]
    fn identity_system() {
        let n = 5;
        let x = thomas_solve(
            &vec![0.0; n],
            &vec![1.0; n],
            &vec![0.0; n],
            &[1.0, 2.0, 3.0, 4.0, 5.0],
        )
        .unwrap();
        assert_eq!(x, vec![1.0, 2.0, 3.0, 4.0, 5.0]);
    }

    #[test]
    fn laplacian_residual_small() {
        let lower = [0.0, -1.0, -1.0, -1.0];
        let diag = [2.0, 2.0, 2.0, 2.0];
        let upper = [-1.0, -1.0, -1.0, 0.0];
        let rhs = [1.0, 0.0, 0.0, 1.0];
        let x = thomas_solve(&lower, &diag, &upper, &rhs).unwrap();
        let ax = multiply(&lower, &diag, &upper, &x);
        for (got, want) in ax.iter().zip(&rhs) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_singular_system() {
        assert!(thomas_solve(&[0.0, 1.0], &[0.0, 1.0], &[1.0, 0.0], &[1.0, 1.0]).is_err());
    }

    #[test]
    fn mixed_identity_rows_are_fine() {
        // Dirichlet-style rows (0,1,0) interleaved with interior rows.
        let lower = [0.0, -0.4, 0.0];
        let diag = [1.0, 2.0, 1.0];
        let upper = [0.0, -0.4, 0.0];
        let rhs = [3.0, 1.0, -2.0];
        let x = thomas_solve(&lower, &diag, &upper, &rhs).unwrap();
        assert!((x[0] - 3.0).abs() < 1e-15);
        assert!((x[2] + 2.0).abs() < 1e-15);
        assert!((2.0 * x[1] - 0.4 * (x[0] + x[2]) - 1.0).abs() < 1e-14);
    }
}
