//! Small dense least-squares helpers shared by the regression modules.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};

/// Numerical rank of a design matrix.
pub(crate) fn rank(m: &DMatrix<f64>) -> usize {
    let svd = m.clone().svd(false, false);
    let max_sv = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let tol = max_sv * (m.nrows().max(m.ncols()) as f64) * f64::EPSILON;
    svd.singular_values.iter().filter(|&&s| s > tol).count()
}

pub(crate) struct LsSolution {
    pub coef: DVector<f64>,
    /// (XᵀX)⁻¹ of the (weighted) design, for covariance work.
    pub xtx_inv: DMatrix<f64>,
}

/// Least squares via SVD with an explicit rank check.
pub(crate) fn least_squares(x: &DMatrix<f64>, y: &DVector<f64>) -> Result<LsSolution> {
    let (n, p) = (x.nrows(), x.ncols());
    if y.len() != n {
        return Err(Error::Argument(format!(
            "design has {n} rows but response has {} entries",
            y.len()
        )));
    }
    if n < p {
        return Err(Error::Argument(format!("need at least as many rows ({n}) as columns ({p})")));
    }
    let svd = x.clone().svd(true, true);
    let max_sv = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let tol = max_sv * (n.max(p) as f64) * f64::EPSILON;
    if svd.singular_values.iter().filter(|&&s| s > tol).count() < p {
        return Err(Error::Argument("design matrix is rank deficient".into()));
    }
    let coef = svd
        .solve(y, tol)
        .map_err(|e| Error::Numeric(format!("least-squares solve failed: {e}")))?;
    // (XᵀX)⁻¹ = V S⁻² Vᵀ
    let v_t = svd.v_t.as_ref().expect("v requested");
    let mut vs = v_t.transpose();
    for (j, s) in svd.singular_values.iter().enumerate() {
        let inv = 1.0 / (s * s);
        for i in 0..p {
            vs[(i, j)] *= inv;
        }
    }
    let xtx_inv = vs * v_t;
    Ok(LsSolution { coef: DVector::from_column_slice(coef.as_slice()), xtx_inv })
}

/// Weighted least squares: rows scaled by √w before the SVD solve.
pub(crate) fn weighted_least_squares(
    x: &DMatrix<f64>,
    y: &DVector<f64>,
    w: &[f64],
) -> Result<LsSolution> {
    let n = x.nrows();
    if w.len() != n {
        return Err(Error::Argument("weight vector length mismatch".into()));
    }
    if w.iter().any(|&wi| !(wi > 0.0) || !wi.is_finite()) {
        return Err(Error::Argument("weights must be positive and finite".into()));
    }
    let mut xw = x.clone();
    let mut yw = y.clone();
    for i in 0..n {
        let s = w[i].sqrt();
        yw[i] *= s;
        for j in 0..x.ncols() {
            xw[(i, j)] *= s;
        }
    }
    least_squares(&xw, &yw)
}

/// Inverse of a symmetric positive-definite matrix, Cholesky first, LU as
/// the fallback for near-singular cases.
pub(crate) fn symmetric_inverse(m: &DMatrix<f64>) -> Option<DMatrix<f64>> {
    if let Some(chol) = m.clone().cholesky() {
        return Some(chol.inverse());
    }
    m.clone().try_inverse()
}
