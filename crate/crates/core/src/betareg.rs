//! Maximum-likelihood beta regression in the mean–precision
//! parameterization: logit link for the mean submodel, log link for the
//! precision submodel. Fitting is quasi-Newton (BFGS) on the analytic score
//! with a backtracking line search; standard errors come from the
//! numerically differenced observed information at the optimum.

use crate::error::{Error, Result};
use crate::linalg;
use crate::special::{digamma, ln_gamma};
use nalgebra::{DMatrix, DVector};

const MU_EPS: f64 = 1e-12;
const ZETA_CAP: f64 = 500.0;

/// Mean–precision coordinates of a beta distribution, with shapes
/// a = μφ and b = (1−μ)φ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaParams {
    mu: f64,
    phi: f64,
}

impl BetaParams {
    pub fn new(mu: f64, phi: f64) -> Result<Self> {
        if !(mu > 0.0 && mu < 1.0) {
            return Err(Error::Domain(format!("mean must lie in (0,1), got {mu}")));
        }
        if !(phi > 0.0 && phi.is_finite()) {
            return Err(Error::Domain(format!("precision must be positive, got {phi}")));
        }
        Ok(Self { mu, phi })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn shape_a(&self) -> f64 {
        self.mu * self.phi
    }

    pub fn shape_b(&self) -> f64 {
        (1.0 - self.mu) * self.phi
    }
}

/// Mean-model and precision-model design matrices with named columns.
/// Both include their intercept column; both must have full column rank.
#[derive(Debug, Clone)]
pub struct RegressionSpec {
    x: DMatrix<f64>,
    z: DMatrix<f64>,
    x_names: Vec<String>,
    z_names: Vec<String>,
}

impl RegressionSpec {
    pub fn new(
        x: DMatrix<f64>,
        x_names: Vec<String>,
        z: DMatrix<f64>,
        z_names: Vec<String>,
    ) -> Result<Self> {
        let n = x.nrows();
        if z.nrows() != n {
            return Err(Error::Argument(format!(
                "mean design has {n} rows, precision design has {}",
                z.nrows()
            )));
        }
        if x_names.len() != x.ncols() || z_names.len() != z.ncols() {
            return Err(Error::Argument("column name count does not match design".into()));
        }
        let (p, q) = (x.ncols(), z.ncols());
        if n < p + q {
            return Err(Error::Argument(format!(
                "need n >= p + q, got n={n}, p={p}, q={q}"
            )));
        }
        if linalg::rank(&x) < p {
            return Err(Error::Argument("mean design matrix is rank deficient".into()));
        }
        if linalg::rank(&z) < q {
            return Err(Error::Argument("precision design matrix is rank deficient".into()));
        }
        Ok(Self { x, z, x_names, z_names })
    }

    /// Convenience constructor: intercept column plus the given named columns.
    pub fn with_intercept(
        mean_cols: &[(&str, &[f64])],
        precision_cols: &[(&str, &[f64])],
        n: usize,
    ) -> Result<Self> {
        let build = |cols: &[(&str, &[f64])]| -> Result<(DMatrix<f64>, Vec<String>)> {
            let mut names = vec!["(Intercept)".to_string()];
            let mut m = DMatrix::from_element(n, cols.len() + 1, 1.0);
            for (j, (name, data)) in cols.iter().enumerate() {
                if data.len() != n {
                    return Err(Error::Argument(format!(
                        "column {name} has {} rows, expected {n}",
                        data.len()
                    )));
                }
                names.push((*name).to_string());
                for i in 0..n {
                    m[(i, j + 1)] = data[i];
                }
            }
            Ok((m, names))
        };
        let (x, x_names) = build(mean_cols)?;
        let (z, z_names) = build(precision_cols)?;
        Self::new(x, x_names, z, z_names)
    }

    pub fn n(&self) -> usize {
        self.x.nrows()
    }

    pub fn p(&self) -> usize {
        self.x.ncols()
    }

    pub fn q(&self) -> usize {
        self.z.ncols()
    }

    pub fn x(&self) -> &DMatrix<f64> {
        &self.x
    }

    pub fn z(&self) -> &DMatrix<f64> {
        &self.z
    }

    pub fn x_names(&self) -> &[String] {
        &self.x_names
    }

    pub fn z_names(&self) -> &[String] {
        &self.z_names
    }

    /// Row-resampled copy (indices may repeat); rank is re-checked.
    pub fn resample(&self, idx: &[usize]) -> Result<Self> {
        let take = |m: &DMatrix<f64>| {
            DMatrix::from_fn(idx.len(), m.ncols(), |i, j| m[(idx[i], j)])
        };
        Self::new(take(&self.x), self.x_names.clone(), take(&self.z), self.z_names.clone())
    }
}

/// Result of a maximum-likelihood beta regression fit.
#[derive(Debug, Clone)]
pub struct BetaFit {
    pub beta: DVector<f64>,
    pub gamma: DVector<f64>,
    pub loglik: f64,
    pub se_beta: DVector<f64>,
    pub se_gamma: DVector<f64>,
    pub pseudo_r2: f64,
    pub converged: bool,
    pub iterations: usize,
}

/// Optimizer controls for [`fit`].
#[derive(Debug, Clone, Copy)]
pub struct FitOptions {
    pub grad_tol: f64,
    pub max_iter: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self { grad_tol: 1e-6, max_iter: 500 }
    }
}

pub(crate) fn inv_logit(eta: f64) -> f64 {
    let mu = if eta >= 0.0 {
        1.0 / (1.0 + (-eta).exp())
    } else {
        let e = eta.exp();
        e / (1.0 + e)
    };
    mu.clamp(MU_EPS, 1.0 - MU_EPS)
}

fn phi_from_zeta(zeta: f64) -> f64 {
    zeta.clamp(-ZETA_CAP, ZETA_CAP).exp()
}

/// Log-density of Beta(μ, φ) at u ∈ (0,1).
pub fn beta_logpdf(u: f64, params: &BetaParams) -> Result<f64> {
    if !(u > 0.0 && u < 1.0) {
        return Err(Error::Domain(format!("beta_logpdf requires u in (0,1), got {u}")));
    }
    let a = params.shape_a();
    let b = params.shape_b();
    Ok(ln_gamma(params.phi)? - ln_gamma(a)? - ln_gamma(b)?
        + (a - 1.0) * u.ln()
        + (b - 1.0) * (-u).ln_1p())
}

/// Variance of Beta(μ, φ): μ(1−μ)/(1+φ).
pub fn beta_variance(params: &BetaParams) -> f64 {
    params.mu * (1.0 - params.mu) / (1.0 + params.phi)
}

fn check_dims(beta: &DVector<f64>, gamma: &DVector<f64>, u: &[f64], spec: &RegressionSpec) -> Result<()> {
    if beta.len() != spec.p() || gamma.len() != spec.q() {
        return Err(Error::Argument(format!(
            "coefficient lengths ({}, {}) do not match design ({}, {})",
            beta.len(),
            gamma.len(),
            spec.p(),
            spec.q()
        )));
    }
    if u.len() != spec.n() {
        return Err(Error::Argument("response length does not match design".into()));
    }
    Ok(())
}

/// Log-likelihood of the mean–precision beta regression at (β, γ).
pub fn loglik(beta: &DVector<f64>, gamma: &DVector<f64>, u: &[f64], spec: &RegressionSpec) -> Result<f64> {
    check_dims(beta, gamma, u, spec)?;
    let eta = spec.x() * beta;
    let zeta = spec.z() * gamma;
    if eta.iter().chain(zeta.iter()).any(|v| !v.is_finite()) {
        return Err(Error::Numeric("non-finite linear predictor".into()));
    }
    let mut total = 0.0;
    for i in 0..u.len() {
        let params = BetaParams { mu: inv_logit(eta[i]), phi: phi_from_zeta(zeta[i]) };
        total += beta_logpdf(u[i], &params)?;
    }
    if !total.is_finite() {
        return Err(Error::Numeric("log-likelihood is not finite".into()));
    }
    Ok(total)
}

/// Analytic gradient of [`loglik`], β block first then γ block.
pub fn score(beta: &DVector<f64>, gamma: &DVector<f64>, u: &[f64], spec: &RegressionSpec) -> Result<DVector<f64>> {
    check_dims(beta, gamma, u, spec)?;
    let (p, q) = (spec.p(), spec.q());
    let eta = spec.x() * beta;
    let zeta = spec.z() * gamma;
    if eta.iter().chain(zeta.iter()).any(|v| !v.is_finite()) {
        return Err(Error::Numeric("non-finite linear predictor".into()));
    }
    let mut g = DVector::zeros(p + q);
    for i in 0..u.len() {
        let mu = inv_logit(eta[i]);
        let phi = phi_from_zeta(zeta[i]);
        let ustar = u[i].ln() - (-u[i]).ln_1p();
        let mustar = digamma(mu * phi)? - digamma((1.0 - mu) * phi)?;
        let mean_term = phi * (ustar - mustar) * mu * (1.0 - mu);
        for j in 0..p {
            g[j] += mean_term * spec.x()[(i, j)];
        }
        let prec_term = (mu * (ustar - mustar) + (-u[i]).ln_1p() - digamma((1.0 - mu) * phi)?
            + digamma(phi)?)
            * phi;
        for k in 0..q {
            g[p + k] += prec_term * spec.z()[(i, k)];
        }
    }
    if g.iter().any(|v: &f64| !v.is_finite()) {
        return Err(Error::Numeric("non-finite score".into()));
    }
    Ok(g)
}

// Guarded objective for the optimizer: -inf on any numerical trouble so the
// line search simply rejects the step.
fn loglik_guarded(theta: &DVector<f64>, u: &[f64], spec: &RegressionSpec) -> f64 {
    let (p, q) = (spec.p(), spec.q());
    let beta = DVector::from_column_slice(&theta.as_slice()[..p]);
    let gamma = DVector::from_column_slice(&theta.as_slice()[p..p + q]);
    loglik(&beta, &gamma, u, spec).unwrap_or(f64::NEG_INFINITY)
}

fn score_guarded(theta: &DVector<f64>, u: &[f64], spec: &RegressionSpec) -> Option<DVector<f64>> {
    let (p, q) = (spec.p(), spec.q());
    let beta = DVector::from_column_slice(&theta.as_slice()[..p]);
    let gamma = DVector::from_column_slice(&theta.as_slice()[p..p + q]);
    score(&beta, &gamma, u, spec).ok()
}

/// Fit by maximizing the log-likelihood.
///
/// Initialization follows the usual two-step recipe: β from least squares of
/// logit(u) on X, the γ intercept from a moment estimate of φ, remaining γ
/// entries zero. Convergence is declared when the score max-norm drops below
/// `grad_tol`.
pub fn fit(u: &[f64], spec: &RegressionSpec, options: &FitOptions) -> Result<BetaFit> {
    let n = spec.n();
    if u.len() != n {
        return Err(Error::Argument("response length does not match design".into()));
    }
    if let Some(bad) = u.iter().find(|v| !(**v > 0.0 && **v < 1.0)) {
        return Err(Error::Domain(format!(
            "transformed responses must lie strictly in (0,1), got {bad}"
        )));
    }
    let (p, q) = (spec.p(), spec.q());

    // Starting point.
    let logit_u = DVector::from_iterator(n, u.iter().map(|&ui| ui.ln() - (-ui).ln_1p()));
    let beta0 = linalg::least_squares(spec.x(), &logit_u)?.coef;
    let eta0 = spec.x() * &beta0;
    let mu0: Vec<f64> = eta0.iter().map(|&e| inv_logit(e)).collect();
    let resid_var = {
        let resid: Vec<f64> = u.iter().zip(&mu0).map(|(ui, mi)| ui - mi).collect();
        let mean = resid.iter().sum::<f64>() / n as f64;
        resid.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / (n as f64 - 1.0)
    };
    let mean_mu_var = mu0.iter().map(|m| m * (1.0 - m)).sum::<f64>() / n as f64;
    let phi0 = if resid_var > 0.0 {
        (mean_mu_var / resid_var - 1.0).max(0.1)
    } else {
        0.1
    };
    let mut theta = DVector::zeros(p + q);
    for j in 0..p {
        theta[j] = beta0[j];
    }
    theta[p] = phi0.min(1e6).ln();

    let (theta, iterations, converged) = bfgs_maximize(
        |t| loglik_guarded(t, u, spec),
        |t| score_guarded(t, u, spec),
        theta,
        options.grad_tol,
        options.max_iter,
    );

    let beta = DVector::from_column_slice(&theta.as_slice()[..p]);
    let gamma = DVector::from_column_slice(&theta.as_slice()[p..p + q]);
    let ll = loglik(&beta, &gamma, u, spec)?;

    // Observed information from central differences of the analytic score.
    let (se, se_ok) = standard_errors(&theta, u, spec);
    let se_beta = DVector::from_column_slice(&se.as_slice()[..p]);
    let se_gamma = DVector::from_column_slice(&se.as_slice()[p..p + q]);

    // Pseudo-R²: squared correlation between logit(u) and the fitted linear
    // predictor. Zero when either side is constant.
    let eta_hat = spec.x() * &beta;
    let pseudo_r2 = squared_correlation(logit_u.as_slice(), eta_hat.as_slice());

    Ok(BetaFit {
        beta,
        gamma,
        loglik: ll,
        se_beta,
        se_gamma,
        pseudo_r2,
        converged: converged && se_ok,
        iterations,
    })
}

fn squared_correlation(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let mut sab = 0.0;
    let mut saa = 0.0;
    let mut sbb = 0.0;
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma).powi(2);
        sbb += (y - mb).powi(2);
    }
    if saa <= 0.0 || sbb <= 0.0 {
        return 0.0;
    }
    (sab * sab / (saa * sbb)).clamp(0.0, 1.0)
}

fn standard_errors(theta: &DVector<f64>, u: &[f64], spec: &RegressionSpec) -> (DVector<f64>, bool) {
    let d = theta.len();
    let mut hessian = DMatrix::zeros(d, d);
    for j in 0..d {
        let h = 1e-5 * (1.0 + theta[j].abs());
        let mut plus = theta.clone();
        plus[j] += h;
        let mut minus = theta.clone();
        minus[j] -= h;
        let (gp, gm) = match (score_guarded(&plus, u, spec), score_guarded(&minus, u, spec)) {
            (Some(a), Some(b)) => (a, b),
            _ => return (DVector::from_element(d, f64::NAN), false),
        };
        for i in 0..d {
            hessian[(i, j)] = (gp[i] - gm[i]) / (2.0 * h);
        }
    }
    // observed information, symmetrized
    let info = -(&hessian + hessian.transpose()) * 0.5;
    match linalg::symmetric_inverse(&info) {
        Some(cov) => {
            let mut se = DVector::zeros(d);
            for i in 0..d {
                if cov[(i, i)] > 0.0 {
                    se[i] = cov[(i, i)].sqrt();
                } else {
                    return (DVector::from_element(d, f64::NAN), false);
                }
            }
            (se, true)
        }
        None => (DVector::from_element(d, f64::NAN), false),
    }
}

// BFGS ascent with backtracking Armijo line search on the objective.
fn bfgs_maximize<F, G>(
    f: F,
    grad: G,
    mut x: DVector<f64>,
    grad_tol: f64,
    max_iter: usize,
) -> (DVector<f64>, usize, bool)
where
    F: Fn(&DVector<f64>) -> f64,
    G: Fn(&DVector<f64>) -> Option<DVector<f64>>,
{
    let d = x.len();
    let mut h = DMatrix::<f64>::identity(d, d);
    let mut fx = f(&x);
    let mut g = match grad(&x) {
        Some(g) => g,
        None => return (x, 0, false),
    };
    for iter in 0..max_iter {
        if g.amax() < grad_tol {
            return (x, iter, true);
        }
        let mut dir = &h * &g;
        if dir.dot(&g) <= 0.0 {
            // Hessian approximation lost positive definiteness; restart.
            h = DMatrix::identity(d, d);
            dir = g.clone();
        }
        let slope = dir.dot(&g);
        let mut alpha = 1.0;
        let mut accepted = false;
        let mut x_new = x.clone();
        let mut f_new = fx;
        while alpha > 1e-14 {
            x_new = &x + &dir * alpha;
            f_new = f(&x_new);
            if f_new.is_finite() && f_new >= fx + 1e-4 * alpha * slope {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if !accepted {
            // No improving step along any direction we can build.
            return (x, iter, g.amax() < grad_tol);
        }
        let g_new = match grad(&x_new) {
            Some(g) => g,
            None => return (x_new, iter + 1, false),
        };
        let s = &x_new - &x;
        // For the equivalent minimization of -f the secant pair is
        // (s, g_old - g_new).
        let yv = &g - &g_new;
        let sy = s.dot(&yv);
        if sy > 1e-12 * s.norm() * yv.norm() {
            let rho = 1.0 / sy;
            let hy = &h * &yv;
            let yhy = yv.dot(&hy);
            // H ← H + (sy + yᵀHy)/sy² ssᵀ − (Hysᵀ + syᵀH)/sy
            let ss = &s * s.transpose();
            let hyst = &hy * s.transpose();
            h += ss * ((sy + yhy) * rho * rho);
            h -= (&hyst + hyst.transpose()) * rho;
        }
        x = x_new;
        fx = f_new;
        g = g_new;
    }
    let converged = g.amax() < grad_tol;
    (x, max_iter, converged)
}

/// Per-row (μ, φ) at new design points.
pub fn predict_params(fit: &BetaFit, xnew: &DMatrix<f64>, znew: &DMatrix<f64>) -> Result<Vec<BetaParams>> {
    if xnew.ncols() != fit.beta.len() || znew.ncols() != fit.gamma.len() {
        return Err(Error::Argument(format!(
            "prediction design has {} / {} columns, fit expects {} / {}",
            xnew.ncols(),
            znew.ncols(),
            fit.beta.len(),
            fit.gamma.len()
        )));
    }
    if xnew.nrows() != znew.nrows() {
        return Err(Error::Argument("prediction designs disagree on row count".into()));
    }
    let eta = xnew * &fit.beta;
    let zeta = znew * &fit.gamma;
    (0..xnew.nrows())
        .map(|i| BetaParams::new(inv_logit(eta[i]), phi_from_zeta(zeta[i])))
        .collect()
}
