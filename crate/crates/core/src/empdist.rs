//! Nonparametric distribution machinery: the smoothed empirical CDF used to
//! move responses onto the unit interval, and the Harrell–Davis quantile
//! function used to move fitted percentiles back.

use crate::error::{Error, Result};
use crate::special::beta_cdf;

/// Smoothed empirical CDF value at integer rank i of n, strictly inside (0,1):
/// 1/n at the minimum, (2i−1)/(2n) in the middle, (n−1)/n at the maximum.
fn fc_value(rank: usize, n: usize) -> f64 {
    let nf = n as f64;
    if rank == 1 {
        1.0 / nf
    } else if rank == n {
        (nf - 1.0) / nf
    } else {
        (2.0 * rank as f64 - 1.0) / (2.0 * nf)
    }
}

// FC value at a (possibly fractional) tie-averaged rank, by linear
// interpolation between the adjacent integer-rank values.
fn fc_value_at(rank: f64, n: usize) -> f64 {
    let lo = rank.floor() as usize;
    let frac = rank - lo as f64;
    if frac == 0.0 {
        fc_value(lo, n)
    } else {
        (1.0 - frac) * fc_value(lo, n) + frac * fc_value(lo + 1, n)
    }
}

/// Tie-averaged 1-based ranks of `y`, returned in input order.
fn average_ranks(y: &[f64]) -> Vec<f64> {
    let n = y.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| y[a].partial_cmp(&y[b]).expect("finite values"));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && y[order[j + 1]] == y[order[i]] {
            j += 1;
        }
        // ranks i+1 ..= j+1 share the run; assign their mean
        let avg = (i + 1 + j + 1) as f64 / 2.0;
        for &k in &order[i..=j] {
            ranks[k] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// Smoothed empirical CDF values for each observation, in input order.
///
/// Ties receive averaged ranks before the rank-to-probability map, so equal
/// observations get equal CDF values and the output stays inside
/// `[1/n, (n-1)/n]`.
pub fn fc_hermite_cdf(y: &[f64]) -> Result<Vec<f64>> {
    let n = y.len();
    if n < 3 {
        return Err(Error::Argument(format!(
            "smoothed empirical CDF needs at least 3 observations, got {n}"
        )));
    }
    if let Some(bad) = y.iter().find(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("non-finite response value {bad}")));
    }
    Ok(average_ranks(y).into_iter().map(|r| fc_value_at(r, n)).collect())
}

/// Harrell–Davis weights: increments of a Beta((n+1)p, (n+1)(1−p)) CDF over
/// the rank grid i/n. Nonnegative and summing to one.
pub fn hd_weights(n: usize, p: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::Argument("hd_weights needs n >= 1".into()));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("hd_weights requires p in (0,1), got {p}")));
    }
    let np1 = (n + 1) as f64;
    let (a, b) = (np1 * p, np1 * (1.0 - p));
    let mut weights = Vec::with_capacity(n);
    let mut prev = 0.0;
    for i in 1..=n {
        let cur = if i == n { 1.0 } else { beta_cdf(i as f64 / n as f64, a, b)? };
        weights.push((cur - prev).max(0.0));
        prev = cur;
    }
    Ok(weights)
}

/// Harrell–Davis quantile of an arbitrary sample (sorted internally).
pub fn hd_quantile(sample: &[f64], p: f64) -> Result<f64> {
    let mut sorted = sample.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
    hd_quantile_sorted(&sorted, p)
}

fn hd_quantile_sorted(sorted: &[f64], p: f64) -> Result<f64> {
    let w = hd_weights(sorted.len(), p)?;
    Ok(w.iter().zip(sorted).map(|(wi, yi)| wi * yi).sum())
}

/// A response sample together with its smoothed CDF values.
///
/// Immutable once built; the quantile side is evaluated on demand.
#[derive(Debug, Clone)]
pub struct EmpiricalDistribution {
    sorted: Vec<f64>,
    cdf_at_data: Vec<f64>,
}

impl EmpiricalDistribution {
    /// Build from a raw response sample (length ≥ 3, finite values).
    pub fn from_sample(y: &[f64]) -> Result<Self> {
        let cdf_at_data = fc_hermite_cdf(y)?;
        let mut sorted = y.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
        Ok(Self { sorted, cdf_at_data })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    /// Order statistics, ascending.
    pub fn sorted_values(&self) -> &[f64] {
        &self.sorted
    }

    /// Smoothed CDF value of each original observation, in input order.
    pub fn cdf_at_data(&self) -> &[f64] {
        &self.cdf_at_data
    }

    pub fn min(&self) -> f64 {
        self.sorted[0]
    }

    pub fn max(&self) -> f64 {
        *self.sorted.last().expect("nonempty")
    }

    /// Harrell–Davis quantile at p ∈ (0,1).
    pub fn quantile(&self, p: f64) -> Result<f64> {
        hd_quantile_sorted(&self.sorted, p)
    }

    /// The quantile side as a callable.
    pub fn quantile_fn(&self) -> impl Fn(f64) -> Result<f64> + '_ {
        move |p| self.quantile(p)
    }

    /// Numerical derivative of the quantile function over a strictly
    /// increasing grid: central differences inside, one-sided at the ends.
    /// Tiny negative values from evaluation noise are floored at zero.
    pub fn quantile_derivative(&self, p_grid: &[f64]) -> Result<Vec<f64>> {
        if p_grid.len() < 2 {
            return Err(Error::Argument("derivative grid needs at least 2 points".into()));
        }
        if p_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument("derivative grid must be strictly increasing".into()));
        }
        if p_grid.iter().any(|&p| p <= 0.0 || p >= 1.0) {
            return Err(Error::Argument("derivative grid must lie inside (0,1)".into()));
        }
        let q: Vec<f64> = p_grid.iter().map(|&p| self.quantile(p)).collect::<Result<_>>()?;
        let m = q.len();
        let mut deriv = Vec::with_capacity(m);
        for i in 0..m {
            let slope = if i == 0 {
                (q[1] - q[0]) / (p_grid[1] - p_grid[0])
            } else if i == m - 1 {
                (q[m - 1] - q[m - 2]) / (p_grid[m - 1] - p_grid[m - 2])
            } else {
                (q[i + 1] - q[i - 1]) / (p_grid[i + 1] - p_grid[i - 1])
            };
            deriv.push(slope.max(0.0));
        }
        Ok(deriv)
    }
}
