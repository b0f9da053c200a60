//! Scalar special functions and distribution quantiles.
//!
//! Everything here is self-contained: log-gamma via a Lanczos series,
//! the regularized incomplete beta via Lentz's continued fraction with the
//! usual symmetry switch, and quantiles via safeguarded Newton iteration.
//! Accuracy targets: `ln_gamma` better than 1e-12 relative over
//! `[1e-6, 1e6]`, `digamma` 1e-10 absolute, `beta_quantile` inverts its CDF
//! to 1e-10 in probability, `normal_quantile` to 1e-8.

use crate::error::{Error, Result};

/// Lanczos coefficients, g = 7, 9 terms.
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

fn check_finite(x: f64, what: &str) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be finite, got {x}")))
    }
}

/// Natural log of the gamma function for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    check_finite(x, "ln_gamma argument")?;
    if x <= 0.0 {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    Ok(ln_gamma_raw(x))
}

// Lanczos for x >= 0.5, reflection below.
fn ln_gamma_raw(x: f64) -> f64 {
    if x < 0.5 {
        // ln Γ(x) = ln π − ln sin(πx) − ln Γ(1−x)
        return std::f64::consts::PI.ln()
            - (std::f64::consts::PI * x).sin().ln()
            - ln_gamma_raw(1.0 - x);
    }
    let z = x - 1.0;
    let mut sum = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + 7.5;
    HALF_LN_TWO_PI + (z + 0.5) * t.ln() - t + sum.ln()
}

/// Digamma function ψ(x) = d/dx ln Γ(x) for x > 0.
///
/// Recurrence pushes the argument above 10, then the asymptotic
/// Bernoulli series is applied.
pub fn digamma(x: f64) -> Result<f64> {
    check_finite(x, "digamma argument")?;
    if x <= 0.0 {
        return Err(Error::Domain(format!("digamma requires x > 0, got {x}")));
    }
    let mut value = 0.0;
    let mut t = x;
    while t < 10.0 {
        value -= 1.0 / t;
        t += 1.0;
    }
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    // ψ(t) ~ ln t − 1/(2t) − Σ B_2k / (2k t^{2k})
    let series = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2
                                * (1.0 / 240.0
                                    - inv2
                                        * (1.0 / 132.0
                                            - inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    Ok(value + t.ln() - 0.5 * inv - series)
}

/// ln B(a, b) = ln Γ(a) + ln Γ(b) − ln Γ(a+b).
pub fn ln_beta(a: f64, b: f64) -> Result<f64> {
    Ok(ln_gamma(a)? + ln_gamma(b)? - ln_gamma(a + b)?)
}

/// Regularized incomplete beta function I_x(a, b).
pub fn beta_cdf(x: f64, a: f64, b: f64) -> Result<f64> {
    check_finite(x, "beta_cdf x")?;
    if !(a > 0.0 && a.is_finite() && b > 0.0 && b.is_finite()) {
        return Err(Error::Domain(format!(
            "beta_cdf requires positive finite shapes, got a={a}, b={b}"
        )));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("beta_cdf requires x in [0,1], got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(1.0);
    }
    let ln_front = a * x.ln() + b * (-x).ln_1p() - ln_beta(a, b)?;
    // Continued fraction converges fast for x below the switch point.
    let value = if x < (a + 1.0) / (a + b + 2.0) {
        (ln_front.exp() / a) * beta_cf(x, a, b)
    } else {
        1.0 - (ln_front.exp() / b) * beta_cf(1.0 - x, b, a)
    };
    Ok(value.clamp(0.0, 1.0))
}

// Lentz's algorithm for the incomplete beta continued fraction.
fn beta_cf(x: f64, a: f64, b: f64) -> f64 {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 1e-16;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=300 {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

fn check_open_unit(p: f64, what: &str) -> Result<()> {
    if p.is_finite() && p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must lie strictly in (0,1), got {p}")))
    }
}

/// Inverse of `beta_cdf` in its first argument.
///
/// Upper-half probabilities are reflected onto the lower half, where the
/// continued fraction keeps full relative accuracy even for tiny tail mass;
/// the solve itself is a safeguarded Newton iteration that never leaves its
/// shrinking bracket.
pub fn beta_quantile(p: f64, a: f64, b: f64) -> Result<f64> {
    check_open_unit(p, "beta_quantile p")?;
    if !(a > 0.0 && a.is_finite() && b > 0.0 && b.is_finite()) {
        return Err(Error::Domain(format!(
            "beta_quantile requires positive finite shapes, got a={a}, b={b}"
        )));
    }
    if p > 0.5 {
        return Ok(1.0 - beta_quantile_core(1.0 - p, b, a)?);
    }
    beta_quantile_core(p, a, b)
}

// Solve I_x(a,b) = p for p <= 0.5.
fn beta_quantile_core(p: f64, a: f64, b: f64) -> Result<f64> {
    let ln_b = ln_beta(a, b)?;
    let mut lo = 0.0_f64;
    let mut hi = 1.0_f64;
    let mut x = (a / (a + b)).clamp(1e-8, 1.0 - 1e-8);
    let mut best = (f64::INFINITY, x);
    let tol = 1e-13 * p;
    for _ in 0..300 {
        let f = beta_cdf(x, a, b)? - p;
        if f.abs() < best.0 {
            best = (f.abs(), x);
        }
        if f.abs() <= tol {
            return Ok(x);
        }
        if f > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let ln_pdf = (a - 1.0) * x.ln() + (b - 1.0) * (-x).ln_1p() - ln_b;
        let step = f / ln_pdf.exp();
        let newton = x - step;
        let next = if step.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= f64::EPSILON * x.abs() {
            break;
        }
        x = next;
        if hi - lo < f64::MIN_POSITIVE {
            break;
        }
    }
    Ok(best.1)
}

/// Standard normal inverse CDF (Wichura's rational approximation).
pub fn normal_quantile(p: f64) -> Result<f64> {
    check_open_unit(p, "normal_quantile p")?;
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180_625 - q * q;
        return Ok(q * poly7(r, &NQ_A) / poly7(r, &NQ_B));
    }
    let r = if q < 0.0 { p } else { 1.0 - p };
    let r = (-r.ln()).sqrt();
    let z = if r <= 5.0 {
        let r = r - 1.6;
        poly7(r, &NQ_C) / poly7(r, &NQ_D)
    } else {
        let r = r - 5.0;
        poly7(r, &NQ_E) / poly7(r, &NQ_F)
    };
    Ok(if q < 0.0 { -z } else { z })
}

fn poly7(x: f64, c: &[f64; 8]) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci)
}

const NQ_A: [f64; 8] = [
    3.387_132_872_796_366_5,
    133.141_667_891_784_38,
    1_971.590_950_306_551_3,
    13_731.693_765_509_461,
    45_921.953_931_549_87,
    67_265.770_927_008_7,
    33_430.575_583_588_13,
    2_509.080_928_730_122_7,
];
const NQ_B: [f64; 8] = [
    1.0,
    42.313_330_701_600_91,
    687.187_007_492_057_9,
    5_394.196_021_424_751,
    21_213.794_301_586_597,
    39_307.895_800_092_71,
    28_729.085_735_721_943,
    5_226.495_278_852_545_5,
];
const NQ_C: [f64; 8] = [
    1.423_437_110_749_683_5,
    4.630_337_846_156_545,
    5.769_497_221_460_691,
    3.647_848_324_763_204_5,
    1.270_458_252_452_368_4,
    0.241_780_725_177_450_6,
    0.022_723_844_989_269_184,
    7.745_450_142_783_414e-4,
];
const NQ_D: [f64; 8] = [
    1.0,
    2.053_191_626_637_758_8,
    1.676_384_830_183_803_8,
    0.689_767_334_985_1,
    0.148_103_976_427_480_08,
    0.015_198_666_563_616_457,
    5.475_938_084_995_345e-4,
    1.050_750_071_644_416_9e-9,
];
const NQ_E: [f64; 8] = [
    6.657_904_643_501_103,
    5.463_784_911_164_114,
    1.784_826_539_917_291_3,
    0.296_560_571_828_504_87,
    0.026_532_189_526_576_123,
    0.001_242_660_947_388_078_4,
    2.711_555_568_743_487_6e-5,
    2.010_334_399_292_288_1e-7,
];
const NQ_F: [f64; 8] = [
    1.0,
    0.599_832_206_555_887_9,
    0.136_929_880_922_735_8,
    0.014_875_361_290_850_615,
    7.868_691_311_456_132_6e-4,
    1.846_318_317_510_054_8e-5,
    1.421_511_758_316_446e-7,
    2.044_263_103_389_939_7e-15,
];

/// Student-t inverse CDF.
///
/// Uses the incomplete-beta identity |T| relation, so the result inherits
/// `beta_quantile` accuracy; exactly antisymmetric about p = 0.5.
pub fn t_quantile(p: f64, df: f64) -> Result<f64> {
    check_open_unit(p, "t_quantile p")?;
    if !(df > 0.0 && df.is_finite()) {
        return Err(Error::Domain(format!("t_quantile requires df > 0, got {df}")));
    }
    if p == 0.5 {
        return Ok(0.0);
    }
    let tail = 2.0 * p.min(1.0 - p);
    let x = beta_quantile(tail, 0.5 * df, 0.5)?;
    let t = (df * (1.0 - x) / x).sqrt();
    Ok(if p < 0.5 { -t } else { t })
}

/// Regularized lower incomplete gamma P(a, x).
pub fn gamma_p(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) || !(x >= 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "gamma_p requires a > 0 and x >= 0, got a={a}, x={x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x < a + 1.0 {
        Ok(gamma_p_series(a, x))
    } else {
        Ok(1.0 - gamma_q_cf(a, x))
    }
}

/// Regularized upper incomplete gamma Q(a, x) = 1 − P(a, x).
pub fn gamma_q(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) || !(x >= 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "gamma_q requires a > 0 and x >= 0, got a={a}, x={x}"
        )));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if x < a + 1.0 {
        Ok(1.0 - gamma_p_series(a, x))
    } else {
        Ok(gamma_q_cf(a, x))
    }
}

fn gamma_p_series(a: f64, x: f64) -> f64 {
    let mut term = 1.0 / a;
    let mut sum = term;
    let mut ap = a;
    for _ in 0..500 {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term.abs() < sum.abs() * 1e-16 {
            break;
        }
    }
    (sum.ln() + a * x.ln() - x - ln_gamma_raw(a)).exp()
}

fn gamma_q_cf(a: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=500 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (a * x.ln() - x - ln_gamma_raw(a)).exp() * h
}

/// Standard normal CDF, accurate in both tails.
pub fn normal_cdf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let t = x.abs() / std::f64::consts::SQRT_2;
    // erfc(t) = Q(1/2, t²) for t ≥ 0
    let half_erfc = 0.5 * gamma_q(0.5, t * t).unwrap_or(if t > 1.0 { 0.0 } else { 1.0 });
    if x >= 0.0 {
        1.0 - half_erfc
    } else {
        half_erfc
    }
}

/// Chi-square survival function P(X > x) with `df` degrees of freedom.
pub fn chi_square_sf(x: f64, df: f64) -> Result<f64> {
    if !(df > 0.0 && df.is_finite()) {
        return Err(Error::Domain(format!("chi_square_sf requires df > 0, got {df}")));
    }
    gamma_q(0.5 * df, 0.5 * x.max(0.0))
}

/// Kolmogorov distribution survival function Q(z) = P(sup|B(t)| > z).
pub fn kolmogorov_sf(z: f64) -> f64 {
    if z <= 0.0 {
        return 1.0;
    }
    if z < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=100 {
        let k = k as f64;
        let term = (-2.0 * k * k * z * z).exp();
        sum += sign * term;
        sign = -sign;
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn rel_close(a: f64, b: f64, tol: f64) {
        let denom = b.abs().max(1e-300);
        assert!(((a - b) / denom).abs() <= tol, "{a} vs {b} (rel tol {tol})");
    }

    #[test]
    fn ln_gamma_known_values() {
        close(ln_gamma(1.0).unwrap(), 0.0, 1e-14);
        close(ln_gamma(2.0).unwrap(), 0.0, 1e-14);
        // ln √π
        close(ln_gamma(0.5).unwrap(), 0.572_364_942_924_700_1, 1e-13);
        // high-precision references
        rel_close(ln_gamma(1e-6).unwrap(), 13.815_509_980_749_432, 1e-13);
        rel_close(ln_gamma(0.1).unwrap(), 2.252_712_651_734_206, 1e-13);
        rel_close(ln_gamma(1.5).unwrap(), -0.120_782_237_635_245_22, 1e-12);
        rel_close(ln_gamma(2.5).unwrap(), 0.284_682_870_472_919_16, 1e-12);
        rel_close(ln_gamma(10.0).unwrap(), 12.801_827_480_081_47, 1e-13);
        rel_close(ln_gamma(100.0).unwrap(), 359.134_205_369_575_4, 1e-13);
        rel_close(ln_gamma(1000.0).unwrap(), 5_905.220_423_209_181, 1e-13);
        rel_close(ln_gamma(1e6).unwrap(), 12_815_504.569_147_612, 1e-13);
    }

    #[test]
    fn ln_gamma_rejects_bad_input() {
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
        assert!(ln_gamma(f64::NAN).is_err());
        assert!(ln_gamma(f64::INFINITY).is_err());
    }

    #[test]
    fn ln_gamma_recurrence() {
        for &x in &[0.5, 1.0, 2.5, 10.0] {
            let ratio = (ln_gamma(x + 1.0).unwrap() - ln_gamma(x).unwrap()).exp();
            rel_close(ratio, x, 1e-10);
        }
    }

    #[test]
    fn digamma_known_values() {
        close(digamma(1.0).unwrap(), -0.577_215_664_901_532_9, 1e-12);
        close(digamma(2.0).unwrap(), 0.422_784_335_098_467_1, 1e-12);
        close(digamma(0.5).unwrap(), -1.963_510_026_021_423_5, 1e-12);
        close(digamma(0.1).unwrap(), -10.423_754_940_411_077, 1e-11);
        close(digamma(5.5).unwrap(), 1.611_093_148_581_751, 1e-12);
        close(digamma(50.0).unwrap(), 3.901_989_673_427_892, 1e-12);
        assert!(digamma(0.0).is_err());
        assert!(digamma(-3.0).is_err());
    }

    #[test]
    fn digamma_matches_ln_gamma_difference_quotient() {
        let h = 1e-5;
        let mut x = 0.1;
        while x <= 50.0 {
            let fd = (ln_gamma(x + h).unwrap() - ln_gamma(x - h).unwrap()) / (2.0 * h);
            close(digamma(x).unwrap(), fd, 1e-6);
            x += 0.7;
        }
    }

    #[test]
    fn beta_cdf_known_values() {
        close(beta_cdf(0.5, 1.0, 1.0).unwrap(), 0.5, 1e-15);
        // Beta(2,2): CDF = 3x² − 2x³
        close(beta_cdf(0.25, 2.0, 2.0).unwrap(), 0.15625, 1e-14);
        close(beta_cdf(0.5, 1.5, 1.5).unwrap(), 0.5, 1e-14);
        close(beta_cdf(0.0, 2.0, 3.0).unwrap(), 0.0, 0.0);
        close(beta_cdf(1.0, 2.0, 3.0).unwrap(), 1.0, 0.0);
        // frozen references
        close(beta_cdf(0.3, 2.5, 0.7).unwrap(), 0.029_814_024_845_250_47, 1e-14);
        close(beta_cdf(0.7, 0.5, 3.0).unwrap(), 0.990_396_306_409_711_9, 1e-13);
        close(beta_cdf(0.9, 10.0, 0.5).unwrap(), 0.151_640_909_634_709_92, 1e-13);
        close(beta_cdf(0.01, 0.3, 0.3).unwrap(), 0.139_551_927_829_726_24, 1e-13);
        close(beta_cdf(0.5, 4.0, 2.0).unwrap(), 0.1875, 1e-14);
        assert!(beta_cdf(-0.1, 1.0, 1.0).is_err());
        assert!(beta_cdf(1.1, 1.0, 1.0).is_err());
        assert!(beta_cdf(0.5, 0.0, 1.0).is_err());
        assert!(beta_cdf(0.5, 1.0, -2.0).is_err());
    }

    #[test]
    fn beta_cdf_monotone_in_x() {
        let (a, b) = (2.3, 0.8);
        let mut prev = 0.0;
        for i in 1..100 {
            let x = i as f64 / 100.0;
            let v = beta_cdf(x, a, b).unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn beta_cdf_reflection_identity() {
        for &a in &[0.5, 1.0, 2.0, 10.0] {
            for &b in &[0.5, 1.0, 2.0, 10.0] {
                for i in 1..20 {
                    let x = i as f64 / 20.0;
                    let s = beta_cdf(x, a, b).unwrap() + beta_cdf(1.0 - x, b, a).unwrap();
                    close(s, 1.0, 1e-12);
                }
            }
        }
    }

    #[test]
    fn beta_quantile_uniform_and_errors() {
        close(beta_quantile(0.5, 1.0, 1.0).unwrap(), 0.5, 1e-12);
        close(beta_quantile(0.3, 1.0, 1.0).unwrap(), 0.3, 1e-12);
        assert!(beta_quantile(0.0, 1.0, 1.0).is_err());
        assert!(beta_quantile(1.0, 1.0, 1.0).is_err());
        assert!(beta_quantile(0.5, -1.0, 1.0).is_err());
    }

    // Independent bisection on beta_cdf, kept apart from the Newton path.
    fn bisect_quantile(p: f64, a: f64, b: f64) -> f64 {
        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if beta_cdf(mid, a, b).unwrap() < p {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn beta_quantile_matches_bisection_oracle() {
        let q = beta_quantile(0.975, 2.0, 5.0).unwrap();
        close(q, bisect_quantile(0.975, 2.0, 5.0), 1e-10);
        close(q, 0.641_234_578_997_674_9, 1e-10);
        close(beta_cdf(q, 2.0, 5.0).unwrap(), 0.975, 1e-10);
    }

    #[test]
    fn beta_quantile_round_trip_grid() {
        let shapes = [0.5, 1.0, 2.0, 10.0];
        for &a in &shapes {
            for &b in &shapes {
                for i in 1..100 {
                    let x = i as f64 / 100.0;
                    let p = beta_cdf(x, a, b).unwrap();
                    // Once the CDF saturates, the double p no longer carries
                    // enough information for any inverse to recover x.
                    if p < 1e-10 || p > 1.0 - 1e-10 {
                        continue;
                    }
                    let back = beta_quantile(p, a, b).unwrap();
                    close(back, x, 1e-8);
                }
            }
        }
    }

    #[test]
    fn beta_quantile_resolves_tiny_tail_probabilities() {
        // p far below the saturation threshold on the lower side is still
        // exactly invertible because the CDF is relatively accurate there.
        let p = beta_cdf(0.01, 10.0, 0.5).unwrap();
        assert!(p < 1e-18, "expected a tiny tail mass, got {p}");
        close(beta_quantile(p, 10.0, 0.5).unwrap(), 0.01, 1e-10);
    }

    #[test]
    fn beta_quantile_strictly_increasing_in_p() {
        let (a, b) = (2.0, 5.0);
        let mut prev = 0.0;
        for i in 1..40 {
            let p = i as f64 / 40.0;
            let q = beta_quantile(p, a, b).unwrap();
            assert!(q > prev, "quantile not increasing at p={p}");
            prev = q;
        }
    }

    #[test]
    fn normal_quantile_known_values() {
        close(normal_quantile(0.5).unwrap(), 0.0, 1e-15);
        close(normal_quantile(0.975).unwrap(), 1.959_963_984_540_054, 1e-8);
        close(normal_quantile(0.025).unwrap(), -1.959_963_984_540_054, 1e-8);
        close(normal_quantile(0.9).unwrap(), 1.281_551_565_544_600_5, 1e-8);
        close(normal_quantile(0.001).unwrap(), -3.090_232_306_167_813_5, 1e-8);
        close(normal_quantile(1e-10).unwrap(), -6.361_340_902_404_056, 1e-7);
        close(normal_quantile(0.6).unwrap(), 0.253_347_103_135_799_8, 1e-9);
        assert!(normal_quantile(0.0).is_err());
        assert!(normal_quantile(1.0).is_err());
        // antisymmetry
        for &p in &[0.01, 0.2, 0.35, 0.49] {
            close(
                normal_quantile(p).unwrap() + normal_quantile(1.0 - p).unwrap(),
                0.0,
                1e-12,
            );
        }
    }

    #[test]
    fn normal_quantile_matches_cdf_inversion() {
        // Oracle: bisection on the erfc-based normal CDF.
        for &p in &[0.975, 0.8, 0.3, 0.05, 0.012] {
            let (mut lo, mut hi) = (-40.0_f64, 40.0_f64);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if normal_cdf(mid) < p {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            close(normal_quantile(p).unwrap(), 0.5 * (lo + hi), 1e-8);
        }
    }

    #[test]
    fn t_quantile_known_values() {
        close(t_quantile(0.5, 3.0).unwrap(), 0.0, 0.0);
        close(t_quantile(0.975, 3.0).unwrap(), 3.182_446_305_283_71, 1e-8);
        close(t_quantile(0.025, 3.0).unwrap(), -3.182_446_305_283_71, 1e-8);
        close(t_quantile(0.9, 5.0).unwrap(), 1.475_884_048_824_481, 1e-9);
        close(t_quantile(0.975, 97.0).unwrap(), 1.984_723_186_013_985, 1e-9);
        assert!(t_quantile(0.0, 3.0).is_err());
        assert!(t_quantile(0.5, 0.0).is_err());
        // odd in (p − 0.5)
        for &p in &[0.6, 0.75, 0.99] {
            close(
                t_quantile(p, 7.0).unwrap() + t_quantile(1.0 - p, 7.0).unwrap(),
                0.0,
                1e-12,
            );
        }
    }

    #[test]
    fn gamma_and_chi_square_values() {
        close(gamma_p(0.5, 4.0).unwrap(), 0.995_322_265_018_952_7, 1e-13);
        close(chi_square_sf(3.0, 2.0).unwrap(), 0.223_130_160_148_429_8, 1e-13);
        close(chi_square_sf(10.0, 4.0).unwrap(), 0.040_427_681_994_512_79, 1e-13);
        close(gamma_p(2.0, 0.0).unwrap(), 0.0, 0.0);
        close(gamma_q(2.0, 0.0).unwrap(), 1.0, 0.0);
        for &x in &[0.1, 1.0, 7.3] {
            close(gamma_p(1.7, x).unwrap() + gamma_q(1.7, x).unwrap(), 1.0, 1e-14);
        }
    }

    #[test]
    fn normal_cdf_values() {
        close(normal_cdf(0.0), 0.5, 1e-15);
        close(normal_cdf(1.5), 0.933_192_798_731_141_9, 1e-13);
        close(normal_cdf(-2.3), 0.010_724_110_021_675_809, 1e-13);
    }

    #[test]
    fn kolmogorov_sf_values() {
        close(kolmogorov_sf(1.0), 0.269_999_671_677_354_56, 1e-12);
        close(kolmogorov_sf(0.5), 0.963_945_243_664_875_1, 1e-12);
        close(kolmogorov_sf(2.0), 6.709_252_557_796_953e-4, 1e-12);
        assert_eq!(kolmogorov_sf(0.0), 1.0);
    }
}
