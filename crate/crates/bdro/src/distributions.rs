//! Seeded sampling primitives and numerically stable statistics.
//!
//! Samplers are deterministic functions of their parameters and an explicit
//! [`RandomStream`]: exponential draws use the inverse cdf, gamma draws use
//! Marsaglia–Tsang, truncated normal draws use rejection from the parent
//! normal with an inverse-cdf fallback when the acceptance region is small.
//! [`log_mean_exp`] is the shift-by-max evaluation of `s·ln((1/n)Σ e^{v_i/s})`
//! that the worst-case functionals in [`crate::robust`] depend on.

use crate::stream::RandomStream;
use thiserror::Error;

/// Errors raised by sampling and statistics primitives.
#[derive(Debug, Error)]
pub enum DistributionError {
    #[error("{name} must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },
    #[error("{what} must be non-empty")]
    EmptyInput { what: &'static str },
}

/// Density of the standard normal.
pub fn standard_normal_pdf(z: f64) -> f64 {
    const LOG_INV_SQRT_2PI: f64 = -0.9189385332046727;
    (LOG_INV_SQRT_2PI - 0.5 * z * z).exp()
}

/// Cumulative distribution function of the standard normal.
pub fn standard_normal_cdf(z: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(-z / std::f64::consts::SQRT_2)
}

/// Inverse cdf of the standard normal (Acklam's rational approximation
/// polished by one Newton step).
pub fn standard_normal_quantile(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "quantile needs p in (0,1), got {p}");

    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.383577518672690e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;

    let x = if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };

    let err = standard_normal_cdf(x) - p;
    x - err / standard_normal_pdf(x)
}

/// Inverse cdf of the exponential distribution: `-ln(1-u)/rate`.
pub fn exponential_quantile(rate: f64, u: f64) -> f64 {
    -(1.0 - u).ln() / rate
}

fn require_positive(name: &'static str, value: f64) -> Result<(), DistributionError> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(DistributionError::NonPositiveParameter { name, value })
    }
}

/// Draw from Exp(`rate`) by inverse cdf.
pub fn sample_exponential(
    rate: f64,
    stream: &mut RandomStream,
) -> Result<f64, DistributionError> {
    require_positive("rate", rate)?;
    Ok(exponential_quantile(rate, stream.uniform()))
}

fn sample_standard_normal(stream: &mut RandomStream) -> f64 {
    standard_normal_quantile(stream.uniform())
}

/// Draw from Gamma(`shape`, `rate`) (mean `shape/rate`) via Marsaglia–Tsang.
pub fn sample_gamma(
    shape: f64,
    rate: f64,
    stream: &mut RandomStream,
) -> Result<f64, DistributionError> {
    require_positive("shape", shape)?;
    require_positive("rate", rate)?;

    if shape < 1.0 {
        // boost: Gamma(a) = Gamma(a+1) * U^(1/a)
        let u = stream.uniform();
        let g = sample_gamma(shape + 1.0, rate, stream)?;
        return Ok(g * u.powf(1.0 / shape));
    }

    let d = shape - 1.0 / 3.0;
    let c = 1.0 / (9.0 * d).sqrt();
    loop {
        let x = sample_standard_normal(stream);
        let t = 1.0 + c * x;
        if t <= 0.0 {
            continue;
        }
        let v = t * t * t;
        let u = stream.uniform();
        let x2 = x * x;
        if u < 1.0 - 0.0331 * x2 * x2 {
            return Ok(d * v / rate);
        }
        if u.ln() < 0.5 * x2 + d * (1.0 - v + v.ln()) {
            return Ok(d * v / rate);
        }
    }
}

/// Draw from N(`mean`, `std`²) conditioned on the value exceeding `lower`.
///
/// Rejection from the parent normal while the acceptance probability is at
/// least 10%, inverse cdf of the truncated law otherwise.
pub fn sample_truncated_normal(
    mean: f64,
    std: f64,
    lower: f64,
    stream: &mut RandomStream,
) -> Result<f64, DistributionError> {
    require_positive("std", std)?;
    if lower == f64::NEG_INFINITY {
        return Ok(mean + std * sample_standard_normal(stream));
    }
    let alpha = (lower - mean) / std;
    let accept = 1.0 - standard_normal_cdf(alpha);
    if accept >= 0.1 {
        loop {
            let z = sample_standard_normal(stream);
            let x = mean + std * z;
            if x > lower {
                return Ok(x);
            }
        }
    }
    let p_lower = standard_normal_cdf(alpha);
    let p = p_lower + stream.uniform() * (1.0 - p_lower);
    Ok(mean + std * standard_normal_quantile(p.min(1.0 - f64::EPSILON)))
}

/// Draw a probability vector from Dirichlet(`alphas`) via normalized gammas.
pub fn sample_dirichlet(
    alphas: &[f64],
    stream: &mut RandomStream,
) -> Result<Vec<f64>, DistributionError> {
    if alphas.is_empty() {
        return Err(DistributionError::EmptyInput { what: "alphas" });
    }
    for &a in alphas {
        require_positive("alpha", a)?;
    }
    if alphas.len() == 1 {
        return Ok(vec![1.0]);
    }
    let mut draws = Vec::with_capacity(alphas.len());
    let mut total = 0.0;
    for &a in alphas {
        let g = sample_gamma(a, 1.0, stream)?;
        total += g;
        draws.push(g);
    }
    for g in &mut draws {
        *g /= total;
    }
    Ok(draws)
}

/// `scale * ln((1/n) Σ exp(v_i / scale))`, shifted by the maximum so it never
/// overflows for finite inputs.
pub fn log_mean_exp(values: &[f64], scale: f64) -> Result<f64, DistributionError> {
    if values.is_empty() {
        return Err(DistributionError::EmptyInput { what: "values" });
    }
    require_positive("scale", scale)?;
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    if max == min {
        return Ok(max);
    }
    let sum: f64 = values.iter().map(|&v| ((v - max) / scale).exp()).sum();
    Ok(max + scale * (sum / values.len() as f64).ln())
}

/// A right-continuous step function with jumps at sorted data points.
#[derive(Debug, Clone)]
pub struct StepCdf {
    points: Vec<f64>,
    cumulative: Vec<f64>,
}

impl StepCdf {
    /// Sorted distinct jump locations.
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Cumulative probability at each jump; the final entry is exactly 1.
    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    /// Evaluate the cdf at `x`.
    pub fn evaluate(&self, x: f64) -> f64 {
        match self.points.partition_point(|&p| p <= x) {
            0 => 0.0,
            k => self.cumulative[k - 1],
        }
    }
}

/// Empirical cdf of `data`: jumps of `1/N` at each point, ties accumulated.
pub fn empirical_cdf(data: &[f64]) -> Result<StepCdf, DistributionError> {
    if data.is_empty() {
        return Err(DistributionError::EmptyInput { what: "data" });
    }
    let mut sorted = data.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("data must not contain NaN"));
    let n = sorted.len();
    let mut points = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for &x in &sorted {
        if points.last() == Some(&x) {
            *counts.last_mut().expect("counts tracks points") += 1;
        } else {
            points.push(x);
            counts.push(1);
        }
    }
    let mut running = 0usize;
    let cumulative = counts
        .iter()
        .map(|&c| {
            running += c;
            running as f64 / n as f64
        })
        .collect();
    Ok(StepCdf { points, cumulative })
}
