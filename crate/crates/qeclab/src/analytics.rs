//! Closed-form predictions for erasure recovery under the random-matrix
//! model: rank-distribution sums, the critical recovery constant, asymptotic
//! failure branches, iid-erasure scaling, the block-model bound, and the
//! minimal-surface estimate.
//!
//! Raw counts like `2^{2 n_e n_s}` overflow anything fixed-width almost
//! immediately, so every combinatorial quantity here is carried in the
//! log2 domain and only exponentiated at the end.

use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Bits at which `-log2 P(F)` is capped when the failure probability
/// underflows (for example, zero erasures never fail).
pub const FAILURE_BITS_CAP: f64 = 128.0;

/// Erasure/stabilizer counts for the random-matrix predictions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RmtParams {
    pub n_e: usize,
    pub n_s: usize,
}

impl RmtParams {
    /// Signed distance from the critical point, `2 n_e - n_s`.
    pub fn delta(&self) -> i64 {
        2 * self.n_e as i64 - self.n_s as i64
    }
}

/// Critical erasure rate of an optimal rate-`r` code, `(1 - r) / 2`.
pub fn capacity_erasure_rate(r: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&r), "rate {r} outside [0, 1]");
    (1.0 - r) / 2.0
}

/// log2 of the number of `a x b` binary matrices of rank `m`:
/// `prod_{k<m} (2^a - 2^k)(2^b - 2^k) / (2^m - 2^k)`, term by term in the
/// log domain.
pub fn count_rank_matrices_log2(a: usize, b: usize, m: usize) -> Result<f64> {
    if m > a.min(b) {
        return Err(Error::InvalidArgument(format!(
            "rank {m} impossible for a {a}x{b} matrix"
        )));
    }
    // log2(2^n - 2^k) = n + log2(1 - 2^{k-n}), with k < n throughout.
    let shifted = |n: usize, k: usize| n as f64 + (1.0 - exp2i(k as i64 - n as i64)).log2();
    let mut total = 0.0;
    for k in 0..m {
        total += shifted(a, k) + shifted(b, k) - shifted(m, k);
    }
    Ok(total)
}

#[inline]
fn exp2i(e: i64) -> f64 {
    (e as f64).exp2()
}

/// Average recovery probability when the erased-region error matrix is
/// modeled as uniformly random: `sum_m P[rank = m] * 2^{m - 2 n_e}`.
pub fn rmt_recovery(n_e: usize, n_s: usize) -> f64 {
    let rows = 2 * n_e;
    let mut p = 0.0;
    for m in 0..=rows.min(n_s) {
        let log2_count = count_rank_matrices_log2(rows, n_s, m).expect("m is within range");
        p += (log2_count - (rows * n_s) as f64 + m as f64 - rows as f64).exp2();
    }
    debug_assert!(p <= 1.0 + 1e-9, "recovery sum {p} above 1");
    p.min(1.0)
}

/// log2 of the average failure probability, `-inf` when failure is
/// impossible. Summing `P[rank = m] * (1 - 2^{m - 2 n_e})` keeps every
/// term positive, so tiny failure probabilities suffer no cancellation.
pub fn rmt_failure_log2(n_e: usize, n_s: usize) -> f64 {
    let rows = 2 * n_e;
    let mut term_logs = Vec::new();
    for m in 0..=rows.min(n_s) {
        if m == rows {
            continue; // full-rank errors are always identified
        }
        let log2_count = count_rank_matrices_log2(rows, n_s, m).expect("m is within range");
        let log2_miss = (1.0 - exp2i(m as i64 - rows as i64)).log2();
        term_logs.push(log2_count - (rows * n_s) as f64 + log2_miss);
    }
    let Some(max) = term_logs.iter().copied().reduce(f64::max) else {
        return f64::NEG_INFINITY;
    };
    max + term_logs.iter().map(|t| (t - max).exp2()).sum::<f64>().log2()
}

/// Average failure probability under the random-matrix model.
pub fn rmt_failure_exact(n_e: usize, n_s: usize) -> f64 {
    rmt_failure_log2(n_e, n_s).exp2()
}

/// Asymptotic failure probability as a function of the distance
/// `delta = 2 n_e - n_s` from the critical point.
pub fn rmt_failure_asymptotic(delta: i64) -> f64 {
    match delta {
        d if d < 0 => exp2i(d - 1),
        0 => 1.0 - critical_recovery_constant(),
        d => 1.0 - exp2i(-d),
    }
}

/// The critical recovery constant: the convergent of the rank sum at the
/// critical point. Products and the outer sum are truncated at 64 terms;
/// the terms decay like `2^{-m(m+1)}`, leaving error far below 1e-12.
pub fn critical_recovery_constant() -> f64 {
    static R_C: OnceLock<f64> = OnceLock::new();
    *R_C.get_or_init(|| {
        let ln_denom: f64 = (1..=64).map(|k| (1.0 - exp2i(-k)).ln()).sum();
        let mut sum = 0.0;
        for m in 0..=64i64 {
            let ln_numer: f64 = (1..=64).map(|k| 2.0 * (1.0 - exp2i(-(m + k))).ln()).sum();
            sum += (ln_numer - ln_denom).exp() * exp2i(-m * (m + 1));
        }
        sum
    })
}

/// Scaling function for iid erasures:
/// `f(x, e) = sqrt(e(1-e)) [ exp(-x^2/2) / sqrt(pi/2) - x erfc(x / sqrt 2) ]`,
/// where `-<log2 P(F)> ~ sqrt(N) f(x, e)` at
/// `x = (e - e_c) sqrt(N) / sqrt(e(1-e))`.
pub fn iid_scaling(x: f64, e: f64) -> f64 {
    debug_assert!(e > 0.0 && e < 1.0, "erasure rate {e} outside (0, 1)");
    let spread = (e * (1.0 - e)).sqrt();
    let gauss = (-x * x / 2.0).exp() / (std::f64::consts::PI / 2.0).sqrt();
    spread * (gauss - x * libm::erfc(x / std::f64::consts::SQRT_2))
}

/// Exact finite-size average of `-log2 P(F)` over iid erasures: the
/// binomial average of the random-matrix failure, with each term capped at
/// [`FAILURE_BITS_CAP`] bits so impossible failures stay finite.
pub fn iid_failure_exact(n: usize, n_s: usize, e: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&e), "erasure rate {e} outside [0, 1]");
    let bits_at = |n_e: usize| (-rmt_failure_log2(n_e, n_s)).min(FAILURE_BITS_CAP);
    if e == 0.0 {
        return bits_at(0);
    }
    if e == 1.0 {
        return bits_at(n);
    }
    let (ln_e, ln_not) = (e.ln(), (1.0 - e).ln());
    let ln_choose = |k: usize| {
        libm::lgamma(n as f64 + 1.0)
            - libm::lgamma(k as f64 + 1.0)
            - libm::lgamma((n - k) as f64 + 1.0)
    };
    (0..=n)
        .map(|n_e| {
            let ln_pmf = ln_choose(n_e) + n_e as f64 * ln_e + (n - n_e) as f64 * ln_not;
            ln_pmf.exp() * bits_at(n_e)
        })
        .sum()
}

/// Parameters of the uncoupled-blocks bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockModelParams {
    /// Total qubits.
    pub n: usize,
    /// Qubits per block.
    pub n_b: usize,
    /// Erasure rate.
    pub e: f64,
    /// Code rate.
    pub r: f64,
}

impl BlockModelParams {
    pub fn validate(&self) -> Result<()> {
        if self.n_b == 0 || self.n % self.n_b != 0 {
            return Err(Error::InvalidArgument(format!(
                "block size {} must divide the system size {}",
                self.n_b, self.n
            )));
        }
        if !(self.e > 0.0 && self.e < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "erasure rate {} outside (0, 1)",
                self.e
            )));
        }
        Ok(())
    }

    pub fn critical_rate(&self) -> f64 {
        capacity_erasure_rate(self.r)
    }

    /// Standard deviation of the per-block erasure count.
    pub fn sigma_b(&self) -> f64 {
        (self.e * (1.0 - self.e) * self.n_b as f64).sqrt()
    }
}

/// Failure probability when each block of `n_b` qubits is encoded
/// independently:
/// `(N / 2 N_b) * 2^{2(e - e_c) N_b} / (sqrt(2 pi e(1-e) N_b) ln 4)`,
/// clamped to `[0, 1]`. Only valid below threshold.
pub fn block_model_failure(p: BlockModelParams) -> Result<f64> {
    p.validate()?;
    let e_c = p.critical_rate();
    if p.e >= e_c {
        return Err(Error::InvalidArgument(format!(
            "block model needs e < e_c, got e = {} with e_c = {e_c}",
            p.e
        )));
    }
    let excess = (2.0 * (p.e - e_c) * p.n_b as f64).exp2();
    let spread = (2.0 * std::f64::consts::PI * p.e * (1.0 - p.e) * p.n_b as f64).sqrt();
    let per_block = excess / (spread * 4.0f64.ln());
    let failure = p.n as f64 / (2.0 * p.n_b as f64) * per_block;
    Ok(failure.clamp(0.0, 1.0))
}

/// Minimal-surface estimate of the information leaked to the environment:
/// zero below the critical point, `2 n_e - n_s` between the critical point
/// and saturation at `2 n_e = (1 + R) N`, and `2 R N` beyond.
pub fn ising_surface_estimate(n_e: usize, n_s: usize, r: f64, n: usize) -> f64 {
    let rows = 2 * n_e;
    if rows <= n_s {
        0.0
    } else if rows as f64 <= (1.0 + r) * n as f64 {
        (rows - n_s) as f64
    } else {
        2.0 * r * n as f64
    }
}
