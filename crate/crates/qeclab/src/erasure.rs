//! Erasure channels and the rank-based optimal erasure decoder.
//!
//! An erasure at site `i` replaces the qubit by a maximally mixed state,
//! which is equivalent to applying `I`, `X`, `Y`, or `Z` at `i` with equal
//! weight. Every error on the erased region is a product of single-site
//! `Z_i` and `X_i` factors, so its commutators with the stabilizers and
//! logical generators are sums of rows of one generating matrix. The rank
//! deficit of that matrix relative to its stabilizer block counts the
//! logical directions that decoding cannot distinguish.

use crate::code::SubsystemCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, RowReduction};
use crate::pauli::PauliOperator;
use rand::Rng;
use std::collections::HashMap;

/// How erased sites are drawn.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ErasureModel {
    /// A uniformly random subset of exactly `n_e` sites.
    FixedFraction { n_e: usize },
    /// Each site erased independently with probability `e`.
    Iid { e: f64 },
    /// Sites `{r, r + spacing, ...}` with a uniformly random offset `r`.
    Regular { spacing: usize },
}

impl ErasureModel {
    /// Identifier used in configs and result tables.
    pub fn kind_name(&self) -> &'static str {
        match self {
            ErasureModel::FixedFraction { .. } => "fixed",
            ErasureModel::Iid { .. } => "iid",
            ErasureModel::Regular { .. } => "regular",
        }
    }

    /// The model's single numeric parameter, for result tables.
    pub fn parameter(&self) -> f64 {
        match *self {
            ErasureModel::FixedFraction { n_e } => n_e as f64,
            ErasureModel::Iid { e } => e,
            ErasureModel::Regular { spacing } => spacing as f64,
        }
    }

    /// Check the model against a system size.
    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        match *self {
            ErasureModel::FixedFraction { n_e } => {
                if n_e > n_qubits {
                    return Err(Error::InvalidArgument(format!(
                        "cannot erase {n_e} of {n_qubits} sites"
                    )));
                }
            }
            ErasureModel::Iid { e } => {
                if !(0.0..=1.0).contains(&e) {
                    return Err(Error::InvalidArgument(format!(
                        "erasure probability {e} outside [0, 1]"
                    )));
                }
            }
            ErasureModel::Regular { spacing } => {
                if spacing == 0 || n_qubits % spacing != 0 {
                    return Err(Error::InvalidArgument(format!(
                        "regular spacing {spacing} must divide the qubit count {n_qubits}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The number of sites erased by a fixed fraction `e` of `n` qubits.
///
/// Truncates toward zero with a tiny nudge so exact products like
/// `(1/4) * 16` are not pulled down by floating-point representation.
pub fn fraction_to_count(e: f64, n: usize) -> usize {
    ((e * n as f64) + 1e-9).floor() as usize
}

/// A concrete set of erased sites, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErasurePattern {
    sites: Vec<usize>,
}

impl ErasurePattern {
    /// Build a pattern from arbitrary site indices, all below `n_qubits`.
    pub fn new(mut sites: Vec<usize>, n_qubits: usize) -> Result<Self> {
        sites.sort_unstable();
        for w in sites.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidArgument(format!(
                    "duplicate erased site {}",
                    w[0]
                )));
            }
        }
        if let Some(&last) = sites.last() {
            if last >= n_qubits {
                return Err(Error::InvalidArgument(format!(
                    "erased site {last} outside a {n_qubits}-qubit system"
                )));
            }
        }
        Ok(ErasurePattern { sites })
    }

    pub fn empty() -> Self {
        ErasurePattern { sites: Vec::new() }
    }

    /// Erased sites in ascending order.
    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    /// Number of erased sites.
    pub fn n_erased(&self) -> usize {
        self.sites.len()
    }
}

/// Draw an erasure pattern from a model.
pub fn sample_erasure<R: Rng + ?Sized>(
    model: ErasureModel,
    n_qubits: usize,
    rng: &mut R,
) -> Result<ErasurePattern> {
    model.validate(n_qubits)?;
    let sites = match model {
        ErasureModel::FixedFraction { n_e } => {
            rand::seq::index::sample(rng, n_qubits, n_e).into_vec()
        }
        ErasureModel::Iid { e } => (0..n_qubits).filter(|_| rng.gen_bool(e)).collect(),
        ErasureModel::Regular { spacing } => {
            let offset = rng.gen_range(0..spacing);
            (0..n_qubits / spacing).map(|t| offset + t * spacing).collect()
        }
    };
    ErasurePattern::new(sites, n_qubits)
}

/// Generating matrix of the errors supported on an erased region.
///
/// Row `2j` is the commutator vector of `Z` at the `j`-th erased site, row
/// `2j + 1` the one of `X` there. The first `stabilizer_columns` columns
/// hold commutators with the stabilizers; the rest pair up per logical
/// qubit as (X-generator, Z-generator). Gauge generators contribute no
/// columns: errors acting only on gauge qubits are harmless.
#[derive(Clone, Debug)]
pub struct SyndromeMatrix {
    matrix: BitMatrix,
    stabilizer_columns: usize,
}

impl SyndromeMatrix {
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// Column count of the stabilizer block (boundary of the split).
    pub fn stabilizer_columns(&self) -> usize {
        self.stabilizer_columns
    }

    /// `(rank of stabilizer block, rank of full matrix)` in one reduction.
    pub fn ranks(&self) -> (usize, usize) {
        self.matrix.rank_pair(self.stabilizer_columns)
    }
}

/// Build the generating matrix for a code and an erasure pattern.
pub fn syndrome_matrix(code: &SubsystemCode, pattern: &ErasurePattern) -> SyndromeMatrix {
    let n_s = code.stabilizer_count();
    let k = code.logical_count();
    let cols = n_s + 2 * k;
    let mut matrix = BitMatrix::new(cols);
    for &site in pattern.sites() {
        debug_assert!(site < code.n_qubits());
        // Z_site anticommutes with operators that have an X factor at the
        // site; X_site with those that have a Z factor.
        let mut row_z = BitVector::zeros(cols);
        let mut row_x = BitVector::zeros(cols);
        for (j, stab) in code.stabilizers().iter().enumerate() {
            row_z.set(j, stab.x_bit(site));
            row_x.set(j, stab.z_bit(site));
        }
        for (m, pair) in code.logical_pairs().iter().enumerate() {
            row_z.set(n_s + 2 * m, pair.x.x_bit(site));
            row_z.set(n_s + 2 * m + 1, pair.z.x_bit(site));
            row_x.set(n_s + 2 * m, pair.x.z_bit(site));
            row_x.set(n_s + 2 * m + 1, pair.z.z_bit(site));
        }
        matrix.push_row(row_z);
        matrix.push_row(row_x);
    }
    SyndromeMatrix {
        matrix,
        stabilizer_columns: n_s,
    }
}

/// Outcome of optimal decoding against one erasure pattern.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Recovery {
    /// Number of logical directions the erased region can corrupt
    /// invisibly: `rank(M) - rank(M_S)`.
    pub r_m: usize,
    /// Probability that optimal decoding restores all logical content,
    /// `2^(-r_m)`.
    pub probability: f64,
    /// Coherent information `k - r_m` of the erasure channel.
    pub coherent_information: i64,
}

/// Optimal recovery probability for a pattern, via the rank deficit.
pub fn recovery_probability(code: &SubsystemCode, pattern: &ErasurePattern) -> Recovery {
    let sm = syndrome_matrix(code, pattern);
    let (rank_s, rank_full) = sm.ranks();
    let r_m = rank_full - rank_s;
    Recovery {
        r_m,
        probability: 0.5f64.powi(r_m as i32),
        coherent_information: code.logical_count() as i64 - r_m as i64,
    }
}

/// Exhaustive recovery oracle: enumerate all `4^{n_e}` errors on the
/// erased sites, group them by syndrome and by logical action, and sum the
/// best-guess weight per syndrome. Exactly equals `recovery_probability`
/// but costs `4^{n_e}`; refuses more than 8 erased sites.
pub fn brute_force_recovery(code: &SubsystemCode, pattern: &ErasurePattern) -> Result<f64> {
    let n_e = pattern.n_erased();
    if n_e > 8 {
        return Err(Error::ResourceLimit(format!(
            "brute-force recovery enumerates 4^{n_e} errors; limit is 8 erased sites"
        )));
    }
    let sm = syndrome_matrix(code, pattern);
    let n_s = sm.stabilizer_columns();
    let cols = sm.matrix().n_cols();
    let total: u64 = 1 << (2 * n_e);
    // counts[syndrome][logical action] = number of errors.
    let mut counts: HashMap<BitVector, HashMap<BitVector, u64>> = HashMap::new();
    for t in 0..total {
        let mut v = BitVector::zeros(cols);
        for j in 0..n_e {
            // Two bits per site: low bit applies Z, high bit applies X;
            // both together are the Y error. Commutator vectors add.
            if (t >> (2 * j)) & 1 == 1 {
                v.xor_assign(sm.matrix().row(2 * j));
            }
            if (t >> (2 * j)) & 2 == 2 {
                v.xor_assign(sm.matrix().row(2 * j + 1));
            }
        }
        let mut syndrome = BitVector::zeros(n_s);
        for c in 0..n_s {
            syndrome.set(c, v.get(c));
        }
        let mut action = BitVector::zeros(cols - n_s);
        for c in n_s..cols {
            action.set(c - n_s, v.get(c));
        }
        *counts
            .entry(syndrome)
            .or_default()
            .entry(action)
            .or_insert(0) += 1;
    }
    let recovered: u64 = counts
        .values()
        .map(|classes| classes.values().copied().max().unwrap_or(0))
        .sum();
    Ok(recovered as f64 / total as f64)
}

/// Per-probe decoding damage.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeFailure {
    /// Rank of the undetectable-error span projected onto this logical
    /// pair's two generator coordinates: 0 (untouched), 1, or 2.
    pub d: u8,
    /// Whether the probe loses any mutual information with the system.
    pub flagged: bool,
}

/// For each probed logical pair, measure how much of it the erased region
/// can corrupt without leaving a syndrome.
///
/// The undetectable errors are the row combinations of the generating
/// matrix that vanish on the stabilizer block; their logical-column images
/// span the damage. Probe `i` reads the rank of that span restricted to
/// its own two columns.
pub fn probe_failures(
    code: &SubsystemCode,
    pattern: &ErasurePattern,
    probes: &[usize],
) -> Result<Vec<ProbeFailure>> {
    let k = code.logical_count();
    for &p in probes {
        if p >= k {
            return Err(Error::InvalidArgument(format!(
                "probe {p} out of range for {k} logical pairs"
            )));
        }
    }
    let sm = syndrome_matrix(code, pattern);
    let n_s = sm.stabilizer_columns();
    let rows = sm.matrix().n_rows();

    // Left kernel of the stabilizer block: combinations of error rows with
    // zero syndrome.
    let stab_block = sm.matrix().restricted_to_columns(&(0..n_s).collect::<Vec<_>>());
    let reduction = RowReduction::new(&stab_block);
    let mut damage = BitMatrix::new(2 * k);
    for r in reduction.rank()..rows {
        let combo = reduction.combination.row(r);
        let mut image = BitVector::zeros(2 * k);
        for row_idx in 0..rows {
            if combo.get(row_idx) {
                let row = sm.matrix().row(row_idx);
                for c in 0..2 * k {
                    if row.get(n_s + c) {
                        image.flip(c);
                    }
                }
            }
        }
        damage.push_row(image);
    }
    debug_assert_eq!(damage.rank(), {
        let (rank_s, rank_full) = sm.ranks();
        rank_full - rank_s
    });

    Ok(probes
        .iter()
        .map(|&p| {
            let d = damage.restricted_to_columns(&[2 * p, 2 * p + 1]).rank() as u8;
            ProbeFailure {
                d,
                flagged: d > 0,
            }
        })
        .collect())
}

/// Commutator bits of an operator against every stabilizer, in order.
pub fn pauli_syndrome(code: &SubsystemCode, op: &PauliOperator) -> BitVector {
    let mut syndrome = BitVector::zeros(code.stabilizer_count());
    for (j, stab) in code.stabilizers().iter().enumerate() {
        syndrome.set(j, op.symplectic_product(stab) == 1);
    }
    syndrome
}

/// Find a Hermitian Pauli supported on the erased sites that produces the
/// requested syndrome, by solving over the generating matrix's stabilizer
/// block. Errors if the syndrome cannot arise from this pattern.
pub fn most_likely_correction(
    code: &SubsystemCode,
    pattern: &ErasurePattern,
    syndrome: &BitVector,
) -> Result<PauliOperator> {
    let n_s = code.stabilizer_count();
    if syndrome.len() != n_s {
        return Err(Error::InvalidArgument(format!(
            "syndrome has {} bits, expected {n_s}",
            syndrome.len()
        )));
    }
    let sm = syndrome_matrix(code, pattern);
    let stab_block = sm.matrix().restricted_to_columns(&(0..n_s).collect::<Vec<_>>());
    let reduction = RowReduction::new(&stab_block);
    let combo = reduction.solve(syndrome).ok_or_else(|| {
        Error::NoSolution("syndrome is not reachable from the erased region".into())
    })?;
    let n = code.n_qubits();
    let mut x = BitVector::zeros(n);
    let mut z = BitVector::zeros(n);
    for (j, &site) in pattern.sites().iter().enumerate() {
        if combo.get(2 * j) {
            z.flip(site);
        }
        if combo.get(2 * j + 1) {
            x.flip(site);
        }
    }
    Ok(PauliOperator::from_parts(x, z, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{apply_random_circuit, Ensemble, Geometry};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn scrambled_code(n: usize, logical_sites: &[usize], depth: usize, seed: u64) -> SubsystemCode {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut code = SubsystemCode::trivial(n, logical_sites);
        let geometry = Geometry::Chain1D { n };
        apply_random_circuit(&mut code, &geometry, Ensemble::Clifford2Q, depth, &mut rng);
        code
    }

    #[test]
    fn fixed_fraction_zero_is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let p = sample_erasure(ErasureModel::FixedFraction { n_e: 0 }, 8, &mut rng).unwrap();
        assert_eq!(p.n_erased(), 0);
        assert_eq!(p.sites(), &[] as &[usize]);
    }

    #[test]
    fn fixed_fraction_draws_exact_sorted_subsets() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let p = sample_erasure(ErasureModel::FixedFraction { n_e: 3 }, 8, &mut rng).unwrap();
            assert_eq!(p.n_erased(), 3);
            assert!(p.sites().windows(2).all(|w| w[0] < w[1]));
            assert!(p.sites().iter().all(|&s| s < 8));
        }
    }

    #[test]
    fn regular_spacing_four_gives_four_patterns() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..200 {
            let p = sample_erasure(ErasureModel::Regular { spacing: 4 }, 16, &mut rng).unwrap();
            assert_eq!(p.n_erased(), 4);
            let offset = p.sites()[0];
            assert!(offset < 4);
            let expect: Vec<usize> = (0..4).map(|t| offset + 4 * t).collect();
            assert_eq!(p.sites(), expect.as_slice());
            seen.insert(offset);
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn iid_mean_matches_binomial() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (n, e, trials) = (50usize, 0.3f64, 100_000usize);
        let mut total = 0usize;
        for _ in 0..trials {
            total += sample_erasure(ErasureModel::Iid { e }, n, &mut rng)
                .unwrap()
                .n_erased();
        }
        let mean = total as f64 / trials as f64;
        let sigma = (n as f64 * e * (1.0 - e) / trials as f64).sqrt();
        assert!(
            (mean - n as f64 * e).abs() < 3.0 * sigma,
            "mean {mean} too far from {}",
            n as f64 * e
        );
    }

    #[test]
    fn invalid_models_are_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(sample_erasure(ErasureModel::FixedFraction { n_e: 9 }, 8, &mut rng).is_err());
        assert!(sample_erasure(ErasureModel::Regular { spacing: 3 }, 16, &mut rng).is_err());
        assert!(sample_erasure(ErasureModel::Iid { e: 1.5 }, 8, &mut rng).is_err());
        assert!(ErasurePattern::new(vec![1, 1], 4).is_err());
        assert!(ErasurePattern::new(vec![4], 4).is_err());
    }

    #[test]
    fn fraction_rounding_truncates_with_nudge() {
        assert_eq!(fraction_to_count(0.25, 16), 4);
        assert_eq!(fraction_to_count(1.0 / 8.0, 12), 1);
        assert_eq!(fraction_to_count(3.0 / 8.0, 12), 4);
        assert_eq!(fraction_to_count(0.0, 64), 0);
        assert_eq!(fraction_to_count(1.0, 64), 64);
    }

    #[test]
    fn syndrome_matrix_on_the_unscrambled_code() {
        let code = SubsystemCode::trivial(4, &[1]);
        // Stabilizers are Z at sites 0, 2, 3 in that order.
        let sm = syndrome_matrix(&code, &ErasurePattern::new(vec![0], 4).unwrap());
        assert_eq!(sm.matrix().n_rows(), 2);
        assert_eq!(sm.matrix().n_cols(), 3 + 2);
        assert!(sm.matrix().row(0).is_zero(), "Z_0 commutes with everything");
        let x_row = sm.matrix().row(1);
        assert!(x_row.get(0) && !x_row.get(1) && !x_row.get(2));
        assert!(!x_row.get(3) && !x_row.get(4));

        let sm = syndrome_matrix(&code, &ErasurePattern::new(vec![1], 4).unwrap());
        let (z_row, x_row) = (sm.matrix().row(0), sm.matrix().row(1));
        for c in 0..3 {
            assert!(!z_row.get(c) && !x_row.get(c), "stabilizer block is zero");
        }
        // Z_1 anticommutes with the X generator, X_1 with the Z generator.
        assert!(z_row.get(3) && !z_row.get(4));
        assert!(!x_row.get(3) && x_row.get(4));

        let sm = syndrome_matrix(&code, &ErasurePattern::empty());
        assert_eq!(sm.matrix().n_rows(), 0);
    }

    #[test]
    fn recovery_probability_on_plain_patterns() {
        let code = SubsystemCode::trivial(5, &[2]);
        let nothing = recovery_probability(&code, &ErasurePattern::empty());
        assert_eq!(nothing.r_m, 0);
        assert_eq!(nothing.probability, 1.0);
        assert_eq!(nothing.coherent_information, 1);

        let logical = recovery_probability(&code, &ErasurePattern::new(vec![2], 5).unwrap());
        assert_eq!(logical.r_m, 2);
        assert_eq!(logical.probability, 0.25);
        assert_eq!(logical.coherent_information, -1);

        let stab = recovery_probability(&code, &ErasurePattern::new(vec![0], 5).unwrap());
        assert_eq!(stab.r_m, 0);
        assert_eq!(stab.probability, 1.0);
    }

    #[test]
    fn zero_logical_codes_always_recover() {
        let code = scrambled_code(6, &[], 4, 10);
        let everything = ErasurePattern::new((0..6).collect(), 6).unwrap();
        let rec = recovery_probability(&code, &everything);
        assert_eq!(rec.r_m, 0);
        assert_eq!(rec.probability, 1.0);
    }

    #[test]
    fn brute_force_matches_rank_formula_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..60u64 {
            let code = scrambled_code(6, &[1, 4], 3, seed);
            let n_e = 1 + (seed as usize % 3);
            let pattern =
                sample_erasure(ErasureModel::FixedFraction { n_e }, 6, &mut rng).unwrap();
            let exact = brute_force_recovery(&code, &pattern).unwrap();
            let fast = recovery_probability(&code, &pattern).probability;
            assert_eq!(exact, fast, "seed {seed}, sites {:?}", pattern.sites());
        }
    }

    #[test]
    fn brute_force_edge_cases() {
        let code = SubsystemCode::trivial(4, &[3]);
        assert_eq!(
            brute_force_recovery(&code, &ErasurePattern::empty()).unwrap(),
            1.0
        );
        assert_eq!(
            brute_force_recovery(&code, &ErasurePattern::new(vec![3], 4).unwrap()).unwrap(),
            0.25
        );
        let wide = ErasurePattern::new((0..9).collect(), 16).unwrap();
        assert!(matches!(
            brute_force_recovery(&SubsystemCode::trivial(16, &[0]), &wide),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn adding_erasures_never_helps() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for seed in 0..30u64 {
            let code = scrambled_code(8, &[2, 5], 4, 100 + seed);
            let mut sites: Vec<usize> = Vec::new();
            let mut last = recovery_probability(&code, &ErasurePattern::empty());
            for _ in 0..4 {
                loop {
                    let s = rng.gen_range(0..8);
                    if !sites.contains(&s) {
                        sites.push(s);
                        break;
                    }
                }
                let rec =
                    recovery_probability(&code, &ErasurePattern::new(sites.clone(), 8).unwrap());
                assert!(rec.r_m >= last.r_m, "r_m dropped when erasing more");
                assert!(rec.probability <= last.probability);
                last = rec;
            }
        }
    }

    #[test]
    fn probe_flags_on_the_unscrambled_code() {
        let code = SubsystemCode::trivial(6, &[1, 4]);
        let hit = probe_failures(&code, &ErasurePattern::new(vec![1], 6).unwrap(), &[0, 1])
            .unwrap();
        assert_eq!(hit[0], ProbeFailure { d: 2, flagged: true });
        assert_eq!(hit[1], ProbeFailure { d: 0, flagged: false });

        let miss = probe_failures(&code, &ErasurePattern::new(vec![0, 2], 6).unwrap(), &[0, 1])
            .unwrap();
        assert!(miss.iter().all(|p| !p.flagged && p.d == 0));
    }

    #[test]
    fn probe_flags_follow_recovery() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for seed in 0..40u64 {
            let code = scrambled_code(8, &[1, 6], 4, 200 + seed);
            let pattern =
                sample_erasure(ErasureModel::FixedFraction { n_e: 3 }, 8, &mut rng).unwrap();
            let rec = recovery_probability(&code, &pattern);
            let probes = probe_failures(&code, &pattern, &[0, 1]).unwrap();
            if rec.probability == 1.0 {
                assert!(probes.iter().all(|p| !p.flagged));
            }
            let total: u8 = probes.iter().map(|p| p.d).sum();
            assert!(total as usize >= rec.r_m.min(2), "damage must show up somewhere");
        }
    }

    #[test]
    fn probe_index_out_of_range_errors() {
        let code = SubsystemCode::trivial(4, &[0]);
        assert!(matches!(
            probe_failures(&code, &ErasurePattern::empty(), &[1]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn corrections_reproduce_their_syndrome() {
        let code = SubsystemCode::trivial(4, &[1]);
        let pattern = ErasurePattern::new(vec![0], 4).unwrap();
        // An X error on erased site 0 flips stabilizer 0.
        let mut syndrome = BitVector::zeros(3);
        syndrome.set(0, true);
        let fix = most_likely_correction(&code, &pattern, &syndrome).unwrap();
        assert_eq!(pauli_syndrome(&code, &fix), syndrome);
        assert!(fix.x_bit(0));

        let zero = BitVector::zeros(3);
        let id_fix = most_likely_correction(&code, &pattern, &zero).unwrap();
        assert_eq!(pauli_syndrome(&code, &id_fix), zero);
    }

    #[test]
    fn corrections_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for seed in 0..40u64 {
            let code = scrambled_code(8, &[3], 4, 300 + seed);
            let pattern =
                sample_erasure(ErasureModel::FixedFraction { n_e: 3 }, 8, &mut rng).unwrap();
            // Apply a random error supported on the pattern and ask the
            // decoder to match its syndrome.
            let mut x = BitVector::zeros(8);
            let mut z = BitVector::zeros(8);
            for &site in pattern.sites() {
                if rng.gen::<bool>() {
                    x.flip(site);
                }
                if rng.gen::<bool>() {
                    z.flip(site);
                }
            }
            let error = PauliOperator::from_parts(x, z, 0);
            let syndrome = pauli_syndrome(&code, &error);
            let fix = most_likely_correction(&code, &pattern, &syndrome).unwrap();
            assert_eq!(pauli_syndrome(&code, &fix), syndrome);
            for site in 0..8 {
                if !pattern.sites().contains(&site) {
                    assert_eq!(fix.letter_index(site), 0, "support outside the pattern");
                }
            }
        }
    }

    #[test]
    fn unreachable_syndrome_is_an_error() {
        let code = SubsystemCode::trivial(4, &[1]);
        // Erasing the logical site cannot trip any stabilizer.
        let pattern = ErasurePattern::new(vec![1], 4).unwrap();
        let mut syndrome = BitVector::zeros(3);
        syndrome.set(1, true);
        assert!(matches!(
            most_likely_correction(&code, &pattern, &syndrome),
            Err(Error::NoSolution(_))
        ));
    }
}
