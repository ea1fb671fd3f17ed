//! Subsystem-code tableaux: stabilizers, destabilizers, logical pairs, and
//! gauge pairs, with unitary evolution, Pauli measurement, entropies, and a
//! brute-force distance search.
//!
//! The represented state is the maximally mixed state consistent with the
//! signed stabilizers and signed gauge-Z rows: logical pairs are maximally
//! mixed, gauge qubits sit in the eigenstate their gauge-Z signs pick out.
//! Destabilizer rows are a dual frame used only through their bit patterns
//! (`[[destab_i, stab_j]] = δ_ij`); their phases are allowed to drift.

use crate::error::{Error, Result};
use crate::gate::CliffordGate;
use crate::gf2::{BitMatrix, BitVector, RowReduction};
use crate::pauli::PauliOperator;
use rand::Rng;
use std::fmt::Write as _;

/// An anticommuting operator pair `([[x, z]] = 1)` spanning one qubit's worth
/// of algebra, used for both logical and gauge pairs.
#[derive(Clone, Debug)]
pub struct OperatorPair {
    pub x: PauliOperator,
    pub z: PauliOperator,
}

/// What a measurement did to the tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureEffect {
    /// The operator was in the signed span of stabilizers and gauge-Z rows;
    /// nothing changed.
    Deterministic,
    /// Stabilizer row `i` was replaced by the signed measured operator.
    StabilizerUpdated(usize),
    /// The Z member of gauge pair `i` was replaced.
    GaugeZUpdated(usize),
    /// A logical pair was demoted; the measured operator is now the Z member
    /// of the gauge pair at `gauge_index`.
    LogicalDemoted { gauge_index: usize },
}

/// Tableau of an `[[n, k]]` code with `g` gauge pairs and `n - k - g`
/// stabilizers.
#[derive(Clone)]
pub struct SubsystemCode {
    n: usize,
    stabilizers: Vec<PauliOperator>,
    destabilizers: Vec<PauliOperator>,
    logicals: Vec<OperatorPair>,
    gauges: Vec<OperatorPair>,
}

impl SubsystemCode {
    /// Unencoded starting point: `Z_q` stabilizes every site outside
    /// `logical_sites`; each listed site carries one logical pair
    /// `(X_site, Z_site)`. No gauge pairs.
    ///
    /// Panics on duplicate or out-of-range sites.
    pub fn trivial(n: usize, logical_sites: &[usize]) -> Self {
        let mut is_logical = vec![false; n];
        for &s in logical_sites {
            assert!(s < n, "logical site {s} out of range");
            assert!(!is_logical[s], "duplicate logical site {s}");
            is_logical[s] = true;
        }
        let mut stabilizers = Vec::with_capacity(n - logical_sites.len());
        let mut destabilizers = Vec::with_capacity(n - logical_sites.len());
        for q in 0..n {
            if !is_logical[q] {
                stabilizers.push(PauliOperator::single(n, q, 'Z'));
                destabilizers.push(PauliOperator::single(n, q, 'X'));
            }
        }
        let logicals = logical_sites
            .iter()
            .map(|&s| OperatorPair {
                x: PauliOperator::single(n, s, 'X'),
                z: PauliOperator::single(n, s, 'Z'),
            })
            .collect();
        SubsystemCode {
            n,
            stabilizers,
            destabilizers,
            logicals,
            gauges: Vec::new(),
        }
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n
    }

    /// Number of stabilizer generators.
    #[inline]
    pub fn stabilizer_count(&self) -> usize {
        self.stabilizers.len()
    }

    /// Number of logical pairs `k`.
    #[inline]
    pub fn logical_count(&self) -> usize {
        self.logicals.len()
    }

    /// Number of gauge pairs.
    #[inline]
    pub fn gauge_count(&self) -> usize {
        self.gauges.len()
    }

    #[inline]
    pub fn stabilizers(&self) -> &[PauliOperator] {
        &self.stabilizers
    }

    #[inline]
    pub fn destabilizers(&self) -> &[PauliOperator] {
        &self.destabilizers
    }

    #[inline]
    pub fn logical_pairs(&self) -> &[OperatorPair] {
        &self.logicals
    }

    #[inline]
    pub fn gauge_pairs(&self) -> &[OperatorPair] {
        &self.gauges
    }

    fn all_rows_mut(&mut self) -> impl Iterator<Item = &mut PauliOperator> {
        self.stabilizers
            .iter_mut()
            .chain(self.destabilizers.iter_mut())
            .chain(
                self.logicals
                    .iter_mut()
                    .flat_map(|p| [&mut p.x, &mut p.z]),
            )
            .chain(self.gauges.iter_mut().flat_map(|p| [&mut p.x, &mut p.z]))
    }

    /// Conjugate every row by a two-qubit Clifford acting on sites `(a, b)`.
    pub fn apply_gate(&mut self, gate: &CliffordGate, a: usize, b: usize) {
        assert!(a < self.n && b < self.n && a != b, "bad gate sites");
        for row in self.all_rows_mut() {
            gate.apply(row, a, b);
        }
    }

    /// Conjugate the state by a Pauli: rows anticommuting with `p` flip sign.
    pub fn apply_pauli(&mut self, p: &PauliOperator) {
        assert_eq!(p.n_qubits(), self.n, "qubit count mismatch");
        // Split borrows: compute products against a clone of p.
        let p = p.clone();
        for row in self.all_rows_mut() {
            if row.symplectic_product(&p) == 1 {
                row.negate();
            }
        }
    }

    /// Measure a Hermitian Pauli, updating the tableau and returning the
    /// outcome (`+1` or `-1`) together with how the tableau changed.
    ///
    /// Measuring an operator in the signed span of stabilizers and gauge-Z
    /// rows is deterministic and leaves the state untouched; measuring the
    /// same operator twice therefore always repeats the first outcome.
    pub fn measure_pauli<R: Rng + ?Sized>(
        &mut self,
        op: &PauliOperator,
        rng: &mut R,
    ) -> (i8, MeasureEffect) {
        assert_eq!(op.n_qubits(), self.n, "qubit count mismatch");
        assert!(op.is_hermitian(), "measured operator must be Hermitian");
        assert!(
            !op.is_identity_up_to_phase(),
            "measured operator must be non-trivial"
        );

        let result = self.measure_inner(op, rng);

        #[cfg(debug_assertions)]
        if self.n <= 32 {
            // Full structural check after every measurement on small codes;
            // large Monte Carlo runs skip it for speed.
            self.check_invariants()
                .expect("tableau invariants violated after measurement");
        }

        result
    }

    fn measure_inner<R: Rng + ?Sized>(
        &mut self,
        op: &PauliOperator,
        rng: &mut R,
    ) -> (i8, MeasureEffect) {
        enum Pivot {
            Stab(usize),
            GaugeZ(usize),
            LogicalX(usize),
            LogicalZ(usize),
        }

        let pivot = self
            .stabilizers
            .iter()
            .position(|s| s.symplectic_product(op) == 1)
            .map(Pivot::Stab)
            .or_else(|| {
                self.gauges
                    .iter()
                    .position(|p| p.z.symplectic_product(op) == 1)
                    .map(Pivot::GaugeZ)
            })
            .or_else(|| {
                self.logicals.iter().enumerate().find_map(|(i, p)| {
                    if p.x.symplectic_product(op) == 1 {
                        Some(Pivot::LogicalX(i))
                    } else if p.z.symplectic_product(op) == 1 {
                        Some(Pivot::LogicalZ(i))
                    } else {
                        None
                    }
                })
            });

        let Some(pivot) = pivot else {
            return (self.deterministic_outcome(op), MeasureEffect::Deterministic);
        };

        let outcome: i8 = if rng.gen::<bool>() { -1 } else { 1 };
        let mut signed = op.clone();
        if outcome < 0 {
            signed.negate();
        }

        let pivot_row = match &pivot {
            Pivot::Stab(l) => self.stabilizers[*l].clone(),
            Pivot::GaugeZ(m) => self.gauges[*m].z.clone(),
            Pivot::LogicalX(m) => self.logicals[*m].x.clone(),
            Pivot::LogicalZ(m) => self.logicals[*m].z.clone(),
        };

        // Every other row anticommuting with the measured operator absorbs
        // the pivot, which restores commutation without disturbing the rest
        // of the pair structure. The pivot's own slot is skipped by index.
        let repair = |row: &mut PauliOperator| {
            if row.symplectic_product(op) == 1 {
                row.mul_assign(&pivot_row);
            }
        };
        for (i, row) in self.stabilizers.iter_mut().enumerate() {
            if !matches!(pivot, Pivot::Stab(l) if l == i) {
                repair(row);
            }
        }
        for row in self.destabilizers.iter_mut() {
            repair(row);
        }
        for (i, pair) in self.logicals.iter_mut().enumerate() {
            if !matches!(pivot, Pivot::LogicalX(m) if m == i) {
                repair(&mut pair.x);
            }
            if !matches!(pivot, Pivot::LogicalZ(m) if m == i) {
                repair(&mut pair.z);
            }
        }
        for (i, pair) in self.gauges.iter_mut().enumerate() {
            repair(&mut pair.x);
            if !matches!(pivot, Pivot::GaugeZ(m) if m == i) {
                repair(&mut pair.z);
            }
        }

        match pivot {
            Pivot::Stab(l) => {
                self.destabilizers[l] = pivot_row;
                self.stabilizers[l] = signed;
                (outcome, MeasureEffect::StabilizerUpdated(l))
            }
            Pivot::GaugeZ(m) => {
                // The old X member's content lives on in the repaired rows;
                // the measured operator itself had coefficient 1 on it.
                self.gauges[m] = OperatorPair {
                    x: pivot_row,
                    z: signed,
                };
                (outcome, MeasureEffect::GaugeZUpdated(m))
            }
            Pivot::LogicalX(m) | Pivot::LogicalZ(m) => {
                self.logicals.remove(m);
                self.gauges.push(OperatorPair {
                    x: pivot_row,
                    z: signed,
                });
                (
                    outcome,
                    MeasureEffect::LogicalDemoted {
                        gauge_index: self.gauges.len() - 1,
                    },
                )
            }
        }
    }

    /// Outcome of measuring an operator that commutes with all stabilizers,
    /// gauge-Z rows, and logical members: expand it over the signed state
    /// group and read off the relative sign.
    fn deterministic_outcome(&self, op: &PauliOperator) -> i8 {
        // Gauge-Z coefficients come from pairing with the gauge-X partners,
        // stabilizer coefficients from pairing the gauge-stripped remainder
        // with the destabilizer frame.
        let mut acc = PauliOperator::identity(self.n);
        let mut remainder = op.clone();
        for pair in &self.gauges {
            if op.symplectic_product(&pair.x) == 1 {
                acc.mul_assign(&pair.z);
                remainder.mul_assign(&pair.z);
            }
        }
        for (i, d) in self.destabilizers.iter().enumerate() {
            if remainder.symplectic_product(d) == 1 {
                acc.mul_assign(&self.stabilizers[i]);
            }
        }
        assert!(
            acc.x_mask() == op.x_mask() && acc.z_mask() == op.z_mask(),
            "operator is not in the state group; tableau inconsistent"
        );
        let diff = (acc.phase() + 4 - op.phase()) & 3;
        debug_assert!(diff % 2 == 0, "non-Hermitian relative phase");
        if diff == 0 {
            1
        } else {
            -1
        }
    }

    /// Move gauge pair `index` into the stabilizer set: its Z member becomes
    /// a stabilizer, its X member the matching destabilizer.
    pub fn promote_gauge_to_stabilizer(&mut self, index: usize) {
        assert!(index < self.gauges.len(), "gauge index out of range");
        let pair = self.gauges.remove(index);
        // Keep the destabilizer frame dual: rows anticommuting with the new
        // stabilizer absorb its partner.
        for d in self.destabilizers.iter_mut() {
            if d.symplectic_product(&pair.z) == 1 {
                d.mul_assign(&pair.x);
            }
        }
        self.stabilizers.push(pair.z);
        self.destabilizers.push(pair.x);
    }

    /// Entropy (in bits) of the reduced state on `sites`, using the rank of
    /// the state group's restriction to the complement.
    pub fn entanglement_entropy(&self, sites: &[usize]) -> usize {
        let mut in_region = vec![false; self.n];
        for &s in sites {
            assert!(s < self.n, "site {s} out of range");
            assert!(!in_region[s], "duplicate site {s}");
            in_region[s] = true;
        }
        let complement_cols: Vec<usize> = (0..self.n)
            .filter(|&q| !in_region[q])
            .flat_map(|q| [q, self.n + q])
            .collect();
        let t = self.stabilizers.len() + self.gauges.len();
        let mut rows = BitMatrix::new(2 * self.n);
        for s in self
            .stabilizers
            .iter()
            .chain(self.gauges.iter().map(|p| &p.z))
        {
            rows.push_row(symplectic_row(s));
        }
        let outside_rank = rows.restricted_to_columns(&complement_cols).rank();
        let supported_inside = t - outside_rank;
        sites.len() - supported_inside
    }

    /// Exhaustive dressed-distance search: the smallest weight of a Pauli
    /// that commutes with every stabilizer yet lies outside the group
    /// generated by stabilizers and gauge operators.
    ///
    /// Returns `Ok(None)` when the code has no logical pairs. Guarded to
    /// `n <= 14` qubits; the search is exponential.
    pub fn distance_bruteforce(&self) -> Result<Option<usize>> {
        if self.n > 14 {
            return Err(Error::ResourceLimit(format!(
                "distance search supports at most 14 qubits, got {}",
                self.n
            )));
        }
        if self.logicals.is_empty() {
            return Ok(None);
        }
        let stab_masks: Vec<(u64, u64)> = self
            .stabilizers
            .iter()
            .map(|s| (s.x_mask().words()[0], s.z_mask().words()[0]))
            .collect();
        let mut group = BitMatrix::new(2 * self.n);
        for row in self
            .stabilizers
            .iter()
            .chain(self.gauges.iter().flat_map(|p| [&p.x, &p.z]))
        {
            group.push_row(symplectic_row(row));
        }
        let membership = RowReduction::new(&group);

        for w in 1..=self.n {
            let mut sites: Vec<usize> = (0..w).collect();
            loop {
                if self
                    .distance_try_letters(&sites, &stab_masks, &membership)
                    .is_some()
                {
                    return Ok(Some(w));
                }
                if !next_combination(&mut sites, self.n) {
                    break;
                }
            }
        }
        // A code with logical pairs always has logical operators.
        unreachable!("no logical representative found despite k > 0");
    }

    /// Scan all 3^w letter assignments on `sites`; `Some(())` when a logical
    /// representative was found.
    fn distance_try_letters(
        &self,
        sites: &[usize],
        stab_masks: &[(u64, u64)],
        membership: &RowReduction,
    ) -> Option<()> {
        let w = sites.len();
        let mut letters = vec![0u8; w]; // 0=X, 1=Y, 2=Z per occupied site
        loop {
            let mut x: u64 = 0;
            let mut z: u64 = 0;
            for (i, &s) in sites.iter().enumerate() {
                match letters[i] {
                    0 => x |= 1 << s,
                    1 => {
                        x |= 1 << s;
                        z |= 1 << s;
                    }
                    _ => z |= 1 << s,
                }
            }
            let commutes_all = stab_masks
                .iter()
                .all(|&(sx, sz)| ((x & sz).count_ones() + (z & sx).count_ones()) % 2 == 0);
            if commutes_all {
                let mut v = BitVector::zeros(2 * self.n);
                for q in 0..self.n {
                    if (x >> q) & 1 == 1 {
                        v.set(q, true);
                    }
                    if (z >> q) & 1 == 1 {
                        v.set(self.n + q, true);
                    }
                }
                if membership.solve(&v).is_none() {
                    return Some(());
                }
            }
            // Next letter assignment, odometer style.
            let mut i = 0;
            loop {
                if i == w {
                    return None;
                }
                letters[i] += 1;
                if letters[i] < 3 {
                    break;
                }
                letters[i] = 0;
                i += 1;
            }
        }
    }

    /// Verify the full tableau structure; cheap enough for tests and small
    /// codes, quadratic in the qubit count.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n;
        let fail = |msg: String| Err(Error::InvalidArgument(msg));
        if self.destabilizers.len() != self.stabilizers.len() {
            return fail("destabilizer count differs from stabilizer count".into());
        }
        if self.stabilizers.len() + self.logicals.len() + self.gauges.len() != n {
            return fail(format!(
                "incomplete tableau: {} stabilizers + {} logical pairs + {} gauge pairs != {} qubits",
                self.stabilizers.len(),
                self.logicals.len(),
                self.gauges.len(),
                n
            ));
        }
        let hermitian_rows = self
            .stabilizers
            .iter()
            .chain(self.logicals.iter().flat_map(|p| [&p.x, &p.z]))
            .chain(self.gauges.iter().flat_map(|p| [&p.x, &p.z]));
        for row in hermitian_rows {
            if row.n_qubits() != n {
                return fail("row with wrong qubit count".into());
            }
            if !row.is_hermitian() {
                return fail(format!("non-Hermitian row {row}"));
            }
        }
        for (i, a) in self.stabilizers.iter().enumerate() {
            for b in self.stabilizers.iter().skip(i + 1) {
                if a.symplectic_product(b) == 1 {
                    return fail(format!("stabilizers anticommute: {a} vs {b}"));
                }
            }
        }
        for (i, d) in self.destabilizers.iter().enumerate() {
            for (j, s) in self.stabilizers.iter().enumerate() {
                let expect = u8::from(i == j);
                if d.symplectic_product(s) != expect {
                    return fail(format!(
                        "destabilizer {i} pairs wrongly with stabilizer {j}"
                    ));
                }
            }
        }
        // Pair structure: members anticommute within a pair and commute with
        // everything else outside the destabilizer frame.
        let pairs: Vec<(&PauliOperator, &PauliOperator)> = self
            .logicals
            .iter()
            .chain(self.gauges.iter())
            .map(|p| (&p.x, &p.z))
            .collect();
        for (i, &(x, z)) in pairs.iter().enumerate() {
            if x.symplectic_product(z) != 1 {
                return fail(format!("pair {i} members commute: {x} vs {z}"));
            }
            for s in &self.stabilizers {
                if x.symplectic_product(s) == 1 || z.symplectic_product(s) == 1 {
                    return fail(format!("pair {i} fails to commute with stabilizer {s}"));
                }
            }
            for (j, &(ox, oz)) in pairs.iter().enumerate() {
                if i == j {
                    continue;
                }
                if x.symplectic_product(ox) == 1
                    || x.symplectic_product(oz) == 1
                    || z.symplectic_product(ox) == 1
                    || z.symplectic_product(oz) == 1
                {
                    return fail(format!("pairs {i} and {j} fail to commute"));
                }
            }
        }
        // Independence of the non-destabilizer rows.
        let mut m = BitMatrix::new(2 * n);
        for row in self
            .stabilizers
            .iter()
            .chain(pairs.iter().flat_map(|&(x, z)| [x, z]))
        {
            m.push_row(symplectic_row(row));
        }
        let expect = self.stabilizers.len() + 2 * pairs.len();
        if m.rank() != expect {
            return fail(format!(
                "tableau rows are dependent: rank {} < {}",
                m.rank(),
                expect
            ));
        }
        Ok(())
    }

    /// Serialize to the sectioned text format.
    ///
    /// `STAB`/`DESTAB` counts are row counts; `LOGICAL`/`GAUGE` counts are
    /// pair counts with the X member printed before the Z member.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "N {}", self.n);
        let _ = writeln!(out, "STAB {}", self.stabilizers.len());
        for s in &self.stabilizers {
            let _ = writeln!(out, "{}", s.to_letter_string());
        }
        let _ = writeln!(out, "DESTAB {}", self.destabilizers.len());
        for d in &self.destabilizers {
            let _ = writeln!(out, "{}", d.to_letter_string());
        }
        let _ = writeln!(out, "LOGICAL {}", self.logicals.len());
        for p in &self.logicals {
            let _ = writeln!(out, "{}", p.x.to_letter_string());
            let _ = writeln!(out, "{}", p.z.to_letter_string());
        }
        let _ = writeln!(out, "GAUGE {}", self.gauges.len());
        for p in &self.gauges {
            let _ = writeln!(out, "{}", p.x.to_letter_string());
            let _ = writeln!(out, "{}", p.z.to_letter_string());
        }
        out
    }

    /// Parse the text format produced by [`SubsystemCode::to_text`] and
    /// verify all tableau invariants.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let parse_err = |line: usize, msg: &str| Error::Parse {
            line: line.saturating_add(1),
            msg: msg.to_string(),
        };
        let (ln, header) = lines
            .next()
            .ok_or_else(|| parse_err(0, "empty tableau text"))?;
        let n: usize = header
            .strip_prefix("N ")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| parse_err(ln, "expected 'N <qubits>'"))?;

        let expect_section = |name: &str, lines: &mut dyn Iterator<Item = (usize, &str)>| -> Result<usize> {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| parse_err(usize::MAX, "unexpected end of input"))?;
            let rest = line
                .strip_prefix(name)
                .ok_or_else(|| parse_err(ln, &format!("expected '{name} <count>'")))?;
            rest.trim()
                .parse()
                .map_err(|_| parse_err(ln, &format!("bad count in '{name}' header")))
        };
        let read_op = |lines: &mut dyn Iterator<Item = (usize, &str)>| -> Result<PauliOperator> {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| parse_err(usize::MAX, "unexpected end of input"))?;
            let op = parse_operator(line.trim())
                .ok_or_else(|| parse_err(ln, "bad operator line"))?;
            if op.n_qubits() != n {
                return Err(parse_err(ln, "operator length differs from N"));
            }
            Ok(op)
        };

        let n_stab = expect_section("STAB", &mut lines)?;
        let mut stabilizers = Vec::with_capacity(n_stab);
        for _ in 0..n_stab {
            stabilizers.push(read_op(&mut lines)?);
        }
        let n_destab = expect_section("DESTAB", &mut lines)?;
        let mut destabilizers = Vec::with_capacity(n_destab);
        for _ in 0..n_destab {
            destabilizers.push(read_op(&mut lines)?);
        }
        let n_logical = expect_section("LOGICAL", &mut lines)?;
        let mut logicals = Vec::with_capacity(n_logical);
        for _ in 0..n_logical {
            let x = read_op(&mut lines)?;
            let z = read_op(&mut lines)?;
            logicals.push(OperatorPair { x, z });
        }
        let n_gauge = expect_section("GAUGE", &mut lines)?;
        let mut gauges = Vec::with_capacity(n_gauge);
        for _ in 0..n_gauge {
            let x = read_op(&mut lines)?;
            let z = read_op(&mut lines)?;
            gauges.push(OperatorPair { x, z });
        }
        if let Some((ln, _)) = lines.next() {
            return Err(parse_err(ln, "trailing content after GAUGE section"));
        }
        let code = SubsystemCode {
            n,
            stabilizers,
            destabilizers,
            logicals,
            gauges,
        };
        code.check_invariants()?;
        Ok(code)
    }
}

/// Operator parser accepting the `+`/`-`/`+i`/`-i` sign prefixes that rows
/// can carry (destabilizer phases drift off the real axis by design).
fn parse_operator(s: &str) -> Option<PauliOperator> {
    let (phase, body) = if let Some(rest) = s.strip_prefix("+i") {
        (1u8, rest)
    } else if let Some(rest) = s.strip_prefix("-i") {
        (3u8, rest)
    } else if let Some(rest) = s.strip_prefix('+') {
        (0u8, rest)
    } else if let Some(rest) = s.strip_prefix('-') {
        (2u8, rest)
    } else {
        (0u8, s)
    };
    let base = PauliOperator::from_letter_string(body)?;
    Some(PauliOperator::from_parts(
        base.x_mask().clone(),
        base.z_mask().clone(),
        phase,
    ))
}

/// Advance `sites` to the next `w`-combination of `0..n` in lexicographic
/// order; `false` when `sites` was the last one.
fn next_combination(sites: &mut [usize], n: usize) -> bool {
    let w = sites.len();
    for i in (0..w).rev() {
        if sites[i] != i + n - w {
            sites[i] += 1;
            for j in (i + 1)..w {
                sites[j] = sites[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Concatenated `(x || z)` bit row used for rank computations.
pub(crate) fn symplectic_row(op: &PauliOperator) -> BitVector {
    let n = op.n_qubits();
    let mut v = BitVector::zeros(2 * n);
    for q in 0..n {
        if op.x_bit(q) {
            v.set(q, true);
        }
        if op.z_bit(q) {
            v.set(n + q, true);
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn op(s: &str) -> PauliOperator {
        PauliOperator::from_letter_string(s).unwrap()
    }

    /// The five-qubit code: four cyclic stabilizers, distance 3.
    fn five_qubit_code() -> SubsystemCode {
        let text = "\
N 5
STAB 4
+XZZXI
+IXZZX
+XIXZZ
+ZXIXZ
DESTAB 4
+IXIII
+IIIIZ
+IIZII
+XIIII
LOGICAL 1
+XXXXX
+ZZZZZ
GAUGE 0
";
        SubsystemCode::from_text(text).expect("valid five-qubit code")
    }

    #[test]
    fn trivial_code_satisfies_invariants() {
        let code = SubsystemCode::trivial(5, &[1, 3]);
        code.check_invariants().unwrap();
        assert_eq!(code.stabilizer_count(), 3);
        assert_eq!(code.logical_count(), 2);
        assert_eq!(code.gauge_count(), 0);
    }

    #[test]
    fn bell_pair_entropy() {
        let mut code = SubsystemCode::trivial(2, &[]);
        code.apply_gate(&CliffordGate::hadamard(0), 0, 1);
        code.apply_gate(&CliffordGate::cnot(), 0, 1);
        code.check_invariants().unwrap();
        assert_eq!(code.entanglement_entropy(&[0]), 1);
        assert_eq!(code.entanglement_entropy(&[1]), 1);
        assert_eq!(code.entanglement_entropy(&[0, 1]), 0);
        assert_eq!(code.entanglement_entropy(&[]), 0);
    }

    #[test]
    fn product_state_has_zero_entropy() {
        let code = SubsystemCode::trivial(3, &[]);
        for region in [&[0usize][..], &[1], &[0, 2], &[0, 1, 2]] {
            assert_eq!(code.entanglement_entropy(region), 0);
        }
    }

    #[test]
    fn logical_site_is_maximally_mixed() {
        let code = SubsystemCode::trivial(3, &[1]);
        assert_eq!(code.entanglement_entropy(&[1]), 1);
        assert_eq!(code.entanglement_entropy(&[0]), 0);
        assert_eq!(code.entanglement_entropy(&[0, 1, 2]), 1);
    }

    #[test]
    fn deterministic_measurement_of_stabilizer_product() {
        let mut code = SubsystemCode::trivial(2, &[]);
        let (o, eff) = code.measure_pauli(&op("ZZ"), &mut rng(0));
        assert_eq!((o, eff), (1, MeasureEffect::Deterministic));
        let (o, _) = code.measure_pauli(&op("ZI"), &mut rng(0));
        assert_eq!(o, 1);
        // Conjugate by X0: Z0 flips sign.
        code.apply_pauli(&op("XI"));
        let (o, _) = code.measure_pauli(&op("ZI"), &mut rng(0));
        assert_eq!(o, -1);
        let (o, _) = code.measure_pauli(&op("ZZ"), &mut rng(0));
        assert_eq!(o, -1);
    }

    #[test]
    fn random_measurement_repeats_deterministically() {
        for seed in 0..20 {
            let mut code = SubsystemCode::trivial(3, &[]);
            let mut r = rng(seed);
            let x0 = op("XII");
            let (first, eff) = code.measure_pauli(&x0, &mut r);
            assert!(matches!(eff, MeasureEffect::StabilizerUpdated(_)));
            let (second, eff2) = code.measure_pauli(&x0, &mut r);
            assert_eq!(first, second);
            assert_eq!(eff2, MeasureEffect::Deterministic);
        }
    }

    #[test]
    fn measuring_anticommuting_partner_rerandomizes() {
        // After measuring X0, measuring Z0 must be random again; collect both
        // outcomes over seeds.
        let mut seen = [false; 2];
        for seed in 0..40 {
            let mut code = SubsystemCode::trivial(1, &[]);
            let mut r = rng(seed);
            code.measure_pauli(&op("X"), &mut r);
            let (o, _) = code.measure_pauli(&op("Z"), &mut r);
            seen[usize::from(o < 0)] = true;
        }
        assert!(seen[0] && seen[1]);
    }

    #[test]
    fn measuring_logical_demotes_pair_to_gauge() {
        for seed in 0..10 {
            let mut code = SubsystemCode::trivial(2, &[0]);
            let mut r = rng(seed);
            let xbar = op("XI");
            let (o, eff) = code.measure_pauli(&xbar, &mut r);
            assert_eq!(eff, MeasureEffect::LogicalDemoted { gauge_index: 0 });
            assert_eq!(code.logical_count(), 0);
            assert_eq!(code.gauge_count(), 1);
            assert_eq!(code.stabilizer_count(), 1);
            // Remeasurement must reproduce the outcome without touching
            // anything.
            let (o2, eff2) = code.measure_pauli(&xbar, &mut r);
            assert_eq!(o2, o);
            assert_eq!(eff2, MeasureEffect::Deterministic);
            // State entropy dropped: the code is now pure.
            assert_eq!(code.entanglement_entropy(&[0, 1]), 0);
        }
    }

    #[test]
    fn gauge_z_measurement_replaces_pair_in_place() {
        let mut code = SubsystemCode::trivial(2, &[0]);
        let mut r = rng(7);
        code.measure_pauli(&op("XI"), &mut r); // demote: gauge pair (Z0-ish, ±X0)
        assert_eq!(code.gauge_count(), 1);
        // Measure an operator anticommuting with the gauge Z member (±X0):
        // Z0 anticommutes with X0.
        let (_, eff) = code.measure_pauli(&op("ZI"), &mut r);
        assert_eq!(eff, MeasureEffect::GaugeZUpdated(0));
        assert_eq!(code.logical_count(), 0);
        assert_eq!(code.gauge_count(), 1);
    }

    #[test]
    fn promote_gauge_extends_stabilizer_group() {
        let mut code = SubsystemCode::trivial(2, &[0]);
        let mut r = rng(3);
        let (o, eff) = code.measure_pauli(&op("XI"), &mut r);
        let MeasureEffect::LogicalDemoted { gauge_index } = eff else {
            panic!("expected demotion");
        };
        code.promote_gauge_to_stabilizer(gauge_index);
        code.check_invariants().unwrap();
        assert_eq!(code.stabilizer_count(), 2);
        assert_eq!(code.gauge_count(), 0);
        // The promoted stabilizer is the signed measured operator.
        let (o2, eff2) = code.measure_pauli(&op("XI"), &mut r);
        assert_eq!(o2, o);
        assert_eq!(eff2, MeasureEffect::Deterministic);
    }

    #[test]
    fn measurement_keeps_invariants_under_random_circuits() {
        let mut r = rng(11);
        for trial in 0..20 {
            let mut code = SubsystemCode::trivial(6, &[2, 3]);
            // Scramble with named gates.
            let gates = [
                CliffordGate::hadamard(0),
                CliffordGate::phase_gate(1),
                CliffordGate::cnot(),
                CliffordGate::iswap(),
                CliffordGate::cz(),
            ];
            for step in 0..12 {
                let g = &gates[(trial + step) % gates.len()];
                let a = (step * 2 + trial) % 6;
                let b = (a + 1 + step % 4) % 6;
                if a != b {
                    code.apply_gate(g, a, b);
                }
            }
            code.check_invariants().unwrap();
            // Measure a few random single-site operators; invariants are
            // re-checked inside measure_pauli in debug builds.
            for q in 0..6 {
                let letter = ['X', 'Y', 'Z'][(trial + q) % 3];
                code.measure_pauli(&PauliOperator::single(6, q, letter), &mut r);
            }
            code.check_invariants().unwrap();
        }
    }

    #[test]
    fn five_qubit_code_distance_is_three() {
        let code = five_qubit_code();
        assert_eq!(code.distance_bruteforce().unwrap(), Some(3));
    }

    #[test]
    fn distance_of_gauge_free_trivial_code_is_one() {
        let code = SubsystemCode::trivial(3, &[1]);
        assert_eq!(code.distance_bruteforce().unwrap(), Some(1));
    }

    #[test]
    fn distance_without_logicals_is_none() {
        let code = SubsystemCode::trivial(4, &[]);
        assert_eq!(code.distance_bruteforce().unwrap(), None);
    }

    #[test]
    fn distance_guard_rejects_large_codes() {
        let code = SubsystemCode::trivial(15, &[0]);
        assert!(matches!(
            code.distance_bruteforce(),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn text_round_trip_is_exact() {
        let mut code = SubsystemCode::trivial(4, &[2]);
        code.apply_gate(&CliffordGate::iswap(), 0, 2);
        code.apply_gate(&CliffordGate::cnot(), 1, 3);
        code.measure_pauli(&op("XIII"), &mut rng(5));
        let text = code.to_text();
        let parsed = SubsystemCode::from_text(&text).unwrap();
        assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn five_qubit_text_parses_and_validates() {
        let code = five_qubit_code();
        code.check_invariants().unwrap();
        assert_eq!(code.entanglement_entropy(&[0, 1, 2, 3, 4]), 1);
        // Any two qubits of the five-qubit code are maximally mixed.
        assert_eq!(code.entanglement_entropy(&[0, 1]), 2);
    }

    #[test]
    fn malformed_text_is_rejected() {
        assert!(SubsystemCode::from_text("").is_err());
        assert!(SubsystemCode::from_text("N 2\nSTAB 1\n+ZQ\n").is_err());
        // Anticommuting "stabilizers".
        let bad = "\
N 2
STAB 2
+XI
+ZI
DESTAB 2
+ZI
+XI
LOGICAL 0
GAUGE 0
";
        assert!(SubsystemCode::from_text(bad).is_err());
    }

    #[test]
    fn apply_gate_preserves_invariants_and_entropy() {
        let mut code = SubsystemCode::trivial(4, &[1]);
        let before = code.entanglement_entropy(&[0, 1, 2, 3]);
        code.apply_gate(&CliffordGate::iswap(), 0, 3);
        code.apply_gate(&CliffordGate::cnot(), 2, 1);
        code.check_invariants().unwrap();
        assert_eq!(code.entanglement_entropy(&[0, 1, 2, 3]), before);
    }
}
