//! Gate geometries and random two-qubit gate ensembles.
//!
//! Geometries produce one perfect matching of the qubits per layer;
//! ensembles produce the gate applied on each matched pair. Uniform
//! two-qubit Cliffords are sampled by decoding a uniform integer through an
//! explicit bijection `[0, 720) x [0, 16) -> Clifford_2`, built from
//! symplectic transvections, so a seeded generator always reproduces the
//! same circuit.

use crate::code::SubsystemCode;
use crate::error::{Error, Result};
use crate::gate::{CliffordGate, LocalPauli, SingleClifford};
use rand::seq::SliceRandom;
use rand::Rng;

/// Connectivity pattern of the brickwork circuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Geometry {
    /// Periodic chain with alternating even/odd brickwork layers.
    Chain1D { n: usize },
    /// Periodic grid, `lx * ly` sites, four matchings cycling with depth.
    Grid2D { lx: usize, ly: usize },
    /// A fresh uniformly random perfect matching every layer.
    AllToAll { n: usize },
    /// Disjoint periodic chains of `block_size` sites each.
    Blocks {
        n_blocks: usize,
        block_size: usize,
    },
}

impl Geometry {
    /// Total number of qubits.
    pub fn n_qubits(&self) -> usize {
        match *self {
            Geometry::Chain1D { n } => n,
            Geometry::Grid2D { lx, ly } => lx * ly,
            Geometry::AllToAll { n } => n,
            Geometry::Blocks {
                n_blocks,
                block_size,
            } => n_blocks * block_size,
        }
    }

    /// Spatial dimension reported in result tables: 1 for chains and blocks,
    /// 2 for grids, 0 for the geometry-free all-to-all model.
    pub fn dimension(&self) -> usize {
        match self {
            Geometry::Chain1D { .. } | Geometry::Blocks { .. } => 1,
            Geometry::Grid2D { .. } => 2,
            Geometry::AllToAll { .. } => 0,
        }
    }

    /// Identifier used in configs and result tables.
    pub fn name(&self) -> &'static str {
        match self {
            Geometry::Chain1D { .. } => "chain1d",
            Geometry::Grid2D { .. } => "grid2d",
            Geometry::AllToAll { .. } => "all2all",
            Geometry::Blocks { .. } => "blocks",
        }
    }

    /// Check the size constraints that make every layer a perfect matching.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        match *self {
            Geometry::Chain1D { n } => {
                if n < 2 || n % 2 != 0 {
                    return bad(format!("chain1d needs an even qubit count >= 2, got {n}"));
                }
            }
            Geometry::Grid2D { lx, ly } => {
                if lx < 2 || ly < 2 || lx % 2 != 0 || ly % 2 != 0 {
                    return bad(format!(
                        "grid2d needs even side lengths >= 2, got {lx}x{ly}"
                    ));
                }
            }
            Geometry::AllToAll { n } => {
                if n < 2 || n % 2 != 0 {
                    return bad(format!("all2all needs an even qubit count >= 2, got {n}"));
                }
            }
            Geometry::Blocks {
                n_blocks,
                block_size,
            } => {
                if n_blocks == 0 {
                    return bad("blocks needs at least one block".into());
                }
                if block_size < 2 || block_size % 2 != 0 {
                    return bad(format!(
                        "blocks needs an even block size >= 2, got {block_size}"
                    ));
                }
            }
        }
        Ok(())
    }

    /// The qubit pairs gated in `layer`. Every site appears exactly once.
    ///
    /// Only `AllToAll` consumes randomness (one shuffle per layer).
    pub fn layer_pairs<R: Rng + ?Sized>(&self, layer: usize, rng: &mut R) -> Vec<(usize, usize)> {
        match *self {
            Geometry::Chain1D { n } => chain_layer(0, n, layer),
            Geometry::Grid2D { lx, ly } => {
                // Directions cycle north, east, south, west; sites of even
                // parity initiate, so with even side lengths each site is
                // matched exactly once.
                let (dx, dy): (isize, isize) = [(0, 1), (1, 0), (0, -1), (-1, 0)][layer % 4];
                let mut pairs = Vec::with_capacity(lx * ly / 2);
                for y in 0..ly {
                    for x in 0..lx {
                        if (x + y) % 2 == 0 {
                            let px = (x as isize + dx).rem_euclid(lx as isize) as usize;
                            let py = (y as isize + dy).rem_euclid(ly as isize) as usize;
                            pairs.push((y * lx + x, py * lx + px));
                        }
                    }
                }
                pairs
            }
            Geometry::AllToAll { n } => {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(rng);
                order.chunks_exact(2).map(|c| (c[0], c[1])).collect()
            }
            Geometry::Blocks {
                n_blocks,
                block_size,
            } => (0..n_blocks)
                .flat_map(|b| chain_layer(b * block_size, block_size, layer))
                .collect(),
        }
    }
}

/// Brickwork pairs of a periodic chain occupying `[offset, offset + n)`.
fn chain_layer(offset: usize, n: usize, layer: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n / 2);
    if layer % 2 == 0 {
        for i in 0..n / 2 {
            pairs.push((offset + 2 * i, offset + 2 * i + 1));
        }
    } else {
        for i in 0..n / 2 {
            pairs.push((offset + 2 * i + 1, offset + (2 * i + 2) % n));
        }
    }
    pairs
}

/// Symplectic product on interleaved `(x_1, z_1, x_2, z_2, ...)` bit masks.
#[inline]
fn sp(a: u32, b: u32, nn: usize) -> u32 {
    let mut acc = 0;
    for j in (0..nn).step_by(2) {
        acc ^= ((a >> j) & 1) & ((b >> (j + 1)) & 1);
        acc ^= ((a >> (j + 1)) & 1) & ((b >> j) & 1);
    }
    acc
}

/// Transvection `Z_h(v) = v + <h, v> h`.
#[inline]
fn transvect(h: u32, v: u32, nn: usize) -> u32 {
    v ^ (sp(h, v, nn) * h)
}

/// Find `(h1, h2)` with `y = Z_h1(Z_h2(x))` for nonzero `x`, `y`; a zero
/// mask acts as the identity transvection.
fn find_transvection(x: u32, y: u32, nn: usize) -> (u32, u32) {
    debug_assert!(x != 0 && y != 0);
    if x == y {
        return (0, 0);
    }
    if sp(x, y, nn) == 1 {
        return (x ^ y, 0);
    }
    // Commuting case: route through a midpoint z that anticommutes with
    // both. First look for a qubit where both are supported.
    let pair = |v: u32, j: usize| (v >> (2 * j)) & 3;
    let sp1 = |a: u32, b: u32| ((a & 1) & ((b >> 1) & 1)) ^ (((a >> 1) & 1) & (b & 1));
    let mut z = 0u32;
    let mut found = false;
    for j in 0..nn / 2 {
        let (xp, yp) = (pair(x, j), pair(y, j));
        if xp != 0 && yp != 0 {
            let zp = (1..4).find(|&c| sp1(xp, c) == 1 && sp1(yp, c) == 1);
            if let Some(zp) = zp {
                z = zp << (2 * j);
                found = true;
                break;
            }
        }
    }
    if !found {
        // Disjoint supports: fix each condition on its own qubit.
        let jx = (0..nn / 2)
            .find(|&j| pair(x, j) != 0 && pair(y, j) == 0)
            .expect("x must have a site outside y's support");
        let jy = (0..nn / 2)
            .find(|&j| pair(y, j) != 0 && pair(x, j) == 0)
            .expect("y must have a site outside x's support");
        let zx = (1..4).find(|&c| sp1(pair(x, jx), c) == 1).unwrap();
        let zy = (1..4).find(|&c| sp1(pair(y, jy), c) == 1).unwrap();
        z = (zx << (2 * jx)) | (zy << (2 * jy));
    }
    debug_assert_eq!(sp(x, z, nn), 1);
    debug_assert_eq!(sp(y, z, nn), 1);
    (z ^ y, x ^ z)
}

/// Order of the binary symplectic group `Sp(2n, 2)`.
pub fn symplectic_group_order(n: usize) -> u64 {
    let mut order = 1u64;
    for j in 1..=n {
        order *= (1u64 << (2 * j)) - 1;
        order *= 1u64 << (2 * j - 1);
    }
    order
}

/// Decode `index` in `[0, |Sp(2n, 2)|)` to the images of the symplectic
/// basis vectors, bijectively.
///
/// Index digits are consumed least significant first: the image of `e_0`
/// (all `2^{2n} - 1` nonzero vectors), then the `2^{2n-1}` choices for the
/// image of `e_1`, then the inner group recursively.
pub fn symplectic_from_index(index: u64, n: usize) -> Vec<u32> {
    assert!(n >= 1 && n <= 8, "supported qubit counts are 1..=8");
    assert!(
        index < symplectic_group_order(n),
        "symplectic index out of range"
    );
    let nn = 2 * n;
    let s = (1u64 << nn) - 1;
    let f1 = ((index % s) + 1) as u32;
    let rest = index / s;
    let b = (rest % (1 << (nn - 1))) as u32;
    let rest = rest >> (nn - 1);

    let (t1, t2) = find_transvection(1, f1, nn);
    // Candidate parametrization for the image of e_1: transport
    // e_0 + (higher-coordinate bits) through the same transvections to get
    // an auxiliary direction h0 that commutes with f1, then act with Z_h0
    // and optionally Z_f1. This yields every partner of f1 exactly once.
    let eprime = 1u32 | ((b >> 1) << 2);
    let h0 = transvect(t1, transvect(t2, eprime, nn), nn);

    let inner: Vec<u32> = if n == 1 {
        Vec::new()
    } else {
        symplectic_from_index(rest, n - 1)
    };

    let map = |v: u32| -> u32 {
        let mut w = transvect(t2, v, nn);
        w = transvect(t1, w, nn);
        if b & 1 == 1 {
            w = transvect(f1, w, nn);
        }
        transvect(h0, w, nn)
    };

    let mut images = Vec::with_capacity(nn);
    for j in 0..nn {
        let pre = if j < 2 {
            1u32 << j
        } else {
            // Inner recursion lives on coordinates 2.., shifted up.
            inner[j - 2] << 2
        };
        images.push(map(pre));
    }
    images
}

/// Decode `(index, signs)` to a two-qubit Clifford; a bijection from
/// `[0, 720) x [0, 16)` onto all 11520 gates.
pub fn clifford_from_index(index: u64, signs: u8) -> CliffordGate {
    assert!(signs < 16, "sign word out of range");
    let images = symplectic_from_index(index, 2);
    let mut lifted = [LocalPauli::identity(); 4];
    for (g, &mask) in images.iter().enumerate() {
        let phase = if (signs >> g) & 1 == 1 { 2 } else { 0 };
        lifted[g] = LocalPauli::new(mask as u8, phase);
    }
    CliffordGate::from_images(lifted)
}

/// Gate distribution applied on matched pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ensemble {
    /// Uniformly random two-qubit Cliffords.
    Clifford2Q,
    /// iSWAP followed by independent uniform single-qubit Cliffords.
    IswapSingles,
}

impl Ensemble {
    pub fn name(&self) -> &'static str {
        match self {
            Ensemble::Clifford2Q => "clifford2q",
            Ensemble::IswapSingles => "iswap_singles",
        }
    }

    /// Draw one gate.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> CliffordGate {
        match self {
            Ensemble::Clifford2Q => {
                let index = rng.gen_range(0..720u64);
                let signs = rng.gen_range(0..16u8);
                clifford_from_index(index, signs)
            }
            Ensemble::IswapSingles => {
                let a = SingleClifford::from_index(rng.gen_range(0..24));
                let b = SingleClifford::from_index(rng.gen_range(0..24));
                CliffordGate::iswap().then(&CliffordGate::from_singles(a, b))
            }
        }
    }
}

/// Uniformly sample a two-qubit Clifford gate.
pub fn sample_two_qubit_clifford<R: Rng + ?Sized>(rng: &mut R) -> CliffordGate {
    Ensemble::Clifford2Q.sample(rng)
}

/// Evolve a code by `depth` brickwork layers of random gates.
///
/// Per layer the matching is drawn first (only all-to-all consumes
/// randomness there), then gates are drawn in pair order, so a fixed seed
/// reproduces the circuit exactly.
pub fn apply_random_circuit<R: Rng + ?Sized>(
    code: &mut SubsystemCode,
    geometry: &Geometry,
    ensemble: Ensemble,
    depth: usize,
    rng: &mut R,
) {
    assert_eq!(
        code.n_qubits(),
        geometry.n_qubits(),
        "geometry size must match the code"
    );
    for layer in 0..depth {
        for (a, b) in geometry.layer_pairs(layer, rng) {
            let gate = ensemble.sample(rng);
            code.apply_gate(&gate, a, b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn symplectic_form_on_basis_vectors() {
        assert_eq!(sp(0b0001, 0b0010, 4), 1);
        assert_eq!(sp(0b0001, 0b0100, 4), 0);
        assert_eq!(sp(0b0001, 0b1000, 4), 0);
        assert_eq!(sp(0b0100, 0b1000, 4), 1);
        assert_eq!(sp(0b0101, 0b1010, 4), 0);
    }

    #[test]
    fn transvections_preserve_the_form() {
        for h in 0..16u32 {
            for a in 0..16u32 {
                for b in 0..16u32 {
                    let (ta, tb) = (transvect(h, a, 4), transvect(h, b, 4));
                    assert_eq!(sp(ta, tb, 4), sp(a, b, 4));
                }
            }
        }
    }

    #[test]
    fn find_transvection_connects_all_nonzero_pairs() {
        for x in 1..16u32 {
            for y in 1..16u32 {
                let (h1, h2) = find_transvection(x, y, 4);
                assert_eq!(transvect(h1, transvect(h2, x, 4), 4), y, "{x} -> {y}");
            }
        }
    }

    #[test]
    fn symplectic_orders() {
        assert_eq!(symplectic_group_order(1), 6);
        assert_eq!(symplectic_group_order(2), 720);
    }

    #[test]
    fn symplectic_decode_is_bijective_and_symplectic() {
        for n in [1usize, 2] {
            let nn = 2 * n;
            let order = symplectic_group_order(n);
            let mut seen = HashSet::new();
            for i in 0..order {
                let images = symplectic_from_index(i, n);
                for a in 0..nn {
                    for b in 0..nn {
                        let expect = sp(1 << a, 1 << b, nn);
                        assert_eq!(sp(images[a], images[b], nn), expect);
                    }
                }
                seen.insert(images);
            }
            assert_eq!(seen.len() as u64, order);
        }
    }

    #[test]
    fn clifford_decode_covers_all_gates_once() {
        let mut seen = HashSet::new();
        for i in 0..720 {
            for signs in 0..16 {
                seen.insert(clifford_from_index(i, signs));
            }
        }
        assert_eq!(seen.len(), 11520);
    }

    #[test]
    fn chain_layers_alternate_brickwork() {
        let g = Geometry::Chain1D { n: 6 };
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(g.layer_pairs(0, &mut rng), vec![(0, 1), (2, 3), (4, 5)]);
        assert_eq!(g.layer_pairs(1, &mut rng), vec![(1, 2), (3, 4), (5, 0)]);
        assert_eq!(g.layer_pairs(2, &mut rng), g.layer_pairs(0, &mut rng));
    }

    #[test]
    fn every_layer_is_a_perfect_matching() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let geometries = [
            Geometry::Chain1D { n: 8 },
            Geometry::Grid2D { lx: 4, ly: 6 },
            Geometry::AllToAll { n: 10 },
            Geometry::Blocks {
                n_blocks: 3,
                block_size: 4,
            },
        ];
        for g in &geometries {
            g.validate().unwrap();
            for layer in 0..8 {
                let pairs = g.layer_pairs(layer, &mut rng);
                let mut seen = vec![false; g.n_qubits()];
                assert_eq!(pairs.len(), g.n_qubits() / 2, "{g:?} layer {layer}");
                for (a, b) in pairs {
                    assert_ne!(a, b);
                    assert!(!seen[a] && !seen[b], "{g:?} layer {layer} repeats a site");
                    seen[a] = true;
                    seen[b] = true;
                }
                assert!(seen.iter().all(|&s| s), "{g:?} layer {layer} missed a site");
            }
        }
    }

    #[test]
    fn grid_cycles_four_directions() {
        let g = Geometry::Grid2D { lx: 4, ly: 4 };
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let layers: Vec<_> = (0..4)
            .map(|l| {
                let mut p = g.layer_pairs(l, &mut rng);
                p.sort_unstable();
                p
            })
            .collect();
        for i in 0..4 {
            for j in (i + 1)..4 {
                assert_ne!(layers[i], layers[j], "layers {i} and {j} coincide");
            }
        }
    }

    #[test]
    fn invalid_geometries_are_rejected() {
        assert!(Geometry::Chain1D { n: 5 }.validate().is_err());
        assert!(Geometry::Grid2D { lx: 3, ly: 4 }.validate().is_err());
        assert!(Geometry::AllToAll { n: 0 }.validate().is_err());
        assert!(Geometry::Blocks {
            n_blocks: 2,
            block_size: 3
        }
        .validate()
        .is_err());
    }

    #[test]
    fn circuits_preserve_tableau_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for ensemble in [Ensemble::Clifford2Q, Ensemble::IswapSingles] {
            let mut code = SubsystemCode::trivial(8, &[2, 5]);
            let geometry = Geometry::Chain1D { n: 8 };
            apply_random_circuit(&mut code, &geometry, ensemble, 6, &mut rng);
            code.check_invariants().unwrap();
            assert_eq!(code.logical_count(), 2);
        }
    }

    #[test]
    fn seeded_circuits_are_reproducible() {
        let build = || {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            let mut code = SubsystemCode::trivial(6, &[0]);
            let geometry = Geometry::AllToAll { n: 6 };
            apply_random_circuit(&mut code, &geometry, Ensemble::Clifford2Q, 5, &mut rng);
            code.to_text()
        };
        assert_eq!(build(), build());
    }
}
