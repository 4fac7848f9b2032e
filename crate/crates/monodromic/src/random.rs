//! Random objects for property tests and round-trip suites.
//!
//! Random tuples are catalog sums disguised by random base changes on ψ and φ,
//! so their matrices are dense while their decomposition is known.

use corelin::{Matrix, Rational};
use rand::Rng;

use crate::{synthesize, Block, BlockKind, HalfTwist, MonodromicTuple, NormalForm};

/// Total dimension `dim ψ + dim φ` of a plain block's catalog tuple.
pub fn block_dim(b: &Block) -> usize {
    match b.kind() {
        BlockKind::A | BlockKind::B => 2 * b.size(),
        BlockKind::P | BlockKind::Q => 2 * b.size() - 1,
        _ => 1,
    }
}

/// A random plain block whose catalog tuple has total dimension ≤ `budget`
/// (`budget ≥ 1`), perverse and untwisted.
pub fn random_block<R: Rng + ?Sized>(rng: &mut R, budget: usize) -> Block {
    loop {
        let kind = BlockKind::PLAIN[rng.gen_range(0..BlockKind::PLAIN.len())];
        let max_size = match kind {
            BlockKind::A | BlockKind::B => budget / 2,
            BlockKind::P | BlockKind::Q => budget.div_ceil(2),
            _ => 1,
        };
        let min_size = kind.min_size();
        if max_size < min_size {
            continue;
        }
        let size = match kind.fixed_size() {
            Some(s) => s,
            None => rng.gen_range(min_size..=max_size),
        };
        return Block::perverse(kind, size).expect("size drawn within constraints");
    }
}

/// A random plain normal form with total catalog dimension ≤ `max_dim`.
///
/// When `decorate` is set, blocks also get random shifts in `−2..=2` and
/// twists in `−3..=3` halves.
pub fn random_normal_form<R: Rng + ?Sized>(rng: &mut R, max_dim: usize, decorate: bool) -> NormalForm {
    let target = rng.gen_range(0..=max_dim);
    let mut used = 0;
    let mut blocks = Vec::new();
    while used < target {
        let mut b = random_block(rng, target - used);
        used += block_dim(&b);
        if decorate {
            b = b
                .shifted(rng.gen_range(-2..=2))
                .twisted(HalfTwist::halves(rng.gen_range(-3..=3)));
        }
        blocks.push(b);
    }
    NormalForm::new(blocks)
}

/// A random invertible `n × n` integer matrix together with its inverse,
/// built from random elementary row operations.
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (Matrix, Matrix) {
    let mut g = Matrix::identity(n);
    let mut g_inv = Matrix::identity(n);
    if n < 2 {
        return (g, g_inv);
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = Rational::from_int(rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 });
        // g ← E·g with E = I + c·e_{ij}: row i += c·row j.
        for col in 0..n {
            let v = g.get(i, col) + &(&c * g.get(j, col));
            g.set(i, col, v);
        }
        // g⁻¹ ← g⁻¹·E⁻¹ with E⁻¹ = I − c·e_{ij}: column j −= c·column i.
        for row in 0..n {
            let v = g_inv.get(row, j) - &(&c * g_inv.get(row, i));
            g_inv.set(row, j, v);
        }
    }
    (g, g_inv)
}

/// A random tuple of total dimension ≤ `max_dim`, together with the normal
/// form it was built from.
pub fn random_tuple<R: Rng + ?Sized>(rng: &mut R, max_dim: usize) -> (MonodromicTuple, NormalForm) {
    let nf = random_normal_form(rng, max_dim, false);
    let base = synthesize(&nf).expect("plain blocks have catalog tuples");
    let (gp, gp_inv) = random_invertible(rng, base.psi_dim());
    let (gf, gf_inv) = random_invertible(rng, base.phi_dim());
    let t = base
        .conjugate(&gp, &gp_inv, &gf, &gf_inv)
        .expect("base changes have matching shapes");
    (t, nf)
}
