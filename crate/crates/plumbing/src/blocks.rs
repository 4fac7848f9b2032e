//! The objects `𝓗_j`, their towers, Hodge twists and restrictions.
//!
//! All blocks here are unshifted sheaves (block shift `−1`, see
//! [`monodromic::Block`]). Slot `l` of `𝓗_j` carries the twist `|l − j|/2`;
//! layer `u` of a tower is `𝓗_j` (`u` even) or its flip `𝓗_j°` (`u` odd),
//! shifted by `[u]` and twisted by `u·w̃_j`.

use monodromic::{restrict_w, Block, BlockKind, Decoration, HalfTwist, LocalSystemTerm};
use serde::{Deserialize, Serialize};

use crate::{check_index, PlumbingError, PlumbingObject};

/// The Hodge twists attached to index `j` of the `A_n` plumbing, in halves:
/// `w_j = (n − 2j + 1)/2` for `j ≤ n/2`, `w̃_j = w_j + 1` there, `w̃ = 1` at
/// the odd middle, and both mirrored (`j ↦ n − j + 1`) for `j > n/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistTable {
    pub n: usize,
    pub j: usize,
    pub w: HalfTwist,
    pub wtilde: HalfTwist,
}

impl TwistTable {
    pub fn new(n: usize, j: usize) -> Result<Self, PlumbingError> {
        check_index(j, n)?;
        let jj = j.min(n - j + 1) as i64;
        let n_i = n as i64;
        let middle = n % 2 == 1 && 2 * j == n + 1;
        let w = n_i - 2 * jj + 1;
        let wtilde = if middle { 2 } else { w + 2 };
        Ok(TwistTable {
            n,
            j,
            w: HalfTwist::halves(w),
            wtilde: HalfTwist::halves(wtilde),
        })
    }
}

/// `s(j, i) = min(j, n − j + 1, i, n − i + 1)`.
pub fn s_index(n: usize, j: usize, i: usize) -> usize {
    j.min(n + 1 - j).min(i).min(n + 1 - i)
}

fn unshifted(kind: BlockKind, size: usize, twist_halves: usize) -> Result<Block, PlumbingError> {
    Ok(Block::new(kind, size, -1, HalfTwist::halves(twist_halves as i64))?)
}

/// Reverses the slot order and swaps each pair: `𝓗 ↦ 𝓗°`.
pub fn flip_slots(slots: Vec<(Block, Block)>) -> Vec<(Block, Block)> {
    slots.into_iter().rev().map(|(f, g)| (g, f)).collect()
}

/// The slot pairs `(F^l, G^l)` of `𝓗_j` (or of the primed `𝓗_j′`, which has
/// plain `P_j`, `A_j` in place of the under-decorated blocks).
pub fn block_h_slots(n: usize, j: usize, primed: bool) -> Result<Vec<(Block, Block)>, PlumbingError> {
    use BlockKind::*;
    check_index(j, n)?;
    let tw = |l: usize| l.abs_diff(j);
    if n == 1 {
        let kind = if primed { OveP } else { TildeUndP };
        let b = unshifted(kind, 1, 0)?;
        return Ok(vec![(b, b)]);
    }
    if 2 * j > n + 1 {
        return Ok(flip_slots(block_h_slots(n, n + 1 - j, primed)?));
    }
    let mut slots = Vec::with_capacity(n);
    if n % 2 == 1 && 2 * j == n + 1 {
        let middle = if primed { OveP } else { OveUndP };
        for l in 1..=n {
            let pair = if l < j {
                (unshifted(P, l, tw(l))?, unshifted(Q, l + 1, tw(l))?)
            } else if l == j {
                let b = unshifted(middle, j, 0)?;
                (b, b)
            } else {
                (unshifted(Q, n - l + 2, tw(l))?, unshifted(P, n - l + 1, tw(l))?)
            };
            slots.push(pair);
        }
        return Ok(slots);
    }
    let (und_p, und_a) = if primed { (P, A) } else { (UndP, UndA) };
    for l in 1..=n {
        let t = tw(l);
        let pair = if l < j {
            (unshifted(P, l, t)?, unshifted(Q, l + 1, t)?)
        } else if l == j {
            (unshifted(und_p, j, t)?, unshifted(und_a, j, t)?)
        } else if l <= n - j {
            (unshifted(B, j, t)?, unshifted(A, j, t)?)
        } else if l == n - j + 1 {
            (unshifted(OveB, j, t)?, unshifted(OveP, j, t)?)
        } else {
            (unshifted(Q, n - l + 2, t)?, unshifted(P, n - l + 1, t)?)
        };
        slots.push(pair);
    }
    Ok(slots)
}

/// `𝓗_j` as a core plumbing object.
pub fn build_block_h(n: usize, j: usize) -> Result<PlumbingObject, PlumbingError> {
    let slots = block_h_slots(n, j, false)?;
    PlumbingObject::from_pairs(n, slots.into_iter().map(|(f, g)| (vec![f], vec![g])).collect())
}

/// The primed variant `𝓗_j′`.
pub fn build_block_h_primed(n: usize, j: usize) -> Result<PlumbingObject, PlumbingError> {
    let slots = block_h_slots(n, j, true)?;
    PlumbingObject::from_pairs(n, slots.into_iter().map(|(f, g)| (vec![f], vec![g])).collect())
}

/// The layers `u = 0..=k` of the tower `𝓗_j^k`, each as slot pairs: layer `u`
/// is `𝓗_j` (or `𝓗_j′` for `u = 0` when `primed`) for even `u` and `𝓗_j°`
/// for odd `u`, shifted by `[u]` and twisted by `u·w̃_j`.
pub fn tower_layers(n: usize, j: usize, k: usize, primed: bool) -> Result<Vec<Vec<(Block, Block)>>, PlumbingError> {
    let wt = TwistTable::new(n, j)?.wtilde;
    (0..=k)
        .map(|u| {
            let base = block_h_slots(n, j, primed && u == 0)?;
            let base = if u % 2 == 1 { flip_slots(base) } else { base };
            let twist = HalfTwist::halves(u as i64 * wt.halves);
            let adjust = |b: Block| b.shifted(u as i64).twisted(twist);
            Ok(base.into_iter().map(|(f, g)| (adjust(f), adjust(g))).collect())
        })
        .collect()
}

/// The tower `𝓗_j^k` as its associated graded: slot `l` holds the layers'
/// slot-`l` blocks in layer order.
pub fn build_tower(n: usize, j: usize, k: usize, primed: bool) -> Result<PlumbingObject, PlumbingError> {
    let layers = tower_layers(n, j, k, primed)?;
    let pairs = (0..n)
        .map(|l| {
            let left = layers.iter().map(|layer| layer[l].0).collect();
            let right = layers.iter().map(|layer| layer[l].1).collect();
            (left, right)
        })
        .collect();
    PlumbingObject::from_pairs(n, pairs)
}

/// The closed-form restriction of `𝓗_j^k` to the open part of component `i`,
/// one plain term per layer: `L_{s(j,i)}[u](e_u)` with
/// `e_u = u·w̃_j + d_u`, `d_u = |j − i|/2` for even `u` and
/// `|n − j + 1 − i|/2` for odd `u`.
pub fn restriction_formula(n: usize, j: usize, k: usize, i: usize) -> Result<Vec<LocalSystemTerm>, PlumbingError> {
    check_index(i, n)?;
    let wt = TwistTable::new(n, j)?.wtilde.halves;
    let size = s_index(n, j, i);
    Ok((0..=k)
        .map(|u| {
            let d = if u % 2 == 0 { j.abs_diff(i) } else { (n + 1 - j).abs_diff(i) };
            LocalSystemTerm {
                size,
                decorated: Decoration::Plain,
                shift: u as i64,
                twist: HalfTwist::halves(u as i64 * wt + d as i64),
            }
        })
        .collect())
}

/// The literal restrictions of the layers' slot-`i` blocks (decorations kept).
pub fn tower_restrictions(
    n: usize,
    j: usize,
    k: usize,
    i: usize,
    primed: bool,
) -> Result<Vec<LocalSystemTerm>, PlumbingError> {
    check_index(i, n)?;
    let layers = tower_layers(n, j, k, primed)?;
    Ok(layers
        .iter()
        .filter_map(|layer| restrict_w(&layer[i - 1].0))
        .collect())
}

/// Restriction of the tower `𝓗_j^k` (base layer primed) to component `i`:
/// plain terms for the layers `u < k`, which are glued by the cone structure,
/// and the literal, possibly decorated, restriction of the top layer.
pub fn restrict_tower(n: usize, j: usize, k: usize, i: usize) -> Result<Vec<LocalSystemTerm>, PlumbingError> {
    let mut terms = restriction_formula(n, j, k, i)?;
    terms.truncate(k);
    terms.extend(tower_restrictions(n, j, k, i, true)?.into_iter().skip(k));
    Ok(terms)
}
