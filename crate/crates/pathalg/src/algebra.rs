//! Path algebras with relations, computed degree by degree.
//!
//! For `A = kQ / I` with `I` generated by relations `R`, every degree piece
//! satisfies
//!
//! ```text
//! A(s, t, D) = ( ⊕_{a: u → t} A(s, u, D − deg a) ⊗ a ) / span{ x·r }
//! ```
//!
//! where `x` runs over a basis of `A(s, src r, D − deg r)` and `r` over the
//! relations ending at `t`. (The two-sided ideal is `I·kQ₊ + kQ·R`, and the
//! first summand is already divided out in lower degrees.) Each piece is built
//! from the pieces of smaller weight, so no Gröbner machinery is needed: the
//! quotient is an exact linear-algebra cokernel. Every basis element is the
//! image of a path (its *word*), and products are evaluated arrow by arrow.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use corelin::{Rational, SparseEchelon, SparseRow};
use serde::{Deserialize, Serialize};

use crate::quiver::{comb_from_repr, comb_to_repr, TermRepr};
use crate::{Arrow, Bidegree, LinComb, Path, PathAlgError, Quiver};

/// A quiver algebra presented by homogeneous relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AlgebraRepr", into = "AlgebraRepr")]
pub struct PresentedAlgebra {
    quiver: Quiver,
    relations: Vec<LinComb>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraRepr {
    vertices: Vec<usize>,
    arrows: Vec<Arrow>,
    relations: Vec<Vec<TermRepr>>,
}

impl TryFrom<AlgebraRepr> for PresentedAlgebra {
    type Error = PathAlgError;
    fn try_from(r: AlgebraRepr) -> Result<Self, Self::Error> {
        let quiver = Quiver::new(r.vertices, r.arrows)?;
        let relations = r
            .relations
            .iter()
            .map(|rel| comb_from_repr(&quiver, rel))
            .collect::<Result<Vec<_>, _>>()?;
        PresentedAlgebra::new(quiver, relations)
    }
}

impl From<PresentedAlgebra> for AlgebraRepr {
    fn from(a: PresentedAlgebra) -> Self {
        let relations = a.relations.iter().map(|r| comb_to_repr(&a.quiver, r)).collect();
        AlgebraRepr {
            vertices: a.quiver.vertices().to_vec(),
            arrows: a.quiver.arrows().to_vec(),
            relations,
        }
    }
}

impl PresentedAlgebra {
    /// Validates that every relation is a nonempty, homogeneous combination of
    /// parallel nonempty paths.
    pub fn new(quiver: Quiver, relations: Vec<LinComb>) -> Result<Self, PathAlgError> {
        for r in &relations {
            quiver.comb_shape(r)?;
        }
        Ok(PresentedAlgebra { quiver, relations })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[LinComb] {
        &self.relations
    }

    /// All degree pieces of weight at most `weight_cutoff`.
    pub fn basis(&self, weight_cutoff: u32) -> Result<AlgebraBasis, PathAlgError> {
        AlgebraBasis::build(self, weight_cutoff)
    }

    /// `dim A^D`, summed over all pairs of endpoints.
    pub fn graded_dim(&self, deg: Bidegree) -> Result<usize, PathAlgError> {
        Ok(self.basis(deg.weight())?.graded_dim(deg))
    }

    /// `dim e_j A^D e_i`: paths from vertex label `i` to vertex label `j`.
    pub fn path_count(&self, i: usize, j: usize, deg: Bidegree) -> Result<usize, PathAlgError> {
        let (i, j) = (self.quiver.vertex(i)?, self.quiver.vertex(j)?);
        Ok(self.basis(deg.weight())?.dim(i, j, deg))
    }
}

/// The key of a degree piece: `(source index, target index, bidegree)`.
pub type PieceKey = (usize, usize, Bidegree);

/// One degree piece `A(s, t, D)` of a presented algebra.
#[derive(Clone, Debug)]
pub struct Piece {
    words: Vec<Path>,
    /// `(arrow, basis index in the predecessor piece)` → candidate column.
    candidates: HashMap<(usize, usize), usize>,
    /// Candidate column → coordinates in this piece's basis.
    reduce: Vec<SparseRow>,
}

impl Piece {
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    /// A representative path for each basis element.
    pub fn words(&self) -> &[Path] {
        &self.words
    }
}

/// The degree pieces of a presented algebra up to a weight cutoff, with
/// multiplication of basis elements.
#[derive(Clone, Debug)]
pub struct AlgebraBasis {
    quiver: Quiver,
    weight_cutoff: u32,
    pieces: BTreeMap<PieceKey, Piece>,
}

impl AlgebraBasis {
    fn build(alg: &PresentedAlgebra, weight_cutoff: u32) -> Result<Self, PathAlgError> {
        let q = &alg.quiver;
        let mut pieces = BTreeMap::new();
        for v in 0..q.vertex_count() {
            pieces.insert(
                (v, v, Bidegree::ZERO),
                Piece {
                    words: vec![Vec::new()],
                    candidates: HashMap::new(),
                    reduce: Vec::new(),
                },
            );
        }
        let rel_shapes: Vec<PieceKey> = alg
            .relations
            .iter()
            .map(|r| q.comb_shape(r))
            .collect::<Result<_, _>>()?;
        let mut basis = AlgebraBasis {
            quiver: q.clone(),
            weight_cutoff,
            pieces,
        };
        for w in 1..=weight_cutoff {
            let mut keys = BTreeSet::new();
            for (a, arrow) in q.arrows().iter().enumerate() {
                let aw = arrow.deg.weight();
                if aw > w {
                    continue;
                }
                for &(s, u, d) in basis.pieces.keys() {
                    if u == q.src(a) && d.weight() == w - aw {
                        keys.insert((s, q.tgt(a), d + arrow.deg));
                    }
                }
            }
            for key in keys {
                if let Some(piece) = basis.build_piece(alg, &rel_shapes, key)? {
                    basis.pieces.insert(key, piece);
                }
            }
        }
        Ok(basis)
    }

    fn build_piece(
        &self,
        alg: &PresentedAlgebra,
        rel_shapes: &[PieceKey],
        (s, t, d): PieceKey,
    ) -> Result<Option<Piece>, PathAlgError> {
        let q = &self.quiver;
        let mut candidates = HashMap::new();
        let mut cand_words = Vec::new();
        for (a, arrow) in q.arrows().iter().enumerate() {
            if q.tgt(a) != t || arrow.deg.weight() > d.weight() {
                continue;
            }
            if let Some(prev) = self.pieces.get(&(s, q.src(a), d - arrow.deg)) {
                for (i, w) in prev.words.iter().enumerate() {
                    candidates.insert((a, i), cand_words.len());
                    let mut word = w.clone();
                    word.push(a);
                    cand_words.push(word);
                }
            }
        }
        if cand_words.is_empty() {
            return Ok(None);
        }
        let mut echelon = SparseEchelon::new(cand_words.len());
        for (rel, &(rs, rt, rd)) in alg.relations.iter().zip(rel_shapes) {
            if rt != t || rd.weight() > d.weight() {
                continue;
            }
            let Some(prev) = self.pieces.get(&(s, rs, d - rd)) else {
                continue;
            };
            for i in 0..prev.dim() {
                let mut row: SparseRow = Vec::new();
                for (path, coef) in rel {
                    let (last, prefix) = path.split_last().expect("relation paths are nonempty");
                    let x = self.mul_word((s, rs, d - rd), &[(i, Rational::one())], prefix)?;
                    for (j, c) in x {
                        let col = candidates[&(*last, j)];
                        row.push((col, &c * coef));
                    }
                }
                echelon.insert(row);
            }
        }
        let free = echelon.free_columns();
        if free.is_empty() {
            return Ok(None);
        }
        let position: HashMap<usize, usize> = free.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let reduce = (0..cand_words.len())
            .map(|c| {
                echelon
                    .reduce([(c, Rational::one())])
                    .into_iter()
                    .map(|(col, v)| (position[&col], v))
                    .collect()
            })
            .collect();
        let words = free.iter().map(|&c| cand_words[c].clone()).collect();
        Ok(Some(Piece {
            words,
            candidates,
            reduce,
        }))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn weight_cutoff(&self) -> u32 {
        self.weight_cutoff
    }

    /// All nonzero pieces.
    pub fn pieces(&self) -> &BTreeMap<PieceKey, Piece> {
        &self.pieces
    }

    pub fn piece(&self, key: PieceKey) -> Option<&Piece> {
        self.pieces.get(&key)
    }

    /// `dim A(s, t, D)` for vertex indices `s`, `t`.
    pub fn dim(&self, s: usize, t: usize, deg: Bidegree) -> usize {
        self.pieces.get(&(s, t, deg)).map_or(0, Piece::dim)
    }

    /// `dim A^D` summed over endpoints.
    pub fn graded_dim(&self, deg: Bidegree) -> usize {
        self.pieces
            .iter()
            .filter(|((_, _, d), _)| *d == deg)
            .map(|(_, p)| p.dim())
            .sum()
    }

    /// `D ↦ dim A^D` over all bidegrees up to the cutoff.
    pub fn graded_dims(&self) -> BTreeMap<Bidegree, usize> {
        let mut out = BTreeMap::new();
        for ((_, _, d), p) in &self.pieces {
            *out.entry(*d).or_insert(0) += p.dim();
        }
        out
    }

    /// `dim A`, up to the cutoff.
    pub fn total_dim(&self) -> usize {
        self.pieces.values().map(Piece::dim).sum()
    }

    /// `x · a` for `x` given by coordinates in piece `key` and an arrow `a`.
    pub fn mul_arrow(&self, (s, u, d): PieceKey, x: &[(usize, Rational)], a: usize) -> Result<SparseRow, PathAlgError> {
        if x.is_empty() {
            return Ok(Vec::new());
        }
        if self.quiver.src(a) != u {
            return Err(PathAlgError::NotComposable(self.quiver.ids(&[a])));
        }
        let target = (s, self.quiver.tgt(a), d + self.quiver.deg(a));
        if target.2.weight() > self.weight_cutoff {
            return Err(PathAlgError::BeyondCutoff {
                weight: target.2.weight(),
                cutoff: self.weight_cutoff,
            });
        }
        let Some(piece) = self.pieces.get(&target) else {
            return Ok(Vec::new());
        };
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in x {
            for (j, v) in &piece.reduce[piece.candidates[&(a, *i)]] {
                *acc.entry(*j).or_insert_with(Rational::zero) += c * v;
            }
        }
        Ok(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    /// `x · (a₁ a₂ … a_k)` (traversal order), for `x` in piece `key`.
    pub fn mul_word(&self, key: PieceKey, x: &[(usize, Rational)], word: &[usize]) -> Result<SparseRow, PathAlgError> {
        let (s, mut u, mut d) = key;
        let mut cur: SparseRow = x.to_vec();
        for &a in word {
            cur = self.mul_arrow((s, u, d), &cur, a)?;
            u = self.quiver.tgt(a);
            d = d + self.quiver.deg(a);
        }
        Ok(cur)
    }

    /// `x · y` for `x` in piece `kx` and `y` in piece `ky`, with `y` expanded
    /// through the words of its basis elements. The result lies in piece
    /// `(kx.0, ky.1, kx.2 + ky.2)`.
    pub fn mul(
        &self,
        kx: PieceKey,
        x: &[(usize, Rational)],
        ky: PieceKey,
        y: &[(usize, Rational)],
    ) -> Result<SparseRow, PathAlgError> {
        if kx.1 != ky.0 {
            return Err(PathAlgError::NotComposable(Vec::new()));
        }
        let Some(py) = self.pieces.get(&ky) else {
            return Ok(Vec::new());
        };
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (j, cy) in y {
            for (k, v) in self.mul_word(kx, x, &py.words[*j])? {
                *acc.entry(k).or_insert_with(Rational::zero) += &v * cy;
            }
        }
        Ok(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    /// The image of a single arrow, as coordinates in its piece.
    pub fn arrow_element(&self, a: usize) -> Result<(PieceKey, SparseRow), PathAlgError> {
        let s = self.quiver.src(a);
        let x = self.mul_arrow((s, s, Bidegree::ZERO), &[(0, Rational::one())], a)?;
        Ok(((s, self.quiver.tgt(a), self.quiver.deg(a)), x))
    }
}
