//! The reduced bar complex `⊕_m (Ā[1])^{⊗m}` with its differential.
//!
//! A word `[a₁|…|a_m]` of augmentation-ideal basis elements has degree
//! `Σ (|a_l| − 1)` and weight `Σ wt(a_l)`. The differential merges adjacent
//! letters,
//!
//! ```text
//! d[a₁|…|a_m] = Σ_{i=1}^{m−1} (−1)^{ε_i} [a₁|…|a_i a_{i+1}|…|a_m],
//! ε_i = Σ_{l ≤ i} (|a_l| − 1),
//! ```
//!
//! raising the degree by one and preserving the weight. Since the algebra is
//! connected, every letter has bar degree at least one, so each degree is
//! spanned by finitely many words.

use std::collections::{BTreeMap, HashMap};

use corelin::{BidegreeTable, Rational, SparseMatrix};

use crate::WeightedAlgebra;

/// A tensor word of augmentation-ideal basis indices.
pub type Word = Vec<usize>;

/// All bar words up to a degree cutoff, grouped by `(degree, weight)`.
#[derive(Clone, Debug)]
pub struct BarComplex {
    alg: WeightedAlgebra,
    degree_cutoff: u32,
    words: BTreeMap<(u32, u32), Vec<Word>>,
}

impl BarComplex {
    /// Enumerates every word of degree `≤ degree_cutoff`.
    pub fn new(alg: &WeightedAlgebra, degree_cutoff: u32) -> Self {
        let letters = alg.augmentation_ideal();
        let mut words: BTreeMap<(u32, u32), Vec<Word>> = BTreeMap::new();
        let mut stack: Vec<(Word, u32, u32)> = vec![(Vec::new(), 0, 0)];
        while let Some((w, d, wt)) = stack.pop() {
            for &a in &letters {
                let e = &alg.basis()[a];
                let nd = d + e.deg - 1;
                if nd <= degree_cutoff {
                    let mut nw = w.clone();
                    nw.push(a);
                    stack.push((nw, nd, wt + e.weight));
                }
            }
            words.entry((d, wt)).or_default().push(w);
        }
        for v in words.values_mut() {
            v.sort();
        }
        BarComplex {
            alg: alg.clone(),
            degree_cutoff,
            words,
        }
    }

    pub fn degree_cutoff(&self) -> u32 {
        self.degree_cutoff
    }

    /// Words in bidegree `(degree, weight)`.
    pub fn words(&self, degree: u32, weight: u32) -> &[Word] {
        self.words.get(&(degree, weight)).map_or(&[], Vec::as_slice)
    }

    /// All nonempty `(degree, weight)` groups.
    pub fn bidegrees(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.words.keys().copied()
    }

    /// The bar differential of one word.
    pub fn differential(&self, word: &[usize]) -> BTreeMap<Word, Rational> {
        let mut out: BTreeMap<Word, Rational> = BTreeMap::new();
        let mut eps = 0u32;
        for i in 0..word.len().saturating_sub(1) {
            eps += self.alg.basis()[word[i]].deg - 1;
            let sign = if eps % 2 == 1 { -Rational::one() } else { Rational::one() };
            for (k, c) in self.alg.mul(word[i], word[i + 1]) {
                let mut w = Vec::with_capacity(word.len() - 1);
                w.extend_from_slice(&word[..i]);
                w.push(*k);
                w.extend_from_slice(&word[i + 2..]);
                *out.entry(w).or_insert_with(Rational::zero) += &sign * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `d: C^{degree, weight} → C^{degree+1, weight}` as a sparse matrix with
    /// one row per source word. `None` if the target lies beyond the cutoff.
    pub fn differential_matrix(&self, degree: u32, weight: u32) -> Option<SparseMatrix> {
        if degree + 1 > self.degree_cutoff {
            return None;
        }
        let target = self.words(degree + 1, weight);
        let index: HashMap<&Word, usize> = target.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut m = SparseMatrix::new(target.len());
        for w in self.words(degree, weight) {
            let row = self.differential(w).into_iter().map(|(t, c)| (index[&t], c));
            m.push_row(row).expect("targets are enumerated");
        }
        Some(m)
    }

    /// `d² = 0` on every word of degree `≤ cutoff − 2`.
    pub fn check_d_squared(&self) -> bool {
        self.words.values().flatten().all(|w| {
            let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
            for (v, c) in self.differential(w) {
                for (u, e) in self.differential(&v) {
                    *acc.entry(u).or_insert_with(Rational::zero) += &c * &e;
                }
            }
            acc.values().all(Rational::is_zero)
        })
    }

    /// Cohomology `(degree, weight) ↦ dim` for every degree `≤ cutoff − 1`
    /// (the top degree would need the next one to be exact).
    pub fn cohomology_table(&self) -> BidegreeTable {
        let mut ranks: HashMap<(u32, u32), usize> = HashMap::new();
        for (d, w) in self.bidegrees() {
            if let Some(m) = self.differential_matrix(d, w) {
                ranks.insert((d, w), m.rank());
            }
        }
        let mut t = BidegreeTable::new();
        for (&(d, w), words) in &self.words {
            if d + 1 > self.degree_cutoff {
                continue;
            }
            let out = ranks.get(&(d, w)).copied().unwrap_or(0);
            let inc = if d == 0 { 0 } else { ranks.get(&(d - 1, w)).copied().unwrap_or(0) };
            t.add(d as i64, w as i64, words.len() - out - inc);
        }
        t
    }
}

/// Bar cohomology `(degree, weight) ↦ dim` for all degrees `≤ degree_cutoff`.
pub fn bar_cohomology_table(alg: &WeightedAlgebra, degree_cutoff: u32) -> BidegreeTable {
    BarComplex::new(alg, degree_cutoff + 1).cohomology_table()
}
