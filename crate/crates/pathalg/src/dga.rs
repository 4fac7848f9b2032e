//! Bigraded dg path algebras (free, with a differential on generators) and
//! their cohomology.
//!
//! The differential is given on arrows and extended by the Leibniz rule
//! `d(a₁ ⋯ a_k) = Σ_i (−1)^{|a₁| + ⋯ + |a_{i−1}|} a₁ ⋯ d(a_i) ⋯ a_k` with `|a|`
//! the cohomological degree. Since the algebra is free, a path basis of each
//! bidegree is explicit and cohomology is a pair of exact sparse ranks.

use std::collections::{BTreeMap, HashMap};

use corelin::{BidegreeTable, Rational, SparseMatrix};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::quiver::{comb_from_repr, comb_to_repr, TermRepr};
use crate::{Arrow, Bidegree, LinComb, Path, PathAlgError, Quiver};

/// A free bigraded path algebra with a differential of bidegree `(1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DgaRepr", into = "DgaRepr")]
pub struct DGAlgebra {
    quiver: Quiver,
    differential: Vec<LinComb>,
}

#[derive(Serialize, Deserialize)]
struct DgaRepr {
    vertices: Vec<usize>,
    arrows: Vec<Arrow>,
    differential: BTreeMap<String, Vec<TermRepr>>,
}

impl TryFrom<DgaRepr> for DGAlgebra {
    type Error = PathAlgError;
    fn try_from(r: DgaRepr) -> Result<Self, Self::Error> {
        let quiver = Quiver::new(r.vertices, r.arrows)?;
        let mut d = Vec::new();
        for (id, terms) in &r.differential {
            d.push((quiver.arrow(id)?, comb_from_repr(&quiver, terms)?));
        }
        DGAlgebra::new(quiver, d)
    }
}

impl From<DGAlgebra> for DgaRepr {
    fn from(a: DGAlgebra) -> Self {
        let differential = a
            .differential
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_empty())
            .map(|(i, c)| (a.quiver.arrows()[i].id.clone(), comb_to_repr(&a.quiver, c)))
            .collect();
        DgaRepr {
            vertices: a.quiver.vertices().to_vec(),
            arrows: a.quiver.arrows().to_vec(),
            differential,
        }
    }
}

impl DGAlgebra {
    /// Builds the dga from `d` on generators (unlisted generators are closed),
    /// checking degrees and that `d² = 0` on every generator.
    pub fn new(quiver: Quiver, d: Vec<(usize, LinComb)>) -> Result<Self, PathAlgError> {
        let mut differential = vec![Vec::new(); quiver.arrows().len()];
        for (a, comb) in d {
            let comb: LinComb = comb.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if comb.is_empty() {
                continue;
            }
            let expected = (quiver.src(a), quiver.tgt(a), quiver.deg(a) + Bidegree::new(1, 0));
            if quiver.comb_shape(&comb)? != expected {
                return Err(PathAlgError::DifferentialDegree(quiver.arrows()[a].id.clone()));
            }
            differential[a] = comb;
        }
        let dga = DGAlgebra { quiver, differential };
        for a in 0..dga.quiver.arrows().len() {
            let dd = dga.apply_d(&dga.differential[a]);
            if !dd.is_empty() {
                return Err(PathAlgError::DSquaredNonzero(dga.quiver.arrows()[a].id.clone()));
            }
        }
        Ok(dga)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// `d` of generator `a`.
    pub fn d_generator(&self, a: usize) -> &LinComb {
        &self.differential[a]
    }

    /// The Leibniz extension of `d` to a single path.
    pub fn d_path(&self, path: &[usize]) -> BTreeMap<Path, Rational> {
        let mut out: BTreeMap<Path, Rational> = BTreeMap::new();
        let mut sign_odd = false;
        for (i, &a) in path.iter().enumerate() {
            for (rep, c) in &self.differential[a] {
                let mut p = Vec::with_capacity(path.len() + rep.len());
                p.extend_from_slice(&path[..i]);
                p.extend_from_slice(rep);
                p.extend_from_slice(&path[i + 1..]);
                let c = if sign_odd { -c } else { c.clone() };
                *out.entry(p).or_insert_with(Rational::zero) += c;
            }
            if self.quiver.deg(a).coh.rem_euclid(2) == 1 {
                sign_odd = !sign_odd;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `d` applied to a combination, with like terms collected.
    pub fn apply_d(&self, comb: &[(Path, Rational)]) -> LinComb {
        let mut acc: BTreeMap<Path, Rational> = BTreeMap::new();
        for (p, c) in comb {
            for (q, v) in self.d_path(p) {
                *acc.entry(q).or_insert_with(Rational::zero) += &v * c;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// All paths of weight `≤ cutoff` (including the trivial paths), grouped
    /// by `(source, target, bidegree)` in lexicographic order.
    pub fn paths(&self, weight_cutoff: u32) -> BTreeMap<(usize, usize, Bidegree), Vec<Path>> {
        let q = &self.quiver;
        let mut out: BTreeMap<(usize, usize, Bidegree), Vec<Path>> = BTreeMap::new();
        let mut frontier: Vec<(usize, usize, Bidegree, Path)> =
            (0..q.vertex_count()).map(|v| (v, v, Bidegree::ZERO, Vec::new())).collect();
        while let Some((s, t, d, p)) = frontier.pop() {
            for a in 0..q.arrows().len() {
                if q.src(a) != t {
                    continue;
                }
                let nd = d + q.deg(a);
                if nd.weight() <= weight_cutoff {
                    let mut np = p.clone();
                    np.push(a);
                    frontier.push((s, q.tgt(a), nd, np));
                }
            }
            out.entry((s, t, d)).or_default().push(p);
        }
        for v in out.values_mut() {
            v.sort();
        }
        out
    }

    /// Bigraded cohomology `(coh, adams) ↦ dim`, summed over endpoints, for
    /// all bidegrees of weight `≤ cutoff`.
    pub fn cohomology_table(&self, weight_cutoff: u32) -> BidegreeTable {
        let paths = self.paths(weight_cutoff);
        // Rank of d out of each (s, t, D) block, computed in parallel.
        let keys: Vec<_> = paths.keys().copied().collect();
        let ranks: HashMap<(usize, usize, Bidegree), usize> = keys
            .par_iter()
            .map(|&(s, t, d)| {
                let target_key = (s, t, d + Bidegree::new(1, 0));
                let r = match paths.get(&target_key) {
                    None => 0,
                    Some(tgt) => {
                        let index: HashMap<&Path, usize> = tgt.iter().enumerate().map(|(i, p)| (p, i)).collect();
                        let mut m = SparseMatrix::new(tgt.len());
                        for p in &paths[&(s, t, d)] {
                            let row = self.d_path(p).into_iter().map(|(q, c)| (index[&q], c));
                            m.push_row(row).expect("targets indexed");
                        }
                        m.rank()
                    }
                };
                ((s, t, d), r)
            })
            .collect();
        let mut table = BidegreeTable::new();
        for (&(s, t, d), ps) in &paths {
            let out_rank = ranks[&(s, t, d)];
            let in_rank = ranks.get(&(s, t, d - Bidegree::new(1, 0))).copied().unwrap_or(0);
            let h = ps.len() - out_rank - in_rank;
            if h > 0 {
                table.add(d.coh, d.adams, h);
            }
        }
        table
    }

    /// Cohomology dimension at one bidegree.
    pub fn cohomology_dim(&self, deg: Bidegree) -> usize {
        self.cohomology_table(deg.weight()).get(deg.coh, deg.adams)
    }

    /// Checks `d² = 0` on every path of weight `≤ cutoff`.
    pub fn check_d_squared(&self, weight_cutoff: u32) -> bool {
        self.paths(weight_cutoff).values().flatten().all(|p| {
            let dp: LinComb = self.d_path(p).into_iter().collect();
            self.apply_d(&dp).is_empty()
        })
    }
}
