//! Minimal graded free resolutions of the augmentation module and `Ext(k, k)`.
//!
//! Modules are right modules over the (traversal-order) path algebra `A`; the
//! free module on a generator at vertex `v` is `e_v A`, whose elements are
//! combinations of paths starting at `v`. The augmentation module is
//! `k = ⊕_v S_v`. The resolution is built one homological step at a time and,
//! inside a step, degree by degree in increasing weight: in each degree the
//! kernel of the previous boundary is computed exactly and new generators are
//! taken as a complement of the submodule already generated, choosing kernel
//! basis vectors in echelon order. Minimal generators in step `h` and degree
//! `D` are exactly `Ext^h(k, k)` in internal degree `D`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use corelin::{BidegreeTable, Matrix, Rational, SparseEchelon, SparseRow};
use serde::{Deserialize, Serialize};

use crate::{AlgebraBasis, Bidegree, PathAlgError, PresentedAlgebra};

/// A generator of a free module: `e_v A` shifted to start in degree `deg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    /// Vertex index.
    pub vertex: usize,
    pub deg: Bidegree,
}

/// An element of a free module: per generator index, coordinates in the
/// algebra piece `A(vertex of generator, ·, ·)`.
pub type ModuleElement = Vec<(usize, SparseRow)>;

/// One step `F_h → F_{h−1}` of a resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionStep {
    pub generators: Vec<Generator>,
    /// The image of each generator in `F_{h−1}` (empty for `h = 0`, which
    /// maps onto `k`).
    pub boundary: Vec<ModuleElement>,
}

/// Which vanishing pattern [`koszul_check`] tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KoszulMode {
    /// `Ext^h(k, k)` concentrated in internal weight `h`.
    Classical,
    /// He–Wu: `Ext` concentrated in total dg-degree 0, i.e. internal
    /// cohomological degree equal to the homological step.
    Adams,
}

/// `Ext^h(k, k)` dimensions keyed by homological step and internal bidegree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtTable {
    entries: BTreeMap<(usize, Bidegree), usize>,
    steps: usize,
    weight_cutoff: u32,
}

impl ExtTable {
    pub fn entries(&self) -> &BTreeMap<(usize, Bidegree), usize> {
        &self.entries
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn weight_cutoff(&self) -> u32 {
        self.weight_cutoff
    }

    /// `(h, internal cohomological degree) ↦ dim`.
    pub fn by_coh(&self) -> BidegreeTable {
        let mut t = BidegreeTable::new();
        for (&(h, d), &dim) in &self.entries {
            t.add(h as i64, d.coh, dim);
        }
        t
    }

    /// `(h, internal weight) ↦ dim`.
    pub fn by_weight(&self) -> BidegreeTable {
        let mut t = BidegreeTable::new();
        for (&(h, d), &dim) in &self.entries {
            t.add(h as i64, d.weight() as i64, dim);
        }
        t
    }
}

/// A degree-by-degree minimal free resolution of `k`, with `steps + 1` terms
/// and generators of weight at most `weight_cutoff`.
pub fn minimal_resolution(
    alg: &PresentedAlgebra,
    steps: usize,
    weight_cutoff: u32,
) -> Result<Vec<ResolutionStep>, PathAlgError> {
    let basis = alg.basis(weight_cutoff)?;
    resolve(&basis, steps)
}

fn resolve(basis: &AlgebraBasis, steps: usize) -> Result<Vec<ResolutionStep>, PathAlgError> {
    let nv = basis.quiver().vertex_count();
    let mut out = vec![ResolutionStep {
        generators: (0..nv)
            .map(|v| Generator {
                vertex: v,
                deg: Bidegree::ZERO,
            })
            .collect(),
        boundary: vec![Vec::new(); nv],
    }];
    for h in 1..=steps {
        let step = next_step(basis, &out[h - 1], if h >= 2 { Some(&out[h - 2]) } else { None })?;
        let done = step.generators.is_empty();
        out.push(step);
        if done {
            break;
        }
    }
    Ok(out)
}

/// Coordinates of a free module in one degree `(E, t)`: for each generator
/// with a nonzero piece `A(v_g, t, E − D_g)`, a block of that piece's size.
struct Coords {
    offsets: HashMap<usize, usize>,
    len: usize,
}

impl Coords {
    fn new(basis: &AlgebraBasis, gens: &[Generator], e: Bidegree, t: usize) -> Self {
        let mut offsets = HashMap::new();
        let mut len = 0;
        for (g, gen) in gens.iter().enumerate() {
            let dim = basis.dim(gen.vertex, t, e - gen.deg);
            if dim > 0 {
                offsets.insert(g, len);
                len += dim;
            }
        }
        Coords { offsets, len }
    }

    fn flatten(&self, elem: &ModuleElement) -> SparseRow {
        let mut row = Vec::new();
        for (g, coords) in elem {
            if coords.is_empty() {
                continue;
            }
            let off = self.offsets[g];
            row.extend(coords.iter().map(|(i, c)| (off + i, c.clone())));
        }
        row.sort_by_key(|(i, _)| *i);
        row
    }
}

/// `m · y` for a module element `m` in degree `(D, v)` and an algebra element
/// `y ∈ A(v, t, E − D)`.
fn act(
    basis: &AlgebraBasis,
    gens: &[Generator],
    m: &ModuleElement,
    m_deg: Bidegree,
    m_vertex: usize,
    y: &SparseRow,
    y_deg: Bidegree,
    t: usize,
) -> Result<ModuleElement, PathAlgError> {
    let mut out = Vec::new();
    for (g, coords) in m {
        let gen = gens[*g];
        let kx = (gen.vertex, m_vertex, m_deg - gen.deg);
        let prod = basis.mul(kx, coords, (m_vertex, t, y_deg), y)?;
        if !prod.is_empty() {
            out.push((*g, prod));
        }
    }
    Ok(out)
}

fn next_step(
    basis: &AlgebraBasis,
    prev: &ResolutionStep,
    prev_prev: Option<&ResolutionStep>,
) -> Result<ResolutionStep, PathAlgError> {
    let cutoff = basis.weight_cutoff();
    let nv = basis.quiver().vertex_count();
    // All degrees (E, t) in which F_{h−1} is nonzero, in increasing weight.
    let mut degrees = BTreeSet::new();
    for gen in &prev.generators {
        for &(s, t, d) in basis.pieces().keys() {
            let e = gen.deg + d;
            if s == gen.vertex && e.weight() <= cutoff {
                degrees.insert((e.weight(), e, t));
            }
        }
    }
    let mut generators: Vec<Generator> = Vec::new();
    let mut boundary: Vec<ModuleElement> = Vec::new();
    for (_, e, t) in degrees {
        let dom = Coords::new(basis, &prev.generators, e, t);
        // Kernel of F_{h−1} → F_{h−2} (or → k) in degree (E, t), as columns.
        let kernel: Vec<SparseRow> = match prev_prev {
            None => {
                if e == Bidegree::ZERO {
                    Vec::new()
                } else {
                    (0..dom.len).map(|i| vec![(i, Rational::one())]).collect()
                }
            }
            Some(pp) => {
                let cod = Coords::new(basis, &pp.generators, e, t);
                let mut m = Matrix::zeros(cod.len, dom.len);
                for (g, &off) in &dom.offsets {
                    let gen = prev.generators[*g];
                    let yd = e - gen.deg;
                    let dim = basis.dim(gen.vertex, t, yd);
                    for i in 0..dim {
                        let y = vec![(i, Rational::one())];
                        let img = act(basis, &pp.generators, &prev.boundary[*g], gen.deg, gen.vertex, &y, yd, t)?;
                        for (r, c) in cod.flatten(&img) {
                            m.set(r, off + i, c);
                        }
                    }
                }
                let k = m.kernel_basis();
                (0..k.cols())
                    .map(|c| {
                        (0..k.rows())
                            .filter(|&r| !k.get(r, c).is_zero())
                            .map(|r| (r, k.get(r, c).clone()))
                            .collect()
                    })
                    .collect()
            }
        };
        if kernel.is_empty() {
            continue;
        }
        // The submodule generated so far, in degree (E, t).
        let mut span = SparseEchelon::new(dom.len);
        for (g, gen) in generators.iter().enumerate() {
            let yd = e - gen.deg;
            for i in 0..basis.dim(gen.vertex, t, yd) {
                let y = vec![(i, Rational::one())];
                let img = act(basis, &prev.generators, &boundary[g], gen.deg, gen.vertex, &y, yd, t)?;
                span.insert(dom.flatten(&img));
            }
        }
        for vec in kernel {
            if span.insert(vec.clone()) {
                generators.push(Generator { vertex: t, deg: e });
                boundary.push(unflatten(basis, &prev.generators, &dom, &vec, e, t));
            }
        }
    }
    debug_assert!(generators.iter().all(|g| g.vertex < nv));
    Ok(ResolutionStep { generators, boundary })
}

fn unflatten(
    basis: &AlgebraBasis,
    gens: &[Generator],
    coords: &Coords,
    row: &SparseRow,
    e: Bidegree,
    t: usize,
) -> ModuleElement {
    let mut blocks: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for (g, &off) in &coords.offsets {
        let dim = basis.dim(gens[*g].vertex, t, e - gens[*g].deg);
        let part: SparseRow = row
            .iter()
            .filter(|(i, _)| *i >= off && *i < off + dim)
            .map(|(i, c)| (i - off, c.clone()))
            .collect();
        if !part.is_empty() {
            blocks.insert(*g, part);
        }
    }
    blocks.into_iter().collect()
}

/// Bigraded `Ext(k, k)` from a minimal resolution with `steps` steps and
/// internal weight `≤ weight_cutoff`. Since a minimal resolution of an algebra
/// generated in positive weight has `h`-th generators in weight `≥ h`, taking
/// `steps = weight_cutoff` determines every entry within the cutoff.
pub fn ext_table(alg: &PresentedAlgebra, steps: usize, weight_cutoff: u32) -> Result<ExtTable, PathAlgError> {
    let res = minimal_resolution(alg, steps, weight_cutoff)?;
    let mut entries = BTreeMap::new();
    for (h, step) in res.iter().enumerate() {
        for g in &step.generators {
            *entries.entry((h, g.deg)).or_insert(0) += 1;
        }
    }
    Ok(ExtTable {
        entries,
        steps,
        weight_cutoff,
    })
}

/// `Ext^h(k, k)` as a table keyed by `(h, internal cohomological degree)`,
/// complete for internal weight `≤ weight_cutoff`.
pub fn ext_kk_table(alg: &PresentedAlgebra, weight_cutoff: u32) -> Result<BidegreeTable, PathAlgError> {
    Ok(ext_table(alg, weight_cutoff as usize, weight_cutoff)?.by_coh())
}

/// Tests the Koszul vanishing pattern on `Ext(k, k)` up to the cutoff.
pub fn koszul_check(alg: &PresentedAlgebra, mode: KoszulMode, weight_cutoff: u32) -> Result<bool, PathAlgError> {
    let ext = ext_table(alg, weight_cutoff as usize, weight_cutoff)?;
    Ok(ext.entries().keys().all(|&(h, d)| match mode {
        KoszulMode::Classical => d.weight() as usize == h,
        KoszulMode::Adams => d.coh == h as i64,
    }))
}
