//! The concrete algebras of the type-`A_n` story.
//!
//! Vertices are labelled `1..=n`. All presentations are in traversal order:
//! the loop at `v` through a neighbour `w` is the path `[v → w, w → v]`.

use corelin::Rational;

use crate::{Arrow, Bidegree, DGAlgebra, LinComb, Path, PathAlgError, PresentedAlgebra, Quiver};

fn require(cond: bool, msg: impl Into<String>) -> Result<(), PathAlgError> {
    if cond {
        Ok(())
    } else {
        Err(PathAlgError::InvalidParameter(msg.into()))
    }
}

fn one(path: Path) -> LinComb {
    vec![(path, Rational::one())]
}

fn difference(p: Path, q: Path) -> LinComb {
    vec![(p, Rational::one()), (q, -Rational::one())]
}

/// The algebra `A_Γ` of the `A_n` tree: arrows `e{v}_{w}: v → w` for adjacent
/// vertices in bidegree `(1, −1)` and a loop `w{v}` at every vertex in
/// bidegree `(2, −2)`, subject to `(v → w → v) = w_v` for every edge and
/// every other composable product of two generators being zero.
pub fn construct_agamma(n: usize) -> Result<PresentedAlgebra, PathAlgError> {
    require(n >= 1, "A_Γ needs n ≥ 1")?;
    let mut arrows = Vec::new();
    for v in 1..=n {
        for w in [v.wrapping_sub(1), v + 1] {
            if (1..=n).contains(&w) {
                arrows.push(Arrow::new(format!("e{v}_{w}"), v, w, Bidegree::new(1, -1)));
            }
        }
    }
    for v in 1..=n {
        arrows.push(Arrow::new(format!("w{v}"), v, v, Bidegree::new(2, -2)));
    }
    let q = Quiver::new((1..=n).collect(), arrows)?;
    let mut relations = Vec::new();
    let na = q.arrows().len();
    for a in 0..na {
        for b in 0..na {
            if q.tgt(a) != q.src(b) {
                continue;
            }
            let is_edge = |x: usize| q.src(x) != q.tgt(x);
            if is_edge(a) && is_edge(b) && q.src(a) == q.tgt(b) {
                let loop_v = q.arrow(&format!("w{}", q.vertices()[q.src(a)]))?;
                relations.push(difference(vec![a, b], vec![loop_v]));
            } else {
                relations.push(one(vec![a, b]));
            }
        }
    }
    PresentedAlgebra::new(q, relations)
}

/// The Ginzburg dga of the `A_n` quiver with the standard orientation
/// `v → v + 1`; see [`construct_ginzburg_oriented`].
pub fn construct_ginzburg(n: usize) -> Result<DGAlgebra, PathAlgError> {
    construct_ginzburg_oriented(n, &vec![false; n.saturating_sub(1)])
}

/// The Ginzburg dga of the `A_n` quiver. Edge `v — v+1` carries `g{v}` and
/// its dual `gs{v}`, both in bidegree `(1, −1)`; `g{v}` points `v → v + 1`
/// unless `flip[v − 1]` is set. Each vertex carries a closed-up loop `h{v}` in
/// bidegree `(1, −2)` with `d h = Σ g g* − Σ g* g` (products read
/// right-to-left): for an edge `g: s → t`, the loop at `t` through `s`
/// contributes `+`, the loop at `s` through `t` contributes `−`.
pub fn construct_ginzburg_oriented(n: usize, flip: &[bool]) -> Result<DGAlgebra, PathAlgError> {
    require(n >= 1, "G_Γ needs n ≥ 1")?;
    require(flip.len() == n - 1, format!("orientation needs {} entries", n - 1))?;
    let mut arrows = Vec::new();
    for v in 1..n {
        let (s, t) = if flip[v - 1] { (v + 1, v) } else { (v, v + 1) };
        arrows.push(Arrow::new(format!("g{v}"), s, t, Bidegree::new(1, -1)));
        arrows.push(Arrow::new(format!("gs{v}"), t, s, Bidegree::new(1, -1)));
    }
    for v in 1..=n {
        arrows.push(Arrow::new(format!("h{v}"), v, v, Bidegree::new(1, -2)));
    }
    let q = Quiver::new((1..=n).collect(), arrows)?;
    let mut d: Vec<LinComb> = vec![Vec::new(); n + 1];
    for v in 1..n {
        let g = q.arrow(&format!("g{v}"))?;
        let gs = q.arrow(&format!("gs{v}"))?;
        let (s, t) = (q.vertices()[q.src(g)], q.vertices()[q.tgt(g)]);
        d[t].push((vec![gs, g], Rational::one()));
        d[s].push((vec![g, gs], -Rational::one()));
    }
    let mut diff = Vec::new();
    for v in 1..=n {
        diff.push((q.arrow(&format!("h{v}"))?, std::mem::take(&mut d[v])));
    }
    DGAlgebra::new(q, diff)
}

fn chain_quiver(n: usize) -> Result<Quiver, PathAlgError> {
    let mut arrows = Vec::new();
    for i in 1..n {
        arrows.push(Arrow::new(format!("f{i}"), i, i + 1, Bidegree::new(1, 1)));
        arrows.push(Arrow::new(format!("g{i}"), i + 1, i, Bidegree::new(1, 1)));
    }
    Quiver::new((1..=n).collect(), arrows)
}

/// The common relations of `L_Γ` and `M_Γ`: at every interior vertex the loop
/// through the lower neighbour equals the loop through the upper one.
fn interior_relations(q: &Quiver, n: usize) -> Result<Vec<LinComb>, PathAlgError> {
    let mut rels = Vec::new();
    for i in 1..n.saturating_sub(1) {
        rels.push(difference(
            q.path(&[&format!("g{i}"), &format!("f{i}")])?,
            q.path(&[&format!("f{}", i + 1), &format!("g{}", i + 1)])?,
        ));
    }
    Ok(rels)
}

/// `L_Γ`: the doubled `A_n` quiver with `f{i}: i → i+1`, `g{i}: i+1 → i` in
/// degree `(1, 1)`; the loop at `1` is zero and the two loops at each interior
/// vertex agree.
pub fn construct_lgamma(n: usize) -> Result<PresentedAlgebra, PathAlgError> {
    require(n >= 2, "L_Γ needs n ≥ 2")?;
    let q = chain_quiver(n)?;
    let mut rels = vec![one(q.path(&["f1", "g1"])?)];
    rels.extend(interior_relations(&q, n)?);
    PresentedAlgebra::new(q, rels)
}

/// `M_Γ`: the same quiver as [`construct_lgamma`]; the loop at `n` is zero,
/// the two loops at each interior vertex agree and every path that moves
/// twice in the same direction is zero.
pub fn construct_mgamma(n: usize) -> Result<PresentedAlgebra, PathAlgError> {
    require(n >= 2, "M_Γ needs n ≥ 2")?;
    let q = chain_quiver(n)?;
    let mut rels = vec![one(q.path(&[&format!("g{}", n - 1), &format!("f{}", n - 1)])?)];
    rels.extend(interior_relations(&q, n)?);
    for i in 1..n - 1 {
        rels.push(one(q.path(&[&format!("f{i}"), &format!("f{}", i + 1)])?));
        rels.push(one(q.path(&[&format!("g{}", i + 1), &format!("g{i}")])?));
    }
    PresentedAlgebra::new(q, rels)
}

/// `k[x]/x^m` with `x` in bidegree `(1, 1)`.
pub fn truncated_polynomial(m: usize) -> Result<PresentedAlgebra, PathAlgError> {
    require(m >= 1, "k[x]/x^m needs m ≥ 1")?;
    let q = Quiver::new(vec![1], vec![Arrow::new("x", 1, 1, Bidegree::new(1, 1))])?;
    PresentedAlgebra::new(q, vec![one(vec![0; m])])
}
