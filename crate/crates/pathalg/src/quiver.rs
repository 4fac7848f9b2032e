//! Quivers with bigraded arrows, paths and linear combinations of paths.
//!
//! Paths are stored in *traversal order*: the first arrow of the vector is
//! traversed first. A product written right-to-left as `g f` (first `f`, then
//! `g`) is therefore the path `[f, g]`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use corelin::Rational;
use serde::{Deserialize, Serialize};

use crate::PathAlgError;

/// A bidegree `(cohomological degree, Adams degree)`, serialized as `[c, a]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Bidegree {
    pub coh: i64,
    pub adams: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { coh: 0, adams: 0 };

    pub const fn new(coh: i64, adams: i64) -> Self {
        Bidegree { coh, adams }
    }

    /// The grading used to drive degree-by-degree computations: `|adams|`.
    /// Every arrow of an admissible quiver has positive weight, so each weight
    /// admits only finitely many paths.
    pub fn weight(self) -> u32 {
        self.adams.unsigned_abs() as u32
    }
}

impl From<[i64; 2]> for Bidegree {
    fn from([coh, adams]: [i64; 2]) -> Self {
        Bidegree { coh, adams }
    }
}

impl From<Bidegree> for [i64; 2] {
    fn from(d: Bidegree) -> Self {
        [d.coh, d.adams]
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.coh + o.coh, self.adams + o.adams)
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.coh - o.coh, self.adams - o.adams)
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;
    fn neg(self) -> Bidegree {
        Bidegree::new(-self.coh, -self.adams)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.coh, self.adams)
    }
}

/// An arrow between vertex *labels*.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
    pub deg: Bidegree,
}

impl Arrow {
    pub fn new(id: impl Into<String>, src: usize, tgt: usize, deg: Bidegree) -> Self {
        Arrow {
            id: id.into(),
            src,
            tgt,
            deg,
        }
    }
}

/// A path: arrow indices in traversal order.
pub type Path = Vec<usize>;

/// A rational linear combination of paths.
pub type LinComb = Vec<(Path, Rational)>;

/// A finite quiver with bigraded arrows.
///
/// Vertices carry arbitrary distinct labels; internally they are addressed by
/// their position in [`Quiver::vertices`]. All arrows must have nonzero Adams
/// degree of a common sign, which makes `|adams|` a positive grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuiverRepr", into = "QuiverRepr")]
pub struct Quiver {
    vertices: Vec<usize>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<usize, usize>,
    arrow_index: HashMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct QuiverRepr {
    vertices: Vec<usize>,
    arrows: Vec<Arrow>,
}

impl TryFrom<QuiverRepr> for Quiver {
    type Error = PathAlgError;
    fn try_from(r: QuiverRepr) -> Result<Self, Self::Error> {
        Quiver::new(r.vertices, r.arrows)
    }
}

impl From<Quiver> for QuiverRepr {
    fn from(q: Quiver) -> Self {
        QuiverRepr {
            vertices: q.vertices,
            arrows: q.arrows,
        }
    }
}

impl Quiver {
    /// Validates labels, endpoints and arrow degrees.
    pub fn new(vertices: Vec<usize>, arrows: Vec<Arrow>) -> Result<Self, PathAlgError> {
        let mut vertex_index = HashMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            if vertex_index.insert(v, i).is_some() {
                return Err(PathAlgError::DuplicateVertex(v));
            }
        }
        let mut arrow_index = HashMap::new();
        let mut sign = 0;
        for (i, a) in arrows.iter().enumerate() {
            if arrow_index.insert(a.id.clone(), i).is_some() {
                return Err(PathAlgError::DuplicateArrow(a.id.clone()));
            }
            for v in [a.src, a.tgt] {
                if !vertex_index.contains_key(&v) {
                    return Err(PathAlgError::UnknownVertex(v));
                }
            }
            if a.deg.adams == 0 {
                return Err(PathAlgError::ZeroWeightArrow(a.id.clone()));
            }
            let s = a.deg.adams.signum();
            if sign != 0 && s != sign {
                return Err(PathAlgError::MixedAdamsSign);
            }
            sign = s;
        }
        Ok(Quiver {
            vertices,
            arrows,
            vertex_index,
            arrow_index,
        })
    }

    /// Vertex labels.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Internal index of a vertex label.
    pub fn vertex(&self, label: usize) -> Result<usize, PathAlgError> {
        self.vertex_index
            .get(&label)
            .copied()
            .ok_or(PathAlgError::UnknownVertex(label))
    }

    /// Internal index of an arrow id.
    pub fn arrow(&self, id: &str) -> Result<usize, PathAlgError> {
        self.arrow_index
            .get(id)
            .copied()
            .ok_or_else(|| PathAlgError::UnknownArrow(id.to_string()))
    }

    /// Source vertex index of arrow `a`.
    pub fn src(&self, a: usize) -> usize {
        self.vertex_index[&self.arrows[a].src]
    }

    /// Target vertex index of arrow `a`.
    pub fn tgt(&self, a: usize) -> usize {
        self.vertex_index[&self.arrows[a].tgt]
    }

    pub fn deg(&self, a: usize) -> Bidegree {
        self.arrows[a].deg
    }

    /// Arrow indices from a list of ids.
    pub fn path(&self, ids: &[&str]) -> Result<Path, PathAlgError> {
        ids.iter().map(|id| self.arrow(id)).collect()
    }

    /// Endpoints `(src, tgt)` and bidegree of a nonempty composable path.
    pub fn path_shape(&self, path: &[usize]) -> Result<(usize, usize, Bidegree), PathAlgError> {
        let (&first, rest) = path.split_first().ok_or(PathAlgError::EmptyPath)?;
        if first >= self.arrows.len() {
            return Err(PathAlgError::UnknownArrow(format!("#{first}")));
        }
        let mut at = self.tgt(first);
        let mut deg = self.deg(first);
        for &a in rest {
            if a >= self.arrows.len() {
                return Err(PathAlgError::UnknownArrow(format!("#{a}")));
            }
            if self.src(a) != at {
                return Err(PathAlgError::NotComposable(self.ids(path)));
            }
            at = self.tgt(a);
            deg = deg + self.deg(a);
        }
        Ok((self.src(first), at, deg))
    }

    /// Checks that a combination is nonempty, composable, parallel and
    /// homogeneous, returning its common shape.
    pub fn comb_shape(&self, comb: &[(Path, Rational)]) -> Result<(usize, usize, Bidegree), PathAlgError> {
        let mut shape = None;
        for (p, _) in comb {
            let sh = self.path_shape(p)?;
            match shape {
                None => shape = Some(sh),
                Some(s) if s == sh => {}
                Some(_) => return Err(PathAlgError::Inhomogeneous(self.ids(p))),
            }
        }
        shape.ok_or(PathAlgError::EmptyRelation)
    }

    /// Arrow ids of a path, for messages and serialization.
    pub fn ids(&self, path: &[usize]) -> Vec<String> {
        path.iter()
            .map(|&a| self.arrows.get(a).map_or_else(|| format!("#{a}"), |x| x.id.clone()))
            .collect()
    }
}

/// One term of a serialized relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct TermRepr {
    pub path: Vec<String>,
    pub coef: Rational,
}

pub(crate) fn comb_to_repr(q: &Quiver, comb: &[(Path, Rational)]) -> Vec<TermRepr> {
    comb.iter()
        .map(|(p, c)| TermRepr {
            path: q.ids(p),
            coef: c.clone(),
        })
        .collect()
}

pub(crate) fn comb_from_repr(q: &Quiver, terms: &[TermRepr]) -> Result<LinComb, PathAlgError> {
    terms
        .iter()
        .map(|t| {
            let ids: Vec<&str> = t.path.iter().map(String::as_str).collect();
            Ok((q.path(&ids)?, t.coef.clone()))
        })
        .collect()
}
