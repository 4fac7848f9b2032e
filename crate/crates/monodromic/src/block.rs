//! The block catalog: indecomposable kinds, shifted/twisted blocks, normal
//! forms, and the restriction and specialization lookups.
//!
//! Shift convention: `Block::shift == 0` is the perverse object of each kind.
//! For the line-supported kinds A, B, P, Q (and their decorations) that is the
//! sheaf shifted by one, `A_s[1]`; so the unshifted sheaf `A_s` has shift −1.
//! The skyscraper `ℂ₀` is already perverse and has shift 0.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{HalfTwist, MonodromicError};

/// The kinds of indecomposable blocks.
///
/// The first five are the plain unipotent indecomposables, which have can/var
/// presentations. The remaining ones are decorated variants used only as
/// symbols (they support restriction and specialization, nothing else).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    A,
    B,
    P,
    Q,
    Sky,
    OveA,
    UndA,
    OveUndA,
    OveB,
    OveP,
    UndP,
    OveUndP,
    TildeUndP,
}

impl BlockKind {
    /// All kinds, plain first.
    pub const ALL: [BlockKind; 13] = [
        BlockKind::A,
        BlockKind::B,
        BlockKind::P,
        BlockKind::Q,
        BlockKind::Sky,
        BlockKind::OveA,
        BlockKind::UndA,
        BlockKind::OveUndA,
        BlockKind::OveB,
        BlockKind::OveP,
        BlockKind::UndP,
        BlockKind::OveUndP,
        BlockKind::TildeUndP,
    ];

    /// The plain kinds.
    pub const PLAIN: [BlockKind; 5] = [
        BlockKind::A,
        BlockKind::B,
        BlockKind::P,
        BlockKind::Q,
        BlockKind::Sky,
    ];

    /// True for A, B, P, Q and Sky.
    pub fn is_plain(self) -> bool {
        matches!(
            self,
            BlockKind::A | BlockKind::B | BlockKind::P | BlockKind::Q | BlockKind::Sky
        )
    }

    /// Smallest admissible size.
    pub fn min_size(self) -> usize {
        match self {
            BlockKind::Q | BlockKind::OveUndP => 2,
            _ => 1,
        }
    }

    /// The only admissible size, for kinds without a size parameter.
    pub fn fixed_size(self) -> Option<usize> {
        match self {
            BlockKind::Sky | BlockKind::TildeUndP => Some(1),
            _ => None,
        }
    }

    /// Checks the size constraint of this kind.
    pub fn check_size(self, size: usize) -> Result<(), MonodromicError> {
        let ok = match self.fixed_size() {
            Some(f) => size == f,
            None => size >= self.min_size(),
        };
        if ok {
            Ok(())
        } else {
            Err(MonodromicError::InvalidSize { kind: self, size })
        }
    }

    /// The decoration this kind carries on restriction to the punctured line.
    pub fn decoration(self) -> Decoration {
        match self {
            BlockKind::A | BlockKind::B | BlockKind::P | BlockKind::Q | BlockKind::Sky => {
                Decoration::Plain
            }
            BlockKind::OveA | BlockKind::OveB | BlockKind::OveP => Decoration::Ove,
            BlockKind::UndA | BlockKind::UndP => Decoration::Und,
            BlockKind::OveUndA | BlockKind::OveUndP | BlockKind::TildeUndP => Decoration::OveUnd,
        }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A block: an indecomposable of a given kind and size, shifted and twisted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "BlockRepr", into = "BlockRepr")]
pub struct Block {
    kind: BlockKind,
    size: usize,
    shift: i64,
    twist: HalfTwist,
}

#[derive(Serialize, Deserialize)]
struct BlockRepr {
    kind: BlockKind,
    size: usize,
    shift: i64,
    twist_halves: i64,
}

impl TryFrom<BlockRepr> for Block {
    type Error = MonodromicError;
    fn try_from(r: BlockRepr) -> Result<Self, Self::Error> {
        Block::new(r.kind, r.size, r.shift, HalfTwist::halves(r.twist_halves))
    }
}

impl From<Block> for BlockRepr {
    fn from(b: Block) -> Self {
        BlockRepr {
            kind: b.kind,
            size: b.size,
            shift: b.shift,
            twist_halves: b.twist.halves,
        }
    }
}

impl Block {
    /// A block, validating the size constraint of its kind.
    pub fn new(kind: BlockKind, size: usize, shift: i64, twist: HalfTwist) -> Result<Self, MonodromicError> {
        kind.check_size(size)?;
        Ok(Block {
            kind,
            size,
            shift,
            twist,
        })
    }

    /// The perverse, untwisted block of the given kind and size.
    pub fn perverse(kind: BlockKind, size: usize) -> Result<Self, MonodromicError> {
        Block::new(kind, size, 0, HalfTwist::ZERO)
    }

    /// The perverse skyscraper `ℂ₀`.
    pub fn sky() -> Self {
        Block {
            kind: BlockKind::Sky,
            size: 1,
            shift: 0,
            twist: HalfTwist::ZERO,
        }
    }

    pub fn kind(&self) -> BlockKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn twist(&self) -> HalfTwist {
        self.twist
    }

    /// The same block shifted by `[k]`.
    pub fn shifted(self, k: i64) -> Self {
        Block {
            shift: self.shift + k,
            ..self
        }
    }

    /// The same block with twist `(s/2)` added.
    pub fn twisted(self, t: HalfTwist) -> Self {
        Block {
            twist: self.twist + t,
            ..self
        }
    }

    /// The same block with the given kind (size constraints re-checked).
    pub fn with_kind(self, kind: BlockKind) -> Result<Self, MonodromicError> {
        Block::new(kind, self.size, self.shift, self.twist)
    }
}

impl fmt::Display for Block {
    /// Formats as e.g. `A_2[1](1/2)` for the perverse block.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Sheaf-level shift: line-supported kinds are perverse after [1].
        let sheaf_shift = match self.kind {
            BlockKind::Sky => self.shift,
            _ => self.shift + 1,
        };
        match self.kind {
            BlockKind::Sky => write!(f, "C_0")?,
            k => write!(f, "{}_{}", k, self.size)?,
        }
        if sheaf_shift != 0 {
            write!(f, "[{sheaf_shift}]")?;
        }
        if self.twist != HalfTwist::ZERO {
            write!(f, "{}", self.twist)?;
        }
        Ok(())
    }
}

/// A finite multiset of blocks in canonical (sorted) order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "NormalFormRepr")]
pub struct NormalForm {
    blocks: Vec<Block>,
}

#[derive(Deserialize)]
struct NormalFormRepr {
    blocks: Vec<Block>,
}

impl From<NormalFormRepr> for NormalForm {
    fn from(r: NormalFormRepr) -> Self {
        NormalForm::new(r.blocks)
    }
}

impl NormalForm {
    /// The canonical form of a list of blocks (sorted; repetition allowed).
    pub fn new(mut blocks: Vec<Block>) -> Self {
        blocks.sort();
        NormalForm { blocks }
    }

    /// The zero object.
    pub fn empty() -> Self {
        NormalForm::default()
    }

    /// The blocks in canonical order, repeated according to multiplicity.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// True iff there are no blocks.
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of blocks, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// Distinct blocks with their multiplicities.
    pub fn multiplicities(&self) -> BTreeMap<Block, usize> {
        let mut m = BTreeMap::new();
        for b in &self.blocks {
            *m.entry(*b).or_insert(0) += 1;
        }
        m
    }

    /// Direct sum.
    pub fn sum(&self, other: &NormalForm) -> NormalForm {
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        NormalForm::new(blocks)
    }

    /// Applies a map to every block and re-canonicalises.
    pub fn map(&self, f: impl FnMut(&Block) -> Block) -> NormalForm {
        NormalForm::new(self.blocks.iter().map(f).collect())
    }

    /// Applies a fallible map to every block and re-canonicalises.
    pub fn try_map<E>(&self, f: impl FnMut(&Block) -> Result<Block, E>) -> Result<NormalForm, E> {
        Ok(NormalForm::new(self.blocks.iter().map(f).collect::<Result<_, _>>()?))
    }

    /// The same multiset with all twists reset to zero.
    pub fn forget_twists(&self) -> NormalForm {
        self.map(|b| Block {
            twist: HalfTwist::ZERO,
            ..*b
        })
    }

    /// True iff every block is plain.
    pub fn is_plain(&self) -> bool {
        self.blocks.iter().all(|b| b.kind.is_plain())
    }
}

impl FromIterator<Block> for NormalForm {
    fn from_iter<I: IntoIterator<Item = Block>>(iter: I) -> Self {
        NormalForm::new(iter.into_iter().collect())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Decoration of a local system on the punctured line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decoration {
    Plain,
    Ove,
    Und,
    OveUnd,
}

/// A shifted, twisted unipotent local system `L_s` on the punctured line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LocalSystemTerm {
    /// Size of the unipotent Jordan block of the monodromy.
    pub size: usize,
    pub decorated: Decoration,
    pub shift: i64,
    pub twist: HalfTwist,
}

impl fmt::Display for LocalSystemTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.decorated {
            Decoration::Plain => "",
            Decoration::Ove => "ove-",
            Decoration::Und => "und-",
            Decoration::OveUnd => "oveund-",
        };
        write!(f, "{prefix}L_{}", self.size)?;
        if self.shift != 0 {
            write!(f, "[{}]", self.shift)?;
        }
        if self.twist != HalfTwist::ZERO {
            write!(f, "{}", self.twist)?;
        }
        Ok(())
    }
}

/// Restriction of a block to the punctured line `W = ℂ \ {0}`.
///
/// `A_s`, `B_s`, `P_s` restrict to `L_s` and `Q_s` to `L_{s−1}`; the skyscraper
/// restricts to zero (`None`). Decorated kinds keep their decoration. The
/// sheaf-level shift is carried through, so the perverse `A_s[1]` (block shift
/// 0) restricts to `L_s[1]` (term shift 1). Twists are unchanged.
pub fn restrict_w(b: &Block) -> Option<LocalSystemTerm> {
    let size = match b.kind {
        BlockKind::Sky => return None,
        BlockKind::Q => b.size - 1,
        _ => b.size,
    };
    Some(LocalSystemTerm {
        size,
        decorated: b.kind.decoration(),
        shift: b.shift + 1,
        twist: b.twist,
    })
}

/// Specialization `ν₀` on blocks: decorated kinds become their plain versions,
/// plain blocks are fixed, shift and twist are preserved. The tilde block has
/// no tabulated specialization and is rejected.
pub fn specialize_nu0(b: &Block) -> Result<Block, MonodromicError> {
    let kind = match b.kind {
        BlockKind::OveA | BlockKind::UndA | BlockKind::OveUndA => BlockKind::A,
        BlockKind::OveB => BlockKind::B,
        BlockKind::OveP | BlockKind::UndP | BlockKind::OveUndP => BlockKind::P,
        BlockKind::TildeUndP => return Err(MonodromicError::UnsupportedSpecialization(b.kind)),
        plain => plain,
    };
    b.with_kind(kind)
}

/// Stalk cohomology dimensions at the origin, as `degree → dim`.
///
/// The unshifted sheaves have `(A_s)_0 = 0`, `(B_s)_0` one-dimensional in
/// degrees 0 and 1, `(P_s)_0` in degree 0, `(Q_s)_0` in degree 1, and `ℂ₀` in
/// degree 0; a sheaf shift `[m]` moves degree `d` to `d − m`.
pub fn stalk0_dims(b: &Block) -> Result<BTreeMap<i64, usize>, MonodromicError> {
    let base: &[i64] = match b.kind {
        BlockKind::A => &[],
        BlockKind::B => &[0, 1],
        BlockKind::P => &[0],
        BlockKind::Q => &[1],
        BlockKind::Sky => &[0],
        k => return Err(MonodromicError::DecoratedBlock(k)),
    };
    let sheaf_shift = match b.kind {
        BlockKind::Sky => b.shift,
        _ => b.shift + 1,
    };
    Ok(base.iter().map(|&d| (d - sheaf_shift, 1)).collect())
}
