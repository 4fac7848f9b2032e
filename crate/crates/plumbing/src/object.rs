//! Plumbing shapes, slot objects and the gluing condition.

use monodromic::{fourier, specialize_nu0, Block, BlockKind, NormalForm};
use serde::{Deserialize, Serialize};

use crate::{EndoVariant, PlumbingError};

/// The shape of a plumbing: `n` components, all `ℙ¹` (`core`) or with the
/// last one replaced by `ℂ` (`relcore`), optionally with stops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlumbingShape {
    pub n: usize,
    pub variant: EndoVariant,
    /// Whether skyscraper blocks at the stops are permitted in slots.
    pub with_stops: bool,
}

impl PlumbingShape {
    pub fn core(n: usize) -> Self {
        PlumbingShape {
            n,
            variant: EndoVariant::Core,
            with_stops: false,
        }
    }

    pub fn relcore(n: usize) -> Self {
        PlumbingShape {
            n,
            variant: EndoVariant::Relcore,
            with_stops: false,
        }
    }
}

/// One side of a slot: a direct sum of shifted, twisted blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlotObject {
    pub terms: Vec<Block>,
}

impl SlotObject {
    pub fn new(terms: Vec<Block>) -> Self {
        SlotObject { terms }
    }

    /// Specialization `ν₀` of every term, as a normal form.
    pub fn specialize(&self) -> Result<NormalForm, PlumbingError> {
        Ok(self.terms.iter().map(specialize_nu0).collect::<Result<NormalForm, _>>()?)
    }
}

/// The pair `(F^l, G^l)` of slot `l`; `right` is absent only for the final
/// slot of a relcore shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub left: SlotObject,
    pub right: Option<SlotObject>,
}

/// An object of the plumbing: one slot per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ObjectRepr", into = "ObjectRepr")]
pub struct PlumbingObject {
    shape: PlumbingShape,
    slots: Vec<Slot>,
}

#[derive(Serialize, Deserialize)]
struct ObjectRepr {
    shape: PlumbingShape,
    slots: Vec<Slot>,
}

impl TryFrom<ObjectRepr> for PlumbingObject {
    type Error = PlumbingError;
    fn try_from(r: ObjectRepr) -> Result<Self, Self::Error> {
        PlumbingObject::new(r.shape, r.slots)
    }
}

impl From<PlumbingObject> for ObjectRepr {
    fn from(o: PlumbingObject) -> Self {
        ObjectRepr {
            shape: o.shape,
            slots: o.slots,
        }
    }
}

impl PlumbingObject {
    /// Validates the slot count, the sidedness of the final slot and the
    /// absence of skyscrapers when there are no stops. Gluing compatibility is
    /// checked separately by [`check_compat`].
    pub fn new(shape: PlumbingShape, slots: Vec<Slot>) -> Result<Self, PlumbingError> {
        if shape.n == 0 {
            return Err(PlumbingError::EmptyPlumbing);
        }
        if slots.len() != shape.n {
            return Err(PlumbingError::InvalidSlots(format!(
                "{} slots for n = {}",
                slots.len(),
                shape.n
            )));
        }
        for (l, slot) in slots.iter().enumerate() {
            let last = l + 1 == shape.n;
            let single_ok = last && shape.variant == EndoVariant::Relcore;
            if slot.right.is_none() != single_ok {
                return Err(PlumbingError::InvalidSlots(format!(
                    "slot {} must be {}",
                    l + 1,
                    if single_ok { "single-sided" } else { "two-sided" }
                )));
            }
            if !shape.with_stops {
                let sides = std::iter::once(&slot.left).chain(slot.right.as_ref());
                if sides.flat_map(|s| &s.terms).any(|b| b.kind() == BlockKind::Sky) {
                    return Err(PlumbingError::SkyWithoutStops(l + 1));
                }
            }
        }
        Ok(PlumbingObject { shape, slots })
    }

    /// A core-shaped object from two-sided slots.
    pub fn from_pairs(n: usize, pairs: Vec<(Vec<Block>, Vec<Block>)>) -> Result<Self, PlumbingError> {
        let slots = pairs
            .into_iter()
            .map(|(l, r)| Slot {
                left: SlotObject::new(l),
                right: Some(SlotObject::new(r)),
            })
            .collect();
        PlumbingObject::new(PlumbingShape::core(n), slots)
    }

    pub fn shape(&self) -> PlumbingShape {
        self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Slot `l` (1-based).
    pub fn slot(&self, l: usize) -> Option<&Slot> {
        l.checked_sub(1).and_then(|i| self.slots.get(i))
    }
}

/// The gluing condition at every junction `l → l + 1`: the Fourier transform
/// of `ν₀(G^l)` equals `ν₀(F^{l+1})` as normal forms, twists included.
pub fn check_compat(obj: &PlumbingObject) -> Result<bool, PlumbingError> {
    for pair in obj.slots.windows(2) {
        let right = pair[0]
            .right
            .as_ref()
            .ok_or_else(|| PlumbingError::InvalidSlots("single-sided interior slot".into()))?;
        let lhs = fourier(&right.specialize()?)?;
        let rhs = pair[1].left.specialize()?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
