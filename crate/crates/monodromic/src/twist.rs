//! Half-Tate twists.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::{Deserialize, Serialize};

/// The twist `(s/2)`, stored as the integer `s` (a count of half twists).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfTwist {
    pub halves: i64,
}

impl HalfTwist {
    /// No twist.
    pub const ZERO: HalfTwist = HalfTwist { halves: 0 };
    /// The half twist `(1/2)`.
    pub const HALF: HalfTwist = HalfTwist { halves: 1 };

    /// The twist `(s/2)`.
    pub const fn halves(s: i64) -> Self {
        HalfTwist { halves: s }
    }

    /// The full Tate twist `(t)`.
    pub const fn whole(t: i64) -> Self {
        HalfTwist { halves: 2 * t }
    }
}

impl Add for HalfTwist {
    type Output = HalfTwist;
    fn add(self, rhs: HalfTwist) -> HalfTwist {
        HalfTwist::halves(self.halves + rhs.halves)
    }
}

impl AddAssign for HalfTwist {
    fn add_assign(&mut self, rhs: HalfTwist) {
        self.halves += rhs.halves;
    }
}

impl Sub for HalfTwist {
    type Output = HalfTwist;
    fn sub(self, rhs: HalfTwist) -> HalfTwist {
        HalfTwist::halves(self.halves - rhs.halves)
    }
}

impl Neg for HalfTwist {
    type Output = HalfTwist;
    fn neg(self) -> HalfTwist {
        HalfTwist::halves(-self.halves)
    }
}

impl fmt::Display for HalfTwist {
    /// Formats as `(t)` for whole twists and `(s/2)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.halves % 2 == 0 {
            write!(f, "({})", self.halves / 2)
        } else {
            write!(f, "({}/2)", self.halves)
        }
    }
}
