use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A sign `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[derive(Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn from_parity(k: u64) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}


impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.value() as i8)
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match i8::deserialize(d)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(serde::de::Error::custom(format!("sign must be 1 or -1, got {other}"))),
        }
    }
}

/// Parity of inversions of a sequence of distinct comparable items.
pub fn inversion_count<T: Ord>(w: &[T]) -> u64 {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Sign of a word: `(-1)^{#inversions}`.
pub fn word_sign<T: Ord>(w: &[T]) -> Sign {
    Sign::from_parity(inversion_count(w))
}

/// Inverse sign of a word: `(-1)^{#non-inversions}`.
///
/// Entries are assumed distinct, so every pair is either an inversion or a
/// non-inversion.
pub fn word_invsign<T: Ord>(w: &[T]) -> Sign {
    let n = w.len() as u64;
    let pairs = n * n.saturating_sub(1) / 2;
    Sign::from_parity(pairs - inversion_count(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_reading_word() {
        let w = [1, 4, 3, 2, 6, 5];
        assert_eq!(inversion_count(&w), 4);
        assert_eq!(word_sign(&w), Sign::Plus);
        assert_eq!(word_invsign(&w), Sign::Minus);
    }

    #[test]
    fn empty_and_short_words() {
        let empty: [u32; 0] = [];
        assert_eq!(word_sign(&empty), Sign::Plus);
        assert_eq!(word_invsign(&empty), Sign::Plus);
        assert_eq!(word_sign(&[1, 3, 2]), Sign::Minus);
        assert_eq!(word_invsign(&[1, 3, 2]), Sign::Plus);
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!([Sign::Minus; 3].into_iter().product::<Sign>(), Sign::Minus);
        assert_eq!(Sign::from_parity(7).value(), -1);
    }
}
