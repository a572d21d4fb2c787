//! Words over `{0, 1, *}`.
//!
//! A word of length `n` with `m` stars names a morphism `[m] → [n]` of the
//! cube category `□`: the stars are the free coordinates and the fixed
//! letters are the inserted constants. The same words name the cells of the
//! representable cube `□[n]` and the morphisms of the flow `{0 < 1}ⁿ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The sign `α` of a face map `∂ᵢᵅ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Zero,
    One,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Zero, Sign::One];

    pub fn bit(self) -> usize {
        match self {
            Sign::Zero => 0,
            Sign::One => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Option<Sign> {
        match bit {
            0 => Some(Sign::Zero),
            1 => Some(Sign::One),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.bit() as u8)
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let bit = u8::deserialize(deserializer)?;
        Sign::from_bit(bit).ok_or_else(|| serde::de::Error::custom(format!("sign must be 0 or 1, got {bit}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Zero,
    One,
    Star,
}

impl Letter {
    pub fn char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
            Letter::Star => '*',
        }
    }
}

impl From<Sign> for Letter {
    fn from(sign: Sign) -> Self {
        match sign {
            Sign::Zero => Letter::Zero,
            Sign::One => Letter::One,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CubeWord {
    letters: Vec<Letter>,
}

impl CubeWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        CubeWord { letters }
    }

    /// The all-stars word of length `n`, i.e. the identity of `[n]`.
    pub fn identity(n: usize) -> Self {
        CubeWord { letters: vec![Letter::Star; n] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn star_count(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::Star).count()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&l| l == Letter::Star)
    }

    /// Replaces the `index`-th star (1-based, left to right) by `sign`.
    ///
    /// On the cells of `□[n]` this is exactly the face map `∂ᵢᵅ`.
    pub fn face(&self, index: usize, sign: Sign) -> Result<CubeWord> {
        let stars = self.star_count();
        if index == 0 || index > stars {
            return Err(Error::FaceIndex { dim: stars, index });
        }
        let mut letters = self.letters.clone();
        let pos = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == Letter::Star)
            .nth(index - 1)
            .map(|(p, _)| p)
            .expect("star count checked");
        letters[pos] = sign.into();
        Ok(CubeWord { letters })
    }

    /// Composite `self ∘ inner`: substitutes the letters of `inner` into the
    /// stars of `self`, in order.
    pub fn compose(&self, inner: &CubeWord) -> Result<CubeWord> {
        let stars = self.star_count();
        if stars != inner.len() {
            return Err(Error::NotComposable { stars, inner_len: inner.len() });
        }
        let mut fill = inner.letters.iter();
        let letters = self
            .letters
            .iter()
            .map(|&l| match l {
                Letter::Star => *fill.next().expect("lengths checked"),
                fixed => fixed,
            })
            .collect();
        Ok(CubeWord { letters })
    }

    /// Every word of length `n`, in lexicographic order of their string form.
    pub fn all(n: usize) -> Vec<CubeWord> {
        let mut words = vec![CubeWord::default()];
        for _ in 0..n {
            words = words
                .into_iter()
                .flat_map(|w| {
                    [Letter::Star, Letter::Zero, Letter::One].into_iter().map(move |l| {
                        let mut letters = w.letters.clone();
                        letters.push(l);
                        CubeWord { letters }
                    })
                })
                .collect();
        }
        words.sort_by_key(|w| w.to_string());
        words
    }

    /// Words of length `n` with exactly `stars` stars.
    pub fn with_stars(n: usize, stars: usize) -> Vec<CubeWord> {
        CubeWord::all(n).into_iter().filter(|w| w.star_count() == stars).collect()
    }
}

impl fmt::Display for CubeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|l| write!(f, "{}", l.char()))
    }
}

impl FromStr for CubeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(Letter::Zero),
                '1' => Ok(Letter::One),
                '*' => Ok(Letter::Star),
                _ => Err(Error::BadWord(s.to_owned())),
            })
            .collect::<Result<Vec<_>>>()
            .map(CubeWord::new)
    }
}
