//! Braid words over the two generators, with verbose (`s1 S2 s1^-1`) and
//! compact (`121'`) text forms.

use crate::Error;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// One letter: a generator index (1 or 2) and whether it is inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidLetter {
    pub gen: u8,
    pub inverse: bool,
}

/// A free word in the braid generators; no normalization is imposed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(letters: Vec<BraidLetter>) -> Self {
        assert!(letters.iter().all(|l| l.gen == 1 || l.gen == 2));
        BraidWord { letters }
    }

    pub fn empty() -> Self {
        BraidWord::default()
    }

    pub fn single(gen: u8, inverse: bool) -> Self {
        BraidWord::new(vec![BraidLetter { gen, inverse }])
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation: `self` then `other` as group elements, i.e. `other`
    /// acts first.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BraidLetter {
                    gen: l.gen,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }
}

fn parse_gen(c: char) -> Result<u8, Error> {
    match c {
        '1' => Ok(1),
        '2' => Ok(2),
        _ => Err(Error::InvalidParameter(format!(
            "braid generator must be 1 or 2, got '{c}'"
        ))),
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(BraidWord::empty());
        }
        let mut letters = Vec::new();
        if s.contains(['s', 'S']) {
            for token in s.split_whitespace() {
                let rest = token
                    .strip_prefix(['s', 'S'])
                    .ok_or_else(|| {
                        Error::InvalidParameter(format!("expected a token like s1, got '{token}'"))
                    })?;
                let mut chars = rest.chars();
                let gen = parse_gen(chars.next().ok_or_else(|| {
                    Error::InvalidParameter(format!("missing generator index in '{token}'"))
                })?)?;
                let tail: String = chars.collect();
                let inverse = match tail.as_str() {
                    "" => false,
                    "^-1" | "'" => true,
                    _ => {
                        return Err(Error::InvalidParameter(format!(
                            "unrecognized braid token '{token}'"
                        )))
                    }
                };
                letters.push(BraidLetter { gen, inverse });
            }
        } else {
            let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
            while let Some(c) = chars.next() {
                let gen = parse_gen(c)?;
                let inverse = chars.peek() == Some(&'\'');
                if inverse {
                    chars.next();
                }
                letters.push(BraidLetter { gen, inverse });
            }
        }
        Ok(BraidWord { letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.gen)?;
            if l.inverse {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
