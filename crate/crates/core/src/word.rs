//! Boundary words over `{+, 0, -}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A boundary label. The derived order is `Minus < Zero < Plus`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    Minus,
    Zero,
    Plus,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::Plus => '+',
            Letter::Zero => '0',
            Letter::Minus => '-',
        }
    }

    /// Tableau row carrying this letter (0 = top).
    pub fn row(self) -> usize {
        match self {
            Letter::Plus => 0,
            Letter::Zero => 1,
            Letter::Minus => 2,
        }
    }

    pub fn from_row(row: usize) -> Self {
        match row {
            0 => Letter::Plus,
            1 => Letter::Zero,
            _ => Letter::Minus,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BoundaryWord {
    letters: Vec<Letter>,
}

impl BoundaryWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
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

    /// Whether every letter occurs equally often.
    pub fn is_balanced(&self) -> bool {
        let count = |l| self.letters.iter().filter(|&&x| x == l).count();
        count(Letter::Plus) == count(Letter::Zero) && count(Letter::Zero) == count(Letter::Minus)
    }

    /// Every prefix has `#+ >= #0 >= #-`. Balanced ballot words are exactly
    /// the words of standard tableaux of shape (n,n,n).
    pub fn is_ballot(&self) -> bool {
        let mut c = [0usize; 3];
        for l in &self.letters {
            c[l.row()] += 1;
            if c[0] < c[1] || c[1] < c[2] {
                return false;
            }
        }
        true
    }

    /// Number of pairs `i < j` with `w_i > w_j`.
    pub fn inversions(&self) -> usize {
        // counts of letters seen so far that are greater than the current one
        let mut seen = [0usize; 3];
        let mut inv = 0;
        for &l in &self.letters {
            inv += match l {
                Letter::Minus => seen[1] + seen[2],
                Letter::Zero => seen[2],
                Letter::Plus => 0,
            };
            seen[l as usize] += 1;
        }
        inv
    }

    /// `self ≺ other`: the words differ in exactly two positions `i < j`
    /// and `self` is obtained from `other` by turning `(+,0)`, `(+,-)` or
    /// `(0,-)` at `(i, j)` into the reversed pair.
    pub fn prec(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let diff: Vec<usize> = (0..self.len()).filter(|&k| self.letters[k] != other.letters[k]).collect();
        if diff.len() != 2 {
            return false;
        }
        let (i, j) = (diff[0], diff[1]);
        other.letters[i] > other.letters[j]
            && self.letters[i] == other.letters[j]
            && self.letters[j] == other.letters[i]
    }

    /// All words `w` with `w ≺ self`.
    pub fn prec_predecessors(&self) -> Vec<BoundaryWord> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.letters[i] > self.letters[j] {
                    let mut l = self.letters.clone();
                    l.swap(i, j);
                    out.push(BoundaryWord::new(l));
                }
            }
        }
        out
    }

    /// All balanced words with `n` copies of each letter.
    pub fn all_balanced(n: usize) -> Vec<BoundaryWord> {
        fn rec(rem: [usize; 3], cur: &mut Vec<Letter>, out: &mut Vec<BoundaryWord>) {
            if rem == [0, 0, 0] {
                out.push(BoundaryWord::new(cur.clone()));
                return;
            }
            for row in 0..3 {
                if rem[row] > 0 {
                    let mut r = rem;
                    r[row] -= 1;
                    cur.push(Letter::from_row(row));
                    rec(r, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec([n, n, n], &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for BoundaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Letter::Plus),
                '0' => Ok(Letter::Zero),
                '-' | '−' => Ok(Letter::Minus),
                other => Err(Error::InvalidWord(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BoundaryWord::new)
    }
}

impl Serialize for BoundaryWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BoundaryWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BoundaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn letter_order() {
        assert!(Letter::Minus < Letter::Zero && Letter::Zero < Letter::Plus);
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(w("---000+++").inversions(), 0);
        assert_eq!(w("+0-+0-").inversions(), 9);
        assert_eq!(w("++00--").inversions(), 12);
    }

    #[test]
    fn prec_examples() {
        assert!(w("+0-+0-").prec(&w("+0+-0-")));
        assert!(w("+0+-0-").prec(&w("++0-0-")));
        assert!(!w("+0-+0-").prec(&w("+0-+0-")));
        // wrong direction
        assert!(!w("+0+-0-").prec(&w("+0-+0-")));
    }

    #[test]
    fn parses_unicode_minus() {
        assert_eq!(w("+0−"), w("+0-"));
        assert!("+0x".parse::<BoundaryWord>().is_err());
    }

    #[test]
    fn ballot() {
        assert!(w("+0-+0-").is_ballot());
        assert!(!w("0+-").is_ballot());
        assert_eq!(BoundaryWord::all_balanced(2).len(), 90);
    }
}
