//! Permutations of `{1..n}` in one-line notation.
//!
//! Composition is left to right: `p.then(&q)` applies `p` first and `q`
//! second, so `(p.then(&q)).apply(x) == q.apply(p.apply(x))`. This is the
//! convention under which the action on tableaux is a right action.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n_points: usize) -> Self {
        Self { images: (1..=n_points).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!("image {x} outside 1..={n}")));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// The transposition exchanging `i` and `j`.
    pub fn transposition(n_points: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n_points || j > n_points || i == j {
            return Err(Error::InvalidPermutation(format!("({i} {j}) on {n_points} points")));
        }
        let mut p = Self::identity(n_points);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The simple transposition `s_i = (i i+1)`.
    pub fn simple(n_points: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n_points {
            return Err(Error::GeneratorOutOfRange { index: i, points: n_points });
        }
        Self::transposition(n_points, i, i + 1)
    }

    /// Product of simple transpositions, first letter applied first.
    pub fn from_word(n_points: usize, word: &[usize]) -> Result<Self> {
        word.iter().try_fold(Self::identity(n_points), |acc, &i| Ok(acc.then(&Self::simple(n_points, i)?)))
    }

    pub fn n_points(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.n_points(), other.n_points());
        Self { images: self.images.iter().map(|&x| other.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether `self.then(s_i)` is shorter than `self`. With left-to-right
    /// composition `s_i` swaps the values `i` and `i+1` in the image list.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.images.iter().position(|&x| x == v).unwrap();
        pos(i) > pos(i + 1)
    }

    /// A reduced word (letters applied left to right).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut p = self.clone();
        while let Some(i) = (1..p.n_points()).find(|&i| p.has_right_descent(i)) {
            word.push(i);
            p = p.then(&Self::simple(p.n_points(), i).unwrap());
        }
        word.reverse();
        word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let s1 = Permutation::simple(3, 1).unwrap();
        let s2 = Permutation::simple(3, 2).unwrap();
        let p = s1.then(&s2);
        // 1 -> 2 -> 3
        assert_eq!(p.apply(1), 3);
        assert_eq!(p.apply(3), 2);
    }

    #[test]
    fn reduced_word_round_trip() {
        let p = Permutation::from_images(vec![3, 1, 4, 2]).unwrap();
        let w = p.reduced_word();
        assert_eq!(w.len(), p.length());
        assert_eq!(Permutation::from_word(4, &w).unwrap(), p);
    }

    #[test]
    fn rejects_bad_images() {
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::simple(3, 3).is_err());
    }

    #[test]
    fn inverse_cancels() {
        let p = Permutation::from_images(vec![2, 5, 1, 4, 3]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.inverse().then(&p).is_identity());
    }
}
