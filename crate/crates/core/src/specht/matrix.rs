//! Exact integer base-change matrices between bases indexed by tableaux.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;
use crate::order::Poset;
use crate::tableau::Tableau;

/// The three bases: polytabloid diagrams `P`, M-diagrams `M`, non-elliptic
/// webs `W`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum BasisTag {
    P,
    M,
    W,
}

impl BasisTag {
    pub const ALL: [BasisTag; 3] = [BasisTag::P, BasisTag::M, BasisTag::W];
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for BasisTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "P" => Ok(BasisTag::P),
            "M" => Ok(BasisTag::M),
            "W" => Ok(BasisTag::W),
            _ => Err(Error::UnknownBasis(s.to_string())),
        }
    }
}

/// Column `c` holds the coordinates of source basis element `order[c]` in
/// the target basis; rows are indexed by the same `order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitionMatrix {
    pub from: BasisTag,
    pub to: BasisTag,
    pub order: Vec<Tableau>,
    pub entries: Vec<Vec<BigInt>>,
}

impl TransitionMatrix {
    pub fn identity(tag: BasisTag, order: Vec<Tableau>) -> Self {
        let m = order.len();
        let entries = (0..m).map(|r| (0..m).map(|c| BigInt::from((r == c) as i64)).collect()).collect();
        Self { from: tag, to: tag, order, entries }
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r][c]
    }

    /// Unit diagonal, and every nonzero off-diagonal entry `(r, c)` has
    /// `order[r] < order[c]` in `poset`.
    pub fn is_unitriangular(&self, poset: &Poset) -> bool {
        self.diagonal_is_one() && self.violations(poset).is_empty()
    }

    pub fn diagonal_is_one(&self) -> bool {
        (0..self.dim()).all(|i| self.entries[i][i].is_one())
    }

    /// Nonzero off-diagonal positions `(r, c)` not below in `poset`.
    pub fn violations(&self, poset: &Poset) -> Vec<(usize, usize)> {
        let idx: Vec<usize> = self.order.iter().map(|t| poset.index_of(t).expect("same tableaux")).collect();
        let mut out = Vec::new();
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                if r != c && !self.entries[r][c].is_zero() && !poset.lt(idx[r], idx[c]) {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// The order generated by the off-diagonal support (`r < c` when entry
    /// `(r, c)` is nonzero): the finest order the matrix is triangular for.
    /// `None` when the support has a cycle.
    pub fn support_order(&self) -> Option<Poset> {
        let p = Poset::generated_by(self.order.clone(), |r, c| !self.entries[r][c].is_zero());
        p.is_partial_order().then_some(p)
    }

    pub fn off_diagonal_count(&self) -> usize {
        (0..self.dim())
            .flat_map(|r| (0..self.dim()).map(move |c| (r, c)))
            .filter(|&(r, c)| r != c && !self.entries[r][c].is_zero())
            .count()
    }

    pub fn negative_entries(&self) -> usize {
        self.entries.iter().flatten().filter(|x| x.is_negative()).count()
    }

    /// Fraction-free Gaussian elimination.
    pub fn determinant(&self) -> BigInt {
        let m = self.dim();
        if m == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..m {
            if a[k][k].is_zero() {
                match (k + 1..m).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[m - 1][m - 1]
    }

    /// Exact inverse; fails with [`Error::NonIntegral`] if it is not an
    /// integer matrix.
    pub fn inverse(&self) -> Result<Self> {
        let m = self.dim();
        let mut a: Vec<Vec<BigRational>> = self
            .entries
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut v: Vec<BigRational> = row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
                v.extend((0..m).map(|c| BigRational::from_integer(BigInt::from((r == c) as i64))));
                v
            })
            .collect();
        for k in 0..m {
            let p = (k..m).find(|&r| !a[r][k].is_zero()).ok_or(Error::NonIntegral)?;
            a.swap(k, p);
            let piv = a[k][k].clone();
            for x in a[k].iter_mut() {
                *x = &*x / &piv;
            }
            for r in 0..m {
                if r != k && !a[r][k].is_zero() {
                    let f = a[r][k].clone();
                    for c in 0..2 * m {
                        let t = &f * &a[k][c];
                        a[r][c] -= t;
                    }
                }
            }
        }
        let entries = a
            .into_iter()
            .map(|row| {
                row[m..]
                    .iter()
                    .map(|x| if x.is_integer() { Ok(x.to_integer()) } else { Err(Error::NonIntegral) })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { from: self.to, to: self.from, order: self.order.clone(), entries })
    }

    /// `self · rhs`, i.e. first `rhs` then `self`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.order != rhs.order || self.from != rhs.to {
            return Err(Error::SizeMismatch { expected: self.dim(), found: rhs.dim() });
        }
        let m = self.dim();
        let mut entries = vec![vec![BigInt::zero(); m]; m];
        for (r, row) in entries.iter_mut().enumerate() {
            for (k, a) in self.entries[r].iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (x, b) in row.iter_mut().zip(&rhs.entries[k]) {
                    if !b.is_zero() {
                        *x += a * b;
                    }
                }
            }
        }
        Ok(Self { from: rhs.from, to: self.to, order: self.order.clone(), entries })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "from": self.from,
            "to": self.to,
            "n": self.order.first().map_or(0, |t| t.n()),
            "order": self.order.iter().map(|t| t.word().expect("standard").to_string()).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|row| row.iter().map(json::int).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Aligned text with the boundary words as row labels.
impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.order.iter().map(|t| t.word().expect("standard").to_string()).collect();
        let lw = labels.iter().map(String::len).max().unwrap_or(0);
        let cw = self
            .entries
            .iter()
            .flatten()
            .map(|x| if x.is_zero() { 1 } else { x.to_string().len() })
            .max()
            .unwrap_or(1)
            .max(if self.entries.iter().flatten().any(|x| x.is_negative()) { 2 } else { 1 });
        writeln!(f, "{} -> {} ({}x{})", self.from, self.to, self.dim(), self.dim())?;
        for (r, row) in self.entries.iter().enumerate() {
            write!(f, "{:>lw$} |", labels[r])?;
            for x in row {
                let s = if x.is_zero() { ".".to_string() } else { x.to_string() };
                write!(f, " {s:>cw$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
