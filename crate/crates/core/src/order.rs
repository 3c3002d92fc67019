//! Partial orders on standard tableaux: the weak order and the transitive
//! closure of `≺` on boundary words.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::Tableau;
use crate::word::BoundaryWord;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    /// Prefix order on `sigma(T)`, see [`Tableau::leq_weak`].
    Weak,
    /// Transitive closure of `≺` on the words of standard tableaux.
    PrecClosure,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Weak => "weak",
            OrderKind::PrecClosure => "prec-closure",
        })
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(OrderKind::Weak),
            "prec-closure" | "prec" => Ok(OrderKind::PrecClosure),
            other => Err(Error::InvalidWord(format!("unknown order {other:?}"))),
        }
    }
}

/// `t1 ≼* t2`: the word of `t1` is reached from the word of `t2` by a chain
/// of `≺` steps through words of standard tableaux.
pub fn prec_star(t1: &Tableau, t2: &Tableau) -> Result<bool> {
    let (w1, w2) = (t1.word()?, t2.word()?);
    if w1 == w2 {
        return Ok(true);
    }
    let target_inv = w1.inversions();
    let mut seen = HashSet::from([w2.clone()]);
    let mut queue = VecDeque::from([w2]);
    while let Some(w) = queue.pop_front() {
        for p in w.prec_predecessors() {
            if p == w1 {
                return Ok(true);
            }
            // ≺ strictly lowers Inv, so nothing below target_inv can lead back up
            if p.inversions() > target_inv && p.is_ballot() && seen.insert(p.clone()) {
                queue.push_back(p);
            }
        }
    }
    Ok(false)
}

/// A finite poset on a list of tableaux, stored as its strict relation.
#[derive(Clone, Debug)]
pub struct Poset {
    kind: Option<OrderKind>,
    elements: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    // lt[a][b] <=> a < b
    lt: Vec<Vec<bool>>,
}

impl Poset {
    pub fn new(kind: OrderKind, elements: Vec<Tableau>) -> Result<Self> {
        match kind {
            OrderKind::Weak => Self::weak(elements),
            OrderKind::PrecClosure => Self::prec_closure(elements),
        }
    }

    pub fn weak(elements: Vec<Tableau>) -> Result<Self> {
        let m = elements.len();
        let mut lt = vec![vec![false; m]; m];
        for a in 0..m {
            for b in 0..m {
                lt[a][b] = a != b && elements[a].leq_weak(&elements[b])?;
            }
        }
        Ok(Self::from_parts(Some(OrderKind::Weak), elements, lt))
    }

    pub fn prec_closure(elements: Vec<Tableau>) -> Result<Self> {
        let words = elements.iter().map(|t| t.word()).collect::<Result<Vec<BoundaryWord>>>()?;
        let m = elements.len();
        let mut covers = vec![vec![false; m]; m];
        for a in 0..m {
            for b in 0..m {
                covers[a][b] = words[a].prec(&words[b]);
            }
        }
        let mut poset = Self::from_parts(Some(OrderKind::PrecClosure), elements, covers);
        poset.close();
        Ok(poset)
    }

    /// The order generated by an arbitrary strict relation.
    pub fn generated_by(elements: Vec<Tableau>, rel: impl Fn(usize, usize) -> bool) -> Self {
        let m = elements.len();
        let lt = (0..m).map(|a| (0..m).map(|b| a != b && rel(a, b)).collect()).collect();
        let mut poset = Self::from_parts(None, elements, lt);
        poset.close();
        poset
    }

    fn from_parts(kind: Option<OrderKind>, elements: Vec<Tableau>, lt: Vec<Vec<bool>>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Self { kind, elements, index, lt }
    }

    fn close(&mut self) {
        let m = self.elements.len();
        for k in 0..m {
            for a in 0..m {
                if self.lt[a][k] {
                    for b in 0..m {
                        if self.lt[k][b] {
                            self.lt[a][b] = true;
                        }
                    }
                }
            }
        }
    }

    pub fn kind(&self) -> Option<OrderKind> {
        self.kind
    }

    pub fn elements(&self) -> &[Tableau] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a][b]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.lt[a][b]
    }

    pub fn relation_count(&self) -> usize {
        self.lt.iter().flatten().filter(|&&x| x).count()
    }

    /// Every strict relation of `other` (on the same elements) holds here.
    pub fn contains(&self, other: &Poset) -> bool {
        other.elements.iter().enumerate().all(|(a, ta)| {
            other.elements.iter().enumerate().all(|(b, tb)| !other.lt[a][b] || self.lt[self.index[ta]][self.index[tb]])
        })
    }

    pub fn is_partial_order(&self) -> bool {
        let m = self.len();
        (0..m).all(|a| !self.lt[a][a])
            && (0..m).all(|a| (0..m).all(|b| !(self.lt[a][b] && self.lt[b][a])))
            && (0..m).all(|a| (0..m).all(|b| (0..m).all(|c| !(self.lt[a][b] && self.lt[b][c]) || self.lt[a][c])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remark_pair_under_prec_closure() {
        let t = Tableau::from_columns(vec![[1, 2, 5], [3, 4, 7], [6, 8, 9]]).unwrap();
        let s = Tableau::from_columns(vec![[1, 2, 5], [3, 6, 7], [4, 8, 9]]).unwrap();
        assert!(prec_star(&t, &s).unwrap());
        assert!(!prec_star(&s, &t).unwrap());
    }

    #[test]
    fn n2_orders_coincide() {
        let tabs = Tableau::enumerate(2).unwrap();
        let weak = Poset::weak(tabs.clone()).unwrap();
        let prec = Poset::prec_closure(tabs).unwrap();
        assert_eq!(weak.relation_count(), 9);
        assert!(weak.contains(&prec) && prec.contains(&weak));
    }

    #[test]
    fn superstandard_is_minimum() {
        let tabs = Tableau::enumerate(3).unwrap();
        let weak = Poset::weak(tabs.clone()).unwrap();
        let t0 = weak.index_of(&Tableau::superstandard(3).unwrap()).unwrap();
        assert!((0..weak.len()).all(|b| weak.le(t0, b)));
    }
}
