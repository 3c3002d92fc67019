//! The three bases of `S^(n,n,n)` indexed by standard tableaux, and the
//! transition matrices between them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::diagram::ForkDiagram;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::order::{OrderKind, Poset};
use crate::tableau::Tableau;
use crate::web::{tymoczko_web, web_of_fork, Web, WebKey, WebSum};

use super::expand::expand_in_m;
use super::matrix::{BasisTag, TransitionMatrix};

/// Largest `n` for which bases are built.
pub const MAX_N: usize = 4;

/// Standard tableaux of shape `(n,n,n)` in layout order: by inversion
/// count of the boundary word, ties broken by the tableau. This is a
/// linear extension of both the weak order and the closure of `≺`.
pub fn layout_order(n: usize) -> Result<Vec<Tableau>> {
    let mut ts =
        Tableau::enumerate(n)?.into_iter().map(|t| Ok((t.word()?.inversions(), t))).collect::<Result<Vec<_>>>()?;
    ts.sort();
    Ok(ts.into_iter().map(|(_, t)| t).collect())
}

/// Everything needed to move between the bases for one `n`.
#[derive(Clone, Debug)]
pub struct SpechtBasis {
    n: usize,
    order: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    p: Vec<ForkDiagram>,
    m: Vec<ForkDiagram>,
    m_index: HashMap<ForkDiagram, usize>,
    w: Vec<Web>,
    w_index: HashMap<WebKey, usize>,
}

impl SpechtBasis {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::TooLarge { n, limit: MAX_N });
        }
        let order = layout_order(n)?;
        let index = order.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let p = order.iter().map(ForkDiagram::phi).collect::<Result<Vec<_>>>()?;
        let m = order.iter().map(ForkDiagram::psi).collect::<Result<Vec<_>>>()?;
        let m_index = m.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let w = order.iter().map(tymoczko_web).collect::<Result<Vec<_>>>()?;
        let w_index: HashMap<WebKey, usize> = w.iter().enumerate().map(|(i, x)| (x.key(), i)).collect();
        if w_index.len() != w.len() {
            return Err(Error::InvalidWeb("two tableaux share a web".into()));
        }
        Ok(Self { n, order, index, p, m, m_index, w, w_index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[Tableau] {
        &self.order
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn p_diagrams(&self) -> &[ForkDiagram] {
        &self.p
    }

    pub fn m_diagrams(&self) -> &[ForkDiagram] {
        &self.m
    }

    pub fn webs(&self) -> &[Web] {
        &self.w
    }

    pub fn m_position(&self, d: &ForkDiagram) -> Option<usize> {
        self.m_index.get(d).copied()
    }

    pub fn w_position(&self, k: &WebKey) -> Option<usize> {
        self.w_index.get(k).copied()
    }

    pub fn poset(&self, kind: OrderKind) -> Result<Poset> {
        Poset::new(kind, self.order.clone())
    }

    /// Coordinates of an M-diagram combination.
    pub fn m_coordinates(&self, x: &LinComb<ForkDiagram>) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.dim()];
        for (d, c) in x.iter() {
            let i = self.m_position(d).ok_or_else(|| Error::NotInBasis(format!("fork diagram {d}")))?;
            v[i] += c;
        }
        Ok(v)
    }

    /// Coordinates of a combination of non-elliptic webs.
    pub fn w_coordinates(&self, x: &WebSum) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.dim()];
        for (k, c) in x.iter() {
            let i = self.w_position(k).ok_or_else(|| Error::NotInBasis(format!("web {k}")))?;
            v[i] += c;
        }
        Ok(v)
    }

    pub fn m_combination(&self, v: &[BigInt]) -> LinComb<ForkDiagram> {
        LinComb::from_terms(v.iter().enumerate().map(|(i, c)| (self.m[i].clone(), c.clone())))
    }

    pub fn w_combination(&self, v: &[BigInt]) -> WebSum {
        LinComb::from_terms(v.iter().enumerate().map(|(i, c)| (self.w[i].key(), c.clone())))
    }

    fn matrix_of_columns(&self, from: BasisTag, to: BasisTag, cols: Vec<Vec<BigInt>>) -> TransitionMatrix {
        let m = self.dim();
        let entries = (0..m).map(|r| (0..m).map(|c| cols[c][r].clone()).collect()).collect();
        TransitionMatrix { from, to, order: self.order.clone(), entries }
    }

    /// Columns `expand_in_m(φ(T))`.
    pub fn p_to_m(&self) -> Result<TransitionMatrix> {
        let cols = self.p.iter().map(|d| self.m_coordinates(&expand_in_m(d))).collect::<Result<Vec<_>>>()?;
        Ok(self.matrix_of_columns(BasisTag::P, BasisTag::M, cols))
    }

    /// Columns: web expansions of the M-diagrams.
    pub fn m_to_w(&self) -> Result<TransitionMatrix> {
        let cols = self.m.iter().map(|d| self.w_coordinates(&web_of_fork(d))).collect::<Result<Vec<_>>>()?;
        Ok(self.matrix_of_columns(BasisTag::M, BasisTag::W, cols))
    }

    /// Columns: web expansions of the polytabloid diagrams, computed
    /// directly rather than through M.
    pub fn p_to_w(&self) -> Result<TransitionMatrix> {
        let cols = self.p.iter().map(|d| self.w_coordinates(&web_of_fork(d))).collect::<Result<Vec<_>>>()?;
        Ok(self.matrix_of_columns(BasisTag::P, BasisTag::W, cols))
    }

    pub fn transition_matrix(&self, from: BasisTag, to: BasisTag) -> Result<TransitionMatrix> {
        use BasisTag::*;
        match (from, to) {
            (a, b) if a == b => Ok(TransitionMatrix::identity(a, self.order.clone())),
            (P, M) => self.p_to_m(),
            (M, W) => self.m_to_w(),
            (P, W) => self.p_to_w(),
            (b, a) => self.transition_matrix(a, b)?.inverse(),
        }
    }

    /// A web combination rewritten in M-diagrams, through the inverse of
    /// the M→W matrix.
    pub fn web_to_m(&self, x: &WebSum, w_to_m: &TransitionMatrix) -> Result<LinComb<ForkDiagram>> {
        let v = self.w_coordinates(x)?;
        let m = self.dim();
        let out: Vec<BigInt> = (0..m).map(|r| (0..m).map(|k| &w_to_m.entries[r][k] * &v[k]).sum()).collect();
        Ok(self.m_combination(&out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_extends_both_orders() {
        for n in 1..=3 {
            let b = SpechtBasis::new(n).unwrap();
            for kind in [OrderKind::Weak, OrderKind::PrecClosure] {
                let p = b.poset(kind).unwrap();
                for r in 0..b.dim() {
                    for c in 0..r {
                        assert!(!p.lt(r, c), "n={n} {kind:?}: layout is not a linear extension");
                    }
                }
            }
        }
    }

    #[test]
    fn n2_p_to_m_column_of_t4() {
        let b = SpechtBasis::new(2).unwrap();
        let pm = b.p_to_m().unwrap();
        let v4 = ForkDiagram::from_triples(&[[1, 3, 5], [2, 4, 6]]).unwrap();
        let c = b.p_diagrams().iter().position(|d| *d == v4).unwrap();
        let col: Vec<i64> = (0..5).map(|r| i64::try_from(pm.entry(r, c)).unwrap()).collect();
        let m0 = b.m_position(&ForkDiagram::from_triples(&[[1, 2, 3], [4, 5, 6]]).unwrap()).unwrap();
        assert_eq!(m0, 0);
        assert_eq!(col.iter().filter(|&&x| x == 1).count(), 4);
        assert_eq!(col[m0], -1);
    }

    #[test]
    fn trivial_module() {
        let b = SpechtBasis::new(1).unwrap();
        for from in BasisTag::ALL {
            for to in BasisTag::ALL {
                let t = b.transition_matrix(from, to).unwrap();
                assert_eq!(t.dim(), 1);
                assert!(t.diagonal_is_one());
            }
        }
    }

    #[test]
    fn too_large() {
        assert!(matches!(SpechtBasis::new(MAX_N + 1), Err(Error::TooLarge { .. })));
    }
}
