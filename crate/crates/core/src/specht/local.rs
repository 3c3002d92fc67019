//! The five local identities expressing a crossing pair of arcs in terms of
//! M-diagrams on six points.

use std::fmt;

use num_bigint::BigInt;

use crate::diagram::ForkDiagram;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;

pub(crate) const M0: [[usize; 3]; 2] = [[1, 2, 3], [4, 5, 6]];
pub(crate) const M1: [[usize; 3]; 2] = [[1, 2, 4], [3, 5, 6]];
pub(crate) const M2: [[usize; 3]; 2] = [[2, 3, 4], [1, 5, 6]];
pub(crate) const M3: [[usize; 3]; 2] = [[3, 4, 5], [1, 2, 6]];
pub(crate) const M4: [[usize; 3]; 2] = [[2, 3, 6], [1, 4, 5]];

/// The two-arc fork diagrams on six points with a counted crossing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LocalPattern {
    /// `{(1,3,4),(2,5,6)} = m2 + m1 - m0`
    V2,
    /// `{(1,2,5),(3,4,6)} = m3 + m1 - m0`
    V3,
    /// `{(2,3,5),(1,4,6)} = m4 + m2 - m0`
    U2,
    /// `{(2,4,5),(1,3,6)} = m4 + m3 - m0`
    U3,
    /// `{(1,3,5),(2,4,6)} = m4 + m3 + m2 + m1 - m0`
    V4,
}

impl LocalPattern {
    pub const ALL: [LocalPattern; 5] =
        [LocalPattern::V2, LocalPattern::V3, LocalPattern::U2, LocalPattern::U3, LocalPattern::V4];

    pub fn arcs(self) -> [[usize; 3]; 2] {
        match self {
            LocalPattern::V2 => [[1, 3, 4], [2, 5, 6]],
            LocalPattern::V3 => [[1, 2, 5], [3, 4, 6]],
            LocalPattern::U2 => [[2, 3, 5], [1, 4, 6]],
            LocalPattern::U3 => [[2, 4, 5], [1, 3, 6]],
            LocalPattern::V4 => [[1, 3, 5], [2, 4, 6]],
        }
    }

    pub fn diagram(self) -> ForkDiagram {
        ForkDiagram::from_triples(&self.arcs()).expect("local pattern")
    }

    /// Right-hand side as `(coefficient, M-diagram)` pairs.
    pub fn rhs(self) -> Vec<(i64, [[usize; 3]; 2])> {
        match self {
            LocalPattern::V2 => vec![(1, M2), (1, M1), (-1, M0)],
            LocalPattern::V3 => vec![(1, M3), (1, M1), (-1, M0)],
            LocalPattern::U2 => vec![(1, M4), (1, M2), (-1, M0)],
            LocalPattern::U3 => vec![(1, M4), (1, M3), (-1, M0)],
            LocalPattern::V4 => vec![(1, M4), (1, M3), (1, M2), (1, M1), (-1, M0)],
        }
    }

    pub fn expansion(self) -> LinComb<ForkDiagram> {
        LinComb::from_terms(
            self.rhs().into_iter().map(|(c, t)| (ForkDiagram::from_triples(&t).unwrap(), BigInt::from(c))),
        )
    }

    fn of(d: &ForkDiagram) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.diagram() == *d)
    }
}

impl fmt::Display for LocalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LocalPattern::V2 => "v2",
            LocalPattern::V3 => "v3",
            LocalPattern::U2 => "u2",
            LocalPattern::U3 => "u3",
            LocalPattern::V4 => "v4",
        })
    }
}

/// The six endpoints of arcs `i`, `j` in increasing order, and the pattern
/// they form after relabeling them `1..6`.
pub fn local_pattern(d: &ForkDiagram, (i, j): (usize, usize)) -> Result<(LocalPattern, [usize; 6])> {
    if i == j || i >= d.n() || j >= d.n() || d.pair_crossings(i, j) == 0 {
        return Err(Error::NoCrossing(i, j));
    }
    let (a, b) = (d.arcs()[i].endpoints(), d.arcs()[j].endpoints());
    let mut pts = [a[0], a[1], a[2], b[0], b[1], b[2]];
    pts.sort();
    let local = |p: usize| pts.iter().position(|&x| x == p).unwrap() + 1;
    let shape = ForkDiagram::from_triples(&[a.map(local), b.map(local)])?;
    let pattern = LocalPattern::of(&shape).expect("every crossing pair of arcs is one of the five patterns");
    Ok((pattern, pts))
}

/// Substitutes the local identity for the crossing arcs `i` and `j`,
/// leaving the other arcs untouched.
pub fn resolve_local(d: &ForkDiagram, pair: (usize, usize)) -> Result<LinComb<ForkDiagram>> {
    let (pattern, pts) = local_pattern(d, pair)?;
    let rest: Vec<[usize; 3]> =
        d.arcs().iter().enumerate().filter(|&(k, _)| k != pair.0 && k != pair.1).map(|(_, a)| a.endpoints()).collect();
    let mut out = LinComb::zero();
    for (c, m) in pattern.rhs() {
        let mut arcs = rest.clone();
        arcs.extend(m.iter().map(|t| t.map(|p| pts[p - 1])));
        out.add_term(ForkDiagram::from_triples(&arcs)?, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns_are_the_non_m_diagrams() {
        let non_m: Vec<ForkDiagram> = ForkDiagram::all(2).into_iter().filter(|d| !d.is_m_diagram()).collect();
        assert_eq!(non_m.len(), 5);
        for d in non_m {
            assert!(LocalPattern::of(&d).is_some(), "{d}");
        }
        for p in LocalPattern::ALL {
            assert!(p.expansion().basis().all(|m| m.is_m_diagram()));
        }
    }

    #[test]
    fn embedded_pattern() {
        // u2 on points {1,2,4,5,7,8} with a bystander arc (3,6,9)
        let d = ForkDiagram::from_triples(&[[2, 4, 7], [1, 5, 8], [3, 6, 9]]).unwrap();
        let (i, j) = (0, 1);
        assert_eq!(local_pattern(&d, (i, j)).unwrap().0, LocalPattern::U2);
        let x = resolve_local(&d, (i, j)).unwrap();
        assert_eq!(x.len(), 3);
        assert!(x.basis().all(|m| m.arcs().iter().any(|a| a.endpoints() == [3, 6, 9])));
    }

    #[test]
    fn rejects_non_crossing_pair() {
        let m2 = ForkDiagram::from_triples(&M2).unwrap();
        assert!(matches!(resolve_local(&m2, (0, 1)), Err(Error::NoCrossing(0, 1))));
    }
}
