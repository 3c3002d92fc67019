//! Fork diagrams: partitions of the boundary `{1..3n}` into arcs `(a,b,c)`.
//!
//! A fork diagram is determined by its arcs, so equality here is equality
//! of the arc sets. The geometric picture (a trivalent source vertex per arc,
//! legs drawn to `a < b < c`) lives in [`crate::web`].

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tableau::Tableau;
use crate::word::{BoundaryWord, Letter};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Arc {
    pub left: usize,
    pub middle: usize,
    pub right: usize,
}

impl Arc {
    pub fn new(left: usize, middle: usize, right: usize) -> Result<Self> {
        if !(0 < left && left < middle && middle < right) {
            return Err(Error::InvalidDiagram(format!("({left},{middle},{right}) is not increasing")));
        }
        Ok(Self { left, middle, right })
    }

    pub fn endpoints(&self) -> [usize; 3] {
        [self.left, self.middle, self.right]
    }

    pub fn left_arc(&self) -> (usize, usize) {
        (self.left, self.middle)
    }

    pub fn right_arc(&self) -> (usize, usize) {
        (self.middle, self.right)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.left, self.middle, self.right)
    }
}

/// Two chords `(a,b)` and `(c,d)` with distinct endpoints interleave.
pub fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ForkDiagram {
    n: usize,
    // sorted by left endpoint
    arcs: Vec<Arc>,
}

impl ForkDiagram {
    pub fn new(mut arcs: Vec<Arc>) -> Result<Self> {
        let n = arcs.len();
        if n == 0 {
            return Err(Error::ZeroColumns);
        }
        let mut seen = vec![false; 3 * n + 1];
        for p in arcs.iter().flat_map(|a| a.endpoints()) {
            if p > 3 * n || seen[p] {
                return Err(Error::InvalidDiagram(format!("arcs must partition 1..={}", 3 * n)));
            }
            seen[p] = true;
        }
        arcs.sort();
        Ok(Self { n, arcs })
    }

    /// Convenience constructor from triples.
    pub fn from_triples(triples: &[[usize; 3]]) -> Result<Self> {
        let arcs = triples
            .iter()
            .map(|t| {
                let mut t = *t;
                t.sort();
                Arc::new(t[0], t[1], t[2])
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(arcs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> usize {
        3 * self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Index of the arc containing boundary point `p`.
    pub fn arc_of(&self, p: usize) -> usize {
        self.arcs.iter().position(|a| a.endpoints().contains(&p)).expect("point in diagram")
    }

    /// Polytabloid diagram of a standard tableau: each column becomes an arc.
    pub fn phi(t: &Tableau) -> Result<Self> {
        if !t.is_standard() {
            return Err(Error::NotStandard);
        }
        let arcs = t.columns().iter().map(|c| Arc::new(c[0], c[1], c[2])).collect::<Result<_>>()?;
        Self::new(arcs)
    }

    /// M-diagram of a standard tableau. Each `+` is matched to a `0` by the
    /// non-crossing (stack) matching, then each `0` to a `-` likewise; the two
    /// matchings are glued at the `0`s.
    pub fn psi(t: &Tableau) -> Result<Self> {
        let word = t.word()?;
        Self::from_word_matching(&word)
    }

    fn from_word_matching(word: &BoundaryWord) -> Result<Self> {
        let len = word.len();
        let mut left_of = vec![0usize; len + 1];
        let mut right_of = vec![0usize; len + 1];
        let infeasible = || Error::InvalidWord(format!("{word} admits no non-crossing matching"));
        let mut stack = Vec::new();
        for (i, l) in word.letters().iter().enumerate() {
            match l {
                Letter::Plus => stack.push(i + 1),
                Letter::Zero => left_of[i + 1] = stack.pop().ok_or_else(infeasible)?,
                Letter::Minus => {}
            }
        }
        if !stack.is_empty() {
            return Err(infeasible());
        }
        for (i, l) in word.letters().iter().enumerate() {
            match l {
                Letter::Zero => stack.push(i + 1),
                Letter::Minus => {
                    let b = stack.pop().ok_or_else(infeasible)?;
                    right_of[b] = i + 1;
                }
                Letter::Plus => {}
            }
        }
        if !stack.is_empty() {
            return Err(infeasible());
        }
        let arcs = (1..=len)
            .filter(|&b| word.letters()[b - 1] == Letter::Zero)
            .map(|b| Arc::new(left_of[b], b, right_of[b]))
            .collect::<Result<_>>()?;
        Self::new(arcs)
    }

    /// The tableau `T` with `phi(T) == self`, if `self` is a polytabloid diagram.
    pub fn polytabloid_tableau(&self) -> Option<Tableau> {
        let t = Tableau::from_columns(self.arcs.iter().map(|a| a.endpoints()).collect()).ok()?;
        t.is_standard().then_some(t)
    }

    /// The tableau `T` with `psi(T) == self`, if `self` is an M-diagram.
    pub fn m_tableau(&self) -> Option<Tableau> {
        if !self.is_m_diagram() {
            return None;
        }
        let t = Tableau::from_word(&self.boundary_word()).ok()?;
        (Self::psi(&t).ok()? == *self).then_some(t)
    }

    /// Left arcs pairwise non-crossing and right arcs pairwise non-crossing.
    pub fn is_m_diagram(&self) -> bool {
        self.crossing_count() == 0
    }

    pub fn is_polytabloid(&self) -> bool {
        self.polytabloid_tableau().is_some()
    }

    /// Pairs of arcs `(i, j)`, `i < j`, whose left arcs or right arcs cross.
    pub fn counted_crossing_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.arcs.len() {
            for j in i + 1..self.arcs.len() {
                if self.pair_crossings(i, j) > 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Counted crossings between arcs `i` and `j` (0, 1 or 2).
    pub fn pair_crossings(&self, i: usize, j: usize) -> usize {
        let (a, b) = (&self.arcs[i], &self.arcs[j]);
        usize::from(chords_cross(a.left_arc(), b.left_arc())) + usize::from(chords_cross(a.right_arc(), b.right_arc()))
    }

    /// Crossing left-arc pairs plus crossing right-arc pairs. Crossings
    /// between a left arc and a right arc are not counted.
    pub fn crossing_count(&self) -> usize {
        let m = self.arcs.len();
        (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).map(|(i, j)| self.pair_crossings(i, j)).sum()
    }

    /// Left endpoints `+`, middle `0`, right `-`.
    pub fn boundary_word(&self) -> BoundaryWord {
        let mut letters = vec![Letter::Plus; self.points()];
        for a in &self.arcs {
            letters[a.left - 1] = Letter::Plus;
            letters[a.middle - 1] = Letter::Zero;
            letters[a.right - 1] = Letter::Minus;
        }
        BoundaryWord::new(letters)
    }

    /// Relabels boundary points by `f`, which must be a bijection of
    /// `1..=3n` preserving the order inside every arc.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Self> {
        let arcs = self.arcs.iter().map(|a| Arc::new(f(a.left), f(a.middle), f(a.right))).collect::<Result<_>>()?;
        Self::new(arcs)
    }

    /// Swaps the labels `i` and `i+1`. `None` when both lie on one arc,
    /// where the swap reverses two legs of a single fork.
    pub fn swap_adjacent(&self, i: usize) -> Result<Option<Self>> {
        if i == 0 || i >= self.points() {
            return Err(Error::GeneratorOutOfRange { index: i, points: self.points() });
        }
        if self.arc_of(i) == self.arc_of(i + 1) {
            return Ok(None);
        }
        let swap = |p| {
            if p == i {
                i + 1
            } else if p == i + 1 {
                i
            } else {
                p
            }
        };
        self.relabel(swap).map(Some)
    }

    /// All fork diagrams on `3n` points (all partitions into triples).
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(rest: &mut Vec<usize>, cur: &mut Vec<Arc>, out: &mut Vec<ForkDiagram>) {
            if rest.is_empty() {
                out.push(ForkDiagram::new(cur.clone()).unwrap());
                return;
            }
            let a = rest[0];
            for j in 1..rest.len() {
                for k in j + 1..rest.len() {
                    let (b, c) = (rest[j], rest[k]);
                    let remaining: Vec<usize> = rest.iter().copied().filter(|&p| p != a && p != b && p != c).collect();
                    let saved = std::mem::replace(rest, remaining);
                    cur.push(Arc { left: a, middle: b, right: c });
                    rec(rest, cur, out);
                    cur.pop();
                    *rest = saved;
                }
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(&mut (1..=3 * n).collect(), &mut Vec::new(), &mut out);
        }
        out
    }

    /// A uniformly random fork diagram on `3n` points.
    pub fn random(n: usize, rng: &mut impl rand::Rng) -> Self {
        use rand::seq::SliceRandom;
        let mut pts: Vec<usize> = (1..=3 * n).collect();
        pts.shuffle(rng);
        let triples: Vec<[usize; 3]> = pts.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
        Self::from_triples(&triples).expect("a partition into triples")
    }

    /// All M-diagrams on `3n` points, in the order of [`Tableau::enumerate`].
    pub fn all_m(n: usize) -> Result<Vec<Self>> {
        Tableau::enumerate(n)?.iter().map(Self::psi).collect()
    }
}

impl fmt::Display for ForkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.arcs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    arcs: Vec<[usize; 3]>,
}

impl Serialize for ForkDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson { n: self.n, arcs: self.arcs.iter().map(|a| a.endpoints()).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ForkDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DiagramJson::deserialize(d)?;
        let arcs = j
            .arcs
            .iter()
            .map(|t| Arc::new(t[0], t[1], t[2]))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        let diagram = ForkDiagram::new(arcs).map_err(serde::de::Error::custom)?;
        if diagram.n != j.n {
            return Err(serde::de::Error::custom("n does not match the number of arcs"));
        }
        Ok(diagram)
    }
}
