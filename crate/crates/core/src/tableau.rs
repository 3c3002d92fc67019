//! Fillings of the 3×n rectangle and standard Young tableaux of shape (n,n,n).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::word::{BoundaryWord, Letter};

/// A filling of the 3×n rectangle by `{1..3n}`.
///
/// Cells are addressed `(row, col)`, both 0-based; row 0 is the top row.
/// Non-standard fillings are representable (the symmetric group moves
/// standard tableaux to non-standard fillings), see [`Tableau::is_standard`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tableau {
    // columns[j] = entries of column j, top to bottom
    columns: Vec<[usize; 3]>,
}

impl Tableau {
    /// Builds a filling from its three rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() != 3 {
            return Err(Error::InvalidTableau(format!("expected 3 rows, got {}", rows.len())));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::ZeroColumns);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTableau("rows have different lengths".into()));
        }
        let columns = (0..n).map(|j| [rows[0][j], rows[1][j], rows[2][j]]).collect();
        Self::from_columns(columns)
    }

    pub fn from_columns(columns: Vec<[usize; 3]>) -> Result<Self> {
        let n = columns.len();
        if n == 0 {
            return Err(Error::ZeroColumns);
        }
        let mut seen = vec![false; 3 * n + 1];
        for &e in columns.iter().flatten() {
            if e == 0 || e > 3 * n || seen[e] {
                return Err(Error::InvalidTableau(format!("entries must be a permutation of 1..={}", 3 * n)));
            }
            seen[e] = true;
        }
        Ok(Self { columns })
    }

    /// The standard tableau with a boundary word, i.e. the one whose row `r`
    /// holds the positions carrying the letter of row `r`.
    pub fn from_word(word: &BoundaryWord) -> Result<Self> {
        if word.is_empty() || !word.is_balanced() || !word.is_ballot() {
            return Err(Error::InvalidWord(format!("{word} is not the word of a standard tableau")));
        }
        let mut rows = vec![Vec::new(), Vec::new(), Vec::new()];
        for (i, l) in word.letters().iter().enumerate() {
            rows[l.row()].push(i + 1);
        }
        Self::from_rows(&rows)
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.columns[col][row]
    }

    pub fn columns(&self) -> &[[usize; 3]] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..3).map(|r| self.columns.iter().map(|c| c[r]).collect()).collect()
    }

    /// `(row, col)` of entry `e`.
    pub fn position(&self, e: usize) -> (usize, usize) {
        for (j, c) in self.columns.iter().enumerate() {
            if let Some(r) = c.iter().position(|&x| x == e) {
                return (r, j);
            }
        }
        panic!("entry {e} not in tableau");
    }

    pub fn is_standard(&self) -> bool {
        let cols_ok = self.columns.iter().all(|c| c[0] < c[1] && c[1] < c[2]);
        let rows_ok = self.columns.windows(2).all(|w| (0..3).all(|r| w[0][r] < w[1][r]));
        cols_ok && rows_ok
    }

    /// The superstandard tableau `T0`: column `j` holds `3j-2, 3j-1, 3j`.
    pub fn superstandard(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroColumns);
        }
        Ok(Self { columns: (0..n).map(|j| [3 * j + 1, 3 * j + 2, 3 * j + 3]).collect() })
    }

    /// Right action: every entry `e` is replaced by `sigma(e)`.
    /// `t.act(&p).act(&q) == t.act(&p.then(&q))`.
    pub fn act(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.n_points() != 3 * self.n() {
            return Err(Error::SizeMismatch { expected: 3 * self.n(), found: sigma.n_points() });
        }
        let columns = self.columns.iter().map(|c| c.map(|e| sigma.apply(e))).collect();
        Ok(Self { columns })
    }

    /// The unique `sigma` with `T0.act(sigma) == self`.
    pub fn sigma(&self) -> Result<Permutation> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let images = (1..=3 * self.n()).map(|e| self.entry((e - 1) % 3, (e - 1) / 3)).collect();
        Permutation::from_images(images)
    }

    /// Letter `i` is the row of entry `i`: top `+`, middle `0`, bottom `-`.
    pub fn word(&self) -> Result<BoundaryWord> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let mut letters = vec![Letter::Plus; 3 * self.n()];
        for c in &self.columns {
            for (r, &e) in c.iter().enumerate() {
                letters[e - 1] = Letter::from_row(r);
            }
        }
        Ok(BoundaryWord::new(letters))
    }

    /// Every standard tableau of shape (n,n,n), ordered lexicographically by
    /// the concatenated column entries.
    pub fn enumerate(n: usize) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(Error::ZeroColumns);
        }
        let mut words = Vec::new();
        ballot_words(n, [0; 3], &mut Vec::new(), &mut words);
        let mut out: Vec<Self> = words.iter().map(|w| Self::from_word(w).unwrap()).collect();
        out.sort();
        Ok(out)
    }

    /// Weak order: `sigma(self)` is a prefix of `sigma(other)`, i.e.
    /// `sigma(other) = sigma(self).then(tau)` with lengths adding up.
    pub fn leq_weak(&self, other: &Self) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: 3 * self.n(), found: 3 * other.n() });
        }
        let (s1, s2) = (self.sigma()?, other.sigma()?);
        let tau = s1.inverse().then(&s2);
        Ok(s2.length() == s1.length() + tau.length())
    }

    /// Compact row form `1,4/2,5/3,6`.
    pub fn to_compact(&self) -> String {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("/")
    }
}

fn ballot_words(n: usize, used: [usize; 3], cur: &mut Vec<Letter>, out: &mut Vec<BoundaryWord>) {
    if used == [n, n, n] {
        out.push(BoundaryWord::new(cur.clone()));
        return;
    }
    for row in 0..3 {
        let ok = used[row] < n && (row == 0 || used[row] < used[row - 1]);
        if ok {
            let mut u = used;
            u[row] += 1;
            cur.push(Letter::from_row(row));
            ballot_words(n, u, cur, out);
            cur.pop();
        }
    }
}

/// `2 (3n)! / (n! (n+1)! (n+2)!)`, the number of standard tableaux of
/// shape (n,n,n) by the hook length formula.
pub fn hook_length_count(n: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    2 * fact(3 * n) / (fact(n) * fact(n + 1) * fact(n + 2))
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = (3 * self.n()).to_string().len();
        for (k, r) in self.rows().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|e| format!("{e:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Accepts JSON (`{"n":2,"rows":[[1,4],[2,5],[3,6]]}`) or the compact
    /// row form `1,4/2,5/3,6`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return Ok(serde_json::from_str(s)?);
        }
        let rows = s
            .split('/')
            .map(|r| {
                r.split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidTableau(format!("bad entry {x:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&rows)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson { n: self.n(), rows: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        let t = Tableau::from_rows(&j.rows).map_err(serde::de::Error::custom)?;
        if t.n() != j.n {
            return Err(serde::de::Error::custom("n does not match the row length"));
        }
        Ok(t)
    }
}
