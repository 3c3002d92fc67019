//! Expansion of fork diagrams in the M-diagram basis, and in the web basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::ForkDiagram;
use crate::lincomb::LinComb;
use crate::web::{web_of_fork, WebSum};

use super::local::resolve_local;

/// `(Inv(boundary word), crossing count)`. Every local substitution lowers
/// it lexicographically on each term it produces.
pub fn measure(d: &ForkDiagram) -> (usize, usize) {
    (d.boundary_word().inversions(), d.crossing_count())
}

/// Counters from one run of [`expand_in_m_with`].
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct ExpansionStats {
    /// Local substitutions performed.
    pub rewrites: usize,
    /// Produced terms whose measure was checked.
    pub measured_terms: usize,
}

/// Expansion in M-diagrams, resolving the crossing pair whose six endpoints
/// are lexicographically smallest first.
pub fn expand_in_m(d: &ForkDiagram) -> LinComb<ForkDiagram> {
    expand_in_m_with(d, |_, pairs| (0..pairs.len()).min_by_key(|&k| pairs[k].1).expect("at least one pair")).0
}

/// Expansion in M-diagrams with a caller-chosen crossing pair at each step.
/// `choose` sees the diagram and its crossing pairs with their sorted
/// endpoints and returns an index into that list.
///
/// Panics if a substitution fails to lower [`measure`] on a produced term.
pub fn expand_in_m_with(
    d: &ForkDiagram,
    mut choose: impl FnMut(&ForkDiagram, &[((usize, usize), [usize; 6])]) -> usize,
) -> (LinComb<ForkDiagram>, ExpansionStats) {
    let mut stats = ExpansionStats::default();
    // largest measure first, so every diagram is expanded once with its
    // total coefficient
    let mut todo: BTreeMap<((usize, usize), ForkDiagram), BigInt> = BTreeMap::new();
    todo.insert((measure(d), d.clone()), BigInt::one());
    let mut out = LinComb::zero();
    while let Some(((mu, diagram), c)) = todo.pop_last() {
        if c.is_zero() {
            continue;
        }
        let pairs: Vec<((usize, usize), [usize; 6])> = diagram
            .counted_crossing_pairs()
            .into_iter()
            .map(|(i, j)| {
                let (a, b) = (diagram.arcs()[i].endpoints(), diagram.arcs()[j].endpoints());
                let mut pts = [a[0], a[1], a[2], b[0], b[1], b[2]];
                pts.sort();
                ((i, j), pts)
            })
            .collect();
        if pairs.is_empty() {
            out.add_term(diagram, c);
            continue;
        }
        let k = choose(&diagram, &pairs);
        let terms = resolve_local(&diagram, pairs[k].0).expect("crossing pair resolves");
        stats.rewrites += 1;
        for (e, x) in terms.iter() {
            let nu = measure(e);
            assert!(nu < mu, "measure did not decrease: {diagram} {mu:?} -> {e} {nu:?}");
            stats.measured_terms += 1;
            *todo.entry((nu, e.clone())).or_insert_with(BigInt::zero) += &c * x;
        }
    }
    (out, stats)
}

/// Linear extension of [`expand_in_m`].
pub fn expand_sum_in_m(x: &LinComb<ForkDiagram>) -> LinComb<ForkDiagram> {
    x.flat_map(expand_in_m)
}

/// The non-elliptic web expansion of a fork diagram.
pub fn expand_via_webs(d: &ForkDiagram) -> WebSum {
    web_of_fork(d)
}
