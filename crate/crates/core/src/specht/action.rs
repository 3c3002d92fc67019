//! The right action of the symmetric group on M-diagram combinations.

use std::collections::HashMap;
use std::sync::{Arc as Shared, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::diagram::ForkDiagram;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::web::{act_web, web_of_fork};

use super::basis::SpechtBasis;
use super::expand::expand_in_m;
use super::matrix::{BasisTag, TransitionMatrix};

struct WebRoute {
    basis: SpechtBasis,
    w_to_m: TransitionMatrix,
}

fn web_route(n: usize) -> Result<Shared<WebRoute>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Shared<WebRoute>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().expect("cache lock").get(&n) {
        return Ok(r.clone());
    }
    let basis = SpechtBasis::new(n)?;
    let w_to_m = basis.transition_matrix(BasisTag::M, BasisTag::W)?.inverse()?;
    let route = Shared::new(WebRoute { basis, w_to_m });
    cache.lock().expect("cache lock").insert(n, route.clone());
    Ok(route)
}

/// `d . s_i` in M-diagrams. When `i` and `i + 1` lie on different arcs the
/// labels are swapped and the result expanded; when they share an arc the
/// generator is applied to the web expansion and converted back.
pub fn act_diagram(d: &ForkDiagram, i: usize) -> Result<LinComb<ForkDiagram>> {
    match d.swap_adjacent(i)? {
        Some(e) => Ok(expand_in_m(&e)),
        None => {
            let route = web_route(d.n())?;
            let x = act_web(&web_of_fork(d), i)?;
            route.basis.web_to_m(&x, &route.w_to_m)
        }
    }
}

/// `x . s_i`, linear in `x`.
pub fn act_module(x: &LinComb<ForkDiagram>, i: usize) -> Result<LinComb<ForkDiagram>> {
    x.try_flat_map(|d| act_diagram(d, i))
}

/// Matrix of `s_i` on the M basis; column `c` is `m_c . s_i`.
pub fn generator_matrix(basis: &SpechtBasis, i: usize) -> Result<TransitionMatrix> {
    let points = 3 * basis.n();
    if i == 0 || i >= points {
        return Err(Error::GeneratorOutOfRange { index: i, points });
    }
    let m = basis.dim();
    let mut entries = vec![vec![BigInt::from(0); m]; m];
    for (c, d) in basis.m_diagrams().iter().enumerate() {
        let col = basis.m_coordinates(&act_diagram(d, i)?)?;
        for (r, x) in col.into_iter().enumerate() {
            entries[r][c] = x;
        }
    }
    Ok(TransitionMatrix { from: BasisTag::M, to: BasisTag::M, order: basis.order().to_vec(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(t: &[[usize; 3]]) -> ForkDiagram {
        ForkDiagram::from_triples(t).unwrap()
    }

    #[test]
    fn printed_actions() {
        let m0 = d(&[[1, 2, 3], [4, 5, 6]]);
        let m1 = d(&[[1, 2, 4], [3, 5, 6]]);
        let m2 = d(&[[2, 3, 4], [1, 5, 6]]);
        let m4 = d(&[[2, 3, 6], [1, 4, 5]]);
        let got = act_module(&LinComb::single(m1.clone()), 2).unwrap();
        assert_eq!(got, LinComb::from_terms([(m2.clone(), 1), (m1, 1), (m0.clone(), -1)]));
        let got = act_module(&LinComb::single(m2.clone()), 4).unwrap();
        assert_eq!(got, LinComb::from_terms([(m4, 1), (m2, 1), (m0, -1)]));
    }

    #[test]
    fn same_arc_swap_negates() {
        let m0 = d(&[[1, 2, 3], [4, 5, 6]]);
        for i in [1, 2, 4, 5] {
            assert_eq!(act_diagram(&m0, i).unwrap(), LinComb::term(m0.clone(), -1));
        }
    }

    #[test]
    fn out_of_range() {
        let m0 = d(&[[1, 2, 3]]);
        assert!(matches!(act_diagram(&m0, 3), Err(Error::GeneratorOutOfRange { index: 3, points: 3 })));
        assert!(matches!(act_diagram(&m0, 0), Err(Error::GeneratorOutOfRange { .. })));
    }
}
