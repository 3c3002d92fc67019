//! Reduction to non-elliptic webs by the loop, bigon and square relations,
//! resolving crossings by the skein relation when no face is reducible.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::splice::{self, Splice};
use super::{resolve_crossing, Web, WebKey, WebSum, OUTER};

/// Which reducible face (or crossing) to rewrite next.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Schedule {
    /// Lowest face id, then lowest crossing id.
    #[default]
    LowestFirst,
    /// Uniformly random choices from a seeded generator.
    Seeded(u64),
}

/// Internal faces of length 2 or 4 bounded by distinct trivalent vertices.
pub(crate) fn reducible_faces(web: &Web) -> Vec<Vec<usize>> {
    web.faces()
        .0
        .into_iter()
        .filter(|f| f.len() == 2 || f.len() == 4)
        .filter(|f| {
            let mut vs: Vec<usize> = f.iter().map(|&h| web.vertex(h)).collect();
            let all_trivalent = vs.iter().all(|&v| v != OUTER && web.kind(v).is_trivalent());
            vs.sort();
            vs.dedup();
            all_trivalent && vs.len() == f.len()
        })
        .collect()
}

/// Half-edge at the vertex of `h` other than `h` and `g`.
fn third(web: &Web, h: usize, g: usize) -> usize {
    web.rotation(web.vertex(h)).into_iter().find(|&x| x != h && x != g).expect("trivalent vertex")
}

/// Applies the bigon or square relation to `face`.
pub(crate) fn rewrite_face(web: &Web, face: &[usize]) -> Vec<(BigInt, Web)> {
    let k = face.len();
    let ext: Vec<usize> = (0..k).map(|i| third(web, face[i], web.twin(face[(i + k - 1) % k]))).collect();
    let mut base = Splice { delete: face.iter().map(|&h| web.vertex(h)).collect(), ..Default::default() };
    for &h in face {
        base.vanish(h);
        base.vanish(web.twin(h));
    }
    let build = |pairs: &[(usize, usize)]| {
        let mut s = base.clone();
        for &(a, b) in pairs {
            s.pair(ext[a], ext[b]);
        }
        splice::apply(web, &s).expect("local relation preserves validity")
    };
    match k {
        2 => vec![(BigInt::from(-2), build(&[(0, 1)]))],
        4 => vec![(BigInt::one(), build(&[(0, 1), (2, 3)])), (BigInt::one(), build(&[(1, 2), (3, 0)]))],
        _ => unreachable!("only bigons and squares are rewritten"),
    }
}

/// One rewrite step, or `None` when the web is non-elliptic.
fn step(web: &Web, rng: &mut Option<ChaCha8Rng>) -> Option<Vec<(BigInt, Web)>> {
    let mut pick = |len: usize| match rng {
        Some(r) => r.gen_range(0..len),
        None => 0,
    };
    let out = if web.loops() > 0 {
        let mut w = web.clone();
        w.loops = 0;
        vec![(BigInt::from(3).pow(web.loops() as u32), w)]
    } else {
        let faces = reducible_faces(web);
        if !faces.is_empty() {
            let f = &faces[pick(faces.len())];
            rewrite_face(web, f)
        } else {
            let crossings = web.crossings();
            if crossings.is_empty() {
                return None;
            }
            let v = crossings[pick(crossings.len())];
            let r = resolve_crossing(web, v).expect("crossings in a valid web are resolvable");
            vec![(BigInt::one(), r.identity), (BigInt::one(), r.fork_join)]
        }
    };
    for (_, w) in &out {
        let before = (web.crossing_count(), web.size());
        let after = (w.crossing_count(), w.size());
        assert!(
            after.0 < before.0 || (after.0 == before.0 && after.1 < before.1),
            "rewrite did not decrease (crossings, size): {before:?} -> {after:?}"
        );
    }
    Some(out)
}

/// Reduces `web` with the default schedule.
pub fn reduce(web: &Web) -> WebSum {
    reduce_with(web, Schedule::LowestFirst)
}

/// Reduces `web` to a combination of non-elliptic webs. Terms are merged by
/// canonical form after every round of rewrites.
pub fn reduce_with(web: &Web, schedule: Schedule) -> WebSum {
    let mut rng = match schedule {
        Schedule::LowestFirst => None,
        Schedule::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut current: BTreeMap<WebKey, (Web, BigInt)> = BTreeMap::new();
    current.insert(web.key(), (web.clone(), BigInt::one()));
    let mut out = WebSum::zero();
    while !current.is_empty() {
        let mut next: BTreeMap<WebKey, (Web, BigInt)> = BTreeMap::new();
        for (key, (w, c)) in current {
            match step(&w, &mut rng) {
                None => out.add_term(key, c),
                Some(terms) => {
                    for (k, w2) in terms {
                        let slot = next.entry(w2.key()).or_insert_with(|| (w2, BigInt::zero()));
                        slot.1 += &c * k;
                    }
                }
            }
        }
        next.retain(|_, (_, c)| !c.is_zero());
        current = next;
    }
    out
}

/// Reduces every term of a combination.
pub fn reduce_sum(x: &WebSum) -> WebSum {
    x.flat_map(|k| reduce(&k.decode().expect("web keys decode")))
}

/// No loops, closed components, crossings, or internal faces of length 2
/// or 4.
pub fn is_non_elliptic(web: &Web) -> bool {
    web.loops() == 0
        && web.is_crossing_free()
        && web.closed_components().is_empty()
        && web.internal_faces().iter().all(|f| f.half_edges.len() > 4)
}
