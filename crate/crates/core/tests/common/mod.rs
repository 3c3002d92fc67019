//! Test oracles independent of the rewriting engine.
//!
//! A web is evaluated as a tensor in `(C^3)^{⊗N}`: every trivalent vertex is
//! the Levi-Civita symbol on its legs in counterclockwise order, a crossing
//! swaps its two strands, and a loop is the trace 3. Only weight-zero
//! boundary labelings (each label used `N/3` times) are kept.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use sl3_specht::web::{VertexKind, Web, WebSum};
use sl3_specht::{ForkDiagram, LinComb};

pub type Tensor = HashMap<Vec<u8>, i64>;

pub fn eps(a: u8, b: u8, c: u8) -> i64 {
    if a == b || b == c || a == c {
        return 0;
    }
    // parity of (a, b, c) as a permutation of (0, 1, 2)
    let inv = (a > b) as i64 + (a > c) as i64 + (b > c) as i64;
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All labelings of `n_points` points using each of 0, 1, 2 equally often.
pub fn weight_zero(n_points: usize) -> Vec<Vec<u8>> {
    fn rec(left: [usize; 3], cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left == [0, 0, 0] {
            out.push(cur.clone());
            return;
        }
        for l in 0..3u8 {
            if left[l as usize] > 0 {
                let mut r = left;
                r[l as usize] -= 1;
                cur.push(l);
                rec(r, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec([n_points / 3; 3], &mut Vec::new(), &mut out);
    out
}

/// Product of the Levi-Civita symbols of the arcs.
pub fn eval_fork(d: &ForkDiagram) -> Tensor {
    let mut out = Tensor::new();
    for x in weight_zero(d.points()) {
        let v: i64 = d.arcs().iter().map(|a| eps(x[a.left - 1], x[a.middle - 1], x[a.right - 1])).product();
        if v != 0 {
            out.insert(x, v);
        }
    }
    out
}

pub fn eval_fork_sum(x: &LinComb<ForkDiagram>) -> Tensor {
    let mut out = Tensor::new();
    for (d, c) in x.iter() {
        add_scaled(&mut out, &eval_fork(d), c);
    }
    out
}

fn add_scaled(acc: &mut Tensor, t: &Tensor, c: &BigInt) {
    let c: i64 = c.try_into().expect("small coefficient");
    for (k, v) in t {
        let e = acc.entry(k.clone()).or_insert(0);
        *e += c * v;
        if *e == 0 {
            acc.remove(k);
        }
    }
}

/// Contracts the web vertex by vertex, breadth-first from the boundary.
pub fn eval_web(web: &Web) -> Tensor {
    let n = web.points();
    let nv = web.vertex_count();
    // the open legs are half-edges whose vertex is already absorbed
    let mut legs: Vec<usize> = Vec::new();
    let mut table: HashMap<Vec<u8>, i64> = HashMap::from([(Vec::new(), 1i64)]);
    let mut done = vec![false; nv];
    done[0] = true;
    let mut order = Vec::new();
    let mut queue: VecDeque<usize> = web.boundary_half_edges().iter().map(|&b| web.vertex(web.twin(b))).collect();
    let mut start = 1;
    loop {
        while let Some(v) = queue.pop_front() {
            if done[v] {
                continue;
            }
            done[v] = true;
            order.push(v);
            for h in web.rotation(v) {
                let u = web.vertex(web.twin(h));
                if !done[u] {
                    queue.push_back(u);
                }
            }
        }
        while start < nv && done[start] {
            start += 1;
        }
        if start == nv {
            break;
        }
        queue.push_back(start);
    }
    let mut absorbed = vec![false; nv];
    absorbed[0] = true;
    for v in order {
        absorbed[v] = true;
        let rot = web.rotation(v);
        let local: Vec<(Vec<u8>, i64)> = match web.kind(v) {
            VertexKind::Crossing => {
                let mut out = Vec::new();
                for a in 0..3u8 {
                    for b in 0..3u8 {
                        out.push((vec![a, b, a, b], 1));
                    }
                }
                out
            }
            _ => {
                let mut out = Vec::new();
                for a in 0..3u8 {
                    for b in 0..3u8 {
                        for c in 0..3u8 {
                            let e = eps(a, b, c);
                            if e != 0 {
                                out.push((vec![a, b, c], e));
                            }
                        }
                    }
                }
                out
            }
        };
        // legs of v whose twin is already open get contracted
        let matches: Vec<(usize, usize)> = rot
            .iter()
            .enumerate()
            .filter_map(|(k, &h)| legs.iter().position(|&l| l == web.twin(h)).map(|p| (k, p)))
            .collect();
        let fresh: Vec<usize> = (0..rot.len()).filter(|k| !matches.iter().any(|m| m.0 == *k)).collect();
        let keep: Vec<usize> = (0..legs.len()).filter(|p| !matches.iter().any(|m| m.1 == *p)).collect();
        let mut next: HashMap<Vec<u8>, i64> = HashMap::new();
        for (key, val) in &table {
            for (lk, lv) in &local {
                if matches.iter().all(|&(k, p)| lk[k] == key[p]) {
                    let mut nk: Vec<u8> = keep.iter().map(|&p| key[p]).collect();
                    nk.extend(fresh.iter().map(|&k| lk[k]));
                    *next.entry(nk).or_insert(0) += val * lv;
                }
            }
        }
        next.retain(|_, v| *v != 0);
        let mut new_legs: Vec<usize> = keep.iter().map(|&p| legs[p]).collect();
        new_legs.extend(fresh.iter().map(|&k| rot[k]));
        legs = new_legs;
        table = next;
    }
    // remaining legs are the internal ends of the boundary edges
    let pos: Vec<usize> = (1..=n)
        .map(|i| legs.iter().position(|&l| l == web.twin(web.boundary_half_edge(i))).expect("boundary leg"))
        .collect();
    let scale = 3i64.pow(web.loops() as u32);
    let mut out = Tensor::new();
    for (key, val) in table {
        let x: Vec<u8> = pos.iter().map(|&p| key[p]).collect();
        let mut counts = [0usize; 3];
        for &l in &x {
            counts[l as usize] += 1;
        }
        if counts.iter().all(|&c| c * 3 == n) {
            out.insert(x, val * scale);
        }
    }
    out
}

pub fn eval_web_sum(x: &WebSum) -> Tensor {
    let mut out = Tensor::new();
    for (k, c) in x.iter() {
        add_scaled(&mut out, &eval_web(&k.decode().unwrap()), c);
    }
    out
}

pub fn scaled(t: &Tensor, c: i64) -> Tensor {
    t.iter().map(|(k, v)| (k.clone(), v * c)).filter(|(_, v)| *v != 0).collect()
}
