//! The rectangular drawing of a fork diagram, the webs it produces, and the
//! depth word of a web.

use std::collections::VecDeque;

use crate::diagram::ForkDiagram;
use crate::error::{Error, Result};
use crate::tableau::Tableau;
use crate::word::{BoundaryWord, Letter};

use super::{is_non_elliptic, reduce, resolve_crossing, Orientation, Web, WebBuilder, WebSum};

// Legs of a crossing in counterclockwise order.
const E: usize = 0;
const N: usize = 1;
const W: usize = 2;
const S: usize = 3;

#[derive(Clone, Copy, Debug)]
enum End {
    Boundary(usize),
    Fork(usize, usize),
    Cross(usize, usize),
}

/// A chord drawn as a rectangle: up at `x1`, across at `height`, down at
/// `x2`. Coordinates are scaled by 4 so that the legs of a fork at `b` sit
/// at `4b - 1` and `4b + 1`.
struct Chord {
    x1: i64,
    x2: i64,
    height: i64,
    start: End,
    end: End,
    // flow runs from x2 to x1
    leftward: bool,
    // (segment, key, crossing id)
    marks: Vec<((u8, i64), usize)>,
}

/// Segment of a chord through `(x, y)` with its position key and the
/// legs before and after along the chord.
fn locate(c: &Chord, x: i64, y: i64) -> ((u8, i64), usize, usize) {
    if x == c.x1 {
        ((0, y), S, N)
    } else if x == c.x2 {
        ((2, -y), N, S)
    } else {
        ((1, x), W, E)
    }
}

/// The fork diagram drawn with rectangular chords: each arc `(a, b, c)` is a
/// source just above `b` with its middle leg going straight down, its left
/// chord ending at `a` and its right chord at `c`. Taller chords span
/// more, so chords cross exactly when their endpoints interleave, and then
/// exactly once. Every crossing becomes a crossing vertex, numbered from
/// left to right.
pub fn crossing_diagram_of_fork(d: &ForkDiagram) -> Web {
    let np = d.points() as i64;
    let k = 4 * np + 8;
    let mut chords = Vec::new();
    for (j, a) in d.arcs().iter().enumerate() {
        let (a4, b4, c4) = (4 * a.left as i64, 4 * a.middle as i64, 4 * a.right as i64);
        for (x1, x2, start, end, leftward) in [
            (a4, b4 - 1, End::Boundary(a.left), End::Fork(j, 0), true),
            (b4 + 1, c4, End::Fork(j, 2), End::Boundary(a.right), false),
        ] {
            chords.push(Chord { x1, x2, height: (x2 - x1) * k + x1, start, end, leftward, marks: Vec::new() });
        }
    }
    let mut points: Vec<(i64, i64)> = Vec::new();
    let mut on: Vec<[usize; 2]> = Vec::new();
    for p in 0..chords.len() {
        for q in 0..chords.len() {
            let (cp, cq) = (&chords[p], &chords[q]);
            if !(cp.x1 < cq.x1 && cq.x1 < cp.x2 && cp.x2 < cq.x2) {
                continue;
            }
            points.push(if cp.height < cq.height { (cq.x1, cp.height) } else { (cp.x2, cq.height) });
            on.push([p, q]);
        }
    }
    // number crossings left to right, bottom to top
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_key(|&i| points[i]);
    let mut rank = vec![0; points.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    for (i, &(x, y)) in points.iter().enumerate() {
        for &c in &on[i] {
            let (key, _, _) = locate(&chords[c], x, y);
            chords[c].marks.push((key, rank[i]));
        }
    }
    let cross_point: Vec<(i64, i64)> = order.iter().map(|&i| points[i]).collect();

    // orientation of each crossing leg, from the flow along its chord
    let mut cross_orient = vec![[Orientation::In; 4]; cross_point.len()];
    let mut edges: Vec<(End, End, bool)> = Vec::new();
    for c in chords.iter_mut() {
        c.marks.sort();
        let mut path = vec![c.start];
        for &(_, id) in &c.marks {
            let (x, y) = cross_point[id];
            let (_, before, after) = locate(c, x, y);
            path.push(End::Cross(id, before));
            path.push(End::Cross(id, after));
        }
        path.push(c.end);
        for pair in path.chunks(2) {
            // the later end emits the flow on a leftward chord
            let (a, b) = (pair[0], pair[1]);
            let (a_out, b_out) = if c.leftward { (false, true) } else { (true, false) };
            for (e, out) in [(a, a_out), (b, b_out)] {
                if let End::Cross(id, leg) = e {
                    cross_orient[id][leg] = if out { Orientation::Out } else { Orientation::In };
                }
            }
            edges.push((a, b, c.leftward));
        }
    }

    let mut builder = WebBuilder::new(d.points());
    let forks: Vec<[usize; 3]> = d.arcs().iter().map(|_| builder.source()).collect();
    let crosses: Vec<[usize; 4]> = cross_orient.iter().map(|&o| builder.crossing(o)).collect();
    let id = |b: &WebBuilder, e: End| match e {
        End::Boundary(p) => b.boundary(p),
        End::Fork(j, s) => forks[j][s],
        End::Cross(i, leg) => crosses[i][leg],
    };
    for (j, a) in d.arcs().iter().enumerate() {
        let bb = builder.boundary(a.middle);
        builder.connect(forks[j][1], bb).expect("middle leg");
    }
    for (a, b, _) in edges {
        let (ha, hb) = (id(&builder, a), id(&builder, b));
        builder.connect(ha, hb).expect("chord segment");
    }
    builder.build().expect("drawing of a fork diagram is a valid web")
}

/// The web expansion of a fork diagram: its drawing, fully reduced.
pub fn web_of_fork(d: &ForkDiagram) -> WebSum {
    reduce(&crossing_diagram_of_fork(d))
}

/// The non-elliptic web of a standard tableau: the drawing of its
/// M-diagram with every crossing replaced by the fork-join term.
pub fn tymoczko_web(t: &Tableau) -> Result<Web> {
    let m = ForkDiagram::psi(t)?;
    let mut w = crossing_diagram_of_fork(&m);
    while let Some(&v) = w.crossings().first() {
        w = resolve_crossing(&w, v)?.fork_join;
    }
    if !is_non_elliptic(&w) {
        return Err(Error::InvalidWeb(format!("web of {} is not non-elliptic", t.to_compact())));
    }
    Ok(w)
}

/// Reads the boundary word off a crossing-free web: `f_0` is the outer
/// face, `f_i` the face between points `i` and `i + 1`, and letter `i`
/// records whether the distance from the outer face (in the dual graph)
/// goes up (`+`), stays (`0`) or goes down (`-`) from `f_{i-1}` to `f_i`.
pub fn depth_word(web: &Web) -> Result<BoundaryWord> {
    if !web.is_crossing_free() {
        return Err(Error::HasCrossings);
    }
    let n = web.points();
    if n == 0 {
        return Ok(BoundaryWord::new(Vec::new()));
    }
    let (faces, face_of) = web.faces();
    let mut adj = vec![Vec::new(); faces.len()];
    for h in 0..web.half_edges().len() {
        adj[face_of[h]].push(face_of[web.twin(h)]);
    }
    let outer = face_of[web.boundary_half_edge(n)];
    let mut depth = vec![usize::MAX; faces.len()];
    depth[outer] = 0;
    let mut queue = VecDeque::from([outer]);
    while let Some(f) = queue.pop_front() {
        for &g in &adj[f] {
            if depth[g] == usize::MAX {
                depth[g] = depth[f] + 1;
                queue.push_back(g);
            }
        }
    }
    let f = |i: usize| if i == 0 || i == n { outer } else { face_of[web.boundary_half_edge(i)] };
    let letters = (1..=n)
        .map(|i| match depth[f(i)] as i64 - depth[f(i - 1)] as i64 {
            1 => Ok(Letter::Plus),
            0 => Ok(Letter::Zero),
            -1 => Ok(Letter::Minus),
            _ => Err(Error::InvalidWeb("adjacent boundary faces differ in depth by more than 1".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundaryWord::new(letters))
}
