//! Local surgery: delete a set of internal vertices and reconnect what was
//! attached to them.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{Orientation, VertexKind, Web, WebBuilder, OUTER};

/// What happens to a half-edge at a deleted vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Port {
    /// The half-edge disappears; its edge must lie inside the deleted region.
    Vanish,
    /// The strand arriving at this half-edge continues out through the other.
    Pair(usize),
    /// The strand continues into slot `.1` of new vertex `.0`.
    Attach(usize, usize),
}

#[derive(Clone, Debug)]
pub(crate) struct NewVertex {
    pub kind: VertexKind,
    pub orientations: Vec<Orientation>,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Splice {
    pub delete: Vec<usize>,
    pub ports: HashMap<usize, Port>,
    pub new_vertices: Vec<NewVertex>,
    pub new_edges: Vec<((usize, usize), (usize, usize))>,
}

impl Splice {
    pub fn pair(&mut self, a: usize, b: usize) {
        self.ports.insert(a, Port::Pair(b));
        self.ports.insert(b, Port::Pair(a));
    }

    pub fn vanish(&mut self, h: usize) {
        self.ports.insert(h, Port::Vanish);
    }
}

enum End {
    Old(usize),
    New(usize, usize),
}

/// Applies a splice. Surviving vertices keep their relative order and their
/// rotations; new vertices are appended. Strands that close up entirely
/// inside the deleted region become loops.
pub(crate) fn apply(web: &Web, splice: &Splice) -> Result<Web> {
    let bad = |msg: &str| Error::InvalidWeb(format!("splice: {msg}"));
    let mut deleted = vec![false; web.vertex_count()];
    for &v in &splice.delete {
        if v == OUTER {
            return Err(bad("the outer vertex cannot be deleted"));
        }
        deleted[v] = true;
    }
    let is_deleted = |h: usize| deleted[web.vertex(h)];

    let mut b = WebBuilder::new(web.points());
    b.add_loops(web.loops());
    let mut new_id = vec![usize::MAX; web.half_edges().len()];
    for (i, &h) in web.boundary_half_edges().iter().enumerate() {
        new_id[h] = b.boundary(i + 1);
    }
    for v in 1..web.vertex_count() {
        if deleted[v] {
            continue;
        }
        let rot = web.rotation(v);
        let orient: Vec<Orientation> = rot.iter().map(|&h| web.orientation(h)).collect();
        let ids = b.add_vertex(web.kind(v), &orient);
        for (h, id) in rot.into_iter().zip(ids) {
            new_id[h] = id;
        }
    }
    let fresh: Vec<Vec<usize>> = splice.new_vertices.iter().map(|nv| b.add_vertex(nv.kind, &nv.orientations)).collect();

    let mut visited = vec![false; web.half_edges().len()];
    let limit = web.half_edges().len() + 1;
    // follow the strand leaving through half-edge `from` (at a deleted vertex)
    let walk = |from: usize, visited: &mut Vec<bool>| -> Result<End> {
        let mut t = web.twin(from);
        for _ in 0..limit {
            if !is_deleted(t) {
                return Ok(End::Old(t));
            }
            visited[t] = true;
            match splice.ports.get(&t) {
                Some(Port::Attach(v, k)) => return Ok(End::New(*v, *k)),
                Some(Port::Pair(q)) => {
                    visited[*q] = true;
                    t = web.twin(*q);
                }
                Some(Port::Vanish) | None => return Err(bad("strand runs into a vanishing half-edge")),
            }
        }
        Err(bad("strand does not terminate"))
    };

    let resolve = |end: End| match end {
        End::Old(h) => new_id[h],
        End::New(v, k) => fresh[v][k],
    };

    for h in 0..web.half_edges().len() {
        if is_deleted(h) || !is_deleted(web.twin(h)) {
            continue;
        }
        // h survives, its partner was deleted: walk from the partner side
        let end = {
            let t = web.twin(h);
            visited[t] = true;
            match splice.ports.get(&t) {
                Some(Port::Attach(v, k)) => End::New(*v, *k),
                Some(Port::Pair(q)) => {
                    visited[*q] = true;
                    walk(*q, &mut visited)?
                }
                _ => return Err(bad("boundary of the region has no port")),
            }
        };
        let (a, c) = (new_id[h], resolve(end));
        if !b.is_connected(a) {
            b.connect(a, c)?;
        }
    }
    for (&p, port) in &splice.ports {
        if let Port::Attach(v, k) = *port {
            visited[p] = true;
            let end = walk(p, &mut visited)?;
            let (a, c) = (fresh[v][k], resolve(end));
            if !b.is_connected(a) {
                b.connect(a, c)?;
            }
        }
    }
    for &((v1, k1), (v2, k2)) in &splice.new_edges {
        b.connect(fresh[v1][k1], fresh[v2][k2])?;
    }
    // surviving edges untouched by the splice
    for h in 0..web.half_edges().len() {
        let t = web.twin(h);
        if !is_deleted(h) && !is_deleted(t) && h < t {
            b.connect(new_id[h], new_id[t])?;
        }
    }
    // whatever is left of the paired half-edges closes up into loops
    let mut ports: Vec<(usize, Port)> = splice.ports.iter().map(|(&h, &p)| (h, p)).collect();
    ports.sort_by_key(|&(h, _)| h);
    for (h, port) in ports {
        let Port::Pair(_) = port else { continue };
        if visited[h] {
            continue;
        }
        let mut x = h;
        loop {
            visited[x] = true;
            let Some(&Port::Pair(q)) = splice.ports.get(&x) else {
                return Err(bad("closed strand meets a non-pair port"));
            };
            visited[q] = true;
            x = web.twin(q);
            if x == h {
                break;
            }
            if visited[x] || !is_deleted(x) {
                return Err(bad("inconsistent closed strand"));
            }
        }
        b.add_loops(1);
    }
    b.build()
}
