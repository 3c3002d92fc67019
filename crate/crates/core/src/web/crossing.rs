//! Skein resolution of crossings and the stacking action of `s_i`.

use crate::error::{Error, Result};

use super::splice::{self, NewVertex, Port, Splice};
use super::{reduce, HalfEdge, Orientation, VertexKind, Web, WebSum};

/// The two terms of the skein relation, each with coefficient `+1`:
/// crossing = identity + fork-join.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// Each incoming strand turns to the adjacent outgoing one.
    pub identity: Web,
    /// The two incoming strands meet at a sink joined to a source that
    /// emits the two outgoing strands.
    pub fork_join: Web,
}

/// Counterclockwise legs `(in1, in2, out2, out1)` of a crossing.
fn legs(web: &Web, v: usize) -> Result<[usize; 4]> {
    if web.kind(v) != VertexKind::Crossing {
        return Err(Error::NotACrossing(v));
    }
    let rot = web.rotation(v);
    let is_in = |h: usize| web.orientation(h) == Orientation::In;
    (0..4)
        .find(|&k| is_in(rot[k]) && is_in(rot[(k + 1) % 4]) && !is_in(rot[(k + 2) % 4]) && !is_in(rot[(k + 3) % 4]))
        .map(|k| [rot[k], rot[(k + 1) % 4], rot[(k + 2) % 4], rot[(k + 3) % 4]])
        .ok_or(Error::CrossingOrientation(v))
}

/// Resolves the crossing at vertex `v` by the skein relation.
pub fn resolve_crossing(web: &Web, v: usize) -> Result<Resolution> {
    let [in1, in2, out2, out1] = legs(web, v)?;

    let mut id = Splice { delete: vec![v], ..Default::default() };
    id.pair(in1, out1);
    id.pair(in2, out2);

    let mut h = Splice { delete: vec![v], ..Default::default() };
    h.new_vertices = vec![
        NewVertex { kind: VertexKind::Sink, orientations: vec![Orientation::In; 3] },
        NewVertex { kind: VertexKind::Source, orientations: vec![Orientation::Out; 3] },
    ];
    h.ports.insert(in1, Port::Attach(0, 0));
    h.ports.insert(in2, Port::Attach(0, 1));
    h.ports.insert(out2, Port::Attach(1, 0));
    h.ports.insert(out1, Port::Attach(1, 1));
    h.new_edges.push(((0, 2), (1, 2)));

    Ok(Resolution { identity: splice::apply(web, &id)?, fork_join: splice::apply(web, &h)? })
}

/// Stacks the crossing of boundary strands `i` and `i + 1` below the web.
/// The result has one more crossing vertex and the same boundary.
pub fn stack_crossing(web: &Web, i: usize) -> Result<Web> {
    let n = web.points();
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { index: i, points: n });
    }
    let (bl_b, br_b) = (web.boundary_half_edge(i), web.boundary_half_edge(i + 1));
    let (tl_t, tr_t) = (web.twin(bl_b), web.twin(br_b));
    let mut half_edges = web.half_edges().to_vec();
    let mut kinds = web.kinds().to_vec();
    let c = kinds.len();
    kinds.push(VertexKind::Crossing);
    let m = half_edges.len();
    // counterclockwise: bottom-left, bottom-right, top-right, top-left
    let (bl, br, tr, tl) = (m, m + 1, m + 2, m + 3);
    let mk = |twin, next, orientation| HalfEdge { twin, vertex: c, next, orientation };
    half_edges.push(mk(bl_b, br, Orientation::Out));
    half_edges.push(mk(br_b, tr, Orientation::Out));
    half_edges.push(mk(tr_t, tl, Orientation::In));
    half_edges.push(mk(tl_t, bl, Orientation::In));
    half_edges[bl_b].twin = bl;
    half_edges[br_b].twin = br;
    half_edges[tr_t].twin = tr;
    half_edges[tl_t].twin = tl;
    Web::from_parts(n, half_edges, kinds, web.boundary_half_edges().to_vec(), web.loops())
}

/// `web . s_i`, fully reduced.
pub fn act_web_term(web: &Web, i: usize) -> Result<WebSum> {
    Ok(reduce(&stack_crossing(web, i)?))
}

/// `x . s_i` for a combination of webs, fully reduced.
pub fn act_web(x: &WebSum, i: usize) -> Result<WebSum> {
    x.try_flat_map(|k| act_web_term(&k.decode()?, i))
}
