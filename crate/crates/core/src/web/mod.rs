//! Planar sl3-webs as oriented combinatorial maps.
//!
//! The boundary line together with the half-plane below it is collapsed to a
//! single vertex `0` of kind [`VertexKind::Boundary`]. Its half-edges are the
//! boundary points; in counterclockwise order they read `N, N-1, ..., 1`, so
//! `next(b_i) = b_{i-1}`. Every other vertex is a trivalent source or sink,
//! or a 4-valent crossing (two strands, no over/under data). Closed loops
//! without vertices are kept as a counter.
//!
//! All edges at the boundary flow out of the web into the boundary, so the
//! boundary half-edges are [`Orientation::In`] at vertex `0`.

mod builder;
mod canonical;
mod crossing;
mod drawing;
mod reduce;
mod render;
mod serial;
mod splice;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lincomb::LinComb;

pub use builder::WebBuilder;
pub use canonical::WebKey;
pub use crossing::{act_web, act_web_term, resolve_crossing, stack_crossing, Resolution};
pub use drawing::{crossing_diagram_of_fork, depth_word, tymoczko_web, web_of_fork};
pub use reduce::{is_non_elliptic, reduce, reduce_sum, reduce_with, Schedule};
pub use render::{to_svg, to_tikz};
pub use serial::{web_sum_from_json, web_sum_to_json};

/// Formal integer combination of webs keyed by canonical form.
pub type WebSum = LinComb<WebKey>;

/// A web that may still contain crossing vertices.
pub type CrossingDiagram = Web;

pub(crate) const OUTER: usize = 0;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// The edge leaves the vertex.
    Out,
    /// The edge enters the vertex.
    In,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Out => Orientation::In,
            Orientation::In => Orientation::Out,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Boundary,
    Source,
    Sink,
    Crossing,
}

impl VertexKind {
    pub fn is_trivalent(self) -> bool {
        matches!(self, VertexKind::Source | VertexKind::Sink)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HalfEdge {
    pub twin: usize,
    pub vertex: usize,
    /// Counterclockwise successor around `vertex`.
    pub next: usize,
    pub orientation: Orientation,
}

#[derive(Clone, Debug)]
pub struct Web {
    points: usize,
    half_edges: Vec<HalfEdge>,
    kinds: Vec<VertexKind>,
    // one half-edge per vertex; unused for an isolated outer vertex
    first: Vec<usize>,
    // boundary[i] is the half-edge at vertex 0 for position i + 1
    boundary: Vec<usize>,
    loops: usize,
}

/// An internal face: its half-edges in traversal order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    pub half_edges: Vec<usize>,
}

impl Web {
    /// The web with `points` boundary points and no edges; only valid for
    /// `points == 0`, i.e. the empty closed web.
    pub fn empty() -> Self {
        WebBuilder::new(0).build().expect("empty web")
    }

    /// Two trivalent vertices joined by three edges, evaluating to `-6`.
    pub fn theta() -> Self {
        let mut b = WebBuilder::new(0);
        let s = b.source();
        let t = b.sink();
        for k in 0..3 {
            b.connect(s[k], t[2 - k]).unwrap();
        }
        b.build().unwrap()
    }

    /// `k` closed loops and nothing else.
    pub fn loops_only(k: usize) -> Self {
        let mut b = WebBuilder::new(0);
        b.add_loops(k);
        b.build().unwrap()
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    pub fn half_edge(&self, h: usize) -> &HalfEdge {
        &self.half_edges[h]
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.kinds[v]
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    /// Half-edge at the outer vertex for boundary position `i` (1-based).
    pub fn boundary_half_edge(&self, i: usize) -> usize {
        self.boundary[i - 1]
    }

    pub fn boundary_half_edges(&self) -> &[usize] {
        &self.boundary
    }

    pub fn twin(&self, h: usize) -> usize {
        self.half_edges[h].twin
    }

    pub fn next(&self, h: usize) -> usize {
        self.half_edges[h].next
    }

    pub fn vertex(&self, h: usize) -> usize {
        self.half_edges[h].vertex
    }

    pub fn orientation(&self, h: usize) -> Orientation {
        self.half_edges[h].orientation
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    /// Vertices other than the outer one.
    pub fn internal_vertex_count(&self) -> usize {
        self.kinds.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    /// Internal vertices + edges + loops; every local relation lowers it.
    pub fn size(&self) -> usize {
        self.internal_vertex_count() + self.edge_count() + self.loops
    }

    pub fn crossings(&self) -> Vec<usize> {
        (0..self.kinds.len()).filter(|&v| self.kinds[v] == VertexKind::Crossing).collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.kinds.iter().filter(|&&k| k == VertexKind::Crossing).count()
    }

    /// Half-edges around `v` in counterclockwise order.
    pub fn rotation(&self, v: usize) -> Vec<usize> {
        if v == OUTER {
            return self.boundary.iter().rev().copied().collect();
        }
        let start = self.first[v];
        let mut out = vec![start];
        let mut h = self.next(start);
        while h != start {
            out.push(h);
            h = self.next(h);
        }
        out
    }

    /// The face permutation `h -> next(twin(h))`.
    pub fn face_step(&self, h: usize) -> usize {
        self.next(self.twin(h))
    }

    /// All faces as orbits of [`Web::face_step`], ordered by smallest
    /// half-edge, together with the face index of every half-edge.
    pub fn faces(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let m = self.half_edges.len();
        let mut face_of = vec![usize::MAX; m];
        let mut faces = Vec::new();
        for h in 0..m {
            if face_of[h] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut orbit = Vec::new();
            let mut x = h;
            while face_of[x] == usize::MAX {
                face_of[x] = id;
                orbit.push(x);
                x = self.face_step(x);
            }
            faces.push(orbit);
        }
        (faces, face_of)
    }

    /// Faces not touching the outer vertex.
    pub fn internal_faces(&self) -> Vec<Face> {
        self.faces()
            .0
            .into_iter()
            .filter(|f| f.iter().all(|&h| self.vertex(h) != OUTER))
            .map(|half_edges| Face { half_edges })
            .collect()
    }

    /// Connected components (by vertex), the outer vertex's component first
    /// when it has any edges. Each component lists its half-edges.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let m = self.half_edges.len();
        let mut comp = vec![usize::MAX; m];
        let mut out = Vec::new();
        let starts = self.boundary.iter().copied().chain(0..m);
        for s in starts {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = Vec::new();
            let mut queue = VecDeque::from([s]);
            comp[s] = id;
            while let Some(h) = queue.pop_front() {
                members.push(h);
                for x in [self.next(h), self.twin(h)] {
                    if comp[x] == usize::MAX {
                        comp[x] = id;
                        queue.push_back(x);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    /// Components that do not contain the outer vertex.
    pub fn closed_components(&self) -> Vec<Vec<usize>> {
        self.components().into_iter().filter(|c| c.iter().all(|&h| self.vertex(h) != OUTER)).collect()
    }

    pub fn is_crossing_free(&self) -> bool {
        self.crossing_count() == 0
    }

    /// Checks every structural invariant: degrees, orientations at each
    /// vertex kind, the twin involution, rotation consistency and planarity
    /// (Euler characteristic 2 on every component).
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidWeb(msg));
        let m = self.half_edges.len();
        if !m.is_multiple_of(2) {
            return bad("odd number of half-edges".into());
        }
        if self.kinds.first() != Some(&VertexKind::Boundary) {
            return bad("vertex 0 must be the boundary".into());
        }
        if self.kinds.iter().skip(1).any(|&k| k == VertexKind::Boundary) {
            return bad("only vertex 0 may be a boundary vertex".into());
        }
        if self.boundary.len() != self.points {
            return bad("boundary length differs from point count".into());
        }
        for (h, e) in self.half_edges.iter().enumerate() {
            if e.twin >= m || e.next >= m || e.vertex >= self.kinds.len() {
                return bad(format!("half-edge {h} has an index out of range"));
            }
            let t = &self.half_edges[e.twin];
            if e.twin == h || t.twin != h {
                return bad(format!("twin of {h} is not an involution"));
            }
            if t.orientation == e.orientation {
                return bad(format!("edge at {h} has equal orientations at both ends"));
            }
            if self.half_edges[e.next].vertex != e.vertex {
                return bad(format!("next of {h} leaves its vertex"));
            }
        }
        for (i, &b) in self.boundary.iter().enumerate() {
            let e = &self.half_edges[b];
            if e.vertex != OUTER || e.orientation != Orientation::In {
                return bad(format!("boundary point {} is not an inward half-edge at vertex 0", i + 1));
            }
            if i > 0 && e.next != self.boundary[i - 1] {
                return bad("boundary rotation is not N, ..., 1".into());
            }
        }
        if self.points > 0 && self.half_edges[self.boundary[0]].next != self.boundary[self.points - 1] {
            return bad("boundary rotation does not close up".into());
        }
        let mut degree = vec![0usize; self.kinds.len()];
        for e in &self.half_edges {
            degree[e.vertex] += 1;
        }
        if degree[OUTER] != self.points {
            return bad("outer vertex carries non-boundary half-edges".into());
        }
        for v in 1..self.kinds.len() {
            let rot = self.rotation(v);
            if rot.len() != degree[v] {
                return bad(format!("rotation at vertex {v} misses half-edges"));
            }
            let orient: Vec<Orientation> = rot.iter().map(|&h| self.orientation(h)).collect();
            let ok = match self.kinds[v] {
                VertexKind::Source => orient == [Orientation::Out; 3],
                VertexKind::Sink => orient == [Orientation::In; 3],
                VertexKind::Crossing => orient.len() == 4 && (0..4).all(|k| orient[k] != orient[(k + 2) % 4]),
                VertexKind::Boundary => false,
            };
            if !ok {
                return bad(format!("vertex {v} ({:?}) has orientations {orient:?}", self.kinds[v]));
            }
        }
        let (faces, face_of) = self.faces();
        for comp in self.components() {
            let mut verts: Vec<usize> = comp.iter().map(|&h| self.vertex(h)).collect();
            verts.sort();
            verts.dedup();
            let mut fs: Vec<usize> = comp.iter().map(|&h| face_of[h]).collect();
            fs.sort();
            fs.dedup();
            let chi = verts.len() as isize - (comp.len() / 2) as isize + fs.len() as isize;
            if chi != 2 {
                return bad(format!("component is not planar (Euler characteristic {chi})"));
            }
        }
        debug_assert_eq!(faces.iter().map(Vec::len).sum::<usize>(), m);
        Ok(())
    }

    /// Canonical form, see [`WebKey`].
    pub fn key(&self) -> WebKey {
        WebKey::of(self)
    }

    /// Webs are equal when they are isotopic relative to the boundary.
    pub fn isotopic(&self, other: &Web) -> bool {
        self.key() == other.key()
    }

    pub(crate) fn from_parts(
        points: usize,
        half_edges: Vec<HalfEdge>,
        kinds: Vec<VertexKind>,
        boundary: Vec<usize>,
        loops: usize,
    ) -> Result<Self> {
        let mut first = vec![usize::MAX; kinds.len()];
        for (h, e) in half_edges.iter().enumerate().rev() {
            if e.vertex < first.len() {
                first[e.vertex] = h;
            }
        }
        if first.iter().skip(1).any(|&f| f == usize::MAX) {
            return Err(Error::InvalidWeb("vertex without half-edges".into()));
        }
        let web = Self { points, half_edges, kinds, first, boundary, loops };
        web.validate()?;
        Ok(web)
    }
}

impl PartialEq for Web {
    fn eq(&self, other: &Self) -> bool {
        self.isotopic(other)
    }
}

impl Eq for Web {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_is_valid() {
        let t = Web::theta();
        assert_eq!(t.internal_vertex_count(), 2);
        assert_eq!(t.edge_count(), 3);
        assert_eq!(t.faces().0.len(), 3);
        assert_eq!(t.closed_components().len(), 1);
    }

    #[test]
    fn fork_faces() {
        let mut b = WebBuilder::new(3);
        let s = b.source();
        for k in 0..3 {
            b.connect(s[k], b.boundary(k + 1)).unwrap();
        }
        let w = b.build().unwrap();
        assert!(w.internal_faces().is_empty());
        assert_eq!(w.faces().0.len(), 3);
    }

    #[test]
    fn rejects_mixed_source() {
        let mut b = WebBuilder::new(0);
        let s = b.source();
        let t = b.source();
        assert!(b.connect(s[0], t[0]).is_err());
    }
}
