use crate::error::{Error, Result};

use super::{HalfEdge, Orientation, VertexKind, Web, OUTER};

/// Incremental construction of a [`Web`] from vertices with ordered slots.
///
/// ```
/// use sl3_specht::web::WebBuilder;
///
/// // a single fork on three boundary points
/// let mut b = WebBuilder::new(3);
/// let s = b.source();
/// for k in 0..3 {
///     b.connect(s[k], b.boundary(k + 1)).unwrap();
/// }
/// let fork = b.build().unwrap();
/// assert_eq!(fork.internal_vertex_count(), 1);
/// ```
#[derive(Clone, Debug)]
pub struct WebBuilder {
    points: usize,
    kinds: Vec<VertexKind>,
    rotations: Vec<Vec<usize>>,
    vertex: Vec<usize>,
    orientation: Vec<Orientation>,
    twin: Vec<Option<usize>>,
    loops: usize,
}

impl WebBuilder {
    /// Starts with the outer vertex carrying `points` boundary half-edges;
    /// the half-edge of position `i` has id `i - 1`.
    pub fn new(points: usize) -> Self {
        Self {
            points,
            kinds: vec![VertexKind::Boundary],
            rotations: vec![(0..points).rev().collect()],
            vertex: vec![OUTER; points],
            orientation: vec![Orientation::In; points],
            twin: vec![None; points],
            loops: 0,
        }
    }

    pub fn boundary(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.points, "boundary position {i} out of range");
        i - 1
    }

    /// Adds a vertex whose half-edges, in counterclockwise order, carry the
    /// given orientations. Returns their ids in the same order.
    pub fn add_vertex(&mut self, kind: VertexKind, orientations: &[Orientation]) -> Vec<usize> {
        let v = self.kinds.len();
        self.kinds.push(kind);
        let ids: Vec<usize> = (self.vertex.len()..self.vertex.len() + orientations.len()).collect();
        for &o in orientations {
            self.vertex.push(v);
            self.orientation.push(o);
            self.twin.push(None);
        }
        self.rotations.push(ids.clone());
        ids
    }

    pub fn source(&mut self) -> [usize; 3] {
        let ids = self.add_vertex(VertexKind::Source, &[Orientation::Out; 3]);
        [ids[0], ids[1], ids[2]]
    }

    pub fn sink(&mut self) -> [usize; 3] {
        let ids = self.add_vertex(VertexKind::Sink, &[Orientation::In; 3]);
        [ids[0], ids[1], ids[2]]
    }

    pub fn crossing(&mut self, orientations: [Orientation; 4]) -> [usize; 4] {
        let ids = self.add_vertex(VertexKind::Crossing, &orientations);
        [ids[0], ids[1], ids[2], ids[3]]
    }

    pub fn orientation(&self, h: usize) -> Orientation {
        self.orientation[h]
    }

    pub fn is_connected(&self, h: usize) -> bool {
        self.twin[h].is_some()
    }

    /// Joins two half-edges into an edge.
    pub fn connect(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b || self.twin[a].is_some() || self.twin[b].is_some() {
            return Err(Error::InvalidWeb(format!("cannot connect half-edges {a} and {b}")));
        }
        if self.orientation[a] == self.orientation[b] {
            return Err(Error::InvalidWeb(format!("half-edges {a} and {b} have the same orientation")));
        }
        self.twin[a] = Some(b);
        self.twin[b] = Some(a);
        Ok(())
    }

    pub fn add_loops(&mut self, k: usize) {
        self.loops += k;
    }

    pub fn build(self) -> Result<Web> {
        let mut next = vec![usize::MAX; self.vertex.len()];
        for rot in &self.rotations {
            for (k, &h) in rot.iter().enumerate() {
                next[h] = rot[(k + 1) % rot.len()];
            }
        }
        let half_edges = (0..self.vertex.len())
            .map(|h| {
                let twin = self.twin[h].ok_or_else(|| Error::InvalidWeb(format!("half-edge {h} is not connected")))?;
                Ok(HalfEdge { twin, vertex: self.vertex[h], next: next[h], orientation: self.orientation[h] })
            })
            .collect::<Result<Vec<_>>>()?;
        Web::from_parts(self.points, half_edges, self.kinds, (0..self.points).collect(), self.loops)
    }
}
