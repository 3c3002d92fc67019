//! Canonical forms of webs up to isotopy relative to the boundary.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

use super::{HalfEdge, Orientation, VertexKind, Web, OUTER};

/// Byte encoding of a web that is invariant under relabeling of vertices and
/// half-edges. Two webs are isotopic relative to the boundary iff their keys
/// are equal. Keys order bytewise and decode back to a web.
///
/// Layout (little-endian `u32` words): points, loops, the connected
/// component of the boundary, then the closed components in sorted order.
/// A component is its length followed by one record per half-edge in
/// breadth-first discovery order: `kind, orientation, next, twin`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WebKey(Vec<u8>);

fn kind_code(k: VertexKind) -> u32 {
    match k {
        VertexKind::Boundary => 0,
        VertexKind::Source => 1,
        VertexKind::Sink => 2,
        VertexKind::Crossing => 3,
    }
}

fn code_kind(c: u32) -> Option<VertexKind> {
    Some(match c {
        0 => VertexKind::Boundary,
        1 => VertexKind::Source,
        2 => VertexKind::Sink,
        3 => VertexKind::Crossing,
        _ => return None,
    })
}

/// Breadth-first relabeling from `start`, discovering `next` before `twin`.
fn encode_from(web: &Web, start: usize, label: &mut [u32], order: &mut Vec<usize>) -> Vec<u32> {
    order.clear();
    label[start] = 0;
    order.push(start);
    let mut queue = VecDeque::from([start]);
    while let Some(h) = queue.pop_front() {
        for x in [web.next(h), web.twin(h)] {
            if label[x] == u32::MAX {
                label[x] = order.len() as u32;
                order.push(x);
                queue.push_back(x);
            }
        }
    }
    let mut out = Vec::with_capacity(1 + 4 * order.len());
    out.push(order.len() as u32);
    for &h in order.iter() {
        let e = web.half_edge(h);
        out.push(kind_code(web.kind(e.vertex)));
        out.push(match e.orientation {
            Orientation::Out => 0,
            Orientation::In => 1,
        });
        out.push(label[e.next]);
        out.push(label[e.twin]);
    }
    for &h in order.iter() {
        label[h] = u32::MAX;
    }
    out
}

impl WebKey {
    pub fn of(web: &Web) -> Self {
        let m = web.half_edges().len();
        let mut label = vec![u32::MAX; m];
        let mut order = Vec::new();
        let mut words = vec![web.points() as u32, web.loops() as u32];
        let mut seen = vec![false; m];
        if web.points() > 0 {
            let main = encode_from(web, web.boundary_half_edge(1), &mut label, &mut order);
            for &h in &order {
                seen[h] = true;
            }
            words.extend(main);
        } else {
            words.push(0);
        }
        let mut closed = Vec::new();
        for comp in web.components() {
            if seen[comp[0]] {
                continue;
            }
            let best =
                comp.iter().map(|&s| encode_from(web, s, &mut label, &mut order)).min().expect("non-empty component");
            closed.push(best);
        }
        closed.sort();
        for c in closed {
            words.extend(c);
        }
        Self(words.iter().flat_map(|w| w.to_le_bytes()).collect())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Result<Self> {
        let key = Self(bytes);
        key.decode()?;
        Ok(key)
    }

    fn words(&self) -> Result<Vec<u32>> {
        if !self.0.len().is_multiple_of(4) {
            return Err(Error::InvalidWeb("key length is not a multiple of 4".into()));
        }
        Ok(self.0.chunks(4).map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]])).collect())
    }

    /// Rebuilds a web with this canonical form.
    pub fn decode(&self) -> Result<Web> {
        let bad = || Error::InvalidWeb("malformed web key".into());
        let w = self.words()?;
        if w.len() < 3 {
            return Err(bad());
        }
        let (points, loops) = (w[0] as usize, w[1] as usize);
        let mut pos = 2;
        let mut records: Vec<(VertexKind, Orientation, usize, usize)> = Vec::new();
        let mut main_len = None;
        while pos < w.len() {
            let len = w[pos] as usize;
            pos += 1;
            if w.len() < pos + 4 * len {
                return Err(bad());
            }
            let offset = records.len();
            for k in 0..len {
                let r = &w[pos + 4 * k..pos + 4 * k + 4];
                let kind = code_kind(r[0]).ok_or_else(bad)?;
                let orient = if r[1] == 0 { Orientation::Out } else { Orientation::In };
                let (next, twin) = (r[2] as usize, r[3] as usize);
                if next >= len || twin >= len {
                    return Err(bad());
                }
                records.push((kind, orient, offset + next, offset + twin));
            }
            pos += 4 * len;
            main_len.get_or_insert(len);
        }
        if main_len.unwrap_or(0) == 0 && points > 0 {
            return Err(bad());
        }
        // vertices are the cycles of `next`; the outer vertex comes first
        let m = records.len();
        let mut vertex = vec![usize::MAX; m];
        let mut kinds = vec![VertexKind::Boundary];
        if points > 0 {
            let mut h = 0;
            while vertex[h] == usize::MAX {
                vertex[h] = OUTER;
                h = records[h].2;
            }
        }
        for s in 0..m {
            if vertex[s] != usize::MAX {
                continue;
            }
            let v = kinds.len();
            kinds.push(records[s].0);
            let mut h = s;
            while vertex[h] == usize::MAX {
                vertex[h] = v;
                h = records[h].2;
            }
        }
        let half_edges = (0..m)
            .map(|h| HalfEdge { twin: records[h].3, vertex: vertex[h], next: records[h].2, orientation: records[h].1 })
            .collect::<Vec<_>>();
        let mut boundary = vec![0usize; points];
        if points > 0 {
            // next(b_1) = b_N, next(b_i) = b_{i-1}
            let mut h = records[0].2;
            for i in (1..points).rev() {
                boundary[i] = h;
                h = records[h].2;
            }
        }
        let web = Web::from_parts(points, half_edges, kinds, boundary, loops)?;
        if web.key() != *self {
            return Err(bad());
        }
        Ok(web)
    }
}

impl fmt::Display for WebKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for WebKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if !s.len().is_multiple_of(2) {
            return Err(Error::InvalidWeb("odd-length hex key".into()));
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16))
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map_err(|e| Error::InvalidWeb(e.to_string()))?;
        Self::from_bytes(bytes)
    }
}

impl Serialize for WebKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for WebKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
