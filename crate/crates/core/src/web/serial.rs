use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::json;

use super::{HalfEdge, VertexKind, Web, WebSum};

#[derive(Serialize, Deserialize)]
struct WebJson {
    points: usize,
    loops: usize,
    vertices: Vec<VertexKind>,
    half_edges: Vec<HalfEdge>,
    boundary: Vec<usize>,
}

impl Serialize for Web {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WebJson {
            points: self.points,
            loops: self.loops,
            vertices: self.kinds.clone(),
            half_edges: self.half_edges.clone(),
            boundary: self.boundary.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Web {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = WebJson::deserialize(d)?;
        Web::from_parts(j.points, j.half_edges, j.vertices, j.boundary, j.loops).map_err(serde::de::Error::custom)
    }
}

/// `{"terms": [{"coefficient": c, "web": {...}}]}`.
pub fn web_sum_to_json(x: &WebSum) -> serde_json::Value {
    let terms = x
        .iter()
        .map(|(k, c)| {
            serde_json::json!({
                "coefficient": json::int(c),
                "web": k.decode().expect("web keys decode"),
            })
        })
        .collect::<Vec<_>>();
    serde_json::json!({ "terms": terms })
}

pub fn web_sum_from_json(v: &serde_json::Value) -> crate::Result<WebSum> {
    let bad = || crate::Error::Json("expected {\"terms\": [{\"coefficient\", \"web\"}]}".into());
    let terms = v.get("terms").and_then(|t| t.as_array()).ok_or_else(bad)?;
    let mut out = WebSum::zero();
    for t in terms {
        let c = json::parse_int(t.get("coefficient").ok_or_else(bad)?)?;
        let w: Web = serde_json::from_value(t.get("web").ok_or_else(bad)?.clone())?;
        out.add_term(w.key(), c);
    }
    Ok(out)
}
