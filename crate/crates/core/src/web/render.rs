//! SVG and TikZ output. Boundary points sit on a horizontal line; internal
//! vertices are layered by graph distance from the boundary and spread
//! horizontally by averaging their neighbours.

use std::collections::VecDeque;
use std::fmt::Write;

use super::{Orientation, VertexKind, Web, OUTER};

struct Layout {
    // position of each half-edge's endpoint at its own vertex
    at: Vec<(f64, f64)>,
    vertex: Vec<(f64, f64)>,
    width: f64,
    height: f64,
}

fn layout(web: &Web) -> Layout {
    let nv = web.vertex_count();
    let mut layer = vec![usize::MAX; nv];
    let mut queue = VecDeque::new();
    for &b in web.boundary_half_edges() {
        let v = web.vertex(web.twin(b));
        if layer[v] == usize::MAX {
            layer[v] = 1;
            queue.push_back(v);
        }
    }
    let mut adj = vec![Vec::new(); nv];
    for e in web.half_edges() {
        adj[e.vertex].push(web.vertex(e.twin));
    }
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if u != OUTER && layer[u] == usize::MAX {
                layer[u] = layer[v] + 1;
                queue.push_back(u);
            }
        }
    }
    let max_layer = layer.iter().filter(|&&l| l != usize::MAX).max().copied().unwrap_or(0);
    let mut x = vec![0.0f64; nv];
    for (v, l) in layer.iter_mut().enumerate().skip(1) {
        if *l == usize::MAX {
            // closed components float above the rest
            *l = max_layer + 1;
            x[v] = v as f64;
        }
    }
    for _ in 0..200 {
        let mut nx = x.clone();
        for v in 1..nv {
            let mut sum = 0.0;
            let mut cnt = 0.0;
            for h in web.rotation(v) {
                let t = web.twin(h);
                sum += if web.vertex(t) == OUTER {
                    (web.boundary_half_edges().iter().position(|&b| b == t).unwrap() + 1) as f64
                } else {
                    x[web.vertex(t)]
                };
                cnt += 1.0;
            }
            nx[v] = 0.5 * x[v] + 0.5 * sum / cnt;
        }
        x = nx;
    }
    let step = 1.0;
    let vertex: Vec<(f64, f64)> = (0..nv).map(|v| (x[v], layer[v] as f64 * step)).collect();
    let mut at = vec![(0.0, 0.0); web.half_edges().len()];
    for (h, e) in web.half_edges().iter().enumerate() {
        at[h] = if e.vertex == OUTER {
            let i = web.boundary_half_edges().iter().position(|&b| b == h).unwrap() + 1;
            (i as f64, 0.0)
        } else {
            vertex[e.vertex]
        };
    }
    let width = (web.points() as f64 + 1.0).max(x.iter().cloned().fold(0.0, f64::max) + 1.0);
    let height = (max_layer as f64 + 2.0) * step;
    Layout { at, vertex, width, height }
}

/// Standalone SVG picture.
pub fn to_svg(web: &Web) -> String {
    let l = layout(web);
    let s = 60.0;
    let (w, h) = (l.width * s, l.height * s + 40.0);
    let px = |(x, y): (f64, f64)| (x * s, h - 30.0 - y * s);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    out.push_str(concat!(
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse">"#,
        r#"<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>"#,
        "\n"
    ));
    let (x0, y0) = px((0.5, 0.0));
    let (x1, _) = px((web.points() as f64 + 0.5, 0.0));
    let _ = writeln!(out, r#"<line x1="{x0:.1}" y1="{y0:.1}" x2="{x1:.1}" y2="{y0:.1}" stroke="gray"/>"#);
    for (hid, e) in web.half_edges().iter().enumerate() {
        if e.orientation != Orientation::Out {
            continue;
        }
        let (a, b) = (px(l.at[hid]), px(l.at[e.twin]));
        let mid = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
        let _ = writeln!(
            out,
            r#"<path d="M {:.1} {:.1} L {:.1} {:.1} L {:.1} {:.1}" fill="none" stroke="black" marker-mid="url(#arrow)"/>"#,
            a.0, a.1, mid.0, mid.1, b.0, b.1
        );
    }
    for v in 1..web.vertex_count() {
        let (x, y) = px(l.vertex[v]);
        let fill = match web.kind(v) {
            VertexKind::Source => "black",
            VertexKind::Sink => "white",
            _ => "red",
        };
        let _ = writeln!(out, r#"<circle cx="{x:.1}" cy="{y:.1}" r="4" fill="{fill}" stroke="black"/>"#);
    }
    for i in 1..=web.points() {
        let (x, y) = px((i as f64, 0.0));
        let _ = writeln!(out, r#"<text x="{x:.1}" y="{:.1}" text-anchor="middle" font-size="14">{i}</text>"#, y + 20.0);
    }
    if web.loops() > 0 {
        let _ = writeln!(out, r#"<text x="10" y="20" font-size="14">loops: {}</text>"#, web.loops());
    }
    out.push_str("</svg>\n");
    out
}

/// A `tikzpicture` environment.
pub fn to_tikz(web: &Web) -> String {
    let l = layout(web);
    let mut out = String::from("\\begin{tikzpicture}[decoration={markings,mark=at position 0.5 with {\\arrow{>}}}]\n");
    let _ = writeln!(out, "  \\draw[gray] (0.5,0) -- ({:.1},0);", web.points() as f64 + 0.5);
    for (hid, e) in web.half_edges().iter().enumerate() {
        if e.orientation != Orientation::Out {
            continue;
        }
        let (a, b) = (l.at[hid], l.at[e.twin]);
        let _ = writeln!(out, "  \\draw[postaction={{decorate}}] ({:.2},{:.2}) -- ({:.2},{:.2});", a.0, a.1, b.0, b.1);
    }
    for v in 1..web.vertex_count() {
        let (x, y) = l.vertex[v];
        let style = match web.kind(v) {
            VertexKind::Source => "fill=black",
            VertexKind::Sink => "fill=white",
            _ => "fill=red",
        };
        let _ = writeln!(out, "  \\filldraw[{style}] ({x:.2},{y:.2}) circle (2pt);");
    }
    for i in 1..=web.points() {
        let _ = writeln!(out, "  \\node[below] at ({i},0) {{{i}}};");
    }
    if web.loops() > 0 {
        let _ = writeln!(out, "  \\node at (0,{:.1}) {{loops: {}}};", l.height, web.loops());
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
