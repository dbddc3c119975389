//! DOT and SVG drawings of trees with a radial layout around the center.

use std::f64::consts::TAU;
use std::fmt::Write;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dessinum::tree::Center;
use dessinum::{Color, Error, Result, WeightedTree};

const RING: f64 = 80.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Full,
    /// Only black vertices are drawn; every white vertex has degree 2 and is
    /// either the midpoint of an edge or the end of a doubled stub.
    ImplicitWhite,
}

struct Mark {
    id: String,
    color: Option<Color>,
    at: (f64, f64),
}

struct Line {
    from: usize,
    to: usize,
    label: Option<u64>,
    doubled: bool,
}

struct Drawing {
    marks: Vec<Mark>,
    lines: Vec<Line>,
}

/// Positions by angular wedges proportional to the number of leaves below.
fn layout(tree: &WeightedTree, seed: u64) -> Vec<(f64, f64)> {
    let root = match tree.center() {
        Center::Vertex(v) => v,
        Center::Edge(e) => tree.edge(e).black,
    };
    let offset = if seed == 0 { 0.0 } else { StdRng::seed_from_u64(seed).gen_range(0.0..TAU) };
    let n = tree.vertex_count();
    let mut leaves = vec![0usize; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &e in tree.rotation(v) {
            let w = tree.edge(e).other(v);
            if e != parent_edge[v] {
                parent_edge[w] = e;
                order.push(w);
            }
        }
        i += 1;
    }
    for &v in order.iter().rev() {
        let below: usize = children(tree, v, parent_edge[v]).map(|w| leaves[w]).sum();
        leaves[v] = below.max(1);
    }
    let mut pos = vec![(0.0, 0.0); n];
    let mut wedge = vec![(offset, offset + TAU); n];
    let mut depth = vec![0usize; n];
    for &v in &order {
        let (lo, hi) = wedge[v];
        let mut start = lo;
        let total = leaves[v] as f64;
        for w in children(tree, v, parent_edge[v]) {
            let span = (hi - lo) * leaves[w] as f64 / total;
            wedge[w] = (start, start + span);
            depth[w] = depth[v] + 1;
            let mid = start + span / 2.0;
            let radius = RING * depth[w] as f64;
            pos[w] = (radius * mid.cos(), radius * mid.sin());
            start += span;
        }
    }
    pos
}

/// Neighbours away from the parent, counterclockwise starting after the parent edge.
fn children(tree: &WeightedTree, v: usize, parent: usize) -> impl Iterator<Item = usize> + '_ {
    let rot = tree.rotation(v);
    let start = if parent == usize::MAX { 0 } else { tree.slot(parent, v) + 1 };
    (0..rot.len())
        .map(move |i| rot[(start + i) % rot.len()])
        .filter(move |&e| e != parent)
        .map(move |e| tree.edge(e).other(v))
}

fn drawing(tree: &WeightedTree, style: Style, seed: u64) -> Result<Drawing> {
    let pos = layout(tree, seed);
    let mut marks = Vec::new();
    let mut lines = Vec::new();
    match style {
        Style::Full => {
            for (v, &at) in pos.iter().enumerate() {
                marks.push(Mark { id: format!("v{v}"), color: Some(tree.color(v)), at });
            }
            for e in tree.edges() {
                let label = (e.weight != 1).then_some(e.weight);
                lines.push(Line { from: e.black, to: e.white, label, doubled: false });
            }
        }
        Style::ImplicitWhite => {
            if tree.vertices_of(Color::White).any(|w| tree.degree(w) != 2) {
                return Err(Error::NotApplicable("implicit white vertices need every white degree equal to 2".into()));
            }
            let mut index = vec![usize::MAX; tree.vertex_count()];
            for v in tree.vertices_of(Color::Black) {
                index[v] = marks.len();
                marks.push(Mark { id: format!("v{v}"), color: Some(Color::Black), at: pos[v] });
            }
            for w in tree.vertices_of(Color::White) {
                let rot = tree.rotation(w);
                match rot {
                    [a, b] => {
                        let (x, y) = (tree.edge(*a).black, tree.edge(*b).black);
                        lines.push(Line { from: index[x], to: index[y], label: None, doubled: false });
                    }
                    [e] => {
                        let stub = marks.len();
                        marks.push(Mark { id: format!("s{w}"), color: None, at: pos[w] });
                        lines.push(Line { from: index[tree.edge(*e).black], to: stub, label: None, doubled: true });
                    }
                    _ => unreachable!("white vertex of degree 2 has one or two edges"),
                }
            }
        }
    }
    Ok(Drawing { marks, lines })
}

pub fn to_dot(tree: &WeightedTree, style: Style, seed: u64) -> Result<String> {
    let d = drawing(tree, style, seed)?;
    let mut out = String::new();
    out.push_str("digraph tree {\n  layout=neato;\n  node [label=\"\", width=0.2, fixedsize=true];\n  edge [dir=none];\n");
    for m in &d.marks {
        let (x, y) = m.at;
        let look = match m.color {
            Some(Color::Black) => "shape=circle, style=filled, fillcolor=black",
            Some(Color::White) => "shape=circle, style=filled, fillcolor=white",
            None => "shape=point, width=0.01",
        };
        // Adding zero turns -0.0 into 0.0 so the text stays stable.
        writeln!(out, "  {} [{look}, pos=\"{:.1},{:.1}!\"];", m.id, x + 0.0, -y + 0.0).unwrap();
    }
    for l in &d.lines {
        let mut attrs = Vec::new();
        if let Some(w) = l.label {
            attrs.push(format!("label=\"{w}\""));
        }
        if l.doubled {
            attrs.push("color=\"black:black\"".to_string());
        }
        let attrs = if attrs.is_empty() { String::new() } else { format!(" [{}]", attrs.join(", ")) };
        writeln!(out, "  {} -> {}{attrs};", d.marks[l.from].id, d.marks[l.to].id).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn to_svg(tree: &WeightedTree, style: Style, seed: u64) -> Result<String> {
    let d = drawing(tree, style, seed)?;
    let margin = 30.0;
    let xs = d.marks.iter().map(|m| m.at.0);
    let ys = d.marks.iter().map(|m| -m.at.1);
    let (min_x, max_x) = xs.fold((0.0f64, 0.0f64), |(a, b), x| (a.min(x), b.max(x)));
    let (min_y, max_y) = ys.fold((0.0f64, 0.0f64), |(a, b), y| (a.min(y), b.max(y)));
    let (w, h) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    let place = |(x, y): (f64, f64)| (x - min_x + margin + 0.0, -y - min_y + margin + 0.0);
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.1}\" height=\"{h:.1}\" viewBox=\"0 0 {w:.1} {h:.1}\">"
    )
    .unwrap();
    out.push_str("<g stroke=\"black\" stroke-width=\"1.5\">\n");
    for l in &d.lines {
        let (x1, y1) = place(d.marks[l.from].at);
        let (x2, y2) = place(d.marks[l.to].at);
        if l.doubled {
            let len = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt().max(1e-9);
            let (nx, ny) = (-(y2 - y1) / len * 2.0, (x2 - x1) / len * 2.0);
            for s in [-1.0, 1.0] {
                writeln!(
                    out,
                    "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\"/>",
                    x1 + s * nx,
                    y1 + s * ny,
                    x2 + s * nx,
                    y2 + s * ny
                )
                .unwrap();
            }
        } else {
            writeln!(out, "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\"/>").unwrap();
        }
    }
    out.push_str("</g>\n");
    for l in &d.lines {
        if let Some(wt) = l.label {
            let (x1, y1) = place(d.marks[l.from].at);
            let (x2, y2) = place(d.marks[l.to].at);
            writeln!(
                out,
                "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" font-family=\"sans-serif\">{wt}</text>",
                (x1 + x2) / 2.0 + 4.0,
                (y1 + y2) / 2.0 - 4.0
            )
            .unwrap();
        }
    }
    for m in &d.marks {
        let (x, y) = place(m.at);
        let fill = match m.color {
            Some(Color::Black) => "black",
            Some(Color::White) => "white",
            None => continue,
        };
        writeln!(out, "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"6\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"1.5\"/>")
            .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
