//! Passport-preserving transformations of weighted trees.

use crate::error::{Error, Result};
use crate::tree::{TreeBuilder, WeightedTree};
use crate::Weight;

pub fn color_swap(tree: &WeightedTree) -> WeightedTree {
    tree.color_swapped()
}

/// Mirror image: every cyclic order reversed. Not an isomorphism in general.
pub fn reflect(tree: &WeightedTree) -> WeightedTree {
    tree.reflected()
}

pub fn scale_weights(tree: &WeightedTree, factor: Weight) -> Result<WeightedTree> {
    if factor == 0 {
        return Err(Error::OutOfRange("scale factor must be positive".into()));
    }
    Ok(tree.with_weights(|w| w * factor))
}

/// Divides every weight by their gcd and returns that gcd.
pub fn reduce_weights(tree: &WeightedTree) -> (WeightedTree, Weight) {
    let d = tree.weight_gcd();
    (tree.with_weights(|w| w / d), d)
}

/// Three consecutive edges of a path, in order along the path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathLocus {
    edges: [usize; 3],
    /// Vertices `v0, v1, v2, v3` along the path.
    vertices: [usize; 4],
}

impl PathLocus {
    pub fn new(tree: &WeightedTree, edges: [usize; 3]) -> Result<PathLocus> {
        let m = tree.edge_count();
        if edges.iter().any(|&e| e >= m) {
            return Err(Error::OutOfRange(format!("edge index must be below {m}")));
        }
        let [a, b, c] = edges.map(|e| tree.edge(e));
        let shared = |x: crate::Edge, y: crate::Edge| {
            if x.black == y.black {
                Some(x.black)
            } else if x.white == y.white {
                Some(x.white)
            } else {
                None
            }
        };
        let not_path = || Error::NotApplicable(format!("edges {edges:?} do not form a path"));
        let v1 = shared(a, b).ok_or_else(not_path)?;
        let v2 = shared(b, c).ok_or_else(not_path)?;
        if v1 == v2 || edges[0] == edges[1] || edges[1] == edges[2] {
            return Err(not_path());
        }
        Ok(PathLocus { edges, vertices: [a.other(v1), v1, v2, c.other(v2)] })
    }

    pub fn edges(&self) -> [usize; 3] {
        self.edges
    }

    pub fn vertices(&self) -> [usize; 4] {
        self.vertices
    }

    pub fn weights(&self, tree: &WeightedTree) -> [Weight; 3] {
        self.edges.map(|e| tree.weight(e))
    }

    pub fn reversed(&self) -> PathLocus {
        let [a, b, c] = self.edges;
        let [v0, v1, v2, v3] = self.vertices;
        PathLocus { edges: [c, b, a], vertices: [v3, v2, v1, v0] }
    }
}

/// Every oriented path of three edges.
pub fn all_loci(tree: &WeightedTree) -> Vec<PathLocus> {
    let mut out = Vec::new();
    for mid in 0..tree.edge_count() {
        let e = tree.edge(mid);
        for (v1, v2) in [(e.black, e.white), (e.white, e.black)] {
            for &a in tree.rotation(v1).iter().filter(|&&a| a != mid) {
                for &c in tree.rotation(v2).iter().filter(|&&c| c != mid) {
                    out.push(PathLocus::new(tree, [a, mid, c]).unwrap());
                }
            }
        }
    }
    out
}

/// Edges of `v` in counterclockwise order starting just after `from`, skipping `skip`.
fn arc_after(tree: &WeightedTree, v: usize, from: usize, skip: &[usize]) -> Vec<usize> {
    let rot = tree.rotation(v);
    let start = tree.slot(from, v);
    (1..rot.len()).map(|i| rot[(start + i) % rot.len()]).filter(|e| !skip.contains(e)).collect()
}

/// Replaces path weights `(s, t, u)` with `s < u` by `(s, u - s, s + t)` and
/// exchanges the subtrees hanging at the second and fourth vertices of the path.
///
/// The subtrees from the far end are inserted at the second vertex right after
/// the middle edge (counterclockwise), mirroring how they followed the last edge;
/// the subtrees from the second vertex land after the last edge in their
/// counterclockwise order starting from the middle edge.
pub fn weight_exchange(tree: &WeightedTree, locus: &PathLocus) -> Result<WeightedTree> {
    let [s, t, u] = locus.weights(tree);
    if s >= u {
        return Err(Error::NotApplicable(format!("weight exchange needs s < u, got s={s}, u={u}")));
    }
    let [e1, e2, e3] = locus.edges;
    let [_, v1, _, v3] = locus.vertices;
    let near = arc_after(tree, v1, e2, &[e1]);
    let far = arc_after(tree, v3, e3, &[]);
    let mut b = tree.to_builder();
    let mut rot1 = vec![e2];
    rot1.extend(&far);
    rot1.push(e1);
    let mut rot3 = vec![e3];
    rot3.extend(&near);
    b.set_rotation(v1, rot1);
    b.set_rotation(v3, rot3);
    b.set_weight(e2, u - s);
    b.set_weight(e3, s + t);
    b.build()
}

/// Splits a tree along a path with weights `(s, t, s)`.
///
/// The two side edges are fused into one edge of weight `s` joining the outer
/// vertices, and the middle edge becomes an edge of weight `s + t`. Returns the
/// component holding the `s + t` edge first.
pub fn sts_rip(tree: &WeightedTree, locus: &PathLocus) -> Result<(WeightedTree, WeightedTree)> {
    let [s, t, s2] = locus.weights(tree);
    if s != s2 {
        return Err(Error::NotApplicable(format!("rip needs side weights equal, got {s} and {s2}")));
    }
    let [ea, em, eb] = locus.edges;
    let [_, y, z, w] = locus.vertices;
    let mut b = tree.to_builder();
    let replace = |rot: &[usize], old: usize, new: Option<usize>| -> Vec<usize> {
        rot.iter().filter_map(|&e| if e == old { new } else { Some(e) }).collect()
    };
    let rw = replace(tree.rotation(w), eb, Some(ea));
    let ry = replace(tree.rotation(y), ea, None);
    let rz = replace(tree.rotation(z), eb, None);
    b.set_rotation(w, rw);
    b.set_rotation(y, ry);
    b.set_rotation(z, rz);
    b.set_weight(em, s + t);
    let (mut parts, map) = b.components_mapped()?;
    if parts.len() != 2 {
        return Err(Error::InvalidTree("rip must produce two trees".into()));
    }
    if map[y].0 != 0 {
        parts.swap(0, 1);
    }
    let second = parts.pop().unwrap();
    let first = parts.pop().unwrap();
    Ok((first, second))
}

/// Rip at the first `(s, t, s)` path through `middle`, if any.
pub fn sts_rip_at(tree: &WeightedTree, middle: usize) -> Result<(WeightedTree, WeightedTree)> {
    let locus = all_loci(tree)
        .into_iter()
        .find(|l| l.edges[1] == middle && tree.weight(l.edges[0]) == tree.weight(l.edges[2]))
        .ok_or_else(|| Error::NotApplicable(format!("no (s,t,s) path through edge {middle}")))?;
    sts_rip(tree, &locus)
}

/// Joins two trees through edges of different weights `s < u` into one tree in
/// which a path of weights `(s, u - s, s)` replaces them. Vertex degrees are kept.
pub fn sts_stitch(t1: &WeightedTree, e1: usize, t2: &WeightedTree, e2: usize) -> Result<WeightedTree> {
    if e1 >= t1.edge_count() || e2 >= t2.edge_count() {
        return Err(Error::OutOfRange("stitch edge index out of range".into()));
    }
    let (w1, w2) = (t1.weight(e1), t2.weight(e2));
    if w1 == w2 {
        return Err(Error::NotApplicable(format!("stitch needs different weights, both are {w1}")));
    }
    let (mut b, _, offset_e) = disjoint_union(t1, t2);
    let (light, heavy) = if w1 < w2 { (e1, e2 + offset_e) } else { (e2 + offset_e, e1) };
    stitch_in(&mut b, light, heavy);
    b.build()
}

/// Stitches edges `light` (weight s) and `heavy` (weight u > s) of a builder in place.
pub(crate) fn stitch_in(b: &mut TreeBuilder, light: usize, heavy: usize) {
    let ls = b.edge(light);
    let hv = b.edge(heavy);
    let s = ls.weight;
    let w1 = ls.white;
    let (b2, w2) = (hv.black, hv.white);
    let f = b.add_edge(b2, w1, s);
    let rot_w1: Vec<usize> = b.rotation(w1).iter().map(|&e| if e == light { f } else { e }).collect();
    let rot_w2 = insert_after(b.rotation(w2), heavy, light);
    let rot_b2 = insert_after(b.rotation(b2), heavy, f);
    b.set_rotation(w1, rot_w1);
    b.set_rotation(w2, rot_w2);
    b.set_rotation(b2, rot_b2);
    b.set_weight(heavy, hv.weight - s);
}

fn insert_after(rot: &[usize], anchor: usize, new: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(rot.len() + 1);
    for &e in rot {
        out.push(e);
        if e == anchor {
            out.push(new);
        }
    }
    out
}

/// Builder holding both trees; returns offsets of the second tree's vertices and edges.
pub(crate) fn disjoint_union(t1: &WeightedTree, t2: &WeightedTree) -> (TreeBuilder, usize, usize) {
    let mut b = TreeBuilder::empty();
    let mut append = |t: &WeightedTree| {
        let base_v = b.vertex_count();
        let base_e = b.edge_count();
        for v in 0..t.vertex_count() {
            b.add_vertex(t.color(v));
        }
        for e in t.edges() {
            b.add_edge(e.black + base_v, e.white + base_v, e.weight);
        }
        for v in 0..t.vertex_count() {
            b.set_rotation(v + base_v, t.rotation(v).iter().map(|&e| e + base_e).collect());
        }
        (base_v, base_e)
    };
    append(t1);
    let (ov, oe) = append(t2);
    (b, ov, oe)
}

/// Every tree reachable by one rip along `locus` followed by a stitch of the two
/// parts through any pair of edges with different weights.
pub fn sts_moves(tree: &WeightedTree, locus: &PathLocus) -> Result<Vec<WeightedTree>> {
    let (a, b) = sts_rip(tree, locus)?;
    let mut out = Vec::new();
    for e in 0..a.edge_count() {
        for f in 0..b.edge_count() {
            if a.weight(e) != b.weight(f) {
                out.push(sts_stitch(&a, e, &b, f)?);
            }
        }
    }
    Ok(out)
}
