//! Weighted bicolored plane trees.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::passport::Passport;
use crate::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub black: usize,
    pub white: usize,
    pub weight: Weight,
}

impl Edge {
    pub fn end(&self, color: Color) -> usize {
        match color {
            Color::Black => self.black,
            Color::White => self.white,
        }
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.black {
            self.white
        } else {
            self.black
        }
    }
}

/// Where the tree's center sits after peeling leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Center {
    Vertex(usize),
    Edge(usize),
}

/// A bicolored plane tree with positive edge weights.
///
/// Vertices and edges are addressed by index. Each vertex stores its incident
/// edges in counterclockwise order. Trees parsed from a canonical code number
/// their edges in code order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedTree {
    colors: Vec<Color>,
    rotation: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    slot: Vec<[usize; 2]>,
}

impl WeightedTree {
    /// Validates and assembles a tree from raw parts.
    pub fn from_parts(colors: Vec<Color>, rotation: Vec<Vec<usize>>, edges: Vec<Edge>) -> Result<Self> {
        let nv = colors.len();
        if edges.is_empty() {
            return Err(Error::InvalidTree("a tree needs at least one edge".into()));
        }
        if rotation.len() != nv || nv != edges.len() + 1 {
            return Err(Error::InvalidTree("vertex count must be edge count plus one".into()));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.weight == 0 {
                return Err(Error::InvalidTree(format!("edge {i} has weight 0")));
            }
            if e.black >= nv || e.white >= nv {
                return Err(Error::InvalidTree(format!("edge {i} points outside the vertex set")));
            }
            if colors[e.black] != Color::Black || colors[e.white] != Color::White {
                return Err(Error::InvalidTree(format!("edge {i} does not join black to white")));
            }
        }
        let mut slot = vec![[usize::MAX; 2]; edges.len()];
        for (v, rot) in rotation.iter().enumerate() {
            if rot.is_empty() {
                return Err(Error::InvalidTree(format!("vertex {v} is isolated")));
            }
            for (i, &e) in rot.iter().enumerate() {
                let side = match edges.get(e) {
                    Some(edge) if edge.black == v => 0,
                    Some(edge) if edge.white == v => 1,
                    _ => return Err(Error::InvalidTree(format!("vertex {v} lists a foreign edge {e}"))),
                };
                if slot[e][side] != usize::MAX {
                    return Err(Error::InvalidTree(format!("edge {e} listed twice at vertex {v}")));
                }
                slot[e][side] = i;
            }
        }
        if slot.iter().any(|s| s[0] == usize::MAX || s[1] == usize::MAX) {
            return Err(Error::InvalidTree("an edge is missing from a rotation".into()));
        }
        let tree = WeightedTree { colors, rotation, edges, slot };
        if tree.bfs(0).contains(&usize::MAX) {
            return Err(Error::InvalidTree("graph is disconnected".into()));
        }
        Ok(tree)
    }

    /// One edge of the given weight.
    pub fn single_edge(weight: Weight) -> WeightedTree {
        let mut b = TreeBuilder::new(Color::Black);
        b.attach(0, weight);
        b.build().unwrap()
    }

    /// A star whose center has the given color; leaf edges listed counterclockwise.
    pub fn star(center: Color, weights: &[Weight]) -> WeightedTree {
        let mut b = TreeBuilder::new(center);
        for &w in weights {
            b.attach(0, w);
        }
        b.build().unwrap()
    }

    /// A path starting at a vertex of color `first`.
    pub fn path(first: Color, weights: &[Weight]) -> WeightedTree {
        let mut b = TreeBuilder::new(first);
        let mut v = 0;
        for &w in weights {
            v = b.attach(v, w);
        }
        b.build().unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Edge {
        self.edges[e]
    }

    pub fn weight(&self, e: usize) -> Weight {
        self.edges[e].weight
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    /// Incident edges of `v`, counterclockwise.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Number of incident edges, ignoring weights.
    pub fn valence(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Sum of incident edge weights.
    pub fn degree(&self, v: usize) -> Weight {
        self.rotation[v].iter().map(|&e| self.edges[e].weight).sum()
    }

    /// Position of edge `e` in the rotation of its endpoint `v`.
    pub fn slot(&self, e: usize, v: usize) -> usize {
        if self.edges[e].black == v {
            self.slot[e][0]
        } else {
            self.slot[e][1]
        }
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.rotation[v].len() == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation[v].iter().map(move |&e| self.edges[e].other(v))
    }

    pub fn vertices_of(&self, color: Color) -> impl Iterator<Item = usize> + '_ {
        (0..self.colors.len()).filter(move |&v| self.colors[v] == color)
    }

    pub fn total_weight(&self) -> Weight {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Gcd of all edge weights (equal to the gcd of all vertex degrees).
    pub fn weight_gcd(&self) -> Weight {
        self.edges.iter().fold(0, |g, e| g.gcd(&e.weight))
    }

    pub fn degrees_of(&self, color: Color) -> Partition {
        Partition::new(self.vertices_of(color).map(|v| self.degree(v)).collect::<Vec<_>>()).unwrap()
    }

    pub fn passport(&self) -> Passport {
        Passport::new(self.degrees_of(Color::Black), self.degrees_of(Color::White)).unwrap()
    }

    /// Multiset of edge weights.
    pub fn weight_distribution(&self) -> Partition {
        Partition::new(self.edges.iter().map(|e| e.weight).collect::<Vec<_>>()).unwrap()
    }

    /// Graph distances from `source`.
    pub fn bfs(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.colors.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &e in &self.rotation[v] {
                let w = self.edges[e].other(v);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Edge count of a longest path.
    pub fn diameter(&self) -> usize {
        let first = self.bfs(0);
        let far = argmax(&first);
        *self.bfs(far).iter().max().unwrap()
    }

    pub fn center(&self) -> Center {
        let first = self.bfs(0);
        let a = argmax(&first);
        let from_a = self.bfs(a);
        let b = argmax(&from_a);
        let from_b = self.bfs(b);
        let diam = from_a[b];
        let mid: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| from_a[v] + from_b[v] == diam && from_a[v].abs_diff(from_b[v]) <= 1)
            .collect();
        if diam.is_multiple_of(2) {
            Center::Vertex(mid[0])
        } else {
            let (x, y) = (mid[0], mid[1]);
            let e = self.rotation[x].iter().copied().find(|&e| self.edges[e].other(x) == y).unwrap();
            Center::Edge(e)
        }
    }

    /// The mirror image: every rotation reversed.
    pub fn reflected(&self) -> WeightedTree {
        let rotation = self.rotation.iter().map(|r| r.iter().rev().copied().collect()).collect();
        WeightedTree::from_parts(self.colors.clone(), rotation, self.edges.clone()).unwrap()
    }

    /// Same plane structure with the two colors exchanged.
    pub fn color_swapped(&self) -> WeightedTree {
        let colors = self.colors.iter().map(|c| c.flip()).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { black: e.white, white: e.black, weight: e.weight })
            .collect();
        WeightedTree::from_parts(colors, self.rotation.clone(), edges).unwrap()
    }

    pub fn with_weights(&self, f: impl Fn(Weight) -> Weight) -> WeightedTree {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { black: e.black, white: e.white, weight: f(e.weight) })
            .collect();
        WeightedTree::from_parts(self.colors.clone(), self.rotation.clone(), edges).unwrap()
    }

    pub fn to_builder(&self) -> TreeBuilder {
        TreeBuilder {
            colors: self.colors.clone(),
            rotation: self.rotation.clone(),
            edges: self.edges.clone(),
        }
    }
}

fn argmax(values: &[usize]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[best] {
            best = i;
        }
    }
    best
}

impl fmt::Display for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::code::canonical_code(self))
    }
}

/// Mutable assembly of a tree. Edges may be added, removed and reattached
/// freely; `build` validates the result.
#[derive(Clone, Debug, Default)]
pub struct TreeBuilder {
    colors: Vec<Color>,
    rotation: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl TreeBuilder {
    /// Starts with a single vertex of the given color (index 0).
    pub fn new(root: Color) -> Self {
        TreeBuilder { colors: vec![root], rotation: vec![Vec::new()], edges: Vec::new() }
    }

    pub fn empty() -> Self {
        TreeBuilder::default()
    }

    pub fn add_vertex(&mut self, color: Color) -> usize {
        self.colors.push(color);
        self.rotation.push(Vec::new());
        self.colors.len() - 1
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn edge(&self, e: usize) -> Edge {
        self.edges[e]
    }

    /// Adds a new leaf of the opposite color after the last edge of `v` (counterclockwise).
    pub fn attach(&mut self, v: usize, weight: Weight) -> usize {
        let pos = self.rotation[v].len();
        self.attach_at(v, pos, weight)
    }

    /// Adds a new leaf of the opposite color at position `pos` of the rotation of `v`.
    pub fn attach_at(&mut self, v: usize, pos: usize, weight: Weight) -> usize {
        let w = self.add_vertex(self.colors[v].flip());
        let e = self.add_edge(v, w, weight);
        self.rotation[v].insert(pos, e);
        self.rotation[w].push(e);
        w
    }

    /// Joins two existing vertices of opposite colors, inserting the edge at the given positions.
    pub fn connect(&mut self, u: usize, pos_u: usize, v: usize, pos_v: usize, weight: Weight) -> usize {
        let e = self.add_edge(u, v, weight);
        self.rotation[u].insert(pos_u, e);
        self.rotation[v].insert(pos_v, e);
        e
    }

    /// Records an edge without placing it in any rotation.
    pub fn add_edge(&mut self, u: usize, v: usize, weight: Weight) -> usize {
        assert_ne!(self.colors[u], self.colors[v], "edge must join opposite colors");
        let (black, white) = if self.colors[u] == Color::Black { (u, v) } else { (v, u) };
        self.edges.push(Edge { black, white, weight });
        self.edges.len() - 1
    }

    /// Detaches edge `e` from both rotations. The edge record stays until `build`.
    /// Returns the positions it occupied at its black and white ends.
    pub fn detach(&mut self, e: usize) -> (usize, usize) {
        let Edge { black, white, .. } = self.edges[e];
        let pb = self.rotation[black].iter().position(|&x| x == e).expect("edge not attached");
        self.rotation[black].remove(pb);
        let pw = self.rotation[white].iter().position(|&x| x == e).expect("edge not attached");
        self.rotation[white].remove(pw);
        (pb, pw)
    }

    pub fn set_weight(&mut self, e: usize, weight: Weight) {
        self.edges[e].weight = weight;
    }

    /// Replaces the rotation of `v` wholesale. Endpoints of listed edges are rewired to `v`.
    pub fn set_rotation(&mut self, v: usize, edges: Vec<usize>) {
        for &e in &edges {
            match self.colors[v] {
                Color::Black => self.edges[e].black = v,
                Color::White => self.edges[e].white = v,
            }
        }
        self.rotation[v] = edges;
    }

    /// Splits the builder into its connected components, dropping detached edges.
    pub fn components(&self) -> Result<Vec<WeightedTree>> {
        Ok(self.components_mapped()?.0)
    }

    /// Components ordered by their smallest vertex, plus for every vertex its
    /// `(component, index within component)`; isolated vertices map to `usize::MAX`.
    #[allow(clippy::type_complexity)]
    pub fn components_mapped(&self) -> Result<(Vec<WeightedTree>, Vec<(usize, usize)>)> {
        let attached = self.attached_edges();
        let nv = self.colors.len();
        let mut comp = vec![usize::MAX; nv];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for start in 0..nv {
            if comp[start] != usize::MAX || self.rotation[start].is_empty() {
                continue;
            }
            let id = groups.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &e in &self.rotation[v] {
                    let w = self.edges[e].other(v);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            groups.push(members);
        }
        let mut map = vec![(usize::MAX, usize::MAX); nv];
        for (id, members) in groups.iter().enumerate() {
            for (i, &v) in members.iter().enumerate() {
                map[v] = (id, i);
            }
        }
        let trees = groups
            .iter()
            .map(|members| {
                let keep: Vec<bool> = (0..self.edges.len())
                    .map(|e| attached[e] && comp[self.edges[e].black] == comp[members[0]])
                    .collect();
                self.extract(members, &keep)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((trees, map))
    }

    fn attached_edges(&self) -> Vec<bool> {
        let mut attached = vec![false; self.edges.len()];
        for rot in &self.rotation {
            for &e in rot {
                attached[e] = true;
            }
        }
        attached
    }

    fn extract(&self, members: &[usize], keep: &[bool]) -> Result<WeightedTree> {
        let mut vmap = vec![usize::MAX; self.colors.len()];
        let ordered = members;
        for (i, &v) in ordered.iter().enumerate() {
            vmap[v] = i;
        }
        let mut emap = vec![usize::MAX; self.edges.len()];
        let mut edges = Vec::new();
        for (e, edge) in self.edges.iter().enumerate() {
            if keep[e] {
                emap[e] = edges.len();
                edges.push(Edge { black: vmap[edge.black], white: vmap[edge.white], weight: edge.weight });
            }
        }
        let colors = ordered.iter().map(|&v| self.colors[v]).collect();
        let rotation = ordered.iter().map(|&v| self.rotation[v].iter().map(|&e| emap[e]).collect()).collect();
        WeightedTree::from_parts(colors, rotation, edges)
    }

    /// Validates a connected result. Detached edges and isolated vertices are dropped.
    pub fn build(&self) -> Result<WeightedTree> {
        let mut comps = self.components()?;
        match comps.len() {
            1 => Ok(comps.pop().unwrap()),
            0 => Err(Error::InvalidTree("a tree needs at least one edge".into())),
            k => Err(Error::InvalidTree(format!("graph has {k} components"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_passport() {
        let t = WeightedTree::star(Color::Black, &[1, 1, 1, 1]);
        assert_eq!(t.passport(), Passport::from_parts(&[4], &[1, 1, 1, 1]));
        assert_eq!(t.diameter(), 2);
        assert_eq!(t.center(), Center::Vertex(0));
    }

    #[test]
    fn single_edge() {
        let t = WeightedTree::single_edge(3);
        assert_eq!(t.passport(), Passport::from_parts(&[3], &[3]));
        assert_eq!(t.diameter(), 1);
        assert!(matches!(t.center(), Center::Edge(0)));
    }

    #[test]
    fn rejects_bad_structures() {
        assert!(TreeBuilder::new(Color::Black).build().is_err());
        let colors = vec![Color::Black, Color::Black];
        let edges = vec![Edge { black: 0, white: 1, weight: 1 }];
        assert!(WeightedTree::from_parts(colors, vec![vec![0], vec![0]], edges).is_err());
        let colors = vec![Color::Black, Color::White];
        let edges = vec![Edge { black: 0, white: 1, weight: 0 }];
        assert!(WeightedTree::from_parts(colors, vec![vec![0], vec![0]], edges).is_err());
    }

    #[test]
    fn builder_components() {
        let mut b = TreeBuilder::new(Color::Black);
        b.attach(0, 2);
        let x = b.add_vertex(Color::Black);
        b.attach(x, 2);
        let comps = b.components().unwrap();
        assert_eq!(comps.len(), 2);
        assert!(b.build().is_err());
    }

    #[test]
    fn overweight_law() {
        let t = WeightedTree::path(Color::White, &[1, 2, 4]);
        let p = t.passport();
        let excess: u64 = t.edges().iter().map(|e| e.weight - 1).sum();
        assert_eq!(excess as i64, p.excess());
        assert_eq!(t.edge_count(), p.p() + p.q() - 1);
    }
}
