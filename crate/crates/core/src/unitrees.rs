//! The twenty families of unitrees: trees that are the only tree with their
//! passport. Series are recognised by structural predicates and sporadic trees
//! by their canonical codes. A brute-force check is provided alongside.

use std::fmt;
use std::sync::OnceLock;

use crate::bounds::is_realizable_as_tree;
use crate::code::{canonical_code, TreeCode};
use crate::enumerate::unique_tree;
use crate::error::{Error, Result};
use crate::passport::Passport;
use crate::surgery::{color_swap, reduce_weights};
use crate::tree::{Color, TreeBuilder, WeightedTree};
use crate::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E1,
    E2,
    E3,
    E4,
    F,
    G,
    H,
    I,
    J,
    K,
    L,
    M,
    N,
    O,
    P,
    Q,
    R,
    S,
    T,
}

impl Family {
    pub const ALL: [Family; 23] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E1,
        Family::E2,
        Family::E3,
        Family::E4,
        Family::F,
        Family::G,
        Family::H,
        Family::I,
        Family::J,
        Family::K,
        Family::L,
        Family::M,
        Family::N,
        Family::O,
        Family::P,
        Family::Q,
        Family::R,
        Family::S,
        Family::T,
    ];

    pub fn is_sporadic(self) -> bool {
        self >= Family::K
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Named family parameters; unused ones are `None`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub s: Option<Weight>,
    pub t: Option<Weight>,
    pub k: Option<Weight>,
    pub l: Option<Weight>,
    pub m: Option<Weight>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, value) in [("s", self.s), ("t", self.t), ("k", self.k), ("l", self.l), ("m", self.m)] {
            if let Some(v) = value {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{name}={v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyTag {
    pub family: Family,
    pub params: Params,
    /// The match was made after exchanging black and white.
    pub swapped: bool,
    /// Common divisor of the weights that was factored out.
    pub scale: Weight,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if self.params != Params::default() {
            write!(f, "({})", self.params)?;
        }
        if self.swapped {
            f.write_str(" swapped")?;
        }
        if self.scale > 1 {
            write!(f, " x{}", self.scale)?;
        }
        Ok(())
    }
}

/// Recognises `tree` as a member of one of the families. Weights are reduced
/// first and both colorings are tried; the earliest family wins.
pub fn match_family(tree: &WeightedTree) -> Option<FamilyTag> {
    let (reduced, scale) = reduce_weights(tree);
    let mut best: Option<FamilyTag> = None;
    for swapped in [false, true] {
        let t = if swapped { color_swap(&reduced) } else { reduced.clone() };
        if let Some((family, params)) = match_oriented(&t) {
            let tag = FamilyTag { family, params, swapped, scale };
            if best.is_none_or(|b| (tag.family, tag.swapped) < (b.family, b.swapped)) {
                best = Some(tag);
            }
        }
    }
    best
}

type Predicate = fn(&WeightedTree) -> Option<Params>;

fn match_oriented(t: &WeightedTree) -> Option<(Family, Params)> {
    let series: [(Family, Predicate); 9] = [
        (Family::A, star),
        (Family::B, chain),
        (Family::C, double_star),
        (Family::D, brush_d),
        (Family::F, ordinary_spider),
        (Family::G, spider_with_double_edge),
        (Family::H, two_stars),
        (Family::I, two_stars_of_triangles),
        (Family::J, three_centers),
    ];
    let mut found: Vec<(Family, Params)> = Vec::new();
    for (family, predicate) in series {
        if let Some(p) = predicate(t) {
            found.push((family, p));
        }
    }
    if let Some(e) = brush_e(t) {
        found.push(e);
    }
    if let Some(f) = sporadic_match(t) {
        found.push((f, Params::default()));
    }
    found.into_iter().min_by_key(|(f, _)| *f)
}

/// True iff the passport is realised by exactly one tree.
pub fn is_unitree_bruteforce(passport: &Passport) -> bool {
    is_realizable_as_tree(passport) && unique_tree(passport).is_some()
}

fn leaf_weights(t: &WeightedTree, v: usize) -> Vec<Weight> {
    t.rotation(v).iter().filter(|&&e| t.is_leaf(t.edge(e).other(v))).map(|&e| t.weight(e)).collect()
}

fn non_leaves(t: &WeightedTree) -> Vec<usize> {
    (0..t.vertex_count()).filter(|&v| !t.is_leaf(v)).collect()
}

fn all_weights(t: &WeightedTree, w: Weight) -> bool {
    t.edges().iter().all(|e| e.weight == w)
}

/// The value shared by all entries but at most one, and the odd one out.
fn all_but_one(values: &[Weight]) -> Option<(Weight, Weight, usize)> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    if n == 0 {
        return None;
    }
    if sorted[0] == sorted[n - 1] {
        return Some((sorted[0], sorted[0], n));
    }
    let common = sorted[1];
    let count = sorted.iter().filter(|&&x| x == common).count();
    if count + 1 != n {
        return None;
    }
    let odd = *sorted.iter().find(|&&x| x != common).unwrap();
    Some((common, odd, count))
}

/// Stars: a black center, all weights equal except at most one.
fn star(t: &WeightedTree) -> Option<Params> {
    let c = t.vertices_of(Color::Black).find(|&v| t.valence(v) == t.edge_count())?;
    let weights: Vec<Weight> = t.rotation(c).iter().map(|&e| t.weight(e)).collect();
    let (s, odd, k) = all_but_one(&weights)?;
    let k = if s == odd { k - 1 } else { k };
    Some(Params { s: Some(s), t: Some(odd), k: Some(k as Weight), ..Params::default() })
}

/// Vertices of a path in order, when the tree is one.
fn path_order(t: &WeightedTree) -> Option<(Vec<usize>, Vec<Weight>)> {
    if (0..t.vertex_count()).any(|v| t.valence(v) > 2) {
        return None;
    }
    let start = (0..t.vertex_count()).find(|&v| t.is_leaf(v))?;
    let mut order = vec![start];
    let mut weights = Vec::new();
    let mut prev_edge = usize::MAX;
    let mut v = start;
    while let Some(&e) = t.rotation(v).iter().find(|&&e| e != prev_edge) {
        weights.push(t.weight(e));
        v = t.edge(e).other(v);
        order.push(v);
        prev_edge = e;
    }
    Some((order, weights))
}

/// Chains whose weights alternate with period two.
fn chain(t: &WeightedTree) -> Option<Params> {
    let (_, w) = path_order(t)?;
    if (2..w.len()).any(|i| w[i] != w[i - 2]) {
        return None;
    }
    let m = w.len();
    let (s, tt) = match m {
        1 => (w[0], None),
        _ if m % 2 == 1 => (w[0], Some(w[1])),
        _ => (w[0].min(w[1]), Some(w[0].max(w[1]))),
    };
    Some(Params { s: Some(s), t: tt, k: Some(m as Weight), ..Params::default() })
}

/// Diameter three: one middle edge of weight t with leaves of a common weight s
/// at both ends.
fn double_star(t: &WeightedTree) -> Option<Params> {
    let core = non_leaves(t);
    if core.len() != 2 || t.diameter() != 3 {
        return None;
    }
    let (u, v) = if t.color(core[0]) == Color::Black { (core[0], core[1]) } else { (core[1], core[0]) };
    let middle = t.rotation(u).iter().copied().find(|&e| t.edge(e).other(u) == v)?;
    let mut leaves = leaf_weights(t, u);
    let k = leaves.len();
    leaves.extend(leaf_weights(t, v));
    let s = leaves[0];
    if leaves.iter().any(|&w| w != s) {
        return None;
    }
    let l = leaves.len() - k;
    Some(Params { s: Some(s), t: Some(t.weight(middle)), k: Some(k as Weight), l: Some(l as Weight), m: None })
}

/// Diameter four: `x -s- c -t- y` where `x` carries one leaf of weight `s+t`
/// and `y` two leaves of weight `s`.
fn brush_d(t: &WeightedTree) -> Option<Params> {
    let core = non_leaves(t);
    if core.len() != 3 || t.diameter() != 4 {
        return None;
    }
    let c = *core.iter().find(|&&v| t.rotation(v).iter().all(|&e| !t.is_leaf(t.edge(e).other(v))))?;
    if t.valence(c) != 2 {
        return None;
    }
    let rot = t.rotation(c);
    for (ex, ey) in [(rot[0], rot[1]), (rot[1], rot[0])] {
        let (x, y) = (t.edge(ex).other(c), t.edge(ey).other(c));
        let (s, tt) = (t.weight(ex), t.weight(ey));
        if leaf_weights(t, x) == [s + tt] && leaf_weights(t, y) == [s, s] {
            return Some(Params { s: Some(s), t: Some(tt), ..Params::default() });
        }
    }
    None
}

/// Brushes: the non-leaf vertices form a path whose weights alternate `s, t`;
/// every end carries either a bunch of leaves of weight `s+t` or one leaf
/// continuing the alternation. Chains with no bunch at all are excluded.
fn brush_e(t: &WeightedTree) -> Option<(Family, Params)> {
    let core = non_leaves(t);
    if core.len() < 2 {
        return None;
    }
    let is_core = |v: usize| !t.is_leaf(v);
    let core_neighbors = |v: usize| t.neighbors(v).filter(|&w| is_core(w)).count();
    if core.iter().any(|&v| core_neighbors(v) > 2 || (core_neighbors(v) == 2 && t.valence(v) != 2)) {
        return None;
    }
    // Walk the core path from one end.
    let start = *core.iter().find(|&&v| core_neighbors(v) == 1)?;
    let mut order = vec![start];
    let mut weights = Vec::new();
    let mut prev = usize::MAX;
    loop {
        let v = *order.last().unwrap();
        let Some(&e) = t.rotation(v).iter().find(|&&e| {
            let w = t.edge(e).other(v);
            w != prev && is_core(w)
        }) else {
            break;
        };
        weights.push(t.weight(e));
        prev = v;
        order.push(t.edge(e).other(v));
    }
    if order.len() != core.len() || (2..weights.len()).any(|i| weights[i] != weights[i - 2]) {
        return None;
    }
    let ends = [leaf_weights(t, order[0]), leaf_weights(t, *order.last().unwrap())];
    let c = weights.len();
    let a = weights[0];
    // Weight a solitary leaf needs to continue the alternation at each end.
    let continuation = if c >= 2 { [Some(weights[1]), Some(weights[c - 2])] } else { [None, None] };
    // Prefer reading ends as bunches.
    for choice in [[true, true], [true, false], [false, true]] {
        let mut b = weights.get(1).copied();
        let mut ok = true;
        for side in 0..2 {
            let leaves = &ends[side];
            let x = leaves[0];
            let needed = if choice[side] {
                if leaves.iter().any(|&w| w != x) || x <= a {
                    ok = false;
                    break;
                }
                x - a
            } else {
                if leaves.len() != 1 {
                    ok = false;
                    break;
                }
                match continuation[side] {
                    Some(w) if w == x => continue,
                    Some(_) => {
                        ok = false;
                        break;
                    }
                    None => x,
                }
            };
            match b {
                Some(y) if y != needed => {
                    ok = false;
                    break;
                }
                _ => b = Some(needed),
            }
        }
        if !ok {
            continue;
        }
        let b = b?;
        let bunches = choice.iter().filter(|&&x| x).count();
        let chain_len = c + 2 - bunches;
        let len = chain_len as Weight;
        let near = [weights[0], weights[c - 1]];
        let size = |side: usize| ends[side].len() as Weight;
        let (family, params) = match (bunches, chain_len % 2 == 1) {
            (2, true) => {
                let (k, l) = (size(0).max(size(1)), size(0).min(size(1)));
                (Family::E3, Params { s: Some(a), t: Some(b), k: Some(k), l: Some(l), m: Some(len) })
            }
            (2, false) => {
                let (s, tt, k, l) =
                    if near[0] <= near[1] { (near[0], near[1], size(0), size(1)) } else { (near[1], near[0], size(1), size(0)) };
                (Family::E4, Params { s: Some(s), t: Some(tt), k: Some(k), l: Some(l), m: Some(len) })
            }
            (_, odd) => {
                let bunch = if choice[0] { 0 } else { 1 };
                let solitary = ends[1 - bunch][0];
                let other = if solitary == a { b } else { a };
                let family = if odd { Family::E1 } else { Family::E2 };
                (family, Params { s: Some(solitary), t: Some(other), k: Some(size(bunch)), l: None, m: Some(len) })
            }
        };
        return Some((family, params));
    }
    None
}

/// Ordinary trees where one black vertex is adjacent to every white vertex and
/// all white degrees agree except at most one.
fn ordinary_spider(t: &WeightedTree) -> Option<Params> {
    if !all_weights(t, 1) {
        return None;
    }
    let c = single_black_hub(t)?;
    let degrees: Vec<Weight> = t.vertices_of(Color::White).map(|v| t.degree(v)).collect();
    let (l, m, _) = all_but_one(&degrees)?;
    Some(Params { k: Some(t.valence(c) as Weight), l: Some(l), m: Some(m), ..Params::default() })
}

/// The only black vertex that is not a leaf of weight one, if there is exactly one.
fn single_black_hub(t: &WeightedTree) -> Option<usize> {
    let mut hubs = t.vertices_of(Color::Black).filter(|&v| t.degree(v) != 1 || !t.is_leaf(v));
    let c = hubs.next()?;
    hubs.next().is_none().then_some(c)
}

/// One edge of weight two at a black hub, every other weight one, every other
/// black vertex a leaf, and all white degrees equal.
fn spider_with_double_edge(t: &WeightedTree) -> Option<Params> {
    let heavy: Vec<usize> = (0..t.edge_count()).filter(|&e| t.weight(e) != 1).collect();
    if heavy.len() != 1 || t.weight(heavy[0]) != 2 {
        return None;
    }
    let c = single_black_hub(t)?;
    if t.edge(heavy[0]).black != c {
        return None;
    }
    let mut whites = t.vertices_of(Color::White).map(|v| t.degree(v));
    let m = whites.next()?;
    if whites.any(|d| d != m) {
        return None;
    }
    Some(Params { k: Some(t.degree(c)), m: Some(m), ..Params::default() })
}

fn black_hubs(t: &WeightedTree) -> Vec<usize> {
    t.vertices_of(Color::Black).filter(|&v| !t.is_leaf(v)).collect()
}

/// Ordinary, every white vertex of degree two and exactly two non-leaf black vertices.
fn two_stars(t: &WeightedTree) -> Option<Params> {
    if !all_weights(t, 1) || t.vertices_of(Color::White).any(|v| t.degree(v) != 2) {
        return None;
    }
    let hubs = black_hubs(t);
    if hubs.len() != 2 {
        return None;
    }
    let (a, b) = (t.degree(hubs[0]), t.degree(hubs[1]));
    Some(Params { k: Some(a.max(b)), l: Some(a.min(b)), ..Params::default() })
}

/// Ordinary, every white vertex of degree three and exactly two non-leaf black
/// vertices, of equal degree.
fn two_stars_of_triangles(t: &WeightedTree) -> Option<Params> {
    if !all_weights(t, 1) || t.vertices_of(Color::White).any(|v| t.degree(v) != 3) {
        return None;
    }
    let hubs = black_hubs(t);
    if hubs.len() != 2 || t.degree(hubs[0]) != t.degree(hubs[1]) {
        return None;
    }
    Some(Params { k: Some(t.degree(hubs[0])), ..Params::default() })
}

/// Every white vertex of degree two and three black vertices: a hub of degree
/// four with one leaf of weight two and two paths of weight one to black
/// vertices carrying `k` leaves of weight two each.
fn three_centers(t: &WeightedTree) -> Option<Params> {
    if t.vertices_of(Color::White).any(|v| t.degree(v) != 2) {
        return None;
    }
    let blacks: Vec<usize> = t.vertices_of(Color::Black).collect();
    if blacks.len() != 3 {
        return None;
    }
    let hub = *blacks.iter().find(|&&v| t.degree(v) == 4)?;
    let mut hub_weights: Vec<Weight> = t.rotation(hub).iter().map(|&e| t.weight(e)).collect();
    hub_weights.sort_unstable();
    if hub_weights != [1, 1, 2] {
        return None;
    }
    let mut k = None;
    for &b in blacks.iter().filter(|&&v| v != hub) {
        let leaves = leaf_weights(t, b);
        if t.degree(b) != 2 * leaves.len() as Weight + 1 || leaves.iter().any(|&w| w != 2) {
            return None;
        }
        if k.is_some_and(|k| k != leaves.len()) {
            return None;
        }
        k = Some(leaves.len());
    }
    Some(Params { k: k.map(|k| k as Weight), ..Params::default() })
}

/// Canonical codes of the sporadic unitrees, in one of their two colorings.
const SPORADIC: [(Family, &str); 10] = [
    (Family::K, "root=B; x1 x1 x1 x2 y2 y1 y1 x1 x1 y1 y1 y1 x1 y1"),
    (Family::L, "root=B; x1 x1 x1 x2 y2 y1 y1 x1 x1 x2 y2 y1 y1 y1"),
    (Family::M, "root=B; x1 x1 x1 x2 y2 y1 y1 x1 x1 x2 y2 y1 y1 y1 x1 y1"),
    (Family::N, "root=B; x1 x1 x1 x2 y2 y1 y1 x1 x1 x2 y2 y1 y1 y1 x1 x2 y2 y1"),
    (
        Family::O,
        "root=B; x1 x1 x1 x1 x2 y2 x2 y2 y1 y1 x1 x1 x2 y2 x2 y2 y1 y1 x2 y2 y1 y1 x2 y2 x2 y2",
    ),
    (Family::P, "root=B; x1 x2 x3 y3 y2 y1 x1 x2 x3 y3 y2 y1 x3 y3"),
    (
        Family::Q,
        "root=B; x1 x1 x1 x1 x1 x1 x1 x1 y1 y1 x1 x1 y1 y1 y1 y1 x1 x1 y1 y1 y1 y1 x1 x1 y1 y1 y1 y1",
    ),
    (
        Family::R,
        "root=B; x1 x1 x1 x1 x1 x1 x2 y2 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x2 y2",
    ),
    (Family::S, "root=B; x1 x1 x1 x1 x1 x1 x2 y2 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 y1 y1 x2 y2"),
    (
        Family::T,
        "root=B; x1 x1 x1 x1 x1 x1 x1 x1 x2 y2 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x2 y2",
    ),
];

fn sporadic_table() -> &'static [(Family, Passport, TreeCode)] {
    static TABLE: OnceLock<Vec<(Family, Passport, TreeCode)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        SPORADIC
            .iter()
            .map(|(f, c)| {
                let code: TreeCode = c.parse().expect("stored code parses");
                (*f, code.to_tree().passport(), code)
            })
            .collect()
    })
}

fn sporadic_match(t: &WeightedTree) -> Option<Family> {
    let passport = t.passport();
    let mut candidates = sporadic_table().iter().filter(|(_, p, _)| *p == passport).peekable();
    candidates.peek()?;
    let code = canonical_code(t);
    candidates.find(|(_, _, c)| *c == code).map(|(f, _, _)| *f)
}

/// The stored representative of a sporadic family.
pub fn sporadic_tree(family: Family) -> Option<WeightedTree> {
    sporadic_table().iter().find(|(f, _, _)| *f == family).map(|(_, _, c)| c.to_tree())
}

fn need(value: Option<Weight>, name: &str, family: Family) -> Result<Weight> {
    match value {
        Some(v) if v >= 1 => Ok(v),
        Some(_) => Err(Error::OutOfRange(format!("{family}: parameter {name} must be positive"))),
        None => Err(Error::OutOfRange(format!("{family}: parameter {name} is required"))),
    }
}

/// Builds the member of a family with the given parameters, in its matching
/// coloring. Sporadic families ignore the parameters.
///
/// Parameters follow the tags reported by [`match_family`]: `A(s,t,k)`,
/// `B(s,t,k)` with `k` edges, `C(s,t,k,l)`, `D(s,t)`, `E*(s,t,k,l,m)` with chain
/// length `m`, `F(k,l,m)`, `G(k,m)`, `H(k,l)`, `I(k)`, `J(k)`.
pub fn family_tree(family: Family, params: &Params) -> Result<WeightedTree> {
    let p = params;
    let s = || need(p.s, "s", family);
    let t = || need(p.t, "t", family);
    let k = || need(p.k, "k", family);
    let l = || need(p.l, "l", family);
    let m = || need(p.m, "m", family);
    let mut b = TreeBuilder::new(Color::Black);
    match family {
        Family::A => {
            for _ in 0..k()? {
                b.attach(0, s()?);
            }
            b.attach(0, t()?);
        }
        Family::B => {
            let (s, len) = (s()?, k()?);
            let weights: Vec<Weight> =
                (0..len).map(|i| if i % 2 == 0 { Ok(s) } else { t() }).collect::<Result<_>>()?;
            return Ok(WeightedTree::path(Color::Black, &weights));
        }
        Family::C => {
            let (s, l) = (s()?, l()?);
            let v = b.attach(0, t()?);
            for _ in 0..k()? {
                b.attach(0, s);
            }
            for _ in 0..l {
                b.attach(v, s);
            }
        }
        Family::D => {
            let (s, t) = (s()?, t()?);
            let mut b = TreeBuilder::new(Color::White);
            let x = b.attach(0, s);
            let y = b.attach(0, t);
            b.attach(x, s + t);
            b.attach(y, s);
            b.attach(y, s);
            return b.build();
        }
        Family::E1 | Family::E2 | Family::E3 | Family::E4 => {
            let (s, t, len) = (s()?, t()?, m()?);
            let two_bunches = matches!(family, Family::E3 | Family::E4);
            let odd = matches!(family, Family::E1 | Family::E3);
            if len % 2 != odd as Weight {
                return Err(Error::OutOfRange(format!("{family}: chain length m has the wrong parity")));
            }
            let core_len = if two_bunches { len } else { len - 1 };
            if core_len == 0 {
                return Err(Error::OutOfRange(format!("{family}: chain length m is too small")));
            }
            // Core weights from the first bunch. With one bunch, the solitary
            // leaf of weight s ends the alternation.
            let first = if two_bunches || core_len % 2 == 0 { s } else { t };
            let other = if first == s { t } else { s };
            let mut v = 0;
            for _ in 0..k()? {
                b.attach(0, s + t);
            }
            for i in 0..core_len {
                v = b.attach(v, if i % 2 == 0 { first } else { other });
            }
            if two_bunches {
                for _ in 0..l()? {
                    b.attach(v, s + t);
                }
            } else {
                b.attach(v, s);
            }
        }
        Family::F => {
            let (k, l, m) = (k()?, l()?, m()?);
            for i in 0..k {
                let w = b.attach(0, 1);
                for _ in 1..if i + 1 == k { m } else { l } {
                    b.attach(w, 1);
                }
            }
        }
        Family::G => {
            let (k, m) = (k()?, m()?);
            if k < 2 || m < 2 {
                return Err(Error::OutOfRange("G: k and m must be at least 2".into()));
            }
            for _ in 0..k - 2 {
                let w = b.attach(0, 1);
                for _ in 1..m {
                    b.attach(w, 1);
                }
            }
            let w = b.attach(0, 2);
            for _ in 2..m {
                b.attach(w, 1);
            }
        }
        Family::H => {
            let (k, l) = (k()?, l()?);
            let w = b.attach(0, 1);
            let r = b.attach(w, 1);
            for (hub, count) in [(0, k), (r, l)] {
                for _ in 1..count {
                    let w = b.attach(hub, 1);
                    b.attach(w, 1);
                }
            }
        }
        Family::I => {
            let k = k()?;
            let w = b.attach(0, 1);
            let r = b.attach(w, 1);
            b.attach(w, 1);
            for hub in [0, r] {
                for _ in 1..k {
                    let w = b.attach(hub, 1);
                    b.attach(w, 1);
                    b.attach(w, 1);
                }
            }
        }
        Family::J => {
            let k = k()?;
            b.attach(0, 2);
            for _ in 0..2 {
                let w = b.attach(0, 1);
                let side = b.attach(w, 1);
                for _ in 0..k {
                    b.attach(side, 2);
                }
            }
        }
        sporadic => return Ok(sporadic_tree(sporadic).expect("every sporadic family is stored")),
    }
    b.build()
}

/// One record of the family catalog.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub family: Family,
    /// Admissible parameter values.
    pub parameters: &'static str,
    pub description: &'static str,
    pub examples: Vec<TreeCode>,
}

fn params(s: Option<Weight>, t: Option<Weight>, k: Option<Weight>, l: Option<Weight>, m: Option<Weight>) -> Params {
    Params { s, t, k, l, m }
}

/// Sample parameters for each series, used for catalog examples and tests.
pub fn sample_params(family: Family) -> Vec<Params> {
    let o = Some;
    match family {
        Family::A => vec![params(o(1), o(1), o(3), None, None), params(o(1), o(2), o(3), None, None), params(o(3), o(2), o(2), None, None)],
        Family::B => vec![params(o(1), o(2), o(4), None, None), params(o(2), o(3), o(5), None, None), params(o(1), o(3), o(6), None, None)],
        Family::C => vec![params(o(1), o(2), o(2), o(1), None), params(o(2), o(1), o(2), o(3), None), params(o(1), o(3), o(3), o(2), None)],
        Family::D => vec![params(o(1), o(1), None, None, None), params(o(1), o(2), None, None, None), params(o(2), o(3), None, None, None)],
        Family::E1 => vec![params(o(1), o(2), o(2), None, o(3)), params(o(2), o(1), o(3), None, o(3)), params(o(1), o(2), o(2), None, o(5))],
        Family::E2 => vec![params(o(1), o(2), o(2), None, o(2)), params(o(2), o(1), o(2), None, o(4)), params(o(1), o(3), o(3), None, o(4))],
        Family::E3 => vec![params(o(1), o(2), o(2), o(1), o(3)), params(o(2), o(1), o(2), o(2), o(3)), params(o(1), o(2), o(3), o(1), o(5))],
        Family::E4 => vec![params(o(1), o(2), o(2), o(1), o(2)), params(o(1), o(2), o(1), o(2), o(2)), params(o(1), o(3), o(2), o(2), o(4))],
        Family::F => vec![params(None, None, o(3), o(2), o(3)), params(None, None, o(3), o(3), o(1)), params(None, None, o(4), o(2), o(2))],
        Family::G => vec![params(None, None, o(3), None, o(4)), params(None, None, o(3), None, o(3)), params(None, None, o(4), None, o(2))],
        Family::H => vec![params(None, None, o(3), o(2), None), params(None, None, o(3), o(3), None), params(None, None, o(4), o(2), None)],
        Family::I => vec![params(None, None, o(2), None, None), params(None, None, o(3), None, None), params(None, None, o(4), None, None)],
        Family::J => vec![params(None, None, o(1), None, None), params(None, None, o(2), None, None), params(None, None, o(3), None, None)],
        _ => vec![Params::default()],
    }
}

/// The family catalog: one record per family with a few example codes.
pub fn catalog() -> Vec<CatalogEntry> {
    Family::ALL
        .iter()
        .map(|&family| {
            let (parameters, description) = describe(family);
            let examples = sample_params(family)
                .iter()
                .map(|p| canonical_code(&family_tree(family, p).expect("sample parameters are valid")))
                .collect();
            CatalogEntry { family, parameters, description, examples }
        })
        .collect()
}

fn describe(family: Family) -> (&'static str, &'static str) {
    match family {
        Family::A => ("s,t coprime; k >= 0", "star with k edges of weight s and one of weight t"),
        Family::B => ("s,t coprime; k >= 1 edges", "chain whose weights alternate s, t"),
        Family::C => ("s,t coprime; k,l >= 1", "diameter 3: middle edge t, k and l leaves of weight s at its ends"),
        Family::D => ("s,t coprime", "diameter 4: center with edges s and t; one leaf s+t beyond s, two leaves s beyond t"),
        Family::E1 => ("s,t coprime; k >= 1; m odd", "brush: alternating chain of length m, bunch of k leaves s+t at one end, solitary leaf at the other"),
        Family::E2 => ("s,t coprime; k >= 1; m even", "brush: alternating chain of length m, bunch of k leaves s+t at one end, solitary leaf at the other"),
        Family::E3 => ("s,t coprime; k >= l >= 1; m odd", "brush: alternating chain of length m with bunches of k and l leaves s+t"),
        Family::E4 => ("s,t coprime; k,l >= 1; m even", "brush: alternating chain of length m with bunches of k and l leaves s+t"),
        Family::F => ("k,l >= 1; m >= 1", "ordinary: black hub joined to k white vertices, all of degree l but one of degree m; all other black vertices are leaves"),
        Family::G => ("k >= 2; m >= 2", "black hub of degree k with one edge of weight 2; white vertices all of degree m; other black vertices are leaves"),
        Family::H => ("k >= l >= 1", "ordinary: white vertices of degree 2 and two black hubs of degrees k and l"),
        Family::I => ("k >= 2", "ordinary: white vertices of degree 3 and two black hubs of degree k"),
        Family::J => ("k >= 1", "white vertices of degree 2; hub with a leaf of weight 2 joined to two black vertices with k leaves of weight 2"),
        Family::K => ("-", "sporadic, 2^4 | 3^2 1^2"),
        Family::L => ("-", "sporadic, 2^4 1 | 3^3"),
        Family::M => ("-", "sporadic, 2^5 | 3^3 1"),
        Family::N => ("-", "sporadic, 2^6 | 3^4"),
        Family::O => ("-", "sporadic, 5^4 | 2^10"),
        Family::P => ("-", "sporadic, 5^3 | 3^5"),
        Family::Q => ("-", "sporadic, 3^3 1^5 | 2^7"),
        Family::R => ("-", "sporadic, 3^6 | 2^9"),
        Family::S => ("-", "sporadic, 3^4 2 | 2^7"),
        Family::T => ("-", "sporadic, 3^8 | 2^12"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surgery::scale_weights;

    fn code(s: &str) -> WeightedTree {
        s.parse::<TreeCode>().unwrap().to_tree()
    }

    fn tree(family: Family, p: Params) -> WeightedTree {
        family_tree(family, &p).unwrap()
    }

    fn ps(s: Weight, t: Weight, k: Weight) -> Params {
        Params { s: Some(s), t: Some(t), k: Some(k), ..Params::default() }
    }

    #[test]
    fn samples_are_unitrees_of_their_family() {
        for family in Family::ALL {
            for p in sample_params(family) {
                let t = family_tree(family, &p).unwrap();
                let tag = match_family(&t).unwrap();
                assert_eq!(tag.family, family, "{family} {p}");
                if !family.is_sporadic() {
                    assert_eq!(family_tree(family, &tag.params).map(|u| canonical_code(&u)), Ok(canonical_code(&t)));
                }
                assert!(is_unitree_bruteforce(&t.passport()), "{family} {p}");
            }
        }
    }

    #[test]
    fn star_predicate() {
        assert_eq!(star(&tree(Family::A, ps(1, 2, 3))), Some(ps(1, 2, 3)));
        assert!(star(&WeightedTree::star(Color::Black, &[2, 2])).is_some());
        assert!(star(&WeightedTree::single_edge(5)).is_some());
        assert!(star(&WeightedTree::star(Color::Black, &[1, 2, 3])).is_none());
        assert!(star(&WeightedTree::star(Color::White, &[1, 1, 2])).is_none());
        assert!(star(&WeightedTree::path(Color::Black, &[1, 1, 1])).is_none());
    }

    #[test]
    fn chain_predicate() {
        assert!(chain(&WeightedTree::path(Color::Black, &[1, 2, 1, 2])).is_some());
        assert!(chain(&WeightedTree::path(Color::White, &[3, 1, 3])).is_some());
        assert!(chain(&WeightedTree::path(Color::Black, &[4, 4, 4, 4, 4])).is_some());
        assert!(chain(&WeightedTree::path(Color::Black, &[1, 2, 3])).is_none());
        assert!(chain(&WeightedTree::path(Color::Black, &[1, 2, 1, 1])).is_none());
        assert!(chain(&WeightedTree::star(Color::Black, &[1, 1, 1])).is_none());
    }

    #[test]
    fn double_star_predicate() {
        let c = |s, t, k, l| tree(Family::C, Params { l: Some(l), ..ps(s, t, k) });
        assert!(double_star(&c(1, 2, 2, 1)).is_some());
        assert!(double_star(&c(3, 1, 1, 1)).is_some());
        assert!(double_star(&color_swap(&c(2, 5, 3, 4))).is_some());
        assert!(double_star(&WeightedTree::path(Color::Black, &[1, 2, 3])).is_none());
        assert!(double_star(&WeightedTree::star(Color::Black, &[1, 1, 1])).is_none());
        assert!(double_star(&code("root=B; x1 x2 x1 y1 x2 y2 y2 y1")).is_none());
    }

    #[test]
    fn brush_d_predicate() {
        for (s, t) in [(1, 1), (1, 2), (3, 1)] {
            assert_eq!(brush_d(&tree(Family::D, ps(s, t, 1))), Some(Params { s: Some(s), t: Some(t), ..Params::default() }));
        }
        // Wrong leaf weights, wrong center valence, wrong diameter.
        assert!(brush_d(&code("root=W; x1 x2 y2 y1 x2 x1 y1 x1 y1 y2")).is_none());
        assert!(brush_d(&tree(Family::E3, sample_params(Family::E3)[0])).is_none());
        assert!(brush_d(&WeightedTree::path(Color::White, &[1, 2, 1, 2])).is_none());
    }

    #[test]
    fn brush_e_predicate() {
        for family in [Family::E1, Family::E2, Family::E3, Family::E4] {
            for p in sample_params(family) {
                assert_eq!(brush_e(&tree(family, p)).map(|x| x.0), Some(family));
            }
        }
        // A bare alternating chain has no bunch.
        assert!(brush_e(&WeightedTree::path(Color::Black, &[1, 2, 1, 2, 1])).is_none());
        // Bunch weight differs from s+t.
        assert!(brush_e(&code("root=B; x1 x2 x1 y1 x1 y1 y2 y1 x4 y4")).is_none());
        // Interior vertex with a leaf.
        assert!(brush_e(&code("root=B; x1 x2 x1 y1 x1 x5 y5 y1 y2 y1")).is_none());
        assert!(brush_e(&WeightedTree::star(Color::Black, &[1, 2, 3])).is_none());
    }

    #[test]
    fn spider_predicates() {
        let f = |k, l, m| tree(Family::F, Params { k: Some(k), l: Some(l), m: Some(m), ..Params::default() });
        assert!(ordinary_spider(&f(3, 2, 3)).is_some());
        assert!(ordinary_spider(&f(2, 4, 4)).is_some());
        assert!(ordinary_spider(&f(5, 1, 3)).is_some());
        assert!(ordinary_spider(&scale_weights(&f(3, 2, 3), 2).unwrap()).is_none());
        // Two white degrees off the common value.
        assert!(ordinary_spider(&code("root=B; x1 x1 y1 x1 x1 x1 y1 y1 y1 x1 x1 x1 y1 x1 y1 y1 y1 y1")).is_none());
        assert!(ordinary_spider(&tree(Family::H, Params { k: Some(3), l: Some(2), ..Params::default() })).is_none());

        let g = |k, m| tree(Family::G, Params { k: Some(k), m: Some(m), ..Params::default() });
        assert!(spider_with_double_edge(&g(3, 3)).is_some());
        assert!(spider_with_double_edge(&g(4, 2)).is_some());
        assert!(spider_with_double_edge(&g(2, 5)).is_some());
        assert!(spider_with_double_edge(&f(3, 2, 3)).is_none());
        assert!(spider_with_double_edge(&color_swap(&g(3, 3))).is_none());
        assert!(spider_with_double_edge(&WeightedTree::star(Color::Black, &[2, 2, 1])).is_none());
    }

    #[test]
    fn two_hub_predicates() {
        let h = |k, l| tree(Family::H, Params { k: Some(k), l: Some(l), ..Params::default() });
        assert!(two_stars(&h(3, 2)).is_some());
        assert!(two_stars(&h(4, 4)).is_some());
        assert!(two_stars(&h(5, 2)).is_some());
        assert!(two_stars(&tree(Family::I, ps(1, 1, 2))).is_none());
        assert!(two_stars(&scale_weights(&h(3, 2), 3).unwrap()).is_none());
        assert!(two_stars(&WeightedTree::path(Color::Black, &[1; 8])).is_none());

        let i = |k| tree(Family::I, Params { k: Some(k), ..Params::default() });
        assert!(two_stars_of_triangles(&i(2)).is_some());
        assert!(two_stars_of_triangles(&i(3)).is_some());
        assert!(two_stars_of_triangles(&i(4)).is_some());
        assert!(two_stars_of_triangles(&h(3, 2)).is_none());
        // Hubs of unequal degree.
        let mut b = i(2).to_builder();
        let w = b.attach(0, 1);
        b.attach(w, 1);
        b.attach(w, 1);
        assert!(two_stars_of_triangles(&b.build().unwrap()).is_none());
        assert!(two_stars_of_triangles(&WeightedTree::star(Color::White, &[1, 1, 1])).is_none());
    }

    #[test]
    fn three_centers_predicate() {
        for k in 1..=3 {
            assert_eq!(three_centers(&tree(Family::J, ps(1, 1, k))), Some(Params { k: Some(k), ..Params::default() }));
        }
        assert!(three_centers(&WeightedTree::path(Color::Black, &[1, 1, 1, 1])).is_none());
        // Sides with different numbers of leaves.
        assert!(three_centers(&code("root=B; x1 x1 x1 x1 x2 y2 y1 y1 x2 y2 x2 y2 y1 y1 x2 y2")).is_none());
        assert!(three_centers(&scale_weights(&tree(Family::J, ps(1, 1, 2)), 2).unwrap()).is_none());
    }

    #[test]
    fn normalization_flags() {
        let t = tree(Family::C, Params { l: Some(3), ..ps(2, 1, 2) });
        let base = match_family(&t).unwrap();
        assert_eq!((base.swapped, base.scale), (false, 1));
        // The colors of the two ends trade places.
        let swapped = match_family(&color_swap(&t)).unwrap();
        assert_eq!((swapped.family, swapped.params), (base.family, Params { k: base.params.l, l: base.params.k, ..base.params }));
        let scaled = match_family(&scale_weights(&t, 4).unwrap()).unwrap();
        assert_eq!((scaled.family, scaled.params, scaled.scale), (base.family, base.params, 4));
        let j = match_family(&color_swap(&tree(Family::J, ps(1, 1, 2)))).unwrap();
        assert_eq!((j.family, j.swapped), (Family::J, true));
    }

    #[test]
    fn spec_examples() {
        let a = match_family(&WeightedTree::star(Color::Black, &[2, 2, 2, 3])).unwrap();
        assert_eq!((a.family, a.params), (Family::A, ps(2, 3, 3)));
        let o_passport: Passport = "5^4|2^10".parse().unwrap();
        let o = unique_tree(&o_passport).unwrap();
        assert_eq!(match_family(&o).unwrap().family, Family::O);
        assert!(is_unitree_bruteforce(&o_passport));
        let six: Passport = "7 1|2^3 1^2".parse().unwrap();
        assert!(!is_unitree_bruteforce(&six));
        for t in crate::enumerate::enumerate_passport(&six) {
            assert_eq!(match_family(&t), None);
        }
        for n in 1..=6 {
            assert!(is_unitree_bruteforce(&Passport::from_parts(&[n], &vec![1; n as usize])));
        }
        assert!(!is_unitree_bruteforce(&"4 2|2^3".parse().unwrap()));
    }

    #[test]
    fn bad_parameters() {
        assert!(family_tree(Family::A, &Params::default()).is_err());
        assert!(family_tree(Family::E1, &Params { m: Some(2), ..ps(1, 2, 1) }).is_err());
        assert!(family_tree(Family::G, &Params { k: Some(1), m: Some(2), ..Params::default() }).is_err());
    }

    #[test]
    fn catalog_has_every_family() {
        let cat = catalog();
        assert_eq!(cat.len(), 23);
        assert!(cat.iter().all(|e| !e.examples.is_empty()));
    }
}
