//! Exhaustive generation of all trees with a given passport.
//!
//! The search writes edge-rooted codes token by token. Each open vertex keeps a
//! partial degree; a vertex may only be closed when its degree equals a part
//! still unassigned for its color. Partial states are pruned by a matching test
//! between open vertices and unassigned parts and by the weight budget. A
//! finished code is kept only if no other rooting of its tree gives a smaller
//! code, so every isomorphism class appears exactly once.

use rayon::prelude::*;

use crate::code::{is_minimal_rooting, tree_from_tokens, Token, TreeCode};
use crate::passport::Passport;
use crate::tree::{Color, WeightedTree};
use crate::Weight;

/// All isomorphism classes of trees with this passport, sorted by canonical code.
/// Runs on the current rayon pool.
pub fn enumerate_passport(passport: &Passport) -> Vec<WeightedTree> {
    enumerate_codes(passport).iter().map(TreeCode::to_tree).collect()
}

/// Like [`enumerate_passport`] on a dedicated pool of `jobs` threads
/// (`jobs <= 1` runs sequentially). The output does not depend on `jobs`.
pub fn enumerate_passport_with(passport: &Passport, jobs: usize) -> Vec<WeightedTree> {
    enumerate_codes_with(passport, jobs).iter().map(TreeCode::to_tree).collect()
}

pub fn enumerate_codes(passport: &Passport) -> Vec<TreeCode> {
    finish(run(passport, true))
}

pub fn enumerate_codes_with(passport: &Passport, jobs: usize) -> Vec<TreeCode> {
    if jobs <= 1 {
        return finish(run(passport, false));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    finish(pool.install(|| run(passport, true)))
}

/// Number of isomorphism classes with this passport.
pub fn count_trees(passport: &Passport) -> usize {
    run(passport, true).len()
}

/// The tree with this passport when there is exactly one. Stops searching as
/// soon as a second tree turns up.
pub fn unique_tree(passport: &Passport) -> Option<WeightedTree> {
    let mut found = run_capped(passport, 2);
    (found.len() == 1).then(|| tree_from_tokens(Color::Black, &found.pop().unwrap()))
}

/// True iff some tree has this passport. Stops at the first one.
pub fn has_tree(passport: &Passport) -> bool {
    !run_capped(passport, 1).is_empty()
}

/// Every tree of total weight `n`, grouped by passport in `Passport::all` order.
pub fn enumerate_weight(n: Weight) -> Vec<(Passport, Vec<WeightedTree>)> {
    Passport::all(n)
        .into_par_iter()
        .map(|p| {
            let trees = enumerate_passport(&p);
            (p, trees)
        })
        .collect()
}

fn finish(mut codes: Vec<Vec<Token>>) -> Vec<TreeCode> {
    codes.sort_unstable();
    codes.into_iter().map(|t| TreeCode::new(Color::Black, t).unwrap()).collect()
}

fn seeds(passport: &Passport, cap: usize) -> Vec<Search> {
    if passport.excess() < 0 {
        return Vec::new();
    }
    let min_part = passport.black().smallest().min(passport.white().smallest());
    let mut seeds = Vec::new();
    for w0 in 1..=min_part {
        let mut s = Search::new(passport, w0, cap);
        s.open_child(w0);
        if s.feasible() {
            seeds.push(s);
        }
    }
    seeds
}

fn run_capped(passport: &Passport, cap: usize) -> Vec<Vec<Token>> {
    let mut out = Vec::new();
    for mut s in seeds(passport, cap) {
        s.dfs(usize::MAX, &mut out, &mut Vec::new());
    }
    out
}

fn run(passport: &Passport, parallel: bool) -> Vec<Vec<Token>> {
    if !parallel {
        return run_capped(passport, usize::MAX);
    }
    let seeds = seeds(passport, usize::MAX);
    // Expand to a frontier of partial codes and finish each one independently.
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    let split = (2 * passport.edge_count()).min(12);
    for mut s in seeds {
        s.dfs(split, &mut out, &mut frontier);
    }
    let rest: Vec<Vec<Vec<Token>>> = frontier
        .into_par_iter()
        .map(|mut s| {
            let mut found = Vec::new();
            s.dfs(usize::MAX, &mut found, &mut Vec::new());
            found
        })
        .collect();
    out.extend(rest.into_iter().flatten());
    out
}

#[derive(Clone, Copy, Debug)]
struct OpenVertex {
    color: Color,
    partial: Weight,
    /// Weight of the edge to the parent; zero for the root vertex.
    up: Weight,
}

#[derive(Clone, Debug)]
struct Search {
    total: Weight,
    min_weight: Weight,
    /// `left[c][d]`: unassigned parts of size `d` for color `c`.
    left: [Vec<u32>; 2],
    left_count: [usize; 2],
    max_part: [Weight; 2],
    open: Vec<OpenVertex>,
    open_count: [usize; 2],
    placed: Weight,
    tokens: Vec<Token>,
    /// Stop once this many codes have been accepted.
    cap: usize,
}

fn idx(c: Color) -> usize {
    match c {
        Color::Black => 0,
        Color::White => 1,
    }
}

impl Search {
    fn new(passport: &Passport, min_weight: Weight, cap: usize) -> Search {
        let counts = |p: &crate::Partition| {
            let mut v = vec![0u32; p.largest() as usize + 1];
            for &x in p.parts() {
                v[x as usize] += 1;
            }
            v
        };
        Search {
            total: passport.total(),
            min_weight,
            left: [counts(passport.black()), counts(passport.white())],
            left_count: [passport.p(), passport.q()],
            max_part: [passport.black().largest(), passport.white().largest()],
            open: vec![OpenVertex { color: Color::Black, partial: 0, up: 0 }],
            open_count: [1, 0],
            placed: 0,
            tokens: Vec::with_capacity(2 * passport.edge_count()),
            cap,
        }
    }

    fn open_child(&mut self, w: Weight) {
        let top = self.open.last_mut().unwrap();
        top.partial += w;
        let color = top.color.flip();
        self.open.push(OpenVertex { color, partial: w, up: w });
        self.open_count[idx(color)] += 1;
        self.placed += w;
        self.tokens.push(Token::Open(w));
    }

    fn undo_open(&mut self) {
        let child = self.open.pop().unwrap();
        self.open_count[idx(child.color)] -= 1;
        self.placed -= child.up;
        self.tokens.pop();
        self.open.last_mut().unwrap().partial -= child.up;
    }

    fn close_top(&mut self) -> OpenVertex {
        let v = self.open.pop().unwrap();
        let c = idx(v.color);
        self.left[c][v.partial as usize] -= 1;
        self.left_count[c] -= 1;
        self.open_count[c] -= 1;
        self.tokens.push(Token::Close(v.up));
        v
    }

    fn undo_close(&mut self, v: OpenVertex) {
        let c = idx(v.color);
        self.left[c][v.partial as usize] += 1;
        self.left_count[c] += 1;
        self.open_count[c] += 1;
        self.tokens.pop();
        self.open.push(v);
    }

    fn can_close(&self, v: &OpenVertex) -> bool {
        let row = &self.left[idx(v.color)];
        (v.partial as usize) < row.len() && row[v.partial as usize] > 0
    }

    /// Necessary conditions for the partial code to extend to a full tree.
    fn feasible(&self) -> bool {
        if self.open_count[0] > self.left_count[0] || self.open_count[1] > self.left_count[1] {
            return false;
        }
        let remaining = self.total - self.placed;
        let future = (self.left_count[0] - self.open_count[0]) + (self.left_count[1] - self.open_count[1]);
        if remaining < future as Weight * self.min_weight {
            return false;
        }
        for c in [Color::Black, Color::White] {
            let ci = idx(c);
            let mut partials: Vec<Weight> =
                self.open.iter().filter(|v| v.color == c).map(|v| v.partial).collect();
            partials.sort_unstable_by(|a, b| b.cmp(a));
            // Largest open vertices against largest unassigned parts.
            let row = &self.left[ci];
            let mut part = row.len();
            let mut avail = 0u32;
            for &d in &partials {
                while avail == 0 {
                    if part == 0 {
                        return false;
                    }
                    part -= 1;
                    avail = row[part];
                }
                if (part as Weight) < d {
                    return false;
                }
                avail -= 1;
            }
        }
        true
    }

    /// Extends the current prefix. Prefixes reaching `split` tokens are handed to
    /// `frontier` instead of being explored.
    fn dfs(&mut self, split: usize, out: &mut Vec<Vec<Token>>, frontier: &mut Vec<Search>) {
        if out.len() >= self.cap {
            return;
        }
        if self.tokens.len() >= split {
            frontier.push(self.clone());
            return;
        }
        let remaining = self.total - self.placed;
        let top = *self.open.last().unwrap();
        if self.open.len() == 1 {
            if remaining == 0 {
                if self.left_count == [1, 0] && self.can_close(&top) {
                    self.accept(out);
                }
                return;
            }
        } else if self.can_close(&top) {
            let v = self.close_top();
            if self.feasible() {
                self.dfs(split, out, frontier);
            }
            self.undo_close(v);
        }
        let child = idx(top.color.flip());
        if remaining == 0 || self.left_count[child] <= self.open_count[child] {
            return;
        }
        let cap = remaining
            .min(self.max_part[idx(top.color)].saturating_sub(top.partial))
            .min(self.max_part[child]);
        for w in self.min_weight..=cap {
            self.open_child(w);
            if self.feasible() {
                self.dfs(split, out, frontier);
            }
            self.undo_open();
        }
    }

    fn accept(&self, out: &mut Vec<Vec<Token>>) {
        let tree = tree_from_tokens(Color::Black, &self.tokens);
        if is_minimal_rooting(&tree, &self.tokens) {
            out.push(self.tokens.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{automorphism_order, canonical_code};

    #[test]
    fn star_is_alone() {
        for n in 1..=7 {
            let p = Passport::from_parts(&[n], &vec![1; n as usize]);
            assert_eq!(enumerate_passport(&p).len(), 1);
        }
    }

    #[test]
    fn six_trees_for_seven_one() {
        let p = Passport::from_parts(&[7, 1], &[2, 2, 2, 1, 1]);
        let trees = enumerate_passport(&p);
        assert_eq!(trees.len(), 6);
        let mut codes: Vec<_> = trees.iter().map(canonical_code).collect();
        codes.dedup();
        assert_eq!(codes.len(), 6);
        for t in &trees {
            assert_eq!(t.passport(), p);
        }
    }

    #[test]
    fn unique_tree_stops_early() {
        assert!(unique_tree(&Passport::from_parts(&[7, 1], &[2, 2, 2, 1, 1])).is_none());
        assert!(unique_tree(&Passport::from_parts(&[4, 2], &[2, 2, 2])).is_none());
        assert!(!has_tree(&Passport::from_parts(&[4, 2], &[2, 2, 2])));
        assert!(has_tree(&Passport::from_parts(&[7, 1], &[2, 2, 2, 1, 1])));
        let o = unique_tree(&Passport::from_parts(&[5; 4], &[2; 10])).unwrap();
        assert_eq!(o.edge_count(), 13);
    }

    #[test]
    fn degenerate_passport_is_empty() {
        assert!(enumerate_passport(&Passport::from_parts(&[1, 1], &[1, 1])).is_empty());
        assert!(enumerate_passport(&Passport::from_parts(&[4, 2], &[2, 2, 2])).is_empty());
    }

    #[test]
    fn output_is_independent_of_jobs() {
        let p = Passport::from_parts(&[3, 3, 1, 1], &[2, 2, 2, 1, 1]);
        let a = enumerate_codes_with(&p, 1);
        let b = enumerate_codes_with(&p, 4);
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }

    #[test]
    fn small_rooted_totals() {
        // Brute-force rooted counts against the closed form for small weights.
        let expected = [1u64, 1, 3, 10, 36, 137];
        for n in 1..=5u64 {
            let total: usize = enumerate_weight(n)
                .iter()
                .flat_map(|(_, ts)| ts.iter())
                .map(|t| t.edge_count() / automorphism_order(t))
                .sum();
            assert_eq!(total as u64, expected[n as usize]);
        }
    }
}
