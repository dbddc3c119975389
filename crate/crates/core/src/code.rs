//! Edge-rooted traversal codes and canonical forms.
//!
//! A rooting picks an edge and orients it from its black end. The walk starts
//! on the root edge, goes around the tree clockwise, and emits `x<w>` the first
//! time an edge is crossed and `y<w>` the second time. The canonical code is the
//! least such word over all rootings, comparing tokens by kind (`x` before `y`)
//! and then by weight.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::partition::parse_positive;
use crate::tree::{Color, TreeBuilder, WeightedTree};
use crate::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    /// First crossing of an edge (`x<w>`).
    Open(Weight),
    /// Second crossing of an edge (`y<w>`).
    Close(Weight),
}

impl Token {
    pub fn weight(self) -> Weight {
        match self {
            Token::Open(w) | Token::Close(w) => w,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Open(w) => write!(f, "x{w}"),
            Token::Close(w) => write!(f, "y{w}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeCode {
    root: Color,
    tokens: Vec<Token>,
}

impl TreeCode {
    /// Checks that `tokens` form a balanced word with matching weights.
    pub fn new(root: Color, tokens: Vec<Token>) -> Result<Self> {
        let mut stack = Vec::new();
        for (i, &t) in tokens.iter().enumerate() {
            match t {
                Token::Open(0) | Token::Close(0) => {
                    return Err(ParseError::new(t.to_string(), "a positive weight").into())
                }
                Token::Open(w) => stack.push(w),
                Token::Close(w) => match stack.pop() {
                    Some(open) if open == w => {}
                    Some(_) => {
                        return Err(ParseError::new(
                            format!("{t} at position {i}"),
                            "a y token whose weight matches the innermost open x token",
                        )
                        .into())
                    }
                    None => {
                        return Err(ParseError::new(format!("{t} at position {i}"), "a preceding unmatched x token").into())
                    }
                },
            }
        }
        if tokens.is_empty() {
            return Err(ParseError::new("", "at least one edge").into());
        }
        if !stack.is_empty() {
            return Err(ParseError::new("end of code", "a y token for every x token").into());
        }
        Ok(TreeCode { root, tokens })
    }

    pub fn root(&self) -> Color {
        self.root
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn edge_count(&self) -> usize {
        self.tokens.len() / 2
    }

    /// Rebuilds the tree. Edge `i` is the edge opened by the `i`-th `x` token and
    /// vertex 0 is the root vertex.
    pub fn to_tree(&self) -> WeightedTree {
        tree_from_tokens(self.root, &self.tokens)
    }
}

pub(crate) fn tree_from_tokens(root: Color, tokens: &[Token]) -> WeightedTree {
    let mut b = TreeBuilder::new(root);
    // Rotations are collected clockwise and reversed at the end.
    let mut clockwise: Vec<Vec<usize>> = vec![Vec::new()];
    let mut stack = vec![0usize];
    let mut next_edge = 0;
    for &t in tokens {
        match t {
            Token::Open(w) => {
                let v = *stack.last().unwrap();
                let child = b.attach(v, w);
                clockwise[v].push(next_edge);
                clockwise.push(vec![next_edge]);
                next_edge += 1;
                stack.push(child);
            }
            Token::Close(_) => {
                stack.pop();
            }
        }
    }
    for (v, cw) in clockwise.into_iter().enumerate() {
        b.set_rotation(v, cw.into_iter().rev().collect());
    }
    b.build().expect("balanced code yields a tree")
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root={};", self.root.letter())?;
        for t in &self.tokens {
            write!(f, " {t}")?;
        }
        Ok(())
    }
}

const TOKEN_RULE: &str = "a token `x<w>` or `y<w>` with a positive weight";

impl FromStr for TreeCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, body) = s
            .split_once(';')
            .ok_or_else(|| ParseError::new(s, "a header `root=B;` or `root=W;`"))?;
        let root = match head.trim() {
            "root=B" => Color::Black,
            "root=W" => Color::White,
            other => return Err(ParseError::new(other, "a header `root=B;` or `root=W;`").into()),
        };
        let mut tokens = Vec::new();
        for tok in body.split_whitespace() {
            let (kind, digits) = tok.split_at(tok.chars().next().map_or(0, char::len_utf8));
            let w = parse_positive(digits, TOKEN_RULE).map_err(|_| ParseError::new(tok, TOKEN_RULE))?;
            tokens.push(match kind {
                "x" => Token::Open(w),
                "y" => Token::Close(w),
                _ => return Err(ParseError::new(tok, TOKEN_RULE).into()),
            });
        }
        TreeCode::new(root, tokens)
    }
}

struct Frame {
    vertex: usize,
    entry: usize,
    step: usize,
    close: Option<Weight>,
}

/// Lazily emits the code of one rooting.
pub struct RootedWalk<'a> {
    tree: &'a WeightedTree,
    stack: Vec<Frame>,
    pending: Option<Token>,
}

impl<'a> RootedWalk<'a> {
    /// Walk rooted at `edge`, oriented away from its endpoint of color `from`.
    pub fn new(tree: &'a WeightedTree, edge: usize, from: Color) -> Self {
        let e = tree.edge(edge);
        let u = e.end(from);
        let v = e.end(from.flip());
        let stack = vec![
            Frame { vertex: u, entry: tree.slot(edge, u), step: 1, close: None },
            Frame { vertex: v, entry: tree.slot(edge, v), step: 1, close: Some(e.weight) },
        ];
        RootedWalk { tree, stack, pending: Some(Token::Open(e.weight)) }
    }
}

impl Iterator for RootedWalk<'_> {
    type Item = Token;

    fn next(&mut self) -> Option<Token> {
        if let Some(t) = self.pending.take() {
            return Some(t);
        }
        loop {
            let frame = self.stack.last_mut()?;
            let rot = self.tree.rotation(frame.vertex);
            if frame.step < rot.len() {
                let f = rot[(frame.entry + rot.len() - frame.step) % rot.len()];
                frame.step += 1;
                let v = frame.vertex;
                let edge = self.tree.edge(f);
                let w = edge.other(v);
                self.stack.push(Frame { vertex: w, entry: self.tree.slot(f, w), step: 1, close: Some(edge.weight) });
                return Some(Token::Open(edge.weight));
            }
            let done = self.stack.pop().unwrap();
            if let Some(w) = done.close {
                return Some(Token::Close(w));
            }
        }
    }
}

/// Code of the rooting at `edge` oriented from its black end.
pub fn rooted_code(tree: &WeightedTree, edge: usize) -> TreeCode {
    TreeCode { root: Color::Black, tokens: RootedWalk::new(tree, edge, Color::Black).collect() }
}

/// The code of every edge rooting, indexed by edge.
pub fn all_rooted_codes(tree: &WeightedTree) -> Vec<Vec<Token>> {
    (0..tree.edge_count()).map(|e| RootedWalk::new(tree, e, Color::Black).collect()).collect()
}

/// Least code over all rootings together with the number of rootings attaining it.
pub fn canonical_with_multiplicity(tree: &WeightedTree) -> (TreeCode, usize) {
    let codes = all_rooted_codes(tree);
    let min = codes.iter().min().unwrap();
    let count = codes.iter().filter(|c| *c == min).count();
    (TreeCode { root: Color::Black, tokens: min.clone() }, count)
}

pub fn canonical_code(tree: &WeightedTree) -> TreeCode {
    canonical_with_multiplicity(tree).0
}

/// The tree rebuilt from its canonical code, so edge indices are canonical positions.
pub fn canonical_form(tree: &WeightedTree) -> WeightedTree {
    canonical_code(tree).to_tree()
}

pub fn is_isomorphic(a: &WeightedTree, b: &WeightedTree) -> bool {
    a.passport() == b.passport() && canonical_code(a) == canonical_code(b)
}

/// Order of the (cyclic) group of color- and weight-preserving plane automorphisms.
pub fn automorphism_order(tree: &WeightedTree) -> usize {
    canonical_with_multiplicity(tree).1
}

/// True when no rooting of `tree` gives a smaller code than `tokens`, which must
/// be the code of one of its rootings. Aborts each comparison at the first difference.
pub fn is_minimal_rooting(tree: &WeightedTree, tokens: &[Token]) -> bool {
    for e in 0..tree.edge_count() {
        if tree.weight(e) > tokens[0].weight() {
            continue;
        }
        let mut walk = RootedWalk::new(tree, e, Color::Black);
        for &t in tokens {
            match walk.next().unwrap().cmp(&t) {
                Ordering::Less => return false,
                Ordering::Greater => break,
                Ordering::Equal => {}
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_code() {
        let t = WeightedTree::single_edge(1);
        assert_eq!(canonical_code(&t).to_string(), "root=B; x1 y1");
    }

    #[test]
    fn text_round_trip() {
        let c: TreeCode = "root=B; x2 x1 y1 y2".parse().unwrap();
        assert_eq!(c.to_string(), "root=B; x2 x1 y1 y2");
        let t = c.to_tree();
        assert_eq!(t.edge_count(), 2);
        assert_eq!(rooted_code(&t, 0), c);
    }

    #[test]
    fn rejects_malformed_codes() {
        for bad in [
            "x1 y1",
            "root=Q; x1 y1",
            "root=B;",
            "root=B; x1",
            "root=B; y1 x1",
            "root=B; x1 y2",
            "root=B; x0 y0",
            "root=B; x01 y01",
            "root=B; z1 y1",
        ] {
            assert!(bad.parse::<TreeCode>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn white_root_swaps_roles() {
        let c: TreeCode = "root=W; x3 y3 x1 y1".parse().unwrap();
        let t = c.to_tree();
        assert_eq!(t.color(0), Color::White);
        assert_eq!(t.passport().to_string(), "3 1|4");
    }

    #[test]
    fn symmetric_path_has_one_code() {
        let t = WeightedTree::path(Color::Black, &[1, 1]);
        let codes = all_rooted_codes(&t);
        assert_eq!(codes[0], codes[1]);
        assert_eq!(automorphism_order(&t), 2);
    }

    #[test]
    fn star_rotation_is_isomorphism() {
        let a = WeightedTree::star(Color::Black, &[2, 1, 1]);
        let b = WeightedTree::star(Color::Black, &[1, 2, 1]);
        assert!(is_isomorphic(&a, &b));
        assert_eq!(automorphism_order(&WeightedTree::star(Color::White, &[3; 5])), 5);
    }

    #[test]
    fn chiral_star_differs_from_mirror() {
        let t = WeightedTree::star(Color::Black, &[1, 2, 3]);
        assert!(!is_isomorphic(&t, &t.reflected()));
        assert!(is_isomorphic(&t, &t.reflected().reflected()));
    }

    #[test]
    fn canonical_form_reparses() {
        let t = WeightedTree::path(Color::White, &[1, 2, 4, 1]);
        let c = canonical_code(&t);
        let again = canonical_code(&c.to_tree());
        assert_eq!(c, again);
        assert!(is_minimal_rooting(&t, c.tokens()));
    }
}
