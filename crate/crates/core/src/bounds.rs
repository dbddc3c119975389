//! Degree bounds for `P - Q`, realizability of passports by trees, and an
//! explicit witness tree built from a forest by repeated stitching.

use std::fmt;

use crate::code::{canonical_code, canonical_form, TreeCode};
use crate::error::{Error, Result};
use crate::passport::Passport;
use crate::surgery::{scale_weights, sts_stitch};
use crate::tree::{Color, TreeBuilder, WeightedTree};
use crate::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// The tree bound `(n+1) - (p+q)` is attained.
    Main,
    /// Too many parts for a tree; the bound `(d-1) n / d` applies.
    Weak,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Main => "MAIN",
            Regime::Weak => "WEAK",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: Weight,
    pub p: usize,
    pub q: usize,
    pub d: Weight,
    pub regime: Regime,
    pub min_deg_r: Weight,
}

/// Least possible degree of `P - Q` for coprime `P`, `Q` with root multiplicities
/// given by the passport.
pub fn min_deg_r(passport: &Passport) -> BoundReport {
    let n = passport.total();
    let (p, q) = (passport.p(), passport.q());
    let d = passport.gcd();
    let (regime, min_deg_r) = if is_realizable_as_tree(passport) {
        (Regime::Main, passport.excess() as Weight)
    } else {
        (Regime::Weak, (d - 1) * n / d)
    };
    BoundReport { n, p, q, d, regime, min_deg_r }
}

/// True iff some weighted tree has this passport: `p + q <= n/d + 1`.
pub fn is_realizable_as_tree(passport: &Passport) -> bool {
    let d = passport.gcd();
    (passport.p() + passport.q()) as Weight <= passport.total() / d + 1
}

/// A forest with the given vertex degrees. One vertex per part; equal leftover
/// degrees are joined by a single edge, otherwise the largest black and white
/// leftovers are joined by an edge of the smaller size.
pub fn construct_forest(passport: &Passport) -> Vec<WeightedTree> {
    let mut b = TreeBuilder::empty();
    let mut left: Vec<(usize, Weight)> = Vec::new();
    for (color, part) in [(Color::Black, passport.black()), (Color::White, passport.white())] {
        for &x in part.parts() {
            left.push((b.add_vertex(color), x));
        }
    }
    let blacks = passport.p();
    loop {
        let largest = |range: std::ops::Range<usize>, left: &[(usize, Weight)]| {
            range.filter(|&i| left[i].1 > 0).max_by_key(|&i| (left[i].1, std::cmp::Reverse(i)))
        };
        let (Some(bi), Some(wi)) = (largest(0..blacks, &left), largest(blacks..left.len(), &left)) else {
            break;
        };
        // Largest value left on both sides, if any.
        let mut equal = None;
        for i in 0..blacks {
            let x = left[i].1;
            if x == 0 || equal.is_some_and(|(_, _, y)| y >= x) {
                continue;
            }
            if let Some(j) = (blacks..left.len()).find(|&j| left[j].1 == x) {
                equal = Some((i, j, x));
            }
        }
        let (i, j, w) = equal.unwrap_or((bi, wi, left[bi].1.min(left[wi].1)));
        let (u, v) = (left[i].0, left[j].0);
        let e = b.add_edge(u, v, w);
        let mut rot = b.rotation(u).to_vec();
        rot.push(e);
        b.set_rotation(u, rot);
        let mut rot = b.rotation(v).to_vec();
        rot.push(e);
        b.set_rotation(v, rot);
        left[i].1 -= w;
        left[j].1 -= w;
    }
    b.components().expect("forest components are trees")
}

/// One tree with exactly this passport, built by reducing by the common divisor,
/// constructing a forest, stitching its components together and scaling back.
pub fn construct_witness(passport: &Passport) -> Result<WeightedTree> {
    if !is_realizable_as_tree(passport) {
        return Err(Error::NotRealizable(format!(
            "{passport}: p+q = {} exceeds n/d+1 = {}",
            passport.p() + passport.q(),
            passport.total() / passport.gcd() + 1
        )));
    }
    let d = passport.gcd();
    let mut parts: Vec<(TreeCode, WeightedTree)> =
        construct_forest(&passport.reduced().0).iter().map(|t| (canonical_code(t), canonical_form(t))).collect();
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    while parts.len() > 1 {
        let Some((i, j, e, f)) = first_stitch(&parts) else {
            // Every edge has the same weight, which forces d > 1 after reduction.
            unreachable!("realizable passport left a forest with uniform weights");
        };
        let joined = sts_stitch(&parts[i].1, e, &parts[j].1, f)?;
        parts.remove(j);
        parts.remove(i);
        parts.push((canonical_code(&joined), canonical_form(&joined)));
        parts.sort_by(|a, b| a.0.cmp(&b.0));
    }
    let tree = parts.pop().expect("nonempty forest").1;
    scale_weights(&tree, d)
}

/// First pair of components with edges of different weights, and within it the
/// pair of edges with the smallest `(s, u)` then smallest indices.
fn first_stitch(parts: &[(TreeCode, WeightedTree)]) -> Option<(usize, usize, usize, usize)> {
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (a, b) = (&parts[i].1, &parts[j].1);
            let mut best: Option<((Weight, Weight), usize, usize)> = None;
            for e in 0..a.edge_count() {
                for f in 0..b.edge_count() {
                    let (x, y) = (a.weight(e), b.weight(f));
                    if x == y {
                        continue;
                    }
                    let key = ((x.min(y), x.max(y)), e, f);
                    if best.is_none_or(|b| key < b) {
                        best = Some(key);
                    }
                }
            }
            if let Some((_, e, f)) = best {
                return Some((i, j, e, f));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Partition;

    fn pp(s: &str) -> Passport {
        s.parse().unwrap()
    }

    fn forest_degrees(forest: &[WeightedTree]) -> (Partition, Partition) {
        let collect = |c: Color| {
            let parts: Vec<Weight> = forest.iter().flat_map(|t| t.degrees_of(c).parts().to_vec()).collect();
            Partition::new(parts).unwrap()
        };
        (collect(Color::Black), collect(Color::White))
    }

    #[test]
    fn report_examples() {
        let r = min_deg_r(&pp("3^2|2^3"));
        assert_eq!((r.regime, r.min_deg_r), (Regime::Main, 2));
        let r = min_deg_r(&pp("4 2|2^3"));
        assert_eq!((r.regime, r.min_deg_r, r.d), (Regime::Weak, 3, 2));
        let r = min_deg_r(&pp("1|1"));
        assert_eq!((r.regime, r.min_deg_r), (Regime::Main, 0));
    }

    #[test]
    fn realizability_examples() {
        assert!(!is_realizable_as_tree(&pp("4 2|2^3")));
        assert!(is_realizable_as_tree(&pp("3^2|2^3")));
        assert!(is_realizable_as_tree(&pp("2|1^2")));
        assert!(!is_realizable_as_tree(&pp("1^2|1^2")));
    }

    #[test]
    fn forests() {
        let f = construct_forest(&pp("2^2|2^2"));
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|t| t.edge_count() == 1 && t.weight(0) == 2));
        let p = pp("4 2|2^3");
        let f = construct_forest(&p);
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|t| t.weight_gcd() % 2 == 0));
        assert_eq!(forest_degrees(&f), (p.black().clone(), p.white().clone()));
    }

    #[test]
    fn witnesses() {
        assert_eq!(construct_witness(&pp("1|1")).unwrap().edge_count(), 1);
        for s in ["3^2|2^3", "5^2 2^3 1^2|7 6 4 1", "6^2|4^3", "9 3|6 6", "7 1|2^3 1^2"] {
            let p = pp(s);
            let t = construct_witness(&p).unwrap();
            assert_eq!(t.passport(), p, "{s}");
        }
        assert!(matches!(construct_witness(&pp("4 2|2^3")), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn witness_excess_is_the_bound() {
        for s in ["3^2|2^3", "3^4|2^6", "6^2|4^3", "5^2 2^3 1^2|7 6 4 1"] {
            let p = pp(s);
            let t = construct_witness(&p).unwrap();
            let excess: Weight = t.edges().iter().map(|e| e.weight - 1).sum();
            assert_eq!(excess, min_deg_r(&p).min_deg_r);
        }
    }
}
