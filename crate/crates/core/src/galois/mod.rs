//! Monodromy of weighted trees and the Galois invariants read from it: group
//! order, primitivity, self-duality and symmetry, combined into signatures that
//! split a passport's trees into unions of Galois orbits.

mod perm;

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

pub use perm::{count_conjugators, is_transitive, minimal_block, orbit, smallest_block, Perm, StabilizerChain};

use crate::code::{automorphism_order, canonical_code, canonical_form, TreeCode};
use crate::counting::factorial;
use crate::enumerate::enumerate_passport;
use crate::error::{Error, Result};
use crate::passport::Passport;
use crate::tree::{Color, WeightedTree};

/// Permutations on edge labels of the map: `a` turns counterclockwise around
/// black vertices, `b` around white vertices and `c = (ab)^-1` around faces,
/// where `ab` applies `a` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyModel {
    pub a: Perm,
    pub b: Perm,
    pub c: Perm,
}

impl MonodromyModel {
    pub fn from_pair(a: Perm, b: Perm) -> MonodromyModel {
        assert_eq!(a.degree(), b.degree(), "permutations of different degrees");
        let c = a.then(&b).inverse();
        MonodromyModel { a, b, c }
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    pub fn is_transitive(&self) -> bool {
        is_transitive(&self.generators(), self.degree())
    }

    fn generators(&self) -> [Perm; 2] {
        [self.a.clone(), self.b.clone()]
    }

    /// Cycle types of `a`, `b`, `c`.
    pub fn cycle_types(&self) -> [Vec<usize>; 3] {
        [self.a.cycle_type(), self.b.cycle_type(), self.c.cycle_type()]
    }

    /// Number of maps to itself: relabelings commuting with `a` and `b`.
    pub fn automorphism_count(&self) -> usize {
        let g = self.generators();
        count_conjugators(&g, &g, false)
    }

    /// Same map up to relabeling.
    pub fn is_isomorphic(&self, other: &MonodromyModel) -> bool {
        self.degree() == other.degree()
            && (self.degree() == 0 || count_conjugators(&self.generators(), &other.generators(), true) > 0)
    }
}

/// Expands each edge of weight `w` into `w` parallel edges and labels them in
/// the order of the canonical form, so isomorphic trees give equal models.
pub fn to_monodromy(tree: &WeightedTree) -> MonodromyModel {
    let t = canonical_form(tree);
    let mut first = Vec::with_capacity(t.edge_count());
    let mut n = 0;
    for e in t.edges() {
        first.push(n);
        n += e.weight as usize;
    }
    let mut a = vec![0; n];
    let mut b = vec![0; n];
    for v in 0..t.vertex_count() {
        // Parallel copies run in opposite directions at the two ends.
        let mut labels = Vec::new();
        for &e in t.rotation(v) {
            let range = first[e]..first[e] + t.weight(e) as usize;
            match t.color(v) {
                Color::Black => labels.extend(range),
                Color::White => labels.extend(range.rev()),
            }
        }
        let target = if t.color(v) == Color::Black { &mut a } else { &mut b };
        for (i, &x) in labels.iter().enumerate() {
            target[x] = labels[(i + 1) % labels.len()];
        }
    }
    MonodromyModel::from_pair(Perm::from_images(a), Perm::from_images(b))
}

/// Exchanges black vertices and faces; white vertices stay.
pub fn dual_model(model: &MonodromyModel) -> MonodromyModel {
    let a = model.c.clone();
    let b = model.b.clone();
    let c = model.b.inverse().then(&model.a).then(&model.b);
    MonodromyModel { a, b, c }
}

pub fn is_self_dual(tree: &WeightedTree) -> bool {
    let m = to_monodromy(tree);
    m.is_isomorphic(&dual_model(&m))
}

/// Shape forced on a tree isomorphic to its dual: black degrees equal the face
/// degrees, so one black hub and black leaves of weight one, hence diameter at
/// most four.
pub fn has_self_dual_shape(tree: &WeightedTree) -> bool {
    let passport = tree.passport();
    tree.diameter() <= 4 && passport.face_partition().is_ok_and(|faces| faces == *passport.black())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Symmetric,
    Alternating,
    Cyclic,
    /// Primitive, neither symmetric nor alternating; named when the catalog
    /// pins the group down.
    Special(Option<&'static str>),
    Imprimitive,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Symmetric => f.write_str("Symmetric"),
            GroupTag::Alternating => f.write_str("Alternating"),
            GroupTag::Cyclic => f.write_str("Cyclic"),
            GroupTag::Special(Some(name)) => write!(f, "Special {name}"),
            GroupTag::Special(None) => f.write_str("Special"),
            GroupTag::Imprimitive => f.write_str("Imprimitive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupReport {
    pub degree: usize,
    pub order: BigUint,
    pub transitive: bool,
    pub primitive: bool,
    /// Smallest nontrivial block size when imprimitive.
    pub block_size: Option<usize>,
    pub tag: GroupTag,
    /// Number of fixed points of the face permutation when it has a single
    /// nontrivial cycle.
    pub face_fixed_points: Option<usize>,
    /// Cases of the classification of special groups containing an
    /// `(n-r, 1^r)` element that fit the degree and `r`.
    pub jones_note: Option<String>,
}

/// Primitive groups identified by degree and order alone.
const NAMED_SPECIAL: [(usize, u64, &str); 22] = [
    (5, 10, "D5"),
    (5, 20, "AGL(1,5)"),
    (6, 60, "PSL(2,5)"),
    (6, 120, "PGL(2,5)"),
    (7, 14, "D7"),
    (7, 21, "C7:C3"),
    (7, 42, "AGL(1,7)"),
    (7, 168, "PSL(3,2)"),
    (8, 56, "AGL(1,8)"),
    (8, 336, "PGL(2,7)"),
    (8, 1344, "AGL(3,2)"),
    (10, 60, "A5"),
    (10, 120, "S5"),
    (10, 360, "PSL(2,9)"),
    (10, 1440, "PGammaL(2,9)"),
    (11, 22, "D11"),
    (11, 55, "C11:C5"),
    (11, 110, "AGL(1,11)"),
    (11, 660, "PSL(2,11)"),
    (11, 7920, "M11"),
    (12, 660, "PSL(2,11)"),
    (12, 1320, "PGL(2,11)"),
];

fn special_name(degree: usize, order: &BigUint) -> Option<&'static str> {
    if degree == 12 && *order == BigUint::from(7920u32) {
        return Some("M11");
    }
    if degree == 12 && *order == BigUint::from(95040u32) {
        return Some("M12");
    }
    NAMED_SPECIAL.iter().find(|(d, o, _)| *d == degree && *order == BigUint::from(*o)).map(|(_, _, name)| *name)
}

pub fn group_report(model: &MonodromyModel) -> Result<GroupReport> {
    let n = model.degree();
    if !model.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let gens = model.generators();
    let order = StabilizerChain::new(&gens, n).order();
    let block_size = smallest_block(&gens, n);
    let primitive = block_size.is_none();
    let full: BigUint = factorial(n as u64);
    let is_n_cycle = |p: &Perm| p.cycle_type() == [n];
    let tag = if order == full {
        GroupTag::Symmetric
    } else if n >= 3 && order.clone() * 2u32 == full {
        GroupTag::Alternating
    } else if order == BigUint::from(n) && [&model.a, &model.b, &model.c].into_iter().any(is_n_cycle) {
        GroupTag::Cyclic
    } else if primitive {
        GroupTag::Special(special_name(n, &order))
    } else {
        GroupTag::Imprimitive
    };
    let face_type = model.c.cycle_type();
    let face_fixed_points = match face_type.as_slice() {
        [m, rest @ ..] if *m > 1 && rest.iter().all(|&x| x == 1) => Some(rest.len()),
        _ => None,
    };
    let jones_note = match (&tag, face_fixed_points) {
        (GroupTag::Special(_), Some(r)) => Some(jones_cases(n, r)),
        _ => None,
    };
    Ok(GroupReport { degree: n, order, transitive: true, primitive, block_size, tag, face_fixed_points, jones_note })
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// `n = (q^d - 1)/(q - 1)` for a prime power `q` and `d >= 2`.
fn is_projective_size(n: usize) -> bool {
    (2..n).filter(|&q| is_prime_power(q)).any(|q| {
        let mut size = 1 + q;
        while size < n {
            size = size * q + 1;
        }
        size == n
    })
}

fn jones_cases(n: usize, r: usize) -> String {
    let mut cases = Vec::new();
    match r {
        0 => {
            if is_prime(n) {
                cases.push("1a: Cp <= G <= AGL(1,p)");
            }
            if is_projective_size(n) {
                cases.push("1b: PGL(d,q) <= G <= PGammaL(d,q)");
            }
            if n == 11 || n == 23 {
                cases.push("1c: L2(11), M11 or M23");
            }
        }
        1 => {
            if is_prime_power(n) {
                cases.push("2a: AGL(d,q) <= G <= AGammaL(d,q)");
            }
            if n >= 6 && is_prime(n - 1) {
                cases.push("2b: L2(p) or PGL(2,p)");
            }
            if n == 12 || n == 24 {
                cases.push("2c: M11, M12 or M24");
            }
        }
        2
            if is_prime_power(n - 1) => {
                cases.push("3: PGL(2,q) <= G <= PGammaL(2,q)");
            }
        _ => {}
    }
    if cases.is_empty() {
        format!("no case of the classification fits n={n}, r={r}")
    } else {
        cases.join("; ")
    }
}

pub fn tree_group_report(tree: &WeightedTree) -> GroupReport {
    group_report(&to_monodromy(tree)).expect("tree monodromy is transitive")
}

pub fn monodromy_order(tree: &WeightedTree) -> BigUint {
    let m = to_monodromy(tree);
    StabilizerChain::new(&m.generators(), m.degree()).order()
}

/// True iff the covering factors through one of smaller degree, that is, the
/// monodromy group has a nontrivial block system.
pub fn is_composition(tree: &WeightedTree) -> bool {
    let m = to_monodromy(tree);
    smallest_block(&m.generators(), m.degree()).is_some()
}

/// Galois invariants of one tree. Trees with different signatures lie in
/// different Galois orbits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantSignature {
    pub passport: Passport,
    pub automorphisms: usize,
    pub monodromy_order: BigUint,
    pub primitive: bool,
    pub self_dual: bool,
}

/// Flat `key=value` form.
impl fmt::Display for InvariantSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "passport={} aut={} order={} primitive={} self_dual={}",
            self.passport, self.automorphisms, self.monodromy_order, self.primitive, self.self_dual
        )
    }
}

pub fn signature(tree: &WeightedTree) -> InvariantSignature {
    let m = to_monodromy(tree);
    let gens = m.generators();
    InvariantSignature {
        passport: tree.passport(),
        automorphisms: automorphism_order(tree),
        monodromy_order: StabilizerChain::new(&gens, m.degree()).order(),
        primitive: smallest_block(&gens, m.degree()).is_none(),
        self_dual: m.is_isomorphic(&dual_model(&m)),
    }
}

#[derive(Clone, Debug)]
pub struct SignatureClass {
    pub signature: InvariantSignature,
    pub trees: Vec<TreeCode>,
    /// Two trees that are mirror images of each other but not isomorphic. Such
    /// a pair cannot be defined over a real field, so if it is a single orbit
    /// its field is imaginary quadratic.
    pub mirror_pair: bool,
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub passport: Passport,
    pub classes: Vec<SignatureClass>,
    /// Trees whose self-duality disagrees with the diameter-four shape test.
    pub shape_disagreements: Vec<TreeCode>,
}

impl OrbitReport {
    pub fn tree_count(&self) -> usize {
        self.classes.iter().map(|c| c.trees.len()).sum()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.trees.len()).collect()
    }
}

/// Groups the trees of a passport by signature. Each class is a union of Galois
/// orbits; equal signatures do not prove that trees are conjugate. Classes are
/// ordered by their first tree's canonical code.
pub fn orbit_report(passport: &Passport) -> OrbitReport {
    let trees = enumerate_passport(passport);
    let analysed: Vec<(TreeCode, InvariantSignature, bool)> = trees
        .par_iter()
        .map(|t| {
            let sig = signature(t);
            let shape_ok = !sig.self_dual || has_self_dual_shape(t);
            (canonical_code(t), sig, shape_ok)
        })
        .collect();
    let mut classes: Vec<SignatureClass> = Vec::new();
    let mut shape_disagreements = Vec::new();
    for (code, sig, shape_ok) in analysed {
        if !shape_ok {
            shape_disagreements.push(code.clone());
        }
        match classes.iter_mut().find(|c| c.signature == sig) {
            Some(c) => c.trees.push(code),
            None => classes.push(SignatureClass { signature: sig, trees: vec![code], mirror_pair: false }),
        }
    }
    for class in &mut classes {
        if let [x, y] = class.trees.as_slice() {
            class.mirror_pair = canonical_code(&x.to_tree().reflected()) == *y;
        }
    }
    OrbitReport { passport: passport.clone(), classes, shape_disagreements }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surgery::scale_weights;

    fn pp(s: &str) -> Passport {
        s.parse().unwrap()
    }

    #[test]
    fn single_edge() {
        let m = to_monodromy(&WeightedTree::single_edge(5));
        assert_eq!(m.a.cycle_type(), vec![5]);
        assert_eq!(m.b, m.a.inverse());
        assert!(m.c.is_identity());
        let r = group_report(&m).unwrap();
        assert_eq!((r.tag.clone(), r.order.clone()), (GroupTag::Cyclic, BigUint::from(5u32)));
        let four = group_report(&to_monodromy(&WeightedTree::single_edge(4))).unwrap();
        assert_eq!((four.tag, four.primitive, four.block_size), (GroupTag::Cyclic, false, Some(2)));
        assert!(is_self_dual(&WeightedTree::single_edge(1)));
    }

    #[test]
    fn two_unit_edges() {
        let m = to_monodromy(&WeightedTree::path(Color::White, &[1, 1]));
        assert_eq!(m.a.cycle_type(), vec![2]);
        assert!(m.b.is_identity());
        assert_eq!(group_report(&m).unwrap().order, BigUint::from(2u32));
    }

    #[test]
    fn cycle_types_match_passport() {
        for p in ["7 1|2^3 1^2", "3^2|2^3", "5^2 2^3 1^2|7 6 4 1", "3 3 1 1|2^4"] {
            let p = pp(p);
            let faces = p.face_partition().unwrap();
            for t in enumerate_passport(&p) {
                let m = to_monodromy(&t);
                let [a, b, c] = m.cycle_types();
                let as_usize = |x: &crate::Partition| x.parts().iter().map(|&v| v as usize).collect::<Vec<_>>();
                assert_eq!(a, as_usize(p.black()));
                assert_eq!(b, as_usize(p.white()));
                assert_eq!(c, as_usize(&faces));
                assert!(m.a.then(&m.b).then(&m.c).is_identity());
                assert_eq!(m.automorphism_count(), automorphism_order(&t));
            }
        }
    }

    #[test]
    fn special_example() {
        let trees = enumerate_passport(&pp("7 1|2^3 1^2"));
        let reports: Vec<GroupReport> = trees.iter().map(tree_group_report).collect();
        let special: Vec<usize> = (0..6).filter(|&i| reports[i].order == BigUint::from(336u32)).collect();
        assert_eq!(special.len(), 1);
        let r = &reports[special[0]];
        assert_eq!(r.tag, GroupTag::Special(Some("PGL(2,7)")));
        assert_eq!(r.face_fixed_points, Some(2));
        assert!(r.jones_note.as_deref().unwrap().starts_with("3:"));
        assert_eq!(reports.iter().filter(|r| r.tag == GroupTag::Symmetric).count(), 5);
        let published = MonodromyModel::from_pair(
            Perm::from_cycles(8, &[&[1, 7, 6, 5, 4, 8, 3]]),
            Perm::from_cycles(8, &[&[1, 2], &[3, 8], &[6, 7]]),
        );
        assert_eq!(published.c, Perm::from_cycles(8, &[&[1, 2, 3, 4, 5, 6]]));
        assert!(to_monodromy(&trees[special[0]]).is_isomorphic(&published));
    }

    #[test]
    fn compositions() {
        assert!(is_composition(&WeightedTree::single_edge(4)));
        assert!(!is_composition(&WeightedTree::star(Color::Black, &[1; 7])));
        let h = crate::unitrees::family_tree(
            crate::unitrees::Family::H,
            &crate::unitrees::Params { k: Some(2), l: Some(2), ..Default::default() },
        )
        .unwrap();
        assert!(is_composition(&h));
        assert!(is_composition(&scale_weights(&WeightedTree::path(Color::Black, &[1, 2]), 2).unwrap()));
    }

    #[test]
    fn duality() {
        for t in enumerate_passport(&pp("6 1 1|3 3 1 1")) {
            let m = to_monodromy(&t);
            let d = dual_model(&m);
            assert_eq!(d.cycle_types(), [m.c.cycle_type(), m.b.cycle_type(), m.a.cycle_type()]);
            assert!(dual_model(&d).is_isomorphic(&m));
            assert!(d.a.then(&d.b).then(&d.c).is_identity());
            assert!(is_self_dual(&t));
        }
        let trees = enumerate_passport(&pp("5 1 1 1|5 3"));
        assert_eq!(trees.len(), 3);
        assert_eq!(trees.iter().filter(|t| is_self_dual(t)).count(), 1);
        assert!(!is_self_dual(&WeightedTree::path(Color::Black, &[1, 1, 1, 1, 1])));
    }

    #[test]
    fn orbit_report_small() {
        let r = orbit_report(&pp("5|1^5"));
        assert_eq!(r.class_sizes(), vec![1]);
        let r = orbit_report(&pp("7^3|3^7"));
        assert_eq!(r.tree_count(), 2);
        assert_eq!(r.classes.len(), 2);
        let mut auts: Vec<usize> = r.classes.iter().map(|c| c.signature.automorphisms).collect();
        auts.sort_unstable();
        assert_eq!(auts, vec![1, 3]);
        assert!(r.shape_disagreements.is_empty());
        let line = r.classes[0].signature.to_string();
        assert!(line.starts_with("passport=") && line.contains(" self_dual="));
    }

    #[test]
    fn jones_case_labels() {
        assert!(jones_cases(8, 2).starts_with("3:"));
        assert!(jones_cases(7, 0).contains("1a"));
        assert!(jones_cases(7, 0).contains("1b"));
        assert!(jones_cases(9, 1).contains("2a"));
        assert!(jones_cases(12, 1).contains("2b") && jones_cases(12, 1).contains("2c"));
        assert!(jones_cases(10, 3).starts_with("no case"));
    }
}
