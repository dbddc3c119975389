//! Permutations of `0..n` and the group computations built on them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

/// A permutation of `0..n`, stored as the list of images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// Panics unless `images` is a permutation of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Perm {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x < images.len() && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Perm(images)
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 1-based points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Perm {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                images[x - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles in order of their smallest point, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths, largest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cycle notation on 1-based points, fixed points omitted.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().iter().filter(|c| c.len() > 1) {
            let points: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", points.join(","))?;
            any = true;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Points reachable from `start` under the generators.
pub fn orbit(gens: &[Perm], start: usize) -> Vec<usize> {
    let n = gens.first().map_or(start + 1, Perm::degree);
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

pub fn is_transitive(gens: &[Perm], n: usize) -> bool {
    n <= 1 || orbit(gens, 0).len() == n
}

struct Level {
    point: usize,
    gens: Vec<Perm>,
    /// `transversal[x]` maps `point` to `x`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

/// Base and strong generating set built by the deterministic Schreier–Sims
/// algorithm.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(gens: &[Perm], degree: usize) -> StabilizerChain {
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        for g in gens {
            if chain.sift(g, 0).0.is_identity() {
                continue;
            }
            chain.add_generator(0, g.clone());
        }
        chain
    }

    /// Group order: the product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    /// Strips `g` through the levels from `start`; returns the residue and the
    /// level where it stopped.
    fn sift(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let x = h.apply(level.point);
            match &level.transversal[x] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn add_generator(&mut self, i: usize, g: Perm) {
        if i == self.levels.len() {
            let point = (0..self.degree).find(|&x| g.apply(x) != x).expect("non-identity generator");
            let mut transversal = vec![None; self.degree];
            transversal[point] = Some(Perm::identity(self.degree));
            self.levels.push(Level { point, gens: Vec::new(), transversal, orbit: vec![point] });
        }
        self.levels[i].gens.push(g);
        // Extend the orbit, remembering which (point, generator) pairs are new.
        let old_len = self.levels[i].orbit.len();
        let new_gen = self.levels[i].gens.len() - 1;
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            let x = self.levels[i].orbit[k];
            let gens_here: Vec<usize> = if k < old_len { vec![new_gen] } else { (0..self.levels[i].gens.len()).collect() };
            for s in gens_here {
                let level = &mut self.levels[i];
                let y = level.gens[s].apply(x);
                if level.transversal[y].is_none() {
                    let u = level.transversal[x].as_ref().unwrap().then(&level.gens[s]);
                    level.transversal[y] = Some(u);
                    level.orbit.push(y);
                }
                pairs.push((x, s));
            }
            k += 1;
        }
        for (x, s) in pairs {
            let level = &self.levels[i];
            let gen = &level.gens[s];
            let y = gen.apply(x);
            let schreier = level.transversal[x]
                .as_ref()
                .unwrap()
                .then(gen)
                .then(&level.transversal[y].as_ref().unwrap().inverse());
            let (residue, _) = self.sift(&schreier, i + 1);
            if !residue.is_identity() {
                self.add_generator(i + 1, residue);
            }
        }
    }
}

/// Smallest block containing `0` and `y` for a transitive group, as a sorted list.
pub fn minimal_block(gens: &[Perm], degree: usize, y: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue = vec![(0, y)];
    parent[y] = 0;
    while let Some((a, b)) = queue.pop() {
        for g in gens {
            let (ra, rb) = (find(&mut parent, g.apply(a)), find(&mut parent, g.apply(b)));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
                queue.push((ra, rb));
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..degree).filter(|&x| find(&mut parent, x) == root).collect()
}

/// Size of the smallest nontrivial block of a transitive group, or `None` when
/// the group is primitive.
pub fn smallest_block(gens: &[Perm], degree: usize) -> Option<usize> {
    (1..degree).map(|y| minimal_block(gens, degree, y).len()).filter(|&s| s < degree).min()
}

/// Number of permutations `phi` with `phi^-1 * x * phi = y` for each pair,
/// when the first group is transitive. With `stop_at_first` only existence is
/// decided.
pub fn count_conjugators(from: &[Perm], to: &[Perm], stop_at_first: bool) -> usize {
    let n = from.first().map_or(0, Perm::degree);
    if n == 0 {
        return 1;
    }
    if from.iter().zip(to).any(|(a, b)| a.cycle_type() != b.cycle_type()) {
        return 0;
    }
    let mut count = 0;
    for target in 0..n {
        if conjugator_from(from, to, target).is_some() {
            count += 1;
            if stop_at_first {
                break;
            }
        }
    }
    count
}

/// The conjugator sending point `0` to `target`, if one exists.
fn conjugator_from(from: &[Perm], to: &[Perm], target: usize) -> Option<Perm> {
    let n = from[0].degree();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[0] = target;
    used[target] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for (a, b) in from.iter().zip(to) {
            let (x2, y2) = (a.apply(x), b.apply(image[x]));
            if image[x2] == usize::MAX {
                if used[y2] {
                    return None;
                }
                image[x2] = y2;
                used[y2] = true;
                stack.push(x2);
            } else if image[x2] != y2 {
                return None;
            }
        }
    }
    if image.contains(&usize::MAX) {
        return None;
    }
    Some(Perm(image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::factorial;

    fn cycle(n: usize) -> Perm {
        Perm::from_images((0..n).map(|i| (i + 1) % n).collect())
    }

    fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Perm::from_images(v)
    }

    #[test]
    fn composition_and_cycles() {
        let a = Perm::from_cycles(8, &[&[1, 7, 6, 5, 4, 8, 3]]);
        let b = Perm::from_cycles(8, &[&[1, 2], &[3, 8], &[6, 7]]);
        let c = a.then(&b).inverse();
        assert_eq!(c, Perm::from_cycles(8, &[&[1, 2, 3, 4, 5, 6]]));
        assert_eq!(c.to_string(), "(1,2,3,4,5,6)");
        assert_eq!(b.cycle_type(), vec![2, 2, 2, 1, 1]);
        assert!(a.then(&b).then(&c).is_identity());
    }

    #[test]
    fn orders() {
        for n in 2..=9 {
            let full = StabilizerChain::new(&[cycle(n), transposition(n, 0, 1)], n);
            assert_eq!(full.order(), factorial::<BigUint>(n as u64));
            assert_eq!(StabilizerChain::new(&[cycle(n)], n).order(), BigUint::from(n));
        }
        let a = Perm::from_cycles(8, &[&[1, 7, 6, 5, 4, 8, 3]]);
        let b = Perm::from_cycles(8, &[&[1, 2], &[3, 8], &[6, 7]]);
        assert_eq!(StabilizerChain::new(&[a.clone(), b.clone()], 8).order(), BigUint::from(336u32));
        // Alternating group from 3-cycles.
        let t = Perm::from_cycles(6, &[&[1, 2, 3]]);
        let u = Perm::from_cycles(6, &[&[2, 3, 4, 5, 6]]);
        let chain = StabilizerChain::new(&[t, u], 6);
        assert_eq!(chain.order(), BigUint::from(360u32));
        assert!(!chain.contains(&transposition(6, 0, 1)));
        let big = StabilizerChain::new(&[cycle(30), transposition(30, 0, 1)], 30);
        assert_eq!(big.order(), factorial::<BigUint>(30));
    }

    #[test]
    fn blocks() {
        assert_eq!(smallest_block(&[cycle(4)], 4), Some(2));
        assert_eq!(smallest_block(&[cycle(7)], 7), None);
        assert_eq!(smallest_block(&[cycle(6)], 6), Some(2));
        assert_eq!(minimal_block(&[cycle(6)], 6, 3), vec![0, 3]);
        assert_eq!(smallest_block(&[cycle(5), transposition(5, 0, 1)], 5), None);
    }

    #[test]
    fn conjugators() {
        let c = cycle(5);
        assert_eq!(count_conjugators(std::slice::from_ref(&c), std::slice::from_ref(&c), false), 5);
        assert_eq!(count_conjugators(std::slice::from_ref(&c), &[c.inverse()], false), 5);
        assert_eq!(count_conjugators(&[c.clone(), transposition(5, 0, 1)], &[c.clone(), transposition(5, 0, 1)], false), 1);
        assert_eq!(count_conjugators(std::slice::from_ref(&c), &[transposition(5, 0, 1)], true), 0);
    }
}
