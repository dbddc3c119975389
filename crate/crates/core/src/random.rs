//! Random trees for property tests and experiments. The distribution is not
//! uniform over isomorphism classes.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::tree::{Color, TreeBuilder, WeightedTree};
use crate::Weight;

/// A random tree of total weight exactly `n >= 1`: a random number of edges,
/// a random composition of `n` into edge weights and a random plane shape
/// grown by attaching leaves at random positions.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: Weight) -> WeightedTree {
    assert!(n >= 1, "total weight must be positive");
    let m = rng.gen_range(1..=n) as usize;
    // Cut points of a composition of n into m parts.
    let mut cuts: Vec<Weight> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<Weight> = cuts.into_iter().take(m - 1).collect();
    cuts.sort_unstable();
    cuts.push(n);
    let mut weights = Vec::with_capacity(m);
    let mut prev = 0;
    for c in cuts {
        weights.push(c - prev);
        prev = c;
    }
    let root = if rng.gen_bool(0.5) { Color::Black } else { Color::White };
    let mut b = TreeBuilder::new(root);
    for w in weights {
        let v = rng.gen_range(0..b.vertex_count());
        let pos = rng.gen_range(0..=b.rotation(v).len());
        b.attach_at(v, pos, w);
    }
    b.build().expect("grown trees are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn weights_add_up() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=30 {
            let t = random_tree(&mut rng, n);
            assert_eq!(t.total_weight(), n);
            assert_eq!(t.vertex_count(), t.edge_count() + 1);
        }
    }
}
