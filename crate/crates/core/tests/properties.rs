use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use dessinum::code::{all_rooted_codes, canonical_with_multiplicity};
use dessinum::galois::{count_conjugators, dual_model, is_composition};
use dessinum::random::random_tree;
use dessinum::surgery::{all_loci, color_swap, reduce_weights, scale_weights, sts_rip, sts_stitch, weight_exchange};
use dessinum::{
    automorphism_order, canonical_code, enumerate_passport, is_isomorphic, match_family, to_monodromy, Color,
    Partition, Passport, TreeCode, Weight, WeightedTree,
};

fn tree(max_weight: Weight) -> impl Strategy<Value = WeightedTree> {
    (1..=max_weight, any::<u64>()).prop_map(|(n, seed)| random_tree(&mut StdRng::seed_from_u64(seed), n))
}

fn parts(p: &Partition) -> Vec<usize> {
    p.parts().iter().map(|&x| x as usize).collect()
}

fn merged(a: &Partition, b: &Partition) -> Partition {
    let mut all = a.parts().to_vec();
    all.extend_from_slice(b.parts());
    Partition::new(all).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn degree_sums_and_excess(t in tree(16)) {
        let p = t.passport();
        let n = t.total_weight();
        prop_assert_eq!(p.black().total(), n);
        prop_assert_eq!(p.white().total(), n);
        let excess: Weight = t.edges().iter().map(|e| e.weight - 1).sum();
        prop_assert_eq!(excess as i64, p.excess());
        prop_assert_eq!(t.edge_count() + 1, p.p() + p.q());
        let face = p.face_partition().unwrap();
        prop_assert!(face.parts().iter().filter(|&&x| x != 1).count() <= 1);
    }

    #[test]
    fn canonical_code_is_idempotent(t in tree(16)) {
        let code = canonical_code(&t);
        let reparsed: TreeCode = code.to_string().parse().unwrap();
        prop_assert_eq!(canonical_code(&reparsed.to_tree()), code);
    }

    #[test]
    fn rootings_realise_the_automorphisms(t in tree(16)) {
        let (code, aut) = canonical_with_multiplicity(&t);
        let rootings = all_rooted_codes(&t);
        let hits = rootings.iter().filter(|r| r.as_slice() == code.tokens()).count();
        prop_assert_eq!(hits, aut);
        prop_assert_eq!(t.edge_count() % aut, 0);
    }

    #[test]
    fn model_matches_passport(t in tree(14)) {
        let m = to_monodromy(&t);
        let p = t.passport();
        prop_assert!(m.is_transitive());
        prop_assert!(m.a.then(&m.b).then(&m.c).is_identity());
        let [a, b, c] = m.cycle_types();
        prop_assert_eq!(a, parts(p.black()));
        prop_assert_eq!(b, parts(p.white()));
        prop_assert_eq!(c, parts(&p.face_partition().unwrap()));
    }

    #[test]
    fn duality_is_an_involution(t in tree(14)) {
        let m = to_monodromy(&t);
        let d = dual_model(&m);
        prop_assert!(dual_model(&d).is_isomorphic(&m));
        let [a, b, c] = m.cycle_types();
        prop_assert_eq!(d.cycle_types(), [c, b, a]);
    }

    #[test]
    fn centralizer_counts_automorphisms(t in tree(14)) {
        // A lone edge of weight w is w parallel labels that the centralizer
        // rotates; see `lone_edge_centralizer` below.
        prop_assume!(t.edge_count() > 1);
        let m = to_monodromy(&t);
        let pair = [m.a.clone(), m.b.clone()];
        prop_assert_eq!(count_conjugators(&pair, &pair, false), automorphism_order(&t));
    }

    #[test]
    fn normalization_keeps_the_family(t in tree(12), factor in 2u64..4) {
        let tag = match_family(&t);
        let swapped = match_family(&color_swap(&t));
        let scaled = match_family(&scale_weights(&t, factor).unwrap());
        prop_assert_eq!(tag.map(|x| x.family), swapped.map(|x| x.family));
        prop_assert_eq!(tag.map(|x| (x.family, x.params, x.swapped)), scaled.map(|x| (x.family, x.params, x.swapped)));
        prop_assert_eq!(tag.map(|x| x.scale * factor), scaled.map(|x| x.scale));
    }

    #[test]
    fn scale_and_reduce(t in tree(12), factor in 1u64..5) {
        let g = t.weight_gcd();
        let (reduced, d) = reduce_weights(&scale_weights(&t, factor).unwrap());
        prop_assert_eq!(d, factor * g);
        prop_assert_eq!(reduced.weight_gcd(), 1);
        prop_assert!(is_isomorphic(&scale_weights(&reduced, d).unwrap(), &scale_weights(&t, factor).unwrap()));
    }

    #[test]
    fn surgery_keeps_the_passport(t in tree(20)) {
        let p = t.passport();
        for locus in all_loci(&t) {
            if let Ok(r) = weight_exchange(&t, &locus) {
                prop_assert_eq!(r.passport(), p.clone());
                prop_assert_eq!(r.total_weight(), t.total_weight());
            }
            if let Ok((x, y)) = sts_rip(&t, &locus) {
                prop_assert_eq!(merged(x.passport().black(), y.passport().black()), p.black().clone());
                prop_assert_eq!(merged(x.passport().white(), y.passport().white()), p.white().clone());
            }
        }
    }

    #[test]
    fn stitching_joins_two_trees(x in tree(8), y in tree(8), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let e1 = i.index(x.edge_count());
        let e2 = j.index(y.edge_count());
        let (s, u) = (x.weight(e1), y.weight(e2));
        prop_assume!(s != u);
        let joined = sts_stitch(&x, e1, &y, e2).unwrap();
        prop_assert_eq!(joined.edge_count(), x.edge_count() + y.edge_count() + 1);
        prop_assert_eq!(merged(x.passport().black(), y.passport().black()), joined.passport().black().clone());
        prop_assert_eq!(merged(x.passport().white(), y.passport().white()), joined.passport().white().clone());
        let (lo, hi) = (s.min(u), s.max(u));
        prop_assert!(all_loci(&joined).iter().any(|l| l.weights(&joined) == [lo, hi - lo, lo]));
    }
}

#[test]
fn lone_edge_centralizer() {
    for w in 1..8 {
        let t = WeightedTree::single_edge(w);
        assert_eq!(automorphism_order(&t), 1);
        assert_eq!(to_monodromy(&t).automorphism_count(), w as usize);
    }
}

#[test]
fn reduction_by_the_common_divisor() {
    let t = WeightedTree::star(Color::Black, &[4, 6, 2]);
    let (r, d) = reduce_weights(&t);
    assert_eq!(d, 2);
    assert_eq!(r.passport(), "6|2 3 1".parse::<Passport>().unwrap());
}

#[test]
fn thirteen_edges_admit_no_composition() {
    let trees = enumerate_passport(&"9^5|5^9".parse().unwrap());
    assert_eq!(trees.len(), 11);
    for t in &trees {
        assert_eq!(t.edge_count(), 13);
        assert!(!is_composition(t));
    }
}
