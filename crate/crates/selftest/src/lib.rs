//! The acceptance criteria, each a function returning an [`Outcome`] with one
//! line per sub-check. Used by the `acceptance` test target and by the
//! `selftest` command.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use dessinum::bounds::{construct_witness, is_realizable_as_tree, min_deg_r, Regime};
use dessinum::counting::{count_rooted, count_rooted_by_edges, gj_count, mass_count, rooted_asymptotic};
use dessinum::enumerate::{enumerate_passport, enumerate_weight, has_tree};
use dessinum::galois::{is_self_dual, monodromy_order, orbit_report, tree_group_report, GroupTag};
use dessinum::random::random_tree;
use dessinum::surgery::{all_loci, sts_moves, sts_rip, sts_stitch, weight_exchange, PathLocus};
use dessinum::unitrees::{is_unitree_bruteforce, match_family, sporadic_tree, Family};
use dessinum::{automorphism_order, is_isomorphic, Passport, Weight, WeightedTree};

pub const CRITERIA: u32 = 14;

/// Sweep bounds; the defaults are the ones the criteria ask for.
#[derive(Clone, Copy, Debug)]
#[derive(Default)]
pub struct Config {
    /// Caps the total weight of the exhaustive sweeps (criteria 8, 9, 14).
    pub max_weight: Option<Weight>,
}


impl Config {
    fn bound(&self, wanted: Weight) -> Weight {
        self.max_weight.map_or(wanted, |m| m.min(wanted))
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl Outcome {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }

    pub fn passed(&self) -> bool {
        self.within_budget() && self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {verdict}: {} ({:.2} s", self.id, self.title, self.elapsed.as_secs_f64())?;
        if let Some(b) = self.budget {
            write!(f, ", budget {} s", b.as_secs())?;
        }
        writeln!(f, ")")?;
        for c in &self.checks {
            writeln!(f, "    {} {}", if c.passed { "ok  " } else { "FAIL" }, c.label)?;
        }
        if !self.within_budget() {
            writeln!(f, "    FAIL over time budget")?;
        }
        for n in &self.notes {
            writeln!(f, "    note {n}")?;
        }
        Ok(())
    }
}

struct Recorder {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, passed: bool, label: impl Into<String>) {
        self.checks.push(Check { label: label.into(), passed });
    }

    fn equal<T: PartialEq + fmt::Debug>(&mut self, label: &str, found: T, expected: T) {
        let passed = found == expected;
        let label = if passed {
            format!("{label}: {found:?}")
        } else {
            format!("{label}: found {found:?}, expected {expected:?}")
        };
        self.check(passed, label);
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

fn timed(id: u32, title: &'static str, budget: Option<u64>, body: impl FnOnce(&mut Recorder)) -> Outcome {
    let start = Instant::now();
    let mut rec = Recorder::new();
    body(&mut rec);
    Outcome {
        id,
        title,
        checks: rec.checks,
        notes: rec.notes,
        elapsed: start.elapsed(),
        budget: budget.map(Duration::from_secs),
    }
}

pub fn run(id: u32, config: &Config) -> Outcome {
    match id {
        1 => rooted_counts(),
        2 => edge_counts(),
        3 => mass_formula(),
        4 => special_group(),
        5 => special_group_self_dual(),
        6 => symmetric_splittings(),
        7 => flagship_orbit(),
        8 => unitree_theorem(config),
        9 => realizability(config),
        10 => bounds(),
        11 => cactus_formula(),
        12 => surgery(config),
        13 => asymptotics(),
        14 => jones_sanity(config),
        _ => panic!("no criterion {id}"),
    }
}

pub fn run_all(config: &Config) -> Vec<Outcome> {
    (1..=CRITERIA).map(|id| run(id, config)).collect()
}

fn pp(s: &str) -> Passport {
    s.parse().expect("valid passport")
}

fn big(x: u128) -> BigUint {
    BigUint::from(x)
}

/// `a_n` by brute force: every isomorphism class contributes `edges / |Aut|` rootings.
fn brute_rooted(n: Weight) -> (BigUint, BTreeMap<usize, BigUint>) {
    let mut total = BigUint::zero();
    let mut by_edges = BTreeMap::new();
    for (_, trees) in enumerate_weight(n) {
        for t in &trees {
            let rootings = BigUint::from(t.edge_count() / automorphism_order(t));
            *by_edges.entry(t.edge_count()).or_insert_with(BigUint::zero) += &rootings;
            total += rootings;
        }
    }
    (total, by_edges)
}

fn rooted_counts() -> Outcome {
    timed(1, "rooted counts a_0..a_8 and brute force", Some(30), |r| {
        let expected = [1u128, 1, 3, 10, 36, 137, 543, 2219, 9285];
        let found: Vec<BigUint> = (0..=8).map(count_rooted).collect();
        r.equal("closed form", found, expected.iter().map(|&x| big(x)).collect());
        let brute: Vec<BigUint> = (1..=8).map(|n| brute_rooted(n).0).collect();
        r.equal("enumeration x rootings, n=1..8", brute, expected[1..].iter().map(|&x| big(x)).collect());
    })
}

fn oracle_binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn edge_counts() -> Outcome {
    timed(2, "edge-stratified counts b_{m,n}", Some(30), |r| {
        let row4: Vec<BigUint> = (1..=4).map(|m| count_rooted_by_edges(4, m).unwrap()).collect();
        r.equal("b_{m,4}, m=1..4", row4, [1u128, 6, 15, 14].iter().map(|&x| big(x)).collect());
        let mut bad = Vec::new();
        for n in 1..=8u64 {
            let (_, brute) = brute_rooted(n);
            for m in 1..=n {
                let formula = oracle_binomial(n as u128 - 1, m as u128 - 1) * oracle_binomial(2 * m as u128, m as u128)
                    / (m as u128 + 1);
                let lib = count_rooted_by_edges(n, m).unwrap();
                let enumerated = brute.get(&(m as usize)).cloned().unwrap_or_default();
                if lib != big(formula) || enumerated != big(formula) {
                    bad.push((n, m));
                }
            }
        }
        r.equal("pairs (n,m), n<=8, where formula, library and enumeration differ", bad, vec![]);
    })
}

fn mass_formula() -> Outcome {
    timed(3, "mass formula sum 1/|Aut| = c_n", None, |r| {
        for n in 1..=7 {
            let mut mass = BigRational::zero();
            for (_, trees) in enumerate_weight(n) {
                for t in &trees {
                    mass += BigRational::new(One::one(), (automorphism_order(t) as i64).into());
                }
            }
            r.equal(&format!("n={n}"), mass.to_string(), mass_count(n).unwrap().to_string());
        }
    })
}

fn orders(trees: &[WeightedTree]) -> Vec<BigUint> {
    let mut v: Vec<BigUint> = trees.iter().map(monodromy_order).collect();
    v.sort();
    v
}

fn special_group() -> Outcome {
    timed(4, "7 1|2^3 1^2: one PGL(2,7) tree, five S_8", Some(10), |r| {
        let trees = enumerate_passport(&pp("7 1|2^3 1^2"));
        r.equal("tree count", trees.len(), 6);
        let mut expected = vec![big(336)];
        expected.extend(std::iter::repeat_n(big(40320), 5));
        r.equal("monodromy orders", orders(&trees), expected);
    })
}

fn special_group_self_dual() -> Outcome {
    timed(5, "6 1^2|3^2 1^2: one order 336, all self-dual", Some(10), |r| {
        let trees = enumerate_passport(&pp("6 1 1|3^2 1^2"));
        r.equal("tree count", trees.len(), 5);
        let special = orders(&trees).iter().filter(|o| **o == big(336)).count();
        r.equal("trees with monodromy order 336", special, 1);
        let self_dual = trees.iter().filter(|t| is_self_dual(t)).count();
        r.equal("self-dual trees", self_dual, 5);
    })
}

fn aut_orders(trees: &[WeightedTree]) -> Vec<usize> {
    let mut v: Vec<usize> = trees.iter().map(automorphism_order).collect();
    v.sort_unstable();
    v
}

fn symmetric_splittings() -> Outcome {
    timed(6, "symmetric trees split combinatorial orbits", Some(60), |r| {
        for (p, expected) in [
            ("7^3|3^7", vec![1, 3]),
            ("10^3|3^10", vec![1, 2, 3]),
            ("5^4|4^5", vec![1, 2, 4]),
            ("6^5|5^6", vec![1, 2, 2, 5]),
        ] {
            let trees = enumerate_passport(&pp(p));
            r.equal(&format!("{p} automorphism orders"), aut_orders(&trees), expected);
        }
        let trees = enumerate_passport(&pp("8^3|3^8"));
        r.equal("8^3|3^8 tree count", trees.len(), 2);
        let symmetric = trees.iter().filter(|t| automorphism_order(t) > 1).count();
        r.equal("8^3|3^8 trees with a symmetry", symmetric, 1);
    })
}

fn flagship_orbit() -> Outcome {
    timed(7, "3^10|2^15: four trees, three signature classes", Some(120), |r| {
        let p = pp("3^10|2^15");
        let trees = enumerate_passport(&p);
        r.equal("tree count", trees.len(), 4);
        r.equal("automorphism orders", aut_orders(&trees), vec![1, 2, 2, 3]);
        let report = orbit_report(&p);
        let mut sizes = report.class_sizes();
        sizes.sort_unstable();
        r.equal("signature class sizes", sizes, vec![1, 1, 2]);
        let flagged: Vec<(usize, bool)> = report.classes.iter().map(|c| (c.trees.len(), c.mirror_pair)).collect();
        let ok = flagged.iter().all(|&(size, mirror)| mirror == (size == 2));
        r.check(ok, format!("only the class of size 2 is a mirror pair: {flagged:?}"));
    })
}

/// Result of classifying every tree of every passport up to a weight bound.
pub struct Census {
    pub bound: Weight,
    pub passports: usize,
    pub trees: usize,
    pub unitrees: Vec<WeightedTree>,
    pub disagreements: Vec<String>,
}

/// Shared between criteria so the sweep runs once per bound.
pub fn census(bound: Weight) -> Arc<Census> {
    static CACHE: OnceLock<Mutex<BTreeMap<Weight, Arc<Census>>>> = OnceLock::new();
    let mut cache = CACHE.get_or_init(Default::default).lock().unwrap();
    if let Some(c) = cache.get(&bound) {
        return c.clone();
    }
    let passports: Vec<Passport> = (1..=bound).flat_map(Passport::all).collect();
    let rows: Vec<(usize, Option<WeightedTree>, Vec<String>)> = passports
        .par_iter()
        .map(|p| {
            let trees = enumerate_passport(p);
            let unique = trees.len() == 1;
            let mut bad = Vec::new();
            if is_unitree_bruteforce(p) != unique {
                bad.push(format!("{p}: brute force disagrees with the enumeration count"));
            }
            for t in &trees {
                let tag = match_family(t);
                if tag.is_some() != unique {
                    let what = tag.map_or("no family".to_string(), |t| t.to_string());
                    bad.push(format!("{p} ({} trees): {what}", trees.len()));
                }
            }
            (trees.len(), unique.then(|| trees[0].clone()), bad)
        })
        .collect();
    let mut census =
        Census { bound, passports: passports.len(), trees: 0, unitrees: Vec::new(), disagreements: Vec::new() };
    for (count, unitree, bad) in rows {
        census.trees += count;
        census.unitrees.extend(unitree);
        census.disagreements.extend(bad);
    }
    let census = Arc::new(census);
    cache.insert(bound, census.clone());
    census
}

fn sweep_note(r: &mut Recorder, bound: Weight, wanted: Weight) {
    if bound < wanted {
        r.note(format!("sweep reduced to n <= {bound}; the criterion asks for n <= {wanted}"));
    }
}

fn unitree_theorem(config: &Config) -> Outcome {
    let bound = config.bound(12);
    timed(8, "unitree classification is exact at desk scale", Some(600), |r| {
        sweep_note(r, bound, 12);
        let c = census(bound);
        r.note(format!("{} passports, {} trees, {} unitrees", c.passports, c.trees, c.unitrees.len()));
        let shown: Vec<&String> = c.disagreements.iter().take(10).collect();
        r.equal(&format!("disagreements over n <= {bound}"), c.disagreements.len(), 0);
        for d in shown {
            r.note(d.clone());
        }
        let sporadic_ok: Vec<Family> = Family::ALL
            .into_iter()
            .filter(|f| f.is_sporadic())
            .filter(|&f| !is_unitree_bruteforce(&sporadic_tree(f).unwrap().passport()))
            .collect();
        r.equal("stored sporadic trees that are not unitrees", sporadic_ok, vec![]);
    })
}

fn realizability(config: &Config) -> Outcome {
    let bound = config.bound(10);
    timed(9, "realizability: enumeration, criterion and witness agree", Some(300), |r| {
        sweep_note(r, bound, 10);
        let passports: Vec<Passport> = (1..=bound).flat_map(Passport::all).collect();
        let bad: Vec<String> = passports
            .par_iter()
            .filter_map(|p| {
                let exists = has_tree(p);
                let criterion = is_realizable_as_tree(p);
                let witness = construct_witness(p);
                let witness_ok = witness.as_ref().is_ok_and(|t| t.passport() == *p);
                let consistent = exists == criterion && criterion == witness_ok && (witness.is_ok() == witness_ok);
                (!consistent).then(|| format!("{p}: exists={exists} criterion={criterion} witness={witness_ok}"))
            })
            .collect();
        r.note(format!("{} passports", passports.len()));
        for b in bad.iter().take(10) {
            r.note(b.clone());
        }
        r.equal(&format!("disagreements over n <= {bound}"), bad.len(), 0);
    })
}

fn bounds() -> Outcome {
    timed(10, "minimum degree of P - Q", None, |r| {
        for k in 1..=6usize {
            let p = Passport::from_parts(&vec![3; 2 * k], &vec![2; 3 * k]);
            r.equal(&format!("3^{}|2^{}", 2 * k, 3 * k), min_deg_r(&p).min_deg_r, k as Weight + 1);
        }
        let weak = min_deg_r(&pp("4 2|2^3"));
        r.equal("4 2|2^3", (weak.min_deg_r, weak.regime), (3, Regime::Weak));
    })
}

fn cactus_formula() -> Outcome {
    timed(11, "cactus formula on ordinary passports", Some(120), |r| {
        let mut checked = 0;
        let mut bad = Vec::new();
        for n in 1..=7 {
            for p in Passport::all(n).into_iter().filter(Passport::is_ordinary) {
                let mut mass = BigRational::zero();
                for t in enumerate_passport(&p) {
                    mass += BigRational::new(One::one(), (automorphism_order(&t) as i64).into());
                }
                let formula = gj_count(&[p.black().clone(), p.white().clone()]).unwrap();
                checked += 1;
                if mass != formula {
                    bad.push(format!("{p}: enumerated {mass}, formula {formula}"));
                }
            }
        }
        r.note(format!("{checked} ordinary passports"));
        r.equal("disagreements for n <= 7", bad, vec![]);
    })
}

fn surgery(config: &Config) -> Outcome {
    let bound = config.bound(12);
    timed(12, "surgery preserves passports and fixes unitrees", None, |r| {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let trials = 10_000;
        let (mut exchanges, mut rips, mut violations) = (0, 0, Vec::new());
        let mut attempts = 0;
        while (exchanges < trials || rips < trials) && attempts < 100 * trials {
            attempts += 1;
            let n = rng.gen_range(2..=20);
            let t = random_tree(&mut rng, n);
            let loci = all_loci(&t);
            let passport = t.passport();
            let unequal: Vec<&PathLocus> = loci.iter().filter(|l| l.weights(&t)[0] < l.weights(&t)[2]).collect();
            if exchanges < trials && !unequal.is_empty() {
                let l = unequal[rng.gen_range(0..unequal.len())];
                let out = weight_exchange(&t, l).expect("applicable exchange");
                let back = weight_exchange(&out, &PathLocus::new(&out, l.edges()).unwrap()).expect("inverse exchange");
                if out.passport() != passport || back.passport() != passport {
                    violations.push(format!("exchange changed the passport of {}", dessinum::canonical_code(&t)));
                }
                if back.weight_distribution() != t.weight_distribution() {
                    violations.push(format!("exchange twice moved weights of {}", dessinum::canonical_code(&t)));
                }
                exchanges += 1;
            }
            let equal: Vec<&PathLocus> = loci.iter().filter(|l| l.weights(&t)[0] == l.weights(&t)[2]).collect();
            if rips < trials && !equal.is_empty() {
                let l = equal[rng.gen_range(0..equal.len())];
                let (a, b) = sts_rip(&t, l).expect("applicable rip");
                let pairs: Vec<(usize, usize)> = (0..a.edge_count())
                    .flat_map(|e| (0..b.edge_count()).map(move |f| (e, f)))
                    .filter(|&(e, f)| a.weight(e) != b.weight(f))
                    .collect();
                let (e, f) = pairs[rng.gen_range(0..pairs.len())];
                let joined = sts_stitch(&a, e, &b, f).expect("applicable stitch");
                if joined.passport() != passport {
                    violations.push(format!("rip and stitch changed the passport of {}", dessinum::canonical_code(&t)));
                }
                rips += 1;
            }
        }
        r.equal("random exchange round trips", exchanges, trials);
        r.equal("random rip and stitch round trips", rips, trials);
        sweep_note(r, bound, 12);
        let c = census(bound);
        let moved: usize = c
            .unitrees
            .par_iter()
            .map(|t| {
                let mut bad = 0;
                for l in all_loci(t) {
                    let [s, _, u] = l.weights(t);
                    if s < u && !is_isomorphic(&weight_exchange(t, &l).unwrap(), t) {
                        bad += 1;
                    }
                    if s == u {
                        bad += sts_moves(t, &l).unwrap().iter().filter(|m| !is_isomorphic(m, t)).count();
                    }
                }
                bad
            })
            .sum();
        r.note(format!("{} unitrees checked", c.unitrees.len()));
        for v in violations.iter().take(10) {
            r.note(v.clone());
        }
        r.equal("passport violations", violations.len(), 0);
        r.equal("moves that change a unitree", moved, 0);
    })
}

/// `a_n` from `f = 1 + t f^2 / (1 - t)`, independent of the library's recurrence.
fn rooted_by_convolution(n: usize) -> BigUint {
    let mut a = vec![BigUint::one()];
    // Running prefix sums of the convolution square.
    let mut square_prefix = BigUint::zero();
    for k in 1..=n {
        let conv: BigUint = (0..k).map(|i| &a[i] * &a[k - 1 - i]).sum();
        square_prefix += conv;
        a.push(square_prefix.clone());
    }
    a.pop().unwrap()
}

fn asymptotics() -> Outcome {
    timed(13, "asymptotics of a_200 within 2%", Some(1), |r| {
        let exact = rooted_by_convolution(200);
        r.check(exact == count_rooted(200), "a_200 from the recurrence equals the convolution oracle");
        let asym: f64 = rooted_asymptotic(200);
        let ratio = (BigRational::new(exact.into(), One::one()) / BigRational::from_float(asym).unwrap())
            .to_f64()
            .unwrap();
        r.check((ratio - 1.0).abs() < 0.02, format!("a_200 / asymptotic = {ratio:.5}"));
    })
}

fn jones_sanity(config: &Config) -> Outcome {
    let bound = config.bound(10);
    timed(14, "special monodromy groups have r <= 2", None, |r| {
        sweep_note(r, bound, 10);
        let trees: Vec<WeightedTree> =
            (1..=bound).flat_map(enumerate_weight).flat_map(|(_, ts)| ts).collect();
        let results: Vec<(bool, bool)> = trees
            .par_iter()
            .map(|t| {
                let rep = tree_group_report(t);
                let special = matches!(rep.tag, GroupTag::Special(_));
                // The classification hypothesis: primitive, not S_n or A_n, and a
                // face permutation with one nontrivial cycle.
                let covered = rep.primitive && !matches!(rep.tag, GroupTag::Symmetric | GroupTag::Alternating);
                let violation = covered && rep.face_fixed_points.is_some_and(|fixed| fixed > 2);
                (special, violation)
            })
            .collect();
        let specials = results.iter().filter(|x| x.0).count();
        let violations = results.iter().filter(|x| x.1).count();
        r.note(format!("{} trees, {specials} with a special group", trees.len()));
        r.equal("primitive non-S/A groups with r > 2", violations, 0);
    })
}
