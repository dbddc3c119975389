//! Exact counting formulas for weighted trees and cacti.
//!
//! Every formula is generic over the scalar so that it can be evaluated in
//! machine integers, floats, big integers or exact rationals. The crate root
//! fixes the big-number instances as [`Count`](crate::Count) and
//! [`Mass`](crate::Mass).

use num_bigint::BigUint;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::{Count, Mass};

/// Scalars the counting formulas can be evaluated in.
pub trait Scalar: Num + Clone + FromPrimitive {}

impl<T: Num + Clone + FromPrimitive> Scalar for T {}

fn lift<T: Scalar>(x: u64) -> T {
    T::from_u64(x).expect("scalar cannot represent a small integer")
}

/// Edge-rooted tree counts `a_0 ..= a_n`.
///
/// Uses `(k+1) a_k = 3(2k-1) a_{k-1} - 5(k-2) a_{k-2}`, the holonomic recurrence of
/// `(1 - t - sqrt(1 - 6t + 5t^2)) / 2t`. Division is exact in integer scalars.
pub fn rooted_counts<T: Scalar>(n: usize) -> Vec<T> {
    let mut a: Vec<T> = vec![T::one()];
    if n >= 1 {
        a.push(T::one());
    }
    for k in 2..=n as u64 {
        let prev = a[k as usize - 1].clone() * lift(3 * (2 * k - 1));
        let prev2 = a[k as usize - 2].clone() * lift(5 * (k - 2));
        a.push((prev - prev2) / lift(k + 1));
    }
    a
}

pub fn count_rooted_in<T: Scalar>(n: usize) -> T {
    rooted_counts::<T>(n).pop().unwrap()
}

/// Number of edge-rooted weighted trees of total weight `n`.
pub fn count_rooted(n: usize) -> Count {
    count_rooted_in(n)
}

pub fn binomial<T: Scalar>(n: u64, k: u64) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * lift(n - i) / lift(i + 1);
    }
    acc
}

pub fn catalan<T: Scalar>(m: u64) -> T {
    binomial::<T>(2 * m, m) / lift(m + 1)
}

/// Edge-rooted trees of total weight `n` with exactly `m` edges: `C(n-1, m-1) Cat_m`.
pub fn count_rooted_by_edges_in<T: Scalar>(n: u64, m: u64) -> Result<T> {
    if m < 1 || m > n {
        return Err(Error::OutOfRange(format!("edge count {m} must lie in 1..={n}")));
    }
    Ok(binomial::<T>(n - 1, m - 1) * catalan::<T>(m))
}

pub fn count_rooted_by_edges(n: u64, m: u64) -> Result<Count> {
    count_rooted_by_edges_in(n, m)
}

/// Trees of total weight `n` counted with weight `1/|Aut|`: the sum of `b_{m,n}/m`.
pub fn mass_count_in<T: Scalar>(n: u64) -> Result<T> {
    if n < 1 {
        return Err(Error::OutOfRange("total weight must be positive".into()));
    }
    let mut total = T::zero();
    for m in 1..=n {
        total = total + count_rooted_by_edges_in::<T>(n, m)? / lift(m);
    }
    Ok(total)
}

pub fn mass_count(n: u64) -> Result<Mass> {
    mass_count_in(n)
}

/// Goulden–Jackson count of cacti with the given vertex partitions, each cactus
/// weighted by `1/|Aut|`: `n^{k-2} prod (p_i - 1)! / prod_j d_{ij}!`.
/// Needs a field scalar when `k = 1`.
pub fn gj_count_in<T: Scalar>(partitions: &[Partition]) -> Result<T> {
    let k = partitions.len() as u64;
    if k == 0 {
        return Err(Error::OutOfRange("at least one partition is required".into()));
    }
    let n = partitions[0].total();
    if let Some(bad) = partitions.iter().find(|p| p.total() != n) {
        return Err(Error::MismatchedTotals(n, bad.total()));
    }
    let found: u64 = partitions.iter().map(|p| p.len() as u64).sum();
    let expected = (k - 1) * n + 1;
    if found != expected {
        return Err(Error::EulerViolation { found, expected });
    }
    let mut acc = T::one();
    for part in partitions {
        acc = acc * factorial::<T>(part.len() as u64 - 1);
        for &d in part.multiplicities().iter() {
            acc = acc / factorial::<T>(d as u64);
        }
    }
    if k >= 2 {
        for _ in 0..k - 2 {
            acc = acc * lift(n);
        }
    } else {
        acc = acc / lift(n);
    }
    Ok(acc)
}

pub fn gj_count(partitions: &[Partition]) -> Result<Mass> {
    gj_count_in(partitions)
}

pub fn factorial<T: Scalar>(n: u64) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * lift(i))
}

/// Leading asymptotic `(1/2) sqrt(5/pi) 5^n n^{-3/2}` of the rooted counts.
pub fn rooted_asymptotic<F: Float + FromPrimitive>(n: u64) -> F {
    let c = |x: f64| F::from_f64(x).unwrap();
    let nf = c(n as f64);
    let log = (c(0.5) * (c(5.0) / c(std::f64::consts::PI)).sqrt()).ln() + nf * c(5.0).ln() - c(1.5) * nf.ln();
    log.exp()
}

/// `a_n` divided by its leading asymptotic, evaluated through logarithms so it stays
/// finite far beyond the range of `f64`.
pub fn rooted_asymptotic_ratio(n: u64) -> f64 {
    let a = count_rooted(n as usize);
    let log_asym = (0.5 * (5.0 / std::f64::consts::PI).sqrt()).ln() + n as f64 * 5f64.ln() - 1.5 * (n as f64).ln();
    (big_ln(&a) - log_asym).exp()
}

/// Natural logarithm of a positive big integer.
pub fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Tables of `a_n`, `b_{m,n}` and `c_n` for `n` up to a bound.
#[derive(Clone, Debug)]
pub struct CountTable {
    pub a: Vec<Count>,
    /// `b[n][m]`, zero outside `1 <= m <= n`.
    pub b: Vec<Vec<Count>>,
    /// `c[n]`; `c[0]` is zero by convention.
    pub c: Vec<Mass>,
}

impl CountTable {
    pub fn up_to(n: usize) -> CountTable {
        let a = rooted_counts(n);
        let b = (0..=n as u64)
            .map(|k| {
                (0..=k).map(|m| count_rooted_by_edges(k, m).unwrap_or_default()).collect()
            })
            .collect();
        let c = (0..=n as u64).map(|k| mass_count(k).unwrap_or_default()).collect();
        CountTable { a, b, c }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    /// Convolution form of `f = 1 + t/(1-t) f^2`, kept independent of the closed recurrence.
    fn rooted_by_convolution(n: usize) -> Vec<u128> {
        let mut a = vec![1u128];
        for k in 1..=n {
            let conv: u128 = (0..k).map(|i| a[i] * a[k - 1 - i]).sum();
            let next = if k == 1 { a[0] + conv - 1 } else { a[k - 1] + conv };
            a.push(next);
        }
        a
    }

    #[test]
    fn first_rooted_counts() {
        let a: Vec<u64> = rooted_counts(8);
        assert_eq!(a, vec![1, 1, 3, 10, 36, 137, 543, 2219, 9285]);
    }

    #[test]
    fn recurrence_matches_convolution() {
        let conv = rooted_by_convolution(40);
        let a: Vec<u128> = rooted_counts(40);
        assert_eq!(a, conv);
    }

    #[test]
    fn rows_sum_to_rooted_counts() {
        let table = CountTable::up_to(12);
        for n in 1..=12 {
            let row: Count = table.b[n].iter().sum();
            assert_eq!(row, table.a[n]);
        }
        let row4: Vec<u64> = (1..=4).map(|m| count_rooted_by_edges_in(4, m).unwrap()).collect();
        assert_eq!(row4, vec![1, 6, 15, 14]);
        assert!(count_rooted_by_edges(4, 0).is_err());
        assert!(count_rooted_by_edges(4, 5).is_err());
    }

    #[test]
    fn mass_examples() {
        assert_eq!(mass_count(1).unwrap(), Ratio::from_integer(BigInt::from(1)));
        assert_eq!(mass_count(4).unwrap(), Ratio::new(BigInt::from(25), BigInt::from(2)));
        let as_float: f64 = mass_count_in(4).unwrap();
        assert!((as_float - 12.5).abs() < 1e-12);
    }

    #[test]
    fn gj_examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        let star = gj_count(&[p("5"), p("1^5")]).unwrap();
        assert_eq!(star, Ratio::new(BigInt::from(1), BigInt::from(5)));
        let path = gj_count(&[p("2^2"), p("2 1^2")]).unwrap();
        assert_eq!(path, Ratio::new(BigInt::from(1), BigInt::from(2)));
        let cactus = gj_count(&[p("3 2 1^2"), p("2^2 1^3"), p("2 1^5")]).unwrap();
        assert_eq!(cactus, Ratio::from_integer(BigInt::from(42)));
        assert!(matches!(gj_count(&[p("2^2"), p("2^2")]), Err(Error::EulerViolation { .. })));
    }

    #[test]
    fn asymptotic_ratio_at_200() {
        let ratio = rooted_asymptotic_ratio(200);
        assert!((ratio - 1.0).abs() < 0.02, "{ratio}");
        let direct = count_rooted(200).to_f64().unwrap() / rooted_asymptotic::<f64>(200);
        assert!((direct - ratio).abs() < 1e-9);
    }
}
