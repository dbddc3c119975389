//! Integer partitions with a power-notation view.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, ParseError, Result};
use crate::Weight;

/// A nonempty multiset of positive integers, kept in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<Weight>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<Weight>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.is_empty() {
            return Err(Error::OutOfRange("a partition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::OutOfRange("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// `(value, exponent)` pairs, largest value first.
    pub fn from_powers(powers: &[(Weight, usize)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(v, e) in powers {
            parts.extend(std::iter::repeat_n(v, e));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[Weight] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn total(&self) -> Weight {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Weight {
        self.parts[0]
    }

    pub fn smallest(&self) -> Weight {
        self.parts[self.parts.len() - 1]
    }

    pub fn gcd(&self) -> Weight {
        self.parts.iter().fold(0, |g, &x| g.gcd(&x))
    }

    /// Power notation: `(value, exponent)` pairs with the largest value first.
    pub fn powers(&self) -> Vec<(Weight, usize)> {
        let mut out: Vec<(Weight, usize)> = Vec::new();
        for &x in &self.parts {
            match out.last_mut() {
                Some((v, e)) if *v == x => *e += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// Multiplicities `d_i` of each part size, i.e. `d[i]` is the number of parts equal to `i`.
    /// Index 0 is unused.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut d = vec![0; self.largest() as usize + 1];
        for &x in &self.parts {
            d[x as usize] += 1;
        }
        d
    }

    pub fn count_of(&self, value: Weight) -> usize {
        self.parts.iter().filter(|&&x| x == value).count()
    }

    pub fn scaled(&self, factor: Weight) -> Partition {
        Partition { parts: self.parts.iter().map(|&x| x * factor).collect() }
    }

    pub fn divided(&self, factor: Weight) -> Partition {
        Partition { parts: self.parts.iter().map(|&x| x / factor).collect() }
    }

    /// All partitions of `n` in reverse lexicographic order, starting with `(n)`.
    pub fn all(n: Weight) -> Vec<Partition> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out);
        out
    }
}

fn fill(rest: Weight, cap: Weight, current: &mut Vec<Weight>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for x in (1..=cap.min(rest)).rev() {
        current.push(x);
        fill(rest - x, x, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in self.powers() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

const PART_RULE: &str = "a part `v` or power `v^e` with positive integers written without leading zeros";

pub(crate) fn parse_positive(text: &str, rule: &'static str) -> std::result::Result<u64, ParseError> {
    let ok = !text.is_empty()
        && text.bytes().all(|b| b.is_ascii_digit())
        && !(text.len() > 1 && text.starts_with('0'));
    if !ok {
        return Err(ParseError::new(text, rule));
    }
    match text.parse::<u64>() {
        Ok(0) | Err(_) => Err(ParseError::new(text, rule)),
        Ok(v) => Ok(v),
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut parts = Vec::new();
        for token in s.split_whitespace() {
            let (value, exponent) = match token.split_once('^') {
                Some((v, e)) => (parse_positive(v, PART_RULE)?, parse_positive(e, PART_RULE)?),
                None => (parse_positive(token, PART_RULE)?, 1),
            };
            if exponent > 1 << 24 {
                return Err(ParseError::new(token, "an exponent of at most 2^24"));
            }
            parts.extend(std::iter::repeat_n(value, exponent as usize));
        }
        if parts.is_empty() {
            return Err(ParseError::new(s, "at least one part"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_power_tokens() {
        let p: Partition = "5^2 2^3 1^2".parse().unwrap();
        assert_eq!(p.parts(), &[5, 5, 2, 2, 2, 1, 1]);
        assert_eq!(p.total(), 18);
        assert_eq!(p.to_string(), "5^2 2^3 1^2");
        let q: Partition = "1 7 1".parse().unwrap();
        assert_eq!(q.to_string(), "7 1^2");
    }

    #[test]
    fn rejects_ambiguous_tokens() {
        for bad in ["", "0", "3^", "^3", "3^0", "03", "2.5", "-1", "3^^2", "x"] {
            assert!(bad.parse::<Partition>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn power_view_is_consistent() {
        let p = Partition::new(vec![3, 2, 2, 1, 1, 1]).unwrap();
        let d = p.multiplicities();
        let n: usize = d.iter().enumerate().map(|(i, &di)| i * di).sum();
        let count: usize = d.iter().sum();
        assert_eq!(n as u64, p.total());
        assert_eq!(count, p.len());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
