//! Passports: the pair of black and white degree partitions.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, ParseError, Result};
use crate::partition::Partition;
use crate::Weight;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passport {
    black: Partition,
    white: Partition,
}

impl Passport {
    pub fn new(black: Partition, white: Partition) -> Result<Self> {
        if black.total() != white.total() {
            return Err(Error::MismatchedTotals(black.total(), white.total()));
        }
        Ok(Passport { black, white })
    }

    /// Shorthand for tests and examples. Panics on invalid input.
    pub fn from_parts(black: &[Weight], white: &[Weight]) -> Passport {
        Passport::new(Partition::new(black.to_vec()).unwrap(), Partition::new(white.to_vec()).unwrap())
            .unwrap()
    }

    pub fn black(&self) -> &Partition {
        &self.black
    }

    pub fn white(&self) -> &Partition {
        &self.white
    }

    pub fn total(&self) -> Weight {
        self.black.total()
    }

    /// Number of black vertices.
    pub fn p(&self) -> usize {
        self.black.len()
    }

    /// Number of white vertices.
    pub fn q(&self) -> usize {
        self.white.len()
    }

    /// Gcd of all parts of both partitions.
    pub fn gcd(&self) -> Weight {
        self.black.gcd().gcd(&self.white.gcd())
    }

    /// `(n + 1) - (p + q)`: the total excess weight of any tree with this passport.
    pub fn excess(&self) -> i64 {
        self.total() as i64 + 1 - (self.p() + self.q()) as i64
    }

    /// Edge count of any tree with this passport.
    pub fn edge_count(&self) -> usize {
        self.p() + self.q() - 1
    }

    /// All edge weights are forced to 1.
    pub fn is_ordinary(&self) -> bool {
        self.excess() == 0
    }

    pub fn swapped(&self) -> Passport {
        Passport { black: self.white.clone(), white: self.black.clone() }
    }

    pub fn scaled(&self, factor: Weight) -> Passport {
        Passport { black: self.black.scaled(factor), white: self.white.scaled(factor) }
    }

    pub fn reduced(&self) -> (Passport, Weight) {
        let d = self.gcd();
        (Passport { black: self.black.divided(d), white: self.white.divided(d) }, d)
    }

    /// Face degrees `(n - r, 1^r)` of the planar map behind any tree with this passport.
    pub fn face_partition(&self) -> Result<Partition> {
        let r = self.excess();
        if r < 0 {
            return Err(Error::NegativeR(r));
        }
        let r = r as u64;
        let n = self.total();
        let mut parts = vec![1; r as usize];
        if n > r {
            parts.push(n - r);
        }
        Partition::new(parts)
    }

    /// Every passport of total weight `n`, black partition major.
    pub fn all(n: Weight) -> Vec<Passport> {
        let parts = Partition::all(n);
        let mut out = Vec::with_capacity(parts.len() * parts.len());
        for a in &parts {
            for b in &parts {
                out.push(Passport { black: a.clone(), white: b.clone() });
            }
        }
        out
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.black, self.white)
    }
}

impl FromStr for Passport {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut sides = s.split('|');
        let (black, white) = match (sides.next(), sides.next(), sides.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(ParseError::new(s, "two partitions separated by a single `|`").into()),
        };
        Passport::new(black.parse()?, white.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p: Passport = "5^4|2^10".parse().unwrap();
        assert_eq!(p.total(), 20);
        assert_eq!((p.p(), p.q()), (4, 10));
        assert_eq!(p.to_string(), "5^4|2^10");
        assert!(matches!("5^4|2^9".parse::<Passport>(), Err(Error::MismatchedTotals(20, 18))));
        assert!(matches!("5^4".parse::<Passport>(), Err(Error::Parse(_))));
        assert!(matches!("1|1|1".parse::<Passport>(), Err(Error::Parse(_))));
    }

    #[test]
    fn face_partitions() {
        let p = Passport::from_parts(&[3, 3], &[2, 2, 2]);
        assert_eq!(p.face_partition().unwrap().parts(), &[4, 1, 1]);
        let single = Passport::from_parts(&[1], &[1]);
        assert_eq!(single.face_partition().unwrap().parts(), &[1]);
        let big = Passport::from_parts(&[5, 5, 2, 2, 2, 1, 1], &[7, 6, 4, 1]);
        assert_eq!(big.face_partition().unwrap().to_string(), "10 1^8");
        let bad = Passport::from_parts(&[1, 1], &[1, 1]);
        assert!(matches!(bad.face_partition(), Err(Error::NegativeR(-1))));
    }

    #[test]
    fn gcd_and_excess() {
        let p = Passport::from_parts(&[4, 2], &[2, 2, 2]);
        assert_eq!(p.gcd(), 2);
        assert_eq!(p.excess(), 2);
        assert_eq!(Passport::all(4).len(), 25);
    }
}
