//! Rational-tangle values and the two-bridge criteria for sums and Montesinos links.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rationals::ExtRational;

/// `x = 1/j` for an integer `j`, with `∞ = 1/0` included and `0` excluded.
pub fn is_reciprocal_of_integer(x: &ExtRational) -> bool {
    x.is_infinite() || x.num().abs().is_one()
}

/// A sum of two rational tangles is rational iff a summand is `1/j`.
pub fn sum_is_rational(a: &ExtRational, b: &ExtRational) -> bool {
    is_reciprocal_of_integer(a) || is_reciprocal_of_integer(b)
}

/// `Q(A, B, C, ...)` with factors kept as produced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MontesinosLink {
    pub factors: Vec<ExtRational>,
}

impl MontesinosLink {
    pub fn new(factors: Vec<ExtRational>) -> Self {
        MontesinosLink { factors }
    }

    pub fn is_two_bridge(&self) -> bool {
        montesinos_is_two_bridge(self)
    }

    /// Factors reduced mod 1 and sorted, with the integer parts collected.
    /// Equal fingerprints name the same link for three or fewer factors.
    pub fn fingerprint(&self) -> (Vec<ExtRational>, BigInt) {
        let mut fracs = Vec::with_capacity(self.factors.len());
        let mut total = BigInt::zero();
        for f in &self.factors {
            match f.floor() {
                Some(n) => {
                    fracs.push(f.add_int(&-&n));
                    total += n;
                }
                None => fracs.push(f.clone()),
            }
        }
        fracs.sort();
        (fracs, total)
    }
}

pub fn montesinos_is_two_bridge(q: &MontesinosLink) -> bool {
    q.factors.iter().any(is_reciprocal_of_integer)
}

impl fmt::Display for MontesinosLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(")?;
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MontesinosLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MontesinosLink {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for MontesinosLink {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("Q(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse {
                what: "Montesinos link",
                input: s.to_string(),
            })?;
        let factors = inner
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<ExtRational>>>()?;
        Ok(MontesinosLink::new(factors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    #[test]
    fn reciprocal_examples() {
        assert!(is_reciprocal_of_integer(&r("1/5")));
        assert!(is_reciprocal_of_integer(&r("-1/5")));
        assert!(is_reciprocal_of_integer(&r("1")));
        assert!(is_reciprocal_of_integer(&r("inf")));
        assert!(!is_reciprocal_of_integer(&r("2/3")));
        assert!(!is_reciprocal_of_integer(&r("0")));
        assert!(!is_reciprocal_of_integer(&r("2")));
    }

    #[test]
    fn sums() {
        assert!(sum_is_rational(&r("1/2"), &r("7/3")));
        assert!(!sum_is_rational(&r("2/3"), &r("5/7")));
        for h in -5..=5 {
            // [0,h] = -1/h
            let x = ExtRational::new(-1, h).unwrap();
            assert!(sum_is_rational(&x, &r("12/5")));
        }
    }

    #[test]
    fn montesinos_examples() {
        assert!("Q(-2,1/2,7/3)".parse::<MontesinosLink>().unwrap().is_two_bridge());
        // reference factor forms at r/s = 5/7, m = 5, p/q = 3/7
        let (rr, s, m) = (5i64, 7i64, 5i64);
        let q = MontesinosLink::new(vec![
            ExtRational::new(-(2 * s - rr), s - rr).unwrap(),
            ExtRational::new(m - 1, m).unwrap(),
            r("3/7"),
        ]);
        assert!(!q.is_two_bridge());
        // m = 0 makes the first factor m + 1 = 1 = 1/1
        let q = MontesinosLink::new(vec![r("1"), r("-7/5"), r("-7/3")]);
        assert!(q.is_two_bridge());
    }

    #[test]
    fn fingerprint_ignores_order_and_integer_shuffles() {
        let a: MontesinosLink = "Q(5/3,-2/7,4)".parse().unwrap();
        let b: MontesinosLink = "Q(2/3,5,-2/7)".parse().unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint());
    }
}
