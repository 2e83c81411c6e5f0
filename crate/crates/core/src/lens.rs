//! Lens spaces L(p,q) with S³ = L(1,0) and S¹×S² = L(0,1).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rationals::ExtRational;

/// Normalized label: `p >= 0`, `0 <= q < p` for `p >= 2`, `(1,0)` and `(0,1)` otherwise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    p: BigInt,
    q: BigInt,
}

/// `x mod m` in `[0, m)` for `m > 0`.
pub fn residue(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

/// Inverse of `x` modulo `m > 0`, if it exists, in `[0, m)`.
pub fn mod_inverse(x: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = x.extended_gcd(m);
    if e.gcd.abs().is_one() {
        Some(residue(&(e.x * e.gcd), m))
    } else {
        None
    }
}

impl LensSpace {
    pub fn s3() -> Self {
        LensSpace {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn s1xs2() -> Self {
        LensSpace {
            p: BigInt::zero(),
            q: BigInt::one(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `|H_1| = p`, with 0 meaning infinite.
    pub fn order(&self) -> &BigInt {
        &self.p
    }

    pub fn is_s3(&self) -> bool {
        self.p.is_one()
    }

    pub fn is_s1xs2(&self) -> bool {
        self.p.is_zero()
    }

    /// Representative of the oriented class: `min(q, q^-1 mod p)`.
    pub fn oriented_key(&self) -> LensSpace {
        if self.p <= BigInt::from(2) {
            return self.clone();
        }
        let inv = mod_inverse(&self.q, &self.p).expect("normalized lens space has q coprime to p");
        LensSpace {
            p: self.p.clone(),
            q: self.q.clone().min(inv),
        }
    }

    /// Representative of the unoriented class.
    pub fn unoriented_key(&self) -> LensSpace {
        self.oriented_key().min(self.mirror().oriented_key())
    }

    pub fn mirror(&self) -> LensSpace {
        lens_normalize(&self.p, &(-&self.q)).expect("mirror keeps gcd")
    }
}

pub fn lens_normalize(p: &BigInt, q: &BigInt) -> Result<LensSpace> {
    let (mut p, mut q) = (p.clone(), q.clone());
    if p.is_negative() {
        p = -p;
        q = -q;
    }
    let g = p.gcd(&q);
    if !g.is_one() {
        return Err(Error::NotCoprime {
            p: p.to_string(),
            q: q.to_string(),
            gcd: g.to_string(),
        });
    }
    if p.is_zero() {
        return Ok(LensSpace::s1xs2());
    }
    if p.is_one() {
        return Ok(LensSpace::s3());
    }
    let q = residue(&q, &p);
    Ok(LensSpace { p, q })
}

/// Convenience constructor for small literals.
pub fn lens(p: i64, q: i64) -> Result<LensSpace> {
    lens_normalize(&BigInt::from(p), &BigInt::from(q))
}

/// `q' ≡ q` or `q q' ≡ 1 (mod p)`.
pub fn homeo_oriented(l1: &LensSpace, l2: &LensSpace) -> bool {
    if l1.p != l2.p {
        return false;
    }
    if l1.p <= BigInt::one() {
        return true;
    }
    l1.q == l2.q || residue(&(&l1.q * &l2.q), &l1.p).is_one()
}

pub fn mirror(l: &LensSpace) -> LensSpace {
    l.mirror()
}

pub fn homeo_unoriented(l1: &LensSpace, l2: &LensSpace) -> bool {
    homeo_oriented(l1, l2) || homeo_oriented(l1, &l2.mirror())
}

/// `-p/q` surgery on the unknot gives L(p,q).
pub fn from_surgery(r: &ExtRational) -> LensSpace {
    lens_normalize(&(-r.num()), r.den()).expect("reduced fraction is coprime")
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_s3() {
            write!(f, "S3")
        } else if self.is_s1xs2() {
            write!(f, "S1xS2")
        } else {
            write!(f, "L({},{})", self.p, self.q)
        }
    }
}

impl fmt::Debug for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for LensSpace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for LensSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "S3" => return Ok(LensSpace::s3()),
            "S1xS2" => return Ok(LensSpace::s1xs2()),
            _ => {}
        }
        let bad = || Error::Parse {
            what: "lens space",
            input: s.to_string(),
        };
        let inner = t
            .strip_prefix("L(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, q) = inner.split_once(',').ok_or_else(bad)?;
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        lens_normalize(&p, &q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(p: i64, q: i64) -> LensSpace {
        lens(p, q).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(l(-10, -3), l(10, 3));
        assert_eq!(l(19, -12).to_string(), "L(19,7)");
        assert_eq!(l(0, 1), LensSpace::s1xs2());
        assert_eq!(l(0, -1), LensSpace::s1xs2());
        assert_eq!(l(1, 17), LensSpace::s3());
        assert_eq!(l(-1, 0), LensSpace::s3());
        assert!(lens(6, 4).is_err());
        assert!(lens(0, 0).is_err());
        assert!(lens(0, 2).is_err());
    }

    #[test]
    fn oriented_examples() {
        assert!(homeo_oriented(&l(18, 5), &l(18, 11)));
        assert!(homeo_oriented(&l(32, 23), &l(32, 7)));
        assert!(!homeo_oriented(&l(5, 1), &l(5, 4)));
        assert!(!homeo_oriented(&l(5, 1), &l(7, 1)));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(l(8, 3).mirror(), l(8, 5));
        assert!(homeo_unoriented(&l(18, 7), &l(18, 5)));
        assert!(!homeo_oriented(&l(18, 7), &l(18, 5)));
        let x = l(25, 7);
        assert_eq!(x.mirror().mirror(), x);
        assert_eq!(LensSpace::s3().mirror(), LensSpace::s3());
        assert_eq!(LensSpace::s1xs2().mirror(), LensSpace::s1xs2());
    }

    #[test]
    fn surgery_examples() {
        let r = |s: &str| s.parse::<ExtRational>().unwrap();
        assert_eq!(from_surgery(&r("-7/3")), l(7, 3));
        assert_eq!(from_surgery(&r("inf")), LensSpace::s3());
        assert_eq!(from_surgery(&r("-13/9")), l(13, 9));
        assert_eq!(from_surgery(&r("0")), LensSpace::s1xs2());
    }

    #[test]
    fn keys() {
        assert_eq!(l(18, 11).oriented_key(), l(18, 5));
        assert_eq!(l(18, 7).unoriented_key(), l(18, 5));
        assert_eq!(mod_inverse(&BigInt::from(7), &BigInt::from(32)), Some(BigInt::from(23)));
        assert_eq!(mod_inverse(&BigInt::from(4), &BigInt::from(8)), None);
    }

    #[test]
    fn parse_display() {
        for s in ["S3", "S1xS2", "L(18,5)"] {
            assert_eq!(s.parse::<LensSpace>().unwrap().to_string(), s);
        }
        assert_eq!("L(19,-12)".parse::<LensSpace>().unwrap(), l(19, 7));
    }
}
