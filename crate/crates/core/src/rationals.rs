//! Extended rationals Q ∪ {∞} and continued fractions in the minus convention
//! `[a1, a2, ..., an] = a1 - 1/(a2 - 1/(... - 1/an))`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction `num/den` with `den >= 0`.
///
/// `∞` is stored as `1/0`; `-1/0` normalizes to it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtRational {
    num: BigInt,
    den: BigInt,
}

impl ExtRational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::Indeterminate);
        }
        Ok(Self::normalized(num, den))
    }

    /// Caller guarantees `(num, den) != (0, 0)`.
    fn normalized(mut num: BigInt, mut den: BigInt) -> Self {
        if den.is_zero() {
            return Self::infinity();
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        ExtRational { num, den }
    }

    pub fn infinity() -> Self {
        ExtRational {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        ExtRational {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.num.clone())
    }

    /// `max(|num|, den)`; `∞` has height 1.
    pub fn height(&self) -> BigInt {
        self.num.abs().max(self.den.clone())
    }

    /// `(a x + b) / (c x + d)` acting on homogeneous coordinates, so `∞` needs no special case.
    /// Requires `ad - bc != 0`.
    pub fn mobius_general(&self, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Self {
        debug_assert!(!(a * d - b * c).is_zero());
        let n = a * &self.num + b * &self.den;
        let m = c * &self.num + d * &self.den;
        Self::normalized(n, m)
    }

    pub fn recip(&self) -> Self {
        Self::normalized(self.den.clone(), self.num.clone())
    }

    pub fn neg(&self) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        ExtRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add_int(&self, n: &BigInt) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        ExtRational {
            num: &self.num + n * &self.den,
            den: self.den.clone(),
        }
    }

    /// Sum with `∞` absorbing: `x + ∞ = ∞ + x = ∞`.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_infinite() || other.is_infinite() {
            return Self::infinity();
        }
        Self::normalized(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `a - 1/self`, the continued-fraction step.
    pub fn cf_step(&self, a: &BigInt) -> Self {
        // a - den/num = (a*num - den)/num; for self = 0 this is 1/0 = ∞.
        Self::normalized(a * &self.num - &self.den, self.num.clone())
    }

    /// Smallest integer `>= self`; `None` for `∞`.
    pub fn ceil(&self) -> Option<BigInt> {
        if self.is_infinite() {
            return None;
        }
        Some(-((-&self.num).div_floor(&self.den)))
    }

    pub fn floor(&self) -> Option<BigInt> {
        if self.is_infinite() {
            return None;
        }
        Some(self.num.div_floor(&self.den))
    }

    pub fn mobius(&self, map: &Mobius) -> Self {
        match map {
            Mobius::Reciprocal => self.recip(),
            Mobius::Negate => self.neg(),
            Mobius::F => {
                // 1/(1 - x)
                Self::normalized(self.den.clone(), &self.den - &self.num)
            }
            Mobius::G => {
                // -1/(1 + x)
                Self::normalized(-&self.den, &self.den + &self.num)
            }
            Mobius::Shift(n) => self.add_int(n),
        }
    }
}

impl From<i64> for ExtRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// Finite values compare numerically; `∞` sorts after every finite value.
impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse {
            what: "extended rational",
            input: s.to_string(),
        };
        if matches!(t, "inf" | "∞" | "infinity") {
            return Ok(Self::infinity());
        }
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Self::new(n, d).map_err(|_| bad())
            }
            None => Ok(Self::from_int(t.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

/// The Möbius maps used by the slope symmetries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mobius {
    Reciprocal,
    Negate,
    /// `x ↦ 1/(1 - x)`, order 3.
    F,
    /// `x ↦ -1/(1 + x)`, order 3.
    G,
    Shift(BigInt),
}

pub fn mobius(x: &ExtRational, map: &Mobius) -> ExtRational {
    x.mobius(map)
}

/// Integer coefficients followed by an optional rational tail.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ContFrac {
    pub coeffs: Vec<BigInt>,
    pub tail: Option<ExtRational>,
}

impl ContFrac {
    pub fn new<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        ContFrac {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
            tail: None,
        }
    }

    pub fn with_tail(mut self, tail: ExtRational) -> Self {
        self.tail = Some(tail);
        self
    }

    /// Builds from a list of entries, rejecting a non-integer anywhere but last.
    pub fn from_entries(entries: &[ExtRational]) -> Result<Self> {
        let mut cf = ContFrac::default();
        let last = entries.len().saturating_sub(1);
        for (i, e) in entries.iter().enumerate() {
            match e.to_integer() {
                Some(n) => cf.coeffs.push(n),
                None if i == last => cf.tail = Some(e.clone()),
                None => return Err(Error::RationalInterior),
            }
        }
        Ok(cf)
    }

    pub fn eval(&self) -> ExtRational {
        let mut x = self.tail.clone().unwrap_or_else(ExtRational::infinity);
        for a in self.coeffs.iter().rev() {
            x = x.cf_step(a);
        }
        x
    }
}

impl fmt::Display for ContFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for a in &self.coeffs {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
            first = false;
        }
        if let Some(t) = &self.tail {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for ContFrac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                what: "continued fraction",
                input: s.to_string(),
            })?;
        if inner.trim().is_empty() {
            return Ok(ContFrac::default());
        }
        let entries = inner
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<ExtRational>>>()?;
        Self::from_entries(&entries)
    }
}

pub fn cf_eval(cf: &ContFrac) -> ExtRational {
    cf.eval()
}

/// Evaluates an all-integer sequence.
pub fn cf_eval_ints(coeffs: &[i64]) -> ExtRational {
    let mut x = ExtRational::infinity();
    for &a in coeffs.iter().rev() {
        x = x.cf_step(&BigInt::from(a));
    }
    x
}

/// The expansion with every coefficient `>= 2`; `∞` gives the empty sequence.
pub fn cf_expand_norm(x: &ExtRational) -> Result<Vec<BigInt>> {
    if !x.is_infinite() && x.num() <= x.den() {
        return Err(Error::NormDomain(x.to_string()));
    }
    let mut out = Vec::new();
    let mut x = x.clone();
    while let Some(a) = x.ceil() {
        // 1 < x <= a, so the next remainder 1/(a - x) is ∞ or > 1.
        x = ExtRational::from_int(a.clone()).sub(&x).recip();
        out.push(a);
    }
    Ok(out)
}

/// The unique `r/s` with `[a1, ..., an, r/s] = [0, j]`, namely `[0, -an, ..., -a1, j]`.
pub fn cf_solve_tail(prefix: &[BigInt], j: &BigInt) -> ExtRational {
    let mut coeffs = Vec::with_capacity(prefix.len() + 2);
    coeffs.push(BigInt::zero());
    coeffs.extend(prefix.iter().rev().map(|a| -a));
    coeffs.push(j.clone());
    ContFrac {
        coeffs,
        tail: None,
    }
    .eval()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExtRational {
        ExtRational::new(n, d).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(q(-1, 0), ExtRational::infinity());
        assert_eq!(q(4, -6), q(-2, 3));
        assert_eq!(q(0, -5), ExtRational::zero());
        assert!(ExtRational::new(0, 0).is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(cf_eval_ints(&[3, 2, 2]), q(7, 3));
        assert_eq!(cf_eval_ints(&[2, 2, 3, 5]), q(32, 23));
        assert_eq!(cf_eval_ints(&[9]), q(9, 1));
        assert_eq!(cf_eval_ints(&[]), ExtRational::infinity());
        assert_eq!(cf_eval_ints(&[0]), ExtRational::zero());
        assert_eq!(cf_eval_ints(&[0, 0]), ExtRational::infinity());
    }

    #[test]
    fn expand_examples() {
        let ints = |v: Vec<BigInt>| v.iter().map(|b| i64::try_from(b).unwrap()).collect::<Vec<_>>();
        assert_eq!(ints(cf_expand_norm(&q(7, 3)).unwrap()), vec![3, 2, 2]);
        assert_eq!(ints(cf_expand_norm(&q(13, 9)).unwrap()), vec![2, 2, 5]);
        assert_eq!(ints(cf_expand_norm(&q(19, 3)).unwrap()), vec![7, 2, 2]);
        assert!(cf_expand_norm(&ExtRational::infinity()).unwrap().is_empty());
        assert!(cf_expand_norm(&q(1, 1)).is_err());
        assert!(cf_expand_norm(&q(-3, 2)).is_err());
    }

    #[test]
    fn solve_tail_examples() {
        for j in -6i64..=6 {
            let jb = BigInt::from(j);
            // [-1, 1, r/s] = [0, j]
            let r = cf_solve_tail(&[BigInt::from(-1), BigInt::from(1)], &jb);
            assert_eq!(r, q(j - 1, 2 * j - 1));
            assert_eq!(cf_eval_ints(&[0, -1, 1, j]), r);
            assert_eq!(cf_eval_ints(&[1, -1, j]), q(2 * j + 1, j + 1));
        }
        assert_eq!(cf_solve_tail(&[], &BigInt::from(5)), q(-1, 5));
    }

    #[test]
    fn rational_tail() {
        let cf: ContFrac = "[-1,1,5/7]".parse().unwrap();
        assert_eq!(cf.eval(), q(7 - 10, 5 - 7));
        assert!("[1/2,3]".parse::<ContFrac>().is_err());
        assert_eq!("[]".parse::<ContFrac>().unwrap().eval(), ExtRational::infinity());
    }

    #[test]
    fn mobius_orders() {
        let x = q(5, 7);
        let f3 = x.mobius(&Mobius::F).mobius(&Mobius::F).mobius(&Mobius::F);
        assert_eq!(f3, x);
        let y = q(2, 3);
        let g3 = y.mobius(&Mobius::G).mobius(&Mobius::G).mobius(&Mobius::G);
        assert_eq!(g3, y);
        assert_eq!(ExtRational::infinity().recip(), ExtRational::zero());
        assert_eq!(ExtRational::zero().mobius(&Mobius::F), q(1, 1));
        assert_eq!(q(1, 1).mobius(&Mobius::F), ExtRational::infinity());
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["inf", "0", "-3", "5/7", "-2/9"] {
            assert_eq!(s.parse::<ExtRational>().unwrap().to_string(), s);
        }
        assert!("1/0".parse::<ExtRational>().unwrap().is_infinite());
        assert!("0/0".parse::<ExtRational>().is_err());
        assert!("x".parse::<ExtRational>().is_err());
    }
}
