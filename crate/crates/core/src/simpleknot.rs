//! Simple knots K(p,q,k) in L(p,q): equivalence, Alexander gradings, Euler
//! characteristic, genus, and the congruence `k² + ε(k+1) ≡ 0 (mod p)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lens::LensSpace;
use crate::rationals::ExtRational;

/// `0 < k < p`, `gcd(p, q) = 1`, `q` stored in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimpleKnot {
    pub p: i64,
    pub q: i64,
    pub k: i64,
}

pub fn inverse_mod(x: i64, m: i64) -> Option<i64> {
    let e = x.rem_euclid(m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

impl SimpleKnot {
    pub fn new(p: i64, q: i64, k: i64) -> Result<Self> {
        let err = |reason| Error::InvalidKnot {
            p: p.to_string(),
            q: q.to_string(),
            k: k.to_string(),
            reason,
        };
        if p < 2 {
            return Err(err("p must be at least 2"));
        }
        if p.gcd(&q) != 1 {
            return Err(err("q must be coprime to p"));
        }
        let k = k.rem_euclid(p);
        if k == 0 {
            return Err(err("k must be nonzero mod p"));
        }
        Ok(SimpleKnot {
            p,
            q: q.rem_euclid(p),
            k,
        })
    }

    /// Same knot with `k` replaced by `min(k, p - k)`.
    pub fn canonical(&self) -> SimpleKnot {
        SimpleKnot {
            k: self.k.min(self.p - self.k),
            ..*self
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.p.gcd(&self.k) == 1
    }

    /// The at most four `(q, k)` pairs reachable by the two moves
    /// `(q, k) ↦ (q, ±k)` and `(q, k) ↦ (q⁻¹, ±q⁻¹k)`.
    pub fn orbit(&self) -> Vec<(i64, i64)> {
        let p = self.p;
        let qi = inverse_mod(self.q, p).expect("q coprime to p");
        let k2 = ((qi as i128 * self.k as i128).rem_euclid(p as i128)) as i64;
        let mut v = vec![
            (self.q, self.k),
            (self.q, (p - self.k) % p),
            (qi, k2),
            (qi, (p - k2) % p),
        ];
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl fmt::Display for SimpleKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{},{})", self.p, self.q, self.k)
    }
}

impl fmt::Debug for SimpleKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn equivalent(k1: &SimpleKnot, k2: &SimpleKnot) -> bool {
    k1.p == k2.p && k1.orbit().contains(&(k2.q, k2.k))
}

/// Alexander gradings `A_0..A_{p-1}` stored as numerators over `2p`, so that the
/// symmetrizing shift stays integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingSet {
    pub p: i64,
    pub twice_p_numerators: Vec<i64>,
}

impl GradingSet {
    pub fn values(&self) -> Vec<ExtRational> {
        self.twice_p_numerators
            .iter()
            .map(|&n| ExtRational::new(n, 2 * self.p).expect("p > 0"))
            .collect()
    }

    pub fn sorted_values(&self) -> Vec<ExtRational> {
        let mut v = self.values();
        v.sort();
        v
    }

    /// `max A` as a numerator over `2p`.
    pub fn max_numerator(&self) -> i64 {
        *self.twice_p_numerators.iter().max().expect("p >= 2")
    }

    pub fn is_symmetric(&self) -> bool {
        let mut a = self.twice_p_numerators.clone();
        let mut b: Vec<i64> = a.iter().map(|x| -x).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

/// Unsymmetrized `p·A_i` with `A_0 = 0`, from
/// `A_i - A_{i+1} = (res(i q⁻¹) - res((i+k) q⁻¹)) / p`.
pub fn relative_gradings(knot: &SimpleKnot) -> Vec<i64> {
    let p = knot.p as i128;
    let qi = inverse_mod(knot.q, knot.p).expect("q coprime to p") as i128;
    let k = knot.k as i128;
    let res = |i: i128| (i * qi).rem_euclid(p);
    let mut out = Vec::with_capacity(knot.p as usize);
    let mut a: i128 = 0;
    for i in 0..p {
        out.push(a as i64);
        a -= res(i) - res(i + k);
    }
    debug_assert_eq!(a, 0, "differences telescope around the cycle");
    out
}

pub fn alexander_set(knot: &SimpleKnot) -> GradingSet {
    let rel = relative_gradings(knot);
    let max = *rel.iter().max().expect("p >= 2");
    let min = *rel.iter().min().expect("p >= 2");
    // shift by -(max + min)/(2p) so that max = -min
    GradingSet {
        p: knot.p,
        twice_p_numerators: rel.iter().map(|&a| 2 * a - (max + min)).collect(),
    }
}

/// `χ = p/gcd(p,k) · (1 - 2 max A)`.
pub fn euler_char(knot: &SimpleKnot) -> i64 {
    let rel = relative_gradings(knot);
    let spread = rel.iter().max().expect("p >= 2") - rel.iter().min().expect("p >= 2");
    // 1 - 2 max A = (p - spread)/p
    let g = knot.p.gcd(&knot.k);
    let num = knot.p - spread;
    assert_eq!(num % g, 0, "Euler characteristic of {knot} is not integral");
    num / g
}

/// `g = (1 - χ)/2` for primitive knots with odd `χ`.
pub fn genus_primitive(knot: &SimpleKnot) -> Result<i64> {
    let err = |reason| Error::GenusUndefined {
        p: knot.p.to_string(),
        q: knot.q.to_string(),
        k: knot.k.to_string(),
        reason,
    };
    if !knot.is_primitive() {
        return Err(err("k is not primitive"));
    }
    let chi = euler_char(knot);
    if chi.rem_euclid(2) != 1 {
        return Err(err("Euler characteristic is even"));
    }
    Ok((1 - chi) / 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarSolution {
    pub k: i64,
    pub q: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarSolutions {
    pub p: i64,
    pub eps: i64,
    /// Every residue `k` in `(0, p)`, increasing.
    pub raw: Vec<StarSolution>,
    /// Deduplicated under `k ↔ p - k`, keeping `k <= p/2`.
    pub canonical: Vec<StarSolution>,
}

/// Solutions of `k² + ε(k+1) ≡ 0 (mod p)` with companion `q ≡ -k²`.
pub fn star_solutions(p: i64, eps: i64) -> StarSolutions {
    assert!(p >= 1 && (eps == 1 || eps == -1));
    let mut raw = Vec::new();
    // f(k) = k² + ε(k+1) mod p, advanced by f(k+1) - f(k) = 2k + 1 + ε
    let mut f = eps.rem_euclid(p);
    let mut sq = 0i64;
    for k in 0..p {
        if k > 0 && f == 0 {
            raw.push(StarSolution {
                k,
                q: (-sq).rem_euclid(p),
            });
        }
        f = (f + 2 * k + 1 + eps).rem_euclid(p);
        sq = (sq + 2 * k + 1).rem_euclid(p);
    }
    let mut canonical: Vec<StarSolution> = raw
        .iter()
        .map(|s| StarSolution {
            k: s.k.min(p - s.k),
            q: s.q,
        })
        .collect();
    canonical.sort_by_key(|s| s.k);
    canonical.dedup();
    StarSolutions {
        p,
        eps,
        raw,
        canonical,
    }
}

/// Primitive simple knots `K(p,q,k)`, `0 < k <= p/2`, of genus `g` in `L(p,q)`.
pub fn knots_with_genus(l: &LensSpace, g: i64) -> Vec<SimpleKnot> {
    let (Some(p), Some(q)) = (l.p().to_i64(), l.q().to_i64()) else {
        return Vec::new();
    };
    if p < 2 {
        return Vec::new();
    }
    (1..=p / 2)
        .filter(|k| p.gcd(k) == 1)
        .map(|k| SimpleKnot { p, q, k })
        .filter(|kn| genus_primitive(kn).ok() == Some(g))
        .collect()
}

/// Lens space containing the knot.
pub fn ambient(knot: &SimpleKnot) -> LensSpace {
    crate::lens::lens_normalize(&BigInt::from(knot.p), &BigInt::from(knot.q))
        .expect("validated at construction")
}
