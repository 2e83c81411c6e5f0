//! Filling families of the magic manifold M₃ with their lens-space formulas,
//! the pairwise intersection analysis behind the three-filling families, the
//! genus one fibered census and elimination pipeline, and the catalog of
//! once-punctured-torus surgery duals.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lens::{homeo_oriented, homeo_unoriented, lens_normalize, mirror, LensSpace};
use crate::normseq::{gofk_exponent_sums_lens, gofk_patterns_of, riemenschneider_dual, to_lens, NormSeq};
use crate::pentangle::slopes_up_to;
use crate::rationals::ExtRational;
use crate::simpleknot::{equivalent, genus_primitive, knots_with_genus, star_solutions, SimpleKnot};
use crate::sweep::{self, Exec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    X0,
    X1,
    X2,
    X3,
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A family member with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "family")]
pub enum Member {
    /// `M₃(n, 4 - n - 1/m)`
    X0 { m: i64, n: i64 },
    /// `M₃(3 - 1/m, r)`
    X1 { m: i64, r: ExtRational },
    /// `M₃(2 - 1/m, r)`
    X2 { m: i64, r: ExtRational },
    /// `M₃(1 - 1/m, 1 - 1/n)`
    X3 { m: i64, n: i64 },
    /// `M₃(2 - 1/m, 3 - 1/n)`
    A { m: i64, n: i64 },
    /// `M₃(5/2, r)`
    B { r: ExtRational },
}

fn int(n: i64) -> ExtRational {
    ExtRational::from_int(n)
}

fn frac(n: i64, d: i64) -> ExtRational {
    ExtRational::new(n, d).expect("nonzero literal")
}

/// `c - 1/m`
fn shifted_recip(c: i64, m: i64) -> ExtRational {
    ExtRational::new(c * m - 1, m).expect("c*m - 1 and m are not both zero")
}

fn excluded(family: Family, rule: &str) -> Error {
    Error::Excluded {
        family: family.to_string(),
        rule: rule.to_string(),
    }
}

impl Member {
    pub fn family(&self) -> Family {
        match self {
            Member::X0 { .. } => Family::X0,
            Member::X1 { .. } => Family::X1,
            Member::X2 { .. } => Family::X2,
            Member::X3 { .. } => Family::X3,
            Member::A { .. } => Family::A,
            Member::B { .. } => Family::B,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fam = self.family();
        let in_ints = |r: &ExtRational, set: &[i64]| set.iter().any(|&k| *r == int(k));
        match self {
            Member::X0 { m, n } => {
                if (0..=3).contains(n) {
                    return Err(excluded(fam, "n in {0,1,2,3}"));
                }
                if *m == -1 && (*n == 4 || *n == 5) {
                    return Err(excluded(fam, "(m,n) in {(-1,4),(-1,5)}"));
                }
            }
            Member::X1 { m, r } => {
                if *m == 0 || *m == 1 {
                    return Err(excluded(fam, "m in {0,1}"));
                }
                if r.is_infinite() || in_ints(r, &[0, 1, 2, 3]) {
                    return Err(excluded(fam, "p/q in {0,1,2,3,inf}"));
                }
            }
            Member::X2 { m, r } => {
                if (-1..=1).contains(m) {
                    return Err(excluded(fam, "m in {-1,0,1}"));
                }
                if r.is_infinite() || in_ints(r, &[0, 1, 2, 3]) {
                    return Err(excluded(fam, "p/q in {0,1,2,3,inf}"));
                }
            }
            Member::X3 { m, n } => {
                if (-1..=1).contains(m) || (-1..=1).contains(n) {
                    return Err(excluded(fam, "m, n in {-1,0,1}"));
                }
            }
            Member::A { m, n } => {
                if (-1..=1).contains(m) {
                    return Err(excluded(fam, "m in {-1,0,1}"));
                }
                if *n == 0 || *n == 1 {
                    return Err(excluded(fam, "n in {0,1}"));
                }
            }
            Member::B { r } => {
                if r.is_infinite() || in_ints(r, &[0, 1, 2, 3]) || *r == frac(3, 2) {
                    return Err(excluded(fam, "p/q in {0,1,3/2,2,3,inf}"));
                }
            }
        }
        Ok(())
    }

    /// Slopes on the two unfilled cusps of M₃.
    pub fn slopes(&self) -> [ExtRational; 2] {
        match self {
            Member::X0 { m, n } => {
                // 4 - n - 1/m
                let t = ExtRational::new((4 - n) * m - 1, *m).expect("nonzero");
                [int(*n), t]
            }
            Member::X1 { m, r } => [shifted_recip(3, *m), r.clone()],
            Member::X2 { m, r } => [shifted_recip(2, *m), r.clone()],
            Member::X3 { m, n } => [shifted_recip(1, *m), shifted_recip(1, *n)],
            Member::A { m, n } => [shifted_recip(2, *m), shifted_recip(3, *n)],
            Member::B { r } => [frac(5, 2), r.clone()],
        }
    }

    /// Filling slopes with lens-space formulas.
    pub fn slots(&self) -> Vec<ExtRational> {
        let inf = ExtRational::infinity();
        match self.family() {
            Family::X0 => vec![int(0), inf],
            Family::X1 => vec![int(1), inf],
            Family::X2 => vec![int(2), inf],
            Family::X3 => vec![int(3), inf],
            Family::A | Family::B => vec![int(1), int(2), inf],
        }
    }

    /// Unordered slope pair, for comparing members across families.
    pub fn manifold_key(&self) -> (ExtRational, ExtRational) {
        let [a, b] = self.slopes();
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::X0 { m, n } => write!(f, "X0[m={m},n={n}]"),
            Member::X1 { m, r } => write!(f, "X1[m={m},p/q={r}]"),
            Member::X2 { m, r } => write!(f, "X2[m={m},p/q={r}]"),
            Member::X3 { m, n } => write!(f, "X3[m={m},n={n}]"),
            Member::A { m, n } => write!(f, "A[m={m},n={n}]"),
            Member::B { r } => write!(f, "B[p/q={r}]"),
        }
    }
}

/// Formula remarks surfaced alongside an evaluation.
pub fn formula_note(member: &Member, slot: &ExtRational) -> Option<&'static str> {
    match (member.family(), slot.is_infinite()) {
        (Family::X1, true) | (Family::X2, true) => {
            Some("closed form written with n; evaluated with the family parameter m")
        }
        (Family::X1, false) => Some(
            "closed form as tabulated; it disagrees with the A and B formulas on shared members",
        ),
        _ => None,
    }
}

fn lens_of(p: BigInt, q: BigInt) -> Result<LensSpace> {
    lens_normalize(&p, &q)
}

/// Closed-form lens space of a filling, after checking the family's exclusions.
pub fn family_lens(member: &Member, slot: &ExtRational) -> Result<LensSpace> {
    member.validate()?;
    let fam = member.family();
    if !member.slots().contains(slot) {
        return Err(excluded(fam, &format!("slot {slot} has no lens-space formula")));
    }
    let big = |x: i64| BigInt::from(x);
    let inf = slot.is_infinite();
    match member {
        Member::X0 { m, n } => {
            let (m, n) = (big(*m), big(*n));
            if inf {
                let u: BigInt = BigInt::one() - &m * (big(4) - &n);
                lens_of(-(&n * &u) - &m, u)
            } else {
                lens_of(&m * 6 - 1, &m * 2 - 1)
            }
        }
        Member::X1 { m, r } => {
            let (m, p, q) = (big(*m), r.num().clone(), r.den().clone());
            if inf {
                let u: BigInt = &p * 3 - &q;
                lens_of(-(&m * &u) + &p, u)
            } else {
                let u: BigInt = &p - &q * 3;
                lens_of(&m * &u * 2 + &p - &q, &m * &u - &q)
            }
        }
        Member::X2 { m, r } => {
            let (m, p, q) = (big(*m), r.num().clone(), r.den().clone());
            if inf {
                let u: BigInt = &p * 2 - &q;
                lens_of(-(&m * &u) + &p, u)
            } else {
                let u: BigInt = &p - &q * 2;
                lens_of(&m * &u * 3 - &p * 2 + &q, &m * &u - &p + &q)
            }
        }
        Member::X3 { m, n } => {
            let (m, n) = (big(*m), big(*n));
            if inf {
                lens_of(&m + &n - 1, big(-1))
            } else {
                let (a, b) = (&m * 2 + 1, &n * 2 + 1);
                lens_of(&a * &b - 4, &m * &b - 2)
            }
        }
        Member::A { m, n } => {
            let (m, n) = (big(*m), big(*n));
            let mn = &m * &n;
            if inf {
                lens_of(&mn * 5 - &m * 2 - &n * 3 + 1, big(3) - &m * 5)
            } else if *slot == int(1) {
                lens_of(&mn * 2 + &m + &n * 2 - 1, &mn + &m + &n)
            } else {
                lens_of(&mn * 3 - &m * 3 - &n * 5 + 2, &mn - &m - &n * 2 + 1)
            }
        }
        Member::B { r } => {
            let (p, q) = (r.num().clone(), r.den().clone());
            if inf {
                lens_of(&p * 5 - &q * 2, &p * 2 - &q)
            } else if *slot == int(1) {
                lens_of(&q * 11 - &p * 3, &p * 2 - &q * 7)
            } else {
                lens_of(&p * 8 - &q * 13, &p * 3 - &q * 5)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFilling {
    pub member: Member,
    pub slot: ExtRational,
    pub lens: LensSpace,
    pub note: Option<&'static str>,
}

/// Every lens filling of a member, in slot order.
pub fn family_fillings(member: &Member) -> Result<Vec<FamilyFilling>> {
    member
        .slots()
        .into_iter()
        .map(|slot| {
            Ok(FamilyFilling {
                lens: family_lens(member, &slot)?,
                note: formula_note(member, &slot),
                member: member.clone(),
                slot,
            })
        })
        .collect()
}

/// `M₃(α, β)` is non-hyperbolic when a slope is one of `∞, 0, 1, 2, 3` or the
/// pair is one of `{-1,-1}`, `{4,1/2}`, `{3/2,5/2}`.
pub fn m3_pair_is_exceptional(a: &ExtRational, b: &ExtRational) -> bool {
    let single = |s: &ExtRational| s.is_infinite() || (0..=3).any(|k| *s == int(k));
    let pairs = [
        (int(-1), int(-1)),
        (int(4), frac(1, 2)),
        (frac(3, 2), frac(5, 2)),
    ];
    single(a)
        || single(b)
        || pairs
            .iter()
            .any(|(x, y)| (a == x && b == y) || (a == y && b == x))
}

/// The four families a two-family coincidence may land in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ThreeFillingClass {
    /// `A_{m,n}`
    A,
    /// `B_{p/q}`
    B,
    /// `M₃(4, -1/m)`, fillings `0, 1, ∞`
    Case1a,
    /// `M₃(3/2, 1 - 1/n)`, fillings `2, 3, ∞`
    Case3a,
}

fn integer_solving(v: &ExtRational, c: i64) -> Option<i64> {
    // v = c - 1/x  ⇒  x = 1/(c - v)
    v.neg().add_int(&BigInt::from(c)).recip().to_integer()?.to_i64()
}

/// Classes whose parameterisation reaches the slope pair, with valid parameters.
pub fn classify_pair(a: &ExtRational, b: &ExtRational) -> Vec<ThreeFillingClass> {
    let mut out = BTreeSet::new();
    for (x, y) in [(a, b), (b, a)] {
        if let (Some(m), Some(n)) = (integer_solving(x, 2), integer_solving(y, 3)) {
            if (Member::A { m, n }).validate().is_ok() {
                out.insert(ThreeFillingClass::A);
            }
        }
        if *x == frac(5, 2) && (Member::B { r: y.clone() }).validate().is_ok() {
            out.insert(ThreeFillingClass::B);
        }
        // -1/m = 0 - 1/m
        if *x == int(4) && integer_solving(y, 0).is_some_and(|m| m != 0) {
            out.insert(ThreeFillingClass::Case1a);
        }
        if *x == frac(3, 2) && integer_solving(y, 1).is_some_and(|n| !(-1..=1).contains(&n)) {
            out.insert(ThreeFillingClass::Case3a);
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coincidence {
    pub subcase: &'static str,
    pub lower: Member,
    pub upper: Member,
    pub slopes: (ExtRational, ExtRational),
    pub classes: Vec<ThreeFillingClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub bound: i64,
    pub members_swept: BTreeMap<String, usize>,
    pub coincidences: usize,
    pub per_subcase: BTreeMap<&'static str, usize>,
    pub per_class: BTreeMap<String, usize>,
    /// Distinct integer parameters forced in the subcases that pin them.
    pub subcase_parameters: BTreeMap<&'static str, Vec<Vec<i64>>>,
    pub counterexamples: Vec<Coincidence>,
}

fn members_in_range(fam: Family, bound: i64) -> Vec<Member> {
    let ints: Vec<i64> = (-bound..=bound).collect();
    let slopes = slopes_up_to(bound);
    let mut out = Vec::new();
    for &m in &ints {
        match fam {
            Family::X0 | Family::X3 => {
                for &n in &ints {
                    out.push(if fam == Family::X0 {
                        Member::X0 { m, n }
                    } else {
                        Member::X3 { m, n }
                    });
                }
            }
            Family::X1 | Family::X2 => {
                for r in &slopes {
                    out.push(if fam == Family::X1 {
                        Member::X1 { m, r: r.clone() }
                    } else {
                        Member::X2 { m, r: r.clone() }
                    });
                }
            }
            _ => unreachable!("only the two-filling families are swept"),
        }
    }
    out.retain(|mem| {
        let [a, b] = mem.slopes();
        mem.validate().is_ok() && !m3_pair_is_exceptional(&a, &b)
    });
    out
}

/// Subcase label from which slope of the lower member equals the first slope
/// of the upper member.
fn subcase(case: usize, lower_first_matches_upper_first: bool) -> &'static str {
    match (case, lower_first_matches_upper_first) {
        (1, true) => "1a",
        (1, false) => "1b",
        (2, true) => "2a",
        (2, false) => "2b",
        (3, true) => "3a",
        _ => "3b",
    }
}

/// Parameters a subcase pins, or `None` when it pins none.
fn pinned(sub: &str, lower: &Member, upper: &Member) -> Option<Vec<i64>> {
    let m_of = |x: &Member| match x {
        Member::X0 { m, .. }
        | Member::X1 { m, .. }
        | Member::X2 { m, .. }
        | Member::X3 { m, .. } => *m,
        _ => unreachable!(),
    };
    match (sub, lower, upper) {
        ("1a", Member::X0 { n, .. }, _) => Some(vec![*n, m_of(upper)]),
        ("1b", Member::X0 { m, n }, _) => Some(vec![*m, m_of(upper), *n]),
        ("2a", _, _) | ("3a", _, _) => Some(vec![m_of(lower), m_of(upper)]),
        ("3b", _, Member::X3 { n, .. }) => Some(vec![m_of(lower), *n]),
        _ => None,
    }
}

/// Expected pinned parameters per subcase.
pub fn expected_subcase_parameters() -> BTreeMap<&'static str, Vec<Vec<i64>>> {
    BTreeMap::from([
        // (n, m') with n = 3 - 1/m'
        ("1a", vec![vec![4, -1]]),
        // (m, m', n)
        ("1b", vec![vec![1, -1, -1]]),
        // (m', m'')
        ("2a", vec![vec![2, -2]]),
        // (m'', m''')
        ("3a", vec![vec![2, -2]]),
        // (m'', n''')
        ("3b", vec![vec![2, -2]]),
    ])
}

fn case_coincidences(case: usize, lower: &[Member], upper: &[Member], exec: Exec) -> Vec<Coincidence> {
    let mut index: HashMap<(ExtRational, ExtRational), Vec<&Member>> = HashMap::new();
    for u in upper {
        index.entry(u.manifold_key()).or_default().push(u);
    }
    let found = sweep::map(exec, lower, |l| {
        let mut out = Vec::new();
        let Some(ups) = index.get(&l.manifold_key()) else {
            return out;
        };
        let [l0, _] = l.slopes();
        for u in ups {
            let [u0, u1] = u.slopes();
            let mut subs = Vec::new();
            if l0 == u0 {
                subs.push(subcase(case, true));
            }
            if l0 == u1 {
                subs.push(subcase(case, false));
            }
            for sub in subs {
                let key = l.manifold_key();
                out.push(Coincidence {
                    subcase: sub,
                    lower: l.clone(),
                    upper: (*u).clone(),
                    classes: classify_pair(&key.0, &key.1),
                    slopes: key,
                });
            }
        }
        out
    });
    found.into_iter().flatten().collect()
}

/// Sweeps X⁰–X³ with `|m|, |n| <= bound` and slope heights `<= bound`, and
/// checks that every coincidence between families with adjacent lens slots is
/// an A or B member or one of the two subsumed families.
pub fn verify_three_filling_intersections(bound: i64, exec: Exec) -> IntersectionReport {
    let fams = [Family::X0, Family::X1, Family::X2, Family::X3];
    let members: Vec<Vec<Member>> = fams.iter().map(|&f| members_in_range(f, bound)).collect();
    let mut all = Vec::new();
    for case in 1..=3 {
        all.extend(case_coincidences(case, &members[case - 1], &members[case], exec));
    }
    let expected = expected_subcase_parameters();
    let mut per_subcase = BTreeMap::new();
    let mut per_class: BTreeMap<String, usize> = BTreeMap::new();
    let mut params: BTreeMap<&'static str, BTreeSet<Vec<i64>>> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for c in &all {
        *per_subcase.entry(c.subcase).or_default() += 1;
        for cl in &c.classes {
            *per_class.entry(format!("{cl:?}")).or_default() += 1;
        }
        let pin = pinned(c.subcase, &c.lower, &c.upper);
        let pin_ok = match (&pin, expected.get(c.subcase)) {
            (Some(p), Some(exp)) => exp.contains(p),
            _ => true,
        };
        if let Some(p) = pin {
            params.entry(c.subcase).or_default().insert(p);
        }
        if c.classes.is_empty() || !pin_ok {
            counterexamples.push(c.clone());
        }
    }
    IntersectionReport {
        bound,
        members_swept: fams
            .iter()
            .zip(&members)
            .map(|(f, v)| (f.to_string(), v.len()))
            .collect(),
        coincidences: all.len(),
        per_subcase,
        per_class,
        subcase_parameters: params
            .into_iter()
            .map(|(k, v)| (k, v.into_iter().collect()))
            .collect(),
        counterexamples,
    }
}

/// How two lens spaces compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Oriented-homeomorphic only.
    Same,
    /// Orientation-reversing homeomorphic only.
    Mirror,
    /// Admits both.
    Both,
    Unrelated,
}

pub fn orientation_relation(a: &LensSpace, b: &LensSpace) -> Orientation {
    match (homeo_oriented(a, b), homeo_oriented(a, &mirror(b))) {
        (true, true) => Orientation::Both,
        (true, false) => Orientation::Same,
        (false, true) => Orientation::Mirror,
        (false, false) => Orientation::Unrelated,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlotComparison {
    pub parameter: i64,
    pub source: Member,
    pub source_slot: ExtRational,
    pub target: Member,
    pub target_slot: ExtRational,
    pub source_lens: Option<LensSpace>,
    pub target_lens: Option<LensSpace>,
    pub relation: Option<Orientation>,
    pub error: Option<String>,
}

impl SlotComparison {
    pub fn is_mirror(&self) -> bool {
        matches!(self.relation, Some(Orientation::Mirror | Orientation::Both))
    }

    pub fn is_unoriented_equal(&self) -> bool {
        matches!(
            self.relation,
            Some(Orientation::Mirror | Orientation::Both | Orientation::Same)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationReport {
    pub bound: i64,
    pub comparisons: Vec<SlotComparison>,
    /// Parameters skipped because a side is excluded.
    pub rejected: Vec<(i64, String)>,
    pub all_mirror: bool,
    pub all_unoriented_equal: bool,
    /// Comparisons that are not orientation-reversing.
    pub counterexamples: Vec<SlotComparison>,
}

fn compare(parameter: i64, source: &Member, ss: ExtRational, target: &Member, ts: ExtRational) -> SlotComparison {
    let a = family_lens(source, &ss);
    let b = family_lens(target, &ts);
    let relation = match (&a, &b) {
        (Ok(x), Ok(y)) => Some(orientation_relation(x, y)),
        _ => None,
    };
    let error = a.as_ref().err().or(b.as_ref().err()).map(|e| e.to_string());
    SlotComparison {
        parameter,
        source: source.clone(),
        source_slot: ss,
        target: target.clone(),
        target_slot: ts,
        source_lens: a.ok(),
        target_lens: b.ok(),
        relation,
        error,
    }
}

/// The orientation-reversing map `M₃(3/2, α, β) ≅ M₃(4, (1-α)/(2-α), 3-β)`
/// applied to the A members through `M₃(3/2)` and `M₃(4)`, comparing the
/// family formulas on both sides for parameters in `[-bound, bound]`.
pub fn orientation_consistency(bound: i64) -> OrientationReport {
    let inf = ExtRational::infinity;
    let mut comparisons = Vec::new();
    let mut rejected = Vec::new();
    for n in -bound..=bound {
        // A_{2,n} = M₃(3/2, 3 - 1/n)  ↦  M₃(4, 1/n) = X⁰_{-n,4} = X¹_{-1,1/n}
        let a = Member::A { m: 2, n };
        let x0 = Member::X0 { m: -n, n: 4 };
        let Ok(r) = ExtRational::new(1, n) else { continue };
        let x1 = Member::X1 { m: -1, r };
        if let Some(e) = [&a, &x0, &x1].iter().find_map(|m| m.validate().err()) {
            rejected.push((n, format!("Case 1a side: {e}")));
            continue;
        }
        comparisons.push(compare(n, &a, int(1), &x0, int(0)));
        comparisons.push(compare(n, &a, int(2), &x0, inf()));
        comparisons.push(compare(n, &a, int(2), &x1, inf()));
        comparisons.push(compare(n, &a, inf(), &x1, int(1)));
    }
    for m in -bound..=bound {
        // A_{m,-1} = M₃(2 - 1/m, 4)  ↦  M₃(3/2, 1 + 1/m) = X²_{2,(m+1)/m} = X³_{-2,-m}
        let a = Member::A { m, n: -1 };
        let Ok(r) = ExtRational::new(m + 1, m) else { continue };
        let x2 = Member::X2 { m: 2, r };
        let x3 = Member::X3 { m: -2, n: -m };
        if let Some(e) = [&a, &x2, &x3].iter().find_map(|m| m.validate().err()) {
            rejected.push((m, format!("Case 3a side: {e}")));
            continue;
        }
        comparisons.push(compare(m, &a, int(1), &x2, inf()));
        comparisons.push(compare(m, &a, int(1), &x3, inf()));
        comparisons.push(compare(m, &a, int(2), &x3, int(3)));
        comparisons.push(compare(m, &a, inf(), &x2, int(2)));
    }
    let counterexamples: Vec<SlotComparison> =
        comparisons.iter().filter(|c| !c.is_mirror()).cloned().collect();
    OrientationReport {
        bound,
        all_mirror: counterexamples.is_empty(),
        all_unoriented_equal: comparisons.iter().all(SlotComparison::is_unoriented_equal),
        comparisons,
        rejected,
        counterexamples,
    }
}

/// `(p, q, k)` with `-k² ≡ q (mod p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CensusEntry {
    pub p: i64,
    pub q: i64,
    pub k: i64,
}

impl CensusEntry {
    pub fn satisfies_congruence(&self) -> bool {
        (self.k * self.k + self.q).rem_euclid(self.p) == 0
    }

    pub fn knot(&self) -> Option<SimpleKnot> {
        SimpleKnot::new(self.p, self.q, self.k).ok()
    }
}

/// Rows of the small-type table: sequence, tabulated lens space, tabulated `k`.
pub fn small_type_rows(n_max: i64) -> Vec<(NormSeq, (i64, i64), i64)> {
    let mut rows: Vec<(NormSeq, (i64, i64), i64)> = (1..=n_max)
        .map(|n| (NormSeq::new(vec![2; n as usize]), (n + 1, 1), 1))
        .collect();
    rows.push((NormSeq::new(vec![2, 2, 3, 5]), (32, 7), 5));
    rows.push((NormSeq::new(vec![4, 3, 2]), (18, 11), 5));
    rows.push((NormSeq::new(vec![2, 3, 4]), (18, 5), 7));
    rows
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LargeTemplate {
    /// `(a₁..a_ℓ, 2, b_m..b₂)`
    Insert2,
    /// `(a₁..a_ℓ+b_m..b₂)`
    Merge,
    /// `(a₁..a_ℓ, 5, b_m..b₂)`
    Insert5,
    /// `(a₁..a_ℓ+1, 2, 2, b_m+1..b₂)`
    Bump22,
    /// `(a₁..a_ℓ, b_m..b₁)`
    Concat,
    /// `(a₁..a_ℓ+b_m+1..b₁)`
    MergePlus1,
}

impl LargeTemplate {
    pub const ALL: [LargeTemplate; 6] = [
        LargeTemplate::Insert2,
        LargeTemplate::Merge,
        LargeTemplate::Insert5,
        LargeTemplate::Bump22,
        LargeTemplate::Concat,
        LargeTemplate::MergePlus1,
    ];

    /// Instantiates the template; the block `b_m..b₂` has length `m - 1`, so a
    /// merged entry followed by a block of length `-1` cancels.
    pub fn instantiate(self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let (l, m) = (a.len(), b.len());
        let head = &a[..l - 1];
        let al = a[l - 1];
        let bm = b[m - 1];
        // b_{m-1}, ..., b_2
        let mid: Vec<i64> = b[1..m.saturating_sub(1).max(1)].iter().rev().copied().collect();
        let mid = if m >= 2 { mid } else { Vec::new() };
        // b_m, ..., b_2
        let tail2: Vec<i64> = b[1..].iter().rev().copied().collect();
        let mut v: Vec<i64> = head.to_vec();
        match self {
            LargeTemplate::Insert2 | LargeTemplate::Insert5 => {
                v.push(al);
                v.push(if self == LargeTemplate::Insert2 { 2 } else { 5 });
                v.extend(tail2);
            }
            LargeTemplate::Merge => {
                if m >= 2 {
                    v.push(al + bm);
                    v.extend(mid);
                }
            }
            LargeTemplate::Bump22 => {
                v.extend([al + 1, 2, 2]);
                if m >= 2 {
                    v.push(bm + 1);
                    v.extend(mid);
                }
            }
            LargeTemplate::Concat => {
                v.push(al);
                v.extend(b.iter().rev());
            }
            LargeTemplate::MergePlus1 => {
                v.push(al + bm + 1);
                v.extend(b[..m - 1].iter().rev());
            }
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusLens {
    pub sequence: NormSeq,
    pub lens: LensSpace,
    pub source: String,
    /// Every `0 < k < p` with `-k² ≡ q`.
    pub roots: Vec<i64>,
    pub family: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallRowCheck {
    pub sequence: NormSeq,
    pub tabulated: (i64, i64, i64),
    pub computed_lens: LensSpace,
    pub lens_matches: bool,
    pub tabulated_k_satisfies_congruence: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub t_bound: i64,
    pub seq_bound: i64,
    pub sequences_enumerated: usize,
    pub small_rows: Vec<SmallRowCheck>,
    pub lens_spaces: Vec<CensusLens>,
    /// One representative per Lemma 2.5 class, `k` the least root in its class.
    pub entries: Vec<CensusEntry>,
    pub expected: Vec<CensusEntry>,
    pub missing: Vec<CensusEntry>,
    pub extra: Vec<CensusLens>,
}

/// The nine families, with the first written `(n,-1,1)` so that `-k² ≡ q`.
pub fn nine_family_match(e: &CensusEntry) -> Option<String> {
    let kn = e.knot()?;
    let sporadic = [(7, 3, 2), (13, 4, 3), (13, 9, 2), (18, 11, 5), (19, 3, 4), (27, 11, 4), (32, 7, 5)];
    for (p, q, k) in sporadic {
        if p == e.p && equivalent(&kn, &SimpleKnot::new(p, q, k).ok()?) {
            return Some(format!("({p},{q},{k})"));
        }
    }
    if let Ok(k0) = SimpleKnot::new(e.p, -1, 1) {
        if equivalent(&kn, &k0) {
            return Some("(n,-1,1)".into());
        }
    }
    if (e.p - 14).rem_euclid(9) == 0 {
        if let Ok(k0) = SimpleKnot::new(e.p, -9, 3) {
            if equivalent(&kn, &k0) {
                return Some(format!("(9t+14,-9,3) t={}", (e.p - 14) / 9));
            }
        }
    }
    None
}

fn roots(p: i64, q: i64) -> Vec<i64> {
    (1..p).filter(|k| (k * k + q).rem_euclid(p) == 0).collect()
}

fn census_lens(seq: NormSeq, source: String) -> Option<CensusLens> {
    let lens = to_lens(&seq);
    let p = lens.p().to_i64()?;
    if p < 2 {
        return None;
    }
    let q = lens.q().to_i64()?;
    let rs = roots(p, q);
    let family = rs
        .iter()
        .find_map(|&k| nine_family_match(&CensusEntry { p, q, k }));
    Some(CensusLens {
        sequence: seq,
        lens,
        source,
        roots: rs,
        family,
    })
}

fn all_sequences(len_max: usize, entry_max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..len_max {
        let mut next = Vec::new();
        for s in &layer {
            for a in 2..=entry_max {
                let mut t = s.clone();
                t.push(a);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn canonical_class(e: &CensusEntry) -> CensusEntry {
    // least (q, k) over the Lemma 2.5 orbit
    let kn = e.knot().expect("census entries are valid knots");
    let (q, k) = kn
        .orbit()
        .into_iter()
        .map(|(q, k)| (q, k.min(e.p - k)))
        .min()
        .expect("orbit is nonempty");
    CensusEntry { p: e.p, q, k }
}

/// Small-type rows plus every large-type template instantiated on dual pairs
/// with either member of length `<= seq_bound` and entries `<= seq_bound + 3`,
/// kept when the sequence is in the genus one fibered table.
pub fn gofklens_census(t_bound: i64, seq_bound: i64, exec: Exec) -> CensusReport {
    let n_max = seq_bound.max(1);
    let mut small_rows = Vec::new();
    let mut lenses = Vec::new();
    for (seq, (pp, pq), pk) in small_type_rows(n_max) {
        let computed = to_lens(&seq);
        let tabulated = lens_normalize(&BigInt::from(pp), &BigInt::from(pq)).expect("coprime");
        small_rows.push(SmallRowCheck {
            sequence: seq.clone(),
            tabulated: (pp, pq, pk),
            lens_matches: homeo_oriented(&computed, &tabulated),
            computed_lens: computed,
            tabulated_k_satisfies_congruence: (pk * pk + pq).rem_euclid(pp) == 0,
        });
        lenses.extend(census_lens(seq.clone(), format!("small {seq}")));
    }
    let xs = all_sequences(seq_bound.max(0) as usize, seq_bound + 3);
    let found = sweep::map(exec, &xs, |x| {
        let mut out = Vec::new();
        let Ok(dual) = riemenschneider_dual(&NormSeq::new(x.clone())) else {
            return out;
        };
        let y = dual.entries().to_vec();
        for (a, b) in [(x.as_slice(), y.as_slice()), (y.as_slice(), x.as_slice())] {
            for t in LargeTemplate::ALL {
                let seq = NormSeq::new(t.instantiate(a, b));
                if gofk_patterns_of(&seq).is_empty() {
                    continue;
                }
                let src = format!("{t:?} a={} b={}", NormSeq::new(a.to_vec()), NormSeq::new(b.to_vec()));
                out.extend(census_lens(seq, src));
            }
        }
        out
    });
    lenses.extend(found.into_iter().flatten());
    // one record per oriented lens space, first source wins
    let mut seen = BTreeSet::new();
    lenses.retain(|c| seen.insert(c.lens.oriented_key()));
    lenses.sort_by(|a, b| (a.lens.p(), a.lens.q()).cmp(&(b.lens.p(), b.lens.q())));

    let mut entries = BTreeSet::new();
    for c in &lenses {
        let (p, q) = (c.lens.p().to_i64().unwrap(), c.lens.q().to_i64().unwrap());
        for &k in &c.roots {
            let e = CensusEntry { p, q, k };
            if nine_family_match(&e).is_some() {
                entries.insert(canonical_class(&e));
            }
        }
    }
    let mut expected = BTreeSet::new();
    for n in 2..=n_max + 1 {
        expected.insert(canonical_class(&CensusEntry { p: n, q: (n - 1), k: 1 }));
    }
    for (p, q, k) in [(7, 3, 2), (13, 4, 3), (13, 9, 2), (18, 11, 5), (19, 3, 4), (27, 11, 4), (32, 7, 5)] {
        expected.insert(canonical_class(&CensusEntry { p, q, k }));
    }
    for t in 1..=t_bound {
        let p = 9 * t + 14;
        expected.insert(canonical_class(&CensusEntry { p, q: (-9i64).rem_euclid(p), k: 3 }));
    }
    let missing = expected.difference(&entries).copied().collect();
    let extra = lenses.iter().filter(|c| c.family.is_none()).cloned().collect();
    CensusReport {
        t_bound,
        seq_bound,
        sequences_enumerated: xs.len(),
        small_rows,
        lens_spaces: lenses,
        entries: entries.into_iter().collect(),
        expected: expected.into_iter().collect(),
        missing,
        extra,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarBranch {
    pub lens: LensSpace,
    pub p: i64,
    pub eps: i64,
    /// `(q, k, genus)` per raw solution; genus is absent for non-primitive knots.
    pub solutions: Vec<(i64, i64, Option<i64>)>,
    /// Genera of the solutions realized by primitive simple knots in `lens`.
    pub realized_genera: Vec<i64>,
    pub survives: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AltPipelineReport {
    pub t_max: i64,
    pub listed: Vec<LensSpace>,
    pub after_even_and_size: Vec<LensSpace>,
    pub after_not_unknot_surgery: Vec<LensSpace>,
    /// Exponent sums of each lens space's mirror.
    pub exponent_sums: Vec<(LensSpace, Vec<i64>)>,
    pub after_exponent_sums: Vec<LensSpace>,
    pub branches: Vec<StarBranch>,
    /// `(p, lens)` pairs whose branch survives.
    pub survivors: Vec<(i64, LensSpace)>,
    pub counterexamples: Vec<String>,
}

fn dedup_oriented(v: Vec<LensSpace>) -> Vec<LensSpace> {
    let mut seen = BTreeSet::new();
    v.into_iter().filter(|l| seen.insert(l.oriented_key())).collect()
}

fn lens_i(p: i64, q: i64) -> LensSpace {
    lens_normalize(&BigInt::from(p), &BigInt::from(q)).expect("coprime")
}

/// Eliminates lens spaces of the nine families (`n <= 2 t_max + 16`,
/// `t <= 2 t_max`) as alternative surgeries on genus one fibered Berge knots.
pub fn alt_gofk_pipeline(t_max: i64) -> AltPipelineReport {
    let mut listed = Vec::new();
    for n in 2..=2 * t_max + 16 {
        listed.push(lens_i(n, -1));
    }
    for (p, q) in [(7, 3), (13, 4), (13, 9), (18, 11), (19, 3), (27, 11), (32, 7)] {
        listed.push(lens_i(p, q));
    }
    for t in 1..=2 * t_max {
        listed.push(lens_i(9 * t + 14, -9));
    }
    let listed = dedup_oriented(listed);
    let two = BigInt::from(2);
    let after_a: Vec<LensSpace> = listed
        .iter()
        .filter(|l| (l.p() % &two).is_zero() && l.p() >= &BigInt::from(18))
        .cloned()
        .collect();
    // positive N-surgery on the unknot is L(N, -1) in this orientation
    let after_b: Vec<LensSpace> = after_a
        .iter()
        .filter(|l| !homeo_oriented(l, &lens_normalize(l.p(), &-BigInt::one()).expect("coprime")))
        .cloned()
        .collect();
    // Exponent sums are taken in the surgery orientation, where positive
    // surgery on the unknot is L(N, 1); that is the mirror of these labels.
    let allowed = [-1i64, 1, 3];
    let mut sums = Vec::new();
    let mut after_c = Vec::new();
    for l in &after_b {
        let s: Vec<i64> = gofk_exponent_sums_lens(&mirror(l)).into_iter().collect();
        if s.iter().any(|e| allowed.contains(e)) {
            after_c.push(l.clone());
        }
        sums.push((l.clone(), s));
    }
    let after_c = dedup_oriented(after_c);
    let mut branches = Vec::new();
    for l in &after_c {
        let n = l.p().to_i64().expect("small order");
        for p in [n - 1, n + 1] {
            for eps in [1, -1] {
                let sols = star_solutions(p, eps);
                let solutions: Vec<(i64, i64, Option<i64>)> = sols
                    .raw
                    .iter()
                    .map(|s| {
                        let g = SimpleKnot::new(p, s.q, s.k).ok().and_then(|kn| genus_primitive(&kn).ok());
                        (s.q, s.k, g)
                    })
                    .collect();
                let genera: BTreeSet<i64> = solutions.iter().filter_map(|s| s.2).collect();
                let realized_genera: Vec<i64> = genera
                    .into_iter()
                    .filter(|&g| !knots_with_genus(l, g).is_empty())
                    .collect();
                branches.push(StarBranch {
                    lens: l.clone(),
                    p,
                    eps,
                    survives: !realized_genera.is_empty(),
                    solutions,
                    realized_genera,
                });
            }
        }
    }
    let mut survivors: Vec<(i64, LensSpace)> = branches
        .iter()
        .filter(|b| b.survives)
        .map(|b| (b.p, b.lens.clone()))
        .collect();
    survivors.sort_by_key(|s| s.0);
    survivors.dedup();
    let mut counterexamples = Vec::new();
    let expect_c: Vec<LensSpace> = [(18, 11), (32, 7), (50, -9), (68, -9)]
        .iter()
        .map(|&(p, q)| lens_i(p, q))
        .collect();
    if after_c.len() != expect_c.len() || !expect_c.iter().all(|e| after_c.iter().any(|l| homeo_oriented(l, e))) {
        counterexamples.push(format!("exponent-sum survivors {after_c:?}"));
    }
    let ps: Vec<i64> = survivors.iter().map(|s| s.0).collect();
    if ps != [19, 31] {
        counterexamples.push(format!("final survivors {ps:?}"));
    }
    AltPipelineReport {
        t_max,
        listed,
        after_even_and_size: after_a,
        after_not_unknot_surgery: after_b,
        exponent_sums: sums,
        after_exponent_sums: after_c,
        branches,
        survivors,
        counterexamples,
    }
}

/// `K^{upper}_{lower}`: core of the `lower` filling with `upper` on the other
/// component (or `Y` with the axis filled at `lower`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptKnot {
    pub upper: ExtRational,
    pub lower: ExtRational,
    pub lens: LensSpace,
}

impl fmt::Display for OptKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K^{}_{} in {}", self.upper, self.lower, self.lens)
    }
}

/// `a + 1/k`
fn plus_recip(a: i64, k: i64) -> ExtRational {
    ExtRational::new(a * k + 1, k).expect("a*k + 1 and k are not both zero")
}

/// The surgery-dual pair of family `family` (1..=6); families 1–3 take `ℓ`
/// for the second member.
pub fn optsurg_catalog(family: u8, k: i64, l: Option<i64>) -> Result<(OptKnot, OptKnot)> {
    let fam = || format!("once-punctured torus family {family}");
    let need_l = || {
        l.ok_or_else(|| Error::Excluded {
            family: fam(),
            rule: "needs the second parameter l".into(),
        })
    };
    if (4..=6).contains(&family) && k == 0 {
        return Err(Error::Excluded {
            family: fam(),
            rule: "k != 0".into(),
        });
    }
    let lens = |p: i64, q: i64| lens_normalize(&BigInt::from(p), &BigInt::from(q));
    let inf = ExtRational::infinity;
    let w = |upper: i64, a: i64, t: i64, p: i64, q: i64| -> Result<OptKnot> {
        Ok(OptKnot {
            upper: int(upper),
            lower: plus_recip(a, t),
            lens: lens(p, q)?,
        })
    };
    Ok(match family {
        1 => {
            let l = need_l()?;
            (w(-1, -6, k, 6 * k - 1, 2 * k - 1)?, w(-1, -6, l, 6 * l - 1, 2 * l - 1)?)
        }
        2 => {
            let l = need_l()?;
            (w(-2, -4, k, 8 * k - 2, 2 * k - 1)?, w(-2, -4, l, 8 * l - 2, 2 * l - 1)?)
        }
        3 => {
            let l = need_l()?;
            (w(-3, -3, k, 9 * k - 3, 3 * k - 2)?, w(-3, -3, l, 9 * l - 3, 3 * l - 2)?)
        }
        4..=6 => {
            let (a, lower, first, second) = match family {
                4 => (-3, -3, (9 * k - 3, 3 * k - 2), (3 * k - 1, -k)),
                5 => (-4, -2, (8 * k - 2, 2 * k - 1), (4 * k - 1, -k)),
                _ => (-6, -1, (6 * k - 1, 2 * k - 1), (6 * k - 1, -k)),
            };
            let upper = plus_recip(a, k);
            (
                OptKnot {
                    upper: upper.clone(),
                    lower: int(lower),
                    lens: lens(first.0, first.1)?,
                },
                OptKnot {
                    upper,
                    lower: inf(),
                    lens: lens(second.0, second.1)?,
                },
            )
        }
        _ => {
            return Err(Error::Usage(format!("family must be 1..=6, got {family}")));
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub expected: Vec<LensSpace>,
    /// `(description, lens)` from each instantiation.
    pub instances: Vec<(String, LensSpace)>,
    pub consistent: bool,
}

/// The three lens fillings of `W(-5, ·)` read off families 1, 2, 5 and 6.
pub fn figure_eight_sister_triple() -> Result<TripleReport> {
    let expected = vec![lens_i(10, 3), lens_i(5, -1), lens_i(5, 1)];
    let f1 = optsurg_catalog(1, 1, Some(1))?;
    let f2 = optsurg_catalog(2, -1, Some(-1))?;
    let f5 = optsurg_catalog(5, -1, None)?;
    let f6 = optsurg_catalog(6, 1, None)?;
    let instances = vec![
        ("family 2, k=-1: K^-2_-5".to_string(), f2.0.lens.clone(), 0),
        ("family 5, k=-1: K^-5_-2".to_string(), f5.0.lens.clone(), 0),
        ("family 5, k=-1: K^-5_inf".to_string(), f5.1.lens.clone(), 1),
        ("family 6, k=1: K^-5_inf".to_string(), f6.1.lens.clone(), 1),
        ("family 6, k=1: K^-5_-1".to_string(), f6.0.lens.clone(), 2),
        ("family 1, k=1: K^-1_-5".to_string(), f1.0.lens.clone(), 2),
    ];
    let consistent = instances
        .iter()
        .all(|(_, l, i)| homeo_oriented(l, &expected[*i]));
    Ok(TripleReport {
        expected,
        instances: instances.into_iter().map(|(d, l, _)| (d, l)).collect(),
        consistent,
    })
}

/// Both index orders of `A` proposed for the Whitehead sister link exterior
/// after `-1/p` filling, `(A_{p+4,2}, A_{2,p+4})`, with their lens fillings.
pub fn wsl_index_orders(p: i64) -> [(Member, Result<Vec<FamilyFilling>>); 2] {
    let a = Member::A { m: p + 4, n: 2 };
    let b = Member::A { m: 2, n: p + 4 };
    [(a.clone(), family_fillings(&a)), (b.clone(), family_fillings(&b))]
}

/// `A_{2,p+4}`: the order that puts `S³` at slot 2.
pub fn wsl_member(p: i64) -> Member {
    Member::A { m: 2, n: p + 4 }
}

/// Unoriented comparison for checks against outside knowledge.
pub fn same_up_to_orientation(a: &LensSpace, b: &LensSpace) -> bool {
    homeo_unoriented(a, b)
}
