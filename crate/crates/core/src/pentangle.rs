//! Fillings of the pentangle P₅, its symmetry group, the M₅ ↔ P₅ slope
//! translation, the simplification predicates, the Montesinos presentations of
//! the three fillings `X ∈ {0, ∞, -1}`, and the exhaustive two-bridge sweep.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::rationals::{ContFrac, ExtRational, Mobius};
use crate::sweep::{self, Exec};
use crate::tangle::MontesinosLink;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Position {
    NW,
    NE,
    SW,
    SE,
}

impl Position {
    pub const ALL: [Position; 4] = [Position::NW, Position::NE, Position::SW, Position::SE];

    fn idx(self) -> usize {
        self as usize
    }
}

/// `(NW, NE, SW, SE)` with an optional fifth slope `X`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct P5Filling {
    pub slopes: [ExtRational; 4],
    pub x: Option<ExtRational>,
}

impl P5Filling {
    pub fn new(nw: ExtRational, ne: ExtRational, sw: ExtRational, se: ExtRational) -> Self {
        P5Filling {
            slopes: [nw, ne, sw, se],
            x: None,
        }
    }

    pub fn with_x(mut self, x: ExtRational) -> Self {
        self.x = Some(x);
        self
    }

    pub fn at(&self, p: Position) -> &ExtRational {
        &self.slopes[p.idx()]
    }

    /// Largest slope height among the four positions.
    pub fn height(&self) -> BigInt {
        self.slopes.iter().map(ExtRational::height).max().expect("four slopes")
    }
}

impl fmt::Display for P5Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.slopes;
        match &self.x {
            Some(x) => write!(f, "({a},{b},{c},{d},{x})"),
            None => write!(f, "({a},{b},{c},{d})"),
        }
    }
}

impl fmt::Debug for P5Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for P5Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `(α₁, ..., α₅)` on the five cusps of M₅.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct M5Filling {
    pub alpha: [ExtRational; 5],
}

fn one_minus_recip(a: &ExtRational) -> ExtRational {
    // 1 - 1/a
    a.cf_step(&BigInt::one())
}

/// `Σ(P(α₂, 1 - 1/α₁, 1 - 1/α₄, α₃, α₅ - 1)) = M₅(α)`.
pub fn m5_to_p5(m: &M5Filling) -> P5Filling {
    let [a1, a2, a3, a4, a5] = &m.alpha;
    P5Filling {
        slopes: [a2.clone(), one_minus_recip(a1), one_minus_recip(a4), a3.clone()],
        x: Some(a5.add_int(&BigInt::from(-1))),
    }
}

/// `M₅(1/(1 - NE), NW, SE, 1/(1 - SW), X + 1)`; a missing `X` maps to `α₅ = ∞`.
pub fn p5_to_m5(f: &P5Filling) -> M5Filling {
    let [nw, ne, sw, se] = &f.slopes;
    let x = f.x.clone().unwrap_or_else(ExtRational::infinity);
    M5Filling {
        alpha: [
            ne.mobius(&Mobius::F),
            nw.clone(),
            se.clone(),
            sw.mobius(&Mobius::F),
            x.add_int(&BigInt::one()),
        ],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Symmetry {
    SwapLR,
    SwapTB,
    SwapFB,
    /// Order 3, fixes the SE position.
    Rot3,
    /// Slope-wise reciprocal composed with the transposition NE ↔ SW.
    Mirror,
}

impl Symmetry {
    pub const ALL: [Symmetry; 5] = [
        Symmetry::SwapLR,
        Symmetry::SwapTB,
        Symmetry::SwapFB,
        Symmetry::Rot3,
        Symmetry::Mirror,
    ];

    /// `perm[new] = old` on positions.
    fn perm(self) -> [Position; 4] {
        use Position::*;
        match self {
            Symmetry::SwapLR => [NE, NW, SE, SW],
            Symmetry::SwapTB => [SW, SE, NW, NE],
            Symmetry::SwapFB => [SE, SW, NE, NW],
            Symmetry::Rot3 => [NE, SW, NW, SE],
            Symmetry::Mirror => [NW, SW, NE, SE],
        }
    }

    fn slope_map(self) -> Option<Mobius> {
        match self {
            Symmetry::Rot3 => Some(Mobius::F),
            Symmetry::Mirror => Some(Mobius::Reciprocal),
            _ => None,
        }
    }

    fn x_map(self) -> Option<Mobius> {
        match self {
            Symmetry::Rot3 => Some(Mobius::G),
            Symmetry::Mirror => Some(Mobius::Reciprocal),
            _ => None,
        }
    }
}

pub fn symmetry(f: &P5Filling, which: Symmetry) -> P5Filling {
    let perm = which.perm();
    let map = which.slope_map();
    let slopes = perm.map(|old| {
        let s = f.at(old);
        match &map {
            Some(m) => s.mobius(m),
            None => s.clone(),
        }
    });
    let x = f.x.as_ref().map(|x| match which.x_map() {
        Some(m) => x.mobius(&m),
        None => x.clone(),
    });
    P5Filling { slopes, x }
}

/// The three ways of splitting the four positions into two pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PairClass {
    /// `{NW,NE}` or `{SW,SE}`
    Rows,
    /// `{NW,SW}` or `{NE,SE}`
    Columns,
    /// `{NW,SE}` or `{NE,SW}`
    Diagonals,
}

impl PairClass {
    pub const ALL: [PairClass; 3] = [PairClass::Rows, PairClass::Columns, PairClass::Diagonals];

    pub fn pairs(self) -> [(Position, Position); 2] {
        use Position::*;
        match self {
            PairClass::Rows => [(NW, NE), (SW, SE)],
            PairClass::Columns => [(NW, SW), (NE, SE)],
            PairClass::Diagonals => [(NW, SE), (NE, SW)],
        }
    }
}

type PairList = Vec<(ExtRational, ExtRational)>;

fn q(n: i64, d: i64) -> ExtRational {
    ExtRational::new(n, d).expect("nonzero literal")
}

fn pairs(v: &[((i64, i64), (i64, i64))]) -> PairList {
    v.iter().map(|&((a, b), (c, d))| (q(a, b), q(c, d))).collect()
}

/// Condition lists of the simplification lemmas, one list per pair class.
pub struct ConditionLists {
    pub nonhyp: [PairList; 3],
    pub p3: [PairList; 3],
    pub mirror_p3: [PairList; 3],
}

/// The `{NE,SW}`/`{NW,SE}` list entry `{2,2}` is what the order-3 symmetry
/// produces from `{½,½}`; [`tabulated_p3_lists`] keeps the `{-2,-2}` variant.
pub fn condition_lists() -> &'static ConditionLists {
    static LISTS: OnceLock<ConditionLists> = OnceLock::new();
    LISTS.get_or_init(|| {
        let mut p3 = tabulated_p3_lists();
        p3[2][4] = (q(2, 1), q(2, 1));
        ConditionLists {
            nonhyp: [
                pairs(&[((-1, 1), (2, 1)), ((1, 2), (1, 2))]),
                pairs(&[((-1, 1), (1, 2)), ((2, 1), (2, 1))]),
                pairs(&[((1, 2), (2, 1)), ((-1, 1), (-1, 1))]),
            ],
            p3,
            mirror_p3: [
                pairs(&[
                    ((-1, 1), (3, 1)),
                    ((2, 1), (-1, 2)),
                    ((1, 2), (2, 3)),
                    ((-1, 1), (1, 2)),
                    ((2, 1), (2, 1)),
                ]),
                pairs(&[
                    ((1, 2), (-1, 2)),
                    ((-1, 1), (2, 3)),
                    ((2, 1), (3, 1)),
                    ((1, 2), (2, 1)),
                    ((-1, 1), (-1, 1)),
                ]),
                pairs(&[
                    ((2, 1), (2, 3)),
                    ((1, 2), (3, 1)),
                    ((-1, 1), (-1, 2)),
                    ((2, 1), (-1, 1)),
                    ((1, 2), (1, 2)),
                ]),
            ],
        }
    })
}

/// The factoring lists as tabulated.
pub fn tabulated_p3_lists() -> [PairList; 3] {
    [
        pairs(&[
            ((2, 1), (-2, 1)),
            ((-1, 1), (3, 2)),
            ((1, 2), (1, 3)),
            ((2, 1), (1, 2)),
            ((-1, 1), (-1, 1)),
        ]),
        pairs(&[
            ((-1, 1), (1, 3)),
            ((1, 2), (-2, 1)),
            ((2, 1), (3, 2)),
            ((-1, 1), (2, 1)),
            ((1, 2), (1, 2)),
        ]),
        pairs(&[
            ((1, 2), (3, 2)),
            ((2, 1), (1, 3)),
            ((-1, 1), (-2, 1)),
            ((1, 2), (-1, 1)),
            ((-2, 1), (-2, 1)),
        ]),
    ]
}

fn pair_in(a: &ExtRational, b: &ExtRational, list: &PairList) -> bool {
    list.iter()
        .any(|(x, y)| (a == x && b == y) || (a == y && b == x))
}

fn matches_lists(slopes: [&ExtRational; 4], lists: &[PairList; 3]) -> bool {
    PairClass::ALL.iter().zip(lists).any(|(class, list)| {
        class
            .pairs()
            .iter()
            .any(|&(u, v)| pair_in(slopes[u.idx()], slopes[v.idx()], list))
    })
}

fn refs(f: &P5Filling) -> [&ExtRational; 4] {
    [&f.slopes[0], &f.slopes[1], &f.slopes[2], &f.slopes[3]]
}

fn is_degenerate_slope(s: &ExtRational) -> bool {
    s.is_infinite() || (s.is_integer() && (s.num() == &BigInt::from(0) || s.num().is_one()))
}

fn nonhyp_refs(slopes: [&ExtRational; 4]) -> bool {
    slopes.iter().any(|s| is_degenerate_slope(s))
        || matches_lists(slopes, &condition_lists().nonhyp)
}

pub fn is_nonhyperbolic(f: &P5Filling) -> bool {
    nonhyp_refs(refs(f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum P3Factor {
    No,
    P3,
    MirrorP3,
}

fn p3_refs(slopes: [&ExtRational; 4]) -> P3Factor {
    let lists = condition_lists();
    if matches_lists(slopes, &lists.p3) {
        P3Factor::P3
    } else if matches_lists(slopes, &lists.mirror_p3) {
        P3Factor::MirrorP3
    } else {
        P3Factor::No
    }
}

pub fn factors_through_p3(f: &P5Filling) -> P3Factor {
    p3_refs(refs(f))
}

/// Factoring check against an arbitrary list triple.
pub fn matches_pair_lists(f: &P5Filling, lists: &[PairList; 3]) -> bool {
    matches_lists(refs(f), lists)
}

fn simplifies_refs(slopes: [&ExtRational; 4]) -> bool {
    nonhyp_refs(slopes) || p3_refs(slopes) != P3Factor::No
}

pub fn simplifies(f: &P5Filling) -> bool {
    simplifies_refs(refs(f))
}

/// The three fifth-slope fillings examined by the sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum XFill {
    Zero,
    Inf,
    MinusOne,
}

impl XFill {
    pub const ALL: [XFill; 3] = [XFill::Zero, XFill::Inf, XFill::MinusOne];

    pub fn value(self) -> ExtRational {
        match self {
            XFill::Zero => ExtRational::zero(),
            XFill::Inf => ExtRational::infinity(),
            XFill::MinusOne => ExtRational::from_int(-1),
        }
    }

    /// Image under `x ↦ -1/(1+x)`.
    pub fn rot3(self) -> XFill {
        match self {
            XFill::Zero => XFill::MinusOne,
            XFill::MinusOne => XFill::Inf,
            XFill::Inf => XFill::Zero,
        }
    }
}

/// Slope classes used by the chart constraints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SlopeClass {
    /// `[0,h] = -1/h`, including `∞`.
    Recip,
    /// `[n]`.
    Integer,
    /// `[1,m] = (m-1)/m`, including `∞`.
    OneMinusRecip,
}

impl SlopeClass {
    /// The integer parameter `h`, `n` or `m` when `s` lies in the class.
    pub fn parameter(self, s: &ExtRational) -> Option<BigInt> {
        match self {
            SlopeClass::Recip => s.recip().neg().to_integer(),
            SlopeClass::Integer => s.to_integer(),
            SlopeClass::OneMinusRecip => s.mobius(&Mobius::F).to_integer(),
        }
    }

    /// Image class under `s ↦ 1/(1-s)`.
    pub fn rot3(self) -> SlopeClass {
        match self {
            SlopeClass::Recip => SlopeClass::OneMinusRecip,
            SlopeClass::OneMinusRecip => SlopeClass::Integer,
            SlopeClass::Integer => SlopeClass::Recip,
        }
    }
}

/// A constraint "the slope at `position` lies in `class`" for filling `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RowLabel {
    pub x: XFill,
    pub position: Position,
    pub class: SlopeClass,
}

/// The eight rows of the rationality chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Row {
    WxNW,
    WxSW,
    ExNE,
    ExSE,
    NxNW,
    NxNE,
    FxNE,
    FxSW,
}

impl Row {
    pub const ALL: [Row; 8] = [
        Row::WxNW,
        Row::WxSW,
        Row::ExNE,
        Row::ExSE,
        Row::NxNW,
        Row::NxNE,
        Row::FxNE,
        Row::FxSW,
    ];

    pub fn label(self) -> RowLabel {
        use Position::*;
        let (x, position, class) = match self {
            Row::WxNW => (XFill::Zero, NW, SlopeClass::Recip),
            Row::WxSW => (XFill::Zero, SW, SlopeClass::Recip),
            Row::ExNE => (XFill::Zero, NE, SlopeClass::Recip),
            Row::ExSE => (XFill::Zero, SE, SlopeClass::Recip),
            Row::NxNW => (XFill::Inf, NW, SlopeClass::Integer),
            Row::NxNE => (XFill::Inf, NE, SlopeClass::Integer),
            Row::FxNE => (XFill::MinusOne, NE, SlopeClass::OneMinusRecip),
            Row::FxSW => (XFill::MinusOne, SW, SlopeClass::OneMinusRecip),
        };
        RowLabel { x, position, class }
    }

    pub fn from_label(l: RowLabel) -> Option<Row> {
        Row::ALL.into_iter().find(|r| r.label() == l)
    }

    pub fn x(self) -> XFill {
        self.label().x
    }

    pub fn rows_for(x: XFill) -> impl Iterator<Item = Row> {
        Row::ALL.into_iter().filter(move |r| r.x() == x)
    }

    /// The Montesinos presentation, or `None` when the constraint fails.
    pub fn presentation(self, f: &P5Filling) -> Option<MontesinosLink> {
        row_presentation(self, refs(f))
    }
}

fn cf(ints: &[&BigInt], tail: &ExtRational) -> ExtRational {
    ContFrac {
        coeffs: ints.iter().map(|&b| b.clone()).collect(),
        tail: Some(tail.clone()),
    }
    .eval()
}

fn row_presentation(row: Row, s: [&ExtRational; 4]) -> Option<MontesinosLink> {
    let [nw, ne, sw, se] = s;
    let label = row.label();
    let t = label.class.parameter(s[label.position.idx()])?;
    let one = BigInt::one();
    let zero = BigInt::from(0);
    let neg1 = BigInt::from(-1);
    let factors = match row {
        Row::WxNW => vec![cf(&[&neg1, &t], sw), ne.clone(), se.clone()],
        Row::WxSW => vec![cf(&[&neg1, &t], nw), se.clone(), ne.clone()],
        Row::ExNE => vec![cf(&[&neg1, &t], se), nw.clone(), sw.clone()],
        Row::ExSE => vec![cf(&[&neg1, &t], ne), sw.clone(), nw.clone()],
        Row::NxNW => vec![
            cf(&[&one], &ne.add_int(&t)),
            cf(&[&zero], sw),
            cf(&[&zero], se),
        ],
        Row::NxNE => vec![
            cf(&[&one], &nw.add_int(&t)),
            cf(&[&zero], se),
            cf(&[&zero], sw),
        ],
        Row::FxNE => vec![cf(&[&one], nw), cf(&[&t, &one], sw), se.add_int(&neg1)],
        Row::FxSW => vec![cf(&[&one], se), cf(&[&t, &one], ne), nw.add_int(&neg1)],
    };
    Some(MontesinosLink::new(factors))
}

/// The position permutations preserving `X`: identity, LR, TB, FB.
const V4: [[Position; 4]; 4] = {
    use Position::*;
    [
        [NW, NE, SW, SE],
        [NE, NW, SE, SW],
        [SW, SE, NW, NE],
        [SE, SW, NE, NW],
    ]
};

fn permuted<'a>(s: [&'a ExtRational; 4], perm: &[Position; 4]) -> [&'a ExtRational; 4] {
    perm.map(|old| s[old.idx()])
}

/// Every chart presentation of `L_x` for `f` and its images under the
/// `X`-preserving symmetries, tagged with the symmetry index and row.
pub fn montesinos_presentations(f: &P5Filling, x: XFill) -> Vec<(usize, Row, MontesinosLink)> {
    let s = refs(f);
    let mut out = Vec::new();
    for (g, perm) in V4.iter().enumerate() {
        let t = permuted(s, perm);
        for row in Row::rows_for(x) {
            if let Some(q) = row_presentation(row, t) {
                out.push((g, row, q));
            }
        }
    }
    out
}

fn certifying_rows(s: [&ExtRational; 4], x: XFill, g: usize) -> impl Iterator<Item = Row> + '_ {
    let t = permuted(s, &V4[g]);
    Row::rows_for(x).filter(move |&row| {
        row_presentation(row, t).is_some_and(|q| q.is_two_bridge())
    })
}

fn necessary_refs(s: [&ExtRational; 4], x: XFill) -> bool {
    (0..V4.len()).any(|g| certifying_rows(s, x, g).next().is_some())
}

/// Some chart presentation of `L_x` (up to the `X`-preserving symmetries) has a
/// factor `1/j`; this is necessary for `L_x` to be two-bridge.
pub fn two_bridge_necessary(f: &P5Filling, x: XFill) -> bool {
    necessary_refs(refs(f), x)
}

/// A case is a choice of rows for `X = 0`, `∞`, `-1`.
pub type Case = (Row, Row, Row);

/// The sixteen cases in their tabulated order.
pub fn cases() -> [Case; 16] {
    use Row::*;
    let mut out = [(WxNW, NxNW, FxNE); 16];
    let mut i = 0;
    for w in [WxNW, WxSW, ExNE, ExSE] {
        for n in [NxNW, NxNE] {
            for fr in [FxNE, FxSW] {
                out[i] = (w, n, fr);
                i += 1;
            }
        }
    }
    out
}

pub fn case_number(c: Case) -> Option<usize> {
    cases().iter().position(|&d| d == c).map(|i| i + 1)
}

/// Cases treated directly; the rest follow from the two order-3 symmetries.
pub const BASE_CASES: [usize; 8] = [1, 2, 4, 5, 9, 10, 11, 14];

fn label_tb(l: RowLabel) -> RowLabel {
    use Position::*;
    let position = match l.position {
        NW => SW,
        SW => NW,
        NE => SE,
        SE => NE,
    };
    RowLabel { position, ..l }
}

/// Action of the SE-fixing rotation on row labels.
pub fn label_rot3(l: RowLabel) -> RowLabel {
    use Position::*;
    // perm[new] = old is (NE, SW, NW, SE), so old NW lands at SW, and so on
    let position = match l.position {
        NE => NW,
        SW => NE,
        NW => SW,
        SE => SE,
    };
    RowLabel {
        x: l.x.rot3(),
        position,
        class: l.class.rot3(),
    }
}

/// Action of the NE-fixing rotation, `TB ∘ rot3 ∘ TB`.
pub fn label_rot3_ne(l: RowLabel) -> RowLabel {
    label_tb(label_rot3(label_tb(l)))
}

fn act_on_case(c: Case, act: fn(RowLabel) -> RowLabel) -> Option<Case> {
    let mut slots: BTreeMap<XFill, Row> = BTreeMap::new();
    for r in [c.0, c.1, c.2] {
        let l = act(r.label());
        slots.insert(l.x, Row::from_label(l)?);
    }
    Some((slots[&XFill::Zero], slots[&XFill::Inf], slots[&XFill::MinusOne]))
}

/// Orbit of a case under one rotation, as case numbers.
pub fn case_orbit(n: usize, ne_fixing: bool) -> Vec<usize> {
    let act: fn(RowLabel) -> RowLabel = if ne_fixing { label_rot3_ne } else { label_rot3 };
    let mut out = vec![n];
    let mut c = cases()[n - 1];
    for _ in 0..2 {
        match act_on_case(c, act).and_then(|d| case_number(d).map(|m| (d, m))) {
            Some((d, m)) => {
                out.push(m);
                c = d;
            }
            None => return vec![n],
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// All cases reachable from the base cases by either rotation.
pub fn generated_cases() -> Vec<usize> {
    let mut all: Vec<usize> = BASE_CASES
        .iter()
        .flat_map(|&n| {
            let mut v = case_orbit(n, false);
            v.extend(case_orbit(n, true));
            v
        })
        .collect();
    all.sort_unstable();
    all.dedup();
    all
}

/// Slopes of height at most `bound`, in Stern–Brocot level order:
/// `0`, `∞`, then each positive fraction followed by its negative.
pub fn slopes_up_to(bound: i64) -> Vec<ExtRational> {
    let mut out = vec![ExtRational::zero(), ExtRational::infinity()];
    // (left, node, right) as (num, den) triples
    let mut level = vec![((0i64, 1i64), (1i64, 1i64), (1i64, 0i64))];
    while !level.is_empty() {
        let mut next = Vec::new();
        for (l, n, r) in level {
            if n.0 > bound || n.1 > bound {
                continue;
            }
            out.push(q(n.0, n.1));
            out.push(q(-n.0, n.1));
            next.push((l, (l.0 + n.0, l.1 + n.1), n));
            next.push((n, (n.0 + r.0, n.1 + r.1), r));
        }
        level = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub filling: P5Filling,
    pub rows: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub bound: i64,
    pub slopes: usize,
    pub tuples_checked: u64,
    pub necessary_at: BTreeMap<String, u64>,
    pub necessary_all_three: u64,
    pub simplified: u64,
    /// Passing tuples by the first case (and symmetry) that certifies all three fillings.
    pub per_case: BTreeMap<usize, u64>,
    /// Passing tuples needing different symmetries at different fillings.
    pub split_symmetry: u64,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Default)]
struct Partial {
    checked: u64,
    nec: [u64; 3],
    all_three: u64,
    simplified: u64,
    per_case: BTreeMap<usize, u64>,
    split: u64,
    counterexamples: Vec<Counterexample>,
}

fn first_case(s: [&ExtRational; 4]) -> Option<usize> {
    for g in 0..V4.len() {
        let w: Vec<Row> = certifying_rows(s, XFill::Zero, g).collect();
        let n: Vec<Row> = certifying_rows(s, XFill::Inf, g).collect();
        let f: Vec<Row> = certifying_rows(s, XFill::MinusOne, g).collect();
        for &a in &w {
            for &b in &n {
                for &c in &f {
                    if let Some(k) = case_number((a, b, c)) {
                        return Some(k);
                    }
                }
            }
        }
    }
    None
}

fn sweep_first(slopes: &[ExtRational], i0: usize) -> Partial {
    let mut acc = Partial::default();
    let n = slopes.len();
    for i1 in 0..n {
        for i2 in 0..n {
            for i3 in 0..n {
                let s = [&slopes[i0], &slopes[i1], &slopes[i2], &slopes[i3]];
                acc.checked += 1;
                let mut all = true;
                for (k, x) in XFill::ALL.iter().enumerate() {
                    if necessary_refs(s, *x) {
                        acc.nec[k] += 1;
                    } else {
                        all = false;
                        break;
                    }
                }
                if !all {
                    continue;
                }
                acc.all_three += 1;
                match first_case(s) {
                    Some(c) => *acc.per_case.entry(c).or_default() += 1,
                    None => acc.split += 1,
                }
                if simplifies_refs(s) {
                    acc.simplified += 1;
                } else {
                    let f = P5Filling::new(s[0].clone(), s[1].clone(), s[2].clone(), s[3].clone());
                    let rows = XFill::ALL
                        .iter()
                        .flat_map(|&x| {
                            montesinos_presentations(&f, x)
                                .into_iter()
                                .filter(|(_, _, q)| q.is_two_bridge())
                                .map(|(g, r, q)| format!("g{g} {r:?} {q}"))
                        })
                        .collect();
                    acc.counterexamples.push(Counterexample { filling: f, rows });
                }
            }
        }
    }
    acc
}

/// Checks every 4-tuple of slopes of height `<= bound`: whenever all three
/// fillings pass [`two_bridge_necessary`], the tuple must simplify.
pub fn verify_fillingsimplifies(bound: i64, exec: Exec) -> SweepReport {
    let slopes = slopes_up_to(bound);
    let firsts: Vec<usize> = (0..slopes.len()).collect();
    let parts = sweep::map(exec, &firsts, |&i0| sweep_first(&slopes, i0));
    let mut total = Partial::default();
    for p in parts {
        total.checked += p.checked;
        for k in 0..3 {
            total.nec[k] += p.nec[k];
        }
        total.all_three += p.all_three;
        total.simplified += p.simplified;
        for (c, n) in p.per_case {
            *total.per_case.entry(c).or_default() += n;
        }
        total.split += p.split;
        total.counterexamples.extend(p.counterexamples);
    }
    let names = ["0", "inf", "-1"];
    SweepReport {
        bound,
        slopes: slopes.len(),
        tuples_checked: total.checked,
        necessary_at: names
            .iter()
            .zip(total.nec)
            .map(|(n, c)| (n.to_string(), c))
            .collect(),
        necessary_all_three: total.all_three,
        simplified: total.simplified,
        per_case: total.per_case,
        split_symmetry: total.split,
        counterexamples: total.counterexamples,
    }
}
