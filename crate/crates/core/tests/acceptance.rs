//! One line per acceptance criterion. Criteria that cannot hold are listed in
//! `EXPECTED_FAILURES`; the test fails if the failing set differs from it.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use surgeryforge::families::{
    alt_gofk_pipeline, family_lens, figure_eight_sister_triple, gofklens_census, optsurg_catalog,
    orientation_consistency, verify_three_filling_intersections, Member,
};
use surgeryforge::lens::{homeo_oriented, homeo_unoriented, lens, LensSpace};
use surgeryforge::normseq::{riemenschneider_dual, table_discrepancies, GofkPattern, NormSeq};
use surgeryforge::pentangle::{
    condition_lists, slopes_up_to, symmetry, verify_fillingsimplifies, P5Filling, PairClass,
    Symmetry,
};
use surgeryforge::rationals::{cf_eval_ints, cf_expand_norm};
use surgeryforge::simpleknot::{
    equivalent, euler_char, genus_primitive, knots_with_genus, star_solutions, SimpleKnot,
};
use surgeryforge::sweep::Exec;
use surgeryforge::ExtRational;

/// 7: the census also yields L(11,7) and the (2^[t],4,2,2,2) series.
/// 10: the cross-family relation is not orientation-reversing in every slot.
const EXPECTED_FAILURES: [u32; 2] = [7, 10];

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn l(p: i64, q: i64) -> LensSpace {
    lens(p, q).unwrap()
}

fn r(s: &str) -> ExtRational {
    s.parse().unwrap()
}

fn fillings(m: &Member) -> Vec<LensSpace> {
    m.slots().iter().map(|s| family_lens(m, s).unwrap()).collect()
}

fn criterion_1() -> Outcome {
    let a32 = fillings(&Member::A { m: 3, n: 2 });
    check(a32 == vec![l(18, 11), l(1, 0), l(19, -12)], format!("A(3,2) = {a32:?}"))?;
    let a25 = fillings(&Member::A { m: 2, n: 5 });
    check(a25 == vec![l(31, 17), l(1, 0), l(32, -7)], format!("A(2,5) = {a25:?}"))?;
    check(homeo_oriented(&l(18, 11), &l(18, 5)), "L(18,11) vs L(18,5)")?;
    Ok(format!("A(3,2) {a32:?}, A(2,5) {a25:?}"))
}

fn criterion_2() -> Outcome {
    let b4 = fillings(&Member::B { r: r("4") });
    check(b4 == vec![l(1, 0), l(19, 7), l(18, 7)], format!("B(4) = {b4:?}"))?;
    check(homeo_unoriented(&l(18, 7), &l(18, 5)), "L(18,7) vs L(18,5)")?;
    Ok(format!("B(4) {b4:?}"))
}

fn star_oracle(p: i64, eps: i64) -> Vec<(i64, i64)> {
    (1..p)
        .filter(|k| (k * k + eps * (k + 1)).rem_euclid(p) == 0)
        .map(|k| (k, (-k * k).rem_euclid(p)))
        .collect()
}

fn criterion_3() -> Outcome {
    let pairs = |p, eps| -> Vec<(i64, i64)> {
        star_solutions(p, eps).raw.iter().map(|s| (s.k, s.q)).collect()
    };
    check(pairs(31, 1) == vec![(5, 6), (25, 26)], format!("p=31 eps=+1 {:?}", pairs(31, 1)))?;
    check(pairs(31, -1) == vec![(13, 17), (19, 11)], format!("p=31 eps=-1 {:?}", pairs(31, -1)))?;
    for p in [33, 51, 69] {
        for eps in [1, -1] {
            check(pairs(p, eps).is_empty(), format!("p={p} eps={eps} nonempty"))?;
        }
    }
    for p in 1..=500 {
        for eps in [1, -1] {
            check(pairs(p, eps) == star_oracle(p, eps), format!("oracle mismatch at p={p} eps={eps}"))?;
        }
    }
    Ok("p=31 solutions match; p in {33,51,69} empty; oracle agrees for p <= 500".into())
}

fn criterion_4() -> Outcome {
    let kn = |p, q, k| SimpleKnot::new(p, q, k).unwrap();
    let cases = [((49, 19, 18), -33, Some(17)), ((67, 30, 29), -49, Some(25)), ((3, 1, 1), 1, None), ((5, 4, 2), -1, None)];
    for ((p, q, k), chi, g) in cases {
        let x = kn(p, q, k);
        check(euler_char(&x) == chi, format!("chi({x}) = {}", euler_char(&x)))?;
        if let Some(g) = g {
            check(genus_primitive(&x).ok() == Some(g), format!("genus({x})"))?;
        }
    }
    check(knots_with_genus(&l(50, 41), 17).is_empty(), "genus 17 in L(50,41)")?;
    check(knots_with_genus(&l(68, 59), 25).is_empty(), "genus 25 in L(68,59)")?;
    Ok("chi and genus values exact; no genus-17 knot in L(50,41), no genus-25 knot in L(68,59)".into())
}

fn criterion_5() -> Outcome {
    let kn = |p, q, k| SimpleKnot::new(p, q, k).unwrap();
    check(equivalent(&kn(31, 17, 18), &kn(31, 11, 12)), "K(31,17,18) ~ K(31,11,12)")?;
    check(equivalent(&kn(31, 6, 5), &kn(31, 26, 25)), "K(31,6,5) ~ K(31,26,25)")?;
    let mut checked = 0u64;
    for p in 2..=60i64 {
        for q in 1..p {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            for k in 1..p {
                let x = kn(p, q, k);
                let chi = euler_char(&x);
                for (q2, k2) in x.orbit() {
                    checked += 1;
                    check(euler_char(&kn(p, q2, k2)) == chi, format!("chi moves at {x}"))?;
                }
            }
        }
    }
    Ok(format!("both equivalences hold; chi invariant over {checked} orbit moves"))
}

/// Dual by the point rule: row `i` carries `a_i - 1` dots, starting in the
/// column where row `i - 1` ended; `b_j` is one more than column `j`'s count.
fn point_rule_dual(a: &[i64]) -> Vec<i64> {
    let mut cols: Vec<i64> = Vec::new();
    let mut start = 0usize;
    for &ai in a {
        let width = (ai - 1) as usize;
        if cols.len() < start + width {
            cols.resize(start + width, 0);
        }
        for c in &mut cols[start..start + width] {
            *c += 1;
        }
        start += width - 1;
    }
    cols.iter().map(|c| c + 1).collect()
}

fn all_sequences(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for s in &layer {
            for a in 2..=max {
                let mut t: Vec<i64> = s.clone();
                t.push(a);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn criterion_6() -> Outcome {
    let mut pairs = 0;
    for p in 2..=200i64 {
        for q in 1..p {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let x = ExtRational::new(p, q).unwrap();
            let cf: Vec<i64> = cf_expand_norm(&x).unwrap().iter().map(|a| a.to_i64().unwrap()).collect();
            check(cf_eval_ints(&cf) == x, format!("round trip {p}/{q}"))?;
            pairs += 1;
        }
    }
    let seqs = all_sequences(6, 6);
    for a in &seqs {
        let sa = NormSeq::new(a.clone());
        let b = riemenschneider_dual(&sa).unwrap();
        check(riemenschneider_dual(&b).unwrap() == sa, format!("involution at {sa}"))?;
        let sum = cf_eval_ints(a).recip().add(&cf_eval_ints(b.entries()).recip());
        check(sum == ExtRational::from_int(1), format!("sum identity at {sa}"))?;
        check(b.entries() == point_rule_dual(a).as_slice(), format!("point rule at {sa}"))?;
    }
    let disc = table_discrepancies(8);
    let columns: BTreeSet<GofkPattern> = disc.iter().map(|d| d.pattern).collect();
    check(
        columns == BTreeSet::from([GofkPattern::FourTwos]),
        format!("table discrepancies in {columns:?}"),
    )?;
    Ok(format!(
        "{pairs} fractions round trip; {} sequences dual-checked; {} flagged cells, all in (4,2^[s-1])",
        seqs.len(),
        disc.len()
    ))
}

fn criterion_7() -> Outcome {
    let c = gofklens_census(5, 6, Exec::default());
    let extra: Vec<String> = c.extra.iter().map(|e| format!("{} {}", e.sequence, e.lens)).collect();
    check(
        c.missing.is_empty() && c.extra.is_empty(),
        format!("missing {:?}; extra {extra:?}", c.missing),
    )?;
    Ok(format!("{} entries, none missing or extra", c.entries.len()))
}

fn criterion_8() -> Outcome {
    let a = alt_gofk_pipeline(6);
    check(a.counterexamples.is_empty(), format!("{:?}", a.counterexamples))?;
    let after: Vec<String> = a.after_exponent_sums.iter().map(|l| l.to_string()).collect();
    let ps: Vec<i64> = a.survivors.iter().map(|s| s.0).collect();
    Ok(format!("exponent-sum survivors {after:?}; final p = {ps:?}"))
}

fn symmetry_laws() -> Result<(), String> {
    let slopes = slopes_up_to(2);
    let xs = [r("0"), r("inf"), r("-1"), r("1/2")];
    for (i, a) in slopes.iter().enumerate() {
        for b in slopes.iter().skip(i % 3).step_by(3) {
            for c in slopes.iter().step_by(2) {
                for d in &slopes {
                    for x in &xs {
                        let f = P5Filling::new(a.clone(), b.clone(), c.clone(), d.clone()).with_x(x.clone());
                        for s in [Symmetry::SwapLR, Symmetry::SwapTB, Symmetry::SwapFB, Symmetry::Mirror] {
                            check(symmetry(&symmetry(&f, s), s) == f, format!("{s:?} squared at {f}"))?;
                        }
                        let g = (0..3).fold(f.clone(), |g, _| symmetry(&g, Symmetry::Rot3));
                        check(g == f, format!("rot3 cubed at {f}"))?;
                    }
                }
            }
        }
    }
    let lists = condition_lists();
    let unordered = |v: &[(ExtRational, ExtRational)]| -> BTreeSet<(ExtRational, ExtRational)> {
        v.iter()
            .map(|(x, y)| if x <= y { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) })
            .collect()
    };
    // NE ↔ SW exchanges rows with columns and fixes diagonals
    let image = [1usize, 0, 2];
    for (c, _) in PairClass::ALL.iter().enumerate() {
        let mapped: Vec<_> = lists.p3[c].iter().map(|(x, y)| (x.recip(), y.recip())).collect();
        check(
            unordered(&mapped) == unordered(&lists.mirror_p3[image[c]]),
            format!("P3 list {c} does not map onto its mirror list"),
        )?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    symmetry_laws()?;
    let rep = verify_fillingsimplifies(5, Exec::default());
    check(
        rep.counterexamples.is_empty(),
        format!("{} counterexamples", rep.counterexamples.len()),
    )?;
    Ok(format!(
        "{} tuples, {} simplified, 0 counterexamples; symmetry laws hold",
        rep.tuples_checked, rep.simplified
    ))
}

fn criterion_10() -> Outcome {
    let rep = verify_three_filling_intersections(8, Exec::default());
    check(
        rep.counterexamples.is_empty(),
        format!("{} unexplained coincidences", rep.counterexamples.len()),
    )?;
    for class in ["A", "B", "Case1a", "Case3a"] {
        check(rep.per_class.get(class).copied().unwrap_or(0) > 0, format!("class {class} never found"))?;
    }
    let expected: BTreeMap<&str, Vec<Vec<i64>>> = BTreeMap::from([
        ("1a", vec![vec![4, -1]]),
        ("1b", vec![vec![1, -1, -1]]),
        ("2a", vec![vec![2, -2]]),
        ("3a", vec![vec![2, -2]]),
        ("3b", vec![vec![2, -2]]),
    ]);
    check(
        rep.subcase_parameters == expected,
        format!("subcase parameters {:?}", rep.subcase_parameters),
    )?;
    let p = orientation_consistency(5);
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    for c in &p.comparisons {
        let key = c.relation.map_or("error".to_string(), |r| format!("{r:?}").to_lowercase());
        *tally.entry(key).or_default() += 1;
    }
    check(
        p.all_mirror,
        format!(
            "intersections clean ({} coincidences); orientation relations {tally:?}",
            rep.coincidences
        ),
    )?;
    Ok(format!("{} coincidences classified; orientation all mirror", rep.coincidences))
}

fn criterion_11() -> Outcome {
    let t = figure_eight_sister_triple().map_err(|e| e.to_string())?;
    check(t.consistent, format!("{:?}", t.instances))?;
    for k in -10..=10 {
        let (first, _) = optsurg_catalog(1, k, Some(k)).map_err(|e| e.to_string())?;
        let x0 = family_lens(&Member::X0 { m: k, n: -1 }, &r("0")).map_err(|e| e.to_string())?;
        check(first.lens == x0, format!("k={k}: {} vs {x0}", first.lens))?;
    }
    Ok("K^-5 triple {L(10,3), L(5,-1), L(5,1)}; family 1 equals X0(0) for |k| <= 10".into())
}

fn main() {
    let criteria: [(u32, Duration, fn() -> Outcome); 11] = [
        (1, Duration::from_secs(1), criterion_1),
        (2, Duration::from_secs(1), criterion_2),
        (3, Duration::from_secs(5), criterion_3),
        (4, Duration::from_secs(5), criterion_4),
        (5, Duration::from_secs(30), criterion_5),
        (6, Duration::from_secs(60), criterion_6),
        (7, Duration::from_secs(120), criterion_7),
        (8, Duration::from_secs(60), criterion_8),
        (9, Duration::from_secs(600), criterion_9),
        (10, Duration::from_secs(120), criterion_10),
        (11, Duration::from_secs(1), criterion_11),
    ];
    let mut failing = BTreeSet::new();
    for (n, limit, run) in criteria {
        let t = Instant::now();
        let out = run();
        let took = t.elapsed();
        let (ok, detail) = match out {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {limit:?} limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failing.insert(n);
        }
        let status = if ok { "PASS" } else { "FAIL" };
        println!("criterion {n:>2}: {status} ({:.2}s) {detail}", took.as_secs_f64());
    }
    let expected: BTreeSet<u32> = EXPECTED_FAILURES.into_iter().collect();
    if failing != expected {
        eprintln!("failing criteria {failing:?} differ from the expected set {expected:?}");
        std::process::exit(1);
    }
    println!("acceptance: failing set {failing:?} matches the expected failures");
}
