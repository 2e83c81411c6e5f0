use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use proptest::prelude::*;
use surgeryforge::families::{family_lens, Member};
use surgeryforge::lens::{homeo_oriented, homeo_unoriented, lens, mirror};
use surgeryforge::normseq::{riemenschneider_dual, reduce, to_lens, Entry, NormSeq};
use surgeryforge::pentangle::{symmetry, P5Filling, Symmetry};
use surgeryforge::rationals::{cf_eval_ints, cf_expand_norm};
use surgeryforge::simpleknot::{euler_char, equivalent, SimpleKnot};
use surgeryforge::ExtRational;

fn slope() -> impl Strategy<Value = ExtRational> {
    (-12i64..=12, 0i64..=12)
        .prop_filter("not 0/0", |(n, d)| *n != 0 || *d != 0)
        .prop_map(|(n, d)| ExtRational::new(n, d).unwrap())
}

fn coprime() -> impl Strategy<Value = (i64, i64)> {
    (2i64..400, 1i64..400)
        .prop_map(|(p, q)| (p, q % p))
        .prop_filter("coprime", |(p, q)| *q != 0 && p.gcd(q) == 1)
}

fn norm_seq() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..9, 1..7)
}

proptest! {
    #[test]
    fn norm_expansion_round_trips((p, q) in coprime()) {
        let x = ExtRational::new(p, q).unwrap();
        let cf: Vec<i64> = cf_expand_norm(&x).unwrap().iter().map(|a| a.to_i64().unwrap()).collect();
        prop_assert!(cf.iter().all(|&a| a >= 2));
        prop_assert_eq!(cf_eval_ints(&cf), x);
    }

    #[test]
    fn lens_labels_by_inverse_and_sign((p, q) in coprime()) {
        let qi = BigInt::from(q).modinv(&BigInt::from(p)).unwrap().to_i64().unwrap();
        let l1 = lens(p, q).unwrap();
        prop_assert!(homeo_oriented(&l1, &lens(p, qi).unwrap()));
        prop_assert!(homeo_oriented(&l1, &lens(-p, -q).unwrap()));
        prop_assert!(homeo_oriented(&l1, &lens(p, q + 7 * p).unwrap()));
        prop_assert_eq!(mirror(&mirror(&l1)), l1.clone());
        prop_assert!(homeo_unoriented(&l1, &mirror(&l1)));
    }

    #[test]
    fn reversal_keeps_the_oriented_lens(a in norm_seq()) {
        let s = NormSeq::new(a);
        prop_assert!(homeo_oriented(&to_lens(&s), &to_lens(&s.reversed())));
    }

    #[test]
    fn dual_is_an_involution_with_unit_sum(a in norm_seq()) {
        let s = NormSeq::new(a.clone());
        let b = riemenschneider_dual(&s).unwrap();
        prop_assert_eq!(riemenschneider_dual(&b).unwrap(), s);
        let sum = cf_eval_ints(&a).recip().add(&cf_eval_ints(b.entries()).recip());
        prop_assert_eq!(sum, ExtRational::from_int(1));
        // exactly one of the last entries is 2, except for the self-dual (2)
        prop_assume!(a != [2]);
        prop_assert!((*a.last().unwrap() == 2) != (*b.entries().last().unwrap() == 2));
    }

    #[test]
    fn reduce_preserves_the_lens(raw in prop::collection::vec(-1i64..8, 1..6)) {
        let entries: Vec<Entry> = raw.iter().map(|&a| Entry::Int(a)).collect();
        let before = cf_eval_ints(&raw);
        let red = reduce(&entries);
        // the lens of p/q, with p = 0 and p = ±1 read as S¹×S² and S³
        let l_before = surgeryforge::lens::lens_normalize(before.num(), before.den()).unwrap();
        prop_assert!(homeo_oriented(&to_lens(&red), &l_before));
    }

    #[test]
    fn symmetries_have_their_orders(a in slope(), b in slope(), c in slope(), d in slope(), x in slope()) {
        let f = P5Filling::new(a, b, c, d).with_x(x);
        for s in [Symmetry::SwapLR, Symmetry::SwapTB, Symmetry::SwapFB, Symmetry::Mirror] {
            prop_assert_eq!(symmetry(&symmetry(&f, s), s), f.clone());
        }
        let g = (0..3).fold(f.clone(), |g, _| symmetry(&g, Symmetry::Rot3));
        prop_assert_eq!(g, f);
    }

    #[test]
    fn euler_characteristic_is_an_invariant((p, q) in coprime(), k in 1i64..400) {
        let kn = SimpleKnot::new(p, q, k % p + (k % p == 0) as i64).unwrap();
        let chi = euler_char(&kn);
        for (q2, k2) in kn.orbit() {
            let other = SimpleKnot::new(p, q2, k2).unwrap();
            prop_assert!(equivalent(&kn, &other));
            prop_assert_eq!(euler_char(&other), chi);
        }
    }

    #[test]
    fn a_orders_are_linear_in_the_slope(m in -10i64..=10, n in -10i64..=10) {
        let a = Member::A { m, n };
        prop_assume!(a.validate().is_ok());
        prop_assert!(orders_linear(&a));
    }

    #[test]
    fn b_orders_are_linear_in_the_slope(r in slope()) {
        let b = Member::B { r };
        prop_assume!(b.validate().is_ok());
        prop_assert!(orders_linear(&b));
    }
}

/// `|H₁|` of the slope `p/q` filling is `|αp + βq|`, so across the slopes
/// `1, 2, ∞` the order at 2 is the sum or difference of the other two.
fn orders_linear(member: &Member) -> bool {
    let o: Vec<BigInt> = member
        .slots()
        .iter()
        .map(|s| family_lens(member, s).unwrap().p().clone())
        .collect();
    let (o1, o2, oi) = (&o[0], &o[1], &o[2]);
    *o2 == o1 + oi || *o2 == (o1 - oi).abs()
}
