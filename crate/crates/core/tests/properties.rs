//! Property-based invariants.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use rblie::free_rb::{is_free_basis, FreeRbLie};
use rblie::ls::{enum_ls, is_assoc_ls, is_ls, standard_bracketing};
use rblie::parse::{format_expr, parse_expr};
use rblie::rational::Q;
use rblie::structure::{reference_algebras, StructureAlgebra};
use rblie::{Alphabet, LieAlgebra, LinComb, Weight, Word};

fn abc() -> Alphabet {
    Alphabet::parse("a,b,c").unwrap()
}

/// Arbitrary words over three generators and `R`, of bounded size.
fn word() -> impl Strategy<Value = Word> {
    let leaf = (0usize..3).prop_map(Word::gen);
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Word::r),
            (inner.clone(), inner).prop_map(|(a, b)| Word::br(a, b)),
        ]
    })
}

fn small_q() -> impl Strategy<Value = Q> {
    (-20i64..20, 1i64..7).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn lincomb() -> impl Strategy<Value = LinComb> {
    prop::collection::vec((word(), small_q()), 0..5).prop_map(|v| v.into_iter().collect())
}

fn to_big(q: &Q) -> BigRational {
    let s = q.to_string();
    match s.split_once('/') {
        Some((n, d)) => BigRational::new(n.parse().unwrap(), d.parse().unwrap()),
        None => BigRational::from_integer(s.parse::<BigInt>().unwrap()),
    }
}

proptest! {
    #[test]
    fn order_is_total_and_consistent(a in word(), b in word(), c in word()) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
    }

    #[test]
    fn format_then_parse_is_identity(x in lincomb()) {
        let al = abc();
        let text = format_expr(&x, &al);
        prop_assert_eq!(parse_expr(&text, &al).unwrap(), x);
    }

    #[test]
    fn bracketing_inverts_flattening(len in 1usize..7, seed in any::<u64>()) {
        // A random associative word; keep it only if it is LS.
        let mut s = seed;
        let seq: Vec<Word> = (0..len)
            .map(|_| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                Word::gen((s >> 33) as usize % 3)
            })
            .collect();
        if is_assoc_ls(&seq) {
            let w = standard_bracketing(&seq).unwrap();
            prop_assert!(is_ls(&w));
            prop_assert_eq!(w.letters(), &seq[..]);
        } else {
            prop_assert!(standard_bracketing(&seq).is_err());
        }
    }

    #[test]
    fn rational_ops_match_big_rationals(
        a in any::<i64>(), b in 1i64..i64::MAX, c in any::<i64>(), d in 1i64..1000,
    ) {
        let x = Q::new(a.into(), b.into());
        let y = Q::new(c.into(), d.into());
        let (bx, by) = (to_big(&x), to_big(&y));
        prop_assert_eq!(to_big(&(&x + &y)), &bx + &by);
        prop_assert_eq!(to_big(&(&x - &y)), &bx - &by);
        prop_assert_eq!(to_big(&(&x * &y)), &bx * &by);
        if c != 0 {
            prop_assert_eq!(to_big(&(&x / &y)), &bx / &by);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn free_products_are_anticommutative_and_closed(
        i in 0usize..92, j in 0usize..92, weight in 0i64..2,
    ) {
        let al = Alphabet::parse("a,b").unwrap();
        let rb = FreeRbLie::new(al, Weight::from_int(weight).unwrap());
        let words = rb.basis(3, 1);
        let (u, v) = (&words[i % words.len()], &words[j % words.len()]);
        let uv = rb.rb_mult(u, v).unwrap();
        let vu = rb.rb_mult(v, u).unwrap();
        prop_assert_eq!(&uv, &-vu);
        for w in uv.words() {
            prop_assert!(is_free_basis(w));
        }
    }

    #[test]
    fn r_is_linear(x in lincomb(), y in lincomb()) {
        let rb = FreeRbLie::new(abc(), Weight::One);
        let lhs = rb.apply_r(&(&x + &y)).unwrap();
        let rhs = &rb.apply_r(&x).unwrap() + &rb.apply_r(&y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn ls_enumeration_is_sorted_and_canonical() {
    let words = enum_ls(&abc(), 5);
    assert!(words.windows(2).all(|w| w[0] > w[1]));
    for w in &words {
        assert_eq!(&standard_bracketing(w.letters()).unwrap(), w);
    }
}

#[test]
fn algebra_files_round_trip_bit_exactly() {
    for (_, a) in reference_algebras() {
        let text = a.format();
        let back = StructureAlgebra::parse(&text).unwrap();
        assert_eq!(back.format(), text);
        assert_eq!(back, a);
    }
}
