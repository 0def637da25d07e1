mod common;

use proptest::prelude::*;

use common::{brute_ez, brute_schur, c, part};
use schurzeta::formal::{self, GiambelliVariant, HookVariant};
use schurzeta::mzv;
use schurzeta::partition::Partition;
use schurzeta::schur::{self, VariableTableau};
use schurzeta::{Complex64, ContentAssignment, Rational, SkewShape, TruncationConfig, Value};

fn partition(max_rows: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn exact(v: Value) -> Rational {
    v.as_exact().expect("exact value").clone()
}

fn ez(s: &[u32], m: u64, star: bool) -> Rational {
    let args: Vec<Complex64> = s.iter().map(|&x| c(x as f64)).collect();
    exact(mzv::eval_ez_truncated(&args, m, star))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_is_an_involution(l in partition(6, 6)) {
        prop_assert_eq!(l.conjugate().conjugate(), l);
    }

    #[test]
    fn frobenius_round_trip(l in partition(6, 6)) {
        prop_assume!(!l.is_empty() && l.size() <= 12);
        let fr = l.to_frobenius().unwrap();
        prop_assert_eq!(Partition::from_frobenius(&fr).unwrap(), l);
    }

    #[test]
    fn nested_sums_match_loops(s in prop::collection::vec(0u32..4, 1..4), m in 1u64..7, star: bool) {
        prop_assert_eq!(ez(&s, m, star), brute_ez(&s, m as u32, star));
    }

    #[test]
    fn stuffle_at_truncation(a in 1u32..6, b in 1u32..6, m in 1u64..40) {
        let lhs = ez(&[a], m, false) * ez(&[b], m, false);
        prop_assert_eq!(lhs, ez(&[a, b], m, false) + ez(&[b, a], m, false) + ez(&[a + b], m, false));
        prop_assert_eq!(ez(&[a, b], m, true), ez(&[a, b], m, false) + ez(&[a + b], m, false));
    }

    #[test]
    fn transfer_matches_enumeration(
        outer in partition(3, 3),
        inner in partition(2, 2),
        seed in prop::collection::vec(0u32..4, 9),
        m in 1u32..5,
    ) {
        prop_assume!(outer.contains(&inner));
        let shape = SkewShape::new(outer, inner).unwrap();
        let mut it = seed.iter().cycle();
        let rows: Vec<Vec<Complex64>> = (1..=shape.rows())
            .map(|i| (shape.inner.row(i)..shape.outer.row(i)).map(|_| c(*it.next().unwrap() as f64)).collect())
            .collect();
        let vt = VariableTableau::per_cell(shape, rows).unwrap();
        prop_assert_eq!(exact(schur::eval_schur_truncated(&vt, m as u64).unwrap()), brute_schur(&vt, m));
    }

    #[test]
    fn rows_and_columns_degenerate(zs in prop::collection::vec(1u32..4, 1..5), m in 1u64..8) {
        let n = zs.len();
        let row_z = ContentAssignment::from_real(zs.iter().enumerate().map(|(k, &v)| (k as i64, v as f64)));
        let col_z = ContentAssignment::from_real(zs.iter().enumerate().map(|(k, &v)| (-(k as i64), v as f64)));
        let row = VariableTableau::content_straight(part(&[n]), row_z);
        let col = VariableTableau::content_straight(Partition::new(vec![1; n]).unwrap(), col_z);
        prop_assert_eq!(exact(schur::eval_schur_truncated(&row, m).unwrap()), ez(&zs, m, true));
        prop_assert_eq!(exact(schur::eval_schur_truncated(&col, m).unwrap()), ez(&zs, m, false));
    }

    #[test]
    fn tail_bound_dominates_later_truncations(s in prop::collection::vec(1u32..4, 1..4), m in 10u64..200) {
        let args: Vec<Complex64> = s.iter().map(|&x| c(x as f64)).collect();
        prop_assume!(mzv::check_ez_domain(&args, false));
        for star in [false, true] {
            let r = mzv::eval_ez(&args, &TruncationConfig::floating(m), star).unwrap();
            let later = mzv::eval_ez(&args, &TruncationConfig::floating(4 * m), star).unwrap();
            prop_assert!(later.approx().re >= r.approx().re);
            prop_assert!(later.approx().re <= r.approx().re + r.tail_bound() + 1e-12);
        }
    }

    #[test]
    fn hook_formulas_are_exact(p in 0usize..4, q in 0usize..4, zs in prop::collection::vec(2u32..4, 7), m in 1u64..6) {
        let z = ContentAssignment::from_real((-3..=3).zip(zs).map(|(k, v)| (k, v as f64)));
        let vt = VariableTableau::content_straight(Partition::hook(p, q), z.clone());
        let want = brute_schur(&vt, m as u32);
        for v in [HookVariant::Hook1, HookVariant::Hook2] {
            let got = formal::evaluate_expr(&formal::expand_hook(p, q, v), &z, &TruncationConfig::exact(m)).unwrap();
            prop_assert_eq!(exact(got.value), want.clone());
        }
    }

    #[test]
    fn hook_bridge_is_exact(p in 0usize..3, q in 0usize..3, zs in prop::collection::vec(2u32..4, 5), m in 1u64..6) {
        let z = ContentAssignment::from_real((-2..=2).zip(zs).map(|(k, v)| (k, v as f64)));
        let l = Partition::hook(p, q);
        let vt = VariableTableau::content_straight(l.clone(), z.clone());
        let got = formal::eval_thm42(&l, &z, &TruncationConfig::exact(m)).unwrap();
        prop_assert_eq!(exact(got.value), brute_schur(&vt, m as u32));
    }
}

#[test]
fn giambelli_structure_for_small_frobenius() {
    for l in (1..=9).flat_map(Partition::all_of_size) {
        let fr = l.to_frobenius().unwrap();
        if fr.rank() > 3 || fr.arms[0] > 3 || fr.legs[0] > 3 {
            continue;
        }
        let want = formal::det_by_cofactors(&formal::hook_grid(&l, HookVariant::Hook1).unwrap());
        assert_eq!(formal::expand_giambelli(&l, GiambelliVariant::Standard).unwrap(), want, "{l}");
    }
}
