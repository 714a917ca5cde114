use arfkit::classify::Analysis;
use arfkit::{
    arf_by_pattern, arf_closure, blowup, blowup_oracle, canonical_ideal, classify_report, endomorphism_semigroup,
    is_almost_symmetric_numeric, lipman_sequence, NumericalSemigroup, RelativeIdeal,
};
use proptest::prelude::*;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Semigroups from 1 to 4 random generators in `[2, max]`, gcd 1.
fn semigroup(max: i64) -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2..=max, 1..=4)
        .prop_filter("gcd must be 1", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
        .prop_map(|g| NumericalSemigroup::from_generators(&g).unwrap())
}

/// The ideal `⋃ (x + H)` over `shifts`.
fn ideal_from_shifts(h: &NumericalSemigroup, shifts: &[i64]) -> RelativeIdeal {
    let lo = *shifts.iter().min().unwrap();
    let tail = lo + h.conductor();
    let members: Vec<i64> = (lo..tail)
        .filter(|&n| shifts.iter().any(|&s| h.contains(n - s)))
        .collect();
    RelativeIdeal::new(h, &members, tail).unwrap()
}

/// Arf closure through blowups: `{0} ∪ (m + closure(blowup(H)))`.
fn closure_by_blowups(h: &NumericalSemigroup) -> Vec<bool> {
    let top = h.conductor() + 2;
    if h.is_natural() {
        return vec![true; top as usize];
    }
    let m = h.multiplicity();
    let inner = closure_by_blowups(&blowup(h));
    (0..top)
        .map(|n| n == 0 || (n >= m && (n - m >= inner.len() as i64 || inner[(n - m) as usize])))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn apery_set_decides_membership(h in semigroup(25)) {
        let m = h.multiplicity();
        let ap = h.apery_set(m).unwrap();
        for n in 0..h.conductor() + 2 * m {
            prop_assert_eq!(h.contains(n), n >= ap[(n % m) as usize]);
        }
    }

    #[test]
    fn basic_bounds(h in semigroup(25)) {
        prop_assert!(h.embedding_dimension() as i64 <= h.multiplicity());
        if !h.is_natural() {
            prop_assert!(h.frobenius() < 2 * h.genus() as i64);
        }
        prop_assert_eq!(h.genus(), h.gaps().count());
        prop_assert!(!h.contains(h.frobenius()));
        prop_assert!(h.pseudo_frobenius().contains(&h.frobenius()));
    }

    #[test]
    fn quotient_then_sum_stays_inside(
        h in semigroup(20),
        e in prop::collection::vec(-5i64..15, 1..4),
        f in prop::collection::vec(-5i64..15, 1..4),
    ) {
        let e = ideal_from_shifts(&h, &e);
        let f = ideal_from_shifts(&h, &f);
        let q = e.quotient(&f).unwrap();
        prop_assert!(q.sum(&f).unwrap().is_subset_of(&e));
        // q is the largest such set.
        for x in q.min() - 5..q.min() + 30 {
            if !q.contains(x) {
                prop_assert!((f.min()..=f.bound().max(e.bound() - x)).any(|y| f.contains(y) && !e.contains(x + y)));
            }
        }
    }

    #[test]
    fn blowup_agrees_with_oracle(h in semigroup(25)) {
        prop_assert_eq!(blowup(&h), blowup_oracle(&h));
        prop_assert!(endomorphism_semigroup(&h).is_subset_of(&blowup(&h)));
    }

    #[test]
    fn stable_maximal_ideal_iff_max_embdim(h in semigroup(25)) {
        prop_assert_eq!(RelativeIdeal::maximal(&h).is_stable(), h.has_max_embedding_dimension());
    }

    #[test]
    fn lipman_chain_shape(h in semigroup(25)) {
        let seq = lipman_sequence(&h);
        prop_assert!(seq.len_to_natural() <= h.genus());
        for w in seq.steps().windows(2) {
            prop_assert!(w[0].is_subset_of(&w[1]));
            prop_assert!(w[1].genus() < w[0].genus());
            prop_assert!(w[1].multiplicity() <= w[0].multiplicity());
        }
        prop_assert_eq!(*seq.multiplicities().last().unwrap(), 1);
    }

    #[test]
    fn blowup_is_shift_under_max_embdim(h in semigroup(25)) {
        if h.has_max_embedding_dimension() {
            let b = blowup(&h);
            let a1 = h.multiplicity();
            for x in 0..h.conductor() + a1 {
                prop_assert_eq!(b.contains(x), h.contains(x + a1));
            }
        }
    }

    #[test]
    fn canonical_ideal_properties(h in semigroup(25)) {
        let k = canonical_ideal(&h);
        let unit = RelativeIdeal::principal(&h);
        prop_assert!(unit.is_subset_of(&k));
        prop_assert_eq!(k.min(), 0);
        if !h.is_natural() {
            let excess = k.colength(&unit).unwrap() as i64;
            prop_assert_eq!(excess, 2 * h.genus() as i64 - h.frobenius() - 1);
        }
        let a = Analysis::new(&h);
        prop_assert_eq!(a.is_almost_symmetric(), is_almost_symmetric_numeric(&h));
    }

    #[test]
    fn conductor_is_largest(h in semigroup(20)) {
        let a = Analysis::new(&h);
        let (s, c) = (&a.canonical.s, &a.canonical.conductor);
        for x in -5..h.conductor() + 5 {
            let fits = (0..=s.conductor() + h.conductor()).all(|y| !s.contains(y) || h.contains(x + y));
            prop_assert_eq!(c.contains(x), fits, "x = {}", x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn audit_is_clean_beyond_the_enumerated_corpus(h in semigroup(18)) {
        let violations = Analysis::new(&h).audit();
        prop_assert!(violations.is_empty(), "{}: {:?}", h, violations);
    }

    #[test]
    fn arf_closure_matches_blowup_recursion(h in semigroup(18)) {
        let c = arf_closure(&h);
        prop_assert!(arf_by_pattern(&c));
        let expected = closure_by_blowups(&h);
        for (n, &member) in expected.iter().enumerate() {
            prop_assert_eq!(c.contains(n as i64), member, "n = {}", n);
        }
    }

    #[test]
    fn report_json_is_deterministic(h in semigroup(18)) {
        let first = serde_json::to_string(&classify_report(&h)).unwrap();
        let value: serde_json::Value = serde_json::from_str(&first).unwrap();
        let back: NumericalSemigroup = serde_json::from_value(value["semigroup"].clone()).unwrap();
        let second = serde_json::to_string(&classify_report(&back)).unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn text_form_round_trips(h in semigroup(30)) {
        let parsed: NumericalSemigroup = h.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &h);
        let parsed: NumericalSemigroup = h.to_text(true).parse().unwrap();
        prop_assert_eq!(parsed, h);
    }
}
