use std::collections::BTreeSet;

use mexlab::census::{self, Statistic};
use mexlab::enumerate::{count_colored, partitions, partitions_constrained, ColoredSpec, ConstraintSpec};
use mexlab::partition::BelowOne;
use mexlab::qseries::{self, TruncatedSeries};
use mexlab::Partition;
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=25, 0..14).prop_map(|v| Partition::from_parts(&v).unwrap())
}

fn p_of(n: u32) -> u64 {
    u64::try_from(qseries::partition_gf(n as usize).coeff(n as usize)).unwrap()
}

/// Plain-list reading of a constraint specification.
fn admits(spec: &ConstraintSpec, parts: &[u32]) -> bool {
    let distinct: BTreeSet<u32> = parts.iter().copied().collect();
    let freq = |v: u32| parts.iter().filter(|&&x| x == v).count() as u32;
    if let Some(r) = spec.max_frequency {
        if distinct.iter().any(|&v| freq(v) > r) {
            return false;
        }
    }
    if spec.distinct && distinct.len() != parts.len() {
        return false;
    }
    if let Some(f) = &spec.forbidden_residues {
        if parts.iter().any(|v| f.residues.contains(&(v % f.modulus))) {
            return false;
        }
    }
    if let Some(k) = spec.exact_largest_part {
        if parts.first() != Some(&k) {
            return false;
        }
    }
    if let Some(m) = spec.min_part {
        if parts.iter().any(|&v| v < m) {
            return false;
        }
    }
    if let Some(g) = spec.max_successive_gap {
        let mut prev = 0;
        for &v in &distinct {
            if v - prev > g {
                return false;
            }
            prev = v;
        }
    }
    true
}

fn arb_spec() -> impl Strategy<Value = ConstraintSpec> {
    (
        proptest::option::of(1u32..4),
        proptest::option::of((2u32..5, proptest::collection::vec(0u32..5, 0..3))),
        any::<bool>(),
        proptest::option::of(1u32..8),
        proptest::option::of(1u32..4),
        proptest::option::of(1u32..4),
    )
        .prop_map(|(freq, residues, distinct, largest, gap, min)| {
            let mut s = ConstraintSpec::new();
            if let Some(r) = freq {
                s = s.max_frequency(r);
            }
            if let Some((m, rs)) = residues {
                s = s.forbid_residues(m, &rs);
            }
            if distinct {
                s = s.distinct();
            }
            if let Some(k) = largest {
                s = s.exact_largest_part(k);
            }
            if let Some(g) = gap {
                s = s.max_successive_gap(g);
            }
            if let Some(m) = min {
                s = s.min_part(m);
            }
            s
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn partition_form_is_canonical(raw in proptest::collection::vec(1u32..=25, 0..14)) {
        let p = Partition::from_parts(&raw).unwrap();
        prop_assert_eq!(p.weight(), raw.iter().sum::<u32>());
        let parts = p.parts();
        prop_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let mut sorted = raw.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(&parts, &sorted);
        for &(v, f) in p.frequencies() {
            prop_assert!(v >= 1 && f >= 1);
            prop_assert_eq!(f, p.frequency_of(v));
        }
        prop_assert_eq!(Partition::from_frequencies(p.frequencies()).unwrap(), p);
    }

    #[test]
    fn conjugation_is_an_involution(p in arb_partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.largest_part(), p.num_parts());
        prop_assert_eq!(c.num_parts(), p.largest_part());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn chain_mex_is_least_absent_window(p in arb_partition(), r in 1u32..6) {
        let k = p.chain_mex(r);
        prop_assert!(k >= 1 && k <= p.largest_part() + 1);
        prop_assert!((k..k + r).all(|v| p.frequency_of(v) == 0));
        if k > 1 {
            prop_assert!(p.frequency_of(k - 1) > 0);
        }
        prop_assert!(p.chain_mex(r + 1) >= k);
        prop_assert_eq!(p.chain_mex(1), p.mex());
    }

    #[test]
    fn chain_maex_is_largest_absent_window(p in arb_partition(), t in 1u32..5) {
        let absent = |v: i64, zero_occupied: bool| match v {
            ..=-1 => true,
            0 => !zero_occupied,
            _ => p.frequency_of(v as u32) == 0,
        };
        for (below, zero) in [(BelowOne::Missing, false), (BelowOne::Occupied, true)] {
            let brute = (1..p.largest_part())
                .rev()
                .find(|&k| (0..t).all(|i| absent(i64::from(k) - i64::from(i), zero)));
            prop_assert_eq!(p.chain_maex_with(t, below), brute);
        }
        prop_assert_eq!(p.chain_maex(1), p.maex());
        if p.is_gap_free() {
            prop_assert!(p.maex().is_none());
        }
    }

    #[test]
    fn counting_with_multiplicity(p in arb_partition(), r in 1u32..5) {
        prop_assert_eq!(p.parts_greater_than(0), p.num_parts());
        let parts = p.parts();
        prop_assert_eq!(p.multiples_of(r), parts.iter().filter(|&&v| v % r == 0).count() as u32);
        let repeating: Vec<u32> = p.frequencies().iter().filter(|&&(_, f)| f >= r).map(|&(v, _)| v).collect();
        prop_assert_eq!(p.largest_repeating(r), repeating.iter().copied().max().unwrap_or(0));
        prop_assert_eq!(p.smallest_repeating(r), repeating.iter().copied().min().unwrap_or(0));
        prop_assert_eq!(p.distinct_repeating(r), repeating.len() as u32);
    }

    #[test]
    fn constrained_stream_is_refiltered_stream(n in 0u32..=20, spec in arb_spec()) {
        let direct: Vec<Partition> = partitions_constrained(n, &spec).unwrap().collect();
        let filtered: Vec<Partition> = partitions(n).filter(|p| admits(&spec, &p.parts())).collect();
        prop_assert_eq!(direct, filtered);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn census_columns_partition_the_partitions(n in 0u32..=22, r in 2u32..=5) {
        let c = census::three_way_census(n, r).unwrap();
        let p = p_of(n);
        prop_assert_eq!(c.multiples.total(), p);
        prop_assert_eq!(c.largest_repeating.total(), p);
        prop_assert_eq!(c.parts_above_chain_mex.total(), p);
        for j in 0..=n {
            let (a, b, cc) = c.row(j);
            prop_assert!(a == b && b == cc);
        }
    }

    #[test]
    fn refine_tables_agree(n in 0u32..=18, r in 1u32..=3) {
        let c = census::refine_census(n, r).unwrap();
        let a: Vec<_> = c.by_chain_mex.cells().collect();
        let b: Vec<_> = c.by_largest_repeating.cells().collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn tabulation_is_split_invariant(n in 0u32..=18, s in 1u32..=3) {
        let whole = census::tabulate(n, &[Statistic::LargestRepeating(s)]).remove(0);
        prop_assert_eq!(whole.total(), p_of(n));
        let mut by_hand = std::collections::BTreeMap::<u32, u64>::new();
        for p in partitions(n) {
            *by_hand.entry(p.largest_repeating(s)).or_default() += 1;
        }
        prop_assert_eq!(whole.marginal(0), by_hand);
    }

    #[test]
    fn w_degree_never_exceeds_q_degree(order in 0usize..=30, r in 1usize..=3, j in 0usize..=4) {
        for b in [
            qseries::gf_alpha_bivariate(order),
            qseries::gf_multiples_bivariate(r, order).unwrap(),
            qseries::gf_interm1(j, r, order).unwrap(),
        ] {
            for n in 0..=order {
                prop_assert!(b.w_degree(n).is_none_or(|d| d <= n));
            }
        }
    }

    #[test]
    fn mismatched_orders_truncate(a in 0usize..40, b in 0usize..40) {
        let x = qseries::partition_gf(a);
        let y = qseries::euler_product(b);
        let prod = &x * &y;
        prop_assert_eq!(prod.order(), a.min(b));
        prop_assert_eq!(prod, TruncatedSeries::one(a.min(b)));
    }

    #[test]
    fn colored_counts_match_series(m in 2u32..=5, j_off in 0u32..5, n in 0u32..=22) {
        let j = 1 + j_off % m;
        let series = qseries::gf_corollary_term(m as usize - 1, j as usize, n as usize).unwrap();
        let count = count_colored(n, &ColoredSpec::regular_two_colored(m, j)).unwrap();
        prop_assert_eq!(series.coeff(n as usize), &BigInt::from(count));
    }
}

#[test]
fn exhaustive_conjugation_and_gap_free() {
    for n in 0..=30 {
        partitions(n).visit(|p| {
            let c = p.conjugate();
            assert_eq!(&c.conjugate(), p);
            assert_eq!(c.largest_part(), p.num_parts());
            assert_eq!(p.parts_greater_than(p.mex()) == 0, p.is_gap_free(), "{p}");
        });
    }
}

#[test]
fn enumeration_counts_match_series() {
    let series = qseries::partition_gf(80);
    for n in 0..=80u32 {
        let mut count = 0u64;
        partitions(n).visit(|_| count += 1);
        assert_eq!(series.coeff(n as usize), &BigInt::from(count), "n = {n}");
    }
}

#[test]
fn pentagonal_support() {
    let e = qseries::euler_product(500);
    let mut pentagonal = BTreeSet::new();
    for k in 0i64..40 {
        for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
            if g <= 500 {
                pentagonal.insert(g as usize);
            }
        }
    }
    for (n, c) in e.coeffs().iter().enumerate() {
        if pentagonal.contains(&n) {
            assert!(c == &BigInt::from(1) || c == &BigInt::from(-1), "n = {n}");
        } else {
            assert_eq!(c, &BigInt::from(0), "n = {n}");
        }
    }
    assert_eq!(qseries::partition_gf(500), qseries::pochhammer_inv_inf(1, 1, 500));
}

#[test]
fn sigma_mex_is_two_colored_distinct() {
    let d2 = qseries::gf_sigma_mex(60);
    for n in 0..=60u32 {
        let direct = census::sigma_chain_mex(n, 1).unwrap();
        assert_eq!(d2.coeff(n as usize), &BigInt::from(direct), "n = {n}");
        assert_eq!(direct, mexlab::enumerate::count_two_colored_distinct(n));
    }
}
