use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;

use super::{At, Checker, Ctx, Outcome, Side};
use crate::census::{
    alpha_census, chain_maex_census, franklin_glaisher_census, refine_census, sigma_chain_mex_many, tabulate,
    three_way_census, MaexDomain, Statistic,
};
use crate::enumerate::{
    count_colored, count_two_colored_distinct, partitions, partitions_constrained, ColoredSpec, ConstraintSpec,
};
use crate::error::Result;
use crate::partition::{BelowOne, Partition};
use crate::qseries::{pochhammer_fin_inv, pochhammer_inf, BivariateSeries, TruncatedSeries};

/// One verifiable identity.
pub struct Identity {
    pub id: &'static str,
    pub summary: &'static str,
    /// Enumerates partitions up to `max_n` (subject to the scan ceiling).
    pub scans: bool,
    /// Expands series to `order` (subject to the order ceiling).
    pub uses_order: bool,
    /// Default `r`; the start is the smallest admissible value. `None`
    /// for identities without an `r` parameter.
    pub r_range: Option<RangeInclusive<u32>>,
    pub(crate) check: fn(&Ctx) -> Result<Outcome>,
}

/// Every registered identity, in report order.
pub fn registry() -> &'static [Identity] {
    &REGISTRY
}

static REGISTRY: [Identity; 23] = [
    Identity {
        id: "euler",
        summary: "partitions into odd parts = partitions into distinct parts",
        scans: true,
        uses_order: false,
        r_range: None,
        check: euler,
    },
    Identity {
        id: "glaisher",
        summary: "r-regular partitions = partitions with every frequency below r",
        scans: true,
        uses_order: false,
        r_range: Some(2..=4),
        check: glaisher,
    },
    Identity {
        id: "franklin",
        summary: "j different values divisible by r = j different values occurring >= r times",
        scans: true,
        uses_order: false,
        r_range: Some(2..=4),
        check: franklin,
    },
    Identity {
        id: "prop-alpha",
        summary: "w^j q^n of 1/((q;q^2)(wq^2;q^2)) = j parts above the mex = j even parts",
        scans: true,
        uses_order: false,
        r_range: None,
        check: prop_alpha,
    },
    Identity {
        id: "remark-gap-free",
        summary: "no parts above the mex = gap-free = distinct parts (via conjugation)",
        scans: true,
        uses_order: false,
        r_range: None,
        check: remark_gap_free,
    },
    Identity {
        id: "prop-reven-euler",
        summary: "j even parts = largest repeating part j = j parts above the mex",
        scans: true,
        uses_order: false,
        r_range: None,
        check: prop_reven_euler,
    },
    Identity {
        id: "prop-r-repeating",
        summary: "j multiples of r = largest r-repeating part j, by scan and by series",
        scans: true,
        uses_order: false,
        r_range: Some(1..=4),
        check: prop_r_repeating,
    },
    Identity {
        id: "thm-3way",
        summary: "j multiples of r = largest r-repeating part j = j parts above the (r-1)-chain mex",
        scans: true,
        uses_order: false,
        r_range: Some(2..=4),
        check: thm_3way,
    },
    Identity {
        id: "conj-gap-bijection",
        summary: "conjugation maps gaps below r with the largest part repeated > j times onto frequencies below r with smallest part > j",
        scans: true,
        uses_order: false,
        r_range: Some(2..=4),
        check: conj_gap_bijection,
    },
    Identity {
        id: "fk-sum",
        summary: "sum_k F_k^{<r}(q) q^{kj} = prod_{t>j} (1 + q^t + ... + q^{t(r-1)})",
        scans: true,
        uses_order: false,
        r_range: Some(2..=4),
        check: fk_sum,
    },
    Identity {
        id: "inner-sum-collapse",
        summary: "sum_{j<m} q^{j(r+1)}/(q^{r+1};q^{r+1})_j = 1/(q^{r+1};q^{r+1})_{m-1}, m <= 10",
        scans: false,
        uses_order: true,
        r_range: Some(1..=4),
        check: inner_sum_collapse,
    },
    Identity {
        id: "lemma-refine",
        summary: "j parts above the r-chain mex k = largest (r+1)-repeating part j with k-1 parts above j",
        scans: true,
        uses_order: false,
        r_range: Some(1..=4),
        check: lemma_refine,
    },
    Identity {
        id: "interm1",
        summary: "bivariate series for largest (r+1)-repeating part j, w counting parts above j",
        scans: true,
        uses_order: false,
        r_range: Some(1..=4),
        check: interm1,
    },
    Identity {
        id: "diff-w",
        summary: "w-derivative at w=1 of the bivariate series = m-weighted census = chain-mex block sums",
        scans: true,
        uses_order: false,
        r_range: Some(1..=4),
        check: diff_w,
    },
    Identity {
        id: "gfn-derivation",
        summary: "intermediate series of the generating-function derivation, stage by stage",
        scans: false,
        uses_order: true,
        r_range: Some(1..=4),
        check: gfn_derivation,
    },
    Identity {
        id: "gfn-sigma-rc-mex",
        summary: "sum of r-chain mex by scan = closed-form generating function",
        scans: true,
        uses_order: false,
        r_range: Some(1..=4),
        check: gfn_sigma_rc_mex,
    },
    Identity {
        id: "gfn-sigma-mex",
        summary: "closed form at r=1 = (-q;q)^2 = 1/(q;q^2)^2",
        scans: false,
        uses_order: true,
        r_range: None,
        check: gfn_sigma_mex,
    },
    Identity {
        id: "cor-two-color",
        summary: "sum of r-chain mex = -(r-1)p(n) + sum_j p_{r+1}(j, n)",
        scans: true,
        uses_order: false,
        r_range: Some(1..=4),
        check: cor_two_color,
    },
    Identity {
        id: "sigma-mex-d2",
        summary: "sum of mex = two-colored distinct-part partitions = two-colored odd-part partitions",
        scans: true,
        uses_order: false,
        r_range: None,
        check: sigma_mex_d2,
    },
    Identity {
        id: "thm-chain-maex",
        summary: "j parts above the (r-1)-chain maex = smallest r-repeating part j, j >= 1",
        scans: true,
        uses_order: false,
        r_range: Some(2..=4),
        check: thm_chain_maex,
    },
    Identity {
        id: "parity-sigma-mex",
        summary: "sum of mex is odd exactly at n = j(3j +- 1)",
        scans: false,
        uses_order: true,
        r_range: None,
        check: parity_sigma_mex,
    },
    Identity {
        id: "qbinom-a0",
        summary: "sum_n z^n/(q;q)_n = 1/(z;q) at z = q^r",
        scans: false,
        uses_order: true,
        r_range: Some(1..=4),
        check: qbinom_a0,
    },
    Identity {
        id: "gf-vs-census-suite",
        summary: "every basic builder against an enumeration count",
        scans: true,
        uses_order: false,
        r_range: Some(1..=4),
        check: gf_vs_census_suite,
    },
];

fn count(n: u32, spec: &ConstraintSpec) -> u64 {
    partitions_constrained(n, spec).expect("valid constraint").count() as u64
}

fn census_sides(a: Statistic, ka: Vec<u32>, b: Statistic, kb: Vec<u32>) -> impl FnOnce() -> (Side, Side) {
    move || (Side::Census(a, ka), Side::Census(b, kb))
}

fn series_side(stat: Statistic, key: Vec<u32>) -> impl FnOnce() -> (Side, Side) {
    move || (Side::Series, Side::Census(stat, key))
}

fn euler(cx: &Ctx) -> Result<Outcome> {
    let odd = ConstraintSpec::regular(2);
    let distinct = ConstraintSpec::new().distinct();
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        ck.compare(At::n(n), count(n, &odd), count(n, &distinct), || {
            (Side::Constrained(odd.clone()), Side::Constrained(distinct.clone()))
        });
    }
    Ok(ck.finish())
}

fn glaisher(cx: &Ctx) -> Result<Outcome> {
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        for &r in &cx.rs {
            let c = franklin_glaisher_census(n, r)?;
            ck.compare(At::n(n).r(r), c.regular, c.bounded_frequency, || {
                (
                    Side::Constrained(ConstraintSpec::regular(r)),
                    Side::Constrained(ConstraintSpec::new().max_frequency(r - 1)),
                )
            });
        }
    }
    Ok(ck.finish())
}

fn franklin(cx: &Ctx) -> Result<Outcome> {
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        for &r in &cx.rs {
            let c = franklin_glaisher_census(n, r)?;
            for j in (0..=n).filter(|&j| cx.wants_j(j)) {
                ck.compare(
                    At::n(n).r(r).j(j),
                    c.distinct_multiples.get(&[j]),
                    c.distinct_repeating.get(&[j]),
                    census_sides(c.distinct_multiples.statistic, vec![j], c.distinct_repeating.statistic, vec![j]),
                );
            }
        }
    }
    Ok(ck.finish())
}

/// `Σ_{m≥1} q^{C(m,2)} / ((q;q)_{m−1} (wq^{m+1};q)_∞)`: the mex is `m`.
fn alpha_by_mex(order: usize) -> BivariateSeries {
    let mut total = BivariateSeries::zero(order);
    let mut m = 1;
    while m * (m - 1) / 2 <= order {
        let mut term = BivariateSeries::one(order);
        for t in (m + 1)..=order {
            term.div_one_minus(1, t);
        }
        for i in 1..m {
            term.div_one_minus(0, i);
        }
        total += &term.shift_q(m * (m - 1) / 2);
        m += 1;
    }
    total
}

/// `(−q;q)_∞ Σ_m (wq²)^m / (q²;q²)_m`.
fn alpha_by_q_binomial(cx: &Ctx, order: usize) -> BivariateSeries {
    let mut sum = BivariateSeries::zero(order);
    for m in 0..=order / 2 {
        let layer = pochhammer_fin_inv(2, 2, m, order).shift(2 * m);
        sum += &BivariateSeries::from_layer(m, &layer);
    }
    sum.mul_univariate(&cx.builders.distinct_parts_gf(order))
}

fn prop_alpha(cx: &Ctx) -> Result<Outcome> {
    let order = cx.max_n as usize;
    let series = cx.builders.alpha_bivariate(order);
    let by_mex = alpha_by_mex(order);
    let by_binomial = alpha_by_q_binomial(cx, order);
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        let (alpha, even) = alpha_census(n);
        for j in (0..=n).filter(|&j| cx.wants_j(j)) {
            let (d, w) = (n as usize, j as usize);
            let at = At::n(n).j(j);
            ck.compare(
                at.step("alpha-even"),
                alpha.get(&[j]),
                even.get(&[j]),
                census_sides(alpha.statistic, vec![j], even.statistic, vec![j]),
            );
            ck.compare(
                at.step("series-alpha"),
                series.coeff(d, w),
                alpha.get(&[j]),
                series_side(alpha.statistic, vec![j]),
            );
            ck.compare(at.step("mex-sum"), by_mex.coeff(d, w), series.coeff(d, w), || {
                (Side::Series, Side::Series)
            });
            ck.compare(at.step("q-binomial"), by_binomial.coeff(d, w), series.coeff(d, w), || {
                (Side::Series, Side::Series)
            });
        }
    }
    Ok(ck.finish())
}

fn remark_gap_free(cx: &Ctx) -> Result<Outcome> {
    let distinct = ConstraintSpec::new().distinct();
    let above_mex = Statistic::PartsAboveChainMex(1);
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        let alpha0 = tabulate(n, &[above_mex]).remove(0).get(&[0]);
        let mut gap_free = 0u64;
        let mut conj_distinct = 0u64;
        partitions(n).visit(|p| {
            if p.is_gap_free() {
                gap_free += 1;
                conj_distinct += u64::from(p.conjugate().max_frequency() <= 1);
            }
        });
        ck.compare(At::n(n).step("mex"), alpha0, gap_free, || {
            (Side::Census(above_mex, vec![0]), Side::filter(Partition::is_gap_free))
        });
        ck.compare(At::n(n).step("distinct"), gap_free, count(n, &distinct), || {
            (Side::filter(Partition::is_gap_free), Side::Constrained(ConstraintSpec::new().distinct()))
        });
        ck.compare(At::n(n).step("conjugation"), conj_distinct, gap_free, || {
            (
                Side::filter(|p| p.is_gap_free() && p.conjugate().max_frequency() <= 1),
                Side::filter(Partition::is_gap_free),
            )
        });
    }
    Ok(ck.finish())
}

fn three_way_checks(ck: &mut Checker, cx: &Ctx, n: u32, r: u32, at: At) -> Result<()> {
    let c = three_way_census(n, r)?;
    let [above, mult, rep] = c.statistics();
    for j in (0..=n).filter(|&j| cx.wants_j(j)) {
        let (a, b, chain) = c.row(j);
        ck.compare(at.j(j).step("multiples-repeating"), a, b, census_sides(mult, vec![j], rep, vec![j]));
        ck.compare(at.j(j).step("repeating-chain-mex"), b, chain, census_sides(rep, vec![j], above, vec![j]));
    }
    Ok(())
}

fn prop_reven_euler(cx: &Ctx) -> Result<Outcome> {
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        three_way_checks(&mut ck, cx, n, 2, At::n(n))?;
    }
    Ok(ck.finish())
}

fn thm_3way(cx: &Ctx) -> Result<Outcome> {
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        for &r in &cx.rs {
            three_way_checks(&mut ck, cx, n, r, At::n(n).r(r))?;
        }
    }
    Ok(ck.finish())
}

fn prop_r_repeating(cx: &Ctx) -> Result<Outcome> {
    let order = cx.max_n as usize;
    let mut ck = Checker::new();
    for &r in &cx.rs {
        let ru = r as usize;
        let bivariate = cx.builders.multiples_bivariate(ru, order)?;
        // (q^r;q^r)_∞/(q;q)_∞ · q^{rj}/(q^r;q^r)_j, one j at a time.
        let regular = &pochhammer_inf(ru, ru, order) * &cx.builders.partition_gf(order);
        let js = cx.js_or(0..=cx.max_n);
        let mut by_binomial = Vec::new();
        let mut by_repeating = Vec::new();
        for &j in &js {
            let ju = j as usize;
            let layer = pochhammer_fin_inv(ru, ru, ju, order).shift(ru * ju);
            by_binomial.push(&regular * &layer);
            by_repeating.push(cx.builders.largest_repeating(ru, ju, order)?);
        }
        for n in 0..=cx.max_n {
            let t = tabulate(n, &[Statistic::MultiplesOf(r), Statistic::LargestRepeating(r)]);
            for (i, &j) in js.iter().enumerate() {
                let at = At::n(n).r(r).j(j);
                let (mult, rep) = (t[0].get(&[j]), t[1].get(&[j]));
                let d = n as usize;
                ck.compare(at.step("census"), mult, rep, census_sides(t[0].statistic, vec![j], t[1].statistic, vec![j]));
                ck.compare(
                    at.step("multiples-series"),
                    bivariate.coeff(d, j as usize),
                    mult,
                    series_side(t[0].statistic, vec![j]),
                );
                ck.compare(
                    at.step("q-binomial"),
                    by_binomial[i].coeff(d).clone(),
                    bivariate.coeff(d, j as usize),
                    || (Side::Series, Side::Series),
                );
                ck.compare(
                    at.step("repeating-series"),
                    by_repeating[i].coeff(d).clone(),
                    rep,
                    series_side(t[1].statistic, vec![j]),
                );
            }
        }
    }
    Ok(ck.finish())
}

/// Conjugate from column sums `λ'_i = Σ_{t≥i} f_t`, independent of
/// [`Partition::conjugate`].
fn conjugate_by_columns(p: &Partition) -> Partition {
    let cols: Vec<u32> = (1..=p.largest_part())
        .map(|i| p.frequencies().iter().filter(|&&(v, _)| v >= i).map(|&(_, f)| f).sum())
        .collect();
    Partition::from_parts(&cols).expect("column sums are positive")
}

fn largest_frequency(p: &Partition) -> u32 {
    p.frequencies().first().map_or(u32::MAX, |&(_, f)| f)
}

fn conj_gap_bijection(cx: &Ctx) -> Result<Outcome> {
    let mut ck = Checker::new();
    for n in 1..=cx.max_n {
        let all: Vec<Partition> = partitions(n).collect();
        let bad = all.iter().filter(|p| conjugate_by_columns(p) != p.conjugate()).count() as u64;
        ck.compare(At::n(n).step("frequency-form"), bad, 0u64, || {
            (Side::filter(|p| conjugate_by_columns(p) != p.conjugate()), Side::Series)
        });
        for &r in &cx.rs {
            let js = cx.js_or(0..=n);
            for j in js {
                let gaps = move |p: &Partition| p.max_successive_gap() < r && largest_frequency(p) > j;
                let freqs = move |p: &Partition| p.max_frequency() < r && p.smallest_part() > j;
                let a = all.iter().filter(|p| gaps(p)).count() as u64;
                let b = all.iter().filter(|p| freqs(p)).count() as u64;
                let image = all.iter().filter(|p| gaps(p) && freqs(&p.conjugate())).count() as u64;
                let at = At::n(n).r(r).j(j);
                ck.compare(at.step("count"), a, b, move || (Side::filter(gaps), Side::filter(freqs)));
                ck.compare(at.step("image"), image, a, move || {
                    (Side::filter(move |p| gaps(p) && freqs(&p.conjugate())), Side::filter(gaps))
                });
            }
        }
    }
    Ok(ck.finish())
}

fn fk_sum(cx: &Ctx) -> Result<Outcome> {
    let degree = cx.max_n;
    let js = cx.js_or(0..=5);
    let mut ck = Checker::new();
    for &r in &cx.rs {
        let gap_spec = ConstraintSpec::new().max_successive_gap(r - 1);
        // hist[n][f]: gap-bounded partitions of n whose largest part occurs f times.
        let hist: Vec<Vec<u64>> = (0..=degree)
            .map(|n| {
                let mut h = vec![0u64; n as usize + 2];
                for p in partitions_constrained(n, &gap_spec).expect("valid constraint") {
                    h[largest_frequency(&p).min(n + 1) as usize] += 1;
                }
                h
            })
            .collect();
        for &j in &js {
            let product = cx.builders.bounded_frequency_product(j as usize, r as usize, degree as usize)?;
            for n in 0..=degree {
                // The empty partition is the k = 0 term for every j.
                let lhs: u64 = if n == 0 { 1 } else { hist[n as usize].iter().skip(j as usize + 1).sum() };
                let at = At::n(n).r(r).j(j);
                let gaps = move |p: &Partition| p.max_successive_gap() < r && largest_frequency(p) > j;
                ck.compare(at.step("product"), lhs, product.coeff(n as usize).clone(), move || {
                    (Side::filter(gaps), Side::Series)
                });
                let bounded = ConstraintSpec::new().max_frequency(r - 1).min_part(j + 1);
                ck.compare(at.step("conjugate-side"), lhs, count(n, &bounded), move || {
                    (Side::filter(gaps), Side::Constrained(bounded))
                });
            }
        }
    }
    Ok(ck.finish())
}

const INNER_SUM_MAX_M: u32 = 10;

fn inner_sum_collapse(cx: &Ctx) -> Result<Outcome> {
    let order = cx.order;
    let mut ck = Checker::new();
    for &r in &cx.rs {
        let s = r as usize + 1;
        for m in 1..=INNER_SUM_MAX_M {
            let mut lhs = TruncatedSeries::zero(order);
            for j in 0..m as usize {
                let term = cx.builders.pochhammer_fin_inv(s, s, j, order).shift(j * s);
                lhs = &lhs + &term;
            }
            let rhs = cx.builders.pochhammer_fin_inv(s, s, m as usize - 1, order);
            ck.compare_series(&lhs, &rhs, |n| At::n(n).r(r).m(m));
        }
    }
    Ok(ck.finish())
}

fn lemma_refine(cx: &Ctx) -> Result<Outcome> {
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        for &r in &cx.rs {
            let c = refine_census(n, r)?;
            let keys: BTreeSet<Vec<u32>> = c
                .by_chain_mex
                .cells()
                .chain(c.by_largest_repeating.cells())
                .map(|(k, _)| k.to_vec())
                .collect();
            for key in keys.into_iter().filter(|k| cx.wants_j(k[0])) {
                let (j, k) = (key[0], key[1]);
                ck.compare(
                    At::n(n).r(r).j(j).m(k),
                    c.by_chain_mex.get(&key),
                    c.by_largest_repeating.get(&key),
                    census_sides(c.by_chain_mex.statistic, key.clone(), c.by_largest_repeating.statistic, key.clone()),
                );
            }
        }
    }
    Ok(ck.finish())
}

fn interm1(cx: &Ctx) -> Result<Outcome> {
    let order = cx.max_n as usize;
    let mut ck = Checker::new();
    for &r in &cx.rs {
        let js = cx.js_or(0..=cx.max_n);
        let series: Vec<BivariateSeries> = js
            .iter()
            .map(|&j| cx.builders.interm1(j as usize, r as usize, order))
            .collect::<Result<_>>()?;
        for n in 0..=cx.max_n {
            // Cell (j, m + 1): largest (r+1)-repeating part j, m parts above j.
            let t = tabulate(n, &[Statistic::LargestRepeatingWithTail(r + 1)]).remove(0);
            for (i, &j) in js.iter().enumerate() {
                let stat = Statistic::PartsAboveLargestRepeating { s: r + 1, j };
                for m in 0..=n {
                    ck.compare(
                        At::n(n).r(r).j(j).m(m),
                        series[i].coeff(n as usize, m as usize),
                        t.get(&[j, m + 1]),
                        series_side(stat, vec![m]),
                    );
                }
            }
        }
    }
    Ok(ck.finish())
}

fn diff_w(cx: &Ctx) -> Result<Outcome> {
    let order = cx.max_n as usize;
    let mut ck = Checker::new();
    for &r in &cx.rs {
        let js: Vec<u32> = (0..=cx.max_n).collect();
        let mut derivative = Vec::new();
        let mut bivariate = Vec::new();
        for &j in &js {
            derivative.push(cx.builders.interm1_derivative(j as usize, r as usize, order)?.1);
            bivariate.push(cx.builders.interm1(j as usize, r as usize, order)?.w_derivative_at_1());
        }
        let sigma = (0..=cx.max_n)
            .map(|n| sigma_chain_mex_many(n, &[r]).map(|v| v[0]))
            .collect::<Result<Vec<_>>>()?;
        for n in 0..=cx.max_n {
            let t = tabulate(
                n,
                &[Statistic::LargestRepeatingWithTail(r + 1), Statistic::PartsAboveChainMexWithMex(r)],
            );
            let (rep, chain) = (&t[0], &t[1]);
            let mut total = 0u64;
            for &j in js.iter().filter(|&&j| j <= n) {
                let at = At::n(n).r(r).j(j);
                let d = n as usize;
                let weighted: u64 = rep.cells().filter(|(k, _)| k[0] == j).map(|(k, v)| u64::from(k[1] - 1) * v).sum();
                let q_count: u64 = rep.cells().filter(|(k, _)| k[0] == j).map(|(_, v)| v).sum();
                let mex_sum: u64 = chain.cells().filter(|(k, _)| k[0] == j).map(|(k, v)| u64::from(k[1]) * v).sum();
                total += weighted;
                if !cx.wants_j(j) {
                    continue;
                }
                ck.compare(at.step("derivative"), derivative[j as usize].coeff(d).clone(), weighted, || {
                    (Side::Series, Side::Census(Statistic::LargestRepeating(r + 1), vec![j]))
                });
                ck.compare(
                    at.step("bivariate"),
                    bivariate[j as usize].coeff(d).clone(),
                    derivative[j as usize].coeff(d).clone(),
                    || (Side::Series, Side::Series),
                );
                ck.compare(
                    at.step("chain-mex-block"),
                    BigInt::from(mex_sum) - BigInt::from(q_count),
                    weighted,
                    || {
                        (
                            Side::Census(Statistic::PartsAboveChainMex(r), vec![j]),
                            Side::Census(Statistic::LargestRepeating(r + 1), vec![j]),
                        )
                    },
                );
            }
            let p = rep.total();
            ck.compare(
                At::n(n).r(r).step("sum-over-j"),
                BigInt::from(total),
                BigInt::from(sigma[n as usize]) - BigInt::from(p),
                || (Side::Series, Side::Series),
            );
        }
    }
    Ok(ck.finish())
}

fn gfn_derivation(cx: &Ctx) -> Result<Outcome> {
    let order = cx.order;
    let b = cx.builders;
    let mut ck = Checker::new();
    for &r in &cx.rs {
        let s = r as usize + 1;
        let partition = b.partition_gf(order);
        let regular = &pochhammer_inf(s, s, order) * &partition;
        let inv_s = b.pochhammer_inv_inf(s, s, order);
        let one = TruncatedSeries::one(order);

        let mut j_sum = TruncatedSeries::zero(order);
        for j in 0..=order / s {
            j_sum = &j_sum + &b.interm1_derivative(j, r as usize, order)?.1;
        }
        let mut residue_sum = TruncatedSeries::zero(order);
        for m in 1..=r as usize {
            residue_sum = &residue_sum + &b.pochhammer_inv_inf(m, s, order);
        }
        let pre_final = &regular * &(&residue_sum - &inv_s.scale(&BigInt::from(r)));
        ck.compare_series(&j_sum, &pre_final, |n| At::n(n).r(r).step("pre-final"));
        let final_form = &partition + &j_sum;
        ck.compare_series(&final_form, &b.sigma_rc_mex_rhs(r as usize, order)?, |n| {
            At::n(n).r(r).step("final")
        });

        // Both sums of the last stretch, with 1/(q^s;q^s)_m built incrementally.
        let mut inv_prev = one.clone();
        let mut first = TruncatedSeries::zero(order);
        let mut second = TruncatedSeries::zero(order);
        for m in 1..=order {
            let mut lambert = inv_prev.shift(m);
            lambert.div_one_minus_q_pow(m);
            first = &first + &lambert;
            let mut inv_m = inv_prev.clone();
            if m * s <= order {
                inv_m.div_one_minus_q_pow(m * s);
                second.add_shifted(&inv_m, m * s, s as i64);
            }
            inv_prev = inv_m;
        }
        let first_closed = &(&residue_sum + &inv_s) - &one.scale(&BigInt::from(s));
        ck.compare_series(&first, &first_closed, |n| At::n(n).r(r).step("first-sum"));
        let second_closed = (&inv_s - &one).scale(&BigInt::from(s));
        ck.compare_series(&second, &second_closed, |n| At::n(n).r(r).step("second-sum"));
        let stretch = &regular * &(&first - &second);
        ck.compare_series(&stretch, &j_sum, |n| At::n(n).r(r).step("final-stretch"));
    }
    Ok(ck.finish())
}

fn gfn_sigma_rc_mex(cx: &Ctx) -> Result<Outcome> {
    let order = cx.max_n as usize;
    let series = cx
        .rs
        .iter()
        .map(|&r| cx.builders.sigma_rc_mex_rhs(r as usize, order))
        .collect::<Result<Vec<_>>>()?;
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        let brute = sigma_chain_mex_many(n, &cx.rs)?;
        for (i, &r) in cx.rs.iter().enumerate() {
            ck.compare(At::n(n).r(r), brute[i], series[i].coeff(n as usize).clone(), || {
                (Side::Series, Side::Series)
            });
        }
    }
    Ok(ck.finish())
}

fn gfn_sigma_mex(cx: &Ctx) -> Result<Outcome> {
    let order = cx.order;
    let b = cx.builders;
    let closed = b.sigma_rc_mex_rhs(1, order)?;
    let mut ck = Checker::new();
    ck.compare_series(&closed, &b.sigma_mex(order), |n| At::n(n).step("distinct-square"));
    ck.compare_series(&b.sigma_mex(order), &b.sigma_mex_odd_form(order), |n| At::n(n).step("odd-square"));
    ck.compare_series(&b.distinct_parts_gf(order), &b.pochhammer_inv_inf(1, 2, order), |n| {
        At::n(n).step("euler")
    });
    Ok(ck.finish())
}

fn cor_two_color(cx: &Ctx) -> Result<Outcome> {
    let order = cx.max_n as usize;
    let mut ck = Checker::new();
    let terms = cx
        .rs
        .iter()
        .map(|&r| (1..=r as usize).map(|m| cx.builders.corollary_term(r as usize, m, order)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    for n in 0..=cx.max_n {
        let brute = sigma_chain_mex_many(n, &cx.rs)?;
        let p = partitions(n).count() as i64;
        for (i, &r) in cx.rs.iter().enumerate() {
            let mut rhs = BigInt::from(-(i64::from(r) - 1) * p);
            for m in 1..=r {
                let colored = count_colored(n, &ColoredSpec::regular_two_colored(r + 1, m))?;
                rhs += colored;
                ck.compare(
                    At::n(n).r(r).m(m).step("term"),
                    terms[i][m as usize - 1].coeff(n as usize).clone(),
                    colored,
                    || (Side::Series, Side::Series),
                );
            }
            ck.compare(At::n(n).r(r).step("identity"), brute[i], rhs, || (Side::Series, Side::Series));
        }
    }
    Ok(ck.finish())
}

fn sigma_mex_d2(cx: &Ctx) -> Result<Outcome> {
    let mut ck = Checker::new();
    let odd_colored = ColoredSpec::regular_two_colored(2, 1);
    for n in 0..=cx.max_n {
        let sigma = sigma_chain_mex_many(n, &[1])?[0];
        let d2 = count_two_colored_distinct(n);
        ck.compare(At::n(n).step("distinct"), sigma, d2, || (Side::Series, Side::Series));
        ck.compare(At::n(n).step("odd"), d2, count_colored(n, &odd_colored)?, || {
            (Side::Series, Side::Series)
        });
    }
    Ok(ck.finish())
}

/// Readings of the chain-maex identity reported when some `r >= 3`.
pub const CHAIN_MAEX_READINGS: [(MaexDomain, BelowOne); 4] = [
    (MaexDomain::Exists, BelowOne::Missing),
    (MaexDomain::Exists, BelowOne::Occupied),
    (MaexDomain::NonGapFree, BelowOne::Missing),
    (MaexDomain::NonGapFree, BelowOne::Occupied),
];

pub fn chain_maex_reading_name(domain: MaexDomain, below: BelowOne) -> String {
    let d = match domain {
        MaexDomain::Exists => "maex-exists",
        MaexDomain::NonGapFree => "non-gap-free",
    };
    let b = match below {
        BelowOne::Missing => "nonpositive-missing",
        BelowOne::Occupied => "zero-occupied",
    };
    format!("{d}/{b}")
}

fn chain_maex_reading(cx: &Ctx, domain: MaexDomain, below: BelowOne) -> Result<Outcome> {
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        for &r in &cx.rs {
            let c = chain_maex_census(n, r, domain, below)?;
            for j in (1..=n).filter(|&j| cx.wants_j(j)) {
                ck.compare(
                    At::n(n).r(r).j(j),
                    c.parts_above_chain_maex.get(&[j]),
                    c.smallest_repeating.get(&[j]),
                    census_sides(
                        c.parts_above_chain_maex.statistic,
                        vec![j],
                        c.smallest_repeating.statistic,
                        vec![j],
                    ),
                );
            }
        }
    }
    Ok(ck.finish())
}

fn thm_chain_maex(cx: &Ctx) -> Result<Outcome> {
    if cx.rs.iter().all(|&r| r == 2) {
        return chain_maex_reading(cx, MaexDomain::Exists, BelowOne::Missing);
    }
    let variants = CHAIN_MAEX_READINGS
        .iter()
        .map(|&(d, b)| Ok(chain_maex_reading(cx, d, b)?.into_variant(chain_maex_reading_name(d, b))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::any_of(variants))
}

/// Whether `n = j(3j ± 1)` for some `j >= 0`.
pub fn is_twice_pentagonal(n: u64) -> bool {
    (0u64..)
        .map(|j| (j * (3 * j).saturating_sub(1), j * (3 * j + 1)))
        .take_while(|&(lo, _)| lo <= n)
        .any(|(lo, hi)| lo == n || hi == n)
}

fn parity_sigma_mex(cx: &Ctx) -> Result<Outcome> {
    let series = cx.builders.sigma_mex(cx.order);
    let mut ck = Checker::new();
    for n in 0..=cx.order {
        let odd = series.coeff(n).is_odd();
        ck.compare(At::n(n as u32), u8::from(odd), u8::from(is_twice_pentagonal(n as u64)), || {
            (Side::Series, Side::Series)
        });
    }
    Ok(ck.finish())
}

fn qbinom_a0(cx: &Ctx) -> Result<Outcome> {
    let mut ck = Checker::new();
    for &z in &cx.rs {
        let lhs = cx.builders.q_binomial_a0_sum(z as usize, cx.order);
        let rhs = cx.builders.pochhammer_inv_inf(z as usize, 1, cx.order);
        ck.compare_series(&lhs, &rhs, |n| At::n(n).r(z));
    }
    Ok(ck.finish())
}

/// Coefficient of `q^n` in `(q;q)_∞` by the pentagonal number theorem.
fn pentagonal_coefficient(n: u64) -> i64 {
    for k in 0u64.. {
        let (lo, hi) = (k * (3 * k).saturating_sub(1) / 2, k * (3 * k + 1) / 2);
        if lo > n {
            break;
        }
        if lo == n || hi == n {
            return if k % 2 == 0 { 1 } else { -1 };
        }
    }
    0
}

fn gf_vs_census_suite(cx: &Ctx) -> Result<Outcome> {
    let order = cx.max_n as usize;
    let b = cx.builders;
    let p = b.partition_gf(order);
    let product = b.pochhammer_inv_inf(1, 1, order);
    let euler = b.euler_product(order);
    let distinct = b.distinct_parts_gf(order);
    let mut ck = Checker::new();
    for n in 0..=cx.max_n {
        let d = n as usize;
        let count_all = partitions(n).count() as u64;
        let at = At::n(n);
        ck.compare(at.step("partitions"), p.coeff(d).clone(), count_all, || (Side::Series, Side::Series));
        ck.compare(at.step("product"), product.coeff(d).clone(), count_all, || {
            (Side::Series, Side::Series)
        });
        ck.compare(at.step("pentagonal"), euler.coeff(d).clone(), pentagonal_coefficient(n.into()), || {
            (Side::Series, Side::Series)
        });
        ck.compare(
            at.step("distinct"),
            distinct.coeff(d).clone(),
            count(n, &ConstraintSpec::new().distinct()),
            || (Side::Series, Side::Constrained(ConstraintSpec::new().distinct())),
        );
    }
    for &r in &cx.rs {
        let ru = r as usize;
        let multiples = b.multiples_bivariate(ru, order)?;
        let repeating = (0..=order)
            .map(|j| b.largest_repeating(ru, j, order))
            .collect::<Result<Vec<_>>>()?;
        let bounded = if r >= 2 {
            Some(b.bounded_frequency_product(0, ru, order)?)
        } else {
            None
        };
        for n in 0..=cx.max_n {
            let d = n as usize;
            let t = tabulate(n, &[Statistic::MultiplesOf(r), Statistic::LargestRepeating(r)]);
            for j in (0..=n).filter(|&j| cx.wants_j(j)) {
                let at = At::n(n).r(r).j(j);
                ck.compare(at.step("multiples"), multiples.coeff(d, j as usize), t[0].get(&[j]), {
                    series_side(t[0].statistic, vec![j])
                });
                ck.compare(
                    at.step("largest-repeating"),
                    repeating[j as usize].coeff(d).clone(),
                    t[1].get(&[j]),
                    series_side(t[1].statistic, vec![j]),
                );
            }
            if let Some(bounded) = &bounded {
                let spec = ConstraintSpec::new().max_frequency(r - 1);
                ck.compare(At::n(n).r(r).step("bounded"), bounded.coeff(d).clone(), count(n, &spec), || {
                    (Side::Series, Side::Constrained(spec))
                });
            }
        }
    }
    Ok(ck.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twice_pentagonal() {
        let hits: Vec<u64> = (0..=30).filter(|&n| is_twice_pentagonal(n)).collect();
        assert_eq!(hits, [0, 2, 4, 10, 14, 24, 30]);
    }

    #[test]
    fn pentagonal_signs() {
        let c: Vec<i64> = (0..=12).map(pentagonal_coefficient).collect();
        assert_eq!(c, [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn column_conjugate() {
        let p = Partition::from_parts(&[4u32, 3, 1]).unwrap();
        assert_eq!(conjugate_by_columns(&p).parts(), [3, 2, 2, 1]);
    }

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<_> = registry().iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), registry().len());
    }
}
