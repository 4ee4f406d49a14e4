//! Brute-force aggregate counts over all partitions of `n`.
//!
//! Every census is a single pass over [`partitions`](crate::enumerate::partitions)
//! extracting per-partition statistics. Passes are split by largest part and
//! run in parallel; the fold is a sum of counts so the result does not
//! depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::partitions_with_largest_part;
use crate::error::{invalid, Result};
use crate::partition::{BelowOne, Partition};

/// Which partitions enter a chain-maex census.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MaexDomain {
    /// Partitions whose chain maex exists.
    Exists,
    /// All non-gap-free partitions; an absent chain maex counts as 0, so
    /// every part exceeds it.
    NonGapFree,
}

/// A per-partition statistic used as a census key.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    /// `j`: parts divisible by `r`, with multiplicity.
    MultiplesOf(u32),
    /// `j`: largest part occurring at least `r` times, 0 if none.
    LargestRepeating(u32),
    /// `j >= 1`: smallest part occurring at least `r` times; partitions
    /// without one are outside the domain.
    SmallestRepeating(u32),
    /// `j`: parts greater than the `r`-chain mex.
    PartsAboveChainMex(u32),
    /// `(j, k)`: parts greater than the `r`-chain mex `k`, and `k`.
    PartsAboveChainMexWithMex(u32),
    /// `(j, k)`: largest `s`-repeating part `j`, and `k = 1 + #parts > j`.
    LargestRepeatingWithTail(u32),
    /// `m`: parts greater than `j` among the partitions whose largest
    /// `s`-repeating part is `j`.
    PartsAboveLargestRepeating { s: u32, j: u32 },
    /// `j`: distinct values divisible by `r`.
    DistinctMultiplesOf(u32),
    /// `j`: distinct values occurring at least `r` times.
    DistinctRepeating(u32),
    /// `j`: parts greater than the `t`-chain maex.
    PartsAboveChainMaex {
        t: u32,
        domain: MaexDomain,
        below: BelowOne,
    },
}

impl Statistic {
    pub fn axes(&self) -> &'static [&'static str] {
        match self {
            Statistic::PartsAboveChainMexWithMex(_) | Statistic::LargestRepeatingWithTail(_) => &["j", "k"],
            Statistic::PartsAboveLargestRepeating { .. } => &["m"],
            _ => &["j"],
        }
    }

    /// Writes the key of `p` into `out`; false when `p` is outside the domain.
    pub fn key_into(&self, p: &Partition, out: &mut Vec<u32>) -> bool {
        out.clear();
        match *self {
            Statistic::MultiplesOf(r) => out.push(p.multiples_of(r)),
            Statistic::LargestRepeating(r) => out.push(p.largest_repeating(r)),
            Statistic::SmallestRepeating(r) => {
                let j = p.smallest_repeating(r);
                if j == 0 {
                    return false;
                }
                out.push(j);
            }
            Statistic::PartsAboveChainMex(r) => out.push(p.parts_greater_than(p.chain_mex(r))),
            Statistic::PartsAboveChainMexWithMex(r) => {
                let k = p.chain_mex(r);
                out.extend([p.parts_greater_than(k), k]);
            }
            Statistic::LargestRepeatingWithTail(s) => {
                let j = p.largest_repeating(s);
                out.extend([j, 1 + p.parts_greater_than(j)]);
            }
            Statistic::PartsAboveLargestRepeating { s, j } => {
                if p.largest_repeating(s) != j {
                    return false;
                }
                out.push(p.parts_greater_than(j));
            }
            Statistic::DistinctMultiplesOf(r) => out.push(p.distinct_multiples_of(r)),
            Statistic::DistinctRepeating(r) => out.push(p.distinct_repeating(r)),
            Statistic::PartsAboveChainMaex { t, domain, below } => {
                let maex = p.chain_maex_with(t, below);
                let value = match domain {
                    MaexDomain::Exists => match maex {
                        Some(k) => k,
                        None => return false,
                    },
                    MaexDomain::NonGapFree => {
                        if p.is_gap_free() {
                            return false;
                        }
                        maex.unwrap_or(0)
                    }
                };
                out.push(p.parts_greater_than(value));
            }
        }
        true
    }

    pub fn key(&self, p: &Partition) -> Option<Vec<u32>> {
        let mut out = Vec::with_capacity(2);
        self.key_into(p, &mut out).then_some(out)
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::MultiplesOf(r) => write!(f, "multiples of {r}"),
            Statistic::LargestRepeating(r) => write!(f, "largest {r}-repeating part"),
            Statistic::SmallestRepeating(r) => write!(f, "smallest {r}-repeating part"),
            Statistic::PartsAboveChainMex(r) => write!(f, "parts > {r}-chain mex"),
            Statistic::PartsAboveChainMexWithMex(r) => write!(f, "parts > {r}-chain mex k, k"),
            Statistic::LargestRepeatingWithTail(s) => write!(f, "largest {s}-repeating part j, 1 + parts > j"),
            Statistic::PartsAboveLargestRepeating { s, j } => {
                write!(f, "parts > {j} with largest {s}-repeating part {j}")
            }
            Statistic::DistinctMultiplesOf(r) => write!(f, "different multiples of {r}"),
            Statistic::DistinctRepeating(r) => write!(f, "different parts occurring >= {r} times"),
            Statistic::PartsAboveChainMaex { t, domain, below } => {
                write!(f, "parts > {t}-chain maex ({domain:?}, below 1 {below:?})")
            }
        }
    }
}

/// Counts of the partitions of `n` by the value of one statistic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub statistic: Statistic,
    pub n: u32,
    cells: BTreeMap<Vec<u32>, u64>,
}

impl CountTable {
    fn new(statistic: Statistic, n: u32) -> Self {
        Self {
            statistic,
            n,
            cells: BTreeMap::new(),
        }
    }

    pub fn axes(&self) -> &'static [&'static str] {
        self.statistic.axes()
    }

    /// Count at `key` (0 for an empty cell).
    pub fn get(&self, key: &[u32]) -> u64 {
        self.cells.get(key).copied().unwrap_or(0)
    }

    /// Nonzero cells in key order.
    pub fn cells(&self) -> impl Iterator<Item = (&[u32], u64)> {
        self.cells.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    /// Sums out every axis except `axis`.
    pub fn marginal(&self, axis: usize) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for (k, &v) in &self.cells {
            *out.entry(k[axis]).or_insert(0) += v;
        }
        out
    }

    fn bump(&mut self, key: &[u32]) {
        match self.cells.get_mut(key) {
            Some(c) => *c += 1,
            None => {
                self.cells.insert(key.to_vec(), 1);
            }
        }
    }

    fn merge(&mut self, other: CountTable) {
        for (k, v) in other.cells {
            *self.cells.entry(k).or_insert(0) += v;
        }
    }
}

/// Folds `f` over every partition of `n`, one stratum per largest part,
/// then merges the strata with `merge`.
pub fn fold_partitions<T, I, F, M>(n: u32, init: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, &Partition) + Sync,
    M: Fn(T, T) -> T + Sync,
{
    (0..=n)
        .into_par_iter()
        .map(|k| {
            let mut acc = init();
            partitions_with_largest_part(n, k).visit(|p| fold(&mut acc, p));
            acc
        })
        .reduce(&init, &merge)
}

/// One table per statistic, in a single pass over `𝒫(n)`.
pub fn tabulate(n: u32, stats: &[Statistic]) -> Vec<CountTable> {
    fold_partitions(
        n,
        || stats.iter().map(|&s| CountTable::new(s, n)).collect::<Vec<_>>(),
        |tables, p| {
            let mut key = Vec::with_capacity(2);
            for t in tables.iter_mut() {
                if t.statistic.key_into(p, &mut key) {
                    t.bump(&key);
                }
            }
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                x.merge(y);
            }
            a
        },
    )
}

/// Partitions of `n` whose statistic equals `key`, in descending
/// lexicographic order, at most `limit` of them.
pub fn members(n: u32, stat: &Statistic, key: &[u32], limit: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    let mut buf = Vec::with_capacity(2);
    for k in (0..=n).rev() {
        for p in partitions_with_largest_part(n, k) {
            if stat.key_into(&p, &mut buf) && buf == key {
                out.push(p);
                if out.len() == limit {
                    return out;
                }
            }
        }
    }
    out
}

fn require(name: &'static str, value: u32, min: u32) -> Result<()> {
    if value < min {
        return Err(invalid(
            name,
            value,
            if min == 1 { "must be at least 1" } else { "must be at least 2" },
        ));
    }
    Ok(())
}

/// Three counts per `j` that all agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeWayCensus {
    pub r: u32,
    /// Exactly `j` multiples of `r`.
    pub multiples: CountTable,
    /// Largest `r`-repeating part `j`.
    pub largest_repeating: CountTable,
    /// `j` parts greater than the `(r−1)`-chain mex.
    pub parts_above_chain_mex: CountTable,
}

impl ThreeWayCensus {
    pub fn row(&self, j: u32) -> (u64, u64, u64) {
        (
            self.multiples.get(&[j]),
            self.largest_repeating.get(&[j]),
            self.parts_above_chain_mex.get(&[j]),
        )
    }

    pub fn statistics(&self) -> [Statistic; 3] {
        [
            self.parts_above_chain_mex.statistic,
            self.multiples.statistic,
            self.largest_repeating.statistic,
        ]
    }
}

pub fn three_way_census(n: u32, r: u32) -> Result<ThreeWayCensus> {
    require("r", r, 2)?;
    let mut t = tabulate(
        n,
        &[
            Statistic::MultiplesOf(r),
            Statistic::LargestRepeating(r),
            Statistic::PartsAboveChainMex(r - 1),
        ],
    )
    .into_iter();
    Ok(ThreeWayCensus {
        r,
        multiples: t.next().unwrap(),
        largest_repeating: t.next().unwrap(),
        parts_above_chain_mex: t.next().unwrap(),
    })
}

/// `Q_s^j(n, m)` over `m`: largest `s`-repeating part `j`, `m` parts above `j`.
pub fn q_bivariate_census(n: u32, s: u32, j: u32) -> Result<CountTable> {
    require("s", s, 1)?;
    Ok(tabulate(n, &[Statistic::PartsAboveLargestRepeating { s, j }]).remove(0))
}

/// Sum of the `r`-chain mex over `𝒫(n)`.
pub fn sigma_chain_mex(n: u32, r: u32) -> Result<u64> {
    Ok(sigma_chain_mex_many(n, &[r])?[0])
}

/// [`sigma_chain_mex`] for several chain lengths in one pass.
pub fn sigma_chain_mex_many(n: u32, rs: &[u32]) -> Result<Vec<u64>> {
    for &r in rs {
        require("r", r, 1)?;
    }
    Ok(fold_partitions(
        n,
        || vec![0u64; rs.len()],
        |acc, p| {
            for (a, &r) in acc.iter_mut().zip(rs) {
                *a += u64::from(p.chain_mex(r));
            }
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    ))
}

/// The two `(j, k)` tables that the conjugation bijection matches cellwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefineCensus {
    pub r: u32,
    /// `j` parts greater than the `r`-chain mex, which is `k`.
    pub by_chain_mex: CountTable,
    /// Largest `(r+1)`-repeating part `j` with `k − 1` parts greater than `j`.
    pub by_largest_repeating: CountTable,
}

pub fn refine_census(n: u32, r: u32) -> Result<RefineCensus> {
    require("r", r, 1)?;
    let mut t = tabulate(
        n,
        &[
            Statistic::PartsAboveChainMexWithMex(r),
            Statistic::LargestRepeatingWithTail(r + 1),
        ],
    )
    .into_iter();
    Ok(RefineCensus {
        r,
        by_chain_mex: t.next().unwrap(),
        by_largest_repeating: t.next().unwrap(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FranklinGlaisherCensus {
    pub r: u32,
    /// Exactly `j` different values divisible by `r`.
    pub distinct_multiples: CountTable,
    /// Exactly `j` different values occurring at least `r` times.
    pub distinct_repeating: CountTable,
    /// Partitions with no part divisible by `r`.
    pub regular: u64,
    /// Partitions with every value occurring fewer than `r` times.
    pub bounded_frequency: u64,
}

pub fn franklin_glaisher_census(n: u32, r: u32) -> Result<FranklinGlaisherCensus> {
    require("r", r, 2)?;
    let (tables, regular, bounded) = fold_partitions(
        n,
        || {
            (
                vec![
                    CountTable::new(Statistic::DistinctMultiplesOf(r), n),
                    CountTable::new(Statistic::DistinctRepeating(r), n),
                ],
                0u64,
                0u64,
            )
        },
        |(tables, regular, bounded), p| {
            let mut key = Vec::with_capacity(1);
            for t in tables.iter_mut() {
                t.statistic.key_into(p, &mut key);
                t.bump(&key);
            }
            if p.iter_parts().all(|v| v % r != 0) {
                *regular += 1;
            }
            if p.max_frequency() < r {
                *bounded += 1;
            }
        },
        |(mut ta, ra, ba), (tb, rb, bb)| {
            for (x, y) in ta.iter_mut().zip(tb) {
                x.merge(y);
            }
            (ta, ra + rb, ba + bb)
        },
    );
    let mut t = tables.into_iter();
    Ok(FranklinGlaisherCensus {
        r,
        distinct_multiples: t.next().unwrap(),
        distinct_repeating: t.next().unwrap(),
        regular,
        bounded_frequency: bounded,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMaexCensus {
    pub r: u32,
    pub domain: MaexDomain,
    pub below: BelowOne,
    /// `j` parts greater than the `(r−1)`-chain maex, over `domain`.
    pub parts_above_chain_maex: CountTable,
    /// Smallest `r`-repeating part `j >= 1`.
    pub smallest_repeating: CountTable,
}

pub fn chain_maex_census(n: u32, r: u32, domain: MaexDomain, below: BelowOne) -> Result<ChainMaexCensus> {
    require("r", r, 2)?;
    let mut t = tabulate(
        n,
        &[
            Statistic::PartsAboveChainMaex { t: r - 1, domain, below },
            Statistic::SmallestRepeating(r),
        ],
    )
    .into_iter();
    Ok(ChainMaexCensus {
        r,
        domain,
        below,
        parts_above_chain_maex: t.next().unwrap(),
        smallest_repeating: t.next().unwrap(),
    })
}

/// `α(n, j)` (parts above the mex) and `e(n, j)` (even parts).
pub fn alpha_census(n: u32) -> (CountTable, CountTable) {
    let mut t = tabulate(n, &[Statistic::PartsAboveChainMex(1), Statistic::MultiplesOf(2)]).into_iter();
    (t.next().unwrap(), t.next().unwrap())
}

/// Aggregates of a full statistics pass over `𝒫(n)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub partitions: u64,
    pub sum_mex: u64,
    pub sum_chain_mex: [u64; 4],
    pub maex_defined: u64,
    pub gap_free: u64,
    pub sum_largest_repeating: [u64; 3],
    pub sum_smallest_repeating: [u64; 3],
    pub sum_multiples: [u64; 3],
    pub self_conjugate: u64,
    pub sum_conjugate_largest: u64,
}

/// Extracts every per-partition statistic of the library for each
/// partition of `n`, including the conjugate.
pub fn full_scan(n: u32) -> ScanSummary {
    let add = |mut a: ScanSummary, b: ScanSummary| {
        a.partitions += b.partitions;
        a.sum_mex += b.sum_mex;
        for i in 0..4 {
            a.sum_chain_mex[i] += b.sum_chain_mex[i];
        }
        for i in 0..3 {
            a.sum_largest_repeating[i] += b.sum_largest_repeating[i];
            a.sum_smallest_repeating[i] += b.sum_smallest_repeating[i];
            a.sum_multiples[i] += b.sum_multiples[i];
        }
        a.maex_defined += b.maex_defined;
        a.gap_free += b.gap_free;
        a.self_conjugate += b.self_conjugate;
        a.sum_conjugate_largest += b.sum_conjugate_largest;
        a
    };
    fold_partitions(
        n,
        ScanSummary::default,
        |s, p| {
            s.partitions += 1;
            s.sum_mex += u64::from(p.mex());
            for r in 1..=4u32 {
                s.sum_chain_mex[r as usize - 1] += u64::from(p.chain_mex(r));
            }
            s.maex_defined += u64::from(p.maex().is_some());
            s.gap_free += u64::from(p.is_gap_free());
            for r in 1..=3u32 {
                let x = p.repeating_part_extrema(r);
                s.sum_largest_repeating[r as usize - 1] += u64::from(x.largest_r_repeating);
                s.sum_smallest_repeating[r as usize - 1] += u64::from(x.smallest_r_repeating);
                s.sum_multiples[r as usize - 1] += u64::from(p.part_counters(r + 1, 0).multiples_of_r);
            }
            let c = p.conjugate();
            s.self_conjugate += u64::from(&c == p);
            s.sum_conjugate_largest += u64::from(c.largest_part());
        },
        add,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::partitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    #[test]
    fn three_way_examples() {
        assert_eq!(three_way_census(7, 2).unwrap().row(2), (3, 3, 3));
        assert_eq!(three_way_census(7, 3).unwrap().row(1), (5, 5, 5));
        assert_eq!(three_way_census(6, 2).unwrap().row(0), (4, 4, 4));
        assert!(three_way_census(7, 1).is_err());
    }

    #[test]
    fn three_way_members_match_table() {
        let c = three_way_census(7, 2).unwrap();
        let [above, mult, rep] = c.statistics();
        let show = |s: &Statistic| -> Vec<String> {
            members(7, s, &[2], 10).iter().map(|p| p.to_string()).collect()
        };
        assert_eq!(show(&above), ["5+2", "4+3", "3+3+1"]);
        assert_eq!(show(&mult), ["4+2+1", "3+2+2", "2+2+1+1+1"]);
        assert_eq!(show(&rep), ["3+2+2", "2+2+2+1", "2+2+1+1+1"]);
    }

    #[test]
    fn q_bivariate_examples() {
        let t = q_bivariate_census(3, 2, 1).unwrap();
        assert_eq!(t.get(&[0]), 1);
        let total = q_bivariate_census(7, 3, 1).unwrap().total();
        assert_eq!(total, 5);
        let unrefined = tabulate(7, &[Statistic::LargestRepeating(3)]).remove(0).get(&[1]);
        assert_eq!(total, unrefined);
    }

    #[test]
    fn sigma_chain_mex_examples() {
        assert_eq!(sigma_chain_mex(3, 1).unwrap(), 6);
        assert_eq!(sigma_chain_mex(2, 2).unwrap(), 5);
        for r in 1..6 {
            assert_eq!(sigma_chain_mex(0, r).unwrap(), 1);
        }
        assert!(sigma_chain_mex(3, 0).is_err());
    }

    #[test]
    fn refine_tables_agree_small() {
        let c = refine_census(2, 1).unwrap();
        // (2): mex 1, one part above; (1,1): mex 2, none above.
        assert_eq!(c.by_chain_mex.get(&[1, 1]), 1);
        assert_eq!(c.by_chain_mex.get(&[0, 2]), 1);
        assert_eq!(c.by_chain_mex, RefineCensus { ..c.clone() }.by_chain_mex);
        let a: Vec<_> = c.by_chain_mex.cells().map(|(k, v)| (k.to_vec(), v)).collect();
        let b: Vec<_> = c.by_largest_repeating.cells().map(|(k, v)| (k.to_vec(), v)).collect();
        assert_eq!(a, b);
        for n in 0..=12 {
            for r in 1..=3 {
                let c = refine_census(n, r).unwrap();
                let a: Vec<_> = c.by_chain_mex.cells().map(|(k, v)| (k.to_vec(), v)).collect();
                let b: Vec<_> = c.by_largest_repeating.cells().map(|(k, v)| (k.to_vec(), v)).collect();
                assert_eq!(a, b, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn refine_marginals_reproduce_three_way() {
        let refine = refine_census(9, 2).unwrap();
        let three = three_way_census(9, 3).unwrap();
        for (j, v) in refine.by_chain_mex.marginal(0) {
            assert_eq!(v, three.parts_above_chain_mex.get(&[j]));
        }
        for (j, v) in refine.by_largest_repeating.marginal(0) {
            assert_eq!(v, three.largest_repeating.get(&[j]));
        }
    }

    #[test]
    fn franklin_glaisher_examples() {
        let c = franklin_glaisher_census(4, 2).unwrap();
        assert_eq!((c.distinct_multiples.get(&[1]), c.distinct_repeating.get(&[1])), (3, 3));
        let c = franklin_glaisher_census(5, 3).unwrap();
        assert_eq!((c.regular, c.bounded_frequency), (5, 5));
        let c = franklin_glaisher_census(6, 2).unwrap();
        assert_eq!(c.distinct_multiples.get(&[0]), 4);
        assert_eq!(c.distinct_repeating.get(&[0]), 4);
    }

    #[test]
    fn chain_maex_small() {
        for n in 0..=5 {
            let c = chain_maex_census(n, 2, MaexDomain::Exists, BelowOne::Missing).unwrap();
            for j in 1..=n {
                assert_eq!(
                    c.parts_above_chain_maex.get(&[j]),
                    c.smallest_repeating.get(&[j]),
                    "n={n} j={j}"
                );
            }
            // Gap-free partitions never enter the r = 2 maex census.
            let gap_free = partitions(n).filter(|p| p.is_gap_free()).count() as u64;
            let total = partitions(n).count() as u64;
            assert_eq!(c.parts_above_chain_maex.total(), total - gap_free);
        }
    }

    #[test]
    fn statistic_keys() {
        let x = p(&[7, 4, 4, 4, 3, 1, 1]);
        assert_eq!(Statistic::PartsAboveChainMexWithMex(2).key(&x), Some(vec![1, 5]));
        assert_eq!(Statistic::LargestRepeatingWithTail(3).key(&x), Some(vec![4, 2]));
        assert_eq!(Statistic::SmallestRepeating(4).key(&x), None);
        let nogap = Statistic::PartsAboveChainMaex { t: 2, domain: MaexDomain::NonGapFree, below: BelowOne::Occupied };
        assert_eq!(nogap.key(&p(&[3, 1])), Some(vec![2]));
        assert_eq!(nogap.key(&p(&[2, 1])), None);
    }

    #[test]
    fn tables_partition_the_whole_set() {
        for n in 0..=15 {
            let total = partitions(n).count() as u64;
            let t = tabulate(
                n,
                &[
                    Statistic::LargestRepeating(3),
                    Statistic::PartsAboveChainMex(2),
                    Statistic::LargestRepeatingWithTail(2),
                ],
            );
            assert!(t.iter().all(|t| t.total() == total));
        }
    }

    #[test]
    fn full_scan_counts() {
        let s = full_scan(10);
        assert_eq!(s.partitions, 42);
        assert_eq!(s.sum_mex, s.sum_chain_mex[0]);
        assert_eq!(s.gap_free + s.maex_defined, 42);
        // Conjugation swaps largest part and number of parts.
        let parts: u64 = partitions(10).map(|p| u64::from(p.num_parts())).sum();
        assert_eq!(s.sum_conjugate_largest, parts);
    }
}
