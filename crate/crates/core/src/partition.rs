//! Canonical integer partitions and the per-partition statistics.
//!
//! A [`Partition`] is stored as its frequency table: a list of
//! `(value, multiplicity)` pairs with strictly decreasing values and
//! positive multiplicities. The nonincreasing list of parts is derived on
//! demand with [`Partition::parts`] or [`Partition::iter_parts`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{invalid, Error, Result};

/// An integer partition in frequency form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    // Strictly decreasing values, multiplicities >= 1.
    freq: Vec<(u32, u32)>,
    weight: u32,
}

/// How integers `<= 0` are treated by the chain maex windows.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BelowOne {
    /// Integers `<= 0` never occur, so a window may extend below 1.
    #[default]
    Missing,
    /// `0` behaves like an occurring part, so a window must stay inside `[1, ℓ)`.
    Occupied,
}

/// Largest part, smallest part and number of parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasicStatistics {
    pub largest_part: u32,
    pub smallest_part: u32,
    pub num_parts: u32,
}

/// Largest and smallest part values occurring at least `r` times (0 = none).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepeatingExtrema {
    pub largest_r_repeating: u32,
    pub smallest_r_repeating: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartCounters {
    /// Parts divisible by `r`, counted with multiplicity.
    pub multiples_of_r: u32,
    /// Parts strictly greater than `bound`, counted with multiplicity.
    pub parts_greater_than_bound: u32,
    pub is_gap_free: bool,
}

impl Partition {
    /// The partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds the canonical partition of a list of parts given in any order.
    pub fn from_parts<T: Copy + Into<i64>>(values: &[T]) -> Result<Self> {
        let mut parts = Vec::with_capacity(values.len());
        for &v in values {
            let v: i64 = v.into();
            if v <= 0 {
                return Err(Error::NonPositivePart(v));
            }
            let v = u32::try_from(v).map_err(|_| invalid("part", v, "part value too large"))?;
            parts.push(v);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut freq: Vec<(u32, u32)> = Vec::new();
        for v in parts {
            match freq.last_mut() {
                Some((last, m)) if *last == v => *m += 1,
                _ => freq.push((v, 1)),
            }
        }
        Ok(Self::from_freq_unchecked(freq))
    }

    /// Builds a partition from `(value, multiplicity)` pairs in any order.
    /// Pairs with multiplicity 0 are dropped and repeated values are merged.
    pub fn from_frequencies(pairs: &[(u32, u32)]) -> Result<Self> {
        let mut freq: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
        for &(v, m) in pairs {
            if v == 0 {
                return Err(Error::NonPositivePart(0));
            }
            if m > 0 {
                freq.push((v, m));
            }
        }
        freq.sort_unstable_by_key(|a| std::cmp::Reverse(a.0));
        freq.dedup_by(|next, kept| {
            if next.0 == kept.0 {
                kept.1 += next.1;
                true
            } else {
                false
            }
        });
        Ok(Self::from_freq_unchecked(freq))
    }

    /// `freq` must already be canonical.
    pub(crate) fn from_freq_unchecked(freq: Vec<(u32, u32)>) -> Self {
        debug_assert!(freq.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(freq.iter().all(|&(v, m)| v > 0 && m > 0));
        let weight = freq.iter().map(|&(v, m)| v * m).sum();
        Self { freq, weight }
    }

    pub(crate) fn into_freq(self) -> Vec<(u32, u32)> {
        self.freq
    }

    /// The integer being partitioned.
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_empty(&self) -> bool {
        self.freq.is_empty()
    }

    /// `(value, multiplicity)` pairs by decreasing value.
    pub fn frequencies(&self) -> &[(u32, u32)] {
        &self.freq
    }

    /// Parts in nonincreasing order.
    pub fn iter_parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.freq
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m as usize))
    }

    pub fn parts(&self) -> Vec<u32> {
        self.iter_parts().collect()
    }

    pub fn largest_part(&self) -> u32 {
        self.freq.first().map_or(0, |&(v, _)| v)
    }

    pub fn smallest_part(&self) -> u32 {
        self.freq.last().map_or(0, |&(v, _)| v)
    }

    pub fn num_parts(&self) -> u32 {
        self.freq.iter().map(|&(_, m)| m).sum()
    }

    pub fn num_distinct_parts(&self) -> u32 {
        self.freq.len() as u32
    }

    /// Multiplicity of `t` (0 if absent).
    pub fn frequency_of(&self, t: u32) -> u32 {
        self.freq
            .binary_search_by(|&(v, _)| t.cmp(&v))
            .map_or(0, |i| self.freq[i].1)
    }

    pub fn basic_statistics(&self) -> BasicStatistics {
        BasicStatistics {
            largest_part: self.largest_part(),
            smallest_part: self.smallest_part(),
            num_parts: self.num_parts(),
        }
    }

    /// Transpose of the Young diagram.
    ///
    /// With distinct values `v_1 > … > v_d` of multiplicities `m_1, …, m_d`,
    /// the conjugate has the part `m_1 + … + m_i` repeated `v_i − v_{i+1}`
    /// times (`v_{d+1} = 0`).
    pub fn conjugate(&self) -> Partition {
        let d = self.freq.len();
        let mut out = Vec::with_capacity(d);
        let mut prefix: Vec<u32> = Vec::with_capacity(d);
        let mut acc = 0;
        for &(_, m) in &self.freq {
            acc += m;
            prefix.push(acc);
        }
        for i in (0..d).rev() {
            let next_value = if i + 1 < d { self.freq[i + 1].0 } else { 0 };
            out.push((prefix[i], self.freq[i].0 - next_value));
        }
        Partition {
            freq: out,
            weight: self.weight,
        }
    }

    /// Least `k >= 1` such that none of `k, …, k + r − 1` is a part.
    /// `r = 1` is the ordinary mex.
    pub fn chain_mex(&self, r: u32) -> u32 {
        assert!(r >= 1, "chain length must be positive");
        let mut prev = 0;
        for &(v, _) in self.freq.iter().rev() {
            if v - prev > r {
                return prev + 1;
            }
            prev = v;
        }
        prev + 1
    }

    pub fn mex(&self) -> u32 {
        self.chain_mex(1)
    }

    /// Largest `k` with `1 <= k < ℓ` such that none of `k, k − 1, …, k − t + 1`
    /// is a part, treating integers `<= 0` as missing.
    pub fn chain_maex(&self, t: u32) -> Option<u32> {
        self.chain_maex_with(t, BelowOne::Missing)
    }

    pub fn chain_maex_with(&self, t: u32, below: BelowOne) -> Option<u32> {
        assert!(t >= 1, "chain length must be positive");
        for (i, &(v, _)) in self.freq.iter().enumerate() {
            match self.freq.get(i + 1) {
                Some(&(lower, _)) => {
                    if v - lower > t {
                        return Some(v - 1);
                    }
                }
                None => {
                    // Gap between the smallest part and everything below it.
                    let fits = match below {
                        BelowOne::Missing => v >= 2,
                        BelowOne::Occupied => v > t,
                    };
                    return fits.then(|| v - 1);
                }
            }
        }
        None
    }

    /// Maximal excludant: the largest missing value below the largest part.
    pub fn maex(&self) -> Option<u32> {
        self.chain_maex(1)
    }

    pub fn repeating_part_extrema(&self, r: u32) -> RepeatingExtrema {
        RepeatingExtrema {
            largest_r_repeating: self.largest_repeating(r),
            smallest_r_repeating: self.smallest_repeating(r),
        }
    }

    /// Largest value occurring at least `r` times, 0 if there is none.
    pub fn largest_repeating(&self, r: u32) -> u32 {
        self.freq
            .iter()
            .find(|&&(_, m)| m >= r)
            .map_or(0, |&(v, _)| v)
    }

    /// Smallest value occurring at least `r` times, 0 if there is none.
    pub fn smallest_repeating(&self, r: u32) -> u32 {
        self.freq
            .iter()
            .rev()
            .find(|&&(_, m)| m >= r)
            .map_or(0, |&(v, _)| v)
    }

    pub fn part_counters(&self, r: u32, bound: u32) -> PartCounters {
        PartCounters {
            multiples_of_r: self.multiples_of(r),
            parts_greater_than_bound: self.parts_greater_than(bound),
            is_gap_free: self.is_gap_free(),
        }
    }

    /// Parts divisible by `r`, with multiplicity.
    pub fn multiples_of(&self, r: u32) -> u32 {
        assert!(r >= 1, "modulus must be positive");
        self.freq
            .iter()
            .filter(|&&(v, _)| v % r == 0)
            .map(|&(_, m)| m)
            .sum()
    }

    /// Distinct values divisible by `r`.
    pub fn distinct_multiples_of(&self, r: u32) -> u32 {
        assert!(r >= 1, "modulus must be positive");
        self.freq.iter().filter(|&&(v, _)| v % r == 0).count() as u32
    }

    /// Distinct values occurring at least `r` times.
    pub fn distinct_repeating(&self, r: u32) -> u32 {
        self.freq.iter().filter(|&&(_, m)| m >= r).count() as u32
    }

    pub fn parts_greater_than(&self, bound: u32) -> u32 {
        self.freq
            .iter()
            .take_while(|&&(v, _)| v > bound)
            .map(|&(_, m)| m)
            .sum()
    }

    /// Smallest part 1 and every integer up to the largest part occurs.
    /// The empty partition is gap-free.
    pub fn is_gap_free(&self) -> bool {
        // Distinct values are strictly decreasing, so this holds iff they are ℓ, ℓ−1, …, 1.
        self.freq.len() as u32 == self.largest_part()
    }

    /// Largest difference between successive distinct values, with a
    /// virtual part 0 below the smallest one.
    pub fn max_successive_gap(&self) -> u32 {
        let mut gap = 0;
        for (i, &(v, _)) in self.freq.iter().enumerate() {
            let lower = self.freq.get(i + 1).map_or(0, |&(w, _)| w);
            gap = gap.max(v - lower);
        }
        gap
    }

    pub fn max_frequency(&self) -> u32 {
        self.freq.iter().map(|&(_, m)| m).max().unwrap_or(0)
    }
}

impl Ord for Partition {
    /// Lexicographic order of the nonincreasing parts lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter_parts().cmp(other.iter_parts())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// `7+4+4+4+3+1+1`; the empty partition prints as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let mut first = true;
        for p in self.iter_parts() {
            if !first {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    #[test]
    fn canonical_form_ignores_order() {
        assert_eq!(p(&[1, 4, 4, 3, 7, 1, 4]), p(&[7, 4, 4, 4, 3, 1, 1]));
        assert_eq!(p(&[1, 4, 4, 3, 7, 1, 4]).weight(), 24);
        assert_eq!(p(&[7, 4, 4, 4, 3, 1, 1]).parts(), vec![7, 4, 4, 4, 3, 1, 1]);
    }

    #[test]
    fn rejects_nonpositive_parts() {
        assert_eq!(Partition::from_parts(&[3i64, 0]), Err(Error::NonPositivePart(0)));
        assert_eq!(Partition::from_parts(&[-2i64]), Err(Error::NonPositivePart(-2)));
        assert!(Partition::from_frequencies(&[(0, 2)]).is_err());
    }

    #[test]
    fn empty_partition() {
        let e = Partition::from_parts::<u32>(&[]).unwrap();
        assert_eq!(e, Partition::empty());
        assert_eq!(e.weight(), 0);
        assert_eq!(
            e.basic_statistics(),
            BasicStatistics { largest_part: 0, smallest_part: 0, num_parts: 0 }
        );
        assert_eq!(e.frequency_of(5), 0);
        for r in 1..6 {
            assert_eq!(e.chain_mex(r), 1);
        }
        assert_eq!(e.maex(), None);
        assert!(e.is_gap_free());
        assert_eq!(e.conjugate(), e);
    }

    #[test]
    fn frequencies_merge() {
        let a = Partition::from_frequencies(&[(1, 2), (4, 3), (1, 0), (7, 1), (3, 1)]).unwrap();
        assert_eq!(a, p(&[7, 4, 4, 4, 3, 1, 1]));
    }

    #[test]
    fn basic_statistics_of_examples() {
        let a = p(&[7, 4, 4, 4, 3, 1, 1]);
        let s = a.basic_statistics();
        assert_eq!((s.largest_part, s.smallest_part, s.num_parts), (7, 1, 7));
        assert_eq!(a.frequency_of(4), 3);
        let b = p(&[2, 2, 1]);
        let s = b.basic_statistics();
        assert_eq!((s.largest_part, s.smallest_part, s.num_parts), (2, 1, 3));
        assert_eq!(b.frequency_of(2), 2);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
    }

    #[test]
    fn chain_mex_examples() {
        let a = p(&[7, 4, 4, 4, 3, 1, 1]);
        assert_eq!(a.chain_mex(1), 2);
        assert_eq!(a.chain_mex(2), 5);
        assert_eq!(a.chain_mex(3), 8);
        assert_eq!(a.chain_mex(9), 8);
        assert_eq!(p(&[2]).chain_mex(2), 3);
        assert_eq!(p(&[1, 1]).chain_mex(2), 2);
    }

    #[test]
    fn chain_maex_examples() {
        let a = p(&[5, 3, 1]);
        assert_eq!(a.chain_maex(1), Some(4));
        assert_eq!(a.chain_maex(2), None);
        assert_eq!(p(&[3]).chain_maex(2), Some(2));
        assert_eq!(p(&[3]).chain_maex_with(2, BelowOne::Occupied), Some(2));
        assert_eq!(p(&[2]).chain_maex(2), Some(1));
        assert_eq!(p(&[2]).chain_maex_with(2, BelowOne::Occupied), None);
        assert_eq!(p(&[3, 2, 1]).maex(), None);
        assert_eq!(p(&[1, 1]).maex(), None);
        assert_eq!(p(&[7, 6, 2]).chain_maex(3), Some(5));
        assert_eq!(p(&[7, 6, 2]).chain_maex(4), Some(1));
        assert_eq!(p(&[7, 6, 2]).chain_maex_with(4, BelowOne::Occupied), None);
    }

    #[test]
    fn repeating_extrema_examples() {
        let x = p(&[3, 2, 2]).repeating_part_extrema(2);
        assert_eq!((x.largest_r_repeating, x.smallest_r_repeating), (2, 2));
        assert_eq!(p(&[4, 1, 1, 1]).largest_repeating(3), 1);
        assert_eq!(p(&[6, 1]).repeating_part_extrema(2).largest_r_repeating, 0);
        assert_eq!(p(&[6, 1]).repeating_part_extrema(2).smallest_r_repeating, 0);
        assert_eq!(p(&[5, 5, 2, 2, 1]).smallest_repeating(2), 2);
        assert_eq!(p(&[5, 3]).largest_repeating(1), 5);
    }

    #[test]
    fn part_counter_examples() {
        assert_eq!(p(&[6, 1]).part_counters(3, 0).multiples_of_r, 1);
        assert_eq!(p(&[2, 2, 1, 1, 1]).part_counters(2, 0).multiples_of_r, 2);
        assert!(p(&[3, 2, 1]).is_gap_free());
        assert!(!p(&[5, 3, 1]).is_gap_free());
        assert!(!p(&[3, 2]).is_gap_free());
        let c = p(&[7, 4, 4, 4, 3, 1, 1]).part_counters(4, 2);
        assert_eq!(c, PartCounters { multiples_of_r: 3, parts_greater_than_bound: 5, is_gap_free: false });
        assert_eq!(p(&[6, 6, 3, 2]).distinct_multiples_of(3), 2);
        assert_eq!(p(&[6, 6, 3, 3, 3, 2]).distinct_repeating(2), 2);
    }

    #[test]
    fn gap_and_display() {
        assert_eq!(p(&[7, 4, 4, 4, 3, 1, 1]).max_successive_gap(), 3);
        assert_eq!(p(&[3]).max_successive_gap(), 3);
        assert_eq!(p(&[5, 2, 2]).to_string(), "5+2+2");
        assert_eq!(Partition::empty().to_string(), "∅");
    }

    #[test]
    fn ordering_is_lexicographic_on_parts() {
        assert!(p(&[3, 3, 1]) > p(&[3, 2, 2]));
        assert!(p(&[4, 1, 1, 1]) > p(&[3, 3, 1]));
        assert!(p(&[2, 2, 2, 1]) > p(&[2, 2, 1, 1, 1]));
    }
}
