//! Exhaustive generation of partitions in descending lexicographic order.
//!
//! [`Partitions`] walks all of `𝒫(n)` with an O(1)-amortized successor rule
//! on the frequency table. [`Constrained`] is a pruned depth-first search
//! that only visits partitions meeting a [`ConstraintSpec`]. Colored counts
//! are computed by direct enumeration of colored multisets.

use crate::error::{invalid, Result};
use crate::partition::Partition;

/// Successor-rule enumerator over every partition of `n`.
#[derive(Clone, Debug)]
pub struct Partitions {
    // Current partition, decreasing values.
    state: Vec<(u32, u32)>,
    // Largest part that must be kept; iteration stops once it changes.
    pinned_largest: Option<u32>,
    done: bool,
}

/// All partitions of `n`, largest first in lexicographic order.
pub fn partitions(n: u32) -> Partitions {
    let state = if n == 0 { Vec::new() } else { vec![(n, 1)] };
    Partitions {
        state,
        pinned_largest: None,
        done: false,
    }
}

/// The partitions of `n` whose largest part is exactly `k`, in the same
/// order as [`partitions`]. Used to split censuses into independent strata.
pub fn partitions_with_largest_part(n: u32, k: u32) -> Partitions {
    if k == 0 || k > n {
        return Partitions {
            state: Vec::new(),
            pinned_largest: Some(k),
            done: !(n == 0 && k == 0),
        };
    }
    let mut state = vec![(k, (n / k).max(1))];
    let rest = n - k * state[0].1;
    if rest > 0 {
        state.push((rest, 1));
    }
    Partitions {
        state,
        pinned_largest: Some(k),
        done: false,
    }
}

impl Partitions {
    /// Moves to the next partition; returns false when exhausted.
    fn advance(&mut self) -> bool {
        let len = self.state.len();
        // Collect the ones, then break the smallest part above 1.
        let (ones, idx) = match self.state.last() {
            Some(&(1, m)) => (m, len.checked_sub(2)),
            Some(_) => (0, Some(len - 1)),
            None => (0, None),
        };
        let Some(idx) = idx else {
            return false;
        };
        if ones > 0 {
            self.state.pop();
        }
        let (v, m) = self.state[idx];
        if m == 1 {
            self.state.pop();
        } else {
            self.state[idx].1 = m - 1;
        }
        let mut rest = v + ones;
        let w = v - 1;
        let q = rest / w;
        self.state.push((w, q));
        rest -= q * w;
        if rest > 0 {
            self.state.push((rest, 1));
        }
        if let Some(k) = self.pinned_largest {
            if self.state[0].0 != k {
                return false;
            }
        }
        true
    }

    /// Calls `f` on every remaining partition without allocating one per item.
    pub fn visit<F: FnMut(&Partition)>(mut self, mut f: F) {
        if self.done {
            return;
        }
        let mut scratch = Partition::from_freq_unchecked(std::mem::take(&mut self.state));
        loop {
            f(&scratch);
            self.state = scratch.into_freq();
            if !self.advance() {
                return;
            }
            scratch = Partition::from_freq_unchecked(std::mem::take(&mut self.state));
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_freq_unchecked(self.state.clone());
        if !self.advance() {
            self.done = true;
        }
        Some(current)
    }
}

/// Residues excluded modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenResidues {
    pub modulus: u32,
    pub residues: Vec<u32>,
}

/// Conjunctive restrictions on the partitions to enumerate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSpec {
    /// Every value occurs at most this many times.
    pub max_frequency: Option<u32>,
    pub forbidden_residues: Option<ForbiddenResidues>,
    pub distinct: bool,
    pub exact_largest_part: Option<u32>,
    /// Successive distinct values differ by at most `g`, and the smallest
    /// part is at most `g` (a virtual part 0 sits below it).
    pub max_successive_gap: Option<u32>,
    pub min_part: Option<u32>,
}

impl ConstraintSpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Partitions with no part divisible by `m`.
    pub fn regular(m: u32) -> Self {
        Self::new().forbid_residues(m, &[0])
    }

    pub fn max_frequency(mut self, r: u32) -> Self {
        self.max_frequency = Some(r);
        self
    }

    pub fn forbid_residues(mut self, modulus: u32, residues: &[u32]) -> Self {
        self.forbidden_residues = Some(ForbiddenResidues {
            modulus,
            residues: residues.to_vec(),
        });
        self
    }

    pub fn distinct(mut self) -> Self {
        self.distinct = true;
        self
    }

    pub fn exact_largest_part(mut self, k: u32) -> Self {
        self.exact_largest_part = Some(k);
        self
    }

    pub fn max_successive_gap(mut self, g: u32) -> Self {
        self.max_successive_gap = Some(g);
        self
    }

    pub fn min_part(mut self, m: u32) -> Self {
        self.min_part = Some(m);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("max_frequency", self.max_frequency),
            ("exact_largest_part", self.exact_largest_part),
            ("max_successive_gap", self.max_successive_gap),
            ("min_part", self.min_part),
            ("modulus", self.forbidden_residues.as_ref().map(|f| f.modulus)),
        ];
        for (name, value) in positive {
            if value == Some(0) {
                return Err(invalid(name, 0, "bound must be at least 1"));
            }
        }
        Ok(())
    }

    /// Whether `p` satisfies every constraint.
    pub fn accepts(&self, p: &Partition) -> bool {
        let freq = p.frequencies();
        if let Some(r) = self.max_frequency {
            if p.max_frequency() > r {
                return false;
            }
        }
        if self.distinct && p.max_frequency() > 1 {
            return false;
        }
        if freq.iter().any(|&(v, _)| !self.value_allowed(v)) {
            return false;
        }
        if let Some(k) = self.exact_largest_part {
            if p.largest_part() != k {
                return false;
            }
        }
        if let Some(g) = self.max_successive_gap {
            if p.max_successive_gap() > g {
                return false;
            }
        }
        true
    }

    fn value_allowed(&self, v: u32) -> bool {
        if let Some(lo) = self.min_part {
            if v < lo {
                return false;
            }
        }
        match &self.forbidden_residues {
            Some(f) => !f.residues.contains(&(v % f.modulus)),
            None => true,
        }
    }

    fn multiplicity_cap(&self) -> u32 {
        let mut cap = self.max_frequency.unwrap_or(u32::MAX);
        if self.distinct {
            cap = cap.min(1);
        }
        cap
    }
}

#[derive(Clone, Copy, Debug)]
struct Level {
    value: u32,
    mult: u32,
    // Weight still to be placed before this level's choice.
    rem: u32,
}

/// Depth-first enumerator for the partitions meeting a [`ConstraintSpec`].
#[derive(Clone, Debug)]
pub struct Constrained {
    n: u32,
    spec: ConstraintSpec,
    cap: u32,
    stack: Vec<Level>,
    started: bool,
    done: bool,
}

pub fn partitions_constrained(n: u32, spec: &ConstraintSpec) -> Result<Constrained> {
    spec.validate()?;
    Ok(Constrained {
        n,
        cap: spec.multiplicity_cap(),
        spec: spec.clone(),
        stack: Vec::new(),
        started: false,
        done: false,
    })
}

impl Constrained {
    /// Largest admissible `(value, mult)` with value `<= start` placed below `prev`.
    fn choose(&self, rem: u32, prev: Option<u32>, start: u32) -> Option<(u32, u32)> {
        let mut lo = self.spec.min_part.unwrap_or(1).max(1);
        if let (Some(g), Some(p)) = (self.spec.max_successive_gap, prev) {
            lo = lo.max(p.saturating_sub(g));
        }
        let mut hi = start.min(rem);
        if let Some(p) = prev {
            hi = hi.min(p.saturating_sub(1));
        } else if let Some(k) = self.spec.exact_largest_part {
            if k > hi {
                return None;
            }
            hi = k;
            lo = lo.max(k);
        }
        let mut v = hi;
        while v >= lo && v > 0 {
            if self.spec.value_allowed(v) {
                let m = (rem / v).min(self.cap);
                if m >= 1 {
                    return Some((v, m));
                }
            }
            v -= 1;
        }
        None
    }

    fn prev_value(&self, depth: usize) -> Option<u32> {
        depth.checked_sub(1).map(|d| self.stack[d].value)
    }

    fn terminal_ok(&self) -> bool {
        match self.stack.last() {
            None => self.spec.exact_largest_part.is_none(),
            Some(top) => self.spec.max_successive_gap.is_none_or(|g| top.value <= g),
        }
    }

    /// Replaces the deepest choice by its next alternative, popping exhausted
    /// levels. Returns false when the search is over.
    fn backtrack(&mut self) -> bool {
        while let Some(top) = self.stack.last().copied() {
            let depth = self.stack.len() - 1;
            if top.mult > 1 {
                self.stack[depth].mult -= 1;
                return true;
            }
            let prev = self.prev_value(depth);
            if let Some((v, m)) = top.value.checked_sub(1).and_then(|s| self.choose(top.rem, prev, s)) {
                self.stack[depth] = Level { value: v, mult: m, rem: top.rem };
                return true;
            }
            self.stack.pop();
        }
        false
    }

    fn current(&self) -> Partition {
        Partition::from_freq_unchecked(self.stack.iter().map(|l| (l.value, l.mult)).collect())
    }
}

impl Iterator for Constrained {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let mut need_backtrack = self.started;
        self.started = true;
        loop {
            if need_backtrack && !self.backtrack() {
                self.done = true;
                return None;
            }
            need_backtrack = true;
            // Extend greedily until the weight is used up or no part fits.
            loop {
                let rem = match self.stack.last() {
                    Some(l) => l.rem - l.value * l.mult,
                    None => self.n,
                };
                if rem == 0 {
                    if self.terminal_ok() {
                        let p = self.current();
                        if self.stack.is_empty() {
                            self.done = true;
                        }
                        return Some(p);
                    }
                    break;
                }
                let prev = self.stack.last().map(|l| l.value);
                match self.choose(rem, prev, rem) {
                    Some((v, m)) => self.stack.push(Level { value: v, mult: m, rem }),
                    None => break,
                }
            }
            if self.stack.is_empty() {
                self.done = true;
                return None;
            }
        }
    }
}

/// Parts with value `≡ j (mod m)` available in two colors on top of an
/// underlying value multiset that satisfies `base`.
///
/// A colored multiset is a pair `(A, B)` with `A` meeting `base` and `B`
/// using only values `≡ j (mod m)` (the second color). When `base` is
/// `m`-regular and `j < m` this is the usual two-coloring of the residue-`j`
/// parts of an `m`-regular partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredSpec {
    pub modulus: u32,
    pub residue: u32,
    pub base: ConstraintSpec,
}

impl ColoredSpec {
    /// `m`-regular partitions whose parts `≡ j (mod m)` come in two colors.
    pub fn regular_two_colored(m: u32, j: u32) -> Self {
        Self {
            modulus: m,
            residue: j,
            base: ConstraintSpec::regular(m),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.modulus == 0 {
            return Err(invalid("modulus", 0, "must be at least 1"));
        }
        if self.residue == 0 || self.residue > self.modulus {
            return Err(invalid("residue", self.residue, "must lie in [1, modulus]"));
        }
        self.base.validate()
    }

    /// Ways to split the underlying multiset `p` into the two colored halves.
    fn colorings(&self, p: &Partition) -> u64 {
        let target = self.residue % self.modulus;
        let mut ways = 1u64;
        for &(v, f) in p.frequencies() {
            let colored = v % self.modulus == target;
            let base_ok = self.base.value_allowed(v);
            let cap = self.base.multiplicity_cap();
            // Number of copies of `v` that may stay in the first color.
            let first = if base_ok { f.min(cap) } else { 0 };
            let choices = if colored {
                u64::from(first) + 1
            } else if base_ok && f <= cap {
                1
            } else {
                0
            };
            ways *= choices;
            if ways == 0 {
                return 0;
            }
        }
        ways
    }
}

/// Number of colored multisets of total weight `n`.
pub fn count_colored(n: u32, spec: &ColoredSpec) -> Result<u64> {
    spec.validate()?;
    if spec.base.exact_largest_part.is_some() || spec.base.max_successive_gap.is_some() {
        return Err(invalid(
            "base",
            0,
            "colored counts support only per-value base constraints",
        ));
    }
    let mut total = 0u64;
    partitions(n).visit(|p| total += spec.colorings(p));
    Ok(total)
}

/// Partitions of `n` into distinct parts with two colors: ordered pairs of
/// distinct-part partitions whose weights add up to `n`.
pub fn count_two_colored_distinct(n: u32) -> u64 {
    let mut total = 0u64;
    partitions(n).visit(|p| {
        let mut ways = 1u64;
        for &(_, f) in p.frequencies() {
            ways *= match f {
                1 => 2,
                2 => 1,
                _ => 0,
            };
        }
        total += ways;
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts_of(it: impl Iterator<Item = Partition>) -> Vec<Vec<u32>> {
        it.map(|p| p.parts()).collect()
    }

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(parts_of(partitions(3)), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(parts_of(partitions(0)), vec![Vec::<u32>::new()]);
        assert_eq!(partitions(1).count(), 1);
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn descending_lexicographic() {
        for n in 0..=15 {
            let all: Vec<Partition> = partitions(n).collect();
            assert!(all.windows(2).all(|w| w[0] > w[1]), "n = {n}");
            assert!(all.iter().all(|p| p.weight() == n));
        }
    }

    #[test]
    fn visit_matches_iterator() {
        let mut seen = Vec::new();
        partitions(12).visit(|p| seen.push(p.clone()));
        assert_eq!(seen, partitions(12).collect::<Vec<_>>());
        let mut zero = Vec::new();
        partitions(0).visit(|p| zero.push(p.clone()));
        assert_eq!(zero, vec![Partition::empty()]);
    }

    #[test]
    fn strata_by_largest_part() {
        for n in 0..=14 {
            let mut joined = Vec::new();
            for k in (0..=n).rev() {
                joined.extend(partitions_with_largest_part(n, k));
            }
            assert_eq!(joined, partitions(n).collect::<Vec<_>>(), "n = {n}");
        }
        assert_eq!(partitions_with_largest_part(5, 6).count(), 0);
        assert_eq!(partitions_with_largest_part(4, 0).count(), 0);
    }

    #[test]
    fn odd_and_distinct_parts_of_six() {
        let odd = partitions(6).filter(|p| p.iter_parts().all(|v| v % 2 == 1)).count();
        let distinct = partitions(6).filter(|p| p.max_frequency() <= 1).count();
        assert_eq!((odd, distinct), (4, 4));
    }

    #[test]
    fn constrained_examples() {
        let c = |n, s: ConstraintSpec| parts_of(partitions_constrained(n, &s).unwrap());
        assert_eq!(c(5, ConstraintSpec::regular(3)).len(), 5);
        assert_eq!(c(5, ConstraintSpec::new().max_frequency(2)).len(), 5);
        assert_eq!(c(4, ConstraintSpec::new().exact_largest_part(4)), vec![vec![4]]);
        assert_eq!(c(4, ConstraintSpec::new().distinct()), vec![vec![4], vec![3, 1]]);
        assert_eq!(c(0, ConstraintSpec::new()), vec![Vec::<u32>::new()]);
        assert!(c(0, ConstraintSpec::new().exact_largest_part(2)).is_empty());
        assert!(c(3, ConstraintSpec::regular(1)).is_empty());
        assert_eq!(
            c(6, ConstraintSpec::new().max_successive_gap(1)),
            vec![vec![3, 2, 1], vec![2, 2, 1, 1], vec![2, 1, 1, 1, 1], vec![1; 6]]
        );
    }

    #[test]
    fn constrained_rejects_zero_bounds() {
        assert!(partitions_constrained(3, &ConstraintSpec::new().max_frequency(0)).is_err());
        assert!(partitions_constrained(3, &ConstraintSpec::regular(0)).is_err());
    }

    #[test]
    fn colored_counts() {
        let s = |m, j| ColoredSpec::regular_two_colored(m, j);
        assert_eq!(count_colored(1, &s(3, 1)).unwrap(), 2);
        assert_eq!(count_colored(1, &s(3, 2)).unwrap(), 1);
        assert_eq!(count_colored(2, &s(3, 1)).unwrap(), 4);
        assert_eq!(count_colored(2, &s(3, 2)).unwrap(), 3);
        assert_eq!(count_colored(0, &s(3, 2)).unwrap(), 1);
        // Residue 0 under a regular base gives back p(n).
        assert_eq!(count_colored(6, &s(3, 3)).unwrap(), 11);
        assert!(count_colored(2, &s(3, 0)).is_err());
        assert!(count_colored(2, &s(3, 4)).is_err());
    }

    #[test]
    fn two_colored_distinct() {
        let d2: Vec<u64> = (0..=5).map(count_two_colored_distinct).collect();
        assert_eq!(d2, vec![1, 2, 3, 6, 9, 14]);
    }
}
