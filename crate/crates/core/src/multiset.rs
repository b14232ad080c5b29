//! Duplicate-free enumeration of multiset arrangements and of the multisets
//! themselves (as nondecreasing tuples), with counting and unranking so that
//! searches can be partitioned into disjoint index ranges.

use alloc::vec::Vec;

/// Iterator over the distinct permutations of a multiset of `N` integers,
/// in lexicographic order. Repeated values are never yielded twice: the
/// classic next-permutation step skips duplicate arrangements by itself.
#[derive(Debug, Clone)]
pub struct DistinctPermutations<const N: usize> {
    buf: [i64; N],
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl<const N: usize> DistinctPermutations<N> {
    pub fn new(mut values: [i64; N]) -> Self {
        values.sort_unstable();
        DistinctPermutations {
            buf: values,
            state: State::Fresh,
        }
    }
}

impl<const N: usize> Iterator for DistinctPermutations<N> {
    type Item = [i64; N];

    fn next(&mut self) -> Option<[i64; N]> {
        match self.state {
            State::Fresh => {
                self.state = State::Running;
                Some(self.buf)
            }
            State::Running => {
                if next_permutation(&mut self.buf) {
                    Some(self.buf)
                } else {
                    self.state = State::Done;
                    None
                }
            }
            State::Done => None,
        }
    }
}

/// Advance `a` to its lexicographic successor; false when `a` was the last
/// (nonincreasing) arrangement.
fn next_permutation(a: &mut [i64]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let pivot = i - 1;
    let mut j = a.len() - 1;
    while a[j] <= a[pivot] {
        j -= 1;
    }
    a.swap(pivot, j);
    a[i..].reverse();
    true
}

/// `n! / (m_1! m_2! ...)` over the value multiplicities: the number of
/// distinct arrangements the iterator above will yield.
pub fn distinct_permutation_count(values: &[i64]) -> u64 {
    let mut sorted: Vec<i64> = values.to_vec();
    sorted.sort_unstable();
    let mut result: u64 = 1;
    for n in 2..=sorted.len() as u64 {
        result *= n;
    }
    let mut i = 0;
    while i < sorted.len() {
        let mut run = 1u64;
        while i + 1 < sorted.len() && sorted[i] == sorted[i + 1] {
            run += 1;
            i += 1;
            result /= run;
        }
        i += 1;
    }
    result
}

/// Binomial coefficient as `u64`, `None` on overflow.
fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Number of nondecreasing `k`-tuples drawn from `num_values` distinct
/// values: `C(num_values + k - 1, k)`. `None` on overflow.
pub fn multiset_count(num_values: u64, k: u32) -> Option<u64> {
    if num_values == 0 {
        return Some(0);
    }
    binomial(num_values + k as u64 - 1, k as u64)
}

/// Iterator over all nondecreasing `N`-tuples with entries in `lo..=hi`,
/// in lexicographic order. This is the canonical multiset enumeration the
/// searches walk.
#[derive(Debug, Clone)]
pub struct NondecreasingTuples<const N: usize> {
    hi: i64,
    next: Option<[i64; N]>,
}

impl<const N: usize> NondecreasingTuples<N> {
    pub fn new(lo: i64, hi: i64) -> Self {
        let next = (lo <= hi).then_some([lo; N]);
        NondecreasingTuples { hi, next }
    }

    /// Start at the tuple with the given lexicographic rank.
    pub fn starting_at(lo: i64, hi: i64, rank: u64) -> Self {
        NondecreasingTuples {
            hi,
            next: unrank::<N>(lo, hi, rank),
        }
    }
}

impl<const N: usize> Iterator for NondecreasingTuples<N> {
    type Item = [i64; N];

    fn next(&mut self) -> Option<[i64; N]> {
        let current = self.next?;
        self.next = successor(current, self.hi);
        Some(current)
    }
}

fn successor<const N: usize>(mut t: [i64; N], hi: i64) -> Option<[i64; N]> {
    // Rightmost position that can still grow; everything after it resets
    // to the new floor to keep the tuple nondecreasing.
    for i in (0..N).rev() {
        if t[i] < hi {
            let v = t[i] + 1;
            for slot in t.iter_mut().skip(i) {
                *slot = v;
            }
            return Some(t);
        }
    }
    None
}

/// The tuple at lexicographic `rank` among all nondecreasing `N`-tuples
/// over `lo..=hi`, or `None` when the rank is out of range.
pub fn unrank<const N: usize>(lo: i64, hi: i64, rank: u64) -> Option<[i64; N]> {
    if lo > hi {
        return None;
    }
    let n = (hi - lo) as u64 + 1;
    let mut remaining = rank;
    let mut out = [lo; N];
    let mut floor = 0u64; // index of the smallest value this position may take
    for (pos, slot) in out.iter_mut().enumerate() {
        let slots_after = (N - pos - 1) as u32;
        let mut j = floor;
        loop {
            // Tuples whose entry here is value index `j`: the suffix is a
            // nondecreasing tuple over the (n - j) values >= j.
            let block = multiset_count(n - j, slots_after)?;
            if remaining < block {
                break;
            }
            remaining -= block;
            j += 1;
            if j >= n {
                return None;
            }
        }
        *slot = lo + j as i64;
        floor = j;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_of_distinct_values() {
        let all: Vec<[i64; 3]> = DistinctPermutations::new([3, 1, 2]).collect();
        assert_eq!(
            all,
            vec![
                [1, 2, 3],
                [1, 3, 2],
                [2, 1, 3],
                [2, 3, 1],
                [3, 1, 2],
                [3, 2, 1]
            ]
        );
    }

    #[test]
    fn permutations_skip_duplicates() {
        let all: Vec<[i64; 3]> = DistinctPermutations::new([0, 0, 1]).collect();
        assert_eq!(all, vec![[0, 0, 1], [0, 1, 0], [1, 0, 0]]);
    }

    #[test]
    fn permutation_counts_match_enumeration() {
        for values in [
            [1, 2, 3, 4],
            [1, 1, 2, 3],
            [1, 1, 2, 2],
            [5, 5, 5, 1],
            [9, 9, 9, 9],
        ] {
            let enumerated = DistinctPermutations::new(values).count() as u64;
            assert_eq!(
                enumerated,
                distinct_permutation_count(&values),
                "{values:?}"
            );
        }
    }

    #[test]
    fn single_element_and_pair() {
        let one: Vec<[i64; 1]> = DistinctPermutations::new([7]).collect();
        assert_eq!(one, vec![[7]]);
        let pair: Vec<[i64; 2]> = DistinctPermutations::new([2, 2]).collect();
        assert_eq!(pair, vec![[2, 2]]);
    }

    #[test]
    fn nondecreasing_enumeration_is_complete_and_ordered() {
        let tuples: Vec<[i64; 4]> = NondecreasingTuples::new(-1, 1).collect();
        assert_eq!(tuples.len() as u64, multiset_count(3, 4).unwrap());
        assert!(tuples.windows(2).all(|w| w[0] < w[1]));
        assert!(tuples.iter().all(|t| t.windows(2).all(|w| w[0] <= w[1])));
    }

    #[test]
    fn unrank_agrees_with_iteration() {
        let tuples: Vec<[i64; 3]> = NondecreasingTuples::new(0, 4).collect();
        for (i, t) in tuples.iter().enumerate() {
            assert_eq!(unrank::<3>(0, 4, i as u64), Some(*t));
        }
        assert_eq!(unrank::<3>(0, 4, tuples.len() as u64), None);
    }

    #[test]
    fn counts() {
        assert_eq!(multiset_count(6, 4), Some(126));
        assert_eq!(multiset_count(13, 4), Some(1820));
        assert_eq!(multiset_count(3, 9), Some(55));
        assert_eq!(multiset_count(0, 4), Some(0));
    }
}
