//! Integer partitions stored as weakly decreasing part lists, with conjugation
//! and the class predicates used by the bijection and the identities.
//!
//! Every predicate that takes a modulus `k` requires `k >= 1` and panics
//! otherwise. Callers that accept user input validate `k` first.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{PartitionError, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The weight is cached at construction, which is also where overflow is
/// checked: any partition that exists has a weight representable as `u64`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
    weight: u64,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::NotAPartition {
                index,
                reason: "non-positive part",
            });
        }
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition {
                index,
                reason: "increasing pair",
            });
        }
        let weight = parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or(PartitionError::Overflow("summing parts"))?;
        Ok(Partition { parts, weight })
    }

    /// Validates a signed sequence, reporting the first non-positive entry.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for (index, &p) in parts.iter().enumerate() {
            if p <= 0 {
                return Err(PartitionError::NotAPartition {
                    index,
                    reason: "non-positive part",
                });
            }
            out.push(p as u64);
        }
        Partition::new(out)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from parts already known to be valid. Internal
    /// callers only; the invariants are checked in debug builds.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>, weight: u64) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert_eq!(parts.iter().sum::<u64>(), weight);
        Partition { parts, weight }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` counted from 1, reading past the end as 0.
    pub fn part(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u64 {
        self.part(1)
    }

    /// Adjacent differences `p_i - p_{i+1}` for `i = 1..=m`, with `p_{m+1} = 0`.
    pub fn gaps(&self) -> impl Iterator<Item = u64> + '_ {
        (1..=self.len()).map(move |i| self.part(i) - self.part(i + 1))
    }

    /// The transpose of the Ferrers diagram: part `i` of the result counts
    /// the parts of `self` that are at least `i`.
    pub fn conjugate(&self) -> Partition {
        let largest = self.largest() as usize;
        let mut conj = Vec::with_capacity(largest);
        let mut count = self.len();
        for i in 1..=largest as u64 {
            while count > 0 && self.parts[count - 1] < i {
                count -= 1;
            }
            conj.push(count as u64);
        }
        Partition::from_sorted_unchecked(conj, self.weight)
    }

    /// Number of parts equal to `j`.
    pub fn multiplicity(&self, j: u64) -> usize {
        // parts are decreasing, so the run of `j` is found by two binary searches
        let start = self.parts.partition_point(|&p| p > j);
        let end = self.parts.partition_point(|&p| p >= j);
        end - start
    }

    /// `(value, multiplicity)` for each distinct part, largest value first.
    pub fn runs(&self) -> Vec<(u64, usize)> {
        let mut out: Vec<(u64, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Every multiplicity is at most `2k - 1`.
    pub fn is_repetition_bounded(&self, k: u64) -> bool {
        self.first_repetition_excess(k).is_none()
    }

    /// Smallest part whose multiplicity exceeds `2k - 1`, with that multiplicity.
    pub fn first_repetition_excess(&self, k: u64) -> Option<(u64, usize)> {
        assert!(k >= 1, "modulus must be positive");
        let bound = 2 * k - 1;
        self.runs()
            .into_iter()
            .rev()
            .find(|&(_, m)| m as u64 > bound)
    }

    /// If some part `j` occurs at least `k` times, every value `1..j` also
    /// occurs at least `k` times.
    pub fn has_initial_k_repetitions(&self, k: u64) -> bool {
        self.initial_repetition_defect(k, k).is_none()
    }

    /// If some part `j` occurs at least `k` times, every value `1..j` occurs
    /// at least `2k` times.
    pub fn has_strong_initial_repetitions(&self, k: u64) -> bool {
        self.initial_repetition_defect(k, 2 * k).is_none()
    }

    /// Checks that every value below the largest `k`-repeated part occurs at
    /// least `floor` times. Returns `(j, deficient value, its multiplicity)`
    /// for the first failure, where `j` is the largest `k`-repeated part.
    pub(crate) fn initial_repetition_defect(
        &self,
        k: u64,
        floor: u64,
    ) -> Option<(u64, u64, usize)> {
        let top = self.largest_k_repeated_part(k);
        (1..top).find_map(|v| {
            let m = self.multiplicity(v);
            ((m as u64) < floor).then_some((top, v, m))
        })
    }

    /// No adjacent gap (including the smallest part against 0) reaches `k`.
    pub fn is_k_flat(&self, k: u64) -> bool {
        assert!(k >= 1, "modulus must be positive");
        self.gaps().all(|g| g < k)
    }

    /// Largest part value with multiplicity at least `k`, or 0 if none.
    pub fn largest_k_repeated_part(&self, k: u64) -> u64 {
        assert!(k >= 1, "modulus must be positive");
        self.runs()
            .into_iter()
            .find(|&(_, m)| m as u64 >= k)
            .map_or(0, |(v, _)| v)
    }

    /// Comma list without run compression.
    pub fn to_plain_string(&self) -> String {
        self.parts
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Canonical text form: comma-separated parts with runs of four or more
/// written as `value^count`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (value, count) in self.runs() {
            let chunk = if count >= 4 {
                format!("{value}^{count}")
            } else {
                vec![value.to_string(); count].join(",")
            };
            if !first {
                f.write_str(",")?;
            }
            f.write_str(&chunk)?;
            first = false;
        }
        Ok(())
    }
}

/// Parses `29,27,25`, `5^9,4^4`, or the empty string. Whitespace around
/// items is ignored.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(text: &str) -> Result<Self> {
        let parse_err = |reason: String| PartitionError::Parse {
            text: text.to_string(),
            reason,
        };
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for item in trimmed.split(',') {
            let item = item.trim();
            let (value, count) = match item.split_once('^') {
                Some((v, c)) => (v.trim(), c.trim()),
                None => (item, "1"),
            };
            let value: i64 = value
                .parse()
                .map_err(|_| parse_err(format!("bad part {item:?}")))?;
            let count: usize = count
                .parse()
                .map_err(|_| parse_err(format!("bad repeat count in {item:?}")))?;
            if value <= 0 {
                return Err(PartitionError::NotAPartition {
                    index: parts.len(),
                    reason: "non-positive part",
                });
            }
            parts.extend(std::iter::repeat_n(value as u64, count));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn example1() -> Partition {
        p(&[29, 27, 25, 21, 17, 8, 8, 5, 4, 1])
    }

    fn example2_output() -> Partition {
        "10,9,9,9,8,7,7,7,5^4,4^4,3^4,2,2,1^27".parse().unwrap()
    }

    #[test]
    fn make_partition_examples() {
        assert_eq!(example1().weight(), 145);
        assert_eq!(Partition::new(vec![]).unwrap().weight(), 0);
        assert_eq!(
            Partition::new(vec![2, 3]),
            Err(PartitionError::NotAPartition {
                index: 0,
                reason: "increasing pair"
            })
        );
        assert!(matches!(
            Partition::from_signed(&[3, 0]),
            Err(PartitionError::NotAPartition { index: 1, .. })
        ));
        assert!(matches!(
            Partition::from_signed(&[3, -1]),
            Err(PartitionError::NotAPartition { index: 1, .. })
        ));
    }

    #[test]
    fn weight_overflow_is_an_error() {
        assert_eq!(
            Partition::new(vec![u64::MAX, 1]),
            Err(PartitionError::Overflow("summing parts"))
        );
    }

    #[test]
    fn conjugate_examples() {
        let lambda: Partition = "10,9,9,9,8,7,7,7,5,5,5,5,5,5,5,5,5,4,4,4,4,3,3,3,3,2,2,1,1"
            .parse()
            .unwrap();
        assert_eq!(lambda.conjugate(), example1());
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 3, 3]).conjugate(), p(&[3, 3, 3]));
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(example1().multiplicity(8), 2);
        assert_eq!(Partition::empty().multiplicity(5), 0);
        assert_eq!(p(&[3, 1, 1, 1, 1, 1, 1]).multiplicity(1), 6);
        assert_eq!(p(&[3, 1, 1, 1, 1, 1, 1]).multiplicity(2), 0);
    }

    #[test]
    fn repetition_bounded_examples() {
        assert!(p(&[3, 3, 3]).is_repetition_bounded(2));
        assert!(!p(&[2, 1, 1, 1, 1]).is_repetition_bounded(2));
        assert_eq!(p(&[2, 1, 1, 1, 1]).first_repetition_excess(2), Some((1, 4)));
        assert!(Partition::empty().is_repetition_bounded(5));
    }

    #[test]
    fn initial_repetition_examples() {
        let alpha_conj = example2_output();
        assert_eq!(alpha_conj.multiplicity(1), 27);
        assert!(alpha_conj.has_initial_k_repetitions(5));
        // at k = 4 the parts 5, 4, 3 reach the threshold but 2 does not
        assert!(!alpha_conj.has_initial_k_repetitions(4));
        assert!(!p(&[3, 3]).has_initial_k_repetitions(2));
        assert!(Partition::empty().has_initial_k_repetitions(3));
    }

    #[test]
    fn strong_initial_repetition_examples() {
        assert!(p(&[2, 2, 1, 1, 1, 1]).has_strong_initial_repetitions(2));
        assert!(!p(&[2, 2, 1, 1]).has_strong_initial_repetitions(2));
        assert!(Partition::empty().has_strong_initial_repetitions(2));
    }

    #[test]
    fn k_flat_examples() {
        assert!(p(&[24, 22, 20, 16, 12, 8, 8, 5, 4, 1]).is_k_flat(5));
        assert!(!example1().is_k_flat(5));
        assert!(Partition::empty().is_k_flat(3));
        // smallest part against zero counts as a gap
        assert!(!p(&[5]).is_k_flat(5));
    }

    #[test]
    fn largest_k_repeated_part_examples() {
        assert_eq!(example2_output().largest_k_repeated_part(5), 1);
        assert_eq!(example2_output().largest_k_repeated_part(4), 5);
        assert_eq!(p(&[3, 3, 3]).largest_k_repeated_part(2), 3);
        assert_eq!(p(&[5, 4, 3]).largest_k_repeated_part(2), 0);
    }

    #[test]
    fn text_format() {
        assert_eq!(
            "5^9,4^4".parse::<Partition>().unwrap().parts(),
            &[5, 5, 5, 5, 5, 5, 5, 5, 5, 4, 4, 4, 4]
        );
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" 3 , 1^2 ".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!(p(&[3, 1, 1, 1, 1, 1, 1]).to_string(), "3,1^6");
        assert_eq!(p(&[2, 2, 1, 1]).to_string(), "2,2,1,1");
        assert_eq!(example1().to_string(), "29,27,25,21,17,8,8,5,4,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert!(matches!(
            "3,x".parse::<Partition>(),
            Err(PartitionError::Parse { .. })
        ));
        assert!(matches!(
            "1,2".parse::<Partition>(),
            Err(PartitionError::NotAPartition { index: 0, .. })
        ));
        assert!(matches!(
            "3,0".parse::<Partition>(),
            Err(PartitionError::NotAPartition { index: 1, .. })
        ));
    }
}
