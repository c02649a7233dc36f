//! Removable k-strips and the decomposition of a partition into a k-flat
//! remainder plus a record of the removed strips.
//!
//! A k-strip of length `i` is a row of `k`-cells across parts `1..=i` of the
//! k-modular diagram. It can be removed exactly when `p_i - p_{i+1} >= k`,
//! reading `p_{m+1}` as 0.

use serde::Serialize;

use crate::error::{PartitionError, Result};
use crate::partition::Partition;

/// `(pi, delta)` with `pi` k-flat and every part of `delta` equal to `k`
/// times the length of one removed strip.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripDecomposition {
    pub k: u64,
    pub pi: Partition,
    pub delta: Partition,
}

impl StripDecomposition {
    /// Checks the invariants and builds the pair.
    pub fn new(k: u64, pi: Partition, delta: Partition) -> Result<Self> {
        if k == 0 {
            return Err(PartitionError::ZeroModulus);
        }
        if let Some(&bad) = delta.parts().iter().find(|&&d| d % k != 0) {
            return Err(PartitionError::MalformedDecomposition(format!(
                "delta part {bad} is not a multiple of k = {k}"
            )));
        }
        if !pi.is_k_flat(k) {
            return Err(PartitionError::MalformedDecomposition(format!(
                "pi = ({pi}) is not {k}-flat"
            )));
        }
        Ok(StripDecomposition { k, pi, delta })
    }

    /// Lengths of the removed strips, longest first.
    pub fn strip_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.delta.parts().iter().map(move |&d| (d / self.k) as usize)
    }

    /// Number of strips removed.
    pub fn strip_count(&self) -> usize {
        self.delta.len()
    }
}

/// A run of identical strips removable at one position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RemovableStrips {
    pub length: usize,
    pub count: u64,
}

/// For each position `i` whose gap reaches `k`, the number of length-`i`
/// strips removable in immediate succession there. Ordered by length.
pub fn removable_strips(p: &Partition, k: u64) -> Vec<RemovableStrips> {
    assert!(k >= 1, "modulus must be positive");
    p.gaps()
        .enumerate()
        .filter(|&(_, gap)| gap >= k)
        .map(|(i, gap)| RemovableStrips {
            length: i + 1,
            count: gap / k,
        })
        .collect()
}

/// Subtracts `k` from parts `1..=length`, dropping parts that reach 0.
pub fn remove_strip(p: &Partition, k: u64, length: usize) -> Result<Partition> {
    if k == 0 {
        return Err(PartitionError::ZeroModulus);
    }
    let gap = if length == 0 || length > p.len() {
        0
    } else {
        p.part(length) - p.part(length + 1)
    };
    if gap < k {
        return Err(PartitionError::StripNotRemovable { length, gap });
    }
    let mut parts = p.parts().to_vec();
    for part in &mut parts[..length] {
        *part -= k;
    }
    // a trailing run equal to k vanishes when the strip spans every part
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Ok(Partition::from_sorted_unchecked(
        parts,
        p.weight() - k * length as u64,
    ))
}

/// Removes strips until the remainder is k-flat, always taking the longest
/// removable strip next.
pub fn decompose(p: &Partition, k: u64) -> StripDecomposition {
    assert!(k >= 1, "modulus must be positive");
    let mut current = p.clone();
    let mut delta = Vec::new();
    while let Some(longest) = removable_strips(&current, k).last().map(|s| s.length) {
        current = remove_strip(&current, k, longest).expect("strip reported as removable");
        delta.push(k * longest as u64);
    }
    // longest-first removal produces delta already in decreasing order
    let weight = delta.iter().sum();
    StripDecomposition {
        k,
        pi: current,
        delta: Partition::from_sorted_unchecked(delta, weight),
    }
}

/// Adds each recorded strip back onto `pi`, longest first. Inverse of
/// [`decompose`].
pub fn insert_strips(d: &StripDecomposition) -> Result<Partition> {
    let d = StripDecomposition::new(d.k, d.pi.clone(), d.delta.clone())?;
    let mut parts = d.pi.parts().to_vec();
    for length in d.strip_lengths() {
        if parts.len() < length {
            parts.resize(length, 0);
        }
        for part in &mut parts[..length] {
            *part = part
                .checked_add(d.k)
                .ok_or(PartitionError::Overflow("inserting strips"))?;
        }
    }
    Partition::new(parts)
}

/// Componentwise sum, padding the shorter partition with zeros.
pub fn vector_add(a: &Partition, b: &Partition) -> Result<Partition> {
    let len = a.len().max(b.len());
    let parts = (1..=len)
        .map(|i| a.part(i).checked_add(b.part(i)))
        .collect::<Option<Vec<u64>>>()
        .ok_or(PartitionError::Overflow("adding partitions"))?;
    Partition::new(parts)
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

    fn example1_pi() -> Partition {
        p(&[24, 22, 20, 16, 12, 8, 8, 5, 4, 1])
    }

    #[test]
    fn removable_strip_examples() {
        assert_eq!(
            removable_strips(&example1(), 5),
            vec![RemovableStrips { length: 5, count: 1 }]
        );
        assert!(removable_strips(&example1_pi(), 5).is_empty());
        assert_eq!(
            removable_strips(&p(&[3, 3, 3]), 2),
            vec![RemovableStrips { length: 3, count: 1 }]
        );
        assert_eq!(
            removable_strips(&p(&[9, 2]), 3),
            vec![RemovableStrips { length: 1, count: 2 }]
        );
    }

    #[test]
    fn remove_strip_examples() {
        assert_eq!(remove_strip(&example1(), 5, 5).unwrap(), example1_pi());
        assert_eq!(
            remove_strip(&example1(), 5, 4),
            Err(PartitionError::StripNotRemovable { length: 4, gap: 4 })
        );
        assert_eq!(remove_strip(&p(&[5]), 5, 1).unwrap(), Partition::empty());
        assert_eq!(remove_strip(&p(&[7, 5, 5]), 5, 3).unwrap(), p(&[2]));
        assert!(matches!(
            remove_strip(&p(&[5]), 5, 2),
            Err(PartitionError::StripNotRemovable { length: 2, gap: 0 })
        ));
        assert!(matches!(
            remove_strip(&p(&[5]), 5, 0),
            Err(PartitionError::StripNotRemovable { length: 0, .. })
        ));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&example1(), 5);
        assert_eq!(d.pi, example1_pi());
        assert_eq!(d.delta, p(&[25]));

        let flat = example1_pi();
        let d = decompose(&flat, 5);
        assert_eq!((d.pi, d.delta), (flat, Partition::empty()));

        let d = decompose(&p(&[3, 3, 3]), 2);
        assert_eq!((d.pi, d.delta), (p(&[1, 1, 1]), p(&[6])));
    }

    #[test]
    fn decompose_repeated_strips() {
        // gap 7 at position 1 with k = 3 holds two strips; gap 3 at position 2 one
        let d = decompose(&p(&[10, 3]), 3);
        assert_eq!(d.pi, p(&[1]));
        assert_eq!(d.delta, p(&[6, 3, 3]));
        assert_eq!(insert_strips(&d).unwrap(), p(&[10, 3]));
    }

    #[test]
    fn insert_strips_examples() {
        let d = StripDecomposition::new(5, example1_pi(), p(&[25])).unwrap();
        assert_eq!(insert_strips(&d).unwrap(), example1());

        let d = StripDecomposition::new(3, p(&[2, 1]), Partition::empty()).unwrap();
        assert_eq!(insert_strips(&d).unwrap(), p(&[2, 1]));

        let d = StripDecomposition::new(2, p(&[1, 1, 1]), p(&[6])).unwrap();
        assert_eq!(insert_strips(&d).unwrap(), p(&[3, 3, 3]));
    }

    #[test]
    fn malformed_decompositions_are_rejected() {
        assert!(matches!(
            StripDecomposition::new(5, example1_pi(), p(&[7])),
            Err(PartitionError::MalformedDecomposition(_))
        ));
        assert!(matches!(
            StripDecomposition::new(5, example1(), Partition::empty()),
            Err(PartitionError::MalformedDecomposition(_))
        ));
        let forged = StripDecomposition {
            k: 2,
            pi: p(&[3]),
            delta: Partition::empty(),
        };
        assert!(matches!(
            insert_strips(&forged),
            Err(PartitionError::MalformedDecomposition(_))
        ));
    }

    #[test]
    fn vector_add_examples() {
        assert_eq!(
            vector_add(&example1_pi(), &p(&[25])).unwrap(),
            p(&[49, 22, 20, 16, 12, 8, 8, 5, 4, 1])
        );
        assert_eq!(vector_add(&example1(), &Partition::empty()).unwrap(), example1());
        assert_eq!(vector_add(&p(&[1, 1, 1]), &p(&[6])).unwrap(), p(&[7, 1, 1]));
        assert_eq!(vector_add(&p(&[1]), &p(&[6, 4])).unwrap(), p(&[7, 4]));
        assert_eq!(
            vector_add(&p(&[u64::MAX]), &p(&[1])),
            Err(PartitionError::Overflow("adding partitions"))
        );
    }
}
