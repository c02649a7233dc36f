//! The bijection between partitions with every part repeated at most `2k - 1`
//! times and partitions with initial k-repetitions.
//!
//! Forward: conjugate `λ`, strip all k-strips from `λ'` to get `(π, δ)`, add
//! `α = π + δ` componentwise, conjugate `α`. The inverse splits each
//! multiplicity of `β` into its residue mod `k` and the `k`-multiple above it,
//! conjugates both halves to recover `(π, δ)`, puts the strips back and
//! conjugates.
//!
//! Both maps are total. With `strict` set they refuse inputs outside the
//! classes the theorem is about.

use serde::Serialize;

use crate::error::{DomainViolation, PartitionError, Result};
use crate::partition::Partition;
use crate::strips::{decompose, insert_strips, vector_add, StripDecomposition};

/// Every intermediate object of one forward evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionTrace {
    pub k: u64,
    pub lambda: Partition,
    pub lambda_conj: Partition,
    pub pi: Partition,
    pub delta: Partition,
    pub alpha: Partition,
    pub alpha_conj: Partition,
}

fn check_modulus(k: u64) -> Result<()> {
    if k == 0 {
        Err(PartitionError::ZeroModulus)
    } else {
        Ok(())
    }
}

/// Rejects partitions with some multiplicity of `2k` or more, naming the
/// smallest such part.
pub fn check_repetition_bounded(lambda: &Partition, k: u64) -> Result<()> {
    check_modulus(k)?;
    match lambda.first_repetition_excess(k) {
        None => Ok(()),
        Some((part, multiplicity)) => Err(PartitionError::DomainViolation(
            DomainViolation::RepetitionBound {
                part,
                multiplicity,
                bound: 2 * k - 1,
            },
        )),
    }
}

/// Rejects partitions without initial k-repetitions, naming the largest
/// k-repeated part and the first smaller value that falls short.
pub fn check_initial_repetitions(beta: &Partition, k: u64) -> Result<()> {
    check_modulus(k)?;
    match beta.initial_repetition_defect(k, k) {
        None => Ok(()),
        Some((part, deficient, multiplicity)) => Err(PartitionError::DomainViolation(
            DomainViolation::InitialRepetition {
                part,
                deficient,
                multiplicity,
                k,
            },
        )),
    }
}

pub fn trace(lambda: &Partition, k: u64) -> Result<BijectionTrace> {
    check_modulus(k)?;
    let lambda_conj = lambda.conjugate();
    let StripDecomposition { pi, delta, .. } = decompose(&lambda_conj, k);
    let alpha = vector_add(&pi, &delta)?;
    let alpha_conj = alpha.conjugate();
    Ok(BijectionTrace {
        k,
        lambda: lambda.clone(),
        lambda_conj,
        pi,
        delta,
        alpha,
        alpha_conj,
    })
}

pub fn forward(lambda: &Partition, k: u64, strict: bool) -> Result<Partition> {
    if strict {
        check_repetition_bounded(lambda, k)?;
    }
    Ok(trace(lambda, k)?.alpha_conj)
}

/// Recovers `(π, δ)` from an image partition `β = α'`.
///
/// Each multiplicity `m_t` of `β` splits as `(m_t mod k) + k·floor(m_t / k)`.
/// The residues form `π'` and the multiples form `δ'`.
pub fn split_image(beta: &Partition, k: u64) -> Result<StripDecomposition> {
    check_modulus(k)?;
    let mut reduced = Vec::with_capacity(beta.len());
    let mut removed = Vec::new();
    for (value, multiplicity) in beta.runs() {
        let m = multiplicity as u64;
        reduced.extend(std::iter::repeat_n(value, (m % k) as usize));
        removed.extend(std::iter::repeat_n(value, (m - m % k) as usize));
    }
    let pi = Partition::new(reduced)?.conjugate();
    let delta = Partition::new(removed)?.conjugate();
    StripDecomposition::new(k, pi, delta)
}

pub fn inverse(beta: &Partition, k: u64, strict: bool) -> Result<Partition> {
    if strict {
        check_initial_repetitions(beta, k)?;
    }
    let split = split_image(beta, k)?;
    Ok(insert_strips(&split)?.conjugate())
}
