//! Both sides of the three q-series identities, a brute-force enumeration
//! oracle over partitions of `n`, and the verifier that ties them together.
//!
//! Throughout, `F_c(j) = 1 + q^j + ... + q^{cj}`.
//!
//! * Identity 1: `Σ_n q^{k·n(n+1)/2} / (q;q)_n · Π_{j>n} F_{k-1}(j) = Π_j F_{2k-1}(j)`.
//! * Identity 2: the same sum cut at `n = m`, against
//!   `Π_j F_{k-1}(j) · Σ_{n<=m} q^{k·n(n+1)/2} / (q^k;q^k)_n`.
//! * Identity 3: the sum with exponent `k·n²`, against the scaled
//!   Rogers-Ramanujan sum and two product forms.

use std::env;
use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{PartitionError, Result};
use crate::partition::Partition;
use crate::series::{equal_up_to, Series, SeriesComparison};
use crate::strips::decompose;

/// Hard limit for [`enumerate_partitions`]; p(60) is just under a million.
pub const DEFAULT_ENUMERATION_CAP: u64 = 60;
/// Default bound on `n` for the brute-force cross-checks in [`verify`].
pub const DEFAULT_ORACLE_CAP: u64 = 30;
/// Overrides [`DEFAULT_ORACLE_CAP`] when set to an integer.
pub const ORACLE_CAP_ENV: &str = "KSTRIPS_ORACLE_CAP";
pub const DEFAULT_TRUNCATION: usize = 60;

/// Oracle cap from the environment, falling back to the default. Values
/// above the enumeration cap are clamped.
pub fn oracle_cap_from_env() -> u64 {
    env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
        .min(DEFAULT_ENUMERATION_CAP)
}

/// All partitions of `n` in lexicographically decreasing order.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<u64>>,
    n: u64,
}

impl Partitions {
    /// No cap check; prefer [`enumerate_partitions`].
    pub fn of(n: u64) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(first),
            n,
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.as_mut()?;
        let out = Partition::from_sorted_unchecked(current.clone(), self.n);

        let ones = current.iter().rev().take_while(|&&p| p == 1).count();
        current.truncate(current.len() - ones);
        match current.pop() {
            None => self.current = None,
            Some(last) => {
                let size = last - 1;
                let mut rest = ones as u64 + last;
                while rest >= size {
                    current.push(size);
                    rest -= size;
                }
                if rest > 0 {
                    current.push(rest);
                }
            }
        }
        Some(out)
    }
}

pub fn enumerate_partitions(n: u64) -> Result<Partitions> {
    enumerate_partitions_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_partitions_capped(n: u64, cap: u64) -> Result<Partitions> {
    if n > cap {
        return Err(PartitionError::CapExceeded { n, cap });
    }
    Ok(Partitions::of(n))
}

/// The partition classes the identities count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionClass {
    /// Every multiplicity at most `2k - 1`.
    RepetitionBounded,
    InitialReps,
    /// Initial k-repetitions and no part above `m` repeated `k` or more times.
    InitialRepsCapped(u64),
    StrongInitialReps,
    /// Every multiplicity below `k`, i.e. the conjugate is k-flat.
    KFlatConjugate,
}

impl PartitionClass {
    pub fn contains(&self, p: &Partition, k: u64) -> bool {
        match *self {
            PartitionClass::RepetitionBounded => p.is_repetition_bounded(k),
            PartitionClass::InitialReps => p.has_initial_k_repetitions(k),
            PartitionClass::InitialRepsCapped(m) => {
                p.has_initial_k_repetitions(k) && p.largest_k_repeated_part(k) <= m
            }
            PartitionClass::StrongInitialReps => p.has_strong_initial_repetitions(k),
            PartitionClass::KFlatConjugate => p.runs().iter().all(|&(_, m)| (m as u64) < k),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PartitionClass::RepetitionBounded => "repetition-bounded",
            PartitionClass::InitialReps => "initial-reps",
            PartitionClass::InitialRepsCapped(_) => "initial-reps-capped",
            PartitionClass::StrongInitialReps => "strong-initial-reps",
            PartitionClass::KFlatConjugate => "k-flat-conjugate",
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionClass::InitialRepsCapped(m) => write!(f, "{}(m={m})", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

impl Serialize for PartitionClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Partitions with all adjacent gaps (smallest part included) below `2k`
/// from which at most `m` k-strips can be removed. These are the conjugates
/// of the [`PartitionClass::InitialRepsCapped`] preimages.
pub fn is_capped_strip_partition(p: &Partition, k: u64, m: u64) -> bool {
    p.gaps().all(|g| g < 2 * k) && decompose(p, k).strip_count() as u64 <= m
}

pub fn count_class(n: u64, k: u64, class: PartitionClass) -> Result<u64> {
    count_class_capped(n, k, class, DEFAULT_ENUMERATION_CAP)
}

pub fn count_class_capped(n: u64, k: u64, class: PartitionClass, cap: u64) -> Result<u64> {
    if k == 0 {
        return Err(PartitionError::ZeroModulus);
    }
    Ok(enumerate_partitions_capped(n, cap)?
        .filter(|p| class.contains(p, k))
        .count() as u64)
}

/// Class counts for `n = 0..=up_to` as a series truncated at `up_to`.
pub fn count_series(k: u64, class: PartitionClass, up_to: u64, cap: u64) -> Result<Series> {
    let counts = (0..=up_to)
        .map(|n| count_class_capped(n, k, class, cap).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    Ok(Series::from_coeffs(counts))
}

fn check_modulus(k: u64) -> Result<usize> {
    if k == 0 {
        Err(PartitionError::ZeroModulus)
    } else {
        usize::try_from(k).map_err(|_| PartitionError::Overflow("converting the modulus"))
    }
}

/// `Π_{j=from..=trunc} F_c(j)`.
fn finite_geometric_product(from: usize, c: usize, trunc: usize) -> Series {
    let mut s = Series::one(trunc);
    for j in from.max(1)..=trunc {
        s.mul_finite_geometric(j, c);
    }
    s
}

/// `Σ_{n=0}^{last} q^{exponent(n)} / (q;q)_n · Π_{j>n} F_{k-1}(j)`, stopping
/// early once `exponent(n)` passes the truncation.
fn initial_repetition_sum(
    k: usize,
    last: Option<usize>,
    trunc: usize,
    exponent: impl Fn(usize) -> usize,
) -> Series {
    let terms: Vec<usize> = (0..)
        .take_while(|&n| last.is_none_or(|l| n <= l) && exponent(n) <= trunc)
        .collect();
    let mut total = Series::zero(trunc);
    let Some(&top) = terms.last() else {
        return total;
    };
    // tail(n) = Π_{j=n+1..=trunc} F_{k-1}(j), built downwards from the top term
    let mut tail = finite_geometric_product(top + 1, k - 1, trunc);
    for n in terms.into_iter().rev() {
        let mut term = tail.clone();
        for i in 1..=n {
            term.mul_geometric_inverse(i);
        }
        term.shift(exponent(n));
        total = total.add(&term).expect("same truncation");
        if n >= 1 {
            tail.mul_finite_geometric(n, k - 1);
        }
    }
    total
}

/// `Σ_{n=0}^{last} q^{exponent(n)} / (q^k;q^k)_n`.
fn distinct_multiple_sum(
    k: usize,
    last: Option<usize>,
    trunc: usize,
    exponent: impl Fn(usize) -> usize,
) -> Series {
    let mut total = Series::zero(trunc);
    for n in (0..).take_while(|&n| last.is_none_or(|l| n <= l) && exponent(n) <= trunc) {
        let mut term = Series::monomial(1, exponent(n), trunc);
        for i in 1..=n {
            term.mul_geometric_inverse(i * k);
        }
        total = total.add(&term).expect("same truncation");
    }
    total
}

/// `Π_j (1 - q^{jk}) / (1 - q^j)`: generating function of k-flat partitions.
fn k_flat_product(k: usize, trunc: usize) -> Series {
    finite_geometric_product(1, k - 1, trunc)
}

fn triangular_exponent(k: usize) -> impl Fn(usize) -> usize {
    move |n| k * n * (n + 1) / 2
}

/// `k·n + 2k·(n-1) + 2k·(n-2) + ... + 2k·1`, summed term by term.
pub fn strong_exponent(k: usize, n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    k * n + (1..n).map(|t| 2 * k * t).sum::<usize>()
}

/// `(lhs, rhs)` of identity 1.
pub fn identity1_sides(k: u64, trunc: usize) -> Result<(Series, Series)> {
    let k = check_modulus(k)?;
    let lhs = initial_repetition_sum(k, None, trunc, triangular_exponent(k));
    let rhs = finite_geometric_product(1, 2 * k - 1, trunc);
    Ok((lhs, rhs))
}

/// `(lhs, rhs)` of identity 2 with the sum cut at `m`.
pub fn identity2_sides(k: u64, m: u64, trunc: usize) -> Result<(Series, Series)> {
    let k = check_modulus(k)?;
    let m = usize::try_from(m).unwrap_or(usize::MAX);
    let lhs = initial_repetition_sum(k, Some(m), trunc, triangular_exponent(k));
    let rhs = k_flat_product(k, trunc)
        .mul(&distinct_multiple_sum(k, Some(m), trunc, triangular_exponent(k)))
        .expect("same truncation");
    Ok((lhs, rhs))
}

/// The four forms of identity 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity3Forms {
    pub sum_form: Series,
    pub middle_form: Series,
    pub rr_product_form: Series,
    pub final_product_form: Series,
}

pub fn identity3_forms(k: u64, trunc: usize) -> Result<Identity3Forms> {
    let k = check_modulus(k)?;
    let sum_form = initial_repetition_sum(k, None, trunc, |n| strong_exponent(k, n));

    let flat = k_flat_product(k, trunc);
    let middle_form = flat
        .mul(&distinct_multiple_sum(k, None, trunc, |n| k * n * n))
        .expect("same truncation");

    // parts ≡ ±1 (mod 5), scaled by k
    let mut rr_product_form = flat;
    for t in (0..).take_while(|&t| k * (5 * t + 1) <= trunc) {
        rr_product_form.mul_geometric_inverse(k * (5 * t + 1));
        if k * (5 * t + 4) <= trunc {
            rr_product_form.mul_geometric_inverse(k * (5 * t + 4));
        }
    }

    // Π_{j>=1}(1 - q^{5kj}) Π_{j>=0}(1 - q^{k(5j+2)})(1 - q^{k(5j+3)}) / Π_{j>=1}(1 - q^j)
    let mut final_product_form = Series::one(trunc);
    for j in 0..=trunc / (5 * k) {
        for e in [5 * k * j, k * (5 * j + 2), k * (5 * j + 3)] {
            if e >= 1 && e <= trunc {
                final_product_form.mul_one_minus_power(e);
            }
        }
    }
    for j in 1..=trunc {
        final_product_form.mul_geometric_inverse(j);
    }

    Ok(Identity3Forms {
        sum_form,
        middle_form,
        rr_product_form,
        final_product_form,
    })
}

/// Which identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "identity", rename_all = "snake_case")]
pub enum Identity {
    /// Identity 1.
    InitialRepetitions,
    /// Identity 2, with at most `m` parts repeated `k` or more times.
    Finitized { m: u64 },
    /// Identity 3.
    RogersRamanujan,
}

impl Identity {
    pub fn number(&self) -> u8 {
        match self {
            Identity::InitialRepetitions => 1,
            Identity::Finitized { .. } => 2,
            Identity::RogersRamanujan => 3,
        }
    }

    pub fn from_number(id: u8, m: Option<u64>) -> Option<Identity> {
        match (id, m) {
            (1, None) => Some(Identity::InitialRepetitions),
            (2, Some(m)) => Some(Identity::Finitized { m }),
            (3, None) => Some(Identity::RogersRamanujan),
            _ => None,
        }
    }
}

fn series_as_strings<S: Serializer>(v: &Series, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.coeffs().iter().map(ToString::to_string))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedForm {
    pub name: &'static str,
    pub description: String,
    #[serde(rename = "coefficients", serialize_with = "series_as_strings")]
    pub series: Series,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormComparison {
    pub left: &'static str,
    pub right: &'static str,
    pub result: SeriesComparison,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub form: &'static str,
    pub class: PartitionClass,
    pub up_to: u64,
    pub result: SeriesComparison,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: u8,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    pub truncation: usize,
    pub forms: Vec<NamedForm>,
    pub comparisons: Vec<FormComparison>,
    pub oracle_checks: Vec<OracleCheck>,
    pub holds: bool,
}

impl IdentityReport {
    /// First failing comparison or oracle check, described in words.
    pub fn first_failure(&self) -> Option<String> {
        let describe = |what: String, r: &SeriesComparison| match r {
            SeriesComparison::Equal => None,
            SeriesComparison::Mismatch {
                exponent,
                left,
                right,
            } => Some(format!("{what}: q^{exponent} coefficient {left} vs {right}")),
        };
        self.comparisons
            .iter()
            .find_map(|c| describe(format!("{} vs {}", c.left, c.right), &c.result))
            .or_else(|| {
                self.oracle_checks
                    .iter()
                    .find_map(|c| describe(format!("{} vs {} counts", c.form, c.class), &c.result))
            })
    }
}

/// Builds every form of `identity`, compares them pairwise against the first
/// form, and cross-checks against brute-force class counts for
/// `n <= min(trunc, oracle_cap)`.
pub fn verify(identity: Identity, k: u64, trunc: usize, oracle_cap: u64) -> Result<IdentityReport> {
    check_modulus(k)?;
    if oracle_cap > DEFAULT_ENUMERATION_CAP {
        return Err(PartitionError::CapExceeded {
            n: oracle_cap,
            cap: DEFAULT_ENUMERATION_CAP,
        });
    }
    let (forms, oracle): (Vec<NamedForm>, Vec<(&'static str, PartitionClass)>) = match identity {
        Identity::InitialRepetitions => {
            let (lhs, rhs) = identity1_sides(k, trunc)?;
            (
                vec![
                    named("lhs", "sum over n of q^{k n(n+1)/2}/(q;q)_n times prod_{j>n} F_{k-1}(j)", lhs),
                    named("rhs", "prod_j F_{2k-1}(j)", rhs),
                ],
                vec![
                    ("lhs", PartitionClass::InitialReps),
                    ("rhs", PartitionClass::RepetitionBounded),
                ],
            )
        }
        Identity::Finitized { m } => {
            let (lhs, rhs) = identity2_sides(k, m, trunc)?;
            (
                vec![
                    named("lhs", "identity 1 sum cut at n = m", lhs),
                    named(
                        "rhs",
                        "prod_j F_{k-1}(j) times sum_{n<=m} q^{k n(n+1)/2}/(q^k;q^k)_n",
                        rhs,
                    ),
                ],
                vec![
                    ("lhs", PartitionClass::InitialRepsCapped(m)),
                    ("rhs", PartitionClass::InitialRepsCapped(m)),
                ],
            )
        }
        Identity::RogersRamanujan => {
            let f = identity3_forms(k, trunc)?;
            (
                vec![
                    named("sum", "sum over n of q^{k n^2}/(q;q)_n times prod_{j>n} F_{k-1}(j)", f.sum_form),
                    named("middle", "prod_j F_{k-1}(j) times sum_n q^{k n^2}/(q^k;q^k)_n", f.middle_form),
                    named(
                        "rr_product",
                        "prod_j F_{k-1}(j) times prod_{t>=0} 1/((1-q^{k(5t+1)})(1-q^{k(5t+4)}))",
                        f.rr_product_form,
                    ),
                    named(
                        "final_product",
                        "prod_{j>=1}(1-q^{5kj}) prod_{j>=0}(1-q^{k(5j+2)})(1-q^{k(5j+3)}) / prod_{j>=1}(1-q^j)",
                        f.final_product_form,
                    ),
                ],
                vec![("sum", PartitionClass::StrongInitialReps)],
            )
        }
    };

    let comparisons: Vec<FormComparison> = forms[1..]
        .iter()
        .map(|other| FormComparison {
            left: forms[0].name,
            right: other.name,
            result: equal_up_to(&forms[0].series, &other.series).expect("same truncation"),
        })
        .collect();

    let up_to = (trunc as u64).min(oracle_cap);
    let mut oracle_checks = Vec::new();
    for (form, class) in oracle {
        let counts = count_series(k, class, up_to, DEFAULT_ENUMERATION_CAP)?;
        let series = &forms.iter().find(|f| f.name == form).expect("known form").series;
        oracle_checks.push(OracleCheck {
            form,
            class,
            up_to,
            result: equal_up_to(&series.truncate(up_to as usize), &counts).expect("same truncation"),
        });
    }

    let holds = comparisons.iter().all(|c| c.result.is_equal())
        && oracle_checks.iter().all(|c| c.result.is_equal());
    Ok(IdentityReport {
        identity: identity.number(),
        k,
        m: match identity {
            Identity::Finitized { m } => Some(m),
            _ => None,
        },
        truncation: trunc,
        forms,
        comparisons,
        oracle_checks,
        holds,
    })
}

fn named(name: &'static str, description: &str, series: Series) -> NamedForm {
    NamedForm {
        name,
        description: description.to_string(),
        series,
    }
}
