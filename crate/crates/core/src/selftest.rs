//! Exhaustive consistency sweep over all partitions of `n <= max_n` for
//! `k <= max_k`: roundtrips, equinumerosity, strip-order invariance and the
//! enumeration oracle against the series builders.

use std::collections::HashSet;

use serde::Serialize;

use crate::bijection;
use crate::error::Result;
use crate::identities::{
    count_class, enumerate_partitions, identity1_sides, PartitionClass, DEFAULT_ENUMERATION_CAP,
};
use crate::partition::Partition;
use crate::strips::{decompose, insert_strips, remove_strip, removable_strips};

/// The pair of maps under test. Swappable so a broken map can be shown to
/// fail the sweep.
#[derive(Clone, Copy)]
pub struct Maps {
    pub forward: fn(&Partition, u64, bool) -> Result<Partition>,
    pub inverse: fn(&Partition, u64, bool) -> Result<Partition>,
}

impl Default for Maps {
    fn default() -> Self {
        Maps {
            forward: bijection::forward,
            inverse: bijection::inverse,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub n: u64,
    pub k: u64,
    pub partition: Partition,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub max_n: u64,
    pub max_k: u64,
    pub checks: Vec<CheckTally>,
    /// First failure in sweep order: smallest `n`, then smallest `k`.
    pub counterexample: Option<Counterexample>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

const CHECKS: [&str; 5] = [
    "roundtrip",
    "image-class",
    "equinumerosity",
    "strip-order",
    "series-oracle",
];

struct Sweep {
    tallies: Vec<CheckTally>,
    counterexample: Option<Counterexample>,
}

impl Sweep {
    fn record(&mut self, check: &'static str, ok: bool, failure: impl FnOnce() -> Counterexample) {
        let tally = self
            .tallies
            .iter_mut()
            .find(|t| t.name == check)
            .expect("registered check");
        if ok {
            tally.passed += 1;
        } else {
            tally.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(failure());
            }
        }
    }
}

pub fn run(max_n: u64, max_k: u64) -> Result<SelftestReport> {
    run_with(max_n, max_k, Maps::default())
}

pub fn run_with(max_n: u64, max_k: u64, maps: Maps) -> Result<SelftestReport> {
    // the bound is checked up front so a bad request fails before any work
    enumerate_partitions(max_n)?;
    let mut sweep = Sweep {
        tallies: CHECKS
            .iter()
            .map(|&name| CheckTally {
                name,
                ..CheckTally::default()
            })
            .collect(),
        counterexample: None,
    };

    let sides = (1..=max_k)
        .map(|k| identity1_sides(k, max_n as usize))
        .collect::<Result<Vec<_>>>()?;
    for n in 0..=max_n {
        for (k, (lhs, rhs)) in (1..=max_k).zip(&sides) {
            let mut images = HashSet::new();
            let mut domain_size = 0u64;
            for lambda in enumerate_partitions(n)? {
                strip_order_check(&mut sweep, &lambda, n, k);
                if !lambda.is_repetition_bounded(k) {
                    continue;
                }
                domain_size += 1;
                let image = (maps.forward)(&lambda, k, true);
                let back = image.as_ref().ok().map(|b| (maps.inverse)(b, k, true));
                let ok = matches!(&back, Some(Ok(l)) if *l == lambda);
                sweep.record("roundtrip", ok, || Counterexample {
                    check: "roundtrip",
                    n,
                    k,
                    partition: lambda.clone(),
                    detail: format!("forward gave {image:?}, inverse gave {back:?}"),
                });
                if let Ok(beta) = image {
                    let ok = beta.weight() == n && beta.has_initial_k_repetitions(k);
                    sweep.record("image-class", ok, || Counterexample {
                        check: "image-class",
                        n,
                        k,
                        partition: lambda.clone(),
                        detail: format!("image {beta} is not an initial {k}-repetition partition of {n}"),
                    });
                    images.insert(beta);
                }
            }
            let target = count_class(n, k, PartitionClass::InitialReps)?;
            let ok = images.len() as u64 == domain_size && domain_size == target;
            sweep.record("equinumerosity", ok, || Counterexample {
                check: "equinumerosity",
                n,
                k,
                partition: Partition::empty(),
                detail: format!(
                    "{domain_size} bounded partitions, {} distinct images, {target} initial-repetition partitions",
                    images.len()
                ),
            });
            let ok = lhs.coeff(n as usize) == &target.into()
                && rhs.coeff(n as usize) == &domain_size.into();
            sweep.record("series-oracle", ok, || Counterexample {
                check: "series-oracle",
                n,
                k,
                partition: Partition::empty(),
                detail: format!(
                    "series give {} and {}, enumeration gives {target} and {domain_size}",
                    lhs.coeff(n as usize),
                    rhs.coeff(n as usize)
                ),
            });
        }
    }

    Ok(SelftestReport {
        max_n,
        max_k,
        checks: sweep.tallies,
        counterexample: sweep.counterexample,
    })
}

/// Removing strips shortest-first must give the same remainder and strip
/// multiset as the canonical longest-first order, and putting them back
/// must restore the partition.
fn strip_order_check(sweep: &mut Sweep, lambda: &Partition, n: u64, k: u64) {
    let canonical = decompose(lambda, k);
    let mut current = lambda.clone();
    let mut removed = Vec::new();
    while let Some(first) = removable_strips(&current, k).first() {
        current = remove_strip(&current, k, first.length).expect("reported removable");
        removed.push(k * first.length as u64);
    }
    removed.sort_unstable_by(|a, b| b.cmp(a));
    let restored = insert_strips(&canonical);
    let ok = current == canonical.pi
        && removed == canonical.delta.parts()
        && restored.as_ref() == Ok(lambda);
    sweep.record("strip-order", ok, || Counterexample {
        check: "strip-order",
        n,
        k,
        partition: lambda.clone(),
        detail: format!(
            "canonical ({}; {}), shortest-first ({current}; {removed:?}), reinserted {restored:?}",
            canonical.pi, canonical.delta
        ),
    });
}

/// Largest `max_n` accepted by [`run`].
pub const MAX_N: u64 = DEFAULT_ENUMERATION_CAP;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::PartitionError;

    #[test]
    fn small_sweep_passes() {
        let report = run(12, 3).unwrap();
        assert!(report.passed(), "{:?}", report.counterexample);
        let roundtrips = report.checks.iter().find(|c| c.name == "roundtrip").unwrap();
        assert!(roundtrips.passed > 0 && roundtrips.failed == 0);
    }

    #[test]
    fn trivial_sweep() {
        let report = run(0, 1).unwrap();
        assert!(report.passed());
        let eq = report.checks.iter().find(|c| c.name == "equinumerosity").unwrap();
        assert_eq!((eq.passed, eq.failed), (1, 0));
    }

    fn identity_map(p: &Partition, _k: u64, _strict: bool) -> Result<Partition> {
        Ok(p.clone())
    }

    #[test]
    fn broken_map_yields_counterexample() {
        let maps = Maps {
            forward: identity_map,
            inverse: identity_map,
        };
        let report = run_with(8, 2, maps).unwrap();
        assert!(!report.passed());
        let ce = report.counterexample.unwrap();
        // (2) is distinct-part but lacks the part 1 that initial 1-repetitions demand
        assert_eq!((ce.check, ce.n, ce.k), ("image-class", 2, 1));
        assert_eq!(ce.partition, Partition::new(vec![2]).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(run(61, 1), Err(PartitionError::CapExceeded { .. })));
    }
}
