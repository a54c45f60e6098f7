//! Deterministic, optionally parallel sweep over numbered work units.
//!
//! Units are processed in any order by the workers, but the merged result is
//! always the one a sequential run would produce: instance counts are summed
//! in unit order up to and including the first failing unit.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::thread;

use crate::identities::Counterexample;

#[derive(Debug, Default)]
pub(crate) struct UnitOutcome {
    /// Instances checked in this unit, up to and including a failure.
    pub checked: u64,
    pub failure: Option<Counterexample>,
}

impl UnitOutcome {
    pub fn pass(checked: u64) -> Self {
        UnitOutcome {
            checked,
            failure: None,
        }
    }

    pub fn fail(checked: u64, counterexample: Counterexample) -> Self {
        UnitOutcome {
            checked,
            failure: Some(counterexample),
        }
    }
}

/// Runs `unit(0) .. unit(units - 1)` on `jobs` workers and merges the outcomes.
pub(crate) fn run<F>(units: u64, jobs: usize, unit: F) -> (u64, Option<Counterexample>)
where
    F: Fn(u64) -> UnitOutcome + Sync,
{
    if jobs <= 1 || units <= 1 {
        let mut checked = 0;
        for i in 0..units {
            let out = unit(i);
            checked += out.checked;
            if out.failure.is_some() {
                return (checked, out.failure);
            }
        }
        return (checked, None);
    }

    let next = AtomicU64::new(0);
    let first_failure = AtomicU64::new(u64::MAX);
    let results: Mutex<Vec<(u64, UnitOutcome)>> = Mutex::new(Vec::new());
    thread::scope(|scope| {
        for _ in 0..jobs.min(units as usize) {
            scope.spawn(|| {
                let mut local = Vec::new();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    // Units past a known failure can never reach the merged report.
                    if i >= units || i > first_failure.load(Ordering::Relaxed) {
                        break;
                    }
                    let out = unit(i);
                    if out.failure.is_some() {
                        first_failure.fetch_min(i, Ordering::Relaxed);
                    }
                    local.push((i, out));
                }
                results.lock().expect("sweep worker panicked").extend(local);
            });
        }
    });

    let mut results = results.into_inner().expect("sweep worker panicked");
    results.sort_by_key(|(i, _)| *i);
    let mut checked = 0;
    for (_, out) in results {
        checked += out.checked;
        if out.failure.is_some() {
            return (checked, out.failure);
        }
    }
    (checked, None)
}
