//! Census on a pool of scoped worker threads.
//!
//! The search tree is cut at a fixed depth; workers pull subtrees from a
//! shared index and write their counts into the subtree's slot. Slots are
//! summed in index order, so the table does not depend on the thread count.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use numsgp_core::census::{count_subtree, split_frontier, NodeBudget};
use numsgp_core::{CensusTable, Error, NumericalSemigroup, Result};

const BATCH: u64 = 1024;

/// Node budget shared by all workers, charged in batches.
struct SharedBudget<'a> {
    total: &'a AtomicU64,
    abort: &'a AtomicBool,
    limit: u64,
    pending: u64,
}

impl<'a> SharedBudget<'a> {
    fn new(total: &'a AtomicU64, abort: &'a AtomicBool, limit: u64) -> Self {
        SharedBudget {
            total,
            abort,
            limit,
            pending: 0,
        }
    }

    fn flush(&mut self) -> u64 {
        let now = self.total.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        now
    }
}

impl NodeBudget for SharedBudget<'_> {
    fn charge(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= BATCH && self.flush() > self.limit {
            self.abort.store(true, Ordering::Relaxed);
        }
        !self.abort.load(Ordering::Relaxed)
    }

    fn limit(&self) -> u64 {
        self.limit
    }
}

impl Drop for SharedBudget<'_> {
    fn drop(&mut self) {
        self.flush();
    }
}

/// Census with `threads` workers; identical to the sequential census.
pub fn census_parallel(
    s: &NumericalSemigroup,
    max_codim: usize,
    threads: usize,
    budget: u64,
) -> Result<CensusTable> {
    let threads = threads.max(1);
    let total = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let exceeded = || Error::BudgetExceeded { budget };

    // deepen the cut until there are a few subtrees per worker
    let mut frontier = {
        let mut b = SharedBudget::new(&total, &abort, budget);
        split_frontier(s, max_codim, 0, &mut b)
    };
    for depth in 1..=max_codim.min(8) {
        match &frontier {
            Ok(f) if f.prefixes.len() >= 4 * threads => break,
            Ok(_) => {}
            Err(_) => break,
        }
        total.store(0, Ordering::Relaxed);
        let mut b = SharedBudget::new(&total, &abort, budget);
        frontier = split_frontier(s, max_codim, depth, &mut b);
    }
    let frontier = frontier.map_err(|_| exceeded())?;
    // subtree roots are charged again by the workers
    total.store(frontier.shallow_counts.iter().sum(), Ordering::Relaxed);

    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<Vec<u64>>>>> =
        Mutex::new(frontier.prefixes.iter().map(|_| None).collect());
    thread::scope(|scope| {
        for _ in 0..threads.min(frontier.prefixes.len()) {
            scope.spawn(|| {
                let mut b = SharedBudget::new(&total, &abort, budget);
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(prefix) = frontier.prefixes.get(i) else {
                        break;
                    };
                    let counts = count_subtree(s, max_codim, prefix, &mut b);
                    let failed = counts.is_err();
                    slots
                        .lock()
                        .expect("no worker panics while holding the lock")[i] = Some(counts);
                    if failed {
                        break;
                    }
                }
            });
        }
    });

    if abort.load(Ordering::Relaxed) || total.load(Ordering::Relaxed) > budget {
        return Err(exceeded());
    }
    let mut counts = frontier.shallow_counts;
    for slot in slots.into_inner().expect("workers joined") {
        let sub = slot.expect("every subtree is counted")?;
        counts.iter_mut().zip(sub).for_each(|(c, x)| *c += x);
    }
    Ok(CensusTable::from_counts(&counts, s.multiplicity()))
}
