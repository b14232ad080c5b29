//! Threaded search drivers. Shards own disjoint unit ranges and run
//! concurrently with no shared state; the merge sorts by coefficients, so
//! the output is identical for every shard count and schedule.

use eigenperm_core::search::{
    allocate_units, partition_work, scan_units_2x2, scan_units_3x3, Checkpoint, Dim, Record2,
    Search3Outcome, SearchRange,
};
use eigenperm_core::{Error, Result};

/// Sharded 2×2 scan. The budget bounds total work units (one multiset
/// each); exceeding it refuses up front with the required estimate.
pub fn run_2x2(range: SearchRange, shards: u32, budget: u64) -> Result<Vec<Record2>> {
    let required = range.multisets(Dim::Two.arity())?;
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let plan = partition_work(range, Dim::Two, 1, shards)?;
    let mut results: Vec<Result<Vec<Record2>>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = plan
            .shards
            .iter()
            .map(|shard| {
                let (from, to) = (shard.start_unit, shard.end_unit);
                scope.spawn(move || scan_units_2x2(range, from, to))
            })
            .collect();
        for handle in handles {
            results.push(handle.join().expect("shard thread does not panic"));
        }
    });
    let mut records = Vec::new();
    for result in results {
        records.extend(result?);
    }
    records.sort_unstable_by_key(|r| r.coefficients);
    Ok(records)
}

/// Sharded, budgeted, resumable 3×3 scan; the threaded equivalent of
/// `search::search_3x3`. Unit allocations are computed up front, so the
/// result does not depend on thread scheduling.
pub fn run_3x3(
    range: SearchRange,
    shards: u32,
    block_size: u64,
    budget: Option<u64>,
    resume: Option<Checkpoint>,
) -> Result<Search3Outcome> {
    let plan = partition_work(range, Dim::Three, block_size, shards)?;
    let mut state = match resume {
        Some(cp) => {
            // Reuse the sequential driver for validation semantics: a
            // zero-budget pass only checks the checkpoint against the plan.
            eigenperm_core::search::search_3x3(range, shards, block_size, Some(0), Some(cp))?
                .checkpoint
        }
        None => Checkpoint::fresh(&plan, shards),
    };

    let allocations = allocate_units(&plan, &state.shard_next, budget);
    let mut results: Vec<(u32, u64, Result<Vec<_>>)> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = allocations
            .iter()
            .map(|&(shard, from, to)| {
                scope.spawn(move || (shard, to, scan_units_3x3(range, block_size, from, to)))
            })
            .collect();
        for handle in handles {
            results.push(handle.join().expect("shard thread does not panic"));
        }
    });
    for (shard, to, result) in results {
        let mut found = result?;
        state.records.append(&mut found);
        state.shard_next[shard as usize] = to;
    }
    state.records.sort_unstable_by_key(|r| r.coefficients);

    let complete = state.is_complete(&plan);
    Ok(Search3Outcome {
        records: state.records.clone(),
        complete,
        checkpoint: state,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threaded_matches_sequential_2x2() {
        let range = SearchRange::new(-2, 3).unwrap();
        let sequential = eigenperm_core::search::search_2x2(range, u64::MAX).unwrap();
        for shards in [1, 3, 8] {
            assert_eq!(run_2x2(range, shards, u64::MAX).unwrap(), sequential);
        }
    }

    #[test]
    fn threaded_matches_sequential_3x3() {
        let range = SearchRange::new(0, 1).unwrap();
        let sequential = eigenperm_core::search::search_3x3(range, 1, 8, None, None).unwrap();
        for shards in [1, 3, 8] {
            let outcome = run_3x3(range, shards, 8, None, None).unwrap();
            assert!(outcome.complete);
            assert_eq!(outcome.records, sequential.records, "shards={shards}");
        }
    }

    #[test]
    fn threaded_resume_matches_uninterrupted() {
        let range = SearchRange::new(0, 1).unwrap();
        let full = run_3x3(range, 3, 4, None, None).unwrap();
        let mut state = run_3x3(range, 3, 4, Some(2), None).unwrap();
        while !state.complete {
            state = run_3x3(range, 3, 4, Some(2), Some(state.checkpoint)).unwrap();
        }
        assert_eq!(state.records, full.records);
    }
}
