//! Splitting a search over worker threads by fixing its first cells.
//!
//! Each shard is the set of completions of one prefix. Results come back
//! in prefix order, which is the order a single-threaded search visits
//! them, so merged output does not depend on the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use knotile_core::enumerate::Fill;

/// Prefix length used when sharding: enough cells for a few hundred
/// shards on the boards the tool handles.
pub const SHARD_DEPTH: usize = 4;

/// Runs `work` on every shard of `fill` using up to `threads` threads and
/// returns the results in search order.
pub fn run_sharded<T, F>(fill: &Fill, threads: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(Fill) -> T + Sync,
{
    let prefixes = fill.prefixes(SHARD_DEPTH);
    let shards: Vec<Fill> = prefixes.iter().filter_map(|p| fill.clone().with_prefix(p)).collect();
    let slots: Vec<Mutex<Option<T>>> = shards.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = threads.clamp(1, shards.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(shard) = shards.get(i) else { break };
                let result = work(shard.clone());
                *slots[i].lock().expect("no worker panicked") = Some(result);
            });
        }
    });
    slots.into_iter().map(|s| s.into_inner().expect("no worker panicked").expect("every shard ran")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use knotile_core::enumerate::{generate, SearchConstraints};

    #[test]
    fn shards_match_a_single_pass() {
        let fill = generate(SearchConstraints::new(4));
        let whole: Vec<String> = fill.clone().map(|m| m.to_line()).collect();
        for threads in [1, 3] {
            let parts = run_sharded(&fill, threads, |f| f.map(|m| m.to_line()).collect::<Vec<_>>());
            assert_eq!(parts.concat(), whole);
        }
        let counts = run_sharded(&fill, 2, Fill::count);
        assert_eq!(counts.iter().sum::<u64>(), 2594);
    }
}
