//! Exhaustive scans over the full step space of one length.
//!
//! Paths of length `len` are indexed by the integers `0..2^len`
//! ([`Path::from_code`]), so a scan is just a fold over an integer range.
//! That makes the hot verification loops data-parallel: with the `parallel`
//! feature (on by default) the range is partitioned across threads by
//! rayon; without it the same fold runs on one thread. Both flavours are
//! exported so they can be compared directly (see the `parallel_scan`
//! bench).
//!
//! Results are independent of the schedule: counting is commutative and
//! tallies merge into ordered maps.

use std::collections::BTreeMap;

use crate::path::Path;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

fn code_range(len: usize) -> std::ops::Range<u64> {
    assert!(len < 63, "scan length {len} out of range");
    0..1u64 << len
}

/// Number of length-`len` paths satisfying `pred`, single-threaded.
pub fn count_matching_seq<F>(len: usize, pred: F) -> u64
where
    F: Fn(&Path) -> bool,
{
    code_range(len)
        .filter(|&code| pred(&Path::from_code(len, code)))
        .count() as u64
}

/// Number of length-`len` paths satisfying `pred`, partitioned across the
/// rayon pool.
#[cfg(feature = "parallel")]
pub fn count_matching_par<F>(len: usize, pred: F) -> u64
where
    F: Fn(&Path) -> bool + Sync,
{
    code_range(len)
        .into_par_iter()
        .filter(|&code| pred(&Path::from_code(len, code)))
        .count() as u64
}

/// Number of length-`len` paths satisfying `pred`.
pub fn count_matching<F>(len: usize, pred: F) -> u64
where
    F: Fn(&Path) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        count_matching_par(len, pred)
    }
    #[cfg(not(feature = "parallel"))]
    {
        count_matching_seq(len, pred)
    }
}

/// Tally of length-`len` paths by the key returned from `classify`
/// (`None` drops the path), single-threaded.
pub fn tally_matching_seq<K, F>(len: usize, classify: F) -> BTreeMap<K, u64>
where
    K: Ord,
    F: Fn(&Path) -> Option<K>,
{
    let mut tally = BTreeMap::new();
    for code in code_range(len) {
        if let Some(key) = classify(&Path::from_code(len, code)) {
            *tally.entry(key).or_insert(0) += 1;
        }
    }
    tally
}

/// Tally of length-`len` paths by key, partitioned across the rayon pool.
#[cfg(feature = "parallel")]
pub fn tally_matching_par<K, F>(len: usize, classify: F) -> BTreeMap<K, u64>
where
    K: Ord + Send,
    F: Fn(&Path) -> Option<K> + Sync,
{
    code_range(len)
        .into_par_iter()
        .fold(BTreeMap::new, |mut tally, code| {
            if let Some(key) = classify(&Path::from_code(len, code)) {
                *tally.entry(key).or_insert(0u64) += 1;
            }
            tally
        })
        .reduce(BTreeMap::new, |mut left, right| {
            for (key, count) in right {
                *left.entry(key).or_insert(0) += count;
            }
            left
        })
}

/// Tally of length-`len` paths by key.
pub fn tally_matching<K, F>(len: usize, classify: F) -> BTreeMap<K, u64>
where
    K: Ord + Send,
    F: Fn(&Path) -> Option<K> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        tally_matching_par(len, classify)
    }
    #[cfg(not(feature = "parallel"))]
    {
        tally_matching_seq(len, classify)
    }
}

/// Length-`len` paths satisfying `pred`, collected in lexicographic order.
pub fn collect_matching<F>(len: usize, pred: F) -> Vec<Path>
where
    F: Fn(&Path) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        code_range(len)
            .into_par_iter()
            .map(|code| Path::from_code(len, code))
            .filter(|path| pred(path))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        code_range(len)
            .map(|code| Path::from_code(len, code))
            .filter(|path| pred(path))
            .collect()
    }
}
