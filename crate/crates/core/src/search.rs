//! Exhaustive discovery of all Williamson quads of a small odd order.
//!
//! The search enumerates every ordered 4-tuple of symmetric ±1 sequences of
//! length `n` and keeps those passing the verification criterion. It is an
//! oracle, not a record-setter: the result sets anchor the doubling and
//! Hadamard test suites, so transparency beats cleverness. Two pruning
//! layers are available — a row-sum filter and early abort on the first
//! nonzero PAF sum — and both can be disabled to cross-check the pruned run
//! against a plain pass that verifies every tuple with the dense reference.
//!
//! Work is sharded by the first sequence's index; shards share nothing and
//! merge in index order, so reports are identical regardless of thread count.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bits::PackedSequence;
use crate::quad::WilliamsonQuad;
use crate::seq::{BinarySequence, Sign};

/// Orders above this cannot be enumerated with one index word.
pub const MAX_SEARCHABLE_ORDER: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search requires an odd order, got {0}")]
    EvenOrder(usize),
    #[error("order {n} exceeds the search limit {limit}; raise --limit to override")]
    AboveLimit { n: usize, limit: usize },
    #[error("order {n} exceeds the maximum searchable order {max}")]
    TooLarge { n: usize, max: usize },
}

/// Knobs for [`search_williamson`].
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Largest order accepted without an explicit override.
    pub limit: usize,
    /// Apply the row-sum filter and early PAF abort. Disabling routes every
    /// tuple through the dense verifier instead.
    pub prune: bool,
    /// Number of shards to run in parallel; 1 means fully sequential.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            limit: 13,
            prune: true,
            jobs: 1,
        }
    }
}

/// Outcome of an exhaustive search at one order.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub order: usize,
    /// Ordered 4-tuples enumerated (always `2^(2(n+1))`).
    pub candidates_examined: u64,
    /// Ordered 4-tuples passing verification.
    pub raw_count: u64,
    /// Deduplicated normalized quads, in sorted order.
    pub quads: Vec<WilliamsonQuad>,
    pub elapsed: Duration,
}

/// Yields the `2^((n+1)/2)` symmetric ±1 sequences of odd length `n`, each
/// exactly once, ordered by the text order of their free prefix
/// `x_0..x_{(n-1)/2}` (the remaining entries are the mirror image).
pub fn enumerate_symmetric(
    n: usize,
) -> Result<impl Iterator<Item = BinarySequence>, SearchError> {
    if n == 0 || n % 2 == 0 {
        return Err(SearchError::EvenOrder(n));
    }
    if n > MAX_SEARCHABLE_ORDER {
        return Err(SearchError::TooLarge {
            n,
            max: MAX_SEARCHABLE_ORDER,
        });
    }
    let prefix_len = (n + 1) / 2;
    Ok((0..1u64 << prefix_len).map(move |idx| {
        let mut entries = vec![Sign::Plus; n];
        for (j, entry) in entries.iter_mut().take(prefix_len).enumerate() {
            // Most significant prefix bit first, '+' before '-'.
            if idx >> (prefix_len - 1 - j) & 1 == 1 {
                *entry = Sign::Minus;
            }
        }
        for k in prefix_len..n {
            entries[k] = entries[n - k];
        }
        BinarySequence::new(entries).expect("n >= 1")
    }))
}

/// Sound pruning predicate: summing the verification criterion over all
/// shifts forces the four squared row sums to total exactly `4n`, so any
/// tuple failing this cannot be a Williamson quad.
pub fn sum_of_squares_filter(sums: [i64; 4], n: usize) -> bool {
    sums.iter().map(|s| s * s).sum::<i64>() == 4 * n as i64
}

struct ShardOutcome {
    candidates: u64,
    raw: u64,
    found: Vec<[u32; 4]>,
}

/// Examines all ordered 4-tuples of symmetric sequences of length `n` and
/// reports every Williamson quad. `raw_count` counts ordered tuples; the
/// report's quad list is normalized and deduplicated.
pub fn search_williamson(
    n: usize,
    options: &SearchOptions,
) -> Result<SearchReport, SearchError> {
    if n == 0 || n % 2 == 0 {
        return Err(SearchError::EvenOrder(n));
    }
    if n > options.limit {
        return Err(SearchError::AboveLimit {
            n,
            limit: options.limit,
        });
    }
    let start = Instant::now();
    let seqs: Vec<BinarySequence> = enumerate_symmetric(n)?.collect();
    let count = seqs.len();

    // Per-sequence data for the pruned path: PAF values at shifts 1..=n/2
    // (computed bit-parallel) and row sums.
    let half = n / 2;
    let packed: Vec<PackedSequence> = seqs
        .iter()
        .map(|s| PackedSequence::from_sequence(s).expect("order fits one word"))
        .collect();
    let spectra: Vec<Vec<i64>> = packed
        .iter()
        .map(|p| (1..=half as i64).map(|s| p.paf(s)).collect())
        .collect();
    let row_sums: Vec<i64> = packed.iter().map(|p| p.row_sum()).collect();

    let jobs = options.jobs.max(1).min(count);
    let chunk = count.div_ceil(jobs);
    let ranges: Vec<std::ops::Range<usize>> = (0..jobs)
        .map(|j| (j * chunk).min(count)..((j + 1) * chunk).min(count))
        .collect();

    let run_shard = |range: std::ops::Range<usize>| -> ShardOutcome {
        if options.prune {
            pruned_shard(range, count, n, &spectra, &row_sums)
        } else {
            plain_shard(range, count, &seqs)
        }
    };

    let outcomes: Vec<ShardOutcome> = if jobs == 1 {
        vec![run_shard(0..count)]
    } else {
        let run_shard = &run_shard;
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|range| scope.spawn(move || run_shard(range)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    let mut candidates_examined = 0u64;
    let mut raw_count = 0u64;
    let mut normalized = BTreeSet::new();
    for outcome in outcomes {
        candidates_examined += outcome.candidates;
        raw_count += outcome.raw;
        for [a, b, c, d] in outcome.found {
            let quad = WilliamsonQuad::new(
                seqs[a as usize].clone(),
                seqs[b as usize].clone(),
                seqs[c as usize].clone(),
                seqs[d as usize].clone(),
            )
            .expect("equal lengths");
            normalized.insert(quad.normalize());
        }
    }
    let quads: Vec<WilliamsonQuad> = normalized.into_iter().collect();
    for quad in &quads {
        debug_assert!(quad.verify().is_williamson());
    }

    Ok(SearchReport {
        order: n,
        candidates_examined,
        raw_count,
        quads,
        elapsed: start.elapsed(),
    })
}

/// Fast path: precomputed spectra, row-sum filter, early abort on the first
/// nonzero shift.
fn pruned_shard(
    range: std::ops::Range<usize>,
    count: usize,
    n: usize,
    spectra: &[Vec<i64>],
    row_sums: &[i64],
) -> ShardOutcome {
    let target = 4 * n as i64;
    let mut outcome = ShardOutcome {
        candidates: 0,
        raw: 0,
        found: Vec::new(),
    };
    for a in range {
        let sq_a = row_sums[a] * row_sums[a];
        for b in 0..count {
            let sq_ab = sq_a + row_sums[b] * row_sums[b];
            for c in 0..count {
                let sq_abc = sq_ab + row_sums[c] * row_sums[c];
                for d in 0..count {
                    outcome.candidates += 1;
                    if sq_abc + row_sums[d] * row_sums[d] != target {
                        continue;
                    }
                    let ok = (0..n / 2).all(|s| {
                        spectra[a][s] + spectra[b][s] + spectra[c][s] + spectra[d][s] == 0
                    });
                    if ok {
                        outcome.raw += 1;
                        outcome.found.push([a as u32, b as u32, c as u32, d as u32]);
                    }
                }
            }
        }
    }
    outcome
}

/// No-pruning path: every tuple goes through the dense verifier. Slow, but
/// independent of the packed arithmetic — the cross-check oracle.
fn plain_shard(
    range: std::ops::Range<usize>,
    count: usize,
    seqs: &[BinarySequence],
) -> ShardOutcome {
    let mut outcome = ShardOutcome {
        candidates: 0,
        raw: 0,
        found: Vec::new(),
    };
    for a in range {
        for b in 0..count {
            for c in 0..count {
                for d in 0..count {
                    outcome.candidates += 1;
                    let quad = WilliamsonQuad::new(
                        seqs[a].clone(),
                        seqs[b].clone(),
                        seqs[c].clone(),
                        seqs[d].clone(),
                    )
                    .expect("equal lengths");
                    if quad.verify().is_williamson() {
                        outcome.raw += 1;
                        outcome.found.push([a as u32, b as u32, c as u32, d as u32]);
                    }
                }
            }
        }
    }
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_rejects_even_or_zero_order() {
        assert!(enumerate_symmetric(0).is_err());
        assert!(enumerate_symmetric(4).is_err());
    }

    #[test]
    fn enumerate_order_one() {
        let seqs: Vec<String> = enumerate_symmetric(1)
            .unwrap()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(seqs, vec!["+", "-"]);
    }

    #[test]
    fn enumerate_order_three() {
        let seqs: Vec<String> = enumerate_symmetric(3)
            .unwrap()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(seqs, vec!["+++", "+--", "-++", "---"]);
    }

    #[test]
    fn enumerate_order_five_counts_and_symmetry() {
        let seqs: Vec<BinarySequence> = enumerate_symmetric(5).unwrap().collect();
        assert_eq!(seqs.len(), 8);
        assert!(seqs.iter().all(|s| s.is_symmetric()));
        let unique: std::collections::BTreeSet<_> = seqs.iter().collect();
        assert_eq!(unique.len(), 8);
    }

    #[test]
    fn filter_examples() {
        assert!(sum_of_squares_filter([3, -1, -1, -1], 3));
        assert!(!sum_of_squares_filter([3, 3, 3, 3], 3));
        assert!(sum_of_squares_filter([1, 1, 1, 1], 1));
    }

    #[test]
    fn search_order_one() {
        let report = search_williamson(1, &SearchOptions::default()).unwrap();
        assert_eq!(report.candidates_examined, 16);
        assert_eq!(report.raw_count, 16);
        assert_eq!(report.quads.len(), 1);
        assert_eq!(
            report.quads[0],
            WilliamsonQuad::from_rows(["+", "+", "+", "+"]).unwrap()
        );
    }

    #[test]
    fn search_order_three() {
        let report = search_williamson(3, &SearchOptions::default()).unwrap();
        assert_eq!(report.candidates_examined, 256);
        assert_eq!(report.raw_count, 64);
        assert_eq!(
            report.quads,
            vec![WilliamsonQuad::from_rows(["+++", "+--", "+--", "+--"]).unwrap()]
        );
    }

    #[test]
    fn search_rejects_even_order_and_enforces_limit() {
        assert!(matches!(
            search_williamson(4, &SearchOptions::default()),
            Err(SearchError::EvenOrder(4))
        ));
        let tight = SearchOptions {
            limit: 5,
            ..SearchOptions::default()
        };
        assert!(matches!(
            search_williamson(7, &tight),
            Err(SearchError::AboveLimit { n: 7, limit: 5 })
        ));
    }

    fn strip_elapsed(report: &SearchReport) -> (usize, u64, u64, Vec<WilliamsonQuad>) {
        (
            report.order,
            report.candidates_examined,
            report.raw_count,
            report.quads.clone(),
        )
    }

    #[test]
    fn pruning_is_sound_at_small_orders() {
        for n in [1, 3, 5] {
            let pruned = search_williamson(n, &SearchOptions::default()).unwrap();
            let plain = search_williamson(
                n,
                &SearchOptions {
                    prune: false,
                    ..SearchOptions::default()
                },
            )
            .unwrap();
            assert_eq!(strip_elapsed(&pruned), strip_elapsed(&plain), "order {n}");
        }
    }

    #[test]
    fn sharded_runs_are_deterministic() {
        for jobs in [1, 2, 3, 8, 64] {
            let report = search_williamson(
                5,
                &SearchOptions {
                    jobs,
                    ..SearchOptions::default()
                },
            )
            .unwrap();
            let reference = search_williamson(5, &SearchOptions::default()).unwrap();
            assert_eq!(strip_elapsed(&report), strip_elapsed(&reference));
        }
    }

    #[test]
    fn every_reported_quad_verifies() {
        let report = search_williamson(5, &SearchOptions::default()).unwrap();
        assert!(report.raw_count >= report.quads.len() as u64);
        for quad in &report.quads {
            assert!(quad.verify().is_williamson());
            assert_eq!(quad, &quad.normalize());
        }
    }
}
