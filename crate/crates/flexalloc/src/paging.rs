//! Exact solver for unit-profit bandwidth allocation, plus the maximum
//! k-colorable subgraph reduction built on top of it.
//!
//! The solver sweeps interval endpoints left to right and manages colors the
//! way an offline cache manages pages: when a newly started job wants colors
//! and none are free, it steals them from active jobs that keep them longest
//! (largest end first), never below a victim's mandatory minimum, and for
//! plain profit top-ups only from victims that outlive the thief. Amounts
//! are read off when a job's right endpoint is processed.
//!
//! Event order at equal coordinates: right endpoints first, then left
//! endpoints by increasing end. "Started earlier" is meant in this processing
//! order, so a job processed earlier at the same coordinate counts as started
//! before the ones after it.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::fmt;

use crate::model::{BandwidthAllocation, Instance, JobId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PagingError {
    /// Mandatory minima exceed capacity at time `t`; no allocation exists.
    Infeasible { time: u64, demand: u64, capacity: u64 },
}

impl fmt::Display for PagingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PagingError::Infeasible { time, demand, capacity } => write!(
                f,
                "mandatory minima sum to {demand} at t={time}, exceeding capacity {capacity}"
            ),
        }
    }
}

impl std::error::Error for PagingError {}

/// Allocation plus the color sets held at release time and an operation
/// counter (heap operations + color moves) for complexity instrumentation.
#[derive(Debug, Clone)]
pub struct PagingRun {
    pub allocation: BandwidthAllocation,
    pub final_colors: BTreeMap<JobId, Vec<u64>>,
    pub ops: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Event {
    Right,
    Left,
}

/// Optimal total amount for every feasible instance under unit profits; for
/// general profits the amounts are still range- and capacity-feasible.
pub fn paging_fba(inst: &Instance) -> Result<BandwidthAllocation, PagingError> {
    paging_fba_run(inst).map(|r| r.allocation)
}

/// As `paging_fba`, but also reports final color sets and operation counts.
pub fn paging_fba_run(inst: &Instance) -> Result<PagingRun, PagingError> {
    feasibility_check(inst)?;

    let n = inst.jobs.len();
    // (coordinate, kind, end, job index); rights sort before lefts at a
    // coordinate, simultaneous lefts by increasing end
    let mut events: Vec<(u64, Event, u64, usize)> = Vec::with_capacity(2 * n);
    for (idx, j) in inst.jobs.iter().enumerate() {
        events.push((j.start, Event::Left, j.end, idx));
        events.push((j.end, Event::Right, j.end, idx));
    }
    events.sort_unstable_by_key(|&(t, kind, end, idx)| (t, kind == Event::Left, end, idx));

    let mut ops: u64 = 0;
    let mut avail: BTreeSet<u64> = (1..=inst.capacity).collect();
    let mut held: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); n];
    let mut active: Vec<bool> = vec![false; n];
    // steal candidates by decreasing end, ties lowest id first; entries go
    // stale when a job is released or loses its surplus and are dropped lazily
    let mut candidates: BinaryHeap<(u64, Reverse<JobId>, usize)> = BinaryHeap::new();
    let mut allocation = BandwidthAllocation::default();
    let mut final_colors: BTreeMap<JobId, Vec<u64>> = BTreeMap::new();

    for (_, kind, _, idx) in events {
        let job = &inst.jobs[idx];
        match kind {
            Event::Right => {
                ops += 1;
                active[idx] = false;
                let colors = std::mem::take(&mut held[idx]);
                let amount = colors.len() as u64;
                ops += amount;
                if amount > 0 {
                    allocation.amounts.insert(job.id, amount);
                }
                let list: Vec<u64> = colors.iter().copied().collect();
                avail.extend(colors);
                final_colors.insert(job.id, list);
            }
            Event::Left => {
                active[idx] = true;
                // serve the mandatory minimum: free colors first, then steal
                // from any active job holding more than its own minimum,
                // longest-living victims first
                let mut need = job.rmin;
                while need > 0 {
                    let Some(c) = avail.pop_first() else { break };
                    held[idx].insert(c);
                    need -= 1;
                    ops += 1;
                }
                while need > 0 {
                    let (vend, vid, victim) = pop_candidate(&mut candidates, &active, &held, inst, &mut ops)
                        .expect("feasibility check guarantees a victim");
                    let surplus = held[victim].len() as u64 - inst.jobs[victim].rmin;
                    let take = surplus.min(need);
                    move_colors(&mut held, victim, idx, take, &mut ops);
                    need -= take;
                    if surplus > take {
                        candidates.push((vend, Reverse(vid), victim));
                        ops += 1;
                    }
                }
                // top up beyond the minimum: free colors first, then steal
                // from jobs that started earlier and end strictly later
                let mut want = job.rmax - held[idx].len() as u64;
                while want > 0 {
                    let Some(c) = avail.pop_first() else { break };
                    held[idx].insert(c);
                    want -= 1;
                    ops += 1;
                }
                while want > 0 {
                    let Some((vend, vid, victim)) = pop_candidate(&mut candidates, &active, &held, inst, &mut ops)
                    else {
                        break;
                    };
                    if vend <= job.end {
                        // nothing outlives this job; keep the entry for others
                        candidates.push((vend, Reverse(vid), victim));
                        ops += 1;
                        break;
                    }
                    let surplus = held[victim].len() as u64 - inst.jobs[victim].rmin;
                    let take = surplus.min(want);
                    move_colors(&mut held, victim, idx, take, &mut ops);
                    want -= take;
                    if surplus > take {
                        candidates.push((vend, Reverse(vid), victim));
                        ops += 1;
                    }
                }
                if held[idx].len() as u64 > job.rmin {
                    candidates.push((job.end, Reverse(job.id), idx));
                    ops += 1;
                }
            }
        }
    }

    debug_assert_eq!(avail.len() as u64, inst.capacity);
    Ok(PagingRun { allocation, final_colors, ops })
}

fn pop_candidate(
    candidates: &mut BinaryHeap<(u64, Reverse<JobId>, usize)>,
    active: &[bool],
    held: &[BTreeSet<u64>],
    inst: &Instance,
    ops: &mut u64,
) -> Option<(u64, JobId, usize)> {
    while let Some((end, Reverse(id), idx)) = candidates.pop() {
        *ops += 1;
        if active[idx] && held[idx].len() as u64 > inst.jobs[idx].rmin {
            return Some((end, id, idx));
        }
    }
    None
}

/// Moves `count` colors from the top of the victim's set to the thief.
fn move_colors(held: &mut [BTreeSet<u64>], victim: usize, thief: usize, count: u64, ops: &mut u64) {
    for _ in 0..count {
        let c = held[victim].pop_last().expect("victim has surplus");
        held[thief].insert(c);
        *ops += 1;
    }
}

/// Mandatory minima must fit at every left endpoint.
fn feasibility_check(inst: &Instance) -> Result<(), PagingError> {
    let mut deltas: Vec<(u64, i64)> = Vec::with_capacity(inst.jobs.len() * 2);
    for j in &inst.jobs {
        if j.rmin > 0 {
            deltas.push((j.start, j.rmin as i64));
            deltas.push((j.end, -(j.rmin as i64)));
        }
    }
    deltas.sort_unstable();
    let mut load: i64 = 0;
    let mut i = 0;
    while i < deltas.len() {
        let t = deltas[i].0;
        while i < deltas.len() && deltas[i].0 == t {
            load += deltas[i].1;
            i += 1;
        }
        if load > inst.capacity as i64 {
            return Err(PagingError::Infeasible {
                time: t,
                demand: load as u64,
                capacity: inst.capacity,
            });
        }
    }
    Ok(())
}

/// A maximum subset of the given intervals that admits a k-coloring (one
/// color per selected interval, intersecting selections differently
/// colored), with the witness color per selected interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KColorableResult {
    /// indices into the input slice, ascending
    pub selected: Vec<usize>,
    /// witness color in `1..=k` per selected index
    pub channel: BTreeMap<usize, u64>,
}

/// Reduces to unit-demand paging with capacity `k`: selected intervals are
/// those holding their color at release time. A held color never changes
/// under unit demand, so it doubles as the witness channel.
pub fn max_k_colorable(intervals: &[(u64, u64)], k: u64) -> KColorableResult {
    assert!(k >= 1, "need at least one color");
    let jobs: Vec<crate::model::Job> = intervals
        .iter()
        .enumerate()
        .map(|(i, (s, e))| crate::model::Job {
            id: i as JobId,
            start: *s,
            end: *e,
            rmin: 0,
            rmax: 1,
            profit: 1,
        })
        .collect();
    let inst = Instance::new(k, jobs).expect("derived instance is valid");
    let run = paging_fba_run(&inst).expect("zero minima are always feasible");
    let mut selected = Vec::new();
    let mut channel = BTreeMap::new();
    for (id, colors) in &run.final_colors {
        if let Some(&c) = colors.first() {
            selected.push(*id as usize);
            channel.insert(*id as usize, c);
        }
    }
    selected.sort_unstable();
    KColorableResult { selected, channel }
}

/// Maximum independent set of intervals: the one-color case.
pub fn max_independent_set(intervals: &[(u64, u64)]) -> Vec<usize> {
    max_k_colorable(intervals, 1).selected
}
