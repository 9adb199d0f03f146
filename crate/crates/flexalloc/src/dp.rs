//! Exhaustive sweep over contiguous placements on a fixed cell grid.
//!
//! The color range `1..=W` is pre-cut into cells of given sizes. Jobs are
//! processed in start order; each job is either skipped or assigned a run of
//! consecutive free cells whose total size lies within its color bounds, and
//! the run stays occupied until the job's end. States are the sets of
//! occupied runs still alive, deduplicated per step by maximum profit. The
//! state space is exponential in the worst case; callers keep the grids at
//! the handful-of-cells scale where this is exact and fast.

use std::collections::{BTreeMap, HashMap};

use crate::model::{Block, JobId};

/// A partition of the color range into consecutive cells.
pub struct CellLayout {
    sizes: Vec<u64>,
    offsets: Vec<u64>,
}

impl CellLayout {
    /// Builds a layout from positive cell sizes, left to right.
    pub fn new(sizes: Vec<u64>) -> CellLayout {
        assert!(!sizes.is_empty(), "cell layout needs at least one cell");
        assert!(sizes.iter().all(|&s| s > 0), "cell sizes must be positive");
        assert!(sizes.len() <= u16::MAX as usize, "too many cells");
        let mut offsets = Vec::with_capacity(sizes.len() + 1);
        let mut acc = 0u64;
        offsets.push(0);
        for &s in &sizes {
            acc += s;
            offsets.push(acc);
        }
        CellLayout { sizes, offsets }
    }

    pub fn cell_count(&self) -> usize {
        self.sizes.len()
    }

    /// Total number of colors covered by the layout.
    pub fn total_colors(&self) -> u64 {
        *self.offsets.last().unwrap()
    }

    /// First color of the given cell (1-based colors).
    pub fn first_color(&self, cell: usize) -> u64 {
        self.offsets[cell] + 1
    }

    /// Combined size of cells `a..=b`.
    pub fn span(&self, a: usize, b: usize) -> u64 {
        self.offsets[b + 1] - self.offsets[a]
    }
}

/// One job as seen by the sweep.
pub struct DpJob {
    pub id: JobId,
    pub start: u64,
    pub end: u64,
    /// Profit contributed per assigned color.
    pub profit_per_color: u64,
    /// Smallest acceptable run size; the job is skipped rather than placed
    /// below this.
    pub min_colors: u64,
    /// Largest acceptable run size.
    pub max_colors: u64,
}

/// Result of a sweep: the best profit and the runs that achieve it.
pub struct DpOutcome {
    pub profit: u64,
    pub placements: BTreeMap<JobId, Block>,
}

// A live run packed as cell_from | cell_to << 16 | end_index << 32.
fn pack(a: u16, b: u16, end_idx: u16) -> u64 {
    a as u64 | (b as u64) << 16 | (end_idx as u64) << 32
}

fn run_cells(run: u64) -> (usize, usize) {
    ((run & 0xffff) as usize, ((run >> 16) & 0xffff) as usize)
}

fn run_end_idx(run: u64) -> usize {
    (run >> 32) as usize
}

struct Entry {
    state: Vec<u64>,
    profit: u64,
    parent: usize,
    placed: Option<(u16, u16)>,
}

/// Finds a maximum-profit set of placements for `jobs` on `layout`.
pub fn sweep_cells(layout: &CellLayout, jobs: &[DpJob]) -> DpOutcome {
    let mut order: Vec<usize> = (0..jobs.len()).collect();
    order.sort_by_key(|&i| (jobs[i].start, jobs[i].end, jobs[i].id));

    let mut ends: Vec<u64> = jobs.iter().map(|j| j.end).collect();
    ends.sort_unstable();
    ends.dedup();
    assert!(ends.len() <= u16::MAX as usize, "too many distinct ends");

    let mut levels: Vec<Vec<Entry>> = vec![vec![Entry {
        state: Vec::new(),
        profit: 0,
        parent: usize::MAX,
        placed: None,
    }]];

    for (li, &ji) in order.iter().enumerate() {
        let job = &jobs[ji];
        let end_idx = ends.binary_search(&job.end).unwrap() as u16;
        let mut next: Vec<Entry> = Vec::new();
        let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
        for pi in 0..levels[li].len() {
            let (profit, kept) = {
                let e = &levels[li][pi];
                let kept: Vec<u64> = e
                    .state
                    .iter()
                    .copied()
                    .filter(|&r| ends[run_end_idx(r)] > job.start)
                    .collect();
                (e.profit, kept)
            };
            push_entry(&mut next, &mut seen, kept.clone(), profit, pi, None);
            for (a, b) in free_runs(layout, &kept, job.min_colors, job.max_colors) {
                let mut state = kept.clone();
                let run = pack(a, b, end_idx);
                let at = state.partition_point(|&r| (r & 0xffff) < a as u64);
                state.insert(at, run);
                let gain = job.profit_per_color * layout.span(a as usize, b as usize);
                push_entry(&mut next, &mut seen, state, profit + gain, pi, Some((a, b)));
            }
        }
        levels.push(next);
    }

    let last = levels.len() - 1;
    let mut best = 0usize;
    for (i, e) in levels[last].iter().enumerate() {
        if e.profit > levels[last][best].profit {
            best = i;
        }
    }

    let mut placements = BTreeMap::new();
    let mut level = last;
    let mut at = best;
    while level > 0 {
        let e = &levels[level][at];
        if let Some((a, b)) = e.placed {
            let job = &jobs[order[level - 1]];
            placements.insert(
                job.id,
                Block {
                    first: layout.first_color(a as usize),
                    len: layout.span(a as usize, b as usize),
                },
            );
        }
        at = e.parent;
        level -= 1;
    }

    DpOutcome {
        profit: levels[last][best].profit,
        placements,
    }
}

fn push_entry(
    next: &mut Vec<Entry>,
    seen: &mut HashMap<Vec<u64>, usize>,
    state: Vec<u64>,
    profit: u64,
    parent: usize,
    placed: Option<(u16, u16)>,
) {
    match seen.get(&state) {
        Some(&i) => {
            if profit > next[i].profit {
                next[i].profit = profit;
                next[i].parent = parent;
                next[i].placed = placed;
            }
        }
        None => {
            seen.insert(state.clone(), next.len());
            next.push(Entry {
                state,
                profit,
                parent,
                placed,
            });
        }
    }
}

/// All runs of consecutive free cells whose size sum lies in `[min, max]`.
fn free_runs(layout: &CellLayout, state: &[u64], min: u64, max: u64) -> Vec<(u16, u16)> {
    let mut out = Vec::new();
    let mut gap_from = 0usize;
    let mut gaps: Vec<(usize, usize)> = Vec::new();
    for &run in state {
        let (a, b) = run_cells(run);
        if a > gap_from {
            gaps.push((gap_from, a - 1));
        }
        gap_from = b + 1;
    }
    if gap_from < layout.cell_count() {
        gaps.push((gap_from, layout.cell_count() - 1));
    }
    for (lo, hi) in gaps {
        for a in lo..=hi {
            for b in a..=hi {
                let span = layout.span(a, b);
                if span > max {
                    break;
                }
                if span >= min {
                    out.push((a as u16, b as u16));
                }
            }
        }
    }
    out
}
