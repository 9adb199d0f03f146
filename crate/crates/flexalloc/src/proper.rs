//! Coloring pipeline for proper instances (no job's span strictly contains
//! another's).
//!
//! The pipeline turns rounded bandwidth amounts into a contiguous coloring:
//! amounts on a shrunken capacity `W' = floor((1 - eps) W)` are first laid
//! out on a color circle of `W'` positions, where properness makes the
//! greedy wrap-around assignment conflict-free. Blocks that received at
//! least `eps W` colors ("wide") are shrunk onto a coarse grid, a cheapest
//! place to cut the circle open is chosen, and the circle is unrolled into
//! the linear range `1..=W`: blocks crossing the cut either keep their
//! larger half (wide) or move to the spare top band `W'+1..=W` (narrow,
//! which all fit there because no two of them share a time).
//!
//! `proper_fsap` wraps the pipeline in a geometric sweep over guesses for
//! the optimum and races it against an exact placement of wide jobs alone.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::dp::{sweep_cells, CellLayout, DpJob};
use crate::frac::{
    ceil_mul, floor_mul, floor_mul_sq, ge_mul, strictly_between_zero_and_one, Frac,
};
use crate::lp::{round_lp_fba_unchecked, LpError};
use crate::model::{
    verify_circular, verify_fsap, BandwidthAllocation, Block, CircularColoring,
    ContiguousColoring, Instance, JobId,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProperError {
    NotProper,
    BadEpsilon(String),
    LoadExceedsModulus { time: u64, load: u64, modulus: u64 },
    TopBandOverflow { job: JobId, len: u64, band: u64 },
    Lp(LpError),
}

impl fmt::Display for ProperError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProperError::NotProper => write!(f, "instance is not proper"),
            ProperError::BadEpsilon(why) => write!(f, "bad epsilon: {why}"),
            ProperError::LoadExceedsModulus { time, load, modulus } => {
                write!(f, "load {load} at time {time} exceeds the circle size {modulus}")
            }
            ProperError::TopBandOverflow { job, len, band } => {
                write!(f, "block of job {job} has {len} colors, too many for the {band}-color top band")
            }
            ProperError::Lp(e) => write!(f, "relaxation stage failed: {e}"),
        }
    }
}

impl std::error::Error for ProperError {}

impl From<LpError> for ProperError {
    fn from(e: LpError) -> ProperError {
        ProperError::Lp(e)
    }
}

/// Lays bandwidth amounts out on a color circle of size `modulus`. Served
/// jobs are taken in `(start, end, id)` order and each receives the next
/// `amount` positions going around the circle. On a proper instance with
/// loads within the modulus this never conflicts: the blocks alive at any
/// time occupy one contiguous arc, and releases happen at its rear end.
pub fn circular_color(
    inst: &Instance,
    alloc: &BandwidthAllocation,
    modulus: u64,
) -> Result<CircularColoring, ProperError> {
    if !inst.is_proper() {
        return Err(ProperError::NotProper);
    }
    assert!(modulus >= 1, "circle needs at least one color");
    for t in inst.event_points() {
        let load: u64 = inst
            .jobs
            .iter()
            .filter(|j| j.contains(t))
            .map(|j| alloc.amount(j.id))
            .sum();
        if load > modulus {
            return Err(ProperError::LoadExceedsModulus {
                time: t,
                load,
                modulus,
            });
        }
    }

    let mut order: Vec<usize> = (0..inst.jobs.len())
        .filter(|&i| alloc.amount(inst.jobs[i].id) > 0)
        .collect();
    order.sort_by_key(|&i| {
        let j = &inst.jobs[i];
        (j.start, j.end, j.id)
    });
    let mut blocks = BTreeMap::new();
    let mut next = 1u64;
    for i in order {
        let j = &inst.jobs[i];
        let a = alloc.amount(j.id);
        blocks.insert(j.id, Block { first: next, len: a });
        next = (next - 1 + a) % modulus + 1;
    }
    let col = CircularColoring { modulus, blocks };
    verify_circular(inst, &col).expect("wrap-around assignment conflicts on a proper instance");
    Ok(col)
}

/// Moves every wide block (at least `eps * w` assigned colors) onto the
/// grid of pitch `g = max(1, floor(eps^2 w))`: the start is pushed forward
/// to the next grid line and the length is rounded down to a multiple of
/// `g`. The shrunk block sits inside the old one, so validity is free.
/// Blocks that cannot be aligned are left alone. Returns `g`.
pub fn shrink_wide_blocks(circ: &mut CircularColoring, eps: Frac, w: u64) -> u64 {
    let g = floor_mul_sq(eps, w).max(1);
    if g == 1 {
        return g;
    }
    let modulus = circ.modulus;
    for b in circ.blocks.values_mut() {
        if !ge_mul(b.len, eps, w) {
            continue;
        }
        let up = (b.first - 1).div_ceil(g) * g + 1;
        if up > modulus || up - b.first >= b.len {
            continue;
        }
        let len = (b.len - (up - b.first)) / g * g;
        if len == 0 {
            continue;
        }
        b.first = up;
        b.len = len;
    }
    g
}

/// Where to open the circle and what it costs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutEvaluation {
    /// The circle is cut between colors `cut` and `cut mod W' + 1`.
    pub cut: u64,
    /// Profit-weighted smaller halves of the wide blocks the cut splits.
    pub penalty: u64,
    /// Number of candidate positions examined.
    pub candidates: usize,
}

fn renumber(c: u64, cut: u64, modulus: u64) -> u64 {
    (c + modulus - cut - 1) % modulus + 1
}

/// Picks the cut position with the smallest wide-block penalty among the
/// wide blocks' boundary colors and the multiples of the grid pitch,
/// breaking ties toward the smallest color.
pub fn select_cut(inst: &Instance, circ: &CircularColoring, eps: Frac, w: u64, grid: u64) -> CutEvaluation {
    let m = circ.modulus;
    let mut cands: BTreeSet<u64> = BTreeSet::new();
    let mut at = grid;
    while at <= m {
        cands.insert(at);
        at += grid;
    }
    for b in circ.blocks.values() {
        if !ge_mul(b.len, eps, w) {
            continue;
        }
        cands.insert(if b.first == 1 { m } else { b.first - 1 });
        cands.insert((b.first - 1 + b.len - 1) % m + 1);
    }
    if cands.is_empty() {
        cands.insert(m);
    }

    let mut best: Option<(u128, u64)> = None;
    for &cut in &cands {
        let mut penalty: u128 = 0;
        for (id, b) in &circ.blocks {
            if !ge_mul(b.len, eps, w) {
                continue;
            }
            let nf = renumber(b.first, cut, m);
            if nf + b.len - 1 > m {
                let p1 = m - nf + 1;
                let p2 = b.len - p1;
                let profit = inst.job(*id).expect("colored job exists").profit;
                penalty += profit as u128 * p1.min(p2) as u128;
            }
        }
        if best.map_or(true, |(bp, _)| penalty < bp) {
            best = Some((penalty, cut));
        }
    }
    let (penalty, cut) = best.expect("at least one candidate");
    CutEvaluation {
        cut,
        penalty: penalty.try_into().expect("penalty fits u64"),
        candidates: cands.len(),
    }
}

/// Result of unrolling the circle at a cut.
#[derive(Debug, Clone)]
pub struct UncutOutcome {
    pub coloring: ContiguousColoring,
    pub profit: u64,
    pub circular_wide_profit: u64,
    pub final_wide_profit: u64,
    pub circular_narrow_profit: u64,
    pub final_narrow_profit: u64,
}

/// Renumbers colors so the cut becomes the seam between `W'` and `1`, then
/// repairs the blocks the cut splits: wide ones keep their larger half in
/// place (the earlier half on a tie), narrow ones move whole into the top
/// band `W'+1..=w`. Narrow crossing blocks never share a time (two blocks
/// at one time cannot both contain the seam colors), so one band serves
/// them all.
pub fn uncut_to_linear(
    inst: &Instance,
    circ: &CircularColoring,
    cut: u64,
    eps: Frac,
    w: u64,
) -> Result<UncutOutcome, ProperError> {
    let m = circ.modulus;
    assert!(w >= m, "top band cannot have negative size");
    let band = w - m;
    let mut blocks = BTreeMap::new();
    let mut circular_wide = 0u64;
    let mut final_wide = 0u64;
    let mut circular_narrow = 0u64;
    let mut final_narrow = 0u64;
    for (id, b) in &circ.blocks {
        let profit = inst.job(*id).expect("colored job exists").profit;
        let wide = ge_mul(b.len, eps, w);
        if wide {
            circular_wide += profit * b.len;
        } else {
            circular_narrow += profit * b.len;
        }
        let nf = renumber(b.first, cut, m);
        if nf + b.len - 1 <= m {
            blocks.insert(*id, Block { first: nf, len: b.len });
            if wide {
                final_wide += profit * b.len;
            } else {
                final_narrow += profit * b.len;
            }
        } else if wide {
            let p1 = m - nf + 1;
            let p2 = b.len - p1;
            let keep = if p1 >= p2 {
                Block { first: nf, len: p1 }
            } else {
                Block { first: 1, len: p2 }
            };
            final_wide += profit * keep.len;
            blocks.insert(*id, keep);
        } else {
            if b.len > band {
                return Err(ProperError::TopBandOverflow {
                    job: *id,
                    len: b.len,
                    band,
                });
            }
            blocks.insert(*id, Block { first: m + 1, len: b.len });
            final_narrow += profit * b.len;
        }
    }
    let coloring = ContiguousColoring { blocks };
    let profit = verify_fsap(inst, &coloring)
        .expect("unrolled coloring failed verification")
        .total;
    Ok(UncutOutcome {
        coloring,
        profit,
        circular_wide_profit: circular_wide,
        final_wide_profit: final_wide,
        circular_narrow_profit: circular_narrow,
        final_narrow_profit: final_narrow,
    })
}

/// Full record of one pipeline run.
#[derive(Debug, Clone)]
pub struct NarrowColorReport {
    pub coloring: ContiguousColoring,
    pub profit: u64,
    /// Exact optimum of the fractional relaxation the amounts came from.
    pub fractional: BigRational,
    pub circular_wide_profit: u64,
    pub final_wide_profit: u64,
    pub circular_narrow_profit: u64,
    pub final_narrow_profit: u64,
    pub cut: u64,
    pub cut_penalty: u64,
}

/// Rounded amounts, circle layout, shrink, cut, unroll. `guess` feeds the
/// wide-profit budget of the relaxation and `beta` scales it.
pub fn a_narrow_color(
    inst: &Instance,
    eps: Frac,
    beta: Frac,
    guess: u64,
) -> Result<NarrowColorReport, ProperError> {
    if !inst.is_proper() {
        return Err(ProperError::NotProper);
    }
    let one_minus = Frac::new(eps.denom() - eps.numer(), *eps.denom());
    let modulus = floor_mul(one_minus, inst.capacity);
    if modulus == 0 {
        return Err(ProperError::BadEpsilon(format!(
            "(1 - {eps}) of capacity {} rounds to zero colors",
            inst.capacity
        )));
    }
    let rounded = round_lp_fba_unchecked(inst, eps, beta, guess)?;
    let mut circ = circular_color(inst, &rounded.allocation, modulus)?;
    let grid = shrink_wide_blocks(&mut circ, eps, inst.capacity);
    let cut = select_cut(inst, &circ, eps, inst.capacity, grid);
    let out = uncut_to_linear(inst, &circ, cut.cut, eps, inst.capacity)?;
    Ok(NarrowColorReport {
        coloring: out.coloring,
        profit: out.profit,
        fractional: rounded.fractional,
        circular_wide_profit: out.circular_wide_profit,
        final_wide_profit: out.final_wide_profit,
        circular_narrow_profit: out.circular_narrow_profit,
        final_narrow_profit: out.final_narrow_profit,
        cut: cut.cut,
        cut_penalty: cut.penalty,
    })
}

/// A coloring with its verified profit.
#[derive(Debug, Clone)]
pub struct ScoredColoring {
    pub coloring: ContiguousColoring,
    pub profit: u64,
}

/// Exact placement of the wide jobs alone (maximum demand at least
/// `eps * W`), each forced to take at least `ceil(eps * W)` colors, on the
/// grid of pitch `max(1, floor(eps^2 W))`. At most `1/eps` wide jobs fit a
/// time, so the sweep stays small.
pub fn wide_only_dp(inst: &Instance, eps: Frac) -> Result<ScoredColoring, ProperError> {
    if !strictly_between_zero_and_one(eps) {
        return Err(ProperError::BadEpsilon(format!(
            "epsilon must be strictly between 0 and 1, got {eps}"
        )));
    }
    let w = inst.capacity;
    let g = floor_mul_sq(eps, w).max(1);
    let mut sizes = vec![g; (w / g) as usize];
    if w % g != 0 {
        sizes.push(w % g);
    }
    let layout = CellLayout::new(sizes);
    let min_colors = ceil_mul(eps, w);
    let jobs: Vec<DpJob> = inst
        .jobs
        .iter()
        .filter(|j| ge_mul(j.rmax, eps, w))
        .map(|j| DpJob {
            id: j.id,
            start: j.start,
            end: j.end,
            profit_per_color: j.profit,
            min_colors,
            max_colors: j.rmax,
        })
        .collect();
    let out = sweep_cells(&layout, &jobs);
    let coloring = ContiguousColoring {
        blocks: out.placements,
    };
    let profit = verify_fsap(inst, &coloring)
        .expect("wide-only placement failed verification")
        .total;
    Ok(ScoredColoring { coloring, profit })
}

/// Which candidate won inside [`proper_fsap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProperSource {
    WideOnly,
    NarrowColor { guess: u64 },
}

/// Result of [`proper_fsap`].
#[derive(Debug, Clone)]
pub struct ProperFsapRun {
    pub coloring: ContiguousColoring,
    pub profit: u64,
    pub source: ProperSource,
    /// The geometric guess ladder that was swept.
    pub guesses: Vec<u64>,
}

/// Approximate coloring for proper instances: race the wide-only placement
/// against the narrow pipeline run once per guess on a `(1 + eps/3)`
/// ladder up to the total profit bound, and keep the best verified result.
pub fn proper_fsap(inst: &Instance, eps: Frac) -> Result<ProperFsapRun, ProperError> {
    if !inst.is_proper() {
        return Err(ProperError::NotProper);
    }
    if !strictly_between_zero_and_one(eps) {
        return Err(ProperError::BadEpsilon(format!(
            "epsilon must be strictly between 0 and 1, got {eps}"
        )));
    }
    let eps_hat = Frac::new(
        *eps.numer(),
        eps.denom()
            .checked_mul(3)
            .expect("epsilon denominator fits after tripling"),
    );
    let beta = Frac::new(4, 5);

    let total: u128 = inst
        .jobs
        .iter()
        .map(|j| j.profit as u128 * j.rmax as u128)
        .sum();
    let total: u64 = total.try_into().expect("profit range fits u64");
    let guesses = guess_ladder(eps_hat, total);

    let wide = wide_only_dp(inst, eps)?;
    let mut best = ProperFsapRun {
        coloring: wide.coloring,
        profit: wide.profit,
        source: ProperSource::WideOnly,
        guesses: guesses.clone(),
    };
    for &guess in &guesses {
        // A single guess may hit a stage precondition; the sweep just moves
        // on, other guesses and the wide-only run keep the result sound.
        let Ok(report) = a_narrow_color(inst, eps_hat, beta, guess) else {
            continue;
        };
        if report.profit > best.profit {
            best.coloring = report.coloring;
            best.profit = report.profit;
            best.source = ProperSource::NarrowColor { guess };
        }
    }
    Ok(best)
}

/// Ascending geometric ladder `ceil((1 + step)^j)` capped by (and ending
/// at) `total`, so some rung is within a `1 + step` factor above any value
/// in `1..=total`.
fn guess_ladder(step: Frac, total: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if total == 0 {
        return out;
    }
    let one_plus = BigRational::new(
        (step.denom() + step.numer()).into(),
        (*step.denom()).into(),
    );
    let mut acc = BigRational::one();
    loop {
        let rung = acc.ceil().to_integer();
        let Some(rung) = rung.to_u64() else { break };
        if rung >= total {
            break;
        }
        if out.last() != Some(&rung) {
            out.push(rung);
        }
        acc *= &one_plus;
    }
    out.push(total);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Job;
    use crate::oracle::{oracle_fsap, DEFAULT_NODE_BUDGET};

    fn job(id: JobId, start: u64, end: u64, rmax: u64, profit: u64) -> Job {
        Job {
            id,
            start,
            end,
            rmin: 0,
            rmax,
            profit,
        }
    }

    fn alloc(pairs: &[(JobId, u64)]) -> BandwidthAllocation {
        BandwidthAllocation {
            amounts: pairs.iter().copied().collect(),
        }
    }

    #[test]
    fn circle_wraps_and_stays_valid() {
        let inst = Instance::new(
            4,
            vec![job(1, 0, 2, 4, 1), job(2, 2, 4, 4, 1), job(3, 3, 6, 4, 1)],
        )
        .unwrap();
        let a = alloc(&[(1, 3), (2, 2), (3, 2)]);
        let circ = circular_color(&inst, &a, 4).unwrap();
        assert_eq!(circ.blocks[&1], Block { first: 1, len: 3 });
        // Job 2's block {4, 1} wraps the seam.
        assert_eq!(circ.blocks[&2], Block { first: 4, len: 2 });
        assert_eq!(circ.blocks[&3], Block { first: 2, len: 2 });
    }

    #[test]
    fn circle_reuses_released_positions() {
        let inst = Instance::new(
            4,
            vec![job(1, 0, 2, 4, 1), job(2, 1, 4, 4, 1), job(3, 2, 5, 4, 1)],
        )
        .unwrap();
        let a = alloc(&[(1, 2), (2, 2), (3, 2)]);
        let circ = circular_color(&inst, &a, 4).unwrap();
        assert_eq!(circ.blocks[&1], Block { first: 1, len: 2 });
        assert_eq!(circ.blocks[&2], Block { first: 3, len: 2 });
        // Job 3 cycles back onto job 1's released positions while job 2 is
        // still alive on {3, 4}.
        assert_eq!(circ.blocks[&3], Block { first: 1, len: 2 });
    }

    #[test]
    fn circle_rejects_overload_and_nesting() {
        let inst = Instance::new(4, vec![job(1, 0, 2, 4, 1), job(2, 1, 3, 4, 1)]).unwrap();
        let err = circular_color(&inst, &alloc(&[(1, 3), (2, 2)]), 4).unwrap_err();
        assert_eq!(
            err,
            ProperError::LoadExceedsModulus {
                time: 1,
                load: 5,
                modulus: 4
            }
        );

        let nested = Instance::new(4, vec![job(1, 0, 5, 4, 1), job(2, 1, 3, 4, 1)]).unwrap();
        assert_eq!(
            circular_color(&nested, &alloc(&[(1, 1)]), 4).unwrap_err(),
            ProperError::NotProper
        );
    }

    #[test]
    fn shrink_aligns_wide_blocks() {
        // Pitch 1 (eps^2 W < 2) leaves everything untouched.
        let mut circ = CircularColoring {
            modulus: 12,
            blocks: [(1, Block { first: 2, len: 5 })].into_iter().collect(),
        };
        let g = shrink_wide_blocks(&mut circ, Frac::new(1, 4), 20);
        assert_eq!(g, 1);
        assert_eq!(circ.blocks[&1], Block { first: 2, len: 5 });

        // eps = 1/4, w = 33: pitch g = floor(33/16) = 2, wide from 8.25
        // assigned colors. Grid lines are the odd colors, so the start is
        // pushed 2 -> 3 and the length 8 rounds to a multiple of 2.
        let mut circ = CircularColoring {
            modulus: 30,
            blocks: [
                (1, Block { first: 2, len: 9 }),
                (2, Block { first: 15, len: 2 }),
            ]
            .into_iter()
            .collect(),
        };
        let g = shrink_wide_blocks(&mut circ, Frac::new(1, 4), 33);
        assert_eq!(g, 2);
        assert_eq!(circ.blocks[&1], Block { first: 3, len: 8 });
        // Narrow blocks are not touched.
        assert_eq!(circ.blocks[&2], Block { first: 15, len: 2 });
    }

    #[test]
    fn cut_prefers_cheap_positions() {
        // One wrapping wide block {7,8,1,2} and one wide block {2..=7} on
        // an 8-circle; every candidate costs something except between the
        // block boundaries.
        let inst = Instance::new(
            16,
            vec![job(1, 0, 2, 8, 2), job(2, 2, 4, 8, 1)],
        )
        .unwrap();
        let circ = CircularColoring {
            modulus: 8,
            blocks: [(1, Block { first: 7, len: 4 }), (2, Block { first: 2, len: 6 })]
                .into_iter()
                .collect(),
        };
        let eps = Frac::new(1, 4); // wide threshold 4 colors
        let cut = select_cut(&inst, &circ, eps, 16, 2);
        assert_eq!(cut.cut, 2);
        assert_eq!(cut.penalty, 1);
    }

    #[test]
    fn uncut_splits_crossing_wide_blocks() {
        // Circle of 6 inside capacity 8, cut at the seam (6), so colors keep
        // their numbers. Job 1's wide wrap {5,6,1,2} splits evenly and keeps
        // its earlier half {5,6}; job 2's {3,4} and job 3's narrow {6} pass
        // through whole.
        let inst = Instance::new(
            8,
            vec![job(1, 0, 2, 6, 3), job(2, 2, 4, 2, 5), job(3, 4, 6, 2, 1)],
        )
        .unwrap();
        let circ = CircularColoring {
            modulus: 6,
            blocks: [
                (1, Block { first: 5, len: 4 }),
                (2, Block { first: 3, len: 2 }),
                (3, Block { first: 6, len: 1 }),
            ]
            .into_iter()
            .collect(),
        };
        let eps = Frac::new(1, 4); // wide threshold: 2 colors
        let out = uncut_to_linear(&inst, &circ, 6, eps, 8).unwrap();
        assert_eq!(out.coloring.blocks[&1], Block { first: 5, len: 2 });
        assert_eq!(out.coloring.blocks[&2], Block { first: 3, len: 2 });
        assert_eq!(out.coloring.blocks[&3], Block { first: 6, len: 1 });
        assert_eq!(out.circular_wide_profit, 3 * 4 + 5 * 2);
        assert_eq!(out.final_wide_profit, 3 * 2 + 5 * 2);
        assert_eq!(out.circular_narrow_profit, 1);
        assert_eq!(out.final_narrow_profit, 1);
    }

    #[test]
    fn uncut_moves_crossing_narrow_to_top_band() {
        let inst = Instance::new(8, vec![job(1, 0, 2, 2, 1)]).unwrap();
        let circ = CircularColoring {
            modulus: 6,
            blocks: [(1, Block { first: 6, len: 2 })].into_iter().collect(),
        };
        // Wide threshold 4: the {6,1} block is narrow and crosses cut 6.
        let out = uncut_to_linear(&inst, &circ, 6, Frac::new(1, 2), 8).unwrap();
        assert_eq!(out.coloring.blocks[&1], Block { first: 7, len: 2 });
    }

    #[test]
    fn narrow_color_pipeline_end_to_end() {
        // Proper staircase, capacity 16, eps 1/4.
        let inst = Instance::new(
            16,
            vec![
                job(1, 0, 3, 8, 2),
                job(2, 1, 4, 6, 3),
                job(3, 2, 5, 2, 5),
                job(4, 4, 7, 8, 1),
            ],
        )
        .unwrap();
        let opt = oracle_fsap(&inst, DEFAULT_NODE_BUDGET).unwrap().profit;
        let rep = a_narrow_color(&inst, Frac::new(1, 4), Frac::new(4, 5), opt).unwrap();
        assert!(rep.profit > 0);
        // Narrow profit survives the cut exactly; wide keeps at least 3/4.
        assert_eq!(rep.final_narrow_profit, rep.circular_narrow_profit);
        assert!(4 * rep.final_wide_profit >= 3 * rep.circular_wide_profit);
        assert!(verify_fsap(&inst, &rep.coloring).is_ok());
    }

    #[test]
    fn wide_only_places_disjoint_runs() {
        let inst = Instance::new(
            10,
            vec![job(1, 0, 2, 10, 1), job(2, 2, 4, 6, 1)],
        )
        .unwrap();
        let run = wide_only_dp(&inst, Frac::new(1, 2)).unwrap();
        assert_eq!(run.profit, 16);
    }

    #[test]
    fn proper_fsap_beats_two_thirds_of_optimal() {
        let insts = vec![
            Instance::new(
                16,
                vec![
                    job(1, 0, 3, 8, 2),
                    job(2, 1, 4, 6, 3),
                    job(3, 2, 5, 2, 5),
                    job(4, 4, 7, 8, 1),
                ],
            )
            .unwrap(),
            Instance::new(
                18,
                vec![
                    job(1, 0, 2, 18, 1),
                    job(2, 1, 3, 9, 2),
                    job(3, 2, 4, 18, 1),
                    job(4, 3, 5, 9, 2),
                ],
            )
            .unwrap(),
        ];
        for inst in insts {
            let opt = oracle_fsap(&inst, DEFAULT_NODE_BUDGET).unwrap().profit;
            let run = proper_fsap(&inst, Frac::new(1, 4)).unwrap();
            assert!(run.profit <= opt);
            assert!(3 * run.profit >= 2 * opt, "profit {} vs opt {opt}", run.profit);
        }
    }

    #[test]
    fn proper_fsap_rejects_bad_inputs() {
        let nested = Instance::new(4, vec![job(1, 0, 5, 2, 1), job(2, 1, 3, 2, 1)]).unwrap();
        assert_eq!(
            proper_fsap(&nested, Frac::new(1, 4)).unwrap_err(),
            ProperError::NotProper
        );
        let ok = Instance::new(4, vec![job(1, 0, 2, 2, 1)]).unwrap();
        assert!(matches!(
            proper_fsap(&ok, Frac::new(5, 4)),
            Err(ProperError::BadEpsilon(_))
        ));
    }

    #[test]
    fn guess_ladder_shape() {
        let l = guess_ladder(Frac::new(1, 3), 10);
        assert_eq!(*l.last().unwrap(), 10);
        let mut sorted = l.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(l, sorted);
        assert_eq!(l[0], 1);
        assert!(guess_ladder(Frac::new(1, 3), 0).is_empty());
    }
}
