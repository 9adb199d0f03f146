//! Fractional relaxation and rounding for bandwidth amounts on a shrunken
//! capacity.
//!
//! Jobs whose maximum demand reaches `eps * W` are "wide"; each gets a
//! small variable `x` capped at `ceil(eps * W)` like everyone else, plus an
//! overflow variable `y` for the rest of its demand. Wide overflow profit
//! is capped by a budget row at `beta * (1 - eps)` times a guessed optimum,
//! and every start time gets a capacity row at `floor((1 - eps) * W)`.
//! Rounding floors the overflow parts and re-optimizes the small parts; the
//! re-solve's constraint matrix has consecutive ones per column, so its
//! basic optima are integral and nothing is lost in the second step.

pub mod simplex;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::frac::{ceil_mul, floor_mul, ge_mul, strictly_between_zero_and_one, Frac};
use crate::model::{verify_fbap, BandwidthAllocation, Instance};
use simplex::{big, maximize, LpProblem, SimplexError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpError {
    BadParameter(String),
    WTooSmall { capacity: u64, needed: u64 },
    NonIntegralVertex(String),
    Unbounded,
}

impl fmt::Display for LpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpError::BadParameter(why) => write!(f, "bad parameter: {why}"),
            LpError::WTooSmall { capacity, needed } => {
                write!(f, "capacity {capacity} is below the {needed} required for rounding")
            }
            LpError::NonIntegralVertex(why) => write!(f, "non-integral vertex: {why}"),
            LpError::Unbounded => write!(f, "relaxation is unbounded"),
        }
    }
}

impl std::error::Error for LpError {}

impl From<SimplexError> for LpError {
    fn from(e: SimplexError) -> LpError {
        match e {
            SimplexError::Unbounded => LpError::Unbounded,
        }
    }
}

/// The relaxation together with its variable layout.
#[derive(Debug)]
pub struct FbaLp {
    pub problem: LpProblem,
    /// Column of the small variable of each job, by job position.
    pub x_col: Vec<usize>,
    /// Column of the overflow variable of each wide job, by job position.
    pub y_col: BTreeMap<usize, usize>,
    /// Shared cap on small variables: `ceil(eps * W)`.
    pub narrow_cap: u64,
    /// Capacity used by the rows: `floor((1 - eps) * W)`.
    pub shrunk_capacity: u64,
}

fn check_params(eps: Frac, beta: Frac) -> Result<(), LpError> {
    if !strictly_between_zero_and_one(eps) {
        return Err(LpError::BadParameter(format!(
            "epsilon must be strictly between 0 and 1, got {eps}"
        )));
    }
    if *beta.numer() == 0 || beta.numer() > beta.denom() {
        return Err(LpError::BadParameter(format!(
            "beta must be in (0, 1], got {beta}"
        )));
    }
    Ok(())
}

fn frac_to_big(f: Frac) -> BigRational {
    BigRational::new((*f.numer()).into(), (*f.denom()).into())
}

/// Builds the relaxation for the given instance, accuracy, budget factor,
/// and guessed optimum. Minimum demands play no role here.
pub fn build_lp_fba(inst: &Instance, eps: Frac, beta: Frac, guess: u64) -> Result<FbaLp, LpError> {
    check_params(eps, beta)?;
    let w = inst.capacity;
    let one_minus = Frac::new(eps.denom() - eps.numer(), *eps.denom());
    let narrow_cap = ceil_mul(eps, w);
    let shrunk_capacity = floor_mul(one_minus, w);

    let n = inst.jobs.len();
    let mut objective = Vec::new();
    let mut names = Vec::new();
    let mut x_col = Vec::with_capacity(n);
    let mut y_col = BTreeMap::new();
    for j in &inst.jobs {
        x_col.push(objective.len());
        objective.push(big(j.profit));
        names.push(format!("x{}", j.id));
    }
    for (pos, j) in inst.jobs.iter().enumerate() {
        if ge_mul(j.rmax, eps, w) {
            y_col.insert(pos, objective.len());
            objective.push(big(j.profit));
            names.push(format!("y{}", j.id));
        }
    }

    let vars = objective.len();
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for (pos, j) in inst.jobs.iter().enumerate() {
        let mut a = vec![BigRational::zero(); vars];
        a[x_col[pos]] = big(1);
        rows.push((a, big(j.rmax.min(narrow_cap))));
    }
    for (&pos, &col) in &y_col {
        let mut a = vec![BigRational::zero(); vars];
        a[col] = big(1);
        rows.push((a, big(inst.jobs[pos].rmax.saturating_sub(narrow_cap))));
    }
    if !y_col.is_empty() {
        let mut a = vec![BigRational::zero(); vars];
        for (&pos, &col) in &y_col {
            a[col] = big(inst.jobs[pos].profit);
        }
        let budget = frac_to_big(beta) * frac_to_big(one_minus) * big(guess);
        rows.push((a, budget));
    }
    for t in inst.event_points() {
        let mut a = vec![BigRational::zero(); vars];
        for (pos, j) in inst.jobs.iter().enumerate() {
            if j.contains(t) {
                a[x_col[pos]] = big(1);
                if let Some(&col) = y_col.get(&pos) {
                    a[col] = big(1);
                }
            }
        }
        rows.push((a, big(shrunk_capacity)));
    }

    Ok(FbaLp {
        problem: LpProblem {
            objective,
            rows,
            names,
        },
        x_col,
        y_col,
        narrow_cap,
        shrunk_capacity,
    })
}

/// Result of solving and rounding the relaxation.
#[derive(Debug, Clone)]
pub struct RoundedFba {
    pub allocation: BandwidthAllocation,
    pub profit: u64,
    /// Exact optimum of the fractional relaxation.
    pub fractional: BigRational,
}

/// Smallest capacity at which the rounding guarantee applies: `1 / eps^2`,
/// rounded up.
pub fn rounding_capacity_floor(eps: Frac) -> u64 {
    let num = *eps.numer() as u128;
    let den = *eps.denom() as u128;
    (den * den).div_ceil(num * num).min(u64::MAX as u128) as u64
}

/// Solves the relaxation and rounds it to integer amounts, guaranteed to
/// keep a `1 - 2 eps` fraction of the fractional optimum. Requires the
/// capacity to be at least `1 / eps^2`.
pub fn round_lp_fba(
    inst: &Instance,
    eps: Frac,
    beta: Frac,
    guess: u64,
) -> Result<RoundedFba, LpError> {
    check_params(eps, beta)?;
    let needed = rounding_capacity_floor(eps);
    if inst.capacity < needed {
        return Err(LpError::WTooSmall {
            capacity: inst.capacity,
            needed,
        });
    }
    round_lp_fba_unchecked(inst, eps, beta, guess)
}

/// The rounding pipeline without the capacity floor check. Callers that
/// compose stages at small capacities accept a weaker (or no) guarantee.
pub(crate) fn round_lp_fba_unchecked(
    inst: &Instance,
    eps: Frac,
    beta: Frac,
    guess: u64,
) -> Result<RoundedFba, LpError> {
    let lp = build_lp_fba(inst, eps, beta, guess)?;
    let sol = maximize(&lp.problem)?;

    // Shift overflow mass into the small variable until the small cap is
    // met; amounts per time and profit are unchanged, so the shifted point
    // is still optimal, and afterwards y > 0 implies x at its cap.
    let mut x: Vec<BigRational> = lp.x_col.iter().map(|&c| sol.values[c].clone()).collect();
    let mut floored: BTreeMap<usize, u64> = BTreeMap::new();
    for (&pos, &col) in &lp.y_col {
        let mut y = sol.values[col].clone();
        let cap = big(inst.jobs[pos].rmax.min(lp.narrow_cap));
        let room = &cap - &x[pos];
        let shift = if room < y { room } else { y.clone() };
        x[pos] += &shift;
        y -= shift;
        let b = y.floor().to_integer().to_u64().expect("overflow fits u64");
        floored.insert(pos, b);
    }

    // Re-optimize the small parts against what the floored overflows leave.
    // Each column of this system has consecutive ones over the sorted start
    // times, so the basic optimum the solver returns is integral.
    let n = inst.jobs.len();
    let mut objective = Vec::with_capacity(n);
    let mut names = Vec::with_capacity(n);
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for j in &inst.jobs {
        objective.push(big(j.profit));
        names.push(format!("x{}", j.id));
    }
    for (pos, j) in inst.jobs.iter().enumerate() {
        let mut a = vec![BigRational::zero(); n];
        a[pos] = big(1);
        rows.push((a, big(j.rmax.min(lp.narrow_cap))));
    }
    for t in inst.event_points() {
        let mut a = vec![BigRational::zero(); n];
        let mut used = 0u64;
        for (pos, j) in inst.jobs.iter().enumerate() {
            if j.contains(t) {
                a[pos] = big(1);
                used += floored.get(&pos).copied().unwrap_or(0);
            }
        }
        assert!(
            used <= lp.shrunk_capacity,
            "floored overflow exceeds the shrunken capacity"
        );
        rows.push((a, big(lp.shrunk_capacity - used)));
    }
    let round = maximize(&LpProblem {
        objective,
        rows,
        names,
    })?;

    let mut amounts = BTreeMap::new();
    for (pos, j) in inst.jobs.iter().enumerate() {
        let v = &round.values[pos];
        if !v.is_integer() {
            return Err(LpError::NonIntegralVertex(format!(
                "x{} = {v} in the re-solve",
                j.id
            )));
        }
        let a = v.to_integer().to_u64().expect("amount fits u64")
            + floored.get(&pos).copied().unwrap_or(0);
        if a > 0 {
            amounts.insert(j.id, a);
        }
    }
    let allocation = BandwidthAllocation { amounts };

    // Minimum demands are out of scope for this pipeline; verify against a
    // copy without them.
    let relaxed = Instance::new(
        inst.capacity,
        inst.jobs
            .iter()
            .map(|j| {
                let mut j = j.clone();
                j.rmin = 0;
                j
            })
            .collect(),
    )
    .expect("relaxing minima keeps the instance valid");
    let profit = verify_fbap(&relaxed, &allocation)
        .expect("rounded allocation failed verification")
        .total;

    Ok(RoundedFba {
        allocation,
        profit,
        fractional: sol.objective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Job;

    fn job(id: u64, start: u64, end: u64, rmax: u64, profit: u64) -> Job {
        Job {
            id,
            start,
            end,
            rmin: 0,
            rmax,
            profit,
        }
    }

    #[test]
    fn relaxation_layout() {
        let inst = Instance::new(10, vec![job(1, 0, 4, 7, 2), job(2, 0, 3, 3, 1)]).unwrap();
        let lp = build_lp_fba(&inst, Frac::new(1, 2), Frac::new(4, 5), 10).unwrap();
        assert_eq!(lp.narrow_cap, 5);
        assert_eq!(lp.shrunk_capacity, 5);
        assert_eq!(lp.x_col, vec![0, 1]);
        assert_eq!(lp.y_col.len(), 1);
        assert_eq!(lp.y_col[&0], 2);
        // Two x bounds, one y bound, one budget row, one start row.
        assert_eq!(lp.problem.rows.len(), 5);
        // x1 <= min(7, 5), y1 <= 7 - 5, x2 <= 3.
        assert_eq!(lp.problem.rows[0].1, big(5));
        assert_eq!(lp.problem.rows[1].1, big(3));
        assert_eq!(lp.problem.rows[2].1, big(2));
        // Budget: 2 y1 <= (4/5)(1/2)(10) = 4.
        assert_eq!(lp.problem.rows[3].1, big(4));
        assert_eq!(lp.problem.rows[4].1, big(5));
    }

    #[test]
    fn rounding_keeps_half_at_quarter_eps() {
        let inst = Instance::new(
            16,
            vec![job(1, 0, 2, 16, 3), job(2, 1, 3, 2, 5), job(3, 0, 1, 3, 1)],
        )
        .unwrap();
        let eps = Frac::new(1, 4);
        let out = round_lp_fba(&inst, eps, Frac::new(4, 5), 40).unwrap();
        // 1 - 2 eps = 1/2.
        assert!(big(2 * out.profit) >= out.fractional);
        assert!(big(out.profit) <= out.fractional);
        assert!(out.profit > 0);
    }

    #[test]
    fn capacity_floor_enforced() {
        let inst = Instance::new(10, vec![job(1, 0, 2, 5, 1)]).unwrap();
        let err = round_lp_fba(&inst, Frac::new(1, 4), Frac::new(4, 5), 5).unwrap_err();
        assert_eq!(
            err,
            LpError::WTooSmall {
                capacity: 10,
                needed: 16
            }
        );
        assert_eq!(rounding_capacity_floor(Frac::new(1, 3)), 9);
        assert_eq!(rounding_capacity_floor(Frac::new(2, 3)), 3);
    }

    #[test]
    fn no_wide_jobs_means_no_budget_row() {
        let inst = Instance::new(10, vec![job(1, 0, 2, 2, 1), job(2, 1, 4, 3, 2)]).unwrap();
        let lp = build_lp_fba(&inst, Frac::new(1, 2), Frac::new(4, 5), 100).unwrap();
        assert!(lp.y_col.is_empty());
        // Two x bounds plus two start rows.
        assert_eq!(lp.problem.rows.len(), 4);
        let out = round_lp_fba(&inst, Frac::new(1, 2), Frac::new(4, 5), 100).unwrap();
        assert!(big(out.profit) <= out.fractional);
    }

    #[test]
    fn bad_parameters_rejected() {
        let inst = Instance::new(9, vec![job(1, 0, 2, 2, 1)]).unwrap();
        assert!(matches!(
            build_lp_fba(&inst, Frac::new(3, 2), Frac::new(4, 5), 1),
            Err(LpError::BadParameter(_))
        ));
        assert!(matches!(
            build_lp_fba(&inst, Frac::new(1, 2), Frac::new(6, 5), 1),
            Err(LpError::BadParameter(_))
        ));
    }
}
