//! Exact simplex over arbitrary-precision rationals.
//!
//! Solves `maximize c.x subject to A x <= b, x >= 0` for `b >= 0`, so the
//! all-slack basis is feasible and no first phase is needed. Bland's rule
//! picks the pivots, which rules out cycling; everything is computed in
//! `BigRational`, so the optimum and the optimal vertex are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A linear program in inequality form. Every row's right-hand side must be
/// nonnegative.
#[derive(Debug, Clone)]
pub struct LpProblem {
    /// Objective coefficients, one per variable, to maximize.
    pub objective: Vec<BigRational>,
    /// Rows `(a, b)` meaning `a . x <= b` with `b >= 0`.
    pub rows: Vec<(Vec<BigRational>, BigRational)>,
    /// Variable names, for rendering only.
    pub names: Vec<String>,
}

/// An optimal basic solution.
#[derive(Debug, Clone)]
pub struct LpSolution {
    pub values: Vec<BigRational>,
    pub objective: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplexError {
    Unbounded,
}

impl std::fmt::Display for SimplexError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SimplexError::Unbounded => write!(f, "objective is unbounded"),
        }
    }
}

impl std::error::Error for SimplexError {}

/// Maximizes the problem and returns an optimal vertex.
pub fn maximize(p: &LpProblem) -> Result<LpSolution, SimplexError> {
    let n = p.objective.len();
    let m = p.rows.len();
    for (a, b) in &p.rows {
        assert_eq!(a.len(), n, "row width must match the variable count");
        assert!(!b.is_negative(), "right-hand sides must be nonnegative");
    }

    // Tableau rows carry the structural columns, the slack identity, and
    // the right-hand side; the extra row holds the reduced costs and the
    // running objective value.
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, (a, b)) in p.rows.iter().enumerate() {
        let mut row = vec![BigRational::zero(); width];
        row[..n].clone_from_slice(a);
        row[n + i] = BigRational::one();
        row[width - 1] = b.clone();
        t.push(row);
    }
    let mut obj = vec![BigRational::zero(); width];
    for (j, c) in p.objective.iter().enumerate() {
        obj[j] = -c.clone();
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for r in 0..m {
            if !t[r][enter].is_positive() {
                continue;
            }
            leave = Some(match leave {
                None => r,
                Some(l) => {
                    // rhs_r / a_r <=> rhs_l / a_l, cross-multiplied.
                    let lhs = &t[r][width - 1] * &t[l][enter];
                    let rhs = &t[l][width - 1] * &t[r][enter];
                    match lhs.cmp(&rhs) {
                        std::cmp::Ordering::Less => r,
                        std::cmp::Ordering::Equal if basis[r] < basis[l] => r,
                        _ => l,
                    }
                }
            });
        }
        let Some(leave) = leave else {
            return Err(SimplexError::Unbounded);
        };

        let pivot = t[leave][enter].clone();
        for v in &mut t[leave] {
            *v /= &pivot;
        }
        for r in 0..m {
            if r != leave && !t[r][enter].is_zero() {
                let f = t[r][enter].clone();
                for j in 0..width {
                    let d = &t[leave][j] * &f;
                    t[r][j] -= d;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..width {
                let d = &t[leave][j] * &f;
                obj[j] -= d;
            }
        }
        basis[leave] = enter;
    }

    let mut values = vec![BigRational::zero(); n];
    for (r, &v) in basis.iter().enumerate() {
        if v < n {
            values[v] = t[r][width - 1].clone();
        }
    }
    Ok(LpSolution {
        values,
        objective: obj[width - 1].clone(),
    })
}

/// Renders the problem in a readable text form. Coefficients print as exact
/// fractions, so this is a dump for humans, not solver input.
pub fn to_lp_text(p: &LpProblem) -> String {
    let name = |j: usize| -> String {
        p.names.get(j).cloned().unwrap_or_else(|| format!("v{j}"))
    };
    let terms = |coefs: &[BigRational]| -> String {
        let mut s = String::new();
        for (j, c) in coefs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !s.is_empty() {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                s.push_str("- ");
            }
            let a = c.abs();
            if a.is_one() {
                s.push_str(&name(j));
            } else {
                s.push_str(&format!("{a} {}", name(j)));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    };
    let mut out = String::from("maximize\n");
    out.push_str(&format!("  {}\n", terms(&p.objective)));
    out.push_str("subject to\n");
    for (i, (a, b)) in p.rows.iter().enumerate() {
        out.push_str(&format!("  r{i}: {} <= {b}\n", terms(a)));
    }
    out.push_str("and all variables >= 0\n");
    out
}

pub(crate) fn big(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
