//! Exact rational linear programming (dense two-phase simplex).
//!
//! Used to decide strict feasibility of open polyhedral cells during
//! chamber-region enumeration. Everything is exact: no floating point, no
//! tolerances. Bland's rule guarantees termination.

use num::{One, Signed, Zero};

use crate::rational::{Rat, RationalVector};

/// Result of maximizing `c·y` over `{A y = b, y ≥ 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rat, solution: Vec<Rat> },
}

/// Maximizes `c·y` subject to `A y = b`, `y ≥ 0` (two-phase simplex).
pub fn simplex_maximize(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    assert_eq!(b.len(), m, "right-hand side length mismatch");
    assert!(a.iter().all(|row| row.len() == n), "matrix width mismatch");

    // Tableau with artificial variables appended: columns 0..n original,
    // n..n+m artificial, last column = rhs. Rows are sign-fixed so b ≥ 0.
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Rat> = Vec::with_capacity(n + m + 1);
        let flip = b[i].is_negative();
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase 1: maximize −Σ artificials.
    let mut phase1_obj = vec![Rat::zero(); n + m];
    for j in n..n + m {
        phase1_obj[j] = -Rat::one();
    }
    run_simplex(&mut t, &mut basis, &phase1_obj, n + m);
    let phase1_value: Rat = basis
        .iter()
        .enumerate()
        .filter(|(_, &bv)| bv >= n)
        .map(|(i, _)| t[i][n + m].clone())
        .fold(Rat::zero(), |acc, x| acc + x);
    if !phase1_value.is_zero() {
        return LpOutcome::Infeasible;
    }
    // Pivot any artificial variables still basic (at zero) out, or drop
    // their rows when redundant.
    let mut row = 0;
    while row < t.len() {
        if basis[row] >= n {
            let pivot_col = (0..n).find(|&j| !t[row][j].is_zero());
            match pivot_col {
                Some(j) => pivot(&mut t, &mut basis, row, j, n + m),
                None => {
                    t.remove(row);
                    basis.remove(row);
                    continue;
                }
            }
        }
        row += 1;
    }

    // Phase 2 on the original objective (artificial columns barred).
    let mut phase2_obj = vec![Rat::zero(); n + m];
    phase2_obj[..n].clone_from_slice(c);
    if !run_simplex_barred(&mut t, &mut basis, &phase2_obj, n) {
        return LpOutcome::Unbounded;
    }

    let rhs_col = t.first().map(|r| r.len() - 1).unwrap_or(0);
    let mut solution = vec![Rat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            solution[bv] = t[i][rhs_col].clone();
        }
    }
    let value = c
        .iter()
        .zip(&solution)
        .map(|(ci, yi)| ci * yi)
        .fold(Rat::zero(), |acc, x| acc + x);
    LpOutcome::Optimal { value, solution }
}

/// Runs simplex iterations; all columns `< ncols` are eligible.
fn run_simplex(t: &mut Vec<Vec<Rat>>, basis: &mut [usize], obj: &[Rat], ncols: usize) {
    loop {
        let reduced = reduced_costs(t, basis, obj, ncols);
        // Bland: smallest-index column with positive reduced cost.
        let entering = (0..ncols).find(|&j| reduced[j].is_positive());
        let Some(j) = entering else { return };
        let Some(r) = ratio_test(t, basis, j) else {
            // Unbounded direction cannot occur in phase 1 (objective ≤ 0);
            // terminate defensively, callers re-check the achieved value.
            return;
        };
        pivot(t, basis, r, j, ncols);
    }
}

/// Phase-2 variant: columns `>= barred_from` are never entered; returns
/// `false` when the LP is unbounded.
fn run_simplex_barred(
    t: &mut Vec<Vec<Rat>>,
    basis: &mut [usize],
    obj: &[Rat],
    barred_from: usize,
) -> bool {
    loop {
        let ncols = t.first().map(|r| r.len() - 1).unwrap_or(0);
        let reduced = reduced_costs(t, basis, obj, ncols);
        let entering = (0..barred_from).find(|&j| reduced[j].is_positive());
        let Some(j) = entering else { return true };
        let Some(r) = ratio_test(t, basis, j) else { return false };
        pivot(t, basis, r, j, ncols);
    }
}

fn reduced_costs(t: &[Vec<Rat>], basis: &[usize], obj: &[Rat], ncols: usize) -> Vec<Rat> {
    let mut reduced: Vec<Rat> = obj[..ncols].to_vec();
    for (i, &bv) in basis.iter().enumerate() {
        let cb = &obj[bv];
        if cb.is_zero() {
            continue;
        }
        for j in 0..ncols {
            if !t[i][j].is_zero() {
                let delta = cb * &t[i][j];
                reduced[j] -= delta;
            }
        }
    }
    reduced
}

/// Minimum-ratio row for the entering column, Bland tie-break by smallest
/// basis variable; `None` when no positive pivot exists (unbounded).
fn ratio_test(t: &[Vec<Rat>], basis: &[usize], j: usize) -> Option<usize> {
    let rhs = t[0].len() - 1;
    let mut best: Option<(Rat, usize, usize)> = None;
    for (i, row) in t.iter().enumerate() {
        if row[j].is_positive() {
            let ratio = &row[rhs] / &row[j];
            let key = (ratio, basis[i], i);
            best = match best {
                None => Some(key),
                Some(cur) if key.0 < cur.0 || (key.0 == cur.0 && key.1 < cur.1) => Some(key),
                Some(cur) => Some(cur),
            };
        }
    }
    best.map(|(_, _, i)| i)
}

fn pivot(t: &mut [Vec<Rat>], basis: &mut [usize], r: usize, j: usize, _ncols: usize) {
    let width = t[r].len();
    let p = t[r][j].clone();
    for v in t[r].iter_mut() {
        *v = &*v / &p;
    }
    for i in 0..t.len() {
        if i == r || t[i][j].is_zero() {
            continue;
        }
        let factor = t[i][j].clone();
        for k in 0..width {
            let delta = &factor * &t[r][k];
            t[i][k] -= delta;
        }
    }
    basis[r] = j;
}

/// Decides whether the open polyhedron `{x : n_i·x > b_i for all i}` is
/// nonempty; on success returns an interior rational witness.
///
/// Solved as `max t` subject to `n_i·x − t ≥ b_i`, `t ≤ 1`: the strict
/// system is feasible exactly when the optimum is positive.
pub fn strict_interior_point(constraints: &[(RationalVector, Rat)]) -> Option<RationalVector> {
    if constraints.is_empty() {
        return Some(RationalVector::zero(0));
    }
    let dim = constraints[0].0.dim();
    // Variables: u (dim), v (dim), t⁺, t⁻, surplus s_i, slack s0.
    let m = constraints.len();
    let n = 2 * dim + 2 + m + 1;
    let mut a = Vec::with_capacity(m + 1);
    let mut b = Vec::with_capacity(m + 1);
    for (i, (normal, bound)) in constraints.iter().enumerate() {
        assert_eq!(normal.dim(), dim, "constraint dimension mismatch");
        let mut row = vec![Rat::zero(); n];
        for (k, c) in normal.iter().enumerate() {
            row[k] = c.clone();
            row[dim + k] = -c.clone();
        }
        row[2 * dim] = -Rat::one();
        row[2 * dim + 1] = Rat::one();
        row[2 * dim + 2 + i] = -Rat::one(); // surplus: n·x − t − s = b
        a.push(row);
        b.push(bound.clone());
    }
    let mut cap = vec![Rat::zero(); n];
    cap[2 * dim] = Rat::one();
    cap[2 * dim + 1] = -Rat::one();
    cap[n - 1] = Rat::one(); // slack: t + s0 = 1
    a.push(cap);
    b.push(Rat::one());

    let mut c = vec![Rat::zero(); n];
    c[2 * dim] = Rat::one();
    c[2 * dim + 1] = -Rat::one();

    match simplex_maximize(&a, &b, &c) {
        LpOutcome::Optimal { value, solution } if value.is_positive() => {
            let coords = (0..dim)
                .map(|k| &solution[k] - &solution[dim + k])
                .collect();
            Some(RationalVector::new(coords))
        }
        _ => None,
    }
}
