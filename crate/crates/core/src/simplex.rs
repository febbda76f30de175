//! Exact two-phase simplex over the rationals.
//!
//! Solves `min c.x  s.t.  A x = b, x >= 0` with Bland's smallest-index
//! pivot rule, which guarantees termination. Phase one minimizes the sum
//! of artificial variables; when it ends positive, the phase-one simplex
//! multipliers yield an infeasibility certificate `y` with `A^T y >= 0`
//! and `b.y < 0`. Phase two either finds the minimum or an improving ray.

use crate::mat::{dot, Mat};
use crate::rat::Rat;

pub(crate) enum CanonOutcome {
    /// `farkas_y` satisfies `A^T y >= 0` and `b.y < 0`.
    Infeasible { farkas_y: Vec<Rat> },
    /// `ray` satisfies `A ray = 0`, `ray >= 0`, `c.ray < 0`; feasibility
    /// was established by phase one before the ray was found.
    Unbounded { ray: Vec<Rat> },
    Optimal { value: Rat, point: Vec<Rat> },
}

struct Tableau {
    /// Structural + artificial columns.
    cols: usize,
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
}

enum RunOutcome {
    Optimal,
    UnboundedAt(usize),
}

impl Tableau {
    /// Reduced costs of every column under `cost`, given the current basis.
    fn reduced_costs(&self, cost: &[Rat]) -> Vec<Rat> {
        let mut z: Vec<Rat> = cost.to_vec();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                if !row[j].is_zero() {
                    z[j] = &z[j] - &(cb * &row[j]);
                }
            }
        }
        z
    }

    fn objective_value(&self, cost: &[Rat]) -> Rat {
        self.rhs
            .iter()
            .zip(&self.basis)
            .map(|(b, &j)| &cost[j] * b)
            .sum()
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.rows[r][e].clone();
        assert!(!p.is_zero(), "pivot on zero entry");
        let pinv = p.inv();
        for j in 0..self.cols {
            self.rows[r][j] = &self.rows[r][j] * &pinv;
        }
        self.rhs[r] = &self.rhs[r] * &pinv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let f = self.rows[i][e].clone();
            for j in 0..self.cols {
                if !self.rows[r][j].is_zero() {
                    self.rows[i][j] = &self.rows[i][j] - &(&f * &self.rows[r][j]);
                }
            }
            self.rhs[i] = &self.rhs[i] - &(&f * &self.rhs[r]);
        }
        self.basis[r] = e;
    }

    /// Bland's rule: smallest eligible entering column; leaving row by
    /// minimum ratio, ties broken by smallest basic variable index.
    fn run(&mut self, cost: &[Rat], allowed_cols: usize) -> RunOutcome {
        loop {
            let z = self.reduced_costs(cost);
            let entering = (0..allowed_cols).find(|&j| z[j].is_negative());
            let e = match entering {
                Some(e) => e,
                None => return RunOutcome::Optimal,
            };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][e].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][e];
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr || (ratio == lr && self.basis[i] < self.basis[li]) {
                            Some((i, ratio))
                        } else {
                            Some((li, lr))
                        }
                    }
                };
            }
            match leave {
                Some((r, _)) => self.pivot(r, e),
                None => return RunOutcome::UnboundedAt(e),
            }
        }
    }
}

/// Minimize `c.x` over `{x >= 0 : A x = b}`.
pub(crate) fn minimize_canonical(a: &Mat<Rat>, b: &[Rat], c: &[Rat]) -> CanonOutcome {
    let m = a.rows();
    let n = a.cols();
    assert_eq!(b.len(), m, "b length must equal row count");
    assert_eq!(c.len(), n, "c length must equal column count");

    // Flip rows so the right-hand side is nonnegative, then append one
    // artificial column per row.
    let cols = n + m;
    let mut flipped = vec![false; m];
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        flipped[i] = flip;
        let mut row: Vec<Rat> = a
            .row(i)
            .iter()
            .map(|x| if flip { -x } else { x.clone() })
            .collect();
        row.resize(cols, Rat::zero());
        row[n + i] = Rat::one();
        rows.push(row);
        rhs.push(if flip { -&b[i] } else { b[i].clone() });
    }
    let mut t = Tableau {
        cols,
        rows,
        rhs,
        basis: (n..cols).collect(),
    };

    // Phase one: minimize the artificial sum. Bounded below by zero, so
    // it always terminates at an optimum.
    let mut phase1_cost = vec![Rat::zero(); cols];
    for j in n..cols {
        phase1_cost[j] = Rat::one();
    }
    match t.run(&phase1_cost, cols) {
        RunOutcome::Optimal => {}
        RunOutcome::UnboundedAt(_) => unreachable!("phase one is bounded below by zero"),
    }
    if t.objective_value(&phase1_cost).is_positive() {
        // Simplex multipliers u_i = 1 - reduced cost of artificial i;
        // they satisfy (DA)^T u <= 0 and (Db).u > 0 where D is the row
        // flip. y = -Du is the certificate for the original system.
        let z = t.reduced_costs(&phase1_cost);
        let y: Vec<Rat> = (0..m)
            .map(|i| {
                let u = Rat::one() - z[n + i].clone();
                if flipped[i] {
                    u
                } else {
                    -u
                }
            })
            .collect();
        debug_assert!(dot(b, &y).is_negative());
        debug_assert!(a.transpose().mul_vec(&y).iter().all(|v| !v.is_negative()));
        return CanonOutcome::Infeasible { farkas_y: y };
    }

    // Drive artificials out of the basis; rows they cannot leave are
    // linearly dependent and get dropped.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            debug_assert!(t.rhs[r].is_zero(), "basic artificial must sit at zero");
            match (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.rhs.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // Phase two over structural columns only.
    let mut phase2_cost = c.to_vec();
    phase2_cost.resize(cols, Rat::zero());
    let extract_point = |t: &Tableau| {
        let mut x = vec![Rat::zero(); n];
        for (i, &bj) in t.basis.iter().enumerate() {
            debug_assert!(bj < n);
            x[bj] = t.rhs[i].clone();
        }
        x
    };
    match t.run(&phase2_cost, n) {
        RunOutcome::Optimal => {
            let point = extract_point(&t);
            let value = dot(c, &point);
            debug_assert_eq!(a.mul_vec(&point), b.to_vec());
            debug_assert!(point.iter().all(|v| !v.is_negative()));
            CanonOutcome::Optimal { value, point }
        }
        RunOutcome::UnboundedAt(e) => {
            let mut ray = vec![Rat::zero(); n];
            ray[e] = Rat::one();
            for (i, &bj) in t.basis.iter().enumerate() {
                if bj < n && bj != e {
                    ray[bj] = -&t.rows[i][e];
                }
            }
            debug_assert!(a.mul_vec(&ray).iter().all(|v| v.is_zero()));
            debug_assert!(ray.iter().all(|v| !v.is_negative()));
            debug_assert!(dot(c, &ray).is_negative());
            CanonOutcome::Unbounded { ray }
        }
    }
}
