//! Standard and canonical linear programs over the rationals, both always
//! minimized, with the four-valued optimum and duality reports.
//!
//! A standard program asks for `x >= 0` with `A x <= b` minimizing `c.x`;
//! the dual is `<-A^T, c, b>`, also minimized, so weak duality reads
//! `0 <= p + q`. The optimum is `top` when infeasible, `bot` when
//! unbounded, a finite value when attained, and provably never absent.

use crate::ext::Ext;
use crate::farkas::{canonical_lp_minimize, MinResult};
use crate::mat::{dot, Mat};
use crate::rat::{NNRat, Rat};

/// Minimize `c.x` subject to `A x <= b`, `x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardLP {
    pub a: Mat<Rat>,
    pub b: Vec<Rat>,
    pub c: Vec<Rat>,
}

/// Minimize `c.x` subject to `A x = b`, `x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLP {
    pub a: Mat<Rat>,
    pub b: Vec<Rat>,
    pub c: Vec<Rat>,
}

/// Four-valued optimum: absent, `bot` (unbounded), `top` (infeasible),
/// or an attained finite minimum. Solvers never produce `None`; the
/// value is representable because the opposites relation needs it.
pub type Optimum = Option<Ext>;

/// Both present and exact negatives of each other.
pub fn opposites_opt(p: &Optimum, q: &Optimum) -> bool {
    match (p, q) {
        (Some(x), Some(y)) => *x == y.neg(),
        _ => false,
    }
}

fn nn_values(x: &[NNRat]) -> Vec<Rat> {
    x.iter().map(|v| v.rat().clone()).collect()
}

impl StandardLP {
    pub fn new(a: Mat<Rat>, b: Vec<Rat>, c: Vec<Rat>) -> StandardLP {
        assert_eq!(b.len(), a.rows(), "b length must equal row count");
        assert_eq!(c.len(), a.cols(), "c length must equal column count");
        StandardLP { a, b, c }
    }

    /// `A x <= b` componentwise; `x` is nonnegative by type.
    pub fn is_solution(&self, x: &[NNRat]) -> bool {
        assert_eq!(x.len(), self.a.cols(), "solution length mismatch");
        let xs = nn_values(x);
        self.a
            .mul_vec(&xs)
            .iter()
            .zip(&self.b)
            .all(|(lhs, rhs)| lhs <= rhs)
    }

    pub fn objective(&self, x: &[NNRat]) -> Rat {
        dot(&self.c, &nn_values(x))
    }

    /// `<-A^T, c, b>`; minimization intent unchanged. An involution.
    pub fn dualize(&self) -> StandardLP {
        StandardLP {
            a: self.a.transpose().neg(),
            b: self.c.clone(),
            c: self.b.clone(),
        }
    }

    /// Canonical form via one slack per constraint, then exact simplex.
    /// The returned point is restricted to the structural variables.
    pub fn solve(&self) -> MinResult {
        let m = self.a.rows();
        let n = self.a.cols();
        let widened = Mat::from_fn(m, n + m, |i, j| {
            if j < n {
                self.a.get(i, j).clone()
            } else if j - n == i {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let mut cost = self.c.clone();
        cost.resize(n + m, Rat::zero());
        match canonical_lp_minimize(&widened, &self.b, &cost) {
            MinResult::Infeasible => MinResult::Infeasible,
            MinResult::Unbounded { ray } => MinResult::Unbounded {
                ray: ray[..n].to_vec(),
            },
            MinResult::Minimum { value, point } => MinResult::Minimum {
                value,
                point: point[..n].to_vec(),
            },
        }
    }

    /// `top` if infeasible, `bot` if unbounded below, otherwise the
    /// attained finite minimum. Never `None`.
    pub fn optimum(&self) -> Optimum {
        Some(match self.solve() {
            MinResult::Infeasible => Ext::Top,
            MinResult::Unbounded { .. } => Ext::Bot,
            MinResult::Minimum { value, .. } => Ext::Fin(value),
        })
    }

    /// Computes both optima and the duality verdicts. Supplied points are
    /// verified before use; each verified primal/dual objective pair is
    /// checked against `0 <= p + q`. Solver witnesses join the sample.
    pub fn duality_report(
        &self,
        primal_points: &[Vec<NNRat>],
        dual_points: &[Vec<NNRat>],
    ) -> DualityReport {
        let dual = self.dualize();
        let primal_result = self.solve();
        let dual_result = dual.solve();

        let to_opt = |r: &MinResult| -> Optimum {
            Some(match r {
                MinResult::Infeasible => Ext::Top,
                MinResult::Unbounded { .. } => Ext::Bot,
                MinResult::Minimum { value, .. } => Ext::Fin(value.clone()),
            })
        };
        let primal_optimum = to_opt(&primal_result);
        let dual_optimum = to_opt(&dual_result);

        let collect_values = |lp: &StandardLP, points: &[Vec<NNRat>], solved: &MinResult| {
            let mut values = Vec::new();
            if let MinResult::Minimum { value, point } = solved {
                debug_assert!(point.iter().all(|v| !v.is_negative()));
                values.push(value.clone());
            }
            for p in points {
                if p.len() == lp.a.cols() && lp.is_solution(p) {
                    values.push(lp.objective(p));
                }
            }
            values
        };
        let ps = collect_values(self, primal_points, &primal_result);
        let qs = collect_values(&dual, dual_points, &dual_result);

        let mut weak_pairs = 0;
        let mut weak_holds = true;
        for p in &ps {
            for q in &qs {
                weak_pairs += 1;
                if (p + q).is_negative() {
                    weak_holds = false;
                }
            }
        }

        let either_feasible =
            primal_optimum != Some(Ext::Top) || dual_optimum != Some(Ext::Top);
        let opposites = opposites_opt(&primal_optimum, &dual_optimum);
        DualityReport {
            primal_optimum,
            dual_optimum,
            either_feasible,
            opposites,
            weak_pairs,
            weak_holds,
        }
    }
}

/// Verdicts from comparing a program with its dual. When neither side is
/// feasible the strong-duality claim has an unmet precondition and
/// `opposites` is reported as observed, not asserted.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub primal_optimum: Optimum,
    pub dual_optimum: Optimum,
    pub either_feasible: bool,
    pub opposites: bool,
    pub weak_pairs: usize,
    pub weak_holds: bool,
}

impl CanonicalLP {
    pub fn new(a: Mat<Rat>, b: Vec<Rat>, c: Vec<Rat>) -> CanonicalLP {
        assert_eq!(b.len(), a.rows(), "b length must equal row count");
        assert_eq!(c.len(), a.cols(), "c length must equal column count");
        CanonicalLP { a, b, c }
    }

    /// `A x = b` and `x >= 0`.
    pub fn is_solution(&self, x: &[Rat]) -> bool {
        x.len() == self.a.cols()
            && x.iter().all(|v| !v.is_negative())
            && self.a.mul_vec(x) == self.b
    }

    pub fn objective(&self, x: &[Rat]) -> Rat {
        dot(&self.c, x)
    }

    pub fn minimize(&self) -> MinResult {
        canonical_lp_minimize(&self.a, &self.b, &self.c)
    }
}
