//! Certificate-producing decision procedures for the theorem-of-alternatives
//! family, plus the canonical-form minimizer they share.
//!
//! Every solver here returns a witness that an independent check can
//! replay with plain matrix arithmetic: either a primal vector exhibiting
//! a solution, or a dual multiplier vector exhibiting a contradiction.

use crate::mat::{dot, Mat};
use crate::rat::Rat;
use crate::simplex::{minimize_canonical, CanonOutcome};

/// Primal witness `x` or dual multiplier witness `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Primal(Vec<Rat>),
    Dual(Vec<Rat>),
}

impl Certificate {
    pub fn vector(&self) -> &[Rat] {
        match self {
            Certificate::Primal(v) | Certificate::Dual(v) => v,
        }
    }

    pub fn is_primal(&self) -> bool {
        matches!(self, Certificate::Primal(_))
    }
}

/// Which alternative pair a certificate refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlternativeKind {
    /// `A x = b`  vs  `A^T y = 0  and  b.y != 0`.
    LinearSystem,
    /// `x >= 0, A x = b`  vs  `A^T y >= 0  and  b.y < 0`.
    EqualityFarkas,
    /// `x >= 0, A x <= b`  vs  `y >= 0, A^T y >= 0  and  b.y < 0`.
    InequalityFarkas,
}

/// Outcome of the canonical-form minimization
/// `min c.x  s.t.  A x = b, x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinResult {
    Infeasible,
    /// `ray` satisfies `A ray = 0`, `ray >= 0`, `c.ray < 0`.
    Unbounded { ray: Vec<Rat> },
    Minimum { value: Rat, point: Vec<Rat> },
}

/// Either a solution of `A x = b` (x unrestricted in sign) or a row
/// combination `y` with `A^T y = 0` and `b.y != 0`.
///
/// Decided by Gauss-Jordan elimination on `[A | I | b]`; the identity
/// block records the row operations, so an inconsistent row directly
/// reads off the dual certificate.
pub fn solve_linear_alternative(a: &Mat<Rat>, b: &[Rat]) -> Certificate {
    let m = a.rows();
    let n = a.cols();
    assert_eq!(b.len(), m, "b length must equal row count");

    let width = n + m + 1;
    let mut rows: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rat> = a.row(i).to_vec();
            row.resize(width, Rat::zero());
            row[n + i] = Rat::one();
            row[width - 1] = b[i].clone();
            row
        })
        .collect();

    let mut pivot_col_of_row: Vec<Option<usize>> = vec![None; m];
    let mut next_row = 0;
    for col in 0..n {
        let Some(pr) = (next_row..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pr);
        let inv = rows[next_row][col].inv();
        for j in 0..width {
            rows[next_row][j] = &rows[next_row][j] * &inv;
        }
        for i in 0..m {
            if i != next_row && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..width {
                    rows[i][j] = &rows[i][j] - &(&f * &rows[next_row][j]);
                }
            }
        }
        pivot_col_of_row[next_row] = Some(col);
        next_row += 1;
        if next_row == m {
            break;
        }
    }

    // A zero A-part with nonzero rhs is a contradiction; its multiplier
    // row is the certificate.
    for i in 0..m {
        let a_part_zero = rows[i][..n].iter().all(Rat::is_zero);
        if a_part_zero && !rows[i][width - 1].is_zero() {
            let y: Vec<Rat> = rows[i][n..n + m].to_vec();
            debug_assert!(verify_certificate(
                AlternativeKind::LinearSystem,
                a,
                b,
                &Certificate::Dual(y.clone())
            ));
            return Certificate::Dual(y);
        }
    }

    // Consistent: particular solution with free variables at zero.
    let mut x = vec![Rat::zero(); n];
    for i in 0..m {
        if let Some(col) = pivot_col_of_row[i] {
            x[col] = rows[i][width - 1].clone();
        }
    }
    debug_assert!(verify_certificate(
        AlternativeKind::LinearSystem,
        a,
        b,
        &Certificate::Primal(x.clone())
    ));
    Certificate::Primal(x)
}

/// Either `x >= 0` with `A x = b`, or `y` with `A^T y >= 0` and `b.y < 0`.
pub fn farkas_equality(a: &Mat<Rat>, b: &[Rat]) -> Certificate {
    let zero_cost = vec![Rat::zero(); a.cols()];
    match minimize_canonical(a, b, &zero_cost) {
        CanonOutcome::Optimal { point, .. } => Certificate::Primal(point),
        CanonOutcome::Infeasible { farkas_y } => Certificate::Dual(farkas_y),
        CanonOutcome::Unbounded { .. } => unreachable!("zero objective cannot be unbounded"),
    }
}

/// Either `x >= 0` with `A x <= b`, or `y >= 0` with `A^T y >= 0` and
/// `b.y < 0`. Reduces to `farkas_equality` on `[A | I]`; the dual
/// certificate passes through unchanged (the slack block adds `y >= 0`).
pub fn farkas_inequality(a: &Mat<Rat>, b: &[Rat]) -> Certificate {
    let m = a.rows();
    assert_eq!(b.len(), m, "b length must equal row count");
    let widened = Mat::from_fn(m, a.cols() + m, |i, j| {
        if j < a.cols() {
            a.get(i, j).clone()
        } else if j - a.cols() == i {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    match farkas_equality(&widened, b) {
        Certificate::Primal(xs) => Certificate::Primal(xs[..a.cols()].to_vec()),
        Certificate::Dual(y) => Certificate::Dual(y),
    }
}

/// Replays every condition of the claimed alternative from scratch using
/// only matrix arithmetic. A certificate of the wrong shape never verifies.
pub fn verify_certificate(
    kind: AlternativeKind,
    a: &Mat<Rat>,
    b: &[Rat],
    cert: &Certificate,
) -> bool {
    if b.len() != a.rows() {
        return false;
    }
    match (kind, cert) {
        (AlternativeKind::LinearSystem, Certificate::Primal(x)) => {
            x.len() == a.cols() && a.mul_vec(x) == b
        }
        (AlternativeKind::LinearSystem, Certificate::Dual(y)) => {
            y.len() == a.rows()
                && a.transpose().mul_vec(y).iter().all(Rat::is_zero)
                && !dot(b, y).is_zero()
        }
        (AlternativeKind::EqualityFarkas, Certificate::Primal(x)) => {
            x.len() == a.cols() && x.iter().all(|v| !v.is_negative()) && a.mul_vec(x) == b
        }
        (AlternativeKind::EqualityFarkas, Certificate::Dual(y)) => {
            y.len() == a.rows()
                && a.transpose().mul_vec(y).iter().all(|v| !v.is_negative())
                && dot(b, y).is_negative()
        }
        (AlternativeKind::InequalityFarkas, Certificate::Primal(x)) => {
            x.len() == a.cols()
                && x.iter().all(|v| !v.is_negative())
                && a.mul_vec(x).iter().zip(b).all(|(lhs, rhs)| lhs <= rhs)
        }
        (AlternativeKind::InequalityFarkas, Certificate::Dual(y)) => {
            y.len() == a.rows()
                && y.iter().all(|v| !v.is_negative())
                && a.transpose().mul_vec(y).iter().all(|v| !v.is_negative())
                && dot(b, y).is_negative()
        }
    }
}

/// Exact minimization of `c.x` over `{x >= 0 : A x = b}` by two-phase
/// simplex with Bland's rule.
pub fn canonical_lp_minimize(a: &Mat<Rat>, b: &[Rat], c: &[Rat]) -> MinResult {
    match minimize_canonical(a, b, c) {
        CanonOutcome::Infeasible { .. } => MinResult::Infeasible,
        CanonOutcome::Unbounded { ray } => MinResult::Unbounded { ray },
        CanonOutcome::Optimal { value, point } => MinResult::Minimum { value, point },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn m(rows: Vec<Vec<i64>>) -> Mat<Rat> {
        Mat::from_rows(
            rows.into_iter()
                .map(|row| row.into_iter().map(r).collect())
                .collect(),
        )
    }

    #[test]
    fn linear_alternative_examples() {
        let c1 = solve_linear_alternative(&m(vec![vec![1, 1]]), &[r(2)]);
        assert!(c1.is_primal());
        assert!(verify_certificate(
            AlternativeKind::LinearSystem,
            &m(vec![vec![1, 1]]),
            &[r(2)],
            &c1
        ));

        let c2 = solve_linear_alternative(&m(vec![vec![0]]), &[r(1)]);
        assert!(!c2.is_primal());
        assert!(verify_certificate(
            AlternativeKind::LinearSystem,
            &m(vec![vec![0]]),
            &[r(1)],
            &c2
        ));

        let a3 = m(vec![vec![1], vec![1]]);
        let b3 = [r(0), r(1)];
        let c3 = solve_linear_alternative(&a3, &b3);
        assert!(!c3.is_primal());
        assert!(verify_certificate(AlternativeKind::LinearSystem, &a3, &b3, &c3));
    }

    #[test]
    fn equality_farkas_examples() {
        let id = Mat::identity(2);
        let b = [r(2), r(3)];
        match farkas_equality(&id, &b) {
            Certificate::Primal(x) => assert_eq!(x, vec![r(2), r(3)]),
            _ => panic!("expected primal"),
        }

        let a2 = m(vec![vec![1]]);
        let b2 = [r(-1)];
        let c2 = farkas_equality(&a2, &b2);
        assert!(!c2.is_primal());
        assert!(verify_certificate(AlternativeKind::EqualityFarkas, &a2, &b2, &c2));

        let a3 = m(vec![vec![1, 2], vec![2, 1]]);
        let b3 = [r(3), r(3)];
        let c3 = farkas_equality(&a3, &b3);
        assert!(verify_certificate(AlternativeKind::EqualityFarkas, &a3, &b3, &c3));
        assert!(c3.is_primal());
    }

    #[test]
    fn inequality_farkas_examples() {
        let a1 = m(vec![vec![1]]);
        let c1 = farkas_inequality(&a1, &[r(1)]);
        assert!(c1.is_primal());
        assert!(verify_certificate(
            AlternativeKind::InequalityFarkas,
            &a1,
            &[r(1)],
            &c1
        ));

        let a2 = m(vec![vec![-1]]);
        let c2 = farkas_inequality(&a2, &[r(-1)]);
        assert!(c2.is_primal());
        assert!(verify_certificate(
            AlternativeKind::InequalityFarkas,
            &a2,
            &[r(-1)],
            &c2
        ));

        // x <= 1 and -x <= -2 conflict.
        let a3 = m(vec![vec![1], vec![-1]]);
        let b3 = [r(1), r(-2)];
        let c3 = farkas_inequality(&a3, &b3);
        assert!(!c3.is_primal());
        assert!(verify_certificate(AlternativeKind::InequalityFarkas, &a3, &b3, &c3));
    }

    #[test]
    fn verify_rejects_wrong_side_and_shape() {
        let a = m(vec![vec![1]]);
        let b = [r(-1)];
        assert!(verify_certificate(
            AlternativeKind::EqualityFarkas,
            &a,
            &b,
            &Certificate::Dual(vec![r(1)])
        ));
        assert!(!verify_certificate(
            AlternativeKind::EqualityFarkas,
            &a,
            &b,
            &Certificate::Primal(vec![r(1)])
        ));
        // wrong length
        assert!(!verify_certificate(
            AlternativeKind::EqualityFarkas,
            &a,
            &b,
            &Certificate::Primal(vec![r(1), r(2)])
        ));
    }

    #[test]
    fn canonical_minimize_examples() {
        assert_eq!(
            canonical_lp_minimize(&m(vec![vec![1]]), &[r(1)], &[r(1)]),
            MinResult::Minimum {
                value: r(1),
                point: vec![r(1)]
            }
        );
        assert_eq!(
            canonical_lp_minimize(&m(vec![vec![1]]), &[r(-1)], &[r(0)]),
            MinResult::Infeasible
        );
        let empty = Mat::from_fn(0, 2, |_, _| Rat::zero());
        match canonical_lp_minimize(&empty, &[], &[r(-1), r(0)]) {
            MinResult::Unbounded { ray } => {
                assert!(!ray[0].is_negative() && !ray[1].is_negative());
                assert!(dot(&[r(-1), r(0)], &ray).is_negative());
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn inequality_agrees_with_slack_equality() {
        let a = m(vec![vec![1, 2], vec![-1, 1]]);
        let b = [r(3), r(-4)];
        let direct = farkas_inequality(&a, &b);
        let widened = Mat::from_blocks(
            &a,
            &Mat::identity(2),
            &Mat::zeros(0, 2),
            &Mat::zeros(0, 2),
        );
        let via_slacks = farkas_equality(&widened, &b);
        assert_eq!(direct.is_primal(), via_slacks.is_primal());
    }
}
