//! Linear programs whose data may contain `bot` and `top`.
//!
//! Validity imposes six structural conditions on where the infinities may
//! appear; the class satisfying them is exactly the one for which the
//! extended strong duality holds. The extended Farkas procedure and the
//! optimum both work by finitization: tautology rows are removed, columns
//! holding `top` force their variable to zero, and what remains is an
//! ordinary rational program.

use std::fmt;

use thiserror::Error;

use crate::ext::{dot_weig, Ext};
use crate::farkas::{farkas_inequality, Certificate, MinResult};
use crate::lp::{opposites_opt, Optimum, StandardLP};
use crate::mat::Mat;
use crate::rat::{NNRat, Rat};

/// Matrix `A` and vectors `b`, `c` over the extended rationals; always
/// minimized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedLP {
    pub a: Mat<Ext>,
    pub b: Vec<Ext>,
    pub c: Vec<Ext>,
}

/// The six structural validity conditions. The short codes follow the
/// usual naming: `hAi`/`hAj` forbid mixed infinities in a row/column of
/// `A`, the other four forbid infinity clashes between `A` and `b` or `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValidityCondition {
    /// `hAi`: no row of `A` contains both `bot` and `top`.
    RowBotAndTop,
    /// `hAj`: no column of `A` contains both `bot` and `top`.
    ColBotAndTop,
    /// `hbA`: no row with `bot` in `A` has `b = bot`.
    BotRowWithBotRhs,
    /// `hcA`: no column with `top` in `A` has `c = bot`.
    TopColWithBotCost,
    /// `hAb`: no row with `top` in `A` has `b = top`.
    TopRowWithTopRhs,
    /// `hAc`: no column with `bot` in `A` has `c = top`.
    BotColWithTopCost,
}

impl ValidityCondition {
    pub fn code(self) -> &'static str {
        match self {
            ValidityCondition::RowBotAndTop => "hAi",
            ValidityCondition::ColBotAndTop => "hAj",
            ValidityCondition::BotRowWithBotRhs => "hbA",
            ValidityCondition::TopColWithBotCost => "hcA",
            ValidityCondition::TopRowWithTopRhs => "hAb",
            ValidityCondition::BotColWithTopCost => "hAc",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            ValidityCondition::RowBotAndTop => "a row of A contains both bot and top",
            ValidityCondition::ColBotAndTop => "a column of A contains both bot and top",
            ValidityCondition::BotRowWithBotRhs => "a row with bot in A has b = bot",
            ValidityCondition::TopColWithBotCost => "a column with top in A has c = bot",
            ValidityCondition::TopRowWithTopRhs => "a row with top in A has b = top",
            ValidityCondition::BotColWithTopCost => "a column with bot in A has c = top",
        }
    }
}

/// A violated validity condition together with the witnessing index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: ValidityCondition,
    pub row: Option<usize>,
    pub col: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.condition.code(), self.condition.describe())?;
        if let Some(i) = self.row {
            write!(f, " (row {i})")?;
        }
        if let Some(j) = self.col {
            write!(f, " (column {j})")?;
        }
        Ok(())
    }
}

/// An extended program that passed all six validity conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidElp(ExtendedLP);

/// The four preconditions of the extended Farkas alternative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FarkasPrecondition {
    /// No row of `A` contains both `bot` and `top`.
    RowBotAndTop,
    /// No column of `A` contains both `bot` and `top`.
    ColBotAndTop,
    /// No `top` in an `A`-row where `b` is `top`.
    TopRowWithTopRhs,
    /// No `bot` in an `A`-row where `b` is `bot`.
    BotRowWithBotRhs,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("extended Farkas precondition violated: {which:?} at row {row:?}, column {col:?}")]
pub struct PreconditionViolation {
    pub which: FarkasPrecondition,
    pub row: Option<usize>,
    pub col: Option<usize>,
}

fn row_has(a: &Mat<Ext>, i: usize, what: &Ext) -> Option<usize> {
    (0..a.cols()).find(|&j| a.get(i, j) == what)
}

fn col_has(a: &Mat<Ext>, j: usize, what: &Ext) -> Option<usize> {
    (0..a.rows()).find(|&i| a.get(i, j) == what)
}

impl ExtendedLP {
    pub fn new(a: Mat<Ext>, b: Vec<Ext>, c: Vec<Ext>) -> ExtendedLP {
        assert_eq!(b.len(), a.rows(), "b length must equal row count");
        assert_eq!(c.len(), a.cols(), "c length must equal column count");
        ExtendedLP { a, b, c }
    }

    /// All violated validity conditions with witnesses; empty means valid.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for i in 0..self.a.rows() {
            if row_has(&self.a, i, &Ext::Bot).is_some()
                && row_has(&self.a, i, &Ext::Top).is_some()
            {
                out.push(Violation {
                    condition: ValidityCondition::RowBotAndTop,
                    row: Some(i),
                    col: None,
                });
            }
        }
        for j in 0..self.a.cols() {
            if col_has(&self.a, j, &Ext::Bot).is_some()
                && col_has(&self.a, j, &Ext::Top).is_some()
            {
                out.push(Violation {
                    condition: ValidityCondition::ColBotAndTop,
                    row: None,
                    col: Some(j),
                });
            }
        }
        for i in 0..self.a.rows() {
            if self.b[i] == Ext::Bot && row_has(&self.a, i, &Ext::Bot).is_some() {
                out.push(Violation {
                    condition: ValidityCondition::BotRowWithBotRhs,
                    row: Some(i),
                    col: None,
                });
            }
        }
        for j in 0..self.a.cols() {
            if self.c[j] == Ext::Bot && col_has(&self.a, j, &Ext::Top).is_some() {
                out.push(Violation {
                    condition: ValidityCondition::TopColWithBotCost,
                    row: None,
                    col: Some(j),
                });
            }
        }
        for i in 0..self.a.rows() {
            if self.b[i] == Ext::Top && row_has(&self.a, i, &Ext::Top).is_some() {
                out.push(Violation {
                    condition: ValidityCondition::TopRowWithTopRhs,
                    row: Some(i),
                    col: None,
                });
            }
        }
        for j in 0..self.a.cols() {
            if self.c[j] == Ext::Top && col_has(&self.a, j, &Ext::Bot).is_some() {
                out.push(Violation {
                    condition: ValidityCondition::BotColWithTopCost,
                    row: None,
                    col: Some(j),
                });
            }
        }
        out
    }

    /// Weighted `A` times `x` compared against `b` under the extended order.
    pub fn is_solution(&self, x: &[NNRat]) -> bool {
        assert_eq!(x.len(), self.a.cols(), "solution length mismatch");
        self.a
            .mul_weig(x)
            .iter()
            .zip(&self.b)
            .all(|(lhs, rhs)| lhs <= rhs)
    }

    pub fn objective(&self, x: &[NNRat]) -> Ext {
        dot_weig(&self.c, x)
    }

    /// `<-A^T, c, b>` with elementwise extended negation.
    pub fn dualize(&self) -> ExtendedLP {
        ExtendedLP {
            a: self.a.transpose().map(Ext::neg),
            b: self.c.clone(),
            c: self.b.clone(),
        }
    }
}

impl ValidElp {
    pub fn new(lp: ExtendedLP) -> Result<ValidElp, Vec<Violation>> {
        let violations = lp.violations();
        if violations.is_empty() {
            Ok(ValidElp(lp))
        } else {
            Err(violations)
        }
    }

    /// Wraps without checking. Intended for tests that replay programs
    /// which intentionally break validity.
    #[doc(hidden)]
    pub fn new_unchecked(lp: ExtendedLP) -> ValidElp {
        ValidElp(lp)
    }

    pub fn inner(&self) -> &ExtendedLP {
        &self.0
    }

    /// Dualization preserves validity: the six conditions swap pairwise.
    pub fn dualize(&self) -> ValidElp {
        let dual = self.0.dualize();
        debug_assert!(
            !self.0.violations().is_empty() || dual.violations().is_empty(),
            "dual of a valid program must be valid"
        );
        ValidElp(dual)
    }

    pub fn is_solution(&self, x: &[NNRat]) -> bool {
        self.0.is_solution(x)
    }

    pub fn objective(&self, x: &[NNRat]) -> Ext {
        self.0.objective(x)
    }

    /// Four-valued optimum; see `solve` for the witness-carrying variant.
    pub fn optimum(&self) -> Optimum {
        self.solve().optimum
    }

    /// Computes the optimum by finitization, together with a witness
    /// assignment (full length, zeros on deleted columns) whenever one
    /// exists that reaches the reported value.
    pub fn solve(&self) -> ElpSolution {
        optimum_impl(&self.0)
    }

    /// Both optima plus verdicts, with weak duality checked over every
    /// verified pair of supplied solutions using extended arithmetic.
    pub fn duality_report(
        &self,
        primal_points: &[Vec<NNRat>],
        dual_points: &[Vec<NNRat>],
    ) -> ElpDualityReport {
        let dual = self.dualize();
        let ps = self.solve();
        let qs = dual.solve();

        let collect = |lp: &ValidElp, solved: &ElpSolution, points: &[Vec<NNRat>]| {
            let mut values = Vec::new();
            if let Some(w) = &solved.witness {
                values.push(lp.objective(w));
            }
            for p in points {
                if p.len() == lp.inner().a.cols() && lp.is_solution(p) {
                    values.push(lp.objective(p));
                }
            }
            values
        };
        let pvals = collect(self, &ps, primal_points);
        let qvals = collect(&dual, &qs, dual_points);

        let mut weak_pairs = 0;
        let mut weak_holds = true;
        for p in &pvals {
            for q in &qvals {
                weak_pairs += 1;
                if p.add(q) < Ext::zero() {
                    weak_holds = false;
                }
            }
        }

        let either_feasible =
            ps.optimum != Some(Ext::Top) || qs.optimum != Some(Ext::Top);
        let opposites = opposites_opt(&ps.optimum, &qs.optimum);
        ElpDualityReport {
            primal_optimum: ps.optimum,
            dual_optimum: qs.optimum,
            either_feasible,
            opposites,
            weak_pairs,
            weak_holds,
        }
    }
}

/// Optimum plus, when available, a solution reaching it.
#[derive(Clone, Debug)]
pub struct ElpSolution {
    pub optimum: Optimum,
    pub witness: Option<Vec<NNRat>>,
}

#[derive(Clone, Debug)]
pub struct ElpDualityReport {
    pub primal_optimum: Optimum,
    pub dual_optimum: Optimum,
    pub either_feasible: bool,
    pub opposites: bool,
    pub weak_pairs: usize,
    pub weak_holds: bool,
}

/// Rows that constrain nothing: `bot` anywhere in the `A`-row makes the
/// product `bot`, and `b = top` is satisfied by everything.
fn tautology_row(a: &Mat<Ext>, b: &[Ext], i: usize) -> bool {
    b[i] == Ext::Top || row_has(a, i, &Ext::Bot).is_some()
}

struct Finitized {
    keep_rows: Vec<usize>,
    keep_cols: Vec<usize>,
    /// Some kept row has `b = bot`, which no finite product can reach.
    bot_in_rhs: bool,
    a_fin: Mat<Rat>,
    b_fin: Vec<Rat>,
}

/// Removes tautology rows, then deletes the columns that still hold `top`
/// (their variables are forced to zero). What survives is all finite,
/// except possibly `bot` entries of `b`.
fn finitize(a: &Mat<Ext>, b: &[Ext]) -> Finitized {
    let keep_rows: Vec<usize> = (0..a.rows()).filter(|&i| !tautology_row(a, b, i)).collect();
    let keep_cols: Vec<usize> = (0..a.cols())
        .filter(|&j| keep_rows.iter().all(|&i| a.get(i, j) != &Ext::Top))
        .collect();
    let bot_in_rhs = keep_rows.iter().any(|&i| b[i] == Ext::Bot);
    let rows: Vec<usize> = if bot_in_rhs {
        Vec::new()
    } else {
        keep_rows.clone()
    };
    let a_fin = Mat::from_fn(rows.len(), keep_cols.len(), |ri, cj| {
        match a.get(rows[ri], keep_cols[cj]) {
            Ext::Fin(q) => q.clone(),
            other => unreachable!("finitized entry must be finite, got {other:?}"),
        }
    });
    let b_fin = rows
        .iter()
        .map(|&i| match &b[i] {
            Ext::Fin(q) => q.clone(),
            other => unreachable!("finitized rhs must be finite, got {other:?}"),
        })
        .collect();
    Finitized {
        keep_rows,
        keep_cols,
        bot_in_rhs,
        a_fin,
        b_fin,
    }
}

fn scatter(cols: &[usize], values: &[Rat], n: usize) -> Vec<NNRat> {
    let mut full = vec![NNRat::zero(); n];
    for (slot, v) in cols.iter().zip(values) {
        full[*slot] = NNRat::try_new(v.clone()).expect("solver point must be nonnegative");
    }
    full
}

/// Declarative optimum, computed by finitization.
///
/// The order of decisions matters: any `bot` in `c` forces every
/// objective value to `bot` (the zero weight still absorbs), so it is
/// checked right after feasibility; only then are `top`-cost variables
/// pinned to zero, because solutions carrying them reach only `top`,
/// which feasibility ignores.
fn optimum_impl(p: &ExtendedLP) -> ElpSolution {
    let n = p.a.cols();
    let fin = finitize(&p.a, &p.b);

    if fin.bot_in_rhs {
        return ElpSolution {
            optimum: Some(Ext::Top),
            witness: None,
        };
    }

    if p.c.iter().any(|c| c == &Ext::Bot) {
        // Any solution evaluates to bot. Feasibility alone decides.
        return match farkas_inequality(&fin.a_fin, &fin.b_fin) {
            Certificate::Primal(x) => ElpSolution {
                optimum: Some(Ext::Bot),
                witness: Some(scatter(&fin.keep_cols, &x, n)),
            },
            Certificate::Dual(_) => ElpSolution {
                optimum: Some(Ext::Top),
                witness: None,
            },
        };
    }

    // Variables with top cost are pinned to zero; positive mass on them
    // reaches only top, which does not count as feasible.
    let solve_cols: Vec<usize> = fin
        .keep_cols
        .iter()
        .copied()
        .filter(|&j| p.c[j] != Ext::Top)
        .collect();
    let col_slot: Vec<usize> = solve_cols
        .iter()
        .map(|j| fin.keep_cols.iter().position(|k| k == j).unwrap())
        .collect();
    let a_solve = Mat::from_fn(fin.a_fin.rows(), solve_cols.len(), |i, cj| {
        fin.a_fin.get(i, col_slot[cj]).clone()
    });
    let c_solve: Vec<Rat> = solve_cols
        .iter()
        .map(|&j| match &p.c[j] {
            Ext::Fin(q) => q.clone(),
            other => unreachable!("cost must be finite here, got {other:?}"),
        })
        .collect();

    let lp = StandardLP::new(a_solve, fin.b_fin.clone(), c_solve);
    match lp.solve() {
        MinResult::Infeasible => ElpSolution {
            optimum: Some(Ext::Top),
            witness: None,
        },
        MinResult::Unbounded { .. } => ElpSolution {
            optimum: Some(Ext::Bot),
            witness: None,
        },
        MinResult::Minimum { value, point } => ElpSolution {
            optimum: Some(Ext::Fin(value)),
            witness: Some(scatter(&solve_cols, &point, n)),
        },
    }
}

/// Extended theorem of alternatives: either `x >= 0` with the weighted
/// product `A x <= b`, or `y >= 0` with `-A^T y <= 0` and `b.y < 0`.
///
/// Proceeds in the stated order: delete tautology rows, delete columns
/// containing `top`, answer `y = 0` if `bot` survives in `b`, otherwise
/// decide the finite residue and re-extend the witness with zeros.
pub fn extended_farkas(
    a: &Mat<Ext>,
    b: &[Ext],
) -> Result<Certificate, PreconditionViolation> {
    assert_eq!(b.len(), a.rows(), "b length must equal row count");

    for i in 0..a.rows() {
        if let (Some(jb), Some(_)) = (row_has(a, i, &Ext::Bot), row_has(a, i, &Ext::Top)) {
            return Err(PreconditionViolation {
                which: FarkasPrecondition::RowBotAndTop,
                row: Some(i),
                col: Some(jb),
            });
        }
    }
    for j in 0..a.cols() {
        if let (Some(ib), Some(_)) = (col_has(a, j, &Ext::Bot), col_has(a, j, &Ext::Top)) {
            return Err(PreconditionViolation {
                which: FarkasPrecondition::ColBotAndTop,
                row: Some(ib),
                col: Some(j),
            });
        }
    }
    for i in 0..a.rows() {
        if b[i] == Ext::Top {
            if let Some(j) = row_has(a, i, &Ext::Top) {
                return Err(PreconditionViolation {
                    which: FarkasPrecondition::TopRowWithTopRhs,
                    row: Some(i),
                    col: Some(j),
                });
            }
        }
    }
    for i in 0..a.rows() {
        if b[i] == Ext::Bot {
            if let Some(j) = row_has(a, i, &Ext::Bot) {
                return Err(PreconditionViolation {
                    which: FarkasPrecondition::BotRowWithBotRhs,
                    row: Some(i),
                    col: Some(j),
                });
            }
        }
    }

    let fin = finitize(a, b);
    if fin.bot_in_rhs {
        // b.y with y = 0 still contains a 0 * bot = bot term, hence < 0.
        let y = vec![Rat::zero(); a.rows()];
        debug_assert!(verify_extended_certificate(a, b, &Certificate::Dual(y.clone())));
        return Ok(Certificate::Dual(y));
    }

    let cert = match farkas_inequality(&fin.a_fin, &fin.b_fin) {
        Certificate::Primal(x) => {
            let mut full = vec![Rat::zero(); a.cols()];
            for (slot, v) in fin.keep_cols.iter().zip(&x) {
                full[*slot] = v.clone();
            }
            Certificate::Primal(full)
        }
        Certificate::Dual(y) => {
            let mut full = vec![Rat::zero(); a.rows()];
            for (slot, v) in fin.keep_rows.iter().zip(&y) {
                full[*slot] = v.clone();
            }
            Certificate::Dual(full)
        }
    };
    debug_assert!(verify_extended_certificate(a, b, &cert));
    Ok(cert)
}

/// Replays the extended alternative's conditions: primal `x >= 0` with
/// `A x <= b`; dual `y >= 0` with `-A^T y <= 0` and `b.y < 0`.
pub fn verify_extended_certificate(a: &Mat<Ext>, b: &[Ext], cert: &Certificate) -> bool {
    if b.len() != a.rows() {
        return false;
    }
    match cert {
        Certificate::Primal(x) => {
            if x.len() != a.cols() {
                return false;
            }
            let Ok(xs) = NNRat::try_vec(x) else {
                return false;
            };
            a.mul_weig(&xs).iter().zip(b).all(|(lhs, rhs)| lhs <= rhs)
        }
        Certificate::Dual(y) => {
            if y.len() != a.rows() {
                return false;
            }
            let Ok(ys) = NNRat::try_vec(y) else {
                return false;
            };
            let neg_at = a.transpose().map(Ext::neg);
            neg_at
                .mul_weig(&ys)
                .iter()
                .all(|v| v <= &Ext::zero())
                && dot_weig(b, &ys) < Ext::zero()
        }
    }
}
