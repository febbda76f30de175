//! Finite-domain valued constraint satisfaction: instances as multisets of
//! cost-function terms, fractional operations, the Max-Cut property, and
//! the basic LP relaxation.
//!
//! Labels are plain indices `0..d`. Cost tables are row-major over the
//! argument tuples with the last coordinate running fastest; the same
//! convention orders the relaxation's joint columns, and the emitted
//! legend records it so external checkers can address them.

use serde::Serialize;
use thiserror::Error;

use crate::farkas::MinResult;
use crate::lp::CanonicalLP;
use crate::mat::Mat;
use crate::rat::Rat;

/// Hard ceiling for exhaustive enumerations (tuples, assignments).
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum VcspError {
    #[error("enumeration of {needed} cases exceeds the cap of {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("cost function {func}: table length {got}, expected domain_size^arity = {want}")]
    BadTableLength { func: usize, got: usize, want: usize },
    #[error("term {term}: app length {got}, expected arity {want}")]
    BadAppLength { term: usize, got: usize, want: usize },
    #[error("term {term}: variable index {var} out of range (instance has {num_vars} variables)")]
    VarOutOfRange { term: usize, var: usize, num_vars: usize },
    #[error("term {term}: function index {func} out of range ({num_funcs} functions)")]
    FuncOutOfRange { term: usize, func: usize, num_funcs: usize },
    #[error("operation {op}: table length {got}, expected domain_size^arity = {want}")]
    BadOpTableLength { op: usize, got: usize, want: usize },
    #[error("operation {op}: output label {label} out of range for domain size {domain_size}")]
    OpLabelOutOfRange { op: usize, label: usize, domain_size: usize },
    #[error("domain size mismatch: {left} vs {right}")]
    DomainMismatch { left: usize, right: usize },
}

fn pow_checked(d: usize, n: usize) -> u128 {
    (d as u128).pow(n as u32)
}

fn check_cap(needed: u128, cap: u64) -> Result<usize, VcspError> {
    if needed > cap as u128 {
        Err(VcspError::CapExceeded { needed, cap })
    } else {
        Ok(needed as usize)
    }
}

/// Row-major index of `tuple` over domain `0..d`, last coordinate fastest.
fn tuple_index(tuple: &[usize], d: usize) -> usize {
    tuple.iter().fold(0, |acc, &v| {
        debug_assert!(v < d);
        acc * d + v
    })
}

fn index_tuple(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

/// Visits all tuples of length `n` over `0..d` in lexicographic order.
fn for_each_tuple(d: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    if d == 0 && n > 0 {
        return;
    }
    let mut t = vec![0usize; n];
    loop {
        visit(&t);
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            t[k] += 1;
            if t[k] < d {
                break;
            }
            t[k] = 0;
        }
    }
}

/// Cost function of fixed arity over labels `0..domain_size`, tabulated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CostFunction {
    pub arity: usize,
    pub domain_size: usize,
    pub table: Vec<Rat>,
}

impl CostFunction {
    pub fn new(arity: usize, domain_size: usize, table: Vec<Rat>) -> Result<CostFunction, VcspError> {
        let want = pow_checked(domain_size, arity);
        if table.len() as u128 != want {
            return Err(VcspError::BadTableLength {
                func: 0,
                got: table.len(),
                want: want as usize,
            });
        }
        Ok(CostFunction {
            arity,
            domain_size,
            table,
        })
    }

    pub fn eval(&self, tuple: &[usize]) -> &Rat {
        assert_eq!(tuple.len(), self.arity, "tuple arity mismatch");
        &self.table[tuple_index(tuple, self.domain_size)]
    }

    /// Exhaustive check of the improvement inequality
    /// `m * sum_g f(g applied coordinatewise to x) <= |w| * sum_i f(x_i)`
    /// over all families `x` of `m` argument tuples.
    pub fn admits_fractional(&self, omega: &FractionalOperation) -> Result<bool, VcspError> {
        self.admits_fractional_capped(omega, DEFAULT_ENUM_CAP)
    }

    pub fn admits_fractional_capped(
        &self,
        omega: &FractionalOperation,
        cap: u64,
    ) -> Result<bool, VcspError> {
        if self.domain_size != omega.domain_size {
            return Err(VcspError::DomainMismatch {
                left: self.domain_size,
                right: omega.domain_size,
            });
        }
        let d = self.domain_size;
        let n = self.arity;
        let m = omega.arity;
        let families = check_cap(pow_checked(d, n * m), cap)?;

        let m_rat = Rat::from(n_to_big(m));
        let size_rat = Rat::from(n_to_big(omega.ops.len()));
        let mut family = vec![0usize; n * m];
        for _ in 0..families {
            // family encodes x_0, ..., x_{m-1} back to back
            let xs: Vec<&[usize]> = (0..m).map(|i| &family[i * n..(i + 1) * n]).collect();
            let mut rhs = Rat::zero();
            for x in &xs {
                rhs = &rhs + self.eval(x);
            }
            let mut lhs = Rat::zero();
            let mut args = vec![0usize; m];
            let mut out = vec![0usize; n];
            for g in &omega.ops {
                for j in 0..n {
                    for (i, x) in xs.iter().enumerate() {
                        args[i] = x[j];
                    }
                    out[j] = g[tuple_index(&args, d)];
                }
                lhs = &lhs + self.eval(&out);
            }
            if &m_rat * &lhs > &size_rat * &rhs {
                return Ok(false);
            }
            if !advance(&mut family, d) {
                break;
            }
        }
        Ok(true)
    }

    /// Searches for labels `a != b` whose unordered pair is exactly the
    /// argmin of this binary function, symmetric at the minimum.
    pub fn has_max_cut_property(&self) -> Option<(usize, usize)> {
        assert_eq!(self.arity, 2, "Max-Cut property is defined for arity 2");
        let d = self.domain_size;
        let min = self.table.iter().min()?;
        let argmin: Vec<(usize, usize)> = (0..d)
            .flat_map(|x| (0..d).map(move |y| (x, y)))
            .filter(|&(x, y)| self.eval(&[x, y]) == min)
            .collect();
        match argmin.as_slice() {
            [(a1, b1), (a2, b2)] if a1 == b2 && b1 == a2 && a1 != b1 => Some((*a1, *b1)),
            _ => None,
        }
    }
}

fn n_to_big(n: usize) -> num::BigInt {
    num::BigInt::from(n)
}

fn advance(tuple: &mut [usize], d: usize) -> bool {
    let mut k = tuple.len();
    loop {
        if k == 0 {
            return false;
        }
        k -= 1;
        tuple[k] += 1;
        if tuple[k] < d {
            return true;
        }
        tuple[k] = 0;
    }
}

/// One applied occurrence of a template function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub func: usize,
    pub app: Vec<usize>,
}

/// A finite-domain instance: a template of cost functions plus a sequence
/// of terms. Terms are a multiset; position distinguishes equal copies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub domain_size: usize,
    pub num_vars: usize,
    pub functions: Vec<CostFunction>,
    pub terms: Vec<Term>,
}

impl Instance {
    pub fn new(
        domain_size: usize,
        num_vars: usize,
        functions: Vec<CostFunction>,
        terms: Vec<Term>,
    ) -> Result<Instance, VcspError> {
        for (fi, f) in functions.iter().enumerate() {
            if f.domain_size != domain_size {
                return Err(VcspError::DomainMismatch {
                    left: f.domain_size,
                    right: domain_size,
                });
            }
            let want = pow_checked(domain_size, f.arity);
            if f.table.len() as u128 != want {
                return Err(VcspError::BadTableLength {
                    func: fi,
                    got: f.table.len(),
                    want: want as usize,
                });
            }
        }
        for (ti, t) in terms.iter().enumerate() {
            let f = functions.get(t.func).ok_or(VcspError::FuncOutOfRange {
                term: ti,
                func: t.func,
                num_funcs: functions.len(),
            })?;
            if t.app.len() != f.arity {
                return Err(VcspError::BadAppLength {
                    term: ti,
                    got: t.app.len(),
                    want: f.arity,
                });
            }
            if let Some(&v) = t.app.iter().find(|&&v| v >= num_vars) {
                return Err(VcspError::VarOutOfRange {
                    term: ti,
                    var: v,
                    num_vars,
                });
            }
        }
        Ok(Instance {
            domain_size,
            num_vars,
            functions,
            terms,
        })
    }

    fn term_arity(&self, t: usize) -> usize {
        self.functions[self.terms[t].func].arity
    }

    /// Sum over terms of the table entry at `x` composed with the term's
    /// variable application.
    pub fn eval_solution(&self, x: &[usize]) -> Rat {
        assert_eq!(x.len(), self.num_vars, "assignment length mismatch");
        assert!(
            x.iter().all(|&v| v < self.domain_size),
            "label out of range"
        );
        let mut total = Rat::zero();
        for t in &self.terms {
            let tuple: Vec<usize> = t.app.iter().map(|&i| x[i]).collect();
            total = &total + self.functions[t.func].eval(&tuple);
        }
        total
    }

    /// Exhaustive minimum and the lexicographically smallest minimizer.
    pub fn brute_force_optimum(&self) -> Result<(Rat, Vec<usize>), VcspError> {
        self.brute_force_optimum_capped(DEFAULT_ENUM_CAP)
    }

    pub fn brute_force_optimum_capped(&self, cap: u64) -> Result<(Rat, Vec<usize>), VcspError> {
        check_cap(pow_checked(self.domain_size, self.num_vars), cap)?;
        let mut best: Option<(Rat, Vec<usize>)> = None;
        for_each_tuple(self.domain_size, self.num_vars, |x| {
            let v = self.eval_solution(x);
            match &best {
                Some((bv, _)) if *bv <= v => {}
                _ => best = Some((v, x.to_vec())),
            }
        });
        // d = 0 with variables has no assignments; treat as empty sum 0
        Ok(best.unwrap_or_else(|| (Rat::zero(), Vec::new())))
    }

    /// Builds the basic LP relaxation and its index legend.
    ///
    /// Columns: one joint-distribution block per term copy (tuples in
    /// lexicographic order), then one marginal block per variable.
    /// Rows: consistency of each term position with the marginals, then
    /// marginal totals (= 1), then joint totals (= 1).
    pub fn relax_blp(&self) -> (CanonicalLP, BlpLegend) {
        let d = self.domain_size;
        let mut cols = Vec::new();
        let mut joint_start = Vec::with_capacity(self.terms.len());
        for (ti, _) in self.terms.iter().enumerate() {
            joint_start.push(cols.len());
            let nt = self.term_arity(ti);
            for v_idx in 0..pow_checked(d, nt) as usize {
                cols.push(BlpCol::Joint {
                    term: ti,
                    tuple: index_tuple(v_idx, d, nt),
                });
            }
        }
        let marginal_start = cols.len();
        for i in 0..self.num_vars {
            for a in 0..d {
                cols.push(BlpCol::Marginal { var: i, label: a });
            }
        }
        let marginal_col = |i: usize, a: usize| marginal_start + i * d + a;

        let mut rows = Vec::new();
        for (ti, _) in self.terms.iter().enumerate() {
            for k in 0..self.term_arity(ti) {
                for a in 0..d {
                    rows.push(BlpRow::Consistency {
                        term: ti,
                        pos: k,
                        label: a,
                    });
                }
            }
        }
        for i in 0..self.num_vars {
            rows.push(BlpRow::MarginalTotal { var: i });
        }
        for ti in 0..self.terms.len() {
            rows.push(BlpRow::JointTotal { term: ti });
        }

        let mut a = Mat::zeros(rows.len(), cols.len());
        let mut b = vec![Rat::zero(); rows.len()];
        let mut c = vec![Rat::zero(); cols.len()];

        for (ri, row) in rows.iter().enumerate() {
            match *row {
                BlpRow::Consistency { term, pos, label } => {
                    let nt = self.term_arity(term);
                    for v_idx in 0..pow_checked(d, nt) as usize {
                        if index_tuple(v_idx, d, nt)[pos] == label {
                            a.set(ri, joint_start[term] + v_idx, Rat::one());
                        }
                    }
                    let var = self.terms[term].app[pos];
                    let mc = marginal_col(var, label);
                    a.set(ri, mc, a.get(ri, mc) - &Rat::one());
                }
                BlpRow::MarginalTotal { var } => {
                    for label in 0..d {
                        a.set(ri, marginal_col(var, label), Rat::one());
                    }
                    b[ri] = Rat::one();
                }
                BlpRow::JointTotal { term } => {
                    let nt = self.term_arity(term);
                    for v_idx in 0..pow_checked(d, nt) as usize {
                        a.set(ri, joint_start[term] + v_idx, Rat::one());
                    }
                    b[ri] = Rat::one();
                }
            }
        }
        for (ci, col) in cols.iter().enumerate() {
            if let BlpCol::Joint { term, tuple } = col {
                c[ci] = self.functions[self.terms[*term].func].eval(tuple).clone();
            }
        }

        (CanonicalLP::new(a, b, c), BlpLegend { cols, rows })
    }

    /// Indicator embedding of an assignment into the relaxation's
    /// variable space; always an exact solution with matching cost.
    pub fn solution_to_blp(&self, x: &[usize]) -> Vec<Rat> {
        assert_eq!(x.len(), self.num_vars, "assignment length mismatch");
        assert!(
            x.iter().all(|&v| v < self.domain_size),
            "label out of range"
        );
        let d = self.domain_size;
        let mut z = Vec::new();
        for t in &self.terms {
            let chosen: Vec<usize> = t.app.iter().map(|&i| x[i]).collect();
            let nt = chosen.len();
            let chosen_idx = tuple_index(&chosen, d);
            for v_idx in 0..pow_checked(d, nt) as usize {
                z.push(if v_idx == chosen_idx {
                    Rat::one()
                } else {
                    Rat::zero()
                });
            }
        }
        for i in 0..self.num_vars {
            for a in 0..d {
                z.push(if x[i] == a { Rat::one() } else { Rat::zero() });
            }
        }
        z
    }

    /// Exact minimum of the basic LP relaxation with its witness. The
    /// relaxation is feasible (any assignment embeds) and bounded (its
    /// variables live in probability simplexes), so a minimum exists.
    pub fn blp_minimum(&self) -> (Rat, Vec<Rat>) {
        let (lp, _) = self.relax_blp();
        match lp.minimize() {
            MinResult::Minimum { value, point } => (value, point),
            other => unreachable!("basic LP relaxation must attain a minimum, got {other:?}"),
        }
    }
}

/// Column meaning in the relaxation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlpCol {
    Joint { term: usize, tuple: Vec<usize> },
    Marginal { var: usize, label: usize },
}

/// Row meaning in the relaxation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlpRow {
    Consistency { term: usize, pos: usize, label: usize },
    MarginalTotal { var: usize },
    JointTotal { term: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct BlpLegend {
    pub cols: Vec<BlpCol>,
    pub rows: Vec<BlpRow>,
}

/// Multiset of `arity`-ary operations on the domain, tabulated like cost
/// functions (last input fastest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalOperation {
    pub arity: usize,
    pub domain_size: usize,
    pub ops: Vec<Vec<usize>>,
}

impl FractionalOperation {
    pub fn new(
        arity: usize,
        domain_size: usize,
        ops: Vec<Vec<usize>>,
    ) -> Result<FractionalOperation, VcspError> {
        let want = pow_checked(domain_size, arity);
        for (oi, op) in ops.iter().enumerate() {
            if op.len() as u128 != want {
                return Err(VcspError::BadOpTableLength {
                    op: oi,
                    got: op.len(),
                    want: want as usize,
                });
            }
            if let Some(&bad) = op.iter().find(|&&v| v >= domain_size) {
                return Err(VcspError::OpLabelOutOfRange {
                    op: oi,
                    label: bad,
                    domain_size,
                });
            }
        }
        Ok(FractionalOperation {
            arity,
            domain_size,
            ops,
        })
    }

    /// All `arity` projections; admitted by every cost function.
    pub fn projections(arity: usize, domain_size: usize) -> FractionalOperation {
        let size = pow_checked(domain_size, arity) as usize;
        let ops = (0..arity)
            .map(|k| {
                (0..size)
                    .map(|idx| index_tuple(idx, domain_size, arity)[k])
                    .collect()
            })
            .collect();
        FractionalOperation {
            arity,
            domain_size,
            ops,
        }
    }

    pub fn size(&self) -> usize {
        self.ops.len()
    }

    /// Applies every operation coordinatewise to a family of `arity`
    /// assignments, preserving multiplicity.
    pub fn tt(&self, x: &[Vec<usize>]) -> Vec<Vec<usize>> {
        assert_eq!(x.len(), self.arity, "family must have one row per input");
        let len = x.first().map_or(0, Vec::len);
        assert!(x.iter().all(|row| row.len() == len), "ragged family");
        self.ops
            .iter()
            .map(|g| {
                (0..len)
                    .map(|i| {
                        let args: Vec<usize> = x.iter().map(|row| row[i]).collect();
                        g[tuple_index(&args, self.domain_size)]
                    })
                    .collect()
            })
            .collect()
    }

    /// Every member operation is invariant under adjacent transpositions
    /// of its inputs (which generate all permutations).
    pub fn is_symmetric(&self) -> Result<bool, VcspError> {
        self.is_symmetric_capped(DEFAULT_ENUM_CAP)
    }

    pub fn is_symmetric_capped(&self, cap: u64) -> Result<bool, VcspError> {
        let d = self.domain_size;
        let m = self.arity;
        check_cap(pow_checked(d, m), cap)?;
        for g in &self.ops {
            let mut ok = true;
            for_each_tuple(d, m, |t| {
                if !ok {
                    return;
                }
                for k in 0..m.saturating_sub(1) {
                    let mut s = t.to_vec();
                    s.swap(k, k + 1);
                    if g[tuple_index(t, d)] != g[tuple_index(&s, d)] {
                        ok = false;
                        return;
                    }
                }
            });
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn rq(n: i64, d: u64) -> Rat {
        Rat::new(n, d)
    }

    fn cf(arity: usize, d: usize, table: Vec<Rat>) -> CostFunction {
        CostFunction::new(arity, d, table).unwrap()
    }

    /// Two unary absolute-value terms over a two-label domain standing for
    /// the values 9/10 and -1/2.
    fn abs_instance() -> Instance {
        Instance::new(
            2,
            2,
            vec![cf(1, 2, vec![rq(9, 10), rq(1, 2)])],
            vec![
                Term { func: 0, app: vec![0] },
                Term { func: 0, app: vec![1] },
            ],
        )
        .unwrap()
    }

    fn max_cut_table() -> CostFunction {
        cf(2, 2, vec![r(1), r(0), r(0), r(1)])
    }

    fn min_max_op() -> FractionalOperation {
        // tables over (x, y) in order 00, 01, 10, 11
        FractionalOperation::new(2, 2, vec![vec![0, 0, 0, 1], vec![0, 1, 1, 1]]).unwrap()
    }

    #[test]
    fn eval_solution_examples() {
        let i = abs_instance();
        assert_eq!(i.eval_solution(&[0, 1]), rq(7, 5));
        let empty = Instance::new(2, 2, vec![], vec![]).unwrap();
        assert_eq!(empty.eval_solution(&[0, 0]), Rat::zero());
        let doubled = Instance::new(
            2,
            2,
            vec![cf(1, 2, vec![rq(9, 10), rq(1, 2)])],
            vec![
                Term { func: 0, app: vec![0] },
                Term { func: 0, app: vec![0] },
            ],
        )
        .unwrap();
        assert_eq!(doubled.eval_solution(&[0, 0]), rq(9, 5));
    }

    #[test]
    fn brute_force_examples() {
        let i = abs_instance();
        let (v, x) = i.brute_force_optimum().unwrap();
        assert_eq!(v, r(1));
        assert_eq!(x, vec![1, 1]);

        let const_zero = Instance::new(
            2,
            1,
            vec![cf(1, 2, vec![r(0), r(0)])],
            vec![Term { func: 0, app: vec![0] }],
        )
        .unwrap();
        assert_eq!(const_zero.brute_force_optimum().unwrap().0, r(0));

        let edge = Instance::new(
            2,
            2,
            vec![max_cut_table()],
            vec![Term { func: 0, app: vec![0, 1] }],
        )
        .unwrap();
        let (v, x) = edge.brute_force_optimum().unwrap();
        assert_eq!(v, r(0));
        assert_ne!(x[0], x[1]);
    }

    #[test]
    fn brute_force_cap() {
        let i = Instance::new(10, 7, vec![], vec![]).unwrap();
        assert!(matches!(
            i.brute_force_optimum_capped(1_000_000),
            Err(VcspError::CapExceeded { .. })
        ));
    }

    #[test]
    fn tt_examples() {
        let identity = FractionalOperation::projections(1, 2);
        let x = vec![vec![0, 1, 1]];
        assert_eq!(identity.tt(&x), vec![vec![0, 1, 1]]);

        let mm = min_max_op();
        let x = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(mm.tt(&x), vec![vec![0, 0], vec![1, 1]]);

        let dup = FractionalOperation::new(1, 2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(dup.tt(&[vec![1, 0]]), vec![vec![1, 0], vec![1, 0]]);
    }

    #[test]
    fn admits_fractional_examples() {
        // every cost function admits the projections
        let f = cf(2, 2, vec![r(3), r(-1), r(7), r(2)]);
        assert!(f
            .admits_fractional(&FractionalOperation::projections(2, 2))
            .unwrap());

        // the submodularity inequality for min/max
        let submodular = cf(2, 2, vec![r(0), r(1), r(1), r(0)]);
        assert!(submodular.admits_fractional(&min_max_op()).unwrap());

        let supermodular = cf(2, 2, vec![r(0), r(1), r(1), r(3)]);
        assert!(!supermodular.admits_fractional(&min_max_op()).unwrap());

        assert!(!max_cut_table().admits_fractional(&min_max_op()).unwrap());
    }

    #[test]
    fn is_symmetric_examples() {
        assert!(min_max_op().is_symmetric().unwrap());
        let first_proj = FractionalOperation::new(2, 2, vec![vec![0, 0, 1, 1]]).unwrap();
        assert!(!first_proj.is_symmetric().unwrap());
        let unary = FractionalOperation::new(1, 3, vec![vec![2, 0, 1]]).unwrap();
        assert!(unary.is_symmetric().unwrap());
    }

    #[test]
    fn max_cut_property_examples() {
        assert_eq!(max_cut_table().has_max_cut_property(), Some((0, 1)));
        let constant = cf(2, 2, vec![r(5), r(5), r(5), r(5)]);
        assert_eq!(constant.has_max_cut_property(), None);
        let unique_diag = cf(2, 2, vec![r(0), r(1), r(1), r(3)]);
        assert_eq!(unique_diag.has_max_cut_property(), None);
    }

    #[test]
    fn relax_blp_shapes() {
        let edge = Instance::new(
            2,
            2,
            vec![max_cut_table()],
            vec![Term { func: 0, app: vec![0, 1] }],
        )
        .unwrap();
        let (lp, legend) = edge.relax_blp();
        assert_eq!(lp.a.cols(), 8);
        assert_eq!(lp.a.rows(), 7);
        assert_eq!(legend.cols.len(), 8);
        assert_eq!(legend.rows.len(), 7);

        let bare = Instance::new(2, 1, vec![], vec![]).unwrap();
        let (lp, _) = bare.relax_blp();
        assert_eq!(lp.a.cols(), 2);
        assert_eq!(lp.a.rows(), 1);
    }

    #[test]
    fn duplicate_terms_get_separate_blocks() {
        let twice = Instance::new(
            2,
            2,
            vec![max_cut_table()],
            vec![
                Term { func: 0, app: vec![0, 1] },
                Term { func: 0, app: vec![0, 1] },
            ],
        )
        .unwrap();
        let (lp, legend) = twice.relax_blp();
        // two joint blocks of 4, two marginal blocks of 2
        assert_eq!(lp.a.cols(), 12);
        let joint_totals = legend
            .rows
            .iter()
            .filter(|r| matches!(r, BlpRow::JointTotal { .. }))
            .count();
        assert_eq!(joint_totals, 2);
        // embedded assignments count each copy once
        let z = twice.solution_to_blp(&[0, 1]);
        assert_eq!(lp.objective(&z), twice.eval_solution(&[0, 1]));
    }

    #[test]
    fn solution_embedding_is_exact() {
        let i = abs_instance();
        let (lp, _) = i.relax_blp();
        for x in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            let z = i.solution_to_blp(&x);
            assert!(lp.is_solution(&z), "embedding must solve the relaxation");
            assert_eq!(lp.objective(&z), i.eval_solution(&x));
        }
    }

    #[test]
    fn blp_minimum_examples() {
        let edge = Instance::new(
            2,
            2,
            vec![max_cut_table()],
            vec![Term { func: 0, app: vec![0, 1] }],
        )
        .unwrap();
        assert_eq!(edge.blp_minimum().0, r(0));

        let supermodular_edge = Instance::new(
            2,
            2,
            vec![cf(2, 2, vec![r(0), r(1), r(1), r(3)])],
            vec![Term { func: 0, app: vec![0, 1] }],
        )
        .unwrap();
        assert_eq!(supermodular_edge.blp_minimum().0, r(0));

        let empty = Instance::new(2, 1, vec![], vec![]).unwrap();
        assert_eq!(empty.blp_minimum().0, r(0));
    }

    #[test]
    fn blp_witness_blocks_sum_to_one() {
        let edge = Instance::new(
            2,
            2,
            vec![max_cut_table()],
            vec![Term { func: 0, app: vec![0, 1] }],
        )
        .unwrap();
        let (lp, legend) = edge.relax_blp();
        let (_, z) = edge.blp_minimum();
        assert!(lp.is_solution(&z));
        let mut joint_sum = Rat::zero();
        let mut marg_sums = vec![Rat::zero(); 2];
        for (ci, col) in legend.cols.iter().enumerate() {
            match col {
                BlpCol::Joint { .. } => joint_sum = &joint_sum + &z[ci],
                BlpCol::Marginal { var, .. } => {
                    marg_sums[*var] = &marg_sums[*var] + &z[ci];
                }
            }
        }
        assert_eq!(joint_sum, Rat::one());
        assert!(marg_sums.iter().all(|s| s == &Rat::one()));
    }

}
