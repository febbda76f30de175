//! Shared generators for the randomized suites. Entries stay small
//! (integers in [-5, 5] over denominators 1..3) so exact pivots stay fast.
#![allow(dead_code)]

use lindual::elp::{ExtendedLP, ValidElp};
use lindual::vcsp::{CostFunction, FractionalOperation, Instance, Term};
use lindual::{Ext, Mat, Rat, StandardLP};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rat_small(rng: &mut TestRng) -> Rat {
    Rat::new(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn vec_small(rng: &mut TestRng, n: usize) -> Vec<Rat> {
    (0..n).map(|_| rat_small(rng)).collect()
}

pub fn mat_small(rng: &mut TestRng, m: usize, n: usize) -> Mat<Rat> {
    Mat::from_fn(m, n, |_, _| rat_small(rng))
}

pub fn lp_small(rng: &mut TestRng, m: usize, n: usize) -> StandardLP {
    StandardLP::new(mat_small(rng, m, n), vec_small(rng, m), vec_small(rng, n))
}

/// Extended entry: roughly `inf_pct` percent of draws are infinite,
/// split evenly between bot and top.
pub fn ext_small(rng: &mut TestRng, inf_pct: u32) -> Ext {
    let roll = rng.gen_range(0..100);
    if roll < inf_pct / 2 {
        Ext::Bot
    } else if roll < inf_pct {
        Ext::Top
    } else {
        Ext::Fin(rat_small(rng))
    }
}

pub fn ext_vec(rng: &mut TestRng, n: usize, inf_pct: u32) -> Vec<Ext> {
    (0..n).map(|_| ext_small(rng, inf_pct)).collect()
}

/// Rejection-samples until all six validity conditions hold.
pub fn elp_random_valid(rng: &mut TestRng, m: usize, n: usize, inf_pct: u32) -> ValidElp {
    loop {
        let lp = ExtendedLP::new(
            Mat::from_fn(m, n, |_, _| ext_small(rng, inf_pct)),
            ext_vec(rng, m, inf_pct),
            ext_vec(rng, n, inf_pct),
        );
        if let Ok(valid) = ValidElp::new(lp) {
            return valid;
        }
    }
}

/// All-finite extended program together with its rational shadow.
pub fn elp_all_finite(rng: &mut TestRng, m: usize, n: usize) -> (ValidElp, StandardLP) {
    let shadow = lp_small(rng, m, n);
    let lp = ExtendedLP::new(
        shadow.a.map(|q| Ext::Fin(q.clone())),
        shadow.b.iter().cloned().map(Ext::Fin).collect(),
        shadow.c.iter().cloned().map(Ext::Fin).collect(),
    );
    (ValidElp::new(lp).expect("finite programs are always valid"), shadow)
}

pub fn cost_table(rng: &mut TestRng, arity: usize, d: usize) -> CostFunction {
    let len = d.pow(arity as u32);
    CostFunction::new(arity, d, (0..len).map(|_| rat_small(rng)).collect()).unwrap()
}

/// Random instance with arities at most 2.
pub fn instance_small(
    rng: &mut TestRng,
    d: usize,
    num_vars: usize,
    max_terms: usize,
) -> Instance {
    let num_funcs = rng.gen_range(1..=2);
    let functions: Vec<CostFunction> = (0..num_funcs)
        .map(|_| cost_table(rng, rng.gen_range(1..=2), d))
        .collect();
    let num_terms = rng.gen_range(0..=max_terms);
    let terms = (0..num_terms)
        .map(|_| {
            let func = rng.gen_range(0..functions.len());
            let app = (0..functions[func].arity)
                .map(|_| rng.gen_range(0..num_vars))
                .collect();
            Term { func, app }
        })
        .collect();
    Instance::new(d, num_vars, functions, terms).unwrap()
}

/// Binary Boolean table satisfying f(0,0) + f(1,1) <= f(0,1) + f(1,0).
pub fn submodular_binary(rng: &mut TestRng) -> CostFunction {
    loop {
        let t: Vec<Rat> = (0..4).map(|_| rat_small(rng)).collect();
        if &t[0] + &t[3] <= &t[1] + &t[2] {
            return CostFunction::new(2, 2, t).unwrap();
        }
    }
}

/// Instance over a template of unary functions and submodular binaries.
pub fn submodular_instance(rng: &mut TestRng, num_vars: usize, max_terms: usize) -> Instance {
    let functions: Vec<CostFunction> = vec![
        cost_table(rng, 1, 2),
        submodular_binary(rng),
        submodular_binary(rng),
    ];
    let num_terms = rng.gen_range(1..=max_terms);
    let terms = (0..num_terms)
        .map(|_| {
            let func = rng.gen_range(0..functions.len());
            let app = (0..functions[func].arity)
                .map(|_| rng.gen_range(0..num_vars))
                .collect();
            Term { func, app }
        })
        .collect();
    Instance::new(2, num_vars, functions, terms).unwrap()
}

/// The pair {min, max} on the Boolean domain.
pub fn min_max_omega() -> FractionalOperation {
    FractionalOperation::new(2, 2, vec![vec![0, 0, 0, 1], vec![0, 1, 1, 1]]).unwrap()
}
