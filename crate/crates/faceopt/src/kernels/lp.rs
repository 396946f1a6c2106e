//! Exact two-phase simplex over rationals with Bland's pivot rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Row {
    pub coeffs: Vec<(usize, Q)>,
    pub cmp: Cmp,
    pub rhs: Q,
}

/// Minimize `objective . x` subject to the rows and `lower <= x <= upper`.
#[derive(Clone, Debug, Default)]
pub struct LpInstance {
    pub vars: usize,
    pub rows: Vec<Row>,
    pub lower: Vec<Q>,
    pub upper: Vec<Option<Q>>,
    pub objective: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Q,
    pub x: Vec<Q>,
}

impl LpInstance {
    /// New instance with all variables in `[0, inf)` and a zero objective.
    pub fn new(vars: usize) -> Self {
        LpInstance {
            vars,
            rows: Vec::new(),
            lower: vec![Q::zero(); vars],
            upper: vec![None; vars],
            objective: vec![Q::zero(); vars],
        }
    }

    pub fn add_row(&mut self, coeffs: Vec<(usize, Q)>, cmp: Cmp, rhs: Q) {
        self.rows.push(Row { coeffs, cmp, rhs });
    }

    pub fn bound(&mut self, var: usize, lo: Q, hi: Option<Q>) {
        self.lower[var] = lo;
        self.upper[var] = hi;
    }

    /// True if `x` satisfies every row and bound exactly.
    pub fn is_feasible(&self, x: &[Q]) -> bool {
        if x.len() != self.vars {
            return false;
        }
        for j in 0..self.vars {
            if x[j] < self.lower[j] || self.upper[j].as_ref().is_some_and(|u| x[j] > *u) {
                return false;
            }
        }
        self.rows.iter().all(|r| {
            let lhs: Q = r.coeffs.iter().map(|(j, c)| c * &x[*j]).sum();
            match r.cmp {
                Cmp::Le => lhs <= r.rhs,
                Cmp::Ge => lhs >= r.rhs,
                Cmp::Eq => lhs == r.rhs,
            }
        })
    }

    pub fn value(&self, x: &[Q]) -> Q {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost` over columns `< allowed`.
    fn run(&mut self, cost: &[Q], allowed: usize) -> Result<()> {
        loop {
            let reduced = |j: usize| -> Q {
                let mut z = cost[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    if !row[j].is_zero() {
                        z -= &cost[self.basis[i]] * &row[j];
                    }
                }
                z
            };
            let Some(enter) = (0..allowed).find(|&j| !self.basis.contains(&j) && reduced(j).is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[enter].is_positive() {
                    let ratio = &row[self.cols] / &row[enter];
                    let better = match &leave {
                        None => true,
                        Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else { return Err(Error::Unbounded) };
            self.pivot(r, enter);
        }
    }
}

/// Exact optimum of `inst`.
pub fn solve_lp(inst: &LpInstance) -> Result<LpSolution> {
    // shift x = lower + y with y >= 0; upper bounds become rows
    let n = inst.vars;
    let mut rows: Vec<(Vec<Q>, Cmp, Q)> = Vec::new();
    for r in &inst.rows {
        let mut dense = vec![Q::zero(); n];
        let mut rhs = r.rhs.clone();
        for (j, c) in &r.coeffs {
            dense[*j] += c;
            rhs -= c * &inst.lower[*j];
        }
        rows.push((dense, r.cmp, rhs));
    }
    for j in 0..n {
        if let Some(u) = &inst.upper[j] {
            let mut dense = vec![Q::zero(); n];
            dense[j] = Q::one();
            rows.push((dense, Cmp::Le, u - &inst.lower[j]));
        }
    }
    for (dense, cmp, rhs) in rows.iter_mut() {
        if rhs.is_negative() {
            for v in dense.iter_mut() {
                *v = -&*v;
            }
            *rhs = -&*rhs;
            *cmp = match *cmp {
                Cmp::Le => Cmp::Ge,
                Cmp::Ge => Cmp::Le,
                Cmp::Eq => Cmp::Eq,
            };
        }
    }
    let slacks = rows.iter().filter(|r| r.1 != Cmp::Eq).count();
    let m = rows.len();
    let structural = n + slacks;
    let cols = structural + m;
    let mut tab = Tableau { rows: Vec::with_capacity(m), basis: Vec::with_capacity(m), cols };
    let mut s = n;
    for (i, (dense, cmp, rhs)) in rows.into_iter().enumerate() {
        let mut row = vec![Q::zero(); cols + 1];
        row[..n].clone_from_slice(&dense);
        match cmp {
            Cmp::Le => {
                row[s] = Q::one();
                s += 1;
            }
            Cmp::Ge => {
                row[s] = -Q::one();
                s += 1;
            }
            Cmp::Eq => {}
        }
        row[structural + i] = Q::one();
        row[cols] = rhs;
        tab.rows.push(row);
        tab.basis.push(structural + i);
    }

    let mut phase1 = vec![Q::zero(); cols];
    for c in phase1.iter_mut().skip(structural) {
        *c = Q::one();
    }
    tab.run(&phase1, cols)?;
    let infeasible: Q = (0..m).filter(|&i| tab.basis[i] >= structural).map(|i| tab.rows[i][cols].clone()).sum();
    if infeasible.is_positive() {
        return Err(Error::Infeasible);
    }
    // drive zero-valued artificials out of the basis; drop redundant rows
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= structural {
            match (0..structural).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.rows.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut phase2 = vec![Q::zero(); cols];
    phase2[..n].clone_from_slice(&inst.objective);
    tab.run(&phase2, structural)?;

    let mut x = inst.lower.clone();
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            x[b] += &tab.rows[i][cols];
        }
    }
    let value = inst.value(&x);
    assert!(inst.is_feasible(&x), "simplex returned an infeasible point");
    Ok(LpSolution { value, x })
}
