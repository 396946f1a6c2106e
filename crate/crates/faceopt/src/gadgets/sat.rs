use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, positive: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub vars: usize,
    pub clauses: Vec<Vec<Lit>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatMode {
    /// At least one true literal per clause.
    ThreeSat,
    /// Exactly one true literal per clause.
    OneInThree,
}

impl CnfFormula {
    /// Parses clauses written as signed 1-based integers, clauses separated
    /// by `;`, e.g. `"1 2 -3; -1 2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut clauses = Vec::new();
        let mut vars = 0;
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let mut clause = Vec::new();
            for tok in part.split_whitespace() {
                let v: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad literal {tok:?}")))?;
                if v == 0 {
                    return Err(Error::Parse("literal 0".into()));
                }
                let var = v.unsigned_abs() as usize - 1;
                vars = vars.max(var + 1);
                clause.push(Lit { var, positive: v > 0 });
            }
            clauses.push(clause);
        }
        Ok(CnfFormula { vars, clauses })
    }

    /// (positive, negative) occurrence counts of each variable.
    pub fn occurrences(&self) -> Vec<(usize, usize)> {
        let mut occ = vec![(0, 0); self.vars];
        for c in &self.clauses {
            for l in c {
                if l.positive {
                    occ[l.var].0 += 1;
                } else {
                    occ[l.var].1 += 1;
                }
            }
        }
        occ
    }

    pub fn satisfied_by(&self, assignment: &[bool], mode: SatMode) -> bool {
        self.clauses.iter().all(|c| {
            let t = c.iter().filter(|l| assignment[l.var] == l.positive).count();
            match mode {
                SatMode::ThreeSat => t >= 1,
                SatMode::OneInThree => t == 1,
            }
        })
    }
}

impl std::fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                let lits: Vec<String> = c.iter().map(|l| format!("{}x{}", if l.positive { "" } else { "!" }, l.var + 1)).collect();
                format!("({})", lits.join(" | "))
            })
            .collect();
        write!(f, "{}", parts.join(" & "))
    }
}

/// Truth-table satisfiability.
pub fn sat_oracle(phi: &CnfFormula, mode: SatMode) -> Result<bool> {
    if phi.vars > 20 {
        return Err(Error::TooLarge(phi.vars));
    }
    let mut assignment = vec![false; phi.vars];
    for bits in 0u32..(1 << phi.vars) {
        for (v, a) in assignment.iter_mut().enumerate() {
            *a = bits >> v & 1 == 1;
        }
        if phi.satisfied_by(&assignment, mode) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_formulas() {
        let f = CnfFormula::parse("1 2").unwrap();
        assert!(sat_oracle(&f, SatMode::OneInThree).unwrap());
        let empty = CnfFormula { vars: 0, clauses: vec![] };
        assert!(sat_oracle(&empty, SatMode::ThreeSat).unwrap());
        // x must be true and false at once
        let f = CnfFormula::parse("1; -1").unwrap();
        assert!(!sat_oracle(&f, SatMode::ThreeSat).unwrap());
        // exactly one of x,y,z and exactly one of x,y: z false, x xor y
        let f = CnfFormula::parse("1 2 3; 1 2").unwrap();
        assert!(sat_oracle(&f, SatMode::OneInThree).unwrap());
        let f = CnfFormula::parse("1 2; 1 2 3; 3").unwrap();
        assert!(!sat_oracle(&f, SatMode::OneInThree).unwrap());
        let big = CnfFormula { vars: 21, clauses: vec![] };
        assert_eq!(sat_oracle(&big, SatMode::ThreeSat), Err(Error::TooLarge(21)));
    }
}
