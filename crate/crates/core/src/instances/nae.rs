use std::collections::BTreeSet;
use std::fmt;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Result, TangleError};

/// A signed variable occurrence; variables are numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    fn from_dimacs(x: i64) -> Self {
        Literal {
            var: x.unsigned_abs() as usize,
            negated: x < 0,
        }
    }

    fn value(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "-{}", self.var)
        } else {
            write!(f, "{}", self.var)
        }
    }
}

/// A not-all-equal 3-SAT formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeFormula {
    var_count: usize,
    clauses: Vec<[Literal; 3]>,
}

impl NaeFormula {
    pub fn new(var_count: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (k, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var == 0 || l.var > var_count) {
                return Err(TangleError::invalid(format!(
                    "clause {} uses variable {} outside 1..={var_count}",
                    k + 1,
                    l.var
                )));
            }
        }
        Ok(NaeFormula { var_count, clauses })
    }

    /// Positive clauses given as variable triples.
    pub fn positive(var_count: usize, clauses: &[[usize; 3]]) -> Result<Self> {
        NaeFormula::new(
            var_count,
            clauses.iter().map(|c| c.map(Literal::pos)).collect(),
        )
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// All literals positive and each clause on three different variables.
    pub fn is_positive_diff(&self) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().all(|l| !l.negated) && c[0].var != c[1].var && c[0].var != c[2].var && c[1].var != c[2].var
        })
    }

    /// Whether no clause has three equal literal values under `assignment`.
    pub fn nae_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            let v = c.map(|l| l.value(assignment));
            !(v[0] == v[1] && v[1] == v[2])
        })
    }

    /// Exhaustive search; intended for at most about 20 variables.
    pub fn nae_satisfiable(&self) -> bool {
        assert!(self.var_count < 32, "exhaustive check limited to 31 variables");
        (0u32..1 << self.var_count).any(|bits| {
            let a: Vec<bool> = (0..self.var_count).map(|k| bits >> k & 1 == 1).collect();
            self.nae_satisfied_by(&a)
        })
    }

    /// Parses `p nae3sat <vars> <clauses>` followed by clauses of three
    /// nonzero literals, each terminated by `0`. Lines starting with `c` are
    /// comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<Literal> = Vec::new();
        let mut last_line = 0;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(TangleError::parse(line_no, "duplicate header"));
                }
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[1] != "nae3sat" {
                    return Err(TangleError::parse(line_no, "expected `p nae3sat <vars> <clauses>`"));
                }
                let num = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| TangleError::parse(line_no, format!("bad number {s:?}")))
                };
                header = Some((num(parts[2])?, num(parts[3])?));
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(TangleError::parse(line_no, "clause before header"));
            };
            for tok in line.split_whitespace() {
                let x: i64 = tok
                    .parse()
                    .map_err(|_| TangleError::parse(line_no, format!("bad literal {tok:?}")))?;
                if x == 0 {
                    if current.len() != 3 {
                        return Err(TangleError::parse(
                            line_no,
                            format!("clause has {} literals, expected 3", current.len()),
                        ));
                    }
                    clauses.push([current[0], current[1], current[2]]);
                    current.clear();
                    continue;
                }
                let lit = Literal::from_dimacs(x);
                if lit.var > vars {
                    return Err(TangleError::parse(
                        line_no,
                        format!("variable {} exceeds declared count {vars}", lit.var),
                    ));
                }
                current.push(lit);
            }
        }
        let Some((vars, count)) = header else {
            return Err(TangleError::parse(last_line.max(1), "missing `p nae3sat` header"));
        };
        if !current.is_empty() {
            return Err(TangleError::parse(last_line, "last clause is not terminated by 0"));
        }
        if clauses.len() != count {
            return Err(TangleError::parse(
                last_line,
                format!("header declares {count} clauses, found {}", clauses.len()),
            ));
        }
        NaeFormula::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p nae3sat {} {}\n", self.var_count, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }

    /// Equivalent positive formula with three distinct variables per clause.
    ///
    /// Each negated variable `v` gets a partner `y` with the clause
    /// `(v ∨ y ∨ y)`, and `¬v` becomes `y`. A clause `(x ∨ x ∨ y)` becomes
    /// `(x ∨ y ∨ a)`, `(x ∨ y ∨ b)`, `(x ∨ y ∨ c)` with a shared clause
    /// `(a ∨ b ∨ c)`. A clause `(x ∨ x ∨ x)` can never be satisfied and is
    /// replaced by all ten triples over five fresh variables. Formulas that are
    /// already positive with distinct variables come back unchanged.
    pub fn to_positive_nae_diff(&self) -> NaeFormula {
        let mut next = self.var_count;
        let mut fresh = || {
            next += 1;
            next
        };
        let negated: BTreeSet<usize> = self
            .clauses
            .iter()
            .flatten()
            .filter(|l| l.negated)
            .map(|l| l.var)
            .collect();
        let partner: Vec<(usize, usize)> = negated.iter().map(|&v| (v, fresh())).collect();
        let y_of = |v: usize| partner.iter().find(|p| p.0 == v).map(|p| p.1).expect("negated var");

        let mut positive: Vec<[usize; 3]> = self
            .clauses
            .iter()
            .map(|c| c.map(|l| if l.negated { y_of(l.var) } else { l.var }))
            .collect();
        positive.extend(partner.iter().map(|&(x, y)| [x, y, y]));

        let mut abc: Option<[usize; 3]> = None;
        let mut false_block: Option<[usize; 5]> = None;
        let mut out = Vec::new();
        for c in positive {
            let [p, q, r] = c;
            if p != q && p != r && q != r {
                out.push(c);
            } else if p == q && q == r {
                false_block.get_or_insert_with(|| [fresh(), fresh(), fresh(), fresh(), fresh()]);
            } else {
                let (x, y) = if p == q {
                    (p, r)
                } else if p == r {
                    (p, q)
                } else {
                    (q, p)
                };
                let [a, b, cc] = *abc.get_or_insert_with(|| [fresh(), fresh(), fresh()]);
                out.extend([[x, y, a], [x, y, b], [x, y, cc]]);
            }
        }
        if let Some(t) = abc {
            out.push(t);
        }
        if let Some(f) = false_block {
            for i in 0..5 {
                for j in i + 1..5 {
                    for k in j + 1..5 {
                        out.push([f[i], f[j], f[k]]);
                    }
                }
            }
        }
        NaeFormula::positive(next, &out).expect("fresh variables are in range")
    }

    /// A random positive formula with three distinct variables per clause.
    pub fn random_positive<R: Rng + ?Sized>(var_count: usize, clause_count: usize, rng: &mut R) -> Self {
        assert!(var_count >= 3, "need at least three variables");
        let clauses = (0..clause_count)
            .map(|_| {
                let v = sample(rng, var_count, 3);
                [v.index(0) + 1, v.index(1) + 1, v.index(2) + 1]
            })
            .collect::<Vec<_>>();
        NaeFormula::positive(var_count, &clauses).expect("variables in range")
    }

    /// A random formula with arbitrary signs and possibly repeated variables.
    pub fn random_general<R: Rng + ?Sized>(var_count: usize, clause_count: usize, rng: &mut R) -> Self {
        let clauses = (0..clause_count)
            .map(|_| {
                [(); 3].map(|_| Literal {
                    var: rng.gen_range(1..=var_count),
                    negated: rng.gen_bool(0.5),
                })
            })
            .collect();
        NaeFormula::new(var_count, clauses).expect("variables in range")
    }
}
