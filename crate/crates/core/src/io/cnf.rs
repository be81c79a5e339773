//! CNF encoding of "some tangle of height at most h realizes L".
//!
//! Variables, all 1-based in DIMACS numbering:
//!
//! * `x[t][p][w]`: wire `w` is at position `p` in layer `t` (`1 ≤ t ≤ h`).
//! * `s[t][p]`: positions `p` and `p+1` swap between layers `t` and `t+1`.
//! * `y[t][a][b]`: wires `a < b` swap at step `t`; only for pairs with
//!   `l_ab > 0`.
//! * `r[k][c]`: sequential counter over `y[1..=k][a][b]` for one pair, true
//!   iff at least `c` of them are true.
//!
//! Layer 1 is fixed to `id_n`. Steps with no swap are allowed, so the formula
//! is satisfiable iff the minimum height is at most `h`.

use std::fmt::Write;

use crate::error::{Result, TangleError};
use crate::model::{Permutation, SwapList, Tangle};

/// Default cap on the number of emitted clauses.
pub const DEFAULT_MAX_CLAUSES: u64 = 50_000_000;

/// A CNF formula in DIMACS numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: u32,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn to_dimacs(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            let _ = writeln!(out, "c {c}");
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

/// An exported formula plus what is needed to read a tangle off a model.
#[derive(Debug, Clone)]
pub struct CnfExport {
    pub cnf: Cnf,
    n: usize,
    height: usize,
}

impl CnfExport {
    pub fn height(&self) -> usize {
        self.height
    }

    fn x(&self, t: usize, p: usize, w: usize) -> i32 {
        x_var(self.n, t, p, w)
    }

    /// DIMACS text with a comment block describing the encoding.
    pub fn to_dimacs(&self) -> String {
        let n = self.n;
        let h = self.height;
        let comments = vec![
            "tangle realization, height at most h".to_string(),
            format!("n {n} h {h}"),
            format!(
                "x(t,p,w) = (t-1)*{nn} + (p-1)*{n} + w is true iff wire w is at position p of layer t",
                nn = n * n
            ),
        ];
        self.cnf.to_dimacs(&comments)
    }

    /// Reads the tangle from a satisfying assignment (DIMACS literals, any
    /// order). Repeated layers from idle steps are dropped.
    pub fn decode(&self, model: &[i32]) -> Result<Tangle> {
        let truth: std::collections::HashSet<i32> = model.iter().copied().filter(|&l| l > 0).collect();
        let mut layers: Vec<Permutation> = Vec::new();
        for t in 1..=self.height {
            let mut seq = Vec::with_capacity(self.n);
            for p in 1..=self.n {
                let w = (1..=self.n)
                    .find(|&w| truth.contains(&self.x(t, p, w)))
                    .ok_or_else(|| TangleError::invalid(format!("model leaves position {p} of layer {t} empty")))?;
                seq.push(w);
            }
            let layer = Permutation::from_sequence(&seq)?;
            if layers.last() != Some(&layer) {
                layers.push(layer);
            }
        }
        Tangle::new(layers)
    }
}

fn x_var(n: usize, t: usize, p: usize, w: usize) -> i32 {
    ((t - 1) * n * n + (p - 1) * n + w) as i32
}

/// Upper estimate of the clause count, used for the cap check.
fn estimate_clauses(list: &SwapList, h: usize) -> u128 {
    let n = list.n() as u128;
    let h = h as u128;
    let steps = h.saturating_sub(1);
    let layers = h * n * (1 + n * (n - 1) / 2);
    let transitions = steps * n * (n + 1) * 4;
    let pairs = steps * n * n * n;
    let counters: u128 = list
        .entries()
        .map(|(_, _, m)| steps * (m as u128 + 2) * 3 + 2 + steps * n * 2)
        .sum();
    layers + transitions + pairs + counters + n
}

/// Encodes "a tangle of height at most `h` starting at `id_n` realizes
/// `list`".
pub fn export_cnf(list: &SwapList, h: usize, max_clauses: u64) -> Result<CnfExport> {
    if h == 0 {
        return Err(TangleError::invalid("height must be at least 1"));
    }
    let n = list.n();
    let estimate = estimate_clauses(list, h);
    if estimate > max_clauses as u128 {
        return Err(TangleError::Resource {
            what: "cnf clauses",
            needed: estimate,
            limit: max_clauses as u128,
        });
    }
    if (h as u128) * (n as u128).pow(2) * 4 + estimate > i32::MAX as u128 {
        return Err(TangleError::invalid("instance too large for DIMACS variable numbering"));
    }

    let mut next = (h * n * n) as i32;
    let mut fresh = || {
        next += 1;
        next
    };
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let x = |t: usize, p: usize, w: usize| x_var(n, t, p, w);

    // Layer 1 is the identity; every position holds exactly one wire.
    for p in 1..=n {
        clauses.push(vec![x(1, p, p)]);
    }
    for t in 1..=h {
        for p in 1..=n {
            clauses.push((1..=n).map(|w| x(t, p, w)).collect());
            for a in 1..=n {
                for b in a + 1..=n {
                    clauses.push(vec![-x(t, p, a), -x(t, p, b)]);
                }
            }
        }
    }

    let steps = h - 1;
    let s: Vec<Vec<i32>> = (0..steps)
        .map(|_| (1..n).map(|_| fresh()).collect())
        .collect();
    let mut y: Vec<Vec<Option<i32>>> = Vec::with_capacity(steps);
    let slot = |a: usize, b: usize| (a - 1) * n + (b - 1);

    for t in 1..=steps {
        let st = &s[t - 1];
        // No two overlapping swaps.
        for p in 1..n.saturating_sub(1) {
            clauses.push(vec![-st[p - 1], -st[p]]);
        }
        for p in 1..=n {
            for w in 1..=n {
                if p < n {
                    let sp = st[p - 1];
                    clauses.push(vec![-sp, -x(t, p, w), x(t + 1, p + 1, w)]);
                    clauses.push(vec![-sp, -x(t, p + 1, w), x(t + 1, p, w)]);
                }
                // Untouched positions keep their wire.
                let mut c = vec![-x(t, p, w), x(t + 1, p, w)];
                if p > 1 {
                    c.push(st[p - 2]);
                }
                if p < n {
                    c.push(st[p - 1]);
                }
                clauses.push(c);
            }
        }
        let mut yt = vec![None; n * n];
        for a in 1..=n {
            for b in a + 1..=n {
                if list.get(a, b) > 0 {
                    yt[slot(a, b)] = Some(fresh());
                }
            }
        }
        for p in 1..n {
            let sp = st[p - 1];
            for a in 1..=n {
                for b in 1..=n {
                    if a == b {
                        continue;
                    }
                    let (lo, hi) = (a.min(b), a.max(b));
                    match yt[slot(lo, hi)] {
                        Some(v) => clauses.push(vec![-sp, -x(t, p, a), -x(t, p + 1, b), v]),
                        None => clauses.push(vec![-sp, -x(t, p, a), -x(t, p + 1, b)]),
                    }
                }
            }
        }
        // y forces the two wires to trade places, which in adjacent layers
        // means they were swapped.
        for a in 1..=n {
            for b in a + 1..=n {
                if let Some(v) = yt[slot(a, b)] {
                    for p in 1..=n {
                        clauses.push(vec![-v, -x(t, p, a), x(t + 1, p, b)]);
                        clauses.push(vec![-v, -x(t, p, b), x(t + 1, p, a)]);
                    }
                }
            }
        }
        y.push(yt);
    }

    // Exactly l_ab swaps per pair: sequential counter with full equivalence.
    for (a, b, m) in list.entries() {
        let m = m as usize;
        if steps < m {
            clauses.push(vec![]);
            continue;
        }
        // prev[c] for c in 0..=m+1; index 0 is constant true.
        let mut prev: Vec<Option<i32>> = vec![None; m + 2];
        for t in 1..=steps {
            let yv = y[t - 1][slot(a, b)].expect("listed pair has swap variables");
            let mut cur: Vec<Option<i32>> = vec![None; m + 2];
            for c in 1..=(m + 1).min(t) {
                let r = fresh();
                cur[c] = Some(r);
                let below = if c == 1 { None } else { prev[c - 1] };
                let same = prev[c];
                // r ↔ same ∨ (y ∧ below), where `below` is true for c = 1.
                if let Some(sv) = same {
                    clauses.push(vec![-sv, r]);
                }
                match below {
                    Some(bv) => {
                        clauses.push(vec![-yv, -bv, r]);
                        let mut c1 = vec![-r, yv];
                        let mut c2 = vec![-r, bv];
                        if let Some(sv) = same {
                            c1.push(sv);
                            c2.push(sv);
                        }
                        clauses.push(c1);
                        clauses.push(c2);
                    }
                    None => {
                        clauses.push(vec![-yv, r]);
                        let mut c1 = vec![-r, yv];
                        if let Some(sv) = same {
                            c1.push(sv);
                        }
                        clauses.push(c1);
                    }
                }
            }
            prev = cur;
        }
        clauses.push(vec![prev[m].expect("counter reaches m")]);
        if let Some(over) = prev[m + 1] {
            clauses.push(vec![-over]);
        }
    }

    // Pairs that never swap must not swap: handled by the clauses without y.
    Ok(CnfExport {
        cnf: Cnf {
            num_vars: next as u32,
            clauses,
        },
        n,
        height: h,
    })
}
