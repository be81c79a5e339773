//! Swap list built from a positive NAE 3-SAT formula with distinct variables
//! per clause. The list is feasible iff the formula is NAE-satisfiable.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Result, TangleError};
use crate::instances::NaeFormula;
use crate::model::SwapList;

/// The role of a wire in the reduction. Variable, clause, occurrence and
/// chain indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WireRole {
    Lambda,
    LambdaPrime,
    Alpha(usize),
    AlphaPrime(usize),
    Beta(usize, usize),
    BetaPrime(usize, usize),
    Var(usize),
    Clause(usize),
    Gamma { clause: usize, occ: usize },
    Psi { clause: usize, occ: usize, idx: usize },
    Phi(usize),
}

impl fmt::Display for WireRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WireRole::Lambda => f.write_str("lambda"),
            WireRole::LambdaPrime => f.write_str("lambda'"),
            WireRole::Alpha(i) => write!(f, "alpha_{i}"),
            WireRole::AlphaPrime(i) => write!(f, "alpha'_{i}"),
            WireRole::Beta(i, k) => write!(f, "beta_{i},{k}"),
            WireRole::BetaPrime(i, k) => write!(f, "beta'_{i},{k}"),
            WireRole::Var(i) => write!(f, "v_{i}"),
            WireRole::Clause(j) => write!(f, "c_{j}"),
            WireRole::Gamma { clause, occ } => write!(f, "gamma^{occ}_{clause}"),
            WireRole::Psi { clause, occ, idx } => write!(f, "psi^{occ}_{clause},{idx}"),
            WireRole::Phi(k) => write!(f, "phi_{k}"),
        }
    }
}

/// Wire numbers (1-based, initial order) of every role.
#[derive(Debug, Clone)]
pub struct WireMap {
    roles: Vec<WireRole>,
    index: HashMap<WireRole, usize>,
}

impl WireMap {
    fn new(roles: Vec<WireRole>) -> Self {
        let index = roles.iter().enumerate().map(|(k, &r)| (r, k + 1)).collect();
        WireMap { roles, index }
    }

    pub fn wire_count(&self) -> usize {
        self.roles.len()
    }

    /// The wire playing `role`.
    pub fn wire(&self, role: WireRole) -> Option<usize> {
        self.index.get(&role).copied()
    }

    /// The role of a 1-based wire.
    pub fn role(&self, wire: usize) -> Option<WireRole> {
        self.roles.get(wire.checked_sub(1)?).copied()
    }

    pub fn roles(&self) -> &[WireRole] {
        &self.roles
    }
}

/// Writes each multiplicity once; a second write with a different value
/// means the schedule contradicts itself.
struct Builder<'a> {
    map: &'a WireMap,
    list: SwapList,
    conflict: Option<String>,
}

impl Builder<'_> {
    fn put(&mut self, a: WireRole, b: WireRole, m: u32) {
        let (i, j) = (self.map.wire(a).expect("role"), self.map.wire(b).expect("role"));
        let old = self.list.get(i, j);
        if old != 0 && old != m && self.conflict.is_none() {
            self.conflict = Some(format!("{a} and {b} assigned both {old} and {m} swaps"));
        }
        self.list.set(i, j, m).expect("wires in range");
    }

    fn put_all(&mut self, a: WireRole, bs: &[WireRole], m: u32) {
        for &b in bs {
            self.put(a, b, m);
        }
    }
}

fn v_set(i: usize) -> Vec<WireRole> {
    let mut s: Vec<WireRole> = (1..=5).rev().map(|k| WireRole::Beta(i, k)).collect();
    s.push(WireRole::Alpha(i));
    s
}

fn v_prime_set(i: usize) -> Vec<WireRole> {
    let mut s = vec![WireRole::AlphaPrime(i)];
    s.extend((1..=5).map(|k| WireRole::BetaPrime(i, k)));
    s.push(WireRole::Var(i));
    s
}

fn d_set(clause: usize, occ: usize) -> Vec<WireRole> {
    let mut s: Vec<WireRole> = (1..=3).rev().map(|idx| WireRole::Psi { clause, occ, idx }).collect();
    s.push(WireRole::Gamma { clause, occ });
    s
}

fn c_set(j: usize) -> Vec<WireRole> {
    let mut s: Vec<WireRole> = (1..=3).rev().flat_map(|k| d_set(j, k)).collect();
    s.push(WireRole::Clause(j));
    s
}

/// Builds the hardness list for a normalized formula.
///
/// Wire order: `V_n < … < V_1 < C_m < … < C_1 < λ < λ' < φ_1 … φ_7 <
/// V'_1 < … < V'_n`. Every entry is at most 8 and the list has
/// `2 + 13·vars + 7 + 13·clauses` wires.
pub fn reduce_to_list(formula: &NaeFormula) -> Result<(SwapList, WireMap)> {
    use WireRole::*;
    if !formula.is_positive_diff() {
        return Err(TangleError::invalid(
            "reduction needs positive clauses on three distinct variables",
        ));
    }
    let n = formula.var_count();
    let clauses: Vec<[usize; 3]> = formula.clauses().iter().map(|c| c.map(|l| l.var)).collect();
    let m = clauses.len();

    let mut roles = Vec::new();
    for i in (1..=n).rev() {
        roles.extend(v_set(i));
    }
    for j in (1..=m).rev() {
        roles.extend(c_set(j));
    }
    roles.extend([Lambda, LambdaPrime]);
    roles.extend((1..=7).map(Phi));
    for i in 1..=n {
        roles.extend(v_prime_set(i));
    }
    let map = WireMap::new(roles);
    let mut b = Builder {
        map: &map,
        list: SwapList::new(map.wire_count()),
        conflict: None,
    };

    b.put(Lambda, LambdaPrime, 8);

    // Variable gadgets.
    for i in 1..=n {
        b.put(Var(i), Lambda, 4);
        for a in [Alpha(i), AlphaPrime(i)] {
            b.put_all(a, &[Lambda, LambdaPrime], 2);
        }
        for k in 1..=5 {
            for l in k + 1..=5 {
                b.put(Beta(i, k), Beta(i, l), 1);
                b.put(BetaPrime(i, k), BetaPrime(i, l), 1);
            }
            b.put(BetaPrime(i, k), Var(i), 4);
            // β_{i,odd} and β'_{i,even} meet λ; the others meet λ'.
            let (beta_side, beta_prime_side) = if k % 2 == 1 {
                (Lambda, LambdaPrime)
            } else {
                (LambdaPrime, Lambda)
            };
            b.put(Beta(i, k), beta_side, 2);
            b.put(BetaPrime(i, k), beta_prime_side, 2);
        }
    }

    // Later variable gadgets pass through earlier ones.
    for i in 1..=n {
        let vi = v_set(i);
        let vpi = v_prime_set(i);
        let both: Vec<WireRole> = vi.iter().chain(&vpi).copied().collect();
        let mut vi_and_alpha_prime = vi.clone();
        vi_and_alpha_prime.push(AlphaPrime(i));
        let mut vpi_and_alpha = vpi.clone();
        vpi_and_alpha.push(Alpha(i));
        for j in i + 1..=n {
            b.put_all(Alpha(j), &both, 2);
            b.put_all(AlphaPrime(j), &both, 2);
            for k in 1..=5 {
                b.put_all(Beta(j, k), &vi_and_alpha_prime, 4);
                b.put_all(BetaPrime(j, k), &vpi_and_alpha, 4);
            }
            b.put_all(Var(j), &vpi_and_alpha, 6);
        }
    }

    // The rigid φ chain.
    for k in 1..=7 {
        for l in k + 1..=7 {
            b.put(Phi(k), Phi(l), 1);
        }
        b.put(Phi(k), if k % 2 == 1 { Lambda } else { LambdaPrime }, 2);
        for i in 1..=n {
            for w in v_prime_set(i) {
                b.put(Phi(k), w, if w == Var(i) { 4 } else { 2 });
            }
            b.put(Phi(k), Alpha(i), 2);
        }
    }

    // Clause gadgets.
    for (jj, vars) in clauses.iter().enumerate() {
        let j = jj + 1;
        b.put(Clause(j), LambdaPrime, 8);
        for k in (1..=7).step_by(2) {
            b.put(Phi(k), Clause(j), 2);
        }
        for (occ, &var) in vars.iter().enumerate() {
            let occ = occ + 1;
            let gamma = Gamma { clause: j, occ };
            let psi = |idx| Psi { clause: j, occ, idx };
            b.put(Var(var), Clause(j), 2);
            b.put(gamma, LambdaPrime, 8);
            b.put(gamma, Clause(j), 2);
            // The protected variable crosses γ to reach the arm of c_j and back.
            b.put(gamma, Var(var), 2);
            for k in (1..=7).step_by(2) {
                b.put(Phi(k), gamma, 2);
            }
            b.put(psi(1), psi(2), 1);
            b.put(psi(1), psi(3), 1);
            b.put(psi(2), psi(3), 1);
            b.put(psi(1), Clause(j), 2);
            b.put(psi(3), Clause(j), 2);
            b.put(psi(2), LambdaPrime, 2);
            b.put(psi(2), Var(var), 2);
            for other in (1..=3).filter(|&o| o != occ) {
                for idx in 1..=3 {
                    b.put_all(psi(idx), &d_set(j, other)[..3], 2);
                    b.put(gamma, Psi { clause: j, occ: other, idx }, 4);
                }
                b.put(gamma, Gamma { clause: j, occ: other }, 2);
            }
        }
        // Later clauses pass through earlier ones.
        for i in 1..j {
            let ci = c_set(i);
            for w in c_set(j) {
                let mult = match w {
                    Psi { .. } => 2,
                    _ => 8,
                };
                b.put_all(w, &ci, mult);
            }
        }
        // Clause wires start left of λ and cross the variable side.
        for w in c_set(j) {
            for i in 1..=n {
                b.put_all(w, &v_set(i), 2);
                b.put(w, AlphaPrime(i), 2);
            }
        }
    }

    if let Some(msg) = b.conflict {
        return Err(TangleError::invalid(format!("inconsistent gadget schedule: {msg}")));
    }
    let list = b.list;
    Ok((list, map))
}
