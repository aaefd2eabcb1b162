//! Commutation of operators, at one index and across two families.

use serde::Serialize;

use crate::braid::{probe_bound, probe_monomials, quad_commute_check};
use crate::error::{Error, Result};
use crate::families::OperatorFamily;
use crate::pddo::{Degeneracy, Pddo};

/// π ∘ π̂ = π̂ ∘ π with both acting on the same index.
pub fn commutes_same_index(op1: &Pddo, op2: &Pddo) -> bool {
    let degenerate = |p: &Pddo| p.degeneracy() != Degeneracy::NonDegenerate;
    if degenerate(op1) || degenerate(op2) {
        return commutes_by_composition(op1, op2);
    }
    let (q, r) = (op1.q0(), op1.r0());
    let (hq, hr) = (op2.q0(), op2.r0());
    q * &hq.ddiff() == hq * &q.ddiff() && q * &hr.ddiff() == hq * &r.ddiff()
}

/// Compare the two compositions directly.
pub fn commutes_by_composition(op1: &Pddo, op2: &Pddo) -> bool {
    op1.compose_same_index(op2) == op2.compose_same_index(op1)
}

/// π_i ϖ_{i+1} = ϖ_{i+1} π_i probed on monomials in x_i, x_{i+1}, x_{i+2}.
pub fn commutes_consecutive(pi: &Pddo, varpi: &Pddo, max: u32) -> bool {
    probe_monomials(3, &[1, 2, 3], max).iter().all(|f| {
        let l = varpi.apply(2, f).and_then(|g| pi.apply(1, &g));
        let r = pi.apply(1, f).and_then(|g| varpi.apply(2, &g));
        l.expect("valid index") == r.expect("valid index")
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CommuteReport {
    /// (i, commutes) for π_i against π̂_i.
    pub same: Vec<(usize, bool)>,
    /// (i, k, commutes) for π_i against π̂_k with |i − k| ≥ 2.
    pub distant: Vec<(usize, usize, bool)>,
    /// (i, k, commutes) for π_i against π̂_k with |i − k| = 1.
    pub consecutive: Vec<(usize, usize, bool)>,
}

impl CommuteReport {
    pub fn same_pass(&self) -> bool {
        self.same.iter().all(|x| x.1)
    }

    pub fn distant_pass(&self) -> bool {
        self.distant.iter().all(|x| x.2)
    }

    pub fn consecutive_pass(&self) -> bool {
        self.consecutive.iter().all(|x| x.2)
    }

    pub fn pass(&self) -> bool {
        self.same_pass() && self.distant_pass() && self.consecutive_pass()
    }
}

/// Whether every operator of `fam1` commutes with every operator of `fam2`.
pub fn cross_family_commute(fam1: &OperatorFamily, fam2: &OperatorFamily) -> Result<CommuteReport> {
    if fam1.n() != fam2.n() {
        return Err(Error::DimensionMismatch(fam1.n(), fam2.n()));
    }
    let n = fam1.n();
    let (a, b) = (fam1.ops(), fam2.ops());
    let mut report = CommuteReport {
        same: Vec::new(),
        distant: Vec::new(),
        consecutive: Vec::new(),
    };
    for i in 1..n {
        let p = &a[i - 1];
        report.same.push((i, commutes_same_index(p, &b[i - 1])));
        for k in 1..n {
            let q = &b[k - 1];
            if i.abs_diff(k) >= 2 {
                report.distant.push((i, k, quad_commute_check(p, q, i, k, n)?));
            } else if k == i + 1 {
                let bound = probe_bound(&[p, q]);
                report.consecutive.push((i, k, commutes_consecutive(p, q, bound)));
            } else if k + 1 == i {
                // π_i against π̂_{i−1}: relabel so π̂ occupies the first slot pair.
                let bound = probe_bound(&[p, q]);
                report.consecutive.push((i, k, commutes_consecutive(q, p, bound)));
            }
        }
    }
    Ok(report)
}
