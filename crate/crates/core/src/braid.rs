//! Braid relation checks.
//!
//! The cubic relation π_i ϖ_{i+1} π_i = ϖ_{i+1} π_i ϖ_{i+1} is checked
//! symbolically in three variables x, y, z. Both sides expand as
//! combinations of f, sf, σf, sσf, σsf and sσsf = σsσf, where s swaps x, y and
//! σ swaps y, z. Over the common denominator (x−y)²(x−z)(y−z)² the two sides
//! agree iff the six numerator pairs agree as polynomials.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::OperatorFamily;
use crate::pddo::Pddo;
use crate::poly::{MultiPoly, SlotPoly};

pub const CUBIC_LABELS: [&str; 6] = ["f", "sf", "σf", "sσf", "σsf", "sσsf"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicReport {
    /// Per-coefficient agreement, in the order of [`CUBIC_LABELS`].
    pub flags: [bool; 6],
    pub pass: bool,
    /// First failing coefficient and its difference (left minus right).
    pub failure: Option<(&'static str, MultiPoly)>,
}

impl fmt::Display for CubicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            return write!(f, "pass");
        }
        let bad: Vec<&str> = CUBIC_LABELS
            .iter()
            .zip(self.flags)
            .filter(|(_, ok)| !ok)
            .map(|(l, _)| *l)
            .collect();
        write!(f, "fail on {}", bad.join(", "))
    }
}

struct Slots {
    n: usize,
}

impl Slots {
    /// p(x_a, x_b) in the three-variable ring.
    fn at(&self, p: &SlotPoly, a: usize, b: usize) -> MultiPoly {
        p.instantiate(a, b, self.n).expect("valid slot indices")
    }

    fn diff(&self, a: usize, b: usize) -> MultiPoly {
        self.at(&SlotPoly::u_minus_v(), a, b)
    }
}

pub fn cubic_braid_check(pi: &Pddo, varpi: &Pddo) -> CubicReport {
    const X: usize = 1;
    const Y: usize = 2;
    const Z: usize = 3;
    let s = Slots { n: 3 };
    let (t, q) = (pi.t(), pi.q0());
    let (tt, qt) = (varpi.t(), varpi.q0());

    let t_xy = s.at(t, X, Y);
    let t_yx = s.at(t, Y, X);
    let t_xz = s.at(t, X, Z);
    let t_yz = s.at(t, Y, Z);
    let q_xy = s.at(q, X, Y);
    let q_yx = s.at(q, Y, X);
    let q_xz = s.at(q, X, Z);
    let q_yz = s.at(q, Y, Z);

    let tt_yz = s.at(tt, Y, Z);
    let tt_zy = s.at(tt, Z, Y);
    let tt_xz = s.at(tt, X, Z);
    let tt_xy = s.at(tt, X, Y);
    let qt_yz = s.at(qt, Y, Z);
    let qt_zy = s.at(qt, Z, Y);
    let qt_xz = s.at(qt, X, Z);
    let qt_xy = s.at(qt, X, Y);

    let dxy = s.diff(X, Y);
    let dxz = s.diff(X, Z);
    let dyz = s.diff(Y, Z);
    let dd = &dxy * &dyz;

    // π ϖ π
    let l_f = &dyz
        * &(&(&(&(&t_xy * &t_xy) * &tt_yz) * &dxz) - &(&(&(&tt_xz * &q_xy) * &q_yx) * &dyz));
    let l_sf = -&(&(&dyz * &q_xy)
        * &(&(&(&t_xy * &tt_yz) * &dxz) - &(&(&t_yx * &tt_xz) * &dyz)));
    let l_sigf = -&(&(&(&dd * &t_xy) * &qt_yz) * &t_xz);
    let l_sigsf = &(&(&dd * &t_xy) * &qt_yz) * &q_xz;
    let l_ssigf = &(&(&dd * &q_xy) * &qt_xz) * &t_yz;
    let l_ssigs = -&(&(&(&dd * &q_xy) * &qt_xz) * &q_yz);

    // ϖ π ϖ
    let r_f = &dxy
        * &(&(&(&(&t_xy * &tt_yz) * &tt_yz) * &dxz) - &(&(&(&t_xz * &qt_yz) * &qt_zy) * &dxy));
    let r_sigf = -&(&(&dxy * &qt_yz)
        * &(&(&(&t_xy * &tt_yz) * &dxz) - &(&(&tt_zy * &t_xz) * &dxy)));
    let r_sf = -&(&(&(&dd * &tt_yz) * &q_xy) * &tt_xz);
    let r_ssigf = &(&(&dd * &tt_yz) * &q_xy) * &qt_xz;
    let r_sigsf = &(&(&dd * &qt_yz) * &q_xz) * &tt_xy;
    let r_sigssig = -&(&(&(&dd * &qt_yz) * &q_xz) * &qt_xy);

    let pairs = [
        (l_f, r_f),
        (l_sf, r_sf),
        (l_sigf, r_sigf),
        (l_ssigf, r_ssigf),
        (l_sigsf, r_sigsf),
        (l_ssigs, r_sigssig),
    ];
    let mut flags = [false; 6];
    let mut failure = None;
    for (k, (l, r)) in pairs.iter().enumerate() {
        flags[k] = l == r;
        if !flags[k] && failure.is_none() {
            failure = Some((CUBIC_LABELS[k], l - r));
        }
    }
    CubicReport {
        flags,
        pass: failure.is_none(),
        failure,
    }
}

/// All exponent vectors of length `len` with entries ≤ `max`.
pub(crate) fn exponent_box(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|e| {
                (0..=max).map(move |k| {
                    let mut e = e.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    out
}

/// Monomials in the given variables with per-variable degree ≤ `max`.
pub(crate) fn probe_monomials(n: usize, vars: &[usize], max: u32) -> Vec<MultiPoly> {
    exponent_box(vars.len(), max)
        .into_iter()
        .map(|e| {
            let mut exps = vec![0; n];
            for (v, k) in vars.iter().zip(e) {
                exps[v - 1] = k;
            }
            MultiPoly::monomial(exps, crate::field::FieldElement::from(1))
        })
        .collect()
}

/// Default per-variable probe degree for operators with the given coefficient degrees.
pub fn probe_bound(ops: &[&Pddo]) -> u32 {
    let deg = ops.iter().map(|p| p.coefficient_degree()).max().unwrap_or(0);
    (deg + 2).max(4)
}

/// π_i ϖ_{i+1} π_i = ϖ_{i+1} π_i ϖ_{i+1} tested by application to all
/// monomials x^a y^b z^c with a, b, c ≤ `max`.
pub fn cubic_braid_by_probing(pi: &Pddo, varpi: &Pddo, max: u32) -> bool {
    probe_monomials(3, &[1, 2, 3], max).iter().all(|f| {
        let l = pi
            .apply(1, f)
            .and_then(|g| varpi.apply(2, &g))
            .and_then(|g| pi.apply(1, &g));
        let r = varpi
            .apply(2, f)
            .and_then(|g| pi.apply(1, &g))
            .and_then(|g| varpi.apply(2, &g));
        l.expect("valid index") == r.expect("valid index")
    })
}

fn check_distant(i: usize, k: usize, n: usize) -> Result<()> {
    for idx in [i, k] {
        if idx == 0 || idx + 1 > n {
            return Err(Error::IndexOutOfRange {
                index: idx,
                lo: 1,
                hi: n.saturating_sub(1),
            });
        }
    }
    if i.abs_diff(k) < 2 {
        return Err(Error::NotDistant(i, k));
    }
    Ok(())
}

/// π_i π_k = π_k π_i for |i − k| ≥ 2, probed on monomials of per-variable
/// degree ≤ 2 in x_i, x_{i+1}, x_k, x_{k+1}.
pub fn quad_commute_check(pi_i: &Pddo, pi_k: &Pddo, i: usize, k: usize, n: usize) -> Result<bool> {
    check_distant(i, k, n)?;
    for f in probe_monomials(n, &[i, i + 1, k, k + 1], 2) {
        let l = pi_i.apply(i, &pi_k.apply(k, &f)?)?;
        let r = pi_k.apply(k, &pi_i.apply(i, &f)?)?;
        if l != r {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Q(x,y)·Q̃(x,z)·Q(y,z) = Q̃(x,y)·Q(x,z)·Q̃(y,z).
pub fn almost_equal(q: &SlotPoly, qt: &SlotPoly) -> Result<bool> {
    if q.is_zero() || qt.is_zero() {
        return Err(Error::ZeroInput);
    }
    let s = Slots { n: 3 };
    let l = &(&s.at(q, 1, 2) * &s.at(qt, 1, 3)) * &s.at(q, 2, 3);
    let r = &(&s.at(qt, 1, 2) * &s.at(q, 1, 3)) * &s.at(qt, 2, 3);
    Ok(l == r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    /// (i, report) for each consecutive pair (π_i, π_{i+1}).
    pub cubic: Vec<(usize, CubicReport)>,
    /// (i, k, commutes) for each distant pair i < k.
    pub quadratic: Vec<(usize, usize, bool)>,
}

impl FamilyReport {
    pub fn pass(&self) -> bool {
        self.cubic.iter().all(|(_, r)| r.pass) && self.quadratic.iter().all(|(_, _, ok)| *ok)
    }

    pub fn cubic_pass(&self) -> bool {
        self.cubic.iter().all(|(_, r)| r.pass)
    }

    pub fn summary(&self) -> FamilySummary {
        FamilySummary {
            pass: self.pass(),
            cubic: self
                .cubic
                .iter()
                .map(|(i, r)| RelationLine {
                    indices: vec![*i, i + 1],
                    pass: r.pass,
                    detail: r.to_string(),
                })
                .collect(),
            quadratic: self
                .quadratic
                .iter()
                .map(|(i, k, ok)| RelationLine {
                    indices: vec![*i, *k],
                    pass: *ok,
                    detail: if *ok { "pass" } else { "fail" }.to_string(),
                })
                .collect(),
        }
    }
}

/// Serializable form of a [`FamilyReport`].
#[derive(Clone, Debug, Serialize)]
pub struct FamilySummary {
    pub pass: bool,
    pub cubic: Vec<RelationLine>,
    pub quadratic: Vec<RelationLine>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationLine {
    pub indices: Vec<usize>,
    pub pass: bool,
    pub detail: String,
}

pub fn family_braid_check(fam: &OperatorFamily) -> FamilyReport {
    let ops = fam.ops();
    let n = fam.n();
    let cubic = ops
        .windows(2)
        .enumerate()
        .map(|(k, w)| (k + 1, cubic_braid_check(&w[0], &w[1])))
        .collect();
    let mut quadratic = Vec::new();
    for i in 1..ops.len() {
        for k in i + 2..=ops.len() {
            let ok = quad_commute_check(&ops[i - 1], &ops[k - 1], i, k, n)
                .expect("distant indices in range");
            quadratic.push((i, k, ok));
        }
    }
    FamilyReport { cubic, quadratic }
}
