//! Constructors for the classified operator families satisfying the braid
//! relations, with strict parameter validation.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::pddo::Pddo;
use crate::poly::SlotPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    MainCase1,
    MainCase2,
    DegenT,
    WithVanQ0,
    ZetaPair,
    UserSupplied,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::MainCase1 => "case1",
            Provenance::MainCase2 => "case2",
            Provenance::DegenT => "degen-t",
            Provenance::WithVanQ0 => "vanq0",
            Provenance::ZetaPair => "zeta-pair",
            Provenance::UserSupplied => "user",
        };
        f.write_str(s)
    }
}

/// Operators π_1 … π_{n−1} acting on x_1 … x_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorFamily {
    n: usize,
    ops: Vec<Pddo>,
    provenance: Provenance,
}

impl OperatorFamily {
    fn build(n: usize, ops: Vec<Pddo>, provenance: Provenance) -> Result<OperatorFamily> {
        if n < 2 || ops.len() != n - 1 {
            return Err(Error::Constraint(format!(
                "a family on {} variables needs {} operators, got {}",
                n,
                n.saturating_sub(1),
                ops.len()
            )));
        }
        Ok(OperatorFamily { n, ops, provenance })
    }

    /// Arbitrary operators, no classification constraints checked.
    pub fn user_supplied(n: usize, ops: Vec<Pddo>) -> Result<OperatorFamily> {
        Self::build(n, ops, Provenance::UserSupplied)
    }

    /// The same operator at every index.
    pub fn uniform(n: usize, op: Pddo) -> Result<OperatorFamily> {
        Self::user_supplied(n, vec![op; n.saturating_sub(1)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> &[Pddo] {
        &self.ops
    }

    /// π_i, 1-based.
    pub fn op(&self, i: usize) -> Result<&Pddo> {
        if i == 0 || i > self.ops.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: self.ops.len(),
            });
        }
        Ok(&self.ops[i - 1])
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Replace π_i, marking the family user-supplied.
    pub fn with_op(mut self, i: usize, op: Pddo) -> Result<OperatorFamily> {
        self.op(i)?;
        self.ops[i - 1] = op;
        self.provenance = Provenance::UserSupplied;
        Ok(self)
    }
}

/// The constants (a, b, c, d) shared by both cases of the main classification.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CaseParams {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl CaseParams {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        CaseParams { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn validate(&self) -> Result<()> {
        if self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero() {
            return Err(Error::Constraint("a, b, c, d are all zero".into()));
        }
        if &self.a * &self.d != &self.b * &self.c {
            return Err(Error::Constraint("ad−bc ≠ 0".into()));
        }
        Ok(())
    }

    /// T = auv + bu + cv + d
    pub fn t(&self) -> SlotPoly {
        SlotPoly::from_terms(vec![
            ((1, 1), self.a.clone()),
            ((1, 0), self.b.clone()),
            ((0, 1), self.c.clone()),
            ((0, 0), self.d.clone()),
        ])
    }

    pub fn b_minus_c(&self) -> FieldElement {
        &self.b - &self.c
    }
}

/// The operator with the given (a, b, c, d, e), written as
/// ∂((auv + (b−e)u + cv + d)·) + eu∂. No constraints are checked.
pub fn case1_operator(p: &CaseParams, e: &FieldElement) -> Pddo {
    let pp = SlotPoly::from_terms(vec![
        ((1, 1), p.a.clone()),
        ((1, 0), &p.b - e),
        ((0, 1), p.c.clone()),
        ((0, 0), p.d.clone()),
    ]);
    let q = SlotPoly::term(1, 0, e.clone());
    Pddo::from_pqrs(&pp, &q, &SlotPoly::zero(), &SlotPoly::zero())
}

pub fn main_case1(n: usize, p: &CaseParams, e: &FieldElement) -> Result<OperatorFamily> {
    p.validate()?;
    if e.is_zero() || *e == p.b_minus_c() {
        return Err(Error::Constraint(
            "e must differ from 0 and b−c; use case2 lines 1–2 for those values".into(),
        ));
    }
    let op = case1_operator(p, e);
    OperatorFamily::build(n, vec![op; n.saturating_sub(1)], Provenance::MainCase1)
}

/// The four per-index choices of the second case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case2Line {
    L1,
    L2,
    L3,
    L4,
}

impl Case2Line {
    pub const ALL: [Case2Line; 4] = [Case2Line::L1, Case2Line::L2, Case2Line::L3, Case2Line::L4];

    /// (P, Q, R) in the presentation with Q and R ∂-positive.
    pub fn pqr(&self, p: &CaseParams) -> (SlotPoly, SlotPoly, SlotPoly) {
        let CaseParams { a, b, c, d } = p;
        let t = |r, s, k: &FieldElement| ((r, s), k.clone());
        match self {
            Case2Line::L1 => (p.t(), SlotPoly::zero(), SlotPoly::zero()),
            Case2Line::L2 => (
                SlotPoly::from_terms(vec![t(1, 1, a), t(1, 0, c), t(0, 1, c), t(0, 0, d)]),
                SlotPoly::term(1, 0, b - c),
                SlotPoly::zero(),
            ),
            Case2Line::L3 => (
                SlotPoly::from_terms(vec![t(2, 0, a), ((1, 0), b + c), t(0, 1, c), t(0, 0, d)]),
                SlotPoly::term(1, 0, -c),
                SlotPoly::term(1, 0, -a),
            ),
            Case2Line::L4 => (
                SlotPoly::from_terms(vec![t(0, 1, c), t(0, 0, d)]),
                SlotPoly::from_terms(vec![t(2, 0, a), t(1, 0, b)]),
                SlotPoly::term(1, 0, -a),
            ),
        }
    }

    pub fn operator(&self, p: &CaseParams) -> Pddo {
        let (pp, q, r) = self.pqr(p);
        Pddo::from_pqrs(&pp, &q, &r, &SlotPoly::zero())
    }
}

impl fmt::Display for Case2Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self {
            Case2Line::L1 => 1,
            Case2Line::L2 => 2,
            Case2Line::L3 => 3,
            Case2Line::L4 => 4,
        };
        write!(f, "l{}", k)
    }
}

impl std::str::FromStr for Case2Line {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "l1" | "1" => Ok(Case2Line::L1),
            "l2" | "2" => Ok(Case2Line::L2),
            "l3" | "3" => Ok(Case2Line::L3),
            "l4" | "4" => Ok(Case2Line::L4),
            other => Err(Error::Parse(format!("unknown case2 line {:?}", other))),
        }
    }
}

pub fn main_case2(n: usize, p: &CaseParams, lines: &[Case2Line]) -> Result<OperatorFamily> {
    p.validate()?;
    if lines.len() + 1 != n {
        return Err(Error::Constraint(format!(
            "expected {} lines, got {}",
            n.saturating_sub(1),
            lines.len()
        )));
    }
    let ops = lines.iter().map(|l| l.operator(p)).collect();
    OperatorFamily::build(n, ops, Provenance::MainCase2)
}

/// Univariate polynomial as low-to-high coefficients.
pub type Univariate = Vec<FieldElement>;

fn univariate_is_zero(p: &[FieldElement]) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// π_i f = q_l(x_i)·q_r(x_{i+1})·Q̂(x_i, x_{i+1})·s_i f with every
/// q_l·q_r equal to the shared product `p`.
pub fn degenerate_t_family(
    n: usize,
    qhat: &SlotPoly,
    p: &[FieldElement],
    pairs: &[(Univariate, Univariate)],
) -> Result<OperatorFamily> {
    if qhat.is_zero() {
        return Err(Error::Constraint("Q̂ must be nonzero".into()));
    }
    let target = SlotPoly::univariate_u(p);
    let ops = pairs
        .iter()
        .enumerate()
        .map(|(k, (ql, qr))| {
            if univariate_is_zero(ql) || univariate_is_zero(qr) {
                return Err(Error::Constraint(format!("zero factor at index {}", k + 1)));
            }
            let l = SlotPoly::univariate_u(ql);
            let r = SlotPoly::univariate_u(qr);
            if &l * &r != target {
                return Err(Error::Constraint(format!(
                    "product property fails at index {}: q_l·q_r ≠ p",
                    k + 1
                )));
            }
            let ri = &(&l * &r.swap()) * qhat;
            Ok(Pddo::twisted_transposition(ri))
        })
        .collect::<Result<Vec<_>>>()?;
    OperatorFamily::build(n, ops, Provenance::DegenT)
}

/// (π, ϖ) on three variables with ϖ = a(x_2 + b)·Id and π one of four
/// operators over ℚ(ζ).
pub fn zeta_pair(a: &FieldElement, b: &FieldElement, variant: u8) -> Result<(Pddo, Pddo)> {
    if a.is_zero() {
        return Err(Error::Constraint("a must be nonzero".into()));
    }
    let (z, zb) = (FieldElement::zeta(), FieldElement::zeta_bar());
    let (u, v) = (SlotPoly::u(), SlotPoly::v());
    let cb = SlotPoly::constant(b.clone());
    let u_b = &u + &cb;
    let v_b = &v + &cb;
    // ζ₁u + ζ₂v + b
    let lin = |z1: &FieldElement, z2: &FieldElement| &(&u.scale(z1) + &v.scale(z2)) + &cb;
    let (q0, r0) = match variant {
        1 => (&u_b * &lin(&z, &zb), u_b.scale(&zb)),
        2 => (&u_b * &lin(&zb, &z), u_b.scale(&z)),
        3 => (
            &v_b * &lin(&z, &zb),
            &(&u + &v.scale(&zb)) + &cb.scale(&(&FieldElement::one() + &zb)),
        ),
        4 => (
            &v_b * &lin(&zb, &z),
            &(&u + &v.scale(&z)) + &cb.scale(&(&FieldElement::one() + &z)),
        ),
        _ => return Err(Error::Constraint("variant must be 1..4".into())),
    };
    let pi = Pddo::from_q0_r0(q0.scale(a), r0.scale(a));
    let varpi = Pddo::from_q0_r0(SlotPoly::zero(), u_b.scale(a));
    Ok((pi, varpi))
}

pub fn zeta_pair_family(a: &FieldElement, b: &FieldElement, variant: u8) -> Result<OperatorFamily> {
    let (pi, varpi) = zeta_pair(a, b, variant)?;
    OperatorFamily::build(3, vec![pi, varpi], Provenance::ZetaPair)
}

/// One block of the index partition used by [`with_vanishing_q0`].
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Segment {
    /// π_i = μ·Id
    Scalar(usize),
    /// π_i f = φ·∂_i(ψ f)
    Isolated {
        index: usize,
        phi: SlotPoly,
        psi: SlotPoly,
    },
    /// Second-case operators on start, start+1, … with b − c = μ.
    Interval {
        start: usize,
        params: CaseParams,
        lines: Vec<Case2Line>,
    },
}

impl Segment {
    fn indices(&self) -> Vec<usize> {
        match self {
            Segment::Scalar(i) => vec![*i],
            Segment::Isolated { index, .. } => vec![*index],
            Segment::Interval { start, lines, .. } => (*start..*start + lines.len()).collect(),
        }
    }
}

pub fn with_vanishing_q0(n: usize, mu: &FieldElement, segments: &[Segment]) -> Result<OperatorFamily> {
    if n < 4 {
        return Err(Error::Constraint("n must be at least 4".into()));
    }
    if mu.is_zero() {
        return Err(Error::Constraint("μ must be nonzero".into()));
    }
    let mut slots: Vec<Option<Pddo>> = vec![None; n - 1];
    let mut in_i = BTreeSet::new();
    for seg in segments {
        for i in seg.indices() {
            if i == 0 || i > n - 1 {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    lo: 1,
                    hi: n - 1,
                });
            }
            if slots[i - 1].is_some() {
                return Err(Error::Constraint(format!("index {} assigned twice", i)));
            }
            slots[i - 1] = Some(Pddo::zero());
            if !matches!(seg, Segment::Scalar(_)) {
                in_i.insert(i);
            }
        }
    }
    if let Some(k) = slots.iter().position(|s| s.is_none()) {
        return Err(Error::Constraint(format!("index {} not assigned", k + 1)));
    }
    if in_i.len() == n - 1 {
        return Err(Error::Constraint("the scalar complement is empty".into()));
    }
    let outside = |i: usize| i == 0 || i > n - 1 || !in_i.contains(&i);
    for seg in segments {
        match seg {
            Segment::Scalar(i) => slots[i - 1] = Some(Pddo::scalar(mu.clone())),
            Segment::Isolated { index, phi, psi } => {
                let i = *index;
                if !outside(i - 1) || !outside(i + 1) {
                    return Err(Error::Constraint(format!("index {} is not isolated", i)));
                }
                if (phi * psi).ddiff() != SlotPoly::constant(mu.clone()) {
                    return Err(Error::Constraint(format!("∂(φψ) ≠ μ at index {}", i)));
                }
                slots[i - 1] = Some(Pddo::phi_ddiff_psi(phi, psi));
            }
            Segment::Interval { start, params, lines } => {
                params.validate()?;
                if lines.len() < 2 {
                    return Err(Error::Constraint(format!(
                        "interval at {} has fewer than two indices",
                        start
                    )));
                }
                let end = start + lines.len() - 1;
                if !outside(start - 1) || !outside(end + 1) {
                    return Err(Error::Constraint(format!(
                        "interval {}..{} is not maximal",
                        start, end
                    )));
                }
                if params.b_minus_c() != *mu {
                    return Err(Error::Constraint(format!("b−c ≠ μ on interval {}..{}", start, end)));
                }
                for (k, l) in lines.iter().enumerate() {
                    slots[start + k - 1] = Some(l.operator(params));
                }
            }
        }
    }
    let ops = slots.into_iter().map(|s| s.expect("assigned")).collect();
    OperatorFamily::build(n, ops, Provenance::WithVanQ0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Preset {
    PureDdiff(FieldElement),
    Demazure,
    Grothendieck(FieldElement),
}

pub fn preset(name: &Preset, n: usize) -> Result<OperatorFamily> {
    let z = FieldElement::zero;
    let params = match name {
        Preset::PureDdiff(d) => {
            if d.is_zero() {
                return Err(Error::Constraint("d must be nonzero".into()));
            }
            CaseParams::new(z(), z(), z(), d.clone())
        }
        Preset::Demazure => CaseParams::from_ints(0, 1, 0, 0),
        Preset::Grothendieck(beta) => CaseParams::new(z(), z(), beta.clone(), FieldElement::one()),
    };
    main_case2(n, &params, &vec![Case2Line::L1; n.saturating_sub(1)])
}

/// Constraint-satisfying random parameter draws with small rationals.
pub mod random {
    use super::*;

    /// p/q with |p| ≤ 10 and 1 ≤ q ≤ 10.
    pub fn rational<R: Rng + ?Sized>(rng: &mut R) -> FieldElement {
        FieldElement::from_ratio(rng.gen_range(-10..=10), rng.gen_range(1..=10))
    }

    pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> FieldElement {
        loop {
            let x = rational(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// (a, b, c, d) not all zero with ad = bc.
    pub fn case_params<R: Rng + ?Sized>(rng: &mut R) -> CaseParams {
        loop {
            let a = rational(rng);
            let mut b = rational(rng);
            let mut c = rational(rng);
            let d = if !a.is_zero() {
                (&b * &c).checked_div(&a).expect("nonzero a")
            } else {
                if rng.gen_bool(0.5) {
                    b = FieldElement::zero();
                } else {
                    c = FieldElement::zero();
                }
                rational(rng)
            };
            let p = CaseParams::new(a, b, c, d);
            if p.validate().is_ok() {
                return p;
            }
        }
    }

    /// (a, b, c, d) violating ad = bc.
    pub fn bad_case_params<R: Rng + ?Sized>(rng: &mut R) -> CaseParams {
        loop {
            let p = CaseParams::new(rational(rng), rational(rng), rational(rng), rational(rng));
            if &p.a * &p.d != &p.b * &p.c {
                return p;
            }
        }
    }

    /// e ∉ {0, b − c}
    pub fn case1_e<R: Rng + ?Sized>(rng: &mut R, p: &CaseParams) -> FieldElement {
        loop {
            let e = nonzero_rational(rng);
            if e != p.b_minus_c() {
                return e;
            }
        }
    }

    pub fn lines<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Case2Line> {
        (0..len)
            .map(|_| *Case2Line::ALL.choose(rng).expect("nonempty"))
            .collect()
    }

    /// A nonzero slot polynomial of total degree ≤ `deg`.
    pub fn slot_poly<R: Rng + ?Sized>(rng: &mut R, deg: u32) -> SlotPoly {
        loop {
            let mut terms = Vec::new();
            for r in 0..=deg {
                for s in 0..=deg - r {
                    if rng.gen_bool(0.6) {
                        terms.push(((r, s), rational(rng)));
                    }
                }
            }
            let p = SlotPoly::from_terms(terms);
            if !p.is_zero() {
                return p;
            }
        }
    }

    fn mul_univariate(p: &[FieldElement], q: &[FieldElement]) -> Univariate {
        let mut out = vec![FieldElement::zero(); p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        out
    }

    /// (Q̂, p, pairs) for a degenerate family of `len` operators: p is a
    /// product of linear factors and each pair splits them randomly.
    pub fn degenerate_t<R: Rng + ?Sized>(
        rng: &mut R,
        len: usize,
    ) -> (SlotPoly, Univariate, Vec<(Univariate, Univariate)>) {
        let qhat = slot_poly(rng, 1);
        let k = rng.gen_range(0..=2);
        let factors: Vec<Univariate> = (0..k)
            .map(|_| vec![rational(rng), FieldElement::one()])
            .collect();
        let lead = nonzero_rational(rng);
        let mut p = vec![lead.clone()];
        for f in &factors {
            p = mul_univariate(&p, f);
        }
        let pairs = (0..len)
            .map(|_| {
                let lambda = nonzero_rational(rng);
                let mut l = vec![lambda.clone()];
                let mut r = vec![lead.checked_div(&lambda).expect("nonzero")];
                for f in &factors {
                    if rng.gen_bool(0.5) {
                        l = mul_univariate(&l, f);
                    } else {
                        r = mul_univariate(&r, f);
                    }
                }
                (l, r)
            })
            .collect();
        (qhat, p, pairs)
    }

    /// (φ, ψ) with ∂(φψ) = μ, factoring a second-case T.
    pub fn phi_psi<R: Rng + ?Sized>(rng: &mut R, mu: &FieldElement) -> (SlotPoly, SlotPoly) {
        // T = auv + bu + cv + d with b − c = μ and ad = bc.
        let c = rational(rng);
        let b = &c + mu;
        let t = if rng.gen_bool(0.5) && !c.is_zero() && !b.is_zero() {
            let a = nonzero_rational(rng);
            let d = (&b * &c).checked_div(&a).expect("nonzero a");
            Some((a, b.clone(), c.clone(), d))
        } else {
            None
        };
        let lambda = nonzero_rational(rng);
        let inv = lambda.invert().expect("nonzero");
        match t {
            Some((a, b, c, _)) if rng.gen_bool(0.5) => {
                // a(u + c/a)(v + b/a)
                let l = &SlotPoly::u() + &SlotPoly::constant(c.checked_div(&a).unwrap());
                let r = &SlotPoly::v() + &SlotPoly::constant(b.checked_div(&a).unwrap());
                if rng.gen_bool(0.5) {
                    (l.scale(&(&a * &lambda)), r.scale(&inv))
                } else {
                    (r.scale(&(&a * &lambda)), l.scale(&inv))
                }
            }
            other => {
                let t = match other {
                    Some((a, b, c, d)) => CaseParams::new(a, b, c, d).t(),
                    None => CaseParams::new(FieldElement::zero(), b, c, rational(rng)).t(),
                };
                if rng.gen_bool(0.5) {
                    (SlotPoly::constant(lambda), t.scale(&inv))
                } else {
                    (t.scale(&lambda), SlotPoly::constant(inv))
                }
            }
        }
    }

    /// Case parameters with b − c = μ.
    pub fn case_params_with_mu<R: Rng + ?Sized>(rng: &mut R, mu: &FieldElement) -> CaseParams {
        loop {
            let c = rational(rng);
            let b = &c + mu;
            let (a, d) = if rng.gen_bool(0.7) {
                let a = nonzero_rational(rng);
                let d = (&b * &c).checked_div(&a).unwrap();
                (a, d)
            } else if b.is_zero() || c.is_zero() {
                (FieldElement::zero(), rational(rng))
            } else {
                continue;
            };
            let p = CaseParams::new(a, b, c, d);
            if p.validate().is_ok() {
                return p;
            }
        }
    }

    /// A random valid index partition for [`with_vanishing_q0`].
    pub fn vanq0_segments<R: Rng + ?Sized>(rng: &mut R, n: usize, mu: &FieldElement) -> Vec<Segment> {
        // choose I as a random subset leaving a nonempty complement
        let m = n - 1;
        let members: Vec<bool> = loop {
            let v: Vec<bool> = (0..m).map(|_| rng.gen_bool(0.6)).collect();
            if v.iter().any(|x| !x) {
                break v;
            }
        };
        let mut segs = Vec::new();
        let mut i = 0;
        while i < m {
            if !members[i] {
                segs.push(Segment::Scalar(i + 1));
                i += 1;
                continue;
            }
            let mut j = i;
            while j < m && members[j] {
                j += 1;
            }
            if j - i == 1 {
                let (phi, psi) = phi_psi(rng, mu);
                segs.push(Segment::Isolated {
                    index: i + 1,
                    phi,
                    psi,
                });
            } else {
                segs.push(Segment::Interval {
                    start: i + 1,
                    params: case_params_with_mu(rng, mu),
                    lines: lines(rng, j - i),
                });
            }
            i = j;
        }
        segs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::family_braid_check;
    use crate::pddo::Degeneracy;

    fn c(k: i64) -> FieldElement {
        FieldElement::from_int(k)
    }

    #[test]
    fn case1_examples() {
        let fam = main_case1(3, &CaseParams::from_ints(1, 2, 1, 2), &c(3)).unwrap();
        assert!(family_braid_check(&fam).pass());
        assert_eq!(fam.ops()[0].hecke_params(), Some((c(1), c(6))));
        // e = b − c is the boundary shared with the second case
        assert!(main_case1(3, &CaseParams::from_ints(1, 2, 1, 2), &c(1)).is_err());

        let fam = main_case1(3, &CaseParams::from_ints(0, 1, 0, 0), &c(5)).unwrap();
        let op = &fam.ops()[0];
        assert_eq!(op.q0(), &(&SlotPoly::u().scale(&c(5)) - &SlotPoly::v().scale(&c(4))));
        assert_eq!(op.r0(), &SlotPoly::constant(c(-4)));

        let err = main_case1(3, &CaseParams::from_ints(1, 1, 1, 0), &c(1)).unwrap_err();
        assert_eq!(err, Error::Constraint("ad−bc ≠ 0".into()));
        assert!(main_case1(3, &CaseParams::from_ints(0, 1, 0, 0), &c(1)).is_err());
        assert!(main_case1(3, &CaseParams::from_ints(0, 1, 0, 0), &c(0)).is_err());
    }

    #[test]
    fn case1_first_form() {
        let p = CaseParams::from_ints(2, 3, 5, 7);
        let e = c(11);
        let op = case1_operator(&p, &e);
        let q0 = SlotPoly::from_terms(vec![
            ((1, 1), c(2)),
            ((1, 0), c(5 + 11)),
            ((0, 1), c(3 - 11)),
            ((0, 0), c(7)),
        ]);
        assert_eq!(op.q0(), &q0);
        assert_eq!(op.r0(), &SlotPoly::constant(c(3 - 5 - 11)));
        assert_eq!(op.t(), &p.t());
    }

    #[test]
    fn case2_examples() {
        let demazure = Pddo::from_t_q0(SlotPoly::u(), SlotPoly::v()).unwrap();
        let fam = main_case2(4, &CaseParams::from_ints(0, 1, 0, 0), &[Case2Line::L1; 3]).unwrap();
        assert!(fam.ops().iter().all(|o| *o == demazure));

        let p = CaseParams::from_ints(1, 2, 1, 2);
        let fam = main_case2(4, &p, &[Case2Line::L1, Case2Line::L4, Case2Line::L2]).unwrap();
        assert!(family_braid_check(&fam).pass());
        for l in Case2Line::ALL {
            let op = l.operator(&p);
            assert_eq!(op.t(), &p.t());
            assert_eq!(op.hecke_params(), Some((c(1), c(0))));
        }
    }

    #[test]
    fn case2_first_forms() {
        let p = CaseParams::from_ints(2, 3, 4, 6);
        let (u, v) = (SlotPoly::u(), SlotPoly::v());
        let k = |x: i64| SlotPoly::constant(c(x));
        let uv = &u * &v;
        let expect = [
            (&(&(&uv.scale(&c(2)) + &u.scale(&c(4))) + &v.scale(&c(3))) + &k(6), k(-1)),
            (&(&(&uv.scale(&c(2)) + &u.scale(&c(3))) + &v.scale(&c(4))) + &k(6), k(0)),
            (&(&(&v * &v).scale(&c(2)) + &v.scale(&c(7))) + &k(6), &v.scale(&c(2)) + &k(3)),
            (&(&(&u * &u).scale(&c(2)) + &u.scale(&c(7))) + &k(6), &u.scale(&c(-2)) - &k(4)),
        ];
        for (l, (q0, r0)) in Case2Line::ALL.iter().zip(expect) {
            let op = l.operator(&p);
            assert_eq!((op.q0(), op.r0()), (&q0, &r0), "{}", l);
        }
    }

    #[test]
    fn degenerate_t_examples() {
        let one = vec![c(1)];
        let fam = degenerate_t_family(4, &SlotPoly::one(), &one, &vec![(one.clone(), one.clone()); 3]).unwrap();
        assert!(fam.ops().iter().all(|o| o.degeneracy() == Degeneracy::TZero));
        assert!(family_braid_check(&fam).pass());

        let t = vec![c(0), c(1)];
        let t2 = vec![c(0), c(0), c(1)];
        let fam = degenerate_t_family(4, &SlotPoly::one(), &t2, &vec![(t.clone(), t.clone()); 3]).unwrap();
        assert_eq!(fam.ops()[0].r0(), &(&SlotPoly::u() * &SlotPoly::v()));
        assert!(family_braid_check(&fam).pass());

        let bad = degenerate_t_family(3, &SlotPoly::one(), &t2, &[(t.clone(), t.clone()), (t2.clone(), t.clone())]);
        assert!(matches!(bad, Err(Error::Constraint(_))));
    }

    #[test]
    fn zeta_examples() {
        for variant in 1..=4 {
            let (pi, varpi) = zeta_pair(&c(1), &c(1), variant).unwrap();
            assert_eq!(pi.degeneracy(), Degeneracy::NonDegenerate);
            assert_eq!(varpi.degeneracy(), Degeneracy::QZero);
            let uplus1 = &SlotPoly::u() + &SlotPoly::one();
            assert_eq!(pi.t(), &(&uplus1 * &uplus1));
            assert!(family_braid_check(&zeta_pair_family(&c(1), &c(1), variant).unwrap()).pass());
        }
        let (pi, _) = zeta_pair(&c(1), &c(1), 3).unwrap();
        let zb = FieldElement::zeta_bar();
        let r0 = SlotPoly::from_terms(vec![((1, 0), c(1)), ((0, 1), zb.clone()), ((0, 0), &c(1) + &zb)]);
        assert_eq!(pi.r0(), &r0);
        assert!(zeta_pair(&c(0), &c(1), 1).is_err());
    }

    #[test]
    fn vanq0_examples() {
        let mu = c(1);
        let demazure = Pddo::from_t_q0(SlotPoly::u(), SlotPoly::v()).unwrap();
        let iso = |i| Segment::Isolated {
            index: i,
            phi: SlotPoly::one(),
            psi: SlotPoly::u(),
        };
        let fam = with_vanishing_q0(4, &mu, &[iso(1), Segment::Scalar(2), iso(3)]).unwrap();
        assert_eq!(fam.ops(), &[demazure.clone(), Pddo::scalar(mu.clone()), demazure.clone()]);
        assert!(family_braid_check(&fam).pass());

        let fam = with_vanishing_q0(
            4,
            &mu,
            &[
                Segment::Interval {
                    start: 1,
                    params: CaseParams::from_ints(0, 1, 0, 0),
                    lines: vec![Case2Line::L1; 2],
                },
                Segment::Scalar(3),
            ],
        )
        .unwrap();
        assert_eq!(fam.ops(), &[demazure.clone(), demazure, Pddo::scalar(mu.clone())]);
        assert!(family_braid_check(&fam).pass());

        let bad = Segment::Isolated {
            index: 1,
            phi: SlotPoly::u(),
            psi: SlotPoly::u(),
        };
        assert!(with_vanishing_q0(4, &mu, &[bad, Segment::Scalar(2), Segment::Scalar(3)]).is_err());
        assert!(with_vanishing_q0(4, &mu, &[iso(1), iso(2), Segment::Scalar(3)]).is_err());
        assert!(with_vanishing_q0(3, &mu, &[iso(1), Segment::Scalar(2)]).is_err());
    }

    #[test]
    fn preset_examples() {
        let fam = preset(&Preset::PureDdiff(c(1)), 3).unwrap();
        assert!(fam.ops().iter().all(|o| o.hecke_params() == Some((c(0), c(0)))));
        let fam = preset(&Preset::Demazure, 3).unwrap();
        assert!(fam.ops().iter().all(|o| o.hecke_params() == Some((c(1), c(0)))));
        let beta = FieldElement::from_ratio(2, 3);
        let fam = preset(&Preset::Grothendieck(beta.clone()), 3).unwrap();
        assert!(family_braid_check(&fam).pass());
        assert_eq!(fam.ops()[0].hecke_params(), Some((-beta.clone(), c(0))));
        assert_eq!(fam.ops()[0].t(), &(&SlotPoly::one() + &SlotPoly::v().scale(&beta)));
        assert!(preset(&Preset::PureDdiff(c(0)), 3).is_err());
    }
}
