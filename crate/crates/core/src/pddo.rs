//! Polynomial divided difference operators
//! π f = ∂(P f) + Q ∂f + R f + S s f, with P, Q, R, S two-slot polynomials.
//!
//! An operator is stored by the presentation-independent pair (T, Q0), where
//! π(1) = R0, π(x_i) − x_{i+1}π(1) = T and π(x_i) − x_iπ(1) = Q0. The action
//! is π f = (T f − Q0 s f)/(x_i − x_{i+1}).

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::divdiff::{dpositive_lift, dpositive_split};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{MultiPoly, SlotPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Degeneracy {
    NonDegenerate,
    /// Q0 = 0: multiplication by R0.
    QZero,
    /// T = 0: R0 times the transposition.
    TZero,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pddo {
    t: SlotPoly,
    q0: SlotPoly,
    r0: SlotPoly,
    degeneracy: Degeneracy,
}

/// The three normal forms of an operator.
///
/// * first: `(P, Q, R) = (0, q0, r0)`
/// * second: `(p_plus, q_sup, r_plus)` with `p_plus`, `r_plus` ∂-positive
/// * third: `(p_sup, q_plus, r_plus)` with `q_plus`, `r_plus` ∂-positive
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForms {
    pub q0: SlotPoly,
    pub r0: SlotPoly,
    pub p_plus: SlotPoly,
    pub q_sup: SlotPoly,
    pub r_plus: SlotPoly,
    pub p_sup: SlotPoly,
    pub q_plus: SlotPoly,
}

impl CanonicalForms {
    pub fn first(&self) -> Pddo {
        Pddo::from_q0_r0(self.q0.clone(), self.r0.clone())
    }

    pub fn second(&self) -> Pddo {
        Pddo::from_pqrs(&self.p_plus, &self.q_sup, &self.r_plus, &SlotPoly::zero())
    }

    pub fn third(&self) -> Pddo {
        Pddo::from_pqrs(&self.p_sup, &self.q_plus, &self.r_plus, &SlotPoly::zero())
    }
}

fn classify(t: &SlotPoly, q0: &SlotPoly) -> Degeneracy {
    match (t.is_zero(), q0.is_zero()) {
        (true, true) => Degeneracy::Zero,
        (false, true) => Degeneracy::QZero,
        (true, false) => Degeneracy::TZero,
        (false, false) => Degeneracy::NonDegenerate,
    }
}

impl Pddo {
    fn build(t: SlotPoly, q0: SlotPoly, r0: SlotPoly) -> Pddo {
        let degeneracy = classify(&t, &q0);
        Pddo {
            t,
            q0,
            r0,
            degeneracy,
        }
    }

    /// From an arbitrary presentation ∂(P·) + Q∂ + R + S·s.
    pub fn from_pqrs(p: &SlotPoly, q: &SlotPoly, r: &SlotPoly, s: &SlotPoly) -> Pddo {
        let umv = SlotPoly::u_minus_v();
        let q0 = &(&p.swap() + q) - &(&umv * s);
        let r0 = &(r + s) + &p.ddiff();
        let t = &(p + &(&umv * r)) + q;
        Pddo::build(t, q0, r0)
    }

    /// From the first normal form f ↦ Q0 ∂f + R0 f.
    pub fn from_q0_r0(q0: SlotPoly, r0: SlotPoly) -> Pddo {
        let t = &q0 + &(&SlotPoly::u_minus_v() * &r0);
        Pddo::build(t, q0, r0)
    }

    /// From the invariant pair; fails unless (u − v) divides T − Q0.
    pub fn from_t_q0(t: SlotPoly, q0: SlotPoly) -> Result<Pddo> {
        let r0 = (&t - &q0)
            .div_u_minus_v()
            .map_err(|_| Error::InvalidInvariants)?;
        Ok(Pddo::build(t, q0, r0))
    }

    pub fn zero() -> Pddo {
        Pddo::from_q0_r0(SlotPoly::zero(), SlotPoly::zero())
    }

    /// μ·Id
    pub fn scalar(mu: FieldElement) -> Pddo {
        Pddo::from_q0_r0(SlotPoly::zero(), SlotPoly::constant(mu))
    }

    /// f ↦ R·s f
    pub fn twisted_transposition(r: SlotPoly) -> Pddo {
        Pddo::from_pqrs(&SlotPoly::zero(), &SlotPoly::zero(), &SlotPoly::zero(), &r)
    }

    /// f ↦ φ·∂(ψ f)
    pub fn phi_ddiff_psi(phi: &SlotPoly, psi: &SlotPoly) -> Pddo {
        let t = phi * psi;
        let q0 = phi * &psi.swap();
        let r0 = phi * &psi.ddiff();
        Pddo::build(t, q0, r0)
    }

    pub fn t(&self) -> &SlotPoly {
        &self.t
    }

    pub fn q0(&self) -> &SlotPoly {
        &self.q0
    }

    pub fn r0(&self) -> &SlotPoly {
        &self.r0
    }

    pub fn degeneracy(&self) -> Degeneracy {
        self.degeneracy
    }

    pub fn is_zero(&self) -> bool {
        self.degeneracy == Degeneracy::Zero
    }

    /// Largest total degree among T and Q0 (0 for the zero operator).
    pub fn coefficient_degree(&self) -> u32 {
        self.t
            .total_degree()
            .into_iter()
            .chain(self.q0.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn scaled(&self, c: &FieldElement) -> Pddo {
        Pddo::build(self.t.scale(c), self.q0.scale(c), self.r0.scale(c))
    }

    /// π + c·Id
    pub fn shifted(&self, c: &FieldElement) -> Pddo {
        Pddo::from_q0_r0(self.q0.clone(), &self.r0 + &SlotPoly::constant(c.clone()))
    }

    /// Whether `self = λ·other` for some field constant λ (λ may be 0).
    pub fn is_scalar_multiple_of(&self, other: &Pddo) -> bool {
        if other.is_zero() {
            return self.is_zero();
        }
        let (m, c) = other
            .t
            .terms()
            .next()
            .map(|(e, c)| (e, c.clone()))
            .or_else(|| other.q0.terms().next().map(|(e, c)| (e, c.clone())))
            .expect("nonzero operator");
        let from_t = !other.t.is_zero();
        let mine = if from_t {
            self.t.coeff(m.0, m.1)
        } else {
            self.q0.coeff(m.0, m.1)
        };
        let lambda = mine.checked_div(&c).expect("nonzero pivot");
        self.t == other.t.scale(&lambda) && self.q0 == other.q0.scale(&lambda)
    }

    pub fn canonical_forms(&self) -> CanonicalForms {
        // With S = 0 and P = 0 the operator is Q0 ∂ + R0, so π(1) = R0.
        let (r_sym, r_plus) = dpositive_split(&self.r0);
        let p_plus = dpositive_lift(&r_sym).expect("symmetric part lifts");
        let q_sup = &self.q0 - &p_plus.swap();
        let (q_sym, q_plus) = dpositive_split(&q_sup);
        let p_sup = &p_plus + &q_sym;
        CanonicalForms {
            q0: self.q0.clone(),
            r0: self.r0.clone(),
            p_plus,
            q_sup,
            r_plus,
            p_sup,
            q_plus,
        }
    }

    /// π_i f, acting on (x_i, x_{i+1}) inside f's ring.
    pub fn apply(&self, i: usize, f: &MultiPoly) -> Result<MultiPoly> {
        let n = f.n_vars();
        if i == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: n.saturating_sub(1),
            });
        }
        self.apply_at(i, i + 1, f)
    }

    /// Act with slots u ↦ x_a, v ↦ x_b and s the transposition of x_a, x_b.
    pub fn apply_at(&self, a: usize, b: usize, f: &MultiPoly) -> Result<MultiPoly> {
        if self.is_zero() || f.is_zero() {
            return Ok(MultiPoly::zero(f.n_vars()));
        }
        let n = f.n_vars();
        let t = self.t.instantiate(a, b, n)?;
        let q0 = self.q0.instantiate(a, b, n)?;
        let sf = f.transpose(a, b)?;
        let num = &(&t * f) - &(&q0 * &sf);
        num.div_by_difference(a, b)
    }

    /// (π(1), π(x_i)) in `n` variables.
    pub fn probe(&self, i: usize, n: usize) -> Result<(MultiPoly, MultiPoly)> {
        let one = MultiPoly::one(n);
        let xi = MultiPoly::var(n, i)?;
        Ok((self.apply(i, &one)?, self.apply(i, &xi)?))
    }

    /// The operator `self ∘ other` acting on one index.
    pub fn compose_same_index(&self, other: &Pddo) -> Pddo {
        let (q0, r0) = (&self.q0, &self.r0);
        let (hq, hr) = (&other.q0, &other.r0);
        let dq = &(&(q0 * &hq.ddiff()) + &(r0 * hq)) + &(q0 * &hr.swap());
        let dr = &(q0 * &hr.ddiff()) + &(r0 * hr);
        Pddo::from_pqrs(&SlotPoly::zero(), &dq, &dr, &SlotPoly::zero())
    }

    /// (μ, ν) with π² = μπ + ν·Id, when such constants exist.
    ///
    /// The zero operator reports (0, 0).
    pub fn hecke_params(&self) -> Option<(FieldElement, FieldElement)> {
        match self.degeneracy {
            Degeneracy::Zero => Some((FieldElement::zero(), FieldElement::zero())),
            Degeneracy::QZero => {
                let r = self.r0.as_constant()?;
                Some((r, FieldElement::zero()))
            }
            Degeneracy::TZero => {
                let l = self.r0.as_constant()?;
                Some((FieldElement::zero(), &l * &l))
            }
            Degeneracy::NonDegenerate => {
                let mu = self.t.ddiff().as_constant()?;
                let r0_swapped = self.r0.swap();
                let nu_poly = &(&self.r0 * &self.t.swap()).ddiff() + &(&self.r0 * &r0_swapped);
                let nu = nu_poly.as_constant()?;
                Some((mu, nu))
            }
        }
    }

    /// Whether this is a nonzero multiple of the identity.
    pub fn as_scalar(&self) -> Option<FieldElement> {
        if self.degeneracy == Degeneracy::QZero {
            self.r0.as_constant()
        } else {
            None
        }
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }
}

impl fmt::Display for Pddo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f -> ({})*d(f) + ({})*f", self.q0, self.r0)
    }
}
