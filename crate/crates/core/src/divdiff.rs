//! The elementary divided difference ∂_i, plus the symmetric / ∂-positive
//! decomposition of two-slot polynomials and its inverse lift.
//!
//! A slot monomial uʳvˢ is ∂-positive when r > s. Every two-slot polynomial
//! splits uniquely into a symmetric part and a ∂-positive part, and ∂ maps the
//! ∂-positive polynomials bijectively onto the symmetric ones.

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, SlotPoly};

/// ∂_i f = (f − s_i f)/(x_i − x_{i+1}).
pub fn ddiff(f: &MultiPoly, i: usize) -> Result<MultiPoly> {
    let num = f - &f.swap_vars(i)?;
    num.div_by_difference(i, i + 1)
}

pub fn is_dpositive(p: &SlotPoly) -> bool {
    p.terms().all(|((r, s), _)| r > s)
}

/// Split `f` into `(sym, pos)` with `f = sym + pos`, `sym` slot-symmetric and
/// `pos` ∂-positive.
pub fn dpositive_split(f: &SlotPoly) -> (SlotPoly, SlotPoly) {
    let mut sym = Vec::new();
    let mut pos = Vec::new();
    for ((r, s), c) in f.terms() {
        if r > s {
            pos.push(((r, s), c.clone()));
        } else if r == s {
            sym.push(((r, s), c.clone()));
        } else {
            // uʳvˢ = (uʳvˢ + uˢvʳ) − uˢvʳ
            sym.push(((r, s), c.clone()));
            sym.push(((s, r), c.clone()));
            pos.push(((s, r), -c));
        }
    }
    (SlotPoly::from_terms(sym), SlotPoly::from_terms(pos))
}

/// The unique ∂-positive `g` with ∂g = `phi`, for symmetric `phi`.
///
/// Repeatedly takes a term a·uʳv^{d−r} of maximal u-degree r, records
/// a·u^{r+1}v^{d−r}, and subtracts its image a·Σ_{s=d−r}^{r} uˢv^{d−s}.
/// The remainder stays symmetric with strictly smaller variable degree in
/// that homogeneous component.
pub fn dpositive_lift(phi: &SlotPoly) -> Result<SlotPoly> {
    if !phi.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut rest = phi.clone();
    let mut lift = Vec::new();
    while !rest.is_zero() {
        let ((r, s), a) = rest
            .terms()
            .max_by_key(|((r, s), _)| (*r, *s))
            .map(|(e, c)| (e, c.clone()))
            .expect("nonzero remainder has a term");
        debug_assert!(r >= s);
        let d = r + s;
        lift.push(((r + 1, s), a.clone()));
        let image = SlotPoly::from_terms((s..=r).map(|k| ((k, d - k), a.clone())));
        rest = &rest - &image;
    }
    Ok(SlotPoly::from_terms(lift))
}

/// ∂-positive part of a slot polynomial.
pub fn dpositive_part(f: &SlotPoly) -> SlotPoly {
    dpositive_split(f).1
}

/// Symmetric part of a slot polynomial.
pub fn symmetric_part(f: &SlotPoly) -> SlotPoly {
    dpositive_split(f).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElement;

    fn c(k: i64) -> FieldElement {
        FieldElement::from_int(k)
    }

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i).unwrap()
    }

    #[test]
    fn ddiff_examples() {
        assert_eq!(ddiff(&x(2, 1), 1).unwrap(), MultiPoly::one(2));
        assert_eq!(ddiff(&(&x(2, 1) * &x(2, 2)), 1).unwrap(), MultiPoly::zero(2));
        let f = MultiPoly::monomial(vec![2, 1], c(1));
        let d = ddiff(&f, 1).unwrap();
        assert_eq!(d, &x(2, 1) * &x(2, 2));
        // multiply back: d·(x1 − x2) = f − s f
        assert_eq!(&d * &(&x(2, 1) - &x(2, 2)), &f - &f.swap_vars(1).unwrap());
        assert!(matches!(ddiff(&f, 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn split_examples() {
        let (u, v) = (SlotPoly::u(), SlotPoly::v());
        let sym = &(&u * &u) + &(&v * &v);
        assert_eq!(dpositive_split(&sym), (sym.clone(), SlotPoly::zero()));
        assert_eq!(dpositive_split(&u), (SlotPoly::zero(), u.clone()));
        let u2v = SlotPoly::term(2, 1, c(1));
        let uv2 = SlotPoly::term(1, 2, c(1));
        let u3 = SlotPoly::term(3, 0, c(1));
        let f = &(&u2v + &uv2) + &u3;
        assert_eq!(dpositive_split(&f), (&u2v + &uv2, u3));
        // v alone: v = (u + v) − u
        assert_eq!(dpositive_split(&v), (&u + &v, -&u));
    }

    #[test]
    fn lift_examples() {
        let (u, v) = (SlotPoly::u(), SlotPoly::v());
        assert_eq!(dpositive_lift(&SlotPoly::one()).unwrap(), u);
        let l = dpositive_lift(&(&u + &v)).unwrap();
        assert_eq!(l, &u * &u);
        assert_eq!(l.ddiff(), &u + &v);
        let l = dpositive_lift(&(&u * &v)).unwrap();
        assert_eq!(l, SlotPoly::term(2, 1, c(1)));
        assert_eq!(l.ddiff(), &u * &v);
        assert_eq!(dpositive_lift(&u), Err(Error::NotSymmetric));
        assert_eq!(dpositive_lift(&SlotPoly::zero()).unwrap(), SlotPoly::zero());
    }

    #[test]
    fn lift_mixed_degrees() {
        // φ = 3 + (u + v) − 2uv + u³ + v³ + 5u²v²
        let phi = SlotPoly::from_terms(vec![
            ((0, 0), c(3)),
            ((1, 0), c(1)),
            ((0, 1), c(1)),
            ((1, 1), c(-2)),
            ((3, 0), c(1)),
            ((0, 3), c(1)),
            ((2, 2), c(5)),
        ]);
        let g = dpositive_lift(&phi).unwrap();
        assert!(is_dpositive(&g));
        assert_eq!(g.ddiff(), phi);
    }
}
