//! Sparse multivariate polynomials over [`FieldElement`].
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic with x₁ > x₂ > ⋯. Zero coefficients are never stored, so the
//! map itself is the canonical form and `==` is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Exponent vector, ordered by total degree first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n_vars: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl MultiPoly {
    pub fn zero(n_vars: usize) -> Self {
        MultiPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: FieldElement) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(Monomial::one(n_vars), c);
        p
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, FieldElement::one())
    }

    /// The variable x_i, 1-based.
    pub fn var(n_vars: usize, i: usize) -> Result<Self> {
        check_var(i, n_vars)?;
        let mut e = vec![0; n_vars];
        e[i - 1] = 1;
        Ok(Self::monomial(e, FieldElement::one()))
    }

    pub fn monomial(exps: Vec<u32>, c: FieldElement) -> Self {
        let n = exps.len();
        let mut p = Self::zero(n);
        p.add_term(Monomial(exps), c);
        p
    }

    /// Build from `(exponents, coefficient)` pairs, combining duplicates.
    pub fn from_terms<I>(n_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, FieldElement)>,
    {
        let mut p = Self::zero(n_vars);
        for (e, c) in terms {
            if e.len() != n_vars {
                return Err(Error::DimensionMismatch(n_vars, e.len()));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> FieldElement {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(FieldElement::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of x_i (1-based) over all terms; 0 for constants and zero.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i - 1]).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<FieldElement> {
        if self.is_constant() {
            Some(self.coeff(&vec![0; self.n_vars]))
        } else {
            None
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_dims(&self, other: &MultiPoly) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::DimensionMismatch(self.n_vars, other.n_vars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        let mut out = MultiPoly::zero(self.n_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.n_vars);
        }
        MultiPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.n_vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Apply an exponent-vector permutation to every term.
    fn map_monomials<F>(&self, n_out: usize, f: F) -> MultiPoly
    where
        F: Fn(&Monomial) -> Monomial,
    {
        let mut out = MultiPoly::zero(n_out);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// s_i: exchange x_i and x_{i+1}, 1 ≤ i ≤ n − 1.
    pub fn swap_vars(&self, i: usize) -> Result<MultiPoly> {
        check_adjacent(i, self.n_vars)?;
        Ok(self.transpose_unchecked(i - 1, i))
    }

    /// Exchange any two variables x_i and x_j (1-based).
    pub fn transpose(&self, i: usize, j: usize) -> Result<MultiPoly> {
        check_var(i, self.n_vars)?;
        check_var(j, self.n_vars)?;
        Ok(self.transpose_unchecked(i - 1, j - 1))
    }

    fn transpose_unchecked(&self, a: usize, b: usize) -> MultiPoly {
        self.map_monomials(self.n_vars, |m| {
            let mut e = m.0.clone();
            e.swap(a, b);
            Monomial(e)
        })
    }

    /// Substitute x_i := x_j (1-based).
    pub fn identify_vars(&self, i: usize, j: usize) -> Result<MultiPoly> {
        check_var(i, self.n_vars)?;
        check_var(j, self.n_vars)?;
        Ok(self.map_monomials(self.n_vars, |m| {
            let mut e = m.0.clone();
            if i != j {
                e[j - 1] += e[i - 1];
                e[i - 1] = 0;
            }
            Monomial(e)
        }))
    }

    /// Exact quotient by the linear form x_i − x_j.
    ///
    /// Uses x_iᵏ − x_jᵏ = (x_i − x_j)·Σ x_i^{k−1−t} x_j^t on every term; the
    /// remainder is the substitution f|_{x_i = x_j}, which must vanish.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<MultiPoly> {
        check_var(i, self.n_vars)?;
        check_var(j, self.n_vars)?;
        if i == j {
            return Err(Error::SameVariable(i));
        }
        if !self.identify_vars(i, j)?.is_zero() {
            return Err(Error::InexactDivision);
        }
        let (a, b) = (i - 1, j - 1);
        let mut out = MultiPoly::zero(self.n_vars);
        for (m, c) in &self.terms {
            let k = m.0[a];
            for t in 0..k {
                let mut e = m.0.clone();
                e[a] = k - 1 - t;
                e[b] += t;
                out.add_term(Monomial(e), c.clone());
            }
        }
        Ok(out)
    }

    /// Exact division by an arbitrary nonzero polynomial.
    ///
    /// Linear forms x_i − x_j take the substitution fast path; everything else
    /// goes through leading-term reduction in graded-lex order, which yields
    /// the true quotient whenever the division is exact.
    pub fn exact_div(&self, g: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some((i, j)) = g.as_variable_difference() {
            return self.div_by_difference(i, j);
        }
        let (lm, lc) = g.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let lc_inv = lc.invert()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.n_vars);
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return Err(Error::InexactDivision);
            }
            let q = MultiPoly {
                n_vars: self.n_vars,
                terms: BTreeMap::from([(m.div(&lm), &c * &lc_inv)]),
            };
            rem = &rem - &(&q * g);
            quot = &quot + &q;
        }
        Ok(quot)
    }

    /// Returns (i, j) when self = x_i − x_j.
    fn as_variable_difference(&self) -> Option<(usize, usize)> {
        if self.terms.len() != 2 {
            return None;
        }
        let mut pos = None;
        let mut neg = None;
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            let idx = m.0.iter().position(|&e| e == 1)? + 1;
            if c.is_one() {
                pos = Some(idx);
            } else if (-c).is_one() {
                neg = Some(idx);
            } else {
                return None;
            }
        }
        Some((pos?, neg?))
    }

    /// Evaluate at a point (one field value per variable).
    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.n_vars {
            return Err(Error::DimensionMismatch(self.n_vars, point.len()));
        }
        let mut acc = FieldElement::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Re-embed into `n_out` variables, sending x_k to x_{map[k−1]}.
    pub fn rename_vars(&self, n_out: usize, map: &[usize]) -> Result<MultiPoly> {
        if map.len() != self.n_vars {
            return Err(Error::DimensionMismatch(self.n_vars, map.len()));
        }
        for &t in map {
            check_var(t, n_out)?;
        }
        Ok(self.map_monomials(n_out, |m| {
            let mut e = vec![0; n_out];
            for (k, &x) in m.0.iter().enumerate() {
                e[map[k] - 1] += x;
            }
            Monomial(e)
        }))
    }
}

fn check_var(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, lo: 1, hi: n });
    }
    Ok(())
}

fn check_adjacent(i: usize, n: usize) -> Result<()> {
    if i == 0 || i + 1 > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    Ok(())
}

// Operator sugar for same-dimension polynomials. Dimension mismatches are a
// programming error here; use the `try_*` methods for untrusted inputs.
impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("polynomial dimension mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("polynomial dimension mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("polynomial dimension mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-FieldElement::one())
    }
}

fn fmt_coeff_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &FieldElement,
    mono: &str,
) -> fmt::Result {
    let s = c.to_string();
    let compound = !c.is_rational() && !c.rat_part().is_zero();
    let (neg, body) = if compound {
        (false, format!("({})", s))
    } else if let Some(rest) = s.strip_prefix('-') {
        (true, rest.to_string())
    } else {
        (false, s)
    };
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { '-' } else { '+' })?;
    }
    match (mono.is_empty(), body == "1") {
        (true, _) => write!(f, "{}", body),
        (false, true) => write!(f, "{}", mono),
        (false, false) => write!(f, "{}*{}", body, mono),
    }
}

fn fmt_monomial(exps: &[u32], names: &[String]) -> String {
    exps.iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{}^{}", n, e) })
        .collect::<Vec<_>>()
        .join("*")
}

fn fmt_poly(
    f: &mut fmt::Formatter<'_>,
    terms: &BTreeMap<Monomial, FieldElement>,
    names: &[String],
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (m, c)) in terms.iter().rev().enumerate() {
        fmt_coeff_term(f, k == 0, c, &fmt_monomial(&m.0, names))?;
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.n_vars).map(|i| format!("x{}", i)).collect();
        fmt_poly(f, &self.terms, &names)
    }
}

/// A polynomial in two abstract slots (u, v), instantiated at a concrete
/// ordered pair of variables (x_i, x_j) when an operator acts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlotPoly(MultiPoly);

impl SlotPoly {
    pub fn zero() -> Self {
        SlotPoly(MultiPoly::zero(2))
    }

    pub fn one() -> Self {
        SlotPoly(MultiPoly::one(2))
    }

    pub fn constant(c: FieldElement) -> Self {
        SlotPoly(MultiPoly::constant(2, c))
    }

    pub fn u() -> Self {
        SlotPoly(MultiPoly::monomial(vec![1, 0], FieldElement::one()))
    }

    pub fn v() -> Self {
        SlotPoly(MultiPoly::monomial(vec![0, 1], FieldElement::one()))
    }

    /// c·uʳvˢ
    pub fn term(r: u32, s: u32, c: FieldElement) -> Self {
        SlotPoly(MultiPoly::monomial(vec![r, s], c))
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), FieldElement)>,
    {
        let mut p = MultiPoly::zero(2);
        for ((r, s), c) in terms {
            p.add_term(Monomial(vec![r, s]), c);
        }
        SlotPoly(p)
    }

    /// A univariate polynomial in u from low-to-high coefficients.
    pub fn univariate_u(coeffs: &[FieldElement]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, c)| ((k as u32, 0), c.clone())))
    }

    /// A univariate polynomial in v from low-to-high coefficients.
    pub fn univariate_v(coeffs: &[FieldElement]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, c)| ((0, k as u32), c.clone())))
    }

    pub fn from_multipoly(p: MultiPoly) -> Result<Self> {
        if p.n_vars() != 2 {
            return Err(Error::DimensionMismatch(2, p.n_vars()));
        }
        Ok(SlotPoly(p))
    }

    pub fn as_multipoly(&self) -> &MultiPoly {
        &self.0
    }

    /// Terms as ((r, s), coefficient) in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((u32, u32), &FieldElement)> {
        self.0.terms().map(|(m, c)| ((m.0[0], m.0[1]), c))
    }

    pub fn coeff(&self, r: u32, s: u32) -> FieldElement {
        self.0.coeff(&[r, s])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_constant()
    }

    pub fn as_constant(&self) -> Option<FieldElement> {
        self.0.as_constant()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    /// Exchange the slots: p(u, v) ↦ p(v, u).
    pub fn swap(&self) -> SlotPoly {
        SlotPoly(self.0.transpose_unchecked(0, 1))
    }

    pub fn is_symmetric(&self) -> bool {
        self.swap() == *self
    }

    pub fn scale(&self, c: &FieldElement) -> SlotPoly {
        SlotPoly(self.0.scale(c))
    }

    /// Divided difference in the slots, (p − swap p)/(u − v).
    pub fn ddiff(&self) -> SlotPoly {
        let num = &self.0 - &self.swap().0;
        SlotPoly(
            num.div_by_difference(1, 2)
                .expect("antisymmetric numerator is divisible by u - v"),
        )
    }

    /// Quotient by (u − v), if exact.
    pub fn div_u_minus_v(&self) -> Result<SlotPoly> {
        Ok(SlotPoly(self.0.div_by_difference(1, 2)?))
    }

    /// The linear form u − v.
    pub fn u_minus_v() -> SlotPoly {
        &Self::u() - &Self::v()
    }

    /// Substitute u ↦ x_i, v ↦ x_j inside an `n`-variable ring.
    pub fn instantiate(&self, i: usize, j: usize, n: usize) -> Result<MultiPoly> {
        check_var(i, n)?;
        check_var(j, n)?;
        if i == j {
            return Err(Error::SameVariable(i));
        }
        self.0.rename_vars(n, &[i, j])
    }

    pub fn eval(&self, u: &FieldElement, v: &FieldElement) -> FieldElement {
        self.0
            .eval(&[u.clone(), v.clone()])
            .expect("two-slot evaluation")
    }
}

impl Add for &SlotPoly {
    type Output = SlotPoly;
    fn add(self, rhs: &SlotPoly) -> SlotPoly {
        SlotPoly(&self.0 + &rhs.0)
    }
}

impl Sub for &SlotPoly {
    type Output = SlotPoly;
    fn sub(self, rhs: &SlotPoly) -> SlotPoly {
        SlotPoly(&self.0 - &rhs.0)
    }
}

impl Mul for &SlotPoly {
    type Output = SlotPoly;
    fn mul(self, rhs: &SlotPoly) -> SlotPoly {
        SlotPoly(&self.0 * &rhs.0)
    }
}

impl Neg for &SlotPoly {
    type Output = SlotPoly;
    fn neg(self) -> SlotPoly {
        SlotPoly(-&self.0)
    }
}

impl fmt::Display for SlotPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.0.terms, &["u".to_string(), "v".to_string()])
    }
}
