//! Polynomial tables indexed by permutations.
//!
//! The entry for w is π_{a₁}⋯π_{a_k}(seed) where (a₁, …, a_k) is a reduced
//! word of w⁻¹w₀. With ∂ and the staircase seed this is the Schubert
//! polynomial of w.

use std::collections::HashMap;

use crate::braid::family_braid_check;
use crate::error::{Error, Result};
use crate::families::OperatorFamily;
use crate::perm::{Permutation, MAX_N};
use crate::poly::MultiPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub perm: Permutation,
    /// Lexicographically smallest reduced word of perm⁻¹w₀.
    pub word: Vec<usize>,
    pub poly: MultiPoly,
}

/// π_{w₁}(π_{w₂}(⋯ f)).
pub fn apply_word(fam: &OperatorFamily, word: &[usize], f: &MultiPoly) -> Result<MultiPoly> {
    word.iter()
        .rev()
        .try_fold(f.clone(), |g, &i| fam.op(i)?.apply(i, &g))
}

/// x₁^{n−1} x₂^{n−2} ⋯ x_{n−1}
pub fn staircase(n: usize) -> MultiPoly {
    MultiPoly::monomial((0..n).map(|k| (n - 1 - k) as u32).collect(), 1.into())
}

/// One entry per permutation of S_n, in lexicographic order.
///
/// Every reduced word of every w⁻¹w₀ is checked to give the same polynomial:
/// the value at v is computed from each left descent s_i of v as
/// π_i applied to the value at s_i·v, and all of these must agree. Since
/// every reduced word of v starts with some left descent, this covers
/// all of them.
pub fn polynomial_table(fam: &OperatorFamily, seed: &MultiPoly) -> Result<Vec<TableEntry>> {
    let n = fam.n();
    if n > MAX_N {
        return Err(Error::SizeLimit(format!("n = {} exceeds {}", n, MAX_N)));
    }
    if seed.n_vars() != n {
        return Err(Error::DimensionMismatch(n, seed.n_vars()));
    }
    let report = family_braid_check(fam);
    if !report.pass() {
        let bad: Vec<String> = report
            .cubic
            .iter()
            .filter(|(_, r)| !r.pass)
            .map(|(i, r)| format!("cubic ({}, {}): {}", i, i + 1, r))
            .chain(
                report
                    .quadratic
                    .iter()
                    .filter(|q| !q.2)
                    .map(|(i, k, _)| format!("quadratic ({}, {})", i, k)),
            )
            .collect();
        return Err(Error::BraidFailure(bad.join("; ")));
    }

    // v ranges over S_n by length; value(v) = apply_word(word(v), seed).
    let mut by_length: Vec<Vec<Permutation>> = vec![Vec::new(); n * n.saturating_sub(1) / 2 + 1];
    for v in Permutation::all(n) {
        by_length[v.length()].push(v);
    }
    let mut value: HashMap<Permutation, (Vec<usize>, MultiPoly)> = HashMap::new();
    for level in by_length {
        for v in level {
            if v.is_identity() {
                value.insert(v, (Vec::new(), seed.clone()));
                continue;
            }
            let mut found: Option<(Vec<usize>, MultiPoly)> = None;
            for i in v.left_descents() {
                let shorter = v.simple_times(i)?;
                let (w, g) = &value[&shorter];
                let p = fam.op(i)?.apply(i, g)?;
                match &found {
                    None => {
                        let mut word = vec![i];
                        word.extend_from_slice(w);
                        found = Some((word, p));
                    }
                    Some((word, q)) if *q != p => {
                        let mut other = vec![i];
                        other.extend_from_slice(w);
                        return Err(Error::BraidFailure(format!(
                            "words {:?} and {:?} of {} give different polynomials",
                            word, other, v
                        )));
                    }
                    Some(_) => {}
                }
            }
            value.insert(v, found.expect("non-identity has a descent"));
        }
    }

    let w0 = Permutation::longest(n);
    Permutation::all(n)
        .into_iter()
        .map(|w| {
            let v = w.inverse().compose(&w0)?;
            let (word, poly) = value[&v].clone();
            Ok(TableEntry { perm: w, word, poly })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{preset, Preset};
    use crate::field::FieldElement;
    use num_traits::Zero;
    use crate::perm::reduced_words;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i).unwrap()
    }

    #[test]
    fn apply_word_examples() {
        let dd = preset(&Preset::PureDdiff(FieldElement::from(1)), 3).unwrap();
        let f = &x(3, 1) * &x(3, 1);
        assert_eq!(apply_word(&dd, &[1], &f).unwrap(), &x(3, 1) + &x(3, 2));
        assert_eq!(apply_word(&dd, &[], &f).unwrap(), f);
        let dem = preset(&Preset::Demazure, 3).unwrap();
        let g = MultiPoly::monomial(vec![2, 1, 0], 1.into());
        assert_eq!(
            apply_word(&dem, &[1, 2, 1], &g).unwrap(),
            apply_word(&dem, &[2, 1, 2], &g).unwrap()
        );
        assert!(apply_word(&dem, &[3], &g).is_err());
    }

    #[test]
    fn schubert_s3() {
        let dd = preset(&Preset::PureDdiff(FieldElement::from(1)), 3).unwrap();
        let t = polynomial_table(&dd, &staircase(3)).unwrap();
        let (x1, x2) = (x(3, 1), x(3, 2));
        // 123, 132, 213, 231, 312, 321
        let expected = vec![
            MultiPoly::one(3),
            &x1 + &x2,
            x1.clone(),
            &x1 * &x2,
            &x1 * &x1,
            &(&x1 * &x1) * &x2,
        ];
        let got: Vec<MultiPoly> = t.iter().map(|e| e.poly.clone()).collect();
        assert_eq!(got, expected);
        for e in &t {
            let v = e.perm.inverse().compose(&Permutation::longest(3)).unwrap();
            for w in reduced_words(&v).unwrap() {
                assert_eq!(apply_word(&dd, &w, &staircase(3)).unwrap(), e.poly);
            }
        }
    }

    #[test]
    fn demazure_table() {
        let dem = preset(&Preset::Demazure, 3).unwrap();
        let seed = staircase(3);
        let k = polynomial_table(&dem, &seed).unwrap();
        assert_eq!(k.last().unwrap().poly, seed);
        // the identity entry is the Schur polynomial s_{21}(x1, x2, x3)
        let schur = parse_poly_terms(&[
            ([2, 1, 0], 1), ([2, 0, 1], 1), ([1, 2, 0], 1), ([1, 1, 1], 2),
            ([1, 0, 2], 1), ([0, 2, 1], 1), ([0, 1, 2], 1),
        ]);
        assert_eq!(k[0].poly, schur);
        for e in &k {
            assert_eq!(e.poly.total_degree(), Some(3));
            assert!(!e.poly.coeff(&[2, 1, 0]).is_zero());
            assert!(e.poly.terms().all(|(_, c)| c.is_rational() && *c.rat_part() > num_rational::BigRational::zero()));
        }
    }

    fn parse_poly_terms(t: &[([u32; 3], i64)]) -> MultiPoly {
        MultiPoly::from_terms(3, t.iter().map(|(e, c)| (e.to_vec(), FieldElement::from(*c)))).unwrap()
    }

    #[test]
    fn failing_family_rejected() {
        let bad = crate::families::case1_operator(
            &crate::families::CaseParams::from_ints(1, 1, 1, 0),
            &FieldElement::from(1),
        );
        let fam = OperatorFamily::uniform(3, bad).unwrap();
        assert!(matches!(
            polynomial_table(&fam, &staircase(3)),
            Err(Error::BraidFailure(_))
        ));
    }
}
