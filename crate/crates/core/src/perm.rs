//! Permutations in one-line notation and their reduced words.
//!
//! Permutations are functions on {1…n} and compose as (uv)(k) = u(v(k)).
//! A word (a₁, …, a_k) stands for the product s_{a₁}⋯s_{a_k}.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest n accepted by word enumeration and tables.
pub const MAX_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &k in &one_line {
            if k == 0 || k > n || seen[k - 1] {
                return Err(Error::Parse(format!("not a permutation: {:?}", one_line)));
            }
            seen[k - 1] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// w₀ = n n−1 … 1
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// All permutations of {1…n} in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for k in 0..n {
                if !used[k] {
                    used[k] = true;
                    cur.push(k + 1);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[k] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// w(k), 1-based.
    pub fn at(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &k)| k == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &k) in self.0.iter().enumerate() {
            inv[k - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// self ∘ other
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        Ok(Permutation(other.0.iter().map(|&k| self.0[k - 1]).collect()))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: self.n().saturating_sub(1),
            });
        }
        Ok(())
    }

    /// w·s_i: swaps positions i and i+1.
    pub fn times_simple(&self, i: usize) -> Result<Permutation> {
        self.check_index(i)?;
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Ok(Permutation(w))
    }

    /// s_i·w: swaps the values i and i+1.
    pub fn simple_times(&self, i: usize) -> Result<Permutation> {
        self.check_index(i)?;
        Ok(Permutation(
            self.0
                .iter()
                .map(|&k| match k {
                    k if k == i => i + 1,
                    k if k == i + 1 => i,
                    k => k,
                })
                .collect(),
        ))
    }

    /// Indices i with w(i) > w(i+1).
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    /// Indices i with w⁻¹(i) > w⁻¹(i+1).
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    /// The product of a word of simple transpositions in S_n.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Permutation> {
        word.iter()
            .try_fold(Permutation::identity(n), |w, &i| w.times_simple(i))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        if self.n() < 10 {
            f.write_str(&parts.concat())
        } else {
            write!(f, "[{}]", parts.join(","))
        }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::SizeLimit(format!("n = {} exceeds {}", n, MAX_N)));
    }
    Ok(())
}

/// All reduced words of `w`, sorted lexicographically.
pub fn reduced_words(w: &Permutation) -> Result<Vec<Vec<usize>>> {
    check_size(w.n())?;
    let mut out = words_rec(w);
    out.sort();
    Ok(out)
}

fn words_rec(w: &Permutation) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in w.right_descents() {
        let shorter = w.times_simple(i).expect("descent index in range");
        for mut word in words_rec(&shorter) {
            word.push(i);
            out.push(word);
        }
    }
    out
}

/// The lexicographically smallest reduced word of `w`.
pub fn first_reduced_word(w: &Permutation) -> Vec<usize> {
    let mut word = Vec::with_capacity(w.length());
    let mut cur = w.clone();
    while let Some(&i) = cur.left_descents().first() {
        word.push(i);
        cur = cur.simple_times(i).expect("descent index in range");
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn reduced_word_examples() {
        assert_eq!(reduced_words(&Permutation::identity(3)).unwrap(), vec![Vec::<usize>::new()]);
        assert_eq!(
            reduced_words(&Permutation::longest(3)).unwrap(),
            vec![vec![1, 2, 1], vec![2, 1, 2]]
        );
        assert_eq!(reduced_words(&p(&[2, 1, 3])).unwrap(), vec![vec![1]]);
        assert!(matches!(
            reduced_words(&Permutation::identity(7)),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn words_multiply_back() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let words = reduced_words(&w).unwrap();
                assert_eq!(words[0], first_reduced_word(&w));
                for word in words {
                    assert_eq!(word.len(), w.length());
                    assert_eq!(Permutation::from_word(n, &word).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn longest_word_counts() {
        // 1, 1, 2, 16, 768 reduced words of w₀ for n = 1..5
        let counts: Vec<usize> = (1..=5)
            .map(|n| reduced_words(&Permutation::longest(n)).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 16, 768]);
    }

    #[test]
    fn group_basics() {
        let w = p(&[2, 3, 1]);
        assert_eq!(w.compose(&w.inverse()).unwrap(), Permutation::identity(3));
        assert_eq!(w.length(), 2);
        assert_eq!(Permutation::all(3).len(), 6);
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert_eq!(w.to_string(), "231");
    }
}
