//! Permutations in one-line notation and the classical Bruhat covering test.
//!
//! Everything here is deliberately direct: the cover oracle scans all
//! transpositions and checks the intermediate-value condition literally, so
//! it can serve as ground truth for the composition side.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{check_range, Error, Result};

/// A permutation of `1..=n` in one-line notation.
///
/// Positions and values are 1-based in the public API.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    values: Vec<usize>,
}

/// The transposition of positions `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transposition {
    pub i: usize,
    pub j: usize,
}

impl Transposition {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::IndexOutOfRange {
                what: "transposition",
                index: i,
                lo: 1,
                hi: j.saturating_sub(1),
            });
        }
        Ok(Transposition { i, j })
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        Ok(Permutation {
            values: (1..=n).collect(),
        })
    }

    /// Builds a permutation from its one-line word, rejecting duplicates and gaps.
    pub fn from_values(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_values_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_values(values.clone()).is_ok());
        Permutation { values }
    }

    /// All of `S_n` in lexicographic order of one-line words.
    pub fn all(n: usize) -> Result<Vec<Permutation>> {
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        Ok((1..=n)
            .permutations(n)
            .map(|values| Permutation { values })
            .collect())
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.values
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    /// `w · (i,j)`: swaps the values at positions `i` and `j`.
    pub fn multiply_right_transposition(&self, t: Transposition) -> Result<Permutation> {
        let n = self.degree();
        check_range("transposition", t.i, 1, n)?;
        check_range("transposition", t.j, 1, n)?;
        let mut values = self.values.clone();
        values.swap(t.i - 1, t.j - 1);
        Ok(Permutation { values })
    }

    /// Embeds `S_n` into `S_m` (`m >= n`) by fixing the new points.
    pub fn embed(&self, m: usize) -> Result<Permutation> {
        if m < self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: m,
            });
        }
        let mut values = self.values.clone();
        values.extend(self.degree() + 1..=m);
        Ok(Permutation { values })
    }

    /// Lehmer code: `α_i = #{k > i : w(k) < w(i)}` for `i` in `1..n`.
    pub fn encode(&self) -> Composition {
        let n = self.degree();
        let parts = (1..n)
            .map(|i| self.extended_code_count_raw(i, n + 1))
            .collect();
        Composition::from_parts_unchecked(parts, n)
    }

    /// `#{k : i < k < j, w(k) < w(i)}` with `1 <= i < j <= n + 1`.
    pub fn extended_code_count(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.degree();
        check_range("row", i, 1, n)?;
        check_range("column", j, i + 1, n + 1)?;
        Ok(self.extended_code_count_raw(i, j))
    }

    fn extended_code_count_raw(&self, i: usize, j: usize) -> usize {
        let wi = self.values[i - 1];
        self.values[i..j - 1].iter().filter(|&&v| v < wi).count()
    }
}

fn check_same_degree(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

/// Classical covering test: `w` covers `w_prime` iff `w = w_prime · (i,j)`
/// with `w_prime(i) < w_prime(j)` and no `k` strictly between `i` and `j`
/// has `w_prime(i) < w_prime(k) < w_prime(j)`.
pub fn bruhat_cover_oracle(
    w: &Permutation,
    w_prime: &Permutation,
) -> Result<Option<Transposition>> {
    check_same_degree(w, w_prime)?;
    let n = w.degree();
    for i in 1..=n {
        for j in i + 1..=n {
            let t = Transposition { i, j };
            if w_prime.multiply_right_transposition(t)? != *w {
                continue;
            }
            let (lo, hi) = (w_prime.at(i), w_prime.at(j));
            if lo < hi && !(i + 1..j).any(|k| lo < w_prime.at(k) && w_prime.at(k) < hi) {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

/// Every permutation covered by `w`, with the transposition relating them,
/// ordered by `(i, j)`.
pub fn all_bruhat_lower_covers(w: &Permutation) -> Vec<(Permutation, Transposition)> {
    let n = w.degree();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let (hi, lo) = (w.at(i), w.at(j));
            if hi < lo || (i + 1..j).any(|k| lo < w.at(k) && w.at(k) < hi) {
                continue;
            }
            let mut values = w.values.clone();
            values.swap(i - 1, j - 1);
            out.push((Permutation { values }, Transposition { i, j }));
        }
    }
    out
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::from_values(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.values
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = || Error::Parse {
            what: "permutation",
            input: s.to_string(),
        };
        let values = s
            .trim()
            .split(',')
            .map(|tok| tok.trim().parse::<usize>().map_err(|_| parse_err()))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_values(values)
    }
}
