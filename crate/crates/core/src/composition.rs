//! Staircase compositions and the c-matrix.
//!
//! A composition `α ∈ C_n` has parts `α_1, …, α_{n-1}` with `0 <= α_i <= n - i`.
//! Parts beyond `n - 1` are read as zero. The c-matrix is defined by a
//! recursion on the column index that only looks at the parts of `α`; it
//! never consults the permutation the composition encodes.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::permutation::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawComposition")]
pub struct Composition {
    n: usize,
    parts: Vec<usize>,
}

#[derive(Deserialize)]
struct RawComposition {
    n: usize,
    parts: Vec<usize>,
}

impl TryFrom<RawComposition> for Composition {
    type Error = Error;

    fn try_from(raw: RawComposition) -> Result<Self> {
        Composition::new(raw.parts, raw.n)
    }
}

/// Reads part `i` (1-based) of an arbitrary weak composition, zero past the end.
#[inline]
pub fn part_of(parts: &[usize], i: usize) -> usize {
    parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
}

/// `c_{i,j}` of an arbitrary weak composition given by its parts.
///
/// `i` is 1-based; `j` may be any column. Not bounds-checked against a
/// degree, so it also serves perturbed compositions that leave the staircase.
pub fn c_entry_of(parts: &[usize], i: usize, j: usize) -> usize {
    let top = part_of(parts, i);
    let mut c = 0;
    for col in i + 2..=j {
        if part_of(parts, col - 1) < top - c {
            c += 1;
        }
    }
    c
}

/// Row `i` of the c-matrix for columns `1..=cols`, as a vector indexed from 0.
pub fn c_row_of(parts: &[usize], i: usize, cols: usize) -> Vec<usize> {
    let top = part_of(parts, i);
    let mut row = vec![0; cols];
    let mut c = 0;
    for col in i + 2..=cols {
        if part_of(parts, col - 1) < top - c {
            c += 1;
        }
        row[col - 1] = c;
    }
    row
}

impl Composition {
    /// Validates `parts` against the staircase bounds of `C_n`.
    ///
    /// Missing trailing parts are filled with zeros; extra trailing parts
    /// must be zero and are dropped.
    pub fn new(mut parts: Vec<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        for (idx, &a) in parts.iter().enumerate() {
            let i = idx + 1;
            if a > n.saturating_sub(i) {
                return Err(Error::StaircaseViolation(i));
            }
        }
        parts.resize(n - 1, 0);
        Ok(Composition { n, parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>, n: usize) -> Self {
        debug_assert_eq!(parts.len(), n - 1);
        debug_assert!(parts.iter().enumerate().all(|(k, &a)| a < n - k));
        Composition { n, parts }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Composition::new(Vec::new(), n)
    }

    /// The top element `(n-1, n-2, …, 1)`.
    pub fn staircase(n: usize) -> Result<Self> {
        Composition::new((1..n).rev().collect(), n)
    }

    /// All of `C_n` in lexicographic order of parts.
    pub fn all(n: usize) -> Result<Vec<Composition>> {
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        Ok((1..n)
            .map(|i| 0..=n - i)
            .multi_cartesian_product()
            .map(|parts| Composition { n, parts })
            .pad_using(1, |_| Composition {
                n,
                parts: Vec::new(),
            })
            .collect())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (1-based), zero beyond the stored parts.
    pub fn part(&self, i: usize) -> usize {
        part_of(&self.parts, i)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&a| a == 0)
    }

    /// `N(α) = max over nonzero parts of α_i + i`; the all-zero composition gets 1.
    pub fn capital_n(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(k, &a)| a + k + 1)
            .max()
            .unwrap_or(1)
    }

    fn check_row(&self, i: usize) -> Result<()> {
        check_range("row", i, 1, self.n - 1)
    }

    /// `c_{i,j}(α)`; columns past `n + 1` repeat column `n + 1`.
    pub fn c_entry(&self, i: usize, j: usize) -> Result<usize> {
        self.check_row(i)?;
        check_range("column", j, 1, usize::MAX)?;
        Ok(c_entry_of(&self.parts, i, j.min(self.n + 1)))
    }

    pub fn c_matrix(&self) -> CMatrix {
        let cols = self.n + 1;
        let entries = (1..self.n)
            .flat_map(|i| c_row_of(&self.parts, i, cols))
            .collect();
        CMatrix {
            rows: self.n - 1,
            cols,
            entries,
        }
    }

    /// The permutation whose Lehmer code is `α`.
    ///
    /// `w(i)` is the `(α_i + 1)`-th smallest value not used by `w(1..i)`.
    pub fn decode(&self) -> Permutation {
        let n = self.n;
        let mut used = vec![false; n + 1];
        let mut values = Vec::with_capacity(n);
        for i in 1..=n {
            let rank = self.part(i);
            let v = (1..=n)
                .filter(|&v| !used[v])
                .nth(rank)
                .expect("staircase bound guarantees enough unused values");
            used[v] = true;
            values.push(v);
        }
        Permutation::from_values_unchecked(values)
    }

    /// `α*` with `α*_i = n - i - α_i`.
    pub fn dual(&self) -> Composition {
        let parts = self
            .parts
            .iter()
            .enumerate()
            .map(|(k, &a)| self.n - (k + 1) - a)
            .collect();
        Composition { n: self.n, parts }
    }

    /// `k_α(i) = min{k > i : α_k < α_i}`, scanning the implicit zeros.
    pub fn k_alpha(&self, i: usize) -> Result<usize> {
        self.check_row(i)?;
        let a = self.part(i);
        if a == 0 {
            return Err(Error::NoDescent(i));
        }
        Ok((i + 1..)
            .find(|&k| self.part(k) < a)
            .expect("trailing parts are zero"))
    }

    /// Re-reads `α` as an element of `C_m` for `m >= n`.
    pub fn embed(&self, m: usize) -> Result<Composition> {
        if m < self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: m,
            });
        }
        Composition::new(self.parts.clone(), m)
    }

    /// Componentwise comparison `self <= other`.
    pub fn product_le(&self, other: &Composition) -> bool {
        self.n == other.n && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.parts.iter().join(","), self.n)
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `4,5,4,1,0,2,0@8`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = || Error::Parse {
            what: "composition",
            input: s.to_string(),
        };
        let (body, degree) = s.trim().rsplit_once('@').ok_or_else(parse_err)?;
        let n = degree.trim().parse::<usize>().map_err(|_| parse_err())?;
        let parts = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|tok| tok.trim().parse::<usize>().map_err(|_| parse_err()))
                .collect::<Result<Vec<_>>>()?
        };
        Composition::new(parts, n)
    }
}

/// The `(n-1) × (n+1)` truncation of `c(α)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl CMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at row `i`, column `j`, both 1-based.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.entries[(i - 1) * self.cols..i * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (1..=self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            writeln!(f, "{}", self.row(i).iter().join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    const ALPHA: &str = "4,5,4,1,0,2,0@8";

    #[test]
    fn validate_examples() {
        assert!(Composition::new(vec![4, 5, 4, 1, 0, 2, 0], 8).is_ok());
        assert_eq!(
            Composition::new(vec![8], 8),
            Err(Error::StaircaseViolation(1))
        );
        let empty = Composition::new(vec![], 1).unwrap();
        assert!(empty.parts().is_empty());
        assert_eq!(Composition::new(vec![1, 2], 4).unwrap().parts(), &[1, 2, 0]);
        assert_eq!(
            Composition::new(vec![1, 0, 0, 0], 3).unwrap().parts(),
            &[1, 0]
        );
        assert_eq!(
            Composition::new(vec![1, 0, 1], 3),
            Err(Error::StaircaseViolation(3))
        );
        assert_eq!(
            Composition::new(vec![0, 3, 0], 4),
            Err(Error::StaircaseViolation(2))
        );
    }

    #[test]
    fn weight_examples() {
        assert_eq!(comp(ALPHA).weight(), 16);
        assert_eq!(comp("0,0,0@4").weight(), 0);
        assert_eq!(comp("2,5,4,1,0,2,1@8").weight(), 15);
    }

    #[test]
    fn capital_n_examples() {
        assert_eq!(comp(ALPHA).capital_n(), 8);
        assert_eq!(comp("1@2").capital_n(), 2);
        assert_eq!(comp("0,0,0@4").capital_n(), 1);
    }

    #[test]
    fn c_entry_examples() {
        let a = comp(ALPHA);
        let row1: Vec<_> = (1..=9).map(|j| a.c_entry(1, j).unwrap()).collect();
        assert_eq!(row1, vec![0, 0, 0, 0, 1, 2, 2, 3, 4]);
        assert_eq!(a.c_entry(2, 9).unwrap(), 5);
        for i in 1..8 {
            assert_eq!(a.c_entry(i, i + 1).unwrap(), 0);
        }
        assert_eq!(a.c_entry(1, 40).unwrap(), 4);
        assert!(a.c_entry(0, 3).is_err());
        assert!(a.c_entry(8, 3).is_err());
    }

    #[test]
    fn c_matrix_examples() {
        let m = comp(ALPHA).c_matrix();
        assert_eq!((m.rows(), m.cols()), (7, 9));
        assert_eq!(m.row(6), &[0, 0, 0, 0, 0, 0, 0, 1, 2]);
        assert!(comp("0,0,0@4")
            .c_matrix()
            .to_rows()
            .iter()
            .flatten()
            .all(|&c| c == 0));
        assert_eq!(comp("1@2").c_matrix().to_rows(), vec![vec![0, 0, 1]]);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(comp(ALPHA).decode().values(), &[5, 7, 6, 2, 1, 8, 3, 4]);
        assert_eq!(comp("0,0,0@4").decode().values(), &[1, 2, 3, 4]);
        assert_eq!(
            comp("2,5,4,1,0,2,1@8").decode().values(),
            &[3, 7, 6, 2, 1, 8, 5, 4]
        );
        assert_eq!(comp("@1").decode().values(), &[1]);
    }

    #[test]
    fn dual_examples() {
        let a = comp(ALPHA);
        assert_eq!(a.dual().parts(), &[3, 1, 1, 3, 3, 0, 1]);
        assert_eq!(comp("0,0,0@4").dual().parts(), &[3, 2, 1]);
        assert_eq!(a.dual().dual(), a);
    }

    #[test]
    fn k_alpha_examples() {
        assert_eq!(comp(ALPHA).k_alpha(1).unwrap(), 4);
        assert_eq!(comp("1@2").k_alpha(1).unwrap(), 2);
        let dual = comp("2,5,4,1,0,2,1@8").dual();
        assert_eq!(dual.parts(), &[5, 1, 1, 3, 3, 0, 0]);
        assert_eq!(dual.k_alpha(1).unwrap(), 2);
        assert_eq!(comp("3,1,1,3,3,0,0@8").k_alpha(1).unwrap(), 2);
        assert_eq!(comp(ALPHA).k_alpha(5), Err(Error::NoDescent(5)));
    }

    #[test]
    fn text_and_json_forms() {
        let a = comp(ALPHA);
        assert_eq!(a.to_string(), ALPHA);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"n":8,"parts":[4,5,4,1,0,2,0]}"#);
        assert_eq!(serde_json::from_str::<Composition>(&json).unwrap(), a);
        assert!(serde_json::from_str::<Composition>(r#"{"n":3,"parts":[3]}"#).is_err());
        assert!("4,5".parse::<Composition>().is_err());
        assert!("x@3".parse::<Composition>().is_err());
        assert_eq!(comp("@1").to_string(), "@1");
    }

    #[test]
    fn enumeration_sizes() {
        for (n, size) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120), (6, 720)] {
            assert_eq!(Composition::all(n).unwrap().len(), size);
        }
    }

    #[test]
    fn bounds_and_stabilization_exhaustive() {
        for n in 1..=6 {
            for a in Composition::all(n).unwrap() {
                let big_n = a.capital_n();
                assert!(big_n <= n);
                let m = a.c_matrix();
                for i in 1..n {
                    let ai = a.part(i) as i64;
                    for j in 1..=n + 1 {
                        let c = m.get(i, j) as i64;
                        let lower = 0.max(ai.min(ai + j as i64 - big_n as i64 - 1));
                        let upper = ai.min(j as i64 - i as i64 - 1).max(0);
                        assert!(lower <= c && c <= upper, "{a} ({i},{j})");
                        if j <= n {
                            assert!(m.get(i, j) <= m.get(i, j + 1));
                        }
                    }
                    assert_eq!(m.get(i, big_n + 1), a.part(i));
                }
                if !a.is_zero() {
                    assert!((1..n).any(|i| m.get(i, big_n) < a.part(i)));
                }
            }
        }
    }
}
