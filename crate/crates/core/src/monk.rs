//! Monk's rule index set: the covers `w·(i,j)` of `w` with `i <= r < j`,
//! found by insertions on the code of `w`.

use serde::Serialize;

use crate::composition::Composition;
use crate::error::{check_range, Result};
use crate::poset::{hat_j, insertion, insertion_bound, is_insertable, is_removable, tilde_j};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonkTerm {
    pub i: usize,
    pub j: usize,
    /// Code of `w·(i,j)`.
    pub target: Composition,
}

/// Monk terms of `α` inside `C_n`, `n = α.degree()`, ordered by `(i, z)`.
///
/// For a fixed row, `Ĵ(i,z)` does not increase with `z`, so the scan stops
/// at the first insertable amount whose `Ĵ` falls to `r` or below.
pub fn monk_terms_in(alpha: &Composition, r: usize) -> Result<Vec<MonkTerm>> {
    check_range("r", r, 1, alpha.degree().saturating_sub(1))?;
    let mut out = Vec::new();
    for i in 1..=r {
        for z in 1..=insertion_bound(alpha, i) {
            if !is_insertable(alpha, i, z)? {
                continue;
            }
            let j = hat_j(alpha, i, z)?;
            if j <= r {
                break;
            }
            out.push(MonkTerm {
                i,
                j,
                target: insertion(alpha, i, z)?,
            });
        }
    }
    Ok(out)
}

/// Monk terms of `α` viewed in `C_∞`.
///
/// `α` is embedded into the smallest `C_m` holding every term: `m = r + 1`
/// when `r >= n`, `m = n + 1` when some row `i <= r` is full (`α_i = n - i`,
/// so `w·(i, n+1)` is a term), and `m = n` otherwise. Returns `m` together
/// with the terms.
pub fn monk_terms(alpha: &Composition, r: usize) -> Result<(usize, Vec<MonkTerm>)> {
    check_range("r", r, 1, usize::MAX)?;
    let n = alpha.degree();
    let m = if r >= n {
        r + 1
    } else if (1..=r).any(|i| alpha.part(i) == n - i) {
        n + 1
    } else {
        n
    };
    let terms = monk_terms_in(&alpha.embed(m)?, r)?;
    Ok((m, terms))
}

/// Number of Monk terms computed through removals on the dual instead.
pub fn monk_count_via_dual(alpha: &Composition, r: usize) -> Result<usize> {
    check_range("r", r, 1, alpha.degree().saturating_sub(1))?;
    let dual = alpha.dual();
    let mut count = 0;
    for i in 1..=r {
        for z in 1..=dual.part(i) {
            if is_removable(&dual, i, z)? && tilde_j(&dual, i, z)? > r {
                count += 1;
            }
        }
    }
    Ok(count)
}
