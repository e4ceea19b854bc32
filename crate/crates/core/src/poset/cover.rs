use serde::{Deserialize, Serialize};

use crate::composition::{c_entry_of, Composition};
use crate::error::{check_range, Error, Result};

/// Positions `(i, j)` and removal amount `z` of a covering pair `α ⋗ α'`:
/// `α'_i = α_i - z` and `α'_j = α_j + z - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoverWitness {
    pub i: usize,
    pub j: usize,
    pub z: usize,
}

fn check_same_degree(a: &Composition, b: &Composition) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

/// Tests whether `alpha` covers `lower`, returning the positions and amount.
///
/// The pair `(i, j)` is read off the part differences, then condition
/// `c_{i,j}(α) = c_{i,j}(α') = α'_i - α_j` is checked on that single pair.
pub fn check_cover(alpha: &Composition, lower: &Composition) -> Result<Option<CoverWitness>> {
    check_same_degree(alpha, lower)?;
    if alpha.weight() != lower.weight() + 1 {
        return Ok(None);
    }
    let diff: Vec<usize> = (1..alpha.degree())
        .filter(|&k| alpha.part(k) != lower.part(k))
        .collect();
    let (i, j, z) = match diff[..] {
        [i] => {
            if lower.part(i) + 1 != alpha.part(i) {
                return Ok(None);
            }
            (i, tilde_j_unchecked(alpha, i, 1), 1)
        }
        [i, j] => {
            let (ai, li) = (alpha.part(i), lower.part(i));
            if li >= ai {
                return Ok(None);
            }
            let z = ai - li;
            if lower.part(j) != alpha.part(j) + z - 1 {
                return Ok(None);
            }
            (i, j, z)
        }
        _ => return Ok(None),
    };
    let target = lower.part(i) as i64 - alpha.part(j) as i64;
    let upper_c = c_entry_of(alpha.parts(), i, j) as i64;
    let lower_c = c_entry_of(lower.parts(), i, j) as i64;
    if upper_c == target && lower_c == target {
        Ok(Some(CoverWitness { i, j, z }))
    } else {
        Ok(None)
    }
}

fn check_removal_amount(alpha: &Composition, i: usize, z: usize) -> Result<()> {
    check_range("row", i, 1, alpha.degree() - 1)?;
    let max = alpha.part(i);
    if z == 0 || z > max {
        return Err(Error::AmountOutOfRange { i, z, max });
    }
    Ok(())
}

fn check_insertion_amount(alpha: &Composition, i: usize, z: usize) -> Result<()> {
    check_range("row", i, 1, alpha.degree() - 1)?;
    let max = alpha.degree() - i - alpha.part(i);
    if z == 0 || z > max {
        return Err(Error::AmountOutOfRange { i, z, max });
    }
    Ok(())
}

/// Greatest `j > i` at which rows `i` of `c(parts)` and `c(other)` agree,
/// searching `j <= cols` where both rows have stabilized.
fn last_agreement(parts: &[usize], other: &[usize], i: usize, cols: usize) -> usize {
    let (top_a, top_b) = (parts[i - 1], other[i - 1]);
    let (mut ca, mut cb) = (0, 0);
    let mut last = i + 1;
    for col in i + 2..=cols {
        let prev = crate::composition::part_of(parts, col - 1);
        let prev_other = crate::composition::part_of(other, col - 1);
        if prev < top_a - ca {
            ca += 1;
        }
        if prev_other < top_b - cb {
            cb += 1;
        }
        if ca == cb {
            last = col;
        }
    }
    last
}

fn tilde_j_unchecked(alpha: &Composition, i: usize, z: usize) -> usize {
    let mut tilde = alpha.parts().to_vec();
    tilde[i - 1] -= z;
    last_agreement(alpha.parts(), &tilde, i, alpha.degree() + 1)
}

fn hat_j_unchecked(alpha: &Composition, i: usize, z: usize) -> usize {
    let mut hat = alpha.parts().to_vec();
    hat[i - 1] += z;
    last_agreement(alpha.parts(), &hat, i, alpha.degree() + 1)
}

/// `J̃_α(i,z)`: the last column where row `i` of `c(α)` agrees with that of
/// `α` with part `i` lowered by `z`.
pub fn tilde_j(alpha: &Composition, i: usize, z: usize) -> Result<usize> {
    check_removal_amount(alpha, i, z)?;
    Ok(tilde_j_unchecked(alpha, i, z))
}

/// `Ĵ_α(i,z)`: as [`tilde_j`] with part `i` raised by `z`.
///
/// Equals `J̃_{α*}(i,z)`; debug builds assert this.
pub fn hat_j(alpha: &Composition, i: usize, z: usize) -> Result<usize> {
    check_insertion_amount(alpha, i, z)?;
    let j = hat_j_unchecked(alpha, i, z);
    debug_assert_eq!(j, tilde_j_unchecked(&alpha.dual(), i, z));
    Ok(j)
}

fn removable_at(alpha: &Composition, i: usize, z: usize) -> Option<usize> {
    let j = tilde_j_unchecked(alpha, i, z);
    let lhs = c_entry_of(alpha.parts(), i, j) as i64;
    let rhs = alpha.part(i) as i64 - alpha.part(j) as i64 - z as i64;
    (lhs == rhs).then_some(j)
}

fn insertable_at(alpha: &Composition, i: usize, z: usize) -> Option<usize> {
    let j = hat_j_unchecked(alpha, i, z);
    let lhs = c_entry_of(alpha.parts(), i, j) as i64;
    let rhs = alpha.part(i) as i64 - alpha.part(j) as i64 + z as i64 - 1;
    (lhs == rhs).then_some(j)
}

pub fn is_removable(alpha: &Composition, i: usize, z: usize) -> Result<bool> {
    check_removal_amount(alpha, i, z)?;
    Ok(removable_at(alpha, i, z).is_some())
}

pub fn is_insertable(alpha: &Composition, i: usize, z: usize) -> Result<bool> {
    check_insertion_amount(alpha, i, z)?;
    Ok(insertable_at(alpha, i, z).is_some())
}

fn shifted(alpha: &Composition, i: usize, new_i: usize, j: usize, new_j: usize) -> Composition {
    let mut parts = alpha.parts().to_vec();
    parts[i - 1] = new_i;
    if j < alpha.degree() {
        parts[j - 1] = new_j;
    } else {
        debug_assert_eq!(new_j, 0);
    }
    Composition::new(parts, alpha.degree()).expect("covers stay inside the staircase")
}

/// The `(i,z)`-removing of `α` together with its witness.
pub fn removing_with_witness(
    alpha: &Composition,
    i: usize,
    z: usize,
) -> Result<(Composition, CoverWitness)> {
    check_removal_amount(alpha, i, z)?;
    let j = removable_at(alpha, i, z).ok_or(Error::NotRemovable { i, z })?;
    let lower = shifted(alpha, i, alpha.part(i) - z, j, alpha.part(j) + z - 1);
    Ok((lower, CoverWitness { i, j, z }))
}

/// The unique `α'` covered by `α` with `α'_i = α_i - z`.
pub fn removing(alpha: &Composition, i: usize, z: usize) -> Result<Composition> {
    removing_with_witness(alpha, i, z).map(|(c, _)| c)
}

/// The `(i,z)`-insertion of `α` together with the witness of `α'' ⋗ α`.
pub fn insertion_with_witness(
    alpha: &Composition,
    i: usize,
    z: usize,
) -> Result<(Composition, CoverWitness)> {
    check_insertion_amount(alpha, i, z)?;
    let j = insertable_at(alpha, i, z).ok_or(Error::NotInsertable { i, z })?;
    let upper = shifted(alpha, i, alpha.part(i) + z, j, alpha.part(j) + 1 - z);
    Ok((upper, CoverWitness { i, j, z }))
}

/// The unique `α''` covering `α` with `α''_i = α_i + z`.
pub fn insertion(alpha: &Composition, i: usize, z: usize) -> Result<Composition> {
    insertion_with_witness(alpha, i, z).map(|(c, _)| c)
}

/// Largest removal amount at row `i` that can possibly be removable:
/// `α_i - α_{k_α(i)}`. Zero when `α_i = 0`.
pub(crate) fn removal_bound(alpha: &Composition, i: usize) -> usize {
    match alpha.k_alpha(i) {
        Ok(k) => alpha.part(i) - alpha.part(k),
        Err(_) => 0,
    }
}

/// Largest insertion amount at row `i` that can possibly be insertable.
pub(crate) fn insertion_bound(alpha: &Composition, i: usize) -> usize {
    let room = alpha.degree() - i - alpha.part(i);
    if room == 0 {
        return 0;
    }
    let k = alpha
        .dual()
        .k_alpha(i)
        .expect("room > 0 means the dual part is nonzero");
    (alpha.part(k) + k - i - alpha.part(i)).min(room)
}

/// All compositions covered by `α`, ordered by `(i, z)`.
pub fn lower_covers(alpha: &Composition) -> Vec<(Composition, CoverWitness)> {
    let mut out = Vec::new();
    for i in 1..alpha.degree() {
        for z in 1..=removal_bound(alpha, i) {
            if let Some(j) = removable_at(alpha, i, z) {
                let lower = shifted(alpha, i, alpha.part(i) - z, j, alpha.part(j) + z - 1);
                out.push((lower, CoverWitness { i, j, z }));
            }
        }
    }
    out
}

/// All compositions covering `α`, ordered by `(i, z)`.
pub fn upper_covers(alpha: &Composition) -> Vec<(Composition, CoverWitness)> {
    let mut out = Vec::new();
    for i in 1..alpha.degree() {
        for z in 1..=insertion_bound(alpha, i) {
            if let Some(j) = insertable_at(alpha, i, z) {
                let upper = shifted(alpha, i, alpha.part(i) + z, j, alpha.part(j) + 1 - z);
                out.push((upper, CoverWitness { i, j, z }));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    const ALPHA: &str = "4,5,4,1,0,2,0@8";
    const ALPHA_LOW: &str = "2,5,4,1,0,2,1@8";

    #[test]
    fn check_cover_examples() {
        let a = comp(ALPHA);
        assert_eq!(
            check_cover(&a, &comp(ALPHA_LOW)).unwrap(),
            Some(CoverWitness { i: 1, j: 7, z: 2 })
        );
        assert_eq!(
            check_cover(&a, &comp("4,5,3,1,0,2,0@8")).unwrap(),
            Some(CoverWitness { i: 3, j: 8, z: 1 })
        );
        assert_eq!(check_cover(&a, &a).unwrap(), None);
        assert!(check_cover(&a, &comp("0,0@3")).is_err());
        assert_eq!(
            check_cover(&comp("2,1@3"), &comp("2,0@3")).unwrap(),
            Some(CoverWitness { i: 2, j: 3, z: 1 })
        );
        // part pattern fits, but c_{1,3} = 1 while α'_1 - α_3 = 0
        assert_eq!(
            check_cover(&comp("2,0,0@4"), &comp("0,0,1@4")).unwrap(),
            None
        );
    }

    #[test]
    fn tilde_j_examples() {
        let a = comp(ALPHA);
        assert_eq!(tilde_j(&a, 1, 2).unwrap(), 7);
        assert_eq!(tilde_j(&a, 1, 3).unwrap(), 4);
        assert_eq!(tilde_j(&comp("1@2"), 1, 1).unwrap(), 2);
        assert!(tilde_j(&a, 1, 5).is_err());
        assert!(tilde_j(&a, 1, 0).is_err());
    }

    #[test]
    fn removable_examples() {
        let a = comp(ALPHA);
        assert!(is_removable(&a, 1, 1).unwrap());
        assert!(is_removable(&a, 1, 2).unwrap());
        assert!(is_removable(&a, 1, 3).unwrap());
        assert!(!is_removable(&a, 1, 4).unwrap());
        assert!(matches!(
            is_removable(&a, 1, 5),
            Err(Error::AmountOutOfRange { .. })
        ));
        assert!(matches!(
            is_removable(&a, 5, 1),
            Err(Error::AmountOutOfRange { .. })
        ));
    }

    #[test]
    fn removing_examples() {
        let a = comp(ALPHA);
        assert_eq!(removing(&a, 1, 1).unwrap(), comp("3,5,4,1,0,2,0@8"));
        assert_eq!(removing(&a, 1, 2).unwrap(), comp(ALPHA_LOW));
        assert_eq!(removing(&a, 1, 3).unwrap(), comp("1,5,4,3,0,2,0@8"));
        assert_eq!(removing(&a, 1, 4), Err(Error::NotRemovable { i: 1, z: 4 }));
        for z in 1..=3 {
            let (lower, wit) = removing_with_witness(&a, 1, z).unwrap();
            assert_eq!(check_cover(&a, &lower).unwrap(), Some(wit));
        }
    }

    #[test]
    fn hat_j_examples() {
        let a = comp(ALPHA_LOW);
        assert_eq!(hat_j(&a, 1, 2).unwrap(), 7);
        assert_eq!(hat_j(&a, 1, 3).unwrap(), 3);
        assert_eq!(hat_j(&a, 1, 4).unwrap(), 2);
        assert!(hat_j(&a, 1, 6).is_err());
    }

    #[test]
    fn insertable_examples() {
        let a = comp(ALPHA_LOW);
        for z in 1..=4 {
            assert!(is_insertable(&a, 1, z).unwrap(), "z = {z}");
        }
        assert!(!is_insertable(&a, 1, 5).unwrap());
        assert!(is_insertable(&a, 1, 6).is_err());
    }

    #[test]
    fn insertion_examples() {
        let a = comp(ALPHA_LOW);
        assert_eq!(insertion(&a, 1, 1).unwrap(), comp("3,5,4,1,0,2,1@8"));
        assert_eq!(insertion(&a, 1, 2).unwrap(), comp(ALPHA));
        assert_eq!(insertion(&a, 1, 3).unwrap(), comp("5,5,2,1,0,2,1@8"));
        assert_eq!(insertion(&a, 1, 4).unwrap(), comp("6,2,4,1,0,2,1@8"));
        assert_eq!(
            insertion(&a, 1, 5),
            Err(Error::NotInsertable { i: 1, z: 5 })
        );
        for z in 1..=4 {
            let (upper, wit) = insertion_with_witness(&a, 1, z).unwrap();
            assert_eq!(check_cover(&upper, &a).unwrap(), Some(wit));
        }
    }

    #[test]
    fn lower_cover_examples() {
        assert!(lower_covers(&Composition::zero(5).unwrap()).is_empty());
        let a = comp(ALPHA);
        let row1: Vec<_> = lower_covers(&a)
            .into_iter()
            .filter(|(_, w)| w.i == 1)
            .map(|(c, _)| c)
            .collect();
        assert_eq!(
            row1,
            vec![
                comp("3,5,4,1,0,2,0@8"),
                comp(ALPHA_LOW),
                comp("1,5,4,3,0,2,0@8")
            ]
        );
        assert_eq!(lower_covers(&a).len(), 10);
    }

    #[test]
    fn upper_cover_examples() {
        assert!(upper_covers(&Composition::staircase(5).unwrap()).is_empty());
        let a = comp(ALPHA_LOW);
        let row1: Vec<_> = upper_covers(&a)
            .into_iter()
            .filter(|(_, w)| w.i == 1)
            .map(|(c, w)| (c, w.z))
            .collect();
        assert_eq!(
            row1,
            vec![
                (comp("3,5,4,1,0,2,1@8"), 1),
                (comp(ALPHA), 2),
                (comp("5,5,2,1,0,2,1@8"), 3),
                (comp("6,2,4,1,0,2,1@8"), 4),
            ]
        );
        let up = upper_covers(&Composition::zero(3).unwrap());
        let got: Vec<_> = up
            .iter()
            .map(|(c, w)| (c.parts().to_vec(), w.i, w.z))
            .collect();
        assert_eq!(got, vec![(vec![1, 0], 1, 1), (vec![0, 1], 2, 1)]);
    }

    #[test]
    fn single_decrements_are_covers() {
        for n in 2..=6 {
            for a in Composition::all(n).unwrap() {
                for i in (1..n).filter(|&i| a.part(i) > 0) {
                    let mut parts = a.parts().to_vec();
                    parts[i - 1] -= 1;
                    let lower = Composition::new(parts, n).unwrap();
                    let wit = check_cover(&a, &lower)
                        .unwrap()
                        .expect("single decrement is a cover");
                    assert_eq!((wit.i, wit.z), (i, 1));
                    assert_eq!(wit.j, tilde_j(&a, i, 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn removal_insertion_inverse_and_dual_exhaustive() {
        for n in 2..=6 {
            for a in Composition::all(n).unwrap() {
                let dual = a.dual();
                for i in 1..n {
                    for z in 1..=a.part(i) {
                        if let Ok((lower, wit)) = removing_with_witness(&a, i, z) {
                            assert_eq!(insertion(&lower, i, z).unwrap(), a);
                            assert_eq!(hat_j(&lower, i, z).unwrap(), wit.j);
                        }
                    }
                    for z in 1..=n - i - a.part(i) {
                        assert_eq!(
                            is_insertable(&a, i, z).unwrap(),
                            is_removable(&dual, i, z).unwrap()
                        );
                        assert_eq!(hat_j(&a, i, z).unwrap(), tilde_j(&dual, i, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn j_monotone_in_z() {
        for n in 2..=6 {
            for a in Composition::all(n).unwrap() {
                for i in 1..n {
                    let rem: Vec<_> = (1..=a.part(i))
                        .filter_map(|z| removing_with_witness(&a, i, z).ok().map(|(_, w)| w.j))
                        .collect();
                    assert!(rem.windows(2).all(|p| p[0] > p[1]), "{a} row {i}: {rem:?}");
                    let ins: Vec<_> = (1..=n - i - a.part(i))
                        .filter_map(|z| insertion_with_witness(&a, i, z).ok().map(|(_, w)| w.j))
                        .collect();
                    assert!(ins.windows(2).all(|p| p[0] > p[1]), "{a} row {i}: {ins:?}");
                }
            }
        }
    }

    #[test]
    fn pruned_enumeration_matches_unpruned() {
        for n in 2..=6 {
            for a in Composition::all(n).unwrap() {
                let mut full = Vec::new();
                for i in 1..n {
                    for z in 1..=a.part(i) {
                        if let Ok(x) = removing_with_witness(&a, i, z) {
                            full.push(x);
                        }
                    }
                }
                assert_eq!(lower_covers(&a), full);
                let mut full_up = Vec::new();
                for i in 1..n {
                    for z in 1..=n - i - a.part(i) {
                        if let Ok(x) = insertion_with_witness(&a, i, z) {
                            full_up.push(x);
                        }
                    }
                }
                assert_eq!(upper_covers(&a), full_up);
            }
        }
    }

    #[test]
    fn upper_covers_are_duals_of_lower_covers() {
        for n in 2..=6 {
            for a in Composition::all(n).unwrap() {
                let mut up: Vec<_> = upper_covers(&a).into_iter().map(|(c, _)| c).collect();
                let mut via: Vec<_> = lower_covers(&a.dual())
                    .into_iter()
                    .map(|(c, _)| c.dual())
                    .collect();
                up.sort();
                via.sort();
                assert_eq!(up, via, "{a}");
            }
        }
    }
}
