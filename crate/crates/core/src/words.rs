//! Words in the simple transpositions `s_1, …, s_{n-1}`, the row-reading of a
//! staircase diagram, and the explicit move sequence that turns a deleted
//! row-reading into the row-reading of a covered composition.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::composition::{c_entry_of, Composition};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::poset::{removing_with_witness, CoverWitness};

/// A word in the generators `s_1, …, s_{n-1}` of `S_n`, stored as indices.
///
/// The name reflects how words are produced here; whether a given word is
/// actually reduced is answered by [`ReducedWord::is_reduced`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    /// `s_a s_b -> s_b s_a` for `|a - b| >= 2`.
    Commutation,
    /// `s_a s_b s_a -> s_b s_a s_b` for `|a - b| = 1`.
    Braid,
}

impl MoveKind {
    fn name(self) -> &'static str {
        match self {
            MoveKind::Commutation => "commutation",
            MoveKind::Braid => "braid",
        }
    }
}

/// A move applied at a 1-based letter position, valid at application time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub position: usize,
    pub kind: MoveKind,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind.name(), self.position)
    }
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        if let Some(&bad) = letters.iter().find(|&&s| s == 0 || s >= n) {
            return Err(Error::LetterOutOfRange { letter: bad, n });
        }
        Ok(ReducedWord { n, letters })
    }

    /// Parses space-separated generator indices.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == '·')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.trim_start_matches('s')
                    .parse::<usize>()
                    .map_err(|_| Error::Parse {
                        what: "word",
                        input: s.to_string(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        ReducedWord::new(letters, n)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The identity multiplied on the right by each letter in turn.
    pub fn evaluate(&self) -> Permutation {
        let mut values: Vec<usize> = (1..=self.n).collect();
        for &s in &self.letters {
            values.swap(s - 1, s);
        }
        Permutation::from_values_unchecked(values)
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.len() == self.evaluate().length()
    }

    /// Removes the letter at 1-based position `at`.
    pub fn delete_letter(&self, at: usize) -> Result<ReducedWord> {
        crate::error::check_range("letter position", at, 1, self.len())?;
        let mut letters = self.letters.clone();
        letters.remove(at - 1);
        Ok(ReducedWord { n: self.n, letters })
    }

    /// Rewrites the letters starting at 1-based position `at` by one move.
    pub fn apply_move(&self, at: usize, kind: MoveKind) -> Result<ReducedWord> {
        let mismatch = Error::PatternMismatch {
            kind: kind.name(),
            position: at,
        };
        let p = at.checked_sub(1).ok_or(mismatch.clone())?;
        let mut letters = self.letters.clone();
        match kind {
            MoveKind::Commutation => match letters.get(p..p + 2) {
                Some(&[a, b]) if a.abs_diff(b) >= 2 => letters.swap(p, p + 1),
                _ => return Err(mismatch),
            },
            MoveKind::Braid => match letters.get(p..p + 3) {
                Some(&[a, b, c]) if a == c && a.abs_diff(b) == 1 => {
                    letters[p..p + 3].copy_from_slice(&[b, a, b]);
                }
                _ => return Err(mismatch),
            },
        }
        Ok(ReducedWord { n: self.n, letters })
    }

    /// Applies `schedule` in order.
    pub fn replay(&self, schedule: &[Move]) -> Result<ReducedWord> {
        schedule
            .iter()
            .try_fold(self.clone(), |w, m| w.apply_move(m.position, m.kind))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters.iter().join(" "))
    }
}

/// Row `i` of the row-reading: `s_{α_i+i-1} ⋯ s_{i+1} s_i`.
fn row_letters(alpha: &Composition, i: usize) -> impl Iterator<Item = usize> {
    (i..alpha.part(i) + i).rev()
}

/// Reads each diagram row right to left, rows bottom to top.
pub fn row_reading(alpha: &Composition) -> ReducedWord {
    let letters = (1..alpha.degree())
        .flat_map(|i| row_letters(alpha, i))
        .collect();
    ReducedWord {
        n: alpha.degree(),
        letters,
    }
}

/// Row-reading with rows separated by `·`; empty rows are skipped.
pub fn row_grouped(alpha: &Composition) -> String {
    (1..alpha.degree())
        .filter(|&i| alpha.part(i) > 0)
        .map(|i| row_letters(alpha, i).join(" "))
        .join(" · ")
}

/// Position of the letter of `row_reading(α)` whose deletion yields the
/// covered element described by `witness`.
pub fn cover_index(alpha: &Composition, witness: &CoverWitness) -> Result<usize> {
    validate_witness(alpha, witness)?;
    let prefix: usize = (1..=witness.i).map(|k| alpha.part(k)).sum();
    Ok(prefix - (alpha.part(witness.i) - witness.z))
}

fn validate_witness(alpha: &Composition, witness: &CoverWitness) -> Result<Composition> {
    let CoverWitness { i, j, z } = *witness;
    let invalid = Error::InvalidWitness { i, j, z };
    match removing_with_witness(alpha, i, z) {
        Ok((lower, found)) if found.j == j => Ok(lower),
        _ => Err(invalid),
    }
}

/// Moves turning `delete_letter(row_reading(α), cover_index(α, w))` into
/// `row_reading(α')`.
///
/// The stray letters left in row `i` are carried up one at a time, the one
/// nearest the deleted letter first. Through each row `k` in `(i, j)` a stray
/// either commutes past the whole row (short rows) or commutes to the braid
/// site, braids once, and commutes on. Every stray ends just before row `j`.
pub fn move_schedule(alpha: &Composition, witness: &CoverWitness) -> Result<Vec<Move>> {
    let lower = validate_witness(alpha, witness)?;
    let CoverWitness { i, j, z } = *witness;
    let mut schedule = Vec::new();
    if z == 1 {
        return Ok(schedule);
    }
    let invalid = Error::InvalidWitness { i, j, z };
    let (top, kept) = (alpha.part(i), lower.part(i));
    let prefix: usize = (1..i).map(|k| alpha.part(k)).sum();
    let mut word = row_reading(alpha).delete_letter(cover_index(alpha, witness)?)?;

    let mut push = |word: &mut ReducedWord, p: usize, kind: MoveKind| -> Result<()> {
        *word = word.apply_move(p, kind)?;
        schedule.push(Move { position: p, kind });
        Ok(())
    };

    for m in kept + 1..top {
        // stray `s_{m+i}` sits just left of the kept part of row i
        let mut p = prefix + (top - 1 - m) + 1;
        debug_assert_eq!(word.letters()[p - 1], m + i);
        for _ in 0..kept {
            push(&mut word, p, MoveKind::Commutation)?;
            p += 1;
        }
        for k in i + 1..j {
            let c = c_entry_of(alpha.parts(), i, k);
            let row = alpha.part(k);
            let x = m + k - 1 - c;
            debug_assert_eq!(word.letters()[p - 1], x);
            if row + c < kept {
                for _ in 0..row {
                    push(&mut word, p, MoveKind::Commutation)?;
                    p += 1;
                }
            } else if row + c >= top {
                for _ in 0..row + k - 2 - x {
                    push(&mut word, p, MoveKind::Commutation)?;
                    p += 1;
                }
                push(&mut word, p, MoveKind::Braid)?;
                p += 2;
                for _ in 0..x - k {
                    push(&mut word, p, MoveKind::Commutation)?;
                    p += 1;
                }
            } else {
                return Err(invalid);
            }
        }
    }
    debug_assert_eq!(word, row_reading(&lower));
    Ok(schedule)
}
