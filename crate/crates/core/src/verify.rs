//! Batch cross-checks between the composition side and the permutation side.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::composition::Composition;
use crate::diagram::geometric_removable;
use crate::error::{Error, Result};
use crate::monk::monk_terms_in;
use crate::permutation::{bruhat_cover_oracle, Permutation, Transposition};
use crate::poset::{check_cover, removing, DescentCache, DEFAULT_MAX_DEGREE};

/// Seed used by the random engine when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const DEFAULT_SAMPLES: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every pair `(w, w')` with `ℓ(w) = ℓ(w') + 1`: Bruhat cover versus cover
    /// of codes, positions included.
    Theorem,
    /// Monk terms versus brute force over transpositions, every `r`.
    Monk,
    /// Ladder-move removal versus algebraic removal, every `(α, i, z)`.
    Geometric,
    /// Random componentwise-comparable pairs must be comparable in the poset.
    Product { seed: u64, samples: usize },
}

impl VerifyMode {
    pub fn name(&self) -> &'static str {
        match self {
            VerifyMode::Theorem => "theorem",
            VerifyMode::Monk => "monk",
            VerifyMode::Geometric => "geometric",
            VerifyMode::Product { .. } => "product",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub left: String,
    pub right: String,
    pub oracle: String,
    pub poset: String,
}

/// Outcome of a verification run. `elapsed` is left out of the JSON form so
/// reports are byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub mode: &'static str,
    pub n: usize,
    pub pairs_checked: u64,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn verify(n: usize, mode: VerifyMode) -> Result<VerifyReport> {
    verify_with_cap(n, mode, DEFAULT_MAX_DEGREE)
}

pub fn verify_with_cap(n: usize, mode: VerifyMode, cap: usize) -> Result<VerifyReport> {
    if n > cap {
        return Err(Error::ResourceCap { n, cap });
    }
    if n == 0 {
        return Err(Error::InvalidDegree);
    }
    let start = Instant::now();
    let (pairs_checked, mut mismatches) = match mode {
        VerifyMode::Theorem => theorem(n)?,
        VerifyMode::Monk => monk(n)?,
        VerifyMode::Geometric => geometric(n)?,
        VerifyMode::Product { seed, samples } => product(n, seed, samples)?,
    };
    mismatches.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));
    Ok(VerifyReport {
        mode: mode.name(),
        n,
        pairs_checked,
        mismatches,
        elapsed: start.elapsed(),
    })
}

type Outcome = (u64, Vec<Mismatch>);

fn merge(parts: Vec<Result<Outcome>>) -> Result<Outcome> {
    let mut total = 0;
    let mut all = Vec::new();
    for part in parts {
        let (count, found) = part?;
        total += count;
        all.extend(found);
    }
    Ok((total, all))
}

fn show_transposition(t: Option<Transposition>) -> String {
    t.map_or_else(|| "none".into(), |t| t.to_string())
}

fn theorem(n: usize) -> Result<Outcome> {
    let perms = Permutation::all(n)?;
    let top = n * (n - 1) / 2;
    let mut levels: Vec<Vec<(Permutation, Composition)>> = vec![Vec::new(); top + 1];
    for w in perms {
        let code = w.encode();
        levels[w.length()].push((w, code));
    }
    let uppers: Vec<(usize, &(Permutation, Composition))> = levels
        .iter()
        .enumerate()
        .skip(1)
        .flat_map(|(len, level)| level.iter().map(move |x| (len, x)))
        .collect();
    let parts = uppers
        .par_iter()
        .map(|&(len, (w, alpha))| {
            let mut found = Vec::new();
            for (v, beta) in &levels[len - 1] {
                let oracle = bruhat_cover_oracle(w, v)?;
                let poset = check_cover(alpha, beta)?.map(|c| Transposition { i: c.i, j: c.j });
                if oracle != poset {
                    found.push(Mismatch {
                        left: w.to_string(),
                        right: v.to_string(),
                        oracle: show_transposition(oracle),
                        poset: show_transposition(poset),
                    });
                }
            }
            Ok((levels[len - 1].len() as u64, found))
        })
        .collect();
    merge(parts)
}

fn monk(n: usize) -> Result<Outcome> {
    if n < 2 {
        return Ok((0, Vec::new()));
    }
    let parts = Permutation::all(n)?
        .par_iter()
        .map(|w| {
            let alpha = w.encode();
            let len = w.length();
            let mut found = Vec::new();
            let mut count = 0;
            for r in 1..n {
                let mut expected = Vec::new();
                for i in 1..=r {
                    for j in r + 1..=n {
                        let v = w.multiply_right_transposition(Transposition { i, j })?;
                        if v.length() == len + 1 {
                            expected.push((i, j, v.encode().to_string()));
                        }
                    }
                }
                let mut actual: Vec<_> = monk_terms_in(&alpha, r)?
                    .into_iter()
                    .map(|t| (t.i, t.j, t.target.to_string()))
                    .collect();
                actual.sort();
                expected.sort();
                count += 1;
                if actual != expected {
                    let show = |v: &[(usize, usize, String)]| {
                        v.iter()
                            .map(|(i, j, _)| format!("({i},{j})"))
                            .collect::<Vec<_>>()
                            .join(" ")
                    };
                    found.push(Mismatch {
                        left: w.to_string(),
                        right: format!("r={r}"),
                        oracle: show(&expected),
                        poset: show(&actual),
                    });
                }
            }
            Ok((count, found))
        })
        .collect();
    merge(parts)
}

fn geometric(n: usize) -> Result<Outcome> {
    let parts = Composition::all(n)?
        .par_iter()
        .map(|alpha| {
            let mut found = Vec::new();
            let mut count = 0;
            for i in 1..n {
                for z in 1..=alpha.part(i) {
                    count += 1;
                    let geo = geometric_removable(alpha, i, z)?;
                    let alg = removing(alpha, i, z).ok();
                    if geo != alg {
                        let show = |c: Option<Composition>| {
                            c.map_or_else(|| "none".into(), |c| c.to_string())
                        };
                        found.push(Mismatch {
                            left: alpha.to_string(),
                            right: format!("({i},{z})"),
                            oracle: show(alg),
                            poset: show(geo),
                        });
                    }
                }
            }
            Ok((count, found))
        })
        .collect();
    merge(parts)
}

/// Draws `β` uniformly from `C_n`, then `α <= β` componentwise.
pub fn random_comparable_pair<R: Rng>(n: usize, rng: &mut R) -> Result<(Composition, Composition)> {
    let beta: Vec<usize> = (1..n).map(|i| rng.gen_range(0..=n - i)).collect();
    let alpha: Vec<usize> = beta.iter().map(|&b| rng.gen_range(0..=b)).collect();
    Ok((Composition::new(alpha, n)?, Composition::new(beta, n)?))
}

fn product(n: usize, seed: u64, samples: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<_> = (0..samples)
        .map(|_| random_comparable_pair(n, &mut rng))
        .collect::<Result<_>>()?;
    let mut cache = DescentCache::new();
    let mut found = Vec::new();
    for (alpha, beta) in &pairs {
        if !cache.leq(alpha, beta)? {
            found.push(Mismatch {
                left: alpha.to_string(),
                right: beta.to_string(),
                oracle: "leq".into(),
                poset: "incomparable".into(),
            });
        }
    }
    Ok((pairs.len() as u64, found))
}
