use std::collections::{HashMap, HashSet, VecDeque};

use crate::composition::Composition;
use crate::error::{Error, Result};

use super::cover::lower_covers;

/// Going down a cover never raises a prefix sum of parts, so a node whose
/// prefix sums fall below those of the target cannot lie above it.
fn dominates(node: &Composition, target: &Composition) -> bool {
    let mut acc_node = 0;
    let mut acc_target = 0;
    node.parts().iter().zip(target.parts()).all(|(a, b)| {
        acc_node += a;
        acc_target += b;
        acc_node >= acc_target
    })
}

/// Memoizes lower covers for repeated order queries.
#[derive(Debug, Default)]
pub struct DescentCache {
    covers: HashMap<Composition, Vec<Composition>>,
}

impl DescentCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn lower(&mut self, alpha: &Composition) -> &[Composition] {
        self.covers
            .entry(alpha.clone())
            .or_insert_with(|| lower_covers(alpha).into_iter().map(|(c, _)| c).collect())
    }

    /// `alpha <=_A beta`, by breadth-first descent from `beta`.
    pub fn leq(&mut self, alpha: &Composition, beta: &Composition) -> Result<bool> {
        if alpha.degree() != beta.degree() {
            return Err(Error::DegreeMismatch {
                left: alpha.degree(),
                right: beta.degree(),
            });
        }
        let floor = alpha.weight();
        if beta.weight() < floor || !dominates(beta, alpha) {
            return Ok(false);
        }
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([beta.clone()]);
        seen.insert(beta.clone());
        while let Some(node) = queue.pop_front() {
            if node == *alpha {
                return Ok(true);
            }
            if node.weight() == floor {
                continue;
            }
            let below = self.lower(&node).to_vec();
            for next in below {
                if dominates(&next, alpha) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(false)
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }
}

/// `alpha <=_A beta` in the transitive closure of the covering relation.
pub fn leq_a(alpha: &Composition, beta: &Composition) -> Result<bool> {
    DescentCache::new().leq(alpha, beta)
}
