//! Staircase compositions (Lehmer codes of permutations) ordered by an
//! intrinsic covering relation, with the Bruhat order of `S_n` as oracle.
//!
//! ```
//! use pcn_core::{check_cover, Composition, Permutation};
//!
//! let w: Permutation = "5,7,6,2,1,8,3,4".parse().unwrap();
//! let alpha = w.encode();
//! assert_eq!(alpha.to_string(), "4,5,4,1,0,2,0@8");
//! let lower: Composition = "2,5,4,1,0,2,1@8".parse().unwrap();
//! let witness = check_cover(&alpha, &lower).unwrap().unwrap();
//! assert_eq!((witness.i, witness.j), (1, 7));
//! ```

pub mod composition;
pub mod diagram;
pub mod error;
pub mod monk;
pub mod permutation;
pub mod poset;
pub mod verify;
pub mod words;

pub use composition::{CMatrix, Composition};
pub use diagram::{BoxDiagram, PathVertex, RenderOptions};
pub use error::{Error, Result};
pub use monk::MonkTerm;
pub use permutation::{Permutation, Transposition};
pub use poset::{
    check_cover, hat_j, insertion, is_insertable, is_removable, leq_a, lower_covers, removing,
    tilde_j, upper_covers, CoverWitness, DescentCache, HasseDiagram, HasseEdge,
};
pub use verify::{VerifyMode, VerifyReport};
pub use words::{Move, MoveKind, ReducedWord};
