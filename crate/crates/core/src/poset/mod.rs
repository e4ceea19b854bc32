//! The covering relation on `C_n`, its enumeration, the order closure and
//! Hasse diagrams.

mod cover;
mod hasse;
mod order;

pub(crate) use cover::insertion_bound;
pub use cover::{
    check_cover, hat_j, insertion, insertion_with_witness, is_insertable, is_removable,
    lower_covers, removing, removing_with_witness, tilde_j, upper_covers, CoverWitness,
};
pub use hasse::{HasseDiagram, HasseEdge, DEFAULT_MAX_DEGREE};
pub use order::{leq_a, DescentCache};
