//! Finite posets as Kripke frames: order utilities, upset Heyting algebras,
//! validity checking, p-morphisms, up-reduction search and frame
//! classification for bounded depth and the polytope logic.

mod algebra;
mod classify;
mod morphism;
mod poset;
mod search;
mod spectrum;

pub use algebra::{frame_validates, up_algebra, UpsetAlgebra, Validity};
pub use classify::{
    builtin_frame, satisfies_bd, satisfies_pl, validates_jankov_fine, PlCheck, PlClause,
    PlViolation,
};
pub use morphism::{is_p_morphism, PMorphismViolation, PosetMap};
pub use poset::Poset;
pub use search::{find_up_reduction, UpReduction};
pub use spectrum::{canonical_embedding, is_order_isomorphism, prime_filter_spectrum, Spectrum};

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FrameError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("element names must be nonempty")]
    EmptyName,
    #[error("order pairs contain a cycle through `{0}`")]
    Cycle(String),
    #[error("the poset is empty")]
    Empty,
    #[error("element index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("upset carrier exceeds the cap of {cap} sets; raise the cap to proceed")]
    CarrierCapExceeded { cap: usize },
    #[error("the frame has no minimum element")]
    NotRooted,
    #[error("unknown builtin frame `{0}`")]
    UnknownBuiltin(String),
    #[error("map assigns {got} values to {want} elements")]
    NotTotal { want: usize, got: usize },
}
