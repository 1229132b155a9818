//! Finite Kripke frames, the intermediate logic of convex polytopes, and
//! exact-rational geometric realizations.
//!
//! The crate covers a pipeline in four stages:
//!
//! * [`formula`] — intuitionistic propositional formulas and their evaluation
//!   in finite Heyting algebras;
//! * [`frames`] — finite posets as frames: upset algebras, validity,
//!   p-morphisms, up-reduction search, and the structural classification of
//!   frames against bounded depth and the polytope logic;
//! * [`reduction`] — sawed trees, plane drawings, and the reduction of any
//!   rooted frame of the polytope logic to a sawed tree along a surjective
//!   p-morphism;
//! * [`geometry`] and [`realization`] — exact rational simplices, complexes
//!   and linear feasibility, used to realize sawed trees as convex polytopes
//!   and to verify that the realization map is an open surjective polyhedral
//!   map in its combinatorial form.
//!
//! The `polylogic` binary exposes the pipeline on the command line; the
//! `book/` directory of the repository walks through the concepts with
//! runnable examples (kept compiling by this crate's doc-tests).

pub mod bits;
pub mod config;
pub mod formula;
pub mod frames;
