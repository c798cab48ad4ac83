//! Exact combinatorics of stable and dual stable Grothendieck functions.
//!
//! The crate is organized bottom-up:
//!
//! * [`partition`] — integer partitions as Young diagrams: the containment
//!   lattice, conjugation, horizontal strips and their row coordinates.
//! * [`binom`] — binomial coefficients over all integers and the guarded
//!   telescoping identity behind the Pieri unit sums.
//! * [`poset`] — finite posets with Möbius functions, Möbius inversion,
//!   coatom inclusion–exclusion, and the horizontal-strip posets.
//! * [`tableau`] — semistandard, set-valued, and reverse-plane tableau
//!   families with exact generating functions.
//! * [`symfunc`] — degree-truncated symmetric functions over six bases
//!   with exact conversion, multiplication, Hall pairing, and the
//!   one-variable specialization.
//! * [`grothendieck`] — the `g`/`G` expansions, their Pieri rules in
//!   closed, inclusion–exclusion, and Möbius forms, sum bases, and the
//!   product identities connecting them.
//! * [`verify`] — deterministic self-check suites over configurable
//!   ranges, as used by the command-line `verify` subcommand.

pub mod binom;
mod error;
pub mod grothendieck;
pub mod partition;
pub mod poset;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use binom::{binomial, binomial_telescope};
pub use error::{Error, Result};
pub use grothendieck::{
    dual_grothendieck_schur, dual_grothendieck_sum, dual_sum_is_specialization, grothendieck_schur,
    grothendieck_sum, h1_times_grothendieck, mobius_pieri_coefficient, pieri_dual,
    pieri_dual_alternating, pieri_filter_support, pieri_grothendieck,
    pieri_grothendieck_alternating, pieri_ideal_support, pieri_unit_sum, rectangle_project,
    CoefficientMap,
};
pub use partition::{AddableRow, Capacity, Partition, SkewStats, StripCoordinates, StripMode};
pub use poset::{
    boolean_poset, coatom_meet_expansion, divisor_poset, mobius_inversion_holds,
    mobius_restricts_to_meet_closure, strip_poset, top_mobius_coefficients, FinitePoset,
    MobiusTable, StripBound, StripNode,
};
pub use symfunc::{
    alternating_elementary_series, complete_homogeneous_series, hall_pairing, kostka_number, Basis,
    Cutoff, SymFunc,
};
pub use tableau::{TableauFamily, TableauKind};
pub use verify::{run_all, Failure, SuiteResult};
