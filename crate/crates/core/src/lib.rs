//! Gray codes for pattern-avoiding permutations.
//!
//! Three constructions live here: a distance-4 code for 231-avoiders (and
//! its three symmetric images), a distance-5 code for the Schröder
//! permutations obtained through a path bijection, and a distance-5 code
//! for any regular class driven by its succession function. The [`verify`]
//! module holds the brute-force oracles used to check them.

pub mod catalan231;
pub mod count;
pub mod error;
pub mod perm;
pub mod regular;
pub mod schroder;
pub mod verify;

pub use catalan231::{
    build_d_list, build_d_lists, build_pattern3_list, build_pattern3_list_for, DList, Pattern3,
};
pub use count::{sequence_term, CountFamily};
pub use error::{Error, Result};
pub use perm::{
    avoids_all, changed_positions, contains_pattern, hamming_distance, Pattern, Permutation,
    Transform,
};
pub use regular::{build_c_list, gen_avoid, CList, DirectedPermutation, Direction, SuccessionRule};
pub use schroder::{build_phi_list, build_s_paths, phi, SchroderPath};
pub use verify::{
    brute_force_avoiders, check_complete, check_gray, GrayReport, Oracle, OracleMatch,
};
