//! Generating-tree Gray codes for regular pattern classes.
//!
//! A class is regular when the number of active sites of a child depends
//! only on its parent's count `k` and the site `i` it was inserted into.
//! The succession function `chi(i, k)` then drives both a natural-order
//! recursive generator and a Gray-ordered one built from directed nodes.

mod rules;
mod tree;

pub use rules::{catalog, catalog_with_params, lookup, PatternClass, SuccessionRule};
pub use tree::{
    build_c_list, class_size, gen_avoid, gen_avoid_list, gen_gray, insert_at_site, l_sequence,
    successors, CList, DirectedPermutation, Direction, GenStats,
};
