//! Group actions on coordinates and spaces of forms: generalized
//! permutation actions, weight decomposition under a pair of order-7
//! scalings, C3 orbits, and the regular-representation constraint search.

pub mod action;
pub mod lefschetz;
pub mod symbols;
pub mod weights;

pub use action::{evaluate_action_word, ActionGen};
pub use lefschetz::{candidate_labels, lefschetz_admissible_a, regular_rep_check, RepKind, RepLabel};
pub use symbols::{check_action_relations, symbol_actions, symbol_names, symbol_weights, WeightPair};
pub use weights::{c3_orbit, weight_decompose, weight_of_form, weight_pair_of_form};
