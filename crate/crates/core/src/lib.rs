//! Combinatorics of grid monomials attached to Schubert varieties in the
//! symplectic grassmannian.
//!
//! The library builds the bounded grids of an index set `v`, peels
//! monomials over the strictly lower grid into standard monomials, runs the
//! bounded insertion correspondence and its inverse, folds mirror-symmetric
//! monomials onto the bounded grid, and counts dominated monomials — the
//! tangent-cone Hilbert function. The `verify` module sweeps exhaustive
//! corpora to check that the peeling and insertion routes agree, that the
//! folding composition is a degree-preserving bijection, and that the two
//! degree-`m` cardinalities coincide.

pub mod error;
pub mod fold;
pub mod grid;
pub mod hilbert;
pub mod insertion;
pub mod json;
pub mod order;
pub mod peel;
pub mod verify;

pub use error::{Error, Result};
pub use fold::{eta, flatten_tableau, fold, speciality, unfold, SpecialityReport};
pub use grid::{
    block_decomposition, build_grids, chain_gt, depth_map, dominates_chain, dominates_monomial,
    dominates_monomial_with, monomials_of_size, monomials_up_to, multiset_coefficient,
    n_tilde_cells, s_action, s_action_parts, BlockDecomposition, Cell, DominationMode, Grids,
    Monomial, VChain,
};
pub use hilbert::{
    enumerate_anti_dominated_tableaux, enumerate_dominated_monomials,
    enumerate_dominated_tableaux, hilbert_function, HilbertTable,
};
pub use insertion::{
    brsk, brsk_inverse, lex_arrange, pair_from_standard_monomial, standard_monomial_from_pair,
    BiWord, NotchedTableauPair,
};
pub use order::{
    classify, epsilon, is_anti_dominated, is_symplectic_member, is_v_compatible, star,
    symplectic_index_sets, AdmissiblePair, HalfInt, IndexSet, StandardMonomial, StandardTableau,
    TableauFlags,
};
pub use peel::{domination_matches_leading_word, peel, peel_step, PeelStep, PeelTrace};
pub use verify::{AgreementStats, Mismatch, VerificationReport};
