//! Exact-arithmetic combinatorics of stratification index sets for
//! symplectic and unitary similitude groups: permissible extended alcoves,
//! Iwahori-Matsumoto lengths, Bruhat closures, p-ranks per stratum, slope
//! vectors of Frobenius tuples, density of the ordinary locus and the
//! dimension of the p-rank 0 locus.
//!
//! Everything is integer or rational arithmetic; every value is immutable
//! after construction and every operation is a pure function, so the whole
//! API is safe to drive from parallel workers.

pub mod alcove;
pub mod bruhat;
pub mod cli;
pub mod error;
pub mod prank;
pub mod reports;
pub mod weyl;

pub use alcove::{
    alcove_of, enumerate_perm, gu_alcove_duality, is_permissible, is_permissible_oracle,
    lattice_image, standard_alcove, verschiebung_to_frobenius, AlcoveChain, MonomialLattice,
    PermDatum, Window,
};
pub use bruhat::{
    admissible_set, bruhat_leq, closure, length_im, length_word, maximal_elements,
    PositiveRootSystem, SimpleReflectionSet,
};
pub use error::{Error, Result};
pub use prank::{
    newton_vector, prank_sym, prank_uni_inert, prank_uni_ramified, prank_uni_split, xprime,
    NewtonVector, StrataConfig,
};
pub use reports::{
    enumerate_wnr, explicit_witness, hb_report, n_sigma_stats, ordinary_density,
    perm0_bijection_check, prank0_dimension, HbReport, PermutationStats, StratumRecord,
};
pub use weyl::{ExtAffineElement, FrobeniusTuple, GroupFlavor, Permutation};
