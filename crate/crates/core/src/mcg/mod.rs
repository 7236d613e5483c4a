// SPDX-License-Identifier: Apache-2.0

//! The mapping class group seen through `Sp(2k, Z)`.

pub mod homology;
pub mod matrix;
pub mod nontriviality;
pub mod obstruction;
pub mod symplectic;

pub use homology::{intersection_pairing, thurston_intersection, twist_homology, HomologyClass};
pub use matrix::IntMatrix;
pub use nontriviality::{twist_nontriviality, NontrivialityCertificate, TwistTriviality};
pub use obstruction::{
    abelianization_image, commutator_obstruction, handlebody_subgroup_check, kotschick_bound,
    verify_mixed_sign_commutator, verify_orientation_reversing_commutator, ObstructionKind,
    ObstructionVerdict,
};
pub use symplectic::{
    is_anti_symplectic, is_symplectic, standard_form, transvection, SpElement, TwistLetter, TwistWord,
};
