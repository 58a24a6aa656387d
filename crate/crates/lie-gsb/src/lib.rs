//! Gröbner–Shirshov bases for Lie algebras over commutative algebras k[Y|R].

pub mod cli;
pub mod commutative;
pub mod freelie;
pub mod gsb_assoc;
pub mod gsb_lie;
pub mod lyndon;
pub mod speciality;
pub mod text;
