//! Free groups, their endomorphisms, the integral group ring and Fox calculus.

mod aut;
mod fox;
mod groupring;
mod word;

pub use aut::FreeAut;
pub use fox::{
    fox_derivative, fox_derivative_elt, jacobian_matrix, magnus_specialize, FoxJacobian,
};
pub use groupring::GroupRingElt;
pub use word::FreeWord;
