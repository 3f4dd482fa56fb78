//! Gröbner bases and the ideal operations built on them.

mod engine;
pub mod field;
mod hilbert;
mod ideal;
pub mod modp;

pub use hilbert::{dimension_degree, hilbert, HilbertData};
pub use ideal::{buchberger, normal_form, poly_gcd, GroebnerBasis, Ideal, MAX_SATURATION_STEPS};

/// Monomial orders understood by the engine.
///
/// `Elimination { split }` compares the block of variables with index
/// `>= split` first (by grevlex), then the rest. The variable with index 4
/// is the engine's auxiliary variable, so `split: 4` eliminates it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    Elimination { split: usize },
}
