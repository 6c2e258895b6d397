//! Exact symmetric functions: bases, Kostka–Foulkes polynomials,
//! Hall–Littlewood functions and specializations.

pub mod characters;
pub mod hall_littlewood;
pub mod power_sum;
pub mod specialization;
pub mod tableaux;
pub mod tables;

pub use hall_littlewood::{
    b_lambda, hl_p_in_p, hl_q_in_p, modified_hl_q, modified_hl_schur_symbolic, schur_expand,
    schur_in_p,
};
pub use power_sum::{PowerSumElement, PowerSumRecord};
pub use specialization::{
    geometric_spread, spec_power_sum, specialize, Sequence, Specialization,
};
pub use tableaux::{charge, kostka, kostka_foulkes};

/// `Pl_n`: replaces every `p_k` by `p_{nk}`.
pub fn plethysm_pl(f: &PowerSumElement, n: usize) -> PowerSumElement {
    f.plethysm(n)
}
