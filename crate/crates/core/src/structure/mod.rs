//! Characteristic subgroups, Sylow and Hall subgroups, quotients and series
//! of materialized groups.

mod basic;
mod factorisation;
mod lattice;
mod quotient;
mod radicals;
mod series;
mod sylow;

pub use basic::{center, derived_subgroup, is_abelian, is_abelian_group, is_normal, join, normal_closure, normaliser};
pub use factorisation::Factorisation;
pub use lattice::{enumerate_subgroups, DEFAULT_SUBGROUP_BUDGET};
pub use quotient::{quotient_group, Quotient};
pub use radicals::{fitting, fitting2, is_nilpotent, is_p_decomposable, is_pi_decomposable, o_p_prime, o_pi};

/// `O_π(G)` for an arbitrary prime set `π`; `O_{p'}` is `o_p_prime`.
pub use radicals::o_pi as o_pi_prime;
pub use series::{upper_p_series, UpperPSeries};
pub use sylow::{find_prefactorised_sylow, hall, o_p, sylow, sylow_conjugates, sylow_of_subgroup, DEFAULT_HALL_BUDGET};
