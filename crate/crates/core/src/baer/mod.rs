//! The `p`-Baer and Baer factorisation predicates and checks of the
//! structural consequences proved for them.

mod decomposition;
mod predicates;
mod report;
mod theorems;
mod unconditional;

pub use decomposition::{baer_decomposition, check_no_coprime_splitting, finest_coprime_partition, BaerDecomposition};
pub use predicates::{
    is_baer, is_p_baer, is_p_baer_prefactorised, unique_primes, BaerStatus, Locus, UniquePrimes, Witness,
};
pub use report::{Clause, TheoremReport, Verdict};
pub use theorems::{
    check_factor_inheritance, check_p_index_decomposition, check_pq_baer, check_theorem_f_equivalence,
    inheritance_violations, report_corollary_c, report_theorem_a, report_theorem_b, report_theorem_e, IndexScope,
};
pub use unconditional::{
    check_camina_camina, check_class_index_paths, check_index_divisibility, check_lemma_bk, check_wielandt,
};
