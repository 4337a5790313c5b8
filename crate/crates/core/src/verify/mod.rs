//! Executable versions of the structural claims about scroll ideals, and a
//! finite-field point enumerator used as an independent oracle.

mod checks;
mod points;
mod report;
mod suite;

pub use checks::{
    check_counts_and_height, check_identity_suite, check_lemma1, check_lemma2, check_lemma3,
    expected_reduced_count, points_concordance, recheck_witness, verify_corollary4,
    verify_corollary4a, verify_corollary6, verify_prop5a, verify_theorem_main, CheckConfig,
};
pub use points::{find_witness_point, points_vanishing, witness_holds, PointSet};
pub use report::{Method, Record, Verdict, VerificationReport, Witness};
pub use suite::{run_suite, suite_jobs, Job, Level, SuiteSummary, THEOREM_PAIRS};
