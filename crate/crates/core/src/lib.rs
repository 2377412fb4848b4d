//! Exact computation of generalized inverses in two concrete rings: integers
//! modulo n and k-by-k matrices over the Gaussian rationals. Inner, group,
//! Drazin, and Moore-Penrose inverses all arise as instances of one notion,
//! the inverse along an element, and all are computed through one unit
//! criterion instead of per-kind ad hoc searches. On top of that sit
//! mechanically checkable identities (absorption, commutation, reverse
//! order, shift invariance, Jacobson completion) with exhaustive sweeps and
//! counterexample searches over finite rings or candidate lists.
//!
//! Everything is exact: no floats, no tolerances. Results carry their own
//! certificates (unit inverses, ideal membership witnesses) and re-check
//! their defining equations before being returned.

pub mod along;
pub mod centralizer;
pub mod classical;
pub mod error;
pub mod laws;
pub mod regular;
pub mod ring;

pub use along::{
    all_sided_inverses, exists_along, ideal_membership, invert_along, invert_along_sigma,
    invert_along_sigma_unchecked, invert_along_sigma_with_inner, invert_along_with_inner,
    sided_inverse_along, AlongInverse, Side, SidedInverse,
};
pub use centralizer::{verify_centralizer, CentralizerMap, VerificationMode};
pub use classical::{
    drazin_inverse, drazin_scan_bound, group_inverse, inverse_along_specialization, moore_penrose,
    mp_one_sided, power_cycle, DrazinResult, OneSidedMp, Specialization,
};
pub use error::{AbsentReason, Error, Outcome, Result};
pub use laws::{
    evaluate_law, jacobson_complete, jacobson_two_sided, search_counterexamples, sweep_law,
    sweep_law_with,
    ElementSource, Hypothesis, LawId, LawReport, LawSweep, Verdict, ALL_LAWS,
};
pub use regular::{
    all_inner_inverses, exhaustive_moore_penrose, inner_inverse, is_regular, penrose_check,
    PenroseProfile,
};
pub use ring::{Element, GaussianRational, Matrix, RingContext};

/// Cap the global thread pool used by the sweep functions. Call once, before
/// any sweep; later calls are ignored, as is a cap of 0.
pub fn configure_thread_cap(threads: usize) {
    if threads == 0 {
        return;
    }
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
}
