//! Independent checks: explicit automorphisms evaluated on sampled points,
//! and exhaustive sweeps over belyi triples.

mod action;
mod maps;
mod sweep;

pub use action::{
    action_residual, apply_word, sample_curve, verify_map_order, words_agree, CurveSample, Factor, Monomial,
    RationalMap, ACTION_TOL, SAMPLE_EPS,
};
pub use maps::{
    accola_maclachlan, period_three, standard_actions, twist_parameters, twisted_z2, verify_action, ActionReport,
    CheckLine, ExplicitAction, NamedMap, Relation,
};
pub use sweep::{
    cross_check, cross_check_tables, enumerate_classes, enumerate_classes_capped, CheckResult, ClassEntry,
    CrossCheckReport, EnumerationTable, CHECKS, DEFAULT_N_MAX,
};
