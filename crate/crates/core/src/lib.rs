//! Tableau calculus for the cohomologically induced modules `A_q(lambda)` of
//! `U(p,q)`.
//!
//! The crate builds the signed tableau and the `nu`-quasitableau attached to a
//! theta-stable parabolic `q` and a character `lambda`, classifies `lambda`
//! into the positivity ranges, computes overlaps and singularities of
//! adjacent skew columns, and decides non-vanishing of `A_q(lambda)` and of
//! its Dirac index in the nice range. The [`oracle`] module holds exhaustive
//! brute-force sweeps that back every closed formula.

pub mod combinatorics;
pub mod criteria;
pub mod halfint;
pub mod oracle;
pub mod params;
pub mod ranges;
pub mod tableau;

pub use combinatorics::{
    is_antitableau, overlap_by_definition, overlap_by_formula, r_table, singularity,
    CombinatoricsError, RTable,
};
pub use criteria::{
    dirac_constructive, dirac_feasibility_bruteforce, dirac_index_nonzero, hp_condition,
    ktype_weight, mediocre_necessary_check, nonvanishing_nice, sing_within_overlap,
    solve_reduced_bruteforce, strengthened_hp, CriteriaError, FeasibilitySolution, HpCondition,
    HpFailure, KTypeWeight, PairCheck, StrengthenedHp, Verdict,
};
pub use halfint::HalfInt;
pub use oracle::{Counterexample, NiceGridReport, SweepReport};
pub use params::{validate_input, InputError, LambdaParam, ParabolicDatum, Weight};
pub use ranges::{classify, nice_gap_check, nu, rho, RangeClass, RangeLabel};
pub use tableau::{
    build_quasitableau, build_signed_tableau, build_signed_tableau_with, canonicalize,
    check_q_consistent, fill_entries, Cell, FirstColumnOrder, PartitionedTableau, QConsistency,
    QViolation, Sign, SignedConstruction, TableauError, TableauKind,
};
