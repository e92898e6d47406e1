//! Decidable structural predicates on bi-separated graphs (Condition LV,
//! the domain condition, Conditions (A) and (A′), quasi-cycles) and the
//! ring-theoretic facts about the Cohn–Leavitt path algebra they imply.

pub mod conditions;
pub mod domain;
pub mod growth;
pub mod report;

pub use conditions::{
    condition_a, condition_a_prime, condition_a_prime_witness, condition_a_witness, condition_lv, domain_condition,
    is_domain, lv_branch, APrimeWitness, AWitness, LvBranch,
};
pub use domain::{valuation_counterexample, zero_divisor_witness, WitnessKind, ZeroDivisor};
pub use growth::{
    find_connector, growth_class, growth_count, is_quasi_cycle, quasi_cycles, GrowthClass, QuasiCycle,
    SelfConnection,
};
pub use report::{property_report, Fact, Flag, PropertyReport, Status};
