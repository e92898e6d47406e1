//! The H-monoid of a finite B-hypergraph: its presentation, a three-valued
//! word problem, the lattice of admissible triples (order ideals), the
//! quotient homomorphism `π` and the simplicity criterion.

pub mod lattice;
pub mod pi;
pub mod pres;

pub use lattice::{
    at_join, at_leq, at_meet, enumerate_admissible_triples, enumerate_bisaturated, ideal_generators, sum,
    AdmissibleTriple,
};
pub use pi::{is_monoid_simple, pi_hom, recover_triple, PiHom, Undecided};
pub use pres::{
    add, linear_certificate, monoid_equal, presentation, verify_chain, Certificate, EqResult, Generator, HMonoidPres,
    MonoidElt, MAX_STATES,
};
