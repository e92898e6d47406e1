//! The property report: structural flags and the ring-theoretic facts they
//! imply.

use serde::Serialize;

use crate::conditions::*;
use crate::domain::zero_divisor_witness;
use graph_core::lambda_partition;
use rewrite_algebra::Algebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

/// A structural predicate with a short human-readable justification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub value: bool,
    pub evidence: String,
}

/// A ring-theoretic statement, its status and the result used to decide it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub condition_lv: Flag,
    pub domain_condition: Flag,
    pub condition_a: Flag,
    pub condition_a_prime: Flag,
    pub connected: Flag,
    pub tame: Flag,
    pub facts: Vec<Fact>,
}

impl PropertyReport {
    pub fn fact(&self, name: &str) -> Option<&Fact> {
        self.facts.iter().find(|f| f.name == name)
    }

    pub fn status(&self, name: &str) -> Status {
        self.fact(name).map_or(Status::Unknown, |f| f.status)
    }
}

const LV_COR: &str = "local valuation corollary";
const A_COR: &str = "valuative basis element corollary (Condition A)";
const A_PRIME_COR: &str = "non-Noetherian corollary (Condition A')";
const DOMAIN_THM: &str = "characterisation of domains";

fn fact(name: &'static str, holds: bool, theorem: &'static str) -> Fact {
    if holds {
        Fact { name, status: Status::Holds, theorem: Some(theorem), witness: None }
    } else {
        Fact { name, status: Status::Unknown, theorem: None, witness: None }
    }
}

/// Evaluates all flags and sets each implied fact exactly when the
/// hypothesis of the corresponding corollary holds; everything else is
/// reported as unknown. Domain-ness follows the characterisation theorem
/// and, when it says "not a domain", carries the zero-divisor witness found
/// by a bounded search.
pub fn property_report(alg: &Algebra) -> PropertyReport {
    let g = alg.graph();
    let lv = lv_branch(g);
    let dom = domain_condition(g);
    let a = condition_a_witness(alg);
    let ap = condition_a_prime_witness(alg);
    let connected = g.is_connected();
    let edges = g.graph().edge_count();
    let partition = lambda_partition(g);

    let flag = |value: bool, evidence: String| Flag { value, evidence };
    let condition_lv = flag(
        lv.is_some(),
        match lv {
            Some(LvBranch::Lv1) => "LV1".into(),
            Some(LvBranch::Lv2) => "LV2".into(),
            None => "neither LV1 nor LV2".into(),
        },
    );
    let domain_flag = flag(dom, format!("|S|={}, |T|={}", g.s_blocks().len(), g.t_blocks().len()));
    let a_flag = flag(a.is_some(), a.as_ref().map_or("no candidate block".into(), |w| format!("{w:?}")));
    let ap_flag = flag(ap.is_some(), ap.as_ref().map_or("no candidate block".into(), |w| format!("{w:?}")));

    let lvb = lv.is_some();
    let mut facts = vec![
        fact("nonsingular", lvb, LV_COR),
        fact("semiprimitive", lvb && connected, LV_COR),
        fact("prime", lvb && connected && g.graph().vertex_count() > 0, LV_COR),
        fact("not_von_neumann_regular", (lvb && edges >= 1) || a.is_some(), if lvb && edges >= 1 { LV_COR } else { A_COR }),
        fact("infinite_dimensional", a.is_some(), A_COR),
        fact("not_simple", a.is_some(), A_COR),
        fact("not_artinian", a.is_some(), A_COR),
        fact("not_noetherian", ap.is_some(), A_PRIME_COR),
    ];
    let mut domain = Fact { name: "domain", status: if dom { Status::Holds } else { Status::Fails }, theorem: Some(DOMAIN_THM), witness: None };
    if !dom {
        domain.witness = zero_divisor_witness(alg, 2).map(|z| format!("({}) * ({}) = 0", alg.format(&z.a), alg.format(&z.b)));
    }
    facts.push(domain);

    PropertyReport {
        condition_lv,
        domain_condition: domain_flag,
        condition_a: a_flag,
        condition_a_prime: ap_flag,
        connected: flag(connected, format!("{} component(s)", g.graph().components().len())),
        tame: flag(partition.tame, format!("{} hyperedge class(es)", partition.classes.len())),
        facts,
    }
}
