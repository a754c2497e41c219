//! Mechanically checked verification chains: every symbolic step of the
//! invariant-subalgebra classification argument is rerun as an exact
//! group-ring computation, and each step's witness can be recomputed
//! independently of the chain that produced it.

mod conclusion;
mod finite_group;
mod foundations;
mod symmetry;
mod systems;

pub use conclusion::{replay_conclusion, ConclusionBranch};
pub use finite_group::{
    enumerate_normal_subgroups, finite_isr_counting, naive_subgroup_census, SubgroupDescriptor,
};
pub use foundations::{
    replay_commutant_orbit, replay_support_control, replay_thoma_three_cycle,
    replay_trace_positivity,
};
pub use symmetry::{replay_rule_out_symmetry, SymmetryCase};
pub use systems::{
    quadratic_rational_roots, replay_step1, replay_step2_solutions, replay_transposition_branch,
};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::group_ring::{conj_action, linear_combine, multiply, GroupRingElement};
use crate::perm::FinitaryPermutation;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("normal-subgroup enumeration supports 2 <= n <= 6, got {0}")]
    UnsupportedLevel(u32),
}

/// A recomputable fact attached to a verified step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Element(GroupRingElement),
    Scalar(Scalar),
    Permutation(String),
    Permutations(Vec<String>),
    Rationals(Vec<String>),
    Pairs(Vec<[String; 2]>),
    Count(u64),
    Text(String),
}

/// One checked claim: a label, the claim in words, whether the exact
/// recomputation confirmed it, and the computed witness.
#[derive(Debug, Clone, Serialize)]
pub struct ReplayStep {
    pub label: String,
    pub claim: String,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// An ordered list of checked steps; the report passes exactly when every
/// step verified.
#[derive(Debug, Clone)]
pub struct ReplayReport {
    pub case: String,
    pub steps: Vec<ReplayStep>,
}

impl ReplayReport {
    pub fn new(case: impl Into<String>) -> Self {
        ReplayReport {
            case: case.into(),
            steps: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.verified)
    }

    pub fn step(
        &mut self,
        label: impl Into<String>,
        claim: impl Into<String>,
        verified: bool,
        witness: Option<Witness>,
    ) {
        self.steps.push(ReplayStep {
            label: label.into(),
            claim: claim.into(),
            verified,
            witness,
        });
    }

    /// Records a step that compares a computed group-ring element against
    /// its expected value; the computed element is the witness.
    pub fn check_element(
        &mut self,
        label: impl Into<String>,
        claim: impl Into<String>,
        computed: &GroupRingElement,
        expected: &GroupRingElement,
    ) {
        self.step(
            label,
            claim,
            computed == expected,
            Some(Witness::Element(computed.clone())),
        );
    }

    pub fn find_step(&self, label: &str) -> Option<&ReplayStep> {
        self.steps.iter().find(|s| s.label == label)
    }
}

impl Serialize for ReplayReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ReplayReport", 3)?;
        st.serialize_field("case", &self.case)?;
        st.serialize_field("steps", &self.steps)?;
        st.serialize_field("overall", if self.passed() { "pass" } else { "fail" })?;
        st.end()
    }
}

/// The complete suite of verification chains.
#[derive(Debug, Clone)]
pub struct ReplaySuite {
    pub reports: Vec<ReplayReport>,
}

impl ReplaySuite {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}

impl Serialize for ReplaySuite {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ReplaySuite", 2)?;
        st.serialize_field("reports", &self.reports)?;
        st.serialize_field("overall", if self.passed() { "pass" } else { "fail" })?;
        st.end()
    }
}

/// Runs every verification chain with the given sampling seed.
pub fn run_all(seed: u64) -> ReplaySuite {
    let mut reports = vec![
        replay_transposition_branch(),
        replay_step1(),
        replay_step2_solutions(),
        replay_rule_out_symmetry(SymmetryCase::Plus),
        replay_rule_out_symmetry(SymmetryCase::Minus),
        replay_conclusion(ConclusionBranch::Full, seed),
        replay_conclusion(ConclusionBranch::Alternating, seed),
        replay_conclusion(ConclusionBranch::Trivial, seed),
    ];
    for n in 3..=6 {
        reports.push(finite_group::normal_subgroup_report(n));
    }
    reports.push(finite_group::finite_isr_classification(8));
    reports.push(replay_support_control(seed));
    reports.push(replay_trace_positivity(seed));
    reports.push(replay_thoma_three_cycle(seed));
    reports.push(replay_commutant_orbit());
    ReplaySuite { reports }
}

/// An index into a [`CertifiedSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertId(usize);

/// Bookkeeping for "certified members of the invariant subalgebra": the
/// set grows only through case hypotheses and operations the subalgebra
/// is closed under (products, conjugation, linear combinations), so each
/// derived element is certified by construction.
#[derive(Debug, Default)]
pub struct CertifiedSet {
    elems: Vec<GroupRingElement>,
}

impl CertifiedSet {
    pub fn new() -> Self {
        CertifiedSet::default()
    }

    pub fn get(&self, id: CertId) -> &GroupRingElement {
        &self.elems[id.0]
    }

    /// Inserts a case hypothesis.
    pub fn assume(&mut self, x: GroupRingElement) -> CertId {
        self.elems.push(x);
        CertId(self.elems.len() - 1)
    }

    pub fn product(&mut self, a: CertId, b: CertId) -> CertId {
        let x = multiply(&self.elems[a.0], &self.elems[b.0]);
        self.assume(x)
    }

    pub fn conjugate(&mut self, g: &FinitaryPermutation, a: CertId) -> CertId {
        let x = conj_action(g, &self.elems[a.0]);
        self.assume(x)
    }

    pub fn combine(&mut self, parts: &[(Scalar, CertId)]) -> CertId {
        let coeffs: Vec<Scalar> = parts.iter().map(|(c, _)| c.clone()).collect();
        let elems: Vec<GroupRingElement> =
            parts.iter().map(|(_, id)| self.elems[id.0].clone()).collect();
        let x = linear_combine(&coeffs, &elems).expect("lengths match by construction");
        self.assume(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes_only_when_every_step_verified() {
        let mut r = ReplayReport::new("demo");
        r.step("a", "first", true, None);
        assert!(r.passed());
        r.step("b", "second", false, Some(Witness::Count(3)));
        assert!(!r.passed());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["overall"], "fail");
        assert_eq!(json["steps"][1]["witness"], 3);
    }

    #[test]
    fn certified_set_operations_recompute() {
        let mut set = CertifiedSet::new();
        let x: GroupRingElement =
            GroupRingElement::from_permutation("(1 2 3)".parse().unwrap());
        let a = set.assume(x.clone());
        let sq = set.product(a, a);
        assert_eq!(
            set.get(sq),
            &GroupRingElement::from_permutation("(1 3 2)".parse().unwrap())
        );
        let back = set.combine(&[(Scalar::one(), sq), (Scalar::one(), a)]);
        assert_eq!(set.get(back).num_terms(), 2);
    }

    #[test]
    fn full_suite_passes_and_serializes() {
        let suite = run_all(0);
        for report in &suite.reports {
            assert!(report.passed(), "case {} failed", report.case);
        }
        let json = serde_json::to_value(&suite).unwrap();
        assert_eq!(json["overall"], "pass");
    }
}
