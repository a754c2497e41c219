//! The three normal subgroups of the finitary symmetric group, the
//! trace-preserving conditional expectations onto their group algebras,
//! and the conjugation-orbit construction that forces relative
//! commutants to live on the complementary support.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::ClassFunction;
use crate::group_ring::GroupRingElement;
use crate::perm::FinitaryPermutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubalgebraError {
    #[error("the support-control check excludes the identity")]
    IdentityExcluded,
    #[error("the permutation's support does not meet the conjugating set")]
    DisjointConjugationSet,
    #[error("the set has only {available} points beyond the support, {needed} needed")]
    ConjugationSetTooSmall { needed: usize, available: usize },
}

/// The classification of normal subgroups: only the trivial subgroup, the
/// finitary alternating group, and the whole group occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormalSubgroupId {
    Trivial,
    Alternating,
    Full,
}

impl NormalSubgroupId {
    pub const ALL: [NormalSubgroupId; 3] = [
        NormalSubgroupId::Trivial,
        NormalSubgroupId::Alternating,
        NormalSubgroupId::Full,
    ];
}

impl fmt::Display for NormalSubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NormalSubgroupId::Trivial => "trivial",
            NormalSubgroupId::Alternating => "alternating",
            NormalSubgroupId::Full => "full",
        };
        write!(f, "{s}")
    }
}

impl FromStr for NormalSubgroupId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "trivial" => Ok(NormalSubgroupId::Trivial),
            "alternating" => Ok(NormalSubgroupId::Alternating),
            "full" => Ok(NormalSubgroupId::Full),
            other => Err(format!(
                "unknown subgroup `{other}` (expected trivial, alternating, or full)"
            )),
        }
    }
}

pub fn contains(h: NormalSubgroupId, s: &FinitaryPermutation) -> bool {
    match h {
        NormalSubgroupId::Trivial => s.is_identity(),
        NormalSubgroupId::Alternating => s.is_even(),
        NormalSubgroupId::Full => true,
    }
}

/// The trace-preserving conditional expectation onto the group algebra of
/// `h`: it deletes every term whose permutation lies outside `h`.
pub fn expectation(h: NormalSubgroupId, x: &GroupRingElement) -> GroupRingElement {
    GroupRingElement::from_terms(
        x.terms()
            .filter(|(p, _)| contains(h, p))
            .map(|(p, c)| (c.clone(), p.clone())),
    )
}

/// The trace `g ↦ τ(E(g) g⁻¹)` induced by the expectation onto `h`: the
/// indicator class function of `h`.
pub fn expectation_trace(h: NormalSubgroupId) -> ClassFunction {
    ClassFunction::Indicator(h)
}

/// Checks that every term of `E(s)` is supported inside the support of
/// `s`; the identity is excluded since its support is empty.
pub fn support_control_check(
    h: NormalSubgroupId,
    s: &FinitaryPermutation,
) -> Result<bool, SubalgebraError> {
    if s.is_identity() {
        return Err(SubalgebraError::IdentityExcluded);
    }
    let support = s.support();
    let e = expectation(h, &GroupRingElement::from_permutation(s.clone()));
    Ok(e.support_points().is_subset(&support))
}

/// Conjugates `s` by transpositions `(i j_k)` drawn from `a`, where `i`
/// is the least point of `support(s) ∩ a` and the `j_k` are the `count`
/// least points of `a` beyond `max(support(s))`. The results are
/// pairwise distinct because their supports are
/// `(support(s) \ {i}) ∪ {j_k}`.
pub fn conjugation_orbit(
    s: &FinitaryPermutation,
    a: &BTreeSet<u32>,
    count: usize,
) -> Result<Vec<FinitaryPermutation>, SubalgebraError> {
    let support = s.support();
    let i = *support
        .intersection(a)
        .next()
        .ok_or(SubalgebraError::DisjointConjugationSet)?;
    let beyond = s.max_support_point().unwrap_or(0);
    let js: Vec<u32> = a.iter().copied().filter(|&j| j > beyond).take(count).collect();
    if js.len() < count {
        return Err(SubalgebraError::ConjugationSetTooSmall {
            needed: count,
            available: js.len(),
        });
    }
    Ok(js
        .into_iter()
        .map(|j| s.conjugated_by(&FinitaryPermutation::transposition(i, j)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_ring::{conj_action, inner_product, multiply};
    use crate::sampling::Sampler;
    use crate::scalar::Scalar;

    fn p(s: &str) -> FinitaryPermutation {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GroupRingElement {
        GroupRingElement::from_permutation(p(s))
    }

    #[test]
    fn membership_examples() {
        assert!(contains(NormalSubgroupId::Alternating, &p("(1 2 3)")));
        assert!(!contains(NormalSubgroupId::Alternating, &p("(1 2)")));
        assert!(contains(
            NormalSubgroupId::Trivial,
            &FinitaryPermutation::identity()
        ));
        assert!(!contains(NormalSubgroupId::Trivial, &p("(1 2)")));
        assert!(contains(NormalSubgroupId::Full, &p("(1 2)")));
    }

    #[test]
    fn expectation_examples() {
        assert!(expectation(NormalSubgroupId::Alternating, &g("(1 2)")).is_zero());
        assert_eq!(
            expectation(NormalSubgroupId::Alternating, &g("(1 2 3)")),
            g("(1 2 3)")
        );
        for s in ["(1 2)", "(1 2 3)", "(1 4)(2 3)"] {
            assert!(expectation(NormalSubgroupId::Trivial, &g(s)).is_zero());
        }
        assert_eq!(
            expectation(NormalSubgroupId::Trivial, &GroupRingElement::one()),
            GroupRingElement::one()
        );
    }

    #[test]
    fn expectation_laws_on_random_elements() {
        let mut sampler = Sampler::new(31);
        for _ in 0..60 {
            let x = sampler.group_ring_element(6, 6);
            let y = sampler.group_ring_element(6, 6);
            for h in NormalSubgroupId::ALL {
                let ex = expectation(h, &x);
                // idempotent and trace preserving
                assert_eq!(expectation(h, &ex), ex);
                assert_eq!(ex.trace(), x.trace());
                // module property over elements of the subalgebra
                let a = expectation(h, &y);
                let lhs = expectation(h, &multiply(&multiply(&a, &x), &a));
                let rhs = multiply(&multiply(&a, &ex), &a);
                assert_eq!(lhs, rhs);
                // equivariance under conjugation (normality)
                let t = sampler.permutation(6);
                assert_eq!(
                    conj_action(&t, &expectation(h, &x)),
                    expectation(h, &conj_action(&t, &x))
                );
            }
        }
    }

    #[test]
    fn expectation_trace_examples() {
        let full = expectation_trace(NormalSubgroupId::Full);
        let trivial = expectation_trace(NormalSubgroupId::Trivial);
        let alt = expectation_trace(NormalSubgroupId::Alternating);
        assert_eq!(full.kind(), "expectation-indicator");
        for s in ["e", "(1 2)", "(1 2 3)", "(1 2)(3 4)"] {
            assert!(full.eval(&p(s)).is_one());
        }
        assert!(trivial.eval(&FinitaryPermutation::identity()).is_one());
        assert!(trivial.eval(&p("(1 2)")).is_zero());
        assert!(alt.eval(&p("(1 2)")).is_zero());
        assert!(alt.eval(&p("(1 2 3)")).is_one());
    }

    #[test]
    fn squared_norm_of_expectation_matches_indicator() {
        let mut sampler = Sampler::new(17);
        for _ in 0..80 {
            let s = sampler.permutation(6);
            for h in NormalSubgroupId::ALL {
                let e = expectation(h, &GroupRingElement::from_permutation(s.clone()));
                let norm = inner_product(&e, &e);
                assert_eq!(norm, expectation_trace(h).eval(&s));
            }
        }
    }

    #[test]
    fn support_control_examples() {
        assert!(support_control_check(NormalSubgroupId::Alternating, &p("(1 2 3)")).unwrap());
        assert!(support_control_check(NormalSubgroupId::Trivial, &p("(1 2)")).unwrap());
        assert!(support_control_check(NormalSubgroupId::Full, &p("(1 2)(3 4)")).unwrap());
        assert!(matches!(
            support_control_check(NormalSubgroupId::Full, &FinitaryPermutation::identity()),
            Err(SubalgebraError::IdentityExcluded)
        ));
    }

    #[test]
    fn conjugation_orbit_construction() {
        let s = p("(1 2)");
        let a: BTreeSet<u32> = [1, 3, 4, 5, 6].into_iter().collect();
        let orbit = conjugation_orbit(&s, &a, 3).unwrap();
        assert_eq!(orbit.len(), 3);
        let expected_supports = [
            BTreeSet::from([2, 3]),
            BTreeSet::from([2, 4]),
            BTreeSet::from([2, 5]),
        ];
        for (conj, support) in orbit.iter().zip(expected_supports) {
            assert_eq!(conj.support(), support);
        }
        let distinct: BTreeSet<_> = orbit.iter().cloned().collect();
        assert_eq!(distinct.len(), orbit.len());
    }

    #[test]
    fn conjugation_orbit_errors() {
        let s = p("(1 2)");
        let disjoint: BTreeSet<u32> = [3, 4].into_iter().collect();
        assert!(matches!(
            conjugation_orbit(&s, &disjoint, 1),
            Err(SubalgebraError::DisjointConjugationSet)
        ));
        let small: BTreeSet<u32> = [1, 3].into_iter().collect();
        assert!(matches!(
            conjugation_orbit(&s, &small, 2),
            Err(SubalgebraError::ConjugationSetTooSmall {
                needed: 2,
                available: 1
            })
        ));
        let a: BTreeSet<u32> = [1, 5, 6].into_iter().collect();
        assert_eq!(conjugation_orbit(&s, &a, 0).unwrap(), Vec::new());
    }

    #[test]
    fn subgroup_id_round_trips_through_text() {
        for h in NormalSubgroupId::ALL {
            let shown = h.to_string();
            assert_eq!(shown.parse::<NormalSubgroupId>().unwrap(), h);
            let json = serde_json::to_string(&h).unwrap();
            assert_eq!(json, format!("\"{shown}\""));
        }
        assert!("klein".parse::<NormalSubgroupId>().is_err());
    }

    #[test]
    fn expectation_kills_odd_coset_of_even_part() {
        let mut sampler = Sampler::new(3);
        let flip = p("(1 2)");
        let zero = expectation(
            NormalSubgroupId::Alternating,
            &GroupRingElement::from_permutation(flip.clone()),
        );
        assert!(zero.is_zero());
        for _ in 0..20 {
            let mut s = sampler.permutation(6);
            if !s.is_even() {
                s = flip.compose(&s);
            }
            let odd = flip.compose(&s);
            let e = expectation(
                NormalSubgroupId::Alternating,
                &GroupRingElement::from_permutation(odd.clone()),
            );
            assert!(e.is_zero());
            // E((1 2) s) = E((1 2)) · s = 0 term by term
            let transported = multiply(
                &zero,
                &GroupRingElement::from_permutation(s.clone()),
            );
            assert_eq!(e, transported);
            let _ = Scalar::zero();
        }
    }
}
