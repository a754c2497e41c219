//! The three terminal branches of the classification: the expectation of
//! a transposition equal to itself forces the full group algebra, the
//! expectation of a 3-cycle equal to itself forces the even part, and
//! vanishing on a 3-cycle forces the scalars.

use std::fmt;
use std::str::FromStr;

use crate::characters::{check_regular_from_3cycle, Mixture, ThomaParameters};
use crate::group_ring::{inner_product, multiply, GroupRingElement};
use crate::perm::{alternating_group, symmetric_group, FinitaryPermutation};
use crate::sampling::Sampler;
use crate::subalgebra::{expectation, NormalSubgroupId};

use super::finite_group::generate_closure;
use super::{ReplayReport, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConclusionBranch {
    Full,
    Alternating,
    Trivial,
}

impl fmt::Display for ConclusionBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConclusionBranch::Full => "full",
            ConclusionBranch::Alternating => "alternating",
            ConclusionBranch::Trivial => "trivial",
        };
        write!(f, "{s}")
    }
}

impl FromStr for ConclusionBranch {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(ConclusionBranch::Full),
            "alternating" => Ok(ConclusionBranch::Alternating),
            "trivial" => Ok(ConclusionBranch::Trivial),
            other => Err(format!(
                "unknown branch `{other}` (expected full, alternating, or trivial)"
            )),
        }
    }
}

pub fn replay_conclusion(branch: ConclusionBranch, seed: u64) -> ReplayReport {
    match branch {
        ConclusionBranch::Full => full_branch(seed),
        ConclusionBranch::Alternating => alternating_branch(seed),
        ConclusionBranch::Trivial => trivial_branch(seed),
    }
}

fn perm(s: &str) -> FinitaryPermutation {
    s.parse().expect("fixed literal")
}

fn full_branch(seed: u64) -> ReplayReport {
    let mut report = ReplayReport::new("conclusion-full");
    report.step(
        "hypothesis",
        "assume E((1 2)) = (1 2)",
        true,
        Some(Witness::Element(GroupRingElement::from_permutation(perm(
            "(1 2)",
        )))),
    );

    // every transposition is a conjugate of (1 2) through the canonical
    // relabeling, so all transpositions are certified
    let mut transport_ok = true;
    let mut samples = Vec::new();
    for i in 1..=6u32 {
        for j in (i + 1)..=6 {
            let relabel = FinitaryPermutation::conjugator(&[1, 2], &[i, j]).expect("distinct");
            let image = perm("(1 2)").conjugated_by(&relabel);
            let target = FinitaryPermutation::transposition(i, j);
            transport_ok &= image == target;
            samples.push(image.to_string());
        }
    }
    report.step(
        "transposition-transport",
        "conjugating (1 2) by the relabeling 1→i, 2→j yields (i j) for every pair in [6]",
        transport_ok,
        Some(Witness::Permutations(samples)),
    );

    // transpositions generate the whole finite level
    let mut generation_ok = true;
    let mut orders = Vec::new();
    for n in 2..=6u32 {
        let gens: Vec<FinitaryPermutation> = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| FinitaryPermutation::transposition(i, j)))
            .collect();
        let closure = generate_closure(&gens);
        let expected = symmetric_group(n).len();
        generation_ok &= closure.len() == expected;
        orders.push(closure.len().to_string());
    }
    report.step(
        "transpositions-generate",
        "the transpositions of [n] generate all n! permutations for n = 2..6",
        generation_ok,
        Some(Witness::Rationals(orders)),
    );

    // at the group-ring level the expectation onto the full group fixes
    // every element
    let mut sampler = Sampler::new(seed);
    let fixed = (0..20).all(|_| {
        let x = sampler.group_ring_element(6, 6);
        expectation(NormalSubgroupId::Full, &x) == x
    });
    report.step(
        "expectation-is-identity",
        "the expectation onto the full group algebra fixes 20 sampled elements",
        fixed,
        None,
    );
    report
}

fn alternating_branch(seed: u64) -> ReplayReport {
    let mut report = ReplayReport::new("conclusion-alternating");
    report.step(
        "hypothesis",
        "assume E((1 2 3)) = (1 2 3) and E((1 2)) = 0",
        true,
        Some(Witness::Element(GroupRingElement::from_permutation(perm(
            "(1 2 3)",
        )))),
    );

    // 3-cycle transport over all distinct triples in [5]
    let mut transport_ok = true;
    for i in 1..=5u32 {
        for j in 1..=5 {
            for k in 1..=5 {
                if i == j || j == k || i == k {
                    continue;
                }
                let relabel =
                    FinitaryPermutation::conjugator(&[1, 2, 3], &[i, j, k]).expect("distinct");
                let image = perm("(1 2 3)").conjugated_by(&relabel);
                let target = FinitaryPermutation::from_cycle(&[i, j, k]).expect("distinct");
                transport_ok &= image == target;
            }
        }
    }
    report.step(
        "three-cycle-transport",
        "conjugating (1 2 3) by the relabeling 1→i, 2→j, 3→k yields (i j k) for every \
         distinct triple in [5]",
        transport_ok,
        None,
    );

    // 3-cycles generate the even permutations at each finite level
    let mut generation_ok = true;
    let mut orders = Vec::new();
    for n in 3..=6u32 {
        let mut gens = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i < j && j != k && i != k && k > i {
                        gens.push(FinitaryPermutation::from_cycle(&[i, j, k]).expect("distinct"));
                    }
                }
            }
        }
        let closure = generate_closure(&gens);
        let expected = alternating_group(n).len();
        generation_ok &= closure.len() == expected
            && closure.iter().all(|p| p.is_even());
        orders.push(closure.len().to_string());
    }
    report.step(
        "three-cycles-generate",
        "the 3-cycles of [n] generate exactly the even permutations (orders n!/2) \
         for n = 3..6",
        generation_ok,
        Some(Witness::Rationals(orders)),
    );

    // the two-coset decomposition at finite level: every permutation is
    // even or (1 2) times even, and the parts are disjoint
    let mut coset_ok = true;
    for n in 2..=5u32 {
        let whole = symmetric_group(n);
        let even: Vec<_> = whole.iter().filter(|p| p.is_even()).cloned().collect();
        let flipped: Vec<_> = even.iter().map(|p| perm("(1 2)").compose(p)).collect();
        let disjoint = flipped.iter().all(|p| !p.is_even());
        let mut union: Vec<_> = even.iter().chain(flipped.iter()).cloned().collect();
        union.sort();
        let mut all = whole.clone();
        all.sort();
        coset_ok &= disjoint && union == all && 2 * even.len() == whole.len();
    }
    report.step(
        "coset-decomposition",
        "at each finite level the group splits as the even part plus (1 2) times the \
         even part, an index-two decomposition",
        coset_ok,
        None,
    );

    // E((1 2) s) = E((1 2)) · s = 0 for even s
    let mut sampler = Sampler::new(seed);
    let flip = perm("(1 2)");
    let odd_vanishes = (0..20).all(|_| {
        let mut s = sampler.permutation(6);
        if !s.is_even() {
            s = flip.compose(&s);
        }
        let odd = GroupRingElement::from_permutation(flip.compose(&s));
        let direct = expectation(NormalSubgroupId::Alternating, &odd);
        let factored = multiply(
            &expectation(
                NormalSubgroupId::Alternating,
                &GroupRingElement::from_permutation(flip.clone()),
            ),
            &GroupRingElement::from_permutation(s),
        );
        direct.is_zero() && direct == factored
    });
    report.step(
        "odd-coset-vanishes",
        "E((1 2) s) = E((1 2)) · s = 0 for 20 sampled even s",
        odd_vanishes,
        None,
    );

    // the expectation keeps exactly the even-supported part
    let keeps_even_part = (0..20).all(|_| {
        let x = sampler.group_ring_element(6, 6);
        let e = expectation(NormalSubgroupId::Alternating, &x);
        e.terms().all(|(p, _)| p.is_even())
            && x.terms()
                .filter(|(p, _)| p.is_even())
                .all(|(p, c)| &e.coefficient(p) == c)
    });
    report.step(
        "expectation-is-even-part",
        "the expectation onto the even part keeps exactly the even-supported terms of \
         20 sampled elements",
        keeps_even_part,
        None,
    );
    report
}

fn trivial_branch(seed: u64) -> ReplayReport {
    let mut report = ReplayReport::new("conclusion-trivial");
    report.step(
        "hypothesis",
        "assume E((1 2 3)) = 0, so the induced trace vanishes on 3-cycles",
        true,
        None,
    );

    // the vanishing test: a trace vanishing on a 3-cycle is the
    // point-mass at the identity
    let outcome = check_regular_from_3cycle(&Mixture::single(ThomaParameters::degenerate()), seed);
    report.step(
        "regular-character-forced",
        "a trace with value 0 on (1 2 3) has every parameter zero and vanishes on 100 \
         sampled non-identity permutations",
        outcome.is_pass(),
        Some(Witness::Text(format!("{outcome:?}"))),
    );

    // the squared two-norm of each expectation agrees with the vanishing
    // trace, so E(s) = 0 off the identity
    let mut sampler = Sampler::new(seed);
    let mut norm_ok = true;
    for _ in 0..50 {
        let s = sampler.nonidentity_permutation(8);
        let e = expectation(
            NormalSubgroupId::Trivial,
            &GroupRingElement::from_permutation(s),
        );
        norm_ok &= e.is_zero() && inner_product(&e, &e).is_zero();
    }
    report.step(
        "norm-identity",
        "‖E(s)‖² = 0 and E(s) = 0 for 50 sampled non-identity permutations",
        norm_ok,
        None,
    );

    // what survives is the scalar part: E(x) = trace(x) · e
    let scalars_only = (0..20).all(|_| {
        let x = sampler.group_ring_element(6, 6);
        expectation(NormalSubgroupId::Trivial, &x)
            == GroupRingElement::one().scaled(&x.trace())
    });
    report.step(
        "scalar-part",
        "the expectation onto the trivial subgroup algebra is x ↦ trace(x) · e on 20 \
         sampled elements",
        scalars_only,
        None,
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_three_branches_pass() {
        for branch in [
            ConclusionBranch::Full,
            ConclusionBranch::Alternating,
            ConclusionBranch::Trivial,
        ] {
            let report = replay_conclusion(branch, 0);
            assert!(report.passed(), "branch {branch}: {report:?}");
        }
    }

    #[test]
    fn closure_orders_are_reported() {
        let report = replay_conclusion(ConclusionBranch::Alternating, 0);
        let step = report.find_step("three-cycles-generate").unwrap();
        match step.witness.as_ref().unwrap() {
            Witness::Rationals(orders) => {
                assert_eq!(orders, &vec!["3", "12", "60", "360"]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn branch_names_parse() {
        assert_eq!(
            "alternating".parse::<ConclusionBranch>().unwrap(),
            ConclusionBranch::Alternating
        );
        assert!("half".parse::<ConclusionBranch>().is_err());
    }
}
