//! The two excluded symmetric solutions for the expectation of a
//! 3-cycle. Each case assumes `E((1 2 3)) = (1/2)((1 2 3) ± (1 3 2))`,
//! grows a certified subset of the invariant subalgebra through exact
//! products, conjugations, and linear combinations, and lands on a
//! contradiction: an element the hypothesis cannot expect correctly, or
//! an inner product that must vanish but equals -1/2.

use std::fmt;
use std::str::FromStr;

use crate::group_ring::{inner_product, GroupRingElement};
use crate::perm::FinitaryPermutation;
use crate::scalar::Scalar;

use super::{CertId, CertifiedSet, ReplayReport, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryCase {
    Plus,
    Minus,
}

impl SymmetryCase {
    fn sign(self) -> i64 {
        match self {
            SymmetryCase::Plus => 1,
            SymmetryCase::Minus => -1,
        }
    }
}

impl fmt::Display for SymmetryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryCase::Plus => write!(f, "plus"),
            SymmetryCase::Minus => write!(f, "minus"),
        }
    }
}

impl FromStr for SymmetryCase {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus" => Ok(SymmetryCase::Plus),
            "minus" => Ok(SymmetryCase::Minus),
            other => Err(format!("unknown case `{other}` (expected plus or minus)")),
        }
    }
}

fn perm(s: &str) -> FinitaryPermutation {
    s.parse().expect("fixed literal")
}

/// `Σ (num/den)·perm` built from integer fraction parts.
fn combo(parts: &[(i64, i64, &str)]) -> GroupRingElement {
    GroupRingElement::from_terms(
        parts
            .iter()
            .map(|&(n, d, s)| (Scalar::from_ratio(n, d), perm(s))),
    )
}

/// The hypothesized expectation of the 3-cycle `(i j k)` in this case:
/// `(1/2)((i j k) + sign·(i k j))`, obtained by conjugating the base
/// hypothesis with the canonical relabeling `1→i, 2→j, 3→k`.
struct Chain {
    set: CertifiedSet,
    sign: i64,
    base: CertId,
}

impl Chain {
    fn new(case: SymmetryCase) -> (Self, GroupRingElement) {
        let mut set = CertifiedSet::new();
        let hypothesis = combo(&[(1, 2, "(1 2 3)"), (case.sign(), 2, "(1 3 2)")]);
        let base = set.assume(hypothesis.clone());
        (
            Chain {
                set,
                sign: case.sign(),
                base,
            },
            hypothesis,
        )
    }

    /// Transports the base hypothesis to the triple `(i, j, k)` and checks
    /// the transported element has the expected symmetrized form.
    fn expectation_of(&mut self, report: &mut ReplayReport, i: u32, j: u32, k: u32) -> CertId {
        let relabel =
            FinitaryPermutation::conjugator(&[1, 2, 3], &[i, j, k]).expect("distinct triples");
        let id = self.set.conjugate(&relabel, self.base);
        let cycle = |a: u32, b: u32, c: u32| {
            FinitaryPermutation::from_cycle(&[a, b, c])
                .expect("distinct points")
                .to_string()
        };
        let expected = combo(&[
            (1, 2, &cycle(i, j, k)),
            (self.sign, 2, &cycle(i, k, j)),
        ]);
        report.check_element(
            format!("transport-{i}{j}{k}"),
            format!(
                "conjugating the hypothesis by the relabeling 1→{i}, 2→{j}, 3→{k} gives \
                 E(({i} {j} {k})) = 1/2(({i} {j} {k}) {} ({i} {k} {j}))",
                if self.sign > 0 { "+" } else { "-" }
            ),
            self.set.get(id),
            &expected,
        );
        id
    }
}

/// Replays one excluded case as a fully certified chain of group-ring
/// identities.
pub fn replay_rule_out_symmetry(case: SymmetryCase) -> ReplayReport {
    match case {
        SymmetryCase::Plus => plus_case(),
        SymmetryCase::Minus => minus_case(),
    }
}

fn plus_case() -> ReplayReport {
    let mut report = ReplayReport::new("symmetry-plus");
    let (mut chain, hypothesis) = Chain::new(SymmetryCase::Plus);
    report.step(
        "hypothesis",
        "assume E((1 2 3)) = 1/2((1 2 3) + (1 3 2)); this element lies in the subalgebra",
        true,
        Some(Witness::Element(hypothesis)),
    );

    let e123 = chain.base;
    let e124 = chain.expectation_of(&mut report, 1, 2, 4);
    let e143 = chain.expectation_of(&mut report, 1, 4, 3);
    let e234 = chain.expectation_of(&mut report, 2, 3, 4);

    // the doubled hypotheses multiply to a sum of four permutations
    let two = Scalar::from_integer(2);
    let doubled_123 = chain.set.combine(&[(two.clone(), e123)]);
    let doubled_124 = chain.set.combine(&[(two.clone(), e124)]);
    let product = chain.set.product(doubled_123, doubled_124);
    let product_expected = combo(&[
        (1, 1, "(1 3)(2 4)"),
        (1, 1, "(1 4 3)"),
        (1, 1, "(2 4 3)"),
        (1, 1, "(1 4)(2 3)"),
    ]);
    report.check_element(
        "product-expansion",
        "((1 2 3)+(1 3 2))((1 2 4)+(1 4 2)) = (1 3)(2 4)+(1 4 3)+(2 4 3)+(1 4)(2 3)",
        chain.set.get(product),
        &product_expected,
    );

    let ad34 = chain.set.conjugate(&perm("(3 4)"), product);
    let ad34_expected = combo(&[
        (1, 1, "(1 4)(2 3)"),
        (1, 1, "(1 3 4)"),
        (1, 1, "(2 3 4)"),
        (1, 1, "(1 3)(2 4)"),
    ]);
    report.check_element(
        "ad34",
        "conjugating the product by (3 4) gives (1 4)(2 3)+(1 3 4)+(2 3 4)+(1 3)(2 4)",
        chain.set.get(ad34),
        &ad34_expected,
    );

    // product + ad34 - ((1 4 3)+(1 3 4)) - ((2 4 3)+(2 3 4)), halved,
    // isolates the sum of the two double transpositions
    let half = Scalar::from_ratio(1, 2);
    let minus_one = Scalar::from_integer(-1);
    let pair_sum = chain.set.combine(&[
        (half.clone(), product),
        (half.clone(), ad34),
        (minus_one.clone(), e143),
        (minus_one.clone(), e234),
    ]);
    let pair_sum_expected = combo(&[(1, 1, "(1 3)(2 4)"), (1, 1, "(1 4)(2 3)")]);
    report.check_element(
        "two-cycle-pair-sum",
        "adding the two expansions and removing the certified 3-cycle pairs leaves \
         (1 3)(2 4)+(1 4)(2 3)",
        chain.set.get(pair_sum),
        &pair_sum_expected,
    );

    let ad23 = chain.set.conjugate(&perm("(2 3)"), pair_sum);
    report.check_element(
        "ad23",
        "conjugating by (2 3) gives (1 2)(3 4)+(1 4)(2 3)",
        chain.set.get(ad23),
        &combo(&[(1, 1, "(1 2)(3 4)"), (1, 1, "(1 4)(2 3)")]),
    );

    let one = Scalar::one();
    let difference = chain
        .set
        .combine(&[(one.clone(), pair_sum), (minus_one.clone(), ad23)]);
    report.check_element(
        "difference",
        "subtracting leaves (1 3)(2 4)-(1 2)(3 4)",
        chain.set.get(difference),
        &combo(&[(1, 1, "(1 3)(2 4)"), (-1, 1, "(1 2)(3 4)")]),
    );

    let ad24 = chain.set.conjugate(&perm("(2 4)"), pair_sum);
    report.check_element(
        "ad24",
        "conjugating the pair sum by (2 4) gives (1 3)(2 4)+(1 2)(3 4)",
        chain.set.get(ad24),
        &combo(&[(1, 1, "(1 3)(2 4)"), (1, 1, "(1 2)(3 4)")]),
    );

    let isolated = chain
        .set
        .combine(&[(half.clone(), difference), (half.clone(), ad24)]);
    report.check_element(
        "isolate-double-transposition",
        "averaging certifies (1 3)(2 4) alone",
        chain.set.get(isolated),
        &combo(&[(1, 1, "(1 3)(2 4)")]),
    );

    let partner = chain.set.conjugate(&perm("(3 4)"), isolated);
    report.check_element(
        "conjugate-double-transposition",
        "conjugating by (3 4) certifies (1 4)(2 3)",
        chain.set.get(partner),
        &combo(&[(1, 1, "(1 4)(2 3)")]),
    );

    let residual = chain.set.combine(&[
        (one.clone(), product),
        (minus_one.clone(), isolated),
        (minus_one.clone(), partner),
    ]);
    let residual_expected = combo(&[(1, 1, "(1 4 3)"), (1, 1, "(2 4 3)")]);
    report.check_element(
        "residual-pair",
        "removing both double transpositions from the product leaves (1 4 3)+(2 4 3)",
        chain.set.get(residual),
        &residual_expected,
    );

    let ad25 = chain.set.conjugate(&perm("(2 5)"), residual);
    report.check_element(
        "ad25",
        "conjugating by (2 5) gives (1 4 3)+(5 4 3)",
        chain.set.get(ad25),
        &combo(&[(1, 1, "(1 4 3)"), (1, 1, "(5 4 3)")]),
    );

    let ad12 = chain.set.conjugate(&perm("(1 2)"), ad25);
    report.check_element(
        "ad12",
        "conjugating by (1 2) gives (2 4 3)+(5 4 3)",
        chain.set.get(ad12),
        &combo(&[(1, 1, "(2 4 3)"), (1, 1, "(5 4 3)")]),
    );

    let pair_difference = chain
        .set
        .combine(&[(one.clone(), residual), (minus_one.clone(), ad25)]);
    report.check_element(
        "pair-difference",
        "subtracting gives (2 4 3)-(5 4 3)",
        chain.set.get(pair_difference),
        &combo(&[(1, 1, "(2 4 3)"), (-1, 1, "(5 4 3)")]),
    );

    let lone = chain
        .set
        .combine(&[(half.clone(), pair_difference), (half.clone(), ad12)]);
    report.check_element(
        "isolate-three-cycle",
        "averaging certifies the single 3-cycle (2 4 3)",
        chain.set.get(lone),
        &combo(&[(1, 1, "(2 4 3)")]),
    );

    let relabel = FinitaryPermutation::conjugator(&[2, 4, 3], &[1, 2, 3]).expect("distinct");
    let transported = chain.set.conjugate(&relabel, lone);
    report.check_element(
        "transport-base-cycle",
        "conjugating certifies (1 2 3) itself",
        chain.set.get(transported),
        &combo(&[(1, 1, "(1 2 3)")]),
    );

    // (1 2 3) certified means E((1 2 3)) = (1 2 3), contradicting the
    // hypothesis E((1 2 3)) = 1/2((1 2 3)+(1 3 2))
    let contradiction = chain.set.get(transported) != chain.set.get(chain.base);
    report.step(
        "contradiction",
        "a certified element is its own expectation, so E((1 2 3)) = (1 2 3), \
         contradicting the hypothesized value",
        contradiction,
        Some(Witness::Element(
            &combo(&[(1, 1, "(1 2 3)")]) - chain.set.get(chain.base),
        )),
    );
    report
}

fn minus_case() -> ReplayReport {
    let mut report = ReplayReport::new("symmetry-minus");
    let (mut chain, hypothesis) = Chain::new(SymmetryCase::Minus);
    report.step(
        "hypothesis",
        "assume E((1 2 3)) = 1/2((1 2 3) - (1 3 2)); this element lies in the subalgebra",
        true,
        Some(Witness::Element(hypothesis)),
    );

    let e124 = chain.expectation_of(&mut report, 1, 2, 4);
    let e234 = chain.expectation_of(&mut report, 2, 3, 4);
    let e134 = chain.expectation_of(&mut report, 1, 3, 4);
    let e142 = chain.expectation_of(&mut report, 1, 4, 2);

    let two = Scalar::from_integer(2);
    let doubled_123 = chain.set.combine(&[(two.clone(), chain.base)]);
    let doubled_124 = chain.set.combine(&[(two.clone(), e124)]);
    let product = chain.set.product(doubled_123, doubled_124);
    let product_expected = combo(&[
        (1, 1, "(1 3)(2 4)"),
        (-1, 1, "(1 4 3)"),
        (-1, 1, "(2 4 3)"),
        (1, 1, "(1 4)(2 3)"),
    ]);
    report.check_element(
        "product-expansion",
        "((1 2 3)-(1 3 2))((1 2 4)-(1 4 2)) = (1 3)(2 4)-(1 4 3)-(2 4 3)+(1 4)(2 3)",
        chain.set.get(product),
        &product_expected,
    );

    let ad23 = chain.set.conjugate(&perm("(2 3)"), product);
    let ad23_expected = combo(&[
        (1, 1, "(1 2)(3 4)"),
        (-1, 1, "(1 4 2)"),
        (-1, 1, "(3 4 2)"),
        (1, 1, "(1 4)(2 3)"),
    ]);
    report.check_element(
        "ad23",
        "conjugating the product by (2 3) gives (1 2)(3 4)-(1 4 2)-(3 4 2)+(1 4)(2 3)",
        chain.set.get(ad23),
        &ad23_expected,
    );

    // product - ad23 - ((2 3 4)-(2 4 3)) leaves the mixed element
    let one = Scalar::one();
    let minus_one = Scalar::from_integer(-1);
    let doubled_234 = chain.set.combine(&[(two.clone(), e234)]);
    let mixed = chain.set.combine(&[
        (one.clone(), product),
        (minus_one.clone(), ad23),
        (minus_one.clone(), doubled_234),
    ]);
    let mixed_expected = combo(&[
        (1, 1, "(1 3)(2 4)"),
        (-1, 1, "(1 2)(3 4)"),
        (-1, 1, "(1 4 3)"),
        (1, 1, "(1 4 2)"),
    ]);
    report.check_element(
        "mixed-product",
        "subtracting and removing the certified pair -(2 4 3)+(2 3 4) leaves \
         (1 3)(2 4)-(1 2)(3 4)-(1 4 3)+(1 4 2)",
        chain.set.get(mixed),
        &mixed_expected,
    );

    let second_mixed = chain.set.conjugate(&perm("(1 3)"), mixed);
    let second_expected = combo(&[
        (1, 1, "(1 3)(2 4)"),
        (-1, 1, "(2 3)(1 4)"),
        (-1, 1, "(1 3 4)"),
        (1, 1, "(3 4 2)"),
    ]);
    report.check_element(
        "second-mixed",
        "conjugating by (1 3) gives (1 3)(2 4)-(2 3)(1 4)-(1 3 4)+(3 4 2)",
        chain.set.get(second_mixed),
        &second_expected,
    );

    let doubled_134 = chain.set.combine(&[(two.clone(), e134)]);
    let mixed_difference = chain.set.combine(&[
        (one.clone(), mixed),
        (minus_one.clone(), second_mixed),
        (minus_one.clone(), doubled_134),
    ]);
    let mixed_difference_expected = combo(&[
        (-1, 1, "(1 2)(3 4)"),
        (1, 1, "(2 3)(1 4)"),
        (1, 1, "(1 4 2)"),
        (-1, 1, "(3 4 2)"),
    ]);
    report.check_element(
        "mixed-minus-second-mixed",
        "subtracting and removing the certified pair -(1 4 3)+(1 3 4) leaves \
         -(1 2)(3 4)+(2 3)(1 4)+(1 4 2)-(3 4 2)",
        chain.set.get(mixed_difference),
        &mixed_difference_expected,
    );

    let half = Scalar::from_ratio(1, 2);
    let combined = chain.set.combine(&[
        (half.clone(), ad23),
        (half.clone(), mixed_difference),
    ]);
    report.check_element(
        "combine",
        "averaging with the (2 3)-conjugate certifies (2 3)(1 4)-(3 4 2)",
        chain.set.get(combined),
        &combo(&[(1, 1, "(2 3)(1 4)"), (-1, 1, "(3 4 2)")]),
    );

    let isolated = chain
        .set
        .combine(&[(one.clone(), ad23), (minus_one.clone(), combined)]);
    report.check_element(
        "isolate",
        "removing it from the (2 3)-conjugate certifies (1 2)(3 4)-(1 4 2)",
        chain.set.get(isolated),
        &combo(&[(1, 1, "(1 2)(3 4)"), (-1, 1, "(1 4 2)")]),
    );

    // (1 4 2) - E((1 4 2)) is orthogonal to the subalgebra, so its
    // pairing with the certified element must vanish; it equals -1/2
    let g142 = GroupRingElement::from_permutation(perm("(1 4 2)"));
    let defect = &g142 - chain.set.get(e142);
    let value = inner_product(&defect, chain.set.get(isolated));
    report.step(
        "orthogonality-value",
        "⟨(1 4 2) - E((1 4 2)), (1 2)(3 4) - (1 4 2)⟩ evaluates to -1/2",
        value == Scalar::from_ratio(-1, 2),
        Some(Witness::Scalar(value.clone())),
    );
    report.step(
        "contradiction",
        "the pairing of an expectation defect with a certified element must be 0, \
         but it equals -1/2",
        !value.is_zero(),
        Some(Witness::Scalar(value)),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plus_case_certifies_the_lone_three_cycle() {
        let report = replay_rule_out_symmetry(SymmetryCase::Plus);
        assert!(report.passed(), "{report:?}");
        let step = report.find_step("isolate-three-cycle").unwrap();
        match step.witness.as_ref().unwrap() {
            Witness::Element(x) => assert_eq!(x.to_string(), "(2 4 3)"),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn minus_case_ends_at_minus_one_half() {
        let report = replay_rule_out_symmetry(SymmetryCase::Minus);
        assert!(report.passed(), "{report:?}");
        let step = report.find_step("orthogonality-value").unwrap();
        match step.witness.as_ref().unwrap() {
            Witness::Scalar(v) => assert_eq!(*v, Scalar::from_ratio(-1, 2)),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn chain_witnesses_render_canonically() {
        let report = replay_rule_out_symmetry(SymmetryCase::Minus);
        let product = report.find_step("product-expansion").unwrap();
        match product.witness.as_ref().unwrap() {
            Witness::Element(x) => assert_eq!(
                x.to_string(),
                "(1 3)(2 4) - (1 4 3) + (1 4)(2 3) - (2 4 3)"
            ),
            other => panic!("unexpected witness {other:?}"),
        }
    }
}
