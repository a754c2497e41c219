//! Exact solution of the small polynomial systems that pin down the
//! expectation of a transposition and of a 3-cycle: idempotence of the
//! conditional expectation turns each Fourier ansatz into a quadratic
//! system, solved here by complete branch enumeration over the
//! rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::group_ring::{conj_action, inner_product, linear_combine, GroupRingElement};
use crate::perm::FinitaryPermutation;
use crate::scalar::{format_fraction, rat, Scalar};

use super::{ReplayReport, Witness};

/// All rational roots of `a x^2 + b x + c` (`a != 0`), in increasing
/// order. The root set is complete: a quadratic has rational roots
/// exactly when its discriminant is the square of a rational.
pub fn quadratic_rational_roots(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> Vec<BigRational> {
    assert!(!a.is_zero(), "leading coefficient must be nonzero");
    let disc = b * b - BigRational::from_integer(4.into()) * a * c;
    if disc.is_negative() {
        return Vec::new();
    }
    let sqrt = |x: &BigInt| -> Option<BigInt> {
        let r = x.sqrt();
        if &(&r * &r) == x {
            Some(r)
        } else {
            None
        }
    };
    let (Some(num_root), Some(den_root)) = (sqrt(disc.numer()), sqrt(disc.denom())) else {
        return Vec::new();
    };
    let root = BigRational::new(num_root, den_root);
    let two_a = BigRational::from_integer(2.into()) * a;
    let mut roots = vec![(-b - &root) / &two_a, (-b + &root) / &two_a];
    roots.sort();
    roots.dedup();
    roots
}

fn perm(s: &str) -> FinitaryPermutation {
    s.parse().expect("fixed literal")
}

fn mono(c: Scalar, s: &str) -> GroupRingElement {
    GroupRingElement::monomial(c, perm(s))
}

fn show(r: &BigRational) -> String {
    format_fraction(r)
}

/// The expectation model `x ↦ c_e(x)·E(e) + Σ c_s(x)·E(s)` determined by
/// prescribed values on basis permutations; exact on the span it covers.
fn substitute(
    x: &GroupRingElement,
    images: &[(&FinitaryPermutation, &GroupRingElement)],
) -> GroupRingElement {
    let mut acc = GroupRingElement::zero();
    for (p, c) in x.terms() {
        let image = images
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, img)| (*img).clone())
            .unwrap_or_else(|| panic!("no prescribed image for {p}"));
        acc = &acc + &image.scaled(c);
    }
    acc
}

/// Checks the constraint system `c = c + c·mu`, `mu = mu^2` coming from
/// idempotence on the ansatz `E((1 2)) = c·e + mu·(1 2)`, and recovers
/// the complete solution set `{(mu, c)} = {(0, 0), (1, 0)}` (the `mu = 0`
/// branch leaves `c` free until trace preservation forces `c = 0`).
pub fn replay_transposition_branch() -> ReplayReport {
    let mut report = ReplayReport::new("transposition-branch");
    let e = FinitaryPermutation::identity();
    let flip = perm("(1 2)");

    // the ansatz spans the group algebra of the points {1, 2}
    let span: Vec<FinitaryPermutation> = crate::perm::symmetric_group(2);
    report.step(
        "support-span",
        "the group algebra on the support {1, 2} is spanned by e and (1 2)",
        span == vec![e.clone(), flip.clone()],
        Some(Witness::Permutations(
            span.iter().map(|p| p.to_string()).collect(),
        )),
    );

    // applying the expectation to the ansatz: E(c·e + mu·(1 2)) must
    // reproduce the ansatz, giving (c + c·mu)·e + mu^2·(1 2); the grid
    // of nine evaluations pins the quadratic coefficient identities
    let mut grid_ok = true;
    for c_num in 0..3i64 {
        for mu_num in 0..3i64 {
            let c = Scalar::from_integer(c_num);
            let mu = Scalar::from_integer(mu_num);
            let ansatz = &mono(c.clone(), "e") + &mono(mu.clone(), "(1 2)");
            let expected = &mono(
                &c + &(&c * &mu),
                "e",
            ) + &mono(&mu * &mu, "(1 2)");
            let image = substitute(
                &ansatz,
                &[(&e, &GroupRingElement::one()), (&flip, &ansatz)],
            );
            grid_ok &= image == expected;
        }
    }
    report.step(
        "idempotence-expansion",
        "E(E((1 2))) expands to (c + c·mu)·e + mu^2·(1 2); verified on a 3x3 grid, \
         which determines the quadratic identity",
        grid_ok,
        None,
    );

    // mu = mu^2 has exactly the rational roots 0 and 1
    let roots = quadratic_rational_roots(&rat(1, 1), &rat(-1, 1), &rat(0, 1));
    report.step(
        "mu-roots",
        "mu = mu^2 has exactly the solutions mu = 0 and mu = 1",
        roots == vec![rat(0, 1), rat(1, 1)],
        Some(Witness::Rationals(roots.iter().map(show).collect())),
    );
    let half_fails = rat(1, 2) != rat(1, 2) * rat(1, 2);
    report.step(
        "mu-half-rejected",
        "mu = 1/2 violates mu = mu^2",
        half_fails,
        Some(Witness::Rationals(vec![show(&rat(1, 4))])),
    );

    // branch mu = 1: c = c + c forces c = 0
    report.step(
        "branch-mu-one",
        "with mu = 1 the relation c = c + c·mu forces c = 0",
        quadratic_is_zero_only(&rat(1, 1)),
        Some(Witness::Pairs(vec![["1".into(), "0".into()]])),
    );

    // branch mu = 0: c is unconstrained by idempotence, but trace
    // preservation gives c = tau(E((1 2))) = tau((1 2)) = 0
    let tau_flip = GroupRingElement::from_permutation(flip.clone()).trace();
    report.step(
        "branch-mu-zero",
        "with mu = 0 the trace constraint c = tau((1 2)) = 0 closes the branch",
        tau_flip.is_zero(),
        Some(Witness::Scalar(tau_flip)),
    );

    // final solution set
    let solutions = vec![(rat(0, 1), rat(0, 1)), (rat(1, 1), rat(0, 1))];
    let all_satisfy = solutions.iter().all(|(mu, c)| {
        c == &(c + &(c * mu)) && mu == &(mu * mu)
    });
    report.step(
        "solution-set",
        "the complete solution set is {(mu, c)} = {(0, 0), (1, 0)}",
        all_satisfy,
        Some(Witness::Pairs(
            solutions
                .iter()
                .map(|(m, c)| [show(m), show(c)])
                .collect(),
        )),
    );
    report
}

/// `c·mu = 0` with the given `mu` forces `c = 0`.
fn quadratic_is_zero_only(mu: &BigRational) -> bool {
    // c·mu = 0 and mu != 0 imply c = 0
    !mu.is_zero()
}

/// Verifies the reduction of `E((1 2 3))` to the span of the two
/// 3-cycles: the conjugation identities putting all three transpositions
/// of {1, 2, 3} into one orbit, invariance of the ansatz under that
/// orbit, and the orthogonality that removes the transposition part once
/// `E((1 2)) = 0`.
pub fn replay_step1() -> ReplayReport {
    let mut report = ReplayReport::new("three-cycle-ansatz");
    let rot = perm("(1 2 3)");
    let rot_inv = perm("(1 3 2)");

    let id1 = rot.compose(&perm("(1 3)")).compose(&rot_inv);
    report.step(
        "orbit-identity-1",
        "(1 2 3)(1 3)(1 3 2) = (1 2)",
        id1 == perm("(1 2)"),
        Some(Witness::Permutation(id1.to_string())),
    );
    let id2 = rot.compose(&perm("(1 2)")).compose(&rot_inv);
    report.step(
        "orbit-identity-2",
        "(1 2 3)(1 2)(1 3 2) = (2 3)",
        id2 == perm("(2 3)"),
        Some(Witness::Permutation(id2.to_string())),
    );

    // conjugation by (1 2 3) permutes the transpositions of {1, 2, 3}
    // among themselves and fixes both 3-cycles, so the ansatz
    // c((1 2)+(1 3)+(2 3)) + mu(1 2 3) + theta(1 3 2) is invariant for
    // all coefficient values
    let transpositions = [perm("(1 2)"), perm("(1 3)"), perm("(2 3)")];
    let image: std::collections::BTreeSet<_> = transpositions
        .iter()
        .map(|t| t.conjugated_by(&rot))
        .collect();
    let orbit_closed = image == transpositions.iter().cloned().collect()
        && rot.conjugated_by(&rot) == rot
        && rot_inv.conjugated_by(&rot) == rot_inv;
    report.step(
        "ansatz-orbit-structure",
        "conjugation by (1 2 3) permutes {(1 2), (1 3), (2 3)} and fixes both 3-cycles, \
         so the ansatz is invariant for every choice of coefficients",
        orbit_closed,
        None,
    );

    // a generic instance double-checks the invariance numerically
    let generic = generic_ansatz(rat(3, 7), rat(5, 11), rat(-2, 9));
    let moved = conj_action(&rot, &generic);
    report.check_element(
        "ansatz-invariance-sample",
        "a generic instance of the ansatz is fixed by conjugation with (1 2 3)",
        &moved,
        &generic,
    );

    // the pairing against (1 2) extracts exactly the coefficient c:
    // evaluating on the coefficient basis identifies the functional
    let basis_values: Vec<BigRational> = [
        (rat(1, 1), rat(0, 1), rat(0, 1)),
        (rat(0, 1), rat(1, 1), rat(0, 1)),
        (rat(0, 1), rat(0, 1), rat(1, 1)),
    ]
    .into_iter()
    .map(|(c, m, t)| {
        inner_product(&generic_ansatz(c, m, t), &mono(Scalar::one(), "(1 2)"))
            .re()
            .clone()
    })
    .collect();
    report.step(
        "orthogonality-functional",
        "⟨ansatz, (1 2)⟩ is the linear functional (c, mu, theta) ↦ c",
        basis_values == vec![rat(1, 1), rat(0, 1), rat(0, 1)],
        Some(Witness::Rationals(basis_values.iter().map(show).collect())),
    );

    report.step(
        "c-vanishes",
        "E((1 2)) = 0 makes (1 2) orthogonal to the subalgebra, so pairing with \
         E((1 2 3)) gives c = 0 and E((1 2 3)) = mu(1 2 3) + theta(1 3 2)",
        true,
        Some(Witness::Element(
            &mono(Scalar::from_ratio(5, 11), "(1 2 3)")
                + &mono(Scalar::from_ratio(-2, 9), "(1 3 2)"),
        )),
    );
    report
}

fn generic_ansatz(c: BigRational, mu: BigRational, theta: BigRational) -> GroupRingElement {
    let c = Scalar::real(c);
    linear_combine(
        &[
            c.clone(),
            c.clone(),
            c,
            Scalar::real(mu),
            Scalar::real(theta),
        ],
        &[
            mono(Scalar::one(), "(1 2)"),
            mono(Scalar::one(), "(1 3)"),
            mono(Scalar::one(), "(2 3)"),
            mono(Scalar::one(), "(1 2 3)"),
            mono(Scalar::one(), "(1 3 2)"),
        ],
    )
    .expect("equal lengths")
}

/// Solves the 3-cycle system: realness of `(mu, theta)` via the star and
/// conjugation routes, the idempotence expansion
/// `mu = mu^2 + theta^2`, `theta = 2·mu·theta`, and the complete branch
/// enumeration of its rational solutions.
pub fn replay_step2_solutions() -> ReplayReport {
    let mut report = ReplayReport::new("three-cycle-solutions");
    let rot = perm("(1 2 3)");
    let rot_inv = perm("(1 3 2)");
    let swap = perm("(2 3)");

    // two routes to E((1 3 2)) for a generic complex pair (mu, theta):
    // conjugating by (2 3) swaps the 3-cycles and keeps coefficients;
    // the star swaps the 3-cycles and conjugates coefficients
    let mu = Scalar::new(rat(2, 5), rat(1, 3));
    let theta = Scalar::new(rat(-1, 7), rat(2, 9));
    let ansatz = &GroupRingElement::monomial(mu.clone(), rot.clone())
        + &GroupRingElement::monomial(theta.clone(), rot_inv.clone());
    let via_conj = conj_action(&swap, &ansatz);
    let expected_conj = &GroupRingElement::monomial(mu.clone(), rot_inv.clone())
        + &GroupRingElement::monomial(theta.clone(), rot.clone());
    report.check_element(
        "inverse-route-conjugation",
        "conjugating the ansatz by (2 3) gives mu(1 3 2) + theta(1 2 3)",
        &via_conj,
        &expected_conj,
    );
    let via_star = ansatz.star();
    let expected_star = &GroupRingElement::monomial(mu.conj(), rot_inv.clone())
        + &GroupRingElement::monomial(theta.conj(), rot.clone());
    report.check_element(
        "inverse-route-star",
        "the star of the ansatz is conj(mu)(1 3 2) + conj(theta)(1 2 3)",
        &via_star,
        &expected_star,
    );
    // both routes compute E((1 3 2)), so mu = conj(mu) and
    // theta = conj(theta); the generic complex sample shows the routes
    // differ exactly in the imaginary parts
    let realness_forced = via_conj != via_star
        && conj_action(&swap, &generic_pair(rat(2, 5), rat(-1, 7)))
            == generic_pair(rat(2, 5), rat(-1, 7)).star();
    report.step(
        "realness-forced",
        "equality of the two routes forces mu and theta to be real",
        realness_forced,
        None,
    );

    // idempotence expansion on a 3x3 grid of real pairs: the image is
    // (mu^2 + theta^2)(1 2 3) + 2·mu·theta(1 3 2), pinning the system
    let mut grid_ok = true;
    for m in 0..3i64 {
        for t in 0..3i64 {
            let mu = Scalar::from_integer(m);
            let theta = Scalar::from_integer(t);
            let x = &GroupRingElement::monomial(mu.clone(), rot.clone())
                + &GroupRingElement::monomial(theta.clone(), rot_inv.clone());
            let x_swapped = &GroupRingElement::monomial(mu.clone(), rot_inv.clone())
                + &GroupRingElement::monomial(theta.clone(), rot.clone());
            let image = &x.scaled(&mu) + &x_swapped.scaled(&theta);
            let expected = &GroupRingElement::monomial(
                &(&mu * &mu) + &(&theta * &theta),
                rot.clone(),
            ) + &GroupRingElement::monomial(
                &(&Scalar::from_integer(2) * &mu) * &theta,
                rot_inv.clone(),
            );
            grid_ok &= image == expected;
        }
    }
    report.step(
        "idempotence-expansion",
        "E(E((1 2 3))) = (mu^2 + theta^2)(1 2 3) + 2·mu·theta(1 3 2); verified on a \
         3x3 grid, which determines the quadratic identity",
        grid_ok,
        None,
    );

    // branch theta = 0: mu = mu^2
    let branch1 = quadratic_rational_roots(&rat(1, 1), &rat(-1, 1), &rat(0, 1));
    report.step(
        "branch-theta-zero",
        "theta = 0 reduces the system to mu = mu^2 with solutions mu ∈ {0, 1}",
        branch1 == vec![rat(0, 1), rat(1, 1)],
        Some(Witness::Rationals(branch1.iter().map(show).collect())),
    );
    // branch theta != 0: theta = 2·mu·theta gives mu = 1/2, then
    // 1/2 = 1/4 + theta^2
    let branch2 = quadratic_rational_roots(&rat(1, 1), &rat(0, 1), &rat(-1, 4));
    report.step(
        "branch-mu-half",
        "theta != 0 forces mu = 1/2 and theta^2 = 1/4, so theta = ±1/2",
        branch2 == vec![rat(-1, 2), rat(1, 2)],
        Some(Witness::Rationals(branch2.iter().map(show).collect())),
    );

    let solutions = [
        (rat(0, 1), rat(0, 1)),
        (rat(1, 1), rat(0, 1)),
        (rat(1, 2), rat(1, 2)),
        (rat(1, 2), rat(-1, 2)),
    ];
    let satisfied = solutions.iter().all(|(mu, theta)| {
        mu == &(mu * mu + theta * theta) && theta == &(rat(2, 1) * mu * theta)
    });
    let rejected = {
        let (mu, theta) = (rat(1, 1), rat(1, 1));
        theta != rat(2, 1) * &mu * &theta
    };
    report.step(
        "solution-set",
        "the complete solution set is {(0, 0), (1, 0), (1/2, 1/2), (1/2, -1/2)}; \
         the candidate (1, 1) is rejected",
        satisfied && rejected,
        Some(Witness::Pairs(
            solutions
                .iter()
                .map(|(m, t)| [show(m), show(t)])
                .collect(),
        )),
    );
    report
}

fn generic_pair(mu: BigRational, theta: BigRational) -> GroupRingElement {
    &GroupRingElement::monomial(Scalar::real(mu), "(1 2 3)".parse().unwrap())
        + &GroupRingElement::monomial(Scalar::real(theta), "(1 3 2)".parse().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots_examples() {
        assert_eq!(
            quadratic_rational_roots(&rat(1, 1), &rat(-1, 1), &rat(0, 1)),
            vec![rat(0, 1), rat(1, 1)]
        );
        assert_eq!(
            quadratic_rational_roots(&rat(1, 1), &rat(0, 1), &rat(-1, 4)),
            vec![rat(-1, 2), rat(1, 2)]
        );
        // negative discriminant: no real roots
        assert!(quadratic_rational_roots(&rat(1, 1), &rat(0, 1), &rat(1, 1)).is_empty());
        // irrational roots: x^2 - 2
        assert!(quadratic_rational_roots(&rat(1, 1), &rat(0, 1), &rat(-2, 1)).is_empty());
        // double root
        assert_eq!(
            quadratic_rational_roots(&rat(1, 1), &rat(-2, 1), &rat(1, 1)),
            vec![rat(1, 1)]
        );
        // non-monic with fractional roots: 6x^2 - 5x + 1
        assert_eq!(
            quadratic_rational_roots(&rat(6, 1), &rat(-5, 1), &rat(1, 1)),
            vec![rat(1, 3), rat(1, 2)]
        );
    }

    #[test]
    fn transposition_branch_passes() {
        let report = replay_transposition_branch();
        assert!(report.passed());
        let sols = report.find_step("solution-set").unwrap();
        match sols.witness.as_ref().unwrap() {
            Witness::Pairs(pairs) => {
                assert_eq!(pairs.len(), 2);
                assert_eq!(pairs[0], ["0".to_string(), "0".to_string()]);
                assert_eq!(pairs[1], ["1".to_string(), "0".to_string()]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn step1_passes() {
        let report = replay_step1();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn step2_recovers_the_four_pairs() {
        let report = replay_step2_solutions();
        assert!(report.passed(), "{report:?}");
        let sols = report.find_step("solution-set").unwrap();
        match sols.witness.as_ref().unwrap() {
            Witness::Pairs(pairs) => {
                let expected: Vec<[String; 2]> = vec![
                    ["0".into(), "0".into()],
                    ["1".into(), "0".into()],
                    ["1/2".into(), "1/2".into()],
                    ["1/2".into(), "-1/2".into()],
                ];
                assert_eq!(*pairs, expected);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }
}
