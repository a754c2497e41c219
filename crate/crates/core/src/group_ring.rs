//! The group ring of the finitary symmetric group over exact
//! Gaussian-rational scalars: finitely supported formal sums with
//! convolution product, involution, trace, and inner product.
//!
//! Zero coefficients are pruned eagerly, so structural equality is
//! mathematical equality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::perm::FinitaryPermutation;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("coefficient and element lists differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
}

/// A finitely supported formal sum `Σ c_s · s` of permutations with exact
/// complex-rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<FinitaryPermutation, Scalar>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    /// The multiplicative unit: the identity permutation with coefficient 1.
    pub fn one() -> Self {
        GroupRingElement::from_permutation(FinitaryPermutation::identity())
    }

    pub fn from_permutation(p: FinitaryPermutation) -> Self {
        GroupRingElement::monomial(Scalar::one(), p)
    }

    pub fn monomial(coeff: Scalar, p: FinitaryPermutation) -> Self {
        let mut e = GroupRingElement::zero();
        e.add_term(p, coeff);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Scalar, FinitaryPermutation)>>(terms: I) -> Self {
        let mut e = GroupRingElement::zero();
        for (c, p) in terms {
            e.add_term(p, c);
        }
        e
    }

    fn add_term(&mut self, p: FinitaryPermutation, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FinitaryPermutation, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &FinitaryPermutation) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = GroupRingElement::zero();
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a * c);
        }
        out
    }

    /// The involution `Σ c_s s ↦ Σ c̄_s s⁻¹`.
    pub fn star(&self) -> Self {
        let mut out = GroupRingElement::zero();
        for (p, c) in &self.terms {
            out.add_term(p.inverse(), c.conj());
        }
        out
    }

    /// The canonical trace: the coefficient of the identity permutation.
    pub fn trace(&self) -> Scalar {
        self.coefficient(&FinitaryPermutation::identity())
    }

    /// `Σ |c_s|²`, which equals `⟨x, x⟩`.
    pub fn two_norm_sqr(&self) -> BigRational {
        self.terms
            .values()
            .fold(BigRational::zero(), |acc, c| acc + c.norm_sqr())
    }

    /// Union of the supports of all permutations appearing with a nonzero
    /// coefficient.
    pub fn support_points(&self) -> BTreeSet<u32> {
        let mut pts = BTreeSet::new();
        for p in self.terms.keys() {
            pts.extend(p.support());
        }
        pts
    }

    /// Terms sorted by the canonical print of their permutation.
    fn sorted_terms(&self) -> Vec<(String, &FinitaryPermutation, &Scalar)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(p, c)| (p.to_string(), p, c))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

/// Convolution product using permutation composition.
pub fn multiply(x: &GroupRingElement, y: &GroupRingElement) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for (s, a) in &x.terms {
        for (t, b) in &y.terms {
            out.add_term(s.compose(t), a * b);
        }
    }
    out
}

/// `Σ coeffs[i] · elems[i]`, with zero terms dropped.
pub fn linear_combine(
    coeffs: &[Scalar],
    elems: &[GroupRingElement],
) -> Result<GroupRingElement, RingError> {
    if coeffs.len() != elems.len() {
        return Err(RingError::LengthMismatch(coeffs.len(), elems.len()));
    }
    let mut out = GroupRingElement::zero();
    for (c, e) in coeffs.iter().zip(elems) {
        for (p, a) in &e.terms {
            out.add_term(p.clone(), a * c);
        }
    }
    Ok(out)
}

/// `⟨a, b⟩ = trace(b* · a)`; positive definite on the permutation basis.
pub fn inner_product(a: &GroupRingElement, b: &GroupRingElement) -> Scalar {
    multiply(&b.star(), a).trace()
}

/// The conjugation action `x ↦ g · x · g⁻¹`, applied term by term.
pub fn conj_action(g: &FinitaryPermutation, x: &GroupRingElement) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for (p, c) in &x.terms {
        out.add_term(p.conjugated_by(g), c.clone());
    }
    out
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        self.scaled(&Scalar::from_integer(-1))
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        multiply(self, rhs)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (pstr, _, c)) in self.sorted_terms().into_iter().enumerate() {
            if c.is_real() {
                let r = c.re();
                let negative = r.is_negative();
                let mag = r.abs();
                let body = if mag.is_one() {
                    pstr
                } else {
                    format!("{}*{}", mag, pstr)
                };
                if idx == 0 {
                    if negative {
                        write!(f, "-")?;
                    }
                    write!(f, "{body}")?;
                } else if negative {
                    write!(f, " - {body}")?;
                } else {
                    write!(f, " + {body}")?;
                }
            } else {
                let body = format!("({})*{}", c, pstr);
                if idx == 0 {
                    write!(f, "{body}")?;
                } else {
                    write!(f, " + {body}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: Scalar,
    perm: String,
}

impl Serialize for GroupRingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<TermRepr> = self
            .sorted_terms()
            .into_iter()
            .map(|(pstr, _, c)| TermRepr {
                coeff: c.clone(),
                perm: pstr,
            })
            .collect();
        reprs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroupRingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let reprs: Vec<TermRepr> = Vec::deserialize(deserializer)?;
        let mut out = GroupRingElement::zero();
        for t in reprs {
            let p: FinitaryPermutation = t.perm.parse().map_err(D::Error::custom)?;
            GroupRingElement::add_term(&mut out, p, t.coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(s: &str) -> FinitaryPermutation {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GroupRingElement {
        GroupRingElement::from_permutation(p(s))
    }

    /// `Σ (num/den)·perm` from integer fraction parts.
    fn combo(parts: &[(i64, i64, &str)]) -> GroupRingElement {
        GroupRingElement::from_terms(
            parts
                .iter()
                .map(|&(n, d, s)| (Scalar::from_ratio(n, d), p(s))),
        )
    }

    #[test]
    fn linear_combine_examples() {
        let x = g("(1 2)");
        let y = g("(3 4 5)");
        let one = Scalar::one();
        let zero = Scalar::zero();
        assert_eq!(
            linear_combine(&[one.clone(), zero], &[x.clone(), y]).unwrap(),
            x
        );
        let sum = linear_combine(&[one.clone(), one.clone()], &[g("(1 4 3)"), g("(1 3 4)")])
            .unwrap();
        assert_eq!(sum, combo(&[(1, 1, "(1 4 3)"), (1, 1, "(1 3 4)")]));
        assert!(linear_combine(
            &[one.clone(), Scalar::from_integer(-1)],
            &[x.clone(), x.clone()]
        )
        .unwrap()
        .is_zero());
        assert!(matches!(
            linear_combine(&[one], &[]),
            Err(RingError::LengthMismatch(1, 0))
        ));
    }

    #[test]
    fn product_of_symmetrized_three_cycles() {
        let lhs = multiply(
            &combo(&[(1, 1, "(1 2 3)"), (1, 1, "(1 3 2)")]),
            &combo(&[(1, 1, "(1 2 4)"), (1, 1, "(1 4 2)")]),
        );
        let expected = combo(&[
            (1, 1, "(1 3)(2 4)"),
            (1, 1, "(1 4 3)"),
            (1, 1, "(2 4 3)"),
            (1, 1, "(1 4)(2 3)"),
        ]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn product_of_antisymmetrized_three_cycles() {
        let lhs = multiply(
            &combo(&[(1, 1, "(1 2 3)"), (-1, 1, "(1 3 2)")]),
            &combo(&[(1, 1, "(1 2 4)"), (-1, 1, "(1 4 2)")]),
        );
        let expected = combo(&[
            (1, 1, "(1 3)(2 4)"),
            (-1, 1, "(1 4 3)"),
            (-1, 1, "(2 4 3)"),
            (1, 1, "(1 4)(2 3)"),
        ]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn unit_is_two_sided() {
        let x = combo(&[(1, 2, "(1 2)"), (-2, 3, "(2 5 3)")]);
        assert_eq!(multiply(&GroupRingElement::one(), &x), x);
        assert_eq!(multiply(&x, &GroupRingElement::one()), x);
    }

    #[test]
    fn star_swaps_three_cycles_and_conjugates_coefficients() {
        let mu = Scalar::new(rat(1, 2), rat(1, 3));
        let theta = Scalar::new(rat(1, 5), rat(-2, 7));
        let x = GroupRingElement::from_terms([
            (mu.clone(), p("(1 2 3)")),
            (theta.clone(), p("(1 3 2)")),
        ]);
        let expected = GroupRingElement::from_terms([
            (mu.conj(), p("(1 3 2)")),
            (theta.conj(), p("(1 2 3)")),
        ]);
        assert_eq!(x.star(), expected);
        assert_eq!(GroupRingElement::one().star(), GroupRingElement::one());
        assert_eq!(x.star().star(), x);
    }

    #[test]
    fn star_is_antimultiplicative() {
        let x = combo(&[(1, 1, "(1 2 3)"), (2, 1, "(1 4)")]);
        let y = combo(&[(1, 3, "(2 3)"), (-1, 1, "(1 2)(3 4)")]);
        assert_eq!(multiply(&x, &y).star(), multiply(&y.star(), &x.star()));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(GroupRingElement::one().trace(), Scalar::one());
        assert_eq!(g("(1 2)").trace(), Scalar::zero());
        // expanding ((1 2 3)+(1 3 2))·((1 3 2)+(1 2 3)) by hand gives
        // 2e + (1 2 3) + (1 3 2), so the trace is 2
        let x = combo(&[(1, 1, "(1 2 3)"), (1, 1, "(1 3 2)")]);
        assert_eq!(multiply(&x, &x.star()).trace(), Scalar::from_integer(2));
    }

    #[test]
    fn inner_product_examples() {
        let a = combo(&[(1, 2, "(1 4 2)"), (1, 2, "(1 2 4)")]);
        let b = combo(&[(1, 1, "(1 2)(3 4)"), (-1, 1, "(1 4 2)")]);
        assert_eq!(inner_product(&a, &b), Scalar::from_ratio(-1, 2));

        let s = g("(2 7)(3 5 6)");
        assert_eq!(inner_product(&s, &s), Scalar::one());
        assert_eq!(inner_product(&g("(1 2)"), &g("(1 3)")), Scalar::zero());
    }

    #[test]
    fn inner_product_is_the_coefficient_norm() {
        let x = combo(&[(1, 2, "(1 2)"), (-3, 4, "(2 3 4)"), (5, 1, "e")]);
        assert_eq!(
            inner_product(&x, &x),
            Scalar::real(rat(1, 4) + rat(9, 16) + rat(25, 1))
        );
        assert_eq!(inner_product(&x, &x).re(), &x.two_norm_sqr());
    }

    #[test]
    fn conj_action_examples() {
        let mu = Scalar::from_ratio(2, 3);
        let theta = Scalar::from_ratio(-1, 5);
        let x = GroupRingElement::from_terms([
            (mu.clone(), p("(1 2 3)")),
            (theta.clone(), p("(1 3 2)")),
        ]);
        let moved = conj_action(&p("(3 4)"), &x);
        let expected = GroupRingElement::from_terms([
            (mu, p("(1 2 4)")),
            (theta, p("(1 4 2)")),
        ]);
        assert_eq!(moved, expected);
        assert_eq!(conj_action(&FinitaryPermutation::identity(), &x), x);
    }

    #[test]
    fn conj_action_on_antisymmetric_product_expansion() {
        let rhs = combo(&[
            (1, 1, "(1 3)(2 4)"),
            (-1, 1, "(1 4 3)"),
            (-1, 1, "(2 4 3)"),
            (1, 1, "(1 4)(2 3)"),
        ]);
        let moved = conj_action(&p("(2 3)"), &rhs);
        let expected = combo(&[
            (1, 1, "(1 2)(3 4)"),
            (-1, 1, "(1 4 2)"),
            (-1, 1, "(3 4 2)"),
            (1, 1, "(1 4)(2 3)"),
        ]);
        assert_eq!(moved, expected);
    }

    #[test]
    fn display_orders_terms_by_canonical_print() {
        let x = combo(&[
            (-1, 1, "(2 4 3)"),
            (1, 1, "(1 3)(2 4)"),
            (1, 1, "(1 4)(2 3)"),
            (-1, 1, "(1 4 3)"),
        ]);
        assert_eq!(
            x.to_string(),
            "(1 3)(2 4) - (1 4 3) + (1 4)(2 3) - (2 4 3)"
        );
        assert_eq!(GroupRingElement::zero().to_string(), "0");
        let half = combo(&[(1, 2, "(1 2 3)"), (1, 2, "(1 3 2)")]);
        assert_eq!(half.to_string(), "1/2*(1 2 3) + 1/2*(1 3 2)");
    }

    #[test]
    fn serde_round_trip_sorted_by_perm() {
        let x = combo(&[(1, 2, "(1 2)"), (-1, 3, "e")]);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"[{"coeff":{"re":"1/2","im":"0"},"perm":"(1 2)"},{"coeff":{"re":"-1/3","im":"0"},"perm":"e"}]"#
        );
        let back: GroupRingElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        // duplicate terms in the input combine
        let merged: GroupRingElement = serde_json::from_str(
            r#"[{"coeff":"1/2","perm":"(1 2)"},{"coeff":"1/2","perm":"(2 1)"}]"#,
        )
        .unwrap();
        assert_eq!(merged, g("(1 2)"));
    }
}
