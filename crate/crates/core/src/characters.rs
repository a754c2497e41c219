//! Thoma parameters, class functions on the finitary symmetric group,
//! finite mixtures, Gram matrices, and the vanishing test that pins the
//! regular character down from its value on a 3-cycle.
//!
//! A class function is determined by cycle type. A Thoma parameter pair
//! `(alpha, beta)` evaluates through the factor
//! `Σ a_i^k + (-1)^(k-1) Σ b_j^k` raised to the multiplicity of each
//! cycle length; everything stays in exact rational arithmetic.

pub mod psd;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::perm::{CycleType, FinitaryPermutation};
use crate::sampling::Sampler;
use crate::scalar::{format_fraction, parse_fraction, Scalar};
use crate::subalgebra::NormalSubgroupId;

use self::psd::ScalarMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("invalid Thoma parameters: {0}")]
    InvalidThomaParameters(String),
    #[error("invalid mixture: {0}")]
    InvalidMixture(String),
    #[error("cycle length {0} is below 2")]
    CycleLengthTooSmall(u32),
    #[error("a Gram matrix needs at least one element")]
    EmptyElementSet,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix rows are ragged or empty")]
    RaggedMatrix,
    #[error("invalid class-function table: {0}")]
    InvalidTable(String),
}

/// Two finite weakly decreasing sequences of nonnegative rationals with
/// `Σ alpha + Σ beta <= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThomaParameters {
    alpha: Vec<BigRational>,
    beta: Vec<BigRational>,
}

impl ThomaParameters {
    pub fn new(alpha: Vec<BigRational>, beta: Vec<BigRational>) -> Result<Self, CharError> {
        for (name, list) in [("alpha", &alpha), ("beta", &beta)] {
            for w in list.windows(2) {
                if w[0] < w[1] {
                    return Err(CharError::InvalidThomaParameters(format!(
                        "{name} must be weakly decreasing"
                    )));
                }
            }
            if list.iter().any(|x| x.is_negative()) {
                return Err(CharError::InvalidThomaParameters(format!(
                    "{name} entries must be nonnegative"
                )));
            }
        }
        let total: BigRational = alpha.iter().chain(beta.iter()).cloned().sum();
        if total > BigRational::one() {
            return Err(CharError::InvalidThomaParameters(
                "alpha and beta must sum to at most 1".to_string(),
            ));
        }
        Ok(ThomaParameters { alpha, beta })
    }

    /// Both lists empty; evaluates to the regular character.
    pub fn degenerate() -> Self {
        ThomaParameters {
            alpha: Vec::new(),
            beta: Vec::new(),
        }
    }

    /// `alpha = (1)`: the constant character 1.
    pub fn trivial() -> Self {
        ThomaParameters {
            alpha: vec![BigRational::one()],
            beta: Vec::new(),
        }
    }

    /// `beta = (1)`: the sign character.
    pub fn sign() -> Self {
        ThomaParameters {
            alpha: Vec::new(),
            beta: vec![BigRational::one()],
        }
    }

    pub fn alpha(&self) -> &[BigRational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[BigRational] {
        &self.beta
    }

    pub fn is_degenerate(&self) -> bool {
        self.alpha.iter().all(Zero::is_zero) && self.beta.iter().all(Zero::is_zero)
    }

    /// `Σ a_i^k + (-1)^(k-1) Σ b_j^k` for a cycle length `k >= 2`.
    pub fn factor(&self, k: u32) -> Result<BigRational, CharError> {
        if k < 2 {
            return Err(CharError::CycleLengthTooSmall(k));
        }
        let power_sum = |list: &[BigRational]| {
            list.iter()
                .map(|x| num_traits::pow(x.clone(), k as usize))
                .fold(BigRational::zero(), |acc, x| acc + x)
        };
        let a = power_sum(&self.alpha);
        let b = power_sum(&self.beta);
        Ok(if k % 2 == 1 { a + b } else { a - b })
    }

    /// `Π_k factor(k)^(m_k)`; the empty product at the identity is 1.
    pub fn eval_cycle_type(&self, ct: &CycleType) -> BigRational {
        let mut out = BigRational::one();
        for (k, m) in ct.entries() {
            let f = self.factor(k).expect("cycle types only store lengths >= 2");
            out *= num_traits::pow(f, m as usize);
        }
        out
    }

    pub fn eval(&self, s: &FinitaryPermutation) -> BigRational {
        self.eval_cycle_type(&s.cycle_type())
    }
}

impl Serialize for ThomaParameters {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let render = |v: &[BigRational]| -> Vec<String> { v.iter().map(format_fraction).collect() };
        let mut s = serializer.serialize_struct("ThomaParameters", 2)?;
        s.serialize_field("alpha", &render(&self.alpha))?;
        s.serialize_field("beta", &render(&self.beta))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for ThomaParameters {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            alpha: Vec<String>,
            beta: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let parse_list = |v: Vec<String>| -> Result<Vec<BigRational>, D::Error> {
            v.iter()
                .map(|s| parse_fraction(s).map_err(D::Error::custom))
                .collect()
        };
        ThomaParameters::new(parse_list(raw.alpha)?, parse_list(raw.beta)?)
            .map_err(D::Error::custom)
    }
}

/// A finite convex combination of Thoma characters: positive rational
/// weights summing to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mixture {
    weights: Vec<BigRational>,
    components: Vec<ThomaParameters>,
}

impl Mixture {
    pub fn new(
        weights: Vec<BigRational>,
        components: Vec<ThomaParameters>,
    ) -> Result<Self, CharError> {
        if weights.len() != components.len() {
            return Err(CharError::InvalidMixture(format!(
                "{} weights for {} components",
                weights.len(),
                components.len()
            )));
        }
        if weights.is_empty() {
            return Err(CharError::InvalidMixture("mixture is empty".to_string()));
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(CharError::InvalidMixture(
                "weights must be positive".to_string(),
            ));
        }
        let total: BigRational = weights.iter().cloned().sum();
        if !total.is_one() {
            return Err(CharError::InvalidMixture(format!(
                "weights sum to {total}, not 1"
            )));
        }
        Ok(Mixture {
            weights,
            components,
        })
    }

    pub fn single(params: ThomaParameters) -> Self {
        Mixture {
            weights: vec![BigRational::one()],
            components: vec![params],
        }
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn components(&self) -> &[ThomaParameters] {
        &self.components
    }

    pub fn eval_cycle_type(&self, ct: &CycleType) -> BigRational {
        self.weights
            .iter()
            .zip(&self.components)
            .map(|(w, c)| w * c.eval_cycle_type(ct))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn eval(&self, s: &FinitaryPermutation) -> BigRational {
        self.eval_cycle_type(&s.cycle_type())
    }
}

/// A finite table of cycle-type values with a default; the value at the
/// identity must be 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunctionTable {
    entries: BTreeMap<CycleType, Scalar>,
    default: Scalar,
}

impl ClassFunctionTable {
    pub fn new(entries: BTreeMap<CycleType, Scalar>, default: Scalar) -> Result<Self, CharError> {
        let at_identity = entries
            .get(&CycleType::empty())
            .cloned()
            .unwrap_or_else(|| default.clone());
        if !at_identity.is_one() {
            return Err(CharError::InvalidTable(
                "value at the identity must be 1".to_string(),
            ));
        }
        Ok(ClassFunctionTable { entries, default })
    }

    fn eval_cycle_type(&self, ct: &CycleType) -> Scalar {
        self.entries
            .get(ct)
            .cloned()
            .unwrap_or_else(|| self.default.clone())
    }
}

/// A normalized conjugation-invariant function, evaluated through the
/// cycle type of its argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassFunction {
    Thoma(ThomaParameters),
    Mixture(Mixture),
    /// Indicator of one of the three normal subgroups.
    Indicator(NormalSubgroupId),
    Table(ClassFunctionTable),
}

impl ClassFunction {
    pub fn kind(&self) -> &'static str {
        match self {
            ClassFunction::Thoma(_) => "thoma",
            ClassFunction::Mixture(_) => "mixture",
            ClassFunction::Indicator(_) => "expectation-indicator",
            ClassFunction::Table(_) => "custom-table",
        }
    }

    pub fn eval_cycle_type(&self, ct: &CycleType) -> Scalar {
        match self {
            ClassFunction::Thoma(t) => Scalar::real(t.eval_cycle_type(ct)),
            ClassFunction::Mixture(m) => Scalar::real(m.eval_cycle_type(ct)),
            ClassFunction::Indicator(h) => {
                let inside = match h {
                    NormalSubgroupId::Trivial => ct.is_identity(),
                    NormalSubgroupId::Alternating => ct.parity() == 1,
                    NormalSubgroupId::Full => true,
                };
                if inside {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }
            ClassFunction::Table(t) => t.eval_cycle_type(ct),
        }
    }

    pub fn eval(&self, s: &FinitaryPermutation) -> Scalar {
        self.eval_cycle_type(&s.cycle_type())
    }
}

/// `M[i][j] = phi(s_i⁻¹ · s_j)`; Hermitian whenever `phi` is a trace.
/// Values are cached by cycle type, which the entries factor through.
pub fn gram_matrix(
    phi: &ClassFunction,
    elems: &[FinitaryPermutation],
) -> Result<ScalarMatrix, CharError> {
    if elems.is_empty() {
        return Err(CharError::EmptyElementSet);
    }
    let mut cache: BTreeMap<CycleType, Scalar> = BTreeMap::new();
    let mut eval = |s: &FinitaryPermutation| -> Scalar {
        let ct = s.cycle_type();
        cache
            .entry(ct.clone())
            .or_insert_with(|| phi.eval_cycle_type(&ct))
            .clone()
    };
    let n = elems.len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let inv = elems[i].inverse();
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(eval(&inv.compose(&elems[j])));
        }
        rows.push(row);
    }
    ScalarMatrix::from_rows(rows)
}

/// Outcome of the vanishing test at a 3-cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum RegularCheckOutcome {
    /// The mixture vanishes on a 3-cycle, every component is degenerate,
    /// and all sampled non-identity evaluations are 0.
    Pass { samples_checked: u32 },
    /// The mixture does not vanish on a 3-cycle, so the test says nothing.
    NotApplicable { three_cycle_value: String },
    /// A component with nonzero parameters survived the vanishing value,
    /// or a sampled evaluation failed to vanish.
    Fail {
        component: Option<usize>,
        sample: Option<String>,
    },
}

impl RegularCheckOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, RegularCheckOutcome::Pass { .. })
    }
}

/// If the mixture vanishes on `(1 2 3)`, every component must be
/// degenerate (each factor at k = 3 is a sum of cubes of nonnegative
/// entries) and the whole trace must vanish off the identity; the sample
/// check draws permutations with support in `[10]`.
pub fn check_regular_from_3cycle(mixture: &Mixture, seed: u64) -> RegularCheckOutcome {
    let three_cycle: FinitaryPermutation = "(1 2 3)".parse().expect("fixed literal");
    let value = mixture.eval(&three_cycle);
    if !value.is_zero() {
        return RegularCheckOutcome::NotApplicable {
            three_cycle_value: format_fraction(&value),
        };
    }
    for (idx, component) in mixture.components().iter().enumerate() {
        if !component.is_degenerate() {
            return RegularCheckOutcome::Fail {
                component: Some(idx),
                sample: None,
            };
        }
    }
    let mut sampler = Sampler::new(seed);
    let samples = 100;
    for _ in 0..samples {
        let s = sampler.nonidentity_permutation(10);
        if !mixture.eval(&s).is_zero() {
            return RegularCheckOutcome::Fail {
                component: None,
                sample: Some(s.to_string()),
            };
        }
    }
    RegularCheckOutcome::Pass {
        samples_checked: samples,
    }
}
