//! Character theory of finite symmetric groups: partitions, hook-length
//! dimensions, border-strip (Murnaghan-Nakayama) character values, and a
//! desk-scale experiment comparing scaled-diagram characters against
//! their Thoma limits.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::characters::{CharError, ThomaParameters};
use crate::perm::CycleType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid cycle-type vector: {0}")]
    InvalidCycleTypeVector(String),
    #[error("partition of {lambda} evaluated on a class of {rho}")]
    SizeMismatch { lambda: u32, rho: u32 },
    #[error("cycle length {0} is below 2")]
    InvalidCycleLength(u32),
    #[error("no scaled diagram exists: {0}")]
    InfeasibleDiagram(String),
}

/// A weakly decreasing tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    pub fn new(rows: Vec<u32>) -> Result<Self, SnError> {
        if rows.iter().any(|&r| r == 0) {
            return Err(SnError::InvalidPartition("rows must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(SnError::InvalidPartition(
                "rows must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        if self.rows.is_empty() {
            return Partition::empty();
        }
        let cols = self.rows[0];
        let rows = (1..=cols)
            .map(|j| self.rows.iter().filter(|&&r| r >= j).count() as u32)
            .collect();
        Partition { rows }
    }

    /// `n! / Π hooks`: the number of standard fillings of the diagram.
    pub fn hook_dimension(&self) -> BigInt {
        let n = self.size();
        let conj = self.conjugate();
        let mut denom = BigInt::one();
        for (i, &row) in self.rows.iter().enumerate() {
            for j in 0..row {
                let hook = (row - 1 - j) + (conj.rows[j as usize] - 1 - i as u32) + 1;
                denom *= BigInt::from(hook);
            }
        }
        factorial(n) / denom
    }

    pub fn display_compact(&self) -> String {
        if self.rows.is_empty() {
            return "-".to_string();
        }
        self.rows
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display_compact())
    }
}

impl std::str::FromStr for Partition {
    type Err = SnError;
    fn from_str(s: &str) -> Result<Self, SnError> {
        let rows: Result<Vec<u32>, _> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>())
            .collect();
        let rows = rows.map_err(|_| SnError::InvalidPartition(format!("cannot parse `{s}`")))?;
        Partition::new(rows)
    }
}

/// A conjugacy class of `S_n`: cycle lengths in weakly decreasing order,
/// fixed points included, summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleTypeVector {
    parts: Vec<u32>,
}

impl CycleTypeVector {
    pub fn new(parts: Vec<u32>) -> Result<Self, SnError> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(SnError::InvalidCycleTypeVector(
                "parts must be positive and nonempty".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SnError::InvalidCycleTypeVector(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(CycleTypeVector { parts })
    }

    /// Embeds a sparse cycle type into `S_n` by appending fixed points.
    pub fn from_cycle_type(ct: &CycleType, n: u32) -> Result<Self, SnError> {
        let moved = ct.moved_points();
        if moved > n {
            return Err(SnError::InvalidCycleTypeVector(format!(
                "cycle type moves {moved} points, more than n = {n}"
            )));
        }
        let mut parts = ct.parts();
        parts.extend(std::iter::repeat(1).take((n - moved) as usize));
        CycleTypeVector::new(parts)
    }

    /// The class of a single `k`-cycle inside `S_n`.
    pub fn k_cycle(k: u32, n: u32) -> Result<Self, SnError> {
        if k < 2 {
            return Err(SnError::InvalidCycleLength(k));
        }
        if k > n {
            return Err(SnError::InvalidCycleTypeVector(format!(
                "a {k}-cycle does not fit in S_{n}"
            )));
        }
        let mut parts = vec![k];
        parts.extend(std::iter::repeat(1).take((n - k) as usize));
        CycleTypeVector::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `(-1)^(Σ (part - 1))`.
    pub fn sign(&self) -> i32 {
        let t: u32 = self.parts.iter().map(|p| p - 1).sum();
        if t % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The centralizer order `z = Π k^(m_k) · m_k!`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let k = self.parts[i];
            let mut m = 0u32;
            while i < self.parts.len() && self.parts[i] == k {
                m += 1;
                i += 1;
            }
            z *= BigInt::from(k).pow(m) * factorial(m);
        }
        z
    }

    /// `n! / z`: the number of permutations with this cycle type.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.centralizer_order()
    }

    pub fn display_compact(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl std::fmt::Display for CycleTypeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display_compact())
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                rows: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

pub fn hook_dimension(lambda: &Partition) -> BigInt {
    lambda.hook_dimension()
}

/// The irreducible character value `χ_λ(ρ)` by border-strip recursion
/// over beta-numbers, memoized on (remaining shape, parts consumed) with
/// the parts of `ρ` processed largest first.
pub fn mn_character(lambda: &Partition, rho: &CycleTypeVector) -> Result<BigInt, SnError> {
    if lambda.size() != rho.size() {
        return Err(SnError::SizeMismatch {
            lambda: lambda.size(),
            rho: rho.size(),
        });
    }
    let mut memo: HashMap<(Vec<u32>, usize), BigInt> = HashMap::new();
    Ok(mn_rec(lambda.rows(), rho.parts(), 0, &mut memo))
}

fn mn_rec(
    lambda: &[u32],
    parts: &[u32],
    pos: usize,
    memo: &mut HashMap<(Vec<u32>, usize), BigInt>,
) -> BigInt {
    if pos == parts.len() {
        return BigInt::one();
    }
    if lambda.is_empty() {
        return BigInt::zero();
    }
    let key = (lambda.to_vec(), pos);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = parts[pos];
    let len = lambda.len();
    // beta numbers: strictly decreasing, beta[i] = lambda[i] + (len-1-i)
    let beta: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &row)| row + (len - 1 - i) as u32)
        .collect();
    let mut total = BigInt::zero();
    for i in 0..len {
        if beta[i] < r {
            continue;
        }
        let target = beta[i] - r;
        if beta.contains(&target) {
            continue;
        }
        // strip height = number of beta entries strictly between target
        // and beta[i]
        let height = beta
            .iter()
            .filter(|&&b| b < beta[i] && b > target)
            .count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_lambda: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (len - 1 - j) as u32)
            .filter(|&row| row > 0)
            .collect();
        let sub = mn_rec(&new_lambda, parts, pos + 1, memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `χ_λ(ρ) / χ_λ(identity)` as an exact rational.
pub fn normalized_character(
    lambda: &Partition,
    rho: &CycleTypeVector,
) -> Result<BigRational, SnError> {
    let chi = mn_character(lambda, rho)?;
    Ok(BigRational::new(chi, lambda.hook_dimension()))
}

/// The full character table of `S_n`, rows indexed by partitions and
/// columns by classes, both in reverse-lexicographic order.
pub struct CharacterTable {
    pub n: u32,
    pub partitions: Vec<Partition>,
    pub classes: Vec<CycleTypeVector>,
    pub values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        let parts = partitions(n);
        let classes: Vec<CycleTypeVector> = parts
            .iter()
            .map(|p| CycleTypeVector::new(p.rows().to_vec()).expect("partition rows are valid"))
            .collect();
        let values = parts
            .iter()
            .map(|lambda| {
                classes
                    .iter()
                    .map(|rho| mn_character(lambda, rho).expect("sizes match"))
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            partitions: parts,
            classes,
            values,
        }
    }
}

/// One row of the limit experiment at a given `n`.
#[derive(Debug, Clone, Serialize)]
pub struct LimitRow {
    pub n: u32,
    #[serde(serialize_with = "crate::sn_repr::ser_rat")]
    pub value: BigRational,
    #[serde(serialize_with = "crate::sn_repr::ser_rat")]
    pub target: BigRational,
    #[serde(serialize_with = "crate::sn_repr::ser_rat")]
    pub abs_error: BigRational,
}

pub(crate) fn ser_rat<S: serde::Serializer>(
    r: &BigRational,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::scalar::format_fraction(r))
}

/// Builds, for each `n`, the diagram whose rows scale the alpha entries
/// and whose columns scale the beta entries (largest-remainder rounding
/// to a total of exactly `n` cells), evaluates the normalized character
/// on the `k`-cycle class, and reports the error against the Thoma
/// factor.
pub fn thoma_limit_experiment(
    params: &ThomaParameters,
    k: u32,
    n_values: &[u32],
) -> Result<Vec<LimitRow>, SnError> {
    let target = params.factor(k).map_err(|e| match e {
        CharError::CycleLengthTooSmall(k) => SnError::InvalidCycleLength(k),
        other => SnError::InfeasibleDiagram(other.to_string()),
    })?;
    let mut rows = Vec::new();
    for &n in n_values {
        let lambda = scaled_diagram(params, n)?;
        let rho = CycleTypeVector::k_cycle(k, n)?;
        let value = normalized_character(&lambda, &rho)?;
        let abs_error = (&value - &target).abs();
        rows.push(LimitRow {
            n,
            value,
            target: target.clone(),
            abs_error,
        });
    }
    Ok(rows)
}

/// Largest-remainder rounding of the scaled parameters into a Young
/// diagram with exactly `n` cells: alpha entries become rows, beta
/// entries become columns (through the conjugate partition).
pub fn scaled_diagram(params: &ThomaParameters, n: u32) -> Result<Partition, SnError> {
    let n_rat = BigRational::from_integer(BigInt::from(n));
    // quotas for alpha rows first, then beta columns
    let quotas: Vec<BigRational> = params
        .alpha()
        .iter()
        .chain(params.beta().iter())
        .map(|x| x * &n_rat)
        .collect();
    let alpha_count = params.alpha().len();
    let mut lengths: Vec<u32> = Vec::with_capacity(quotas.len());
    let mut remainders: Vec<(BigRational, usize)> = Vec::with_capacity(quotas.len());
    let mut assigned: u64 = 0;
    for (idx, q) in quotas.iter().enumerate() {
        let floor = q.floor().to_integer();
        let floor_u: u64 = u64::try_from(&floor)
            .map_err(|_| SnError::InfeasibleDiagram("quota overflow".into()))?;
        assigned += floor_u;
        lengths.push(floor_u as u32);
        remainders.push((q - BigRational::from_integer(floor), idx));
    }
    if assigned > u64::from(n) {
        return Err(SnError::InfeasibleDiagram(
            "quotas exceed the number of cells".into(),
        ));
    }
    let mut extra = (u64::from(n) - assigned) as usize;
    if extra > quotas.len() {
        return Err(SnError::InfeasibleDiagram(format!(
            "parameters reach only {assigned} of {n} cells; Σ alpha + Σ beta must equal 1"
        )));
    }
    // largest remainder first; ties resolved by original position
    remainders.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, idx) in remainders {
        if extra == 0 {
            break;
        }
        lengths[idx] += 1;
        extra -= 1;
    }

    let mut row_lengths: Vec<u32> = lengths[..alpha_count]
        .iter()
        .copied()
        .filter(|&r| r > 0)
        .collect();
    row_lengths.sort_unstable_by(|a, b| b.cmp(a));
    let mut col_heights: Vec<u32> = lengths[alpha_count..]
        .iter()
        .copied()
        .filter(|&c| c > 0)
        .collect();
    col_heights.sort_unstable_by(|a, b| b.cmp(a));

    let mut rows = row_lengths;
    if !col_heights.is_empty() {
        let cols = Partition::new(col_heights).expect("sorted positive heights");
        rows.extend(cols.conjugate().rows().iter().copied());
    }
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(SnError::InfeasibleDiagram(
            "alpha rows and beta columns overlap".into(),
        ));
    }
    let diagram = Partition::new(rows)?;
    debug_assert_eq!(diagram.size(), n);
    Ok(diagram)
}
