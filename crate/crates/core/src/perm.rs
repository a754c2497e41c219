//! Permutations of the positive integers with finite support.
//!
//! A permutation is stored sparsely as the map of its moved points;
//! fixed points are never materialized. The normalized form makes
//! structural equality coincide with equality as bijections.
//!
//! Composition applies the right factor first: `(s t)(i) = s(t(i))`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::de::Error as DeError;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("malformed cycle notation: {0}")]
    Syntax(String),
    #[error("point {0} repeats inside one cycle")]
    RepeatedPoint(u32),
    #[error("points must be positive integers, got `{0}`")]
    NonPositivePoint(String),
    #[error("tuples must have equal length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("tuple entry {0} is duplicated")]
    DuplicateEntry(u32),
    #[error("image list is not a permutation of 1..={0}")]
    NotABijection(u32),
}

/// A bijection of the positive integers moving only finitely many points.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinitaryPermutation {
    map: BTreeMap<u32, u32>,
}

impl FinitaryPermutation {
    pub fn identity() -> Self {
        FinitaryPermutation::default()
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// Builds a permutation from a mapping, dropping fixed points and
    /// verifying bijectivity on the moved set.
    pub fn from_mapping(mapping: BTreeMap<u32, u32>) -> Result<Self, PermError> {
        let mut map = BTreeMap::new();
        for (p, q) in mapping {
            if p == 0 || q == 0 {
                return Err(PermError::NonPositivePoint("0".to_string()));
            }
            if p != q {
                map.insert(p, q);
            }
        }
        let domain: BTreeSet<u32> = map.keys().copied().collect();
        let image: BTreeSet<u32> = map.values().copied().collect();
        if domain != image || image.len() != map.len() {
            let max = domain.iter().max().copied().unwrap_or(0);
            return Err(PermError::NotABijection(max));
        }
        Ok(FinitaryPermutation { map })
    }

    /// Builds a permutation of `[n]` from the image list of `1..=n`.
    pub fn from_images(images: &[u32]) -> Result<Self, PermError> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len() + 1];
        for &img in images {
            if img == 0 || img > n || seen[img as usize] {
                return Err(PermError::NotABijection(n));
            }
            seen[img as usize] = true;
        }
        let mut map = BTreeMap::new();
        for (i, &img) in images.iter().enumerate() {
            let p = i as u32 + 1;
            if p != img {
                map.insert(p, img);
            }
        }
        Ok(FinitaryPermutation { map })
    }

    /// The cycle `(p_0 p_1 ... p_{k-1})`. Lists of length 0 or 1 give the
    /// identity.
    pub fn from_cycle(points: &[u32]) -> Result<Self, PermError> {
        let mut seen = BTreeSet::new();
        for &p in points {
            if p == 0 {
                return Err(PermError::NonPositivePoint("0".to_string()));
            }
            if !seen.insert(p) {
                return Err(PermError::RepeatedPoint(p));
            }
        }
        if points.len() < 2 {
            return Ok(Self::identity());
        }
        let mut map = BTreeMap::new();
        for i in 0..points.len() {
            map.insert(points[i], points[(i + 1) % points.len()]);
        }
        Ok(FinitaryPermutation { map })
    }

    /// The transposition `(a b)`; `a` and `b` must differ.
    pub fn transposition(a: u32, b: u32) -> Self {
        assert!(a != b && a > 0 && b > 0, "transposition needs two distinct points");
        let mut map = BTreeMap::new();
        map.insert(a, b);
        map.insert(b, a);
        FinitaryPermutation { map }
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.map.get(&point).copied().unwrap_or(point)
    }

    /// The set of moved points.
    pub fn support(&self) -> BTreeSet<u32> {
        self.map.keys().copied().collect()
    }

    pub fn support_size(&self) -> usize {
        self.map.len()
    }

    pub fn max_support_point(&self) -> Option<u32> {
        self.map.keys().next_back().copied()
    }

    /// Composition applying `rhs` first: `(self ∘ rhs)(i) = self(rhs(i))`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut map = BTreeMap::new();
        for &p in self.map.keys().chain(rhs.map.keys()) {
            let q = self.apply(rhs.apply(p));
            if q != p {
                map.insert(p, q);
            }
        }
        FinitaryPermutation { map }
    }

    pub fn inverse(&self) -> Self {
        let map = self.map.iter().map(|(&p, &q)| (q, p)).collect();
        FinitaryPermutation { map }
    }

    /// `g · self · g⁻¹`, i.e. `self` with every point relabeled through `g`.
    pub fn conjugated_by(&self, g: &Self) -> Self {
        let map = self
            .map
            .iter()
            .map(|(&p, &q)| (g.apply(p), g.apply(q)))
            .collect();
        FinitaryPermutation { map }
    }

    /// Disjoint cycles, each starting at its least point, ordered by least
    /// moved point.
    pub fn cycle_decomposition(&self) -> Vec<Vec<u32>> {
        let mut seen = BTreeSet::new();
        let mut cycles = Vec::new();
        for &start in self.map.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut cur = self.apply(start);
            while cur != start {
                cycle.push(cur);
                seen.insert(cur);
                cur = self.apply(cur);
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = BTreeMap::new();
        for cycle in self.cycle_decomposition() {
            *counts.entry(cycle.len() as u32).or_insert(0) += 1;
        }
        CycleType { counts }
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn parity(&self) -> i32 {
        self.cycle_type().parity()
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 1
    }

    /// A permutation `s` with `s(src_i) = dst_i`, completed to a bijection
    /// of minimal support: the points of `dst` without an assigned image
    /// are matched, in ascending order, to the points of `src` without an
    /// assigned preimage; everything else stays fixed.
    pub fn conjugator(src: &[u32], dst: &[u32]) -> Result<Self, PermError> {
        if src.len() != dst.len() {
            return Err(PermError::LengthMismatch(src.len(), dst.len()));
        }
        for tuple in [src, dst] {
            let mut seen = BTreeSet::new();
            for &p in tuple {
                if p == 0 {
                    return Err(PermError::NonPositivePoint("0".to_string()));
                }
                if !seen.insert(p) {
                    return Err(PermError::DuplicateEntry(p));
                }
            }
        }
        let domain: BTreeSet<u32> = src.iter().copied().collect();
        let range: BTreeSet<u32> = dst.iter().copied().collect();
        let mut map: BTreeMap<u32, u32> = src.iter().copied().zip(dst.iter().copied()).collect();
        let need_image = range.difference(&domain);
        let need_preimage = domain.difference(&range);
        for (&x, &y) in need_image.zip(need_preimage) {
            map.insert(x, y);
        }
        map.retain(|p, q| p != q);
        Ok(FinitaryPermutation { map })
    }
}

/// The multiset of cycle lengths (each >= 2) of a permutation; the empty
/// map is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    counts: BTreeMap<u32, u32>,
}

impl CycleType {
    pub fn empty() -> Self {
        CycleType::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Self, PermError> {
        let mut counts = BTreeMap::new();
        for (k, m) in pairs {
            if k < 2 || m == 0 {
                return Err(PermError::Syntax(format!(
                    "cycle type entries need length >= 2 and multiplicity >= 1, got {k}:{m}"
                )));
            }
            *counts.entry(k).or_insert(0) += m;
        }
        Ok(CycleType { counts })
    }

    pub fn is_identity(&self) -> bool {
        self.counts.is_empty()
    }

    /// Iterates `(cycle length, multiplicity)` pairs, lengths ascending.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts.iter().map(|(&k, &m)| (k, m))
    }

    pub fn multiplicity(&self, k: u32) -> u32 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// Total number of moved points, `Σ k·m_k`.
    pub fn moved_points(&self) -> u32 {
        self.entries().map(|(k, m)| k * m).sum()
    }

    /// `(-1)^(Σ (k-1)·m_k)`.
    pub fn parity(&self) -> i32 {
        let transpositions: u32 = self.entries().map(|(k, m)| (k - 1) * m).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths in weakly decreasing order, with multiplicity.
    pub fn parts(&self) -> Vec<u32> {
        let mut parts = Vec::new();
        for (k, m) in self.entries() {
            for _ in 0..m {
                parts.push(k);
            }
        }
        parts.reverse();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.parts().iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(self.counts.len()))?;
        for (k, v) in &self.counts {
            m.serialize_entry(&k.to_string(), v)?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for CycleType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, u32> = BTreeMap::deserialize(deserializer)?;
        let mut pairs = Vec::new();
        for (k, m) in raw {
            let k: u32 = k.parse().map_err(D::Error::custom)?;
            pairs.push((k, m));
        }
        CycleType::from_pairs(pairs).map_err(D::Error::custom)
    }
}

impl fmt::Display for FinitaryPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycle_decomposition();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in cycles {
            let pts: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for FinitaryPermutation {
    type Err = PermError;

    /// Accepts `"e"`, `"()"`, or a product of parenthesized cycles of
    /// distinct positive integers separated by spaces or commas; cycles
    /// multiply left to right.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let text = s.trim();
        if text == "e" {
            return Ok(Self::identity());
        }
        if text.is_empty() {
            return Err(PermError::Syntax("empty input".to_string()));
        }
        let mut groups: Vec<Vec<u32>> = Vec::new();
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if chars[i].is_whitespace() {
                i += 1;
                continue;
            }
            if chars[i] != '(' {
                return Err(PermError::Syntax(format!(
                    "expected '(' but found `{}`",
                    chars[i]
                )));
            }
            i += 1;
            let mut group = Vec::new();
            loop {
                while i < chars.len() && (chars[i].is_whitespace() || chars[i] == ',') {
                    i += 1;
                }
                if i >= chars.len() {
                    return Err(PermError::Syntax("unterminated cycle".to_string()));
                }
                if chars[i] == ')' {
                    i += 1;
                    break;
                }
                let start = i;
                if chars[i] == '-' || chars[i] == '+' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let token: String = chars[start..i].iter().collect();
                if token.is_empty() || !token.chars().any(|c| c.is_ascii_digit()) {
                    return Err(PermError::Syntax(format!(
                        "unexpected character `{}` inside cycle",
                        chars[start]
                    )));
                }
                let value: i64 = token
                    .parse()
                    .map_err(|_| PermError::Syntax(format!("bad integer `{token}`")))?;
                if value <= 0 {
                    return Err(PermError::NonPositivePoint(token));
                }
                if value > u32::MAX as i64 {
                    return Err(PermError::Syntax(format!("point `{token}` is too large")));
                }
                group.push(value as u32);
            }
            groups.push(group);
        }
        if groups.len() == 1 && groups[0].is_empty() {
            return Ok(Self::identity());
        }
        let mut product = Self::identity();
        for group in &groups {
            if group.is_empty() {
                return Err(PermError::Syntax("empty cycle in a product".to_string()));
            }
            if group.len() == 1 {
                return Err(PermError::Syntax(format!(
                    "cycle ({}) needs at least two points",
                    group[0]
                )));
            }
            let mut seen = BTreeSet::new();
            for &p in group {
                if !seen.insert(p) {
                    return Err(PermError::RepeatedPoint(p));
                }
            }
            product = product.compose(&Self::from_cycle(group)?);
        }
        Ok(product)
    }
}

impl Serialize for FinitaryPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FinitaryPermutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// All permutations of `[n] = {1, ..., n}` in lexicographic order of their
/// image tuples. Intended for small `n`.
pub fn symmetric_group(n: u32) -> Vec<FinitaryPermutation> {
    assert!(n <= 8, "symmetric_group enumerates n! elements; use n <= 8");
    let mut out = Vec::new();
    let mut images: Vec<u32> = Vec::with_capacity(n as usize);
    let mut used = vec![false; n as usize + 1];
    fn rec(n: u32, images: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<FinitaryPermutation>) {
        if images.len() == n as usize {
            out.push(FinitaryPermutation::from_images(images).expect("valid by construction"));
            return;
        }
        for v in 1..=n {
            if !used[v as usize] {
                used[v as usize] = true;
                images.push(v);
                rec(n, images, used, out);
                images.pop();
                used[v as usize] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    out
}

/// All permutations of `[n]` with even parity.
pub fn alternating_group(n: u32) -> Vec<FinitaryPermutation> {
    symmetric_group(n).into_iter().filter(|p| p.is_even()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> FinitaryPermutation {
        s.parse().unwrap()
    }

    /// Dense function-table composition, independent of the sparse path.
    fn dense_compose(a: &FinitaryPermutation, b: &FinitaryPermutation, n: u32) -> Vec<u32> {
        (1..=n).map(|i| a.apply(b.apply(i))).collect()
    }

    fn dense(a: &FinitaryPermutation, n: u32) -> Vec<u32> {
        (1..=n).map(|i| a.apply(i)).collect()
    }

    #[test]
    fn parse_three_cycle_mapping() {
        let s = p("(1 2 3)");
        assert_eq!(s.apply(1), 2);
        assert_eq!(s.apply(2), 3);
        assert_eq!(s.apply(3), 1);
        assert_eq!(s.apply(7), 7);
    }

    #[test]
    fn parse_identity_tokens() {
        assert!(p("e").is_identity());
        assert!(p("()").is_identity());
        assert!(p("  e  ").is_identity());
    }

    #[test]
    fn parse_disjoint_product_matches_table_oracle() {
        let s = p("(1 2)(3 4)");
        let a = p("(1 2)");
        let b = p("(3 4)");
        assert_eq!(dense(&s, 5), dense_compose(&a, &b, 5));
    }

    #[test]
    fn parse_accepts_commas_and_whitespace() {
        assert_eq!(p("(1,2,3)"), p("(1 2 3)"));
        assert_eq!(p(" ( 1 , 2 ) ( 3 4 ) "), p("(1 2)(3 4)"));
    }

    #[test]
    fn parse_rejects_malformed_inputs() {
        assert!(matches!(
            "(1 1 2)".parse::<FinitaryPermutation>(),
            Err(PermError::RepeatedPoint(1))
        ));
        assert!(matches!(
            "(0 1)".parse::<FinitaryPermutation>(),
            Err(PermError::NonPositivePoint(_))
        ));
        assert!(matches!(
            "(-3 1)".parse::<FinitaryPermutation>(),
            Err(PermError::NonPositivePoint(_))
        ));
        assert!("(1 2".parse::<FinitaryPermutation>().is_err());
        assert!("(1)".parse::<FinitaryPermutation>().is_err());
        assert!("1 2".parse::<FinitaryPermutation>().is_err());
        assert!("(1 2)x".parse::<FinitaryPermutation>().is_err());
        assert!("(1 2)()".parse::<FinitaryPermutation>().is_err());
    }

    #[test]
    fn compose_triple_product_is_a_transposition() {
        let result = p("(1 2 3)").compose(&p("(1 3)")).compose(&p("(1 3 2)"));
        assert_eq!(result, p("(1 2)"));
    }

    #[test]
    fn compose_with_identity() {
        let s = p("(2 5 9)(1 4)");
        assert_eq!(s.compose(&FinitaryPermutation::identity()), s);
        assert_eq!(FinitaryPermutation::identity().compose(&s), s);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let result = p("(1 2)").compose(&p("(2 3)"));
        assert_eq!(result, p("(1 2 3)"));
        assert_eq!(dense(&result, 4), dense_compose(&p("(1 2)"), &p("(2 3)"), 4));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("(1 2 3)").inverse(), p("(1 3 2)"));
        assert!(FinitaryPermutation::identity().inverse().is_identity());
        let invol = p("(1 2)(3 4)");
        assert_eq!(invol.inverse(), invol);
        assert!(invol.compose(&invol.inverse()).is_identity());
    }

    #[test]
    fn support_examples() {
        assert_eq!(p("(1 2)").support(), BTreeSet::from([1, 2]));
        assert!(FinitaryPermutation::identity().support().is_empty());
        let conj = p("(1 2 3)").conjugated_by(&p("(1 5)"));
        assert_eq!(conj.support(), BTreeSet::from([2, 3, 5]));
    }

    #[test]
    fn cycle_decomposition_matches_orbit_oracle() {
        let s = p("(3 4 5)(1 2)");
        assert_eq!(s.cycle_decomposition(), vec![vec![1, 2], vec![3, 4, 5]]);
        assert!(FinitaryPermutation::identity().cycle_decomposition().is_empty());
        assert_eq!(p("(1 2 3)").cycle_decomposition(), vec![vec![1, 2, 3]]);

        // independent orbit follower over the dense table
        let table = dense(&s, 6);
        let mut visited = vec![false; 7];
        let mut cycles = Vec::new();
        for start in 1..=6u32 {
            if visited[start as usize] || table[start as usize - 1] == start {
                continue;
            }
            let mut cyc = vec![start];
            visited[start as usize] = true;
            let mut cur = table[start as usize - 1];
            while cur != start {
                cyc.push(cur);
                visited[cur as usize] = true;
                cur = table[cur as usize - 1];
            }
            cycles.push(cyc);
        }
        assert_eq!(s.cycle_decomposition(), cycles);

        // the decomposition multiplies back to s
        let product = s
            .cycle_decomposition()
            .iter()
            .fold(FinitaryPermutation::identity(), |acc, c| {
                acc.compose(&FinitaryPermutation::from_cycle(c).unwrap())
            });
        assert_eq!(product, s);
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(
            p("(1 2 3)").cycle_type(),
            CycleType::from_pairs([(3, 1)]).unwrap()
        );
        assert!(FinitaryPermutation::identity().cycle_type().is_identity());
        assert_eq!(
            p("(1 2)(3 4 5)").cycle_type(),
            CycleType::from_pairs([(2, 1), (3, 1)]).unwrap()
        );
        assert_eq!(p("(1 2)(3 4 5)").cycle_type().parts(), vec![3, 2]);
    }

    /// Parity oracle: count inversions of the dense image table.
    fn inversion_parity(s: &FinitaryPermutation, n: u32) -> i32 {
        let t = dense(s, n);
        let mut inv = 0;
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                if t[i] > t[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn parity_examples_match_inversion_oracle() {
        for (text, expected) in [("(1 2)", -1), ("(1 2 3)", 1), ("(1 2)(3 4 5)", -1), ("e", 1)] {
            let s = p(text);
            assert_eq!(s.parity(), expected, "{text}");
            assert_eq!(s.parity(), inversion_parity(&s, 6), "{text}");
        }
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(p("(1 2 3)").conjugated_by(&p("(3 4)")), p("(1 2 4)"));
        let s = p("(2 6)(3 9)");
        assert_eq!(s.conjugated_by(&FinitaryPermutation::identity()), s);
        // pointwise relabeling oracle
        let t = p("(1 5)");
        let conj = p("(1 2 3)").conjugated_by(&t);
        assert_eq!(conj, p("(5 2 3)"));
        for i in 1..=6 {
            assert_eq!(conj.apply(t.apply(i)), t.apply(p("(1 2 3)").apply(i)));
        }
    }

    #[test]
    fn conjugator_examples() {
        assert!(FinitaryPermutation::conjugator(&[1, 2], &[1, 2])
            .unwrap()
            .is_identity());
        assert_eq!(
            FinitaryPermutation::conjugator(&[1, 2, 3], &[2, 1, 3]).unwrap(),
            p("(1 2)")
        );
        // transporting (1 2 3) onto (i j k)
        for (i, j, k) in [(4, 7, 2), (2, 3, 1), (5, 6, 7)] {
            let s = FinitaryPermutation::conjugator(&[1, 2, 3], &[i, j, k]).unwrap();
            assert_eq!(s.apply(1), i);
            assert_eq!(s.apply(2), j);
            assert_eq!(s.apply(3), k);
            let moved = p("(1 2 3)").conjugated_by(&s);
            assert_eq!(moved, FinitaryPermutation::from_cycle(&[i, j, k]).unwrap());
        }
    }

    #[test]
    fn conjugator_minimal_completion_is_deterministic() {
        let s = FinitaryPermutation::conjugator(&[1, 2], &[3, 4]).unwrap();
        assert_eq!(s, p("(1 3)(2 4)"));
    }

    #[test]
    fn conjugator_rejects_bad_tuples() {
        assert!(matches!(
            FinitaryPermutation::conjugator(&[1, 2], &[3]),
            Err(PermError::LengthMismatch(2, 1))
        ));
        assert!(matches!(
            FinitaryPermutation::conjugator(&[1, 1], &[2, 3]),
            Err(PermError::DuplicateEntry(1))
        ));
        assert!(matches!(
            FinitaryPermutation::conjugator(&[1, 2], &[3, 3]),
            Err(PermError::DuplicateEntry(3))
        ));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("(3 4 5)(1 2)").to_string(), "(1 2)(3 4 5)");
        assert_eq!(p("(2 3 1)").to_string(), "(1 2 3)");
        assert_eq!(FinitaryPermutation::identity().to_string(), "e");
    }

    #[test]
    fn symmetric_group_sizes_and_order() {
        let s3 = symmetric_group(3);
        assert_eq!(s3.len(), 6);
        assert!(s3[0].is_identity());
        assert_eq!(symmetric_group(4).len(), 24);
        assert_eq!(alternating_group(4).len(), 12);
        assert_eq!(symmetric_group(0).len(), 1);
    }
}
