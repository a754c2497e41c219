//! Seeded deterministic sampling of permutations, group-ring elements,
//! and Thoma parameters. All randomized checks in the crate draw from a
//! fixed-seed ChaCha stream so runs are byte-for-byte reproducible.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group_ring::GroupRingElement;
use crate::perm::FinitaryPermutation;
use crate::scalar::Scalar;
use crate::characters::ThomaParameters;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform random permutation of `[max_point]`.
    pub fn permutation(&mut self, max_point: u32) -> FinitaryPermutation {
        let mut images: Vec<u32> = (1..=max_point).collect();
        images.shuffle(&mut self.rng);
        FinitaryPermutation::from_images(&images).expect("shuffle keeps bijectivity")
    }

    pub fn nonidentity_permutation(&mut self, max_point: u32) -> FinitaryPermutation {
        loop {
            let s = self.permutation(max_point);
            if !s.is_identity() {
                return s;
            }
        }
    }

    /// Uniform index in `0..bound`.
    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    /// A rational with numerator in `-9..=9` and denominator in `1..=9`.
    pub fn small_rational(&mut self) -> BigRational {
        let num = self.rng.gen_range(-9i64..=9);
        let den = self.rng.gen_range(1i64..=9);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn nonzero_small_rational(&mut self) -> BigRational {
        loop {
            let r = self.small_rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// A nonzero Gaussian rational; about half the draws are real.
    pub fn scalar(&mut self) -> Scalar {
        if self.rng.gen_bool(0.5) {
            Scalar::real(self.nonzero_small_rational())
        } else {
            loop {
                let z = Scalar::new(self.small_rational(), self.small_rational());
                if !z.is_zero() {
                    return z;
                }
            }
        }
    }

    /// A formal sum of at most `max_terms` monomials supported in
    /// `[max_point]`; coincident permutations merge, so the result may
    /// have fewer terms.
    pub fn group_ring_element(&mut self, max_terms: usize, max_point: u32) -> GroupRingElement {
        let terms = self.rng.gen_range(1..=max_terms);
        GroupRingElement::from_terms(
            (0..terms).map(|_| (self.scalar(), self.permutation(max_point))),
        )
    }

    /// Valid Thoma parameters with a common small denominator and
    /// `Σ alpha + Σ beta <= 1`.
    pub fn thoma_parameters(&mut self) -> ThomaParameters {
        let den = self.rng.gen_range(2i64..=12);
        let mut budget = den;
        let mut pool = Vec::new();
        let entries = self.rng.gen_range(0usize..=4);
        for _ in 0..entries {
            if budget == 0 {
                break;
            }
            let num = self.rng.gen_range(0..=budget);
            budget -= num;
            if num > 0 {
                pool.push(BigRational::new(BigInt::from(num), BigInt::from(den)));
            }
        }
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for entry in pool {
            if self.rng.gen_bool(0.5) {
                alpha.push(entry);
            } else {
                beta.push(entry);
            }
        }
        alpha.sort_by(|a, b| b.cmp(a));
        beta.sort_by(|a, b| b.cmp(a));
        ThomaParameters::new(alpha, beta).expect("construction respects the constraints")
    }
}
