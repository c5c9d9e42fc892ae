//! Exact scalar fields.
//!
//! Two concrete fields implement [`Field`]: [`Zp`], the prime field of a
//! word-sized prime, and [`Rationals`], arbitrary-precision fractions. All
//! linear algebra in the crate is generic over the trait, so the same
//! Jacobian code runs modulo a prime for speed or over ℚ for certification.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Smallest modulus accepted for rank oracles.
pub const MIN_ORACLE_MODULUS: u64 = 1 << 20;

/// Default half-width of the integer range used for random rationals.
pub const DEFAULT_RATIONAL_BOUND: i64 = 1_000_000;

pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, value: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Uniform residue for prime fields, uniform bounded integer for ℚ.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn kind(&self) -> FieldKind;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Determinant of a square row-major block. Overridden by fields that
    /// prefer fraction-free elimination.
    fn determinant(&self, n: usize, data: Vec<Self::Elem>) -> Self::Elem {
        linalg::gauss_det(self, n, data)
    }

    fn rank_of(&self, rows: usize, cols: usize, data: Vec<Self::Elem>) -> usize {
        linalg::gauss_rank(self, rows, cols, data)
    }
}

/// The prime field Z/pZ for a prime p < 2^62.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Zp {
    p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 62 {
            return Err(Error::InvalidParams(format!("modulus {p} exceeds 2^62")));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Zp { p })
    }

    /// Like [`Zp::new`] but additionally rejects moduli too small for
    /// Monte Carlo rank computations.
    pub fn for_oracle(p: u64) -> Result<Self> {
        if p < MIN_ORACLE_MODULUS {
            return Err(Error::InvalidParams(format!(
                "oracle modulus {p} is below 2^20"
            )));
        }
        Zp::new(p)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = ((v % &m) + &m) % &m;
        r.try_into().expect("residue fits in u64")
    }

    /// Image of a rational number, `None` if the denominator vanishes mod p.
    pub fn reduce_rational(&self, v: &BigRational) -> Option<u64> {
        let den = self.reduce_bigint(v.denom());
        if den == 0 {
            return None;
        }
        let num = self.reduce_bigint(v.numer());
        Some(self.mul(&num, &self.inv(&den).ok()?))
    }
}

impl Field for Zp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, value: i64) -> u64 {
        self.reduce_i64(value)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::ZeroInverse);
        }
        // extended Euclid on (a, p)
        let (mut old_r, mut r) = (*a as i128, self.p as i128);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        Ok(old_s.rem_euclid(self.p as i128) as u64)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn kind(&self) -> FieldKind {
        FieldKind::PrimeField { modulus: self.p }
    }
}

/// The rational numbers, with random sampling from `[-bound, bound]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals {
    bound: i64,
}

impl Default for Rationals {
    fn default() -> Self {
        Rationals {
            bound: DEFAULT_RATIONAL_BOUND,
        }
    }
}

impl Rationals {
    pub fn with_bound(bound: i64) -> Self {
        Rationals { bound: bound.abs() }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, value: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(value))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-self.bound..=self.bound))
    }

    fn kind(&self) -> FieldKind {
        FieldKind::Rationals
    }

    fn determinant(&self, n: usize, data: Vec<BigRational>) -> BigRational {
        let (ints, scale) = clear_row_denominators(n, n, &data);
        let det = linalg::bareiss_det(n, ints);
        BigRational::new(det, scale)
    }

    fn rank_of(&self, rows: usize, cols: usize, data: Vec<BigRational>) -> usize {
        let (ints, _) = clear_row_denominators(rows, cols, &data);
        linalg::bareiss_rank(rows, cols, ints)
    }
}

/// Scales every row by the lcm of its denominators. Returns the integer
/// matrix and the product of the row multipliers.
fn clear_row_denominators(rows: usize, cols: usize, data: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    use num_integer::Integer;
    let mut out = Vec::with_capacity(rows * cols);
    let mut scale = BigInt::one();
    for row in data.chunks(cols.max(1)).take(rows) {
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for x in row {
            out.push(x.numer() * (&lcm / x.denom()));
        }
        scale *= lcm;
    }
    (out, scale)
}

/// Runtime description of a field, used in reports and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldKind {
    Rationals,
    PrimeField { modulus: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub kind: FieldKind,
    pub seed: u64,
}

impl FieldSpec {
    pub fn rationals(seed: u64) -> Self {
        FieldSpec {
            kind: FieldKind::Rationals,
            seed,
        }
    }

    pub fn prime(modulus: u64, seed: u64) -> Result<Self> {
        Zp::new(modulus)?;
        Ok(FieldSpec {
            kind: FieldKind::PrimeField { modulus },
            seed,
        })
    }

    /// Independent generator for concurrent task `task`.
    pub fn rng(&self, task: u64) -> ChaCha8Rng {
        task_rng(self.seed, task)
    }
}

/// A ChaCha stream keyed by the seed and split by task index.
pub fn task_rng(seed: u64, task: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(task);
    rng
}

/// Multiplicative inverse; fails on zero.
pub fn fe_inverse<F: Field>(field: &F, a: &F::Elem) -> Result<F::Elem> {
    field.inv(a)
}

pub fn random_element<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> F::Elem {
    field.random(rng)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every u64.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A uniformly chosen prime with exactly `bits` bits.
pub fn random_prime<R: Rng + ?Sized>(bits: u32, rng: &mut R) -> u64 {
    assert!((3..=62).contains(&bits), "prime width must be in 3..=62 bits");
    loop {
        let candidate = rng.gen_range((1u64 << (bits - 1))..(1u64 << bits)) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

/// `count` distinct 31-bit primes derived from `seed`.
pub fn oracle_primes(count: usize, seed: u64) -> Vec<u64> {
    let mut rng = task_rng(seed, u64::MAX);
    let mut primes: Vec<u64> = Vec::with_capacity(count);
    while primes.len() < count {
        let p = random_prime(31, &mut rng);
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    primes
}

/// Canonical text form of a rational (`a` or `a/b`, denominator positive).
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else if q.denom().is_negative() {
        format!("{}/{}", -q.numer(), -q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn inverse_examples() {
        let z7 = Zp::new(7).unwrap();
        assert_eq!(fe_inverse(&z7, &1).unwrap(), 1);
        assert_eq!(fe_inverse(&z7, &3).unwrap(), 5);
        assert_eq!(fe_inverse(&z7, &0), Err(Error::ZeroInverse));
        let rat = Rationals::default();
        assert_eq!(fe_inverse(&rat, &q(2, 3)).unwrap(), q(3, 2));
        assert_eq!(fe_inverse(&rat, &rat.one()).unwrap(), rat.one());
        assert_eq!(fe_inverse(&rat, &rat.zero()), Err(Error::ZeroInverse));
    }

    #[test]
    fn canonical_fraction_form() {
        let x = q(4, -6);
        assert_eq!(x.numer(), &BigInt::from(-2));
        assert_eq!(x.denom(), &BigInt::from(3));
        assert_eq!(format_rational(&x), "-2/3");
        assert_eq!(format_rational(&q(6, 3)), "2");
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
        assert!(Zp::new(15).is_err());
        assert!(Zp::for_oracle(101).is_err());
        assert!(Zp::for_oracle(1_048_583).is_ok());
    }

    #[test]
    fn oracle_primes_are_distinct_31_bit() {
        let ps = oracle_primes(4, 9);
        assert_eq!(ps.len(), 4);
        for (i, p) in ps.iter().enumerate() {
            assert!(is_prime(*p));
            assert!(*p >= 1 << 30 && *p < 1 << 31);
            assert!(!ps[..i].contains(p));
        }
        assert_eq!(ps, oracle_primes(4, 9));
    }

    #[test]
    fn same_seed_same_stream() {
        let f = Zp::new(1_000_003).unwrap();
        let spec = FieldSpec::prime(1_000_003, 42).unwrap();
        let a: Vec<u64> = {
            let mut rng = spec.rng(3);
            (0..50).map(|_| random_element(&f, &mut rng)).collect()
        };
        let b: Vec<u64> = {
            let mut rng = spec.rng(3);
            (0..50).map(|_| random_element(&f, &mut rng)).collect()
        };
        let c: Vec<u64> = {
            let mut rng = spec.rng(4);
            (0..50).map(|_| random_element(&f, &mut rng)).collect()
        };
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn residues_are_uniform() {
        // 10^4 draws in Z_101: each class expects ~99, sd ~9.9; 5 sigma band.
        let f = Zp::new(101).unwrap();
        let mut rng = task_rng(7, 0);
        let mut counts = [0usize; 101];
        for _ in 0..10_000 {
            counts[random_element(&f, &mut rng) as usize] += 1;
        }
        let expected = 10_000.0 / 101.0;
        let sd = (10_000.0 * (1.0 / 101.0) * (100.0 / 101.0f64)).sqrt();
        for c in counts {
            assert!((c as f64 - expected).abs() <= 5.0 * sd, "count {c}");
        }
        let chi2: f64 = counts
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        // 100 degrees of freedom; 99.99th percentile is about 159
        assert!(chi2 < 160.0, "chi2 = {chi2}");
    }

    #[test]
    fn rational_draws_in_range() {
        let rat = Rationals::default();
        let mut rng = task_rng(1, 0);
        let bound = BigRational::from_integer(BigInt::from(DEFAULT_RATIONAL_BOUND));
        for _ in 0..1000 {
            let x = rat.random(&mut rng);
            assert!(x.is_integer());
            assert!(x <= bound && x >= -bound.clone());
        }
    }

    #[test]
    fn reduction_of_rationals() {
        let f = Zp::new(7).unwrap();
        assert_eq!(f.reduce_rational(&q(1, 3)), Some(5));
        assert_eq!(f.reduce_rational(&q(-1, 2)), Some(3));
        assert_eq!(f.reduce_rational(&q(1, 14)), None);
    }

    #[test]
    fn pow_and_fermat() {
        let f = Zp::new(1_000_003).unwrap();
        for a in [2u64, 3, 999_999, 12345] {
            assert_eq!(f.pow(&a, 1_000_002), 1);
        }
    }
}
