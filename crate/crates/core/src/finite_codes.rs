//! Grassmann codes over prime fields and the orbits of Λ³F₂⁶.
//!
//! Points of Gr(k, F_q^n) are enumerated as reduced row echelon forms; the
//! generator matrix of the Grassmann code has their normalized Plücker
//! vectors as columns. Trivectors on F₂⁶ are 20-bit masks in lex order of
//! 3-subsets, and SL₆(F₂) acts through the 30 transvections `I + E_ab`.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::{rank_lex, subsets_lex, MultiIndex};
use crate::error::{Error, Result};
use crate::exterior::pluecker;
use crate::fields::{is_prime, Field, Zp};
use crate::linalg::{minor_unchecked, ExactMatrix};

/// Largest point count [`enumerate_points`] will materialize.
pub const MAX_ENUMERATED_POINTS: u64 = 1_000_000;

/// Number of nonzero trivectors on F₂⁶.
pub const NONZERO_TRIVECTORS: u32 = (1 << 20) - 1;

/// `|SL₆(F₂)| = ∏_{i<6} (2⁶ − 2ⁱ)`.
pub const SL6_F2_ORDER: u64 = 63 * 62 * 60 * 56 * 48 * 32;

/// Orbit sizes with their labels.
pub const ORBIT_LABELS: [(u64, &str); 5] = [
    (1_395, "Gr"),
    (54_684, "sigma_2^1"),
    (468_720, "tau"),
    (357_120, "sigma_2"),
    (166_656, "Xi"),
];

/// Normal forms for the nonzero orbits, as seed expressions.
pub const ORBIT_SEEDS: [(&str, &str); 4] = [
    ("Gr", "012"),
    ("sigma_2^1", "012+034"),
    ("sigma_2", "012+345"),
    ("Xi", "124+034+025+035+135"),
];

/// Gaussian binomial `[n choose k]_q`.
pub fn count_points(n: usize, k: usize, q: u64) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::InvalidParams(format!("q = {q} is not a field size")));
    }
    if k > n {
        return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")));
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    Ok(num / den)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FqGrassmannPoint {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    /// Row-major `k × n` reduced row echelon form.
    pub rref: Vec<u64>,
    /// Plücker vector with first nonzero coordinate 1.
    pub pluecker: Vec<u64>,
}

impl FqGrassmannPoint {
    pub fn from_matrix(m: &ExactMatrix<Zp>) -> Result<Self> {
        let (k, n) = (m.rows(), m.cols());
        let q = m.field().modulus();
        let (reduced, pivots) = m.rref();
        if pivots.len() != k {
            return Err(Error::RankDeficient {
                expected: k,
                rank: pivots.len(),
            });
        }
        let f = m.field();
        let p = pluecker(&reduced)?;
        let lead = p
            .coords()
            .iter()
            .find(|x| !f.is_zero(x))
            .expect("full-rank matrix has a nonzero minor");
        let scale = f.inv(lead)?;
        Ok(FqGrassmannPoint {
            n,
            k,
            q,
            rref: reduced.data().to_vec(),
            pluecker: p.coords().iter().map(|x| f.mul(x, &scale)).collect(),
        })
    }

    pub fn matrix(&self) -> ExactMatrix<Zp> {
        let f = Zp::new(self.q).expect("constructed from a prime field");
        ExactMatrix::from_vec(&f, self.k, self.n, self.rref.clone()).expect("shape matches")
    }
}

fn prime_field(q: u64) -> Result<Zp> {
    if !is_prime(q) {
        return Err(Error::InvalidParams(format!("enumeration needs a prime q, got {q}")));
    }
    Zp::new(q)
}

/// Every F_q-point of Gr(k,n), ordered lexicographically by RREF entries.
pub fn enumerate_points(n: usize, k: usize, q: u64) -> Result<Vec<FqGrassmannPoint>> {
    let total = count_points(n, k, q)?;
    if total > BigUint::from(MAX_ENUMERATED_POINTS) {
        return Err(Error::TooLarge(format!(
            "Gr({k},{n}) over F_{q} has {total} points (limit {MAX_ENUMERATED_POINTS})"
        )));
    }
    let f = prime_field(q)?;
    let mut forms: Vec<Vec<u64>> = Vec::with_capacity(total.to_usize().unwrap_or(0));
    for pivots in subsets_lex(n, k)? {
        let pivots = pivots.entries();
        // free slots: right of the row's pivot, outside every pivot column
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| ((pivots[i] + 1)..n).map(move |j| (i, j)))
            .filter(|(_, j)| !pivots.contains(j))
            .collect();
        let mut digits = vec![0u64; free.len()];
        loop {
            let mut m = vec![0u64; k * n];
            for (i, &p) in pivots.iter().enumerate() {
                m[i * n + p] = 1;
            }
            for (&(i, j), &d) in free.iter().zip(&digits) {
                m[i * n + j] = d;
            }
            forms.push(m);
            // odometer increment
            let Some(pos) = digits.iter().rposition(|&d| d + 1 < q) else {
                break;
            };
            digits[pos] += 1;
            for d in &mut digits[pos + 1..] {
                *d = 0;
            }
        }
    }
    forms.sort();
    forms
        .into_iter()
        .map(|data| FqGrassmannPoint::from_matrix(&ExactMatrix::from_vec(&f, k, n, data)?))
        .collect()
}

/// `C(n,k) × P` matrix whose columns are the points' Plücker vectors.
pub fn generator_matrix(n: usize, k: usize, q: u64) -> Result<ExactMatrix<Zp>> {
    let points = enumerate_points(n, k, q)?;
    let f = prime_field(q)?;
    Ok(ExactMatrix::from_fn(&f, points[0].pluecker.len(), points.len(), |i, j| {
        points[j].pluecker[i]
    }))
}

/// `k − dim(A ∩ B)`.
pub fn grassmann_distance(a: &FqGrassmannPoint, b: &FqGrassmannPoint) -> Result<usize> {
    if (a.n, a.k, a.q) != (b.n, b.k, b.q) {
        return Err(Error::ParamMismatch(format!(
            "Gr({},{}) over F_{} against Gr({},{}) over F_{}",
            a.k, a.n, a.q, b.k, b.n, b.q
        )));
    }
    let joint = a.matrix().vstack(&[&b.matrix()])?.rank();
    Ok(joint - a.k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodewordStats {
    /// `d(u, v)`.
    pub hamming: usize,
    /// `w(u)`.
    pub weight: usize,
}

pub fn codeword_ops(u: &[u64], v: &[u64]) -> Result<CodewordStats> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    Ok(CodewordStats {
        hamming: u.iter().zip(v).filter(|(a, b)| a != b).count(),
        weight: u.iter().filter(|&&a| a != 0).count(),
    })
}

/// Element of Λ³F₂⁶; bit `i` is the coefficient of `subsets_lex(6,3)[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TrivectorMask(pub u32);

impl TrivectorMask {
    pub fn new(bits: u32) -> Result<Self> {
        if bits > NONZERO_TRIVECTORS {
            return Err(Error::InvalidParams(format!("mask {bits:#x} has more than 20 bits")));
        }
        Ok(TrivectorMask(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn basis(index: &MultiIndex) -> Self {
        TrivectorMask(1 << rank_lex(index))
    }

    pub fn terms(self) -> Vec<MultiIndex> {
        let all = subsets_lex(6, 3).expect("valid degree");
        (0..20).filter(|i| self.0 >> i & 1 == 1).map(|i| all[i]).collect()
    }
}

/// Parses sums of triples such as `012+345`; repeated terms cancel.
impl FromStr for TrivectorMask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u32;
        for term in s.split('+').map(str::trim) {
            if term == "0" && s.trim() == "0" {
                return Ok(TrivectorMask(0));
            }
            let digits: Vec<usize> = term
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).filter(|&d| d < 6))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("bad term {term:?} (digits 0-5 expected)")))?;
            if digits.len() != 3 {
                return Err(Error::Parse(format!("term {term:?} is not a triple")));
            }
            let mut sorted = digits.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                // e_i ∧ e_i = 0
                continue;
            }
            bits ^= Self::basis(&MultiIndex::new(6, &sorted)?).0;
        }
        Ok(TrivectorMask(bits))
    }
}

impl fmt::Display for TrivectorMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms()
            .iter()
            .map(|t| t.iter().map(|d| char::from(b'0' + d as u8)).collect())
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

/// Linear map on Λ³F₂⁶ induced by a matrix in GL₆(F₂).
#[derive(Clone)]
pub struct InducedAction {
    /// Image of each basis trivector.
    pub columns: [u32; 20],
    lo: Vec<u32>,
    hi: Vec<u32>,
}

impl fmt::Debug for InducedAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InducedAction").field("columns", &self.columns).finish()
    }
}

impl InducedAction {
    pub fn from_columns(columns: [u32; 20]) -> Self {
        let table = |offset: usize| -> Vec<u32> {
            (0u32..1024)
                .map(|m| (0..10).filter(|b| m >> b & 1 == 1).fold(0, |acc, b| acc ^ columns[offset + b]))
                .collect()
        };
        InducedAction {
            lo: table(0),
            hi: table(10),
            columns,
        }
    }

    /// `e_I ↦ Σ_J det(g[J, I]) e_J`, with `g` acting on column vectors.
    pub fn from_matrix(g: &ExactMatrix<Zp>) -> Result<Self> {
        if g.rows() != 6 || g.cols() != 6 || g.field().modulus() != 2 {
            return Err(Error::InvalidParams("expected a 6x6 matrix over F_2".into()));
        }
        let triples: Vec<Vec<usize>> = subsets_lex(6, 3)?.iter().map(|t| t.entries()).collect();
        let mut columns = [0u32; 20];
        for (c, cols) in triples.iter().enumerate() {
            for (r, rows) in triples.iter().enumerate() {
                if minor_unchecked(g, rows, cols) == 1 {
                    columns[c] |= 1 << r;
                }
            }
        }
        Ok(Self::from_columns(columns))
    }

    /// Transvection `I + E_ab`: `e_b ↦ e_b + e_a`.
    pub fn transvection(a: usize, b: usize) -> Self {
        let all = subsets_lex(6, 3).expect("valid degree");
        let mut columns = [0u32; 20];
        for (i, t) in all.iter().enumerate() {
            columns[i] = 1 << i;
            if t.contains(b) && !t.contains(a) {
                columns[i] |= TrivectorMask::basis(&t.without(b).with(a)).0;
            }
        }
        Self::from_columns(columns)
    }

    pub fn apply(&self, m: u32) -> u32 {
        self.lo[(m & 1023) as usize] ^ self.hi[(m >> 10) as usize]
    }
}

/// The 30 transvections `I + E_ab`, `a ≠ b`, in (a, b) order.
pub fn transvection_generators() -> Vec<InducedAction> {
    (0..6)
        .flat_map(|a| (0..6).filter(move |&b| b != a).map(move |b| (a, b)))
        .map(|(a, b)| InducedAction::transvection(a, b))
        .collect()
}

struct Bitset(Vec<u64>);

impl Bitset {
    fn new() -> Self {
        Bitset(vec![0; (1 << 20) / 64])
    }

    /// Sets the bit; true if it was clear.
    fn insert(&mut self, m: u32) -> bool {
        let (w, b) = ((m >> 6) as usize, m & 63);
        let fresh = self.0[w] >> b & 1 == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    fn contains(&self, m: u32) -> bool {
        self.0[(m >> 6) as usize] >> (m & 63) & 1 == 1
    }
}

fn bfs(seed: u32, generators: &[InducedAction], visited: &mut Bitset) -> Vec<u32> {
    let mut orbit = vec![seed];
    visited.insert(seed);
    let mut head = 0;
    while head < orbit.len() {
        let m = orbit[head];
        head += 1;
        for g in generators {
            let image = g.apply(m);
            if visited.insert(image) {
                orbit.push(image);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

/// Exact SL₆(F₂)-orbit of `seed`, sorted ascending.
pub fn orbit_closure(seed: TrivectorMask) -> Vec<TrivectorMask> {
    let generators = transvection_generators();
    bfs(seed.0, &generators, &mut Bitset::new())
        .into_iter()
        .map(TrivectorMask)
        .collect()
}

/// Saturation by random invertible matrices: every round applies one
/// random element of GL₆(F₂) to every known point, stopping after
/// `patience` rounds without growth. May undercount.
pub fn orbit_closure_randomized<R: Rng + ?Sized>(seed: TrivectorMask, patience: usize, rng: &mut R) -> Vec<TrivectorMask> {
    let f2 = Zp::new(2).expect("2 is prime");
    let mut known = BTreeSet::from([seed.0]);
    let mut quiet = 0;
    while quiet < patience {
        let g = loop {
            let g = ExactMatrix::random(&f2, 6, 6, rng);
            if g.rank() == 6 {
                break g;
            }
        };
        let action = InducedAction::from_matrix(&g).expect("6x6 over F_2");
        let before = known.len();
        let images: Vec<u32> = known.iter().map(|&m| action.apply(m)).collect();
        known.extend(images);
        quiet = if known.len() == before { quiet + 1 } else { 0 };
    }
    known.into_iter().map(TrivectorMask).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    /// Smallest mask in the orbit.
    pub seed: TrivectorMask,
    pub size: u64,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTable {
    pub orbits: Vec<OrbitEntry>,
}

impl OrbitTable {
    pub fn total(&self) -> u64 {
        self.orbits.iter().map(|o| o.size).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.total() == NONZERO_TRIVECTORS as u64
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv_writer(out);
        w.write_record(["label", "size", "seed_mask", "seed_form"]).map_err(csv_err)?;
        for o in &self.orbits {
            w.write_record([o.label.clone(), o.size.to_string(), o.seed.0.to_string(), o.seed.to_string()])
                .map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

pub fn orbit_label(size: u64) -> &'static str {
    ORBIT_LABELS
        .iter()
        .find(|(s, _)| *s == size)
        .map(|(_, l)| *l)
        .unwrap_or("unknown")
}

/// Partitions the nonzero trivectors into orbits, smallest seed first.
pub fn classify_all() -> OrbitTable {
    let generators = transvection_generators();
    let mut visited = Bitset::new();
    let mut orbits = Vec::new();
    for m in 1..=NONZERO_TRIVECTORS {
        if visited.contains(m) {
            continue;
        }
        let orbit = bfs(m, &generators, &mut visited);
        let size = orbit.len() as u64;
        orbits.push(OrbitEntry {
            seed: TrivectorMask(orbit[0]),
            size,
            label: orbit_label(size).to_string(),
        });
    }
    OrbitTable { orbits }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberCount {
    /// Nonzero vectors of F₂⁶.
    pub overlaps: u64,
    /// Points of P(Λ²F₂⁵) = P^9.
    pub projective_forms: u64,
    /// Decomposable points, `|Gr(2,5)(F₂)|`.
    pub decomposable: u64,
    /// `overlaps · (projective_forms − decomposable)`.
    pub lhs: u64,
    /// The same with `2^10` in place of `2^10 − 1`.
    pub literal: u64,
    /// Size of the σ₂¹ orbit by breadth-first search.
    pub rhs: u64,
    pub equal: bool,
}

pub fn fiber_count_check() -> FiberCount {
    let decomposable = count_points(5, 2, 2).expect("valid").to_u64().expect("small");
    let overlaps = (1 << 6) - 1;
    let projective_forms = (1 << 10) - 1;
    let lhs = overlaps * (projective_forms - decomposable);
    let seed = TrivectorMask::from_str("012+034").expect("valid seed");
    let rhs = orbit_closure(seed).len() as u64;
    FiberCount {
        overlaps,
        projective_forms,
        decomposable,
        lhs,
        literal: overlaps * ((1 << 10) - decomposable),
        rhs,
        equal: lhs == rhs,
    }
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().from_writer(out)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// One header row `p0,…`, then one row per Plücker coordinate.
pub fn write_generator_csv<W: Write>(m: &ExactMatrix<Zp>, out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record((0..m.cols()).map(|j| format!("p{j}"))).map_err(csv_err)?;
    for i in 0..m.rows() {
        w.write_record(m.row(i).iter().map(u64::to_string)).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Sorted ascending, 4 bytes little-endian per mask.
pub fn write_mask_set<W: Write>(masks: &[TrivectorMask], mut out: W) -> Result<()> {
    let mut sorted: Vec<u32> = masks.iter().map(|m| m.0).collect();
    sorted.sort_unstable();
    sorted.dedup();
    for m in sorted {
        out.write_all(&m.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_mask_set<R: Read>(mut input: R) -> Result<Vec<TrivectorMask>> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    if bytes.len() % 4 != 0 {
        return Err(Error::Parse(format!("{} bytes is not a whole number of masks", bytes.len())));
    }
    bytes
        .chunks_exact(4)
        .map(|c| TrivectorMask::new(u32::from_le_bytes([c[0], c[1], c[2], c[3]])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::task_rng;

    fn mask(s: &str) -> TrivectorMask {
        s.parse().unwrap()
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_points(6, 3, 2).unwrap(), BigUint::from(1395u32));
        assert_eq!(count_points(4, 2, 2).unwrap(), BigUint::from(35u32));
        for n in 1..8 {
            for q in [2u64, 3, 4, 5, 7] {
                let proj = (q.pow(n as u32) - 1) / (q - 1);
                assert_eq!(count_points(n, 1, q).unwrap(), BigUint::from(proj));
            }
        }
        assert!(count_points(3, 4, 2).is_err());
        assert!(count_points(3, 1, 1).is_err());
    }

    #[test]
    fn count_matches_subspace_recursion() {
        // [n,k] = [n−1,k−1] + q^k [n−1,k]
        for q in [2u64, 3, 4, 9] {
            for n in 1..9 {
                for k in 1..n {
                    let lhs = count_points(n, k, q).unwrap();
                    let rhs = count_points(n - 1, k - 1, q).unwrap()
                        + BigUint::from(q).pow(k as u32) * count_points(n - 1, k, q).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_count() {
        for q in [2u64, 3] {
            for n in 1..=6 {
                for k in 0..=n {
                    if count_points(n, k, q).unwrap() > BigUint::from(20_000u32) {
                        continue;
                    }
                    let pts = enumerate_points(n, k, q).unwrap();
                    assert_eq!(BigUint::from(pts.len()), count_points(n, k, q).unwrap(), "({n},{k},{q})");
                    let distinct: BTreeSet<_> = pts.iter().map(|p| p.pluecker.clone()).collect();
                    assert_eq!(distinct.len(), pts.len());
                    assert!(pts.windows(2).all(|w| w[0].rref < w[1].rref));
                }
            }
        }
        assert_eq!(enumerate_points(5, 5, 3).unwrap().len(), 1);
        assert!(matches!(enumerate_points(12, 6, 2), Err(Error::TooLarge(_))));
        assert!(matches!(enumerate_points(4, 2, 4), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn generator_matrix_shapes() {
        let g = generator_matrix(4, 2, 2).unwrap();
        assert_eq!((g.rows(), g.cols()), (6, 35));
        let cols: BTreeSet<Vec<u64>> = (0..35).map(|j| (0..6).map(|i| *g.get(i, j)).collect()).collect();
        assert_eq!(cols.len(), 35);
        for c in &cols {
            assert!(c.iter().any(|&x| x != 0));
            // p01 p23 + p02 p13 + p03 p12 = 0 over F_2
            assert_eq!((c[0] * c[5] + c[1] * c[4] + c[2] * c[3]) % 2, 0);
        }
        let g = generator_matrix(6, 3, 2).unwrap();
        assert_eq!((g.rows(), g.cols()), (20, 1395));
    }

    #[test]
    fn points_satisfy_pluecker_relations_over_f3() {
        let f = Zp::new(3).unwrap();
        for p in enumerate_points(5, 2, 3).unwrap() {
            let c = &p.pluecker;
            // quadric on coordinates 0..3: p01 p23 − p02 p13 + p03 p12
            let idx = |a, b| rank_lex(&MultiIndex::new(5, &[a, b]).unwrap());
            let v = f.add(
                &f.sub(&f.mul(&c[idx(0, 1)], &c[idx(2, 3)]), &f.mul(&c[idx(0, 2)], &c[idx(1, 3)])),
                &f.mul(&c[idx(0, 3)], &c[idx(1, 2)]),
            );
            assert_eq!(v, 0);
            assert_eq!(c.iter().find(|&&x| x != 0), Some(&1));
        }
    }

    #[test]
    fn distance_examples() {
        let f2 = Zp::new(2).unwrap();
        let a = FqGrassmannPoint::from_matrix(
            &ExactMatrix::from_i64(&f2, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0]]).unwrap(),
        )
        .unwrap();
        let b = FqGrassmannPoint::from_matrix(
            &ExactMatrix::from_i64(&f2, &[&[1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0]]).unwrap(),
        )
        .unwrap();
        assert_eq!(grassmann_distance(&a, &a).unwrap(), 0);
        assert_eq!(grassmann_distance(&a, &b).unwrap(), 2);
        let pts = enumerate_points(4, 2, 2).unwrap();
        for x in &pts {
            for y in &pts {
                assert_eq!(grassmann_distance(x, y).unwrap(), grassmann_distance(y, x).unwrap());
            }
        }
        let other = enumerate_points(4, 1, 2).unwrap();
        assert!(matches!(grassmann_distance(&pts[0], &other[0]), Err(Error::ParamMismatch(_))));
    }

    #[test]
    fn codeword_examples() {
        let zero = [0u64; 4];
        assert_eq!(codeword_ops(&zero, &zero).unwrap().weight, 0);
        let u = [1, 1, 0, 0];
        assert_eq!(codeword_ops(&u, &u).unwrap().hamming, 0);
        assert_eq!(codeword_ops(&u, &[1, 0, 1, 0]).unwrap(), CodewordStats { hamming: 2, weight: 2 });
        assert_eq!(codeword_ops(&u, &[1]), Err(Error::LengthMismatch(4, 1)));
    }

    #[test]
    fn mask_parsing() {
        assert_eq!(mask("012").0, 1);
        assert_eq!(mask("345").0, 1 << 19);
        assert_eq!(mask("012+345").to_string(), "012+345");
        assert_eq!(mask("210").0, 1);
        assert_eq!(mask("012+012").0, 0);
        assert_eq!(mask("001").0, 0);
        assert!("016".parse::<TrivectorMask>().is_err());
        assert!("01".parse::<TrivectorMask>().is_err());
        assert!(TrivectorMask::new(1 << 20).is_err());
        for m in [1u32, 77, 0xfffff, 123_456] {
            assert_eq!(mask(&TrivectorMask(m).to_string()).0, m);
        }
    }

    #[test]
    fn transvections_match_general_action() {
        let f2 = Zp::new(2).unwrap();
        for a in 0..6 {
            for b in (0..6).filter(|&b| b != a) {
                let g = ExactMatrix::from_fn(&f2, 6, 6, |i, j| u64::from(i == j || (i, j) == (a, b)));
                let general = InducedAction::from_matrix(&g).unwrap();
                assert_eq!(general.columns, InducedAction::transvection(a, b).columns);
            }
        }
    }

    #[test]
    fn induced_action_is_a_homomorphism() {
        let f2 = Zp::new(2).unwrap();
        let mut rng = task_rng(41, 0);
        for _ in 0..10 {
            let g = ExactMatrix::random(&f2, 6, 6, &mut rng);
            let h = ExactMatrix::random(&f2, 6, 6, &mut rng);
            let gh = InducedAction::from_matrix(&g.mul(&h).unwrap()).unwrap();
            let (ag, ah) = (InducedAction::from_matrix(&g).unwrap(), InducedAction::from_matrix(&h).unwrap());
            for m in [1u32, 0x5a5a5, 0xfffff, 918_273] {
                assert_eq!(gh.apply(m), ag.apply(ah.apply(m)));
            }
        }
    }

    #[test]
    fn small_orbits() {
        let gr = orbit_closure(mask("012"));
        assert_eq!(gr.len(), 1395);
        for i in 0..20 {
            assert!(gr.binary_search(&TrivectorMask(1 << i)).is_ok());
        }
        // closed under every generator
        let gens = transvection_generators();
        for m in &gr {
            for g in &gens {
                assert!(gr.binary_search(&TrivectorMask(g.apply(m.0))).is_ok());
            }
        }
        assert_eq!(orbit_closure(mask("012+034")).len(), 54_684);
    }

    #[test]
    fn gr_orbit_is_the_set_of_pluecker_points() {
        let from_points: BTreeSet<u32> = enumerate_points(6, 3, 2)
            .unwrap()
            .iter()
            .map(|p| p.pluecker.iter().enumerate().fold(0u32, |acc, (i, &b)| acc | (b as u32) << i))
            .collect();
        let orbit: BTreeSet<u32> = orbit_closure(mask("012")).iter().map(|m| m.0).collect();
        assert_eq!(from_points, orbit);
    }

    #[test]
    fn randomized_saturation_finds_the_small_orbit() {
        let mut rng = task_rng(42, 0);
        let orbit = orbit_closure_randomized(mask("012"), 20, &mut rng);
        assert_eq!(orbit, orbit_closure(mask("012")));
    }

    #[test]
    fn table_sizes_divide_the_group_order() {
        for (size, _) in ORBIT_LABELS {
            assert_eq!(SL6_F2_ORDER % size, 0, "{size}");
        }
        assert_eq!(ORBIT_LABELS.iter().map(|(s, _)| s).sum::<u64>(), NONZERO_TRIVECTORS as u64);
    }

    #[test]
    fn mask_set_round_trip() {
        let masks = vec![TrivectorMask(7), TrivectorMask(1), TrivectorMask(0xfffff), TrivectorMask(7)];
        let mut buf = Vec::new();
        write_mask_set(&masks, &mut buf).unwrap();
        assert_eq!(buf.len(), 12);
        assert_eq!(&buf[..4], &1u32.to_le_bytes());
        let back = read_mask_set(&buf[..]).unwrap();
        assert_eq!(back, vec![TrivectorMask(1), TrivectorMask(7), TrivectorMask(0xfffff)]);
        assert!(read_mask_set(&buf[..5]).is_err());
    }

    #[test]
    fn generator_csv_layout() {
        let g = generator_matrix(3, 1, 2).unwrap();
        let mut buf = Vec::new();
        write_generator_csv(&g, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "p0,p1,p2,p3,p4,p5,p6");
    }
}
