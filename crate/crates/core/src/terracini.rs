//! Dimension of σ_s^r(Gr(k,n)) by Terracini's lemma.
//!
//! A point is a tuple of `s` stacked `k × n` matrices `[shared; tail_m]`
//! that share their first `r` rows. The parametrization sends the tuple to
//! the sum of the Plücker vectors of the stacks; its Jacobian at a random
//! point has rank equal to the affine dimension of the cone over the
//! variety. Each Jacobian entry is a signed `(k−1)`-minor (a cofactor), so
//! the matrix is assembled from a per-stack table of minors rather than by
//! symbolic differentiation. The symbolic route is kept in
//! [`SymbolicJacobian`] as a reference implementation.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, rank_lex, subsets_lex};
use crate::error::{Error, Result};
use crate::exterior::{pluecker, PlueckerVector};
use crate::fields::{oracle_primes, task_rng, Field, Rationals, Zp};
use crate::formulas::predict;
use crate::linalg::{minor_unchecked, ExactMatrix};

/// Resampling bound in [`sample_point`].
pub const MAX_RETRIES: usize = 32;
/// Largest number of Plücker coordinates the symbolic path accepts.
pub const SYMBOLIC_MAX_COORDS: u64 = 40;
/// Largest number of variables the symbolic path accepts.
pub const SYMBOLIC_MAX_VARS: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SecantParams {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub r: usize,
}

impl SecantParams {
    pub fn new(n: usize, k: usize, s: usize, r: usize) -> Result<Self> {
        if n == 0 || n > crate::combinat::MAX_AMBIENT {
            return Err(Error::InvalidParams(format!("ambient dimension {n} out of range")));
        }
        if k > n {
            return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")));
        }
        if r > k {
            return Err(Error::InvalidParams(format!("r = {r} exceeds k = {k}")));
        }
        if s == 0 {
            return Err(Error::InvalidParams("s must be at least 1".into()));
        }
        Ok(SecantParams { n, k, s, r })
    }

    pub fn coordinate_count(&self) -> u64 {
        binomial(self.n, self.k)
    }

    pub fn shared_vars(&self) -> usize {
        self.r * self.n
    }

    pub fn tail_vars(&self) -> usize {
        (self.k - self.r) * self.n
    }

    /// `rn + s(k−r)n`.
    pub fn variable_count(&self) -> usize {
        self.shared_vars() + self.s * self.tail_vars()
    }

    /// Rank of the full stack of all rows at a general point.
    pub fn span_rank(&self) -> usize {
        (self.r + self.s * (self.k - self.r)).min(self.n)
    }

    /// Column of the variable at (stack `m`, row `i`, column `j`); rows
    /// below `r` are shared by every stack.
    pub fn variable_index(&self, m: usize, i: usize, j: usize) -> usize {
        if i < self.r {
            i * self.n + j
        } else {
            self.shared_vars() + m * self.tail_vars() + (i - self.r) * self.n + j
        }
    }
}

impl fmt::Display for SecantParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ_{}^{}(Gr({},{}))", self.s, self.r, self.k, self.n)
    }
}

#[derive(Clone, Debug)]
pub struct SamplePoint<F: Field> {
    pub params: SecantParams,
    pub shared: ExactMatrix<F>,
    pub tails: Vec<ExactMatrix<F>>,
}

impl<F: Field> SamplePoint<F> {
    /// Builds a point from explicit blocks, checking shapes only.
    pub fn from_blocks(params: SecantParams, shared: ExactMatrix<F>, tails: Vec<ExactMatrix<F>>) -> Result<Self> {
        let SecantParams { n, k, s, r } = params;
        if shared.rows() != r || shared.cols() != n {
            return Err(Error::SizeMismatch(format!(
                "shared block is {}x{}, expected {r}x{n}",
                shared.rows(),
                shared.cols()
            )));
        }
        if tails.len() != s {
            return Err(Error::SizeMismatch(format!("{} tail blocks, expected {s}", tails.len())));
        }
        if let Some(t) = tails.iter().find(|t| t.rows() != k - r || t.cols() != n) {
            return Err(Error::SizeMismatch(format!(
                "tail block is {}x{}, expected {}x{n}",
                t.rows(),
                t.cols(),
                k - r
            )));
        }
        Ok(SamplePoint { params, shared, tails })
    }

    pub fn field(&self) -> &F {
        self.shared.field()
    }

    /// `[shared; tails[m]]`.
    pub fn stack(&self, m: usize) -> ExactMatrix<F> {
        self.shared.vstack(&[&self.tails[m]]).expect("blocks share a width")
    }

    /// `[shared; tails[0]; …; tails[s−1]]`.
    pub fn full_stack(&self) -> ExactMatrix<F> {
        let tails: Vec<&ExactMatrix<F>> = self.tails.iter().collect();
        self.shared.vstack(&tails).expect("blocks share a width")
    }

    /// Entries in Jacobian column order.
    pub fn variables(&self) -> Vec<F::Elem> {
        let mut out = self.shared.data().to_vec();
        for t in &self.tails {
            out.extend_from_slice(t.data());
        }
        out
    }

    pub fn is_general(&self) -> bool {
        let k = self.params.k;
        (0..self.params.s).all(|m| self.stack(m).rank() == k) && self.full_stack().rank() == self.params.span_rank()
    }
}

/// Random point of the parameter space with every stack of full rank and
/// the expected joint span.
pub fn sample_point<F: Field, R: Rng + ?Sized>(params: &SecantParams, field: &F, rng: &mut R) -> Result<SamplePoint<F>> {
    let SecantParams { n, k, s, r } = *params;
    for _ in 0..MAX_RETRIES {
        let shared = ExactMatrix::random(field, r, n, rng);
        let tails = (0..s).map(|_| ExactMatrix::random(field, k - r, n, rng)).collect();
        let point = SamplePoint {
            params: *params,
            shared,
            tails,
        };
        if point.is_general() {
            return Ok(point);
        }
    }
    Err(Error::DegenerateAfterRetries(MAX_RETRIES))
}

/// Σ_m pluecker(stack m).
pub fn pluecker_sum<F: Field>(point: &SamplePoint<F>) -> PlueckerVector<F> {
    let mut total = pluecker(&point.stack(0)).expect("stacks have k ≤ n rows");
    for m in 1..point.params.s {
        total = total.add(&pluecker(&point.stack(m)).expect("stacks have k ≤ n rows")).expect("same space");
    }
    total
}

/// `minors[i][rank_lex(J)] = det(stack[rows ∖ {i}, J])` for `|J| = k − 1`.
fn cofactor_table<F: Field>(stack: &ExactMatrix<F>) -> Vec<Vec<F::Elem>> {
    let (k, n) = (stack.rows(), stack.cols());
    let f = stack.field();
    if k == 0 {
        return Vec::new();
    }
    let col_sets: Vec<Vec<usize>> = subsets_lex(n, k - 1)
        .expect("valid degree")
        .iter()
        .map(|j| j.entries())
        .collect();
    (0..k)
        .map(|i| {
            let rows: Vec<usize> = (0..k).filter(|&x| x != i).collect();
            if rows.is_empty() {
                return vec![f.one(); col_sets.len()];
            }
            col_sets.iter().map(|cols| minor_unchecked(stack, &rows, cols)).collect()
        })
        .collect()
}

/// Jacobian of the parametrization at `point`: `C(n,k)` rows in lex order,
/// one column per variable (shared rows first, then each tail block
/// row-major).
pub fn jacobian<F: Field>(point: &SamplePoint<F>) -> ExactMatrix<F> {
    let params = &point.params;
    let SecantParams { n, k, s, .. } = *params;
    let f = point.field();
    let targets = subsets_lex(n, k).expect("valid degree");
    let mut jac = ExactMatrix::zeros(f, targets.len(), params.variable_count());
    for m in 0..s {
        let table = cofactor_table(&point.stack(m));
        for (row, target) in targets.iter().enumerate() {
            for (pos, j) in target.iter().enumerate() {
                let slot = rank_lex(&target.without(j));
                for (i, minors) in table.iter().enumerate() {
                    let minor = &minors[slot];
                    if f.is_zero(minor) {
                        continue;
                    }
                    let value = if (pos + i) % 2 == 0 { minor.clone() } else { f.neg(minor) };
                    let col = params.variable_index(m, i, j);
                    let updated = f.add(jac.get(row, col), &value);
                    jac.set(row, col, updated);
                }
            }
        }
    }
    jac
}

/// How the rank of the Jacobian is computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "primes", rename_all = "snake_case")]
pub enum OracleField {
    Rationals,
    Primes(Vec<u64>),
}

impl OracleField {
    /// Two random 31-bit primes derived from `seed`.
    pub fn primes_from_seed(seed: u64) -> Self {
        OracleField::Primes(oracle_primes(2, seed))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedDims {
    #[serde(rename = "virtual")]
    pub virtual_dim: u64,
    pub expected: u64,
    pub fiber: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub params: SecantParams,
    pub cone_dim: u64,
    pub proj_dim: u64,
    pub trials: usize,
    pub primes_used: Vec<u64>,
    /// Rank observed at every (prime, trial) pair.
    pub ranks: Vec<u64>,
    pub agreed: bool,
    pub predicted: PredictedDims,
    /// `expected − proj_dim`.
    pub defect: i64,
}

fn rank_at<F: Field>(params: &SecantParams, field: &F, seed: u64, task: u64) -> Result<u64> {
    let mut rng = task_rng(seed, task);
    let point = sample_point(params, field, &mut rng)?;
    Ok(jacobian(&point).rank() as u64)
}

#[cfg(feature = "parallel")]
fn run_tasks(tasks: usize, job: impl Fn(usize) -> Result<u64> + Sync + Send) -> Result<Vec<u64>> {
    use rayon::prelude::*;
    (0..tasks).into_par_iter().map(job).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_tasks(tasks: usize, job: impl Fn(usize) -> Result<u64> + Sync + Send) -> Result<Vec<u64>> {
    (0..tasks).map(job).collect()
}

/// Cone dimension as the largest Jacobian rank over `trials` random points
/// (per prime, in prime-field mode).
pub fn dimension(params: &SecantParams, oracle: &OracleField, trials: usize, seed: u64) -> Result<DimensionReport> {
    if trials < 2 {
        return Err(Error::InvalidParams(format!("need at least 2 trials, got {trials}")));
    }
    let (ranks, primes_used) = match oracle {
        OracleField::Rationals => {
            let q = Rationals::default();
            let ranks = run_tasks(trials, |t| rank_at(params, &q, seed, t as u64))?;
            (ranks, Vec::new())
        }
        OracleField::Primes(primes) => {
            if primes.is_empty() {
                return Err(Error::InvalidParams("no primes given".into()));
            }
            let fields = primes.iter().map(|&p| Zp::for_oracle(p)).collect::<Result<Vec<_>>>()?;
            let ranks = run_tasks(trials * fields.len(), |t| {
                rank_at(params, &fields[t / trials], seed, t as u64)
            })?;
            (ranks, primes.clone())
        }
    };
    let cone_dim = *ranks.iter().max().expect("at least two trials");
    let proj_dim = cone_dim - 1;
    let prediction = predict(params);
    Ok(DimensionReport {
        params: *params,
        cone_dim,
        proj_dim,
        trials,
        primes_used,
        agreed: ranks.iter().all(|&x| x == cone_dim),
        predicted: PredictedDims {
            virtual_dim: prediction.virtual_dim,
            expected: prediction.expected_dim,
            fiber: prediction.fiber_dim,
        },
        defect: prediction.expected_dim as i64 - proj_dim as i64,
        ranks,
    })
}

/// Sparse exponent vector: `(variable, exponent)` pairs sorted by variable.
type Monomial = Vec<(u32, u32)>;

/// Sparse polynomial with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn variable(v: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(v as u32, 1)], BigInt::one());
        Polynomial { terms }
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Polynomial::default();
        p.add_term(Vec::new(), BigInt::from(c));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(coefficient, [(variable, exponent)])` pairs in monomial order.
    pub fn terms(&self) -> Vec<(BigInt, Vec<(usize, u32)>)> {
        self.terms
            .iter()
            .map(|(m, c)| (c.clone(), m.iter().map(|&(v, e)| (v as usize, e)).collect()))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Polynomial::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(merge_exponents(a, b), x * y);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Polynomial::default();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn derivative(&self, v: usize) -> Self {
        let mut out = Polynomial::default();
        for (m, c) in &self.terms {
            let Some(pos) = m.iter().position(|&(x, _)| x as usize == v) else {
                continue;
            };
            let e = m[pos].1;
            let mut lowered = m.clone();
            if e == 1 {
                lowered.remove(pos);
            } else {
                lowered[pos].1 -= 1;
            }
            out.add_term(lowered, c * e);
        }
        out
    }

    pub fn evaluate<F: Field>(&self, field: &F, values: &[F::Elem]) -> F::Elem {
        self.terms.iter().fold(field.zero(), |acc, (m, c)| {
            let term = m
                .iter()
                .fold(bigint_to_field(field, c), |t, &(v, e)| field.mul(&t, &field.pow(&values[v as usize], e as u64)));
            field.add(&acc, &term)
        })
    }
}

fn merge_exponents(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn bigint_to_field<F: Field>(field: &F, c: &BigInt) -> F::Elem {
    let (sign, digits) = c.to_u32_digits();
    let base = field.from_i64(1 << 32);
    let magnitude = digits
        .iter()
        .rev()
        .fold(field.zero(), |acc, &d| field.add(&field.mul(&acc, &base), &field.from_i64(d as i64)));
    if sign == Sign::Minus {
        field.neg(&magnitude)
    } else {
        magnitude
    }
}

/// Determinant of a matrix of polynomials by Laplace expansion along the
/// first row.
fn symbolic_det(m: &[Vec<Polynomial>]) -> Polynomial {
    let k = m.len();
    if k == 0 {
        return Polynomial::constant(1);
    }
    if k == 1 {
        return m[0][0].clone();
    }
    let mut total = Polynomial::default();
    for j in 0..k {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = m[0][j].mul(&symbolic_det(&sub));
        total = total.add(&if j % 2 == 0 { term } else { term.scale(-1) });
    }
    total
}

/// Jacobian with polynomial entries, obtained by expanding each Plücker
/// coordinate of the parametrization and differentiating.
#[derive(Clone, Debug)]
pub struct SymbolicJacobian {
    pub params: SecantParams,
    /// `C(n,k) × variable_count`, row-major.
    pub entries: Vec<Polynomial>,
}

impl SymbolicJacobian {
    pub fn rows(&self) -> usize {
        self.params.coordinate_count() as usize
    }

    pub fn cols(&self) -> usize {
        self.params.variable_count()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.cols() + col]
    }

    pub fn evaluate_at<F: Field>(&self, point: &SamplePoint<F>) -> Result<ExactMatrix<F>> {
        if point.params != self.params {
            return Err(Error::ParamMismatch(format!("point of {}, Jacobian of {}", point.params, self.params)));
        }
        let f = point.field();
        let values = point.variables();
        let data = self.entries.iter().map(|p| p.evaluate(f, &values)).collect();
        ExactMatrix::from_vec(f, self.rows(), self.cols(), data)
    }
}

pub fn symbolic_jacobian(params: &SecantParams) -> Result<SymbolicJacobian> {
    let SecantParams { n, k, s, .. } = *params;
    if params.coordinate_count() > SYMBOLIC_MAX_COORDS {
        return Err(Error::TooLarge(format!(
            "{} Plücker coordinates (limit {SYMBOLIC_MAX_COORDS})",
            params.coordinate_count()
        )));
    }
    let vars = params.variable_count();
    if vars > SYMBOLIC_MAX_VARS {
        return Err(Error::TooLarge(format!("{vars} variables (limit {SYMBOLIC_MAX_VARS})")));
    }
    let stacks: Vec<Vec<Vec<Polynomial>>> = (0..s)
        .map(|m| {
            (0..k)
                .map(|i| (0..n).map(|j| Polynomial::variable(params.variable_index(m, i, j))).collect())
                .collect()
        })
        .collect();
    let mut entries = Vec::with_capacity(params.coordinate_count() as usize * vars);
    for target in subsets_lex(n, k)? {
        let cols = target.entries();
        let coordinate = stacks.iter().fold(Polynomial::default(), |acc, stack| {
            let sub: Vec<Vec<Polynomial>> =
                stack.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect();
            acc.add(&symbolic_det(&sub))
        });
        entries.extend((0..vars).map(|v| coordinate.derivative(v)));
    }
    Ok(SymbolicJacobian {
        params: *params,
        entries,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkReport {
    pub params: SecantParams,
    pub reps: usize,
    pub rank: u64,
    /// Seconds; `None` when the symbolic path is outside its limits.
    pub naive_time: Option<f64>,
    pub cofactor_time: f64,
    pub speedup: Option<f64>,
    pub naive_skipped: Option<String>,
}

fn best_of<T>(reps: usize, mut job: impl FnMut() -> Result<T>) -> Result<(Duration, T)> {
    let mut best = Duration::MAX;
    let mut last = None;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let out = job()?;
        best = best.min(start.elapsed());
        last = Some(out);
    }
    Ok((best, last.expect("at least one rep")))
}

/// Times Jacobian assembly plus rank on one random point, by cofactors and
/// by symbolic differentiation; each figure is the best of `reps` runs.
pub fn benchmark(params: &SecantParams, modulus: u64, seed: u64, reps: usize) -> Result<BenchmarkReport> {
    let field = Zp::for_oracle(modulus)?;
    let point = sample_point(params, &field, &mut task_rng(seed, 0))?;
    let (cofactor, rank) = best_of(reps, || Ok(jacobian(&point).rank()))?;
    let naive = best_of(reps, || {
        let sym = symbolic_jacobian(params)?;
        Ok(sym.evaluate_at(&point)?.rank())
    });
    let (naive_time, naive_skipped) = match naive {
        Ok((t, naive_rank)) => {
            debug_assert_eq!(naive_rank, rank);
            (Some(t.as_secs_f64()), None)
        }
        Err(Error::TooLarge(why)) => (None, Some(why)),
        Err(e) => return Err(e),
    };
    let cofactor_time = cofactor.as_secs_f64();
    Ok(BenchmarkReport {
        params: *params,
        reps,
        rank: rank as u64,
        naive_time,
        cofactor_time,
        speedup: naive_time.map(|t| t / cofactor_time.max(1e-9)),
        naive_skipped,
    })
}
