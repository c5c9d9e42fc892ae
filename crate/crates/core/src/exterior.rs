//! Exterior algebra in coordinates.
//!
//! A [`PlueckerVector`] holds the coordinates of a k-form on `F^n` in the
//! lexicographic basis `e_I`, `I ∈ subsets_lex(n, k)`. Duals are implicit:
//! [`hodge`] returns a plain coordinate vector of degree `n − k`.
//!
//! Sign conventions:
//! - Hodge star: `e_I ↦ sgn(I, I⋆) e_{I⋆}`.
//! - Contraction: `ι_{e_v} e_{J∪{v}} = (−1)^{pos} e_J`, where `pos` counts
//!   the entries of `J` smaller than `v`.
//! - With these two, `hodge(α∧β) = (−1)^{j(a−i)} hodge(α) ∧ hodge(β)` for
//!   `α ∈ Λ^i F^a` and `β ∈ Λ^j F^b` placed on complementary coordinate
//!   blocks.
//!
//! The fiber-bundle maps: [`recover_overlap`] finds the largest subspace `E`
//! dividing a form `w` (the kernel of the 1-flattening of `hodge(w)`),
//! [`fiber_coordinates`] rewrites `w = ê ∧ t` in a basis adapted to `E`,
//! and [`embed_fiber`] goes back.

use crate::combinat::{binomial, complement_sign, rank_lex, subsets_lex, MultiIndex};
use crate::error::{Error, Result};
use crate::fields::Field;
use crate::linalg::{minor_unchecked, ExactMatrix};

#[derive(Clone, Debug)]
pub struct PlueckerVector<F: Field> {
    n: usize,
    k: usize,
    coords: Vec<F::Elem>,
    field: F,
}

impl<F: Field> PartialEq for PlueckerVector<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.coords == other.coords
    }
}

impl<F: Field> PlueckerVector<F> {
    pub fn new(field: &F, n: usize, k: usize, coords: Vec<F::Elem>) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidParams(format!("degree {k} exceeds ambient {n}")));
        }
        let expected = binomial(n, k) as usize;
        if coords.len() != expected {
            return Err(Error::SizeMismatch(format!(
                "{} coordinates for degree {k} in ambient {n} (expected {expected})",
                coords.len()
            )));
        }
        Ok(PlueckerVector {
            n,
            k,
            coords,
            field: field.clone(),
        })
    }

    pub fn zero(field: &F, n: usize, k: usize) -> Self {
        PlueckerVector {
            n,
            k,
            coords: vec![field.zero(); binomial(n, k) as usize],
            field: field.clone(),
        }
    }

    pub fn basis(field: &F, index: &MultiIndex) -> Self {
        let mut v = Self::zero(field, index.ambient(), index.len());
        v.coords[rank_lex(index)] = field.one();
        v
    }

    /// Sum of `coeff · e_{indices}` terms; indices must be sorted.
    pub fn from_terms(field: &F, n: usize, k: usize, terms: &[(i64, &[usize])]) -> Result<Self> {
        let mut v = Self::zero(field, n, k);
        for (coeff, indices) in terms {
            let index = MultiIndex::new(n, indices)?;
            if index.len() != k {
                return Err(Error::SizeMismatch(format!("term {indices:?} is not of degree {k}")));
            }
            let slot = rank_lex(&index);
            v.coords[slot] = field.add(&v.coords[slot], &field.from_i64(*coeff));
        }
        Ok(v)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn coord(&self, index: &MultiIndex) -> &F::Elem {
        &self.coords[rank_lex(index)]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| self.field.is_zero(x))
    }

    /// `(I, coefficient)` for every nonzero coordinate, in lex order.
    pub fn support(&self) -> Vec<(MultiIndex, F::Elem)> {
        subsets_lex(self.n, self.k)
            .expect("valid degree")
            .into_iter()
            .zip(&self.coords)
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let f = &self.field;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| f.add(a, b)).collect();
        Self::new(f, self.n, self.k, coords)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        PlueckerVector {
            n: self.n,
            k: self.k,
            coords: self.coords.iter().map(|x| f.mul(x, c)).collect(),
            field: f.clone(),
        }
    }

    /// The scalar `c` with `other = c · self`, if one exists. A zero `self`
    /// is proportional only to zero (with `c = 1`).
    pub fn proportionality(&self, other: &Self) -> Option<F::Elem> {
        if self.n != other.n || self.k != other.k {
            return None;
        }
        let f = &self.field;
        let Some(pivot) = self.coords.iter().position(|x| !f.is_zero(x)) else {
            return other.is_zero().then(|| f.one());
        };
        let c = f.div(&other.coords[pivot], &self.coords[pivot]).ok()?;
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| f.mul(a, &c) == *b)
            .then_some(c)
    }

    /// Re-homes the form into ambient `new_n`, shifting indices by `offset`.
    pub fn shifted(&self, offset: usize, new_n: usize) -> Result<Self> {
        if offset + self.n > new_n {
            return Err(Error::InvalidParams(format!(
                "shift by {offset} does not fit ambient {new_n}"
            )));
        }
        let mut out = Self::zero(&self.field, new_n, self.k);
        for (index, c) in self.support() {
            out.coords[rank_lex(&index.shifted(offset, new_n)?)] = c;
        }
        Ok(out)
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::SizeMismatch(format!(
                "Λ^{} F^{} against Λ^{} F^{}",
                self.k, self.n, other.k, other.n
            )));
        }
        Ok(())
    }
}

/// Coordinates of the row space of a `k × n` matrix: its maximal minors.
pub fn pluecker<F: Field>(m: &ExactMatrix<F>) -> Result<PlueckerVector<F>> {
    let (k, n) = (m.rows(), m.cols());
    if k > n {
        return Err(Error::TooManyRows { rows: k, cols: n });
    }
    let rows: Vec<usize> = (0..k).collect();
    let coords = subsets_lex(n, k)?
        .iter()
        .map(|cols| minor_unchecked(m, &rows, &cols.entries()))
        .collect();
    PlueckerVector::new(m.field(), n, k, coords)
}

/// Hodge star for the volume form `e_0 ∧ … ∧ e_{n−1}`.
pub fn hodge<F: Field>(v: &PlueckerVector<F>) -> PlueckerVector<F> {
    let f = v.field();
    let mut out = PlueckerVector::zero(f, v.n, v.n - v.k);
    for (index, c) in v.support() {
        let value = if complement_sign(&index) == 1 { c } else { f.neg(&c) };
        out.coords[rank_lex(&index.complement())] = value;
    }
    out
}

/// Number of pairs `(i, j) ∈ a × b` with `i > j`: the sign exponent of
/// `e_a ∧ e_b = ± e_{a∪b}`.
fn merge_inversions(a: &MultiIndex, b: &MultiIndex) -> usize {
    b.iter().map(|j| a.len() - a.position(j)).sum()
}

pub fn wedge<F: Field>(a: &PlueckerVector<F>, b: &PlueckerVector<F>) -> Result<PlueckerVector<F>> {
    if a.n != b.n {
        return Err(Error::AmbientMismatch(a.n, b.n));
    }
    let f = a.field();
    let n = a.n;
    if a.k + b.k > n {
        return Ok(PlueckerVector::zero(f, n, n));
    }
    let mut out = PlueckerVector::zero(f, n, a.k + b.k);
    let b_support = b.support();
    for (i, x) in a.support() {
        for (j, y) in &b_support {
            if i.mask() & j.mask() != 0 {
                continue;
            }
            let slot = rank_lex(&MultiIndex::from_mask(n, i.mask() | j.mask())?);
            let term = f.mul(&x, y);
            out.coords[slot] = if merge_inversions(&i, j).is_multiple_of(2) {
                f.add(&out.coords[slot], &term)
            } else {
                f.sub(&out.coords[slot], &term)
            };
        }
    }
    Ok(out)
}

/// The 1-flattening `V → Λ^{m−1}`, `v ↦ ι_v T`, of an m-form `T`.
#[derive(Clone, Debug)]
pub struct Flattening<F: Field> {
    pub source_dim: usize,
    pub degree: usize,
    /// Column labels, `subsets_lex(n, m − 1)`.
    pub targets: Vec<MultiIndex>,
    /// `n × C(n, m−1)`; row `v` holds the coordinates of `ι_{e_v} T`.
    pub matrix: ExactMatrix<F>,
}

impl<F: Field> Flattening<F> {
    /// `{x ∈ V : ι_x T = 0}` as the rows of a matrix.
    pub fn kernel(&self) -> ExactMatrix<F> {
        let basis = self.matrix.transpose().kernel();
        let f = self.matrix.field();
        ExactMatrix::from_fn(f, basis.len(), self.source_dim, |i, j| basis[i][j].clone())
    }
}

pub fn flatten1<F: Field>(t: &PlueckerVector<F>) -> Result<Flattening<F>> {
    let m = t.k;
    if m == 0 {
        return Err(Error::InvalidParams("cannot flatten a 0-form".into()));
    }
    let n = t.n;
    let f = t.field();
    let targets = subsets_lex(n, m - 1)?;
    let mut matrix = ExactMatrix::zeros(f, n, targets.len());
    for (col, target) in targets.iter().enumerate() {
        for v in (0..n).filter(|&v| !target.contains(v)) {
            let c = t.coord(&target.with(v));
            if f.is_zero(c) {
                continue;
            }
            let value = if target.position(v) % 2 == 0 { c.clone() } else { f.neg(c) };
            matrix.set(v, col, value);
        }
    }
    Ok(Flattening {
        source_dim: n,
        degree: m,
        targets,
        matrix,
    })
}

/// `{x ∈ V : x ∧ w = 0}`, computed as the kernel of the 1-flattening of
/// `hodge(w)`. Rows of the result form a basis.
pub fn divisor_space<F: Field>(w: &PlueckerVector<F>) -> Result<ExactMatrix<F>> {
    let dual = hodge(w);
    if dual.degree() == 0 {
        // w is a multiple of the volume form: every vector divides it
        return Ok(ExactMatrix::identity(w.field(), w.ambient()));
    }
    Ok(flatten1(&dual)?.kernel())
}

/// The common overlap `E` of a general point of σ_s^r, as an `r × n` basis.
pub fn recover_overlap<F: Field>(w: &PlueckerVector<F>, r: usize) -> Result<ExactMatrix<F>> {
    let e = divisor_space(w)?;
    if e.rows() != r {
        return Err(Error::UnexpectedKernelDim {
            expected: r,
            found: e.rows(),
        });
    }
    Ok(e)
}

/// Rows of `E` followed by the standard basis vectors that keep the
/// matrix full rank, scanned in index order.
pub fn adapted_basis<F: Field>(e: &ExactMatrix<F>) -> Result<ExactMatrix<F>> {
    let n = e.cols();
    let r = e.rows();
    let rank = e.rank();
    if rank < r {
        return Err(Error::RankDeficient { expected: r, rank });
    }
    let f = e.field();
    let mut basis = e.clone();
    for j in 0..n {
        if basis.rows() == n {
            break;
        }
        let unit = ExactMatrix::from_fn(f, 1, n, |_, c| if c == j { f.one() } else { f.zero() });
        let candidate = basis.vstack(&[&unit])?;
        if candidate.rank() == candidate.rows() {
            basis = candidate;
        }
    }
    Ok(basis)
}

/// `t` with `w = ê ∧ t̃`, where `t̃` lifts `t` through the adapted basis.
/// The result has degree `k − r` on the `(n − r)` quotient coordinates.
pub fn fiber_coordinates<F: Field>(w: &PlueckerVector<F>, e: &ExactMatrix<F>) -> Result<PlueckerVector<F>> {
    let (n, k, r) = (w.ambient(), w.degree(), e.rows());
    if e.cols() != n {
        return Err(Error::SizeMismatch(format!("overlap lives in F^{}, form in F^{n}", e.cols())));
    }
    if r > k {
        return Err(Error::NotDivisible);
    }
    let basis = adapted_basis(e)?;
    let inverse = basis.inverse()?;
    let f = w.field();
    let head = MultiIndex::initial(n, r)?;
    let mut t = PlueckerVector::zero(f, n - r, k - r);
    let support = w.support();
    for target in subsets_lex(n, k)? {
        // coordinate of w on b_target: Σ_J w_J det(B⁻¹[J, target])
        let cols = target.entries();
        let c = support.iter().fold(f.zero(), |acc, (j, wj)| {
            f.add(&acc, &f.mul(wj, &minor_unchecked(&inverse, &j.entries(), &cols)))
        });
        if f.is_zero(&c) {
            continue;
        }
        if !head.is_subset_of(&target) {
            return Err(Error::NotDivisible);
        }
        let tail: Vec<usize> = target.iter().skip(r).map(|x| x - r).collect();
        t.coords[rank_lex(&MultiIndex::new(n - r, &tail)?)] = c;
    }
    Ok(t)
}

/// `ê ∧ t̃` in standard coordinates.
pub fn embed_fiber<F: Field>(e: &ExactMatrix<F>, t: &PlueckerVector<F>) -> Result<PlueckerVector<F>> {
    let (n, r) = (e.cols(), e.rows());
    if t.ambient() + r != n {
        return Err(Error::SizeMismatch(format!(
            "fiber form lives in F^{}, quotient has dimension {}",
            t.ambient(),
            n.saturating_sub(r)
        )));
    }
    let basis = adapted_basis(e)?;
    let f = e.field();
    let k = t.degree() + r;
    let mut w = PlueckerVector::zero(f, n, k);
    let lifted: Vec<(Vec<usize>, F::Elem)> = t
        .support()
        .into_iter()
        .map(|(tail, c)| ((0..r).chain(tail.iter().map(|x| x + r)).collect(), c))
        .collect();
    for (slot, target) in subsets_lex(n, k)?.iter().enumerate() {
        let cols = target.entries();
        w.coords[slot] = lifted.iter().fold(f.zero(), |acc, (rows, c)| {
            f.add(&acc, &f.mul(c, &minor_unchecked(&basis, rows, &cols)))
        });
    }
    Ok(w)
}
