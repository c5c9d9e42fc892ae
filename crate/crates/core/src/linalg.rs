//! Dense exact matrices over a [`Field`].
//!
//! Determinants and ranks go through [`Field::determinant`] and
//! [`Field::rank_of`], which default to plain elimination with the first
//! nonzero pivot. [`crate::fields::Rationals`] overrides both with
//! fraction-free Bareiss elimination on row-scaled integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::MultiIndex;
use crate::error::{Error, Result};
use crate::fields::Field;

#[derive(Clone, Debug)]
pub struct ExactMatrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
    field: F,
}

impl<F: Field> PartialEq for ExactMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix {
            rows,
            cols,
            data,
            field: field.clone(),
        }
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            data,
            field: field.clone(),
        })
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Self::from_vec(field, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn random<R: rand::Rng + ?Sized>(field: &F, rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(field, rows, cols, |_, _| field.random(rng))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F::Elem) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F::Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        Ok(Self::from_fn(f, self.rows, other.cols, |i, j| {
            (0..self.cols).fold(f.zero(), |acc, t| f.add(&acc, &f.mul(self.get(i, t), other.get(t, j))))
        }))
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    pub fn scale_row(&mut self, i: usize, c: &F::Elem) {
        let f = self.field.clone();
        for x in self.row_mut(i) {
            *x = f.mul(x, c);
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Rows of `self` followed by rows of each matrix in `below`.
    pub fn vstack(&self, below: &[&Self]) -> Result<Self> {
        let mut data = self.data.clone();
        let mut rows = self.rows;
        for m in below {
            if m.cols != self.cols {
                return Err(Error::SizeMismatch(format!(
                    "stacking {} columns under {}",
                    m.cols, self.cols
                )));
            }
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Self::from_vec(&self.field, rows, self.cols, data)
    }

    /// The submatrix on the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if let Some(&i) = rows.iter().find(|&&i| i >= self.rows) {
            return Err(Error::IndexOutOfRange { index: i, bound: self.rows });
        }
        if let Some(&j) = cols.iter().find(|&&j| j >= self.cols) {
            return Err(Error::IndexOutOfRange { index: j, bound: self.cols });
        }
        Ok(Self::from_fn(&self.field, rows.len(), cols.len(), |a, b| {
            self.get(rows[a], cols[b]).clone()
        }))
    }

    pub fn map<G: Field>(&self, target: &G, mut f: impl FnMut(&F::Elem) -> G::Elem) -> ExactMatrix<G> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
            field: target.clone(),
        }
    }

    pub fn det(&self) -> Result<F::Elem> {
        det(self)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        kernel(self)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let f = &self.field;
        let augmented = Self::from_fn(f, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                f.one()
            } else {
                f.zero()
            }
        });
        let (reduced, pivots) = augmented.rref();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Err(Error::RankDeficient { expected: n, rank });
        }
        Ok(Self::from_fn(f, n, n, |i, j| reduced.get(i, n + j).clone()))
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            m.scale_row(r, &inv);
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for (x, y) in m.row_mut(i).iter_mut().zip(&pivot_row) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }
}

/// Exact determinant.
pub fn det<F: Field>(m: &ExactMatrix<F>) -> Result<F::Elem> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    Ok(m.field.determinant(m.rows, m.data.clone()))
}

pub fn rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    m.field.rank_of(m.rows, m.cols, m.data.clone())
}

/// Basis of the right null space.
pub fn kernel<F: Field>(m: &ExactMatrix<F>) -> Vec<Vec<F::Elem>> {
    let f = &m.field;
    let (reduced, pivots) = m.rref();
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); m.cols];
        v[free] = f.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(reduced.get(r, free));
        }
        basis.push(v);
    }
    basis
}

/// Determinant of the square submatrix on `rows` × `cols`.
pub fn minor_det<F: Field>(m: &ExactMatrix<F>, rows: &MultiIndex, cols: &MultiIndex) -> Result<F::Elem> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch(format!(
            "{} rows against {} columns",
            rows.len(),
            cols.len()
        )));
    }
    let r: Vec<usize> = rows.iter().collect();
    let c: Vec<usize> = cols.iter().collect();
    if let Some(&i) = r.iter().find(|&&i| i >= m.rows) {
        return Err(Error::IndexOutOfRange { index: i, bound: m.rows });
    }
    if let Some(&j) = c.iter().find(|&&j| j >= m.cols) {
        return Err(Error::IndexOutOfRange { index: j, bound: m.cols });
    }
    Ok(minor_unchecked(m, &r, &c))
}

/// Determinant of the submatrix on the given (in-range) rows and columns.
pub(crate) fn minor_unchecked<F: Field>(m: &ExactMatrix<F>, rows: &[usize], cols: &[usize]) -> F::Elem {
    let k = rows.len();
    let mut data = Vec::with_capacity(k * k);
    for &i in rows {
        let row = m.row(i);
        data.extend(cols.iter().map(|&j| row[j].clone()));
    }
    m.field.determinant(k, data)
}

pub(crate) fn gauss_det<F: Field>(f: &F, n: usize, mut a: Vec<F::Elem>) -> F::Elem {
    let mut acc = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !f.is_zero(&a[i * n + c])) else {
            return f.zero();
        };
        if p != c {
            for j in c..n {
                a.swap(p * n + j, c * n + j);
            }
            acc = f.neg(&acc);
        }
        let pivot = a[c * n + c].clone();
        acc = f.mul(&acc, &pivot);
        let inv = f.inv(&pivot).expect("pivot is nonzero");
        for i in c + 1..n {
            if f.is_zero(&a[i * n + c]) {
                continue;
            }
            let factor = f.mul(&a[i * n + c], &inv);
            for j in c + 1..n {
                let t = f.mul(&factor, &a[c * n + j]);
                a[i * n + j] = f.sub(&a[i * n + j], &t);
            }
        }
    }
    acc
}

pub(crate) fn gauss_rank<F: Field>(f: &F, rows: usize, cols: usize, mut a: Vec<F::Elem>) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&a[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(&a[r * cols + c]).expect("pivot is nonzero");
        for i in r + 1..rows {
            if f.is_zero(&a[i * cols + c]) {
                continue;
            }
            let factor = f.mul(&a[i * cols + c], &inv);
            for j in c + 1..cols {
                let t = f.mul(&factor, &a[r * cols + j]);
                a[i * cols + j] = f.sub(&a[i * cols + j], &t);
            }
        }
        r += 1;
    }
    r
}

/// Fraction-free determinant of an integer matrix.
pub(crate) fn bareiss_det(n: usize, mut a: Vec<BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(p * n + j, k * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
        }
        prev = a[k * n + k].clone();
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Fraction-free echelon rank of an integer matrix.
pub(crate) fn bareiss_rank(rows: usize, cols: usize, mut a: Vec<BigInt>) -> usize {
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[i * cols + j] * &a[r * cols + c] - &a[i * cols + c] * &a[r * cols + j]) / &prev;
                a[i * cols + j] = v;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = a[r * cols + c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::subsets_lex;
    use crate::fields::{task_rng, Rationals, Zp};
    use num_rational::BigRational;
    use rand::Rng;

    const P: u64 = 1_000_003;

    fn zp() -> Zp {
        Zp::new(P).unwrap()
    }

    /// Leibniz expansion over all permutations; the n! oracle.
    fn leibniz<F: Field>(m: &ExactMatrix<F>) -> F::Elem {
        let f = m.field();
        let n = m.rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = f.zero();
        permute(&mut perm, 0, &mut |p| {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let mut term = f.one();
            for (i, &pi) in p.iter().enumerate() {
                term = f.mul(&term, m.get(i, pi));
            }
            total = if inversions % 2 == 0 { f.add(&total, &term) } else { f.sub(&total, &term) };
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            visit(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, visit);
            p.swap(k, i);
        }
    }

    #[test]
    fn determinant_examples() {
        let f = zp();
        assert_eq!(ExactMatrix::identity(&f, 5).det().unwrap(), 1);
        let m = ExactMatrix::from_i64(&f, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(m.det().unwrap(), f.from_i64(-2));
        let q = Rationals::default();
        let m = ExactMatrix::from_i64(&q, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(m.det().unwrap(), q.from_i64(-2));
        assert_eq!(ExactMatrix::zeros(&f, 2, 3).det(), Err(Error::NotSquare { rows: 2, cols: 3 }));
        assert_eq!(ExactMatrix::identity(&f, 0).det().unwrap(), 1);
    }

    #[test]
    fn determinant_matches_leibniz_and_laplace() {
        let f = zp();
        let mut rng = task_rng(11, 0);
        for n in 1..=6 {
            for _ in 0..5 {
                let m = ExactMatrix::random(&f, n, n, &mut rng);
                let d = m.det().unwrap();
                assert_eq!(d, leibniz(&m));
                // Laplace expansion along row 0
                let all_rows = MultiIndex::initial(n, n).unwrap();
                let mut lap = f.zero();
                for j in 0..n {
                    let rows = all_rows.without(0);
                    let cols = MultiIndex::initial(n, n).unwrap().without(j);
                    let minor = minor_det(&m, &rows, &cols).unwrap();
                    let term = f.mul(m.get(0, j), &minor);
                    lap = if j % 2 == 0 { f.add(&lap, &term) } else { f.sub(&lap, &term) };
                }
                assert_eq!(d, lap);
            }
        }
    }

    #[test]
    fn bareiss_matches_leibniz_over_q() {
        let q = Rationals::with_bound(50);
        let mut rng = task_rng(12, 0);
        for n in 1..=5 {
            for _ in 0..5 {
                let m = ExactMatrix::random(&q, n, n, &mut rng);
                assert_eq!(m.det().unwrap(), leibniz(&m));
            }
        }
        // fractional entries go through denominator clearing
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let m = ExactMatrix::from_rows(&q, vec![vec![half.clone(), third.clone()], vec![third, half]]).unwrap();
        assert_eq!(m.det().unwrap(), BigRational::new(5.into(), 36.into()));
    }

    #[test]
    fn determinant_properties() {
        let f = zp();
        let mut rng = task_rng(13, 0);
        for n in 1..=6 {
            let a = ExactMatrix::random(&f, n, n, &mut rng);
            let b = ExactMatrix::random(&f, n, n, &mut rng);
            let ab = a.mul(&b).unwrap();
            assert_eq!(ab.det().unwrap(), f.mul(&a.det().unwrap(), &b.det().unwrap()));
            if n >= 2 {
                let mut s = a.clone();
                s.swap_rows(0, n - 1);
                assert_eq!(s.det().unwrap(), f.neg(&a.det().unwrap()));
            }
            let c: u64 = rng.gen_range(1..P);
            let mut scaled = a.clone();
            scaled.scale_row(0, &c);
            assert_eq!(scaled.det().unwrap(), f.mul(&c, &a.det().unwrap()));
        }
    }

    #[test]
    fn rank_examples() {
        let f = zp();
        assert_eq!(ExactMatrix::zeros(&f, 4, 6).rank(), 0);
        let mut rng = task_rng(14, 0);
        for k in 1..=6 {
            let m = ExactMatrix::random(&f, k, 8, &mut rng);
            assert_eq!(m.rank(), k);
            assert_eq!(m.transpose().rank(), k);
        }
        let m = ExactMatrix::from_i64(&f, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        let f = zp();
        assert!(ExactMatrix::identity(&f, 4).kernel().is_empty());
        let m = ExactMatrix::from_i64(&f, &[&[1, 1]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![f.from_i64(-1), 1]);
    }

    #[test]
    fn low_rank_kernel_dimension() {
        let f = zp();
        let mut rng = task_rng(15, 0);
        for r in 0..=5 {
            let a = ExactMatrix::random(&f, 7, r, &mut rng);
            let b = ExactMatrix::random(&f, r, 9, &mut rng);
            let m = a.mul(&b).unwrap();
            let rk = m.rank();
            assert_eq!(rk, r);
            let basis = m.kernel();
            assert_eq!(basis.len(), 9 - rk);
            for v in &basis {
                assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == 0));
            }
            // the basis itself is independent
            let kb = ExactMatrix::from_rows(&f, basis.clone()).unwrap();
            assert_eq!(kb.rank(), basis.len());
        }
    }

    #[test]
    fn minor_det_examples() {
        let f = zp();
        let mut rng = task_rng(16, 0);
        let m = ExactMatrix::random(&f, 5, 5, &mut rng);
        let full = MultiIndex::initial(5, 5).unwrap();
        assert_eq!(minor_det(&m, &full, &full).unwrap(), m.det().unwrap());
        let i = MultiIndex::new(5, &[2]).unwrap();
        let j = MultiIndex::new(5, &[4]).unwrap();
        assert_eq!(minor_det(&m, &i, &j).unwrap(), *m.get(2, 4));
        let two = MultiIndex::new(5, &[0, 1]).unwrap();
        assert!(matches!(minor_det(&m, &i, &two), Err(Error::SizeMismatch(_))));
        let wide = MultiIndex::new(7, &[6]).unwrap();
        assert!(matches!(
            minor_det(&m, &wide, &i),
            Err(Error::IndexOutOfRange { index: 6, bound: 5 })
        ));
        let m = ExactMatrix::random(&f, 4, 7, &mut rng);
        for rows in subsets_lex(4, 3).unwrap() {
            for cols in subsets_lex(7, 3).unwrap() {
                let sub = m.select(&rows.entries(), &cols.entries()).unwrap();
                assert_eq!(minor_det(&m, &rows, &cols).unwrap(), sub.det().unwrap());
            }
        }
    }

    #[test]
    fn rank_mod_p_agrees_with_rank_over_q() {
        // Integer entries in [-100, 100]; reduction mod p can only lose rank.
        let q = Rationals::with_bound(100);
        let f = zp();
        let mut rng = task_rng(17, 0);
        let mut agree = 0;
        for trial in 0..1000 {
            let rows = 1 + trial % 7;
            let cols = 1 + (trial / 7) % 7;
            let mut m = ExactMatrix::random(&q, rows, cols, &mut rng);
            if trial % 3 == 0 && rows > 1 {
                // force a dependent row
                let dup = m.row(0).to_vec();
                m.row_mut(rows - 1).clone_from_slice(&dup);
            }
            let rq = m.rank();
            let rp = m.map(&f, |x| f.reduce_rational(x).unwrap()).rank();
            assert!(rp <= rq);
            assert_eq!(rq, gauss_rank(&q, rows, cols, m.data().to_vec()));
            if rp == rq {
                agree += 1;
            }
        }
        assert!(agree >= 990, "only {agree} of 1000 agreed");
    }

    #[test]
    fn bareiss_rank_matches_field_elimination() {
        let q = Rationals::with_bound(3);
        let mut rng = task_rng(18, 0);
        for _ in 0..200 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let inner = rng.gen_range(0..4);
            let a = ExactMatrix::random(&q, rows, inner, &mut rng);
            let b = ExactMatrix::random(&q, inner, cols, &mut rng);
            let m = a.mul(&b).unwrap();
            assert_eq!(m.rank(), gauss_rank(&q, rows, cols, m.data().to_vec()));
        }
    }

    #[test]
    fn reduction_is_a_homomorphism_on_determinants() {
        let q = Rationals::with_bound(1000);
        let f = zp();
        let mut rng = task_rng(19, 0);
        for _ in 0..50 {
            let m = ExactMatrix::random(&q, 5, 5, &mut rng);
            let dq = m.det().unwrap();
            let dp = m.map(&f, |x| f.reduce_rational(x).unwrap()).det().unwrap();
            assert_eq!(f.reduce_rational(&dq).unwrap(), dp);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn rank_plus_nullity(rows in 1usize..7, cols in 1usize..7, inner in 0usize..5, seed in any::<u64>()) {
                let f = zp();
                let mut rng = task_rng(seed, 0);
                let a = ExactMatrix::random(&f, rows, inner, &mut rng);
                let b = ExactMatrix::random(&f, inner, cols, &mut rng);
                let m = a.mul(&b).unwrap();
                prop_assert_eq!(m.rank() + m.kernel().len(), cols);
                prop_assert_eq!(m.rank(), m.transpose().rank());
            }

            #[test]
            fn field_axioms_mod_p(a in 0..P, b in 0..P, c in 0..P) {
                let f = zp();
                prop_assert_eq!(f.mul(&a, &f.mul(&b, &c)), f.mul(&f.mul(&a, &b), &c));
                prop_assert_eq!(f.add(&a, &f.add(&b, &c)), f.add(&f.add(&a, &b), &c));
                prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
                prop_assert_eq!(f.add(&a, &f.neg(&a)), 0);
                if a != 0 {
                    prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
                }
            }

            #[test]
            fn field_axioms_over_q(an in -1000i64..1000, ad in 1i64..50, bn in -1000i64..1000, bd in 1i64..50, cn in -1000i64..1000, cd in 1i64..50) {
                let q = Rationals::default();
                let a = BigRational::new(an.into(), ad.into());
                let b = BigRational::new(bn.into(), bd.into());
                let c = BigRational::new(cn.into(), cd.into());
                prop_assert_eq!(q.mul(&a, &q.mul(&b, &c)), q.mul(&q.mul(&a, &b), &c));
                prop_assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
                prop_assert!(q.is_zero(&q.add(&a, &q.neg(&a))));
                if !q.is_zero(&a) {
                    prop_assert_eq!(q.mul(&a, &q.inv(&a).unwrap()), q.one());
                }
            }
        }
    }
}
