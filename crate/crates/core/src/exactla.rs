//! Exact rational linear algebra.
//!
//! Everything downstream compares subspaces by comparing canonical reduced
//! row echelon forms, so [`Mat::rref`] always produces leading ones with the
//! pivot columns cleared above and below.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps numerator and denominator
/// coprime with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Render as `p` or `p/q`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q`; `None` on malformed input or zero denominator.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Scale a nonzero rational vector to a primitive integer vector whose
/// first nonzero entry is positive.
pub fn primitive_integer(v: &[Rat]) -> Vec<Rat> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v.to_vec();
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter()
        .map(|x| Rat::from_integer(x / &gcd * &sign))
        .collect()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Result of [`Mat::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r);
        }
        Mat {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Canonical reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// RREF with the zero rows dropped: the canonical basis of the row space.
    pub fn row_basis(&self) -> Mat {
        let Rref { reduced, pivots } = self.rref();
        let mut out = reduced;
        out.data.truncate(pivots.len() * out.cols);
        out.rows = pivots.len();
        out
    }

    /// Canonical basis of `{v : self * v = 0}`, one row per free column.
    pub fn nullspace(&self) -> Mat {
        let Rref { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out[(k, f)] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                out[(k, p)] = -reduced[(i, f)].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(rat_to_string).collect();
            write!(f, "[{}]", row.join(","))?;
        }
        write!(f, "]")
    }
}

/// Unique solution of `a x = b`, or `None` when `a` is singular.
pub fn solve_square(a: &Mat, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
    if a.rows() != a.cols() || b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.rows();
    let mut aug = Mat::zeros(n, n + 1);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let Rref { reduced, pivots } = aug.rref();
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Ok(None);
    }
    Ok(Some((0..n).map(|i| reduced[(i, n)].clone()).collect()))
}

pub fn determinant(a: &Mat) -> Rat {
    assert_eq!(a.rows(), a.cols());
    let mut m = a.clone();
    let n = m.rows();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap_rows(p, c);
            det = -det;
        }
        let piv = m[(c, c)].clone();
        det *= &piv;
        for i in c + 1..n {
            if m[(i, c)].is_zero() {
                continue;
            }
            let f = &m[(i, c)] / &piv;
            for j in c..n {
                let v = &m[(c, j)] * &f;
                m[(i, j)] -= v;
            }
        }
    }
    det
}

/// Incrementally maintained reduced echelon basis of a row space.
///
/// Rows are inserted one at a time; the basis stays fully reduced so
/// [`EchelonBasis::into_mat`] is the canonical RREF of the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        EchelonBasis {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_mat(m: &Mat) -> Self {
        let mut e = EchelonBasis::new(m.cols());
        for i in 0..m.rows() {
            e.insert(m.row(i).to_vec());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    fn reduce(&self, row: &mut [Rat]) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= y * &f;
                }
            }
        }
    }

    pub fn contains(&self, row: &[Rat]) -> bool {
        let mut v = row.to_vec();
        self.reduce(&mut v);
        v.iter().all(Zero::is_zero)
    }

    /// Insert a row; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<Rat>) -> bool {
        assert_eq!(row.len(), self.cols);
        self.reduce(&mut row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[p].recip();
        for x in row.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for r in &mut self.rows {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x -= y * &f;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    pub fn into_mat(self) -> Mat {
        Mat::from_rows(self.cols, self.rows)
    }
}
