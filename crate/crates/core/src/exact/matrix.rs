//! Dense matrices over Q(i).

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::GaussianRational as GR;
use crate::error::{Error, Result};
use crate::par::Exec;

pub type VectorGR = Vec<GR>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixGR {
    rows: usize,
    cols: usize,
    data: Vec<GR>,
}

impl MatrixGR {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![GR::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, GR::one())
    }

    pub fn scalar(n: usize, c: GR) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = c.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<GR>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds from row vectors; `cols` disambiguates the empty case.
    pub fn from_rows(rows: Vec<Vec<GR>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (k, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {k} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| GR::from_int(x)).collect())
            .collect();
        Self::from_rows(v, cols).expect("ragged integer rows")
    }

    pub fn from_columns(cols: &[VectorGR], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has {} entries, expected {rows}",
                    c.len()
                )));
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GR] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[GR] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> VectorGR {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<VectorGR> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GR::is_zero)
    }

    /// `Some(c)` when the matrix equals `c * Id`.
    pub fn scalar_value(&self) -> Option<GR> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 {
            GR::zero()
        } else {
            self[(0, 0)].clone()
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want_zero = i != j;
                let x = &self[(i, j)];
                if (want_zero && !x.is_zero()) || (!want_zero && *x != c) {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(GR::is_real)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn conj_transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].conj();
            }
        }
        t
    }

    pub fn scale(&self, c: &GR) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> GR {
        (0..self.rows.min(self.cols)).map(|k| &self[(k, k)]).sum()
    }

    pub fn mul_vec(&self, v: &[GR]) -> VectorGR {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = GR::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_mul(&self, rhs: &MatrixGR) -> Result<MatrixGR> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul_with(rhs, Exec::Sequential))
    }

    /// Product with rows distributed according to `exec`. Zero entries are
    /// skipped, which makes products of Clifford generators (monomial
    /// matrices) cheap.
    pub fn mul_with(&self, rhs: &MatrixGR, exec: Exec) -> MatrixGR {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let n = rhs.cols;
        let row_of = |i: usize| {
            let mut out = vec![GR::zero(); n];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in rhs.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        out[j] += &(a * b);
                    }
                }
            }
            out
        };
        let rows: Vec<VectorGR> = if exec.is_parallel() && self.rows >= 16 {
            exec.map_range(self.rows, row_of)
        } else {
            (0..self.rows).map(row_of).collect()
        };
        MatrixGR {
            rows: self.rows,
            cols: n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// `AB - BA`.
    pub fn commutator(&self, rhs: &MatrixGR) -> MatrixGR {
        &(self * rhs) - &(rhs * self)
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, rhs: &MatrixGR) -> MatrixGR {
        &(self * rhs) + &(rhs * self)
    }

    /// Kronecker product; `self` occupies the most significant index.
    pub fn kron(&self, rhs: &MatrixGR) -> MatrixGR {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out[(i * rhs.rows + k, j * rhs.cols + l)] = a * &rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MatrixGR {
        let mut acc = MatrixGR::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Reduced row-echelon form and rank. Pivots are normalised to 1.
    pub fn rref(&self) -> (MatrixGR, usize) {
        let (m, pivots) = self.rref_with_pivots();
        (m, pivots.len())
    }

    pub fn rref_with_pivots(&self) -> (MatrixGR, Vec<usize>) {
        let mut a = self.to_rows();
        let (nr, nc) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..nc {
            if pr == nr {
                break;
            }
            let Some(found) = (pr..nr).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(pr, found);
            let inv = a[pr][col].inv().expect("nonzero pivot");
            for x in a[pr].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = a[pr].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == pr || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &(&f * p);
                    }
                }
            }
            pivots.push(col);
            pr += 1;
        }
        let m = MatrixGR::from_rows(a, nc).expect("rref keeps shape");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the null space, one vector per free column (not canonicalised;
    /// see [`super::subspace::kernel`] for the canonical form).
    pub fn null_space_vectors(&self) -> Vec<VectorGR> {
        let (r, pivots) = self.rref_with_pivots();
        let nc = self.cols;
        let mut is_pivot = vec![false; nc];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..nc)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![GR::zero(); nc];
                v[free] = GR::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, free)];
                }
                v
            })
            .collect()
    }

    /// One solution of `self · x = b`, or `None` if the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[GR]) -> Option<VectorGR> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let nc = self.cols;
        let rows: Vec<VectorGR> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let aug = MatrixGR::from_rows(rows, nc + 1).expect("augmented shape");
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.last() == Some(&nc) {
            return None;
        }
        let mut x = vec![GR::zero(); nc];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, nc)].clone();
        }
        Some(x)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &MatrixGR) -> Result<MatrixGR> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(MatrixGR {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Real matrix `[Re(A); Im(A)]` of the R-linear map on real vectors.
    pub fn realify_rows(&self) -> MatrixGR {
        let mut out = MatrixGR::zeros(2 * self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self[(i, j)];
                out[(i, j)] = GR::from_rational(x.re().clone());
                out[(self.rows + i, j)] = GR::from_rational(x.im().clone());
            }
        }
        out
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for MatrixGR {
    type Output = GR;
    fn index(&self, (i, j): (usize, usize)) -> &GR {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for MatrixGR {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GR {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a MatrixGR> for &'a MatrixGR {
    type Output = MatrixGR;
    fn mul(self, rhs: &MatrixGR) -> MatrixGR {
        self.mul_with(rhs, Exec::Sequential)
    }
}

impl<'a> Add<&'a MatrixGR> for &'a MatrixGR {
    type Output = MatrixGR;
    fn add(self, rhs: &MatrixGR) -> MatrixGR {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatrixGR {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a MatrixGR> for &'a MatrixGR {
    type Output = MatrixGR;
    fn sub(self, rhs: &MatrixGR) -> MatrixGR {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatrixGR {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &MatrixGR {
    type Output = MatrixGR;
    fn neg(self) -> MatrixGR {
        MatrixGR {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for MatrixGR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGR {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for MatrixGR {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MatrixGR {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<GR>>::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, Vec::len);
        MatrixGR::from_rows(rows, cols).map_err(serde::de::Error::custom)
    }
}

/// Reduced row-echelon form and rank.
pub fn rref(m: &MatrixGR) -> (MatrixGR, usize) {
    m.rref()
}
