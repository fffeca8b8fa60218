use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        Ok(out)
    }

    /// Copy with row and column `k` removed.
    pub fn without_row_col(&self, k: usize) -> RationalMatrix {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != k).collect();
        let mut out = RationalMatrix::zeros(keep.len(), keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[Rational]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Integer augmented system `[A | B]` after row scaling, in echelon form.
struct Echelon {
    n: usize,
    width: usize,
    m: Vec<Vec<BigInt>>,
    swaps: usize,
}

/// Multiplies each row of `[A | B]` by the lcm of its denominators so the
/// system becomes integral without changing its solution set.
fn integral_augmented(a: &RationalMatrix, rhs: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    (0..a.rows())
        .map(|i| {
            let row: Vec<&Rational> = a.row(i).iter().chain(rhs.iter().map(|b| &b[i])).collect();
            let scale = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            row.iter()
                .map(|r| r.numer() * (&scale / r.denom()))
                .collect()
        })
        .collect()
}

/// Bareiss fraction-free forward elimination. Every division is exact, so
/// intermediate entries stay bounded by minors of the input.
fn bareiss(mut m: Vec<Vec<BigInt>>, n: usize) -> Result<Echelon> {
    let width = m.first().map_or(n, Vec::len);
    let mut prev = BigInt::one();
    let mut swaps = 0;
    for k in 0..n {
        let pivot = (k..n)
            .find(|&i| !m[i][k].is_zero())
            .ok_or(Error::SingularMatrix)?;
        if pivot != k {
            m.swap(pivot, k);
            swaps += 1;
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let factor = row[k].clone();
            for j in (k + 1)..width {
                let v = &pivot_row[k] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    Ok(Echelon { n, width, m, swaps })
}

impl Echelon {
    fn back_substitute(&self, col: usize) -> Vec<Rational> {
        let n = self.n;
        let mut x = vec![Rational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = Rational::from_integer(self.m[i][col].clone());
            for j in (i + 1)..n {
                if !self.m[i][j].is_zero() {
                    acc -= Rational::from_integer(self.m[i][j].clone()) * &x[j];
                }
            }
            x[i] = acc / Rational::from_integer(self.m[i][i].clone());
        }
        x
    }
}

/// Solves `A x = b` exactly.
pub fn solve_linear_system(a: &RationalMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let mut sols = solve_many(a, std::slice::from_ref(&b.to_vec()))?;
    Ok(sols.pop().expect("one right-hand side"))
}

/// Solves `A x = b` for several right-hand sides sharing one elimination.
/// Each solution is checked against the original system before returning.
pub fn solve_many(a: &RationalMatrix, rhs: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    let n = a.rows();
    if let Some(bad) = rhs.iter().find(|b| b.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    if n == 0 {
        return Ok(rhs.iter().map(|_| Vec::new()).collect());
    }
    let ech = bareiss(integral_augmented(a, rhs), n)?;
    debug_assert_eq!(ech.width, n + rhs.len());
    let mut out = Vec::with_capacity(rhs.len());
    for (k, b) in rhs.iter().enumerate() {
        let x = ech.back_substitute(n + k);
        if a.mul_vec(&x)? != *b {
            return Err(Error::Internal("back-substitution check failed".into()));
        }
        debug_assert!(x.iter().all(Rational::is_normalized));
        out.push(x);
    }
    Ok(out)
}

/// Exact determinant; zero for singular input.
pub fn determinant(a: &RationalMatrix) -> Result<Rational> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let s = a
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            let row = a
                .row(i)
                .iter()
                .map(|r| r.numer() * (&s / r.denom()))
                .collect();
            scale *= s;
            row
        })
        .collect();
    match bareiss(rows, n) {
        Ok(ech) => {
            let mut det = ech.m[n - 1][n - 1].clone();
            if ech.swaps % 2 == 1 {
                det = -det;
            }
            Rational::new(det, scale)
        }
        Err(Error::SingularMatrix) => Ok(Rational::zero()),
        Err(e) => Err(e),
    }
}

/// Determinant of an integer matrix via Bareiss.
pub fn integer_determinant(rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    match bareiss(rows, n) {
        Ok(ech) => {
            let det = ech.m[n - 1][n - 1].clone();
            if ech.swaps % 2 == 1 {
                -det
            } else {
                det
            }
        }
        Err(_) => BigInt::zero(),
    }
}
