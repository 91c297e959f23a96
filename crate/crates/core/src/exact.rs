//! Exact rational scalars and dense linear algebra over ℚ.
//!
//! Gaussian elimination here always picks the first nonzero entry (in row
//! order) of the current column as pivot, so every result is deterministic.
//! `BigRational` keeps itself normalized: positive denominator, coprime
//! numerator and denominator, and zero as `0/1`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
pub use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d` as a normalized rational. Panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"7"`, `"-3/4"` or `"8/5"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::ParseRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Dense `rows × cols` matrix of rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::RaggedRows {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(QMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    /// Integer-entry convenience constructor, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
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

    /// `self` on top of `other`.
    pub fn stack(&self, other: &QMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ColumnMismatch(self.cols, other.cols));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(QMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, other: &QMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ColumnMismatch(self.cols, other.rows));
        }
        let mut out = Self::zeros(self.rows, other.cols);
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
        Ok(out)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let (basis, pivots) = self.row_basis();
        let mut entries = basis.entries;
        entries.resize(self.rows * self.cols, BigRational::zero());
        let m = QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        };
        (m, pivots)
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_basis(&self) -> (QMatrix, Vec<usize>) {
        let (mut rows, pivots) = integer_echelon(self);
        // Back substitution over ℚ on the pivot rows only.
        let mut out: Vec<Vec<BigRational>> = Vec::with_capacity(rows.len());
        for (i, &p) in pivots.iter().enumerate().rev() {
            let row = std::mem::take(&mut rows[i]);
            let lead = BigRational::from_integer(row[p].clone());
            let mut r: Vec<BigRational> = row
                .into_iter()
                .map(|x| {
                    if x.is_zero() {
                        BigRational::zero()
                    } else {
                        BigRational::from_integer(x) / &lead
                    }
                })
                .collect();
            for (below, &bp) in out.iter().zip(pivots[i + 1..].iter().rev()) {
                if r[bp].is_zero() {
                    continue;
                }
                let f = r[bp].clone();
                for (x, y) in r.iter_mut().zip(below) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            out.push(r);
        }
        out.reverse();
        let m = QMatrix {
            rows: pivots.len(),
            cols: self.cols,
            entries: out.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = eliminate(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let entries = rows
            .into_iter()
            .flat_map(|r| r.into_iter().skip(n))
            .collect();
        Some(QMatrix {
            rows: n,
            cols: n,
            entries,
        })
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// In-place Gauss-Jordan elimination on the first `cols` columns.
///
/// Pivot rows are moved to the top in order, scaled to 1 and cleared above
/// as well as below. Returns pivot columns.
fn eliminate(rows: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r][c..].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, below) = tail.split_first_mut().unwrap();
        let clear = |row: &mut Vec<BigRational>| {
            if row[c].is_zero() {
                return;
            }
            let factor = &row[c] / &pivot_row[c];
            for j in c..row.len() {
                if !pivot_row[j].is_zero() {
                    let d = &factor * &pivot_row[j];
                    row[j] -= d;
                }
            }
        };
        below.iter_mut().for_each(clear);
        head.iter_mut().for_each(clear);
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank over ℚ.
pub fn rank(m: &QMatrix) -> usize {
    integer_echelon(m).1.len()
}

/// Clears denominators row by row, giving primitive integer rows.
fn integer_rows(m: &QMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let mut v: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
            make_primitive(&mut v);
            v
        })
        .collect()
}

fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g > BigInt::one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Fraction-free row echelon form: returns the pivot rows (primitive, in
/// pivot order) and their pivot columns. Pivots are chosen as in [`QMatrix::rref`].
fn integer_echelon(m: &QMatrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut rows = integer_rows(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let a = &pivot_row[c];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = a.gcd(&row[c]);
            let fa = a / &g;
            let fb = &row[c] / &g;
            for j in c..row.len() {
                let x = &row[j] * &fa;
                row[j] = if pivot_row[j].is_zero() {
                    x
                } else {
                    x - &pivot_row[j] * &fb
                };
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// True iff `a` and `b` span the same row space.
pub fn row_space_equal(a: &QMatrix, b: &QMatrix) -> Result<bool> {
    if a.cols != b.cols {
        return Err(Error::ColumnMismatch(a.cols, b.cols));
    }
    let ra = rank(a);
    let rb = rank(b);
    Ok(ra == rb && rank(&a.stack(b)?) == ra)
}

/// Basis of `{v : m·v = 0}`, returned as the rows of a reduced echelon matrix.
pub fn nullspace_basis(m: &QMatrix) -> Vec<Vec<BigRational>> {
    let (r, pivots) = m.row_basis();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let raw: Vec<Vec<BigRational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); m.cols];
            v[f] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect();
    if raw.is_empty() {
        return raw;
    }
    let (basis, _) = QMatrix::from_rows(m.cols, raw)
        .expect("uniform row length")
        .row_basis();
    basis.row_vecs()
}

/// Row space maintained incrementally in reduced echelon form.
///
/// Used to pick an independent subfamily out of a long stream of vectors
/// without materializing the whole matrix.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<Vec<BigRational>>,
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

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the residual.
    pub fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds `v` if it is independent of the current rows. Returns whether it was added.
    pub fn insert(&mut self, v: Vec<BigRational>) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::ColumnMismatch(self.cols, v.len()));
        }
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn into_matrix(self) -> QMatrix {
        QMatrix::from_rows(self.cols, self.rows).expect("uniform row length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small_cases() {
        assert_eq!(rank(&QMatrix::identity(3)), 3);
        assert_eq!(rank(&QMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap()), 1);
        assert_eq!(rank(&QMatrix::zeros(0, 4)), 0);
        assert_eq!(rank(&QMatrix::zeros(4, 0)), 0);
    }

    #[test]
    fn vandermonde_rank_matches_determinant_oracle() {
        // Oracle: det = Π_{i<j}(x_j − x_i) by cofactor expansion, nonzero for distinct nodes.
        fn det(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|&(k, _)| k != j)
                                .map(|(_, &x)| x)
                                .collect()
                        })
                        .collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * m[0][j] * det(&minor)
                })
                .sum()
        }
        let v: Vec<Vec<i64>> = (1..=4)
            .map(|x: i64| (0..4).map(|p| x.pow(p)).collect())
            .collect();
        assert_eq!(det(&v), 12);
        let rows: Vec<&[i64]> = v.iter().map(|r| r.as_slice()).collect();
        assert_eq!(rank(&QMatrix::from_i64(&rows).unwrap()), 4);
    }

    #[test]
    fn row_space_equality() {
        let a = QMatrix::from_i64(&[&[1, 0]]).unwrap();
        let b = QMatrix::from_i64(&[&[2, 0]]).unwrap();
        let c = QMatrix::from_i64(&[&[0, 1]]).unwrap();
        assert!(row_space_equal(&a, &b).unwrap());
        assert!(!row_space_equal(&a, &c).unwrap());
        let wide = QMatrix::zeros(1, 3);
        assert_eq!(row_space_equal(&a, &wide), Err(Error::ColumnMismatch(2, 3)));
    }

    #[test]
    fn nullspace_examples() {
        let z = nullspace_basis(&QMatrix::zeros(2, 2));
        assert_eq!(z, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
        let n = nullspace_basis(&QMatrix::from_i64(&[&[1, 1]]).unwrap());
        assert_eq!(n, vec![vec![q(1), q(-1)]]);
        // x1 - x2 - x6, x1 - x3 + x5, x4 + x5 + x6 in x1..x6
        let rel = QMatrix::from_i64(&[
            &[1, -1, 0, 0, 0, -1],
            &[1, 0, -1, 0, 1, 0],
            &[0, 0, 0, 1, 1, 1],
        ])
        .unwrap();
        let ns = nullspace_basis(&rel);
        assert_eq!(ns.len(), 3);
        let m = QMatrix::from_rows(6, ns).unwrap();
        assert!(rel
            .mul(&m.transpose())
            .unwrap()
            .entries
            .iter()
            .all(Zero::is_zero));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = QMatrix::from_i64(&[&[2, 1], &[7, 4]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), QMatrix::identity(2));
        assert!(QMatrix::from_i64(&[&[1, 2], &[2, 4]])
            .unwrap()
            .inverse()
            .is_none());
    }

    #[test]
    fn echelon_basis_tracks_rank() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(vec![q(1), q(2), q(3)]).unwrap());
        assert!(!e.insert(vec![q(2), q(4), q(6)]).unwrap());
        assert!(e.insert(vec![q(0), q(1), q(1)]).unwrap());
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[q(1), q(3), q(4)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("8/5").unwrap(), frac(8, 5));
        assert_eq!(parse_rational(" -3 ").unwrap(), q(-3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
