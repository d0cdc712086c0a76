use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("adjugate trace of a 0x0 matrix is undefined")]
    Empty,
}

/// Dense matrix of exact rationals with labelled rows and columns.
///
/// Square matrices built from a digraph carry the same label sequence on
/// both axes, so an entry can be addressed by index or by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        let len = row_labels.len() * col_labels.len();
        Self {
            row_labels,
            col_labels,
            data: vec![Rational::zero(); len],
        }
    }

    /// Square zero matrix with `labels` on both axes.
    pub fn square(labels: Vec<String>) -> Self {
        Self::zeros(labels.clone(), labels)
    }

    /// Square matrix with row-major entries and generated labels `0..n`.
    ///
    /// Panics if `rows` is not square.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut m = Self::square(labels);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has wrong length");
            for (j, x) in row.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Convenience constructor from integer entries.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let mut m = Self::square(labels);
        for i in 0..m.rows() {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    /// Order of a square matrix.
    pub fn order(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows())
        } else {
            Err(MatrixError::NotSquare(self.rows(), self.cols()))
        }
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        let c = self.cols();
        &self.data[i * c..(i + 1) * c]
    }

    /// Entry addressed by row and column label.
    pub fn get(&self, row: &str, col: &str) -> Result<&Rational, MatrixError> {
        let i = position(&self.row_labels, row)?;
        let j = position(&self.col_labels, col)?;
        Ok(&self[(i, j)])
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows()).all(|i| (0..self.cols()).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Removes the row and column carrying `label`, preserving label order.
    pub fn delete_row_col(&self, label: &str) -> Result<Self, MatrixError> {
        self.order()?;
        let k = position(&self.row_labels, label)?;
        Ok(self.without_index(k))
    }

    pub(crate) fn without_index(&self, k: usize) -> Self {
        let keep: Vec<usize> = (0..self.rows()).filter(|&i| i != k).collect();
        let labels: Vec<String> = keep.iter().map(|&i| self.row_labels[i].clone()).collect();
        let mut out = Self::square(labels);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Sum of diagonal entries of a square matrix.
    pub fn trace(&self) -> Rational {
        (0..self.rows().min(self.cols()))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    /// Stacks `[[a, b], [c, d]]` into one matrix; labels come from `a`'s rows
    /// followed by `c`'s rows, and `a`'s columns followed by `b`'s columns.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows(), b.rows());
        assert_eq!(c.rows(), d.rows());
        assert_eq!(a.cols(), c.cols());
        assert_eq!(b.cols(), d.cols());
        let rows: Vec<String> = a.row_labels.iter().chain(&c.row_labels).cloned().collect();
        let cols: Vec<String> = a.col_labels.iter().chain(&b.col_labels).cloned().collect();
        let mut out = Self::zeros(rows, cols);
        let (r0, c0) = (a.rows(), a.cols());
        for (src, dr, dc) in [(a, 0, 0), (b, 0, c0), (c, r0, 0), (d, r0, c0)] {
            for i in 0..src.rows() {
                for j in 0..src.cols() {
                    out[(dr + i, dc + j)] = src[(i, j)].clone();
                }
            }
        }
        out
    }

    /// Same entries under new labels; panics on a length mismatch.
    pub fn relabel(mut self, rows: Vec<String>, cols: Vec<String>) -> Self {
        assert_eq!(rows.len(), self.rows());
        assert_eq!(cols.len(), self.cols());
        self.row_labels = rows;
        self.col_labels = cols;
        self
    }

    /// Every entry multiplied by `c`.
    pub fn scaled(&self, c: &Rational) -> Self {
        Self {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Entry-wise equality ignoring labels.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.rows() == other.rows() && self.cols() == other.cols() && self.data == other.data
    }
}

fn position(labels: &[String], label: &str) -> Result<usize, MatrixError> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| MatrixError::UnknownLabel(label.to_string()))
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(
            i < self.rows() && j < self.cols(),
            "index ({i},{j}) out of bounds"
        );
        &self.data[i * self.cols() + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(
            i < self.rows() && j < self.cols(),
            "index ({i},{j}) out of bounds"
        );
        let c = self.cols();
        &mut self.data[i * c + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols(), rhs.rows(), "dimension mismatch in product");
        let mut out = RationalMatrix::zeros(self.row_labels.clone(), rhs.col_labels.clone());
        for i in 0..self.rows() {
            for k in 0..self.cols() {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols() {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

fn zip_with(
    a: &RationalMatrix,
    b: &RationalMatrix,
    f: impl Fn(&Rational, &Rational) -> Rational,
) -> RationalMatrix {
    assert_eq!(
        (a.rows(), a.cols()),
        (b.rows(), b.cols()),
        "dimension mismatch"
    );
    RationalMatrix {
        row_labels: a.row_labels.clone(),
        col_labels: a.col_labels.clone(),
        data: a.data.iter().zip(&b.data).map(|(x, y)| f(x, y)).collect(),
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows() {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labelled(labels: &[&str], rows: &[&[i64]]) -> RationalMatrix {
        let l: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        RationalMatrix::from_ints(rows).relabel(l.clone(), l)
    }

    #[test]
    fn delete_row_col_keeps_order() {
        let m = labelled(&["u", "v"], &[&[1, 2], &[3, 4]]);
        let d = m.delete_row_col("u").unwrap();
        assert_eq!(d.rows(), 1);
        assert_eq!(d.get("v", "v").unwrap(), &Rational::from_integer(4.into()));

        let one = labelled(&["x"], &[&[7]]);
        let empty = one.delete_row_col("x").unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 0));

        let m3 = labelled(&["u", "v", "w"], &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let d = m3.delete_row_col("w").unwrap();
        assert!(d.same_entries(&RationalMatrix::from_ints(&[&[1, 2], &[4, 5]])));
        assert_eq!(d.row_labels(), ["u", "v"]);

        assert_eq!(
            m3.delete_row_col("z"),
            Err(MatrixError::UnknownLabel("z".into()))
        );
    }

    #[test]
    fn products_and_blocks() {
        let a = RationalMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = RationalMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert!((&a * &b).same_entries(&RationalMatrix::from_ints(&[&[2, 1], &[4, 3]])));
        assert!((&a - &a).same_entries(&RationalMatrix::from_ints(&[&[0, 0], &[0, 0]])));
        let blk = RationalMatrix::block(&a, &b, &b, &a);
        assert_eq!(blk.rows(), 4);
        assert_eq!(blk[(2, 1)], Rational::one());
        assert_eq!(blk[(3, 3)], Rational::from_integer(4.into()));
        assert_eq!(a.trace(), Rational::from_integer(5.into()));
    }
}
