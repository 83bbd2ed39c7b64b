//! Exact linear algebra over GF(2) for symmetric matrices: rank, nullity,
//! bordered extensions, and the three-matrix nullity classification used by
//! split labels.

use crate::bits::BitVec;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
}

/// A symmetric matrix over GF(2) with bit-packed rows. The diagonal may carry
/// loops. Instances are treated as immutable once built; every operation
/// works on a copy.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gf2Matrix {
    n: usize,
    rows: Vec<BitVec>,
}

/// Which of the three nullities `nu(H^S)`, `nu(H)`, `nu(H^{S,loop})` is the
/// strictly largest. The variants name the label class that a partition of
/// this type feeds during split-label accumulation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriType {
    /// `nu(bordered(m, s, false))` exceeds the other two.
    Phi,
    /// `nu(m)` exceeds the other two.
    Chi,
    /// `nu(bordered(m, s, true))` exceeds the other two.
    Psi,
}

impl TriType {
    /// 1, 2 or 3 in the order (phi, chi, psi).
    pub fn index(self) -> u8 {
        match self {
            TriType::Phi => 1,
            TriType::Chi => 2,
            TriType::Psi => 3,
        }
    }
}

impl Gf2Matrix {
    pub fn zero(n: usize) -> Self {
        Gf2Matrix {
            n,
            rows: vec![BitVec::new(n); n],
        }
    }

    /// Build from explicit rows, validating symmetry.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self, Gf2Error> {
        let n = rows.len();
        let mut m = Gf2Matrix::zero(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Gf2Error::IndexOutOfRange { index: row.len(), dim: n });
            }
            for (j, &bit) in row.iter().enumerate() {
                if bit {
                    m.rows[i].set(j, true);
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if m.rows[i].get(j) != m.rows[j].get(i) {
                    return Err(Gf2Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(m)
    }

    /// Set entry (i, j) and its mirror (j, i), preserving symmetry.
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
        self.rows[j].set(i, value);
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// GF(2) rank by Gaussian elimination on a copy. The pivot for each
    /// column is the lowest-index remaining row with a nonzero entry.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut pivot_row = 0;
        for col in 0..self.n {
            let Some(r) = (pivot_row..self.n).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(pivot_row, r);
            let pivot = rows[pivot_row].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != pivot_row && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Nullity: dimension minus GF(2) rank. The 0x0 matrix has nullity 0.
    pub fn nullity(&self) -> usize {
        self.n - self.rank()
    }

    /// The (n+1)x(n+1) matrix obtained by adjoining a new first row/column
    /// with ones exactly at the positions of `s` (old index i lands at i+1)
    /// and corner entry equal to `looped`.
    pub fn bordered(&self, s: &[usize], looped: bool) -> Result<Gf2Matrix, Gf2Error> {
        let mut m = Gf2Matrix::zero(self.n + 1);
        for &i in s {
            if i >= self.n {
                return Err(Gf2Error::IndexOutOfRange { index: i, dim: self.n });
            }
            m.set(0, i + 1, true);
        }
        m.rows[0].set(0, looped);
        for i in 0..self.n {
            for j in self.rows[i].ones() {
                m.rows[i + 1].set(j + 1, true);
            }
        }
        Ok(m)
    }

    /// Classify which of nu(bordered(s, false)), nu(self), nu(bordered(s, true))
    /// is the strictly largest. Exactly one exceeds the other two by 1; any
    /// other pattern is an internal-consistency failure.
    ///
    /// # Panics
    ///
    /// Panics if `s` contains an out-of-range index or the two-equal-one-
    /// greater pattern does not hold.
    pub fn tri_type(&self, s: &[usize]) -> TriType {
        let nu_s = self.bordered(s, false).expect("valid index set").nullity();
        let nu = self.nullity();
        let nu_sl = self.bordered(s, true).expect("valid index set").nullity();
        if nu_s == nu + 1 && nu == nu_sl {
            TriType::Phi
        } else if nu == nu_s + 1 && nu_s == nu_sl {
            TriType::Chi
        } else if nu_sl == nu + 1 && nu == nu_s {
            TriType::Psi
        } else {
            panic!("nullity triple ({nu_s},{nu},{nu_sl}) violates the two-equal-one-greater pattern");
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Gf2Matrix) -> Gf2Matrix {
        let n = self.n + other.n;
        let mut m = Gf2Matrix::zero(n);
        for i in 0..self.n {
            for j in self.rows[i].ones() {
                m.rows[i].set(j, true);
            }
        }
        for i in 0..other.n {
            for j in other.rows[i].ones() {
                m.rows[self.n + i].set(self.n + j, true);
            }
        }
        m
    }
}
