use std::fmt;

use super::{BitVec, Subspace};

/// A dense matrix over F2 with bit-packed rows, acting on column vectors:
/// a `rows x cols` matrix is a map `F2^cols -> F2^rows`.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        F2Matrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    pub fn from_rows(cols: usize, data: Vec<BitVec>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "row length mismatch");
        F2Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[BitVec]) -> Self {
        let mut data = vec![BitVec::zeros(columns.len()); rows];
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in c.ones() {
                data[i].set(j, true);
            }
        }
        F2Matrix {
            rows,
            cols: columns.len(),
            data,
        }
    }

    /// Parses a grid such as `["110", "011"]`.
    pub fn from_grid(lines: &[&str]) -> Self {
        let cols = lines.first().map_or(0, |l| l.len());
        let data = lines
            .iter()
            .map(|l| {
                assert_eq!(l.len(), cols, "ragged grid");
                BitVec::from_bools(&l.bytes().map(|b| b == b'1').collect::<Vec<_>>())
            })
            .collect();
        F2Matrix::from_rows(cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    pub fn transpose(&self) -> F2Matrix {
        F2Matrix::from_columns(self.cols, &self.data)
    }

    /// The `j`-th column.
    pub fn column(&self, j: usize) -> BitVec {
        BitVec::from_indices(self.rows, (0..self.rows).filter(|&i| self.data[i].get(j)))
    }

    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        BitVec::from_indices(self.rows, (0..self.rows).filter(|&i| self.data[i].dot(v)))
    }

    /// Applies the matrix to every vector of `vs`, transposing once.
    pub fn apply_all(&self, vs: &[BitVec]) -> Vec<BitVec> {
        let columns = self.transpose();
        vs.iter()
            .map(|v| {
                assert_eq!(v.len(), self.cols, "dimension mismatch");
                let mut out = BitVec::zeros(self.rows);
                for j in v.ones() {
                    out.xor_assign(&columns.data[j]);
                }
                out
            })
            .collect()
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut out = BitVec::zeros(other.cols);
                for j in r.ones() {
                    out.xor_assign(&other.data[j]);
                }
                out
            })
            .collect();
        F2Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.cols, "dimension mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        F2Matrix::from_rows(self.cols, data)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut data = self.data.clone();
        let pivots = rref_in_place(&mut data, self.cols);
        data.resize(self.rows, BitVec::zeros(self.cols));
        (
            F2Matrix {
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        rref_in_place(&mut data, self.cols).len()
    }

    /// `{v : M v = 0}` as a subspace of `F2^cols`.
    pub fn kernel(&self) -> Subspace {
        let mut data = self.data.clone();
        let pivots = rref_in_place(&mut data, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors = (0..self.cols).filter(|&f| !is_pivot[f]).map(|f| {
            let mut v = BitVec::unit(self.cols, f);
            for (r, &p) in pivots.iter().enumerate() {
                if data[r].get(f) {
                    v.set(p, true);
                }
            }
            v
        });
        Subspace::from_vectors(self.cols, vectors)
    }

    /// The column space, a subspace of `F2^rows`.
    pub fn image(&self) -> Subspace {
        let t = self.transpose();
        Subspace::from_vectors(self.rows, t.data)
    }

    /// `{v : M v in target}`.
    pub fn preimage(&self, target: &Subspace) -> Subspace {
        assert_eq!(target.ambient_dim(), self.rows, "dimension mismatch");
        let t = self.transpose();
        let reduced: Vec<BitVec> = t.data.iter().map(|c| target.reduce(c)).collect();
        F2Matrix::from_columns(self.rows, &reduced).kernel()
    }

    /// Some `x` with `M x = b`, if one exists.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        // eliminate on the augmented transpose system [M | b]
        let mut rows: Vec<BitVec> = self
            .data
            .iter()
            .zip(0..)
            .map(|(r, i)| r.concat(&BitVec::from_indices(1, b.get(i).then_some(0))))
            .collect();
        let pivots = rref_in_place(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = BitVec::zeros(self.cols);
        for (r, &p) in rows.iter().zip(&pivots) {
            if r.get(self.cols) {
                x.set(p, true);
            }
        }
        Some(x)
    }

    /// ASCII 0/1 grid, one row per line.
    pub fn to_grid(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for r in &self.data {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.to_grid())
    }
}

/// Gauss-Jordan elimination. On return the first `rank` rows hold the reduced
/// echelon basis and the remaining rows are dropped; the pivots are returned.
pub(crate) fn rref_in_place(rows: &mut Vec<BitVec>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(c)) else {
            continue;
        };
        rows.swap(rank, found);
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot, rest) = tail.split_first_mut().unwrap();
        for r in head.iter_mut().chain(rest.iter_mut()) {
            if r.get(c) {
                r.xor_assign_from(pivot, c);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank() {
        assert_eq!(F2Matrix::identity(2).rank(), 2);
        assert_eq!(F2Matrix::identity(200).rank(), 200);
    }

    #[test]
    fn single_row_ones() {
        let m = F2Matrix::from_grid(&["11"]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], BitVec::from_bools(&[true, true]));
    }

    #[test]
    fn product_and_transpose() {
        let a = F2Matrix::from_grid(&["110", "011"]);
        let b = F2Matrix::from_grid(&["10", "01", "11"]);
        assert_eq!(a.mul(&b), F2Matrix::from_grid(&["11", "10"]));
        assert_eq!(a.transpose().transpose(), a);
        let v = BitVec::from_bools(&[true, true, true]);
        assert_eq!(a.mul_vec(&v), BitVec::zeros(2));
        assert_eq!(a.apply_all(std::slice::from_ref(&v)), vec![a.mul_vec(&v)]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = F2Matrix::from_grid(&["1101", "0111", "1010", "0000"]);
        let (r, p) = m.rref();
        let (r2, p2) = r.rref();
        assert_eq!(r, r2);
        assert_eq!(p, p2);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn preimage_of_zero_is_kernel() {
        let m = F2Matrix::from_grid(&["1100", "0011"]);
        assert_eq!(m.preimage(&Subspace::zero(2)), m.kernel());
        assert_eq!(m.preimage(&Subspace::full(2)), Subspace::full(4));
    }

    #[test]
    fn solve_finds_preimages() {
        let m = F2Matrix::from_grid(&["110", "011"]);
        let b = BitVec::from_bools(&[true, false]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let z = F2Matrix::from_grid(&["10", "10"]);
        assert!(z.solve(&BitVec::from_bools(&[true, false])).is_none());
    }

    #[test]
    fn grid_dump() {
        let m = F2Matrix::from_grid(&["10", "01"]);
        assert_eq!(m.to_grid(), "10\n01\n");
    }
}
