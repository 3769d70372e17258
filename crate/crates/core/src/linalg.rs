//! Dense rational linear algebra: just enough Gaussian elimination for
//! kernel computations and membership tests in number-field coordinates.

use crate::rational::Rational;
use num_traits::Zero;

/// Row-major rational matrix.
#[derive(Debug, Clone)]
pub struct RatMatrix {
    pub rows: Vec<Vec<Rational>>,
    pub cols: usize,
}

impl RatMatrix {
    pub fn new(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        RatMatrix { rows, cols }
    }

    /// Reduced row echelon form; returns the pivot column of each row.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero()) else {
                continue;
            };
            self.rows.swap(row, p);
            let inv = self.rows[row][col].clone().recip();
            for c in col..self.cols {
                self.rows[row][c] = &self.rows[row][c] * &inv;
            }
            for r in 0..self.rows.len() {
                if r != row && !self.rows[r][col].is_zero() {
                    let f = self.rows[r][col].clone();
                    for c in col..self.cols {
                        let t = &f * &self.rows[row][c];
                        self.rows[r][c] = &self.rows[r][c] - t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows.len() {
                break;
            }
        }
        pivots
    }
}

/// Expresses `target` as a linear combination of `basis` vectors (all of
/// the same length), if possible. Returns the coefficients.
pub fn solve_linear_combination(
    basis: &[Vec<Rational>],
    target: &[Rational],
) -> Option<Vec<Rational>> {
    let dim = target.len();
    let k = basis.len();
    if k == 0 {
        return if target.iter().all(|x| x.is_zero()) {
            Some(vec![])
        } else {
            None
        };
    }
    // Augmented system: columns are basis vectors, last column the target.
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
        row.push(target[i].clone());
        rows.push(row);
    }
    let mut m = RatMatrix::new(rows, k + 1);
    let pivots = m.rref();
    if pivots.contains(&k) {
        return None; // inconsistent
    }
    let mut coeffs = vec![Rational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        coeffs[c] = m.rows[r][k].clone();
    }
    Some(coeffs)
}

/// Incremental row-space tracker used for "first linear dependency"
/// searches (minimal polynomials) and subfield closures.
#[derive(Debug, Clone)]
pub struct RowSpace {
    dim: usize,
    /// Echelonized basis rows.
    rows: Vec<Vec<Rational>>,
    /// Pivot column of each row.
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(dim: usize) -> Self {
        RowSpace {
            dim,
            rows: vec![],
            pivots: vec![],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for c in 0..self.dim {
                    let t = &f * &row[c];
                    v[c] = &v[c] - t;
                }
            }
        }
    }

    /// True when `v` lies in the current span.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = (0..self.dim).find(|&c| !w[c].is_zero()) else {
            return false;
        };
        let inv = w[p].clone().recip();
        for c in 0..self.dim {
            w[c] = &w[c] * &inv;
        }
        // Back-substitute into existing rows to keep the basis reduced.
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for c in 0..self.dim {
                    let t = &f * &w[c];
                    row[c] = &row[c] - t;
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn solves_combination() {
        let basis = vec![v(&[1, 0, 1]), v(&[0, 1, 1])];
        let c = solve_linear_combination(&basis, &v(&[2, 3, 5])).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(solve_linear_combination(&basis, &v(&[1, 0, 0])).is_none());
    }

    #[test]
    fn rowspace_detects_dependency() {
        let mut rs = RowSpace::new(3);
        assert!(rs.insert(&v(&[1, 2, 3])));
        assert!(rs.insert(&v(&[0, 1, 1])));
        assert!(!rs.insert(&v(&[1, 3, 4])));
        assert_eq!(rs.rank(), 2);
        assert!(rs.contains(&v(&[2, 5, 7])));
        assert!(!rs.contains(&v(&[0, 0, 1])));
    }
}
