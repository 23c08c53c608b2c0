//! Dense LU factorization with partial pivoting for the small complex
//! matrices that appear in the resolvent calculations (n is at most a few
//! tens of nodes).

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Packed LU factors `P A = L U` with unit lower-triangular `L`.
#[derive(Debug, Clone)]
pub struct Lu {
    factors: CMatrix,
    perm: Vec<usize>,
    norm1: f64,
    singular: bool,
}

/// Column-sum (1-) norm with the modulus as entry magnitude.
pub fn norm1(a: &CMatrix) -> f64 {
    a.column_iter()
        .map(|col| col.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

impl Lu {
    pub fn factor(a: &CMatrix) -> Self {
        assert!(a.is_square(), "LU factorization needs a square matrix");
        let n = a.nrows();
        let norm1 = norm1(a);
        let mut f = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut singular = false;

        for k in 0..n {
            let (mut piv, mut best) = (k, f[(k, k)].norm());
            for i in k + 1..n {
                let m = f[(i, k)].norm();
                if m > best {
                    piv = i;
                    best = m;
                }
            }
            if best == 0.0 {
                singular = true;
                continue;
            }
            if piv != k {
                f.swap_rows(k, piv);
                perm.swap(k, piv);
            }
            let inv = f[(k, k)].inv();
            for i in k + 1..n {
                let l = f[(i, k)] * inv;
                f[(i, k)] = l;
                if l != Complex64::new(0.0, 0.0) {
                    for j in k + 1..n {
                        let u = f[(k, j)];
                        f[(i, j)] -= l * u;
                    }
                }
            }
        }
        Lu {
            factors: f,
            perm,
            norm1,
            singular,
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    /// Solves `A x = b`. Returns `None` when a zero pivot was met.
    pub fn solve(&self, b: &CVector) -> Option<CVector> {
        if self.singular {
            return None;
        }
        let n = self.dim();
        assert_eq!(b.len(), n);
        let f = &self.factors;
        let mut x = CVector::from_iterator(n, self.perm.iter().map(|&p| b[p]));
        for i in 0..n {
            let mut s = x[i];
            for j in 0..i {
                s -= f[(i, j)] * x[j];
            }
            x[i] = s;
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= f[(i, j)] * x[j];
            }
            x[i] = s / f[(i, i)];
        }
        Some(x)
    }

    /// Reciprocal 1-norm condition number, `1 / (‖A‖₁ ‖A⁻¹‖₁)`.
    ///
    /// ‖A⁻¹‖₁ is computed exactly column by column; at the sizes used here
    /// this costs a handful of extra triangular solves.
    pub fn rcond(&self) -> f64 {
        if self.singular || self.norm1 == 0.0 {
            return 0.0;
        }
        let n = self.dim();
        let mut inv_norm = 0.0_f64;
        let mut e = CVector::zeros(n);
        for j in 0..n {
            e[j] = Complex64::new(1.0, 0.0);
            let col = self.solve(&e).expect("nonsingular factors");
            inv_norm = inv_norm.max(col.iter().map(|z| z.norm()).sum());
            e[j] = Complex64::new(0.0, 0.0);
        }
        if !inv_norm.is_finite() {
            return 0.0;
        }
        1.0 / (self.norm1 * inv_norm)
    }
}
