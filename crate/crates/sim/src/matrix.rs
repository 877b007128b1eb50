use crate::kernels::C64;

/// Dense complex matrix, row-major, used for unitaries and oracles.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl UnitaryMatrix {
    pub fn zeros(dim: usize) -> Self {
        UnitaryMatrix {
            dim,
            data: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.data[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: C64) {
        self.data[r * self.dim + c] = v;
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &UnitaryMatrix) -> UnitaryMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        let d = self.dim;
        let mut out = UnitaryMatrix::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..d {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> UnitaryMatrix {
        let d = self.dim;
        let mut out = UnitaryMatrix::zeros(d);
        for r in 0..d {
            for c in 0..d {
                out.set(r, c, self.get(c, r).conj());
            }
        }
        out
    }

    /// Multiplies every entry by a scalar.
    pub fn scaled(&self, s: C64) -> UnitaryMatrix {
        UnitaryMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// Largest elementwise absolute difference.
    pub fn max_abs_diff(&self, other: &UnitaryMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max-norm deviation of `U^dagger U` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        self.dagger().mul(self).max_abs_diff(&UnitaryMatrix::identity(self.dim))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    /// Row-major entry iterator (row, col, value).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        let d = self.dim;
        self.data
            .iter()
            .enumerate()
            .map(move |(i, &v)| (i / d, i % d, v))
    }
}
