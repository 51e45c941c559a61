//! Dense square matrices of polynomials and exact determinants.

use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1);
        PolyMatrix {
            dim,
            data: vec![Poly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m[(i, i)] = Poly::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `1 - M`, the secular matrix of a transition matrix.
    pub fn identity_minus(&self) -> PolyMatrix {
        let mut out = Self::identity(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = &out[(i, j)] - &self[(i, j)];
            }
        }
        out
    }

    /// `1 + M`.
    pub fn identity_plus(&self) -> PolyMatrix {
        let mut out = Self::identity(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = &out[(i, j)] + &self[(i, j)];
            }
        }
        out
    }

    pub fn matmul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.dim);
        for i in 0..self.dim {
            for l in 0..self.dim {
                if self[(i, l)].is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    if other[(l, j)].is_zero() {
                        continue;
                    }
                    out[(i, j)] = &out[(i, j)] + &(&self[(i, l)] * &other[(l, j)]);
                }
            }
        }
        out
    }

    /// Left action of the matrix on a row vector.
    pub fn row_vec_mul(&self, row: &[Poly]) -> Vec<Poly> {
        assert_eq!(row.len(), self.dim);
        let mut out = vec![Poly::zero(); self.dim];
        for (i, r) in row.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if self[(i, j)].is_zero() {
                    continue;
                }
                out[j] = &out[j] + &(r * &self[(i, j)]);
            }
        }
        out
    }

    /// Matrix with one row and one column removed.
    pub fn complement(&self, row: usize, col: usize) -> PolyMatrix {
        assert!(self.dim >= 2 && row < self.dim && col < self.dim);
        PolyMatrix::from_fn(self.dim - 1, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self[(si, sj)].clone()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant: Laplace expansion up to dimension 8, one-step
    /// fraction-free elimination above. Both paths are exact; elimination
    /// divides by the previous pivot, which is always exact over an
    /// integral domain.
    pub fn det(&self) -> Poly {
        if self.dim <= 8 {
            self.det_laplace()
        } else {
            self.det_bareiss()
        }
    }

    fn det_laplace(&self) -> Poly {
        if self.dim == 1 {
            return self[(0, 0)].clone();
        }
        let mut acc = Poly::zero();
        for j in 0..self.dim {
            if self[(0, j)].is_zero() {
                continue;
            }
            let minor = self.complement(0, j).det_laplace();
            let term = &self[(0, j)] * &minor;
            if j % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }

    fn det_bareiss(&self) -> Poly {
        let n = self.dim;
        let mut m = self.data.clone();
        let at = |i: usize, j: usize| i * n + j;
        let mut sign = 1i64;
        let mut prev_pivot = Poly::one();
        for i in 0..n - 1 {
            if m[at(i, i)].is_zero() {
                let swap = (i + 1..n).find(|&r| !m[at(r, i)].is_zero());
                match swap {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(at(i, c), at(r, c));
                        }
                        sign = -sign;
                    }
                    None => return Poly::zero(),
                }
            }
            for r in i + 1..n {
                for c in i + 1..n {
                    let num = &(&m[at(i, i)] * &m[at(r, c)]) - &(&m[at(r, i)] * &m[at(i, c)]);
                    m[at(r, c)] = num
                        .exact_div(&prev_pivot)
                        .expect("fraction-free elimination divides exactly");
                }
            }
            for r in i + 1..n {
                m[at(r, i)] = Poly::zero();
            }
            prev_pivot = m[at(i, i)].clone();
        }
        let d = m[at(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        &mut self.data[i * self.dim + j]
    }
}
