use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64 as C64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Two-component complex vector: one chiral block of a bispinor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Block(pub [C64; 2]);

impl Block {
    /// The zero block.
    pub const ZERO: Block = Block([ZERO, ZERO]);

    /// Builds a block from its two components.
    pub const fn new(upper: C64, lower: C64) -> Self {
        Block([upper, lower])
    }

    /// Componentwise complex conjugate.
    pub fn conj(&self) -> Self {
        Block([self.0[0].conj(), self.0[1].conj()])
    }

    /// Hermitian inner product `⟨self, other⟩ = self† other`.
    pub fn inner(&self, other: &Block) -> C64 {
        self.0[0].conj() * other.0[0] + self.0[1].conj() * other.0[1]
    }

    /// `φ†φ`.
    pub fn norm_sqr(&self) -> f64 {
        self.0[0].norm_sqr() + self.0[1].norm_sqr()
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// Multiplies both components by a complex scalar.
    pub fn scale(&self, s: C64) -> Self {
        Block([self.0[0] * s, self.0[1] * s])
    }

    /// Expectation values `(φ†σ¹φ, φ†σ²φ, φ†σ³φ)`.
    pub fn spin_vector(&self) -> [f64; 3] {
        let [u, v] = self.0;
        let cross = u.conj() * v;
        [2.0 * cross.re, 2.0 * cross.im, u.norm_sqr() - v.norm_sqr()]
    }
}

impl Add for Block {
    type Output = Block;
    fn add(self, rhs: Block) -> Block {
        Block([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1]])
    }
}

impl Sub for Block {
    type Output = Block;
    fn sub(self, rhs: Block) -> Block {
        Block([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1]])
    }
}

impl Neg for Block {
    type Output = Block;
    fn neg(self) -> Block {
        Block([-self.0[0], -self.0[1]])
    }
}

impl Index<usize> for Block {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.0[i]
    }
}

/// Dense 2×2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2(pub [[C64; 2]; 2]);

impl Matrix2 {
    /// Zero matrix.
    pub const ZERO: Matrix2 = Matrix2([[ZERO, ZERO], [ZERO, ZERO]]);
    /// Identity matrix.
    pub const IDENTITY: Matrix2 = Matrix2([[ONE, ZERO], [ZERO, ONE]]);

    /// Multiplies every entry by a complex scalar.
    pub fn scale(&self, s: C64) -> Self {
        Matrix2(self.0.map(|row| row.map(|x| x * s)))
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Matrix2(self.0.map(|row| row.map(|x| x.conj())))
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Matrix2([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    /// Determinant.
    pub fn det(&self) -> C64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Trace.
    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0, |acc, x| f64::max(acc, x.norm()))
    }

    /// Applies the matrix to a block.
    pub fn apply(&self, v: &Block) -> Block {
        let m = &self.0;
        Block([
            m[0][0] * v.0[0] + m[0][1] * v.0[1],
            m[1][0] * v.0[0] + m[1][1] * v.0[1],
        ])
    }
}

impl Add for Matrix2 {
    type Output = Matrix2;
    fn add(self, rhs: Matrix2) -> Matrix2 {
        let mut out = self;
        for (o, r) in out.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *o += r;
        }
        out
    }
}

impl Sub for Matrix2 {
    type Output = Matrix2;
    fn sub(self, rhs: Matrix2) -> Matrix2 {
        self + (-rhs)
    }
}

impl Neg for Matrix2 {
    type Output = Matrix2;
    fn neg(self) -> Matrix2 {
        Matrix2(self.0.map(|row| row.map(|x| -x)))
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;
    fn mul(self, rhs: Matrix2) -> Matrix2 {
        let mut out = Matrix2::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j];
            }
        }
        out
    }
}

impl Mul<Block> for Matrix2 {
    type Output = Block;
    fn mul(self, rhs: Block) -> Block {
        self.apply(&rhs)
    }
}

/// Dense 4×4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[C64; 4]; 4]);

impl Matrix4 {
    /// Zero matrix.
    pub const ZERO: Matrix4 = Matrix4([[ZERO; 4]; 4]);

    /// Identity matrix.
    pub fn identity() -> Self {
        Self::from_blocks(
            Matrix2::IDENTITY,
            Matrix2::ZERO,
            Matrix2::ZERO,
            Matrix2::IDENTITY,
        )
    }

    /// Assembles `[[upper_left, upper_right], [lower_left, lower_right]]`.
    pub fn from_blocks(ul: Matrix2, ur: Matrix2, ll: Matrix2, lr: Matrix2) -> Self {
        let mut out = Matrix4::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = ul.0[i][j];
                out.0[i][j + 2] = ur.0[i][j];
                out.0[i + 2][j] = ll.0[i][j];
                out.0[i + 2][j + 2] = lr.0[i][j];
            }
        }
        out
    }

    /// Multiplies every entry by a complex scalar.
    pub fn scale(&self, s: C64) -> Self {
        Matrix4(self.0.map(|row| row.map(|x| x * s)))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Matrix4::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0, |acc, x| f64::max(acc, x.norm()))
    }

    /// Applies the matrix to a column of four components.
    pub fn apply(&self, v: &[C64; 4]) -> [C64; 4] {
        core::array::from_fn(|i| (0..4).map(|k| self.0[i][k] * v[k]).sum())
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &Matrix4) -> Matrix4 {
        *self * *other + *other * *self
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl Add for Matrix4 {
    type Output = Matrix4;
    fn add(self, rhs: Matrix4) -> Matrix4 {
        let mut out = self;
        for (o, r) in out.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *o += r;
        }
        out
    }
}

impl Sub for Matrix4 {
    type Output = Matrix4;
    fn sub(self, rhs: Matrix4) -> Matrix4 {
        self + rhs.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        let mut out = Matrix4::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        out
    }
}
