//! Small dense square matrices over an exact or floating scalar type.

use num_complex::Complex64;

use super::cyclo::Cyclo;
use crate::angle::Angle;
use crate::error::Result;

pub trait Scalar: Clone + std::fmt::Debug {
    /// Construction context: the cyclotomic order for exact scalars.
    type Ctx: Copy + std::fmt::Debug + num_integer::Integer;

    fn zero(ctx: Self::Ctx) -> Self;
    fn gaussian(ctx: Self::Ctx, re: i64, im: i64) -> Self;
    fn root(ctx: Self::Ctx, angle: Angle) -> Result<Self>;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn conj(&self) -> Self;
    /// `|x|`; exactly zero iff `x` is zero in exact arithmetic.
    fn magnitude(&self) -> f64;
}

impl Scalar for Cyclo {
    type Ctx = u32;

    fn zero(ctx: u32) -> Self {
        Cyclo::zero(ctx)
    }

    fn gaussian(ctx: u32, re: i64, im: i64) -> Self {
        Cyclo::gaussian(ctx, re, im)
    }

    fn root(ctx: u32, angle: Angle) -> Result<Self> {
        let (num, den) = angle.as_fraction()?;
        assert!(
            (ctx as u64).is_multiple_of(den),
            "order {ctx} does not contain 1/{den}"
        );
        Ok(Cyclo::root(ctx, (num * (ctx as u64 / den)) as i64))
    }

    fn add(&self, other: &Self) -> Self {
        Cyclo::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        Cyclo::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        Cyclo::mul(self, other)
    }

    fn conj(&self) -> Self {
        Cyclo::conj(self)
    }

    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.to_complex().norm().max(f64::MIN_POSITIVE)
        }
    }
}

impl Scalar for Complex64 {
    type Ctx = u32;

    fn zero(_: u32) -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn gaussian(_: u32, re: i64, im: i64) -> Self {
        Complex64::new(re as f64, im as f64)
    }

    fn root(_: u32, angle: Angle) -> Result<Self> {
        angle.to_complex()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

#[derive(Debug, Clone)]
pub struct Mat<T: Scalar> {
    ctx: T::Ctx,
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(ctx: T::Ctx, n: usize) -> Self {
        Mat {
            ctx,
            n,
            data: vec![T::zero(ctx); n * n],
        }
    }

    pub fn identity(ctx: T::Ctx, n: usize) -> Self {
        Self::diag(ctx, vec![T::gaussian(ctx, 1, 0); n])
    }

    pub fn diag(ctx: T::Ctx, entries: Vec<T>) -> Self {
        let mut m = Self::zeros(ctx, entries.len());
        for (i, v) in entries.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Mat {
            ctx: self.ctx,
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(self.ctx, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.magnitude() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    let idx = i * n + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(self.ctx, n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.mul(c))
    }

    /// Largest entrywise `|self - other|`.
    pub fn residual(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b).magnitude())
            .fold(0.0, f64::max)
    }
}

impl PartialEq for Mat<Cyclo> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.data.iter().zip(&other.data).all(|(a, b)| a == b)
    }
}
