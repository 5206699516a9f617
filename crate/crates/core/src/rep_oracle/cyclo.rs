//! Exact elements of `ℤ[ζ_m]`.
//!
//! An element is stored as `Σ c_k ζ^k` over `k ∈ 0..m` (an element of the
//! group ring `ℤ[ℤ/m]`). The representation is not unique; equality and
//! zero tests reduce modulo the cyclotomic polynomial `Φ_m`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_integer::Integer;

thread_local! {
    static CYCLOTOMIC: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

/// Coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Rc<Vec<i64>> {
    assert!(m >= 1);
    if let Some(p) = CYCLOTOMIC.with(|c| c.borrow().get(&m).cloned()) {
        return p;
    }
    // x^m - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = exact_divide(&num, &cyclotomic_polynomial(d));
        }
    }
    let p = Rc::new(num);
    CYCLOTOMIC.with(|c| c.borrow_mut().insert(m, p.clone()));
    p
}

/// Division by a monic polynomial that is known to be exact.
fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

#[derive(Debug, Clone)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<i64>,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("cyclotomic coefficient overflow")
}

impl Cyclo {
    pub fn zero(order: u32) -> Self {
        Cyclo {
            order,
            coeffs: vec![0; order as usize],
        }
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = v;
        z
    }

    /// `ζ_m^k`.
    pub fn root(order: u32, k: i64) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[k.rem_euclid(order as i64) as usize] = 1;
        z
    }

    /// `re + i·im`; needs `4 | order`.
    pub fn gaussian(order: u32, re: i64, im: i64) -> Self {
        assert!(order.is_multiple_of(4), "gaussian integers need 4 | order");
        let mut z = Self::from_int(order, re);
        z.coeffs[(order / 4) as usize] = im;
        z
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Re-expresses the element in `ℤ[ζ_n]` for a multiple `n` of the order.
    pub fn lift(&self, n: u32) -> Self {
        if n == self.order {
            return self.clone();
        }
        assert!(n.is_multiple_of(self.order));
        let step = (n / self.order) as usize;
        let mut z = Self::zero(n);
        for (k, &c) in self.coeffs.iter().enumerate() {
            z.coeffs[k * step] = c;
        }
        z
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let n = self.order.lcm(&other.order);
        (self.lift(n), other.lift(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x = checked(x.checked_add(*y));
        }
        a
    }

    pub fn neg(&self) -> Self {
        Cyclo {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| checked(c.checked_neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let m = a.order as usize;
        let mut out = vec![0i64; m];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let k = (i + j) % m;
                out[k] = checked(out[k].checked_add(checked(x.checked_mul(y))));
            }
        }
        Cyclo {
            order: a.order,
            coeffs: out,
        }
    }

    /// Complex conjugate: `ζ^k ↦ ζ^{-k}`.
    pub fn conj(&self) -> Self {
        let m = self.order as usize;
        let mut out = vec![0i64; m];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[(m - k) % m] = c;
        }
        Cyclo {
            order: self.order,
            coeffs: out,
        }
    }

    /// Unique representative of degree `< φ(m)`.
    pub fn canonical(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        for i in (deg..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate() {
                let t = i - deg + j;
                rem[t] = checked(rem[t].checked_sub(checked(c.checked_mul(pj))));
            }
        }
        rem.truncate(deg);
        rem
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(|&c| c == 0)
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        let m = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                num_complex::Complex64::from_polar(c as f64, std::f64::consts::TAU * k as f64 / m)
            })
            .sum()
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl Eq for Cyclo {}
