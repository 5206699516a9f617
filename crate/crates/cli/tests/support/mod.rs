#![allow(dead_code)]

use primsft::{EvpPoint, SftSystem, Stratum, Symbol};
use rand::rngs::StdRng;
use rand::Rng;

/// A point of `X∞` written out by hand: `left` ends at position -1,
/// `bridge` starts at 0, `right` repeats after it, and `k` is the current
/// coordinate.
#[derive(Debug, Clone)]
pub struct RawPoint {
    pub left: Vec<Symbol>,
    pub bridge: Vec<Symbol>,
    pub right: Vec<Symbol>,
    pub k: i64,
}

impl RawPoint {
    pub fn at(&self, i: i64) -> Symbol {
        let b = self.bridge.len() as i64;
        if i < 0 {
            self.left[i.rem_euclid(self.left.len() as i64) as usize]
        } else if i < b {
            self.bridge[i as usize]
        } else {
            self.right[((i - b) % self.right.len() as i64) as usize]
        }
    }

    /// `m × m` truncation of the coordinate tuple `(x_r, x_{r+1}, …)`.
    pub fn encode(&self, m: usize) -> Vec<Vec<Symbol>> {
        (0..m as i64)
            .map(|i| (0..m as i64).map(|j| self.at(self.k - i + j)).collect())
            .collect()
    }

    /// First index `<= k` that leaves `Y` when read backwards from `k`,
    /// i.e. whether every past coordinate (and the current one) lies in `Y`.
    pub fn all_past_in(&self, sys: &SftSystem, upto: i64) -> bool {
        let lo = upto.min(0) - self.left.len() as i64;
        (lo..=upto).all(|i| sys.in_domain(self.at(i)))
    }

    pub fn stratum(&self, sys: &SftSystem) -> Option<Stratum> {
        if self.all_past_in(sys, self.k) {
            Some(Stratum::Paths)
        } else if self.all_past_in(sys, self.k - 1) {
            Some(Stratum::Tail(0))
        } else {
            None
        }
    }

    pub fn admissible(&self, sys: &SftSystem) -> bool {
        let lo = -2 * self.left.len() as i64;
        let hi = (self.bridge.len() + 2 * self.right.len()) as i64;
        (lo..hi).all(|i| sys.allows(self.at(i), self.at(i + 1)))
    }

    pub fn build(&self, sys: &SftSystem, stratum: Option<Stratum>) -> primsft::Result<EvpPoint> {
        EvpPoint::from_parts(sys, &self.left, &self.bridge, &self.right, self.k, stratum)
    }
}

pub fn encode_point(x: &EvpPoint, m: usize) -> Vec<Vec<Symbol>> {
    let k = x.offset();
    (0..m as i64)
        .map(|i| (0..m as i64).map(|j| x.symbol_at(k - i + j)).collect())
        .collect()
}

/// `(x_0, x_1, …) ↦ (σ(x_0), x_0, x_1, …)` on an `(m+1)`-truncation.
pub fn prepend_sigma(enc: &[Vec<Symbol>], m: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![enc[0][1..=m].to_vec()];
    out.extend(enc[..m - 1].iter().map(|row| row[..m].to_vec()));
    out
}

fn random_word(rng: &mut StdRng, k: usize, max: usize, min: usize) -> Vec<Symbol> {
    let len = rng.gen_range(min..=max);
    (0..len)
        .map(|_| Symbol(rng.gen_range(0..k) as u16))
        .collect()
}

/// Admissible raw points in a given stratum family (`Paths` or `Tail(0)`).
pub fn raw_points(sys: &SftSystem, rng: &mut StdRng, want: Stratum, count: usize) -> Vec<RawPoint> {
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        assert!(tries < 1_000_000, "no raw points of stratum {want}");
        let p = RawPoint {
            left: random_word(rng, sys.size(), 3, 1),
            bridge: random_word(rng, sys.size(), 3, 0),
            right: random_word(rng, sys.size(), 3, 1),
            k: rng.gen_range(-5..=8),
        };
        if p.admissible(sys) && p.stratum(sys) == Some(want) {
            out.push(p);
        }
    }
    out
}

/// Integer partitions of `n`, largest part first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A permutation with the given cycle type, cycles on consecutive points.
pub fn permutation_of_type(parts: &[usize]) -> SftSystem {
    let mut image = Vec::new();
    let mut start = 0;
    for &len in parts {
        image.extend((0..len).map(|i| start + (i + 1) % len));
        start += len;
    }
    SftSystem::permutation(&image).unwrap()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
