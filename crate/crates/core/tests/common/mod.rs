#![allow(dead_code)]

use primsft::inverse_limit::gamma_inv;
use primsft::{Cycle, EvpPoint, SftSystem, Stratum, Symbol};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn systems() -> Vec<(&'static str, SftSystem)> {
    vec![
        ("full2", SftSystem::full_shift(2, None).unwrap()),
        ("full2/S={0}", SftSystem::full_shift(2, Some(&[0])).unwrap()),
        ("golden", SftSystem::golden_mean(None).unwrap()),
        ("golden/S={0}", SftSystem::golden_mean(Some(&[0])).unwrap()),
        (
            "full3/S={0,2}",
            SftSystem::full_shift(3, Some(&[0, 2])).unwrap(),
        ),
    ]
}

pub fn syms(v: &[u16]) -> Vec<Symbol> {
    v.iter().map(|&s| Symbol(s)).collect()
}

fn rotated(c: &Cycle, r: usize) -> Vec<Symbol> {
    let w = c.word();
    w[r % w.len()..]
        .iter()
        .chain(&w[..r % w.len()])
        .copied()
        .collect()
}

/// A random eventually periodic point, or `None` when the draw is not
/// admissible or not in the dilation space. Tail points are pushed a random
/// number of strata forward.
pub fn random_point(
    sys: &SftSystem,
    rng: &mut StdRng,
    max_cycle: usize,
    max_bridge: usize,
) -> Option<EvpPoint> {
    let cycles = sys.enumerate_cycles(max_cycle);
    let l = cycles.choose(rng)?;
    let r = cycles.choose(rng)?;
    let left = rotated(l, rng.gen_range(0..l.len()));
    let right = rotated(r, rng.gen_range(0..r.len()));
    let blen = rng.gen_range(0..=max_bridge);
    let bridge: Vec<Symbol> = (0..blen)
        .map(|_| Symbol(rng.gen_range(0..sys.size()) as u16))
        .collect();
    let span = (blen + right.len()) as i64;
    let offset = rng.gen_range(-6..=span + 6);
    let mut x = EvpPoint::from_parts(sys, &left, &bridge, &right, offset, None).ok()?;
    if x.stratum() == Stratum::Tail(0) {
        for _ in 0..rng.gen_range(0..5) {
            x = gamma_inv(sys, &x);
        }
    }
    Some(x)
}

pub fn random_points(
    sys: &SftSystem,
    rng: &mut StdRng,
    count: usize,
    max_cycle: usize,
    max_bridge: usize,
) -> Vec<EvpPoint> {
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 200 * count + 1000, "generator starved");
        if let Some(x) = random_point(sys, rng, max_cycle, max_bridge) {
            out.push(x);
        }
    }
    out
}

/// Every word of length `n` over the alphabet, in lexicographic order.
pub fn all_words(k: usize, n: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |s| {
                    let mut v = w.clone();
                    v.push(Symbol(s as u16));
                    v
                })
            })
            .collect();
    }
    out
}

pub fn cyclically_admissible(sys: &SftSystem, w: &[Symbol]) -> bool {
    (0..w.len()).all(|i| sys.allows(w[i], w[(i + 1) % w.len()]))
}

/// Number of admissible circular words of length `n`, by enumeration.
pub fn brute_periodic_count(sys: &SftSystem, n: usize) -> u128 {
    all_words(sys.size(), n)
        .iter()
        .filter(|w| cyclically_admissible(sys, w))
        .count() as u128
}

/// Primitive necklaces of length `n`, each as its least rotation.
pub fn brute_necklaces(sys: &SftSystem, n: usize) -> Vec<Vec<Symbol>> {
    let mut out: Vec<Vec<Symbol>> = all_words(sys.size(), n)
        .into_iter()
        .filter(|w| cyclically_admissible(sys, w))
        .filter(|w| (1..n).all(|r| w[r..].iter().chain(&w[..r]).ne(w.iter())))
        .map(|w| (0..n).map(|r| [&w[r..], &w[..r]].concat()).min().unwrap())
        .collect();
    out.sort();
    out.dedup();
    out
}
