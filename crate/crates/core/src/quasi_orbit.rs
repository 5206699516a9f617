//! Orbit closures, isotropy and the quasi-orbit preorder for eventually
//! periodic points of `X∞`.
//!
//! The closure of the `γ`-orbit of `L^∞ · B · R^∞` is the orbit itself plus
//! the finite orbits of its limit cycles: the past necklace always, and the
//! future necklace when the forward orbit stays in the paths stratum. A
//! forward orbit that enters the tail strata visits each `Tail(p)` piece
//! once and accumulates nowhere. The word-occurrence test in
//! [`closure_contains`] cross-checks this rule.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inverse_limit::{point_from_cycle, EvpPoint, Stratum};
use crate::sft::{Cycle, SftSystem, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Transient {
    /// The whole orbit, for periodic points.
    Finite(Vec<EvpPoint>),
    /// An infinite orbit, described by its canonical member (time 0).
    Infinite { generator: EvpPoint },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitClosure {
    pub transient: Transient,
    pub limit_cycles: BTreeSet<Cycle>,
}

impl OrbitClosure {
    pub fn generator(&self) -> &EvpPoint {
        match &self.transient {
            Transient::Finite(points) => &points[0],
            Transient::Infinite { generator } => generator,
        }
    }
}

/// A class of the relation `x ~ y ⇔ [x] = [y]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuasiOrbit {
    representative: EvpPoint,
    closure: OrbitClosure,
    isotropy_period: usize,
}

impl QuasiOrbit {
    pub fn new(sys: &SftSystem, x: &EvpPoint) -> Self {
        let closure = orbit_closure(sys, x);
        QuasiOrbit {
            representative: closure.generator().clone(),
            isotropy_period: isotropy(x),
            closure,
        }
    }

    pub fn representative(&self) -> &EvpPoint {
        &self.representative
    }

    pub fn closure(&self) -> &OrbitClosure {
        &self.closure
    }

    /// Least `N > 0` generating the isotropy group, or 0 when it is trivial.
    pub fn isotropy_period(&self) -> usize {
        self.isotropy_period
    }

    pub fn is_periodic(&self) -> bool {
        self.isotropy_period > 0
    }

    /// Short human-readable identifier: the cycle for periodic classes, the
    /// representative literal otherwise.
    pub fn fingerprint(&self, sys: &SftSystem) -> String {
        if self.is_periodic() {
            format!(
                "({})^inf",
                sys.format_word(self.representative.right_word())
            )
        } else {
            self.representative.literal(sys)
        }
    }

    /// `closure(self) ⊆ closure(other)`.
    pub fn is_below(&self, sys: &SftSystem, other: &QuasiOrbit, depth: usize) -> bool {
        closure_contains(sys, &other.representative, &self.representative, depth)
            == Containment::Yes
    }
}

pub fn orbit_closure(sys: &SftSystem, x: &EvpPoint) -> OrbitClosure {
    if x.is_periodic() {
        let first = x.at_time(sys, 0);
        let n = x.period().unwrap_or(1) as i128;
        let points = (0..n).map(|t| first.at_time(sys, t)).collect();
        return OrbitClosure {
            transient: Transient::Finite(points),
            limit_cycles: BTreeSet::from([x.right_cycle()]),
        };
    }
    let mut limit_cycles = BTreeSet::from([x.left_cycle()]);
    if x.exit_position(sys).is_none() {
        limit_cycles.insert(x.right_cycle());
    }
    OrbitClosure {
        transient: Transient::Infinite {
            generator: x.at_time(sys, 0),
        },
        limit_cycles,
    }
}

pub fn same_quasi_orbit(sys: &SftSystem, x: &EvpPoint, y: &EvpPoint) -> bool {
    orbit_closure(sys, x) == orbit_closure(sys, y)
}

/// Generator of `ℤ_x`: the least period for periodic points, 0 otherwise.
pub fn isotropy(x: &EvpPoint) -> usize {
    x.period().unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Containment {
    Yes,
    No,
    Unknown,
}

/// Word evidence only: `No` if some central word of `y` of length
/// `<= depth` never occurs in `x`, `Unknown` otherwise.
pub fn closure_contains_words(x: &EvpPoint, y: &EvpPoint, depth: usize) -> Containment {
    let k = y.offset();
    for len in 1..=depth {
        let start = k - ((len as i64 - 1) / 2);
        let word: Vec<Symbol> = (0..len as i64).map(|i| y.symbol_at(start + i)).collect();
        if !occurs(x, &word) {
            return Containment::No;
        }
    }
    Containment::Unknown
}

/// Is `y` in the closure of the `γ`-orbit of `x`?
///
/// The structural rule (same orbit, or `y` periodic on a limit cycle of `x`)
/// is exact on eventually periodic points, so `Unknown` is never returned;
/// the word scan can only refute.
pub fn closure_contains(sys: &SftSystem, x: &EvpPoint, y: &EvpPoint, depth: usize) -> Containment {
    if closure_contains_words(x, y, depth) == Containment::No {
        return Containment::No;
    }
    let structural = if y.is_periodic() {
        x.same_word(y)
            || orbit_closure(sys, x)
                .limit_cycles
                .contains(&y.right_cycle())
    } else {
        x.same_word(y)
    };
    if structural {
        Containment::Yes
    } else {
        Containment::No
    }
}

/// Does `word` occur anywhere in the bi-infinite word of `x`?
fn occurs(x: &EvpPoint, word: &[Symbol]) -> bool {
    let len = word.len() as i64;
    let nl = x.left_word().len() as i64;
    let hi = (x.bridge().len() + x.right_word().len()) as i64;
    // occurrences deep in either periodic tail repeat inside this window
    (-(len + nl)..=hi).any(|start| (0..len).all(|i| x.symbol_at(start + i) == word[i as usize]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Bounds {
    pub max_cycle_len: usize,
    pub max_bridge_len: usize,
    /// Cap on the number of quasi-orbits generated.
    pub max_points: usize,
}

impl Bounds {
    pub const DEFAULT_MAX_POINTS: usize = 20_000;

    pub fn new(max_cycle_len: usize, max_bridge_len: usize) -> Self {
        Bounds {
            max_cycle_len,
            max_bridge_len,
            max_points: Self::DEFAULT_MAX_POINTS,
        }
    }

    /// Word depth that separates every pair of generated classes.
    pub fn depth(&self) -> usize {
        2 * (self.max_cycle_len + self.max_bridge_len) + 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiOrbitSpace {
    pub bounds: Bounds,
    /// Periodic classes first (in cycle order), then aperiodic classes
    /// ordered by representative.
    pub orbits: Vec<QuasiOrbit>,
    /// Pairs `(i, j)` with `closure(orbits[i]) ⊆ closure(orbits[j])`,
    /// including the diagonal, sorted.
    pub preorder: Vec<(usize, usize)>,
    /// Set when `bounds.max_points` cut the enumeration short.
    pub truncated: bool,
}

impl QuasiOrbitSpace {
    pub fn is_below(&self, i: usize, j: usize) -> bool {
        self.preorder.binary_search(&(i, j)).is_ok()
    }
}

/// Quasi-orbits of every cycle of length `<= max_cycle_len` and of every
/// point `L^∞ · B · R^∞` with cycles in that range (in every rotation) and
/// `|B| <= max_bridge_len`, together with the closure preorder.
pub fn quasi_orbit_space(sys: &SftSystem, bounds: Bounds) -> Result<QuasiOrbitSpace> {
    if !sys.check_alpha_unital() {
        return Err(Error::NonUnital);
    }
    if bounds.max_cycle_len == 0 {
        return Err(Error::Bound {
            name: "max_cycle_len",
            min: 1,
        });
    }
    let cycles = sys.enumerate_cycles(bounds.max_cycle_len);
    let mut orbits = Vec::new();
    let mut truncated = false;
    for c in &cycles {
        if orbits.len() >= bounds.max_points {
            truncated = true;
            break;
        }
        orbits.push(QuasiOrbit::new(sys, &point_from_cycle(sys, c)?));
    }

    let rotations: Vec<Vec<Symbol>> = cycles
        .iter()
        .flat_map(|c| {
            let w = c.word();
            (0..w.len()).map(move |r| crate::sft::rotate_left(w, r))
        })
        .collect();
    let mut aperiodic: BTreeSet<EvpPoint> = BTreeSet::new();
    let mut bridge = Vec::new();
    'outer: for left in &rotations {
        for right in &rotations {
            let mut found = Vec::new();
            collect_bridges(
                sys,
                left,
                right,
                bounds.max_bridge_len,
                &mut bridge,
                &mut found,
            );
            for b in found {
                let x = EvpPoint::from_parts(sys, left, &b, right, 0, None)?;
                if x.is_periodic() {
                    continue;
                }
                aperiodic.insert(x.at_time(sys, 0));
                if orbits.len() + aperiodic.len() > bounds.max_points {
                    truncated = true;
                    break 'outer;
                }
            }
        }
    }
    let mut aperiodic: Vec<EvpPoint> = aperiodic.into_iter().collect();
    if orbits.len() + aperiodic.len() > bounds.max_points {
        aperiodic.truncate(bounds.max_points.saturating_sub(orbits.len()));
    }
    orbits.extend(aperiodic.iter().map(|x| QuasiOrbit::new(sys, x)));

    let depth = bounds.depth();
    let mut preorder = Vec::new();
    for (i, qi) in orbits.iter().enumerate() {
        for (j, qj) in orbits.iter().enumerate() {
            if i == j || qi.is_below(sys, qj, depth) {
                preorder.push((i, j));
            }
        }
    }
    Ok(QuasiOrbitSpace {
        bounds,
        orbits,
        preorder,
        truncated,
    })
}

fn collect_bridges(
    sys: &SftSystem,
    left: &[Symbol],
    right: &[Symbol],
    max_len: usize,
    current: &mut Vec<Symbol>,
    out: &mut Vec<Vec<Symbol>>,
) {
    let last = current.last().copied().unwrap_or(left[left.len() - 1]);
    if sys.allows(last, right[0]) {
        out.push(current.clone());
    }
    if current.len() == max_len {
        return;
    }
    for s in sys.symbols() {
        if sys.allows(last, s) {
            current.push(s);
            collect_bridges(sys, left, right, max_len, current, out);
            current.pop();
        }
    }
}

/// True for points of the paths stratum whose whole orbit stays there.
pub fn stays_in_paths(sys: &SftSystem, x: &EvpPoint) -> bool {
    x.stratum() == Stratum::Paths && x.exit_position(sys).is_none()
}
