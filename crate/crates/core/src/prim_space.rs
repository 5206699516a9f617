//! Points of `Prim(O(E))` in the unital case.
//!
//! A periodic quasi-orbit of least period `N` carries a circle modulo
//! `λ ≈ η ⇔ λ^N = η^N`, so a class is stored by its invariant `λ^N`. An
//! aperiodic quasi-orbit has trivial isotropy and carries a single point.

use std::collections::BTreeSet;
use std::hash::{DefaultHasher, Hash, Hasher};

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::quasi_orbit::{quasi_orbit_space, Bounds, QuasiOrbit, QuasiOrbitSpace};
use crate::sft::SftSystem;

/// Is `(q, λ) ≈ (q, η)`? Trivial isotropy identifies every pair; a period-`N`
/// orbit identifies `λ` and `η` when `λ^N = η^N`.
pub fn approx_equiv(q: &QuasiOrbit, lam: Angle, eta: Angle) -> bool {
    match q.isotropy_period() {
        0 => true,
        n => lam.pow(n as i64) == eta.pow(n as i64),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrimPoint {
    /// A `≈`-class over a periodic quasi-orbit, stored as `λ^N`.
    CircleClass {
        run: u64,
        orbit: usize,
        quasi_orbit: QuasiOrbit,
        angle_class: Angle,
    },
    /// The single point over an aperiodic quasi-orbit.
    ApPoint {
        run: u64,
        orbit: usize,
        quasi_orbit: QuasiOrbit,
    },
}

impl PrimPoint {
    pub fn run(&self) -> u64 {
        match self {
            PrimPoint::CircleClass { run, .. } | PrimPoint::ApPoint { run, .. } => *run,
        }
    }

    /// Index of the quasi-orbit within its [`QuasiOrbitSpace`].
    pub fn orbit_index(&self) -> usize {
        match self {
            PrimPoint::CircleClass { orbit, .. } | PrimPoint::ApPoint { orbit, .. } => *orbit,
        }
    }

    pub fn quasi_orbit(&self) -> &QuasiOrbit {
        match self {
            PrimPoint::CircleClass { quasi_orbit, .. } | PrimPoint::ApPoint { quasi_orbit, .. } => {
                quasi_orbit
            }
        }
    }

    pub fn angle_class(&self) -> Option<Angle> {
        match self {
            PrimPoint::CircleClass { angle_class, .. } => Some(*angle_class),
            PrimPoint::ApPoint { .. } => None,
        }
    }
}

/// The enumerated part of `Prim(O(E))` for one run.
#[derive(Debug, Clone)]
pub struct PrimSpace {
    pub run: u64,
    pub quasi_orbits: QuasiOrbitSpace,
    pub samples: Vec<Angle>,
    pub points: Vec<PrimPoint>,
}

fn run_id(sys: &SftSystem, bounds: &Bounds, samples: &[Angle]) -> u64 {
    let mut h = DefaultHasher::new();
    sys.hash(&mut h);
    bounds.hash(&mut h);
    samples.hash(&mut h);
    h.finish()
}

/// Circle families (materialized at the `≈`-classes of `samples`) and
/// aperiodic points for every quasi-orbit within `bounds`.
pub fn prim_points(sys: &SftSystem, bounds: Bounds, samples: &[Angle]) -> Result<PrimSpace> {
    if !sys.check_alpha_unital() {
        return Err(Error::NonUnital);
    }
    let space = quasi_orbit_space(sys, bounds)?;
    let run = run_id(sys, &bounds, samples);
    let mut points = Vec::new();
    for (orbit, q) in space.orbits.iter().enumerate() {
        match q.isotropy_period() {
            0 => points.push(PrimPoint::ApPoint {
                run,
                orbit,
                quasi_orbit: q.clone(),
            }),
            n => {
                let classes: BTreeSet<Angle> = samples.iter().map(|a| a.pow(n as i64)).collect();
                points.extend(
                    classes
                        .into_iter()
                        .map(|angle_class| PrimPoint::CircleClass {
                            run,
                            orbit,
                            quasi_orbit: q.clone(),
                            angle_class,
                        }),
                );
            }
        }
    }
    Ok(PrimSpace {
        run,
        quasi_orbits: space,
        samples: samples.to_vec(),
        points,
    })
}

/// `closure(small) ⊆ closure(big)` read off the stored closures.
fn closure_subset(small: &QuasiOrbit, big: &QuasiOrbit) -> bool {
    if small == big {
        return true;
    }
    small.is_periodic()
        && big
            .closure()
            .limit_cycles
            .contains(&small.representative().right_cycle())
}

/// Pairs `(i, j)` such that `points[j]` lies in the closure of `{points[i]}`.
///
/// Over an aperiodic quasi-orbit `q` the closure of the single point sweeps
/// the whole circle over every quasi-orbit whose closure lies inside `[q]`.
/// Circle classes over periodic quasi-orbits are closed points.
pub fn specialization(points: &[PrimPoint]) -> Result<Vec<(usize, usize)>> {
    if let Some(first) = points.first() {
        if points.iter().any(|p| p.run() != first.run()) {
            return Err(Error::MixedRun);
        }
    }
    let mut pairs = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate() {
            let related = i == j
                || match p {
                    PrimPoint::ApPoint { quasi_orbit, .. } => {
                        closure_subset(q.quasi_orbit(), quasi_orbit)
                    }
                    PrimPoint::CircleClass { .. } => false,
                };
            if related {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverse_limit::point_from_cycle;
    use crate::sft::{Cycle, Symbol};

    fn q_of(sys: &SftSystem, word: &[u16]) -> QuasiOrbit {
        let w: Vec<Symbol> = word.iter().map(|&s| Symbol(s)).collect();
        let c = Cycle::new(sys, &w).unwrap();
        QuasiOrbit::new(sys, &point_from_cycle(sys, &c).unwrap())
    }

    #[test]
    fn approx_examples() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let q2 = q_of(&full, &[0, 1]);
        let i = Angle::rational(1, 4).unwrap();
        let minus_i = Angle::rational(3, 4).unwrap();
        assert!(approx_equiv(&q2, i, minus_i));
        assert!(!approx_equiv(&q2, Angle::ONE, i));
        assert!(approx_equiv(&q2, i, i));
        let space = quasi_orbit_space(&full, Bounds::new(1, 0)).unwrap();
        let ap = &space.orbits[2];
        assert!(approx_equiv(ap, Angle::ONE, Angle::irrational(3, 1)));
    }

    #[test]
    fn three_cycle_has_four_classes_at_twelfth_roots() {
        let perm = SftSystem::permutation(&[1, 2, 0]).unwrap();
        let space = prim_points(&perm, Bounds::new(3, 0), &Angle::roots(12).unwrap()).unwrap();
        assert_eq!(space.points.len(), 12 / num_integer::gcd(12, 3));
        assert!(space
            .points
            .iter()
            .all(|p| matches!(p, PrimPoint::CircleClass { orbit: 0, .. })));
    }

    #[test]
    fn full_shift_bridge_bound_controls_aperiodic_points() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let samples = [Angle::ONE];
        let s0 = prim_points(&full, Bounds::new(1, 0), &samples).unwrap();
        let circles = s0
            .points
            .iter()
            .filter(|p| matches!(p, PrimPoint::CircleClass { .. }))
            .count();
        assert_eq!(circles, 2);
        let s1 = prim_points(&full, Bounds::new(1, 1), &samples).unwrap();
        let aps: Vec<String> = s1
            .points
            .iter()
            .filter(|p| matches!(p, PrimPoint::ApPoint { .. }))
            .map(|p| p.quasi_orbit().fingerprint(&full))
            .collect();
        assert!(aps.contains(&"0^inf..1^inf@0[paths]".to_string()));
        assert!(aps.contains(&"1^inf..0^inf@0[paths]".to_string()));
    }

    #[test]
    fn nonunital_prim_is_rejected() {
        let full0 = SftSystem::full_shift(2, Some(&[0])).unwrap();
        assert_eq!(
            prim_points(&full0, Bounds::new(1, 0), &[Angle::ONE]).unwrap_err(),
            Error::NonUnital
        );
    }

    #[test]
    fn specialization_rules() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let samples = Angle::roots(2).unwrap();
        let space = prim_points(&full, Bounds::new(1, 0), &samples).unwrap();
        let pairs = specialization(&space.points).unwrap();
        for (i, p) in space.points.iter().enumerate() {
            assert!(pairs.contains(&(i, i)));
            if let PrimPoint::ApPoint { .. } = p {
                // every circle class over both fixed points
                for (j, q) in space.points.iter().enumerate() {
                    if q.angle_class().is_some() {
                        assert!(pairs.contains(&(i, j)));
                    }
                }
            } else {
                assert!(pairs.iter().filter(|(a, _)| *a == i).count() == 1);
            }
        }
        let other = prim_points(&full, Bounds::new(2, 0), &samples).unwrap();
        let mixed = vec![space.points[0].clone(), other.points[0].clone()];
        assert_eq!(specialization(&mixed), Err(Error::MixedRun));
    }

    #[test]
    fn permutation_specialization_is_diagonal() {
        let perm = SftSystem::permutation(&[1, 0, 2, 4, 5, 3]).unwrap();
        let space = prim_points(&perm, Bounds::new(6, 1), &Angle::roots(6).unwrap()).unwrap();
        let pairs = specialization(&space.points).unwrap();
        let diag: Vec<(usize, usize)> = (0..space.points.len()).map(|i| (i, i)).collect();
        assert_eq!(pairs, diag);
    }
}
