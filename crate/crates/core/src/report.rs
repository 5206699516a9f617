//! Serializable summary of one analysis run.

use serde::Serialize;

use crate::angle::Angle;
use crate::error::Result;
use crate::prim_space::{prim_points, specialization, PrimPoint, PrimSpace};
use crate::quasi_orbit::Bounds;
use crate::rep_oracle::{
    build_cycle_rep, build_cycle_rep_float, standard_test_functions, verify_crossed_relations,
    verify_graph_relations, williams_check, ValueVector, Verdict, WilliamsVerdict,
};
use crate::sft::{SftSystem, SystemKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithmeticMode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerifyOptions {
    pub mode: ArithmeticMode,
    pub tol: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuasiOrbitRow {
    pub index: usize,
    pub fingerprint: String,
    pub representative: String,
    pub periodic: bool,
    pub isotropy: usize,
    pub limit_cycles: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimPointRow {
    pub index: usize,
    pub kind: &'static str,
    pub orbit: usize,
    pub family: Option<String>,
    pub angle_class: Option<Angle>,
    pub label: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationRow {
    pub cycle: String,
    pub angle: Angle,
    pub crossed: Verdict,
    pub graph: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub mode: ArithmeticMode,
    pub tol: f64,
    pub relations_passed: bool,
    pub relations: Vec<RelationRow>,
    pub williams: Option<WilliamsVerdict>,
    pub williams_skipped: Option<String>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.relations_passed && self.williams.as_ref().is_none_or(|w| w.matched)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimReport {
    pub system: SftSystem,
    pub bounds: Bounds,
    pub angles: String,
    pub samples: Vec<Angle>,
    pub truncated: bool,
    pub quasi_orbits: Vec<QuasiOrbitRow>,
    /// `[i, j]`: quasi-orbit `i` lies in the closure of quasi-orbit `j`.
    pub preorder: Vec<(usize, usize)>,
    pub prim_points: Vec<PrimPointRow>,
    /// `[p, q]`: point `q` lies in the closure of `{p}`.
    pub specialization: Vec<(usize, usize)>,
    pub verification: Option<Verification>,
}

/// Label used for a point in reports and DOT output.
pub fn point_label(sys: &SftSystem, p: &PrimPoint) -> String {
    let fp = p.quasi_orbit().fingerprint(sys);
    match p.angle_class() {
        Some(a) => format!("{fp} | lambda^{} = {a}", p.quasi_orbit().isotropy_period()),
        None => fp,
    }
}

/// Runs the enumeration and assembles the report. `angles` is the sample
/// spec echoed into the report.
pub fn prim_report(
    sys: &SftSystem,
    bounds: Bounds,
    angles: &str,
    samples: &[Angle],
    verify: Option<VerifyOptions>,
) -> Result<PrimReport> {
    let space = prim_points(sys, bounds, samples)?;
    let specialization = specialization(&space.points)?;
    let verification = verify
        .map(|opts| verify_space(sys, &space, opts))
        .transpose()?;
    Ok(PrimReport {
        system: sys.clone(),
        bounds,
        angles: angles.to_string(),
        samples: samples.to_vec(),
        truncated: space.quasi_orbits.truncated,
        quasi_orbits: quasi_rows(sys, &space),
        preorder: space.quasi_orbits.preorder.clone(),
        prim_points: space
            .points
            .iter()
            .enumerate()
            .map(|(index, p)| PrimPointRow {
                index,
                kind: match p {
                    PrimPoint::CircleClass { .. } => "circle",
                    PrimPoint::ApPoint { .. } => "aperiodic",
                },
                orbit: p.orbit_index(),
                family: p.angle_class().map(|_| {
                    format!(
                        "T mod lambda -> lambda^{}",
                        p.quasi_orbit().isotropy_period()
                    )
                }),
                angle_class: p.angle_class(),
                label: point_label(sys, p),
            })
            .collect(),
        specialization,
        verification,
    })
}

fn quasi_rows(sys: &SftSystem, space: &PrimSpace) -> Vec<QuasiOrbitRow> {
    space
        .quasi_orbits
        .orbits
        .iter()
        .enumerate()
        .map(|(index, q)| QuasiOrbitRow {
            index,
            fingerprint: q.fingerprint(sys),
            representative: q.representative().literal(sys),
            periodic: q.is_periodic(),
            isotropy: q.isotropy_period(),
            limit_cycles: q
                .closure()
                .limit_cycles
                .iter()
                .map(|c| c.display(sys))
                .collect(),
        })
        .collect()
}

/// Relation checks for every periodic quasi-orbit and rational sample, plus
/// the kernel cross-check for permutative systems.
pub fn verify_space(
    sys: &SftSystem,
    space: &PrimSpace,
    opts: VerifyOptions,
) -> Result<Verification> {
    let mut relations = Vec::new();
    for q in space.quasi_orbits.orbits.iter().filter(|q| q.is_periodic()) {
        let cycle = q.representative().right_cycle();
        let fns: Vec<ValueVector> = standard_test_functions(cycle.len());
        for &lam in space.samples.iter().filter(|a| a.is_rational()) {
            let (crossed, graph) = match opts.mode {
                ArithmeticMode::Exact => {
                    let m = build_cycle_rep(sys, &cycle, lam)?;
                    (
                        verify_crossed_relations(&m, &fns, 0.0),
                        verify_graph_relations(&m.graph_generators(), &fns, 0.0),
                    )
                }
                ArithmeticMode::Float => {
                    let m = build_cycle_rep_float(sys, &cycle, lam)?;
                    (
                        verify_crossed_relations(&m, &fns, opts.tol),
                        verify_graph_relations(&m.graph_generators(), &fns, opts.tol),
                    )
                }
            };
            relations.push(RelationRow {
                cycle: cycle.display(sys),
                angle: lam,
                crossed,
                graph,
            });
        }
    }
    let (williams, williams_skipped) = if sys.kind() == SystemKind::FinitePermutative {
        let rational: Vec<Angle> = space
            .samples
            .iter()
            .copied()
            .filter(Angle::is_rational)
            .collect();
        (Some(williams_check(sys, &rational)?), None)
    } else {
        (
            None,
            Some("kernel cross-check needs a finite permutative system".to_string()),
        )
    };
    Ok(Verification {
        mode: opts.mode,
        tol: match opts.mode {
            ArithmeticMode::Exact => 0.0,
            ArithmeticMode::Float => opts.tol,
        },
        relations_passed: relations.iter().all(|r| r.crossed.passed && r.graph.passed),
        relations,
        williams,
        williams_skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_report() {
        let sys = SftSystem::permutation(&[0]).unwrap();
        let r = prim_report(&sys, Bounds::new(1, 0), "roots:1", &[Angle::ONE], None).unwrap();
        assert_eq!(r.quasi_orbits.len(), 1);
        assert_eq!(r.quasi_orbits[0].isotropy, 1);
        assert_eq!(r.prim_points.len(), 1);
        assert_eq!(r.prim_points[0].kind, "circle");
    }

    #[test]
    fn full_shift_report_counts() {
        let sys = SftSystem::full_shift(2, None).unwrap();
        let r = prim_report(&sys, Bounds::new(2, 1), "roots:1", &[Angle::ONE], None).unwrap();
        assert_eq!(r.quasi_orbits.iter().filter(|q| q.periodic).count(), 3);
        assert!(r.quasi_orbits.iter().filter(|q| !q.periodic).count() >= 2);
    }

    #[test]
    fn nonunital_report_fails() {
        let sys = SftSystem::full_shift(2, Some(&[0])).unwrap();
        assert!(prim_report(&sys, Bounds::new(1, 0), "roots:1", &[Angle::ONE], None).is_err());
    }

    #[test]
    fn verification_passes_on_permutation() {
        let sys = SftSystem::permutation(&[1, 2, 0, 4, 3]).unwrap();
        let opts = VerifyOptions {
            mode: ArithmeticMode::Exact,
            tol: 0.0,
        };
        let r = prim_report(
            &sys,
            Bounds::new(5, 0),
            "roots:6",
            &Angle::roots(6).unwrap(),
            Some(opts),
        )
        .unwrap();
        let v = r.verification.unwrap();
        assert!(v.passed());
        assert!(v.williams.unwrap().matched);
    }
}
