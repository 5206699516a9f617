//! Finite-dimensional models of the crossed product and of the graph
//! algebra attached to a periodic orbit, used as an independent oracle for
//! the `≈`-classification.
//!
//! Over a cycle of length `N` with orbit basis `e_0, …, e_{N-1}` (where
//! `σ(x_j) = x_{j+1}`), `C(X)` acts diagonally and the isometry `s` acts as
//! `S_λ = λ·P` with `P e_{j+1} = e_j`. Then `S π(f) S* = π(f∘σ)`, and the
//! graph generators are `j_X(x) = S* π(x)`, `j_A = π`.

pub mod cyclo;
pub mod matrix;

use std::collections::{HashSet, VecDeque};

use num_complex::{Complex, Complex64};
use num_integer::Integer;
use serde::Serialize;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::inverse_limit::point_from_cycle;
use crate::prim_space::approx_equiv;
use crate::quasi_orbit::{same_quasi_orbit, QuasiOrbit};
use crate::sft::{Cycle, SftSystem, SystemKind};

pub use cyclo::Cyclo;
pub use matrix::{Mat, Scalar};

/// A function on the orbit, one Gaussian-integer value per orbit point.
pub type ValueVector = Vec<Complex<i64>>;

#[derive(Debug, Clone)]
pub struct RepModel<T: Scalar = Cyclo> {
    cycle: Cycle,
    angle: Angle,
    ctx: T::Ctx,
    shift: Mat<T>,
}

/// Exact model over `ℤ[ζ_m]` with `m = lcm(den λ, 4)`.
pub fn build_cycle_rep(sys: &SftSystem, c: &Cycle, lam: Angle) -> Result<RepModel<Cyclo>> {
    let (_, den) = lam.as_fraction()?;
    let order = u32::try_from(den.lcm(&4)).map_err(|_| Error::BadAngle(lam.to_string()))?;
    RepModel::build(sys, c, lam, order)
}

/// Floating point model.
pub fn build_cycle_rep_float(
    sys: &SftSystem,
    c: &Cycle,
    lam: Angle,
) -> Result<RepModel<Complex64>> {
    RepModel::build(sys, c, lam, 1)
}

impl<T: Scalar> RepModel<T> {
    pub fn build(sys: &SftSystem, c: &Cycle, lam: Angle, ctx: T::Ctx) -> Result<Self> {
        if !c.is_admissible(sys) {
            return Err(Error::Inadmissible {
                position: 0,
                from: c.display(sys),
                to: "cycle".into(),
            });
        }
        let n = c.len();
        let lam_s = T::root(ctx, lam)?;
        let mut shift = Mat::zeros(ctx, n);
        for j in 0..n {
            shift.set(j, (j + 1) % n, lam_s.clone());
        }
        Ok(RepModel {
            cycle: c.clone(),
            angle: lam,
            ctx,
            shift,
        })
    }

    /// Replaces `S`; for negative controls.
    pub fn with_shift_matrix(mut self, shift: Mat<T>) -> Self {
        assert_eq!(shift.dim(), self.dim());
        self.shift = shift;
        self
    }

    pub fn dim(&self) -> usize {
        self.cycle.len()
    }

    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    pub fn angle(&self) -> Angle {
        self.angle
    }

    pub fn ctx(&self) -> T::Ctx {
        self.ctx
    }

    pub fn shift_matrix(&self) -> &Mat<T> {
        &self.shift
    }

    /// `π(f)`, the diagonal image of a function on the orbit.
    pub fn pi(&self, f: &[Complex<i64>]) -> Mat<T> {
        assert_eq!(f.len(), self.dim(), "value vector length");
        Mat::diag(
            self.ctx,
            f.iter()
                .map(|v| T::gaussian(self.ctx, v.re, v.im))
                .collect(),
        )
    }

    pub fn identity(&self) -> Mat<T> {
        Mat::identity(self.ctx, self.dim())
    }

    pub fn graph_generators(&self) -> GraphGenerators<'_, T> {
        GraphGenerators { model: self }
    }
}

/// `f∘σ` on the orbit: `(f∘σ)(x_j) = f(x_{j+1})`.
pub fn compose_sigma(f: &[Complex<i64>]) -> ValueVector {
    let n = f.len();
    (0..n).map(|j| f[(j + 1) % n]).collect()
}

/// Indicators of the orbit points followed by the constant 1.
pub fn standard_test_functions(n: usize) -> Vec<ValueVector> {
    let mut out: Vec<ValueVector> = (0..n)
        .map(|i| (0..n).map(|j| Complex::new(i64::from(i == j), 0)).collect())
        .collect();
    out.push(vec![Complex::new(1, 0); n]);
    out
}

/// The generators `j_X(x) = S* π(x)` and `j_A = π` built from one model,
/// which is the matrix form of the identification `t = j_X(1)*`,
/// `ψ(x) = s* i_A(x)`.
pub struct GraphGenerators<'a, T: Scalar> {
    model: &'a RepModel<T>,
}

impl<T: Scalar> GraphGenerators<'_, T> {
    pub fn jx(&self, x: &[Complex<i64>]) -> Mat<T> {
        self.model.shift.adjoint().mul(&self.model.pi(x))
    }

    pub fn ja(&self, f: &[Complex<i64>]) -> Mat<T> {
        self.model.pi(f)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub relation: String,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub passed: bool,
    pub max_residual: f64,
    pub checks: Vec<Check>,
}

impl Verdict {
    fn from_checks(checks: Vec<Check>) -> Self {
        Verdict {
            passed: checks.iter().all(|c| c.passed),
            max_residual: checks.iter().map(|c| c.residual).fold(0.0, f64::max),
            checks,
        }
    }

    pub fn failed_relations(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.relation.as_str())
            .collect()
    }
}

struct Recorder {
    tol: f64,
    worst: Vec<(String, f64)>,
}

impl Recorder {
    fn new(tol: f64) -> Self {
        Recorder {
            tol,
            worst: Vec::new(),
        }
    }

    fn record<T: Scalar>(&mut self, relation: &str, lhs: &Mat<T>, rhs: &Mat<T>) {
        let r = lhs.residual(rhs);
        match self.worst.iter_mut().find(|(name, _)| name == relation) {
            Some((_, worst)) => *worst = worst.max(r),
            None => self.worst.push((relation.to_string(), r)),
        }
    }

    fn finish(self) -> Verdict {
        let tol = self.tol;
        Verdict::from_checks(
            self.worst
                .into_iter()
                .map(|(relation, residual)| Check {
                    relation,
                    residual,
                    passed: residual <= tol,
                })
                .collect(),
        )
    }
}

/// Isometry `S*S = I`, the unitary witness `SS* = I`, and covariance
/// `S π(f) S* = π(f∘σ)` on every test function.
pub fn verify_crossed_relations<T: Scalar>(
    m: &RepModel<T>,
    test_fns: &[ValueVector],
    tol: f64,
) -> Verdict {
    let mut rec = Recorder::new(tol);
    let s = &m.shift;
    let s_adj = s.adjoint();
    let id = m.identity();
    rec.record("isometry", &s_adj.mul(s), &id);
    rec.record("unitary", &s.mul(&s_adj), &id);
    for f in test_fns {
        rec.record(
            "covariance",
            &s.mul(&m.pi(f)).mul(&s_adj),
            &m.pi(&compose_sigma(f)),
        );
    }
    rec.finish()
}

fn pointwise(a: &[Complex<i64>], b: &[Complex<i64>]) -> ValueVector {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

fn conj(a: &[Complex<i64>]) -> ValueVector {
    a.iter().map(|x| x.conj()).collect()
}

/// The three graph relations, checked on all (pairs of) test functions:
///
/// 1. `j_X((f∘σ)x) = j_A(f) j_X(x)`
/// 2. `j_X(x)* j_X(y) = j_A(x̄y)`
/// 3. `j_X(√f∘σ) j_X(√f∘σ)* = j_A(f)` for `f ≥ 0`, checked as
///    `j_X(g∘σ) j_X(g∘σ)* = j_A(g²)` for every nonnegative real test
///    function `g`, which keeps the square root exact.
///
/// Also checks the dictionary `t = j_X(1)*` against `S`, `t*t = I` and
/// `t j_A(f) t* = j_A(f∘σ)`.
pub fn verify_graph_relations<T: Scalar>(
    g: &GraphGenerators<'_, T>,
    test_fns: &[ValueVector],
    tol: f64,
) -> Verdict {
    let m = g.model;
    let n = m.dim();
    let mut rec = Recorder::new(tol);
    for f in test_fns {
        for x in test_fns {
            let lhs = g.jx(&pointwise(&compose_sigma(f), x));
            rec.record("graph-1", &lhs, &g.ja(f).mul(&g.jx(x)));
            let lhs = g.jx(f).adjoint().mul(&g.jx(x));
            rec.record("graph-2", &lhs, &g.ja(&pointwise(&conj(f), x)));
        }
        if f.iter().all(|v| v.im == 0 && v.re >= 0) {
            let h = g.jx(&compose_sigma(f));
            rec.record("graph-3", &h.mul(&h.adjoint()), &g.ja(&pointwise(f, f)));
        }
    }
    let one = vec![Complex::new(1, 0); n];
    let t = g.jx(&one).adjoint();
    rec.record("dictionary-t", &t, &m.shift);
    rec.record("dictionary-isometry", &t.adjoint().mul(&t), &m.identity());
    for f in test_fns {
        rec.record(
            "dictionary-covariance",
            &t.mul(&g.ja(f)).mul(&t.adjoint()),
            &g.ja(&compose_sigma(f)),
        );
    }
    rec.finish()
}

/// A matrix with at most one nonzero entry per row, each entry a root of
/// unity `ζ_m^e`. Every *-monomial in `S`, `S*` and the orbit indicators
/// has this shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Monomial {
    rows: Vec<Option<(usize, u32)>>,
}

impl Monomial {
    fn from_mat(m: &Mat<Cyclo>, order: u32) -> Option<Self> {
        let n = m.dim();
        let roots: Vec<Cyclo> = (0..order as i64).map(|k| Cyclo::root(order, k)).collect();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut entry = None;
            for j in 0..n {
                let v = m.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if entry.is_some() {
                    return None;
                }
                let e = roots.iter().position(|r| r == v)?;
                entry = Some((j, e as u32));
            }
            rows.push(entry);
        }
        Some(Monomial { rows })
    }

    fn mul(&self, other: &Self, order: u32) -> Self {
        Monomial {
            rows: self
                .rows
                .iter()
                .map(|r| r.and_then(|(c, e)| other.rows[c].map(|(c2, e2)| (c2, (e + e2) % order))))
                .collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.rows.iter().all(Option::is_none)
    }

    fn trace(&self, order: u32) -> Vec<i64> {
        let mut t = Cyclo::zero(order);
        for (i, r) in self.rows.iter().enumerate() {
            if let Some((c, e)) = r {
                if *c == i {
                    t = t.add(&Cyclo::root(order, *e as i64));
                }
            }
        }
        t.canonical()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanOutcome {
    /// A word on which the two models differ in zero-ness or trace.
    pub separating_word: Option<String>,
    pub distinct_pairs: usize,
}

/// Evaluates every *-monomial in `{S, S*, π(e_0), …, π(e_{N-1})}` of length
/// `<= word_len` in both models and compares zero-ness and trace. Equal
/// traces on all words make the two irreducible models equivalent, hence
/// give them equal kernels; a differing word separates the kernels.
pub fn kernel_scan(
    m1: &RepModel<Cyclo>,
    m2: &RepModel<Cyclo>,
    word_len: usize,
) -> Result<ScanOutcome> {
    if m1.cycle != m2.cycle {
        return Err(Error::MismatchedCycles);
    }
    let order = m1.ctx.lcm(&m2.ctx);
    let n = m1.dim();
    let letters = |m: &RepModel<Cyclo>| -> Result<Vec<(String, Monomial)>> {
        let lift = |a: &Mat<Cyclo>| a.map(|v| v.lift(order));
        let s = lift(&m.shift);
        let mut out = vec![
            ("S".to_string(), s.clone()),
            ("S*".to_string(), s.adjoint()),
        ];
        for i in 0..n {
            let mut e = vec![Complex::new(0, 0); n];
            e[i] = Complex::new(1, 0);
            out.push((format!("p{i}"), lift(&m.pi(&e))));
        }
        out.into_iter()
            .map(|(name, mat)| {
                Monomial::from_mat(&mat, order)
                    .map(|mono| (name, mono))
                    .ok_or_else(|| Error::BadAngle("model is not monomial".into()))
            })
            .collect()
    };
    let l1 = letters(m1)?;
    let l2 = letters(m2)?;
    let identity = Monomial {
        rows: (0..n).map(|i| Some((i, 0))).collect(),
    };
    let mut seen: HashSet<(Monomial, Monomial)> = HashSet::new();
    let mut queue: VecDeque<(Monomial, Monomial, String, usize)> = VecDeque::new();
    seen.insert((identity.clone(), identity.clone()));
    queue.push_back((identity.clone(), identity, String::new(), 0));
    while let Some((a, b, word, len)) = queue.pop_front() {
        if a.is_zero() != b.is_zero() || a.trace(order) != b.trace(order) {
            return Ok(ScanOutcome {
                separating_word: Some(if word.is_empty() { "1".into() } else { word }),
                distinct_pairs: seen.len(),
            });
        }
        if len == word_len {
            continue;
        }
        for ((name, x), (_, y)) in l1.iter().zip(&l2) {
            let next = (a.mul(x, order), b.mul(y, order));
            if seen.insert(next.clone()) {
                let w = if word.is_empty() {
                    name.clone()
                } else {
                    format!("{word}·{name}")
                };
                queue.push_back((next.0, next.1, w, len + 1));
            }
        }
    }
    Ok(ScanOutcome {
        separating_word: None,
        distinct_pairs: seen.len(),
    })
}

/// Kernel equality by the monomial scan with `word_len`.
pub fn kernels_equal(m1: &RepModel<Cyclo>, m2: &RepModel<Cyclo>, word_len: usize) -> Result<bool> {
    Ok(kernel_scan(m1, m2, word_len)?.separating_word.is_none())
}

/// Closed form of [`kernels_equal`]: `λ^N = η^N`.
pub fn kernels_equal_closed_form<T: Scalar>(m1: &RepModel<T>, m2: &RepModel<T>) -> Result<bool> {
    if m1.cycle != m2.cycle {
        return Err(Error::MismatchedCycles);
    }
    let n = m1.dim() as i64;
    Ok(m1.angle.pow(n) == m2.angle.pow(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WilliamsVerdict {
    pub matched: bool,
    pub items: usize,
    /// Classes of the kernel partition.
    pub kernel_classes: usize,
    /// Classes of the `(∼, ≈)` partition.
    pub orbit_classes: usize,
    /// Item pairs on which the two partitions disagree.
    pub mismatches: Vec<(String, String)>,
}

fn class_count(items: usize, related: impl Fn(usize, usize) -> bool) -> usize {
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..items {
        if !reps.iter().any(|&r| related(r, i)) {
            reps.push(i);
        }
    }
    reps.len()
}

/// Partitions the samples `(cycle, λ)` twice, once by kernel equality of the
/// attached models and once by `∼` on the orbits together with `≈` on the
/// angles, and compares the two partitions pair by pair.
pub fn williams_check(sys: &SftSystem, angle_samples: &[Angle]) -> Result<WilliamsVerdict> {
    if sys.kind() != SystemKind::FinitePermutative {
        return Err(Error::NotPermutative);
    }
    let cycles = sys.enumerate_cycles(sys.size());
    let mut samples = angle_samples.to_vec();
    samples.sort();
    samples.dedup();
    let mut items = Vec::new();
    for c in &cycles {
        let point = point_from_cycle(sys, c)?;
        let q = QuasiOrbit::new(sys, &point);
        for &lam in &samples {
            items.push((
                c,
                point.clone(),
                q.clone(),
                lam,
                build_cycle_rep(sys, c, lam)?,
            ));
        }
    }
    let k = items.len();
    let mut by_kernel = vec![vec![false; k]; k];
    let mut by_orbit = vec![vec![false; k]; k];
    let mut mismatches = Vec::new();
    for i in 0..k {
        for j in i..k {
            let (ci, pi, qi, li, mi) = &items[i];
            let (cj, pj, _, lj, mj) = &items[j];
            // models over different cycles restrict to different characters
            // of C(X), so their kernels differ already on C(X)
            let kern = ci == cj && kernels_equal(mi, mj, 2 * mi.dim())?;
            let orb = same_quasi_orbit(sys, pi, pj) && approx_equiv(qi, *li, *lj);
            by_kernel[i][j] = kern;
            by_kernel[j][i] = kern;
            by_orbit[i][j] = orb;
            by_orbit[j][i] = orb;
            if kern != orb {
                mismatches.push((
                    format!("({}, {})", ci.display(sys), li),
                    format!("({}, {})", cj.display(sys), lj),
                ));
            }
        }
    }
    Ok(WilliamsVerdict {
        matched: mismatches.is_empty(),
        items: k,
        kernel_classes: class_count(k, |a, b| by_kernel[a][b]),
        orbit_classes: class_count(k, |a, b| by_orbit[a][b]),
        mismatches,
    })
}
