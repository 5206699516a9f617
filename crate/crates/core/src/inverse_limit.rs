//! The dilation space `X∞` and its shift homeomorphism `γ₁`.
//!
//! A coordinate tuple `(x_r)_{r≥p}` with `σ(x_{r+1}) = x_r` is determined by
//! one bi-infinite word `w`: `x_r` is the right half of `w` read from
//! position `k - (r - p)`, where `k` marks the current coordinate. Each
//! `x_{r+1}` is `x_r` with one more symbol of the past prepended. We store
//! eventually periodic words `L^∞ · B · R^∞` in canonical form together with
//! the marker `k` (the offset) and the stratum:
//!
//! * `Paths`: the tuple starts at `r = 0` and every coordinate lies in `Y`,
//!   i.e. `w[i] ∈ S` for all `i <= k`.
//! * `Tail(p)`: the tuple starts at `r = p`, its first coordinate is outside
//!   `Y` (`w[k] ∉ S`) and every later one is inside (`w[i] ∈ S` for `i < k`).
//!
//! Canonical positions: the bridge occupies `0..B.len()`, the left cycle
//! fills every negative position (`w[-1]` is the last symbol of the stored
//! left rotation) and the right cycle starts at `B.len()`. The bridge is
//! minimal; when it is empty the junction is pushed as far right as the
//! left period allows. Purely periodic points store the least rotation on
//! both sides and reduce the offset modulo the period.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::sft::{least_rotation, primitive_root, rotate_left, Cycle, SftSystem, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stratum {
    /// First coordinate in `Y`; the tuple is indexed from 0.
    Paths,
    /// First coordinate `x_p ∉ Y`; the tuple is indexed from `p`.
    Tail(u64),
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stratum::Paths => write!(f, "paths"),
            Stratum::Tail(p) => write!(f, "tail:{p}"),
        }
    }
}

/// An eventually periodic point of `X∞` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EvpPoint {
    left: Vec<Symbol>,
    bridge: Vec<Symbol>,
    right: Vec<Symbol>,
    offset: i64,
    stratum: Stratum,
}

struct Canonical {
    left: Vec<Symbol>,
    bridge: Vec<Symbol>,
    right: Vec<Symbol>,
    /// new position = old position + shift
    shift: i64,
    periodic: bool,
}

fn canonicalize(left: &[Symbol], bridge: &[Symbol], right: &[Symbol]) -> Canonical {
    let mut l = primitive_root(left).to_vec();
    let mut r = primitive_root(right).to_vec();
    let mut b: VecDeque<Symbol> = bridge.iter().copied().collect();
    let mut shift = 0i64;

    while b.back() == r.last() && !b.is_empty() {
        b.pop_back();
        r.rotate_right(1);
    }
    while !b.is_empty() && b.front() == l.first() {
        b.pop_front();
        l.rotate_left(1);
        shift -= 1;
    }
    if b.is_empty() {
        if l == r {
            let t = least_rotation(&l);
            let c = rotate_left(&l, t);
            return Canonical {
                left: c.clone(),
                bridge: Vec::new(),
                right: c,
                shift: shift - t as i64,
                periodic: true,
            };
        }
        // Two distinct periodic words agree on at most |l| + |r| symbols.
        let limit = l.len() + r.len();
        let mut steps = 0;
        while r[0] == l[0] {
            l.rotate_left(1);
            r.rotate_left(1);
            shift -= 1;
            steps += 1;
            assert!(steps <= limit, "junction extension did not terminate");
        }
    }
    Canonical {
        left: l,
        bridge: b.into_iter().collect(),
        right: r,
        shift,
        periodic: false,
    }
}

impl EvpPoint {
    /// General constructor. `left` and `right` are placed as given (the last
    /// symbol of `left` at position -1, the first symbol of `right` right
    /// after the bridge); `offset` is relative to the start of `bridge`.
    /// With `stratum = None` the stratum is computed, using `Tail(0)` when
    /// the current coordinate is the first one outside `Y`.
    pub fn from_parts(
        sys: &SftSystem,
        left: &[Symbol],
        bridge: &[Symbol],
        right: &[Symbol],
        offset: i64,
        stratum: Option<Stratum>,
    ) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::EmptyWord);
        }
        check_admissible(sys, left, bridge, right)?;
        let canon = canonicalize(left, bridge, right);
        let mut point = EvpPoint {
            left: canon.left,
            bridge: canon.bridge,
            right: canon.right,
            offset: offset + canon.shift,
            stratum: Stratum::Paths,
        };
        if canon.periodic {
            point.offset = point.offset.rem_euclid(point.right.len() as i64);
        }
        let expected = point.expected_stratum(sys)?;
        point.stratum = match (stratum, expected) {
            (None, e) => e,
            (Some(Stratum::Paths), Stratum::Paths) => Stratum::Paths,
            (Some(Stratum::Tail(p)), Stratum::Tail(_)) => Stratum::Tail(p),
            (Some(given), e) => {
                return Err(Error::StratumMismatch {
                    given: given.to_string(),
                    expected: match e {
                        Stratum::Paths => "paths".into(),
                        Stratum::Tail(_) => "tail:p".into(),
                    },
                })
            }
        };
        Ok(point)
    }

    pub fn left_word(&self) -> &[Symbol] {
        &self.left
    }

    pub fn right_word(&self) -> &[Symbol] {
        &self.right
    }

    /// Necklace of the eventual past.
    pub fn left_cycle(&self) -> Cycle {
        Cycle::from_necklace(&self.left)
    }

    /// Necklace of the eventual future.
    pub fn right_cycle(&self) -> Cycle {
        Cycle::from_necklace(&self.right)
    }

    pub fn bridge(&self) -> &[Symbol] {
        &self.bridge
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn stratum(&self) -> Stratum {
        self.stratum
    }

    pub fn is_periodic(&self) -> bool {
        self.bridge.is_empty() && self.left == self.right
    }

    /// Least period of the underlying word, for periodic points.
    pub fn period(&self) -> Option<usize> {
        self.is_periodic().then_some(self.right.len())
    }

    /// Symbol of the underlying bi-infinite word at a canonical position.
    pub fn symbol_at(&self, pos: i64) -> Symbol {
        let b = self.bridge.len() as i64;
        if pos < 0 {
            self.left[pos.rem_euclid(self.left.len() as i64) as usize]
        } else if pos < b {
            self.bridge[pos as usize]
        } else {
            self.right[(pos - b).rem_euclid(self.right.len() as i64) as usize]
        }
    }

    /// Same underlying word, ignoring offset and stratum.
    pub fn same_word(&self, other: &EvpPoint) -> bool {
        self.left == other.left && self.bridge == other.bridge && self.right == other.right
    }

    /// First position whose symbol lies outside the domain. The left cycle
    /// is always inside the domain for points of `X∞`, so this is >= 0.
    pub(crate) fn exit_position(&self, sys: &SftSystem) -> Option<i64> {
        let b = self.bridge.len();
        (0..b + self.right.len())
            .find(|&i| !sys.in_domain(self.symbol_at(i as i64)))
            .map(|i| i as i64)
    }

    fn expected_stratum(&self, sys: &SftSystem) -> Result<Stratum> {
        if let Some(i) = self.left.iter().position(|&s| !sys.in_domain(s)) {
            let position = i as i64 - self.left.len() as i64;
            return Err(Error::NotInDilation {
                position: position.min(self.offset),
                symbol: sys.name(self.left[i]).to_string(),
            });
        }
        match self.exit_position(sys) {
            Some(e) if self.offset > e => Err(Error::NotInDilation {
                position: e,
                symbol: sys.name(self.symbol_at(e)).to_string(),
            }),
            Some(e) if self.offset == e => Ok(Stratum::Tail(0)),
            _ => Ok(Stratum::Paths),
        }
    }

    /// Position of the point along its orbit: `γ₁⁻¹` adds one, `γ₁`
    /// subtracts one. Tail points sit at `exit + p`.
    pub(crate) fn time(&self) -> i128 {
        match self.stratum {
            Stratum::Paths => self.offset as i128,
            Stratum::Tail(p) => self.offset as i128 + p as i128,
        }
    }

    pub(crate) fn at_time(&self, sys: &SftSystem, t: i128) -> EvpPoint {
        let mut out = self.clone();
        if self.is_periodic() {
            out.offset = t.rem_euclid(self.right.len() as i128) as i64;
            out.stratum = Stratum::Paths;
            return out;
        }
        match self.exit_position(sys) {
            Some(e) if t >= e as i128 => {
                out.offset = e;
                out.stratum =
                    Stratum::Tail(u64::try_from(t - e as i128).expect("tail index out of range"));
            }
            _ => {
                out.offset = i64::try_from(t).expect("offset out of range");
                out.stratum = Stratum::Paths;
            }
        }
        out
    }

    /// Canonical textual form `L^inf.B.R^inf@k[stratum]`.
    pub fn literal(&self, sys: &SftSystem) -> String {
        format!(
            "{}^inf.{}.{}^inf@{}[{}]",
            sys.format_word(&self.left),
            sys.format_word(&self.bridge),
            sys.format_word(&self.right),
            self.offset,
            self.stratum
        )
    }

    /// Parses a point literal. `@k` defaults to 0 and a missing `[stratum]`
    /// is computed.
    pub fn parse_literal(sys: &SftSystem, text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Literal(format!("{msg} in {text:?}"));
        let mut rest = text.trim();
        let mut stratum = None;
        if let Some(open) = rest.rfind('[') {
            let inner = rest[open + 1..]
                .strip_suffix(']')
                .ok_or_else(|| bad("unterminated stratum"))?;
            stratum = Some(match inner.trim() {
                "paths" => Stratum::Paths,
                t => {
                    let p = t
                        .strip_prefix("tail:")
                        .ok_or_else(|| bad("unknown stratum"))?;
                    Stratum::Tail(p.trim().parse().map_err(|_| bad("bad tail index"))?)
                }
            });
            rest = rest[..open].trim_end();
        }
        let mut offset = 0i64;
        if let Some(at) = rest.rfind('@') {
            offset = rest[at + 1..]
                .trim()
                .parse()
                .map_err(|_| bad("bad offset"))?;
            rest = rest[..at].trim_end();
        }
        let parts: Vec<&str> = rest.split('.').collect();
        if parts.len() != 3 {
            return Err(bad("expected L^inf.B.R^inf"));
        }
        let left = parts[0]
            .trim()
            .strip_suffix("^inf")
            .ok_or_else(|| bad("left part must end with ^inf"))?;
        let right = parts[2]
            .trim()
            .strip_suffix("^inf")
            .ok_or_else(|| bad("right part must end with ^inf"))?;
        let left = sys.parse_word(left)?;
        let bridge = sys.parse_word(parts[1])?;
        let right = sys.parse_word(right)?;
        EvpPoint::from_parts(sys, &left, &bridge, &right, offset, stratum)
    }
}

impl fmt::Display for EvpPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = |v: &[Symbol]| {
            v.iter()
                .map(|s| s.0.to_string())
                .collect::<Vec<_>>()
                .join("")
        };
        write!(
            f,
            "{}^inf.{}.{}^inf@{}[{}]",
            w(&self.left),
            w(&self.bridge),
            w(&self.right),
            self.offset,
            self.stratum
        )
    }
}

fn check_admissible(
    sys: &SftSystem,
    left: &[Symbol],
    bridge: &[Symbol],
    right: &[Symbol],
) -> Result<()> {
    let fail = |position: i64, from: Symbol, to: Symbol| Error::Inadmissible {
        position,
        from: sys.name(from).to_string(),
        to: sys.name(to).to_string(),
    };
    let nl = left.len() as i64;
    // left cycle, including its wraparound, at positions -nl..-1
    for i in 0..left.len() {
        let (a, b) = (left[i], left[(i + 1) % left.len()]);
        if !sys.allows(a, b) {
            return Err(fail(i as i64 - nl, a, b));
        }
    }
    let mut prev = left[left.len() - 1];
    for (i, &s) in bridge.iter().chain(right.iter()).enumerate() {
        if !sys.allows(prev, s) {
            return Err(fail(i as i64 - 1, prev, s));
        }
        prev = s;
    }
    let (a, b) = (right[right.len() - 1], right[0]);
    if !sys.allows(a, b) {
        return Err(fail((bridge.len() + right.len()) as i64 - 1, a, b));
    }
    Ok(())
}

/// The purely periodic point `c^∞` with the current coordinate at the start
/// of the least rotation.
pub fn point_from_cycle(sys: &SftSystem, c: &Cycle) -> Result<EvpPoint> {
    EvpPoint::from_parts(sys, c.word(), &[], c.word(), 0, None)
}

/// The point `left^∞ · bridge · right^∞` with the current coordinate at the
/// start of `bridge`.
pub fn point_heteroclinic(
    sys: &SftSystem,
    left: &Cycle,
    bridge: &[Symbol],
    right: &Cycle,
) -> Result<EvpPoint> {
    EvpPoint::from_parts(sys, left.word(), bridge, right.word(), 0, None)
}

pub fn is_periodic(x: &EvpPoint) -> bool {
    x.is_periodic()
}

/// `γ₁⁻¹`. On the paths stratum `(x₀, x₁, …) ↦ (σ(x₀), x₀, x₁, …)`: the
/// current coordinate moves one step into the future. If `σ(x₀)` leaves
/// `Y` the image is the first point of `Tail(0)`. On `Tail(p)` the tuple is
/// unchanged and re-indexed from `p + 1`.
pub fn gamma_inv(sys: &SftSystem, x: &EvpPoint) -> EvpPoint {
    let mut out = x.clone();
    match x.stratum {
        Stratum::Paths => {
            out.offset += 1;
            if !sys.in_domain(x.symbol_at(out.offset)) {
                out.stratum = Stratum::Tail(0);
            }
            if out.is_periodic() {
                out.offset = out.offset.rem_euclid(out.right.len() as i64);
            }
        }
        Stratum::Tail(p) => out.stratum = Stratum::Tail(p + 1),
    }
    out
}

/// `γ₁`, the inverse of [`gamma_inv`]: `(x₀, x₁, …) ↦ (x₁, x₂, …)` on the
/// paths stratum and on `Tail(0)` (both land in the paths stratum), and
/// `Tail(p) ↦ Tail(p - 1)` for `p >= 1`.
pub fn gamma(_sys: &SftSystem, x: &EvpPoint) -> EvpPoint {
    let mut out = x.clone();
    match x.stratum {
        Stratum::Paths | Stratum::Tail(0) => {
            out.offset -= 1;
            out.stratum = Stratum::Paths;
            if out.is_periodic() {
                out.offset = out.offset.rem_euclid(out.right.len() as i64);
            }
        }
        Stratum::Tail(p) => out.stratum = Stratum::Tail(p - 1),
    }
    out
}

/// `γ^z`, by offset arithmetic along the orbit.
pub fn gamma_pow(sys: &SftSystem, x: &EvpPoint, z: i64) -> EvpPoint {
    x.at_time(sys, x.time() - z as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syms(v: &[u16]) -> Vec<Symbol> {
        v.iter().map(|&s| Symbol(s)).collect()
    }

    fn cyc(sys: &SftSystem, v: &[u16]) -> Cycle {
        Cycle::new(sys, &syms(v)).unwrap()
    }

    #[test]
    fn cycle_points() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let x = point_from_cycle(&full, &cyc(&full, &[0])).unwrap();
        assert!(x.is_periodic());
        assert_eq!(x.stratum(), Stratum::Paths);

        let gm = SftSystem::golden_mean(None).unwrap();
        let y = point_from_cycle(&gm, &cyc(&gm, &[0, 1])).unwrap();
        assert_eq!(y.period(), Some(2));
    }

    #[test]
    fn cycle_outside_domain_is_not_in_dilation() {
        let full0 = SftSystem::full_shift(2, Some(&[0])).unwrap();
        let err = point_from_cycle(&full0, &cyc(&full0, &[1])).unwrap_err();
        assert!(matches!(err, Error::NotInDilation { .. }));
        // the same future with a past inside Y is a Tail(0) point
        let x = point_heteroclinic(&full0, &cyc(&full0, &[0]), &[], &cyc(&full0, &[1])).unwrap();
        assert_eq!(x.stratum(), Stratum::Tail(0));
    }

    #[test]
    fn heteroclinic_points() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let x = point_heteroclinic(&full, &cyc(&full, &[0]), &[], &cyc(&full, &[1])).unwrap();
        assert!(!x.is_periodic());
        let y =
            point_heteroclinic(&full, &cyc(&full, &[0]), &syms(&[0]), &cyc(&full, &[0])).unwrap();
        assert!(y.is_periodic());
        assert_eq!(y, point_from_cycle(&full, &cyc(&full, &[0])).unwrap());

        let gm = SftSystem::golden_mean(None).unwrap();
        let z = point_heteroclinic(&gm, &cyc(&gm, &[0]), &syms(&[1]), &cyc(&gm, &[0])).unwrap();
        assert!(!z.is_periodic());
        assert_eq!(z.bridge(), syms(&[1]).as_slice());
        let bad = point_heteroclinic(&gm, &cyc(&gm, &[0]), &syms(&[1, 1]), &cyc(&gm, &[0]));
        assert!(matches!(bad, Err(Error::Inadmissible { position: 0, .. })));
    }

    #[test]
    fn rotated_cycles_canonicalize_to_periodic() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let x = EvpPoint::from_parts(&full, &syms(&[0, 1]), &[], &syms(&[0, 1]), 0, None).unwrap();
        assert!(x.is_periodic());
        let phase_slip =
            EvpPoint::from_parts(&full, &syms(&[0, 1]), &[], &syms(&[1, 0]), 0, None).unwrap();
        assert!(!phase_slip.is_periodic());
        // …0101|1010… reads …01011010…, a single defect
        assert_eq!(phase_slip.symbol_at(-1), Symbol(1));
        assert_eq!(phase_slip.symbol_at(0), Symbol(1));
    }

    #[test]
    fn empty_bridge_junction_is_unique() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let a = EvpPoint::from_parts(&full, &syms(&[0]), &[], &syms(&[0, 1]), 0, None).unwrap();
        let b = EvpPoint::from_parts(&full, &syms(&[0]), &[], &syms(&[1, 0]), -1, None).unwrap();
        assert_eq!(a, b);
        for i in -5..6 {
            assert_eq!(a.symbol_at(i + a.offset()), b.symbol_at(i + b.offset()));
        }
    }

    #[test]
    fn gamma_inv_shifts_coordinates() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let x = point_from_cycle(&full, &cyc(&full, &[0, 1])).unwrap();
        let y = gamma_inv(&full, &x);
        assert_eq!(y.offset(), 1);
        assert_eq!(y.symbol_at(y.offset()), Symbol(1));
        let fixed = point_from_cycle(&full, &cyc(&full, &[0])).unwrap();
        assert_eq!(gamma_inv(&full, &fixed), fixed);
    }

    #[test]
    fn tail_strata_move_by_index() {
        let full0 = SftSystem::full_shift(2, Some(&[0])).unwrap();
        let x = point_heteroclinic(&full0, &cyc(&full0, &[0]), &[], &cyc(&full0, &[1])).unwrap();
        let y = gamma_inv(&full0, &x);
        assert_eq!(y.stratum(), Stratum::Tail(1));
        assert!(y.same_word(&x));
        let t3 = gamma_pow(&full0, &x, -3);
        assert_eq!(t3.stratum(), Stratum::Tail(3));
        let t2 = gamma(&full0, &t3);
        assert_eq!(t2.stratum(), Stratum::Tail(2));
        assert!(t2.same_word(&x));
        // Tail(0) steps back into the paths stratum
        let back = gamma(&full0, &x);
        assert_eq!(back.stratum(), Stratum::Paths);
        assert_eq!(back.offset(), x.offset() - 1);
        assert_eq!(gamma_inv(&full0, &back), x);
    }

    #[test]
    fn gamma_round_trip_and_powers() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let x = point_heteroclinic(&full, &cyc(&full, &[0]), &[], &cyc(&full, &[1])).unwrap();
        assert_eq!(gamma(&full, &gamma_inv(&full, &x)), x);
        assert_eq!(gamma_pow(&full, &x, 0), x);
        assert_eq!(gamma_pow(&full, &x, -1), gamma_inv(&full, &x));
        let p = point_from_cycle(&full, &cyc(&full, &[0, 0, 1])).unwrap();
        assert_eq!(gamma_pow(&full, &p, 3), p);
        assert_ne!(gamma_pow(&full, &p, 1), p);
        let shifted = gamma(&full, &p);
        assert!(shifted.same_word(&p));
        assert_eq!(shifted.offset(), 2);
    }

    #[test]
    fn literal_round_trip() {
        let full = SftSystem::full_shift(2, None).unwrap();
        let x = EvpPoint::parse_literal(&full, "0^inf..1^inf@0[paths]").unwrap();
        assert_eq!(x.literal(&full), "0^inf..1^inf@0[paths]");
        let y = EvpPoint::parse_literal(&full, "01^inf.1.0^inf@-3").unwrap();
        assert_eq!(
            EvpPoint::parse_literal(&full, &y.literal(&full)).unwrap(),
            y
        );
        assert!(EvpPoint::parse_literal(&full, "0^inf.1^inf").is_err());
        assert!(matches!(
            EvpPoint::parse_literal(&full, "0^inf..1^inf@0[tail:0]"),
            Err(Error::StratumMismatch { .. })
        ));
    }
}
