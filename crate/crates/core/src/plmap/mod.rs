//! Piecewise-linear homeomorphisms of the real line with eventually
//! periodically affine tails.
//!
//! A map is stored as a finite `core` of breakpoints `(x_i, f(x_i))` plus a
//! [`Tail`] descriptor for each end. Tails make the representation total:
//! every map is defined on all of R even when it has infinitely many
//! breakpoints globally, as the 1-periodic generators do.
//!
//! Writing `s` for the orientation sign as an integer, the tail laws are:
//! * right `Periodic(p, q)`: `f(t) = f(t - p) + s*q` for all `t > x_last`,
//!   with the fundamental domain `[x_last - p, x_last]` inside the core;
//! * left `Periodic(p, q)`: `f(t) = f(t + p) - s*q` for all `t < x_first`,
//!   with the fundamental domain `[x_first, x_first + p]` inside the core;
//! * `Affine(a, b)`: `f(t) = a*t + b` on the ray beyond the adjacent core
//!   endpoint.
//!
//! A map with no breakpoints has an empty core and two equal `Affine` tails.
//! Canonical forms (see [`PLMap::canonicalize`]) are unique per function, so
//! function equality is structural equality of canonical forms.

use crate::rational::{ceil_int, format_rational, parse_rational, rat, Rational};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

mod canonical;
mod compose;

/// Orientation of a homeomorphism of the line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn product(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `r` for `Plus`, `-r` for `Minus`.
    pub fn apply(self, r: &Rational) -> Rational {
        match self {
            Sign::Plus => r.clone(),
            Sign::Minus => -r.clone(),
        }
    }

    /// Sign of a nonzero rational.
    pub fn of(r: &Rational) -> Option<Sign> {
        if r.is_positive() {
            Some(Sign::Plus)
        } else if r.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_int())
    }
}

/// Behavior of a map on a ray near one end of the line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tail {
    /// A single infinite linear piece `t -> a*t + b`, `a != 0`.
    Affine { a: Rational, b: Rational },
    /// Periodically affine with input period `p > 0` and output period
    /// `q > 0`; the offset is `sign * q`.
    Periodic { p: Rational, q: Rational },
}

impl Tail {
    pub fn affine<A, B>(a: A, b: B) -> Tail
    where
        A: crate::rational::IntoRational,
        B: crate::rational::IntoRational,
    {
        Tail::Affine {
            a: rat(a),
            b: rat(b),
        }
    }

    pub fn periodic<P, Q>(p: P, q: Q) -> Tail
    where
        P: crate::rational::IntoRational,
        Q: crate::rational::IntoRational,
    {
        Tail::Periodic {
            p: rat(p),
            q: rat(q),
        }
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self, Tail::Periodic { .. })
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, Tail::Affine { .. })
    }

    /// Input period of a periodic tail.
    pub fn period(&self) -> Option<&Rational> {
        match self {
            Tail::Periodic { p, .. } => Some(p),
            Tail::Affine { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("malformed map: {0}")]
    Malformed(String),
    #[error("affine map must have nonzero slope")]
    ZeroSlope,
}

/// A piecewise-linear homeomorphism of the real line. Immutable; every
/// constructed value satisfies the representation invariants checked by
/// [`PLMap::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLMap {
    sign: Sign,
    core: Vec<(Rational, Rational)>,
    left: Tail,
    right: Tail,
}

impl PLMap {
    /// Validates and builds a map. The representation need not be canonical;
    /// it must only be consistent:
    /// * core x strictly increasing, y strictly monotone matching `sign`;
    /// * an empty core carries two equal affine tails;
    /// * affine tails meet the adjacent core endpoint and slope sign matches;
    /// * periodic tails have `p, q > 0`, a fundamental domain inside the
    ///   core, and match the core values across the period boundary.
    pub fn new(
        sign: Sign,
        core: Vec<(Rational, Rational)>,
        left: Tail,
        right: Tail,
    ) -> Result<PLMap, MapError> {
        let malformed = |m: &str| MapError::Malformed(m.to_string());
        for w in core.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(malformed("core x coordinates must be strictly increasing"));
            }
            let dy = &w[1].1 - &w[0].1;
            if Sign::of(&dy) != Some(sign) {
                return Err(malformed(
                    "core values must be strictly monotone for the sign",
                ));
            }
        }
        if core.is_empty() {
            match (&left, &right) {
                (Tail::Affine { a, b }, Tail::Affine { a: a2, b: b2 }) => {
                    if a.is_zero() {
                        return Err(MapError::ZeroSlope);
                    }
                    if a != a2 || b != b2 {
                        return Err(malformed("empty core requires equal affine tails"));
                    }
                    if Sign::of(a) != Some(sign) {
                        return Err(malformed("affine slope contradicts the sign"));
                    }
                }
                _ => return Err(malformed("empty core requires affine tails")),
            }
            return Ok(PLMap {
                sign,
                core,
                left,
                right,
            });
        }
        let map = PLMap {
            sign,
            core,
            left,
            right,
        };
        let (xf, yf) = map.core.first().unwrap().clone();
        let (xl, yl) = map.core.last().unwrap().clone();
        let span = &xl - &xf;
        match &map.left {
            Tail::Affine { a, b } => {
                if a.is_zero() {
                    return Err(MapError::ZeroSlope);
                }
                if Sign::of(a) != Some(map.sign) {
                    return Err(malformed("left affine slope contradicts the sign"));
                }
                if a * &xf + b != yf {
                    return Err(malformed("left affine tail misses the first core point"));
                }
            }
            Tail::Periodic { p, q } => {
                if !p.is_positive() || !q.is_positive() {
                    return Err(malformed("periodic tail needs positive periods"));
                }
                if *p > span {
                    return Err(malformed("left fundamental domain exceeds the core"));
                }
                if map.value_in_core(&(&xf + p)) != &yf + map.sign.apply(q) {
                    return Err(malformed("left tail law fails at the core boundary"));
                }
            }
        }
        match &map.right {
            Tail::Affine { a, b } => {
                if a.is_zero() {
                    return Err(MapError::ZeroSlope);
                }
                if Sign::of(a) != Some(map.sign) {
                    return Err(malformed("right affine slope contradicts the sign"));
                }
                if a * &xl + b != yl {
                    return Err(malformed("right affine tail misses the last core point"));
                }
            }
            Tail::Periodic { p, q } => {
                if !p.is_positive() || !q.is_positive() {
                    return Err(malformed("periodic tail needs positive periods"));
                }
                if *p > span {
                    return Err(malformed("right fundamental domain exceeds the core"));
                }
                if map.value_in_core(&(&xl - p)) != &yl - map.sign.apply(q) {
                    return Err(malformed("right tail law fails at the core boundary"));
                }
            }
        }
        Ok(map)
    }

    /// The identity map.
    pub fn identity() -> PLMap {
        PLMap::affine(rat(1), rat(0)).unwrap()
    }

    /// The translation `t -> t + a`.
    pub fn translation(a: Rational) -> PLMap {
        PLMap::affine(rat(1), a).unwrap()
    }

    /// The affine map `t -> a*t + b`.
    pub fn affine(a: Rational, b: Rational) -> Result<PLMap, MapError> {
        let sign = Sign::of(&a).ok_or(MapError::ZeroSlope)?;
        let tail = Tail::Affine { a, b };
        PLMap::new(sign, Vec::new(), tail.clone(), tail)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn core(&self) -> &[(Rational, Rational)] {
        &self.core
    }

    pub fn left_tail(&self) -> &Tail {
        &self.left
    }

    pub fn right_tail(&self) -> &Tail {
        &self.right
    }

    /// First core x, if the core is nonempty.
    pub fn x_first(&self) -> Option<&Rational> {
        self.core.first().map(|(x, _)| x)
    }

    /// Last core x, if the core is nonempty.
    pub fn x_last(&self) -> Option<&Rational> {
        self.core.last().map(|(x, _)| x)
    }

    /// True iff this is the identity map (checked on the canonical form).
    pub fn is_identity(&self) -> bool {
        self.canonicalize() == PLMap::identity()
    }

    /// Exact evaluation, total on the rationals. Arguments outside the core
    /// are reduced into it with a single closed-form application of the tail
    /// law.
    pub fn evaluate(&self, t: &Rational) -> Rational {
        if self.core.is_empty() {
            let Tail::Affine { a, b } = &self.right else {
                unreachable!("empty core has affine tails")
            };
            return a * t + b;
        }
        let xf = self.x_first().unwrap();
        let xl = self.x_last().unwrap();
        if t > xl {
            return match &self.right {
                Tail::Affine { a, b } => a * t + b,
                Tail::Periodic { p, q } => {
                    let n = Rational::from_integer(ceil_int(&(&(t - xl) / p)));
                    self.value_in_core(&(t - &n * p)) + self.sign.apply(&(&n * q))
                }
            };
        }
        if t < xf {
            return match &self.left {
                Tail::Affine { a, b } => a * t + b,
                Tail::Periodic { p, q } => {
                    let n = Rational::from_integer(ceil_int(&(&(xf - t) / p)));
                    self.value_in_core(&(t + &n * p)) - self.sign.apply(&(&n * q))
                }
            };
        }
        self.value_in_core(t)
    }

    /// Linear interpolation inside the core span. The argument must lie in
    /// `[x_first, x_last]`.
    fn value_in_core(&self, t: &Rational) -> Rational {
        debug_assert!(Some(t) >= self.x_first() && Some(t) <= self.x_last());
        let i = match self.core.binary_search_by(|(x, _)| x.cmp(t)) {
            Ok(i) => return self.core[i].1.clone(),
            Err(i) => i,
        };
        let (x0, y0) = &self.core[i - 1];
        let (x1, y1) = &self.core[i];
        y0 + (y1 - y0) * &(&(t - x0) / &(x1 - x0))
    }

    /// All x in `[lo, hi]` where the map can change slope: core entries plus
    /// periodic translates of the fundamental-domain pattern beyond the core.
    /// Sorted, deduplicated. Affine rays contribute nothing.
    pub(crate) fn junctions_in(&self, lo: &Rational, hi: &Rational) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::new();
        if self.core.is_empty() || lo > hi {
            return out;
        }
        for (x, _) in &self.core {
            if x >= lo && x <= hi {
                out.push(x.clone());
            }
        }
        let xf = self.x_first().unwrap().clone();
        let xl = self.x_last().unwrap().clone();
        if lo < &xf {
            if let Tail::Periodic { p, .. } = &self.left {
                let window_hi = &xf + p;
                let mut pattern: Vec<Rational> = self
                    .core
                    .iter()
                    .map(|(x, _)| x)
                    .filter(|x| **x <= window_hi)
                    .cloned()
                    .collect();
                pattern.push(window_hi);
                let hi_eff = if hi < &xf { hi.clone() } else { xf.clone() };
                for pt in pattern {
                    translates(&pt, p, &Sign::Minus, lo, &hi_eff, &mut out);
                }
            }
        }
        if hi > &xl {
            if let Tail::Periodic { p, .. } = &self.right {
                let window_lo = &xl - p;
                let mut pattern: Vec<Rational> = self
                    .core
                    .iter()
                    .map(|(x, _)| x)
                    .filter(|x| **x >= window_lo)
                    .cloned()
                    .collect();
                pattern.push(window_lo);
                let lo_eff = if lo > &xl { lo.clone() } else { xl.clone() };
                for pt in pattern {
                    translates(&pt, p, &Sign::Plus, &lo_eff, hi, &mut out);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// The nearest possible junction strictly above `x`, or `None` if the map
    /// is a single linear piece from `x` on.
    pub(crate) fn next_junction_after(&self, x: &Rational) -> Option<Rational> {
        if self.core.is_empty() {
            return None;
        }
        let xf = self.x_first().unwrap();
        let xl = self.x_last().unwrap();
        if x < xf {
            let step = match &self.left {
                Tail::Affine { .. } => return Some(xf.clone()),
                Tail::Periodic { p, .. } => p.clone(),
            };
            // Junctions below xf tile with period `step`; scan one window.
            let cands = self.junctions_in(&(x + rat(0)), &(x + &step));
            return cands.into_iter().find(|c| c > x).or(Some(xf.clone()));
        }
        if x >= xl {
            let step = match &self.right {
                Tail::Affine { .. } => return None,
                Tail::Periodic { p, .. } => p.clone(),
            };
            let cands = self.junctions_in(x, &(x + &step));
            return cands.into_iter().find(|c| c > x);
        }
        self.core
            .iter()
            .map(|(cx, _)| cx)
            .find(|cx| *cx > x)
            .cloned()
    }

    /// The nearest possible junction strictly below `x`.
    pub(crate) fn prev_junction_before(&self, x: &Rational) -> Option<Rational> {
        if self.core.is_empty() {
            return None;
        }
        let xf = self.x_first().unwrap();
        let xl = self.x_last().unwrap();
        if x > xl {
            let step = match &self.right {
                Tail::Affine { .. } => return Some(xl.clone()),
                Tail::Periodic { p, .. } => p.clone(),
            };
            let cands = self.junctions_in(&(x - &step), x);
            return cands.into_iter().rev().find(|c| c < x).or(Some(xl.clone()));
        }
        if x <= xf {
            let step = match &self.left {
                Tail::Affine { .. } => return None,
                Tail::Periodic { p, .. } => p.clone(),
            };
            let cands = self.junctions_in(&(x - &step), x);
            return cands.into_iter().rev().find(|c| c < x);
        }
        self.core
            .iter()
            .rev()
            .map(|(cx, _)| cx)
            .find(|cx| *cx < x)
            .cloned()
    }

    /// Exact slope immediately to the right of `x`.
    pub(crate) fn slope_right_at(&self, x: &Rational) -> Rational {
        let delta = match self.next_junction_after(x) {
            Some(n) => (&n - x) / rat(2),
            None => rat(1),
        };
        (self.evaluate(&(x + &delta)) - self.evaluate(x)) / delta
    }

    /// Exact slope immediately to the left of `x`.
    pub(crate) fn slope_left_at(&self, x: &Rational) -> Rational {
        let delta = match self.prev_junction_before(x) {
            Some(p) => (x - &p) / rat(2),
            None => rat(1),
        };
        (self.evaluate(x) - self.evaluate(&(x - &delta))) / delta
    }

    /// True iff the slope genuinely changes at `x`.
    pub(crate) fn is_genuine_kink(&self, x: &Rational) -> bool {
        self.slope_left_at(x) != self.slope_right_at(x)
    }

    /// Number of linear pieces in one period of a periodic tail germ, `None`
    /// for affine tails. On canonical maps this equals the minimal piece
    /// count per fundamental domain.
    pub fn pieces_per_period(&self, right: bool) -> Option<usize> {
        let tail = if right { &self.right } else { &self.left };
        let Tail::Periodic { p, .. } = tail else {
            return None;
        };
        let kinks = if right {
            let w = self.x_last().unwrap();
            let lo = w - p;
            self.junctions_in(&lo, w)
                .into_iter()
                .filter(|x| *x > lo && self.is_genuine_kink(x))
                .count()
        } else {
            let w = self.x_first().unwrap();
            let hi = w + p;
            self.junctions_in(w, &hi)
                .into_iter()
                .filter(|x| *x < hi && self.is_genuine_kink(x))
                .count()
        };
        Some(kinks.max(1))
    }
}

/// Pushes `pt + k*step*dir` for all `k >= 1` landing in `[lo, hi]`.
fn translates(
    pt: &Rational,
    step: &Rational,
    dir: &Sign,
    lo: &Rational,
    hi: &Rational,
    out: &mut Vec<Rational>,
) {
    if lo > hi {
        return;
    }
    // Solve lo <= pt + s*k*step <= hi for integer k >= 1.
    let (lo_k, hi_k) = match dir {
        Sign::Plus => ((lo - pt) / step, (hi - pt) / step),
        Sign::Minus => ((pt - hi) / step, (pt - lo) / step),
    };
    let mut k = ceil_int(&lo_k).max(1.into());
    let k_max = crate::rational::floor_int(&hi_k);
    while k <= k_max {
        let offset = Rational::from_integer(k.clone()) * step;
        out.push(match dir {
            Sign::Plus => pt + &offset,
            Sign::Minus => pt - &offset,
        });
        k += 1;
    }
}

// Wire format: {"sign":1,"core":[["x","y"],..],"left":{...},"right":{...}}
// with rationals rendered "num/den" (den omitted when 1) and tails as
// {"affine":["a","b"]} or {"periodic":["p","q"]}.

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum TailRepr {
    Affine([String; 2]),
    Periodic([String; 2]),
}

#[derive(Serialize, Deserialize)]
struct PLMapRepr {
    sign: i8,
    core: Vec<[String; 2]>,
    left: TailRepr,
    right: TailRepr,
}

fn tail_repr(t: &Tail) -> TailRepr {
    match t {
        Tail::Affine { a, b } => TailRepr::Affine([format_rational(a), format_rational(b)]),
        Tail::Periodic { p, q } => TailRepr::Periodic([format_rational(p), format_rational(q)]),
    }
}

fn tail_from_repr(r: &TailRepr) -> Result<Tail, crate::rational::RationalParseError> {
    Ok(match r {
        TailRepr::Affine([a, b]) => Tail::Affine {
            a: parse_rational(a)?,
            b: parse_rational(b)?,
        },
        TailRepr::Periodic([p, q]) => Tail::Periodic {
            p: parse_rational(p)?,
            q: parse_rational(q)?,
        },
    })
}

impl Serialize for PLMap {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let repr = PLMapRepr {
            sign: self.sign.as_int() as i8,
            core: self
                .core
                .iter()
                .map(|(x, y)| [format_rational(x), format_rational(y)])
                .collect(),
            left: tail_repr(&self.left),
            right: tail_repr(&self.right),
        };
        repr.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PLMap {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = PLMapRepr::deserialize(de)?;
        let sign = match repr.sign {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            other => {
                return Err(D::Error::custom(format!(
                    "sign must be 1 or -1, got {other}"
                )))
            }
        };
        let mut core = Vec::with_capacity(repr.core.len());
        for [x, y] in &repr.core {
            core.push((
                parse_rational(x).map_err(D::Error::custom)?,
                parse_rational(y).map_err(D::Error::custom)?,
            ));
        }
        let left = tail_from_repr(&repr.left).map_err(D::Error::custom)?;
        let right = tail_from_repr(&repr.right).map_err(D::Error::custom)?;
        PLMap::new(sign, core, left, right).map_err(D::Error::custom)
    }
}

impl fmt::Display for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_string(self).map_err(|_| fmt::Error)?;
        f.write_str(&s)
    }
}

impl FromStr for PLMap {
    type Err = serde_json::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thompson;

    #[test]
    fn evaluate_examples() {
        assert_eq!(PLMap::identity().evaluate(&rat((7, 3))), rat((7, 3)));
        let c = thompson::c();
        assert_eq!(c.evaluate(&rat(0)), rat((-1, 4)));
        assert_eq!(c.evaluate(&rat(100)), rat((399, 4)));
        let c3 = c.compose(&c).compose(&c);
        assert_eq!(c3.evaluate(&rat(5)), rat(4));
    }

    #[test]
    fn validation_rejects_bad_cores() {
        let err = PLMap::new(
            Sign::Plus,
            vec![(rat(0), rat(0)), (rat(0), rat(1))],
            Tail::affine(1, 0),
            Tail::affine(1, 0),
        );
        assert!(matches!(err, Err(MapError::Malformed(_))));
        let err = PLMap::new(
            Sign::Plus,
            vec![(rat(0), rat(1)), (rat(1), rat(0))],
            Tail::affine(1, 1),
            Tail::affine(1, -1),
        );
        assert!(matches!(err, Err(MapError::Malformed(_))));
        assert!(matches!(
            PLMap::affine(rat(0), rat(3)),
            Err(MapError::ZeroSlope)
        ));
    }

    #[test]
    fn validation_checks_tail_consistency() {
        // Periodic tail whose fundamental domain exceeds the core.
        let err = PLMap::new(
            Sign::Plus,
            vec![(rat(0), rat(0)), (rat(1), rat(1))],
            Tail::affine(1, 0),
            Tail::periodic(2, 2),
        );
        assert!(err.is_err());
        // Offset disagrees with the core values.
        let err = PLMap::new(
            Sign::Plus,
            vec![(rat(0), rat(0)), (rat(1), rat(1))],
            Tail::affine(1, 0),
            Tail::periodic(1, 2),
        );
        assert!(err.is_err());
        // Affine tail missing the endpoint.
        let err = PLMap::new(
            Sign::Plus,
            vec![(rat(0), rat(0)), (rat(1), rat(1))],
            Tail::affine(1, 5),
            Tail::affine(1, 0),
        );
        assert!(err.is_err());
    }

    #[test]
    fn tail_reduction_matches_manual_iteration() {
        let c = thompson::c();
        // c(t+1) = c(t) + 1, iterated from the fundamental domain.
        let mut expect = c.evaluate(&rat((1, 3)));
        for _ in 0..50 {
            expect += rat(1);
        }
        assert_eq!(c.evaluate(&(rat((1, 3)) + rat(50))), expect);
        let mut expect = c.evaluate(&rat((1, 3)));
        for _ in 0..50 {
            expect -= rat(1);
        }
        assert_eq!(c.evaluate(&(rat((1, 3)) - rat(50))), expect);
    }

    #[test]
    fn reflection_has_minus_sign() {
        let r = PLMap::affine(rat(-1), rat(0)).unwrap();
        assert_eq!(r.sign(), Sign::Minus);
        assert_eq!(r.evaluate(&rat(5)), rat(-5));
    }

    #[test]
    fn serialization_round_trips_bit_exactly() {
        for m in [
            thompson::c(),
            thompson::x0(),
            thompson::glued_bump(),
            PLMap::affine(rat(-2), rat((1, 3))).unwrap(),
            PLMap::identity(),
        ] {
            let text = m.to_string();
            let back: PLMap = text.parse().unwrap();
            assert_eq!(back, m);
            assert_eq!(back.to_string(), text);
        }
    }

    #[test]
    fn serialization_format_is_stable() {
        let c = thompson::c();
        assert_eq!(
            c.to_string(),
            "{\"sign\":1,\"core\":[[\"0\",\"-1/4\"],[\"1/2\",\"0\"],[\"3/4\",\"1/2\"],[\"1\",\"3/4\"]],\"left\":{\"periodic\":[\"1\",\"1\"]},\"right\":{\"periodic\":[\"1\",\"1\"]}}"
        );
    }

    #[test]
    fn deserialization_rejects_malformed_maps() {
        let bad = "{\"sign\":1,\"core\":[[\"1\",\"0\"],[\"0\",\"1\"]],\"left\":{\"affine\":[\"1\",\"0\"]},\"right\":{\"affine\":[\"1\",\"0\"]}}";
        assert!(bad.parse::<PLMap>().is_err());
        let bad_sign = "{\"sign\":2,\"core\":[],\"left\":{\"affine\":[\"1\",\"0\"]},\"right\":{\"affine\":[\"1\",\"0\"]}}";
        assert!(bad_sign.parse::<PLMap>().is_err());
    }

    #[test]
    fn junction_enumeration_extends_through_tails() {
        let c = thompson::c();
        let j = c.junctions_in(&rat(-1), &rat(2));
        let expect: Vec<Rational> = [
            rat(-1),
            rat((-1, 2)),
            rat((-1, 4)),
            rat(0),
            rat((1, 2)),
            rat((3, 4)),
            rat(1),
            rat((3, 2)),
            rat((7, 4)),
            rat(2),
        ]
        .into_iter()
        .collect();
        assert_eq!(j, expect);
    }

    #[test]
    fn slope_probes_are_exact() {
        let c = thompson::c();
        assert_eq!(c.slope_right_at(&rat(0)), rat((1, 2)));
        assert_eq!(c.slope_left_at(&rat(0)), rat(1));
        assert_eq!(c.slope_left_at(&rat((103, 2))), rat((1, 2)));
        assert!(c.is_genuine_kink(&rat((3, 4))));
        assert!(!c.is_genuine_kink(&rat((1, 8))));
    }
}
