//! Canonical forms. Every function representable by a `PLMap` has exactly
//! one canonical representation, so function equality reduces to structural
//! equality.
//!
//! Normalization steps, in order:
//! 1. each periodic germ is minimized by testing divisors of its piece count
//!    per period, and a germ that is one straight piece per period is
//!    demoted to an affine tail;
//! 2. a map that is one line is stored with an empty core;
//! 3. a globally periodic map is anchored at its smallest genuine kink in
//!    `[0, p)` with a core of exactly one period;
//! 4. otherwise the core endpoints are the extremal anchors: the tail laws
//!    fail on any strictly larger trimmed region. When a fundamental domain
//!    forces a wider core than one anchor allows, the opposite endpoint
//!    moves just far enough to contain it.
//!
//! Interior core entries are exactly the genuine slope changes; endpoints
//! are always present, kink or not.

use super::{PLMap, Tail};
use crate::rational::{rat, Rational};

impl PLMap {
    /// True iff the two maps are equal as functions on the line.
    pub fn equals(&self, other: &PLMap) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// The unique canonical form; idempotent and function-preserving.
    pub fn canonicalize(&self) -> PLMap {
        if self.core.is_empty() {
            return self.clone();
        }
        let left_min = self.minimize_germ(false);
        let right_min = self.minimize_germ(true);
        if let (Tail::Affine { a, b }, Tail::Affine { a: a2, b: b2 }) = (&left_min, &right_min) {
            if a == a2 && b == b2 && self.core.iter().all(|(x, y)| &(a * x + b) == y) {
                return PLMap::new(self.sign, Vec::new(), left_min.clone(), right_min)
                    .expect("a single line is a consistent map");
            }
        }
        if let (Tail::Periodic { p, q }, Tail::Periodic { p: p2, q: q2 }) = (&left_min, &right_min)
        {
            if p == p2 && q == q2 {
                if let Some(map) = self.try_global_periodic(p, q) {
                    return map;
                }
            }
        }
        let la = self.left_anchor(&left_min);
        let ra = self.right_anchor(&right_min);
        let xf = match &right_min {
            Tail::Periodic { p, .. } => (&ra - p).min(la.clone()),
            Tail::Affine { .. } => la.clone(),
        };
        let xl = match &left_min {
            Tail::Periodic { p, .. } => (&la + p).max(ra.clone()),
            Tail::Affine { .. } => ra.clone(),
        };
        assert!(xf <= xl, "anchor ordering violated");
        let mut xs = vec![xf.clone()];
        for x in self.junctions_in(&xf, &xl) {
            if x > xf && x < xl && self.is_genuine_kink(&x) {
                xs.push(x);
            }
        }
        if xl > xf {
            xs.push(xl);
        }
        let core: Vec<_> = xs
            .into_iter()
            .map(|x| {
                let y = self.evaluate(&x);
                (x, y)
            })
            .collect();
        PLMap::new(self.sign, core, left_min, right_min)
            .expect("canonicalization preserves consistency")
    }

    /// Minimal form of one tail germ: the smallest valid period, or an
    /// affine descriptor when the germ is a single straight piece.
    fn minimize_germ(&self, right: bool) -> Tail {
        let tail = if right { &self.right } else { &self.left };
        let Tail::Periodic { p, q } = tail else {
            return tail.clone();
        };
        let w = if right { self.x_last() } else { self.x_first() }
            .unwrap()
            .clone();
        let kinks: Vec<Rational> = if right {
            let lo = &w - p;
            self.junctions_in(&lo, &w)
                .into_iter()
                .filter(|x| *x > lo && self.is_genuine_kink(x))
                .collect()
        } else {
            let hi = &w + p;
            self.junctions_in(&w, &hi)
                .into_iter()
                .filter(|x| *x < hi && self.is_genuine_kink(x))
                .collect()
        };
        let n = kinks.len();
        if n == 0 {
            let a = self.sign.apply(&(q / p));
            let b = self.evaluate(&w) - &a * &w;
            return Tail::Affine { a, b };
        }
        // A valid sub-period p/d has d dividing the kink count per period;
        // the largest valid divisor gives the minimal period.
        for d in (2..=n).rev().filter(|d| n.is_multiple_of(*d)) {
            let dr = rat(d as i64);
            let p_sub = p / &dr;
            let q_sub = q / &dr;
            if self.germ_respects(right, &w, p, &p_sub, &q_sub) {
                return Tail::Periodic { p: p_sub, q: q_sub };
            }
        }
        tail.clone()
    }

    /// Checks `f(x + p_sub) = f(x) + sign*q_sub` across one full raw period
    /// window, which extends to the whole germ by raw periodicity.
    fn germ_respects(
        &self,
        right: bool,
        w: &Rational,
        p: &Rational,
        p_sub: &Rational,
        q_sub: &Rational,
    ) -> bool {
        let (lo, hi) = if right {
            (w - p, w - p_sub)
        } else {
            (w.clone(), w + p - p_sub)
        };
        let offset = self.sign.apply(q_sub);
        for x in self.law_candidates(&lo, &hi, Some(p_sub)) {
            if self.evaluate(&(&x + p_sub)) - self.evaluate(&x) != offset {
                return false;
            }
        }
        true
    }

    /// Detects global periodicity with germ `(p, q)` and builds the anchored
    /// canonical form.
    fn try_global_periodic(&self, p: &Rational, q: &Rational) -> Option<PLMap> {
        let xf = self.x_first().unwrap().clone();
        let xl = self.x_last().unwrap().clone();
        let offset = self.sign.apply(q);
        // The law holds on both rays by the minimized germ laws; it must
        // also hold across the middle.
        for s in self.law_candidates(&xf, &xl, Some(p)) {
            if self.evaluate(&(&s + p)) - self.evaluate(&s) != offset {
                return None;
            }
        }
        let b0 = self
            .junctions_in(&rat(0), p)
            .into_iter()
            .find(|x| *x < *p && self.is_genuine_kink(x))
            .expect("a periodic non-affine map has a kink in every period");
        let end = &b0 + p;
        let mut xs: Vec<Rational> = self
            .junctions_in(&b0, &end)
            .into_iter()
            .filter(|x| *x < end && self.is_genuine_kink(x))
            .collect();
        xs.push(end);
        let core: Vec<_> = xs
            .into_iter()
            .map(|x| {
                let y = self.evaluate(&x);
                (x, y)
            })
            .collect();
        let tail = Tail::Periodic {
            p: p.clone(),
            q: q.clone(),
        };
        Some(
            PLMap::new(self.sign, core, tail.clone(), tail)
                .expect("periodization of one period window is consistent"),
        )
    }

    /// Sorted points in `[lo, hi]` where `t -> f(t + shift) - f(t)` (or
    /// `f` itself, for `shift` None) can change slope, with the interval
    /// endpoints included.
    fn law_candidates(
        &self,
        lo: &Rational,
        hi: &Rational,
        shift: Option<&Rational>,
    ) -> Vec<Rational> {
        let mut c = match shift {
            Some(d) => {
                let mut c = self.junctions_in(lo, &(hi + d));
                let shifted: Vec<Rational> = c.iter().map(|x| x - d).collect();
                c.extend(shifted);
                c
            }
            None => self.junctions_in(lo, hi),
        };
        c.push(lo.clone());
        c.push(hi.clone());
        c.sort();
        c.dedup();
        c.retain(|x| x >= lo && x <= hi);
        c
    }

    /// Extremal right anchor: the smallest endpoint such that the (already
    /// minimized) right tail law holds beyond it.
    fn right_anchor(&self, tail: &Tail) -> Rational {
        let xf = self.x_first().unwrap().clone();
        let xl = self.x_last().unwrap().clone();
        let left_step = match &self.left {
            Tail::Periodic { p, .. } => p.clone(),
            Tail::Affine { .. } => rat(1),
        };
        match tail {
            Tail::Periodic { p, q } => {
                let offset = self.sign.apply(q);
                let start = &xl - p;
                let lb = &(&xf - p) - &left_step;
                let cands = self.law_candidates(&lb, &start, Some(p));
                let mut last_zero = start;
                for s in cands.iter().rev() {
                    if self.evaluate(&(s + p)) - self.evaluate(s) == offset {
                        last_zero = s.clone();
                    } else {
                        return &last_zero + p;
                    }
                }
                unreachable!("right tail law of a non-periodic map fails somewhere");
            }
            Tail::Affine { a, b } => {
                let lb = &xf - &left_step;
                let cands = self.law_candidates(&lb, &xl, None);
                let mut last_zero = xl;
                for s in cands.iter().rev() {
                    if self.evaluate(s) == a * s + b {
                        last_zero = s.clone();
                    } else {
                        return last_zero;
                    }
                }
                unreachable!("right affine law of a non-affine map fails somewhere");
            }
        }
    }

    /// Extremal left anchor: the largest endpoint such that the minimized
    /// left tail law holds below it.
    fn left_anchor(&self, tail: &Tail) -> Rational {
        let xf = self.x_first().unwrap().clone();
        let xl = self.x_last().unwrap().clone();
        let right_step = match &self.right {
            Tail::Periodic { p, .. } => p.clone(),
            Tail::Affine { .. } => rat(1),
        };
        match tail {
            Tail::Periodic { p, q } => {
                let offset = self.sign.apply(q);
                let ub = &xl + &right_step;
                let cands = self.law_candidates(&xf, &ub, Some(p));
                let mut last_zero = xf;
                for s in cands.iter() {
                    if self.evaluate(&(s + p)) - self.evaluate(s) == offset {
                        last_zero = s.clone();
                    } else {
                        return last_zero;
                    }
                }
                unreachable!("left tail law of a non-periodic map fails somewhere");
            }
            Tail::Affine { a, b } => {
                let ub = &xl + &right_step;
                let cands = self.law_candidates(&xf, &ub, None);
                let mut last_zero = xf;
                for s in cands.iter() {
                    if self.evaluate(s) == a * s + b {
                        last_zero = s.clone();
                    } else {
                        return last_zero;
                    }
                }
                unreachable!("left affine law of a non-affine map fails somewhere");
            }
        }
    }
}
