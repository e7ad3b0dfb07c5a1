//! Deterministic sample generators for randomized testing: raw maps in
//! arbitrary presentations, dyadic bridges, random words, and elements of
//! the named subgroups. Every generator takes an explicit RNG so runs are
//! reproducible from a seed.

use crate::plmap::{PLMap, Sign, Tail};
use crate::presentation::{eval_word, standard_lifts};
use crate::rational::{ceil_int, rat, Rational};
use crate::thompson;
use crate::words::Word;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded RNG for reproducible runs.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let den = *[1i64, 2, 3, 4, 8].choose(rng).unwrap();
    rat((rng.gen_range(-16..=16), den))
}

fn positive_step<R: Rng>(rng: &mut R) -> Rational {
    let den = *[1i64, 2, 3, 4].choose(rng).unwrap();
    rat((rng.gen_range(1..=8), den))
}

fn small_period<R: Rng>(rng: &mut R) -> (Rational, Rational) {
    // Commensurable choices keep composite periods (an lcm of ratios of
    // these) small, so composed samples stay tractable.
    let p = [rat((1, 2)), rat(1), rat((3, 2)), rat(2)]
        .choose(rng)
        .unwrap()
        .clone();
    let q = [rat((1, 2)), rat(1), rat((3, 2)), rat(2), rat(3)]
        .choose(rng)
        .unwrap()
        .clone();
    (p, q)
}

fn affine_tail_through<R: Rng>(rng: &mut R, sign: Sign, pt: &(Rational, Rational)) -> Tail {
    let mag = [rat(1), rat(2), rat((1, 2)), rat(3), rat(4)]
        .choose(rng)
        .unwrap()
        .clone();
    let a = sign.apply(&mag);
    let b = &pt.1 - &(&a * &pt.0);
    Tail::Affine { a, b }
}

/// Points continuing a monotone path from `from` by `(dx, dy)` with up to
/// two interior kinks, ending exactly at `from + (dx, dy)`.
fn pattern_points<R: Rng>(
    rng: &mut R,
    from: &(Rational, Rational),
    dx: &Rational,
    dy: &Rational,
) -> Vec<(Rational, Rational)> {
    let fracs = [
        rat((1, 4)),
        rat((1, 3)),
        rat((1, 2)),
        rat((2, 3)),
        rat((3, 4)),
    ];
    let k = rng.gen_range(0..=2usize);
    let mut us: Vec<Rational> = fracs.choose_multiple(rng, k).cloned().collect();
    us.sort();
    let mut vs: Vec<Rational> = fracs.choose_multiple(rng, k).cloned().collect();
    vs.sort();
    let mut out: Vec<(Rational, Rational)> = us
        .iter()
        .zip(&vs)
        .map(|(u, v)| (&from.0 + &(u * dx), &from.1 + &(v * dy)))
        .collect();
    out.push((&from.0 + dx, &from.1 + dy));
    out
}

/// A random consistent map in a raw, usually non-canonical presentation:
/// mixed tail kinds, both orientations, cores of up to about ten points.
/// Periodic data is drawn from a commensurable lattice so that composites
/// of samples keep small periods.
pub fn random_plmap<R: Rng>(rng: &mut R) -> PLMap {
    let sign = if rng.gen_bool(0.75) {
        Sign::Plus
    } else {
        Sign::Minus
    };
    if rng.gen_ratio(1, 8) {
        let mag = [rat(1), rat(2), rat((1, 2)), rat((3, 2))]
            .choose(rng)
            .unwrap()
            .clone();
        return PLMap::affine(sign.apply(&mag), small_rational(rng)).unwrap();
    }
    let mut pts = vec![(small_rational(rng), small_rational(rng))];
    let left = if rng.gen_bool(0.5) {
        let (p, q) = small_period(rng);
        let start = pts[0].clone();
        pts.extend(pattern_points(rng, &start, &p, &sign.apply(&q)));
        Tail::Periodic { p, q }
    } else {
        affine_tail_through(rng, sign, &pts[0])
    };
    for _ in 0..rng.gen_range(0..=3) {
        let last = pts.last().unwrap().clone();
        let dx = positive_step(rng);
        let dy = sign.apply(&positive_step(rng));
        pts.push((&last.0 + &dx, &last.1 + &dy));
    }
    let right = if rng.gen_bool(0.5) {
        let (p, q) = small_period(rng);
        let anchor = pts.last().unwrap().clone();
        pts.extend(pattern_points(rng, &anchor, &p, &sign.apply(&q)));
        Tail::Periodic { p, q }
    } else {
        affine_tail_through(rng, sign, pts.last().unwrap())
    };
    PLMap::new(sign, pts, left, right).expect("generated presentation is consistent")
}

/// Interior breakpoints of a two-piece dyadic staircase from `from` up to
/// `to`, with both slopes powers of two; empty when a single power-of-two
/// piece fits exactly. Inputs must be dyadic, increasing in both
/// coordinates.
pub fn dyadic_bridge(
    from: &(Rational, Rational),
    to: &(Rational, Rational),
) -> Vec<(Rational, Rational)> {
    let w = &to.0 - &from.0;
    let h = &to.1 - &from.1;
    assert!(
        w.is_positive() && h.is_positive(),
        "bridge must increase in both coordinates"
    );
    let r = &h / &w;
    let two = rat(2);
    let mut pow = rat(1);
    while &pow * &two <= r {
        pow = &pow * &two;
    }
    while pow > r {
        pow = &pow / &two;
    }
    // Widths w1 at slope `pow` and w2 at slope `2*pow` covering (w, h).
    let w2 = &h / &pow - &w;
    if w2.is_zero() {
        return Vec::new();
    }
    let w1 = &w - &w2;
    vec![(&from.0 + &w1, &from.1 + &(&w1 * &pow))]
}

/// Random word over `gens` with total letter count (with multiplicity)
/// exactly `len`.
pub fn random_word<R: Rng>(rng: &mut R, gens: &[&str], len: u64) -> Word {
    let mut letters = Vec::new();
    let mut total = 0u64;
    while total < len {
        let name = (*gens.choose(rng).unwrap()).to_string();
        let mut e = *[-2i64, -1, 1, 2].choose(rng).unwrap();
        if e.unsigned_abs() > len - total {
            e = e.signum();
        }
        total += e.unsigned_abs();
        letters.push((name, e));
    }
    Word::from_letters(letters)
}

/// A random element of H₁: a short word in x0, x1, c under the standard
/// lifts.
pub fn random_h1_map<R: Rng>(rng: &mut R) -> PLMap {
    let len = rng.gen_range(1..=6);
    let w = random_word(rng, &["x0", "x1", "c"], len);
    eval_word(&w, standard_lifts).expect("catalog names resolve")
}

/// A random element of H_p for integer `p >= 1`, as a conjugate of an H₁
/// element by the dilation `t -> p*t`.
pub fn random_hp_map<R: Rng>(rng: &mut R, p: i64) -> PLMap {
    assert!(p >= 1);
    let alpha = PLMap::affine(rat(p), rat(0)).unwrap();
    thompson::conjugate(&alpha, &random_h1_map(rng))
}

/// A random compactly supported F element: a short product of the bump and
/// its conjugates under x0 and x1.
pub fn random_fprime_map<R: Rng>(rng: &mut R) -> PLMap {
    let b = thompson::bump();
    let gens = [
        b.clone(),
        thompson::conjugate(&thompson::x0(), &b),
        thompson::conjugate(&thompson::x1(), &b),
    ];
    let mut acc = PLMap::identity();
    for _ in 0..rng.gen_range(1..=3) {
        let g = gens.choose(rng).unwrap();
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        acc = acc.compose(&g.pow(e));
    }
    acc
}

/// A random F element with prescribed integer translation tails, built as
/// a dyadic bridge between the rays `t + m₋` and `t + m₊` composed with a
/// compactly supported wiggle. Returns `(map, m₋, m₊)`.
pub fn random_f_map<R: Rng>(rng: &mut R) -> (PLMap, i64, i64) {
    let m_minus = rng.gen_range(-3..=3i64);
    let m_plus = rng.gen_range(-3..=3i64);
    let b = (m_minus - m_plus + 1).max(1);
    let from = (rat(0), rat(m_minus));
    let to = (rat(b), rat(b + m_plus));
    let mut core = vec![from.clone()];
    core.extend(dyadic_bridge(&from, &to));
    core.push(to);
    let bridge = PLMap::new(
        Sign::Plus,
        core,
        Tail::affine(1, m_minus),
        Tail::affine(1, m_plus),
    )
    .expect("bridge between translation rays is consistent");
    (bridge.compose(&random_fprime_map(rng)), m_minus, m_plus)
}

fn window_points(f: &PLMap, lo: &Rational, hi: &Rational) -> Vec<(Rational, Rational)> {
    let mut xs = f.junctions_in(lo, hi);
    xs.push(lo.clone());
    xs.push(hi.clone());
    xs.sort();
    xs.dedup();
    xs.into_iter()
        .map(|x| {
            let y = f.evaluate(&x);
            (x, y)
        })
        .collect()
}

/// A random element of K: a left H₁ germ on `(-∞, 0]` bridged to a right
/// H₁ germ on `[B, ∞)`.
pub fn random_k_map<R: Rng>(rng: &mut R) -> PLMap {
    let hm = random_h1_map(rng);
    let hp = random_h1_map(rng);
    let y0 = hm.evaluate(&rat(0));
    let hp0 = hp.evaluate(&rat(0));
    // hp(B) = hp(0) + B must exceed hm(0).
    let b = Rational::from_integer(ceil_int(&(&y0 - &hp0)) + 1).max(rat(1));
    let yb = hp.evaluate(&b);
    let mut core = window_points(&hm, &rat(-1), &rat(0));
    for pt in dyadic_bridge(&(rat(0), y0), &(b.clone(), yb)) {
        core.push(pt);
    }
    for pt in window_points(&hp, &b, &(&b + &rat(1))) {
        if core.last().is_none_or(|(x, _)| *x < pt.0) {
            core.push(pt);
        }
    }
    PLMap::new(Sign::Plus, core, Tail::periodic(1, 1), Tail::periodic(1, 1))
        .expect("glued germs are consistent")
        .canonicalize()
}

/// The same function as `f`, re-presented with both periodic tails doubled
/// (period `2p`, offset `2q`, core widened accordingly). Affine tails are
/// untouched; a map with no periodic tail is returned as is.
pub fn with_doubled_periods(f: &PLMap) -> PLMap {
    if f.core().is_empty() {
        return f.clone();
    }
    let sign = f.sign();
    let mut core = f.core().to_vec();
    let mut left = f.left_tail().clone();
    let mut right = f.right_tail().clone();
    if let Tail::Periodic { p, q } = f.right_tail() {
        let xl = f.x_last().unwrap().clone();
        let lo = &xl - p;
        for x in f.junctions_in(&lo, &xl) {
            if x > lo {
                let y = f.evaluate(&x) + sign.apply(q);
                core.push((&x + p, y));
            }
        }
        right = Tail::Periodic {
            p: p * rat(2),
            q: q * rat(2),
        };
    }
    if let Tail::Periodic { p, q } = f.left_tail() {
        let xf = f.x_first().unwrap().clone();
        let hi = &xf + p;
        let mut prefix = Vec::new();
        for x in f.junctions_in(&xf, &hi) {
            if x < hi {
                let y = f.evaluate(&x) - sign.apply(q);
                prefix.push((&x - p, y));
            }
        }
        prefix.extend(core);
        core = prefix;
        left = Tail::Periodic {
            p: p * rat(2),
            q: q * rat(2),
        };
    }
    PLMap::new(sign, core, left, right).expect("doubling preserves consistency")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{is_dyadic, is_pow2_magnitude};

    #[test]
    fn random_maps_are_consistent_and_canonicalize() {
        let mut r = rng(1);
        for _ in 0..60 {
            let m = random_plmap(&mut r);
            let c = m.canonicalize();
            assert_eq!(c.canonicalize(), c, "idempotence on {m}");
            // Same function.
            for k in -6..=6i64 {
                let t = rat((k, 2));
                assert_eq!(m.evaluate(&t), c.evaluate(&t), "value drift on {m}");
            }
        }
    }

    #[test]
    fn bridge_slopes_are_powers_of_two() {
        let cases = [
            ((rat(0), rat(0)), (rat(3), rat((5, 2)))),
            ((rat(0), rat(0)), (rat(1), rat(8))),
            ((rat((-1, 2)), rat(1)), (rat(4), rat((3, 2)))),
            ((rat(0), rat(0)), (rat(2), rat(2))),
        ];
        for (from, to) in cases {
            let mid = dyadic_bridge(&from, &to);
            let mut pts = vec![from.clone()];
            pts.extend(mid.iter().cloned());
            pts.push(to.clone());
            for w in pts.windows(2) {
                let slope = (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0);
                assert!(
                    is_pow2_magnitude(&slope),
                    "slope {slope} in {from:?}->{to:?}"
                );
                assert!(is_dyadic(&w[1].0) && is_dyadic(&w[1].1));
            }
        }
    }

    #[test]
    fn subgroup_samples_land_where_claimed() {
        let mut r = rng(2);
        for _ in 0..5 {
            let h = random_h1_map(&mut r);
            assert!(thompson::in_hp(&h, &rat(1)), "h1 sample: {h}");
            let k = random_k_map(&mut r);
            assert!(thompson::in_k(&k), "k sample: {k}");
            let (f, m_minus, m_plus) = random_f_map(&mut r);
            assert!(thompson::in_f(&f), "f sample: {f}");
            let (rl, rr) = thompson::rho(&f).unwrap();
            assert_eq!(rl, PLMap::translation(rat(m_minus)));
            assert_eq!(rr, PLMap::translation(rat(m_plus)));
            let fp = random_fprime_map(&mut r);
            assert!(thompson::in_f_prime(&fp), "fprime sample: {fp}");
            for p in [1i64, 2, 3] {
                let hp = random_hp_map(&mut r, p);
                assert!(thompson::in_hp(&hp, &rat(p)), "hp sample: {hp}");
            }
        }
    }

    #[test]
    fn doubling_preserves_the_function() {
        for m in [
            thompson::c(),
            thompson::x0(),
            thompson::glued_bump(),
            thompson::bump(),
        ] {
            let d = with_doubled_periods(&m);
            for k in -9..=9i64 {
                let t = rat((k, 4));
                assert_eq!(d.evaluate(&t), m.evaluate(&t));
            }
            assert_eq!(d.canonicalize(), m);
        }
    }
}
