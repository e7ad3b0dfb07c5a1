//! The dyadic groups living inside the piecewise-linear homeomorphisms:
//! Thompson's group F in its slope-power-of-two form on the line, the
//! commensurator-style groups built from eventually periodic maps, and the
//! membership predicates and invariants that separate them.
//!
//! Group conventions:
//!
//! * `ComF`: breakpoints and values dyadic, slopes powers of two up to sign,
//!   tail data dyadic. `ComPlusF` adds orientation preservation.
//! * `K`: `ComPlusF` maps whose germs at both ends translate, meaning each
//!   tail is periodic with `q = p` or affine with slope exactly 1.
//! * `F`: dyadic maps that are integer translations near both ends;
//!   `Fprime` additionally fixes both ends pointwise.
//! * `H_p`: dyadic orientation-preserving maps commuting with translation
//!   by `p`; `H` is their union over all positive periods.
//! * `A_p`: the cyclic group of translations by integer multiples of `p`.

use crate::plmap::{PLMap, Sign, Tail};
use crate::rational::{is_dyadic, is_integer, is_pow2_magnitude, parse_rational, rat, Rational};
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MembershipError {
    #[error("map is not in K")]
    NotInK,
    #[error("map is not in Com+(F)")]
    NotInComPlusF,
    #[error("map is not in Com(F)")]
    NotInComF,
    #[error("map is not in H_p")]
    NotInHp,
}

fn consistent(sign: Sign, core: Vec<(Rational, Rational)>, left: Tail, right: Tail) -> PLMap {
    PLMap::new(sign, core, left, right).expect("catalog data is consistent")
}

/// The 1-periodic extension of the standard generator `x0` of F restricted
/// to `[0, 1]`.
pub fn x0() -> PLMap {
    consistent(
        Sign::Plus,
        vec![
            (rat(0), rat(0)),
            (rat((1, 2)), rat((1, 4))),
            (rat((3, 4)), rat((1, 2))),
            (rat(1), rat(1)),
        ],
        Tail::periodic(1, 1),
        Tail::periodic(1, 1),
    )
}

/// The 1-periodic extension of the generator `x1`, supported in `[1/2, 1]`
/// within each period.
pub fn x1() -> PLMap {
    consistent(
        Sign::Plus,
        vec![
            (rat(0), rat(0)),
            (rat((1, 2)), rat((1, 2))),
            (rat((3, 4)), rat((5, 8))),
            (rat((7, 8)), rat((3, 4))),
            (rat(1), rat(1)),
        ],
        Tail::periodic(1, 1),
        Tail::periodic(1, 1),
    )
}

/// The order-three (mod translations) twisting map: `c^3` is translation
/// by one.
pub fn c() -> PLMap {
    consistent(
        Sign::Plus,
        vec![
            (rat(0), rat((-1, 4))),
            (rat((1, 2)), rat(0)),
            (rat((3, 4)), rat((1, 2))),
            (rat(1), rat((3, 4))),
        ],
        Tail::periodic(1, 1),
        Tail::periodic(1, 1),
    )
}

/// A compactly supported F element: identity outside `[0, 1]`.
pub fn bump() -> PLMap {
    consistent(
        Sign::Plus,
        vec![
            (rat(0), rat(0)),
            (rat((1, 4)), rat((1, 2))),
            (rat((1, 2)), rat((3, 4))),
            (rat(1), rat(1)),
        ],
        Tail::affine(1, 0),
        Tail::affine(1, 0),
    )
}

/// The bump glued to a periodic right end: identity to the left of 0,
/// 1-periodic to the right of 1. In K but with distinct germ types.
pub fn glued_bump() -> PLMap {
    consistent(
        Sign::Plus,
        vec![
            (rat(0), rat(0)),
            (rat((1, 4)), rat((1, 2))),
            (rat((1, 2)), rat((3, 4))),
            (rat(1), rat(1)),
        ],
        Tail::affine(1, 0),
        Tail::periodic(1, 1),
    )
}

/// Resolves a generator name: the named catalog (`x0`, `x1`, `c`, `bump`,
/// `glued_bump`, `id`/`identity`) plus the families `tau:R` (translation by
/// the rational `R`) and `alpha:R` (scaling by the nonzero rational `R`).
pub fn catalog_map(name: &str) -> Option<PLMap> {
    if let Some(rest) = name.strip_prefix("tau:") {
        let r = parse_rational(rest).ok()?;
        return Some(PLMap::translation(r));
    }
    if let Some(rest) = name.strip_prefix("alpha:") {
        let r = parse_rational(rest).ok()?;
        return PLMap::affine(r, rat(0)).ok();
    }
    match name {
        "x0" => Some(x0()),
        "x1" => Some(x1()),
        "c" => Some(c()),
        "bump" => Some(bump()),
        "glued_bump" => Some(glued_bump()),
        "id" | "identity" => Some(PLMap::identity()),
        _ => None,
    }
}

fn tail_is_dyadic(tail: &Tail) -> bool {
    match tail {
        Tail::Affine { a, b } => is_pow2_magnitude(a) && is_dyadic(b),
        Tail::Periodic { p, q } => is_dyadic(p) && is_dyadic(q),
    }
}

/// True iff the function is dyadic: canonical breakpoints and values are
/// dyadic rationals, every slope is a power of two up to sign, and the tail
/// data is dyadic.
pub fn is_dyadic_map(f: &PLMap) -> bool {
    let c = f.canonicalize();
    let core = c.core();
    for (x, y) in core {
        if !is_dyadic(x) || !is_dyadic(y) {
            return false;
        }
    }
    for w in core.windows(2) {
        let slope = (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0);
        if !is_pow2_magnitude(&slope) {
            return false;
        }
    }
    tail_is_dyadic(c.left_tail()) && tail_is_dyadic(c.right_tail())
}

/// Membership in Com(F). Dyadic periodic tails always rescale to integer
/// period pairs, so this coincides with `is_dyadic_map`.
pub fn in_com_f(f: &PLMap) -> bool {
    is_dyadic_map(f)
}

/// Membership in the orientation-preserving part of Com(F).
pub fn in_com_plus_f(f: &PLMap) -> bool {
    f.sign() == Sign::Plus && is_dyadic_map(f)
}

fn tail_translates(tail: &Tail) -> bool {
    match tail {
        Tail::Affine { a, .. } => *a == rat(1),
        Tail::Periodic { p, q } => p == q,
    }
}

/// Membership in K: Com+(F) maps acting as translations at both ends in the
/// eventual sense, i.e. each germ is periodic with `q = p` or affine with
/// slope one.
pub fn in_k(f: &PLMap) -> bool {
    if !in_com_plus_f(f) {
        return false;
    }
    let c = f.canonicalize();
    tail_translates(c.left_tail()) && tail_translates(c.right_tail())
}

fn integer_translation_tail(tail: &Tail) -> bool {
    matches!(tail, Tail::Affine { a, b } if *a == rat(1) && is_integer(b))
}

/// Membership in Thompson's group F: dyadic, orientation preserving, and an
/// integer translation near each end.
pub fn in_f(f: &PLMap) -> bool {
    if f.sign() != Sign::Plus || !is_dyadic_map(f) {
        return false;
    }
    let c = f.canonicalize();
    integer_translation_tail(c.left_tail()) && integer_translation_tail(c.right_tail())
}

/// Membership in the commutator subgroup of F: F elements that are the
/// identity near both ends.
pub fn in_f_prime(f: &PLMap) -> bool {
    if !in_f(f) {
        return false;
    }
    let c = f.canonicalize();
    c.left_tail() == &Tail::affine(1, 0) && c.right_tail() == &Tail::affine(1, 0)
}

/// Membership in `H_p`, the centralizer of translation by `p` inside
/// Com+(F). `p` must be positive.
pub fn in_hp(f: &PLMap, p: &Rational) -> bool {
    assert!(p.is_positive(), "H_p requires a positive period");
    if !in_com_plus_f(f) {
        return false;
    }
    let tau = PLMap::translation(p.clone());
    f.compose(&tau).equals(&tau.compose(f))
}

/// Membership in `H`, the union of all `H_p`: dyadic orientation-preserving
/// maps commuting with some positive translation. These are exactly the
/// translations together with the globally periodic maps whose germ
/// translates (`q = p`).
pub fn in_h(f: &PLMap) -> bool {
    if !in_com_plus_f(f) {
        return false;
    }
    let c = f.canonicalize();
    if c.core().is_empty() {
        return matches!(c.right_tail(), Tail::Affine { a, .. } if *a == rat(1));
    }
    match (c.left_tail(), c.right_tail()) {
        (Tail::Periodic { p, q }, Tail::Periodic { p: p2, q: q2 }) => {
            p == q && p == p2 && q == q2 && &(c.x_last().unwrap() - c.x_first().unwrap()) == p
        }
        _ => false,
    }
}

/// Membership in `A_p`, the translations by integer multiples of `p`.
/// `p` must be positive.
pub fn in_ap(f: &PLMap, p: &Rational) -> bool {
    assert!(p.is_positive(), "A_p requires a positive period");
    let c = f.canonicalize();
    if !c.core().is_empty() {
        return false;
    }
    match c.right_tail() {
        Tail::Affine { a, b } => *a == rat(1) && is_integer(&(b / p)),
        Tail::Periodic { .. } => false,
    }
}

/// True iff `f` and `g` agree modulo `A_p`, i.e. `f∘g⁻¹` is a translation
/// by an integer multiple of `p`.
pub fn equal_mod_ap(f: &PLMap, g: &PLMap, p: &Rational) -> bool {
    in_ap(&f.compose(&g.invert()), p)
}

/// Conjugation `alpha ∘ f ∘ alpha⁻¹`.
pub fn conjugate(alpha: &PLMap, f: &PLMap) -> PLMap {
    alpha.compose(f).compose(&alpha.invert())
}

fn germ_periodization(f: &PLMap, right: bool) -> PLMap {
    let tail = if right { f.right_tail() } else { f.left_tail() };
    match tail {
        Tail::Affine { b, .. } => PLMap::translation(b.clone()),
        Tail::Periodic { p, q } => {
            let w = if right { f.x_last() } else { f.x_first() }
                .unwrap()
                .clone();
            let (lo, hi) = if right {
                (&w - p, w)
            } else {
                (w.clone(), &w + p)
            };
            let mut xs = f.junctions_in(&lo, &hi);
            xs.push(lo.clone());
            xs.push(hi.clone());
            xs.sort();
            xs.dedup();
            let core: Vec<_> = xs
                .into_iter()
                .map(|x| {
                    let y = f.evaluate(&x);
                    (x, y)
                })
                .collect();
            let tail = Tail::Periodic {
                p: p.clone(),
                q: q.clone(),
            };
            PLMap::new(f.sign(), core, tail.clone(), tail)
                .expect("a fundamental domain periodizes consistently")
                .canonicalize()
        }
    }
}

/// The germ map on K: each end of a K element is eventually a translation
/// or a periodic map with translating germ, and `rho` records the pair of
/// globally defined maps with those germs (left end first).
pub fn rho(f: &PLMap) -> Result<(PLMap, PLMap), MembershipError> {
    if !in_k(f) {
        return Err(MembershipError::NotInK);
    }
    let c = f.canonicalize();
    Ok((germ_periodization(&c, false), germ_periodization(&c, true)))
}

/// Membership in the subgroup of K whose germ pair lands in `H_1 × H_1`.
pub fn is_in_aut_plus_f(f: &PLMap) -> bool {
    match rho(f) {
        Ok((l, r)) => {
            let one = rat(1);
            in_hp(&l, &one) && in_hp(&r, &one)
        }
        Err(_) => false,
    }
}

/// The tail scaling ratios `(q/p)` at minus and plus infinity, as positive
/// rationals; affine tails contribute their absolute slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeQuotient {
    pub neg: Rational,
    pub pos: Rational,
}

/// The image of `f` in the scaling quotient: how strongly each end
/// stretches, forgetting everything compact.
pub fn slope_quotient(f: &PLMap) -> SlopeQuotient {
    let c = f.canonicalize();
    let of = |t: &Tail| match t {
        Tail::Affine { a, .. } => a.abs(),
        Tail::Periodic { p, q } => q / p,
    };
    SlopeQuotient {
        neg: of(c.left_tail()),
        pos: of(c.right_tail()),
    }
}

/// The orientation character of the quotient.
pub fn orientation_sign(f: &PLMap) -> Sign {
    f.sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_resolves_names() {
        assert_eq!(catalog_map("x0"), Some(x0()));
        assert_eq!(catalog_map("identity"), Some(PLMap::identity()));
        assert_eq!(catalog_map("id"), Some(PLMap::identity()));
        assert_eq!(
            catalog_map("tau:-3/2"),
            Some(PLMap::translation(rat((-3, 2))))
        );
        assert_eq!(
            catalog_map("alpha:4"),
            Some(PLMap::affine(rat(4), rat(0)).unwrap())
        );
        assert_eq!(catalog_map("alpha:0"), None);
        assert_eq!(catalog_map("nope"), None);
        assert_eq!(catalog_map("tau:1/0"), None);
    }

    #[test]
    fn dyadic_membership() {
        assert!(is_dyadic_map(&x0()));
        assert!(is_dyadic_map(&x1()));
        assert!(is_dyadic_map(&c()));
        assert!(is_dyadic_map(&bump()));
        assert!(is_dyadic_map(&glued_bump()));
        assert!(is_dyadic_map(&PLMap::translation(rat((5, 8)))));
        assert!(!is_dyadic_map(&PLMap::translation(rat((1, 3)))));
        assert!(!is_dyadic_map(&PLMap::affine(rat(3), rat(0)).unwrap()));
        // Dyadic but orientation reversing: in Com(F), not Com+(F).
        let r = PLMap::affine(rat(-2), rat(1)).unwrap();
        assert!(in_com_f(&r));
        assert!(!in_com_plus_f(&r));
    }

    #[test]
    fn k_and_f_memberships() {
        assert!(in_k(&x0()));
        assert!(in_k(&glued_bump()));
        assert!(in_k(&bump()));
        assert!(in_k(&PLMap::translation(rat(7))));
        assert!(!in_k(&PLMap::affine(rat(2), rat(0)).unwrap()));
        assert!(in_f(&bump()));
        assert!(in_f_prime(&bump()));
        assert!(!in_f(&x0()));
        assert!(!in_f(&glued_bump()));
        assert!(in_f(&PLMap::translation(rat(3))));
        assert!(!in_f_prime(&PLMap::translation(rat(3))));
        assert!(!in_f(&PLMap::translation(rat((1, 2)))));
    }

    #[test]
    fn hp_membership_tracks_commutation() {
        let one = rat(1);
        assert!(in_hp(&x0(), &one));
        assert!(in_hp(&x1(), &one));
        assert!(in_hp(&c(), &one));
        assert!(in_hp(&x0(), &rat(2)));
        assert!(!in_hp(&x0(), &rat((1, 2))));
        assert!(!in_hp(&bump(), &one));
        assert!(!in_hp(&glued_bump(), &one));
        // Translations commute with everything.
        assert!(in_hp(&PLMap::translation(rat((3, 4))), &one));
        // A non-dyadic translation is outside every H_p.
        assert!(!in_hp(&PLMap::translation(rat((1, 3))), &one));
    }

    #[test]
    fn h_is_the_union_of_the_hp() {
        assert!(in_h(&x0()));
        assert!(in_h(&c()));
        assert!(in_h(&PLMap::translation(rat((3, 4)))));
        assert!(in_h(&PLMap::identity()));
        assert!(!in_h(&bump()));
        assert!(!in_h(&glued_bump()));
        assert!(!in_h(&PLMap::affine(rat(2), rat(0)).unwrap()));
        // Period-3 periodic map: in H_3 hence in H.
        let a3 = PLMap::affine(rat(3), rat(0)).unwrap();
        let c3 = conjugate(&a3, &c());
        assert!(in_hp(&c3, &rat(3)));
        assert!(!in_hp(&c3, &rat(1)));
        assert!(in_h(&c3));
    }

    #[test]
    fn ap_is_the_translation_lattice() {
        let t3 = PLMap::translation(rat(3));
        assert!(in_ap(&t3, &rat(3)));
        assert!(in_ap(&t3, &rat(1)));
        assert!(!in_ap(&t3, &rat(2)));
        assert!(in_ap(&PLMap::identity(), &rat(5)));
        assert!(!in_ap(&x0(), &rat(1)));
        assert!(equal_mod_ap(
            &PLMap::translation(rat(3)),
            &PLMap::translation(rat(1)),
            &rat(2)
        ));
        assert!(!equal_mod_ap(
            &PLMap::translation(rat(3)),
            &PLMap::translation(rat(1)),
            &rat(4)
        ));
    }

    #[test]
    fn rho_reads_off_the_germs() {
        let (l, r) = rho(&glued_bump()).unwrap();
        assert_eq!(l, PLMap::identity());
        // The right germ of glued_bump is the periodized bump.
        let (pl, pr) = rho(&r).unwrap();
        assert_eq!(pl, r, "a periodic map is its own germ");
        assert_eq!(pr, r);
        assert_eq!(r.right_tail(), &Tail::periodic(1, 1));
        // They agree on the gluing window [0, 1] only.
        for k in 0..=4i64 {
            let t = rat((k, 4));
            assert_eq!(r.evaluate(&t), bump().evaluate(&t));
        }
        assert_ne!(r.evaluate(&rat((5, 4))), bump().evaluate(&rat((5, 4))));
        let (xl, xr) = rho(&x0()).unwrap();
        assert_eq!(xl, x0());
        assert_eq!(xr, x0());
        let t = PLMap::translation(rat(5));
        assert_eq!(rho(&t).unwrap(), (t.clone(), t));
        assert_eq!(
            rho(&PLMap::affine(rat(2), rat(0)).unwrap()),
            Err(MembershipError::NotInK)
        );
    }

    #[test]
    fn rho_is_multiplicative_on_k() {
        let a = glued_bump();
        let b = x0();
        let ab = a.compose(&b);
        let (al, ar) = rho(&a).unwrap();
        let (bl, br) = rho(&b).unwrap();
        let (abl, abr) = rho(&ab).unwrap();
        assert_eq!(abl, al.compose(&bl));
        assert_eq!(abr, ar.compose(&br));
    }

    #[test]
    fn aut_plus_f_requires_unit_period_germs() {
        assert!(is_in_aut_plus_f(&x0()));
        assert!(is_in_aut_plus_f(&glued_bump()));
        assert!(is_in_aut_plus_f(&bump()));
        assert!(is_in_aut_plus_f(&PLMap::translation(rat(2))));
        // Half-integer translations still commute with tau:1 scaled germs.
        assert!(is_in_aut_plus_f(&PLMap::translation(rat((1, 2)))));
        // A period-3 germ does not commute with translation by one.
        let a3 = PLMap::affine(rat(3), rat(0)).unwrap();
        let c3 = conjugate(&a3, &c());
        assert!(in_k(&c3));
        assert!(!is_in_aut_plus_f(&c3));
        assert!(!is_in_aut_plus_f(&PLMap::affine(rat(2), rat(0)).unwrap()));
    }

    #[test]
    fn quotient_invariants() {
        let q = slope_quotient(&PLMap::affine(rat(2), rat(0)).unwrap());
        assert_eq!(q.neg, rat(2));
        assert_eq!(q.pos, rat(2));
        let q = slope_quotient(&x0());
        assert_eq!(q.neg, rat(1));
        assert_eq!(q.pos, rat(1));
        let half = PLMap::new(
            Sign::Plus,
            vec![(rat(0), rat(0)), (rat(1), rat(2))],
            Tail::periodic(1, 2),
            Tail::periodic(1, 2),
        )
        .unwrap();
        let q = slope_quotient(&half);
        assert_eq!(q.neg, rat(2));
        assert_eq!(q.pos, rat(2));
        let neg = PLMap::affine(rat(-4), rat(1)).unwrap();
        assert_eq!(orientation_sign(&neg), Sign::Minus);
        assert_eq!(slope_quotient(&neg).pos, rat(4));
        // The quotient is multiplicative.
        let f = glued_bump();
        let g = half;
        let fg = f.compose(&g);
        let (qf, qg, qfg) = (slope_quotient(&f), slope_quotient(&g), slope_quotient(&fg));
        assert_eq!(qfg.pos, &qf.pos * &qg.pos);
        assert_eq!(qfg.neg, &qf.neg * &qg.neg);
    }

    #[test]
    fn conjugation_rescales_translations() {
        let a2 = PLMap::affine(rat(2), rat(0)).unwrap();
        assert_eq!(
            conjugate(&a2, &PLMap::translation(rat(1))),
            PLMap::translation(rat(2))
        );
        let ai = a2.invert();
        assert_eq!(ai, PLMap::affine(rat((1, 2)), rat(0)).unwrap());
        assert_eq!(
            conjugate(&ai, &PLMap::translation(rat(1))),
            PLMap::translation(rat((1, 2)))
        );
    }
}
