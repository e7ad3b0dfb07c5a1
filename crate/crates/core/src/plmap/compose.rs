//! Composition, inversion, and integer powers.
//!
//! Tails compose by a uniform rule on each side of the composite. With
//! `h = f∘g`, the composite right germ is fed by `g`'s right germ and by
//! whichever germ of `f` lives where `g` sends large arguments (`f`'s right
//! for increasing `g`, left for decreasing `g`), and symmetrically on the
//! left:
//!
//! * affine ∘ affine is affine;
//! * periodic `(p_f, q_f)` ∘ affine slope `a` is periodic `(p_f/|a|, q_f)`;
//! * affine slope `a` ∘ periodic `(p_g, q_g)` is periodic `(p_g, |a| q_g)`;
//! * periodic ∘ periodic is periodic `(k p_g, l q_f)` where `l/k` is
//!   `q_g / p_f` in lowest terms.

use super::{PLMap, Sign, Tail};
use crate::rational::{rat, Rational};
use num_traits::Signed;

fn combine_tails(f_tail: &Tail, g_tail: &Tail) -> Tail {
    match (f_tail, g_tail) {
        (Tail::Affine { a: af, b: bf }, Tail::Affine { a: ag, b: bg }) => Tail::Affine {
            a: af * ag,
            b: af * bg + bf,
        },
        (Tail::Periodic { p: pf, q: qf }, Tail::Affine { a: ag, .. }) => Tail::Periodic {
            p: pf / ag.abs(),
            q: qf.clone(),
        },
        (Tail::Affine { a: af, .. }, Tail::Periodic { p: pg, q: qg }) => Tail::Periodic {
            p: pg.clone(),
            q: af.abs() * qg,
        },
        (Tail::Periodic { p: pf, q: qf }, Tail::Periodic { p: pg, q: qg }) => {
            let ratio = qg / pf;
            let l = Rational::from_integer(ratio.numer().clone());
            let k = Rational::from_integer(ratio.denom().clone());
            Tail::Periodic {
                p: &k * pg,
                q: &l * qf,
            }
        }
    }
}

impl PLMap {
    /// The composite `t -> self(g(t))`, in canonical form.
    pub fn compose(&self, g: &PLMap) -> PLMap {
        let f = self;
        let sign = f.sign.product(g.sign);
        if f.core.is_empty() && g.core.is_empty() {
            let (Tail::Affine { a: af, b: bf }, Tail::Affine { a: ag, b: bg }) =
                (&f.right, &g.right)
            else {
                unreachable!("empty cores imply affine tails");
            };
            return PLMap::affine(af * ag, af * bg + bf)
                .expect("product of nonzero slopes is nonzero");
        }
        let (f_for_right, f_for_left) = match g.sign {
            Sign::Plus => (&f.right, &f.left),
            Sign::Minus => (&f.left, &f.right),
        };
        let right = combine_tails(f_for_right, &g.right);
        let left = combine_tails(f_for_left, &g.left);
        let g_inv = g.invert_raw();
        // Outside [lo0, hi0] both component maps are in pure tail regime.
        let mut lo_cands: Vec<Rational> = Vec::new();
        let mut hi_cands: Vec<Rational> = Vec::new();
        if let (Some(xf), Some(xl)) = (g.x_first(), g.x_last()) {
            lo_cands.push(xf.clone());
            hi_cands.push(xl.clone());
        }
        if let (Some(xf), Some(xl)) = (f.x_first(), f.x_last()) {
            let (for_hi, for_lo) = match g.sign {
                Sign::Plus => (xl, xf),
                Sign::Minus => (xf, xl),
            };
            hi_cands.push(g_inv.evaluate(for_hi));
            lo_cands.push(g_inv.evaluate(for_lo));
        }
        let lo0 = lo_cands.iter().min().unwrap().clone();
        let hi0 = hi_cands.iter().max().unwrap().clone();
        // Extend by one composite period per periodic side so the raw core
        // carries a full fundamental domain, then let canonicalize trim.
        let hi1 = match &right {
            Tail::Periodic { p, .. } => &hi0 + p,
            Tail::Affine { .. } => hi0.clone(),
        };
        let lo1 = match &left {
            Tail::Periodic { p, .. } => &lo0 - p,
            Tail::Affine { .. } => lo0.clone(),
        };
        let window_lo = lo1.min(hi0);
        let window_hi = hi1.max(lo0);
        let mut xs = g.junctions_in(&window_lo, &window_hi);
        let (u_lo, u_hi) = {
            let a = g.evaluate(&window_lo);
            let b = g.evaluate(&window_hi);
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        };
        for u in f.junctions_in(&u_lo, &u_hi) {
            xs.push(g_inv.evaluate(&u));
        }
        xs.push(window_lo.clone());
        xs.push(window_hi.clone());
        xs.sort();
        xs.dedup();
        xs.retain(|x| *x >= window_lo && *x <= window_hi);
        let core: Vec<_> = xs
            .into_iter()
            .map(|x| {
                let y = f.evaluate(&g.evaluate(&x));
                (x, y)
            })
            .collect();
        PLMap::new(sign, core, left, right)
            .expect("composite of consistent maps is consistent")
            .canonicalize()
    }

    /// The inverse map, in canonical form.
    pub fn invert(&self) -> PLMap {
        self.invert_raw().canonicalize()
    }

    /// Inverse by reflecting the graph; structurally exact but the anchor
    /// convention may be broken, hence `pub(crate)`.
    pub(crate) fn invert_raw(&self) -> PLMap {
        let swap = |t: &Tail| match t {
            Tail::Affine { a, b } => {
                let ai = rat(1) / a;
                Tail::Affine {
                    b: -(b * &ai),
                    a: ai,
                }
            }
            Tail::Periodic { p, q } => Tail::Periodic {
                p: q.clone(),
                q: p.clone(),
            },
        };
        let mut core: Vec<_> = self
            .core
            .iter()
            .map(|(x, y)| (y.clone(), x.clone()))
            .collect();
        let (left, right) = match self.sign {
            Sign::Plus => (swap(&self.left), swap(&self.right)),
            Sign::Minus => {
                core.reverse();
                (swap(&self.right), swap(&self.left))
            }
        };
        PLMap::new(self.sign, core, left, right).expect("inverse of a consistent map is consistent")
    }

    /// `n`-fold composition power; `pow(0)` is the identity and negative
    /// exponents invert first.
    pub fn pow(&self, n: i64) -> PLMap {
        let mut result = PLMap::identity();
        let mut base = if n >= 0 { self.clone() } else { self.invert() };
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base);
            }
        }
        result
    }
}
