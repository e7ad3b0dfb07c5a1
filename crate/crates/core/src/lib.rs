//! Exact computation in the group of piecewise-linear homeomorphisms of the
//! real line whose germs at ±∞ are periodically affine.
//!
//! Every map is stored as a finite list of core breakpoints together with two
//! tail descriptors, one per end. A tail is either a single infinite affine
//! piece or a periodic law `f(t + p) = f(t) ± q`, so elements with infinitely
//! many breakpoints (globally periodic maps, eventually periodic maps) are
//! still finitely represented. All coordinates, slopes and periods are
//! arbitrary-precision rationals; there is no floating point anywhere in the
//! core logic and equality of maps is decided exactly via canonical forms.
//!
//! On top of the map engine sit:
//!
//! * [`thompson`] — a catalog of the standard 1-periodic lifts `x0`, `x1`,
//!   `c`, translation and scaling maps, and membership predicates for the
//!   groups F, F′, K, the eventually-periodic commensurator groups, the
//!   centralizers H_p of integer translations and their central subgroups
//!   A_p, together with the germ map ρ and the slope-quotient and
//!   orientation homomorphisms.
//! * [`words`] — free-group words over named generators, free reduction,
//!   a small surface grammar (`x1 x0^-1 c x1 c^-1`, `[a,b]`, parentheses),
//!   and evaluation of words into concrete maps.
//! * [`presentation`] — relator catalogs for the circle group presentation
//!   and its 1-periodic lift, relator verification, exponent matrices, and
//!   abelianization via Smith normal form.
//! * [`snf`] — exact Smith normal form over arbitrary-precision integers
//!   with verified unimodular transforms.

pub mod plmap;
pub mod presentation;
pub mod rational;
pub mod snf;
pub mod testkit;
pub mod thompson;
pub mod words;

pub use plmap::{MapError, PLMap, Sign, Tail};
pub use rational::Rational;
pub use words::Word;
