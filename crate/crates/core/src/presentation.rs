//! Relator catalogs, word evaluation against the PL representation, and
//! the abelianization pipeline (exponent matrix, Smith normal form).
//!
//! Two catalogs are built in. `T` carries the circle-group relators
//! including `c³`; under the standard lifts to the line everything holds
//! except `c³` itself, which evaluates to translation by −1. `H1` replaces
//! `c³` by the two commutators `[c³, x0]` and `[c³, x1]`, and all of its
//! relators hold exactly.

use crate::plmap::PLMap;
use crate::snf::{smith_normal_form, IntMatrix};
use crate::thompson;
use crate::words::{Word, WordParseError};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
}

/// Evaluates a word through an assignment of names to maps. The rightmost
/// letter acts first, so `eval(w1·w2) = eval(w1) ∘ eval(w2)`.
pub fn eval_word<A>(word: &Word, assignment: A) -> Result<PLMap, EvalError>
where
    A: Fn(&str) -> Option<PLMap>,
{
    let mut acc = PLMap::identity();
    for (name, exp) in word.letters() {
        let map = assignment(name).ok_or_else(|| EvalError::UnknownGenerator(name.clone()))?;
        acc = acc.compose(&map.pow(*exp));
    }
    Ok(acc)
}

/// The standard lift assignment: the named catalog of [`thompson`].
pub fn standard_lifts(name: &str) -> Option<PLMap> {
    thompson::catalog_map(name)
}

/// A finite presentation's raw material: ordered generators and relator
/// words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorCatalog {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

const T_RELATORS: [&str; 6] = [
    "[x0 x1^-1, x0^-1 x1 x0]",
    "[x0 x1^-1, x0^-2 x1 x0^2]",
    "x1 x0^-1 c x1 c^-1",
    "(x0^-1 c x1)^2 x0^-1 c^-1",
    "x1 x0^-2 c x1^2 x0^-1 x1^-1 x0 x1^-1 c^-1 x0",
    "c^3",
];

impl RelatorCatalog {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> RelatorCatalog {
        RelatorCatalog {
            generators,
            relators,
        }
    }

    /// The T catalog: generators x0, x1, c and the six circle relators.
    pub fn t() -> RelatorCatalog {
        Self::from_strings(&T_RELATORS)
    }

    /// The H1 catalog: the T relators with `c³` replaced by `[c³, x0]` and
    /// `[c³, x1]`.
    pub fn h1() -> RelatorCatalog {
        let mut rels: Vec<&str> = T_RELATORS[..5].to_vec();
        rels.push("[c^3, x0]");
        rels.push("[c^3, x1]");
        Self::from_strings(&rels)
    }

    fn from_strings(rels: &[&str]) -> RelatorCatalog {
        let relators: Vec<Word> = rels
            .iter()
            .map(|s| s.parse().expect("built-in relator parses"))
            .collect();
        RelatorCatalog {
            generators: vec!["x0".into(), "x1".into(), "c".into()],
            relators,
        }
    }

    /// Looks up a built-in catalog by name.
    pub fn by_name(name: &str) -> Option<RelatorCatalog> {
        match name {
            "T" => Some(RelatorCatalog::t()),
            "H1" => Some(RelatorCatalog::h1()),
            _ => None,
        }
    }

    /// Parses a catalog from text: one relator per line in the word
    /// grammar, blank lines and `#` comments skipped. Generators are the
    /// names in order of first appearance.
    pub fn from_text(text: &str) -> Result<RelatorCatalog, WordParseError> {
        let mut relators = Vec::new();
        let mut generators: Vec<String> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let w: Word = line.parse()?;
            for (name, _) in w.letters() {
                if !generators.iter().any(|g| g == name) {
                    generators.push(name.clone());
                }
            }
            relators.push(w);
        }
        Ok(RelatorCatalog {
            generators,
            relators,
        })
    }
}

/// One relator's verification outcome: the evaluated map and whether it is
/// the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorCheck {
    pub relator: Word,
    pub holds: bool,
    pub value: PLMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorReport {
    pub checks: Vec<RelatorCheck>,
}

impl RelatorReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Evaluates every relator of the catalog under the assignment.
pub fn verify_relators<A>(
    catalog: &RelatorCatalog,
    assignment: A,
) -> Result<RelatorReport, EvalError>
where
    A: Fn(&str) -> Option<PLMap>,
{
    let mut checks = Vec::with_capacity(catalog.relators.len());
    for relator in &catalog.relators {
        let value = eval_word(relator, &assignment)?;
        let holds = value.is_identity();
        checks.push(RelatorCheck {
            relator: relator.clone(),
            holds,
            value,
        });
    }
    Ok(RelatorReport { checks })
}

/// Exponent-sum matrix: one row per relator, one column per generator.
/// Commutator relators produce zero rows.
pub fn exponent_matrix(catalog: &RelatorCatalog) -> IntMatrix {
    IntMatrix::from_rows(
        catalog
            .relators
            .iter()
            .map(|r| {
                catalog
                    .generators
                    .iter()
                    .map(|g| r.exponent_sum(g))
                    .collect::<Vec<BigInt>>()
            })
            .collect(),
    )
}

/// A finitely generated abelian group: free rank plus torsion invariants
/// in the divisibility order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// The abelianization of the presented group, via Smith normal form of the
/// exponent matrix.
pub fn abelianization(catalog: &RelatorCatalog) -> AbelianGroup {
    let m = exponent_matrix(catalog);
    let snf = smith_normal_form(&m);
    let torsion = snf
        .invariants
        .iter()
        .filter(|d| **d > BigInt::one())
        .cloned()
        .collect();
    AbelianGroup {
        free_rank: catalog.generators.len() - snf.invariants.len(),
        torsion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn eval_examples() {
        let c3: Word = "c^3".parse().unwrap();
        assert_eq!(
            eval_word(&c3, standard_lifts).unwrap(),
            PLMap::translation(rat(-1))
        );
        assert_eq!(
            eval_word(&Word::identity(), standard_lifts).unwrap(),
            PLMap::identity()
        );
        let central: Word = "[c^3, x0]".parse().unwrap();
        assert!(eval_word(&central, standard_lifts).unwrap().is_identity());
        let unknown: Word = "y0".parse().unwrap();
        assert_eq!(
            eval_word(&unknown, standard_lifts),
            Err(EvalError::UnknownGenerator("y0".into()))
        );
    }

    #[test]
    fn eval_is_a_homomorphism() {
        let w1: Word = "x0 x1^-1 c".parse().unwrap();
        let w2: Word = "c^-2 x1 x0".parse().unwrap();
        let lhs = eval_word(&w1.concat(&w2), standard_lifts).unwrap();
        let rhs = eval_word(&w1, standard_lifts)
            .unwrap()
            .compose(&eval_word(&w2, standard_lifts).unwrap());
        assert_eq!(lhs, rhs);
        // Evaluation is blind to free reduction.
        let padded: Word = "x0 c c^-1 x1^-1 x1 x1^-1 c".parse().unwrap();
        assert_eq!(
            eval_word(&padded, standard_lifts).unwrap(),
            eval_word(&padded.reduce(), standard_lifts).unwrap()
        );
    }

    #[test]
    fn h1_relators_all_hold() {
        let report = verify_relators(&RelatorCatalog::h1(), standard_lifts).unwrap();
        assert_eq!(report.checks.len(), 7);
        for check in &report.checks {
            assert!(check.holds, "relator failed: {}", check.relator);
        }
        assert!(report.all_hold());
    }

    #[test]
    fn t_relators_hold_except_c_cubed() {
        let report = verify_relators(&RelatorCatalog::t(), standard_lifts).unwrap();
        assert_eq!(report.checks.len(), 6);
        for check in &report.checks[..5] {
            assert!(check.holds, "relator failed: {}", check.relator);
        }
        let last = &report.checks[5];
        assert!(!last.holds);
        assert_eq!(last.value, PLMap::translation(rat(-1)));
        assert!(!report.all_hold());
    }

    #[test]
    fn trivial_assignment_satisfies_everything() {
        let id_only = |_: &str| Some(PLMap::identity());
        let report = verify_relators(&RelatorCatalog::h1(), id_only).unwrap();
        assert!(report.all_hold());
    }

    #[test]
    fn exponent_matrices_match_hand_computation() {
        let h1 = exponent_matrix(&RelatorCatalog::h1());
        let expected = IntMatrix::from_rows(vec![
            vec![0, 0, 0],
            vec![0, 0, 0],
            vec![-1, 2, 0],
            vec![-3, 2, 1],
            vec![-1, 1, 0],
            vec![0, 0, 0],
            vec![0, 0, 0],
        ]);
        assert_eq!(h1, expected);
        let t = exponent_matrix(&RelatorCatalog::t());
        let expected_t = IntMatrix::from_rows(vec![
            vec![0, 0, 0],
            vec![0, 0, 0],
            vec![-1, 2, 0],
            vec![-3, 2, 1],
            vec![-1, 1, 0],
            vec![0, 0, 3],
        ]);
        assert_eq!(t, expected_t);
    }

    #[test]
    fn abelianizations_are_trivial() {
        let h1 = abelianization(&RelatorCatalog::h1());
        assert!(h1.is_trivial());
        assert_eq!(h1.to_string(), "trivial");
        let t = abelianization(&RelatorCatalog::t());
        assert!(t.is_trivial());
    }

    #[test]
    fn abelianization_of_small_presentations() {
        let z3 = RelatorCatalog::from_text("a^3").unwrap();
        let g = abelianization(&z3);
        assert_eq!(g.free_rank, 0);
        assert_eq!(g.torsion, vec![3.into()]);
        assert_eq!(g.to_string(), "Z/3");

        let free2 = RelatorCatalog::new(vec!["a".into(), "b".into()], vec![]);
        assert_eq!(abelianization(&free2).to_string(), "Z^2");

        let commuting = RelatorCatalog::from_text("[a, b]").unwrap();
        assert_eq!(abelianization(&commuting).to_string(), "Z^2");

        let mixed = RelatorCatalog::from_text("a^2\n[a, b]").unwrap();
        assert_eq!(abelianization(&mixed).to_string(), "Z x Z/2");
    }

    #[test]
    fn catalog_text_parsing_skips_comments() {
        let text = "# the T catalog, by hand\n\nc^3\n  [x0 x1^-1, x0^-1 x1 x0]  \n";
        let cat = RelatorCatalog::from_text(text).unwrap();
        assert_eq!(cat.relators.len(), 2);
        assert_eq!(cat.generators, vec!["c", "x0", "x1"]);
        assert!(RelatorCatalog::from_text("a^^2").is_err());
        assert_eq!(RelatorCatalog::by_name("T").unwrap().relators.len(), 6);
        assert_eq!(RelatorCatalog::by_name("H1").unwrap().relators.len(), 7);
        assert!(RelatorCatalog::by_name("X").is_none());
    }
}
