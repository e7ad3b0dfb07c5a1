//! Free-group words over named generators and the surface grammar for
//! writing them down.
//!
//! Grammar: generators are identifiers (optionally carrying a `:rational`
//! parameter, as in `tau:3/2`); `^` binds an integer exponent;
//! juxtaposition or `*` concatenates; `[a, b]` is the commutator
//! `a·b·a⁻¹·b⁻¹`; parentheses group; whitespace is insignificant.

use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A word: a sequence of (generator name, nonzero exponent) letters.
/// Words are kept as written; [`Word::reduce`] merges and cancels.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    letters: Vec<(String, i64)>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn generator(name: impl Into<String>) -> Word {
        Word::letter(name, 1)
    }

    pub fn letter(name: impl Into<String>, exp: i64) -> Word {
        if exp == 0 {
            return Word::identity();
        }
        Word {
            letters: vec![(name.into(), exp)],
        }
    }

    /// Builds a word from raw letters, dropping zero exponents but keeping
    /// adjacent repeats as written.
    pub fn from_letters(letters: impl IntoIterator<Item = (String, i64)>) -> Word {
        Word {
            letters: letters.into_iter().filter(|(_, e)| *e != 0).collect(),
        }
    }

    pub fn letters(&self) -> &[(String, i64)] {
        &self.letters
    }

    /// Total letter count with multiplicity, `Σ|eᵢ|`.
    pub fn letter_count(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(n, e)| (n.clone(), -e))
                .collect(),
        }
    }

    /// Free reduction: merge adjacent letters with equal names and drop
    /// cancellations. Confluent, so the result is presentation-independent.
    pub fn reduce(&self) -> Word {
        let mut stack: Vec<(String, i64)> = Vec::new();
        for (name, exp) in &self.letters {
            match stack.last_mut() {
                Some((top, e)) if top == name => {
                    *e += exp;
                    if *e == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((name.clone(), *exp)),
            }
        }
        Word { letters: stack }
    }

    /// Reduced `n`-th power; negative `n` inverts first.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out.reduce()
    }

    /// The reduced commutator `a·b·a⁻¹·b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b)
            .concat(&a.inverse())
            .concat(&b.inverse())
            .reduce()
    }

    /// Exponent sum of one generator across the word.
    pub fn exponent_sum(&self, name: &str) -> BigInt {
        self.letters
            .iter()
            .filter(|(n, _)| n == name)
            .map(|(_, e)| BigInt::from(*e))
            .sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, exp)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected {expected} at byte {pos}, found {found}")]
pub struct WordParseError {
    pub pos: usize,
    pub expected: String,
    pub found: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn error(&self, expected: &str) -> WordParseError {
        let found = match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        WordParseError {
            pos: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, c: char) -> Result<(), WordParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("{c:?}")))
        }
    }

    fn word(&mut self) -> Result<Word, WordParseError> {
        let mut w = Word::identity();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') | Some(']') | Some(',') => return Ok(w),
                Some('*') => {
                    self.bump();
                    self.skip_ws();
                    let t = self.term()?;
                    w = w.concat(&t);
                }
                Some(_) => {
                    let t = self.term()?;
                    w = w.concat(&t);
                }
            }
        }
    }

    fn term(&mut self) -> Result<Word, WordParseError> {
        let f = self.factor()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let n = self.integer()?;
            Ok(f.pow(n))
        } else {
            Ok(f)
        }
    }

    fn factor(&mut self) -> Result<Word, WordParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.bump();
                let a = self.word()?;
                self.expect(',')?;
                let b = self.word()?;
                self.expect(']')?;
                Ok(Word::commutator(&a, &b))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = self.ident()?;
                Ok(Word::generator(name))
            }
            _ => Err(self.error("a generator, '(' or '['")),
        }
    }

    fn ident(&mut self) -> Result<String, WordParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("a generator name"));
        }
        if self.peek() == Some(':') {
            self.bump();
            if self.peek() == Some('-') {
                self.bump();
            }
            self.digits("digits after ':'")?;
            if self.peek() == Some('/') {
                self.bump();
                self.digits("denominator digits")?;
            }
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn digits(&mut self, expected: &str) -> Result<(), WordParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error(expected));
        }
        Ok(())
    }

    fn integer(&mut self) -> Result<i64, WordParseError> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.bump();
        }
        self.digits("an integer exponent")?;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| WordParseError {
                pos: start,
                expected: "an exponent fitting in 64 bits".to_string(),
                found: self.src[start..self.pos].to_string(),
            })
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Word, WordParseError> {
        let mut p = Parser::new(s);
        let w = p.word()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("end of input"));
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_cancels_and_merges() {
        assert_eq!(w("x0 x0^-1").reduce(), Word::identity());
        assert_eq!(w("x0 x1 x1^-1 x0").reduce(), Word::letter("x0", 2));
        assert_eq!(w("a b^2 b^-2 a^-1 c").reduce(), Word::generator("c"));
    }

    #[test]
    fn long_random_word_cancels_against_its_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let names = ["x0", "x1", "c"];
        let letters: Vec<(String, i64)> = (0..1000)
            .map(|_| {
                let n = names[rng.gen_range(0..names.len())].to_string();
                let e = *[-2i64, -1, 1, 2, 3].choose(&mut rng).unwrap();
                (n, e)
            })
            .collect();
        let word = Word::from_letters(letters);
        assert_eq!(word.concat(&word.inverse()).reduce(), Word::identity());
    }

    #[test]
    fn parses_powers_and_juxtaposition() {
        assert_eq!(w("c^3"), Word::letter("c", 3));
        let rel3 = w("x1 x0^-1 c x1 c^-1");
        assert_eq!(
            rel3.letters(),
            [
                ("x1".to_string(), 1),
                ("x0".to_string(), -1),
                ("c".to_string(), 1),
                ("x1".to_string(), 1),
                ("c".to_string(), -1),
            ]
        );
        assert_eq!(w("x0*x1^-1"), w("x0 x1^-1"));
        assert_eq!(w(""), Word::identity());
        assert_eq!(w("x0^0"), Word::identity());
    }

    #[test]
    fn commutator_sugar_expands_reduced() {
        let com = w("[x0 x1^-1, x0^-1 x1 x0]");
        assert_eq!(com.letter_count(), 10);
        // The two inner x0⁻¹ letters merge under reduction.
        assert_eq!(com.letters().len(), 9);
        assert_eq!(com, w("x0 x1^-1 x0^-1 x1 x0 x1 x0^-2 x1^-1 x0"));
        assert_eq!(w("[a, b]"), w("a b a^-1 b^-1"));
    }

    #[test]
    fn parses_parameterized_generators() {
        assert_eq!(w("tau:3/2"), Word::generator("tau:3/2"));
        assert_eq!(w("alpha:-2^2"), Word::letter("alpha:-2", 2));
        assert_eq!(w("tau:1 tau:2").letters().len(), 2);
    }

    #[test]
    fn grouping_and_negative_powers() {
        assert_eq!(w("(x0 x1)^-1"), w("x1^-1 x0^-1"));
        assert_eq!(w("(x0 x1)^2"), w("x0 x1 x0 x1"));
        assert_eq!(w("(x0^-1 c x1)^2 x0^-1 c^-1").letter_count(), 8);
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = "x0^".parse::<Word>().unwrap_err();
        assert_eq!(e.pos, 3);
        assert!(e.expected.contains("integer"));
        assert!("[x0".parse::<Word>().is_err());
        assert!("x0)".parse::<Word>().is_err());
        assert!("3x0".parse::<Word>().is_err());
        assert!("tau:".parse::<Word>().is_err());
        assert!("x0^99999999999999999999".parse::<Word>().is_err());
    }

    #[test]
    fn display_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let names = ["x0", "x1", "c", "tau:1/2"];
        for _ in 0..200 {
            let letters: Vec<(String, i64)> = (0..rng.gen_range(1..8))
                .map(|_| {
                    let n = names[rng.gen_range(0..names.len())].to_string();
                    let e = *[-3i64, -1, 1, 2].choose(&mut rng).unwrap();
                    (n, e)
                })
                .collect();
            let word = Word::from_letters(letters);
            let printed = word.to_string();
            assert_eq!(printed.parse::<Word>().unwrap(), word, "text: {printed}");
        }
    }

    #[test]
    fn exponent_sums_match_hand_counts() {
        let rel4 = w("(x0^-1 c x1)^2 x0^-1 c^-1");
        assert_eq!(rel4.exponent_sum("x0"), (-3).into());
        assert_eq!(rel4.exponent_sum("x1"), 2.into());
        assert_eq!(rel4.exponent_sum("c"), 1.into());
        let rel5 = w("x1 x0^-2 c x1^2 x0^-1 x1^-1 x0 x1^-1 c^-1 x0");
        assert_eq!(rel5.exponent_sum("x0"), (-1).into());
        assert_eq!(rel5.exponent_sum("x1"), 1.into());
        assert_eq!(rel5.exponent_sum("c"), 0.into());
    }
}
