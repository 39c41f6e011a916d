//! Text syntax for polynomials: `+`/`-` separated terms such as
//! `3/2 x1^2 x2 - x1 + 4`. Factors may be separated by whitespace or `*`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Caret,
    Plus,
    Minus,
    Star,
    Slash,
}

impl std::fmt::Display for Token {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Token::Int(n) => write!(f, "`{n}`"),
            Token::Var(i) => write!(f, "`x{}`", i + 1),
            Token::Caret => f.write_str("`^`"),
            Token::Plus => f.write_str("`+`"),
            Token::Minus => f.write_str("`-`"),
            Token::Star => f.write_str("`*`"),
            Token::Slash => f.write_str("`/`"),
        }
    }
}

fn describe(t: Option<&Token>) -> String {
    t.map_or_else(|| "end of input".to_string(), Token::to_string)
}

fn tokenize(s: &str) -> std::result::Result<Vec<Token>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            'x' => {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                if end == start {
                    return Err("variable name must be x followed by an index".into());
                }
                let idx: usize = chars[start..end]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|e| format!("bad variable index: {e}"))?;
                if idx == 0 {
                    return Err("variables are numbered from x1".into());
                }
                out.push(Token::Var(idx - 1));
                i = end;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token::Int(digits.parse().expect("digits")));
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_int(&mut self, what: &str) -> std::result::Result<BigInt, String> {
        match self.next() {
            Some(Token::Int(n)) => Ok(n),
            other => Err(format!("expected {what}, found {}", describe(other.as_ref()))),
        }
    }

    fn polynomial(&mut self) -> std::result::Result<Polynomial, String> {
        let mut acc = Polynomial::zero(self.nvars);
        let mut first = true;
        while first || self.peek().is_some() {
            let mut negative = false;
            let mut signed = false;
            while let Some(t @ (Token::Plus | Token::Minus)) = self.peek() {
                negative ^= *t == Token::Minus;
                signed = true;
                self.pos += 1;
            }
            if !first && !signed {
                return Err(format!("expected + or -, found {}", describe(self.peek())));
            }
            let term = self.term()?;
            acc = if negative { &acc - &term } else { &acc + &term };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> std::result::Result<Polynomial, String> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.nvars];
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(Token::Int(_)) => {
                    let num = self.expect_int("integer")?;
                    let mut value = Rational::from_integer(num);
                    if self.peek() == Some(&Token::Slash) {
                        self.pos += 1;
                        let den = self.expect_int("denominator")?;
                        if den.is_zero() {
                            return Err("zero denominator".into());
                        }
                        value /= Rational::from_integer(den);
                    }
                    coeff *= value;
                }
                Some(Token::Var(i)) => {
                    let i = *i;
                    self.pos += 1;
                    if i >= self.nvars {
                        return Err(format!(
                            "variable x{} out of range (base has {} variables)",
                            i + 1,
                            self.nvars
                        ));
                    }
                    let mut e = 1u32;
                    if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        let n = self.expect_int("exponent")?;
                        e = u32::try_from(n).map_err(|_| "exponent too large".to_string())?;
                    }
                    exps[i] += e;
                }
                _ => break,
            }
            factors += 1;
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
                if !matches!(self.peek(), Some(Token::Int(_) | Token::Var(_))) {
                    return Err("dangling *".into());
                }
            }
        }
        if factors == 0 {
            return Err(format!("expected a term, found {}", describe(self.peek())));
        }
        Ok(Polynomial::term(self.nvars, coeff, Monomial::from_exponents(exps)))
    }
}

impl Polynomial {
    /// Parses the text syntax over `nvars` base variables `x1..x{nvars}`.
    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial> {
        Self::parse_at(s, nvars, 0)
    }

    pub(crate) fn parse_at(s: &str, nvars: usize, line: usize) -> Result<Polynomial> {
        let tokens = tokenize(s).map_err(|m| Error::parse(line, m))?;
        if tokens.is_empty() {
            return Err(Error::parse(line, "empty polynomial"));
        }
        let mut p = Parser { tokens, pos: 0, nvars };
        p.polynomial().map_err(|m| Error::parse(line, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational;

    #[test]
    fn parses_spec_style_terms() {
        let p = Polynomial::parse("3/2 x1^2 x2 + x1 + -4", 2).unwrap();
        assert_eq!(p.to_string(), "3/2 x1^2 x2 + x1 - 4");
        assert_eq!(p.coefficient(&Monomial::one(2)), rational(-4, 1));
    }

    #[test]
    fn star_and_subtraction() {
        let p = Polynomial::parse("2*x1*x1 - 1/3 x2", 2).unwrap();
        let q = Polynomial::parse("2 x1^2 - 1/3 x2", 2).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn zero_and_negative_leading() {
        assert!(Polynomial::parse("0", 0).unwrap().is_zero());
        assert_eq!(Polynomial::parse("-x1", 1).unwrap().to_string(), "-x1");
        assert_eq!(Polynomial::parse("-1/2", 0).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Polynomial::parse("x3", 2).is_err());
        assert!(Polynomial::parse("x0", 2).is_err());
        assert!(Polynomial::parse("1/0", 2).is_err());
        assert!(Polynomial::parse("", 2).is_err());
        assert!(Polynomial::parse("x1 +", 2).is_err());
        assert!(Polynomial::parse("y1", 2).is_err());
    }
}
