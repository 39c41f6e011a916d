//! Text forms of cochains: a one-line display and a line-based file format
//!
//! ```text
//! cochain base_dim 1 rank 2 kernel_rank 1 degree 3
//! xi(1) b(1) : x1 + 2
//! xi(1)^xi(2)^xi(1) : 0
//! ```
//!
//! Indices are 1-based, `1` stands for the empty product and lines starting
//! with `#` are ignored.

use std::fmt;

use super::{BasisKey, Cochain, CochainShape};
use crate::error::{Error, Result};
use crate::scalars::Polynomial;

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.wedge.is_empty() && self.sym.is_empty() {
            return f.write_str("1");
        }
        let wedge: Vec<String> = self.wedge.iter().map(|a| format!("xi({})", a + 1)).collect();
        let sym: String = self.sym.iter().map(|b| format!("b({})", b + 1)).collect();
        match (wedge.is_empty(), sym.is_empty()) {
            (false, false) => write!(f, "{} {}", wedge.join("^"), sym),
            (false, true) => f.write_str(&wedge.join("^")),
            _ => f.write_str(&sym),
        }
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().map(|(k, c)| format!("({c}) {k}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Cochain {
    /// Serializes into the file format read by [`Cochain::parse`].
    pub fn to_text(&self) -> String {
        let s = self.shape();
        let mut out = format!(
            "cochain base_dim {} rank {} kernel_rank {} degree {}\n",
            s.base_dim,
            s.rank,
            s.kernel_rank,
            self.degree()
        );
        for (k, c) in self.terms() {
            out.push_str(&format!("{k} : {c}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Cochain> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| Error::parse(0, "missing cochain header"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let expected = ["cochain", "base_dim", "", "rank", "", "kernel_rank", "", "degree", ""];
        if words.len() != expected.len()
            || words.iter().zip(expected).any(|(w, e)| !e.is_empty() && *w != e)
        {
            return Err(Error::parse(hline, "expected `cochain base_dim M rank N kernel_rank R degree K`"));
        }
        let number = |w: &str| w.parse::<usize>().map_err(|_| Error::parse(hline, format!("bad number `{w}`")));
        let shape = CochainShape { base_dim: number(words[2])?, rank: number(words[4])?, kernel_rank: number(words[6])? };
        if shape.kernel_rank > shape.rank {
            return Err(Error::parse(hline, "kernel_rank exceeds rank"));
        }
        let degree = number(words[8])?;
        let mut out = Cochain::zero(shape, degree);
        for (line, content) in lines {
            let (key, poly) = content
                .split_once(':')
                .ok_or_else(|| Error::parse(line, "expected `<generators> : <polynomial>`"))?;
            let (wedge, sym) = parse_key(key.trim(), shape, line)?;
            let deg = wedge.len() + 2 * sym.len();
            if deg != degree {
                return Err(Error::parse(line, format!("term of degree {deg} in a cochain of degree {degree}")));
            }
            let coeff = Polynomial::parse_at(poly.trim(), shape.base_dim, line)?;
            let term = Cochain::monomial(shape, &wedge, &sym, coeff).map_err(|e| Error::parse(line, e.to_string()))?;
            out.add_assign_unchecked(&term);
        }
        Ok(out)
    }
}

fn parse_key(key: &str, shape: CochainShape, line: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut wedge = Vec::new();
    let mut sym = Vec::new();
    if key == "1" {
        return Ok((wedge, sym));
    }
    let mut rest = key;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == '^' || c == '*');
        if rest.is_empty() {
            break;
        }
        let (target, bound, after) = if let Some(r) = rest.strip_prefix("xi(") {
            (&mut wedge, shape.rank, r)
        } else if let Some(r) = rest.strip_prefix("b(") {
            (&mut sym, shape.kernel_rank, r)
        } else {
            return Err(Error::parse(line, format!("unexpected `{rest}`, expected xi(..) or b(..)")));
        };
        let close = after.find(')').ok_or_else(|| Error::parse(line, "missing `)`"))?;
        let index: usize = after[..close]
            .trim()
            .parse()
            .map_err(|_| Error::parse(line, format!("bad index `{}`", &after[..close])))?;
        if index == 0 || index > bound {
            return Err(Error::parse(line, format!("index {index} outside 1..={bound}")));
        }
        target.push(index - 1);
        rest = &after[close + 1..];
    }
    if wedge.is_empty() && sym.is_empty() {
        return Err(Error::parse(line, "empty generator list, write `1`"));
    }
    Ok((wedge, sym))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let shape = CochainShape { base_dim: 2, rank: 3, kernel_rank: 2 };
        let a = Cochain::monomial(shape, &[2, 0], &[1], Polynomial::parse("x1 - 1/2", 2).unwrap()).unwrap();
        let b = Cochain::monomial(shape, &[], &[1, 0], Polynomial::parse("x2^3", 2).unwrap()).unwrap();
        let c = Cochain::monomial(shape, &[1, 2], &[1], Polynomial::parse("7", 2).unwrap()).unwrap();
        let gamma = &(&a + &b.wedge(&Cochain::function(shape, Polynomial::zero(2))).unwrap()) + &c;
        let text = gamma.to_text();
        assert_eq!(Cochain::parse(&text).unwrap(), gamma);
        assert_eq!(Cochain::parse(&text).unwrap().to_text(), text);
        let both = &b.wedge(&Cochain::xi(shape, 0)).unwrap().wedge(&Cochain::xi(shape, 1)).unwrap() + &c.wedge(&Cochain::b(shape, 0)).unwrap();
        assert_eq!(Cochain::parse(&both.to_text()).unwrap(), both);
    }

    #[test]
    fn reorders_with_sign() {
        let text = "cochain base_dim 0 rank 2 kernel_rank 0 degree 2\nxi(2)^xi(1) : 3\n";
        let gamma = Cochain::parse(text).unwrap();
        let shape = CochainShape { base_dim: 0, rank: 2, kernel_rank: 0 };
        assert_eq!(gamma, Cochain::monomial(shape, &[0, 1], &[], Polynomial::from_int(0, -3)).unwrap());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let bad = "cochain base_dim 0 rank 2 kernel_rank 0 degree 2\n# note\nxi(1) : 1\n";
        assert!(matches!(Cochain::parse(bad), Err(Error::Parse { line: 3, .. })));
        let bad = "cochain base_dim 0 rank 2 kernel_rank 0 degree 1\nxi(3) : 1\n";
        assert!(matches!(Cochain::parse(bad), Err(Error::Parse { line: 2, .. })));
        assert!(Cochain::parse("cochain rank 2").is_err());
    }

    #[test]
    fn display() {
        let shape = CochainShape { base_dim: 1, rank: 2, kernel_rank: 1 };
        let g = Cochain::monomial(shape, &[1], &[0], Polynomial::var(1, 0)).unwrap();
        assert_eq!(g.to_string(), "(x1) xi(2) b(1)");
        assert_eq!(Cochain::zero(shape, 3).to_string(), "0");
    }
}
