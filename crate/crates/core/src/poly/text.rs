//! Text form: `2 x1^g x2^e - 1/3 y1^e*z1^g + x3`.
//!
//! A term is an optional rational coefficient followed by decorated variables
//! separated by whitespace or `*`. A bare variable carries the Hopf unit. The
//! zero polynomial is written `0`.

use num_traits::{One, Signed, Zero};

use super::{Family, HPolynomial, Letter, Var};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::rational::{format_q, parse_q, Q};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Number(String),
    Variable(Var, Option<String>),
}

fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '.'
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    let err = |i: usize, what: &str| Error::Parse(format!("{what} at character {} in `{s}`", i + 1));
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                out.push(Token::Number(chars[start..i].iter().collect()));
            }
            c => {
                let family = Family::from_letter(c).ok_or_else(|| err(i, "unexpected character"))?;
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(err(start, "missing variable index"));
                }
                let index: u32 = chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| err(start, "variable index too large"))?;
                if index == 0 {
                    return Err(err(start, "variable indices start at 1"));
                }
                let mut label = None;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let braced = i < chars.len() && chars[i] == '{';
                    if braced {
                        i += 1;
                    }
                    let ls = i;
                    while i < chars.len() && is_label_char(chars[i]) {
                        i += 1;
                    }
                    if ls == i {
                        return Err(err(ls, "missing decoration label"));
                    }
                    label = Some(chars[ls..i].iter().collect());
                    if braced {
                        if i >= chars.len() || chars[i] != '}' {
                            return Err(err(i, "unclosed brace"));
                        }
                        i += 1;
                    }
                }
                out.push(Token::Variable(Var { family, index }, label));
            }
        }
    }
    Ok(out)
}

fn decorations(hopf: &HopfAlgebra, var: Var, label: &Option<String>) -> Result<Vec<(usize, Q)>> {
    match label {
        None => Ok(hopf
            .unit()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()),
        Some(l) => hopf
            .label_index(l)
            .map(|i| vec![(i, Q::one())])
            .ok_or_else(|| Error::Parse(format!("unknown Hopf basis label `{l}` on {var}"))),
    }
}

/// Parses the text form against the labels of `hopf`.
pub fn parse_polynomial(hopf: &HopfAlgebra, s: &str) -> Result<HPolynomial> {
    let m = hopf.dim();
    let tokens = tokenize(s)?;
    if tokens == [Token::Number("0".into())] {
        return Ok(HPolynomial::zero(m));
    }
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = HPolynomial::zero(m);
    let mut pos = 0;
    let mut first = true;
    while pos < tokens.len() {
        let mut sign = Q::one();
        match tokens[pos] {
            Token::Plus => pos += 1,
            Token::Minus => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(Error::Parse(format!("expected + or - between terms in `{s}`"))),
        }
        first = false;
        let mut coeff = sign;
        if let Some(Token::Number(n)) = tokens.get(pos) {
            coeff *= parse_q(n)?;
            pos += 1;
            if tokens.get(pos) == Some(&Token::Star) {
                pos += 1;
            }
        }
        let mut partial: Vec<(Vec<Letter>, Q)> = vec![(Vec::new(), coeff)];
        let mut factors = 0;
        while let Some(Token::Variable(var, label)) = tokens.get(pos) {
            let decs = decorations(hopf, *var, label)?;
            partial = partial
                .iter()
                .flat_map(|(w, c)| {
                    decs.iter().map(move |(h, d)| {
                        let mut w2 = w.clone();
                        w2.push((*var, *h));
                        (w2, c * d)
                    })
                })
                .collect();
            factors += 1;
            pos += 1;
            if tokens.get(pos) == Some(&Token::Star) {
                pos += 1;
                if !matches!(tokens.get(pos), Some(Token::Variable(..))) {
                    return Err(Error::Parse(format!("dangling `*` in `{s}`")));
                }
            }
        }
        if factors == 0 {
            return Err(Error::Parse(format!(
                "term without variables in `{s}` (polynomials have no constant term)"
            )));
        }
        for (w, c) in partial {
            out.add_term(w, c);
        }
    }
    Ok(out)
}

/// Canonical text form; `parse_polynomial` inverts it.
pub fn format_polynomial(hopf: &HopfAlgebra, f: &HPolynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (w, c)) in f.terms().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&format_q(&a));
            out.push(' ');
        }
        let letters: Vec<String> = w
            .iter()
            .map(|(v, h)| format!("{v}^{}", hopf.labels()[*h]))
            .collect();
        out.push_str(&letters.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{dual, group_algebra, GroupTable};
    use crate::rational::{q, qf};

    #[test]
    fn parse_commutator() {
        let h = HopfAlgebra::trivial();
        let f = parse_polynomial(&h, "x1^1 x2^1 - x2^1 x1^1").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.coefficient(&[(Var::x(2), 0), (Var::x(1), 0)]), q(-1));
        assert_eq!(format_polynomial(&h, &f), "x1^1 x2^1 - x2^1 x1^1");
    }

    #[test]
    fn bare_variables_carry_the_unit() {
        let h = dual(&group_algebra(&GroupTable::cyclic(2)));
        let f = parse_polynomial(&h, "x1").unwrap();
        assert_eq!(format_polynomial(&h, &f), "x1^p_e + x1^p_g");
    }

    #[test]
    fn coefficients_and_stars() {
        let h = group_algebra(&GroupTable::cyclic(2));
        let f = parse_polynomial(&h, "-3/2 * y1^g*z2^e + 2 z2^e y1^g").unwrap();
        assert_eq!(f.coefficient(&[(Var::y(1), 1), (Var::z(2), 0)]), qf(-3, 2));
        let text = format_polynomial(&h, &f);
        assert_eq!(text, "-3/2 y1^g z2^e + 2 z2^e y1^g");
        assert_eq!(parse_polynomial(&h, &text).unwrap(), f);
    }

    #[test]
    fn errors() {
        let h = HopfAlgebra::trivial();
        assert!(parse_polynomial(&h, "").is_err());
        assert!(parse_polynomial(&h, "3").is_err());
        assert!(parse_polynomial(&h, "x1^q").is_err());
        assert!(parse_polynomial(&h, "x1 x2 x3 w").is_err());
        assert!(parse_polynomial(&h, "x0").is_err());
        assert!(parse_polynomial(&h, "x1 *").is_err());
        assert!(parse_polynomial(&h, "0").unwrap().is_zero());
    }
}
