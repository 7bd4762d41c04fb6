//! Line-oriented ideal files:
//!
//! ```text
//! # comment
//! ring 3
//! field QQ            (or: field Fp 5)
//! I: x1^3, x1^2*x2, -1/2*x2^3
//! J: x3^3 + 2*x2*x3^2
//! ```
//!
//! Coefficients are integers or fractions a/b, `*` and `^` are literal,
//! variables are x1..xn. Parsing is field-independent; generators are
//! realized over a concrete field afterwards, where homogeneity is also
//! enforced.

use genint_core::{Error as CoreError, Field, FieldSpec, Monomial, Polynomial};
use num_bigint::BigInt;
use std::fmt;

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, col {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct RawTerm {
    pub num: BigInt,
    pub den: BigInt,
    pub exps: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct RawPoly {
    pub terms: Vec<RawTerm>,
}

#[derive(Debug, Clone)]
pub struct ParsedFile {
    pub field: FieldSpec,
    pub n: usize,
    pub ideals: Vec<(String, Vec<RawPoly>)>,
}

impl ParsedFile {
    pub fn ideal(&self, name: &str) -> Option<&[RawPoly]> {
        self.ideals
            .iter()
            .find(|(id, _)| id == name)
            .map(|(_, g)| g.as_slice())
    }

    /// Realize one ideal's generators over a concrete field, validating
    /// homogeneity. Zero polynomials are dropped.
    pub fn realize<F: Field>(
        &self,
        field: &F,
        gens: &[RawPoly],
        name: &str,
    ) -> Result<Vec<Polynomial<F>>, CoreError> {
        let mut out = Vec::with_capacity(gens.len());
        for raw in gens {
            let mut p = Polynomial::zero(self.n);
            for t in &raw.terms {
                let c = field.from_ratio(&t.num, &t.den)?;
                let term = Polynomial::term(field, Monomial::new(t.exps.clone()), c);
                p = p.add(field, &term);
            }
            if !p.is_homogeneous() {
                return Err(CoreError::NonHomogeneous(format!(
                    "generator of ideal {} is not homogeneous",
                    name
                )));
            }
            if !p.is_zero() {
                out.push(p);
            }
        }
        Ok(out)
    }
}

struct Line<'a> {
    bytes: &'a [u8],
    pos: usize,
    line_no: usize,
}

impl<'a> Line<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line_no,
            col: self.pos + 1,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn small_integer(&mut self) -> Result<usize, ParseError> {
        let v = self.integer()?;
        u32::try_from(&v)
            .map(|v| v as usize)
            .or_else(|_| self.err("number too large"))
    }

    fn identifier(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_') {
            return self.err("expected an identifier");
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii")
            .to_string())
    }

    /// x<i> or x<i>^<e>; returns (index, exponent).
    fn factor(&mut self, n: usize) -> Result<(usize, u32), ParseError> {
        self.skip_ws();
        if !self.eat(b'x') {
            return self.err("expected a variable like x1");
        }
        let idx_col = self.pos;
        let idx = self.small_integer()?;
        if idx == 0 {
            self.pos = idx_col;
            return self.err("variable indices start at x1");
        }
        if idx > n {
            self.pos = idx_col;
            return self.err(format!("variable x{} exceeds ring size {}", idx, n));
        }
        let exp = if self.eat(b'^') {
            self.small_integer()? as u32
        } else {
            1
        };
        Ok((idx, exp))
    }

    /// One signed term: [sign] [coeff *] factor (* factor)* | [sign] coeff.
    fn term(&mut self, n: usize, sign_neg: bool) -> Result<RawTerm, ParseError> {
        self.skip_ws();
        let mut num = BigInt::from(if sign_neg { -1 } else { 1 });
        let mut den = BigInt::from(1);
        let mut exps = vec![0u32; n];
        // optional leading coefficient
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            num *= self.integer()?;
            if self.eat(b'/') {
                let d = self.integer()?;
                if d == BigInt::from(0) {
                    return self.err("zero denominator");
                }
                den = d;
            }
            self.skip_ws();
            if !self.eat(b'*') {
                return Ok(RawTerm { num, den, exps });
            }
        }
        loop {
            let (idx, e) = self.factor(n)?;
            exps[idx - 1] += e;
            self.skip_ws();
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(RawTerm { num, den, exps })
    }

    fn polynomial(&mut self, n: usize) -> Result<RawPoly, ParseError> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        loop {
            terms.push(self.term(n, neg)?);
            self.skip_ws();
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(RawPoly { terms })
    }
}

pub fn parse_ideal_file(text: &str) -> Result<ParsedFile, ParseError> {
    let mut field: Option<FieldSpec> = None;
    let mut n: Option<usize> = None;
    let mut ideals: Vec<(String, Vec<RawPoly>)> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let body = match raw_line.find('#') {
            Some(k) => &raw_line[..k],
            None => raw_line,
        };
        if body.trim().is_empty() {
            continue;
        }
        let mut line = Line {
            bytes: body.as_bytes(),
            pos: 0,
            line_no: idx + 1,
        };
        let head = line.identifier()?;
        match head.as_str() {
            "ring" => {
                let v = line.small_integer()?;
                if v == 0 {
                    return line.err("ring needs at least one variable");
                }
                n = Some(v);
            }
            "field" => {
                let kind = line.identifier()?;
                field = Some(match kind.as_str() {
                    "QQ" => FieldSpec::Rationals,
                    "Fp" => {
                        let p = line.small_integer()? as u64;
                        FieldSpec::prime_field(p)
                            .map_err(|e| ParseError {
                                line: line.line_no,
                                col: line.pos,
                                message: e.to_string(),
                            })?
                    }
                    other => return line.err(format!("unknown field {}", other)),
                });
            }
            name => {
                line.skip_ws();
                if !line.eat(b':') {
                    return line.err("expected ':' after ideal name");
                }
                let n = match n {
                    Some(v) => v,
                    None => return line.err("ring size must be declared before ideals"),
                };
                let mut gens = Vec::new();
                if !line.at_end() {
                    loop {
                        gens.push(line.polynomial(n)?);
                        line.skip_ws();
                        if !line.eat(b',') {
                            break;
                        }
                    }
                }
                if !line.at_end() {
                    return line.err("trailing input after generators");
                }
                if ideals.iter().any(|(id, _)| id == name) {
                    return line.err(format!("ideal {} declared twice", name));
                }
                ideals.push((name.to_string(), gens));
            }
        }
    }
    let n = n.ok_or(ParseError {
        line: 1,
        col: 1,
        message: "missing 'ring <n>' declaration".into(),
    })?;
    Ok(ParsedFile {
        field: field.unwrap_or(FieldSpec::Rationals),
        n,
        ideals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use genint_core::Rationals;

    #[test]
    fn parse_basic_file() {
        let f = parse_ideal_file(
            "# sample\nring 3\nfield QQ\nI: x1^3, x1^2*x2\nJ: x3^3 + 2*x2*x3^2\n",
        )
        .unwrap();
        assert_eq!(f.n, 3);
        assert_eq!(f.field, FieldSpec::Rationals);
        assert_eq!(f.ideals.len(), 2);
        assert_eq!(f.ideal("I").unwrap().len(), 2);
        let gens = f.realize(&Rationals, f.ideal("J").unwrap(), "J").unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].num_terms(), 2);
    }

    #[test]
    fn parse_fractions_and_signs() {
        let f = parse_ideal_file("ring 2\nI: -1/2*x1^2 + x1*x2 - 3*x2^2\n").unwrap();
        let gens = f.realize(&Rationals, f.ideal("I").unwrap(), "I").unwrap();
        assert_eq!(gens[0].num_terms(), 3);
    }

    #[test]
    fn rejects_x0_and_big_indices() {
        let e = parse_ideal_file("ring 2\nI: x0\n").unwrap_err();
        assert!(e.message.contains("start at x1"), "{}", e);
        assert_eq!(e.line, 2);
        let e = parse_ideal_file("ring 2\nI: x3\n").unwrap_err();
        assert!(e.message.contains("exceeds ring size"), "{}", e);
    }

    #[test]
    fn rejects_garbage_with_position() {
        let e = parse_ideal_file("ring 2\nI: x1 ++ x2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.col > 3);
    }

    #[test]
    fn zero_ideal_forms() {
        let f = parse_ideal_file("ring 2\nI: 0\nJ:\n").unwrap();
        assert!(f
            .realize(&Rationals, f.ideal("I").unwrap(), "I")
            .unwrap()
            .is_empty());
        assert!(f
            .realize(&Rationals, f.ideal("J").unwrap(), "J")
            .unwrap()
            .is_empty());
    }

    #[test]
    fn non_homogeneous_realization_fails() {
        let f = parse_ideal_file("ring 2\nI: x1 + x2^2\n").unwrap();
        assert!(f.realize(&Rationals, f.ideal("I").unwrap(), "I").is_err());
    }

    #[test]
    fn fp_field_line() {
        let f = parse_ideal_file("ring 2\nfield Fp 3\nI: x1^3, x2^3\n").unwrap();
        assert_eq!(f.field, FieldSpec::PrimeField(3));
        assert!(parse_ideal_file("ring 2\nfield Fp 4\n").is_err());
    }
}
