//! Text form of cohomology classes.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' int)?
//! atom   := 'x' int | 'w' int | 'm' '[' int (',' int)* ']' | int | '(' expr ')'
//! ```
//!
//! Whitespace is ignored everywhere. Integer atoms are constants mod 2.
//! Examples: `x1^2*x2`, `w2*w3^2 + w7`, `m[3,1]`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::polyring::{
    elementary, is_symmetric, monomial_coordinates, monomial_symmetric, Expander, Exponent,
    ExponentVector, F2Polynomial, Partition, WPolynomial,
};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Atom {
    X(usize),
    W(usize),
    M(Partition),
    Const(bool),
    Group(Box<ClassExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Factor {
    atom: Atom,
    pos: usize,
    power: u32,
}

/// A parsed class, not yet evaluated in any ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassExpr {
    terms: Vec<Vec<Factor>>,
}

/// Which symbols a class mentions; used to echo results in the caller's style.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Mentions {
    pub x: bool,
    pub w: bool,
    pub m: bool,
}

impl ClassExpr {
    pub fn parse(s: &str) -> Result<ClassExpr> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn mentions(&self) -> Mentions {
        let mut out = Mentions::default();
        for f in self.terms.iter().flatten() {
            match &f.atom {
                Atom::X(_) => out.x = true,
                Atom::W(_) => out.w = true,
                Atom::M(_) => out.m = true,
                Atom::Const(_) => {}
                Atom::Group(g) => {
                    let inner = g.mentions();
                    out.x |= inner.x;
                    out.w |= inner.w;
                    out.m |= inner.m;
                }
            }
        }
        out
    }

    /// Evaluates in `Z/2[x_1..x_n]`, with `w_l ↦ e_l`.
    pub fn to_x(&self, n: usize) -> Result<F2Polynomial> {
        let mut out = F2Polynomial::zero(n);
        for term in &self.terms {
            let mut t = F2Polynomial::one(n);
            for f in term {
                let base = match &f.atom {
                    Atom::X(i) => {
                        if *i == 0 || *i > n {
                            return Err(Error::Parse {
                                pos: f.pos,
                                msg: format!("x{i} is not among x1..x{n}"),
                            });
                        }
                        F2Polynomial::variable(n, i - 1)
                    }
                    Atom::W(l) => {
                        if *l == 0 {
                            return Err(Error::Parse {
                                pos: f.pos,
                                msg: "w0 is not a generator".into(),
                            });
                        }
                        elementary(*l, n)
                    }
                    Atom::M(lambda) => monomial_symmetric(lambda, n).map_err(|e| Error::Parse {
                        pos: f.pos,
                        msg: e.to_string(),
                    })?,
                    Atom::Const(c) => {
                        if *c {
                            F2Polynomial::one(n)
                        } else {
                            F2Polynomial::zero(n)
                        }
                    }
                    Atom::Group(g) => g.to_x(n)?,
                };
                t = t.mul_same(&base.pow(f.power));
            }
            out.add_assign_same(&t);
        }
        Ok(out)
    }

    /// Evaluates as a polynomial in `w_1..w_rank`; `m[λ]` is rewritten
    /// through the fundamental theorem of symmetric polynomials and `x_i`
    /// is rejected.
    pub fn to_w(&self, rank: usize) -> Result<WPolynomial> {
        let mut expander = None;
        self.to_w_with(rank, &mut expander)
    }

    fn to_w_with(&self, rank: usize, expander: &mut Option<Expander>) -> Result<WPolynomial> {
        let mut out = F2Polynomial::zero(rank);
        for term in &self.terms {
            let mut t = F2Polynomial::one(rank);
            for f in term {
                let base = match &f.atom {
                    Atom::X(_) => {
                        return Err(Error::Parse {
                            pos: f.pos,
                            msg: "x-variables are not classes of this ring; use w or m[...]".into(),
                        })
                    }
                    Atom::W(l) => WPolynomial::w(rank, *l)
                        .map_err(|e| Error::Parse {
                            pos: f.pos,
                            msg: e.to_string(),
                        })?
                        .into_poly(),
                    Atom::M(lambda) => {
                        let m = monomial_symmetric(lambda, rank).map_err(|e| Error::Parse {
                            pos: f.pos,
                            msg: e.to_string(),
                        })?;
                        expander
                            .get_or_insert_with(|| Expander::new(rank))
                            .to_w_basis(&m)?
                            .into_poly()
                    }
                    Atom::Const(c) => {
                        if *c {
                            F2Polynomial::one(rank)
                        } else {
                            F2Polynomial::zero(rank)
                        }
                    }
                    Atom::Group(g) => g.to_w_with(rank, expander)?.into_poly(),
                };
                t = t.mul_same(&base.pow(f.power));
            }
            out.add_assign_same(&t);
        }
        Ok(WPolynomial::from_poly(out))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer out of range".into(),
            })
    }

    fn expr(&mut self) -> Result<ClassExpr> {
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        Ok(ClassExpr { terms })
    }

    fn term(&mut self) -> Result<Vec<Factor>> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(factors)
    }

    fn factor(&mut self) -> Result<Factor> {
        let pos = {
            self.skip_ws();
            self.pos
        };
        let atom = self.atom()?;
        let power = if self.eat(b'^') {
            u32::try_from(self.int()?).map_err(|_| self.err("exponent out of range"))?
        } else {
            1
        };
        Ok(Factor { atom, pos, power })
    }

    fn atom(&mut self) -> Result<Atom> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Atom::X(self.index()?))
            }
            Some(b'w') => {
                self.pos += 1;
                Ok(Atom::W(self.index()?))
            }
            Some(b'm') => {
                self.pos += 1;
                if !self.eat(b'[') {
                    return Err(self.err("expected '[' after 'm'"));
                }
                let mut parts = vec![self.part()?];
                while self.eat(b',') {
                    parts.push(self.part()?);
                }
                if !self.eat(b']') {
                    return Err(self.err("expected ']'"));
                }
                Ok(Atom::M(Partition::new(&parts)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(Atom::Group(Box::new(inner)))
            }
            Some(c) if c.is_ascii_digit() => Ok(Atom::Const(self.int()? % 2 == 1)),
            Some(_) => Err(self.err("expected x<i>, w<i>, m[...], a constant or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn index(&mut self) -> Result<usize> {
        // the index must follow the letter directly
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return Err(self.err("expected an index"));
        }
        usize::try_from(self.int()?).map_err(|_| self.err("index out of range"))
    }

    fn part(&mut self) -> Result<Exponent> {
        Exponent::try_from(self.int()?).map_err(|_| self.err("part exceeds 16 bits"))
    }
}

fn write_monomial(out: &mut String, e: &ExponentVector, letter: char) {
    let mut first = true;
    for i in 0..e.len() {
        let a = e.get(i);
        if a == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        write!(out, "{letter}{}", i + 1).unwrap();
        if a > 1 {
            write!(out, "^{a}").unwrap();
        }
    }
    if first {
        out.push('1');
    }
}

fn format_terms(terms: &[ExponentVector], letter: char) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in terms.iter().rev().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        write_monomial(&mut out, t, letter);
    }
    out
}

/// `x1^2*x2 + x2`, leading term first.
pub fn format_x(p: &F2Polynomial) -> String {
    format_terms(p.terms(), 'x')
}

/// `w2*w3^2 + w7`, leading term first.
pub fn format_w(p: &WPolynomial) -> String {
    format_terms(p.terms(), 'w')
}

/// `m[2,1] + m[1,1,1]`, largest partition first. `m[]` is written `1`.
pub fn format_m(parts: &[Partition]) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut sorted = parts.to_vec();
    sorted.sort();
    sorted
        .iter()
        .rev()
        .map(|l| {
            if l.length() == 0 {
                "1".to_string()
            } else {
                format!("m{l}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Formats a symmetric polynomial in the monomial basis, any other in x-variables.
pub fn format_symmetric_or_x(p: &F2Polynomial) -> String {
    if is_symmetric(p) {
        format_m(&monomial_coordinates(p))
    } else {
        format_x(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_forms() {
        let p = ClassExpr::parse("x1^2*x2").unwrap().to_x(2).unwrap();
        assert_eq!(p.terms(), &[ExponentVector::new(&[2, 1])]);

        let w = ClassExpr::parse("w2*w3^2 + w7").unwrap().to_w(7).unwrap();
        assert_eq!(format_w(&w), "w2*w3^2 + w7");

        let m = ClassExpr::parse("m[3,1]").unwrap().to_x(2).unwrap();
        assert_eq!(format_symmetric_or_x(&m), "m[3,1]");
    }

    #[test]
    fn whitespace_is_ignored() {
        let a = ClassExpr::parse("  w2 * w3 ^ 2+w1 ")
            .unwrap()
            .to_w(3)
            .unwrap();
        let b = ClassExpr::parse("w2*w3^2+w1").unwrap().to_w(3).unwrap();
        assert_eq!(a, b);
        let c = ClassExpr::parse("m[ 2 , 1 ]").unwrap();
        assert_eq!(c, ClassExpr::parse("m[2,1]").unwrap());
    }

    #[test]
    fn parse_errors_report_position() {
        match ClassExpr::parse("w2 + + w3") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        match ClassExpr::parse("m[2,1") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        match ClassExpr::parse("w") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("unexpected {other:?}"),
        }
        match ClassExpr::parse("w2 w3") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn evaluation_errors_point_at_the_factor() {
        match ClassExpr::parse("w1 + x3").unwrap().to_x(2) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(ClassExpr::parse("x1").unwrap().to_w(3).is_err());
    }

    #[test]
    fn m_classes_convert_to_w() {
        let w = ClassExpr::parse("m[2,1]").unwrap().to_w(2).unwrap();
        assert_eq!(format_w(&w), "w1*w2");
        let w = ClassExpr::parse("m[1,1,1]").unwrap().to_w(4).unwrap();
        assert_eq!(format_w(&w), "w3");
    }

    #[test]
    fn constants_and_groups() {
        let p = ClassExpr::parse("(x1 + x2)^2 + 1")
            .unwrap()
            .to_x(2)
            .unwrap();
        assert_eq!(format_x(&p), "x1^2 + x2^2 + 1");
        assert_eq!(
            format_x(&ClassExpr::parse("0").unwrap().to_x(3).unwrap()),
            "0"
        );
        assert_eq!(
            format_x(&ClassExpr::parse("3").unwrap().to_x(3).unwrap()),
            "1"
        );
    }
}
