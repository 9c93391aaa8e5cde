//! The canonical text grammar for Laurent polynomials.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := atom ('*' atom)*
//! atom     := base ['^' exponent]
//! base     := INT ['/' INT] | VAR | '(' expr ')'
//! exponent := INT | '(' ['-'] INT ['/' INT] ')'
//! ```
//!
//! Notes pinned by the grammar:
//!
//! * there is no implicit multiplication — `2v` is an error (with a hint to
//!   insert `*`);
//! * unary minus binds looser than `^`, so `-v^2` is `-(v^2)`;
//! * negative and fractional exponents are parenthesized: `v^(-2)`,
//!   `v^(3/2)`;
//! * coefficients are integers or fractions `p/q`;
//! * whitespace is insignificant; all offsets in errors are byte offsets
//!   into the original source.
//!
//! [`parse_poly`] inverts [`print_poly`] exactly: parsing a canonical form
//! reproduces the polynomial, and printing is canonical, so
//! `parse ∘ print = id`.

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::poly::{LaurentPoly, VarId};
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TokenKind {
    Int,
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

/// A lexical token; `start..end` is its byte span in the source. The `End`
/// token has the empty span at the end of input.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Token {
    pub kind: TokenKind,
    pub start: usize,
    pub end: usize,
}

/// Splits the source into tokens. Spans are non-overlapping, strictly
/// ascending, and cover every non-whitespace byte.
pub fn tokenize(src: &str) -> Result<Vec<Token>, Error> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let single = |kind| Token {
            kind,
            start: i,
            end: i + 1,
        };
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => tokens.push(single(TokenKind::Plus)),
            b'-' => tokens.push(single(TokenKind::Minus)),
            b'*' => tokens.push(single(TokenKind::Star)),
            b'/' => tokens.push(single(TokenKind::Slash)),
            b'^' => tokens.push(single(TokenKind::Caret)),
            b'(' => tokens.push(single(TokenKind::LParen)),
            b')' => tokens.push(single(TokenKind::RParen)),
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Int,
                    start,
                    end: i,
                });
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Var,
                    start,
                    end: i,
                });
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().expect("offset is a char boundary");
                return Err(Error::Parse {
                    offset: i,
                    message: format!("unexpected character '{ch}'"),
                });
            }
        }
        i += 1;
    }
    tokens.push(Token {
        kind: TokenKind::End,
        start: bytes.len(),
        end: bytes.len(),
    });
    Ok(tokens)
}

/// Parses `src` against the canonical grammar; variables must come from
/// `allowed`. All failures are [`Error::Parse`] with a byte offset.
pub fn parse_poly(src: &str, allowed: &[VarId]) -> Result<LaurentPoly, Error> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        src,
        tokens,
        pos: 0,
        allowed,
    };
    let poly = parser.expr()?;
    let trailing = parser.peek();
    match trailing.kind {
        TokenKind::End => Ok(poly),
        TokenKind::RParen => Err(parser.fail(trailing.start, "unmatched ')'")),
        TokenKind::Slash => Err(parser.fail(
            trailing.start,
            "'/' is only allowed between integers, as in 3/2",
        )),
        _ => Err(parser.fail(
            trailing.start,
            &format!("unexpected '{}'", parser.text(trailing)),
        )),
    }
}

/// The canonical text form of a polynomial (the `Display` rendering);
/// inverse to [`parse_poly`].
pub fn print_poly(f: &LaurentPoly) -> String {
    f.to_string()
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    allowed: &'a [VarId],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Token {
        self.tokens[self.pos]
    }

    fn advance(&mut self) -> Token {
        let token = self.tokens[self.pos];
        if token.kind != TokenKind::End {
            self.pos += 1;
        }
        token
    }

    fn text(&self, token: Token) -> &'a str {
        if token.kind == TokenKind::End {
            "end of input"
        } else {
            &self.src[token.start..token.end]
        }
    }

    fn fail(&self, offset: usize, message: &str) -> Error {
        Error::Parse {
            offset,
            message: message.to_owned(),
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, Error> {
        let negate = if self.peek().kind == TokenKind::Minus {
            self.advance();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek().kind {
                TokenKind::Plus => {
                    self.advance();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                TokenKind::Minus => {
                    self.advance();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, Error> {
        let mut acc = self.atom()?;
        loop {
            let next = self.peek();
            match next.kind {
                TokenKind::Star => {
                    self.advance();
                    let rhs = self.atom()?;
                    acc = &acc * &rhs;
                }
                // An atom directly followed by something that can start an
                // atom is the classic implicit-multiplication typo.
                TokenKind::Var | TokenKind::Int | TokenKind::LParen => {
                    return Err(self.fail(
                        next.start,
                        "implicit multiplication is not supported; insert '*'",
                    ));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn atom(&mut self) -> Result<LaurentPoly, Error> {
        let base = self.base()?;
        if self.peek().kind != TokenKind::Caret {
            return Ok(base);
        }
        let caret = self.advance();
        let exponent = self.exponent()?;
        self.apply_exponent(base, exponent, caret.start)
    }

    /// Raises a parsed base to a rational exponent, staying inside the
    /// Laurent ring:
    ///
    /// * nonnegative integers — any base, by repeated squaring;
    /// * negative integers — single-term bases (the coefficient inverts
    ///   exactly);
    /// * fractional — single-term bases with coefficient 1.
    fn apply_exponent(
        &self,
        base: LaurentPoly,
        exponent: Rational,
        caret_offset: usize,
    ) -> Result<LaurentPoly, Error> {
        if exponent.is_integer() && !exponent.is_negative() {
            let e = exponent
                .to_integer()
                .to_u32()
                .ok_or_else(|| self.fail(caret_offset, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        if base.is_zero() {
            return Err(self.fail(
                caret_offset,
                "zero cannot be raised to a negative or fractional power",
            ));
        }
        let Some((ev, coeff)) = base.as_monomial() else {
            return Err(self.fail(
                caret_offset,
                "negative or fractional exponents require a single-term base",
            ));
        };
        if exponent.is_integer() {
            // Negative integer: invert the coefficient exactly.
            let e = exponent
                .to_integer()
                .to_i32()
                .ok_or_else(|| self.fail(caret_offset, "exponent too large"))?;
            return Ok(LaurentPoly::monomial(ev.scaled(&exponent), coeff.pow(e)));
        }
        if !coeff.is_one() {
            return Err(self.fail(
                caret_offset,
                "fractional exponents require a base with coefficient 1",
            ));
        }
        Ok(LaurentPoly::monomial(ev.scaled(&exponent), Rational::one()))
    }

    fn base(&mut self) -> Result<LaurentPoly, Error> {
        let token = self.peek();
        match token.kind {
            TokenKind::Int => {
                self.advance();
                let numer = self.int_value(token);
                if self.peek().kind == TokenKind::Slash {
                    self.advance();
                    let denom_token = self.peek();
                    if denom_token.kind != TokenKind::Int {
                        return Err(self.fail(
                            denom_token.start,
                            "expected an integer denominator after '/'",
                        ));
                    }
                    self.advance();
                    let denom = self.int_value(denom_token);
                    if denom.is_zero() {
                        return Err(
                            self.fail(denom_token.start, "division by zero in coefficient")
                        );
                    }
                    return Ok(LaurentPoly::constant(Rational::new(numer, denom)));
                }
                Ok(LaurentPoly::constant(Rational::from_integer(numer)))
            }
            TokenKind::Var => {
                self.advance();
                let name = self.text(token);
                if name == "t" {
                    return Err(self.fail(
                        token.start,
                        "'t' is reserved for the series variable and cannot appear in coefficients",
                    ));
                }
                match self.allowed.iter().find(|v| v.name() == name) {
                    Some(var) => Ok(LaurentPoly::variable(*var)),
                    None => {
                        let allowed = if self.allowed.is_empty() {
                            "(none)".to_owned()
                        } else {
                            self.allowed
                                .iter()
                                .map(|v| v.name())
                                .collect::<Vec<_>>()
                                .join(", ")
                        };
                        Err(self.fail(
                            token.start,
                            &format!("unknown variable '{name}'; allowed variables: {allowed}"),
                        ))
                    }
                }
            }
            TokenKind::LParen => {
                self.advance();
                let inner = self.expr()?;
                let closing = self.peek();
                if closing.kind != TokenKind::RParen {
                    return Err(self.fail(
                        closing.start,
                        &format!("expected ')', found '{}'", self.text(closing)),
                    ));
                }
                self.advance();
                Ok(inner)
            }
            TokenKind::Minus => Err(self.fail(
                token.start,
                "unary minus is only allowed at the start of an expression or group",
            )),
            TokenKind::End => Err(self.fail(token.start, "unexpected end of input")),
            _ => Err(self.fail(
                token.start,
                &format!(
                    "expected a number, variable, or '(', found '{}'",
                    self.text(token)
                ),
            )),
        }
    }

    /// exponent := INT | '(' ['-'] INT ['/' INT] ')'
    fn exponent(&mut self) -> Result<Rational, Error> {
        let token = self.peek();
        match token.kind {
            TokenKind::Int => {
                self.advance();
                Ok(Rational::from_integer(self.int_value(token)))
            }
            TokenKind::LParen => {
                self.advance();
                let negative = if self.peek().kind == TokenKind::Minus {
                    self.advance();
                    true
                } else {
                    false
                };
                let numer_token = self.peek();
                if numer_token.kind != TokenKind::Int {
                    return Err(self.fail(
                        numer_token.start,
                        "expected an integer in the exponent",
                    ));
                }
                self.advance();
                let mut numer = self.int_value(numer_token);
                if negative {
                    numer = -numer;
                }
                let mut denom = BigInt::one();
                if self.peek().kind == TokenKind::Slash {
                    self.advance();
                    let denom_token = self.peek();
                    if denom_token.kind != TokenKind::Int {
                        return Err(self.fail(
                            denom_token.start,
                            "expected an integer denominator after '/'",
                        ));
                    }
                    self.advance();
                    denom = self.int_value(denom_token);
                    if denom.is_zero() {
                        return Err(
                            self.fail(denom_token.start, "division by zero in exponent")
                        );
                    }
                }
                let closing = self.peek();
                if closing.kind != TokenKind::RParen {
                    return Err(self.fail(
                        closing.start,
                        &format!("expected ')', found '{}'", self.text(closing)),
                    ));
                }
                self.advance();
                Ok(Rational::new(numer, denom))
            }
            TokenKind::Minus => Err(self.fail(
                token.start,
                "negative exponents must be parenthesized, as in v^(-2)",
            )),
            _ => Err(self.fail(
                token.start,
                &format!("expected an exponent, found '{}'", self.text(token)),
            )),
        }
    }

    fn int_value(&self, token: Token) -> BigInt {
        self.text(token)
            .parse::<BigInt>()
            .expect("Int tokens are nonempty digit strings")
    }
}
