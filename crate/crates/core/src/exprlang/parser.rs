use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::lexer::{tokenize, Token, TokenKind};
use super::ParseError;
use crate::catalog::ast::{Expr, Var};

const ATOM_START: &[&str] = &[
    "integer", "'a'", "'b'", "'q'", "'i'", "'omega'", "'zeta'", "'f'", "'Re'", "'Im'", "'specq'",
    "'('",
];
const AFTER_FACTOR: &[&str] = &["'*'", "'+'", "'-'"];

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
    // offset reported when the token stream runs out
    end: usize,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.offset)
    }

    fn bump(&mut self) -> &'t Token {
        let t = &self.tokens[self.pos];
        self.pos += 1;
        t
    }

    fn eat(&mut self, kind: TokenKind) -> bool {
        if self.peek_kind() == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError::Syntax {
            offset: self.here(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self
                .peek()
                .map_or_else(|| "end of input".to_string(), |t| format!("'{}'", t.text)),
        }
    }

    fn expect(&mut self, kind: TokenKind, expected: &[&str]) -> Result<&'t Token, ParseError> {
        if self.peek_kind() == Some(kind) {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut items = vec![self.term()?];
        loop {
            if self.eat(TokenKind::Plus) {
                items.push(self.term()?);
            } else if self.eat(TokenKind::Minus) {
                items.push(Expr::negate(self.term()?));
            } else {
                break;
            }
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Expr::Sum(items)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut items = vec![self.factor()?];
        while self.eat(TokenKind::Star) {
            items.push(self.factor()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Expr::Product(items)
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let negated = self.eat(TokenKind::Minus);
        let mut value = self.atom()?;
        if self.eat(TokenKind::Caret) {
            let negative = self.eat(TokenKind::Minus);
            let offset = self.here();
            if self.peek_kind() != Some(TokenKind::Integer) {
                return Err(ParseError::ExponentNotInteger { offset });
            }
            let digits = self.bump();
            let magnitude: i64 = digits
                .text
                .parse()
                .map_err(|_| ParseError::ExponentNotInteger { offset })?;
            if self.peek_kind() == Some(TokenKind::Slash) {
                return Err(ParseError::ExponentNotInteger { offset });
            }
            value = Expr::power(value, if negative { -magnitude } else { magnitude });
        }
        Ok(if negated { Expr::negate(value) } else { value })
    }

    fn integer<T: std::str::FromStr>(&mut self, expected: &[&str]) -> Result<T, ParseError> {
        let offset = self.here();
        let tok = self.expect(TokenKind::Integer, expected)?;
        tok.text.parse().map_err(|_| ParseError::Syntax {
            offset,
            expected: vec!["integer in range".to_string()],
            found: format!("'{}'", tok.text),
        })
    }

    fn call_args(&mut self, count: usize) -> Result<Vec<Expr>, ParseError> {
        self.expect(TokenKind::LParen, &["'('"])?;
        let mut args = vec![self.expr()?];
        for _ in 1..count {
            self.expect(TokenKind::Comma, &["'*'", "'+'", "'-'", "','"])?;
            args.push(self.expr()?);
        }
        self.expect(TokenKind::RParen, &["'*'", "'+'", "'-'", "')'"])?;
        Ok(args)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(tok) = self.peek() else {
            return Err(self.error(ATOM_START));
        };
        match tok.kind {
            TokenKind::Integer => {
                let numer: BigInt = self.integer(ATOM_START)?;
                if !self.eat(TokenKind::Slash) {
                    return Ok(Expr::Rational(BigRational::from_integer(numer)));
                }
                let offset = self.here();
                let denom: BigInt = self.integer(&["integer"])?;
                if denom.is_zero() {
                    return Err(ParseError::Syntax {
                        offset,
                        expected: vec!["nonzero integer".to_string()],
                        found: "'0'".to_string(),
                    });
                }
                Ok(Expr::Rational(BigRational::new(numer, denom)))
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, &["'*'", "'+'", "'-'", "')'"])?;
                Ok(inner)
            }
            TokenKind::Ident => {
                let simple = match tok.text.as_str() {
                    "a" => Some(Expr::Var(Var::A)),
                    "b" => Some(Expr::Var(Var::B)),
                    "q" => Some(Expr::Var(Var::Q)),
                    "i" => Some(Expr::Root { order: 4, exponent: 1 }),
                    "omega" => Some(Expr::Root { order: 3, exponent: 1 }),
                    _ => None,
                };
                if let Some(e) = simple {
                    self.bump();
                    return Ok(e);
                }
                match tok.text.as_str() {
                    "zeta" => {
                        self.bump();
                        self.expect(TokenKind::LParen, &["'('"])?;
                        let offset = self.here();
                        let order: u64 = self.integer(&["integer"])?;
                        if order == 0 {
                            return Err(ParseError::Syntax {
                                offset,
                                expected: vec!["positive root order".to_string()],
                                found: "'0'".to_string(),
                            });
                        }
                        self.expect(TokenKind::Comma, &["','"])?;
                        let exponent: i64 = self.integer(&["integer"])?;
                        self.expect(TokenKind::RParen, &["')'"])?;
                        Ok(Expr::Root { order, exponent })
                    }
                    "f" => {
                        self.bump();
                        let mut args = self.call_args(2)?;
                        let y = args.pop().unwrap();
                        let x = args.pop().unwrap();
                        Ok(Expr::theta(x, y))
                    }
                    "Re" | "Im" | "specq" => {
                        let name = self.bump().text.as_str();
                        let x = Box::new(self.call_args(1)?.pop().unwrap());
                        Ok(match name {
                            "Re" => Expr::RealPart(x),
                            "Im" => Expr::ImagPart(x),
                            _ => Expr::SpecializeQ(x),
                        })
                    }
                    _ => Err(self.error(ATOM_START)),
                }
            }
            _ => Err(self.error(ATOM_START)),
        }
    }

    fn finish(&self, closing: &[&str]) -> Result<(), ParseError> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            let mut expected: Vec<&str> = AFTER_FACTOR.to_vec();
            expected.extend_from_slice(closing);
            Err(self.error(&expected))
        }
    }
}

fn parse_tokens(tokens: &[Token], end: usize, closing: &[&str]) -> Result<Expr, ParseError> {
    let mut p = Parser { tokens, pos: 0, end };
    let e = p.expr()?;
    p.finish(closing)?;
    Ok(e)
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    parse_tokens(&tokens, text.len(), &["end of input"])
}

/// Splits on the single top-level `=` and parses both sides.
pub fn parse_identity(text: &str) -> Result<(Expr, Expr), ParseError> {
    let tokens = tokenize(text)?;
    let equals: Vec<usize> = tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.kind == TokenKind::Equals)
        .map(|(i, _)| i)
        .collect();
    match equals[..] {
        [] => Err(ParseError::MissingEquals),
        [split] => {
            let lhs = parse_tokens(&tokens[..split], tokens[split].offset, &["'='"])?;
            let rhs = parse_tokens(&tokens[split + 1..], text.len(), &["end of input"])?;
            Ok((lhs, rhs))
        }
        [_, second, ..] => Err(ParseError::MultipleEquals {
            offset: tokens[second].offset,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i() -> Expr {
        Expr::Root { order: 4, exponent: 1 }
    }

    #[test]
    fn theta_with_root_arguments() {
        let e = parse_expr("f(i*a, i*b)").unwrap();
        assert_eq!(
            e,
            Expr::theta(
                Expr::Product(vec![i(), Expr::Var(Var::A)]),
                Expr::Product(vec![i(), Expr::Var(Var::B)])
            )
        );
    }

    #[test]
    fn compact_quartic_form() {
        let e = parse_expr("1/2*(1+i)*f(a,b) + 1/2*(1-i)*f(-a,-b)").unwrap();
        let half = Expr::Rational(BigRational::new(1.into(), 2.into()));
        let ab = Expr::theta(Expr::Var(Var::A), Expr::Var(Var::B));
        let neg = Expr::theta(
            Expr::negate(Expr::Var(Var::A)),
            Expr::negate(Expr::Var(Var::B)),
        );
        assert_eq!(
            e,
            Expr::Sum(vec![
                Expr::Product(vec![half.clone(), Expr::Sum(vec![Expr::int(1), i()]), ab]),
                Expr::Product(vec![
                    half,
                    Expr::Sum(vec![Expr::int(1), Expr::negate(i())]),
                    neg
                ]),
            ])
        );
    }

    #[test]
    fn precedence_of_power_and_negation() {
        assert_eq!(
            parse_expr("-a^2").unwrap(),
            Expr::negate(Expr::power(Expr::Var(Var::A), 2))
        );
        assert_eq!(parse_expr("a^-1").unwrap(), Expr::power(Expr::Var(Var::A), -1));
        assert_eq!(
            parse_expr("zeta(8,3)").unwrap(),
            Expr::Root { order: 8, exponent: 3 }
        );
    }

    #[test]
    fn chained_power_rejected() {
        let err = parse_expr("a^2^3").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { offset: 3, .. }), "{err:?}");
    }

    #[test]
    fn juxtaposition_rejected() {
        let err = parse_expr("a b").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { offset: 2, .. }), "{err:?}");
    }

    #[test]
    fn non_integer_exponents() {
        assert_eq!(
            parse_expr("a^b").unwrap_err(),
            ParseError::ExponentNotInteger { offset: 2 }
        );
        assert_eq!(
            parse_expr("a^1/2").unwrap_err(),
            ParseError::ExponentNotInteger { offset: 2 }
        );
    }

    #[test]
    fn identity_splitting() {
        let (l, r) = parse_identity("f(a,b) = f(b,a)").unwrap();
        assert!(matches!(l, Expr::Theta(..)) && matches!(r, Expr::Theta(..)));
        assert_eq!(parse_identity("f(a,b)").unwrap_err(), ParseError::MissingEquals);
        assert_eq!(
            parse_identity("x = y = z").unwrap_err(),
            ParseError::MultipleEquals { offset: 6 }
        );
        let err = parse_identity("f(a,b = ").unwrap_err();
        assert_eq!(err.offset(), Some(6));
    }

    #[test]
    fn bad_atoms() {
        assert!(parse_expr("").is_err());
        assert!(parse_expr("x").is_err());
        assert!(parse_expr("1/0").is_err());
        assert!(parse_expr("zeta(0,1)").is_err());
        assert!(parse_expr("f(a)").is_err());
        assert!(parse_expr("--a").is_err());
    }
}
