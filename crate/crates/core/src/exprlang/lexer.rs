use super::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Integer,
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Equals,
}

impl TokenKind {
    pub fn describe(self) -> &'static str {
        match self {
            TokenKind::Ident => "identifier",
            TokenKind::Integer => "integer",
            TokenKind::Slash => "'/'",
            TokenKind::Plus => "'+'",
            TokenKind::Minus => "'-'",
            TokenKind::Star => "'*'",
            TokenKind::Caret => "'^'",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::Comma => "','",
            TokenKind::Equals => "'='",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub offset: usize,
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(start, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match ch {
            '/' => Some(TokenKind::Slash),
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            ',' => Some(TokenKind::Comma),
            '=' => Some(TokenKind::Equals),
            _ => None,
        };
        if let Some(kind) = single {
            chars.next();
            tokens.push(Token {
                kind,
                text: ch.to_string(),
                offset: start,
            });
            continue;
        }
        let kind = if ch.is_ascii_digit() {
            TokenKind::Integer
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            TokenKind::Ident
        } else {
            return Err(ParseError::Syntax {
                offset: start,
                expected: vec!["token".to_string()],
                found: format!("'{ch}'"),
            });
        };
        let mut end = start;
        while let Some(&(i, c)) = chars.peek() {
            let continues = match kind {
                TokenKind::Integer => c.is_ascii_digit(),
                _ => c.is_ascii_alphanumeric() || c == '_',
            };
            if !continues {
                break;
            }
            end = i + c.len_utf8();
            chars.next();
        }
        tokens.push(Token {
            kind,
            text: input[start..end].to_string(),
            offset: start,
        });
    }
    Ok(tokens)
}
