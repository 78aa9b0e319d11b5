use super::{DslError, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Colon,
    Comma,
    Arrow,
    Dot,
    Plus,
    Eq,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("name `{s}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

/// Characters allowed in an unquoted name.
pub(crate) fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<(Tok, Pos)>, DslError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1, 1);
    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else if c.is_some() {
                col += 1;
            }
            c
        }};
    }
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if c == '#' {
            while !matches!(chars.peek(), None | Some('\n')) {
                bump!();
            }
            continue;
        }
        if c == '/' {
            bump!();
            if chars.peek() != Some(&'/') {
                return Err(DslError::Syntax {
                    pos,
                    msg: "unexpected `/` (comments start with `//` or `#`)".into(),
                });
            }
            while !matches!(chars.peek(), None | Some('\n')) {
                bump!();
            }
            continue;
        }
        if c == '"' {
            bump!();
            let mut s = String::new();
            loop {
                match bump!() {
                    None | Some('\n') => {
                        return Err(DslError::Syntax {
                            pos,
                            msg: "unterminated quoted name".into(),
                        })
                    }
                    Some('"') => break,
                    Some('\\') => match bump!() {
                        Some(e @ ('"' | '\\')) => s.push(e),
                        _ => {
                            return Err(DslError::Syntax {
                                pos: Pos { line, col: col - 1 },
                                msg: "only `\\\"` and `\\\\` escapes are allowed in names".into(),
                            })
                        }
                    },
                    Some(ch) => s.push(ch),
                }
            }
            if s.is_empty() {
                return Err(DslError::Syntax {
                    pos,
                    msg: "empty quoted name".into(),
                });
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        if is_name_char(c) {
            let mut s = String::new();
            while let Some(&ch) = chars.peek() {
                if !is_name_char(ch) {
                    break;
                }
                s.push(ch);
                bump!();
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        bump!();
        let tok = match c {
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ';' => Tok::Semi,
            ':' => Tok::Colon,
            ',' => Tok::Comma,
            '.' => Tok::Dot,
            '+' => Tok::Plus,
            '=' => Tok::Eq,
            '-' if chars.peek() == Some(&'>') => {
                bump!();
                Tok::Arrow
            }
            other => {
                return Err(DslError::Syntax {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}
