use super::lexer::{tokenize, Tok};
use super::{DslError, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Sp {
    pub text: String,
    pub pos: Pos,
}

#[derive(Debug, Default)]
pub(crate) struct RawCategory {
    pub name: Option<Sp>,
    pub objects: Vec<Sp>,
    /// `name: dom -> cod`
    pub morphisms: Vec<[Sp; 3]>,
    /// `id obj = mor`
    pub identities: Vec<[Sp; 2]>,
    /// `g . f = h`
    pub compositions: Vec<[Sp; 3]>,
    pub end: Pos,
}

#[derive(Debug)]
pub(crate) struct RawWitness {
    pub name: Sp,
    /// `(key, value)` with key one of `carrier, pA, pB, iA, iB`
    pub fields: Vec<(Sp, Sp)>,
    pub end: Pos,
}

#[derive(Debug)]
pub(crate) struct RawCmon {
    pub dom: Sp,
    pub cod: Sp,
    pub zero: Option<Sp>,
    /// `f + g = h`
    pub sums: Vec<[Sp; 3]>,
    pub end: Pos,
}

#[derive(Debug, Default)]
pub(crate) struct RawDoc {
    pub category: RawCategory,
    pub witnesses: Vec<RawWitness>,
    pub cmons: Vec<RawCmon>,
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, DslError> {
        Err(DslError::Syntax {
            pos: self.pos(),
            msg: format!("expected {expected}, found {}", self.peek().describe()),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, DslError> {
        if *self.peek() == tok {
            Ok(self.next().1)
        } else {
            self.error(&tok.describe())
        }
    }

    fn name(&mut self, what: &str) -> Result<Sp, DslError> {
        match self.peek().clone() {
            Tok::Ident(text) => {
                let pos = self.next().1;
                Ok(Sp { text, pos })
            }
            _ => self.error(what),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), DslError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.next();
                Ok(())
            }
            _ => self.error(&format!("`{kw}`")),
        }
    }

    fn is_ident(&self, k: usize, text: &str) -> bool {
        matches!(self.peek_at(k), Tok::Ident(s) if s == text)
    }

    /// `;` ends a statement; it may be dropped before `}`.
    fn end_statement(&mut self) -> Result<(), DslError> {
        match self.peek() {
            Tok::Semi => {
                self.next();
                Ok(())
            }
            Tok::RBrace => Ok(()),
            _ => self.error("`;`"),
        }
    }

    fn document(&mut self) -> Result<RawDoc, DslError> {
        let mut doc = RawDoc::default();
        let mut seen_category = false;
        loop {
            let pos = self.pos();
            match self.peek().clone() {
                Tok::Eof => break,
                Tok::Ident(kw) if kw == "category" => {
                    if seen_category {
                        return Err(DslError::Syntax {
                            pos,
                            msg: "only one category block is allowed per document".into(),
                        });
                    }
                    seen_category = true;
                    self.next();
                    doc.category = self.category()?;
                }
                Tok::Ident(kw) if kw == "witness" => {
                    self.next();
                    doc.witnesses.push(self.witness()?);
                }
                Tok::Ident(kw) if kw == "cmon" => {
                    self.next();
                    doc.cmons.push(self.cmon()?);
                }
                _ => return self.error("`category`, `witness` or `cmon`"),
            }
        }
        if !seen_category {
            return Err(DslError::Syntax {
                pos: self.pos(),
                msg: "document has no category block".into(),
            });
        }
        Ok(doc)
    }

    fn category(&mut self) -> Result<RawCategory, DslError> {
        let mut cat = RawCategory {
            name: Some(self.name("a category name")?),
            ..RawCategory::default()
        };
        self.expect(Tok::LBrace)?;
        while *self.peek() != Tok::RBrace {
            if self.is_ident(0, "objects") && *self.peek_at(1) == Tok::Colon {
                self.next();
                self.next();
                loop {
                    cat.objects.push(self.name("an object name")?);
                    if *self.peek() != Tok::Comma {
                        break;
                    }
                    self.next();
                }
            } else if self.is_ident(0, "morphisms") && *self.peek_at(1) == Tok::Colon {
                self.next();
                self.next();
                loop {
                    let name = self.name("a morphism name")?;
                    self.expect(Tok::Colon)?;
                    let dom = self.name("a domain object")?;
                    self.expect(Tok::Arrow)?;
                    let cod = self.name("a codomain object")?;
                    cat.morphisms.push([name, dom, cod]);
                    if *self.peek() != Tok::Comma {
                        break;
                    }
                    self.next();
                }
            } else if self.is_ident(0, "id")
                && matches!(self.peek_at(1), Tok::Ident(_))
                && *self.peek_at(2) == Tok::Eq
            {
                self.next();
                let obj = self.name("an object name")?;
                self.expect(Tok::Eq)?;
                let mor = self.name("a morphism name")?;
                cat.identities.push([obj, mor]);
            } else {
                let g = self.name("`objects:`, `morphisms:`, `id`, or an equation `g . f = h`")?;
                self.expect(Tok::Dot)?;
                let f = self.name("a morphism name")?;
                self.expect(Tok::Eq)?;
                let h = self.name("a morphism name")?;
                cat.compositions.push([g, f, h]);
            }
            self.end_statement()?;
        }
        cat.end = self.expect(Tok::RBrace)?;
        Ok(cat)
    }

    fn witness(&mut self) -> Result<RawWitness, DslError> {
        let name = self.name("a witness name")?;
        self.expect(Tok::LBrace)?;
        let mut fields = Vec::new();
        while *self.peek() != Tok::RBrace {
            let key = self.name("`carrier`, `pA`, `pB`, `iA` or `iB`")?;
            if !["carrier", "pA", "pB", "iA", "iB"].contains(&key.text.as_str()) {
                return Err(DslError::Syntax {
                    pos: key.pos,
                    msg: format!(
                        "unknown witness field `{}` (expected carrier, pA, pB, iA or iB)",
                        key.text
                    ),
                });
            }
            match self.peek() {
                Tok::Colon | Tok::Eq => {
                    self.next();
                }
                _ => return self.error("`:` or `=`"),
            }
            let value = self.name("a name")?;
            fields.push((key, value));
            self.end_statement()?;
        }
        let end = self.expect(Tok::RBrace)?;
        Ok(RawWitness { name, fields, end })
    }

    fn cmon(&mut self) -> Result<RawCmon, DslError> {
        self.keyword("hom")?;
        self.expect(Tok::LParen)?;
        let dom = self.name("an object name")?;
        self.expect(Tok::Comma)?;
        let cod = self.name("an object name")?;
        self.expect(Tok::RParen)?;
        self.expect(Tok::LBrace)?;
        let mut block = RawCmon {
            dom,
            cod,
            zero: None,
            sums: Vec::new(),
            end: Pos::default(),
        };
        while *self.peek() != Tok::RBrace {
            if self.is_ident(0, "zero") && *self.peek_at(1) == Tok::Eq {
                let pos = self.next().1;
                self.next();
                if block.zero.is_some() {
                    return Err(DslError::Duplicate {
                        pos: Some(pos),
                        what: "zero declaration in this cmon block".into(),
                    });
                }
                block.zero = Some(self.name("a morphism name")?);
            } else {
                let f = self.name("`zero = ...` or a sum `f + g = h`")?;
                self.expect(Tok::Plus)?;
                let g = self.name("a morphism name")?;
                self.expect(Tok::Eq)?;
                let h = self.name("a morphism name")?;
                block.sums.push([f, g, h]);
            }
            self.end_statement()?;
        }
        block.end = self.expect(Tok::RBrace)?;
        Ok(block)
    }
}

pub(crate) fn parse_raw(src: &str) -> Result<RawDoc, DslError> {
    let toks = tokenize(src)?;
    Parser { toks, at: 0 }.document()
}
