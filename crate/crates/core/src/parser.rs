//! Recursive-descent parser for the formula surface syntax.
//!
//! Precedence from tightest to loosest is `¬`, `∧`, `∨`, `→`, `↔`.
//! Conjunction and disjunction group to the left, implication and the
//! biconditional to the right. ASCII aliases are `!`, `&`, `|`, `->`,
//! `<->`, `true` and `false`.

use crate::error::{Error, Result};
use crate::formula::{Formula, Vocabulary};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Not,
    And,
    Or,
    Implies,
    Iff,
    True,
    False,
    LParen,
    RParen,
    Ident(String),
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Not => "negation".into(),
        Tok::And => "conjunction".into(),
        Tok::Or => "disjunction".into(),
        Tok::Implies => "implication".into(),
        Tok::Iff => "biconditional".into(),
        Tok::True | Tok::False => "constant".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Ident(name) => format!("atom `{name}`"),
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut iter = input.char_indices().peekable();
    while let Some(&(pos, c)) = iter.peek() {
        if c.is_whitespace() {
            iter.next();
            continue;
        }
        let single = match c {
            '¬' | '!' | '~' => Some(Tok::Not),
            '∧' | '&' => Some(Tok::And),
            '∨' | '|' => Some(Tok::Or),
            '→' => Some(Tok::Implies),
            '↔' => Some(Tok::Iff),
            '⊤' => Some(Tok::True),
            '⊥' => Some(Tok::False),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            iter.next();
            out.push((pos, tok));
            continue;
        }
        let rest = &input[pos..];
        if rest.starts_with("<->") {
            out.push((pos, Tok::Iff));
            for _ in 0..3 {
                iter.next();
            }
            continue;
        }
        if rest.starts_with("->") {
            out.push((pos, Tok::Implies));
            for _ in 0..2 {
                iter.next();
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(p, ch)) = iter.peek() {
                if ch.is_ascii_alphanumeric() || ch == '_' {
                    end = p + ch.len_utf8();
                    iter.next();
                } else {
                    break;
                }
            }
            let word = &input[pos..end];
            let tok = match word {
                "true" => Tok::True,
                "false" => Tok::False,
                _ => Tok::Ident(word.to_string()),
            };
            out.push((pos, tok));
            continue;
        }
        return Err(Error::Syntax {
            offset: pos,
            message: format!("unexpected character `{c}`"),
        });
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vocab: &'a Vocabulary,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let left = self.implies()?;
        if self.eat(&Tok::Iff) {
            let right = self.iff()?;
            return Ok(Formula::iff(left, right));
        }
        Ok(left)
    }

    fn implies(&mut self) -> Result<Formula> {
        let left = self.or()?;
        if self.eat(&Tok::Implies) {
            let right = self.implies()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut acc = self.and()?;
        while self.eat(&Tok::Or) {
            acc = Formula::or(acc, self.and()?);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::And) {
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula> {
        let offset = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return Err(Error::Syntax {
                offset,
                message: "unexpected end of input, expected a formula".into(),
            });
        };
        self.pos += 1;
        match tok {
            Tok::Not => Ok(Formula::not(self.unary()?)),
            Tok::True => Ok(Formula::True),
            Tok::False => Ok(Formula::False),
            Tok::Ident(name) => match self.vocab.lookup(&name) {
                Some(id) => Ok(Formula::Atom(id)),
                None => Err(Error::UndeclaredAtom { name, offset }),
            },
            Tok::LParen => {
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(Error::Syntax {
                        offset: self.offset(),
                        message: "expected `)`".into(),
                    });
                }
                Ok(inner)
            }
            other => Err(Error::Syntax {
                offset,
                message: format!("unexpected {}, expected a formula", describe(&other)),
            }),
        }
    }
}

/// Parses `input` against `vocab`. Every atom must be declared.
pub fn parse_formula(input: &str, vocab: &Vocabulary) -> Result<Formula> {
    let toks = tokenize(input)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: input.len(),
        vocab,
    };
    let f = parser.iff()?;
    if let Some(tok) = parser.peek().cloned() {
        return Err(Error::Syntax {
            offset: parser.offset(),
            message: format!("unexpected {} after a complete formula", describe(&tok)),
        });
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vocab() -> Vocabulary {
        Vocabulary::new(["p", "q", "r", "h"]).unwrap()
    }

    fn parse(s: &str) -> Formula {
        parse_formula(s, &vocab()).unwrap()
    }

    #[test]
    fn precedence_and_associativity() {
        let (p, q, r) = (Formula::Atom(0), Formula::Atom(1), Formula::Atom(2));
        assert_eq!(
            parse("¬p ∨ q ∧ r"),
            Formula::or(Formula::not(p.clone()), Formula::and(q.clone(), r.clone()))
        );
        assert_eq!(
            parse("p -> q -> r"),
            Formula::implies(p.clone(), Formula::implies(q.clone(), r.clone()))
        );
        assert_eq!(
            parse("p <-> q <-> r"),
            Formula::iff(p.clone(), Formula::iff(q.clone(), r.clone()))
        );
        assert_eq!(
            parse("p | q -> r <-> p"),
            Formula::iff(
                Formula::implies(Formula::or(p.clone(), q.clone()), r.clone()),
                p.clone()
            )
        );
        assert_eq!(
            parse("p & q & r"),
            Formula::and(Formula::and(p.clone(), q.clone()), r)
        );
        assert_eq!(parse("!!p"), Formula::not(Formula::not(p)));
        assert_eq!(parse("true ∧ ⊥"), Formula::and(Formula::True, Formula::False));
    }

    #[test]
    fn syntax_error_offsets() {
        let v = vocab();
        assert_eq!(
            parse_formula("p ->", &v),
            Err(Error::Syntax {
                offset: 4,
                message: "unexpected end of input, expected a formula".into()
            })
        );
        assert!(matches!(
            parse_formula("(p ∧ q", &v),
            Err(Error::Syntax { offset: 8, .. })
        ));
        assert!(matches!(
            parse_formula("p q", &v),
            Err(Error::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_formula("p # q", &v),
            Err(Error::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_formula("", &v),
            Err(Error::Syntax { offset: 0, .. })
        ));
    }

    #[test]
    fn undeclared_atom() {
        assert_eq!(
            parse_formula("p ∧ zz", &vocab()),
            Err(Error::UndeclaredAtom {
                name: "zz".into(),
                offset: 6
            })
        );
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            Just(Formula::True),
            Just(Formula::False),
            (0usize..4).prop_map(Formula::Atom),
        ];
        leaf.prop_recursive(4, 32, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::implies(l, r)),
                (inner.clone(), inner).prop_map(|(l, r)| Formula::iff(l, r)),
            ]
        })
    }

    proptest! {
        #[test]
        fn printing_round_trips(f in arb_formula()) {
            let v = vocab();
            let unicode = f.display(&v).to_string();
            prop_assert_eq!(parse_formula(&unicode, &v).unwrap(), f.clone());
            let ascii = f.ascii(&v).to_string();
            prop_assert_eq!(parse_formula(&ascii, &v).unwrap(), f);
        }
    }
}
