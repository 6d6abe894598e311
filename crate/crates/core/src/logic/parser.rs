// Recursive-descent parser for the formula grammar:
//
//   formula := iff
//   iff     := imp ("<->" imp)*
//   imp     := or ("->" imp)?          right-associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | atom | "true" | "false" | "(" formula ")"
//
// Unicode aliases: ¬ ∧ ∨ → ↔ ⊤ ⊥. Positions in errors are character offsets.

use super::{Formula, Vocabulary};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    End,
}

const EXPECT_OPERAND: &str = "atom, `true`, `false`, `~` or `(`";

pub fn parse_formula(text: &str, vocab: &Vocabulary) -> Result<Formula> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        vocab,
    };
    if parser.peek() == &Tok::End {
        return Err(Error::Syntax {
            position: 0,
            expected: "a formula".into(),
        });
    }
    let f = parser.iff()?;
    match parser.peek() {
        Tok::End => Ok(f),
        _ => Err(parser.error("an operator or end of input")),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' | '¬' => Tok::Not,
            '&' | '∧' => Tok::And,
            '|' | '∨' => Tok::Or,
            '→' => Tok::Implies,
            '↔' => Tok::Iff,
            '⊤' => Tok::True,
            '⊥' => Tok::False,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Implies
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                i += 2;
                Tok::Iff
            }
            c if c.is_ascii_alphabetic() => {
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                let word: String = chars[start..=i].iter().collect();
                match word.as_str() {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    _ => Tok::Ident(word),
                }
            }
            _ => {
                return Err(Error::Syntax {
                    position: start,
                    expected: format!("{EXPECT_OPERAND} or an operator, found `{c}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    vocab: &'a Vocabulary,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.tokens[self.pos].0.clone();
        if tok != Tok::End {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, expected: &str) -> Error {
        Error::Syntax {
            position: self.tokens[self.pos].1,
            expected: expected.to_string(),
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.imp()?;
        while self.peek() == &Tok::Iff {
            self.bump();
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if self.peek() == &Tok::Implies {
            self.bump();
            let rhs = self.imp()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while self.peek() == &Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.peek() == &Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::True => {
                self.bump();
                Ok(Formula::True)
            }
            Tok::False => {
                self.bump();
                Ok(Formula::False)
            }
            Tok::Ident(name) => {
                let index = self
                    .vocab
                    .index_of(&name)
                    .ok_or_else(|| Error::UnknownAtom(name.clone()))?;
                self.bump();
                Ok(Formula::Atom(index))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if self.peek() != &Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(EXPECT_OPERAND)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn abc() -> Vocabulary {
        Vocabulary::new(["A", "B", "C"]).unwrap()
    }

    fn a(i: usize) -> Formula {
        Formula::atom(i)
    }

    #[test]
    fn precedence_and_associativity() {
        let v = abc();
        assert_eq!(
            parse_formula("~A & B", &v).unwrap(),
            Formula::and(Formula::not(a(0)), a(1))
        );
        assert_eq!(
            parse_formula("A -> B -> C", &v).unwrap(),
            Formula::implies(a(0), Formula::implies(a(1), a(2)))
        );
        assert_eq!(
            parse_formula("A | B & C", &v).unwrap(),
            Formula::or(a(0), Formula::and(a(1), a(2)))
        );
        assert_eq!(
            parse_formula("A & B & C", &v).unwrap(),
            Formula::and(Formula::and(a(0), a(1)), a(2))
        );
        assert_eq!(
            parse_formula("A <-> B -> C", &v).unwrap(),
            Formula::iff(a(0), Formula::implies(a(1), a(2)))
        );
        assert_eq!(
            parse_formula("A | B -> C", &v).unwrap(),
            Formula::implies(Formula::or(a(0), a(1)), a(2))
        );
    }

    #[test]
    fn unicode_aliases() {
        let v = abc();
        assert_eq!(
            parse_formula("¬A ∧ (B ∨ ⊥) → C ↔ ⊤", &v).unwrap(),
            parse_formula("~A & (B | false) -> C <-> true", &v).unwrap()
        );
    }

    #[test]
    fn syntax_errors() {
        let v = abc();
        assert_eq!(
            parse_formula("A && B", &v),
            Err(Error::Syntax {
                position: 3,
                expected: EXPECT_OPERAND.into()
            })
        );
        assert!(matches!(
            parse_formula("(A & B", &v),
            Err(Error::Syntax { position: 6, .. })
        ));
        assert!(matches!(
            parse_formula("A B", &v),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(parse_formula("", &v), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_formula("A - B", &v), Err(Error::Syntax { position: 2, .. })));
        assert_eq!(parse_formula("A & D", &v), Err(Error::UnknownAtom("D".into())));
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            (0usize..3).prop_map(Formula::Atom),
            Just(Formula::True),
            Just(Formula::False),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
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
        fn print_then_parse_is_identity(f in arb_formula()) {
            let v = abc();
            let text = f.to_text(&v);
            prop_assert_eq!(parse_formula(&text, &v).unwrap(), f);
        }

        #[test]
        fn models_respect_connectives(f in arb_formula(), g in arb_formula()) {
            let v = abc();
            let (mf, mg) = (f.models(&v), g.models(&v));
            prop_assert_eq!(Formula::not(f.clone()).models(&v), v.all_worlds().minus(&mf));
            prop_assert_eq!(Formula::and(f.clone(), g.clone()).models(&v), mf.and(&mg));
            prop_assert_eq!(Formula::or(f.clone(), g.clone()).models(&v), mf.or(&mg));
            prop_assert_eq!(crate::logic::entails(&mf, &g, &v), mf.is_subset(&mg));
        }

        #[test]
        fn dnf_round_trips(bits in 0u32..256) {
            let v = abc();
            let set = crate::logic::WorldSet::from_worlds(
                8,
                (0..8).filter(|i| bits >> i & 1 == 1).map(super::super::World::from_index),
            );
            prop_assert_eq!(crate::logic::dnf_of_worlds(&set, &v).models(&v), set);
        }
    }
}
