//! Recursive-descent parser for class expressions.
//!
//! ```text
//! expr ::= "N" | "U" | "S" | "Ab" | "E(" base ")" | "Jcs(" expr "," jset ")" | "ca(" expr ")"
//! base ::= "S" | "S|" names
//! jset ::= "all" | "{" names "}"
//! ```

use crate::classes::{BaseSet, GroupClass, JSet};
use crate::error::{Error, Result};

pub fn parse_class_expr(text: &str) -> Result<GroupClass> {
    let mut p = Parser { src: text, pos: 0 };
    let class = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(class)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::ClassSyntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn expr(&mut self) -> Result<GroupClass> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("E(") {
            let base = self.base()?;
            self.expect(")")?;
            return Ok(GroupClass::comp_factors_in(base));
        }
        if self.eat("Jcs(") {
            let f = self.expr()?;
            self.expect(",")?;
            let j = self.jset()?;
            self.expect(")")?;
            return GroupClass::jcs(f, j).map_err(|e| self.at(e, start));
        }
        if self.eat("ca(") {
            let f = self.expr()?;
            self.expect(")")?;
            return GroupClass::ca(f).map_err(|e| self.at(e, start));
        }
        let word_len = self
            .rest()
            .bytes()
            .take_while(u8::is_ascii_alphanumeric)
            .count();
        let word = &self.rest()[..word_len];
        match GroupClass::builtin(word) {
            Some(c) if word_len > 0 => {
                self.pos += word_len;
                Ok(c)
            }
            _ => Err(self.error("expected N, U, S, Ab, E(...), Jcs(...) or ca(...)")),
        }
    }

    fn at(&self, e: Error, pos: usize) -> Error {
        match e {
            Error::Hypothesis(class, msg) => Error::ClassSyntax {
                pos,
                msg: format!("{class}: {msg}"),
            },
            other => other,
        }
    }

    fn base(&mut self) -> Result<BaseSet> {
        self.expect("S")?;
        if self.eat("|") {
            let names = self.names(')')?;
            BaseSet::soluble_plus(names)
        } else {
            BaseSet::soluble_plus(Vec::<String>::new())
        }
    }

    fn jset(&mut self) -> Result<JSet> {
        if self.eat("all") {
            return Ok(JSet::All);
        }
        self.expect("{")?;
        let names = self.names('}')?;
        self.expect("}")?;
        JSet::listed(names)
    }

    /// Comma-separated simple-group names ending before `close`. Names may
    /// contain balanced parentheses, as in `PSL(2,7)`.
    fn names(&mut self, close: char) -> Result<Vec<String>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let mut depth = 0usize;
            let mut len = 0;
            for c in self.rest().chars() {
                match c {
                    '(' => depth += 1,
                    ')' if depth > 0 => depth -= 1,
                    c if depth == 0 && (c == ',' || c == close) => break,
                    _ => {}
                }
                len += c.len_utf8();
            }
            let name = self.rest()[..len].trim().to_string();
            if name.is_empty() {
                return Err(self.error("expected a simple group name"));
            }
            self.pos += len;
            out.push(name);
            if !self.eat(",") {
                return Ok(out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::ClassKind;

    #[test]
    fn grammar_examples() {
        let c = parse_class_expr("Jcs(U, all)").unwrap();
        assert!(matches!(c.kind(), ClassKind::Jcs(_, JSet::All)));
        assert_eq!(c.to_string(), "Jcs(U, all)");
        let c = parse_class_expr("E(S|A5)").unwrap();
        assert_eq!(c.to_string(), "E(S|A5)");
        let c = parse_class_expr("Jcs(N, {A5, PSL(2,7)})").unwrap();
        assert_eq!(c.to_string(), "Jcs(N, {A5, PSL(2,7)})");
        let c = parse_class_expr(" ca( E( S | A5 , PSL(2,7) ) ) ").unwrap();
        assert_eq!(c.to_string(), "ca(E(S|A5,PSL(2,7)))");
        for s in ["N", "U", "S", "Ab", "E(S)", "Jcs(Jcs(N, all), {A6})", "ca(U)"] {
            let c = parse_class_expr(s).unwrap();
            assert_eq!(parse_class_expr(&c.to_string()).unwrap(), c);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_class_expr("Q"), Err(Error::ClassSyntax { pos: 0, .. })));
        assert!(matches!(parse_class_expr("Jcs(U all)"), Err(Error::ClassSyntax { pos: 6, .. })));
        assert!(matches!(parse_class_expr("E(S|A5"), Err(Error::ClassSyntax { .. })));
        assert!(matches!(parse_class_expr("N N"), Err(Error::ClassSyntax { pos: 2, .. })));
        assert_eq!(
            parse_class_expr("Jcs(N, {A5, Monster})").unwrap_err(),
            Error::UnknownSimpleName("Monster".into())
        );
        assert!(matches!(parse_class_expr("Jcs(, all)"), Err(Error::ClassSyntax { pos: 4, .. })));
    }
}
