//! Standard groups and the builder-expression language.
//!
//! ```text
//! expr  ::= term ( "x" term )*
//! term  ::= "S(" n ")" | "A(" n ")" | "C(" n ")" | "D(" n ")"      (also S5, C12, ...)
//!         | "SL25" | "PSL(2," p ")" | "Q8" | "F21" | "Dic12" | "He27" | "M27"
//!         | "wr(" expr "," expr ")" | "gens(" n ";" perm ("," perm)* ")"
//!         | "(" expr ")"
//! ```
//!
//! `D(n)` is the dihedral group of order `n`. A generator list can also be
//! given as a TOML record with `degree` and `gens` keys.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::products::{direct_product, wreath_regular};
use crate::structure::is_prime;

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    let pts: Vec<usize> = points.into_iter().collect();
    for (i, &p) in pts.iter().enumerate() {
        images[p] = pts[(i + 1) % pts.len()];
    }
    Permutation::from_images(images).expect("a cycle is a bijection")
}

fn gens_or_trivial(gens: Vec<Permutation>, degree: usize, cap: usize) -> Result<PermGroup> {
    let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
    if gens.is_empty() {
        return Ok(PermGroup::trivial(degree));
    }
    PermGroup::generate(&gens, cap)
}

pub fn symmetric(n: usize, cap: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::DegreeOutOfRange(0));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    gens_or_trivial(vec![cycle([0, 1], n), cycle(0..n, n)], n, cap)
}

pub fn alternating(n: usize, cap: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::DegreeOutOfRange(0));
    }
    if n < 3 {
        return Ok(PermGroup::trivial(n));
    }
    let long = if n % 2 == 1 {
        cycle(0..n, n)
    } else {
        cycle(1..n, n)
    };
    gens_or_trivial(vec![cycle([0, 1, 2], n), long], n, cap)
}

pub fn cyclic(n: usize, cap: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::DegreeOutOfRange(0));
    }
    gens_or_trivial(vec![cycle(0..n, n)], n, cap)
}

/// Dihedral group of order `order`; `D(4)` is the Klein four-group.
pub fn dihedral(order: usize, cap: usize) -> Result<PermGroup> {
    if order < 2 || order % 2 == 1 {
        return Err(Error::GroupSpecSyntax {
            pos: 0,
            msg: format!("dihedral order must be even and at least 2, got {order}"),
        });
    }
    let n = order / 2;
    match n {
        1 => cyclic(2, cap),
        2 => PermGroup::generate(
            &[
                Permutation::parse("(1 2)(3 4)", 4)?,
                Permutation::parse("(1 3)(2 4)", 4)?,
            ],
            cap,
        ),
        _ => {
            let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
            let reflection = Permutation::from_images(reflection)?;
            PermGroup::generate(&[cycle(0..n, n), reflection], cap)
        }
    }
}

/// `SL(2,5)` acting on the 24 nonzero vectors of `F_5²`.
pub fn sl25(cap: usize) -> Result<PermGroup> {
    let vectors: Vec<(i64, i64)> = (0..5)
        .flat_map(|a| (0..5).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let pos = |v: (i64, i64)| {
        vectors
            .iter()
            .position(|&w| w == (v.0.rem_euclid(5), v.1.rem_euclid(5)))
            .expect("nonzero vector")
    };
    // row vector times matrix [[a, b], [c, d]]
    let act = |m: [i64; 4]| {
        let images: Vec<usize> = vectors
            .iter()
            .map(|&(x, y)| pos((x * m[0] + y * m[2], x * m[1] + y * m[3])))
            .collect();
        Permutation::from_images(images)
    };
    PermGroup::generate(&[act([1, 1, 0, 1])?, act([0, -1, 1, 0])?], cap)
}

/// `PSL(2,p)` on the projective line `{0, …, p-1, ∞}` via `z ↦ z+1` and `z ↦ -1/z`.
pub fn psl2(p: usize, cap: usize) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::GroupSpecSyntax {
            pos: 0,
            msg: format!("PSL(2,p) needs a prime p, got {p}"),
        });
    }
    let inf = p;
    let inv = |z: usize| (1..p).find(|&w| (z * w) % p == 1).expect("p is prime");
    let translate: Vec<usize> = (0..=p).map(|z| if z == inf { inf } else { (z + 1) % p }).collect();
    let invert: Vec<usize> = (0..=p)
        .map(|z| match z {
            _ if z == inf => 0,
            0 => inf,
            _ => (p - inv(z)) % p,
        })
        .collect();
    PermGroup::generate(
        &[Permutation::from_images(translate)?, Permutation::from_images(invert)?],
        cap,
    )
}

fn from_cycles(degree: usize, gens: &[&str], cap: usize) -> Result<PermGroup> {
    let gens = gens
        .iter()
        .map(|s| Permutation::parse(s, degree))
        .collect::<Result<Vec<_>>>()?;
    gens_or_trivial(gens, degree, cap)
}

/// Small named groups not covered by the families above.
pub fn named(name: &str, cap: usize) -> Option<Result<PermGroup>> {
    Some(match name {
        "Q8" => from_cycles(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], cap),
        "F21" => from_cycles(7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"], cap),
        "Dic12" => from_cycles(7, &["(1 2 3)", "(2 3)(4 5 6 7)"], cap),
        "He27" => from_cycles(9, &["(1 4 7)(2 5 8)(3 6 9)", "(4 5 6)(7 9 8)"], cap),
        "M27" => from_cycles(9, &["(1 2 3 4 5 6 7 8 9)", "(2 5 8)(3 9 6)"], cap),
        "SL25" => sl25(cap),
        _ => return None,
    })
}

/// Generator list in TOML form: `degree = 4` and `gens = ["(1 2)", "(1 2 3 4)"]`.
#[derive(Debug, Deserialize)]
struct Record {
    degree: usize,
    gens: Vec<String>,
}

pub fn parse_group_record(text: &str, cap: usize) -> Result<PermGroup> {
    let record: Record = toml::from_str(text).map_err(|e| Error::GroupSpecSyntax {
        pos: e.span().map_or(0, |s| s.start),
        msg: e.message().to_string(),
    })?;
    if record.degree == 0 {
        return Err(Error::DegreeOutOfRange(0));
    }
    let gens: Vec<&str> = record.gens.iter().map(String::as_str).collect();
    from_cycles(record.degree, &gens, cap)
}

/// Parses a builder expression, or a TOML record when the text contains `gens =`.
pub fn parse_group(text: &str, cap: usize) -> Result<PermGroup> {
    if text.contains("gens") && text.contains('=') {
        return parse_group_record(text, cap);
    }
    let mut p = Parser { src: text, pos: 0, cap };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    cap: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::GroupSpecSyntax {
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

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let n = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("number too large"))?;
        self.pos += digits;
        Ok(n)
    }

    fn expr(&mut self) -> Result<PermGroup> {
        let mut g = self.term()?;
        while self.eat("x") || self.eat("×") {
            let h = self.term()?;
            g = direct_product(&g, &h, self.cap)?;
        }
        Ok(g)
    }

    /// `n` written either as `(n)` or as trailing digits.
    fn size_arg(&mut self) -> Result<usize> {
        if self.rest().starts_with('(') {
            self.pos += 1;
            let n = self.number()?;
            self.expect(")")?;
            Ok(n)
        } else {
            self.number()
        }
    }

    fn term(&mut self) -> Result<PermGroup> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("(") {
            let g = self.expr()?;
            self.expect(")")?;
            return Ok(g);
        }
        if self.eat("wr(") {
            let a = self.expr()?;
            self.expect(",")?;
            let b = self.expr()?;
            self.expect(")")?;
            return wreath_regular(&a, &b, self.cap);
        }
        if self.eat("gens(") {
            return self.gens_list();
        }
        if self.eat("PSL(") {
            let n = self.number()?;
            if n != 2 {
                return Err(self.error("only PSL(2,p) is supported"));
            }
            self.expect(",")?;
            let p = self.number()?;
            self.expect(")")?;
            return psl2(p, self.cap).map_err(|e| self.relocate(e, start));
        }
        let word_len = self
            .rest()
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphanumeric()) || (i > 0 && c == 'x'))
            .map_or(self.rest().len(), |(i, _)| i);
        let word = &self.rest()[..word_len];
        if let Some(g) = named(word, self.cap) {
            self.pos += word_len;
            return g;
        }
        let family = match self.rest().chars().next() {
            Some(c @ ('S' | 'A' | 'C' | 'D')) => c,
            _ => return Err(self.error("expected a group")),
        };
        self.pos += 1;
        let n = self.size_arg()?;
        let g = match family {
            'S' => symmetric(n, self.cap),
            'A' => alternating(n, self.cap),
            'C' => cyclic(n, self.cap),
            _ => dihedral(n, self.cap),
        };
        g.map_err(|e| self.relocate(e, start))
    }

    fn relocate(&self, e: Error, pos: usize) -> Error {
        match e {
            Error::GroupSpecSyntax { msg, .. } => Error::GroupSpecSyntax { pos, msg },
            other => other,
        }
    }

    fn gens_list(&mut self) -> Result<PermGroup> {
        let degree = self.number()?;
        if degree == 0 {
            return Err(Error::DegreeOutOfRange(0));
        }
        self.expect(";")?;
        let mut gens = Vec::new();
        loop {
            self.skip_ws();
            let start = self.pos;
            let mut depth = 0usize;
            let mut end = start;
            for (i, c) in self.rest().char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' if depth == 0 => break,
                    ')' => depth -= 1,
                    ',' if depth == 0 => break,
                    _ => {}
                }
                end = start + i + c.len_utf8();
            }
            let text = &self.src[start..end];
            if text.trim().is_empty() {
                return Err(self.error("expected a permutation"));
            }
            let perm = Permutation::parse(text, degree).map_err(|e| match e {
                Error::PermutationSyntax { pos, msg } => Error::GroupSpecSyntax {
                    pos: start + pos,
                    msg,
                },
                other => other,
            })?;
            gens.push(perm);
            self.pos = end;
            if self.eat(")") {
                break;
            }
            self.expect(",")?;
        }
        gens_or_trivial(gens, degree, self.cap)
    }
}

/// One `label := expression` line of a corpus manifest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub label: String,
    pub expr: String,
}

/// Reads a manifest: one `label := expression` per line, `#` starts a comment.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("").trim();
        if !content.is_empty() {
            let (label, expr) = content.split_once(":=").ok_or(Error::GroupSpecSyntax {
                pos: offset,
                msg: "expected `label := expression`".to_string(),
            })?;
            let (label, expr) = (label.trim(), expr.trim());
            if label.is_empty() || expr.is_empty() {
                return Err(Error::GroupSpecSyntax {
                    pos: offset,
                    msg: "empty label or expression".to_string(),
                });
            }
            out.push(ManifestEntry {
                label: label.to_string(),
                expr: expr.to_string(),
            });
        }
        offset += line.len();
    }
    Ok(out)
}
