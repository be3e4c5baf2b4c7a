use std::collections::BTreeSet;

use super::{InputSpec, RunConfig};
use crate::error::{Error, Result};
use crate::polyring::{Coefficient, Polynomial};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(src: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| err(line, col, format!("integer {s} too large")))?;
            out.push((Tok::Num(n), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(err(line, col, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn n(&self) -> usize {
        self.names.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        err(self.line, self.col(), message)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Sym('(')))
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let col = self.col();
                let d = self.factor()?;
                let inv = (d.is_constant() && !d.is_zero())
                    .then(|| d.coefficient(&crate::polyring::MultiIndex::zero(self.n())).inv())
                    .flatten()
                    .ok_or_else(|| err(self.line, col, "division by a non-constant or zero"))?;
                acc = acc.scale(&inv);
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek() {
                Some(&Tok::Num(e)) if e >= 0 && e <= u32::MAX as i64 => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                _ => Err(self.error("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.n();
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Polynomial::constant(n, Coefficient::from_int(v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.identifier(&name, col)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(t) => Err(self.error(format!("unexpected {t:?}"))),
            None => Err(self.error("unexpected end of expression")),
        }
    }

    /// A declared name, the imaginary unit, or a juxtaposition like `z1z2`.
    fn identifier(&self, name: &str, col: usize) -> Result<Polynomial> {
        let n = self.n();
        let mut rest = name;
        let mut acc = Polynomial::one(n);
        while !rest.is_empty() {
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, v)| rest.starts_with(v.as_str()))
                .max_by_key(|(_, v)| v.len());
            if let Some((idx, v)) = best {
                acc = &acc * &Polynomial::var(n, idx);
                rest = &rest[v.len()..];
            } else if let Some(r) = rest.strip_prefix('i') {
                acc = acc.scale(&Coefficient::i());
                rest = r;
            } else {
                return Err(err(self.line, col, format!("undeclared variable {name:?}")));
            }
        }
        Ok(acc)
    }
}

/// Parses one polynomial expression over `names`.
pub fn parse_polynomial(src: &str, names: &[String]) -> Result<Polynomial> {
    parse_at(src, names, 1, 1)
}

fn parse_at(src: &str, names: &[String], line: usize, col0: usize) -> Result<Polynomial> {
    let mut p = Parser {
        toks: tokenize(src, line, col0)?,
        pos: 0,
        line,
        end_col: col0 + src.chars().count(),
        names,
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

const KEYS: [&str; 5] = ["vars", "gens", "beta", "max_steps", "strategy"];

fn split_key(line: &str) -> Option<(&str, &str, usize)> {
    let (k, v) = line.split_once(':')?;
    let key = k.trim();
    KEYS.contains(&key).then(|| (key, v, k.chars().count() + 2))
}

pub fn parse_input(text: &str) -> Result<InputSpec> {
    let mut names: Option<Vec<String>> = None;
    let mut gen_lines: Vec<(usize, usize, String)> = Vec::new();
    let mut config = RunConfig::default();
    let mut in_gens = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some((key, value, vcol)) = split_key(line) else {
            if in_gens {
                gen_lines.push((line_no, 1, line.to_string()));
                continue;
            }
            return Err(err(line_no, 1, "expected one of vars:, gens:, beta:, max_steps:, strategy:"));
        };
        in_gens = false;
        let v = value.trim();
        let bad = |what: &str| err(line_no, vcol, format!("invalid {what} {v:?}"));
        match key {
            "vars" => {
                let list: Vec<String> = v
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
                let unique: BTreeSet<&String> = list.iter().collect();
                if list.is_empty() || unique.len() != list.len() {
                    return Err(err(line_no, vcol, "variable names must be nonempty and unique"));
                }
                if let Some(bad_name) = list
                    .iter()
                    .find(|s| s.as_str() == "i" || !s.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_'))
                {
                    return Err(err(line_no, vcol, format!("invalid variable name {bad_name:?}")));
                }
                names = Some(list);
            }
            "gens" => {
                in_gens = true;
                if !v.is_empty() {
                    gen_lines.push((line_no, vcol, value.to_string()));
                }
            }
            "beta" => {
                let b: u32 = v.parse().map_err(|_| bad("truncation order"))?;
                if b == 0 {
                    return Err(bad("truncation order"));
                }
                config.truncation_order = Some(b);
            }
            "max_steps" => {
                config.max_steps = v.parse().ok().filter(|&m| m >= 1).ok_or_else(|| bad("step limit"))?;
            }
            "strategy" => config.strategy = v.parse().map_err(|_| bad("strategy"))?,
            _ => unreachable!(),
        }
    }

    let names = names.ok_or_else(|| err(1, 1, "missing vars: line"))?;
    let mut generators = Vec::new();
    for (line_no, col, src) in gen_lines {
        let g = parse_at(&src, &names, line_no, col)?;
        if g.has_constant_term() {
            return Err(err(line_no, col, "generator has a nonzero constant term"));
        }
        generators.push(g);
    }
    if generators.is_empty() {
        return Err(err(1, 1, "no generators"));
    }
    Ok(InputSpec {
        variable_names: names,
        generators,
        config,
    })
}
