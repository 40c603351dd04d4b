//! Group-word expressions: parsing, canonical printing, and evaluation.
//!
//! Grammar, lowest precedence first (whitespace is insignificant):
//!
//! ```text
//! word       = factor { "*" factor } ;              (left-associative)
//! factor     = atom { "^" exponent } ;              (chains apply left to right)
//! exponent   = "-1" | ident | "(" word ")" ;
//! atom       = ident | "(" word ")" | commutator ;
//! commutator = "[" word "," [ "_" integer ] word "]" ;
//! ident      = letter-or-underscore { letter, digit, or underscore } ;
//! ```
//!
//! `x^-1` is inversion, `x^y` is conjugation `y⁻¹ x y`, `[w1, w2]` is the
//! commutator `w1⁻¹ w2⁻¹ w1 w2`, and `[w1,_n w2]` is the n-fold nested
//! commutator `[…[[w1, w2], w2]…, w2]`. Depth 0 is a syntax error.
//! `x^y^z` parses as `(x^y)^z`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};

/// AST of a group word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordExpr {
    Var(String),
    Mul(Box<WordExpr>, Box<WordExpr>),
    Inv(Box<WordExpr>),
    Conj {
        base: Box<WordExpr>,
        by: Box<WordExpr>,
    },
    EngelComm {
        left: Box<WordExpr>,
        right: Box<WordExpr>,
        depth: u32,
    },
}

/// Parses a word expression; see the module docs for the grammar.
pub fn parse_word(text: &str) -> Result<WordExpr> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    parser.skip_ws();
    let expr = parser.parse_expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.expected("end of input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn expected(&self, what: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            expected: what.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8, what: &str) -> Result<()> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.expected(what))
        }
    }

    fn parse_expr(&mut self) -> Result<WordExpr> {
        let mut lhs = self.parse_factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                self.skip_ws();
                let rhs = self.parse_factor()?;
                lhs = WordExpr::Mul(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn parse_factor(&mut self) -> Result<WordExpr> {
        let mut base = self.parse_atom()?;
        loop {
            self.skip_ws();
            if !self.eat(b'^') {
                return Ok(base);
            }
            self.skip_ws();
            match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    self.expect(b'1', "`-1`")?;
                    base = WordExpr::Inv(Box::new(base));
                }
                Some(b'(') => {
                    self.pos += 1;
                    self.skip_ws();
                    let by = self.parse_expr()?;
                    self.skip_ws();
                    self.expect(b')', "`)`")?;
                    base = WordExpr::Conj {
                        base: Box::new(base),
                        by: Box::new(by),
                    };
                }
                _ => {
                    let name = self.parse_ident("`-1`, variable, or `(` after `^`")?;
                    base = WordExpr::Conj {
                        base: Box::new(base),
                        by: Box::new(WordExpr::Var(name)),
                    };
                }
            }
        }
    }

    fn parse_atom(&mut self) -> Result<WordExpr> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let expr = self.parse_expr()?;
                self.skip_ws();
                self.expect(b')', "`)`")?;
                Ok(expr)
            }
            Some(b'[') => {
                self.pos += 1;
                self.skip_ws();
                let left = self.parse_expr()?;
                self.skip_ws();
                self.expect(b',', "`,`")?;
                let depth = if self.eat(b'_') {
                    let depth = self.parse_integer()?;
                    if depth == 0 {
                        return Err(self.expected("commutator depth ≥ 1"));
                    }
                    depth
                } else {
                    1
                };
                self.skip_ws();
                let right = self.parse_expr()?;
                self.skip_ws();
                self.expect(b']', "`]`")?;
                Ok(WordExpr::EngelComm {
                    left: Box::new(left),
                    right: Box::new(right),
                    depth,
                })
            }
            _ => {
                let name = self.parse_ident("variable, `(`, or `[`")?;
                Ok(WordExpr::Var(name))
            }
        }
    }

    fn parse_ident(&mut self, what: &str) -> Result<String> {
        let start = self.pos;
        match self.peek() {
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => self.pos += 1,
            _ => return Err(self.expected(what)),
        }
        while let Some(b) = self.peek() {
            if b.is_ascii_alphanumeric() || b == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("identifier bytes are ASCII")
            .to_string())
    }

    fn parse_integer(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.expected("integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ASCII")
            .parse()
            .map_err(|_| self.expected("integer within range"))
    }
}

impl WordExpr {
    fn write_product(&self, out: &mut String) {
        match self {
            WordExpr::Mul(l, r) => {
                l.write_product(out);
                out.push_str(" * ");
                if matches!(**r, WordExpr::Mul(..)) {
                    out.push('(');
                    r.write_product(out);
                    out.push(')');
                } else {
                    r.write_factor(out);
                }
            }
            _ => self.write_factor(out),
        }
    }

    fn write_factor(&self, out: &mut String) {
        match self {
            WordExpr::Var(name) => out.push_str(name),
            WordExpr::Mul(..) => {
                out.push('(');
                self.write_product(out);
                out.push(')');
            }
            WordExpr::Inv(x) => {
                x.write_factor(out);
                out.push_str("^-1");
            }
            WordExpr::Conj { base, by } => {
                base.write_factor(out);
                out.push('^');
                if let WordExpr::Var(name) = &**by {
                    out.push_str(name);
                } else {
                    out.push('(');
                    by.write_product(out);
                    out.push(')');
                }
            }
            WordExpr::EngelComm { left, right, depth } => {
                out.push('[');
                left.write_product(out);
                if *depth == 1 {
                    out.push_str(", ");
                } else {
                    out.push_str(&format!(",_{depth} "));
                }
                right.write_product(out);
                out.push(']');
            }
        }
    }

    /// Variable names referenced by this word, in first-use order.
    pub fn variables(&self) -> Vec<String> {
        fn walk(expr: &WordExpr, seen: &mut Vec<String>) {
            match expr {
                WordExpr::Var(name) => {
                    if !seen.iter().any(|s| s == name) {
                        seen.push(name.clone());
                    }
                }
                WordExpr::Mul(l, r) => {
                    walk(l, seen);
                    walk(r, seen);
                }
                WordExpr::Inv(x) => walk(x, seen),
                WordExpr::Conj { base, by } => {
                    walk(base, seen);
                    walk(by, seen);
                }
                WordExpr::EngelComm { left, right, .. } => {
                    walk(left, seen);
                    walk(right, seen);
                }
            }
        }
        let mut seen = Vec::new();
        walk(self, &mut seen);
        seen
    }
}

impl std::fmt::Display for WordExpr {
    /// Canonical form: `parse_word(w.to_string())` reproduces `w` exactly.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut out = String::new();
        self.write_product(&mut out);
        f.write_str(&out)
    }
}

/// Variable assignment for evaluation; every bound element must belong to
/// the same group.
#[derive(Clone, Debug)]
pub struct Binding {
    group: FiniteGroup,
    vars: HashMap<String, usize>,
}

impl Binding {
    pub fn new(group: &FiniteGroup) -> Self {
        Binding {
            group: group.clone(),
            vars: HashMap::new(),
        }
    }

    pub fn bind(&mut self, name: &str, value: &GroupElement) -> Result<()> {
        if !self.group.same_group(value.group()) {
            return Err(Error::GroupMismatch);
        }
        self.vars.insert(name.to_string(), value.index());
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn get(&self, name: &str) -> Option<GroupElement> {
        self.vars.get(name).map(|&i| self.group.element(i))
    }
}

/// Evaluates a word under a binding by table lookups.
pub fn eval_word(word: &WordExpr, env: &Binding) -> Result<GroupElement> {
    Ok(env.group.element(eval_idx(word, env)?))
}

fn eval_idx(word: &WordExpr, env: &Binding) -> Result<usize> {
    let g = &env.group;
    match word {
        WordExpr::Var(name) => env
            .vars
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnboundVariable(name.clone())),
        WordExpr::Mul(l, r) => Ok(g.mul_idx(eval_idx(l, env)?, eval_idx(r, env)?)),
        WordExpr::Inv(x) => Ok(g.inv_idx(eval_idx(x, env)?)),
        WordExpr::Conj { base, by } => Ok(g.conj_idx(eval_idx(base, env)?, eval_idx(by, env)?)),
        WordExpr::EngelComm { left, right, depth } => {
            // Iterative, so large depths cost no stack.
            Ok(g.engel_idx(eval_idx(left, env)?, eval_idx(right, env)?, *depth))
        }
    }
}

/// The n-fold nested commutator `[x,_n g]`, computed iteratively. Depth 0
/// returns `x` unchanged (the grammar forbids it; only the evaluator's
/// recursion base uses it).
pub fn engel_word(x: &GroupElement, g: &GroupElement, n: u32) -> Result<GroupElement> {
    if !x.group().same_group(g.group()) {
        return Err(Error::GroupMismatch);
    }
    Ok(x.group()
        .element(x.group().engel_idx(x.index(), g.index(), n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use proptest::prelude::*;

    fn var(name: &str) -> WordExpr {
        WordExpr::Var(name.to_string())
    }

    #[test]
    fn parses_commutator_forms() {
        assert_eq!(
            parse_word("[x, y]").unwrap(),
            WordExpr::EngelComm {
                left: Box::new(var("x")),
                right: Box::new(var("y")),
                depth: 1,
            }
        );
        assert_eq!(
            parse_word("[x,_3 y]").unwrap(),
            WordExpr::EngelComm {
                left: Box::new(var("x")),
                right: Box::new(var("y")),
                depth: 3,
            }
        );
        assert_eq!(
            parse_word("x^y").unwrap(),
            WordExpr::Conj {
                base: Box::new(var("x")),
                by: Box::new(var("y")),
            }
        );
    }

    #[test]
    fn depth_zero_is_a_syntax_error() {
        assert!(matches!(parse_word("[x,_0 y]"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn reports_error_position() {
        match parse_word("x * ") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn product_is_left_associative_and_conjugation_chains() {
        assert_eq!(
            parse_word("x * y * z").unwrap(),
            WordExpr::Mul(
                Box::new(WordExpr::Mul(Box::new(var("x")), Box::new(var("y")))),
                Box::new(var("z"))
            )
        );
        assert_eq!(
            parse_word("x^y^z").unwrap(),
            WordExpr::Conj {
                base: Box::new(WordExpr::Conj {
                    base: Box::new(var("x")),
                    by: Box::new(var("y")),
                }),
                by: Box::new(var("z")),
            }
        );
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse_word("[ x ,_2   y ] * z^-1").unwrap(),
            parse_word("[x,_2 y]*z^-1").unwrap()
        );
    }

    #[test]
    fn d8_commutator_of_r_s_is_r_squared() {
        // Direct table evaluation under r^4 = s^2 = 1, rsr = s; by-hand
        // expansions of r^-1 s^-1 r s sometimes misreport this value as s.
        let d8 = catalog("D8").unwrap();
        let mut env = Binding::new(&d8);
        env.bind("x", &d8.by_label("r").unwrap()).unwrap();
        env.bind("y", &d8.by_label("s").unwrap()).unwrap();
        let comm = eval_word(&parse_word("[x, y]").unwrap(), &env).unwrap();
        assert_eq!(comm.label(), "r^2");

        let triple = eval_word(&parse_word("[x,_3 y]").unwrap(), &env).unwrap();
        assert!(triple.is_identity());
    }

    #[test]
    fn self_commutator_is_identity() {
        for name in ["C4", "S3", "D8", "Q8"] {
            let g = catalog(name).unwrap();
            let word = parse_word("[x, y]").unwrap();
            for e in g.elements() {
                let mut env = Binding::new(&g);
                env.bind("x", &e).unwrap();
                env.bind("y", &e).unwrap();
                assert!(eval_word(&word, &env).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn engel_word_examples() {
        let d8 = catalog("D8").unwrap();
        let r = d8.by_label("r").unwrap();
        let s = d8.by_label("s").unwrap();
        // [r, s] = r^2 and [r^2, s] = 1, so depth 2 already vanishes.
        assert!(engel_word(&r, &s, 2).unwrap().is_identity());

        let s3 = catalog("S3").unwrap();
        let rot = s3.by_label("(1 2 3)").unwrap();
        let swap = s3.by_label("(1 2)").unwrap();
        // [a, t] = a for a 3-cycle a and transposition t: a fixed point.
        for n in 1..=6 {
            assert_eq!(engel_word(&rot, &swap, n).unwrap(), rot);
        }

        for g in s3.elements() {
            for n in 1..=4 {
                assert!(engel_word(&s3.identity(), &g, n).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn engel_word_matches_bracket_evaluation() {
        let q8 = catalog("Q8").unwrap();
        for n in 1..=4 {
            let word = parse_word(&format!("[x,_{n} y]")).unwrap();
            for x in q8.elements() {
                for y in q8.elements() {
                    let mut env = Binding::new(&q8);
                    env.bind("x", &x).unwrap();
                    env.bind("y", &y).unwrap();
                    assert_eq!(
                        eval_word(&word, &env).unwrap(),
                        engel_word(&x, &y, n).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn engel_recurrence_holds() {
        // [x,_(n+1) g] = [[x,_n g], g]
        for name in ["S3", "D8", "A4"] {
            let g = catalog(name).unwrap();
            for x in g.elements() {
                for y in g.elements() {
                    for n in 1..=3 {
                        let inner = engel_word(&x, &y, n).unwrap();
                        assert_eq!(
                            engel_word(&x, &y, n + 1).unwrap(),
                            inner.commutator(&y).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn huge_engel_depths_evaluate_iteratively() {
        // Depth is data, not AST nesting, so no recursion depth is involved.
        let d8 = catalog("D8").unwrap();
        let word = parse_word("[x,_50000 y]").unwrap();
        let mut env = Binding::new(&d8);
        env.bind("x", &d8.by_label("r").unwrap()).unwrap();
        env.bind("y", &d8.by_label("s").unwrap()).unwrap();
        assert!(eval_word(&word, &env).unwrap().is_identity());

        let r = d8.by_label("r").unwrap();
        let s = d8.by_label("s").unwrap();
        assert!(engel_word(&r, &s, 50_000).unwrap().is_identity());
    }

    #[test]
    fn unbound_variable_is_reported() {
        let d8 = catalog("D8").unwrap();
        let env = Binding::new(&d8);
        assert!(matches!(
            eval_word(&parse_word("x * y").unwrap(), &env),
            Err(Error::UnboundVariable(_))
        ));
    }

    #[test]
    fn binding_rejects_foreign_elements() {
        let d8 = catalog("D8").unwrap();
        let s3 = catalog("S3").unwrap();
        let mut env = Binding::new(&d8);
        assert!(matches!(
            env.bind("x", &s3.identity()),
            Err(Error::GroupMismatch)
        ));
    }

    fn arb_word() -> impl Strategy<Value = WordExpr> {
        let leaf = prop_oneof![
            Just(var("x")),
            Just(var("y")),
            Just(var("z")),
            Just(var("a_1")),
        ];
        leaf.prop_recursive(5, 64, 4, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| WordExpr::Mul(Box::new(l), Box::new(r))),
                inner.clone().prop_map(|x| WordExpr::Inv(Box::new(x))),
                (inner.clone(), inner.clone()).prop_map(|(base, by)| WordExpr::Conj {
                    base: Box::new(base),
                    by: Box::new(by),
                }),
                (inner.clone(), inner, 1u32..4).prop_map(|(left, right, depth)| {
                    WordExpr::EngelComm {
                        left: Box::new(left),
                        right: Box::new(right),
                        depth,
                    }
                }),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(word in arb_word()) {
            let printed = word.to_string();
            let reparsed = parse_word(&printed).unwrap();
            prop_assert_eq!(reparsed, word);
        }
    }
}
