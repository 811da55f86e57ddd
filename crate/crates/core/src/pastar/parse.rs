//! The line-oriented proof file format.
//!
//! ```text
//! <index> | <formula> | <justification>
//! ```
//!
//! Formulas and terms are s-expressions: `(= t t)`, `(< t t)`, `(not f)`,
//! `(imp f f)`, `(forall x f)`; `0`, `(s t)`, `(+ t t)`, `(* t t)`, a
//! variable, `w` for `ω`, `(num k)`. Justifications are `PA <id> [bindings]`,
//! `LOGIC <id> [bindings]`, `OMEGA <n>`, `NUMFACT`, `MP <i> <j>` and
//! `GEN <i> <var>`, where a binding is `NAME=<s-expression>`. Blank lines and
//! lines starting with `#` are ignored.

use thiserror::Error;

use super::proof::{AxiomFamily, Binding, Bindings, Justification, Line, Proof};
use super::syntax::{Formula, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at {line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Sexp {
    Atom(String, usize),
    List(Vec<Sexp>, usize),
}

impl Sexp {
    fn column(&self) -> usize {
        match self {
            Sexp::Atom(_, c) | Sexp::List(_, c) => *c,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Atom(String),
}

/// Tokens with 1-based columns relative to the start of the segment plus
/// `offset`.
fn lex(src: &str, offset: usize) -> Vec<(Tok, usize)> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let col = offset + src[..i].chars().count() + 1;
        match c {
            '(' => {
                out.push((Tok::Open, col));
                chars.next();
            }
            ')' => {
                out.push((Tok::Close, col));
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            _ => {
                let mut atom = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' {
                        break;
                    }
                    atom.push(c);
                    chars.next();
                }
                out.push((Tok::Atom(atom), col));
            }
        }
    }
    out
}

struct Cursor<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn fail<T>(&self, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line,
            column,
            message: message.into(),
        })
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn next_tok(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn sexp(&mut self) -> Result<Sexp, ParseError> {
        match self.next_tok() {
            None => self.fail(self.end_col, "unexpected end of input"),
            Some((Tok::Close, c)) => self.fail(c, "unexpected `)`"),
            Some((Tok::Atom(a), c)) => Ok(Sexp::Atom(a, c)),
            Some((Tok::Open, c)) => {
                let mut items = Vec::new();
                loop {
                    match self.toks.get(self.pos) {
                        None => return self.fail(self.end_col, "unclosed `(`"),
                        Some((Tok::Close, _)) => {
                            self.pos += 1;
                            return Ok(Sexp::List(items, c));
                        }
                        Some(_) => items.push(self.sexp()?),
                    }
                }
            }
        }
    }
}

const RESERVED: &[&str] = &["w", "s", "num", "not", "imp", "forall"];

fn is_variable(name: &str) -> bool {
    let mut cs = name.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_lowercase())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && !RESERVED.contains(&name)
}

fn perr<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

fn to_term(e: &Sexp, line: usize) -> Result<Term, ParseError> {
    match e {
        Sexp::Atom(a, c) => match a.as_str() {
            "0" => Ok(Term::Zero),
            "w" => Ok(Term::Omega),
            v if is_variable(v) => Ok(Term::Var(v.to_string())),
            other => perr(line, *c, format!("`{other}` is not a term")),
        },
        Sexp::List(items, c) => {
            let head = match items.first() {
                Some(Sexp::Atom(h, _)) => h.as_str(),
                _ => return perr(line, *c, "expected a term operator"),
            };
            let args = &items[1..];
            let arity = |n: usize| -> Result<(), ParseError> {
                if args.len() == n {
                    Ok(())
                } else {
                    perr(line, *c, format!("`{head}` takes {n} argument(s)"))
                }
            };
            match head {
                "s" => {
                    arity(1)?;
                    Ok(Term::succ(to_term(&args[0], line)?))
                }
                "+" => {
                    arity(2)?;
                    Ok(Term::plus(to_term(&args[0], line)?, to_term(&args[1], line)?))
                }
                "*" => {
                    arity(2)?;
                    Ok(Term::times(to_term(&args[0], line)?, to_term(&args[1], line)?))
                }
                "num" => {
                    arity(1)?;
                    match &args[0] {
                        Sexp::Atom(k, kc) => k
                            .parse()
                            .map(Term::Num)
                            .or_else(|_| perr(line, *kc, format!("`{k}` is not a natural number"))),
                        other => perr(line, other.column(), "numeral expects a natural number"),
                    }
                }
                other => perr(line, *c, format!("unknown term operator `{other}`")),
            }
        }
    }
}

const FORMULA_HEADS: &[&str] = &["=", "<", "not", "imp", "forall"];

fn to_formula(e: &Sexp, line: usize) -> Result<Formula, ParseError> {
    let (items, c) = match e {
        Sexp::List(items, c) => (items, *c),
        Sexp::Atom(a, c) => return perr(line, *c, format!("`{a}` is not a formula")),
    };
    let head = match items.first() {
        Some(Sexp::Atom(h, _)) if FORMULA_HEADS.contains(&h.as_str()) => h.as_str(),
        _ => return perr(line, c, "expected one of =, <, not, imp, forall"),
    };
    let args = &items[1..];
    let want = if head == "not" { 1 } else { 2 };
    if args.len() != want {
        return perr(line, c, format!("`{head}` takes {want} argument(s)"));
    }
    Ok(match head {
        "=" => Formula::Eq(to_term(&args[0], line)?, to_term(&args[1], line)?),
        "<" => Formula::Lt(to_term(&args[0], line)?, to_term(&args[1], line)?),
        "not" => Formula::not(to_formula(&args[0], line)?),
        "imp" => Formula::imp(to_formula(&args[0], line)?, to_formula(&args[1], line)?),
        _ => match &args[0] {
            Sexp::Atom(x, _) if is_variable(x) => Formula::forall(x, to_formula(&args[1], line)?),
            other => return perr(line, other.column(), "forall expects a variable"),
        },
    })
}

fn to_binding(e: &Sexp, line: usize) -> Result<Binding, ParseError> {
    match e {
        Sexp::List(items, _)
            if matches!(items.first(), Some(Sexp::Atom(h, _)) if FORMULA_HEADS.contains(&h.as_str())) =>
        {
            Ok(Binding::Formula(to_formula(e, line)?))
        }
        _ => Ok(Binding::Term(to_term(e, line)?)),
    }
}

/// Parses a single formula, e.g. `(imp (< (num 5) w) (= 0 0))`.
pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    let toks = lex(src, 0);
    let mut cur = Cursor {
        toks: &toks,
        pos: 0,
        line: 1,
        end_col: src.chars().count() + 1,
    };
    let e = cur.sexp()?;
    if !cur.at_end() {
        return cur.fail(cur.here(), "trailing input after formula");
    }
    to_formula(&e, 1)
}

fn parse_justification(src: &str, offset: usize, line: usize) -> Result<Justification, ParseError> {
    let toks = lex(src, offset);
    let mut cur = Cursor {
        toks: &toks,
        pos: 0,
        line,
        end_col: offset + src.chars().count() + 1,
    };
    let word = |cur: &mut Cursor, what: &str| -> Result<(String, usize), ParseError> {
        match cur.next_tok() {
            Some((Tok::Atom(a), c)) => Ok((a, c)),
            Some((_, c)) => cur.fail(c, format!("expected {what}")),
            None => cur.fail(cur.end_col, format!("expected {what}")),
        }
    };
    let number = |cur: &mut Cursor, what: &str| -> Result<usize, ParseError> {
        let (a, c) = word(cur, what)?;
        a.parse().or_else(|_| cur.fail(c, format!("`{a}` is not {what}")))
    };
    let (tag, tag_col) = word(&mut cur, "a justification")?;
    let just = match tag.as_str() {
        "PA" | "LOGIC" => {
            let family = if tag == "PA" {
                AxiomFamily::Pa
            } else {
                AxiomFamily::Logic
            };
            let (scheme, _) = word(&mut cur, "a scheme id")?;
            let mut bindings = Vec::new();
            while !cur.at_end() {
                let (raw, c) = word(&mut cur, "a binding NAME=<expr>")?;
                let Some((name, rest)) = raw.split_once('=') else {
                    return cur.fail(c, format!("`{raw}` is not a binding NAME=<expr>"));
                };
                if name.is_empty() {
                    return cur.fail(c, "binding needs a name");
                }
                let value = if rest.is_empty() {
                    cur.sexp()?
                } else {
                    Sexp::Atom(rest.to_string(), c + name.chars().count() + 1)
                };
                bindings.push((name.to_string(), to_binding(&value, line)?));
            }
            Justification::Axiom {
                family,
                scheme,
                bindings: Bindings(bindings),
            }
        }
        "OMEGA" => {
            let (a, c) = word(&mut cur, "a natural number")?;
            let n = a
                .parse()
                .or_else(|_| cur.fail(c, format!("`{a}` is not a natural number")))?;
            Justification::OmegaGt(n)
        }
        "NUMFACT" => Justification::NumeralFact,
        "MP" => {
            let i = number(&mut cur, "a line number")?;
            let j = number(&mut cur, "a line number")?;
            Justification::Mp(i, j)
        }
        "GEN" => {
            let i = number(&mut cur, "a line number")?;
            let (x, c) = word(&mut cur, "a variable")?;
            if !is_variable(&x) {
                return cur.fail(c, format!("`{x}` is not a variable"));
            }
            Justification::Gen(i, x)
        }
        other => return cur.fail(tag_col, format!("unknown justification `{other}`")),
    };
    if !cur.at_end() {
        return cur.fail(cur.here(), "trailing input after justification");
    }
    Ok(just)
}

/// Parses a whole proof file.
pub fn parse_proof(src: &str) -> Result<Proof, ParseError> {
    let mut proof = Proof::new();
    for (n, raw) in src.lines().enumerate() {
        let line_no = n + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = raw.splitn(3, '|').collect();
        if parts.len() != 3 {
            return perr(line_no, 1, "expected `<index> | <formula> | <justification>`");
        }
        let index: usize = parts[0]
            .trim()
            .parse()
            .or_else(|_| perr(line_no, 1, format!("`{}` is not a line index", parts[0].trim())))?;
        let f_off = parts[0].chars().count() + 1;
        let toks = lex(parts[1], f_off);
        let mut cur = Cursor {
            toks: &toks,
            pos: 0,
            line: line_no,
            end_col: f_off + parts[1].chars().count() + 1,
        };
        let e = cur.sexp()?;
        if !cur.at_end() {
            return cur.fail(cur.here(), "trailing input after formula");
        }
        let formula = to_formula(&e, line_no)?;
        let j_off = f_off + parts[1].chars().count() + 1;
        let justification = parse_justification(parts[2], j_off, line_no)?;
        proof.lines.push(Line {
            index,
            formula,
            justification,
        });
    }
    Ok(proof)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas_round_trip() {
        for src in [
            "(< (num 5) w)",
            "(imp (forall x (= (+ x 0) x)) (not (< (s (s 0)) (* y w))))",
            "(= 0 0)",
        ] {
            assert_eq!(parse_formula(src).unwrap().to_string(), src);
        }
    }

    #[test]
    fn a_small_file() {
        let src = "\
# identity
1 | (< (num 5) w) | OMEGA 5
2 | (imp (< (num 5) w) (< (num 5) w)) | LOGIC ID A=(< (num 5) w)

3 | (< (num 5) w) | MP 1 2
";
        let p = parse_proof(src).unwrap();
        assert_eq!(p.lines.len(), 3);
        assert_eq!(p.lines[2].justification, Justification::Mp(1, 2));
        assert_eq!(
            p.to_string(),
            "1 | (< (num 5) w) | OMEGA 5\n\
             2 | (imp (< (num 5) w) (< (num 5) w)) | LOGIC ID A=(< (num 5) w)\n\
             3 | (< (num 5) w) | MP 1 2\n"
        );
    }

    #[test]
    fn atom_bindings() {
        let p = parse_proof("1 | (= w w) | LOGIC REFL t=w\n").unwrap();
        match &p.lines[0].justification {
            Justification::Axiom { bindings, .. } => {
                assert_eq!(bindings.get("t"), Some(&Binding::Term(Term::Omega)))
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_proof("1 | (< (num 5) w | OMEGA 5\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.message.contains("unclosed"));
        let e = parse_proof("1 | (< 5 w) | OMEGA 5\n").unwrap_err();
        assert_eq!(e.column, 8);
        let e = parse_proof("\n\n1 | (= 0 0) | FROB\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 15));
        assert!(parse_proof("1 (= 0 0) NUMFACT\n").is_err());
        assert!(parse_proof("x | (= 0 0) | NUMFACT\n").is_err());
        assert!(parse_proof("1 | (= 0 0) | MP 1\n").is_err());
        assert!(parse_proof("1 | (= 0 0) | NUMFACT extra\n").is_err());
        assert!(parse_proof("1 | (forall w (= 0 0)) | NUMFACT\n").is_err());
    }
}
