//! Terms and formulas of PA extended with the constant `ω`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    Succ(Box<Term>),
    Plus(Box<Term>, Box<Term>),
    Times(Box<Term>, Box<Term>),
    Var(String),
    Omega,
    /// The numeral `s(s(…s(0)…))` with `k` successors, kept compact.
    Num(u64),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn succ(t: Term) -> Term {
        Term::Succ(Box::new(t))
    }

    pub fn plus(a: Term, b: Term) -> Term {
        Term::Plus(Box::new(a), Box::new(b))
    }

    pub fn times(a: Term, b: Term) -> Term {
        Term::Times(Box::new(a), Box::new(b))
    }

    /// Collapses `0`, `(num k)` and successor chains over them into `Num`, so
    /// that numerals compare equal however they are written.
    pub fn canonical(&self) -> Term {
        match self {
            Term::Zero => Term::Num(0),
            Term::Succ(t) => match t.canonical() {
                Term::Num(k) => Term::Num(k + 1),
                other => Term::succ(other),
            },
            Term::Plus(a, b) => Term::plus(a.canonical(), b.canonical()),
            Term::Times(a, b) => Term::times(a.canonical(), b.canonical()),
            Term::Var(_) | Term::Omega | Term::Num(_) => self.clone(),
        }
    }

    pub fn has_omega(&self) -> bool {
        match self {
            Term::Omega => true,
            Term::Succ(t) => t.has_omega(),
            Term::Plus(a, b) | Term::Times(a, b) => a.has_omega() || b.has_omega(),
            Term::Zero | Term::Var(_) | Term::Num(_) => false,
        }
    }

    pub fn vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::Succ(t) => t.vars(out),
            Term::Plus(a, b) | Term::Times(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Term::Zero | Term::Omega | Term::Num(_) => {}
        }
    }

    /// Value of a closed, `ω`-free term.
    pub fn eval(&self) -> Option<BigUint> {
        match self {
            Term::Zero => Some(BigUint::from(0u8)),
            Term::Num(k) => Some(BigUint::from(*k)),
            Term::Succ(t) => t.eval().map(|v| v + 1u8),
            Term::Plus(a, b) => Some(a.eval()? + b.eval()?),
            Term::Times(a, b) => Some(a.eval()? * b.eval()?),
            Term::Var(_) | Term::Omega => None,
        }
    }

    pub fn subst_var(&self, x: &str, t: &Term) -> Term {
        match self {
            Term::Var(y) if y == x => t.clone(),
            Term::Succ(a) => Term::succ(a.subst_var(x, t)),
            Term::Plus(a, b) => Term::plus(a.subst_var(x, t), b.subst_var(x, t)),
            Term::Times(a, b) => Term::times(a.subst_var(x, t), b.subst_var(x, t)),
            _ => self.clone(),
        }
    }

    pub fn replace_omega(&self, with: &Term) -> Term {
        match self {
            Term::Omega => with.clone(),
            Term::Succ(a) => Term::succ(a.replace_omega(with)),
            Term::Plus(a, b) => Term::plus(a.replace_omega(with), b.replace_omega(with)),
            Term::Times(a, b) => Term::times(a.replace_omega(with), b.replace_omega(with)),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => f.write_str("0"),
            Term::Succ(t) => write!(f, "(s {t})"),
            Term::Plus(a, b) => write!(f, "(+ {a} {b})"),
            Term::Times(a, b) => write!(f, "(* {a} {b})"),
            Term::Var(x) => f.write_str(x),
            Term::Omega => f.write_str("w"),
            Term::Num(k) => write!(f, "(num {k})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Lt(Term, Term),
    Not(Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
}

impl Formula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn forall(x: &str, f: Formula) -> Formula {
        Formula::Forall(x.to_string(), Box::new(f))
    }

    pub fn canonical(&self) -> Formula {
        match self {
            Formula::Eq(a, b) => Formula::Eq(a.canonical(), b.canonical()),
            Formula::Lt(a, b) => Formula::Lt(a.canonical(), b.canonical()),
            Formula::Not(g) => Formula::not(g.canonical()),
            Formula::Imp(a, b) => Formula::imp(a.canonical(), b.canonical()),
            Formula::Forall(x, g) => Formula::forall(x, g.canonical()),
        }
    }

    /// Equality up to how numerals are written.
    pub fn same_as(&self, other: &Formula) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn has_omega(&self) -> bool {
        match self {
            Formula::Eq(a, b) | Formula::Lt(a, b) => a.has_omega() || b.has_omega(),
            Formula::Not(g) | Formula::Forall(_, g) => g.has_omega(),
            Formula::Imp(a, b) => a.has_omega() || b.has_omega(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Eq(a, b) | Formula::Lt(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Formula::Not(g) => g.collect_free(out),
            Formula::Imp(a, b) => {
                a.collect_free(out);
                b.collect_free(out);
            }
            Formula::Forall(x, g) => {
                let mut inner = BTreeSet::new();
                g.collect_free(&mut inner);
                inner.remove(x);
                out.extend(inner);
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// `self[t/x]`, or `None` when some free `x` sits under a binder that
    /// would capture a variable of `t`.
    pub fn subst(&self, x: &str, t: &Term) -> Option<Formula> {
        let tv = {
            let mut s = BTreeSet::new();
            t.vars(&mut s);
            s
        };
        self.subst_inner(x, t, &tv)
    }

    fn subst_inner(&self, x: &str, t: &Term, tv: &BTreeSet<String>) -> Option<Formula> {
        Some(match self {
            Formula::Eq(a, b) => Formula::Eq(a.subst_var(x, t), b.subst_var(x, t)),
            Formula::Lt(a, b) => Formula::Lt(a.subst_var(x, t), b.subst_var(x, t)),
            Formula::Not(g) => Formula::not(g.subst_inner(x, t, tv)?),
            Formula::Imp(a, b) => Formula::imp(a.subst_inner(x, t, tv)?, b.subst_inner(x, t, tv)?),
            Formula::Forall(y, g) => {
                if y == x || !g.free_vars().contains(x) {
                    self.clone()
                } else if tv.contains(y) {
                    return None;
                } else {
                    Formula::forall(y, g.subst_inner(x, t, tv)?)
                }
            }
        })
    }

    pub fn replace_omega(&self, with: &Term) -> Formula {
        match self {
            Formula::Eq(a, b) => Formula::Eq(a.replace_omega(with), b.replace_omega(with)),
            Formula::Lt(a, b) => Formula::Lt(a.replace_omega(with), b.replace_omega(with)),
            Formula::Not(g) => Formula::not(g.replace_omega(with)),
            Formula::Imp(a, b) => Formula::imp(a.replace_omega(with), b.replace_omega(with)),
            Formula::Forall(x, g) => Formula::forall(x, g.replace_omega(with)),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Eq(a, b) => write!(f, "(= {a} {b})"),
            Formula::Lt(a, b) => write!(f, "(< {a} {b})"),
            Formula::Not(g) => write!(f, "(not {g})"),
            Formula::Imp(a, b) => write!(f, "(imp {a} {b})"),
            Formula::Forall(x, g) => write!(f, "(forall {x} {g})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numerals_canonicalise() {
        let t = Term::succ(Term::succ(Term::Zero));
        assert_eq!(t.canonical(), Term::Num(2));
        assert_eq!(Term::succ(Term::Num(4)).canonical(), Term::Num(5));
        assert_eq!(t.eval(), Some(BigUint::from(2u8)));
        assert_eq!(Term::Omega.eval(), None);
        let f = Formula::Lt(Term::Num(2), Term::Omega);
        assert!(f.same_as(&Formula::Lt(t, Term::Omega)));
    }

    #[test]
    fn substitution_avoids_capture() {
        // (forall y (= x y)) [y/x] would capture
        let f = Formula::forall("y", Formula::Eq(Term::var("x"), Term::var("y")));
        assert_eq!(f.subst("x", &Term::var("y")), None);
        let g = f.subst("x", &Term::Num(3)).unwrap();
        assert_eq!(g.to_string(), "(forall y (= (num 3) y))");
        // bound occurrences are left alone
        let h = Formula::forall("x", Formula::Eq(Term::var("x"), Term::Zero));
        assert_eq!(h.subst("x", &Term::var("y")), Some(h.clone()));
    }

    #[test]
    fn free_variables() {
        let f = Formula::imp(
            Formula::forall("x", Formula::Lt(Term::var("x"), Term::var("y"))),
            Formula::Eq(Term::var("x"), Term::Omega),
        );
        let fv: Vec<_> = f.free_vars().into_iter().collect();
        assert_eq!(fv, vec!["x".to_string(), "y".to_string()]);
        assert!(f.has_omega());
        assert!(!f.replace_omega(&Term::Num(3)).has_omega());
    }
}
