//! The fixed axiom-scheme catalog.
//!
//! Metavariables: `A`, `B`, `C` range over formulas, `t`, `u` over terms and
//! `x` over variables.
//!
//! | family | id      | instance                                           |
//! |--------|---------|----------------------------------------------------|
//! | LOGIC  | ID      | `A → A`                                            |
//! | LOGIC  | K       | `A → (B → A)`                                      |
//! | LOGIC  | S       | `(A → (B → C)) → ((A → B) → (A → C))`              |
//! | LOGIC  | CONTRA  | `(¬A → ¬B) → (B → A)`                              |
//! | LOGIC  | INST    | `∀x A → A[t/x]`, `t` free for `x` in `A`           |
//! | LOGIC  | DIST    | `∀x (A → B) → (∀x A → ∀x B)`                       |
//! | LOGIC  | VAC     | `A → ∀x A`, `x` not free in `A`                    |
//! | LOGIC  | REFL    | `t = t`                                            |
//! | LOGIC  | EQSUB   | `t = u → (A[t/x] → A[u/x])`                        |
//! | PA     | SUCC0   | `¬(s(t) = 0)`                                      |
//! | PA     | SUCCINJ | `s(t) = s(u) → t = u`                              |
//! | PA     | ADD0    | `t + 0 = t`                                        |
//! | PA     | ADDS    | `t + s(u) = s(t + u)`                              |
//! | PA     | MUL0    | `t · 0 = 0`                                        |
//! | PA     | MULS    | `t · s(u) = t · u + t`                             |
//! | PA     | LT0     | `¬(t < 0)`                                         |
//! | PA     | LTSUCC  | `t < s(t)`                                         |
//! | PA     | LTS     | `t < s(u) → (¬(t < u) → t = u)`                    |
//! | PA     | LTMONO  | `t < u → t < s(u)`                                 |
//! | PA     | IND     | `A[0/x] → (∀x (A → A[s(x)/x]) → ∀x A)`             |

use super::proof::{AxiomFamily, Binding, Bindings};
use super::syntax::{Formula, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    Formula,
    Term,
    Var,
}

#[derive(Debug, PartialEq, Eq)]
pub enum SchemeError {
    Arity(String),
    SideCondition(String),
}

pub struct Scheme {
    pub family: AxiomFamily,
    pub id: &'static str,
    pub params: &'static [(&'static str, ParamKind)],
    build: fn(&Args) -> Result<Formula, SchemeError>,
}

struct Args<'a>(&'a Bindings);

impl Args<'_> {
    fn f(&self, n: &str) -> Formula {
        match self.0.get(n) {
            Some(Binding::Formula(f)) => f.clone(),
            _ => unreachable!("validated formula binding {n}"),
        }
    }

    fn t(&self, n: &str) -> Term {
        match self.0.get(n) {
            Some(Binding::Term(t)) => t.clone(),
            _ => unreachable!("validated term binding {n}"),
        }
    }

    fn v(&self, n: &str) -> String {
        match self.0.get(n) {
            Some(Binding::Term(Term::Var(x))) => x.clone(),
            _ => unreachable!("validated variable binding {n}"),
        }
    }
}

use Formula as F;
use ParamKind::{Formula as PF, Term as PT, Var as PV};

fn subst(a: &Formula, x: &str, t: &Term) -> Result<Formula, SchemeError> {
    a.subst(x, t)
        .ok_or_else(|| SchemeError::SideCondition(format!("{t} is not free for {x} in {a}")))
}

static CATALOG: &[Scheme] = &[
    Scheme {
        family: AxiomFamily::Logic,
        id: "ID",
        params: &[("A", PF)],
        build: |a| Ok(F::imp(a.f("A"), a.f("A"))),
    },
    Scheme {
        family: AxiomFamily::Logic,
        id: "K",
        params: &[("A", PF), ("B", PF)],
        build: |a| Ok(F::imp(a.f("A"), F::imp(a.f("B"), a.f("A")))),
    },
    Scheme {
        family: AxiomFamily::Logic,
        id: "S",
        params: &[("A", PF), ("B", PF), ("C", PF)],
        build: |a| {
            let (p, q, r) = (a.f("A"), a.f("B"), a.f("C"));
            Ok(F::imp(
                F::imp(p.clone(), F::imp(q.clone(), r.clone())),
                F::imp(F::imp(p.clone(), q), F::imp(p, r)),
            ))
        },
    },
    Scheme {
        family: AxiomFamily::Logic,
        id: "CONTRA",
        params: &[("A", PF), ("B", PF)],
        build: |a| {
            let (p, q) = (a.f("A"), a.f("B"));
            Ok(F::imp(
                F::imp(F::not(p.clone()), F::not(q.clone())),
                F::imp(q, p),
            ))
        },
    },
    Scheme {
        family: AxiomFamily::Logic,
        id: "INST",
        params: &[("x", PV), ("A", PF), ("t", PT)],
        build: |a| {
            let (x, body, t) = (a.v("x"), a.f("A"), a.t("t"));
            Ok(F::imp(F::forall(&x, body.clone()), subst(&body, &x, &t)?))
        },
    },
    Scheme {
        family: AxiomFamily::Logic,
        id: "DIST",
        params: &[("x", PV), ("A", PF), ("B", PF)],
        build: |a| {
            let (x, p, q) = (a.v("x"), a.f("A"), a.f("B"));
            Ok(F::imp(
                F::forall(&x, F::imp(p.clone(), q.clone())),
                F::imp(F::forall(&x, p), F::forall(&x, q)),
            ))
        },
    },
    Scheme {
        family: AxiomFamily::Logic,
        id: "VAC",
        params: &[("A", PF), ("x", PV)],
        build: |a| {
            let (p, x) = (a.f("A"), a.v("x"));
            if p.free_vars().contains(&x) {
                return Err(SchemeError::SideCondition(format!("{x} is free in {p}")));
            }
            Ok(F::imp(p.clone(), F::forall(&x, p)))
        },
    },
    Scheme {
        family: AxiomFamily::Logic,
        id: "REFL",
        params: &[("t", PT)],
        build: |a| Ok(F::Eq(a.t("t"), a.t("t"))),
    },
    Scheme {
        family: AxiomFamily::Logic,
        id: "EQSUB",
        params: &[("t", PT), ("u", PT), ("x", PV), ("A", PF)],
        build: |a| {
            let (t, u, x, p) = (a.t("t"), a.t("u"), a.v("x"), a.f("A"));
            Ok(F::imp(
                F::Eq(t.clone(), u.clone()),
                F::imp(subst(&p, &x, &t)?, subst(&p, &x, &u)?),
            ))
        },
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "SUCC0",
        params: &[("t", PT)],
        build: |a| Ok(F::not(F::Eq(Term::succ(a.t("t")), Term::Zero))),
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "SUCCINJ",
        params: &[("t", PT), ("u", PT)],
        build: |a| {
            let (t, u) = (a.t("t"), a.t("u"));
            Ok(F::imp(
                F::Eq(Term::succ(t.clone()), Term::succ(u.clone())),
                F::Eq(t, u),
            ))
        },
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "ADD0",
        params: &[("t", PT)],
        build: |a| Ok(F::Eq(Term::plus(a.t("t"), Term::Zero), a.t("t"))),
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "ADDS",
        params: &[("t", PT), ("u", PT)],
        build: |a| {
            let (t, u) = (a.t("t"), a.t("u"));
            Ok(F::Eq(
                Term::plus(t.clone(), Term::succ(u.clone())),
                Term::succ(Term::plus(t, u)),
            ))
        },
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "MUL0",
        params: &[("t", PT)],
        build: |a| Ok(F::Eq(Term::times(a.t("t"), Term::Zero), Term::Zero)),
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "MULS",
        params: &[("t", PT), ("u", PT)],
        build: |a| {
            let (t, u) = (a.t("t"), a.t("u"));
            Ok(F::Eq(
                Term::times(t.clone(), Term::succ(u.clone())),
                Term::plus(Term::times(t.clone(), u), t),
            ))
        },
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "LT0",
        params: &[("t", PT)],
        build: |a| Ok(F::not(F::Lt(a.t("t"), Term::Zero))),
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "LTSUCC",
        params: &[("t", PT)],
        build: |a| Ok(F::Lt(a.t("t"), Term::succ(a.t("t")))),
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "LTS",
        params: &[("t", PT), ("u", PT)],
        build: |a| {
            let (t, u) = (a.t("t"), a.t("u"));
            Ok(F::imp(
                F::Lt(t.clone(), Term::succ(u.clone())),
                F::imp(F::not(F::Lt(t.clone(), u.clone())), F::Eq(t, u)),
            ))
        },
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "LTMONO",
        params: &[("t", PT), ("u", PT)],
        build: |a| {
            let (t, u) = (a.t("t"), a.t("u"));
            Ok(F::imp(
                F::Lt(t.clone(), u.clone()),
                F::Lt(t, Term::succ(u)),
            ))
        },
    },
    Scheme {
        family: AxiomFamily::Pa,
        id: "IND",
        params: &[("x", PV), ("A", PF)],
        build: |a| {
            let (x, p) = (a.v("x"), a.f("A"));
            let base = subst(&p, &x, &Term::Zero)?;
            let step = subst(&p, &x, &Term::succ(Term::Var(x.clone())))?;
            Ok(F::imp(
                base,
                F::imp(F::forall(&x, F::imp(p.clone(), step)), F::forall(&x, p)),
            ))
        },
    },
];

pub fn lookup(family: AxiomFamily, id: &str) -> Option<&'static Scheme> {
    CATALOG.iter().find(|s| s.family == family && s.id == id)
}

pub fn catalog() -> &'static [Scheme] {
    CATALOG
}

fn kind_matches(kind: ParamKind, b: &Binding) -> bool {
    matches!(
        (kind, b),
        (ParamKind::Formula, Binding::Formula(_))
            | (ParamKind::Term, Binding::Term(_))
            | (ParamKind::Var, Binding::Term(Term::Var(_)))
    )
}

impl Scheme {
    /// The instance of this scheme under `bindings`, after checking that they
    /// name exactly the scheme's metavariables with the right kinds.
    pub fn instantiate(&self, bindings: &Bindings) -> Result<Formula, SchemeError> {
        for (name, _) in &bindings.0 {
            if !self.params.iter().any(|(p, _)| p == name) {
                return Err(SchemeError::Arity(format!(
                    "{} has no metavariable {name}",
                    self.id
                )));
            }
            if bindings.0.iter().filter(|(n, _)| n == name).count() > 1 {
                return Err(SchemeError::Arity(format!("{name} bound twice")));
            }
        }
        for (name, kind) in self.params {
            match bindings.get(name) {
                None => {
                    return Err(SchemeError::Arity(format!(
                        "{} needs a binding for {name}",
                        self.id
                    )))
                }
                Some(b) if !kind_matches(*kind, b) => {
                    return Err(SchemeError::Arity(format!(
                        "{name} must bind a {}",
                        match kind {
                            ParamKind::Formula => "formula",
                            ParamKind::Term => "term",
                            ParamKind::Var => "variable",
                        }
                    )))
                }
                Some(_) => {}
            }
        }
        (self.build)(&Args(bindings))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fb(f: Formula) -> Binding {
        Binding::Formula(f)
    }

    #[test]
    fn k_instance() {
        let s = lookup(AxiomFamily::Logic, "K").unwrap();
        let a = F::Eq(Term::Zero, Term::Zero);
        let b = F::Lt(Term::Zero, Term::Omega);
        let inst = s
            .instantiate(&Bindings(vec![("A".into(), fb(a)), ("B".into(), fb(b))]))
            .unwrap();
        assert_eq!(inst.to_string(), "(imp (= 0 0) (imp (< 0 w) (= 0 0)))");
    }

    #[test]
    fn arity_errors() {
        let s = lookup(AxiomFamily::Logic, "K").unwrap();
        let a = F::Eq(Term::Zero, Term::Zero);
        assert!(matches!(
            s.instantiate(&Bindings(vec![("A".into(), fb(a.clone()))])),
            Err(SchemeError::Arity(_))
        ));
        assert!(matches!(
            s.instantiate(&Bindings(vec![
                ("A".into(), fb(a.clone())),
                ("B".into(), Binding::Term(Term::Zero))
            ])),
            Err(SchemeError::Arity(_))
        ));
        assert!(matches!(
            s.instantiate(&Bindings(vec![
                ("A".into(), fb(a.clone())),
                ("B".into(), fb(a.clone())),
                ("C".into(), fb(a))
            ])),
            Err(SchemeError::Arity(_))
        ));
    }

    #[test]
    fn side_conditions() {
        let vac = lookup(AxiomFamily::Logic, "VAC").unwrap();
        let open = F::Eq(Term::var("x"), Term::Zero);
        let r = vac.instantiate(&Bindings(vec![
            ("A".into(), fb(open)),
            ("x".into(), Binding::Term(Term::var("x"))),
        ]));
        assert!(matches!(r, Err(SchemeError::SideCondition(_))));
    }

    #[test]
    fn induction_shape() {
        let ind = lookup(AxiomFamily::Pa, "IND").unwrap();
        let p = F::Eq(Term::plus(Term::Zero, Term::var("x")), Term::var("x"));
        let inst = ind
            .instantiate(&Bindings(vec![
                ("x".into(), Binding::Term(Term::var("x"))),
                ("A".into(), fb(p)),
            ]))
            .unwrap();
        assert_eq!(
            inst.to_string(),
            "(imp (= (+ 0 0) 0) (imp (forall x (imp (= (+ 0 x) x) (= (+ 0 (s x)) (s x)))) (forall x (= (+ 0 x) x))))"
        );
    }

    #[test]
    fn catalog_ids_unique() {
        for (i, s) in catalog().iter().enumerate() {
            assert!(catalog()[i + 1..]
                .iter()
                .all(|o| o.id != s.id || o.family != s.family));
        }
    }
}
