use std::fmt;

use super::syntax::{Formula, Term};

/// Value bound to a scheme metavariable. A bare variable name parses as
/// `Term(Term::Var(_))` and is accepted wherever a variable is expected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binding {
    Formula(Formula),
    Term(Term),
}

impl Binding {
    fn replace_omega(&self, with: &Term) -> Binding {
        match self {
            Binding::Formula(f) => Binding::Formula(f.replace_omega(with)),
            Binding::Term(t) => Binding::Term(t.replace_omega(with)),
        }
    }

    fn has_omega(&self) -> bool {
        match self {
            Binding::Formula(f) => f.has_omega(),
            Binding::Term(t) => t.has_omega(),
        }
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Binding::Formula(g) => g.fmt(f),
            Binding::Term(t) => t.fmt(f),
        }
    }
}

/// Metavariable assignments, in the order they were written.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings(pub Vec<(String, Binding)>);

impl Bindings {
    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, b)| b)
    }

    pub fn replace_omega(&self, with: &Term) -> Bindings {
        Bindings(
            self.0
                .iter()
                .map(|(n, b)| (n.clone(), b.replace_omega(with)))
                .collect(),
        )
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, b) in &self.0 {
            write!(f, " {name}={b}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomFamily {
    Pa,
    Logic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Axiom {
        family: AxiomFamily,
        scheme: String,
        bindings: Bindings,
    },
    /// The instance `ω > n`, written `(< (num n) w)`.
    OmegaGt(u64),
    /// A true comparison between closed, `ω`-free terms.
    NumeralFact,
    /// Modus ponens from the minor premise `i` and the implication `j`.
    Mp(usize, usize),
    Gen(usize, String),
}

impl Justification {
    pub fn pa(scheme: &str, bindings: Vec<(&str, Binding)>) -> Self {
        Self::axiom(AxiomFamily::Pa, scheme, bindings)
    }

    pub fn logic(scheme: &str, bindings: Vec<(&str, Binding)>) -> Self {
        Self::axiom(AxiomFamily::Logic, scheme, bindings)
    }

    fn axiom(family: AxiomFamily, scheme: &str, bindings: Vec<(&str, Binding)>) -> Self {
        Justification::Axiom {
            family,
            scheme: scheme.to_string(),
            bindings: Bindings(
                bindings
                    .into_iter()
                    .map(|(n, b)| (n.to_string(), b))
                    .collect(),
            ),
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom {
                family,
                scheme,
                bindings,
            } => {
                let tag = match family {
                    AxiomFamily::Pa => "PA",
                    AxiomFamily::Logic => "LOGIC",
                };
                write!(f, "{tag} {scheme}{bindings}")
            }
            Justification::OmegaGt(n) => write!(f, "OMEGA {n}"),
            Justification::NumeralFact => f.write_str("NUMFACT"),
            Justification::Mp(i, j) => write!(f, "MP {i} {j}"),
            Justification::Gen(i, x) => write!(f, "GEN {i} {x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub index: usize,
    pub formula: Formula,
    pub justification: Justification,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.index, self.formula, self.justification)
    }
}

/// A Hilbert-style derivation; the last line is the conclusion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Proof {
    pub lines: Vec<Line>,
}

impl Proof {
    pub fn new() -> Self {
        Proof::default()
    }

    /// Appends a line numbered one past the previous and returns its index.
    pub fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        let index = self.lines.last().map_or(1, |l| l.index + 1);
        self.lines.push(Line {
            index,
            formula,
            justification,
        });
        index
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    /// Whether `ω` occurs anywhere, in formulas or in scheme bindings.
    pub fn mentions_omega(&self) -> bool {
        self.lines.iter().any(|l| {
            l.formula.has_omega()
                || matches!(&l.justification, Justification::Axiom { bindings, .. }
                    if bindings.0.iter().any(|(_, b)| b.has_omega()))
        })
    }

    pub(crate) fn map_omega(&self, m: &Term) -> Proof {
        let lines = self
            .lines
            .iter()
            .map(|l| Line {
                index: l.index,
                formula: l.formula.replace_omega(m),
                justification: match &l.justification {
                    Justification::OmegaGt(_) => Justification::NumeralFact,
                    Justification::Axiom {
                        family,
                        scheme,
                        bindings,
                    } => Justification::Axiom {
                        family: *family,
                        scheme: scheme.clone(),
                        bindings: bindings.replace_omega(m),
                    },
                    other => other.clone(),
                },
            })
            .collect();
        Proof { lines }
    }
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}
