//! Constructive reals as regular rational sequences.
//!
//! A [`RealGen`] is a total, deterministic map from an index `v` to a
//! [`Rational`] approximant obeying the regularity modulus
//!
//! ```text
//! |x(v) - x(w)| <= 2^(-v) + 2^(-w)      for all v, w
//! ```
//!
//! so that `|x(v) - x| <= 2^(-v)` for the limit `x`. Every generator also
//! carries optional [`Facts`]: bounds that hold for *every* approximant. Those
//! facts are the only source of negative (refutation) verdicts in [`order`].
//!
//! Generators are immutable trees shared through `Arc`, so cloning is cheap and
//! concurrent evaluation is safe.

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::rational::{ceil_log2, int, Rational};

pub mod order;

pub use order::{
    apart, measurably_greater, measurably_smaller, not_measurably_smaller, ApartCert,
    MeasurablyCert, Refutation, Side, TriVerdict,
};

/// Bounds respected by every approximant of a generator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Facts {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

impl Facts {
    pub fn none() -> Self {
        Facts::default()
    }

    pub fn exact(q: &Rational) -> Self {
        Facts {
            lower: Some(q.clone()),
            upper: Some(q.clone()),
        }
    }

    pub fn nonnegative() -> Self {
        Facts {
            lower: Some(Rational::zero()),
            upper: None,
        }
    }

    fn magnitude(&self) -> Option<Rational> {
        match (&self.lower, &self.upper) {
            (Some(l), Some(u)) => Some(l.abs().max(u.abs())),
            _ => None,
        }
    }
}

/// An externally defined regular sequence.
///
/// Implementors promise regularity and determinism. Two sequences reporting
/// the same `Some` identity key must produce identical approximants at every
/// index; the key is what lets [`RealGen::same_construction`] recognise
/// coincidence across independently built generators.
pub trait RegularSequence: Send + Sync {
    fn approx(&self, v: u32) -> Rational;

    fn identity_key(&self) -> Option<String> {
        None
    }
}

struct FnSequence<F>(F);

impl<F> RegularSequence for FnSequence<F>
where
    F: Fn(u32) -> Rational + Send + Sync,
{
    fn approx(&self, v: u32) -> Rational {
        (self.0)(v)
    }
}

enum Node {
    Const(Rational),
    Add(RealGen, RealGen),
    Neg(RealGen),
    Abs(RealGen),
    Scale { factor: u64, shift: u32, arg: RealGen },
    Mul { lhs: RealGen, rhs: RealGen, pad: u32 },
    Source(Arc<dyn RegularSequence>),
}

/// A constructive real given by a regular rational sequence.
#[derive(Clone)]
pub struct RealGen {
    node: Arc<Node>,
    facts: Facts,
}

impl RealGen {
    fn from_node(node: Node, facts: Facts) -> Self {
        RealGen {
            node: Arc::new(node),
            facts,
        }
    }

    /// The constant generator `approx(v) = q`, with both bounds equal to `q`.
    pub fn constant(q: Rational) -> Self {
        let facts = Facts::exact(&q);
        RealGen::from_node(Node::Const(q), facts)
    }

    /// Wraps a user sequence. The caller is responsible for regularity and for
    /// the truth of the declared facts.
    pub fn from_sequence(seq: Arc<dyn RegularSequence>, facts: Facts) -> Self {
        RealGen::from_node(Node::Source(seq), facts)
    }

    pub fn from_fn<F>(f: F, facts: Facts) -> Self
    where
        F: Fn(u32) -> Rational + Send + Sync + 'static,
    {
        RealGen::from_sequence(Arc::new(FnSequence(f)), facts)
    }

    pub fn approx(&self, v: u32) -> Rational {
        match &*self.node {
            Node::Const(q) => q.clone(),
            Node::Add(x, y) => x.approx(v + 1) + y.approx(v + 1),
            Node::Neg(x) => -x.approx(v),
            Node::Abs(x) => x.approx(v).abs(),
            Node::Scale { factor, shift, arg } => {
                arg.approx(v + shift) * int(*factor as i64)
            }
            Node::Mul { lhs, rhs, pad } => lhs.approx(v + pad) * rhs.approx(v + pad),
            Node::Source(seq) => seq.approx(v),
        }
    }

    pub fn facts(&self) -> &Facts {
        &self.facts
    }

    /// Replaces the declared facts. The caller vouches for them.
    pub fn with_facts(mut self, facts: Facts) -> Self {
        self.facts = facts;
        self
    }

    /// A bound on `|approx(v)|` for every `v`. Taken from the facts when both
    /// sides are declared, otherwise `|approx(0)| + 2`, which regularity
    /// guarantees.
    pub fn magnitude_bound(&self) -> Rational {
        self.facts
            .magnitude()
            .unwrap_or_else(|| self.approx(0).abs() + int(2))
    }

    /// True when both generators are built the same way from the same leaves,
    /// which forces identical approximants at every index.
    pub fn same_construction(&self, other: &RealGen) -> bool {
        if Arc::ptr_eq(&self.node, &other.node) {
            return true;
        }
        match (&*self.node, &*other.node) {
            (Node::Const(a), Node::Const(b)) => a == b,
            (Node::Add(a1, b1), Node::Add(a2, b2)) => {
                a1.same_construction(a2) && b1.same_construction(b2)
            }
            (Node::Neg(a), Node::Neg(b)) => a.same_construction(b),
            // |-x| and |x| agree at every index
            (Node::Abs(a), Node::Abs(b)) => a.strip_neg().same_construction(b.strip_neg()),
            (
                Node::Scale { factor: f1, arg: a1, .. },
                Node::Scale { factor: f2, arg: a2, .. },
            ) => f1 == f2 && a1.same_construction(a2),
            (
                Node::Mul { lhs: l1, rhs: r1, pad: p1 },
                Node::Mul { lhs: l2, rhs: r2, pad: p2 },
            ) => p1 == p2 && l1.same_construction(l2) && r1.same_construction(r2),
            (Node::Source(s1), Node::Source(s2)) => {
                Arc::ptr_eq(s1, s2)
                    || matches!((s1.identity_key(), s2.identity_key()), (Some(k1), Some(k2)) if k1 == k2)
            }
            _ => false,
        }
    }

    fn strip_neg(&self) -> &RealGen {
        match &*self.node {
            Node::Neg(inner) => inner.strip_neg(),
            _ => self,
        }
    }

    /// First `len` approximants.
    pub fn trace(&self, len: u32) -> Vec<Rational> {
        (0..len).map(|v| self.approx(v)).collect()
    }
}

impl fmt::Debug for RealGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &*self.node {
            Node::Const(q) => return write!(f, "RealGen::Const({q})"),
            Node::Add(..) => "Add",
            Node::Neg(_) => "Neg",
            Node::Abs(_) => "Abs",
            Node::Scale { .. } => "Scale",
            Node::Mul { .. } => "Mul",
            Node::Source(_) => "Source",
        };
        f.debug_struct("RealGen")
            .field("node", &kind)
            .field("facts", &self.facts)
            .finish()
    }
}

fn add_opt(a: &Option<Rational>, b: &Option<Rational>) -> Option<Rational> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    }
}

pub fn const_rational(q: Rational) -> RealGen {
    RealGen::constant(q)
}

/// `approx(v) = x(v+1) + y(v+1)`.
pub fn add(x: &RealGen, y: &RealGen) -> RealGen {
    let facts = Facts {
        lower: add_opt(&x.facts.lower, &y.facts.lower),
        upper: add_opt(&x.facts.upper, &y.facts.upper),
    };
    RealGen::from_node(Node::Add(x.clone(), y.clone()), facts)
}

pub fn neg(x: &RealGen) -> RealGen {
    let facts = Facts {
        lower: x.facts.upper.as_ref().map(|u| -u),
        upper: x.facts.lower.as_ref().map(|l| -l),
    };
    RealGen::from_node(Node::Neg(x.clone()), facts)
}

pub fn sub(x: &RealGen, y: &RealGen) -> RealGen {
    add(x, &neg(y))
}

pub fn abs(x: &RealGen) -> RealGen {
    let lower = match &x.facts.lower {
        Some(l) if l.is_positive() => l.clone(),
        _ => match &x.facts.upper {
            Some(u) if u.is_negative() => -u,
            _ => Rational::zero(),
        },
    };
    let facts = Facts {
        lower: Some(lower),
        upper: x.facts.magnitude(),
    };
    RealGen::from_node(Node::Abs(x.clone()), facts)
}

/// `approx(v) = n * x(v + ceil(log2(max(n, 1))))`.
pub fn scale_nat(n: u64, x: &RealGen) -> RealGen {
    let shift = ceil_log2(&int(n.max(1) as i64));
    let k = int(n as i64);
    let facts = Facts {
        lower: x.facts.lower.as_ref().map(|l| l * &k),
        upper: x.facts.upper.as_ref().map(|u| u * &k),
    };
    RealGen::from_node(
        Node::Scale {
            factor: n,
            shift,
            arg: x.clone(),
        },
        facts,
    )
}

/// `approx(v) = x(v+k) * y(v+k)` where `2^k >= Bx + By` and `Bx`, `By` bound
/// every approximant of the factors.
pub fn mul(x: &RealGen, y: &RealGen) -> RealGen {
    let pad = ceil_log2(&(x.magnitude_bound() + y.magnitude_bound()));
    let facts = match (
        &x.facts.lower,
        &x.facts.upper,
        &y.facts.lower,
        &y.facts.upper,
    ) {
        (Some(xl), Some(xu), Some(yl), Some(yu)) => {
            let corners = [xl * yl, xl * yu, xu * yl, xu * yu];
            let lo = corners.iter().min().cloned();
            let hi = corners.iter().max().cloned();
            Facts {
                lower: lo,
                upper: hi,
            }
        }
        (Some(xl), _, Some(yl), _) if !xl.is_negative() && !yl.is_negative() => {
            Facts::nonnegative()
        }
        _ => Facts::none(),
    };
    RealGen::from_node(
        Node::Mul {
            lhs: x.clone(),
            rhs: y.clone(),
            pad,
        },
        facts,
    )
}

impl std::ops::Add for &RealGen {
    type Output = RealGen;
    fn add(self, rhs: &RealGen) -> RealGen {
        add(self, rhs)
    }
}

impl std::ops::Sub for &RealGen {
    type Output = RealGen;
    fn sub(self, rhs: &RealGen) -> RealGen {
        sub(self, rhs)
    }
}

impl std::ops::Mul for &RealGen {
    type Output = RealGen;
    fn mul(self, rhs: &RealGen) -> RealGen {
        mul(self, rhs)
    }
}

impl std::ops::Neg for &RealGen {
    type Output = RealGen;
    fn neg(self) -> RealGen {
        neg(self)
    }
}

/// Exact check of the regularity modulus on all index pairs `v, w <= horizon`.
pub fn is_regular_through(x: &RealGen, horizon: u32) -> bool {
    use crate::rational::pow2_neg;
    let trace = x.trace(horizon + 1);
    for (v, xv) in trace.iter().enumerate() {
        for (w, xw) in trace.iter().enumerate().skip(v + 1) {
            if (xv - xw).abs() > pow2_neg(v as i64) + pow2_neg(w as i64) {
                return false;
            }
        }
    }
    true
}
