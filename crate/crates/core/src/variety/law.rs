use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::unit_vector;
use crate::scalar::Scalar;

/// A bracket monomial: a binary tree with variable indices at the leaves.
/// Variables are numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LawTerm {
    Var(usize),
    Bracket(Box<LawTerm>, Box<LawTerm>),
}

impl LawTerm {
    pub fn var(i: usize) -> Self {
        LawTerm::Var(i)
    }

    pub fn bracket(l: LawTerm, r: LawTerm) -> Self {
        LawTerm::Bracket(Box::new(l), Box::new(r))
    }

    /// Variables in left-to-right order.
    pub fn variables(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            LawTerm::Var(i) => out.push(*i),
            LawTerm::Bracket(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Evaluates the monomial with `args[i - 1]` substituted for `x_i`.
    pub fn eval<S: Scalar>(&self, a: &Algebra<S>, args: &[Vec<S>]) -> Vec<S> {
        match self {
            LawTerm::Var(i) => args[*i - 1].clone(),
            LawTerm::Bracket(l, r) => a.bracket(&l.eval(a, args), &r.eval(a, args)),
        }
    }

    /// The two immediate subtrees, if the root is a bracket.
    pub fn split(&self) -> Option<(&LawTerm, &LawTerm)> {
        match self {
            LawTerm::Var(_) => None,
            LawTerm::Bracket(l, r) => Some((l, r)),
        }
    }
}

impl fmt::Display for LawTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawTerm::Var(i) => write!(f, "x{i}"),
            LawTerm::Bracket(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

/// A multilinear identity `Σ c_i t_i = 0` in the variables `x1..xd`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Law {
    degree: usize,
    terms: Vec<(i64, LawTerm)>,
}

impl Law {
    /// Validates multilinearity: every term uses each of `x1..xd` exactly once.
    pub fn new(terms: Vec<(i64, LawTerm)>) -> Result<Self> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::NotMultilinear("a law needs at least one term".into()));
        };
        let degree = first.variables().len();
        let expected: BTreeSet<usize> = (1..=degree).collect();
        for (_, t) in &terms {
            let vars = t.variables();
            let set: BTreeSet<usize> = vars.iter().copied().collect();
            if set.len() != vars.len() {
                return Err(Error::NotMultilinear(format!("variable repeated in {t}")));
            }
            if set != expected {
                return Err(Error::NotMultilinear(format!(
                    "{t} does not use exactly the variables x1..x{degree}"
                )));
            }
        }
        if degree < 2 {
            return Err(Error::NotMultilinear("a law must contain at least one bracket".into()));
        }
        if terms.iter().all(|(c, _)| *c == 0) {
            return Err(Error::NotMultilinear("all coefficients are zero".into()));
        }
        Ok(Law { degree, terms })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[(i64, LawTerm)] {
        &self.terms
    }

    pub fn eval<S: Scalar>(&self, a: &Algebra<S>, args: &[Vec<S>]) -> Vec<S> {
        let mut out = vec![S::zero(); a.dim()];
        for (c, t) in &self.terms {
            if *c == 0 {
                continue;
            }
            let c = S::from_i64(*c);
            for (o, v) in out.iter_mut().zip(t.eval(a, args)) {
                *o = o.clone() + c.clone() * v;
            }
        }
        out
    }

    /// Values of the law on every tuple of basis vectors; by multilinearity
    /// these span all values of the law.
    pub fn basis_values<S: Scalar>(&self, a: &Algebra<S>) -> Vec<Vec<S>> {
        let mut out = Vec::new();
        for_each_basis_tuple(a.dim(), self.degree, |args| out.push(self.eval(a, args)));
        out
    }
}

/// Calls `visit` with every `degree`-tuple of unit vectors of `K^dim`.
pub fn for_each_basis_tuple<S: Scalar>(dim: usize, degree: usize, mut visit: impl FnMut(&[Vec<S>])) {
    if dim == 0 {
        return;
    }
    let units: Vec<Vec<S>> = (0..dim).map(|i| unit_vector(dim, i)).collect();
    let mut idx = vec![0usize; degree];
    let mut args: Vec<Vec<S>> = vec![units[0].clone(); degree];
    loop {
        visit(&args);
        let mut pos = degree;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < dim {
                args[pos] = units[idx[pos]].clone();
                break;
            }
            idx[pos] = 0;
            args[pos] = units[0].clone();
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (c, t)) in self.terms.iter().enumerate() {
            let (sign, mag) = if *c < 0 {
                ("-", c.unsigned_abs())
            } else {
                ("+", *c as u64)
            };
            if n == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}
