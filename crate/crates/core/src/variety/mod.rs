//! Varieties of one-bracket algebras defined by multilinear laws, their
//! verbal subobjects and reflectors.

mod law;
mod parser;

use std::fmt;

pub use law::{for_each_basis_tuple, Law, LawTerm};
pub use parser::parse_law;

use crate::algebra::Algebra;
use crate::algebra::{ideal_generated, quotient_algebra, AlgebraRef, IdealWitness, LinearMap};
use crate::error::{Error, Result};
use crate::linalg::{quotient_map, Matrix, Subspace};
use crate::scalar::Scalar;

/// A Birkhoff subvariety of non-associative algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variety {
    name: String,
    laws: Vec<Law>,
    /// Whether composites of abelian-central extensions over a perfect middle
    /// object are known to be central in this variety.
    uce_condition: bool,
    /// Antisymmetry only captures `[x,x] = 0` away from characteristic 2.
    needs_odd_characteristic: bool,
}

impl Variety {
    pub fn new(name: impl Into<String>, laws: Vec<Law>) -> Self {
        Variety {
            name: name.into(),
            laws,
            uce_condition: false,
            needs_odd_characteristic: false,
        }
    }

    /// Parses each law in the DSL.
    pub fn from_law_strings<I, T>(name: impl Into<String>, laws: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let laws = laws
            .into_iter()
            .map(|s| parse_law(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(name, laws))
    }

    pub fn with_uce_condition(mut self, holds: bool) -> Self {
        self.uce_condition = holds;
        self
    }

    /// All non-associative algebras.
    pub fn naalg() -> Self {
        Self::new("NAAlg", Vec::new())
    }

    /// Abelian algebras.
    pub fn vect() -> Self {
        Self::from_law_strings("Vect", ["[x1,x2]"])
            .expect("builtin law")
            .with_uce_condition(true)
    }

    pub fn leib() -> Self {
        Self::from_law_strings("Leib", ["[[x1,x2],x3] - [[x1,x3],x2] - [x1,[x2,x3]]"])
            .expect("builtin law")
            .with_uce_condition(true)
    }

    pub fn lie() -> Self {
        let mut v = Self::from_law_strings(
            "Lie",
            ["[x1,x2] + [x2,x1]", "[[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2]"],
        )
        .expect("builtin law")
        .with_uce_condition(true);
        v.needs_odd_characteristic = true;
        v
    }

    /// Looks up a built-in variety by name (case-insensitive).
    pub fn builtin(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "naalg" => Some(Self::naalg()),
            "vect" => Some(Self::vect()),
            "leib" => Some(Self::leib()),
            "lie" => Some(Self::lie()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn laws(&self) -> &[Law] {
        &self.laws
    }

    pub fn uce_condition(&self) -> bool {
        self.uce_condition
    }

    pub fn max_degree(&self) -> usize {
        self.laws.iter().map(Law::degree).max().unwrap_or(0)
    }

    /// Rejects fields where the laws do not describe the intended variety.
    pub fn check_field<S: Scalar>(&self) -> Result<()> {
        if self.needs_odd_characteristic && S::CHARACTERISTIC == 2 {
            return Err(Error::UnsupportedField(format!(
                "{} is not supported in characteristic 2",
                self.name
            )));
        }
        Ok(())
    }

    /// True when some degree-2 law `c1[x1,x2] + c2[x2,x1]` forces every
    /// bracket to vanish, i.e. the variety is the abelian one.
    pub fn is_abelian_variety<S: Scalar>(&self) -> bool {
        self.laws.iter().filter(|l| l.degree() == 2).any(|l| {
            let (mut c12, mut c21) = (S::zero(), S::zero());
            for (c, t) in l.terms() {
                if t.variables() == [1, 2] {
                    c12 = c12 + S::from_i64(*c);
                } else {
                    c21 = c21 + S::from_i64(*c);
                }
            }
            c12.clone() * c12 != c21.clone() * c21
        })
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Membership test: every law vanishes on every tuple of basis vectors.
pub fn satisfies<S: Scalar>(a: &Algebra<S>, v: &Variety) -> Result<bool> {
    v.check_field::<S>()?;
    let mut ok = true;
    for law in v.laws() {
        for_each_basis_tuple::<S>(a.dim(), law.degree(), |args| {
            if ok && law.eval(a, args).iter().any(|x| !x.is_zero()) {
                ok = false;
            }
        });
        if !ok {
            break;
        }
    }
    Ok(ok)
}

/// Span of all law values on basis tuples.
pub fn law_value_span<S: Scalar>(a: &Algebra<S>, v: &Variety) -> Result<Subspace<S>> {
    v.check_field::<S>()?;
    let vectors = v.laws().iter().flat_map(|law| law.basis_values(a));
    Ok(Subspace::from_vectors(a.dim(), vectors))
}

/// The verbal ideal `[A, A]_V`: the smallest ideal whose quotient lies in `v`.
pub fn verbal_subobject<S: Scalar>(a: &Algebra<S>, v: &Variety) -> Result<IdealWitness<S>> {
    Ok(ideal_generated(a, &law_value_span(a, v)?))
}

/// The reflection `I(A) = A / [A, A]_V` and its unit `η_A`.
pub fn reflect<S: Scalar>(a: &AlgebraRef<S>, v: &Variety) -> Result<(AlgebraRef<S>, LinearMap<S>)> {
    let verbal = verbal_subobject(a, v)?;
    quotient_algebra(a, &verbal)
}

/// The induced morphism `I(f) : I(dom) → I(cod)` with `I(f)∘η = η∘f`.
pub fn reflect_map<S: Scalar>(f: &LinearMap<S>, v: &Variety) -> Result<LinearMap<S>> {
    let f = f.clone().certify()?;
    let dom_verbal = verbal_subobject(f.domain(), v)?;
    let (i_dom, _) = quotient_algebra(f.domain(), &dom_verbal)?;
    let (i_cod, eta_cod) = reflect(f.codomain(), v)?;
    let (_, section) = quotient_map(f.domain().dim(), &dom_verbal.subspace)?;
    let through = section.mul(f.matrix())?.mul(eta_cod.matrix())?;
    let m = Matrix::from_rows(i_cod.dim(), through.row_iter().map(|r| r.to_vec()))?;
    LinearMap::morphism(i_dom, i_cod, m)
}
