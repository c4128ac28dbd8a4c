use std::fmt;

use thiserror::Error;

/// An axiom of a semiring or semimodule, as checked by validation.
///
/// The witness attached to a violation lists the quantified variables in the
/// order they appear in the axiom's display name; scalars are semiring
/// indices and vectors are module indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    ZeroNotOne,
    AddIdentity,
    MulIdentity,
    ZeroAbsorbs,
    AddCommutative,
    MulCommutative,
    AddAssociative,
    MulAssociative,
    Distributive,
    ModuleAddIdentity,
    ModuleAddCommutative,
    ModuleAddAssociative,
    UnitActs,
    ScalarKillsZero,
    ZeroScalarKills,
    ActionCompatible,
    ActionDistributesOverVectors,
    ActionDistributesOverScalars,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::ZeroNotOne => "zero ≠ one",
            Axiom::AddIdentity => "0+a=a",
            Axiom::MulIdentity => "1a=a",
            Axiom::ZeroAbsorbs => "0a=0",
            Axiom::AddCommutative => "a+b=b+a",
            Axiom::MulCommutative => "ab=ba",
            Axiom::AddAssociative => "(a+b)+c=a+(b+c)",
            Axiom::MulAssociative => "(ab)c=a(bc)",
            Axiom::Distributive => "a(b+c)=ab+ac",
            Axiom::ModuleAddIdentity => "0+m=m",
            Axiom::ModuleAddCommutative => "m+n=n+m",
            Axiom::ModuleAddAssociative => "(m+n)+p=m+(n+p)",
            Axiom::UnitActs => "1m=m",
            Axiom::ScalarKillsZero => "r0=0",
            Axiom::ZeroScalarKills => "0m=0",
            Axiom::ActionCompatible => "(rs)m=r(sm)",
            Axiom::ActionDistributesOverVectors => "r(m+n)=rm+rn",
            Axiom::ActionDistributesOverScalars => "(r+s)m=rm+sm",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A law a candidate homomorphism must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomLaw {
    /// witness `[x, y]`
    Additive,
    /// witness `[r, x]`
    Linear,
}

impl fmt::Display for HomLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomLaw::Additive => "f(x+y)=f(x)+f(y)",
            HomLaw::Linear => "f(rx)=rf(x)",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed tables: {0}")]
    Shape(String),
    #[error("axiom `{axiom}` violated at {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },
    #[error("the ideal or subsemimodule must be proper")]
    NotProper,
    #[error("operands do not share the same parent structure")]
    ParentMismatch,
    #[error("not a homomorphism: `{law}` fails at {witness:?}")]
    NotHomomorphism { law: HomLaw, witness: Vec<usize> },
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
