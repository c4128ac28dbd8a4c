//! Exhaustive checking of statements about semirings and semimodules.
//!
//! Each statement is a [`TheoremId`] backed by one or more checkers (one per
//! reading, when a statement admits several). A checker has three parts:
//! a global gate on the input (hypotheses about the whole structure), a list
//! of instances (every object the statement quantifies over), and an
//! evaluation of one instance. Instances are encoded as [`Witness`] maps, so a
//! counterexample is simply the failing instance, and replaying it goes
//! through the same public decision procedures.

mod catalog;
mod theorems;
mod witness;

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semimodule::Semimodule;
use crate::semiring::Semiring;
use crate::subset::Subset;

pub use catalog::{builtin_catalog, chain3, z2_over_z4, Catalog};
pub use witness::{Witness, WitnessValue};

macro_rules! theorem_ids {
    ($($variant:ident => $text:literal,)*) => {
        /// Identifier of a checked statement.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $text,)*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = HarnessError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok(TheoremId::$variant),)*
                    _ => Err(HarnessError::UnknownTheorem(s.to_string())),
                }
            }
        }
    };
}

theorem_ids! {
    SecondCharacterization => "P27.6",
    MinimalIsSecond => "R-min-sec",
    SecondAnnihilatorPrime => "P2.2a",
    PrimeAnnihilatorSecond => "P2.2b",
    StrongPrimeColonSecond => "Pt3.2",
    SecondInsideSum => "P28.51",
    ImageOfSecond => "P2.7a",
    PreimageOfSecond => "P2.7b",
    SecondOfSubtractive => "C2.8",
    MaximalAnnihilatorSecond => "Pdf2.1",
    SumOfPSeconds => "Pdf2.9a",
    ProductOfPSeconds => "Pdf2.9b",
    QuotientOfPSecond => "Pdf2.9c",
    ColonBySquare => "P8l3.14",
    CoidempotentComultiplication => "Pt2.5a",
    CoidempotentInherited => "Pt2.5b",
    CoidempotentHopfian => "Pt2.5c",
    CoidempotentSecondMinimal => "T8lfff3.14",
    PrimeTimesWhole => "L2.98",
    PrimeProductIdeals => "T2.998",
    SecondInPairProduct => "L2.9",
    SecondInProduct => "T2.10",
    SecondAnnihilatorMaximal => "Pl2.9",
    SocleInsideSecond => "Tt3.8",
    SocleInsideSecondAlt => "Tt3.8-alt",
    FinitelyManyMaximalSeconds => "Tt3.6",
    ArtinianMaximalSeconds => "Cc3.7",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("{theorem} expects {expected}")]
    ArityMismatch { theorem: TheoremId, expected: Arity },
    #[error("malformed witness: {0}")]
    BadWitness(String),
    #[error("no checker registered for {0} with variant {1:?}")]
    UnknownVariant(TheoremId, Option<String>),
}

/// Shape of the input a statement talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Module,
    ModulePair,
    SemiringPair,
    ModuleProduct,
}

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arity::Module => "a single semimodule",
            Arity::ModulePair => "a pair of semimodules over the same semiring",
            Arity::SemiringPair => "a pair of semirings",
            Arity::ModuleProduct => "a product of at least two semimodules",
        })
    }
}

/// A semimodule under test, with a lazily built `M × M`.
pub struct ModuleCase {
    pub module: Arc<Semimodule>,
    square: OnceLock<Semimodule>,
}

impl ModuleCase {
    pub fn new(module: Arc<Semimodule>) -> Self {
        Self { module, square: OnceLock::new() }
    }

    pub fn square(&self) -> &Semimodule {
        self.square.get_or_init(|| {
            self.module
                .product_same_base(&self.module)
                .expect("a module shares its own base")
        })
    }
}

/// Two semirings and their lazily built product.
pub struct SemiringPairCase {
    pub left: Arc<Semiring>,
    pub right: Arc<Semiring>,
    product: OnceLock<Semiring>,
}

impl SemiringPairCase {
    pub fn new(left: Arc<Semiring>, right: Arc<Semiring>) -> Self {
        Self { left, right, product: OnceLock::new() }
    }

    pub fn product(&self) -> &Semiring {
        self.product.get_or_init(|| self.left.product(&self.right))
    }
}

/// Semimodules `M_i` over `R_i` and `M_1 × … × M_n` over `R_1 × … × R_n`.
/// A tuple `(x_1, …, x_n)` sits at the mixed-radix index with `x_n` least
/// significant.
pub struct ProductCase {
    pub factors: Vec<Arc<Semimodule>>,
    pub product: Arc<Semimodule>,
}

impl ProductCase {
    /// Panics with fewer than two factors.
    pub fn new(factors: Vec<Arc<Semimodule>>) -> Self {
        assert!(factors.len() >= 2, "a product needs at least two factors");
        let mut product = (*factors[0]).clone();
        for f in &factors[1..] {
            product = product.external_product(f);
        }
        let name = factors
            .iter()
            .map(|f| f.name())
            .collect::<Vec<_>>()
            .join(" x ");
        Self { factors, product: Arc::new(product.with_name(name)) }
    }

    /// `S_1 × … × S_n` as a subset of the product.
    pub fn product_subset(&self, parts: &[Subset]) -> Subset {
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = acc.product(p);
        }
        acc
    }
}

pub enum Input {
    Module(ModuleCase),
    ModulePair { source: Arc<Semimodule>, target: Arc<Semimodule> },
    SemiringPair(SemiringPairCase),
    Product(ProductCase),
}

impl Input {
    pub fn module(m: Arc<Semimodule>) -> Self {
        Input::Module(ModuleCase::new(m))
    }

    pub fn semiring_pair(left: Arc<Semiring>, right: Arc<Semiring>) -> Self {
        Input::SemiringPair(SemiringPairCase::new(left, right))
    }

    pub fn product(factors: Vec<Arc<Semimodule>>) -> Self {
        Input::Product(ProductCase::new(factors))
    }

    pub fn arity(&self) -> Arity {
        match self {
            Input::Module(_) => Arity::Module,
            Input::ModulePair { .. } => Arity::ModulePair,
            Input::SemiringPair(_) => Arity::SemiringPair,
            Input::Product(_) => Arity::ModuleProduct,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Input::Module(c) => c.module.name().to_string(),
            Input::ModulePair { source, target } => format!("{} -> {}", source.name(), target.name()),
            Input::SemiringPair(p) => format!("{} x {}", p.left.name(), p.right.name()),
            Input::Product(p) => p.product.name().to_string(),
        }
    }
}

/// Enumeration limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest `|target|^|source|` for which all maps are enumerated.
    pub map_cap: u64,
}

pub const DEFAULT_MAP_CAP: u64 = 1_000_000;

impl Default for Config {
    fn default() -> Self {
        Self { map_cap: DEFAULT_MAP_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "verified")]
    Verified,
    #[serde(rename = "counterexample")]
    Counterexample,
    #[serde(rename = "hypotheses-unmet")]
    HypothesesUnmet,
    #[serde(rename = "skipped(size)")]
    SkippedSize,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::HypothesesUnmet => "hypotheses-unmet",
            Status::SkippedSize => "skipped(size)",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub theorem: TheoremId,
    pub variant: Option<String>,
    pub structure: String,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Instances on which the hypotheses held and the conclusion was checked.
    pub instances: usize,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl Verdict {
    /// `P2.7a[all-subtractive]` style label.
    pub fn label(&self) -> String {
        match &self.variant {
            Some(v) => format!("{}[{}]", self.theorem, v),
            None => self.theorem.to_string(),
        }
    }
}

/// Outcome of one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eval {
    /// The instance does not satisfy the statement's hypotheses.
    Unmet,
    Holds,
    Fails,
}

/// Outcome of the global hypotheses on an input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gate {
    Open,
    Closed(String),
    Skip(String),
}

fn run_checker(checker: &dyn theorems::Checker, input: &Input, cfg: &Config) -> Verdict {
    let start = Instant::now();
    let mut verdict = Verdict {
        theorem: checker.id(),
        variant: checker.variant().map(str::to_string),
        structure: input.name(),
        status: Status::Verified,
        witness: None,
        instances: 0,
        notes: checker.notes(),
        elapsed: Duration::ZERO,
    };
    let finish = |mut v: Verdict, status: Status| {
        v.status = status;
        v.elapsed = start.elapsed();
        v
    };
    if input.arity() != checker.arity() {
        verdict.notes.push(format!("expects {}", checker.arity()));
        return finish(verdict, Status::HypothesesUnmet);
    }
    match checker.gate(input, cfg) {
        Gate::Open => {}
        Gate::Closed(why) => {
            verdict.notes.push(why);
            return finish(verdict, Status::HypothesesUnmet);
        }
        Gate::Skip(why) => {
            verdict.notes.push(why);
            return finish(verdict, Status::SkippedSize);
        }
    }
    for instance in checker.instances(input, cfg) {
        match checker.evaluate(input, cfg, &instance) {
            Ok(Eval::Unmet) => {}
            Ok(Eval::Holds) => verdict.instances += 1,
            Ok(Eval::Fails) => {
                verdict.instances += 1;
                verdict.witness = Some(checker.refine(input, cfg, instance));
                return finish(verdict, Status::Counterexample);
            }
            Err(e) => panic!("{} produced an unreadable instance: {e}", checker.id()),
        }
    }
    if verdict.instances == 0 {
        verdict.notes.push("no instance satisfies the hypotheses".into());
        return finish(verdict, Status::HypothesesUnmet);
    }
    finish(verdict, Status::Verified)
}

/// Runs every reading of `theorem` on one input, one verdict per reading.
pub fn check(theorem: TheoremId, input: &Input, cfg: &Config) -> Result<Vec<Verdict>, HarnessError> {
    let checkers = theorems::checkers_for(theorem);
    if let Some(c) = checkers.first() {
        if c.arity() != input.arity() {
            return Err(HarnessError::ArityMismatch { theorem, expected: c.arity() });
        }
    }
    Ok(checkers.iter().map(|c| run_checker(*c, input, cfg)).collect())
}

/// Re-evaluates a witness with the public decision procedures. `true` when it
/// is a genuine counterexample: the global hypotheses hold, the instance's
/// hypotheses hold, and the conclusion fails.
pub fn replay(
    theorem: TheoremId,
    variant: Option<&str>,
    input: &Input,
    witness: &Witness,
    cfg: &Config,
) -> Result<bool, HarnessError> {
    let checker = theorems::checkers_for(theorem)
        .into_iter()
        .find(|c| c.variant() == variant)
        .ok_or_else(|| HarnessError::UnknownVariant(theorem, variant.map(str::to_string)))?;
    if checker.arity() != input.arity() {
        return Err(HarnessError::ArityMismatch { theorem, expected: checker.arity() });
    }
    if checker.gate(input, cfg) != Gate::Open {
        return Ok(false);
    }
    Ok(checker.evaluate(input, cfg, witness)? == Eval::Fails)
}

/// Every reading registered for `theorem`, as `None` or variant names.
pub fn variants(theorem: TheoremId) -> Vec<Option<&'static str>> {
    theorems::checkers_for(theorem).iter().map(|c| c.variant()).collect()
}

pub fn arity(theorem: TheoremId) -> Arity {
    theorems::checkers_for(theorem)[0].arity()
}

/// Runs each theorem on every catalog input of matching shape. The result is
/// ordered by theorem (as given), then reading, then catalog order, whatever
/// order the work completes in.
pub fn run_catalog(theorems: &[TheoremId], catalog: &Catalog, cfg: &Config) -> Vec<Verdict> {
    let inputs = catalog.inputs();
    let mut work: Vec<(&dyn theorems::Checker, &Input)> = Vec::new();
    for &t in theorems {
        for checker in theorems::checkers_for(t) {
            for input in inputs.iter().filter(|i| i.arity() == checker.arity()) {
                work.push((checker, input));
            }
        }
    }
    work.par_iter()
        .map(|(checker, input)| run_checker(*checker, input, cfg))
        .collect()
}

/// Count of verdicts per status.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub counterexample: usize,
    pub hypotheses_unmet: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(verdicts: &[Verdict]) -> Self {
        let mut s = Summary::default();
        for v in verdicts {
            match v.status {
                Status::Verified => s.verified += 1,
                Status::Counterexample => s.counterexample += 1,
                Status::HypothesesUnmet => s.hypotheses_unmet += 1,
                Status::SkippedSize => s.skipped += 1,
            }
        }
        s
    }
}
