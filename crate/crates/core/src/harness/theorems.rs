//! One checker per statement (and per reading, where a statement admits
//! more than one).

use std::sync::Arc;

use super::{Arity, Config, Eval, Gate, HarnessError, Input, ModuleCase, ProductCase, SemiringPairCase, TheoremId, Witness};
use crate::homomorphism::{candidate_count, enumerate_maps, Homomorphism};
use crate::second::{
    is_minimal_subsemimodule, is_p_second, is_second, is_second_characterization,
    is_socle_subsemimodule, maximal_second_subsemimodules, non_coidempotent_witness,
    non_comultiplication_witness, second_subsemimodules, socle, socle_subsemimodules,
};
use crate::semimodule::Semimodule;
use crate::subset::Subset;

pub(crate) trait Checker: Sync {
    fn id(&self) -> TheoremId;

    fn variant(&self) -> Option<&'static str> {
        None
    }

    fn arity(&self) -> Arity;

    fn notes(&self) -> Vec<String> {
        Vec::new()
    }

    fn gate(&self, _input: &Input, _cfg: &Config) -> Gate {
        Gate::Open
    }

    /// Every object the statement quantifies over.
    fn instances(&self, input: &Input, cfg: &Config) -> Vec<Witness>;

    fn evaluate(&self, input: &Input, cfg: &Config, w: &Witness) -> Result<Eval, HarnessError>;

    /// Shrinks a failing instance for reporting; must return a failing instance.
    fn refine(&self, _input: &Input, _cfg: &Config, w: Witness) -> Witness {
        w
    }
}

fn verdict(hypotheses: bool, conclusion: impl FnOnce() -> bool) -> Eval {
    if !hypotheses {
        Eval::Unmet
    } else if conclusion() {
        Eval::Holds
    } else {
        Eval::Fails
    }
}

fn mismatch(c: &dyn Checker) -> HarnessError {
    HarnessError::ArityMismatch { theorem: c.id(), expected: c.arity() }
}

fn module_case<'a>(c: &dyn Checker, input: &'a Input) -> Result<&'a ModuleCase, HarnessError> {
    match input {
        Input::Module(m) => Ok(m),
        _ => Err(mismatch(c)),
    }
}

fn module_of<'a>(c: &dyn Checker, input: &'a Input) -> Result<&'a Arc<Semimodule>, HarnessError> {
    module_case(c, input).map(|m| &m.module)
}

fn pair_of<'a>(
    c: &dyn Checker,
    input: &'a Input,
) -> Result<(&'a Arc<Semimodule>, &'a Arc<Semimodule>), HarnessError> {
    match input {
        Input::ModulePair { source, target } => Ok((source, target)),
        _ => Err(mismatch(c)),
    }
}

fn semirings_of<'a>(c: &dyn Checker, input: &'a Input) -> Result<&'a SemiringPairCase, HarnessError> {
    match input {
        Input::SemiringPair(p) => Ok(p),
        _ => Err(mismatch(c)),
    }
}

fn product_of<'a>(c: &dyn Checker, input: &'a Input) -> Result<&'a ProductCase, HarnessError> {
    match input {
        Input::Product(p) => Ok(p),
        _ => Err(mismatch(c)),
    }
}

/// A subset named `key` that is a subsemimodule of `m`; `None` when it is
/// not, which makes the instance's hypotheses fail.
fn sub_at(m: &Semimodule, w: &Witness, key: &str) -> Result<Option<Subset>, HarnessError> {
    let s = w.get_set(key, m.size())?;
    Ok(m.is_subsemimodule(&s).then_some(s))
}

fn ideal_at(m: &Semimodule, w: &Witness, key: &str) -> Result<Option<Subset>, HarnessError> {
    let s = w.get_set(key, m.base().size())?;
    Ok(m.base().is_ideal(&s).then_some(s))
}

fn each_sub(m: &Semimodule, key: &str) -> Vec<Witness> {
    m.subsemimodules().iter().map(|n| Witness::new().set(key, n)).collect()
}

fn comultiplication_gate(m: &Semimodule) -> Gate {
    match non_comultiplication_witness(m, false) {
        None => Gate::Open,
        Some(n) => Gate::Closed(format!(
            "not a comultiplication semimodule: {n} is not (0 :_M I) for any ideal I"
        )),
    }
}

fn fully_coidempotent_gate(m: &Semimodule) -> Gate {
    match non_coidempotent_witness(m) {
        None => Gate::Open,
        Some(n) => Gate::Closed(format!("not fully coidempotent: {n} is not coidempotent")),
    }
}

fn has_second_gate(m: &Semimodule) -> Gate {
    if second_subsemimodules(m).is_empty() {
        Gate::Closed("no second subsemimodules".into())
    } else {
        Gate::Open
    }
}

fn map_gate(source: &Semimodule, target: &Semimodule, cfg: &Config) -> Gate {
    let count = candidate_count(source, target);
    if count > cfg.map_cap {
        Gate::Skip(format!(
            "{}^{} candidate maps {} -> {} exceed the cap of {}",
            target.size(),
            source.size(),
            source.name(),
            target.name(),
            cfg.map_cap
        ))
    } else {
        Gate::Open
    }
}

/// `K` relabeled inside the restriction whose members are `members`.
fn relabel(members: &[usize], k: &Subset) -> Subset {
    Subset::from_indices(
        members.len(),
        members.iter().enumerate().filter(|(_, x)| k.contains(**x)).map(|(i, _)| i),
    )
}

/// `p`-second subsemimodules for each prime `p` of the base.
fn p_seconds(m: &Semimodule) -> Vec<(Subset, Vec<Subset>)> {
    let seconds = second_subsemimodules(m);
    m.base()
        .spec()
        .into_iter()
        .map(|p| {
            let list = seconds.iter().filter(|s| m.annihilator(s) == p).cloned().collect();
            (p, list)
        })
        .collect()
}

fn prime_at(m: &Semimodule, w: &Witness) -> Result<Option<Subset>, HarnessError> {
    Ok(ideal_at(m, w, "p")?.filter(|p| m.base().is_prime_ideal(p)))
}

// ---------------------------------------------------------------------------

/// `N` is second iff `N ≠ 0` and `aN ⊆ K` forces `aN = 0` or `N ⊆ K`.
struct SecondCharacterization;

impl Checker for SecondCharacterization {
    fn id(&self) -> TheoremId {
        TheoremId::SecondCharacterization
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input).map(|m| each_sub(m, "N")).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(n) = sub_at(m, w, "N")? else { return Ok(Eval::Unmet) };
        Ok(verdict(true, || is_second(m, &n) == is_second_characterization(m, &n)))
    }
}

/// Minimal subsemimodules are second.
struct MinimalIsSecond;

impl Checker for MinimalIsSecond {
    fn id(&self) -> TheoremId {
        TheoremId::MinimalIsSecond
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input).map(|m| each_sub(m, "N")).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(n) = sub_at(m, w, "N")? else { return Ok(Eval::Unmet) };
        Ok(verdict(is_minimal_subsemimodule(m, &n), || is_second(m, &n)))
    }
}

/// The annihilator of a second subsemimodule is a prime subtractive ideal.
struct SecondAnnihilatorPrime;

impl Checker for SecondAnnihilatorPrime {
    fn id(&self) -> TheoremId {
        TheoremId::SecondAnnihilatorPrime
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input).map(|m| each_sub(m, "N")).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(n) = sub_at(m, w, "N")? else { return Ok(Eval::Unmet) };
        Ok(verdict(is_second(m, &n), || {
            let ann = m.annihilator(&n);
            m.base().is_prime_ideal(&ann) && m.base().is_subtractive_ideal(&ann)
        }))
    }
}

/// In a comultiplication semimodule, a prime annihilator makes `N` second.
struct PrimeAnnihilatorSecond;

impl Checker for PrimeAnnihilatorSecond {
    fn id(&self) -> TheoremId {
        TheoremId::PrimeAnnihilatorSecond
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        module_of(self, input).map_or(Gate::Closed("not a module".into()), |m| comultiplication_gate(m))
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input).map(|m| each_sub(m, "N")).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(n) = sub_at(m, w, "N")? else { return Ok(Eval::Unmet) };
        Ok(verdict(m.base().is_prime_ideal(&m.annihilator(&n)), || is_second(m, &n)))
    }
}

/// For a strong prime subtractive ideal `P ⊇ Ann(M)` of a comultiplication
/// semimodule, `(0 :_M P)` is second.
struct StrongPrimeColonSecond;

impl Checker for StrongPrimeColonSecond {
    fn id(&self) -> TheoremId {
        TheoremId::StrongPrimeColonSecond
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn notes(&self) -> Vec<String> {
        vec!["finitely generated: automatic for a finite semimodule".into()]
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        module_of(self, input).map_or(Gate::Closed("not a module".into()), |m| comultiplication_gate(m))
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input)
            .map(|m| m.base().ideals().iter().map(|p| Witness::new().set("P", p)).collect())
            .unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(p) = ideal_at(m, w, "P")? else { return Ok(Eval::Unmet) };
        let r = m.base();
        let hypotheses = !p.is_full()
            && r.is_strong_ideal(&p) == Ok(true)
            && r.is_prime_ideal(&p)
            && r.is_subtractive_ideal(&p)
            && m.annihilator(&m.full()).is_subset(&p);
        Ok(verdict(hypotheses, || is_second(m, &m.zero_colon(&p))))
    }
}

/// A second `S` of a comultiplication semimodule lies in `N_1 + … + N_t` only
/// if it lies in some `N_j`.
///
/// All finite families are covered: if any family fails, so does the family
/// of every subsemimodule not containing `S`, since enlarging a family only
/// enlarges its sum. That family is the single instance per `S`.
struct SecondInsideSum;

impl SecondInsideSum {
    fn holds(m: &Semimodule, s: &Subset, family: &[Subset]) -> bool {
        let mut union = m.zero_sub();
        for n in family {
            union.union_with(n);
        }
        let total = m.closure(&union);
        let in_some = family.iter().any(|n| s.is_subset(n));
        let in_sum = s.is_subset(&total);
        in_some == in_sum
    }
}

impl Checker for SecondInsideSum {
    fn id(&self) -> TheoremId {
        TheoremId::SecondInsideSum
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn notes(&self) -> Vec<String> {
        vec!["the index bound of the family is read as t throughout".into()]
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        module_of(self, input).map_or(Gate::Closed("not a module".into()), |m| comultiplication_gate(m))
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        let Ok(m) = module_of(self, input) else { return Vec::new() };
        second_subsemimodules(m)
            .into_iter()
            .map(|s| {
                let family: Vec<Subset> =
                    m.subsemimodules().iter().filter(|n| !s.is_subset(n)).cloned().collect();
                Witness::new().set("S", &s).family("N", &family)
            })
            .collect()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(s) = sub_at(m, w, "S")? else { return Ok(Eval::Unmet) };
        let family = w.get_family("N", m.size())?;
        let hypotheses = is_second(m, &s) && family.iter().all(|n| m.is_subsemimodule(n));
        Ok(verdict(hypotheses, || Self::holds(m, &s, &family)))
    }
    fn refine(&self, input: &Input, _: &Config, w: Witness) -> Witness {
        let Ok(m) = module_of(self, input) else { return w };
        let Ok(s) = w.get_set("S", m.size()) else { return w };
        let Ok(mut family) = w.get_family("N", m.size()) else { return w };
        let mut i = 0;
        while i < family.len() {
            let mut smaller = family.clone();
            smaller.remove(i);
            if !Self::holds(m, &s, &smaller) {
                family = smaller;
            } else {
                i += 1;
            }
        }
        Witness::new().set("S", &s).family("N", &family)
    }
}

/// Which subsemimodules the "subtractive semimodule" hypothesis constrains.
#[derive(Clone, Copy)]
enum SubtractiveReading {
    /// Every subsemimodule of the source.
    Every,
    /// Only the subsemimodule the statement is about.
    TheOne,
}

impl SubtractiveReading {
    fn name(self) -> &'static str {
        match self {
            SubtractiveReading::Every => "all-subtractive",
            SubtractiveReading::TheOne => "S-subtractive",
        }
    }

    fn gate(self, source: &Semimodule) -> Gate {
        match self {
            SubtractiveReading::TheOne => Gate::Open,
            SubtractiveReading::Every => match source
                .subsemimodules()
                .iter()
                .find(|n| !source.is_subtractive(n))
            {
                None => Gate::Open,
                Some(n) => Gate::Closed(format!("{n} is not subtractive")),
            },
        }
    }
}

fn map_instances(source: &Semimodule, target: &Semimodule, cfg: &Config, subs_of: &Semimodule, key: &str) -> Vec<Witness> {
    let Some(maps) = enumerate_maps(source, target, cfg.map_cap) else { return Vec::new() };
    let mut out = Vec::new();
    for map in &maps {
        for n in subs_of.subsemimodules() {
            out.push(Witness::new().map("f", map).set(key, n));
        }
    }
    out
}

fn hom_at(source: &Arc<Semimodule>, target: &Arc<Semimodule>, w: &Witness) -> Result<Homomorphism, HarnessError> {
    Homomorphism::new(Arc::clone(source), Arc::clone(target), w.get_map("f")?)
        .map_err(|e| HarnessError::BadWitness(format!("`f`: {e}")))
}

/// A zero-kernel k-regular map sends second subsemimodules to second ones.
struct ImageOfSecond(SubtractiveReading);

impl Checker for ImageOfSecond {
    fn id(&self) -> TheoremId {
        TheoremId::ImageOfSecond
    }
    fn variant(&self) -> Option<&'static str> {
        Some(self.0.name())
    }
    fn arity(&self) -> Arity {
        Arity::ModulePair
    }
    fn gate(&self, input: &Input, cfg: &Config) -> Gate {
        let Ok((s, t)) = pair_of(self, input) else { return Gate::Closed("not a pair".into()) };
        match map_gate(s, t, cfg) {
            Gate::Open => self.0.gate(s),
            other => other,
        }
    }
    fn instances(&self, input: &Input, cfg: &Config) -> Vec<Witness> {
        pair_of(self, input)
            .map(|(s, t)| map_instances(s, t, cfg, s, "S"))
            .unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let (src, tgt) = pair_of(self, input)?;
        let f = hom_at(src, tgt, w)?;
        let Some(s) = sub_at(src, w, "S")? else { return Ok(Eval::Unmet) };
        let reading_ok = match self.0 {
            SubtractiveReading::Every => true,
            SubtractiveReading::TheOne => src.is_subtractive(&s),
        };
        let hypotheses = f.has_zero_kernel() && f.is_k_regular() && is_second(src, &s) && reading_ok;
        Ok(verdict(hypotheses, || is_second(tgt, &f.image_of(&s))))
    }
}

/// The preimage of a second subsemimodule of `f(M)` under a zero-kernel map
/// is second.
struct PreimageOfSecond(SubtractiveReading);

impl Checker for PreimageOfSecond {
    fn id(&self) -> TheoremId {
        TheoremId::PreimageOfSecond
    }
    fn variant(&self) -> Option<&'static str> {
        Some(self.0.name())
    }
    fn arity(&self) -> Arity {
        Arity::ModulePair
    }
    fn notes(&self) -> Vec<String> {
        match self.0 {
            SubtractiveReading::TheOne => {
                vec!["the subtractive subsemimodule is the preimage f^-1(S')".into()]
            }
            SubtractiveReading::Every => Vec::new(),
        }
    }
    fn gate(&self, input: &Input, cfg: &Config) -> Gate {
        let Ok((s, t)) = pair_of(self, input) else { return Gate::Closed("not a pair".into()) };
        match map_gate(s, t, cfg) {
            Gate::Open => self.0.gate(s),
            other => other,
        }
    }
    fn instances(&self, input: &Input, cfg: &Config) -> Vec<Witness> {
        pair_of(self, input)
            .map(|(s, t)| map_instances(s, t, cfg, t, "S'"))
            .unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let (src, tgt) = pair_of(self, input)?;
        let f = hom_at(src, tgt, w)?;
        let Some(s) = sub_at(tgt, w, "S'")? else { return Ok(Eval::Unmet) };
        let pre = f.preimage(&s);
        let reading_ok = match self.0 {
            SubtractiveReading::Every => true,
            SubtractiveReading::TheOne => src.is_subtractive(&pre),
        };
        let hypotheses =
            f.has_zero_kernel() && s.is_subset(&f.image()) && is_second(tgt, &s) && reading_ok;
        Ok(verdict(hypotheses, || is_second(src, &pre)))
    }
}

/// A second subsemimodule of a subtractive `N` is second in `M`.
struct SecondOfSubtractive;

impl Checker for SecondOfSubtractive {
    fn id(&self) -> TheoremId {
        TheoremId::SecondOfSubtractive
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        let Ok(m) = module_of(self, input) else { return Vec::new() };
        let lattice = m.subsemimodules();
        let mut out = Vec::new();
        for n in lattice {
            for k in lattice.iter().filter(|k| k.is_subset(n)) {
                out.push(Witness::new().set("N", n).set("K", k));
            }
        }
        out
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let (Some(n), Some(k)) = (sub_at(m, w, "N")?, sub_at(m, w, "K")?) else {
            return Ok(Eval::Unmet);
        };
        if !k.is_subset(&n) || !m.is_subtractive(&n) {
            return Ok(Eval::Unmet);
        }
        let (inner, members) = m.restrict(&n).expect("N is a subsemimodule");
        let second_in_n = is_second(&inner, &relabel(&members, &k));
        Ok(verdict(second_in_n, || is_second(m, &k)))
    }
}

/// A maximal annihilator makes `S` second.
struct MaximalAnnihilatorSecond;

impl Checker for MaximalAnnihilatorSecond {
    fn id(&self) -> TheoremId {
        TheoremId::MaximalAnnihilatorSecond
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input).map(|m| each_sub(m, "S")).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(s) = sub_at(m, w, "S")? else { return Ok(Eval::Unmet) };
        Ok(verdict(m.base().is_maximal_ideal(&m.annihilator(&s)), || is_second(m, &s)))
    }
}

/// Sums of `p`-second subsemimodules are `p`-second. Pairs suffice: a sum of
/// several is built pairwise, each partial sum again being `p`-second.
struct SumOfPSeconds;

impl Checker for SumOfPSeconds {
    fn id(&self) -> TheoremId {
        TheoremId::SumOfPSeconds
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        let Ok(m) = module_of(self, input) else { return Vec::new() };
        let mut out = Vec::new();
        for (p, list) in p_seconds(m) {
            for (i, a) in list.iter().enumerate() {
                for b in &list[i..] {
                    out.push(Witness::new().set("p", &p).set("S1", a).set("S2", b));
                }
            }
        }
        out
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(p) = prime_at(m, w)? else { return Ok(Eval::Unmet) };
        let (Some(a), Some(b)) = (sub_at(m, w, "S1")?, sub_at(m, w, "S2")?) else {
            return Ok(Eval::Unmet);
        };
        let hypotheses = is_p_second(m, &a, &p) && is_p_second(m, &b, &p);
        Ok(verdict(hypotheses, || {
            is_p_second(m, &m.sum(&a, &b).expect("same parent"), &p)
        }))
    }
}

/// `S1 × S2 ⊆ M × M` is `p`-second when `S1` and `S2` are.
struct ProductOfPSeconds;

impl Checker for ProductOfPSeconds {
    fn id(&self) -> TheoremId {
        TheoremId::ProductOfPSeconds
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        let Ok(m) = module_of(self, input) else { return Vec::new() };
        let mut out = Vec::new();
        for (p, list) in p_seconds(m) {
            for a in &list {
                for b in &list {
                    out.push(Witness::new().set("p", &p).set("S1", a).set("S2", b));
                }
            }
        }
        out
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let case = module_case(self, input)?;
        let m = &case.module;
        let Some(p) = prime_at(m, w)? else { return Ok(Eval::Unmet) };
        let (Some(a), Some(b)) = (sub_at(m, w, "S1")?, sub_at(m, w, "S2")?) else {
            return Ok(Eval::Unmet);
        };
        let hypotheses = is_p_second(m, &a, &p) && is_p_second(m, &b, &p);
        Ok(verdict(hypotheses, || is_p_second(case.square(), &a.product(&b), &p)))
    }
}

/// Non-zero quotients `S/N` of a `p`-second `S` are `p`-second.
struct QuotientOfPSecond;

impl Checker for QuotientOfPSecond {
    fn id(&self) -> TheoremId {
        TheoremId::QuotientOfPSecond
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn notes(&self) -> Vec<String> {
        vec!["quotients use the Bourne congruence".into()]
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        let Ok(m) = module_of(self, input) else { return Vec::new() };
        let mut out = Vec::new();
        for (p, list) in p_seconds(m) {
            for s in &list {
                for n in m.subsemimodules().iter().filter(|n| n.is_subset(s)) {
                    out.push(Witness::new().set("p", &p).set("S", s).set("N", n));
                }
            }
        }
        out
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(p) = prime_at(m, w)? else { return Ok(Eval::Unmet) };
        let (Some(s), Some(n)) = (sub_at(m, w, "S")?, sub_at(m, w, "N")?) else {
            return Ok(Eval::Unmet);
        };
        if !n.is_subset(&s) || !is_p_second(m, &s, &p) {
            return Ok(Eval::Unmet);
        }
        let (inner, members) = m.restrict(&s).expect("S is a subsemimodule");
        let (q, _) = Arc::new(inner)
            .quotient(&relabel(&members, &n))
            .expect("N lies in S");
        Ok(verdict(q.size() > 1, || is_p_second(&q, &q.full(), &p)))
    }
}

/// When every non-zero subsemimodule is second, `(K :_M I) = (K :_M I²)` and
/// colons of `K` by any two ideals are comparable.
struct ColonBySquare;

impl Checker for ColonBySquare {
    fn id(&self) -> TheoremId {
        TheoremId::ColonBySquare
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        let Ok(m) = module_of(self, input) else { return Gate::Closed("not a module".into()) };
        match m
            .subsemimodules()
            .iter()
            .find(|n| !m.is_zero_sub(n) && !is_second(m, n))
        {
            None => Gate::Open,
            Some(n) => Gate::Closed(format!("{n} is non-zero and not second")),
        }
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        let Ok(m) = module_of(self, input) else { return Vec::new() };
        let ideals = m.base().ideals();
        let mut out = Vec::new();
        for k in m.subsemimodules() {
            for i in ideals {
                out.push(Witness::new().text("kind", "square").set("K", k).set("I", i));
            }
            for (x, a) in ideals.iter().enumerate() {
                for b in &ideals[x + 1..] {
                    out.push(Witness::new().text("kind", "comparable").set("K", k).set("A", a).set("B", b));
                }
            }
        }
        out
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(k) = sub_at(m, w, "K")? else { return Ok(Eval::Unmet) };
        let colon = |i: &Subset| m.colon_into(&k, i).expect("shapes checked");
        match w.get_text("kind")? {
            "square" => {
                let Some(i) = ideal_at(m, w, "I")? else { return Ok(Eval::Unmet) };
                let square = m.base().ideal_product(&i, &i);
                Ok(verdict(true, || colon(&i) == colon(&square)))
            }
            "comparable" => {
                let (Some(a), Some(b)) = (ideal_at(m, w, "A")?, ideal_at(m, w, "B")?) else {
                    return Ok(Eval::Unmet);
                };
                Ok(verdict(true, || colon(&a).comparable(&colon(&b))))
            }
            other => Err(HarnessError::BadWitness(format!("unknown kind `{other}`"))),
        }
    }
}

/// Fully coidempotent semimodules are comultiplication semimodules.
struct CoidempotentComultiplication;

impl Checker for CoidempotentComultiplication {
    fn id(&self) -> TheoremId {
        TheoremId::CoidempotentComultiplication
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        module_of(self, input).map_or(Gate::Closed("not a module".into()), |m| fully_coidempotent_gate(m))
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input).map(|m| each_sub(m, "N")).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(n) = sub_at(m, w, "N")? else { return Ok(Eval::Unmet) };
        Ok(verdict(true, || m.base().ideals().iter().any(|i| m.zero_colon(i) == n)))
    }
}

/// Subsemimodules and homomorphic images of a fully coidempotent semimodule
/// are fully coidempotent.
struct CoidempotentInherited;

impl Checker for CoidempotentInherited {
    fn id(&self) -> TheoremId {
        TheoremId::CoidempotentInherited
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn notes(&self) -> Vec<String> {
        vec![
            "homomorphic images: Bourne quotients by every subsemimodule, plus images of all \
             endomorphisms when their count is within the map cap"
                .into(),
        ]
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        module_of(self, input).map_or(Gate::Closed("not a module".into()), |m| fully_coidempotent_gate(m))
    }
    fn instances(&self, input: &Input, cfg: &Config) -> Vec<Witness> {
        let Ok(m) = module_of(self, input) else { return Vec::new() };
        let mut out = Vec::new();
        for n in m.subsemimodules() {
            out.push(Witness::new().text("kind", "subsemimodule").set("N", n));
        }
        for n in m.subsemimodules() {
            out.push(Witness::new().text("kind", "quotient").set("N", n));
        }
        if let Some(maps) = enumerate_maps(m, m, cfg.map_cap) {
            for f in maps {
                out.push(Witness::new().text("kind", "image").map("f", &f));
            }
        }
        out
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let fully = |n: &Subset| {
            let (inner, _) = m.restrict(n).expect("a subsemimodule");
            non_coidempotent_witness(&inner).is_none()
        };
        match w.get_text("kind")? {
            "subsemimodule" => {
                let Some(n) = sub_at(m, w, "N")? else { return Ok(Eval::Unmet) };
                Ok(verdict(true, || fully(&n)))
            }
            "quotient" => {
                let Some(n) = sub_at(m, w, "N")? else { return Ok(Eval::Unmet) };
                let (q, _) = m.quotient(&n).expect("same parent");
                Ok(verdict(true, || non_coidempotent_witness(&q).is_none()))
            }
            "image" => {
                let f = hom_at(m, m, w)?;
                Ok(verdict(true, || fully(&f.image())))
            }
            other => Err(HarnessError::BadWitness(format!("unknown kind `{other}`"))),
        }
    }
}

/// Fully coidempotent semimodules are Hopfian.
struct CoidempotentHopfian;

impl Checker for CoidempotentHopfian {
    fn id(&self) -> TheoremId {
        TheoremId::CoidempotentHopfian
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn gate(&self, input: &Input, cfg: &Config) -> Gate {
        let Ok(m) = module_of(self, input) else { return Gate::Closed("not a module".into()) };
        match fully_coidempotent_gate(m) {
            Gate::Open => match map_gate(m, m, cfg) {
                Gate::Skip(why) => Gate::Skip(format!(
                    "{why}; a finite semimodule is Hopfian since a surjection of a finite set onto itself is injective"
                )),
                other => other,
            },
            other => other,
        }
    }
    fn instances(&self, input: &Input, cfg: &Config) -> Vec<Witness> {
        let Ok(m) = module_of(self, input) else { return Vec::new() };
        enumerate_maps(m, m, cfg.map_cap)
            .unwrap_or_default()
            .iter()
            .map(|f| Witness::new().map("f", f))
            .collect()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let f = hom_at(m, m, w)?;
        Ok(verdict(f.is_surjective(), || f.is_injective()))
    }
}

/// In a fully coidempotent semimodule every second subsemimodule is minimal.
struct CoidempotentSecondMinimal;

impl Checker for CoidempotentSecondMinimal {
    fn id(&self) -> TheoremId {
        TheoremId::CoidempotentSecondMinimal
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        module_of(self, input).map_or(Gate::Closed("not a module".into()), |m| fully_coidempotent_gate(m))
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input).map(|m| each_sub(m, "S")).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(s) = sub_at(m, w, "S")? else { return Ok(Eval::Unmet) };
        Ok(verdict(is_second(m, &s), || is_minimal_subsemimodule(m, &s)))
    }
}

/// `J1` prime in `R1` makes `J1 × R2` prime in `R1 × R2`.
struct PrimeTimesWhole;

impl Checker for PrimeTimesWhole {
    fn id(&self) -> TheoremId {
        TheoremId::PrimeTimesWhole
    }
    fn arity(&self) -> Arity {
        Arity::SemiringPair
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        semirings_of(self, input)
            .map(|p| p.left.ideals().iter().map(|j| Witness::new().set("J1", j)).collect())
            .unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let pair = semirings_of(self, input)?;
        let j1 = w.get_set("J1", pair.left.size())?;
        let hypotheses = pair.left.is_ideal(&j1) && pair.left.is_prime_ideal(&j1);
        Ok(verdict(hypotheses, || {
            pair.product().is_prime_ideal(&j1.product(&pair.right.full()))
        }))
    }
}

/// `J1 × J2` is prime iff it is `P × R2` or `R1 × P` with `P` prime.
struct PrimeProductIdeals;

impl Checker for PrimeProductIdeals {
    fn id(&self) -> TheoremId {
        TheoremId::PrimeProductIdeals
    }
    fn arity(&self) -> Arity {
        Arity::SemiringPair
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        let Ok(pair) = semirings_of(self, input) else { return Vec::new() };
        let mut out = Vec::new();
        for j1 in pair.left.ideals() {
            for j2 in pair.right.ideals() {
                out.push(Witness::new().set("J1", j1).set("J2", j2));
            }
        }
        out
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let pair = semirings_of(self, input)?;
        let (r1, r2) = (&pair.left, &pair.right);
        let j1 = w.get_set("J1", r1.size())?;
        let j2 = w.get_set("J2", r2.size())?;
        let hypotheses = r1.is_ideal(&j1) && r2.is_ideal(&j2);
        Ok(verdict(hypotheses, || {
            let prime = pair.product().is_prime_ideal(&j1.product(&j2));
            let split = (j2.is_full() && r1.is_prime_ideal(&j1))
                || (j1.is_full() && r2.is_prime_ideal(&j2));
            prime == split
        }))
    }
}

/// Tuples of subsemimodules `(S_1, …, S_n)` of the factors, one instance each.
fn product_tuples(p: &ProductCase) -> Vec<Witness> {
    let mut out = vec![Witness::new()];
    for (i, factor) in p.factors.iter().enumerate() {
        let key = format!("S{}", i + 1);
        out = out
            .into_iter()
            .flat_map(|w| {
                factor
                    .subsemimodules()
                    .iter()
                    .map(|s| w.clone().set(&key, s))
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

/// `S_1 × … × S_n` is second iff exactly one `S_j` is second and the rest are zero.
fn product_second_eval(p: &ProductCase, w: &Witness) -> Result<Eval, HarnessError> {
    let mut parts = Vec::with_capacity(p.factors.len());
    for (i, factor) in p.factors.iter().enumerate() {
        match sub_at(factor, w, &format!("S{}", i + 1))? {
            Some(s) => parts.push(s),
            None => return Ok(Eval::Unmet),
        }
    }
    Ok(verdict(true, || {
        let whole = is_second(&p.product, &p.product_subset(&parts));
        let one_sided = (0..parts.len()).any(|j| {
            is_second(&p.factors[j], &parts[j])
                && (0..parts.len()).all(|i| i == j || p.factors[i].is_zero_sub(&parts[i]))
        });
        whole == one_sided
    }))
}

fn faithful_gate(p: &ProductCase) -> Gate {
    match p.factors.iter().find(|f| !f.is_faithful()) {
        None => Gate::Open,
        Some(f) => Gate::Closed(format!("{} is not faithful", f.name())),
    }
}

/// Second subsemimodules of `M1 × M2` over `R1 × R2`, for faithful factors.
struct SecondInPairProduct;

impl Checker for SecondInPairProduct {
    fn id(&self) -> TheoremId {
        TheoremId::SecondInPairProduct
    }
    fn arity(&self) -> Arity {
        Arity::ModuleProduct
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        let Ok(p) = product_of(self, input) else { return Gate::Closed("not a product".into()) };
        if p.factors.len() != 2 {
            return Gate::Closed("needs exactly two factors".into());
        }
        faithful_gate(p)
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        product_of(self, input).map(product_tuples).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        product_second_eval(product_of(self, input)?, w)
    }
}

/// Second subsemimodules of `M1 × … × Mn` over `R1 × … × Rn`, with or without
/// the faithfulness hypothesis.
struct SecondInProduct {
    require_faithful: bool,
}

impl Checker for SecondInProduct {
    fn id(&self) -> TheoremId {
        TheoremId::SecondInProduct
    }
    fn variant(&self) -> Option<&'static str> {
        Some(if self.require_faithful { "faithful" } else { "faithfulness-dropped" })
    }
    fn arity(&self) -> Arity {
        Arity::ModuleProduct
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        let Ok(p) = product_of(self, input) else { return Gate::Closed("not a product".into()) };
        if self.require_faithful {
            faithful_gate(p)
        } else {
            Gate::Open
        }
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        product_of(self, input).map(product_tuples).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        product_second_eval(product_of(self, input)?, w)
    }
}

/// A second semimodule has a maximal annihilator. Each second subsemimodule
/// is taken as a semimodule in its own right.
struct SecondAnnihilatorMaximal;

impl Checker for SecondAnnihilatorMaximal {
    fn id(&self) -> TheoremId {
        TheoremId::SecondAnnihilatorMaximal
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn notes(&self) -> Vec<String> {
        vec!["finitely generated: automatic for a finite semimodule".into()]
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input).map(|m| each_sub(m, "S")).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(s) = sub_at(m, w, "S")? else { return Ok(Eval::Unmet) };
        let (inner, _) = m.restrict(&s).expect("a subsemimodule");
        Ok(verdict(is_second(&inner, &inner.full()), || {
            inner.base().is_maximal_ideal(&inner.annihilator(&inner.full()))
        }))
    }
}

/// Literal reading: one second subsemimodule contains every socle
/// subsemimodule. Instances are each socle subsemimodule alone, then all of
/// them together.
struct SocleInsideSecond;

impl Checker for SocleInsideSecond {
    fn id(&self) -> TheoremId {
        TheoremId::SocleInsideSecond
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn notes(&self) -> Vec<String> {
        vec![
            "literal reading: a single second subsemimodule containing every socle subsemimodule"
                .into(),
            "Noetherian: automatic for a finite semimodule".into(),
        ]
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        module_of(self, input).map_or(Gate::Closed("not a module".into()), |m| has_second_gate(m))
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        let Ok(m) = module_of(self, input) else { return Vec::new() };
        let socles = socle_subsemimodules(m);
        let mut out: Vec<Witness> = socles
            .iter()
            .map(|n| Witness::new().family("socles", std::slice::from_ref(n)))
            .collect();
        out.push(Witness::new().family("socles", &socles));
        out
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let family = w.get_family("socles", m.size())?;
        let hypotheses = !family.is_empty()
            && family.iter().all(|n| m.is_subsemimodule(n) && is_socle_subsemimodule(m, n));
        Ok(verdict(hypotheses, || {
            second_subsemimodules(m)
                .iter()
                .any(|s| family.iter().all(|n| n.is_subset(s)))
        }))
    }
}

/// The reading the argument supports: the sum of all second subsemimodules
/// contains every second and every socle subsemimodule.
struct SocleInsideSecondAlt;

impl Checker for SocleInsideSecondAlt {
    fn id(&self) -> TheoremId {
        TheoremId::SocleInsideSecondAlt
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn notes(&self) -> Vec<String> {
        vec!["Noetherian: automatic for a finite semimodule".into()]
    }
    fn gate(&self, input: &Input, _: &Config) -> Gate {
        module_of(self, input).map_or(Gate::Closed("not a module".into()), |m| has_second_gate(m))
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        let Ok(m) = module_of(self, input) else { return Vec::new() };
        let mut out: Vec<Witness> = second_subsemimodules(m)
            .iter()
            .map(|l| Witness::new().text("kind", "second").set("L", l))
            .collect();
        out.extend(
            socle_subsemimodules(m)
                .iter()
                .map(|n| Witness::new().text("kind", "socle").set("L", n)),
        );
        out
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(l) = sub_at(m, w, "L")? else { return Ok(Eval::Unmet) };
        let hypotheses = match w.get_text("kind")? {
            "second" => is_second(m, &l),
            "socle" => is_socle_subsemimodule(m, &l),
            other => return Err(HarnessError::BadWitness(format!("unknown kind `{other}`"))),
        };
        Ok(verdict(hypotheses, || l.is_subset(&socle(m, &m.full()))))
    }
}

/// The maximal second subsemimodules of `K`, checked for correctness; their
/// number is finite because the lattice is.
fn maximal_seconds_sound(m: &Semimodule, k: &Subset) -> bool {
    let found = maximal_second_subsemimodules(m, k);
    let seconds = second_subsemimodules(m);
    let expected: Vec<&Subset> = seconds
        .iter()
        .filter(|n| n.is_subset(k))
        .filter(|n| !seconds.iter().any(|l| n.is_proper_subset(l) && l.is_subset(k)))
        .collect();
    found.len() <= m.subsemimodules().len() && found.iter().eq(expected)
}

/// Every non-zero subsemimodule has finitely many maximal second subsemimodules.
struct FinitelyManyMaximalSeconds;

impl Checker for FinitelyManyMaximalSeconds {
    fn id(&self) -> TheoremId {
        TheoremId::FinitelyManyMaximalSeconds
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn notes(&self) -> Vec<String> {
        vec!["descending chain condition on socle subsemimodules: automatic for a finite semimodule".into()]
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input).map(|m| each_sub(m, "N")).unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(n) = sub_at(m, w, "N")? else { return Ok(Eval::Unmet) };
        Ok(verdict(!m.is_zero_sub(&n), || maximal_seconds_sound(m, &n)))
    }
}

/// The whole semimodule has finitely many maximal second subsemimodules.
struct ArtinianMaximalSeconds;

impl Checker for ArtinianMaximalSeconds {
    fn id(&self) -> TheoremId {
        TheoremId::ArtinianMaximalSeconds
    }
    fn arity(&self) -> Arity {
        Arity::Module
    }
    fn notes(&self) -> Vec<String> {
        vec!["Artinian: automatic for a finite semimodule".into()]
    }
    fn instances(&self, input: &Input, _: &Config) -> Vec<Witness> {
        module_of(self, input)
            .map(|m| vec![Witness::new().set("K", &m.full())])
            .unwrap_or_default()
    }
    fn evaluate(&self, input: &Input, _: &Config, w: &Witness) -> Result<Eval, HarnessError> {
        let m = module_of(self, input)?;
        let Some(k) = sub_at(m, w, "K")? else { return Ok(Eval::Unmet) };
        Ok(verdict(k.is_full(), || maximal_seconds_sound(m, &k)))
    }
}

// ---------------------------------------------------------------------------

static REGISTRY: &[&dyn Checker] = &[
    &SecondCharacterization,
    &MinimalIsSecond,
    &SecondAnnihilatorPrime,
    &PrimeAnnihilatorSecond,
    &StrongPrimeColonSecond,
    &SecondInsideSum,
    &ImageOfSecond(SubtractiveReading::Every),
    &ImageOfSecond(SubtractiveReading::TheOne),
    &PreimageOfSecond(SubtractiveReading::Every),
    &PreimageOfSecond(SubtractiveReading::TheOne),
    &SecondOfSubtractive,
    &MaximalAnnihilatorSecond,
    &SumOfPSeconds,
    &ProductOfPSeconds,
    &QuotientOfPSecond,
    &ColonBySquare,
    &CoidempotentComultiplication,
    &CoidempotentInherited,
    &CoidempotentHopfian,
    &CoidempotentSecondMinimal,
    &PrimeTimesWhole,
    &PrimeProductIdeals,
    &SecondInPairProduct,
    &SecondInProduct { require_faithful: true },
    &SecondInProduct { require_faithful: false },
    &SecondAnnihilatorMaximal,
    &SocleInsideSecond,
    &SocleInsideSecondAlt,
    &FinitelyManyMaximalSeconds,
    &ArtinianMaximalSeconds,
];

/// Registered checkers for one statement, in registration order.
pub(crate) fn checkers_for(id: TheoremId) -> Vec<&'static dyn Checker> {
    REGISTRY.iter().copied().filter(|c| c.id() == id).collect()
}
