//! Finite commutative semirings given by Cayley tables, and their ideals.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{AlgebraError, Axiom, Result};
use crate::subset::{enumerate_closed, Subset};

/// Unvalidated semiring tables, as read from a file or built by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiringTables {
    pub size: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl SemiringTables {
    pub fn from_fns(
        size: usize,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Self {
        Self {
            size,
            zero,
            one,
            add: (0..size).map(|a| (0..size).map(|b| add(a, b)).collect()).collect(),
            mul: (0..size).map(|a| (0..size).map(|b| mul(a, b)).collect()).collect(),
        }
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.size;
        if n == 0 {
            return Err(AlgebraError::Shape("a semiring needs at least one element".into()));
        }
        if self.zero >= n || self.one >= n {
            return Err(AlgebraError::Shape(format!(
                "zero {} / one {} outside 0..{n}",
                self.zero, self.one
            )));
        }
        for (label, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(AlgebraError::Shape(format!("{label} table is not {n}×{n}")));
            }
            if let Some(bad) = table.iter().flatten().find(|&&v| v >= n) {
                return Err(AlgebraError::Shape(format!(
                    "{label} table entry {bad} outside 0..{n}"
                )));
            }
        }
        Ok(())
    }

    /// Re-evaluates one axiom at a witness tuple. `None` when the witness does
    /// not fit the axiom (wrong arity or out of range) or the tables are malformed.
    pub fn holds_at(&self, axiom: Axiom, witness: &[usize]) -> Option<bool> {
        self.check_shape().ok()?;
        self.holds_at_unchecked(axiom, witness)
    }

    /// [`Self::holds_at`] for tables already known to be well-shaped.
    fn holds_at_unchecked(&self, axiom: Axiom, witness: &[usize]) -> Option<bool> {
        if witness.iter().any(|&w| w >= self.size) {
            return None;
        }
        let add = |a: usize, b: usize| self.add[a][b];
        let mul = |a: usize, b: usize| self.mul[a][b];
        let (z, o) = (self.zero, self.one);
        Some(match (axiom, witness) {
            (Axiom::ZeroNotOne, [a, b]) if *a == z && *b == o => z != o,
            (Axiom::AddIdentity, &[a]) => add(z, a) == a && add(a, z) == a,
            (Axiom::MulIdentity, &[a]) => mul(o, a) == a && mul(a, o) == a,
            (Axiom::ZeroAbsorbs, &[a]) => mul(z, a) == z && mul(a, z) == z,
            (Axiom::AddCommutative, &[a, b]) => add(a, b) == add(b, a),
            (Axiom::MulCommutative, &[a, b]) => mul(a, b) == mul(b, a),
            (Axiom::AddAssociative, &[a, b, c]) => add(add(a, b), c) == add(a, add(b, c)),
            (Axiom::MulAssociative, &[a, b, c]) => mul(mul(a, b), c) == mul(a, mul(b, c)),
            (Axiom::Distributive, &[a, b, c]) => mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
            _ => return None,
        })
    }

    /// The first violated axiom in checking order, with its witness.
    fn first_violation(&self) -> Option<(Axiom, Vec<usize>)> {
        let n = self.size;
        if self.zero == self.one {
            return Some((Axiom::ZeroNotOne, vec![self.zero, self.one]));
        }
        for axiom in [Axiom::AddIdentity, Axiom::MulIdentity, Axiom::ZeroAbsorbs] {
            for a in 0..n {
                if self.holds_at_unchecked(axiom, &[a]) == Some(false) {
                    return Some((axiom, vec![a]));
                }
            }
        }
        for axiom in [Axiom::AddCommutative, Axiom::MulCommutative] {
            for a in 0..n {
                for b in a + 1..n {
                    if self.holds_at_unchecked(axiom, &[a, b]) == Some(false) {
                        return Some((axiom, vec![a, b]));
                    }
                }
            }
        }
        for axiom in [Axiom::AddAssociative, Axiom::MulAssociative, Axiom::Distributive] {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if self.holds_at_unchecked(axiom, &[a, b, c]) == Some(false) {
                            return Some((axiom, vec![a, b, c]));
                        }
                    }
                }
            }
        }
        None
    }
}

/// A validated finite commutative semiring on the elements `0..size`.
#[derive(Clone)]
pub struct Semiring {
    name: String,
    size: usize,
    zero: usize,
    one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    ideals: OnceLock<Vec<Subset>>,
}

/// Checks every semiring axiom and returns the validated structure, or the
/// first violated axiom with a witnessing tuple.
pub fn validate_semiring(name: impl Into<String>, tables: &SemiringTables) -> Result<Semiring> {
    tables.check_shape()?;
    if let Some((axiom, witness)) = tables.first_violation() {
        return Err(AlgebraError::AxiomViolation { axiom, witness });
    }
    Ok(Semiring::from_trusted(name.into(), tables))
}

impl Semiring {
    fn from_trusted(name: String, t: &SemiringTables) -> Self {
        Self {
            name,
            size: t.size,
            zero: t.zero,
            one: t.one,
            add: t.add.iter().flatten().copied().collect(),
            mul: t.mul.iter().flatten().copied().collect(),
            ideals: OnceLock::new(),
        }
    }

    /// The two-element Boolean semiring: `0 = false`, `1 = true`, OR and AND.
    pub fn boolean() -> Self {
        let t = SemiringTables::from_fns(2, 0, 1, |a, b| a | b, |a, b| a & b);
        validate_semiring("B", &t).expect("B is a semiring")
    }

    /// The ring of integers modulo `n` (`n >= 2`).
    pub fn integers_mod(n: usize) -> Self {
        assert!(n >= 2, "Z_n needs n >= 2");
        let t = SemiringTables::from_fns(n, 0, 1, |a, b| (a + b) % n, |a, b| (a * b) % n);
        validate_semiring(format!("Z{n}"), &t).expect("Z_n is a semiring")
    }

    /// Min-plus arithmetic on `{0, 1, ..., cap, ∞}` where any sum exceeding
    /// `cap` becomes `∞`. Element `k` is index `k`; `∞` is index `cap + 1` and
    /// is the additive identity, while `0` is the multiplicative one.
    pub fn truncated_tropical(cap: usize) -> Self {
        let inf = cap + 1;
        let t = SemiringTables::from_fns(
            cap + 2,
            inf,
            0,
            |a, b| a.min(b),
            |a, b| if a == inf || b == inf || a + b > cap { inf } else { a + b },
        );
        validate_semiring(format!("T{cap}"), &t).expect("truncated tropical is a semiring")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn tables(&self) -> SemiringTables {
        SemiringTables::from_fns(self.size, self.zero, self.one, |a, b| self.add(a, b), |a, b| {
            self.mul(a, b)
        })
    }

    /// Same tables and designated elements; names are ignored.
    pub fn same_structure(&self, other: &Semiring) -> bool {
        std::ptr::eq(self, other)
            || (self.size == other.size
                && self.zero == other.zero
                && self.one == other.one
                && self.add == other.add
                && self.mul == other.mul)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn zero_ideal(&self) -> Subset {
        Subset::singleton(self.size, self.zero)
    }

    /// `R1 × R2` with componentwise operations; `(a, b)` sits at index `a·|R2| + b`.
    pub fn product(&self, other: &Semiring) -> Semiring {
        let (n1, n2) = (self.size, other.size);
        let n = n1 * n2;
        let split = |i: usize| (i / n2, i % n2);
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (a1, a2) = split(x);
            for y in 0..n {
                let (b1, b2) = split(y);
                add.push(self.add(a1, b1) * n2 + other.add(a2, b2));
                mul.push(self.mul(a1, b1) * n2 + other.mul(a2, b2));
            }
        }
        Semiring {
            name: format!("{}x{}", self.name, other.name),
            size: n,
            zero: self.zero * n2 + other.zero,
            one: self.one * n2 + other.one,
            add,
            mul,
            ideals: OnceLock::new(),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    // ---- ideals ----

    pub fn is_ideal(&self, s: &Subset) -> bool {
        if s.universe() != self.size || s.is_empty() {
            return false;
        }
        for a in s.iter() {
            for b in s.iter() {
                if !s.contains(self.add(a, b)) {
                    return false;
                }
            }
            for r in self.elements() {
                if !s.contains(self.mul(r, a)) {
                    return false;
                }
            }
        }
        true
    }

    /// The smallest ideal containing `generators` (the zero ideal for `∅`).
    pub fn ideal_closure(&self, generators: &Subset) -> Subset {
        let mut set = Subset::singleton(self.size, self.zero);
        let mut queue = vec![self.zero];
        for g in generators.iter() {
            if set.insert(g) {
                queue.push(g);
            }
        }
        while let Some(x) = queue.pop() {
            let members: Vec<usize> = set.iter().collect();
            for y in members {
                let s = self.add(x, y);
                if set.insert(s) {
                    queue.push(s);
                }
            }
            for r in self.elements() {
                let p = self.mul(r, x);
                if set.insert(p) {
                    queue.push(p);
                }
            }
        }
        set
    }

    /// All ideals in ascending bitset order, by generator closure. Cached.
    pub fn ideals(&self) -> &[Subset] {
        self.ideals
            .get_or_init(|| enumerate_closed(self.size, |s| self.ideal_closure(s)))
    }

    /// All ideals found by testing every subset with [`Semiring::is_ideal`].
    /// `None` above 20 elements.
    pub fn ideals_by_subset_filter(&self) -> Option<Vec<Subset>> {
        if self.size > 20 {
            return None;
        }
        Some(
            (0..1u64 << self.size)
                .map(|bits| Subset::from_bits(self.size, bits))
                .filter(|s| self.is_ideal(s))
                .collect(),
        )
    }

    /// `a + b ∈ I` and `b ∈ I` imply `a ∈ I`.
    pub fn is_subtractive_ideal(&self, ideal: &Subset) -> bool {
        for b in ideal.iter() {
            for a in self.elements() {
                if !ideal.contains(a) && ideal.contains(self.add(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Proper, and `ab ∈ I` forces `a ∈ I` or `b ∈ I`.
    pub fn is_prime_ideal(&self, ideal: &Subset) -> bool {
        if ideal.is_full() {
            return false;
        }
        let outside: Vec<usize> = self.elements().filter(|&a| !ideal.contains(a)).collect();
        for &a in &outside {
            for &b in &outside {
                if ideal.contains(self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Every element of the proper ideal has an additive inverse inside it.
    pub fn is_strong_ideal(&self, ideal: &Subset) -> Result<bool> {
        if ideal.is_full() {
            return Err(AlgebraError::NotProper);
        }
        Ok(ideal
            .iter()
            .all(|a| ideal.iter().any(|b| self.add(a, b) == self.zero)))
    }

    /// Proper and not strictly contained in another proper ideal.
    pub fn is_maximal_ideal(&self, ideal: &Subset) -> bool {
        !ideal.is_full()
            && !self
                .ideals()
                .iter()
                .any(|j| !j.is_full() && ideal.is_proper_subset(j))
    }

    /// The prime ideals, in ascending bitset order.
    pub fn spec(&self) -> Vec<Subset> {
        self.ideals()
            .iter()
            .filter(|i| self.is_prime_ideal(i))
            .cloned()
            .collect()
    }

    /// The ideal generated by all products `ab` with `a ∈ I`, `b ∈ J`.
    pub fn ideal_product(&self, i: &Subset, j: &Subset) -> Subset {
        let mut products = Subset::empty(self.size);
        for a in i.iter() {
            for b in j.iter() {
                products.insert(self.mul(a, b));
            }
        }
        self.ideal_closure(&products)
    }
}

impl PartialEq for Semiring {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.same_structure(other)
    }
}

impl Eq for Semiring {}

impl fmt::Debug for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semiring")
            .field("name", &self.name)
            .field("size", &self.size)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}
