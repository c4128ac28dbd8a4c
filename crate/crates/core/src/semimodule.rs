//! Finite semimodules over a [`Semiring`], their subsemimodules, and the
//! annihilator, colon, sum, quotient and product constructions.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{AlgebraError, Axiom, Result};
use crate::homomorphism::{self, Homomorphism};
use crate::semiring::Semiring;
use crate::subset::{enumerate_closed, Subset};

/// Unvalidated semimodule tables. `act[r][x]` is `r·x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemimoduleTables {
    pub size: usize,
    pub zero: usize,
    pub add: Vec<Vec<usize>>,
    pub act: Vec<Vec<usize>>,
}

impl SemimoduleTables {
    pub fn from_fns(
        base: &Semiring,
        size: usize,
        zero: usize,
        add: impl Fn(usize, usize) -> usize,
        act: impl Fn(usize, usize) -> usize,
    ) -> Self {
        Self {
            size,
            zero,
            add: (0..size).map(|x| (0..size).map(|y| add(x, y)).collect()).collect(),
            act: base.elements().map(|r| (0..size).map(|x| act(r, x)).collect()).collect(),
        }
    }

    fn check_shape(&self, base: &Semiring) -> Result<()> {
        let (m, k) = (self.size, base.size());
        if m == 0 {
            return Err(AlgebraError::Shape("a semimodule needs at least one element".into()));
        }
        if self.zero >= m {
            return Err(AlgebraError::Shape(format!("zero {} outside 0..{m}", self.zero)));
        }
        if self.add.len() != m || self.add.iter().any(|row| row.len() != m) {
            return Err(AlgebraError::Shape(format!("add table is not {m}×{m}")));
        }
        if self.act.len() != k || self.act.iter().any(|row| row.len() != m) {
            return Err(AlgebraError::Shape(format!("act table is not {k}×{m}")));
        }
        if let Some(bad) = self.add.iter().chain(&self.act).flatten().find(|&&v| v >= m) {
            return Err(AlgebraError::Shape(format!("table entry {bad} outside 0..{m}")));
        }
        Ok(())
    }

    /// Re-evaluates one axiom at a witness tuple; see [`Axiom`] for the
    /// variable order. `None` when the witness does not fit.
    pub fn holds_at(&self, base: &Semiring, axiom: Axiom, witness: &[usize]) -> Option<bool> {
        self.check_shape(base).ok()?;
        self.holds_at_unchecked(base, axiom, witness)
    }

    fn holds_at_unchecked(&self, base: &Semiring, axiom: Axiom, witness: &[usize]) -> Option<bool> {
        let (m, k) = (self.size, base.size());
        let add = |x: usize, y: usize| self.add[x][y];
        let act = |r: usize, x: usize| self.act[r][x];
        let z = self.zero;
        let vec_ok = |x: usize| x < m;
        let sc_ok = |r: usize| r < k;
        Some(match (axiom, witness) {
            (Axiom::ModuleAddIdentity, &[x]) if vec_ok(x) => add(z, x) == x && add(x, z) == x,
            (Axiom::ModuleAddCommutative, &[x, y]) if vec_ok(x) && vec_ok(y) => {
                add(x, y) == add(y, x)
            }
            (Axiom::ModuleAddAssociative, &[x, y, w]) if vec_ok(x) && vec_ok(y) && vec_ok(w) => {
                add(add(x, y), w) == add(x, add(y, w))
            }
            (Axiom::UnitActs, &[x]) if vec_ok(x) => act(base.one(), x) == x,
            (Axiom::ScalarKillsZero, &[r]) if sc_ok(r) => act(r, z) == z,
            (Axiom::ZeroScalarKills, &[x]) if vec_ok(x) => act(base.zero(), x) == z,
            (Axiom::ActionCompatible, &[r, s, x]) if sc_ok(r) && sc_ok(s) && vec_ok(x) => {
                act(base.mul(r, s), x) == act(r, act(s, x))
            }
            (Axiom::ActionDistributesOverVectors, &[r, x, y])
                if sc_ok(r) && vec_ok(x) && vec_ok(y) =>
            {
                act(r, add(x, y)) == add(act(r, x), act(r, y))
            }
            (Axiom::ActionDistributesOverScalars, &[r, s, x])
                if sc_ok(r) && sc_ok(s) && vec_ok(x) =>
            {
                act(base.add(r, s), x) == add(act(r, x), act(s, x))
            }
            _ => return None,
        })
    }

    fn first_violation(&self, base: &Semiring) -> Option<(Axiom, Vec<usize>)> {
        let (m, k) = (self.size, base.size());
        let fails = |axiom, w: &[usize]| self.holds_at_unchecked(base, axiom, w) == Some(false);
        for x in 0..m {
            if fails(Axiom::ModuleAddIdentity, &[x]) {
                return Some((Axiom::ModuleAddIdentity, vec![x]));
            }
        }
        for x in 0..m {
            if fails(Axiom::UnitActs, &[x]) {
                return Some((Axiom::UnitActs, vec![x]));
            }
        }
        for r in 0..k {
            if fails(Axiom::ScalarKillsZero, &[r]) {
                return Some((Axiom::ScalarKillsZero, vec![r]));
            }
        }
        for x in 0..m {
            if fails(Axiom::ZeroScalarKills, &[x]) {
                return Some((Axiom::ZeroScalarKills, vec![x]));
            }
        }
        for x in 0..m {
            for y in x + 1..m {
                if fails(Axiom::ModuleAddCommutative, &[x, y]) {
                    return Some((Axiom::ModuleAddCommutative, vec![x, y]));
                }
            }
        }
        for x in 0..m {
            for y in 0..m {
                for w in 0..m {
                    if fails(Axiom::ModuleAddAssociative, &[x, y, w]) {
                        return Some((Axiom::ModuleAddAssociative, vec![x, y, w]));
                    }
                }
            }
        }
        for r in 0..k {
            for s in 0..k {
                for x in 0..m {
                    if fails(Axiom::ActionCompatible, &[r, s, x]) {
                        return Some((Axiom::ActionCompatible, vec![r, s, x]));
                    }
                }
            }
        }
        for r in 0..k {
            for x in 0..m {
                for y in 0..m {
                    if fails(Axiom::ActionDistributesOverVectors, &[r, x, y]) {
                        return Some((Axiom::ActionDistributesOverVectors, vec![r, x, y]));
                    }
                }
            }
        }
        for r in 0..k {
            for s in 0..k {
                for x in 0..m {
                    if fails(Axiom::ActionDistributesOverScalars, &[r, s, x]) {
                        return Some((Axiom::ActionDistributesOverScalars, vec![r, s, x]));
                    }
                }
            }
        }
        None
    }
}

/// A validated finite semimodule on the elements `0..size`.
#[derive(Clone)]
pub struct Semimodule {
    name: String,
    base: Arc<Semiring>,
    size: usize,
    zero: usize,
    add: Vec<usize>,
    act: Vec<usize>,
    lattice: OnceLock<Vec<Subset>>,
}

/// Checks every semimodule axiom against `base`.
pub fn validate_semimodule(
    name: impl Into<String>,
    base: Arc<Semiring>,
    tables: &SemimoduleTables,
) -> Result<Semimodule> {
    tables.check_shape(&base)?;
    if let Some((axiom, witness)) = tables.first_violation(&base) {
        return Err(AlgebraError::AxiomViolation { axiom, witness });
    }
    Ok(Semimodule::from_trusted(name.into(), base, tables))
}

impl Semimodule {
    fn from_trusted(name: String, base: Arc<Semiring>, t: &SemimoduleTables) -> Self {
        Self {
            name,
            base,
            size: t.size,
            zero: t.zero,
            add: t.add.iter().flatten().copied().collect(),
            act: t.act.iter().flatten().copied().collect(),
            lattice: OnceLock::new(),
        }
    }

    fn from_fns_trusted(
        name: String,
        base: Arc<Semiring>,
        size: usize,
        zero: usize,
        add: impl Fn(usize, usize) -> usize,
        act: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let mut add_flat = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                add_flat.push(add(x, y));
            }
        }
        let mut act_flat = Vec::with_capacity(base.size() * size);
        for r in base.elements() {
            for x in 0..size {
                act_flat.push(act(r, x));
            }
        }
        Self {
            name,
            base,
            size,
            zero,
            add: add_flat,
            act: act_flat,
            lattice: OnceLock::new(),
        }
    }

    /// The semiring acting on itself by multiplication.
    pub fn regular(base: Arc<Semiring>) -> Self {
        let name = base.name().to_string();
        let b = Arc::clone(&base);
        let size = base.size();
        let zero = base.zero();
        Self::from_fns_trusted(name, base, size, zero, |x, y| b.add(x, y), |r, x| b.mul(r, x))
    }

    /// The one-element semimodule.
    pub fn zero_module(base: Arc<Semiring>) -> Self {
        Self::from_fns_trusted("0".into(), base, 1, 0, |_, _| 0, |_, _| 0)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn base(&self) -> &Arc<Semiring> {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y]
    }

    #[inline]
    pub fn act(&self, r: usize, x: usize) -> usize {
        self.act[r * self.size + x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn scalars(&self) -> std::ops::Range<usize> {
        self.base.elements()
    }

    pub fn tables(&self) -> SemimoduleTables {
        SemimoduleTables::from_fns(&self.base, self.size, self.zero, |x, y| self.add(x, y), |r, x| {
            self.act(r, x)
        })
    }

    /// Same base structure, tables and zero; names are ignored.
    pub fn same_structure(&self, other: &Semimodule) -> bool {
        std::ptr::eq(self, other)
            || (self.base.same_structure(&other.base)
                && self.size == other.size
                && self.zero == other.zero
                && self.add == other.add
                && self.act == other.act)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn zero_sub(&self) -> Subset {
        Subset::singleton(self.size, self.zero)
    }

    pub fn is_zero_sub(&self, n: &Subset) -> bool {
        n.len() == 1 && n.contains(self.zero)
    }

    fn same_parent(&self, s: &Subset) -> Result<()> {
        if s.universe() == self.size {
            Ok(())
        } else {
            Err(AlgebraError::ParentMismatch)
        }
    }

    fn same_base(&self, ideal: &Subset) -> Result<()> {
        if ideal.universe() == self.base.size() {
            Ok(())
        } else {
            Err(AlgebraError::ParentMismatch)
        }
    }

    // ---- subsemimodules ----

    pub fn is_subsemimodule(&self, s: &Subset) -> bool {
        if s.universe() != self.size || s.is_empty() {
            return false;
        }
        for x in s.iter() {
            for y in s.iter() {
                if !s.contains(self.add(x, y)) {
                    return false;
                }
            }
            for r in self.scalars() {
                if !s.contains(self.act(r, x)) {
                    return false;
                }
            }
        }
        true
    }

    /// The subsemimodule generated by `s`; `{0}` for the empty set.
    pub fn closure(&self, s: &Subset) -> Subset {
        let mut set = self.zero_sub();
        let mut queue = vec![self.zero];
        for g in s.iter() {
            if set.insert(g) {
                queue.push(g);
            }
        }
        while let Some(x) = queue.pop() {
            let members: Vec<usize> = set.iter().collect();
            for y in members {
                let z = self.add(x, y);
                if set.insert(z) {
                    queue.push(z);
                }
            }
            for r in self.scalars() {
                let z = self.act(r, x);
                if set.insert(z) {
                    queue.push(z);
                }
            }
        }
        set
    }

    /// The lattice of subsemimodules in ascending bitset order, generated by
    /// closure. Computed once and cached.
    pub fn subsemimodules(&self) -> &[Subset] {
        self.lattice
            .get_or_init(|| enumerate_closed(self.size, |s| self.closure(s)))
    }

    /// The same lattice found by testing all `2^m` subsets; `None` above 20 elements.
    pub fn subsemimodules_by_subset_filter(&self) -> Option<Vec<Subset>> {
        if self.size > 20 {
            return None;
        }
        Some(
            (0..1u64 << self.size)
                .map(|bits| Subset::from_bits(self.size, bits))
                .filter(|s| self.is_subsemimodule(s))
                .collect(),
        )
    }

    /// `{r·n | n ∈ N}`. Always a subsemimodule when `N` is one.
    pub fn scalar_image(&self, r: usize, n: &Subset) -> Subset {
        Subset::from_indices(self.size, n.iter().map(|x| self.act(r, x)))
    }

    /// `x ∈ N` and `x + y ∈ N` imply `y ∈ N`.
    pub fn is_subtractive(&self, n: &Subset) -> bool {
        for x in n.iter() {
            for y in self.elements() {
                if !n.contains(y) && n.contains(self.add(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// `{m | m + x = y for some x, y ∈ N}`.
    pub fn subtractive_closure(&self, n: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for m in self.elements() {
            if n.iter().any(|x| n.contains(self.add(m, x))) {
                out.insert(m);
            }
        }
        debug_assert!(!self.is_subsemimodule(n) || self.is_subsemimodule(&out));
        debug_assert!(!self.is_subsemimodule(n) || self.is_subtractive(&out));
        out
    }

    /// `Ann(N) = {r | r·n = 0 for all n ∈ N}`, an ideal of the base.
    pub fn annihilator(&self, n: &Subset) -> Subset {
        let mut out = Subset::empty(self.base.size());
        for r in self.scalars() {
            if n.iter().all(|x| self.act(r, x) == self.zero) {
                out.insert(r);
            }
        }
        out
    }

    /// `(K :_M I) = {m | r·m ∈ K for all r ∈ I}`.
    pub fn colon_into(&self, k: &Subset, ideal: &Subset) -> Result<Subset> {
        self.same_parent(k)?;
        self.same_base(ideal)?;
        let mut out = Subset::empty(self.size);
        for m in self.elements() {
            if ideal.iter().all(|r| k.contains(self.act(r, m))) {
                out.insert(m);
            }
        }
        Ok(out)
    }

    /// `(0 :_M I)`.
    pub fn zero_colon(&self, ideal: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for m in self.elements() {
            if ideal.iter().all(|r| self.act(r, m) == self.zero) {
                out.insert(m);
            }
        }
        out
    }

    /// `(N :_R M) = {r | r·M ⊆ N}`.
    pub fn colon_ideal(&self, n: &Subset) -> Result<Subset> {
        self.same_parent(n)?;
        let mut out = Subset::empty(self.base.size());
        for r in self.scalars() {
            if self.elements().all(|m| n.contains(self.act(r, m))) {
                out.insert(r);
            }
        }
        Ok(out)
    }

    /// `N + K`.
    pub fn sum(&self, n: &Subset, k: &Subset) -> Result<Subset> {
        self.same_parent(n)?;
        self.same_parent(k)?;
        Ok(self.closure(&n.union(k)))
    }

    /// `IN`: all finite sums of products `r·n` with `r ∈ I`, `n ∈ N`.
    pub fn ideal_apply(&self, ideal: &Subset, n: &Subset) -> Result<Subset> {
        self.same_parent(n)?;
        self.same_base(ideal)?;
        let mut products = Subset::empty(self.size);
        for r in ideal.iter() {
            for x in n.iter() {
                products.insert(self.act(r, x));
            }
        }
        Ok(self.closure(&products))
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator(&self.full()) == self.base.zero_ideal()
    }

    /// Non-zero, with `{0}` and `M` as its only subsemimodules.
    pub fn is_simple(&self) -> bool {
        self.size > 1 && self.subsemimodules().len() == 2
    }

    /// Proper subsemimodules not strictly inside another proper one.
    pub fn maximal_subsemimodules(&self) -> Vec<Subset> {
        let lattice = self.subsemimodules();
        lattice
            .iter()
            .filter(|n| !n.is_full())
            .filter(|n| !lattice.iter().any(|k| !k.is_full() && n.is_proper_subset(k)))
            .cloned()
            .collect()
    }

    /// A subsemimodule as a semimodule in its own right. Element `i` of the
    /// result is the `i`-th smallest member of `n`; the returned vector maps
    /// new indices to old ones.
    pub fn restrict(&self, n: &Subset) -> Result<(Semimodule, Vec<usize>)> {
        if !self.is_subsemimodule(n) {
            return Err(AlgebraError::ParentMismatch);
        }
        let members = n.to_vec();
        let mut position = vec![usize::MAX; self.size];
        for (i, &x) in members.iter().enumerate() {
            position[x] = i;
        }
        let sub = Semimodule::from_fns_trusted(
            format!("{}|{}", self.name, n),
            Arc::clone(&self.base),
            members.len(),
            position[self.zero],
            |i, j| position[self.add(members[i], members[j])],
            |r, i| position[self.act(r, members[i])],
        );
        Ok((sub, members))
    }

    /// Classes of the Bourne congruence `m ~ m'` iff `m + n1 = m' + n2` for
    /// some `n1, n2 ∈ N`, numbered by their least member. Returns the class
    /// index of every element.
    pub fn bourne_classes(&self, n: &Subset) -> Vec<usize> {
        let mut parent: Vec<usize> = self.elements().collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        // m ~ m + n generates the relation, which is already an equivalence
        for m in self.elements() {
            for x in n.iter() {
                let (a, b) = (find(&mut parent, m), find(&mut parent, self.add(m, x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut label = vec![usize::MAX; self.size];
        let mut class = vec![0; self.size];
        let mut next = 0;
        for m in self.elements() {
            let root = find(&mut parent, m);
            if label[root] == usize::MAX {
                label[root] = next;
                next += 1;
            }
            class[m] = label[root];
        }
        class
    }

    /// External direct product over the same base: `r(m1, m2) = (r·m1, r·m2)`,
    /// with `(m1, m2)` at index `m1·|M2| + m2`.
    pub fn product_same_base(&self, other: &Semimodule) -> Result<Semimodule> {
        if !self.base.same_structure(&other.base) {
            return Err(AlgebraError::ParentMismatch);
        }
        let m2 = other.size;
        let split = |i: usize| (i / m2, i % m2);
        Ok(Semimodule::from_fns_trusted(
            format!("{}x{}", self.name, other.name),
            Arc::clone(&self.base),
            self.size * m2,
            self.zero * m2 + other.zero,
            |x, y| {
                let ((x1, x2), (y1, y2)) = (split(x), split(y));
                self.add(x1, y1) * m2 + other.add(x2, y2)
            },
            |r, x| {
                let (x1, x2) = split(x);
                self.act(r, x1) * m2 + other.act(r, x2)
            },
        ))
    }

    /// `M1 × M2` over `R1 × R2` with `(r1, r2)(m1, m2) = (r1·m1, r2·m2)`.
    pub fn external_product(&self, other: &Semimodule) -> Semimodule {
        let base = Arc::new(self.base.product(&other.base));
        let (m2, k2) = (other.size, other.base.size());
        let split = |i: usize| (i / m2, i % m2);
        Semimodule::from_fns_trusted(
            format!("{}x{}", self.name, other.name),
            base,
            self.size * m2,
            self.zero * m2 + other.zero,
            |x, y| {
                let ((x1, x2), (y1, y2)) = (split(x), split(y));
                self.add(x1, y1) * m2 + other.add(x2, y2)
            },
            |r, x| {
                let (r1, r2) = (r / k2, r % k2);
                let (x1, x2) = split(x);
                self.act(r1, x1) * m2 + other.act(r2, x2)
            },
        )
    }
}

/// Outcome of the Hopfian check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hopfian {
    /// Every surjective endomorphism was enumerated and found injective.
    Yes,
    /// A surjective endomorphism that is not injective.
    No(Vec<usize>),
    /// Too many candidate maps to enumerate; a finite semimodule is Hopfian
    /// anyway, since a surjection of a finite set onto itself is a bijection.
    SkippedFinite,
}

/// Default bound on the size of a semimodule whose endomorphisms are enumerated.
pub const HOPFIAN_ENUMERATION_LIMIT: usize = 6;

impl Semimodule {
    /// Quotient by the Bourne congruence of `n`, with the projection map.
    pub fn quotient(self: &Arc<Self>, n: &Subset) -> Result<(Arc<Semimodule>, Homomorphism)> {
        self.same_parent(n)?;
        let class = self.bourne_classes(n);
        let count = class.iter().max().map_or(0, |c| c + 1);
        let mut rep = vec![usize::MAX; count];
        for m in self.elements().rev() {
            rep[class[m]] = m;
        }
        let q = Arc::new(Semimodule::from_fns_trusted(
            format!("{}/{}", self.name, n),
            Arc::clone(&self.base),
            count,
            class[self.zero],
            |c, d| class[self.add(rep[c], rep[d])],
            |r, c| class[self.act(r, rep[c])],
        ));
        let projection = Homomorphism::new(Arc::clone(self), Arc::clone(&q), class)?;
        Ok((q, projection))
    }

    /// Whether every surjective endomorphism is injective, by enumeration when
    /// the semimodule has at most `limit` elements.
    pub fn is_hopfian(self: &Arc<Self>, limit: usize) -> Hopfian {
        if self.size > limit {
            return Hopfian::SkippedFinite;
        }
        let maps = homomorphism::enumerate_maps(self, self, u64::MAX)
            .expect("no cap was imposed");
        for map in maps {
            let mut hit = Subset::empty(self.size);
            for &y in &map {
                hit.insert(y);
            }
            if hit.is_full() && map.len() != hit.len() {
                return Hopfian::No(map);
            }
        }
        Hopfian::Yes
    }
}

impl fmt::Debug for Semimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semimodule")
            .field("name", &self.name)
            .field("base", &self.base.name())
            .field("size", &self.size)
            .field("zero", &self.zero)
            .finish_non_exhaustive()
    }
}
