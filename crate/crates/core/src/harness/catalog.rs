use std::sync::Arc;

use super::Input;
use crate::semimodule::{validate_semimodule, Semimodule, SemimoduleTables};
use crate::semiring::Semiring;

/// Largest product (in elements, for modules and for their bases) formed
/// automatically from a user-supplied list of structures.
const DERIVED_PRODUCT_LIMIT: usize = 64;

/// Structures to run statements on.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub semirings: Vec<Arc<Semiring>>,
    pub modules: Vec<Arc<Semimodule>>,
    /// Factor lists; each becomes a product input.
    pub products: Vec<Vec<Arc<Semimodule>>>,
}

impl Catalog {
    /// A catalog from loose structures, with products formed from every
    /// ordered pair of modules small enough to enumerate.
    pub fn from_structures(semirings: Vec<Arc<Semiring>>, modules: Vec<Arc<Semimodule>>) -> Self {
        let mut products = Vec::new();
        for a in &modules {
            for b in &modules {
                if a.size() * b.size() <= DERIVED_PRODUCT_LIMIT
                    && a.base().size() * b.base().size() <= DERIVED_PRODUCT_LIMIT
                {
                    products.push(vec![Arc::clone(a), Arc::clone(b)]);
                }
            }
        }
        Self { semirings, modules, products }
    }

    pub fn semiring(&self, name: &str) -> Option<&Arc<Semiring>> {
        self.semirings.iter().find(|r| r.name() == name)
    }

    pub fn module(&self, name: &str) -> Option<&Arc<Semimodule>> {
        self.modules.iter().find(|m| m.name() == name)
    }

    /// All inputs in a fixed order: modules, module pairs over a common base,
    /// ordered semiring pairs, then products.
    pub fn inputs(&self) -> Vec<Input> {
        let mut out: Vec<Input> = self.modules.iter().map(|m| Input::module(Arc::clone(m))).collect();
        for s in &self.modules {
            for t in &self.modules {
                if s.base().same_structure(t.base()) {
                    out.push(Input::ModulePair { source: Arc::clone(s), target: Arc::clone(t) });
                }
            }
        }
        for a in &self.semirings {
            for b in &self.semirings {
                out.push(Input::semiring_pair(Arc::clone(a), Arc::clone(b)));
            }
        }
        for factors in &self.products {
            out.push(Input::product(factors.clone()));
        }
        out
    }
}

/// `{0, a, 1}` with `x + y = max(x, y)` over the Boolean semiring, where `1`
/// acts as the identity and `0` sends everything to `0`. Indices: `0 → 0`,
/// `a → 1`, `1 → 2`.
pub fn chain3(base: Arc<Semiring>) -> Semimodule {
    let t = SemimoduleTables::from_fns(&base, 3, 0, |x, y| x.max(y), |r, x| {
        if r == base.zero() { 0 } else { x }
    });
    validate_semimodule("C3_over_B", base, &t).expect("C3 is a B-semimodule")
}

/// `Z2` as a `Z4`-semimodule through `Z4 → Z2`; not faithful.
pub fn z2_over_z4(z4: Arc<Semiring>) -> Semimodule {
    let t = SemimoduleTables::from_fns(&z4, 2, 0, |x, y| x ^ y, |r, x| (r % 2) * x);
    validate_semimodule("Z2_over_Z4", z4, &t).expect("Z2 is a Z4-semimodule")
}

fn regular(r: &Arc<Semiring>) -> Arc<Semimodule> {
    let name = format!("{0}_over_{0}", r.name());
    Arc::new(Semimodule::regular(Arc::clone(r)).with_name(name))
}

/// The curated default catalog.
pub fn builtin_catalog() -> Catalog {
    let b = Arc::new(Semiring::boolean());
    let zn: Vec<Arc<Semiring>> = [2, 3, 4, 6, 8, 16]
        .into_iter()
        .map(|n| Arc::new(Semiring::integers_mod(n)))
        .collect();
    let [z2, z3, z4, z6, z8, z16] = <[Arc<Semiring>; 6]>::try_from(zn).expect("six rings");
    let t2 = Arc::new(Semiring::truncated_tropical(2));
    let bb = Arc::new(b.product(&b));
    let z2z3 = Arc::new(z2.product(&z3));
    let z6z6 = Arc::new(z6.product(&z6));

    let semirings = vec![
        Arc::clone(&b),
        Arc::clone(&z2),
        Arc::clone(&z3),
        Arc::clone(&z4),
        Arc::clone(&z6),
        Arc::clone(&z8),
        Arc::clone(&z16),
        Arc::clone(&t2),
        Arc::clone(&bb),
        Arc::clone(&z2z3),
        Arc::clone(&z6z6),
    ];

    let m_b = regular(&b);
    let m_c3 = Arc::new(chain3(Arc::clone(&b)));
    let m_z2 = regular(&z2);
    let m_z3 = regular(&z3);
    let m_z4 = regular(&z4);
    let m_z2_z4 = Arc::new(z2_over_z4(Arc::clone(&z4)));
    let m_z6 = regular(&z6);
    let modules = vec![
        Arc::clone(&m_b),
        Arc::clone(&m_c3),
        Arc::clone(&m_z2),
        Arc::clone(&m_z3),
        Arc::clone(&m_z4),
        Arc::clone(&m_z2_z4),
        Arc::clone(&m_z6),
        regular(&z8),
        regular(&z16),
        regular(&t2),
        regular(&bb),
        regular(&z2z3),
        regular(&z6z6),
    ];

    let products = vec![
        vec![Arc::clone(&m_z2), Arc::clone(&m_z3)],
        vec![Arc::clone(&m_z6), Arc::clone(&m_z6)],
        vec![Arc::clone(&m_b), Arc::clone(&m_c3)],
        vec![Arc::clone(&m_z2), Arc::clone(&m_z2)],
        vec![Arc::clone(&m_z2_z4), Arc::clone(&m_z2)],
        vec![Arc::clone(&m_z2), Arc::clone(&m_z3), Arc::clone(&m_b)],
    ];

    Catalog { semirings, modules, products }
}
