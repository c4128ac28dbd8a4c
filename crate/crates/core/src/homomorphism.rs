//! Semimodule homomorphisms, kernels, images, and enumeration of all
//! homomorphisms between two small semimodules.

use std::sync::Arc;

use crate::error::{AlgebraError, HomLaw, Result};
use crate::semimodule::Semimodule;
use crate::subset::Subset;

#[derive(Debug, Clone)]
pub struct Homomorphism {
    source: Arc<Semimodule>,
    target: Arc<Semimodule>,
    map: Vec<usize>,
}

impl Homomorphism {
    /// Validates `map` as a homomorphism `source → target`.
    pub fn new(source: Arc<Semimodule>, target: Arc<Semimodule>, map: Vec<usize>) -> Result<Self> {
        if !source.base().same_structure(target.base()) {
            return Err(AlgebraError::ParentMismatch);
        }
        if map.len() != source.size() || map.iter().any(|&y| y >= target.size()) {
            return Err(AlgebraError::Shape(format!(
                "a map from {} elements into {} elements was expected",
                source.size(),
                target.size()
            )));
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.add(x, y)] != target.add(map[x], map[y]) {
                    return Err(AlgebraError::NotHomomorphism {
                        law: HomLaw::Additive,
                        witness: vec![x, y],
                    });
                }
            }
            for r in source.scalars() {
                if map[source.act(r, x)] != target.act(r, map[x]) {
                    return Err(AlgebraError::NotHomomorphism {
                        law: HomLaw::Linear,
                        witness: vec![r, x],
                    });
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(m: Arc<Semimodule>) -> Self {
        let map = m.elements().collect();
        Self { source: Arc::clone(&m), target: m, map }
    }

    pub fn source(&self) -> &Arc<Semimodule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Semimodule> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `Ker(f) = {a | f(a) = 0}`.
    pub fn kernel(&self) -> Subset {
        Subset::from_indices(
            self.source.size(),
            self.source.elements().filter(|&x| self.map[x] == self.target.zero()),
        )
    }

    /// `f(M)`.
    pub fn image(&self) -> Subset {
        self.image_of(&self.source.full())
    }

    pub fn image_of(&self, s: &Subset) -> Subset {
        Subset::from_indices(self.target.size(), s.iter().map(|x| self.map[x]))
    }

    pub fn preimage(&self, t: &Subset) -> Subset {
        Subset::from_indices(
            self.source.size(),
            self.source.elements().filter(|&x| t.contains(self.map[x])),
        )
    }

    pub fn has_zero_kernel(&self) -> bool {
        self.kernel().len() == 1
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.source.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_full()
    }

    /// `f(x1) = f(x2)` implies `x1 + k1 = x2 + k2` for some `k1, k2 ∈ Ker(f)`.
    pub fn is_k_regular(&self) -> bool {
        let kernel = self.kernel();
        let m = &self.source;
        for x1 in m.elements() {
            for x2 in x1 + 1..m.size() {
                if self.map[x1] != self.map[x2] {
                    continue;
                }
                let joined = kernel
                    .iter()
                    .any(|k1| kernel.iter().any(|k2| m.add(x1, k1) == m.add(x2, k2)));
                if !joined {
                    return false;
                }
            }
        }
        true
    }
}

/// Number of candidate maps `|target|^|source|`, saturating.
pub fn candidate_count(source: &Semimodule, target: &Semimodule) -> u64 {
    let mut count: u64 = 1;
    for _ in 0..source.size() {
        count = count.saturating_mul(target.size() as u64);
    }
    count
}

/// Every homomorphism `source → target` as a table of images, in
/// lexicographic order. `None` when the bases differ or there are more than
/// `cap` candidate maps.
///
/// Elements are assigned in index order and each law is checked as soon as
/// all the elements it mentions are assigned.
pub fn enumerate_maps(source: &Semimodule, target: &Semimodule, cap: u64) -> Option<Vec<Vec<usize>>> {
    if !source.base().same_structure(target.base()) || candidate_count(source, target) > cap {
        return None;
    }
    let m = source.size();
    // constraints whose largest mentioned element is x
    let mut add_checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); m];
    let mut act_checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); m];
    for x in 0..m {
        for y in x..m {
            let s = source.add(x, y);
            add_checks[y.max(s)].push((x, y, s));
        }
        for r in source.scalars() {
            let s = source.act(r, x);
            act_checks[x.max(s)].push((r, x, s));
        }
    }
    let mut out = Vec::new();
    let mut map = vec![0; m];
    fn go(
        x: usize,
        map: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        target: &Semimodule,
        add_checks: &[Vec<(usize, usize, usize)>],
        act_checks: &[Vec<(usize, usize, usize)>],
    ) {
        if x == map.len() {
            out.push(map.clone());
            return;
        }
        for v in target.elements() {
            map[x] = v;
            let ok = add_checks[x]
                .iter()
                .all(|&(a, b, s)| map[s] == target.add(map[a], map[b]))
                && act_checks[x]
                    .iter()
                    .all(|&(r, a, s)| map[s] == target.act(r, map[a]));
            if ok {
                go(x + 1, map, out, target, add_checks, act_checks);
            }
        }
    }
    go(0, &mut map, &mut out, target, &add_checks, &act_checks);
    Some(out)
}

/// Every homomorphism `source → target`, validated, or `None` above the cap.
pub fn homomorphisms(
    source: &Arc<Semimodule>,
    target: &Arc<Semimodule>,
    cap: u64,
) -> Option<Vec<Homomorphism>> {
    let maps = enumerate_maps(source, target, cap)?;
    Some(
        maps.into_iter()
            .map(|map| Homomorphism {
                source: Arc::clone(source),
                target: Arc::clone(target),
                map,
            })
            .collect(),
    )
}
