//! Decision procedures for second, prime, minimal, comultiplication,
//! coidempotent and socle notions on the subsemimodule lattice.
//!
//! All functions quantify exhaustively over scalars, elements, ideals and
//! subsemimodules; `aN` is always the setwise image `{a·n | n ∈ N}`.

use crate::error::{AlgebraError, Result};
use crate::semimodule::Semimodule;
use crate::subset::Subset;

/// Non-zero, and every scalar maps `N` onto `N` or onto `{0}`.
pub fn is_second(m: &Semimodule, n: &Subset) -> bool {
    if m.is_zero_sub(n) || n.is_empty() {
        return false;
    }
    m.scalars().all(|a| {
        let image = m.scalar_image(a, n);
        image == *n || m.is_zero_sub(&image)
    })
}

/// `N ≠ 0`, and `aN ⊆ K` implies `aN = 0` or `N ⊆ K`, for every scalar `a`
/// and every subsemimodule `K`.
pub fn is_second_characterization(m: &Semimodule, n: &Subset) -> bool {
    if m.is_zero_sub(n) || n.is_empty() {
        return false;
    }
    let lattice = m.subsemimodules();
    m.scalars().all(|a| {
        let image = m.scalar_image(a, n);
        lattice
            .iter()
            .filter(|k| image.is_subset(k))
            .all(|k| m.is_zero_sub(&image) || n.is_subset(k))
    })
}

/// `N` is `p`-second: second with annihilator exactly `p`.
pub fn is_p_second(m: &Semimodule, n: &Subset, p: &Subset) -> bool {
    is_second(m, n) && m.annihilator(n) == *p
}

/// For proper `N`: `r·x ∈ N` implies `r ∈ (N :_R M)` or `x ∈ N`.
pub fn is_prime_subsemimodule(m: &Semimodule, n: &Subset) -> Result<bool> {
    if n.is_full() {
        return Err(AlgebraError::NotProper);
    }
    let colon = m.colon_ideal(n)?;
    for r in m.scalars() {
        if colon.contains(r) {
            continue;
        }
        for x in m.elements() {
            if !n.contains(x) && n.contains(m.act(r, x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Non-zero with no subsemimodule strictly between `0` and `N`.
pub fn is_minimal_subsemimodule(m: &Semimodule, n: &Subset) -> bool {
    if m.is_zero_sub(n) || n.is_empty() {
        return false;
    }
    !m.subsemimodules()
        .iter()
        .any(|k| !m.is_zero_sub(k) && k.is_proper_subset(n))
}

/// `{(0 :_M I) | I an ideal}`, sorted.
fn zero_colons(m: &Semimodule) -> Vec<Subset> {
    let mut out: Vec<Subset> = m.base().ideals().iter().map(|i| m.zero_colon(i)).collect();
    out.sort();
    out.dedup();
    out
}

/// Every subsemimodule is `(0 :_M I)` for some ideal `I`.
pub fn is_comultiplication(m: &Semimodule) -> bool {
    non_comultiplication_witness(m, false).is_none()
}

/// Every subtractive subsemimodule is `(0 :_M I)` for some ideal `I`.
pub fn is_k_comultiplication(m: &Semimodule) -> bool {
    non_comultiplication_witness(m, true).is_none()
}

/// A (subtractive, if asked) subsemimodule that is no `(0 :_M I)`.
pub fn non_comultiplication_witness(m: &Semimodule, subtractive_only: bool) -> Option<Subset> {
    let reachable = zero_colons(m);
    m.subsemimodules()
        .iter()
        .filter(|n| !subtractive_only || m.is_subtractive(n))
        .find(|n| reachable.binary_search(n).is_err())
        .cloned()
}

/// `Ann(N)²`, the ideal generated by products of annihilating scalars.
pub fn annihilator_squared(m: &Semimodule, n: &Subset) -> Subset {
    let ann = m.annihilator(n);
    m.base().ideal_product(&ann, &ann)
}

/// `N = (0 :_M Ann(N)²)`.
pub fn is_coidempotent(m: &Semimodule, n: &Subset) -> bool {
    m.zero_colon(&annihilator_squared(m, n)) == *n
}

pub fn is_fully_coidempotent(m: &Semimodule) -> bool {
    non_coidempotent_witness(m).is_none()
}

pub fn non_coidempotent_witness(m: &Semimodule) -> Option<Subset> {
    m.subsemimodules()
        .iter()
        .find(|n| !is_coidempotent(m, n))
        .cloned()
}

/// All second subsemimodules, ascending.
pub fn second_subsemimodules(m: &Semimodule) -> Vec<Subset> {
    m.subsemimodules()
        .iter()
        .filter(|n| is_second(m, n))
        .cloned()
        .collect()
}

/// `sec(N)`: the sum of all second subsemimodules inside `N`, or `{0}` when
/// there are none.
pub fn socle(m: &Semimodule, n: &Subset) -> Subset {
    let mut union = m.zero_sub();
    for s in second_subsemimodules(m).iter().filter(|s| s.is_subset(n)) {
        union.union_with(s);
    }
    m.closure(&union)
}

/// `N ≠ 0` and `sec(N) = N`.
pub fn is_socle_subsemimodule(m: &Semimodule, n: &Subset) -> bool {
    !m.is_zero_sub(n) && !n.is_empty() && socle(m, n) == *n
}

pub fn socle_subsemimodules(m: &Semimodule) -> Vec<Subset> {
    m.subsemimodules()
        .iter()
        .filter(|n| is_socle_subsemimodule(m, n))
        .cloned()
        .collect()
}

/// Second subsemimodules `N ⊆ K` such that no second `L` has `N ⊊ L ⊆ K`.
pub fn maximal_second_subsemimodules(m: &Semimodule, k: &Subset) -> Vec<Subset> {
    let inside: Vec<Subset> = second_subsemimodules(m)
        .into_iter()
        .filter(|s| s.is_subset(k))
        .collect();
    inside
        .iter()
        .filter(|n| !inside.iter().any(|l| n.is_proper_subset(l)))
        .cloned()
        .collect()
}
