//! Oracles built from plain arithmetic, independent of the library's
//! enumeration code.

#![allow(dead_code)]

use semimod::{SemimoduleTables, Semiring, SemiringTables, Subset};

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).all(|d| !p.is_multiple_of(d))
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

/// `dZ_n` as a sorted list.
pub fn multiples(n: usize, d: usize) -> Vec<usize> {
    (0..n).filter(|x| x % d == 0).collect()
}

/// Subgroups of `Z_n`, which are its ideals and its subsemimodules over itself.
pub fn zn_subgroups(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = divisors(n).into_iter().map(|d| multiples(n, d)).collect();
    out.sort();
    out
}

/// Subgroups of prime order: the second subsemimodules of `Z_n` over itself.
pub fn zn_seconds(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = divisors(n)
        .into_iter()
        .filter(|&p| is_prime(p))
        .map(|p| multiples(n, n / p))
        .collect();
    out.sort();
    out
}

/// `pZ_n` for primes `p | n`.
pub fn zn_primes(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = divisors(n)
        .into_iter()
        .filter(|&p| is_prime(p))
        .map(|p| multiples(n, p))
        .collect();
    out.sort();
    out
}

/// Every subset of `0..size` (as a bitmask) closed under the given
/// operations and containing `zero`.
pub fn brute_force_closed(
    size: usize,
    zero: usize,
    scalars: usize,
    add: impl Fn(usize, usize) -> usize,
    act: impl Fn(usize, usize) -> usize,
) -> Vec<Vec<usize>> {
    assert!(size <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1 << size) {
        let has = |x: usize| mask >> x & 1 == 1;
        if !has(zero) {
            continue;
        }
        let members: Vec<usize> = (0..size).filter(|&x| has(x)).collect();
        let closed = members.iter().all(|&x| {
            members.iter().all(|&y| has(add(x, y))) && (0..scalars).all(|r| has(act(r, x)))
        });
        if closed {
            out.push(members);
        }
    }
    out.sort();
    out
}

pub fn sorted(sets: &[Subset]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = sets.iter().map(Subset::to_vec).collect();
    out.sort();
    out
}

/// Every table obtained from `t` by changing one cell (constants included)
/// to another in-range value.
pub fn semiring_mutations(t: &SemiringTables) -> Vec<SemiringTables> {
    let n = t.size;
    let mut out = Vec::new();
    for v in 0..n {
        if v != t.zero {
            out.push(SemiringTables { zero: v, ..t.clone() });
        }
        if v != t.one {
            out.push(SemiringTables { one: v, ..t.clone() });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for v in 0..n {
                if v != t.add[a][b] {
                    let mut m = t.clone();
                    m.add[a][b] = v;
                    out.push(m);
                }
                if v != t.mul[a][b] {
                    let mut m = t.clone();
                    m.mul[a][b] = v;
                    out.push(m);
                }
            }
        }
    }
    out
}

pub fn semimodule_mutations(base: &Semiring, t: &SemimoduleTables) -> Vec<SemimoduleTables> {
    let m = t.size;
    let mut out = Vec::new();
    for v in 0..m {
        if v != t.zero {
            out.push(SemimoduleTables { zero: v, ..t.clone() });
        }
    }
    for x in 0..m {
        for y in 0..m {
            for v in 0..m {
                if v != t.add[x][y] {
                    let mut c = t.clone();
                    c.add[x][y] = v;
                    out.push(c);
                }
            }
        }
    }
    for r in base.elements() {
        for x in 0..m {
            for v in 0..m {
                if v != t.act[r][x] {
                    let mut c = t.clone();
                    c.act[r][x] = v;
                    out.push(c);
                }
            }
        }
    }
    out
}
