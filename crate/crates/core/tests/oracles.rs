//! Library results against oracles computed with plain arithmetic.

mod common;

use std::sync::Arc;

use common::*;
use semimod::harness::{self, builtin_catalog, Config, Input, Status, TheoremId};
use semimod::second::{
    is_fully_coidempotent, is_minimal_subsemimodule, is_second, maximal_second_subsemimodules,
    second_subsemimodules, socle,
};
use semimod::{Semimodule, Semiring, Subset};

const CATALOG_MODULI: [usize; 6] = [2, 3, 4, 6, 8, 16];

fn zn(n: usize) -> Arc<Semimodule> {
    Arc::new(Semimodule::regular(Arc::new(Semiring::integers_mod(n))))
}

fn set(n: usize, xs: &[usize]) -> Subset {
    Subset::from_indices(n, xs.iter().copied())
}

#[test]
fn zn_ideals_and_subsemimodules_are_the_subgroups() {
    for n in CATALOG_MODULI {
        let m = zn(n);
        assert_eq!(sorted(m.base().ideals()), zn_subgroups(n), "ideals of Z{n}");
        assert_eq!(sorted(m.subsemimodules()), zn_subgroups(n), "subsemimodules of Z{n}");
    }
    assert_eq!(zn(16).subsemimodules().len(), 5);
    assert_eq!(zn(6).subsemimodules().len(), 4);
}

#[test]
fn zn_seconds_have_prime_order() {
    for n in CATALOG_MODULI {
        let m = zn(n);
        assert_eq!(sorted(&second_subsemimodules(&m)), zn_seconds(n), "Z{n}");
    }
}

#[test]
fn zn_primes_are_generated_by_prime_divisors() {
    for n in CATALOG_MODULI {
        assert_eq!(sorted(&Semiring::integers_mod(n).spec()), zn_primes(n), "Z{n}");
    }
}

#[test]
fn zn_annihilators_by_scan() {
    for n in CATALOG_MODULI {
        let m = zn(n);
        for sub in zn_subgroups(n) {
            let expected: Vec<usize> = (0..n).filter(|a| sub.iter().all(|x| a * x % n == 0)).collect();
            assert_eq!(m.annihilator(&set(n, &sub)).to_vec(), expected, "Z{n} {sub:?}");
        }
    }
}

#[test]
fn zn_colons_by_scan() {
    for n in CATALOG_MODULI {
        let m = zn(n);
        for k in zn_subgroups(n) {
            for i in zn_subgroups(n) {
                let expected: Vec<usize> =
                    (0..n).filter(|x| i.iter().all(|a| k.contains(&(a * x % n)))).collect();
                let got = m.colon_into(&set(n, &k), &set(n, &i)).unwrap();
                assert_eq!(got.to_vec(), expected, "Z{n} ({k:?} : {i:?})");
            }
        }
    }
}

#[test]
fn z16_example_values() {
    let m = zn(16);
    let n = set(16, &[0, 8]);
    assert!(is_minimal_subsemimodule(&m, &n));
    assert!(is_second(&m, &n));
    assert_eq!(m.annihilator(&n).to_vec(), multiples(16, 2));
    assert_eq!(m.closure(&set(16, &[8])), n);
    assert_eq!(m.colon_into(&n, &set(16, &multiples(16, 2))).unwrap().to_vec(), multiples(16, 4));
    assert_eq!(m.maximal_subsemimodules(), vec![set(16, &multiples(16, 2))]);
    assert_eq!(maximal_second_subsemimodules(&m, &m.full()), vec![n.clone()]);
    // x ~ x + 8: eight classes
    let (q, _) = m.quotient(&n).unwrap();
    assert_eq!(q.size(), 8);
    assert_eq!(socle(&m, &set(16, &multiples(16, 4))), n);
}

#[test]
fn z6_example_values() {
    let m = zn(6);
    assert_eq!(m.closure(&set(6, &[2, 3])), m.full());
    assert_eq!(m.annihilator(&set(6, &[0, 3])).to_vec(), vec![0, 2, 4]);
    assert_eq!(m.colon_into(&m.zero_sub(), &set(6, &[0, 2, 4])).unwrap().to_vec(), vec![0, 3]);
    assert_eq!(socle(&m, &m.full()), m.full());
    assert!(m.is_faithful());
}

#[test]
fn closure_lattice_matches_subset_filter_on_small_catalog_modules() {
    let cat = builtin_catalog();
    let mut checked = 0;
    for m in cat.modules.iter().filter(|m| m.size() <= 12) {
        let oracle = brute_force_closed(m.size(), m.zero(), m.base().size(), |x, y| m.add(x, y), |r, x| m.act(r, x));
        assert_eq!(sorted(m.subsemimodules()), oracle, "{}", m.name());
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn ideal_lattices_match_subset_filter() {
    for r in builtin_catalog().semirings.iter().filter(|r| r.size() <= 12) {
        let oracle =
            brute_force_closed(r.size(), r.zero(), r.size(), |a, b| r.add(a, b), |a, b| r.mul(a, b));
        assert_eq!(sorted(r.ideals()), oracle, "{}", r.name());
    }
}

#[test]
fn truncated_tropical_matches_min_plus() {
    // finite values 0..=2 and infinity at index 3
    const INF: usize = 3;
    let t = Semiring::truncated_tropical(2);
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(t.add(a, b), a.min(b));
            let sum = if a == INF || b == INF || a + b > 2 { INF } else { a + b };
            assert_eq!(t.mul(a, b), sum);
        }
    }
    // no finite value has an additive inverse, so only {∞} is strong
    for ideal in t.ideals().iter().filter(|i| !i.is_full()) {
        let has_finite = ideal.iter().any(|x| x != INF);
        assert_eq!(t.is_strong_ideal(ideal), Ok(!has_finite), "{ideal}");
        // min-plus ideals are up-sets, and up-sets are subtractive
        assert!(t.is_subtractive_ideal(ideal), "{ideal}");
    }
}

/// Prime ideals of `Z_a × Z_b`, scanned over explicit pairs.
fn pair_primes(a: usize, b: usize) -> Vec<Vec<usize>> {
    let elems: Vec<(usize, usize)> = (0..a).flat_map(|x| (0..b).map(move |y| (x, y))).collect();
    let index = |(x, y): (usize, usize)| x * b + y;
    let ideals = |n: usize| zn_subgroups(n);
    let mut out = Vec::new();
    for i in ideals(a) {
        for j in ideals(b) {
            let inside = |(x, y): (usize, usize)| i.contains(&x) && j.contains(&y);
            if i.len() == a && j.len() == b {
                continue;
            }
            let prime = elems.iter().all(|&(x1, y1)| {
                elems.iter().all(|&(x2, y2)| {
                    !inside((x1 * x2 % a, y1 * y2 % b)) || inside((x1, y1)) || inside((x2, y2))
                })
            });
            if prime {
                let mut members: Vec<usize> = elems.iter().copied().filter(|&e| inside(e)).map(index).collect();
                members.sort();
                out.push(members);
            }
        }
    }
    out.sort();
    out
}

#[test]
fn product_primes_by_pair_scan() {
    for a in [2, 3, 4, 6] {
        for b in [2, 3, 4, 6] {
            let r = Semiring::integers_mod(a).product(&Semiring::integers_mod(b));
            assert_eq!(sorted(&r.spec()), pair_primes(a, b), "Z{a} x Z{b}");
        }
    }
}

#[test]
fn spec_of_boolean_square() {
    let b = Semiring::boolean();
    let bb = b.product(&b);
    // (x, y) at 2x + y
    assert_eq!(sorted(&bb.spec()), vec![vec![0, 1], vec![0, 2]]);
}

#[test]
fn z2_times_z3_has_as_many_ideals_as_z6() {
    let r = Semiring::integers_mod(2).product(&Semiring::integers_mod(3));
    assert_eq!(r.ideals().len(), 4);
    assert_eq!(r.ideals().len(), Semiring::integers_mod(6).ideals().len());
}

#[test]
fn z6_square_seconds_are_one_sided() {
    let m = zn(6);
    let p = m.external_product(&m);
    let mut expected = Vec::new();
    for s in zn_seconds(6) {
        // S × 0 and 0 × S, with (x, y) at 6x + y
        expected.push(s.iter().map(|x| 6 * x).collect::<Vec<_>>());
        expected.push(s.clone());
    }
    expected.sort();
    assert_eq!(sorted(&second_subsemimodules(&p)), expected);
    assert_eq!(expected.len(), 4);
}

#[test]
fn chain3_facts() {
    let c3 = harness::chain3(Arc::new(Semiring::boolean()));
    assert!(!c3.is_subtractive(&set(3, &[0, 2])));
    assert_eq!(c3.subtractive_closure(&set(3, &[0, 2])), c3.full());
    let (q, _) = Arc::new(c3.clone()).quotient(&set(3, &[0, 2])).unwrap();
    assert_eq!(q.size(), 1);
}

#[test]
fn coidempotence_of_small_rings() {
    assert!(is_fully_coidempotent(&zn(2)));
    assert!(!is_fully_coidempotent(&zn(4)));
    // Z_n is fully coidempotent exactly when n is squarefree
    for n in CATALOG_MODULI {
        let squarefree = divisors(n).iter().all(|&d| d == 1 || n % (d * d) != 0);
        assert_eq!(is_fully_coidempotent(&zn(n)), squarefree, "Z{n}");
    }
}

#[test]
fn prime_times_whole_on_z4_and_b() {
    let input = Input::semiring_pair(Arc::new(Semiring::integers_mod(4)), Arc::new(Semiring::boolean()));
    let v = harness::check(TheoremId::PrimeTimesWhole, &input, &Config::default()).unwrap();
    assert_eq!(v[0].status, Status::Verified);
}

#[test]
fn second_annihilator_prime_on_z6() {
    let v = harness::check(TheoremId::SecondAnnihilatorPrime, &Input::module(zn(6)), &Config::default()).unwrap();
    assert_eq!(v[0].status, Status::Verified);
    assert_eq!(v[0].instances, 2);
}

#[test]
fn endomorphisms_of_zn_are_multiplications() {
    for n in [2, 3, 4, 6] {
        let m = zn(n);
        let maps = semimod::homomorphism::enumerate_maps(&m, &m, 1_000_000).unwrap();
        let mut expected: Vec<Vec<usize>> = (0..n).map(|c| (0..n).map(|x| c * x % n).collect()).collect();
        expected.sort();
        let mut got = maps.clone();
        got.sort();
        assert_eq!(got, expected, "Z{n}");
    }
}

#[test]
fn gcd_helper() {
    assert_eq!(gcd(12, 18), 6);
}
