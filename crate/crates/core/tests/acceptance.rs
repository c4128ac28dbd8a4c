//! The acceptance criteria, one line each. Exits non-zero if any fails.

mod common;

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use semimod::harness::{self, builtin_catalog, chain3, Config, Input, Status, TheoremId, Witness};
use semimod::second::{
    is_fully_coidempotent, is_minimal_subsemimodule, is_second, is_socle_subsemimodule,
    non_coidempotent_witness, second_subsemimodules, socle,
};
use semimod::{
    validate_semimodule, validate_semiring, AlgebraError, Semimodule, Semiring, Subset,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn semimod(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_semimod")).args(args).output().expect("binary runs")
}

fn set(n: usize, xs: &[usize]) -> Subset {
    Subset::from_indices(n, xs.iter().copied())
}

/// Every single-cell mutation of B, Z4 and C3 either validates or names an
/// axiom that fails when replayed at the witness.
fn axiom_validation() -> Outcome {
    let start = Instant::now();
    let b = Arc::new(Semiring::boolean());
    let (mut rejected, mut accepted) = (0, 0);
    for r in [Semiring::boolean(), Semiring::integers_mod(4)] {
        for t in common::semiring_mutations(&r.tables()) {
            match validate_semiring("mutant", &t) {
                Ok(_) => accepted += 1,
                Err(AlgebraError::AxiomViolation { axiom, witness }) => {
                    ensure(t.holds_at(axiom, &witness) == Some(false), || {
                        format!("{}: `{axiom}` at {witness:?} does not replay", r.name())
                    })?;
                    rejected += 1;
                }
                Err(e) => return Err(format!("{}: unexpected {e}", r.name())),
            }
        }
    }
    let c3 = chain3(Arc::clone(&b));
    for t in common::semimodule_mutations(&b, &c3.tables()) {
        match validate_semimodule("mutant", Arc::clone(&b), &t) {
            Ok(_) => accepted += 1,
            Err(AlgebraError::AxiomViolation { axiom, witness }) => {
                ensure(t.holds_at(&b, axiom, &witness) == Some(false), || {
                    format!("C3: `{axiom}` at {witness:?} does not replay")
                })?;
                rejected += 1;
            }
            Err(e) => return Err(format!("C3: unexpected {e}")),
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("{rejected} mutations rejected with replayable witnesses, {accepted} re-validated, {elapsed:.2?}"))
}

/// Closure enumeration agrees with subset filtering on small catalog modules.
fn lattice_oracle() -> Outcome {
    let cat = builtin_catalog();
    let mut checked = 0;
    for m in cat.modules.iter().filter(|m| m.size() <= 12) {
        let filtered = m.subsemimodules_by_subset_filter().ok_or("filter refused a small module")?;
        ensure(filtered == m.subsemimodules(), || format!("{} disagrees", m.name()))?;
        checked += 1;
    }
    let count = |name: &str| cat.module(name).map(|m| m.subsemimodules().len());
    ensure(count("Z16_over_Z16") == Some(5), || format!("Z16 has {:?}", count("Z16_over_Z16")))?;
    ensure(count("Z6_over_Z6") == Some(4), || format!("Z6 has {:?}", count("Z6_over_Z6")))?;
    Ok(format!("{checked} modules agree; Z16 has 5 subsemimodules, Z6 has 4"))
}

fn z16_example() -> Outcome {
    let m = Semimodule::regular(Arc::new(Semiring::integers_mod(16)));
    let n = set(16, &[0, 8]);
    let evens = set(16, &[0, 2, 4, 6, 8, 10, 12, 14]);
    ensure(is_minimal_subsemimodule(&m, &n), || "{0,8} is not minimal".into())?;
    ensure(is_second(&m, &n), || "{0,8} is not second".into())?;
    let ann = m.annihilator(&n);
    ensure(ann == evens, || format!("Ann = {ann}"))?;
    ensure(m.base().is_prime_ideal(&ann), || "Ann is not prime".into())?;
    ensure(m.base().is_subtractive_ideal(&ann), || "Ann is not subtractive".into())?;
    Ok("{0,8} minimal and second; Ann = {0,2,...,14} prime and subtractive".into())
}

const VERIFIED: [&str; 23] = [
    "P27.6", "R-min-sec", "P2.2a", "P2.2b", "Pt3.2", "P28.51", "Pdf2.1", "Pdf2.9a", "Pdf2.9b",
    "Pdf2.9c", "P8l3.14", "Pt2.5a", "Pt2.5b", "Pt2.5c", "T8lfff3.14", "L2.98", "T2.998", "L2.9",
    "T2.10", "Pl2.9", "Tt3.6", "Cc3.7", "Tt3.8-alt",
];

fn full_catalog_run() -> Outcome {
    let start = Instant::now();
    let out = semimod(&["check", "--all", "--catalog", "--format", "json"]);
    let elapsed = start.elapsed();
    ensure(out.status.code() == Some(1), || format!("exit code {:?}", out.status.code()))?;
    let rows: Vec<serde_json::Value> =
        serde_json::from_slice(&out.stdout).map_err(|e| format!("report is not JSON: {e}"))?;
    let mut verified = 0;
    for id in VERIFIED {
        let mine: Vec<&serde_json::Value> = rows.iter().filter(|r| r["theorem"] == id).collect();
        ensure(!mine.is_empty(), || format!("{id} missing from the report"))?;
        if let Some(bad) = mine.iter().find(|r| r["status"] == "counterexample") {
            return Err(format!("{id} refuted on {}", bad["structure"]));
        }
        verified += mine.iter().filter(|r| r["status"] == "verified").count();
    }
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "23 statements, {verified} verified verdicts, no counterexamples, {} verdicts in total, {elapsed:.2?}",
        rows.len()
    ))
}

fn literal_socle_refuted() -> Outcome {
    let out = semimod(&["check", "--theorem", "Tt3.8", "--catalog", "--format", "json"]);
    ensure(out.status.code() == Some(1), || format!("exit code {:?}", out.status.code()))?;
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let row = rows
        .iter()
        .find(|r| r["structure"] == "Z6_over_Z6")
        .ok_or("no Z6 verdict")?;
    ensure(row["status"] == "counterexample", || format!("Z6 status {}", row["status"]))?;
    let witness: Witness =
        serde_json::from_value(row["witness"].clone()).map_err(|e| format!("witness: {e}"))?;

    let m = builtin_catalog().module("Z6_over_Z6").cloned().ok_or("no Z6")?;
    let family = witness.get_family("socles", 6).map_err(|e| e.to_string())?;
    ensure(family == [m.full()], || format!("witness family {family:?}"))?;
    // independent replay: the witness is sec(Z6) = Z6 and no second contains it
    let s = &family[0];
    ensure(socle(&m, &m.full()) == *s && is_socle_subsemimodule(&m, s), || "not a socle subsemimodule".into())?;
    ensure(!second_subsemimodules(&m).iter().any(|l| s.is_subset(l)), || "a second contains it".into())?;
    let replayed = harness::replay(TheoremId::SocleInsideSecond, None, &Input::module(m), &witness, &Config::default())
        .map_err(|e| e.to_string())?;
    ensure(replayed, || "harness replay disagrees".into())?;
    Ok("counterexample on Z6: sec(Z6) = Z6 lies in no second subsemimodule; replay confirms".into())
}

fn product_structure() -> Outcome {
    let b = Semiring::boolean();
    let bb = b.product(&b);
    // (x, y) at 2x + y: {0}×B = {0,1}, B×{0} = {0,2}
    let spec = bb.spec();
    ensure(spec == [set(4, &[0, 1]), set(4, &[0, 2])], || format!("Spec(BxB) = {spec:?}"))?;

    let cat = builtin_catalog();
    let cfg = Config::default();
    let mut pairs = 0;
    for r1 in &cat.semirings {
        for r2 in &cat.semirings {
            let input = Input::semiring_pair(Arc::clone(r1), Arc::clone(r2));
            let v = harness::check(TheoremId::PrimeProductIdeals, &input, &cfg).map_err(|e| e.to_string())?;
            ensure(v[0].status == Status::Verified, || {
                format!("T2.998 on {} x {}: {} {:?}", r1.name(), r2.name(), v[0].status, v[0].witness)
            })?;
            pairs += 1;
        }
    }

    let z6 = cat.module("Z6_over_Z6").cloned().ok_or("no Z6")?;
    let input = Input::product(vec![Arc::clone(&z6), Arc::clone(&z6)]);
    let Input::Product(case) = &input else { unreachable!() };
    let seconds = second_subsemimodules(&case.product);
    let zero = z6.zero_sub();
    let mut expected: Vec<Subset> = Vec::new();
    for s in second_subsemimodules(&z6) {
        expected.push(case.product_subset(&[s.clone(), zero.clone()]));
        expected.push(case.product_subset(&[zero.clone(), s]));
    }
    expected.sort();
    ensure(seconds == expected, || format!("seconds of Z6xZ6: {seconds:?}"))?;
    let v = harness::check(TheoremId::SecondInProduct, &input, &cfg).map_err(|e| e.to_string())?;
    ensure(v.iter().all(|v| v.status == Status::Verified), || "T2.10 not verified on Z6 x Z6".into())?;
    Ok(format!("Spec(BxB) = {{0}}xB, Bx{{0}}; T2.998 verified on {pairs} pairs; Z6xZ6 has exactly 4 one-sided seconds"))
}

fn colon_and_coidempotence() -> Outcome {
    let z4 = Arc::new(Semimodule::regular(Arc::new(Semiring::integers_mod(4))));
    let v = harness::check(TheoremId::ColonBySquare, &Input::module(Arc::clone(&z4)), &Config::default())
        .map_err(|e| e.to_string())?;
    ensure(v[0].status != Status::Counterexample, || "P8l3.14 refuted on Z4".into())?;
    // where the hypothesis holds the identity must hold; where it fails, say so
    let all_second = z4.subsemimodules().iter().all(|n| z4.is_zero_sub(n) || is_second(&z4, n));
    let mut failures = 0;
    for k in z4.subsemimodules() {
        for i in z4.base().ideals() {
            let square = z4.base().ideal_product(i, i);
            if z4.colon_into(k, i) != z4.colon_into(k, &square) {
                failures += 1;
            }
        }
    }
    ensure(!all_second || failures == 0, || "identity fails under its hypothesis".into())?;

    let z2 = Semimodule::regular(Arc::new(Semiring::integers_mod(2)));
    ensure(is_fully_coidempotent(&z2), || "Z2 is not fully coidempotent".into())?;
    let w = non_coidempotent_witness(&z4);
    ensure(w == Some(set(4, &[0, 2])), || format!("Z4 witness {w:?}"))?;
    Ok(format!(
        "Z4: hypothesis {}, identity differs on {failures} (K, I) pair(s), verdict {}; Z2 fully coidempotent; Z4 not, witness {{0,2}}",
        if all_second { "holds" } else { "fails" },
        v[0].status
    ))
}

fn determinism() -> Outcome {
    let a = semimod(&["check", "--all", "--catalog", "--format", "json"]);
    let b = semimod(&["check", "--all", "--catalog", "--format", "json"]);
    ensure(!a.stdout.is_empty(), || "empty report".into())?;
    ensure(a.stdout == b.stdout, || "reports differ".into())?;
    Ok(format!("two runs byte-identical ({} bytes)", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("axiom validation under single-cell mutation", axiom_validation),
        ("closure lattice equals subset filter", lattice_oracle),
        ("{0,8} in Z16", z16_example),
        ("full catalog run", full_catalog_run),
        ("literal socle statement refuted on Z6", literal_socle_refuted),
        ("product structure", product_structure),
        ("colon identity and coidempotence", colon_and_coidempotence),
        ("deterministic reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
