//! Acceptance criteria 1 to 8. Each criterion prints one PASS or FAIL line;
//! the target exits nonzero if any criterion fails. Runs without the libtest
//! harness so the lines are always shown.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use primdec::decomp::{self, PrimeContext};
use primdec::modcore::{fixtures, ModulePresentation, Submodule};
use primdec::oracle::{
    brute_force_decompositions, generate_corpus, verify_suite, BruteKind, CorpusLimits, Instance, LatticeOracle,
    OracleCaps, Suite, Verdict,
};
use primdec::Caps;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn corpus() -> Vec<Instance> {
    generate_corpus(0, &CorpusLimits::default())
}

fn small_binary_corpus() -> Vec<Instance> {
    corpus()
        .into_iter()
        .filter(|i| i.module.p() == 2 && i.module.dim() <= 3)
        .collect()
}

fn canonical(ds: impl IntoIterator<Item = Vec<Submodule>>) -> BTreeSet<Vec<Submodule>> {
    ds.into_iter()
        .map(|mut d| {
            d.sort();
            d.dedup();
            d
        })
        .collect()
}

fn proper_submodules(o: &LatticeOracle) -> Vec<Submodule> {
    (0..o.len()).filter(|&i| i != o.top()).map(|i| o.get(i).clone()).collect()
}

/// Enumeration against brute force for one kind, on every proper base of
/// every instance.
fn enumeration_matches(uniform: bool) -> Outcome {
    let caps = OracleCaps::default();
    let decomp_caps = Caps::default();
    let start = Instant::now();
    let (mut bases, mut shortest, mut maximal) = (0, 0, 0);
    let instances = small_binary_corpus();
    for inst in &instances {
        let t = Instant::now();
        let m = &inst.module;
        let mut o = LatticeOracle::new(m, &caps).map_err(|e| format!("{}: {e}", inst.label()))?;
        for n in proper_submodules(&o) {
            let (short, max, bs, bm) = if uniform {
                (
                    decomp::enumerate_shortest_uniform(m, &n, &decomp_caps),
                    decomp::enumerate_maximal_shortest_uniform(m, &n, &decomp_caps),
                    BruteKind::ShortestUniform,
                    BruteKind::MaximalShortestUniform,
                )
            } else {
                (
                    decomp::enumerate_shortest_primary(m, &n, &decomp_caps),
                    decomp::enumerate_maximal_shortest_primary(m, &n, &decomp_caps),
                    BruteKind::ShortestPrimary,
                    BruteKind::MaximalShortestPrimary,
                )
            };
            let err = |e: primdec::Error| format!("{} N={n}: {e}", inst.label());
            let short = canonical(short.map_err(err)?.into_iter().map(|d| d.parts));
            let max = canonical(max.map_err(err)?.into_iter().map(|d| d.parts));
            let b_short = canonical(brute_force_decompositions(&mut o, &n, bs, caps.search).map_err(err)?);
            let b_max = canonical(brute_force_decompositions(&mut o, &n, bm, caps.search).map_err(err)?);
            if short != b_short {
                return Err(format!("{} N={n}: shortest sets differ", inst.label()));
            }
            if max != b_max {
                return Err(format!("{} N={n}: maximal sets differ", inst.label()));
            }
            bases += 1;
            shortest += short.len();
            maximal += max.len();
        }
        if t.elapsed() > Duration::from_secs(1) {
            return Err(format!("{} took {:?}", inst.label(), t.elapsed()));
        }
    }
    let total = start.elapsed();
    if total > Duration::from_secs(60) {
        return Err(format!("total runtime {total:?}"));
    }
    Ok(format!(
        "{} instances, {bases} bases, {shortest} shortest and {maximal} maximal decompositions matched in {:.2}s",
        instances.len(),
        total.as_secs_f64()
    ))
}

fn criterion_1() -> Outcome {
    enumeration_matches(false)
}

fn criterion_2() -> Outcome {
    let summary = enumeration_matches(true)?;
    let d = fixtures::mixed();
    let max = decomp::enumerate_maximal_shortest_uniform(&d, &d.zero_submodule(), &Caps::default())
        .map_err(|e| e.to_string())?;
    if max.len() < 2 {
        return Err(format!("D has {} maximal shortest uniform decompositions", max.len()));
    }
    Ok(format!("{summary}; D has {} maximal shortest uniform decompositions", max.len()))
}

/// Runs suites over the whole corpus (or the given instances) and requires
/// every report to pass.
fn suites_pass(instances: &[Instance], suites: &[Suite]) -> Outcome {
    let caps = OracleCaps::default();
    let mut reports = 0;
    for inst in instances {
        for &s in suites {
            let r = verify_suite(inst, s, &caps);
            if r.verdict != Verdict::Pass {
                let first = r.counterexamples.first().map(|c| c.message.clone()).or(r.note.clone());
                return Err(format!("{s} on {}: {} {}", inst.label(), r.verdict, first.unwrap_or_default()));
            }
            reports += 1;
        }
    }
    let ids: Vec<&str> = suites.iter().map(|s| s.id()).collect();
    Ok(format!("{} on {} instances, {reports} reports, zero violations", ids.join("+"), instances.len()))
}

fn criterion_3() -> Outcome {
    let summary = suites_pass(&corpus(), &[Suite::RlufAss, Suite::SbudimMN])?;
    // distinct primes are forced only for shortest decompositions: in D,
    // {<e3>, <e1,e2>} is irredundant with both parts X1-primary
    let d = fixtures::mixed();
    let e3 = d.closure(&[vec![0, 0, 1]]).unwrap();
    let e12 = d.closure(&[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
    let r = decomp::check_decomposition(&d, &d.zero_submodule(), &[e3, e12], &Caps::default()).unwrap();
    let repeated = r.is_primary_decomposition && r.is_irredundant && !r.is_shortest_primary;
    if !repeated {
        return Err("expected witness of an irredundant primary decomposition with a repeated prime".into());
    }
    Ok(format!("{summary}; distinctness checked on shortest decompositions"))
}

fn criterion_4() -> Outcome {
    suites_pass(&corpus(), &[Suite::MultUV, Suite::OneClstun])
}

fn criterion_5() -> Outcome {
    suites_pass(&corpus(), &[Suite::Intprim, Suite::Asdirs])
}

fn criterion_6() -> Outcome {
    suites_pass(&corpus(), &[Suite::Retpdu])
}

fn criterion_7() -> Outcome {
    // (coefficients from the constant term, distinct irreducible factors)
    let cases: [(&[u8], usize); 4] = [(&[0, 0, 1], 1), (&[0, 1, 1], 2), (&[1, 1, 1], 1), (&[0, 1, 0, 1], 2)];
    let mut lines = Vec::new();
    for (f, factors) in cases {
        let m: ModulePresentation = fixtures::companion(2, f);
        let primes = PrimeContext::new().associated_left_primes(&m).map_err(|e| e.to_string())?;
        if primes.len() != factors {
            return Err(format!("{}: |As| = {}, {factors} distinct factors", m.label(), primes.len()));
        }
        // a cyclic module has a one-dimensional g-torsion socle per factor g
        if primes.entries().iter().any(|&(_, k)| k != 1) {
            return Err(format!("{}: socle multiplicities {:?}", m.label(), primes.entries()));
        }
        let r = verify_suite(&Instance::new(m.clone()), Suite::CommCrosscheck, &OracleCaps::default());
        if r.verdict != Verdict::Pass {
            return Err(format!("comm-crosscheck on {}: {}", m.label(), r.verdict));
        }
        lines.push(format!("{}:{}", m.label(), primes.len()));
    }
    Ok(format!("|As| matches factor count for {}", lines.join(" ")))
}

fn criterion_8() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_primdec"))
            .args(["verify", "--seed", "0"])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    if a.status.code() != Some(0) {
        return Err(format!("verify exited with {:?}", a.status.code()));
    }
    if a.stdout != b.stdout || a.status.code() != b.status.code() {
        return Err("two runs of verify --seed 0 differ".into());
    }
    Ok(format!("two runs identical ({} bytes)", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("shortest primary enumeration equals brute force", criterion_1),
        ("shortest uniform enumeration equals brute force", criterion_2),
        ("cardinality laws", criterion_3),
        ("prime multisets and multiplicities", criterion_4),
        ("closure properties", criterion_5),
        ("uniform refinement", criterion_6),
        ("commutative cross-check", criterion_7),
        ("determinism", criterion_8),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
