//! Verification suites. Each suite runs one family of checks exhaustively
//! on an instance and reports pass, counterexample, resource or
//! not-applicable.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use super::brute::{brute_force_indices, candidates, BruteKind, IndexSet};
use super::corpus::Instance;
use super::defs::{LatticeOracle, OracleCaps, SimpleClass};
use super::poly;
use crate::cli::format::InstanceFile;
use crate::decomp::{self, Decomposition, PrimeContext};
use crate::error::{Error, Result};
use crate::modcore::{find_isomorphism, fixtures, quotient, ModulePresentation, Submodule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    MultUV,
    OneMultUV,
    Asdirs,
    Intprim,
    RlufAss,
    SbudimMN,
    Csminprd,
    Clminprdec,
    UiCipr,
    Clstunid,
    OneClstun,
    Retpdu,
    Complement,
    Essential,
    LeftPrime,
    CommCrosscheck,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::MultUV,
        Suite::OneMultUV,
        Suite::Asdirs,
        Suite::Intprim,
        Suite::RlufAss,
        Suite::SbudimMN,
        Suite::Csminprd,
        Suite::Clminprdec,
        Suite::UiCipr,
        Suite::Clstunid,
        Suite::OneClstun,
        Suite::Retpdu,
        Suite::Complement,
        Suite::Essential,
        Suite::LeftPrime,
        Suite::CommCrosscheck,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::MultUV => "multUV",
            Suite::OneMultUV => "1multUV",
            Suite::Asdirs => "Asdirs",
            Suite::Intprim => "intprim",
            Suite::RlufAss => "RlufAss",
            Suite::SbudimMN => "sbudimMN",
            Suite::Csminprd => "Csminprd",
            Suite::Clminprdec => "clminprdec",
            Suite::UiCipr => "UiCipr",
            Suite::Clstunid => "clstunid",
            Suite::OneClstun => "1clstun",
            Suite::Retpdu => "retpdu",
            Suite::Complement => "complement",
            Suite::Essential => "essential",
            Suite::LeftPrime => "lprime",
            Suite::CommCrosscheck => "comm-crosscheck",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::MultUV => "every socle decomposition yields the same prime multiset",
            Suite::OneMultUV => "every uniform submodule has an associated prime",
            Suite::Asdirs => "As of direct sums, extensions, and disjoint-As sums",
            Suite::Intprim => "intersections of X-primary submodules are X-primary",
            Suite::RlufAss => "prime counts of irredundant and shortest primary decompositions",
            Suite::SbudimMN => "uniform decompositions have at least u.dim parts",
            Suite::Csminprd => "constructed primary decompositions are maximal shortest",
            Suite::Clminprdec => "primary enumeration equals brute force",
            Suite::UiCipr => "constructed uniform decompositions are maximal shortest",
            Suite::Clstunid => "uniform enumeration equals brute force",
            Suite::OneClstun => "prime counts in shortest uniform decompositions equal multiplicities",
            Suite::Retpdu => "uniform refinements of primary decompositions",
            Suite::Complement => "complement contract",
            Suite::Essential => "socle criterion for essential submodules",
            Suite::LeftPrime => "left primes agree with isomorphic essential submodules",
            Suite::CommCrosscheck => "associated primes of F_p[x]-modules match the minimal polynomial",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| {
                let ids: Vec<&str> = Suite::ALL.iter().map(|x| x.id()).collect();
                Error::Input(format!("unknown suite {s:?} (known: {})", ids.join(", ")))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Counterexample,
    Resource,
    NotApplicable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Counterexample => "counterexample",
            Verdict::Resource => "resource",
            Verdict::NotApplicable => "n/a",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A violated check, replayable through the CLI: `document` is an
/// instance file whose `N` (and `parts`, if any) pin down the violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub message: String,
    pub document: InstanceFile,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instance: String,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    /// Named tallies, e.g. decompositions found by construction and by
    /// brute force.
    pub counts: BTreeMap<String, u64>,
    pub note: Option<String>,
}

/// Only the first few violations of a suite are kept.
const MAX_COUNTEREXAMPLES: usize = 5;

struct Run<'a> {
    m: &'a ModulePresentation,
    o: LatticeOracle,
    caps: OracleCaps,
    bases: Vec<usize>,
    counterexamples: Vec<Counterexample>,
    violations: u64,
    counts: BTreeMap<String, u64>,
    note: Option<String>,
}

impl Run<'_> {
    fn count(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_insert(0) += by;
    }

    fn fail(&mut self, base: usize, parts: Option<&[usize]>, message: String) {
        self.violations += 1;
        if self.counterexamples.len() >= MAX_COUNTEREXAMPLES {
            return;
        }
        let parts: Option<Vec<Submodule>> = parts.map(|ps| ps.iter().map(|&i| self.o.get(i).clone()).collect());
        let document = InstanceFile::from_parts(self.m, self.o.get(base), parts.as_deref());
        self.counterexamples.push(Counterexample { message, document });
    }

    fn check(&mut self, ok: bool, base: usize, parts: Option<&[usize]>, message: impl FnOnce() -> String) {
        if !ok {
            self.fail(base, parts, message());
        }
    }

    fn sub(&self, i: usize) -> &Submodule {
        self.o.get(i)
    }

    fn indices(&self, parts: &[Submodule]) -> Vec<usize> {
        parts
            .iter()
            .map(|p| self.o.index_of(p).expect("part is a lattice element"))
            .collect()
    }

    fn sorted_indices(&self, parts: &[Submodule]) -> IndexSet {
        let mut v = parts.to_vec();
        v.sort();
        v.dedup();
        self.indices(&v)
    }

    fn brute(&mut self, base: usize, kind: BruteKind) -> Result<Vec<IndexSet>> {
        brute_force_indices(&mut self.o, base, kind, self.caps.search)
    }

    fn decomp_set(&self, ds: &[Decomposition]) -> BTreeSet<IndexSet> {
        ds.iter().map(|d| self.sorted_indices(&d.parts)).collect()
    }

    fn primes_of_parts(&mut self, parts: &[usize]) -> Result<Vec<BTreeSet<SimpleClass>>> {
        let top = self.o.top();
        parts.iter().map(|&k| self.o.primes(k, top)).collect()
    }
}

/// Runs `suite` on `instance`. Errors other than resource exhaustion are
/// reported as counterexamples, since every routine is total on the inputs
/// the suites feed it.
pub fn verify_suite(instance: &Instance, suite: Suite, caps: &OracleCaps) -> SuiteReport {
    let mut report = SuiteReport {
        suite,
        instance: instance.label().to_string(),
        verdict: Verdict::Pass,
        counterexamples: Vec::new(),
        counts: BTreeMap::new(),
        note: None,
    };
    if suite == Suite::CommCrosscheck && instance.module.generators().len() != 1 {
        report.verdict = Verdict::NotApplicable;
        report.note = Some("needs exactly one generator".into());
        return report;
    }
    let o = match LatticeOracle::new(&instance.module, caps) {
        Ok(o) => o,
        Err(e) => {
            report.verdict = if e.is_resource() {
                Verdict::Resource
            } else {
                Verdict::Counterexample
            };
            report.note = Some(e.to_string());
            return report;
        }
    };
    let top = o.top();
    let bases: Vec<usize> = match &instance.base {
        Some(b) => match o.index_of(b) {
            Some(i) if i != top => vec![i],
            _ => {
                report.verdict = Verdict::Counterexample;
                report.note = Some(format!("{b} is not a proper submodule"));
                return report;
            }
        },
        None => (0..o.len()).filter(|&i| i != top).collect(),
    };
    let mut run = Run {
        m: &instance.module,
        o,
        caps: *caps,
        bases,
        counterexamples: Vec::new(),
        violations: 0,
        counts: BTreeMap::new(),
        note: None,
    };
    let outcome = match suite {
        Suite::MultUV => mult_uv(&mut run),
        Suite::OneMultUV => one_mult_uv(&mut run),
        Suite::Asdirs => as_dirs(&mut run),
        Suite::Intprim => intprim(&mut run),
        Suite::RlufAss => rluf_ass(&mut run),
        Suite::SbudimMN => sbudim(&mut run),
        Suite::Csminprd => constructed(&mut run, decomp::Kind::Primary),
        Suite::UiCipr => constructed(&mut run, decomp::Kind::Uniform),
        Suite::Clminprdec => enumeration(&mut run, decomp::Kind::Primary),
        Suite::Clstunid => enumeration(&mut run, decomp::Kind::Uniform),
        Suite::OneClstun => one_clstun(&mut run),
        Suite::Retpdu => retpdu(&mut run),
        Suite::Complement => complement(&mut run),
        Suite::Essential => essential(&mut run),
        Suite::LeftPrime => left_prime(&mut run),
        Suite::CommCrosscheck => comm_crosscheck(&mut run),
    };
    if let Err(e) = outcome {
        if e.is_resource() {
            run.note = Some(e.to_string());
            report.verdict = Verdict::Resource;
        } else {
            let base = run.bases.first().copied().unwrap_or(run.o.zero());
            run.fail(base, None, format!("unexpected error: {e}"));
        }
    }
    if run.violations > 0 {
        report.verdict = Verdict::Counterexample;
        run.counts.insert("violations".into(), run.violations);
    }
    report.counterexamples = run.counterexamples;
    report.counts = run.counts;
    report.note = run.note;
    report
}

fn mult_uv(run: &mut Run<'_>) -> Result<()> {
    for base in run.bases.clone() {
        let q = quotient(run.m, run.sub(base))?;
        let mut ctx = PrimeContext::for_module(&q.module)?;
        let all = decomp::socle_decompositions(&q.module, run.caps.search)?;
        run.count("socle_decompositions", all.len() as u64);
        let mut first: Option<Vec<(usize, usize)>> = None;
        for simples in &all {
            let primes = ctx.primes_of_summands(&q.module, simples)?;
            let sig: Vec<(usize, usize)> = primes.entries().iter().map(|(x, k)| (x.index(), *k)).collect();
            match &first {
                None => first = Some(sig),
                Some(f) => {
                    let same = *f == sig;
                    run.check(same, base, None, || format!("socle decompositions disagree: {f:?} vs {sig:?}"));
                }
            }
        }
        let top = run.o.top();
        let udim = run.o.udim(base, top);
        let n_primes = run.o.primes(base, top)?.len();
        let sig = first.unwrap_or_default();
        let total: usize = sig.iter().map(|(_, k)| k).sum();
        run.check(total == udim, base, None, || {
            format!("socle decomposition has {total} summands, u.dim by definition is {udim}")
        });
        run.check(sig.len() == n_primes, base, None, || {
            format!("{} primes from the socle, {n_primes} by definition", sig.len())
        });
    }
    Ok(())
}

fn one_mult_uv(run: &mut Run<'_>) -> Result<()> {
    let top = run.o.top();
    for base in run.bases.clone() {
        let q = quotient(run.m, run.sub(base))?;
        let mut ctx = PrimeContext::for_module(&q.module)?;
        let as_q = ctx.associated_left_primes(&q.module)?;
        for w in run.o.strictly_between(base, top) {
            if !run.o.is_uniform(base, w) {
                continue;
            }
            run.count("uniform_submodules", 1);
            let sq = run.m.subquotient(run.sub(w), run.sub(base))?;
            let x = ctx.left_prime_of(&sq)?;
            run.check(as_q.multiplicity(&x) > 0, base, Some(&[w]), || {
                format!("uniform submodule #{w} has prime {x} outside As = {as_q}")
            });
        }
    }
    Ok(())
}

fn as_dirs(run: &mut Run<'_>) -> Result<()> {
    let (zero, top) = (run.o.zero(), run.o.top());
    let n = run.o.len();
    let mut as_sub: Vec<BTreeSet<SimpleClass>> = Vec::with_capacity(n);
    for a in 0..n {
        as_sub.push(run.o.primes(zero, a)?);
    }
    // decomp's classifier agrees with the definitional count on every submodule
    let mut ctx = PrimeContext::new();
    for (a, defined) in as_sub.iter().enumerate() {
        let r = run.m.restrict(run.sub(a))?;
        let ap = ctx.associated_left_primes(&r)?;
        let udim = run.o.udim(zero, a);
        let ok = ap.len() == defined.len() && ap.total() == udim;
        run.check(ok, a, None, || {
            format!("As of submodule #{a}: classifier {ap}, definition has {} primes, u.dim {udim}", defined.len())
        });
    }
    let mut pairs = 0;
    let mut disjoint_pairs = 0;
    let mut triples = 0;
    for a in 1..n {
        for b in a + 1..n {
            if run.o.meet(a, b) == zero {
                pairs += 1;
                let j = run.o.join(a, b);
                let union: BTreeSet<SimpleClass> = as_sub[a].union(&as_sub[b]).copied().collect();
                let ok = as_sub[j] == union;
                run.check(ok, zero, Some(&[a, b]), || "As(A ⊕ B) differs from As(A) ∪ As(B)".into());
            }
            if as_sub[a].is_disjoint(&as_sub[b]) && a != zero && b != zero {
                disjoint_pairs += 1;
                let ok = run.o.is_independent(zero, &[a, b]);
                run.check(ok, zero, Some(&[a, b]), || "submodules with disjoint As do not sum directly".into());
                for c in b + 1..n {
                    if as_sub[c].is_disjoint(&as_sub[a]) && as_sub[c].is_disjoint(&as_sub[b]) {
                        triples += 1;
                        let ok = run.o.is_independent(zero, &[a, b, c]);
                        run.check(ok, zero, Some(&[a, b, c]), || {
                            "three submodules with pairwise disjoint As do not sum directly".into()
                        });
                    }
                }
            }
        }
    }
    for k in 0..n {
        let quo = run.o.primes(k, top)?;
        let ok = as_sub[top].iter().all(|x| as_sub[k].contains(x) || quo.contains(x));
        run.check(ok, k, None, || "As(M) not contained in As(K) ∪ As(M/K)".into());
    }
    run.count("direct_pairs", pairs);
    run.count("disjoint_pairs", disjoint_pairs);
    run.count("disjoint_triples", triples);
    Ok(())
}

fn intprim(run: &mut Run<'_>) -> Result<()> {
    let top = run.o.top();
    let zero = run.o.zero();
    let primary = candidates(&mut run.o, zero, false)?;
    let mut prime_of = HashMap::new();
    for &k in &primary {
        let x = *run.o.primes(k, top)?.iter().next().expect("single prime");
        prime_of.insert(k, x);
    }
    let mut pairs = 0;
    for (i, &a) in primary.iter().enumerate() {
        for &b in &primary[i + 1..] {
            if prime_of[&a] != prime_of[&b] {
                continue;
            }
            pairs += 1;
            let c = run.o.meet(a, b);
            let got = run.o.primes(c, top)?;
            let ok = got.len() == 1 && got.contains(&prime_of[&a]);
            run.check(ok, c, Some(&[a, b]), || "intersection of two X-primary submodules is not X-primary".into());
        }
    }
    run.count("primary_submodules", primary.len() as u64);
    run.count("same_prime_pairs", pairs);
    Ok(())
}

fn rluf_ass(run: &mut Run<'_>) -> Result<()> {
    let top = run.o.top();
    for base in run.bases.clone() {
        let as_n = run.o.primes(base, top)?;
        let irr = run.brute(base, BruteKind::IrredundantPrimary)?;
        run.count("irredundant_primary", irr.len() as u64);
        let min = irr.iter().map(Vec::len).min().unwrap_or(0);
        for d in &irr {
            let pp = run.primes_of_parts(d)?;
            let xs: Vec<SimpleClass> = pp.iter().map(|s| *s.iter().next().expect("primary part")).collect();
            let set: BTreeSet<SimpleClass> = xs.iter().copied().collect();
            run.check(set == as_n, base, Some(d), || {
                format!("irredundant primary decomposition with primes {set:?}, As(M/N) = {as_n:?}")
            });
            if d.len() == min {
                let distinct = set.len() == xs.len();
                run.check(distinct && d.len() == as_n.len(), base, Some(d), || {
                    format!("shortest primary decomposition with {} parts, primes {xs:?}, |As(M/N)| = {}", d.len(), as_n.len())
                });
            }
        }
        run.check(min == as_n.len(), base, None, || {
            format!("shortest primary decomposition has {min} parts, |As(M/N)| = {}", as_n.len())
        });
    }
    Ok(())
}

fn sbudim(run: &mut Run<'_>) -> Result<()> {
    let top = run.o.top();
    let mut fell_back = false;
    for base in run.bases.clone() {
        let udim = run.o.udim(base, top);
        // every uniform decomposition contains an irredundant one, so a
        // lower bound on irredundant sizes bounds them all
        let all = match run.brute(base, BruteKind::Uniform) {
            Ok(all) => all,
            Err(e) if e.is_resource() => {
                fell_back = true;
                run.brute(base, BruteKind::IrredundantUniform)?
            }
            Err(e) => return Err(e),
        };
        run.count("uniform_decompositions", all.len() as u64);
        let min = all.iter().map(Vec::len).min().unwrap_or(0);
        for d in &all {
            run.check(d.len() >= udim, base, Some(d), || {
                format!("uniform decomposition with {} parts, u.dim(M/N) = {udim}", d.len())
            });
            if d.len() == udim {
                let irr = run.o.is_irredundant(base, d);
                let pp = run.primes_of_parts(d)?;
                let primary = pp.iter().all(|s| s.len() == 1);
                run.check(irr && primary, base, Some(d), || {
                    "shortest uniform decomposition is not an irredundant primary decomposition".into()
                });
            }
        }
        run.check(min == udim, base, None, || format!("shortest uniform has {min} parts, u.dim {udim}"));
    }
    if fell_back {
        run.note = Some("full subset search over cap on some bases; irredundant families checked".into());
    }
    Ok(())
}

fn maximal_kind(kind: decomp::Kind) -> BruteKind {
    match kind {
        decomp::Kind::Primary => BruteKind::MaximalShortestPrimary,
        decomp::Kind::Uniform => BruteKind::MaximalShortestUniform,
    }
}

fn shortest_kind(kind: decomp::Kind) -> BruteKind {
    match kind {
        decomp::Kind::Primary => BruteKind::ShortestPrimary,
        decomp::Kind::Uniform => BruteKind::ShortestUniform,
    }
}

fn constructed(run: &mut Run<'_>, kind: decomp::Kind) -> Result<()> {
    let caps = run.caps.caps();
    for base in run.bases.clone() {
        let n = run.sub(base).clone();
        let maximal: BTreeSet<IndexSet> = run.brute(base, maximal_kind(kind))?.into_iter().collect();
        let mut paths = decomp::construction_paths(run.m, &n, kind, &caps)?;
        paths.push(match kind {
            decomp::Kind::Primary => decomp::maximal_shortest_primary(run.m, &n, None)?,
            decomp::Kind::Uniform => decomp::maximal_shortest_uniform(run.m, &n, None)?,
        });
        run.count("paths", paths.len() as u64);
        let distinct: BTreeSet<IndexSet> = paths.iter().map(|d| run.sorted_indices(&d.parts)).collect();
        run.count("distinct", distinct.len() as u64);
        for d in &paths {
            let idx = run.indices(&d.parts);
            let sorted = run.sorted_indices(&d.parts);
            let inter = run.o.meet_all(&idx) == base;
            let flags_ok = d.flags.shortest && d.flags.maximal && d.flags.irredundant;
            let kind_ok = match kind {
                decomp::Kind::Primary => d.flags.primary,
                decomp::Kind::Uniform => d.flags.uniform,
            };
            let ok = inter && flags_ok && kind_ok && maximal.contains(&sorted);
            run.check(ok, base, Some(&idx), || {
                format!("constructed {kind} decomposition is not a maximal shortest one by brute force")
            });
        }
    }
    Ok(())
}

fn enumeration(run: &mut Run<'_>, kind: decomp::Kind) -> Result<()> {
    let caps = run.caps.caps();
    for base in run.bases.clone() {
        let n = run.sub(base).clone();
        let (short, max) = match kind {
            decomp::Kind::Primary => (
                decomp::enumerate_shortest_primary(run.m, &n, &caps)?,
                decomp::enumerate_maximal_shortest_primary(run.m, &n, &caps)?,
            ),
            decomp::Kind::Uniform => (
                decomp::enumerate_shortest_uniform(run.m, &n, &caps)?,
                decomp::enumerate_maximal_shortest_uniform(run.m, &n, &caps)?,
            ),
        };
        let b_short: BTreeSet<IndexSet> = run.brute(base, shortest_kind(kind))?.into_iter().collect();
        let b_max: BTreeSet<IndexSet> = run.brute(base, maximal_kind(kind))?.into_iter().collect();
        let c_short = run.decomp_set(&short);
        let c_max = run.decomp_set(&max);
        run.count("constructed_shortest", c_short.len() as u64);
        run.count("brute_shortest", b_short.len() as u64);
        run.count("constructed_maximal", c_max.len() as u64);
        run.count("brute_maximal", b_max.len() as u64);
        run.count("non_maximal", b_short.difference(&b_max).count() as u64);
        for d in c_short.symmetric_difference(&b_short) {
            let side = if b_short.contains(d) { "missed by enumeration" } else { "not found by brute force" };
            run.fail(base, Some(d), format!("shortest {kind} decomposition {side}"));
        }
        for d in c_max.symmetric_difference(&b_max) {
            let side = if b_max.contains(d) { "missed by enumeration" } else { "not found by brute force" };
            run.fail(base, Some(d), format!("maximal shortest {kind} decomposition {side}"));
        }
        for d in &short {
            let idx = run.sorted_indices(&d.parts);
            let flagged = d.flags.maximal;
            let truth = b_max.contains(&idx);
            run.check(flagged == truth, base, Some(&idx), || {
                format!("maximal flag is {flagged}, brute force says {truth}")
            });
        }
    }
    Ok(())
}

fn one_clstun(run: &mut Run<'_>) -> Result<()> {
    let top = run.o.top();
    let caps = run.caps.caps();
    for base in run.bases.clone() {
        let mult = run.o.multiplicities(base, top)?;
        let short = run.brute(base, BruteKind::ShortestUniform)?;
        run.count("shortest_uniform", short.len() as u64);
        for d in &short {
            let mut seen: BTreeMap<SimpleClass, usize> = BTreeMap::new();
            for s in run.primes_of_parts(d)? {
                for x in s {
                    *seen.entry(x).or_insert(0) += 1;
                }
            }
            run.check(seen == mult, base, Some(d), || {
                format!("prime counts {seen:?} differ from multiplicities {mult:?}")
            });
        }
        // the same law through the decomposition layer's own labels
        let n = run.sub(base).clone();
        for d in decomp::enumerate_shortest_uniform(run.m, &n, &caps)? {
            let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
            for a in &d.part_primes {
                for (x, k) in a.entries() {
                    *seen.entry(x.index()).or_insert(0) += k;
                }
            }
            let want: BTreeMap<usize, usize> =
                d.base_primes.entries().iter().map(|(x, k)| (x.index(), *k)).collect();
            let idx = run.indices(&d.parts);
            run.check(seen == want, base, Some(&idx), || {
                format!("enumerated decomposition has prime counts {seen:?}, As(M/N) = {}", d.base_primes)
            });
        }
    }
    Ok(())
}

fn retpdu(run: &mut Run<'_>) -> Result<()> {
    let top = run.o.top();
    for base in run.bases.clone() {
        let n = run.sub(base).clone();
        for d in run.brute(base, BruteKind::IrredundantPrimary)? {
            run.count("refined", 1);
            let parts: Vec<Submodule> = d.iter().map(|&i| run.sub(i).clone()).collect();
            let r = decomp::refine_to_uniform(run.m, &n, &parts)?;
            let refined = run.indices(&r.decomposition.parts);
            let mut ok = run.o.meet_all(&refined) == base
                && refined.iter().all(|&k| run.o.is_uniform(k, top));
            let mut covered: Vec<usize> = r.blocks.iter().flatten().copied().collect();
            covered.sort_unstable();
            ok &= covered == (0..refined.len()).collect::<Vec<_>>() && r.blocks.len() == d.len();
            if ok {
                for (j, block) in r.blocks.iter().enumerate() {
                    let members: Vec<usize> = block.iter().map(|&k| refined[k]).collect();
                    ok &= !members.is_empty() && run.o.meet_all(&members) == d[j];
                    let pj = run.o.primes(d[j], top)?;
                    for &k in &members {
                        ok &= run.o.primes(k, top)? == pj;
                    }
                }
            }
            run.check(ok, base, Some(&d), || "refinement fails the definitional check".into());
        }
    }
    Ok(())
}

fn complement(run: &mut Run<'_>) -> Result<()> {
    let (zero, top) = (run.o.zero(), run.o.top());
    let n = run.o.len();
    let mut checked = 0;
    for a in 0..n {
        for l in 0..n {
            if run.o.meet(a, l) != zero {
                continue;
            }
            checked += 1;
            let c = decomp::complement(run.m, run.sub(a), run.sub(l))?;
            let ci = run.o.index_of(&c).expect("lattice element");
            let basic = run.o.le(l, ci) && run.o.meet(a, ci) == zero;
            let essential = run.o.is_essential(zero, run.o.join(a, ci), top);
            let maximal = !(0..n).any(|k| run.o.lt(ci, k) && run.o.meet(a, k) == zero);
            run.check(basic && essential && maximal, a, Some(&[l, ci]), || {
                format!("complement {c} violates the contract (contains L and misses N: {basic}, essential: {essential}, maximal: {maximal})")
            });
        }
        // full enumeration against the lattice filter, for L = 0
        let got = decomp::enumerate_complements(run.m, run.sub(a), run.sub(zero), run.caps.vectors)?;
        let got = run.indices(&got);
        let ok_set: Vec<usize> = (0..n).filter(|&k| run.o.meet(a, k) == zero).collect();
        let want: Vec<usize> = ok_set
            .iter()
            .copied()
            .filter(|&k| !ok_set.iter().any(|&j| run.o.lt(k, j)))
            .collect();
        let mut got_sorted = got.clone();
        got_sorted.sort_unstable();
        run.check(got_sorted == want, a, Some(&got), || "complement enumeration differs from the lattice filter".into());
    }
    run.count("pairs", checked);
    Ok(())
}

fn essential(run: &mut Run<'_>) -> Result<()> {
    let (zero, top) = (run.o.zero(), run.o.top());
    for k in 0..run.o.len() {
        let fast = decomp::is_essential(run.m, run.sub(k))?;
        let slow = run.o.is_essential(zero, k, top);
        run.check(fast == slow, k, None, || format!("socle criterion says {fast}, definition says {slow}"));
    }
    let soc = decomp::socle_decomposition(run.m, 0)?;
    let idx = run.indices(&soc);
    let sum = idx.iter().fold(zero, |acc, &s| run.o.join(acc, s));
    let ok = run.o.is_independent(zero, &idx) && run.o.is_essential(zero, sum, top);
    run.check(ok, zero, Some(&idx), || "socle decomposition is not an essential direct sum".into());
    run.count("submodules", run.o.len() as u64);
    Ok(())
}

fn left_prime(run: &mut Run<'_>) -> Result<()> {
    let zero = run.o.zero();
    let uniform: Vec<usize> = (0..run.o.len()).filter(|&u| run.o.is_uniform(zero, u)).collect();
    let mut ctx = PrimeContext::new();
    let mut label = HashMap::new();
    for &u in &uniform {
        let r = run.m.restrict(run.sub(u))?;
        label.insert(u, ctx.left_prime_of(&r)?.index());
    }
    // essential submodules of each uniform submodule, by definition
    let ess: HashMap<usize, Vec<usize>> = uniform
        .iter()
        .map(|&u| {
            let inside = run.o.strictly_between(zero, u);
            let e = inside
                .into_iter()
                .filter(|&l| run.o.is_essential(zero, l, u))
                .collect();
            (u, e)
        })
        .collect();
    let mut iso: HashMap<(usize, usize), bool> = HashMap::new();
    let mut pairs = 0;
    for (i, &u) in uniform.iter().enumerate() {
        for &v in &uniform[i..] {
            pairs += 1;
            let mut related = false;
            'search: for &a in &ess[&u] {
                for &b in &ess[&v] {
                    if run.o.dim(a) != run.o.dim(b) {
                        continue;
                    }
                    let key = (a.min(b), a.max(b));
                    let same = match iso.get(&key) {
                        Some(&s) => s,
                        None => {
                            let ra = run.m.restrict(run.sub(a))?;
                            let rb = run.m.restrict(run.sub(b))?;
                            let s = find_isomorphism(&ra, &rb, run.caps.vectors)?.is_some();
                            iso.insert(key, s);
                            s
                        }
                    };
                    if same {
                        related = true;
                        break 'search;
                    }
                }
            }
            let labelled = label[&u] == label[&v];
            run.check(related == labelled, zero, Some(&[u, v]), || {
                format!("same left prime: classifier {labelled}, essential-submodule search {related}")
            });
        }
    }
    run.count("uniform_submodules", uniform.len() as u64);
    run.count("pairs", pairs);
    Ok(())
}

fn comm_crosscheck(run: &mut Run<'_>) -> Result<()> {
    let p = run.m.p();
    for base in run.bases.clone() {
        let q = quotient(run.m, run.sub(base))?;
        let a = &q.module.generators()[0];
        let f = poly::minimal_polynomial(a);
        let factors = poly::factor(&f, p);
        let mut ctx = PrimeContext::for_module(&q.module)?;
        let as_q = ctx.associated_left_primes(&q.module)?;
        run.count("quotients", 1);
        run.check(as_q.len() == factors.len(), base, None, || {
            format!("|As| = {}, minimal polynomial has {} distinct irreducible factors", as_q.len(), factors.len())
        });
        let mut matched = BTreeSet::new();
        for (g, _) in &factors {
            let simple = fixtures::companion(p, g);
            let kernel_dim = q.module.dim() - poly::eval(g, a).rank();
            let want = kernel_dim / (g.len() - 1);
            let mut found = None;
            for (x, k) in as_q.entries() {
                let w = ctx.witness_module(x);
                if find_isomorphism(w, &simple, run.caps.vectors)?.is_some() {
                    found = Some((x.index(), *k));
                }
            }
            match found {
                Some((x, k)) => {
                    matched.insert(x);
                    run.check(k == want, base, None, || {
                        format!("factor {}: multiplicity {k}, socle count {want}", fixtures::poly_name(g))
                    });
                }
                None => run.fail(base, None, format!("no associated prime is F_p[x]/({})", fixtures::poly_name(g))),
            }
        }
        run.check(matched.len() == as_q.len(), base, None, || "an associated prime matches no factor".into());
    }
    Ok(())
}
