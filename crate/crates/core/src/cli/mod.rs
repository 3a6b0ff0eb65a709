//! Command-line front end: argument parsing, commands and their
//! deterministic text output.
//!
//! Every command prints a human-readable report followed by a line `---`
//! and a block of `key=value` lines. Exit codes: 0 success or pass,
//! 1 counterexample, 2 input error, 3 resource cap exceeded.

pub mod format;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::decomp::{self, AssociatedPrimes, Decomposition, Kind, PrimeContext};
use crate::error::{Error, Result};
use crate::modcore::{enumerate_submodules, fixtures, quotient, Submodule};
use crate::oracle::{self, report, CorpusLimits, Instance, OracleCaps, Suite, Verdict};
use crate::Caps;
use format::{InstanceFile, LoadedInstance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "primdec", version, about = "Shortest primary and uniform decompositions of submodules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Uniform dimension, associated primes and socle of M/N.
    Analyze { instance: PathBuf },
    /// Construct or enumerate shortest decompositions of N.
    Decompose {
        #[arg(value_enum)]
        kind: KindArg,
        instance: PathBuf,
        /// Only maximal shortest decompositions (with --all).
        #[arg(long)]
        maximal: bool,
        /// Enumerate every shortest decomposition of the kind.
        #[arg(long)]
        all: bool,
        /// Construction path index (socle decomposition, then complements).
        #[arg(long)]
        choice: Option<usize>,
        /// Cap on p^dim for lattice work.
        #[arg(long)]
        cap: Option<u64>,
        /// Write the decomposition file here (single decomposition only).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Refine a primary decomposition file into a uniform decomposition.
    Refine {
        decomposition: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a decomposition file.
    Check {
        decomposition: PathBuf,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// List lattice objects of an instance.
    Enumerate {
        #[arg(value_enum)]
        what: EnumerateWhat,
        instance: PathBuf,
        /// Cap on p^dim.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Run verification suites on one instance or on the seeded corpus.
    Verify {
        instance: Option<PathBuf>,
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest submodule lattice the oracle will search.
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// Print a named fixture as an instance file.
    Fixture {
        #[arg(value_enum)]
        name: FixtureName,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Primary,
    Uniform,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum EnumerateWhat {
    Submodules,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FixtureName {
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
}

/// Parses `args` (including the program name) and runs the command,
/// writing the report to `out` and diagnostics to `err`. Returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = String::new();
    let result = dispatch(cli.command, &mut buf, err);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource() {
                EXIT_RESOURCE
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn dispatch(cmd: Command, out: &mut String, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Analyze { instance } => {
            let inst = load(&instance, err)?;
            analyze(&inst, out)?;
        }
        Command::Decompose {
            kind,
            instance,
            maximal,
            all,
            choice,
            cap,
            out: path,
        } => {
            let inst = load(&instance, err)?;
            let kind = match kind {
                KindArg::Primary => Kind::Primary,
                KindArg::Uniform => Kind::Uniform,
            };
            let caps = caps_with(cap);
            if all {
                if path.is_some() || choice.is_some() {
                    return Err(Error::Input("--out and --choice cannot be combined with --all".into()));
                }
                decompose_all(&inst, kind, maximal, &caps, out)?;
            } else {
                let d = match kind {
                    Kind::Primary => decomp::maximal_shortest_primary(&inst.module, &inst.base, choice)?,
                    Kind::Uniform => decomp::maximal_shortest_uniform(&inst.module, &inst.base, choice)?,
                };
                decompose_one(&inst, &d, choice, out);
                if let Some(p) = path {
                    InstanceFile::from_parts(&inst.module, &inst.base, Some(&d.parts)).write(&p)?;
                }
            }
        }
        Command::Refine { decomposition, out: path } => {
            let inst = load(&decomposition, err)?;
            let parts = require_parts(&inst)?;
            let r = decomp::refine_to_uniform(&inst.module, &inst.base, parts)?;
            push_line(out, &format!("uniform refinement of {} parts", parts.len()));
            print_parts(out, &r.decomposition.parts, &r.decomposition.part_primes);
            let blocks: Vec<String> = r
                .blocks
                .iter()
                .map(|b| {
                    let xs: Vec<String> = b.iter().map(|k| (k + 1).to_string()).collect();
                    format!("{{{}}}", xs.join(","))
                })
                .collect();
            push_line(out, &format!("blocks: {}", blocks.join(" ")));
            push_line(out, "---");
            push_line(out, &format!("count={}", r.decomposition.parts.len()));
            push_line(out, &format!("blocks={}", blocks.join(";")));
            push_line(out, &format!("udim={}", r.decomposition.base_primes.total()));
            if let Some(p) = path {
                InstanceFile::from_parts(&inst.module, &inst.base, Some(&r.decomposition.parts)).write(&p)?;
            }
        }
        Command::Check { decomposition, cap } => {
            let inst = load(&decomposition, err)?;
            let parts = require_parts(&inst)?;
            check(&inst, parts, &caps_with(cap), out)?;
        }
        Command::Enumerate { what: EnumerateWhat::Submodules, instance, cap } => {
            let inst = load(&instance, err)?;
            let subs = enumerate_submodules(&inst.module, cap.unwrap_or(crate::modcore::DEFAULT_VECTOR_CAP))?;
            push_line(out, &format!("submodules of {}", inst.module.label()));
            for (i, s) in subs.iter().enumerate() {
                push_line(out, &format!("  {:>3}  dim {}  {s}", i + 1, s.dim()));
            }
            push_line(out, "---");
            push_line(out, &format!("count={}", subs.len()));
        }
        Command::Verify { instance, suite, seed, cap } => {
            let suites: Vec<Suite> = match suite {
                Some(s) => vec![s.parse()?],
                None => Suite::ALL.to_vec(),
            };
            let caps = OracleCaps::with_lattice(cap);
            let instances = match instance {
                Some(path) => {
                    let doc = InstanceFile::read(&path)?;
                    let inst = doc.load()?;
                    warn(&inst, err);
                    vec![if doc.n.is_some() {
                        Instance::with_base(inst.module, inst.base)
                    } else {
                        Instance::new(inst.module)
                    }]
                }
                None => oracle::generate_corpus(
                    seed,
                    &CorpusLimits {
                        lattice_cap: cap,
                        ..CorpusLimits::default()
                    },
                ),
            };
            return Ok(verify(&instances, &suites, &caps, seed, out));
        }
        Command::Fixture { name } => {
            let m = match name {
                FixtureName::B => fixtures::local(),
                FixtureName::C => fixtures::split(),
                FixtureName::D => fixtures::mixed(),
            };
            out.push_str(&InstanceFile::from_parts(&m, &m.zero_submodule(), None).to_json());
        }
    }
    Ok(EXIT_OK)
}

fn caps_with(vectors: Option<u64>) -> Caps {
    let mut caps = Caps::default();
    if let Some(v) = vectors {
        caps.vectors = v;
    }
    caps
}

fn push_line(out: &mut String, line: &str) {
    out.push_str(line);
    out.push('\n');
}

fn warn(inst: &LoadedInstance, err: &mut dyn Write) {
    for w in &inst.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
}

fn load(path: &Path, err: &mut dyn Write) -> Result<LoadedInstance> {
    let inst = InstanceFile::read(path)?.load()?;
    warn(&inst, err);
    Ok(inst)
}

fn require_parts(inst: &LoadedInstance) -> Result<&[Submodule]> {
    match &inst.parts {
        Some(p) if !p.is_empty() => Ok(p),
        _ => Err(Error::Input("decomposition file has no \"parts\"".into())),
    }
}

fn analyze(inst: &LoadedInstance, out: &mut String) -> Result<()> {
    let m = &inst.module;
    let q = quotient(m, &inst.base)?;
    let mut ctx = PrimeContext::for_module(&q.module)?;
    let primes = ctx.associated_left_primes(&q.module)?;
    let soc = q.preimage(&decomp::socle(&q.module)?)?;
    let simples = decomp::socle_decomposition(&q.module, 0)?;
    let primary = primes.len() == 1;
    let irreducible = primes.total() == 1;
    push_line(
        out,
        &format!("module {}: p={} dim={} generators={}", m.label(), m.p(), m.dim(), m.generators().len()),
    );
    push_line(out, &format!("N = {}", inst.base));
    push_line(out, &format!("dim M/N = {}", q.module.dim()));
    push_line(out, &format!("socle of M/N (preimage) = {soc}"));
    for s in &simples {
        let pre = q.preimage(s)?;
        let x = ctx.classify_simple(&q.module.restrict(s)?, s.clone())?;
        push_line(out, &format!("  simple summand {pre}  prime {x}"));
    }
    push_line(out, &format!("u.dim(M/N) = {}", primes.total()));
    push_line(out, &format!("As(M/N) = {primes}"));
    for (x, k) in primes.entries() {
        push_line(
            out,
            &format!("  {x}: multiplicity {k}, simple of dim {}, witness {}", x.dim(), q.preimage(x.witness())?),
        );
    }
    let status = match (primary, irreducible) {
        (true, true) => "N is primary and irreducible".to_string(),
        (true, false) => format!("N is {}-primary, not irreducible", primes.single().expect("one prime")),
        _ => "N is not primary".to_string(),
    };
    push_line(out, &status);
    push_line(out, "---");
    push_line(out, &format!("udim={}", primes.total()));
    push_line(out, &format!("primes={}", primes.len()));
    push_line(out, &format!("as={primes}"));
    push_line(out, &format!("primary={primary}"));
    push_line(out, &format!("irreducible={irreducible}"));
    Ok(())
}

fn print_parts(out: &mut String, parts: &[Submodule], primes: &[AssociatedPrimes]) {
    for (i, (p, a)) in parts.iter().zip(primes).enumerate() {
        push_line(out, &format!("  N_{} = {p}  As(M/N_{}) = {a}", i + 1, i + 1));
    }
}

fn flags_block(out: &mut String, d: &Decomposition) {
    push_line(out, &format!("kind={}", d.kind));
    push_line(out, &format!("parts={}", d.parts.len()));
    push_line(out, &format!("udim={}", d.base_primes.total()));
    push_line(out, &format!("primes={}", d.base_primes.len()));
    push_line(out, &format!("primary={}", d.flags.primary));
    push_line(out, &format!("uniform={}", d.flags.uniform));
    push_line(out, &format!("irredundant={}", d.flags.irredundant));
    push_line(out, &format!("shortest={}", d.flags.shortest));
    push_line(out, &format!("maximal={}", d.flags.maximal));
}

fn decompose_one(inst: &LoadedInstance, d: &Decomposition, choice: Option<usize>, out: &mut String) {
    let how = match choice {
        Some(k) => format!("construction path {k}"),
        None => "default construction".to_string(),
    };
    push_line(
        out,
        &format!("maximal shortest {} decomposition of N = {} in {} ({how})", d.kind, inst.base, inst.module.label()),
    );
    print_parts(out, &d.parts, &d.part_primes);
    push_line(out, "---");
    push_line(out, "count=1");
    flags_block(out, d);
}

fn decompose_all(inst: &LoadedInstance, kind: Kind, maximal: bool, caps: &Caps, out: &mut String) -> Result<()> {
    let (m, n) = (&inst.module, &inst.base);
    let mut ds = match (kind, maximal) {
        (Kind::Primary, false) => decomp::enumerate_shortest_primary(m, n, caps)?,
        (Kind::Primary, true) => decomp::enumerate_maximal_shortest_primary(m, n, caps)?,
        (Kind::Uniform, false) => decomp::enumerate_shortest_uniform(m, n, caps)?,
        (Kind::Uniform, true) => decomp::enumerate_maximal_shortest_uniform(m, n, caps)?,
    };
    ds.sort_by_key(|d| d.canonical_parts());
    let what = if maximal { "maximal shortest" } else { "shortest" };
    push_line(out, &format!("{what} {kind} decompositions of N = {n} in {}", m.label()));
    let mut n_max = 0;
    for (i, d) in ds.iter().enumerate() {
        if d.flags.maximal {
            n_max += 1;
        }
        let tag = if d.flags.maximal { " (maximal)" } else { "" };
        push_line(out, &format!("decomposition {}{tag}", i + 1));
        let mut order: Vec<usize> = (0..d.parts.len()).collect();
        order.sort_by(|&a, &b| d.parts[a].cmp(&d.parts[b]));
        let parts: Vec<Submodule> = order.iter().map(|&i| d.parts[i].clone()).collect();
        let primes: Vec<AssociatedPrimes> = order.iter().map(|&i| d.part_primes[i].clone()).collect();
        print_parts(out, &parts, &primes);
    }
    push_line(out, "---");
    push_line(out, &format!("kind={kind}"));
    push_line(out, &format!("count={}", ds.len()));
    push_line(out, &format!("maximal_count={n_max}"));
    if let Some(d) = ds.first() {
        push_line(out, &format!("udim={}", d.base_primes.total()));
        push_line(out, &format!("primes={}", d.base_primes.len()));
    }
    Ok(())
}

fn check(inst: &LoadedInstance, parts: &[Submodule], caps: &Caps, out: &mut String) -> Result<()> {
    let r = decomp::check_decomposition(&inst.module, &inst.base, parts, caps)?;
    let opt = |b: Option<bool>| b.map_or("unknown".to_string(), |b| b.to_string());
    push_line(out, &format!("check of {} parts for N = {} in {}", parts.len(), inst.base, inst.module.label()));
    print_parts(out, parts, &r.part_primes);
    for (i, u) in r.cofactors.iter().enumerate() {
        push_line(out, &format!("  U_{} = {u}", i + 1));
    }
    push_line(out, &format!("As(M/N) = {}", r.base_primes));
    push_line(out, "---");
    push_line(out, &format!("intersects={}", r.intersects_to_base));
    push_line(out, &format!("udim={}", r.udim));
    push_line(out, &format!("primes={}", r.base_primes.len()));
    push_line(out, &format!("primary={}", r.is_primary_decomposition));
    push_line(out, &format!("irredundant={}", r.is_irredundant));
    push_line(out, &format!("cofactor_sum_direct={}", r.cofactor_sum_direct));
    push_line(out, &format!("shortest_primary={}", r.is_shortest_primary));
    push_line(out, &format!("uniform={}", r.is_uniform_decomposition));
    push_line(out, &format!("shortest_uniform={}", r.is_shortest_uniform));
    push_line(out, &format!("maximal_primary={}", opt(r.maximal_primary)));
    push_line(out, &format!("maximal_uniform={}", opt(r.maximal_uniform)));
    Ok(())
}

fn verify(instances: &[Instance], suites: &[Suite], caps: &OracleCaps, seed: u64, out: &mut String) -> i32 {
    push_line(
        out,
        &format!(
            "verify seed={seed} instances={} suites={} lattice_cap={}",
            instances.len(),
            suites.len(),
            caps.lattice
        ),
    );
    let mut reports = Vec::new();
    for inst in instances {
        for &s in suites {
            let r = oracle::verify_suite(inst, s, caps);
            out.push_str(&report::render_report(&r));
            reports.push(r);
        }
    }
    out.push_str(&report::summary_block(&reports, instances.len()));
    match report::overall(&reports) {
        Verdict::Pass | Verdict::NotApplicable => EXIT_OK,
        Verdict::Counterexample => EXIT_COUNTEREXAMPLE,
        Verdict::Resource => EXIT_RESOURCE,
    }
}
