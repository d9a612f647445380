//! Command-line surface of the self-dual code workbench.
//!
//! Exit status: 0 on success, 1 on domain errors (e.g. a non-self-dual
//! input where a self-dual code is required), 2 on usage errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;

use sdcodes::catalog::parse_support_list;
use sdcodes::codes::{parse_spec_file, Code, FourCirculantSpec, ParityClass};
use sdcodes::enumerators::{
    doubly_even_family, fit_coefficients, gleason_basis_i, gleason_basis_ii, is_extremal,
    mallows_sloane, singly_even_112_family, substitute, GleasonType, SolvedFamily,
};
use sdcodes::gf2::{BitMatrix, BitWord};
use sdcodes::search::{run_campaign_with_sink, serialize_records, SearchConfig, SearchRecord};
use sdcodes::shadow::{doubly_even_neighbors, is_neighbor, neighbor_via_vector, shadow_decompose};
use sdcodes::weights::{
    enumerate_weight_with_progress, find_low_weight, gram_invariant, min_weight_with_progress,
    weight_distribution_bruteforce, CertificateKind, MinWeightOptions, WeightDistribution,
    DEFAULT_BRUTE_CAP,
};

#[derive(Parser)]
#[command(
    name = "sdcodes",
    version,
    about = "Workbench for binary self-dual codes"
)]
struct Cli {
    /// Seed for all randomized procedures.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Message-evaluation budget for enumeration-heavy operations.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CodeInput {
    /// Spec file: one code per line as "rA rB" ('#' comments allowed).
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Generator matrix file: one bit-string row per line.
    #[arg(long)]
    generator: Option<PathBuf>,
}

#[derive(Args)]
struct CodeSelect {
    #[command(flatten)]
    input: CodeInput,
    /// 1-based index into the spec file (ignored for --generator).
    #[arg(long, default_value_t = 1)]
    line: usize,
}

impl CodeSelect {
    fn load(&self) -> Result<Code> {
        if let Some(path) = &self.input.spec {
            let specs = read_specs(path)?;
            let idx = self
                .line
                .checked_sub(1)
                .ok_or_else(|| anyhow!("--line is 1-based"))?;
            let spec = specs.get(idx).ok_or_else(|| {
                anyhow!(
                    "spec file has {} codes, requested line {}",
                    specs.len(),
                    self.line
                )
            })?;
            Ok(spec.code())
        } else {
            let path = self
                .input
                .generator
                .as_ref()
                .expect("clap group guarantees one input");
            read_generator(path)
        }
    }
}

fn read_specs(path: &PathBuf) -> Result<Vec<FourCirculantSpec>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let specs = parse_spec_file(&text).with_context(|| format!("parsing {}", path.display()))?;
    if specs.is_empty() {
        bail!("{} contains no codes", path.display());
    }
    Ok(specs)
}

fn read_generator(path: &PathBuf) -> Result<Code> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let rows: Vec<BitWord> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| BitWord::from_bitstring(l).map_err(|e| anyhow!("{}: {e}", path.display())))
        .collect::<Result<_>>()?;
    let cols = rows
        .first()
        .map(BitWord::len)
        .ok_or_else(|| anyhow!("{} is empty", path.display()))?;
    let matrix =
        BitMatrix::from_rows(rows, cols).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok(Code::from_generator(matrix))
}

#[derive(Subcommand)]
enum Command {
    /// Print the four-circulant generator matrix of a spec.
    Build {
        #[command(flatten)]
        select: CodeSelect,
    },
    /// Report self-duality, parity class, and the extremality bound.
    Check {
        #[command(flatten)]
        input: CodeInput,
        /// Check only this 1-based spec line instead of the whole file.
        #[arg(long)]
        line: Option<usize>,
    },
    /// Certify the minimum weight (exact value or proven lower bound).
    Minweight {
        #[command(flatten)]
        select: CodeSelect,
        /// Stop as soon as a codeword of weight below this is found.
        #[arg(long)]
        early_stop_below: Option<usize>,
        /// Stop once the certified lower bound reaches this value.
        #[arg(long)]
        certify: Option<usize>,
        /// Also run the randomized low-weight search for a witness of at
        /// most this weight.
        #[arg(long)]
        witness_target: Option<usize>,
        /// Iterations for the randomized witness search.
        #[arg(long, default_value_t = 200)]
        witness_iterations: u64,
    },
    /// Exact weight distribution by full enumeration (2^k codewords).
    Distribution {
        #[command(flatten)]
        select: CodeSelect,
        /// Dimension cap for the enumeration.
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        cap: usize,
    },
    /// List all codewords of one weight (1-indexed supports).
    EnumerateWeight {
        #[command(flatten)]
        select: CodeSelect,
        #[arg(long)]
        weight: usize,
        /// Maximum number of codewords to collect.
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Distinct entries of M^T M over the weight-w codewords (the
    /// invariant separating inequivalent codes).
    GramInvariant {
        #[command(flatten)]
        select: CodeSelect,
        #[arg(long)]
        weight: usize,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Weight-enumerator algebra.
    #[command(subcommand)]
    Gleason(GleasonCommand),
    /// Shadow decomposition of a singly even self-dual code.
    Shadow {
        #[command(flatten)]
        select: CodeSelect,
        /// Dimension cap for enumerating the shadow cosets.
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        cap: usize,
        /// Count shadow vectors of exactly this weight by information-set
        /// enumeration of C0^⊥ (works beyond the coset cap).
        #[arg(long)]
        count_weight: Option<usize>,
    },
    /// The two doubly even self-dual neighbors of a singly even code.
    Neighbors {
        #[command(flatten)]
        select: CodeSelect,
        /// Also print both generator matrices.
        #[arg(long)]
        emit_generators: bool,
    },
    /// The neighbor <(C ∩ <x>^⊥), x> for a support-listed vector x.
    NeighborX {
        #[command(flatten)]
        select: CodeSelect,
        /// Comma-separated 1-indexed support of x.
        #[arg(long, conflicts_with = "support_file")]
        support: Option<String>,
        /// File holding the support list.
        #[arg(long)]
        support_file: Option<PathBuf>,
        /// Write the neighbor's generator matrix here.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print the neighbor's generator matrix.
        #[arg(long)]
        emit_generator: bool,
    },
    /// Randomized four-circulant search with certification.
    Search {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        target_d: usize,
        #[arg(long)]
        doubly_even_only: bool,
        #[arg(long, default_value_t = 1000)]
        max_candidates: u64,
        /// Append accepted records (spec-file format) here.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write the statistics sidecar here.
        #[arg(long)]
        stats: Option<PathBuf>,
        /// Flush the output file every N accepted records.
        #[arg(long, default_value_t = 16)]
        checkpoint: u64,
    },
}

#[derive(Subcommand)]
enum GleasonCommand {
    /// Print the Gleason basis polynomials for a length.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_type)]
        r#type: GleasonType,
    },
    /// Express a distribution in a Gleason basis (exact solve).
    Fit {
        #[command(flatten)]
        input: FitInput,
        #[arg(long, value_parser = parse_type)]
        r#type: GleasonType,
        /// Code length (required with --distribution).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        cap: usize,
    },
    /// Solve for the parameterized enumerator family with all weights
    /// below --min-weight pinned to zero.
    SolveFamily {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_type)]
        r#type: GleasonType,
        #[arg(long)]
        min_weight: usize,
    },
    /// Evaluate a solved family at bound parameter values.
    Substitute {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_type)]
        r#type: GleasonType,
        #[arg(long)]
        min_weight: usize,
        /// Parameter binding name=value (repeatable; value may be p/q).
        #[arg(long = "set", value_name = "NAME=VALUE")]
        set: Vec<String>,
        /// Print the shadow-side distribution instead of the code side.
        #[arg(long)]
        shadow: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FitInput {
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long)]
    generator: Option<PathBuf>,
    /// Two-column "weight count" distribution file.
    #[arg(long)]
    distribution: Option<PathBuf>,
}

fn parse_type(s: &str) -> Result<GleasonType, String> {
    match s {
        "I" | "i" | "1" => Ok(GleasonType::TypeI),
        "II" | "ii" | "2" => Ok(GleasonType::TypeII),
        other => Err(format!("unknown Gleason type {other:?} (expected I or II)")),
    }
}

fn main() -> ExitCode {
    // die quietly when a pipe downstream closes (e.g. `sdcodes ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("error: failed to configure thread pool: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Build { select } => {
            let code = select.load()?;
            println!("# n={} k={}", code.n(), code.k());
            print!("{}", code.generator());
        }
        Command::Check { input, line } => {
            let report = |label: &str, code: &Code| {
                let status = if code.is_self_dual() {
                    match code.parity_class() {
                        ParityClass::DoublyEven => "self-dual, doubly even",
                        ParityClass::SinglyEven => "self-dual, singly even",
                        ParityClass::NotSelfDual => unreachable!(),
                    }
                } else {
                    "not self-dual"
                };
                println!("{label}{status}, n={}, k={}", code.n(), code.k());
                if code.n().is_multiple_of(8) {
                    let bound = mallows_sloane(code.n()).expect("length divisible by 8");
                    println!("{label}mallows-sloane({}) = {bound}", code.n());
                }
            };
            if let Some(path) = &input.spec {
                let specs = read_specs(path)?;
                match line {
                    Some(idx) => {
                        let spec = specs
                            .get(
                                idx.checked_sub(1)
                                    .ok_or_else(|| anyhow!("--line is 1-based"))?,
                            )
                            .ok_or_else(|| anyhow!("spec file has {} codes", specs.len()))?;
                        report("", &spec.code());
                    }
                    None => {
                        let multi = specs.len() > 1;
                        for (i, spec) in specs.iter().enumerate() {
                            let label = if multi {
                                format!("code {}: ", i + 1)
                            } else {
                                String::new()
                            };
                            report(&label, &spec.code());
                        }
                    }
                }
            } else {
                let path = input.generator.as_ref().expect("clap group");
                report("", &read_generator(path)?);
            }
        }
        Command::Minweight {
            select,
            early_stop_below,
            certify,
            witness_target,
            witness_iterations,
        } => {
            let code = select.load()?;
            let opts = MinWeightOptions {
                budget: cli.budget,
                early_stop_below,
                certify_bound: certify,
            };
            let cert = min_weight_with_progress(&code, &opts, &mut |report| {
                eprintln!(
                    "level {} complete: bound {}, best {}, evaluated {}",
                    report.level,
                    report.bound,
                    report
                        .best_weight
                        .map_or_else(|| "-".into(), |w| w.to_string()),
                    report.evaluated
                );
            });
            match cert.kind {
                CertificateKind::Exact => {
                    println!("certificate: exact minimum weight {}", cert.value)
                }
                CertificateKind::LowerBound => {
                    println!("certificate: minimum weight >= {}", cert.value)
                }
            }
            if let Some(w) = &cert.witness {
                println!("witness weight: {}", w.weight());
                println!("witness support: {}", join(&w.support()));
            }
            println!("evaluated messages: {}", cert.evaluated);
            for (i, set) in cert.sets.iter().enumerate() {
                println!(
                    "set {}: fresh {}, deficit {}, completed level {}",
                    i + 1,
                    set.fresh_columns,
                    set.deficit,
                    set.completed_level
                );
            }
            if let Some(target) = witness_target {
                match find_low_weight(&code, target, witness_iterations, cli.seed) {
                    Some(w) => {
                        println!("low-weight search: found weight {}", w.weight());
                        println!("low-weight support: {}", join(&w.support()));
                    }
                    None => println!(
                        "low-weight search: none of weight <= {target} within {witness_iterations} iterations"
                    ),
                }
            }
        }
        Command::Distribution { select, cap } => {
            let code = select.load()?;
            let dist = weight_distribution_bruteforce(&code, cap)?;
            print!("{}", dist.to_table_string());
        }
        Command::EnumerateWeight {
            select,
            weight,
            cap,
        } => {
            let code = select.load()?;
            let words = enumerate_with_diagnostics(&code, weight, cap, cli.budget)?;
            println!("count {}", words.len());
            for w in words {
                println!("{}", join(&w.support()));
            }
        }
        Command::GramInvariant {
            select,
            weight,
            cap,
        } => {
            let code = select.load()?;
            let words = enumerate_with_diagnostics(&code, weight, cap, cli.budget)?;
            if words.is_empty() {
                bail!("no codewords of weight {weight}");
            }
            let values = gram_invariant(&words)?;
            println!("{}", join(&values));
        }
        Command::Gleason(sub) => run_gleason(sub, cli.budget)?,
        Command::Shadow {
            select,
            cap,
            count_weight,
        } => {
            let code = select.load()?;
            let decomp = shadow_decompose(&code)?;
            println!("even subcode dimension: {}", decomp.even_subcode.k());
            println!(
                "coset representative weights: t1={}, t2={}, t3={}",
                decomp.t1.weight(),
                decomp.t2.weight(),
                decomp.t3.weight()
            );
            if decomp.even_subcode.k() <= cap {
                let dist = decomp.shadow_distribution(cap)?;
                println!("shadow distribution:");
                print!("{}", dist.to_table_string());
            } else {
                println!(
                    "shadow distribution: skipped (even subcode dimension {} over cap {cap})",
                    decomp.even_subcode.k()
                );
            }
            if let Some(w) = count_weight {
                // S = C0^⊥ \ C: enumerate weight-w words of C0^⊥ and drop
                // the ones lying in C
                let c0_perp = decomp.even_subcode.dual_code();
                let words = enumerate_with_diagnostics(&c0_perp, w, usize::MAX, cli.budget)?;
                let count = words
                    .iter()
                    .filter(|v| !code.contains(v).expect("same length"))
                    .count();
                println!("shadow weight {w} count: {count}");
            }
        }
        Command::Neighbors {
            select,
            emit_generators,
        } => {
            let code = select.load()?;
            let (n1, n3) = doubly_even_neighbors(&code)?;
            for (i, nb) in [&n1, &n3].into_iter().enumerate() {
                println!(
                    "neighbor {}: {}, n={}, k={}, is-neighbor={}",
                    i + 1,
                    nb.parity_class(),
                    nb.n(),
                    nb.k(),
                    is_neighbor(&code, nb)?
                );
            }
            if emit_generators {
                for (i, nb) in [&n1, &n3].into_iter().enumerate() {
                    println!("# neighbor {} generator", i + 1);
                    print!("{}", nb.standard_form().matrix);
                }
            }
        }
        Command::NeighborX {
            select,
            support,
            support_file,
            output,
            emit_generator,
        } => {
            let code = select.load()?;
            let text = match (&support, &support_file) {
                (Some(s), None) => s.clone(),
                (None, Some(path)) => fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?,
                _ => bail!("provide exactly one of --support or --support-file"),
            };
            let coords = parse_support_list(&text).context("parsing support list")?;
            let x = BitWord::from_support(code.n(), &coords)?;
            let result = neighbor_via_vector(&code, &x)?;
            if result.degenerate {
                println!(
                    "degenerate: x is already a codeword; the construction returns the input code"
                );
            }
            let nb = result.code;
            println!(
                "neighbor: {}, n={}, k={}",
                nb.parity_class(),
                nb.n(),
                nb.k()
            );
            println!("intersection dimension: {}", code.intersection(&nb)?.k());
            println!("is-neighbor: {}", is_neighbor(&code, &nb)?);
            if let Some(path) = output {
                fs::write(&path, format!("{}", nb.generator()))
                    .with_context(|| format!("writing {}", path.display()))?;
                println!("generator written to {}", path.display());
            }
            if emit_generator {
                print!("{}", nb.generator());
            }
        }
        Command::Search {
            m,
            target_d,
            doubly_even_only,
            max_candidates,
            output,
            stats,
            checkpoint,
        } => {
            let cfg = SearchConfig {
                m,
                target_d,
                doubly_even_only,
                seed: cli.seed,
                max_candidates,
                minweight_budget: cli.budget,
                count_budget: cli.budget,
            };
            let mut out_file = match &output {
                Some(path) => Some(std::io::BufWriter::new(
                    fs::File::create(path)
                        .with_context(|| format!("creating {}", path.display()))?,
                )),
                None => None,
            };
            let mut since_flush = 0u64;
            let mut sink = |record: &SearchRecord| {
                println!(
                    "candidate {} accepted: d {} {}{}, spec: {}",
                    record.candidate_index,
                    if record.certificate.is_exact() {
                        "="
                    } else {
                        ">="
                    },
                    record.certificate.value,
                    record
                        .min_weight_count
                        .as_ref()
                        .map(|c| format!(", count {c}"))
                        .unwrap_or_default(),
                    record.spec.to_line()
                );
                if let Some(f) = &mut out_file {
                    let _ = write!(f, "{}", serialize_records(std::slice::from_ref(record)));
                    since_flush += 1;
                    if since_flush >= checkpoint {
                        let _ = f.flush();
                        since_flush = 0;
                    }
                }
            };
            let outcome = run_campaign_with_sink(&cfg, &mut sink)?;
            if let Some(f) = &mut out_file {
                f.flush().context("flushing output")?;
            }
            let keys: Vec<_> = outcome.records.iter().map(|r| r.key.clone()).collect();
            let stats_text = outcome.stats.to_text(&keys);
            eprint!("{stats_text}");
            if let Some(path) = stats {
                fs::write(&path, stats_text)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            println!(
                "accepted {} of {} candidates",
                outcome.stats.accepted, max_candidates
            );
        }
    }
    Ok(())
}

fn run_gleason(cmd: GleasonCommand, budget: u64) -> Result<()> {
    match cmd {
        GleasonCommand::Basis { n, r#type } => {
            let basis = match r#type {
                GleasonType::TypeI => gleason_basis_i(n)?,
                GleasonType::TypeII => gleason_basis_ii(n)?,
            };
            for (j, p) in basis.iter().enumerate() {
                println!("j={j}: {p}");
            }
        }
        GleasonCommand::Fit {
            input,
            r#type,
            n,
            cap,
        } => {
            let dist = if let Some(path) = &input.distribution {
                let n = n.ok_or_else(|| anyhow!("--n is required with --distribution"))?;
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                WeightDistribution::parse_table(n, &text)?
            } else {
                let select = CodeSelect {
                    input: CodeInput {
                        spec: input.spec,
                        generator: input.generator,
                    },
                    line: 1,
                };
                weight_distribution_bruteforce(&select.load()?, cap)?
            };
            let fit = fit_coefficients(&dist, r#type)?;
            for (j, a) in fit.values.iter().enumerate() {
                println!("a_{j} = {a}");
            }
        }
        GleasonCommand::SolveFamily {
            n,
            r#type,
            min_weight,
        } => {
            let family = solve_requested_family(n, r#type, min_weight)?;
            let names = family.code.params.join(", ");
            println!(
                "family n={n} type {} minimum weight {min_weight}, parameters: {}",
                r#type,
                if names.is_empty() { "(none)" } else { &names }
            );
            match &family.shadow {
                Some(shadow) => {
                    println!("code:");
                    for line in family.code.render_lines() {
                        println!("{line}");
                    }
                    println!("shadow:");
                    for line in shadow.render_lines() {
                        println!("{line}");
                    }
                }
                None => {
                    for line in family.code.render_lines() {
                        println!("{line}");
                    }
                }
            }
        }
        GleasonCommand::Substitute {
            n,
            r#type,
            min_weight,
            set,
            shadow,
        } => {
            let family = solve_requested_family(n, r#type, min_weight)?;
            let mut values: BTreeMap<String, BigRational> = BTreeMap::new();
            for binding in &set {
                let (name, value) = binding
                    .split_once('=')
                    .ok_or_else(|| anyhow!("--set expects NAME=VALUE, got {binding:?}"))?;
                values.insert(name.trim().to_string(), parse_rational(value.trim())?);
            }
            let side = if shadow {
                family
                    .shadow
                    .as_ref()
                    .ok_or_else(|| anyhow!("type II families have no shadow side"))?
            } else {
                &family.code
            };
            let dist = substitute(side, &values)?;
            print!("{}", dist.to_table_string());
        }
    }
    let _ = budget;
    Ok(())
}

fn solve_requested_family(n: usize, t: GleasonType, min_weight: usize) -> Result<SolvedFamily> {
    match t {
        GleasonType::TypeII => {
            if !min_weight.is_multiple_of(4) {
                bail!("doubly even codes have weights divisible by 4; --min-weight {min_weight} is not");
            }
            if let Ok(bound) = mallows_sloane(n) {
                if min_weight > bound && !is_extremal(n, min_weight).unwrap_or(false) {
                    bail!("minimum weight {min_weight} exceeds the bound {bound} for n={n}");
                }
            }
            Ok(doubly_even_family(n, min_weight)?)
        }
        GleasonType::TypeI => {
            if n == 112 && min_weight == 18 {
                Ok(singly_even_112_family())
            } else {
                bail!(
                    "the type I family is pinned for n=112 with minimum weight 18; \
                     other lengths need explicit parameter definitions via the library API"
                );
            }
        }
    }
}

fn enumerate_with_diagnostics(
    code: &Code,
    weight: usize,
    cap: usize,
    budget: u64,
) -> Result<Vec<BitWord>> {
    let words =
        enumerate_weight_with_progress(code, weight, cap, budget, &mut |set, level, found| {
            eprintln!(
                "set {} level {} complete: {} words collected",
                set + 1,
                level,
                found
            );
        })?;
    Ok(words)
}

fn parse_rational(s: &str) -> Result<BigRational> {
    match s.split_once('/') {
        Some((num, den)) => Ok(BigRational::new(
            BigInt::from_str(num.trim()).with_context(|| format!("parsing {s:?}"))?,
            BigInt::from_str(den.trim()).with_context(|| format!("parsing {s:?}"))?,
        )),
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).with_context(|| format!("parsing {s:?}"))?,
        )),
    }
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
