//! `fusion-rings`: analyze, build, enumerate and batch-screen fusion rings.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use fusion_rings::builders::format::serialize_text;
use fusion_rings::builders::{
    abelian_from_spec, catalog_group, class_hypergroup, enumerate_by_type, family_ring, group_from_generators,
    group_ring, near_group, parse, parse_generators, rep_ring, serialize, FiniteGroup, TypeVector,
};
use fusion_rings::builders::families::{fibonacci, ising};
use fusion_rings::builders::groups::cyclic;
use fusion_rings::criteria::{modular_prime_support, squarefree_factor_test, Context};
use fusion_rings::dual::dual_hypergroup;
use fusion_rings::error::{Category, Error};
use fusion_rings::report::{analyze, AnalyzeOptions};
use fusion_rings::spectra::{character_table_seeded, fp_character, Tolerance, DEFAULT_SEED};
use fusion_rings::structure::{quotient, SubHypergroup};
use fusion_rings::FusionData;

#[derive(Parser)]
#[command(name = "fusion-rings", version, about = "Character theory and categorification tests for fusion rings")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Absolute tolerance
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_abs: f64,
    /// Relative tolerance
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_rel: f64,
    /// Seed for the random combination used to split the spectrum
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Fail on float input instead of falling back to floating point
    #[arg(long, global = true)]
    exact_only: bool,
    /// Treat the input as a modular categorification candidate (enables modular-only tests)
    #[arg(long, global = true)]
    modular_candidate: bool,
    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupKind {
    Rep,
    Class,
    GroupRing,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on a ring file (`-` for stdin)
    Analyze { path: PathBuf },
    /// Build a ring from a group: catalog name, `C<n>`, `2x2x3`, or permutation generators
    Group {
        spec: String,
        #[arg(long, value_enum, default_value = "rep")]
        kind: GroupKind,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a named family member
    Generate {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Write the dual hypergroup
    Dual {
        path: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the quotient by a sub-hypergroup given as comma-separated indices
    Quotient {
        path: PathBuf,
        #[arg(long)]
        sub: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate fusion rings of a type, e.g. `1,1,1,1,2,2`, and screen them
    Enumerate {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// Directory for one ring file per solution
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Analyze every ring file in a directory
    Batch { dir: PathBuf },
}

#[derive(Subcommand)]
enum Family {
    /// `K(G, m)`
    NearGroup { group: String, m: i64 },
    /// `[[1, n²], [n, m]]` family with abelian `G` of order `n²`
    Family { n: usize, g: String, k: String },
    Ising,
    Fibonacci,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.category() {
            Category::Axiom => 2,
            Category::Numeric => 3,
            Category::Usage => 1,
        };
        Failure { code, message: format!("[{}] {e}", e.module()) }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn options(g: &Global) -> AnalyzeOptions {
    AnalyzeOptions {
        tol: Tolerance::new(g.tol_abs, g.tol_rel),
        seed: g.seed,
        exact_only: g.exact_only,
        modular_candidate: g.modular_candidate,
    }
}

fn read_ring(path: &Path, g: &Global) -> CliResult<FusionData> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("stdin");
    let data = parse(&text, stem)?;
    if g.exact_only && !data.is_exact() {
        return Err(Error::InexactTensor.into());
    }
    Ok(data)
}

fn emit(text: &str, output: Option<&Path>) -> CliResult<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn ring_text(data: &FusionData, g: &Global) -> CliResult<String> {
    match g.format {
        Some(Format::Text) => serialize_text(data).ok_or_else(|| usage("text format holds exact rings only")),
        _ => Ok(serialize(data)),
    }
}

fn resolve_group(spec: &str) -> CliResult<FiniteGroup> {
    if let Some(g) = catalog_group(spec) {
        return Ok(g);
    }
    let s = spec.trim();
    if let Some(n) = s.strip_prefix(['C', 'c']).and_then(|n| n.parse::<usize>().ok()) {
        if n == 0 {
            return Err(usage("cyclic group order must be positive"));
        }
        return Ok(cyclic(n));
    }
    if s.contains('(') {
        return Ok(group_from_generators(&parse_generators(s)?)?);
    }
    abelian_from_spec(s).map_err(|_| usage(format!("unknown group `{spec}`")))
}

fn run(cli: &Cli) -> CliResult<u8> {
    let g = &cli.global;
    let opts = options(g);
    match &cli.command {
        Command::Analyze { path } => {
            let data = read_ring(path, g)?;
            let report = analyze(&data, &opts)?;
            let text = match g.format {
                Some(Format::Structured) => report.to_json(),
                _ => report.to_text(),
            };
            emit(&text, None)?;
        }
        Command::Group { spec, kind, output } => {
            let grp = resolve_group(spec)?;
            let data = match kind {
                GroupKind::Rep => rep_ring(&grp)?.with_name(format!("Rep({spec})")),
                GroupKind::Class => class_hypergroup(&grp).with_name(format!("Class({spec})")),
                GroupKind::GroupRing => group_ring(&grp).with_name(format!("Z[{spec}]")),
            };
            emit(&ring_text(&data, g)?, output.as_deref())?;
        }
        Command::Generate { family, output } => {
            let data = match family {
                Family::NearGroup { group, m } => near_group(&resolve_group(group)?, *m)?,
                Family::Family { n, g: gg, k } => family_ring(*n, &resolve_group(gg)?, &resolve_group(k)?)?,
                Family::Ising => ising(),
                Family::Fibonacci => fibonacci(),
            };
            emit(&ring_text(&data, g)?, output.as_deref())?;
        }
        Command::Dual { path, output } => {
            let data = read_ring(path, g)?;
            let table = character_table_seeded(&data, &opts.tol, opts.seed)?;
            let fp = fp_character(&table)?;
            let dd = dual_hypergroup(&data, fp, &table, &opts.tol)?;
            let dual = dd.base.with_name(format!("dual({})", data.name()));
            emit(&ring_text(&dual, g)?, output.as_deref())?;
        }
        Command::Quotient { path, sub, output } => {
            let data = read_ring(path, g)?;
            let mut indices: Vec<usize> = sub
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| usage(format!("bad index `{t}`"))))
                .collect::<CliResult<_>>()?;
            indices.sort_unstable();
            indices.dedup();
            if indices.iter().any(|&i| i >= data.rank()) {
                return Err(usage("sub-hypergroup index out of range"));
            }
            let s = SubHypergroup { indices };
            if !fusion_rings::structure::is_sub_hypergroup(&data, &s.indices, opts.tol.support_threshold()) {
                return Err(usage("indices do not form a sub-hypergroup"));
            }
            let table = character_table_seeded(&data, &opts.tol, opts.seed)?;
            let (q, _) = quotient(&data, &table, &s)?;
            emit(&ring_text(&q, g)?, output.as_deref())?;
        }
        Command::Enumerate { ty, budget, out_dir } => {
            let tv: TypeVector = ty.parse().map_err(|e: Error| Failure::from(e))?;
            let rings = enumerate_by_type(&tv, *budget)?;
            if let Some(dir) = out_dir {
                fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
            }
            let mut excluded = 0;
            for (n, r) in rings.iter().enumerate() {
                let ctx = Context::compute(r, &opts.tol)?;
                let tests = [modular_prime_support(r, &ctx, true)?, squarefree_factor_test(r, &ctx, true)?];
                let hit: Vec<&str> = tests.iter().filter(|t| t.excluded).map(|t| t.test_name.as_str()).collect();
                if !hit.is_empty() {
                    excluded += 1;
                }
                let verdict = if hit.is_empty() { "not excluded".to_string() } else { format!("excluded by {}", hit.join(", ")) };
                println!("{:<28} {verdict}: {}", r.name(), tests[0].certificate);
                if let Some(dir) = out_dir {
                    let p = dir.join(format!("ring-{}.json", n + 1));
                    fs::write(&p, serialize(r)).map_err(|e| usage(format!("{}: {e}", p.display())))?;
                }
            }
            let summary = if rings.is_empty() {
                "no rings".to_string()
            } else if excluded == rings.len() {
                "all excluded".to_string()
            } else {
                format!("{excluded} of {} excluded", rings.len())
            };
            println!("{} rings of type {ty}; modular screening: {summary}", rings.len());
        }
        Command::Batch { dir } => return batch(dir, g, &opts),
    }
    Ok(0)
}

fn batch(dir: &Path, g: &Global, opts: &AnalyzeOptions) -> CliResult<u8> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| usage(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let rows: Vec<(String, bool)> = paths
        .par_iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().to_string();
            let result = read_ring(p, g).and_then(|d| analyze(&d, opts).map_err(Failure::from));
            match result {
                Ok(r) => {
                    let b = r.burnside.as_ref();
                    let flag = |v: Option<bool>| v.map_or("-", |x| if x { "yes" } else { "no" });
                    let fp = r.fp_dimension.map_or("-".to_string(), |x| format!("{x}"));
                    let ex = r.exclusions();
                    let row = format!(
                        "{name:<32} OK     rank={:<3} FPdim={fp:<12} burnside={:<3} dual-burnside={:<3} excluded=[{}]",
                        r.ring.rank,
                        flag(b.map(|b| b.is_burnside.value)),
                        flag(b.map(|b| b.is_dual_burnside.value)),
                        ex.join(",")
                    );
                    (row, true)
                }
                Err(f) => (format!("{name:<32} ERROR  {}", f.message), false),
            }
        })
        .collect();
    let mut ok = true;
    for (row, good) in &rows {
        println!("{row}");
        ok &= good;
    }
    Ok(if ok { 0 } else { 1 })
}
