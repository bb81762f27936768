use std::path::PathBuf;
use std::process::ExitCode;

use affpaths::combinatorics::{kostka_foulkes, Composition, Partition};
use affpaths::crystal::{Kind, Path};
use affpaths::energy::{energy, energy_elines, energy_terms};
use affpaths::fermionic::{
    f_l, f_l_prime, f_lr_prime_with_stats, ff_kostka, ff_kostka_dual, ff_unrestricted_antisym,
    ff_unrestricted_sym, general_string_series, rsos_spinon_series, spinon_branching_series,
    spinon_series_residue, string_series_single, string_series_tensor, CartanDatum,
};
use affpaths::limits::{
    stabilized_limit, stabilized_rsos_limit, stabilized_tensor_limit, LadderConfig, LimitClass, RsosSource,
};
use affpaths::paths::{enumerate_paths, hw_set, onedsum, onedsum_by_enumeration, PathClass};
use affpaths::qalgebra::{LaurentPoly, QSeries};
use affpaths_cli::harness::{run_suite, Bounds, SUITES};
use affpaths_cli::json::{poly_to_json, series_to_json};
use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "affpaths", version, about = "Paths, energies, 1dsums and fermionic formulae for affine sl_n")]
struct Cli {
    /// Worker threads for suites and sweeps (default: all cores).
    #[arg(long, global = true, env = "AFFPATHS_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate paths, their 1dsum, or a highest weight set.
    Paths {
        #[command(subcommand)]
        action: PathsAction,
    },
    /// One-dimensional sum of a class of paths.
    Onedsum(SumArgs),
    /// Energy of a path with the pairwise H table.
    Energy(EnergyArgs),
    /// Kostka-Foulkes polynomial K_{lambda mu}(q).
    Kostka(KostkaArgs),
    /// Fermionic polynomials and series.
    Fermionic {
        #[command(subcommand)]
        action: FermionicAction,
    },
    /// Stabilized large-size limit of a normalized 1dsum.
    Limit(LimitArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum PathsAction {
    /// List the paths of a class with their energies.
    Enum(SumArgs),
    /// The 1dsum of a class (same as the top-level `onedsum`).
    Onedsum(SumArgs),
    /// The highest weight set H(l Lambda_r, mu) with energies and weights.
    Hw(HwArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Unrestricted,
    Classical,
    Restricted,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Sym,
    Antisym,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Sym => Kind::Sym,
            KindArg::Antisym => Kind::Antisym,
        }
    }
}

#[derive(Args)]
struct SumArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "sym")]
    kind: KindArg,
    /// Path shape, e.g. 2,2,1,1.
    #[arg(long)]
    mu: String,
    #[arg(long, value_enum, default_value = "unrestricted")]
    class: ClassArg,
    /// Weight: a composition with n entries (unrestricted) or a partition.
    #[arg(long)]
    lambda: String,
    /// Level of a restricted class.
    #[arg(long)]
    level: Option<usize>,
    /// Sum by listing every path instead of the transfer recursion.
    #[arg(long)]
    enumerate: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HwArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    l: usize,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnergyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "sym")]
    kind: KindArg,
    /// Path as words, e.g. "133⊗22⊗23⊗2" ("x", "*" or spaces also separate).
    #[arg(long)]
    path: String,
    /// Also print the E-line decomposition.
    #[arg(long)]
    lines: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KostkaMethod {
    /// Charge statistic on tableaux.
    Charge,
    /// Rigged configuration sum.
    Kr,
    /// Classically restricted paths.
    Path,
}

#[derive(Args)]
struct KostkaArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
    #[arg(long, value_enum, default_value = "charge")]
    method: KostkaMethod,
    /// Rank; defaults to max(2, rows of lambda).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum FermionicAction {
    /// Evaluate a fermionic polynomial.
    Eval(EvalArgs),
    /// Truncated limit series.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    /// Unrestricted symmetric chain sum g_mu(lambda).
    Ffkk,
    /// Unrestricted antisymmetric chain sum g'_mu(lambda).
    Ffkkp,
    /// Rigged form of K_{lambda mu}(q).
    Kr,
    /// Rigged form of K_{xi eta}(q) with eta_1 < n.
    Dual,
    /// Level-truncated F^(l)_mu.
    #[value(name = "Fl")]
    Fl,
    /// Level-truncated F^(l)'_eta.
    #[value(name = "Flp")]
    Flp,
    /// F^(l,r)'_{eta,mu}.
    #[value(name = "Flrp")]
    Flrp,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_enum)]
    formula: Formula,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    eta: Option<String>,
    #[arg(long)]
    xi: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    String,
    Tensor,
    Spinon,
    Rsos,
    General,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long, default_value_t = 8)]
    order: i64,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long, default_value = "")]
    nu: String,
    /// Weight: composition with n entries (string, tensor), partition
    /// (spinon) or simple-root coordinates (general).
    #[arg(long, default_value = "")]
    lambda: String,
    /// Tensor factors as l:r pairs, e.g. 1:0,2:1.
    #[arg(long)]
    parts: Option<String>,
    /// Row length t of the rsos shape (t^L).
    #[arg(long)]
    t: Option<usize>,
    /// Cartan datum as JSON: {"cartan": [[...]], "symmetrizer": [...]}.
    #[arg(long)]
    datum: Option<String>,
    /// Levels of the general form, e.g. 1,1.
    #[arg(long)]
    levels: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum LimitWhich {
    /// g, X or X^(l) along (l^L) ∪ nu.
    Single,
    /// g along a sum of rectangles.
    Tensor,
    /// Level restricted sums of (t^L).
    Rsos,
}

#[derive(Clone, Copy, ValueEnum)]
enum RsosArg {
    Fermionic,
    Paths,
}

#[derive(Args)]
struct LimitArgs {
    #[arg(long, value_enum, default_value = "single")]
    which: LimitWhich,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long, default_value = "")]
    nu: String,
    #[arg(long, value_enum, default_value = "unrestricted")]
    class: ClassArg,
    #[arg(long, default_value = "")]
    lambda: String,
    #[arg(long)]
    parts: Option<String>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value = "fermionic")]
    source: RsosArg,
    #[arg(long, default_value_t = 6)]
    order: i64,
    /// Ladder rungs after the first.
    #[arg(long, default_value_t = 8)]
    steps: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    suite: String,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_mu: Option<usize>,
    #[arg(long)]
    max_level: Option<usize>,
    #[arg(long)]
    order: Option<i64>,
    #[arg(long)]
    ladder_steps: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Print every check, not only failures and reports.
    #[arg(long)]
    verbose: bool,
    /// Write the JSON report to FILE, or to stdout when no file is given.
    #[arg(long, value_name = "FILE", num_args = 0..=1, default_missing_value = "-")]
    json: Option<PathBuf>,
}

/// Prints to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

/// Domain or usage error: exit code 2.
struct Usage(anyhow::Error);

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot set up {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether all checks passed.
fn run(cmd: Command) -> std::result::Result<bool, Usage> {
    let out = match cmd {
        Command::Paths { action } => match action {
            PathsAction::Enum(a) => paths_enum(&a),
            PathsAction::Onedsum(a) => onedsum_cmd(&a),
            PathsAction::Hw(a) => hw_cmd(&a),
        },
        Command::Onedsum(a) => onedsum_cmd(&a),
        Command::Energy(a) => energy_cmd(&a),
        Command::Kostka(a) => kostka_cmd(&a),
        Command::Fermionic { action } => match action {
            FermionicAction::Eval(a) => eval_cmd(&a),
            FermionicAction::Series(a) => series_cmd(&a),
        },
        Command::Limit(a) => limit_cmd(&a),
        Command::Verify(a) => return verify_cmd(&a).map_err(Usage),
    };
    out.map(|()| true).map_err(Usage)
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().with_context(|| format!("bad entry {x:?} in {what} {s:?}")))
        .collect()
}

fn parse_partition(s: &str, what: &str) -> Result<Partition> {
    Partition::new(parse_list(s, what)?).with_context(|| format!("{what} must be a partition"))
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
    v.clone().ok_or_else(|| anyhow!("missing --{flag}"))
}

fn print_value(json: bool, text: String, value: Value) {
    if json {
        out!("{}", serde_json::to_string_pretty(&value).unwrap_or_default());
    } else {
        out!("{text}");
    }
}

fn print_poly(json: bool, p: &LaurentPoly, params: Value) {
    print_value(json, p.to_string(), json!({"params": params, "result": poly_to_json(p)}));
}

fn print_series(json: bool, s: &QSeries, params: Value) {
    print_value(json, s.to_string(), json!({"params": params, "result": series_to_json(s)}));
}

fn path_class(a: &SumArgs) -> Result<PathClass> {
    Ok(match a.class {
        ClassArg::Unrestricted => PathClass::Unrestricted(Composition::with_len(parse_list(&a.lambda, "lambda")?, a.n)?),
        ClassArg::Classical => PathClass::Classical(parse_partition(&a.lambda, "lambda")?),
        ClassArg::Restricted => PathClass::Restricted {
            level: need(&a.level, "level")?,
            lambda: parse_partition(&a.lambda, "lambda")?,
        },
    })
}

fn sum_params(a: &SumArgs) -> Value {
    json!({"n": a.n, "kind": Kind::from(a.kind).name(), "mu": a.mu, "lambda": a.lambda, "level": a.level})
}

fn paths_enum(a: &SumArgs) -> Result<()> {
    let mu = parse_partition(&a.mu, "mu")?;
    let list = enumerate_paths(a.n, &mu, a.kind.into(), &path_class(a)?)?;
    let text: Vec<String> = list.iter().map(|(p, e)| format!("{p}  E={e}")).collect();
    let rows: Vec<Value> = list
        .iter()
        .map(|(p, e)| json!({"path": p.to_string(), "coords": p.components().iter().map(|b| b.coords().to_vec()).collect::<Vec<_>>(), "energy": e}))
        .collect();
    let mut text = text.join("\n");
    text.push_str(&format!("\n{} paths", list.len()));
    print_value(a.json, text, json!({"params": sum_params(a), "count": list.len(), "paths": rows}));
    Ok(())
}

fn onedsum_cmd(a: &SumArgs) -> Result<()> {
    let mu = parse_partition(&a.mu, "mu")?;
    let class = path_class(a)?;
    let p = if a.enumerate {
        onedsum_by_enumeration(a.n, &mu, a.kind.into(), &class)?
    } else {
        onedsum(a.n, &mu, a.kind.into(), &class)?
    };
    print_poly(a.json, &p, sum_params(a));
    Ok(())
}

fn hw_cmd(a: &HwArgs) -> Result<()> {
    let mu = parse_partition(&a.mu, "mu")?;
    let set = hw_set(a.n, a.l, a.r, &mu)?;
    let text: Vec<String> = set.iter().map(|e| format!("{}  E={}  {}", e.path, e.energy, e.weight)).collect();
    let rows: Vec<Value> = set
        .iter()
        .map(|e| json!({"path": e.path.to_string(), "energy": e.energy, "weight": e.weight.a, "weight_text": e.weight.to_string()}))
        .collect();
    print_value(a.json, text.join("\n"), json!({"params": {"n": a.n, "l": a.l, "r": a.r, "mu": a.mu}, "elements": rows}));
    Ok(())
}

fn energy_cmd(a: &EnergyArgs) -> Result<()> {
    let p = Path::parse(a.kind.into(), a.n, &a.path)?;
    let e = energy(&p)?;
    let terms = energy_terms(&p)?;
    let mut text = format!("E = {e}\nH(b_i ⊗ b_j^(i+1)), row j, column i:");
    for (j, row) in terms.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|h| format!("{h:>3}")).collect();
        text.push_str(&format!("\n  j={:<2}{}", j + 1, cells.join("")));
    }
    let mut value = json!({"path": p.to_string(), "energy": e, "h_table": terms});
    if a.lines {
        let (e2, dec) = energy_elines(&p)?;
        if e2 != e {
            bail!("line rule gives {e2}, pairwise sum gives {e}");
        }
        let mut lines = Vec::new();
        text.push_str("\nE-lines (column, row), from the start leftwards; * marks a winding join:");
        for line in &dec.lines {
            let mut s = String::new();
            for (k, &(col, row)) in line.dots.iter().enumerate() {
                if k > 0 {
                    s.push_str(if line.winding[k - 1] { " *-> " } else { " -> " });
                }
                s.push_str(&format!("({},{})", col + 1, row));
            }
            text.push_str(&format!("\n  {s}"));
            lines.push(json!({
                "dots": line.dots.iter().map(|&(c, r)| json!([c + 1, r])).collect::<Vec<_>>(),
                "winding": line.winding,
            }));
        }
        value["lines"] = json!(lines);
    }
    print_value(a.json, text, value);
    Ok(())
}

fn kostka_cmd(a: &KostkaArgs) -> Result<()> {
    let lam = parse_partition(&a.lambda, "lambda")?;
    let mu = parse_partition(&a.mu, "mu")?;
    let n = a.n.unwrap_or(lam.len().max(2));
    let p = match a.method {
        KostkaMethod::Charge => kostka_foulkes(&lam, &Composition::new(mu.parts().to_vec()))?,
        KostkaMethod::Kr => ff_kostka(n, &lam, &mu)?,
        KostkaMethod::Path => onedsum(n, &mu, Kind::Sym, &PathClass::Classical(lam.clone()))?,
    };
    print_poly(a.json, &p, json!({"lambda": a.lambda, "mu": a.mu, "n": n}));
    Ok(())
}

fn eval_cmd(a: &EvalArgs) -> Result<()> {
    let n = a.n;
    let part = |v: &Option<String>, flag: &str| -> Result<Partition> { parse_partition(&need(v, flag)?, flag) };
    let comp = |v: &Option<String>| -> Result<Composition> {
        Ok(Composition::with_len(parse_list(&need(v, "lambda")?, "lambda")?, n)?)
    };
    let p = match a.formula {
        Formula::Ffkk => ff_unrestricted_sym(n, &comp(&a.lambda)?, &part(&a.mu, "mu")?)?,
        Formula::Ffkkp => ff_unrestricted_antisym(n, &comp(&a.lambda)?, &part(&a.mu, "mu")?)?,
        Formula::Kr => ff_kostka(n, &part(&a.lambda, "lambda")?, &part(&a.mu, "mu")?)?,
        Formula::Dual => ff_kostka_dual(n, &part(&a.xi, "xi")?, &part(&a.eta, "eta")?)?,
        Formula::Fl => f_l(n, need(&a.l, "l")?, &part(&a.mu, "mu")?)?,
        Formula::Flp => f_l_prime(n, need(&a.l, "l")?, &part(&a.eta, "eta")?)?,
        Formula::Flrp => {
            let mu = match &a.mu {
                Some(s) => parse_partition(s, "mu")?,
                None => Partition::empty(),
            };
            let (p, stats) = f_lr_prime_with_stats(n, need(&a.l, "l")?, a.r, &part(&a.eta, "eta")?, &mu)?;
            if !a.json && stats.nonintegral_vacancies > 0 {
                eprintln!("note: {} configurations had a non-integral vacancy number", stats.nonintegral_vacancies);
            }
            p
        }
    };
    let params = json!({"n": n, "l": a.l, "r": a.r, "lambda": a.lambda, "mu": a.mu, "eta": a.eta, "xi": a.xi});
    print_poly(a.json, &p, params);
    Ok(())
}

fn parse_factors(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|f| {
            let (l, r) = f.split_once(':').ok_or_else(|| anyhow!("factor {f:?} must be l:r"))?;
            Ok((l.trim().parse()?, r.trim().parse()?))
        })
        .collect()
}

fn parse_datum(s: &str) -> Result<CartanDatum> {
    let v: Value = serde_json::from_str(s).context("datum is not valid JSON")?;
    let cartan: Vec<Vec<i64>> = v
        .get("cartan")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("datum needs a \"cartan\" matrix"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| anyhow!("cartan rows must be arrays"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| anyhow!("cartan entries must be integers")))
                .collect()
        })
        .collect::<Result<_>>()?;
    let t: Vec<usize> = v
        .get("symmetrizer")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("datum needs a \"symmetrizer\" array"))?
        .iter()
        .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| anyhow!("symmetrizer entries must be positive integers")))
        .collect::<Result<_>>()?;
    Ok(CartanDatum::new(cartan, t)?)
}

fn series_cmd(a: &SeriesArgs) -> Result<()> {
    let order = a.order;
    let s = match a.which {
        Which::String => {
            let n = need(&a.n, "n")?;
            let lam = Composition::with_len(parse_list(&a.lambda, "lambda")?, n)?;
            string_series_single(n, need(&a.l, "l")?, a.r, &parse_partition(&a.nu, "nu")?, &lam, order)?
        }
        Which::Tensor => {
            let n = need(&a.n, "n")?;
            let lam = Composition::with_len(parse_list(&a.lambda, "lambda")?, n)?;
            string_series_tensor(n, &parse_factors(&need(&a.parts, "parts")?)?, &lam, order)?
        }
        Which::Spinon => {
            let n = need(&a.n, "n")?;
            let lam = parse_partition(&a.lambda, "lambda")?;
            if a.r == 0 {
                spinon_branching_series(n, need(&a.l, "l")?, &lam, order)?
            } else {
                spinon_series_residue(n, need(&a.l, "l")?, a.r, &lam, order)?
            }
        }
        Which::Rsos => rsos_spinon_series(need(&a.n, "n")?, need(&a.l, "l")?, need(&a.t, "t")?, order)?,
        Which::General => {
            let datum = parse_datum(&need(&a.datum, "datum")?)?;
            let levels = parse_list(&need(&a.levels, "levels")?, "levels")?;
            let root: Vec<i64> = a
                .lambda
                .split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| x.trim().parse::<i64>().with_context(|| format!("bad root coordinate {x:?}")))
                .collect::<Result<_>>()?;
            let root = if root.is_empty() { vec![0; datum.rank()] } else { root };
            general_string_series(&datum, &levels, &root, order)?
        }
    };
    let params = json!({"n": a.n, "l": a.l, "r": a.r, "nu": a.nu, "lambda": a.lambda, "parts": a.parts, "t": a.t, "order": order});
    print_series(a.json, &s, params);
    Ok(())
}

fn limit_cmd(a: &LimitArgs) -> Result<()> {
    let cfg = LadderConfig { max_steps: a.steps };
    let st = match a.which {
        LimitWhich::Single => {
            let class = match a.class {
                ClassArg::Unrestricted => LimitClass::Unrestricted,
                ClassArg::Classical => LimitClass::Classical,
                ClassArg::Restricted => LimitClass::Restricted,
            };
            let lam = Composition::with_len(parse_list(&a.lambda, "lambda")?, a.n)?;
            stabilized_limit(a.n, need(&a.l, "l")?, a.r, &parse_partition(&a.nu, "nu")?, class, &lam, a.order, cfg)?
        }
        LimitWhich::Tensor => {
            let lam = Composition::with_len(parse_list(&a.lambda, "lambda")?, a.n)?;
            stabilized_tensor_limit(a.n, &parse_factors(&need(&a.parts, "parts")?)?, &lam, a.order, cfg)?
        }
        LimitWhich::Rsos => {
            let source = match a.source {
                RsosArg::Fermionic => RsosSource::Fermionic,
                RsosArg::Paths => RsosSource::Paths,
            };
            stabilized_rsos_limit(a.n, need(&a.l, "l")?, need(&a.t, "t")?, source, a.order, cfg)?
        }
    };
    let text = format!("{}\n(stable from rung {}; sizes {:?})", st.series, st.accepted_at, st.sizes);
    let value = json!({
        "result": series_to_json(&st.series),
        "accepted_at": st.accepted_at,
        "sizes": st.sizes,
    });
    print_value(a.json, text, value);
    Ok(())
}

fn verify_cmd(a: &VerifyArgs) -> Result<bool> {
    let mut b = Bounds::for_suite(&a.suite)?;
    macro_rules! set {
        ($($f:ident),*) => { $( if let Some(v) = a.$f { b.$f = v; } )* };
    }
    set!(max_n, max_mu, max_level, order, ladder_steps, samples, seed);
    if b.max_n < 2 {
        bail!("--max-n must be at least 2");
    }
    let report = run_suite(&a.suite, &b)?;
    let to_stdout = a.json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    if !to_stdout {
        for c in &report.checks {
            if a.verbose || c.status != affpaths_cli::Status::Pass || c.weight != affpaths_cli::Weight::Theorem {
                out!("{}", c.line());
            }
        }
        out!("{}", report.summary());
    }
    if let Some(path) = &a.json {
        let text = serde_json::to_string_pretty(&report.to_json())?;
        if to_stdout {
            out!("{text}");
        } else {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
        }
    }
    Ok(report.passed())
}
