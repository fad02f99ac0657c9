//! `picard3`: automorphism reports, Salem data, congruence data and seeded self-checks.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 hypotheses not met, determinant not
//! `±1`, or a failed verification.

mod verify;

use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use picard3::lattice::{form_orthogonal_group, Lattice, DEFAULT_FORM_CAP};
use picard3::modular::ModularElement;
use picard3::report::{analyze_picard, congruence_report, salem_poly, DEFAULT_SEARCH_BOUND};
use picard3::IntMatrix;

#[derive(Parser, Debug)]
#[command(name = "picard3", version, about = "Automorphism groups of rank-3 Picard lattices, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Automorphism-group report for U(k) ⊕ ⟨2l⟩ or M_n = U(n) ⊕ ⟨−2n⟩.
    Analyze(AnalyzeArgs),
    /// Seeded property suites over random Gram matrices and units.
    Verify(VerifyArgs),
    /// Salem factorization of a 2×2 matrix of determinant ±1.
    Salem(SalemArgs),
    /// Congruence data of G_n.
    Congruence(CongruenceArgs),
    /// Signature and discriminant data of a Gram matrix.
    Lattice(LatticeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Shorthand for k = n, l = −n.
    #[arg(long, conflicts_with_all = ["k", "l"], allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long, requires = "l", allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long, requires = "k", allow_negative_numbers = true)]
    l: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Entry bound for unit and torsion searches.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND, allow_negative_numbers = true)]
    bound: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Clifford,
    Exterior,
    Theorem,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 20)]
    trials: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bound on |a|,…,|u| for random Gram parameters.
    #[arg(long, default_value_t = 5)]
    gram_bound: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct SalemArgs {
    /// Entries a,b,c,d of [[a,b],[c,d]].
    #[arg(long, value_delimiter = ',', num_args = 1, required = true, allow_hyphen_values = true)]
    matrix: Vec<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct CongruenceArgs {
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND, allow_negative_numbers = true)]
    bound: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct LatticeArgs {
    /// Rows separated by ';', entries by ',', e.g. "0,0,2;0,-4,0;2,0,0".
    #[arg(long, allow_hyphen_values = true)]
    gram: String,
    /// Largest discriminant group enumerated for O(q).
    #[arg(long, default_value_t = DEFAULT_FORM_CAP)]
    cap: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// A failure with its exit code.
enum Failure {
    Usage(anyhow::Error),
    Domain(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

type Outcome = Result<ExitCode, Failure>;

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        Style { color: std::env::var_os("PICARD3_NO_COLOR").is_none() && std::io::stdout().is_terminal() }
    }

    fn paint(&self, s: &str, code: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    fn verdict(&self, ok: bool) -> String {
        if ok {
            self.paint("PASS", "32")
        } else {
            self.paint("FAIL", "31")
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let style = Style::detect();
    let outcome = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(a) => cmd_verify(a, &style),
        Command::Salem(a) => cmd_salem(a),
        Command::Congruence(a) => cmd_congruence(a),
        Command::Lattice(a) => cmd_lattice(a),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout; a closed pipe ends output quietly.
fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> anyhow::Result<()> {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(value)? + "\n",
        Format::Text => text(),
    };
    match std::io::stdout().lock().write_all(body.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn positive_bound(bound: i64) -> anyhow::Result<i64> {
    if bound < 1 {
        bail!("--bound must be positive, got {bound}");
    }
    Ok(bound)
}

fn cmd_analyze(a: AnalyzeArgs) -> Outcome {
    let (k, l) = match (a.n, a.k, a.l) {
        (Some(n), None, None) if n >= 1 => (n, -n),
        (Some(n), None, None) => return Err(anyhow!("--n must be positive, got {n}").into()),
        (None, Some(k), Some(l)) => (k, l),
        _ => return Err(anyhow!("give either --n or both --k and --l").into()),
    };
    if k == 0 || l == 0 {
        return Err(anyhow!("k = {k}, l = {l}; both must be nonzero").into());
    }
    let bound = positive_bound(a.bound)?;
    let report = analyze_picard(k, l, bound).context("analysis failed")?;
    emit(a.format, &report, || report.to_text())?;
    Ok(if report.hypotheses_met { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn cmd_salem(a: SalemArgs) -> Outcome {
    let [p, q, r, s] = <[i64; 4]>::try_from(a.matrix.as_slice())
        .map_err(|_| anyhow!("--matrix takes exactly four entries a,b,c,d, got {}", a.matrix.len()))?;
    let alpha = ModularElement::from_i64(p, q, r, s).map_err(|e| Failure::Domain(e.into()))?;
    let datum = salem_poly(&alpha);
    emit(a.format, &datum, || format!("{datum}\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_congruence(a: CongruenceArgs) -> Outcome {
    if a.n < 1 {
        return Err(anyhow!("--n must be positive, got {}", a.n).into());
    }
    let report = congruence_report(a.n, positive_bound(a.bound)?).context("congruence analysis failed")?;
    emit(a.format, &report, || report.to_text())?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct LatticeSummary {
    signature: [usize; 2],
    det: String,
    invariant_factors: Vec<String>,
    two_elementary: bool,
    /// `|O(q)|`, absent when the discriminant group exceeds the cap.
    form_group_order: Option<usize>,
    cap: u64,
}

fn parse_gram(s: &str) -> anyhow::Result<IntMatrix> {
    let rows: Vec<Vec<picard3::Int>> = s
        .split(';')
        .map(|r| r.split(',').map(|x| x.trim().parse().with_context(|| format!("bad entry {x:?}"))).collect())
        .collect::<anyhow::Result<_>>()?;
    if rows.iter().any(|r| r.len() != rows.len()) {
        bail!("Gram matrix must be square");
    }
    Ok(IntMatrix::from_rows(&rows))
}

fn cmd_lattice(a: LatticeArgs) -> Outcome {
    let lat = Lattice::new(parse_gram(&a.gram)?).map_err(anyhow::Error::from)?;
    let (p, m) = lat.signature();
    let group = lat.discriminant_group();
    let order = form_orthogonal_group(&lat.discriminant_form(), a.cap).ok().map(|g| g.len());
    let summary = LatticeSummary {
        signature: [p, m],
        det: lat.disc().to_string(),
        invariant_factors: group.invariant_factors.iter().map(ToString::to_string).collect(),
        two_elementary: group.is_two_elementary(),
        form_group_order: order,
        cap: a.cap,
    };
    emit(a.format, &summary, || {
        let mut s = format!("signature ({p},{m})\ndet {}\n", summary.det);
        s += &format!("discriminant group invariants [{}]\n", summary.invariant_factors.join(", "));
        s += &format!("2-elementary: {}\n", if summary.two_elementary { "yes" } else { "no" });
        match order {
            Some(o) => s += &format!("|O(q)| = {o}\n"),
            None => s += &format!("|O(q)| not enumerated (discriminant group above cap {})\n", a.cap),
        }
        s
    })?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs, style: &Style) -> Outcome {
    if a.gram_bound < 1 {
        return Err(anyhow!("--gram-bound must be positive, got {}", a.gram_bound).into());
    }
    let results = verify::run(a.suite, a.trials, a.seed, a.gram_bound);
    let all_ok = results.iter().all(|r| r.failed == 0);
    emit(a.format, &results, || {
        let mut s = format!("seed {} trials {} gram-bound {}\n", a.seed, a.trials, a.gram_bound);
        for r in &results {
            s += &format!("{} {}: {} passed, {} failed\n", style.verdict(r.failed == 0), r.suite, r.passed, r.failed);
            for f in &r.failures {
                s += &format!("  {f}\n");
            }
        }
        s
    })?;
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}
