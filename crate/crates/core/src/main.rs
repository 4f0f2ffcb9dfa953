use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use lc_core::arith::{fmt_rational, ParamValue};
use lc_core::engine::{self, Grid, Status, Suite, VerificationReport};
use lc_core::families::{self, FamilyId, ParamPoint};
use lc_core::identities;
use lc_core::{lc, Error, Poly};

#[derive(Parser, Debug)]
#[command(name = "lc", version, about = "Exact Laguerre-constellation polynomials and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Family label: L, C, M, bqL, qM, lqL, qL, qC, 0LB, SW
    #[arg(long, global = true)]
    family: Option<FamilyId>,
    /// Identity id, e.g. L.lownL
    #[arg(long, global = true)]
    identity: Option<String>,
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true)]
    nmax: Option<usize>,
    #[arg(long, global = true)]
    kmax: Option<usize>,
    /// Parameter value `sym=rational`, repeatable
    #[arg(long = "param", global = true)]
    params: Vec<ParamValue>,
    #[arg(long, global = true, default_value_t = 5)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Normalize so that p_n(c) = 1 at the recurrence-table root
    #[arg(long, global = true)]
    normalized: bool,
    /// Which root normalization (Meixner has two: 0 and 1)
    #[arg(long, global = true, default_value_t = 0)]
    root: usize,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Dump the family registry, the recurrence table rows and relation edges
    Families,
    /// Expand p_n for one family at given parameters
    Expand,
    /// Recurrence coefficients (alpha_n, beta_n, gamma_n)
    Recurrence,
    /// Check the constant-sum condition on the recurrence coefficients
    CheckLc,
    /// Verify one registry identity over a seeded grid
    Verify,
    /// Verify the whole registry, or one family's suite
    VerifyAll,
    /// Verify the exact relations between families
    Relations,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
    Latex,
}

/// Exit status of a command that ran to completion.
enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, outcome)) => {
            println!("{out}");
            match outcome {
                Outcome::Ok => ExitCode::SUCCESS,
                Outcome::Failed => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, Outcome), Error> {
    match cli.command {
        Command::Families => families_cmd(cli),
        Command::Expand => expand_cmd(cli),
        Command::Recurrence => recurrence_cmd(cli),
        Command::CheckLc => check_lc_cmd(cli),
        Command::Verify => verify_cmd(cli),
        Command::VerifyAll => verify_all_cmd(cli),
        Command::Relations => relations_cmd(cli),
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, Error> {
    v.clone()
        .ok_or_else(|| Error::InvalidParam(format!("--{flag} is required for this command")))
}

/// Parameters for `fam`, all required, none extra, validated against the pole set.
fn family_point(cli: &Cli, fam: FamilyId, n_max: usize) -> Result<ParamPoint, Error> {
    let mut th = ParamPoint::new();
    for p in &cli.params {
        if !fam.params().contains(&p.name) {
            return Err(Error::InvalidParam(format!("family {fam} has no parameter '{}'", p.name)));
        }
        th.set(p.name, p.value.clone());
    }
    for s in fam.params() {
        if !th.contains(*s) {
            return Err(Error::InvalidParam(format!("missing --param {s}=<rational> for family {fam}")));
        }
    }
    families::check_valid(fam, &th, n_max)?;
    Ok(th)
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

fn render_poly(p: &Poly, var: &str, format: Format) -> String {
    match format {
        Format::Json => pretty(p),
        Format::Text => p.to_text(var),
        Format::Latex => p.to_latex(var),
    }
}

fn families_cmd(cli: &Cli) -> Result<(String, Outcome), Error> {
    let fams: Vec<FamilyId> = match cli.family {
        Some(f) => vec![f],
        None => FamilyId::ALL.to_vec(),
    };
    let mut rows = Vec::new();
    for fam in fams {
        let table: Vec<Value> = (0..fam.root_count())
            .map(|r| {
                let [a, b, g, d] = families::table_formulas(fam, r);
                json!({"root": r, "alpha_n": a, "beta_n": b, "gamma_n": g, "d_n^2": d})
            })
            .collect();
        let mut row = json!({
            "id": fam.label(),
            "name": fam.name(),
            "params": fam.params().iter().map(|s| s.name()).collect::<Vec<_>>(),
            "variable": fam.variable(),
            "table1": table,
        });
        // φ, φ* depend on θ; render them only when every parameter is given.
        if fam.params().iter().all(|s| cli.params.iter().any(|p| p.name == *s)) {
            let th = family_point(cli, fam, 0)?;
            let show = |p: Option<Poly>| p.map(|p| p.to_strings());
            row["phi"] = json!(show(families::pearson_phi(fam, &th)?));
            row["phi_star"] = json!(show(families::pearson_phi_star(fam, &th)?));
        }
        rows.push(row);
    }
    let edges = families::relation_edges();
    let out = match cli.format {
        Format::Json => pretty(&json!({"families": rows, "edges": edges})),
        _ => {
            let mut s = String::new();
            for r in &rows {
                s += &format!("{:4} {:20} params={}\n", r["id"].as_str().unwrap_or(""), r["name"].as_str().unwrap_or(""), r["params"]);
            }
            for e in &edges {
                s += &format!("{} -> {} ({:?})\n", e.from, e.to, e.kind);
            }
            s.trim_end().to_string()
        }
    };
    Ok((out, Outcome::Ok))
}

fn expand_cmd(cli: &Cli) -> Result<(String, Outcome), Error> {
    let fam = need(&cli.family, "family")?;
    let n = need(&cli.n, "n")?;
    let th = family_point(cli, fam, n + 1)?;
    let p = families::family_poly_root(fam, n, &th, cli.normalized, cli.root)?;
    Ok((render_poly(&p, fam.variable(), cli.format), Outcome::Ok))
}

fn recurrence_cmd(cli: &Cli) -> Result<(String, Outcome), Error> {
    let fam = need(&cli.family, "family")?;
    let n = need(&cli.n, "n")?;
    let th = family_point(cli, fam, n + 1)?;
    let (a, b, g) = families::recurrence_coeffs_root(fam, cli.root, n, &th)?;
    let out = match cli.format {
        Format::Json => serde_json::to_string(&json!({
            "alpha": fmt_rational(&a),
            "beta": fmt_rational(&b),
            "gamma": fmt_rational(&g),
        }))
        .expect("json"),
        Format::Text => format!("alpha = {}, beta = {}, gamma = {}", fmt_rational(&a), fmt_rational(&b), fmt_rational(&g)),
        Format::Latex => {
            let l = |r| Poly::constant(r).to_latex("x");
            format!("\\alpha_{{{n}}} = {}, \\quad \\beta_{{{n}}} = {}, \\quad \\gamma_{{{n}}} = {}", l(a), l(b), l(g))
        }
    };
    Ok((out, Outcome::Ok))
}

fn check_lc_cmd(cli: &Cli) -> Result<(String, Outcome), Error> {
    let fam = need(&cli.family, "family")?;
    let n_max = cli.nmax.unwrap_or(20);
    let th = family_point(cli, fam, n_max + 2)?;
    let rep = lc::check_lc_membership(fam, cli.root, &th, n_max)?;
    let outcome = if rep.pass { Outcome::Ok } else { Outcome::Failed };
    let out = match cli.format {
        Format::Json => pretty(&rep),
        _ => format!(
            "{} {}: alpha_n + beta_n + gamma_n = {} for n <= {}{}",
            if rep.pass { "PASS" } else { "FAIL" },
            rep.family,
            rep.constant,
            n_max,
            rep.root.as_ref().map(|r| format!(", root of phi = {r}")).unwrap_or_default(),
        ),
    };
    Ok((out, outcome))
}

fn grid(cli: &Cli, default_n: usize) -> Grid {
    let d = Grid::default();
    Grid {
        n_max: cli.nmax.or(cli.n).unwrap_or(default_n),
        k_max: cli.kmax.unwrap_or(d.k_max),
        samples: cli.samples,
        seed: cli.seed,
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Quarantined => "QUARANTINED",
    }
}

fn report_line(r: &VerificationReport) -> String {
    let mut s = format!("{:11} {:22} checked={}", status_word(r.status), r.identity, r.checked);
    if !r.skipped.is_empty() {
        s += &format!(" skipped={}", r.skipped.len());
    }
    if let Some(f) = r.failures.first().or(r.erratum.as_ref().and_then(|e| e.first_failure.as_ref())) {
        let theta: Vec<String> = f.theta.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s += &format!("  first failure n={} k={} {}", f.n, f.k, theta.join(","));
    }
    s
}

fn reports_out(reports: &[VerificationReport], cli: &Cli) -> (String, Outcome) {
    let summary = engine::Summary::of(reports);
    let outcome = if summary.ok() { Outcome::Ok } else { Outcome::Failed };
    let out = match cli.format {
        Format::Json => pretty(&json!({"summary": summary, "reports": reports})),
        _ => {
            let mut lines: Vec<String> = reports.iter().map(report_line).collect();
            lines.push(format!(
                "{} identities: {} pass, {} quarantined, {} fail",
                summary.total,
                summary.passed,
                summary.quarantined.len(),
                summary.failed.len()
            ));
            lines.join("\n")
        }
    };
    (out, outcome)
}

fn verify_cmd(cli: &Cli) -> Result<(String, Outcome), Error> {
    let id = need(&cli.identity, "identity")?;
    let ident = identities::find(&id)?;
    let rep = engine::verify_identity(ident, &grid(cli, 12));
    let outcome = if rep.status == Status::Fail { Outcome::Failed } else { Outcome::Ok };
    let out = match cli.format {
        Format::Json => pretty(&rep),
        _ => report_line(&rep),
    };
    Ok((out, outcome))
}

fn verify_all_cmd(cli: &Cli) -> Result<(String, Outcome), Error> {
    let suite = cli.family.map(Suite::Family).unwrap_or(Suite::All);
    let reports = engine::verify_all(identities::registry(), suite, &grid(cli, 12));
    Ok(reports_out(&reports, cli))
}

fn relations_cmd(cli: &Cli) -> Result<(String, Outcome), Error> {
    let g = grid(cli, 8);
    let reports: Vec<VerificationReport> = families::Relation::ALL
        .iter()
        .map(|r| identities::find(r.id()).map(|i| engine::verify_identity(i, &g)))
        .collect::<Result<_, _>>()?;
    Ok(reports_out(&reports, cli))
}
