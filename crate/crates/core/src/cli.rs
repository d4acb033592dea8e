//! Command-line front end: `spectrum`, `evolve`, `certify`, `scan`,
//! `compare-classical` and `table`.
//!
//! Exit codes: 0 on success, 2 for invalid parameters, 3 for I/O failures.
//! Times accept plain reals or rational multiples of pi such as `3pi/4`.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cwalk::{discrete_step, two_state_ct};
use crate::graphs::{
    balanced_multipartite, cayley_symmetric, complete_graph, cycle_graph, hypercube_graph, Family,
    Graph,
};
use crate::mixing::{
    certify_complete, certify_multipartite, default_step, default_window, scan_mixing,
    tv_to_uniform, MixingReport, Verdict, CERTIFY_EPS, SCAN_EPS,
};
use crate::qwalk::{spectral_route, Walk};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qwalk", version, about = "Continuous-time quantum walks on regular graphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of A/d with multiplicities
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Probability time series as CSV
    Evolve {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        time: TimeArgs,
        /// Start vertex
        #[arg(long, default_value_t = 0)]
        start: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Closed-form mixing certificate (complete and multipartite graphs)
    Certify {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Numeric search for a uniform-mixing time
    Scan {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        time: TimeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classical walks next to the quantum walk
    CompareClassical {
        #[command(flatten)]
        graph: GraphArgs,
        /// Discrete steps for the simple and lazy walks
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// Time for the continuous-time chain and the quantum walk
        #[arg(long, value_parser = parse_time, default_value = "pi/4")]
        time: f64,
        /// Rate out of state 0 of the two-state chain (K_2 only)
        #[arg(long)]
        alpha: Option<f64>,
        /// Rate out of state 1 of the two-state chain (K_2 only)
        #[arg(long)]
        beta: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Mixing verdicts for K_n (n <= 10) and K_{a x b} (ab <= 12)
    Table {
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphArgs {
    /// Complete graph K_N
    #[arg(long, value_name = "N")]
    pub complete: Option<usize>,
    /// Balanced complete multipartite graph with A blocks of B vertices
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub multipartite: Option<Vec<usize>>,
    /// Cycle C_N
    #[arg(long, value_name = "N")]
    pub cycle: Option<usize>,
    /// Transposition Cayley graph of S_N
    #[arg(long = "cayley-sym", value_name = "N")]
    pub cayley_sym: Option<usize>,
    /// Hypercube Q_D
    #[arg(long, value_name = "D")]
    pub hypercube: Option<usize>,
    /// Edge-list file (`n d family` header, then `u v` lines)
    #[arg(long, value_name = "PATH")]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TimeArgs {
    /// A single time
    #[arg(long, value_parser = parse_time, conflicts_with = "window")]
    pub time: Option<f64>,
    /// Time window [0, T]
    #[arg(long, value_parser = parse_time)]
    pub window: Option<f64>,
    /// Grid step
    #[arg(long, value_parser = parse_time)]
    pub step: Option<f64>,
    /// TV tolerance for declaring uniformity
    #[arg(long)]
    pub eps: Option<f64>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, PartialEq)]
pub enum CliError {
    Invalid(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid parameters: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `1.25`, `pi`, `-pi/2`, `3pi/4` or `3*pi/4`.
pub fn parse_time(s: &str) -> std::result::Result<f64, String> {
    let s = s.trim();
    let bad = || format!("cannot parse time `{s}` (use a real or a form like 3pi/4)");
    let Some(pos) = s.find("pi") else {
        return s.parse::<f64>().map_err(|_| bad()).and_then(|x| {
            if x.is_finite() {
                Ok(x)
            } else {
                Err(bad())
            }
        });
    };
    let coeff = s[..pos].trim().trim_end_matches('*').trim();
    let rest = s[pos + 2..].trim();
    let numerator: i64 = match coeff {
        "" | "+" => 1,
        "-" => -1,
        c => c.parse().map_err(|_| bad())?,
    };
    let denominator: i64 = if rest.is_empty() {
        1
    } else {
        let d = rest.strip_prefix('/').ok_or_else(bad)?.trim();
        d.parse().map_err(|_| bad())?
    };
    if denominator <= 0 {
        return Err(bad());
    }
    Ok(numerator as f64 * PI / denominator as f64)
}

/// 17 significant digits, enough to round-trip any binary64.
pub fn fmt_full(x: f64) -> String {
    format!("{x:.16e}")
}

/// Short form of `t / pi` when it is a small rational, e.g. `3pi/4`.
pub fn pi_fraction(t: f64) -> Option<String> {
    let r = t / PI;
    for den in 1..=64i64 {
        let num = (r * den as f64).round();
        if (num / den as f64 - r).abs() < 1e-12 {
            let num = num as i64;
            let head = match num {
                0 => return Some("0".into()),
                1 => "pi".to_string(),
                -1 => "-pi".to_string(),
                k => format!("{k}pi"),
            };
            return Some(if den == 1 { head } else { format!("{head}/{den}") });
        }
    }
    None
}

fn fmt_short(x: f64) -> String {
    let x = if x.abs() < 5e-13 { 0.0 } else { x };
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn fmt_time(t: f64) -> String {
    match pi_fraction(t) {
        Some(p) if p != "0" => format!("{} ({p})", fmt_short(t)),
        _ => fmt_short(t),
    }
}

fn build_graph(args: &GraphArgs) -> CliResult<Graph> {
    let g = if let Some(n) = args.complete {
        complete_graph(n)?
    } else if let Some(ab) = &args.multipartite {
        balanced_multipartite(ab[0], ab[1])?
    } else if let Some(n) = args.cycle {
        cycle_graph(n)?
    } else if let Some(n) = args.cayley_sym {
        cayley_symmetric(n)?
    } else if let Some(d) = args.hypercube {
        hypercube_graph(d)?
    } else if let Some(path) = &args.edges {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Graph::from_edge_list(&text)?
    } else {
        return Err(CliError::Invalid("no graph given".into()));
    };
    Ok(g)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct SpectrumEntry {
    value: f64,
    multiplicity: usize,
}

#[derive(Serialize)]
struct SpectrumOutput {
    graph: Family,
    route: &'static str,
    eigenvalues: Vec<SpectrumEntry>,
}

fn cmd_spectrum(graph: &GraphArgs, output: &OutputArgs) -> CliResult<String> {
    let g = build_graph(graph)?;
    let (decomp, route) = spectral_route(&g)?;
    let mut groups: Vec<SpectrumEntry> = Vec::new();
    for &v in decomp.eigenvalues().iter().rev() {
        match groups.last_mut() {
            Some(last) if (last.value - v).abs() < 1e-9 => last.multiplicity += 1,
            _ => groups.push(SpectrumEntry {
                value: v,
                multiplicity: 1,
            }),
        }
    }
    let out = SpectrumOutput {
        graph: g.family(),
        route: route.as_str(),
        eigenvalues: groups,
    };
    Ok(match output.format.unwrap_or(Format::Table) {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut s = String::from("eigenvalue,multiplicity\n");
            for e in &out.eigenvalues {
                let _ = writeln!(s, "{},{}", fmt_full(e.value), e.multiplicity);
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "graph {} ({} vertices, degree {}), route {}\n",
                g.family().label(),
                g.n(),
                g.degree(),
                out.route
            );
            let _ = writeln!(s, "{:>16}  {:>12}", "eigenvalue", "multiplicity");
            for e in &out.eigenvalues {
                let _ = writeln!(s, "{:>16}  {:>12}", fmt_short(e.value), e.multiplicity);
            }
            s
        }
    })
}

fn time_grid(time: &TimeArgs, default: Option<f64>) -> CliResult<Vec<f64>> {
    if let Some(t) = time.time {
        return Ok(vec![t]);
    }
    let window = time
        .window
        .or(default)
        .ok_or_else(|| CliError::Invalid("give --time or --window".into()))?;
    if window <= 0.0 {
        return Err(CliError::Invalid(format!("window must be positive, got {window}")));
    }
    let step = time.step.unwrap_or_else(|| default_step(window));
    if !(step > 0.0 && step <= window) {
        return Err(CliError::Invalid(format!("step must lie in (0, window], got {step}")));
    }
    let intervals = (window / step + 1e-9).floor() as usize;
    if intervals >= crate::mixing::MAX_GRID_POINTS {
        return Err(CliError::Invalid("too many grid points".into()));
    }
    Ok((0..=intervals).map(|i| i as f64 * step).collect())
}

fn cmd_evolve(
    graph: &GraphArgs,
    time: &TimeArgs,
    start: usize,
    output: &OutputArgs,
) -> CliResult<String> {
    if matches!(output.format, Some(f) if f != Format::Csv) {
        return Err(CliError::Invalid("evolve writes CSV only".into()));
    }
    let g = build_graph(graph)?;
    let walk = Walk::new(&g, start)?;
    let times = time_grid(time, None)?;
    let mut s = String::from("t");
    for j in 0..g.n() {
        let _ = write!(s, ",P_{j}");
    }
    s.push_str(",tv\n");
    for t in times {
        let p = walk.probabilities(t);
        s.push_str(&fmt_full(t));
        for x in &p {
            s.push(',');
            s.push_str(&fmt_full(*x));
        }
        let _ = writeln!(s, ",{}", fmt_full(tv_to_uniform(&p)));
    }
    Ok(s)
}

#[derive(Serialize)]
struct CertifyOutput<'a> {
    report: &'a MixingReport,
    numeric_cross_check: bool,
}

fn numeric_cross_check(g: &Graph, report: &MixingReport) -> CliResult<bool> {
    let window = report.scan_window[1];
    let scan = scan_mixing(g, window, default_step(window), CERTIFY_EPS)?;
    Ok(match report.verdict {
        Verdict::Mixes => {
            scan.verdict == Verdict::Mixes
                && report
                    .witness_times
                    .iter()
                    .all(|w| scan.witness_times.iter().any(|s| (s - w).abs() < 1e-6))
        }
        _ => scan.verdict != Verdict::Mixes && scan.min_distance >= report.min_distance - 1e-6,
    })
}

fn report_table(report: &MixingReport) -> String {
    let mut s = format!("graph     {}\n", report.graph.label());
    let _ = writeln!(s, "verdict   {}", report.verdict.as_str());
    let _ = writeln!(
        s,
        "route     {}",
        match report.route {
            crate::mixing::CertificationRoute::ClosedForm => "closed-form",
            crate::mixing::CertificationRoute::Numeric => "numeric",
        }
    );
    if !report.witness_times.is_empty() {
        let w: Vec<String> = report.witness_times.iter().map(|&t| fmt_time(t)).collect();
        let _ = writeln!(s, "witness   {}", w.join(", "));
    }
    if let Some(d) = report.deficit {
        let _ = writeln!(s, "deficit   {}", fmt_short(d));
    }
    let _ = writeln!(s, "min TV    {}", fmt_short(report.min_distance));
    let _ = writeln!(
        s,
        "window    [0, {}]",
        fmt_time(report.scan_window[1])
    );
    for note in &report.notes {
        let _ = writeln!(s, "note      {note}");
    }
    s
}

fn cmd_certify(graph: &GraphArgs, output: &OutputArgs) -> CliResult<String> {
    let g = build_graph(graph)?;
    let report = match g.family() {
        Family::Complete { n } => certify_complete(n)?,
        Family::Multipartite { a, b } => certify_multipartite(a, b)?,
        other => {
            return Err(CliError::Invalid(format!(
                "no closed-form certificate for {}; use `qwalk scan`",
                other.label()
            )))
        }
    };
    let checked = numeric_cross_check(&g, &report)?;
    Ok(match output.format.unwrap_or(Format::Table) {
        Format::Json => to_json(&CertifyOutput {
            report: &report,
            numeric_cross_check: checked,
        }),
        Format::Csv => return Err(CliError::Invalid("certify writes json or table".into())),
        Format::Table => {
            let mut s = report_table(&report);
            let _ = writeln!(s, "numeric cross-check {}", if checked { "agrees" } else { "DISAGREES" });
            s
        }
    })
}

fn cmd_scan(graph: &GraphArgs, time: &TimeArgs, output: &OutputArgs) -> CliResult<String> {
    let g = build_graph(graph)?;
    if time.time.is_some() {
        return Err(CliError::Invalid("scan takes --window, not --time".into()));
    }
    let window = time.window.unwrap_or_else(|| default_window(&g));
    let step = time.step.unwrap_or_else(|| default_step(window));
    let eps = time.eps.unwrap_or(SCAN_EPS);
    let report = scan_mixing(&g, window, step, eps)?;
    Ok(match output.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Table => report_table(&report),
        Format::Csv => return Err(CliError::Invalid("scan writes json or table".into())),
    })
}

fn cmd_compare_classical(
    graph: &GraphArgs,
    steps: usize,
    time: f64,
    alpha: Option<f64>,
    beta: Option<f64>,
    output: &OutputArgs,
) -> CliResult<String> {
    let g = build_graph(graph)?;
    let n = g.n();
    let rates_given = alpha.is_some() || beta.is_some();
    if n != 2 && rates_given {
        return Err(CliError::Invalid(
            "the continuous-time classical chain is only defined for K_2".into(),
        ));
    }
    let mut point = vec![0.0; n];
    point[0] = 1.0;
    let mut rows: Vec<(String, Vec<f64>)> = Vec::new();
    for (label, lazy) in [("simple-discrete", false), ("lazy-discrete", true)] {
        let mut dist = point.clone();
        for _ in 0..steps {
            dist = discrete_step(&g, &dist, lazy)?;
        }
        rows.push((format!("{label} (k={steps})"), dist));
    }
    if n == 2 {
        let (a, b) = (alpha.unwrap_or(1.0), beta.unwrap_or(1.0));
        let p = two_state_ct(a, b, time)?;
        rows.push((
            format!("continuous-classical (alpha={a}, beta={b}, t={})", fmt_short(time)),
            vec![p.get(0, 0), p.get(1, 0)],
        ));
    }
    let walk = Walk::new(&g, 0)?;
    rows.push((format!("quantum (t={})", fmt_short(time)), walk.probabilities(time)));

    Ok(match output.format.unwrap_or(Format::Table) {
        Format::Table => {
            let width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(6);
            let mut s = format!("{:<width$}", "method");
            for j in 0..n {
                let _ = write!(s, "  {:>14}", format!("P_{j}"));
            }
            s.push('\n');
            for (label, dist) in &rows {
                let _ = write!(s, "{label:<width$}");
                for x in dist {
                    let _ = write!(s, "  {:>14}", fmt_short(*x));
                }
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("method");
            for j in 0..n {
                let _ = write!(s, ",P_{j}");
            }
            s.push('\n');
            for (label, dist) in &rows {
                s.push_str(&label.replace(',', ";"));
                for x in dist {
                    let _ = write!(s, ",{}", fmt_full(*x));
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                method: &'a str,
                probabilities: &'a [f64],
            }
            let out: Vec<Row> = rows
                .iter()
                .map(|(l, d)| Row {
                    method: l,
                    probabilities: d,
                })
                .collect();
            to_json(&out)
        }
    })
}

/// The certification table: `K_2..K_10`, then `K_{a x b}` with `a, b >= 2` and `ab <= 12`.
pub fn headline_reports() -> Vec<MixingReport> {
    let mut reports: Vec<MixingReport> = (2..=10)
        .map(|n| certify_complete(n).expect("n >= 2"))
        .collect();
    for a in 2..=6 {
        for b in 2..=12 / a {
            reports.push(certify_multipartite(a, b).expect("a >= 2"));
        }
    }
    reports
}

fn cmd_table(output: &OutputArgs) -> CliResult<String> {
    let reports = headline_reports();
    Ok(match output.format.unwrap_or(Format::Table) {
        Format::Json => to_json(&reports),
        Format::Csv => {
            let mut s = String::from("graph,vertices,verdict,witness_time,deficit\n");
            for r in &reports {
                let n = r.graph.build().map(|g| g.n()).unwrap_or(0);
                let w = r.witness_times.first().map(|&t| fmt_full(t)).unwrap_or_default();
                let d = r.deficit.map(fmt_full).unwrap_or_default();
                let _ = writeln!(s, "{},{n},{},{w},{d}", r.graph, r.verdict.as_str());
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "{:<10} {:>8}  {:<24} {}\n",
                "graph", "vertices", "verdict", "witness time / deficit"
            );
            for r in &reports {
                let n = r.graph.build().map(|g| g.n()).unwrap_or(0);
                let detail = match (r.witness_times.first(), r.deficit) {
                    (Some(&t), _) => format!("t = {}", fmt_time(t)),
                    (None, Some(d)) => format!("deficit {}", fmt_short(d)),
                    _ => String::new(),
                };
                let _ = writeln!(
                    s,
                    "{:<10} {:>8}  {:<24} {}",
                    r.graph.label(),
                    n,
                    r.verdict.as_str(),
                    detail
                );
            }
            s
        }
    })
}

fn output_of(command: &Command) -> &OutputArgs {
    match command {
        Command::Spectrum { output, .. }
        | Command::Evolve { output, .. }
        | Command::Certify { output, .. }
        | Command::Scan { output, .. }
        | Command::CompareClassical { output, .. }
        | Command::Table { output } => output,
    }
}

/// Runs one command and returns its rendered output.
pub fn execute(config: &RunConfig) -> CliResult<String> {
    match &config.command {
        Command::Spectrum { graph, output } => cmd_spectrum(graph, output),
        Command::Evolve {
            graph,
            time,
            start,
            output,
        } => cmd_evolve(graph, time, *start, output),
        Command::Certify { graph, output } => cmd_certify(graph, output),
        Command::Scan {
            graph,
            time,
            output,
        } => cmd_scan(graph, time, output),
        Command::CompareClassical {
            graph,
            steps,
            time,
            alpha,
            beta,
            output,
        } => cmd_compare_classical(graph, *steps, *time, *alpha, *beta, output),
        Command::Table { output } => cmd_table(output),
    }
}

/// Parses `args`, runs the command, writes its output and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let result = execute(&config).and_then(|text| match &output_of(&config.command).out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn time_forms() {
        assert_eq!(parse_time("0.5").unwrap(), 0.5);
        assert_eq!(parse_time("pi").unwrap(), PI);
        assert_eq!(parse_time("3pi/4").unwrap(), 3.0 * PI / 4.0);
        assert_eq!(parse_time("3*pi/4").unwrap(), 3.0 * PI / 4.0);
        assert_eq!(parse_time("-pi/2").unwrap(), -PI / 2.0);
        assert_eq!(parse_time("2pi").unwrap(), 2.0 * PI);
        assert!(parse_time("pi/0").is_err());
        assert!(parse_time("three").is_err());
        assert!(parse_time("pi/x").is_err());
        assert!(parse_time("inf").is_err());
    }

    #[test]
    fn pi_fractions() {
        assert_eq!(pi_fraction(PI / 4.0).as_deref(), Some("pi/4"));
        assert_eq!(pi_fraction(4.0 * PI / 9.0).as_deref(), Some("4pi/9"));
        assert_eq!(pi_fraction(PI).as_deref(), Some("pi"));
        assert_eq!(pi_fraction(1.0), None);
    }

    #[test]
    fn full_precision_round_trips() {
        for x in [PI / 4.0, 1.0 / 3.0, 1e-300, -2.5e17] {
            assert_eq!(fmt_full(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn headline_has_four_mixing_rows() {
        let mixing: Vec<Family> = headline_reports()
            .into_iter()
            .filter(|r| r.verdict == Verdict::Mixes)
            .map(|r| r.graph)
            .collect();
        assert_eq!(
            mixing,
            vec![
                Family::Complete { n: 2 },
                Family::Complete { n: 3 },
                Family::Complete { n: 4 },
                Family::Multipartite { a: 2, b: 2 },
            ]
        );
    }
}
