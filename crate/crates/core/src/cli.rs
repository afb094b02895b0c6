//! The `spinq` command line.

use crate::kostka::{kostka_matrix, kostka_poly, spin_kostka, spin_kostka_matrix};
use crate::partitions::{double_partition, enumerate_desc, parse_partition, shifted_hooks, Kind, Partition};
use crate::repn::{char_table, seminormal_module, verify_intertwiners, verify_relations, Algebra, CharKind};
use crate::schurq::schur_q;
use crate::specialize::{fake_degree, spin_graded, DEFAULT_ORDER};
use crate::symfunc::Basis;
use crate::verify::{run_suite_sized, SUITES};
use crate::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;

#[derive(Parser, Debug)]
#[command(name = "spinq", version, about = "Schur Q-functions, spin Kostka polynomials and seminormal spin modules")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Truncation order for series output.
    #[arg(long, default_value_t = DEFAULT_ORDER, global = true)]
    pub order: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand Q_ξ in the m, h, e, p or s basis.
    Qexpand {
        /// Strict partition, e.g. 3,1.
        #[arg(long)]
        xi: String,
        #[arg(long, default_value = "m")]
        basis: String,
    },
    /// Kostka polynomials K_λμ(t): one entry, or the full matrix of degree n.
    Kostka(Entry),
    /// Spin Kostka polynomials K⁻_ξμ(t): one entry, or the matrix over strict ξ of degree n.
    Spinkostka(SpinEntry),
    /// Character table of S_n, or the spin characters ζ^ξ on odd classes.
    Chartable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        spin: bool,
    },
    /// Graded multiplicities of S^λ, or with --spin of the spin module of ξ.
    Fakedegree {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        spin: bool,
    },
    /// Build the seminormal module of ξ/ν and check its relations.
    Seminormal {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value = "")]
        inner: String,
        /// Use the affine algebra (x_i act by the seminormal form).
        #[arg(long)]
        affine: bool,
        /// `summary` runs the relation checks; `json` prints the generators.
        #[arg(long, value_enum, default_value_t = SeminormalOut::Summary)]
        out: SeminormalOut,
    },
    /// Shifted hooks of ξ and the double partition.
    Hooks {
        #[arg(long)]
        shape: String,
    },
    /// Run a verification suite.
    Verify {
        /// One of qfunctions, cauchy, spinkostka, kostka, specialize, seminormal,
        /// characters, sergeev, bijection, counting, all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Replaces the main size bound of the suite.
        #[arg(long)]
        n: Option<usize>,
        /// Print passing checks too.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Args, Debug)]
pub struct Entry {
    #[arg(long, conflicts_with = "n", requires = "mu")]
    pub lambda: Option<String>,
    #[arg(long, requires = "lambda")]
    pub mu: Option<String>,
    #[arg(long, required_unless_present = "lambda")]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SpinEntry {
    #[arg(long, conflicts_with = "n", requires = "mu")]
    pub xi: Option<String>,
    #[arg(long, requires = "xi")]
    pub mu: Option<String>,
    #[arg(long, required_unless_present = "xi")]
    pub n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeminormalOut {
    Summary,
    Json,
}

enum Failure {
    Usage(String),
    Verification(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidPartition(_) | Error::InvalidShape(_) | Error::InvalidWeight(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

/// A rectangular result with a header row.
struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn emit(&self, fmt: Format, out: Out) -> Result<(), Failure> {
        match fmt {
            Format::Text => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|j| self.rows.iter().chain([&self.header]).map(|r| r[j].chars().count()).max().unwrap_or(0))
                    .collect();
                for r in [&self.header].into_iter().chain(&self.rows) {
                    let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                    writeln!(out, "{}", cells.join("  ").trim_end())?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).map_err(|e| Failure::Runtime(e.to_string()))?;
                for r in &self.rows {
                    w.write_record(r).map_err(|e| Failure::Runtime(e.to_string()))?;
                }
                out.write_all(&w.into_inner().map_err(|e| Failure::Runtime(e.to_string()))?)?;
            }
            Format::Json => {
                let v = serde_json::json!({ "header": self.header, "rows": self.rows });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
            }
            Format::Latex => {
                writeln!(out, "\\begin{{tabular}}{{{}}}", "l".repeat(self.header.len()))?;
                writeln!(out, "{} \\\\ \\hline", self.header.iter().map(|c| latex(c)).collect::<Vec<_>>().join(" & "))?;
                for r in &self.rows {
                    writeln!(out, "{} \\\\", r.iter().map(|c| latex(c)).collect::<Vec<_>>().join(" & "))?;
                }
                writeln!(out, "\\end{{tabular}}")?;
            }
        }
        Ok(())
    }
}

/// Math-mode rendering of the plain text forms: braces around exponents, `*` dropped.
fn latex(s: &str) -> String {
    let mut o = String::from("$");
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '^' => {
                o.push_str("^{");
                if chars.peek() == Some(&'-') {
                    o.push(chars.next().unwrap());
                }
                while let Some(d) = chars.peek().copied().filter(|d| d.is_ascii_digit()) {
                    o.push(d);
                    chars.next();
                }
                o.push('}');
            }
            '*' => {}
            _ => o.push(c),
        }
    }
    o.push('$');
    o
}

fn partition(s: &str) -> Result<Partition, Failure> {
    Ok(parse_partition(s)?)
}

fn strict(s: &str) -> Result<Partition, Failure> {
    let p = partition(s)?;
    if !p.is_strict() {
        return Err(Failure::Usage(format!("{p} is not a strict partition")));
    }
    Ok(p)
}

fn value_line(fmt: Format, key: &str, v: String, out: Out) -> Result<(), Failure> {
    match fmt {
        Format::Text => writeln!(out, "{v}")?,
        _ => Table { header: vec![key.into()], rows: vec![vec![v]] }.emit(fmt, out)?,
    }
    Ok(())
}

fn matrix_table(rows: &[Partition], cols: &[Partition], corner: &str, f: impl Fn(&Partition, &Partition) -> String) -> Table {
    let mut header = vec![corner.to_string()];
    header.extend(cols.iter().map(|c| c.to_string()));
    let rows = rows
        .iter()
        .map(|r| {
            let mut row = vec![r.to_string()];
            row.extend(cols.iter().map(|c| f(r, c)));
            row
        })
        .collect();
    Table { header, rows }
}

fn execute(cli: &Cli, out: Out) -> Result<(), Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Qexpand { xi, basis } => {
            let xi = strict(xi)?;
            let f = schur_q(&xi)?.into_sym().convert(Basis::parse(basis)?);
            match fmt {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&f.to_json()).expect("serializable"))?,
                Format::Text => writeln!(out, "{f}")?,
                _ => Table {
                    header: vec![basis.clone(), "coefficient".into()],
                    rows: f.terms().rev().map(|(l, c)| vec![l.to_string(), c.to_string()]).collect(),
                }
                .emit(fmt, out)?,
            }
        }
        Command::Kostka(e) => match (&e.lambda, &e.mu, e.n) {
            (Some(l), Some(m), _) => {
                let (l, m) = (partition(l)?, partition(m)?);
                if l.size() != m.size() {
                    return Err(Failure::Usage(format!("{l} and {m} have different sizes")));
                }
                value_line(fmt, "K", kostka_poly(&l, m.parts()).to_string(), out)?
            }
            (_, _, Some(n)) => {
                let km = kostka_matrix(n);
                let parts = enumerate_desc(n, Kind::All);
                matrix_table(&parts, &parts, "lambda\\mu", |l, m| km.get(l, m).to_string()).emit(fmt, out)?
            }
            _ => return Err(Failure::Usage("give --lambda and --mu, or --n".into())),
        },
        Command::Spinkostka(e) => match (&e.xi, &e.mu, e.n) {
            (Some(x), Some(m), _) => {
                let (x, m) = (strict(x)?, partition(m)?);
                if x.size() != m.size() {
                    return Err(Failure::Usage(format!("{x} and {m} have different sizes")));
                }
                value_line(fmt, "K-", spin_kostka(&x, &m)?.to_string(), out)?
            }
            (_, _, Some(n)) => {
                let km = spin_kostka_matrix(n)?;
                let rows = enumerate_desc(n, Kind::Strict);
                let cols = enumerate_desc(n, Kind::All);
                matrix_table(&rows, &cols, "xi\\mu", |x, m| km[&(x.clone(), m.clone())].to_string()).emit(fmt, out)?
            }
            _ => return Err(Failure::Usage("give --xi and --mu, or --n".into())),
        },
        Command::Chartable { n, spin } => {
            let kind = if *spin { CharKind::Spin } else { CharKind::Symmetric };
            let table = char_table(*n, kind)?;
            let classes = enumerate_desc(*n, if *spin { Kind::Odd } else { Kind::All });
            let mut labels: Vec<Partition> = table.iter().map(|c| c.label.clone()).collect();
            labels.sort_by(|a, b| b.cmp(a));
            matrix_table(&labels, &classes, "irrep\\class", |l, a| {
                table.iter().find(|c| &c.label == l).map(|c| c.value(a).to_string()).unwrap_or_default()
            })
            .emit(fmt, out)?
        }
        Command::Fakedegree { shape, spin } => {
            let rows: Vec<(String, String)> = if *spin {
                let xi = strict(shape)?;
                spin_graded(&xi, cli.order)?.labelled().into_iter().map(|g| (g.label.name().to_string(), g.value.to_string())).collect()
            } else {
                let l = partition(shape)?;
                let (f, fu) = fake_degree(&l)?;
                vec![("f_lambda".into(), f.to_string()), ("f^lambda".into(), fu.to_string())]
            };
            match fmt {
                Format::Json if *spin => {
                    let xi = strict(shape)?;
                    let v: Vec<serde_json::Value> = spin_graded(&xi, cli.order)?.labelled().iter().map(|g| g.to_json()).collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
                }
                _ => Table { header: vec!["name".into(), "value".into()], rows: rows.into_iter().map(|(a, b)| vec![a, b]).collect() }
                    .emit(fmt, out)?,
            }
        }
        Command::Seminormal { shape, inner, affine, out: what } => {
            let (xi, nu) = (strict(shape)?, strict(inner)?);
            let alg = if *affine { Algebra::Affine } else { Algebra::Finite };
            if !*affine && !nu.is_empty() {
                return Err(Failure::Usage("skew shapes need --affine".into()));
            }
            let r = seminormal_module(&xi, &nu, alg)?;
            match what {
                SeminormalOut::Json => writeln!(out, "{}", serde_json::to_string(&r.to_json()).expect("serializable"))?,
                SeminormalOut::Summary => {
                    let mut rep = verify_relations(&r, Algebra::Affine);
                    if r.n >= 2 && *affine {
                        rep.merge(verify_intertwiners(&r));
                    }
                    writeln!(out, "module {} of rank {} and dimension {}", r.label, r.n, r.dim)?;
                    write!(out, "{rep}")?;
                    if !rep.passed() {
                        return Err(Failure::Verification(format!("relations fail on {}", r.label)));
                    }
                }
            }
        }
        Command::Hooks { shape } => {
            let xi = strict(shape)?;
            let hooks = shifted_hooks(&xi)?;
            let rows: Vec<Vec<String>> = hooks
                .iter()
                .enumerate()
                .map(|(i, r)| vec![(i + 1).to_string(), r.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(" ")])
                .collect();
            match fmt {
                Format::Text => {
                    writeln!(out, "double partition {}", double_partition(&xi)?)?;
                    for r in &rows {
                        writeln!(out, "{}", r[1])?;
                    }
                }
                _ => Table { header: vec!["row".into(), "hooks".into()], rows }.emit(fmt, out)?,
            }
        }
        Command::Verify { suite, n, verbose } => {
            if suite != "all" && !SUITES.contains(&suite.as_str()) {
                return Err(Failure::Usage(format!("unknown suite {suite}; expected one of {} or all", SUITES.join(", "))));
            }
            let rep = run_suite_sized(suite, *n)?;
            match fmt {
                Format::Text => {
                    for c in rep.checks.iter().filter(|c| *verbose || !c.passed) {
                        writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
                    }
                    let bad = rep.failures().count();
                    writeln!(out, "{}: {} checks, {bad} failed", rep.name, rep.checks.len())?;
                }
                _ => Table {
                    header: vec!["check".into(), "status".into(), "detail".into()],
                    rows: rep
                        .checks
                        .iter()
                        .map(|c| vec![c.name.clone(), if c.passed { "PASS" } else { "FAIL" }.into(), c.detail.clone()])
                        .collect(),
                }
                .emit(fmt, out)?,
            }
            if !rep.passed() {
                return Err(Failure::Verification(format!("suite {suite} failed")));
            }
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns 0 on success, 1 on a failed verification or computation, 2 on a usage error.
pub fn run<I, T>(args: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Verification(m)) | Err(Failure::Runtime(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

