//! Command-line front end.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use fsys_algebra::{embedding, ComplexBall, FieldElement, NumberField, RatPoly};
use serde_json::{json, Value};

use crate::automorphism::find_ring_automorphisms;
use crate::dims::{fpdim, quantum_dimensions};
use crate::error::{FusionError, Result};
use crate::gauge::{compute_gsb, compute_gsb_seeded, minimal_field_with, regauge_with, GaugeSplitBasis};
use crate::io::{import_dump, load, save, Report, Status, SystemFile};
use crate::modular::{modular_data, twists};
use crate::numeric::numeric_symbols;
use crate::ring::ring_verify;
use crate::system::{fkey_name, rkey_name, FusionSystem};
use crate::verify::{verify_hexagon, verify_pentagon, EquationReport};

#[derive(Parser, Debug)]
#[command(name = "fsys", version, about = "Exact computations with multiplicity-free fusion systems")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Worker threads for the verification sweeps.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct NumericArgs {
    /// Canonical index of the complex embedding (0-based).
    #[arg(long)]
    pub embed: Option<usize>,
    /// Working precision in bits.
    #[arg(long, env = "FSYS_PRECISION", default_value_t = 128)]
    pub precision: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Summary of a ring or system file.
    Info { file: PathBuf },
    /// Ring axioms, pentagon, hexagons and sphericality.
    Verify { file: PathBuf },
    /// Frobenius–Perron dimensions.
    Fpdim {
        file: PathBuf,
        /// Candidate minimal polynomial of the total dimension.
        #[arg(long)]
        minpoly: Option<String>,
        /// Square the total before evaluating the candidate.
        #[arg(long)]
        square: bool,
        #[arg(long, env = "FSYS_PRECISION", default_value_t = 128)]
        precision: u32,
    },
    /// Exact S-matrix.
    Smatrix {
        file: PathBuf,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Diagonal of the T-matrix (twists).
    Tmatrix {
        file: PathBuf,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Gauge-split basis words.
    Gsb {
        file: PathBuf,
        /// Seed for an alternative Smith decomposition.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Minimal field of the system.
    Minfield {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Rewrite the system over its minimal field.
    Regauge {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Symbols evaluated under a complex embedding.
    Numeric {
        file: PathBuf,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Fusion ring automorphisms.
    Automorphisms { file: PathBuf },
    /// Convert a dictionary dump into a system file.
    Import {
        dump: PathBuf,
        /// Ring file supplying labels and fusion rules.
        #[arg(long)]
        ring: PathBuf,
        /// Defining polynomial of the coefficient field.
        #[arg(long)]
        field: String,
        #[arg(long)]
        out: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Info { .. } => "info",
            Command::Verify { .. } => "verify",
            Command::Fpdim { .. } => "fpdim",
            Command::Smatrix { .. } => "smatrix",
            Command::Tmatrix { .. } => "tmatrix",
            Command::Gsb { .. } => "gsb",
            Command::Minfield { .. } => "minfield",
            Command::Regauge { .. } => "regauge",
            Command::Numeric { .. } => "numeric",
            Command::Automorphisms { .. } => "automorphisms",
            Command::Import { .. } => "import",
        }
    }
}

/// Parses `args`, runs the command, prints the report and returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let (text, code) = run_cli(&cli);
    print!("{text}");
    code
}

/// Runs a parsed command line; returns the rendered report and exit code.
pub fn run_cli(cli: &Cli) -> (String, i32) {
    let start = Instant::now();
    let mut report = match cli.jobs {
        Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(&cli.command)),
            Err(e) => Err(FusionError::BadRing(e.to_string())),
        },
        _ => run(&cli.command),
    }
    .unwrap_or_else(|e| error_report(cli.command.name(), &e));
    if cli.timing {
        report.timing = Some(start.elapsed().as_secs_f64());
    }
    let text = if cli.json { format!("{}\n", report.to_json()) } else { report.to_text() };
    (text, report.status.exit_code())
}

fn error_report(command: &str, e: &FusionError) -> Report {
    let mut r = Report::new(command);
    r.status = Status::Error;
    r.push("error", e.code());
    r.push("message", e.to_string());
    r
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| FusionError::Io(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<SystemFile> {
    load(&read(path)?)
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| FusionError::Io(format!("{}: {e}", path.display())))
}

fn parse_poly(s: &str) -> Result<RatPoly> {
    let cleaned = s.replace('−', "-");
    Ok(RatPoly::parse(&cleaned)?.0)
}

fn elem(x: &FieldElement) -> Value {
    Value::String(x.display())
}

fn ball(b: &ComplexBall) -> Value {
    Value::String(b.to_string())
}

fn labels(v: &[usize]) -> Value {
    json!(v.iter().map(|x| x + 1).collect::<Vec<_>>())
}

fn equations(r: &EquationReport) -> Value {
    json!({
        "ok": r.ok,
        "checked": r.checked,
        "violations": r.violations,
        "first_violation": r.first_violation.as_ref().map(|v| labels(v)),
        "suspects": r.suspects.iter().map(fkey_name).collect::<Vec<_>>(),
    })
}

fn run(cmd: &Command) -> Result<Report> {
    let mut rep = Report::new(cmd.name());
    match cmd {
        Command::Info { file } => {
            let f = read_file(file)?;
            if let Some(n) = &f.name {
                rep.push("name", n.as_str());
            }
            let ring = &f.ring;
            rep.push("rank", ring.rank());
            rep.push("labels", json!(ring.names()));
            rep.push("dual", labels(ring.duals()));
            rep.push("multiplicity_free", ring.is_multiplicity_free());
            if let Some(sys) = &f.system {
                rep.push("field", sys.field().defining_poly().display_with(sys.field().var()));
                rep.push("degree", sys.field().degree());
                rep.push("f_symbols", sys.f_symbols().len());
                rep.push("p_symbols", sys.p_symbols().len());
                rep.push("braided", sys.is_braided());
            }
        }
        Command::Verify { file } => {
            let f = read_file(file)?;
            let ring_rep = ring_verify(&f.ring);
            rep.push("ring", serde_json::to_value(&ring_rep).expect("serializable"));
            if !ring_rep.ok {
                rep.fail();
            }
            if let Some(sys) = &f.system {
                let p = verify_pentagon(sys);
                if !p.ok {
                    rep.fail();
                }
                rep.push("pentagon", equations(&p));
                if sys.is_braided() {
                    let h = verify_hexagon(sys)?;
                    if !h.ok {
                        rep.fail();
                    }
                    rep.push("hexagon", equations(&h.braiding));
                    rep.push("inverse_hexagon", equations(&h.inverse_braiding));
                }
                let q = quantum_dimensions(sys)?;
                rep.push("spherical", q.spherical);
                rep.push("dimensions", json!(q.left.iter().map(elem).collect::<Vec<_>>()));
            }
        }
        Command::Fpdim { file, minpoly, square, precision } => {
            let f = read_file(file)?;
            let candidate = minpoly.as_deref().map(parse_poly).transpose()?;
            let d = fpdim(&f.ring, *precision, candidate.as_ref(), *square)?;
            rep.push("dimensions", json!(d.per_object.iter().map(|b| b.to_string()).collect::<Vec<_>>()));
            rep.push(if d.squared { "total_squared" } else { "total" }, d.total.to_string());
            if let Some((p, res)) = &d.minpoly_check {
                rep.push("candidate", p.to_string());
                rep.push("residual", res.to_string());
                rep.push("residual_contains_zero", res.contains_zero());
                if !res.contains_zero() {
                    rep.fail();
                }
            }
        }
        Command::Smatrix { file, numeric } => {
            let f = read_file(file)?;
            let sys = f.require_system()?;
            let md = modular_data(sys)?;
            rep.push("s", json!(md.s.iter().map(|row| row.iter().map(elem).collect::<Vec<_>>()).collect::<Vec<_>>()));
            rep.push("symmetric", md.symmetric);
            rep.push("modular", md.modular);
            if let Some(e) = embed_for(sys.field(), numeric, f.embedding)? {
                let rows = md.s.iter().map(|row| row.iter().map(|x| Ok(ball(&e.evaluate(x)?))).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
                rep.push("s_numeric", json!(rows));
            }
        }
        Command::Tmatrix { file, numeric } => {
            let f = read_file(file)?;
            let sys = f.require_system()?;
            let t = twists(sys)?;
            rep.push("t", json!(t.iter().map(elem).collect::<Vec<_>>()));
            if let Some(e) = embed_for(sys.field(), numeric, f.embedding)? {
                rep.push("t_numeric", json!(t.iter().map(|x| Ok(ball(&e.evaluate(x)?))).collect::<Result<Vec<_>>>()?));
            }
        }
        Command::Gsb { file, seed } => {
            let f = read_file(file)?;
            let sys = f.require_system()?;
            let gsb = gsb_for(sys, *seed)?;
            rep.push("symbols", gsb.index.len());
            rep.push("gauge_variables", gsb.exponents.vars.len());
            rep.push("rank", gsb.rank);
            rep.push("invariant_factors", json!(gsb.smith.invariant_factors().iter().map(|x| x.to_string()).collect::<Vec<_>>()));
            rep.push("zero_symbols", gsb.index.len() - gsb.exponents.columns.len());
            let words = |ws: &[crate::gauge::FormalWord]| {
                json!(ws.iter().map(|w| json!({"word": w.display(&gsb.index), "exponents": w.exponents})).collect::<Vec<_>>())
            };
            rep.push("d", words(&gsb.d));
            rep.push("i", words(&gsb.i));
            if !gsb.is_consistent() {
                rep.fail();
            }
        }
        Command::Minfield { file, seed } => {
            let f = read_file(file)?;
            let sys = f.require_system()?;
            let gsb = gsb_for(sys, *seed)?;
            let m = minimal_field_with(sys, &gsb)?;
            rep.push("polynomial", m.field.defining_poly().display_with("x"));
            rep.push("degree", m.field.degree());
            rep.push("generator", m.generator_in_host.display());
            rep.push("host_degree", sys.field().degree());
        }
        Command::Regauge { file, out } => {
            let f = read_file(file)?;
            let sys = f.require_system()?;
            let gsb = compute_gsb(sys)?;
            let m = minimal_field_with(sys, &gsb)?;
            let new = regauge_with(sys, &gsb, &m)?;
            let p = verify_pentagon(&new);
            if !p.ok {
                rep.fail();
            }
            rep.push("polynomial", m.field.defining_poly().display_with("x"));
            rep.push("pentagon", p.ok);
            rep.push("braiding_dropped", sys.is_braided());
            let mut nf = SystemFile::from_system(new);
            nf.name = f.name.clone();
            nf.source = Some(format!("regauged from {}", file.display()));
            write(out, &save(&nf))?;
            rep.push("out", out.display().to_string());
        }
        Command::Numeric { file, numeric } => {
            let f = read_file(file)?;
            let sys = f.require_system()?;
            let idx = numeric.embed.or(f.embedding).unwrap_or(0);
            let e = embedding(sys.field(), idx, numeric.precision)?;
            let n = numeric_symbols(sys, &e, numeric.precision)?;
            rep.push("embedding", idx);
            rep.push("root", ball(&e.root_value()));
            rep.push("f", json!(n.f.iter().map(|(k, b)| format!("{} => {}", fkey_name(k), b)).collect::<Vec<_>>()));
            rep.push("p", json!(n.p.iter().enumerate().map(|(a, b)| format!("P{} => {}", a + 1, b)).collect::<Vec<_>>()));
            if let Some(r) = &n.r {
                rep.push("r", json!(r.iter().map(|(k, b)| format!("{} => {}", rkey_name(k), b)).collect::<Vec<_>>()));
            }
            rep.push("max_radius", format!("{:.3e}", n.max_radius()));
        }
        Command::Automorphisms { file } => {
            let f = read_file(file)?;
            let autos = find_ring_automorphisms(&f.ring)?;
            rep.push("count", autos.len());
            rep.push("automorphisms", json!(autos.iter().map(|s| labels(s)).collect::<Vec<_>>()));
        }
        Command::Import { dump, ring, field, out } => {
            let ring = read_file(ring)?.ring;
            let poly = parse_poly(field)?;
            let nf = NumberField::new(&poly)?;
            let (sys, layout) = import_dump(&read(dump)?, &ring, &nf)?;
            rep.push("layout", format!("{layout:?}"));
            rep.push("f_symbols", sys.f_symbols().len());
            let mut sf = SystemFile::from_system(sys);
            sf.source = Some(format!("imported from {}", dump.display()));
            write(out, &save(&sf))?;
            rep.push("out", out.display().to_string());
        }
    }
    Ok(rep)
}

fn gsb_for(sys: &FusionSystem, seed: Option<u64>) -> Result<GaugeSplitBasis> {
    match seed {
        Some(s) => compute_gsb_seeded(sys, s),
        None => compute_gsb(sys),
    }
}

fn embed_for(field: &NumberField, n: &NumericArgs, default: Option<usize>) -> Result<Option<fsys_algebra::ComplexEmbedding>> {
    match n.embed.or(default) {
        Some(i) => Ok(Some(embedding(field, i, n.precision)?)),
        None => Ok(None),
    }
}
