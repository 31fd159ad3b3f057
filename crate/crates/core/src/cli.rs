//! Command-line front end. [`run`] is the whole program minus process exit,
//! so it can be driven from tests.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalog::{build_entry, Catalog, CatalogEntry, CatalogError};
use crate::env2::{embed_casimir, Env2Error, Quad2};
use crate::liealg::{killing_form, restrict_form, LieAlgebra};
use crate::pairs::{check_transitive_triple, TripleReport, Verdict};
use crate::parabolic::{is_spherical_triple, minimal_parabolic, ParabolicError, PickOrder, SphericityEvidence};
use crate::ratlin::{parse_rational, serde_q, Q};
use crate::spectra::{lorentzian_spectrum_report, SpectrumReport};

pub const MACHINE_SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lietriple", version, about = "Exact checks for transitive triples of Lie algebras")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,
    /// Print the evidence record behind each verdict.
    #[arg(long, global = true)]
    pub explain: bool,
    /// Catalog file to use instead of the shipped one.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Machine,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Transitive-triple conditions.
    Triples {
        #[command(subcommand)]
        action: TriplesAction,
    },
    /// Open-orbit test for the minimal parabolic of l.
    Spherical(Target),
    /// Embedding of the Casimir of g into U(l) modulo U(l)(l ∩ h).
    Casimir {
        #[command(subcommand)]
        action: CasimirAction,
    },
    /// Spectral bands and discrete eigenvalues for the Lorentzian family.
    Spectrum {
        #[arg(long)]
        n: usize,
        /// Largest discrete eigenvalue to list ("p" or "p/q").
        #[arg(long, default_value = "100")]
        cutoff: String,
    },
    /// Inspect the catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum TriplesAction {
    Check(Target),
}

#[derive(Subcommand, Debug)]
pub enum CasimirAction {
    Embed(Target),
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    /// Print entries as TOML.
    Show { name: Option<String> },
}

#[derive(Args, Debug)]
pub struct Target {
    /// Catalog entry name or path to a descriptor file.
    #[arg(required_unless_present = "all")]
    pub target: Option<String>,
    /// Run on every catalog entry.
    #[arg(long)]
    pub all: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema_version: u32,
    pub command: String,
    pub results: Vec<T>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleCheckOutput {
    pub entry: String,
    pub report: TripleReport,
    pub dimension_identity: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explain: Option<TripleExplain>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleExplain {
    pub dim_k: usize,
    pub dim_s: usize,
    pub dim_l_cap_k: usize,
    pub dim_l_cap_s_cap_q: usize,
    pub dim_l_plus_h: usize,
    pub killing_signature_on_l: String,
    pub killing_signature_on_l_cap_h: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalOutput {
    pub entry: String,
    pub evidence: SphericityEvidence,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explain: Option<RootExplain>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootExplain {
    pub roots: Vec<RootRecord>,
    pub dim_zero_space: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRecord {
    #[serde(with = "serde_q::vec")]
    pub root: Vec<Q>,
    pub multiplicity: usize,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub monomial: String,
    #[serde(with = "serde_q")]
    pub coefficient: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CasimirOutput {
    pub entry: String,
    pub generators: Vec<String>,
    pub solved: bool,
    #[serde(with = "serde_q::vec")]
    pub coefficients: Vec<Q>,
    pub unique: bool,
    pub residual: Vec<Term>,
    pub residual_zero: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explain: Option<CasimirExplain>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CasimirExplain {
    pub l_basis_labels: Vec<String>,
    pub complement_dim: usize,
    pub iota_omega_g: Vec<Term>,
    pub generator_forms: Vec<Vec<Term>>,
}

/// Error carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Self { code: EXIT_INPUT, message: e.to_string() }
    }

    fn internal(e: impl std::fmt::Display) -> Self {
        Self { code: EXIT_INTERNAL, message: e.to_string() }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Failure::input(e)
    }
}

struct Resolved {
    entries: Vec<CatalogEntry>,
    shipped: bool,
}

fn resolve(cli: &Cli, target: &Target) -> Result<Resolved, Failure> {
    let (catalog, shipped) = match &cli.catalog {
        Some(p) => (Catalog::load(p)?, false),
        None => (Catalog::shipped(), true),
    };
    if target.all {
        let entries = catalog.names().iter().map(|n| catalog.entry(n)).collect::<Result<Vec<_>, _>>()?;
        return Ok(Resolved { entries, shipped });
    }
    let name = target.target.as_deref().expect("clap enforces target or --all");
    match catalog.entry(name) {
        Ok(e) => Ok(Resolved { entries: vec![e], shipped }),
        Err(CatalogError::UnknownEntry(_)) if std::path::Path::new(name).exists() => {
            let file = Catalog::load(std::path::Path::new(name))?;
            let entries = file.specs().iter().map(build_entry).collect::<Result<Vec<_>, _>>()?;
            if entries.is_empty() {
                return Err(Failure::input(format!("{name}: no entries")));
            }
            Ok(Resolved { entries, shipped: false })
        }
        Err(e) => Err(e.into()),
    }
}

/// Runs every entry on its own thread, keeping input order.
fn par_map<T: Send, F>(entries: &[CatalogEntry], f: F) -> Vec<T>
where
    F: Fn(&CatalogEntry) -> T + Sync,
{
    if entries.len() == 1 {
        return vec![f(&entries[0])];
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = entries.iter().map(|e| s.spawn(|| f(e))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn terms(q: &Quad2, g: &LieAlgebra) -> Vec<Term> {
    q.terms(g).into_iter().map(|(monomial, coefficient)| Term { monomial, coefficient }).collect()
}

fn render_terms(ts: &[Term]) -> String {
    if ts.is_empty() {
        return "0".into();
    }
    ts.iter().map(|t| format!("({}) {}", t.coefficient, t.monomial)).collect::<Vec<_>>().join(" + ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, command: &str, results: Vec<T>) -> std::io::Result<()> {
    let env = Envelope { schema_version: MACHINE_SCHEMA_VERSION, command: command.into(), results };
    writeln!(out, "{}", serde_json::to_string_pretty(&env).expect("serializable"))
}

fn triples_check(cli: &Cli, target: &Target, out: &mut dyn Write) -> Result<i32, Failure> {
    let resolved = resolve(cli, target)?;
    let explain = cli.explain;
    let results = par_map(&resolved.entries, |e| {
        let t = &e.descriptor;
        let report = check_transitive_triple(t);
        let d = report.dims;
        let lhs = (d.l + d.h) as i64 - d.l_cap_h as i64;
        let explain = explain.then(|| {
            let b = killing_form(t.g());
            let sig = |s| restrict_form(b.gram(), s).ok().and_then(|m| m.signature().ok());
            TripleExplain {
                dim_k: t.k().dim(),
                dim_s: t.s().dim(),
                dim_l_cap_k: t.l_cap_k().dim(),
                dim_l_cap_s_cap_q: t.l_cap_s_cap_q().dim(),
                dim_l_plus_h: t.l().sum(&t.h()).map(|s| s.dim()).unwrap_or(0),
                killing_signature_on_l: sig(t.l()).map(|s| s.to_string()).unwrap_or_default(),
                killing_signature_on_l_cap_h: sig(&t.l_cap_h()).map(|s| s.to_string()).unwrap_or_default(),
            }
        });
        TripleCheckOutput { entry: t.name.clone(), dimension_identity: lhs == d.g as i64, report, explain }
    });
    let ok = results.iter().all(|r| r.report.verdict == Verdict::TransitiveTriple && r.dimension_identity);
    let io = |e: std::io::Error| Failure::internal(e);
    match cli.format {
        Format::Machine => emit(out, "triples check", results).map_err(io)?,
        Format::Table => {
            for r in &results {
                let p = &r.report;
                let d = p.dims;
                writeln!(out, "{}", r.entry).map_err(io)?;
                writeln!(out, "  (i)   reductive:                    {}", yes(p.reductive)).map_err(io)?;
                writeln!(out, "  (ii)  infinitesimally transitive:   {}", yes(p.transitive)).map_err(io)?;
                writeln!(out, "  (iii) compact l∩h:                  {}", yes(p.compact_intersection)).map_err(io)?;
                writeln!(
                    out,
                    "  dims: g={} h={} l={} l∩h={}  ({}+{}-{}={})",
                    d.g,
                    d.h,
                    d.l,
                    d.l_cap_h,
                    d.l,
                    d.h,
                    d.l_cap_h,
                    d.l + d.h - d.l_cap_h
                )
                .map_err(io)?;
                writeln!(out, "  transitive: {}", yes(p.verdict == Verdict::TransitiveTriple)).map_err(io)?;
                if let Some(x) = &r.explain {
                    writeln!(
                        out,
                        "  explain: k={} s={} l∩k={} l∩s∩q={} l+h={} B|l={} B|l∩h={}",
                        x.dim_k,
                        x.dim_s,
                        x.dim_l_cap_k,
                        x.dim_l_cap_s_cap_q,
                        x.dim_l_plus_h,
                        x.killing_signature_on_l,
                        x.killing_signature_on_l_cap_h
                    )
                    .map_err(io)?;
                }
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFICATION })
}

fn parabolic_failure(shipped: bool, name: &str, e: ParabolicError) -> Failure {
    let message = format!("{name}: {e}");
    if shipped {
        Failure::internal(message)
    } else {
        Failure::input(message)
    }
}

fn spherical(cli: &Cli, target: &Target, out: &mut dyn Write) -> Result<i32, Failure> {
    let resolved = resolve(cli, target)?;
    let explain = cli.explain;
    let results = par_map(&resolved.entries, |e| -> Result<SphericalOutput, (String, ParabolicError)> {
        let t = &e.descriptor;
        let name = t.name.clone();
        let evidence = is_spherical_triple(t, PickOrder::Forward).map_err(|err| (name.clone(), err))?;
        let explain = if explain {
            let theta = t.theta_on_l().map_err(|err| (name.clone(), err.into()))?;
            let (rs, _) =
                minimal_parabolic(&t.l_algebra(), &theta, PickOrder::Forward).map_err(|err| (name.clone(), err))?;
            let pos = rs.positive_indices();
            Some(RootExplain {
                roots: (0..rs.roots.len())
                    .map(|i| RootRecord {
                        root: rs.roots[i].clone(),
                        multiplicity: rs.root_spaces[i].dim(),
                        positive: pos.contains(&i),
                    })
                    .collect(),
                dim_zero_space: rs.zero_space.dim(),
            })
        } else {
            None
        };
        Ok(SphericalOutput { entry: name, evidence, explain })
    });
    let results = results
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|(n, e)| parabolic_failure(resolved.shipped, &n, e))?;
    let io = |e: std::io::Error| Failure::internal(e);
    match cli.format {
        Format::Machine => emit(out, "spherical", results).map_err(io)?,
        Format::Table => {
            for r in &results {
                let v = &r.evidence;
                writeln!(out, "{}", r.entry).map_err(io)?;
                writeln!(out, "  spherical: {}", yes(v.spherical)).map_err(io)?;
                writeln!(
                    out,
                    "  dim p_L={} (m={} a={} n={})  dim l∩h={}  dim(p_L + l∩h)={}  dim l={}",
                    v.dim_p, v.dim_m, v.dim_a, v.dim_n, v.dim_l_cap_h, v.dim_sum, v.dim_l
                )
                .map_err(io)?;
                if let Some(x) = &r.explain {
                    for root in &x.roots {
                        let coords: Vec<String> = root.root.iter().map(Q::to_string).collect();
                        writeln!(
                            out,
                            "  root ({}) mult {}{}",
                            coords.join(", "),
                            root.multiplicity,
                            if root.positive { " +" } else { "" }
                        )
                        .map_err(io)?;
                    }
                    writeln!(out, "  zero space dim {}", x.dim_zero_space).map_err(io)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn casimir_embed(cli: &Cli, target: &Target, out: &mut dyn Write) -> Result<i32, Failure> {
    let resolved = resolve(cli, target)?;
    let explain = cli.explain;
    let results = par_map(&resolved.entries, |e| -> Result<CasimirOutput, (String, Env2Error)> {
        let t = &e.descriptor;
        let emb = embed_casimir(t, &e.spec.generators).map_err(|err| (t.name.clone(), err))?;
        let l_alg = t.l_algebra();
        let residual = terms(&emb.residual, &l_alg);
        Ok(CasimirOutput {
            entry: t.name.clone(),
            generators: emb.generator_names.clone(),
            solved: emb.coefficients.is_some(),
            coefficients: emb.coefficients.clone().unwrap_or_default(),
            unique: emb.unique,
            residual_zero: emb.residual.is_zero(),
            residual,
            explain: explain.then(|| CasimirExplain {
                l_basis_labels: l_alg.labels().to_vec(),
                complement_dim: emb.complement.len(),
                iota_omega_g: terms(&emb.iota_omega_g, &l_alg),
                generator_forms: emb.generators.iter().map(|q| terms(q, &l_alg)).collect(),
            }),
        })
    });
    let shipped = resolved.shipped;
    let results = results
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|(n, e)| if shipped { Failure::internal(format!("{n}: {e}")) } else { Failure::input(format!("{n}: {e}")) })?;
    let ok = results.iter().all(|r| r.solved && r.residual_zero);
    let io = |e: std::io::Error| Failure::internal(e);
    match cli.format {
        Format::Machine => emit(out, "casimir embed", results).map_err(io)?,
        Format::Table => {
            for r in &results {
                writeln!(out, "{}", r.entry).map_err(io)?;
                if r.solved {
                    let cs: Vec<String> = r.coefficients.iter().map(Q::to_string).collect();
                    writeln!(out, "  iota(Omega_G) = ({}) . ({})", cs.join(", "), r.generators.join(", "))
                        .map_err(io)?;
                } else {
                    writeln!(out, "  iota(Omega_G) is not in the span of ({})", r.generators.join(", ")).map_err(io)?;
                }
                writeln!(out, "  residual: {}", render_terms(&r.residual)).map_err(io)?;
                writeln!(out, "  unique: {}", yes(r.unique)).map_err(io)?;
                if let Some(x) = &r.explain {
                    writeln!(out, "  l basis: {}", x.l_basis_labels.join(" ")).map_err(io)?;
                    writeln!(out, "  complement of l∩h in h: dim {}", x.complement_dim).map_err(io)?;
                    writeln!(out, "  iota(Omega_G) mod U(l)(l∩h): {}", render_terms(&x.iota_omega_g)).map_err(io)?;
                    for (n, f) in r.generators.iter().zip(&x.generator_forms) {
                        writeln!(out, "  {n} = {}", render_terms(f)).map_err(io)?;
                    }
                }
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFICATION })
}

fn spectrum(cli: &Cli, n: usize, cutoff: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let cutoff = parse_rational(cutoff).map_err(Failure::input)?;
    let report: SpectrumReport = lorentzian_spectrum_report(n, &cutoff).map_err(Failure::input)?;
    let io = |e: std::io::Error| Failure::internal(e);
    match cli.format {
        Format::Machine => emit(out, "spectrum", vec![report]).map_err(io)?,
        Format::Table => {
            writeln!(out, "n = {}, cutoff = {}", report.n, report.cutoff).map_err(io)?;
            for b in &report.bands {
                writeln!(out, "  {:<14} {}", b.interval(), b.attribution).map_err(io)?;
            }
            let vals: Vec<String> = report.discrete_positive.iter().map(|d| d.value.to_string()).collect();
            writeln!(out, "  discrete: [{}]", vals.join(", ")).map_err(io)?;
            if cli.explain {
                for d in &report.discrete_positive {
                    writeln!(out, "    l = {:<3} {}", d.ell, d.value).map_err(io)?;
                }
            }
            writeln!(out, "  note: {}", report.eigenspace_note).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn catalog_cmd(cli: &Cli, action: &CatalogAction, out: &mut dyn Write) -> Result<i32, Failure> {
    let catalog = match &cli.catalog {
        Some(p) => Catalog::load(p)?,
        None => Catalog::shipped(),
    };
    let io = |e: std::io::Error| Failure::internal(e);
    match action {
        CatalogAction::List => {
            for s in catalog.specs() {
                writeln!(out, "{:<16} {}", s.name, s.description).map_err(io)?;
            }
        }
        CatalogAction::Show { name } => {
            let specs = match name {
                Some(n) => vec![catalog.spec(n)?],
                None => catalog.specs().to_vec(),
            };
            let file = crate::catalog::CatalogFile { schema_version: crate::catalog::SCHEMA_VERSION, entries: specs };
            write!(out, "{}", toml::to_string(&file).map_err(Failure::internal)?).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Triples { action: TriplesAction::Check(t) } => triples_check(&cli, t, out),
        Command::Spherical(t) => spherical(&cli, t, out),
        Command::Casimir { action: CasimirAction::Embed(t) } => casimir_embed(&cli, t, out),
        Command::Spectrum { n, cutoff } => spectrum(&cli, *n, cutoff, out),
        Command::Catalog { action } => catalog_cmd(&cli, action, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
