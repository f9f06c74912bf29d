//! Command-line front end. [`run`] parses arguments and returns the exit
//! code and captured output, so the binary is a thin wrapper and the
//! commands can be exercised in-process.

pub mod format;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chords::{format_chord, parse_chord, ParsimoniousGraph};
use crate::context::{Context, Preset};
use crate::error::{Error, Result};
use crate::groth::{from_faithful, grothendieck, is_faithful};
use crate::monoid::{automorphisms, composition_table, isomorphic_tables, MulTable};
use crate::pknet::{apply_homography, search_labelings, verify_pknet, Labeling, RelPKNet};
use crate::report::Report;
use format::{
    AnalysisResult, GrothStats, HomographyFile, PairResult, PkNetFile, ProgressionFile, ANALYSIS_SCHEMA,
    GROTH_SCHEMA, REPORT_SCHEMA,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "relpk", version, about = "Relational PK-Net analysis of chord progressions")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closure, presentation, units and automorphisms of a preset monoid.
    Monoid(MonoidArgs),
    /// Parsimonious voice-leading graphs.
    Graph(GraphArgs),
    /// Monoid elements relating one chord to another.
    Relate(RelateArgs),
    /// Label each consecutive pair of a progression file.
    Analyze { file: PathBuf },
    /// Verify, search or transport PK-Nets given as JSON files.
    Pknet {
        #[command(subcommand)]
        command: PknetCommand,
    },
    /// Statistics of the category of elements of a context.
    Groth {
        #[arg(long)]
        context: String,
    },
}

#[derive(Debug, Args)]
pub struct MonoidArgs {
    pub preset: String,
    #[arg(long)]
    pub check_presentation: bool,
    #[arg(long)]
    pub automorphisms: bool,
    /// Print the Cayley graph in Graphviz syntax.
    #[arg(long)]
    pub dot: bool,
    #[arg(long)]
    pub units: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GraphKind {
    CubeDance,
    Weitzmann,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(value_enum)]
    pub kind: GraphKind,
    #[arg(long)]
    pub dot: bool,
    /// Shortest distance and a witness path.
    #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
    pub distance: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct RelateArgs {
    pub from: String,
    pub to: String,
    #[arg(long, default_value = "upl")]
    pub context: String,
}

#[derive(Debug, Subcommand)]
pub enum PknetCommand {
    /// Check the form, labeling and φ conditions of a net.
    Verify {
        file: PathBuf,
    },
    /// Enumerate every labeling making the net's shape, form and φ valid.
    Search {
        file: PathBuf,
        /// Only keep labelings realizable with function-valued forms.
        #[arg(long)]
        functional: bool,
    },
    /// Transport a net along a homography and verify the image.
    Homography {
        net: PathBuf,
        homography: PathBuf,
        /// Apply the homography this many times.
        #[arg(long, default_value_t = 1)]
        repeat: usize,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Output {
    code: i32,
    text: String,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { code: EXIT_OK, text }
    }

    fn verdict(passed: bool, text: String) -> Self {
        Output { code: if passed { EXIT_OK } else { EXIT_NEGATIVE }, text }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) => EXIT_NEGATIVE,
        _ => EXIT_USAGE,
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = dispatch(&cli);
    match result {
        Ok(out) => {
            let mut text = out.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match &cli.output {
                Some(path) => match fs::write(path, &text) {
                    Ok(()) => Outcome { code: out.code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome {
                        code: EXIT_USAGE,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
                None => Outcome { code: out.code, stdout: text, stderr: String::new() },
            }
        }
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let json = cli.json;
    match &cli.command {
        Command::Monoid(a) => cmd_monoid(a, json),
        Command::Graph(a) => cmd_graph(a, json),
        Command::Relate(a) => cmd_relate(a, json),
        Command::Analyze { file } => cmd_analyze(file, json),
        Command::Pknet { command } => match command {
            PknetCommand::Verify { file } => cmd_verify(file, json),
            PknetCommand::Search { file, functional } => cmd_search(file, *functional, json),
            PknetCommand::Homography { net, homography, repeat } => cmd_homography(net, homography, *repeat, json),
        },
        Command::Groth { context } => cmd_groth(context, json),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Names a small group table up to isomorphism, e.g. `D6 x Z2`.
pub fn structure_name(t: &MulTable) -> String {
    let n = t.len();
    let mut candidates: Vec<(String, MulTable)> = Vec::new();
    if n == 1 {
        return "trivial".into();
    }
    candidates.push((format!("Z{n}"), MulTable::cyclic(n)));
    if n == 4 {
        candidates.push(("Z2 x Z2".into(), MulTable::klein4()));
    }
    // D(2k) x Z2 and D(4k) coincide for odd k; the product name is preferred
    if n >= 12 && n.is_multiple_of(4) {
        candidates.push((format!("D{} x Z2", n / 2), MulTable::dihedral(n / 2).direct_product(&MulTable::cyclic(2))));
    }
    if n >= 6 && n.is_multiple_of(2) {
        candidates.push((format!("D{n}"), MulTable::dihedral(n)));
    }
    if n >= 8 && n.is_multiple_of(4) {
        candidates.push((format!("Z{} x Z2", n / 2), MulTable::cyclic(n / 2).direct_product(&MulTable::cyclic(2))));
    }
    candidates
        .into_iter()
        .find(|(_, c)| isomorphic_tables(t, c).is_some())
        .map(|(name, _)| name)
        .unwrap_or_else(|| format!("order {n}"))
}

fn cmd_monoid(a: &MonoidArgs, json: bool) -> Result<Output> {
    let preset: Preset = a.preset.parse()?;
    let ctx = Context::preset(preset);
    let m = ctx.monoid();
    if a.dot {
        return Ok(Output::ok(m.cayley_dot(preset.tag())));
    }
    let mut passed = true;
    let mut text = format!("elements: {}\n", m.len());
    let mut obj = json!({ "preset": preset.tag(), "elements": m.len(),
        "words": (0..m.len()).map(|i| ctx.element_name(i)).collect::<Vec<_>>() });
    if a.check_presentation {
        let rep = ctx.check_presentation(preset.relators())?;
        passed &= rep.all_hold();
        for r in &rep.relators {
            writeln!(text, "relator {} = {}: {}", r.lhs, r.rhs, if r.holds { "holds" } else { "fails" }).unwrap();
        }
        writeln!(text, "presentation: {}", if rep.all_hold() { "holds" } else { "fails" }).unwrap();
        obj["presentation"] = json!({
            "holds": rep.all_hold(),
            "relators": rep.relators.iter().map(|r| json!({"lhs": r.lhs, "rhs": r.rhs, "holds": r.holds})).collect::<Vec<_>>(),
        });
    }
    if a.units {
        let u = m.units();
        let names: Vec<String> = u.members.iter().map(|&i| ctx.element_name(i)).collect();
        let structure = structure_name(&u.table);
        writeln!(text, "units: {} ({structure})", u.len()).unwrap();
        writeln!(text, "  {}", names.join(" ")).unwrap();
        let table: Vec<Vec<String>> = (0..u.len())
            .map(|x| (0..u.len()).map(|y| names[u.table.get(x, y)].clone()).collect())
            .collect();
        for (row, name) in table.iter().zip(&names) {
            writeln!(text, "  {name}: {}", row.join(" ")).unwrap();
        }
        obj["units"] = json!({ "count": u.len(), "structure": structure, "members": names, "table": table });
    }
    if a.automorphisms {
        let auts = automorphisms(m);
        let structure = structure_name(&composition_table(&auts)?);
        writeln!(text, "automorphisms: {} ({structure})", auts.len()).unwrap();
        let gens = m.generators();
        let mut images = Vec::new();
        for f in &auts {
            let pairs: Vec<(String, String)> = (0..gens.len())
                .map(|g| (gens.name(g).to_string(), ctx.element_name(f.images()[g])))
                .collect();
            let line: Vec<String> = pairs.iter().map(|(g, w)| format!("{g}->{w}")).collect();
            writeln!(text, "  {}", line.join(", ")).unwrap();
            images.push(pairs.into_iter().map(|(g, w)| (g, Value::from(w))).collect::<serde_json::Map<String, Value>>());
        }
        obj["automorphisms"] = json!({ "count": auts.len(), "structure": structure, "generator_images": images });
    }
    Ok(Output::verdict(passed, if json { pretty(&obj) } else { text }))
}

fn cmd_graph(a: &GraphArgs, json: bool) -> Result<Output> {
    let (g, name) = match a.kind {
        GraphKind::CubeDance => (ParsimoniousGraph::cube_dance(), "cube-dance"),
        GraphKind::Weitzmann => (ParsimoniousGraph::weitzmann(), "weitzmann"),
    };
    if a.dot {
        return Ok(Output::ok(g.to_dot(name)));
    }
    if let Some(ends) = &a.distance {
        let (x, y) = (parse_chord(&ends[0])?, parse_chord(&ends[1])?);
        return Ok(match g.distance(x, y) {
            Some((d, path)) => {
                let names: Vec<String> = path.into_iter().map(format_chord).collect();
                let text = if json {
                    pretty(&json!({ "graph": name, "from": format_chord(x), "to": format_chord(y), "distance": d, "path": names }))
                } else {
                    format!("{d}: {}", names.join(" "))
                };
                Output::ok(text)
            }
            None => Output::verdict(
                false,
                if json {
                    pretty(&json!({ "graph": name, "from": format_chord(x), "to": format_chord(y), "distance": null }))
                } else {
                    "unreachable".into()
                },
            ),
        });
    }
    let text = if json {
        pretty(&json!({ "graph": name, "vertices": g.vertex_count(), "edges": g.edges().len() }))
    } else {
        format!("vertices: {}\nedges: {}", g.vertex_count(), g.edges().len())
    };
    Ok(Output::ok(text))
}

fn cmd_relate(a: &RelateArgs, json: bool) -> Result<Output> {
    let ctx = Context::by_name(&a.context)?;
    let labels: Vec<String> = ctx.relate(&a.from, &a.to)?.into_iter().map(|i| ctx.element_name(i)).collect();
    let text = if json {
        pretty(&json!({ "context": ctx.name(), "from": a.from, "to": a.to, "labels": labels }))
    } else if labels.is_empty() {
        "none".into()
    } else {
        labels.join(", ")
    };
    Ok(Output::verdict(!labels.is_empty(), text))
}

/// Labels every consecutive pair of a progression.
pub fn analyze(file: &ProgressionFile) -> Result<AnalysisResult> {
    let ctx = Context::by_name(&file.context).map_err(|e| Error::Schema(format!("/context: {e}")))?;
    let mut names = Vec::with_capacity(file.chords.len());
    for (i, c) in file.chords.iter().enumerate() {
        let idx = ctx.carrier_index(c).map_err(|e| Error::Schema(format!("/chords/{i}: {e}")))?;
        names.push((idx, ctx.carrier().label(idx).to_string()));
    }
    let pairs: Vec<PairResult> = names
        .windows(2)
        .map(|w| PairResult {
            from: w[0].1.clone(),
            to: w[1].1.clone(),
            labels: ctx.monoid().relating(w[0].0, w[1].0).into_iter().map(|g| ctx.element_name(g)).collect(),
        })
        .collect();
    let pass = pairs.iter().all(|p| !p.labels.is_empty());
    Ok(AnalysisResult {
        schema: ANALYSIS_SCHEMA.into(),
        context: ctx.name().into(),
        pairs,
        verdict: if pass { "pass" } else { "fail" }.into(),
    })
}

fn cmd_analyze(path: &Path, json: bool) -> Result<Output> {
    let result = analyze(&ProgressionFile::parse(&read(path)?)?)?;
    let pass = result.verdict == "pass";
    if json {
        return Ok(Output::verdict(pass, pretty(&result)));
    }
    let mut text = String::new();
    for p in &result.pairs {
        let labels = if p.labels.is_empty() { "none".to_string() } else { p.labels.join(", ") };
        writeln!(text, "{} -> {}: {labels}", p.from, p.to).unwrap();
    }
    write!(text, "verdict: {}", result.verdict).unwrap();
    if let Some(p) = result.pairs.iter().find(|p| p.labels.is_empty()) {
        write!(text, " (no element relates {} to {})", p.from, p.to).unwrap();
    }
    Ok(Output::verdict(pass, text))
}

fn report_text(report: &Report) -> String {
    let mut text = String::new();
    for c in &report.checks {
        match &c.detail {
            None => writeln!(text, "ok   {}", c.name).unwrap(),
            Some(d) => writeln!(text, "FAIL {}: {d}", c.name).unwrap(),
        }
    }
    write!(text, "verdict: {}", if report.passed() { "pass" } else { "fail" }).unwrap();
    text
}

fn report_json(report: &Report) -> Value {
    json!({ "$schema": REPORT_SCHEMA, "passed": report.passed(), "checks": report.checks })
}

fn cmd_verify(path: &Path, json: bool) -> Result<Output> {
    let net = PkNetFile::parse(&read(path)?)?.build()?;
    let report = verify_pknet(&net)?;
    let text = if json { pretty(&report_json(&report)) } else { report_text(&report) };
    Ok(Output::verdict(report.passed(), text))
}

fn cmd_search(path: &Path, functional: bool, json: bool) -> Result<Output> {
    let parts = PkNetFile::parse(&read(path)?)?.parts()?;
    let found = search_labelings(&parts.shape, &parts.form, &parts.phi, &parts.context, functional)?;
    let described: Vec<Vec<(String, String)>> =
        found.iter().map(|l: &Labeling| l.describe(&parts.shape, &parts.context)).collect();
    let text = if json {
        let labelings: Vec<serde_json::Map<String, Value>> =
            described.iter().map(|d| d.iter().map(|(a, w)| (a.clone(), Value::from(w.clone()))).collect()).collect();
        pretty(&json!({ "functional": functional, "count": found.len(), "labelings": labelings }))
    } else if found.is_empty() {
        "no labeling found".into()
    } else {
        described
            .iter()
            .map(|d| d.iter().map(|(a, w)| format!("{a}={w}")).collect::<Vec<_>>().join(", "))
            .collect::<Vec<_>>()
            .join("\n")
    };
    Ok(Output::verdict(!found.is_empty(), text))
}

fn cmd_homography(net_path: &Path, hom_path: &Path, repeat: usize, json: bool) -> Result<Output> {
    let mut net: RelPKNet = PkNetFile::parse(&read(net_path)?)?.build()?;
    let h = HomographyFile::parse(&read(hom_path)?)?.build(&net)?;
    for _ in 0..repeat {
        net = apply_homography(&net, &h)?;
    }
    let report = verify_pknet(&net)?;
    let text = if json {
        pretty(&json!({
            "net": PkNetFile::from_net(&net),
            "isography": h.is_isography(),
            "report": report_json(&report),
        }))
    } else {
        let mut text = String::new();
        for (x, o) in net.shape.objects().iter().enumerate() {
            writeln!(text, "{o}: {}", net.phi_image(x).join(" ")).unwrap();
        }
        writeln!(text, "isography: {}", h.is_isography()).unwrap();
        write!(text, "verdict: {}", if report.passed() { "pass" } else { "fail" }).unwrap();
        text
    };
    Ok(Output::verdict(report.passed(), text))
}

/// Object and morphism counts, faithfulness, audit and round-trip verdicts.
pub fn groth_stats(ctx: &Context) -> Result<GrothStats> {
    let (h, p) = grothendieck(ctx)?;
    let (carrier, relations) = from_faithful(&p)?;
    Ok(GrothStats {
        schema: GROTH_SCHEMA.into(),
        context: ctx.name().into(),
        objects: h.object_count(),
        morphisms: h.morphism_count(),
        faithful: is_faithful(&p),
        audit: h.full_audit().passed(),
        roundtrip: &carrier == ctx.carrier() && relations == ctx.monoid().elements(),
    })
}

fn cmd_groth(context: &str, json: bool) -> Result<Output> {
    let s = groth_stats(&Context::by_name(context)?)?;
    let pass = s.faithful && s.audit && s.roundtrip;
    let text = if json {
        pretty(&s)
    } else {
        format!(
            "objects: {}\nmorphisms: {}\nfaithful: {}\naudit: {}\nroundtrip: {}",
            s.objects, s.morphisms, s.faithful, s.audit, s.roundtrip
        )
    };
    Ok(Output::verdict(pass, text))
}
