//! Command-line interface: `weyl`, `rep`, `graph` and `bounds` subcommands.
//!
//! Every command prints one JSON report with a stable field order and a
//! top-level `pass` flag. Exit codes: 0 pass, 1 failed check, 2 usage, 3 resource.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds;
use crate::complexes::graph::{alon_boppana_check, serre_check};
use crate::complexes::tree::{simple_walk, TreeBall};
use crate::complexes::{load_chamber_system, ChamberComplex, Graph, GraphMode};
use crate::error::{Error, Result};
use crate::hecke::Hecke;
use crate::laurent::{parse_ratio, Rational};
use crate::reps::{self, builtin_rep, complex_json, load_rep, p_min_of, rep_to_json, HeckeRep, PMin};
use crate::rootsys::Coweight;
use crate::weyl::{AffineWeyl, ParamSystem};

#[derive(Parser, Debug)]
#[command(name = "lpexpander", version, about = "Affine Hecke algebras and L_p-expander diagnostics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Affine Weyl group enumeration and checks.
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
    /// Hecke algebra representations.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Graphs and chamber systems.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Closed-form bounds.
    Bounds {
        #[command(subcommand)]
        cmd: BoundsCmd,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Root system type: A1, BC1, A2, C2, G2 or A3.
    #[arg(long = "type")]
    pub type_name: String,
    /// Parameter values, `class=value` or a bare value for every class (repeatable).
    #[arg(long = "q")]
    pub q: Vec<String>,
}

impl GroupArgs {
    fn group(&self) -> Result<AffineWeyl> {
        AffineWeyl::load(&self.type_name)
    }

    /// Numeric parameters; `q = 2` on every class when none are given.
    fn params(&self, g: &AffineWeyl) -> Result<ParamSystem> {
        let mut default = None;
        let mut assignments = vec![];
        for a in &self.q {
            match a.split_once('=') {
                Some((c, v)) => assignments.push((c.trim().to_string(), parse_ratio(v.trim())?)),
                None => default = Some(parse_ratio(a.trim())?),
            }
        }
        if assignments.is_empty() && default.is_none() {
            default = Some(Rational::from_integer(2));
        }
        ParamSystem::numeric(g, &assignments, default)
    }
}

#[derive(Subcommand, Debug)]
pub enum WeylCmd {
    /// List the elements of the ball `l(w) ≤ maxlen`.
    Enum {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 3)]
        maxlen: usize,
    },
    /// Check the decomposition `w = w₀ t_β a` on a ball.
    StructureCheck {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 6)]
        maxlen: usize,
    },
    /// Compare the truncated Poincaré series with its product formula.
    Poincare {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 6)]
        maxlen: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RepSource {
    /// Representation file.
    pub file: Option<PathBuf>,
    /// Built-in one-dimensional representation: trivial, steinberg or sign:<classes>.
    #[arg(long, conflicts_with = "file")]
    pub builtin: Option<String>,
    #[arg(long = "type")]
    pub type_name: Option<String>,
    #[arg(long = "q")]
    pub q: Vec<String>,
}

impl RepSource {
    fn load(&self) -> Result<HeckeRep> {
        match (&self.file, &self.builtin) {
            (Some(path), _) => load_rep(path),
            (None, Some(name)) => {
                let t = self.type_name.clone().ok_or_else(|| Error::Usage("--builtin needs --type".into()))?;
                let ga = GroupArgs { type_name: t, q: self.q.clone() };
                let g = ga.group()?;
                let p = ga.params(&g)?;
                builtin_rep(name, &g, &p)
            }
            (None, None) => Err(Error::Usage("give a representation file or --builtin".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum RepCmd {
    /// Check the defining relations.
    Validate {
        #[command(flatten)]
        src: RepSource,
    },
    /// Eigenvalues of the translation operators, `p_min` and the eigenvalue criterion at `p`.
    Tempered {
        #[command(flatten)]
        src: RepSource,
        #[arg(long, default_value = "2", value_parser = parse_p)]
        p: f64,
    },
    /// Characteristic polynomials and pole data.
    Zeta {
        #[command(flatten)]
        src: RepSource,
    },
    /// Growth of the matrix coefficient `⟨e₀, π(h_w) e₀⟩` against `q_w^{(p−1)/p}(1+δ)^l`.
    Growth {
        #[command(flatten)]
        src: RepSource,
        #[arg(long, default_value = "2", value_parser = parse_p)]
        p: f64,
        #[arg(long = "delta")]
        delta: Vec<f64>,
        #[arg(long, default_value_t = 6)]
        maxlen: usize,
        /// First length at which the envelope is enforced.
        #[arg(long, default_value_t = 0)]
        onset: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Auto,
    Regular,
    Biregular,
}

impl From<ModeArg> for GraphMode {
    fn from(m: ModeArg) -> GraphMode {
        match m {
            ModeArg::Auto => GraphMode::Auto,
            ModeArg::Regular => GraphMode::Regular,
            ModeArg::Biregular => GraphMode::Biregular,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// Graph files (`N M` then `u v` lines) or chamber-system files (JSON).
    pub files: Vec<PathBuf>,
    /// Add seeded random regular graphs with these vertex counts.
    #[arg(long = "random", value_delimiter = ',')]
    pub random: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub degree: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
}

/// A loaded input with its display name.
struct Input {
    name: String,
    complex: ChamberComplex,
}

impl FamilyArgs {
    fn load(&self) -> Result<Vec<Input>> {
        let mut out = vec![];
        for f in &self.files {
            out.push(Input { name: f.display().to_string(), complex: load_input(f, self.mode.into())? });
        }
        for (k, &n) in self.random.iter().enumerate() {
            let seed = self.seed.wrapping_add(k as u64);
            let g = Graph::random_regular(n, self.degree, seed)?;
            out.push(Input {
                name: format!("random_regular(n={n}, d={}, seed={seed})", self.degree),
                complex: ChamberComplex::from_graph(g, self.mode.into())?,
            });
        }
        if out.is_empty() {
            return Err(Error::Usage("no input graphs".into()));
        }
        Ok(out)
    }
}

fn load_input(path: &Path, mode: GraphMode) -> Result<ChamberComplex> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        load_chamber_system(path)
    } else {
        ChamberComplex::from_graph(Graph::parse(&text)?, mode)
    }
}

#[derive(Subcommand, Debug)]
pub enum GraphCmd {
    /// Relations, nontrivial spectrum, `p_min` and the Ramanujan verdict.
    Analyze {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Gallery diameter and typical distance against the distance theorem.
    DiameterCheck {
        #[command(flatten)]
        family: FamilyArgs,
        /// Use this `p` instead of `max(2, p_min)`.
        #[arg(long, value_parser = parse_p)]
        p: Option<f64>,
    },
    /// Tree-spectrum sample points against the spectra of the family.
    Serre {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 9)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        radius: usize,
    },
    /// Tree lower bounds against the largest nontrivial eigenvalue.
    AlonBoppana {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 14)]
        radius: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum BoundsCmd {
    /// The constant `D(q, l)`.
    D {
        #[arg(long = "type")]
        type_name: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        l: usize,
    },
    /// Bound on `‖h_w‖_p`; with `--radius`, compare against the tree ball (A1).
    Hw {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = parse_p)]
        p: f64,
        /// Word over `s0, s1, …` and `Ω̂` names, e.g. `"s0 s1 w1"`.
        #[arg(long)]
        word: String,
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Bound on `‖h_β‖_p`.
    Hbeta {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = parse_p)]
        p: f64,
        /// Coweight coordinates, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        beta: Vec<i64>,
    },
    /// The uniform `p₀` table.
    Oh {
        #[arg(long = "type")]
        type_name: String,
    },
    /// Distance and diameter bounds for `N` chambers.
    Diameter {
        #[arg(long = "type")]
        type_name: String,
        #[arg(long, value_parser = parse_p)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        n: f64,
    },
}

fn parse_p(s: &str) -> std::result::Result<f64, String> {
    match s.trim() {
        "inf" | "infinity" | "∞" => Ok(f64::INFINITY),
        t => t.parse::<f64>().map_err(|e| e.to_string()),
    }
}

/// Result of one invocation.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("lpexpander")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let pass = report.get("pass").and_then(Value::as_bool).unwrap_or(true);
            let text = serde_json::to_string_pretty(&report).expect("reports serialise") + "\n";
            let code = if pass { 0 } else { 1 };
            match &cli.out {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("{}\n", Error::from(e)) },
                },
                None => Outcome { code, stdout: text, stderr: String::new() },
            }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("{e}\n") },
    }
}

/// Runs a parsed command and returns its report.
pub fn execute(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Weyl { cmd } => weyl(cmd),
        Command::Rep { cmd } => rep(cmd),
        Command::Graph { cmd } => graph(cmd),
        Command::Bounds { cmd } => bounds_cmd(cmd),
    }
}

fn weyl(cmd: &WeylCmd) -> Result<Value> {
    match cmd {
        WeylCmd::Enum { group, maxlen } => {
            let g = group.group()?;
            let ball = g.enumerate_ball(*maxlen)?;
            let mut counts = vec![0usize; maxlen + 1];
            let elements: Vec<Value> = ball
                .iter()
                .map(|(w, l)| {
                    counts[*l] += 1;
                    json!({ "word": g.label(w), "length": l, "beta": w.beta.0, "fin": g.rs.weyl0.rows(w.fin) })
                })
                .collect();
            let within = counts.iter().enumerate().all(|(l, &c)| c as u64 <= g.growth_bound(l));
            Ok(json!({
                "command": "weyl enum",
                "type": g.rs.name(),
                "maxlen": maxlen,
                "count": ball.len(),
                "per_length": counts,
                "growth_bound_holds": within,
                "elements": elements,
                "pass": within,
            }))
        }
        WeylCmd::StructureCheck { group, maxlen } => {
            let g = group.group()?;
            let r = g.structure_check(*maxlen)?;
            let mut v = json!({ "command": "weyl structure-check", "type": g.rs.name() });
            merge(&mut v, r.to_json());
            Ok(v)
        }
        WeylCmd::Poincare { group, maxlen } => {
            let g = group.group()?;
            let hk = Hecke::new(g.clone(), ParamSystem::finest(&g))?;
            let rows = hk.poincare_compare(*maxlen)?;
            let pass = rows.iter().all(|r| r.3);
            Ok(json!({
                "command": "weyl poincare",
                "type": g.rs.name(),
                "maxlen": maxlen,
                "degrees": rows.iter().map(|(d, a, b, eq)| json!({
                    "degree": d, "lhs_terms": a, "rhs_terms": b, "equal": eq,
                })).collect::<Vec<_>>(),
                "pass": pass,
            }))
        }
    }
}

fn rep(cmd: &RepCmd) -> Result<Value> {
    match cmd {
        RepCmd::Validate { src } => {
            let r = src.load()?;
            Ok(json!({
                "command": "rep validate",
                "type": r.group().rs.name(),
                "dim": r.dim,
                "exact": r.exact,
                "unitary": r.is_unitary(),
                "rep": rep_to_json(&r),
                "pass": true,
            }))
        }
        RepCmd::Tempered { src, p } => {
            let r = src.load()?;
            let mut v = json!({ "command": "rep tempered" });
            let report = r.tempered_report(*p)?;
            let consistent = match r.p_min() {
                Ok(pm) => !pm.at_most(*p) || r.rh_check(*p),
                Err(_) => true,
            };
            merge(&mut v, report);
            v["consistent"] = json!(consistent);
            v["pass"] = json!(consistent);
            Ok(v)
        }
        RepCmd::Zeta { src } => {
            let r = src.load()?;
            let mut v = json!({ "command": "rep zeta" });
            merge(&mut v, r.zeta_report());
            v["pass"] = json!(true);
            Ok(v)
        }
        RepCmd::Growth { src, p, delta, maxlen, onset } => {
            let r = src.load()?;
            let deltas = if delta.is_empty() { vec![0.1] } else { delta.clone() };
            let mut e0 = vec![num_complex::Complex64::new(0.0, 0.0); r.dim];
            e0[0] = num_complex::Complex64::new(1.0, 0.0);
            let mut sweeps = vec![];
            let mut pass = true;
            for d in deltas {
                let rows = r.tempered_growth_check(&e0, &e0, *maxlen, *p, d, *onset)?;
                pass &= rows.iter().all(|row| !row.violation);
                sweeps.push(json!({
                    "delta": d,
                    "rows": rows.iter().map(|row| json!({
                        "length": row.length,
                        "max_ratio": reps::clean(row.max_ratio),
                        "envelope": reps::clean(row.envelope),
                        "violation": row.violation,
                    })).collect::<Vec<_>>(),
                }));
            }
            Ok(json!({
                "command": "rep growth",
                "type": r.group().rs.name(),
                "p": bounds::p_json(*p),
                "maxlen": maxlen,
                "onset": onset,
                "sweeps": sweeps,
                "pass": pass,
            }))
        }
    }
}

/// Spectral summary for a chamber system that does not come from a graph.
fn analyze_chamber_system(x: &ChamberComplex) -> Result<Value> {
    let hk = Hecke::new(x.group.clone(), x.params.clone())?;
    let n = x.group.rank();
    let mut rows = vec![];
    let mut worst = PMin::Finite(1.0);
    let mut thick = true;
    for i in 0..n {
        let t = x.group.translation(&Coweight::basis(n, i));
        let q = x.params.q_w_value(&x.group, &t)?;
        let eigs = x.nontrivial_spectrum(&hk.basis(&t))?;
        let pm = if q > 1.0 + reps::TOL {
            let pm = p_min_of(&eigs, q);
            worst = worst.max(pm);
            pm.to_json()
        } else {
            thick = false;
            json!("undefined for q_β = 1")
        };
        rows.push(json!({
            "beta": i + 1,
            "q_beta": reps::clean(q),
            "eigenvalues": eigs.iter().map(complex_json).collect::<Vec<_>>(),
            "p_min": pm,
        }));
    }
    Ok(json!({
        "translations": rows,
        "p_min": if thick { worst.to_json() } else { json!(null) },
        "ramanujan": if thick { json!(worst.at_most(2.0)) } else { json!(null) },
    }))
}

fn graph(cmd: &GraphCmd) -> Result<Value> {
    match cmd {
        GraphCmd::Analyze { family } => {
            let mut pass = true;
            let mut reports = vec![];
            for input in family.load()? {
                let x = &input.complex;
                let relations = x.check_relations();
                pass &= relations.is_ok();
                let mut v = json!({
                    "input": input.name,
                    "chambers": x.n_chambers,
                    "type": x.group.rs.name(),
                    "q": x.q_int(),
                    "relations": match &relations { Ok(()) => json!("ok"), Err(e) => json!(e.to_string()) },
                });
                if x.graph.is_some() {
                    let rep = x.classify_expander()?;
                    merge(&mut v, rep.to_json());
                    if x.is_regular_mode() {
                        let res = x.ihara_bass_check()?;
                        pass &= res <= 1e-6;
                        v["ihara_bass_residual"] = json!(reps::clean(res));
                    }
                    v["injectivity_radius"] = json!(x.injectivity_radius().ok());
                    v["gallery_diameter"] = json!(x.diameter()?);
                } else {
                    merge(&mut v, analyze_chamber_system(x)?);
                }
                reports.push(v);
            }
            Ok(json!({ "command": "graph analyze", "inputs": reports, "pass": pass }))
        }
        GraphCmd::DiameterCheck { family, p } => {
            let mut pass = true;
            let mut reports = vec![];
            for input in family.load()? {
                let mut r = input.complex.distance_theorem_check()?;
                if let Some(p) = p {
                    r.p = *p;
                    r.bounds = bounds::diameter_bounds(*p, r.q, r.chambers as f64, &input.complex.group)?;
                    r.pass = r.diameter as f64 <= r.bounds.diameter_upper;
                }
                pass &= r.pass;
                let mut v = json!({ "input": input.name });
                merge(&mut v, r.to_json());
                reports.push(v);
            }
            Ok(json!({ "command": "graph diameter-check", "inputs": reports, "pass": pass }))
        }
        GraphCmd::Serre { family, samples, radius } => {
            let inputs = family.load()?;
            let xs: Vec<ChamberComplex> = inputs.iter().map(|i| i.complex.clone()).collect();
            let h = simple_walk(&xs[0].group, &xs[0].params);
            let (points, rows) = serre_check(&xs, &h, *samples, *radius)?;
            Ok(json!({
                "command": "graph serre",
                "operator": "h_s0 + h_s1",
                "tree_radius": radius,
                "sample_points": points.iter().map(|x| reps::clean(*x)).collect::<Vec<_>>(),
                "inputs": inputs.iter().zip(&rows).map(|(i, r)| {
                    let mut v = json!({ "input": i.name });
                    merge(&mut v, r.to_json());
                    v
                }).collect::<Vec<_>>(),
                "pass": true,
            }))
        }
        GraphCmd::AlonBoppana { family, radius } => {
            let inputs = family.load()?;
            let xs: Vec<ChamberComplex> = inputs.iter().map(|i| i.complex.clone()).collect();
            let q = xs[0].q_int()[0] as usize;
            let ball = TreeBall::new(q, *radius)?;
            let h = simple_walk(&ball.group, &ball.params);
            let kesten = ball.kesten_estimate(&h, 4000, 1e-10)?;
            let rows = alon_boppana_check(&xs, &h, &kesten)?;
            let pass = rows.iter().all(|r| r.pass);
            Ok(json!({
                "command": "graph alon-boppana",
                "operator": "h_s0 + h_s1",
                "tree_radius": radius,
                "tree_norm_estimate": reps::clean(kesten.estimate),
                "tree_norm_root": reps::clean(kesten.root),
                "inputs": inputs.iter().zip(&rows).map(|(i, r)| {
                    let mut v = json!({ "input": i.name });
                    merge(&mut v, r.to_json());
                    v
                }).collect::<Vec<_>>(),
                "pass": pass,
            }))
        }
    }
}

fn bounds_cmd(cmd: &BoundsCmd) -> Result<Value> {
    let mut v = match cmd {
        BoundsCmd::D { type_name, q, l } => {
            let g = AffineWeyl::load(type_name)?;
            let r = bounds::d_constant(parse_ratio(q)?, *l, &g)?;
            let mut v = json!({ "command": "bounds d", "type": g.rs.name() });
            merge(&mut v, r.to_json());
            v
        }
        BoundsCmd::Hw { group, p, word, radius } => {
            let g = group.group()?;
            let params = group.params(&g)?;
            let w = g.from_word(word)?;
            let mut r = bounds::norm_bound_hw(*p, &w, &g, &params)?;
            if let Some(radius) = radius {
                r = r.with_empirical(tree_norm(&g, &params, &w, *p, *radius)?);
            }
            let mut v = json!({ "command": "bounds hw", "type": g.rs.name() });
            merge(&mut v, r.to_json());
            v["pass"] = json!(r.holds());
            v
        }
        BoundsCmd::Hbeta { group, p, beta } => {
            let g = group.group()?;
            let params = group.params(&g)?;
            let r = bounds::norm_bound_hbeta(*p, &Coweight(beta.clone()), &g, &params)?;
            let mut v = json!({ "command": "bounds hbeta", "type": g.rs.name() });
            merge(&mut v, r.to_json());
            v
        }
        BoundsCmd::Oh { type_name } => {
            let p0 = bounds::oh_p0(type_name)?;
            json!({
                "command": "bounds oh",
                "type": type_name,
                "p0": p0,
                "hypothesis": "rank at least 2",
            })
        }
        BoundsCmd::Diameter { type_name, p, q, n } => {
            let g = AffineWeyl::load(type_name)?;
            let b = bounds::diameter_bounds(*p, *q, *n, &g)?;
            let mut v = json!({
                "command": "bounds diameter",
                "type": g.rs.name(),
                "p": bounds::p_json(*p),
                "q": q,
                "N": n,
                "longest_length": g.rs.longest_length(),
                "rank": g.rank(),
            });
            merge(&mut v, b.to_json());
            v
        }
    };
    if v.get("pass").is_none() {
        v["pass"] = json!(true);
    }
    Ok(v)
}

/// `‖h_w‖_p` on the truncated tree, available for A1 with an integer parameter.
fn tree_norm(g: &AffineWeyl, params: &ParamSystem, w: &crate::weyl::WeylElement, p: f64, radius: usize) -> Result<f64> {
    let q = params.q_int().ok_or_else(|| Error::Usage("tree comparison needs integer q".into()))?;
    if g.rs.name() != "A1" || q.len() != 1 {
        return Err(Error::Unsupported("tree comparison is available for A1 with equal parameters".into()));
    }
    TreeBall::new(q[0] as usize, radius)?.basis_norm(w, p)
}

fn merge(dst: &mut Value, src: Value) {
    if let (Value::Object(d), Value::Object(s)) = (dst, src) {
        for (k, v) in s {
            d.insert(k, v);
        }
    }
}
