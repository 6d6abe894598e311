//! `cpm`: query, revise and check counterfactual probability models.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cpm_core::checker::{
    battery, formula_pool, random_cpm, run_battery, run_suite, CheckReport, RandomModelSpec, MAX_RANDOM_ATOMS,
    MAX_RANDOM_RANKS, TOLERANCE,
};
use cpm_core::format::{dump_cpm, format_number, parse_model, LoadedModel};
use cpm_core::imaging::{check_imaging_agreement, SelectionPolicy, SelectionTable};
use cpm_core::logic::dnf_of_worlds;
use cpm_core::simulation::{AdmissibleSequence, CharacterizingFamily};
use cpm_core::{parse_formula, CpmModel, Error, Formula, PossibilityModel, Vocabulary, WorldDistribution, WorldSet};

#[derive(Parser)]
#[command(name = "cpm", version, about = "Counterfactual probability models")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Model file to load.
    #[arg(long, global = true, value_name = "PATH")]
    model: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its canonical form.
    Parse {
        formula: String,
        /// Atom names, separated by spaces or commas (instead of --model).
        #[arg(long)]
        atoms: Option<String>,
    },
    /// List the model's worlds, optionally only those satisfying a formula.
    Worlds {
        #[arg(long)]
        formula: Option<String>,
    },
    /// Evaluate one query against the model.
    Query(QueryArgs),
    /// Revise the model by a formula.
    Revise {
        #[arg(long)]
        by: String,
        /// Natural revision: promote Pl(A) to degree 1 and demote the rest.
        #[arg(long)]
        natural: bool,
        #[arg(long, default_value_t = CpmModel::DEFAULT_DEMOTION)]
        demotion: f64,
    },
    /// Image the factual distribution on a formula.
    Image {
        #[arg(long)]
        by: String,
        #[arg(long, value_enum, default_value = "pl")]
        policy: PolicyArg,
        /// Selection table for `--policy file`.
        #[arg(long, value_name = "PATH")]
        table: Option<PathBuf>,
    },
    /// Compare direct revision with the two conditioning simulations.
    Simulate {
        #[arg(long)]
        by: String,
        #[arg(long)]
        of: String,
    },
    /// Run a check suite on the model, or on a battery of random models.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Battery size when no model is given.
        #[arg(long, default_value_t = 100)]
        models: u64,
    },
    /// Print a seeded random model file.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        atoms: usize,
        #[arg(long, default_value_t = 3)]
        ranks: usize,
        #[arg(long)]
        complete: bool,
    },
}

#[derive(Args)]
#[group(skip)]
#[command(group(ArgGroup::new("query").required(true).multiple(false)))]
struct QueryArgs {
    #[arg(long, group = "query")]
    believes: Option<String>,
    #[arg(long, group = "query")]
    status: Option<String>,
    #[arg(long, group = "query")]
    pi: Option<String>,
    #[arg(long, group = "query")]
    n: Option<String>,
    #[arg(long, group = "query")]
    p: Option<String>,
    #[arg(long, group = "query", requires = "given")]
    cond: Option<String>,
    #[arg(long, group = "query", requires = "given")]
    cf: Option<String>,
    /// `A => B`
    #[arg(long, group = "query")]
    conditional: Option<String>,
    #[arg(long)]
    given: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Pl,
    Centered,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Agm,
    Theorems,
    All,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::Agm => "agm",
            SuiteArg::Theorems => "theorems",
            SuiteArg::All => "all",
        }
    }
}

enum Failure {
    /// Query-level undefinedness; `output` is still printed.
    Undefined { output: String },
    Usage(String),
    Check { output: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

struct Ctx {
    json: bool,
    model: Option<PathBuf>,
}

impl Ctx {
    fn load(&self) -> Result<LoadedModel, Failure> {
        let path = self
            .model
            .as_ref()
            .ok_or_else(|| Failure::Usage("this command needs --model PATH".into()))?;
        load_file(path)
    }

    fn load_cpm(&self) -> Result<CpmModel, Failure> {
        match self.load()? {
            LoadedModel::Cpm(m) => Ok(m),
            LoadedModel::Possibility(_) => Err(Failure::Usage("the model file has no p= weights".into())),
        }
    }

    fn emit(&self, text: String, value: Value) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
            s.push('\n');
            s
        } else {
            text
        }
    }

    fn undefined(&self, query: &str, reason: &str) -> Failure {
        Failure::Undefined {
            output: self.emit("undefined\n".into(), json!({ "query": query, "undefined": true, "reason": reason })),
        }
    }
}

fn load_file(path: &Path) -> Result<LoadedModel, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_model(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn formula(text: &str, vocab: &Vocabulary) -> Result<Formula, Failure> {
    parse_formula(text, vocab).map_err(|e| Failure::Usage(format!("`{text}`: {e}")))
}

fn num(x: f64) -> Value {
    json!(x)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        json: cli.json,
        model: cli.model,
    };
    let result = match cli.command {
        Command::Parse { formula, atoms } => cmd_parse(&ctx, &formula, atoms.as_deref()),
        Command::Worlds { formula } => cmd_worlds(&ctx, formula.as_deref()),
        Command::Query(q) => cmd_query(&ctx, &q),
        Command::Revise { by, natural, demotion } => cmd_revise(&ctx, &by, natural, demotion),
        Command::Image { by, policy, table } => cmd_image(&ctx, &by, policy, table.as_deref()),
        Command::Simulate { by, of } => cmd_simulate(&ctx, &by, &of),
        Command::Check {
            suite,
            depth,
            seed,
            models,
        } => cmd_check(&ctx, suite, depth, seed, models),
        Command::Gen {
            seed,
            atoms,
            ranks,
            complete,
        } => cmd_gen(&ctx, seed, atoms, ranks, complete),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Undefined { output }) => {
            print!("{output}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check { output }) => {
            print!("{output}");
            ExitCode::from(3)
        }
    }
}

fn cmd_parse(ctx: &Ctx, text: &str, atoms: Option<&str>) -> Outcome {
    let vocab = match atoms {
        Some(list) => Vocabulary::new(list.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()))?,
        None => ctx.load()?.vocab().clone(),
    };
    let f = formula(text, &vocab)?;
    let canonical = f.to_text(&vocab);
    let models = f.models(&vocab);
    Ok(ctx.emit(
        format!("{canonical}\n"),
        json!({ "formula": canonical, "models": models.count(), "worlds": vocab.world_count() }),
    ))
}

fn cmd_worlds(ctx: &Ctx, filter: Option<&str>) -> Outcome {
    let loaded = ctx.load()?;
    let base = loaded.base();
    let vocab = base.vocab();
    let selected = match filter {
        Some(text) => formula(text, vocab)?.models(vocab),
        None => vocab.all_worlds(),
    };
    let weights = loaded.as_cpm().map(CpmModel::weights);
    let mut text = String::new();
    let mut rows = Vec::new();
    for w in &selected {
        let label = vocab.world_label(w);
        let pi = base.degree(w);
        let _ = write!(text, "{label}  pi={}", format_number(pi));
        let mut row = json!({ "world": label, "pi": num(pi) });
        if let Some(ws) = weights {
            if pi > 0.0 {
                let _ = write!(text, " p={}", format_number(ws[w.index()]));
                row["p"] = num(ws[w.index()]);
            }
        }
        text.push('\n');
        rows.push(row);
    }
    Ok(ctx.emit(text, json!({ "worlds": rows })))
}

fn cmd_query(ctx: &Ctx, q: &QueryArgs) -> Outcome {
    let loaded = ctx.load()?;
    let base = loaded.base();
    let vocab = base.vocab();
    let f = |t: &str| formula(t, vocab);
    let given = || q.given.as_deref().map(f).transpose().map(|g| g.expect("clap requires --given"));

    let (kind, text, value): (&str, String, Value) = if let Some(a) = &q.believes {
        let v = base.believes(&f(a)?);
        ("believes", v.to_string(), json!(v))
    } else if let Some(a) = &q.status {
        let v = base.status(&f(a)?);
        ("status", v.to_string(), json!(v))
    } else if let Some(a) = &q.pi {
        let v = base.pi_measure(&f(a)?);
        ("pi", format_number(v), num(v))
    } else if let Some(a) = &q.n {
        let v = base.necessity(&f(a)?);
        ("n", format_number(v), num(v))
    } else if let Some(a) = &q.p {
        let v = ctx.load_cpm()?.factual_prob(&f(a)?);
        ("p", format_number(v), num(v))
    } else if let Some(b) = &q.cond {
        let (b, a) = (f(b)?, given()?);
        match ctx.load_cpm()?.conditional_prob(&b, &a) {
            Ok(v) => ("cond", format_number(v), num(v)),
            Err(e) if e.is_undefined() => return Err(ctx.undefined("cond", &e.to_string())),
            Err(e) => return Err(e.into()),
        }
    } else if let Some(b) = &q.cf {
        let (b, a) = (f(b)?, given()?);
        match ctx.load_cpm()?.counterfactual_prob(&b, &a) {
            Ok(v) => ("cf", format_number(v), num(v)),
            Err(e) if e.is_undefined() => return Err(ctx.undefined("cf", &e.to_string())),
            Err(e) => return Err(e.into()),
        }
    } else if let Some(c) = &q.conditional {
        let (a, b) = c
            .split_once("=>")
            .ok_or_else(|| Failure::Usage(format!("`{c}`: expected `A => B`")))?;
        let v = base.conditional(&f(a)?, &f(b)?);
        ("conditional", v.to_string(), json!(v))
    } else {
        return Err(Failure::Usage("no query given".into()));
    };
    Ok(ctx.emit(format!("{text}\n"), json!({ "query": kind, "value": value })))
}

fn distribution_rows(dist: &WorldDistribution, base: &PossibilityModel) -> (String, Vec<Value>) {
    let vocab = dist.vocab();
    let total = dist.total();
    let width = vocab.atoms().iter().map(|a| a.len() + 2).sum::<usize>().max(5);
    let mut text = format!("{:<width$}  {:>12}  {:>12}\n", "world", "pi", "P");
    let mut rows = Vec::new();
    for (w, mass) in dist.entries() {
        let label = vocab.world_label(w);
        let p = mass / total;
        let pi = base.degree(w);
        let _ = writeln!(text, "{label:<width$}  {:>12}  {:>12}", format_number(pi), format_number(p));
        rows.push(json!({ "world": label, "pi": num(pi), "p": num(p) }));
    }
    (text, rows)
}

fn belief_text(worlds: &WorldSet, vocab: &Vocabulary) -> String {
    dnf_of_worlds(worlds, vocab).to_text(vocab)
}

fn cmd_revise(ctx: &Ctx, by: &str, natural: bool, demotion: f64) -> Outcome {
    let model = ctx.load_cpm()?;
    let vocab = model.vocab().clone();
    let a = formula(by, &vocab)?;
    let a_models = a.models(&vocab);
    let base = model.base();
    if base.pi_set(&a_models) == 0.0 {
        return Err(ctx.undefined("revise", "the condition is impossible"));
    }
    let below = base.is_below_possible_set(&a_models);
    let (dist, degrees_from, beliefs) = if natural {
        let revised = model.natural_revision_set(&a_models, demotion)?;
        let beliefs = revised.base().belief_worlds().clone();
        (revised.factual_distribution(), Some(revised), beliefs)
    } else {
        (model.revise_set(&a_models)?, None, base.revised_set(&a_models))
    };
    let table_base = degrees_from.as_ref().map(CpmModel::base).unwrap_or(base);
    let (table, rows) = distribution_rows(&dist, table_base);
    let belief = belief_text(&beliefs, &vocab);
    let mut text = table;
    let _ = writeln!(text, "beliefs: {belief}");
    let _ = writeln!(text, "below_w: {below}");
    let mut value = json!({
        "by": a.to_text(&vocab),
        "natural": natural,
        "distribution": rows,
        "beliefs": belief,
        "below_w": below,
    });
    if let Some(m) = &degrees_from {
        let _ = write!(text, "\n{}", dump_cpm(m));
        value["demotion"] = num(demotion);
        value["model"] = json!(dump_cpm(m));
    }
    Ok(ctx.emit(text, value))
}

fn cmd_image(ctx: &Ctx, by: &str, policy: PolicyArg, table: Option<&Path>) -> Outcome {
    let model = ctx.load_cpm()?;
    let vocab = model.vocab().clone();
    let a = formula(by, &vocab)?;
    let policy = match (policy, table) {
        (PolicyArg::Pl, _) => SelectionPolicy::PlUniform,
        (PolicyArg::Centered, _) => SelectionPolicy::Centered,
        (PolicyArg::File, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            SelectionPolicy::Explicit(
                SelectionTable::parse(&text, &vocab).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
            )
        }
        (PolicyArg::File, None) => return Err(Failure::Usage("--policy file needs --table PATH".into())),
    };
    if model.base().pi_measure(&a) == 0.0 {
        return Err(ctx.undefined("image", "the condition is impossible"));
    }
    let agreement = check_imaging_agreement(&model, &a, &policy)?;
    let (mut text, rows) = distribution_rows(&agreement.imaged, model.base());
    let _ = writeln!(text, "policy: {}", policy.name());
    let _ = writeln!(text, "mass: {}", format_number(agreement.imaged.total()));
    let _ = writeln!(
        text,
        "max deviation from revision: {}{}",
        format_number(agreement.max_deviation),
        if agreement.pass { "" } else { " (differs)" }
    );
    Ok(ctx.emit(
        text,
        json!({
            "by": a.to_text(&vocab),
            "policy": policy.name(),
            "distribution": rows,
            "mass": num(agreement.imaged.total()),
            "max_deviation": num(agreement.max_deviation),
            "agrees_with_revision": agreement.pass,
        }),
    ))
}

fn cmd_simulate(ctx: &Ctx, by: &str, of: &str) -> Outcome {
    let model = ctx.load_cpm()?;
    let vocab = model.vocab().clone();
    let a = formula(by, &vocab)?;
    let b = formula(of, &vocab)?;
    let sequence = AdmissibleSequence::build(&model);
    let family = CharacterizingFamily::build(&model);
    let results = [
        ("direct", model.counterfactual_prob(&b, &a)),
        ("sequence", sequence.revise(&a, &b)),
        ("single", family.revise(&a, &b)),
    ];
    let mut text = String::new();
    let mut rows = serde_json::Map::new();
    let mut undefined = false;
    for (name, r) in &results {
        let (shown, value) = match r {
            Ok(v) => (format_number(*v), num(*v)),
            Err(e) if e.is_undefined() => {
                undefined = true;
                ("undefined".to_string(), Value::Null)
            }
            Err(e) => return Err(Failure::Usage(e.to_string())),
        };
        let _ = writeln!(text, "{name:<8}  {shown}");
        rows.insert(name.to_string(), value);
    }
    let values: Vec<f64> = results.iter().filter_map(|(_, r)| r.as_ref().ok().copied()).collect();
    let spread = values.iter().fold(0.0f64, |m, x| m.max((x - values[0]).abs()));
    let agree = (values.is_empty() || values.len() == results.len()) && spread <= TOLERANCE;
    let _ = writeln!(text, "agree: {agree}");
    let out = ctx.emit(
        text,
        json!({
            "by": a.to_text(&vocab),
            "of": b.to_text(&vocab),
            "results": Value::Object(rows),
            "agree": agree,
        }),
    );
    if undefined {
        Err(Failure::Undefined { output: out })
    } else {
        Ok(out)
    }
}

fn cmd_check(ctx: &Ctx, suite: SuiteArg, depth: usize, seed: u64, models: u64) -> Outcome {
    let report: CheckReport = match &ctx.model {
        Some(_) => {
            let model = ctx.load_cpm()?;
            let pool = formula_pool(model.vocab(), depth, seed);
            let label = ctx.model.as_ref().map(|p| p.display().to_string()).unwrap_or_default();
            run_suite(&model, &pool, suite.name(), seed, &label)
        }
        None => {
            let items = battery((seed + 1..=seed + models).map(RandomModelSpec::battery), depth);
            run_battery(&items, suite.name(), seed)
        }
    };
    let out = if ctx.json {
        let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        report.render_text()
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Check { output: out })
    }
}

fn cmd_gen(ctx: &Ctx, seed: u64, atoms: usize, ranks: usize, complete: bool) -> Outcome {
    if !(1..=MAX_RANDOM_ATOMS).contains(&atoms) {
        return Err(Failure::Usage(format!("--atoms must be between 1 and {MAX_RANDOM_ATOMS}")));
    }
    if !(1..=MAX_RANDOM_RANKS).contains(&ranks) {
        return Err(Failure::Usage(format!("--ranks must be between 1 and {MAX_RANDOM_RANKS}")));
    }
    let model = random_cpm(RandomModelSpec {
        seed,
        atoms,
        ranks,
        complete,
    });
    let text = dump_cpm(&model);
    let vocab = model.vocab();
    let worlds: Vec<Value> = model
        .base()
        .possible_worlds()
        .iter()
        .map(|w| json!({ "world": vocab.world_label(w), "pi": num(model.base().degree(w)), "p": num(model.weight(w)) }))
        .collect();
    Ok(ctx.emit(text, json!({ "atoms": vocab.atoms(), "worlds": worlds })))
}
