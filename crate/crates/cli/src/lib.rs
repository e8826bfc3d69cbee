//! The `tug` command line: load a game file, run a predicate, solution or
//! analysis, and print a deterministic report.
//!
//! Exit codes: 0 when the command succeeds or the tested property holds, 1
//! when the property fails (a witness is printed), 2 on input or usage errors.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use tugames::analysis::{
    construct_core_element_3p, core_nonempty, core_nonempty_3p, encourages_on, in_core, induced_scheme,
    is_convex_3p_closed_form, is_pmas, three_player_stats, ConstructionCase, CoreCertificateSource,
};
use tugames::format::{parse_allocation, parse_game, write_game};
use tugames::generators::{generate, GeneratorConfig, GeneratorMode};
use tugames::predicates::{is_convex, is_superadditive};
use tugames::solutions::{max_marginal_average, shapley_by_subsets, tau, tau_unchecked};
use tugames::{Allocation, Coalition, Game, GameError, Rational, SolutionMethod};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILS: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tug", version, about = "Exact solver for cooperative TU games")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convexity, super-additivity and essentiality.
    Check(GameInput),
    /// Compute a solution.
    Solve {
        #[arg(long, value_parser = parse_method)]
        method: SolutionMethod,
        /// Compute τ without requiring convexity.
        #[arg(long)]
        unchecked: bool,
        #[command(flatten)]
        input: GameInput,
    },
    /// Core membership of an allocation, or core non-emptiness.
    Core {
        /// Allocation such as `1=5/3,2=5/3,3=5/3,4=1`.
        #[arg(long, conflicts_with = "nonempty", required_unless_present = "nonempty")]
        test: Option<String>,
        #[arg(long)]
        nonempty: bool,
        #[command(flatten)]
        input: GameInput,
    },
    /// List players that prefer a sub-coalition to the grand coalition.
    Encourage {
        #[arg(long, value_parser = parse_method)]
        method: SolutionMethod,
        #[command(flatten)]
        input: GameInput,
    },
    /// Population monotonicity of the scheme induced by a solution.
    Pmas {
        #[arg(long, value_parser = parse_method)]
        method: SolutionMethod,
        #[command(flatten)]
        input: GameInput,
    },
    /// Explicit core element of a super-additive 3-player game.
    #[command(name = "construct-core3")]
    ConstructCore3(GameInput),
    /// Pair surpluses and closed-form tests of a 3-player game.
    Stats3(GameInput),
    /// Print a seeded random game in `.tug` format.
    Gen {
        #[arg(long, value_parser = parse_mode)]
        mode: GeneratorMode,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Upper bound for each random draw.
        #[arg(long, default_value_t = 5)]
        max: u32,
    },
}

#[derive(Debug, Args)]
struct GameInput {
    /// Game file in `.tug` format.
    file: PathBuf,
    /// Restrict to the subgame on these players, e.g. `1,2,3`.
    #[arg(long, value_parser = parse_coalition)]
    subgame: Option<Coalition>,
}

fn parse_method(s: &str) -> Result<SolutionMethod, String> {
    s.parse()
}

fn parse_mode(s: &str) -> Result<GeneratorMode, String> {
    s.parse()
}

fn parse_coalition(s: &str) -> Result<Coalition, String> {
    let ids = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad player id {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Coalition::from_ids(ids).map_err(|e| e.to_string())
}

/// Everything a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// A report with a text rendering and a JSON rendering of the same fields.
struct Report {
    code: i32,
    lines: Vec<String>,
    json: Map<String, Value>,
}

impl Report {
    fn new(code: i32) -> Self {
        Report { code, lines: Vec::new(), json: Map::new() }
    }

    fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    fn field(&mut self, key: &str, value: Value) -> &mut Self {
        self.json.insert(key.to_string(), value);
        self
    }

    fn render(self, format: Format) -> Outcome {
        let stdout = match format {
            Format::Text => self.lines.iter().map(|l| format!("{l}\n")).collect(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&Value::Object(self.json)).expect("serializable");
                s.push('\n');
                s
            }
        };
        Outcome { code: self.code, stdout, stderr: String::new() }
    }
}

pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(err) => {
            let rendered = err.render().to_string();
            if err.use_stderr() {
                Outcome { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: EXIT_OK, stdout: rendered, stderr: String::new() }
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match execute(&cli.command) {
        Ok(report) => report.render(cli.format),
        Err(message) => Outcome::input_error(message),
    }
}

fn load(input: &GameInput) -> Result<Game, String> {
    let text = fs::read_to_string(&input.file).map_err(|e| format!("{}: {e}", input.file.display()))?;
    let game: Game = parse_game(&text).map_err(|e| format!("{}: {e}", input.file.display()))?;
    match input.subgame {
        Some(a) => game.subgame(a).map_err(|e| e.to_string()),
        None => Ok(game),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn allocation_json(x: &Allocation<Rational>) -> Value {
    Value::Object(x.iter().map(|(p, v)| (p.to_string(), Value::String(v.to_string()))).collect())
}

fn execute(command: &Command) -> Result<Report, String> {
    match command {
        Command::Check(input) => check(&load(input)?),
        Command::Solve { method, unchecked, input } => solve(&load(input)?, *method, *unchecked),
        Command::Core { test: Some(alloc), input, .. } => core_test(&load(input)?, alloc),
        Command::Core { test: None, input, .. } => core_nonempty_report(&load(input)?),
        Command::Encourage { method, input } => encourage(&load(input)?, *method),
        Command::Pmas { method, input } => pmas(&load(input)?, *method),
        Command::ConstructCore3(input) => construct3(&load(input)?),
        Command::Stats3(input) => stats3(&load(input)?),
        Command::Gen { mode, n, seed, max } => gen(*mode, *n, *seed, *max),
    }
}

fn check(game: &Game) -> Result<Report, String> {
    let convex = is_convex(game);
    let superadditive = is_superadditive(game);
    let essential = game.is_essential();
    let mut report = Report::new(if convex.passed() { EXIT_OK } else { EXIT_PROPERTY_FAILS });
    report.line(format!(
        "convex: {}, superadditive: {}, essential: {}",
        yes_no(convex.passed()),
        yes_no(superadditive.passed()),
        yes_no(essential)
    ));
    if let Some(w) = &convex.witness {
        report.line(format!("convexity violated: {w}"));
    }
    if let Some(w) = &superadditive.witness {
        report.line(format!("super-additivity violated: {w}"));
    }
    report
        .field("convex", json!(convex.passed()))
        .field("superadditive", json!(superadditive.passed()))
        .field("essential", json!(essential))
        .field("convexity_witness", json!(convex.witness.map(|w| w.to_string())))
        .field("superadditivity_witness", json!(superadditive.witness.map(|w| w.to_string())));
    Ok(report)
}

fn solve(game: &Game, method: SolutionMethod, unchecked: bool) -> Result<Report, String> {
    let mut report = Report::new(EXIT_OK);
    report.field("method", json!(method.name()));
    match method {
        SolutionMethod::Shapley => {
            let x = shapley_by_subsets(game);
            report.line(x.to_string()).field("allocation", allocation_json(&x));
        }
        SolutionMethod::Tau => {
            let (x, diag) = if unchecked { tau_unchecked(game) } else { tau(game) }.map_err(|e| e.to_string())?;
            report
                .line(x.to_string())
                .line(format!("lambda: {}", diag.lambda))
                .field("allocation", allocation_json(&x))
                .field("lambda", json!(diag.lambda.to_string()))
                .field("essential", json!(diag.essential))
                .field("convexity_checked", json!(diag.convexity_checked));
            if !diag.convexity_checked {
                report.line("convexity: unchecked");
            }
        }
        SolutionMethod::MaxMarginalAverage => {
            let (x, diag) = max_marginal_average(game).map_err(|e| e.to_string())?;
            let orders: Vec<String> = diag.maximizers.iter().map(|o| o.to_string()).collect();
            report
                .line(x.to_string())
                .line(format!("maximizers: {}", orders.join(" ")))
                .field("allocation", allocation_json(&x))
                .field("maximizers", json!(orders))
                .field("max_squared_norm", json!(diag.max_squared_norm.to_string()));
        }
    }
    Ok(report)
}

fn core_test(game: &Game, alloc: &str) -> Result<Report, String> {
    let x: Allocation<Rational> = parse_allocation(alloc).map_err(|e| format!("allocation: {e}"))?;
    let result = in_core(game, &x).map_err(|e| e.to_string())?;
    let mut report = Report::new(if result.member { EXIT_OK } else { EXIT_PROPERTY_FAILS });
    report
        .line(format!("member: {}", yes_no(result.member)))
        .line(format!("efficient: {}", yes_no(result.efficient)))
        .field("member", json!(result.member))
        .field("efficient", json!(result.efficient));
    match &result.violation {
        Some(v) => {
            report.line(format!("violation: {}: {} < {}", v.coalition, v.allocated, v.value)).field(
                "violation",
                json!({
                    "coalition": v.coalition.players().map(|p| p.get()).collect::<Vec<_>>(),
                    "allocated": v.allocated.to_string(),
                    "value": v.value.to_string(),
                }),
            );
        }
        None => {
            report.field("violation", Value::Null);
        }
    }
    Ok(report)
}

fn core_nonempty_report(game: &Game) -> Result<Report, String> {
    let result = core_nonempty(game).map_err(|e| e.to_string())?;
    let mut report = Report::new(if result.nonempty { EXIT_OK } else { EXIT_PROPERTY_FAILS });
    report
        .line(format!("core: {}", if result.nonempty { "nonempty" } else { "empty" }))
        .field("nonempty", json!(result.nonempty));
    match (&result.certificate, result.source) {
        (Some(x), Some(source)) => {
            let source = match source {
                CoreCertificateSource::ConvexMarginalVector => "convex-marginal-vector",
                CoreCertificateSource::Elimination => "elimination",
            };
            report
                .line(format!("certificate: {x}"))
                .line(format!("source: {source}"))
                .field("certificate", allocation_json(x))
                .field("source", json!(source));
        }
        _ => {
            report.field("certificate", Value::Null).field("source", Value::Null);
        }
    }
    Ok(report)
}

fn encourage(game: &Game, method: SolutionMethod) -> Result<Report, String> {
    let result = encourages_on(game, method).map_err(|e| e.to_string())?;
    let mut report = Report::new(if result.encourages { EXIT_OK } else { EXIT_PROPERTY_FAILS });
    report.field("method", json!(method.name())).field("encourages", json!(result.encourages));
    if result.encourages {
        report.line("encourages: yes");
    }
    let mut violations = Vec::new();
    for v in &result.violations {
        report.line(format!("player {} prefers {}: {} < {}", v.player, v.coalition, v.grand_payoff, v.sub_payoff));
        violations.push(json!({
            "player": v.player.get(),
            "coalition": v.coalition.players().map(|p| p.get()).collect::<Vec<_>>(),
            "grand_payoff": v.grand_payoff.to_string(),
            "sub_payoff": v.sub_payoff.to_string(),
        }));
    }
    report.field("violations", Value::Array(violations));
    Ok(report)
}

fn pmas(game: &Game, method: SolutionMethod) -> Result<Report, String> {
    let scheme = induced_scheme(game, method).map_err(|e| e.to_string())?;
    let result = is_pmas(&scheme).map_err(|e| e.to_string())?;
    let mut report = Report::new(if result.monotone { EXIT_OK } else { EXIT_PROPERTY_FAILS });
    report
        .line(format!("monotone: {}", yes_no(result.monotone)))
        .field("method", json!(method.name()))
        .field("monotone", json!(result.monotone));
    match &result.violation {
        Some(v) => {
            report
                .line(format!(
                    "player {}: {} -> {}: {} > {}",
                    v.player, v.smaller, v.larger, v.smaller_payoff, v.larger_payoff
                ))
                .field(
                    "violation",
                    json!({
                        "player": v.player.get(),
                        "smaller": v.smaller.players().map(|p| p.get()).collect::<Vec<_>>(),
                        "larger": v.larger.players().map(|p| p.get()).collect::<Vec<_>>(),
                        "smaller_payoff": v.smaller_payoff.to_string(),
                        "larger_payoff": v.larger_payoff.to_string(),
                    }),
                );
        }
        None => {
            report.field("violation", Value::Null);
        }
    }
    Ok(report)
}

fn construct3(game: &Game) -> Result<Report, String> {
    let built = match construct_core_element_3p(game) {
        Ok(built) => built,
        Err(e @ (GameError::EmptyCore | GameError::NotSuperadditive(_))) => {
            let mut report = Report::new(EXIT_PROPERTY_FAILS);
            report.line(format!("no construction: {e}")).field("error", json!(e.to_string()));
            return Ok(report);
        }
        Err(e) => return Err(e.to_string()),
    };
    let mut report = Report::new(EXIT_OK);
    report.line(format!("case: {}", built.case)).field("case", json!(built.case.name()));
    match &built.case {
        ConstructionCase::Triangle { a, t } => {
            report
                .line(format!("a: {} {} {}", a[0], a[1], a[2]))
                .line(format!("t: {t}"))
                .field("a", json!(a.iter().map(|v| v.to_string()).collect::<Vec<_>>()))
                .field("t", json!(t.to_string()));
        }
        ConstructionCase::BrokenTriangle { dominant, t } => {
            report
                .line(format!("dominant pair: {{{},{}}}", dominant.0, dominant.1))
                .line(format!("t: {t}"))
                .field("dominant", json!([dominant.0.get(), dominant.1.get()]))
                .field("t", json!(t.to_string()));
        }
    }
    report.line(format!("allocation: {}", built.allocation)).field("allocation", allocation_json(&built.allocation));
    Ok(report)
}

fn stats3(game: &Game) -> Result<Report, String> {
    let stats = three_player_stats(game).map_err(|e| e.to_string())?;
    let [a, b, c] = stats.players;
    let mut report = Report::new(EXIT_OK);
    report
        .line(format!(
            "M{a}{b}={} M{a}{c}={} M{b}{c}={} S={}",
            stats.m12, stats.m13, stats.m23, stats.surplus
        ))
        .field("players", json!([a.get(), b.get(), c.get()]))
        .field("m12", json!(stats.m12.to_string()))
        .field("m13", json!(stats.m13.to_string()))
        .field("m23", json!(stats.m23.to_string()))
        .field("s", json!(stats.surplus.to_string()));
    let superadditive = is_superadditive(game).passed();
    report.line(format!("superadditive: {}", yes_no(superadditive))).field("superadditive", json!(superadditive));
    if superadditive {
        let core = core_nonempty_3p(game).map_err(|e| e.to_string())?;
        let convex = is_convex_3p_closed_form(game).map_err(|e| e.to_string())?;
        report
            .line(format!("core nonempty: {}", yes_no(core)))
            .line(format!("convex: {}", yes_no(convex)))
            .field("core_nonempty", json!(core))
            .field("convex", json!(convex));
    } else {
        report.field("core_nonempty", Value::Null).field("convex", Value::Null);
    }
    Ok(report)
}

fn gen(mode: GeneratorMode, n: usize, seed: u64, max: u32) -> Result<Report, String> {
    let config = GeneratorConfig { n, seed, dividend_max: max, mode };
    let game: Game = generate(&config).map_err(|e| e.to_string())?;
    let text = write_game(&game).map_err(|e| e.to_string())?;
    let mut report = Report::new(EXIT_OK);
    report.line(format!("# gen --mode {mode} --n {n} --seed {seed} --max {max}"));
    for l in text.lines() {
        report.line(l);
    }
    report
        .field("mode", json!(mode.to_string()))
        .field("n", json!(n))
        .field("seed", json!(seed))
        .field("max", json!(max))
        .field("game", json!(text));
    Ok(report)
}
