//! `kchevalley`: equivariant K-theory Chevalley expansions on flag varieties.
//!
//! Exit status: 0 on success, 1 when a requested verification fails, 2 on
//! usage or input errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kchevalley::bott_samelson::DEFAULT_MAX_WORD_LEN;
use kchevalley::chevalley::DEFAULT_MAX_REDUCED_WORDS;
use kchevalley::render::{self, BottSamelsonDoc, ExpandDoc, TableDoc, WeightDisplay};
use kchevalley::weyl::DEFAULT_MAX_GROUP_ORDER;
use kchevalley::{
    chevalley_expand, BottSamelson, CartanSpec, ChevalleyExpansion, ExpandOptions, RootSystem,
    SchubertInput, Weight, Word,
};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "kchevalley",
    version,
    about = "Equivariant K-theory Chevalley formula for G/B"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Coordinates used to print exponents.
    #[arg(long, value_enum, default_value_t = Display::Fundamental, global = true)]
    display: Display,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Re-parse emitted JSON and check it matches what was computed.
    #[arg(long, global = true)]
    validate_json: bool,

    /// Worker threads for parallel sweeps (default: one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,

    /// Largest Bott–Samelson word length accepted.
    #[arg(
        long,
        global = true,
        env = "KCHEV_MAX_WORD_LEN",
        default_value_t = DEFAULT_MAX_WORD_LEN as u64,
        value_parser = clap::value_parser!(u64).range(1..=63)
    )]
    max_word_len: u64,

    /// Largest Weyl group enumerated by `table` and `verify`.
    #[arg(
        long,
        global = true,
        env = "KCHEV_MAX_GROUP_ORDER",
        default_value_t = DEFAULT_MAX_GROUP_ORDER as u64,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    max_group_order: u64,

    /// Reduced words tried per element when checking word independence.
    #[arg(
        long,
        global = true,
        env = "KCHEV_MAX_REDUCED_WORDS",
        default_value_t = DEFAULT_MAX_REDUCED_WORDS as u64,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    max_reduced_words: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Display {
    Fundamental,
    RootCoords,
}

impl From<Display> for WeightDisplay {
    fn from(d: Display) -> Self {
        match d {
            Display::Fundamental => WeightDisplay::Fundamental,
            Display::RootCoords => WeightDisplay::Root,
        }
    }
}

#[derive(Args, Debug)]
struct Group {
    /// Cartan type such as `G2`, or a Cartan matrix as JSON, e.g. `[[2,-1],[-1,2]]`.
    #[arg(long = "type", value_name = "TYPE")]
    cartan: String,
}

#[derive(Args, Debug)]
struct WeightArg {
    /// Weight as comma-separated integers (fundamental coordinates unless
    /// `--root-coords` is given).
    #[arg(long, allow_hyphen_values = true)]
    weight: String,

    /// Read `--weight` in simple-root coordinates.
    #[arg(long)]
    root_coords: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand [L_λ]·O_w in Schubert classes.
    Expand {
        #[command(flatten)]
        group: Group,
        /// Reduced word for w, 1-based, e.g. `2,1,2`.
        #[arg(long, conflicts_with = "element", required_unless_present = "element")]
        word: Option<String>,
        /// Any word whose product is w; its canonical reduced word is used.
        #[arg(long)]
        element: Option<String>,
        #[command(flatten)]
        weight: WeightArg,
        /// Specialize to ordinary K-theory (integer coefficients).
        #[arg(long)]
        ordinary: bool,
        /// Check the result against fixed-point localization.
        #[arg(long)]
        verify: bool,
        /// Replace a non-reduced `--word` by the canonical word of its product.
        #[arg(long)]
        auto_reduce: bool,
    },
    /// Expand the line bundle on a Bott–Samelson variety over its cells.
    BottSamelson {
        #[command(flatten)]
        group: Group,
        /// Word, 1-based; need not be reduced.
        #[arg(long)]
        word: String,
        #[command(flatten)]
        weight: WeightArg,
        /// Check the expansion against fixed-point localization.
        #[arg(long)]
        verify: bool,
    },
    /// Expand [L_λ]·O_w for every w in the Weyl group.
    Table {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        weight: WeightArg,
        /// Specialize to ordinary K-theory.
        #[arg(long)]
        ordinary: bool,
        /// Check every row against fixed-point localization.
        #[arg(long)]
        verify: bool,
    },
    /// Run localization, word-independence and positivity checks over the
    /// whole Weyl group for each weight.
    Verify {
        #[command(flatten)]
        group: Group,
        /// Weight to check; repeat for several.
        #[arg(long = "weight", required = true, allow_hyphen_values = true)]
        weights: Vec<String>,
        /// Read weights in simple-root coordinates.
        #[arg(long)]
        root_coords: bool,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<kchevalley::Error> for Failure {
    fn from(e: kchevalley::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    body: String,
    verified: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
        {
            eprintln!("kchevalley: error: cli: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli.global, &out.body) {
                eprintln!("kchevalley: error: cli: {e}");
                return ExitCode::from(2);
            }
            if out.verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("kchevalley: verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("kchevalley: error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("kchevalley: verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(global: &Global, body: &str) -> std::io::Result<()> {
    match &global.output {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}

fn root_system(group: &Group) -> Result<RootSystem, Failure> {
    let spec: CartanSpec = group.cartan.parse()?;
    Ok(RootSystem::new(&spec)?)
}

fn parse_weight(rs: &RootSystem, text: &str, root_coords: bool) -> Result<Weight, Failure> {
    let coords = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Input(format!("cli: invalid weight `{text}`")))?;
    if coords.len() != rs.rank() {
        return Err(Failure::Input(format!(
            "cli: weight `{text}` has {} coordinates, {} expects {}",
            coords.len(),
            rs.label(),
            rs.rank()
        )));
    }
    if root_coords {
        Ok(rs.root_coords_to_weight(&coords)?)
    } else {
        Ok(Weight::new(coords))
    }
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    Ok(text.parse()?)
}

fn to_json<T: serde::Serialize>(doc: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(doc)
        .map_err(|e| Failure::Input(format!("cli: serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// Re-parses `body` as `T` and compares with the document that produced it.
fn self_check<T>(global: &Global, body: &str, doc: &T) -> Result<(), Failure>
where
    T: serde::de::DeserializeOwned + PartialEq,
{
    if !global.validate_json || global.format != Format::Json {
        return Ok(());
    }
    let back: T = serde_json::from_str(body)
        .map_err(|e| Failure::Verification(format!("emitted JSON does not parse: {e}")))?;
    if back != *doc {
        return Err(Failure::Verification(
            "emitted JSON does not round-trip".into(),
        ));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Expand {
            group,
            word,
            element,
            weight,
            ordinary,
            verify,
            auto_reduce,
        } => {
            let rs = root_system(group)?;
            let lambda = parse_weight(&rs, &weight.weight, weight.root_coords)?;
            let input = match (word, element) {
                (Some(w), _) => SchubertInput::Word(parse_word(w)?),
                (None, Some(e)) => SchubertInput::Element(rs.element_from_word(&parse_word(e)?)?),
                (None, None) => unreachable!("clap requires one of --word/--element"),
            };
            let opts = ExpandOptions {
                auto_reduce: *auto_reduce,
                max_word_len: g.max_word_len as usize,
            };
            let ex = chevalley_expand(&rs, &input, &lambda, &opts)?;
            let passed = if *verify {
                check_expansion(&rs, &ex, g)?
            } else {
                true
            };
            let body = render_expansion(&rs, &ex, *ordinary, *verify && passed, *verify, g)?;
            Ok(Output {
                body,
                verified: passed,
            })
        }
        Command::BottSamelson {
            group,
            word,
            weight,
            verify,
        } => {
            let rs = root_system(group)?;
            let lambda = parse_weight(&rs, &weight.weight, weight.root_coords)?;
            let bs = BottSamelson::with_cap(&rs, parse_word(word)?, g.max_word_len as usize)?;
            let ex = bs.line_bundle_expansion(&lambda)?;
            let passed = !*verify || bs.verify_expansion(&ex).passed;
            let display = g.display.into();
            let body = match g.format {
                Format::Text => {
                    let mut s = render::bott_samelson_text(&rs, &ex, display);
                    if *verify {
                        let _ = writeln!(s, "verified: {passed}");
                    }
                    s
                }
                Format::Latex => {
                    let mut s = render::bott_samelson_latex(&rs, &ex, display);
                    if *verify {
                        let _ = writeln!(s, "% verified: {passed}");
                    }
                    s
                }
                Format::Json => {
                    let doc = BottSamelsonDoc::from_expansion(&rs, &ex, *verify && passed);
                    let body = to_json(&doc)?;
                    self_check(g, &body, &doc)?;
                    body
                }
            };
            Ok(Output {
                body,
                verified: passed,
            })
        }
        Command::Table {
            group,
            weight,
            ordinary,
            verify,
        } => {
            let rs = root_system(group)?;
            let lambda = parse_weight(&rs, &weight.weight, weight.root_coords)?;
            let rows = kchevalley::table(&rs, &lambda, g.max_group_order as usize)?;
            let mut passed = true;
            if *verify {
                for row in &rows {
                    passed &= check_expansion(&rs, row, g)?;
                }
            }
            let body = match g.format {
                Format::Json => {
                    let doc = TableDoc {
                        group: rs.label().to_string(),
                        weight: lambda.coords().to_vec(),
                        rows: rows
                            .iter()
                            .map(|ex| expand_doc(&rs, ex, *ordinary, *verify && passed))
                            .collect(),
                        verified: *verify && passed,
                    };
                    let body = to_json(&doc)?;
                    self_check(g, &body, &doc)?;
                    body
                }
                _ => {
                    let mut s = String::new();
                    for (k, ex) in rows.iter().enumerate() {
                        if k > 0 && g.format == Format::Text {
                            s.push('\n');
                        }
                        s.push_str(&render_plain(&rs, ex, *ordinary, g));
                    }
                    if *verify {
                        let prefix = if g.format == Format::Latex { "% " } else { "" };
                        let _ = writeln!(s, "{prefix}verified: {passed}");
                    }
                    s
                }
            };
            Ok(Output {
                body,
                verified: passed,
            })
        }
        Command::Verify {
            group,
            weights,
            root_coords,
        } => {
            let rs = root_system(group)?;
            let weights = weights
                .iter()
                .map(|w| parse_weight(&rs, w, *root_coords))
                .collect::<Result<Vec<_>, _>>()?;
            verify_suite(&rs, &weights, g)
        }
    }
}

/// Localization identity on the word actually used, plus the support and
/// leading-term properties of the grouped result.
fn check_expansion(rs: &RootSystem, ex: &ChevalleyExpansion, g: &Global) -> Result<bool, Failure> {
    let cap = (g.max_word_len as usize).max(ex.word.len());
    let bs = BottSamelson::with_cap(rs, ex.word.clone(), cap)?;
    let report = bs.verify_localization(&ex.weight)?;
    Ok(report.passed && ex.support_below(rs) && ex.leading_term_ok())
}

fn expand_doc(
    rs: &RootSystem,
    ex: &ChevalleyExpansion,
    ordinary: bool,
    verified: bool,
) -> ExpandDoc {
    if ordinary {
        ExpandDoc::from_ordinary(rs, &ex.to_ordinary(), verified)
    } else {
        ExpandDoc::from_expansion(rs, ex, verified)
    }
}

fn render_plain(rs: &RootSystem, ex: &ChevalleyExpansion, ordinary: bool, g: &Global) -> String {
    let display = g.display.into();
    match (g.format, ordinary) {
        (Format::Latex, false) => render::expansion_latex(rs, ex, display),
        (Format::Latex, true) => render::ordinary_latex(&ex.to_ordinary()),
        (_, false) => render::expansion_text(rs, ex, display),
        (_, true) => render::ordinary_text(rs, &ex.to_ordinary()),
    }
}

fn render_expansion(
    rs: &RootSystem,
    ex: &ChevalleyExpansion,
    ordinary: bool,
    verified: bool,
    show_verified: bool,
    g: &Global,
) -> Result<String, Failure> {
    if g.format == Format::Json {
        let doc = expand_doc(rs, ex, ordinary, verified);
        let body = to_json(&doc)?;
        self_check(g, &body, &doc)?;
        return Ok(body);
    }
    let mut s = render_plain(rs, ex, ordinary, g);
    if show_verified {
        let prefix = if g.format == Format::Latex { "% " } else { "" };
        let _ = writeln!(s, "{prefix}verified: {verified}");
    }
    Ok(s)
}

fn verify_suite(rs: &RootSystem, weights: &[Weight], g: &Global) -> Result<Output, Failure> {
    use kchevalley::chevalley::check_positivity;
    use kchevalley::verify_word_independence;

    let elements = rs.all_elements(g.max_group_order as usize)?;
    let word_cap = rs.positive_roots().len().max(g.max_word_len as usize);
    let mut all_passed = true;
    let mut reports = Vec::new();
    let mut text = String::new();
    let _ = writeln!(text, "group: {}", rs.label());
    let _ = writeln!(text, "elements: {}", elements.len());

    for lambda in weights {
        let mut fixed_points = 0usize;
        let mut loc_failures = Vec::new();
        let mut words_checked = 0usize;
        let mut truncated = 0usize;
        let mut wi_failures = Vec::new();
        for w in &elements {
            let bs = BottSamelson::with_cap(rs, w.reduced_word().clone(), word_cap)?;
            let report = bs.verify_localization(lambda)?;
            fixed_points += report.cells.len();
            if !report.passed {
                loc_failures.push(w.name());
            }
            let wi = verify_word_independence(rs, w, lambda, g.max_reduced_words as usize)?;
            words_checked += wi.words_checked;
            truncated += usize::from(wi.truncated);
            if !wi.passed {
                wi_failures.push(w.name());
            }
        }
        let positivity = if lambda.is_dominant() {
            let p = check_positivity(rs, lambda, g.max_group_order as usize)?;
            let failures: Vec<String> = p
                .failures()
                .map(|e| format!("(w={}, v={})", e.w.name(), e.v.name()))
                .collect();
            Some((p.entries.len(), failures))
        } else {
            None
        };
        let passed = loc_failures.is_empty()
            && wi_failures.is_empty()
            && positivity.as_ref().is_none_or(|(_, f)| f.is_empty());
        all_passed &= passed;

        let status = |ok: bool| if ok { "pass" } else { "FAIL" };
        let _ = writeln!(text, "weight {lambda}:");
        let _ = writeln!(
            text,
            "  localization: {} words, {fixed_points} fixed points, {}",
            elements.len(),
            status(loc_failures.is_empty())
        );
        for f in &loc_failures {
            let _ = writeln!(text, "    failed at {f}");
        }
        let _ = writeln!(
            text,
            "  word independence: {words_checked} reduced words{}, {}",
            if truncated > 0 {
                format!(" ({truncated} elements truncated)")
            } else {
                String::new()
            },
            status(wi_failures.is_empty())
        );
        for f in &wi_failures {
            let _ = writeln!(text, "    failed at {f}");
        }
        match &positivity {
            Some((n, failures)) => {
                let _ = writeln!(
                    text,
                    "  positivity: {n} coefficients, {}",
                    status(failures.is_empty())
                );
                for f in failures {
                    let _ = writeln!(text, "    negative at {f}");
                }
            }
            None => {
                let _ = writeln!(text, "  positivity: skipped (weight not dominant)");
            }
        }

        reports.push(json!({
            "weight": lambda.coords(),
            "localization": {
                "words": elements.len(),
                "fixed_points": fixed_points,
                "failures": loc_failures,
                "passed": loc_failures.is_empty(),
            },
            "word_independence": {
                "reduced_words": words_checked,
                "truncated_elements": truncated,
                "failures": wi_failures,
                "passed": wi_failures.is_empty(),
            },
            "positivity": positivity.as_ref().map(|(n, failures)| json!({
                "coefficients": n,
                "failures": failures,
                "passed": failures.is_empty(),
            })),
            "passed": passed,
        }));
    }
    let _ = writeln!(text, "result: {}", if all_passed { "pass" } else { "FAIL" });

    let body = match g.format {
        Format::Json => {
            let doc = json!({
                "group": rs.label(),
                "elements": elements.len(),
                "weights": reports,
                "verified": all_passed,
            });
            let body = to_json(&doc)?;
            self_check(g, &body, &doc)?;
            body
        }
        Format::Text => text,
        Format::Latex => text.lines().map(|l| format!("% {l}\n")).collect(),
    };
    Ok(Output {
        body,
        verified: all_passed,
    })
}
