//! `pres`: command line front end for pres-core.
//!
//! Exit codes: 0 = yes/success, 1 = no, 2 = unknown or capped, 64 = usage
//! error, 65 = input data error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pres_core::decision::{
    conj_bounded, conj_free_group, conj_free_monoid, conj_semi, member_bounded, member_semi,
    wp_bounded, wp_semi, BoundFunction, BoundedQuantity, Verdict, WpMethod,
};
use pres_core::diagrams::build_diagram;
use pres_core::invariants::{
    cost_table, dehn_table, dist_table, gamma0_table, gamma_table, gwork_table, ConjMethod,
    Table1D, Table2D,
};
use pres_core::tietze::{
    apply, check_length_bridge, check_t1_inequality, check_t3_inequality, measure_bound,
    parse_script, TietzeMove,
};
use pres_core::words::Word;
use pres_core::{builtin, CostModel, Derivation, Kind, Presentation, SearchCaps, SearchResult};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "pres", version, about = "Decision procedures on monoid and group presentations")]
struct Cli {
    /// Worker threads for table computations; output is identical for any
    /// value.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CapArgs {
    /// Longest intermediate word a search may visit
    /// [default: max(|u|, |v|) + 4]
    #[arg(long)]
    max_len: Option<usize>,
    /// Largest derivation cost a search may spend.
    #[arg(long, default_value_t = 10_000)]
    max_cost: u64,
    /// Largest number of distinct words a search may settle.
    #[arg(long, default_value_t = 1_000_000)]
    max_states: usize,
}

impl CapArgs {
    fn caps(&self, words: &[&Word]) -> SearchCaps {
        let base = words.iter().map(|w| w.len()).max().unwrap_or(0);
        SearchCaps::new(self.max_len.unwrap_or(base + 4), self.max_cost, self.max_states)
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum CostArg {
    Steps,
    Work,
    Sdl,
}

impl From<CostArg> for CostModel {
    fn from(c: CostArg) -> CostModel {
        match c {
            CostArg::Steps => CostModel::Steps,
            CostArg::Work => CostModel::Work,
            CostArg::Sdl => CostModel::Sdl,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum TableFn {
    Dl,
    Work,
    Sdl,
    Dehn,
    Gwork,
    Gamma,
    Gamma0,
}

#[derive(Copy, Clone, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Copy, Clone, ValueEnum)]
enum DiagramFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a presentation and report its shape.
    Check { file: String },
    /// Search a minimum-cost derivation between two words.
    Derive {
        file: String,
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = CostArg::Steps)]
        cost: CostArg,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        json: bool,
    },
    /// Decide (or semi-decide) whether two words are equal.
    Wp {
        file: String,
        u: String,
        v: String,
        /// JSON bound document: {"quantity": "dl"|"work", "constant": C}
        /// or {"quantity": ..., "values": [[...]]} indexed by (|u|, |v|).
        #[arg(long, conflicts_with = "semi")]
        bound_table: Option<PathBuf>,
        /// Search without a correctness bound; can answer yes or unknown.
        #[arg(long)]
        semi: bool,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate an invariant over word lengths.
    Table {
        file: String,
        #[arg(long = "fn", value_enum)]
        function: TableFn,
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[command(flatten)]
        caps: CapArgs,
        /// Conjugator scan limit for --fn gamma.
        #[arg(long, default_value_t = 4)]
        max_t: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        out: TableFormat,
    },
    /// Decide (or semi-decide) conjugacy of two words.
    Conj {
        file: String,
        a: String,
        b: String,
        /// Constant bound on conjugator length (decisive relative to it).
        #[arg(long, conflicts_with_all = ["free", "semi"])]
        bound: Option<u64>,
        /// Exact free-monoid/free-group procedure for built-ins.
        #[arg(long, conflicts_with = "semi")]
        free: bool,
        #[arg(long)]
        semi: bool,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        json: bool,
    },
    /// Decide (or semi-decide) membership in a finitely generated
    /// submonoid.
    Member {
        file: String,
        w: String,
        /// File with one generator word per line.
        #[arg(long)]
        gens_file: PathBuf,
        /// Constant bound on factor count (decisive relative to it).
        #[arg(long, conflicts_with = "semi")]
        bound: Option<u64>,
        #[arg(long)]
        semi: bool,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate submonoid distortion up to length n.
    Dist {
        file: String,
        #[arg(long)]
        gens_file: PathBuf,
        #[arg(short, default_value_t = 4)]
        n: usize,
        /// Factor-count scan limit per word [default: |w| + 2].
        #[arg(long)]
        bound: Option<u64>,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        out: TableFormat,
    },
    /// Apply a transformation script and optionally verify the invariance
    /// inequalities.
    Tietze {
        file: String,
        #[arg(long)]
        script: PathBuf,
        #[arg(long)]
        check_inequalities: bool,
        /// Table domain M,N for the inequality checks.
        #[arg(long, default_value = "3,3", value_parser = parse_domain)]
        domain: (usize, usize),
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Build and validate a diagram from a derivation document.
    Diagram {
        file: String,
        #[arg(long)]
        derivation: PathBuf,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Dot)]
        out: DiagramFormat,
    },
}

fn parse_domain(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s.split_once(',').ok_or("expected M,N")?;
    Ok((m.trim().parse().map_err(|e| format!("{e}"))?, n.trim().parse().map_err(|e| format!("{e}"))?))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are successful outputs, not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DATA)
        }
    }
}

fn load_presentation(arg: &str) -> Result<Presentation, String> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return builtin(name.trim()).map_err(|e| e.to_string());
    }
    let text = std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
    if arg.ends_with(".json") {
        let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        Presentation::from_json(&v).map_err(|e| e.to_string())
    } else {
        Presentation::from_text(&text).map_err(|e| e.to_string())
    }
}

fn parse_words(p: &Presentation, texts: &[&str]) -> Result<Vec<Word>, String> {
    texts.iter().map(|t| p.alphabet.parse_word(t).map_err(|e| format!("{t}: {e}"))).collect()
}

fn load_gens(p: &Presentation, path: &PathBuf) -> Result<Vec<Word>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if !line.is_empty() {
            out.push(p.alphabet.parse_word(line).map_err(|e| format!("{line}: {e}"))?);
        }
    }
    if out.is_empty() {
        return Err(format!("{}: no generators", path.display()));
    }
    Ok(out)
}

fn verdict_exit(v: &Verdict) -> u8 {
    match v {
        Verdict::Yes(_) => EXIT_YES,
        Verdict::No(_) => EXIT_NO,
        Verdict::Unknown(_) => EXIT_UNKNOWN,
    }
}

fn print_verdict(v: &Verdict, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&v.to_json()).unwrap());
        return;
    }
    match v {
        Verdict::Yes(w) => match w {
            pres_core::decision::Witness::Derivation(d) => {
                println!("yes (derivation with {} steps)", d.len())
            }
            pres_core::decision::Witness::Conjugator(t) => {
                println!("yes (conjugator {})", t.render())
            }
            pres_core::decision::Witness::Monomial(ws) => {
                println!(
                    "yes (product of {} generators: {})",
                    ws.len(),
                    ws.iter().map(Word::render).collect::<Vec<_>>().join(" ")
                )
            }
            pres_core::decision::Witness::NormalForm => println!("yes (equal normal forms)"),
        },
        Verdict::No(c) => {
            if c.unconditional {
                println!("no");
            } else {
                println!("no (relative to bound {:?}, caps {:?})", c.bound_used, c.caps);
            }
        }
        Verdict::Unknown(b) => println!("unknown (budget {} exhausted)", b.budget),
    }
}

fn load_bound_table(path: &PathBuf) -> Result<BoundFunction, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let quantity = match v.get("quantity").and_then(|q| q.as_str()) {
        Some("dl") => BoundedQuantity::Dl,
        Some("work") | Some("omega") => BoundedQuantity::Omega,
        other => return Err(format!("bound table quantity must be dl or work, got {other:?}")),
    };
    if let Some(c) = v.get("constant").and_then(|c| c.as_u64()) {
        return Ok(BoundFunction::constant(quantity, c));
    }
    let rows: Vec<Vec<u64>> = v
        .get("values")
        .and_then(|r| r.as_array())
        .ok_or("bound table needs constant or values")?
        .iter()
        .map(|row| row.as_array().map(|r| r.iter().filter_map(|x| x.as_u64()).collect()))
        .collect::<Option<_>>()
        .ok_or("values must be an array of arrays of numbers")?;
    if rows.is_empty() || rows.iter().any(|r| r.is_empty()) {
        return Err("values must be non-empty".into());
    }
    let name = format!("table {}", path.display());
    // lengths beyond the table clamp to its last row/column
    Ok(BoundFunction::new(quantity, &name, move |args| {
        let m = (args.first().copied().unwrap_or(0) as usize).min(rows.len() - 1);
        let row = &rows[m];
        let n = (args.get(1).copied().unwrap_or(0) as usize).min(row.len() - 1);
        row[n]
    }))
}

fn print_table_1d(t: &Table1D, out: TableFormat) {
    match out {
        TableFormat::Csv => print!("{}", t.to_csv()),
        TableFormat::Json => println!("{}", serde_json::to_string_pretty(&t.to_json()).unwrap()),
    }
}

fn print_table_2d(t: &Table2D, out: TableFormat) {
    match out {
        TableFormat::Csv => print!("{}", t.to_csv()),
        TableFormat::Json => println!("{}", serde_json::to_string_pretty(&t.to_json()).unwrap()),
    }
}

fn run(cmd: Command) -> Result<u8, String> {
    match cmd {
        Command::Check { file } => {
            let p = load_presentation(&file)?;
            println!("kind: {:?}", p.kind);
            println!(
                "letters: {}",
                p.alphabet.names().to_vec().join(" ")
            );
            match p.kind {
                Kind::Monoid => {
                    if let Ok(rules) = p.finite_rules() {
                        println!("rules: {}", rules.len());
                        for r in rules {
                            println!("  {}", r.pair.render());
                        }
                    } else {
                        println!("rules: oracle (budget {})", p.oracle_budget);
                    }
                }
                Kind::Group => {
                    let rs = p.relators().map_err(|e| e.to_string())?;
                    println!("relators: {}", rs.len());
                    for r in rs {
                        println!("  {}", r.render());
                    }
                    let m = p.group_to_monoid().map_err(|e| e.to_string())?;
                    println!(
                        "monoid form: {} rules",
                        m.finite_rules().map_err(|e| e.to_string())?.len()
                    );
                }
            }
            println!("hash: {}", p.content_hash());
            Ok(EXIT_YES)
        }
        Command::Derive { file, u, v, cost, caps, json } => {
            let p = load_presentation(&file)?;
            let words = parse_words(&p, &[&u, &v])?;
            let caps = caps.caps(&[&words[0], &words[1]]);
            let result =
                pres_core::rewrite::min_cost_derivation(&words[0], &words[1], &p, cost.into(), &caps)
                    .map_err(|e| e.to_string())?;
            match result {
                SearchResult::Found { cost, derivation } => {
                    if json {
                        println!("{}", serde_json::to_string_pretty(&derivation.to_json()).unwrap());
                    } else {
                        println!("cost: {cost}");
                        let mut words = vec![derivation.start.render()];
                        for w in derivation.replay().map_err(|e| e.to_string())?.into_iter().skip(1)
                        {
                            words.push(w.render());
                        }
                        println!("derivation: {}", words.join(" -> "));
                    }
                    Ok(EXIT_YES)
                }
                SearchResult::NoDerivationWithinLengthCap => {
                    println!("no derivation within word-length cap {}", caps.max_word_length);
                    Ok(EXIT_NO)
                }
                SearchResult::NotWithinCaps => {
                    println!("unknown: search truncated by caps {caps:?}");
                    Ok(EXIT_UNKNOWN)
                }
            }
        }
        Command::Wp { file, u, v, bound_table, semi, budget, json } => {
            let p = load_presentation(&file)?;
            let words = parse_words(&p, &[&u, &v])?;
            let verdict = if semi {
                wp_semi(&words[0], &words[1], &p, budget).map_err(|e| e.to_string())?
            } else if let Some(path) = bound_table {
                let f = load_bound_table(&path)?;
                wp_bounded(&words[0], &words[1], &p, &f).map_err(|e| e.to_string())?
            } else if let Some(method) = builtin_wp(&file) {
                method.decide(&p, &words[0], &words[1]).map_err(|e| e.to_string())?
            } else {
                return Err("need --bound-table, --semi, or a builtin: presentation".into());
            };
            print_verdict(&verdict, json);
            Ok(verdict_exit(&verdict))
        }
        Command::Table { file, function, m, n, caps, max_t, out } => {
            let p = load_presentation(&file)?;
            let sc = SearchCaps::new(
                caps.max_len.unwrap_or(m.max(n) + 4),
                caps.max_cost,
                caps.max_states,
            );
            match function {
                TableFn::Dl => print_table_2d(
                    &cost_table(&p, m, n, &sc, CostModel::Steps).map_err(|e| e.to_string())?,
                    out,
                ),
                TableFn::Work => print_table_2d(
                    &cost_table(&p, m, n, &sc, CostModel::Work).map_err(|e| e.to_string())?,
                    out,
                ),
                TableFn::Sdl => print_table_2d(
                    &cost_table(&p, m, n, &sc, CostModel::Sdl).map_err(|e| e.to_string())?,
                    out,
                ),
                TableFn::Dehn => {
                    print_table_1d(&dehn_table(&p, n, &sc).map_err(|e| e.to_string())?, out)
                }
                TableFn::Gwork => {
                    print_table_1d(&gwork_table(&p, n, &sc).map_err(|e| e.to_string())?, out)
                }
                TableFn::Gamma => {
                    let method = match builtin_wp(&file) {
                        Some(WpMethod::FreeMonoid) => ConjMethod::FreeMonoid,
                        _ => ConjMethod::Bounded { max_t, wp: WpMethod::Search(sc) },
                    };
                    print_table_2d(&gamma_table(&p, m, n, &sc, &method).map_err(|e| e.to_string())?, out)
                }
                TableFn::Gamma0 => {
                    print_table_2d(&gamma0_table(&p, m, n, &sc).map_err(|e| e.to_string())?, out)
                }
            }
            Ok(EXIT_YES)
        }
        Command::Conj { file, a, b, bound, free, semi, budget, caps, json } => {
            let p = load_presentation(&file)?;
            let words = parse_words(&p, &[&a, &b])?;
            let verdict = if free {
                if p.alphabet.has_involution() {
                    conj_free_group(&words[0], &words[1]).map_err(|e| e.to_string())?
                } else {
                    conj_free_monoid(&words[0], &words[1]).map_err(|e| e.to_string())?
                }
            } else if let Some(c) = bound {
                let f = BoundFunction::constant(BoundedQuantity::Gamma, c);
                let wp = builtin_wp(&file)
                    .unwrap_or_else(|| WpMethod::Search(caps.caps(&[&words[0], &words[1]])));
                conj_bounded(&words[0], &words[1], &p, &f, &wp).map_err(|e| e.to_string())?
            } else if semi {
                conj_semi(&words[0], &words[1], &p, budget).map_err(|e| e.to_string())?
            } else {
                return Err("need --bound, --free, or --semi".into());
            };
            print_verdict(&verdict, json);
            Ok(verdict_exit(&verdict))
        }
        Command::Member { file, w, gens_file, bound, semi, budget, caps, json } => {
            let p = load_presentation(&file)?;
            let w = p.alphabet.parse_word(&w).map_err(|e| e.to_string())?;
            let gens = load_gens(&p, &gens_file)?;
            let verdict = if let Some(c) = bound {
                let f = BoundFunction::constant(BoundedQuantity::DistA, c);
                let wp = builtin_wp(&file).unwrap_or_else(|| WpMethod::Search(caps.caps(&[&w])));
                member_bounded(&w, &gens, &p, &f, &wp).map_err(|e| e.to_string())?
            } else if semi {
                member_semi(&w, &gens, &p, budget).map_err(|e| e.to_string())?
            } else {
                return Err("need --bound or --semi".into());
            };
            print_verdict(&verdict, json);
            Ok(verdict_exit(&verdict))
        }
        Command::Dist { file, gens_file, n, bound, caps, out } => {
            let p = load_presentation(&file)?;
            let gens = load_gens(&p, &gens_file)?;
            let sc = SearchCaps::new(caps.max_len.unwrap_or(n + 4), caps.max_cost, caps.max_states);
            let wp = builtin_wp(&file).unwrap_or(WpMethod::Search(sc));
            let f: Box<dyn Fn(u64) -> u64> = match bound {
                Some(c) => Box::new(move |_| c),
                None => Box::new(|l| l + 2),
            };
            let t = dist_table(&p, &gens, n, &sc, &wp, &f).map_err(|e| e.to_string())?;
            print_table_1d(&t, out);
            Ok(EXIT_YES)
        }
        Command::Tietze { file, script, check_inequalities, domain, caps } => {
            let p = load_presentation(&file)?;
            let text = std::fs::read_to_string(&script)
                .map_err(|e| format!("{}: {e}", script.display()))?;
            let moves = parse_script(&text).map_err(|e| e.to_string())?;
            let sc = SearchCaps::new(
                caps.max_len.unwrap_or(domain.0.max(domain.1) + 4),
                caps.max_cost,
                caps.max_states,
            );
            let mut current = p;
            let mut all_hold = true;
            for (i, mv) in moves.iter().enumerate() {
                let next = apply(&current, mv, &sc).map_err(|e| format!("move {}: {e}", i + 1))?;
                let bound = measure_bound(&current, mv, &sc).map_err(|e| e.to_string())?;
                println!(
                    "move {}: {} (bound {:?}, certified {})",
                    i + 1,
                    mv.kind_name(),
                    bound.bound(),
                    bound.certified
                );
                if check_inequalities {
                    let c = bound.bound().unwrap_or(1).max(1);
                    let (m, n) = domain;
                    match mv {
                        TietzeMove::T1Add { .. } | TietzeMove::T2Remove { .. } => {
                            let r = check_t1_inequality(&current, &next, c, m, n, &sc, CostModel::Steps)
                                .map_err(|e| e.to_string())?;
                            report_check(&format!("move {} dl sandwich", i + 1), r.holds(), &mut all_hold);
                        }
                        TietzeMove::T3AddGenerators { .. } => {
                            let r = check_t3_inequality(&current, &next, c, m, n, &sc, CostModel::Steps)
                                .map_err(|e| e.to_string())?;
                            report_check(&format!("move {} dl bridge", i + 1), r.holds(), &mut all_hold);
                            let v = check_length_bridge(&current, &next, c, m.max(n), &sc)
                                .map_err(|e| e.to_string())?;
                            report_check(
                                &format!("move {} length bridge", i + 1),
                                v.is_empty(),
                                &mut all_hold,
                            );
                        }
                        TietzeMove::T4RemoveGenerators { .. } => {
                            // same bridge, with the roles swapped
                            let r = check_t3_inequality(&next, &current, c, m, n, &sc, CostModel::Steps)
                                .map_err(|e| e.to_string())?;
                            report_check(&format!("move {} dl bridge", i + 1), r.holds(), &mut all_hold);
                        }
                    }
                }
                current = next;
            }
            println!("result:");
            print!("{}", current.to_text().map_err(|e| e.to_string())?);
            Ok(if all_hold { EXIT_YES } else { EXIT_NO })
        }
        Command::Diagram { file, derivation, out } => {
            let p = load_presentation(&file)?;
            let text = std::fs::read_to_string(&derivation)
                .map_err(|e| format!("{}: {e}", derivation.display()))?;
            let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let alphabet: Arc<pres_core::words::Alphabet> = p.alphabet.clone();
            let d = Derivation::from_json(&v, &alphabet).map_err(|e| e.to_string())?;
            let dia = build_diagram(&d, &p).map_err(|e| e.to_string())?;
            let violations = dia.validate(Some(&p));
            match out {
                DiagramFormat::Dot => print!("{}", dia.to_dot()),
                DiagramFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&dia.to_json()).unwrap())
                }
            }
            if violations.is_empty() {
                Ok(EXIT_YES)
            } else {
                for vio in violations {
                    eprintln!("invalid: {vio}");
                }
                Ok(EXIT_NO)
            }
        }
    }
}

fn builtin_wp(file_arg: &str) -> Option<WpMethod> {
    file_arg.strip_prefix("builtin:").and_then(|n| WpMethod::for_builtin(n.trim()))
}

fn report_check(what: &str, ok: bool, all: &mut bool) {
    println!("check {what}: {}", if ok { "holds" } else { "VIOLATED" });
    *all &= ok;
}
