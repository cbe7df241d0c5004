use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use serde_json::{json, Value};

use frobrw::cospan::{Cospan, InterfacedGraph};
use frobrw::dpoi::{find_matches, first_match_strategy, rewrite_closure, Match, Rule};
use frobrw::error::{Error, Result};
use frobrw::io::{cospan_from_json, cospan_to_json, parse_json, parse_rules, rule_to_json, to_dot};
use frobrw::multifrob::{
    multifrob_rewrite, transform_rule, upsilon_normalize_with, BaseRule, LegReport, PolySignature, UpsilonOrder,
};
use frobrw::random::rng;
use frobrw::semantics::{ib_subspace, readoff_span, FiniteModel, IbColours};
use frobrw::signature::Signature;
use frobrw::strategies::group::{group_reduce, group_signature, GroupPack};
use frobrw::strategies::ib::{ib_reduce, ib_reduce_swapped, ib_signature, readoff_system};
use frobrw::term::{interp, parse, Term};

#[derive(Parser)]
#[command(name = "frobrw", version, about = "Rewriting string diagrams modulo Frobenius structure")]
struct Cli {
    /// Seed for every randomized choice.
    #[arg(long, global = true, env = "FROBRW_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse terms and print them with their types.
    Parse(TermArgs),
    /// Interpret a term as a cospan of hypergraphs.
    Interp(InterpArgs),
    /// Rewrite a host with DPO rewriting with interfaces.
    Rewrite(RewriteArgs),
    /// Contract colour-changer pairs until none is left.
    NormalizeUpsilon(UpsilonArgs),
    /// Chrome and transform rules over a signature with extra Frobenius families.
    TransformRules(TransformArgs),
    /// Run the group or interacting-bialgebra strategy.
    Reduce(ReduceArgs),
    /// Evaluate a diagram in a model.
    Semantics(SemanticsArgs),
    /// Render a diagram.
    Export(ExportArgs),
}

#[derive(Args)]
struct TermArgs {
    #[arg(long)]
    sig: PathBuf,
    /// A single term.
    #[arg(long, conflicts_with = "terms", required_unless_present = "terms")]
    term: Option<String>,
    /// A file with one term per line (`#` comments).
    #[arg(long)]
    terms: Option<PathBuf>,
    /// Expected domain and codomain words, e.g. `--check-type 2 1`.
    #[arg(long, num_args = 2, value_names = ["DOM", "COD"])]
    check_type: Option<Vec<String>>,
}

#[derive(Args)]
struct InterpArgs {
    #[command(flatten)]
    terms: TermArgs,
    /// Write the cospan (or JSON lines, one per term) here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A diagram given as a cospan file or as a term.
#[derive(Args)]
struct Input {
    /// Cospan JSON file.
    #[arg(long = "in", conflicts_with = "term")]
    input: Option<PathBuf>,
    /// Term to interpret instead of a file.
    #[arg(long)]
    term: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pick {
    First,
    Random,
}

#[derive(Args)]
struct RewriteArgs {
    #[arg(long)]
    sig: PathBuf,
    /// Rule file: JSON rule(s) or `name : l => r` lines.
    #[arg(long)]
    rules: PathBuf,
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = 100)]
    max_steps: usize,
    /// Which match to apply at each step.
    #[arg(long, value_enum, default_value_t = Pick::First)]
    pick: Pick,
    /// Only list the matches of each rule on the host.
    #[arg(long)]
    list_matches: bool,
    /// Run the multi-Frobenius pipeline: `--sig` declares families, rules and host are base terms.
    #[arg(long, requires = "term")]
    poly: bool,
    /// With `--poly`, skip the rule transform.
    #[arg(long, requires = "poly")]
    naive: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the step log (JSON lines) here.
    #[arg(long)]
    log: Option<PathBuf>,
}

#[derive(Args)]
struct UpsilonArgs {
    #[arg(long)]
    sig: PathBuf,
    #[command(flatten)]
    input: Input,
    /// first, last, middle, alternate or random (seeded by `--seed`).
    #[arg(long, default_value = "first")]
    order: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    /// Base signature with `family` declarations.
    #[arg(long)]
    sig: PathBuf,
    /// Base rules, `name : l => r` per line.
    #[arg(long)]
    rules: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the polychromatic signature (JSON).
    #[arg(long)]
    sig_out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyName {
    Group,
    Ib,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    strategy: StrategyName,
    /// Signature; defaults to `m, u, i` over `w` (group) or colours `b r` (ib).
    #[arg(long)]
    sig: Option<PathBuf>,
    #[command(flatten)]
    input: Input,
    /// Reduce with the colours exchanged and read off the span form (ib only).
    #[arg(long)]
    colour_swap: bool,
    /// Compare the semantics of input and output.
    #[arg(long)]
    check_semantics: bool,
    #[arg(long, default_value_t = 1000)]
    max_steps: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    log: Option<PathBuf>,
}

#[derive(Args)]
struct SemanticsArgs {
    #[arg(long)]
    sig: PathBuf,
    #[command(flatten)]
    input: Input,
    /// `gf2` (colours named `b` and `r`) or `finite:<model.json>`.
    #[arg(long)]
    model: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    sig: PathBuf,
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

fn load_sig(path: &Path) -> Result<Signature> {
    Signature::parse(&read(path)?)
}

fn load_terms(sig: &Signature, a: &TermArgs) -> Result<Vec<Term>> {
    let srcs: Vec<String> = match (&a.term, &a.terms) {
        (Some(t), _) => vec![t.clone()],
        (None, Some(p)) => read(p)?
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
            .filter(|l| !l.is_empty())
            .collect(),
        (None, None) => unreachable!("clap requires one of them"),
    };
    let terms = srcs.iter().map(|s| parse(s, sig)).collect::<Result<Vec<_>>>()?;
    if let Some(ct) = &a.check_type {
        let want = (parse_word(sig, &ct[0])?, parse_word(sig, &ct[1])?);
        for t in &terms {
            let got = t.type_of(sig)?;
            if got != want {
                return Err(Error::TypeMismatch(format!(
                    "`{}` has type {} -> {}, expected {} -> {}",
                    t.display(sig),
                    sig.word_name(&got.0),
                    sig.word_name(&got.1),
                    ct[0],
                    ct[1]
                )));
            }
        }
    }
    Ok(terms)
}

/// A word as in `id[...]`: a number for the monochrome case or colour names.
fn parse_word(sig: &Signature, s: &str) -> Result<Vec<usize>> {
    match parse(&format!("id[{s}]"), sig)? {
        Term::Id(w) => Ok(w),
        _ => unreachable!("id parses to Id"),
    }
}

fn load_cospan(sig: &Signature, input: &Input) -> Result<Cospan> {
    match (&input.input, &input.term) {
        (Some(p), _) => cospan_from_json(sig, &parse_json(&read(p)?)?),
        (None, Some(t)) => interp(sig, &parse(t, sig)?),
        (None, None) => Err(Error::Format("give the diagram with --in or --term".into())),
    }
}

fn cmd_parse(a: &TermArgs) -> Result<()> {
    let sig = load_sig(&a.sig)?;
    let mut out = String::new();
    for t in load_terms(&sig, a)? {
        let (d, c) = t.type_of(&sig)?;
        out += &format!("{} : {} -> {}\n", t.display(&sig), sig.word_name(&d), sig.word_name(&c));
    }
    emit(None, &out)
}

fn cmd_interp(a: &InterpArgs) -> Result<()> {
    let sig = load_sig(&a.terms.sig)?;
    let terms = load_terms(&sig, &a.terms)?;
    let text = if terms.len() == 1 {
        pretty(&cospan_to_json(&sig, &interp(&sig, &terms[0])?))
    } else {
        let mut s = String::new();
        for t in &terms {
            s += &serde_json::to_string(&cospan_to_json(&sig, &interp(&sig, t)?)).expect("json serializes");
            s.push('\n');
        }
        s
    };
    emit(a.out.as_ref(), &text)
}

fn base_rules(sig: &Signature, src: &str) -> Result<Vec<BaseRule>> {
    src.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            let (name, body) =
                l.split_once(':').ok_or_else(|| Error::Format(format!("expected `name : l => r`, got `{l}`")))?;
            let (lt, rt) = body.split_once("=>").ok_or_else(|| Error::Format(format!("rule `{}` has no `=>`", name.trim())))?;
            Ok(BaseRule { name: name.trim().to_string(), lhs: parse(lt, sig)?, rhs: parse(rt, sig)? })
        })
        .collect()
}

fn cmd_rewrite(a: &RewriteArgs, seed: u64) -> Result<()> {
    let sig = load_sig(&a.sig)?;
    if a.poly {
        let ps = PolySignature::new(&sig)?;
        let rules = base_rules(&ps.base, &read(&a.rules)?)?;
        let host = parse(a.input.term.as_deref().expect("clap requires --term"), &ps.base)?;
        let run = multifrob_rewrite(&ps, &rules, &host, a.max_steps, !a.naive)?;
        if let Some(p) = &a.log {
            let lines: Vec<String> = run.log.iter().map(|r| serde_json::to_string(r).expect("log serializes")).collect();
            emit(Some(p), &(lines.join("\n") + "\n"))?;
        }
        eprintln!("{} step(s), fixpoint: {}", run.log.len(), run.fixpoint);
        return emit(a.out.as_ref(), &pretty(&cospan_to_json(&ps.poly, &Cospan::unfold(&run.result, run.n_inputs))));
    }
    let rules = parse_rules(&read(&a.rules)?, &sig)?;
    let (host, n) = load_cospan(&sig, &a.input)?.fold();
    if a.list_matches {
        let mut out = String::new();
        for r in &rules {
            let ms = find_matches(r, &host)?;
            out += &serde_json::to_string(&json!({
                "rule": r.name,
                "matches": ms.iter().map(|m| json!({"hom_nodes": m.hom.nodes, "hom_edges": m.hom.edges, "partition": m.complement.partition})).collect::<Vec<_>>(),
            }))
            .expect("json serializes");
            out.push('\n');
        }
        return emit(a.out.as_ref(), &out);
    }
    let mut r = rng(seed);
    let mut random_pick = |rules: &[Rule], g: &InterfacedGraph| -> Result<Option<(usize, Match)>> {
        let mut all: Vec<(usize, Match)> = Vec::new();
        for (i, rule) in rules.iter().enumerate() {
            all.extend(find_matches(rule, g)?.into_iter().map(|m| (i, m)));
        }
        Ok(all.choose(&mut r).cloned())
    };
    let d = match a.pick {
        Pick::First => rewrite_closure(&rules, &host, a.max_steps, &mut first_match_strategy)?,
        Pick::Random => rewrite_closure(&rules, &host, a.max_steps, &mut random_pick)?,
    };
    if let Some(p) = &a.log {
        emit(Some(p), &(d.log_json_lines() + "\n"))?;
    }
    eprintln!("{} step(s), fixpoint: {}", d.log.len(), d.fixpoint);
    emit(a.out.as_ref(), &pretty(&cospan_to_json(&sig, &Cospan::unfold(&d.result, n))))
}

fn cmd_upsilon(a: &UpsilonArgs, seed: u64) -> Result<()> {
    let sig = load_sig(&a.sig)?;
    let order = match a.order.as_str() {
        "random" => UpsilonOrder::Random(seed),
        s => UpsilonOrder::parse(s)?,
    };
    let (g, n) = load_cospan(&sig, &a.input)?.fold();
    let (nf, steps) = upsilon_normalize_with(&g, order);
    eprintln!("{steps} contraction(s)");
    emit(a.out.as_ref(), &pretty(&cospan_to_json(&sig, &Cospan::unfold(&nf, n))))
}

fn cmd_transform(a: &TransformArgs) -> Result<()> {
    let ps = PolySignature::new(&load_sig(&a.sig)?)?;
    let rules = base_rules(&ps.base, &read(&a.rules)?)?;
    let mut out = Vec::new();
    for r in &rules {
        let (t, reports) = transform_rule(&ps.chrome_rule(&r.name, &r.lhs, &r.rhs)?, ps.base_colours())?;
        for rep in &reports {
            match rep {
                LegReport::Absorbed { leg, changer } => {
                    eprintln!("{}: leg {leg}: absorbed {}", r.name, ps.poly.label_name(changer))
                }
                LegReport::Untouched { leg, reason } => eprintln!("{}: leg {leg}: untouched ({reason})", r.name),
                LegReport::Plain { .. } => {}
            }
        }
        out.push(rule_to_json(&ps.poly, &t));
    }
    if let Some(p) = &a.sig_out {
        emit(Some(p), &pretty(&ps.poly.to_json()))?;
    }
    emit(a.out.as_ref(), &pretty(&Value::Array(out)))
}

fn ib_colours(sig: &Signature) -> Result<IbColours> {
    Ok(IbColours { black: sig.colour_id("b")?, red: sig.colour_id("r")? })
}

fn cmd_reduce(a: &ReduceArgs) -> Result<()> {
    let sig = match (&a.sig, a.strategy) {
        (Some(p), _) => load_sig(p)?,
        (None, StrategyName::Group) => group_signature(),
        (None, StrategyName::Ib) => ib_signature(),
    };
    let (host, n) = load_cospan(&sig, &a.input)?.fold();
    match a.strategy {
        StrategyName::Group => {
            if a.colour_swap {
                return Err(Error::Format("--colour-swap applies to the ib strategy only".into()));
            }
            let pack = GroupPack::new(&sig)?;
            let run = group_reduce(&pack, &host, a.max_steps)?;
            if let Some(p) = &a.log {
                emit(Some(p), &(run.log_json_lines() + "\n"))?;
            }
            eprintln!("{} step(s), {} rejected, fixpoint: {}", run.steps.len(), run.rejected.len(), run.fixpoint);
            if a.check_semantics {
                let z3 = FiniteModel::cyclic_group(&sig, 3)?;
                let same = z3.eval_cospan(&sig, &Cospan::unfold(&host, n))?
                    == z3.eval_cospan(&sig, &Cospan::unfold(&run.result, n))?;
                report_semantics(same, "Z3 relation")?;
            }
            emit(a.out.as_ref(), &pretty(&cospan_to_json(&sig, &Cospan::unfold(&run.result, n))))
        }
        StrategyName::Ib => {
            let c = ib_colours(&sig)?;
            let run = if a.colour_swap { ib_reduce_swapped(&host, n, c)? } else { ib_reduce(&host, n, c)? };
            if let Some(p) = &a.log {
                emit(Some(p), &(run.log_json_lines() + "\n"))?;
            }
            eprintln!("{} elimination(s)", run.iterations);
            if a.colour_swap {
                let span = readoff_span(&run.result, c)?;
                eprintln!("span form: {span}");
            } else {
                for e in readoff_system(&run.result, n, c)? {
                    eprintln!("{e}");
                }
            }
            if a.check_semantics {
                let before = ib_subspace(&host, c)?;
                let after = if a.colour_swap { readoff_span(&run.result, c)? } else { ib_subspace(&run.result, c)? };
                report_semantics(before == after, "GF(2) subspace")?;
            }
            emit(a.out.as_ref(), &pretty(&cospan_to_json(&sig, &Cospan::unfold(&run.result, run.n_inputs))))
        }
    }
}

fn report_semantics(same: bool, what: &str) -> Result<()> {
    if same {
        eprintln!("semantics preserved ({what})");
        Ok(())
    } else {
        Err(Error::Model(format!("{what} changed")))
    }
}

fn cmd_semantics(a: &SemanticsArgs) -> Result<()> {
    let sig = load_sig(&a.sig)?;
    let c = load_cospan(&sig, &a.input)?;
    let v = if a.model == "gf2" {
        let s = ib_subspace(&c.fold().0, ib_colours(&sig)?)?;
        let bits = |v: &Vec<bool>| v.iter().map(|b| if *b { '1' } else { '0' }).collect::<String>();
        json!({
            "model": "gf2",
            "dim": s.dim,
            "basis": s.basis().iter().map(bits).collect::<Vec<_>>(),
        })
    } else if let Some(path) = a.model.strip_prefix("finite:") {
        let model = FiniteModel::from_json(&sig, &parse_json(&read(Path::new(path))?)?)?;
        let r = model.eval_cospan(&sig, &c)?;
        json!({
            "model": "finite",
            "dom": sig.word_name(&r.dom),
            "cod": sig.word_name(&r.cod),
            "tuples": r.tuples,
        })
    } else {
        return Err(Error::Format(format!("unknown model `{}`; use gf2 or finite:<file>", a.model)));
    };
    emit(None, &pretty(&v))
}

fn cmd_export(a: &ExportArgs) -> Result<()> {
    let sig = load_sig(&a.sig)?;
    let c = load_cospan(&sig, &a.input)?;
    let text = match a.format {
        Format::Dot => to_dot(&sig, &c),
        Format::Json => pretty(&cospan_to_json(&sig, &c)),
    };
    emit(a.out.as_ref(), &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Parse(a) => cmd_parse(a),
        Command::Interp(a) => cmd_interp(a),
        Command::Rewrite(a) => cmd_rewrite(a, cli.seed),
        Command::NormalizeUpsilon(a) => cmd_upsilon(a, cli.seed),
        Command::TransformRules(a) => cmd_transform(a),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Semantics(a) => cmd_semantics(a),
        Command::Export(a) => cmd_export(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", json!({"kind": e.kind(), "message": e.to_string()}));
            ExitCode::from(1)
        }
    }
}
