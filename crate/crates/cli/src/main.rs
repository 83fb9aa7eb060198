//! `operad-forge`: split presentations, run the verification suites and the
//! Rota-Baxter pipelines from the command line.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error,
//! 3 internal theorem violation.

mod load;
mod render;

use clap::{Args, Parser, Subcommand};
use operad_forge::morphisms::{self, CanonicalVariant};
use operad_forge::rota_baxter::{self as rb, SearchSpace};
use operad_forge::span::{span_relate, SpanRelation};
use operad_forge::splitting::split_presentation;
use operad_forge::tree::{compositions, enumerate_decorated, enumerate_shapes};
use operad_forge::{catalog, Error, Presentation, Report, Result, Status, Sym, Tree};
use render::{Format, Glyphs};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "operad-forge", version, about = "Split operads along configurations and check the results")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Glyph table for split generators, `id=glyph;id=glyph`.
    #[arg(long, global = true)]
    glyphs: Option<String>,
}

#[derive(Args, Clone)]
struct PresArg {
    /// `builtin:Name` or a presentation JSON file.
    #[arg(long)]
    presentation: String,
}

#[derive(Args, Clone)]
struct ConfigArg {
    /// `arity`, `power`, `trivial`, `capped:m`, `singletons_below:m` or a JSON file.
    #[arg(long)]
    config: String,
}

#[derive(Args, Clone)]
struct RbArgs {
    /// `builtin:upper-triangular`, `builtin:complement-bracket[:s1,s2,s3,s4]` or a JSON file.
    #[arg(long)]
    algebra: String,
    #[command(flatten)]
    presentation: PresArg,
    #[command(flatten)]
    config: ConfigArg,
    /// Weight λ as `p/q`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    weight: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a presentation, or the members of a configuration.
    Show {
        #[arg(long)]
        presentation: Option<String>,
        #[arg(long)]
        config: Option<String>,
        /// Largest arity listed for a configuration.
        #[arg(long, default_value_t = 4)]
        leaf_max: usize,
    },
    /// Print the split presentation.
    Split {
        #[command(flatten)]
        presentation: PresArg,
        #[command(flatten)]
        config: ConfigArg,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Check an operator against the Rota-Baxter type identity.
    RbCheck {
        #[command(flatten)]
        rb: RbArgs,
        #[arg(long)]
        operator: String,
    },
    /// Exhaustive search for nonzero operators with entries from a finite set.
    RbSearch {
        #[command(flatten)]
        rb: RbArgs,
        /// Comma-separated candidate entries.
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        entries: String,
        /// `all`, `off-diagonal` or `i,j;i,j` (zero-based).
        #[arg(long, default_value = "all")]
        positions: String,
        #[arg(long, default_value_t = 1000)]
        max_results: usize,
    },
    /// The split algebra induced by an operator, verified against the split presentation.
    RbInduce {
        #[command(flatten)]
        rb: RbArgs,
        #[arg(long)]
        operator: String,
    },
    /// Check a module, and optionally a relative operator on it.
    ModuleCheck {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        presentation: PresArg,
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long)]
        module: String,
        /// Relative operator `U -> A`, checked directly and through the lifted operator.
        #[arg(long)]
        operator: Option<String>,
    },
    /// Split algebra to canonical module and back. With `--operator` the
    /// split algebra is first induced from it.
    Roundtrip {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        presentation: PresArg,
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long)]
        operator: Option<String>,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Sum of the splittings of every decorated tree equals the sum of its labels.
    SplittingSum {
        #[command(flatten)]
        presentation: PresArg,
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long, default_value_t = 5)]
        leaf_max: usize,
    },
    /// Canonical morphisms from the presentation to its splitting.
    Canonical {
        #[command(flatten)]
        presentation: PresArg,
        #[command(flatten)]
        config: ConfigArg,
        /// `sum-arity`, `sum-full` or `top`; all three when omitted.
        #[arg(long)]
        variant: Option<String>,
    },
    /// Closure of a configuration under meets.
    Closure {
        #[command(flatten)]
        config: ConfigArg,
    },
    /// Restriction from a larger configuration to `--config`.
    Restriction {
        #[command(flatten)]
        presentation: PresArg,
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long)]
        larger: String,
    },
    /// The split morphism induced by a signed generator map `g=h;g=-h`.
    Morphism {
        #[command(flatten)]
        presentation: PresArg,
        #[arg(long)]
        target: String,
        #[arg(long)]
        map: String,
        #[command(flatten)]
        config: ConfigArg,
    },
    /// Compare splittings with the named presentations they are known to equal.
    KnownSplitting {
        /// Builtin source name; every known splitting when omitted.
        #[arg(long)]
        presentation: Option<String>,
        #[arg(long)]
        config: Option<String>,
    },
    /// Compare the orbit-closed relation spans of two presentations.
    Span {
        #[command(flatten)]
        presentation: PresArg,
        #[arg(long)]
        other: String,
    },
    /// A-infinity bookkeeping for arity `n` (2..=6 when omitted).
    Ainf {
        #[arg(long)]
        n: Option<usize>,
    },
    /// The ternary commutator diagram.
    Diagram,
    /// Counts of planar reduced trees against a recursion over compositions.
    TreeCounts {
        #[arg(long, default_value_t = 7)]
        leaf_max: usize,
    },
    /// Normal forms: idempotence and equivariance under child permutations.
    NormalForm {
        #[command(flatten)]
        presentation: PresArg,
        #[arg(long, default_value_t = 4)]
        leaf_max: usize,
    },
    /// Validate a presentation.
    Presentation {
        #[command(flatten)]
        presentation: PresArg,
    },
    /// Check an algebra against a presentation, or against its splitting with `--config`.
    Algebra {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        presentation: PresArg,
        #[arg(long)]
        config: Option<String>,
    },
}

/// What a verb produced: a report decides the exit code, anything else exits 0.
enum Output {
    Report(Report),
    Plain(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|out| {
        let (text, code) = match out {
            Output::Report(r) => {
                let code = if r.passed() { 0 } else { 1 };
                (render::report(&r, cli.format), code)
            }
            Output::Plain(s) => (s, 0),
        };
        match &cli.out {
            Some(path) => std::fs::write(path, text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e @ Error::TheoremViolation(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn glyphs_for(cli: &Cli, base: Option<(&Presentation, &operad_forge::Configuration)>) -> Result<Glyphs> {
    let mut g = match base {
        Some((p, c)) => render::default_glyphs(p, c),
        None => Glyphs::new(),
    };
    if let Some(s) = &cli.glyphs {
        g.extend(render::parse_glyphs(s)?);
    }
    Ok(g)
}

fn run(cli: &Cli) -> Result<Output> {
    let f = cli.format;
    match &cli.cmd {
        Cmd::Show { presentation, config, leaf_max } => match (presentation, config) {
            (Some(p), _) => {
                let p = load::presentation(p)?;
                Ok(Output::Plain(render::presentation(&p, &glyphs_for(cli, None)?, f, true)))
            }
            (None, Some(c)) => Ok(Output::Plain(render::config(&load::config(c)?, *leaf_max, f)?)),
            (None, None) => {
                let names = catalog::builtin_names().join("\n") + "\n";
                Ok(Output::Plain(names))
            }
        },
        Cmd::Split { presentation, config } => {
            let p = load::presentation(&presentation.presentation)?;
            let c = load::config(&config.config)?;
            let sp = split_presentation(&p, &c)?;
            Ok(Output::Plain(render::presentation(&sp, &glyphs_for(cli, Some((&p, &c)))?, f, false)))
        }
        Cmd::Verify { check } => verify(check).map(Output::Report),
        Cmd::RbCheck { rb, operator } => {
            let (alg, p, c, lambda) = rb_inputs(rb)?;
            let op = load::operator(operator)?;
            Ok(Output::Report(rb::check_crb_operator(&alg, &p, &op, &c, &lambda)?))
        }
        Cmd::RbSearch { rb, entries, positions, max_results } => {
            let (alg, p, c, lambda) = rb_inputs(rb)?;
            let mut space = SearchSpace::new(load::entries(entries)?, *max_results);
            if let Some(pos) = load::positions(positions, alg.dim)? {
                space = space.with_positions(pos);
            }
            let found = rb::search_rb_operators(&alg, &p, &c, &lambda, &space)?;
            Ok(Output::Plain(render::operators(&found, f)))
        }
        Cmd::RbInduce { rb, operator } => {
            let (alg, p, c, lambda) = rb_inputs(rb)?;
            let op = load::operator(operator)?;
            let split = rb::induce_split_algebra(&alg, &p, &op, &c, &lambda)?;
            Ok(Output::Plain(render::algebra(&split, f)))
        }
        Cmd::ModuleCheck { algebra, presentation, config, module, operator } => {
            let alg = load::algebra(algebra)?;
            let p = load::presentation(&presentation.presentation)?;
            let c = load::config(&config.config)?;
            let m = load::module(module)?;
            let mut report = rb::check_module(&alg, &m, &p, &c)?;
            if let Some(op) = operator {
                if report.passed() {
                    report.extend(rb::check_relative_rb_lifted(&load::operator(op)?, &alg, &m, &p, &c)?);
                } else {
                    report.push("relative operator", Status::NotApplicable, "module check failed");
                }
            }
            Ok(Output::Report(report))
        }
        Cmd::Roundtrip { algebra, presentation, config, operator } => {
            let alg = load::algebra(algebra)?;
            let p = load::presentation(&presentation.presentation)?;
            let c = load::config(&config.config)?;
            let split = match operator {
                Some(op) => rb::induce_split_algebra(&alg, &p, &load::operator(op)?, &c, &operad_forge::rational::one())?,
                None => alg,
            };
            Ok(Output::Report(rb::canonical_module_from_split(&split, &p, &c)?.report))
        }
    }
}

type RbInputs = (rb::Algebra, Presentation, operad_forge::Configuration, operad_forge::Rational);

fn rb_inputs(a: &RbArgs) -> Result<RbInputs> {
    Ok((
        load::algebra(&a.algebra)?,
        load::presentation(&a.presentation.presentation)?,
        load::config(&a.config.config)?,
        load::weight(&a.weight)?,
    ))
}

fn verify(check: &Check) -> Result<Report> {
    match check {
        Check::SplittingSum { presentation, config, leaf_max } => morphisms::check_splitting_sum(
            &load::presentation(&presentation.presentation)?,
            &load::config(&config.config)?,
            *leaf_max,
        ),
        Check::Canonical { presentation, config, variant } => {
            let p = load::presentation(&presentation.presentation)?;
            let c = load::config(&config.config)?;
            let variants = match variant {
                Some(v) => vec![CanonicalVariant::parse(v)?],
                None => CanonicalVariant::all().to_vec(),
            };
            let mut report = Report::new();
            for v in variants {
                report.extend(morphisms::check_canonical_morphisms(&p, &c, v)?);
            }
            Ok(report)
        }
        Check::Closure { config } => {
            let c = load::config(&config.config)?;
            let mut report = Report::new();
            let name = format!("closure of {}", c.name());
            match c.validate_closure() {
                Ok(()) => report.pass_fail(name, true, format!("all reduced trees up to {} leaves", c.n_max())),
                Err(w) => report.push_witness(name, Status::Fail, "meet outside the configuration", w.to_string()),
            }
            report.pass_fail(format!("S-invariance of {}", c.name()), c.is_s_invariant(), "");
            Ok(report)
        }
        Check::Restriction { presentation, config, larger } => morphisms::restriction_morphism(
            &load::presentation(&presentation.presentation)?,
            &load::config(&config.config)?,
            &load::config(larger)?,
        ),
        Check::Morphism { presentation, target, map, config } => {
            let src = load::presentation(&presentation.presentation)?;
            let dst = load::presentation(target)?;
            morphisms::induced_split_morphism(&src, &dst, &parse_map(map)?, &load::config(&config.config)?)
        }
        Check::KnownSplitting { presentation, config } => {
            let source = presentation.as_deref().map(|s| s.strip_prefix("builtin:").unwrap_or(s));
            let config = config.as_deref().map(|s| s.strip_prefix("builtin:").unwrap_or(s));
            let chosen: Vec<_> = catalog::known_splittings()
                .into_iter()
                .filter(|k| source.is_none_or(|s| k.source == s))
                .filter(|k| config.is_none_or(|c| k.config.name() == c))
                .collect();
            if chosen.is_empty() {
                return Err(Error::Precondition("no known splitting matches".into()));
            }
            let mut report = Report::new();
            for k in &chosen {
                report.extend(morphisms::compare_known(k)?.0);
            }
            Ok(report)
        }
        Check::Span { presentation, other } => {
            let a = load::presentation(&presentation.presentation)?;
            let b = load::presentation(other)?;
            let cmp = span_relate(&a.orbit_closure()?, &b.orbit_closure()?);
            let mut report = Report::new();
            let name = format!("span({}) vs span({})", a.name, b.name);
            let detail = format!("ranks {} and {}, relation {:?}", cmp.rank_a, cmp.rank_b, cmp.relation);
            match cmp.a_witness.as_ref().or(cmp.b_witness.as_ref()) {
                Some(w) => report.push_witness(name, Status::Fail, detail, w.to_string()),
                None => report.pass_fail(name, cmp.relation == SpanRelation::Equal, detail),
            }
            Ok(report)
        }
        Check::Ainf { n } => {
            let ns: Vec<usize> = match n {
                Some(n) => vec![*n],
                None => (2..=6).collect(),
            };
            let mut report = Report::new();
            for n in ns {
                report.extend(morphisms::ainf_split_bookkeeping(n)?);
            }
            Ok(report)
        }
        Check::Diagram => morphisms::ternary_diagram(),
        Check::TreeCounts { leaf_max } => Ok(tree_counts(*leaf_max)),
        Check::NormalForm { presentation, leaf_max } => {
            normal_form_report(&load::presentation(&presentation.presentation)?, *leaf_max)
        }
        Check::Presentation { presentation } => {
            let p = load::presentation(&presentation.presentation)?;
            let mut report = Report::new();
            match p.validate() {
                Ok(()) => report.pass_fail(
                    format!("presentation {}", p.name),
                    true,
                    format!("{} generators, relation span rank {}", p.alphabet().len(), p.span_rank()?),
                ),
                Err(e) => report.pass_fail(format!("presentation {}", p.name), false, e.to_string()),
            }
            Ok(report)
        }
        Check::Algebra { algebra, presentation, config } => {
            let alg = load::algebra(algebra)?;
            let p = load::presentation(&presentation.presentation)?;
            let p = match config {
                Some(c) => split_presentation(&p, &load::config(c)?)?,
                None => p,
            };
            rb::check_algebra(&alg, &p)
        }
    }
}

/// `g=h;g=-h`: the sign goes with the target.
fn parse_map(s: &str) -> Result<BTreeMap<Sym, (Sym, i64)>> {
    let mut out = BTreeMap::new();
    for entry in s.split(';').filter(|e| !e.trim().is_empty()) {
        let (from, to) =
            entry.split_once('=').ok_or_else(|| Error::Parse(format!("map entry `{entry}` is not g=h")))?;
        let to = to.trim();
        let (sign, to) = match to.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, to.strip_prefix('+').unwrap_or(to)),
        };
        out.insert(Sym::new(from.trim()), (Sym::new(to), sign));
    }
    Ok(out)
}

fn count_by_compositions(n: usize, memo: &mut BTreeMap<usize, u64>) -> u64 {
    if n == 1 {
        return 1;
    }
    if let Some(&v) = memo.get(&n) {
        return v;
    }
    let mut total = 0;
    for k in 2..=n {
        for comp in compositions(n, k) {
            total += comp.iter().map(|&m| count_by_compositions(m, memo)).product::<u64>();
        }
    }
    memo.insert(n, total);
    total
}

fn tree_counts(leaf_max: usize) -> Report {
    let mut report = Report::new();
    let mut memo = BTreeMap::new();
    for n in 1..=leaf_max.min(8) {
        let arities: Vec<usize> = (2..=n.max(2)).collect();
        let got = enumerate_shapes(n, &arities).len() as u64;
        let want = count_by_compositions(n, &mut memo);
        report.pass_fail(format!("reduced trees with {n} leaves"), got == want, format!("enumerated {got}, recursion {want}"));
    }
    report
}

/// For every decorated tree up to `leaf_max` leaves and every permutation of
/// the root's children, `g(c_σ(1), ...)` and `s · h(c_1, ...)` have the same
/// normal form, and normal forms are fixed points.
fn normal_form_report(p: &Presentation, leaf_max: usize) -> Result<Report> {
    let alphabet = p.alphabet();
    let gens = alphabet.ids_with_arity();
    let mut report = Report::new();
    let mut trees = 0usize;
    for n in 2..=leaf_max.min(6) {
        for tree in enumerate_decorated(n, &gens) {
            trees += 1;
            let (_, nf) = alphabet.normal_form(&tree)?;
            let (s, again) = alphabet.normal_form(&nf)?;
            if s != 1 || again != nf {
                report.push_witness("normal form idempotent", Status::Fail, "second pass moved the tree", tree.to_string());
                return Ok(report);
            }
            if !alphabet.is_symmetric() {
                continue;
            }
            let Tree::Node(g, cs) = &tree else { continue };
            for sigma in operad_forge::perm::Perm::all(cs.len()) {
                let images = sigma.images();
                let permuted = Tree::node(g.clone(), images.iter().map(|&i| cs[i as usize - 1].clone()).collect());
                let (h, sign) = alphabet.act(g, &sigma)?;
                let (sa, na) = alphabet.normal_form(&permuted)?;
                let (sb, nb) = alphabet.normal_form(&Tree::node(h, cs.clone()))?;
                if na != nb || sa != sign * sb {
                    report.push_witness(
                        "normal form sign",
                        Status::Fail,
                        format!("permutation {}", sigma.one_line()),
                        tree.to_string(),
                    );
                    return Ok(report);
                }
            }
        }
    }
    report.pass_fail(format!("normal forms of {}", p.name), true, format!("{trees} trees up to {} leaves", leaf_max.min(6)));
    Ok(report)
}
