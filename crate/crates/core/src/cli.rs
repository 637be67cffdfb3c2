//! Command-line front end. Every command renders into a buffer so that
//! output is canonical: parallel work is collected in input order and
//! nothing depends on timing or thread count.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expansion::{
    classical_matching_sum, classical_specialization, oracle_by_denominator, quantum_expansion, x_of_matching,
};
use crate::kronecker::{build_weighted, dimension_sums, equality_check, kronecker_surface, r_s, recursion_lemma_checks, Family};
use crate::matrix::{self, Matrix};
use crate::seeds::{mutation_sequence, reduced_sequences, QuantumSeed, DEFAULT_DEPTH_LIMIT};
use crate::skein_mult::{classical_identity, multiply_and_certify, relative_exponent_check, SmoothingQuadruple};
use crate::snake::label_snake;
use crate::strings::{enumerate_canonical_submodules, enumerate_strings, parse_string, StringWord};
use crate::surface::{gentle_violation, QuiverWithRelations, Triangulation};
use crate::torus::CompatiblePair;
use crate::valuation::{big_counts, n_pm, omega, omega_prime, valuation_v, valuation_v_gamma};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "qcluster", version, about = "Quantum Laurent expansions of surface cluster variables")]
pub struct Cli {
    /// Surface file (JSON).
    #[arg(long, global = true)]
    pub surface: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true, env = "QCLUSTER_JOBS", default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Keep boundary arcs as frozen variables instead of setting them to 1.
    #[arg(long, global = true)]
    pub frozen: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the surface file, gentleness and the compatible pair.
    Validate,
    /// Run the consistency checks over all strings up to a length.
    Verify {
        /// Largest number of string vertices.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Compare with the variables met along this mutation sequence.
        #[arg(long, value_delimiter = ',')]
        seq: Vec<usize>,
        /// Compare with every reduced mutation sequence up to this length.
        #[arg(long)]
        depth: Option<usize>,
        /// Also run the Kronecker checks for `s` up to this value.
        #[arg(long)]
        s: Option<usize>,
    },
    /// Quantum Laurent expansion of one string.
    Expand {
        #[arg(long)]
        string: String,
        /// Also print the specialization at q = 1.
        #[arg(long)]
        q1: bool,
        /// Print one row per term.
        #[arg(long)]
        terms: bool,
        /// Check bar-invariance, positivity and the classical shadow.
        #[arg(long)]
        check: bool,
    },
    /// Perfect matchings of the snake graph of a string.
    Matchings {
        #[arg(long)]
        string: String,
    },
    /// Canonical submodules of a string module.
    Submodules {
        #[arg(long)]
        string: String,
        #[arg(long)]
        valuations: bool,
    },
    /// Mutate the initial seed along a sequence.
    Mutate {
        #[arg(long, value_delimiter = ',', required = true)]
        seq: Vec<usize>,
    },
    /// The Kronecker family `G_s`/`H_s` on the annulus.
    Kronecker {
        #[arg(long)]
        s: usize,
        #[arg(long, default_value = "G")]
        family: Family,
        #[arg(long)]
        check: bool,
    },
    /// Multiply two cluster variables with a one-dimensional extension space.
    SkeinMultiply {
        /// Exactly two strings.
        #[arg(long, num_args = 1, required = true)]
        string: Vec<String>,
    },
}

/// Rendered output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

struct Sink {
    format: Format,
    buf: String,
    ok: bool,
}

impl Sink {
    fn new(format: Format) -> Self {
        Sink {
            format,
            buf: String::new(),
            ok: true,
        }
    }

    fn line(&mut self, text: String, record: Value) {
        match self.format {
            Format::Text => self.buf.push_str(&text),
            Format::Structured => self.buf.push_str(&record.to_string()),
        }
        self.buf.push('\n');
    }

    fn check(&mut self, name: &str, outcome: std::result::Result<String, String>) {
        let (pass, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.ok &= pass;
        let status = if pass { "pass" } else { "FAIL" };
        self.line(
            format!("{name:<16} {status}  {detail}"),
            json!({"check": name, "status": status, "detail": detail}),
        );
    }

    fn finish(self) -> Output {
        Output {
            text: self.buf,
            success: self.ok,
        }
    }
}

struct Loaded {
    path: PathBuf,
    t: Triangulation,
    q: QuiverWithRelations,
}

fn load(path: &Option<PathBuf>) -> Result<Loaded> {
    let path = path
        .clone()
        .ok_or_else(|| Error::InvalidTriangulation("--surface is required".into()))?;
    let t = Triangulation::load(&path)?;
    let q = t.build_quiver();
    Ok(Loaded { path, t, q })
}

/// The principal pair, or the one with frozen boundary arcs when asked for
/// or when the principal exchange matrix admits no form.
pub fn select_pair(t: &Triangulation, frozen: bool) -> Result<CompatiblePair> {
    if frozen {
        return t.compatible_pair(true);
    }
    match t.compatible_pair(false) {
        Err(Error::NoCompatibleLambda) => t.compatible_pair(true),
        r => r,
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))
}

fn render_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn render_set(s: &[usize]) -> String {
    format!("{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

pub fn run(cli: &Cli) -> Result<Output> {
    let mut sink = Sink::new(cli.format);
    match &cli.command {
        Command::Validate => cmd_validate(cli, &mut sink),
        Command::Verify { max_len, seq, depth, s } => {
            let opts = VerifyOptions {
                max_len: *max_len,
                seq: seq.clone(),
                depth: *depth,
                kronecker: *s,
            };
            pool(cli.jobs)?.install(|| cmd_verify(cli, &opts, &mut sink))
        }
        Command::Expand { string, q1, terms, check } => cmd_expand(cli, string, *q1, *terms, *check, &mut sink),
        Command::Matchings { string } => cmd_matchings(cli, string, &mut sink),
        Command::Submodules { string, valuations } => cmd_submodules(cli, string, *valuations, &mut sink),
        Command::Mutate { seq } => cmd_mutate(cli, seq, &mut sink),
        Command::Kronecker { s, family, check } => cmd_kronecker(*s, *family, *check, &mut sink),
        Command::SkeinMultiply { string } => cmd_skein(cli, string, &mut sink),
    }?;
    Ok(sink.finish())
}

/// Surface invariants, gentleness and the compatible pair, each as a check.
/// Returns the pair when all pass.
fn validation_checks(cli: &Cli, sink: &mut Sink) -> Option<(Loaded, CompatiblePair)> {
    let loaded = match load(&cli.surface) {
        Ok(l) => l,
        Err(e) => {
            sink.check("surface", Err(e.to_string()));
            return None;
        }
    };
    let (t, q) = (&loaded.t, &loaded.q);
    sink.check(
        "surface",
        Ok(format!(
            "{}: {} internal arcs, {} boundary arcs, {} triangles",
            file_name(&loaded.path),
            t.n(),
            t.m() - t.n(),
            t.triangles.len()
        )),
    );
    let gentle = match gentle_violation(q) {
        None => Ok(format!("{} arrows, {} relations", q.arrows.len(), q.relations.len())),
        Some(v) => Err(v),
    };
    let gentle_ok = gentle.is_ok();
    sink.check("gentle", gentle);
    let pair = select_pair(t, cli.frozen);
    match &pair {
        Ok(p) => {
            let mode = match (p.m() == t.n(), cli.frozen) {
                (true, _) => "principal",
                (false, true) => "frozen",
                (false, false) => "frozen (the principal exchange matrix admits no compatible lambda)",
            };
            sink.check(
                "compatible_pair",
                Ok(format!(
                    "{mode}, lambda {}, D = diag({})",
                    render_matrix(&p.lambda),
                    p.d.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
                )),
            )
        }
        Err(Error::NoCompatibleLambda) => sink.check(
            "compatible_pair",
            Err("no skew-symmetric lambda makes lambda * b_tilde = -[D; 0] with D positive; supply one in the surface file".into()),
        ),
        Err(e) => sink.check("compatible_pair", Err(e.to_string())),
    }
    match (gentle_ok, pair) {
        (true, Ok(p)) => Some((loaded, p)),
        _ => None,
    }
}

fn file_name(p: &Path) -> String {
    p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn cmd_validate(cli: &Cli, sink: &mut Sink) -> Result<()> {
    validation_checks(cli, sink);
    Ok(())
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_len: usize,
    pub seq: Vec<usize>,
    pub depth: Option<usize>,
    pub kronecker: Option<usize>,
}

/// Names of the per-string checks, in reporting order.
pub const STRING_CHECKS: [&str; 8] = [
    "counts",
    "bijection",
    "omega",
    "valuation",
    "factorization",
    "expansion",
    "bar_invariance",
    "positivity",
];

type Outcome = std::result::Result<(), String>;

/// All per-string checks for `w`, in the order of [`STRING_CHECKS`].
pub fn string_checks(w: &StringWord, t: &Triangulation, q: &QuiverWithRelations, pair: &CompatiblePair) -> Vec<Outcome> {
    let mut out = vec![Ok(()); STRING_CHECKS.len()];
    let err = |e: Error| e.to_string();
    let g = match label_snake(w, t, q) {
        Ok(g) => g,
        Err(e) => return vec![Err(format!("snake graph: {e}")); STRING_CHECKS.len()],
    };
    let ms = g.enumerate_matchings();
    let subs = enumerate_canonical_submodules(w);

    if ms.len() != subs.len() {
        out[0] = Err(format!("{} matchings, {} canonical submodules", ms.len(), subs.len()));
    }

    let images: std::result::Result<Vec<Vec<usize>>, Error> = ms.iter().map(|p| g.matching_to_submodule(p, w)).collect();
    out[1] = match images {
        Err(e) => Err(err(e)),
        Ok(mut im) => {
            im.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            let back = subs
                .iter()
                .find(|s| g.matching_from_tiles(s).and_then(|p| g.enclosed_tiles(&p)).as_ref() != Ok(*s));
            match back {
                _ if im != subs => Err("images of the matchings are not the canonical submodules".into()),
                Some(s) => Err(format!("submodule {} does not round-trip", render_set(s))),
                None => Ok(()),
            }
        }
    };

    out[2] = (|| -> Outcome {
        for n in &subs {
            let p = g.matching_from_tiles(n).map_err(err)?;
            for j in 1..=w.len() {
                if !g.can_twist(&p, j) {
                    continue;
                }
                let k = w.vertices[j - 1];
                let (_, _, nm, np) = big_counts(w, t, q, j, n).map_err(err)?;
                let scan = n_pm(&g, j, &p, k).map_err(err)?;
                if (nm, np) != scan {
                    return Err(format!("N at {} tile {j}: module {:?}, snake {scan:?}", render_set(n), (nm, np)));
                }
                let (o, op) = (omega(&g, j, &p).map_err(err)?, omega_prime(w, t, q, j, n).map_err(err)?);
                if o != op {
                    return Err(format!("Omega at {} tile {j}: snake {o}, module {op}", render_set(n)));
                }
            }
        }
        Ok(())
    })();

    out[3] = (|| -> Outcome {
        let v = valuation_v(&g).map_err(err)?;
        let vg = valuation_v_gamma(w, t, q).map_err(err)?;
        let [lo, hi] = g.boundary_matchings().map_err(err)?;
        if v[&lo] != 0 || v[&hi] != 0 {
            return Err(format!("v(P_-) = {}, v(P_+) = {}", v[&lo], v[&hi]));
        }
        for (p, x) in &v {
            let n = g.matching_to_submodule(p, w).map_err(err)?;
            if vg.get(&n) != Some(x) {
                return Err(format!("at {}: v = {x}, v_gamma = {:?}", render_set(&n), vg.get(&n)));
            }
        }
        Ok(())
    })();

    out[4] = (|| -> Outcome {
        let rank = pair.m();
        let b = &pair.b_tilde;
        let base = x_of_matching(&g.minimal_matching().map_err(err)?, &g, w, rank);
        for p in &ms {
            let n = g.matching_to_submodule(p, w).map_err(err)?;
            let shift = matrix::mul_vec(b, &w.dimension_vector(&n, matrix::cols(b)));
            let expect: Vec<i64> = base.iter().zip(&shift).map(|(a, s)| a + s).collect();
            let got = x_of_matching(p, &g, w, rank);
            if got != expect {
                return Err(format!("at {}: x(P) = {got:?}, x(P_-) + B dim = {expect:?}", render_set(&n)));
            }
        }
        Ok(())
    })();

    match quantum_expansion(w, t, q, pair) {
        Err(e) => {
            for o in &mut out[5..] {
                *o = Err(e.to_string());
            }
        }
        Ok(e) => {
            let x = &e.torus_element;
            if !x.is_bar_invariant() {
                out[6] = Err(format!("{x} is not bar-invariant"));
            }
            if !x.has_nonnegative_coefficients() {
                out[7] = Err(format!("{x} has a negative coefficient"));
            }
        }
    }
    out
}

fn repro(cli: &Cli, loaded: &Loaded, cmd: &str, w: &StringWord) -> String {
    let frozen = if cli.frozen { " --frozen" } else { "" };
    format!(
        "reproduce: qcluster --surface {}{frozen} {cmd} --string \"{}\"",
        loaded.path.display(),
        w.render(&loaded.q)
    )
}

fn cmd_verify(cli: &Cli, opts: &VerifyOptions, sink: &mut Sink) -> Result<()> {
    let Some((loaded, pair)) = validation_checks(cli, sink) else {
        return Ok(());
    };
    let (t, q) = (&loaded.t, &loaded.q);
    let strings = enumerate_strings(q, opts.max_len);
    let results: Vec<Vec<Outcome>> = strings.par_iter().map(|w| string_checks(w, t, q, &pair)).collect();
    for (i, name) in STRING_CHECKS.iter().enumerate() {
        let failure = strings.iter().zip(&results).find_map(|(w, r)| r[i].as_ref().err().map(|e| (w, e)));
        let outcome = match failure {
            None => Ok(format!("{} strings with at most {} vertices", strings.len(), opts.max_len)),
            Some((w, e)) => Err(format!("{}: {e}; {}", w.render(q), repro(cli, &loaded, "matchings", w))),
        };
        sink.check(name, outcome);
    }

    let mut seqs: Vec<Vec<usize>> = (1..=opts.seq.len()).map(|l| opts.seq[..l].to_vec()).collect();
    if let Some(d) = opts.depth {
        seqs.extend(reduced_sequences(t.n(), d));
    }
    if !seqs.is_empty() {
        let oracle = enumerate_strings(q, DEFAULT_DEPTH_LIMIT);
        let initial = QuantumSeed::initial(pair.clone());
        let limit = DEFAULT_DEPTH_LIMIT.max(seqs.iter().map(Vec::len).max().unwrap_or(0));
        let checked: Vec<Result<Option<String>>> = seqs
            .par_iter()
            .map(|s| {
                let seed = mutation_sequence(&initial, s, limit)?;
                oracle_by_denominator(&seed.cluster[s[s.len() - 1] - 1], t, q, &pair, &oracle)
            })
            .collect();
        let failure = seqs.iter().zip(&checked).find_map(|(s, r)| match r {
            Ok(None) => None,
            Ok(Some(d)) => Some(format!("sequence {s:?}: {d}")),
            Err(e) => Some(format!("sequence {s:?}: {e}")),
        });
        sink.check(
            "mutation",
            failure.map_or_else(|| Ok(format!("{} mutation sequences", seqs.len())), Err),
        );
    }

    if let Some(smax) = opts.kronecker {
        let per_s: Vec<std::result::Result<(), String>> = (0..=smax).into_par_iter().map(kronecker_checks).collect();
        let failure = per_s.into_iter().find_map(|r| r.err());
        sink.check(
            "kronecker",
            failure.map_or_else(|| Ok(format!("G_s and H_s for s <= {smax}")), Err),
        );
    }
    Ok(())
}

/// Equality per dimension vector, `r_s` against the expansion, and the
/// recursion relations, for one `s`.
pub fn kronecker_checks(s: usize) -> std::result::Result<(), String> {
    let e = |x: Error| format!("s = {s}: {x}");
    let (t, q) = kronecker_surface().map_err(e)?;
    let pair = t.compatible_pair(false).map_err(e)?;
    let g = build_weighted(Family::G, s).map_err(e)?;
    let mut snakes = vec![g.clone()];
    if s >= 1 {
        snakes.push(build_weighted(Family::H, s).map_err(e)?);
    }
    for k in &snakes {
        if let Some((dim, a, v)) = equality_check(k).map_err(e)?.into_iter().next() {
            return Err(format!("{:?}_{s} at dimension {dim:?}: alpha sum {a}, v sum {v}", k.family));
        }
    }
    let expansion = quantum_expansion(&g.string, &t, &q, &pair).map_err(e)?.torus_element;
    if r_s(&g, &pair).map_err(e)? != expansion {
        return Err(format!("r_{s} differs from the expansion of {}", g.string.render(&q)));
    }
    if s >= 1 {
        if let Some(f) = recursion_lemma_checks(s).map_err(e)? {
            return Err(f);
        }
    }
    Ok(())
}

fn parse_in(loaded: &Loaded, s: &str) -> Result<StringWord> {
    parse_string(&loaded.q, s)
}

fn with_pair(cli: &Cli) -> Result<(Loaded, CompatiblePair)> {
    let loaded = load(&cli.surface)?;
    let pair = select_pair(&loaded.t, cli.frozen)?;
    Ok((loaded, pair))
}

fn cmd_expand(cli: &Cli, s: &str, q1: bool, terms: bool, check: bool, sink: &mut Sink) -> Result<()> {
    let (loaded, pair) = with_pair(cli)?;
    let w = parse_in(&loaded, s)?;
    let e = quantum_expansion(&w, &loaded.t, &loaded.q, &pair)?;
    let x = &e.torus_element;
    sink.line(
        format!("X = {x}"),
        json!({"string": w.render(&loaded.q), "expansion": x.to_string(), "terms": x.len()}),
    );
    if terms {
        for term in &e.per_term {
            sink.line(
                format!(
                    "  N = {:<12} dim {:?}  v = {:>3}  X^{:?}",
                    render_set(&term.index_set),
                    term.dimension,
                    term.valuation,
                    term.exponent
                ),
                json!({"term": term}),
            );
        }
    }
    if q1 {
        let c = classical_specialization(&e);
        sink.line(format!("q=1: {c}"), json!({"classical": c.to_string()}));
    }
    if check {
        sink.check(
            "bar_invariance",
            if x.is_bar_invariant() { Ok(String::new()) } else { Err(x.to_string()) },
        );
        sink.check(
            "positivity",
            if x.has_nonnegative_coefficients() { Ok(String::new()) } else { Err(x.to_string()) },
        );
        let classical = classical_matching_sum(&w, &loaded.t, &loaded.q, pair.m())?;
        sink.check(
            "classical",
            if classical == classical_specialization(&e) {
                Ok("q=1 equals the matching sum".into())
            } else {
                Err(format!("matching sum {classical}"))
            },
        );
    }
    Ok(())
}

fn cmd_matchings(cli: &Cli, s: &str, sink: &mut Sink) -> Result<()> {
    let loaded = load(&cli.surface)?;
    let w = parse_in(&loaded, s)?;
    let g = label_snake(&w, &loaded.t, &loaded.q)?;
    let v = valuation_v(&g)?;
    let rank = loaded.t.m();
    let mut rows = Vec::new();
    for (p, val) in &v {
        rows.push((g.enclosed_tiles(p)?, *val, x_of_matching(p, &g, &w, rank), g.edge_weight(p, rank)));
    }
    rows.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    sink.line(
        format!("{} tiles, {} matchings", g.d(), rows.len()),
        json!({"string": w.render(&loaded.q), "tiles": g.d(), "matchings": rows.len()}),
    );
    for (tiles, val, x, wt) in rows {
        sink.line(
            format!("  enclosed {:<12} v = {val:>3}  weight {wt:?}  x {x:?}", render_set(&tiles)),
            json!({"enclosed": tiles, "valuation": val, "weight": wt, "exponent": x}),
        );
    }
    Ok(())
}

fn cmd_submodules(cli: &Cli, s: &str, valuations: bool, sink: &mut Sink) -> Result<()> {
    let loaded = load(&cli.surface)?;
    let w = parse_in(&loaded, s)?;
    let vg = if valuations {
        Some(valuation_v_gamma(&w, &loaded.t, &loaded.q)?)
    } else {
        None
    };
    let n = loaded.t.n();
    let subs = enumerate_canonical_submodules(&w);
    sink.line(
        format!("{} canonical submodules", subs.len()),
        json!({"string": w.render(&loaded.q), "submodules": subs.len()}),
    );
    for sub in subs {
        let dim = w.dimension_vector(&sub, n);
        let v = vg.as_ref().map(|t| t[&sub]);
        let text = match v {
            Some(v) => format!("  {:<12} dim {dim:?}  v = {v:>3}", render_set(&sub)),
            None => format!("  {:<12} dim {dim:?}", render_set(&sub)),
        };
        sink.line(text, json!({"index_set": sub, "dimension": dim, "valuation": v}));
    }
    Ok(())
}

fn cmd_mutate(cli: &Cli, seq: &[usize], sink: &mut Sink) -> Result<()> {
    let (_, pair) = with_pair(cli)?;
    let seed = mutation_sequence(&QuantumSeed::initial(pair), seq, DEFAULT_DEPTH_LIMIT.max(seq.len()))?;
    sink.line(
        format!("B = {}", render_matrix(&seed.pair.b_tilde)),
        json!({"b_tilde": seed.pair.b_tilde}),
    );
    sink.line(format!("L = {}", render_matrix(&seed.pair.lambda)), json!({"lambda": seed.pair.lambda}));
    for (i, x) in seed.cluster.iter().enumerate() {
        sink.line(format!("X{} = {x}", i + 1), json!({"index": i + 1, "variable": x.to_string()}));
    }
    Ok(())
}

fn cmd_kronecker(s: usize, family: Family, check: bool, sink: &mut Sink) -> Result<()> {
    let k = build_weighted(family, s)?;
    let (_, q) = kronecker_surface()?;
    sink.line(
        format!("{family:?}_{s}: {} = {} tiles", k.string.render(&q), k.tiles()),
        json!({"family": family, "s": s, "string": k.string.render(&q), "tiles": k.tiles()}),
    );
    for ((u, w), (a, v)) in dimension_sums(&k)? {
        sink.line(
            format!("  dim ({u},{w})  alpha: {a}  v: {v}"),
            json!({"dimension": [u, w], "alpha": a.to_string(), "v": v.to_string()}),
        );
    }
    if family == Family::G {
        let (t, _) = kronecker_surface()?;
        let r = r_s(&k, &t.compatible_pair(false)?)?;
        sink.line(format!("r_{s} = {r}"), json!({"r_s": r.to_string()}));
    }
    if check {
        sink.check("kronecker", kronecker_checks(s).map(|_| format!("s = {s}")));
    }
    Ok(())
}

fn render_quad(q: &QuiverWithRelations, quad: &SmoothingQuadruple) -> [String; 4] {
    let r = |u: &Option<StringWord>| u.as_ref().map_or_else(|| "-".to_string(), |w| w.render(q));
    [r(&quad.u1), r(&quad.u2), r(&quad.u3), r(&quad.u4)]
}

fn cmd_skein(cli: &Cli, strings: &[String], sink: &mut Sink) -> Result<()> {
    let [a, b] = strings else {
        return Err(Error::Parse(format!("skein-multiply takes two strings, got {}", strings.len())));
    };
    let (loaded, pair) = with_pair(cli)?;
    let (v, w) = (parse_in(&loaded, a)?, parse_in(&loaded, b)?);
    let c = multiply_and_certify(&v, &w, &loaded.t, &loaded.q, &pair)?;
    let u = render_quad(&loaded.q, &c.quad);
    sink.line(
        format!(
            "{:?} extension ({}), smoothings ({}) ({}) | ({}) ({})",
            c.quad.kind,
            if c.forward { "M(v) by M(w)" } else { "M(w) by M(v)" },
            u[0],
            u[1],
            u[2],
            u[3]
        ),
        json!({"kind": c.quad.kind, "forward": c.forward, "smoothings": u}),
    );
    sink.line(
        format!("X_v X_w = q^({}) M1 + q^({}) M2,  lambda = {}", c.alpha, c.beta, c.lambda_display()),
        json!({"alpha": c.alpha.to_string(), "beta": c.beta.to_string(), "lambda": c.lambda_display()}),
    );
    sink.line(format!("M1 = {}", c.m1), json!({"m1": c.m1.to_string(), "frozen1": c.frozen1}));
    sink.line(format!("M2 = {}", c.m2), json!({"m2": c.m2.to_string(), "frozen2": c.frozen2}));
    sink.check(
        "identity",
        if c.identity_verified && relative_exponent_check(&c) { Ok(String::new()) } else { Err(c.product.to_string()) },
    );
    sink.check("classical", if classical_identity(&c) { Ok(String::new()) } else { Err("q=1 mismatch".into()) });
    Ok(())
}
