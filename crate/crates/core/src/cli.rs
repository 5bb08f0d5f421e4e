//! Command-line front end: persisted formats, the resumable run manifest and
//! one function per subcommand.
//!
//! Corpus files start with `heronian-corpus v1 n=<n>` followed by one
//! `a b c q` line per triangle (`a >= b >= c`, `q = 4A`), sorted by
//! `(a, b, c)`. Pyramid files start with `perfect-pyramids v1 n=<n>` followed
//! by `a b c d e f surface volume` lines in canonical edge order.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::analysis::{corpus_stats, median_scan, minimal_tuples};
use crate::error::{Error, Result};
use crate::generate::{
    first_difference, generate, generate_range, shard_ranges, Algorithm, AlgorithmRun, Corpus,
    CrossValidation,
};
use crate::geometry::{verify_cluster, LatticePointSet};
use crate::heron::{canonicalize, HeronianTriangle};
use crate::pyramid::{
    canonical_tetrahedron, classify_coincidence, is_perfect_pyramid, mine_equal_sets,
    perfect_pyramids, Coincidence, EqualKey, PerfectPyramid, Tetrahedron,
};

pub const CORPUS_HEADER: &str = "heronian-corpus v1";
pub const PYRAMID_HEADER: &str = "perfect-pyramids v1";

/// Exit statuses.
pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCOMPLETE: u8 = 3;

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Incomplete(_) => EXIT_INCOMPLETE,
        Error::InvalidParameters(_) | Error::Parse { .. } | Error::InvalidPointSet(_) => EXIT_USAGE,
        _ => EXIT_VERIFY,
    }
}

fn parse_header(line: Option<&str>, header: &str, path: &Path) -> Result<u64> {
    let bad = |message: String| Error::Parse {
        path: path.to_path_buf(),
        line: 1,
        message,
    };
    let line = line.ok_or_else(|| bad("empty file".into()))?;
    let rest = line
        .strip_prefix(header)
        .and_then(|r| r.strip_prefix(" n="))
        .ok_or_else(|| bad(format!("expected `{header} n=<n>`, found {line:?}")))?;
    rest.parse()
        .map_err(|e| bad(format!("bad n {rest:?}: {e}")))
}

fn fields<const K: usize>(line: &str, path: &Path, lineno: usize) -> Result<[u64; K]> {
    let bad = |message: String| Error::Parse {
        path: path.to_path_buf(),
        line: lineno,
        message,
    };
    let parts: Vec<&str> = line.split(' ').collect();
    if parts.len() != K {
        return Err(bad(format!("expected {K} fields, found {}", parts.len())));
    }
    let mut out = [0u64; K];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p
            .parse()
            .map_err(|e| bad(format!("bad number {p:?}: {e}")))?;
    }
    Ok(out)
}

pub fn format_corpus(corpus: &Corpus) -> String {
    let mut s = String::with_capacity(24 * corpus.len() + 32);
    writeln!(s, "{CORPUS_HEADER} n={}", corpus.n()).unwrap();
    for t in corpus.triangles() {
        let [a, b, c] = t.sides();
        writeln!(s, "{a} {b} {c} {}", t.quad_area()).unwrap();
    }
    s
}

pub fn parse_corpus(text: &str, path: &Path) -> Result<Corpus> {
    let mut lines = text.split_terminator('\n');
    let n = parse_header(lines.next(), CORPUS_HEADER, path)?;
    let mut triangles: Vec<HeronianTriangle> = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        let bad = |message: String| Error::Parse {
            path: path.to_path_buf(),
            line: lineno,
            message,
        };
        let [a, b, c, q] = fields::<4>(line, path, lineno)?;
        if !(a >= b && b >= c) {
            return Err(bad("sides must be in descending order".into()));
        }
        let tri = canonicalize(a, b, c).map_err(|e| bad(e.to_string()))?;
        let t = HeronianTriangle::with_quad_area(tri, q).map_err(|e| bad(e.to_string()))?;
        if t.diameter() > n {
            return Err(bad(format!("diameter exceeds n={n}")));
        }
        if triangles.last().is_some_and(|prev| prev >= &t) {
            return Err(bad("lines must be strictly increasing".into()));
        }
        triangles.push(t);
    }
    Corpus::new(n, triangles)
}

pub fn read_corpus(path: &Path) -> Result<Corpus> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_corpus(&text, path)
}

/// Writes through a temporary file and a rename.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp).map_err(|e| Error::io(&tmp, e))?;
    f.write_all(contents.as_bytes())
        .map_err(|e| Error::io(&tmp, e))?;
    f.sync_all().map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

pub fn write_corpus(path: &Path, corpus: &Corpus) -> Result<()> {
    write_atomic(path, &format_corpus(corpus))
}

pub fn format_pyramids(n: u64, pyramids: &[PerfectPyramid]) -> String {
    let mut s = String::new();
    writeln!(s, "{PYRAMID_HEADER} n={n}").unwrap();
    for p in pyramids {
        let [a, b, c, d, e, f] = p.edges();
        writeln!(s, "{a} {b} {c} {d} {e} {f} {} {}", p.surface(), p.volume()).unwrap();
    }
    s
}

pub fn parse_pyramids(text: &str, path: &Path) -> Result<(u64, Vec<PerfectPyramid>)> {
    let mut lines = text.split_terminator('\n');
    let n = parse_header(lines.next(), PYRAMID_HEADER, path)?;
    let mut out = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        let bad = |message: String| Error::Parse {
            path: path.to_path_buf(),
            line: lineno,
            message,
        };
        let (head, volume) = line
            .rsplit_once(' ')
            .ok_or_else(|| bad("expected 8 fields".into()))?;
        let [a, b, c, d, e, f, surface] = fields::<7>(head, path, lineno)?;
        let volume: Ratio<u128> = volume
            .parse()
            .map_err(|_| bad(format!("bad volume {volume:?}")))?;
        let tet = Tetrahedron::new([a, b, c, d, e, f]).map_err(|e| bad(e.to_string()))?;
        if canonical_tetrahedron(&tet) != tet {
            return Err(bad("edges are not in canonical order".into()));
        }
        let p = is_perfect_pyramid(&tet).ok_or_else(|| bad("not a perfect pyramid".into()))?;
        if p.surface() != surface || p.volume() != volume {
            return Err(bad("surface or volume does not match the edges".into()));
        }
        out.push(p);
    }
    Ok((n, out))
}

pub fn read_pyramids(path: &Path) -> Result<(u64, Vec<PerfectPyramid>)> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_pyramids(&text, path)
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardRecord {
    pub algorithm: Algorithm,
    pub index: u64,
    pub start: u64,
    pub end: u64,
    pub path: PathBuf,
    pub complete: bool,
    pub triangles: Option<usize>,
}

/// Progress of a sharded `generate` run, stored next to the output as
/// `<out>.manifest.json`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub n: u64,
    pub algorithms: Vec<Algorithm>,
    pub shards: Vec<ShardRecord>,
    pub corpus: PathBuf,
    pub complete: bool,
    pub cross_validation: Option<CrossValidation>,
    pub tool_version: String,
    pub created: u64,
    pub updated: u64,
}

impl RunManifest {
    pub fn new(n: u64, algorithms: &[Algorithm], shards: u64, out: &Path) -> Self {
        let mut records = Vec::new();
        for &alg in algorithms {
            for (i, r) in shard_ranges(alg.outer_limit(n), shards)
                .into_iter()
                .enumerate()
            {
                records.push(ShardRecord {
                    algorithm: alg,
                    index: i as u64,
                    start: *r.start(),
                    end: *r.end(),
                    path: shard_path(out, alg, i as u64),
                    complete: false,
                    triangles: None,
                });
            }
        }
        let t = now();
        Self {
            command: "generate".into(),
            n,
            algorithms: algorithms.to_vec(),
            shards: records,
            corpus: out.to_path_buf(),
            complete: false,
            cross_validation: None,
            tool_version: env!("CARGO_PKG_VERSION").into(),
            created: t,
            updated: t,
        }
    }

    pub fn path_for(out: &Path) -> PathBuf {
        let mut s = out.as_os_str().to_owned();
        s.push(".manifest.json");
        PathBuf::from(s)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))
    }

    pub fn save(&mut self, path: &Path) -> Result<()> {
        self.updated = now();
        let text =
            serde_json::to_string_pretty(self).map_err(|e| Error::Manifest(e.to_string()))?;
        write_atomic(path, &(text + "\n"))
    }

    /// Whether this manifest describes the same run configuration.
    pub fn matches(&self, n: u64, algorithms: &[Algorithm], shards: u64) -> bool {
        self.n == n
            && self.algorithms == algorithms
            && algorithms.iter().all(|&a| {
                self.shards.iter().filter(|s| s.algorithm == a).count() as u64
                    == shards.clamp(1, a.outer_limit(n).max(1))
            })
    }
}

fn shard_path(out: &Path, alg: Algorithm, index: u64) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(format!(".{alg}.shard{index}"));
    PathBuf::from(s)
}

#[derive(Debug, Parser)]
#[command(
    name = "heronian",
    version,
    about = "Integer Heronian triangles and perfect pyramids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate all Heronian triangles with diameter at most n.
    Generate(GenerateArgs),
    /// Search perfect pyramids with longest edge at most n.
    Pyramids(PyramidArgs),
    /// Check a lattice point set for the n2-cluster conditions.
    VerifyCluster(ClusterArgs),
    /// Smallest equal-perimeter, equal-area N-tuples.
    Tuples(TupleArgs),
    /// Rational medians over a corpus.
    Medians(MedianArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmChoice {
    I,
    Ii,
    Iii,
    All,
}

impl AlgorithmChoice {
    fn algorithms(self) -> Vec<Algorithm> {
        match self {
            AlgorithmChoice::I => vec![Algorithm::I],
            AlgorithmChoice::Ii => vec![Algorithm::II],
            AlgorithmChoice::Iii => vec![Algorithm::III],
            AlgorithmChoice::All => Algorithm::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EqualChoice {
    Surface,
    Volume,
    Both,
}

impl From<EqualChoice> for EqualKey {
    fn from(c: EqualChoice) -> Self {
        match c {
            EqualChoice::Surface => EqualKey::Surface,
            EqualChoice::Volume => EqualKey::Volume,
            EqualChoice::Both => EqualKey::Both,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "iii")]
    pub algorithm: AlgorithmChoice,
    /// Number of ranges the outer loop is split into.
    #[arg(long, default_value_t = 1)]
    pub shards: u64,
    /// Run only this shard (0-based); the corpus is written once all shards
    /// are complete.
    #[arg(long)]
    pub shard_index: Option<u64>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct PyramidArgs {
    #[arg(long)]
    pub n: u64,
    /// Triangle corpus complete to at least n; generated in-process if absent.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report groups of primitive pyramids sharing this quantity.
    #[arg(long, value_enum)]
    pub equal: Option<EqualChoice>,
    /// Keep only pyramids of these coincidence classes, e.g. `6(i)`.
    #[arg(long = "class")]
    pub classes: Vec<String>,
}

#[derive(Debug, Args)]
pub struct ClusterArgs {
    pub points: PathBuf,
}

#[derive(Debug, Args)]
pub struct TupleArgs {
    #[arg(long, required_unless_present = "n")]
    pub corpus: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long = "N", default_value_t = 2)]
    pub tuple_size: usize,
}

#[derive(Debug, Args)]
pub struct MedianArgs {
    #[arg(long, required_unless_present = "n")]
    pub corpus: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<u64>,
    /// Print only the largest number of rational medians found.
    #[arg(long)]
    pub max_count: bool,
}

/// Runs a parsed command line, writing results to `out`.
pub fn run(cli: Cli, out: &mut dyn std::io::Write) -> ExitCode {
    let res = match cli.command {
        Command::Generate(a) => cmd_generate(&a, out),
        Command::Pyramids(a) => cmd_pyramids(&a, out),
        Command::VerifyCluster(a) => cmd_verify_cluster(&a, out),
        Command::Tuples(a) => cmd_tuples(&a, out),
        Command::Medians(a) => cmd_medians(&a, out),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn io_out(e: std::io::Error) -> Error {
    Error::io("<stdout>", e)
}

pub fn cmd_generate(args: &GenerateArgs, out: &mut dyn std::io::Write) -> Result<u8> {
    if args.n == 0 {
        return Err(Error::InvalidParameters("--n must be at least 1".into()));
    }
    if args.shards == 0 {
        return Err(Error::InvalidParameters(
            "--shards must be at least 1".into(),
        ));
    }
    let algorithms = args.algorithm.algorithms();
    let manifest_path = RunManifest::path_for(&args.out);
    let mut manifest = match RunManifest::load(&manifest_path) {
        Ok(m) if m.matches(args.n, &algorithms, args.shards) => m,
        _ => RunManifest::new(args.n, &algorithms, args.shards, &args.out),
    };
    let per_alg = manifest
        .shards
        .iter()
        .filter(|s| s.algorithm == algorithms[0])
        .count() as u64;
    if let Some(k) = args.shard_index {
        if k >= per_alg {
            return Err(Error::InvalidParameters(format!(
                "--shard-index {k} out of range 0..{per_alg}"
            )));
        }
    }
    if manifest.complete && args.out.exists() {
        writeln!(out, "{} is already complete", args.out.display()).map_err(io_out)?;
        return Ok(EXIT_OK);
    }
    manifest.save(&manifest_path)?;

    for i in 0..manifest.shards.len() {
        let rec = manifest.shards[i].clone();
        if args.shard_index.is_some_and(|k| k != rec.index) {
            continue;
        }
        if rec.complete && rec.path.exists() {
            writeln!(
                out,
                "shard {} of algorithm {} already complete",
                rec.index, rec.algorithm
            )
            .map_err(io_out)?;
            continue;
        }
        let tris = generate_range(rec.algorithm, args.n, rec.start..=rec.end)?;
        let shard = Corpus::new(args.n, tris)?;
        write_corpus(&rec.path, &shard)?;
        manifest.shards[i].complete = true;
        manifest.shards[i].triangles = Some(shard.len());
        manifest.save(&manifest_path)?;
        writeln!(
            out,
            "shard {} of algorithm {} ({}..={}): {} triangles",
            rec.index,
            rec.algorithm,
            rec.start,
            rec.end,
            shard.len()
        )
        .map_err(io_out)?;
    }

    if !manifest.shards.iter().all(|s| s.complete) {
        writeln!(out, "run incomplete; rerun the remaining shards to finish").map_err(io_out)?;
        return Ok(EXIT_OK);
    }

    let mut corpora = Vec::new();
    for &alg in &algorithms {
        let mut tris = Vec::new();
        for rec in manifest.shards.iter().filter(|s| s.algorithm == alg) {
            tris.extend(read_corpus(&rec.path)?.into_triangles());
        }
        corpora.push((alg, Corpus::new(args.n, tris)?));
    }
    let (_, reference) = corpora.last().expect("at least one algorithm").clone();
    if corpora.len() > 1 {
        for (alg, c) in &corpora[..corpora.len() - 1] {
            if let Some(detail) = first_difference(&reference, c) {
                let err = format!("algorithm {alg} vs iii: {detail}");
                writeln!(out, "MISMATCH {err}").map_err(io_out)?;
                return Err(Error::Mismatch {
                    n: args.n,
                    detail: err,
                });
            }
        }
        manifest.cross_validation = Some(CrossValidation {
            n: args.n,
            runs: corpora
                .iter()
                .map(|(alg, c)| AlgorithmRun {
                    algorithm: *alg,
                    total: c.len(),
                    primitive: c.triangles().iter().filter(|t| t.is_primitive()).count(),
                    elapsed: Default::default(),
                })
                .collect(),
        });
    }
    write_corpus(&args.out, &reference)?;
    for rec in &manifest.shards {
        let _ = fs::remove_file(&rec.path);
    }
    manifest.complete = true;
    manifest.save(&manifest_path)?;
    for (alg, c) in &corpora {
        let stats = corpus_stats(c);
        writeln!(out, "algorithm {alg}: {stats}").map_err(io_out)?;
    }
    writeln!(out, "wrote {}", args.out.display()).map_err(io_out)?;
    Ok(EXIT_OK)
}

fn load_or_generate(corpus: Option<&Path>, n: Option<u64>) -> Result<Corpus> {
    match (corpus, n) {
        (Some(path), n) => {
            let c = read_corpus(path)?;
            match n {
                Some(n) if c.n() < n => Err(Error::Incomplete(format!(
                    "{} is complete only to diameter {}, {n} requested",
                    path.display(),
                    c.n()
                ))),
                Some(n) => Ok(c.truncated(n)),
                None => Ok(c),
            }
        }
        (None, Some(n)) => generate(Algorithm::III, n),
        (None, None) => Err(Error::InvalidParameters(
            "either --corpus or --n is required".into(),
        )),
    }
}

pub fn cmd_pyramids(args: &PyramidArgs, out: &mut dyn std::io::Write) -> Result<u8> {
    let classes: Vec<Coincidence> = args
        .classes
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()?;
    let corpus = load_or_generate(args.corpus.as_deref(), Some(args.n))?;
    let mut pyramids = perfect_pyramids(args.n, &corpus)?;
    if !classes.is_empty() {
        pyramids.retain(|p| classes.contains(&classify_coincidence(&p.tetrahedron())));
    }
    let text = format_pyramids(args.n, &pyramids);
    match &args.out {
        Some(path) => {
            write_atomic(path, &text)?;
            writeln!(
                out,
                "{} perfect pyramids written to {}",
                pyramids.len(),
                path.display()
            )
            .map_err(io_out)?;
        }
        None => out.write_all(text.as_bytes()).map_err(io_out)?,
    }
    if let Some(key) = args.equal {
        let groups = mine_equal_sets(&pyramids, key.into());
        writeln!(out, "{} groups", groups.len()).map_err(io_out)?;
        writeln!(
            out,
            "{:>10} {:>12} {:>7} {:>7} {:>7} {:>7} {:>7} {:>7}",
            "surface", "volume", "a", "b", "c", "d", "e", "f"
        )
        .map_err(io_out)?;
        for g in groups {
            for p in &g.members {
                let [a, b, c, d, e, f] = p.edges();
                writeln!(
                    out,
                    "{:>10} {:>12} {a:>7} {b:>7} {c:>7} {d:>7} {e:>7} {f:>7}",
                    p.surface(),
                    p.volume().to_string()
                )
                .map_err(io_out)?;
            }
            writeln!(out).map_err(io_out)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify_cluster(args: &ClusterArgs, out: &mut dyn std::io::Write) -> Result<u8> {
    let ps = LatticePointSet::read(&args.points)?;
    let report = verify_cluster(&ps);
    writeln!(out, "{report}").map_err(io_out)?;
    Ok(if report.is_cluster() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}

pub fn cmd_tuples(args: &TupleArgs, out: &mut dyn std::io::Write) -> Result<u8> {
    let corpus = load_or_generate(args.corpus.as_deref(), args.n)?;
    let g = minimal_tuples(&corpus, args.tuple_size)?;
    writeln!(
        out,
        "N={} perimeter={} area={} 4A={}",
        args.tuple_size, g.perimeter, g.area, g.quad_area
    )
    .map_err(io_out)?;
    for t in &g.members {
        writeln!(out, "  {}", t.triangle()).map_err(io_out)?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_medians(args: &MedianArgs, out: &mut dyn std::io::Write) -> Result<u8> {
    let corpus = load_or_generate(args.corpus.as_deref(), args.n)?;
    let scan = median_scan(&corpus);
    if args.max_count {
        writeln!(out, "{}", scan.max_count()).map_err(io_out)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "rational medians  triangles").map_err(io_out)?;
    for (k, count) in scan.histogram.iter().enumerate() {
        writeln!(out, "{k:>16}  {count}").map_err(io_out)?;
    }
    writeln!(
        out,
        "primitive triangles with two or more rational medians:"
    )
    .map_err(io_out)?;
    for (t, m) in &scan.examples {
        let vals: Vec<String> = m
            .values
            .iter()
            .map(|v| v.map_or("-".into(), |r| r.to_string()))
            .collect();
        writeln!(out, "  {}  medians {}", t.triangle(), vals.join(" ")).map_err(io_out)?;
    }
    Ok(EXIT_OK)
}
