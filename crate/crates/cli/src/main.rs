use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tritile_core::analysis::analyze;
use tritile_core::exact::{AngleClass, AngleMode, EdgeLabel, SideMode, TileSpec};
use tritile_core::generators::{worked_example_arithmetic, GenParams, GeneratorRegistry};
use tritile_core::invariant::{default_frame, sawtooth_augment, sawtooth_boundary_zh, zh_tiling};
use tritile_core::model::{boundary_walk, load_tiling, tiling_to_json, BuildOptions, Tiling, TilingMode};
use tritile_core::render::{render_svg, RenderStyle};
use tritile_core::search::{enumerate, PruneRegistry, Region, SearchConfig};
use tritile_core::{SearchError, TilingError};

#[derive(Parser)]
#[command(name = "tritile", version, about = "Tilings by triangles with a 2π/3 angle")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a tiling file and report its size.
    Validate {
        file: PathBuf,
        /// Reject mirrored tiles.
        #[arg(long)]
        direct_only: bool,
    },
    /// Vertex census, Γ-graphs, segment relations and the resulting verdict.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Signed edge invariant of the tiles and of the boundary.
    Zh {
        file: PathBuf,
        /// Reference direction as `j,k` (the class jπ/3 + kα).
        #[arg(long, value_parser = parse_class)]
        frame: Option<AngleClass>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a standard construction.
    Generate {
        /// One of: quadratic, kite, parallelogram, star-fixture, allc-equilateral.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[command(flatten)]
        tile: TileArgs,
        /// Edge shared by the two tiles of a kite or parallelogram.
        #[arg(long, default_value = "c", value_parser = parse_label)]
        shared: EdgeLabel,
        #[arg(long, value_parser = parse_class, default_value = "0,0")]
        frame: AngleClass,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Add teeth along an all-c boundary.
    Sawtooth {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate tilings of a small region.
    Search {
        #[command(flatten)]
        tile: TileArgs,
        /// `parallelogram[:L]`, `kite[:L]`, `triangle:n`, `equilateral:m` or a JSON file.
        #[arg(long)]
        region: String,
        #[arg(long, default_value_t = 4)]
        max_tiles: usize,
        #[arg(long, overrides_with = "no_mirrored")]
        mirrored: bool,
        #[arg(long)]
        no_mirrored: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Comma-separated pruning rules, `none`, or `default`.
        #[arg(long, default_value = "default")]
        prune: String,
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Write each tiling found into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Draw a tiling as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 40.0)]
        scale: f64,
        /// Dashed maximal segments.
        #[arg(long)]
        segments: bool,
        /// Arrows for the links of Γ_L.
        #[arg(long, value_parser = parse_label)]
        gamma: Option<EdgeLabel>,
        /// Lines between matched c-internal tiles.
        #[arg(long)]
        matching: bool,
        /// Letters for interior vertex types.
        #[arg(long)]
        glyphs: bool,
    },
    /// Print a built-in worked example.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
    },
}

#[derive(Args)]
struct TileArgs {
    /// Sides `a,b[,c]`; integers and `p/q` are exact, decimals are numeric.
    #[arg(long, default_value = "3,5")]
    tile: String,
    /// Angle α in radians, for numeric tiles.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, value_parser = parse_angle_mode)]
    angle_mode: Option<AngleMode>,
    #[arg(long, value_parser = parse_side_mode)]
    side_mode: Option<SideMode>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    /// Integer bookkeeping for the 1215-tile triangle tiled by the (3,5,7) tile.
    WorkedArithmetic,
}

enum Failure {
    /// Misuse of the tool: bad flags, unreadable inputs.
    Usage(String),
    /// The input was read but is not a valid tiling, or the computation failed.
    Invalid(String),
}

fn parse_label(s: &str) -> Result<EdgeLabel, String> {
    let mut cs = s.chars();
    match (cs.next().and_then(EdgeLabel::from_char), cs.next()) {
        (Some(l), None) => Ok(l),
        _ => Err(format!("expected a, b or c, got {s:?}")),
    }
}

fn parse_class(s: &str) -> Result<AngleClass, String> {
    let (j, k) = s.split_once(',').ok_or_else(|| format!("expected j,k, got {s:?}"))?;
    let j: i64 = j.trim().parse().map_err(|_| format!("bad j in {s:?}"))?;
    let k: i64 = k.trim().parse().map_err(|_| format!("bad k in {s:?}"))?;
    Ok(AngleClass::new(j, k))
}

fn parse_angle_mode(s: &str) -> Result<AngleMode, String> {
    serde_json::from_value(serde_json::Value::String(s.into())).map_err(|_| "expected incommensurable, commensurable or unknown".into())
}

fn parse_side_mode(s: &str) -> Result<SideMode, String> {
    serde_json::from_value(serde_json::Value::String(s.into()))
        .map_err(|_| "expected commensurable, ab_rational_c_irrational, incommensurable or unknown".into())
}

impl TileArgs {
    fn spec(&self) -> Result<TileSpec, Failure> {
        let spec = TileSpec::parse_sides(&self.tile, self.angle_mode, self.side_mode).map_err(|e| Failure::Usage(format!("--tile: {e}")))?;
        match self.alpha {
            None => Ok(spec),
            Some(alpha) if spec.exact().is_some() => {
                if (alpha - spec.alpha()).abs() > 1e-9 {
                    Err(Failure::Usage(format!("--alpha {alpha} disagrees with the sides (α = {})", spec.alpha())))
                } else {
                    Ok(spec)
                }
            }
            Some(alpha) => TileSpec::from_numeric(spec.a(), spec.b(), Some(spec.c()), Some(alpha), spec.angle_mode(), spec.side_mode())
                .map_err(|e| Failure::Usage(format!("--alpha: {e}"))),
        }
    }
}

fn load(path: &Path, opts: Option<BuildOptions>) -> Result<Tiling, Failure> {
    if !path.is_file() {
        return Err(Failure::Usage(format!("cannot read {}", path.display())));
    }
    load_tiling(path, opts).map_err(|e| match e {
        TilingError::Io(e) => Failure::Usage(format!("{}: {e}", path.display())),
        e => Failure::Invalid(format!("{}: {e}", path.display())),
    })
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("--out {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Validate { file, direct_only } => {
            let opts = direct_only.then_some(BuildOptions { mode: TilingMode::Full, allow_mirrored: false });
            // A fragment file keeps its own mode; only the mirror restriction is forced.
            let t = load(&file, None)?;
            let t = match opts {
                Some(_) => load(&file, Some(BuildOptions { mode: t.mode, allow_mirrored: false }))?,
                None => t,
            };
            let kind = match t.mode {
                TilingMode::Full => "",
                TilingMode::Fragment => " (fragment)",
            };
            let n = t.tile_count();
            println!("valid, {n} tile{}{kind}", if n == 1 { "" } else { "s" });
        }
        Cmd::Analyze { file, format, out } => {
            let t = load(&file, None)?;
            let report = analyze(&t).map_err(|e| Failure::Invalid(e.to_string()))?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            emit(&text, &out)?;
        }
        Cmd::Zh { file, frame, out } => {
            let t = load(&file, None)?;
            let r = zh_tiling(&t, frame).map_err(|e| Failure::Invalid(e.to_string()))?;
            emit(&to_json(&r), &out)?;
        }
        Cmd::Generate { kind, n, tile, shared, frame, out } => {
            let reg = GeneratorRegistry::builtin();
            let g = reg.get(&kind).ok_or_else(|| Failure::Usage(format!("--kind {kind:?} is unknown; known: {}", reg.names().join(", "))))?;
            let spec = tile.spec()?;
            let t = g.generate(&spec, &GenParams { n, shared, frame }).map_err(|e| Failure::Invalid(e.to_string()))?;
            emit(&tiling_to_json(&t), &out)?;
        }
        Cmd::Sawtooth { file, out } => {
            let t = load(&file, None)?;
            let aug = sawtooth_augment(&t).map_err(|e| Failure::Invalid(e.to_string()))?;
            let frame = default_frame(&t).map_err(|e| Failure::Invalid(e.to_string()))?;
            let walk = boundary_walk(&t).map_err(|e| Failure::Invalid(e.to_string()))?;
            let sides: Vec<(AngleClass, i64)> = walk.iter().map(|e| (e.class, e.fragments.len() as i64)).collect();
            eprintln!(
                "{} teeth added; ζ of the new boundary: {}",
                aug.tile_count() - t.tile_count(),
                sawtooth_boundary_zh(&t.spec, &sides, frame)
            );
            emit(&tiling_to_json(&aug), &out)?;
        }
        Cmd::Search { tile, region, max_tiles, mirrored, no_mirrored, workers, prune, max_nodes, emit: dir } => {
            let spec = tile.spec()?;
            let region = Region::parse(&spec, &region).map_err(|e| Failure::Usage(format!("--region: {e}")))?;
            let mut cfg = SearchConfig::new(spec, region, max_tiles);
            cfg.allow_mirrored = mirrored || !no_mirrored;
            cfg.workers = workers;
            cfg.max_nodes = max_nodes;
            cfg.prune = match prune.as_str() {
                "default" => cfg.prune,
                "none" => Vec::new(),
                list => list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
            };
            let known = PruneRegistry::builtin().names();
            if let Some(bad) = cfg.prune.iter().find(|p| !known.contains(&p.as_str())) {
                return Err(Failure::Usage(format!("--prune: unknown rule {bad:?}; known: {}", known.join(", "))));
            }
            let res = enumerate(&cfg).map_err(|e| match e {
                SearchError::InvalidConfig(m) => Failure::Usage(m),
                e => Failure::Invalid(e.to_string()),
            })?;
            let mut files = Vec::new();
            if let Some(dir) = &dir {
                std::fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("--emit {}: {e}", dir.display())))?;
                for i in 0..res.found.len() {
                    let t = res.tiling(&cfg, i).map_err(|e| Failure::Invalid(e.to_string()))?;
                    let p = dir.join(format!("tiling_{i:04}.json"));
                    std::fs::write(&p, tiling_to_json(&t)).map_err(|e| Failure::Usage(format!("--emit {}: {e}", p.display())))?;
                    files.push(p.display().to_string());
                }
            }
            let summary = serde_json::json!({ "stats": res.stats, "files": files });
            print!("{}", to_json(&summary));
        }
        Cmd::Render { file, out, scale, segments, gamma, matching, glyphs } => {
            let t = load(&file, None)?;
            if !(scale > 0.0 && scale.is_finite()) {
                return Err(Failure::Usage("--scale must be positive".into()));
            }
            let style = RenderStyle { scale, segments, gamma, matching, vertex_glyphs: glyphs, ..Default::default() };
            emit(&render_svg(&t, &style), &out)?;
        }
        Cmd::Example { name: ExampleName::WorkedArithmetic } => {
            let w = worked_example_arithmetic();
            let mut s = String::new();
            let _ = writeln!(s, "tile: a={}, b={}, c={}", w.a, w.b, w.c);
            let _ = writeln!(s, "L = {}a + {}b + {}c = {}", w.side_counts[0], w.side_counts[1], w.side_counts[2], w.side);
            let _ = writeln!(s, "N·a·b = {}·{}·{} = {}, L² = {}", w.tiles, w.a, w.b, w.tile_area, w.side_squared);
            let _ = writeln!(s, "ζ(∂ABC) = 3·{} = {}", w.side, w.zh_triangle);
            let mut terms = String::new();
            for (i, (l, c)) in w.trapezoid.iter().enumerate() {
                let sign = if c.zh_sign() < 0 { " − " } else if i > 0 { " + " } else { "" };
                let _ = write!(terms, "{sign}{l}");
            }
            let _ = writeln!(s, "ζ(∂T₁) = {terms} = {}", w.zh_trapezoid);
            let _ = writeln!(s, "{} trapezoids × {} = {}", w.trapezoids, w.zh_trapezoid, w.trapezoids * w.zh_trapezoid);
            print!("{s}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Invalid(m)) => {
            eprintln!("invalid: {m}");
            ExitCode::from(1)
        }
    }
}
