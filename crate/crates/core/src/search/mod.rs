//! Exhaustive search for tilings of a small region by backtracking.
//!
//! Each node fills the first uncovered sector at the lowest-then-leftmost point that
//! has one, so every tiling is reached along exactly one path. Pruning rules are
//! looked up by name in a [`PruneRegistry`].

mod canonical;
mod frontier;
mod prune;
mod regions;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{SearchError, TilingError};
use crate::exact::TileSpec;
use crate::model::{geom_tol, BuildOptions, PlacedTile, Tiling, TilingMode};

pub use canonical::{canonical_key, symmetries, tile_key, tiling_key, Isometry, TileKey, TilingKey};
pub use frontier::{candidates, frontier, Gap};
pub use prune::{AngleCensus, NodeView, PruneRegistry, PruneRule, SegmentRelation, ZhFeasibility};
pub use regions::Region;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub spec: TileSpec,
    pub region: Region,
    pub max_tiles: usize,
    pub allow_mirrored: bool,
    pub workers: usize,
    /// Names of the pruning rules to apply.
    pub prune: Vec<String>,
    /// Abort with [`SearchError::ResourceLimit`] after this many nodes.
    pub max_nodes: Option<u64>,
}

impl SearchConfig {
    pub fn new(spec: TileSpec, region: Region, max_tiles: usize) -> Self {
        SearchConfig {
            spec,
            region,
            max_tiles,
            allow_mirrored: true,
            workers: 1,
            prune: PruneRegistry::builtin().defaults().into_iter().map(String::from).collect(),
            max_nodes: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FoundTiling {
    pub tiles: Vec<PlacedTile>,
    pub key: TilingKey,
    /// Key up to the symmetries of the region.
    pub class_key: TilingKey,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchStats {
    /// Tiles in a complete tiling (region area over tile area), if integral.
    pub target_tiles: Option<usize>,
    pub nodes: u64,
    pub pruned: u64,
    pub tilings: usize,
    /// Tilings counted up to the symmetries of the region.
    pub classes: usize,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub found: Vec<FoundTiling>,
    pub stats: SearchStats,
}

impl SearchResult {
    /// Rebuilds a found tiling as a validated [`Tiling`].
    pub fn tiling(&self, cfg: &SearchConfig, i: usize) -> Result<Tiling, TilingError> {
        Tiling::from_tiles(
            cfg.spec.clone(),
            self.found[i].tiles.clone(),
            Some(cfg.region.polygon.clone()),
            BuildOptions { mode: TilingMode::Full, allow_mirrored: cfg.allow_mirrored },
        )
    }
}

struct Ctx<'a> {
    cfg: &'a SearchConfig,
    rules: Vec<&'a dyn PruneRule>,
    target: usize,
    nodes: &'a AtomicU64,
    pruned: &'a AtomicU64,
    aborted: &'a AtomicBool,
}

impl Ctx<'_> {
    fn count_node(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(limit) = self.cfg.max_nodes {
            if n > limit {
                self.aborted.store(true, Ordering::Relaxed);
            }
        }
        !self.aborted.load(Ordering::Relaxed)
    }

    fn children(&self, tiles: &[PlacedTile]) -> Vec<PlacedTile> {
        let cfg = self.cfg;
        let Some(gap) = frontier(tiles, &cfg.region, &cfg.spec) else { return Vec::new() };
        let view = NodeView { spec: &cfg.spec, region: &cfg.region, tiles, gap: &gap, target: self.target };
        if self.rules.iter().any(|r| r.prune(&view)) {
            self.pruned.fetch_add(1, Ordering::Relaxed);
            return Vec::new();
        }
        candidates(&gap, tiles, &cfg.region, &cfg.spec, cfg.allow_mirrored)
    }

    fn dfs(&self, tiles: &mut Vec<PlacedTile>, out: &mut Vec<Vec<PlacedTile>>) {
        if !self.count_node() {
            return;
        }
        if tiles.len() == self.target {
            let done = Tiling::from_tiles(
                self.cfg.spec.clone(),
                tiles.clone(),
                Some(self.cfg.region.polygon.clone()),
                BuildOptions { mode: TilingMode::Full, allow_mirrored: self.cfg.allow_mirrored },
            );
            if done.is_ok() {
                out.push(tiles.clone());
            }
            return;
        }
        for child in self.children(tiles) {
            tiles.push(child);
            self.dfs(tiles, out);
            tiles.pop();
        }
    }
}

/// Enumerates every tiling of the region with at most `max_tiles` tiles.
pub fn enumerate(cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    if cfg.workers == 0 {
        return Err(SearchError::InvalidConfig("workers must be at least 1".into()));
    }
    let registry = PruneRegistry::builtin();
    let mut rules = Vec::new();
    for name in &cfg.prune {
        let r = registry
            .get(name)
            .ok_or_else(|| SearchError::InvalidConfig(format!("unknown pruning rule {name:?}; known: {}", registry.names().join(", "))))?;
        if r.applies_to(&cfg.spec) {
            rules.push(r);
        }
    }
    let ratio = cfg.region.polygon.signed_area() / cfg.spec.area();
    let target = ratio.round();
    let integral = target >= 1.0 && (ratio - target).abs() <= 1e-6 * ratio.max(1.0);
    let mut stats = SearchStats { target_tiles: integral.then_some(target as usize), nodes: 0, pruned: 0, tilings: 0, classes: 0 };
    if !integral || target as usize > cfg.max_tiles {
        return Ok(SearchResult { found: Vec::new(), stats });
    }
    let (nodes, pruned, aborted) = (AtomicU64::new(0), AtomicU64::new(0), AtomicBool::new(false));
    let ctx = Ctx { cfg, rules, target: target as usize, nodes: &nodes, pruned: &pruned, aborted: &aborted };

    // The root is expanded here; its children are the units of parallel work.
    ctx.count_node();
    let roots = ctx.children(&[]);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| SearchError::InvalidConfig(format!("thread pool: {e}")))?;
    let per_root: Vec<Vec<Vec<PlacedTile>>> = pool.install(|| {
        roots
            .par_iter()
            .map(|r| {
                let mut out = Vec::new();
                ctx.dfs(&mut vec![r.clone()], &mut out);
                out
            })
            .collect()
    });
    if aborted.load(Ordering::Relaxed) {
        return Err(SearchError::ResourceLimit { budget: cfg.max_nodes.unwrap_or(0) });
    }
    let syms = symmetries(&cfg.region.polygon, cfg.allow_mirrored, geom_tol() * 100.0);
    let mut found: Vec<FoundTiling> = per_root
        .into_iter()
        .flatten()
        .map(|tiles| {
            let key = tiling_key(&tiles, &Isometry::identity());
            let class_key = canonical_key(&tiles, &syms);
            FoundTiling { tiles, key, class_key }
        })
        .collect();
    found.sort_by(|a, b| a.key.cmp(&b.key));
    found.dedup_by(|a, b| a.key == b.key);
    let mut classes: Vec<&TilingKey> = found.iter().map(|f| &f.class_key).collect();
    classes.sort();
    classes.dedup();
    stats.nodes = nodes.load(Ordering::Relaxed);
    stats.pruned = pruned.load(Ordering::Relaxed);
    stats.tilings = found.len();
    stats.classes = classes.len();
    Ok(SearchResult { found, stats })
}
