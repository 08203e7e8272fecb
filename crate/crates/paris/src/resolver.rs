//! Address-to-API symbolication with use/useless caches and the
//! per-stack parsing procedure that applies API filtering inline.
//!
//! The caches are keyed by absolute address and are valid for exactly one
//! module-map generation: any map (or filter) change requires fresh
//! caches, otherwise entries would silently go stale.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::trace::{ModuleMap, RawStackEvent, ResolvedCallStack};

/// Set of qualified API names to skip during parsing: the union of
/// trivial, redundant, and model-rejected APIs from a selection run.
/// Membership is pure and stable for the lifetime of the filter.
#[derive(Debug, Clone, Default)]
pub struct ApiFilter {
    dropped: HashSet<String>,
}

impl ApiFilter {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(dropped: impl IntoIterator<Item = String>) -> Self {
        Self { dropped: dropped.into_iter().collect() }
    }

    pub fn contains(&self, api: &str) -> bool {
        self.dropped.contains(api)
    }

    pub fn len(&self) -> usize {
        self.dropped.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dropped.is_empty()
    }
}

/// Counters exposed by the caches. `hit_rate` counts both cache kinds:
/// any lookup that avoided an export search is a hit.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub lookups: u64,
    pub useful_hits: u64,
    pub useless_hits: u64,
    pub export_searches: u64,
}

impl CacheStats {
    pub fn hit_rate(&self) -> f64 {
        if self.lookups == 0 {
            return 0.0;
        }
        (self.useful_hits + self.useless_hits) as f64 / self.lookups as f64
    }
}

/// Address caches for one `(ModuleMap, ApiFilter)` generation.
///
/// `useful` maps addresses to the qualified API name they resolve to;
/// `useless` holds addresses known to resolve to filtered-out APIs or to
/// nothing. The two sets are disjoint by construction.
#[derive(Debug, Default)]
pub struct ResolverCaches {
    useful: HashMap<u64, Arc<str>>,
    useless: HashSet<u64>,
    stats: CacheStats,
}

impl ResolverCaches {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stats(&self) -> CacheStats {
        self.stats
    }

    pub fn useful_len(&self) -> usize {
        self.useful.len()
    }

    pub fn useless_len(&self) -> usize {
        self.useless.len()
    }

    /// True when the address has a cached disposition of either kind.
    pub fn knows(&self, addr: u64) -> bool {
        self.useful.contains_key(&addr) || self.useless.contains(&addr)
    }

    pub fn is_useless(&self, addr: u64) -> bool {
        self.useless.contains(&addr)
    }

    fn search(&mut self, addr: u64, map: &ModuleMap) -> Option<Arc<str>> {
        self.stats.export_searches += 1;
        map.qualified_name(addr).map(Arc::from)
    }
}

/// Outcome of resolving one address through the caches.
enum Disposition {
    /// Resolved to an API that passed the filter.
    Keep(Arc<str>),
    /// Unresolved, or resolved to a filtered API; skipped either way.
    Skip,
}

fn resolve_with_filter(
    addr: u64,
    map: &ModuleMap,
    filter: &ApiFilter,
    caches: &mut ResolverCaches,
) -> Disposition {
    caches.stats.lookups += 1;
    if caches.useless.contains(&addr) {
        caches.stats.useless_hits += 1;
        return Disposition::Skip;
    }
    if let Some(api) = caches.useful.get(&addr) {
        caches.stats.useful_hits += 1;
        return Disposition::Keep(Arc::clone(api));
    }
    match caches.search(addr, map) {
        Some(api) if !filter.contains(&api) => {
            caches.useful.insert(addr, Arc::clone(&api));
            Disposition::Keep(api)
        }
        _ => {
            caches.useless.insert(addr);
            Disposition::Skip
        }
    }
}

/// Resolves a single address to its qualified `"module:Api"` name,
/// recording the result in the caches. A cache hit of either kind
/// performs no export search; an address previously skipped by filtered
/// parsing reports as unresolved here.
pub fn resolve_address(
    addr: u64,
    map: &ModuleMap,
    caches: &mut ResolverCaches,
) -> Option<Arc<str>> {
    match resolve_with_filter(addr, map, &ApiFilter::empty(), caches) {
        Disposition::Keep(api) => Some(api),
        Disposition::Skip => None,
    }
}

/// Parses one raw event into a resolved call stack.
///
/// Walks the addresses in order, skipping cached-useless addresses,
/// resolving the rest cache-first. Unresolved addresses and filtered
/// APIs are dropped; an API equal to the immediately preceding kept API
/// is suppressed (but its address stays cached as useful). Returns
/// `None` when no frame survives — a useless call stack.
pub fn parse_call_stack(
    event: &RawStackEvent,
    map: &ModuleMap,
    filter: &ApiFilter,
    caches: &mut ResolverCaches,
) -> Option<ResolvedCallStack> {
    let mut frames: Vec<Arc<str>> = Vec::new();
    for &addr in &event.stack {
        match resolve_with_filter(addr, map, filter, caches) {
            Disposition::Keep(api) => {
                if frames.last().map(|prev| **prev == *api) != Some(true) {
                    frames.push(api);
                }
            }
            Disposition::Skip => {}
        }
    }
    if frames.is_empty() {
        return None;
    }
    Some(ResolvedCallStack { pid: event.pid, tid: event.tid, ts: event.ts, frames })
}

/// Parses one raw event keeping only the top-level API: the first frame
/// that resolves inside any module of the map. Baseline collection shape
/// for comparisons against the full pipeline.
pub fn parse_top_level(
    event: &RawStackEvent,
    map: &ModuleMap,
    caches: &mut ResolverCaches,
) -> Option<ResolvedCallStack> {
    let filter = ApiFilter::empty();
    for &addr in &event.stack {
        if let Disposition::Keep(api) = resolve_with_filter(addr, map, &filter, caches) {
            return Some(ResolvedCallStack {
                pid: event.pid,
                tid: event.tid,
                ts: event.ts,
                frames: vec![api],
            });
        }
    }
    None
}
