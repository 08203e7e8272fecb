//! Core domain types shared by every stage, plus the on-disk trace and
//! module-map formats.
//!
//! A trace file is JSON Lines, one event per line, addresses as hex
//! strings:
//!
//! ```text
//! {"pid":4,"tid":8,"ts":0,"stack":["0x10","0x7ffa00001234"]}
//! ```
//!
//! A module map is a single JSON document: an array of module objects
//! `{module, base (hex string), size, exports:[{name, rva_start, rva_end}]}`.
//! Both files are UTF-8.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Separator used when joining frames into a canonical stack key.
/// Module and API names are validated to never contain it.
pub const STACK_KEY_SEPARATOR: char = '|';

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {msg}")]
    Parse { path: String, line: usize, msg: String },
    #[error("module map validation failed: {0}")]
    Validation(String),
}

/// One audited event: the raw call stack of a thread at a point in time.
///
/// `stack[0]` is the shallowest (user-most) frame; the last entry is the
/// deepest (system-call side) frame. Timestamps are nanoseconds since the
/// trace epoch and must be monotone non-decreasing per `(pid, tid)`
/// within one trace file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawStackEvent {
    pub pid: u32,
    pub tid: u32,
    pub ts: u64,
    pub stack: Vec<u64>,
}

/// One exported function: name plus its `[rva_start, rva_end)` range
/// relative to the module base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportEntry {
    pub api_name: String,
    pub rva_start: u64,
    pub rva_end: u64,
}

/// A loaded module image: name, load base, size, and its export table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleImage {
    pub module_name: String,
    pub base: u64,
    pub size: u64,
    pub exports: Vec<ExportEntry>,
}

impl ModuleImage {
    fn end(&self) -> u64 {
        self.base + self.size
    }
}

/// The symbolication table: all loaded modules with disjoint address
/// ranges. Constructed through [`ModuleMap::new`], which enforces the
/// disjointness invariants, so lookups are unambiguous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    /// Modules sorted by base address; exports sorted by `rva_start`.
    modules: Vec<ModuleImage>,
}

impl ModuleMap {
    /// Validates and indexes a set of modules.
    ///
    /// Rejects: overlapping module ranges, export ranges outside
    /// `[0, size)`, empty or inverted export ranges, overlapping exports
    /// within one module, and names containing the stack-key separator.
    pub fn new(mut modules: Vec<ModuleImage>) -> Result<Self, TraceError> {
        modules.sort_by_key(|m| m.base);
        for pair in modules.windows(2) {
            if pair[1].base < pair[0].end() {
                return Err(TraceError::Validation(format!(
                    "modules {} [{:#x},{:#x}) and {} [{:#x},{:#x}) overlap",
                    pair[0].module_name,
                    pair[0].base,
                    pair[0].end(),
                    pair[1].module_name,
                    pair[1].base,
                    pair[1].end(),
                )));
            }
        }
        for module in &mut modules {
            if module.module_name.contains(STACK_KEY_SEPARATOR) {
                return Err(TraceError::Validation(format!(
                    "module name {:?} contains reserved separator {:?}",
                    module.module_name, STACK_KEY_SEPARATOR
                )));
            }
            module.exports.sort_by_key(|e| e.rva_start);
            for export in &module.exports {
                if export.api_name.contains(STACK_KEY_SEPARATOR) {
                    return Err(TraceError::Validation(format!(
                        "export name {:?} contains reserved separator {:?}",
                        export.api_name, STACK_KEY_SEPARATOR
                    )));
                }
                if export.rva_start >= export.rva_end {
                    return Err(TraceError::Validation(format!(
                        "{}:{} has empty or inverted range [{:#x},{:#x})",
                        module.module_name, export.api_name, export.rva_start, export.rva_end
                    )));
                }
                if export.rva_end > module.size {
                    return Err(TraceError::Validation(format!(
                        "{}:{} range end {:#x} exceeds module size {:#x}",
                        module.module_name, export.api_name, export.rva_end, module.size
                    )));
                }
            }
            for pair in module.exports.windows(2) {
                if pair[1].rva_start < pair[0].rva_end {
                    return Err(TraceError::Validation(format!(
                        "exports {}:{} and {}:{} overlap",
                        module.module_name,
                        pair[0].api_name,
                        module.module_name,
                        pair[1].api_name
                    )));
                }
            }
        }
        Ok(Self { modules })
    }

    pub fn modules(&self) -> &[ModuleImage] {
        &self.modules
    }

    /// Resolves an absolute address to `(module, export)` when it falls
    /// inside some export's `[base+rva_start, base+rva_end)` range.
    pub fn lookup(&self, addr: u64) -> Option<(&ModuleImage, &ExportEntry)> {
        let idx = match self.modules.binary_search_by(|m| m.base.cmp(&addr)) {
            Ok(i) => i,
            Err(0) => return None,
            Err(i) => i - 1,
        };
        let module = &self.modules[idx];
        if addr >= module.end() {
            return None;
        }
        let rva = addr - module.base;
        let eidx = match module
            .exports
            .binary_search_by(|e| e.rva_start.cmp(&rva))
        {
            Ok(i) => i,
            Err(0) => return None,
            Err(i) => i - 1,
        };
        let export = &module.exports[eidx];
        (rva < export.rva_end).then_some((module, export))
    }

    /// Qualified name `"module:Api"` for an address, if resolvable.
    pub fn qualified_name(&self, addr: u64) -> Option<String> {
        self.lookup(addr)
            .map(|(m, e)| format!("{}:{}", m.module_name, e.api_name))
    }
}

/// A call stack after parsing: addresses replaced by qualified API names.
///
/// Frames are non-empty (empty results are dropped upstream) and no two
/// consecutive frames are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedCallStack {
    pub pid: u32,
    pub tid: u32,
    pub ts: u64,
    pub frames: Vec<Arc<str>>,
}

impl ResolvedCallStack {
    /// Canonical text key of the frame list, used for stack-level
    /// selection and loop compression.
    pub fn stack_key(&self) -> String {
        join_stack_key(self.frames.iter().map(|f| f.as_ref()))
    }
}

/// Joins frames into a canonical stack key.
pub fn join_stack_key<'a>(frames: impl IntoIterator<Item = &'a str>) -> String {
    let mut out = String::new();
    for (i, frame) in frames.into_iter().enumerate() {
        debug_assert!(!frame.contains(STACK_KEY_SEPARATOR));
        if i > 0 {
            out.push(STACK_KEY_SEPARATOR);
        }
        out.push_str(frame);
    }
    out
}

/// Splits a canonical stack key back into frames.
pub fn split_stack_key(key: &str) -> impl Iterator<Item = &str> {
    key.split(STACK_KEY_SEPARATOR)
}

/// Behavior class label. The label set is fixed at training time;
/// `Benign` is always part of it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BehaviorClass {
    Benign,
    RemoteShell,
    Keylogger,
    DesktopCapture,
    GetClipboard,
    OpenWebsite,
    DownloadExecute,
    AudioCapture,
    Custom(String),
}

impl BehaviorClass {
    pub fn as_str(&self) -> &str {
        match self {
            Self::Benign => "Benign",
            Self::RemoteShell => "RemoteShell",
            Self::Keylogger => "Keylogger",
            Self::DesktopCapture => "DesktopCapture",
            Self::GetClipboard => "GetClipboard",
            Self::OpenWebsite => "OpenWebsite",
            Self::DownloadExecute => "DownloadExecute",
            Self::AudioCapture => "AudioCapture",
            Self::Custom(name) => name,
        }
    }

    pub fn is_malicious(&self) -> bool {
        !matches!(self, Self::Benign)
    }
}

impl fmt::Display for BehaviorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BehaviorClass {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "Benign" => Self::Benign,
            "RemoteShell" => Self::RemoteShell,
            "Keylogger" => Self::Keylogger,
            "DesktopCapture" => Self::DesktopCapture,
            "GetClipboard" => Self::GetClipboard,
            "OpenWebsite" => Self::OpenWebsite,
            "DownloadExecute" => Self::DownloadExecute,
            "AudioCapture" => Self::AudioCapture,
            other => Self::Custom(other.to_string()),
        })
    }
}

impl Serialize for BehaviorClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for BehaviorClass {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Ok(s.parse().expect("infallible"))
    }
}

// On-disk representations. Addresses travel as hex strings for
// diffability; counts and RVAs stay numeric.

#[derive(Serialize, Deserialize)]
struct EventLine {
    pid: u32,
    tid: u32,
    ts: u64,
    stack: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ModuleDoc {
    module: String,
    base: String,
    size: u64,
    exports: Vec<ExportDoc>,
}

#[derive(Serialize, Deserialize)]
struct ExportDoc {
    name: String,
    rva_start: u64,
    rva_end: u64,
}

fn parse_hex(s: &str) -> Option<u64> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X"))?;
    u64::from_str_radix(digits, 16).ok()
}

fn parse_event_line(line: &str) -> Result<RawStackEvent, String> {
    let doc: EventLine = serde_json::from_str(line).map_err(|e| e.to_string())?;
    let mut stack = Vec::with_capacity(doc.stack.len());
    for addr in &doc.stack {
        stack.push(parse_hex(addr).ok_or_else(|| format!("bad hex address {addr:?}"))?);
    }
    Ok(RawStackEvent { pid: doc.pid, tid: doc.tid, ts: doc.ts, stack })
}

/// A non-fatal problem found while reading a trace leniently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceWarning {
    pub line: usize,
    pub msg: String,
}

fn read_trace_impl(
    path: &Path,
    lenient: bool,
) -> Result<(Vec<RawStackEvent>, Vec<TraceWarning>), TraceError> {
    let display = path.display().to_string();
    let file = File::open(path).map_err(|source| TraceError::Io { path: display.clone(), source })?;
    let reader = BufReader::new(file);

    let mut events = Vec::new();
    let mut warnings = Vec::new();
    // Last timestamp seen per (pid, tid), for the monotonicity check.
    let mut last_ts: BTreeMap<(u32, u32), u64> = BTreeMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|source| TraceError::Io { path: display.clone(), source })?;
        if line.trim().is_empty() {
            continue;
        }
        let mut fail = |msg: String| -> Result<(), TraceError> {
            if lenient {
                warnings.push(TraceWarning { line: lineno, msg });
                Ok(())
            } else {
                Err(TraceError::Parse { path: display.clone(), line: lineno, msg })
            }
        };
        match parse_event_line(&line) {
            Ok(event) => {
                let key = (event.pid, event.tid);
                if let Some(&prev) = last_ts.get(&key) {
                    if event.ts < prev {
                        fail(format!(
                            "timestamp {} goes backwards for pid {} tid {} (previous {})",
                            event.ts, event.pid, event.tid, prev
                        ))?;
                        continue;
                    }
                }
                last_ts.insert(key, event.ts);
                events.push(event);
            }
            Err(msg) => fail(msg)?,
        }
    }
    Ok((events, warnings))
}

/// Reads a trace file, failing on the first malformed line.
pub fn read_trace(path: impl AsRef<Path>) -> Result<Vec<RawStackEvent>, TraceError> {
    read_trace_impl(path.as_ref(), false).map(|(events, _)| events)
}

/// Reads a trace file, collecting malformed lines as warnings instead of
/// failing.
pub fn read_trace_lenient(
    path: impl AsRef<Path>,
) -> Result<(Vec<RawStackEvent>, Vec<TraceWarning>), TraceError> {
    read_trace_impl(path.as_ref(), true)
}

/// Writes events in trace file order, one JSON object per line.
pub fn write_trace(
    path: impl AsRef<Path>,
    events: &[RawStackEvent],
) -> Result<(), TraceError> {
    let display = path.as_ref().display().to_string();
    let io_err = |source| TraceError::Io { path: display.clone(), source };
    let file = File::create(path.as_ref()).map_err(io_err)?;
    let mut writer = BufWriter::new(file);
    for event in events {
        let doc = EventLine {
            pid: event.pid,
            tid: event.tid,
            ts: event.ts,
            stack: event.stack.iter().map(|a| format!("{a:#x}")).collect(),
        };
        serde_json::to_writer(&mut writer, &doc)
            .map_err(|e| TraceError::Io { path: display.clone(), source: e.into() })?;
        writer.write_all(b"\n").map_err(io_err)?;
    }
    writer.flush().map_err(io_err)
}

/// Reads and validates a module map document.
pub fn read_module_map(path: impl AsRef<Path>) -> Result<ModuleMap, TraceError> {
    let display = path.as_ref().display().to_string();
    let file = File::open(path.as_ref())
        .map_err(|source| TraceError::Io { path: display.clone(), source })?;
    let docs: Vec<ModuleDoc> = serde_json::from_reader(BufReader::new(file))
        .map_err(|e| TraceError::Parse { path: display.clone(), line: 0, msg: e.to_string() })?;
    let mut modules = Vec::with_capacity(docs.len());
    for doc in docs {
        let base = parse_hex(&doc.base).ok_or_else(|| TraceError::Parse {
            path: display.clone(),
            line: 0,
            msg: format!("module {}: bad hex base {:?}", doc.module, doc.base),
        })?;
        modules.push(ModuleImage {
            module_name: doc.module,
            base,
            size: doc.size,
            exports: doc
                .exports
                .into_iter()
                .map(|e| ExportEntry { api_name: e.name, rva_start: e.rva_start, rva_end: e.rva_end })
                .collect(),
        });
    }
    ModuleMap::new(modules)
}

/// Writes a module map as a single JSON document.
pub fn write_module_map(path: impl AsRef<Path>, map: &ModuleMap) -> Result<(), TraceError> {
    let display = path.as_ref().display().to_string();
    let docs: Vec<ModuleDoc> = map
        .modules()
        .iter()
        .map(|m| ModuleDoc {
            module: m.module_name.clone(),
            base: format!("{:#x}", m.base),
            size: m.size,
            exports: m
                .exports
                .iter()
                .map(|e| ExportDoc {
                    name: e.api_name.clone(),
                    rva_start: e.rva_start,
                    rva_end: e.rva_end,
                })
                .collect(),
        })
        .collect();
    let file = File::create(path.as_ref())
        .map_err(|source| TraceError::Io { path: display.clone(), source })?;
    let mut writer = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut writer, &docs)
        .map_err(|e| TraceError::Io { path: display.clone(), source: e.into() })?;
    writer.write_all(b"\n").map_err(|source| TraceError::Io { path: display, source })
}

/// Ground-truth label for one `(pid, window)` bucket; JSON Lines on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowLabel {
    pub pid: u32,
    pub window_start_ms: u64,
    pub window_end_ms: u64,
    pub label: BehaviorClass,
}

/// Reads a window-label file (JSON Lines).
pub fn read_labels(path: impl AsRef<Path>) -> Result<Vec<WindowLabel>, TraceError> {
    let display = path.as_ref().display().to_string();
    let file = File::open(path.as_ref())
        .map_err(|source| TraceError::Io { path: display.clone(), source })?;
    let reader = BufReader::new(file);
    let mut labels = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| TraceError::Io { path: display.clone(), source })?;
        if line.trim().is_empty() {
            continue;
        }
        let label: WindowLabel = serde_json::from_str(&line).map_err(|e| TraceError::Parse {
            path: display.clone(),
            line: idx + 1,
            msg: e.to_string(),
        })?;
        labels.push(label);
    }
    Ok(labels)
}

/// Writes window labels as JSON Lines.
pub fn write_labels(path: impl AsRef<Path>, labels: &[WindowLabel]) -> Result<(), TraceError> {
    let display = path.as_ref().display().to_string();
    let io_err = |source| TraceError::Io { path: display.clone(), source };
    let file = File::create(path.as_ref()).map_err(io_err)?;
    let mut writer = BufWriter::new(file);
    for label in labels {
        serde_json::to_writer(&mut writer, label)
            .map_err(|e| TraceError::Io { path: display.clone(), source: e.into() })?;
        writer.write_all(b"\n").map_err(io_err)?;
    }
    writer.flush().map_err(io_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn module(name: &str, base: u64, size: u64, exports: &[(&str, u64, u64)]) -> ModuleImage {
        ModuleImage {
            module_name: name.to_string(),
            base,
            size,
            exports: exports
                .iter()
                .map(|&(n, s, e)| ExportEntry {
                    api_name: n.to_string(),
                    rva_start: s,
                    rva_end: e,
                })
                .collect(),
        }
    }

    #[test]
    fn parses_single_event_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.jsonl");
        std::fs::write(&path, "{\"pid\":4,\"tid\":8,\"ts\":0,\"stack\":[\"0x10\"]}\n").unwrap();
        let events = read_trace(&path).unwrap();
        assert_eq!(
            events,
            vec![RawStackEvent { pid: 4, tid: 8, ts: 0, stack: vec![16] }]
        );
    }

    #[test]
    fn keeps_empty_stacks() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.jsonl");
        std::fs::write(&path, "{\"pid\":1,\"tid\":1,\"ts\":5,\"stack\":[]}\n").unwrap();
        let events = read_trace(&path).unwrap();
        assert_eq!(events.len(), 1);
        assert!(events[0].stack.is_empty());
    }

    #[test]
    fn lenient_read_reports_malformed_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.jsonl");
        let good = "{\"pid\":1,\"tid\":1,\"ts\":1,\"stack\":[\"0x1\"]}";
        let body = format!("{good}\n{good}\n{{\"pid\":1,\"tid\":1,\"ts\":2,\"stack\":[\"zzz\"]}}\n{good}\n");
        std::fs::write(&path, body).unwrap();

        let (events, warnings) = read_trace_lenient(&path).unwrap();
        assert_eq!(events.len(), 3);
        assert_eq!(warnings.len(), 1);
        assert_eq!(warnings[0].line, 3);

        let err = read_trace(&path).unwrap_err();
        assert!(matches!(err, TraceError::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn strict_read_rejects_backwards_timestamps() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.jsonl");
        std::fs::write(
            &path,
            "{\"pid\":1,\"tid\":1,\"ts\":10,\"stack\":[]}\n{\"pid\":1,\"tid\":1,\"ts\":9,\"stack\":[]}\n",
        )
        .unwrap();
        assert!(matches!(read_trace(&path), Err(TraceError::Parse { line: 2, .. })));
        // A different thread of the same process is an independent clock.
        std::fs::write(
            &path,
            "{\"pid\":1,\"tid\":1,\"ts\":10,\"stack\":[]}\n{\"pid\":1,\"tid\":2,\"ts\":9,\"stack\":[]}\n",
        )
        .unwrap();
        assert_eq!(read_trace(&path).unwrap().len(), 2);
    }

    #[test]
    fn minimal_module_map_is_valid_and_resolves() {
        let map = ModuleMap::new(vec![module("m.dll", 0x1000, 0x1000, &[("F", 0x200, 0x300)])])
            .unwrap();
        assert_eq!(map.qualified_name(0x1200).as_deref(), Some("m.dll:F"));
        assert_eq!(map.qualified_name(0x1300), None);
    }

    #[test]
    fn overlapping_modules_are_rejected() {
        let err = ModuleMap::new(vec![
            module("a.dll", 0x1000, 0x1000, &[]),
            module("b.dll", 0x1800, 0x1000, &[]),
        ])
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("a.dll") && msg.contains("b.dll"), "{msg}");
    }

    #[test]
    fn overlapping_exports_are_rejected() {
        let err = ModuleMap::new(vec![module(
            "a.dll",
            0x1000,
            0x1000,
            &[("F", 0x100, 0x300), ("G", 0x200, 0x400)],
        )])
        .unwrap_err();
        assert!(err.to_string().contains("overlap"));
    }

    #[test]
    fn names_with_separator_are_rejected() {
        assert!(ModuleMap::new(vec![module("a|b.dll", 0, 0x100, &[])]).is_err());
        assert!(ModuleMap::new(vec![module("a.dll", 0, 0x100, &[("x|y", 0, 8)])]).is_err());
    }

    #[test]
    fn module_map_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("map.json");
        let map = ModuleMap::new(vec![
            module("a.dll", 0x10000, 0x4000, &[("A", 0x0, 0x100), ("B", 0x100, 0x180)]),
            module("b.dll", 0x20000, 0x4000, &[("C", 0x10, 0x20)]),
            module("c.dll", 0x30000, 0x4000, &[("D", 0x0, 0x8)]),
        ])
        .unwrap();
        write_module_map(&path, &map).unwrap();
        assert_eq!(read_module_map(&path).unwrap(), map);
    }

    #[test]
    fn labels_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("labels.jsonl");
        let labels = vec![
            WindowLabel {
                pid: 3,
                window_start_ms: 0,
                window_end_ms: 6000,
                label: BehaviorClass::Keylogger,
            },
            WindowLabel {
                pid: 4,
                window_start_ms: 6000,
                window_end_ms: 12000,
                label: BehaviorClass::Custom("Ransom".into()),
            },
        ];
        write_labels(&path, &labels).unwrap();
        assert_eq!(read_labels(&path).unwrap(), labels);
    }

    proptest! {
        #[test]
        fn trace_round_trips(mut events in proptest::collection::vec(any_event(), 0..40)) {
            // Make the list valid: timestamps monotone per (pid, tid).
            let mut last: BTreeMap<(u32, u32), u64> = BTreeMap::new();
            for ev in &mut events {
                let floor = last.entry((ev.pid, ev.tid)).or_insert(0);
                ev.ts = ev.ts.max(*floor);
                *floor = ev.ts;
            }
            let dir = tempfile::tempdir().unwrap();
            let path = dir.path().join("t.jsonl");
            write_trace(&path, &events).unwrap();
            prop_assert_eq!(read_trace(&path).unwrap(), events);
        }

        #[test]
        fn overlap_rejection(spans in proptest::collection::vec((0u64..200, 1u64..60), 2..6)) {
            let modules: Vec<ModuleImage> = spans
                .iter()
                .enumerate()
                .map(|(i, &(base, size))| module(&format!("m{i}.dll"), base, size, &[]))
                .collect();
            let mut sorted: Vec<(u64, u64)> = spans.iter().map(|&(b, s)| (b, b + s)).collect();
            sorted.sort();
            let overlaps = sorted.windows(2).any(|w| w[1].0 < w[0].1);
            prop_assert_eq!(ModuleMap::new(modules).is_err(), overlaps);
        }
    }

    prop_compose! {
        fn any_event()(
            pid in 0u32..8,
            tid in 0u32..4,
            ts in 0u64..1_000_000,
            stack in proptest::collection::vec(any::<u64>(), 0..12),
        ) -> RawStackEvent {
            RawStackEvent { pid, tid, ts, stack }
        }
    }
}
