//! Adaptive call-stack trace reduction and real-time behavior detection.
//!
//! The crate turns raw call-stack audit events into compact per-process
//! feature vectors and classifies them into behavior classes:
//!
//! 1. [`trace`] — domain types plus the trace / module-map file formats.
//! 2. [`resolver`] — address-to-API symbolication with use/useless caches
//!    and per-stack parsing.
//! 3. [`api_selection`] — learns which APIs to drop: trivial APIs via a
//!    call graph, redundant APIs via association rules, low-importance
//!    APIs via classifier importances.
//! 4. [`stack_selection`] — drops behavior-uncorrelated call stacks
//!    (BCI/MBCI) and compresses repetition (duplicate removal, loop
//!    compression).
//! 5. [`embedding`] — per-process tumbling windows and API-frequency
//!    vectors.
//! 6. [`forest`] / [`metrics`] — a self-contained random-forest
//!    classifier with Gini importances, plus evaluation metrics.
//! 7. [`pipeline`] — collector and detector-service orchestration, the
//!    reduction ledger, and the wire protocol.
//! 8. [`synthgen`] — a deterministic synthetic workload generator used
//!    for desk-scale verification.
//!
//! Each capability has a runnable example under `examples/`; the `paris`
//! binary exposes the same flows as subcommands (`gen`, `train`,
//! `collect`, `detect`, `eval`, `stats`).

pub mod api_selection;
pub mod embedding;
pub mod forest;
pub mod metrics;
pub mod pipeline;
pub mod resolver;
pub mod stack_selection;
pub mod synthgen;
pub mod trace;
