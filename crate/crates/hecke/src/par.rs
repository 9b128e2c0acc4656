//! Data-parallel map helper with a sequential fallback.
//!
//! The verification and derivation sweeps are independent per representation,
//! so they map cleanly onto a work-stealing pool. Results are always collected
//! in input order, which keeps every report byte-identical across thread
//! counts and with the `parallel` feature disabled.

/// Execution mode for a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled; otherwise falls
    /// back to sequential execution.
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        Mode::Parallel
    }
}

/// Maps `f` over `items`, preserving input order in the output.
pub fn map_collect<T, U, F>(mode: Mode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        Mode::Sequential => items.into_iter().map(f).collect(),
        Mode::Parallel => par_map(items, f),
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
