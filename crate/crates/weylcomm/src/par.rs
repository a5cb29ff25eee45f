//! Parallel execution helpers.
//!
//! With the `parallel` feature the data-parallel loops fan out over rayon;
//! without it they run sequentially with the same signatures. All callers
//! reduce by exact addition or conjunction, so results are bit-identical
//! either way.

#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}

/// Configures the global worker pool; 0 keeps the default. A no-op without
/// the `parallel` feature, and on repeat calls.
#[cfg(feature = "parallel")]
pub fn set_threads(n: usize) {
    if n > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

#[cfg(not(feature = "parallel"))]
pub fn set_threads(_n: usize) {}
