//! Thin dispatch layer between rayon and plain iteration.
//!
//! Every data-parallel loop in the crate goes through [`par_map`] (or
//! [`par_map_indexed`]) so that a `--no-default-features` build runs the
//! identical algorithm sequentially. Work items never share mutable state
//! and results are collected in input order, so thread count cannot change
//! any output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, in parallel when the `parallel` feature is on.
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Map `f` over `0..count`, in parallel when the `parallel` feature is on.
pub fn par_map_indexed<R, F>(count: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(f).collect()
    }
}

/// Sequential reference path with the same signature as [`par_map`].
///
/// Kept public so benchmarks can compare the two directly.
pub fn seq_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Pins the global worker-thread count. With the `parallel` feature off
/// this reports that the request has no effect (beyond one thread).
pub fn configure_threads(jobs: usize) -> Result<(), String> {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| format!("thread pool already configured: {e}"))
    }
    #[cfg(not(feature = "parallel"))]
    {
        if jobs > 1 {
            Err("built without the parallel feature; --jobs ignored".to_string())
        } else {
            Ok(())
        }
    }
}
