//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the per-index work runs on the rayon pool;
//! without it the same closures run on the calling thread. In both cases the
//! partial results are combined left to right in index order, so floating
//! results are bit-identical regardless of the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Evaluates `f` at every index of `range`, preserving order.
pub fn map_range<T, F>(range: std::ops::Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.map(f).collect()
    }
}

/// Evaluates `f` on every item, preserving order.
pub fn map_slice<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
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

/// Sum of `f(i)` over `range`, reduced sequentially in index order.
pub fn sum_range<S, F>(range: std::ops::Range<u64>, f: F) -> S
where
    S: Send + num_traits::Zero + std::ops::AddAssign,
    F: Fn(u64) -> S + Sync + Send,
{
    let mut acc = S::zero();
    for part in map_range(range, f) {
        acc += part;
    }
    acc
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
