//! Data-parallel helpers. With the default `parallel` feature these run on
//! rayon; without it they degrade to plain sequential iteration so the
//! kernel builds without a thread pool.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_range<U, F>(range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    range.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F>(range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    range.map(f).collect()
}

/// Sequential twins, kept unconditionally so benches can compare.
pub mod sequential {
    pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
    where
        F: Fn(&T) -> U,
    {
        items.iter().map(f).collect()
    }

    pub fn map_range<U, F>(range: std::ops::Range<usize>, f: F) -> Vec<U>
    where
        F: Fn(usize) -> U,
    {
        range.map(f).collect()
    }
}
