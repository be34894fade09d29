//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) the work is spread over the
//! rayon global pool; without it, or with [`Execution::Sequential`], the same
//! closures run on the calling thread. Results are always returned in input
//! order so reports stay deterministic.

/// How a batch of independent evaluations is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when this build can actually run work in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Order-preserving map.
    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        match self {
            Execution::Sequential => items.into_iter().map(f).collect(),
            Execution::Parallel => par_map(items, f),
        }
    }

    /// Order-preserving filter-map over a half-open integer range.
    pub fn filter_map_range<U, F>(self, lo: i64, hi: i64, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(i64) -> Option<U> + Sync + Send,
    {
        match self {
            Execution::Sequential => (lo..hi).filter_map(f).collect(),
            Execution::Parallel => par_filter_map_range(lo, hi, f),
        }
    }

    /// Applies `f` to every element of `rows` in place.
    pub fn for_each_mut<T, F>(self, rows: &mut [T], f: F)
    where
        T: Send,
        F: Fn(usize, &mut T) + Sync + Send,
    {
        match self {
            Execution::Sequential => rows.iter_mut().enumerate().for_each(|(i, r)| f(i, r)),
            Execution::Parallel => par_for_each_mut(rows, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn par_map<T: Send, U: Send, F: Fn(T) -> U + Sync + Send>(items: Vec<T>, f: F) -> Vec<U> {
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Send, U: Send, F: Fn(T) -> U + Sync + Send>(items: Vec<T>, f: F) -> Vec<U> {
    items.into_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
fn par_filter_map_range<U, F>(lo: i64, hi: i64, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(i64) -> Option<U> + Sync + Send,
{
    use rayon::prelude::*;
    (lo..hi).into_par_iter().filter_map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_filter_map_range<U, F>(lo: i64, hi: i64, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(i64) -> Option<U> + Sync + Send,
{
    (lo..hi).filter_map(f).collect()
}

#[cfg(feature = "parallel")]
fn par_for_each_mut<T: Send, F: Fn(usize, &mut T) + Sync + Send>(rows: &mut [T], f: F) {
    use rayon::prelude::*;
    rows.par_iter_mut().enumerate().for_each(|(i, r)| f(i, r));
}

#[cfg(not(feature = "parallel"))]
fn par_for_each_mut<T: Send, F: Fn(usize, &mut T) + Sync + Send>(rows: &mut [T], f: F) {
    rows.iter_mut().enumerate().for_each(|(i, r)| f(i, r));
}
