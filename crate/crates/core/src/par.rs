//! Maybe-parallel execution helpers.
//!
//! With the `parallel` feature (on by default) these fan work out over
//! rayon's global pool when asked to; without the feature, or when the
//! caller passes `parallel = false`, the same closures run inline. Both
//! paths produce identical results because every work item is
//! independent.

#[cfg(feature = "parallel")]
pub(crate) fn map<T, U, F>(parallel: bool, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    use rayon::prelude::*;
    if parallel {
        items.into_par_iter().map(f).collect()
    } else {
        items.into_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map<T, U, F>(_parallel: bool, items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn for_each_mut<T, F>(parallel: bool, items: &mut [T], f: F)
where
    T: Send,
    F: Fn(&mut T) + Send + Sync,
{
    use rayon::prelude::*;
    if parallel {
        items.par_iter_mut().for_each(f);
    } else {
        items.iter_mut().for_each(f);
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn for_each_mut<T, F>(_parallel: bool, items: &mut [T], f: F)
where
    F: Fn(&mut T),
{
    items.iter_mut().for_each(f);
}
