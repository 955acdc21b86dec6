//! Data-parallel execution helpers.
//!
//! Hot loops are expressed as independent per-index jobs collected in index
//! order, so the parallel and sequential paths produce bit-identical floats:
//! each job is evaluated sequentially inside and any reduction over the
//! collected results happens in index order on one thread.
//!
//! With the `parallel` feature (default) jobs run on the rayon pool; without
//! it the same code runs on the calling thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Evaluate `f(0..n)` and collect results in index order, sequentially.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync + Send,
    T: Send,
{
    (0..n).map(f).collect()
}

/// Evaluate `f(0..n)` on the rayon pool, collecting in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed_par<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync + Send,
    T: Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Evaluate `f(0..n)` and collect results in index order.
///
/// Dispatches to the rayon pool when the `parallel` feature is enabled,
/// otherwise runs sequentially. Both paths return identical values.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync + Send,
    T: Send,
{
    #[cfg(feature = "parallel")]
    {
        map_indexed_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_indexed_seq(n, f)
    }
}

/// Apply `f(i, &mut chunk_i)` to disjoint `chunk_len`-sized chunks of `data`.
///
/// Chunk `i` covers `data[i*chunk_len..(i+1)*chunk_len]`; the chunking is
/// fixed, so scheduling cannot change results.
pub fn for_each_chunk<F>(data: &mut [f64], chunk_len: usize, f: F)
where
    F: Fn(usize, &mut [f64]) + Sync + Send,
{
    debug_assert!(chunk_len > 0);
    #[cfg(feature = "parallel")]
    {
        data.par_chunks_mut(chunk_len)
            .enumerate()
            .for_each(|(i, c)| f(i, c));
    }
    #[cfg(not(feature = "parallel"))]
    {
        data.chunks_mut(chunk_len).enumerate().for_each(|(i, c)| f(i, c));
    }
}
