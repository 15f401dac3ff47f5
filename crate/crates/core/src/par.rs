//! Deterministic data-parallel helpers.
//!
//! All reductions chunk the input at a fixed size, reduce each chunk
//! sequentially and then combine the chunk results in index order, so the
//! `parallel` and sequential builds produce bit-identical floating-point
//! results and repeated runs are byte-identical.

/// Fixed chunk length for deterministic reductions.
pub const CHUNK: usize = 8192;

#[cfg(feature = "parallel")]
pub use rayon::prelude::*;

/// Sum `f(i)` over `0..n` chunk-deterministically.
pub fn sum_indexed<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let partials = chunk_map(n, |lo, hi| (lo..hi).map(&f).sum::<f64>());
    partials.into_iter().sum()
}

/// Map chunk ranges `[lo, hi)` to partial results, in parallel when enabled,
/// collected in chunk order.
pub fn chunk_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, usize) -> T + Sync,
{
    let ranges: Vec<(usize, usize)> = (0..n.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(n)))
        .collect();
    #[cfg(feature = "parallel")]
    {
        ranges.par_iter().map(|&(lo, hi)| f(lo, hi)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ranges.iter().map(|&(lo, hi)| f(lo, hi)).collect()
    }
}

/// Fill `out[i] = f(i)`, in parallel when enabled.
pub fn fill_indexed<T, F>(out: &mut [T], f: F)
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    {
        out.par_iter_mut().enumerate().for_each(|(i, v)| *v = f(i));
    }
    #[cfg(not(feature = "parallel"))]
    {
        for (i, v) in out.iter_mut().enumerate() {
            *v = f(i);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunked_sum_matches_sequential() {
        let n = 100_000;
        let chunked = sum_indexed(n, |i| (i as f64).sqrt().sin());
        let mut acc = 0.0;
        for c in 0..n.div_ceil(CHUNK) {
            let (lo, hi) = (c * CHUNK, ((c + 1) * CHUNK).min(n));
            acc += (lo..hi).map(|i| (i as f64).sqrt().sin()).sum::<f64>();
        }
        assert_eq!(chunked, acc);
    }
}
