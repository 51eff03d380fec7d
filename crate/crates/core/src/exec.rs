//! Worker-count resolution and the chunked parallel map shared by the batch,
//! Monte Carlo and benchmark routines.
//!
//! Work is always split into fixed-size chunks indexed from zero, and every
//! chunk is computed by the same code whatever the worker count, so outputs
//! never depend on scheduling.

use std::num::NonZeroUsize;

use crate::error::{Result, WedgeError};

/// Environment variable overriding the automatic worker count.
pub const WORKERS_ENV: &str = "WEDGE_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Workers {
    /// `WEDGE_WORKERS` if set, otherwise the number of logical cores.
    #[default]
    Auto,
    Fixed(NonZeroUsize),
}

impl Workers {
    pub fn fixed(count: usize) -> Result<Self> {
        NonZeroUsize::new(count)
            .map(Workers::Fixed)
            .ok_or_else(|| WedgeError::Workers("worker count must be positive".into()))
    }

    /// Value of `WEDGE_WORKERS`, if set.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var(WORKERS_ENV) {
            Ok(raw) => {
                let count = raw
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| WedgeError::Workers(format!("{WORKERS_ENV}={raw:?} is not a positive integer")))?;
                Self::fixed(count).map(Some)
            }
            Err(std::env::VarError::NotPresent) => Ok(None),
            Err(e) => Err(WedgeError::Workers(format!("{WORKERS_ENV}: {e}"))),
        }
    }

    pub fn resolve(self) -> Result<usize> {
        match self {
            Workers::Fixed(n) => Ok(n.get()),
            Workers::Auto => match Self::from_env()? {
                Some(w) => w.resolve(),
                None => Ok(std::thread::available_parallelism().map_or(1, NonZeroUsize::get)),
            },
        }
    }
}

/// Runs `f(chunk_index, chunk)` over consecutive `chunk_len`-sized pieces of
/// `data`.
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], chunk_len: usize, workers: Workers, f: F) -> Result<()>
where
    T: Send,
    F: Fn(usize, &mut [T]) + Send + Sync,
{
    let threads = workers.resolve()?;
    if threads == 1 || data.len() <= chunk_len {
        data.chunks_mut(chunk_len).enumerate().for_each(|(i, c)| f(i, c));
        return Ok(());
    }
    run_parallel(threads, data, chunk_len, f)
}

#[cfg(feature = "parallel")]
fn run_parallel<T, F>(threads: usize, data: &mut [T], chunk_len: usize, f: F) -> Result<()>
where
    T: Send,
    F: Fn(usize, &mut [T]) + Send + Sync,
{
    use rayon::prelude::*;
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| WedgeError::Workers(e.to_string()))?;
    pool.install(|| data.par_chunks_mut(chunk_len).enumerate().for_each(|(i, c)| f(i, c)));
    Ok(())
}

#[cfg(not(feature = "parallel"))]
fn run_parallel<T, F>(_threads: usize, data: &mut [T], chunk_len: usize, f: F) -> Result<()>
where
    T: Send,
    F: Fn(usize, &mut [T]) + Send + Sync,
{
    data.chunks_mut(chunk_len).enumerate().for_each(|(i, c)| f(i, c));
    Ok(())
}

/// `(0..count).map(f)` evaluated in chunks, results in index order.
pub(crate) fn map_indexed<R, F>(count: usize, chunk_len: usize, workers: Workers, f: F) -> Result<Vec<R>>
where
    R: Send + Default + Clone,
    F: Fn(usize) -> R + Send + Sync,
{
    let mut out = vec![R::default(); count];
    for_each_chunk_mut(&mut out, chunk_len, workers, |chunk, slots| {
        let start = chunk * chunk_len;
        for (j, slot) in slots.iter_mut().enumerate() {
            *slot = f(start + j);
        }
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_rejects_zero() {
        assert!(Workers::fixed(0).is_err());
        assert_eq!(Workers::fixed(3).unwrap().resolve().unwrap(), 3);
    }

    #[test]
    fn map_is_ordered_for_any_worker_count() {
        let want: Vec<usize> = (0..10_000).map(|i| i * i).collect();
        for w in [1, 2, 5] {
            let got = map_indexed(10_000, 64, Workers::fixed(w).unwrap(), |i| i * i).unwrap();
            assert_eq!(got, want);
        }
    }
}
