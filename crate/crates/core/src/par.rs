//! Order-preserving map over a slice, on a rayon pool when the `parallel`
//! feature is on and sequentially otherwise.

/// `items.iter().map(f)` with results in input order. `jobs = 0` lets rayon
/// pick the thread count; `jobs = 1` runs on the calling thread.
#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], _jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    #[test]
    fn keeps_order() {
        let v: Vec<u64> = (0..1000).collect();
        for jobs in [0, 1, 3] {
            let out = super::map(&v, jobs, |x| x * x);
            assert_eq!(out, v.iter().map(|x| x * x).collect::<Vec<_>>());
        }
    }
}
