/// How per-node kernels are scheduled.
///
/// Both modes produce bit-identical results: every node is evaluated by the
/// same sequential arithmetic and results are collected in node order.
/// Without the `parallel` feature, [`Execution::Parallel`] falls back to the
/// sequential path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this mode actually fans out to a thread pool in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Evaluates `f` for every index in `0..n`, returning results in index order.
pub(crate) fn map_indices<T, F>(n: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Sums `f(i)` over `0..n` with an associative integer reduction.
pub(crate) fn sum_indices<const K: usize, F>(n: usize, exec: Execution, f: F) -> [u64; K]
where
    F: Fn(usize) -> [u64; K] + Sync + Send,
{
    let add = |mut a: [u64; K], b: [u64; K]| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).reduce(|| [0; K], add);
    }
    let _ = exec;
    (0..n).map(f).fold([0; K], add)
}

/// Pairwise (cascade) summation. The association order depends only on the
/// slice length, so the result is reproducible.
pub(crate) fn pairwise_sum(xs: &[f64]) -> f64 {
    const BLOCK: usize = 16;
    if xs.len() <= BLOCK {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}
