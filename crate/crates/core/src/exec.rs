//! Sequential or rayon-backed evaluation of independent work items.
//!
//! Degrees of a Hilbert sweep, trials of a gin computation and cells of an
//! `(r, m)` grid are independent pure computations. Callers pick an
//! [`Execution`] explicitly (the `*_with` entry points) or take the default,
//! which is [`Execution::Parallel`] when the `parallel` feature is enabled.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Execution {
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => items.into_iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.into_par_iter().map(f).collect(),
        }
    }

    /// Like [`Execution::map`] but stops at the first error.
    pub fn try_map<T, R, E, F>(self, items: Vec<T>, f: F) -> Result<Vec<R>, E>
    where
        T: Send,
        R: Send,
        E: Send,
        F: Fn(T) -> Result<R, E> + Sync + Send,
    {
        match self {
            Execution::Sequential => items.into_iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.into_par_iter().map(f).collect(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Execution::Sequential => "sequential",
            #[cfg(feature = "parallel")]
            Execution::Parallel => "parallel",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let items: Vec<u32> = (0..100).collect();
        let out = Execution::default().map(items.clone(), |x| x * x);
        let expected: Vec<u32> = items.iter().map(|x| x * x).collect();
        assert_eq!(out, expected);
        assert_eq!(Execution::Sequential.map(items, |x| x * x), expected);
    }

    #[test]
    fn try_map_reports_error() {
        let r: Result<Vec<u32>, String> =
            Execution::default().try_map(vec![1, 2, 3], |x| if x == 2 { Err("two".to_string()) } else { Ok(x) });
        assert_eq!(r, Err("two".to_string()));
    }
}
