//! Order-stable pairwise summation.
//!
//! The recursion tree depends only on the slice length, so the same inputs
//! in the same order always produce the same bits.

const BLOCK: usize = 16;

pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= BLOCK {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Sum of `f` over the items, accumulated pairwise.
pub fn pairwise_sum_by<T>(items: &[T], f: impl Fn(&T) -> f64) -> f64 {
    let terms: Vec<f64> = items.iter().map(f).collect();
    pairwise_sum(&terms)
}
