//! Binomial coefficients and the lexicographic ranking of k-subsets.
//!
//! Token-graph vertices are the k-subsets of the base vertex set, listed in
//! lexicographic order; rank/unrank give O(k) translation between a subset
//! and its index without storing a table.

/// `C(n, k)` as a `u64`; saturates on overflow (callers stay far below that
/// for any graph we can actually build).
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        // Multiply before dividing: (acc * (n - i)) is always divisible by
        // (i + 1) at this point in the product.
        acc = acc
            .saturating_mul((n - i) as u64)
            .checked_div((i + 1) as u64)
            .unwrap_or(u64::MAX);
    }
    acc
}

/// Lexicographic rank of a strictly increasing k-subset of `[0, n)`.
pub fn subset_rank(n: usize, subset: &[usize]) -> u64 {
    let k = subset.len();
    let mut rank: u64 = 0;
    let mut prev = 0usize; // smallest value allowed at the current position
    for (i, &v) in subset.iter().enumerate() {
        for smaller in prev..v {
            rank += binomial(n - smaller - 1, k - i - 1);
        }
        prev = v + 1;
    }
    rank
}

/// Inverse of [`subset_rank`]: the k-subset of `[0, n)` at `rank` in lex order.
pub fn subset_unrank(n: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut v = 0usize;
    for i in 0..k {
        loop {
            let block = binomial(n - v - 1, k - i - 1);
            if rank < block {
                out.push(v);
                v += 1;
                break;
            }
            rank -= block;
            v += 1;
        }
    }
    out
}
