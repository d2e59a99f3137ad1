//! Brute-force reference computations.
//!
//! These deliberately avoid the coset machinery of the engine: arrangements
//! come from raw permutations, operators from a coordinate displacement test,
//! and dimensions from counting Gelfand-Tsetlin patterns.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::signature::Arrangement;

/// Operator found by displacement: `src - dst = degree * (e_p - e_{n+q})`
/// in block coordinates, reported as the interval `(p, n + q - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OracleEdge {
    pub src: Arrangement,
    pub dst: Arrangement,
    pub j: usize,
    pub k: usize,
    pub degree: u64,
}

/// Every way of writing `lambda` as two descending blocks, by permuting it.
pub fn brute_arrangements(lambda: &[u64]) -> Result<BTreeSet<Arrangement>> {
    let n = lambda.len() / 2;
    if !lambda.len().is_multiple_of(2) || n > 4 {
        return Err(Error::OracleRefused(format!(
            "permutation enumeration needs an even length up to 8, got {}",
            lambda.len()
        )));
    }
    let descending = |b: &[u64]| b.windows(2).all(|w| w[0] >= w[1]);
    let mut out = BTreeSet::new();
    for perm in lambda.iter().copied().permutations(lambda.len()) {
        let (top, bottom) = perm.split_at(n);
        if descending(top) && descending(bottom) {
            out.insert(Arrangement::new(top.to_vec(), bottom.to_vec()));
        }
    }
    Ok(out)
}

/// Ordered pairs of arrangements related by exchanging one top value `x`
/// with one bottom value `y`, where `y` is the next smaller distinct value of
/// `lambda` after `x`.
pub fn brute_edges(arrangements: &BTreeSet<Arrangement>) -> Result<BTreeSet<OracleEdge>> {
    let Some(first) = arrangements.iter().next() else {
        return Ok(BTreeSet::new());
    };
    let n = first.n();
    if n > 4 {
        return Err(Error::OracleRefused(format!("n = {n} exceeds 4")));
    }
    let mut values: Vec<u64> = first.top().iter().chain(first.bottom()).copied().collect();
    values.sort_unstable();
    values.dedup();
    let adjacent: BTreeSet<(u64, u64)> = values.windows(2).map(|w| (w[1], w[0])).collect();

    let coords = |a: &Arrangement| -> Vec<i64> {
        a.top()
            .iter()
            .chain(a.bottom())
            .map(|&v| v as i64)
            .collect()
    };
    let mut out = BTreeSet::new();
    for a in arrangements {
        for b in arrangements {
            let diff: Vec<i64> = coords(a)
                .iter()
                .zip(coords(b))
                .map(|(x, y)| x - y)
                .collect();
            let nonzero: Vec<usize> = (0..2 * n).filter(|&i| diff[i] != 0).collect();
            let [p, r] = nonzero[..] else { continue };
            if p >= n || r < n || diff[p] <= 0 || diff[p] != -diff[r] {
                continue;
            }
            let x = a.top()[p];
            let y = b.top()[p];
            if !adjacent.contains(&(x, y)) {
                continue;
            }
            out.insert(OracleEdge {
                src: a.clone(),
                dst: b.clone(),
                j: p + 1,
                k: r,
                degree: diff[p] as u64,
            });
        }
    }
    Ok(out)
}

/// Dimension of the sl(N) irrep with Lambda+rho labels `m` (length `N - 1`),
/// by counting Gelfand-Tsetlin patterns. Restricted to `N <= 6`, entries 1..=3.
pub fn gt_dimension(m: &[u64]) -> Result<u64> {
    let big_n = m.len() + 1;
    if big_n > 6 || m.iter().any(|&x| x == 0 || x > 3) {
        return Err(Error::OracleRefused(format!(
            "Gelfand-Tsetlin count limited to N <= 6 and labels 1..=3, got {m:?}"
        )));
    }
    // highest weight m_i - 1 as a partition
    let mut top = vec![0u64; big_n];
    for i in (0..m.len()).rev() {
        top[i] = top[i + 1] + m[i] - 1;
    }
    let mut memo = HashMap::new();
    Ok(count_patterns(&top, &mut memo))
}

fn count_patterns(row: &[u64], memo: &mut HashMap<Vec<u64>, u64>) -> u64 {
    if row.len() <= 1 {
        return 1;
    }
    if let Some(&c) = memo.get(row) {
        return c;
    }
    let ranges: Vec<Vec<u64>> = (0..row.len() - 1)
        .map(|i| (row[i + 1]..=row[i]).collect())
        .collect();
    let total = ranges
        .into_iter()
        .multi_cartesian_product()
        .map(|next| count_patterns(&next, memo))
        .sum();
    memo.insert(row.to_vec(), total);
    total
}
