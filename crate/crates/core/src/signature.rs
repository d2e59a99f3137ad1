//! Signatures of elementary representations.
//!
//! An ER of a multiplet is fixed by how the Lambda+rho values are shared
//! between the two sl(n) factors of M. Reading off within-block differences
//! gives the M-Dynkin labels; the block-sum imbalance gives the character of A.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::roots::{DynkinLabels, LambdaVector, Rank};

/// A split of the Lambda+rho multiset into two weakly decreasing blocks of
/// size `n`. Blocks are kept sorted, so equality is equality of cosets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrangement {
    top: Vec<u64>,
    bottom: Vec<u64>,
}

impl Arrangement {
    /// Builds the canonical form; blocks may be passed in any order.
    pub fn new(mut top: Vec<u64>, mut bottom: Vec<u64>) -> Self {
        assert_eq!(top.len(), bottom.len(), "blocks must have equal size");
        top.sort_unstable_by(|a, b| b.cmp(a));
        bottom.sort_unstable_by(|a, b| b.cmp(a));
        Arrangement { top, bottom }
    }

    pub fn top(&self) -> &[u64] {
        &self.top
    }

    pub fn bottom(&self) -> &[u64] {
        &self.bottom
    }

    /// Block size `n`.
    pub fn n(&self) -> usize {
        self.top.len()
    }

    pub fn is_self_partner(&self) -> bool {
        self.top == self.bottom
    }

    /// True when all within-block differences of one block vanish, i.e.
    /// one sl(n) factor carries no M-data at all. Never true for `n = 1`.
    pub fn has_constant_block(&self) -> bool {
        let constant = |b: &[u64]| b.len() > 1 && b.iter().all_equal();
        constant(&self.top) || constant(&self.bottom)
    }

    /// Stable identifier `"t1,t2,..|b1,b2,.."`.
    pub fn id(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}|{}",
            self.top.iter().join(","),
            self.bottom.iter().join(",")
        )
    }
}

impl FromStr for Arrangement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (t, b) = s
            .split_once('|')
            .ok_or_else(|| format!("vertex id {s:?} lacks a '|' separator"))?;
        let parse = |part: &str| -> Result<Vec<u64>, String> {
            if part.trim().is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u64>()
                        .map_err(|e| format!("bad entry {x:?} in vertex id: {e}"))
                })
                .collect()
        };
        let (top, bottom) = (parse(t)?, parse(b)?);
        if top.len() != bottom.len() {
            return Err(format!("vertex id {s:?} has blocks of unequal size"));
        }
        Ok(Arrangement::new(top, bottom))
    }
}

/// `chi = {n_1..n_{n-1}, n_{n+1}..n_{2n-1}; c}` with `c` stored doubled.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ErSignature {
    pub m_labels: Vec<u64>,
    pub two_c: i64,
}

impl ErSignature {
    /// The `*` operation: exchange the two sl(n) halves of the M-labels.
    pub fn starred_labels(&self) -> Vec<u64> {
        swap_halves(&self.m_labels)
    }
}

impl fmt::Display for ErSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{({}); {}}}",
            self.m_labels.iter().join(","),
            format_half(self.two_c)
        )
    }
}

pub(crate) fn swap_halves(labels: &[u64]) -> Vec<u64> {
    let h = labels.len() / 2;
    labels[h..].iter().chain(&labels[..h]).copied().collect()
}

/// Renders a doubled quantity: `-6 -> "-3"`, `3 -> "3/2"`.
pub fn format_half(twice: i64) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

/// Every distinct arrangement of `lambda`, ordered by `(2c, top block)`.
pub fn all_arrangements(lambda: &LambdaVector) -> Vec<Arrangement> {
    let values = lambda.values();
    let n = lambda.half_len();
    let distinct: BTreeSet<Arrangement> = (0..values.len())
        .combinations(n)
        .map(|subset| split(values, &subset))
        .collect();
    let mut out: Vec<_> = distinct.into_iter().collect();
    out.sort_by_cached_key(|a| (signature_of(a).two_c, a.top.clone()));
    out
}

/// Arrangement whose top block holds the values at the given 0-based positions.
pub(crate) fn split(values: &[u64], top_positions: &[usize]) -> Arrangement {
    let mut top = Vec::with_capacity(top_positions.len());
    let mut bottom = Vec::with_capacity(values.len() - top_positions.len());
    let mut it = top_positions.iter().peekable();
    for (i, &v) in values.iter().enumerate() {
        if it.peek() == Some(&&i) {
            it.next();
            top.push(v);
        } else {
            bottom.push(v);
        }
    }
    Arrangement::new(top, bottom)
}

pub fn signature_of(arr: &Arrangement) -> ErSignature {
    let diffs = |b: &[u64]| b.windows(2).map(|w| w[0] - w[1]).collect::<Vec<_>>();
    let mut m_labels = diffs(&arr.top);
    m_labels.extend(diffs(&arr.bottom));
    let sum = |b: &[u64]| b.iter().map(|&v| v as i64).sum::<i64>();
    ErSignature {
        m_labels,
        two_c: sum(&arr.bottom) - sum(&arr.top),
    }
}

/// Knapp-Stein partner: the restricted Weyl reflection swaps the blocks.
pub fn ks_partner(arr: &Arrangement) -> Arrangement {
    Arrangement {
        top: arr.bottom.clone(),
        bottom: arr.top.clone(),
    }
}

/// `2 m_rho = sum_i min(i, 2n - i) m_i`.
pub fn m_rho(labels: &DynkinLabels) -> i64 {
    let big_n = labels.rank().big_n();
    labels
        .values()
        .iter()
        .enumerate()
        .map(|(idx, &m)| {
            let i = idx + 1;
            i.min(big_n - i) as i64 * m as i64
        })
        .sum()
}

/// Conformal weight, doubled: `2d = 2c + n^2`.
pub fn conformal_d(sig: &ErSignature, rank: Rank) -> i64 {
    sig.two_c + (rank.n() * rank.n()) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::lambda_vector;

    fn lam(v: &[u64]) -> LambdaVector {
        LambdaVector::from_values(v.to_vec()).unwrap()
    }

    fn arr(t: &[u64], b: &[u64]) -> Arrangement {
        Arrangement::new(t.to_vec(), b.to_vec())
    }

    fn labels(v: &[u64]) -> DynkinLabels {
        let n = (v.len() as u32).div_ceil(2);
        DynkinLabels::new(Rank::new(n).unwrap(), v.to_vec()).unwrap()
    }

    #[test]
    fn arrangement_counts() {
        assert_eq!(all_arrangements(&lam(&[4, 3, 1, 0])).len(), 6);
        assert_eq!(all_arrangements(&lam(&[3, 3, 2, 2, 0, 0])).len(), 7);
        assert_eq!(all_arrangements(&lam(&[0, 0, 0, 0])).len(), 1);
    }

    #[test]
    fn arrangement_order_is_by_weight_then_top() {
        let all = all_arrangements(&lam(&[4, 3, 1, 0]));
        let keys: Vec<_> = all.iter().map(|a| signature_of(a).two_c).collect();
        assert_eq!(keys, vec![-6, -2, 0, 0, 2, 6]);
        // the two c = 0 members are ordered by top block
        assert_eq!(all[2].top(), &[3, 1]);
        assert_eq!(all[3].top(), &[4, 0]);
    }

    #[test]
    fn signatures_at_1_2_1() {
        let s = signature_of(&arr(&[4, 3], &[1, 0]));
        assert_eq!(s.m_labels, vec![1, 1]);
        assert_eq!(s.two_c, -6);
        let s = signature_of(&arr(&[4, 1], &[3, 0]));
        assert_eq!(s.m_labels, vec![3, 3]);
        assert_eq!(s.two_c, -2);
        let s = signature_of(&arr(&[3, 1], &[4, 0]));
        assert_eq!(s.m_labels, vec![2, 4]);
        assert_eq!(s.two_c, 0);
    }

    #[test]
    fn partners() {
        let a = arr(&[4, 3], &[1, 0]);
        let p = ks_partner(&a);
        assert_eq!(p, arr(&[1, 0], &[4, 3]));
        let (sa, sp) = (signature_of(&a), signature_of(&p));
        assert_eq!(sp.m_labels, sa.starred_labels());
        assert_eq!(sp.two_c, 3 * 2);

        let singlet = arr(&[3, 2, 0], &[3, 2, 0]);
        assert_eq!(ks_partner(&singlet), singlet);
        assert!(singlet.is_self_partner());
    }

    #[test]
    fn m_rho_values() {
        assert_eq!(m_rho(&labels(&[1; 5])), 9);
        assert_eq!(m_rho(&labels(&[1, 2, 1])), 6);
        assert_eq!(m_rho(&labels(&[1; 7])), 16);
    }

    #[test]
    fn conformal_weights() {
        let rank = Rank::new(2).unwrap();
        let lam = lambda_vector(&labels(&[1, 1, 1]));
        let all = all_arrangements(&lam);
        let minus = signature_of(all.first().unwrap());
        let plus = signature_of(all.last().unwrap());
        assert_eq!(minus.two_c, -4);
        assert_eq!(conformal_d(&minus, rank), 0);
        assert_eq!(conformal_d(&plus, rank), 8);
        let mid = ErSignature {
            m_labels: vec![1, 1],
            two_c: 0,
        };
        assert_eq!(conformal_d(&mid, rank), 4);
    }

    #[test]
    fn id_round_trip() {
        let a = arr(&[13, 3, 0], &[10, 10, 2]);
        assert_eq!(a.id(), "13,3,0|10,10,2");
        assert_eq!(a.id().parse::<Arrangement>().unwrap(), a);
        assert!("1,2".parse::<Arrangement>().is_err());
        assert!("1|2,3".parse::<Arrangement>().is_err());
        assert!("1,x|2,3".parse::<Arrangement>().is_err());
    }

    #[test]
    fn half_formatting() {
        assert_eq!(format_half(-6), "-3");
        assert_eq!(format_half(3), "3/2");
        assert_eq!(format_half(-1), "-1/2");
        assert_eq!(format_half(0), "0");
    }

    #[test]
    fn constant_blocks() {
        assert!(arr(&[5, 5], &[3, 0]).has_constant_block());
        assert!(!arr(&[5, 3], &[5, 0]).has_constant_block());
        assert!(!arr(&[5], &[0]).has_constant_block());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn any_labels() -> impl Strategy<Value = DynkinLabels> {
            (1u32..=4).prop_flat_map(|n| {
                prop::collection::vec(0u64..8, (2 * n - 1) as usize)
                    .prop_map(move |m| DynkinLabels::new(Rank::new(n).unwrap(), m).unwrap())
            })
        }

        fn binomial(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }

        proptest! {
            #[test]
            fn arrangement_invariants(l in any_labels()) {
                let n = l.rank().n();
                let lam = lambda_vector(&l);
                let all = all_arrangements(&lam);
                if lam.is_strict() {
                    prop_assert_eq!(all.len(), binomial(2 * n, n));
                }
                let mut total = 0i64;
                for a in &all {
                    let s = signature_of(a);
                    let p = ks_partner(a);
                    let sp = signature_of(&p);
                    prop_assert_eq!(ks_partner(&p), a.clone());
                    prop_assert!(all.contains(&p));
                    prop_assert_eq!(sp.two_c, -s.two_c);
                    prop_assert_eq!(&sp.m_labels, &s.starred_labels());
                    if p == *a {
                        prop_assert_eq!(s.two_c, 0);
                        prop_assert_eq!(&s.m_labels, &s.starred_labels());
                    }
                    prop_assert_eq!(s.m_labels.len(), 2 * n - 2);
                    prop_assert_eq!((s.two_c + m_rho(&l)).rem_euclid(2), 0);
                    total += s.two_c;
                }
                prop_assert_eq!(total, 0);
                // chi_0^- : top block is the leading half of lambda
                let v = lam.values();
                let chi0 = Arrangement::new(v[..n].to_vec(), v[n..].to_vec());
                prop_assert_eq!(signature_of(&chi0).two_c, -m_rho(&l));
            }
        }
    }
}
