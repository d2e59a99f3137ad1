//! The A_{2n-1} root system in the epsilon realization.
//!
//! Positive roots are intervals `alpha_{jk} = alpha_j + ... + alpha_k` of simple
//! roots. A root is noncompact for su(n,n) when its interval contains the
//! middle simple root `alpha_n`; the compact ones span sl(n) + sl(n).

use std::fmt;

use crate::error::{Error, Result};

/// The su(n,n) rank parameter `n`. The complexified algebra is `A_{2n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(u32);

impl Rank {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank);
        }
        Ok(Rank(n))
    }

    pub fn n(self) -> usize {
        self.0 as usize
    }

    /// `N = 2n`, the size of the epsilon coordinate vector.
    pub fn big_n(self) -> usize {
        2 * self.n()
    }

    /// Number of simple roots, `2n - 1`.
    pub fn simple_count(self) -> usize {
        self.big_n() - 1
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Positive root `alpha_{jk}` (1-based, `j <= k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub j: usize,
    pub k: usize,
    pub noncompact: bool,
}

impl Root {
    pub fn new(rank: Rank, j: usize, k: usize) -> Result<Self> {
        if j == 0 || j > k || k > rank.simple_count() {
            return Err(Error::RootOutOfRange {
                j,
                k,
                rank: rank.simple_count(),
            });
        }
        Ok(Root {
            j,
            k,
            noncompact: j <= rank.n() && rank.n() <= k,
        })
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.k
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_simple() {
            write!(f, "α_{{{}}}", self.j)
        } else {
            write!(f, "α_{{{}..{}}}", self.j, self.k)
        }
    }
}

/// All `N(N-1)/2` positive roots in lexicographic `(j, k)` order.
pub fn positive_roots(rank: Rank) -> Vec<Root> {
    let last = rank.simple_count();
    (1..=last)
        .flat_map(|j| (j..=last).map(move |k| (j, k)))
        .map(|(j, k)| Root::new(rank, j, k).expect("interval within bounds"))
        .collect()
}

/// Dynkin labels `m_1, ..., m_{2n-1}`, i.e. the pairings of Lambda+rho with the
/// simple coroots. Zeros encode reduced multiplets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinLabels {
    rank: Rank,
    m: Vec<u64>,
}

impl DynkinLabels {
    pub fn new(rank: Rank, m: Vec<u64>) -> Result<Self> {
        if m.len() != rank.simple_count() {
            return Err(Error::LabelCount {
                n: rank.0,
                expected: rank.simple_count(),
                got: m.len(),
            });
        }
        Ok(DynkinLabels { rank, m })
    }

    /// All labels equal to one, i.e. `Lambda = 0`.
    pub fn ones(rank: Rank) -> Self {
        DynkinLabels {
            rank,
            m: vec![1; rank.simple_count()],
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn values(&self) -> &[u64] {
        &self.m
    }

    /// `m_i`, 1-based.
    pub fn get(&self, i: usize) -> u64 {
        self.m[i - 1]
    }

    /// Indices `i` with `m_i = 0`, ascending.
    pub fn zero_set(&self) -> Vec<usize> {
        self.m
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_main(&self) -> bool {
        self.m.iter().all(|&v| v > 0)
    }
}

fn check_root(labels: &DynkinLabels, root: &Root) -> Result<()> {
    if root.j == 0 || root.j > root.k || root.k > labels.m.len() {
        return Err(Error::RootOutOfRange {
            j: root.j,
            k: root.k,
            rank: labels.m.len(),
        });
    }
    Ok(())
}

/// Harish-Chandra parameter `m_beta = (Lambda+rho, beta)`; for an interval root
/// this is the sum of the Dynkin labels it covers.
pub fn hc_param(labels: &DynkinLabels, root: &Root) -> Result<u64> {
    check_root(labels, root)?;
    Ok(labels.m[root.j - 1..root.k].iter().sum())
}

/// Degree of the BGG embedding `V^{Lambda - m beta} -> V^Lambda`, if any.
/// Simply-laced, so the coroot pairing equals the Harish-Chandra parameter.
pub fn bgg_degree(labels: &DynkinLabels, root: &Root) -> Result<Option<u64>> {
    Ok(Some(hc_param(labels, root)?).filter(|&m| m >= 1))
}

/// Lambda+rho in epsilon coordinates, normalized so the last entry is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaVector(Vec<u64>);

impl LambdaVector {
    /// Accepts any weakly decreasing vector of even length ending in zero.
    pub fn from_values(values: Vec<u64>) -> Option<Self> {
        let ok = !values.is_empty()
            && values.len().is_multiple_of(2)
            && values.last() == Some(&0)
            && values.windows(2).all(|w| w[0] >= w[1]);
        ok.then_some(LambdaVector(values))
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    /// The `n` of the governing su(n,n).
    pub fn half_len(&self) -> usize {
        self.0.len() / 2
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Consecutive differences; inverse of [`lambda_vector`].
    pub fn labels(&self) -> Vec<u64> {
        self.0.windows(2).map(|w| w[0] - w[1]).collect()
    }
}

/// Suffix sums `lambda_i = m_i + ... + m_{2n-1}`, `lambda_{2n} = 0`.
pub fn lambda_vector(labels: &DynkinLabels) -> LambdaVector {
    let mut out = vec![0u64; labels.m.len() + 1];
    for i in (0..labels.m.len()).rev() {
        out[i] = out[i + 1] + labels.m[i];
    }
    LambdaVector(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(v: &[u64]) -> DynkinLabels {
        let n = (v.len() as u32).div_ceil(2);
        DynkinLabels::new(Rank::new(n).unwrap(), v.to_vec()).unwrap()
    }

    fn root(n: u32, j: usize, k: usize) -> Root {
        Root::new(Rank::new(n).unwrap(), j, k).unwrap()
    }

    #[test]
    fn root_counts() {
        let r2 = Rank::new(2).unwrap();
        let roots = positive_roots(r2);
        assert_eq!(roots.len(), 6);
        let noncompact: Vec<_> = roots
            .iter()
            .filter(|r| r.noncompact)
            .map(|r| (r.j, r.k))
            .collect();
        assert_eq!(noncompact, vec![(1, 2), (1, 3), (2, 2), (2, 3)]);
        let compact: Vec<_> = roots
            .iter()
            .filter(|r| !r.noncompact)
            .map(|r| (r.j, r.k))
            .collect();
        assert_eq!(compact, vec![(1, 1), (3, 3)]);

        let r1 = positive_roots(Rank::new(1).unwrap());
        assert_eq!(r1.len(), 1);
        assert!(r1[0].noncompact);

        for n in 1..=6u32 {
            let rank = Rank::new(n).unwrap();
            let roots = positive_roots(rank);
            let big = rank.big_n();
            assert_eq!(roots.len(), big * (big - 1) / 2);
            assert_eq!(
                roots.iter().filter(|r| r.noncompact).count(),
                (n * n) as usize
            );
        }
    }

    #[test]
    fn hc_params() {
        assert_eq!(hc_param(&labels(&[1, 2, 1]), &root(2, 1, 3)).unwrap(), 4);
        assert_eq!(hc_param(&labels(&[1, 2, 1]), &root(2, 2, 2)).unwrap(), 2);
        assert_eq!(hc_param(&labels(&[1; 5]), &root(3, 1, 5)).unwrap(), 5);
    }

    #[test]
    fn bgg_degrees() {
        assert_eq!(
            bgg_degree(&labels(&[1, 2, 1]), &root(2, 2, 3)).unwrap(),
            Some(3)
        );
        assert_eq!(
            bgg_degree(&labels(&[0, 1, 0, 2, 0]), &root(3, 1, 1)).unwrap(),
            None
        );
        assert_eq!(
            bgg_degree(&labels(&[1, 1, 1]), &root(2, 1, 3)).unwrap(),
            Some(3)
        );
    }

    #[test]
    fn root_out_of_range() {
        let r2 = Rank::new(2).unwrap();
        assert!(Root::new(r2, 0, 1).is_err());
        assert!(Root::new(r2, 2, 1).is_err());
        assert!(Root::new(r2, 1, 4).is_err());
        // a root built for a larger rank is rejected by smaller labels
        let big = root(3, 1, 5);
        assert!(matches!(
            hc_param(&labels(&[1, 1, 1]), &big),
            Err(Error::RootOutOfRange { .. })
        ));
    }

    #[test]
    fn label_count_and_rank_errors() {
        assert_eq!(Rank::new(0), Err(Error::InvalidRank));
        let r2 = Rank::new(2).unwrap();
        assert!(matches!(
            DynkinLabels::new(r2, vec![1, 1]),
            Err(Error::LabelCount {
                expected: 3,
                got: 2,
                ..
            })
        ));
    }

    #[test]
    fn lambda_vectors() {
        assert_eq!(lambda_vector(&labels(&[1, 2, 1])).values(), &[4, 3, 1, 0]);
        assert_eq!(
            lambda_vector(&labels(&[0, 1, 0, 2, 0])).values(),
            &[3, 3, 2, 2, 0, 0]
        );
        let zero = lambda_vector(&labels(&[0, 0, 0]));
        assert_eq!(zero.values(), &[0, 0, 0, 0]);
        assert!(!zero.is_strict());
        assert!(lambda_vector(&labels(&[1, 1, 1])).is_strict());
    }

    #[test]
    fn zero_set() {
        assert_eq!(labels(&[0, 1, 0, 2, 0]).zero_set(), vec![1, 3, 5]);
        assert!(labels(&[1, 1, 1]).is_main());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn any_labels() -> impl Strategy<Value = DynkinLabels> {
            (1u32..=5).prop_flat_map(|n| {
                prop::collection::vec(0u64..20, (2 * n - 1) as usize)
                    .prop_map(move |m| DynkinLabels::new(Rank::new(n).unwrap(), m).unwrap())
            })
        }

        proptest! {
            #[test]
            fn lambda_round_trips(l in any_labels()) {
                let lam = lambda_vector(&l);
                prop_assert_eq!(lam.labels(), l.values().to_vec());
                prop_assert_eq!(*lam.values().last().unwrap(), 0);
                prop_assert_eq!(lam.is_strict(), l.zero_set().is_empty());
            }

            #[test]
            fn hc_param_is_additive(l in any_labels(), seed in any::<u64>()) {
                let rank = l.rank();
                let last = rank.simple_count();
                let j = 1 + (seed as usize % last);
                let k = j + ((seed >> 16) as usize % (last - j + 1));
                let whole = hc_param(&l, &Root::new(rank, j, k).unwrap()).unwrap();
                // split [j, k] at every possible point
                for cut in j..k {
                    let left = hc_param(&l, &Root::new(rank, j, cut).unwrap()).unwrap();
                    let right = hc_param(&l, &Root::new(rank, cut + 1, k).unwrap()).unwrap();
                    prop_assert_eq!(whole, left + right);
                }
                let singles: u64 = (j..=k)
                    .map(|i| hc_param(&l, &Root::new(rank, i, i).unwrap()).unwrap())
                    .sum();
                prop_assert_eq!(whole, singles);
            }
        }
    }
}
