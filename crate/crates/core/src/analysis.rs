//! Finite-dimensional dimensions, discrete-series bookkeeping and the
//! parabolically related real forms sharing a multiplet classification.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::multiplet::{Flag, MultipletGraph};
use crate::roots::{DynkinLabels, Rank};
use crate::signature::{conformal_d, m_rho, signature_of};

/// Real forms with a maximal parabolic whose M-factor complexifies to
/// `sl(n,C) + sl(n,C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    /// `su(n,n)`, `M = sl(n,C)_R`.
    SuNN,
    /// `sl(2n,R)`, `M = sl(n,R) + sl(n,R)`.
    Sl2nR,
    /// `su*(2n)` for even `n`, `M = su*(n) + su*(n)`.
    SuStar2n,
}

impl Algebra {
    pub const ALL: [Algebra; 3] = [Algebra::SuNN, Algebra::Sl2nR, Algebra::SuStar2n];

    pub fn is_available(self, rank: Rank) -> bool {
        self != Algebra::SuStar2n || rank.n().is_multiple_of(2)
    }

    pub fn check(self, rank: Rank) -> Result<()> {
        if self.is_available(rank) {
            Ok(())
        } else {
            Err(Error::AlgebraUnavailable {
                algebra: self.slug().to_string(),
                n: rank.n() as u32,
            })
        }
    }

    /// Short name used on the command line.
    pub fn slug(self) -> &'static str {
        match self {
            Algebra::SuNN => "su",
            Algebra::Sl2nR => "sl",
            Algebra::SuStar2n => "su-star",
        }
    }

    pub fn from_slug(s: &str) -> Option<Self> {
        Algebra::ALL.into_iter().find(|a| a.slug() == s)
    }

    pub fn name(self, rank: Rank) -> String {
        let n = rank.n();
        match self {
            Algebra::SuNN => format!("su({n},{n})"),
            Algebra::Sl2nR => format!("sl({},R)", 2 * n),
            Algebra::SuStar2n => format!("su*({})", 2 * n),
        }
    }

    pub fn m_factor(self, rank: Rank) -> String {
        let n = rank.n();
        match self {
            Algebra::SuNN => format!("sl({n},C)_R"),
            Algebra::Sl2nR => format!("sl({n},R) + sl({n},R)"),
            Algebra::SuStar2n => format!("su*({n}) + su*({n})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraTag {
    pub algebra: Algebra,
    pub family: String,
    pub m_factor: String,
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (M = {})", self.family, self.m_factor)
    }
}

pub fn parabolic_relatives(rank: Rank) -> Vec<AlgebraTag> {
    Algebra::ALL
        .into_iter()
        .filter(|a| a.is_available(rank))
        .map(|algebra| AlgebraTag {
            algebra,
            family: algebra.name(rank),
            m_factor: algebra.m_factor(rank),
        })
        .collect()
}

/// Weyl dimension of the sl(N) irrep with Lambda+rho labels `m`:
/// `prod m_{jk} / prod (k - j + 1)` over all positive roots.
pub fn weyl_dimension(m: &[u64]) -> Result<BigUint> {
    if let Some(i) = m.iter().position(|&x| x == 0) {
        return Err(Error::NoFiniteDimensional(i + 1));
    }
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for j in 0..m.len() {
        let mut sum = 0u64;
        for (len, &x) in m[j..].iter().enumerate() {
            sum += x;
            num *= sum;
            den *= (len + 1) as u64;
        }
    }
    debug_assert_eq!(&num % &den, BigUint::from(0u32));
    Ok(num / den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DsKind {
    DiscreteSeries,
    LimitsOfDiscreteSeries,
}

impl DsKind {
    pub fn flag(self) -> Flag {
        match self {
            DsKind::DiscreteSeries => Flag::DiscreteSeries,
            DsKind::LimitsOfDiscreteSeries => Flag::LimitsOfDiscreteSeries,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DsAnnotation {
    pub vertex: usize,
    pub kind: DsKind,
    /// Least admissible conformal weight, doubled; attained when every
    /// nonvanishing label equals one.
    pub bound: i64,
}

/// Holomorphic discrete series (and limits) sitting in `chi0^+`.
///
/// Only the established cases are annotated: the su(2,2) main multiplet
/// carries discrete series, while the su(n,n) reductions at the middle node
/// (n = 2, 3, 4) carry their limits. Other real forms have none.
pub fn ds_annotations(graph: &MultipletGraph, algebra: Algebra) -> Vec<DsAnnotation> {
    if algebra != Algebra::SuNN {
        return Vec::new();
    }
    let rank = graph.rank();
    let n = rank.n();
    let zeros = graph.zero_set();
    let kind = match (n, zeros.as_slice()) {
        (2, []) => DsKind::DiscreteSeries,
        (2..=4, [a]) if *a == n => DsKind::LimitsOfDiscreteSeries,
        _ => return Vec::new(),
    };
    let Some(vertex) = graph.find_flag(Flag::Chi0Plus) else {
        return Vec::new();
    };
    let minimal = DynkinLabels::new(
        rank,
        graph
            .labels
            .values()
            .iter()
            .map(|&m| u64::from(m > 0))
            .collect(),
    )
    .expect("same rank and length");
    let bound = (n * n) as i64 + m_rho(&minimal);
    vec![DsAnnotation {
        vertex,
        kind,
        bound,
    }]
}

/// Doubled conformal weight of a vertex.
pub fn vertex_d(graph: &MultipletGraph, vertex: usize) -> i64 {
    conformal_d(
        &signature_of(&graph.vertices[vertex].arrangement),
        graph.rank(),
    )
}
