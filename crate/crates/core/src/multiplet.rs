//! Multiplet graphs.
//!
//! Minimal coset representatives of `W(A_{2n-1}) / W(A_{n-1} x A_{n-1})` are
//! the `n`-subsets `S` of `{1..2n}` (positions of Lambda+rho sent to the first
//! sl(n) factor). Bruhat covers move one position `a in S` to `a + 1`; such a
//! cover carries the noncompact root `alpha_{p, n+q-1}` and degree `m_a`.
//! Reduced multiplets reuse the same covers with degenerate labels: subsets
//! with equal arrangements merge, and zero-degree covers collapse.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::analysis::{self, Algebra};
use crate::error::{Error, Result};
use crate::roots::{lambda_vector, DynkinLabels, Rank, Root};
use crate::signature::{self, ks_partner, signature_of, Arrangement, ErSignature};

/// Sorted `n`-subset of `{1..2n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetSubset {
    n: usize,
    members: Vec<usize>,
}

impl CosetSubset {
    pub fn new(rank: Rank, mut members: Vec<usize>) -> Result<Self> {
        let n = rank.n();
        members.sort_unstable();
        members.dedup();
        if members.len() != n || members.iter().any(|&a| a == 0 || a > 2 * n) {
            return Err(Error::OracleRefused(format!(
                "{members:?} is not an {n}-subset of 1..={}",
                2 * n
            )));
        }
        Ok(CosetSubset { n, members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn complement(&self) -> Vec<usize> {
        (1..=2 * self.n)
            .filter(|a| !self.members.contains(a))
            .collect()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// Length of the coset representative: `sum(S) - n(n+1)/2`.
    pub fn level(&self) -> usize {
        self.members.iter().sum::<usize>() - self.n * (self.n + 1) / 2
    }

    pub fn arrangement(&self, labels: &DynkinLabels) -> Arrangement {
        let lam = lambda_vector(labels);
        let positions: Vec<usize> = self.members.iter().map(|a| a - 1).collect();
        signature::split(lam.values(), &positions)
    }

    fn all(rank: Rank) -> impl Iterator<Item = CosetSubset> {
        let n = rank.n();
        (1..=2 * n)
            .combinations(n)
            .map(move |members| CosetSubset { n, members })
    }
}

impl fmt::Display for CosetSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members.iter().join(","))
    }
}

/// One Bruhat cover `S -> S'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub target: CosetSubset,
    pub root: Root,
    pub degree: u64,
    /// The simple index `a` whose label is the degree.
    pub index: usize,
}

/// All covers of `s`, including those of degree zero.
pub fn cover_edges(s: &CosetSubset, labels: &DynkinLabels) -> Vec<Cover> {
    let rank = labels.rank();
    let n = rank.n();
    let complement = s.complement();
    s.members
        .iter()
        .enumerate()
        .filter(|&(_, &a)| a < 2 * n && !s.contains(a + 1))
        .map(|(p0, &a)| {
            let q0 = complement
                .binary_search(&(a + 1))
                .expect("a + 1 lies in the complement");
            let mut members = s.members.clone();
            members[p0] = a + 1;
            Cover {
                target: CosetSubset { n, members },
                root: Root::new(rank, p0 + 1, n + q0).expect("noncompact interval"),
                degree: labels.get(a),
                index: a,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    Chi0Minus,
    Chi0Plus,
    FiniteDimBearing,
    Singlet,
    DiscreteSeries,
    LimitsOfDiscreteSeries,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::Chi0Minus => "chi0-minus",
            Flag::Chi0Plus => "chi0-plus",
            Flag::FiniteDimBearing => "finite-dim-bearing",
            Flag::Singlet => "singlet",
            Flag::DiscreteSeries => "discrete-series",
            Flag::LimitsOfDiscreteSeries => "limits-of-discrete-series",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub arrangement: Arrangement,
    pub signature: ErSignature,
    pub flags: BTreeSet<Flag>,
}

impl Vertex {
    pub fn id(&self) -> String {
        self.arrangement.id()
    }

    pub fn has(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }
}

/// Intertwining differential operator between two ERs, directed towards
/// increasing `c` (decreasing Verma weight).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub root: Root,
    pub degree: u64,
    /// The edge joins Knapp-Stein partners.
    pub degenerate_ks: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Operator {
    pub root: Root,
    pub degree: u64,
}

/// A self-conjugate ER together with the operators whose joint kernel is its
/// minimal irrep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Singlet {
    pub vertex: usize,
    pub operators: Vec<Operator>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipletGraph {
    pub labels: DynkinLabels,
    pub algebra: Algebra,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub singlets: Vec<Singlet>,
    /// Arrangements left out because one sl(n) block is constant; see
    /// [`BuildOptions::keep_constant_blocks`].
    pub excluded: Vec<Arrangement>,
}

impl MultipletGraph {
    pub fn rank(&self) -> Rank {
        self.labels.rank()
    }

    pub fn zero_set(&self) -> Vec<usize> {
        self.labels.zero_set()
    }

    pub fn index_of(&self, arr: &Arrangement) -> Option<usize> {
        self.vertices.iter().position(|v| &v.arrangement == arr)
    }

    pub fn partner_of(&self, i: usize) -> Option<usize> {
        self.index_of(&ks_partner(&self.vertices[i].arrangement))
    }

    pub fn out_edges(&self, i: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.src == i)
    }

    pub fn in_edges(&self, i: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.dst == i)
    }

    pub fn find_flag(&self, flag: Flag) -> Option<usize> {
        self.vertices.iter().position(|v| v.has(flag))
    }

    /// The same graph with annotation metadata for another parabolic relative.
    pub fn for_algebra(&self, algebra: Algebra) -> Result<MultipletGraph> {
        algebra.check(self.rank())?;
        let mut g = self.clone();
        for v in &mut g.vertices {
            v.flags.remove(&Flag::DiscreteSeries);
            v.flags.remove(&Flag::LimitsOfDiscreteSeries);
        }
        g.algebra = algebra;
        for ann in analysis::ds_annotations(&g, algebra) {
            g.vertices[ann.vertex].flags.insert(ann.kind.flag());
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BuildOptions {
    /// Keep arrangements in which a whole sl(n) block is constant. These
    /// carry no M-data on one factor; they are dropped by default unless
    /// nothing else remains (fully degenerate Lambda+rho), which reproduces
    /// the known su(2,2) doublets and singlet. For `n >= 3` and
    /// physically relevant zero patterns no arrangement has a constant block.
    pub keep_constant_blocks: bool,
}

/// Main multiplet: all labels positive.
pub fn main_multiplet(labels: &DynkinLabels) -> Result<MultipletGraph> {
    let zeros = labels.zero_set();
    if !zeros.is_empty() {
        return Err(Error::NotMain(zeros));
    }
    Ok(build_multiplet(labels, BuildOptions::default()))
}

/// Reduced multiplet obtained by letting the vanishing labels degenerate.
pub fn reduced_multiplet(labels: &DynkinLabels) -> Result<MultipletGraph> {
    if labels.is_main() {
        return Err(Error::NotReduced);
    }
    Ok(build_multiplet(labels, BuildOptions::default()))
}

/// Builds the multiplet for arbitrary non-negative labels.
pub fn build_multiplet(labels: &DynkinLabels, opts: BuildOptions) -> MultipletGraph {
    let rank = labels.rank();
    let n = rank.n();

    let classes: BTreeMap<CosetSubset, Arrangement> = CosetSubset::all(rank)
        .map(|s| {
            let a = s.arrangement(labels);
            (s, a)
        })
        .collect();
    let distinct: BTreeSet<&Arrangement> = classes.values().collect();

    let drop_constant =
        !opts.keep_constant_blocks && distinct.iter().any(|a| !a.has_constant_block());
    let (kept, excluded): (Vec<&Arrangement>, Vec<&Arrangement>) = distinct
        .into_iter()
        .partition(|a| !(drop_constant && a.has_constant_block()));

    let mut vertices: Vec<Vertex> = kept
        .into_iter()
        .map(|a| Vertex {
            arrangement: a.clone(),
            signature: signature_of(a),
            flags: BTreeSet::new(),
        })
        .collect();
    vertices.sort_by(|x, y| {
        (x.signature.two_c, x.arrangement.top()).cmp(&(y.signature.two_c, y.arrangement.top()))
    });
    let index: BTreeMap<Arrangement, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.arrangement.clone(), i))
        .collect();

    let mut edges = BTreeSet::new();
    for (s, a) in &classes {
        let Some(&src) = index.get(a) else { continue };
        for cover in cover_edges(s, labels) {
            if cover.degree == 0 {
                continue;
            }
            let target = &classes[&cover.target];
            let Some(&dst) = index.get(target) else {
                continue;
            };
            edges.insert(Edge {
                src,
                dst,
                root: cover.root,
                degree: cover.degree,
                degenerate_ks: *target == ks_partner(a),
            });
        }
    }
    let edges: Vec<Edge> = edges.into_iter().collect();

    let lowest = CosetSubset {
        n,
        members: (1..=n).collect(),
    };
    let highest = CosetSubset {
        n,
        members: (n + 1..=2 * n).collect(),
    };
    if let Some(&i) = index.get(&classes[&lowest]) {
        vertices[i].flags.insert(Flag::Chi0Minus);
        if labels.is_main() {
            vertices[i].flags.insert(Flag::FiniteDimBearing);
        }
    }
    if let Some(&i) = index.get(&classes[&highest]) {
        vertices[i].flags.insert(Flag::Chi0Plus);
    }
    for v in &mut vertices {
        if v.arrangement.is_self_partner() {
            v.flags.insert(Flag::Singlet);
        }
    }

    let mut graph = MultipletGraph {
        labels: labels.clone(),
        algebra: Algebra::SuNN,
        vertices,
        edges,
        singlets: Vec::new(),
        excluded: excluded.into_iter().cloned().collect(),
    };
    graph.singlets = singlet_minimal_irreps(&graph);
    graph
        .for_algebra(Algebra::SuNN)
        .expect("su(n,n) exists for every rank")
}

/// Self-partnered ERs and the outgoing operators annihilating their minimal
/// irreps.
pub fn singlet_minimal_irreps(graph: &MultipletGraph) -> Vec<Singlet> {
    graph
        .vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| v.arrangement.is_self_partner())
        .map(|(i, _)| Singlet {
            vertex: i,
            operators: graph
                .out_edges(i)
                .map(|e| Operator {
                    root: e.root,
                    degree: e.degree,
                })
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect(),
        })
        .collect()
}

/// Labels `m_i = 3^i` off the zero pattern, `0` on it. Distinct powers keep
/// every partial sum distinct, so no accidental coincidences occur.
pub fn generic_labels(rank: Rank, zeros: &[usize]) -> Result<DynkinLabels> {
    let m = (1..=rank.simple_count())
        .map(|i| {
            if zeros.contains(&i) {
                0
            } else {
                3u64.pow(i as u32)
            }
        })
        .collect();
    DynkinLabels::new(rank, m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionClass {
    /// Lexicographically least member of the conjugation orbit.
    pub zero_set: Vec<usize>,
    /// Image under `a -> 2n - a`, sorted.
    pub conjugate: Vec<usize>,
    pub physically_relevant: bool,
    /// Vertex count at generic labels.
    pub size: usize,
}

impl ReductionClass {
    pub fn is_self_conjugate(&self) -> bool {
        self.zero_set == self.conjugate
    }
}

pub fn is_physically_relevant(zeros: &[usize]) -> bool {
    zeros.windows(2).all(|w| w[1] != w[0] + 1)
}

pub fn conjugate_zeros(rank: Rank, zeros: &[usize]) -> Vec<usize> {
    let big_n = rank.big_n();
    let mut out: Vec<usize> = zeros.iter().map(|&a| big_n - a).collect();
    out.sort_unstable();
    out
}

/// Conjugation orbits of `k`-element zero patterns, one representative each.
pub fn classify_reductions(rank: Rank, k: usize) -> Result<Vec<ReductionClass>> {
    let max = rank.simple_count();
    if k == 0 || k > max {
        return Err(Error::OrderOutOfRange { k, max });
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for zeros in (1..=max).combinations(k) {
        if seen.contains(&zeros) {
            continue;
        }
        let conjugate = conjugate_zeros(rank, &zeros);
        seen.insert(zeros.clone());
        seen.insert(conjugate.clone());
        let labels = generic_labels(rank, &zeros)?;
        let size = build_multiplet(&labels, BuildOptions::default())
            .vertices
            .len();
        out.push(ReductionClass {
            physically_relevant: is_physically_relevant(&zeros),
            zero_set: zeros,
            conjugate,
            size,
        });
    }
    Ok(out)
}
