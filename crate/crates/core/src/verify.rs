//! Self-check against the reference classification tables.
//!
//! Each fixture recomputes one family of reference facts and reports either
//! a one-line summary or the first value that drifted.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{ds_annotations, vertex_d, weyl_dimension, Algebra, DsKind};
use crate::emit::{render, Format, RenderOptions};
use crate::fixtures::{self, Entry, Table};
use crate::multiplet::{
    build_multiplet, classify_reductions, generic_labels, main_multiplet, reduced_multiplet,
    BuildOptions, Flag, MultipletGraph,
};
use crate::oracle::{brute_arrangements, brute_edges, gt_dimension, OracleEdge};
use crate::roots::{lambda_vector, DynkinLabels, Rank};
use crate::signature::{all_arrangements, ks_partner, signature_of};

pub const SEED: u64 = 0x5a11_2a2b;
pub const RANDOM_DRAWS: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub fixture: &'static str,
    pub result: Result<String, String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }

    pub fn line(&self) -> String {
        match &self.result {
            Ok(s) => format!("PASS {}: {s}", self.fixture),
            Err(s) => format!("FAIL {}: {s}", self.fixture),
        }
    }
}

type Check = fn() -> Result<String, String>;

pub const FIXTURES: [(&str, Check); 11] = [
    ("main-sizes", main_sizes),
    ("reduced-sizes", reduced_sizes),
    ("signature-tables", signature_tables),
    ("knapp-stein", knapp_stein),
    ("edge-law", edge_law),
    ("degenerate-ks", degenerate_ks),
    ("taxonomy", taxonomy),
    ("minimal-irreps", minimal_irreps),
    ("dimension-weights", dimension_weights),
    ("oracle", oracle_equivalence),
    ("determinism", determinism),
];

pub fn run_all() -> Vec<Outcome> {
    FIXTURES
        .iter()
        .map(|&(fixture, check)| Outcome {
            fixture,
            result: check(),
        })
        .collect()
}

fn rank(n: usize) -> Rank {
    Rank::new(n as u32).expect("positive rank")
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn graph(labels: &DynkinLabels) -> MultipletGraph {
    build_multiplet(labels, BuildOptions::default())
}

fn generic(n: usize, zeros: &[usize]) -> DynkinLabels {
    generic_labels(rank(n), zeros).expect("zeros in range")
}

/// Random labels in 1..=9, zero on `zeros`.
pub fn random_labels(rng: &mut ChaCha8Rng, n: usize, zeros: &[usize]) -> DynkinLabels {
    let m = (1..2 * n)
        .map(|i| {
            if zeros.contains(&i) {
                0
            } else {
                rng.random_range(1..=9)
            }
        })
        .collect();
    DynkinLabels::new(rank(n), m).expect("length 2n - 1")
}

pub fn signature_multiset(g: &MultipletGraph) -> Vec<Entry> {
    g.vertices
        .iter()
        .map(|v| (v.signature.m_labels.clone(), v.signature.two_c))
        .sorted()
        .collect()
}

fn main_sizes() -> Result<String, String> {
    for (n, want) in [(1, 2), (2, 6), (3, 20), (4, 70)] {
        let g = main_multiplet(&generic(n, &[])).map_err(|e| e.to_string())?;
        expect_eq(&format!("n={n} main size"), g.vertices.len(), want)?;
    }
    Ok("2, 6, 20, 70".into())
}

pub const REDUCED_SIZES: [(usize, &[usize], usize); 14] = [
    (3, &[1], 14),
    (3, &[2], 14),
    (3, &[3], 14),
    (3, &[4], 14),
    (3, &[5], 14),
    (3, &[1, 3], 10),
    (3, &[1, 4], 10),
    (3, &[1, 5], 10),
    (3, &[2, 4], 10),
    (3, &[1, 3, 5], 7),
    (4, &[4], 50),
    (4, &[1, 3], 36),
    (4, &[1, 3, 5], 26),
    (4, &[1, 3, 7], 26),
];

fn reduced_sizes() -> Result<String, String> {
    let mut checks: Vec<(usize, &[usize], usize)> = REDUCED_SIZES.to_vec();
    checks.push((4, &[1, 3, 5, 7], 19));
    for (n, zeros, want) in &checks {
        let g = reduced_multiplet(&generic(*n, zeros)).map_err(|e| e.to_string())?;
        expect_eq(
            &format!("n={n} zeros {zeros:?} size"),
            g.vertices.len(),
            *want,
        )?;
    }
    Ok(format!("{} zero patterns", checks.len()))
}

/// Compares one table against the engine at seeded random labels. Returns
/// the number of draws at which the originally printed weights disagree.
pub fn check_table(table: &Table, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut printed_misses = 0;
    for _ in 0..RANDOM_DRAWS {
        let l = random_labels(rng, table.rank.n(), &table.zeros);
        let got = signature_multiset(&graph(&l));
        let want = table.evaluate(&l);
        if got != want {
            let extra: Vec<_> = got.iter().filter(|x| !want.contains(x)).collect();
            let missing: Vec<_> = want.iter().filter(|x| !got.contains(x)).collect();
            return Err(format!(
                "[{}] at labels {:?}: computed-only {extra:?}, table-only {missing:?}",
                table.name,
                l.values()
            ));
        }
        if table.has_errata() && table.evaluate_printed(&l) != want {
            printed_misses += 1;
        }
    }
    Ok(printed_misses)
}

fn signature_tables() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let tables = fixtures::tables();
    let mut errata = Vec::new();
    for t in &tables {
        let misses = check_table(t, &mut rng)?;
        if t.has_errata() {
            if misses == 0 {
                return Err(format!(
                    "[{}] printed weights never differ; erratum marker is stale",
                    t.name
                ));
            }
            errata.push(t.name.clone());
        }
    }
    Ok(format!(
        "{} tables x {RANDOM_DRAWS} draws; corrected weights used in {}",
        tables.len(),
        errata.join(", ")
    ))
}

/// All graphs the involution and edge checks run over.
fn sample_graphs(rng: &mut ChaCha8Rng) -> Vec<MultipletGraph> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let r = rank(n);
        out.push(graph(&generic(n, &[])));
        for k in 1..=r.simple_count() {
            for zeros in (1..=r.simple_count()).combinations(k) {
                out.push(graph(&generic(n, &zeros)));
            }
        }
        for _ in 0..10 {
            out.push(graph(&random_labels(rng, n, &[])));
            let zeros: Vec<usize> = (1..2 * n).filter(|_| rng.random_bool(0.3)).collect();
            out.push(graph(&random_labels(rng, n, &zeros)));
        }
    }
    out
}

fn knapp_stein() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let graphs = sample_graphs(&mut rng);
    for g in &graphs {
        for (i, v) in g.vertices.iter().enumerate() {
            let p = g
                .partner_of(i)
                .ok_or_else(|| format!("{}: partner missing in {:?}", v.id(), g.labels.values()))?;
            let ps = &g.vertices[p].signature;
            expect_eq(
                "partner labels",
                ps.m_labels.clone(),
                v.signature.starred_labels(),
            )?;
            expect_eq("partner weight", ps.two_c, -v.signature.two_c)?;
        }
    }
    // fixed points at generic labels: exactly the known singlets, plus
    // the trivial su(1,1) case m1 = 0
    let singlet_patterns: BTreeSet<(usize, Vec<usize>)> = BTreeSet::from([
        (1, vec![1]),
        (2, vec![1, 3]),
        (3, vec![1, 3, 5]),
        (4, vec![1, 3, 5, 7]),
    ]);
    for n in 1..=4 {
        let r = rank(n);
        for k in 0..=r.simple_count() {
            for zeros in (1..=r.simple_count()).combinations(k) {
                if !crate::multiplet::is_physically_relevant(&zeros) {
                    continue;
                }
                let g = graph(&generic(n, &zeros));
                let fixed = g
                    .vertices
                    .iter()
                    .filter(|v| ks_partner(&v.arrangement) == v.arrangement)
                    .count();
                let want = usize::from(singlet_patterns.contains(&(n, zeros.clone())));
                expect_eq(&format!("fixed points n={n} zeros {zeros:?}"), fixed, want)?;
            }
        }
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn edge_law() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let graphs = sample_graphs(&mut rng);
    let mut edges = 0;
    for g in &graphs {
        let simple: BTreeSet<u64> = g.labels.values().iter().copied().collect();
        for e in &g.edges {
            let (s, d) = (&g.vertices[e.src].signature, &g.vertices[e.dst].signature);
            expect_eq("2c step", d.two_c - s.two_c, 2 * e.degree as i64)?;
            if !e.root.noncompact || e.degree == 0 || !simple.contains(&e.degree) {
                return Err(format!("bad edge {e:?} at labels {:?}", g.labels.values()));
            }
            edges += 1;
        }
    }
    Ok(format!("{edges} edges in {} graphs", graphs.len()))
}

pub const DEGENERATE_KS: [(usize, &[usize], usize); 4] = [
    (3, &[1, 3], 5),
    (3, &[1, 5], 3),
    (4, &[1, 3, 5], 7),
    (4, &[1, 3, 7], 5),
];

fn degenerate_ks() -> Result<String, String> {
    for (n, zeros, index) in DEGENERATE_KS {
        let l = generic(n, zeros);
        let g = graph(&l);
        let orders: Vec<u64> = g
            .edges
            .iter()
            .filter(|e| e.degenerate_ks)
            .map(|e| e.degree)
            .collect();
        if !orders.contains(&l.get(index)) {
            return Err(format!(
                "n={n} zeros {zeros:?}: no partner edge of order m_{index}, found {orders:?}"
            ));
        }
    }
    Ok("orders m5, m3, m7, m5".into())
}

fn relevant(n: usize, k: usize) -> Result<Vec<Vec<usize>>, String> {
    Ok(classify_reductions(rank(n), k)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|c| c.physically_relevant)
        .map(|c| c.zero_set)
        .collect())
}

fn taxonomy() -> Result<String, String> {
    expect_eq(
        "n=3 order 2",
        relevant(3, 2)?,
        vec![vec![1, 3], vec![1, 4], vec![1, 5], vec![2, 4]],
    )?;
    expect_eq(
        "n=4 order 2",
        relevant(4, 2)?,
        [
            [1, 3],
            [1, 4],
            [1, 5],
            [1, 6],
            [1, 7],
            [2, 4],
            [2, 5],
            [2, 6],
            [3, 5],
        ]
        .iter()
        .map(|z| z.to_vec())
        .collect(),
    )?;
    expect_eq("n=4 order 3 count", relevant(4, 3)?.len(), 6)?;
    expect_eq("n=4 order 4", relevant(4, 4)?, vec![vec![1, 3, 5, 7]])?;
    Ok("4 / 9 / 6 / 1 classes".into())
}

fn singlet_ops(n: usize, zeros: &[usize]) -> Result<Vec<(usize, usize, u64)>, String> {
    let g = graph(&generic(n, zeros));
    let [s] = &g.singlets[..] else {
        return Err(format!(
            "n={n} zeros {zeros:?}: {} singlets",
            g.singlets.len()
        ));
    };
    Ok(s.operators
        .iter()
        .map(|o| (o.root.j, o.root.k, o.degree))
        .collect())
}

fn minimal_irreps() -> Result<String, String> {
    let l = generic(3, &[1, 3, 5]);
    expect_eq(
        "n=3 singlet operators",
        singlet_ops(3, &[1, 3, 5])?,
        vec![(1, 4, l.get(2)), (2, 5, l.get(4))],
    )?;
    let l = generic(4, &[1, 3, 5, 7]);
    expect_eq(
        "n=4 singlet operators",
        singlet_ops(4, &[1, 3, 5, 7])?,
        vec![(1, 5, l.get(2)), (2, 6, l.get(4)), (3, 7, l.get(6))],
    )?;
    Ok("D14/D25 and D15/D26/D37".into())
}

fn dimension_weights() -> Result<String, String> {
    expect_eq(
        "dim at (1,1,1)",
        weyl_dimension(&[1, 1, 1]).map_err(|e| e.to_string())?,
        BigUint::from(1u32),
    )?;
    let ones = DynkinLabels::ones(rank(2));
    let g = main_multiplet(&ones).map_err(|e| e.to_string())?;
    let minus = g.find_flag(Flag::Chi0Minus).ok_or("chi0- missing")?;
    let plus = g.find_flag(Flag::Chi0Plus).ok_or("chi0+ missing")?;
    expect_eq("2d(chi0-)", vertex_d(&g, minus), 0)?;
    expect_eq("2d(chi0+)", vertex_d(&g, plus), 8)?;
    let ds = ds_annotations(&g, Algebra::SuNN);
    expect_eq(
        "discrete series",
        ds.iter().map(|a| (a.vertex, a.kind, a.bound)).collect(),
        vec![(plus, DsKind::DiscreteSeries, 8)],
    )?;
    let mut count = 0;
    for len in 1..=5 {
        for m in (0..len).map(|_| 1u64..=3).multi_cartesian_product() {
            let gt = gt_dimension(&m).map_err(|e| e.to_string())?;
            let w = weyl_dimension(&m).map_err(|e| e.to_string())?;
            expect_eq(&format!("dimension at {m:?}"), w, BigUint::from(gt))?;
            count += 1;
        }
    }
    Ok(format!("d = 0 and 4; Weyl = GT on {count} label vectors"))
}

/// Engine edges as oracle edges, over the unsuppressed vertex set.
pub fn engine_edges(g: &MultipletGraph) -> BTreeSet<OracleEdge> {
    g.edges
        .iter()
        .map(|e| OracleEdge {
            src: g.vertices[e.src].arrangement.clone(),
            dst: g.vertices[e.dst].arrangement.clone(),
            j: e.root.j,
            k: e.root.k,
            degree: e.degree,
        })
        .collect()
}

pub fn compare_with_oracle(l: &DynkinLabels) -> Result<(), String> {
    let lam = lambda_vector(l);
    let brute = brute_arrangements(lam.values()).map_err(|e| e.to_string())?;
    let engine: BTreeSet<_> = all_arrangements(&lam).into_iter().collect();
    expect_eq(
        &format!("arrangements at {:?}", l.values()),
        &engine,
        &brute,
    )?;
    let g = build_multiplet(
        l,
        BuildOptions {
            keep_constant_blocks: true,
        },
    );
    let verts: BTreeSet<_> = g.vertices.iter().map(|v| v.arrangement.clone()).collect();
    expect_eq(&format!("vertices at {:?}", l.values()), &verts, &brute)?;
    let oracle = brute_edges(&brute).map_err(|e| e.to_string())?;
    expect_eq(
        &format!("edges at {:?}", l.values()),
        engine_edges(&g),
        oracle,
    )
}

fn oracle_equivalence() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let mut cases = 0;
    for n in 1..=4 {
        let r = rank(n);
        for k in 0..=r.simple_count() {
            for zeros in (1..=r.simple_count()).combinations(k) {
                compare_with_oracle(&generic(n, &zeros))?;
                cases += 1;
            }
        }
        for _ in 0..5 {
            compare_with_oracle(&random_labels(&mut rng, n, &[]))?;
            cases += 1;
        }
    }
    // signatures agree with the arrangement they came from
    let g = graph(&generic(3, &[]));
    for v in &g.vertices {
        expect_eq(
            "signature",
            signature_of(&v.arrangement),
            v.signature.clone(),
        )?;
    }
    Ok(format!("{cases} label vectors, n <= 4"))
}

fn determinism() -> Result<String, String> {
    let cases = [
        generic(2, &[]),
        generic(3, &[1, 3]),
        generic(4, &[1, 3, 5, 7]),
    ];
    for l in &cases {
        for format in [Format::Json, Format::Dot, Format::Tsv, Format::Latex] {
            let once = render(&graph(l), RenderOptions::new(format));
            let twice = render(&graph(l), RenderOptions::new(format));
            if once != twice {
                return Err(format!("{format:?} output differs at {:?}", l.values()));
            }
        }
    }
    Ok("json, dot, tsv, latex stable".into())
}
