//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;

use itertools::Itertools;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sunn_multiplets::fixtures;
use sunn_multiplets::multiplet::{build_multiplet, BuildOptions};
use sunn_multiplets::oracle::{brute_arrangements, brute_edges, gt_dimension};
use sunn_multiplets::{
    all_arrangements, classify_reductions, conformal_d, generic_labels, lambda_vector,
    main_multiplet, reduced_multiplet, signature_of, weyl_dimension, DynkinLabels, Flag,
    MultipletGraph, Rank,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rank(n: usize) -> Rank {
    Rank::new(n as u32).unwrap()
}

fn generic(n: usize, zeros: &[usize]) -> DynkinLabels {
    generic_labels(rank(n), zeros).unwrap()
}

fn any_graph(l: &DynkinLabels) -> MultipletGraph {
    if l.is_main() {
        main_multiplet(l).unwrap()
    } else {
        reduced_multiplet(l).unwrap()
    }
}

fn random(rng: &mut ChaCha8Rng, n: usize, zeros: &[usize]) -> DynkinLabels {
    let m = (1..2 * n)
        .map(|i| {
            if zeros.contains(&i) {
                0
            } else {
                rng.random_range(1..=9)
            }
        })
        .collect();
    DynkinLabels::new(rank(n), m).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn main_sizes() -> Outcome {
    let sizes: Vec<usize> = (1..=4)
        .map(|n| main_multiplet(&generic(n, &[])).unwrap().vertices.len())
        .collect();
    ensure(sizes == [2, 6, 20, 70], || format!("sizes {sizes:?}"))?;
    Ok(format!("{sizes:?}"))
}

fn reduced_sizes() -> Outcome {
    let mut cases: Vec<(usize, Vec<usize>, usize)> = (1..=5).map(|a| (3, vec![a], 14)).collect();
    for z in [&[1, 3][..], &[1, 4], &[1, 5], &[2, 4]] {
        cases.push((3, z.to_vec(), 10));
    }
    cases.push((3, vec![1, 3, 5], 7));
    cases.push((4, vec![4], 50));
    cases.push((4, vec![1, 3], 36));
    cases.push((4, vec![1, 3, 5], 26));
    cases.push((4, vec![1, 3, 7], 26));
    cases.push((4, vec![1, 3, 5, 7], 19));
    for (n, z, want) in &cases {
        let got = reduced_multiplet(&generic(*n, z)).unwrap().vertices.len();
        ensure(got == *want, || format!("n={n} {z:?}: {got} != {want}"))?;
    }
    // every physically relevant pattern of a given order has the same size
    for (k, want) in [(2, 36), (3, 26)] {
        for c in classify_reductions(rank(4), k).unwrap() {
            if c.physically_relevant {
                ensure(c.size == want, || {
                    format!("n=4 {:?}: {}", c.zero_set, c.size)
                })?;
            }
        }
    }
    Ok(format!("{} patterns", cases.len()))
}

fn table_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let tables = fixtures::tables();
    for t in &tables {
        for _ in 0..100 {
            let l = random(&mut rng, t.rank.n(), &t.zeros);
            let g = any_graph(&l);
            let got: Vec<(Vec<u64>, i64)> = g
                .vertices
                .iter()
                .map(|v| (v.signature.m_labels.clone(), v.signature.two_c))
                .sorted()
                .collect();
            ensure(got == t.evaluate(&l), || {
                format!("[{}] differs at {:?}", t.name, l.values())
            })?;
        }
    }
    Ok(format!("{} tables x 100 draws", tables.len()))
}

fn knapp_stein() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut count = 0;
    for n in 1..=4 {
        for _ in 0..25 {
            let zeros: Vec<usize> = (1..2 * n).filter(|_| rng.random_bool(0.25)).collect();
            let g = any_graph(&random(&mut rng, n, &zeros));
            for (i, v) in g.vertices.iter().enumerate() {
                let p = g.partner_of(i).ok_or("partner missing")?;
                let (a, b) = (&v.signature, &g.vertices[p].signature);
                let h = a.m_labels.len() / 2;
                let swapped: Vec<u64> = a.m_labels[h..]
                    .iter()
                    .chain(&a.m_labels[..h])
                    .copied()
                    .collect();
                ensure(b.m_labels == swapped && b.two_c == -a.two_c, || {
                    format!("{} vs {}", v.id(), g.vertices[p].id())
                })?;
                count += 1;
            }
        }
    }
    let expected: BTreeSet<(usize, Vec<usize>)> =
        BTreeSet::from([(2, vec![1, 3]), (3, vec![1, 3, 5]), (4, vec![1, 3, 5, 7])]);
    for n in 2..=4 {
        for k in 0..2 * n {
            for z in (1..2 * n).combinations(k) {
                if z.windows(2).any(|w| w[1] == w[0] + 1) {
                    continue;
                }
                let g = any_graph(&generic(n, &z));
                let fixed = g
                    .vertices
                    .iter()
                    .filter(|v| v.arrangement.top() == v.arrangement.bottom())
                    .count();
                let want = usize::from(expected.contains(&(n, z.clone())));
                ensure(fixed == want, || {
                    format!("n={n} {z:?}: {fixed} fixed points")
                })?;
            }
        }
    }
    Ok(format!(
        "{count} vertices; singlets only at R13, R135, R1357"
    ))
}

fn edge_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut count = 0;
    for n in 1..=4 {
        for _ in 0..40 {
            let zeros: Vec<usize> = (1..2 * n).filter(|_| rng.random_bool(0.3)).collect();
            let l = random(&mut rng, n, &zeros);
            let g = any_graph(&l);
            for e in &g.edges {
                let dc = g.vertices[e.dst].signature.two_c - g.vertices[e.src].signature.two_c;
                let noncompact = e.root.j <= n && n <= e.root.k;
                ensure(
                    dc == 2 * e.degree as i64
                        && noncompact
                        && e.degree > 0
                        && l.values().contains(&e.degree),
                    || format!("edge {e:?} at {:?}", l.values()),
                )?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} edges"))
}

fn degenerate_ks() -> Outcome {
    for (n, z, idx) in [
        (3, &[1, 3][..], 5),
        (3, &[1, 5], 3),
        (4, &[1, 3, 5], 7),
        (4, &[1, 3, 7], 5),
    ] {
        let l = generic(n, z);
        let g = reduced_multiplet(&l).unwrap();
        let found = g.edges.iter().any(|e| {
            g.partner_of(e.src) == Some(e.dst) && e.degenerate_ks && e.degree == l.get(idx)
        });
        ensure(found, || {
            format!("n={n} {z:?}: no partner edge of order m{idx}")
        })?;
    }
    Ok("m5, m3, m7, m5".into())
}

fn taxonomy() -> Outcome {
    let reps = |n: usize, k: usize| -> Vec<Vec<usize>> {
        classify_reductions(rank(n), k)
            .unwrap()
            .into_iter()
            .filter(|c| c.physically_relevant)
            .map(|c| c.zero_set)
            .collect()
    };
    let n3 = reps(3, 2);
    ensure(
        n3 == [vec![1, 3], vec![1, 4], vec![1, 5], vec![2, 4]],
        || format!("n=3: {n3:?}"),
    )?;
    let n4: Vec<String> = reps(4, 2).iter().map(|z| z.iter().join("")).collect();
    ensure(
        n4 == ["13", "14", "15", "16", "17", "24", "25", "26", "35"],
        || format!("n=4 order 2: {n4:?}"),
    )?;
    let three = reps(4, 3).len();
    ensure(three == 6, || format!("n=4 order 3: {three}"))?;
    let four = reps(4, 4);
    ensure(four == [vec![1, 3, 5, 7]], || {
        format!("n=4 order 4: {four:?}")
    })?;
    Ok("4, 9, 6, 1".into())
}

fn minimal_irreps() -> Outcome {
    for (n, z, want) in [
        (3, &[1, 3, 5][..], vec![(1, 4, 2), (2, 5, 4)]),
        (4, &[1, 3, 5, 7], vec![(1, 5, 2), (2, 6, 4), (3, 7, 6)]),
    ] {
        let l = generic(n, z);
        let g = reduced_multiplet(&l).unwrap();
        ensure(g.singlets.len() == 1, || {
            format!("n={n}: singlets {}", g.singlets.len())
        })?;
        let got: Vec<_> = g.singlets[0]
            .operators
            .iter()
            .map(|o| (o.root.j, o.root.k, o.degree))
            .collect();
        let want: Vec<_> = want.into_iter().map(|(j, k, i)| (j, k, l.get(i))).collect();
        ensure(got == want, || format!("n={n}: {got:?}"))?;
    }
    Ok("(a14,m2),(a25,m4) and (a15,m2),(a26,m4),(a37,m6)".into())
}

fn dimension_weights() -> Outcome {
    let d = weyl_dimension(&[1, 1, 1]).unwrap();
    ensure(d == BigUint::from(1u32), || format!("dim {d}"))?;
    let g = main_multiplet(&DynkinLabels::ones(rank(2))).unwrap();
    let d_of = |f: Flag| {
        let v = &g.vertices[g.find_flag(f).unwrap()];
        conformal_d(&signature_of(&v.arrangement), rank(2))
    };
    let (dm, dp) = (d_of(Flag::Chi0Minus), d_of(Flag::Chi0Plus));
    ensure(dm == 0 && dp == 8, || format!("2d = {dm}, {dp}"))?;
    let mut count = 0;
    for len in 1..=5 {
        for m in (0..len).map(|_| 1u64..=3).multi_cartesian_product() {
            let w = weyl_dimension(&m).unwrap();
            let gt = BigUint::from(gt_dimension(&m).unwrap());
            ensure(w == gt, || format!("{m:?}: weyl {w} vs patterns {gt}"))?;
            count += 1;
        }
    }
    Ok(format!("dim 1, d = 0 and 4, {count} Weyl/GT agreements"))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut cases = 0;
    for n in 1..=4 {
        let mut inputs: Vec<DynkinLabels> = (0..2 * n)
            .flat_map(|k| (1..2 * n).combinations(k))
            .map(|z| generic(n, &z))
            .collect();
        inputs.extend((0..4).map(|_| random(&mut rng, n, &[])));
        for l in inputs {
            let lam = lambda_vector(&l);
            let brute = brute_arrangements(lam.values()).unwrap();
            let engine: BTreeSet<_> = all_arrangements(&lam).into_iter().collect();
            ensure(engine == brute, || {
                format!("arrangements at {:?}", l.values())
            })?;
            let g = build_multiplet(
                &l,
                BuildOptions {
                    keep_constant_blocks: true,
                },
            );
            let ours: BTreeSet<_> = g
                .edges
                .iter()
                .map(|e| {
                    (
                        g.vertices[e.src].arrangement.clone(),
                        g.vertices[e.dst].arrangement.clone(),
                        e.root.j,
                        e.root.k,
                        e.degree,
                    )
                })
                .collect();
            let theirs: BTreeSet<_> = brute_edges(&brute)
                .unwrap()
                .into_iter()
                .map(|e| (e.src, e.dst, e.j, e.k, e.degree))
                .collect();
            ensure(ours == theirs, || format!("edges at {:?}", l.values()))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} label vectors"))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_multiplets");
    let runs = [
        "main --n 3 --labels 1,2,1,3,1",
        "reduce --n 4 --labels 0,2,0,1,0,3,0",
        "reduce --n 3 --labels 0,1,0,2,1 --zeros 1,3",
    ];
    for args in runs {
        for format in ["json", "dot", "tsv"] {
            let out = || {
                std::process::Command::new(bin)
                    .args(args.split_whitespace())
                    .args(["--format", format])
                    .output()
                    .unwrap()
            };
            let (a, b) = (out(), out());
            ensure(a.status.success() && !a.stdout.is_empty(), || {
                format!("{args} failed: {}", String::from_utf8_lossy(&a.stderr))
            })?;
            ensure(a.stdout == b.stdout, || {
                format!("{args} --format {format} differs")
            })?;
        }
    }
    Ok("main/reduce json, dot, tsv byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("main multiplet sizes", main_sizes),
        ("reduced multiplet sizes", reduced_sizes),
        ("signature table equivalence", table_equivalence),
        ("Knapp-Stein involution", knapp_stein),
        ("edge law", edge_law),
        ("degenerate Knapp-Stein edges", degenerate_ks),
        ("reduction taxonomy", taxonomy),
        ("minimal irreps", minimal_irreps),
        ("dimension and weights", dimension_weights),
        ("oracle equivalence", oracle_equivalence),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
