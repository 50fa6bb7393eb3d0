//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. The scaling line is informational.

mod common;

use std::process::Command;
use std::time::Instant;

use num_rational::BigRational;
use resiclose::cli::{doubling_ratio, scaling_rows, FamilyKind};
use resiclose::generate::{connected_erdos_renyi_corpus, family_corpus, random_tree_corpus};
use resiclose::verify::{audit_regular_bounds, BoundId, TREE_CORPUS_SEED};
use resiclose::{
    all_pairs_bfs, closeness_after_removal_with, eval_f64, floyd_warshall, generate, middle_graph,
    residual_closeness, FamilySpec, FormulaId, Graph, RemovalMode, VertexKind,
};

const TOL: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn middle(g: &Graph) -> Graph {
    Graph::from_edges(g.n() + g.m(), common::middle_by_definition(g)).unwrap()
}

fn line(g: &Graph) -> Graph {
    Graph::from_edges(g.m(), common::line_by_definition(g)).unwrap()
}

fn family(spec: FamilySpec) -> Graph {
    generate(&spec).unwrap()
}

fn grid(lo: u64, hi: u64, arity: usize) -> Vec<Vec<u64>> {
    if arity == 1 {
        (lo..=hi).map(|n| vec![n]).collect()
    } else {
        (lo..=hi).flat_map(|n| (lo..=hi).map(move |m| vec![n, m])).collect()
    }
}

fn base(id: FormulaId, p: &[u64]) -> Graph {
    family(id.base_family(p))
}

/// Checks `eval(id, p)` against `oracle(base graph)` on every parameter.
fn check_range(
    id: FormulaId,
    lo: u64,
    hi: u64,
    oracle: impl Fn(&Graph) -> f64,
) -> Result<usize, String> {
    let params = grid(lo, hi, id.arity());
    for p in &params {
        let want = oracle(&base(id, p));
        let got = eval_f64(id, p).map_err(|e| format!("{id} {p:?}: {e}"))?;
        ensure((got - want).abs() <= TOL, || format!("{id} {p:?}: formula {got} oracle {want}"))?;
    }
    Ok(params.len())
}

fn criterion_1() -> Outcome {
    use FormulaId::*;
    let start = Instant::now();
    let oracle = |g: &Graph| common::closeness(&middle(g));
    let mut cases = 0;
    for (id, lo, hi) in [
        (CM_Path, 2, 16),
        (CM_Cycle, 3, 16),
        (CM_Star, 2, 14),
        (CM_Kn, 3, 10),
        (CM_Wheel, 5, 12),
        (CM_Knm, 2, 7),
    ] {
        cases += check_range(id, lo, hi, oracle)?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 30.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{cases} cases in {secs:.1}s"))
}

fn criterion_2() -> Outcome {
    use FormulaId::*;
    let start = Instant::now();
    let oracle = |g: &Graph| common::residual(&middle(g));
    let mut cases = 0;
    for (id, lo, hi) in [
        (RM_Path, 2, 14),
        (RM_Cycle, 3, 12),
        (RM_Star, 2, 12),
        (RM_Wheel, 6, 10),
        (RM_Knm, 2, 6),
    ] {
        cases += check_range(id, lo, hi, oracle)?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 300.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{cases} cases in {secs:.1}s"))
}

fn criterion_3() -> Outcome {
    use FormulaId::*;
    let mut cases = 0;
    for id in [C_Kn, C_Star, C_Path] {
        cases += check_range(id, 2, 20, common::closeness)?;
    }
    cases += check_range(C_Cycle, 3, 20, common::closeness)?;
    cases += check_range(R_Kn, 3, 12, common::residual)?;
    for n in 3..=12u64 {
        let r = common::residual(&family(FamilySpec::Complete { n: n as usize }));
        let want = ((n - 1) * (n - 2)) as f64 / 2.0;
        ensure((r - want).abs() <= TOL, || format!("R(K_{n}) = {r}, expected {want}"))?;
    }
    for id in [CL_Path, CL_Star, CL_Cycle, CL_Kn] {
        cases += check_range(id, 3, 10, |g| common::closeness(&line(g)))?;
    }
    Ok(format!("{cases} cases"))
}

fn criterion_4() -> Outcome {
    let pairs = [
        (FamilySpec::Complete { n: 3 }, FamilySpec::Cycle { n: 3 }, 12.0),
        (FamilySpec::CompleteBipartite { n: 2, m: 2 }, FamilySpec::Cycle { n: 4 }, 19.5),
        (FamilySpec::Star { n: 2 }, FamilySpec::Path { n: 3 }, 7.25),
    ];
    for (a, b, want) in pairs {
        for spec in [a, b] {
            let g = family(spec);
            let reference = common::closeness(&middle(&g));
            let lib: f64 = resiclose::total_closeness(&middle_graph(&g));
            ensure((reference - want).abs() <= 1e-12 && (lib - want).abs() <= 1e-12, || {
                format!("C(M({spec})) oracle {reference} library {lib}, expected {want}")
            })?;
        }
    }
    Ok("12, 19.5, 7.25".into())
}

fn criterion_5() -> Outcome {
    let mut trees: Vec<(String, Graph)> = random_tree_corpus(100, 3, 15, TREE_CORPUS_SEED)
        .unwrap()
        .into_iter()
        .map(|(s, g)| (s.to_string(), g))
        .collect();
    for n in 2..=15 {
        trees.push((format!("path({n})"), family(FamilySpec::Path { n })));
    }
    for n in 1..=14 {
        trees.push((format!("star({n})"), family(FamilySpec::Star { n })));
    }
    let five_halves = BigRational::new(5.into(), 2.into());
    for (label, t) in &trees {
        let lhs = common::closeness_exact(&middle(t));
        let rhs = &five_halves * common::closeness_exact(t) + common::closeness_exact(&line(t));
        ensure(lhs == rhs, || format!("{label}: {lhs} vs {rhs}"))?;
        let rec = resiclose::verify::audit_tree_identity(t, label, TOL).unwrap();
        ensure(rec.holds, || format!("{label}: library audit {rec:?}"))?;
    }
    Ok(format!("{} trees", trees.len()))
}

fn criterion_6() -> Outcome {
    for n in 3..=8usize {
        let g = family(FamilySpec::Complete { n });
        let cm = common::closeness(&middle(&g));
        let (nf, r) = (n as f64, (n - 1) as f64);
        let upper = common::closeness(&g) / 2.0 + nf * r * (4.0 * nf + 4.0 * r + nf * r + 2.0) / 16.0;
        ensure((cm - upper).abs() <= TOL, || format!("K_{n}: C(M) {cm} upper {upper}"))?;
        let recs = audit_regular_bounds(&g, n - 1, "k", TOL).unwrap();
        let rec = recs.iter().find(|r| r.bound == BoundId::RegularUpper).unwrap();
        ensure(rec.slack.abs() <= TOL, || format!("K_{n}: library slack {}", rec.slack))?;
    }
    for n in 3..=16usize {
        let g = family(FamilySpec::Cycle { n });
        let cm = common::closeness(&middle(&g));
        let recs = audit_regular_bounds(&g, 2, "c", TOL).unwrap();
        let rec = recs.iter().find(|r| r.bound == BoundId::RegularLower).unwrap();
        ensure((rec.lhs - cm).abs() <= TOL && rec.slack.abs() <= TOL, || {
            format!("C_{n}: lower {} oracle {cm}", rec.lhs)
        })?;
    }
    Ok("upper attained on K_3..K_8, lower attained on C_3..C_16".into())
}

fn criterion_7() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = family_corpus(30)
        .into_iter()
        .filter(|(_, g)| g.m() > 0)
        .map(|(s, g)| (s.to_string(), g))
        .collect();
    graphs.extend(
        connected_erdos_renyi_corpus(50, 8, 1, 2, 0)
            .unwrap()
            .into_iter()
            .map(|(s, g)| (s.to_string(), g)),
    );
    let mut checks = 0;
    for (label, g) in &graphs {
        let r = common::residual(&middle(g));
        for (a, b) in g.edges() {
            let h = resiclose::remove_edge(g, a, b).unwrap();
            let c = common::closeness(&middle(&h));
            ensure(r <= c + TOL, || format!("{label} - ({a},{b}): R {r} > C {c}"))?;
            checks += 1;
        }
    }
    Ok(format!("{} graphs, {checks} edges", graphs.len()))
}

fn criterion_8() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_resiclose"))
        .args(["verify", "--suite", "bounds", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || format!("exit {:?}", out.status.code()))?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let flagged = v["flagged"].as_array().ok_or("no flagged list")?;
    let c5 = flagged
        .iter()
        .find(|r| r["bound"] == "connected-upper" && r["graph"] == "cycle(5)")
        .ok_or("cycle(5) upper bound not flagged")?;
    ensure(c5["lhs"] == 27.5 && c5["rhs"] == 14.5 && c5["holds"] == false, || {
        format!("cycle(5) record {c5}")
    })?;
    let bounds = v["bounds"].as_array().ok_or("no bounds list")?;
    for name in ["connected-lower", "connected-lower-proof"] {
        ensure(bounds.iter().any(|r| r["bound"] == name && r["graph"] == "cycle(5)"), || {
            format!("{name} missing")
        })?;
    }
    ensure(v["summary"]["failed"] == 0, || format!("summary {}", v["summary"]))?;
    Ok(format!("cycle(5) upper: lhs 27.5 rhs 14.5 flagged; {} flagged total", flagged.len()))
}

fn criterion_9() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = family_corpus(60)
        .into_iter()
        .map(|(s, g)| (s.to_string(), g))
        .collect();
    for seed in 0..200 {
        let spec = FamilySpec::ErdosRenyi { n: 12, num: 1, den: 3, seed };
        graphs.push((spec.to_string(), family(spec)));
    }
    for (label, g) in &graphs {
        let (bfs, fw) = (all_pairs_bfs(g), floyd_warshall(g));
        for i in 0..g.n() {
            for j in 0..g.n() {
                ensure(bfs.get(i, j) == fw.get(i, j), || format!("{label}: d({i},{j})"))?;
            }
        }
        for k in 0..g.n() {
            let a: f64 = closeness_after_removal_with(g, k, RemovalMode::Delete).unwrap();
            let b: f64 = closeness_after_removal_with(g, k, RemovalMode::Isolate).unwrap();
            ensure((a - b).abs() <= 1e-12, || format!("{label}: C_{k} {a} vs {b}"))?;
        }
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn argmin_kinds(g: &Graph) -> Result<(Vec<usize>, Graph), String> {
    let mg = middle_graph(g);
    let lib = residual_closeness::<f64>(&mg).map_err(|e| e.to_string())?.argmin;
    let (_, reference) = common::residual_exact(&mg);
    ensure(lib == reference, || format!("argmin {lib:?} vs oracle {reference:?}"))?;
    Ok((lib, mg))
}

fn criterion_10() -> Outcome {
    let specs = (3..=10)
        .map(|n| FamilySpec::Cycle { n })
        .chain((2..=10).map(|n| FamilySpec::Star { n }));
    for spec in specs {
        let (argmin, mg) = argmin_kinds(&family(spec))?;
        ensure(argmin.iter().all(|&k| mg.kind(k).is_some_and(|t| t.is_edge_vertex())), || {
            format!("{spec}: argmin {argmin:?}")
        })?;
    }
    for n in (4..=12).step_by(2) {
        let (argmin, mg) = argmin_kinds(&family(FamilySpec::Path { n }))?;
        let centre = VertexKind::EdgeVertex { a: n / 2 - 1, b: n / 2 };
        ensure(argmin.iter().any(|&k| mg.kind(k) == Some(centre)), || {
            format!("path({n}): argmin {argmin:?}")
        })?;
    }
    Ok("cycles 3..10, stars 2..10, even paths 4..12".into())
}

fn scaling() -> String {
    let sizes: Vec<usize> = (10..=60).step_by(10).collect();
    match scaling_rows(FamilyKind::Cycle, &sizes) {
        Ok(rows) => match doubling_ratio(&rows) {
            Some((a, b, ratio)) => {
                let verdict = if (8.0..=32.0).contains(&ratio) { "within" } else { "outside" };
                format!("t_residual({b})/t_residual({a}) = {ratio:.2}, {verdict} [8, 32]")
            }
            None => "no doubling pair measured".into(),
        },
        Err(e) => format!("scaling run failed: {e}"),
    }
}

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("formula vs oracle, middle-graph closeness", criterion_1),
        ("formula vs oracle, middle-graph residual closeness", criterion_2),
        ("base and line-graph closed forms", criterion_3),
        ("coincidences of small middle graphs", criterion_4),
        ("tree identity", criterion_5),
        ("regular bound equality cases", criterion_6),
        ("edge-removal bound", criterion_7),
        ("bound audit transparency", criterion_8),
        ("oracle self-consistency", criterion_9),
        ("residual argmin structure", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  criterion {:>2}  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {:>2}  {name}: {detail}", i + 1);
            }
        }
    }
    println!("INFO  scaling (informational): {}", scaling());
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
