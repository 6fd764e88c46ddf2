//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sparse_domset::bounds::ramsey_upper;
use sparse_domset::combinatorics::Combinations;
use sparse_domset::harness::gadget::{degree_reduction_gadget, disjoint_paths};
use sparse_domset::harness::generate::{
    cycle, grid, path, random_max_deg, random_tree, star, subdivided_clique,
};
use sparse_domset::oracle::{brute_force_connected, brute_force_efficient, brute_force_roman};
use sparse_domset::variants::trees::enumerate_trees;
use sparse_domset::variants::{
    solve_connected, solve_connected_driver, solve_d_connected, solve_efficient, solve_roman,
    ConnectedOptions, RomanOptions,
};
use sparse_domset::{
    brute_force_min_domset, brute_force_scattered, find_scattered, solve, BigBound, ClassProfile,
    DominationInstance, Graph, ProfileMode, ScatterOptions, SolveOptions, VertexSet,
};

/// Timing tolerance for the quadratic-growth check: doubling `m` may cost
/// at most this factor, and quadrupling at most its square.
const DOUBLING_FACTOR: f64 = 4.0;
/// Repetitions per timing; the minimum is used.
const TIMING_RUNS: usize = 9;

fn profile() -> ClassProfile {
    ClassProfile::by_name("planar", ProfileMode::PracticalSafe).unwrap()
}

fn exists(g: &Graph, w: &VertexSet, d: usize, k: usize) -> bool {
    brute_force_min_domset(g, w, d, k, &g.vertices())
        .unwrap()
        .is_some()
}

/// `G(n, p)` without connectivity guarantees.
fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Graphs on at most 12 vertices shared by several criteria.
fn small_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=12 {
        out.push((format!("P{n}"), path(n)));
    }
    for n in 3..=12 {
        out.push((format!("C{n}"), cycle(n).unwrap()));
    }
    for m in 1..=11 {
        out.push((format!("K1,{m}"), star(m)));
    }
    for (r, c) in [(2, 2), (2, 3), (3, 3), (3, 4), (2, 6)] {
        out.push((format!("grid{r}x{c}"), grid(r, c)));
    }
    for seed in 0..10u64 {
        let n = 5 + (seed as usize % 8);
        out.push((format!("tree{n}s{seed}"), random_tree(n, seed)));
        out.push((
            format!("deg3n{n}s{seed}"),
            random_max_deg(n, 3, n, seed).unwrap(),
        ));
        out.push((format!("gnp{n}s{seed}"), gnp(n, 0.3, seed)));
    }
    out
}

type Criterion = (&'static str, fn() -> Result<String, String>);

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: usize, name: &str, start: Instant, result: Result<String, String>) {
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("[PASS] criterion {id:>2} {name}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                self.failures += 1;
                println!("[FAIL] criterion {id:>2} {name}: {detail} ({secs:.1}s)");
            }
        }
    }
}

fn reduction_soundness() -> Result<String, String> {
    let mut graphs = 0;
    let mut steps = 0;
    for seed in 0..210u64 {
        let n = 12 + (seed as usize * 7) % 49;
        let d = 1 + (seed as usize % 2);
        let k = 1 + (seed as usize / 2) % 3;
        let g = random_max_deg(n, 3, n / 2, seed).unwrap();
        let out = solve(
            &DominationInstance::new(&g, k, d),
            &profile(),
            &SolveOptions::default(),
        )
        .unwrap();
        let mut w = g.vertices();
        let mut before = exists(&g, &w, d, k);
        for step in &out.trace {
            w.remove(step.removed);
            let after = exists(&g, &w, d, k);
            if before != after {
                return Err(format!(
                    "seed {seed}: removing {} changed the answer from {before} to {after}",
                    step.removed
                ));
            }
            before = after;
            steps += 1;
        }
        graphs += 1;
    }
    if steps == 0 {
        return Err("no reductions were performed".into());
    }
    Ok(format!(
        "{graphs} graphs, {steps} reduction steps, 0 violations"
    ))
}

fn driver_equivalence() -> Result<String, String> {
    let mut corpus: Vec<(String, Graph)> = Vec::new();
    for n in (5..=40).step_by(5) {
        corpus.push((format!("P{n}"), path(n)));
        corpus.push((format!("C{n}"), cycle(n).unwrap()));
        corpus.push((format!("K1,{}", n - 1), star(n - 1)));
    }
    for (r, c) in [(2, 2), (3, 3), (4, 4), (3, 6), (5, 5), (5, 8), (6, 6)] {
        corpus.push((format!("grid{r}x{c}"), grid(r, c)));
    }
    for seed in 0..12u64 {
        let n = 10 + (seed as usize * 3) % 31;
        corpus.push((
            format!("deg3n{n}s{seed}"),
            random_max_deg(n, 3, n / 2, seed).unwrap(),
        ));
        corpus.push((
            format!("deg4n{n}s{seed}"),
            random_max_deg(n, 4, n, seed + 100).unwrap(),
        ));
        corpus.push((format!("tree{n}s{seed}"), random_tree(n, seed)));
        corpus.push((format!("gnp{n}s{seed}"), gnp(n, 2.5 / n as f64, seed)));
    }
    let mut checked = 0;
    for (name, g) in &corpus {
        for d in 1..=2 {
            for k in 0..=4 {
                let out = solve(
                    &DominationInstance::new(g, k, d),
                    &profile(),
                    &SolveOptions::default(),
                )
                .unwrap();
                let truth = exists(g, &g.vertices(), d, k);
                if out.answer.is_inconclusive() || out.answer.is_yes() != truth {
                    return Err(format!(
                        "{name} d={d} k={k}: driver {} vs oracle {truth}",
                        out.answer.label()
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} instances on {} graphs agree",
        corpus.len()
    ))
}

fn path_law() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=30 {
        let g = path(n);
        for d in 1..=3 {
            let expected = n.div_ceil(2 * d + 1);
            let opt = brute_force_min_domset(&g, &g.vertices(), d, n, &g.vertices())
                .unwrap()
                .unwrap();
            if opt.len() != expected {
                return Err(format!("P{n} d={d}: oracle {} vs {expected}", opt.len()));
            }
            let yes = solve(
                &DominationInstance::new(&g, expected, d),
                &profile(),
                &SolveOptions::default(),
            )
            .unwrap();
            let no = solve(
                &DominationInstance::new(&g, expected - 1, d),
                &profile(),
                &SolveOptions::default(),
            )
            .unwrap();
            if !yes.answer.is_yes() || !no.answer.is_no() {
                return Err(format!(
                    "P{n} d={d}: driver {} / {}",
                    yes.answer.label(),
                    no.answer.label()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, d) pairs match ceil(n/(2d+1))"))
}

fn scattered_validity() -> Result<String, String> {
    let opts = ScatterOptions::default();
    let mut witnesses = 0;
    let mut failures_confirmed = 0;
    let mut check = |name: &str,
                     g: &Graph,
                     w: &VertexSet,
                     r: usize,
                     m: usize,
                     h: usize|
     -> Result<bool, String> {
        match find_scattered(g, w, r, m, h, &opts) {
            Ok(wit) => {
                let (rest, remap) = g.delete(wit.bottleneck()).unwrap();
                let ok = rest
                    .is_scattered(&remap.forward(wit.scattered()), r)
                    .unwrap()
                    && wit.scattered().is_subset(w)
                    && wit.scattered().is_disjoint(wit.bottleneck())
                    && wit.scattered().len() >= m
                    && wit.bottleneck().len() + 2 <= h;
                if !ok {
                    return Err(format!("{name} r={r} m={m} h={h}: invalid witness {wit:?}"));
                }
                witnesses += 1;
                Ok(true)
            }
            Err(_) => Ok(false),
        }
    };
    // Small graphs: completeness against the exhaustive search.
    let mut small: Vec<(String, Graph)> = small_corpus();
    for k in 1..=6 {
        for (i, t) in enumerate_trees(k).unwrap().enumerate() {
            small.push((
                format!("T{k}#{i}"),
                Graph::from_edges(k, t.edges().iter().copied()).unwrap(),
            ));
        }
    }
    for seed in 0..150u64 {
        small.push((format!("T7s{seed}"), random_tree(7, seed)));
        small.push((format!("T8s{seed}"), random_tree(8, seed + 1000)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (name, g) in &small {
        let n = g.n();
        let subsets = [
            g.vertices(),
            (0..n).filter(|_| rng.gen_bool(0.6)).collect::<VertexSet>(),
        ];
        for w in &subsets {
            for r in 1..=2 {
                for m in 1..=4 {
                    let found = check(name, g, w, r, m, 4)?;
                    if !found {
                        if let Some(bf) = brute_force_scattered(g, w, r, m, 2).unwrap() {
                            return Err(format!(
                                "{name} W={w:?} r={r} m={m}: find_scattered failed but S={:?} A={:?} works",
                                bf.bottleneck(),
                                bf.scattered()
                            ));
                        }
                        failures_confirmed += 1;
                    }
                }
            }
        }
    }
    // Larger graphs: validity only.
    let mut large: Vec<(String, Graph)> = vec![
        ("grid10x10".into(), grid(10, 10)),
        ("C200".into(), cycle(200).unwrap()),
        ("K1,150".into(), star(150)),
        ("subK6t2".into(), subdivided_clique(6, 2)),
        ("subK8t1".into(), subdivided_clique(8, 1)),
    ];
    for seed in 0..20u64 {
        large.push((
            format!("deg4s{seed}"),
            random_max_deg(150, 4, 150, seed).unwrap(),
        ));
    }
    for (name, g) in &large {
        for r in 1..=3 {
            for (m, h) in [(3, 2), (8, 3), (20, 4)] {
                check(name, g, &g.vertices(), r, m, h)?;
            }
        }
    }
    Ok(format!(
        "{witnesses} witnesses valid; {failures_confirmed} failures on n <= 12 confirmed by exhaustive search"
    ))
}

fn connected_variant() -> Result<String, String> {
    let opts = ConnectedOptions::default();
    let mut checked = 0;
    for (name, g) in small_corpus() {
        for d in 1..=2 {
            let power = g.power(d).unwrap();
            for k in 1..=4 {
                let inst = DominationInstance::new(&g, k, d);
                let truth =
                    brute_force_connected(&g, &g, &g.vertices(), d, k, &g.vertices()).unwrap();
                let got = solve_connected(&inst, opts).unwrap();
                if got.is_some() != truth.is_some() {
                    return Err(format!(
                        "{name} d={d} k={k}: solver {:?} vs oracle {:?}",
                        got, truth
                    ));
                }
                let truth_d =
                    brute_force_connected(&g, &power, &g.vertices(), d, k, &g.vertices()).unwrap();
                let got_d = solve_d_connected(&inst, opts).unwrap();
                if got_d.is_some() != truth_d.is_some() {
                    return Err(format!(
                        "{name} d={d} k={k}: d-connected {:?} vs oracle {:?}",
                        got_d, truth_d
                    ));
                }
                checked += 2;
            }
        }
    }
    let number = |g: &Graph| {
        (1..=g.n()).find(|&k| {
            solve_connected(&DominationInstance::new(g, k, 1), opts)
                .unwrap()
                .is_some()
        })
    };
    let (p7, c6) = (number(&path(7)), number(&cycle(6).unwrap()));
    if p7 != Some(5) || c6 != Some(4) {
        return Err(format!(
            "connected domination numbers P7 = {p7:?}, C6 = {c6:?}"
        ));
    }
    let big = star(50);
    let out = solve_connected_driver(
        &DominationInstance::new(&big, 1, 1),
        &profile(),
        &SolveOptions::default(),
    )
    .unwrap();
    if out.answer.witness() != Some(&VertexSet::from([0])) {
        return Err(format!("K1,50 driver answered {}", out.answer.label()));
    }
    Ok(format!("{checked} instances agree; P7 = 5, C6 = 4"))
}

fn roman() -> Result<String, String> {
    let direct = RomanOptions::default();
    let branching = RomanOptions {
        base_vertices: 0,
        ..RomanOptions::default()
    };
    let mut checked = 0;
    for (name, g) in small_corpus() {
        let best = brute_force_roman(&g).unwrap().weight();
        for k in 0..=5 {
            for opts in [&direct, &branching] {
                let got = solve_roman(&g, k, &profile(), opts).unwrap();
                if got.is_inconclusive() || got.is_yes() != (best <= k) {
                    return Err(format!(
                        "{name} k={k}: solver {} vs optimum {best}",
                        got.label()
                    ));
                }
                checked += 1;
            }
        }
    }
    let c4 = cycle(4).unwrap();
    let s5 = star(5);
    let named = [
        solve_roman(&c4, 2, &profile(), &direct).unwrap().is_no(),
        solve_roman(&c4, 3, &profile(), &direct).unwrap().is_yes(),
        solve_roman(&s5, 2, &profile(), &direct).unwrap().is_yes(),
    ];
    if named != [true; 3] {
        return Err(format!("named cases C4/k=2, C4/k=3, K1,5/k=2: {named:?}"));
    }
    Ok(format!("{checked} runs agree with the 3^n oracle"))
}

fn efficient() -> Result<String, String> {
    let mut checked = 0;
    for n in 3..=15 {
        let g = cycle(n).unwrap();
        for k in 1..=5 {
            let expected = n % 3 == 0 && k == n / 3;
            let oracle = brute_force_efficient(&g, k).unwrap().is_some();
            let got = solve_efficient(&g, k, &profile(), &SolveOptions::default()).unwrap();
            if oracle != expected || got.answer.is_yes() != expected || got.answer.is_inconclusive()
            {
                return Err(format!(
                    "C{n} k={k}: solver {}, oracle {oracle}, expected {expected}",
                    got.answer.label()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, k) pairs on cycles"))
}

fn has_mono_triangle(n: usize, colour: u32) -> bool {
    let index = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        a * n - a * (a + 1) / 2 + (b - a - 1)
    };
    Combinations::new(n, 3).any(|t| {
        let c = |a, b| colour >> index(a, b) & 1;
        let x = c(t[0], t[1]);
        x == c(t[0], t[2]) && x == c(t[1], t[2])
    })
}

fn ramsey() -> Result<String, String> {
    let all_six = (0u32..1 << 15).all(|c| has_mono_triangle(6, c));
    let some_five = (0u32..1 << 10).any(|c| !has_mono_triangle(5, c));
    let bound = ramsey_upper(2, 2, 3).map_err(|e| e.to_string())?;
    let bound_ok = bound >= BigBound::finite(6);
    if all_six && some_five && bound_ok {
        Ok(format!(
            "R(3,3) = 6 certified; ramsey_upper(2,2,3) = {bound}"
        ))
    } else {
        Err(format!(
            "six: {all_six}, five avoidable: {some_five}, bound {bound}"
        ))
    }
}

fn random_digraph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Graph::directed_from_arcs(n, arcs).unwrap()
}

fn gadget() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut queries = 0;
    for seed in 0..100u64 {
        let n = 4 + (seed as usize % 9);
        let d = random_digraph(n, 0.25 + 0.02 * (seed % 10) as f64, seed);
        let (g, _) = degree_reduction_gadget(&d, &[]).unwrap();
        let ins = g.in_degrees();
        if let Some(v) = (0..g.n()).find(|&v| ins[v] + g.degree(v) > 4) {
            return Err(format!(
                "digraph {seed}: vertex {v} has degree {}",
                ins[v] + g.degree(v)
            ));
        }
        for _ in 0..6 {
            let pairs = 1 + rng.gen_range(0..2);
            let terms: Vec<(usize, usize)> = (0..pairs)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let (g2, mapped) = degree_reduction_gadget(&d, &terms).unwrap();
            let before = disjoint_paths(&d, &terms).unwrap();
            let after = disjoint_paths(&g2, &mapped).unwrap();
            if before != after {
                return Err(format!(
                    "digraph {seed} terminals {terms:?}: {before} before, {after} after"
                ));
            }
            queries += 1;
        }
    }
    Ok(format!(
        "100 digraphs with degree <= 4; {queries} disjoint-path queries preserved"
    ))
}

fn kernel_shrink() -> Result<String, String> {
    let opts = SolveOptions::default();
    let mut times = Vec::new();
    for m in [50usize, 100, 200] {
        let g = star(m);
        let inst = DominationInstance::new(&g, 1, 1);
        let mut best = f64::INFINITY;
        let mut last = None;
        for _ in 0..TIMING_RUNS {
            let t = Instant::now();
            let out = solve(&inst, &profile(), &opts).unwrap();
            best = best.min(t.elapsed().as_secs_f64());
            last = Some(out);
        }
        let out = last.unwrap();
        if out.answer.witness() != Some(&VertexSet::from([0])) {
            return Err(format!("K1,{m}: answer {}", out.answer.label()));
        }
        if out.kernel.len() > opts.guard_core || out.trace.len() < m - opts.guard_core {
            return Err(format!(
                "K1,{m}: kernel {} after {} reductions",
                out.kernel.len(),
                out.trace.len()
            ));
        }
        times.push(best);
    }
    let r1 = times[1] / times[0];
    let r2 = times[2] / times[1];
    let r = times[2] / times[0];
    if r1 > DOUBLING_FACTOR || r2 > DOUBLING_FACTOR || r > DOUBLING_FACTOR * DOUBLING_FACTOR {
        return Err(format!(
            "time ratios {r1:.2}, {r2:.2}, {r:.2} exceed quadratic growth"
        ));
    }
    Ok(format!(
        "kernels reach the guard by reductions alone; times {:.2}/{:.2}/{:.2} ms, ratios {r1:.2}, {r2:.2}",
        times[0] * 1e3,
        times[1] * 1e3,
        times[2] * 1e3
    ))
}

fn main() {
    let mut report = Report { failures: 0 };
    let criteria: [Criterion; 10] = [
        ("reduction soundness", reduction_soundness),
        ("driver/oracle equivalence", driver_equivalence),
        ("path law", path_law),
        ("scattered-witness validity", scattered_validity),
        ("connected variant", connected_variant),
        ("Roman domination", roman),
        ("efficient domination", efficient),
        ("Ramsey certification", ramsey),
        ("degree-reduction gadget", gadget),
        ("kernel shrink on stars", kernel_shrink),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| name.contains(f.as_str()) || *f == id.to_string())
        {
            continue;
        }
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        report.line(id, name, start, result);
    }
    if report.failures > 0 {
        println!("{} criteria failed", report.failures);
        std::process::exit(1);
    }
}
