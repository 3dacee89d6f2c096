//! Acceptance gate. One test per criterion; each prints a `PASS`/`FAIL`
//! line straight to stderr so the summary is visible without `--nocapture`.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use chigap::extremal::CoreKind;
use chigap::io::{from_graph6, read_graphs, to_edge_list, to_graph6, Format};
use chigap::oracle::{
    self, edge_slots, enumerate_connected, generate, graph_from_mask, DecoratedBounds, EnumerationSummary, Mode,
};
use chigap::{chromatic_number, gap, verify_coloring, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LABELED_CONNECTED: [u64; 7] = [1, 1, 4, 38, 728, 26704, 1866256];
/// Extremal labeled counts for n = 1..=7. n = 3 and 4 are derived by hand
/// (4 = three paths + triangle; 29 = 16 trees + 12 paws + K4); n >= 5 are
/// the values recorded by the sweep and pinned for stability.
const LABELED_EXTREMAL: [u64; 7] = [1, 1, 4, 29, 308, 4207, 69640];
const SWEEP_BUDGET: Duration = Duration::from_secs(300);
const DECORATED_BUDGET: Duration = Duration::from_secs(30);
const SEED: u64 = 20241015;

fn criterion(id: &str, title: &str, body: impl FnOnce() -> Result<String, String>) {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let line = match &outcome {
        Ok(detail) => format!("[PASS] {id} {title}: {detail}\n"),
        Err(detail) => format!("[FAIL] {id} {title}: {detail}\n"),
    };
    let _ = std::io::stderr().write_all(line.as_bytes());
    if let Err(detail) = outcome {
        panic!("{id} failed: {detail}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn ac1_lower_bound_sweep() {
    criterion("AC1", "gap >= 0 on all labeled connected graphs, n <= 7", || {
        let start = Instant::now();
        let mut counts = Vec::new();
        let mut violations = 0u64;
        for n in 1..=7 {
            let mut count = 0u64;
            for g in enumerate_connected(n, Mode::Labeled).map_err(|e| e.to_string())? {
                count += 1;
                if gap(&g).map_err(|e| e.to_string())?.gap < 0 {
                    violations += 1;
                }
            }
            let recount = oracle::recount_connected(n, Mode::Labeled).map_err(|e| e.to_string())?;
            ensure(count == recount, || format!("n={n}: enumerated {count}, recount {recount}"))?;
            counts.push(count);
        }
        let elapsed = start.elapsed();
        ensure(counts == LABELED_CONNECTED, || format!("counts {counts:?}"))?;
        ensure(violations == 0, || format!("{violations} violations"))?;
        ensure(elapsed <= SWEEP_BUDGET, || format!("took {elapsed:?}"))?;
        Ok(format!("counts {counts:?}, 0 violations, {:.1}s", elapsed.as_secs_f64()))
    });
}

#[test]
fn ac2_extremal_equivalence() {
    criterion("AC2", "gap = 0 <=> type A/B on the same corpus", || {
        let start = Instant::now();
        let first = oracle::check_theorem(7, Mode::Labeled).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        let second = oracle::check_theorem_with_jobs(7, Mode::Labeled, 1).map_err(|e| e.to_string())?;
        ensure(first == second, || "two runs disagree".into())?;
        let bad: usize = first.iter().map(|s| s.counterexamples.len()).sum();
        ensure(bad == 0, || format!("{bad} counterexamples: {:?}", first.iter().flat_map(|s| &s.counterexamples).take(5).collect::<Vec<_>>()))?;
        let connected: Vec<u64> = first.iter().map(|s| s.connected_count).collect();
        ensure(connected == LABELED_CONNECTED, || format!("connected {connected:?}"))?;
        let extremal: Vec<u64> = first.iter().map(|s| s.extremal_count).collect();
        ensure(extremal == LABELED_EXTREMAL, || format!("extremal {extremal:?}"))?;
        ensure(elapsed <= SWEEP_BUDGET, || format!("took {elapsed:?}"))?;
        Ok(format!("extremal {extremal:?}, 0 counterexamples, stable across runs"))
    });
}

/// Every one of the k^n assignments, for k = 1, 2, ...
fn naive_chi(g: &Graph) -> usize {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut colors = vec![0; n];
            let mut c = code;
            for slot in colors.iter_mut() {
                *slot = c % k;
                c /= k;
            }
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
        }
    }
    0
}

/// All assignments in lexicographic order, jumping past every assignment
/// that shares a prefix already known to contain a monochromatic edge.
fn lexicographic_chi(g: &Graph) -> usize {
    let n = g.vertex_count();
    'k: for k in 1..=n {
        let mut col = vec![0usize; n];
        let mut i = 0;
        loop {
            if (0..i).all(|j| !g.has_edge(i, j) || col[i] != col[j]) {
                i += 1;
                if i == n {
                    return k;
                }
                col[i] = 0;
                continue;
            }
            loop {
                col[i] += 1;
                if col[i] < k {
                    break;
                }
                if i == 0 {
                    continue 'k;
                }
                i -= 1;
            }
        }
    }
    0
}

#[test]
fn ac3_coloring_oracle() {
    criterion("AC3", "chromatic_number matches the all-assignments oracle", || {
        let mut exhaustive = 0;
        for n in 1..=5 {
            let slots = edge_slots(n);
            for mask in 0..1u64 << slots.len() {
                let g = graph_from_mask(n, &slots, mask);
                let (k, w) = chromatic_number(&g);
                ensure(verify_coloring(&g, &w) == Ok(true) && w.num_colors() == k, || format!("bad witness on {}", to_graph6(&g)))?;
                let expected = naive_chi(&g);
                ensure(k == expected, || format!("{}: got {k}, oracle {expected}", to_graph6(&g)))?;
                exhaustive += 1;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = generate::random_graph(&mut rng, n, p);
            let (k, w) = chromatic_number(&g);
            ensure(verify_coloring(&g, &w) == Ok(true), || format!("bad witness on {}", to_graph6(&g)))?;
            let expected = lexicographic_chi(&g);
            ensure(k == expected, || format!("{}: got {k}, oracle {expected}", to_graph6(&g)))?;
        }
        Ok(format!("{exhaustive} exhaustive graphs (n <= 5) + 1000 random (n <= 10) agree"))
    });
}

#[test]
fn ac4_decorated_chromatic_numbers() {
    criterion("AC4", "decorated graphs have chi = m / 3 / 2", || {
        let start = Instant::now();
        let report = oracle::decorated_chi_check(200, SEED, DecoratedBounds::default()).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(report.checked == 600, || format!("checked {}", report.checked))?;
        ensure(report.passed(), || format!("failures {:?}", report.failures))?;
        ensure(elapsed <= DECORATED_BUDGET, || format!("took {elapsed:?}"))?;
        Ok(format!("200 per class, 0 failures, {:.2}s", elapsed.as_secs_f64()))
    });
}

#[test]
fn ac5_pendant_closure() {
    criterion("AC5", "pendant attachment preserves kind and core order", || {
        let report = oracle::pendant_closure_suite(200, SEED).map_err(|e| e.to_string())?;
        ensure(report.checked == 200, || format!("checked {}", report.checked))?;
        ensure(report.passed(), || format!("failures {:?}", report.failures))?;
        Ok("200 attachments, 0 failures".into())
    });
}

#[test]
fn ac6_vertex_removal() {
    criterion("AC6", "deg(v) = 1 or deg(v) = chi(G - v) on extremal graphs, n <= 6", || {
        let mut graphs = 0;
        let mut removals = 0;
        for n in 2..=6 {
            for g in enumerate_connected(n, Mode::Labeled).map_err(|e| e.to_string())? {
                if gap(&g).map_err(|e| e.to_string())?.gap != 0 {
                    continue;
                }
                graphs += 1;
                for v in 0..n {
                    let rest = g.remove_vertex(v).map_err(|e| e.to_string())?;
                    if !rest.is_connected() {
                        continue;
                    }
                    removals += 1;
                    let d = g.degree(v).map_err(|e| e.to_string())?;
                    let chi_rest = chromatic_number(&rest).0;
                    ensure(d == 1 || d == chi_rest, || format!("{} v={v}: deg {d}, chi(G-v) {chi_rest}", to_graph6(&g)))?;
                }
            }
        }
        let full = oracle::lemma_big_sweep(6).map_err(|e| e.to_string())?;
        ensure(full.passed() && full.checked == graphs, || format!("full check: {full}"))?;
        Ok(format!("{graphs} extremal graphs, {removals} connected removals, 0 failures"))
    });
}

#[test]
fn ac7_format_fidelity() {
    criterion("AC7", "graph6 byte-exact round trip and edge-list agreement", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for i in 0..10_000 {
            let g = if i % 4 == 0 {
                let core = if rng.gen_bool(0.5) {
                    CoreKind::Complete(rng.gen_range(1..=7))
                } else {
                    CoreKind::Cycle(rng.gen_range(3..=12))
                };
                generate::random_decorated(&mut rng, core, 40, 5).map_err(|e| e.to_string())?
            } else {
                let n = rng.gen_range(0..=80);
                let p = rng.gen::<f64>();
                generate::random_graph(&mut rng, n, p)
            };
            let g6 = to_graph6(&g);
            let back = from_graph6(&g6).map_err(|e| format!("{g6}: {e}"))?;
            ensure(to_graph6(&back) == g6 && back == g, || format!("round trip changed {g6}"))?;
            let from_lines = read_graphs(&format!("{g6}\n"), None).map_err(|e| e.to_string())?;
            let from_edges = read_graphs(&to_edge_list(&g), None).map_err(|e| e.to_string())?;
            ensure(from_lines == from_edges && from_lines == [g.clone()], || format!("ingestion differs for {g6}"))?;
            let forced = read_graphs(&to_edge_list(&g), Some(Format::EdgeList)).map_err(|e| e.to_string())?;
            ensure(forced == from_edges, || "explicit format differs".into())?;
        }
        Ok("10000 graphs round-trip".into())
    });
}

#[test]
fn ac8_determinism() {
    criterion("AC8", "verify --max-n 6 output independent of --jobs", || {
        let run = |jobs: &str| {
            Command::new(env!("CARGO_BIN_EXE_chigap"))
                .args(["verify", "--max-n", "6", "--jobs", jobs])
                .output()
                .expect("spawn chigap")
        };
        let a = run("1");
        let b = run("4");
        ensure(a.status.success() && b.status.success(), || format!("exit {:?} / {:?}", a.status, b.status))?;
        ensure(a.stdout == b.stdout, || "outputs differ".into())?;
        let text = String::from_utf8(a.stdout).map_err(|e| e.to_string())?;
        let expected_rows: Vec<String> = oracle::check_theorem(6, Mode::Labeled)
            .map_err(|e| e.to_string())?
            .iter()
            .map(EnumerationSummary::row)
            .collect();
        ensure(text.lines().skip(1).eq(expected_rows.iter().map(String::as_str)), || text.clone())?;
        Ok(format!("{} identical bytes", text.len()))
    });
}
