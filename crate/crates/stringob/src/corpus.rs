//! Seeded random-graph experiments.
//!
//! Instances are generated by a counter-keyed ChaCha stream, so a corpus
//! is reproducible from its spec alone. Checks run per instance and the
//! runner merges results in instance order; the optional `STRINGOB_THREADS`
//! environment variable bounds the worker pool.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::drawing::{apply_finger_move, crossing_vector, layout_moment_curve, layout_random};
use crate::graph::{Graph, PairKind, pair_set};
use crate::obstruction::{
    Mode, build_system, finger_move_vector, mod2_membership, string_obstruction,
    subdivided_obstruction,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// String and subdivided obstruction flags agree.
    ObEqEquivalence,
    /// Two layouts' crossing vectors differ by a span element.
    LayoutIndependence,
    /// Integer vanishing implies mod-2 vanishing; the reverse gap is
    /// logged as a finding, never a failure.
    IntegerVsMod2,
    /// A random finger move changes the crossing vector by exactly φ.
    FingerMovePostcondition,
}

impl CheckKind {
    pub const ALL: [CheckKind; 4] = [
        CheckKind::ObEqEquivalence,
        CheckKind::LayoutIndependence,
        CheckKind::IntegerVsMod2,
        CheckKind::FingerMovePostcondition,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckKind::ObEqEquivalence => "ob_eq_equivalence",
            CheckKind::LayoutIndependence => "layout_independence",
            CheckKind::IntegerVsMod2 => "integer_vs_mod2",
            CheckKind::FingerMovePostcondition => "finger_move_postcondition",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub n_range: (usize, usize),
    pub edge_probability: Vec<f64>,
    pub checks: Vec<CheckKind>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 1,
            count: 200,
            n_range: (4, 12),
            edge_probability: vec![0.2, 0.4, 0.6],
            checks: CheckKind::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckStats {
    pub checked: usize,
    /// Hard failures: a property the library must uphold was violated.
    pub failures: Vec<String>,
    /// Research flags (never failures), e.g. a mod-2/integer divergence.
    pub findings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CorpusSummary {
    pub instances: usize,
    pub ob_eq: CheckStats,
    pub layout_independence: CheckStats,
    pub integer_vs_mod2: CheckStats,
    pub finger_move: CheckStats,
    pub millis: u64,
}

impl CorpusSummary {
    pub fn failure_count(&self) -> usize {
        self.ob_eq.failures.len()
            + self.layout_independence.failures.len()
            + self.integer_vs_mod2.failures.len()
            + self.finger_move.failures.len()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let stat = |s: &CheckStats| {
            json!({
                "checked": s.checked,
                "failures": s.failures,
                "findings": s.findings,
            })
        };
        json!({
            "instances": self.instances,
            "checks": {
                "ob_eq_equivalence": stat(&self.ob_eq),
                "layout_independence": stat(&self.layout_independence),
                "integer_vs_mod2": stat(&self.integer_vs_mod2),
                "finger_move_postcondition": stat(&self.finger_move),
            },
            "failure_count": self.failure_count(),
            "millis": self.millis,
        })
    }
}

/// G(n, p) with a counter-keyed stream: instance i of a corpus always sees
/// the same graph regardless of which other instances run.
pub fn gnp(seed: u64, instance: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e3779b97f4a7c15) ^ instance);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("gnp emits simple edges")
}

/// A random planar graph: a stacked triangulation (repeatedly placing a
/// vertex inside a random face), thinned by random edge deletions. Planar
/// by construction.
pub fn random_planar(seed: u64, n: usize, delete_fraction: f64) -> Graph {
    assert!(n >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1234_5678_9abc_def0);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (1, 2)];
    for v in 3..n {
        let f = faces.swap_remove(rng.gen_range(0..faces.len()));
        for &u in &f {
            edges.push((u.min(v), u.max(v)));
        }
        faces.push([f[0], f[1], v]);
        faces.push([f[0], f[2], v]);
        faces.push([f[1], f[2], v]);
    }
    if delete_fraction > 0.0 {
        edges.retain(|_| !rng.gen_bool(delete_fraction));
    }
    Graph::new(n, &edges).expect("stacked triangulation is simple")
}

struct InstanceOutcome {
    ob_eq: Option<Result<(), String>>,
    layout: Option<Result<(), String>>,
    int_mod2: Option<Result<Option<String>, String>>,
    finger: Option<Result<(), String>>,
}

fn run_instance(spec: &CorpusSpec, i: usize) -> InstanceOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ (0xc0ffee00 + i as u64));
    let (lo, hi) = spec.n_range;
    let n = rng.gen_range(lo..=hi);
    let p = spec.edge_probability[i % spec.edge_probability.len().max(1)];
    let g = gnp(spec.seed, i as u64, n, p);
    let tag = |msg: String| format!("instance {i} (n={n}, p={p}): {msg}");

    let mut out = InstanceOutcome {
        ob_eq: None,
        layout: None,
        int_mod2: None,
        finger: None,
    };

    for check in &spec.checks {
        match check {
            CheckKind::ObEqEquivalence => {
                let s = string_obstruction(&g, Mode::Mod2);
                let sd = subdivided_obstruction(&g, Mode::Mod2);
                out.ob_eq = Some(if s.vanishes == sd.vanishes {
                    Ok(())
                } else {
                    Err(tag(format!(
                        "string vanishes={} but subdivided vanishes={}",
                        s.vanishes, sd.vanishes
                    )))
                });
            }
            CheckKind::LayoutIndependence => {
                let pairs = pair_set(&g, PairKind::S);
                let sys = build_system(&pairs);
                let d1 = layout_moment_curve(&g);
                let r = layout_random(&g, spec.seed ^ (i as u64) << 20);
                out.layout = Some(match r {
                    Err(e) => Err(tag(format!("random layout failed: {e}"))),
                    Ok(d2) => {
                        let o1 = crossing_vector(&d1, &pairs).expect("generic");
                        let o2 = crossing_vector(&d2, &pairs).expect("generic");
                        let mut diff = o1.mod2().clone();
                        diff.xor_assign(o2.mod2());
                        if mod2_membership(&sys, &diff) {
                            Ok(())
                        } else {
                            Err(tag("layout difference not in span(Φ)".into()))
                        }
                    }
                });
            }
            CheckKind::IntegerVsMod2 => {
                let int = string_obstruction(&g, Mode::Integer);
                let m2 = string_obstruction(&g, Mode::Mod2);
                out.int_mod2 = Some(if int.vanishes && !m2.vanishes {
                    Err(tag("integer vanishes but mod2 does not".into()))
                } else if m2.vanishes && !int.vanishes {
                    Ok(Some(tag(
                        "mod2 vanishes but integer does not (research flag)".into(),
                    )))
                } else {
                    Ok(None)
                });
            }
            CheckKind::FingerMovePostcondition => {
                out.finger = Some(finger_check(&g, spec.seed ^ (i as u64) << 8, &mut rng, tag));
            }
        }
    }
    out
}

fn finger_check(
    g: &Graph,
    layout_seed: u64,
    rng: &mut ChaCha8Rng,
    tag: impl Fn(String) -> String,
) -> Result<(), String> {
    if g.edge_count() == 0 {
        return Ok(());
    }
    let pairs = pair_set(g, PairKind::Delta);
    let d = match layout_random(g, layout_seed) {
        Ok(d) => d,
        Err(e) => return Err(tag(format!("layout failed: {e}"))),
    };
    // A random admissible (ω, u).
    let omega = rng.gen_range(0..g.edge_count());
    let (a, b) = g.edge(omega);
    if g.vertex_count() <= 2 {
        return Ok(());
    }
    let mut u = rng.gen_range(0..g.vertex_count());
    while u == a || u == b {
        u = rng.gen_range(0..g.vertex_count());
    }
    let before = crossing_vector(&d, &pairs).expect("generic");
    let after_d = match apply_finger_move(&d, omega, u, &pairs) {
        Ok(d) => d,
        Err(e) => return Err(tag(format!("finger move failed: {e}"))),
    };
    let after = crossing_vector(&after_d, &pairs).expect("generic");
    let phi = finger_move_vector(g, &pairs, omega, u).expect("u off omega");
    let mut diff = before.mod2().clone();
    diff.xor_assign(after.mod2());
    if diff == phi {
        Ok(())
    } else {
        Err(tag(format!("parity change ≠ φ for ω={omega}, u={u}")))
    }
}

/// Runs all configured checks over the corpus. Instances are evaluated in
/// parallel (bounded by `STRINGOB_THREADS` when set) and merged in order.
pub fn run_corpus(spec: &CorpusSpec) -> CorpusSummary {
    let start = std::time::Instant::now();
    let outcomes: Vec<InstanceOutcome> = match thread_pool() {
        Some(pool) => pool.install(|| {
            (0..spec.count)
                .into_par_iter()
                .map(|i| run_instance(spec, i))
                .collect()
        }),
        None => (0..spec.count)
            .into_par_iter()
            .map(|i| run_instance(spec, i))
            .collect(),
    };

    let mut summary = CorpusSummary {
        instances: spec.count,
        ob_eq: CheckStats::default(),
        layout_independence: CheckStats::default(),
        integer_vs_mod2: CheckStats::default(),
        finger_move: CheckStats::default(),
        millis: 0,
    };
    for o in outcomes {
        if let Some(r) = o.ob_eq {
            summary.ob_eq.checked += 1;
            if let Err(e) = r {
                summary.ob_eq.failures.push(e);
            }
        }
        if let Some(r) = o.layout {
            summary.layout_independence.checked += 1;
            if let Err(e) = r {
                summary.layout_independence.failures.push(e);
            }
        }
        if let Some(r) = o.int_mod2 {
            summary.integer_vs_mod2.checked += 1;
            match r {
                Err(e) => summary.integer_vs_mod2.failures.push(e),
                Ok(Some(flag)) => summary.integer_vs_mod2.findings.push(flag),
                Ok(None) => {}
            }
        }
        if let Some(r) = o.finger {
            summary.finger_move.checked += 1;
            if let Err(e) = r {
                summary.finger_move.failures.push(e);
            }
        }
    }
    summary.millis = start.elapsed().as_millis() as u64;
    summary
}

/// A dedicated pool when `STRINGOB_THREADS` is set; otherwise rayon's
/// global default.
fn thread_pool() -> Option<rayon::ThreadPool> {
    let threads: usize = std::env::var("STRINGOB_THREADS").ok()?.parse().ok()?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .ok()
}
