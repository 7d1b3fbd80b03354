use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::connectivity::{component_ideals, endo_structure_report, hh_graph, lyubeznik_top, GeometricFlag};
use crate::error::Result;
use crate::groebner::with_pair_budget;
use crate::homological::{endo_stabilization, s2_fication, top_dimensional_part, PresentedModule};
use crate::ideal::Ideal;
use crate::ring::Ring;

use super::report::*;
use super::session::{Session, TaskDecl, TaskKind};

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Worker threads for independent tasks (0 and 1 both mean sequential).
    pub jobs: usize,
    pub certify_field: bool,
    pub budget_pairs: Option<u64>,
}

pub fn run_session(session: &Session, opts: &RunOptions) -> Result<AnalysisReport> {
    let start = Instant::now();
    let ring = session.ring()?;
    let jobs = opts.jobs.max(1).min(session.tasks.len().max(1));
    let results: Vec<Mutex<Option<Result<TaskReport>>>> = session.tasks.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let work = || loop {
        let k = next.fetch_add(1, Ordering::Relaxed);
        if k >= session.tasks.len() {
            break;
        }
        let r = budgeted(opts.budget_pairs, || run_task(session, &ring, &session.tasks[k], opts));
        *results[k].lock().unwrap() = Some(r);
    };
    if jobs == 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..jobs {
                s.spawn(work);
            }
        });
    }
    let mut tasks = Vec::with_capacity(results.len());
    for r in results {
        tasks.push(r.into_inner().unwrap().expect("every task ran")?);
    }
    Ok(AnalysisReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        ring: ring.describe(),
        field: ring.field().to_string(),
        model: MODEL_NOTE.to_string(),
        tasks,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

fn budgeted<T>(budget: Option<u64>, f: impl FnOnce() -> T) -> T {
    match budget {
        Some(n) => with_pair_budget(n, f),
        None => f(),
    }
}

fn json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("result serializes")
}

fn strings(i: &Ideal) -> Result<Vec<String>> {
    i.canonical_strings()
}

/// Warnings from the height computation that concern the choice of
/// `c = n - d`.
fn codim_warnings(ideal: &Ideal) -> Result<Vec<String>> {
    Ok(ideal.height()?.warnings.into_iter().filter(|w| w.starts_with("NonEquidimensional")).collect())
}

pub fn run_task(session: &Session, ring: &Ring, task: &TaskDecl, opts: &RunOptions) -> Result<TaskReport> {
    let decl = session.ideal(&task.ideal).expect("parser checked the ideal name");
    let ideal = Ideal::new(ring, decl.generators.iter().map(|g| ring.parse(g)).collect::<Result<_>>()?)?;
    let certified = task.certify_field || opts.certify_field;
    let mut warnings = Vec::new();
    let result = match task.kind {
        TaskKind::Dim => json(&DimResult { dim: ideal.dimension()? }),
        TaskKind::Height => {
            let h = ideal.height()?;
            warnings.extend(h.warnings.iter().cloned());
            json(&HeightResult { height: h.height, codim: h.codim, equidimensional: h.equidimensional })
        }
        TaskKind::MinPrimes => {
            let p = ideal.minimal_primes()?;
            let primes = p.primes().iter().map(strings).collect::<Result<_>>()?;
            let dimensions = p.primes().iter().map(|q| q.dimension()).collect::<Result<_>>()?;
            if !certified {
                warnings.push(format!("primes over {} only; they may split over an extension", ring.field()));
            }
            json(&PrimesResult { count: p.len(), primes, dimensions })
        }
        TaskKind::HhGraph => {
            let g = hh_graph(&ideal)?.with_flag(GeometricFlag::from_certified(certified));
            let t = g.components()?.t;
            json(&GraphResult {
                d: g.d(),
                vertices: g.vertex_strings()?,
                edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
                t,
                geometric_flag: g.geometric_flag(),
            })
        }
        TaskKind::Lyubeznik => {
            let l = lyubeznik_top(&ideal, certified)?;
            if !certified {
                warnings.push("field not certified to split the components; the value is a lower bound".to_string());
            }
            json(&LyubeznikResult { lambda_top: l.lambda, geometric_flag: l.flag })
        }
        TaskKind::S2 => {
            warnings.extend(codim_warnings(&ideal)?);
            let s = s2_fication(&ideal)?;
            let q = PresentedModule::quotient_ring(&ideal)?.hilbert_series()?;
            json(&S2Result {
                codim: s.codim,
                hilbert: (&s.module.hilbert_series()?).into(),
                quotient_hilbert: (&q).into(),
                kernel: strings(&s.kernel)?,
                kernel_is_ideal: s.kernel.same_as(&ideal)?,
            })
        }
        TaskKind::IdTop => {
            warnings.extend(codim_warnings(&ideal)?);
            json(&IdTopResult { generators: strings(&top_dimensional_part(&ideal)?)? })
        }
        TaskKind::Endo => {
            let r = endo_structure_report(&ideal, certified)?;
            warnings.extend(r.warnings.iter().cloned());
            json(&r)
        }
        TaskKind::Components => {
            let c = component_ideals(&ideal, certified)?;
            json(&ComponentsResult {
                ideals: c.ideals.iter().map(strings).collect::<Result<_>>()?,
                canonical_hilbert: (&c.whole).into(),
                parts: c.parts.iter().map(SeriesReport::from).collect(),
                certified: true,
            })
        }
        TaskKind::Stabilize => {
            warnings.extend(codim_warnings(&ideal)?);
            let stages = endo_stabilization(&ideal, task.alpha_max.unwrap_or(3))?;
            for s in &stages {
                if !s.unmixed {
                    warnings.push(format!("alpha = {}: I^alpha has lower dimensional components; compared with (I^alpha)_d", s.alpha));
                }
            }
            let coker_dims = stages.iter().map(|s| s.coker_dim).collect();
            let stages = stages
                .iter()
                .map(|s| StageReport {
                    alpha: s.alpha,
                    b_hilbert: (&s.b_hilbert).into(),
                    quotient_hilbert: (&s.quotient_hilbert).into(),
                    coker_dim: s.coker_dim,
                    unmixed: s.unmixed,
                })
                .collect();
            json(&StabilizeResult { stages, coker_dims })
        }
    };
    Ok(TaskReport { name: task.kind.name().to_string(), ideal: task.ideal.clone(), result, warnings })
}
