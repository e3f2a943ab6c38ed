use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

use anyhow::{bail, Result};
use serde::Serialize;

use conicgin::ginlab::{artinian_h_vector_with, generic_gin_with, shape_certificate, staircase_from_hilbert};
use conicgin::polytope::{convergence_report, limit_shape};
use conicgin::report::{convergence_csv, limit_svg, staircase_csv};
use conicgin::resolutions::{catalisano_resolve, closed_form_resolution, closed_form_supported, extremal_shifts};
use conicgin::{BettiTable, ConfigRecord, Execution, FatPointConfig, GinStaircase, ShapeCertificate};

use crate::args::{Cli, Format, GinMethod, ResolveMethod};
use crate::cache::{CacheEntry, CacheKey, GinCache};
use crate::config::{CommandKind, RunConfig};
use crate::output::{write_atomic, write_json};
use crate::verify::verify;

/// Result of one invocation: human-readable lines, files written and
/// whether every check passed.
#[derive(Debug, Default)]
pub struct Outcome {
    pub lines: Vec<String>,
    pub written: Vec<PathBuf>,
    pub cache_hits: usize,
    pub cache_misses: usize,
    pub success: bool,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cfg = RunConfig::from_command(&cli.command)?;
    with_jobs(cfg.jobs, || {
        let session = Session::new(&cfg);
        let mut outcome = match cfg.command {
            CommandKind::Gin(method) => gin(&session, method)?,
            CommandKind::Resolve(method) => resolve(&cfg, method)?,
            CommandKind::Limit { certify } => limit(&session, certify)?,
            CommandKind::Verify => verify(&session)?,
        };
        outcome.cache_hits = session.hits.load(Ordering::Relaxed);
        outcome.cache_misses = session.misses.load(Ordering::Relaxed);
        Ok(outcome)
    })
}

#[cfg(feature = "parallel")]
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_jobs<T>(_jobs: Option<usize>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    f()
}

/// Oracle results for one multiplicity.
#[derive(Debug, Clone)]
pub struct GinCell {
    pub m: u32,
    pub record: ConfigRecord,
    pub staircase: Option<GinStaircase>,
    pub h_vector: Option<Vec<u32>>,
}

impl GinCell {
    pub fn staircase(&self) -> &GinStaircase {
        self.staircase.as_ref().expect("oracle staircase requested")
    }

    pub fn h_vector(&self) -> &[u32] {
        self.h_vector.as_deref().expect("h-vector requested")
    }
}

pub struct Session<'a> {
    pub cfg: &'a RunConfig,
    pub exec: Execution,
    cache: GinCache,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

impl<'a> Session<'a> {
    pub fn new(cfg: &'a RunConfig) -> Self {
        Session {
            cfg,
            exec: Execution::default(),
            cache: GinCache::new(cfg.cache_dir()),
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
        }
    }

    /// Gin staircase and/or h-vector of `I^(m)`, from the cache when present.
    pub fn gin_cell(&self, m: u32, oracle: bool, hilbert: bool) -> Result<GinCell> {
        let c = self.cfg;
        let key = CacheKey { prime: c.field.prime(), r: c.r, m, seed: c.seed, trials: c.trials };
        let cached = self.cache.get(&key);
        let mut staircase = cached.as_ref().and_then(|e| e.staircase.clone());
        let mut h_vector = cached.as_ref().and_then(|e| e.h_vector.clone());
        let fp = FatPointConfig::on_conic(c.r, m, c.seed, c.field)?;
        let record = fp.record().expect("uniform configuration on the conic");
        let need_oracle = oracle && staircase.is_none();
        let need_hilbert = hilbert && h_vector.is_none();
        if !need_oracle && !need_hilbert {
            self.hits.fetch_add(1, Ordering::Relaxed);
        } else {
            self.misses.fetch_add(1, Ordering::Relaxed);
            if need_oracle {
                staircase = Some(generic_gin_with(&fp, c.trials, c.seed, self.exec)?);
            }
            if need_hilbert {
                h_vector = Some(artinian_h_vector_with(&fp, self.exec)?);
            }
            let entry = CacheEntry {
                config: record.clone(),
                trials: c.trials,
                staircase: staircase.clone(),
                h_vector: h_vector.clone(),
            };
            self.cache.put(&key, &entry)?;
        }
        Ok(GinCell { m, record, staircase, h_vector })
    }

    pub fn gin_cells(&self, ms: Vec<u32>, oracle: bool, hilbert: bool) -> Result<Vec<GinCell>> {
        self.exec.try_map(ms, |m| self.gin_cell(m, oracle, hilbert))
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum Certificate {
    Checked(ShapeCertificate),
    Unavailable(&'static str),
}

#[derive(Serialize)]
struct Provenance<'a> {
    prime: u32,
    r: u32,
    m: u32,
    seed: u64,
    t_values: &'a [u32],
    trials: u32,
    method: &'static str,
    verdict: &'static str,
}

#[derive(Serialize)]
struct GinReport<'a> {
    alpha: u32,
    lambdas: &'a [u32],
    generators: Vec<String>,
    h_vector: Option<&'a [u32]>,
    certificate: Certificate,
    provenance: Provenance<'a>,
}

fn gin(session: &Session, method: GinMethod) -> Result<Outcome> {
    let cfg = session.cfg;
    let (r, m) = (cfg.r, cfg.m_max);
    let oracle = method != GinMethod::Hilbert;
    let hilbert = method != GinMethod::Oracle;
    let cell = session.gin_cell(m, oracle, hilbert)?;
    let from_h = cell.h_vector.as_deref().map(staircase_from_hilbert).transpose()?;
    let (staircase, verdict, method_name) = match (&cell.staircase, &from_h) {
        (Some(a), Some(b)) => (a, if a == b { "both-agree" } else { "both-disagree" }, "both"),
        (Some(a), None) => (a, "oracle-only", "oracle"),
        (None, Some(b)) => (b, "hilbert-only", "hilbert"),
        (None, None) => unreachable!("at least one route runs"),
    };
    let certificate = if closed_form_supported(r, m) {
        Certificate::Checked(shape_certificate(staircase, r, m)?)
    } else {
        Certificate::Unavailable("no closed-form certificate")
    };
    let certified = !matches!(&certificate, Certificate::Checked(c) if !c.pass);
    let report = GinReport {
        alpha: staircase.alpha(),
        lambdas: staircase.lambdas(),
        generators: staircase.generators().iter().map(ToString::to_string).collect(),
        h_vector: cell.h_vector.as_deref(),
        certificate,
        provenance: Provenance {
            prime: cell.record.prime,
            r,
            m,
            seed: cell.record.seed,
            t_values: &cell.record.t_values,
            trials: cfg.trials,
            method: method_name,
            verdict,
        },
    };
    let mut out = Outcome { success: verdict != "both-disagree" && certified, ..Outcome::default() };
    let stem = format!("gin_r{r}_m{m}");
    if cfg.wants(Format::Json) {
        let path = cfg.out_dir.join(format!("{stem}.json"));
        write_json(&path, &report)?;
        out.written.push(path);
    }
    if cfg.wants(Format::Csv) {
        let path = cfg.out_dir.join(format!("{stem}.csv"));
        write_atomic(&path, staircase_csv(staircase).as_bytes())?;
        out.written.push(path);
    }
    out.lines.push(format!("alpha={} lambdas={:?} verdict={verdict}", staircase.alpha(), staircase.lambdas()));
    if !certified {
        out.lines.push("shape certificate failed".into());
    }
    Ok(out)
}

#[derive(Serialize)]
struct ResolveReport<'a> {
    r: u32,
    m: u32,
    method: &'static str,
    #[serde(flatten)]
    table: &'a BettiTable,
    initial_degree: u32,
    top_syzygy_degree: u32,
    verdict: &'static str,
}

fn resolve(cfg: &RunConfig, method: ResolveMethod) -> Result<Outcome> {
    let (r, m) = (cfg.r, cfg.m_max);
    let closed = match method {
        ResolveMethod::Recursion => None,
        _ => Some(closed_form_resolution(r, m)?),
    };
    let recursion = match method {
        ResolveMethod::Closed => None,
        _ => Some(catalisano_resolve(r, m)?),
    };
    let (table, verdict, name) = match (&closed, &recursion) {
        (Some(a), Some(b)) => (a, if a == b { "equal" } else { "differ" }, "both"),
        (Some(a), None) => (a, "closed-only", "closed"),
        (None, Some(b)) => (b, "recursion-only", "recursion"),
        (None, None) => unreachable!("at least one route runs"),
    };
    let (d, u) = extremal_shifts(table)?;
    let report = ResolveReport { r, m, method: name, table, initial_degree: d, top_syzygy_degree: u, verdict };
    let mut out = Outcome { success: verdict != "differ", ..Outcome::default() };
    if cfg.wants(Format::Json) {
        let path = cfg.out_dir.join(format!("betti_r{r}_m{m}.json"));
        write_json(&path, &report)?;
        out.written.push(path);
    }
    out.lines.push(format!("F0 {:?}", table.f0_list()));
    out.lines.push(format!("F1 {:?}", table.f1_list()));
    out.lines.push(format!("D={d} U={u} verdict={verdict}"));
    Ok(out)
}

fn limit(session: &Session, certify: bool) -> Result<Outcome> {
    let cfg = session.cfg;
    let r = cfg.r;
    let ms: Vec<u32> = (1..=cfg.m_max).filter(|&m| !certify || closed_form_supported(r, m)).collect();
    if ms.is_empty() {
        bail!("no multiplicity up to {} has a closed-form certificate for r={r}", cfg.m_max);
    }
    let cells = session.gin_cells(ms, true, false)?;
    let staircases: Vec<(u32, GinStaircase)> = cells.iter().map(|c| (c.m, c.staircase().clone())).collect();
    let mut out = Outcome { success: true, ..Outcome::default() };
    if certify {
        for (m, s) in &staircases {
            let cert = shape_certificate(s, r, *m)?;
            if !cert.pass {
                out.success = false;
                out.lines.push(format!(
                    "m={m}: certificate failed, alpha={} (expected {}), lambda0={} (expected {})",
                    cert.alpha, cert.predicted_alpha, cert.lambda0, cert.predicted_lambda0
                ));
            }
        }
    }
    let rows = convergence_report(r, &staircases)?;
    let csv = convergence_csv(&rows);
    if cfg.wants(Format::Csv) {
        let path = cfg.out_dir.join(format!("convergence_r{r}.csv"));
        write_atomic(&path, csv.as_bytes())?;
        out.written.push(path);
    }
    if cfg.wants(Format::Svg) {
        let path = cfg.out_dir.join(format!("limit_r{r}.svg"));
        write_atomic(&path, limit_svg(r, &staircases, &limit_shape(r)?).as_bytes())?;
        out.written.push(path);
    }
    out.lines.extend(csv.lines().map(str::to_string));
    Ok(out)
}
