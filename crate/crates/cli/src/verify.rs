//! `verify`: every check family over `m = 1..=m_max` for one `r`.

use anyhow::Result;
use serde::Serialize;

use conicgin::ginlab::{product_contained, shape_certificate, staircase_from_hilbert};
use conicgin::monomials::is_strongly_stable;
use conicgin::polytope::{gamma_product_check, limit_shape, scaled_intercepts};
use conicgin::resolutions::{
    catalisano_resolve, closed_form_resolution, closed_form_supported, consecutive_cancellation_reachable,
    extremal_shifts, hf_from_betti, hilbert_burch_of_gin, predicted_extremal_shifts,
};
use conicgin::Rational;

use crate::args::Format;
use crate::commands::{GinCell, Outcome, Session};
use crate::output::write_json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub name: &'static str,
    pub status: Status,
    pub checked: Vec<u32>,
    pub skipped: Vec<u32>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub r: u32,
    pub m_max: u32,
    pub prime: u32,
    pub seed: u64,
    pub trials: u32,
    pub families: Vec<FamilyReport>,
    pub all_pass: bool,
}

struct Family {
    name: &'static str,
    checked: Vec<u32>,
    skipped: Vec<u32>,
    failures: Vec<String>,
}

impl Family {
    fn new(name: &'static str) -> Self {
        Family { name, checked: Vec::new(), skipped: Vec::new(), failures: Vec::new() }
    }

    fn check(&mut self, m: u32, ok: bool, detail: impl FnOnce() -> String) {
        if !self.checked.contains(&m) {
            self.checked.push(m);
        }
        if !ok {
            self.failures.push(format!("m={m}: {}", detail()));
        }
    }

    fn skip(&mut self, m: u32) {
        self.skipped.push(m);
    }

    fn finish(self) -> FamilyReport {
        let status = match (self.failures.is_empty(), self.checked.is_empty()) {
            (false, _) => Status::Fail,
            (true, true) => Status::Skip,
            (true, false) => Status::Pass,
        };
        FamilyReport { name: self.name, status, checked: self.checked, skipped: self.skipped, failures: self.failures }
    }
}

/// `dim I_d` recovered from the h-vector of `R/I`.
fn ideal_dim(h: &[u32], d: u32) -> i64 {
    let quotient: i64 = h.iter().take(d as usize + 1).map(|&v| v as i64).sum();
    let ambient = (d as i64 + 2) * (d as i64 + 1) / 2;
    ambient - quotient
}

fn show(t: &conicgin::BettiTable) -> String {
    format!("F0={:?} F1={:?}", t.f0_list(), t.f1_list())
}

pub fn run_checks(r: u32, cells: &[GinCell]) -> Result<Vec<FamilyReport>> {
    let mut recursion = Family::new("recursion_vs_closed_form");
    let mut shifts = Family::new("extremal_shifts");
    let mut hilbert = Family::new("hilbert_function");
    let mut structure = Family::new("gin_structure");
    let mut routes = Family::new("two_route_gin");
    let mut cancel = Family::new("cancellation");
    let mut convergence = Family::new("convergence");
    let mut graded = Family::new("graded_containment");

    let limit = limit_shape(r)?;
    for cell in cells {
        let (m, gin, h) = (cell.m, cell.staircase(), cell.h_vector());
        let supported = closed_form_supported(r, m);
        let closed = if supported { Some(closed_form_resolution(r, m)?) } else { None };

        match &closed {
            Some(c) if r >= 4 => {
                let rec = catalisano_resolve(r, m)?;
                recursion.check(m, rec == *c, || format!("recursion {} vs closed {}", show(&rec), show(c)));
            }
            _ => recursion.skip(m),
        }

        if let Some(c) = &closed {
            let got = extremal_shifts(c)?;
            let want = predicted_extremal_shifts(r, m)?;
            shifts.check(m, got == want, || format!("(D, U) = {got:?}, expected {want:?}"));
            for d in 0..=(r * m).div_ceil(2) + 3 {
                let (a, b) = (hf_from_betti(c, d), ideal_dim(h, d));
                hilbert.check(m, a == b, || format!("degree {d}: table gives {a}, points give {b}"));
            }
            let moves = consecutive_cancellation_reachable(&hilbert_burch_of_gin(gin), c);
            let (dd, uu) = got;
            let ok = moves.as_ref().is_some_and(|v| v.iter().all(|&s| s != dd && s != uu));
            cancel.check(m, ok, || format!("cancellation moves {moves:?} with D={dd}, U={uu}"));
        } else {
            shifts.skip(m);
            hilbert.skip(m);
            cancel.skip(m);
        }

        let colength = r * m * (m + 1) / 2;
        structure.check(m, is_strongly_stable(&gin.generators()), || "not strongly stable".into());
        structure.check(m, gin.colength() == colength, || format!("colength {} != {colength}", gin.colength()));
        if supported {
            let cert = shape_certificate(gin, r, m)?;
            structure.check(m, cert.pass, || format!("{cert:?}"));
        }

        let other = staircase_from_hilbert(h)?;
        routes.check(m, other == *gin, || format!("oracle {:?} vs h-vector {:?}", gin.lambdas(), other.lambdas()));

        let (g1, g2) = scaled_intercepts(gin, m);
        let expected = match r {
            2 => Some((Rational::from_integer(1), Rational::from_integer(2))),
            3 if supported => Some((Rational::new(3, 2), Rational::from_integer(2))),
            _ if supported => {
                Some((Rational::from_integer(2), Rational::new(r as i64, 2) + Rational::new(1, m as i64)))
            }
            _ => None,
        };
        match expected {
            Some(want) => convergence
                .check(m, (g1, g2) == want, || format!("intercepts ({g1}, {g2}), expected ({}, {})", want.0, want.1)),
            None => convergence.skip(m),
        }
    }
    if !gamma_product_check(&limit, r) {
        convergence.failures.push(format!("gamma1*gamma2 = {} != {r}", limit.gamma1 * limit.gamma2));
    }

    for k in 2..=cells.len() as u32 {
        for i in 1..k {
            let (gi, gj, gk) = (
                cells[i as usize - 1].staircase(),
                cells[(k - i) as usize - 1].staircase(),
                cells[k as usize - 1].staircase(),
            );
            graded.check(k, product_contained(gi, gj, gk), || format!("gin({i}) * gin({}) not inside gin({k})", k - i));
        }
    }
    if cells.len() < 2 {
        graded.skip(1);
    }

    Ok([recursion, shifts, hilbert, structure, routes, cancel, convergence, graded]
        .into_iter()
        .map(Family::finish)
        .collect())
}

pub fn verify(session: &Session) -> Result<Outcome> {
    let cfg = session.cfg;
    let cells = session.gin_cells((1..=cfg.m_max).collect(), true, true)?;
    let families = run_checks(cfg.r, &cells)?;
    let all_pass = families.iter().all(|f| f.status != Status::Fail);
    let report = VerifyReport {
        r: cfg.r,
        m_max: cfg.m_max,
        prime: cfg.field.prime(),
        seed: cfg.seed,
        trials: cfg.trials,
        families,
        all_pass,
    };
    let mut out = Outcome { success: all_pass, ..Outcome::default() };
    for f in &report.families {
        let tag = match f.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        out.lines.push(format!("{tag} {} checked m={:?} skipped m={:?}", f.name, f.checked, f.skipped));
        out.lines.extend(f.failures.iter().map(|e| format!("    {e}")));
    }
    if cfg.wants(Format::Json) {
        let path = cfg.out_dir.join(format!("verify_r{}.json", cfg.r));
        write_json(&path, &report)?;
        out.written.push(path);
    }
    Ok(out)
}
