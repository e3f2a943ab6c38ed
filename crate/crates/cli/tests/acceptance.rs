//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact except the SVG golden file, which is
//! compared after rounding coordinates to one decimal.

use std::path::Path;
use std::process::ExitCode;

use clap::Parser;

use conicgin::fatpoints::hilbert_function;
use conicgin::ginlab::{artinian_h_vector, generic_gin, product_contained, staircase_from_hilbert};
use conicgin::monomials::is_strongly_stable;
use conicgin::polytope::{distance, gamma_product_check, limit_shape, scaled_intercepts};
use conicgin::resolutions::{
    catalisano_resolve, closed_form_resolution, consecutive_cancellation_reachable, extremal_shifts, hf_from_betti,
    hilbert_burch_of_gin, predicted_extremal_shifts,
};
use conicgin::{FatPointConfig, GinStaircase, PrimeField, Rational};
use conicgin_cli::{run, Cli};

const PRIMES: [u32; 2] = [32003, 65521];
const CELLS: [(u32, u32); 6] = [(3, 2), (4, 1), (4, 2), (5, 2), (6, 1), (6, 2)];

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn config(r: u32, m: u32, prime: u32) -> FatPointConfig {
    FatPointConfig::on_conic(r, m, 0, PrimeField::new(prime).unwrap()).unwrap()
}

fn gin(r: u32, m: u32) -> Result<GinStaircase, String> {
    generic_gin(&config(r, m, 32003), 3, 0).map_err(|e| format!("gin r={r} m={m}: {e}"))
}

fn resolution_grid() -> Vec<(u32, u32)> {
    let mut grid: Vec<(u32, u32)> = [4, 6, 8].iter().flat_map(|&r| (1..=6).map(move |m| (r, m))).collect();
    grid.extend([5, 7].iter().flat_map(|&r| [2, 4, 6].map(|m| (r, m))));
    grid
}

fn recursion_matches_closed_form() -> Check {
    let grid = resolution_grid();
    for &(r, m) in &grid {
        let rec = catalisano_resolve(r, m).map_err(|e| e.to_string())?;
        let closed = closed_form_resolution(r, m).map_err(|e| e.to_string())?;
        ensure(rec == closed, || format!("r={r} m={m}: {rec:?} vs {closed:?}"))?;
    }
    Ok(format!("{} cells", grid.len()))
}

fn extremal_shift_prediction() -> Check {
    let mut grid = resolution_grid();
    grid.extend([2, 4, 6, 8].map(|m| (3, m)));
    for &(r, m) in &grid {
        let table = closed_form_resolution(r, m).map_err(|e| e.to_string())?;
        let got = extremal_shifts(&table).map_err(|e| e.to_string())?;
        let want = if r == 3 { (3 * m / 2, 2 * m + 1) } else { (2 * m, r * m / 2 + 2) };
        ensure(got == want, || format!("r={r} m={m}: {got:?} vs {want:?}"))?;
        ensure(predicted_extremal_shifts(r, m) == Ok(want), || format!("prediction r={r} m={m}"))?;
    }
    Ok(format!("{} cells", grid.len()))
}

fn oracle_hilbert_agreement() -> Check {
    let mut count = 0;
    for prime in PRIMES {
        for (r, m) in CELLS {
            let table = closed_form_resolution(r, m).map_err(|e| e.to_string())?;
            let cfg = config(r, m, prime);
            for d in 0..=(r * m).div_ceil(2) + 3 {
                let oracle = hilbert_function(&cfg, d).map_err(|e| e.to_string())? as i64;
                let formula = hf_from_betti(&table, d);
                ensure(oracle == formula, || format!("p={prime} r={r} m={m} d={d}: {oracle} vs {formula}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} degrees over primes {PRIMES:?}"))
}

fn gin_structure() -> Check {
    for (r, m) in CELLS {
        let g = gin(r, m)?;
        let gens = g.generators();
        let (d, u) = predicted_extremal_shifts(r, m).map_err(|e| e.to_string())?;
        ensure(is_strongly_stable(&gens), || format!("r={r} m={m}: not strongly stable"))?;
        ensure(g.lambdas().windows(2).all(|w| w[0] > w[1]), || format!("r={r} m={m}: lambdas not decreasing"))?;
        ensure(gens.iter().all(|x| x.z == 0), || format!("r={r} m={m}: z in generators"))?;
        ensure(g.alpha() == d && g.lambda0() == u - 1, || {
            format!("r={r} m={m}: (alpha, lambda0) = ({}, {}), expected ({d}, {})", g.alpha(), g.lambda0(), u - 1)
        })?;
        ensure(g.colength() == r * m * (m + 1) / 2, || format!("r={r} m={m}: colength {}", g.colength()))?;
    }
    Ok(format!("{} cells", CELLS.len()))
}

fn two_route_gin() -> Check {
    for (r, m) in CELLS {
        let oracle = gin(r, m)?;
        let h = artinian_h_vector(&config(r, m, 32003)).map_err(|e| e.to_string())?;
        let other = staircase_from_hilbert(&h).map_err(|e| e.to_string())?;
        ensure(oracle == other, || format!("r={r} m={m}: {oracle:?} vs {other:?}"))?;
    }
    Ok(format!("{} cells", CELLS.len()))
}

fn cancellation() -> Check {
    let mut moves_total = 0;
    for (r, m) in CELLS {
        let target = closed_form_resolution(r, m).map_err(|e| e.to_string())?;
        let (d, u) = extremal_shifts(&target).map_err(|e| e.to_string())?;
        let moves = consecutive_cancellation_reachable(&hilbert_burch_of_gin(&gin(r, m)?), &target)
            .ok_or_else(|| format!("r={r} m={m}: not reachable"))?;
        ensure(moves.iter().all(|&v| v != d && v != u), || format!("r={r} m={m}: moves {moves:?} hit D or U"))?;
        moves_total += moves.len();
    }
    Ok(format!("{} cells, {moves_total} cancellations", CELLS.len()))
}

fn convergence() -> Check {
    let q = |a: i64, b: i64| Rational::new(a, b);
    let mut cases: Vec<(u32, u32, (Rational, Rational))> = Vec::new();
    for r in [4u32, 6] {
        cases.extend((1..=6).map(|m| (r, m, (q(2, 1), q(r as i64, 2) + q(1, m as i64)))));
    }
    cases.extend([2, 4, 6].map(|m| (5, m, (q(2, 1), q(5, 2) + q(1, m as i64)))));
    cases.extend([2, 4, 6].map(|m| (3, m, (q(3, 2), q(2, 1)))));
    cases.extend((1..=4).map(|m| (2, m, (q(1, 1), q(2, 1)))));
    for &(r, m, want) in &cases {
        let got = scaled_intercepts(&gin(r, m)?, m);
        ensure(got == want, || format!("r={r} m={m}: intercepts {got:?}, expected {want:?}"))?;
        let limit = limit_shape(r).map_err(|e| e.to_string())?;
        if r >= 4 {
            let dev = (distance(got.0, limit.gamma1), distance(got.1, limit.gamma2));
            ensure(dev == (q(0, 1), q(1, m as i64)), || format!("r={r} m={m}: deviation {dev:?}"))?;
        }
    }
    for r in 2..=8 {
        let limit = limit_shape(r).map_err(|e| e.to_string())?;
        ensure(gamma_product_check(&limit, r), || format!("r={r}: gamma product"))?;
    }
    let two = limit_shape(2).map_err(|e| e.to_string())?;
    ensure((two.gamma1, two.gamma2) == (q(1, 1), q(2, 1)), || "r=2 limit".into())?;
    Ok(format!("{} cells", cases.len()))
}

fn attr(tag: &str, name: &str) -> Option<f64> {
    let key = format!("{name}=\"");
    let start = tag.find(&key)? + key.len();
    let end = start + tag[start..].find('"')?;
    tag[start..end].parse().ok()
}

/// Replaces every decimal number with its value rounded to one place.
fn rounded(svg: &str) -> String {
    let mut out = String::new();
    let mut num = String::new();
    let flush = |num: &mut String, out: &mut String| {
        if !num.is_empty() {
            match num.parse::<f64>() {
                Ok(v) if num.contains('.') => out.push_str(&format!("{v:.1}")),
                _ => out.push_str(num),
            }
            num.clear();
        }
    };
    for c in svg.chars() {
        if c.is_ascii_digit() || (c == '.' && !num.is_empty()) {
            num.push(c);
        } else {
            flush(&mut num, &mut out);
            out.push(c);
        }
    }
    flush(&mut num, &mut out);
    out
}

fn figure() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().to_str().unwrap();
    let cli = Cli::try_parse_from(["conicgin", "limit", "--r", "6", "--m-max", "4", "--out-dir", out])
        .map_err(|e| e.to_string())?;
    run(&cli).map_err(|e| e.to_string())?;
    let svg = std::fs::read_to_string(dir.path().join("limit_r6.svg")).map_err(|e| e.to_string())?;
    let root = svg.lines().find(|l| l.starts_with("<svg")).ok_or("no svg root")?;
    let (ox, oy, unit) = (
        attr(root, "data-origin-x").ok_or("no data-origin-x")?,
        attr(root, "data-origin-y").ok_or("no data-origin-y")?,
        attr(root, "data-unit").ok_or("no data-unit")?,
    );
    let heavy = svg.lines().find(|l| l.contains(r#"class="limit""#)).ok_or("no heavy line")?;
    ensure(heavy.contains(r#"stroke-width="3""#), || "limit line is not heavy".into())?;
    let plane =
        |px: f64, py: f64| (((px - ox) / unit * 100.0).round() / 100.0, ((oy - py) / unit * 100.0).round() / 100.0);
    let p1 = plane(attr(heavy, "x1").unwrap(), attr(heavy, "y1").unwrap());
    let p2 = plane(attr(heavy, "x2").unwrap(), attr(heavy, "y2").unwrap());
    ensure(p1 == (2.0, 0.0) && p2 == (0.0, 3.0), || format!("heavy line {p1:?} to {p2:?}"))?;
    let golden_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/limit_r6_m4.svg");
    let golden = std::fs::read_to_string(&golden_path).map_err(|e| e.to_string())?;
    ensure(rounded(&svg) == rounded(&golden), || "differs from golden file".into())?;
    Ok(format!("heavy line {p1:?} to {p2:?}, golden file matches"))
}

fn graded_system() -> Check {
    for r in 3..=6 {
        let (g1, g2) = (gin(r, 1)?, gin(r, 2)?);
        ensure(product_contained(&g1, &g1, &g2), || format!("r={r}"))?;
    }
    let r4 = (gin(4, 1)?, gin(4, 2)?);
    ensure(
        r4.0 == GinStaircase::new(2, vec![3, 1]).unwrap() && r4.1 == GinStaircase::new(4, vec![5, 4, 2, 1]).unwrap(),
        || format!("r=4 gins {r4:?}"),
    )?;
    Ok("r in 3..=6".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("recursion equals closed form", recursion_matches_closed_form),
        ("extremal shifts D(m), U(m)", extremal_shift_prediction),
        ("oracle Hilbert function agreement", oracle_hilbert_agreement),
        ("gin staircase structure", gin_structure),
        ("two-route gin equality", two_route_gin),
        ("consecutive cancellation", cancellation),
        ("convergence to the limiting shape", convergence),
        ("limit figure for r=6, m<=4", figure),
        ("graded system containment", graded_system),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({why}; {secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
