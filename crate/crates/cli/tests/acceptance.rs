//! Acceptance criteria, one line per criterion.

use std::time::{Duration, Instant};

use qgrass::report::Report;
use qgrass::{run, RunConfig, Suite};
use qgrass_core::grassmann::{tmodule_intersection_numbers, TModuleParams};
use qgrass_core::qfield::verify_q_identities;
use qgrass_core::Verdict;

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl Into<String>) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn check_passed(r: &Report, suite: &str, name: &str) -> Outcome {
    let s = r.suite(suite).ok_or(format!("suite {suite} missing"))?;
    let c = s.checks.iter().find(|c| c.name.starts_with(name)).ok_or(format!("check {name:?} missing"))?;
    ensure(c.verdict == Verdict::Pass, format!("{name}: expected {}, observed {}", c.expected, c.observed))
}

fn suite_passed(r: &Report, suite: &str) -> Outcome {
    let s = r.suite(suite).ok_or(format!("suite {suite} missing"))?;
    ensure(s.verdict == Verdict::Pass && s.failed == 0, format!("suite {suite}: {} failures", s.failed))
}

fn end_to_end(r: &Report, elapsed: Duration, vertices: usize, theta: &[&str], mult: &[usize]) -> Outcome {
    suite_passed(r, "geometry")?;
    suite_passed(r, "spectrum")?;
    ensure(r.vertices == Some(vertices), format!("|X| = {:?}", r.vertices))?;
    let sp = r.spectrum.as_ref().ok_or("no spectrum export")?;
    ensure(sp.intersection_numbers.k == theta[0], format!("k = {}", sp.intersection_numbers.k))?;
    check_passed(r, "spectrum", "k = q[D][N-D]")?;
    for i in 0..=2 {
        check_passed(r, "spectrum", &format!("b_{i} = q^(2i+1)[D-i][N-D-i]"))?;
        check_passed(r, "spectrum", &format!("c_{i} = [i]^2"))?;
    }
    ensure(sp.theta == theta, format!("θ = {:?}", sp.theta))?;
    ensure(sp.mult == mult, format!("m = {:?}", sp.mult))?;
    check_passed(r, "spectrum", "∏_i (A - θ_i I) = 0")?;
    ensure(elapsed <= Duration::from_secs(60), format!("took {elapsed:?}"))
}

fn nucleus_dims(r: &Report, dims: &[usize], mult: &[i64]) -> Outcome {
    suite_passed(r, "nucleus")?;
    ensure(r.nucleus_dims.as_deref() == Some(dims), format!("dims {:?}", r.nucleus_dims))?;
    ensure(r.mult_r.as_deref() == Some(mult), format!("mult {:?}", r.mult_r))?;
    check_passed(r, "nucleus", "dim N = Σ_i [D, i]_q")?;
    check_passed(r, "nucleus", "sum of N_i is direct")
}

fn actions(r: &Report, n_alpha: usize) -> Outcome {
    suite_passed(r, "actions")?;
    let res = r.action_residuals.as_ref().ok_or("no action residuals")?;
    for (name, a) in [("A_vee", &res.a_vee), ("A_nuc", &res.a_nuc), ("Astar_nuc", &res.astar_nuc), ("Astar_vee", &res.astar_vee)] {
        ensure(a.verdict == Verdict::Pass && a.checked == n_alpha, format!("{name}: nonzero at {:?}", a.nonzero_at))?;
    }
    Ok(())
}

fn gamma(r: &Report, far: usize) -> Outcome {
    suite_passed(r, "gamma")?;
    let g = r.gamma_components.as_ref().ok_or("no γ components")?;
    let counts: Vec<usize> = g.iter().map(|c| c.count).collect();
    ensure(counts == [1, 3, 1], format!("counts {counts:?}"))?;
    for i in 0..=2 {
        check_passed(r, "gamma", &format!("γ_{i}: components are exactly G_α"))?;
    }
    let conn = r.connectivity.as_ref().ok_or("no connectivity")?;
    ensure(conn.far_sphere_size == far && conn.far_sphere_connected, format!("Γ_D(x): {} vertices", conn.far_sphere_size))?;
    ensure(conn.every_g_alpha_connected, "some G_α disconnected")
}

fn bases(r: &Report) -> Outcome {
    suite_passed(r, "bases")?;
    let b = r.bases.as_ref().ok_or("no bases summary")?;
    ensure(b.vee == Verdict::Pass && b.nuc == Verdict::Pass, "families are not bases")?;
    ensure(b.transitions_inverse, "transition matrices not inverse")?;
    check_passed(r, "bases", "α^∨ = Σ_{α⊆β⊆x} β^N")?;
    check_passed(r, "bases", "α^N = Σ_{α⊆β⊆x}")
}

fn krein(r: &Report) -> Outcome {
    suite_passed(r, "krein")?;
    check_passed(r, "krein", "q^h_ij = 0 when one index exceeds")?;
    check_passed(r, "krein", "q^h_ij != 0 when one index equals")
}

fn identities() -> Outcome {
    let t = Instant::now();
    for q in [2, 3, 5] {
        let rep = verify_q_identities(12, q).map_err(|e| e.to_string())?;
        ensure(rep.all_passed(), format!("q={q}: {:?}", rep.verdicts().map(|v| v.counterexample.clone())))?;
    }
    ensure(t.elapsed() <= Duration::from_secs(1), format!("took {:?}", t.elapsed()))
}

fn halgebra(r: &Report) -> Outcome {
    suite_passed(r, "halgebra")?;
    for name in ["R_1 = L_1^T", "R_2 = L_2^T", "sum of E*_ij = I", "E*-shift relations", "dim E*_ij Ψ = |P_ij|", "μ_0 = mult_0", "μ_1 = mult_1"] {
        check_passed(r, "halgebra", name)?;
    }
    ensure(r.mult_r.as_deref() == Some(&[1, 2][..]), "μ differs from (1, 2)")
}

fn boundary() -> Outcome {
    let r = run(&RunConfig::new(2, 4, 2, &[Suite::Boundary])).map_err(|e| e.to_string())?;
    ensure(r.boundary, "run not flagged boundary")?;
    ensure(r.passed(), "boundary run reported failures")?;
    let b = r.boundary_report.as_ref().ok_or("no boundary report")?;
    ensure(b.nucleus_dims.len() == 3 && b.nucleus_dims[0] == 1, format!("dims {:?}", b.nucleus_dims))?;
    let all_observed = b.checks.iter().all(|c| c.verdict == Verdict::Observed);
    ensure(all_observed, "boundary mode asserted something")
}

fn primary_module(r: &Report) -> Outcome {
    check_passed(r, "spectrum", "module (0,0,D,0)")?;
    let ints = &r.spectrum.as_ref().ok_or("no spectrum export")?.intersection_numbers;
    for i in 0..=2 {
        let (a, b, c) = tmodule_intersection_numbers(2, 5, 2, TModuleParams::primary(2), i).map_err(|e| e.to_string())?;
        let i = i as usize;
        let got = [a.to_string(), b.to_string(), c.to_string()];
        let want = [ints.a[i].clone(), ints.b[i].clone(), ints.c[i].clone()];
        ensure(got == want, format!("i={i}: module {got:?}, graph {want:?}"))?;
    }
    Ok(())
}

fn timed_run(config: &RunConfig) -> Result<(Report, Duration), String> {
    let t = Instant::now();
    let r = run(config).map_err(|e| e.to_string())?;
    Ok((r, t.elapsed()))
}

fn main() {
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    match timed_run(&RunConfig::new(2, 5, 2, &[Suite::All])) {
        Ok((r, elapsed)) => {
            results.push((1, "J_2(5,2) end-to-end", end_to_end(&r, elapsed, 155, &["42", "11", "-3"], &[1, 30, 124])));
            results.push((2, "J_2(5,2) nucleus dimensions", nucleus_dims(&r, &[1, 3, 1], &[1, 2])));
            results.push((3, "J_2(5,2) action theorems", actions(&r, 5)));
            results.push((4, "J_2(5,2) γ-structure", gamma(&r, 112)));
            results.push((5, "both α-families are bases of N", bases(&r)));
            results.push((6, "Krein Q-polynomial pattern", krein(&r)));
            results.push((9, "H-algebra structure, q=2, N=5", halgebra(&r)));
            results.push((11, "T-module (0,0,D,0) intersection numbers", primary_module(&r)));
        }
        Err(e) => {
            for (k, name) in [(1, "J_2(5,2) run"), (2, ""), (3, ""), (4, ""), (5, ""), (6, ""), (9, ""), (11, "")] {
                results.push((k, name, Err(e.clone())));
            }
        }
    }
    let second = || -> Outcome {
        let suites = [Suite::Geometry, Suite::Spectrum, Suite::Nucleus, Suite::Actions, Suite::Bases, Suite::Gamma];
        let (r, elapsed) = timed_run(&RunConfig::new(2, 6, 2, &suites))?;
        end_to_end(&r, Duration::ZERO, 651, &["90", "27", "-3"], &[1, 62, 588]).map_err(|e| format!("J_2(6,2): {e}"))?;
        nucleus_dims(&r, &[1, 3, 1], &[1, 2])?;
        actions(&r, 5)?;
        gamma(&r, 560)?;
        bases(&r)?;
        ensure(elapsed <= Duration::from_secs(15 * 60), format!("J_2(6,2) took {elapsed:?}"))?;
        let (r, _) = timed_run(&RunConfig::new(3, 4, 1, &[Suite::Spectrum, Suite::Nucleus, Suite::Bases]))?;
        ensure(r.vertices == Some(40), format!("J_3(4,1): |X| = {:?}", r.vertices))?;
        suite_passed(&r, "nucleus")?;
        suite_passed(&r, "bases")?;
        ensure(r.nucleus_dims.as_deref() == Some(&[1, 1][..]), format!("J_3(4,1): dims {:?}", r.nucleus_dims))
    };
    results.push((7, "J_2(6,2) and J_3(4,1)", second()));
    results.push((8, "q-binomial identities, ℓ ≤ 12, q ∈ {2,3,5}", identities()));
    results.push((10, "boundary mode J_2(4,2)", boundary()));
    results.sort_by_key(|(k, _, _)| *k);

    let mut failed = 0;
    for (k, name, outcome) in &results {
        match outcome {
            Ok(()) => println!("criterion {k:>2}: PASS  {name}"),
            Err(e) => {
                failed += 1;
                println!("criterion {k:>2}: FAIL  {name}: {e}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
