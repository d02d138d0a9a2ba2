use std::time::{Instant, SystemTime, UNIX_EPOCH};

use qgrass_core::grassmann::{
    build_graph, intersection_numbers, krein_qpoly_check, spectral_system, spectrum_export, tmodule_intersection_numbers,
    validate_parameters, GraphContext, GraphOptions, IntersectionNumbers, SpectralSystem, TModuleParams,
};
use qgrass_core::halgebra::{alpha_dominant_multiplicity, build_poset_matrices, poset_size, type_to_parameters, ModuleType};
use qgrass_core::nucleus::{
    alpha_family, boundary_case_report, compute_nucleus, connectivity_check, gamma_components, induced_connected,
    verify_actions, verify_bases, AlphaFamily, NucleusData,
};
use qgrass_core::projgeom::{geometry_census, CanonicalSubspace, GeometryContext, GeometryOptions};
use qgrass_core::qfield::{verify_q_identities, FieldContext};
use qgrass_core::{BigInt, BigRational, CheckList, Error, Result, Verdict};

use crate::config::{RunConfig, Suite};
use crate::report::{
    ActionTheorems, BasesSummary, Connectivity, Failure, GammaSummary, Params, Report, RunInfo, SuiteReport,
};

/// Shared intermediate results, each computed on first use.
struct Pipeline<'a> {
    config: &'a RunConfig,
    field: FieldContext,
    x: Option<CanonicalSubspace>,
    full_geometry: Option<GeometryContext>,
    graph: Option<GraphContext>,
    ints: Option<IntersectionNumbers>,
    spectral: Option<SpectralSystem>,
    nucleus: Option<NucleusData>,
    family: Option<AlphaFamily>,
}

impl<'a> Pipeline<'a> {
    fn geometry_options(&self) -> GeometryOptions {
        GeometryOptions {
            table_cap: self.config.max_vertices,
            cache_dir: self.config.cache_dir.clone(),
        }
    }

    fn full_geometry(&mut self) -> Result<&GeometryContext> {
        if self.full_geometry.is_none() {
            let c = self.config;
            let size = poset_size(c.q, c.n);
            if size > BigInt::from(c.max_poset) {
                return Err(Error::SizeCapExceeded {
                    what: format!("subspace lattice of F_{}^{}", c.q, c.n),
                    projected: size,
                    cap: c.max_poset,
                });
            }
            let opts = self.geometry_options();
            self.full_geometry = Some(GeometryContext::build_full(self.field.clone(), c.n, c.d, self.x.clone(), &opts)?);
        }
        Ok(self.full_geometry.as_ref().unwrap())
    }

    fn graph(&mut self) -> Result<&GraphContext> {
        if self.graph.is_none() {
            let c = self.config;
            let gc = match &self.full_geometry {
                Some(geo) => GraphContext::from_geometry(geo.clone(), GraphOptions::default().seed)?,
                None => {
                    let opts = GraphOptions {
                        max_vertices: c.max_vertices,
                        cache_dir: c.cache_dir.clone(),
                        x: self.x.clone(),
                        ..GraphOptions::default()
                    };
                    build_graph(c.q, c.n, c.d, &opts)?
                }
            };
            self.graph = Some(gc);
        }
        Ok(self.graph.as_ref().unwrap())
    }

    fn ints(&mut self) -> Result<&IntersectionNumbers> {
        if self.ints.is_none() {
            let ints = intersection_numbers(self.graph()?)?;
            self.ints = Some(ints);
        }
        Ok(self.ints.as_ref().unwrap())
    }

    fn spectral(&mut self) -> Result<&SpectralSystem> {
        if self.spectral.is_none() {
            let ss = spectral_system(self.graph()?)?;
            self.spectral = Some(ss);
        }
        Ok(self.spectral.as_ref().unwrap())
    }

    fn nucleus(&mut self) -> Result<&NucleusData> {
        if self.nucleus.is_none() {
            let nd = compute_nucleus(self.spectral()?)?;
            self.nucleus = Some(nd);
        }
        Ok(self.nucleus.as_ref().unwrap())
    }

    fn family(&mut self) -> Result<&AlphaFamily> {
        if self.family.is_none() {
            let fam = alpha_family(self.graph()?);
            self.family = Some(fam);
        }
        Ok(self.family.as_ref().unwrap())
    }
}

fn primary_module_checks(gc: &GraphContext, ints: &IntersectionNumbers) -> Result<CheckList> {
    let (q, n, d) = (gc.q(), gc.n(), gc.d());
    let mut checks = CheckList::new();
    let mut mismatch = None;
    for i in 0..=d {
        let (a, b, c) = tmodule_intersection_numbers(q, n, d, TModuleParams::primary(d), i as i64)?;
        let graph = [&ints.a[i], &ints.b[i], &ints.c[i]].map(|v| BigRational::from_integer(v.clone()));
        if [a, b, c] != graph {
            mismatch.get_or_insert(i);
        }
    }
    checks.expect(
        "module (0,0,D,0) has the graph's a_i, b_i, c_i",
        mismatch.is_none(),
        mismatch.map_or_else(String::new, |i| format!("differs at i={i}")),
    );
    Ok(checks)
}

fn run_suite(p: &mut Pipeline, suite: Suite, report: &mut Report) -> Result<CheckList> {
    let c = p.config;
    let boundary = report.boundary;
    let mut checks = CheckList::new();
    match suite {
        Suite::Geometry => {
            let census = geometry_census(p.full_geometry()?)?;
            checks.extend(census.checks);
            checks.extend(p.graph()?.checks().clone());
        }
        Suite::Spectrum => {
            let ints = p.ints()?.clone();
            let gc = p.graph()?;
            report.vertices = Some(gc.n_vertices());
            checks.extend(primary_module_checks(gc, &ints)?);
            checks.extend(ints.checks.clone());
            let ss = p.spectral()?;
            checks.extend(ss.checks().clone());
            report.spectrum = Some(spectrum_export(ss, &ints));
        }
        Suite::Krein => checks.extend(krein_qpoly_check(p.spectral()?)?.checks),
        Suite::Nucleus => {
            let nd = p.nucleus()?;
            checks.extend(nd.checks().clone());
            report.nucleus_dims = Some(nd.dims.clone());
            report.mult_r = Some(nd.mult_r.clone());
        }
        Suite::Actions => {
            p.family()?;
            p.spectral()?;
            let adjacency = p.graph()?.adjacency_matrix();
            let r = verify_actions(&adjacency, p.spectral.as_ref().unwrap(), p.family.as_ref().unwrap())?;
            checks.extend(r.checks.clone());
            let shown = |v: Verdict| if boundary { Verdict::Observed } else { v };
            report.action_theorems = Some(ActionTheorems {
                a_vee: shown(r.a_vee.verdict),
                a_nuc: shown(r.a_nuc.verdict),
                astar_nuc: shown(r.astar_nuc.verdict),
                astar_vee: shown(r.astar_vee.verdict),
            });
            report.action_residuals = Some(ActionTheorems {
                a_vee: r.a_vee,
                a_nuc: r.a_nuc,
                astar_nuc: r.astar_nuc,
                astar_vee: r.astar_vee,
            });
        }
        Suite::Bases => {
            p.nucleus()?;
            p.family()?;
            let (nd, fam) = (p.nucleus.as_ref().unwrap(), p.family.as_ref().unwrap());
            checks.extend(fam.checks().clone());
            let r = verify_bases(nd, fam, c.q)?;
            checks.extend(r.checks.clone());
            let verdict = |ok: bool| match (boundary, ok) {
                (true, _) => Verdict::Observed,
                (false, true) => Verdict::Pass,
                (false, false) => Verdict::Fail,
            };
            report.bases = Some(BasesSummary {
                vee: verdict(r.vee.is_basis),
                nuc: verdict(r.nuc.is_basis),
                transitions_inverse: r.transitions_inverse,
            });
        }
        Suite::Gamma => {
            p.family()?;
            let gc = p.graph.as_ref().unwrap();
            let fam = p.family.as_ref().unwrap();
            let mut summary = Vec::new();
            for i in 0..=c.d {
                let g = gamma_components(gc, fam, i);
                summary.push(GammaSummary {
                    i,
                    count: g.count(),
                    sizes: g.sizes(),
                });
                checks.extend(g.checks);
            }
            let conn = connectivity_check(gc, fam);
            let far = gc.sphere(c.d);
            report.connectivity = Some(Connectivity {
                far_sphere_size: far.len(),
                far_sphere_connected: induced_connected(gc, &far),
                every_g_alpha_connected: (0..fam.len()).all(|a| induced_connected(gc, &fam.g_sets[a])),
            });
            checks.extend(conn);
            report.gamma_components = Some(summary);
        }
        Suite::Halgebra => {
            let geo = if poset_size(c.q, c.n) <= BigInt::from(c.max_poset) {
                p.full_geometry()?.clone()
            } else {
                let dims: Vec<usize> = (c.d - 1..=(c.d + 1).min(c.n)).collect();
                GeometryContext::build(p.field.clone(), c.n, c.d, p.x.clone(), &dims, &p.geometry_options())?
            };
            let set = build_poset_matrices(&geo, c.max_poset)?;
            checks.extend(set.checks().clone());
            let types = ModuleType::all(c.n, c.d);
            let bad: Vec<_> = types.iter().filter(|t| type_to_parameters(**t, c.n, c.d).is_err()).collect();
            checks.expect(
                format!("all {} module types map to admissible (r,t,d,e)", types.len()),
                bad.is_empty(),
                format!("{bad:?}"),
            );
            let mult = p.nucleus()?.mult_r.clone();
            let mut mu = CheckList::new();
            for (alpha, m) in mult.iter().enumerate() {
                mu.expect_eq(
                    format!("μ_{alpha} = mult_{alpha} of the nucleus"),
                    alpha_dominant_multiplicity(alpha as i64, c.q, c.d),
                    BigInt::from(*m),
                );
            }
            checks.extend(if boundary { mu.into_observations() } else { mu });
        }
        Suite::Identities => {
            let r = verify_q_identities(c.identities_lmax, c.q)?;
            for v in r.verdicts() {
                checks.expect(
                    format!("{} for ℓ ≤ {} ({} cases)", v.name, r.l_max, v.cases_checked),
                    v.passed(),
                    v.counterexample.clone().unwrap_or_default(),
                );
            }
            report.identities = Some(vec![r]);
        }
        Suite::Boundary => {
            if boundary {
                let b = boundary_case_report(p.graph()?)?;
                checks.extend(b.checks.clone());
                if report.nucleus_dims.is_none() {
                    report.nucleus_dims = Some(b.nucleus_dims.clone());
                    report.mult_r = Some(b.mult_r.clone());
                }
                report.boundary_report = Some(b);
            } else {
                checks.observe("boundary mode", "N = 2D", format!("N = {} > 2D = {}; not applicable", c.n, 2 * c.d));
            }
        }
        Suite::All => unreachable!("expanded before running"),
    }
    if boundary && suite.needs_strict_bound() {
        checks = checks.into_observations();
    }
    Ok(checks)
}

/// Runs the selected suites in dependency order and assembles the report.
pub fn run(config: &RunConfig) -> Result<Report> {
    let start = Instant::now();
    let field = config.validate()?;
    validate_parameters(config.q, config.n, config.d)?;
    let x = config.base_vertex(&field)?;
    let boundary = config.n == 2 * config.d;
    let mut report = Report {
        params: Params {
            q: config.q,
            n: config.n,
            d: config.d,
        },
        config: config.clone(),
        boundary,
        suites: Vec::new(),
        vertices: None,
        spectrum: None,
        nucleus_dims: None,
        mult_r: None,
        gamma_components: None,
        connectivity: None,
        action_theorems: None,
        action_residuals: None,
        bases: None,
        identities: None,
        boundary_report: None,
        failures: Vec::new(),
        run: RunInfo {
            generated_at: 0,
            elapsed_ms: 0,
            suite_ms: Vec::new(),
        },
    };
    let mut p = Pipeline {
        config,
        field,
        x,
        full_geometry: None,
        graph: None,
        ints: None,
        spectral: None,
        nucleus: None,
        family: None,
    };
    // the graph shares the full lattice's tables when both are needed
    if config.has(Suite::Geometry) || (config.has(Suite::Halgebra) && poset_size(config.q, config.n) <= BigInt::from(config.max_poset)) {
        p.full_geometry()?;
    }
    for suite in Suite::ORDER.into_iter().filter(|s| config.has(*s)) {
        let t = Instant::now();
        let checks = run_suite(&mut p, suite, &mut report)?;
        let sr = SuiteReport::new(suite.name(), checks);
        report.failures.extend(sr.checks.failures().map(|check| Failure {
            suite: sr.name.clone(),
            check: check.clone(),
        }));
        report.suites.push(sr);
        report.run.suite_ms.push((suite.name().into(), t.elapsed().as_millis()));
    }
    report.run.elapsed_ms = start.elapsed().as_millis();
    report.run.generated_at = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
    Ok(report)
}

