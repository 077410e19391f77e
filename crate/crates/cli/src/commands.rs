use std::fs;
use std::path::Path;
use std::time::Duration;

use pentforge::catalog::Catalog;
use pentforge::constructors::{bose_pent3, expand_orbits, gdd_compose, parse_gdd, parse_orbit, parse_pbd, parse_sts, pbd_pent3};
use pentforge::graph::ComponentTag;
use pentforge::search::{cycle_types, PARTITION_MAX_N};
use pentforge::{
    build_deficiency, classify, complete_from_deficiency, count_olps, format, is_connected, known_spectrum,
    max_olps_bound, parameters, parse_design, parse_graph, pent2_count, serialize_design, verify_pentagonal, girth,
    Completion, Design, SearchBudget,
};

use crate::cli::{Build, CatalogCmd, Cli, Command, Pent2};
use crate::output::{yes_no, CliError, Report, EXIT_INVALID};

type Result<T> = std::result::Result<T, CliError>;

pub fn dispatch(cli: &Cli) -> Result<Report> {
    let verify = !cli.no_verify;
    match &cli.command {
        Command::Verify { file } => verify_file(file),
        Command::Analyze { file } => analyze(file),
        Command::Expand { file, out } => {
            let spec = parse_orbit(&read(file)?)?;
            emit(expand_orbits(&spec)?, out.as_deref(), verify)
        }
        Command::Build(Build::Bose { sts, drop, out }) => {
            let s = parse_sts(&read(sts)?)?;
            emit(bose_pent3(&s, *drop)?, out.as_deref(), verify)
        }
        Command::Build(Build::Pbd { pbd, drop, out }) => {
            let p = parse_pbd(&read(pbd)?)?;
            emit(pbd_pent3(&p, *drop)?, out.as_deref(), verify)
        }
        Command::Compose { gdd, parts, out } => {
            let g = parse_gdd(&read(gdd)?)?;
            let parts = parts.iter().enumerate().map(|(i, p)| Ok((i, load_design(p)?))).collect::<Result<Vec<_>>>()?;
            emit(gdd_compose(&g, &parts)?, out.as_deref(), verify)
        }
        Command::Pent2(Pent2::Count { r }) => pent2_count_cmd(*r),
        Command::Pent2(Pent2::Enumerate { r, outdir }) => pent2_enumerate_cmd(*r, outdir.as_deref(), verify),
        Command::Complete { graph, k, r, nodes, seconds, seed, out } => {
            complete(graph, *k, *r, *nodes, *seconds, *seed, out.as_deref(), verify)
        }
        Command::Catalog(CatalogCmd::List) => catalog_list(),
        Command::Catalog(CatalogCmd::VerifyAll) => catalog_verify_all(),
        Command::Spectrum { k, r } => spectrum(*k, *r),
        Command::Params { k, r } => params(*k, *r),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// A design file, or an orbit file expanded on the fly.
fn load_design(path: &Path) -> Result<Design> {
    let text = read(path)?;
    let kind = format::records(&text)?.into_iter().find(|r| r.key == "kind").map(|r| r.value.to_string());
    if kind.as_deref() == Some("orbit") {
        Ok(expand_orbits(&parse_orbit(&text)?)?)
    } else {
        Ok(parse_design(&text)?)
    }
}

fn check_k_r(k: usize, r: usize) -> Result<()> {
    if k < 2 || r < 1 {
        return Err(CliError::precondition(format!("need k >= 2 and r >= 1, got k = {k}, r = {r}")));
    }
    Ok(())
}

fn bound_text(k: usize, r: Option<usize>) -> String {
    match r {
        Some(r) if k == 3 => max_olps_bound(r).map_or("n/a".into(), |b| b.to_string()),
        _ => "n/a".into(),
    }
}

fn spectrum_text(k: usize, r: Option<usize>) -> String {
    match r {
        Some(r) if k >= 2 && r >= 1 => known_spectrum(k, r).status.to_string(),
        _ => "n/a".into(),
    }
}

/// Verification summary shared by `verify`, `analyze` and the builders.
fn summarize(d: &Design, rep: &mut Report) -> bool {
    let v = verify_pentagonal(d);
    let r = v.r.or(d.r_claimed());
    let r_text = r.map_or("irregular".to_string(), |r| r.to_string());
    rep.line(format!("PENT({},{r_text}): {} points, {} lines", d.k(), d.v(), d.b()));
    let violations: Vec<String> = v.all_violations().map(|x| x.to_string()).collect();
    for x in &violations {
        rep.line(format!("violation: {x}"));
    }
    if !v.count_consistent && violations.is_empty() {
        rep.line("violation: point and line counts do not match v = rk - r + k + 1, b = vr/k");
    }
    let olps = if v.pentagonal { count_olps(d).q().to_string() } else { "n/a".into() };
    rep.key("pentagonal", yes_no(v.pentagonal));
    rep.key("v", d.v());
    rep.key("b", d.b());
    rep.key("k", d.k());
    rep.key("r", r_text);
    rep.key("olp_count", olps);
    rep.key("max_olp_bound", bound_text(d.k(), r));
    rep.key("spectrum_status", spectrum_text(d.k(), r));
    rep.key("violations", violations.len());
    if !v.pentagonal {
        rep.exit = EXIT_INVALID;
    }
    v.pentagonal
}

fn verify_file(path: &Path) -> Result<Report> {
    let d = load_design(path)?;
    let mut rep = Report::default();
    summarize(&d, &mut rep);
    Ok(rep)
}

fn analyze(path: &Path) -> Result<Report> {
    let d = load_design(path)?;
    let mut rep = Report::default();
    if !summarize(&d, &mut rep) {
        return Ok(rep);
    }
    let olps = count_olps(&d);
    for (l, m) in olps.lines(&d) {
        rep.line(format!("olp: {} / {}", join(l), join(m)));
    }
    let g = build_deficiency(&d);
    let classes = classify(&g, d.k());
    for c in &classes.components {
        let tag = match &c.tag {
            ComponentTag::CompleteBipartite { left, right } => format!("K_{{{},{}}} sides {} / {}", left.len(), right.len(), join(left), join(right)),
            ComponentTag::GirthAtLeastFive(Some(gth)) => format!("girth {gth}"),
            ComponentTag::GirthAtLeastFive(None) => "acyclic".to_string(),
            ComponentTag::Other { cycle } => format!("short cycle {}", join(cycle)),
        };
        rep.line(format!("component: {} vertices, {tag}", c.vertices.len()));
    }
    let gth = girth(&g).map_or("none".to_string(), |x| x.to_string());
    rep.key("deficiency_girth", gth);
    rep.key("deficiency_connected", yes_no(is_connected(&g)));
    rep.key("kk_components", classes.complete_bipartite_count());
    rep.key("girth5_components", classes.girth_five_count());
    rep.key("other_components", classes.other_count());
    Ok(rep)
}

fn join(points: &[usize]) -> String {
    points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

/// Writes a generated design to `out`, or to stdout when no path is given.
fn emit(d: Design, out: Option<&Path>, verify: bool) -> Result<Report> {
    let mut rep = Report::default();
    if verify && !summarize(&d, &mut rep) {
        return Ok(rep);
    }
    let text = serialize_design(&d);
    match out {
        Some(path) => {
            write(path, &text)?;
            if !verify {
                rep.key("v", d.v());
                rep.key("b", d.b());
                rep.key("k", d.k());
            }
            rep.key("written", path.display());
        }
        None => rep.raw = Some(text),
    }
    Ok(rep)
}

fn check_pent2_r(r: usize) -> Result<()> {
    if r < 2 || (r as i64) + 3 > PARTITION_MAX_N {
        return Err(CliError::precondition(format!("r must lie in 2..={}, got {r}", PARTITION_MAX_N - 3)));
    }
    Ok(())
}

fn pent2_count_cmd(r: usize) -> Result<Report> {
    check_pent2_r(r)?;
    let n = pent2_count(r);
    let mut rep = Report::default();
    rep.line(n.to_string());
    rep.key("r", r);
    rep.key("pent2_count", n);
    Ok(rep)
}

fn pent2_enumerate_cmd(r: usize, outdir: Option<&Path>, verify: bool) -> Result<Report> {
    check_pent2_r(r)?;
    let mut rep = Report::default();
    if let Some(dir) = outdir {
        fs::create_dir_all(dir).map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?;
    }
    let types = cycle_types(r);
    for ct in &types {
        let d = ct.design();
        if verify && !verify_pentagonal(&d).pentagonal {
            return Err(CliError { exit: EXIT_INVALID, message: format!("PENT(2,{r}) of type {ct} failed verification") });
        }
        let name = format!("pent2_r{r}_{ct}.design");
        if let Some(dir) = outdir {
            write(&dir.join(&name), &serialize_design(&d))?;
        }
        rep.line(format!("{ct}  {name}"));
    }
    rep.key("r", r);
    rep.key("count", types.len());
    Ok(rep)
}

#[allow(clippy::too_many_arguments)]
fn complete(
    graph: &Path,
    k: usize,
    r: usize,
    nodes: u64,
    seconds: f64,
    seed: u64,
    out: Option<&Path>,
    verify: bool,
) -> Result<Report> {
    let g = parse_graph(&read(graph)?)?;
    if !(seconds.is_finite() && seconds > 0.0) {
        return Err(CliError::precondition(format!("--seconds must be positive, got {seconds}")));
    }
    let budget = SearchBudget { max_nodes: nodes, max_time: Duration::from_secs_f64(seconds), seed };
    match complete_from_deficiency(&g, k, r, &budget) {
        Ok(Completion::Found(d)) => emit(d, out, verify),
        Ok(Completion::Unsatisfiable) => {
            let mut rep = Report { exit: EXIT_INVALID, ..Report::default() };
            rep.line(format!("no PENT({k},{r}) has this deficiency graph"));
            rep.key("result", "unsatisfiable");
            Ok(rep)
        }
        Err(e) => Err(e.into()),
    }
}

fn catalog_list() -> Result<Report> {
    let cat = Catalog::open()?;
    let mut rep = Report::default();
    rep.line(format!("{:<14} {:>4} {:>5} {:>2} {:>3} {:>3} {:>6} {:>9}  source", "id", "v", "b", "k", "r", "q", "girth", "connected"));
    for e in cat.entries() {
        let x = &e.expected;
        let gth = x.girth.map_or("-".to_string(), |g| g.to_string());
        let conn = x.connected.map_or("-", yes_no);
        rep.line(format!("{:<14} {:>4} {:>5} {:>2} {:>3} {:>3} {:>6} {:>9}  {}", e.id, x.v, x.b, x.k, x.r, x.olp_count, gth, conn, e.source));
    }
    rep.key("entries", cat.entries().len());
    Ok(rep)
}

fn catalog_verify_all() -> Result<Report> {
    let report = Catalog::open()?.verify_all();
    let mut rep = Report::default();
    for e in &report.entries {
        if e.passed() {
            rep.line(format!("PASS {}", e.id));
        } else {
            rep.line(format!("FAIL {}: {}", e.id, e.failures.join("; ")));
        }
    }
    let failed = report.failed().count();
    rep.key("entries", report.entries.len());
    rep.key("passed", report.entries.len() - failed);
    rep.key("failed", failed);
    if failed > 0 {
        rep.exit = EXIT_INVALID;
    }
    Ok(rep)
}

fn spectrum(k: usize, r: usize) -> Result<Report> {
    check_k_r(k, r)?;
    let fact = known_spectrum(k, r);
    let mut rep = Report::default();
    if fact.label.is_empty() {
        rep.line(fact.status.to_string());
    } else {
        rep.line(format!("{} ({})", fact.status, fact.label));
    }
    rep.line(fact.provenance);
    rep.key("k", k);
    rep.key("r", r);
    rep.key("spectrum_status", fact.status);
    Ok(rep)
}

fn params(k: usize, r: usize) -> Result<Report> {
    check_k_r(k, r)?;
    let p = parameters(k, r);
    let mut rep = Report::default();
    match p.b {
        Some(b) => rep.line(format!("PENT({k},{r}): v = {}, b = {b}", p.v)),
        None => rep.line(format!("PENT({k},{r}): v = {}, b = vr/k is not an integer", p.v)),
    }
    rep.key("k", k);
    rep.key("r", r);
    rep.key("v", p.v);
    rep.key("b", p.b.map_or("n/a".to_string(), |b| b.to_string()));
    rep.key("divisible", yes_no(pentforge::divisibility_ok(k, r)));
    rep.key("max_olp_bound", bound_text(k, Some(r)));
    rep.key("spectrum_status", known_spectrum(k, r).status);
    Ok(rep)
}
