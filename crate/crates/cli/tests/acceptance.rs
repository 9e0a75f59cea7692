use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use concordance_core::homology::{BiGrading, CancellationOrder};
use concordance_core::lens_d::{d_branched_cover_multiset, d_twist_closed, d_twist_obstruction_closed, DCorrectionTable};
use concordance_core::obstruct::{
    obstruction_value, prime_factors, twist_family_independent, verdict, Invariant, ObstructionReport, SpincFunction,
    TestKind, Verdict,
};
use concordance_core::rational::{int, sorted, Q};
use concordance_core::report::Report;
use concordance_core::{compute, Engine, KnotFloer, TwoBridgeKnot};
use concordance_cli::{parse_knot, run_knot, Options, Query};
use num_traits::{Signed, Zero};

type Check = Result<String, String>;

/// `(invariant, prime, power, nonzero)`.
type Expectation = (Invariant, u64, u32, bool);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn knot(p: i64, q: i64) -> Result<TwoBridgeKnot, String> {
    TwoBridgeKnot::new(p, q).map_err(|e| e.to_string())
}

fn obstruct(p: i64, q: i64) -> Result<(ObstructionReport, Duration), String> {
    let k = knot(p, q)?;
    let start = Instant::now();
    let s = compute(&k, Engine::default()).map_err(|e| format!("{p}/{q}: {e}"))?.survivors;
    let r = verdict(&k, &s.tau(), &s.d()).map_err(|e| e.to_string())?;
    Ok((r, start.elapsed()))
}

fn value(r: &ObstructionReport, inv: Invariant, p: u64, k: u32) -> Result<Q, String> {
    r.value(inv, p, k).ok_or_else(|| format!("{}: no {inv:?} value at {p}^{k}", r.knot))
}

fn minmax_fires(r: &ObstructionReport, p: u64) -> bool {
    r.tests.iter().any(|t| t.kind == TestKind::MinMax && t.p == p && t.fired)
}

fn expect_values(r: &ObstructionReport, expected: &[Expectation]) -> Result<(), String> {
    for &(inv, p, k, nonzero) in expected {
        let v = value(r, inv, p, k)?;
        ensure(v.is_zero() != nonzero, || format!("{}: {inv:?}_{} = {v}", r.knot, p.pow(k)))?;
    }
    ensure(r.verdict == Verdict::InfiniteOrder, || format!("{}: verdict {}", r.knot, r.verdict))
}

fn known_knots() -> Check {
    use Invariant::{Tau as T, D};
    let both = |p: u64| vec![(T, p, 1, true), (D, p, 1, true)];
    let rows: Vec<((i64, i64), Vec<Expectation>)> = vec![
        ((29, 11), both(29)),
        ((37, 14), both(37)),
        ((41, 16), both(41)),
        ((45, 17), vec![(T, 3, 1, true), (T, 5, 1, true), (D, 3, 1, false), (D, 5, 1, false)]),
        ((53, 22), vec![(T, 53, 1, false), (D, 53, 1, true)]),
        ((61, 17), both(61)),
        ((53, 19), both(53)),
        ((37, 13), both(37)),
        ((129, 50), both(3)),
        ((93, 41), both(3)),
        ((77, 18), vec![]),
        ((77, 34), both(11)),
    ];
    let mut slowest = Duration::ZERO;
    for ((p, q), expected) in rows {
        let (r, took) = obstruct(p, q)?;
        expect_values(&r, &expected)?;
        if (p, q) == (77, 18) {
            ensure(minmax_fires(&r, 7) && minmax_fires(&r, 11), || "77/18: min/max test silent at 7 or 11".into())?;
        }
        ensure(took < Duration::from_secs(300), || format!("{p}/{q} took {took:?}"))?;
        slowest = slowest.max(took);
    }
    Ok(format!("12 knots, slowest {slowest:.2?}"))
}

fn prime_power_knots() -> Check {
    use Invariant::{Tau as T, D};
    let (r, _) = obstruct(81, 14)?;
    expect_values(&r, &[(D, 3, 1, false), (D, 3, 2, true)])?;
    let (r, _) = obstruct(125, 33)?;
    expect_values(&r, &[(D, 5, 1, false), (D, 5, 2, true)])?;
    let (r, took) = obstruct(209, 81)?;
    expect_values(&r, &[(T, 11, 1, false), (T, 19, 1, false), (D, 11, 1, false), (D, 19, 1, false)])?;
    ensure(minmax_fires(&r, 11) || minmax_fires(&r, 19), || "209/81: no min/max failure".into())?;
    Ok(format!("81/14, 125/33, 209/81 ({took:.2?})"))
}

fn twist_suite() -> Check {
    let start = Instant::now();
    let mut pairs = 0;
    for p in (3..=199i64).step_by(2) {
        let k = knot(p, 2)?;
        let h = (p - 1) / 2;
        let closed = sorted((-h..=h).map(|k| d_twist_closed(p, k).expect("odd p")));
        ensure(d_branched_cover_multiset(&k) == closed, || format!("p = {p}: multisets differ"))?;
        let table = DCorrectionTable::branched_cover(&k).centered();
        ensure((table[0] != int(0)) == (p % 4 == 3), || format!("p = {p}: d(0) = {}", table[0]))?;
        if p % 4 != 1 {
            continue;
        }
        let f = SpincFunction::cyclic(table);
        for q in prime_factors(p as u64) {
            let computed = obstruction_value(&f, q, 1);
            let closed = d_twist_obstruction_closed(q as i64, p / q as i64).map_err(|e| e.to_string())?;
            ensure(computed.abs() == closed.abs(), || format!("D_{q}(K_{{{p},2}}) = {computed}, closed {closed}"))?;
            pairs += 1;
        }
    }
    let d_of = |p: i64, q: u64| -> Result<Q, String> {
        let table = DCorrectionTable::branched_cover(&knot(p, 2)?).centered();
        Ok(obstruction_value(&SpincFunction::cyclic(table), q, 1))
    };
    ensure(d_of(9, 3)?.is_zero() && d_of(5, 5)?.is_zero(), || "D_3(K_9,2) or D_5(K_5,2) nonzero".into())?;
    let fam = |ps: &[u64]| twist_family_independent(ps).map_err(|e| e.to_string());
    ensure(fam(&[3])? && fam(&[21, 55])? && !fam(&[9])?, || "family independence examples".into())?;
    let took = start.elapsed();
    ensure(took <= Duration::from_secs(1), || format!("took {took:?}"))?;
    Ok(format!("99 multisets, {pairs} D_q values, {took:.2?}"))
}

fn finite_order() -> Check {
    for text in ["9/2", "5/2"] {
        let spec = parse_knot(text).map_err(|e| e.to_string())?;
        let r = run_knot(&spec, Query::Obstruct, &Options::default()).map_err(|e| e.to_string())?;
        ensure(r.verdict.as_deref() == Some("inconclusive"), || format!("{text}: {:?}", r.verdict))?;
        let tests = r.tests.unwrap_or_default();
        ensure(!tests.is_empty() && tests.iter().all(|t| !t.fired), || format!("{text}: a test fired"))?;
    }
    Ok("K_{9,2} and K_{5,2} inconclusive".into())
}

fn pooled(kf: &KnotFloer) -> Vec<BiGrading> {
    let mut v: Vec<BiGrading> =
        kf.associated_graded(CancellationOrder::Lexicographic).into_iter().map(|(_, g)| g).collect();
    v.sort();
    v
}

fn structure_of(p: i64, q: i64) -> Result<(), String> {
    let k = knot(p, q)?;
    let kf = compute(&k, Engine::default()).map_err(|e| format!("{p}/{q}: {e}"))?;
    let at = |what: &str| format!("{p}/{q}: {what}");
    for diff in &kf.differentials {
        diff.check_square_zero().map_err(|e| at(&e.to_string()))?;
        let m = kf.gradings.maslov(diff.role);
        ensure(diff.arrows.iter().all(|&(x, y)| m[x] - m[y] == int(1)), || at("Maslov drop"))?;
    }
    let a = &kf.gradings.alexander;
    let drops_ok = kf.differentials[0].arrows.iter().all(|&(x, y)| a[x] - a[y] >= int(0));
    ensure(drops_ok, || at("Alexander filtration"))?;
    for c in &kf.complexes {
        let mut g = c.reduce().gradings;
        g.sort();
        let pattern = g.len() == 2 && g[1].a - g[0].a == int(1) && g[1].m - g[0].m == int(1);
        ensure(pattern, || at(&format!("label {} survivors {g:?}", c.label)))?;
    }
    let d = kf.survivors.d();
    ensure(sorted(d.iter().copied()) == d_branched_cover_multiset(&k), || at("survivors vs correction terms"))?;
    let n = p as usize;
    ensure((0..n).all(|s| d[s] == d[(n - s) % n]), || at("d not conjugation invariant"))?;
    let mirror = compute(&k.mirror(), Engine::default()).map_err(|e| at(&e.to_string()))?;
    let negated = sorted(kf.survivors.tau().into_iter().map(|t| -t));
    ensure(sorted(mirror.survivors.tau()) == negated, || at("mirror tau"))?;
    let hfk_a: Vec<Q> = kf.hfk().map_err(|e| at(&e.to_string()))?.iter().map(|c| c.grading.a).collect();
    ensure(sorted(hfk_a.iter().copied()) == sorted(hfk_a.iter().map(|x| -x)), || at("HFK symmetry"))?;
    let graded = pooled(&kf);
    let mut image: Vec<BiGrading> = graded.iter().map(|g| BiGrading { a: -g.a - 1, m: g.m - g.a * 2 - 1 }).collect();
    image.sort();
    ensure(graded == image, || at("w/z symmetry"))
}

fn structural_suite() -> Check {
    let knots = [(3, 1), (3, 2), (5, 2), (7, 3), (9, 2), (45, 17)];
    for (p, q) in knots {
        structure_of(p, q)?;
    }
    Ok(format!("{} knots", knots.len()))
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for p in (3..=99i64).step_by(2) {
        for k in (1..p).filter(|q| 2 * p * q <= 200).filter_map(|q| TwoBridgeKnot::new(p, q).ok()) {
            let (p, q) = (k.p(), k.q());
            let fast = compute(&k, Engine::Rectangles).map_err(|e| format!("{p}/{q}: {e}"))?;
            let oracle = compute(&k, Engine::Oracle).map_err(|e| format!("{p}/{q} oracle: {e}"))?;
            ensure(fast.differentials == oracle.differentials, || format!("{p}/{q}: differentials differ"))?;
            ensure(fast.survivors == oracle.survivors, || format!("{p}/{q}: tables differ"))?;
            count += 1;
        }
    }
    Ok(format!("{count} knots, {:.1?}", start.elapsed()))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_concordance"))
        .args(args)
        .env_remove("CONCORDANCE_CACHE")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr)))?;
    Ok(out.stdout)
}

fn determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = dir.path().join("knots.csv");
    let rows = "name,p,q\n8_13,29,11\n10_10,45,17\n10_13,53,22\n11_98,77,18\n6_1,9,2\nbad,4,2\n";
    std::fs::write(&input, rows).map_err(|e| e.to_string())?;
    let input = input.to_str().ok_or("temp path is not UTF-8")?;
    let one = run_cli(&["--format", "json", "--jobs", "1", "batch", input])?;
    let many = run_cli(&["--format", "json", "--jobs", "4", "batch", input])?;
    ensure(one == many, || "batch JSON differs between --jobs 1 and --jobs 4".into())?;
    let a = run_cli(&["--format", "json", "--jobs", "1", "obstruct", "45/17"])?;
    let b = run_cli(&["--format", "json", "--jobs", "3", "obstruct", "45/17"])?;
    ensure(a == b, || "report JSON differs between runs".into())?;
    let text = String::from_utf8(a).map_err(|e| e.to_string())?;
    let reparsed = Report::from_json(&text).map_err(|e| e.to_string())?;
    ensure(reparsed.to_json() == text, || "JSON does not round-trip".into())?;
    Ok(format!("{} bytes of batch JSON", one.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("known knot regression", known_knots),
        ("prime power and min/max knots", prime_power_knots),
        ("twist knot closed forms", twist_suite),
        ("finite order sanity", finite_order),
        ("structural invariants", structural_suite),
        ("oracle equivalence", oracle_equivalence),
        ("determinism", determinism),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        match check() {
            Ok(detail) => println!("criterion {}: {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
