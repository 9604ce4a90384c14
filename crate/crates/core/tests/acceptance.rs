//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. All comparisons are exact; only wall-clock
//! limits are pinned.

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::One;
use rand::SeedableRng;
use rayon::prelude::*;

use qmld::contact_loci::{contact_codim, ContactSpec};
use qmld::group_core::{closure, FiniteGroup, MonomialMatrix, WeightVector, DEFAULT_GROUP_CAP};
use qmld::jet_schemes::{
    cylinder_codim_estimate, first_valid_level, jet_dimension, level_locus_dimension, JacobianBound, JetContactSpec,
};
use qmld::lattice_mld::{brute_force_mld, cyclic, mld_origin_toric, MldKind, MonomialRIdeal, Status};
use qmld::mld_engine::{
    acc_sample, mld_reid_tai, random_instance, verify_consistency, verify_pia, HyperquotOptions, HyperquotientInstance,
    Verdict,
};
use qmld::poly_engine::DEFAULT_GROEBNER_BUDGET;
use qmld::rational::{q, qi, Q};
use qmld::twist::{build_twisted_scheme, twist_poly, Polynomial};

const LIMIT_TWIST: Duration = Duration::from_secs(1);
const LIMIT_REID_TAI: Duration = Duration::from_secs(10);
const LIMIT_CONSISTENCY: Duration = Duration::from_secs(120);
const LIMIT_CONTACT: Duration = Duration::from_secs(300);
const LIMIT_JETS: Duration = Duration::from_secs(300);
const LIMIT_PIA: Duration = Duration::from_secs(600);
const LIMIT_ACC: Duration = Duration::from_secs(60);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(120);

const CONSISTENCY_SAMPLES: usize = 60;
const CONSISTENCY_SEED: u64 = 20_240_601;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: qmld::Error) -> String {
    e.to_string()
}

fn twist_golden() -> Check {
    let cubic = Polynomial::parse("x1^3 + x2^3 + x3^3", 3).map_err(err)?;
    let twisted = twist_poly(&cubic, &WeightVector::new(3, vec![0, 1, 2]).map_err(err)?).map_err(err)?;
    let norm = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
    let got = norm(&twisted.to_string());
    ensure(got == norm("x1^3 + t*x2^3 + t^2*x3^3"), format!("got {got}"))?;
    Ok(got)
}

fn binary_dihedral(m: u64) -> qmld::Result<FiniteGroup> {
    let a = MonomialMatrix::diagonal(vec![1, 2 * m - 1], 2 * m)?;
    let b = MonomialMatrix::from_one_based(&[2, 1], vec![0, m], 2 * m)?;
    closure(&[a, b], DEFAULT_GROUP_CAP)
}

/// Minimum of the enumerated toric mld over one generator per cyclic subgroup.
fn per_cyclic_oracle(g: &FiniteGroup) -> qmld::Result<Option<Q>> {
    let mut best: Option<Q> = None;
    for i in g.cyclic_subgroup_representatives() {
        let w = g.elements()[i].weights();
        if let Some((v, _)) = brute_force_mld(&[w], &MonomialRIdeal::empty(), 3)? {
            best = Some(best.map_or(v.clone(), |b: Q| b.min(v)));
        }
    }
    Ok(best)
}

fn reid_tai_suite() -> Check {
    let mut groups = Vec::new();
    for n in 2..=12u64 {
        let w = WeightVector::new(n, vec![1, n - 1]).map_err(err)?;
        groups.push((format!("1/{n}(1,{})", n - 1), FiniteGroup::from_weight_vectors(&[w], DEFAULT_GROUP_CAP).map_err(err)?));
    }
    for m in 1..=4 {
        let g = binary_dihedral(m).map_err(err)?;
        ensure(g.order() as u64 == 4 * m, format!("binary dihedral m={m} has order {}", g.order()))?;
        groups.push((format!("BD{}", 4 * m), g));
    }
    for (name, g) in &groups {
        let v = mld_reid_tai(g, &MonomialRIdeal::empty()).map_err(err)?;
        ensure(v.kind == MldKind::Finite(qi(1)) && v.status == Status::Exact, format!("{name}: {v}"))?;
        let oracle = per_cyclic_oracle(g).map_err(err)?;
        ensure(oracle == Some(qi(1)), format!("{name}: oracle {oracle:?}"))?;
    }
    Ok(format!("{} groups, all exactly 1", groups.len()))
}

fn three_backends() -> Check {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(CONSISTENCY_SEED);
    let instances: Vec<_> = (0..CONSISTENCY_SAMPLES).map(|_| random_instance(&mut rng)).collect();
    let reports: Vec<_> = instances
        .par_iter()
        .map(|(g, a)| verify_consistency(g, a).map(|r| (g, a, r)))
        .collect::<qmld::Result<_>>()
        .map_err(err)?;
    let mut minus_inf = 0;
    for (g, a, r) in &reports {
        let label = format!("{:?} / {a}", g.generators().iter().map(|x| x.to_string()).collect::<Vec<_>>());
        ensure(r.verdict == Verdict::Equal, format!("{label}: {}", r.provenance.join("; ")))?;
        if r.lhs.is_minus_infinity() {
            minus_inf += 1;
        }
    }
    Ok(format!("{} instances (seed {CONSISTENCY_SEED}), {minus_inf} at -inf, all equal", reports.len()))
}

fn monomials(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<u32>| (0..=3).map(move |k| [v.clone(), vec![k]].concat())).collect();
    }
    out.retain(|u| u.iter().any(|&k| k > 0));
    out
}

fn ideals(n: usize) -> Vec<Vec<Vec<u32>>> {
    let m = monomials(n);
    let mut out = Vec::new();
    for i in 0..m.len() {
        out.push(vec![m[i].clone()]);
        for j in i + 1..m.len() {
            out.push(vec![m[i].clone(), m[j].clone()]);
            for k in j + 1..m.len() {
                out.push(vec![m[i].clone(), m[j].clone(), m[k].clone()]);
            }
        }
    }
    out
}

fn contact_vs_jets() -> Check {
    let mut total = 0usize;
    for n in 1..=3usize {
        let id = WeightVector::identity(n);
        let s = build_twisted_scheme(&[], &id).map_err(err)?;
        let coords: Vec<Polynomial> = (0..n)
            .map(|i| Polynomial::monomial(&(0..n).map(|k| u32::from(k == i)).collect::<Vec<_>>()))
            .collect();
        let cases: Vec<(Vec<Vec<u32>>, u64)> =
            ideals(n).into_iter().flat_map(|a| (1..=6u64).map(move |w| (a.clone(), w))).collect();
        total += cases.len();
        let bad: Vec<String> = cases
            .par_iter()
            .filter_map(|(a, w)| {
                let lhs = contact_codim(&ContactSpec::new(n).at_least(a.clone(), *w), &id).map(|c| c.value());
                let spec = JetContactSpec {
                    at_least: vec![(a.iter().map(|u| Polynomial::monomial(u)).collect(), *w)],
                    jacobian: None,
                };
                let level = first_valid_level(&spec, 0);
                let dim = level_locus_dimension(&s, &spec, &coords, &[], 0, level, DEFAULT_GROEBNER_BUDGET);
                let rhs = dim.map(|d| (d >= 0).then(|| ((level + 1) * n) as i64 - d));
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) if l.map(|x| x as i64) == r => None,
                    (l, r) => Some(format!("N={n} a={a:?} w={w}: contact {l:?}, jets {r:?}")),
                }
            })
            .collect();
        ensure(bad.is_empty(), format!("{} disagreements, first {}", bad.len(), bad.first().cloned().unwrap_or_default()))?;
    }
    Ok(format!("{total} (ideal, w) cases agree"))
}

fn jet_sanity() -> Check {
    for n in 1..=3 {
        let s = build_twisted_scheme(&[], &WeightVector::identity(n)).map_err(err)?;
        for m in 0..=4 {
            let d = jet_dimension(&s, m, DEFAULT_GROEBNER_BUDGET).map_err(err)?;
            ensure(d == ((m + 1) * n) as i64, format!("A^{n}, m={m}: dim {d}"))?;
        }
    }
    let gamma = WeightVector::new(3, vec![0, 1, 2]).map_err(err)?;
    let cubic = Polynomial::parse("x1^3 + x2^3 + x3^3", 3).map_err(err)?;
    let s = build_twisted_scheme(&[cubic], &gamma).map_err(err)?;
    let g = FiniteGroup::from_weight_vectors(std::slice::from_ref(&gamma), DEFAULT_GROUP_CAP).map_err(err)?;
    let m_x = g
        .pure_power_invariants()
        .map_err(err)?
        .iter()
        .map(|u| twist_poly(&Polynomial::monomial(u), &gamma))
        .collect::<qmld::Result<Vec<_>>>()
        .map_err(err)?;
    let mut levels = Vec::new();
    for b in 0..=2 {
        let spec = JetContactSpec { at_least: vec![], jacobian: Some(JacobianBound::AtMost(b)) };
        let est = cylinder_codim_estimate(&s, &spec, &m_x, 6, DEFAULT_GROEBNER_BUDGET).map_err(err)?;
        ensure(est.empty, format!("b={b}: Cont^(<=b)(Jac) not empty at probed levels {:?}", est.levels_probed()))?;
        levels.push(est.levels_probed());
    }
    Ok(format!("smooth jets (m+1)N for N<=3, m<=4; cubic Cont^(<=b)(Jac) empty for b<=2 at levels {levels:?}"))
}

fn pia() -> Check {
    let opts = HyperquotOptions::default();
    for delta in [q(0, 1), q(1, 4), q(1, 2), q(3, 4)] {
        let inst = HyperquotientInstance {
            group: FiniteGroup::trivial(2, 1),
            equations: vec![Polynomial::parse("x1", 2).map_err(err)?],
            ideal: MonomialRIdeal::single(vec![vec![1, 0], vec![0, 1]], delta.clone()),
        };
        let r = verify_pia(&inst, &opts).map_err(err)?;
        let expected = MldKind::Finite(Q::one() - &delta);
        ensure(
            r.verdict == Verdict::Equal && r.lhs.kind == expected && r.rhs.kind == expected,
            format!("delta {delta}: {} vs {} ({})", r.lhs, r.rhs, r.verdict),
        )?;
    }
    ensure(opts.m_max <= 6, "m_max above 6")?;
    let g = FiniteGroup::from_weight_vectors(&[WeightVector::new(2, vec![1, 1, 1]).map_err(err)?], DEFAULT_GROUP_CAP)
        .map_err(err)?;
    let inst = HyperquotientInstance {
        group: g,
        equations: vec![Polynomial::parse("x1^2 + x2^2 + x3^2", 3).map_err(err)?],
        ideal: MonomialRIdeal::empty(),
    };
    let r = verify_pia(&inst, &opts).map_err(err)?;
    let oracle = mld_origin_toric(&[cyclic(4, &[1, 1])], &MonomialRIdeal::empty()).map_err(err)?;
    let half = MldKind::Finite(q(1, 2));
    ensure(oracle.kind == half && oracle.status == Status::Exact, format!("toric 1/4(1,1): {oracle}"))?;
    let brute = brute_force_mld(&[cyclic(4, &[1, 1])], &MonomialRIdeal::empty(), 2).map_err(err)?;
    ensure(brute.map(|b| b.0) == Some(q(1, 2)), "enumeration on 1/4(1,1) is not 1/2")?;
    ensure(
        r.lhs.kind == half && r.rhs.kind == half && r.rhs.status == Status::StabilizedHeuristic && r.verdict != Verdict::Mismatch,
        format!("quadric cone: {} vs {} ({})", r.lhs, r.rhs, r.verdict),
    )?;
    Ok(format!("(a) 1 - delta exactly for 4 values; (b) {} vs {}, toric oracle 1/2", r.lhs, r.rhs))
}

fn acc() -> Check {
    let r = acc_sample(2, 30).map_err(err)?;
    ensure(!r.values.is_empty(), "no values")?;
    ensure(r.oracle_match && r.in_range, format!("oracle_match {}, in_range {}", r.oracle_match, r.in_range))?;
    for (w, v) in &r.groups {
        let oracle = brute_force_mld(std::slice::from_ref(w), &MonomialRIdeal::empty(), 2).map_err(err)?;
        ensure(oracle.as_ref().map(|o| &o.0) == Some(v), format!("{w}: {v} vs oracle {oracle:?}"))?;
        ensure(*v > qi(0) && *v <= qi(2), format!("{w}: {v} outside (0, 2]"))?;
    }
    ensure(r.values.windows(2).all(|p| p[0] < p[1]), "values not strictly sorted")?;
    Ok(format!("{} groups, {} distinct values, all match enumeration", r.groups.len(), r.values.len()))
}

fn strip_timing(s: &str) -> String {
    let mut v: serde_json::Value = serde_json::from_str(s).expect("json output");
    v.as_object_mut().unwrap().remove("timing_ms");
    v.to_string()
}

fn properties_and_determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let file = dir.path().join("klein.json");
    std::fs::write(
        &file,
        r#"{"dimension": 3, "group": {"generators": [{"weights": {"d": 2, "e": [1, 1, 0]}}, {"weights": {"d": 2, "e": [0, 1, 1]}}]}}"#,
    )
    .map_err(|e| e.to_string())?;
    let cache = dir.path().join("cache");
    let run = |args: &[&str]| -> Result<String, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_qmld"))
            .args(args)
            .env("QMLD_CACHE_DIR", &cache)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), format!("qmld {args:?} exited with {}", out.status))?;
        Ok(strip_timing(&String::from_utf8_lossy(&out.stdout)))
    };
    let f = file.to_str().unwrap();
    for args in [vec!["group", f], vec!["mld", f, "--mode", "quot"], vec!["mld", f, "--mode", "reid-tai"]] {
        let cold = run(&args)?;
        let warm = run(&args)?;
        let uncached = run(&[args.clone(), vec!["--no-cache"]].concat())?;
        ensure(cold == warm && warm == uncached, format!("{args:?}: output differs between runs"))?;
    }
    // The full property suites live in tests/properties.rs.
    let props = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/properties.rs");
    let text = std::fs::read_to_string(&props).map_err(|e| e.to_string())?;
    for name in [
        "age_is_class_function",
        "twist_is_multiplicative",
        "twist_retracts_at_t_one",
        "ord_product_rule",
        "mld_decreases_in_delta",
        "permutation_equivariance",
        "groebner_idempotent",
        "dimension_matches_subset_search",
    ] {
        ensure(text.contains(&format!("fn {name}")), format!("property {name} missing"))?;
    }
    Ok("CLI output identical across cold, warm and disabled cache; property suites present".into())
}

fn main() {
    let criteria: Vec<(&str, Duration, fn() -> Check)> = vec![
        ("1 twist golden", LIMIT_TWIST, twist_golden),
        ("2 Reid-Tai / Du Val", LIMIT_REID_TAI, reid_tai_suite),
        ("3 three-backend consistency", LIMIT_CONSISTENCY, three_backends),
        ("4 contact locus vs jets", LIMIT_CONTACT, contact_vs_jets),
        ("5 jet engine sanity", LIMIT_JETS, jet_sanity),
        ("6 inversion of adjunction", LIMIT_PIA, pia),
        ("7 ACC sampling", LIMIT_ACC, acc),
        ("8 properties and CLI determinism", LIMIT_PROPERTIES, properties_and_determinism),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if took > limit {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            } else {
                Ok(msg)
            }
        });
        match outcome {
            Ok(msg) => println!("PASS criterion {name} [{took:.2?} <= {limit:?}]: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} [{took:.2?}]: {msg}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
