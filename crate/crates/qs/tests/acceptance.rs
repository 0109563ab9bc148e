//! Acceptance run: one PASS/FAIL line per criterion; exits 1 if any fails.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use qs::json::certificate_to_json;
use qs_core::certificate::make_idempotent;
use qs_core::elementary::{elementary_factorization, product, ElementaryFactor};
use qs_core::gcd::bezout_univariate;
use qs_core::horrocks::{horrocks_with_trace, in_unit_group, lift_invertible};
use qs_core::linalg::determinant;
use qs_core::patching::{bezout_combine, cert_add, cert_scale, specialize_to_zero, translation_from_local_trivialization};
use qs_core::rational::from_int;
use qs_core::solver::{complete_unimodular_row, quillen_suslin_free_basis, rational_point_search, PointSearch, SolverConfig};
use qs_core::{Error, Fraction, Mat, MultiPoly, PointIdeal, VarContext};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn random_poly(rng: &mut ChaCha8Rng, c: &VarContext, vars: &[usize], max_deg: u32) -> MultiPoly {
    let terms = (0..rng.gen_range(1..=3)).map(|_| {
        let mut e = vec![0; c.len()];
        for &v in vars {
            e[v] = rng.gen_range(0..=max_deg);
        }
        (e, from_int(rng.gen_range(-5..=5)))
    });
    MultiPoly::from_terms(c, terms).unwrap()
}

fn random_idempotent(rng: &mut ChaCha8Rng, c: &VarContext) -> Mat<MultiPoly> {
    let n = rng.gen_range(1..=4);
    let mut s = Mat::identity(c, n);
    let mut s_inv = Mat::identity(c, n);
    if n > 1 {
        for _ in 0..rng.gen_range(0..=6) {
            let i = rng.gen_range(0..n);
            let j = (i + rng.gen_range(1..n)) % n;
            let f = random_poly(rng, c, &[0], 2);
            let mut t = Mat::identity(c, n);
            t.set(i, j, f.clone());
            let mut t_inv = Mat::identity(c, n);
            t_inv.set(i, j, -&f);
            s = s.mul(&t).unwrap();
            s_inv = t_inv.mul(&s_inv).unwrap();
        }
    }
    let mut delta = Mat::zeros(c, n, n);
    for i in 0..n {
        if rng.gen_bool(0.5) {
            delta.set(i, i, MultiPoly::one(c));
        }
    }
    s.mul(&delta).unwrap().mul(&s_inv).unwrap()
}

fn oracle_closure() -> Outcome {
    let c = ctx(&["x"]);
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let mut ok = 0;
    for _ in 0..200 {
        let e = random_idempotent(&mut rng, &c);
        let passed = quillen_suslin_free_basis(&e, &SolverConfig::default(), None).is_ok_and(|cert| {
            cert.verify().passed() && e.trace() == MultiPoly::from_int(&c, cert.rank() as i64)
        });
        ok += usize::from(passed);
    }
    outcome(ok == 200, format!("{ok}/200 random idempotents over Q[x] certified"))
}

fn bivariate() -> Outcome {
    let (u, w) = uw();
    let e = u.mul(&w).unwrap();
    let trace_one = e.trace() == MultiPoly::one(e.ctx());
    match quillen_suslin_free_basis(&e, &SolverConfig::default(), None) {
        Ok(cert) => {
            let passed = cert.verify().passed() && cert.rank() == 1 && trace_one;
            outcome(passed, format!("u*w over Q[x,y]: rank {}, trace(E) = {}", cert.rank(), e.trace()))
        }
        Err(err) => outcome(false, format!("solver failed: {err}")),
    }
}

fn horrocks_standalone() -> Outcome {
    let input = constructed_horrocks_instance();
    let (cert, trace) = match horrocks_with_trace(&input) {
        Ok(r) => r,
        Err(err) => return outcome(false, format!("horrocks failed: {err}")),
    };
    let x = input.var;
    let polynomial = cert.a.entries().iter().chain(cert.b.entries()).all(Fraction::is_polynomial);
    let (f, g) = (trace.det_v.num(), trace.det_v.den());
    let same_shape = f.degree_in(x) == g.degree_in(x) && f.lc_in(x) == g.lc_in(x);
    let lc = f.lc_in(x);
    let residues_agree = input.ideal.is_unit(&lc) && {
        let monic = |h: &MultiPoly| Fraction::new(h.clone(), lc.clone()).unwrap();
        input.ideal.reduce_fraction(&monic(f)).ok() == input.ideal.reduce_fraction(&monic(g)).ok()
    };
    let det_ok = same_shape && residues_agree && in_unit_group(&trace.det_v, &input.ideal, x);
    let passed = polynomial && cert.verify().passed() && det_ok;
    outcome(
        passed,
        format!("denominator-free: {polynomial}, det(V) = {} in the unit group: {det_ok}", trace.det_v),
    )
}

fn random_monic_fraction(rng: &mut ChaCha8Rng, c: &VarContext) -> Fraction {
    let num = random_poly(rng, c, &[0, 1], 3);
    let d = rng.gen_range(1..=3);
    let mut den = MultiPoly::var(c, 0).pow(d);
    for k in 0..d {
        den = &den + &random_poly(rng, c, &[1], 2).mul_var_pow(0, k);
    }
    Fraction::new(num, den).unwrap()
}

fn retraction_laws() -> Outcome {
    let c = ctx(&["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let mut ok = 0;
    for _ in 0..1000 {
        let phi = random_monic_fraction(&mut rng, &c);
        let psi = random_monic_fraction(&mut rng, &c);
        let (q, r) = phi.polynomial_part(0);
        let split = &q + &r == phi && q.is_polynomial();
        let degree = r.is_zero() || r.num().degree_in(0).unwrap_or(0) < r.den().degree_in(0).unwrap_or(0);
        let a = Fraction::from_poly(random_poly(&mut rng, &c, &[1], 2));
        let b = Fraction::from_poly(random_poly(&mut rng, &c, &[1], 2));
        let combined = (&(&a * &phi) + &(&b * &psi)).polynomial_part(0).0;
        let linear = combined == &(&a * &q) + &(&b * &psi.polynomial_part(0).0);
        ok += usize::from(split && degree && linear);
    }
    outcome(ok == 1000, format!("{ok}/1000 monic fractions satisfy split, degree and linearity laws"))
}

fn random_rational_function(rng: &mut ChaCha8Rng, c: &VarContext) -> Fraction {
    loop {
        let num = random_poly(rng, c, &[0], 2);
        let den = &MultiPoly::var(c, 0).pow(rng.gen_range(0..=2)) + &random_poly(rng, c, &[0], 1);
        if let (false, Ok(f)) = (num.is_zero(), Fraction::new(num, den)) {
            return f;
        }
    }
}

fn lifting_round_trip() -> Outcome {
    let c = ctx(&["x", "y"]);
    let ideal = PointIdeal::new(&c, &[("y", from_int(0))]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    let mut ok = 0;
    for _ in 0..100 {
        let factors: Vec<ElementaryFactor<Fraction>> = (0..rng.gen_range(0..=10))
            .map(|_| {
                let s = random_rational_function(&mut rng, &c);
                let i = rng.gen_range(0..3);
                if rng.gen_bool(0.3) {
                    ElementaryFactor::dilation(3, i, s).unwrap()
                } else {
                    ElementaryFactor::transvection(3, i, (i + rng.gen_range(1..3)) % 3, s).unwrap()
                }
            })
            .collect();
        let m = product(&c, 3, &factors);
        let passed = elementary_factorization(&m).is_ok_and(|f| product(&c, 3, &f) == m)
            && lift_invertible(&m, &ideal).is_ok_and(|u| {
                u.matrix().try_map(&c, |f| ideal.reduce_fraction(f)).is_ok_and(|r| r == m)
                    && u.matrix().mul(&u.inverse_matrix()).is_ok_and(|p| p.is_identity())
            });
        ok += usize::from(passed);
    }
    outcome(ok == 100, format!("{ok}/100 invertible 3x3 matrices over Q(x) reproduced"))
}

fn patching_algebra() -> Outcome {
    let c = ctx(&["x", "y2", "t"]);
    let (x, y2, t) = (0, 1, 2);
    let at = |r: &str, point: i64| {
        let ideal = PointIdeal::new(&c, &[("y2", from_int(point))]).unwrap();
        translation_from_local_trivialization(&sheared_local(&c, r), &ideal, x, t)
    };
    let (t1, t2) = match (at("y2", 1), at("1 - y2", 0)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return outcome(false, format!("local certificates failed: {e}")),
    };
    let mut checks = vec![("translations", t1.verify().is_ok() && t2.verify().is_ok())];
    checks.push(("cert_add", cert_add(&t1, &t2).is_ok_and(|s| s.verify().is_ok() && s.j == &t1.j + &t2.j)));
    let r = p(&c, "y2 + 2");
    checks.push(("cert_scale", cert_scale(&t1, &r).is_ok_and(|s| s.verify().is_ok() && s.j == &t1.j * &r)));
    let (g, us) = bezout_univariate(&[t1.j.clone(), t2.j.clone()], y2).unwrap();
    let one = bezout_combine(&[t1.clone(), t2.clone()], &us);
    checks.push(("extended Euclid", g.is_one()));
    checks.push(("bezout_combine", one.as_ref().is_ok_and(|o| o.verify().is_ok() && o.j.is_one())));
    let special = one.and_then(|o| specialize_to_zero(&o));
    checks.push((
        "specialize_to_zero",
        special.is_ok_and(|s| {
            s.verify().passed() && s.f == t1.e && s.e == t1.e.substitute(x, &MultiPoly::zero(&c))
        }),
    ));
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    let passed = checks.len() - failed.len();
    let detail = format!("{passed}/{} operations verified (r1 = {}, r2 = {})", checks.len(), t1.j, t2.j);
    outcome(failed.is_empty(), if failed.is_empty() { detail } else { format!("{detail}; failed: {failed:?}") })
}

fn unimodular_completion() -> Outcome {
    let c = ctx(&["x", "y"]);
    let cfg = SolverConfig::default();
    let v = pm(&c, &[&["1+x*y", "x"]]);
    let completed = complete_unimodular_row(&v, &cfg).and_then(|m| Ok((determinant(&m)?, m)));
    let (det_ok, det) = match &completed {
        Ok((det, m)) => (m.row(0) == v.row(0) && det.constant_value().is_some_and(|d| d != from_int(0)), det.to_string()),
        Err(e) => (false, e.to_string()),
    };
    let rejected = complete_unimodular_row(&pm(&c, &[&["x", "y"]]), &cfg) == Err(Error::NotUnimodular);
    outcome(det_ok && rejected, format!("(1+xy, x) completed with det {det}; (x, y) rejected: {rejected}"))
}

fn negative_paths() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let (u, w) = uw();
    let cert = make_idempotent(&u, &w).unwrap();
    let corruptions: [(&str, Box<dyn Fn(&mut qs_core::EquivalenceCertificate<MultiPoly>)>); 3] = [
        ("E*E = E", Box::new(|c| c.e.set(1, 1, MultiPoly::from_int(c.e.ctx(), 3)))),
        ("A*B = E", Box::new(|c| c.a.set(0, 0, MultiPoly::zero(c.a.ctx())))),
        ("B*A = F", Box::new(|c| c.f = c.f.scale(&MultiPoly::zero(c.f.ctx())))),
    ];
    let mut named = 0;
    for (i, (identity, corrupt)) in corruptions.iter().enumerate() {
        let mut bad = cert.clone();
        corrupt(&mut bad);
        let path = write_json(dir.path(), &format!("bad{i}.json"), &certificate_to_json(&bad));
        let out = qs(&["verify", s(&path)]);
        named += usize::from(code(&out) == 1 && stdout(&out).contains(identity));
    }
    let y = ctx(&["y"]);
    let library = matches!(
        rational_point_search(&y, &[0], &[p(&y, "y^2 + 1")], &SolverConfig::default()),
        Err(Error::NonRationalLocus(_))
    );
    let found = matches!(rational_point_search(&y, &[0], &[p(&y, "y^2 - 1"), p(&y, "y - 1")], &SolverConfig::default()), Ok(PointSearch::Point(_)));
    let gens = qs::json::GeneratorsJson { generators: vec![qs::json::poly_to_json(&p(&y, "y^2 + 1"))] };
    let gens = write_json(dir.path(), "gens.json", &gens);
    let out = qs(&["find-point", s(&gens)]);
    let cli = code(&out) == 2 && stderr(&out).contains("no rational point");
    let passed = named == corruptions.len() && library && found && cli;
    outcome(
        passed,
        format!(
            "{named}/{} corruptions named; y^2+1 gives NonRationalLocus: {library}, exit code {}",
            corruptions.len(),
            code(&out)
        ),
    )
}

fn main() {
    let criteria: [(u32, &str, Option<u64>, fn() -> Outcome); 8] = [
        (1, "certificate oracle closure", Some(60), oracle_closure),
        (2, "bivariate end-to-end", Some(30), bivariate),
        (3, "Horrocks standalone", Some(10), horrocks_standalone),
        (4, "retraction laws", None, retraction_laws),
        (5, "lifting round trip", None, lifting_round_trip),
        (6, "patching algebra", None, patching_algebra),
        (7, "unimodular completion", None, unimodular_completion),
        (8, "negative-path integrity", None, negative_paths),
    ];
    let mut failures = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < Duration::from_secs(l));
        let passed = result.passed && in_time;
        let limit = limit.map_or(String::new(), |l| format!(", limit {l}s"));
        println!(
            "criterion {n} {}: {name}: {} ({:.2}s{limit})",
            if passed { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_secs_f64()
        );
        failures += usize::from(!passed);
    }
    println!("acceptance: {}/8 criteria passed", 8 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
