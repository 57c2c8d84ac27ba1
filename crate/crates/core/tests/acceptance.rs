//! Acceptance gate. Each test covers one criterion and prints a single
//! `ACCEPTANCE <id> PASS|FAIL` line with the measured figures.
//!
//! Run with `cargo test -p gammacert --test acceptance -- --nocapture --test-threads=1`.

mod common;

use std::time::{Duration, Instant};

use gammacert::certify::{
    self, grid_monotone_certificate, verify_lemma2_with, verify_theorem1_with,
    verify_theorem2_with, Direction, GridFunction, Lemma2Inputs, Status, Theorem1Inputs,
    Theorem2Inputs, VerificationReport,
};
use gammacert::exactpoly::{lemma, RationalPolynomial};
use gammacert::functions::{self, HFunction};
use gammacert::rational::int;
use gammacert::specfun::{self, digamma_bounds, log1p_bounds, polygamma_bounds};
use gammacert::{constants, Enclosure};
use num_rational::BigRational;
use rand::Rng;

const ANCHOR_TOL: f64 = 0.01;
const LEMMA2_BUDGET: Duration = Duration::from_secs(1);
const ANCHOR_BUDGET: Duration = Duration::from_secs(1);
const THEOREM1_BUDGET: Duration = Duration::from_secs(30);
const THEOREM2_BUDGET: Duration = Duration::from_secs(30);
const REMARK1_BUDGET: Duration = Duration::from_secs(10);
const N_MAX: u64 = 200;
const LIMIT_DISTANCE: f64 = 0.05;
const ORACLE_POINTS: usize = 500;
const BOUND_POINTS: usize = 200;

fn verdict(id: &str, ok: bool, detail: String) {
    println!(
        "ACCEPTANCE {id} {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{id}: {detail}");
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

#[test]
fn c01_lemma2_passes() {
    let (r, t) = timed(certify::verify_lemma2);
    let mut ok = r.overall == Status::Pass && r.steps.len() == 18 && t < LEMMA2_BUDGET;
    for (i, want) in [2, 2, 12, 8, 8].into_iter().enumerate() {
        let p = &lemma::rational_family()[i];
        ok &= p.eval_at(&int(0)) == int(-1) && p.eval_at(&int(1)) == int(want);
        ok &= r.step(&format!("p{}.positive", i + 1)).unwrap().status == Status::Pass;
    }
    let p6 = functions::p6().to_interval();
    let at0 = p6.eval(Enclosure::point(0.0));
    let at1 = p6.eval(Enclosure::point(1.0));
    ok &= at0.within(-113.68, ANCHOR_TOL) && at1.within(5087.39, ANCHOR_TOL);
    verdict(
        "lemma2",
        ok,
        format!(
            "overall={:?} steps={} p6(0)={at0} p6(1)={at1} time={t:?}",
            r.overall,
            r.steps.len()
        ),
    );
}

#[test]
fn c02_taylor_shift_identity() {
    let p = RationalPolynomial::from_ints(&[8, -2, -31, 8, 86, 66, 13]);
    let shifted = p.taylor_shift(&int(1));
    let want: Vec<_> = [148, 712, 1364, 1272, 611, 144, 13]
        .iter()
        .map(|&c| int(c))
        .collect();
    verdict(
        "taylor-shift",
        shifted.coeffs() == want.as_slice(),
        format!("shifted = {shifted}"),
    );
}

#[test]
fn c03_anchor_constants() {
    let (rows, t) = timed(|| {
        let h = |w| functions::h_family(w, 1.0).unwrap();
        vec![
            ("q(1)", functions::q_func(1.0).unwrap(), 3.468, true),
            ("h1(1)", h(HFunction::H1), 8.04, true),
            ("h(1)", h(HFunction::H), -constants::ln_pi().mid(), false),
            ("h2(1)", h(HFunction::H2), -134.10, false),
            ("h2'(1)", h(HFunction::H2p), -469.89, false),
            ("h2''(1)", h(HFunction::H2pp), -1696.22, false),
        ]
    });
    let mut ok = t < ANCHOR_BUDGET;
    let mut detail = String::new();
    for (name, v, anchor, positive) in rows {
        let side = if positive {
            v.is_positive()
        } else {
            v.is_negative()
        };
        let good = v.within(anchor, ANCHOR_TOL) && side;
        ok &= good;
        detail += &format!("{name}={v}{} ", if good { "" } else { "(!)" });
    }
    verdict("anchors", ok, format!("{detail}time={t:?}"));
}

#[test]
fn c04_theorem1_desk_scale() {
    let (r, t) = timed(|| verify_theorem1_with(&Theorem1Inputs::default()).unwrap());
    let grid = r.step("f").unwrap().grid.clone().unwrap();
    let ok = r.overall == Status::Pass
        && grid.is_certified()
        && grid.inconclusive_pairs == 0
        && grid.from == 0.0
        && grid.to == 50.0
        && r.step("e").unwrap().status == Status::Pass
        && t < THEOREM1_BUDGET;
    verdict(
        "theorem1-grid",
        ok,
        format!(
            "F pairs={} refined={} inconclusive={} fg_ratio={:?} time={t:?}",
            grid.verified_pairs,
            grid.refined_pairs,
            grid.inconclusive_pairs,
            r.step("e").unwrap().status
        ),
    );
}

#[test]
fn c05_theorem2_desk_scale() {
    let (r, t) = timed(|| verify_theorem2_with(N_MAX, &Theorem2Inputs::default()).unwrap());
    let grid = r.step("h").unwrap().grid.clone().unwrap();
    let mut separated = true;
    for n in 3..N_MAX {
        let a = functions::omega_sequence_term(n).unwrap();
        let b = functions::omega_sequence_term(n + 1).unwrap();
        separated &= b.hi() < a.lo();
    }
    let ok = r.overall == Status::Pass
        && grid.is_certified()
        && grid.from == 1.0 + 1.0 / 1024.0
        && separated
        && t < THEOREM2_BUDGET;
    verdict(
        "theorem2-grid",
        ok,
        format!(
            "G pairs={} sequence separated 3..{N_MAX}: {separated} time={t:?}",
            grid.verified_pairs
        ),
    );
}

#[test]
fn c06_remark1_trends() {
    let ((r, d4, d6), t) = timed(|| {
        let r = certify::verify_remark1(N_MAX).unwrap();
        let limit = Enclosure::point(-0.5).exp();
        let d = |n| (functions::omega_root_n_ln_n(n).unwrap() - limit).abs();
        (r, d(10_000), d(1_000_000))
    });
    let decreasing =
        r.step("a1").unwrap().status == Status::Pass && r.step("b").unwrap().status == Status::Pass;
    let shrinking = d6.strictly_below(&d4);
    let close = d6.hi() < LIMIT_DISTANCE;
    verdict(
        "remark1-trends",
        decreasing && shrinking && close && t < REMARK1_BUDGET,
        format!(
            "decreasing={decreasing} distance(1e4)={d4} distance(1e6)={d6} shrinking={shrinking} below {LIMIT_DISTANCE}={close} time={t:?}"
        ),
    );
}

#[test]
fn c07_oracle_equivalence() {
    let mut rng = common::rng(0xacce);
    let mut failures = 0;
    let mut checked = 0;
    while checked < ORACLE_POINTS {
        let x: f64 = rng.gen_range(0.0..=100.0);
        if x == 0.0 {
            continue;
        }
        let e = Enclosure::point(x);
        failures += usize::from(!common::ln_gamma(x).inside(&specfun::ln_gamma(e).unwrap()));
        for k in 0..=2 {
            failures +=
                usize::from(!common::polygamma(k, x).inside(&specfun::polygamma(k, e).unwrap()));
        }
        checked += 1;
    }
    verdict(
        "oracle-equivalence",
        failures == 0,
        format!("points={checked} failures={failures}"),
    );
}

#[test]
fn c08_classical_bound_containment() {
    let mut rng = common::rng(0xb0a0);
    let mut failures = 0;
    for _ in 0..BOUND_POINTS {
        let x: f64 = rng.gen_range(1.0..=100.0);
        let e = Enclosure::point(x);
        failures += usize::from(
            !digamma_bounds(x)
                .unwrap()
                .strictly_contains(&specfun::digamma(e).unwrap()),
        );
        failures += usize::from(
            !polygamma_bounds(1, x)
                .unwrap()
                .strictly_contains(&specfun::trigamma(e).unwrap()),
        );
        failures += usize::from(
            !polygamma_bounds(2, x)
                .unwrap()
                .strictly_contains(&specfun::tetragamma(e).unwrap().abs()),
        );
    }
    let mut log_failures = 0;
    for _ in 0..BOUND_POINTS {
        let t: f64 = 10f64.powf(rng.gen_range(-6.0..3.0));
        let arg = BigRational::from_float(t).unwrap() + BigRational::from_integer(1.into());
        let exact = common::ln(&common::Fixed::from_ratio(&arg));
        let b = log1p_bounds(t).unwrap();
        log_failures += usize::from(!exact.inside(&Enclosure::new(b.lower, b.upper).unwrap()));
    }
    verdict(
        "classical-bounds",
        failures == 0 && log_failures == 0,
        format!("psi-family failures={failures} log1p failures={log_failures}"),
    );
}

fn only_fails(r: &VerificationReport, id: &str) -> bool {
    r.overall == Status::Fail && r.failing_steps() == vec![id]
}

#[test]
fn c09_mutation_suite() {
    let mut results: Vec<(&str, bool)> = Vec::new();

    let mut l = Lemma2Inputs::default();
    l.p6_at_0 = -l.p6_at_0;
    results.push((
        "p6(0) anchor",
        only_fails(&verify_lemma2_with(&l), "p6.at0"),
    ));
    let mut l = Lemma2Inputs::default();
    l.p6_at_1 = -l.p6_at_1;
    results.push((
        "p6(1) anchor",
        only_fails(&verify_lemma2_with(&l), "p6.at1"),
    ));

    let mut i = Theorem1Inputs::default();
    i.q_at_1 = -i.q_at_1;
    results.push((
        "q(1) anchor",
        only_fails(&verify_theorem1_with(&i).unwrap(), "a"),
    ));

    type Field = fn(&mut Theorem2Inputs) -> &mut f64;
    let cases: [(&str, Field, &str); 5] = [
        ("h2''(1) anchor", |i| &mut i.h2pp_at_1, "b"),
        ("h2'(1) anchor", |i| &mut i.h2p_at_1, "c"),
        ("h2(1) anchor", |i| &mut i.h2_at_1, "d"),
        ("h1(1) anchor", |i| &mut i.h1_at_1, "e"),
        ("h(1) anchor", |i| &mut i.h_at_1, "f"),
    ];
    for (name, field, id) in cases {
        let mut i = Theorem2Inputs::default();
        let v = field(&mut i);
        *v = -*v;
        results.push((
            name,
            only_fails(&verify_theorem2_with(N_MAX, &i).unwrap(), id),
        ));
    }

    let mut l = Lemma2Inputs::default();
    l.family[0].0 = &l.family[0].0 - &RationalPolynomial::from_ints(&[0, -10, 10]);
    results.push((
        "p1 - 10x(x-1)",
        only_fails(&verify_lemma2_with(&l), "p1.positive"),
    ));

    let mut i = Theorem1Inputs::default();
    i.numerator = &i.numerator + &RationalPolynomial::from_ints(&[1]);
    results.push((
        "numerator constant 8->9",
        only_fails(&verify_theorem1_with(&i).unwrap(), "b"),
    ));

    let mut l = Lemma2Inputs::default();
    l.p6.rational = &l.p6.rational + &RationalPolynomial::from_ints(&[0, 3000, -3000]);
    results.push((
        "p6 x^2 -3000, x +3000",
        only_fails(&verify_lemma2_with(&l), "p6.positive"),
    ));

    let caught = results.iter().filter(|(_, ok)| *ok).count();
    let missed: Vec<&str> = results
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    verdict(
        "mutation-suite",
        results.len() == 11 && missed.is_empty(),
        format!("caught {caught}/{} missed={missed:?}", results.len()),
    );
}

#[test]
fn c10_grid_function_examples() {
    let f = grid_monotone_certificate(GridFunction::F, 1.01, 50.0, 0.01, Direction::Increasing)
        .unwrap();
    let g = grid_monotone_certificate(GridFunction::G, 1.001, 50.0, 0.01, Direction::Decreasing)
        .unwrap();
    let wrong =
        grid_monotone_certificate(GridFunction::F, 0.0, 1.0, 0.01, Direction::Decreasing).unwrap();
    verdict(
        "grid-examples",
        f.is_certified() && g.is_certified() && wrong.status == Status::Fail,
        format!(
            "F={:?} G={:?} reversed={:?}",
            f.status, g.status, wrong.status
        ),
    );
}
