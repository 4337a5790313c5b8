//! Acceptance criteria, run in order with one PASS/FAIL line each.
//! Stretch items are reported but do not affect the exit status.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use scrolls_core::groebner::{ideal_dimension, radical_contains};
use scrolls_core::scrolls::{binomial, minors_full, minors_reduced, BlockSpec, ScrollMatrix};
use scrolls_core::verify::*;
use scrolls_core::{Field, FieldSpec, MonomialOrder, Polynomial, Rational, Zp};

const Q: FieldSpec = FieldSpec::Rationals;

fn fp(p: u32) -> FieldSpec {
    FieldSpec::PrimeField(p)
}

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

fn within(limit: Duration, start: Instant, what: &str) {
    let t = start.elapsed();
    assert!(t <= limit, "{what} took {t:?}, limit {limit:?}");
}

fn assert_pass(r: &VerificationReport) {
    assert!(r.passed(), "{r}");
}

fn c1_identities() {
    let start = Instant::now();
    for field in [Q, fp(2), fp(3), fp(5)] {
        for c in 1..=6 {
            for d in 1..=6 {
                let r = Job::Identities { c, d, field }.run(&cfg());
                assert_pass(&r);
                // admissible index counts: base, chain, step, shift, corners
                let expected = usize::from(c >= 2)
                    + c.saturating_sub(2)
                    + (d - 1)
                    + d.saturating_sub(2)
                    + (c - 1)
                    + if d >= 2 { c - 1 } else { 0 };
                assert_eq!(r.records.len(), expected, "identities ({c},{d}) {field}");
            }
        }
    }
    within(Duration::from_secs(5), start, "identity suite");
}

fn c2_theorem_two_blocks() {
    let start = Instant::now();
    for field in [Q, fp(2), fp(3)] {
        for (c, d) in THEOREM_PAIRS {
            let t = Instant::now();
            let r = Job::Theorem { blocks: BlockSpec::two(c, d).unwrap(), field }.run(&cfg());
            assert_pass(&r);
            let w = c + d;
            assert_eq!(r.records.len(), w * (w - 1) / 2);
            within(Duration::from_secs(60), t, "theorem instance");
        }
    }
    within(Duration::from_secs(600), start, "theorem set");
}

fn c3_theorem_three_blocks() {
    for blocks in [vec![2, 2, 2], vec![2, 1, 2]] {
        let t = Instant::now();
        let r = Job::Theorem { blocks: BlockSpec::new(blocks).unwrap(), field: fp(3) }.run(&cfg());
        assert_pass(&r);
        within(Duration::from_secs(120), t, "three-block theorem");
    }
}

fn eval_at<K: Field>(f: &Polynomial<K>, point: &[i64]) -> K {
    let ctx = f.ring().ctx();
    let vals: Vec<K> = point.iter().map(|&v| K::from_i64(ctx, v)).collect();
    f.eval(&vals)
}

fn c4_example_one() {
    let start = Instant::now();
    let m: ScrollMatrix<Zp> = ScrollMatrix::two_block(2, 2, &fp(2)).unwrap();
    let j2 = m.char_p_set().unwrap();
    let shown: Vec<String> = j2.polys().iter().map(|p| p.to_string()).collect();
    assert_eq!(shown, ["x0*x2 + x1^2", "y0*y2 + y1^2", "x0*y2 + x2*y0"]);
    let full = minors_full(&m);
    let r = radical_contains(&full, &j2, &MonomialOrder::degrevlex(), &cfg().budget).unwrap();
    assert_pass(&r);
    assert_eq!(r.records.len(), 6);
    // brute force over F_2^6 against the enumerator
    let mut brute_full = vec![];
    let mut brute_j2 = vec![];
    for code in 0..64u32 {
        let pt: Vec<i64> = (0..6).map(|i| ((code >> (5 - i)) & 1) as i64).collect();
        if full.polys().iter().all(|g| eval_at(g, &pt).is_zero()) {
            brute_full.push(pt.clone());
        }
        if j2.polys().iter().all(|g| eval_at(g, &pt).is_zero()) {
            brute_j2.push(pt);
        }
    }
    assert_eq!(brute_full, brute_j2);
    let enumerated = points_vanishing(&full, &cfg().budget).unwrap();
    let as_i64: Vec<Vec<i64>> = enumerated.points.iter().map(|p| p.iter().map(|&v| v as i64).collect()).collect();
    assert_eq!(as_i64, brute_full);
    assert_eq!(points_vanishing(&j2, &cfg().budget).unwrap(), enumerated);
    within(Duration::from_secs(5), start, "example 1");
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_scrolls")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn c5_characteristic_separation() {
    let start = Instant::now();
    let point = [1i64, 1, 1, 1, -1, 1];
    let mq: ScrollMatrix<Rational> = ScrollMatrix::two_block(2, 2, &Q).unwrap();
    let m3: ScrollMatrix<Zp> = ScrollMatrix::two_block(2, 2, &fp(3)).unwrap();
    assert!(mq.char_p_set().unwrap().polys().iter().all(|g| eval_at(g, &point).is_zero()));
    assert!(!eval_at(&mq.minor(0, 2), &point).is_zero());
    assert!(m3.char_p_set().unwrap().polys().iter().all(|g| eval_at(g, &point).is_zero()));
    assert!(!eval_at(&m3.minor(0, 2), &point).is_zero());
    for (field, expected) in [("Q", ["1", "1", "1", "1", "-1", "1"]), ("Fp:3", ["1", "1", "1", "1", "2", "1"])] {
        let (code, out) = run_cli(&["verify", "corollary4", "--p", "2", "--h", "1", "--field", field, "--format", "json"]);
        assert_eq!(code, 1, "{out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["witness"]["polynomial"], "x0*y1 - x1*y0");
        let pt: Vec<String> = serde_json::from_value(v["witness"]["point"].clone()).unwrap();
        assert_eq!(pt, expected);
        // re-evaluate the reported point
        let vals: Vec<i64> = pt.iter().map(|s| s.parse().unwrap()).collect();
        match field {
            "Q" => {
                assert!(mq.char_p_set().unwrap().polys().iter().all(|g| eval_at(g, &vals).is_zero()));
                assert!(!eval_at(&mq.minor(0, 2), &vals).is_zero());
            }
            _ => {
                assert!(m3.char_p_set().unwrap().polys().iter().all(|g| eval_at(g, &vals).is_zero()));
                assert!(!eval_at(&m3.minor(0, 2), &vals).is_zero());
            }
        }
    }
    within(Duration::from_secs(1), start, "characteristic separation");
}

fn c6_corollary4() {
    for (p, h) in [(2u64, 1u32), (3, 1)] {
        let t = Instant::now();
        let r = Job::Corollary4 { p, h, field: fp(p as u32) }.run(&cfg());
        assert_pass(&r);
        within(Duration::from_secs(120), t, "corollary 4");
    }
}

fn c6_stretch() {
    let mut c = cfg();
    c.budget = c.budget.with_time_limit(Some(Duration::from_secs(1800)));
    let r = Job::Corollary4 { p: 2, h: 2, field: fp(2) }.run(&c);
    assert_pass(&r);
    let m: ScrollMatrix<Zp> = ScrollMatrix::two_block(4, 4, &fp(2)).unwrap();
    assert_eq!(m.char_p_set().unwrap().len(), 13);
}

fn c7_prop5a() {
    let start = Instant::now();
    for c in 2..=5 {
        assert_pass(&Job::Prop5a { c, field: Q }.run(&cfg()));
    }
    within(Duration::from_secs(120), start, "proposition 5a");
}

fn height_of(c: usize, d: usize) -> i64 {
    let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(c, d, &Q).unwrap();
    let dim = ideal_dimension(&minors_full(&m), &MonomialOrder::degrevlex(), &cfg().budget).unwrap();
    (c + d + 2) as i64 - dim
}

fn c8_complete_intersections() {
    let start = Instant::now();
    for (c, d) in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)] {
        let r = Job::Corollary6 { c, d, field: Q }.run(&cfg());
        assert_pass(&r);
        let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(c, d, &Q).unwrap();
        let n = if d == 1 { m.prop5_set().unwrap().len() } else { m.stci_set().unwrap().len() };
        let height = height_of(c, d);
        let expected = if d == 1 { height } else { height + 1 };
        assert_eq!(n as i64, expected, "({c},{d})");
    }
    within(Duration::from_secs(600), start, "corollary 6");
}

fn c8_display() {
    let start = Instant::now();
    let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(4, 3, &Q).unwrap();
    let shown: Vec<String> = m.stci_set().unwrap().polys().iter().map(|p| p.to_string()).collect();
    assert_eq!(
        shown,
        [
            "x0*x2 - x1^2",
            "x0*x3^2 - 2*x1*x2*x3 + x2^3",
            "x0*x4^3 - 3*x1*x3*x4^2 + 3*x2*x3^2*x4 - x3^4",
            "x0*y1^4 - 4*x1*y0*y1^3 + 6*x2*y0^2*y1^2 - 4*x3*y0^3*y1 + x4*y0^4",
            "y0*y2 - y1^2",
            "y0*y3^2 - 2*y1*y2*y3 + y2^3",
            "x0*y3 - x1*y2",
        ]
    );
    within(Duration::from_secs(1), start, "display of the (4,3) set");
}

fn c8_stretch() {
    let mut c = cfg();
    c.budget = c.budget.with_time_limit(Some(Duration::from_secs(1800)));
    assert_pass(&Job::Corollary6 { c: 4, d: 3, field: Q }.run(&c));
}

fn c9_lemmas() {
    let start = Instant::now();
    for c in 2..=5 {
        for d in 1..=3 {
            let r = Job::Lemma1 { c, d, field: Q }.run(&cfg());
            assert_pass(&r);
            assert_eq!(r.records.len(), c - 1);
        }
    }
    for c in 1..=4 {
        for d in 2..=4 {
            assert_pass(&Job::Lemma2 { c, d, field: Q }.run(&cfg()));
        }
    }
    for d in 1..=4 {
        let r = Job::Lemma3 { d, field: Q }.run(&cfg());
        assert_pass(&r);
        // 2d stepping stones, two single congruences, two main ones
        assert_eq!(r.records.len(), 2 * d + 4);
    }
    within(Duration::from_secs(300), start, "lemma suite");
}

fn c10_counts() {
    let start = Instant::now();
    for c in 1..=5 {
        for d in 1..=6 - c {
            let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(c, d, &Q).unwrap();
            let w = c + d;
            assert_eq!(minors_full(&m).len(), w * (w - 1) / 2);
            let reduced = minors_reduced(&m).len();
            if c == 1 && d == 1 {
                assert_eq!(reduced, 1);
            } else {
                let formula = binomial(c, 2) + binomial(d, 2) + 2;
                assert_eq!(reduced, usize::try_from(formula).unwrap());
            }
            if c == d {
                assert_eq!(m.char_p_set().unwrap().len(), d * (d - 1) + 1);
            }
            assert_eq!(height_of(c, d), (c + d - 1) as i64, "height ({c},{d})");
            assert_pass(&Job::Counts { blocks: BlockSpec::two(c, d).unwrap(), field: Q }.run(&cfg()));
        }
    }
    let m: ScrollMatrix<Rational> = ScrollMatrix::new(&BlockSpec::new(vec![2, 2, 2]).unwrap(), &Q).unwrap();
    assert_eq!(minors_full(&m).len(), 15);
    assert_eq!(minors_reduced(&m).len(), 9);
    within(Duration::from_secs(180), start, "counts");
}

fn c11_concordance() {
    let start = Instant::now();
    let mut jobs = vec![];
    for p in [2, 3] {
        for (c, d) in THEOREM_PAIRS {
            jobs.push(Job::TheoremPoints { blocks: BlockSpec::two(c, d).unwrap(), p });
        }
    }
    for blocks in [vec![2, 2, 2], vec![2, 1, 2]] {
        jobs.push(Job::TheoremPoints { blocks: BlockSpec::new(blocks).unwrap(), p: 3 });
    }
    jobs.push(Job::Corollary4Points { p: 2, h: 1, q: 2 });
    jobs.push(Job::Corollary4Points { p: 3, h: 1, q: 3 });
    // wrong characteristic: the rational witness must separate the zero sets
    jobs.push(Job::Corollary4Points { p: 2, h: 1, q: 3 });
    for job in &jobs {
        let r = job.run(&cfg());
        assert_pass(&r);
        if let Job::Corollary4Points { p: 2, q: 3, .. } = job {
            assert!(r.records.iter().any(|rec| rec.label.starts_with("witness")), "{r}");
            assert_eq!(r.params["equal"], false);
        } else {
            assert_eq!(r.params["equal"], true, "{r}");
        }
    }
    within(Duration::from_secs(300), start, "concordance");
}

fn main() {
    let criteria: Vec<(&str, bool, fn())> = vec![
        ("1 identity suite", true, c1_identities),
        ("2 theorem, two blocks", true, c2_theorem_two_blocks),
        ("3 theorem, three blocks", true, c3_theorem_three_blocks),
        ("4 example with three binomials", true, c4_example_one),
        ("5 characteristic separation", true, c5_characteristic_separation),
        ("6 characteristic-p radical equality", true, c6_corollary4),
        ("6 stretch (p,h)=(2,2)", false, c6_stretch),
        ("7 single-block complete intersection", true, c7_prop5a),
        ("8 (almost) complete intersections", true, c8_complete_intersections),
        ("8 display of the (4,3) generators", true, c8_display),
        ("8 stretch (4,3) radical verification", false, c8_stretch),
        ("9 lemma suite", true, c9_lemmas),
        ("10 counts and height", true, c10_counts),
        ("11 oracle concordance", true, c11_concordance),
    ];
    let mut failed = 0;
    for (name, gating, f) in criteria {
        let t = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
        let tag = if gating { "" } else { " [non-gating]" };
        println!(
            "criterion {name}: {}{tag} ({:.2} s)",
            if ok { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64()
        );
        if !ok && gating {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} gating criteria failed");
        std::process::exit(1);
    }
}
