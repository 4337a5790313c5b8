//! Executable checks for the scroll identities, memberships and radical
//! equalities.

use std::time::Instant;

use super::points::{points_vanishing, witness_holds};
use super::report::{Method, Record, Verdict, VerificationReport, Witness};
use crate::algebra::{Field, FieldSpec, MonomialOrder, Polynomial, Zp};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_dimension, ideal_member, radical_contains, radical_member, Budget};
use crate::scrolls::{binomial, minors_full, minors_reduced, BlockSpec, Family, GeneratorSet, ScrollMatrix, SetName};

/// Order and limits shared by all checks.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub order: MonomialOrder,
    pub budget: Budget,
    /// Reconstruct and re-expand cofactors for exact memberships.
    pub certificates: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            order: MonomialOrder::default(),
            budget: Budget::default(),
            certificates: true,
        }
    }
}

impl CheckConfig {
    fn restarted(&self) -> CheckConfig {
        CheckConfig {
            order: self.order.clone(),
            budget: self.budget.restarted(),
            certificates: self.certificates,
        }
    }
}

type P<K> = Polynomial<K>;

/// `a*b - c*d`
fn bin<K: Field>(a: &P<K>, b: &P<K>, c: &P<K>, d: &P<K>) -> P<K> {
    &(a * b) - &(c * d)
}

fn finish(mut report: VerificationReport, start: Instant) -> VerificationReport {
    report.settle();
    report.millis = Some(start.elapsed().as_millis() as u64);
    report
}

fn identity<K: Field>(report: &mut VerificationReport, label: String, lhs: P<K>, rhs: P<K>) {
    let diff = &lhs - &rhs;
    let ok = diff.is_zero();
    if !ok {
        report.fail_with(Witness::polynomial(&diff));
    }
    report.push(Record::check(label, ok, Method::Identity));
}

/// Exact membership record; a failure carries the polynomial as witness.
fn member<K: Field>(
    report: &mut VerificationReport,
    label: String,
    f: &P<K>,
    gens: &GeneratorSet<K>,
    cfg: &CheckConfig,
) -> Result<bool> {
    let v = ideal_member(f, gens, &cfg.order, &cfg.budget, cfg.certificates)?;
    if !v.member {
        report.fail_with(Witness::polynomial(f));
    }
    report.push(Record::check(label, v.member, Method::Membership));
    Ok(v.member)
}

fn radical<K: Field>(
    report: &mut VerificationReport,
    label: String,
    f: &P<K>,
    gens: &GeneratorSet<K>,
    cfg: &CheckConfig,
) -> Result<bool> {
    let v = radical_member(f, gens, &cfg.order, &cfg.budget)?;
    if !v.member {
        let point = super::points::find_witness_point(gens.polys(), f);
        report.fail_with(Witness::new(Some(f), point));
    }
    report.push(Record::check(label, v.member, Method::Rabinowitsch));
    Ok(v.member)
}

fn contains_all<K: Field>(
    report: &mut VerificationReport,
    sub: &GeneratorSet<K>,
    sup: &GeneratorSet<K>,
    cfg: &CheckConfig,
) -> Result<()> {
    let r = radical_contains(sub, sup, &cfg.order, &cfg.budget)?;
    for rec in r.records {
        report.push(rec);
    }
    if let Some(w) = r.witness {
        report.fail_with(w);
    }
    Ok(())
}

fn count(report: &mut VerificationReport, label: &str, got: usize, expected: usize) {
    let ok = got == expected;
    if !ok {
        report.fail_with(Witness::text(format!("{label}: {got} != {expected}")));
    }
    report.push(Record::check(format!("{label} = {expected}"), ok, Method::Count));
}

fn field_param<K: Field>(report: &mut VerificationReport, m: &ScrollMatrix<K>) {
    report.param("field", m.ring().field().to_string());
}

/// The polynomial identities behind the membership claims, each expanded
/// exactly for every admissible index with the given `c`, `d`.
pub fn check_identity_suite<K: Field>(c: usize, d: usize, field: &FieldSpec) -> Result<VerificationReport> {
    let start = Instant::now();
    let m: ScrollMatrix<K> = ScrollMatrix::two_block(c, d, field)?;
    let mut report = VerificationReport::new("identities", vec![Method::Identity]);
    report.param("c", c).param("d", d);
    field_param(&mut report, &m);
    let x = |i| m.x(i);
    let y = |j| m.y(j);
    let h = |j| bin(&x(0), &y(j), &x(1), &y(j - 1)); // x0*y_j - x1*y_{j-1}
    let v = |i| bin(&x(i - 1), &y(1), &x(i), &y(0)); // x_{i-1}*y1 - x_i*y0
    if c >= 2 {
        // x1 (x0 y1 - x1 y0) = x0 (x1 y1 - x2 y0) + y0 (x0 x2 - x1^2)
        let lhs = &x(1) * &v(1);
        let rhs = &(&x(0) * &v(2)) + &(&y(0) * &bin(&x(0), &x(2), &x(1), &x(1)));
        identity(&mut report, "base: x1*(x0*y1 - x1*y0)".into(), lhs, rhs);
    }
    for i in 3..=c {
        let lhs = &(&x(1) * &v(1)) * &v(i - 1);
        let y0y1 = &y(0) * &y(1);
        let y0y0 = &y(0) * &y(0);
        let y1y1 = &y(1) * &y(1);
        let t1 = &bin(&x(i - 2), &y0y1, &x(i - 1), &y0y0) * &bin(&x(0), &x(2), &x(1), &x(1));
        let t2 = &(&x(0) * &y1y1) * &bin(&x(0), &x(i - 1), &x(1), &x(i - 2));
        let t3 = &(&x(0) * &y0y1) * &bin(&x(0), &x(i), &x(2), &x(i - 2));
        let t4 = &(&x(0) * &y0y0) * &bin(&x(1), &x(i), &x(2), &x(i - 1));
        let t5 = &(&x(0) * &v(1)) * &v(i);
        let rhs = &(&(&(&t1 - &t2) + &t3) - &t4) + &t5;
        identity(&mut report, format!("x-chain i={i}"), lhs, rhs);
    }
    for j in 2..=d {
        // y_{j-1} (x0 y_{j-1} - x1 y_{j-2})
        let lhs = &y(j - 1) * &h(j - 1);
        let rhs = &(&x(0) * &bin(&y(j - 2), &y(j), &y(j - 1), &y(j - 1))).neg() + &(&y(j - 2) * &h(j));
        identity(&mut report, format!("y-step j={j}"), lhs, rhs);
    }
    for j in 3..=d {
        // y_{j-2} (x0 y_{j-1} - x1 y_{j-2})
        let lhs = &y(j - 2) * &h(j - 1);
        let rhs = &(&(&x(0) * &bin(&y(j - 3), &y(j), &y(j - 1), &y(j - 2))).neg() + &(&y(j - 3) * &h(j)))
            + &(&x(1) * &bin(&y(j - 3), &y(j - 1), &y(j - 2), &y(j - 2)));
        identity(&mut report, format!("y-shift j={j}"), lhs, rhs);
    }
    // x_i (x_i y_d - x_{i+1} y_{d-1}) for i = 1 (first corner) and 1 < i < c
    for i in 1..c {
        let lhs = &x(i) * &bin(&x(i), &y(d), &x(i + 1), &y(d - 1));
        let rhs = &(&bin(&x(i - 1), &x(i + 1), &x(i), &x(i)) * &y(d)).neg()
            + &(&x(i + 1) * &bin(&x(i - 1), &y(d), &x(i), &y(d - 1)));
        let label = if i == 1 { "x-corner".to_string() } else { format!("x-corner i={i}") };
        identity(&mut report, label, lhs, rhs);
    }
    // y_{d-1} (x_i y_d - x_{i+1} y_{d-1})
    if d >= 2 {
        for i in 1..c {
            let lhs = &y(d - 1) * &bin(&x(i), &y(d), &x(i + 1), &y(d - 1));
            let rhs = &(&bin(&y(d - 2), &y(d), &y(d - 1), &y(d - 1)) * &x(i + 1))
                + &(&y(d) * &bin(&x(i), &y(d - 1), &x(i + 1), &y(d - 2)));
            let label = if i == 1 { "y-corner".to_string() } else { format!("y-corner i={i}") };
            identity(&mut report, label, lhs, rhs);
        }
    }
    Ok(finish(report, start))
}

/// `x_1^{i-1} (x_0 y_1 - x_1 y_0)^{i-1}` lies in `J_{i,d}` for `i = 2..c`.
pub fn check_lemma1<K: Field>(c: usize, d: usize, field: &FieldSpec, cfg: &CheckConfig) -> Result<VerificationReport> {
    if c < 2 || d < 1 {
        return Err(Error::InvalidSpec(format!("c >= 2, d >= 1 required, got ({c},{d})")));
    }
    let start = Instant::now();
    let cfg = cfg.restarted();
    let m: ScrollMatrix<K> = ScrollMatrix::two_block(c, d, field)?;
    let mut report = VerificationReport::new("lemma1", vec![Method::Membership]);
    report.param("c", c).param("d", d);
    field_param(&mut report, &m);
    let base = m.corner_tail(1);
    for i in 2..=c {
        let e = (i - 1) as u32;
        let f = &m.x(1).pow(e) * &base.pow(e);
        let j = m.family(Family::J, i, d)?;
        member(&mut report, format!("x1^{e}*(x0*y1 - x1*y0)^{e} in J({i},{d})"), &f, &j, &cfg)?;
    }
    Ok(finish(report, start))
}

/// `J_{c,j-1} ⊆ Rad(J_{c,j})` for `j = 2..d`, with the exact memberships
/// used along the way.
pub fn check_lemma2<K: Field>(c: usize, d: usize, field: &FieldSpec, cfg: &CheckConfig) -> Result<VerificationReport> {
    if c < 1 || d < 2 {
        return Err(Error::InvalidSpec(format!("c >= 1, d >= 2 required, got ({c},{d})")));
    }
    let start = Instant::now();
    let cfg = cfg.restarted();
    let m: ScrollMatrix<K> = ScrollMatrix::two_block(c, d, field)?;
    let mut report = VerificationReport::new("lemma2", vec![Method::Rabinowitsch]);
    report.param("c", c).param("d", d);
    field_param(&mut report, &m);
    for j in 2..=d {
        let big = m.family(Family::J, c, j)?;
        let small = m.family(Family::J, c, j - 1)?;
        let corner = m.corner_head(j - 1);
        radical(&mut report, format!("{corner} in Rad J({c},{j})"), &corner, &big, &cfg)?;
        let f = &m.y(j - 1) * &corner;
        member(&mut report, format!("y{}*({corner}) in J({c},{j})", j - 1), &f, &big, &cfg)?;
        if j >= 3 {
            let f = &m.y(j - 2) * &corner;
            member(&mut report, format!("y{}*({corner}) in J({c},{j})", j - 2), &f, &big, &cfg)?;
        }
        if j == 2 && c >= 2 {
            let e = (c - 1) as u32;
            let f = &m.x(1).pow(e) * &m.corner_tail(1).pow(e);
            member(&mut report, format!("x1^{e}*(x0*y1 - x1*y0)^{e} in J({c},2)"), &f, &big, &cfg)?;
        }
        let r = radical_contains(&small, &big, &cfg.order, &cfg.budget)?;
        for rec in r.records {
            report.push(Record::new(
                format!("J({c},{}) ⊆ Rad J({c},{j}): {}", j - 1, rec.label),
                rec.verdict,
                rec.method,
            ));
        }
        if let Some(w) = r.witness {
            report.fail_with(w);
        }
    }
    Ok(finish(report, start))
}

/// The congruences modulo `(S_d)`, `(T_d)` and `J_d` on the `(d, d)` matrix.
pub fn check_lemma3<K: Field>(d: usize, field: &FieldSpec, cfg: &CheckConfig) -> Result<VerificationReport> {
    if d < 1 {
        return Err(Error::InvalidSpec("d >= 1 required".into()));
    }
    let start = Instant::now();
    let cfg = cfg.restarted();
    let m: ScrollMatrix<K> = ScrollMatrix::two_block(d, d, field)?;
    let mut report = VerificationReport::new("lemma3", vec![Method::Membership]);
    report.param("d", d);
    field_param(&mut report, &m);
    let ring = m.ring();
    let s = GeneratorSet::custom(ring, m.block_minors(0))?;
    let t = GeneratorSet::custom(ring, m.block_minors(1))?;
    let jd = m.char_p_set()?;
    let gs = buchberger(&s, &cfg.order, &cfg.budget)?;
    let gt = buchberger(&t, &cfg.order, &cfg.budget)?;
    let gj = buchberger(&jd, &cfg.order, &cfg.budget)?;
    let (x, y) = (|i| m.x(i), |j| m.y(j));
    let du = d as u32;
    let congruent = |report: &mut VerificationReport, label: String, diff: P<K>, gb: &crate::groebner::GroebnerBasis<K>| -> Result<()> {
        let nf = gb.normal_form(&diff.embed(gb.ring())?)?;
        if !nf.is_zero() {
            report.fail_with(Witness::polynomial(&diff));
        }
        report.push(Record::check(label, nf.is_zero(), Method::Membership));
        Ok(())
    };
    let lead_x = &x(0).pow(du - 1) * &x(d);
    let lead_y = &y(d).pow(du - 1) * &y(0);
    for k in 0..d {
        let k32 = k as u32;
        let rhs = &(&x(1).pow(k32) * &x(d - k)) * &x(0).pow(du - k32 - 1);
        congruent(&mut report, format!("x0^{}*x{d} = x1^{k}*x{}*x0^{} mod S", d - 1, d - k, d - k - 1), &lead_x - &rhs, &gs)?;
        let rhs = &(&y(d - 1).pow(k32) * &y(k)) * &y(d).pow(du - k32 - 1);
        congruent(&mut report, format!("y{d}^{}*y0 = y{}^{k}*y{k}*y{d}^{} mod T", d - 1, d - 1, d - k - 1), &lead_y - &rhs, &gt)?;
    }
    congruent(&mut report, format!("x0^{}*x{d} = x1^{d} mod S", d - 1), &lead_x - &x(1).pow(du), &gs)?;
    congruent(&mut report, format!("y{d}^{}*y0 = y{}^{d} mod T", d - 1, d - 1), &lead_y - &y(d - 1).pow(du), &gt)?;
    let a = &x(0).pow(du) * &y(d).pow(du);
    let b = &x(1).pow(du) * &y(d - 1).pow(du);
    congruent(&mut report, format!("x0^{d}*y{d}^{d} = x1^{d}*y{}^{d} mod J", d - 1), &a - &b, &gj)?;
    let a = &x(d).pow(du) * &y(0).pow(du);
    let b = &x(d - 1).pow(du) * &y(1).pow(du);
    congruent(&mut report, format!("x{d}^{d}*y0^{d} = x{}^{d}*y1^{d} mod J", d - 1), &a - &b, &gj)?;
    Ok(finish(report, start))
}

/// The full minor ideal and the reduced set have the same radical.
pub fn verify_theorem_main<K: Field>(spec: &BlockSpec, field: &FieldSpec, cfg: &CheckConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let cfg = cfg.restarted();
    let m: ScrollMatrix<K> = ScrollMatrix::new(spec, field)?;
    let full = minors_full(&m);
    let red = minors_reduced(&m);
    let mut report = VerificationReport::new("theorem", vec![Method::Syntactic, Method::Rabinowitsch]);
    report.param("blocks", spec.to_string());
    field_param(&mut report, &m);
    let subset = red.is_subset_of(&full);
    report.param("reduced_subset_of_full", subset);
    if !subset {
        let bad = red.polys().iter().find(|p| !full.contains(p)).unwrap();
        report.fail_with(Witness::polynomial(bad));
    }
    contains_all(&mut report, &full, &red, &cfg)?;
    let mut report = finish(report, start);
    if !subset {
        report.verdict = Verdict::Fail;
    }
    Ok(report)
}

fn prime_power(p: u64, h: u32) -> Result<usize> {
    if !crate::algebra::is_prime(p) {
        return Err(Error::InvalidSpec(format!("{p} is not prime")));
    }
    if h == 0 {
        return Err(Error::InvalidSpec("h >= 1 required".into()));
    }
    p.checked_pow(h)
        .filter(|d| *d <= 64)
        .map(|d| d as usize)
        .ok_or_else(|| Error::InvalidSpec(format!("{p}^{h} too large")))
}

/// In characteristic `p`, `I_{d,d}` and `J_d` have the same radical for
/// `d = p^h`. Over another field the check fails with a witness.
pub fn verify_corollary4<K: Field>(p: u64, h: u32, field: &FieldSpec, cfg: &CheckConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let cfg = cfg.restarted();
    let d = prime_power(p, h)?;
    let m: ScrollMatrix<K> = ScrollMatrix::two_block(d, d, field)?;
    let full = minors_full(&m);
    let jd = m.char_p_set()?;
    let mut report = VerificationReport::new("corollary4", vec![]);
    report.param("p", p).param("h", h).param("d", d);
    field_param(&mut report, &m);
    contains_all(&mut report, &full, &jd, &cfg)?;
    // J_d ⊆ I: prefix minors are minors; the last binomial is an exact member
    for g in jd.polys() {
        if full.contains(g) {
            report.push(Record::new(format!("{g} is a minor"), Verdict::Pass, Method::Syntactic));
        } else {
            member(&mut report, format!("{g} in I"), g, &full, &cfg)?;
        }
    }
    if field.characteristic() == p {
        // (x0 y_d - x1 y_{d-1})^d = x0^d y_d^d - x1^d y_{d-1}^d, which lies in J_d
        let du = d as u32;
        let corner = m.corner_head(d);
        let frob = &(&m.x(0).pow(du) * &m.y(d).pow(du)) - &(&m.x(1).pow(du) * &m.y(d - 1).pow(du));
        identity(&mut report, format!("({corner})^{d} = {frob}"), corner.pow(du), frob.clone());
        member(&mut report, format!("{frob} in J"), &frob, &jd, &cfg)?;
    }
    Ok(finish(report, start))
}

/// In characteristic `p`, `F_1..F_{d-1}, G_1..G_{d-1}, x_0 y_d - x_d y_0`
/// generate `I_{d,d}` up to radical: `2d - 1` polynomials, the height.
pub fn verify_corollary4a<K: Field>(p: u64, h: u32, field: &FieldSpec, cfg: &CheckConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let cfg = cfg.restarted();
    let d = prime_power(p, h)?;
    let m: ScrollMatrix<K> = ScrollMatrix::two_block(d, d, field)?;
    let full = minors_full(&m);
    let set = m.stci_char_p_set()?;
    let mut report = VerificationReport::new("corollary4a", vec![]);
    report.param("p", p).param("h", h).param("d", d);
    field_param(&mut report, &m);
    contains_all(&mut report, &full, &set, &cfg)?;
    for g in set.polys() {
        member(&mut report, format!("{g} in I"), g, &full, &cfg)?;
    }
    count(&mut report, "generators = height", set.len(), 2 * d - 1);
    Ok(finish(report, start))
}

/// `(S_c) = Rad(F_1, ..., F_{c-1})` on a single block of `c` columns.
pub fn verify_prop5a<K: Field>(c: usize, field: &FieldSpec, cfg: &CheckConfig) -> Result<VerificationReport> {
    if c < 2 {
        return Err(Error::InvalidSpec(format!("c >= 2 required, got {c}")));
    }
    let start = Instant::now();
    let cfg = cfg.restarted();
    let m: ScrollMatrix<K> = ScrollMatrix::new(&BlockSpec::new(vec![c])?, field)?;
    let mut s = GeneratorSet::custom(m.ring(), m.block_minors(0))?;
    s.name = SetName::Si;
    let f = m.hankel_f_set();
    let mut report = VerificationReport::new("prop5a", vec![]);
    report.param("c", c);
    field_param(&mut report, &m);
    for g in f.polys() {
        member(&mut report, format!("{g} in (S)"), g, &s, &cfg)?;
    }
    contains_all(&mut report, &s, &f, &cfg)?;
    Ok(finish(report, start))
}

/// Every minor of `A_{c,d}` is in the radical of the `c + d` polynomials
/// `F_1..F_c, G_1..G_{d-1}, x_0 y_d - x_1 y_{d-1}`, which lie in `I_{c,d}`.
/// For `d = 1` the `c` polynomials `F_1..F_c` are used instead.
pub fn verify_corollary6<K: Field>(c: usize, d: usize, field: &FieldSpec, cfg: &CheckConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let cfg = cfg.restarted();
    let m: ScrollMatrix<K> = ScrollMatrix::two_block(c, d, field)?;
    let full = minors_full(&m);
    let (set, expected, check) = if d == 1 {
        (m.prop5_set()?, c, "prop5")
    } else {
        (m.stci_set()?, c + d, "corollary6")
    };
    let mut report = VerificationReport::new(check, vec![]);
    report.param("c", c).param("d", d).param("height", c + d - 1);
    field_param(&mut report, &m);
    contains_all(&mut report, &full, &set, &cfg)?;
    for g in set.polys() {
        member(&mut report, format!("{g} in I"), g, &full, &cfg)?;
    }
    let label = if d == 1 { "generators = height" } else { "generators = height + 1" };
    count(&mut report, label, set.len(), expected);
    Ok(finish(report, start))
}

/// Reduced-set size: within-block minors plus two corner minors per block
/// pair (one when both blocks have a single column, as the two coincide).
pub fn expected_reduced_count(columns: &[usize]) -> usize {
    let mut n: usize = columns.iter().map(|&c| c * c.saturating_sub(1) / 2).sum();
    for i in 0..columns.len() {
        for j in i + 1..columns.len() {
            n += if columns[i] == 1 && columns[j] == 1 { 1 } else { 2 };
        }
    }
    n
}

/// Cardinalities of the generator sets and the height `sum c_i - 1` of the
/// minor ideal.
pub fn check_counts_and_height<K: Field>(spec: &BlockSpec, field: &FieldSpec, cfg: &CheckConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let cfg = cfg.restarted();
    let m: ScrollMatrix<K> = ScrollMatrix::new(spec, field)?;
    let mut report = VerificationReport::new("counts", vec![]);
    report.param("blocks", spec.to_string());
    field_param(&mut report, &m);
    let w = spec.width();
    let n = spec.nvars();
    let full = minors_full(&m);
    count(&mut report, "full minors", full.len(), w * (w - 1) / 2);
    count(&mut report, "reduced set", minors_reduced(&m).len(), expected_reduced_count(spec.columns()));
    if let [c, d] = *spec.columns() {
        if c >= 2 && d >= 2 {
            let formula = binomial(c, 2) + binomial(d, 2) + 2;
            count(&mut report, "reduced set (two blocks)", minors_reduced(&m).len(), usize::try_from(formula).unwrap());
            count(&mut report, "almost complete intersection", m.stci_set()?.len(), c + d);
        }
        if c == d {
            count(&mut report, "characteristic-p set", m.char_p_set()?.len(), d * (d - 1) + 1);
        }
        if d == 1 && c >= 2 {
            count(&mut report, "complete intersection", m.prop5_set()?.len(), c);
        }
    }
    let dim = ideal_dimension(&full, &cfg.order, &cfg.budget)?;
    let height = n as i64 - dim;
    report.param("height", height);
    let ok = height == w as i64 - 1;
    if !ok {
        report.fail_with(Witness::text(format!("height {height}, expected {}", w - 1)));
    }
    report.push(Record::check(format!("height = {}", w - 1), ok, Method::Dimension));
    Ok(finish(report, start))
}

/// Compares a radical-containment verdict `sub ⊆ Rad(sup)` with the zero
/// sets of both sides over `F_p`. A pass must give `V(sup) ⊆ V(sub)`; a
/// failure with a witness point must show that point in `V(sup) \ V(sub)`.
pub fn points_concordance(
    sub: &GeneratorSet<Zp>,
    sup: &GeneratorSet<Zp>,
    verdict: &VerificationReport,
    budget: &Budget,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("concordance", vec![Method::Points]);
    report.param("sub", sub.name.to_string()).param("sup", sup.name.to_string());
    report.param("field", sup.ring().field().to_string());
    let vsub = points_vanishing(sub, budget)?;
    let vsup = points_vanishing(sup, budget)?;
    report.param("points_sub", vsub.len()).param("points_sup", vsup.len());
    let inclusion = vsup.points.iter().all(|p| vsub.contains(p));
    report.param("equal", vsub == vsup);
    match verdict.verdict {
        Verdict::Pass => {
            if !inclusion {
                let p = vsup.points.iter().find(|p| !vsub.contains(p)).unwrap();
                report.fail_with(Witness {
                    polynomial: None,
                    point: Some(p.iter().map(|v| v.to_string()).collect()),
                });
            }
            report.push(Record::check("V(sup) ⊆ V(sub) after a pass", inclusion, Method::Points));
        }
        Verdict::Fail => {
            if let Some(pt) = verdict.witness.as_ref().and_then(|w| w.point.clone()) {
                let idx: Vec<u32> = pt.iter().map(|s| s.parse().unwrap_or(u32::MAX)).collect();
                let ok = vsup.contains(&idx) && !vsub.contains(&idx);
                report.push(Record::check(
                    format!("witness ({}) in V(sup) \\ V(sub)", pt.join(",")),
                    ok,
                    Method::Points,
                ));
            }
        }
        Verdict::Budget => {}
    }
    Ok(finish(report, start))
}

/// Re-checks a report's witness point by evaluation against `sup`.
pub fn recheck_witness<K: Field>(report: &VerificationReport, sup: &GeneratorSet<K>) -> Result<bool> {
    let Some(w) = &report.witness else {
        return Ok(false);
    };
    let (Some(poly), Some(point)) = (&w.polynomial, &w.point) else {
        return Ok(false);
    };
    let f = Polynomial::parse(sup.ring(), poly)?;
    witness_holds(sup.polys(), &f, point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn identities_small() {
        for c in 1..=4 {
            for d in 1..=4 {
                let r = check_identity_suite::<Rational>(c, d, &Q).unwrap();
                assert!(r.passed(), "{r}");
            }
        }
        let r = check_identity_suite::<Zp>(3, 3, &FieldSpec::PrimeField(2)).unwrap();
        assert!(r.passed());
        assert!(r.records.iter().any(|r| r.label.starts_with("base")));
    }

    #[test]
    fn lemmas_small() {
        let cfg = CheckConfig::default();
        assert!(check_lemma1::<Rational>(3, 2, &Q, &cfg).unwrap().passed());
        assert!(check_lemma1::<Rational>(2, 1, &Q, &cfg).unwrap().passed());
        assert!(check_lemma2::<Rational>(2, 2, &Q, &cfg).unwrap().passed());
        assert!(check_lemma2::<Rational>(1, 3, &Q, &cfg).unwrap().passed());
        assert!(check_lemma3::<Rational>(2, &Q, &cfg).unwrap().passed());
        assert!(check_lemma3::<Rational>(1, &Q, &cfg).unwrap().passed());
        assert!(check_lemma3::<Zp>(3, &FieldSpec::PrimeField(3), &cfg).unwrap().passed());
    }

    #[test]
    fn theorem_small() {
        let cfg = CheckConfig::default();
        let r = verify_theorem_main::<Rational>(&BlockSpec::two(2, 2).unwrap(), &Q, &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.records.len(), 6);
        let r = verify_theorem_main::<Rational>(&BlockSpec::two(1, 1).unwrap(), &Q, &cfg).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn corollary4_characteristics() {
        let cfg = CheckConfig::default();
        let r = verify_corollary4::<Zp>(2, 1, &FieldSpec::PrimeField(2), &cfg).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_corollary4::<Rational>(2, 1, &Q, &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let w = r.witness.as_ref().unwrap();
        assert_eq!(w.polynomial.as_deref(), Some("x0*y1 - x1*y0"));
        let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(2, 2, &Q).unwrap();
        assert!(recheck_witness(&r, &m.char_p_set().unwrap()).unwrap());
    }

    #[test]
    fn complete_intersections_small() {
        let cfg = CheckConfig::default();
        assert!(verify_prop5a::<Rational>(3, &Q, &cfg).unwrap().passed());
        assert!(verify_corollary6::<Rational>(2, 2, &Q, &cfg).unwrap().passed());
        assert!(verify_corollary6::<Rational>(2, 1, &Q, &cfg).unwrap().passed());
        assert!(verify_corollary4a::<Zp>(2, 1, &FieldSpec::PrimeField(2), &cfg).unwrap().passed());
    }

    #[test]
    fn counts_small() {
        let cfg = CheckConfig::default();
        for (c, d) in [(1, 1), (2, 2), (4, 3), (3, 1)] {
            let r = check_counts_and_height::<Rational>(&BlockSpec::two(c, d).unwrap(), &Q, &cfg).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert_eq!(expected_reduced_count(&[4, 3]), 11);
        assert_eq!(expected_reduced_count(&[1, 1]), 1);
        assert_eq!(expected_reduced_count(&[2, 2, 2]), 9);
    }
}
