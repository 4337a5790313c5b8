//! Buchberger's algorithm, normal forms, membership and dimension.
//!
//! Pairs are handled with the Gebauer–Möller installation of Buchberger's
//! two criteria and selected by the normal strategy (smallest lcm degree,
//! then sugar). Basis elements are kept monic. A run can optionally track,
//! for every basis element, its expression in terms of the input
//! generators; membership certificates are read off from that.

mod dimension;
mod membership;

pub use dimension::ideal_dimension;
pub use membership::{
    ideal_member, radical_contains, radical_member, Certificate, MembershipVerdict, RadicalOracle,
};

use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, Monomial, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::scrolls::GeneratorSet;

/// Resource caps for Gröbner runs and point enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_degree: u32,
    pub max_points: u64,
    pub time_limit: Option<Duration>,
    deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 200_000,
            max_degree: 60,
            max_points: 10_000_000,
            time_limit: None,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn with_max_pairs(mut self, n: usize) -> Self {
        self.max_pairs = n;
        self
    }

    pub fn with_max_degree(mut self, n: u32) -> Self {
        self.max_degree = n;
        self
    }

    pub fn with_max_points(mut self, n: u64) -> Self {
        self.max_points = n;
        self
    }

    pub fn with_time_limit(mut self, limit: Option<Duration>) -> Self {
        self.time_limit = limit;
        self.deadline = limit.map(|d| Instant::now() + d);
        self
    }

    /// Copy whose wall-clock allowance starts now.
    pub fn restarted(&self) -> Self {
        let mut b = self.clone();
        b.deadline = b.time_limit.map(|d| Instant::now() + d);
        b
    }

    pub(crate) fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded(format!(
                "wall time above {} ms",
                self.time_limit.map(|t| t.as_millis()).unwrap_or(0)
            ))),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbStats {
    /// S-pairs taken from the queue and reduced.
    pub pairs: usize,
    /// Elementary reduction steps.
    pub reductions: usize,
    /// Largest total degree of any polynomial entering the basis.
    pub maxdeg: u32,
}

/// A reduced Gröbner basis: monic elements, no term of any element divisible
/// by another element's leading monomial, sorted by increasing leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<K: Field> {
    ring: Arc<Ring<K>>,
    elements: Vec<Polynomial<K>>,
    source_count: usize,
    pub stats: GbStats,
    /// `representations[e][k]`: cofactor of input generator `k` in element `e`.
    representations: Option<Vec<Vec<Polynomial<K>>>>,
}

/// Serialized basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GbJson {
    pub order: String,
    pub elements: Vec<String>,
    pub stats: GbStats,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn ring(&self) -> &Arc<Ring<K>> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<K>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn source_count(&self) -> usize {
        self.source_count
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().filter_map(|e| e.leading_monomial())
    }

    pub fn representations(&self) -> Option<&[Vec<Polynomial<K>>]> {
        self.representations.as_deref()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial<K>) -> Result<Polynomial<K>> {
        if !f.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(reduce_by(&self.ring, f.clone(), &self.elements, true, &mut 0))
    }

    pub fn contains(&self, f: &Polynomial<K>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Division with quotients: `f = sum q_e * element_e + remainder`.
    pub fn divide(&self, f: &Polynomial<K>) -> Result<(Vec<Polynomial<K>>, Polynomial<K>)> {
        if !f.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let ctx = self.ring.ctx();
        let mut quotients: Vec<Vec<(K, Monomial)>> = vec![vec![]; self.elements.len()];
        let mut p: Vec<(K, Monomial)> = f.terms().iter().rev().cloned().collect();
        let mut rem: Vec<(K, Monomial)> = vec![];
        while let Some((c, m)) = p.last().cloned() {
            match find_divisor(&m, &self.elements) {
                Some((k, q)) => {
                    let g = &self.elements[k];
                    let coef = K::div(ctx, &c, g.leading_coeff().unwrap())?;
                    quotients[k].push((coef.clone(), q.clone()));
                    p.pop();
                    sub_tail_ascending(&self.ring, &mut p, &coef, &q, g);
                }
                None => {
                    rem.push((c, m));
                    p.pop();
                }
            }
        }
        let qs = quotients
            .into_iter()
            .map(|t| Polynomial::from_terms(&self.ring, t))
            .collect();
        Ok((qs, Polynomial::from_sorted_terms(&self.ring, rem)))
    }

    pub fn to_json(&self) -> GbJson {
        GbJson {
            order: self.ring.order().kind.to_string(),
            elements: self.elements.iter().map(|e| e.to_string()).collect(),
            stats: self.stats,
        }
    }
}

/// First basis element (by index) whose leading monomial divides `m`.
fn find_divisor<'a, K: Field>(m: &Monomial, basis: &'a [Polynomial<K>]) -> Option<(usize, Monomial)> {
    basis.iter().enumerate().find_map(|(k, g)| {
        g.leading_monomial()
            .and_then(|lm| lm.quotient_of(m))
            .map(|q| (k, q))
    })
}

/// `p -= coef * q * (g without its leading term)` where `p` is stored in
/// ascending order (leading term last) and has already had its leading term
/// removed.
fn sub_tail_ascending<K: Field>(
    ring: &Arc<Ring<K>>,
    p: &mut Vec<(K, Monomial)>,
    coef: &K,
    q: &Monomial,
    g: &Polynomial<K>,
) {
    let ctx = ring.ctx();
    let ord = ring.order();
    // g's tail in ascending order, scaled
    let tail: Vec<(K, Monomial)> = g.terms()[1..]
        .iter()
        .rev()
        .map(|(c, m)| (K::neg(ctx, &K::mul(ctx, c, coef)), m.mul(q)))
        .collect();
    if tail.is_empty() {
        return;
    }
    let old = std::mem::take(p);
    let mut out = Vec::with_capacity(old.len() + tail.len());
    let (mut i, mut j) = (0, 0);
    while i < old.len() && j < tail.len() {
        match ord.compare(&old[i].1, &tail[j].1) {
            std::cmp::Ordering::Less => {
                out.push(old[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(tail[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let s = K::add(ctx, &old[i].0, &tail[j].0);
                if !s.is_zero() {
                    out.push((s, old[i].1.clone()));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&old[i..]);
    out.extend_from_slice(&tail[j..]);
    *p = out;
}

/// Reduces `f` by `basis` (whose elements must be monic). With `full` the
/// tail is reduced too; otherwise stops at the first irreducible leading
/// term.
fn reduce_by<K: Field>(
    ring: &Arc<Ring<K>>,
    f: Polynomial<K>,
    basis: &[Polynomial<K>],
    full: bool,
    steps: &mut usize,
) -> Polynomial<K> {
    let mut p: Vec<(K, Monomial)> = f.into_terms();
    p.reverse();
    let mut rem: Vec<(K, Monomial)> = vec![];
    while let Some((c, m)) = p.last().cloned() {
        match find_divisor(&m, basis) {
            Some((k, q)) => {
                p.pop();
                *steps += 1;
                sub_tail_ascending(ring, &mut p, &c, &q, &basis[k]);
            }
            None => {
                p.pop();
                rem.push((c, m));
                if !full {
                    break;
                }
            }
        }
    }
    while let Some(t) = p.pop() {
        rem.push(t);
    }
    Polynomial::from_sorted_terms(ring, rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Incremental Buchberger state.
struct Engine<K: Field> {
    ring: Arc<Ring<K>>,
    polys: Vec<Polynomial<K>>,
    sugar: Vec<u32>,
    reps: Option<Vec<Vec<Polynomial<K>>>>,
    /// Indices of the current basis `G`, in insertion order.
    basis: Vec<usize>,
    pairs: Vec<Pair>,
    stats: GbStats,
    budget: Budget,
    unit: Option<usize>,
}

impl<K: Field> Engine<K> {
    fn new(ring: &Arc<Ring<K>>, budget: &Budget, track: bool) -> Self {
        Engine {
            ring: ring.clone(),
            polys: vec![],
            sugar: vec![],
            reps: track.then(Vec::new),
            basis: vec![],
            pairs: vec![],
            stats: GbStats::default(),
            budget: budget.clone(),
            unit: None,
        }
    }

    fn basis_polys(&self) -> Vec<Polynomial<K>> {
        self.basis.iter().map(|&k| self.polys[k].clone()).collect()
    }

    /// Reduces with representation tracking.
    fn reduce_tracked(
        &mut self,
        f: Polynomial<K>,
        mut rep: Vec<Polynomial<K>>,
        full: bool,
    ) -> (Polynomial<K>, Vec<Polynomial<K>>) {
        let mut p: Vec<(K, Monomial)> = f.into_terms();
        p.reverse();
        let mut rem = vec![];
        let basis = self.basis_polys();
        let reps = self.reps.as_ref().unwrap();
        while let Some((c, m)) = p.last().cloned() {
            match find_divisor(&m, &basis) {
                Some((k, q)) => {
                    p.pop();
                    self.stats.reductions += 1;
                    sub_tail_ascending(&self.ring, &mut p, &c, &q, &basis[k]);
                    let src = &reps[self.basis[k]];
                    for (r, s) in rep.iter_mut().zip(src) {
                        *r = r.sub_mul_term(&c, &q, s);
                    }
                }
                None => {
                    p.pop();
                    rem.push((c, m));
                    if !full {
                        break;
                    }
                }
            }
        }
        while let Some(t) = p.pop() {
            rem.push(t);
        }
        (Polynomial::from_sorted_terms(&self.ring, rem), rep)
    }

    fn reduce(&mut self, f: Polynomial<K>) -> Polynomial<K> {
        let basis = self.basis_polys();
        let mut steps = 0;
        let r = reduce_by(&self.ring, f, &basis, true, &mut steps);
        self.stats.reductions += steps;
        r
    }

    /// Adds an element already known to be compatible with the current basis
    /// (warm start from a Gröbner basis): no pairs are formed.
    fn seed(&mut self, g: Polynomial<K>) {
        let deg = g.degree().unwrap_or(0);
        self.polys.push(g);
        self.sugar.push(deg);
        self.basis.push(self.polys.len() - 1);
    }

    /// Reduces `f` and, if nonzero, inserts it into the basis.
    fn add(&mut self, f: Polynomial<K>, sugar: u32, rep: Option<Vec<Polynomial<K>>>) -> Result<()> {
        let (h, rep) = match rep {
            Some(r) => {
                let (h, r) = self.reduce_tracked(f, r, true);
                (h, Some(r))
            }
            None => (self.reduce(f), None),
        };
        if h.is_zero() {
            return Ok(());
        }
        let deg = h.degree().unwrap();
        if deg > self.budget.max_degree {
            return Err(Error::BudgetExceeded(format!(
                "intermediate degree {deg} above {}",
                self.budget.max_degree
            )));
        }
        self.stats.maxdeg = self.stats.maxdeg.max(deg);
        let lc = h.leading_coeff().unwrap().clone();
        let inv = K::inv(self.ring.ctx(), &lc)?;
        let h = h.scale(&inv);
        let rep = rep.map(|r| r.into_iter().map(|p| p.scale(&inv)).collect());
        let idx = self.polys.len();
        let is_unit = h.is_unit();
        self.polys.push(h);
        self.sugar.push(sugar.max(deg));
        if let (Some(reps), Some(r)) = (self.reps.as_mut(), rep) {
            reps.push(r);
        }
        if is_unit {
            self.unit = Some(idx);
            self.basis = vec![idx];
            self.pairs.clear();
            return Ok(());
        }
        self.update(idx);
        Ok(())
    }

    /// Gebauer–Möller update with the new basis element `h`.
    fn update(&mut self, h: usize) {
        let lt_h = self.polys[h].leading_monomial().unwrap().clone();
        let cand: Vec<(usize, Monomial, bool)> = self
            .basis
            .iter()
            .map(|&g| {
                let lt_g = self.polys[g].leading_monomial().unwrap();
                (g, lt_h.lcm(lt_g), lt_h.is_coprime(lt_g))
            })
            .collect();
        // chain criterion among the new pairs
        let mut keep = vec![true; cand.len()];
        for a in 0..cand.len() {
            if cand[a].2 {
                continue;
            }
            let dominated = (0..cand.len()).any(|b| {
                b != a && keep[b] && (b > a || true) && {
                    let divides = cand[b].1.divides(&cand[a].1);
                    // among equal lcms keep the last one processed
                    divides && (cand[b].1 != cand[a].1 || b > a)
                }
            });
            if dominated {
                keep[a] = false;
            }
        }
        // old pairs eliminated by the new leading monomial
        self.pairs.retain(|p| {
            let li = self.polys[p.i].leading_monomial().unwrap();
            let lj = self.polys[p.j].leading_monomial().unwrap();
            !(lt_h.divides(&p.lcm) && li.lcm(&lt_h) != p.lcm && lj.lcm(&lt_h) != p.lcm)
        });
        // product criterion
        for (k, (g, lcm, coprime)) in cand.into_iter().enumerate() {
            if !keep[k] || coprime {
                continue;
            }
            let s = self.pair_sugar(g, h, &lcm);
            self.pairs.push(Pair {
                i: g,
                j: h,
                lcm,
                sugar: s,
            });
        }
        self.basis.retain(|&g| !lt_h.divides(self.polys[g].leading_monomial().unwrap()));
        self.basis.push(h);
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let di = lcm.degree() - self.polys[i].leading_monomial().unwrap().degree();
        let dj = lcm.degree() - self.polys[j].leading_monomial().unwrap().degree();
        (self.sugar[i] + di).max(self.sugar[j] + dj)
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let ord = self.ring.order();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then(a.sugar.cmp(&b.sugar))
                    .then_with(|| ord.compare(&a.lcm, &b.lcm))
                    .then((a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, pair: &Pair) -> (Polynomial<K>, Option<Vec<Polynomial<K>>>) {
        let ctx = self.ring.ctx();
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let qf = f.leading_monomial().unwrap().quotient_of(&pair.lcm).unwrap();
        let qg = g.leading_monomial().unwrap().quotient_of(&pair.lcm).unwrap();
        let one = K::one(ctx);
        let s = &f.mul_term(&one, &qf) - &g.mul_term(&one, &qg);
        let rep = self.reps.as_ref().map(|reps| {
            reps[pair.i]
                .iter()
                .zip(&reps[pair.j])
                .map(|(a, b)| &a.mul_term(&one, &qf) - &b.mul_term(&one, &qg))
                .collect()
        });
        (s, rep)
    }

    fn run(&mut self) -> Result<()> {
        while self.unit.is_none() {
            let Some(pair) = self.select_pair() else {
                break;
            };
            self.stats.pairs += 1;
            if self.stats.pairs > self.budget.max_pairs {
                return Err(Error::BudgetExceeded(format!(
                    "more than {} S-pairs",
                    self.budget.max_pairs
                )));
            }
            if pair.lcm.degree() > self.budget.max_degree {
                return Err(Error::BudgetExceeded(format!(
                    "S-pair degree {} above {}",
                    pair.lcm.degree(),
                    self.budget.max_degree
                )));
            }
            if self.stats.pairs % 64 == 0 {
                self.budget.check_time()?;
            }
            let (s, rep) = self.s_polynomial(&pair);
            self.add(s, pair.sugar, rep)?;
        }
        Ok(())
    }

    /// Interreduces the current basis into the reduced Gröbner basis.
    fn finish(mut self, source_count: usize) -> Result<GroebnerBasis<K>> {
        self.budget.check_time()?;
        let ord = self.ring.order().clone();
        let mut idx = self.basis.clone();
        idx.sort_by(|&a, &b| {
            ord.compare(
                self.polys[a].leading_monomial().unwrap(),
                self.polys[b].leading_monomial().unwrap(),
            )
        });
        let mut elements = vec![];
        let mut reps = self.reps.as_ref().map(|_| vec![]);
        for (pos, &k) in idx.iter().enumerate() {
            let others: Vec<Polynomial<K>> = idx
                .iter()
                .enumerate()
                .filter(|(p, _)| *p != pos)
                .map(|(_, &o)| self.polys[o].clone())
                .collect();
            let f = self.polys[k].clone();
            // leading term is irreducible by the others (minimal basis); reduce the tail
            let lead = Polynomial::from_sorted_terms(&self.ring, vec![f.terms()[0].clone()]);
            let tail = Polynomial::from_sorted_terms(&self.ring, f.terms()[1..].to_vec());
            match self.reps.as_ref() {
                None => {
                    let mut steps = 0;
                    let t = reduce_by(&self.ring, tail, &others, true, &mut steps);
                    self.stats.reductions += steps;
                    elements.push(&lead + &t);
                }
                Some(all) => {
                    // tracked reduction against the other elements
                    let other_idx: Vec<usize> = idx
                        .iter()
                        .enumerate()
                        .filter(|(p, _)| *p != pos)
                        .map(|(_, &o)| o)
                        .collect();
                    let mut rep = all[k].clone();
                    let mut p: Vec<(K, Monomial)> = tail.into_terms();
                    p.reverse();
                    let mut rem = vec![];
                    while let Some((c, m)) = p.last().cloned() {
                        match find_divisor(&m, &others) {
                            Some((o, q)) => {
                                p.pop();
                                self.stats.reductions += 1;
                                sub_tail_ascending(&self.ring, &mut p, &c, &q, &others[o]);
                                for (r, s) in rep.iter_mut().zip(&all[other_idx[o]]) {
                                    *r = r.sub_mul_term(&c, &q, s);
                                }
                            }
                            None => {
                                p.pop();
                                rem.push((c, m));
                            }
                        }
                    }
                    let t = Polynomial::from_sorted_terms(&self.ring, rem);
                    elements.push(&lead + &t);
                    reps.as_mut().unwrap().push(rep);
                }
            }
        }
        Ok(GroebnerBasis {
            ring: self.ring,
            elements,
            source_count,
            stats: self.stats,
            representations: reps,
        })
    }
}

/// Computes the reduced Gröbner basis of `polys` in their ring.
pub fn groebner_basis<K: Field>(
    ring: &Arc<Ring<K>>,
    polys: &[Polynomial<K>],
    budget: &Budget,
    track: bool,
) -> Result<GroebnerBasis<K>> {
    let mut engine = Engine::new(ring, budget, track);
    let ngens = polys.len();
    for (k, f) in polys.iter().enumerate() {
        if !f.ring().same_as(ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            continue;
        }
        let rep = track.then(|| {
            (0..ngens)
                .map(|l| {
                    if l == k {
                        Polynomial::one(ring)
                    } else {
                        Polynomial::zero(ring)
                    }
                })
                .collect()
        });
        engine.add(f.clone(), f.degree().unwrap(), rep)?;
        if engine.unit.is_some() {
            break;
        }
    }
    engine.run()?;
    engine.finish(ngens)
}

/// Extends a known Gröbner basis by further polynomials (untracked).
pub(crate) fn extend_basis<K: Field>(
    gb: &GroebnerBasis<K>,
    ring: &Arc<Ring<K>>,
    extra: &[Polynomial<K>],
    budget: &Budget,
) -> Result<GroebnerBasis<K>> {
    let mut engine = Engine::new(ring, budget, false);
    for g in gb.elements() {
        engine.seed(g.embed(ring)?);
    }
    if gb.is_unit_ideal() {
        engine.unit = Some(0);
    }
    for f in extra {
        if engine.unit.is_some() {
            break;
        }
        if !f.is_zero() {
            engine.add(f.clone(), f.degree().unwrap(), None)?;
        }
    }
    engine.run()?;
    engine.finish(gb.source_count + extra.len())
}

/// Reduced Gröbner basis of a generator set under `order`.
pub fn buchberger<K: Field>(
    gens: &GeneratorSet<K>,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis<K>> {
    let ring = gens.ring().with_order(order.clone())?;
    let polys = gens
        .polys()
        .iter()
        .map(|p| p.embed(&ring))
        .collect::<Result<Vec<_>>>()?;
    groebner_basis(&ring, &polys, budget, false)
}

/// Remainder of `f` modulo `gb`.
pub fn normal_form<K: Field>(f: &Polynomial<K>, gb: &GroebnerBasis<K>) -> Result<Polynomial<K>> {
    gb.normal_form(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldSpec, Rational, Zp};
    use crate::scrolls::{gens_family, Family, ScrollMatrix};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn ring(names: &[&str]) -> Arc<Ring<Rational>> {
        Ring::new(names.iter().map(|s| s.to_string()).collect(), (), MonomialOrder::degrevlex()).unwrap()
    }

    fn strs<K: Field>(gb: &GroebnerBasis<K>) -> Vec<String> {
        gb.elements().iter().map(|e| e.to_string()).collect()
    }

    #[test]
    fn principal_ideal() {
        let r = ring(&["x0", "x1", "x2"]);
        let f = Polynomial::parse(&r, "x0*x2 - x1^2").unwrap();
        let gb = groebner_basis(&r, &[f.clone()], &Budget::default(), false).unwrap();
        assert_eq!(gb.elements(), &[f.monic()]);
        let g = Polynomial::parse(&r, "2*x0*x2 - 2*x1^2").unwrap();
        let gb2 = groebner_basis(&r, &[g], &Budget::default(), false).unwrap();
        assert!(gb2.elements()[0].leading_coeff().unwrap().is_one());
    }

    #[test]
    fn monomial_generators() {
        let r = ring(&["x1_0", "x1_1"]);
        let a = Polynomial::var(&r, 0);
        let b = Polynomial::var(&r, 1);
        let gb = groebner_basis(&r, &[a.clone(), b.clone()], &Budget::default(), false).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(gb.elements().contains(&a) && gb.elements().contains(&b));
    }

    #[test]
    fn zeros_are_filtered_and_unit_detected() {
        let r = ring(&["x", "y"]);
        let p = |s| Polynomial::parse(&r, s).unwrap();
        let gb = groebner_basis(&r, &[p("0"), p("x*y - 1"), p("x")], &Budget::default(), false).unwrap();
        assert!(gb.is_unit_ideal());
        let empty = groebner_basis(&r, &[p("0")], &Budget::default(), false).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.normal_form(&p("x + 1")).unwrap(), p("x + 1"));
    }

    #[test]
    fn s3_is_already_reduced() {
        let s3: GeneratorSet<Rational> = gens_family(Family::S, 3, 1, 3, 1, &Q).unwrap();
        let ring = s3.ring().clone();
        // oracle: every S-polynomial of the binomials divides out to zero
        let naive_reduce = |mut f: Polynomial<Rational>, gens: &[Polynomial<Rational>]| {
            'outer: loop {
                for (c, m) in f.terms().to_vec() {
                    for g in gens {
                        let lm = g.leading_monomial().unwrap();
                        if let Some(q) = lm.quotient_of(&m) {
                            let k = c.clone() / g.leading_coeff().unwrap().clone();
                            f = &f - &g.mul_term(&k, &q);
                            continue 'outer;
                        }
                    }
                }
                return f;
            }
        };
        let gens = s3.polys();
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                let (la, lb) = (gens[a].leading_monomial().unwrap(), gens[b].leading_monomial().unwrap());
                let l = la.lcm(lb);
                let one = Rational::from_integer(1.into());
                let sa = gens[a].mul_term(&(one.clone() / gens[a].leading_coeff().unwrap().clone()), &la.quotient_of(&l).unwrap());
                let sb = gens[b].mul_term(&(one / gens[b].leading_coeff().unwrap().clone()), &lb.quotient_of(&l).unwrap());
                assert!(naive_reduce(&sa - &sb, gens).is_zero());
            }
        }
        let gb = buchberger(&s3, &MonomialOrder::degrevlex(), &Budget::default()).unwrap();
        assert_eq!(gb.len(), 3);
        for g in gens {
            assert!(gb.elements().contains(&g.monic()));
        }
        assert!(Arc::ptr_eq(&ring, s3.ring()));
    }

    #[test]
    fn normal_form_examples() {
        let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(3, 3, &Q).unwrap();
        let s3 = m.family(Family::S, 3, 1).unwrap();
        let gb = buchberger(&s3, &MonomialOrder::degrevlex(), &Budget::default()).unwrap();
        let f = &(&m.x(0).pow(2) * &m.x(3)) - &m.x(1).pow(3);
        assert!(normal_form(&f, &gb).unwrap().is_zero());
        for g in s3.polys() {
            assert!(normal_form(g, &gb).unwrap().is_zero());
        }
        let r = ring(&["x0", "x1", "x2"]);
        let gb1 = groebner_basis(&r, &[Polynomial::parse(&r, "x0*x2 - x1^2").unwrap()], &Budget::default(), false).unwrap();
        let x0 = Polynomial::var(&r, 0);
        assert_eq!(normal_form(&x0, &gb1).unwrap(), x0);
    }

    #[test]
    fn normal_form_ring_mismatch() {
        let r = ring(&["x0", "x1", "x2"]);
        let gb = groebner_basis(&r, &[Polynomial::var(&r, 0)], &Budget::default(), false).unwrap();
        let other = ring(&["a"]);
        assert_eq!(gb.normal_form(&Polynomial::var(&other, 0)), Err(Error::RingMismatch));
    }

    #[test]
    fn lex_basis_of_twisted_cubic() {
        // (x0,x1,x2,x3) = (s^3, s^2 t, s t^2, t^3): the 2-minors of the 2x3 Hankel matrix
        let r = ring(&["x0", "x1", "x2", "x3"]).with_order(MonomialOrder::lex()).unwrap();
        let p = |s| Polynomial::parse(&r, s).unwrap();
        let gens = [p("x0*x2 - x1^2"), p("x0*x3 - x1*x2"), p("x1*x3 - x2^2")];
        let gb = groebner_basis(&r, &gens, &Budget::default(), false).unwrap();
        for e in gb.elements() {
            for g in gb.elements() {
                if e != g {
                    // reducedness
                    let lm = g.leading_monomial().unwrap();
                    assert!(e.terms().iter().all(|(_, m)| !lm.divides(m)));
                }
            }
        }
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn budget_limits() {
        let r = ring(&["x", "y", "z"]);
        let p = |s| Polynomial::parse(&r, s).unwrap();
        let gens = [p("x^2 - y*z"), p("y^2 - x*z + x"), p("x*y - z^2 + 1")];
        let tight = Budget::default().with_max_pairs(1);
        assert!(matches!(
            groebner_basis(&r, &gens, &tight, false),
            Err(Error::BudgetExceeded(_))
        ));
        let low_degree = Budget::default().with_max_degree(2);
        assert!(matches!(
            groebner_basis(&r, &gens, &low_degree, false),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(groebner_basis(&r, &gens, &Budget::default(), false).is_ok());
    }

    #[test]
    fn tracked_representations_expand_correctly() {
        let m: ScrollMatrix<Zp> = ScrollMatrix::two_block(2, 2, &FieldSpec::PrimeField(3)).unwrap();
        let j = m.char_p_set().unwrap();
        let gb = groebner_basis(m.ring(), j.polys(), &Budget::default(), true).unwrap();
        let reps = gb.representations().unwrap();
        for (e, rep) in gb.elements().iter().zip(reps) {
            let mut acc = Polynomial::zero(m.ring());
            for (h, g) in rep.iter().zip(j.polys()) {
                acc = &acc + &(h * g);
            }
            assert_eq!(&acc, e);
        }
        let plain = groebner_basis(m.ring(), j.polys(), &Budget::default(), false).unwrap();
        assert_eq!(plain.elements(), gb.elements());
    }

    #[test]
    fn determinism() {
        let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(3, 2, &Q).unwrap();
        let g = crate::scrolls::minors_full(&m);
        let a = buchberger(&g, &MonomialOrder::degrevlex(), &Budget::default()).unwrap();
        let b = buchberger(&g, &MonomialOrder::degrevlex(), &Budget::default()).unwrap();
        assert_eq!(strs(&a), strs(&b));
        assert_eq!(a.stats, b.stats);
    }
}
