//! Exhaustive zero sets over prime fields and small witness points.

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, Polynomial, Zp};
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::scrolls::GeneratorSet;

/// Common zeros of a generator set in `F_q^N`, sorted lexicographically by
/// residues in `[0, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet {
    pub q: u32,
    pub nvars: usize,
    pub points: Vec<Vec<u32>>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[u32]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(point)).is_ok()
    }
}

/// Largest variable index occurring in `f`, if any.
fn top_var<K: Field>(f: &Polynomial<K>) -> Option<usize> {
    f.terms()
        .iter()
        .filter_map(|(_, m)| m.exponents().iter().rposition(|&e| e > 0))
        .max()
}

/// Generators grouped by the depth after which they can be evaluated.
fn schedule<K: Field>(gens: &[Polynomial<K>], n: usize) -> (Vec<Vec<usize>>, bool) {
    let mut by_depth = vec![vec![]; n + 1];
    let mut nonzero_constant = false;
    for (k, g) in gens.iter().enumerate() {
        match top_var(g) {
            Some(v) => by_depth[v + 1].push(k),
            None => nonzero_constant |= !g.is_zero(),
        }
    }
    (by_depth, nonzero_constant)
}

/// All points of `F_p^N` on which every generator vanishes; `p` is the
/// characteristic of the generators' ring.
pub fn points_vanishing(gens: &GeneratorSet<Zp>, budget: &Budget) -> Result<PointSet> {
    let ring = gens.ring();
    let n = ring.nvars();
    let q = ring.ctx().get();
    let total = (q as f64).powi(n as i32);
    if total > budget.max_points as f64 {
        return Err(Error::BudgetExceeded(format!(
            "{q}^{n} points above the limit {}",
            budget.max_points
        )));
    }
    let (by_depth, dead) = schedule(gens.polys(), n);
    let mut points = vec![];
    if dead {
        return Ok(PointSet { q, nvars: n, points });
    }
    let ctx = ring.ctx();
    let values: Vec<Zp> = (0..q).map(|v| Zp::new(ctx, v as u64)).collect();
    let mut cur = vec![Zp::zero(ctx); n];
    let mut idx = vec![0u32; n];
    fn rec(
        depth: usize,
        gens: &[Polynomial<Zp>],
        by_depth: &[Vec<usize>],
        values: &[Zp],
        cur: &mut Vec<Zp>,
        idx: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if by_depth[depth].iter().any(|&k| !gens[k].eval(cur).is_zero()) {
            return;
        }
        if depth == cur.len() {
            out.push(idx.clone());
            return;
        }
        for (v, val) in values.iter().enumerate() {
            cur[depth] = val.clone();
            idx[depth] = v as u32;
            rec(depth + 1, gens, by_depth, values, cur, idx, out);
        }
        cur[depth] = values[0].clone();
    }
    rec(0, gens.polys(), &by_depth, &values, &mut cur, &mut idx, &mut points);
    budget.check_time()?;
    Ok(PointSet { q, nvars: n, points })
}

/// Search cap for [`find_witness_point`].
const WITNESS_NODES: usize = 2_000_000;

/// Searches small coordinates (in the order 1, -1, 0, 2, -2, ...) for a
/// point where all of `sup` vanishes but `target` does not. Coordinates are
/// returned as canonical field strings.
pub fn find_witness_point<K: Field>(sup: &[Polynomial<K>], target: &Polynomial<K>) -> Option<Vec<String>> {
    let ring = target.ring();
    let ctx = ring.ctx();
    let n = ring.nvars();
    let mut values: Vec<K> = vec![];
    for v in [1i64, -1, 0, 2, -2, 3, -3] {
        let x = K::from_i64(ctx, v);
        if !values.contains(&x) {
            values.push(x);
        }
    }
    let (by_depth, dead) = schedule(sup, n);
    if dead {
        return None;
    }
    let mut cur = vec![K::zero(ctx); n];
    let mut nodes = 0usize;
    #[allow(clippy::too_many_arguments)]
    fn rec<K: Field>(
        depth: usize,
        sup: &[Polynomial<K>],
        target: &Polynomial<K>,
        by_depth: &[Vec<usize>],
        values: &[K],
        cur: &mut Vec<K>,
        nodes: &mut usize,
    ) -> bool {
        *nodes += 1;
        if *nodes > WITNESS_NODES {
            return false;
        }
        if by_depth[depth].iter().any(|&k| !sup[k].eval(cur).is_zero()) {
            return false;
        }
        if depth == cur.len() {
            return !target.eval(cur).is_zero();
        }
        for v in values {
            cur[depth] = v.clone();
            if rec(depth + 1, sup, target, by_depth, values, cur, nodes) {
                return true;
            }
        }
        false
    }
    if rec(0, sup, target, &by_depth, &values, &mut cur, &mut nodes) {
        Some(cur.iter().map(|v| K::canonical_string(ctx, v)).collect())
    } else {
        None
    }
}

/// Re-checks a witness point by plain evaluation: every element of `sup`
/// vanishes there and `target` does not.
pub fn witness_holds<K: Field>(sup: &[Polynomial<K>], target: &Polynomial<K>, point: &[String]) -> Result<bool> {
    let ring = target.ring();
    if point.len() != ring.nvars() {
        return Ok(false);
    }
    let mut vals = Vec::with_capacity(point.len());
    for s in point {
        let c = Polynomial::parse(ring, s)?;
        vals.push(match c.terms().first() {
            None => K::zero(ring.ctx()),
            Some((k, m)) if m.is_one() => k.clone(),
            Some(_) => return Err(Error::Parse {
                position: 0,
                message: format!("`{s}` is not a constant"),
            }),
        });
    }
    Ok(sup.iter().all(|g| g.eval(&vals).is_zero()) && !target.eval(&vals).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldSpec, MonomialOrder, Rational, Ring};
    use crate::scrolls::{minors_full, ScrollMatrix};

    fn f(p: u32) -> FieldSpec {
        FieldSpec::PrimeField(p)
    }

    #[test]
    fn single_variable() {
        let r = Ring::<Zp>::with_spec(vec!["x0".into()], &f(2), MonomialOrder::default()).unwrap();
        let g = GeneratorSet::custom(&r, vec![Polynomial::var(&r, 0)]).unwrap();
        let pts = points_vanishing(&g, &Budget::default()).unwrap();
        assert_eq!(pts.points, vec![vec![0]]);
    }

    #[test]
    fn char_two_sets_agree() {
        let m: ScrollMatrix<Zp> = ScrollMatrix::two_block(2, 2, &f(2)).unwrap();
        let a = points_vanishing(&minors_full(&m), &Budget::default()).unwrap();
        let b = points_vanishing(&m.char_p_set().unwrap(), &Budget::default()).unwrap();
        assert_eq!(a, b);
        // brute force over all 64 points
        let full = minors_full(&m);
        let mut count = 0;
        for code in 0u32..64 {
            let pt: Vec<Zp> = (0..6).map(|i| Zp::new(m.ring().ctx(), ((code >> (5 - i)) & 1) as u64)).collect();
            if full.polys().iter().all(|g| g.eval(&pt).is_zero()) {
                count += 1;
            }
        }
        assert_eq!(a.len(), count);
    }

    #[test]
    fn char_three_separation() {
        let m: ScrollMatrix<Zp> = ScrollMatrix::two_block(2, 2, &f(3)).unwrap();
        let full = points_vanishing(&minors_full(&m), &Budget::default()).unwrap();
        let j2 = points_vanishing(&m.char_p_set().unwrap(), &Budget::default()).unwrap();
        assert!(j2.contains(&[1, 1, 1, 1, 2, 1]));
        assert!(!full.contains(&[1, 1, 1, 1, 2, 1]));
    }

    #[test]
    fn budget_on_points() {
        let m: ScrollMatrix<Zp> = ScrollMatrix::two_block(2, 2, &f(3)).unwrap();
        let tight = Budget::default().with_max_points(100);
        assert!(matches!(points_vanishing(&minors_full(&m), &tight), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn witness_search() {
        let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(2, 2, &FieldSpec::Rationals).unwrap();
        let j2 = m.char_p_set().unwrap();
        let target = m.minor(0, 2);
        let w = find_witness_point(j2.polys(), &target).unwrap();
        assert_eq!(w, ["1", "1", "1", "1", "-1", "1"]);
        assert!(witness_holds(j2.polys(), &target, &w).unwrap());

        let m3: ScrollMatrix<Zp> = ScrollMatrix::two_block(2, 2, &f(3)).unwrap();
        let w = find_witness_point(m3.char_p_set().unwrap().polys(), &m3.minor(0, 2)).unwrap();
        assert_eq!(w, ["1", "1", "1", "1", "2", "1"]);

        // no witness when target is in the ideal
        assert!(find_witness_point(j2.polys(), &m.minor(0, 1)).is_none());
    }
}
