//! Ideal and radical membership.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use super::{extend_basis, groebner_basis, Budget, GroebnerBasis};
use crate::algebra::{Field, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::scrolls::GeneratorSet;
use crate::verify::{find_witness_point, Method, Record, Verdict, VerificationReport, Witness};

/// Why a membership verdict holds.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate<K: Field> {
    /// `f = sum h_k g_k` over the input generators, in their ring.
    Cofactors(Vec<Polynomial<K>>),
    /// The normal form of `f` modulo the ideal is zero (exact membership).
    NormalFormZero,
    /// `J + (1 - t*f)` reduced to the basis `{1}` in the ring extended by `t`.
    UnitIdeal { variable: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipVerdict<K: Field> {
    pub member: bool,
    pub certificate: Option<Certificate<K>>,
}

fn order_ring<K: Field>(gens: &GeneratorSet<K>, order: &MonomialOrder) -> Result<Arc<Ring<K>>> {
    gens.ring().with_order(order.clone())
}

fn check_ring<K: Field>(f: &Polynomial<K>, gens: &GeneratorSet<K>) -> Result<()> {
    if f.ring().names() != gens.ring().names() || f.ring().ctx() != gens.ring().ctx() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Exact membership `f in (gens)`. With `certificate`, cofactors `h_k` with
/// `f = sum h_k g_k` are reconstructed and re-expanded before returning.
pub fn ideal_member<K: Field>(
    f: &Polynomial<K>,
    gens: &GeneratorSet<K>,
    order: &MonomialOrder,
    budget: &Budget,
    certificate: bool,
) -> Result<MembershipVerdict<K>> {
    check_ring(f, gens)?;
    if f.is_zero() {
        let cert = certificate.then(|| {
            Certificate::Cofactors(vec![Polynomial::zero(gens.ring()); gens.len()])
        });
        return Ok(MembershipVerdict {
            member: true,
            certificate: cert,
        });
    }
    let ring = order_ring(gens, order)?;
    let polys = gens
        .polys()
        .iter()
        .map(|p| p.embed(&ring))
        .collect::<Result<Vec<_>>>()?;
    let gb = groebner_basis(&ring, &polys, budget, certificate)?;
    let fe = f.embed(&ring)?;
    if !certificate {
        let member = gb.contains(&fe)?;
        return Ok(MembershipVerdict {
            member,
            certificate: member.then_some(Certificate::NormalFormZero),
        });
    }
    let (quotients, rem) = gb.divide(&fe)?;
    if !rem.is_zero() {
        return Ok(MembershipVerdict {
            member: false,
            certificate: None,
        });
    }
    let reps = gb.representations().expect("tracked run");
    let mut cofactors = vec![Polynomial::zero(&ring); polys.len()];
    for (q, rep) in quotients.iter().zip(reps) {
        if q.is_zero() {
            continue;
        }
        for (h, r) in cofactors.iter_mut().zip(rep) {
            *h = &*h + &(q * r);
        }
    }
    let mut acc = Polynomial::zero(&ring);
    for (h, g) in cofactors.iter().zip(&polys) {
        acc = &acc + &(h * g);
    }
    assert_eq!(acc, fe, "cofactor certificate does not re-expand");
    let cofactors = cofactors
        .iter()
        .map(|h| h.embed(gens.ring()))
        .collect::<Result<Vec<_>>>()?;
    Ok(MembershipVerdict {
        member: true,
        certificate: Some(Certificate::Cofactors(cofactors)),
    })
}

/// Radical membership oracle for a fixed ideal; the Gröbner basis of the
/// ideal is computed once and reused as the seed for each query.
pub struct RadicalOracle<K: Field> {
    gb: GroebnerBasis<K>,
    ext: Arc<Ring<K>>,
    t: String,
    budget: Budget,
}

impl<K: Field> RadicalOracle<K> {
    pub fn new(gens: &GeneratorSet<K>, order: &MonomialOrder, budget: &Budget) -> Result<Self> {
        let ring = order_ring(gens, order)?;
        let polys = gens
            .polys()
            .iter()
            .map(|p| p.embed(&ring))
            .collect::<Result<Vec<_>>>()?;
        let gb = groebner_basis(&ring, &polys, budget, false)?;
        let t = ring.fresh_name("t");
        let ext = ring.with_extra_var(&t)?;
        Ok(RadicalOracle {
            gb,
            ext,
            t,
            budget: budget.clone(),
        })
    }

    pub fn basis(&self) -> &GroebnerBasis<K> {
        &self.gb
    }

    pub fn member(&self, f: &Polynomial<K>) -> Result<MembershipVerdict<K>> {
        if f.ring().names() != self.gb.ring().names() || f.ring().ctx() != self.gb.ring().ctx() {
            return Err(Error::RingMismatch);
        }
        let nf = self.gb.normal_form(&f.embed(self.gb.ring())?)?;
        if nf.is_zero() {
            return Ok(MembershipVerdict {
                member: true,
                certificate: Some(Certificate::NormalFormZero),
            });
        }
        if self.gb.is_unit_ideal() {
            return Ok(MembershipVerdict {
                member: true,
                certificate: Some(Certificate::UnitIdeal {
                    variable: self.t.clone(),
                }),
            });
        }
        let t = Polynomial::var_named(&self.ext, &self.t)?;
        let rab = &Polynomial::one(&self.ext) - &(&t * &nf.embed(&self.ext)?);
        let ext_gb = extend_basis(&self.gb, &self.ext, &[rab], &self.budget)?;
        let member = ext_gb.is_unit_ideal();
        Ok(MembershipVerdict {
            member,
            certificate: member.then(|| Certificate::UnitIdeal {
                variable: self.t.clone(),
            }),
        })
    }
}

/// `f in Rad(gens)`, via the Rabinowitsch trick.
pub fn radical_member<K: Field>(
    f: &Polynomial<K>,
    gens: &GeneratorSet<K>,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<MembershipVerdict<K>> {
    check_ring(f, gens)?;
    RadicalOracle::new(gens, order, budget)?.member(f)
}

/// `sub ⊆ Rad(sup)`: one Rabinowitsch query per element of `sub`, run in
/// parallel and reported in input order. A failure names the first failing
/// generator and, when a small common zero of `sup` exists where it does not
/// vanish, that point.
pub fn radical_contains<K: Field>(
    sub: &GeneratorSet<K>,
    sup: &GeneratorSet<K>,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if sub.ring().names() != sup.ring().names() || sub.ring().ctx() != sup.ring().ctx() {
        return Err(Error::RingMismatch);
    }
    let oracle = RadicalOracle::new(sup, order, budget)?;
    let verdicts: Vec<Result<MembershipVerdict<K>>> =
        sub.polys().par_iter().map(|g| oracle.member(g)).collect();
    let mut records = vec![];
    let mut witness = None;
    for (g, v) in sub.polys().iter().zip(verdicts) {
        let v = v?;
        let method = match v.certificate {
            Some(Certificate::NormalFormZero) => Method::Membership,
            _ => Method::Rabinowitsch,
        };
        let verdict = if v.member { Verdict::Pass } else { Verdict::Fail };
        if !v.member && witness.is_none() {
            let point = find_witness_point(sup.polys(), g);
            witness = Some(Witness::new(Some(g), point));
        }
        records.push(Record::new(format!("{g} in Rad"), verdict, method));
    }
    let mut report = VerificationReport::new("radical_contains", vec![Method::Rabinowitsch]);
    report.param("sub", sub.name.to_string());
    report.param("sup", sup.name.to_string());
    report.param("field", sup.ring().field().to_string());
    report.records = records;
    report.witness = witness;
    report.settle();
    report.millis = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}
