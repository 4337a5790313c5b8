//! Krull dimension from leading monomials.

use super::{buchberger, Budget};
use crate::algebra::{Field, MonomialOrder};
use crate::error::{Error, Result};
use crate::scrolls::GeneratorSet;

/// Largest number of variables handled by the subset search.
pub const MAX_DIMENSION_VARS: usize = 16;

/// Krull dimension of `R/(gens)`: the size of a largest set of variables
/// containing the support of no leading monomial of the Gröbner basis.
/// The unit ideal gives -1.
pub fn ideal_dimension<K: Field>(
    gens: &GeneratorSet<K>,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<i64> {
    let n = gens.ring().nvars();
    if n > MAX_DIMENSION_VARS {
        return Err(Error::BudgetExceeded(format!(
            "dimension search over {n} variables (limit {MAX_DIMENSION_VARS})"
        )));
    }
    let gb = buchberger(gens, order, budget)?;
    if gb.is_unit_ideal() {
        return Ok(-1);
    }
    let masks: Vec<u64> = gb.leading_monomials().map(|m| m.support_mask()).collect();
    let mut best = 0u32;
    for s in 0u64..(1 << n) {
        let size = s.count_ones();
        if size > best && masks.iter().all(|&m| m & !s != 0) {
            best = size;
        }
    }
    Ok(best as i64)
}
