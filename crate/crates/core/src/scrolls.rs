//! Block-catalecticant matrices and the generating sets built from them.
//!
//! A block spec `(c_1, ..., c_r)` gives the `2 x (c_1 + ... + c_r)` matrix
//! whose `i`th block has columns `(x_{i,j}, x_{i,j+1})` for `0 <= j < c_i`.
//! With one or two blocks the variables are called `x0..` and `y0..`;
//! otherwise `x{i}_{j}` with 1-based block index.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Field, FieldSpec, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};

/// Column counts of the catalecticant blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockSpec {
    columns: Vec<usize>,
}

impl BlockSpec {
    pub fn new(columns: Vec<usize>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::InvalidSpec("at least one block is required".into()));
        }
        if let Some(i) = columns.iter().position(|&c| c == 0) {
            return Err(Error::InvalidSpec(format!("block {} has no columns", i + 1)));
        }
        Ok(BlockSpec { columns })
    }

    pub fn two(c: usize, d: usize) -> Result<Self> {
        Self::new(vec![c, d])
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn blocks(&self) -> usize {
        self.columns.len()
    }

    /// Total number of matrix columns.
    pub fn width(&self) -> usize {
        self.columns.iter().sum()
    }

    /// Number of distinct indeterminates, `r + sum c_i`.
    pub fn nvars(&self) -> usize {
        self.blocks() + self.width()
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for BlockSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cols = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("bad block size `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(cols)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Naming {
    /// `x_j`/`y_j` for one or two blocks, `x{i}_{j}` otherwise.
    #[default]
    Aliases,
    /// Always `x{i}_{j}`.
    Canonical,
}

pub fn variable_names(spec: &BlockSpec, naming: Naming) -> Vec<String> {
    let alias = naming == Naming::Aliases && spec.blocks() <= 2;
    let mut names = vec![];
    for (b, &c) in spec.columns().iter().enumerate() {
        for j in 0..=c {
            names.push(if alias {
                format!("{}{}", ["x", "y"][b], j)
            } else {
                format!("x{}_{}", b + 1, j)
            });
        }
    }
    names
}

/// The block matrix together with its polynomial ring.
#[derive(Clone, Debug)]
pub struct ScrollMatrix<K: Field> {
    spec: BlockSpec,
    ring: Arc<Ring<K>>,
    /// `(top, bottom)` variable indices of every column.
    columns: Vec<(usize, usize)>,
    /// First matrix column of each block.
    block_start: Vec<usize>,
    /// First variable of each block.
    var_start: Vec<usize>,
}

impl<K: Field> ScrollMatrix<K> {
    pub fn new(spec: &BlockSpec, field: &FieldSpec) -> Result<Self> {
        Self::with_options(spec, field, Naming::Aliases, MonomialOrder::default())
    }

    pub fn with_options(
        spec: &BlockSpec,
        field: &FieldSpec,
        naming: Naming,
        order: MonomialOrder,
    ) -> Result<Self> {
        let ring = Ring::with_spec(variable_names(spec, naming), field, order)?;
        Ok(Self::in_ring(spec, ring))
    }

    fn in_ring(spec: &BlockSpec, ring: Arc<Ring<K>>) -> Self {
        let mut columns = vec![];
        let mut block_start = vec![];
        let mut var_start = vec![];
        let mut v = 0;
        for &c in spec.columns() {
            block_start.push(columns.len());
            var_start.push(v);
            for j in 0..c {
                columns.push((v + j, v + j + 1));
            }
            v += c + 1;
        }
        ScrollMatrix {
            spec: spec.clone(),
            ring,
            columns,
            block_start,
            var_start,
        }
    }

    /// Two-block matrix `(c, d)`.
    pub fn two_block(c: usize, d: usize, field: &FieldSpec) -> Result<Self> {
        Self::new(&BlockSpec::two(c, d)?, field)
    }

    pub fn spec(&self) -> &BlockSpec {
        &self.spec
    }

    pub fn ring(&self) -> &Arc<Ring<K>> {
        &self.ring
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    /// Variable indices `(top, bottom)` of matrix column `k`.
    pub fn column(&self, k: usize) -> (usize, usize) {
        self.columns[k]
    }

    /// Matrix column index of column `j` of block `b` (both 0-based).
    pub fn block_column(&self, b: usize, j: usize) -> usize {
        assert!(j < self.spec.columns()[b]);
        self.block_start[b] + j
    }

    /// Polynomial of the variable `x_{b,j}` (0-based block).
    pub fn entry(&self, b: usize, j: usize) -> Polynomial<K> {
        assert!(j <= self.spec.columns()[b]);
        Polynomial::var(&self.ring, self.var_start[b] + j)
    }

    /// Determinant of matrix columns `a` and `b`:
    /// top(a)*bottom(b) - top(b)*bottom(a).
    pub fn minor(&self, a: usize, b: usize) -> Polynomial<K> {
        let (ta, ba) = self.columns[a];
        let (tb, bb) = self.columns[b];
        let v = |i| Polynomial::var(&self.ring, i);
        &(&v(ta) * &v(bb)) - &(&v(tb) * &v(ba))
    }

    fn require_two_blocks(&self) -> Result<(usize, usize)> {
        match self.spec.columns() {
            [c, d] => Ok((*c, *d)),
            _ => Err(Error::InvalidSpec(format!(
                "two blocks required, got {}",
                self.spec.blocks()
            ))),
        }
    }

    pub fn x(&self, j: usize) -> Polynomial<K> {
        self.entry(0, j)
    }

    pub fn y(&self, j: usize) -> Polynomial<K> {
        self.entry(1, j)
    }

    /// 2-minors among the first `i` columns of block `b`.
    fn prefix_minors(&self, b: usize, i: usize) -> Vec<Polynomial<K>> {
        let mut out = vec![];
        for a in 0..i {
            for c in a + 1..i {
                out.push(self.minor(self.block_column(b, a), self.block_column(b, c)));
            }
        }
        out
    }

    /// `x_0 y_j - x_1 y_{j-1}` (first column of block 1 with column `j-1` of block 2).
    pub fn corner_head(&self, j: usize) -> Polynomial<K> {
        &(&self.x(0) * &self.y(j)) - &(&self.x(1) * &self.y(j - 1))
    }

    /// `x_{i-1} y_1 - x_i y_0`.
    pub fn corner_tail(&self, i: usize) -> Polynomial<K> {
        &(&self.x(i - 1) * &self.y(1)) - &(&self.x(i) * &self.y(0))
    }

    /// `F_i` over block `b`:
    /// sum_k (-1)^k C(i,k) v_{i+1}^{i-k} v_k v_i^k.
    pub fn hankel_f(&self, b: usize, i: usize) -> Polynomial<K> {
        let v = |j| self.entry(b, j);
        let ctx = self.ring.ctx();
        let mut acc = Polynomial::zero(&self.ring);
        for k in 0..=i {
            let mut coeff = binomial(i, k);
            if k % 2 == 1 {
                coeff = -coeff;
            }
            let t = &(&v(i + 1).pow((i - k) as u32) * &v(k)) * &v(i).pow(k as u32);
            acc = &acc + &t.scale(&K::from_bigint(ctx, &coeff));
        }
        acc
    }

    /// `F_c = sum_k (-1)^k C(c,k) y_1^{c-k} x_k y_0^k` (two blocks).
    pub fn hankel_fc(&self) -> Polynomial<K> {
        let c = self.spec.columns()[0];
        let ctx = self.ring.ctx();
        let mut acc = Polynomial::zero(&self.ring);
        for k in 0..=c {
            let mut coeff = binomial(c, k);
            if k % 2 == 1 {
                coeff = -coeff;
            }
            let t = &(&self.y(1).pow((c - k) as u32) * &self.x(k)) * &self.y(0).pow(k as u32);
            acc = &acc + &t.scale(&K::from_bigint(ctx, &coeff));
        }
        acc
    }

    fn set(&self, name: SetName, params: Vec<(&str, Value)>, polys: Vec<Polynomial<K>>) -> GeneratorSet<K> {
        let mut p: BTreeMap<String, Value> = params
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        p.insert("blocks".into(), Value::from(self.spec.columns().to_vec()));
        GeneratorSet {
            name,
            params: p,
            ring: self.ring.clone(),
            polys: dedup(polys),
            warnings: vec![],
        }
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn dedup<K: Field>(polys: Vec<Polynomial<K>>) -> Vec<Polynomial<K>> {
    let mut out: Vec<Polynomial<K>> = Vec::with_capacity(polys.len());
    for p in polys {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetName {
    /// All 2-minors of the matrix.
    FullMinors,
    /// Within-block minors plus two corner minors per block pair.
    ReducedTheorem1,
    /// `S_d`, `T_d` and `x_0 y_d - x_d y_0`.
    CharP,
    /// `F_1..F_c`, `G_1..G_{d-1}`, `x_0 y_d - x_1 y_{d-1}`.
    Stci,
    /// `F_1..F_{c-1}, F_c` for a `(c, 1)` matrix.
    Prop5,
    /// `F_1..F_{d-1}`, `G_1..G_{d-1}`, `x_0 y_d - x_d y_0`.
    StciCharP,
    /// `F_1..F_{c-1}` of a single block.
    HankelF,
    Si,
    Tj,
    Jij,
    Jcd,
    Custom,
}

impl fmt::Display for SetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A named, ordered list of polynomials in a common ring.
#[derive(Clone, Debug)]
pub struct GeneratorSet<K: Field> {
    pub name: SetName,
    pub params: BTreeMap<String, Value>,
    ring: Arc<Ring<K>>,
    polys: Vec<Polynomial<K>>,
    /// Non-fatal remarks, e.g. a characteristic that does not match `d = p^h`.
    pub warnings: Vec<String>,
}

impl<K: Field> GeneratorSet<K> {
    pub fn custom(ring: &Arc<Ring<K>>, polys: Vec<Polynomial<K>>) -> Result<Self> {
        for p in &polys {
            if !p.ring().same_as(ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(GeneratorSet {
            name: SetName::Custom,
            params: BTreeMap::new(),
            ring: ring.clone(),
            polys,
            warnings: vec![],
        })
    }

    pub fn ring(&self) -> &Arc<Ring<K>> {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial<K>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn contains(&self, f: &Polynomial<K>) -> bool {
        self.polys.contains(f)
    }

    /// Every element of `self` occurs verbatim in `other`.
    pub fn is_subset_of(&self, other: &GeneratorSet<K>) -> bool {
        self.polys.iter().all(|p| other.contains(p))
    }

    pub fn to_json(&self) -> GeneratorSetJson {
        GeneratorSetJson {
            name: self.name,
            params: self.params.clone(),
            ring: RingJson {
                variables: self.ring.names().to_vec(),
                field: self.ring.field(),
            },
            generators: self.polys.iter().map(|p| p.to_string()).collect(),
        }
    }

    /// Rebuilds a set from its JSON form in a fresh ring (default order).
    pub fn from_json(json: &GeneratorSetJson) -> Result<Self> {
        let ring = Ring::with_spec(json.ring.variables.clone(), &json.ring.field, MonomialOrder::default())?;
        let polys = json
            .generators
            .iter()
            .map(|g| Polynomial::parse(&ring, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorSet {
            name: json.name,
            params: json.params.clone(),
            ring,
            polys,
            warnings: vec![],
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingJson {
    pub variables: Vec<String>,
    pub field: FieldSpec,
}

/// Serialized generator set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSetJson {
    pub name: SetName,
    pub params: BTreeMap<String, Value>,
    pub ring: RingJson,
    pub generators: Vec<String>,
}

/// Builds the block matrix for `spec` over `field`.
pub fn build_matrix<K: Field>(spec: &BlockSpec, field: &FieldSpec) -> Result<ScrollMatrix<K>> {
    ScrollMatrix::new(spec, field)
}

/// All `C(n, 2)` column-pair minors, pairs in lexicographic order.
pub fn minors_full<K: Field>(m: &ScrollMatrix<K>) -> GeneratorSet<K> {
    let n = m.ncols();
    let mut polys = vec![];
    for a in 0..n {
        for b in a + 1..n {
            polys.push(m.minor(a, b));
        }
    }
    m.set(SetName::FullMinors, vec![], polys)
}

/// Within-block minors of every block, then for each block pair `i < j` the
/// minors (first of `B_i`, last of `B_j`) and (last of `B_i`, first of `B_j`).
pub fn minors_reduced<K: Field>(m: &ScrollMatrix<K>) -> GeneratorSet<K> {
    let cols = m.spec().columns();
    let mut polys = vec![];
    for (b, &c) in cols.iter().enumerate() {
        polys.extend(m.prefix_minors(b, c));
    }
    for i in 0..cols.len() {
        for j in i + 1..cols.len() {
            let first_i = m.block_column(i, 0);
            let last_i = m.block_column(i, cols[i] - 1);
            let first_j = m.block_column(j, 0);
            let last_j = m.block_column(j, cols[j] - 1);
            polys.push(m.minor(first_i, last_j));
            polys.push(m.minor(last_i, first_j));
        }
    }
    m.set(SetName::ReducedTheorem1, vec![], polys)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// 2-minors of the first `i` columns of block 1.
    S,
    /// 2-minors of the first `j` columns of block 2.
    T,
    /// `S_i`, `T_j`, `x_0 y_j - x_1 y_{j-1}`, `x_{i-1} y_1 - x_i y_0`.
    J,
    /// `J_{c,d}`; the indices are ignored.
    Jcd,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Family::S),
            "T" | "t" => Ok(Family::T),
            "J" | "j" => Ok(Family::J),
            "Jcd" | "jcd" => Ok(Family::Jcd),
            other => Err(Error::InvalidSpec(format!("unknown family `{other}`"))),
        }
    }
}

impl<K: Field> ScrollMatrix<K> {
    /// The prefix families of a two-block matrix.
    pub fn family(&self, kind: Family, i: usize, j: usize) -> Result<GeneratorSet<K>> {
        let (c, d) = self.require_two_blocks()?;
        let (i, j) = match kind {
            Family::Jcd => (c, d),
            _ => (i, j),
        };
        let check_i = || {
            if (1..=c).contains(&i) {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange(format!("i = {i} outside 1..={c}")))
            }
        };
        let check_j = || {
            if (1..=d).contains(&j) {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange(format!("j = {j} outside 1..={d}")))
            }
        };
        Ok(match kind {
            Family::S => {
                check_i()?;
                self.set(SetName::Si, vec![("i", i.into())], self.prefix_minors(0, i))
            }
            Family::T => {
                check_j()?;
                self.set(SetName::Tj, vec![("j", j.into())], self.prefix_minors(1, j))
            }
            Family::J | Family::Jcd => {
                check_i()?;
                check_j()?;
                let mut polys = self.prefix_minors(0, i);
                polys.extend(self.prefix_minors(1, j));
                polys.push(self.corner_head(j));
                polys.push(self.corner_tail(i));
                let name = if kind == Family::Jcd { SetName::Jcd } else { SetName::Jij };
                self.set(name, vec![("i", i.into()), ("j", j.into())], polys)
            }
        })
    }

    /// `S_d`, `T_d` and `x_0 y_d - x_d y_0` on a `(d, d)` matrix.
    pub fn char_p_set(&self) -> Result<GeneratorSet<K>> {
        let (c, d) = self.require_two_blocks()?;
        if c != d {
            return Err(Error::InvalidSpec(format!("square blocks required, got ({c},{d})")));
        }
        let mut polys = self.prefix_minors(0, d);
        polys.extend(self.prefix_minors(1, d));
        polys.push(&(&self.x(0) * &self.y(d)) - &(&self.x(d) * &self.y(0)));
        let mut set = self.set(SetName::CharP, vec![("d", d.into())], polys);
        let p = self.ring.field().characteristic();
        if !is_power_of(d as u64, p) {
            set.warnings.push(format!(
                "d = {d} is not a power of the field characteristic {p}"
            ));
        }
        Ok(set)
    }

    /// `F_1..F_{c-1}, F_c, G_1..G_{d-1}, x_0 y_d - x_1 y_{d-1}`.
    pub fn stci_set(&self) -> Result<GeneratorSet<K>> {
        let (c, d) = self.require_two_blocks()?;
        if c < 2 || d < 2 {
            return Err(Error::InvalidSpec(format!("c, d >= 2 required, got ({c},{d})")));
        }
        let mut polys: Vec<_> = (1..c).map(|i| self.hankel_f(0, i)).collect();
        polys.push(self.hankel_fc());
        polys.extend((1..d).map(|i| self.hankel_f(1, i)));
        polys.push(self.corner_head(d));
        Ok(self.set(SetName::Stci, vec![("c", c.into()), ("d", d.into())], polys))
    }

    /// `F_1..F_{c-1}, F_c` on a `(c, 1)` matrix.
    pub fn prop5_set(&self) -> Result<GeneratorSet<K>> {
        let (c, d) = self.require_two_blocks()?;
        if c < 2 || d != 1 {
            return Err(Error::InvalidSpec(format!("(c, 1) with c >= 2 required, got ({c},{d})")));
        }
        let mut polys: Vec<_> = (1..c).map(|i| self.hankel_f(0, i)).collect();
        polys.push(self.hankel_fc());
        Ok(self.set(SetName::Prop5, vec![("c", c.into())], polys))
    }

    /// `F_1..F_{d-1}, G_1..G_{d-1}, x_0 y_d - x_d y_0` on a `(d, d)` matrix.
    pub fn stci_char_p_set(&self) -> Result<GeneratorSet<K>> {
        let (c, d) = self.require_two_blocks()?;
        if c != d || d < 2 {
            return Err(Error::InvalidSpec(format!("(d, d) with d >= 2 required, got ({c},{d})")));
        }
        let mut polys: Vec<_> = (1..d).map(|i| self.hankel_f(0, i)).collect();
        polys.extend((1..d).map(|i| self.hankel_f(1, i)));
        polys.push(&(&self.x(0) * &self.y(d)) - &(&self.x(d) * &self.y(0)));
        let mut set = self.set(SetName::StciCharP, vec![("d", d.into())], polys);
        let p = self.ring.field().characteristic();
        if !is_power_of(d as u64, p) {
            set.warnings.push(format!(
                "d = {d} is not a power of the field characteristic {p}"
            ));
        }
        Ok(set)
    }

    /// `F_1..F_{c-1}` of the first block.
    pub fn hankel_f_set(&self) -> GeneratorSet<K> {
        let c = self.spec.columns()[0];
        let polys = (1..c).map(|i| self.hankel_f(0, i)).collect();
        self.set(SetName::HankelF, vec![("c", c.into())], polys)
    }

    /// 2-minors of block `b` alone.
    pub fn block_minors(&self, b: usize) -> Vec<Polynomial<K>> {
        self.prefix_minors(b, self.spec.columns()[b])
    }
}

fn is_power_of(d: u64, p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut x = d;
    while x % p == 0 {
        x /= p;
    }
    x == 1 && d > 1
}

/// `S_i`, `T_j`, `J_{i,j}` or `J_{c,d}` for the `(c, d)` matrix.
pub fn gens_family<K: Field>(
    kind: Family,
    c: usize,
    d: usize,
    i: usize,
    j: usize,
    field: &FieldSpec,
) -> Result<GeneratorSet<K>> {
    ScrollMatrix::two_block(c, d, field)?.family(kind, i, j)
}

/// `S_d`, `T_d`, `x_0 y_d - x_d y_0` on the `(d, d)` matrix.
pub fn gens_char_p<K: Field>(d: usize, field: &FieldSpec) -> Result<GeneratorSet<K>> {
    ScrollMatrix::two_block(d, d, field)?.char_p_set()
}

/// The `c + d` polynomials `F_1..F_c, G_1..G_{d-1}, H`.
pub fn gens_stci<K: Field>(c: usize, d: usize, field: &FieldSpec) -> Result<GeneratorSet<K>> {
    if c < 2 || d < 2 {
        return Err(Error::InvalidSpec(format!("c, d >= 2 required, got ({c},{d})")));
    }
    ScrollMatrix::two_block(c, d, field)?.stci_set()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Rational, Zp};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn strings<K: Field>(g: &GeneratorSet<K>) -> Vec<String> {
        g.polys().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn matrix_two_two() {
        let m: ScrollMatrix<Rational> = build_matrix(&BlockSpec::two(2, 2).unwrap(), &Q).unwrap();
        let names = m.ring().names();
        let cols: Vec<(String, String)> = (0..m.ncols())
            .map(|k| {
                let (t, b) = m.column(k);
                (names[t].clone(), names[b].clone())
            })
            .collect();
        let expect = [("x0", "x1"), ("x1", "x2"), ("y0", "y1"), ("y1", "y2")];
        assert_eq!(cols.len(), 4);
        for (got, want) in cols.iter().zip(expect) {
            assert_eq!((got.0.as_str(), got.1.as_str()), want);
        }
    }

    #[test]
    fn matrix_single_column_and_canonical_names() {
        let m: ScrollMatrix<Rational> = build_matrix(&BlockSpec::new(vec![1]).unwrap(), &Q).unwrap();
        assert_eq!(m.ncols(), 1);
        assert_eq!(m.column(0), (0, 1));
        let spec = BlockSpec::new(vec![2, 1, 2]).unwrap();
        let m3: ScrollMatrix<Rational> = build_matrix(&spec, &Q).unwrap();
        assert_eq!(
            m3.ring().names(),
            &["x1_0", "x1_1", "x1_2", "x2_0", "x2_1", "x3_0", "x3_1", "x3_2"]
        );
        assert_eq!(spec.nvars(), 8);
    }

    #[test]
    fn matrix_four_three() {
        let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(4, 3, &Q).unwrap();
        let names = m.ring().names();
        let top: Vec<&str> = (0..7).map(|k| names[m.column(k).0].as_str()).collect();
        let bottom: Vec<&str> = (0..7).map(|k| names[m.column(k).1].as_str()).collect();
        assert_eq!(top, ["x0", "x1", "x2", "x3", "y0", "y1", "y2"]);
        assert_eq!(bottom, ["x1", "x2", "x3", "x4", "y1", "y2", "y3"]);
    }

    #[test]
    fn invalid_specs() {
        assert!(BlockSpec::new(vec![]).is_err());
        assert!(BlockSpec::new(vec![2, 0]).is_err());
        assert!("2,x".parse::<BlockSpec>().is_err());
        assert_eq!("2, 1,2".parse::<BlockSpec>().unwrap().columns(), &[2, 1, 2]);
    }

    #[test]
    fn full_minors_small() {
        let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(2, 2, &Q).unwrap();
        assert_eq!(
            strings(&minors_full(&m)),
            ["x0*x2 - x1^2", "x0*y1 - x1*y0", "x0*y2 - x1*y1", "x1*y1 - x2*y0", "x1*y2 - x2*y1", "y0*y2 - y1^2"]
        );
        let m11: ScrollMatrix<Rational> = ScrollMatrix::two_block(1, 1, &Q).unwrap();
        assert_eq!(strings(&minors_full(&m11)), ["x0*y1 - x1*y0"]);
        let m2: ScrollMatrix<Rational> = build_matrix(&BlockSpec::new(vec![2]).unwrap(), &Q).unwrap();
        assert_eq!(strings(&minors_full(&m2)), ["x0*x2 - x1^2"]);
    }

    #[test]
    fn reduced_minors_small() {
        let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(2, 2, &Q).unwrap();
        assert_eq!(
            strings(&minors_reduced(&m)),
            ["x0*x2 - x1^2", "y0*y2 - y1^2", "x0*y2 - x1*y1", "x1*y1 - x2*y0"]
        );
        let m11: ScrollMatrix<Rational> = ScrollMatrix::two_block(1, 1, &Q).unwrap();
        assert_eq!(strings(&minors_reduced(&m11)), ["x0*y1 - x1*y0"]);
        let m222: ScrollMatrix<Rational> = build_matrix(&BlockSpec::new(vec![2, 2, 2]).unwrap(), &Q).unwrap();
        assert_eq!(minors_reduced(&m222).len(), 9);
    }

    #[test]
    fn families() {
        let j22: GeneratorSet<Rational> = gens_family(Family::J, 2, 2, 2, 2, &Q).unwrap();
        assert_eq!(
            strings(&j22),
            ["x0*x2 - x1^2", "y0*y2 - y1^2", "x0*y2 - x1*y1", "x1*y1 - x2*y0"]
        );
        let s1: GeneratorSet<Rational> = gens_family(Family::S, 3, 3, 1, 1, &Q).unwrap();
        assert!(s1.is_empty());
        let t3: GeneratorSet<Rational> = gens_family(Family::T, 3, 3, 1, 3, &Q).unwrap();
        assert_eq!(strings(&t3), ["y0*y2 - y1^2", "y0*y3 - y1*y2", "y1*y3 - y2^2"]);
        assert!(matches!(
            gens_family::<Rational>(Family::S, 2, 2, 3, 1, &Q),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            gens_family::<Rational>(Family::T, 2, 2, 1, 0, &Q),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn char_p_sets() {
        let f2 = FieldSpec::PrimeField(2);
        let j2: GeneratorSet<Zp> = gens_char_p(2, &f2).unwrap();
        assert_eq!(strings(&j2), ["x0*x2 + x1^2", "y0*y2 + y1^2", "x0*y2 + x2*y0"]);
        assert!(j2.warnings.is_empty());
        let j2q: GeneratorSet<Rational> = gens_char_p(2, &Q).unwrap();
        assert_eq!(strings(&j2q), ["x0*x2 - x1^2", "y0*y2 - y1^2", "x0*y2 - x2*y0"]);
        assert_eq!(j2q.warnings.len(), 1);
        let j1: GeneratorSet<Rational> = gens_char_p(1, &Q).unwrap();
        assert_eq!(strings(&j1), ["x0*y1 - x1*y0"]);
        let j4: GeneratorSet<Zp> = gens_char_p(4, &f2).unwrap();
        assert_eq!(j4.len(), 13);
        assert!(j4.warnings.is_empty());
    }

    #[test]
    fn stci_four_three_matches_display() {
        let s: GeneratorSet<Rational> = gens_stci(4, 3, &Q).unwrap();
        assert_eq!(
            strings(&s),
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
    }

    #[test]
    fn stci_two_two() {
        let s: GeneratorSet<Rational> = gens_stci(2, 2, &Q).unwrap();
        assert_eq!(
            strings(&s),
            ["x0*x2 - x1^2", "x0*y1^2 - 2*x1*y0*y1 + x2*y0^2", "y0*y2 - y1^2", "x0*y2 - x1*y1"]
        );
        assert!(gens_stci::<Rational>(1, 3, &Q).is_err());
        assert!(gens_stci::<Rational>(3, 1, &Q).is_err());
    }

    #[test]
    fn prop5_and_char_p_stci() {
        let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(2, 1, &Q).unwrap();
        assert_eq!(
            strings(&m.prop5_set().unwrap()),
            ["x0*x2 - x1^2", "x0*y1^2 - 2*x1*y0*y1 + x2*y0^2"]
        );
        let m2: ScrollMatrix<Zp> = ScrollMatrix::two_block(2, 2, &FieldSpec::PrimeField(2)).unwrap();
        assert_eq!(
            strings(&m2.stci_char_p_set().unwrap()),
            ["x0*x2 + x1^2", "y0*y2 + y1^2", "x0*y2 + x2*y0"]
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn json_round_trip() {
        let m: ScrollMatrix<Rational> = ScrollMatrix::two_block(3, 2, &Q).unwrap();
        let g = minors_reduced(&m);
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back: GeneratorSetJson = serde_json::from_str(&json).unwrap();
        let g2 = GeneratorSet::<Rational>::from_json(&back).unwrap();
        assert_eq!(strings(&g), strings(&g2));
        assert!(json.contains("\"field\":\"Q\""));
    }
}
