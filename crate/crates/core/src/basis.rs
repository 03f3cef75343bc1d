//! Bases of GF(q^m) over GF(q): decomposition maps, dual bases, composite
//! bases, structure constants and subbases.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field, Poly, Subfield};
use crate::linalg::Matrix;

/// Largest field order for which the full decomposition table is cached.
const DECOMPOSE_CACHE_ORDER: u64 = 1 << 16;

/// Set of basis indices, 0-based internally and 1-based when displayed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(u64);

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet(0)
    }

    /// {0, .., m-1}.
    pub fn full(m: usize) -> Self {
        IndexSet(if m >= 64 { u64::MAX } else { (1u64 << m) - 1 })
    }

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        IndexSet(it.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    /// Complement within {0, .., m-1}.
    pub fn complement(self, m: usize) -> IndexSet {
        IndexSet(!self.0 & Self::full(m).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of {0, .., m-1} of size `size`, in increasing bit order.
    pub fn subsets_of_size(m: usize, size: usize) -> impl Iterator<Item = IndexSet> {
        (0..1u64 << m)
            .filter(move |b| b.count_ones() as usize == size)
            .map(IndexSet)
    }

    /// Parses 1-based indices such as "1,2,5".
    pub fn parse_one_based(s: &str, m: usize) -> Result<Self> {
        let mut set = IndexSet::empty();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let i: usize = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad index '{part}'")))?;
            if i == 0 || i > m {
                return Err(Error::IndexOutOfRange { index: i, m });
            }
            set.insert(i - 1);
        }
        Ok(set)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A basis β_1..β_m of the ambient field over a subfield GF(q).
#[derive(Clone)]
pub struct Basis {
    field: Arc<Field>,
    base: Subfield,
    elems: Vec<Elem>,
    dual: Vec<Elem>,
    table: Option<Arc<Vec<Elem>>>,
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Basis")
            .field("q", &self.base.order())
            .field("elems", &self.elems)
            .finish()
    }
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.elems == other.elems
    }
}

impl Basis {
    /// Validates `elems` as a basis over `base` through the trace Gram matrix
    /// T_ij = Tr(β_i β_j), which is invertible exactly when they are independent.
    pub fn new(field: Arc<Field>, elems: Vec<Elem>, base: Subfield) -> Result<Self> {
        let m = field.ext_degree(base) as usize;
        if elems.len() != m {
            return Err(Error::WrongCount { expected: m, got: elems.len() });
        }
        let f = &*field;
        let gram = Matrix::from_rows(
            elems
                .iter()
                .map(|&a| elems.iter().map(|&b| f.trace(f.mul(a, b), base)).collect())
                .collect(),
        )?;
        let tinv = gram.inverse(f)?;
        let dual = (0..m)
            .map(|j| {
                (0..m).fold(Elem::ZERO, |acc, k| f.add(acc, f.mul(tinv.get(k, j), elems[k])))
            })
            .collect();
        let mut basis = Basis { field, base, elems, dual, table: None };
        if basis.field.order() <= DECOMPOSE_CACHE_ORDER {
            let table: Vec<Elem> = basis
                .field
                .elements()
                .flat_map(|g| basis.decompose_uncached(g))
                .collect();
            basis.table = Some(Arc::new(table));
        }
        Ok(basis)
    }

    /// The power basis {1, α, .., α^{m-1}}.
    pub fn polynomial(field: Arc<Field>, base: Subfield) -> Result<Self> {
        let m = field.ext_degree(base) as i64;
        let elems = (0..m).map(|k| field.alpha_pow(k)).collect();
        Self::new(field, elems, base)
    }

    /// Parses a basis from element notation, e.g. "1,a^5,a,a^6".
    pub fn parse(field: Arc<Field>, s: &str, base: Subfield) -> Result<Self> {
        let elems = s
            .split(',')
            .map(|t| field.parse_elem(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, elems, base)
    }

    /// Products outer_j · inner_i in outer-major order, where `inner` is a
    /// basis of `sub` over `base` and `outer` a basis of the ambient field
    /// over `sub`.
    pub fn composite(
        field: Arc<Field>,
        base: Subfield,
        sub: Subfield,
        inner: &[Elem],
        outer: &[Elem],
    ) -> Result<Self> {
        if !sub.degree().is_multiple_of(base.degree()) {
            return Err(Error::NoSuchSubfield { order: sub.order() });
        }
        let inner_m = (sub.degree() / base.degree()) as usize;
        if inner.len() != inner_m {
            return Err(Error::WrongCount { expected: inner_m, got: inner.len() });
        }
        if let Some(&bad) = inner.iter().find(|&&e| !field.is_subfield_element(e, sub)) {
            return Err(Error::PreconditionViolated(format!(
                "inner element {} is not in GF({})",
                field.fmt_elem(bad),
                sub.order()
            )));
        }
        Basis::new(field.clone(), outer.to_vec(), sub)?;
        let elems = outer
            .iter()
            .flat_map(|&o| inner.iter().map(move |&i| (o, i)))
            .map(|(o, i)| field.mul(o, i))
            .collect();
        Self::new(field, elems, base)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn base(&self) -> Subfield {
        self.base
    }

    pub fn q(&self) -> u64 {
        self.base.order()
    }

    pub fn m(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    pub fn element(&self, i: usize) -> Elem {
        self.elems[i]
    }

    /// Text form in element notation, comma separated.
    pub fn format(&self) -> String {
        let parts: Vec<String> = self.elems.iter().map(|&e| self.field.fmt_elem(e)).collect();
        parts.join(",")
    }

    fn decompose_uncached(&self, g: Elem) -> Vec<Elem> {
        let f = &*self.field;
        self.dual.iter().map(|&d| f.trace(f.mul(g, d), self.base)).collect()
    }

    /// Coordinates (μ_1(γ), .., μ_m(γ)) over GF(q).
    pub fn decompose(&self, g: Elem) -> Vec<Elem> {
        match &self.table {
            Some(t) => {
                let m = self.m();
                t[g.0 as usize * m..(g.0 as usize + 1) * m].to_vec()
            }
            None => self.decompose_uncached(g),
        }
    }

    /// The single coordinate μ_i(γ).
    #[inline]
    pub fn coord(&self, g: Elem, i: usize) -> Elem {
        match &self.table {
            Some(t) => t[g.0 as usize * self.m() + i],
            None => {
                let f = &*self.field;
                f.trace(f.mul(g, self.dual[i]), self.base)
            }
        }
    }

    /// Σ μ_i β_i.
    pub fn compose(&self, coords: &[Elem]) -> Elem {
        let f = &*self.field;
        coords
            .iter()
            .zip(&self.elems)
            .fold(Elem::ZERO, |acc, (&c, &b)| f.add(acc, f.mul(c, b)))
    }

    /// μ_i applied to every entry of `y`.
    pub fn decompose_vector(&self, y: &[Elem], i: usize) -> Vec<Elem> {
        y.iter().map(|&g| self.coord(g, i)).collect()
    }

    /// μ_i applied to every coefficient of `p`.
    pub fn decompose_poly(&self, p: &Poly, i: usize) -> Poly {
        Poly::new(self.decompose_vector(p.coeffs(), i))
    }

    /// Indices i with μ_i(y_t) ≠ 0 for some symbol y_t.
    pub fn support_indices(&self, y: &[Elem]) -> IndexSet {
        let mut set = IndexSet::empty();
        for &g in y {
            if g.is_zero() {
                continue;
            }
            for i in 0..self.m() {
                if !self.coord(g, i).is_zero() {
                    set.insert(i);
                }
            }
        }
        set
    }

    pub fn dual_basis(&self) -> Basis {
        Basis::new(self.field.clone(), self.dual.clone(), self.base)
            .expect("the dual of a basis is a basis")
    }

    /// C with β-coordinates = C · (power-basis coordinates); column j is μ(α^j).
    pub fn change_matrix(&self) -> Matrix {
        let m = self.m();
        let mut c = Matrix::zeros(m, m);
        for j in 0..m {
            let col = self.decompose(self.field.alpha_pow(j as i64));
            for (i, v) in col.into_iter().enumerate() {
                c.set(i, j, v);
            }
        }
        c
    }

    /// Decompositions of β_iβ_k and of β_i^{q^s} for each requested s.
    pub fn structure_constants(&self, frobenius_exponents: &[u32]) -> StructureConstants {
        let f = &*self.field;
        let m = self.m();
        let mut products = Vec::with_capacity(m * m);
        for i in 0..m {
            for k in 0..m {
                products.push(self.decompose(f.mul(self.elems[i], self.elems[k])));
            }
        }
        let frobenius = frobenius_exponents
            .iter()
            .map(|&s| {
                let rows = self
                    .elems
                    .iter()
                    .map(|&b| self.decompose(f.frobenius(b, self.base, s)))
                    .collect();
                (s, rows)
            })
            .collect();
        StructureConstants { m, products, frobenius }
    }
}

/// Structure constants of a basis: μ^{(i,k)}_j and μ^{(i[q^s])}_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    m: usize,
    products: Vec<Vec<Elem>>,
    frobenius: Vec<(u32, Vec<Vec<Elem>>)>,
}

impl StructureConstants {
    /// μ^{(i,k)}_j: coordinate j of β_iβ_k.
    pub fn product(&self, i: usize, k: usize, j: usize) -> Elem {
        self.products[i * self.m + k][j]
    }

    /// μ^{(i[q^s])}_j: coordinate j of β_i^{q^s}, if s was requested.
    pub fn frobenius(&self, i: usize, s: u32, j: usize) -> Option<Elem> {
        self.frobenius
            .iter()
            .find(|(t, _)| *t == s)
            .map(|(_, rows)| rows[i][j])
    }

    /// f_{i,l}(μ) = Σ_j μ^{(i,j)}_l μ_j, so that γβ_i = Σ_l β_l f_{i,l}(μ(γ)).
    pub fn f_coeff(&self, i: usize, l: usize, mu: &[Elem], field: &Field) -> Elem {
        mu.iter().enumerate().fold(Elem::ZERO, |acc, (j, &x)| {
            field.add(acc, field.mul(self.product(i, j, l), x))
        })
    }
}

/// A non-empty subset of a basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subbasis {
    basis: Basis,
    included: IndexSet,
}

impl Subbasis {
    pub fn new(basis: Basis, included: IndexSet) -> Result<Self> {
        if included.is_empty() {
            return Err(Error::EmptyInclusion);
        }
        if let Some(i) = included.iter().find(|&i| i >= basis.m()) {
            return Err(Error::IndexOutOfRange { index: i + 1, m: basis.m() });
        }
        Ok(Subbasis { basis, included })
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn included(&self) -> IndexSet {
        self.included
    }

    pub fn excluded(&self) -> IndexSet {
        self.included.complement(self.basis.m())
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.included.iter().map(|i| self.basis.element(i)).collect()
    }

    /// True iff `y` is represented by this subbasis.
    pub fn represents(&self, y: &[Elem]) -> bool {
        self.basis.support_indices(y).is_subset(self.included)
    }
}

/// Extends independent `partial` to a basis over `base` by greedily appending
/// powers of α.
pub fn complete_to_basis(field: Arc<Field>, partial: &[Elem], base: Subfield) -> Result<Basis> {
    let m = field.ext_degree(base) as usize;
    let mut elems = partial.to_vec();
    if !independent(&field, &elems, base) {
        return Err(Error::LinearlyDependent);
    }
    let mut k = 0i64;
    while elems.len() < m && k < field.group_order() as i64 {
        let cand = field.alpha_pow(k);
        elems.push(cand);
        if !independent(&field, &elems, base) {
            elems.pop();
        }
        k += 1;
    }
    Basis::new(field, elems, base)
}

/// Linear independence over `base`, by growing the GF(q)-span one element
/// at a time.
pub fn independent(field: &Field, elems: &[Elem], base: Subfield) -> bool {
    if elems.iter().any(|e| e.is_zero()) {
        return false;
    }
    let q = base.order();
    let len = elems.len() as u32;
    if (q as f64).powi(len as i32) > field.order() as f64 {
        return false;
    }
    let scalars: Vec<Elem> = std::iter::once(Elem::ZERO)
        .chain((0..q - 1).map(|j| field.alpha_pow((j * (field.group_order() as u64 / (q - 1))) as i64)))
        .collect();
    let mut span = vec![Elem::ZERO];
    for &e in elems {
        let mut next = Vec::with_capacity(span.len() * q as usize);
        for &s in &span {
            for &c in &scalars {
                next.push(field.add(s, field.mul(c, e)));
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() != span.len() * q as usize {
            return false;
        }
        span = next;
    }
    true
}
