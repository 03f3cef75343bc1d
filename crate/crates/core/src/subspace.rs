//! Subspace subcodes of expanded cyclic codes: dimensions from the Γ and Θ
//! rank formulas, a direct linear-algebra oracle, witnesses and searches.
//!
//! A selection is a list of nonzero elements γ_1..γ_k; its expanded code
//! G_e(γ_1..γ_k) is the GF(q)-span of the symbol words β_j·g(γ_i). Lists
//! spanning several conjugacy classes split into one [`ConjugacySelection`]
//! per class and their dimensions add, since the component words of
//! different classes live in different minimal ideals.

use crate::basis::{Basis, IndexSet};
use crate::cyclic::g_vector;
use crate::enumerate::Span;
use crate::error::{Error, Result};
use crate::expansion::expanded_weight;
use crate::galois::{Elem, Field, Poly, Subfield};
use crate::linalg::Matrix;

/// Oracle limit on mk, the GF(q)-dimension of G_e.
pub const ORACLE_MAX_DIM: usize = 24;

/// Elements γ^{q^s} of one conjugacy class, s ranging over `offsets` ∋ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacySelection {
    gamma: Elem,
    m_gamma: u32,
    offsets: Vec<u32>,
}

impl ConjugacySelection {
    pub fn new(field: &Field, base: Subfield, gamma: Elem, offsets: &[u32]) -> Result<Self> {
        if gamma.is_zero() {
            return Err(Error::ZeroElement);
        }
        let m_gamma = field.minimal_dimension(gamma, base);
        let mut sorted = offsets.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != offsets.len() {
            return Err(Error::PreconditionViolated("repeated offset".into()));
        }
        if sorted.first() != Some(&0) {
            return Err(Error::PreconditionViolated("offsets must contain 0".into()));
        }
        if sorted.iter().any(|&s| s >= m_gamma) {
            return Err(Error::PreconditionViolated(format!(
                "offsets must lie below the minimal dimension {m_gamma}"
            )));
        }
        Ok(ConjugacySelection { gamma, m_gamma, offsets: sorted })
    }

    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    pub fn m_gamma(&self) -> u32 {
        self.m_gamma
    }

    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    pub fn k(&self) -> usize {
        self.offsets.len()
    }

    /// κ = m_γ - k.
    pub fn kappa(&self) -> usize {
        self.m_gamma as usize - self.k()
    }

    /// {1, .., m_γ - 1} minus the nonzero offsets.
    pub fn z_set(&self) -> Vec<u32> {
        (1..self.m_gamma).filter(|z| !self.offsets.contains(z)).collect()
    }

    pub fn elements(&self, field: &Field, base: Subfield) -> Vec<Elem> {
        self.offsets.iter().map(|&s| field.frobenius(self.gamma, base, s)).collect()
    }

    /// The subfield GF(q^{m_γ}) generated by γ.
    pub fn subfield(&self, field: &Field, base: Subfield) -> Subfield {
        field
            .subfield(base.order().pow(self.m_gamma))
            .expect("minimal dimension divides the extension degree")
    }
}

/// Splits a list of elements into per-class selections, in order of first
/// appearance, each based at its first listed member.
pub fn group_by_class(field: &Field, base: Subfield, gammas: &[Elem]) -> Result<Vec<ConjugacySelection>> {
    let mut sorted = gammas.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::PreconditionViolated("repeated element in selection".into()));
    }
    if gammas.iter().any(|g| g.is_zero()) {
        return Err(Error::ZeroElement);
    }
    let mut used = vec![false; gammas.len()];
    let mut out = Vec::new();
    for i in 0..gammas.len() {
        if used[i] {
            continue;
        }
        let class = field.conjugacy_class(gammas[i], base);
        let mut offsets = Vec::new();
        for (j, g) in gammas.iter().enumerate() {
            if let Some(s) = class.iter().position(|c| c == g) {
                used[j] = true;
                offsets.push(s as u32);
            }
        }
        out.push(ConjugacySelection::new(field, base, gammas[i], &offsets)?);
    }
    Ok(out)
}

fn check_indices(set: IndexSet, m: usize) -> Result<()> {
    match set.iter().find(|&i| i >= m) {
        Some(i) => Err(Error::IndexOutOfRange { index: i + 1, m }),
        None => Ok(()),
    }
}

/// Smallest set of basis indices whose span contains `sub`: the union of the
/// supports of its elements.
pub fn minimal_subbasis(basis: &Basis, sub: Subfield) -> IndexSet {
    let f = basis.field();
    f.subfield_elements(sub)
        .into_iter()
        .fold(IndexSet::empty(), |acc, e| acc.union(basis.support_indices(&[e])))
}

/// Constraint matrix of Γ type.
#[derive(Clone, Debug)]
pub struct GammaMatrix {
    /// Rows (offset, ρ), columns (excluded index, basis index or fold index).
    pub matrix: Matrix,
    /// For subfield γ: the minimal subbasis of GF(q^{m_γ}).
    pub minimal_subbasis: Option<IndexSet>,
    /// True when columns over the minimal subbasis were folded down to
    /// the m_γ powers of γ because the subbasis is larger than m_γ.
    pub folded: bool,
}

impl GammaMatrix {
    pub fn build(sel: &ConjugacySelection, basis: &Basis, excluded: IndexSet) -> Self {
        let f = &**basis.field();
        let base = basis.base();
        let m = basis.m();
        let beta = basis.elements();
        let (columns, minimal, folded): (Vec<Elem>, Option<IndexSet>, bool) = if sel.m_gamma() as usize == m {
            (beta.to_vec(), None, false)
        } else {
            let sub = sel.subfield(f, base);
            let j = minimal_subbasis(basis, sub);
            if j.len() == sel.m_gamma() as usize {
                (j.iter().map(|l| beta[l]).collect(), Some(j), false)
            } else {
                // Fold with M_J[l][b] = μ_l(γ^b): Σ_l M_J[l][b] β_l = γ^b.
                let cols = (0..sel.m_gamma() as u64).map(|b| f.pow(sel.gamma(), b)).collect();
                (cols, Some(j), true)
            }
        };
        let mut rows = Vec::with_capacity(sel.k() * m);
        for &s in sel.offsets() {
            for &rho in beta {
                let mut row = Vec::with_capacity(excluded.len() * columns.len());
                for ia in excluded.iter() {
                    for &w in &columns {
                        row.push(basis.coord(f.mul(rho, f.frobenius(w, base, s)), ia));
                    }
                }
                rows.push(row);
            }
        }
        let width = excluded.len() * columns.len();
        GammaMatrix {
            matrix: Matrix::from_rows_with_cols(rows, width).expect("uniform rows"),
            minimal_subbasis: minimal,
            folded,
        }
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.matrix.rank(field)
    }
}

/// Subcode dimension mk - R(Γ), summed over conjugacy classes.
/// An empty exclusion leaves the whole code, mk.
pub fn dim_via_gamma(basis: &Basis, gammas: &[Elem], excluded: IndexSet) -> Result<usize> {
    let m = basis.m();
    check_indices(excluded, m)?;
    let f = &**basis.field();
    let groups = group_by_class(f, basis.base(), gammas)?;
    if excluded.is_empty() {
        return Ok(m * gammas.len());
    }
    Ok(groups
        .iter()
        .map(|sel| m * sel.k() - GammaMatrix::build(sel, basis, excluded).rank(f))
        .sum())
}

/// Constraint matrix of Θ type.
#[derive(Clone, Debug)]
pub struct ThetaMatrix {
    /// t × κ entries β_{i_a}^{q^{m_γ - z_b}} in the ambient field.
    pub entries: Matrix,
    /// The same rows with each entry written in GF(q^{m_γ})-coordinates.
    pub descended: Matrix,
}

impl ThetaMatrix {
    pub fn build(sel: &ConjugacySelection, basis: &Basis, included: IndexSet) -> Self {
        let f = &**basis.field();
        let base = basis.base();
        let mg = sel.m_gamma();
        let z = sel.z_set();
        let rows: Vec<Vec<Elem>> = included
            .iter()
            .map(|i| z.iter().map(|&zb| f.frobenius(basis.element(i), base, mg - zb)).collect())
            .collect();
        let entries = Matrix::from_rows_with_cols(rows, z.len()).expect("uniform rows");
        let descended = if mg as usize == basis.m() {
            entries.clone()
        } else {
            let sub = sel.subfield(f, base);
            let coords = Basis::polynomial(basis.field().clone(), sub).expect("power basis");
            let rows = entries
                .row_vecs()
                .into_iter()
                .map(|r| r.into_iter().flat_map(|e| coords.decompose(e)).collect())
                .collect();
            Matrix::from_rows_with_cols(rows, z.len() * coords.m()).expect("uniform rows")
        };
        ThetaMatrix { entries, descended }
    }

    /// Row rank with coefficients in GF(q^{m_γ}).
    pub fn rank(&self, field: &Field) -> usize {
        self.descended.rank(field)
    }
}

/// Subcode dimension m_γ·(t - R(Θ)), summed over conjugacy classes.
pub fn dim_via_theta(basis: &Basis, gammas: &[Elem], included: IndexSet) -> Result<usize> {
    if included.is_empty() {
        return Err(Error::EmptyInclusion);
    }
    check_indices(included, basis.m())?;
    let f = &**basis.field();
    let t = included.len();
    Ok(group_by_class(f, basis.base(), gammas)?
        .iter()
        .map(|sel| sel.m_gamma() as usize * (t - ThetaMatrix::build(sel, basis, included).rank(f)))
        .sum())
}

/// The symbol words β_j·g(γ_i), γ-major.
pub fn symbol_rows(basis: &Basis, gammas: &[Elem]) -> Result<Vec<Vec<Elem>>> {
    let f = &**basis.field();
    let mut rows = Vec::with_capacity(gammas.len() * basis.m());
    for &g in gammas {
        let gv = g_vector(f, g)?;
        for &b in basis.elements() {
            rows.push(gv.iter().map(|&x| f.mul(b, x)).collect());
        }
    }
    Ok(rows)
}

/// Rows of G_e reduced to the excluded coordinates of every symbol.
fn constraint_matrix(basis: &Basis, rows: &[Vec<Elem>], excluded: IndexSet) -> Matrix {
    let width = rows.first().map_or(0, Vec::len) * excluded.len();
    let cons = rows
        .iter()
        .map(|r| {
            r.iter()
                .flat_map(|&x| excluded.iter().map(move |i| basis.coord(x, i)))
                .collect()
        })
        .collect();
    Matrix::from_rows_with_cols(cons, width).expect("uniform rows")
}

/// Oracle: mk minus the rank of G_e restricted to the excluded coordinates.
pub fn dim_bruteforce(basis: &Basis, gammas: &[Elem], included: IndexSet) -> Result<usize> {
    check_indices(included, basis.m())?;
    let mk = basis.m() * gammas.len();
    if mk > ORACLE_MAX_DIM {
        return Err(Error::CapExceeded { size: mk as u128, cap: ORACLE_MAX_DIM as u128 });
    }
    if gammas.is_empty() {
        return Err(Error::ZeroDimension);
    }
    let rows = symbol_rows(basis, gammas)?;
    let excluded = included.complement(basis.m());
    if excluded.is_empty() {
        return Ok(mk);
    }
    Ok(mk - constraint_matrix(basis, &rows, excluded).rank(basis.field()))
}

/// Symbol words spanning the subspace subcode over GF(q).
pub fn subcode_basis(basis: &Basis, gammas: &[Elem], included: IndexSet) -> Result<Vec<Vec<Elem>>> {
    check_indices(included, basis.m())?;
    let f = &**basis.field();
    let rows = symbol_rows(basis, gammas)?;
    let excluded = included.complement(basis.m());
    if excluded.is_empty() {
        return Ok(rows);
    }
    let cons = constraint_matrix(basis, &rows, excluded);
    let n = rows.first().map_or(0, Vec::len);
    Ok(cons
        .left_nullspace(f)
        .into_iter()
        .map(|a| {
            let mut w = vec![Elem::ZERO; n];
            for (coef, row) in a.iter().zip(&rows) {
                if coef.is_zero() {
                    continue;
                }
                for (x, &r) in w.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(*coef, r));
                }
            }
            w
        })
        .collect())
}

/// For a single-class selection and a subcode codeword c(x), the cofactor
/// P(x) = c(x)·p_{γ^{-1}}(x)/(x^N - 1), or `None` if the division fails.
pub fn theta_cofactor(field: &Field, base: Subfield, sel: &ConjugacySelection, word: &[Elem]) -> Option<Poly> {
    let inv = field.inv(sel.gamma()).ok()?;
    let xn1 = Poly::x_pow_minus_one(field, field.group_order() as usize);
    let (common, r) = xn1.div_rem(&field.minimal_polynomial(inv, base), field).ok()?;
    if !r.is_zero() {
        return None;
    }
    let (p, r) = Poly::new(word.to_vec()).div_rem(&common, field).ok()?;
    r.is_zero().then_some(p)
}

/// Smallest t such that some t-element subbasis carries a nonzero codeword.
pub fn min_support_size(basis: &Basis, gammas: &[Elem]) -> Result<usize> {
    let m = basis.m();
    for t in 1..=m {
        for s in combinations(m, t) {
            if dim_via_theta(basis, gammas, s)? > 0 {
                return Ok(t);
            }
        }
    }
    Ok(m)
}

/// Size-t subsets of {0, .., m-1} in lexicographic order of index lists.
pub fn combinations(m: usize, t: usize) -> Vec<IndexSet> {
    fn rec(start: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
        if left == 0 {
            out.push(IndexSet::from_indices(cur.iter().copied()));
            return;
        }
        for i in start..=m - left {
            cur.push(i);
            rec(i + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if t <= m {
        rec(0, m, t, &mut Vec::new(), &mut out);
    }
    out
}

/// Checks that no nonzero codeword of G_e(γ_1..γ_k) is represented by a
/// proper subbasis, for pairwise non-conjugate non-subfield γ_i. Walks the
/// whole code when it fits under `cap`, otherwise checks that every
/// (m-1)-element subbasis has a zero-dimensional subcode.
pub fn nonconjugate_subbasis_check(basis: &Basis, gammas: &[Elem], cap: u128) -> Result<bool> {
    let f = &**basis.field();
    let base = basis.base();
    let m = basis.m();
    for &g in gammas {
        if g.is_zero() {
            return Err(Error::ZeroElement);
        }
        if f.minimal_dimension(g, base) as usize != m {
            return Err(Error::PreconditionViolated(format!("{} is a subfield element", f.fmt_elem(g))));
        }
    }
    let groups = group_by_class(f, base, gammas)?;
    if groups.len() != gammas.len() {
        return Err(Error::PreconditionViolated("selection contains conjugate elements".into()));
    }
    let rows = symbol_rows(basis, gammas)?;
    match Span::new(f, base, &rows, cap) {
        Ok(span) => {
            let full = IndexSet::full(m);
            let mut ok = true;
            span.for_each(|w| {
                if ok && w.iter().any(|e| !e.is_zero()) && basis.support_indices(w) != full {
                    ok = false;
                }
            });
            Ok(ok)
        }
        Err(Error::CapExceeded { .. }) => {
            for s in combinations(m, m - 1) {
                if dim_via_gamma(basis, gammas, s.complement(m))? != 0 {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Err(e) => Err(e),
    }
}

/// Result of [`min_subbasis_codeword_weight`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubbasisWeight {
    /// i·q^{m_γ-1}(q-1)(q^m-1)/(q^{m_γ}-1).
    pub formula: usize,
    /// A codeword whose minimal subbasis has exactly i elements.
    pub witness: Vec<Elem>,
    pub witness_support: IndexSet,
    /// Distinct GF(q)-weights seen over all such codewords.
    pub observed_weights: Vec<usize>,
    pub count: usize,
}

/// Weight of codewords of a single-class selection whose minimal subbasis
/// has i elements, by formula and by walking the code.
pub fn min_subbasis_codeword_weight(basis: &Basis, gammas: &[Elem], i: usize, cap: u128) -> Result<SubbasisWeight> {
    let f = &**basis.field();
    let base = basis.base();
    let groups = group_by_class(f, base, gammas)?;
    let [sel] = groups.as_slice() else {
        return Err(Error::PreconditionViolated("selection must be one conjugacy class".into()));
    };
    let q = base.order() as usize;
    let m = basis.m() as u32;
    let mg = sel.m_gamma();
    let formula = i * q.pow(mg - 1) * (q - 1) * ((q.pow(m) - 1) / (q.pow(mg) - 1));
    let rows = symbol_rows(basis, gammas)?;
    let span = Span::new(f, base, &rows, cap)?;
    let mut witness: Option<(Vec<Elem>, IndexSet)> = None;
    let mut weights = std::collections::BTreeSet::new();
    let mut count = 0;
    span.for_each(|w| {
        let support = basis.support_indices(w);
        if support.len() != i || w.iter().all(|e| e.is_zero()) {
            return;
        }
        count += 1;
        let wt: usize = (0..basis.m()).map(|j| expanded_weight(&basis.decompose_vector(w, j))).sum();
        weights.insert(wt);
        if witness.is_none() {
            witness = Some((w.to_vec(), support));
        }
    });
    let (witness, witness_support) = witness.ok_or(Error::NoSuchCodeword(i))?;
    Ok(SubbasisWeight {
        formula,
        witness,
        witness_support,
        observed_weights: weights.into_iter().collect(),
        count,
    })
}

/// Outcome of [`best_subbasis_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestSubbasis {
    pub basis_index: usize,
    pub subbasis: IndexSet,
    pub dimension: usize,
}

/// Maximizes the subcode dimension over every t-element subbasis of every
/// candidate; ties go to the earliest basis, then the lexicographically
/// first index list.
pub fn best_subbasis_search(gammas: &[Elem], candidates: &[Basis], t: usize) -> Result<BestSubbasis> {
    if t == 0 {
        return Err(Error::EmptyInclusion);
    }
    let mut best: Option<BestSubbasis> = None;
    for (bi, basis) in candidates.iter().enumerate() {
        let m = basis.m();
        if t > m {
            return Err(Error::IndexOutOfRange { index: t, m });
        }
        for s in combinations(m, t) {
            let d = dim_via_gamma(basis, gammas, s.complement(m))?;
            if best.as_ref().is_none_or(|b| d > b.dimension) {
                best = Some(BestSubbasis { basis_index: bi, subbasis: s, dimension: d });
            }
        }
    }
    best.ok_or_else(|| Error::PreconditionViolated("no candidate bases".into()))
}

/// The polynomial basis followed by the composite bases of every chain of
/// subfields from `base` up to the whole field. Each level uses the power
/// basis of the larger subfield's primitive element.
pub fn candidate_bases(field: &std::sync::Arc<Field>, base: Subfield) -> Result<Vec<Basis>> {
    let d0 = base.degree();
    let n = field.degree();
    let mut chains: Vec<Vec<u32>> = Vec::new();
    fn extend(cur: &mut Vec<u32>, n: u32, out: &mut Vec<Vec<u32>>) {
        let last = *cur.last().unwrap();
        if last == n {
            out.push(cur.clone());
            return;
        }
        for d in (last + 1)..=n {
            if d % last == 0 && n.is_multiple_of(d) {
                cur.push(d);
                extend(cur, n, out);
                cur.pop();
            }
        }
    }
    extend(&mut vec![d0], n, &mut chains);
    let mut out = vec![Basis::polynomial(field.clone(), base)?];
    for chain in chains {
        let mut elems = vec![Elem::ONE];
        for w in chain.windows(2) {
            let sub = field.subfield((field.characteristic() as u64).pow(w[1]))?;
            let eta = field.subfield_generator(sub);
            let ext = (w[1] / w[0]) as u64;
            elems = (0..ext)
                .flat_map(|e| {
                    let o = field.pow(eta, e);
                    elems.iter().map(move |&c| (o, c)).collect::<Vec<_>>()
                })
                .map(|(o, c)| field.mul(o, c))
                .collect();
        }
        let b = Basis::new(field.clone(), elems, base)?;
        if !out.contains(&b) {
            out.push(b);
        }
    }
    Ok(out)
}

/// Result of [`independent_component_count_bound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentBound {
    /// l_i for each listed γ_i: minimal subbasis size over φ(γ_i) ∩ list.
    pub l_values: Vec<usize>,
    pub bound: usize,
    /// GF(q)-rank of the m component words of the codeword.
    pub rank: usize,
}

/// Lower bound max l_i on the number of independent component words of
/// c = Σ θ_i g(γ_i), together with the actual rank.
pub fn independent_component_count_bound(basis: &Basis, thetas: &[Elem], gammas: &[Elem]) -> Result<ComponentBound> {
    if thetas.len() != gammas.len() {
        return Err(Error::LengthMismatch { expected: gammas.len(), got: thetas.len() });
    }
    if thetas.iter().any(|t| t.is_zero()) {
        return Err(Error::ZeroElement);
    }
    let f = &**basis.field();
    let base = basis.base();
    let n = f.group_order() as usize;
    let mut word = vec![Elem::ZERO; n];
    for (&th, &g) in thetas.iter().zip(gammas) {
        for (w, x) in word.iter_mut().zip(g_vector(f, g)?) {
            *w = f.add(*w, f.mul(th, x));
        }
    }
    let comps: Vec<Vec<Elem>> = (0..basis.m()).map(|j| basis.decompose_vector(&word, j)).collect();
    let rank = Matrix::from_rows(comps)?.rank(f);
    let mut l_values = Vec::with_capacity(gammas.len());
    for &g in gammas {
        let class = f.conjugacy_class(g, base);
        let members: Vec<Elem> = gammas.iter().copied().filter(|x| class.contains(x)).collect();
        l_values.push(min_support_size(basis, &members)?);
    }
    let bound = l_values.iter().copied().max().unwrap_or(0);
    Ok(ComponentBound { l_values, bound, rank })
}
