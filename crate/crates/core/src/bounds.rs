//! Minimum-distance bounds: Plotkin matching for the constant-weight class
//! codes, the generalized-concatenated lower bound for expanded codes, exact
//! minimum distance by enumeration, and low-weight witnesses for binary
//! expanded Reed-Solomon codes.

use std::sync::Arc;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::basis::{Basis, IndexSet};
use crate::cyclic::{g_vector, CyclicCode};
use crate::enumerate::{check_cap, Span};
use crate::error::{Error, Result};
use crate::expansion::{expand_vector, expanded_weight};
use crate::galois::{Elem, Field, Poly, Subfield};
use crate::subspace::{self, combinations, group_by_class, min_support_size, symbol_rows};

/// Earlier published lower bounds for the three GF(2^5) selections
/// {21,22}, {21,22,23} and {18,..,22} (Sakakibara and Kasahara).
pub const SAK_REFERENCE: [(&[u32], usize); 3] = [
    (&[21, 22], 48),
    (&[21, 22, 23], 48),
    (&[18, 19, 20, 21, 22], 36),
];

/// N(q-1)/(q - q/A) as an exact fraction, with its floor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotkinBound {
    pub value: Ratio<u128>,
    pub floor: u128,
}

pub fn plotkin_bound(n: u64, q: u64, a: u128) -> Result<PlotkinBound> {
    if a < 2 || n == 0 || q < 2 {
        return Err(Error::PreconditionViolated("Plotkin bound needs N ≥ 1, q ≥ 2, A ≥ 2".into()));
    }
    let value = Ratio::new(n as u128 * (q as u128 - 1) * a, q as u128 * (a - 1));
    Ok(PlotkinBound { floor: value.to_integer(), value })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlotkinVariant {
    /// <(x^N-1)/p_γ(x)>, A = q^{m_γ}.
    ClassCode,
    /// <(x^N-1)/((x-1)p_γ(x))>, A = q^{m+1}.
    WithXMinusOne,
    /// Nonzero words of the class code, A = q^m - 1.
    PuncturedZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotkinMatch {
    pub variant: PlotkinVariant,
    pub length: u64,
    pub size: u128,
    pub bound: PlotkinBound,
    pub dmin: usize,
    /// d_min equals the floored bound; for the class code the bound must
    /// also be an integer.
    pub matches: bool,
}

/// Largest code size walked by [`plotkin_match_check`] for pairwise distances.
const PAIRWISE_LIMIT: u128 = 1 << 12;

/// Computes d_min of the variant's code by enumeration and compares it with
/// the Plotkin bound at the variant's size.
pub fn plotkin_match_check(field: &Field, base: Subfield, gamma: Elem, variant: PlotkinVariant, cap: u128) -> Result<PlotkinMatch> {
    if gamma.is_zero() {
        return Err(Error::ZeroElement);
    }
    let m = field.ext_degree(base) as usize;
    let mg = field.minimal_dimension(gamma, base) as usize;
    if variant != PlotkinVariant::ClassCode && mg != m {
        return Err(Error::PreconditionViolated(format!(
            "{} is a subfield element",
            field.fmt_elem(gamma)
        )));
    }
    let n = field.group_order() as usize;
    let xn1 = Poly::x_pow_minus_one(field, n);
    let mut divisor = field.minimal_polynomial(gamma, base);
    if variant == PlotkinVariant::WithXMinusOne {
        divisor = divisor.mul(&Poly::linear(field, Elem::ONE), field);
    }
    let (g, _) = xn1.div_rem(&divisor, field)?;
    let k = divisor.degree().unwrap_or(0);
    let gens: Vec<Vec<Elem>> = (0..k)
        .map(|j| (0..n).map(|t| if t >= j { g.coeff(t - j) } else { Elem::ZERO }).collect())
        .collect();
    let span = Span::new(field, base, &gens, cap)?;
    let q = base.order();
    let (size, dmin) = match variant {
        PlotkinVariant::PuncturedZero => {
            let size = crate::enumerate::span_size(q, k) - 1;
            if size > PAIRWISE_LIMIT {
                return Err(Error::CapExceeded { size, cap: PAIRWISE_LIMIT });
            }
            let mut words = Vec::with_capacity(size as usize);
            span.for_each(|w| {
                if w.iter().any(|e| !e.is_zero()) {
                    words.push(w.to_vec());
                }
            });
            let mut best = usize::MAX;
            for (i, a) in words.iter().enumerate() {
                for b in &words[i + 1..] {
                    best = best.min(a.iter().zip(b).filter(|(x, y)| x != y).count());
                }
            }
            (size, best)
        }
        _ => (crate::enumerate::span_size(q, k), span.min_weight().unwrap_or(0)),
    };
    let bound = plotkin_bound(n as u64, q, size)?;
    let mut matches = dmin as u128 == bound.floor;
    if variant == PlotkinVariant::ClassCode {
        matches &= bound.value.is_integer();
    }
    Ok(PlotkinMatch { variant, length: n as u64, size, bound, dmin, matches })
}

/// BCH bound: one more than the longest cyclic run of consecutive roots.
pub fn bch_bound(n: u32, roots: &[u32]) -> usize {
    let mut is_root = vec![false; n as usize];
    for &r in roots {
        is_root[(r % n) as usize] = true;
    }
    if is_root.iter().all(|&b| b) {
        return n as usize + 1;
    }
    let start = is_root.iter().position(|&b| !b).unwrap();
    let (mut best, mut run) = (0, 0);
    for t in 1..=n as usize {
        if is_root[(start + t) % n as usize] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LevelMethod {
    /// Enumerated every codeword of the level code.
    Exact,
    /// BCH bound met by a codeword of the GF(q) subfield subcode, hence exact.
    BchCertified,
    /// BCH bound only.
    BchLowerBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub i: usize,
    /// Smallest exponent of each conjugacy class taken at this level.
    pub classes: Vec<u32>,
    /// Exponents of the rows g(α^e) of the level code.
    pub gammas: Vec<u32>,
    pub roots: Vec<u32>,
    pub k: usize,
    pub d: usize,
    pub product: usize,
    pub method: LevelMethod,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub representative: u32,
    pub members: Vec<u32>,
    pub min_subbasis: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub p: u32,
    pub n: u32,
    pub q: u64,
    pub basis: String,
    pub gammas: Vec<u32>,
    pub classes: Vec<ClassReport>,
    pub levels: Vec<LevelReport>,
    pub bound: usize,
    pub exact_dmin: Option<usize>,
}

impl BoundReport {
    /// True when every level distance is exact.
    pub fn all_exact(&self) -> bool {
        self.levels.iter().all(|l| l.method != LevelMethod::BchLowerBound)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GccOptions {
    pub cap: u128,
    /// Fail with `LevelTooLarge` instead of falling back to the BCH bound.
    pub require_exact: bool,
}

impl Default for GccOptions {
    fn default() -> Self {
        GccOptions { cap: crate::enumerate::DEFAULT_CAP, require_exact: false }
    }
}

/// Lower bound min_i i·d^(i) on the GF(q) minimum distance of G_e(γ-list).
///
/// Each conjugacy class contributes its minimal achievable subbasis size l_c
/// under `basis`; level i collects the full classes with l_c ≤ i and d^(i) is
/// the symbol-wise minimum distance of the q^m-ary cyclic code they span.
pub fn gcc_dmin_bound(basis: &Basis, gammas: &[Elem], opts: GccOptions) -> Result<BoundReport> {
    if gammas.is_empty() {
        return Err(Error::ZeroDimension);
    }
    let f = basis.field();
    let base = basis.base();
    let m = basis.m();
    let log = |e: Elem| f.log(e).expect("nonzero");
    let groups = group_by_class(f, base, gammas)?;
    let mut classes = Vec::with_capacity(groups.len());
    for sel in &groups {
        let members = sel.elements(f, base);
        let full: Vec<u32> = f.conjugacy_class(sel.gamma(), base).into_iter().map(log).collect();
        classes.push((full, members.iter().map(|&e| log(e)).collect::<Vec<_>>(), min_support_size(basis, &members)?));
    }
    let mut levels = Vec::new();
    for i in 1..=m {
        let taken: Vec<&(Vec<u32>, Vec<u32>, usize)> = classes.iter().filter(|c| c.2 <= i).collect();
        if taken.is_empty() {
            continue;
        }
        let mut level_gammas: Vec<u32> = taken.iter().flat_map(|c| c.0.iter().copied()).collect();
        level_gammas.sort_unstable();
        let code = CyclicCode::from_gammas(f.clone(), &level_gammas)?;
        let (d, method) = level_distance(f, base, &code, opts, i)?;
        levels.push(LevelReport {
            i,
            classes: taken.iter().map(|c| *c.0.iter().min().unwrap()).collect(),
            gammas: level_gammas,
            roots: code.roots().to_vec(),
            k: code.dimension(),
            d,
            product: i * d,
            method,
        });
    }
    let bound = levels.iter().map(|l| l.product).min().unwrap_or(0);
    let mut sorted: Vec<u32> = gammas.iter().map(|&e| log(e)).collect();
    sorted.sort_unstable();
    Ok(BoundReport {
        p: f.characteristic(),
        n: f.degree(),
        q: base.order(),
        basis: basis.format(),
        gammas: sorted,
        classes: classes
            .into_iter()
            .map(|(full, members, l)| ClassReport { representative: *full.iter().min().unwrap(), members, min_subbasis: l })
            .collect(),
        levels,
        bound,
        exact_dmin: None,
    })
}

fn level_distance(f: &Arc<Field>, base: Subfield, code: &CyclicCode, opts: GccOptions, i: usize) -> Result<(usize, LevelMethod)> {
    let whole = f.whole();
    let k = code.dimension();
    if check_cap(whole.order(), k, opts.cap).is_ok() {
        let rows = code.generator_matrix().matrix.row_vecs();
        let span = Span::new(f, whole, &rows, opts.cap)?;
        return Ok((span.min_weight().unwrap_or(0), LevelMethod::Exact));
    }
    let bch = bch_bound(f.group_order(), code.roots());
    // The level roots are unions of q-conjugacy classes, so the generator
    // polynomial has GF(q) coefficients and its GF(q)-span is a subcode.
    if check_cap(base.order(), k, opts.cap).is_ok() {
        let g = code.generator_poly();
        let nn = code.length();
        let shifts: Vec<Vec<Elem>> = (0..k)
            .map(|j| (0..nn).map(|t| if t >= j { g.coeff(t - j) } else { Elem::ZERO }).collect())
            .collect();
        let sub = Span::new(f, base, &shifts, opts.cap)?;
        if sub.min_weight() == Some(bch) {
            return Ok((bch, LevelMethod::BchCertified));
        }
    }
    if opts.require_exact {
        return Err(Error::LevelTooLarge { level: i });
    }
    Ok((bch, LevelMethod::BchLowerBound))
}

/// Minimum GF(q)-weight over the nonzero words of the expanded code G_e.
pub fn exact_dmin_expanded(basis: &Basis, gammas: &[Elem], cap: u128) -> Result<usize> {
    if gammas.is_empty() {
        return Err(Error::ZeroDimension);
    }
    group_by_class(basis.field(), basis.base(), gammas)?;
    let rows: Vec<Vec<Elem>> = symbol_rows(basis, gammas)?
        .iter()
        .map(|r| expand_vector(r, basis))
        .collect();
    let span = Span::new(basis.field(), basis.base(), &rows, cap)?;
    span.min_weight().ok_or(Error::ZeroDimension)
}

/// A low-weight codeword of a binary expanded Reed-Solomon code.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BadnessWitness {
    pub m: u32,
    pub length: u32,
    pub dimension: usize,
    pub delta: i64,
    /// ⌊log2(K - δ)⌋.
    pub k: u32,
    /// Exponents 2^s of the selected conjugates α^{2^s}.
    pub selected: Vec<u32>,
    /// Subbasis indices (0-based) of the polynomial basis carrying the witness.
    pub subbasis: Vec<usize>,
    pub support: Vec<usize>,
    /// Symbol codeword as field-element codes.
    pub symbol_codeword: Vec<u32>,
    pub weight: usize,
    /// (m-k)·2^{m-1} for δ ≥ 1, (m-k_2+k_1)·2^{m-1} otherwise.
    pub weight_bound: usize,
    /// For δ < 1: whether the witness also meets (m-(k_2+k_1))·2^{m-1}.
    pub meets_stronger: Option<bool>,
    pub ratio: f64,
}

/// Witness enumeration limit on the subcode size.
const WITNESS_WALK_LIMIT: u128 = 1 << 20;

/// Builds the binary (2^m-1, ⌊r(2^m-1)⌋) Reed-Solomon code with roots
/// α^δ, .., α^{δ+R-1}, selects the conjugates α^{2^s} among its generator
/// rows, and returns a lightest codeword supported on the first m-k'+1
/// polynomial basis elements, k' being the number of selected conjugates.
pub fn badness_witness(m: u32, rate: f64, delta: i64) -> Result<BadnessWitness> {
    if !(1..=10).contains(&m) {
        return Err(Error::PreconditionViolated("witness search needs 1 ≤ m ≤ 10".into()));
    }
    if !(0.0..1.0).contains(&rate) || rate <= 0.0 {
        return Err(Error::PreconditionViolated("rate must lie in (0, 1)".into()));
    }
    let f = Arc::new(Field::binary(m)?);
    let two = f.prime_subfield();
    let n = f.group_order();
    let kk = (rate * n as f64).floor() as i64;
    let r = n as i64 - kk;
    if kk < 1 {
        return Err(Error::ZeroDimension);
    }
    let roots: Vec<u32> = (0..r).map(|j| (delta + j).rem_euclid(n as i64) as u32).collect();
    let code = CyclicCode::from_roots(f.clone(), &roots)?;
    let span_top = kk - delta;
    if span_top < 1 {
        return Err(Error::PreconditionViolated("K - δ must be positive".into()));
    }
    let k = span_top.ilog2();
    let selected: Vec<u32> = (0..m)
        .map(|s| (1u64 << s) as u32 % n)
        .filter(|e| code.gammas().binary_search(e).is_ok())
        .collect();
    if selected.is_empty() {
        return Err(Error::NoWitnessFound);
    }
    let basis = Basis::polynomial(f.clone(), two)?;
    let elems: Vec<Elem> = selected.iter().map(|&e| f.alpha_pow(e as i64)).collect();
    let t = (m as usize + 1).saturating_sub(selected.len()).max(1);
    let sub = IndexSet::from_indices(0..t);
    let gens = subspace::subcode_basis(&basis, &elems, sub)?;
    let weight_of = |w: &[Elem]| (0..m as usize).map(|j| expanded_weight(&basis.decompose_vector(w, j))).sum::<usize>();
    let mut best: Option<(usize, Vec<Elem>)> = None;
    if crate::enumerate::span_size(2, gens.len()) <= WITNESS_WALK_LIMIT {
        Span::new(&f, two, &gens, WITNESS_WALK_LIMIT)?.for_each(|w| {
            if w.iter().any(|e| !e.is_zero()) {
                let wt = weight_of(w);
                if best.as_ref().is_none_or(|b| wt < b.0) {
                    best = Some((wt, w.to_vec()));
                }
            }
        });
    } else {
        for w in &gens {
            let wt = weight_of(w);
            if best.as_ref().is_none_or(|b| wt < b.0) {
                best = Some((wt, w.clone()));
            }
        }
    }
    let (weight, word) = best.ok_or(Error::NoWitnessFound)?;
    let half = 1usize << (m - 1);
    let (weight_bound, meets_stronger) = if delta >= 1 {
        ((m as usize).saturating_sub(k as usize) * half, None)
    } else {
        let k1 = ceil_log2((-delta).max(1) as u64);
        let k2 = k;
        let weak = (m as usize + k1 as usize).saturating_sub(k2 as usize) * half;
        let strong = (m as usize).saturating_sub((k2 + k1) as usize) * half;
        (weak, Some(weight <= strong))
    };
    if weight > weight_bound {
        return Err(Error::NoWitnessFound);
    }
    Ok(BadnessWitness {
        m,
        length: n,
        dimension: kk as usize,
        delta,
        k,
        selected,
        subbasis: sub.to_vec(),
        support: basis.support_indices(&word).to_vec(),
        symbol_codeword: word.iter().map(|e| e.0).collect(),
        weight,
        weight_bound,
        meets_stronger,
        ratio: weight as f64 / (m as f64 * n as f64),
    })
}

fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// g(α^{N/3}) in GF(2^m), m even, expanded in the composite basis with inner
/// part {1, α^{N/3}} over GF(4) and outer part {1, α, .., α^{m/2-1}}.
#[derive(Clone, Debug)]
pub struct SmallSubfieldWord {
    pub basis: Basis,
    pub support: IndexSet,
    pub weight: usize,
    /// 4N/3.
    pub expected: usize,
}

pub fn small_subfield_weight(m: u32) -> Result<SmallSubfieldWord> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(Error::PreconditionViolated("m must be even".into()));
    }
    let f = Arc::new(Field::binary(m)?);
    let two = f.prime_subfield();
    let gf4 = f.subfield(4)?;
    let n = f.group_order();
    let w = f.alpha_pow((n / 3) as i64);
    let outer: Vec<Elem> = (0..m as i64 / 2).map(|e| f.alpha_pow(e)).collect();
    let basis = Basis::composite(f.clone(), two, gf4, &[Elem::ONE, w], &outer)?;
    let word = g_vector(&f, w)?;
    let weight = expanded_weight(&expand_vector(&word, &basis));
    Ok(SmallSubfieldWord {
        support: basis.support_indices(&word),
        basis,
        weight,
        expected: 4 * n as usize / 3,
    })
}

/// The smallest subbasis size among `t`-element candidates that carries a
/// nonzero codeword, searched exhaustively (used to cross-check level sizes).
pub fn min_support_size_exhaustive(basis: &Basis, gammas: &[Elem]) -> Result<usize> {
    let m = basis.m();
    for t in 1..=m {
        for s in combinations(m, t) {
            if subspace::dim_via_gamma(basis, gammas, s.complement(m))? > 0 {
                return Ok(t);
            }
        }
    }
    Ok(m)
}
