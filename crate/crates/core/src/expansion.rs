//! Base-field images of cyclic codes: expanded generator and parity-check
//! matrices, component words, χ_γ and the constant-weight codebooks.
//!
//! Expanded coordinates are symbol-major: symbol t occupies positions
//! t·m .. t·m + m - 1.

use serde::{Deserialize, Serialize};

use crate::basis::Basis;
use crate::cyclic::{g_vector, CyclicCode};
use crate::error::{Error, Result};
use crate::galois::{Elem, Field, Poly, Subfield};
use crate::linalg::Matrix;

/// Symbol-major GF(q) expansion of a symbol vector.
pub fn expand_vector(y: &[Elem], basis: &Basis) -> Vec<Elem> {
    let mut out = Vec::with_capacity(y.len() * basis.m());
    for &g in y {
        out.extend(basis.decompose(g));
    }
    out
}

/// Inverse of [`expand_vector`].
pub fn collapse_vector(expanded: &[Elem], basis: &Basis) -> Vec<Elem> {
    expanded.chunks(basis.m()).map(|c| basis.compose(c)).collect()
}

/// mK × mN matrix; row i·m + j is the expansion of β_j · g(γ_i).
pub fn expand_generator(code: &CyclicCode, basis: &Basis) -> Matrix {
    let f = &**code.field();
    let rows = code
        .gamma_elems()
        .into_iter()
        .flat_map(|gamma| {
            let g = g_vector(f, gamma).expect("gammas are nonzero");
            basis
                .elements()
                .iter()
                .map(|&b| {
                    let scaled: Vec<Elem> = g.iter().map(|&x| f.mul(b, x)).collect();
                    expand_vector(&scaled, basis)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Matrix::from_rows(rows).expect("rows share length mN")
}

/// mR × mN matrix; row (r, l), column (t, j) holds μ_l(h_{r,t} β_j).
pub fn expand_parity(code: &CyclicCode, basis: &Basis) -> Matrix {
    let f = &**code.field();
    let h = code.parity_check_matrix().matrix;
    let m = basis.m();
    let n = code.length();
    let mut out = Matrix::zeros(h.rows() * m, n * m);
    for r in 0..h.rows() {
        for t in 0..n {
            let hrt = h.get(r, t);
            for (j, &b) in basis.elements().iter().enumerate() {
                let mu = basis.decompose(f.mul(hrt, b));
                for (l, v) in mu.into_iter().enumerate() {
                    out.set(r * m + l, t * m + j, v);
                }
            }
        }
    }
    out
}

/// μ_j(c): the j-th coordinate of every symbol.
pub fn component_word(c: &[Elem], basis: &Basis, j: usize) -> Vec<Elem> {
    basis.decompose_vector(c, j)
}

pub fn component_poly(c: &[Elem], basis: &Basis, j: usize) -> Poly {
    Poly::new(component_word(c, basis, j))
}

/// χ_γ(x) = γ^{-1} ∏_{s=1}^{m_γ-1} (x - γ^{-q^s}).
pub fn chi_poly(field: &Field, gamma: Elem, base: Subfield) -> Result<Poly> {
    let inv = field.inv(gamma).map_err(|_| Error::ZeroElement)?;
    let class = field.conjugacy_class(inv, base);
    Ok(Poly::from_roots(field, &class[1..]).scale(inv, field))
}

/// Hamming weight over GF(q) of an expanded word.
pub fn expanded_weight(word: &[Elem]) -> usize {
    word.iter().filter(|e| !e.is_zero()).count()
}

/// One codeword of a constant-weight codebook.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodebookEntry {
    /// Message symbols as subfield indices.
    pub message: Vec<u32>,
    /// Codeword symbols as subfield indices.
    pub symbol_codeword: Vec<u32>,
    /// Base-p digits of the codeword; present only when q is prime, where
    /// it coincides with the symbol codeword.
    pub expanded_codeword: Option<Vec<u32>>,
    /// Hamming weight over GF(q).
    pub weight: usize,
}

/// The code C(N, m_γ) over GF(q) generated by (x^N - 1)/p_γ(x), with all of
/// its q^{m_γ} codewords u(x)·G(x).
#[derive(Clone, Debug)]
pub struct Codebook {
    pub base: Subfield,
    pub gamma: Elem,
    pub generator: Poly,
    pub dimension: usize,
    /// Codewords as ambient-field vectors with entries in GF(q), indexed by
    /// the message enumerated in lexicographic subfield-index order.
    pub codewords: Vec<Vec<Elem>>,
    pub messages: Vec<Vec<Elem>>,
}

impl Codebook {
    pub fn entries(&self, field: &Field) -> Vec<CodebookEntry> {
        let prime = self.base.degree() == 1;
        self.messages
            .iter()
            .zip(&self.codewords)
            .map(|(msg, cw)| {
                let idx = |v: &[Elem]| -> Vec<u32> {
                    v.iter().map(|&e| field.subfield_index(e, self.base).expect("subfield symbol")).collect()
                };
                let symbol_codeword = idx(cw);
                CodebookEntry {
                    message: idx(msg),
                    expanded_codeword: prime.then(|| symbol_codeword.clone()),
                    symbol_codeword,
                    weight: expanded_weight(cw),
                }
            })
            .collect()
    }

    /// The nonzero codewords.
    pub fn nonzero(&self) -> impl Iterator<Item = &Vec<Elem>> {
        self.codewords.iter().filter(|c| c.iter().any(|e| !e.is_zero()))
    }

    /// One line per codeword: subfield indices as digits, no separators
    /// when q ≤ 10, commas otherwise.
    pub fn to_digit_text(&self, field: &Field) -> String {
        self.entries(field)
            .iter()
            .map(|e| digit_string(&e.symbol_codeword, self.base.order()) + "\n")
            .collect()
    }
}

pub(crate) fn digit_string(digits: &[u32], radix: u64) -> String {
    if radix <= 10 {
        digits.iter().map(|d| char::from_digit(*d, 10).unwrap()).collect()
    } else {
        digits.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Matrix export with entries as subfield indices, one row per line.
pub fn matrix_digit_text(mat: &Matrix, field: &Field, base: Subfield) -> String {
    let mut out = String::new();
    for r in 0..mat.rows() {
        let digits: Vec<u32> = mat
            .row(r)
            .iter()
            .map(|&e| field.subfield_index(e, base).expect("entry lies in the base field"))
            .collect();
        out.push_str(&digit_string(&digits, base.order()));
        out.push('\n');
    }
    out
}

/// Enumerates the codebook of C(N, m_γ) = <(x^N - 1)/p_γ(x)> over `base`.
pub fn constant_weight_codebook(field: &Field, base: Subfield, gamma: Elem) -> Result<Codebook> {
    if gamma.is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = field.group_order() as usize;
    let p_gamma = field.minimal_polynomial(gamma, base);
    let (generator, _) = Poly::x_pow_minus_one(field, n).div_rem(&p_gamma, field)?;
    let k = p_gamma.degree().unwrap();
    let symbols = field.subfield_elements(base);
    let q = symbols.len();
    let total = q.pow(k as u32);
    let mut messages = Vec::with_capacity(total);
    let mut codewords = Vec::with_capacity(total);
    for idx in 0..total {
        let mut v = idx;
        let mut msg = vec![Elem::ZERO; k];
        for slot in msg.iter_mut().rev() {
            *slot = symbols[v % q];
            v /= q;
        }
        let prod = Poly::new(msg.clone()).mul(&generator, field);
        let cw: Vec<Elem> = (0..n).map(|t| prod.coeff(t)).collect();
        messages.push(msg);
        codewords.push(cw);
    }
    Ok(Codebook { base, gamma, generator, dimension: k, codewords, messages })
}

/// Smallest period of a word under cyclic shift.
pub fn cyclic_period(word: &[Elem]) -> usize {
    let n = word.len();
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| (0..n).all(|t| word[t] == word[(t + d) % n]))
        .unwrap_or(n)
}
