//! Shared fixtures and independent checks for the integration tests and the
//! acceptance runner.
#![allow(dead_code)]

use std::sync::Arc;

use xcyclic::basis::Basis;
use xcyclic::cyclic::{g_poly, CyclicCode};
use xcyclic::expansion::{chi_poly, expand_generator, expand_parity};
use xcyclic::galois::{Elem, Field, Poly, Subfield};
use xcyclic::linalg::Matrix;

/// The published nonzero codewords of <(x^15-1)/p_{α^{-1}}(x)> over GF(2).
pub const GF16_LISTING: [&str; 15] = [
    "111101011001000",
    "011110101100100",
    "100011110101100",
    "001111010110010",
    "110010001111010",
    "010001111010110",
    "101100100011110",
    "111010110010001",
    "000111101011001",
    "100100011110101",
    "011001000111101",
    "110101100100011",
    "001000111101011",
    "101011001000111",
    "010110010001111",
];

/// One period of each published nonzero codeword of <(x^63-1)/p_{α^{-9}}(x)>.
pub const GF64_BLOCKS: [&str; 7] = [
    "1011100", "1110010", "0101110", "0111001", "1100101", "1001011", "0010111",
];

pub fn bits(word: &[Elem]) -> String {
    word.iter().map(|e| if e.is_zero() { '0' } else { '1' }).collect()
}

pub fn reversed(word: &str) -> String {
    // c_i -> c_{-i mod N}
    let c: Vec<char> = word.chars().collect();
    let n = c.len();
    (0..n).map(|i| c[(n - i) % n]).collect()
}

pub fn pows(f: &Field, ks: &[i64]) -> Vec<Elem> {
    ks.iter().map(|&k| f.alpha_pow(k)).collect()
}

pub fn position_set(basis: &Basis, elems: &[Elem]) -> xcyclic::basis::IndexSet {
    xcyclic::basis::IndexSet::from_indices(
        elems
            .iter()
            .map(|e| basis.elements().iter().position(|b| b == e).expect("element of basis")),
    )
}

/// Rank of G_e equals mK and G_e·H_e^T vanishes.
pub fn expansion_is_consistent(code: &CyclicCode, basis: &Basis) -> bool {
    let f = &**code.field();
    let ge = expand_generator(code, basis);
    let he = expand_parity(code, basis);
    ge.rank(f) == basis.m() * code.dimension() && ge.mul(&he.transpose(), f).unwrap().is_zero()
}

/// (γx - 1)·g_γ(x) = γ^N x^N - 1.
pub fn geometric_identity(f: &Field, gamma: Elem) -> bool {
    let n = f.group_order() as usize;
    let lhs = Poly::new(vec![f.neg(Elem::ONE), gamma]).mul(&g_poly(f, gamma).unwrap(), f);
    let rhs = Poly::monomial(f.pow(gamma, n as u64), n).sub(&Poly::one(), f);
    lhs == rhs
}

/// g_γ(x) = (x^N - 1)/p_{γ^{-1}}(x) · χ_γ(x), with χ_γ of degree m_γ - 1.
pub fn factorization_identity(f: &Field, base: Subfield, gamma: Elem) -> bool {
    let inv = f.inv(gamma).unwrap();
    let xn1 = Poly::x_pow_minus_one(f, f.group_order() as usize);
    let (cof, rem) = xn1.div_rem(&f.minimal_polynomial(inv, base), f).unwrap();
    let chi = chi_poly(f, gamma, base).unwrap();
    rem.is_zero()
        && chi.degree() == Some(f.minimal_dimension(gamma, base) as usize - 1)
        && g_poly(f, gamma).unwrap() == cof.mul(&chi, f)
}

/// For coordinate j, the m × N matrix with rows [f_{i,j}(μ(x_t))]_t.
fn f_rows(basis: &Basis, j: usize, points: &[Elem]) -> Matrix {
    let f = &**basis.field();
    let sc = basis.structure_constants(&[]);
    let rows = (0..basis.m())
        .map(|i| {
            points
                .iter()
                .map(|&x| sc.f_coeff(i, j, &basis.decompose(x), f))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).unwrap()
}

/// No nontrivial ν annihilates Σ_i ν_i f_{i,j}(μ(γ)) over all nonzero γ.
pub fn coefficient_functions_independent(basis: &Basis) -> bool {
    let f = &**basis.field();
    let all: Vec<Elem> = f.elements().skip(1).collect();
    (0..basis.m()).all(|j| f_rows(basis, j, &all).rank(f) == basis.m())
}

/// Whether the m vectors [f_{i,j}(μ(γ^t))]_{t<N} are independent for every j.
pub fn orbit_functions_independent(basis: &Basis, gamma: Elem) -> bool {
    let f = &**basis.field();
    let orbit: Vec<Elem> = (0..f.group_order() as u64).map(|t| f.pow(gamma, t)).collect();
    (0..basis.m()).all(|j| f_rows(basis, j, &orbit).rank(f) == basis.m())
}

/// Every element survives decompose/compose, and μ_i(γ) = Tr(γβ'_i).
pub fn round_trips(basis: &Basis) -> bool {
    let f = &**basis.field();
    let dual = basis.dual_basis();
    f.elements().all(|g| {
        let coords = basis.decompose(g);
        basis.compose(&coords) == g
            && coords
                .iter()
                .enumerate()
                .all(|(i, &c)| f.trace(f.mul(g, dual.element(i)), basis.base()) == c)
    })
}

/// Fields of order ≤ 2^8 used by the structural sweeps.
pub fn small_fields() -> Vec<Arc<Field>> {
    let mut out: Vec<Arc<Field>> = (2..=8).map(|n| Arc::new(Field::binary(n).unwrap())).collect();
    for (p, n) in [(3, 2), (3, 3), (5, 2), (7, 2), (3, 4)] {
        out.push(Arc::new(Field::new(p, n, None).unwrap()));
    }
    out
}
