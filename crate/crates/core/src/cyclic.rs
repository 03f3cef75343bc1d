//! Primitive cyclic codes of length N = q^m - 1 over the ambient field,
//! given by the α-exponents of the generator polynomial's roots.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{Elem, Field, Poly};
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct CyclicCode {
    field: Arc<Field>,
    roots: Vec<u32>,
    gammas: Vec<u32>,
}

/// Serializable code description: roots are α-exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub p: u32,
    pub n: u32,
    pub q: u64,
    pub roots: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixRole {
    Generator,
    Parity,
}

/// A symbol-level matrix tagged with its role.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolMatrix {
    pub role: MatrixRole,
    pub matrix: Matrix,
}

/// Element counts of a symbol word and its Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    pub counts: BTreeMap<Elem, usize>,
    pub weight: usize,
}

impl WeightProfile {
    pub fn of(word: &[Elem]) -> Self {
        let mut counts = BTreeMap::new();
        for &c in word {
            *counts.entry(c).or_insert(0) += 1;
        }
        let weight = word.len() - counts.get(&Elem::ZERO).copied().unwrap_or(0);
        WeightProfile { counts, weight }
    }

    pub fn count(&self, e: Elem) -> usize {
        self.counts.get(&e).copied().unwrap_or(0)
    }
}

/// g(γ) = [1, γ, .., γ^{N-1}].
pub fn g_vector(field: &Field, gamma: Elem) -> Result<Vec<Elem>> {
    let e = field.log(gamma).ok_or(Error::ZeroElement)? as i64;
    let n = field.group_order() as i64;
    Ok((0..n).map(|t| field.alpha_pow(e * t)).collect())
}

/// g_γ(x) = 1 + γx + .. + γ^{N-1}x^{N-1}.
pub fn g_poly(field: &Field, gamma: Elem) -> Result<Poly> {
    Ok(Poly::new(g_vector(field, gamma)?))
}

/// Hamming weight over ambient-field symbols.
pub fn symbol_weight(word: &[Elem]) -> usize {
    word.iter().filter(|e| !e.is_zero()).count()
}

impl CyclicCode {
    pub fn from_roots(field: Arc<Field>, roots: &[u32]) -> Result<Self> {
        let n = field.group_order();
        let mut seen = vec![false; n as usize];
        for &e in roots {
            if e >= n {
                return Err(Error::ExponentOutOfRange { exponent: e, n });
            }
            if std::mem::replace(&mut seen[e as usize], true) {
                return Err(Error::DuplicateRoot(e));
            }
        }
        if roots.len() == n as usize {
            return Err(Error::ZeroDimension);
        }
        let mut sorted = roots.to_vec();
        sorted.sort_unstable();
        let gammas = (0..n).filter(|&e| !seen[((n - e) % n) as usize]).collect();
        Ok(CyclicCode { field, roots: sorted, gammas })
    }

    /// The code whose generator matrix rows are g(α^e) for the given exponents.
    pub fn from_gammas(field: Arc<Field>, gammas: &[u32]) -> Result<Self> {
        let n = field.group_order();
        let mut is_gamma = vec![false; n as usize];
        for &e in gammas {
            if e >= n {
                return Err(Error::ExponentOutOfRange { exponent: e, n });
            }
            if std::mem::replace(&mut is_gamma[e as usize], true) {
                return Err(Error::DuplicateRoot(e));
            }
        }
        let roots: Vec<u32> = (0..n).filter(|&e| !is_gamma[((n - e) % n) as usize]).collect();
        Self::from_roots(field, &roots)
    }

    pub fn from_generator_poly(field: Arc<Field>, g: &Poly) -> Result<Self> {
        let n = field.group_order();
        let xn1 = Poly::x_pow_minus_one(&field, n as usize);
        if g.is_zero() || !g.divides(&xn1, &field)? {
            return Err(Error::NotDivisor);
        }
        let roots: Vec<u32> = (0..n)
            .filter(|&e| g.eval(field.alpha_pow(e as i64), &field).is_zero())
            .collect();
        Self::from_roots(field, &roots)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.field.group_order() as usize
    }

    pub fn dimension(&self) -> usize {
        self.gammas.len()
    }

    pub fn redundancy(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[u32] {
        &self.roots
    }

    /// Exponents e of the generator matrix rows g(α^e), ascending.
    pub fn gammas(&self) -> &[u32] {
        &self.gammas
    }

    pub fn gamma_elems(&self) -> Vec<Elem> {
        self.gammas.iter().map(|&e| self.field.alpha_pow(e as i64)).collect()
    }

    pub fn generator_poly(&self) -> Poly {
        let roots: Vec<Elem> = self.roots.iter().map(|&e| self.field.alpha_pow(e as i64)).collect();
        Poly::from_roots(&self.field, &roots)
    }

    pub fn spec(&self, q: u64) -> CodeSpec {
        CodeSpec {
            p: self.field.characteristic(),
            n: self.field.degree(),
            q,
            roots: self.roots.clone(),
        }
    }

    /// R × N matrix with rows [1, α_j, α_j^2, ..].
    pub fn parity_check_matrix(&self) -> SymbolMatrix {
        let n = self.length() as i64;
        let rows = self
            .roots
            .iter()
            .map(|&e| (0..n).map(|t| self.field.alpha_pow(e as i64 * t)).collect())
            .collect();
        SymbolMatrix {
            role: MatrixRole::Parity,
            matrix: Matrix::from_rows_with_cols(rows, n as usize).expect("rows share length N"),
        }
    }

    /// K × N matrix with rows g(γ_i).
    pub fn generator_matrix(&self) -> SymbolMatrix {
        let rows = self
            .gamma_elems()
            .into_iter()
            .map(|g| g_vector(&self.field, g).expect("gammas are nonzero"))
            .collect();
        SymbolMatrix {
            role: MatrixRole::Generator,
            matrix: Matrix::from_rows(rows).expect("rows share length N"),
        }
    }

    /// message · G.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.dimension() {
            return Err(Error::LengthMismatch { expected: self.dimension(), got: message.len() });
        }
        let f = &*self.field;
        let mut word = vec![Elem::ZERO; self.length()];
        for (&m, &e) in message.iter().zip(&self.gammas) {
            if m.is_zero() {
                continue;
            }
            let start = f.log(m).unwrap() as i64;
            for (t, w) in word.iter_mut().enumerate() {
                *w = f.add(*w, f.alpha_pow(start + e as i64 * t as i64));
            }
        }
        Ok(word)
    }

    /// H · c^T.
    pub fn syndrome(&self, word: &[Elem]) -> Vec<Elem> {
        let f = &*self.field;
        self.roots
            .iter()
            .map(|&e| {
                word.iter().enumerate().fold(Elem::ZERO, |acc, (t, &c)| {
                    f.add(acc, f.mul(c, f.alpha_pow(e as i64 * t as i64)))
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(n: u32) -> Arc<Field> {
        Arc::new(Field::binary(n).unwrap())
    }

    #[test]
    fn from_roots_examples() {
        let f = gf(4);
        let roots: Vec<u32> = (0..15).filter(|e| ![5, 10].contains(e)).collect();
        let c = CyclicCode::from_roots(f.clone(), &roots).unwrap();
        assert_eq!(c.dimension(), 2);
        assert_eq!(c.gammas(), &[5, 10]);

        let full = CyclicCode::from_roots(f.clone(), &[]).unwrap();
        assert_eq!(full.dimension(), 15);

        let class: Vec<u32> = vec![14, 13, 11, 7];
        let keep: Vec<u32> = class.iter().map(|e| (15 - e) % 15).collect();
        let roots: Vec<u32> = (0..15).filter(|e| !keep.contains(e)).collect();
        assert_eq!(CyclicCode::from_roots(f.clone(), &roots).unwrap().dimension(), 4);

        assert_eq!(CyclicCode::from_roots(f.clone(), &[1, 1]).unwrap_err(), Error::DuplicateRoot(1));
        assert_eq!(
            CyclicCode::from_roots(f.clone(), &(0..15).collect::<Vec<_>>()).unwrap_err(),
            Error::ZeroDimension
        );
    }

    #[test]
    fn from_generator_poly_examples() {
        let f = gf(4);
        let c = CyclicCode::from_generator_poly(f.clone(), &Poly::linear(&f, Elem::ONE)).unwrap();
        assert_eq!(c.roots(), &[0]);

        let xn1 = Poly::x_pow_minus_one(&f, 15);
        let p = f.minimal_polynomial(f.alpha_pow(14), f.prime_subfield());
        let (g, _) = xn1.div_rem(&p, &f).unwrap();
        let c = CyclicCode::from_generator_poly(f.clone(), &g).unwrap();
        let expect: Vec<u32> = (0..15).filter(|e| ![14, 13, 11, 7].contains(e)).collect();
        assert_eq!(c.roots(), expect.as_slice());
        assert_eq!(c.generator_poly(), g);

        assert_eq!(CyclicCode::from_generator_poly(f.clone(), &xn1).unwrap_err(), Error::ZeroDimension);
        let bad = Poly::new(vec![f.alpha(), Elem::ZERO, Elem::ONE]);
        assert_eq!(CyclicCode::from_generator_poly(f.clone(), &bad).unwrap_err(), Error::NotDivisor);
    }

    #[test]
    fn rs_generator_rows_follow_gamma_rule() {
        let f = gf(4);
        let c = CyclicCode::from_roots(f.clone(), &[1, 2, 3, 4]).unwrap();
        assert_eq!(c.dimension(), 11);
        // rows g(α^{-δ+1}), .., g(α^{-δ+K}) with δ = 1
        let expect: Vec<u32> = (0..11).collect();
        assert_eq!(c.gammas(), expect.as_slice());
    }

    #[test]
    fn matrices_are_orthogonal() {
        let f = gf(4);
        for roots in [vec![0], vec![1, 2, 3], vec![1, 2, 3, 4], vec![0, 5, 10, 3, 6, 9, 12]] {
            let c = CyclicCode::from_roots(f.clone(), &roots).unwrap();
            let g = c.generator_matrix().matrix;
            let h = c.parity_check_matrix().matrix;
            assert_eq!((g.rows(), g.cols()), (c.dimension(), 15));
            assert_eq!(h.rows(), c.redundancy());
            assert_eq!(g.rank(&f), c.dimension());
            assert!(g.mul(&h.transpose(), &f).unwrap().is_zero());
            // row space of G is the null space of H
            assert_eq!(h.nullspace(&f).len(), c.dimension());
        }
        let c = CyclicCode::from_roots(f.clone(), &[0]).unwrap();
        assert!(c.parity_check_matrix().matrix.row(0).iter().all(|&e| e == Elem::ONE));
    }

    #[test]
    fn g_vector_examples() {
        let f = gf(4);
        assert!(g_vector(&f, Elem::ONE).unwrap().iter().all(|&e| e == Elem::ONE));
        let g5 = g_vector(&f, f.alpha_pow(5)).unwrap();
        for (t, &e) in g5.iter().enumerate() {
            assert_eq!(e, [Elem::ONE, f.alpha_pow(5), f.alpha_pow(10)][t % 3]);
        }
        let gp = g_poly(&f, f.alpha_pow(3)).unwrap();
        for j in 0..15 {
            let v = gp.eval(f.alpha_pow(j), &f);
            assert_eq!(v.is_zero(), j != 12);
        }
        assert_eq!(g_vector(&f, Elem::ZERO).unwrap_err(), Error::ZeroElement);
    }

    #[test]
    fn g_poly_satisfies_geometric_identity() {
        for n in [3, 4, 5] {
            let f = gf(n);
            let big_n = f.group_order() as usize;
            for gamma in f.elements().skip(1) {
                let lhs = Poly::new(vec![f.neg(Elem::ONE), gamma]).mul(&g_poly(&f, gamma).unwrap(), &f);
                let rhs = Poly::monomial(f.pow(gamma, big_n as u64), big_n)
                    .sub(&Poly::one(), &f);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn encode_examples() {
        let f = gf(4);
        let roots: Vec<u32> = (0..15).filter(|e| ![5, 10].contains(e)).collect();
        let c = CyclicCode::from_roots(f.clone(), &roots).unwrap();
        assert!(c.encode(&[Elem::ZERO; 2]).unwrap().iter().all(|e| e.is_zero()));
        assert_eq!(c.encode(&[Elem::ONE, Elem::ZERO]).unwrap(), g_vector(&f, f.alpha_pow(5)).unwrap());
        let w = c.encode(&[Elem::ONE, Elem::ONE]).unwrap();
        assert_eq!(symbol_weight(&w), 10);
        assert!(c.syndrome(&w).iter().all(|e| e.is_zero()));
        assert!(c.encode(&[Elem::ONE]).is_err());
    }

    #[test]
    fn cyclic_shift_closure() {
        let f = gf(4);
        let c = CyclicCode::from_roots(f.clone(), &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]).unwrap();
        assert_eq!(c.dimension(), 4);
        for seed in 0..200u32 {
            let msg: Vec<Elem> = (0..4).map(|i| Elem((seed * 7 + i * 3) % 16)).collect();
            let mut w = c.encode(&msg).unwrap();
            w.rotate_right(1);
            assert!(c.syndrome(&w).iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn weight_profile_counts() {
        let f = gf(4);
        let zero = WeightProfile::of(&[Elem::ZERO; 15]);
        assert_eq!(zero.weight, 0);
        let w = g_vector(&f, f.alpha_pow(5)).unwrap();
        let prof = WeightProfile::of(&w);
        assert_eq!(prof.weight, 15);
        assert_eq!(prof.count(Elem::ONE), 5);
        assert_eq!(prof.counts.values().sum::<usize>(), 15);
    }
}
