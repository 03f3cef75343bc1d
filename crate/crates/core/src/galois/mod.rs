//! Finite field arithmetic, polynomials and the subfield machinery
//! (Frobenius map, conjugacy classes, minimal polynomials, trace).

mod field;
mod poly;

pub use field::{parse_prime_poly, ArithOp, Elem, Field, FieldDescriptor, Subfield, MAX_ORDER};
pub use poly::Poly;

impl Field {
    /// Minimal polynomial of `a` over `base`: ∏ (x - c) over the conjugacy class.
    pub fn minimal_polynomial(&self, a: Elem, base: Subfield) -> Poly {
        Poly::from_roots(self, &self.conjugacy_class(a, base))
    }

    /// Trace from the ambient field down to `base`: Σ_{s<m} a^{q^s}.
    pub fn trace(&self, a: Elem, base: Subfield) -> Elem {
        let m = self.ext_degree(base);
        let mut acc = Elem::ZERO;
        let mut x = a;
        for _ in 0..m {
            acc = self.add(acc, x);
            x = self.frobenius(x, base, 1);
        }
        acc
    }
}
