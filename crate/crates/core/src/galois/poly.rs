use crate::error::{Error, Result};
use crate::galois::field::{split_term, Elem, Field, Subfield};

/// Polynomial with coefficients in the ambient field, low degree first and
/// no trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Elem::ONE] }
    }

    pub fn constant(c: Elem) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c·x^k.
    pub fn monomial(c: Elem, k: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// x - r.
    pub fn linear(f: &Field, r: Elem) -> Self {
        Poly::new(vec![f.neg(r), Elem::ONE])
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(f: &Field, n: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[0] = f.neg(Elem::ONE);
        coeffs[n] = Elem::ONE;
        Poly::new(coeffs)
    }

    /// ∏ (x - r) over `roots`.
    pub fn from_roots(f: &Field, roots: &[Elem]) -> Self {
        roots
            .iter()
            .fold(Poly::one(), |acc, &r| acc.mul(&Poly::linear(f, r), f))
    }

    /// Lifts prime-field coefficients (as produced by `parse_prime_poly`).
    pub fn from_prime_coeffs(f: &Field, coeffs: &[u32]) -> Self {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| (0..c).fold(Elem::ZERO, |acc, _| f.add(acc, Elem::ONE)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Elem {
        self.coeffs.get(k).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Elem::ONE
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|k| f.add(self.coeff(k), other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|k| f.sub(self.coeff(k), other.coeff(k))).collect())
    }

    pub fn scale(&self, c: Elem, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder with deg(rem) < deg(divisor).
    pub fn div_rem(&self, divisor: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivideByZero)?;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let factor = f.mul(top, lead_inv);
            quot[k] = factor;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(factor, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Poly, f: &Field) -> Result<bool> {
        Ok(other.div_rem(self, f)?.1.is_zero())
    }

    /// Scales to a monic polynomial; zero stays zero.
    pub fn monic(&self, f: &Field) -> Poly {
        match f.inv(self.leading()) {
            Ok(inv) => self.scale(inv, f),
            Err(_) => Poly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly, f: &Field) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b, f).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other, f);
        let (q, _) = self.mul(other, f).div_rem(&g, f).expect("gcd is nonzero");
        q.monic(f)
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: Elem, f: &Field) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// True iff every coefficient lies in `sub`.
    pub fn is_over(&self, sub: Subfield, f: &Field) -> bool {
        self.coeffs.iter().all(|&c| f.is_subfield_element(c, sub))
    }

    /// Text form such as "x^4+x+1" or "a^3*x^2+a".
    pub fn format(&self, f: &Field) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = f.fmt_elem(c);
            let term = match (k, c == Elem::ONE) {
                (0, _) => coef,
                (1, true) => "x".to_string(),
                (1, false) => format!("{coef}*x"),
                (_, true) => format!("x^{k}"),
                (_, false) => format!("{coef}*x^{k}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }

    /// Parses the format produced by [`Poly::format`].
    pub fn parse(s: &str, f: &Field) -> Result<Poly> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned == "0" {
            return Ok(Poly::zero());
        }
        let mut coeffs: Vec<Elem> = Vec::new();
        for term in cleaned.split('+') {
            let (coef, degree) = split_term(term)?;
            let c = if coef.is_empty() { Elem::ONE } else { f.parse_elem(coef)? };
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, Elem::ZERO);
            }
            coeffs[degree] = f.add(coeffs[degree], c);
        }
        Ok(Poly::new(coeffs))
    }
}
