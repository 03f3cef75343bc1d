use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order for which log/antilog tables are built.
pub const MAX_ORDER: u64 = 1 << 20;

/// Element of a [`Field`], stored as its code in the power basis of the
/// defining polynomial: digit `i` (base `p`) is the coefficient of `x^i`.
///
/// Elements carry no reference to their field; every operation goes through
/// the owning [`Field`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A subfield GF(p^d) of the ambient field GF(p^n), d | n.
///
/// Used as the base field GF(q) of every expansion, trace and minimal
/// polynomial computation: the ambient field is fixed, the view changes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subfield {
    degree: u32,
    order: u64,
}

impl Subfield {
    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of elements, q.
    pub fn order(&self) -> u64 {
        self.order
    }
}

/// Arithmetic operations accepted by [`Field::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(i64),
    Inv,
}

/// Serializable description of a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub n: u32,
    pub defining_poly: Vec<u32>,
    pub order: u64,
}

/// The finite field GF(p^n) with log/antilog tables over a primitive
/// defining polynomial. Immutable once built.
#[derive(Clone)]
pub struct Field {
    p: u32,
    n: u32,
    order: u32,
    defining_poly: Vec<u32>,
    // exp has length 2N so that exp[log a + log b] needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("defining_poly", &self.defining_poly)
            .finish()
    }
}

/// Default binary defining polynomials, coefficients low degree first.
fn default_binary_poly(n: u32) -> Option<Vec<u32>> {
    let taps: &[u32] = match n {
        2 => &[0, 1, 2],
        4 => &[0, 1, 4],
        5 => &[0, 2, 5],
        6 => &[0, 1, 6],
        8 => &[0, 2, 3, 4, 8],
        10 => &[0, 3, 10],
        _ => return None,
    };
    let mut coeffs = vec![0; n as usize + 1];
    for &t in taps {
        coeffs[t as usize] = 1;
    }
    Some(coeffs)
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Walks the powers of x modulo `poly` and returns the antilog table if x
/// has multiplicative order exactly p^n - 1.
fn primitive_tables(p: u32, poly: &[u32]) -> Option<Vec<u32>> {
    let n = poly.len() - 1;
    let order = (p as u64).pow(n as u32);
    let period = (order - 1) as usize;
    let mut digits = vec![0u32; n];
    digits[0] = 1;
    let mut table = Vec::with_capacity(period);
    for step in 0..period {
        let code = digits.iter().rev().fold(0u64, |acc, &d| acc * p as u64 + d as u64) as u32;
        if step > 0 && code == 1 {
            return None;
        }
        table.push(code);
        // multiply by x and reduce with x^n = -sum f_i x^i
        let top = digits[n - 1];
        for i in (1..n).rev() {
            digits[i] = digits[i - 1];
        }
        digits[0] = 0;
        if top != 0 {
            for i in 0..n {
                let sub = (top * poly[i]) % p;
                digits[i] = (digits[i] + p - sub) % p;
            }
        }
    }
    let back = digits.iter().rev().fold(0u64, |acc, &d| acc * p as u64 + d as u64);
    (back == 1).then_some(table)
}

fn prime_poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let top = *r.last().unwrap();
        if top != 0 {
            let factor = (top * lead_inv) % p;
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                let sub = (factor * bc) % p;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Trial division by every monic polynomial of degree at most n/2.
fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let n = poly.len() - 1;
    if n <= 1 {
        return true;
    }
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut v = low;
            for _ in 0..d {
                cand.push((v % p as u64) as u32);
                v /= p as u64;
            }
            cand.push(1);
            if prime_poly_rem(poly, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^n). Without a defining polynomial the binary defaults
    /// x^2+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1, x^8+x^4+x^3+x^2+1 and x^10+x^3+1
    /// are used; any other (p, n) takes the smallest primitive polynomial in
    /// the order of its coefficient code.
    pub fn new(p: u32, n: u32, defining_poly: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        match (p as u64).checked_pow(n) {
            Some(order) if order <= MAX_ORDER => {}
            _ => return Err(Error::TooLarge { p, n }),
        }
        let (poly, exp) = match defining_poly {
            Some(given) => {
                let poly: Vec<u32> = given.to_vec();
                if poly.len() != n as usize + 1 || poly[n as usize] != 1 || poly.iter().any(|&c| c >= p) {
                    return Err(Error::BadDefiningPoly { expected: n });
                }
                match primitive_tables(p, &poly) {
                    Some(exp) => (poly, exp),
                    None if is_irreducible(p, &poly) => return Err(Error::NotPrimitive { p }),
                    None => return Err(Error::NotIrreducible { p }),
                }
            }
            None => {
                if p == 2 {
                    if let Some(poly) = default_binary_poly(n) {
                        let exp = primitive_tables(p, &poly).expect("default polynomial is primitive");
                        return Ok(Self::from_tables(p, n, poly, exp));
                    }
                }
                Self::search_primitive(p, n)
            }
        };
        Ok(Self::from_tables(p, n, poly, exp))
    }

    /// GF(2^n) under the default polynomial.
    pub fn binary(n: u32) -> Result<Self> {
        Self::new(2, n, None)
    }

    fn search_primitive(p: u32, n: u32) -> (Vec<u32>, Vec<u32>) {
        let count = (p as u64).pow(n);
        for low in 0..count {
            let mut poly = Vec::with_capacity(n as usize + 1);
            let mut v = low;
            for _ in 0..n {
                poly.push((v % p as u64) as u32);
                v /= p as u64;
            }
            poly.push(1);
            if let Some(exp) = primitive_tables(p, &poly) {
                return (poly, exp);
            }
        }
        unreachable!("every finite field has a primitive polynomial")
    }

    fn from_tables(p: u32, n: u32, defining_poly: Vec<u32>, antilog: Vec<u32>) -> Self {
        let order = p.pow(n);
        let period = antilog.len();
        let mut log = vec![0u32; order as usize];
        for (k, &code) in antilog.iter().enumerate() {
            log[code as usize] = k as u32;
        }
        let mut exp = antilog;
        exp.extend_from_within(0..period);
        Field { p, n, order, defining_poly, exp, log }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.order as u64
    }

    /// Multiplicative group order, N = p^n - 1.
    pub fn group_order(&self) -> u32 {
        self.order - 1
    }

    pub fn defining_poly(&self) -> &[u32] {
        &self.defining_poly
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            n: self.n,
            defining_poly: self.defining_poly.clone(),
            order: self.order as u64,
        }
    }

    /// Iterates every element in code order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.order
    }

    pub fn alpha(&self) -> Elem {
        Elem(self.exp[1 % self.exp.len()])
    }

    /// α^k for any integer k, reduced modulo N.
    pub fn alpha_pow(&self, k: i64) -> Elem {
        let n = self.group_order() as i64;
        Elem(self.exp[k.rem_euclid(n) as usize])
    }

    /// Discrete logarithm to base α; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let p = self.p;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivideByZero);
        }
        let n = self.group_order();
        Ok(Elem(self.exp[((n - self.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^k for k ≥ 0 with 0^0 = 1.
    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let n = self.group_order() as u64;
        let e = (self.log[a.0 as usize] as u64 * (k % n)) % n;
        Elem(self.exp[e as usize])
    }

    /// a^k for any integer k; negative powers of zero fail.
    pub fn pow_signed(&self, a: Elem, k: i64) -> Result<Elem> {
        if k >= 0 {
            return Ok(self.pow(a, k as u64));
        }
        let inv = self.inv(a)?;
        Ok(self.pow(inv, k.unsigned_abs()))
    }

    /// Checked arithmetic: validates that both operands belong to this field.
    pub fn arith(&self, a: Elem, b: Elem, op: ArithOp) -> Result<Elem> {
        for x in [a, b] {
            if !self.contains(x) {
                return Err(Error::FieldMismatch { code: x.0, order: self.order });
            }
        }
        match op {
            ArithOp::Add => Ok(self.add(a, b)),
            ArithOp::Sub => Ok(self.sub(a, b)),
            ArithOp::Mul => Ok(self.mul(a, b)),
            ArithOp::Div => self.div(a, b),
            ArithOp::Pow(k) => self.pow_signed(a, k),
            ArithOp::Inv => self.inv(a),
        }
    }

    /// Looks up the subfield with `order` elements.
    pub fn subfield(&self, order: u64) -> Result<Subfield> {
        let mut d = 0u32;
        let mut acc = 1u64;
        while acc < order {
            acc *= self.p as u64;
            d += 1;
        }
        if acc != order || d == 0 || !self.n.is_multiple_of(d) {
            return Err(Error::NoSuchSubfield { order });
        }
        Ok(Subfield { degree: d, order })
    }

    pub fn prime_subfield(&self) -> Subfield {
        Subfield { degree: 1, order: self.p as u64 }
    }

    /// The field itself viewed as a subfield.
    pub fn whole(&self) -> Subfield {
        Subfield { degree: self.n, order: self.order as u64 }
    }

    /// All subfields, smallest first.
    pub fn subfields(&self) -> Vec<Subfield> {
        (1..=self.n)
            .filter(|d| self.n.is_multiple_of(*d))
            .map(|d| Subfield { degree: d, order: (self.p as u64).pow(d) })
            .collect()
    }

    /// Extension degree of the ambient field over `base`, m = n / d.
    pub fn ext_degree(&self, base: Subfield) -> u32 {
        self.n / base.degree
    }

    /// A primitive element of `sub`: α^{(p^n-1)/(|sub|-1)}.
    pub fn subfield_generator(&self, sub: Subfield) -> Elem {
        let n = self.group_order() as u64;
        self.alpha_pow((n / (sub.order - 1)) as i64)
    }

    /// Index of a subfield element in 0..q: the integer code for the prime
    /// field, otherwise 0 for zero and 1 + k for the k-th power of the
    /// subfield generator. `None` if `a` is outside `sub`.
    pub fn subfield_index(&self, a: Elem, sub: Subfield) -> Option<u32> {
        if !self.is_subfield_element(a, sub) {
            return None;
        }
        if sub.degree == 1 {
            return Some(a.0);
        }
        let step = self.group_order() / (sub.order as u32 - 1);
        Some(self.log(a).map_or(0, |k| 1 + k / step))
    }

    /// Inverse of [`Field::subfield_index`].
    pub fn subfield_element(&self, sub: Subfield, index: u32) -> Elem {
        if sub.degree == 1 {
            return Elem(index);
        }
        if index == 0 {
            return Elem::ZERO;
        }
        let step = self.group_order() / (sub.order as u32 - 1);
        self.alpha_pow(((index - 1) * step) as i64)
    }

    /// Every element of `sub` in index order.
    pub fn subfield_elements(&self, sub: Subfield) -> Vec<Elem> {
        (0..sub.order as u32).map(|i| self.subfield_element(sub, i)).collect()
    }

    /// x ↦ x^{q^s} where q = |base|.
    pub fn frobenius(&self, a: Elem, base: Subfield, s: u32) -> Elem {
        if a.is_zero() {
            return a;
        }
        let n = self.group_order() as u64;
        let mut factor = 1u64;
        for _ in 0..s {
            factor = factor * (base.order % n) % n;
        }
        let e = self.log[a.0 as usize] as u64 * factor % n;
        Elem(self.exp[e as usize])
    }

    /// True iff a^q = a for q = |sub|, i.e. a lies in `sub`.
    pub fn is_subfield_element(&self, a: Elem, sub: Subfield) -> bool {
        self.frobenius(a, sub, 1) == a
    }

    /// Smallest s ≥ 1 with a^{q^s} = a.
    pub fn minimal_dimension(&self, a: Elem, base: Subfield) -> u32 {
        let mut x = self.frobenius(a, base, 1);
        let mut s = 1;
        while x != a {
            x = self.frobenius(x, base, 1);
            s += 1;
        }
        s
    }

    /// The Frobenius orbit {a, a^q, a^{q^2}, ...} in orbit order.
    pub fn conjugacy_class(&self, a: Elem, base: Subfield) -> Vec<Elem> {
        let mut class = vec![a];
        let mut x = self.frobenius(a, base, 1);
        while x != a {
            class.push(x);
            x = self.frobenius(x, base, 1);
        }
        class
    }

    /// Conjugacy classes of the nonzero elements over `base`, each starting
    /// at its smallest exponent, ordered by that exponent.
    pub fn conjugacy_classes(&self, base: Subfield) -> Vec<Vec<Elem>> {
        let n = self.group_order() as usize;
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for e in 0..n {
            if seen[e] {
                continue;
            }
            let class = self.conjugacy_class(self.alpha_pow(e as i64), base);
            for &c in &class {
                seen[self.log(c).unwrap() as usize] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Human-readable element: "0", "1" or "a^k".
    pub fn fmt_elem(&self, a: Elem) -> String {
        match self.log(a) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(k) => format!("a^{k}"),
        }
    }

    /// Parses "0", "1", "a", "a^k" (k may be negative).
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        match s {
            "0" => return Ok(Elem::ZERO),
            "1" => return Ok(Elem::ONE),
            "a" => return Ok(self.alpha()),
            _ => {}
        }
        let exp = s
            .strip_prefix("a^")
            .ok_or_else(|| Error::Parse(format!("bad element '{s}'")))?;
        let exp = exp.trim_start_matches('{').trim_end_matches('}');
        let k: i64 = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in '{s}'")))?;
        Ok(self.alpha_pow(k))
    }
}

/// Parses a polynomial over the prime field such as "x^4+x+1" or
/// "x^2+2x+2" into coefficients, low degree first.
pub fn parse_prime_poly(s: &str, p: u32) -> Result<Vec<u32>> {
    let mut coeffs: Vec<u32> = Vec::new();
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    for term in cleaned.split('+') {
        let (coef, degree) = split_term(term)?;
        let coef: u32 = match coef {
            "" => 1,
            c => c.parse().map_err(|_| Error::Parse(format!("bad coefficient '{c}'")))?,
        };
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] = (coeffs[degree] + coef) % p;
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// Splits a monomial "c*x^d", "cx^d", "x", "c" into (coefficient text, degree).
pub(crate) fn split_term(term: &str) -> Result<(&str, usize)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    match term.rfind('x') {
        None => Ok((term, 0)),
        Some(pos) => {
            let coef = term[..pos].trim_end_matches('*');
            let rest = &term[pos + 1..];
            let degree = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|d| d.trim_start_matches('{').trim_end_matches('}').parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad degree in '{term}'")))?
            };
            Ok((coef, degree))
        }
    }
}
