use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use xcyclic::basis::{Basis, IndexSet};
use xcyclic::enumerate::cap_from_env;
use xcyclic::galois::parse_prime_poly;
use xcyclic::{Elem, Field, Subfield};

use crate::Global;

/// Field, base field, basis and cap resolved from the global flags.
pub struct Ctx {
    pub field: Arc<Field>,
    pub base: Subfield,
    pub basis: Basis,
    pub cap: u128,
}

impl Ctx {
    pub fn from_global(g: &Global) -> Result<Self> {
        let poly = match &g.poly {
            Some(s) => Some(parse_prime_poly(s, g.p).with_context(|| format!("--poly '{s}'"))?),
            None => None,
        };
        let field = Arc::new(Field::new(g.p, g.n, poly.as_deref())?);
        let base = field.subfield(g.q.unwrap_or(g.p as u64))?;
        let basis = match g.basis.trim() {
            "poly" | "polynomial" => Basis::polynomial(field.clone(), base)?,
            s => Basis::parse(field.clone(), s, base).with_context(|| format!("--basis '{s}'"))?,
        };
        Ok(Ctx { field, base, basis, cap: g.cap.unwrap_or_else(cap_from_env) })
    }

    pub fn n(&self) -> u32 {
        self.field.group_order()
    }

    pub fn gammas(&self, g: &Global) -> Result<Vec<u32>> {
        let s = g.gammas.as_deref().ok_or_else(|| anyhow!("--gammas is required"))?;
        exponents(s, self.n())
    }

    pub fn elems(&self, exps: &[u32]) -> Vec<Elem> {
        exps.iter().map(|&e| self.field.alpha_pow(e as i64)).collect()
    }

    /// `--subbasis` as 1-based indices ("1,2,4") or basis elements
    /// ("1,a^17,a").
    pub fn subbasis(&self, s: &str) -> Result<IndexSet> {
        let m = self.basis.m();
        if !s.contains('a') {
            return Ok(IndexSet::parse_one_based(s, m)?);
        }
        let mut set = IndexSet::empty();
        for tok in s.split(',').filter(|t| !t.trim().is_empty()) {
            let e = self.field.parse_elem(tok)?;
            let i = self
                .basis
                .elements()
                .iter()
                .position(|&b| b == e)
                .ok_or_else(|| anyhow!("{} is not a basis element", tok.trim()))?;
            set.insert(i);
        }
        Ok(set)
    }
}

/// Comma-separated α-exponents; accepts negatives, "a^k" and ranges "a..b".
/// Values are reduced mod n and must be distinct.
pub fn exponents(s: &str, n: u32) -> Result<Vec<u32>> {
    let reduce = |v: i64| v.rem_euclid(n as i64) as u32;
    let num = |t: &str| -> Result<i64> {
        let t = t.trim();
        let t = t.strip_prefix("a^").unwrap_or(if t == "a" { "1" } else { t });
        t.parse().map_err(|_| anyhow!("bad exponent '{t}'"))
    };
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match tok.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    bail!("empty range '{tok}'");
                }
                out.extend((a..=b).map(reduce));
            }
            None => out.push(reduce(num(tok)?)),
        }
    }
    if out.is_empty() {
        bail!("empty exponent list: the code would have dimension zero");
    }
    let mut seen = std::collections::BTreeSet::new();
    if let Some(d) = out.iter().find(|e| !seen.insert(**e)) {
        bail!("exponent {d} listed twice");
    }
    Ok(out)
}

/// Several selections separated by ';'.
pub fn selections(s: &str, n: u32) -> Result<Vec<Vec<u32>>> {
    s.split(';').filter(|t| !t.trim().is_empty()).map(|t| exponents(t, n)).collect::<Result<Vec<_>>>().and_then(|v| {
        if v.is_empty() {
            bail!("empty exponent list: the code would have dimension zero")
        }
        Ok(v)
    })
}

pub fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
