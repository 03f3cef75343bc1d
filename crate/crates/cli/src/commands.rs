use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Result};
use clap::Args;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use xcyclic::basis::IndexSet;
use xcyclic::bounds::{
    badness_witness, exact_dmin_expanded, gcc_dmin_bound, plotkin_match_check, GccOptions, PlotkinVariant,
    SAK_REFERENCE,
};
use xcyclic::cyclic::{CyclicCode, WeightProfile};
use xcyclic::expansion::{constant_weight_codebook, expand_generator, expand_parity, matrix_digit_text};
use xcyclic::linalg::Matrix;
use xcyclic::subspace::{
    best_subbasis_search, candidate_bases, combinations, dim_bruteforce, dim_via_gamma, dim_via_theta, ORACLE_MAX_DIM,
};
use xcyclic::{Elem, Error, Field};

use crate::parse::{exponents, join, selections, Ctx};
use crate::report::Report;
use crate::Global;

#[derive(Args, Debug, Clone, Default)]
pub struct CodeArgs {
    /// Roots of G(x) as α-exponents; alternatively give --gammas.
    #[arg(long, allow_hyphen_values = true)]
    pub roots: Option<String>,
    /// Check G·H^T = 0 (and rank mK for the expansion).
    #[arg(long)]
    pub verify: bool,
    /// Print only one matrix, as bare rows.
    #[arg(long, value_enum)]
    pub only: Option<Which>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    G,
    H,
}

#[derive(Args, Debug, Clone)]
pub struct CwArgs {
    /// The element γ, as "a^k" or an exponent.
    #[arg(long, default_value = "a^-1", allow_hyphen_values = true)]
    pub gamma: String,
    /// Also print every codeword.
    #[arg(long)]
    pub list: bool,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SubdimArgs {
    /// Search every t-element subbasis of the candidate bases.
    #[arg(long, value_name = "T")]
    pub best: Option<usize>,
    /// Compare the three dimensions on N random small cases.
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct DminArgs {
    /// Also compute the exact minimum distance by enumeration.
    #[arg(long)]
    pub exact: bool,
    /// Fail instead of falling back to the BCH bound at large levels.
    #[arg(long)]
    pub require_exact: bool,
    /// Low-weight codeword of a binary expanded RS code: M RATE DELTA.
    #[arg(long, num_args = 3, value_names = ["M", "RATE", "DELTA"], allow_hyphen_values = true)]
    pub witness: Option<Vec<String>>,
}

fn field_json(f: &Field) -> serde_json::Value {
    json!(f.descriptor())
}

fn field_label(f: &Field) -> String {
    format!("GF({}^{})", f.characteristic(), f.degree())
}

fn exps(f: &Field, v: &[Elem]) -> Vec<u32> {
    v.iter().map(|&e| f.log(e).expect("nonzero")).collect()
}

fn element_order(f: &Field, g: Elem) -> u32 {
    let n = f.group_order();
    let e = f.log(g).expect("nonzero");
    n / gcd(n, e)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn matrix_rows(m: &Matrix, f: &Field) -> Vec<String> {
    m.to_text(f).lines().map(str::to_string).collect()
}

pub fn field(g: &Global) -> Result<Report> {
    let ctx = Ctx::from_global(g)?;
    let f = &*ctx.field;
    let mut text = String::new();
    writeln!(text, "{} over GF({}), defining polynomial {}", field_label(f), f.characteristic(), poly_text(f))?;
    let subs: Vec<u64> = f.subfields().iter().map(|s| s.order()).collect();
    writeln!(text, "subfields: {}", join(&subs))?;
    writeln!(text, "conjugacy classes over GF({}) as α-exponents ({} nonzero; 0 is its own class):", ctx.base.order(), f.conjugacy_classes(ctx.base).len())?;
    let mut classes = Vec::new();
    let mut csv = String::from("representative,size,members,minimal_polynomial\n");
    for class in f.conjugacy_classes(ctx.base) {
        let members = exps(f, &class);
        let minpoly = f.minimal_polynomial(class[0], ctx.base).format(f);
        writeln!(text, "  {{{}}}  {}", join(&members), minpoly)?;
        writeln!(csv, "{},{},\"{}\",{}", members[0], members.len(), join(&members), minpoly)?;
        classes.push(json!({ "representative": members[0], "members": members, "minimal_polynomial": minpoly }));
    }
    let json = json!({
        "field": field_json(f),
        "q": ctx.base.order(),
        "subfields": subs,
        "classes": classes,
        "zero_class": "0",
    });
    Ok(Report::new("field", json, text).with_csv(csv))
}

fn poly_text(f: &Field) -> String {
    let terms: Vec<String> = f
        .defining_poly()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| {
            let coef = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            match k {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{k}"),
            }
        })
        .collect();
    terms.join("+")
}

fn build_code(ctx: &Ctx, g: &Global, a: &CodeArgs) -> Result<CyclicCode> {
    Ok(match (&a.roots, &g.gammas) {
        (Some(r), None) => CyclicCode::from_roots(ctx.field.clone(), &exponents(r, ctx.n())?)?,
        (None, Some(s)) => CyclicCode::from_gammas(ctx.field.clone(), &exponents(s, ctx.n())?)?,
        (Some(_), Some(_)) => bail!("give either --roots or --gammas, not both"),
        (None, None) => bail!("one of --roots or --gammas is required"),
    })
}

pub fn code(g: &Global, a: &CodeArgs) -> Result<Report> {
    let ctx = Ctx::from_global(g)?;
    let f = &*ctx.field;
    let code = build_code(&ctx, g, a)?;
    let gm = code.generator_matrix().matrix;
    let hm = code.parity_check_matrix().matrix;
    let (n, k) = (code.length(), code.dimension());
    let orth = gm.mul(&hm.transpose(), f)?.is_zero();
    let mut text = String::new();
    match a.only {
        Some(Which::G) => text = gm.to_text(f),
        Some(Which::H) => text = hm.to_text(f),
        None => {
            writeln!(text, "cyclic code over {}: N = {n}, K = {k}, R = {}", field_label(f), code.redundancy())?;
            writeln!(text, "roots: {}", join(code.roots()))?;
            writeln!(text, "gammas: {}", join(code.gammas()))?;
            writeln!(text, "G(x) = {}", code.generator_poly().format(f))?;
            writeln!(text, "G ({k}x{n}):\n{}", gm.to_text(f))?;
            writeln!(text, "H ({}x{n}):\n{}", hm.rows(), hm.to_text(f))?;
            if a.verify {
                writeln!(text, "{}", if orth { "orthogonality OK" } else { "orthogonality FAILED" })?;
            }
        }
    }
    let json = json!({
        "field": field_json(f),
        "length": n,
        "dimension": k,
        "roots": code.roots(),
        "gammas": code.gammas(),
        "generator_poly": code.generator_poly().format(f),
        "G": matrix_rows(&gm, f),
        "H": matrix_rows(&hm, f),
        "orthogonal": a.verify.then_some(orth),
    });
    let csv = match a.only {
        Some(Which::H) => hm.to_text(f),
        _ => gm.to_text(f),
    };
    Ok(Report::new("code", json, text).with_csv(csv).checked(!a.verify || orth))
}

fn csv_digits(text: &str) -> String {
    text.lines()
        .map(|l| {
            if l.contains(',') {
                l.to_string()
            } else {
                l.chars().map(String::from).collect::<Vec<_>>().join(",")
            }
        })
        .map(|l| l + "\n")
        .collect()
}

pub fn expand(g: &Global, a: &CodeArgs) -> Result<Report> {
    let ctx = Ctx::from_global(g)?;
    let f = &*ctx.field;
    let code = build_code(&ctx, g, a)?;
    let ge = expand_generator(&code, &ctx.basis);
    let he = expand_parity(&code, &ctx.basis);
    let g_text = matrix_digit_text(&ge, f, ctx.base);
    let h_text = matrix_digit_text(&he, f, ctx.base);
    let m = ctx.basis.m();
    let mut checks = None;
    if a.verify {
        let rank = ge.rank(f);
        let orth = ge.mul(&he.transpose(), f)?.is_zero();
        checks = Some((rank, orth));
    }
    let ok = checks.is_none_or(|(rank, orth)| orth && rank == m * code.dimension());
    let mut text = String::new();
    match a.only {
        Some(Which::G) => text = g_text.clone(),
        Some(Which::H) => text = h_text.clone(),
        None => {
            writeln!(
                text,
                "expansion over GF({}) in basis {{{}}}: N = {}, K = {}, m = {m}",
                ctx.base.order(),
                ctx.basis.format(),
                code.length(),
                code.dimension()
            )?;
            writeln!(text, "G_e ({}x{}):\n{g_text}", ge.rows(), ge.cols())?;
            writeln!(text, "H_e ({}x{}):\n{h_text}", he.rows(), he.cols())?;
            if let Some((rank, orth)) = checks {
                writeln!(text, "rank G_e = {rank} (expected {})", m * code.dimension())?;
                writeln!(text, "{}", if orth { "orthogonality OK" } else { "orthogonality FAILED" })?;
            }
        }
    }
    let json = json!({
        "field": field_json(f),
        "q": ctx.base.order(),
        "basis": ctx.basis.format(),
        "length": code.length(),
        "dimension": code.dimension(),
        "gammas": code.gammas(),
        "G_e": g_text.lines().collect::<Vec<_>>(),
        "H_e": h_text.lines().collect::<Vec<_>>(),
        "rank": checks.map(|c| c.0),
        "orthogonal": checks.map(|c| c.1),
    });
    let csv = csv_digits(if a.only == Some(Which::H) { &h_text } else { &g_text });
    Ok(Report::new("expand", json, text).with_csv(csv).checked(ok))
}

pub fn cw(g: &Global, a: &CwArgs) -> Result<Report> {
    let ctx = Ctx::from_global(g)?;
    let f = &*ctx.field;
    let base = ctx.base;
    let gamma = if a.gamma.contains('a') {
        f.parse_elem(&a.gamma)?
    } else {
        f.alpha_pow(a.gamma.trim().parse().map_err(|_| anyhow!("bad --gamma '{}'", a.gamma))?)
    };
    let cb = constant_weight_codebook(f, base, gamma)?;
    let q = base.order() as usize;
    let m = f.ext_degree(base);
    let mg = f.minimal_dimension(gamma, base);
    let qg = q.pow(mg);
    let primitive = element_order(f, gamma) as usize == qg - 1;
    let per_symbol = qg / q * (q.pow(m) - 1) / (qg - 1);
    let formula = per_symbol * (q - 1);

    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    let mut counts: BTreeMap<u32, std::collections::BTreeSet<usize>> = BTreeMap::new();
    let symbols = f.subfield_elements(base);
    for w in cb.nonzero() {
        let prof = WeightProfile::of(w);
        *hist.entry(prof.weight).or_default() += 1;
        for &s in symbols.iter().skip(1) {
            counts.entry(f.subfield_index(s, base).unwrap()).or_default().insert(prof.count(s));
        }
    }
    let constant = hist.len() == 1 && hist.contains_key(&formula) && counts.values().all(|c| c.len() == 1 && c.contains(&per_symbol));

    let mut plotkin = Vec::new();
    let mut ptext = String::new();
    let mut class_match = true;
    for v in [PlotkinVariant::ClassCode, PlotkinVariant::WithXMinusOne, PlotkinVariant::PuncturedZero] {
        let name = serde_json::to_value(v)?.as_str().unwrap().to_string();
        match plotkin_match_check(f, base, gamma, v, ctx.cap) {
            Ok(r) => {
                if v == PlotkinVariant::ClassCode {
                    class_match = r.matches;
                }
                writeln!(
                    ptext,
                    "  {name:<16} N={} A={} d_min={} bound={} {}",
                    r.length,
                    r.size,
                    r.dmin,
                    r.bound.value,
                    if r.matches { "MATCH" } else { "no match" }
                )?;
                plotkin.push(json!({
                    "variant": name, "length": r.length, "size": r.size.to_string(),
                    "dmin": r.dmin, "bound": r.bound.value.to_string(), "bound_floor": r.bound.floor.to_string(),
                    "matches": r.matches,
                }));
            }
            Err(Error::PreconditionViolated(why)) => {
                writeln!(ptext, "  {name:<16} n/a ({why})")?;
                plotkin.push(json!({ "variant": name, "skipped": why }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let ok = !primitive || (constant && class_match);

    let mut text = String::new();
    writeln!(
        text,
        "C(N, m_γ) over GF({q}) for γ = {} in {}: N = {}, m_γ = {mg}, {} codewords",
        f.fmt_elem(gamma),
        field_label(f),
        f.group_order(),
        cb.codewords.len()
    )?;
    writeln!(text, "generator (x^N-1)/p_γ(x) = {}", cb.generator.format(f))?;
    let hist_text: Vec<String> = hist.iter().map(|(w, c)| format!("{w}:{c}")).collect();
    writeln!(text, "weight histogram (nonzero words): {}", hist_text.join(" "))?;
    for (s, c) in &counts {
        let c: Vec<usize> = c.iter().copied().collect();
        writeln!(text, "  symbol {s}: per-word count {}", join(&c))?;
    }
    if primitive {
        writeln!(text, "formula: weight {formula}, each nonzero symbol {per_symbol} times: {}", if constant { "OK" } else { "MISMATCH" })?;
    } else {
        writeln!(text, "γ has order {} < q^m_γ - 1 = {}; constant weight is not expected", element_order(f, gamma), qg - 1)?;
    }
    writeln!(text, "Plotkin:\n{ptext}")?;
    if a.list {
        writeln!(text, "codewords:\n{}", cb.to_digit_text(f))?;
    }
    let json = json!({
        "field": field_json(f),
        "q": q,
        "gamma": f.fmt_elem(gamma),
        "m_gamma": mg,
        "primitive_order": primitive,
        "generator_poly": cb.generator.format(f),
        "weight_histogram": hist.iter().map(|(w, c)| json!({ "weight": w, "count": c })).collect::<Vec<_>>(),
        "formula_weight": formula,
        "formula_symbol_count": per_symbol,
        "constant_weight": constant,
        "plotkin": plotkin,
        "codebook": a.list.then(|| cb.entries(f)),
    });
    let mut csv = String::from("message,symbol_codeword,weight\n");
    for e in cb.entries(f) {
        writeln!(csv, "{},{},{}", digits(&e.message, q), digits(&e.symbol_codeword, q), e.weight)?;
    }
    Ok(Report::new("cw", json, text).with_csv(csv).checked(ok))
}

fn digits(v: &[u32], q: usize) -> String {
    if q <= 10 {
        v.iter().map(u32::to_string).collect()
    } else {
        v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
    }
}

struct Triple {
    gamma: usize,
    theta: usize,
    oracle: Option<usize>,
}

impl Triple {
    fn agree(&self) -> bool {
        self.gamma == self.theta && self.oracle.is_none_or(|o| o == self.gamma)
    }

    fn oracle_text(&self) -> String {
        self.oracle.map_or("skipped".into(), |o| o.to_string())
    }
}

fn triple(basis: &xcyclic::basis::Basis, gs: &[Elem], sub: IndexSet) -> Result<Triple> {
    let m = basis.m();
    let gamma = dim_via_gamma(basis, gs, sub.complement(m))?;
    let theta = dim_via_theta(basis, gs, sub)?;
    let oracle = if m * gs.len() <= ORACLE_MAX_DIM { Some(dim_bruteforce(basis, gs, sub)?) } else { None };
    Ok(Triple { gamma, theta, oracle })
}

pub fn subdim(g: &Global, a: &SubdimArgs) -> Result<Report> {
    let ctx = Ctx::from_global(g)?;
    let f = &*ctx.field;
    let mut text = String::new();
    let mut json = json!({ "field": field_json(f), "q": ctx.base.order() });
    let mut csv = String::new();
    let mut ok = true;

    if let Some(count) = a.random {
        let (agree, lines) = random_trials(&ctx, g.seed, count)?;
        ok &= agree == count;
        writeln!(text, "random trials (seed {}): {agree}/{count} agree", g.seed)?;
        text.push_str(&lines.join(""));
        json["random"] = json!({ "seed": g.seed, "trials": count, "agree": agree });
        if g.gammas.is_none() {
            return Ok(Report::new("subdim", json, text).checked(ok));
        }
    }

    let sel = ctx.gammas(g)?;
    let gs = ctx.elems(&sel);
    json["gammas"] = json!(sel);
    if let Some(t) = a.best {
        let cands = candidate_bases(&ctx.field, ctx.base)?;
        let best = best_subbasis_search(&gs, &cands, t)?;
        let b = &cands[best.basis_index];
        writeln!(
            text,
            "best {t}-element subbasis over {} candidate bases: basis {{{}}}, subbasis {}, dimension {}",
            cands.len(),
            b.format(),
            best.subbasis,
            best.dimension
        )?;
        json["best"] = json!({
            "t": t, "candidates": cands.len(), "basis": b.format(),
            "subbasis": best.subbasis.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "dimension": best.dimension,
        });
    }
    if let Some(s) = &g.subbasis {
        let sub = ctx.subbasis(s)?;
        let t = triple(&ctx.basis, &gs, sub)?;
        ok &= t.agree();
        writeln!(
            text,
            "selection {{{}}}, basis {{{}}}, subbasis {sub}: dim_gamma = {}, dim_theta = {}, dim_oracle = {}{}",
            join(&sel),
            ctx.basis.format(),
            t.gamma,
            t.theta,
            t.oracle_text(),
            if t.agree() { "" } else { "  DISAGREE" }
        )?;
        json["basis"] = json!(ctx.basis.format());
        json["subbasis"] = json!(sub.iter().map(|i| i + 1).collect::<Vec<_>>());
        json["dim_gamma"] = json!(t.gamma);
        json["dim_theta"] = json!(t.theta);
        json["dim_oracle"] = json!(t.oracle);
        json["agree"] = json!(t.agree());
        csv = format!("dim_gamma,dim_theta,dim_oracle\n{},{},{}\n", t.gamma, t.theta, t.oracle_text());
    } else if a.best.is_none() {
        bail!("--subbasis is required (or use --best T)");
    }
    Ok(Report::new("subdim", json, text).with_csv(csv).checked(ok))
}

/// Random selections and subbases over the candidate bases, small enough
/// for the oracle.
fn random_trials(ctx: &Ctx, seed: u64, count: usize) -> Result<(usize, Vec<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cands = candidate_bases(&ctx.field, ctx.base)?;
    let n = ctx.n();
    let m = ctx.basis.m();
    let max_k = (ORACLE_MAX_DIM / m).clamp(1, 3).min(n as usize);
    let mut agree = 0;
    let mut lines = Vec::new();
    for _ in 0..count {
        let b = cands.choose(&mut rng).expect("at least one candidate basis");
        let k = rng.gen_range(1..=max_k);
        let mut all: Vec<u32> = (0..n).collect();
        all.shuffle(&mut rng);
        let sel = &all[..k];
        let t = rng.gen_range(1..=m);
        let subs = combinations(m, t);
        let sub = *subs.choose(&mut rng).unwrap();
        let r = triple(b, &ctx.elems(sel), sub)?;
        if r.agree() {
            agree += 1;
        } else {
            lines.push(format!(
                "  DISAGREE: {{{}}} basis {{{}}} subbasis {sub}: {}/{}/{}\n",
                join(sel),
                b.format(),
                r.gamma,
                r.theta,
                r.oracle_text()
            ));
        }
    }
    Ok((agree, lines))
}

pub fn dmin(g: &Global, a: &DminArgs) -> Result<Report> {
    if let Some(w) = &a.witness {
        return witness(w);
    }
    let ctx = Ctx::from_global(g)?;
    let f = &*ctx.field;
    let s = g.gammas.as_deref().ok_or_else(|| anyhow!("--gammas is required"))?;
    let sels = selections(s, ctx.n())?;
    let opts = GccOptions { cap: ctx.cap, require_exact: a.require_exact };
    let reference_field = f.characteristic() == 2 && f.degree() == 5 && f.defining_poly() == [1, 0, 1, 0, 0, 1];
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut csv = String::from("gammas,bound,reference,exact_dmin\n");
    let mut ok = true;
    writeln!(text, "{} basis {{{}}} over GF({})", field_label(f), ctx.basis.format(), ctx.base.order())?;
    for sel in sels {
        let mut r = gcc_dmin_bound(&ctx.basis, &ctx.elems(&sel), opts)?;
        let mut skipped = None;
        if a.exact {
            match exact_dmin_expanded(&ctx.basis, &ctx.elems(&sel), ctx.cap) {
                Ok(d) => {
                    ok &= d >= r.bound;
                    r.exact_dmin = Some(d);
                }
                Err(e @ Error::CapExceeded { .. }) => skipped = Some(e.to_string()),
                Err(e) => return Err(e.into()),
            }
        }
        let reference = SAK_REFERENCE
            .iter()
            .find(|(s, _)| reference_field && ctx.base.order() == 2 && sorted(s) == sorted(&sel))
            .map(|(_, d)| *d);
        writeln!(text, "\nselection {{{}}}", join(&sel))?;
        let classes: Vec<String> = r.classes.iter().map(|c| format!("{}:l={}", c.representative, c.min_subbasis)).collect();
        writeln!(text, "  classes {}", classes.join(" "))?;
        writeln!(text, "  {:>3} {:>4} {:>5} {:>7}  method", "i", "K_i", "d^(i)", "i*d^(i)")?;
        for l in &r.levels {
            let method = serde_json::to_value(l.method)?;
            writeln!(text, "  {:>3} {:>4} {:>5} {:>7}  {}", l.i, l.k, l.d, l.product, method.as_str().unwrap())?;
        }
        writeln!(text, "  bound {}{}", r.bound, if r.all_exact() { "" } else { " (BCH lower bound at some level)" })?;
        if let Some(d) = reference {
            writeln!(text, "  earlier published bound {d}")?;
        }
        if let Some(d) = r.exact_dmin {
            writeln!(text, "  exact d_min {d}{}", if d >= r.bound { "" } else { "  BELOW BOUND" })?;
        }
        if let Some(why) = &skipped {
            writeln!(text, "  exact d_min skipped: {why}")?;
        }
        let opt = |v: Option<usize>| v.map_or(String::new(), |d| d.to_string());
        writeln!(csv, "\"{}\",{},{},{}", join(&sel), r.bound, opt(reference), opt(r.exact_dmin))?;
        let mut j = serde_json::to_value(&r)?;
        j["reference"] = json!(reference);
        if let Some(why) = skipped {
            j["exact_skipped"] = json!(why);
        }
        reports.push(j);
    }
    let json = json!({ "field": field_json(f), "selections": reports });
    Ok(Report::new("dmin", json, text).with_csv(csv).checked(ok))
}

fn sorted(v: &[u32]) -> Vec<u32> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

fn witness(args: &[String]) -> Result<Report> {
    let m: u32 = args[0].parse().map_err(|_| anyhow!("bad M '{}'", args[0]))?;
    let rate: f64 = args[1].parse().map_err(|_| anyhow!("bad RATE '{}'", args[1]))?;
    let delta: i64 = args[2].parse().map_err(|_| anyhow!("bad DELTA '{}'", args[2]))?;
    let w = badness_witness(m, rate, delta)?;
    let ok = w.weight <= w.weight_bound;
    let mut text = String::new();
    writeln!(text, "binary expanded RS({}, {}) over GF(2^{m}), roots from α^{delta}", w.length, w.dimension)?;
    writeln!(text, "k = {}, selected conjugates α^{{{}}}", w.k, join(&w.selected))?;
    let sub: Vec<usize> = w.subbasis.iter().map(|i| i + 1).collect();
    let sup: Vec<usize> = w.support.iter().map(|i| i + 1).collect();
    writeln!(text, "subbasis {{{}}}, witness support {{{}}}", join(&sub), join(&sup))?;
    writeln!(text, "weight {} <= {}: {}", w.weight, w.weight_bound, if ok { "OK" } else { "VIOLATED" })?;
    if let Some(s) = w.meets_stronger {
        writeln!(text, "meets the stronger bound: {s}")?;
    }
    writeln!(text, "weight / binary length = {:.4}", w.ratio)?;
    let json = json!({ "witness": w });
    let csv = format!("m,length,dimension,delta,k,weight,weight_bound\n{m},{},{},{delta},{},{},{}\n", w.length, w.dimension, w.k, w.weight, w.weight_bound);
    Ok(Report::new("dmin", json, text).with_csv(csv).checked(ok))
}
