mod common;

use std::sync::Arc;

use common::pows;
use xcyclic::basis::Basis;
use xcyclic::bounds::{
    badness_witness, gcc_dmin_bound, plotkin_match_check, GccOptions, LevelMethod, PlotkinVariant,
};
use xcyclic::cyclic::{CyclicCode, WeightProfile};
use xcyclic::enumerate::DEFAULT_CAP;
use xcyclic::expansion::{constant_weight_codebook, expand_parity};
use xcyclic::galois::Field;
use xcyclic::subspace::min_subbasis_codeword_weight;
use xcyclic::Error;

#[test]
fn binary_parity_matrix_of_rs_code_is_half_dense() {
    let f = Arc::new(Field::binary(8).unwrap());
    let code = CyclicCode::from_roots(f.clone(), &(1..=32).collect::<Vec<_>>()).unwrap();
    let b = Basis::polynomial(f.clone(), f.prime_subfield()).unwrap();
    let he = expand_parity(&code, &b);
    let ones = he.entries().iter().filter(|e| !e.is_zero()).count();
    let density = ones as f64 / he.entries().len() as f64;
    assert!((density - 0.5).abs() <= 0.02, "density {density}");
}

#[test]
fn class_codes_have_constant_weight() {
    for (p, n, q) in [(2, 4, 2), (2, 5, 2), (2, 6, 2), (2, 6, 4), (3, 2, 3), (2, 4, 4), (3, 3, 3)] {
        let f = Field::new(p, n, None).unwrap();
        let base = f.subfield(q).unwrap();
        let m = f.ext_degree(base);
        let qm = (q as usize).pow(m);
        for class in f.conjugacy_classes(base).into_iter().skip(1) {
            let g = class[0];
            let mg = f.minimal_dimension(g, base);
            let qg = (q as usize).pow(mg);
            if order(&f, g) != qg - 1 {
                continue;
            }
            let per_symbol = qg / q as usize * (qm - 1) / (qg - 1);
            let weight = per_symbol * (q as usize - 1);
            let cb = constant_weight_codebook(&f, base, g).unwrap();
            assert_eq!(cb.codewords.len(), qg);
            for w in cb.nonzero() {
                let prof = WeightProfile::of(w);
                assert_eq!(prof.weight, weight, "GF({p}^{n}) q={q} γ={}", f.fmt_elem(g));
                for s in f.subfield_elements(base).into_iter().skip(1) {
                    assert_eq!(prof.count(s), per_symbol);
                }
            }
        }
    }
}

fn order(f: &Field, g: xcyclic::Elem) -> usize {
    (1..=f.group_order() as u64).find(|&t| f.pow(g, t) == xcyclic::Elem::ONE).unwrap() as usize
}

#[test]
fn non_primitive_elements_break_constant_weight() {
    // α^3 in GF(16) generates GF(16) but has order 5
    let f = Field::binary(4).unwrap();
    let cb = constant_weight_codebook(&f, f.prime_subfield(), f.alpha_pow(3)).unwrap();
    let weights: std::collections::BTreeSet<usize> = cb.nonzero().map(|w| WeightProfile::of(w).weight).collect();
    assert!(weights.len() > 1, "{weights:?}");
    let r = plotkin_match_check(&f, f.prime_subfield(), f.alpha_pow(3), PlotkinVariant::ClassCode, DEFAULT_CAP).unwrap();
    assert!(!r.matches);
}

#[test]
fn plotkin_matching_on_every_class() {
    for (p, n) in [(2, 4), (2, 5), (3, 2)] {
        let f = Field::new(p, n, None).unwrap();
        let base = f.prime_subfield();
        for class in f.conjugacy_classes(base).into_iter().skip(1) {
            let g = class[0];
            let mg = f.minimal_dimension(g, base);
            if order(&f, g) != (p as usize).pow(mg) - 1 {
                continue;
            }
            let full = mg == n;
            for v in [PlotkinVariant::ClassCode, PlotkinVariant::WithXMinusOne, PlotkinVariant::PuncturedZero] {
                let r = plotkin_match_check(&f, base, g, v, DEFAULT_CAP);
                if v == PlotkinVariant::ClassCode || full {
                    assert!(r.unwrap().matches, "GF({p}^{n}) γ={} {v:?}", f.fmt_elem(g));
                } else {
                    assert!(matches!(r, Err(Error::PreconditionViolated(_))));
                }
            }
        }
    }
}

#[test]
fn witnesses_meet_their_bounds() {
    for m in 4..=8 {
        for rate in [0.25, 0.5, 0.75] {
            for delta in [-5, -1, 0, 1, 2] {
                match badness_witness(m, rate, delta) {
                    Ok(w) => {
                        assert!(w.weight <= w.weight_bound, "m={m} r={rate} δ={delta}");
                        assert_eq!(w.meets_stronger.is_some(), delta < 1);
                    }
                    Err(Error::PreconditionViolated(_)) | Err(Error::NoWitnessFound) => {
                        assert!(delta < 1, "m={m} r={rate} δ={delta}");
                    }
                    Err(e) => panic!("m={m} r={rate} δ={delta}: {e}"),
                }
            }
        }
    }
    assert!(badness_witness(11, 0.5, 1).is_err());
}

#[test]
fn minimal_subbasis_weights_in_gf32() {
    let f = Arc::new(Field::new(2, 5, Some(&[1, 0, 1, 0, 0, 1])).unwrap());
    let b = Basis::polynomial(f.clone(), f.prime_subfield()).unwrap();
    let r = min_subbasis_codeword_weight(&b, &pows(&f, &[21, 22]), 4, DEFAULT_CAP).unwrap();
    assert_eq!(r.observed_weights, vec![r.formula]);
    let r = min_subbasis_codeword_weight(&b, &pows(&f, &[19]), 5, DEFAULT_CAP).unwrap();
    assert_eq!((r.formula, r.observed_weights.clone()), (80, vec![80]));
    assert_eq!(
        min_subbasis_codeword_weight(&b, &pows(&f, &[19]), 4, DEFAULT_CAP).unwrap_err(),
        Error::NoSuchCodeword(4)
    );
}

#[test]
fn bound_report_levels_and_json() {
    let f = Arc::new(Field::new(2, 5, Some(&[1, 0, 1, 0, 0, 1])).unwrap());
    let b = Basis::polynomial(f.clone(), f.prime_subfield()).unwrap();
    let sel = pows(&f, &[18, 19, 20, 21, 22]);
    let r = gcc_dmin_bound(&b, &sel, GccOptions::default()).unwrap();
    let summary: Vec<(usize, usize, usize)> = r.levels.iter().map(|l| (l.i, l.k, l.d)).collect();
    assert_eq!(summary, vec![(4, 10, 10), (5, 15, 8)]);
    assert!(r.levels.iter().all(|l| l.method == LevelMethod::BchCertified));
    let mut l: Vec<(u32, usize)> = r.classes.iter().map(|c| (c.representative, c.min_subbasis)).collect();
    l.sort();
    assert_eq!(l, vec![(5, 4), (7, 5), (11, 4)]);
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["bound"], 40);
    assert_eq!(json["levels"][0]["method"], "bch-certified");

    let strict = GccOptions { cap: 1 << 8, require_exact: true };
    assert_eq!(gcc_dmin_bound(&b, &sel, strict).unwrap_err(), Error::LevelTooLarge { level: 4 });
    let loose = GccOptions { cap: 1 << 8, require_exact: false };
    let r = gcc_dmin_bound(&b, &sel, loose).unwrap();
    assert!(r.levels.iter().all(|l| l.method == LevelMethod::BchLowerBound));
    assert!(r.bound <= 40);
}

#[test]
fn small_levels_are_enumerated() {
    let f = Arc::new(Field::binary(4).unwrap());
    let b = Basis::polynomial(f.clone(), f.prime_subfield()).unwrap();
    let r = gcc_dmin_bound(&b, &[f.alpha()], GccOptions::default()).unwrap();
    assert_eq!(r.levels.len(), 1);
    assert_eq!(r.levels[0].method, LevelMethod::Exact);
    assert_eq!((r.levels[0].i, r.levels[0].d, r.bound), (4, 8, 32));
    assert_eq!(xcyclic::bounds::exact_dmin_expanded(&b, &[f.alpha()], DEFAULT_CAP).unwrap(), 32);
}
