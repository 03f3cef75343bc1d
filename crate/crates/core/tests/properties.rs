mod common;

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xcyclic::basis::{independent, Basis, IndexSet};
use xcyclic::bounds::{exact_dmin_expanded, gcc_dmin_bound, GccOptions};
use xcyclic::cyclic::g_vector;
use xcyclic::enumerate::{Span, DEFAULT_CAP};
use xcyclic::galois::{Elem, Field, Poly, Subfield};
use xcyclic::subspace::{
    dim_bruteforce, dim_via_gamma, dim_via_theta, group_by_class, subcode_basis, theta_cofactor, ConjugacySelection,
    ORACLE_MAX_DIM,
};

/// (field, base order) pairs used by the random sweeps.
fn setups() -> &'static Vec<(Arc<Field>, Subfield)> {
    static S: OnceLock<Vec<(Arc<Field>, Subfield)>> = OnceLock::new();
    S.get_or_init(|| {
        let mut out = Vec::new();
        for (p, n, q) in [(2, 4, 2), (2, 4, 4), (2, 5, 2), (2, 6, 2), (2, 6, 4), (2, 6, 8), (3, 2, 3), (2, 8, 2), (2, 8, 16)] {
            let f = Arc::new(Field::new(p, n, None).unwrap());
            let sub = f.subfield(q).unwrap();
            out.push((f, sub));
        }
        out
    })
}

fn random_basis(f: &Arc<Field>, base: Subfield, rng: &mut ChaCha8Rng) -> Basis {
    let m = f.ext_degree(base) as usize;
    loop {
        let elems: Vec<Elem> = (0..m).map(|_| Elem(rng.gen_range(1..f.order() as u32))).collect();
        if independent(f, &elems, base) {
            return Basis::new(f.clone(), elems, base).unwrap();
        }
    }
}

/// Up to three distinct nonzero elements with m·k within the oracle cap.
fn random_selection(f: &Field, m: usize, rng: &mut ChaCha8Rng) -> Vec<Elem> {
    let k_max = (ORACLE_MAX_DIM / m).clamp(1, 3);
    let k = rng.gen_range(1..=k_max);
    let mut out: Vec<Elem> = Vec::new();
    while out.len() < k {
        let e = f.alpha_pow(rng.gen_range(0..f.group_order()) as i64);
        if !out.contains(&e) {
            out.push(e);
        }
    }
    out
}

fn random_subset(m: usize, rng: &mut ChaCha8Rng) -> IndexSet {
    loop {
        let s = IndexSet::from_bits(rng.gen_range(1..(1u64 << m)));
        if !s.is_empty() {
            return s;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dimension_formulas_agree_with_oracle(setup in 0..9usize, seed in any::<u64>()) {
        let (f, base) = &setups()[setup];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_basis(f, *base, &mut rng);
        let m = b.m();
        let sel = random_selection(f, m, &mut rng);
        let s = random_subset(m, &mut rng);
        let oracle = dim_bruteforce(&b, &sel, s).unwrap();
        prop_assert_eq!(dim_via_gamma(&b, &sel, s.complement(m)).unwrap(), oracle);
        prop_assert_eq!(dim_via_theta(&b, &sel, s).unwrap(), oracle);
    }

    #[test]
    fn gamma_dimension_lower_bound(setup in 0..9usize, seed in any::<u64>()) {
        let (f, base) = &setups()[setup];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_basis(f, *base, &mut rng);
        let m = b.m();
        let g = loop {
            let g = f.alpha_pow(rng.gen_range(0..f.group_order()) as i64);
            if f.minimal_dimension(g, *base) as usize == m {
                break g;
            }
        };
        let k = rng.gen_range(1..=m.min(4));
        let offsets: Vec<u32> = (0..k as u32).collect();
        let sel = ConjugacySelection::new(f, *base, g, &offsets).unwrap().elements(f, *base);
        let excluded = random_subset(m, &mut rng).complement(m);
        let d = dim_via_gamma(&b, &sel, excluded).unwrap() as i64;
        prop_assert!(d >= m as i64 * (k as i64 - excluded.len() as i64));
        // consecutive offsets leave codewords on any m-k+1 elements
        let t = m - k + 1;
        let sub = IndexSet::from_indices(0..t);
        prop_assert!(dim_via_gamma(&b, &sel, sub.complement(m)).unwrap() > 0);
        if k == m - 1 && m > 1 {
            for i in 0..m {
                prop_assert_eq!(dim_via_theta(&b, &sel, IndexSet::from_indices([i])).unwrap(), 0);
            }
        }
    }

    #[test]
    fn subcode_words_carry_theta_roots(setup in 0..6usize, seed in any::<u64>()) {
        let (f, base) = &setups()[setup];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_basis(f, *base, &mut rng);
        let m = b.m();
        let g = f.alpha_pow(rng.gen_range(0..f.group_order()) as i64);
        let class = f.conjugacy_class(g, *base);
        let mut sel = vec![g];
        sel.extend(class[1..].iter().copied().filter(|_| rng.gen_bool(0.5)));
        let group = &group_by_class(f, *base, &sel).unwrap()[0];
        let s = random_subset(m, &mut rng);
        for w in subcode_basis(&b, &sel, s).unwrap() {
            prop_assert!(b.support_indices(&w).is_subset(s));
            let p = theta_cofactor(f, *base, group, &w).unwrap();
            for z in group.z_set() {
                let root = f.inv(f.frobenius(group.gamma(), *base, z)).unwrap();
                prop_assert!(p.eval(root, f).is_zero());
            }
        }
    }

    #[test]
    fn decompose_is_linear_and_round_trips(setup in 0..9usize, seed in any::<u64>()) {
        let (f, base) = &setups()[setup];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_basis(f, *base, &mut rng);
        let subs = f.subfield_elements(*base);
        let x = Elem(rng.gen_range(0..f.order() as u32));
        let y = Elem(rng.gen_range(0..f.order() as u32));
        let a = subs[rng.gen_range(0..subs.len())];
        let c = subs[rng.gen_range(0..subs.len())];
        let lhs = b.decompose(f.add(f.mul(a, x), f.mul(c, y)));
        let rhs: Vec<Elem> = b.decompose(x).iter().zip(b.decompose(y))
            .map(|(&u, v)| f.add(f.mul(a, u), f.mul(c, v))).collect();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(b.compose(&b.decompose(x)), x);
    }

    #[test]
    fn frobenius_is_additive(setup in 0..9usize, x in any::<u32>(), y in any::<u32>(), s in 0..4u32) {
        let (f, base) = &setups()[setup];
        let x = Elem(x % f.order() as u32);
        let y = Elem(y % f.order() as u32);
        prop_assert_eq!(
            f.frobenius(f.add(x, y), *base, s),
            f.add(f.frobenius(x, *base, s), f.frobenius(y, *base, s))
        );
        prop_assert_eq!(
            f.frobenius(f.mul(x, y), *base, s),
            f.mul(f.frobenius(x, *base, s), f.frobenius(y, *base, s))
        );
    }

    #[test]
    fn polynomial_division_reconstructs(seed in any::<u64>(), da in 0..12usize, db in 0..6usize) {
        let f = Field::binary(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rand_poly = |d: usize| Poly::new((0..=d).map(|_| Elem(rng.gen_range(0..32))).collect());
        let a = rand_poly(da);
        let b = rand_poly(db);
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b, &f).unwrap();
        prop_assert_eq!(q.mul(&b, &f).add(&r, &f), a);
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
    }

    #[test]
    fn span_min_weight_matches_naive(seed in any::<u64>(), k in 1..5usize, len in 1..12usize) {
        let f = Field::new(3, 2, None).unwrap();
        let base = f.prime_subfield();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<Vec<Elem>> = (0..k).map(|_| (0..len).map(|_| Elem(rng.gen_range(0..3))).collect()).collect();
        let span = Span::new(&f, base, &gens, DEFAULT_CAP).unwrap();
        // naive: every coefficient vector in GF(3)^k
        let mut naive: Option<usize> = None;
        for idx in 0..3usize.pow(k as u32) {
            let mut v = idx;
            let mut w = vec![Elem::ZERO; len];
            for g in &gens {
                let c = Elem((v % 3) as u32);
                v /= 3;
                for (x, &y) in w.iter_mut().zip(g) {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
            let wt = w.iter().filter(|e| !e.is_zero()).count();
            if wt > 0 {
                naive = Some(naive.map_or(wt, |b| b.min(wt)));
            }
        }
        prop_assert_eq!(span.min_weight(), naive);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn gcc_bound_is_sound(n in 4..6u32, seed in any::<u64>()) {
        let f = Arc::new(Field::binary(n).unwrap());
        let two = f.prime_subfield();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = if rng.gen_bool(0.5) { Basis::polynomial(f.clone(), two).unwrap() } else { random_basis(&f, two, &mut rng) };
        let k = rng.gen_range(1..=3);
        let mut sel: Vec<Elem> = Vec::new();
        while sel.len() < k {
            let e = f.alpha_pow(rng.gen_range(0..f.group_order()) as i64);
            if !sel.contains(&e) {
                sel.push(e);
            }
        }
        let r = gcc_dmin_bound(&b, &sel, GccOptions::default()).unwrap();
        let exact = exact_dmin_expanded(&b, &sel, DEFAULT_CAP).unwrap();
        prop_assert!(exact >= r.bound, "exact {} < bound {}", exact, r.bound);
    }
}

#[test]
fn non_subfield_words_have_full_support() {
    for (p, n) in [(2, 4), (2, 6), (3, 2)] {
        let f = Arc::new(Field::new(p, n, None).unwrap());
        let base = f.prime_subfield();
        let m = n as usize;
        for b in xcyclic::subspace::candidate_bases(&f, base).unwrap() {
            for g in f.elements().skip(1) {
                if f.minimal_dimension(g, base) as usize != m {
                    continue;
                }
                let gv = g_vector(&f, g).unwrap();
                for theta in f.elements().skip(1) {
                    let w: Vec<Elem> = gv.iter().map(|&x| f.mul(theta, x)).collect();
                    assert_eq!(b.support_indices(&w), IndexSet::full(m));
                }
            }
        }
    }
}

#[test]
fn zero_component_criterion() {
    // μ_j(β_i g(γ)) = 0 iff j ≠ i and β_i·GF(q^{m_γ}) lies in the span of the other elements
    for (n, q) in [(4, 2), (6, 2), (6, 4)] {
        let f = Arc::new(Field::binary(n).unwrap());
        let base = f.subfield(q).unwrap();
        for b in xcyclic::subspace::candidate_bases(&f, base).unwrap() {
            let m = b.m();
            for g in f.elements().skip(1) {
                let sub = f.subfield(base.order().pow(f.minimal_dimension(g, base))).unwrap();
                let gv = g_vector(&f, g).unwrap();
                for i in 0..m {
                    let word: Vec<Elem> = gv.iter().map(|&x| f.mul(x, b.element(i))).collect();
                    for j in 0..m {
                        let zero = b.decompose_vector(&word, j).iter().all(|e| e.is_zero());
                        let criterion = j != i
                            && f.subfield_elements(sub).iter().all(|&s| b.coord(f.mul(b.element(i), s), j).is_zero());
                        assert_eq!(zero, criterion, "GF(2^{n}) q={q} γ={} i={i} j={j}", f.fmt_elem(g));
                    }
                }
            }
        }
    }
}

#[test]
fn row_space_is_the_expanded_code() {
    use std::collections::BTreeSet;
    use xcyclic::cyclic::CyclicCode;
    use xcyclic::expansion::{expand_generator, expand_vector};
    let f = Arc::new(Field::binary(4).unwrap());
    let two = f.prime_subfield();
    let b = Basis::polynomial(f.clone(), two).unwrap();
    let code = CyclicCode::from_gammas(f.clone(), &[0, 3, 7, 12]).unwrap();
    let ge = expand_generator(&code, &b);
    let mut rows = BTreeSet::new();
    Span::new(&f, two, &ge.row_vecs(), DEFAULT_CAP).unwrap().for_each(|w| {
        rows.insert(w.to_vec());
    });
    let mut symbols = BTreeSet::new();
    Span::new(&f, f.whole(), &code.generator_matrix().matrix.row_vecs(), DEFAULT_CAP)
        .unwrap()
        .for_each(|w| {
            symbols.insert(expand_vector(w, &b));
        });
    assert_eq!(rows.len(), 1 << 16);
    assert_eq!(rows, symbols);
}

#[test]
fn random_small_selections_against_exhaustive_sweep() {
    // full sweep of every subbasis for a handful of fixed-seed cases per setup
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (f, base) in setups().iter().take(7) {
        for _ in 0..3 {
            let b = random_basis(f, *base, &mut rng);
            let m = b.m();
            let sel = random_selection(f, m, &mut rng);
            for bits in 1..(1u64 << m) {
                let s = IndexSet::from_bits(bits);
                let o = dim_bruteforce(&b, &sel, s).unwrap();
                assert_eq!(dim_via_gamma(&b, &sel, s.complement(m)).unwrap(), o);
                assert_eq!(dim_via_theta(&b, &sel, s).unwrap(), o);
            }
        }
    }
}
