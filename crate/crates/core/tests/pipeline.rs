use std::collections::BTreeMap;

use num::Zero;

use qserre::freealg::{alphabet, FreePoly, Letter, Monomial, Side, SkewPairing};
use qserre::rmatrix::{catalog, CatalogName, RMatrix};
use qserre::serre::{e_relators, f_relators, new_relators, RelatorSide};
use qserre::Scalar;

fn plus_words_with(n: usize, fs: usize, extra: usize) -> Vec<Monomial> {
    Monomial::all_words(&alphabet(Side::Plus, n), fs + extra)
        .into_iter()
        .filter(|m| m.letters().iter().filter(|l| matches!(l, Letter::F(_))).count() == fs)
        .collect()
}

fn minus_words_with(n: usize, es: usize, extra: usize) -> Vec<Monomial> {
    Monomial::all_words(&alphabet(Side::Minus, n), es + extra)
        .into_iter()
        .filter(|m| m.letters().iter().filter(|l| matches!(l, Letter::E(_))).count() == es)
        .collect()
}

fn assert_e_relators_vanish(r: &RMatrix<Scalar>, degree: usize) {
    let pairing = SkewPairing::new(r);
    for rel in e_relators(r, degree).unwrap() {
        let poly = rel.rendering();
        for x in plus_words_with(r.dim(), degree, 0) {
            let v = pairing.pair_poly(&FreePoly::monomial(x.clone()), &poly).unwrap();
            assert!(v.is_zero(), "<{x}, {poly}> = {v}");
        }
    }
}

fn assert_f_relators_vanish(r: &RMatrix<Scalar>, degree: usize) {
    let pairing = SkewPairing::new(r);
    for rel in f_relators(r, degree).unwrap() {
        let poly = rel.rendering();
        for a in minus_words_with(r.dim(), degree, 0) {
            let v = pairing.pair_poly(&poly, &FreePoly::monomial(a.clone())).unwrap();
            assert!(v.is_zero(), "<{poly}, {a}> = {v}");
        }
    }
}

#[test]
fn kernel_relators_are_sound() {
    for (name, n) in [(CatalogName::SlnQuantumPlane, 2), (CatalogName::SlnQuantumPlane, 3), (CatalogName::Flip, 2)] {
        let r = catalog(&name, n).unwrap();
        for degree in 2..=3 {
            assert_e_relators_vanish(&r, degree);
            assert_f_relators_vanish(&r, degree);
        }
    }
}

#[test]
fn quantum_plane_relators_survive_a_t_factor() {
    let r = catalog(&CatalogName::SlnQuantumPlane, 2).unwrap();
    let pairing = SkewPairing::new(&r);
    let rel = e_relators(&r, 2).unwrap().remove(0).rendering();
    for a in 0..2 {
        for b in 0..2 {
            let left = FreePoly::monomial(Monomial::letter(Letter::T(a, b))).mul(&rel);
            let right = rel.mul(&FreePoly::monomial(Monomial::letter(Letter::T(a, b))));
            for x in plus_words_with(2, 2, 1) {
                let x = FreePoly::monomial(x);
                assert!(pairing.pair_poly(&x, &left).unwrap().is_zero());
                assert!(pairing.pair_poly(&x, &right).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn identity_r_gives_commutators_only_in_degree_two() {
    let r = catalog(&CatalogName::Identity, 3).unwrap();
    let mut lower = BTreeMap::new();
    let mut fresh = Vec::new();
    for degree in 2..=4 {
        fresh.push(new_relators(&r, degree, RelatorSide::E, &lower).unwrap().len());
        lower.insert(degree, e_relators(&r, degree).unwrap().into_iter().map(|k| k.coefficients).collect());
    }
    assert_eq!(fresh, vec![3, 0, 0]);
    let shown: Vec<String> = e_relators(&r, 2).unwrap().iter().map(|k| k.rendering().to_string()).collect();
    assert!(shown.iter().all(|s| s.matches('*').count() == 2 && s.contains(" - ")), "{shown:?}");
}

#[test]
fn flip_r_has_no_relators() {
    let r = catalog(&CatalogName::Flip, 2).unwrap();
    for degree in 2..=4 {
        assert!(e_relators(&r, degree).unwrap().is_empty());
    }
}
