//! The defining relations of the two bialgebras and the cross relations of
//! their double, with all indices expanded:
//!
//! ```text
//! RTT  Σ R^{ik}_{mp} t^m_j t^p_l - Σ t^k_p t^i_m R^{mp}_{jl}
//! ET   E_i t^k_l - Σ t^k_b E_a R^{ab}_{il}
//! RUU  Σ R^{ik}_{mp} u^m_j u^p_l - Σ u^k_p u^i_m R^{mp}_{jl}
//! FU   F^k u^i_j - Σ R^{ik}_{ab} u^a_j F^b
//! RUT  Σ R^{ik}_{ab} u^a_j t^b_l - Σ t^k_b u^i_a R^{ab}_{jl}
//! TF   t^k_l F^i - Σ R^{ik}_{ab} F^a t^b_l
//! EF   E_j F^i - F^i E_j - t^i_j + u^i_j
//! UE   u^i_j E_l - Σ E_b u^i_a R^{ab}_{jl}
//! ```
//!
//! The last four mix plus and minus letters and are only rendered.

use std::fmt;

use super::{FreePoly, Letter, Monomial};
use crate::field::FractionField;
use crate::rmatrix::RMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Rtt,
    Et,
    Ruu,
    Fu,
    Rut,
    Tf,
    Ef,
    Ue,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Rtt,
        Family::Et,
        Family::Ruu,
        Family::Fu,
        Family::Rut,
        Family::Tf,
        Family::Ef,
        Family::Ue,
    ];

    /// Whether the relators are pure plus or pure minus elements.
    pub fn is_pure(&self) -> bool {
        matches!(self, Family::Rtt | Family::Et | Family::Ruu | Family::Fu)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Family::Rtt => "RTT",
            Family::Et => "ET",
            Family::Ruu => "RUU",
            Family::Fu => "FU",
            Family::Rut => "RUT",
            Family::Tf => "TF",
            Family::Ef => "EF",
            Family::Ue => "UE",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogRelator<S> {
    pub family: Family,
    /// free indices in the order they appear in the family's formula header
    pub indices: Vec<usize>,
    pub poly: FreePoly<S>,
}

fn word(letters: &[Letter]) -> Monomial {
    Monomial::new(letters.to_vec())
}

fn quad<S: FractionField>(
    family: Family,
    n: usize,
    mut build: impl FnMut(usize, usize, usize, usize) -> FreePoly<S>,
) -> Vec<CatalogRelator<S>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    out.push(CatalogRelator {
                        family,
                        indices: vec![i, j, k, l],
                        poly: build(i, j, k, l),
                    });
                }
            }
        }
    }
    out
}

fn triple<S: FractionField>(
    family: Family,
    n: usize,
    mut build: impl FnMut(usize, usize, usize) -> FreePoly<S>,
) -> Vec<CatalogRelator<S>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out.push(CatalogRelator {
                    family,
                    indices: vec![a, b, c],
                    poly: build(a, b, c),
                });
            }
        }
    }
    out
}

/// `Σ R^{ik}_{mp} x^m_j x^p_l - Σ x^k_p x^i_m R^{mp}_{jl}` for `x = t` or `u`.
fn rxx<S: FractionField>(r: &RMatrix<S>, mk: fn(usize, usize) -> Letter, i: usize, j: usize, k: usize, l: usize) -> FreePoly<S> {
    let n = r.dim();
    let mut p = FreePoly::zero();
    for m in 0..n {
        for q in 0..n {
            p.add_term(word(&[mk(m, j), mk(q, l)]), r.entry(i, k, m, q).clone());
            p.add_term(word(&[mk(k, q), mk(i, m)]), -r.entry(m, q, j, l).clone());
        }
    }
    p
}

/// Every relator of every family, in family order then index order.
/// Identically zero relators are kept.
pub fn relator_catalog<S: FractionField>(r: &RMatrix<S>) -> Vec<CatalogRelator<S>> {
    let n = r.dim();
    let mut out = Vec::new();
    for family in Family::ALL {
        let batch = match family {
            Family::Rtt => quad(family, n, |i, j, k, l| rxx(r, Letter::T, i, j, k, l)),
            Family::Ruu => quad(family, n, |i, j, k, l| rxx(r, Letter::U, i, j, k, l)),
            Family::Et => triple(family, n, |i, k, l| {
                let mut p = FreePoly::monomial(word(&[Letter::E(i), Letter::T(k, l)]));
                for a in 0..n {
                    for b in 0..n {
                        p.add_term(word(&[Letter::T(k, b), Letter::E(a)]), -r.entry(a, b, i, l).clone());
                    }
                }
                p
            }),
            Family::Fu => triple(family, n, |k, i, j| {
                let mut p = FreePoly::monomial(word(&[Letter::F(k), Letter::U(i, j)]));
                for a in 0..n {
                    for b in 0..n {
                        p.add_term(word(&[Letter::U(a, j), Letter::F(b)]), -r.entry(i, k, a, b).clone());
                    }
                }
                p
            }),
            Family::Rut => quad(family, n, |i, j, k, l| {
                let mut p = FreePoly::zero();
                for a in 0..n {
                    for b in 0..n {
                        p.add_term(word(&[Letter::U(a, j), Letter::T(b, l)]), r.entry(i, k, a, b).clone());
                        p.add_term(word(&[Letter::T(k, b), Letter::U(i, a)]), -r.entry(a, b, j, l).clone());
                    }
                }
                p
            }),
            Family::Tf => triple(family, n, |k, l, i| {
                let mut p = FreePoly::monomial(word(&[Letter::T(k, l), Letter::F(i)]));
                for a in 0..n {
                    for b in 0..n {
                        p.add_term(word(&[Letter::F(a), Letter::T(b, l)]), -r.entry(i, k, a, b).clone());
                    }
                }
                p
            }),
            Family::Ef => {
                let mut batch = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let mut p = FreePoly::monomial(word(&[Letter::E(j), Letter::F(i)]));
                        p.add_term(word(&[Letter::F(i), Letter::E(j)]), -S::one());
                        p.add_term(word(&[Letter::T(i, j)]), -S::one());
                        p.add_term(word(&[Letter::U(i, j)]), S::one());
                        batch.push(CatalogRelator {
                            family,
                            indices: vec![i, j],
                            poly: p,
                        });
                    }
                }
                batch
            }
            Family::Ue => triple(family, n, |i, j, l| {
                let mut p = FreePoly::monomial(word(&[Letter::U(i, j), Letter::E(l)]));
                for a in 0..n {
                    for b in 0..n {
                        p.add_term(word(&[Letter::E(b), Letter::U(i, a)]), -r.entry(a, b, j, l).clone());
                    }
                }
                p
            }),
        };
        out.extend(batch);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{alphabet, PairingKind, Side, SkewPairing, WordSide};
    use crate::linalg::Matrix;
    use crate::rmatrix::{catalog, CatalogName};
    use crate::scalars::{parse_scalar, Scalar};
    use num::Zero;

    #[test]
    fn one_dimensional_rtt_is_zero() {
        let m = Matrix::from_rows(vec![vec![parse_scalar("q^2 + 1").unwrap()]]).unwrap();
        let r = RMatrix::new(m).unwrap();
        let cat = relator_catalog(&r);
        let rtt: Vec<_> = cat.iter().filter(|c| c.family == Family::Rtt).collect();
        assert_eq!(rtt.len(), 1);
        assert!(rtt[0].poly.is_zero());
    }

    #[test]
    fn family_sizes_and_sides() {
        let r = catalog(&CatalogName::SlnStandard, 2).unwrap();
        let cat = relator_catalog(&r);
        let count = |f: Family| cat.iter().filter(|c| c.family == f).count();
        assert_eq!(count(Family::Rtt), 16);
        assert_eq!(count(Family::Et), 8);
        assert_eq!(count(Family::Ef), 4);
        for c in &cat {
            let side = c.poly.side();
            match c.family {
                Family::Rtt | Family::Et => assert!(matches!(side, WordSide::Pure(Side::Minus) | WordSide::Unit)),
                Family::Ruu | Family::Fu => assert!(matches!(side, WordSide::Pure(Side::Plus) | WordSide::Unit)),
                _ => assert!(c.poly.is_zero() || side == WordSide::Mixed),
            }
        }
    }

    #[test]
    fn minus_relators_are_null_up_to_degree_three() {
        let r = catalog(&CatalogName::SlnStandard, 2).unwrap();
        let pairing = SkewPairing::new(&r);
        assert_eq!(pairing.kind(), PairingKind::Direct);
        let plus = alphabet(Side::Plus, 2);
        let xs: Vec<Monomial> = (0..=3).flat_map(|len| Monomial::all_words(&plus, len)).collect();
        for rel in relator_catalog(&r).iter().filter(|c| matches!(c.family, Family::Rtt | Family::Et)) {
            for x in &xs {
                let v: Scalar = pairing.pair_poly(&FreePoly::monomial(x.clone()), &rel.poly).unwrap();
                assert!(v.is_zero(), "<{x}, {} {:?}> = {v}", rel.family, rel.indices);
            }
        }
    }
}
