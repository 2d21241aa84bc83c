//! Shared helpers and brute-force oracles for the integration tests. None of
//! these go through the tree recursion, the descent-based Demazure fold or
//! the lifting-property Bruhat test that the library uses.

#![allow(dead_code)]

use kchevalley::{CellIndex, GroupAlgebraElem, RootSystem, Weight, WeylElem, Word};

pub fn rs(name: &str) -> RootSystem {
    RootSystem::from_name(name).unwrap()
}

pub fn word(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn cell(s: &str) -> CellIndex {
    s.parse().unwrap()
}

/// `(c, [k_1, …])` pairs for [`root_poly`].
pub type RootTerms = Vec<(i64, &'static [i64])>;

/// `Σ c · e^{Σ k_j α_j}` from `(c, [k_1, …])` pairs in simple-root coordinates.
pub fn root_poly(sys: &RootSystem, terms: &[(i64, &[i64])]) -> GroupAlgebraElem {
    GroupAlgebraElem::from_terms(
        sys.rank(),
        terms
            .iter()
            .map(|(c, k)| (sys.root_coords_to_weight(k).unwrap(), *c)),
    )
}

/// `Σ c · e^λ` from `(c, λ)` pairs in fundamental coordinates.
pub fn fund_poly(rank: usize, terms: &[(i64, &[i64])]) -> GroupAlgebraElem {
    GroupAlgebraElem::from_terms(
        rank,
        terms.iter().map(|(c, k)| (Weight::new(k.to_vec()), *c)),
    )
}

/// `T^{ε_1}_{μ_1} ⋯ T^{ε_N}_{μ_N}(e^λ)` applied operator by operator for a
/// single cell, with no sharing between cells.
pub fn direct_coefficient(
    sys: &RootSystem,
    w: &Word,
    lambda: &Weight,
    eps: &CellIndex,
) -> GroupAlgebraElem {
    let mut f = GroupAlgebraElem::monomial(lambda.clone());
    for (&mu, &bit) in w.letters().iter().zip(eps.bits()).rev() {
        f = sys.demazure_t(mu, bit, &f).unwrap();
    }
    f
}

/// 0-Hecke product read left to right: `w ← w·s_i` whenever the inversion
/// count grows.
pub fn brute_demazure(sys: &RootSystem, letters: &[usize]) -> WeylElem {
    let mut w = sys.identity();
    for &i in letters {
        let s = sys.simple_reflection(i).unwrap();
        let ws = sys.compose(&w, &s).unwrap();
        if sys.inversion_count(&ws) > sys.inversion_count(&w) {
            w = ws;
        }
    }
    w
}

/// `v ≤ w` iff `v` is the product of some subword of a reduced word of `w`.
pub fn brute_bruhat(sys: &RootSystem, v: &WeylElem, w: &WeylElem) -> bool {
    let letters = w.reduced_word().letters();
    let n = letters.len();
    (0u64..1 << n).any(|mask| {
        let sub: Vec<usize> = (0..n)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| letters[k])
            .collect();
        sys.element_from_word(&Word::new(sub)).unwrap() == *v
    })
}

/// Classical Demazure operator from its defining quotient,
/// `D_i(e^λ) = (e^λ - e^{s_iλ - α_i}) / (1 - e^{-α_i})`, computed by exact
/// polynomial long division along the `α_i` string.
pub fn demazure_by_division(sys: &RootSystem, i: usize, lambda: &Weight) -> GroupAlgebraElem {
    let m = lambda.coords()[i];
    let alpha = sys.simple_root(i);
    let r = sys.rank();
    // Numerator e^λ - e^{λ-(m+1)α}; dividing by 1 - e^{-α} gives the geometric
    // series Σ_{k=0}^{m} e^{λ-kα} for m ≥ 0, and -Σ_{k=1}^{-m-1} e^{λ+kα} for m < 0.
    let mut out = GroupAlgebraElem::zero(r);
    if m >= 0 {
        let mut mu = lambda.clone();
        for _ in 0..=m {
            out.add_term(mu.clone(), 1.into());
            mu = &mu - alpha;
        }
    } else {
        let mut mu = lambda.clone();
        for _ in 1..(-m) {
            mu = &mu + alpha;
            out.add_term(mu.clone(), (-1).into());
        }
    }
    // Confirm the quotient: out · (1 - e^{-α}) must equal the numerator.
    let denom = &GroupAlgebraElem::one(r) - &GroupAlgebraElem::monomial(-alpha);
    let numer = &GroupAlgebraElem::monomial(lambda.clone())
        - &GroupAlgebraElem::monomial(lambda - &alpha.scaled(m + 1));
    assert_eq!(&out * &denom, numer, "division oracle is inconsistent");
    out
}
