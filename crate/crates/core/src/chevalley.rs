//! Chevalley formula in equivariant K-theory of `G/B`:
//! `[L_λ] · O_w = Σ_v q^λ_{w,v} O_v`.
//!
//! For a reduced word of `w`, every Bott–Samelson cell `ε` contributes its
//! coefficient `R^{λ,ε}` to the Schubert class indexed by the Demazure
//! product of the letters selected by `ε`. Contributions are summed in exact
//! arithmetic, so cancellations between cells happen before output.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::bott_samelson::{BottSamelson, DEFAULT_MAX_WORD_LEN};
use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElem;
use crate::root_system::{RootSystem, Weight};
use crate::weyl::{WeylElem, Word, DEFAULT_MAX_GROUP_ORDER};

/// Default number of reduced words tried by [`verify_word_independence`].
pub const DEFAULT_MAX_REDUCED_WORDS: usize = 5000;

/// The Schubert class to multiply: an element (its canonical reduced word is
/// used) or an explicit word, which must be reduced unless auto-reduction is
/// requested.
#[derive(Debug, Clone)]
pub enum SchubertInput {
    Element(WeylElem),
    Word(Word),
}

#[derive(Debug, Clone, Copy)]
pub struct ExpandOptions {
    /// Replace a non-reduced explicit word by the canonical word of its product.
    pub auto_reduce: bool,
    pub max_word_len: usize,
}

impl Default for ExpandOptions {
    fn default() -> Self {
        ExpandOptions {
            auto_reduce: false,
            max_word_len: DEFAULT_MAX_WORD_LEN,
        }
    }
}

/// `q^λ_{w,v}` for all `v` with a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChevalleyExpansion {
    pub w: WeylElem,
    pub weight: Weight,
    /// The reduced word actually used.
    pub word: Word,
    /// Set when an explicit non-reduced word was replaced.
    pub auto_reduced: bool,
    /// Keyed by `v` in `(length, canonical word)` order.
    pub terms: BTreeMap<WeylElem, GroupAlgebraElem>,
    /// For each `v` in the support, a reduced word of `v` that is a subword
    /// of `word`; used for display.
    pub labels: BTreeMap<WeylElem, Word>,
}

impl ChevalleyExpansion {
    pub fn coefficient(&self, v: &WeylElem) -> GroupAlgebraElem {
        self.terms
            .get(v)
            .cloned()
            .unwrap_or_else(|| GroupAlgebraElem::zero(self.weight.rank()))
    }

    /// Reduced word of `v` used for display: a subword of the expansion word
    /// when `v` is in the support, the canonical word otherwise.
    pub fn label(&self, v: &WeylElem) -> Word {
        self.labels
            .get(v)
            .cloned()
            .unwrap_or_else(|| v.reduced_word().clone())
    }

    /// Terms from the longest `v` down, the order used for display.
    pub fn terms_descending(&self) -> impl Iterator<Item = (&WeylElem, &GroupAlgebraElem)> {
        self.terms.iter().rev()
    }

    /// Applies `ev` to every coefficient.
    pub fn to_ordinary(&self) -> OrdinaryExpansion {
        let terms = self
            .terms
            .iter()
            .map(|(v, q)| (v.clone(), q.augment_ev()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        OrdinaryExpansion {
            w: self.w.clone(),
            weight: self.weight.clone(),
            word: self.word.clone(),
            auto_reduced: self.auto_reduced,
            labels: self.labels.clone(),
            terms,
        }
    }

    /// Every `v` in the support satisfies `v ≤ w` in the Bruhat order.
    pub fn support_below(&self, rs: &RootSystem) -> bool {
        self.terms.keys().all(|v| rs.bruhat_leq(v, &self.w))
    }

    /// `q^λ_{w,w} = e^{wλ}`.
    pub fn leading_term_ok(&self) -> bool {
        self.coefficient(&self.w) == GroupAlgebraElem::monomial(self.w.apply(&self.weight))
    }

    /// Every coefficient is a nonnegative combination of characters.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(GroupAlgebraElem::is_nonnegative)
    }
}

/// Ordinary K-theory specialization: integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryExpansion {
    pub w: WeylElem,
    pub weight: Weight,
    pub word: Word,
    pub auto_reduced: bool,
    pub terms: BTreeMap<WeylElem, BigInt>,
    pub labels: BTreeMap<WeylElem, Word>,
}

impl OrdinaryExpansion {
    pub fn label(&self, v: &WeylElem) -> Word {
        self.labels
            .get(v)
            .cloned()
            .unwrap_or_else(|| v.reduced_word().clone())
    }

    pub fn terms_descending(&self) -> impl Iterator<Item = (&WeylElem, &BigInt)> {
        self.terms.iter().rev()
    }
}

fn resolve_word(
    rs: &RootSystem,
    input: &SchubertInput,
    opts: &ExpandOptions,
) -> Result<(WeylElem, Word, bool)> {
    match input {
        SchubertInput::Element(w) => Ok((w.clone(), w.reduced_word().clone(), false)),
        SchubertInput::Word(word) => {
            let w = rs.element_from_word(word)?;
            if w.length() == word.len() {
                Ok((w, word.clone(), false))
            } else if opts.auto_reduce {
                let canonical = w.reduced_word().clone();
                Ok((w, canonical, true))
            } else {
                Err(Error::NotReduced {
                    word: word.to_string(),
                })
            }
        }
    }
}

/// `[L_λ] · O_w` expanded in Schubert classes.
pub fn chevalley_expand(
    rs: &RootSystem,
    input: &SchubertInput,
    lambda: &Weight,
    opts: &ExpandOptions,
) -> Result<ChevalleyExpansion> {
    rs.check_weight("chevalley", lambda)?;
    let (w, word, auto_reduced) = resolve_word(rs, input, opts)?;
    let bs = BottSamelson::with_cap(rs, word.clone(), opts.max_word_len)?;
    let cells = bs.line_bundle_expansion(lambda)?;
    let mut terms: BTreeMap<WeylElem, GroupAlgebraElem> = BTreeMap::new();
    let mut labels: BTreeMap<WeylElem, Word> = BTreeMap::new();
    // Largest cells first, so each label comes from the biggest cell reaching v.
    for (cell, coeff) in cells.coefficients.iter().rev() {
        let (v, kept) = rs.demazure_subword(&word, Some(cell))?;
        labels.entry(v.clone()).or_insert(kept);
        *terms
            .entry(v)
            .or_insert_with(|| GroupAlgebraElem::zero(rs.rank())) += coeff;
    }
    terms.retain(|_, q| !q.is_zero());
    labels.retain(|v, _| terms.contains_key(v));
    Ok(ChevalleyExpansion {
        w,
        weight: lambda.clone(),
        word,
        auto_reduced,
        terms,
        labels,
    })
}

/// `[L_λ] · O_w` in ordinary K-theory.
pub fn chevalley_ordinary(
    rs: &RootSystem,
    input: &SchubertInput,
    lambda: &Weight,
    opts: &ExpandOptions,
) -> Result<OrdinaryExpansion> {
    Ok(chevalley_expand(rs, input, lambda, opts)?.to_ordinary())
}

#[derive(Debug, Clone)]
pub struct WordIndependenceReport {
    pub w: WeylElem,
    pub weight: Weight,
    pub words_checked: usize,
    /// More reduced words exist than were checked.
    pub truncated: bool,
    /// Words whose grouped expansion differs from the first one.
    pub mismatches: Vec<Word>,
    pub passed: bool,
}

/// Expands `[L_λ] · O_w` along every reduced word of `w` (the first `limit`
/// in lexicographic order) and compares the grouped results.
pub fn verify_word_independence(
    rs: &RootSystem,
    w: &WeylElem,
    lambda: &Weight,
    limit: usize,
) -> Result<WordIndependenceReport> {
    let (words, truncated) = rs.reduced_words(w, limit);
    let opts = ExpandOptions {
        max_word_len: w.length().max(DEFAULT_MAX_WORD_LEN),
        ..ExpandOptions::default()
    };
    let expansions = words
        .par_iter()
        .map(|word| chevalley_expand(rs, &SchubertInput::Word(word.clone()), lambda, &opts))
        .collect::<Result<Vec<_>>>()?;
    let mismatches = match expansions.split_first() {
        Some((first, rest)) => rest
            .iter()
            .filter(|e| e.terms != first.terms)
            .map(|e| e.word.clone())
            .collect(),
        None => Vec::new(),
    };
    Ok(WordIndependenceReport {
        w: w.clone(),
        weight: lambda.clone(),
        words_checked: words.len(),
        truncated,
        passed: mismatches.is_empty(),
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityEntry {
    pub w: WeylElem,
    pub v: WeylElem,
    pub nonnegative: bool,
}

#[derive(Debug, Clone)]
pub struct PositivityReport {
    pub weight: Weight,
    pub entries: Vec<PositivityEntry>,
    pub passed: bool,
}

impl PositivityReport {
    pub fn failures(&self) -> impl Iterator<Item = &PositivityEntry> {
        self.entries.iter().filter(|e| !e.nonnegative)
    }
}

/// Sweeps every `w ∈ W` and checks each grouped coefficient for a dominant
/// weight has only nonnegative character multiplicities.
pub fn check_positivity(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<PositivityReport> {
    rs.check_weight("chevalley", lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
        });
    }
    let rows = table(rs, lambda, cap)?;
    let entries: Vec<PositivityEntry> = rows
        .iter()
        .flat_map(|row| {
            row.terms.iter().map(|(v, q)| PositivityEntry {
                w: row.w.clone(),
                v: v.clone(),
                nonnegative: q.is_nonnegative(),
            })
        })
        .collect();
    Ok(PositivityReport {
        weight: lambda.clone(),
        passed: entries.iter().all(|e| e.nonnegative),
        entries,
    })
}

/// `[L_λ] · O_w` for every `w ∈ W`, ordered by `(length, canonical word)`.
pub fn table(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<Vec<ChevalleyExpansion>> {
    rs.check_weight("chevalley", lambda)?;
    let elements = rs.all_elements(cap)?;
    let opts = ExpandOptions {
        max_word_len: rs.positive_roots().len().max(DEFAULT_MAX_WORD_LEN),
        ..ExpandOptions::default()
    };
    elements
        .into_par_iter()
        .map(|w| chevalley_expand(rs, &SchubertInput::Element(w), lambda, &opts))
        .collect()
}

/// [`table`] with the default group-order cap.
pub fn full_table(rs: &RootSystem, lambda: &Weight) -> Result<Vec<ChevalleyExpansion>> {
    table(rs, lambda, DEFAULT_MAX_GROUP_ORDER)
}
