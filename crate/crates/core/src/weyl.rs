//! Weyl group elements, reduced words, Bruhat order and the 0-Hecke
//! (Demazure) product.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::bott_samelson::CellIndex;
use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};

/// Default cap on `|W|` for whole-group enumeration.
pub const DEFAULT_MAX_GROUP_ORDER: usize = 1_000_000;

/// A sequence of simple indices (0-based), repetitions allowed.
///
/// Textual forms are 1-based and comma separated: `"2,1,2"`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    /// Builds a word from 1-based letters, as written in the literature.
    pub fn from_one_based(letters: &[usize]) -> Result<Self> {
        letters
            .iter()
            .map(|&l| {
                l.checked_sub(1)
                    .ok_or_else(|| Error::Parse("simple indices are 1-based".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&l| l + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Subword of the letters selected by `mask` (positions with bit 1).
    pub fn select(&self, mask: &CellIndex) -> Result<Word> {
        if mask.len() != self.len() {
            return Err(Error::LengthMismatch {
                context: "weyl",
                expected: self.len(),
                got: mask.len(),
            });
        }
        Ok(Word(
            self.0
                .iter()
                .zip(mask.bits())
                .filter(|(_, &b)| b)
                .map(|(&l, _)| l)
                .collect(),
        ))
    }

    /// `s2s1s2` style name; `e` for the empty word.
    pub fn reflection_name(&self) -> String {
        if self.0.is_empty() {
            return "e".to_string();
        }
        self.0.iter().map(|l| format!("s{}", l + 1)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        let letters = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad word letter `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::from_one_based(&letters)
    }
}

/// A Weyl group element, stored as its integer action on fundamental-weight
/// coordinates together with its inverse and canonical reduced word.
///
/// Equality and hashing use the matrix only. The ordering is by
/// `(length, canonical word)`, which is consistent with equality since the
/// canonical word determines the element.
#[derive(Debug, Clone)]
pub struct WeylElem {
    rank: usize,
    matrix: Vec<i64>,
    inverse: Vec<i64>,
    word: Word,
}

impl WeylElem {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Row-major `r × r` action matrix.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Canonical reduced word (smallest left descent first).
    pub fn reduced_word(&self) -> &Word {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        assert_eq!(lambda.rank(), self.rank, "weight rank mismatch");
        Weight::new(mat_vec(&self.matrix, self.rank, lambda.coords()))
    }

    pub fn apply_inverse(&self, lambda: &Weight) -> Weight {
        assert_eq!(lambda.rank(), self.rank, "weight rank mismatch");
        Weight::new(mat_vec(&self.inverse, self.rank, lambda.coords()))
    }

    pub fn name(&self) -> String {
        self.word.reflection_name()
    }
}

impl PartialEq for WeylElem {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElem {}

impl Hash for WeylElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl PartialOrd for WeylElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElem {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.word.len(), &self.word).cmp(&(other.word.len(), &other.word))
    }
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn mat_vec(m: &[i64], r: usize, v: &[i64]) -> Vec<i64> {
    (0..r)
        .map(|i| (0..r).map(|k| m[i * r + k] * v[k]).sum())
        .collect()
}

fn mat_mul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i * r + k];
            if aik == 0 {
                continue;
            }
            for j in 0..r {
                out[i * r + j] += aik * b[k * r + j];
            }
        }
    }
    out
}

fn identity_matrix(r: usize) -> Vec<i64> {
    let mut m = vec![0; r * r];
    for i in 0..r {
        m[i * r + i] = 1;
    }
    m
}

impl RootSystem {
    /// Matrix of `s_i` on fundamental coordinates: column `k` is `s_i(ρ_k)`.
    fn reflection_matrix(&self, i: usize) -> Vec<i64> {
        let r = self.rank();
        let mut m = identity_matrix(r);
        let alpha = self.simple_root(i).coords();
        for j in 0..r {
            m[j * r + i] -= alpha[j];
        }
        m
    }

    /// True iff `l(s_i w) < l(w)`, i.e. `w⁻¹ α_i` is a negative root.
    fn is_left_descent_raw(&self, inverse: &[i64], i: usize) -> bool {
        let r = self.rank();
        let img = Weight::new(mat_vec(inverse, r, self.simple_root(i).coords()));
        self.is_negative_root(&img)
    }

    /// Canonical word by repeatedly peeling the smallest left descent.
    fn canonical_word(&self, matrix: &[i64], inverse: &[i64]) -> Word {
        let r = self.rank();
        let mut m = matrix.to_vec();
        let mut inv = inverse.to_vec();
        let mut word = Vec::new();
        let id = identity_matrix(r);
        while m != id {
            let i = (0..r)
                .find(|&i| self.is_left_descent_raw(&inv, i))
                .expect("a non-identity element has a left descent");
            word.push(i);
            let s = self.reflection_matrix(i);
            m = mat_mul(&s, &m, r);
            inv = mat_mul(&inv, &s, r);
        }
        Word(word)
    }

    fn elem_from_parts(&self, matrix: Vec<i64>, inverse: Vec<i64>) -> WeylElem {
        let word = self.canonical_word(&matrix, &inverse);
        WeylElem {
            rank: self.rank(),
            matrix,
            inverse,
            word,
        }
    }

    pub fn identity(&self) -> WeylElem {
        let r = self.rank();
        WeylElem {
            rank: r,
            matrix: identity_matrix(r),
            inverse: identity_matrix(r),
            word: Word::default(),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElem> {
        self.check_index("weyl", i)?;
        let s = self.reflection_matrix(i);
        Ok(WeylElem {
            rank: self.rank(),
            matrix: s.clone(),
            inverse: s,
            word: Word(vec![i]),
        })
    }

    fn check_elem(&self, w: &WeylElem) -> Result<()> {
        if w.rank == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                context: "weyl",
                expected: self.rank(),
                got: w.rank,
            })
        }
    }

    pub(crate) fn check_word(&self, word: &Word) -> Result<()> {
        for &l in word.letters() {
            self.check_index("weyl", l)?;
        }
        Ok(())
    }

    /// `w ∘ u`: apply `u` first, then `w`.
    pub fn compose(&self, w: &WeylElem, u: &WeylElem) -> Result<WeylElem> {
        self.check_elem(w)?;
        self.check_elem(u)?;
        let r = self.rank();
        Ok(self.elem_from_parts(
            mat_mul(&w.matrix, &u.matrix, r),
            mat_mul(&u.inverse, &w.inverse, r),
        ))
    }

    pub fn inverse(&self, w: &WeylElem) -> WeylElem {
        self.elem_from_parts(w.inverse.clone(), w.matrix.clone())
    }

    pub fn apply(&self, w: &WeylElem, lambda: &Weight) -> Result<Weight> {
        self.check_elem(w)?;
        self.check_weight("weyl", lambda)?;
        Ok(w.apply(lambda))
    }

    /// Ordinary product `s_{i1} s_{i2} ⋯ s_{ik}` of the letters of `word`.
    pub fn element_from_word(&self, word: &Word) -> Result<WeylElem> {
        self.check_word(word)?;
        let (m, inv) = self.word_matrices(word.letters());
        Ok(self.elem_from_parts(m, inv))
    }

    fn word_matrices(&self, letters: &[usize]) -> (Vec<i64>, Vec<i64>) {
        let r = self.rank();
        let mut m = identity_matrix(r);
        let mut inv = identity_matrix(r);
        for &i in letters {
            let s = self.reflection_matrix(i);
            m = mat_mul(&m, &s, r);
            inv = mat_mul(&s, &inv, r);
        }
        (m, inv)
    }

    pub fn length(&self, w: &WeylElem) -> usize {
        w.length()
    }

    pub fn reduced_word(&self, w: &WeylElem) -> Word {
        w.word.clone()
    }

    /// `#{γ ∈ Δ+ : wγ ∈ Δ−}`, computed directly from the root set.
    pub fn inversion_count(&self, w: &WeylElem) -> usize {
        self.positive_roots()
            .iter()
            .filter(|g| self.is_negative_root(&w.apply(g)))
            .count()
    }

    pub fn is_left_descent(&self, w: &WeylElem, i: usize) -> bool {
        self.is_left_descent_raw(&w.inverse, i)
    }

    /// Left multiplication by a simple reflection.
    pub fn left_multiply(&self, i: usize, w: &WeylElem) -> WeylElem {
        let r = self.rank();
        let s = self.reflection_matrix(i);
        self.elem_from_parts(mat_mul(&s, &w.matrix, r), mat_mul(&w.inverse, &s, r))
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        Ok(self.element_from_word(word)?.length() == word.len())
    }

    /// 0-Hecke product of the letters selected by `mask` (all letters when
    /// `mask` is `None`), read in word order: each letter multiplies in only
    /// when it increases the length.
    pub fn demazure_product(&self, word: &Word, mask: Option<&CellIndex>) -> Result<WeylElem> {
        Ok(self.demazure_subword(word, mask)?.0)
    }

    /// [`demazure_product`](Self::demazure_product) together with the letters
    /// that actually multiplied in. They form a reduced word of the product
    /// and a subword of `word`.
    pub fn demazure_subword(
        &self,
        word: &Word,
        mask: Option<&CellIndex>,
    ) -> Result<(WeylElem, Word)> {
        self.check_word(word)?;
        let selected = match mask {
            Some(m) => word.select(m)?,
            None => word.clone(),
        };
        let r = self.rank();
        let mut m = identity_matrix(r);
        let mut inv = identity_matrix(r);
        let mut kept = Vec::new();
        // Right-to-left fold with w ← s_i·w when length increases.
        for &i in selected.letters().iter().rev() {
            if !self.is_left_descent_raw(&inv, i) {
                let s = self.reflection_matrix(i);
                m = mat_mul(&s, &m, r);
                inv = mat_mul(&inv, &s, r);
                kept.push(i);
            }
        }
        kept.reverse();
        Ok((self.elem_from_parts(m, inv), Word::new(kept)))
    }

    /// Bruhat order by the lifting property along the canonical word of `w`:
    /// for a left descent `s` of `w`, `v ≤ w` iff `min(v, sv) ≤ sw`.
    pub fn bruhat_leq(&self, v: &WeylElem, w: &WeylElem) -> bool {
        if v.rank != w.rank || v.length() > w.length() {
            return false;
        }
        let r = self.rank();
        let mut v_m = v.matrix.clone();
        let mut v_inv = v.inverse.clone();
        let mut v_len = v.length();
        for (k, &s) in w.word.letters().iter().enumerate() {
            let remaining = w.length() - k;
            if v_len > remaining {
                return false;
            }
            if self.is_left_descent_raw(&v_inv, s) {
                let sm = self.reflection_matrix(s);
                v_m = mat_mul(&sm, &v_m, r);
                v_inv = mat_mul(&v_inv, &sm, r);
                v_len -= 1;
            }
        }
        v_len == 0 && v_m == identity_matrix(r)
    }

    pub fn longest_element(&self) -> WeylElem {
        let r = self.rank();
        let mut m = identity_matrix(r);
        let mut inv = identity_matrix(r);
        while let Some(i) = (0..r).find(|&i| !self.is_left_descent_raw(&inv, i)) {
            let s = self.reflection_matrix(i);
            m = mat_mul(&s, &m, r);
            inv = mat_mul(&inv, &s, r);
        }
        self.elem_from_parts(m, inv)
    }

    /// Every element of `W`, ordered by `(length, canonical word)`.
    pub fn all_elements(&self, cap: usize) -> Result<Vec<WeylElem>> {
        let mut seen: HashSet<WeylElem> = HashSet::new();
        let mut layer = vec![self.identity()];
        seen.insert(self.identity());
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                for i in 0..self.rank() {
                    if self.is_left_descent(w, i) {
                        continue;
                    }
                    let u = self.left_multiply(i, w);
                    if !seen.contains(&u) {
                        if seen.len() >= cap {
                            return Err(Error::GroupTooLarge { cap });
                        }
                        seen.insert(u.clone());
                        next.push(u);
                    }
                }
            }
            layer = next;
        }
        let mut all: Vec<WeylElem> = seen.into_iter().collect();
        all.sort();
        Ok(all)
    }

    /// Reduced words of `w` in lexicographic order, at most `limit` of them.
    /// The flag reports whether the enumeration was cut short.
    pub fn reduced_words(&self, w: &WeylElem, limit: usize) -> (Vec<Word>, bool) {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(w.length());
        let truncated = self.reduced_words_rec(w, &mut prefix, &mut out, limit);
        (out, truncated)
    }

    fn reduced_words_rec(
        &self,
        w: &WeylElem,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Word>,
        limit: usize,
    ) -> bool {
        if w.is_identity() {
            if out.len() >= limit {
                return true;
            }
            out.push(Word(prefix.clone()));
            return false;
        }
        for i in 0..self.rank() {
            if self.is_left_descent(w, i) {
                let u = self.left_multiply(i, w);
                prefix.push(i);
                let stop = self.reduced_words_rec(&u, prefix, out, limit);
                prefix.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }
}
