//! Cell combinatorics of the Bott–Samelson variety attached to a word of
//! simple roots, the restriction of line bundles and cell classes to torus
//! fixed points, and the coefficient recursion expressing a line bundle in
//! the basis of cell classes.
//!
//! Cells and fixed points are both indexed by bit vectors `ε ∈ {0,1}^N`.
//! For a word `(μ_1, …, μ_N)` and a weight `λ`, the coefficient of the cell
//! class `O_ε` is `T^{ε_1}_{μ_1} ⋯ T^{ε_N}_{μ_N}(e^λ)`. The localization check
//! recomputes the line bundle from these coefficients at every fixed point,
//! which certifies the expansion independently of the recursion.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElem;
use crate::root_system::{RootSystem, Weight};
use crate::weyl::{WeylElem, Word};

/// Default cap on the word length `N` (the expansion holds up to `2^N` cells).
pub const DEFAULT_MAX_WORD_LEN: usize = 20;

/// A bit vector `ε ∈ {0,1}^N`, naming both a cell and a fixed point.
///
/// Ordered by `(l(ε), bits)` where `l(ε)` counts the ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellIndex(Vec<bool>);

impl CellIndex {
    pub fn new(bits: Vec<bool>) -> Self {
        CellIndex(bits)
    }

    pub fn zeros(n: usize) -> Self {
        CellIndex(vec![false; n])
    }

    pub fn ones(n: usize) -> Self {
        CellIndex(vec![true; n])
    }

    /// All ones except a zero at position `i`: the divisor cell `[i]`.
    pub fn divisor(n: usize, i: usize) -> Self {
        let mut bits = vec![true; n];
        bits[i] = false;
        CellIndex(bits)
    }

    /// The cell whose bits are the binary digits of `code`, position 0 being
    /// the most significant.
    pub fn from_code(n: usize, code: u64) -> Self {
        CellIndex((0..n).map(|i| code >> (n - 1 - i) & 1 == 1).collect())
    }

    /// All `2^n` cells in `(l(ε), bits)` order.
    pub fn all(n: usize) -> Vec<CellIndex> {
        let mut cells: Vec<CellIndex> = (0..1u64 << n).map(|c| Self::from_code(n, c)).collect();
        cells.sort();
        cells
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `l(ε)`, the number of ones.
    pub fn dimension(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// `ε ≤ ε′` iff every one of `ε` is a one of `ε′`.
    pub fn leq(&self, other: &CellIndex) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                context: "bott_samelson",
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(self.leq_unchecked(other))
    }

    fn leq_unchecked(&self, other: &CellIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }
}

impl PartialOrd for CellIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CellIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dimension(), &self.0).cmp(&(other.dimension(), &other.0))
    }
}

impl fmt::Display for CellIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, &b) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", u8::from(b))?;
        }
        write!(f, ")")
    }
}

impl FromStr for CellIndex {
    type Err = Error;

    /// Accepts `1,0,1`, `(1,0,1)` or `101`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("bad cell bit `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(CellIndex)
    }
}

/// The coefficients of a line bundle in the basis of cell classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSExpansion {
    pub weight: Weight,
    pub word: Word,
    /// Nonzero coefficients only, in `(l(ε), bits)` order.
    pub coefficients: BTreeMap<CellIndex, GroupAlgebraElem>,
}

impl BSExpansion {
    pub fn coefficient(&self, cell: &CellIndex) -> GroupAlgebraElem {
        self.coefficients
            .get(cell)
            .cloned()
            .unwrap_or_else(|| GroupAlgebraElem::zero(self.weight.rank()))
    }

    pub fn nonzero_cells(&self) -> usize {
        self.coefficients.len()
    }
}

/// Per-fixed-point outcome of a localization check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub cell: CellIndex,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationReport {
    pub word: Word,
    pub weight: Weight,
    pub cells: Vec<CellCheck>,
    pub passed: bool,
}

impl LocalizationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CellIndex> {
        self.cells.iter().filter(|c| !c.passed).map(|c| &c.cell)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellProductReport {
    pub word: Word,
    pub pairs_checked: usize,
    /// `(ε, δ)` pairs where the identity failed.
    pub failures: Vec<(CellIndex, CellIndex)>,
    pub passed: bool,
}

/// A word of simple roots over a root system: the combinatorial data of
/// the Bott–Samelson variety `Γ(μ_1, …, μ_N)`.
#[derive(Debug, Clone)]
pub struct BottSamelson<'a> {
    rs: &'a RootSystem,
    word: Word,
}

impl<'a> BottSamelson<'a> {
    pub fn new(rs: &'a RootSystem, word: Word) -> Result<Self> {
        Self::with_cap(rs, word, DEFAULT_MAX_WORD_LEN)
    }

    pub fn with_cap(rs: &'a RootSystem, word: Word, max_len: usize) -> Result<Self> {
        rs.check_word(&word)?;
        if word.len() > max_len {
            return Err(Error::WordTooLong {
                len: word.len(),
                cap: max_len,
            });
        }
        Ok(BottSamelson { rs, word })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn check_cell(&self, cell: &CellIndex) -> Result<()> {
        if cell.len() == self.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                context: "bott_samelson",
                expected: self.len(),
                got: cell.len(),
            })
        }
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                context: "bott_samelson",
                index: i + 1,
                bound: self.len(),
            })
        }
    }

    /// `v_i(ε)`: ordinary product of `s_{μ_j}` over `j ≤ i` with `ε_j = 1`,
    /// in word order. `i` is a 0-based position.
    pub fn v_prefix(&self, cell: &CellIndex, i: usize) -> Result<WeylElem> {
        self.check_cell(cell)?;
        self.check_position(i)?;
        let letters: Vec<usize> = self.word.letters()[..=i]
            .iter()
            .zip(cell.bits())
            .filter(|(_, &b)| b)
            .map(|(&l, _)| l)
            .collect();
        self.rs.element_from_word(&Word::new(letters))
    }

    /// `v(ε) = v_N(ε)`; the identity for the empty word.
    pub fn v_full(&self, cell: &CellIndex) -> Result<WeylElem> {
        self.check_cell(cell)?;
        self.rs.element_from_word(&self.word.select(cell)?)
    }

    /// `α_i(ε) = v_i(ε) μ_i`.
    pub fn alpha_at(&self, cell: &CellIndex, i: usize) -> Result<Weight> {
        let v = self.v_prefix(cell, i)?;
        Ok(v.apply(self.rs.simple_root(self.word.letters()[i])))
    }

    /// All `α_i(ε)` at once, applying the selected reflections right to left.
    fn alphas(&self, cell: &CellIndex) -> Vec<Weight> {
        let mut selected: Vec<usize> = Vec::with_capacity(self.len());
        let mut out = Vec::with_capacity(self.len());
        for (&mu, &bit) in self.word.letters().iter().zip(cell.bits()) {
            if bit {
                selected.push(mu);
            }
            let mut root = self.rs.simple_root(mu).clone();
            for &j in selected.iter().rev() {
                let m = root.coords()[j];
                root = self.rs.reflect_unchecked(j, &root, m);
            }
            out.push(root);
        }
        out
    }

    /// Restriction of the line bundle `L_λ` to the fixed point `ε`: `e^{v(ε)λ}`.
    pub fn restrict_line_bundle(
        &self,
        lambda: &Weight,
        cell: &CellIndex,
    ) -> Result<GroupAlgebraElem> {
        self.rs.check_weight("bott_samelson", lambda)?;
        let v = self.v_full(cell)?;
        Ok(GroupAlgebraElem::monomial(v.apply(lambda)))
    }

    /// Restriction of the cell class `O_{ε′}` to the fixed point `ε`:
    /// `∏_{ε′_i = 0} (1 - e^{-α_i(ε)})` when `ε ≤ ε′`, zero otherwise.
    pub fn restrict_structure_sheaf(
        &self,
        class: &CellIndex,
        point: &CellIndex,
    ) -> Result<GroupAlgebraElem> {
        self.check_cell(class)?;
        self.check_cell(point)?;
        let factors = self.sheaf_factors(point);
        Ok(self.sheaf_restriction(&factors, class, point))
    }

    /// `1 - e^{-α_i(ε)}` for every position `i`.
    fn sheaf_factors(&self, point: &CellIndex) -> Vec<GroupAlgebraElem> {
        let r = self.rs.rank();
        self.alphas(point)
            .into_iter()
            .map(|a| {
                let mut f = GroupAlgebraElem::one(r);
                f -= &GroupAlgebraElem::monomial(-&a);
                f
            })
            .collect()
    }

    fn sheaf_restriction(
        &self,
        factors: &[GroupAlgebraElem],
        class: &CellIndex,
        point: &CellIndex,
    ) -> GroupAlgebraElem {
        let r = self.rs.rank();
        if !point.leq_unchecked(class) {
            return GroupAlgebraElem::zero(r);
        }
        class
            .bits()
            .iter()
            .zip(factors)
            .filter(|(&b, _)| !b)
            .fold(GroupAlgebraElem::one(r), |acc, (_, f)| &acc * f)
    }

    /// Coefficients `R^{λ,ε} = T^{ε_1}_{μ_1} ⋯ T^{ε_N}_{μ_N}(e^λ)` for every cell.
    ///
    /// Evaluated as a binary tree from the innermost operator outwards: each
    /// polynomial at one level feeds both `T⁰` and `T¹` of the next letter to
    /// the left, so common suffixes are computed once. Zero branches are
    /// pruned since both operators are linear.
    pub fn line_bundle_expansion(&self, lambda: &Weight) -> Result<BSExpansion> {
        self.rs.check_weight("bott_samelson", lambda)?;
        // Bits are accumulated innermost-first and reversed at the end.
        let mut level: Vec<(Vec<bool>, GroupAlgebraElem)> =
            vec![(Vec::new(), GroupAlgebraElem::monomial(lambda.clone()))];
        for &mu in self.word.letters().iter().rev() {
            level = level
                .par_iter()
                .flat_map_iter(|(bits, f)| {
                    [false, true].into_iter().filter_map(move |b| {
                        let g = self.rs.demazure_t(mu, b, f).expect("validated index");
                        (!g.is_zero()).then(|| {
                            let mut nb = bits.clone();
                            nb.push(b);
                            (nb, g)
                        })
                    })
                })
                .collect();
        }
        let coefficients = level
            .into_iter()
            .map(|(mut bits, f)| {
                bits.reverse();
                (CellIndex(bits), f)
            })
            .collect();
        Ok(BSExpansion {
            weight: lambda.clone(),
            word: self.word.clone(),
            coefficients,
        })
    }

    /// Checks `Σ_{ε′} R^{λ,ε′} · O_{ε′}|_ε = e^{v(ε)λ}` at every fixed point `ε`.
    pub fn verify_localization(&self, lambda: &Weight) -> Result<LocalizationReport> {
        let expansion = self.line_bundle_expansion(lambda)?;
        Ok(self.verify_expansion(&expansion))
    }

    /// Localization check of an already computed (or externally supplied)
    /// expansion against this word.
    pub fn verify_expansion(&self, expansion: &BSExpansion) -> LocalizationReport {
        let n = self.len();
        let r = self.rs.rank();
        let cells: Vec<CellCheck> = CellIndex::all(n)
            .into_par_iter()
            .map(|point| {
                let factors = self.sheaf_factors(&point);
                let mut lhs = GroupAlgebraElem::zero(r);
                for (class, coeff) in &expansion.coefficients {
                    if class.len() != n {
                        return CellCheck {
                            cell: point,
                            passed: false,
                        };
                    }
                    if point.leq_unchecked(class) {
                        lhs += &(coeff * &self.sheaf_restriction(&factors, class, &point));
                    }
                }
                let rhs = self
                    .restrict_line_bundle(&expansion.weight, &point)
                    .expect("validated cell");
                CellCheck {
                    passed: lhs == rhs,
                    cell: point,
                }
            })
            .collect();
        let passed = cells.iter().all(|c| c.passed);
        LocalizationReport {
            word: self.word.clone(),
            weight: expansion.weight.clone(),
            cells,
            passed,
        }
    }

    /// Checks at every fixed point `δ` that the class of a cell is the product
    /// of the divisor classes `[i]` over its zero positions.
    pub fn verify_cell_product(&self) -> CellProductReport {
        let n = self.len();
        let cells = CellIndex::all(n);
        let failures: Vec<(CellIndex, CellIndex)> = cells
            .par_iter()
            .flat_map_iter(|point| {
                let factors = self.sheaf_factors(point);
                let divisors: Vec<GroupAlgebraElem> = (0..n)
                    .map(|i| self.sheaf_restriction(&factors, &CellIndex::divisor(n, i), point))
                    .collect();
                let r = self.rs.rank();
                cells
                    .iter()
                    .filter(|class| {
                        let direct = self.sheaf_restriction(&factors, class, point);
                        let product = class
                            .bits()
                            .iter()
                            .zip(&divisors)
                            .filter(|(&b, _)| !b)
                            .fold(GroupAlgebraElem::one(r), |acc, (_, d)| &acc * d);
                        direct != product
                    })
                    .map(|class| (class.clone(), point.clone()))
                    .collect::<Vec<_>>()
            })
            .collect();
        CellProductReport {
            word: self.word.clone(),
            pairs_checked: cells.len() * cells.len(),
            passed: failures.is_empty(),
            failures,
        }
    }
}
