//! The group algebra `ℤ[weight lattice]` with exact integer coefficients,
//! together with the Weyl action, the split Demazure operators `T⁰`, `T¹`
//! and the augmentation `ev`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};
use crate::weyl::WeylElem;

/// A finitely supported map `Weight → ℤ`, read as `Σ c_λ e^λ`.
///
/// Zero coefficients are never stored, so structural equality is ring
/// equality. Monomials iterate in lexicographic order of their exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElem {
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl GroupAlgebraElem {
    pub fn zero(rank: usize) -> Self {
        GroupAlgebraElem {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank))
    }

    /// The character `e^λ`.
    pub fn monomial(lambda: Weight) -> Self {
        let rank = lambda.rank();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        GroupAlgebraElem { rank, terms }
    }

    /// Builds an element from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, C>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Weight, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(rank);
        for (w, c) in terms {
            assert_eq!(w.rank(), rank, "weight rank mismatch");
            out.add_term(w, c.into());
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Weight) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn add_term(&mut self, lambda: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                context: "group_algebra",
                expected: self.rank,
                got: other.rank,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        Ok(out)
    }

    /// Augmentation `ev`: every character maps to 1.
    pub fn augment_ev(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Applies `f` to every exponent, accumulating collisions.
    pub fn map_exponents(&self, mut f: impl FnMut(&Weight) -> Weight) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }
}

impl AddAssign<&GroupAlgebraElem> for GroupAlgebraElem {
    fn add_assign(&mut self, rhs: &GroupAlgebraElem) {
        assert_eq!(self.rank, rhs.rank, "group algebra rank mismatch");
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&GroupAlgebraElem> for GroupAlgebraElem {
    fn sub_assign(&mut self, rhs: &GroupAlgebraElem) {
        assert_eq!(self.rank, rhs.rank, "group algebra rank mismatch");
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add for &GroupAlgebraElem {
    type Output = GroupAlgebraElem;
    fn add(self, rhs: &GroupAlgebraElem) -> GroupAlgebraElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &GroupAlgebraElem {
    type Output = GroupAlgebraElem;
    fn sub(self, rhs: &GroupAlgebraElem) -> GroupAlgebraElem {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &GroupAlgebraElem {
    type Output = GroupAlgebraElem;
    fn neg(self) -> GroupAlgebraElem {
        GroupAlgebraElem {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &GroupAlgebraElem {
    type Output = GroupAlgebraElem;
    fn mul(self, rhs: &GroupAlgebraElem) -> GroupAlgebraElem {
        self.checked_mul(rhs).expect("group algebra rank mismatch")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exponent: Vec<i64>,
    coeff: serde_json::Number,
}

/// Serialized as a JSON list of `{"exponent": [..], "coeff": n}` sorted by
/// exponent, with coefficients as plain (arbitrary precision) integers.
impl Serialize for GroupAlgebraElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(w, c)| TermRepr {
                exponent: w.coords().to_vec(),
                coeff: c.to_string().parse().expect("integer literal"),
            })
            .collect();
        reprs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroupAlgebraElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(deserializer)?;
        let rank = reprs.first().map_or(0, |t| t.exponent.len());
        let mut out = GroupAlgebraElem::zero(rank);
        for t in reprs {
            if t.exponent.len() != rank {
                return Err(D::Error::custom("exponents of differing rank"));
            }
            let c: BigInt =
                t.coeff.to_string().parse().map_err(|_| {
                    D::Error::custom(format!("non-integer coefficient {}", t.coeff))
                })?;
            out.add_term(Weight::new(t.exponent), c);
        }
        Ok(out)
    }
}

impl RootSystem {
    fn check_elem_rank(&self, f: &GroupAlgebraElem) -> Result<()> {
        if f.rank == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                context: "group_algebra",
                expected: self.rank(),
                got: f.rank,
            })
        }
    }

    /// `e^λ ↦ e^{wλ}`, extended linearly.
    pub fn weyl_act(&self, w: &WeylElem, f: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        self.check_elem_rank(f)?;
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                context: "group_algebra",
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(f.map_exponents(|l| w.apply(l)))
    }

    /// `T¹_{α_i}`: `e^λ ↦ e^{s_i λ}`.
    pub fn demazure_t1(&self, i: usize, f: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        self.check_index("group_algebra", i)?;
        self.check_elem_rank(f)?;
        Ok(f.map_exponents(|l| self.reflect_unchecked(i, l, l.coords()[i])))
    }

    /// `T⁰_{α_i}` with `m = λ(α_i∨)`:
    /// `0` if `m = 0`; `e^λ + e^{λ-α} + ⋯ + e^{λ-(m-1)α}` if `m > 0`;
    /// `-(e^{λ+α} + ⋯ + e^{λ+|m|α})` if `m < 0`.
    pub fn demazure_t0(&self, i: usize, f: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        self.check_index("group_algebra", i)?;
        self.check_elem_rank(f)?;
        let alpha = self.simple_root(i);
        let mut out = GroupAlgebraElem::zero(f.rank);
        for (lambda, c) in &f.terms {
            let m = lambda.coords()[i];
            if m > 0 {
                let mut mu = lambda.clone();
                for _ in 0..m {
                    out.add_term(mu.clone(), c.clone());
                    mu = &mu - alpha;
                }
            } else if m < 0 {
                let mut mu = lambda.clone();
                for _ in 0..-m {
                    mu = &mu + alpha;
                    out.add_term(mu.clone(), -c);
                }
            }
        }
        Ok(out)
    }

    /// `T^bit_{α_i}`: `T⁰` for `false`, `T¹` for `true`.
    pub fn demazure_t(
        &self,
        i: usize,
        bit: bool,
        f: &GroupAlgebraElem,
    ) -> Result<GroupAlgebraElem> {
        if bit {
            self.demazure_t1(i, f)
        } else {
            self.demazure_t0(i, f)
        }
    }

    /// Classical isobaric Demazure operator `D_i = T⁰_{α_i} + T¹_{α_i}`.
    pub fn demazure_classical(&self, i: usize, f: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        let mut out = self.demazure_t0(i, f)?;
        out += &self.demazure_t1(i, f)?;
        Ok(out)
    }
}
