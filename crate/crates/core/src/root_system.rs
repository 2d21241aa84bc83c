//! Finite-type Cartan data, the weight lattice in fundamental-weight
//! coordinates, simple reflections and positive roots.
//!
//! Conventions used throughout the crate:
//!
//! * `cartan[i][j] = α_j(α_i∨)`, so column `j` of the Cartan matrix is the
//!   simple root `α_j` written in fundamental-weight coordinates.
//! * A [`Weight`] stores `λ(α_i∨)` at coordinate `i`; pairing against a simple
//!   coroot is therefore a coordinate read.
//! * Simple indices are 0-based inside the API and 1-based in every textual
//!   form (parsing and rendering).
//! * Named types follow Bourbaki numbering, except that in `G2` the first
//!   simple root is the short one, giving `α2(α1∨) = -3`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integral weight in fundamental-weight coordinates: `coords[i] = λ(α_i∨)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ρ_i` (0-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Weight(coords)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }

    /// All pairings `λ(α_i∨)` are nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

/// Cartan letter of an irreducible finite-type root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanLetter {
    fn as_char(self) -> char {
        match self {
            CartanLetter::A => 'A',
            CartanLetter::B => 'B',
            CartanLetter::C => 'C',
            CartanLetter::D => 'D',
            CartanLetter::E => 'E',
            CartanLetter::F => 'F',
            CartanLetter::G => 'G',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => CartanLetter::A,
            'B' => CartanLetter::B,
            'C' => CartanLetter::C,
            'D' => CartanLetter::D,
            'E' => CartanLetter::E,
            'F' => CartanLetter::F,
            'G' => CartanLetter::G,
            _ => return None,
        })
    }

    fn rank_ok(self, rank: usize) -> bool {
        match self {
            CartanLetter::A => rank >= 1,
            CartanLetter::B | CartanLetter::C => rank >= 2,
            CartanLetter::D => rank >= 3,
            CartanLetter::E => (6..=8).contains(&rank),
            CartanLetter::F => rank == 4,
            CartanLetter::G => rank == 2,
        }
    }
}

/// Input describing a root system: a named type or an explicit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CartanSpec {
    Named { letter: CartanLetter, rank: usize },
    Matrix(Vec<Vec<i64>>),
}

impl CartanSpec {
    pub fn named(letter: CartanLetter, rank: usize) -> Self {
        CartanSpec::Named { letter, rank }
    }

    /// Parses either a type name such as `G2` or a JSON integer matrix.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    pub fn label(&self) -> String {
        match self {
            CartanSpec::Named { letter, rank } => format!("{}{}", letter.as_char(), rank),
            CartanSpec::Matrix(m) => serde_json::to_string(m).unwrap_or_default(),
        }
    }
}

impl FromStr for CartanSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            let m: Vec<Vec<i64>> = serde_json::from_str(s)
                .map_err(|e| Error::Parse(format!("Cartan matrix JSON: {e}")))?;
            return Ok(CartanSpec::Matrix(m));
        }
        let mut chars = s.chars();
        let letter = chars
            .next()
            .and_then(CartanLetter::from_char)
            .ok_or_else(|| Error::Parse(format!("unknown Cartan type `{s}`")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in Cartan type `{s}`")))?;
        Ok(CartanSpec::Named { letter, rank })
    }
}

fn named_cartan(letter: CartanLetter, n: usize) -> Result<Vec<Vec<i64>>> {
    if !letter.rank_ok(n) {
        return Err(Error::UnsupportedRank {
            letter: letter.as_char(),
            rank: n,
        });
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match letter {
        CartanLetter::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        CartanLetter::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -1, -2);
        }
        CartanLetter::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
        }
        CartanLetter::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        CartanLetter::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        CartanLetter::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        CartanLetter::G => {
            link(0, 1, -3, -1);
        }
    }
    Ok(a)
}

/// Checks the Cartan axioms and finite type (positive-definite symmetrization).
fn validate_cartan(a: &[Vec<i64>]) -> Result<()> {
    let r = a.len();
    if r == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != r {
            return Err(Error::InvalidCartan(format!(
                "row {} has length {}, expected {r}",
                i + 1,
                row.len()
            )));
        }
        for (j, &aij) in row.iter().enumerate() {
            if i == j && aij != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry {} is {aij}",
                    i + 1
                )));
            }
            if i != j {
                if aij > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "positive off-diagonal entry at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                if (aij == 0) != (a[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }

    // Symmetrizer d with d_i a_ij = d_j a_ji, fixed to 1 on each component.
    let mut d: Vec<Option<BigRational>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::from_integer(1.into()));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().expect("visited");
            for j in 0..r {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = &di * BigRational::new(a[i][j].into(), a[j][i].into());
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(existing) if *existing != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(|x| x.expect("all visited")).collect();

    // Positive definite iff every pivot of Gaussian elimination (no
    // pivoting) is positive, i.e. every leading principal minor is positive.
    let mut s: Vec<Vec<BigRational>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| &d[i] * BigRational::from_integer(a[i][j].into()))
                .collect()
        })
        .collect();
    for k in 0..r {
        let pivot = s[k][k].clone();
        if !pivot.is_positive() {
            return Err(Error::InvalidCartan(
                "matrix is not of finite type (symmetrization is not positive definite)".into(),
            ));
        }
        for i in k + 1..r {
            let factor = &s[i][k] / &pivot;
            if factor.is_zero() {
                continue;
            }
            for j in k..r {
                let t = &factor * &s[k][j];
                s[i][j] -= t;
            }
        }
    }
    Ok(())
}

/// An immutable finite-type root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: String,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i64>>,
    positive_set: HashSet<Weight>,
}

impl RootSystem {
    /// Builds the root system, enumerating positive roots by reflection closure.
    pub fn new(spec: &CartanSpec) -> Result<Self> {
        let cartan = match spec {
            CartanSpec::Named { letter, rank } => named_cartan(*letter, *rank)?,
            CartanSpec::Matrix(m) => m.clone(),
        };
        validate_cartan(&cartan)?;
        let r = cartan.len();
        let simple_roots: Vec<Weight> = (0..r)
            .map(|j| Weight((0..r).map(|i| cartan[i][j]).collect()))
            .collect();

        // Closure in simple-root coordinates: s_i(γ) = γ - γ(α_i∨) α_i.
        let to_weight = |c: &[i64]| -> Weight {
            Weight(
                (0..r)
                    .map(|i| (0..r).map(|j| cartan[i][j] * c[j]).sum())
                    .collect(),
            )
        };
        let mut seen: HashMap<Vec<i64>, Weight> = HashMap::new();
        let mut queue = VecDeque::new();
        for j in 0..r {
            let mut c = vec![0; r];
            c[j] = 1;
            seen.insert(c.clone(), simple_roots[j].clone());
            queue.push_back(c);
        }
        while let Some(c) = queue.pop_front() {
            let w = seen[&c].clone();
            for i in 0..r {
                let mut next = c.clone();
                next[i] -= w.0[i];
                if next.iter().all(|&x| x >= 0) && !seen.contains_key(&next) {
                    let nw = to_weight(&next);
                    seen.insert(next.clone(), nw);
                    queue.push_back(next);
                }
            }
        }
        let mut roots: Vec<(Vec<i64>, Weight)> = seen.into_iter().collect();
        roots.sort();
        let positive_root_coords = roots.iter().map(|(c, _)| c.clone()).collect();
        let positive_roots: Vec<Weight> = roots.into_iter().map(|(_, w)| w).collect();
        let positive_set = positive_roots.iter().cloned().collect();

        Ok(RootSystem {
            label: spec.label(),
            cartan,
            simple_roots,
            positive_roots,
            positive_root_coords,
            positive_set,
        })
    }

    /// Convenience constructor from a type name such as `"A2"`.
    pub fn from_name(name: &str) -> Result<Self> {
        Self::new(&name.parse()?)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// Simple root `α_i` (0-based).
    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    /// Positive roots ordered lexicographically by simple-root coordinates.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_set.contains(w)
    }

    pub fn is_negative_root(&self, w: &Weight) -> bool {
        self.positive_set.contains(&-w)
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.is_positive_root(w) || self.is_negative_root(w)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    pub(crate) fn check_index(&self, context: &'static str, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                context,
                index: i + 1,
                bound: self.rank(),
            })
        }
    }

    pub(crate) fn check_weight(&self, context: &'static str, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                context,
                expected: self.rank(),
                got: w.rank(),
            })
        }
    }

    /// `λ(α_i∨)`.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> Result<i64> {
        self.check_index("root_system", i)?;
        self.check_weight("root_system", lambda)?;
        Ok(lambda.0[i])
    }

    /// `s_i(λ) = λ - λ(α_i∨) α_i`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        let m = self.pairing(lambda, i)?;
        Ok(self.reflect_unchecked(i, lambda, m))
    }

    pub(crate) fn reflect_unchecked(&self, i: usize, lambda: &Weight, m: i64) -> Weight {
        Weight(
            lambda
                .0
                .iter()
                .zip(&self.simple_roots[i].0)
                .map(|(l, a)| l - m * a)
                .collect(),
        )
    }

    /// `Σ c_j α_j` in fundamental coordinates.
    pub fn root_coords_to_weight(&self, c: &[i64]) -> Result<Weight> {
        let r = self.rank();
        if c.len() != r {
            return Err(Error::DimensionMismatch {
                context: "root_system",
                expected: r,
                got: c.len(),
            });
        }
        Ok(Weight(
            (0..r)
                .map(|i| (0..r).map(|j| self.cartan[i][j] * c[j]).sum())
                .collect(),
        ))
    }

    /// Coordinates of `λ` in the basis of simple roots. Rational in general
    /// (e.g. `ρ1 = (2α1 + α2)/3` in `A2`).
    pub fn weight_to_root_coords(&self, lambda: &Weight) -> Result<Vec<Ratio<i64>>> {
        self.check_weight("root_system", lambda)?;
        let r = self.rank();
        let mut m: Vec<Vec<Ratio<i64>>> = (0..r)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> = self.cartan[i]
                    .iter()
                    .map(|&x| Ratio::from_integer(x))
                    .collect();
                row.push(Ratio::from_integer(lambda.0[i]));
                row
            })
            .collect();
        for k in 0..r {
            let p = (k..r)
                .find(|&i| !m[i][k].is_zero())
                .expect("finite-type Cartan matrices are invertible");
            m.swap(k, p);
            let pivot = m[k][k];
            for x in m[k].iter_mut() {
                *x /= pivot;
            }
            for i in 0..r {
                if i != k && !m[i][k].is_zero() {
                    let f = m[i][k];
                    for j in k..=r {
                        let t = f * m[k][j];
                        m[i][j] -= t;
                    }
                }
            }
        }
        Ok(m.into_iter().map(|row| row[r]).collect())
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.is_dominant()
    }

    /// Order `m_ij` of `s_i s_j`, read off the Cartan product `a_ij a_ji`.
    pub fn coxeter_order(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan[i][j] * self.cartan[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => unreachable!("finite type forbids a_ij a_ji = {p}"),
        }
    }
}
