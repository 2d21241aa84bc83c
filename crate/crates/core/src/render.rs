//! Deterministic text, LaTeX and JSON renderings of expansions.
//!
//! Monomials print in lexicographic order of their fundamental coordinates.
//! Chevalley terms print from the longest Weyl element down, and text/LaTeX
//! Bott–Samelson cells from the largest `(l(ε), bits)` down; JSON cell lists
//! are ascending.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bott_samelson::BSExpansion;
use crate::chevalley::{ChevalleyExpansion, OrdinaryExpansion};
use crate::group_algebra::GroupAlgebraElem;
use crate::root_system::{RootSystem, Weight};

/// Coordinates used when printing exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeightDisplay {
    /// Combination of fundamental weights, e.g. `-rho1+rho2`.
    #[default]
    Fundamental,
    /// Combination of simple roots, e.g. `3a1+2a2`.
    Root,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Markup {
    Text,
    Latex,
}

fn symbol(markup: Markup, display: WeightDisplay, i: usize) -> String {
    match (markup, display) {
        (Markup::Text, WeightDisplay::Fundamental) => format!("rho{}", i + 1),
        (Markup::Text, WeightDisplay::Root) => format!("a{}", i + 1),
        (Markup::Latex, WeightDisplay::Fundamental) => format!("\\rho_{{{}}}", i + 1),
        (Markup::Latex, WeightDisplay::Root) => format!("\\alpha_{{{}}}", i + 1),
    }
}

fn linear_combination(coeffs: &[Ratio<i64>], markup: Markup, display: WeightDisplay) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sym = symbol(markup, display, i);
        let neg = c.is_negative();
        let a = c.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if a.is_integer() {
            if !a.is_one() {
                let _ = write!(out, "{}", a.numer());
            }
        } else {
            match markup {
                Markup::Text => {
                    let _ = write!(out, "{}/{}", a.numer(), a.denom());
                }
                Markup::Latex => {
                    let _ = write!(out, "\\frac{{{}}}{{{}}}", a.numer(), a.denom());
                }
            }
        }
        out.push_str(&sym);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn exponent_coeffs(rs: &RootSystem, w: &Weight, display: WeightDisplay) -> Vec<Ratio<i64>> {
    match display {
        WeightDisplay::Fundamental => w.coords().iter().map(|&c| Ratio::from_integer(c)).collect(),
        WeightDisplay::Root => rs
            .weight_to_root_coords(w)
            .expect("weight rank matches root system"),
    }
}

/// A weight as a combination of fundamental weights or simple roots.
pub fn weight_text(rs: &RootSystem, w: &Weight, display: WeightDisplay) -> String {
    linear_combination(&exponent_coeffs(rs, w, display), Markup::Text, display)
}

pub fn weight_latex(rs: &RootSystem, w: &Weight, display: WeightDisplay) -> String {
    linear_combination(&exponent_coeffs(rs, w, display), Markup::Latex, display)
}

fn poly(rs: &RootSystem, f: &GroupAlgebraElem, display: WeightDisplay, markup: Markup) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (w, c)) in f.terms().enumerate() {
        let neg = c.is_negative();
        let a: BigInt = c.abs();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if w.is_zero() {
            let _ = write!(out, "{a}");
            continue;
        }
        if !a.is_one() {
            let _ = write!(out, "{a}");
        }
        let exp = linear_combination(&exponent_coeffs(rs, w, display), markup, display);
        match markup {
            Markup::Text => {
                let _ = write!(out, "e^({exp})");
            }
            Markup::Latex => {
                let _ = write!(out, "e^{{{exp}}}");
            }
        }
    }
    out
}

/// `e^(rho1) + 2e^(-rho1+rho2) - 1` style plain text.
pub fn poly_text(rs: &RootSystem, f: &GroupAlgebraElem, display: WeightDisplay) -> String {
    poly(rs, f, display, Markup::Text)
}

/// `e^{\rho_{1}} + 2e^{-\rho_{1}+\rho_{2}}` style LaTeX.
pub fn poly_latex(rs: &RootSystem, f: &GroupAlgebraElem, display: WeightDisplay) -> String {
    poly(rs, f, display, Markup::Latex)
}

fn word_text(word: &crate::weyl::Word) -> String {
    if word.is_empty() {
        "(empty)".to_string()
    } else {
        word.to_string()
    }
}

fn latex_schubert(name: &str) -> String {
    if name == "e" {
        return "\\mathcal{O}_{1}".to_string();
    }
    let subs: String = name
        .split('s')
        .filter(|t| !t.is_empty())
        .map(|t| format!("s_{{{t}}}"))
        .collect();
    format!("\\mathcal{{O}}_{{{subs}}}")
}

fn latex_coefficient(body: String, many_terms: bool) -> String {
    if many_terms {
        format!("({body})")
    } else if body == "1" {
        String::new()
    } else {
        body
    }
}

pub fn expansion_text(rs: &RootSystem, ex: &ChevalleyExpansion, display: WeightDisplay) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", rs.label());
    let _ = writeln!(out, "weight: {}", ex.weight);
    let _ = writeln!(out, "word: {}", word_text(&ex.word));
    if ex.auto_reduced {
        let _ = writeln!(out, "auto-reduced: true");
    }
    let _ = writeln!(
        out,
        "[L_{}] * O_{} =",
        weight_text(rs, &ex.weight, WeightDisplay::Fundamental),
        ex.word.reflection_name()
    );
    let width = ex
        .terms
        .keys()
        .map(|v| ex.label(v).reflection_name().len())
        .max()
        .unwrap_or(0);
    for (v, q) in ex.terms_descending() {
        let _ = writeln!(
            out,
            "  {:<width$}  {}",
            ex.label(v).reflection_name(),
            poly_text(rs, q, display)
        );
    }
    out
}

pub fn ordinary_text(rs: &RootSystem, ex: &OrdinaryExpansion) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", rs.label());
    let _ = writeln!(out, "weight: {}", ex.weight);
    let _ = writeln!(out, "word: {}", word_text(&ex.word));
    if ex.auto_reduced {
        let _ = writeln!(out, "auto-reduced: true");
    }
    let _ = writeln!(
        out,
        "[L_{}] * O_{} (ordinary) =",
        weight_text(rs, &ex.weight, WeightDisplay::Fundamental),
        ex.word.reflection_name()
    );
    let width = ex
        .terms
        .keys()
        .map(|v| ex.label(v).reflection_name().len())
        .max()
        .unwrap_or(0);
    for (v, c) in ex.terms_descending() {
        let _ = writeln!(out, "  {:<width$}  {}", ex.label(v).reflection_name(), c);
    }
    out
}

pub fn expansion_latex(rs: &RootSystem, ex: &ChevalleyExpansion, display: WeightDisplay) -> String {
    let lhs = format!(
        "[\\mathcal{{L}}_{{{}}}]^H \\times {}^H",
        weight_latex(rs, &ex.weight, WeightDisplay::Fundamental),
        latex_schubert(&ex.word.reflection_name())
    );
    let rhs: Vec<String> = ex
        .terms_descending()
        .map(|(v, q)| {
            let c = latex_coefficient(poly_latex(rs, q, display), q.len() > 1);
            format!("{c}{}^H", latex_schubert(&ex.label(v).reflection_name()))
        })
        .collect();
    format!("{lhs} = {}\n", join_latex(&rhs))
}

pub fn ordinary_latex(ex: &OrdinaryExpansion) -> String {
    let rhs: Vec<String> = ex
        .terms_descending()
        .map(|(v, c)| {
            let c = if c.is_one() {
                String::new()
            } else {
                c.to_string()
            };
            format!("{c}{}", latex_schubert(&ex.label(v).reflection_name()))
        })
        .collect();
    format!(
        "[\\mathcal{{L}}] \\times {} = {}\n",
        latex_schubert(&ex.word.reflection_name()),
        join_latex(&rhs)
    )
}

fn join_latex(parts: &[String]) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        match p.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
    }
    out
}

pub fn bott_samelson_text(rs: &RootSystem, ex: &BSExpansion, display: WeightDisplay) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", rs.label());
    let _ = writeln!(out, "weight: {}", ex.weight);
    let _ = writeln!(out, "word: {}", word_text(&ex.word));
    let _ = writeln!(
        out,
        "nonzero cells: {} of {}",
        ex.nonzero_cells(),
        1u128 << ex.word.len()
    );
    for (cell, f) in ex.coefficients.iter().rev() {
        let _ = writeln!(out, "  {}  {}", cell, poly_text(rs, f, display));
    }
    out
}

pub fn bott_samelson_latex(rs: &RootSystem, ex: &BSExpansion, display: WeightDisplay) -> String {
    let n = ex.word.len();
    let rhs: Vec<String> = ex
        .coefficients
        .iter()
        .rev()
        .map(|(cell, f)| {
            let c = latex_coefficient(poly_latex(rs, f, display), f.len() > 1);
            format!("{c}\\mathcal{{O}}_{{{n},{cell}}}^H")
        })
        .collect();
    format!(
        "[\\mathcal{{L}}_{{{}}}^{{\\Gamma}}]^H = {}\n",
        weight_latex(rs, &ex.weight, WeightDisplay::Fundamental),
        join_latex(&rhs)
    )
}

/// One Schubert term of the `expand` JSON document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub v_word: Vec<usize>,
    pub v_length: usize,
    pub coefficient: GroupAlgebraElem,
}

/// JSON document emitted by `expand`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandDoc {
    pub group: String,
    pub weight: Vec<i64>,
    pub word: Vec<usize>,
    pub terms: Vec<TermDoc>,
    pub verified: bool,
    /// Present when the coefficients are ordinary K-theory integers, stored
    /// as constant polynomials.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub ordinary: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub auto_reduced: bool,
}

impl ExpandDoc {
    pub fn from_expansion(rs: &RootSystem, ex: &ChevalleyExpansion, verified: bool) -> Self {
        ExpandDoc {
            group: rs.label().to_string(),
            weight: ex.weight.coords().to_vec(),
            word: ex.word.one_based(),
            terms: ex
                .terms_descending()
                .map(|(v, q)| TermDoc {
                    v_word: ex.label(v).one_based(),
                    v_length: v.length(),
                    coefficient: q.clone(),
                })
                .collect(),
            verified,
            ordinary: false,
            auto_reduced: ex.auto_reduced,
        }
    }

    pub fn from_ordinary(rs: &RootSystem, ex: &OrdinaryExpansion, verified: bool) -> Self {
        let r = rs.rank();
        ExpandDoc {
            group: rs.label().to_string(),
            weight: ex.weight.coords().to_vec(),
            word: ex.word.one_based(),
            terms: ex
                .terms_descending()
                .map(|(v, c)| TermDoc {
                    v_word: ex.label(v).one_based(),
                    v_length: v.length(),
                    coefficient: GroupAlgebraElem::from_terms(r, [(Weight::zero(r), c.clone())]),
                })
                .collect(),
            verified,
            ordinary: true,
            auto_reduced: ex.auto_reduced,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDoc {
    pub cell: Vec<u8>,
    pub dimension: usize,
    pub coefficient: GroupAlgebraElem,
}

/// JSON document emitted by `bott-samelson`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottSamelsonDoc {
    pub group: String,
    pub weight: Vec<i64>,
    pub word: Vec<usize>,
    pub cells: Vec<CellDoc>,
    pub verified: bool,
}

impl BottSamelsonDoc {
    pub fn from_expansion(rs: &RootSystem, ex: &BSExpansion, verified: bool) -> Self {
        BottSamelsonDoc {
            group: rs.label().to_string(),
            weight: ex.weight.coords().to_vec(),
            word: ex.word.one_based(),
            cells: ex
                .coefficients
                .iter()
                .map(|(cell, f)| CellDoc {
                    cell: cell.bits().iter().map(|&b| u8::from(b)).collect(),
                    dimension: cell.dimension(),
                    coefficient: f.clone(),
                })
                .collect(),
            verified,
        }
    }
}

/// JSON document emitted by `table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub group: String,
    pub weight: Vec<i64>,
    pub rows: Vec<ExpandDoc>,
    pub verified: bool,
}
