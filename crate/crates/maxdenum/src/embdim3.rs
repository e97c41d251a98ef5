//! Closed-form maximal denumerants for semigroups generated by at most
//! three elements.
//!
//! Every such semigroup can be written as `<a1, a1 + g*m, a1 + g*n>` with
//! `g = gcd(a2 - a1, a3 - a1)`, `m < n`, and `gcd(m, n) = 1`. Three
//! independent routes compute the maximal denumerant from this form:
//!
//! * `dmax_min_h` — the least `h >= 1` with `h*m*n - a1` in `<m, n>`;
//! * `dmax_ceiling` — `ceil(a1/mn)` or `ceil(a1/mn) + 1` depending on
//!   whether the residue of `-a1` mod `mn` lies in `<m, n>`;
//! * `dmax_bezout` — `ceil(x/n) + ceil(y/m)` for any `x, y` with
//!   `m*x + n*y = a1`.
//!
//! A classification of basic triples (those with `g = 1`) settles most
//! cases without any of the formulas.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::semigroup::{gcd, DmaxResult, Factorization, Method, NumericalSemigroup};

/// The `(a1, g, m, n)` decomposition of a sorted coprime triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GmnForm {
    pub a1: i64,
    pub g: i64,
    pub m: i64,
    pub n: i64,
}

impl GmnForm {
    /// Decomposes `a1 < a2 < a3` with `gcd(a1, a2, a3) = 1`. The triple
    /// need not be a minimal generating set.
    pub fn decompose(a1: i64, a2: i64, a3: i64) -> Result<Self, Error> {
        if !(0 < a1 && a1 < a2 && a2 < a3) {
            return Err(Error::NotSorted);
        }
        let g3 = gcd(a1, gcd(a2, a3));
        if g3 != 1 {
            return Err(Error::GcdNotOne(g3));
        }
        let g = gcd(a2 - a1, a3 - a1);
        Ok(Self {
            a1,
            g,
            m: (a2 - a1) / g,
            n: (a3 - a1) / g,
        })
    }
}

/// Exact mathematical ceiling of `p / q` for `q > 0`, correct for
/// negative `p`.
pub fn ceil_div(p: i64, q: i64) -> i64 {
    debug_assert!(q > 0);
    p.div_euclid(q) + (p.rem_euclid(q) != 0) as i64
}

/// Membership of `z` in the two-generated semigroup `<m, n>` with
/// `gcd(m, n) = 1`.
pub fn two_gen_contains(z: i64, m: i64, n: i64) -> bool {
    debug_assert_eq!(gcd(m, n), 1);
    if z < 0 {
        return false;
    }
    (0..=z / n).any(|c| (z - c * n) % m == 0)
}

/// The least `h >= 1` such that `h*m*n - a1` lies in `<m, n>`.
///
/// The search is capped at `ceil(a1/mn) + 1`, which always suffices:
/// beyond it `h*m*n - a1 > mn` exceeds the Frobenius number of `<m, n>`.
pub fn dmax_min_h(form: &GmnForm) -> DmaxResult {
    let mn = form.m * form.n;
    let cap = ceil_div(form.a1, mn) + 1;
    for h in 1..=cap {
        if two_gen_contains(h * mn - form.a1, form.m, form.n) {
            return DmaxResult {
                value: h,
                method: Method::MinH,
            };
        }
    }
    unreachable!("min-h search exceeded its cap for {form:?}");
}

/// The ceiling formula: `ceil(a1/mn)`, plus one when the residue of
/// `-a1` mod `mn` is outside `<m, n>`.
pub fn dmax_ceiling(form: &GmnForm) -> DmaxResult {
    let mn = form.m * form.n;
    let alpha = (-form.a1).rem_euclid(mn);
    let base = ceil_div(form.a1, mn);
    let value = if two_gen_contains(alpha, form.m, form.n) {
        base
    } else {
        base + 1
    };
    DmaxResult {
        value,
        method: Method::Ceiling,
    }
}

/// Integers with `m*x + n*y = a1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutPair {
    pub x: i64,
    pub y: i64,
}

/// Returns `(x, y)` with `a*x + b*y = gcd(a, b)` for `a, b >= 0`.
fn extended_gcd(a: i64, b: i64) -> (i64, i64) {
    if b == 0 {
        return (1, 0);
    }
    let (x, y) = extended_gcd(b, a % b);
    (y, x - (a / b) * y)
}

/// The canonical solution of `m*x + n*y = a1` with `0 <= x < n`.
pub fn bezout(m: i64, n: i64, a1: i64) -> BezoutPair {
    debug_assert_eq!(gcd(m, n), 1);
    let (x0, _) = extended_gcd(m, n);
    let x = (x0 % n * (a1 % n)).rem_euclid(n);
    let y = (a1 - m * x) / n;
    debug_assert_eq!(m * x + n * y, a1);
    BezoutPair { x, y }
}

/// The Bézout formula `ceil(x/n) + ceil(y/m)`; the value does not depend
/// on the representative chosen.
pub fn dmax_bezout(form: &GmnForm) -> DmaxResult {
    let pair = bezout(form.m, form.n, form.a1);
    DmaxResult {
        value: ceil_div(pair.x, form.n) + ceil_div(pair.y, form.m),
        method: Method::Bezout,
    }
}

/// The structure of the maximally reduced elements of an embedding
/// dimension 3 semigroup: they are exactly `0, n*a2, ..., k*n*a2`, and
/// the maximal factorizations of `i*n*a2` are `p*U + q*V` with
/// `p + q = i`, where `U = (0, n, 0)` and `V = (n - m, 0, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedStructure {
    pub k: i64,
    pub u: Factorization,
    pub v: Factorization,
    pub elements: Vec<i64>,
}

pub fn reduced_structure(s: &NumericalSemigroup) -> Result<ReducedStructure, Error> {
    let gens = s.minimal_generators();
    if gens.len() != 3 {
        return Err(Error::WrongEmbeddingDimension(gens.len()));
    }
    let form = GmnForm::decompose(gens[0], gens[1], gens[2])?;
    let k = dmax_bezout(&form).value - 1;
    let elements = (0..=k).map(|i| i * form.n * gens[1]).collect();
    Ok(ReducedStructure {
        k,
        u: Factorization::new(vec![0, form.n, 0]),
        v: Factorization::new(vec![form.n - form.m, 0, form.m]),
        elements,
    })
}

/// A triple `a1 < a2 < a3` is basic when `gcd(a2 - a1, a3 - a1) = 1`.
pub fn is_basic(a1: i64, a2: i64, a3: i64) -> Result<bool, Error> {
    if !(0 < a1 && a1 < a2 && a2 < a3) {
        return Err(Error::NotSorted);
    }
    Ok(gcd(a2 - a1, a3 - a1) == 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasicCase {
    /// `4*a1 = 2*a2 + a3`; forces the value 2.
    Eq4A1,
    /// `3*a1 = a2 + a3`; forces the value 2.
    Eq3A1,
    /// `4*a1 < 2*a2 + a3` with neither equality; forces the value 1.
    Below,
    /// `4*a1 > 2*a2 + a3`; determined only when `m` or `n` divides `a1`.
    Above,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicClassification {
    pub case: BasicCase,
    pub dmax_if_determined: Option<i64>,
}

/// Classifies a basic triple. In the `Above` case the value is filled in
/// only when `m` or `n` divides `a1`, where it equals `ceil(a1/mn)`.
pub fn classify_basic(a1: i64, a2: i64, a3: i64) -> Result<BasicClassification, Error> {
    if !is_basic(a1, a2, a3)? {
        return Err(Error::NotBasic);
    }
    let (m, n) = (a2 - a1, a3 - a1);
    let classification = if 4 * a1 == 2 * a2 + a3 {
        BasicClassification {
            case: BasicCase::Eq4A1,
            dmax_if_determined: Some(2),
        }
    } else if 3 * a1 == a2 + a3 {
        BasicClassification {
            case: BasicCase::Eq3A1,
            dmax_if_determined: Some(2),
        }
    } else if 4 * a1 < 2 * a2 + a3 {
        BasicClassification {
            case: BasicCase::Below,
            dmax_if_determined: Some(1),
        }
    } else {
        let dmax = (a1 % m == 0 || a1 % n == 0).then(|| ceil_div(a1, m * n));
        BasicClassification {
            case: BasicCase::Above,
            dmax_if_determined: dmax,
        }
    };
    Ok(classification)
}

/// One row of a multiplicity table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub a2: i64,
    pub a3: i64,
    pub dmax: DmaxResult,
}

/// Tabulates the maximal denumerant of every triple `a1 < a2 < a3 <=
/// max_gen` with `gcd(a1, a2, a3) = 1`, restricted to basic triples when
/// `basic_only` is set. Basic rows settled by the classification carry
/// that method; all other rows use the Bézout formula. Rows are sorted
/// by `(a2, a3)`.
pub fn multiplicity_table(a1: i64, max_gen: i64, basic_only: bool) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for a2 in a1 + 1..=max_gen {
        for a3 in a2 + 1..=max_gen {
            if gcd(a1, gcd(a2, a3)) != 1 {
                continue;
            }
            let basic = gcd(a2 - a1, a3 - a1) == 1;
            if basic_only && !basic {
                continue;
            }
            let form = GmnForm::decompose(a1, a2, a3).expect("triple validated");
            let dmax = if basic {
                let classification = classify_basic(a1, a2, a3).expect("basic checked");
                match classification.dmax_if_determined {
                    Some(value) => {
                        debug_assert_eq!(value, dmax_bezout(&form).value);
                        DmaxResult {
                            value,
                            method: Method::Classification,
                        }
                    }
                    None => dmax_bezout(&form),
                }
            } else {
                dmax_bezout(&form)
            };
            rows.push(TableRow { a2, a3, dmax });
        }
    }
    rows
}
