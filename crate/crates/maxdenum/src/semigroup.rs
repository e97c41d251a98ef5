//! Numerical semigroups, factorization enumeration, and the general
//! maximal-denumerant algorithm.
//!
//! A numerical semigroup is a subset of the nonnegative integers that is
//! closed under addition, contains 0, and has finite complement
//! (equivalently, its generators have gcd 1). For an element `s`, a
//! factorization is a tuple `(c_1, ..., c_t)` of nonnegative coefficients
//! against the minimal generators with `sum c_i * a_i = s`; its length is
//! `sum c_i`. The maximal denumerant of `s` counts the factorizations of
//! maximal length, and the maximal denumerant of the semigroup is the
//! maximum of this quantity over all elements. It is computed by scanning
//! the finitely many maximally reduced elements, which all lie below
//! `N = (a_1 - 1) * (a_2 + ... + a_t)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A tuple of nonnegative coefficients against the minimal generators.
///
/// Serializes as a bare array so JSON consumers see `[c1, c2, ...]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Factorization {
    coefficients: Vec<i64>,
}

impl Factorization {
    pub fn new(coefficients: Vec<i64>) -> Self {
        debug_assert!(coefficients.iter().all(|&c| c >= 0));
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// The length of the factorization, i.e. the coefficient sum.
    pub fn length(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    /// The element represented against the given generators.
    pub fn element(&self, generators: &[i64]) -> i64 {
        self.coefficients
            .iter()
            .zip(generators)
            .map(|(&c, &a)| c * a)
            .sum()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Which computation produced a maximal-denumerant value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    General,
    MinH,
    Ceiling,
    Bezout,
    Classification,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::General => "general",
            Method::MinH => "min-h",
            Method::Ceiling => "ceiling",
            Method::Bezout => "bezout",
            Method::Classification => "classification",
        };
        f.write_str(name)
    }
}

/// A maximal-denumerant value tagged with the method that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmaxResult {
    pub value: i64,
    pub method: Method,
}

/// A maximally reduced element together with its maximal factorizations.
///
/// An element is maximally reduced when for every generator index some
/// maximal-length factorization has a zero coefficient there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedElementReport {
    pub element: i64,
    pub maximal_factorizations: Vec<Factorization>,
    pub dmax_element: i64,
}

/// A numerical semigroup, canonicalized to its minimal generating set.
///
/// Immutable after construction; the Apéry set of the multiplicity is
/// precomputed so that membership tests are O(1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    raw_generators: Vec<i64>,
    minimal_generators: Vec<i64>,
    apery: Vec<i64>,
}

impl NumericalSemigroup {
    /// Builds a semigroup from an arbitrary list of positive generators.
    ///
    /// Duplicates are dropped, the list is sorted, the gcd is checked to
    /// be 1, and generators expressible as nonnegative combinations of
    /// the others are removed until a minimal generating set remains.
    pub fn new(generators: &[i64]) -> Result<Self, Error> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let minimal = extract_minimal(gens);
        let apery = compute_apery(&minimal)?;
        Ok(Self {
            raw_generators: generators.to_vec(),
            minimal_generators: minimal,
            apery,
        })
    }

    /// The generators exactly as supplied by the caller.
    pub fn raw_generators(&self) -> &[i64] {
        &self.raw_generators
    }

    /// The minimal generating set `a_1 < a_2 < ... < a_t`.
    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    /// The smallest nonzero element, `a_1`.
    pub fn multiplicity(&self) -> i64 {
        self.minimal_generators[0]
    }

    /// The number of minimal generators, `t`.
    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Whether this semigroup is all of the nonnegative integers.
    pub fn is_all_of_n(&self) -> bool {
        self.minimal_generators == [1]
    }

    /// The Apéry set of the multiplicity: entry `r` is the least element
    /// of the semigroup congruent to `r` mod `a_1`.
    pub fn apery_set(&self) -> &[i64] {
        &self.apery
    }

    /// Membership test via the Apéry set. Negative inputs are permitted
    /// and are never members.
    pub fn contains(&self, s: i64) -> bool {
        if s < 0 {
            return false;
        }
        let r = (s % self.multiplicity()) as usize;
        s >= self.apery[r]
    }

    /// The largest integer not in the semigroup.
    pub fn frobenius_number(&self) -> Result<i64, Error> {
        if self.is_all_of_n() {
            return Err(Error::IsAllOfN);
        }
        let max_apery = self.apery.iter().copied().max().expect("apery nonempty");
        Ok(max_apery - self.multiplicity())
    }

    /// All factorizations of `s`, in lexicographic order on the
    /// coefficient tuples. Empty when `s` is not a member.
    pub fn factorizations(&self, s: i64) -> Vec<Factorization> {
        let mut out = Vec::new();
        if !self.contains(s) {
            return out;
        }
        let mut prefix = Vec::with_capacity(self.embedding_dimension());
        enumerate(&self.minimal_generators, s, &mut prefix, &mut out);
        out
    }

    /// The number of factorizations of `s`; 0 when `s` is not a member.
    pub fn denumerant(&self, s: i64) -> usize {
        self.factorizations(s).len()
    }

    /// The factorizations of `s` of maximal length.
    pub fn maximal_factorizations(&self, s: i64) -> Result<Vec<Factorization>, Error> {
        if !self.contains(s) {
            return Err(Error::NotAMember(s));
        }
        let all = self.factorizations(s);
        let max_len = all.iter().map(Factorization::length).max().expect("member");
        Ok(all.into_iter().filter(|f| f.length() == max_len).collect())
    }

    /// The maximal denumerant of the element `s`.
    pub fn dmax_element(&self, s: i64) -> Result<i64, Error> {
        Ok(self.maximal_factorizations(s)?.len() as i64)
    }

    /// Whether every generator index is avoided by some maximal-length
    /// factorization of `s`. A single factorization may witness several
    /// indices.
    pub fn is_maximally_reduced(&self, s: i64) -> Result<bool, Error> {
        let maximal = self.maximal_factorizations(s)?;
        let t = self.embedding_dimension();
        Ok((0..t).all(|i| maximal.iter().any(|f| f.coefficients()[i] == 0)))
    }

    /// Subtracts the componentwise minimum of the maximal factorizations
    /// of `s`, yielding a maximally reduced element with the same maximal
    /// denumerant.
    pub fn reduce_to_maximally_reduced(&self, s: i64) -> Result<i64, Error> {
        let maximal = self.maximal_factorizations(s)?;
        let mut reduced = s;
        for (i, &a) in self.minimal_generators.iter().enumerate() {
            let c_min = maximal
                .iter()
                .map(|f| f.coefficients()[i])
                .min()
                .expect("nonempty");
            reduced -= c_min * a;
        }
        Ok(reduced)
    }

    /// The upper bound `N = (a_1 - 1) * (a_2 + ... + a_t)` above which no
    /// element is maximally reduced.
    pub fn scan_bound(&self) -> Result<i64, Error> {
        let a1 = self.multiplicity();
        let mut tail: i64 = 0;
        for &a in &self.minimal_generators[1..] {
            tail = tail.checked_add(a).ok_or(Error::Overflow)?;
        }
        (a1 - 1).checked_mul(tail).ok_or(Error::Overflow)
    }

    /// Scans every member up to the bound `N` and reports exactly the
    /// maximally reduced elements, ascending.
    ///
    /// The scan decides reducedness with longest-factorization tables: a
    /// member `s` is maximally reduced iff for each index `i` the maximal
    /// length achievable without generator `a_i` equals the unrestricted
    /// maximal length. Each report's factorization list then comes from
    /// direct enumeration.
    pub fn maximally_reduced_elements(&self) -> Result<Vec<ReducedElementReport>, Error> {
        let bound = self.scan_bound()?;
        let gens = &self.minimal_generators;
        let t = gens.len();

        let full = max_length_table(gens, bound);
        let without: Vec<Vec<Option<i64>>> = (0..t)
            .map(|i| {
                let rest: Vec<i64> = gens
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &a)| a)
                    .collect();
                max_length_table(&rest, bound)
            })
            .collect();

        let mut reports = Vec::new();
        for s in 0..=bound {
            let Some(len) = full[s as usize] else { continue };
            if (0..t).all(|i| without[i][s as usize] == Some(len)) {
                let maximal = self.maximal_factorizations(s)?;
                debug_assert!(maximal.iter().all(|f| f.length() == len));
                reports.push(ReducedElementReport {
                    element: s,
                    dmax_element: maximal.len() as i64,
                    maximal_factorizations: maximal,
                });
            }
        }
        Ok(reports)
    }

    /// The maximal denumerant of the semigroup, by scanning the maximally
    /// reduced elements up to `N`.
    pub fn dmax_general(&self) -> Result<DmaxResult, Error> {
        let reports = self.maximally_reduced_elements()?;
        let value = reports
            .iter()
            .map(|r| r.dmax_element)
            .max()
            .expect("0 is always maximally reduced");
        Ok(DmaxResult {
            value,
            method: Method::General,
        })
    }
}

/// Drops generators expressible as nonnegative combinations of the
/// others, iterating to a fixed point. Input is sorted and deduplicated.
fn extract_minimal(mut gens: Vec<i64>) -> Vec<i64> {
    loop {
        let redundant = gens.iter().position(|&a| {
            let others: Vec<i64> = gens.iter().copied().filter(|&b| b != a).collect();
            !others.is_empty() && representable(a, &others)
        });
        match redundant {
            Some(i) => {
                gens.remove(i);
            }
            None => return gens,
        }
    }
}

/// Whether `target >= 0` is a nonnegative combination of `gens`.
fn representable(target: i64, gens: &[i64]) -> bool {
    let n = target as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for s in 1..=n {
        reach[s] = gens
            .iter()
            .any(|&a| (a as usize) <= s && reach[s - a as usize]);
    }
    reach[n]
}

/// Round-robin relaxation over residue classes mod `a_1`: repeatedly add
/// the non-multiplicity generators until no entry improves.
fn compute_apery(minimal: &[i64]) -> Result<Vec<i64>, Error> {
    let a1 = minimal[0];
    let len = a1 as usize;
    let mut apery = vec![i64::MAX; len];
    apery[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for r in 0..len {
            let base = apery[r];
            if base == i64::MAX {
                continue;
            }
            for &a in &minimal[1..] {
                let v = base.checked_add(a).ok_or(Error::Overflow)?;
                let rr = (v % a1) as usize;
                if v < apery[rr] {
                    apery[rr] = v;
                    changed = true;
                }
            }
        }
    }
    Ok(apery)
}

/// Nested descent over the coefficients, first index outermost, so the
/// output is already in lexicographic order.
fn enumerate(gens: &[i64], s: i64, prefix: &mut Vec<i64>, out: &mut Vec<Factorization>) {
    if gens.len() == 1 {
        if s % gens[0] == 0 {
            prefix.push(s / gens[0]);
            out.push(Factorization::new(prefix.clone()));
            prefix.pop();
        }
        return;
    }
    for c in 0..=s / gens[0] {
        prefix.push(c);
        enumerate(&gens[1..], s - c * gens[0], prefix, out);
        prefix.pop();
    }
}

/// `table[s]` is the maximal factorization length of `s` over `gens`, or
/// `None` when `s` has no factorization.
fn max_length_table(gens: &[i64], bound: i64) -> Vec<Option<i64>> {
    let n = bound as usize;
    let mut table = vec![None; n + 1];
    table[0] = Some(0);
    for s in 1..=n {
        table[s] = gens
            .iter()
            .filter(|&&a| (a as usize) <= s)
            .filter_map(|&a| table[s - a as usize].map(|l| l + 1))
            .max();
    }
    table
}
