//! Frobenius data of an integer polynomial over ℚ.
//!
//! For a prime `p` not dividing the discriminant, the degrees of the
//! irreducible factors of `f mod p` are the cycle lengths of the Frobenius
//! element on the roots of `f`, i.e. the residue degrees of the primes of
//! `ℚ[x]/(f)` above `p`.

mod modp;
mod poly;
mod primes;

pub use poly::IntPoly;
pub use primes::{is_prime, primes_up_to};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::perm::PermGroup;
use crate::{Error, Result};

pub const DEFAULT_CENSUS_BOUND: u64 = 1_000_000;
pub const DEFAULT_WITNESS_BOUND: u64 = 10_000;

/// Multiset of factor degrees, sorted descending. Displays as `2.1.1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreePattern(Vec<u32>);

impl DegreePattern {
    pub fn new(mut degrees: Vec<u32>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreePattern(degrees)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_all_even(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|d| d % 2 == 0)
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for DegreePattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split('.')
            .map(|t| t.parse::<u32>().ok().filter(|&d| d > 0))
            .collect::<Option<Vec<_>>>()
            .map(DegreePattern::new)
            .ok_or_else(|| Error::Parse(format!("bad degree pattern `{s}`")))
    }
}

impl Serialize for DegreePattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeOutcome {
    Unramified(DegreePattern),
    /// `f mod p` has a repeated factor.
    Ramified,
}

impl PrimeOutcome {
    pub fn pattern(&self) -> Option<&DegreePattern> {
        match self {
            PrimeOutcome::Unramified(pat) => Some(pat),
            PrimeOutcome::Ramified => None,
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p >= 1 << 31 {
        return Err(Error::PrimeTooLarge(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Factor-degree pattern of `f mod p`, or `Ramified` when `gcd(f, f′)` is
/// nonconstant mod `p`.
pub fn degree_pattern(f: &IntPoly, p: u64) -> Result<PrimeOutcome> {
    check_prime(p)?;
    let reduced = modp::reduce(f.coeffs(), p);
    if modp::deg(&reduced) != Some(f.degree()) {
        return Err(Error::DividesLeadingCoefficient(p));
    }
    Ok(pattern_mod(&reduced, p))
}

fn pattern_mod(reduced: &[u64], p: u64) -> PrimeOutcome {
    let g = modp::gcd(reduced, &modp::derivative(reduced, p), p);
    if modp::deg(&g).unwrap_or(0) > 0 {
        return PrimeOutcome::Ramified;
    }
    PrimeOutcome::Unramified(DegreePattern::new(modp::distinct_degree_pattern(reduced, p)))
}

/// Pattern counts over all primes `≤ bound`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Census {
    pub bound: u64,
    pub primes_scanned: u64,
    pub counts: BTreeMap<DegreePattern, u64>,
    pub ramified: Vec<u64>,
    /// Primes dividing the leading coefficient, skipped entirely.
    pub skipped: Vec<u64>,
}

impl Census {
    pub fn unramified_total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn frequency(&self, pattern: &DegreePattern) -> f64 {
        let total = self.unramified_total();
        if total == 0 {
            return 0.0;
        }
        *self.counts.get(pattern).unwrap_or(&0) as f64 / total as f64
    }

    pub fn all_even_frequency(&self) -> f64 {
        let total = self.unramified_total();
        if total == 0 {
            return 0.0;
        }
        let even: u64 = self.counts.iter().filter(|(p, _)| p.is_all_even()).map(|(_, c)| c).sum();
        even as f64 / total as f64
    }

    /// `(pattern, count, frequency)` rows, patterns descending.
    pub fn rows(&self) -> Vec<(DegreePattern, u64, f64)> {
        self.counts
            .iter()
            .rev()
            .map(|(p, &c)| (p.clone(), c, self.frequency(p)))
            .collect()
    }
}

pub fn census(f: &IntPoly, bound: u64) -> Result<Census> {
    if bound < 2 {
        return Err(Error::Parse(format!("census bound must be at least 2, got {bound}")));
    }
    if bound >= 1 << 31 {
        return Err(Error::PrimeTooLarge(bound));
    }
    let mut out = Census {
        bound,
        primes_scanned: 0,
        counts: BTreeMap::new(),
        ramified: Vec::new(),
        skipped: Vec::new(),
    };
    for p in primes_up_to(bound) {
        out.primes_scanned += 1;
        let reduced = modp::reduce(f.coeffs(), p);
        if modp::deg(&reduced) != Some(f.degree()) {
            out.skipped.push(p);
            continue;
        }
        match pattern_mod(&reduced, p) {
            PrimeOutcome::Unramified(pat) => *out.counts.entry(pat).or_insert(0) += 1,
            PrimeOutcome::Ramified => out.ramified.push(p),
        }
    }
    Ok(out)
}

/// Two unramified primes at which every factor degree is even.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    pub poly: IntPoly,
    #[serde(serialize_with = "display_string")]
    pub discriminant: BigInt,
    pub primes: [u64; 2],
    pub patterns: [DegreePattern; 2],
}

impl WitnessCertificate {
    /// Recomputes both patterns and the discriminant condition.
    pub fn verify(&self) -> bool {
        let disc = self.poly.discriminant();
        self.primes[0] != self.primes[1]
            && disc == self.discriminant
            && self.primes.iter().zip(&self.patterns).all(|(&p, pat)| {
                (&disc % BigInt::from(p)) != BigInt::zero()
                    && matches!(degree_pattern(&self.poly, p), Ok(PrimeOutcome::Unramified(ref q)) if q == pat && q.is_all_even())
            })
    }
}

fn display_string<S: Serializer>(value: &BigInt, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

fn require_monic_squarefree(f: &IntPoly) -> Result<BigInt> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let disc = f.discriminant();
    if disc.is_zero() {
        return Err(Error::NotSquarefree);
    }
    Ok(disc)
}

/// The two smallest unramified primes `≤ bound` with all-even patterns.
/// Odd-degree polynomials never have one.
pub fn find_even_witnesses(f: &IntPoly, bound: u64) -> Result<Option<WitnessCertificate>> {
    let discriminant = require_monic_squarefree(f)?;
    if f.degree() % 2 == 1 {
        return Ok(None);
    }
    let mut found: Vec<(u64, DegreePattern)> = Vec::with_capacity(2);
    for p in primes_up_to(bound.min((1 << 31) - 1)) {
        if let PrimeOutcome::Unramified(pat) = pattern_mod(&modp::reduce(f.coeffs(), p), p) {
            if pat.is_all_even() {
                found.push((p, pat));
                if found.len() == 2 {
                    let (p2, pat2) = found.pop().unwrap();
                    let (p1, pat1) = found.pop().unwrap();
                    return Ok(Some(WitnessCertificate {
                        poly: f.clone(),
                        discriminant,
                        primes: [p1, p2],
                        patterns: [pat1, pat2],
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Distinct unramified patterns seen at primes `≤ bound`.
pub fn galois_cycle_witnesses(f: &IntPoly, bound: u64) -> Result<BTreeSet<DegreePattern>> {
    require_monic_squarefree(f)?;
    Ok(census(f, bound)?.counts.into_keys().collect())
}

/// Dedekind's criterion: an `n`-cycle, an `(n−1)`-cycle and an element
/// whose only even cycle is a single 2-cycle (a power of which is a
/// transposition) together generate `S_n`.
pub fn certifies_symmetric(patterns: &BTreeSet<DegreePattern>, n: u32) -> bool {
    if n <= 1 {
        return true;
    }
    let has = |v: Vec<u32>| patterns.contains(&DegreePattern::new(v));
    let mut near = vec![n - 1];
    if n >= 2 {
        near.push(1);
    }
    let transposition_type = patterns.iter().any(|p| {
        p.total() == n && p.degrees().iter().filter(|&&d| d == 2).count() == 1 && p.degrees().iter().all(|&d| d == 2 || d % 2 == 1)
    });
    has(vec![n]) && has(near) && transposition_type
}

/// Proportion of elements of `group` with each cycle type on its points.
pub fn cycle_type_densities(group: &PermGroup, cap: u128) -> Result<BTreeMap<DegreePattern, f64>> {
    let mut counts: BTreeMap<DegreePattern, u64> = BTreeMap::new();
    group.for_each_element(cap, |g| {
        let pat = DegreePattern::new(g.cycle_type().into_iter().map(|c| c as u32).collect());
        *counts.entry(pat).or_insert(0) += 1;
    })?;
    let order = group.order() as f64;
    Ok(counts.into_iter().map(|(p, c)| (p, c as f64 / order)).collect())
}
