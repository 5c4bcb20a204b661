//! Subspace concentration checker for discrete even measures.
//!
//! For a discrete measure it suffices to test the subspaces spanned by
//! subsets of the support: replacing any ξ by `span(ξ ∩ supp μ)` keeps its
//! mass and does not increase its dimension. These spans are the flats of
//! the support's vector matroid and are enumerated level by level, each flat
//! identified by the set of support vectors it contains.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::Subspace;
use crate::linalg::Vector;
use crate::measure::DiscreteMeasure;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcentrationConfig<T> {
    /// Equality band, relative to `|μ|`.
    pub equality_tol: T,
    /// Distance below which a support vector is considered inside a subspace.
    pub membership_tol: T,
}

impl<T: Scalar> Default for ConcentrationConfig<T> {
    fn default() -> Self {
        Self { equality_tol: T::tol(1e-9, 1e3), membership_tol: T::tol(1e-9, 1e3) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Strict,
    /// Equality, with a complementary subspace carrying the remaining mass.
    Equality,
    /// Equality, but the remaining mass does not sit in a complement.
    EqualityWithoutComplement,
    Violation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConcentrationStatus {
    StrictlySatisfied,
    SatisfiedWithEquality,
    Violated,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceRecord<T> {
    pub subspace: Subspace<T>,
    /// Indices of the support atoms lying in the subspace.
    pub members: Vec<usize>,
    /// `μ(ξ ∩ S^{n-1})`
    pub mass: T,
    /// `(dim ξ / n) |μ|`
    pub bound: T,
    pub verdict: Verdict,
}

impl<T: Scalar> SubspaceRecord<T> {
    pub fn ratio(&self) -> T {
        self.mass / self.bound
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EqualityPair<T> {
    pub xi: Subspace<T>,
    pub xi_prime: Subspace<T>,
    pub xi_members: Vec<usize>,
    pub xi_prime_members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConcentrationReport<T> {
    pub status: ConcentrationStatus,
    pub total: T,
    /// Sorted by dimension, then by basis in descending lexicographic order
    /// (so `span(e_1)` precedes `span(e_2)`).
    pub records: Vec<SubspaceRecord<T>>,
    /// Every equality subspace with its complement, in record order.
    pub equality_pairs: Vec<EqualityPair<T>>,
    /// Worst violation (largest mass/bound), or the first equality subspace.
    pub witness: Option<Subspace<T>>,
}

impl<T: Scalar> ConcentrationReport<T> {
    pub fn max_ratio(&self) -> T {
        self.records.iter().map(|r| r.ratio()).fold(T::zero(), T::max)
    }

    /// Record with the largest mass/bound ratio.
    pub fn most_concentrated(&self) -> Option<&SubspaceRecord<T>> {
        self.records.iter().max_by(|a, b| a.ratio().partial_cmp(&b.ratio()).unwrap_or(Ordering::Equal))
    }

    pub fn witness_record(&self) -> Option<&SubspaceRecord<T>> {
        let w = self.witness.as_ref()?;
        self.records.iter().find(|r| &r.subspace == w)
    }
}

pub fn check_subspace_concentration<T: Scalar>(mu: &DiscreteMeasure<T>) -> Result<ConcentrationReport<T>> {
    check_subspace_concentration_with(mu, &ConcentrationConfig::default())
}

pub fn check_subspace_concentration_with<T: Scalar>(
    mu: &DiscreteMeasure<T>,
    cfg: &ConcentrationConfig<T>,
) -> Result<ConcentrationReport<T>> {
    if mu.is_empty() || !(mu.total() > T::zero()) {
        return Err(Error::EmptyMeasure);
    }
    let n = mu.dim();
    let total = mu.total();
    let eq_band = cfg.equality_tol * total;
    let nn = T::from_usize_lossy(n);

    let mut records: Vec<SubspaceRecord<T>> = enumerate_flats(mu, cfg.membership_tol)
        .into_iter()
        .map(|(subspace, members)| {
            let mass = T::lit(2.0) * members.iter().map(|&i| mu.atoms()[i].mass).sum::<T>();
            let bound = T::from_usize_lossy(subspace.dim()) / nn * total;
            let verdict = if mass > bound + eq_band {
                Verdict::Violation
            } else if (mass - bound).abs() <= eq_band {
                Verdict::Equality
            } else {
                Verdict::Strict
            };
            SubspaceRecord { subspace, members, mass, bound, verdict }
        })
        .collect();
    records.sort_by(|a, b| record_order(a, b));

    let mut equality_pairs = Vec::new();
    for rec in records.iter_mut().filter(|r| r.verdict == Verdict::Equality) {
        let rest: Vec<usize> = (0..mu.len()).filter(|i| !rec.members.contains(i)).collect();
        let rest_vectors: Vec<Vector<T>> = rest.iter().map(|&i| mu.atoms()[i].u.clone()).collect();
        let xi_prime = Subspace::span(n, &rest_vectors);
        let complementary = !rest.is_empty() && rec.subspace.is_complementary(&xi_prime);
        let prime_bound = T::from_usize_lossy(xi_prime.dim()) / nn * total;
        let prime_mass = mu.mass_in(&xi_prime, cfg.membership_tol);
        if complementary && (prime_mass - prime_bound).abs() <= eq_band {
            equality_pairs.push(EqualityPair {
                xi: rec.subspace.clone(),
                xi_prime,
                xi_members: rec.members.clone(),
                xi_prime_members: rest,
            });
        } else {
            rec.verdict = Verdict::EqualityWithoutComplement;
        }
    }

    let worst_violation = records
        .iter()
        .filter(|r| r.verdict == Verdict::Violation)
        .max_by(|a, b| a.ratio().partial_cmp(&b.ratio()).unwrap_or(Ordering::Equal));
    let orphan = records.iter().find(|r| r.verdict == Verdict::EqualityWithoutComplement);
    let (status, witness) = if let Some(r) = worst_violation.or(orphan) {
        (ConcentrationStatus::Violated, Some(r.subspace.clone()))
    } else if let Some(p) = equality_pairs.first() {
        (ConcentrationStatus::SatisfiedWithEquality, Some(p.xi.clone()))
    } else {
        (ConcentrationStatus::StrictlySatisfied, None)
    };

    Ok(ConcentrationReport { status, total, records, equality_pairs, witness })
}

fn record_order<T: Scalar>(a: &SubspaceRecord<T>, b: &SubspaceRecord<T>) -> Ordering {
    a.subspace.dim().cmp(&b.subspace.dim()).then_with(|| {
        let fa = a.subspace.basis().iter().flatten();
        let fb = b.subspace.basis().iter().flatten();
        for (x, y) in fa.zip(fb) {
            match x.partial_cmp(y) {
                Some(Ordering::Equal) | None => continue,
                Some(o) => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// All proper flats `span(T)`, `T ⊆ supp μ`, with their member sets.
fn enumerate_flats<T: Scalar>(mu: &DiscreteMeasure<T>, tol: T) -> Vec<(Subspace<T>, Vec<usize>)> {
    let n = mu.dim();
    let atoms = mu.atoms();
    let closure =
        |s: &Subspace<T>| -> Vec<usize> { (0..atoms.len()).filter(|&i| s.contains(&atoms[i].u, tol)).collect() };
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out: Vec<(Subspace<T>, Vec<usize>)> = Vec::new();
    let mut level: Vec<(Subspace<T>, Vec<usize>)> = Vec::new();
    if n < 2 {
        return out;
    }
    for a in atoms {
        let s = Subspace::span(n, std::slice::from_ref(&a.u));
        let members = closure(&s);
        if seen.insert(members.clone()) {
            level.push((s, members));
        }
    }
    while !level.is_empty() {
        let mut next = Vec::new();
        for (s, members) in &level {
            if s.dim() + 1 >= n {
                continue;
            }
            for (j, a) in atoms.iter().enumerate() {
                if members.contains(&j) {
                    continue;
                }
                let mut vectors: Vec<Vector<T>> = members.iter().map(|&i| atoms[i].u.clone()).collect();
                vectors.push(a.u.clone());
                let grown = Subspace::span(n, &vectors);
                let grown_members = closure(&grown);
                if seen.insert(grown_members.clone()) {
                    next.push((grown, grown_members));
                }
            }
        }
        out.append(&mut level);
        level = next;
    }
    // a flat spanning R^n only appears when the closure tolerance merged
    // nearly dependent vectors; drop it
    out.retain(|(s, _)| s.dim() < n);
    out
}
