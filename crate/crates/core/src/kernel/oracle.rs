//! Exhaustive enumeration of the weight-zero monoid, used to cross-check
//! the completion algorithm.

use std::collections::HashSet;

use super::hilbert::degree_order;
use crate::laurent::ExpVec;

fn enumerate(weights: &[i64], budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<ExpVec>) {
    if prefix.len() == weights.len() {
        let v: i64 = prefix.iter().zip(weights).map(|(a, l)| a * l).sum();
        if v == 0 {
            out.push(ExpVec::new(prefix.clone()));
        }
        return;
    }
    for k in 0..=budget {
        prefix.push(k);
        enumerate(weights, budget - k, prefix, out);
        prefix.pop();
    }
}

/// All `α ∈ ℤ₊ⁿ` with total degree at most `degree` and `⟨α, λ⟩ = 0`,
/// including the zero vector, sorted by increasing degree then descending
/// lexicographic order.
pub fn brute_force_kernel(weights: &[i64], degree: u32) -> Vec<ExpVec> {
    let mut out = Vec::new();
    enumerate(weights, i64::from(degree), &mut Vec::with_capacity(weights.len()), &mut out);
    out.sort_by(degree_order);
    out
}

/// Nonzero elements of `solutions` not componentwise above another nonzero
/// element. `solutions` must be closed downward in the sense that the
/// minimal elements below any member are members too; the brute-force output
/// up to a degree bound has this property.
pub fn minimal_elements(solutions: &[ExpVec]) -> Vec<ExpVec> {
    let mut sorted: Vec<&ExpVec> = solutions.iter().filter(|a| !a.is_zero()).collect();
    sorted.sort_by(|a, b| degree_order(a, b));
    let mut minimal: Vec<ExpVec> = Vec::new();
    for a in sorted {
        if !minimal.iter().any(|m| m.le_componentwise(a)) {
            minimal.push(a.clone());
        }
    }
    minimal
}

/// Elements of `targets` that are not ℕ-combinations of `gens`.
///
/// Uses the fact that `α = Σ cₖ gₖ` iff `α = 0` or `α − g` is representable
/// for some `g ≤ α`; targets are processed by increasing degree and every
/// difference of two weight-zero vectors is weight-zero, so it is already
/// classified when `targets` is a full brute-force solution set.
pub fn unrepresentable(targets: &[ExpVec], gens: &[ExpVec]) -> Vec<ExpVec> {
    let mut sorted: Vec<&ExpVec> = targets.iter().collect();
    sorted.sort_by(|a, b| degree_order(a, b));
    let mut representable: HashSet<ExpVec> = HashSet::new();
    let mut missing = Vec::new();
    for a in sorted {
        let ok = a.is_zero()
            || gens
                .iter()
                .filter(|g| !g.is_zero() && g.le_componentwise(a))
                .any(|g| representable.contains(&(a - g)));
        if ok {
            representable.insert(a.clone());
        } else {
            missing.push(a.clone());
        }
    }
    missing
}
