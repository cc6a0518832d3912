use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::laurent::ExpVec;

/// Minimal generators of the monoid `{α ∈ ℤ₊ⁿ : ⟨α, λ⟩ = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    pub gens: Vec<ExpVec>,
}

impl HilbertBasis {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.gens.iter().map(ExpVec::total_degree).max()
    }
}

/// Increasing total degree, ties broken by descending lexicographic order.
pub fn degree_order(a: &ExpVec, b: &ExpVec) -> Ordering {
    a.total_degree().cmp(&b.total_degree()).then_with(|| b.cmp(a))
}

/// Completion from the unit vectors.
///
/// Works level by level in total degree. A vector of weight `v ≠ 0` is only
/// extended by `eⱼ` with `v·λⱼ < 0`, which moves the weight toward zero.
/// Weight-zero vectors not dominating an earlier solution are recorded, and
/// any vector dominating a recorded solution is dropped.
pub fn hilbert_basis(weights: &[i64]) -> HilbertBasis {
    let n = weights.len();
    let mut solutions: Vec<ExpVec> = Vec::new();
    let mut frontier: BTreeSet<ExpVec> = (0..n).map(|i| ExpVec::unit(n, i)).collect();
    let dominates_solution =
        |a: &ExpVec, sols: &[ExpVec]| sols.iter().any(|s| s.le_componentwise(a));

    while !frontier.is_empty() {
        let mut pending = Vec::new();
        for a in &frontier {
            if dominates_solution(a, &solutions) {
                continue;
            }
            if a.dot(weights) == 0 {
                // Same-degree vectors cannot dominate one another.
                solutions.push(a.clone());
            } else {
                pending.push(a);
            }
        }
        let mut next = BTreeSet::new();
        for a in pending {
            let v = a.dot(weights);
            for (j, &l) in weights.iter().enumerate() {
                if v * l >= 0 {
                    continue;
                }
                let b = a + &ExpVec::unit(n, j);
                if !dominates_solution(&b, &solutions) {
                    next.insert(b);
                }
            }
        }
        frontier = next;
    }
    solutions.sort_by(degree_order);
    HilbertBasis { gens: solutions }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(w: &[i64]) -> Vec<Vec<i64>> {
        hilbert_basis(w).gens.iter().map(|g| g.as_slice().to_vec()).collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(gens(&[1, -1]), vec![vec![1, 1]]);
        assert_eq!(gens(&[2, -3]), vec![vec![3, 2]]);
        assert!(gens(&[1, 1]).is_empty());
        assert_eq!(gens(&[1, -1, -1]), vec![vec![1, 1, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn zero_weights_give_unit_vectors() {
        assert_eq!(gens(&[0, 0]), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(gens(&[0, 2, -2]), vec![vec![1, 0, 0], vec![0, 1, 1]]);
    }

    #[test]
    fn classic_two_three_split() {
        // 2a = b + 2c
        assert_eq!(gens(&[2, -1, -2]), vec![vec![1, 0, 1], vec![1, 2, 0]]);
    }

    #[test]
    fn degree_order_ties() {
        let a = ExpVec::new(vec![1, 0, 1]);
        let b = ExpVec::new(vec![1, 1, 0]);
        assert_eq!(degree_order(&b, &a), Ordering::Less);
        assert_eq!(degree_order(&ExpVec::new(vec![0, 0, 0]), &a), Ordering::Less);
    }
}
