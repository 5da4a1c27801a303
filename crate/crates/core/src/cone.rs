//! Exact membership test for a finitely generated rational cone.
//!
//! Decides whether `target = sum_j lambda_j g_j` has a solution with all
//! `lambda_j >= 0` by running phase I of the simplex method over `Q` with
//! Bland's rule, so it always terminates and never rounds.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Nonnegative coefficients expressing `target` in `generators`, or `None`
/// if `target` lies outside their cone. Every generator and the target must
/// have the same length.
pub fn cone_membership(generators: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let rows = target.len();
    let cols = generators.len();
    if target.iter().all(Zero::is_zero) {
        return Some(vec![Q::zero(); cols]);
    }
    if cols == 0 {
        return None;
    }
    assert!(generators.iter().all(|g| g.len() == rows));

    // Tableau columns: generators, then one artificial per row, then rhs.
    let width = cols + rows + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<Q>> = (0..rows)
        .map(|i| {
            let sign = if target[i].is_negative() { -Q::one() } else { Q::one() };
            let mut row = vec![Q::zero(); width];
            for (j, g) in generators.iter().enumerate() {
                row[j] = &g[i] * &sign;
            }
            row[cols + i] = Q::one();
            row[rhs] = &target[i] * &sign;
            row
        })
        .collect();
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    // Reduced costs of the phase-I objective `min sum(artificials)`.
    let mut cost = vec![Q::zero(); width];
    for row in &t {
        for j in 0..cols {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    while let Some(enter) = (0..cols + rows).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Q)> = None;
        for (i, row) in t.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase I is bounded below by zero, so an entering column always has a pivot row.
        let (pivot_row, _) = leave.expect("phase-I objective is bounded");

        let p = t[pivot_row][enter].clone();
        for x in t[pivot_row].iter_mut() {
            *x /= &p;
        }
        let pivot = t[pivot_row].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == pivot_row || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, y) in cost.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        basis[pivot_row] = enter;
    }

    // Optimal phase-I value is -cost[rhs]; feasible iff it is zero.
    if !cost[rhs].is_zero() {
        return None;
    }
    let mut lambda = vec![Q::zero(); cols];
    for (i, &b) in basis.iter().enumerate() {
        if b < cols {
            lambda[b] = t[i][rhs].clone();
        }
    }
    Some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ints, ratio};
    use proptest::prelude::*;

    fn combine(generators: &[Vec<Q>], lambda: &[Q]) -> Vec<Q> {
        let n = generators.first().map_or(0, Vec::len);
        let mut out = vec![Q::zero(); n];
        for (g, l) in generators.iter().zip(lambda) {
            for (o, x) in out.iter_mut().zip(g) {
                *o += l * x;
            }
        }
        out
    }

    #[test]
    fn orthant() {
        let gens = vec![ints(&[1, 0]), ints(&[0, 1])];
        assert_eq!(cone_membership(&gens, &ints(&[40, 28])), Some(ints(&[40, 28])));
        assert_eq!(cone_membership(&gens, &ints(&[-8, 40])), None);
        assert_eq!(cone_membership(&gens, &ints(&[0, 0])), Some(ints(&[0, 0])));
    }

    #[test]
    fn skew_cone_with_rational_coefficients() {
        // cone over (1, 1) and (1, -1)
        let gens = vec![ints(&[1, 1]), ints(&[1, -1])];
        let l = cone_membership(&gens, &ints(&[3, 0])).unwrap();
        assert_eq!(l, vec![ratio(3, 2), ratio(3, 2)]);
        assert!(cone_membership(&gens, &ints(&[0, 1])).is_none());
        assert!(cone_membership(&gens, &ints(&[-1, 0])).is_none());
    }

    #[test]
    fn redundant_and_degenerate_generators() {
        let gens = vec![ints(&[1, 0, 0]), ints(&[1, 0, 0]), ints(&[0, 0, 0]), ints(&[1, 1, 0])];
        let target = ints(&[2, 1, 0]);
        let l = cone_membership(&gens, &target).unwrap();
        assert_eq!(combine(&gens, &l), target);
        assert!(cone_membership(&gens, &ints(&[0, 0, 1])).is_none());
        assert!(cone_membership(&[], &ints(&[1])).is_none());
    }

    fn small_gens() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<i64>)> {
        (1usize..6).prop_flat_map(|m| {
            (
                proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), m),
                proptest::collection::vec(0i64..=3, m),
            )
        })
    }

    proptest! {
        // Any nonnegative combination is found, and every witness recombines exactly.
        #[test]
        fn members_are_recognized((gens, lambda) in small_gens()) {
            let gens: Vec<Vec<Q>> = gens.iter().map(|g| ints(g)).collect();
            let lambda: Vec<Q> = ints(&lambda);
            let target = combine(&gens, &lambda);
            let found = cone_membership(&gens, &target);
            prop_assert!(found.is_some());
            let found = found.unwrap();
            prop_assert!(found.iter().all(|x| !x.is_negative()));
            prop_assert_eq!(combine(&gens, &found), target);
        }

        #[test]
        fn witnesses_are_sound((gens, _l) in small_gens(), target in proptest::collection::vec(-4i64..=4, 3)) {
            let gens: Vec<Vec<Q>> = gens.iter().map(|g| ints(g)).collect();
            let target = ints(&target);
            if let Some(found) = cone_membership(&gens, &target) {
                prop_assert!(found.iter().all(|x| !x.is_negative()));
                prop_assert_eq!(combine(&gens, &found), target);
            }
        }
    }

    #[test]
    fn separating_functional_rules_out_membership() {
        // every generator pairs to >= 0 with (1, 0, 1); the target pairs to -1
        let gens = vec![ints(&[1, 5, 0]), ints(&[0, -7, 1]), ints(&[2, 1, -1])];
        assert!(cone_membership(&gens, &[int(-1), int(3), int(0)]).is_none());
    }
}
