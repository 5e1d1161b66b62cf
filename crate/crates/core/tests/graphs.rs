use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use quasihom::arith::Rational;
use quasihom::conditions::{is_is2, SupportSet};
use quasihom::enumerate::chain_fractions;
use quasihom::graphs::{
    enumerate_types, is_fcc, solve_normalized, solve_weights, validate_even_cycles, CycleValidity,
    KappaGraph, SolveOutcome,
};

fn all_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(n as u32)).map(move |mut x| {
        (0..n)
            .map(|_| {
                let d = x % n;
                x /= n;
                d
            })
            .collect()
    })
}

fn all_exponents(n: usize, lo: u64, hi: u64) -> impl Iterator<Item = Vec<u64>> {
    let span = hi - lo + 1;
    (0..span.pow(n as u32)).map(move |mut x| {
        (0..n)
            .map(|_| {
                let d = x % span;
                x /= span;
                lo + d
            })
            .collect()
    })
}

fn q(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Gaussian elimination on `a_j w_j + w_{κ(j)} = 1`; `None` when singular.
fn gauss(kappa: &[usize], a: &[u64]) -> Option<Vec<Rational>> {
    let n = kappa.len();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut row = vec![Rational::zero(); n + 1];
            row[j] += q(a[j]);
            row[kappa[j]] += Rational::one();
            row[n] = Rational::one();
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

#[test]
fn solver_matches_gaussian_elimination() {
    for n in 1..=4 {
        for t in enumerate_types(n).unwrap() {
            for a in all_exponents(n, 1, if n == 4 { 5 } else { 8 }) {
                let g = KappaGraph::new(t.representative.clone(), a.clone()).unwrap();
                match validate_even_cycles(&g) {
                    CycleValidity::Unique => {
                        let w = solve_normalized(&g).unwrap();
                        assert_eq!(Some(w.clone()), gauss(&t.representative, &a), "{t} {a:?}");
                        for j in 0..n {
                            assert_eq!(q(a[j]) * &w[j] + &w[t.representative[j]], Rational::one());
                        }
                    }
                    CycleValidity::Family => {
                        assert_eq!(gauss(&t.representative, &a), None);
                        assert_eq!(solve_weights(&g).unwrap(), SolveOutcome::Family);
                    }
                    CycleValidity::Invalid => {
                        assert_eq!(solve_weights(&g).unwrap(), SolveOutcome::Invalid);
                        // The linear system may be solvable, but not inside (0, 1).
                        if let Some(w) = gauss(&t.representative, &a) {
                            assert!(w.iter().any(|x| *x <= Rational::zero() || *x >= Rational::one()));
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn five_vertex_equations_hold(t in 0usize..47, a in proptest::collection::vec(1u64..=8, 5)) {
        let rep = enumerate_types(5).unwrap()[t].representative.clone();
        let g = KappaGraph::new(rep.clone(), a.clone()).unwrap();
        if let Some(w) = solve_normalized(&g) {
            for j in 0..5 {
                prop_assert_eq!(q(a[j]) * &w[j] + &w[rep[j]], Rational::one());
            }
        }
    }
}

#[test]
fn cycle_milnor_number_is_exponent_product() {
    for l in 2..=5 {
        let kappa: Vec<usize> = (0..l).map(|j| (j + 1) % l).collect();
        for a in all_exponents(l, 2, 6) {
            let g = KappaGraph::new(kappa.clone(), a.clone()).unwrap();
            let SolveOutcome::System(ws) = solve_weights(&g).unwrap() else { panic!("{a:?}") };
            assert_eq!(ws.milnor_number(), q(a.iter().product()), "{a:?}");
        }
    }
}

#[test]
fn chain_solutions_match_closed_forms() {
    for n in 1..=5 {
        for a in all_exponents(n, 2, 5) {
            let g = KappaGraph::chain(a.clone()).unwrap();
            assert_eq!(solve_normalized(&g).unwrap(), chain_fractions(&a).unwrap(), "{a:?}");
        }
    }
}

#[test]
fn fcc_iff_minimal_support_is_isolated() {
    for n in 1..=4 {
        for kappa in all_maps(n) {
            for a in all_exponents(n, 2, 3) {
                let g = KappaGraph::new(kappa.clone(), a).unwrap();
                let SolveOutcome::System(ws) = solve_weights(&g).unwrap() else { panic!() };
                let support = SupportSet::explicit(&ws, g.support()).unwrap();
                assert_eq!(is_fcc(&g), is_is2(&ws, &support).unwrap(), "{kappa:?}");
            }
        }
    }
}

/// Index sets `J` (1-based) with fewer than `|J|` indices `k` such that some
/// monomial `x_j^2 x_{κ(j)}` is `x_k` times a monomial in the variables of `J`.
fn failing_sets(kappa: &[usize]) -> Vec<BTreeSet<usize>> {
    let n = kappa.len();
    let mut out: Vec<BTreeSet<usize>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let in_j = |i: usize| mask >> i & 1 == 1;
        let good = (0..n)
            .filter(|&k| (0..n).any(|j| (k == j && in_j(j) && in_j(kappa[j])) || (k == kappa[j] && k != j && in_j(j))))
            .count();
        if good < mask.count_ones() as usize {
            out.push((0..n).filter(|&i| in_j(i)).map(|i| i + 1).collect());
        }
    }
    // Keep the inclusion-minimal ones.
    let minimal: Vec<BTreeSet<usize>> =
        out.iter().filter(|s| !out.iter().any(|t| t != *s && t.is_subset(s))).cloned().collect();
    minimal
}

#[test]
fn labels_carry_the_annotated_failing_sets() {
    let expected: &[(usize, &str, &[&[usize]])] = &[
        (3, "III", &[&[2, 3]]),
        (3, "VI", &[&[2, 3]]),
        (4, "V", &[&[3, 4]]),
        (4, "VIII", &[&[2, 4]]),
        (4, "XI", &[&[3, 4]]),
        (4, "XII", &[&[2, 4]]),
        (4, "XIII", &[&[2, 3], &[2, 4], &[3, 4]]),
        (4, "XV", &[&[2, 4]]),
        (4, "XVI", &[&[1, 3]]),
        (4, "XVII", &[&[1, 3], &[2, 4]]),
        (4, "XIX", &[&[2, 3], &[2, 4], &[3, 4]]),
    ];
    for n in 2..=4 {
        for t in enumerate_types(n).unwrap() {
            let want: Vec<BTreeSet<usize>> = expected
                .iter()
                .filter(|(m, l, _)| *m == n && *l == t.label)
                .flat_map(|(_, _, sets)| sets.iter().map(|s| s.iter().copied().collect()))
                .collect();
            assert_eq!(failing_sets(&t.representative), want, "n = {n}, type {}", t.label);
            assert_eq!(t.is_fcc(), want.is_empty(), "type {}", t.label);
        }
    }
}
