//! Checks against oracles that share no code path with the library: naive
//! pair enumeration, recursive combination listing, exhaustive clique search
//! and dense symmetric eigendecomposition.

use nalgebra::{DMatrix, SymmetricEigen};

use cyclepow::{
    brute_force_max, circulant_eigenvalue, clique_number, closed_form, count_maximizers,
    exact_max, lambda2, spectral_identity_check, spectrum, GraphSpec, VertexSubset,
};

fn g(n: usize, s: usize) -> GraphSpec {
    GraphSpec::new(n, s).unwrap()
}

/// Adjacency from the bare definition: cyclic distance in `1..=s`.
fn naive_adjacent(n: usize, s: usize, u: usize, v: usize) -> bool {
    let d = u.abs_diff(v);
    let d = d.min(n - d);
    d >= 1 && d <= s
}

fn naive_edges(n: usize, s: usize, members: &[usize]) -> u64 {
    let mut e = 0;
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if naive_adjacent(n, s, u, v) {
                e += 1;
            }
        }
    }
    e
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// (maximum, number of maximisers) over all k-subsets.
fn naive_max(n: usize, s: usize, k: usize) -> (u64, u64) {
    let mut best = 0;
    let mut count = 0;
    for c in combinations(n, k) {
        let e = naive_edges(n, s, &c);
        if e > best {
            best = e;
            count = 1;
        } else if e == best {
            count += 1;
        }
    }
    (best, count)
}

fn dense_adjacency(n: usize, s: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |i, j| naive_adjacent(n, s, i, j) as u8 as f64)
}

fn dense_eigenvalues(n: usize, s: usize) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(dense_adjacency(n, s)).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    ev
}

#[test]
fn distance_three_is_not_an_edge_in_c6_squared() {
    assert!(!naive_adjacent(6, 2, 0, 3));
    assert!(!g(6, 2).adjacent(0, 3));
}

#[test]
fn edge_count_matches_pair_enumeration() {
    let spec = g(9, 2);
    let u = VertexSubset::from_members(9, [1, 2, 3, 4]);
    assert_eq!(naive_edges(9, 2, &[1, 2, 3, 4]), 5);
    assert_eq!(spec.edge_count(&u).unwrap(), 5);

    for n in 3..=12 {
        for s in 1..n {
            let spec = g(n, s);
            for k in 0..=n.min(5) {
                for c in combinations(n, k) {
                    let u = VertexSubset::from_members(n, c.iter().copied());
                    assert_eq!(spec.edge_count(&u).unwrap(), naive_edges(n, s, &c), "n={n} s={s} {c:?}");
                }
            }
        }
    }
}

#[test]
fn exact_values_match_enumeration() {
    // every k-subset of C_9^2 with k = 4: 126 subsets
    assert_eq!(combinations(9, 4).len(), 126);
    assert_eq!(naive_max(9, 2, 4).0, 5);
    assert_eq!(closed_form(&g(9, 2), 4).unwrap(), 5);
    assert_eq!(exact_max(&g(9, 2), 4).unwrap().value, 5);

    assert_eq!(combinations(6, 3).len(), 20);
    assert_eq!(naive_max(6, 2, 3), (3, 8));
    assert_eq!(naive_edges(6, 2, &[1, 3, 5]), 3);
    assert_eq!(naive_max(7, 1, 2), (1, 7));
}

#[test]
fn oracle_agrees_with_enumeration_on_small_grid() {
    for n in 3..=10 {
        for s in 1..n {
            for k in 1..=n {
                let spec = g(n, s);
                let (best, count) = naive_max(n, s, k);
                assert_eq!(brute_force_max(&spec, k, true).unwrap().max_edges, best);
                assert_eq!(brute_force_max(&spec, k, false).unwrap().max_edges, best);
                assert_eq!(count_maximizers(&spec, k).unwrap(), count, "n={n} s={s} k={k}");
            }
        }
    }
}

#[test]
fn witness_is_lexicographically_smallest_maximiser() {
    for (n, s, k) in [(6, 2, 3), (9, 2, 4), (10, 3, 5), (11, 4, 6), (8, 1, 3)] {
        let (best, _) = naive_max(n, s, k);
        let first = combinations(n, k)
            .into_iter()
            .find(|c| naive_edges(n, s, c) == best)
            .unwrap();
        let r = brute_force_max(&g(n, s), k, false).unwrap();
        assert_eq!(r.witness.to_vec(), first);
        // combinations starting with 0 come first, so the pinned search agrees
        let r = brute_force_max(&g(n, s), k, true).unwrap();
        assert_eq!(r.witness.to_vec(), first);
    }
}

fn naive_clique_number(n: usize, s: usize) -> usize {
    (1..=n)
        .rev()
        .find(|&k| {
            combinations(n, k).iter().any(|c| {
                c.iter()
                    .enumerate()
                    .all(|(i, &u)| c[i + 1..].iter().all(|&v| naive_adjacent(n, s, u, v)))
            })
        })
        .unwrap()
}

#[test]
fn clique_number_matches_exhaustive_search() {
    assert_eq!(naive_clique_number(8, 3), 4);
    assert_eq!(naive_clique_number(7, 3), 7);
    assert_eq!(naive_clique_number(10, 3), 4);
    for n in 3..=12 {
        for s in 1..n {
            assert_eq!(clique_number(&g(n, s)), naive_clique_number(n, s), "n={n} s={s}");
        }
    }
}

#[test]
fn spectrum_matches_dense_eigendecomposition() {
    let ev = dense_eigenvalues(4, 1);
    assert!((ev[3] + 2.0).abs() < 1e-9);
    assert!((circulant_eigenvalue(&g(4, 1), 2) + 2.0).abs() < 1e-12);

    // C_6^2: {4, 0, 0, 0, -2, -2}
    let ev = dense_eigenvalues(6, 2);
    for (a, b) in ev.iter().zip([4.0, 0.0, 0.0, 0.0, -2.0, -2.0]) {
        assert!((a - b).abs() < 1e-9, "{ev:?}");
    }
    assert!(circulant_eigenvalue(&g(6, 2), 3).abs() < 1e-12);

    for n in 3..=24 {
        for s in 1..n {
            let spec = g(n, s);
            let dense = dense_eigenvalues(n, s);
            let mut analytic = spectrum(&spec).eigenvalues;
            analytic.sort_by(|a, b| b.partial_cmp(a).unwrap());
            for (a, d) in analytic.iter().zip(&dense) {
                assert!((a - d).abs() < 1e-9, "n={n} s={s}: {analytic:?} vs {dense:?}");
            }
            assert!((lambda2(&spec) - dense[1]).abs() < 1e-9, "n={n} s={s}");
        }
    }
}

#[test]
fn eigenvalues_match_dirichlet_kernel() {
    use std::f64::consts::PI;
    for n in 3..=60 {
        for s in 1..(n - 1) / 2 + 1 {
            let spec = g(n, s);
            if spec.is_complete() && 2 * s + 1 != n {
                continue;
            }
            for j in 1..n {
                let x = PI * j as f64 / n as f64;
                let dirichlet = ((2 * s + 1) as f64 * x).sin() / x.sin() - 1.0;
                let v = circulant_eigenvalue(&spec, j);
                assert!(
                    (v - dirichlet).abs() <= 1e-9 * v.abs().max(1.0),
                    "n={n} s={s} j={j}: {v} vs {dirichlet}"
                );
            }
        }
    }
}

#[test]
fn identity_check_against_dense_coefficients() {
    // Σλc² computed through the dense eigenbasis must equal 2e(U) too.
    for (n, s, members) in [
        (8, 2, vec![0, 1, 2]),
        (6, 2, vec![1, 3, 5]),
        (5, 2, vec![0, 1, 2, 3, 4]),
        (12, 3, vec![0, 2, 3, 7, 11]),
    ] {
        let eig = SymmetricEigen::new(dense_adjacency(n, s));
        let chi = nalgebra::DVector::from_fn(n, |i, _| members.contains(&i) as u8 as f64);
        let coeffs = eig.eigenvectors.transpose() * &chi;
        let norm: f64 = coeffs.iter().map(|c| c * c).sum();
        let weighted: f64 = coeffs.iter().zip(eig.eigenvalues.iter()).map(|(c, l)| l * c * c).sum();
        assert!((norm - members.len() as f64).abs() < 1e-9);
        assert!((weighted - 2.0 * naive_edges(n, s, &members) as f64).abs() < 1e-9);

        let u = VertexSubset::from_members(n, members.iter().copied());
        assert!(spectral_identity_check(&g(n, s), &u).unwrap());
    }
}
