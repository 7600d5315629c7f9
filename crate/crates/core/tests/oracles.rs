//! Independent brute-force counterparts of the enumeration routines.

use std::collections::BTreeSet;

use tolattice::iso::are_isomorphic;
use tolattice::named;
use tolattice::verify::lattices_of_size;

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Number of lattices with `n` elements up to isomorphism: every strict
/// order on the `n - 2` middle elements that is naturally labelled (only
/// `i < j` pairs), bounded, and has all joins, keyed by its smallest
/// relabelled matrix.
fn count_lattices(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let k = n - 2;
    let upper: Vec<(usize, usize)> = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
    let perms = permutations(k);
    let mut seen = BTreeSet::new();
    for mask in 0u32..1 << upper.len() {
        let mut lt = vec![vec![false; k]; k];
        for (i, &(a, b)) in upper.iter().enumerate() {
            if mask >> i & 1 == 1 {
                lt[a][b] = true;
            }
        }
        let transitive = (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| !(lt[a][b] && lt[b][c]) || lt[a][c])));
        if !transitive {
            continue;
        }
        let le = |a: usize, b: usize| a == b || lt[a][b];
        // with an added top every pair has upper bounds; it has a least one
        // iff the middle upper bounds are empty or have a minimum
        let has_joins = (0..k).all(|a| {
            (0..k).all(|b| {
                let ub: Vec<usize> = (0..k).filter(|&c| le(a, c) && le(b, c)).collect();
                ub.is_empty() || ub.iter().any(|&m| ub.iter().all(|&c| le(m, c)))
            })
        });
        if !has_joins {
            continue;
        }
        let code = perms
            .iter()
            .map(|p| {
                (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).map(|(a, b)| lt[p[a]][p[b]]).collect::<Vec<bool>>()
            })
            .min()
            .expect("at least one permutation");
        seen.insert(code);
    }
    seen.len()
}

#[test]
fn lattice_counts_match_brute_force() {
    for n in 1..=7 {
        assert_eq!(lattices_of_size(n).len(), count_lattices(n), "n = {n}");
    }
}

#[test]
fn lattice_counts_known_values() {
    let counts: Vec<usize> = (1..=8).map(|n| lattices_of_size(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 5, 15, 53, 222]);
}

#[test]
fn enumerated_lattices_pairwise_non_isomorphic() {
    for n in 1..=7 {
        let ls = lattices_of_size(n);
        for i in 0..ls.len() {
            for j in i + 1..ls.len() {
                assert!(are_isomorphic(&ls[i], &ls[j]).is_none(), "{} and {}", ls[i].name(), ls[j].name());
            }
        }
    }
}

#[test]
fn named_lattices_appear_in_enumeration() {
    for lat in named::all() {
        let found = lattices_of_size(lat.n()).iter().any(|l| are_isomorphic(l, &lat).is_some());
        assert!(found, "{}", lat.name());
    }
}
