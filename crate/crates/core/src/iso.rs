//! Order-isomorphism testing between finite orders.

use crate::order::FiniteOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Signature {
    below: usize,
    above: usize,
    height: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn signatures<P: FiniteOrder + ?Sized>(p: &P) -> Vec<Signature> {
    let n = p.size();
    let mut sig: Vec<Signature> = (0..n)
        .map(|x| Signature {
            below: (0..n).filter(|&y| p.le(y, x)).count(),
            above: (0..n).filter(|&y| p.le(x, y)).count(),
            height: 0,
            lower_covers: 0,
            upper_covers: 0,
        })
        .collect();
    let mut by_below: Vec<usize> = (0..n).collect();
    by_below.sort_by_key(|&x| sig[x].below);
    for &x in &by_below {
        for y in 0..n {
            if p.covers_pair(y, x) {
                sig[x].lower_covers += 1;
                sig[y].upper_covers += 1;
                sig[x].height = sig[x].height.max(sig[y].height + 1);
            }
        }
    }
    sig
}

/// Finds an order-isomorphism from `a` to `b`, returned as the image of each
/// element of `a`. Candidates are restricted by per-element invariants and
/// the final map is checked against both full order matrices.
pub fn are_isomorphic<A, B>(a: &A, b: &B) -> Option<Vec<usize>>
where
    A: FiniteOrder + ?Sized,
    B: FiniteOrder + ?Sized,
{
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let sa = signatures(a);
    let sb = signatures(b);
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }

    // Visit `a` in a linear extension so each step is checked against
    // already placed elements below it.
    let mut seq: Vec<usize> = (0..n).collect();
    seq.sort_by_key(|&x| (sa[x].below, sa[x]));
    let candidates: Vec<Vec<usize>> =
        seq.iter().map(|&x| (0..n).filter(|&y| sb[y] == sa[x]).collect()).collect();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !extend(a, b, &seq, &candidates, 0, &mut map, &mut used) {
        return None;
    }
    let ok = (0..n).all(|x| (0..n).all(|y| a.le(x, y) == b.le(map[x], map[y])));
    ok.then_some(map)
}

fn extend<A, B>(
    a: &A,
    b: &B,
    seq: &[usize],
    candidates: &[Vec<usize>],
    pos: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool
where
    A: FiniteOrder + ?Sized,
    B: FiniteOrder + ?Sized,
{
    if pos == seq.len() {
        return true;
    }
    let x = seq[pos];
    for &c in &candidates[pos] {
        if used[c] {
            continue;
        }
        let consistent = seq[..pos].iter().all(|&y| {
            let fy = map[y];
            a.le(x, y) == b.le(c, fy) && a.le(y, x) == b.le(fy, c)
        });
        if !consistent {
            continue;
        }
        map[x] = c;
        used[c] = true;
        if extend(a, b, seq, candidates, pos + 1, map, used) {
            return true;
        }
        used[c] = false;
        map[x] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn brute_force_isomorphic<A: FiniteOrder, B: FiniteOrder>(a: &A, b: &B) -> bool {
        fn permute(k: usize, perm: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
            if k == perm.len() {
                return f(perm);
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                if permute(k + 1, perm, f) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        let n = a.size();
        if n != b.size() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        permute(0, &mut perm, &mut |p| {
            (0..n).all(|x| (0..n).all(|y| a.le(x, y) == b.le(p[x], p[y])))
        })
    }

    #[test]
    fn chain_is_isomorphic_to_itself() {
        let c3 = named::chain(3);
        assert_eq!(are_isomorphic(&c3, &c3), Some(vec![0, 1, 2]));
    }

    #[test]
    fn chain_and_square_differ() {
        assert!(are_isomorphic(&named::chain(4), &named::boolean(2)).is_none());
    }

    #[test]
    fn pentagon_and_diamond_differ() {
        assert!(are_isomorphic(&named::n5(), &named::m3()).is_none());
        assert!(!brute_force_isomorphic(&named::n5(), &named::m3()));
    }

    #[test]
    fn relabelled_pentagon_is_found() {
        let n5 = named::n5();
        let other = crate::FiniteLattice::from_covers(
            "N5'",
            ["t", "x", "y", "z", "b"].iter().map(|s| s.to_string()).collect(),
            &[("b", "y"), ("y", "t"), ("b", "z"), ("z", "x"), ("x", "t")],
        )
        .unwrap();
        let map = are_isomorphic(&n5, &other).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(n5.leq(x, y), other.leq(map[x], map[y]));
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_named_pairs() {
        let all = named::all();
        for a in &all {
            for b in &all {
                if a.n() == b.n() && a.n() <= 6 {
                    assert_eq!(are_isomorphic(a, b).is_some(), brute_force_isomorphic(a, b), "{} {}", a.name(), b.name());
                }
            }
        }
    }
}
