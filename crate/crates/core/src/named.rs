//! Small lattices that show up in every worked example.

use crate::lattice::FiniteLattice;

fn build(name: &str, elems: &[&str], covers: &[(&str, &str)]) -> FiniteLattice {
    let elems = elems.iter().map(|s| s.to_string()).collect();
    FiniteLattice::from_covers(name, elems, covers).expect("named lattice is valid")
}

/// The `n`-element chain. `C3` is labelled `0 < m < 1`.
pub fn chain(n: usize) -> FiniteLattice {
    assert!(n >= 1, "chain needs at least one element");
    let labels: Vec<String> = match n {
        1 => vec!["0".into()],
        2 => vec!["0".into(), "1".into()],
        3 => vec!["0".into(), "m".into(), "1".into()],
        _ => std::iter::once("0".to_string())
            .chain((1..n - 1).map(|i| format!("m{i}")))
            .chain(std::iter::once("1".to_string()))
            .collect(),
    };
    let covers: Vec<(String, String)> =
        labels.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
    FiniteLattice::from_covers(format!("C{n}"), labels, &covers).expect("chain is a lattice")
}

/// The Boolean lattice of subsets of a `k`-element set (`k <= 6`).
pub fn boolean(k: usize) -> FiniteLattice {
    assert!(k <= 6);
    let letters = ['a', 'b', 'c', 'd', 'e', 'f'];
    let n = 1usize << k;
    let label = |mask: usize| -> String {
        if mask == 0 {
            "0".into()
        } else if mask == n - 1 && k > 1 {
            "1".into()
        } else {
            (0..k).filter(|i| mask >> i & 1 == 1).map(|i| letters[i]).collect()
        }
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|m| (m.count_ones(), *m));
    let labels: Vec<String> = order.iter().map(|&m| label(m)).collect();
    let mut covers = Vec::new();
    for &m in &order {
        for i in 0..k {
            if m >> i & 1 == 0 {
                covers.push((label(m), label(m | 1 << i)));
            }
        }
    }
    FiniteLattice::from_covers(format!("B{k}"), labels, &covers).expect("boolean lattice")
}

/// The pentagon: `0 < a < c < 1`, `0 < b < 1`.
pub fn n5() -> FiniteLattice {
    build(
        "N5",
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )
}

/// The diamond: three atoms that are also coatoms.
pub fn m3() -> FiniteLattice {
    build(
        "M3",
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )
}

/// Two 2-element chains glued at bottom and top: `0 < a < b < 1`, `0 < c < d < 1`.
pub fn hexagon() -> FiniteLattice {
    build(
        "hexagon",
        &["0", "a", "b", "c", "d", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "d"), ("d", "1")],
    )
}

/// `C2..C5, B2, B3, N5, M3, hexagon`.
pub fn all() -> Vec<FiniteLattice> {
    let mut v: Vec<FiniteLattice> = (2..=5).map(chain).collect();
    v.extend([boolean(2), boolean(3), n5(), m3(), hexagon()]);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let sizes: Vec<(String, usize)> = all().iter().map(|l| (l.name().to_string(), l.n())).collect();
        let expect = [("C2", 2), ("C3", 3), ("C4", 4), ("C5", 5), ("B2", 4), ("B3", 8), ("N5", 5), ("M3", 5), ("hexagon", 6)];
        for ((got, n), (name, m)) in sizes.iter().zip(expect) {
            assert_eq!((got.as_str(), *n), (name, m));
        }
    }

    #[test]
    fn boolean_cube_is_ranked() {
        let b3 = boolean(3);
        assert_eq!(b3.covers().len(), 12);
        assert_eq!(b3.height(b3.top()), 3);
        assert_eq!(b3.names()[b3.join(1, 2)], "ab");
    }
}
