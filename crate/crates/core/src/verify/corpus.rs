//! Lattices up to isomorphism, plus the named ones.
//!
//! A lattice with `n >= 2` elements is a bounded poset: its elements other
//! than bottom and top form an arbitrary poset `P` with `n - 2` elements such
//! that `P` plus a new bottom and top is a lattice. Posets are grown one
//! maximal element at a time (every poset arises from a smaller one by adding
//! a maximal element above a down-closed set) and deduplicated by a canonical
//! code.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::named;
use crate::order::{subset, Subset};

pub const MAX_CORPUS_ELEMENTS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Enumerated,
    Named,
    Loaded,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub lattice: FiniteLattice,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn push(&mut self, lattice: FiniteLattice, provenance: Provenance) {
        self.entries.push(CorpusEntry { lattice, provenance });
    }

    pub fn lattices(&self) -> impl Iterator<Item = &FiniteLattice> {
        self.entries.iter().map(|e| &e.lattice)
    }

    pub fn enumerated(&self) -> impl Iterator<Item = &FiniteLattice> {
        self.entries.iter().filter(|e| e.provenance == Provenance::Enumerated).map(|e| &e.lattice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Every lattice with at most `nmax` elements up to isomorphism, followed by
/// the named lattices.
pub fn generate_corpus(nmax: usize) -> Result<Corpus> {
    if !(1..=MAX_CORPUS_ELEMENTS).contains(&nmax) {
        return Err(Error::SizeBound { size: nmax, bound: MAX_CORPUS_ELEMENTS });
    }
    let mut corpus = Corpus::default();
    for n in 1..=nmax {
        for lat in lattices_of_size(n) {
            corpus.push(lat, Provenance::Enumerated);
        }
    }
    for lat in named::all() {
        corpus.push(lat, Provenance::Named);
    }
    Ok(corpus)
}

/// Lattices with exactly `n` elements up to isomorphism, named `L{n}.{i}`.
pub fn lattices_of_size(n: usize) -> Vec<FiniteLattice> {
    assert!((1..=MAX_CORPUS_ELEMENTS).contains(&n));
    if n == 1 {
        return vec![named::chain(1).with_name("L1.0")];
    }
    let k = n - 2;
    let mut out = Vec::new();
    for middle in posets_up_to_isomorphism(k) {
        // bottom = 0, middle = 1..=k, top = n-1
        let mut up = Vec::with_capacity(n);
        up.push(subset(n, 0..n));
        for row in &middle {
            let mut r = subset(n, row.ones().map(|y| y + 1));
            r.insert(n - 1);
            up.push(r);
        }
        up.push(subset(n, [n - 1]));
        let mut labels = vec!["0".to_string()];
        labels.extend((0..k).map(element_label));
        labels.push("1".to_string());
        let name = format!("L{n}.{}", out.len());
        if let Ok(lat) = FiniteLattice::from_up_rows(name, labels, up) {
            out.push(lat);
        }
    }
    out
}

fn element_label(i: usize) -> String {
    ((b'a' + i as u8) as char).to_string()
}

/// All posets on `k <= 8` elements up to isomorphism, as `x <= y` rows,
/// sorted by canonical code.
pub fn posets_up_to_isomorphism(k: usize) -> Vec<Vec<Subset>> {
    assert!(k <= MAX_CORPUS_ELEMENTS);
    let mut level: BTreeMap<u64, Vec<Subset>> = BTreeMap::from([(0, Vec::new())]);
    for size in 0..k {
        let mut next = BTreeMap::new();
        for poset in level.values() {
            for below in down_closed_subsets(poset, size) {
                let grown = add_maximal(poset, size, &below);
                next.entry(canonical_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

fn down_closed_subsets(up: &[Subset], size: usize) -> Vec<Subset> {
    (0u32..1 << size)
        .map(|mask| subset(size, (0..size).filter(|i| mask >> i & 1 == 1)))
        // x in s and y <= x imply y in s
        .filter(|s| s.ones().all(|x| (0..size).all(|y| !up[y].contains(x) || s.contains(y))))
        .collect()
}

fn add_maximal(up: &[Subset], size: usize, below: &Subset) -> Vec<Subset> {
    let n = size + 1;
    let mut rows: Vec<Subset> = up
        .iter()
        .enumerate()
        .map(|(y, r)| {
            let mut r2 = subset(n, r.ones());
            if below.contains(y) {
                r2.insert(size);
            }
            r2
        })
        .collect();
    rows.push(subset(n, [size]));
    rows
}

/// Smallest strict-order code over all orderings that sort elements by
/// `(|down-set|, |up-set|)`. Such orderings are linear extensions, so the
/// code only needs the upper triangle, and isomorphic posets share it.
pub fn canonical_code(up: &[Subset]) -> u64 {
    let n = up.len();
    assert!(n <= MAX_CORPUS_ELEMENTS);
    let below = |x: usize| (0..n).filter(|&y| up[y].contains(x)).count();
    let mut keyed: Vec<((usize, usize), usize)> = (0..n).map(|x| ((below(x), up[x].count_ones(..)), x)).collect();
    keyed.sort();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut last = None;
    for (key, x) in keyed {
        if last != Some(key) {
            groups.push(Vec::new());
            last = Some(key);
        }
        groups.last_mut().expect("group").push(x);
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    search_orders(up, &mut groups, 0, &mut order, &mut best);
    best
}

fn search_orders(up: &[Subset], groups: &mut [Vec<usize>], g: usize, order: &mut Vec<usize>, best: &mut u64) {
    if g == groups.len() {
        let n = order.len();
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if up[order[i]].contains(order[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(code);
        return;
    }
    permute_group(up, groups, g, 0, order, best);
}

fn permute_group(up: &[Subset], groups: &mut [Vec<usize>], g: usize, i: usize, order: &mut Vec<usize>, best: &mut u64) {
    let len = groups[g].len();
    if i == len {
        let start = order.len();
        order.extend(groups[g].iter().copied());
        search_orders(up, groups, g + 1, order, best);
        order.truncate(start);
        return;
    }
    for j in i..len {
        groups[g].swap(i, j);
        permute_group(up, groups, g, i + 1, order, best);
        groups[g].swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn poset_counts() {
        // unlabelled posets on 0..=5 elements
        let counts: Vec<usize> = (0..=5).map(|k| posets_up_to_isomorphism(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn small_lattice_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| lattices_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn five_element_lattices_include_pentagon_and_diamond() {
        let five = lattices_of_size(5);
        assert!(five.iter().any(|l| are_isomorphic(l, &named::n5()).is_some()));
        assert!(five.iter().any(|l| are_isomorphic(l, &named::m3()).is_some()));
    }

    #[test]
    fn corpus_bounds() {
        assert_eq!(generate_corpus(0).unwrap_err(), Error::SizeBound { size: 0, bound: 8 });
        assert!(generate_corpus(9).is_err());
        let c = generate_corpus(1).unwrap();
        assert_eq!(c.enumerated().count(), 1);
        assert_eq!(c.enumerated().next().unwrap().n(), 1);
    }
}
