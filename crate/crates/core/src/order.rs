//! Finite partial orders stored as dense bit matrices.
//!
//! Elements are the indices `0..n`; labels only matter for presentation and
//! for resolving names in input files.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of the element indices of some finite structure.
pub type Subset = FixedBitSet;

/// Builds a subset of `0..n` from the given members.
pub fn subset(n: usize, members: impl IntoIterator<Item = usize>) -> Subset {
    let mut s = FixedBitSet::with_capacity(n);
    for m in members {
        s.insert(m);
    }
    s
}

pub fn full_subset(n: usize) -> Subset {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

/// Read-only view of a finite order, shared by posets and lattices.
pub trait FiniteOrder {
    fn size(&self) -> usize;
    fn le(&self, x: usize, y: usize) -> bool;
    fn label(&self, x: usize) -> &str;

    fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.le(x, y)
    }

    fn covers_pair(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && !(0..self.size()).any(|z| self.lt(x, z) && self.lt(z, y))
    }
}

/// Reflexive-transitive closure of a relation given as successor rows.
/// Rows are modified in place (Warshall).
pub(crate) fn transitive_closure(rows: &mut [FixedBitSet]) {
    let n = rows.len();
    for (i, row) in rows.iter_mut().enumerate() {
        row.insert(i);
    }
    for k in 0..n {
        let row_k = rows[k].clone();
        for row in rows.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
}

/// Hasse edges `(lower, upper)` of an order given by its `up` rows.
pub(crate) fn cover_pairs(up: &[FixedBitSet]) -> Vec<(usize, usize)> {
    let n = up.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in up[x].ones() {
            if y == x {
                continue;
            }
            let between = up[x].ones().any(|z| z != x && z != y && up[z].contains(y));
            if !between {
                out.push((x, y));
            }
        }
    }
    out
}

/// A validated finite partial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    // up[x] = { y : x <= y }
    up: Vec<Subset>,
    covers: Vec<(usize, usize)>,
}

pub(crate) fn index_labels(names: &[String]) -> Result<HashMap<&str, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(Error::DuplicateLabel(name.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds the order generated by `covers` (pairs of labels, lower first).
    pub fn from_covers<S: AsRef<str>>(names: Vec<String>, covers: &[(S, S)]) -> Result<Self> {
        let n = names.len();
        let index = index_labels(&names)?;
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in covers {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| Error::UnknownLabel(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
            rows[ia].insert(ib);
        }
        transitive_closure(&mut rows);
        Self::checked(names, rows)
    }

    /// Builds a poset from full `x <= y` rows; the rows must already be a
    /// partial order.
    pub fn from_up_rows(names: Vec<String>, up: Vec<Subset>) -> Result<Self> {
        let n = names.len();
        index_labels(&names)?;
        if up.len() != n || up.iter().any(|r| r.len() != n) {
            return Err(Error::NotAnOrder(format!("matrix is not {n}x{n}")));
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotAnOrder(format!("`{}` is not reflexive", names[x])));
            }
            for y in up[x].ones() {
                if !up[y].is_subset(&up[x]) {
                    return Err(Error::NotAnOrder(format!(
                        "not transitive above `{}` <= `{}`",
                        names[x], names[y]
                    )));
                }
            }
        }
        Self::checked(names, up)
    }

    fn checked(names: Vec<String>, up: Vec<Subset>) -> Result<Self> {
        let n = names.len();
        for x in 0..n {
            for y in up[x].ones() {
                if y != x && up[y].contains(x) {
                    return Err(Error::CycleDetected(names[x].clone(), names[y].clone()));
                }
            }
        }
        let covers = cover_pairs(&up);
        Ok(Poset { names, up, covers })
    }

    /// The discrete order on the given labels.
    pub fn antichain(names: Vec<String>) -> Result<Self> {
        let n = names.len();
        let up = (0..n).map(|i| subset(n, [i])).collect();
        Self::from_up_rows(names, up)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn up(&self, x: usize) -> &Subset {
        &self.up[x]
    }

    pub fn up_rows(&self) -> &[Subset] {
        &self.up
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }
}

impl FiniteOrder for Poset {
    fn size(&self) -> usize {
        self.names.len()
    }

    fn le(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    fn label(&self, x: usize) -> &str {
        &self.names[x]
    }
}
