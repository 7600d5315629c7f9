//! Finite lattices with precomputed join and meet tables.

use crate::error::{Error, Result};
use crate::order::{full_subset, index_labels, subset, FiniteOrder, Poset, Subset};

/// A finite lattice. Immutable once built; every constructor validates that
/// each pair of elements has a unique least upper and greatest lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    name: String,
    poset: Poset,
    // down[x] = { y : y <= x }
    down: Vec<Subset>,
    join: Vec<usize>,
    meet: Vec<usize>,
    height: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Result of closing a subset downward (or upward), together with whether
/// the closure is also closed under joins (respectively meets).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedSet {
    pub members: Subset,
    pub closed: bool,
}

impl FiniteLattice {
    /// Builds a lattice from element labels and cover pairs `(lower, upper)`.
    /// The pairs only need to generate the order; redundant pairs are fine.
    pub fn from_covers<S: AsRef<str>>(
        name: impl Into<String>,
        elem_names: Vec<String>,
        covers: &[(S, S)],
    ) -> Result<Self> {
        Self::from_poset(name, Poset::from_covers(elem_names, covers)?)
    }

    /// Builds a lattice from complete `x <= y` rows.
    pub fn from_up_rows(name: impl Into<String>, elem_names: Vec<String>, up: Vec<Subset>) -> Result<Self> {
        Self::from_poset(name, Poset::from_up_rows(elem_names, up)?)
    }

    pub fn from_poset(name: impl Into<String>, poset: Poset) -> Result<Self> {
        let n = poset.size();
        if n == 0 {
            return Err(Error::EmptyLattice);
        }
        let up = poset.up_rows();
        let mut down = vec![Subset::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let mut upper = up[x].clone();
                upper.intersect_with(&up[y]);
                let j = upper
                    .ones()
                    .find(|&u| upper.is_subset(&up[u]))
                    .ok_or_else(|| Error::NotALattice(poset.label(x).into(), poset.label(y).into(), "join"))?;
                let mut lower = down[x].clone();
                lower.intersect_with(&down[y]);
                let m = lower
                    .ones()
                    .find(|&l| lower.is_subset(&down[l]))
                    .ok_or_else(|| Error::NotALattice(poset.label(x).into(), poset.label(y).into(), "meet"))?;
                join[x * n + y] = j;
                join[y * n + x] = j;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }
        let bottom = (0..n).find(|&x| up[x].count_ones(..) == n).expect("finite lattice has a bottom");
        let top = (0..n).find(|&x| down[x].count_ones(..) == n).expect("finite lattice has a top");

        // Longest chain from the bottom; elements sorted by down-set size
        // form a linear extension.
        let mut by_size: Vec<usize> = (0..n).collect();
        by_size.sort_by_key(|&x| down[x].count_ones(..));
        let mut height = vec![0; n];
        for &x in &by_size {
            for &(lo, hi) in poset.covers() {
                if lo == x {
                    height[hi] = height[hi].max(height[x] + 1);
                }
            }
        }
        Ok(FiniteLattice { name: name.into(), poset, down, join, meet, height, bottom, top })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn n(&self) -> usize {
        self.poset.size()
    }

    pub fn names(&self) -> &[String] {
        self.poset.names()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.names()
            .iter()
            .position(|s| s == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.le(x, y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n() + y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Hasse edges `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        self.poset.covers()
    }

    /// Principal filter of `x`.
    pub fn up(&self, x: usize) -> &Subset {
        self.poset.up(x)
    }

    /// Principal ideal of `x`.
    pub fn down(&self, x: usize) -> &Subset {
        &self.down[x]
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn height(&self, x: usize) -> usize {
        self.height[x]
    }

    pub fn join_all(&self, xs: &Subset) -> Option<usize> {
        xs.ones().reduce(|a, b| self.join(a, b))
    }

    pub fn meet_all(&self, xs: &Subset) -> Option<usize> {
        xs.ones().reduce(|a, b| self.meet(a, b))
    }

    /// The interval `[a, b]`; empty when `a` is not below `b`.
    pub fn interval(&self, a: usize, b: usize) -> Subset {
        let mut s = self.up(a).clone();
        s.intersect_with(self.down(b));
        s
    }

    pub fn empty_subset(&self) -> Subset {
        Subset::with_capacity(self.n())
    }

    pub fn full_subset(&self) -> Subset {
        full_subset(self.n())
    }

    pub fn subset(&self, members: impl IntoIterator<Item = usize>) -> Subset {
        subset(self.n(), members)
    }

    /// Subset from element labels.
    pub fn subset_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let index = index_labels(self.names())?;
        let mut s = self.empty_subset();
        for l in labels {
            let l = l.as_ref();
            s.insert(*index.get(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?);
        }
        Ok(s)
    }

    /// Order ideal `{z : z <= x for some x in X}` with a flag telling whether
    /// it is closed under joins.
    pub fn down_set(&self, xs: &Subset) -> Result<GeneratedSet> {
        if xs.is_clear() {
            return Err(Error::EmptyInput);
        }
        let mut members = self.empty_subset();
        for x in xs.ones() {
            members.union_with(self.down(x));
        }
        let closed = self.is_join_closed(&members);
        Ok(GeneratedSet { members, closed })
    }

    /// Order filter `{z : z >= x for some x in X}` with a meet-closure flag.
    pub fn up_set(&self, xs: &Subset) -> Result<GeneratedSet> {
        if xs.is_clear() {
            return Err(Error::EmptyInput);
        }
        let mut members = self.empty_subset();
        for x in xs.ones() {
            members.union_with(self.up(x));
        }
        let closed = self.is_meet_closed(&members);
        Ok(GeneratedSet { members, closed })
    }

    /// The ideal generated by a nonempty subset, i.e. the principal ideal of
    /// its join.
    pub fn ideal_generated(&self, xs: &Subset) -> Result<Subset> {
        let j = self.join_all(xs).ok_or(Error::EmptyInput)?;
        Ok(self.down(j).clone())
    }

    /// The filter generated by a nonempty subset.
    pub fn filter_generated(&self, xs: &Subset) -> Result<Subset> {
        let m = self.meet_all(xs).ok_or(Error::EmptyInput)?;
        Ok(self.up(m).clone())
    }

    pub fn is_join_closed(&self, xs: &Subset) -> bool {
        xs.ones().all(|a| xs.ones().all(|b| xs.contains(self.join(a, b))))
    }

    pub fn is_meet_closed(&self, xs: &Subset) -> bool {
        xs.ones().all(|a| xs.ones().all(|b| xs.contains(self.meet(a, b))))
    }

    pub fn is_down_closed(&self, xs: &Subset) -> bool {
        xs.ones().all(|x| self.down(x).is_subset(xs))
    }

    pub fn is_up_closed(&self, xs: &Subset) -> bool {
        xs.ones().all(|x| self.up(x).is_subset(xs))
    }

    /// Down-closed and join-closed. The empty set counts.
    pub fn is_ideal(&self, xs: &Subset) -> bool {
        self.is_down_closed(xs) && self.is_join_closed(xs)
    }

    /// Up-closed and meet-closed. The empty set counts.
    pub fn is_filter(&self, xs: &Subset) -> bool {
        self.is_up_closed(xs) && self.is_meet_closed(xs)
    }

    pub fn is_convex_sublattice(&self, xs: &Subset) -> Result<bool> {
        if xs.is_clear() {
            return Err(Error::EmptyInput);
        }
        if !self.is_join_closed(xs) || !self.is_meet_closed(xs) {
            return Ok(false);
        }
        let convex = xs.ones().all(|a| {
            xs.ones()
                .filter(|&b| self.leq(a, b))
                .all(|b| self.interval(a, b).is_subset(xs))
        });
        Ok(convex)
    }

    /// `(meet of X, join of X)`; for a convex sublattice `X` equals that
    /// interval.
    pub fn interval_hull(&self, xs: &Subset) -> Result<(usize, usize)> {
        match (self.meet_all(xs), self.join_all(xs)) {
            (Some(lo), Some(hi)) => Ok((lo, hi)),
            _ => Err(Error::EmptyInput),
        }
    }

    /// Renders a subset as `{a,b,c}` using element labels.
    pub fn format_subset(&self, xs: &Subset) -> String {
        let parts: Vec<&str> = xs.ones().map(|i| self.names()[i].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl FiniteOrder for FiniteLattice {
    fn size(&self) -> usize {
        self.n()
    }

    fn le(&self, x: usize, y: usize) -> bool {
        self.leq(x, y)
    }

    fn label(&self, x: usize) -> &str {
        &self.names()[x]
    }
}
