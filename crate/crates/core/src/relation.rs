//! Binary relations on the elements of a finite lattice.
//!
//! A [`Relation`] is an `n x n` bit matrix; row `x` holds every `y` with
//! `(x, y)` in the relation. Predicates that depend on the lattice structure
//! (compatibility, tolerance, weak ordered) take the host lattice as an
//! argument and panic if its size does not match.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::order::Subset;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    rows: Vec<Subset>,
}

impl Relation {
    /// The empty relation.
    pub fn empty(n: usize) -> Self {
        Relation { n, rows: vec![Subset::with_capacity(n); n] }
    }

    /// The diagonal `{(x, x)}`.
    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for x in 0..n {
            r.insert(x, x);
        }
        r
    }

    /// All pairs.
    pub fn full(n: usize) -> Self {
        let mut r = Self::empty(n);
        for row in &mut r.rows {
            row.insert_range(..);
        }
        r
    }

    /// The order `<=` of a lattice.
    pub fn order(lat: &FiniteLattice) -> Self {
        Relation { n: lat.n(), rows: (0..lat.n()).map(|x| lat.up(x).clone()).collect() }
    }

    /// The reverse order `>=`.
    pub fn reverse_order(lat: &FiniteLattice) -> Self {
        Relation { n: lat.n(), rows: (0..lat.n()).map(|x| lat.down(x).clone()).collect() }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(n);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    pub fn from_rows(rows: Vec<Subset>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::HostMismatch(n, bad.len()));
        }
        Ok(Relation { n, rows })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x].insert(y);
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        self.rows[x].set(y, false);
    }

    pub fn row(&self, x: usize) -> &Subset {
        &self.rows[x]
    }

    pub fn rows(&self) -> &[Subset] {
        &self.rows
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(x, row)| row.ones().map(move |y| (x, y)))
    }

    pub fn count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|x| self.contains(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.contains(y, x))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs().all(|(x, y)| self.rows[y].is_subset(&self.rows[x]))
    }

    fn same_host(&self, other: &Relation) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::HostMismatch(self.n, other.n))
        }
    }

    fn check_host(&self, lat: &FiniteLattice) {
        assert_eq!(self.n, lat.n(), "relation size does not match lattice {}", lat.name());
    }

    /// Relational product: `(x, z)` whenever `(x, y)` in `self` and `(y, z)`
    /// in `other` for some `y`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        self.same_host(other)?;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = Subset::with_capacity(self.n);
                for y in row.ones() {
                    out.union_with(&other.rows[y]);
                }
                out
            })
            .collect();
        Ok(Relation { n: self.n, rows })
    }

    pub fn inverse(&self) -> Relation {
        let mut r = Relation::empty(self.n);
        for (x, y) in self.pairs() {
            r.insert(y, x);
        }
        r
    }

    pub fn intersect(&self, other: &Relation) -> Result<Relation> {
        self.same_host(other)?;
        let mut r = self.clone();
        for (a, b) in r.rows.iter_mut().zip(&other.rows) {
            a.intersect_with(b);
        }
        Ok(r)
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.same_host(other)?;
        let mut r = self.clone();
        for (a, b) in r.rows.iter_mut().zip(&other.rows) {
            a.union_with(b);
        }
        Ok(r)
    }

    /// Adds the diagonal.
    pub fn reflexive_closure(&self) -> Relation {
        let mut r = self.clone();
        for x in 0..self.n {
            r.insert(x, x);
        }
        r
    }

    /// Adds the diagonal and all reversed pairs.
    pub fn symmetric_reflexive_closure(&self) -> Relation {
        self.reflexive_closure().union(&self.inverse()).expect("same size")
    }

    /// Closed under componentwise joins and meets, i.e. a sublattice of the
    /// square of the lattice.
    pub fn is_compatible(&self, lat: &FiniteLattice) -> bool {
        self.find_incompatibility(lat).is_none()
    }

    /// A witness `((x1, y1), (x2, y2))` whose componentwise join or meet
    /// leaves the relation.
    pub fn find_incompatibility(&self, lat: &FiniteLattice) -> Option<((usize, usize), (usize, usize))> {
        self.check_host(lat);
        let pairs: Vec<(usize, usize)> = self.pairs().collect();
        for (i, &(x1, y1)) in pairs.iter().enumerate() {
            for &(x2, y2) in &pairs[i + 1..] {
                if !self.contains(lat.join(x1, x2), lat.join(y1, y2))
                    || !self.contains(lat.meet(x1, x2), lat.meet(y1, y2))
                {
                    return Some(((x1, y1), (x2, y2)));
                }
            }
        }
        None
    }

    /// Reflexive, symmetric and compatible.
    pub fn is_tolerance(&self, lat: &FiniteLattice) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_compatible(lat)
    }

    /// Checks the weak ordered relation axioms directly:
    /// (1) `u <= x`, `(x, y)` in R, `y <= z` imply `(u, z)` in R;
    /// (2) `(a, t), (b, t)` in R imply `(a v b, t)` in R;
    /// (3) `(z, a), (z, b)` in R imply `(z, a ^ b)` in R.
    ///
    /// Conditions (2) and (3) are stated for finite nonempty index sets;
    /// singletons are trivial and larger sets follow from the two-element
    /// case by induction, so only pairs are checked. The empty relation
    /// passes.
    pub fn is_weak_ordered(&self, lat: &FiniteLattice) -> bool {
        self.check_host(lat);
        let n = self.n;
        for (x, y) in self.pairs() {
            for u in lat.down(x).ones() {
                if !lat.up(y).is_subset(&self.rows[u]) {
                    return false;
                }
            }
        }
        let columns = self.inverse();
        for t in 0..n {
            let col = columns.row(t);
            for a in col.ones() {
                for b in col.ones() {
                    if !self.contains(lat.join(a, b), t) {
                        return false;
                    }
                }
            }
        }
        for z in 0..n {
            let row = &self.rows[z];
            for a in row.ones() {
                for b in row.ones() {
                    if !row.contains(lat.meet(a, b)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Reflexive, compatible and fixed by `<= . R . <=`.
    pub fn is_rewor_by_characterization(&self, lat: &FiniteLattice) -> bool {
        if !self.is_reflexive() || !self.is_compatible(lat) {
            return false;
        }
        let le = Relation::order(lat);
        let sandwiched = le.compose(self).and_then(|r| r.compose(&le)).expect("same size");
        &sandwiched == self
    }

    /// Reflexive weak ordered relation, checked through the axioms.
    pub fn is_rewor(&self, lat: &FiniteLattice) -> bool {
        self.is_reflexive() && self.is_weak_ordered(lat)
    }

    /// Renders the pairs as `{(a,b),...}` with lattice labels.
    pub fn format_pairs(&self, lat: &FiniteLattice) -> String {
        let parts: Vec<String> =
            self.pairs().map(|(x, y)| format!("({},{})", lat.names()[x], lat.names()[y])).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Off-diagonal pairs with `x < y` in index order; enough to describe a
    /// symmetric reflexive relation.
    pub fn upper_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs().filter(|(x, y)| x < y)
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation[{}]", self.n)?;
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// Lexicographic order on the row-major bit sequence, a set bit sorting
/// after an unset one.
impl Ord for Relation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.rows.iter().zip(&other.rows) {
                for y in 0..self.n {
                    match a.contains(y).cmp(&b.contains(y)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Relation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `alpha(R) = R ∩ R⁻¹`, defined on reflexive weak ordered relations.
pub fn alpha(lat: &FiniteLattice, r: &Relation) -> Result<Relation> {
    if !r.is_rewor(lat) {
        return Err(Error::NotAWor);
    }
    r.intersect(&r.inverse())
}

/// `beta(T) = <= . T . <=`, defined on tolerances.
pub fn beta(lat: &FiniteLattice, t: &Relation) -> Result<Relation> {
    if !t.is_tolerance(lat) {
        return Err(Error::NotATolerance);
    }
    sandwich(lat, t)
}

/// `<= . R . <=` without any precondition.
pub fn sandwich(lat: &FiniteLattice, r: &Relation) -> Result<Relation> {
    let le = Relation::order(lat);
    le.compose(r)?.compose(&le)
}

/// A join-preserving self-map of a lattice.
#[derive(Debug, Clone)]
pub struct JoinEndomorphism<'a> {
    host: &'a FiniteLattice,
    map: Vec<usize>,
}

impl<'a> JoinEndomorphism<'a> {
    pub fn new(host: &'a FiniteLattice, map: Vec<usize>) -> Result<Self> {
        let n = host.n();
        if map.len() != n {
            return Err(Error::HostMismatch(n, map.len()));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= n) {
            return Err(Error::HostMismatch(n, bad));
        }
        for x in 0..n {
            for y in x..n {
                if map[host.join(x, y)] != host.join(map[x], map[y]) {
                    return Err(Error::NotAJoinEndomorphism(host.names()[x].clone(), host.names()[y].clone()));
                }
            }
        }
        Ok(JoinEndomorphism { host, map })
    }

    pub fn host(&self) -> &FiniteLattice {
        self.host
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `{(x, y) : f(x) <= y}`, always a weak ordered relation.
    pub fn weak_ordered_relation(&self) -> Relation {
        let rows = self.map.iter().map(|&fx| self.host.up(fx).clone()).collect();
        Relation { n: self.host.n(), rows }
    }
}

/// Every join-endomorphism of `lat`, by exhaustive search over self-maps.
/// Search is pruned pairwise, so it stays cheap for the small lattices it is
/// meant for.
pub fn join_endomorphisms(lat: &FiniteLattice) -> Vec<JoinEndomorphism<'_>> {
    let n = lat.n();
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    fn go<'a>(lat: &'a FiniteLattice, k: usize, map: &mut Vec<usize>, out: &mut Vec<JoinEndomorphism<'a>>) {
        let n = lat.n();
        if k == n {
            if let Ok(f) = JoinEndomorphism::new(lat, map.clone()) {
                out.push(f);
            }
            return;
        }
        'value: for v in 0..n {
            map[k] = v;
            // every join among the first k+1 elements that lands in range
            for x in 0..=k {
                for y in x..=k {
                    let j = lat.join(x, y);
                    if j <= k && map[j] != lat.join(map[x], map[y]) {
                        continue 'value;
                    }
                }
            }
            go(lat, k + 1, map, out);
        }
    }
    go(lat, 0, &mut map, &mut out);
    out
}
