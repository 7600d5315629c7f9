//! Tolerance generation and enumeration of `Tol(L)` and `ReWOR(L)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::relation::{beta, Relation};

/// Default size bound for exhaustive enumeration.
pub const DEFAULT_MAX_ELEMENTS: usize = 9;

/// Least tolerance containing `seed`: start from the symmetric reflexive
/// closure and add componentwise joins and meets of related pairs until
/// nothing changes.
pub fn close_tolerance(lat: &FiniteLattice, seed: &Relation) -> Relation {
    let mut rel = seed.symmetric_reflexive_closure();
    let mut pairs: Vec<(usize, usize)> = rel.pairs().collect();
    let mut next = 0;
    while next < pairs.len() {
        let (x1, y1) = pairs[next];
        // pairs before `next` have already been combined with each other
        for i in 0..=next {
            let (x2, y2) = pairs[i];
            for (a, b) in [
                (lat.join(x1, x2), lat.join(y1, y2)),
                (lat.meet(x1, x2), lat.meet(y1, y2)),
            ] {
                if !rel.contains(a, b) {
                    rel.insert(a, b);
                    pairs.push((a, b));
                }
            }
        }
        next += 1;
    }
    rel
}

/// Least tolerance containing the given pairs.
pub fn tolerance_generated_by(lat: &FiniteLattice, pairs: &[(usize, usize)]) -> Relation {
    close_tolerance(lat, &Relation::from_pairs(lat.n(), pairs.iter().copied()))
}

/// Join in `Tol(L)`: the tolerance generated by the union.
pub fn tolerance_join(lat: &FiniteLattice, a: &Relation, b: &Relation) -> Result<Relation> {
    Ok(close_tolerance(lat, &a.union(b)?))
}

/// Every tolerance of `lat`, sorted lexicographically.
///
/// `Tol(L)` is generated under joins by the principal tolerances of single
/// pairs, so the set is grown from the identity by joining with principal
/// tolerances until it is closed.
pub fn enumerate_tolerances(lat: &FiniteLattice) -> Result<Vec<Relation>> {
    enumerate_tolerances_bounded(lat, DEFAULT_MAX_ELEMENTS)
}

pub fn enumerate_tolerances_bounded(lat: &FiniteLattice, max_elements: usize) -> Result<Vec<Relation>> {
    let n = lat.n();
    if n > max_elements {
        return Err(Error::SizeBound { size: n, bound: max_elements });
    }
    let principal: BTreeSet<Relation> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| tolerance_generated_by(lat, &[(a, b)]))
        .collect();
    let identity = Relation::identity(n);
    let mut found: BTreeSet<Relation> = BTreeSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(t) = frontier.pop() {
        for p in &principal {
            if p.is_subset(&t) {
                continue;
            }
            let joined = tolerance_join(lat, &t, p)?;
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Every reflexive weak ordered relation, as the image of `beta` over
/// `Tol(L)`, sorted lexicographically.
pub fn enumerate_rewor(lat: &FiniteLattice) -> Result<Vec<Relation>> {
    enumerate_rewor_bounded(lat, DEFAULT_MAX_ELEMENTS)
}

pub fn enumerate_rewor_bounded(lat: &FiniteLattice, max_elements: usize) -> Result<Vec<Relation>> {
    let tolerances = enumerate_tolerances_bounded(lat, max_elements)?;
    let mut out = tolerances.iter().map(|t| beta(lat, t)).collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}
