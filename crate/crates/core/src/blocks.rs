//! Blocks of a tolerance and the factor lattice they form.
//!
//! Blocks are the maximal cliques of the tolerance viewed as a graph. On a
//! finite lattice each block is an interval `[bottom, top]`; blocks are
//! ordered by inclusion of the principal ideals they generate.

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::order::Subset;
use crate::relation::Relation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub members: Subset,
    /// The ideal `(C]` generated by the block.
    pub ideal: Subset,
    /// The filter `[C)` generated by the block.
    pub filter: Subset,
    pub bottom: usize,
    pub top: usize,
}

impl Block {
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// `[b,t]` with element labels.
    pub fn label(&self, lat: &FiniteLattice) -> String {
        format!("[{},{}]", lat.names()[self.bottom], lat.names()[self.top])
    }
}

/// Maximal cliques of the graph with the given adjacency rows (loops are
/// ignored). Bron–Kerbosch with pivoting.
pub fn maximal_cliques(adj: &[Subset]) -> Vec<Subset> {
    let n = adj.len();
    let neighbours: Vec<Subset> = adj
        .iter()
        .enumerate()
        .map(|(v, row)| {
            let mut r = row.clone();
            r.set(v, false);
            r
        })
        .collect();
    let mut out = Vec::new();
    let mut all = Subset::with_capacity(n);
    all.insert_range(..);
    bron_kerbosch(&neighbours, Subset::with_capacity(n), all, Subset::with_capacity(n), &mut out);
    out
}

fn bron_kerbosch(adj: &[Subset], r: Subset, mut p: Subset, mut x: Subset, out: &mut Vec<Subset>) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection_count(&adj[u]))
        .expect("p is nonempty");
    let mut todo = p.clone();
    todo.difference_with(&adj[pivot]);
    for v in todo.ones() {
        let mut next_r = r.clone();
        next_r.insert(v);
        let mut next_p = p.clone();
        next_p.intersect_with(&adj[v]);
        let mut next_x = x.clone();
        next_x.intersect_with(&adj[v]);
        bron_kerbosch(adj, next_r, next_p, next_x, out);
        p.set(v, false);
        x.insert(v);
    }
}

/// All blocks of `t`, sorted by `(bottom, top)`.
///
/// Each block is checked to be a maximal preblock, a convex sublattice equal
/// to the interval between its meet and join, and the intersection of the
/// ideal and filter it generates.
pub fn blocks(lat: &FiniteLattice, t: &Relation) -> Result<Vec<Block>> {
    if !t.is_tolerance(lat) {
        return Err(Error::NotATolerance);
    }
    let mut out = Vec::new();
    for members in maximal_cliques(t.rows()) {
        let (bottom, top) = lat.interval_hull(&members)?;
        let block = Block {
            ideal: lat.down(top).clone(),
            filter: lat.up(bottom).clone(),
            members,
            bottom,
            top,
        };
        check_block(lat, t, &block)?;
        out.push(block);
    }
    out.sort_by_key(|b| (b.bottom, b.top));
    Ok(out)
}

fn check_block(lat: &FiniteLattice, t: &Relation, b: &Block) -> Result<()> {
    let fail = |what: &str| Err(Error::InvariantViolation(format!("block {}: {what}", lat.format_subset(&b.members))));
    let is_preblock = b.members.ones().all(|x| b.members.is_subset(t.row(x)));
    if !is_preblock {
        return fail("not a preblock");
    }
    let extendable = (0..lat.n()).any(|v| !b.members.contains(v) && b.members.is_subset(t.row(v)));
    if extendable {
        return fail("not maximal");
    }
    if !lat.is_convex_sublattice(&b.members)? {
        return fail("not a convex sublattice");
    }
    if b.members != lat.interval(b.bottom, b.top) {
        return fail("not the interval of its endpoints");
    }
    let mut both = b.ideal.clone();
    both.intersect_with(&b.filter);
    if both != b.members {
        return fail("differs from (C] ∩ [C)");
    }
    Ok(())
}

/// Blocks of `t` containing `x`.
pub fn block_of(lat: &FiniteLattice, t: &Relation, x: usize) -> Result<Vec<Block>> {
    Ok(blocks(lat, t)?.into_iter().filter(|b| b.contains(x)).collect())
}

/// The factor lattice `L/T`.
#[derive(Debug, Clone)]
pub struct FactorLattice {
    pub tolerance: Relation,
    pub blocks: Vec<Block>,
    /// `order[i]` holds every `j` with block `i` below block `j`.
    pub order: Vec<Subset>,
    /// The blocks as a lattice over block indices, labelled `[b,t]`.
    pub lattice: FiniteLattice,
}

impl FactorLattice {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i].contains(j)
    }
}

/// Orders the blocks of `t` by `(B] ⊆ (C]` and validates that the result is
/// a lattice whose joins and meets satisfy `[B1) ∩ [B2) = [B1 v B2)` and
/// `(B1] ∩ (B2] = (B1 ^ B2]`.
pub fn factor_lattice(lat: &FiniteLattice, t: &Relation) -> Result<FactorLattice> {
    let blocks = blocks(lat, t)?;
    let k = blocks.len();
    let order: Vec<Subset> = blocks
        .iter()
        .map(|b| {
            let mut row = Subset::with_capacity(k);
            for (j, c) in blocks.iter().enumerate() {
                if b.ideal.is_subset(&c.ideal) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let names = blocks.iter().map(|b| b.label(lat)).collect();
    let lattice = FiniteLattice::from_up_rows(format!("{}/T", lat.name()), names, order.clone())
        .map_err(|e| Error::FactorNotALattice(e.to_string()))?;
    for i in 0..k {
        for j in i..k {
            let (e, f) = (lattice.join(i, j), lattice.meet(i, j));
            let mut filters = blocks[i].filter.clone();
            filters.intersect_with(&blocks[j].filter);
            let mut ideals = blocks[i].ideal.clone();
            ideals.intersect_with(&blocks[j].ideal);
            if filters != blocks[e].filter || ideals != blocks[f].ideal {
                return Err(Error::InvariantViolation(format!(
                    "join/meet of blocks {} and {} do not match generated ideals and filters",
                    blocks[i].label(lat),
                    blocks[j].label(lat)
                )));
            }
        }
    }
    Ok(FactorLattice { tolerance: t.clone(), blocks, order, lattice })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::named;
    use crate::tolerance::enumerate_tolerances;

    fn glued() -> Relation {
        Relation::from_pairs(3, [(0, 1), (1, 2)]).symmetric_reflexive_closure()
    }

    #[test]
    fn identity_gives_singletons() {
        for lat in named::all() {
            let bs = blocks(&lat, &Relation::identity(lat.n())).unwrap();
            assert_eq!(bs.len(), lat.n());
            assert!(bs.iter().all(|b| b.members.count_ones(..) == 1));
        }
    }

    #[test]
    fn full_gives_one_block() {
        for lat in named::all() {
            let bs = blocks(&lat, &Relation::full(lat.n())).unwrap();
            assert_eq!(bs.len(), 1);
            assert_eq!(bs[0].members, lat.full_subset());
        }
    }

    #[test]
    fn glued_chain_blocks_overlap() {
        let c3 = named::chain(3);
        let bs = blocks(&c3, &glued()).unwrap();
        let sets: Vec<Subset> = bs.iter().map(|b| b.members.clone()).collect();
        assert_eq!(sets, vec![c3.subset([0, 1]), c3.subset([1, 2])]);

        assert_eq!(block_of(&c3, &glued(), 1).unwrap().len(), 2);
        let at_zero = block_of(&c3, &glued(), 0).unwrap();
        assert_eq!(at_zero.len(), 1);
        assert_eq!(at_zero[0].members, c3.subset([0, 1]));
        for x in 0..3 {
            assert_eq!(block_of(&c3, &Relation::identity(3), x).unwrap()[0].members, c3.subset([x]));
        }
    }

    #[test]
    fn non_tolerance_rejected() {
        let c3 = named::chain(3);
        assert_eq!(blocks(&c3, &Relation::order(&c3)).unwrap_err(), Error::NotATolerance);
        assert!(factor_lattice(&c3, &Relation::order(&c3)).is_err());
    }

    #[test]
    fn factor_lattice_examples() {
        for lat in named::all() {
            let f = factor_lattice(&lat, &Relation::identity(lat.n())).unwrap();
            assert!(are_isomorphic(&f.lattice, &lat).is_some());
            let f = factor_lattice(&lat, &Relation::full(lat.n())).unwrap();
            assert_eq!(f.len(), 1);
        }
        let c3 = named::chain(3);
        let f = factor_lattice(&c3, &glued()).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.leq(0, 1) && !f.leq(1, 0));
        assert_eq!(f.lattice.names(), &["[0,m]".to_string(), "[m,1]".to_string()]);
    }

    #[test]
    fn cliques_of_small_graph() {
        // 0-1-2 triangle plus 2-3 edge
        let adj = vec![
            crate::order::subset(4, [0, 1, 2]),
            crate::order::subset(4, [0, 1, 2]),
            crate::order::subset(4, [0, 1, 2, 3]),
            crate::order::subset(4, [2, 3]),
        ];
        let mut cl = maximal_cliques(&adj);
        cl.sort();
        assert_eq!(cl.len(), 2);
        assert!(cl.contains(&crate::order::subset(4, [0, 1, 2])));
        assert!(cl.contains(&crate::order::subset(4, [2, 3])));
    }

    #[test]
    fn every_tolerance_of_named_lattices_factors() {
        for lat in named::all() {
            for t in enumerate_tolerances(&lat).unwrap() {
                let f = factor_lattice(&lat, &t).unwrap();
                let mut union = lat.empty_subset();
                for b in &f.blocks {
                    union.union_with(&b.members);
                }
                assert_eq!(union, lat.full_subset());
            }
        }
    }
}
