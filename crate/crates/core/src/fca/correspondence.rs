//! Blocks of a tolerance `T` against the concepts of `(L, L, <= . T . <=)`.

use super::{concepts, dm_completion, ConceptLattice, FormalContext};
use crate::blocks::{factor_lattice, FactorLattice};
use crate::error::{Error, Result};
use crate::iso::are_isomorphic;
use crate::lattice::FiniteLattice;
use crate::relation::{beta, Relation};

/// The context `(L, L, <= . T . <=)`.
pub fn tolerance_context(lat: &FiniteLattice, t: &Relation) -> Result<FormalContext> {
    FormalContext::from_relation(lat, &beta(lat, t)?)
}

/// Verified bijection between blocks of `T` and the concepts whose extent
/// and intent intersect.
#[derive(Debug, Clone)]
pub struct Correspondence {
    pub factor: FactorLattice,
    pub concepts: ConceptLattice,
    /// Concept index of `((C], [C))` for each block `C`.
    pub block_to_concept: Vec<usize>,
    /// Block index of `A ∩ B`, or `None` when the intersection is empty.
    pub concept_to_block: Vec<Option<usize>>,
    /// Concepts whose extent and intent are disjoint.
    pub empty_intersection: Vec<usize>,
}

pub fn block_concept_correspondence(lat: &FiniteLattice, t: &Relation) -> Result<Correspondence> {
    let factor = factor_lattice(lat, t)?;
    let cl = concepts(&tolerance_context(lat, t)?)?;
    let violation = |msg: String| Err(Error::CorrespondenceViolation(msg));

    let mut block_to_concept = Vec::with_capacity(factor.len());
    for b in &factor.blocks {
        let ctx = &cl.context;
        if ctx.derive_intent(&b.ideal) != b.filter || ctx.derive_extent(&b.filter) != b.ideal {
            return violation(format!("((C],[C)) is not a concept for block {}", b.label(lat)));
        }
        let mut both = b.ideal.clone();
        both.intersect_with(&b.filter);
        if both != b.members {
            return violation(format!("block {} differs from (C] ∩ [C)", b.label(lat)));
        }
        match cl.index_of_extent(&b.ideal) {
            Some(i) => block_to_concept.push(i),
            None => return violation(format!("concept for block {} not enumerated", b.label(lat))),
        }
    }

    let mut concept_to_block = vec![None; cl.len()];
    let mut empty_intersection = Vec::new();
    for (i, c) in cl.concepts.iter().enumerate() {
        let mut d = c.extent.clone();
        d.intersect_with(&c.intent);
        if d.is_clear() {
            empty_intersection.push(i);
            continue;
        }
        let Some(j) = factor.blocks.iter().position(|b| b.members == d) else {
            return violation(format!("A ∩ B = {} of concept {} is not a block", lat.format_subset(&d), cl.label(i)));
        };
        let b = &factor.blocks[j];
        if c.extent != b.ideal || c.intent != b.filter {
            return violation(format!("concept {} is not ((D],[D)) for D = {}", cl.label(i), b.label(lat)));
        }
        concept_to_block[i] = Some(j);
    }

    for (j, &i) in block_to_concept.iter().enumerate() {
        if concept_to_block[i] != Some(j) {
            return violation(format!("maps are not inverse at block {}", factor.blocks[j].label(lat)));
        }
    }
    Ok(Correspondence { factor, concepts: cl, block_to_concept, concept_to_block, empty_intersection })
}

/// `delta(C) = ((C], [C))` from `L/T` into the concept lattice, with its
/// embedding properties verified over all pairs of blocks.
#[derive(Debug, Clone)]
pub struct DeltaEmbedding {
    pub factor: FactorLattice,
    pub concepts: ConceptLattice,
    pub map: Vec<usize>,
}

pub fn delta_embedding(lat: &FiniteLattice, t: &Relation) -> Result<DeltaEmbedding> {
    let corr = block_concept_correspondence(lat, t)?;
    let Correspondence { factor, concepts: cl, block_to_concept: map, .. } = corr;
    let f = &factor.lattice;
    let c = &cl.lattice;
    let k = factor.len();
    let fail = |what: &str, i: usize, j: usize| {
        Err(Error::EmbeddingViolation(format!("{what} at blocks {} and {}", f.names()[i], f.names()[j])))
    };
    for i in 0..k {
        for j in 0..k {
            if i != j && map[i] == map[j] {
                return fail("not injective", i, j);
            }
            if f.leq(i, j) != c.leq(map[i], map[j]) {
                return fail("order not preserved and reflected", i, j);
            }
            if map[f.join(i, j)] != c.join(map[i], map[j]) {
                return fail("join not preserved", i, j);
            }
            if map[f.meet(i, j)] != c.meet(map[i], map[j]) {
                return fail("meet not preserved", i, j);
            }
        }
    }
    Ok(DeltaEmbedding { factor, concepts: cl, map })
}

/// Outcome of comparing `L/T`, its Dedekind–MacNeille completion and the
/// concept lattice of `(L, L, <= . T . <=)`.
#[derive(Debug, Clone)]
pub struct FactorIsomorphism {
    pub factor_size: usize,
    pub concept_count: usize,
    /// Isomorphism `DM(L/T) -> concept lattice`.
    pub dm_to_concepts: Option<Vec<usize>>,
    /// Isomorphism `L/T -> concept lattice`.
    pub factor_to_concepts: Option<Vec<usize>>,
    /// Every concept is a join of images of blocks.
    pub supremum_dense: bool,
    /// Every concept is a meet of images of blocks.
    pub infimum_dense: bool,
    /// `B <= C` iff `delta(B) <= delta(C)`.
    pub order_equivalent: bool,
}

impl FactorIsomorphism {
    pub fn holds(&self) -> bool {
        self.dm_to_concepts.is_some()
            && self.factor_to_concepts.is_some()
            && self.supremum_dense
            && self.infimum_dense
            && self.order_equivalent
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.dm_to_concepts.is_none() {
            out.push("DM(L/T) not isomorphic to concept lattice");
        }
        if self.factor_to_concepts.is_none() {
            out.push("L/T not isomorphic to concept lattice");
        }
        if !self.supremum_dense {
            out.push("block images not supremum-dense");
        }
        if !self.infimum_dense {
            out.push("block images not infimum-dense");
        }
        if !self.order_equivalent {
            out.push("block order differs from image order");
        }
        out
    }
}

pub fn verify_factor_isomorphism(lat: &FiniteLattice, t: &Relation) -> Result<FactorIsomorphism> {
    let factor = factor_lattice(lat, t)?;
    let cl = concepts(&tolerance_context(lat, t)?)?;
    let dm = dm_completion(&factor.lattice)?;
    let c = &cl.lattice;

    let map: Vec<usize> = factor
        .blocks
        .iter()
        .map(|b| cl.index_of_extent(&b.ideal).filter(|&i| cl.concepts[i].intent == b.filter))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::CorrespondenceViolation("a block has no matching concept".into()))?;

    let supremum_dense = (0..cl.len()).all(|x| {
        map.iter().copied().filter(|&m| c.leq(m, x)).reduce(|a, b| c.join(a, b)).unwrap_or(c.bottom()) == x
    });
    let infimum_dense = (0..cl.len()).all(|x| {
        map.iter().copied().filter(|&m| c.leq(x, m)).reduce(|a, b| c.meet(a, b)).unwrap_or(c.top()) == x
    });
    let k = factor.len();
    let order_equivalent =
        (0..k).all(|i| (0..k).all(|j| factor.lattice.leq(i, j) == c.leq(map[i], map[j])));

    Ok(FactorIsomorphism {
        factor_size: k,
        concept_count: cl.len(),
        dm_to_concepts: are_isomorphic(&dm.lattice, c),
        factor_to_concepts: are_isomorphic(&factor.lattice, c),
        supremum_dense,
        infimum_dense,
        order_equivalent,
    })
}
