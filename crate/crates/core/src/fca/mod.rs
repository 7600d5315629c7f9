//! Formal contexts and concept lattices.

mod correspondence;

use std::collections::{BTreeSet, HashMap};

pub use correspondence::{
    block_concept_correspondence, delta_embedding, tolerance_context, verify_factor_isomorphism,
    Correspondence, DeltaEmbedding, FactorIsomorphism,
};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::order::{full_subset, FiniteOrder, Subset};
use crate::relation::Relation;

/// Default bound on `|G| * |M|` for concept enumeration.
pub const DEFAULT_MAX_CELLS: usize = 64 * 64;

/// A formal context `(G, M, I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    // rows[g] = attributes of g
    rows: Vec<Subset>,
    // columns[m] = objects having m
    columns: Vec<Subset>,
}

impl FormalContext {
    pub fn new(objects: Vec<String>, attributes: Vec<String>, rows: Vec<Subset>) -> Result<Self> {
        let (g, m) = (objects.len(), attributes.len());
        if rows.len() != g {
            return Err(Error::HostMismatch(g, rows.len()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::HostMismatch(m, bad.len()));
        }
        let mut columns = vec![Subset::with_capacity(g); m];
        for (i, row) in rows.iter().enumerate() {
            for a in row.ones() {
                columns[a].insert(i);
            }
        }
        Ok(FormalContext { objects, attributes, rows, columns })
    }

    /// The context `(L, L, R)` for a relation on a lattice's elements.
    pub fn from_relation(lat: &FiniteLattice, r: &Relation) -> Result<Self> {
        if r.size() != lat.n() {
            return Err(Error::HostMismatch(lat.n(), r.size()));
        }
        Self::new(lat.names().to_vec(), lat.names().to_vec(), r.rows().to_vec())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    pub fn object_row(&self, g: usize) -> &Subset {
        &self.rows[g]
    }

    /// `A^I`: attributes shared by every object in `A`.
    pub fn derive_intent(&self, objects: &Subset) -> Subset {
        let mut out = full_subset(self.attributes.len());
        for g in objects.ones() {
            out.intersect_with(&self.rows[g]);
        }
        out
    }

    /// `^I B`: objects having every attribute in `B`.
    pub fn derive_extent(&self, attributes: &Subset) -> Subset {
        let mut out = full_subset(self.objects.len());
        for m in attributes.ones() {
            out.intersect_with(&self.columns[m]);
        }
        out
    }

    pub fn is_concept(&self, c: &Concept) -> bool {
        self.derive_intent(&c.extent) == c.intent && self.derive_extent(&c.intent) == c.extent
    }

    fn format(names: &[String], s: &Subset) -> String {
        let parts: Vec<&str> = s.ones().map(|i| names[i].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn format_concept(&self, c: &Concept) -> String {
        format!("{}|{}", Self::format(&self.objects, &c.extent), Self::format(&self.attributes, &c.intent))
    }
}

/// A formal concept `(A, B)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Concept {
    pub extent: Subset,
    pub intent: Subset,
}

/// Object concept `({g}^II, {g}^I)`.
pub fn gamma(ctx: &FormalContext, g: usize) -> Concept {
    let intent = ctx.rows[g].clone();
    Concept { extent: ctx.derive_extent(&intent), intent }
}

/// Attribute concept `(^I{m}, {m}^II)`.
pub fn mu(ctx: &FormalContext, m: usize) -> Concept {
    let extent = ctx.columns[m].clone();
    Concept { intent: ctx.derive_intent(&extent), extent }
}

/// All concepts of a context ordered by extent inclusion.
#[derive(Debug, Clone)]
pub struct ConceptLattice {
    pub context: FormalContext,
    pub concepts: Vec<Concept>,
    pub lattice: FiniteLattice,
    by_extent: HashMap<Subset, usize>,
}

impl ConceptLattice {
    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn index_of(&self, c: &Concept) -> Option<usize> {
        self.by_extent.get(&c.extent).copied().filter(|&i| self.concepts[i].intent == c.intent)
    }

    pub fn index_of_extent(&self, extent: &Subset) -> Option<usize> {
        self.by_extent.get(extent).copied()
    }

    pub fn object_concept(&self, g: usize) -> usize {
        self.index_of(&gamma(&self.context, g)).expect("object concept is enumerated")
    }

    pub fn attribute_concept(&self, m: usize) -> usize {
        self.index_of(&mu(&self.context, m)).expect("attribute concept is enumerated")
    }

    /// Checks the closed-form joins and meets: the join's intent is the
    /// intersection of intents and the meet's extent the intersection of
    /// extents. Returns the first offending pair.
    pub fn join_meet_violation(&self) -> Option<(usize, usize)> {
        let k = self.len();
        for i in 0..k {
            for j in i..k {
                let (a, b) = (&self.concepts[i], &self.concepts[j]);
                let mut intents = a.intent.clone();
                intents.intersect_with(&b.intent);
                let mut extents = a.extent.clone();
                extents.intersect_with(&b.extent);
                let join = &self.concepts[self.lattice.join(i, j)];
                let meet = &self.concepts[self.lattice.meet(i, j)];
                if join.intent != intents || meet.extent != extents {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Every concept is the join of the object concepts of its extent and
    /// the meet of the attribute concepts of its intent. Returns the first
    /// concept for which this fails.
    pub fn density_violation(&self) -> Option<usize> {
        let lat = &self.lattice;
        (0..self.len()).find(|&i| {
            let c = &self.concepts[i];
            let join = c.extent.ones().map(|g| self.object_concept(g)).reduce(|a, b| lat.join(a, b));
            let meet = c.intent.ones().map(|m| self.attribute_concept(m)).reduce(|a, b| lat.meet(a, b));
            join.unwrap_or(lat.bottom()) != i || meet.unwrap_or(lat.top()) != i
        })
    }

    pub fn label(&self, i: usize) -> String {
        self.context.format_concept(&self.concepts[i])
    }
}

/// Enumerates all concepts: the intents are exactly the intersections of
/// object rows (the empty intersection being `M`).
pub fn concepts(ctx: &FormalContext) -> Result<ConceptLattice> {
    concepts_bounded(ctx, DEFAULT_MAX_CELLS)
}

pub fn concepts_bounded(ctx: &FormalContext, max_cells: usize) -> Result<ConceptLattice> {
    let cells = ctx.objects.len() * ctx.attributes.len();
    if cells > max_cells {
        return Err(Error::SizeBound { size: cells, bound: max_cells });
    }
    let mut intents: BTreeSet<Subset> = BTreeSet::from([full_subset(ctx.attributes.len())]);
    for row in &ctx.rows {
        let new: Vec<Subset> = intents
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.intersect_with(row);
                b
            })
            .collect();
        intents.extend(new);
    }
    let mut list: Vec<Concept> =
        intents.into_iter().map(|intent| Concept { extent: ctx.derive_extent(&intent), intent }).collect();
    list.sort_by(|a, b| {
        a.extent
            .count_ones(..)
            .cmp(&b.extent.count_ones(..))
            .then_with(|| a.extent.ones().cmp(b.extent.ones()))
    });
    let k = list.len();
    let up: Vec<Subset> = list
        .iter()
        .map(|a| {
            let mut row = Subset::with_capacity(k);
            for (j, b) in list.iter().enumerate() {
                if a.extent.is_subset(&b.extent) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let names = list.iter().map(|c| ctx.format_concept(c)).collect();
    let lattice = FiniteLattice::from_up_rows("concepts", names, up)
        .map_err(|e| Error::InvariantViolation(format!("concept order is not a lattice: {e}")))?;
    let by_extent = list.iter().enumerate().map(|(i, c)| (c.extent.clone(), i)).collect();
    Ok(ConceptLattice { context: ctx.clone(), concepts: list, lattice, by_extent })
}

/// The context `(P, P, <=)` of a finite order.
pub fn order_context<P: FiniteOrder + ?Sized>(p: &P) -> FormalContext {
    let n = p.size();
    let names: Vec<String> = (0..n).map(|x| p.label(x).to_string()).collect();
    let rows = (0..n)
        .map(|x| {
            let mut r = Subset::with_capacity(n);
            for y in 0..n {
                if p.le(x, y) {
                    r.insert(y);
                }
            }
            r
        })
        .collect();
    FormalContext::new(names.clone(), names, rows).expect("square context")
}

/// Dedekind–MacNeille completion, realised as the concept lattice of
/// `(P, P, <=)`.
pub fn dm_completion<P: FiniteOrder + ?Sized>(p: &P) -> Result<ConceptLattice> {
    concepts(&order_context(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::named;
    use crate::order::{subset, Poset};

    fn r1(c3: &FiniteLattice) -> Relation {
        let mut r = Relation::order(c3);
        r.insert(1, 0);
        r
    }

    #[test]
    fn derivation_examples() {
        let c3 = named::chain(3);
        let k = FormalContext::from_relation(&c3, &Relation::order(&c3)).unwrap();
        assert_eq!(k.derive_intent(&subset(3, [])), subset(3, [0, 1, 2]));
        assert_eq!(k.derive_intent(&subset(3, [1])), subset(3, [1, 2]));
        let k1 = FormalContext::from_relation(&c3, &r1(&c3)).unwrap();
        assert_eq!(k1.derive_intent(&subset(3, [1])), subset(3, [0, 1, 2]));
    }

    #[test]
    fn galois_laws_exhaustive_on_small_context() {
        let c3 = named::chain(3);
        let k = FormalContext::from_relation(&c3, &r1(&c3)).unwrap();
        for mask in 0..8usize {
            let a = subset(3, (0..3).filter(|i| mask >> i & 1 == 1));
            let ai = k.derive_intent(&a);
            let aii = k.derive_extent(&ai);
            assert!(a.is_subset(&aii));
            assert_eq!(k.derive_intent(&aii), ai);
            let bii = k.derive_intent(&k.derive_extent(&a));
            assert!(a.is_subset(&bii));
        }
    }

    #[test]
    fn full_context_has_one_concept() {
        let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let k = FormalContext::new(names.clone(), names, vec![subset(2, [0, 1]), subset(2, [0, 1])]).unwrap();
        let cl = concepts(&k).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl.concepts[0], Concept { extent: subset(2, [0, 1]), intent: subset(2, [0, 1]) });
    }

    #[test]
    fn relation_context_has_two_concepts() {
        let c3 = named::chain(3);
        let cl = concepts(&FormalContext::from_relation(&c3, &r1(&c3)).unwrap()).unwrap();
        assert_eq!(
            cl.concepts,
            vec![
                Concept { extent: subset(3, [0, 1]), intent: subset(3, [0, 1, 2]) },
                Concept { extent: subset(3, [0, 1, 2]), intent: subset(3, [2]) },
            ]
        );
        assert!(cl.join_meet_violation().is_none());
        assert!(cl.density_violation().is_none());
    }

    #[test]
    fn order_context_of_chain() {
        let c3 = named::chain(3);
        let cl = concepts(&order_context(&c3)).unwrap();
        assert_eq!(cl.len(), 3);
        assert!(are_isomorphic(&cl.lattice, &c3).is_some());
    }

    #[test]
    fn gamma_mu_examples() {
        let c3 = named::chain(3);
        let k = order_context(&c3);
        assert_eq!(gamma(&k, 1), Concept { extent: subset(3, [0, 1]), intent: subset(3, [1, 2]) });

        let k1 = FormalContext::from_relation(&c3, &r1(&c3)).unwrap();
        let expect = Concept { extent: subset(3, [0, 1]), intent: subset(3, [0, 1, 2]) };
        assert_eq!(gamma(&k1, 0), expect);
        assert_eq!(gamma(&k1, 1), expect);

        let one = FormalContext::new(vec!["g".into()], vec!["m".into()], vec![subset(1, [0])]).unwrap();
        let cl = concepts(&one).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(gamma(&one, 0), mu(&one, 0));
        assert_eq!(gamma(&one, 0), cl.concepts[0]);
    }

    #[test]
    fn dm_examples() {
        for lat in [named::chain(3), named::boolean(2)] {
            let dm = dm_completion(&lat).unwrap();
            assert!(are_isomorphic(&dm.lattice, &lat).is_some());
        }
        let antichain = Poset::antichain(vec!["a".into(), "b".into()]).unwrap();
        let dm = dm_completion(&antichain).unwrap();
        assert_eq!(dm.len(), 4);
        assert!(are_isomorphic(&dm.lattice, &named::boolean(2)).is_some());
    }

    #[test]
    fn size_bound() {
        let b3 = named::boolean(3);
        let k = order_context(&b3);
        assert_eq!(concepts_bounded(&k, 10).unwrap_err(), Error::SizeBound { size: 64, bound: 10 });
    }

    #[test]
    fn context_dimension_errors() {
        assert!(FormalContext::new(vec!["g".into()], vec!["m".into()], vec![]).is_err());
        assert!(FormalContext::new(vec!["g".into()], vec!["m".into()], vec![subset(2, [])]).is_err());
    }
}
