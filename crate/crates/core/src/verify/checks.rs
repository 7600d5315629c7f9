//! The registered property checks.
//!
//! Each check runs over one lattice and every tolerance (or relation tuple)
//! it needs, and reports how many instances it evaluated plus a witness for
//! every failing instance.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blocks::{blocks, factor_lattice, Block};
use crate::error::Error;
use crate::fca::{
    block_concept_correspondence, concepts, delta_embedding, dm_completion, tolerance_context,
    verify_factor_isomorphism, FormalContext,
};
use crate::iso::are_isomorphic;
use crate::lattice::FiniteLattice;
use crate::order::Subset;
use crate::relation::{alpha, beta, join_endomorphisms, sandwich, Relation};

macro_rules! checks {
    ($($variant:ident => $id:literal, $about:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId { $($variant),* }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $(CheckId::$variant => $id),* }
            }

            pub fn description(self) -> &'static str {
                match self { $(CheckId::$variant => $about),* }
            }
        }

        impl FromStr for CheckId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $($id => Ok(CheckId::$variant),)*
                    other => Err(Error::UnknownCheckId(other.to_string())),
                }
            }
        }
    };
}

checks! {
    LatticeLaws => "lattice-laws", "join/meet tables are commutative, absorptive, least/greatest bounds; covers are the transitive reduction";
    ConvexDecomposition => "convex-decomposition", "every convex sublattice C equals (C] ∩ [C) and its interval hull";
    IsoEquivalence => "iso-equivalence", "isomorphism test is reflexive and symmetric and finds relabelled copies";
    UnitLaw => "unit-law", "<= is a two-sided unit for every reflexive weak ordered relation";
    CompositionClosed => "composition-closed", "composition of reflexive weak ordered relations is weak ordered";
    CompositionAssociative => "composition-associative", "relational composition is associative";
    Distributivity => "distributivity", "composition distributes over intersection from both sides on ReWOR";
    IntersectionClosed => "intersection-closed", "weak ordered relations are closed under intersection";
    ReCompositionIntersection => "re-composition-intersection", "(R1.R2) ∩ S ⊆ (R1 ∩ S).(R2 ∩ S) on compatible reflexive relations";
    ReDistributivity => "re-distributivity", "composition distributes over intersection on compatible reflexive relations";
    ToleranceLowerPart => "tolerance-lower-part", "tolerances are determined by their intersection with <=";
    ReworContainsOrder => "rewor-contains-order", "every S in ReWOR contains <= and <=.S⁻¹ = S⁻¹.<= = full";
    BetaInRewor => "beta-in-rewor", "<=.T.<= is a reflexive weak ordered relation";
    ToleranceRecovery => "tolerance-recovery", "T = (<=.T.<=) ∩ (>=.T.>=)";
    AlphaBetaInverse => "alpha-beta-inverse", "alpha and beta are mutually inverse order-isomorphisms between Tol and ReWOR";
    ReworRepresentation => "rewor-representation", "R = <=.(R ∩ R⁻¹).<= for every R in ReWOR";
    WorCompatible => "wor-compatible", "every weak ordered relation is compatible";
    JoinEndomorphismWor => "join-endomorphism-wor", "{(x,y) : f(x) <= y} is weak ordered for every join-endomorphism f";
    CharacterizationAgreement => "characterization-agreement", "axiom checker and fixed-point characterization agree on reflexive weak ordered relations";
    EnumerationOracle => "enumeration-oracle", "Tol and ReWOR enumeration match brute-force filtering (n <= 5)";
    BlocksConvex => "blocks-convex", "blocks are maximal preblocks, convex sublattices, intervals, and (C] ∩ [C)";
    BlocksCover => "blocks-cover", "every element lies in some block";
    FactorOrder => "factor-order", "distinct blocks have distinct ideals and (B] ⊆ (C] iff [B) ⊇ [C)";
    FactorLattice => "factor-lattice", "blocks form a lattice with [B1) ∩ [B2) = [B1 v B2) and (B1] ∩ (B2] = (B1 ^ B2]";
    CongruenceQuotient => "congruence-quotient", "for transitive tolerances blocks partition L and order as the quotient";
    BlockMonotone => "block-monotone", "T1 ⊆ T2 puts every block of T1 inside a block of T2";
    GaloisLaws => "galois-laws", "derivation operators form a Galois connection";
    ConceptDensity => "concept-density", "each concept is the join of its object concepts and the meet of its attribute concepts";
    ExtentsIdeals => "extents-ideals", "extents are ideals and intents filters in contexts of weak ordered relations";
    BlockConceptBijection => "block-concept-bijection", "blocks correspond to concepts with nonempty A ∩ B";
    DeltaEmbedding => "delta-embedding", "C -> ((C],[C)) is a lattice embedding";
    DeltaDensity => "delta-density", "block images are supremum- and infimum-dense and reflect the block order";
    FactorConceptIsomorphism => "factor-concept-isomorphism", "L/T and DM(L/T) are isomorphic to the concept lattice of (L, L, <=.T.<=)";
    DmFixedPoint => "dm-fixed-point", "Dedekind–MacNeille completion of a finite lattice is isomorphic to it";
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sampling parameters shared by all checks.
#[derive(Debug, Clone)]
pub struct Sampling {
    pub seed: u64,
    /// Lattices up to this size get exhaustive triple checks.
    pub exhaustive_max_n: usize,
    /// Associativity is exhaustive only up to this size.
    pub associativity_max_n: usize,
    pub sample_triples: usize,
    pub random_relations: usize,
    pub galois_samples: usize,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            seed: 0x5eed,
            exhaustive_max_n: 5,
            associativity_max_n: 4,
            sample_triples: 200,
            random_relations: 1000,
            galois_samples: 20,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub instances: usize,
    pub failures: Vec<(Option<usize>, String)>,
}

impl Outcome {
    fn record(&mut self, ok: bool, tolerance: Option<usize>, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push((tolerance, witness()));
        }
    }
}

/// Everything a check may need about one lattice, computed once.
pub struct LatticeCase<'a> {
    pub lat: &'a FiniteLattice,
    pub tolerances: Vec<Relation>,
    pub rewor: Vec<Relation>,
    le: Relation,
    ge: Relation,
    sampling: &'a Sampling,
    salt: u64,
}

impl<'a> LatticeCase<'a> {
    pub fn new(lat: &'a FiniteLattice, sampling: &'a Sampling, salt: u64) -> crate::Result<Self> {
        let tolerances = crate::tolerance::enumerate_tolerances(lat)?;
        let rewor = crate::tolerance::enumerate_rewor(lat)?;
        Ok(LatticeCase {
            lat,
            tolerances,
            rewor,
            le: Relation::order(lat),
            ge: Relation::reverse_order(lat),
            sampling,
            salt,
        })
    }

    fn rng(&self, check: CheckId) -> ChaCha8Rng {
        let idx = CheckId::ALL.iter().position(|&c| c == check).unwrap_or(0) as u64;
        ChaCha8Rng::seed_from_u64(self.sampling.seed ^ (self.salt << 20) ^ idx.wrapping_mul(0x9e37_79b9))
    }

    fn exhaustive(&self) -> bool {
        self.lat.n() <= self.sampling.exhaustive_max_n
    }

    /// All index triples when `exhaustive`, otherwise a seeded sample.
    fn triples(&self, len: usize, exhaustive: bool, rng: &mut ChaCha8Rng) -> Vec<(usize, usize, usize)> {
        if len == 0 {
            return Vec::new();
        }
        if exhaustive {
            (0..len)
                .flat_map(|a| (0..len).flat_map(move |b| (0..len).map(move |c| (a, b, c))))
                .collect()
        } else {
            (0..self.sampling.sample_triples)
                .map(|_| (rng.random_range(0..len), rng.random_range(0..len), rng.random_range(0..len)))
                .collect()
        }
    }

    fn pairs(&self, len: usize, exhaustive: bool, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
        if exhaustive {
            (0..len).flat_map(|a| (0..len).map(move |b| (a, b))).collect()
        } else {
            (0..self.sampling.sample_triples * 10)
                .map(|_| (rng.random_range(0..len), rng.random_range(0..len)))
                .collect()
        }
    }

    fn fmt(&self, r: &Relation) -> String {
        r.format_pairs(self.lat)
    }

    /// Weak ordered relations available without search: ReWOR, the empty
    /// relation, and one relation per join-endomorphism.
    fn wor_pool(&self) -> Vec<Relation> {
        let mut pool = self.rewor.clone();
        pool.push(Relation::empty(self.lat.n()));
        pool.extend(join_endomorphisms(self.lat).iter().map(|f| f.weak_ordered_relation()));
        pool.sort();
        pool.dedup();
        pool
    }

    /// Triples of compatible reflexive relations. The pool starts with
    /// tolerances and ReWOR (all triples when exhaustive) and is extended by
    /// compositions of tolerance pairs, which are only sampled.
    fn re_triples(&self, rng: &mut ChaCha8Rng) -> (Vec<Relation>, Vec<(usize, usize, usize)>) {
        let mut pool = self.tolerances.clone();
        pool.extend(self.rewor.iter().cloned());
        pool.sort();
        pool.dedup();
        let base = pool.len();
        let mut triples = if self.exhaustive() { self.triples(base, true, rng) } else { Vec::new() };
        for a in &self.tolerances {
            for b in &self.tolerances {
                let ab = a.compose(b).expect("same size");
                if !pool.contains(&ab) {
                    pool.push(ab);
                }
            }
        }
        triples.extend(self.triples(pool.len(), false, rng));
        (pool, triples)
    }

    pub fn run(&self, check: CheckId) -> Outcome {
        let mut out = Outcome::default();
        let mut rng = self.rng(check);
        match check {
            CheckId::LatticeLaws => self.lattice_laws(&mut out),
            CheckId::ConvexDecomposition => self.convex_decomposition(&mut out),
            CheckId::IsoEquivalence => self.iso_equivalence(&mut out, &mut rng),
            CheckId::UnitLaw => {
                for r in &self.rewor {
                    let ok = self.le.compose(r).ok().as_ref() == Some(r) && r.compose(&self.le).ok().as_ref() == Some(r);
                    out.record(ok, None, || format!("R = {}", self.fmt(r)));
                }
            }
            CheckId::CompositionClosed => {
                for r in &self.rewor {
                    for s in &self.rewor {
                        let rs = r.compose(s).expect("same size");
                        out.record(rs.is_weak_ordered(self.lat), None, || {
                            format!("R = {}, S = {}", self.fmt(r), self.fmt(s))
                        });
                    }
                }
            }
            CheckId::CompositionAssociative => {
                let mut pool = self.rewor.clone();
                pool.extend(self.tolerances.iter().cloned());
                let exhaustive = self.lat.n() <= self.sampling.associativity_max_n;
                for (a, b, c) in self.triples(pool.len(), exhaustive, &mut rng) {
                    let (a, b, c) = (&pool[a], &pool[b], &pool[c]);
                    let left = a.compose(b).and_then(|ab| ab.compose(c));
                    let right = b.compose(c).and_then(|bc| a.compose(&bc));
                    out.record(left == right, None, || {
                        format!("{} . {} . {}", self.fmt(a), self.fmt(b), self.fmt(c))
                    });
                }
            }
            CheckId::Distributivity => {
                for (i, j, k) in self.triples(self.rewor.len(), self.exhaustive(), &mut rng) {
                    let (r1, r2, s) = (&self.rewor[i], &self.rewor[j], &self.rewor[k]);
                    let meet = r1.intersect(r2).expect("same size");
                    let d1 = meet.compose(s).ok() == r1.compose(s).and_then(|a| a.intersect(&r2.compose(s)?)).ok();
                    let d2 = s.compose(&meet).ok() == s.compose(r1).and_then(|a| a.intersect(&s.compose(r2)?)).ok();
                    out.record(d1 && d2, None, || {
                        format!("R1 = {}, R2 = {}, S = {} (left {d1}, right {d2})", self.fmt(r1), self.fmt(r2), self.fmt(s))
                    });
                }
            }
            CheckId::IntersectionClosed => {
                let pool = self.wor_pool();
                for (i, j) in self.pairs(pool.len(), self.exhaustive(), &mut rng) {
                    let m = pool[i].intersect(&pool[j]).expect("same size");
                    out.record(m.is_weak_ordered(self.lat), None, || {
                        format!("{} ∩ {}", self.fmt(&pool[i]), self.fmt(&pool[j]))
                    });
                }
            }
            CheckId::ReCompositionIntersection => {
                let (pool, triples) = self.re_triples(&mut rng);
                for (i, j, k) in triples {
                    let (r1, r2, s) = (&pool[i], &pool[j], &pool[k]);
                    let left = r1.compose(r2).and_then(|x| x.intersect(s)).expect("same size");
                    let right = r1
                        .intersect(s)
                        .and_then(|a| a.compose(&r2.intersect(s)?))
                        .expect("same size");
                    out.record(left.is_subset(&right), None, || {
                        format!("R1 = {}, R2 = {}, S = {}", self.fmt(r1), self.fmt(r2), self.fmt(s))
                    });
                }
            }
            CheckId::ReDistributivity => {
                let (pool, triples) = self.re_triples(&mut rng);
                for (i, j, k) in triples {
                    let (r1, r2, s) = (&pool[i], &pool[j], &pool[k]);
                    let meet = r1.intersect(r2).expect("same size");
                    let left_ok = meet.compose(s).ok() == r1.compose(s).and_then(|a| a.intersect(&r2.compose(s)?)).ok();
                    let right_ok = s.compose(&meet).ok() == s.compose(r1).and_then(|a| a.intersect(&s.compose(r2)?)).ok();
                    out.record(left_ok && right_ok, None, || {
                        format!("R1 = {}, R2 = {}, S = {}", self.fmt(r1), self.fmt(r2), self.fmt(s))
                    });
                }
            }
            CheckId::ToleranceLowerPart => {
                let lower: Vec<Relation> =
                    self.tolerances.iter().map(|t| t.intersect(&self.le).expect("same size")).collect();
                for i in 0..self.tolerances.len() {
                    for j in 0..self.tolerances.len() {
                        let ok = (self.tolerances[i] == self.tolerances[j]) == (lower[i] == lower[j]);
                        out.record(ok, Some(i), || format!("tolerances #{i} and #{j}"));
                    }
                }
            }
            CheckId::ReworContainsOrder => {
                let full = Relation::full(self.lat.n());
                for s in &self.rewor {
                    let inv = s.inverse();
                    let ok = self.le.is_subset(s)
                        && self.le.compose(&inv).ok().as_ref() == Some(&full)
                        && inv.compose(&self.le).ok().as_ref() == Some(&full);
                    out.record(ok, None, || format!("S = {}", self.fmt(s)));
                }
            }
            CheckId::BetaInRewor => {
                for (i, t) in self.tolerances.iter().enumerate() {
                    let ok = beta(self.lat, t)
                        .map(|r| r.is_rewor(self.lat) && r.is_rewor_by_characterization(self.lat))
                        .unwrap_or(false);
                    out.record(ok, Some(i), || format!("T = {}", self.fmt(t)));
                }
            }
            CheckId::ToleranceRecovery => {
                for (i, t) in self.tolerances.iter().enumerate() {
                    let up = sandwich(self.lat, t).expect("same size");
                    let down = self.ge.compose(t).and_then(|x| x.compose(&self.ge)).expect("same size");
                    let ok = up.intersect(&down).ok().as_ref() == Some(t);
                    out.record(ok, Some(i), || format!("T = {}", self.fmt(t)));
                }
            }
            CheckId::AlphaBetaInverse => self.alpha_beta(&mut out),
            CheckId::ReworRepresentation => {
                for r in &self.rewor {
                    let core = r.intersect(&r.inverse()).expect("same size");
                    let ok = sandwich(self.lat, &core).ok().as_ref() == Some(r);
                    out.record(ok, None, || format!("R = {}", self.fmt(r)));
                }
            }
            CheckId::WorCompatible => {
                for r in self.wor_pool() {
                    out.record(r.is_compatible(self.lat), None, || format!("R = {}", self.fmt(&r)));
                }
            }
            CheckId::JoinEndomorphismWor => {
                for f in join_endomorphisms(self.lat) {
                    let r = f.weak_ordered_relation();
                    out.record(r.is_weak_ordered(self.lat), None, || {
                        let map: Vec<&str> = (0..self.lat.n()).map(|x| self.lat.names()[f.apply(x)].as_str()).collect();
                        format!("f = {map:?}")
                    });
                }
            }
            CheckId::CharacterizationAgreement => self.characterization(&mut out, &mut rng),
            CheckId::EnumerationOracle => self.enumeration_oracle(&mut out),
            CheckId::BlocksConvex => self.blocks_convex(&mut out),
            CheckId::BlocksCover => {
                for (i, t) in self.tolerances.iter().enumerate() {
                    let ok = match blocks(self.lat, t) {
                        Ok(bs) => (0..self.lat.n()).all(|x| bs.iter().any(|b| b.contains(x))),
                        Err(_) => false,
                    };
                    out.record(ok, Some(i), || format!("T = {}", self.fmt(t)));
                }
            }
            CheckId::FactorOrder => self.factor_order(&mut out),
            CheckId::FactorLattice => self.factor_lattice_check(&mut out),
            CheckId::CongruenceQuotient => self.congruence_quotient(&mut out),
            CheckId::BlockMonotone => self.block_monotone(&mut out),
            CheckId::GaloisLaws => self.galois_laws(&mut out, &mut rng),
            CheckId::ConceptDensity => {
                for (i, t) in self.tolerances.iter().enumerate() {
                    let res = tolerance_context(self.lat, t).and_then(|k| concepts(&k));
                    let witness = match res {
                        Ok(cl) => match (cl.density_violation(), cl.join_meet_violation()) {
                            (None, None) => None,
                            (Some(c), _) => Some(format!("concept {} not dense-generated", cl.label(c))),
                            (_, Some((a, b))) => Some(format!("join/meet of {} and {}", cl.label(a), cl.label(b))),
                        },
                        Err(e) => Some(e.to_string()),
                    };
                    out.record(witness.is_none(), Some(i), || witness.unwrap_or_default());
                }
            }
            CheckId::ExtentsIdeals => self.extents_ideals(&mut out, &mut rng),
            CheckId::BlockConceptBijection => {
                for (i, t) in self.tolerances.iter().enumerate() {
                    let res = block_concept_correspondence(self.lat, t).and_then(|c| {
                        let nonempty = c.concept_to_block.iter().filter(|b| b.is_some()).count();
                        if nonempty == c.factor.len() {
                            Ok(())
                        } else {
                            Err(Error::CorrespondenceViolation(format!(
                                "{} blocks but {nonempty} concepts with A ∩ B nonempty",
                                c.factor.len()
                            )))
                        }
                    });
                    out.record(res.is_ok(), Some(i), || res.unwrap_err().to_string());
                }
            }
            CheckId::DeltaEmbedding => {
                for (i, t) in self.tolerances.iter().enumerate() {
                    let res = delta_embedding(self.lat, t);
                    out.record(res.is_ok(), Some(i), || res.unwrap_err().to_string());
                }
            }
            CheckId::DeltaDensity => {
                for (i, t) in self.tolerances.iter().enumerate() {
                    let witness = match verify_factor_isomorphism(self.lat, t) {
                        Ok(r) if r.supremum_dense && r.infimum_dense && r.order_equivalent => None,
                        Ok(r) => Some(r.failures().join("; ")),
                        Err(e) => Some(e.to_string()),
                    };
                    out.record(witness.is_none(), Some(i), || witness.unwrap_or_default());
                }
            }
            CheckId::FactorConceptIsomorphism => {
                for (i, t) in self.tolerances.iter().enumerate() {
                    let witness = match verify_factor_isomorphism(self.lat, t) {
                        Ok(r) if r.dm_to_concepts.is_some() && r.factor_to_concepts.is_some() => None,
                        Ok(r) => Some(format!(
                            "|L/T| = {}, concepts = {}: {}",
                            r.factor_size,
                            r.concept_count,
                            r.failures().join("; ")
                        )),
                        Err(e) => Some(e.to_string()),
                    };
                    out.record(witness.is_none(), Some(i), || witness.unwrap_or_default());
                }
            }
            CheckId::DmFixedPoint => {
                let ok = dm_completion(self.lat).map(|dm| are_isomorphic(&dm.lattice, self.lat).is_some());
                out.record(ok == Ok(true), None, || "DM(L) not isomorphic to L".into());
                for (i, t) in self.tolerances.iter().enumerate() {
                    let ok = factor_lattice(self.lat, t).and_then(|f| {
                        Ok(are_isomorphic(&dm_completion(&f.lattice)?.lattice, &f.lattice).is_some())
                    });
                    out.record(ok == Ok(true), Some(i), || "DM(L/T) not isomorphic to L/T".into());
                }
            }
        }
        out
    }

    fn lattice_laws(&self, out: &mut Outcome) {
        let lat = self.lat;
        let n = lat.n();
        for x in 0..n {
            for y in 0..n {
                let (j, m) = (lat.join(x, y), lat.meet(x, y));
                let ok = j == lat.join(y, x)
                    && m == lat.meet(y, x)
                    && lat.meet(x, lat.join(x, y)) == x
                    && lat.join(x, lat.meet(x, y)) == x
                    && lat.leq(x, y) == (j == y)
                    && lat.leq(x, y) == (m == x)
                    && lat.leq(x, j)
                    && lat.leq(y, j)
                    && lat.leq(m, x)
                    && lat.leq(m, y)
                    && (0..n).all(|z| !(lat.leq(x, z) && lat.leq(y, z)) || lat.leq(j, z))
                    && (0..n).all(|z| !(lat.leq(z, x) && lat.leq(z, y)) || lat.leq(z, m));
                out.record(ok, None, || format!("x = {}, y = {}", lat.names()[x], lat.names()[y]));
            }
        }
        let mut reduction = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && lat.leq(x, y) && !(0..n).any(|z| z != x && z != y && lat.leq(x, z) && lat.leq(z, y)) {
                    reduction.push((x, y));
                }
            }
        }
        let mut covers = lat.covers().to_vec();
        covers.sort();
        out.record(covers == reduction, None, || "covers differ from transitive reduction".into());
    }

    fn convex_decomposition(&self, out: &mut Outcome) {
        let lat = self.lat;
        let n = lat.n();
        for mask in 1u32..(1 << n) {
            let c = lat.subset((0..n).filter(|i| mask >> i & 1 == 1));
            if !lat.is_convex_sublattice(&c).unwrap_or(false) {
                continue;
            }
            let mut both = lat.down_set(&c).expect("nonempty").members;
            both.intersect_with(&lat.up_set(&c).expect("nonempty").members);
            let (lo, hi) = lat.interval_hull(&c).expect("nonempty");
            let ok = both == c && lat.interval(lo, hi) == c;
            out.record(ok, None, || format!("C = {}", lat.format_subset(&c)));
        }
    }

    fn iso_equivalence(&self, out: &mut Outcome, rng: &mut ChaCha8Rng) {
        let lat = self.lat;
        let n = lat.n();
        out.record(are_isomorphic(lat, lat).is_some(), None, || "not isomorphic to itself".into());
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        // element x of the copy is element perm[x] of lat
        let names = perm.iter().map(|&p| format!("{}'", lat.names()[p])).collect();
        let up = perm
            .iter()
            .map(|&p| {
                let mut r = Subset::with_capacity(n);
                for (y, &q) in perm.iter().enumerate() {
                    if lat.leq(p, q) {
                        r.insert(y);
                    }
                }
                r
            })
            .collect();
        match FiniteLattice::from_up_rows("copy", names, up) {
            Ok(copy) => {
                out.record(are_isomorphic(lat, &copy).is_some(), None, || format!("relabelling {perm:?} missed"));
                out.record(are_isomorphic(&copy, lat).is_some(), None, || format!("relabelling {perm:?} missed (reverse)"));
            }
            Err(e) => out.record(false, None, || format!("relabelled copy rejected: {e}")),
        }
    }

    fn alpha_beta(&self, out: &mut Outcome) {
        let lat = self.lat;
        let images: Vec<Option<Relation>> = self.tolerances.iter().map(|t| beta(lat, t).ok()).collect();
        for (i, t) in self.tolerances.iter().enumerate() {
            let back = images[i].as_ref().and_then(|r| alpha(lat, r).ok());
            out.record(back.as_ref() == Some(t), Some(i), || format!("alpha(beta(T)) != T for T = {}", self.fmt(t)));
        }
        let cores: Vec<Option<Relation>> = self.rewor.iter().map(|r| alpha(lat, r).ok()).collect();
        for (r, core) in self.rewor.iter().zip(&cores) {
            let back = core.as_ref().and_then(|t| beta(lat, t).ok());
            out.record(back.as_ref() == Some(r), None, || format!("beta(alpha(R)) != R for R = {}", self.fmt(r)));
        }
        out.record(self.tolerances.len() == self.rewor.len(), None, || {
            format!("|Tol| = {}, |ReWOR| = {}", self.tolerances.len(), self.rewor.len())
        });
        let mut image_set: Vec<Relation> = images.iter().flatten().cloned().collect();
        image_set.sort();
        image_set.dedup();
        out.record(image_set == self.rewor, None, || "beta(Tol) differs from ReWOR".into());
        for i in 0..self.tolerances.len() {
            for j in 0..self.tolerances.len() {
                let (Some(bi), Some(bj)) = (&images[i], &images[j]) else { continue };
                let ok = self.tolerances[i].is_subset(&self.tolerances[j]) == bi.is_subset(bj);
                out.record(ok, Some(i), || format!("beta does not preserve/reflect order at #{i} ⊆ #{j}"));
            }
        }
        for i in 0..self.rewor.len() {
            for j in 0..self.rewor.len() {
                let (Some(ai), Some(aj)) = (&cores[i], &cores[j]) else { continue };
                let ok = self.rewor[i].is_subset(&self.rewor[j]) == ai.is_subset(aj);
                out.record(ok, None, || format!("alpha does not preserve/reflect order at R#{i} ⊆ R#{j}"));
            }
        }
    }

    fn characterization(&self, out: &mut Outcome, rng: &mut ChaCha8Rng) {
        let lat = self.lat;
        let n = lat.n();
        let mut pool = self.wor_pool();
        pool.extend(self.tolerances.iter().cloned());
        pool.extend([Relation::identity(n), Relation::full(n), self.le.clone(), self.ge.clone()]);
        for k in 0..self.sampling.random_relations {
            let r = match k % 3 {
                0 => {
                    let density: f64 = rng.random_range(0.2..0.9);
                    Relation::from_pairs(n, (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|_| rng.random_bool(density)).collect::<Vec<_>>())
                }
                1 if !self.rewor.is_empty() => {
                    let mut r = self.rewor[rng.random_range(0..self.rewor.len())].clone();
                    let (x, y) = (rng.random_range(0..n), rng.random_range(0..n));
                    if r.contains(x, y) {
                        r.remove(x, y);
                    } else {
                        r.insert(x, y);
                    }
                    r
                }
                _ => {
                    let seed = Relation::from_pairs(n, [(rng.random_range(0..n), rng.random_range(0..n))]);
                    sandwich(lat, &seed.reflexive_closure()).expect("same size")
                }
            };
            pool.push(r);
        }
        for r in &pool {
            let by_axioms = r.is_reflexive() && r.is_weak_ordered(lat);
            let by_fixpoint = r.is_rewor_by_characterization(lat);
            out.record(by_axioms == by_fixpoint, None, || {
                format!("R = {} (axioms {by_axioms}, characterization {by_fixpoint})", self.fmt(r))
            });
        }
    }

    fn enumeration_oracle(&self, out: &mut Outcome) {
        let lat = self.lat;
        let n = lat.n();
        if n > 5 {
            return;
        }
        let upper: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut brute_tol = Vec::new();
        for mask in 0u64..(1 << upper.len()) {
            let r = Relation::from_pairs(n, upper.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p))
                .symmetric_reflexive_closure();
            if r.is_compatible(lat) {
                brute_tol.push(r);
            }
        }
        brute_tol.sort();
        out.record(brute_tol == self.tolerances, None, || {
            format!("brute force finds {} tolerances, enumeration {}", brute_tol.len(), self.tolerances.len())
        });

        // Any reflexive R with <=.R.<= = R contains <=.Δ.<= = <=, so only
        // supersets of <= need to be filtered.
        let free: Vec<(usize, usize)> =
            (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| !lat.leq(x, y)).collect();
        let mut brute_rewor = Vec::new();
        for mask in 0u64..(1 << free.len()) {
            let mut r = self.le.clone();
            for (i, &(x, y)) in free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    r.insert(x, y);
                }
            }
            if r.is_rewor_by_characterization(lat) {
                brute_rewor.push(r);
            }
        }
        brute_rewor.sort();
        out.record(brute_rewor == self.rewor, None, || {
            format!("brute force finds {} ReWOR members, enumeration {}", brute_rewor.len(), self.rewor.len())
        });
    }

    fn blocks_convex(&self, out: &mut Outcome) {
        let lat = self.lat;
        for (i, t) in self.tolerances.iter().enumerate() {
            let bs = match blocks(lat, t) {
                Ok(bs) => bs,
                Err(e) => {
                    out.record(false, Some(i), || e.to_string());
                    continue;
                }
            };
            for b in &bs {
                let mut both = b.ideal.clone();
                both.intersect_with(&b.filter);
                let preblock = b.members.ones().all(|x| b.members.ones().all(|y| t.contains(x, y)));
                let maximal = (0..lat.n()).all(|v| b.contains(v) || b.members.ones().any(|x| !t.contains(v, x)));
                let ok = preblock
                    && maximal
                    && lat.is_convex_sublattice(&b.members).unwrap_or(false)
                    && lat.interval(b.bottom, b.top) == b.members
                    && both == b.members
                    && lat.ideal_generated(&b.members).ok().as_ref() == Some(&b.ideal)
                    && lat.filter_generated(&b.members).ok().as_ref() == Some(&b.filter);
                out.record(ok, Some(i), || format!("block {}", lat.format_subset(&b.members)));
            }
        }
    }

    fn factor_order(&self, out: &mut Outcome) {
        for (i, t) in self.tolerances.iter().enumerate() {
            let f = match factor_lattice(self.lat, t) {
                Ok(f) => f,
                Err(e) => {
                    out.record(false, Some(i), || e.to_string());
                    continue;
                }
            };
            for (a, b) in f.blocks.iter().enumerate() {
                for (c, d) in f.blocks.iter().enumerate() {
                    let by_ideal = b.ideal.is_subset(&d.ideal);
                    let by_filter = d.filter.is_subset(&b.filter);
                    let distinct = a == c || b.ideal != d.ideal;
                    let ok = distinct && by_ideal == by_filter && by_ideal == f.leq(a, c);
                    out.record(ok, Some(i), || {
                        format!("blocks {} and {}", b.label(self.lat), d.label(self.lat))
                    });
                }
            }
        }
    }

    fn factor_lattice_check(&self, out: &mut Outcome) {
        for (i, t) in self.tolerances.iter().enumerate() {
            let f = match factor_lattice(self.lat, t) {
                Ok(f) => f,
                Err(e) => {
                    out.record(false, Some(i), || e.to_string());
                    continue;
                }
            };
            let k = f.len();
            for a in 0..k {
                for b in 0..k {
                    let (e, m) = (f.lattice.join(a, b), f.lattice.meet(a, b));
                    let mut filters = f.blocks[a].filter.clone();
                    filters.intersect_with(&f.blocks[b].filter);
                    let mut ideals = f.blocks[a].ideal.clone();
                    ideals.intersect_with(&f.blocks[b].ideal);
                    let mut union = f.blocks[a].members.clone();
                    union.union_with(&f.blocks[b].members);
                    let union_ideal = self.lat.ideal_generated(&union).expect("nonempty");
                    let ok = filters == f.blocks[e].filter
                        && ideals == f.blocks[m].ideal
                        && union_ideal.is_subset(&f.blocks[e].ideal);
                    out.record(ok, Some(i), || format!("blocks #{a} and #{b}"));
                }
            }
        }
    }

    fn congruence_quotient(&self, out: &mut Outcome) {
        for (i, t) in self.tolerances.iter().enumerate() {
            if !t.is_transitive() {
                continue;
            }
            let f = match factor_lattice(self.lat, t) {
                Ok(f) => f,
                Err(e) => {
                    out.record(false, Some(i), || e.to_string());
                    continue;
                }
            };
            let disjoint = f.blocks.iter().enumerate().all(|(a, b)| {
                f.blocks.iter().skip(a + 1).all(|c| b.members.is_disjoint(&c.members))
            });
            out.record(disjoint, Some(i), || "congruence blocks overlap".into());
            for (a, b) in f.blocks.iter().enumerate() {
                for (c, d) in f.blocks.iter().enumerate() {
                    let (x, y) = (b.bottom, d.bottom);
                    let quotient = t.contains(self.lat.join(x, y), y);
                    out.record(quotient == f.leq(a, c), Some(i), || {
                        format!("classes {} and {}", b.label(self.lat), d.label(self.lat))
                    });
                }
            }
        }
    }

    fn block_monotone(&self, out: &mut Outcome) {
        let all: Vec<Option<Vec<Block>>> = self.tolerances.iter().map(|t| blocks(self.lat, t).ok()).collect();
        for (i, t1) in self.tolerances.iter().enumerate() {
            for (j, t2) in self.tolerances.iter().enumerate() {
                if !t1.is_subset(t2) {
                    continue;
                }
                let (Some(b1), Some(b2)) = (&all[i], &all[j]) else {
                    out.record(false, Some(i), || "blocks unavailable".into());
                    continue;
                };
                let ok = b1.iter().all(|b| b2.iter().any(|c| b.members.is_subset(&c.members)));
                out.record(ok, Some(i), || format!("tolerance #{i} ⊆ #{j}"));
            }
        }
    }

    fn galois_laws(&self, out: &mut Outcome, rng: &mut ChaCha8Rng) {
        let n = self.lat.n();
        let mut contexts: Vec<(Option<usize>, FormalContext)> =
            vec![(None, FormalContext::from_relation(self.lat, &self.le).expect("square"))];
        for (i, t) in self.tolerances.iter().enumerate() {
            if let Ok(k) = tolerance_context(self.lat, t) {
                contexts.push((Some(i), k));
            } else {
                out.record(false, Some(i), || "context unavailable".into());
            }
        }
        let random_subset = |rng: &mut ChaCha8Rng| self.lat.subset((0..n).filter(|_| rng.random_bool(0.5)));
        for (tol, k) in &contexts {
            for _ in 0..self.sampling.galois_samples {
                let big = random_subset(rng);
                let small = self.lat.subset(big.ones().filter(|_| rng.random_bool(0.5)));
                let ai = k.derive_intent(&big);
                let aii = k.derive_extent(&ai);
                let bi = k.derive_extent(&big);
                let bii = k.derive_intent(&bi);
                let ok = big.is_subset(&aii)
                    && big.is_subset(&bii)
                    && k.derive_intent(&aii) == ai
                    && k.derive_extent(&bii) == bi
                    && ai.is_subset(&k.derive_intent(&small))
                    && bi.is_subset(&k.derive_extent(&small));
                out.record(ok, *tol, || format!("A = {}", self.lat.format_subset(&big)));
            }
        }
    }

    fn extents_ideals(&self, out: &mut Outcome, rng: &mut ChaCha8Rng) {
        let mut pool = self.wor_pool();
        if !self.exhaustive() && pool.len() > self.sampling.sample_triples {
            pool.shuffle(rng);
            pool.truncate(self.sampling.sample_triples);
        }
        for r in &pool {
            let cl = match FormalContext::from_relation(self.lat, r).and_then(|k| concepts(&k)) {
                Ok(cl) => cl,
                Err(e) => {
                    out.record(false, None, || e.to_string());
                    continue;
                }
            };
            for c in &cl.concepts {
                let ok = self.lat.is_ideal(&c.extent) && self.lat.is_filter(&c.intent);
                out.record(ok, None, || format!("R = {}, concept {}", self.fmt(r), cl.context.format_concept(c)));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for &c in CheckId::ALL {
            assert_eq!(c.as_str().parse::<CheckId>().unwrap(), c);
            assert!(!c.description().is_empty());
        }
        assert_eq!("nope".parse::<CheckId>().unwrap_err(), Error::UnknownCheckId("nope".into()));
    }
}
