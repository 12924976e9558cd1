//! Fully enumerated permutation groups.
//!
//! Elements are stored as one flat image array, sorted lexicographically, so
//! element ids are canonical: the identity is always id 0 and every derived
//! numbering (classes, cosets, orbits) is reproducible.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use crate::classes::ConjClassTable;
use crate::error::{Error, Result};
use crate::par;
use crate::perm::{compose_slices, invert_slice, Permutation};

/// Default cap on the number of elements a closure may enumerate.
pub const DEFAULT_CLOSURE_LIMIT: usize = 2_000_000;

/// Element id within a [`FiniteGroup`].
pub type ElementId = u32;

pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_ids: Vec<ElementId>,
    points: Vec<u32>,
    order: usize,
    classes: OnceLock<ConjClassTable>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Enumerate the group generated by `generators` on `degree` points.
pub fn close_group(degree: usize, generators: &[Permutation], limit: usize) -> Result<FiniteGroup> {
    FiniteGroup::close(degree, generators.to_vec(), limit)
}

impl FiniteGroup {
    pub fn close(degree: usize, generators: Vec<Permutation>, limit: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::BadParameter("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        seen.insert(identity.clone());
        let mut frontier = vec![identity];
        while !frontier.is_empty() {
            let products: Vec<Vec<Vec<u32>>> = par::map_slice(&frontier, |x| {
                generators
                    .iter()
                    .map(|g| compose_slices(x, g.images()))
                    .collect()
            });
            let mut next = Vec::new();
            for y in products.into_iter().flatten() {
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    next.push(y);
                    if seen.len() > limit {
                        return Err(Error::ClosureLimitExceeded { limit });
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Vec<u32>> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self::from_sorted(degree, generators, elements))
    }

    /// Build from an already closed, sorted, duplicate-free element list.
    pub(crate) fn from_sorted(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Vec<u32>>,
    ) -> Self {
        let order = elements.len();
        let mut points = Vec::with_capacity(order * degree);
        for e in &elements {
            points.extend_from_slice(e);
        }
        let mut group = FiniteGroup {
            degree,
            generators,
            generator_ids: Vec::new(),
            points,
            order,
            classes: OnceLock::new(),
        };
        group.generator_ids = group
            .generators
            .iter()
            .map(|g| group.index_of(g.images()).expect("generator is an element"))
            .collect();
        group
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_ids(&self) -> &[ElementId] {
        &self.generator_ids
    }

    #[inline]
    pub fn element(&self, id: ElementId) -> &[u32] {
        let start = id as usize * self.degree;
        &self.points[start..start + self.degree]
    }

    pub fn permutation(&self, id: ElementId) -> Permutation {
        Permutation::from_images_unchecked(self.element(id).to_vec())
    }

    pub fn index_of(&self, images: &[u32]) -> Option<ElementId> {
        if images.len() != self.degree {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.order);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.element(mid as u32).cmp(images) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid as u32),
            }
        }
        None
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p.images()).is_some()
    }

    fn lookup(&self, images: &[u32]) -> ElementId {
        self.index_of(images)
            .expect("group is closed under its operations")
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    /// Product `a·b`, meaning "apply `b`, then `a`".
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.lookup(&compose_slices(self.element(a), self.element(b)))
    }

    pub fn inv(&self, a: ElementId) -> ElementId {
        self.lookup(&invert_slice(self.element(a)))
    }

    /// `s·g·s⁻¹`.
    pub fn conj(&self, g: ElementId, s: ElementId) -> ElementId {
        let gs = self.element(g);
        let ss = self.element(s);
        let mut out = vec![0u32; self.degree];
        for x in 0..self.degree {
            out[ss[x] as usize] = ss[gs[x] as usize];
        }
        self.lookup(&out)
    }

    pub fn pow(&self, a: ElementId, k: i64) -> ElementId {
        let p = self.permutation(a).pow(k);
        self.lookup(p.images())
    }

    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        // [a,b] = a⁻¹ b⁻¹ a b
        let ai = self.inv(a);
        let bi = self.inv(b);
        self.mul(self.mul(ai, bi), self.mul(a, b))
    }

    pub fn element_order(&self, a: ElementId) -> u64 {
        self.permutation(a).order()
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order as u32).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_ids;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn classes(&self) -> &ConjClassTable {
        self.classes.get_or_init(|| ConjClassTable::compute(self))
    }

    /// Minimum centralizer order, `|G| / (largest class size)`.
    pub fn mcs(&self) -> usize {
        self.order / self.classes().max_class_size()
    }

    pub fn center(&self) -> Vec<ElementId> {
        let gens = &self.generator_ids;
        (0..self.order as u32)
            .filter(|&x| gens.iter().all(|&g| self.conj(x, g) == x))
            .collect()
    }

    /// Sorted element ids of the subgroup generated by `gens`.
    pub fn subgroup_closure(&self, gens: &[ElementId]) -> Vec<ElementId> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elements = vec![0u32];
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    elements.push(y);
                    queue.push_back(y);
                }
            }
        }
        elements.sort_unstable();
        elements
    }

    /// Smallest normal subgroup containing `gens`, returned as sorted ids.
    pub fn normal_closure(&self, gens: &[ElementId]) -> Vec<ElementId> {
        self.normal_closure_within(gens, &self.generator_ids)
    }

    /// Normal closure of `gens` under conjugation by `ambient_gens`.
    fn normal_closure_within(&self, gens: &[ElementId], ambient_gens: &[ElementId]) -> Vec<ElementId> {
        let mut gens: Vec<ElementId> = gens.to_vec();
        let mut sub = self.subgroup_closure(&gens);
        loop {
            let mut added = false;
            let snapshot = gens.clone();
            for &h in &snapshot {
                for &s in ambient_gens {
                    let c = self.conj(h, s);
                    if sub.binary_search(&c).is_err() {
                        gens.push(c);
                        sub = self.subgroup_closure(&gens);
                        added = true;
                    }
                }
            }
            if !added {
                return sub;
            }
        }
    }

    /// Greedy generating subset of `ids` and the subgroup it spans.
    pub fn generating_subset(&self, ids: &[ElementId]) -> (Vec<ElementId>, Vec<ElementId>) {
        let mut gens: Vec<ElementId> = Vec::new();
        let mut span = vec![0u32];
        for &x in ids {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.subgroup_closure(&gens);
            }
        }
        (gens, span)
    }

    /// True if the id set is closed under products (hence a subgroup).
    pub fn is_subgroup(&self, ids: &[ElementId]) -> bool {
        let mut sorted = ids.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let (_, span) = self.generating_subset(&sorted);
        span == sorted
    }

    /// True if the sorted subgroup `ids` is invariant under conjugation.
    pub fn is_normal(&self, ids: &[ElementId]) -> bool {
        ids.iter().all(|&n| {
            self.generator_ids
                .iter()
                .all(|&s| ids.binary_search(&self.conj(n, s)).is_ok())
        })
    }

    /// `[G,G]` as sorted ids.
    pub fn derived_subgroup(&self) -> Vec<ElementId> {
        self.derived_of(&self.generator_ids).1
    }

    /// Derived subgroup of `⟨gens⟩`, returned with a generating set.
    fn derived_of(&self, gens: &[ElementId]) -> (Vec<ElementId>, Vec<ElementId>) {
        let mut comms: Vec<ElementId> = Vec::new();
        for &a in gens {
            for &b in gens {
                let c = self.commutator(a, b);
                if c != 0 && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        let elements = self.normal_closure_within(&comms, gens);
        let (sub_gens, _) = self.generating_subset(&elements);
        (sub_gens, elements)
    }

    /// `G = G⁽⁰⁾ ≥ G⁽¹⁾ ≥ …` until the series stabilizes; the first entry is `G`.
    pub fn derived_series(&self) -> Vec<Vec<ElementId>> {
        let mut series = vec![(0..self.order as u32).collect::<Vec<_>>()];
        let mut gens = self.generator_ids.clone();
        loop {
            let (next_gens, next) = self.derived_of(&gens);
            if next.len() == series.last().unwrap().len() {
                return series;
            }
            series.push(next);
            gens = next_gens;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().len() == 1
    }

    /// `G/N` acting on the cosets of `N`.
    pub fn quotient_group(&self, normal: &[ElementId]) -> Result<FiniteGroup> {
        Ok(self.quotient_map(normal)?.group)
    }

    pub fn quotient_map(&self, normal: &[ElementId]) -> Result<QuotientMap> {
        let mut normal = normal.to_vec();
        normal.sort_unstable();
        normal.dedup();
        if !self.is_subgroup(&normal) || !self.is_normal(&normal) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order as u32 {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &n in &normal {
                coset_of[self.mul(n, x) as usize] = c;
            }
        }
        let index = reps.len();
        // g acts as N·x ↦ N·x·g⁻¹, a homomorphism under right-to-left composition.
        let action = |g: ElementId| -> Vec<u32> {
            let gi = self.inv(g);
            reps.iter()
                .map(|&r| coset_of[self.mul(r, gi) as usize])
                .collect()
        };
        let gens: Vec<Permutation> = self
            .generator_ids
            .iter()
            .map(|&g| Permutation::from_images_unchecked(action(g)))
            .collect();
        let group = FiniteGroup::close(index, gens, usize::MAX)?;
        debug_assert_eq!(group.order(), index);
        let rep_image: Vec<ElementId> = par::map_slice(&reps, |&r| {
            group.index_of(&action(r)).expect("image lies in the quotient")
        });
        let projection = coset_of.iter().map(|&c| rep_image[c as usize]).collect();
        Ok(QuotientMap {
            group,
            projection,
            coset_of,
            coset_reps: reps,
        })
    }

    /// Check that each permutation of element ids is an automorphism.
    pub fn validate_automorphisms(&self, autos: &[Permutation]) -> Result<()> {
        for (k, a) in autos.iter().enumerate() {
            if a.degree() != self.order {
                return Err(Error::InvalidAutomorphism(format!(
                    "automorphism {k} acts on {} points, group has {} elements",
                    a.degree(),
                    self.order
                )));
            }
            if a.apply(0) != 0 {
                return Err(Error::InvalidAutomorphism(format!(
                    "automorphism {k} moves the identity"
                )));
            }
            // Checking x·g for every x and generator g forces a(xy) = a(x)a(y).
            let bad = par::any_range(self.order, |x| {
                let x = x as u32;
                self.generator_ids.iter().any(|&g| {
                    a.apply(self.mul(x, g)) != self.mul(a.apply(x), a.apply(g))
                })
            });
            if bad {
                return Err(Error::InvalidAutomorphism(format!(
                    "automorphism {k} does not preserve products"
                )));
            }
        }
        Ok(())
    }

    /// True iff every automorphism in `aut_gens` maps the subgroup `sub` onto itself.
    pub fn is_characteristic(&self, sub: &[ElementId], aut_gens: &[Permutation]) -> Result<bool> {
        self.validate_automorphisms(aut_gens)?;
        let mut sub = sub.to_vec();
        sub.sort_unstable();
        Ok(aut_gens
            .iter()
            .all(|a| sub.iter().all(|&n| sub.binary_search(&a.apply(n)).is_ok())))
    }
}

/// Result of [`FiniteGroup::quotient_map`].
#[derive(Debug)]
pub struct QuotientMap {
    pub group: FiniteGroup,
    /// Element id of `G` ↦ element id of `G/N`.
    pub projection: Vec<ElementId>,
    /// Element id of `G` ↦ coset number (cosets numbered by smallest member).
    pub coset_of: Vec<u32>,
    pub coset_reps: Vec<ElementId>,
}
