//! Automorphism groups of small groups by backtracking over generator images,
//! and orbits of automorphism groups on group elements.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicU64, Ordering};

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};
use crate::par;
use crate::perm::Permutation;
use crate::rational::ratio;

/// Largest group for which a Cayley table is built.
pub const MAX_CAYLEY_ORDER: usize = 2000;

/// Default node budget for the automorphism search.
pub const DEFAULT_MAX_NODES: u64 = 50_000_000;

/// Multiplication table of a group on its element ids.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
}

impl CayleyTable {
    pub fn new(g: &FiniteGroup) -> Result<Self> {
        let n = g.order();
        if n > MAX_CAYLEY_ORDER {
            return Err(Error::TooLarge(format!(
                "Cayley table for a group of order {n} (limit {MAX_CAYLEY_ORDER})"
            )));
        }
        let rows: Vec<Vec<u32>> = par::map_range(n, |a| (0..n as u32).map(|b| g.mul(a as u32, b)).collect());
        let table = rows.concat();
        let inverse = (0..n as u32).map(|a| g.inv(a)).collect();
        let orders = (0..n as u32).map(|a| g.element_order(a) as u32).collect();
        Ok(CayleyTable { n, table, inverse, orders })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn element_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn row(&self, a: u32) -> &[u32] {
        &self.table[a as usize * self.n..(a as usize + 1) * self.n]
    }
}

/// Aut(G) as a permutation group on the element ids of `G`.
#[derive(Debug)]
pub struct AutomorphismGroup {
    group: FiniteGroup,
    inner: Vec<ElementId>,
    carrier_order: usize,
}

impl AutomorphismGroup {
    /// Wrap an already enumerated group of automorphisms. `inner` lists the ids of
    /// the inner automorphisms.
    pub fn from_parts(group: FiniteGroup, inner: Vec<ElementId>, carrier_order: usize) -> Self {
        AutomorphismGroup { group, inner, carrier_order }
    }

    /// The group of automorphisms (each element is a permutation of element ids).
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn carrier_order(&self) -> usize {
        self.carrier_order
    }

    /// Sorted ids of the inner automorphisms.
    pub fn inner(&self) -> &[ElementId] {
        &self.inner
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    /// Image of element `x` under automorphism `a`.
    pub fn apply(&self, a: ElementId, x: ElementId) -> ElementId {
        self.group.element(a)[x as usize]
    }

    pub fn all_automorphisms(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.group.order() as u32).map(|a| self.group.element(a))
    }
}

/// The map `x ↦ s x s⁻¹` as an id permutation.
pub fn inner_automorphism(g: &FiniteGroup, s: ElementId) -> Vec<u32> {
    (0..g.order() as u32).map(|x| g.conj(x, s)).collect()
}

/// Invariant of an element preserved by every automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Fingerprint {
    order: u32,
    class_size: u32,
    power_classes: Vec<u32>,
}

fn fingerprints(g: &FiniteGroup, t: &CayleyTable) -> Vec<Fingerprint> {
    let classes = g.classes();
    par::map_range(g.order(), |x| {
        let x = x as u32;
        let mut power_classes = Vec::new();
        let mut y = x;
        for _ in 0..t.element_order(x) {
            power_classes.push(classes.class_size(classes.class_of(y)) as u32);
            y = t.mul(y, x);
        }
        power_classes.sort_unstable();
        Fingerprint {
            order: t.element_order(x),
            class_size: classes.class_size(classes.class_of(x)) as u32,
            power_classes,
        }
    })
}

fn closure_size(t: &CayleyTable, gens: &[u32]) -> usize {
    let mut member = vec![false; t.order()];
    member[0] = true;
    let mut queue = VecDeque::from([0u32]);
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = t.mul(x, s);
            if !member[y as usize] {
                member[y as usize] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count
}

/// Greedy generating set: repeatedly add the element that enlarges the span the
/// most, preferring higher element order, then smaller id.
fn greedy_generators(t: &CayleyTable) -> Vec<u32> {
    let n = t.order();
    let mut gens: Vec<u32> = Vec::new();
    let mut span = 1;
    while span < n {
        let mut cand: Vec<u32> = (1..n as u32).collect();
        cand.sort_by_key(|&x| (std::cmp::Reverse(t.element_order(x)), x));
        let sizes: Vec<usize> = par::map_slice(&cand, |&x| {
            let mut trial = gens.clone();
            trial.push(x);
            closure_size(t, &trial)
        });
        let best = (0..cand.len()).max_by_key(|&i| (sizes[i], std::cmp::Reverse(i))).unwrap();
        gens.push(cand[best]);
        span = sizes[best];
    }
    gens
}

/// BFS spanning tree over right multiplication by the generators: each non-identity
/// element `y` is recorded as `(parent, generator index)` with `y = parent · gen`.
fn spanning_tree(t: &CayleyTable, gens: &[u32]) -> Vec<(u32, u32, usize)> {
    let mut seen = vec![false; t.order()];
    seen[0] = true;
    let mut queue = VecDeque::from([0u32]);
    let mut tree = Vec::with_capacity(t.order());
    while let Some(x) = queue.pop_front() {
        for (i, &s) in gens.iter().enumerate() {
            let y = t.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                tree.push((y, x, i));
                queue.push_back(y);
            }
        }
    }
    tree
}

/// Extend generator images to a full map and check it is an automorphism.
fn extend(t: &CayleyTable, gens: &[u32], tree: &[(u32, u32, usize)], images: &[u32]) -> Option<Vec<u32>> {
    let n = t.order();
    let mut phi = vec![u32::MAX; n];
    phi[0] = 0;
    let mut hit = vec![false; n];
    hit[0] = true;
    for &(y, x, i) in tree {
        let v = t.mul(phi[x as usize], images[i]);
        if hit[v as usize] {
            return None;
        }
        hit[v as usize] = true;
        phi[y as usize] = v;
    }
    for x in 0..n as u32 {
        for (i, &s) in gens.iter().enumerate() {
            if phi[t.mul(x, s) as usize] != t.mul(phi[x as usize], images[i]) {
                return None;
            }
        }
    }
    Some(phi)
}

/// Search state shared by the branches of one automorphism search.
struct Search<'a> {
    t: &'a CayleyTable,
    gens: Vec<u32>,
    tree: Vec<(u32, u32, usize)>,
    candidates: Vec<Vec<u32>>,
    fp: Vec<Fingerprint>,
    nodes: AtomicU64,
    max_nodes: u64,
}

impl Search<'_> {
    fn descend(&self, images: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) -> Result<()> {
        let nodes = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if nodes > self.max_nodes {
            return Err(Error::BudgetExceeded { nodes: self.max_nodes });
        }
        let depth = images.len();
        if depth == self.gens.len() {
            if let Some(phi) = extend(self.t, &self.gens, &self.tree, images) {
                out.push(phi);
            }
            return Ok(());
        }
        for &c in &self.candidates[depth] {
            if images.contains(&c) {
                continue;
            }
            // products of pairs of generators must keep their fingerprints
            let consistent = (0..depth).all(|j| {
                let src = self.t.mul(self.gens[j], self.gens[depth]);
                let dst = self.t.mul(images[j], c);
                self.fp[src as usize] == self.fp[dst as usize]
                    && self.fp[self.t.mul(self.gens[depth], self.gens[j]) as usize]
                        == self.fp[self.t.mul(c, images[j]) as usize]
            });
            if !consistent {
                continue;
            }
            images.push(c);
            self.descend(images, out)?;
            images.pop();
        }
        Ok(())
    }
}

/// All automorphisms of `g`, found by backtracking over the images of a small
/// generating set and pruned by element fingerprints.
pub fn automorphism_group(g: &FiniteGroup, max_nodes: u64) -> Result<AutomorphismGroup> {
    let t = CayleyTable::new(g)?;
    let n = g.order();
    let gens = if n == 1 { Vec::new() } else { greedy_generators(&t) };
    let fp = fingerprints(g, &t);
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&s| (0..n as u32).filter(|&x| fp[x as usize] == fp[s as usize]).collect())
        .collect();
    let search = Search {
        tree: spanning_tree(&t, &gens),
        t: &t,
        gens,
        candidates,
        fp,
        nodes: AtomicU64::new(0),
        max_nodes,
    };
    let mut maps: Vec<Vec<u32>> = if search.gens.is_empty() {
        vec![(0..n as u32).collect()]
    } else {
        let branches = par::map_slice(&search.candidates[0], |&c| {
            let mut out = Vec::new();
            search.descend(&mut vec![c], &mut out).map(|_| out)
        });
        let mut maps = Vec::new();
        for b in branches {
            maps.extend(b?);
        }
        maps
    };
    maps.sort_unstable();
    build_automorphism_group(g, maps)
}

/// Number the sorted automorphism list as a group and locate the inner automorphisms.
fn build_automorphism_group(g: &FiniteGroup, maps: Vec<Vec<u32>>) -> Result<AutomorphismGroup> {
    let n = g.order();
    let provisional = FiniteGroup::from_sorted(n, Vec::new(), maps.clone());
    let all: Vec<ElementId> = (0..provisional.order() as u32).collect();
    let (gen_ids, span) = provisional.generating_subset(&all);
    debug_assert_eq!(span.len(), provisional.order());
    let gens = gen_ids.iter().map(|&a| provisional.permutation(a)).collect();
    let group = FiniteGroup::from_sorted(n, gens, maps);
    let mut inner: Vec<ElementId> = (0..n as u32)
        .map(|s| {
            group
                .index_of(&inner_automorphism(g, s))
                .ok_or_else(|| Error::InvalidAutomorphism("inner automorphism missing".into()))
        })
        .collect::<Result<_>>()?;
    inner.sort_unstable();
    inner.dedup();
    Ok(AutomorphismGroup { group, inner, carrier_order: n })
}

/// Orbit of `x` under the group generated by `gens` (permutations of the same points).
pub fn orbit_of(x: u32, gens: &[Permutation]) -> Vec<u32> {
    let n = gens.first().map_or(x as usize + 1, |p| p.degree());
    let mut seen = vec![false; n];
    seen[x as usize] = true;
    let mut orbit = vec![x];
    let mut queue = VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        for g in gens {
            let z = g.apply(y);
            if !seen[z as usize] {
                seen[z as usize] = true;
                orbit.push(z);
                queue.push_back(z);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

/// All orbits of the group generated by `gens` on `0..n`, ordered by smallest member.
pub fn orbits(n: usize, gens: &[Permutation]) -> Vec<Vec<u32>> {
    let mut uf = crate::classes::UnionFind::new(n);
    for g in gens {
        for x in 0..n {
            uf.union(x, g.apply(x as u32) as usize);
        }
    }
    uf.groups()
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OrbitReport {
    pub group: String,
    pub order: usize,
    pub orbit_sizes: Vec<usize>,
    #[serde(rename = "MAOL")]
    pub max_orbit_length: usize,
    #[serde(with = "crate::rational::serde_ratio")]
    pub maol: BigRational,
}

/// Orbit structure of `aut` on the elements of `g`.
pub fn maol(name: &str, g: &FiniteGroup, aut: &AutomorphismGroup) -> Result<OrbitReport> {
    if aut.carrier_order() != g.order() || aut.group().degree() != g.order() {
        return Err(Error::ActionMismatch(format!(
            "automorphisms act on {} points, group has order {}",
            aut.group().degree(),
            g.order()
        )));
    }
    Ok(orbit_report(name, g.order(), aut.generators()))
}

/// Orbit report for any group of id permutations acting on `0..order`.
pub fn orbit_report(name: &str, order: usize, gens: &[Permutation]) -> OrbitReport {
    let mut orbit_sizes: Vec<usize> = orbits(order, gens).iter().map(Vec::len).collect();
    orbit_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let max_orbit_length = orbit_sizes[0];
    OrbitReport {
        group: name.to_string(),
        order,
        orbit_sizes,
        max_orbit_length,
        maol: ratio(max_orbit_length as u64, order as u64),
    }
}
