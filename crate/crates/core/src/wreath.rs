//! Wreath products `B ≀ T` with `T ≤ Sym_n`, backward cycle product classes,
//! the combinatorial conjugacy test and a brute-force oracle, and the `H_p`
//! construction `Aut(S) ≀ ⟨σ⟩`.
//!
//! Multiplication law: `(g,σ)(h,υ) = ((g_i · h_{σ⁻¹(i)})_i, συ)`.

use std::collections::{BTreeMap, HashSet};

use num_rational::BigRational;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::autgrp::{CayleyTable, MAX_CAYLEY_ORDER};
use crate::classes::UnionFind;
use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};
use crate::par;
use crate::perm::Permutation;
use crate::rational::ratio;

/// Largest wreath product that [`WreathGroup::elements`] will enumerate.
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 2_000_000;

/// Largest orbit [`WreathGroup::conjugation_orbit`] will store by default.
pub const DEFAULT_ORBIT_LIMIT: usize = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WreathElement {
    pub base: Vec<ElementId>,
    pub top: Permutation,
}

/// `(class id, multiplicity)` pairs sorted by class id.
pub type Multiset = Vec<(u32, usize)>;

fn multiset(mut items: Vec<u32>) -> Multiset {
    items.sort_unstable();
    let mut out: Multiset = Vec::new();
    for x in items {
        match out.last_mut() {
            Some((y, m)) if *y == x => *m += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// The multisets `M_l(w)` and, when a typing is supplied, `M_l^τ(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BcpcProfile {
    /// Cycle length `l` ↦ multiset of bcpc class ids over the `l`-cycles.
    pub by_length: BTreeMap<usize, Multiset>,
    /// `(l, type)` ↦ the part of `M_l(w)` of that type.
    pub refined: Option<BTreeMap<(usize, u32), Multiset>>,
}

enum BaseMul {
    Table(CayleyTable),
    Group,
}

pub struct WreathGroup<'a> {
    base: &'a FiniteGroup,
    mul: BaseMul,
    n: usize,
    top: FiniteGroup,
}

impl<'a> WreathGroup<'a> {
    /// `base ≀ top` where `top` is a permutation group of degree `n`.
    pub fn new(base: &'a FiniteGroup, top: FiniteGroup) -> Result<Self> {
        let mul = if base.order() <= MAX_CAYLEY_ORDER {
            BaseMul::Table(CayleyTable::new(base)?)
        } else {
            BaseMul::Group
        };
        Ok(WreathGroup { base, mul, n: top.degree(), top })
    }

    /// `base ≀ Sym_n`.
    pub fn full(base: &'a FiniteGroup, n: usize) -> Result<Self> {
        Self::new(base, crate::catalog::sym(n)?)
    }

    pub fn base_group(&self) -> &FiniteGroup {
        self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top_group(&self) -> &FiniteGroup {
        &self.top
    }

    /// `|B|^n · |T|`.
    pub fn order(&self) -> u128 {
        (self.base.order() as u128).pow(self.n as u32) * self.top.order() as u128
    }

    #[inline]
    fn bmul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.mul {
            BaseMul::Table(t) => t.mul(a, b),
            BaseMul::Group => self.base.mul(a, b),
        }
    }

    #[inline]
    fn binv(&self, a: ElementId) -> ElementId {
        match &self.mul {
            BaseMul::Table(t) => t.inv(a),
            BaseMul::Group => self.base.inv(a),
        }
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement {
            base: vec![0; self.n],
            top: Permutation::identity(self.n),
        }
    }

    /// Checked constructor: base ids must exist and the top must lie in the top group.
    pub fn element(&self, base: Vec<ElementId>, top: Permutation) -> Result<WreathElement> {
        let w = WreathElement { base, top };
        self.check(&w)?;
        if !self.top.contains(&w.top) {
            return Err(Error::ShapeMismatch(format!("{} is not in the top group", w.top)));
        }
        Ok(w)
    }

    fn check(&self, w: &WreathElement) -> Result<()> {
        if w.base.len() != self.n || w.top.degree() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "expected {} coordinates, got base {} and top degree {}",
                self.n,
                w.base.len(),
                w.top.degree()
            )));
        }
        if let Some(&bad) = w.base.iter().find(|&&x| x as usize >= self.base.order()) {
            return Err(Error::ShapeMismatch(format!("base id {bad} out of range")));
        }
        Ok(())
    }

    pub fn w_mul(&self, a: &WreathElement, b: &WreathElement) -> Result<WreathElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    fn mul_unchecked(&self, a: &WreathElement, b: &WreathElement) -> WreathElement {
        let sigma_inv = a.top.inverse();
        let base = (0..self.n)
            .map(|i| self.bmul(a.base[i], b.base[sigma_inv.apply(i as u32) as usize]))
            .collect();
        WreathElement {
            base,
            top: a.top.compose_unchecked(&b.top),
        }
    }

    pub fn w_inv(&self, a: &WreathElement) -> Result<WreathElement> {
        self.check(a)?;
        Ok(self.inv_unchecked(a))
    }

    fn inv_unchecked(&self, a: &WreathElement) -> WreathElement {
        let base = (0..self.n)
            .map(|j| self.binv(a.base[a.top.apply(j as u32) as usize]))
            .collect();
        WreathElement {
            base,
            top: a.top.inverse(),
        }
    }

    /// `b · a · b⁻¹`.
    pub fn w_conj(&self, a: &WreathElement, b: &WreathElement) -> Result<WreathElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.conj_unchecked(a, b))
    }

    fn conj_unchecked(&self, a: &WreathElement, b: &WreathElement) -> WreathElement {
        self.mul_unchecked(&self.mul_unchecked(b, a), &self.inv_unchecked(b))
    }

    pub fn w_pow(&self, a: &WreathElement, k: i64) -> Result<WreathElement> {
        self.check(a)?;
        let base = if k < 0 { self.inv_unchecked(a) } else { a.clone() };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul_unchecked(&acc, &base);
        }
        Ok(acc)
    }

    /// The product `g_{i_l} ··· g_{i_1}` along a cycle `ζ = (i_1 … i_l)` of the top.
    pub fn cycle_product(&self, w: &WreathElement, zeta: &[u32]) -> Result<ElementId> {
        self.check(w)?;
        let l = zeta.len();
        let is_cycle = l > 0
            && zeta.iter().all(|&i| (i as usize) < self.n)
            && (0..l).all(|j| w.top.apply(zeta[j]) == zeta[(j + 1) % l]);
        if !is_cycle {
            return Err(Error::NotACycleOfTop(zeta.to_vec()));
        }
        Ok(zeta
            .iter()
            .fold(0, |acc, &i| self.bmul(w.base[i as usize], acc)))
    }

    /// Backward cycle product class of `w` along `ζ`.
    pub fn bcpc(&self, w: &WreathElement, zeta: &[u32]) -> Result<u32> {
        let g = self.cycle_product(w, zeta)?;
        Ok(self.base.classes().class_of(g))
    }

    /// `M_l(w)` for every cycle length, refined by `types[class id]` when given.
    pub fn profile(&self, w: &WreathElement, types: Option<&[u32]>) -> BcpcProfile {
        let classes = self.base.classes();
        let mut by_length: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for zeta in w.top.cycles().cycles() {
            let g = zeta.iter().fold(0, |acc, &i| self.bmul(w.base[i as usize], acc));
            by_length.entry(zeta.len()).or_default().push(classes.class_of(g));
        }
        let refined = types.map(|types| {
            let mut refined: BTreeMap<(usize, u32), Vec<u32>> = BTreeMap::new();
            for (&l, cs) in &by_length {
                for &c in cs {
                    refined.entry((l, types[c as usize])).or_default().push(c);
                }
            }
            refined.into_iter().map(|(k, v)| (k, multiset(v))).collect()
        });
        BcpcProfile {
            by_length: by_length.into_iter().map(|(k, v)| (k, multiset(v))).collect(),
            refined,
        }
    }

    /// Conjugacy in `B ≀ Sym_n`, decided from cycle types and bcpc multisets.
    pub fn conj_test(&self, v: &WreathElement, w: &WreathElement) -> Result<bool> {
        self.check(v)?;
        self.check(w)?;
        if v.top.cycle_type() != w.top.cycle_type() {
            return Ok(false);
        }
        Ok(self.profile(v, None).by_length == self.profile(w, None).by_length)
    }

    /// Conjugacy in `B ≀ T` by searching for `k = (c, ψ)` with `k·v = w·k`.
    ///
    /// `ψ` must satisfy `ψ σ_v = σ_w ψ`; then the base condition reads
    /// `c_i · g_{ψ⁻¹(i)} = h_i · c_{σ_w⁻¹(i)}` and is solved coordinate by
    /// coordinate with early exit.
    pub fn brute_force_conj(&self, v: &WreathElement, w: &WreathElement) -> Result<bool> {
        self.check(v)?;
        self.check(w)?;
        if self.order() > DEFAULT_ENUMERATION_LIMIT {
            return Err(Error::TooLarge(format!(
                "wreath product of order {} exceeds {DEFAULT_ENUMERATION_LIMIT}",
                self.order()
            )));
        }
        let sw_inv = w.top.inverse();
        for psi_id in 0..self.top.order() as u32 {
            let psi = self.top.element(psi_id);
            let psi = Permutation::from_images_unchecked(psi.to_vec());
            if psi.compose_unchecked(&v.top) != w.top.compose_unchecked(&psi) {
                continue;
            }
            let psi_inv = psi.inverse();
            // g' = entries of v moved by ψ: g'_i = g_{ψ⁻¹(i)}
            let moved: Vec<ElementId> = (0..self.n)
                .map(|i| v.base[psi_inv.apply(i as u32) as usize])
                .collect();
            let prev: Vec<usize> = (0..self.n).map(|i| sw_inv.apply(i as u32) as usize).collect();
            let mut c = vec![0u32; self.n];
            if self.solve_base(0, &mut c, &moved, &w.base, &prev) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn solve_base(&self, pos: usize, c: &mut [u32], moved: &[u32], h: &[u32], prev: &[usize]) -> bool {
        if pos == self.n {
            return true;
        }
        for x in 0..self.base.order() as u32 {
            c[pos] = x;
            // constraints that became decidable with this coordinate
            let ok = (0..self.n)
                .filter(|&i| i.max(prev[i]) == pos)
                .all(|i| self.bmul(c[i], moved[i]) == self.bmul(h[i], c[prev[i]]));
            if ok && self.solve_base(pos + 1, c, moved, h, prev) {
                return true;
            }
        }
        false
    }

    /// Dense code `top_idx·|B|^n + Σ base_i·|B|^i`.
    pub fn encode(&self, w: &WreathElement) -> u64 {
        let b = self.base.order() as u64;
        let top = self.top.index_of(w.top.images()).expect("top lies in the top group") as u64;
        let mut code = 0u64;
        for &x in w.base.iter().rev() {
            code = code * b + x as u64;
        }
        top * b.pow(self.n as u32) + code
    }

    pub fn decode(&self, code: u64) -> WreathElement {
        let b = self.base.order() as u64;
        let mut rest = code;
        let base = (0..self.n)
            .map(|_| {
                let x = (rest % b) as u32;
                rest /= b;
                x
            })
            .collect();
        WreathElement {
            base,
            top: self.top.permutation(rest as u32),
        }
    }

    /// Every element, in code order.
    pub fn elements(&self) -> Result<Vec<WreathElement>> {
        let order = self.order();
        if order > DEFAULT_ENUMERATION_LIMIT {
            return Err(Error::TooLarge(format!(
                "wreath product of order {order} exceeds {DEFAULT_ENUMERATION_LIMIT}"
            )));
        }
        Ok(par::map_range(order as usize, |c| self.decode(c as u64)))
    }

    /// Base generators in coordinate 0 together with the top generators.
    pub fn generators(&self) -> Vec<WreathElement> {
        let mut gens: Vec<WreathElement> = self
            .base
            .generator_ids()
            .iter()
            .map(|&g| {
                let mut w = self.identity();
                if self.n > 0 {
                    w.base[0] = g;
                }
                w
            })
            .collect();
        for t in self.top.generators() {
            gens.push(WreathElement {
                base: vec![0; self.n],
                top: t.clone(),
            });
        }
        if self.n > 1 && crate::autgrp::orbits(self.n, self.top.generators()).len() > 1 {
            // an intransitive top needs base generators in every orbit
            for i in 1..self.n {
                for &g in self.base.generator_ids() {
                    let mut w = self.identity();
                    w.base[i] = g;
                    gens.push(w);
                }
            }
        }
        gens
    }

    /// Class id of every element (indexed by code) by closing conjugation orbits
    /// under the generators; the numbering is by smallest code.
    pub fn conjugacy_classes_brute(&self) -> Result<Vec<u32>> {
        let elements = self.elements()?;
        let gens = self.generators();
        let images: Vec<Vec<u64>> = par::map_slice(&elements, |w| {
            gens.iter().map(|s| self.encode(&self.conj_unchecked(w, s))).collect()
        });
        let mut uf = UnionFind::new(elements.len());
        for (x, ys) in images.iter().enumerate() {
            for &y in ys {
                uf.union(x, y as usize);
            }
        }
        let mut class_of = vec![0u32; elements.len()];
        for (i, block) in uf.groups().into_iter().enumerate() {
            for x in block {
                class_of[x as usize] = i as u32;
            }
        }
        Ok(class_of)
    }

    /// Orbit of `w` under conjugation by the group generated by `gens` (which may
    /// come from a larger wreath product containing this one), as sorted codes of
    /// `codec`.
    pub fn conjugation_orbit(
        &self,
        w: &WreathElement,
        gens: &[WreathElement],
        codec: &WreathGroup<'_>,
        limit: usize,
    ) -> Result<Vec<u64>> {
        let mut seen: HashSet<u64> = HashSet::from([codec.encode(w)]);
        let mut frontier = vec![w.clone()];
        while !frontier.is_empty() {
            let next: Vec<Vec<(u64, WreathElement)>> = par::map_slice(&frontier, |x| {
                gens.iter()
                    .map(|s| {
                        let y = self.conj_unchecked(x, s);
                        (codec.encode(&y), y)
                    })
                    .collect()
            });
            frontier = Vec::new();
            for (code, y) in next.into_iter().flatten() {
                if seen.insert(code) {
                    frontier.push(y);
                }
            }
            if seen.len() > limit {
                return Err(Error::TooLarge(format!("orbit exceeds {limit} elements")));
            }
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> WreathElement {
        let b = self.base.order() as u32;
        WreathElement {
            base: (0..self.n).map(|_| rng.gen_range(0..b)).collect(),
            top: self.top.permutation(rng.gen_range(0..self.top.order() as u32)),
        }
    }
}

/// `H_p = Aut(S) ≀ ⟨σ⟩` with its distinguished element and automorphism group.
pub struct HpConstruction<'a> {
    pub p: u32,
    /// `H_p` itself.
    pub group: WreathGroup<'a>,
    /// `Aut(S) ≀ N` with `N = ⟨σ, μ⟩` the normalizer of `⟨σ⟩` in `Sym_p`.
    pub automorphisms: WreathGroup<'a>,
    /// `(α₁, 1, …, 1)σ` with `α₁` in a largest class of `Aut(S)`.
    pub alpha: WreathElement,
    pub alpha1_class_size: usize,
    pub predicted: u128,
}

fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| {
            let mut x = 1u64;
            (1..p - 1).all(|_| {
                x = x * g as u64 % p as u64;
                x != 1
            })
        })
        .expect("primes have primitive roots")
}

/// Build `H_p` over `aut_s = Aut(S)` (a complete group, so its own conjugacy
/// classes are its automorphism orbits).
pub fn build_hp(aut_s: &FiniteGroup, p: u32) -> Result<HpConstruction<'_>> {
    if !crate::field::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let a = aut_s.order() as u128;
    let classes = aut_s.classes();
    let (class_id, size) = classes
        .sizes()
        .iter()
        .enumerate()
        .map(|(i, &s)| (i as u32, s))
        .max_by_key(|&(i, s)| (s, std::cmp::Reverse(i)))
        .expect("nonempty group");
    let predicted = (p as u128 - 1) * size as u128 * a.pow(p - 1);
    if predicted > DEFAULT_ORBIT_LIMIT as u128 || a.pow(p) * p as u128 * (p as u128 - 1).max(1) > u64::MAX as u128 {
        return Err(Error::TooLarge(format!(
            "predicted orbit of {predicted} elements is beyond the orbit limit"
        )));
    }
    let n = p as usize;
    let sigma = Permutation::from_cycles(n, &[(0..p).collect()])?;
    let top = FiniteGroup::close(n, vec![sigma.clone()], usize::MAX)?;
    let mu = Permutation::from_images((0..p).map(|i| (i as u64 * primitive_root(p) as u64 % p as u64) as u32).collect())?;
    let normalizer = FiniteGroup::close(n, vec![sigma.clone(), mu], usize::MAX)?;
    let group = WreathGroup::new(aut_s, top)?;
    let automorphisms = WreathGroup::new(aut_s, normalizer)?;
    let mut base = vec![0; n];
    base[0] = classes.representative(class_id);
    let alpha = WreathElement { base, top: sigma };
    Ok(HpConstruction {
        p,
        group,
        automorphisms,
        alpha,
        alpha1_class_size: size,
        predicted,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HpReport {
    pub p: u32,
    pub order: String,
    pub predicted: String,
    pub measured: u64,
    #[serde(with = "crate::rational::serde_ratio")]
    pub maol_lower_bound: BigRational,
    #[serde(with = "crate::rational::serde_ratio")]
    pub half_bound: BigRational,
    pub matches: bool,
}

impl HpConstruction<'_> {
    /// Orbit of `α` under `Aut(S) ≀ N` acting by conjugation.
    pub fn measure(&self) -> Result<u64> {
        let gens = self.automorphisms.generators();
        let orbit = self
            .automorphisms
            .conjugation_orbit(&self.alpha, &gens, &self.automorphisms, DEFAULT_ORBIT_LIMIT)?;
        Ok(orbit.len() as u64)
    }

    /// `|α^{Aut(H_p)}| / |H_p|` next to `(1 − 1/p) · |α₁ class| / |Aut(S)|`.
    pub fn report(&self) -> Result<HpReport> {
        let measured = self.measure()?;
        let order = self.group.order();
        let a = self.group.base_group().order() as u64;
        let p = self.p as u64;
        let maol_lower_bound = BigRational::new((measured as u128).into(), order.into());
        let half_bound = ratio(p - 1, p) * ratio(self.alpha1_class_size as u64, a);
        Ok(HpReport {
            p: self.p,
            order: order.to_string(),
            predicted: self.predicted.to_string(),
            measured,
            matches: measured as u128 == self.predicted && maol_lower_bound >= half_bound,
            maol_lower_bound,
            half_bound,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn sym3() -> FiniteGroup {
        catalog::sym(3).unwrap()
    }

    fn id_of(g: &FiniteGroup, s: &str) -> u32 {
        g.index_of(Permutation::parse_cycles(g.degree(), s).unwrap().images()).unwrap()
    }

    #[test]
    fn identity_and_inverse() {
        let b = sym3();
        let w = WreathGroup::full(&b, 3).unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
        for _ in 0..50 {
            let a = w.random_element(&mut rng);
            assert_eq!(w.w_mul(&w.identity(), &a).unwrap(), a);
            assert_eq!(w.w_inv(&w.w_inv(&a).unwrap()).unwrap(), a);
            assert_eq!(w.w_mul(&a, &w.w_inv(&a).unwrap()).unwrap(), w.identity());
            let code = w.encode(&a);
            assert_eq!(w.decode(code), a);
        }
    }

    #[test]
    fn conjugation_by_base_tuple() {
        let b = sym3();
        let w = WreathGroup::full(&b, 2).unwrap();
        let swap = Permutation::parse_cycles(2, "(1 2)").unwrap();
        for g1 in 0..6 {
            for g2 in 0..6 {
                for k1 in 0..6 {
                    for k2 in 0..6 {
                        let a = WreathElement { base: vec![g1, g2], top: swap.clone() };
                        let k = WreathElement { base: vec![k1, k2], top: Permutation::identity(2) };
                        let c = w.w_conj(&a, &k).unwrap();
                        let expected = vec![
                            b.mul(b.mul(k1, g1), b.inv(k2)),
                            b.mul(b.mul(k2, g2), b.inv(k1)),
                        ];
                        assert_eq!(c.base, expected);
                        assert_eq!(c.top, swap);
                    }
                }
            }
        }
    }

    #[test]
    fn bcpc_examples() {
        let b = sym3();
        let w = WreathGroup::full(&b, 3).unwrap();
        let e = WreathElement {
            base: vec![id_of(&b, "(1 2)"), 0, id_of(&b, "(1 3)")],
            top: Permutation::parse_cycles(3, "(1 2 3)").unwrap(),
        };
        let three = b.classes().class_of(id_of(&b, "(1 2 3)"));
        assert_eq!(w.cycle_product(&e, &[0, 1, 2]).unwrap(), id_of(&b, "(1 2 3)"));
        assert_eq!(w.bcpc(&e, &[0, 1, 2]).unwrap(), three);
        assert_eq!(w.bcpc(&e, &[1, 2, 0]).unwrap(), three);
        assert!(matches!(w.bcpc(&e, &[0, 2, 1]), Err(Error::NotACycleOfTop(_))));
        assert!(matches!(w.bcpc(&e, &[0]), Err(Error::NotACycleOfTop(_))));
        let prof = w.profile(&e, None);
        assert_eq!(prof.by_length.len(), 1);
        assert_eq!(prof.by_length[&3], vec![(three, 1)]);
        assert_eq!(w.bcpc(&w.identity(), &[1]).unwrap(), 0);
    }

    #[test]
    fn shape_errors() {
        let b = sym3();
        let w = WreathGroup::full(&b, 2).unwrap();
        let bad = WreathElement { base: vec![0], top: Permutation::identity(2) };
        assert!(matches!(w.w_mul(&bad, &w.identity()), Err(Error::ShapeMismatch(_))));
        let bad = WreathElement { base: vec![0, 9], top: Permutation::identity(2) };
        assert!(matches!(w.w_inv(&bad), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn c2_wr_s2_classes() {
        let b = catalog::cyclic(2).unwrap();
        let w = WreathGroup::full(&b, 2).unwrap();
        let class_of = w.conjugacy_classes_brute().unwrap();
        let mut sizes = vec![0usize; 8];
        for &c in &class_of {
            sizes[c as usize] += 1;
        }
        let mut sizes: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        let els = w.elements().unwrap();
        for (i, x) in els.iter().enumerate() {
            for (j, y) in els.iter().enumerate() {
                let same = class_of[i] == class_of[j];
                assert_eq!(w.brute_force_conj(x, y).unwrap(), same);
                assert_eq!(w.conj_test(x, y).unwrap(), same);
            }
        }
    }

    #[test]
    fn hp_for_alt5_p2() {
        let s5 = catalog::sym(5).unwrap();
        let hp = build_hp(&s5, 2).unwrap();
        assert_eq!(hp.group.order(), 28_800);
        assert_eq!(hp.predicted, 3600);
        let r = hp.report().unwrap();
        assert_eq!(r.measured, 3600);
        assert_eq!(r.maol_lower_bound, ratio(1, 8));
        assert!(r.matches);
        assert!(matches!(build_hp(&s5, 4), Err(Error::NotPrime(4))));
    }
}
