//! Out(S)-types of Aut(S)-classes, the proportions ρ(c), h(S), and coarse types.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use serde::Serialize;

use crate::autgrp::{automorphism_group, DEFAULT_MAX_NODES, MAX_CAYLEY_ORDER};
use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup, QuotientMap};
use crate::perm::Permutation;
use crate::rational::ratio;
use crate::wreath::{WreathElement, WreathGroup};

/// `Aut(S)/S` together with the projection.
#[derive(Debug)]
pub struct OutQuotient {
    map: QuotientMap,
    s_order: usize,
}

pub fn out_quotient(aut_s: &FiniteGroup, s: &[ElementId]) -> Result<OutQuotient> {
    let map = aut_s.quotient_map(s)?;
    Ok(OutQuotient { map, s_order: s.len() })
}

impl OutQuotient {
    pub fn group(&self) -> &FiniteGroup {
        &self.map.group
    }

    pub fn order(&self) -> usize {
        self.map.group.order()
    }

    pub fn s_order(&self) -> usize {
        self.s_order
    }

    /// Image of an element of `Aut(S)` in `Out(S)`.
    pub fn project(&self, x: ElementId) -> ElementId {
        self.map.projection[x as usize]
    }

    /// Out-class of the coset of `x`.
    pub fn type_of(&self, x: ElementId) -> u32 {
        self.map.group.classes().class_of(self.project(x))
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassTypeEntry {
    pub class: u32,
    pub representative: ElementId,
    pub size: usize,
    #[serde(rename = "type")]
    pub type_id: u32,
    pub type_size: usize,
    #[serde(with = "crate::rational::serde_ratio")]
    pub rho: BigRational,
}

/// Per Aut(S)-class: size, S-type and ρ(c) = |c| / (|S|·|type|).
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassTypeTable {
    pub order: usize,
    pub out_order: usize,
    pub classes: Vec<ClassTypeEntry>,
    #[serde(with = "crate::rational::serde_ratio")]
    pub h: BigRational,
}

impl ClassTypeTable {
    /// Type id of each Aut(S)-class, indexed by class id.
    pub fn type_of_class(&self) -> Vec<u32> {
        self.classes.iter().map(|e| e.type_id).collect()
    }

    pub fn rho(&self, class: u32) -> &BigRational {
        &self.classes[class as usize].rho
    }

    /// Σ ρ(c) over the classes of each type.
    pub fn rho_sums(&self) -> BTreeMap<u32, BigRational> {
        let mut sums: BTreeMap<u32, BigRational> = BTreeMap::new();
        for e in &self.classes {
            *sums.entry(e.type_id).or_insert_with(|| ratio(0, 1)) += &e.rho;
        }
        sums
    }

    /// Classes of the given type, in class order.
    pub fn classes_of_type(&self, type_id: u32) -> Vec<u32> {
        self.classes
            .iter()
            .filter(|e| e.type_id == type_id)
            .map(|e| e.class)
            .collect()
    }
}

pub fn class_type_table(aut_s: &FiniteGroup, s: &[ElementId]) -> Result<ClassTypeTable> {
    let out = out_quotient(aut_s, s)?;
    let out_classes = out.group().classes();
    let classes = aut_s.classes();
    let entries: Vec<ClassTypeEntry> = classes
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let rep = c[0];
            let type_id = out.type_of(rep);
            let type_size = out_classes.class_size(type_id);
            ClassTypeEntry {
                class: i as u32,
                representative: rep,
                size: c.len(),
                type_id,
                type_size,
                rho: ratio(c.len() as u64, (s.len() * type_size) as u64),
            }
        })
        .collect();
    let h = entries.iter().map(|e| e.rho.clone()).max().expect("nonempty");
    Ok(ClassTypeTable {
        order: s.len(),
        out_order: out.order(),
        classes: entries,
        h,
    })
}

/// `h(S)`: the largest ρ(c).
pub fn h(aut_s: &FiniteGroup, s: &[ElementId]) -> Result<BigRational> {
    Ok(class_type_table(aut_s, s)?.h)
}

/// Projection of `Aut(S)` onto an abelian quotient `Aut(S)/D`.
#[derive(Debug)]
pub struct CoarseTyping {
    map: QuotientMap,
}

impl CoarseTyping {
    /// `d` must be normal, contain `s`, and have abelian quotient.
    pub fn new(aut_s: &FiniteGroup, s: &[ElementId], d: &[ElementId]) -> Result<Self> {
        let mut d = d.to_vec();
        d.sort_unstable();
        if s.iter().any(|x| d.binary_search(x).is_err()) {
            return Err(Error::BadParameter("designated subgroup must contain S".into()));
        }
        let map = aut_s.quotient_map(&d)?;
        if !map.group.is_abelian() {
            return Err(Error::NonAbelianQuotient);
        }
        Ok(CoarseTyping { map })
    }

    pub fn quotient(&self) -> &FiniteGroup {
        &self.map.group
    }

    pub fn coarse_type(&self, x: ElementId) -> u32 {
        self.map.projection[x as usize]
    }
}

pub type CoarseTypeSet = BTreeSet<u32>;

/// Coarse types of all bcpc's of `w`, where the wreath base is `Aut(S)`.
pub fn ct_set(wr: &WreathGroup<'_>, w: &WreathElement, typing: &CoarseTyping) -> Result<CoarseTypeSet> {
    let mut out = BTreeSet::new();
    for zeta in w.top.cycles().cycles() {
        out.insert(typing.coarse_type(wr.cycle_product(w, zeta)?));
    }
    Ok(out)
}

/// Compare `CT(w^k)` with `{t^k : t ∈ CT(w)}`, both computed from scratch.
pub fn ct_power_check(wr: &WreathGroup<'_>, w: &WreathElement, k: i64, typing: &CoarseTyping) -> Result<bool> {
    let order = w.top.order();
    if num_integer::gcd(k.unsigned_abs(), order) != 1 {
        return Err(Error::GcdViolation { k, order });
    }
    let lhs = ct_set(wr, &wr.w_pow(w, k)?, typing)?;
    let q = typing.quotient();
    let rhs: CoarseTypeSet = ct_set(wr, w, typing)?.into_iter().map(|t| q.pow(t, k)).collect();
    Ok(lhs == rhs)
}

/// A simple group inside its automorphism group, with the subgroup `D` used
/// for coarse types.
#[derive(Debug)]
pub struct SimpleGroupData {
    pub name: String,
    pub aut: FiniteGroup,
    /// Ids of `Inn(S) ≅ S` inside `aut`.
    pub s: Vec<ElementId>,
    /// Ids of the designated subgroup `D` with `S ≤ D` and `aut/D` abelian.
    pub d: Vec<ElementId>,
}

fn even_ids(g: &FiniteGroup) -> Vec<ElementId> {
    (0..g.order() as u32)
        .filter(|&x| {
            let p = Permutation::from_images(g.element(x).to_vec()).expect("valid");
            p.cycle_type().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
        })
        .collect()
}

/// Aut(S) for a catalog simple group: by search when `|S| ≤ 2000`, as `Sym_n`
/// for larger alternating groups, and geometrically for `PSL_3(4)`.
pub fn simple_with_aut(name: &str) -> Result<SimpleGroupData> {
    let normalized: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    if normalized == "psl(3,4)" {
        let a = catalog::extended_aut_psl34()?;
        return Ok(SimpleGroupData {
            name: normalized,
            aut: a.group,
            s: a.psl,
            d: a.pgl,
        });
    }
    let (kind, args) = catalog::parse_call(&normalized).ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
    if kind == "alt" && args.first().is_some_and(|&n| n >= 7) {
        let sym = catalog::sym(args[0] as usize)?;
        let s = even_ids(&sym);
        return Ok(SimpleGroupData {
            name: normalized,
            aut: sym,
            d: s.clone(),
            s,
        });
    }
    let g = catalog::by_name(&normalized)?;
    if g.order() > MAX_CAYLEY_ORDER {
        return Err(Error::TooLarge(format!(
            "no structural automorphism group for {name} of order {}",
            g.order()
        )));
    }
    let aut = automorphism_group(&g, DEFAULT_MAX_NODES)?;
    let s = aut.inner().to_vec();
    // PSL_2(q), q odd: the diagonal automorphisms fill all of Aut/Inn
    let d = match (kind.as_str(), args.as_slice()) {
        ("psl", [2, q]) if q % 2 == 1 => (0..aut.order() as u32).collect(),
        _ => s.clone(),
    };
    Ok(SimpleGroupData {
        name: normalized,
        aut: aut.into_group(),
        s,
        d,
    })
}
