//! Permutations on `{0, …, degree-1}` and their cycle decompositions.
//!
//! Composition is right-to-left everywhere in the crate:
//! `p.compose(&q)` maps `x` to `p(q(x))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be positive");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from an image array, checking that it is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Product of (not necessarily disjoint) cycles, applied right to left.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut result = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            let mut seen = std::collections::HashSet::new();
            for (j, &x) in cycle.iter().enumerate() {
                if x as usize >= degree || !seen.insert(x) {
                    return Err(Error::InvalidPermutation(format!(
                        "bad cycle {cycle:?} for degree {degree}"
                    )));
                }
                images[x as usize] = cycle[(j + 1) % cycle.len()];
            }
            result = Permutation { images }.compose_unchecked(&result);
        }
        Ok(result)
    }

    /// Parse 1-based cycle notation such as `"(1 2)(3 4 5)"`. Commas are also
    /// accepted as separators; the empty string and `"()"` give the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let pt: u32 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?} in {text:?}")))?;
                if pt == 0 || pt as usize > degree {
                    return Err(Error::Parse(format!(
                        "point {pt} out of range 1..={degree}"
                    )));
                }
                cycle.push(pt - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: compose_slices(&self.images, &other.images),
        }
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            images: invert_slice(&self.images),
        }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&sq);
            }
            sq = sq.compose_unchecked(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn cycles(&self) -> CycleSet {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start as u32;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.images[x as usize];
            }
            cycles.push(cycle);
        }
        CycleSet { degree: n, cycles }
    }

    /// Cycle lengths sorted descending, 1-cycles included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().cycles.iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .cycles
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// 1-based cycle notation with fixed points omitted; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let s: String = self
            .cycles()
            .cycles
            .iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect();
        if s.is_empty() {
            "()".to_string()
        } else {
            s
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<u32>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images
    }
}

#[inline]
pub(crate) fn compose_slices(p: &[u32], q: &[u32]) -> Vec<u32> {
    q.iter().map(|&x| p[x as usize]).collect()
}

#[inline]
pub(crate) fn invert_slice(p: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

/// Canonical disjoint-cycle form: every point appears exactly once, each cycle
/// starts at its smallest point and follows the permutation
/// (`p(c[j]) = c[j+1]`), and cycles are sorted by their first point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleSet {
    degree: usize,
    cycles: Vec<Vec<u32>>,
}

impl CycleSet {
    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut images = vec![0u32; self.degree];
        for c in &self.cycles {
            for (j, &x) in c.iter().enumerate() {
                images[x as usize] = c[(j + 1) % c.len()];
            }
        }
        Permutation::from_images_unchecked(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(images: &[u32]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_right_to_left() {
        // (0 1) after (1 2): 0 -> 0 -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0
        let a = p(&[1, 0, 2]);
        let b = p(&[0, 2, 1]);
        let c = a.compose(&b).unwrap();
        assert_eq!(c.images(), &[1, 2, 0]);
        assert_eq!(c.cycles().cycles(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn compose_identity_and_inverse() {
        let q = p(&[2, 0, 3, 1]);
        let id = Permutation::identity(4);
        assert_eq!(id.compose(&q).unwrap(), q);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn cycle_decompose_examples() {
        assert_eq!(
            Permutation::identity(3).cycles().cycles(),
            &[vec![0], vec![1], vec![2]]
        );
        assert_eq!(p(&[1, 2, 0]).cycles().cycles(), &[vec![0, 1, 2]]);
        assert_eq!(
            p(&[0, 2, 1, 3]).cycles().cycles(),
            &[vec![0], vec![1, 2], vec![3]]
        );
    }

    #[test]
    fn parse_one_based_cycles() {
        let x = Permutation::parse_cycles(5, "(1 2)(3 4 5)").unwrap();
        assert_eq!(x.images(), &[1, 0, 3, 4, 2]);
        assert_eq!(x.to_cycle_string(), "(1 2)(3 4 5)");
        assert!(Permutation::parse_cycles(3, "").unwrap().is_identity());
        assert!(Permutation::parse_cycles(3, "()").unwrap().is_identity());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(1 1)").is_err());
    }

    #[test]
    fn non_bijection_rejected() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_images(vec![1, 2]).is_err());
    }

    #[test]
    fn order_and_pow() {
        let x = Permutation::parse_cycles(5, "(1 2)(3 4 5)").unwrap();
        assert_eq!(x.order(), 6);
        assert!(x.pow(6).is_identity());
        assert_eq!(x.pow(-1), x.inverse());
        assert_eq!(x.pow(7), x);
        assert_eq!(x.cycle_type(), vec![3, 2]);
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..12).prop_flat_map(|n| {
            Just((0..n as u32).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn inverse_cancels(x in arb_perm()) {
            prop_assert!(x.compose(&x.inverse()).unwrap().is_identity());
            prop_assert!(x.inverse().compose(&x).unwrap().is_identity());
        }

        #[test]
        fn cycles_are_canonical_and_round_trip(x in arb_perm()) {
            let cs = x.cycles();
            prop_assert_eq!(cs.to_permutation(), x.clone());
            let mut count = 0;
            let mut prev_start = None;
            for c in cs.cycles() {
                prop_assert_eq!(c[0], *c.iter().min().unwrap());
                if let Some(s) = prev_start { prop_assert!(c[0] > s); }
                prev_start = Some(c[0]);
                for j in 0..c.len() {
                    prop_assert_eq!(x.apply(c[j]), c[(j + 1) % c.len()]);
                }
                count += c.len();
            }
            prop_assert_eq!(count, x.degree());
        }

        #[test]
        fn cycle_string_round_trips(x in arb_perm()) {
            let s = x.to_cycle_string();
            prop_assert_eq!(Permutation::parse_cycles(x.degree(), &s).unwrap(), x);
        }
    }
}
