use crate::group::{ElementId, FiniteGroup};
use crate::par;

/// Partition of a group into conjugacy classes.
///
/// Classes are numbered by their smallest element id, and each class lists its
/// members in ascending order, so the table is canonical for a given group.
#[derive(Clone, Debug)]
pub struct ConjClassTable {
    classes: Vec<Vec<ElementId>>,
    class_of: Vec<u32>,
}

impl ConjClassTable {
    /// Orbits of the conjugation action of the generators, joined with a
    /// union-find. The per-element conjugates are computed in parallel.
    pub(crate) fn compute(group: &FiniteGroup) -> Self {
        let n = group.order();
        let gens = group.generator_ids();
        let images: Vec<Vec<ElementId>> =
            par::map_range(n, |x| gens.iter().map(|&s| group.conj(x as u32, s)).collect());
        let mut uf = UnionFind::new(n);
        for (x, ys) in images.iter().enumerate() {
            for &y in ys {
                uf.union(x, y as usize);
            }
        }
        Self::from_partition(uf.groups())
    }

    /// Build from disjoint blocks covering `0..n`.
    pub(crate) fn from_partition(mut classes: Vec<Vec<ElementId>>) -> Self {
        for c in classes.iter_mut() {
            c.sort_unstable();
        }
        classes.sort_unstable_by_key(|c| c[0]);
        let n: usize = classes.iter().map(Vec::len).sum();
        let mut class_of = vec![0u32; n];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x as usize] = i as u32;
            }
        }
        ConjClassTable { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<ElementId>] {
        &self.classes
    }

    pub fn class(&self, id: u32) -> &[ElementId] {
        &self.classes[id as usize]
    }

    #[inline]
    pub fn class_of(&self, x: ElementId) -> u32 {
        self.class_of[x as usize]
    }

    pub fn class_size(&self, id: u32) -> usize {
        self.classes[id as usize].len()
    }

    pub fn representative(&self, id: u32) -> ElementId {
        self.classes[id as usize][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn max_class_size(&self) -> usize {
        self.classes.iter().map(Vec::len).max().unwrap_or(1)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so roots are class minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }

    /// Blocks in order of their smallest member.
    pub(crate) fn groups(mut self) -> Vec<Vec<ElementId>> {
        let n = self.parent.len();
        let mut slot = vec![u32::MAX; n];
        let mut out: Vec<Vec<ElementId>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if slot[r] == u32::MAX {
                slot[r] = out.len() as u32;
                out.push(Vec::new());
            }
            out[slot[r] as usize].push(x as u32);
        }
        out
    }
}
