//! Square matrices over a [`FiniteField`] and projective point sets.

use std::collections::HashMap;

use crate::field::{FieldElement, FiniteField};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    d: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn identity(d: usize) -> Self {
        let mut entries = vec![FieldElement(0); d * d];
        for i in 0..d {
            entries[i * d + i] = FieldElement(1);
        }
        Matrix { d, entries }
    }

    pub fn from_rows(rows: &[Vec<FieldElement>]) -> Self {
        let d = rows.len();
        assert!(rows.iter().all(|r| r.len() == d), "matrix must be square");
        Matrix {
            d,
            entries: rows.concat(),
        }
    }

    /// Identity plus `value` in position `(i, j)`.
    pub fn elementary(d: usize, i: usize, j: usize, value: FieldElement) -> Self {
        let mut m = Self::identity(d);
        m.entries[i * d + j] = value;
        m
    }

    pub fn diagonal(diag: &[FieldElement]) -> Self {
        let d = diag.len();
        let mut m = Matrix {
            d,
            entries: vec![FieldElement(0); d * d],
        };
        for (i, &x) in diag.iter().enumerate() {
            m.entries[i * d + i] = x;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.d + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.entries[i * self.d + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.d).map(|i| self.get(i, j)).collect()
    }

    pub fn mul(&self, other: &Matrix, k: &FiniteField) -> Matrix {
        let d = self.d;
        let mut entries = vec![FieldElement(0); d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = FieldElement(0);
                for t in 0..d {
                    acc = k.add(acc, k.mul(self.get(i, t), other.get(t, j)));
                }
                entries[i * d + j] = acc;
            }
        }
        Matrix { d, entries }
    }

    pub fn apply(&self, v: &[FieldElement], k: &FiniteField) -> Vec<FieldElement> {
        (0..self.d)
            .map(|i| {
                (0..self.d).fold(FieldElement(0), |acc, j| {
                    k.add(acc, k.mul(self.get(i, j), v[j]))
                })
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.d;
        let mut entries = vec![FieldElement(0); d * d];
        for i in 0..d {
            for j in 0..d {
                entries[j * d + i] = self.get(i, j);
            }
        }
        Matrix { d, entries }
    }

    pub fn map(&self, f: impl Fn(FieldElement) -> FieldElement) -> Matrix {
        Matrix {
            d: self.d,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn scale_column(&mut self, j: usize, s: FieldElement, k: &FiniteField) {
        for i in 0..self.d {
            let x = self.get(i, j);
            self.set(i, j, k.mul(x, s));
        }
    }

    pub fn det(&self, k: &FiniteField) -> FieldElement {
        let (_, det) = self.eliminate(k);
        det
    }

    pub fn inverse(&self, k: &FiniteField) -> Option<Matrix> {
        self.eliminate(k).0
    }

    /// Gauss-Jordan elimination returning the inverse (if any) and the determinant.
    fn eliminate(&self, k: &FiniteField) -> (Option<Matrix>, FieldElement) {
        let d = self.d;
        let mut a = self.clone();
        let mut inv = Matrix::identity(d);
        let mut det = FieldElement(1);
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| a.get(r, col) != FieldElement(0)) else {
                return (None, FieldElement(0));
            };
            if pivot != col {
                for j in 0..d {
                    a.entries.swap(pivot * d + j, col * d + j);
                    inv.entries.swap(pivot * d + j, col * d + j);
                }
                det = k.neg(det);
            }
            let pv = a.get(col, col);
            det = k.mul(det, pv);
            let pinv = k.inv(pv).expect("nonzero pivot");
            for j in 0..d {
                a.set(col, j, k.mul(a.get(col, j), pinv));
                inv.set(col, j, k.mul(inv.get(col, j), pinv));
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col);
                if factor == FieldElement(0) {
                    continue;
                }
                for j in 0..d {
                    a.set(r, j, k.sub(a.get(r, j), k.mul(factor, a.get(col, j))));
                    inv.set(r, j, k.sub(inv.get(r, j), k.mul(factor, inv.get(col, j))));
                }
            }
        }
        (Some(inv), det)
    }
}

/// Basis of `{v : rows·v = 0}`.
pub fn nullspace(rows: &[Vec<FieldElement>], d: usize, k: &FiniteField) -> Vec<Vec<FieldElement>> {
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..d {
        let Some(p) = (r..m.len()).find(|&i| m[i][col] != FieldElement(0)) else {
            continue;
        };
        m.swap(r, p);
        let inv = k.inv(m[r][col]).unwrap();
        for x in m[r].iter_mut() {
            *x = k.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != r && m[i][col] != FieldElement(0) {
                let f = m[i][col];
                let pivot = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot) {
                    *x = k.sub(*x, k.mul(f, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![FieldElement(0); d];
            v[fc] = FieldElement(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(m[row][fc]);
            }
            v
        })
        .collect()
}

/// Points of `PG(d-1, q)`: nonzero vectors scaled so that the last nonzero
/// coordinate is 1, listed in lexicographic order.
pub struct ProjectiveSpace {
    d: usize,
    points: Vec<Vec<FieldElement>>,
    index: HashMap<Vec<FieldElement>, u32>,
}

impl ProjectiveSpace {
    pub fn new(d: usize, k: &FiniteField) -> Self {
        let q = k.order() as u64;
        let total = q.pow(d as u32);
        let mut points = Vec::new();
        for code in 1..total {
            let mut v = Vec::with_capacity(d);
            let mut c = code;
            for _ in 0..d {
                v.push(FieldElement((c % q) as u32));
                c /= q;
            }
            // coordinates little-endian in `code`; keep only normalized vectors
            if v.iter().rev().find(|x| x.0 != 0) == Some(&FieldElement(1)) {
                points.push(v);
            }
        }
        points.sort();
        let index = points
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as u32))
            .collect();
        ProjectiveSpace { d, points, index }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    pub fn normalize(&self, v: &[FieldElement], k: &FiniteField) -> Option<Vec<FieldElement>> {
        let last = v.iter().rev().find(|x| x.0 != 0)?;
        let s = k.inv(*last)?;
        Some(v.iter().map(|&x| k.mul(x, s)).collect())
    }

    pub fn index_of(&self, v: &[FieldElement], k: &FiniteField) -> Option<u32> {
        self.index.get(&self.normalize(v, k)?).copied()
    }

    /// The permutation `[v] ↦ [M v]`.
    pub fn action(&self, m: &Matrix, k: &FiniteField) -> Permutation {
        self.map_points(k, |v| m.apply(v, k))
    }

    /// Induced permutation of any semilinear map of the underlying space.
    pub fn map_points(
        &self,
        k: &FiniteField,
        f: impl Fn(&[FieldElement]) -> Vec<FieldElement>,
    ) -> Permutation {
        let images = self
            .points
            .iter()
            .map(|v| self.index_of(&f(v), k).expect("map is invertible"))
            .collect();
        Permutation::from_images(images).expect("semilinear bijection")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn projective_point_counts() {
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(ProjectiveSpace::new(3, &f4).len(), 21);
        let f8 = make_field(2, 3).unwrap();
        assert_eq!(ProjectiveSpace::new(2, &f8).len(), 9);
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(ProjectiveSpace::new(2, &f3).len(), 4);
    }

    #[test]
    fn normalization_is_unique() {
        let f5 = make_field(5, 1).unwrap();
        let ps = ProjectiveSpace::new(2, &f5);
        for v in ps.points() {
            for s in 1..5 {
                let w: Vec<_> = v.iter().map(|&x| f5.mul(x, FieldElement(s))).collect();
                assert_eq!(ps.normalize(&w, &f5).as_ref(), Some(v));
            }
        }
    }

    #[test]
    fn inverse_and_det() {
        let f7 = make_field(7, 1).unwrap();
        let e = |x| FieldElement(x);
        let m = Matrix::from_rows(&[vec![e(2), e(1)], vec![e(3), e(4)]]);
        assert_eq!(m.det(&f7), e(5)); // 8 - 3
        let inv = m.inverse(&f7).unwrap();
        assert_eq!(m.mul(&inv, &f7), Matrix::identity(2));
        let sing = Matrix::from_rows(&[vec![e(1), e(2)], vec![e(2), e(4)]]);
        assert!(sing.inverse(&f7).is_none());
        assert_eq!(sing.det(&f7), e(0));
    }

    #[test]
    fn nullspace_basis() {
        let f3 = make_field(3, 1).unwrap();
        let e = |x| FieldElement(x);
        let rows = vec![vec![e(1), e(1), e(1)]];
        let ns = nullspace(&rows, 3, &f3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s = v.iter().fold(e(0), |a, &x| f3.add(a, x));
            assert_eq!(s, e(0));
        }
    }
}
