//! Row-reduced subspaces of GF(q)^m.

use crate::field::Field;
use crate::ring::raw;

/// A subspace held as its reduced row echelon basis, rows sorted by pivot.
/// Two subspaces are equal iff their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: &Field, ncols: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I>(field: &Field, ncols: usize, rows: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut s = Subspace::new(field, ncols);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Clears every pivot column of `v` using the basis rows.
    pub fn reduce(&self, v: &mut [u32]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                raw::axpy(&self.field, v, self.field.neg(c), row);
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&c| c == 0)
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.ncols, "row length mismatch");
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let f = &self.field;
        let inv = f.inv(v[pc]).expect("nonzero pivot");
        for c in v.iter_mut() {
            *c = f.mul(*c, inv);
        }
        for row in &mut self.rows {
            let c = row[pc];
            if c != 0 {
                raw::axpy(f, row, f.neg(c), &v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.rows.insert(at, v);
        self.pivots.insert(at, pc);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Basis of `{ v : v . r = 0 for every basis row r }` under the plain
    /// dot product of GF(q)^m.
    pub fn annihilator_basis(&self) -> Vec<Vec<u32>> {
        let f = &self.field;
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0; self.ncols];
                v[fc] = 1;
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = f.neg(row[fc]);
                }
                v
            })
            .collect()
    }
}
