//! Exact Gaussian elimination over a [`FieldSpec`] on sparse rows.

use std::collections::BTreeMap;

use crate::field::{FieldSpec, FieldValue};

pub type SparseRow = BTreeMap<usize, FieldValue>;

/// Reduced row echelon form, built one row at a time. Each pivot is the
/// smallest column of its row and pivot rows are scaled to a leading one.
#[derive(Clone, Debug)]
pub struct Rref {
    field: FieldSpec,
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

fn axpy(row: &mut SparseRow, factor: &FieldValue, other: &SparseRow) {
    for (col, v) in other {
        let t = factor * v;
        match row.get_mut(col) {
            Some(existing) => {
                *existing = &*existing + &t;
                if existing.is_zero() {
                    row.remove(col);
                }
            }
            None => {
                if !t.is_zero() {
                    row.insert(*col, t);
                }
            }
        }
    }
}

impl Rref {
    pub fn new(field: FieldSpec, ncols: usize) -> Self {
        Rref {
            field,
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn push(&mut self, mut row: SparseRow) -> bool {
        row.retain(|c, v| {
            debug_assert!(*c < self.ncols);
            !v.is_zero()
        });
        // Pivot rows are zero in every other pivot column, so one pass suffices.
        let hits: Vec<usize> = row
            .keys()
            .filter(|c| self.pivots.contains_key(c))
            .copied()
            .collect();
        for col in hits {
            if let Some(v) = row.get(&col).cloned() {
                axpy(&mut row, &-&v, &self.pivots[&col]);
            }
        }
        let Some((&lead, lead_val)) = row.iter().next() else {
            return false;
        };
        let inv = lead_val.inv().expect("nonzero pivot");
        for v in row.values_mut() {
            *v = &*v * &inv;
        }
        for prow in self.pivots.values_mut() {
            if let Some(v) = prow.get(&lead).cloned() {
                axpy(prow, &-&v, &row);
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    /// Basis of the nullspace, one vector per free column `f`: a one at `f`,
    /// minus the pivot rows' entries in column `f` at the pivot columns.
    /// Vectors are sparse `(column, value)` lists in increasing column order.
    pub fn nullspace(&self) -> Vec<Vec<(usize, FieldValue)>> {
        (0..self.ncols)
            .filter(|f| !self.pivots.contains_key(f))
            .map(|f| {
                let mut v: Vec<(usize, FieldValue)> = self
                    .pivots
                    .iter()
                    .filter_map(|(&p, row)| row.get(&f).map(|x| (p, -x)))
                    .collect();
                v.push((f, self.field.one()));
                v
            })
            .collect()
    }
}

/// Nullspace of the matrix whose rows are `rows`.
pub fn nullspace(
    field: FieldSpec,
    ncols: usize,
    rows: impl IntoIterator<Item = SparseRow>,
) -> Vec<Vec<(usize, FieldValue)>> {
    let mut rref = Rref::new(field, ncols);
    for r in rows {
        rref.push(r);
    }
    rref.nullspace()
}
