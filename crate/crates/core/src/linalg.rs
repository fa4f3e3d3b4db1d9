//! Exact sparse row reduction over `FieldElement`.

use crate::field::FieldElement;

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow = Vec<(usize, FieldElement)>;

/// Reduced row echelon form: `rows[k]` has a 1 at `pivots[k]` and zeros in
/// every other pivot column. Pivots are strictly increasing.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<SparseRow>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn normalize_row(mut row: SparseRow) -> SparseRow {
    row.sort_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, x) in row {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = last.1.add_ref(&x),
            _ => out.push((c, x)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// `a - c·b`.
pub fn row_axpy(a: &SparseRow, c: &FieldElement, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, c.mul_ref(&b[j].1).neg()));
            j += 1;
        } else {
            let x = a[i].1.sub_ref(&c.mul_ref(&b[j].1));
            if !x.is_zero() {
                out.push((ca, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn scale_row(row: &SparseRow, c: &FieldElement) -> SparseRow {
    row.iter().map(|(j, x)| (*j, x.mul_ref(c))).collect()
}

fn entry_at(row: &SparseRow, col: usize) -> Option<&FieldElement> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|k| &row[k].1)
}

/// Row-reduces the given rows. Pivots are chosen among rows sharing the
/// leftmost column by smallest entry size, which keeps intermediate
/// rational functions small.
pub fn rref(rows: Vec<SparseRow>) -> Rref {
    let mut pending: Vec<SparseRow> = rows.into_iter().map(normalize_row).filter(|r| !r.is_empty()).collect();
    let mut done: Vec<SparseRow> = Vec::new();
    while !pending.is_empty() {
        let col = pending.iter().map(|r| r[0].0).min().expect("nonempty");
        let best = pending
            .iter()
            .enumerate()
            .filter(|(_, r)| r[0].0 == col)
            .min_by_key(|(_, r)| (r[0].1.weight(), r.len()))
            .map(|(k, _)| k)
            .expect("some row has the column");
        let p = pending.swap_remove(best);
        let inv = p[0].1.inv().expect("pivot nonzero");
        let p = scale_row(&p, &inv);
        let mut next = Vec::with_capacity(pending.len());
        for r in pending {
            if r[0].0 == col {
                let c = r[0].1.clone();
                let nr = row_axpy(&r, &c, &p);
                if !nr.is_empty() {
                    next.push(nr);
                }
            } else {
                next.push(r);
            }
        }
        pending = next;
        done.push(p);
    }
    let pivots: Vec<usize> = done.iter().map(|r| r[0].0).collect();
    for k in (0..done.len()).rev() {
        let pk = pivots[k];
        let (head, tail) = done.split_at_mut(k);
        let rk = &tail[0];
        for row in head.iter_mut() {
            if let Some(c) = entry_at(row, pk).cloned() {
                *row = row_axpy(row, &c, rk);
            }
        }
    }
    Rref { rows: done, pivots }
}

/// Basis of `{x : rows·x = 0}` as sparse vectors of length `ncols`.
pub fn nullspace(rows: Vec<SparseRow>, ncols: usize) -> Vec<SparseRow> {
    let r = rref(rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v: SparseRow = vec![(f, FieldElement::one())];
        for (k, row) in r.rows.iter().enumerate() {
            if let Some(c) = entry_at(row, f) {
                v.push((r.pivots[k], c.neg()));
            }
        }
        out.push(normalize_row(v));
    }
    out
}

pub fn rank(rows: Vec<SparseRow>) -> usize {
    rref(rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(xs: &[i64]) -> SparseRow {
        normalize_row(xs.iter().enumerate().map(|(j, &x)| (j, FieldElement::from_int(x))).collect())
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let rows = vec![row(&[1, 2, 3, 4]), row(&[0, 1, -1, 2])];
        let ns = nullspace(rows.clone(), 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let mut acc = FieldElement::zero();
                for (j, x) in r {
                    if let Some(y) = entry_at(v, *j) {
                        acc = acc + x * y;
                    }
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn rref_is_fully_reduced() {
        let r = rref(vec![row(&[2, 1, 0]), row(&[1, 1, 1])]);
        assert_eq!(r.pivots, vec![0, 1]);
        assert!(entry_at(&r.rows[0], 1).is_none());
    }
}
