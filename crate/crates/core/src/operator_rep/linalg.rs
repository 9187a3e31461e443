use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Rank of the matrix whose nonzero rows are `rows`, by sparse Gaussian
/// elimination. Entries with modulus `<= tol` count as zero (exact scalars
/// only drop true zeros).
pub fn rank_of_rows<S: Scalar>(mut rows: Vec<BTreeMap<usize, S>>, tol: f64) -> usize {
    let mut rank = 0;
    loop {
        for row in rows.iter_mut() {
            row.retain(|_, v| !v.is_negligible(tol));
        }
        rows.retain(|r| !r.is_empty());
        let Some(col) = rows.iter().filter_map(|r| r.keys().next().copied()).min() else {
            return rank;
        };
        let pivot_at = rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.get(&col).map(|v| (i, v.modulus(), r.len())))
            .max_by(
                |a, b| {
                    if S::BACKEND == crate::scalar::Backend::Exact {
                        b.2.cmp(&a.2)
                    } else {
                        a.1.total_cmp(&b.1)
                    }
                },
            )
            .map(|(i, _, _)| i)
            .expect("some row starts at the pivot column");
        let pivot = rows.swap_remove(pivot_at);
        rank += 1;
        let inv = pivot[&col].recip();
        for row in rows.iter_mut() {
            let Some(lead) = row.remove(&col) else { continue };
            let factor = lead * inv.clone();
            for (j, p) in pivot.iter().filter(|(j, _)| **j != col) {
                let delta = -(factor.clone() * p.clone());
                let v = match row.remove(j) {
                    Some(old) => old + delta,
                    None => delta,
                };
                row.insert(*j, v);
            }
        }
    }
}

/// Rank of the submatrix `rows × cols` of a dense-by-callback matrix.
pub fn rank_of_submatrix<S: Scalar>(
    rows: &[usize],
    cols: &[usize],
    entry: impl Fn(usize, usize) -> S,
    tol: f64,
) -> usize {
    let data = rows
        .iter()
        .map(|&i| {
            cols.iter()
                .enumerate()
                .map(|(jj, &j)| (jj, entry(i, j)))
                .filter(|(_, v)| !v.is_negligible(tol))
                .collect::<BTreeMap<_, _>>()
        })
        .collect();
    rank_of_rows(data, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{real, ExactComplex};
    use num_complex::Complex64;

    fn dense(rows: &[&[i64]]) -> Vec<BTreeMap<usize, ExactComplex>> {
        rows.iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(j, v)| (j, real(*v, 1))).collect())
            .collect()
    }

    #[test]
    fn exact_ranks() {
        assert_eq!(rank_of_rows(dense(&[&[1, 2], &[2, 4]]), 0.0), 1);
        assert_eq!(rank_of_rows(dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]), 0.0), 2);
        assert_eq!(rank_of_rows(dense(&[&[0, 1], &[1, 0]]), 0.0), 2);
        assert_eq!(rank_of_rows(dense(&[]), 0.0), 0);
    }

    #[test]
    fn float_rank_with_tolerance() {
        let rows = vec![
            [(0, Complex64::new(1.0, 0.0)), (1, Complex64::new(1.0, 0.0))].into_iter().collect(),
            [(0, Complex64::new(1.0, 0.0)), (1, Complex64::new(1.0 + 1e-15, 0.0))].into_iter().collect(),
        ];
        assert_eq!(rank_of_rows(rows, 1e-12), 1);
    }

    #[test]
    fn submatrix_rank() {
        let m = [[1, 0, 0], [0, 1, 0], [0, 0, 0]];
        let r = rank_of_submatrix(&[0, 1, 2], &[1, 2], |i, j| real(m[i][j], 1), 0.0);
        assert_eq!(r, 1);
    }
}
