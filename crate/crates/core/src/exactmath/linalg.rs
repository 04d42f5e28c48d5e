//! Row reduction and the derived constructions: kernels, particular solutions,
//! inverses, equalizers and coequalizers.
//!
//! Elimination runs on sparse rows. Two pivot orders are used: `rref` and
//! `solve_linear` scan columns left to right; `kernel`, `equalizer` and
//! `coequalizer` scan right to left, so the free (retained) coordinates are the
//! lowest-index ones. The kernel of [[1, 1]] is therefore spanned by (1, -1).

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use super::MathError;

pub type SparseRow = Vec<(usize, Scalar)>;

fn row_from_matrix(m: &Matrix, i: usize) -> SparseRow {
    (0..m.cols())
        .filter_map(|j| {
            let v = m.get(i, j);
            (!v.is_zero()).then(|| (j, v.clone()))
        })
        .collect()
}

fn lookup(row: &SparseRow, c: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&c, |e| e.0)
        .ok()
        .map(|k| &row[k].1)
}

/// row - f * piv, dropping cancelled entries.
fn axpy(row: &SparseRow, f: &Scalar, piv: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < piv.len() {
        let ca = row.get(a).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = piv.get(b).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(row[a].clone());
            a += 1;
        } else if cb < ca {
            out.push((cb, -&(f * &piv[b].1)));
            b += 1;
        } else {
            let v = &row[a].1 - &(f * &piv[b].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

fn scale_row(row: &mut SparseRow, s: &Scalar) {
    for e in row.iter_mut() {
        e.1 = &e.1 * s;
    }
}

struct Echelon {
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
    transform: Option<Vec<SparseRow>>,
}

/// Gauss-Jordan elimination. Pivot columns are searched in `order`; the pivot
/// row is the first remaining row with a nonzero entry, scaled to 1.
fn echelon(
    mut rows: Vec<SparseRow>,
    order: impl Iterator<Item = usize>,
    track: Option<FieldSpec>,
) -> Result<Echelon, MathError> {
    let n = rows.len();
    let mut t: Option<Vec<SparseRow>> =
        track.map(|field| (0..n).map(|i| vec![(i, Scalar::one(field))]).collect());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in order {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| lookup(&rows[i], c).is_some()) else {
            continue;
        };
        rows.swap(r, p);
        if let Some(t) = t.as_mut() {
            t.swap(r, p);
        }
        let inv = lookup(&rows[r], c).unwrap().inv()?;
        scale_row(&mut rows[r], &inv);
        if let Some(t) = t.as_mut() {
            scale_row(&mut t[r], &inv);
        }
        let piv = rows[r].clone();
        let tpiv = t.as_ref().map(|t| t[r].clone());
        for i in 0..n {
            if i == r {
                continue;
            }
            if let Some(f) = lookup(&rows[i], c).cloned() {
                rows[i] = axpy(&rows[i], &f, &piv);
                if let (Some(t), Some(tp)) = (t.as_mut(), tpiv.as_ref()) {
                    t[i] = axpy(&t[i], &f, tp);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(Echelon {
        rows,
        pivots,
        transform: t,
    })
}

fn dense(field: FieldSpec, rows: &[SparseRow], ncols: usize) -> Matrix {
    let mut m = Matrix::zeros(field, rows.len(), ncols);
    for (i, r) in rows.iter().enumerate() {
        for (j, v) in r {
            m.set(i, *j, v.clone());
        }
    }
    m
}

/// Reduced row-echelon form `R`, pivot columns and an invertible `T` with T·A = R.
pub fn rref(a: &Matrix) -> (Matrix, Vec<usize>, Matrix) {
    let rows = (0..a.rows()).map(|i| row_from_matrix(a, i)).collect();
    let e = echelon(rows, 0..a.cols(), Some(a.field())).expect("pivots are nonzero");
    let r = dense(a.field(), &e.rows, a.cols());
    let t = dense(a.field(), e.transform.as_ref().unwrap(), a.rows());
    (r, e.pivots, t)
}

pub fn rank(a: &Matrix) -> usize {
    let rows = (0..a.rows()).map(|i| row_from_matrix(a, i)).collect();
    echelon(rows, 0..a.cols(), None).unwrap().pivots.len()
}

/// Kernel basis from sparse constraint rows over `ncols` unknowns.
pub fn kernel_of_rows(field: FieldSpec, ncols: usize, rows: Vec<SparseRow>) -> Matrix {
    kernel_with_free(field, ncols, rows).0
}

fn kernel_with_free(field: FieldSpec, ncols: usize, rows: Vec<SparseRow>) -> (Matrix, Vec<usize>) {
    let e = echelon(rows, (0..ncols).rev(), None).unwrap();
    let mut is_pivot = vec![false; ncols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ncols).filter(|&j| !is_pivot[j]).collect();
    let mut k = Matrix::zeros(field, ncols, free.len());
    for (t, &j) in free.iter().enumerate() {
        k.set(j, t, Scalar::one(field));
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            if let Some(v) = lookup(row, j) {
                k.set(p, t, -v);
            }
        }
    }
    (k, free)
}

/// Columns form a basis of the null space of `a`.
pub fn kernel(a: &Matrix) -> Matrix {
    let rows = (0..a.rows()).map(|i| row_from_matrix(a, i)).collect();
    kernel_of_rows(a.field(), a.cols(), rows)
}

/// Particular solution of A·X = B with free variables set to zero.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Matrix, MathError> {
    if a.rows() != b.rows() {
        return Err(MathError::Shape(format!(
            "solve_linear: A has {} rows, B has {}",
            a.rows(),
            b.rows()
        )));
    }
    let aug = a.hstack(b);
    let rows = (0..aug.rows()).map(|i| row_from_matrix(&aug, i)).collect();
    let e = echelon(rows, 0..a.cols(), None)?;
    let rank = e.pivots.len();
    if e.rows[rank..].iter().any(|r| !r.is_empty()) {
        return Err(MathError::NoSolution);
    }
    let mut x = Matrix::zeros(a.field(), a.cols(), b.cols());
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        for (j, v) in row {
            if *j >= a.cols() {
                x.set(p, j - a.cols(), v.clone());
            }
        }
    }
    Ok(x)
}

/// Particular solution of a sparse system (row i)·x = rhs[i], free variables zero.
pub fn solve_rows(
    field: FieldSpec,
    ncols: usize,
    rows: Vec<SparseRow>,
    rhs: Vec<Scalar>,
) -> Result<Vec<Scalar>, MathError> {
    if rows.len() != rhs.len() {
        return Err(MathError::Shape(
            "solve_rows: row and rhs counts differ".into(),
        ));
    }
    let aug = rows
        .into_iter()
        .zip(rhs)
        .map(|(mut r, b)| {
            if !b.is_zero() {
                r.push((ncols, b));
            }
            r
        })
        .collect();
    let e = echelon(aug, 0..ncols, None)?;
    let rank = e.pivots.len();
    if e.rows[rank..].iter().any(|r| !r.is_empty()) {
        return Err(MathError::NoSolution);
    }
    let mut x = vec![Scalar::zero(field); ncols];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        if let Some(v) = lookup(row, ncols) {
            x[p] = v.clone();
        }
    }
    Ok(x)
}

pub fn inverse(a: &Matrix) -> Result<Matrix, MathError> {
    if !a.is_square() {
        return Err(MathError::Shape(format!("inverse of {:?}", a.shape())));
    }
    let id = Matrix::identity(a.field(), a.rows());
    let x = solve_linear(a, &id).map_err(|_| MathError::Singular)?;
    if a * &x != id {
        return Err(MathError::Singular);
    }
    Ok(x)
}

pub fn is_invertible(a: &Matrix) -> bool {
    a.is_square() && rank(a) == a.rows()
}

/// A subspace given by an injective inclusion and a chosen left inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubSpace {
    pub ambient_dim: usize,
    pub inclusion: Matrix,
    pub retraction: Matrix,
}

impl SubSpace {
    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }

    /// Subspace spanned by kernel-style columns (identity on the free coordinates).
    pub fn from_kernel_basis(inclusion: Matrix) -> Self {
        let field = inclusion.field();
        let ambient = inclusion.rows();
        let d = inclusion.cols();
        let mut retraction = Matrix::zeros(field, d, ambient);
        for t in 0..d {
            // The free coordinate of column t is its first entry equal to one
            // whose row is zero in every other column.
            let j = (0..ambient)
                .find(|&i| {
                    inclusion.get(i, t).is_one()
                        && (0..d).all(|s| s == t || inclusion.get(i, s).is_zero())
                })
                .expect("kernel basis column without a free coordinate");
            retraction.set(t, j, Scalar::one(field));
        }
        SubSpace {
            ambient_dim: ambient,
            inclusion,
            retraction,
        }
    }
}

/// A quotient given by a surjective projection and a chosen right inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotSpace {
    pub ambient_dim: usize,
    pub projection: Matrix,
    pub section: Matrix,
}

impl QuotSpace {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

fn check_same_shape(f: &Matrix, g: &Matrix) -> Result<(), MathError> {
    if f.shape() != g.shape() {
        return Err(MathError::Shape(format!(
            "parallel maps have shapes {:?} and {:?}",
            f.shape(),
            g.shape()
        )));
    }
    Ok(())
}

/// The subspace on which f and g agree.
pub fn equalizer(f: &Matrix, g: &Matrix) -> Result<SubSpace, MathError> {
    check_same_shape(f, g)?;
    let d = f - g;
    let rows = (0..d.rows()).map(|i| row_from_matrix(&d, i)).collect();
    Ok(equalizer_of_rows(f.field(), f.cols(), rows))
}

/// Equalizer from sparse rows of f - g; the retraction reads off the free coordinates.
pub fn equalizer_of_rows(field: FieldSpec, ncols: usize, rows: Vec<SparseRow>) -> SubSpace {
    let (inclusion, free) = kernel_with_free(field, ncols, rows);
    let mut retraction = Matrix::zeros(field, free.len(), ncols);
    for (t, &j) in free.iter().enumerate() {
        retraction.set(t, j, Scalar::one(field));
    }
    SubSpace {
        ambient_dim: ncols,
        inclusion,
        retraction,
    }
}

/// The quotient of the target by the image of f - g.
pub fn coequalizer(f: &Matrix, g: &Matrix) -> Result<QuotSpace, MathError> {
    check_same_shape(f, g)?;
    let d = f - g;
    let m = d.rows();
    let rows: Vec<SparseRow> = (0..d.cols())
        .map(|j| {
            (0..m)
                .filter_map(|i| {
                    let v = d.get(i, j);
                    (!v.is_zero()).then(|| (i, v.clone()))
                })
                .collect()
        })
        .collect();
    Ok(quotient_by_rows(f.field(), m, rows))
}

/// Quotient of an m-dimensional space by the span of the given sparse vectors.
pub fn quotient_by_rows(field: FieldSpec, m: usize, rows: Vec<SparseRow>) -> QuotSpace {
    let e = echelon(rows, (0..m).rev(), None).unwrap();
    let mut is_pivot = vec![false; m];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..m).filter(|&j| !is_pivot[j]).collect();
    let mut pos = vec![usize::MAX; m];
    for (t, &j) in free.iter().enumerate() {
        pos[j] = t;
    }
    let d = free.len();
    let mut projection = Matrix::zeros(field, d, m);
    let mut section = Matrix::zeros(field, m, d);
    for (t, &j) in free.iter().enumerate() {
        projection.set(t, j, Scalar::one(field));
        section.set(j, t, Scalar::one(field));
    }
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        for (j, v) in row {
            if *j != p {
                projection.set(pos[*j], p, -v);
            }
        }
    }
    QuotSpace {
        ambient_dim: m,
        projection,
        section,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(q(), 3);
        let (r, p, t) = rref(&id);
        assert_eq!((r, p, t), (id.clone(), vec![0, 1, 2], id));
        let z = Matrix::zeros(q(), 2, 3);
        let (r, p, t) = rref(&z);
        assert_eq!((r, p, t), (z, vec![], Matrix::identity(q(), 2)));
        let a = Matrix::from_ints(q(), 2, 2, &[1, 2, 2, 4]);
        let (r, p, t) = rref(&a);
        assert_eq!(p, vec![0]);
        assert_eq!(&t * &a, r);
        assert_eq!(r, Matrix::from_ints(q(), 2, 2, &[1, 2, 0, 0]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::identity(q(), 3)).cols(), 0);
        assert_eq!(kernel(&Matrix::zeros(q(), 2, 3)), Matrix::identity(q(), 3));
        let k = kernel(&Matrix::from_ints(q(), 1, 2, &[1, 1]));
        assert_eq!(k, Matrix::from_ints(q(), 2, 1, &[1, -1]));
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_ints(q(), 2, 1, &[5, 7]);
        assert_eq!(solve_linear(&Matrix::identity(q(), 2), &b).unwrap(), b);
        let x = solve_linear(
            &Matrix::from_ints(q(), 1, 2, &[1, 1]),
            &Matrix::from_ints(q(), 1, 1, &[2]),
        )
        .unwrap();
        assert_eq!(x, Matrix::from_ints(q(), 2, 1, &[2, 0]));
        let none = solve_linear(
            &Matrix::from_ints(q(), 1, 1, &[0]),
            &Matrix::from_ints(q(), 1, 1, &[1]),
        );
        assert_eq!(none, Err(MathError::NoSolution));
    }

    #[test]
    fn equalizer_examples() {
        let id = Matrix::identity(q(), 2);
        let e = equalizer(&id, &id).unwrap();
        assert_eq!(e.dim(), 2);
        let e = equalizer(&Matrix::identity(q(), 1), &Matrix::zeros(q(), 1, 1)).unwrap();
        assert_eq!(e.dim(), 0);
        assert!(equalizer(&id, &Matrix::identity(q(), 3)).is_err());
    }

    #[test]
    fn coequalizer_examples() {
        let id = Matrix::identity(q(), 2);
        let c = coequalizer(&id, &id).unwrap();
        assert_eq!(c.projection, id);
        let c = coequalizer(&Matrix::identity(q(), 1), &Matrix::zeros(q(), 1, 1)).unwrap();
        assert_eq!(c.dim(), 0);
        // Identify e0 with e1 in a 3-space: the quotient keeps e0 and e2.
        let f = Matrix::from_ints(q(), 3, 1, &[1, 0, 0]);
        let g = Matrix::from_ints(q(), 3, 1, &[0, 1, 0]);
        let c = coequalizer(&f, &g).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(&c.projection * &f, &c.projection * &g);
        assert_eq!(&c.projection * &c.section, Matrix::identity(q(), 2));
    }
}
