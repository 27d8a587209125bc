//! Exact Gaussian elimination: reduced row echelon forms, kernels, images,
//! coimages, idempotent splitting and linear solves.
//!
//! Pivoting is deterministic (leftmost nonzero column); the reduced row
//! echelon form of a matrix is unique, so every derived basis is reproducible.

use crate::error::{Error, Result};
use crate::exactla::field::Scalar;
use crate::exactla::linmap::{Accumulator, LinMap, SparseRow};

/// Reduced row echelon form: nonzero rows only, ordered by pivot column.
#[derive(Clone, Debug)]
pub struct Rref {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    rows: Vec<SparseRow>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows as a `rank x ncols` matrix.
    pub fn matrix(&self) -> LinMap {
        LinMap::from_sparse_rows(self.rows.len(), self.ncols, self.rows.clone())
    }

    /// Columns without a pivot.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }
}

/// Row-reduce the rows of `m`.
pub fn rref(m: &LinMap) -> Rref {
    let ncols = m.dom();
    let mut acc = Accumulator::new(ncols);
    // pivot_of[c] = index into `rows` of the row whose pivot is c
    let mut pivot_of: Vec<Option<usize>> = vec![None; ncols];
    let mut rows: Vec<SparseRow> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for r in 0..m.cod() {
        let row = m.row(r);
        if row.is_empty() {
            continue;
        }
        for (c, v) in row {
            acc.add(*c, v);
        }
        // pivot rows are fully reduced, so one pass over the original entries suffices
        for (c, v) in row {
            if let Some(k) = pivot_of[*c] {
                acc.axpy(&-v, &rows[k]);
            }
        }
        let mut reduced = acc.drain();
        let Some(&(pc, ref lead)) = reduced.first() else { continue };
        let inv = lead.inv().expect("nonzero pivot");
        for (_, v) in reduced.iter_mut() {
            *v = &*v * &inv;
        }
        // clear the new pivot column from the existing rows
        for existing in rows.iter_mut() {
            if let Ok(pos) = existing.binary_search_by_key(&pc, |e| e.0) {
                let f = existing[pos].1.clone();
                for (c, v) in existing.iter() {
                    acc.add(*c, v);
                }
                acc.axpy(&-f, &reduced);
                *existing = acc.drain();
            }
        }
        pivot_of[pc] = Some(rows.len());
        rows.push(reduced);
        pivots.push(pc);
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&k| pivots[k]);
    let rows: Vec<SparseRow> = order.iter().map(|&k| std::mem::take(&mut rows[k])).collect();
    let pivots = order.iter().map(|&k| pivots[k]).collect();
    Rref { ncols, pivots, rows }
}

pub fn rank(m: &LinMap) -> usize {
    rref(m).rank()
}

/// `f = image_basis ∘ coim_proj` with `coim_proj` surjective and `image_basis` injective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Columns span `ker f`; one column per free variable.
    pub kernel_basis: LinMap,
    /// The pivot columns of `f`.
    pub image_basis: LinMap,
    /// The nonzero rows of the reduced row echelon form of `f`.
    pub coim_proj: LinMap,
    pub rank: usize,
}

pub fn factorize(f: &LinMap) -> Factorization {
    let r = rref(f);
    Factorization {
        kernel_basis: kernel_from_rref(&r),
        image_basis: f.select_columns(&r.pivots),
        coim_proj: r.matrix(),
        rank: r.rank(),
    }
}

/// Kernel basis: for each free column `c`, the vector with a 1 at `c` and
/// `-R[i][c]` at pivot position `i`.
fn kernel_from_rref(r: &Rref) -> LinMap {
    let free = r.free_columns();
    let mut triples = Vec::new();
    for (k, &c) in free.iter().enumerate() {
        triples.push((c, k, Scalar::one()));
        for (i, row) in r.rows.iter().enumerate() {
            if let Ok(pos) = row.binary_search_by_key(&c, |e| e.0) {
                triples.push((r.pivots[i], k, -&row[pos].1));
            }
        }
    }
    LinMap::from_triples(r.ncols, free.len(), triples).expect("kernel entries in range")
}

pub fn kernel(f: &LinMap) -> LinMap {
    kernel_from_rref(&rref(f))
}

/// Split idempotent `e = section ∘ retraction`, `retraction ∘ section = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub section: LinMap,
    pub retraction: LinMap,
    pub rank: usize,
}

impl SplitPair {
    /// The idempotent `section ∘ retraction`.
    pub fn idempotent(&self) -> LinMap {
        self.section.compose(&self.retraction)
    }
}

pub fn split_idempotent(e: &LinMap) -> Result<SplitPair> {
    if !e.is_square() {
        return Err(Error::ShapeMismatch(format!("idempotent must be square, got {}x{}", e.cod(), e.dom())));
    }
    if e.compose(e) != *e {
        return Err(Error::NotIdempotent);
    }
    let f = factorize(e);
    Ok(SplitPair { section: f.image_basis, retraction: f.coim_proj, rank: f.rank })
}

/// Solution set of `a ∘ x = b`: one particular solution (free variables
/// zero) and the dimension of the homogeneous solution space per column.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: LinMap,
    pub nullity: usize,
    pub kernel: LinMap,
}

/// Solve `a ∘ x = b` for `x`; `None` if inconsistent.
pub fn solve(a: &LinMap, b: &LinMap) -> Result<Option<Solution>> {
    if a.cod() != b.cod() {
        return Err(Error::ShapeMismatch(format!(
            "system matrix has {} rows but right-hand side has {}",
            a.cod(),
            b.cod()
        )));
    }
    let n = a.dom();
    let aug = LinMap::hstack(&[a, b]);
    let r = rref(&aug);
    if r.pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut triples = Vec::new();
    for (i, row) in r.rows.iter().enumerate() {
        for (c, v) in row {
            if *c >= n {
                triples.push((r.pivots[i], c - n, v.clone()));
            }
        }
    }
    let particular = LinMap::from_triples(n, b.dom(), triples)?;
    let coef = Rref { ncols: n, pivots: r.pivots.clone(), rows: strip_columns(&r.rows, n) };
    let kernel = kernel_from_rref(&coef);
    Ok(Some(Solution { particular, nullity: n - r.rank(), kernel }))
}

fn strip_columns(rows: &[SparseRow], n: usize) -> Vec<SparseRow> {
    rows.iter().map(|row| row.iter().filter(|(c, _)| *c < n).cloned().collect()).collect()
}

/// Solve `x ∘ a = b` for `x`; `None` if inconsistent.
pub fn solve_left(a: &LinMap, b: &LinMap) -> Result<Option<Solution>> {
    Ok(solve(&a.transpose(), &b.transpose())?.map(|s| Solution {
        particular: s.particular.transpose(),
        nullity: s.nullity,
        kernel: s.kernel,
    }))
}

pub fn inverse(a: &LinMap) -> Result<LinMap> {
    if !a.is_square() {
        return Err(Error::NotInvertible(format!("{}x{} matrix is not square", a.cod(), a.dom())));
    }
    match solve(a, &LinMap::identity(a.cod()))? {
        Some(s) if s.nullity == 0 => Ok(s.particular),
        _ => Err(Error::NotInvertible("matrix is singular".into())),
    }
}

/// Flatten a matrix row-major into a `cod·dom × 1` column.
pub fn vectorize(m: &LinMap) -> LinMap {
    let dom = m.dom();
    LinMap::from_triples(m.cod() * dom, 1, m.triples().map(|(r, c, v)| (r * dom + c, 0, v.clone())))
        .expect("indices in range")
}

/// Inverse of [`vectorize`].
pub fn unvectorize(v: &LinMap, cod: usize, dom: usize) -> LinMap {
    LinMap::from_triples(cod, dom, v.triples().map(|(i, _, x)| (i / dom, i % dom, x.clone()))).expect("indices in range")
}

/// Matrix of a linear operator on `cod × dom` matrices, in the row-major
/// vectorization, built by applying `op` to every matrix unit.
pub fn operator_matrix(cod: usize, dom: usize, op: impl Fn(&LinMap) -> LinMap) -> LinMap {
    let cols: Vec<LinMap> = (0..cod * dom)
        .map(|k| {
            let unit = LinMap::from_triples(cod, dom, [(k / dom, k % dom, Scalar::one())]).expect("in range");
            vectorize(&op(&unit))
        })
        .collect();
    if cols.is_empty() {
        let out = op(&LinMap::zero(cod, dom));
        return LinMap::zero(out.cod() * out.dom(), 0);
    }
    LinMap::hstack(&cols.iter().collect::<Vec<_>>())
}

/// Solve `op(X) = rhs` for a `cod × dom` matrix `X`, with `op` linear.
///
/// Returns the particular solution (free variables zero) and the dimension
/// of the solution space, or `None` if inconsistent.
pub fn solve_operator(
    cod: usize,
    dom: usize,
    op: impl Fn(&LinMap) -> LinMap,
    rhs: &LinMap,
) -> Result<Option<(LinMap, usize)>> {
    let a = operator_matrix(cod, dom, op);
    Ok(solve(&a, &vectorize(rhs))?.map(|s| (unvectorize(&s.particular, cod, dom), s.nullity)))
}
