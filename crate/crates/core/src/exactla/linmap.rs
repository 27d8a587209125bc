//! Sparse exact matrices representing linear maps between based spaces.
//!
//! A `LinMap` with domain dimension `dom` and codomain dimension `cod` is a
//! `cod x dom` matrix acting on column vectors. Tensor products use the
//! row-major convention `index(i ⊗ j) = i * dim_b + j`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactla::field::Scalar;

pub(crate) type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    cod: usize,
    dom: usize,
    /// Row `r` holds the nonzero entries `(col, value)` sorted by column.
    rows: Vec<SparseRow>,
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} [", self.cod, self.dom)?;
        for r in 0..self.cod.min(16) {
            let row: Vec<String> = (0..self.dom.min(16)).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl LinMap {
    pub fn zero(cod: usize, dom: usize) -> Self {
        LinMap { cod, dom, rows: vec![Vec::new(); cod] }
    }

    pub fn identity(n: usize) -> Self {
        LinMap { cod: n, dom: n, rows: (0..n).map(|i| vec![(i, Scalar::one())]).collect() }
    }

    /// The 1x1 matrix `[s]`, a map between copies of the unit object.
    pub fn scalar(s: Scalar) -> Self {
        let mut m = LinMap::zero(1, 1);
        if !s.is_zero() {
            m.rows[0].push((0, s));
        }
        m
    }

    /// Build from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triples(
        cod: usize,
        dom: usize,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); cod];
        for (r, c, v) in triples {
            if r >= cod || c >= dom {
                return Err(Error::ShapeMismatch(format!(
                    "entry ({r}, {c}) outside a {cod}x{dom} matrix"
                )));
            }
            rows[r].push((c, v));
        }
        for row in rows.iter_mut() {
            normalize_row(row);
        }
        Ok(LinMap { cod, dom, rows })
    }

    pub(crate) fn from_sparse_rows(cod: usize, dom: usize, rows: Vec<SparseRow>) -> Self {
        debug_assert_eq!(rows.len(), cod);
        LinMap { cod, dom, rows }
    }

    /// Build from a dense row-major table.
    pub fn from_rows(rows: &[Vec<Scalar>]) -> Self {
        let cod = rows.len();
        let dom = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), dom, "ragged matrix");
                r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect()
            })
            .collect();
        LinMap { cod, dom, rows }
    }

    /// Dense integer table, mostly for tests.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.as_ref().iter().map(|&v| Scalar::from_int(v)).collect()).collect();
        LinMap::from_rows(&rows)
    }

    /// Build entrywise from a function of `(row, col)`.
    pub fn from_fn(cod: usize, dom: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let rows = (0..cod)
            .map(|r| {
                (0..dom)
                    .filter_map(|c| {
                        let v = f(r, c);
                        (!v.is_zero()).then_some((c, v))
                    })
                    .collect()
            })
            .collect();
        LinMap { cod, dom, rows }
    }

    /// The column vector `v` as a map from the unit object.
    pub fn column(v: &[Scalar]) -> Self {
        LinMap::from_fn(v.len(), 1, |r, _| v[r].clone())
    }

    /// The row vector `v` as a map to the unit object.
    pub fn row_vector(v: &[Scalar]) -> Self {
        LinMap::from_fn(1, v.len(), |_, c| v[c].clone())
    }

    /// Permutation map sending basis vector `j` to basis vector `image[j]`.
    pub fn permutation(image: &[usize]) -> Self {
        let n = image.len();
        let mut rows: Vec<SparseRow> = vec![Vec::new(); n];
        for (j, &i) in image.iter().enumerate() {
            assert!(i < n, "permutation image out of range");
            rows[i].push((j, Scalar::one()));
        }
        LinMap { cod: n, dom: n, rows }
    }

    /// The symmetry `X ⊗ Y -> Y ⊗ X` of vector spaces.
    pub fn flip(dim_x: usize, dim_y: usize) -> Self {
        let image: Vec<usize> = (0..dim_x * dim_y)
            .map(|idx| {
                let (i, j) = (idx / dim_y, idx % dim_y);
                j * dim_x + i
            })
            .collect();
        LinMap::permutation(&image)
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn is_square(&self) -> bool {
        self.cod == self.dom
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.rows[r].binary_search_by_key(&c, |(col, _)| *col) {
            Ok(i) => self.rows[r][i].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub(crate) fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.rows[r]
    }

    /// Nonzero entries in row-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(r, row)| row.len() == 1 && row[0].0 == r && row[0].1.is_one())
    }

    /// `self ∘ rhs`, or `ShapeMismatch` if the inner dimensions differ.
    pub fn try_compose(&self, rhs: &LinMap) -> Result<LinMap> {
        if self.dom != rhs.cod {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.cod, self.dom, rhs.cod, rhs.dom
            )));
        }
        Ok(self.compose(rhs))
    }

    /// `self ∘ rhs`. Panics if the inner dimensions differ.
    pub fn compose(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(
            self.dom, rhs.cod,
            "cannot compose {}x{} after {}x{}",
            self.cod, self.dom, rhs.cod, rhs.dom
        );
        let mut acc = Accumulator::new(rhs.dom);
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for (k, a) in row {
                    acc.axpy(a, &rhs.rows[*k]);
                }
                acc.drain()
            })
            .collect();
        LinMap { cod: self.cod, dom: rhs.dom, rows }
    }

    /// Kronecker product with the row-major basis convention.
    pub fn kron(&self, other: &LinMap) -> LinMap {
        let cod = self.cod * other.cod;
        let dom = self.dom * other.dom;
        let mut rows = Vec::with_capacity(cod);
        for ra in &self.rows {
            for rb in &other.rows {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ca, va) in ra {
                    for (cb, vb) in rb {
                        row.push((ca * other.dom + cb, va * vb));
                    }
                }
                rows.push(row);
            }
        }
        LinMap { cod, dom, rows }
    }

    /// `maps[0] ∘ maps[1] ∘ ...`; the last map is applied first.
    pub fn chain(maps: &[&LinMap]) -> LinMap {
        let (last, rest) = maps.split_last().expect("empty composition");
        rest.iter().rev().fold((*last).clone(), |acc, m| m.compose(&acc))
    }

    /// Kronecker product of a list of maps, left to right.
    pub fn kron_all(maps: &[&LinMap]) -> LinMap {
        maps.iter().fold(LinMap::identity(1), |acc, m| acc.kron(m))
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        if s.is_zero() {
            return LinMap::zero(self.cod, self.dom);
        }
        LinMap {
            cod: self.cod,
            dom: self.dom,
            rows: self.rows.iter().map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect()).collect(),
        }
    }

    pub fn transpose(&self) -> LinMap {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); self.dom];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c].push((r, v.clone()));
            }
        }
        LinMap { cod: self.dom, dom: self.cod, rows }
    }

    fn zip_rows(&self, other: &LinMap, negate: bool) -> LinMap {
        assert!(
            self.cod == other.cod && self.dom == other.dom,
            "cannot add {}x{} and {}x{}",
            self.cod,
            self.dom,
            other.cod,
            other.dom
        );
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| merge_rows(a, b, negate))
            .collect();
        LinMap { cod: self.cod, dom: self.dom, rows }
    }

    /// First entry (row-major) where the two matrices differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<(usize, usize, Scalar, Scalar)> {
        for (r, (a, b)) in self.rows.iter().zip(&other.rows).enumerate() {
            if a == b {
                continue;
            }
            let (mut i, mut j) = (0, 0);
            loop {
                let ca = a.get(i).map(|e| e.0);
                let cb = b.get(j).map(|e| e.0);
                match (ca, cb) {
                    (Some(x), Some(y)) if x == y => {
                        if a[i].1 != b[j].1 {
                            return Some((r, x, a[i].1.clone(), b[j].1.clone()));
                        }
                        i += 1;
                        j += 1;
                    }
                    (Some(x), Some(y)) if x < y => return Some((r, x, a[i].1.clone(), Scalar::zero())),
                    (Some(x), None) => return Some((r, x, a[i].1.clone(), Scalar::zero())),
                    (_, Some(y)) => return Some((r, y, Scalar::zero(), b[j].1.clone())),
                    (None, None) => break,
                }
            }
        }
        None
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> LinMap {
        let mut pos = vec![usize::MAX; self.dom];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out: SparseRow =
                    row.iter().filter(|(c, _)| pos[*c] != usize::MAX).map(|(c, v)| (pos[*c], v.clone())).collect();
                out.sort_by_key(|e| e.0);
                out
            })
            .collect();
        LinMap { cod: self.cod, dom: cols.len(), rows }
    }

    /// Rows `rows` of `self`, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> LinMap {
        LinMap { cod: rows.len(), dom: self.dom, rows: rows.iter().map(|&r| self.rows[r].clone()).collect() }
    }

    /// Block matrix `[a | b | ...]` sharing the codomain.
    pub fn hstack(blocks: &[&LinMap]) -> LinMap {
        let cod = blocks.first().map_or(0, |b| b.cod);
        let mut rows: Vec<SparseRow> = vec![Vec::new(); cod];
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.cod, cod, "hstack codomain mismatch");
            for (r, row) in b.rows.iter().enumerate() {
                rows[r].extend(row.iter().map(|(c, v)| (c + offset, v.clone())));
            }
            offset += b.dom;
        }
        LinMap { cod, dom: offset, rows }
    }

    /// Block matrix with the blocks stacked vertically, sharing the domain.
    pub fn vstack(blocks: &[&LinMap]) -> LinMap {
        let dom = blocks.first().map_or(0, |b| b.dom);
        let mut rows = Vec::new();
        for b in blocks {
            assert_eq!(b.dom, dom, "vstack domain mismatch");
            rows.extend(b.rows.iter().cloned());
        }
        LinMap { cod: rows.len(), dom, rows }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[&LinMap]) -> LinMap {
        let dom: usize = blocks.iter().map(|b| b.dom).sum();
        let mut rows = Vec::new();
        let mut offset = 0;
        for b in blocks {
            for row in &b.rows {
                rows.push(row.iter().map(|(c, v)| (c + offset, v.clone())).collect());
            }
            offset += b.dom;
        }
        LinMap { cod: rows.len(), dom, rows }
    }

    /// Entries as a dense table.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        (0..self.cod).map(|r| (0..self.dom).map(|c| self.get(r, c)).collect()).collect()
    }
}

/// Dense scatter buffer for sparse row arithmetic.
pub(crate) struct Accumulator {
    values: Vec<Scalar>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accumulator {
    pub(crate) fn new(width: usize) -> Self {
        Accumulator { values: vec![Scalar::zero(); width], touched: Vec::new(), mark: vec![false; width] }
    }

    pub(crate) fn add(&mut self, col: usize, v: &Scalar) {
        if !self.mark[col] {
            self.mark[col] = true;
            self.touched.push(col);
        }
        self.values[col] += v;
    }

    pub(crate) fn axpy(&mut self, a: &Scalar, row: &[(usize, Scalar)]) {
        for (c, v) in row {
            let t = a * v;
            self.add(*c, &t);
        }
    }

    pub(crate) fn drain(&mut self) -> SparseRow {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &c in &self.touched {
            self.mark[c] = false;
            let v = std::mem::replace(&mut self.values[c], Scalar::zero());
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        self.touched.clear();
        out
    }
}

fn normalize_row(row: &mut SparseRow) {
    row.sort_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row.drain(..) {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    *row = out;
}

fn merge_rows(a: &[(usize, Scalar)], b: &[(usize, Scalar)], negate: bool) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0);
        let cb = b.get(j).map(|e| e.0);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push((x, a[i].1.clone()));
                i += 1;
            }
            (Some(x), None) => {
                out.push((x, a[i].1.clone()));
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, if negate { -&b[j].1 } else { b[j].1.clone() }));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl<'a> Add<&'a LinMap> for &'a LinMap {
    type Output = LinMap;
    fn add(self, rhs: &'a LinMap) -> LinMap {
        self.zip_rows(rhs, false)
    }
}

impl<'a> Sub<&'a LinMap> for &'a LinMap {
    type Output = LinMap;
    fn sub(self, rhs: &'a LinMap) -> LinMap {
        self.zip_rows(rhs, true)
    }
}

impl Add for LinMap {
    type Output = LinMap;
    fn add(self, rhs: LinMap) -> LinMap {
        self.zip_rows(&rhs, false)
    }
}

impl Sub for LinMap {
    type Output = LinMap;
    fn sub(self, rhs: LinMap) -> LinMap {
        self.zip_rows(&rhs, true)
    }
}

impl Neg for &LinMap {
    type Output = LinMap;
    fn neg(self) -> LinMap {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Neg for LinMap {
    type Output = LinMap;
    fn neg(self) -> LinMap {
        -&self
    }
}

/// `a * b` is composition `a ∘ b`.
impl<'a> Mul<&'a LinMap> for &'a LinMap {
    type Output = LinMap;
    fn mul(self, rhs: &'a LinMap) -> LinMap {
        self.compose(rhs)
    }
}

impl Mul for LinMap {
    type Output = LinMap;
    fn mul(self, rhs: LinMap) -> LinMap {
        self.compose(&rhs)
    }
}

/// Sum of a sequence of maps of the given shape.
pub fn sum_maps(cod: usize, dom: usize, maps: impl IntoIterator<Item = LinMap>) -> LinMap {
    let pending: Vec<LinMap> = maps.into_iter().collect();
    for m in &pending {
        assert!(m.cod == cod && m.dom == dom, "sum_maps shape mismatch");
    }
    let mut buf = Accumulator::new(dom);
    let mut rows_acc: Vec<SparseRow> = vec![Vec::new(); cod];
    for (r, out) in rows_acc.iter_mut().enumerate() {
        for m in &pending {
            for (c, v) in &m.rows[r] {
                buf.add(*c, v);
            }
        }
        *out = buf.drain();
    }
    LinMap { cod, dom, rows: rows_acc }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_identities() {
        assert_eq!(LinMap::identity(2).kron(&LinMap::identity(3)), LinMap::identity(6));
        let z = LinMap::zero(1, 1).kron(&LinMap::from_int_rows(&[[1, 2], [3, 4], [5, 6]]));
        assert_eq!(z, LinMap::zero(3, 2));
    }

    #[test]
    fn kron_swap_expanded_by_hand() {
        let swap = LinMap::from_int_rows(&[[0, 1], [1, 0]]);
        // (swap ⊗ id)(e_i ⊗ e_j) = e_{1-i} ⊗ e_j: index 2i+j -> 2(1-i)+j
        let expected = LinMap::from_int_rows(&[[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]);
        assert_eq!(swap.kron(&LinMap::identity(2)), expected);
    }

    #[test]
    fn flip_matches_permutation() {
        let f = LinMap::flip(2, 3);
        // e_1 ⊗ f_2 = index 5 goes to f_2 ⊗ e_1 = index 2*2+1 = 5
        assert_eq!(f.get(5, 5), Scalar::one());
        // e_0 ⊗ f_1 = index 1 goes to f_1 ⊗ e_0 = index 2
        assert_eq!(f.get(2, 1), Scalar::one());
        assert!(f.compose(&LinMap::flip(3, 2)).is_identity());
    }

    #[test]
    fn first_difference_is_lexicographic() {
        let a = LinMap::from_int_rows(&[[1, 0], [0, 1]]);
        let b = LinMap::from_int_rows(&[[1, 2], [3, 1]]);
        let (r, c, x, y) = a.first_difference(&b).unwrap();
        assert_eq!((r, c), (0, 1));
        assert_eq!((x, y), (Scalar::zero(), Scalar::from_int(2)));
        assert!(a.first_difference(&a).is_none());
    }

    #[test]
    fn try_compose_rejects_bad_shapes() {
        let a = LinMap::zero(2, 3);
        assert!(a.try_compose(&LinMap::zero(2, 2)).is_err());
        assert_eq!(a.try_compose(&LinMap::zero(3, 4)).unwrap(), LinMap::zero(2, 4));
    }
}
