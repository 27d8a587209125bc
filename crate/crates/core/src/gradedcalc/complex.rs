use std::collections::BTreeMap;

use super::sign;
use crate::error::{Error, Result};
use crate::exactla::LinMap;
use crate::hopf::expect_shape;
use crate::report::Report;

/// Dimensions `(X_0, …, X_max)`; degrees above `max` are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedObject {
    pub dims: Vec<usize>,
}

impl GradedObject {
    pub fn new(dims: Vec<usize>) -> Self {
        GradedObject { dims }
    }

    /// `k` in degree 0 only.
    pub fn unit() -> Self {
        GradedObject { dims: vec![1] }
    }

    /// `dim` concentrated in degree `degree`.
    pub fn concentrated(dim: usize, degree: usize) -> Self {
        let mut dims = vec![0; degree + 1];
        dims[degree] = dim;
        GradedObject { dims }
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    /// `(X ⊗ Y)_j = ⊕_{k+l=j} X_k ⊗ Y_l`.
    pub fn tensor(&self, other: &GradedObject) -> GradedObject {
        let top = self.max_degree() + other.max_degree();
        GradedObject { dims: (0..=top).map(|j| blocks(self, other, j).iter().map(|b| b.2).sum()).collect() }
    }
}

/// `(k, offset, size)` for the summands `X_k ⊗ Y_{j-k}` of `(X ⊗ Y)_j`,
/// `k` ascending.
fn blocks(x: &GradedObject, y: &GradedObject, j: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let mut off = 0;
    for k in 0..=j {
        let size = x.dim(k) * y.dim(j - k);
        out.push((k, off, size));
        off += size;
    }
    out
}

fn place(cod: usize, dom: usize, parts: &[(usize, usize, LinMap)]) -> LinMap {
    let triples = parts
        .iter()
        .flat_map(|(r0, c0, m)| m.triples().map(move |(r, c, v)| (r0 + r, c0 + c, v.clone())))
        .collect::<Vec<_>>();
    LinMap::from_triples(cod, dom, triples).expect("blocks fit")
}

/// Degree-`j` component of the braiding of graded objects,
/// `⊕_{k+l=j} (-1)^{kl} Ψ_{X_k,Y_l}: (X ⊗ Y)_j -> (Y ⊗ X)_j`.
///
/// `psi[(k, l)]` is `Ψ_{X_k,Y_l}`; blocks between zero spaces may be omitted.
pub fn graded_braiding(
    x: &GradedObject,
    y: &GradedObject,
    psi: &BTreeMap<(usize, usize), LinMap>,
    j: usize,
) -> Result<LinMap> {
    let src = blocks(x, y, j);
    let dst = blocks(y, x, j);
    let dom = src.iter().map(|b| b.2).sum();
    let cod = dst.iter().map(|b| b.2).sum();
    let mut parts = Vec::new();
    for &(k, col, size) in &src {
        if size == 0 {
            continue;
        }
        let l = j - k;
        let block = psi.get(&(k, l)).ok_or(Error::MissingBlock(k, l))?;
        expect_shape(&format!("braiding block ({k}, {l})"), block, size, size)?;
        parts.push((dst[l].1, col, block.scale(&sign(k * l))));
    }
    Ok(place(cod, dom, &parts))
}

/// A graded object with `diffs[j]: X_j -> X_{j+1}` for `j < max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexObject {
    pub graded: GradedObject,
    pub diffs: Vec<LinMap>,
}

impl ComplexObject {
    pub fn new(graded: GradedObject, diffs: Vec<LinMap>) -> Result<Self> {
        if diffs.len() != graded.max_degree() {
            return Err(Error::ShapeMismatch(format!(
                "{} differentials for maximal degree {}",
                diffs.len(),
                graded.max_degree()
            )));
        }
        for (j, d) in diffs.iter().enumerate() {
            expect_shape(&format!("d_{j}"), d, graded.dim(j + 1), graded.dim(j))?;
        }
        Ok(ComplexObject { graded, diffs })
    }

    /// `d_j`, the zero map past the top degree.
    pub fn d(&self, j: usize) -> LinMap {
        self.diffs.get(j).cloned().unwrap_or_else(|| LinMap::zero(self.graded.dim(j + 1), self.graded.dim(j)))
    }

    /// `d_{j+1} ∘ d_j = 0` for every `j`.
    pub fn check(&self) -> Report {
        let mut r = Report::new("complex");
        for j in 0..self.diffs.len().saturating_sub(1) {
            let dd = self.diffs[j + 1].compose(&self.diffs[j]);
            r.eq_maps(format!("d squares to zero ({j})"), &dd, &LinMap::zero(dd.cod(), dd.dom()));
        }
        r
    }
}

/// Total complex `d = Σ_{k+l=j} d_{X,k} ⊗ id + (-1)^k id ⊗ d_{Y,l}`.
pub fn tensor_complex(a: &ComplexObject, b: &ComplexObject) -> ComplexObject {
    let (x, y) = (&a.graded, &b.graded);
    let graded = x.tensor(y);
    let mut diffs = Vec::new();
    for j in 0..graded.max_degree() {
        let src = blocks(x, y, j);
        let dst = blocks(x, y, j + 1);
        let mut parts = Vec::new();
        for &(k, col, size) in &src {
            if size == 0 {
                continue;
            }
            let l = j - k;
            let (ix, iy) = (LinMap::identity(x.dim(k)), LinMap::identity(y.dim(l)));
            parts.push((dst[k + 1].1, col, a.d(k).kron(&iy)));
            parts.push((dst[k].1, col, ix.kron(&b.d(l)).scale(&sign(k))));
        }
        diffs.push(place(graded.dim(j + 1), graded.dim(j), &parts));
    }
    ComplexObject { graded, diffs }
}
