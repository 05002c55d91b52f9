//! Structure-constant tensors for bilinear and trilinear maps.
//!
//! Antisymmetric tensors are stored on the full index grid; the sparse
//! constructors accept strictly increasing index tuples and expand them
//! with signs, which keeps alternation (zero on repeated indices) true by
//! construction even in characteristic 2.

use crate::error::{Error, Result};
use crate::matrix::{add_vec, sub_vec, zero_vec, RationalMatrix};
use crate::scalar::Scalar;

/// A bilinear map `K^a x K^b -> K^out` as a structure-constant grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bilinear {
    dim_a: usize,
    dim_b: usize,
    dim_out: usize,
    c: Vec<Scalar>, // [(i * dim_b + j) * dim_out + k]
}

impl Bilinear {
    pub fn zeros(dim_a: usize, dim_b: usize, dim_out: usize) -> Self {
        Bilinear {
            dim_a,
            dim_b,
            dim_out,
            c: vec![Scalar::zero(); dim_a * dim_b * dim_out],
        }
    }

    pub fn from_fn(
        dim_a: usize,
        dim_b: usize,
        dim_out: usize,
        mut f: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Self {
        let mut t = Self::zeros(dim_a, dim_b, dim_out);
        for i in 0..dim_a {
            for j in 0..dim_b {
                let v = f(i, j);
                assert_eq!(v.len(), dim_out, "tensor value length");
                for (k, s) in v.into_iter().enumerate() {
                    t.c[(i * dim_b + j) * dim_out + k] = s;
                }
            }
        }
        t
    }

    /// Sparse constructor on arbitrary index pairs.
    pub fn from_entries(
        dim_a: usize,
        dim_b: usize,
        dim_out: usize,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let mut t = Self::zeros(dim_a, dim_b, dim_out);
        for (i, j, k, v) in entries {
            t.check_idx(*i, *j, *k)?;
            let slot = &mut t.c[(*i * dim_b + *j) * dim_out + *k];
            *slot = &*slot + v;
        }
        Ok(t)
    }

    /// Antisymmetric constructor: entries must have `i < j`; the mirrored
    /// entries are filled with the opposite sign.
    pub fn antisymmetric_from_entries(
        dim: usize,
        dim_out: usize,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let mut t = Self::zeros(dim, dim, dim_out);
        for (i, j, k, v) in entries {
            if i >= j {
                return Err(Error::Unsupported(format!(
                    "antisymmetric tensor entry needs i < j, got ({i}, {j})"
                )));
            }
            t.check_idx(*i, *j, *k)?;
            let slot = (*i * dim + *j) * dim_out + *k;
            t.c[slot] = &t.c[slot] + v;
            let mirror = (*j * dim + *i) * dim_out + *k;
            t.c[mirror] = &t.c[mirror] - v;
        }
        Ok(t)
    }

    fn check_idx(&self, i: usize, j: usize, k: usize) -> Result<()> {
        for (got, expected, context) in [
            (i, self.dim_a, "tensor first index"),
            (j, self.dim_b, "tensor second index"),
            (k, self.dim_out, "tensor output index"),
        ] {
            if got >= expected {
                return Err(Error::DimensionMismatch { context, expected, got });
            }
        }
        Ok(())
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// Value on the basis pair (e_i, e_j).
    pub fn at(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.dim_b + j) * self.dim_out;
        &self.c[base..base + self.dim_out]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim_a, "bilinear first argument");
        assert_eq!(y.len(), self.dim_b, "bilinear second argument");
        let mut out = zero_vec(self.dim_out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coef = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.c[(i * self.dim_b + j) * self.dim_out + k];
                    if !c.is_zero() {
                        *o += &(&coef * c);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Antisymmetry including alternation on the diagonal. Only meaningful
    /// for square input shapes.
    pub fn is_antisymmetric(&self) -> bool {
        if self.dim_a != self.dim_b {
            return false;
        }
        for i in 0..self.dim_a {
            if !self.at(i, i).iter().all(Scalar::is_zero) {
                return false;
            }
            for j in (i + 1)..self.dim_a {
                if sub_vec(self.at(i, j), &crate::matrix::neg_vec(self.at(j, i)))
                    .iter()
                    .any(|s| !s.is_zero())
                {
                    return false;
                }
            }
        }
        true
    }

    /// Transport along linear maps: `(x, y) -> out(T(a x, b y))`.
    pub fn conjugate(&self, out: &RationalMatrix, a: &RationalMatrix, b: &RationalMatrix) -> Self {
        assert_eq!(a.rows(), self.dim_a);
        assert_eq!(b.rows(), self.dim_b);
        assert_eq!(out.cols(), self.dim_out);
        Self::from_fn(a.cols(), b.cols(), out.rows(), |i, j| {
            out.apply(&self.eval(&a.column(i), &b.column(j)))
        })
    }

    /// The tensor `(x, y) -> -T(y, x)`.
    pub fn flip_negate(&self) -> Self {
        Self::from_fn(self.dim_b, self.dim_a, self.dim_out, |i, j| {
            crate::matrix::neg_vec(self.at(j, i))
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.dim_a, self.dim_b, self.dim_out), (other.dim_a, other.dim_b, other.dim_out));
        Self::from_fn(self.dim_a, self.dim_b, self.dim_out, |i, j| {
            add_vec(self.at(i, j), other.at(i, j))
        })
    }

    /// Nonzero entries in lexicographic order, for serialization.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim_a {
            for j in 0..self.dim_b {
                for (k, v) in self.at(i, j).iter().enumerate() {
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// A trilinear map `K^n x K^n x K^n -> K^out`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trilinear {
    dim_in: usize,
    dim_out: usize,
    c: Vec<Scalar>, // [((i * n + j) * n + k) * dim_out + l]
}

impl Trilinear {
    pub fn zeros(dim_in: usize, dim_out: usize) -> Self {
        Trilinear {
            dim_in,
            dim_out,
            c: vec![Scalar::zero(); dim_in * dim_in * dim_in * dim_out],
        }
    }

    pub fn from_fn(
        dim_in: usize,
        dim_out: usize,
        mut f: impl FnMut(usize, usize, usize) -> Vec<Scalar>,
    ) -> Self {
        let mut t = Self::zeros(dim_in, dim_out);
        for i in 0..dim_in {
            for j in 0..dim_in {
                for k in 0..dim_in {
                    let v = f(i, j, k);
                    assert_eq!(v.len(), dim_out, "tensor value length");
                    for (l, s) in v.into_iter().enumerate() {
                        t.c[((i * dim_in + j) * dim_in + k) * dim_out + l] = s;
                    }
                }
            }
        }
        t
    }

    /// Fully antisymmetric constructor: entries must have `i < j < k` and
    /// are expanded over all six permutations with the permutation sign.
    pub fn antisymmetric_from_entries(
        dim_in: usize,
        dim_out: usize,
        entries: &[(usize, usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let mut t = Self::zeros(dim_in, dim_out);
        for (i, j, k, l, v) in entries {
            if !(i < j && j < k) {
                return Err(Error::Unsupported(format!(
                    "antisymmetric trilinear entry needs i < j < k, got ({i}, {j}, {k})"
                )));
            }
            for (got, expected, context) in [
                (*k, dim_in, "tensor input index"),
                (*l, dim_out, "tensor output index"),
            ] {
                if got >= expected {
                    return Err(Error::DimensionMismatch { context, expected, got });
                }
            }
            // (perm of (i, j, k), sign)
            let perms: [(usize, usize, usize, bool); 6] = [
                (*i, *j, *k, true),
                (*j, *k, *i, true),
                (*k, *i, *j, true),
                (*j, *i, *k, false),
                (*i, *k, *j, false),
                (*k, *j, *i, false),
            ];
            for (a, b, c, pos) in perms {
                let slot = ((a * dim_in + b) * dim_in + c) * dim_out + l;
                t.c[slot] = if pos { &t.c[slot] + v } else { &t.c[slot] - v };
            }
        }
        Ok(t)
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let base = ((i * self.dim_in + j) * self.dim_in + k) * self.dim_out;
        &self.c[base..base + self.dim_out]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim_in);
        assert_eq!(y.len(), self.dim_in);
        assert_eq!(z.len(), self.dim_in);
        let mut out = zero_vec(self.dim_out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    let coef = &xy * zk;
                    for (l, o) in out.iter_mut().enumerate() {
                        let c = &self.c[((i * self.dim_in + j) * self.dim_in + k) * self.dim_out + l];
                        if !c.is_zero() {
                            *o += &(&coef * c);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Full antisymmetry: alternating on repeated indices, sign under
    /// every transposition.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim_in;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        if !self.at(i, j, k).iter().all(Scalar::is_zero) {
                            return false;
                        }
                        continue;
                    }
                    let v = self.at(i, j, k);
                    if sub_vec(v, &crate::matrix::neg_vec(self.at(j, i, k))).iter().any(|s| !s.is_zero())
                        || sub_vec(v, &crate::matrix::neg_vec(self.at(i, k, j)))
                            .iter()
                            .any(|s| !s.is_zero())
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Transport along linear maps: `(x, y, z) -> out(T(a x, a y, a z))`.
    pub fn conjugate(&self, out: &RationalMatrix, a: &RationalMatrix) -> Self {
        assert_eq!(a.rows(), self.dim_in);
        assert_eq!(out.cols(), self.dim_out);
        Self::from_fn(a.cols(), out.rows(), |i, j, k| {
            out.apply(&self.eval(&a.column(i), &a.column(j), &a.column(k)))
        })
    }

    /// Nonzero entries on strictly increasing triples, for serialization.
    pub fn entries(&self) -> Vec<(usize, usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim_in {
            for j in (i + 1)..self.dim_in {
                for k in (j + 1)..self.dim_in {
                    for (l, v) in self.at(i, j, k).iter().enumerate() {
                        if !v.is_zero() {
                            out.push((i, j, k, l, v.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}
