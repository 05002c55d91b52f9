//! Dense exact matrices and the linear-algebra kernel everything else
//! builds on: reduced row echelon form, kernels, affine solving, sections
//! and fiber products.
//!
//! Determinism: every basis produced here comes from the RREF pivot rule
//! (columns scanned left to right, lowest index wins), so identical inputs
//! give bit-identical outputs.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// A dense matrix over the session field. The name reflects the default
/// field; entries may equally live in F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>, // row-major
}

pub fn zero_vec(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg_vec(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

pub fn scale_vec(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

/// Concatenate coordinate blocks into one vector.
pub fn concat_vec(parts: &[&[Scalar]]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        out.extend_from_slice(p);
    }
    out
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer literals, mostly for tests and built-in families.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn from_columns(ambient: usize, cols: &[Vec<Scalar>]) -> Self {
        assert!(cols.iter().all(|c| c.len() == ambient), "column length mismatch");
        Self::from_fn(ambient, cols.len(), |r, c| cols[c][r].clone())
    }

    /// Sparse constructor; unset entries are zero.
    pub fn from_entries(rows: usize, cols: usize, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in entries {
            if *r >= rows {
                return Err(Error::DimensionMismatch { context: "matrix entry row", expected: rows, got: *r });
            }
            if *c >= cols {
                return Err(Error::DimensionMismatch { context: "matrix entry col", expected: cols, got: *c });
            }
            m.set(*r, *c, v.clone());
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<Scalar>> + '_ {
        (0..self.cols).map(|c| self.column(c))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for c in 0..self.cols {
                    let e = self.at(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc += &(e * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_fn(self.rows, self.cols, |r, k| c * self.at(r, k))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack col mismatch");
        Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                other.at(r - self.rows, c).clone()
            }
        })
    }

    pub fn submatrix_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self.at(r, cols[c]).clone())
    }

    pub fn submatrix_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |r, c| self.at(rows[r], c).clone())
    }

    /// Reduced row echelon form together with the pivot columns
    /// (strictly increasing).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.at(pr, c).clone();
                    let b = m.at(row, c).clone();
                    m.set(pr, c, b);
                    m.set(row, c, a);
                }
            }
            let inv = m.at(row, col).inv();
            for c in col..m.cols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c) - &(&factor * m.at(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one column per free variable,
    /// in pivot-rule order.
    pub fn kernel_basis(&self) -> Self {
        let (rref, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = zero_vec(self.cols);
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rref.at(r, f);
            }
            basis.push(v);
        }
        Self::from_columns(self.cols, &basis)
    }

    /// Pivot columns of the original matrix: a basis of the column space.
    pub fn image_basis(&self) -> Self {
        let (_, pivots) = self.rref();
        self.submatrix_cols(&pivots)
    }

    /// Solve `self * x = b`. `None` when the system is inconsistent;
    /// otherwise the pivot-rule particular solution (free variables zero)
    /// and a kernel basis.
    pub fn solve_affine(&self, b: &[Scalar]) -> Option<(Vec<Scalar>, Self)> {
        let x = self.solve_columns(&Self::from_columns(self.rows, &[b.to_vec()]))?;
        Some((x.column(0), self.kernel_basis()))
    }

    /// Solve `self * X = B` column by column (pivot-rule particular
    /// solutions). `None` if any column is inconsistent.
    pub fn solve_columns(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows, "solve dimension mismatch");
        let (rref, pivots) = self.hstack(b).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut out = Self::zeros(self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                out.set(p, c, rref.at(r, self.cols + c).clone());
            }
        }
        Some(out)
    }

    /// Right inverse under the pivot-column rule: `self * section = I`.
    pub fn right_section(&self) -> Result<Self> {
        let (_, pivots) = self.rref();
        if pivots.len() != self.rows {
            return Err(Error::NotSurjective("matrix"));
        }
        let block = self.submatrix_cols(&pivots);
        let inv = block.inverse().expect("pivot block is invertible");
        let mut s = Self::zeros(self.cols, self.rows);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..self.rows {
                s.set(p, j, inv.at(i, j).clone());
            }
        }
        Ok(s)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let (rref, pivots) = self.hstack(&Self::identity(self.rows)).rref();
        if pivots.len() != self.rows || pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        Some(Self::from_fn(self.rows, self.cols, |r, c| {
            rref.at(r, self.cols + c).clone()
        }))
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    /// Does every column of `other` lie in the column space of `self`?
    pub fn contains_columns(&self, other: &Self) -> bool {
        self.solve_columns(other).is_some()
    }
}

/// Basis of the fiber product `{(a, b) : f(a) = g(b)}` inside the direct
/// sum of the domains, as columns of a (dom f + dom g)-row matrix.
pub fn fiber_product(f: &RationalMatrix, g: &RationalMatrix) -> Result<RationalMatrix> {
    if f.rows() != g.rows() {
        return Err(Error::DimensionMismatch {
            context: "fiber product codomain",
            expected: f.rows(),
            got: g.rows(),
        });
    }
    Ok(f.hstack(&g.neg()).kernel_basis())
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix add shape");
        RationalMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + rhs.at(r, c))
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sub shape");
        RationalMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - rhs.at(r, c))
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix mul shape");
        RationalMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                let a = self.at(r, k);
                if !a.is_zero() {
                    acc += &(a * rhs.at(k, c));
                }
            }
            acc
        })
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_int_rows(rows)
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = RationalMatrix::identity(2);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    // rank oracle by exhaustive minor expansion, independent of rref
    fn rank_by_minors(a: &RationalMatrix) -> usize {
        fn det(a: &RationalMatrix, rows: &[usize], cols: &[usize]) -> Scalar {
            if rows.is_empty() {
                return Scalar::one();
            }
            let mut acc = Scalar::zero();
            let sub_rows = &rows[1..];
            for (k, &c) in cols.iter().enumerate() {
                let e = a.at(rows[0], c);
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = &det(a, sub_rows, &rest) * e;
                if k % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut rest in combos(n, k - 1) {
                    if rest.iter().all(|&x| x > first) {
                        let mut v = vec![first];
                        v.append(&mut rest);
                        out.push(v);
                    }
                }
            }
            out
        }
        for k in (1..=a.rows().min(a.cols())).rev() {
            for rows in combos(a.rows(), k) {
                for cols in combos(a.cols(), k) {
                    if !det(a, &rows, &cols).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_of_four_by_six_matches_minor_expansion() {
        // rank 3 by construction: three independent rows, one dependent
        let a = m(&[
            &[1, 0, 2, -1, 3, 0],
            &[0, 1, 1, 1, 0, 2],
            &[2, 1, 5, -1, 6, 2],
            &[0, 0, 1, 4, -2, 1],
        ]);
        let expected = rank_by_minors(&a);
        assert_eq!(expected, 3);
        assert_eq!(a.rref().1.len(), expected);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RationalMatrix::identity(3).kernel_basis().cols(), 0);
        let z = RationalMatrix::zeros(3, 3);
        let k = z.kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k, RationalMatrix::identity(3));
        let a = m(&[&[1, 2, 3]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 2);
        for col in k.columns() {
            assert!(is_zero_vec(&a.apply(&col)));
        }
    }

    #[test]
    fn solve_affine_examples() {
        let id = RationalMatrix::identity(2);
        let b = vec![Scalar::one(), Scalar::zero()];
        let (x, null) = id.solve_affine(&b).unwrap();
        assert_eq!(x, b);
        assert_eq!(null.cols(), 0);

        let zero = RationalMatrix::zeros(2, 2);
        assert!(zero.solve_affine(&b).is_none());

        let a = m(&[&[1, 1]]);
        let (x, null) = a.solve_affine(&[Scalar::from_int(2)]).unwrap();
        assert_eq!(x, vec![Scalar::from_int(2), Scalar::zero()]);
        assert_eq!(null.cols(), 1);
        assert_eq!(a.apply(&x), vec![Scalar::from_int(2)]);
        assert!(is_zero_vec(&a.apply(&null.column(0))));
    }

    #[test]
    fn right_section_examples() {
        let id = RationalMatrix::identity(3);
        assert_eq!(id.right_section().unwrap(), id);

        let a = m(&[&[1, 0]]);
        let s = a.right_section().unwrap();
        assert_eq!(s, m(&[&[1], &[0]]));
        assert_eq!(&a * &s, RationalMatrix::identity(1));

        let proj = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let s = proj.right_section().unwrap();
        assert_eq!(&proj * &s, RationalMatrix::identity(2));
        assert!(s.at(2, 0).is_zero() && s.at(2, 1).is_zero());

        assert!(m(&[&[1, 0], &[0, 0]]).right_section().is_err());
    }

    #[test]
    fn fiber_product_examples() {
        let id = RationalMatrix::identity(1);
        let fp = fiber_product(&id, &id).unwrap();
        assert_eq!(fp.cols(), 1);
        assert_eq!(fp.column(0), vec![Scalar::one(), Scalar::one()]);

        // g surjective: dim = dim A + dim B - dim C
        let f = m(&[&[1, 0], &[0, 0]]);
        let g = m(&[&[1, 0], &[0, 1]]);
        assert_eq!(fiber_product(&f, &g).unwrap().cols(), 2 + 2 - 2);

        let z = RationalMatrix::zeros(1, 2);
        assert_eq!(fiber_product(&z, &z).unwrap().cols(), 4);

        assert!(fiber_product(&m(&[&[1]]), &m(&[&[1], &[0]])).is_err());
    }

    #[test]
    fn zero_dimensional_edges() {
        let e = RationalMatrix::zeros(0, 3);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel_basis().cols(), 3);
        let e = RationalMatrix::zeros(3, 0);
        assert_eq!(e.kernel_basis().cols(), 0);
        assert!(e.solve_columns(&RationalMatrix::zeros(3, 1)).is_some());
        assert_eq!(RationalMatrix::identity(0).inverse().unwrap().rows(), 0);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix(max_dim: usize) -> impl Strategy<Value = RationalMatrix> {
            (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-4i64..=4, r * c).prop_map(move |v| {
                    RationalMatrix::from_fn(r, c, |i, j| Scalar::from_int(v[i * c + j]))
                })
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(a in arb_matrix(5)) {
                prop_assert_eq!(a.rank() + a.kernel_basis().cols(), a.cols());
            }

            #[test]
            fn kernel_columns_are_annihilated(a in arb_matrix(5)) {
                let k = a.kernel_basis();
                prop_assert!((&a * &k).is_zero());
                prop_assert_eq!(k.rank(), k.cols());
            }

            #[test]
            fn solutions_resubstitute(a in arb_matrix(4), bv in proptest::collection::vec(-3i64..=3, 1..=4)) {
                let b: Vec<Scalar> = (0..a.rows()).map(|i| Scalar::from_int(*bv.get(i).unwrap_or(&0))).collect();
                if let Some((x, null)) = a.solve_affine(&b) {
                    prop_assert_eq!(a.apply(&x), b.clone());
                    for col in null.columns() {
                        prop_assert_eq!(a.apply(&add_vec(&x, &col)), b.clone());
                    }
                }
            }
        }
    }
}
