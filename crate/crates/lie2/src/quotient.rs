//! Quotient spaces with a chosen projection and section.
//!
//! The quotient coordinates are the ambient coordinates *not* hit by the
//! subspace pivots, so projections and sections are pivot-rule
//! deterministic.

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::scalar::Scalar;

/// A presentation of `K^ambient / span(subspace)`.
///
/// `projection * section = id` on the quotient and
/// `projection * subspace_basis = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub ambient_dim: usize,
    /// Independent columns spanning the subspace being killed.
    pub subspace_basis: RationalMatrix,
    /// ambient coordinates -> quotient coordinates.
    pub projection: RationalMatrix,
    /// quotient coordinates -> ambient representatives.
    pub section: RationalMatrix,
}

/// Present the quotient of `K^ambient_dim` by the span of the given
/// generator columns (dependent generators are fine).
pub fn quotient(ambient_dim: usize, generators: &RationalMatrix) -> Result<QuotientPresentation> {
    if generators.rows() != ambient_dim {
        return Err(Error::DimensionMismatch {
            context: "quotient subspace",
            expected: ambient_dim,
            got: generators.rows(),
        });
    }
    let basis = generators.image_basis();
    let k = basis.cols();
    // Pivots of [S | I] that land in the identity part pick the coordinate
    // vectors completing S to a basis; those are the quotient representatives.
    let (_, pivots) = basis.hstack(&RationalMatrix::identity(ambient_dim)).rref();
    debug_assert!(pivots.len() == ambient_dim);
    debug_assert!(pivots.iter().take(k).copied().eq(0..k));
    let coords: Vec<usize> = pivots[k..].iter().map(|&p| p - k).collect();
    let section = RationalMatrix::from_fn(ambient_dim, coords.len(), |r, c| {
        if r == coords[c] {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let change = basis.hstack(&section);
    let inv = change.inverse().expect("basis completion is invertible");
    let projection = inv.submatrix_rows(&(k..ambient_dim).collect::<Vec<_>>());
    let q = QuotientPresentation {
        ambient_dim,
        subspace_basis: basis,
        projection,
        section,
    };
    debug_assert!(q.check_invariants());
    Ok(q)
}

/// Quotient of `A + B` by the antidiagonal image `{(f c, -g c)}`:
/// the pushout of `f: C -> A` and `g: C -> B`.
pub fn pushout(f: &RationalMatrix, g: &RationalMatrix) -> Result<QuotientPresentation> {
    if f.cols() != g.cols() {
        return Err(Error::DimensionMismatch {
            context: "pushout domain",
            expected: f.cols(),
            got: g.cols(),
        });
    }
    let generators = f.vstack(&g.neg());
    quotient(f.rows() + g.rows(), &generators)
}

impl QuotientPresentation {
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.subspace_basis.cols()
    }

    pub fn project_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }

    /// Chosen ambient representative of a quotient vector.
    pub fn lift_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.section.apply(v)
    }

    pub fn check_invariants(&self) -> bool {
        let pj = &self.projection * &self.section;
        if pj != RationalMatrix::identity(self.dim()) {
            return false;
        }
        if !(&self.projection * &self.subspace_basis).is_zero() {
            return false;
        }
        self.projection.rank() == self.dim() && self.section.rank() == self.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::is_zero_vec;

    #[test]
    fn trivial_subspace_gives_identity_projection() {
        let q = quotient(3, &RationalMatrix::zeros(3, 0)).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(q.projection, RationalMatrix::identity(3));
        assert_eq!(q.section, RationalMatrix::identity(3));
    }

    #[test]
    fn killing_e1_leaves_last_two_coordinates() {
        let e1 = RationalMatrix::from_int_rows(&[&[1], &[0], &[0]]);
        let q = quotient(3, &e1).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(is_zero_vec(&q.project_vec(&e1.column(0))));
        assert_eq!(
            q.project_vec(&[Scalar::from_int(5), Scalar::from_int(1), Scalar::from_int(2)]),
            vec![Scalar::from_int(1), Scalar::from_int(2)]
        );
    }

    #[test]
    fn rank_two_subspace_of_dim_four() {
        let s = RationalMatrix::from_int_rows(&[&[1, 0], &[2, 1], &[0, 3], &[1, -1]]);
        let q = quotient(4, &s).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.check_invariants());
    }

    #[test]
    fn dependent_generators_are_reduced() {
        let s = RationalMatrix::from_int_rows(&[&[1, 2], &[1, 2], &[0, 0]]);
        let q = quotient(3, &s).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.check_invariants());
    }

    #[test]
    fn pushout_examples() {
        // C = 0: the quotient is all of A + B
        let f = RationalMatrix::zeros(2, 0);
        let g = RationalMatrix::zeros(3, 0);
        assert_eq!(pushout(&f, &g).unwrap().dim(), 5);

        // f identity, g zero: quotient is B
        let f = RationalMatrix::identity(2);
        let g = RationalMatrix::zeros(3, 2);
        assert_eq!(pushout(&f, &g).unwrap().dim(), 3);

        // two injections K -> K^2: quotient has dimension 3
        let f = RationalMatrix::from_int_rows(&[&[1], &[0]]);
        let g = RationalMatrix::from_int_rows(&[&[0], &[1]]);
        assert_eq!(pushout(&f, &g).unwrap().dim(), 3);

        assert!(pushout(&RationalMatrix::zeros(2, 1), &RationalMatrix::zeros(2, 2)).is_err());
    }
}
