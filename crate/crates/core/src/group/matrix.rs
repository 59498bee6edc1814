//! 2×2 matrices over `F_q` and their images in `PGL₂(q)`.

use crate::field::{Field, FieldElement};

/// A 2×2 matrix `[a b; c d]`. Orders lexicographically by `(a, b, c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        a: FieldElement::ONE,
        b: FieldElement::ZERO,
        c: FieldElement::ZERO,
        d: FieldElement::ONE,
    };

    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        Mat2 { a, b, c, d }
    }

    /// Convenience constructor from integers reduced into the prime field.
    pub fn from_ints(k: &Field, a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(k.from_int(a), k.from_int(b), k.from_int(c), k.from_int(d))
    }

    pub fn entries(&self) -> [FieldElement; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn mul(&self, rhs: &Mat2, k: &Field) -> Mat2 {
        Mat2 {
            a: k.add(k.mul(self.a, rhs.a), k.mul(self.b, rhs.c)),
            b: k.add(k.mul(self.a, rhs.b), k.mul(self.b, rhs.d)),
            c: k.add(k.mul(self.c, rhs.a), k.mul(self.d, rhs.c)),
            d: k.add(k.mul(self.c, rhs.b), k.mul(self.d, rhs.d)),
        }
    }

    pub fn det(&self, k: &Field) -> FieldElement {
        k.sub(k.mul(self.a, self.d), k.mul(self.b, self.c))
    }

    /// `[d -b; -c a]`, the inverse up to the scalar `det`.
    pub fn adjugate(&self, k: &Field) -> Mat2 {
        Mat2 {
            a: self.d,
            b: k.neg(self.b),
            c: k.neg(self.c),
            d: self.a,
        }
    }

    pub fn inverse(&self, k: &Field) -> Option<Mat2> {
        let det = self.det(k);
        let s = k.inv(det).ok()?;
        Some(self.adjugate(k).scale(s, k))
    }

    pub fn scale(&self, s: FieldElement, k: &Field) -> Mat2 {
        Mat2 {
            a: k.mul(s, self.a),
            b: k.mul(s, self.b),
            c: k.mul(s, self.c),
            d: k.mul(s, self.d),
        }
    }

    /// Entrywise `x ↦ x^(p^i)`.
    pub fn frobenius(&self, i: u32, k: &Field) -> Mat2 {
        Mat2 {
            a: k.frobenius(self.a, i),
            b: k.frobenius(self.b, i),
            c: k.frobenius(self.c, i),
            d: k.frobenius(self.d, i),
        }
    }

    /// Dense code in `0..q^4`, used for table lookups.
    #[inline]
    pub fn code(&self, q: usize) -> usize {
        ((self.a.code() * q + self.b.code()) * q + self.c.code()) * q + self.d.code()
    }

    pub fn display(&self, k: &Field) -> String {
        format!(
            "[{} {}; {} {}]",
            k.display(self.a),
            k.display(self.b),
            k.display(self.c),
            k.display(self.d)
        )
    }
}

/// The class of an invertible matrix modulo scalars, in canonical form: the
/// first nonzero entry in the order `a, b, c, d` equals 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectiveMatrix(Mat2);

impl ProjectiveMatrix {
    /// `None` for singular matrices.
    pub fn new(m: Mat2, k: &Field) -> Option<Self> {
        if m.det(k).is_zero() {
            return None;
        }
        let lead = m.entries().into_iter().find(|e| !e.is_zero())?;
        Some(ProjectiveMatrix(m.scale(k.inv_nonzero(lead), k)))
    }

    pub(crate) fn canonical_unchecked(m: Mat2, k: &Field) -> Self {
        let lead = if !m.a.is_zero() { m.a } else { m.b };
        ProjectiveMatrix(m.scale(k.inv_nonzero(lead), k))
    }

    pub fn identity() -> Self {
        ProjectiveMatrix(Mat2::IDENTITY)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn mul(&self, rhs: &ProjectiveMatrix, k: &Field) -> Self {
        Self::canonical_unchecked(self.0.mul(&rhs.0, k), k)
    }

    pub fn inverse(&self, k: &Field) -> Self {
        Self::canonical_unchecked(self.0.adjugate(k), k)
    }

    pub fn frobenius(&self, i: u32, k: &Field) -> Self {
        // Frobenius fixes 1, so canonical form is preserved.
        ProjectiveMatrix(self.0.frobenius(i, k))
    }

    /// Whether the determinant is a square, i.e. the class lies in `PSL₂(q)`.
    pub fn in_psl(&self, k: &Field) -> bool {
        k.is_square_any(self.0.det(k))
    }
}
