use super::Poly;
use crate::exact::BigRational;

/// The commutative-ring operations needed to build the polynomial families
/// generically, so the same construction runs over ℚ[y] and over any
/// homomorphic image of it.
pub trait Ring: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &BigRational) -> Self;
    /// The unit of the ring `self` lives in.
    fn unit(&self) -> Self;

    fn pow(&self, e: u32) -> Self {
        let mut result = self.unit();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

impl Ring for Poly {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &BigRational) -> Self {
        Poly::scale(self, c)
    }
    fn unit(&self) -> Self {
        Poly::one(self.vars())
    }
    fn pow(&self, e: u32) -> Self {
        Poly::pow(self, e)
    }
}
