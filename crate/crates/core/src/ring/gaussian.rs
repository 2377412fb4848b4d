//! Exact Gaussian rationals: numbers p/q + (r/s)i with rational real and
//! imaginary parts. All arithmetic is exact; `BigRational` keeps every
//! component reduced with a positive denominator, which is what makes
//! structural equality agree with mathematical equality.

use num::{BigInt, BigRational, One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_integer(v: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }

    /// p/q as a real Gaussian rational. q must be nonzero.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        GaussianRational::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> Self {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 = re^2 + im^2; zero exactly when z is zero.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; None for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussianRational::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Canonical literal. Real part first, then signed imaginary part with a
    /// trailing `i`; unit imaginary coefficients print as bare `i`.
    pub fn literal(&self) -> String {
        fn rat(r: &BigRational) -> String {
            if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        fn imag(r: &BigRational) -> String {
            if r.is_one() {
                "i".to_string()
            } else if (-r).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", rat(r))
            }
        }
        if self.im.is_zero() {
            rat(&self.re)
        } else if self.re.is_zero() {
            imag(&self.im)
        } else if self.im.is_negative() {
            format!("{}-{}", rat(&self.re), imag(&-self.im.clone()))
        } else {
            format!("{}+{}", rat(&self.re), imag(&self.im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: i64, q: i64, r: i64, s: i64) -> GaussianRational {
        GaussianRational::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::new(BigInt::from(r), BigInt::from(s)),
        )
    }

    #[test]
    fn field_arithmetic() {
        let a = g(1, 2, 3, 4);
        let b = g(-2, 1, 1, 3);
        // (1/2 + 3/4 i)(-2 + 1/3 i) = -1 - 1/4 - (3/2 - 1/6) i
        let prod = a.mul(&b);
        assert_eq!(prod, g(-5, 4, -4, 3));
        let inv = b.inverse().unwrap();
        assert!(b.mul(&inv).is_one());
        assert!(g(0, 1, 0, 1).inverse().is_none());
    }

    #[test]
    fn conjugation_is_an_involution() {
        let a = g(5, 7, -2, 9);
        assert_eq!(a.conj().conj(), a);
        let b = g(1, 3, 4, 1);
        assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }

    #[test]
    fn literals() {
        assert_eq!(g(0, 1, 0, 1).literal(), "0");
        assert_eq!(g(-3, 1, 0, 1).literal(), "-3");
        assert_eq!(g(1, 2, 0, 1).literal(), "1/2");
        assert_eq!(g(0, 1, 1, 1).literal(), "i");
        assert_eq!(g(0, 1, -1, 1).literal(), "-i");
        assert_eq!(g(0, 1, -1, 2).literal(), "-1/2i");
        assert_eq!(g(1, 2, 3, 4).literal(), "1/2+3/4i");
        assert_eq!(g(2, 1, -1, 1).literal(), "2-i");
        assert_eq!(g(-1, 2, -3, 1).literal(), "-1/2-3i");
    }
}
