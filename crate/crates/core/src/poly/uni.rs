use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::multi::write_term;
use crate::error::{Error, Result};

/// A polynomial in `λ` with exact rational coefficients, lowest degree
/// first and no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_integers<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> UniPoly {
        UniPoly::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `λ`.
    pub fn lambda() -> UniPoly {
        UniPoly::from_integers([0, 1])
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_int(&self, x: impl Into<BigInt>) -> BigRational {
        self.evaluate(&BigRational::from_integer(x.into()))
    }

    /// The unique polynomial of degree below `points.len()` through the
    /// given points, by Newton's divided differences.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<UniPoly> {
        for (i, (x, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(y, _)| y == x) {
                return Err(Error::RepeatedNode);
            }
        }
        let n = points.len();
        let xs: Vec<&BigRational> = points.iter().map(|(x, _)| x).collect();
        let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
            }
        }
        // Horner over the Newton basis.
        let mut acc = UniPoly::zero();
        for i in (0..n).rev() {
            let shift = UniPoly::new(vec![-xs[i].clone(), BigRational::one()]);
            acc = &(&acc * &shift) + &UniPoly::new(vec![dd[i].clone()]);
        }
        Ok(acc)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let monomial = match d {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ^{d}"),
            };
            write_term(f, first, c, &monomial)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn renders_in_lambda() {
        assert_eq!(UniPoly::from_integers([-1, 1]).to_string(), "λ - 1");
        assert_eq!(UniPoly::from_integers([0, -1, 1]).to_string(), "λ^2 - λ");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::from_integers([1]).to_string(), "1");
        let half = UniPoly::new(vec![q(0), BigRational::new(1.into(), 2.into())]);
        assert_eq!(half.to_string(), "1/2*λ");
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::from_integers([0, 2, -3, 1]); // λ(λ−1)(λ−2)
        let pts: Vec<_> = [1, 4, 7, 10]
            .iter()
            .map(|&x| (q(x), p.evaluate_int(x)))
            .collect();
        assert_eq!(UniPoly::interpolate(&pts).unwrap(), p);
        assert_eq!(UniPoly::interpolate(&[]).unwrap(), UniPoly::zero());
        assert!(UniPoly::interpolate(&[(q(1), q(1)), (q(1), q(2))]).is_err());
    }

    #[test]
    fn arithmetic() {
        let l = UniPoly::lambda();
        let p = &(&l * &l) - &l;
        assert_eq!(p, UniPoly::from_integers([0, -1, 1]));
        assert_eq!(p.degree(), Some(1 + 1));
        assert!((&p - &p).is_zero());
        assert_eq!(&p + &UniPoly::zero(), p);
    }
}
