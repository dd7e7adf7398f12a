//! Exact Laurent-polynomial arithmetic in one variable q over the integers.
//!
//! [`LaurentPoly<C>`] is generic over the coefficient scalar `C` through
//! num-traits, so the whole tower above it runs on any exact signed integer
//! type. The crate root fixes `C = BigInt`, which is the instantiation used
//! by the command-line tools: Kazhdan-Lusztig coefficients grow without an
//! a priori bound and fixed-width overflow would corrupt tables silently.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{FromPrimitive, NumAssign, One, Signed, Zero};

/// Coefficient scalar: exact signed integer arithmetic.
///
/// Implemented by `i64`, `i128`, `num_bigint::BigInt`, and anything else
/// with exact ring semantics. Floating-point types are excluded on purpose:
/// every identity in this crate is checked with zero tolerance.
pub trait Coeff:
    Clone + Eq + fmt::Debug + fmt::Display + Zero + One + Signed + NumAssign + FromPrimitive
{
}

impl<T> Coeff for T where
    T: Clone + Eq + fmt::Debug + fmt::Display + Zero + One + Signed + NumAssign + FromPrimitive
{
}

/// A Laurent polynomial `sum c_k q^k` with exponents in `Z`.
///
/// Stored densely as the exponent of the lowest term plus the coefficient
/// run up to the highest term. The representation is canonical: `coeffs` is
/// empty exactly for the zero polynomial, and otherwise its first and last
/// entries are nonzero. Equal values always have identical representations.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly<C: Coeff> {
    min: i64,
    coeffs: Vec<C>,
}

impl<C: Coeff> LaurentPoly<C> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly { min: 0, coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(C::one())
    }

    /// The variable q.
    pub fn q() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// q^k for any integer k.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(C::one(), k)
    }

    /// (-q)^k = (-1)^k q^k.
    pub fn neg_q_pow(k: i64) -> Self {
        let c = if k.rem_euclid(2) == 0 { C::one() } else { -C::one() };
        Self::monomial(c, k)
    }

    /// The constant polynomial c.
    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// The constant polynomial for a small integer.
    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_i64(n).expect("coefficient type holds small integers"))
    }

    /// The monomial c * q^k.
    pub fn monomial(c: C, k: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { min: k, coeffs: vec![c] }
        }
    }

    /// Builds `sum coeffs[i] q^(min+i)`, trimming to canonical form.
    pub fn from_coeffs(min: i64, coeffs: Vec<C>) -> Self {
        let mut p = LaurentPoly { min, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.min == 0 && self.coeffs[0].is_one()
    }

    /// Highest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min + self.coeffs.len() as i64 - 1)
        }
    }

    /// Lowest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min)
        }
    }

    /// The coefficient of q^k.
    pub fn coeff(&self, k: i64) -> C {
        if self.is_zero() || k < self.min {
            return C::zero();
        }
        let idx = (k - self.min) as usize;
        self.coeffs.get(idx).cloned().unwrap_or_else(C::zero)
    }

    /// True iff all exponents are >= 0 (the zero polynomial qualifies).
    pub fn is_ordinary_polynomial(&self) -> bool {
        self.is_zero() || self.min >= 0
    }

    /// True iff some coefficient is negative.
    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(Signed::is_negative)
    }

    /// Iterates `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs.iter().enumerate().map(|(i, c)| (self.min + i as i64, c))
    }

    /// Substitutes q -> q^(-1): an involutive ring endomorphism.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        // New lowest exponent is the negative of the old highest.
        LaurentPoly { min: -(self.min + self.coeffs.len() as i64 - 1), coeffs }
    }

    /// Multiplies by q^k in place.
    pub fn shift(&mut self, k: i64) {
        if !self.is_zero() {
            self.min += k;
        }
    }

    /// The part of `self` supported on exponents > `bound` (everything above
    /// the degree cap).
    pub fn truncate_above(&self, bound: i64) -> Self {
        let kept: Vec<(i64, C)> = self
            .iter()
            .filter(|(k, _)| *k > bound)
            .map(|(k, c)| (k, c.clone()))
            .collect();
        match kept.first() {
            None => Self::zero(),
            Some((lo, _)) => {
                let lo = *lo;
                let mut coeffs = vec![C::zero(); (kept.last().unwrap().0 - lo + 1) as usize];
                for (k, c) in kept {
                    coeffs[(k - lo) as usize] = c;
                }
                LaurentPoly { min: lo, coeffs }
            }
        }
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min.min(rhs.min);
        let max = self.degree().unwrap().max(rhs.degree().unwrap());
        let mut coeffs = vec![C::zero(); (max - min + 1) as usize];
        for (k, c) in self.iter() {
            coeffs[(k - min) as usize] += c.clone();
        }
        for (k, c) in rhs.iter() {
            coeffs[(k - min) as usize] += c.clone();
        }
        Self::from_coeffs(min, coeffs)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let min = self.min + rhs.min;
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        Self::from_coeffs(min, coeffs)
    }
}

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        self.add_impl(rhs)
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        self.add_impl(&rhs)
    }
}

impl<C: Coeff> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        *self = self.add_impl(rhs);
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        self.add_impl(&-rhs)
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        self.add_impl(&-rhs)
    }
}

impl<C: Coeff> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        *self = self.add_impl(&-rhs);
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        self.mul_impl(rhs)
    }
}

impl<C: Coeff> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        self.mul_impl(&rhs)
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            min: self.min,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = abs.is_one();
            if k == 0 || !unit_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
