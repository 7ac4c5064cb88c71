//! The eighth cyclotomic field ℚ(ζ), ζ⁴ = −1.
//!
//! Elements are stored as `a₀ + a₁ζ + a₂ζ² + a₃ζ³` with rational coefficients.
//! The field contains i = ζ² and √2 = ζ − ζ³, which is everything the
//! matrices in this crate need.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::{int, Rational};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Cyc8 {
    coeffs: [Rational; 4],
}

impl Cyc8 {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        Cyc8 { coeffs }
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs: [Rational; 4] = Default::default();
        coeffs[0] = r;
        Cyc8 { coeffs }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// ζ, a primitive eighth root of unity.
    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// ζᵏ for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut coeffs: [Rational; 4] = Default::default();
        coeffs[k % 4] = if k < 4 { int(1) } else { int(-1) };
        Cyc8 { coeffs }
    }

    /// i = ζ².
    pub fn i() -> Self {
        Self::zeta_pow(2)
    }

    /// √2 = ζ − ζ³.
    pub fn sqrt2() -> Self {
        Cyc8::new([int(0), int(1), int(0), int(-1)])
    }

    /// 1/√2 = √2/2.
    pub fn inv_sqrt2() -> Self {
        Self::sqrt2() * Cyc8::from_rational(Rational::new(1.into(), 2.into()))
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    fn scale(&self, r: &Rational) -> Self {
        Cyc8 {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] * r),
        }
    }

    /// Multiplication by ζ: a shift with the wrap-around sign from ζ⁴ = −1.
    fn times_zeta(&self) -> Self {
        let [a0, a1, a2, a3] = &self.coeffs;
        Cyc8::new([-a3.clone(), a0.clone(), a1.clone(), a2.clone()])
    }

    /// Multiplicative inverse, found by solving `self · x = 1` as a 4×4
    /// linear system over ℚ. Returns `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.to_rational() {
            return Some(Cyc8::from_rational(r.recip()));
        }
        // Column k of the multiplication matrix holds self·ζᵏ.
        let mut columns = Vec::with_capacity(4);
        let mut current = self.clone();
        for _ in 0..4 {
            columns.push(current.clone());
            current = current.times_zeta();
        }
        let mut rows: Vec<Vec<Rational>> = (0..4)
            .map(|r| {
                let mut row: Vec<Rational> = columns.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(if r == 0 { int(1) } else { int(0) });
                row
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4).find(|&r| !rows[r][col].is_zero())?;
            rows.swap(col, pivot);
            let p = rows[col][col].clone();
            for entry in rows[col].iter_mut() {
                *entry = &*entry / &p;
            }
            for r in 0..4 {
                if r != col && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    for c in col..5 {
                        let delta = &factor * &rows[col][c];
                        rows[r][c] -= delta;
                    }
                }
            }
        }
        Some(Cyc8::new(std::array::from_fn(|k| rows[k][4].clone())))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyc8::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl From<Rational> for Cyc8 {
    fn from(r: Rational) -> Self {
        Cyc8::from_rational(r)
    }
}

impl From<i64> for Cyc8 {
    fn from(n: i64) -> Self {
        Cyc8::from_int(n)
    }
}

impl<'a> Add<&'a Cyc8> for &'a Cyc8 {
    type Output = Cyc8;
    fn add(self, rhs: &'a Cyc8) -> Cyc8 {
        Cyc8 {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] + &rhs.coeffs[k]),
        }
    }
}

impl<'a> Sub<&'a Cyc8> for &'a Cyc8 {
    type Output = Cyc8;
    fn sub(self, rhs: &'a Cyc8) -> Cyc8 {
        Cyc8 {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] - &rhs.coeffs[k]),
        }
    }
}

impl<'a> Mul<&'a Cyc8> for &'a Cyc8 {
    type Output = Cyc8;
    fn mul(self, rhs: &'a Cyc8) -> Cyc8 {
        // Most entries in practice are rational; skip the convolution for them.
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        let mut out: [Rational; 4] = Default::default();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                let k = i + j;
                if k < 4 {
                    out[k] += prod;
                } else {
                    out[k - 4] -= prod;
                }
            }
        }
        Cyc8 { coeffs: out }
    }
}

impl<'a> Div<&'a Cyc8> for &'a Cyc8 {
    type Output = Cyc8;
    fn div(self, rhs: &'a Cyc8) -> Cyc8 {
        let inv = rhs.inverse().expect("division by zero in Q(zeta_8)");
        self * &inv
    }
}

impl Neg for &Cyc8 {
    type Output = Cyc8;
    fn neg(self) -> Cyc8 {
        Cyc8 {
            coeffs: std::array::from_fn(|k| -&self.coeffs[k]),
        }
    }
}

impl Neg for Cyc8 {
    type Output = Cyc8;
    fn neg(self) -> Cyc8 {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Cyc8> for Cyc8 {
            type Output = Cyc8;
            fn $method(self, rhs: Cyc8) -> Cyc8 { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a Cyc8> for Cyc8 {
            type Output = Cyc8;
            fn $method(self, rhs: &'a Cyc8) -> Cyc8 { (&self).$method(rhs) }
        }
        impl<'a> $tr<Cyc8> for &'a Cyc8 {
            type Output = Cyc8;
            fn $method(self, rhs: Cyc8) -> Cyc8 { self.$method(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Cyc8> for Cyc8 {
    fn add_assign(&mut self, rhs: &Cyc8) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyc8> for Cyc8 {
    fn sub_assign(&mut self, rhs: &Cyc8) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl MulAssign<&Cyc8> for Cyc8 {
    fn mul_assign(&mut self, rhs: &Cyc8) {
        *self = &*self * rhs;
    }
}

impl Sum for Cyc8 {
    fn sum<I: Iterator<Item = Cyc8>>(iter: I) -> Cyc8 {
        iter.fold(Cyc8::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Product for Cyc8 {
    fn product<I: Iterator<Item = Cyc8>>(iter: I) -> Cyc8 {
        iter.fold(Cyc8::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for Cyc8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (k, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "ζ")?,
                (1, false) => write!(f, "{magnitude}ζ")?,
                (_, true) => write!(f, "ζ^{k}")?,
                (_, false) => write!(f, "{magnitude}ζ^{k}")?,
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use proptest::prelude::*;

    fn small_cyc8() -> impl Strategy<Value = Cyc8> {
        proptest::array::uniform4((-9i64..=9, 1i64..=5))
            .prop_map(|c| Cyc8::new(c.map(|(n, d)| rat(n, d))))
    }

    #[test]
    fn zeta_times_zeta_cubed_is_minus_one() {
        assert_eq!(Cyc8::zeta() * Cyc8::zeta_pow(3), Cyc8::from_int(-1));
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(Cyc8::sqrt2().pow(2), Cyc8::from_int(2));
        assert_eq!(Cyc8::inv_sqrt2() * Cyc8::sqrt2(), Cyc8::one());
    }

    #[test]
    fn i_squares_to_minus_one() {
        assert_eq!(Cyc8::i().pow(2), Cyc8::from_int(-1));
        assert_eq!(Cyc8::zeta().pow(8), Cyc8::one());
        assert_eq!(Cyc8::zeta_pow(-1), -Cyc8::zeta_pow(3));
    }

    #[test]
    fn display() {
        assert_eq!(Cyc8::from_rational(rat(-3, 4)).to_string(), "-3/4");
        assert_eq!(Cyc8::sqrt2().to_string(), "(ζ - ζ^3)");
    }

    proptest! {
        #[test]
        fn one_is_identity(x in small_cyc8()) {
            prop_assert_eq!(&Cyc8::one() * &x, x);
        }

        #[test]
        fn associative(a in small_cyc8(), b in small_cyc8(), c in small_cyc8()) {
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn distributive(a in small_cyc8(), b in small_cyc8(), c in small_cyc8()) {
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        }

        #[test]
        fn commutative(a in small_cyc8(), b in small_cyc8()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn inverses(a in small_cyc8()) {
            prop_assume!(!a.is_zero());
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, Cyc8::one());
        }
    }
}
