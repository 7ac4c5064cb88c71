//! Sparse multivariate polynomials over ℚ(ζ₈).
//!
//! The variable set is fixed: `s, t` (pencil parameters), `x1..x4`
//! (Cartan coordinates) and `y1..y4` (conjugate-pencil coordinates).
//! Monomials are ordered degree-lexicographically, comparing total degree
//! first and then exponents in the variable order `s, t, x1, …, y4`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyc8::Cyc8;
use crate::error::Error;

pub const NUM_VARS: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Var {
    S,
    T,
    X1,
    X2,
    X3,
    X4,
    Y1,
    Y2,
    Y3,
    Y4,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [
        Var::S,
        Var::T,
        Var::X1,
        Var::X2,
        Var::X3,
        Var::X4,
        Var::Y1,
        Var::Y2,
        Var::Y3,
        Var::Y4,
    ];
    pub const XS: [Var; 4] = [Var::X1, Var::X2, Var::X3, Var::X4];
    pub const YS: [Var; 4] = [Var::Y1, Var::Y2, Var::Y3, Var::Y4];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["s", "t", "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"][self.index()]
    }
}

/// Exponent vector over the fixed variable set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial([u8; NUM_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NUM_VARS])
    }

    pub fn from_exponents(exps: [u8; NUM_VARS]) -> Self {
        Monomial(exps)
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NUM_VARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    /// Product of the given variables, with repetition.
    pub fn of(vars: &[Var]) -> Self {
        let mut e = [0; NUM_VARS];
        for v in vars {
            e[v.index()] += 1;
        }
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> u8 {
        self.0[v.index()]
    }

    pub fn exponents(&self) -> &[u8; NUM_VARS] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|k| self.0[k] + other.0[k]))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Cyc8>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Cyc8::one())
    }

    pub fn constant(c: Cyc8) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Cyc8::one(), Monomial::var(v))
    }

    pub fn term(c: Cyc8, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Σ coeffs[i]·vars[i], a linear form.
    pub fn linear(coeffs: &[Cyc8], vars: &[Var]) -> Self {
        let mut p = MultiPoly::zero();
        for (c, &v) in coeffs.iter().zip(vars) {
            p.add_term(Monomial::var(v), c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Cyc8)>>(terms: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Cyc8) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Cyc8)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Cyc8 {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Cyc8)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    pub fn degree_in(&self, v: Var) -> u8 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u8 {
        self.terms.keys().map(|m| m.exponent(v)).min().unwrap_or(0)
    }

    /// The variables that actually occur.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0))
            .collect()
    }

    pub fn scale(&self, c: &Cyc8) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial(&self, v: Var) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut exps = m.0;
            exps[v.index()] -= 1;
            out.add_term(Monomial(exps), &(c * &Cyc8::from_int(e as i64)));
        }
        out
    }

    /// Divides every term by `vᵏ`; `None` unless every term is divisible.
    pub fn divide_by_var_power(&self, v: Var, k: u8) -> Option<Self> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut exps = m.0;
            exps[v.index()] = exps[v.index()].checked_sub(k)?;
            out.terms.insert(Monomial(exps), c.clone());
        }
        Some(out)
    }

    /// Evaluates with `value(v)` for every occurring variable.
    pub fn evaluate<F: Fn(Var) -> Cyc8>(&self, value: F) -> Cyc8 {
        let values: Vec<Option<Cyc8>> = Var::ALL
            .iter()
            .map(|&v| self.terms.keys().any(|m| m.exponent(v) > 0).then(|| value(v)))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut acc = c.clone();
                for v in Var::ALL {
                    let e = m.exponent(v);
                    if e > 0 {
                        acc = acc * values[v.index()].as_ref().unwrap().pow(e as u32);
                    }
                }
                acc
            })
            .sum()
    }

    /// Evaluates a polynomial in x1..x4 at a point.
    pub fn evaluate_x(&self, point: &[Cyc8; 4]) -> Cyc8 {
        self.evaluate(|v| match v {
            Var::X1 => point[0].clone(),
            Var::X2 => point[1].clone(),
            Var::X3 => point[2].clone(),
            Var::X4 => point[3].clone(),
            _ => Cyc8::zero(),
        })
    }

    pub fn substitute(&self, map: &Substitution) -> Result<Self, Error> {
        let mut powers: Vec<Vec<MultiPoly>> = vec![Vec::new(); NUM_VARS];
        for v in Var::ALL {
            let needed = self.degree_in(v);
            if needed == 0 {
                continue;
            }
            let image = map.images[v.index()]
                .as_ref()
                .ok_or(Error::MissingSubstitution(v.name()))?;
            let mut list = vec![MultiPoly::one()];
            for k in 1..=needed as usize {
                let next = &list[k - 1] * image;
                list.push(next);
            }
            powers[v.index()] = list;
        }
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = MultiPoly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    acc = &acc * &powers[v.index()][e];
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

/// Returns λ ≠ 0 with `p = λ·q`, if one exists. Two zero polynomials are
/// proportional with λ = 1.
pub fn proportional(p: &MultiPoly, q: &MultiPoly) -> Option<Cyc8> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Some(Cyc8::one()),
        (true, false) | (false, true) => return None,
        _ => {}
    }
    if p.len() != q.len() {
        return None;
    }
    let (m, qc) = q.leading()?;
    let pc = p.terms.get(m)?;
    let lambda = pc / qc;
    (q.scale(&lambda) == *p).then_some(lambda)
}

/// Common monomial support of `polys` and their coefficient vectors over it.
pub fn coefficient_vectors(polys: &[MultiPoly]) -> (Vec<Monomial>, Vec<Vec<Cyc8>>) {
    let mut support: Vec<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms.keys().copied())
        .collect();
    support.sort();
    support.dedup();
    let vectors = polys
        .iter()
        .map(|p| support.iter().map(|m| p.coeff(m)).collect())
        .collect();
    (support, vectors)
}

/// A map from variables to polynomials, applied simultaneously.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    images: [Option<MultiPoly>; NUM_VARS],
}

impl Substitution {
    /// Empty map; substituting into a polynomial with any variable fails.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Substitution {
            images: std::array::from_fn(|k| Some(MultiPoly::var(Var::ALL[k]))),
        }
    }

    pub fn set(mut self, v: Var, image: MultiPoly) -> Self {
        self.images[v.index()] = Some(image);
        self
    }

    /// Identity except `vars[i] ↦ Σⱼ matrix[i][j]·vars[j]`.
    pub fn linear(vars: &[Var], matrix: &[Vec<Cyc8>]) -> Self {
        let mut sub = Substitution::identity();
        for (i, &v) in vars.iter().enumerate() {
            sub.images[v.index()] = Some(MultiPoly::linear(&matrix[i], vars));
        }
        sub
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (mut out, other) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut acc: BTreeMap<Monomial, Cyc8> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|e| *e += &c)
                    .or_insert(c);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { terms: acc }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Cyc8::from_int(-1))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly { (&self).$method(rhs) }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly { self.$method(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for MultiPoly {
    /// Highest monomial first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (negative, magnitude) = match c.to_rational() {
                Some(r) if r < num_traits::Zero::zero() => (true, Cyc8::from_rational(-r)),
                _ => (false, c.clone()),
            };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let is_const = *m == Monomial::one();
            if magnitude.is_one() && !is_const {
                write!(f, "{m}")?;
            } else if is_const {
                write!(f, "{magnitude}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Shorthand constructors used throughout the crate and its tests.
pub fn s() -> MultiPoly {
    MultiPoly::var(Var::S)
}

pub fn t() -> MultiPoly {
    MultiPoly::var(Var::T)
}

/// `x(1)..x(4)`.
pub fn x(i: usize) -> MultiPoly {
    MultiPoly::var(Var::XS[i - 1])
}

/// `y(1)..y(4)`.
pub fn y(i: usize) -> MultiPoly {
    MultiPoly::var(Var::YS[i - 1])
}

pub fn c(n: i64) -> MultiPoly {
    MultiPoly::constant(Cyc8::from_int(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn identity_substitution() {
        let p = &(&s() * &x(1)) - &c(3).scale(&Cyc8::zeta());
        assert_eq!(p.substitute(&Substitution::identity()).unwrap(), p);
    }

    #[test]
    fn hadamard_substitution_of_st() {
        // (s,t) -> ((s-t)/√2, (s+t)/√2): st -> (s² - t²)/2
        let h = Cyc8::inv_sqrt2();
        let sub = Substitution::new()
            .set(Var::S, (&s() - &t()).scale(&h))
            .set(Var::T, (&s() + &t()).scale(&h));
        let got = (&s() * &t()).substitute(&sub).unwrap();
        let expected = (&s().pow(2) - &t().pow(2)).scale(&Cyc8::from_rational(rat(1, 2)));
        assert_eq!(got, expected);
    }

    #[test]
    fn odd_monomial_sign_flip() {
        let m: MultiPoly = (1..=4).map(x).product();
        let sub = Substitution::identity().set(Var::X4, -x(4));
        assert_eq!(m.substitute(&sub).unwrap(), -m);
    }

    #[test]
    fn missing_variable_is_an_error() {
        let sub = Substitution::new().set(Var::S, t());
        let err = (&s() * &x(2)).substitute(&sub).unwrap_err();
        assert!(matches!(err, Error::MissingSubstitution("x2")));
    }

    #[test]
    fn proportional_cases() {
        let x1sq = x(1).pow(2);
        assert_eq!(proportional(&x1sq.scale(&Cyc8::from_int(2)), &x1sq), Some(Cyc8::from_int(2)));
        assert_eq!(proportional(&x1sq, &x(2).pow(2)), None);
        assert_eq!(proportional(&MultiPoly::zero(), &x(1)), None);
        assert_eq!(proportional(&MultiPoly::zero(), &MultiPoly::zero()), Some(Cyc8::one()));
    }

    #[test]
    fn deglex_order() {
        // degree dominates, then s before t before x's
        assert!(Monomial::of(&[Var::X4, Var::X4]) > Monomial::of(&[Var::S]));
        assert!(Monomial::of(&[Var::S]) > Monomial::of(&[Var::T]));
        assert!(Monomial::of(&[Var::T]) > Monomial::of(&[Var::X1]));
    }

    #[test]
    fn display_is_stable() {
        let p = &(&c(24) * &s().pow(4)) - &(&c(6) * &(&s().pow(2) * &t().pow(2)));
        assert_eq!(p.to_string(), "24*s^4 - 6*s^2*t^2");
    }

    #[test]
    fn partial_derivative() {
        let p = &x(1).pow(3) * &x(2);
        assert_eq!(p.partial(Var::X1), &c(3) * &(&x(1).pow(2) * &x(2)));
        assert!(p.partial(Var::X3).is_zero());
    }

    fn small_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(((0u8..3, 0u8..3, 0u8..3), -5i64..=5), 0..5).prop_map(|terms| {
            MultiPoly::from_terms(terms.into_iter().map(|((a, b, e), k)| {
                let mut exps = [0u8; NUM_VARS];
                exps[Var::S.index()] = a;
                exps[Var::X1.index()] = b;
                exps[Var::X2.index()] = e;
                (Monomial::from_exponents(exps), Cyc8::from_int(k))
            }))
        })
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_homomorphism(p in small_poly(), q in small_poly(), a in -3i64..=3, b in -3i64..=3) {
            let sub = Substitution::identity()
                .set(Var::S, &s() + &x(2).scale(&Cyc8::from_int(a)))
                .set(Var::X1, &x(1).scale(&Cyc8::zeta()) - &c(b))
                .set(Var::X2, &t() * &x(1));
            let lhs = (&p * &q).substitute(&sub).unwrap();
            let rhs = &p.substitute(&sub).unwrap() * &q.substitute(&sub).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = (&p + &q).substitute(&sub).unwrap();
            let rhs = &p.substitute(&sub).unwrap() + &q.substitute(&sub).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
