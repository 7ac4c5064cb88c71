//! Four points on the pencil line, their cross-ratio and j-invariant, the
//! half-period data of the conjugate pencil, and the check that both
//! describe the same elliptic curve.

use std::fmt;

use crate::algebra::poly::{s, t};
use crate::algebra::{rat, Cyc8, ExactMatrix, Monomial, MultiPoly, Rational, Substitution, Var};
use crate::desmic::{pencil_member, PencilParams, ProjPoint};
use crate::error::Error;
use crate::extalg::cartan_element_at;
use crate::rootsys::short_long_duality;
use crate::vinberg::quartic_q;

/// A point [u:v] of ℙ¹, either the affine value u/v or ∞ = [1:0].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P1Point {
    Finite(Cyc8),
    Infinity,
}

impl P1Point {
    pub fn new(u: &Cyc8, v: &Cyc8) -> Result<Self, Error> {
        if v.is_zero() {
            if u.is_zero() {
                return Err(Error::ZeroVector);
            }
            return Ok(P1Point::Infinity);
        }
        Ok(P1Point::Finite(u / v))
    }

    pub fn finite(value: Cyc8) -> Self {
        P1Point::Finite(value)
    }

    pub fn homogeneous(&self) -> (Cyc8, Cyc8) {
        match self {
            P1Point::Finite(a) => (a.clone(), Cyc8::one()),
            P1Point::Infinity => (Cyc8::one(), Cyc8::zero()),
        }
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Point::Finite(a) => write!(f, "{a}"),
            P1Point::Infinity => write!(f, "∞"),
        }
    }
}

/// a₀s⁴ + 4a₁s³t + 6a₂s²t² + 4a₃st³ + a₄t⁴.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuartic {
    a: [Cyc8; 5],
}

const BINOMIAL: [i64; 5] = [1, 4, 6, 4, 1];

impl BinaryQuartic {
    pub fn new(a: [Cyc8; 5]) -> Result<Self, Error> {
        if a.iter().all(Cyc8::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(BinaryQuartic { a })
    }

    /// Reads a form in s, t of degree 4.
    pub fn from_poly(f: &MultiPoly) -> Result<Self, Error> {
        let mut a: [Cyc8; 5] = Default::default();
        let mut seen = 0;
        for k in 0..5 {
            let m = Monomial::of(&[vec![Var::S; 4 - k], vec![Var::T; k]].concat());
            let c = f.coeff(&m);
            if !c.is_zero() {
                seen += 1;
            }
            a[k] = c * Cyc8::from_rational(rat(1, BINOMIAL[k]));
        }
        if seen != f.len() {
            return Err(Error::Dimension(format!("not a binary quartic in s, t: {f}")));
        }
        Self::new(a)
    }

    /// Π (v_k·s − u_k·t) over the roots [u_k : v_k].
    pub fn from_roots(roots: &[P1Point; 4]) -> Self {
        let f = roots
            .iter()
            .map(|r| {
                let (u, v) = r.homogeneous();
                MultiPoly::linear(&[v, -u], &[Var::S, Var::T])
            })
            .product::<MultiPoly>();
        Self::from_poly(&f).expect("product of four linear forms")
    }

    pub fn coeffs(&self) -> &[Cyc8; 5] {
        &self.a
    }

    pub fn to_poly(&self) -> MultiPoly {
        (0..5)
            .map(|k| {
                let m = Monomial::of(&[vec![Var::S; 4 - k], vec![Var::T; k]].concat());
                MultiPoly::term(&self.a[k] * &Cyc8::from_int(BINOMIAL[k]), m)
            })
            .sum()
    }

    /// I = a₀a₄ − 4a₁a₃ + 3a₂².
    pub fn invariant_i(&self) -> Cyc8 {
        let [a0, a1, a2, a3, a4] = &self.a;
        a0 * a4 - Cyc8::from_int(4) * (a1 * a3) + Cyc8::from_int(3) * (a2 * a2)
    }

    /// J = a₀a₂a₄ + 2a₁a₂a₃ − a₂³ − a₀a₃² − a₁²a₄.
    pub fn invariant_j(&self) -> Cyc8 {
        let [a0, a1, a2, a3, a4] = &self.a;
        &(a0 * a2) * a4 + Cyc8::from_int(2) * (&(a1 * a2) * a3)
            - &(a2 * a2) * a2
            - &(a0 * a3) * a3
            - &(a1 * a1) * a4
    }

    /// I³ − 27J²; zero exactly when two roots coincide.
    pub fn discriminant(&self) -> Cyc8 {
        let i = self.invariant_i();
        let j = self.invariant_j();
        &(&i * &i) * &i - Cyc8::from_int(27) * (&j * &j)
    }

    pub fn evaluate(&self, p: &P1Point) -> Cyc8 {
        let (u, v) = p.homogeneous();
        self.to_poly().evaluate(|var| match var {
            Var::S => u.clone(),
            _ => v.clone(),
        })
    }
}

impl fmt::Display for BinaryQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Q restricted to the line δ(x) = {s·u(x) + t·v(x)}.
pub fn member_binary_quartic(x: &ProjPoint) -> Result<BinaryQuartic, Error> {
    let w = cartan_element_at(x.coords()).contract(&s(), &t());
    let q = quartic_q(&w)?;
    if q.is_zero() {
        return Err(Error::BaseLocus);
    }
    BinaryQuartic::from_poly(&q)
}

const TETRAHEDRON_NAMES: [&str; 3] = ["T₁", "T₂", "T₃"];

/// The member [3(s⁴+t⁴) : 6s²t²], rejecting the three tetrahedra.
pub fn nondegenerate_params(s0: &Cyc8, t0: &Cyc8) -> Result<PencilParams, Error> {
    let p = PencilParams::from_st(s0, t0)?;
    match p.tetrahedron() {
        Some(k) => Err(Error::DegenerateMember(TETRAHEDRON_NAMES[k - 1])),
        None => Ok(p),
    }
}

/// [s₀:t₀], [s₀:−t₀], [t₀:s₀], [t₀:−s₀].
pub fn symmetric_roots(s0: &Cyc8, t0: &Cyc8) -> Result<[P1Point; 4], Error> {
    nondegenerate_params(s0, t0)?;
    Ok([
        P1Point::new(s0, t0)?,
        P1Point::new(s0, &-t0)?,
        P1Point::new(t0, s0)?,
        P1Point::new(t0, &-s0)?,
    ])
}

fn bracket(p: &P1Point, q: &P1Point) -> Cyc8 {
    let (a, b) = p.homogeneous();
    let (c, d) = q.homogeneous();
    &a * &d - &b * &c
}

/// ((p₁−p₃)(p₂−p₄)) / ((p₁−p₄)(p₂−p₃)), with ∞ handled homogeneously.
pub fn cross_ratio(p: &[P1Point; 4]) -> Result<Cyc8, Error> {
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] == p[j] {
                return Err(Error::RepeatedPoints);
            }
        }
    }
    let num = bracket(&p[0], &p[2]) * bracket(&p[1], &p[3]);
    let den = bracket(&p[0], &p[3]) * bracket(&p[1], &p[2]);
    Ok(num / den)
}

/// 256(λ²−λ+1)³ / (λ²(1−λ)²).
pub fn j_from_lambda(lambda: &Cyc8) -> Result<Cyc8, Error> {
    let one = Cyc8::one();
    if lambda.is_zero() || *lambda == one {
        return Err(Error::DegenerateLambda(lambda.to_string()));
    }
    let l2 = lambda * lambda;
    let core = &(&l2 - lambda) + &one;
    let oml = &one - lambda;
    Ok(Cyc8::from_int(256) * core.pow(3) / (&l2 * &(&oml * &oml)))
}

/// 1728·I³/(I³ − 27J²).
pub fn j_from_binary_quartic(f: &BinaryQuartic) -> Result<Cyc8, Error> {
    let disc = f.discriminant();
    if disc.is_zero() {
        return Err(Error::RepeatedRoots);
    }
    Ok(Cyc8::from_int(1728) * f.invariant_i().pow(3) / disc)
}

/// (e₁−e₂, e₃−e₁, e₂−e₃) up to a common factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPeriodDifferences {
    pub d12: Cyc8,
    pub d31: Cyc8,
    pub d23: Cyc8,
}

impl HalfPeriodDifferences {
    pub fn new(d12: Cyc8, d31: Cyc8, d23: Cyc8) -> Result<Self, Error> {
        if !(&(&d12 + &d31) + &d23).is_zero() {
            return Err(Error::SumNotZero);
        }
        Ok(HalfPeriodDifferences { d12, d31, d23 })
    }

    /// (4s²t², (s²−t²)², −(s²+t²)²).
    pub fn from_st(s0: &Cyc8, t0: &Cyc8) -> Result<Self, Error> {
        let s2 = s0 * s0;
        let t2 = t0 * t0;
        let minus = &s2 - &t2;
        let plus = &s2 + &t2;
        Self::new(
            Cyc8::from_int(4) * (&s2 * &t2),
            &minus * &minus,
            -(&plus * &plus),
        )
    }

    /// (e₃−e₁)/(e₂−e₁).
    pub fn cross_ratio(&self) -> Result<Cyc8, Error> {
        if self.d12.is_zero() {
            return Err(Error::DegenerateLambda("e₁ = e₂".into()));
        }
        Ok(&self.d31 / &(-&self.d12))
    }

    pub fn is_proportional_to(&self, other: &HalfPeriodDifferences) -> bool {
        crate::rootsys::is_multiple(
            &[self.d12.clone(), self.d31.clone(), self.d23.clone()],
            &[other.d12.clone(), other.d31.clone(), other.d23.clone()],
        )
    }
}

pub fn half_period_cross_ratio(s0: &Cyc8, t0: &Cyc8) -> Result<Cyc8, Error> {
    nondegenerate_params(s0, t0)?;
    HalfPeriodDifferences::from_st(s0, t0)?.cross_ratio()
}

/// Pulls the member at (s₀, t₀) back along x = D·y, with D the short/long
/// duality, and reads its coefficients on y₁²y₂²+y₃²y₄², y₁²y₃²+y₂²y₄²,
/// y₁²y₄²+y₂²y₃².
pub fn half_periods_from_duality(s0: &Cyc8, t0: &Cyc8) -> Result<HalfPeriodDifferences, Error> {
    let params = nondegenerate_params(s0, t0)?;
    let d = short_long_duality();
    let mut sub = Substitution::new();
    for i in 0..4 {
        sub = sub.set(Var::XS[i], MultiPoly::linear(d.row(i), &Var::YS));
    }
    let form = pencil_member(&params).form().substitute(&sub)?;
    let sq = |i: usize, j: usize| Monomial::of(&[Var::YS[i], Var::YS[i], Var::YS[j], Var::YS[j]]);
    let pairs = [
        [(0, 1), (2, 3)],
        [(0, 2), (1, 3)],
        [(0, 3), (1, 2)],
    ];
    let mut k: Vec<Cyc8> = Vec::with_capacity(3);
    let mut rebuilt = MultiPoly::zero();
    for [(a, b), (c, e)] in pairs {
        let coeff = form.coeff(&sq(a, b));
        if form.coeff(&sq(c, e)) != coeff {
            return Err(Error::Verification(format!(
                "dual member is not of conjugate shape: {form}"
            )));
        }
        rebuilt = &rebuilt + &MultiPoly::term(coeff.clone(), sq(a, b));
        rebuilt = &rebuilt + &MultiPoly::term(coeff.clone(), sq(c, e));
        k.push(coeff);
    }
    if rebuilt != form {
        return Err(Error::Verification(format!(
            "dual member is not of conjugate shape: {form}"
        )));
    }
    let [d12, d31, d23]: [Cyc8; 3] = k.try_into().unwrap();
    HalfPeriodDifferences::new(d12, d31, d23)
}

/// A point of the member with parameters `params`, off the base locus.
///
/// On points [1, q, r, r] the member equation reads
/// r² = B²(1−q²)²/z² with z² = 4B²(1+q²) − 8ABq. That conic in (q, z) has
/// the point (0, 2B); the line z = 2B + kq meets it again at
/// q = −4B(2A + k)/(k² − 4B²).
pub fn rational_point_on_member(params: &PencilParams) -> Result<ProjPoint, Error> {
    let member = pencil_member(params);
    let (a, b) = (params.a(), params.b());
    let two_b = Cyc8::from_int(2) * b;
    let one = Cyc8::one();
    for step in 1..=40i64 {
        let k = Cyc8::from_int(if step % 2 == 1 { step / 2 + 1 } else { -step / 2 });
        let den = &(&k * &k) - &(&two_b * &two_b);
        if den.is_zero() {
            continue;
        }
        let q = -(Cyc8::from_int(2) * &two_b * (&(Cyc8::from_int(2) * a) + &k)) / den;
        let z = &two_b + &(&k * &q);
        if z.is_zero() {
            continue;
        }
        let r = b * &(&one - &(&q * &q)) / z;
        let point = ProjPoint::new([one.clone(), q, r.clone(), r])?;
        if !member.evaluate(&point).is_zero() {
            return Err(Error::Verification(format!("{point} is not on the member")));
        }
        if member_binary_quartic(&point).is_ok() {
            return Ok(point);
        }
    }
    Err(Error::Verification(format!(
        "no point found on member {params}"
    )))
}

#[derive(Clone, Debug)]
pub struct KummerReport {
    pub s0: Cyc8,
    pub t0: Cyc8,
    pub params: PencilParams,
    pub lambda_curve: Cyc8,
    pub lambda_periods: Cyc8,
    pub j_curve: Cyc8,
    pub j_periods: Cyc8,
    /// The rational point of the member used for the root-free recomputation.
    pub point: ProjPoint,
    pub j_quartic: Cyc8,
    /// Half-period differences read off the dual member agree with the closed form.
    pub duality_agrees: bool,
}

pub fn verify_kummer_correspondence(s0: &Cyc8, t0: &Cyc8) -> Result<KummerReport, Error> {
    let params = nondegenerate_params(s0, t0)?;
    let lambda_curve = cross_ratio(&symmetric_roots(s0, t0)?)?;
    let lambda_periods = half_period_cross_ratio(s0, t0)?;
    let j_curve = j_from_lambda(&lambda_curve)?;
    let j_periods = j_from_lambda(&lambda_periods)?;
    if j_curve != j_periods {
        return Err(Error::JMismatch(format!(
            "curve side {j_curve} (λ = {lambda_curve}), half-period side {j_periods} (λ = {lambda_periods})"
        )));
    }
    let point = rational_point_on_member(&params)?;
    let j_quartic = j_from_binary_quartic(&member_binary_quartic(&point)?)?;
    if j_quartic != j_curve {
        return Err(Error::JMismatch(format!(
            "binary quartic at {point} gives {j_quartic}, roots give {j_curve}"
        )));
    }
    let duality_agrees =
        half_periods_from_duality(s0, t0)?.is_proportional_to(&HalfPeriodDifferences::from_st(s0, t0)?);
    Ok(KummerReport {
        s0: s0.clone(),
        t0: t0.clone(),
        params,
        lambda_curve,
        lambda_periods,
        j_curve,
        j_periods,
        point,
        j_quartic,
        duality_agrees,
    })
}

/// Convenience wrapper for rational parameters.
pub fn verify_kummer_rational(s0: &Rational, t0: &Rational) -> Result<KummerReport, Error> {
    verify_kummer_correspondence(&Cyc8::from_rational(s0.clone()), &Cyc8::from_rational(t0.clone()))
}

/// Applies g ∈ GL₂ to a point: [u:v] ↦ g·(u, v).
pub fn moebius(g: &ExactMatrix, p: &P1Point) -> Result<P1Point, Error> {
    let (u, v) = p.homogeneous();
    let image = g.apply(&[u, v]);
    P1Point::new(&image[0], &image[1])
}
