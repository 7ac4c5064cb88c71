//! The moment map P: Λ³ℂ⁶ → 𝔰𝔩₆, the invariant quartic Q, its restriction
//! to the Cartan subspace, the lifts σ₁…σ₄ of the Weyl generators to
//! SL₂×SL₆ and the binary octahedral image in SL₂.
//!
//! The invariant form on 𝔰𝔩₆ is the trace form K(X,Y) = Tr(XY). With this
//! choice P is read off entrywise: P_ij = Ω((e_i^∨⊗e_j)·w, w) off the
//! diagonal, and the diagonal is Ω(E_kk·w, w) with its trace removed.

use crate::algebra::poly::{c, s, t};
use crate::algebra::{
    group_closure, proportional, solve_in_span, Cyc8, ExactMatrix,
    MatrixGroup, Monomial, MultiPoly, Substitution, Var,
};
use crate::desmic::{coordinate_product, quadric_sum_form};
use crate::error::Error;
use crate::extalg::{
    cartan_basis, gl6_act, group_act, omega_pairing, pencil_trivector, PencilTrivector,
    PolyMatrix6, Trivector,
};

/// Value of the moment map: a traceless 6×6 matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MomentValue(pub PolyMatrix6);

impl MomentValue {
    pub fn matrix(&self) -> &PolyMatrix6 {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        self.0.get(i - 1, j - 1)
    }

    /// K(P, X) = Tr(P·X).
    pub fn pair_with(&self, x: &PolyMatrix6) -> MultiPoly {
        self.0.mul(x).trace()
    }

    /// The 2×2 block on the plane ⟨e_{2k+1}, e_{2k+2}⟩, k = 0, 1, 2.
    pub fn plane_block(&self, k: usize) -> [[MultiPoly; 2]; 2] {
        let o = 2 * k;
        std::array::from_fn(|r| std::array::from_fn(|c| self.0.get(o + r, o + c).clone()))
    }

    /// Every entry outside the three diagonal 2×2 blocks vanishes.
    pub fn preserves_planes(&self) -> bool {
        (0..6).all(|r| (0..6).all(|c| r / 2 == c / 2 || self.0.get(r, c).is_zero()))
    }
}

pub fn moment_map(w: &Trivector) -> MomentValue {
    let mut p = PolyMatrix6::zero();
    let mut diag = Vec::with_capacity(6);
    for i in 1..=6 {
        for j in 1..=6 {
            let value = omega_pairing(&gl6_act(&PolyMatrix6::elementary(i, j), w), w);
            if i == j {
                diag.push(value);
            } else {
                p.set(i - 1, j - 1, value);
            }
        }
    }
    let mean = diag
        .iter()
        .cloned()
        .sum::<MultiPoly>()
        .scale(&Cyc8::from_rational(crate::algebra::rat(1, 6)));
    for (k, d) in diag.iter().enumerate() {
        p.set(k, k, d - &mean);
    }
    MomentValue(p)
}

/// The 35 basis elements of 𝔰𝔩₆: the 30 elementary off-diagonal matrices
/// and E_kk − E_{k+1,k+1}.
pub fn sl6_basis() -> Vec<PolyMatrix6> {
    let mut basis = Vec::with_capacity(35);
    for i in 1..=6 {
        for j in 1..=6 {
            if i != j {
                basis.push(PolyMatrix6::elementary(i, j));
            }
        }
    }
    for k in 1..6 {
        basis.push(PolyMatrix6::elementary(k, k).sub(&PolyMatrix6::elementary(k + 1, k + 1)));
    }
    basis
}

/// Q(w) = K(P(w), P(w)), checked against Ω(P(w)·w, w).
pub fn quartic_q(w: &Trivector) -> Result<MultiPoly, Error> {
    let p = moment_map(w);
    let via_trace = p.pair_with(&p.0);
    let via_omega = omega_pairing(&gl6_act(&p.0, w), w);
    if via_trace != via_omega {
        return Err(Error::QuarticMismatch);
    }
    Ok(via_trace)
}

/// 24(s⁴+t⁴)·x₁x₂x₃x₄ − 6s²t²·(2Σ_{i<j}x_i²x_j² − Σ_k x_k⁴).
pub fn reference_cartan_quartic() -> MultiPoly {
    let a = &c(24) * &(&s().pow(4) + &t().pow(4));
    let b = &c(6) * &(&s().pow(2) * &t().pow(2));
    &(&a * &coordinate_product()) - &(&b * &quadric_sum_form())
}

#[derive(Clone, Debug)]
pub struct RestrictedQuartic {
    /// Q on w(s,t,x).
    pub poly: MultiPoly,
    /// The constant κ with `poly = κ · reference_cartan_quartic()`.
    pub kappa: Cyc8,
}

/// Q restricted to the pencil trivector, with its proportionality constant
/// against the closed form.
pub fn restricted_quartic() -> Result<RestrictedQuartic, Error> {
    let poly = quartic_q(&pencil_trivector())?;
    let kappa = proportional(&poly, &reference_cartan_quartic()).ok_or_else(|| {
        Error::Verification("restricted quartic is not proportional to the closed form".into())
    })?;
    Ok(RestrictedQuartic { poly, kappa })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LiftPair {
    pub label: usize,
    pub sl2_part: ExactMatrix,
    pub sl6_part: ExactMatrix,
}

impl LiftPair {
    pub fn act(&self, v: &PencilTrivector) -> Result<PencilTrivector, Error> {
        group_act(&self.sl2_part, &self.sl6_part, v)
    }
}

/// The lifts σ₁…σ₄ of s₁…s₄ to SL₂×SL₆.
pub fn lifts() -> [LiftPair; 4] {
    let one = Cyc8::one();
    let minus_id = ExactMatrix::identity(2).neg();
    let z = Cyc8::zeta;
    let sigma1 = ExactMatrix::from_int_rows(
        &[
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
        ],
        &one,
    );
    let sigma2 = ExactMatrix::from_int_rows(
        &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
        ],
        &one,
    );
    let minus_i = -Cyc8::zeta_pow(2);
    let sigma3_sl2 = ExactMatrix::diagonal(&[z(), z().inverse().unwrap()]);
    let sigma3 = ExactMatrix::diagonal(&[
        one.clone(),
        minus_i.clone(),
        minus_i,
        one.clone(),
        Cyc8::zeta_pow(3),
        z(),
    ]);
    let r = Cyc8::inv_sqrt2();
    let sigma4_sl2 = ExactMatrix::from_int_rows(&[&[1, -1], &[1, 1]], &r);
    let sigma4 = ExactMatrix::from_int_rows(
        &[
            &[1, -1, 0, 0, 0, 0],
            &[1, 1, 0, 0, 0, 0],
            &[0, 0, 1, -1, 0, 0],
            &[0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 1, -1],
            &[0, 0, 0, 0, 1, 1],
        ],
        &r,
    );
    [
        (minus_id.clone(), sigma1),
        (minus_id, sigma2),
        (sigma3_sl2, sigma3),
        (sigma4_sl2, sigma4),
    ]
    .into_iter()
    .enumerate()
    .map(|(k, (sl2_part, sl6_part))| LiftPair {
        label: k + 1,
        sl2_part,
        sl6_part,
    })
    .collect::<Vec<_>>()
    .try_into()
    .unwrap()
}

fn flatten(v: &PencilTrivector) -> Result<Vec<Cyc8>, Error> {
    let one = Monomial::one();
    v.part1
        .coeffs()
        .iter()
        .chain(v.part2.coeffs())
        .map(|p| {
            if p.terms().all(|(m, _)| *m == one) {
                Ok(p.coeff(&one))
            } else {
                Err(Error::Verification("expected constant coefficients".into()))
            }
        })
        .collect()
}

/// Matrix of σ acting on span(c₁…c₄); column j holds the coordinates of σ·c_j.
pub fn induced_cartan_matrix(sigma: &LiftPair) -> Result<ExactMatrix, Error> {
    let basis: Vec<Vec<Cyc8>> = cartan_basis()
        .iter()
        .map(flatten)
        .collect::<Result<_, _>>()?;
    let mut m = ExactMatrix::zeros(4, 4);
    for (j, cj) in cartan_basis().iter().enumerate() {
        let image = sigma.act(cj)?;
        let coords = solve_in_span(&basis, &flatten(&image)?).ok_or_else(|| {
            Error::OutsideCartan {
                label: sigma.label,
                column: j + 1,
                component: format!("f1⊗({}) + f2⊗({})", image.part1, image.part2),
            }
        })?;
        for (i, value) in coords.into_iter().enumerate() {
            m.set(i, j, value);
        }
    }
    Ok(m)
}

/// Closure of the SL₂ parts of σ₁…σ₄.
pub fn sl2_image_group() -> Result<MatrixGroup, Error> {
    let generators: Vec<ExactMatrix> = lifts().iter().map(|l| l.sl2_part.clone()).collect();
    group_closure(&generators)
}

/// st(s⁴ − t⁴).
pub fn klein_form() -> MultiPoly {
    &(&s() * &t()) * &(&s().pow(4) - &t().pow(4))
}

/// Substitutes (s, t) ↦ g·(s, t).
pub fn act_on_binary_form(g: &ExactMatrix, f: &MultiPoly) -> Result<MultiPoly, Error> {
    let vars = [Var::S, Var::T];
    f.substitute(&Substitution::linear(&vars, &g.to_rows()))
}

/// χ(g) with f(g·(s,t)) = χ(g)·f(s,t) for the Klein form f.
pub fn klein_character(g: &ExactMatrix) -> Result<Cyc8, Error> {
    let f = klein_form();
    let image = act_on_binary_form(g, &f)?;
    let chi = proportional(&image, &f).ok_or_else(|| Error::NotRelativeInvariant(g.to_string()))?;
    if chi.is_one() || (-&chi).is_one() {
        Ok(chi)
    } else {
        Err(Error::NotRelativeInvariant(format!("{g}: character {chi}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::x;
    use crate::rootsys::reference_generators;

    #[test]
    fn moment_of_decomposable_is_zero() {
        let p = moment_map(&Trivector::e(1, 3, 5));
        assert!((0..6).all(|r| (0..6).all(|c| p.0.get(r, c).is_zero())));
        assert!(quartic_q(&Trivector::e(1, 3, 5)).unwrap().is_zero());
    }

    #[test]
    fn sigma3_determinants() {
        let l = &lifts()[2];
        assert_eq!(l.sl2_part.determinant().unwrap(), Cyc8::one());
        assert_eq!(l.sl6_part.determinant().unwrap(), Cyc8::one());
    }

    #[test]
    fn induced_matrices_are_reference_generators() {
        let refs = reference_generators();
        for (l, s_ref) in lifts().iter().zip(refs.iter()) {
            assert_eq!(&induced_cartan_matrix(l).unwrap(), s_ref, "sigma{}", l.label);
        }
    }

    #[test]
    fn sigma1_on_c1_and_c2() {
        let cb = cartan_basis();
        let s1 = &lifts()[0];
        assert_eq!(s1.act(&cb[0]).unwrap(), cb[0]);
        assert_eq!(s1.act(&cb[1]).unwrap(), cb[2]);
    }

    #[test]
    fn klein_character_examples() {
        let minus = ExactMatrix::identity(2).neg();
        assert_eq!(klein_character(&minus).unwrap(), Cyc8::one());
        let l = lifts();
        assert_eq!(klein_character(&l[2].sl2_part).unwrap(), Cyc8::from_int(-1));
        assert_eq!(klein_character(&l[3].sl2_part).unwrap(), Cyc8::from_int(-1));
    }

    #[test]
    fn klein_character_rejects_non_invariant() {
        let shear = ExactMatrix::from_int_rows(&[&[1, 1], &[0, 1]], &Cyc8::one());
        assert!(klein_character(&shear).is_err());
    }

    #[test]
    fn hadamard_on_st_and_quartic() {
        let g = &lifts()[3].sl2_part;
        let st = &s() * &t();
        let half = Cyc8::from_rational(crate::algebra::rat(1, 2));
        assert_eq!(act_on_binary_form(g, &st).unwrap(), (&s().pow(2) - &t().pow(2)).scale(&half));
        let q = &s().pow(4) - &t().pow(4);
        let expected = &(&c(-2) * &st) * &(&s().pow(2) + &t().pow(2));
        assert_eq!(act_on_binary_form(g, &q).unwrap(), expected);
    }

    #[test]
    fn restricted_quartic_setting_t_zero() {
        let r = restricted_quartic().unwrap();
        let sub = Substitution::identity().set(Var::T, MultiPoly::zero());
        let at_t0 = r.poly.substitute(&sub).unwrap();
        let m = &s().pow(4) * &(&(&x(1) * &x(2)) * &(&x(3) * &x(4)));
        assert!(proportional(&at_t0, &m).is_some());
    }
}
