use desmic_core::algebra::poly::{c, s, t, x};
use desmic_core::algebra::{proportional, Cyc8, ExactMatrix, MultiPoly, Substitution, Var};
use desmic_core::extalg::{
    cartan_basis, generic_cartan_element, gl6_act, omega_pairing, pencil_trivector, triples,
    wedge3_apply, PolyMatrix6, Trivector,
};
use desmic_core::rootsys::reference_generators;
use desmic_core::vinberg::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_trivector(rng: &mut ChaCha8Rng) -> Trivector {
    Trivector::from_coeffs(std::array::from_fn(|_| {
        MultiPoly::constant(Cyc8::from_int(rng.gen_range(-3..=3)))
    }))
}

fn random_sl6(rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut h = ExactMatrix::identity(6);
    for _ in 0..6 {
        let i = rng.gen_range(0..6);
        let j = (i + rng.gen_range(1..6)) % 6;
        let mut e = ExactMatrix::identity(6);
        e.set(i, j, Cyc8::from_int(rng.gen_range(-2..=2)));
        h = &h * &e;
    }
    h
}

#[test]
fn defining_identity_on_random_trivectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let basis = sl6_basis();
    assert_eq!(basis.len(), 35);
    for _ in 0..3 {
        let w = random_trivector(&mut rng);
        let p = moment_map(&w);
        assert!(p.matrix().trace().is_zero());
        for x in &basis {
            assert_eq!(p.pair_with(x), omega_pairing(&gl6_act(x, &w), &w));
        }
    }
}

#[test]
fn quartic_is_sl6_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut hs: Vec<ExactMatrix> = lifts().iter().map(|l| l.sl6_part.clone()).collect();
    hs.push(&hs[2] * &hs[3]);
    for _ in 0..3 {
        hs.push(random_sl6(&mut rng));
    }
    let w = random_trivector(&mut rng);
    let q = quartic_q(&w).unwrap();
    assert!(!q.is_zero());
    for h in &hs {
        assert_eq!(h.determinant().unwrap(), Cyc8::one());
        assert_eq!(quartic_q(&wedge3_apply(h, &w)).unwrap(), q);
    }
}

#[test]
fn moment_blocks_match_displayed_matrices() {
    let p = moment_map(&pencil_trivector());
    assert!(p.preserves_planes());
    let st = &s() * &t();
    let s2 = s().pow(2);
    let t2 = t().pow(2);
    let sq = |i: usize| x(i).pow(2);
    let off = |a: usize, b: usize, c2: usize, d: usize| {
        &c(2) * &(&(&s2 * &(&x(a) * &x(b))) - &(&t2 * &(&x(c2) * &x(d))))
    };
    let diag = |plus: [usize; 2], minus: [usize; 2]| {
        &st * &(&(&sq(plus[0]) + &sq(plus[1])) - &(&sq(minus[0]) + &sq(minus[1])))
    };
    let expected = [
        [[diag([3, 4], [1, 2]), off(1, 2, 3, 4)], [off(3, 4, 1, 2), diag([1, 2], [3, 4])]],
        [[diag([2, 3], [1, 4]), off(1, 4, 2, 3)], [off(2, 3, 1, 4), diag([1, 4], [2, 3])]],
        [[diag([2, 4], [1, 3]), off(1, 3, 2, 4)], [off(2, 4, 1, 3), diag([1, 3], [2, 4])]],
    ];
    let mut kappa: Option<Cyc8> = None;
    for (k, block) in expected.iter().enumerate() {
        let got = p.plane_block(k);
        for r in 0..2 {
            for col in 0..2 {
                let ratio = proportional(&got[r][col], &block[r][col])
                    .unwrap_or_else(|| panic!("block {k} entry ({r},{col})"));
                match &kappa {
                    None => kappa = Some(ratio),
                    Some(k0) => assert_eq!(*k0, ratio),
                }
            }
        }
    }
    assert_eq!(kappa, Some(Cyc8::one()));
}

#[test]
fn only_plane_pairs_have_nonzero_off_diagonal_terms() {
    let w = pencil_trivector();
    let mut nonzero = Vec::new();
    for i in 1..=6 {
        for j in 1..=6 {
            if i != j && !omega_pairing(&gl6_act(&PolyMatrix6::elementary(i, j), &w), &w).is_zero() {
                nonzero.push((i, j));
            }
        }
    }
    assert_eq!(nonzero, vec![(1, 2), (2, 1), (3, 4), (4, 3), (5, 6), (6, 5)]);
}

#[test]
fn restricted_quartic_golden() {
    let r = restricted_quartic().unwrap();
    assert_eq!(r.kappa, Cyc8::one());
    assert_eq!(r.poly, reference_cartan_quartic());
    assert_eq!(r.poly.len(), reference_cartan_quartic().len());
    let m = desmic_core::algebra::Monomial::of(&[Var::S, Var::S, Var::S, Var::S, Var::X1, Var::X2, Var::X3, Var::X4]);
    let n = desmic_core::algebra::Monomial::of(&[Var::S, Var::S, Var::T, Var::T, Var::X1, Var::X1, Var::X1, Var::X1]);
    assert_eq!(r.poly.coeff(&m) / r.poly.coeff(&n), Cyc8::from_int(4));
}

#[test]
fn two_term_pencil_quartic() {
    let w = &Trivector::e(1, 3, 5).scale(&s()) + &Trivector::e(2, 4, 6).scale(&t());
    let q = quartic_q(&w).unwrap();
    assert!(proportional(&q, &(&s().pow(2) * &t().pow(2))).is_some());
    assert!(quartic_q(&Trivector::e(1, 3, 5)).unwrap().is_zero());
}

#[test]
fn cartan_basis_is_supported_on_isotropic_triples() {
    for cj in cartan_basis() {
        for part in [&cj.part1, &cj.part2] {
            for tr in part.support() {
                assert!(desmic_core::extalg::is_omega_isotropic_triple(&tr).unwrap());
            }
        }
    }
    assert_eq!(triples().len(), 20);
}

#[test]
fn restricted_quartic_is_invariant_under_lifts() {
    let r = restricted_quartic().unwrap().poly;
    let refs = reference_generators();
    for (sigma, s_ref) in lifts().iter().zip(refs.iter()) {
        let moved = sigma.act(&generic_cartan_element()).unwrap();
        let q = quartic_q(&moved.contract(&s(), &t())).unwrap();
        let via_x = r
            .substitute(&Substitution::linear(&Var::XS, &s_ref.to_rows()))
            .unwrap();
        assert_eq!(q, via_x, "sigma{}", sigma.label);
        let inv = sigma.sl2_part.inverse().unwrap();
        let via_st = act_on_binary_form(&inv, &r).unwrap();
        assert_eq!(q, via_st, "sigma{}", sigma.label);
    }
}

#[test]
fn lifts_have_unit_determinants() {
    for l in lifts() {
        assert_eq!(l.sl2_part.determinant().unwrap(), Cyc8::one());
        assert_eq!(l.sl6_part.determinant().unwrap(), Cyc8::one());
    }
}

#[test]
fn binary_octahedral_group() {
    let g = sl2_image_group().unwrap();
    assert_eq!(g.order(), 48);
    assert!(g.contains(&ExactMatrix::identity(2).neg()));
    let mut orders: Vec<usize> = g.elements().iter().map(|e| g.element_order(e)).collect();
    orders.sort();
    orders.dedup();
    assert!(orders.iter().all(|o| [1, 2, 3, 4, 6, 8].contains(o)));
    assert!(orders.contains(&8));
    for a in g.elements() {
        let chi_a = klein_character(a).unwrap();
        assert!(chi_a == Cyc8::one() || chi_a == Cyc8::from_int(-1));
        for b in g.generators() {
            let chi_ab = klein_character(&(a * b)).unwrap();
            assert_eq!(chi_ab, &chi_a * &klein_character(b).unwrap());
        }
    }
}
