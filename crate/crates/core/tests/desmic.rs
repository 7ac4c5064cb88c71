use std::collections::{BTreeSet, HashMap};

use desmic_core::algebra::poly::{c, x};
use desmic_core::algebra::{proportional, Cyc8, ExactMatrix, MultiPoly, Substitution, Var};
use desmic_core::desmic::*;
use desmic_core::rootsys::{build_f4, is_multiple, short_long_duality, RootLength};
use proptest::prelude::*;

fn point_set(points: impl IntoIterator<Item = ProjPoint>) -> BTreeSet<ProjPoint> {
    points.into_iter().collect()
}

fn moved(set: &BTreeSet<ProjPoint>, g: &ExactMatrix) -> BTreeSet<ProjPoint> {
    set.iter().map(|p| p.transform(g).unwrap()).collect()
}

#[test]
fn grid_singularities_are_exactly_the_desmic_points() {
    let m1 = pencil_member(&PencilParams::from_ints(2, 1).unwrap());
    let m2 = pencil_member(&PencilParams::from_ints(5, -3).unwrap());
    let mut found = BTreeSet::new();
    for code in 0..625 {
        let mut v = [0i64; 4];
        let mut rest = code;
        for e in &mut v {
            *e = rest % 5 - 2;
            rest /= 5;
        }
        let Ok(p) = ProjPoint::from_ints(v) else { continue };
        if is_singular_at(&m1, &p) && is_singular_at(&m2, &p) {
            found.insert(p);
        }
    }
    assert_eq!(found, point_set(desmic_points()));
}

#[test]
fn desmic_points_and_vertices_are_disjoint_stable_sets() {
    let desmic = point_set(desmic_points());
    let vertices = point_set(tetrahedra().iter().flat_map(|t| t.vertices.clone()));
    assert_eq!(desmic.len(), 12);
    assert_eq!(vertices.len(), 12);
    assert!(desmic.is_disjoint(&vertices));
    let w = build_f4().weyl_group().unwrap();
    for g in w.elements() {
        assert_eq!(moved(&desmic, g), desmic);
        assert_eq!(moved(&vertices, g), vertices);
    }
}

#[test]
fn weyl_pullbacks_stay_in_pencil_through_short_s3() {
    let rs = build_f4();
    let w = rs.weyl_group().unwrap();
    let short = rs.orthogonal_splitting(RootLength::Short);
    let member = pencil_member(&PencilParams::from_ints(2, 1).unwrap());
    let mut by_perm: HashMap<[usize; 3], PencilParams> = HashMap::new();
    for g in w.elements() {
        let pulled = pullback(member.form(), g).unwrap();
        let params = pencil_params_of(&pulled).expect("pullback is a pencil member");
        let perm = rs.group_permutation(g, &short).unwrap();
        match by_perm.get(&perm) {
            Some(p) => assert!(p.same_point(&params), "{g}"),
            None => {
                by_perm.insert(perm, params);
            }
        }
    }
    assert_eq!(by_perm.len(), 6);
    let distinct: Vec<&PencilParams> = by_perm.values().collect();
    for (i, a) in distinct.iter().enumerate() {
        for b in &distinct[i + 1..] {
            assert!(!a.same_point(b));
        }
    }
}

#[test]
fn duality_sends_faces_to_long_roots_and_conjugate_products() {
    let rs = build_f4();
    let d = short_long_duality();
    let long = rs.orthogonal_splitting(RootLength::Long);
    let mut sub = Substitution::identity();
    for (i, &v) in Var::XS.iter().enumerate() {
        sub = sub.set(v, MultiPoly::linear(d.row(i), &Var::YS));
    }
    let conj = conjugate_products();
    let mut hit = BTreeSet::new();
    for tetra in tetrahedra() {
        let dual = d.transpose();
        let mut groups = BTreeSet::new();
        for face in &tetra.faces {
            let image = dual.apply(face);
            let r = rs
                .roots()
                .iter()
                .position(|r| r.length() == RootLength::Long && is_multiple(&image, r.coords()))
                .expect("dual face is a long root form");
            let r = if rs.is_positive(r) { r } else { rs.index_of(rs.root(r).negated().coords()).unwrap() };
            groups.insert(long.group_of(r).unwrap());
        }
        assert_eq!(groups.len(), 1, "T{} faces land in one long group", tetra.label);
        let product = tetra.face_product().substitute(&sub).unwrap();
        let k = conj
            .iter()
            .position(|q| proportional(&product, q).is_some())
            .expect("dual product is a conjugate product");
        hit.insert(k);
    }
    assert_eq!(hit.len(), 3);
}

#[test]
fn extension_to_s3_times_s3() {
    let rs = build_f4();
    let r = weyl_to_s3s3(&rs).unwrap();
    assert_eq!((r.group_order, r.image_order, r.kernel_order), (1152, 36, 32));
    assert_eq!(r.generator_images[2].0, [0, 1, 2]);
    assert_eq!(r.generator_images[3].0, [0, 1, 2]);
    assert_ne!(r.generator_images[0].0, [0, 1, 2]);
    assert_ne!(r.generator_images[1].0, [0, 1, 2]);
}

#[test]
fn t1_stabilizer() {
    let rs = build_f4();
    let r = tetrahedron_stabilizer(&rs, &tetrahedra()[0]).unwrap();
    assert_eq!(r.matrix_order, 384);
    assert_eq!(r.projective_order, 192);
    assert!(r.all_signed_permutations);
    assert_eq!(r.long_image_order, 6);
}

#[test]
fn macdonald_spans() {
    let rs = build_f4();
    let long = macdonald_span(&rs, RootLength::Long).unwrap();
    let short = macdonald_span(&rs, RootLength::Short).unwrap();
    assert_eq!(long.dimension, 2);
    assert_eq!(short.dimension, 2);
    assert!(long.translates_in_span && short.translates_in_span);
    assert_eq!(long.relation, [1, -1, 1].map(Cyc8::from_int));
    let sixteenth = Cyc8::from_int(16).inverse().unwrap();
    assert_eq!(short.relation, [Cyc8::one(), -&sixteenth, sixteenth]);

    // Independent oracle built from the displayed linear forms.
    let lin = |e: [i64; 4]| -> MultiPoly { (0..4).map(|k| &c(e[k]) * &x(k + 1)).sum() };
    let prod = |faces: [[i64; 4]; 4]| -> MultiPoly { faces.iter().map(|&f| lin(f)).product() };
    let p1 = prod([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
    let p2 = prod([[1, 1, 1, 1], [1, -1, -1, 1], [1, -1, 1, -1], [1, 1, -1, -1]]);
    let p3 = prod([[1, -1, -1, -1], [1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]]);
    assert!((&(&(&c(16) * &p1) - &p2) + &p3).is_zero());
    let q = |a: [i64; 4], b: [i64; 4], e: [i64; 4], f: [i64; 4]| prod([a, b, e, f]);
    let q1 = q([1, -1, 0, 0], [1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 1]);
    let q2 = q([1, 0, -1, 0], [1, 0, 1, 0], [0, 1, 0, -1], [0, 1, 0, 1]);
    let q3 = q([1, 0, 0, -1], [1, 0, 0, 1], [0, 1, -1, 0], [0, 1, 1, 0]);
    assert!((&(&q1 - &q2) + &q3).is_zero());
    for (k, p) in [&p1, &p2, &p3].into_iter().enumerate() {
        assert!(proportional(&short.products[k], p).is_some());
    }
}

#[test]
fn full_group_translates_stay_in_span() {
    let rs = build_f4();
    let span = macdonald_span(&rs, RootLength::Short).unwrap();
    let w = rs.weyl_group().unwrap();
    for g in w.elements().iter().step_by(37) {
        assert!(span.contains(&pullback(&span.products[1], g).unwrap()));
    }
}

#[test]
fn reye_configuration() {
    let lines = base_locus_lines();
    assert_eq!(lines.len(), 16);
    for params in [(1, 0), (0, 1), (3, -7)] {
        let member = pencil_member(&PencilParams::from_ints(params.0, params.1).unwrap());
        assert!(lines.iter().all(|l| l.lies_on(member.form()).unwrap()));
    }
    let reye = reye_incidence();
    assert!(reye.is_configuration(3, 4));
    assert_eq!(reye.incidences(), 48);
}

#[test]
fn edges_of_one_tetrahedron_meet_opposite_edges_of_another() {
    let meetings = edge_meetings();
    assert_eq!(meetings.len(), 36);
    assert!(meetings.iter().all(|m| m.meets_opposite_pair()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn desmic_points_singular_on_random_members(a in -40i64..40, b in -40i64..40) {
        prop_assume!(a != 0 || b != 0);
        let member = pencil_member(&PencilParams::from_ints(a, b).unwrap());
        for p in desmic_points() {
            prop_assert!(is_singular_at(&member, &p));
        }
    }

    #[test]
    fn conjugate_forms_agree_up_to_sign(a in -20i64..20, b in -20i64..20) {
        let cp = ConjugateParams::new(Cyc8::from_int(a), Cyc8::from_int(b), Cyc8::from_int(-a - b)).unwrap();
        let sum = &conjugate_member(&cp) + &conjugate_member_expanded(&cp);
        prop_assert!(sum.is_zero());
    }
}
