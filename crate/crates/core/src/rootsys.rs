//! The F4 root system in the ε-basis, its positive and simple roots,
//! orthogonal A₁⁴ splittings, reflections and the Weyl group.
//!
//! Roots are `±εᵢ±εⱼ` (long, norm² 2), `±εₖ` and `½(±ε₁±ε₂±ε₃±ε₄)` (short,
//! norm² 1). The inner product is the standard Euclidean one.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::algebra::rational::{int, rat};
use crate::algebra::{group_closure, Cyc8, ExactMatrix, MatrixGroup, Rational};
use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum RootLength {
    Long,
    Short,
}

impl RootLength {
    pub fn other(self) -> Self {
        match self {
            RootLength::Long => RootLength::Short,
            RootLength::Short => RootLength::Long,
        }
    }
}

impl fmt::Display for RootLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootLength::Long => "long",
            RootLength::Short => "short",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootVec {
    coords: [Cyc8; 4],
    length: RootLength,
}

impl RootVec {
    /// Builds a root from rational coordinates, classifying it by norm.
    pub fn from_rationals(coords: [Rational; 4]) -> Option<Self> {
        let norm: Rational = coords.iter().map(|c| c * c).sum();
        let length = if norm == int(2) {
            RootLength::Long
        } else if norm == int(1) {
            RootLength::Short
        } else {
            return None;
        };
        Some(RootVec {
            coords: coords.map(Cyc8::from_rational),
            length,
        })
    }

    pub fn coords(&self) -> &[Cyc8; 4] {
        &self.coords
    }

    pub fn rational_coords(&self) -> [Rational; 4] {
        std::array::from_fn(|k| self.coords[k].to_rational().expect("roots are rational"))
    }

    pub fn length(&self) -> RootLength {
        self.length
    }

    pub fn norm_squared(&self) -> Cyc8 {
        dot(&self.coords, &self.coords)
    }

    pub fn negated(&self) -> RootVec {
        RootVec {
            coords: self.coords.clone().map(|c| -c),
            length: self.length,
        }
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rational_coords();
        let half = r.iter().any(|c| !c.is_integer());
        let scaled: Vec<Rational> = if half {
            r.iter().map(|c| c * int(2)).collect()
        } else {
            r.to_vec()
        };
        let mut body = String::new();
        for (k, c) in scaled.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                body.push('-');
            } else if !body.is_empty() {
                body.push('+');
            }
            body.push_str(&format!("e{}", k + 1));
        }
        if half {
            write!(f, "½({body})")
        } else {
            write!(f, "{body}")
        }
    }
}

pub fn dot(a: &[Cyc8], b: &[Cyc8]) -> Cyc8 {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// A linear form ℓ = Σ ℓᵢ εᵢ^∨ that is nonzero on every root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PositivityForm {
    weights: [Rational; 4],
}

impl PositivityForm {
    pub fn new(weights: [Rational; 4]) -> Result<Self, Error> {
        let form = PositivityForm { weights };
        for root in all_roots() {
            if form.evaluate(&root).is_zero() {
                return Err(Error::NonGenericForm(root.to_string()));
            }
        }
        Ok(form)
    }

    pub fn weights(&self) -> &[Rational; 4] {
        &self.weights
    }

    pub fn evaluate(&self, root: &RootVec) -> Rational {
        self.weights
            .iter()
            .zip(root.rational_coords())
            .map(|(w, c)| w * c)
            .sum()
    }
}

impl Default for PositivityForm {
    /// ℓ = (1000, 100, 10, 1), a concrete choice of ℓ₁ ≫ ℓ₂ ≫ ℓ₃ ≫ ℓ₄ ≫ 1.
    fn default() -> Self {
        PositivityForm::new([1000, 100, 10, 1].map(int)).expect("default form is generic")
    }
}

/// The 48 roots in a fixed order: long `±εᵢ±εⱼ`, then `±εₖ`, then the
/// half-sums with sign patterns enumerated `+` before `−`.
fn all_roots() -> Vec<RootVec> {
    let mut roots = Vec::with_capacity(48);
    for i in 0..4 {
        for j in i + 1..4 {
            for (a, b) in [(1, -1), (1, 1), (-1, 1), (-1, -1)] {
                let mut c: [Rational; 4] = Default::default();
                c[i] = int(a);
                c[j] = int(b);
                roots.push(RootVec::from_rationals(c).unwrap());
            }
        }
    }
    for k in 0..4 {
        for sign in [1, -1] {
            let mut c: [Rational; 4] = Default::default();
            c[k] = int(sign);
            roots.push(RootVec::from_rationals(c).unwrap());
        }
    }
    for first in [1, -1] {
        for pattern in 0..8u8 {
            let signs = [
                first,
                if pattern & 4 == 0 { first } else { -first },
                if pattern & 2 == 0 { first } else { -first },
                if pattern & 1 == 0 { first } else { -first },
            ];
            roots.push(RootVec::from_rationals(signs.map(|s| rat(s, 2))).unwrap());
        }
    }
    roots
}

#[derive(Clone, Debug)]
pub struct RootSystemF4 {
    roots: Vec<RootVec>,
    form: PositivityForm,
    positives: Vec<usize>,
    simples: Vec<usize>,
}

/// Root system with the default positivity form.
pub fn build_f4() -> RootSystemF4 {
    RootSystemF4::new(PositivityForm::default())
}

impl RootSystemF4 {
    pub fn new(form: PositivityForm) -> Self {
        let roots = all_roots();
        let positives = positive_roots(&roots, &form);
        let simples = simple_roots(&roots, &positives);
        RootSystemF4 {
            roots,
            form,
            positives,
            simples,
        }
    }

    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn root(&self, index: usize) -> &RootVec {
        &self.roots[index]
    }

    pub fn form(&self) -> &PositivityForm {
        &self.form
    }

    pub fn positives(&self) -> &[usize] {
        &self.positives
    }

    pub fn is_positive(&self, index: usize) -> bool {
        self.positives.contains(&index)
    }

    /// Indices of the simple roots, ordered along the Dynkin chain starting
    /// from its long end.
    pub fn simples(&self) -> &[usize] {
        &self.simples
    }

    pub fn simple_roots(&self) -> Vec<RootVec> {
        self.simples.iter().map(|&i| self.roots[i].clone()).collect()
    }

    pub fn index_of(&self, coords: &[Cyc8]) -> Option<usize> {
        self.roots.iter().position(|r| r.coords[..] == *coords)
    }

    /// Index of the root equal to `coords` up to sign.
    pub fn index_up_to_sign(&self, coords: &[Cyc8]) -> Option<usize> {
        let neg: Vec<Cyc8> = coords.iter().map(|c| -c).collect();
        self.index_of(coords).or_else(|| self.index_of(&neg))
    }

    pub fn count(&self, length: RootLength) -> usize {
        self.roots.iter().filter(|r| r.length == length).count()
    }

    pub fn positives_of(&self, length: RootLength) -> Vec<usize> {
        self.positives
            .iter()
            .copied()
            .filter(|&i| self.roots[i].length == length)
            .collect()
    }

    /// Number of positive long and short roots orthogonal to `root`.
    pub fn orthogonality_profile(&self, root: usize) -> OrthogonalityProfile {
        let r = &self.roots[root].coords;
        let mut profile = OrthogonalityProfile { long: 0, short: 0 };
        for &p in &self.positives {
            if dot(r, &self.roots[p].coords).is_zero() {
                match self.roots[p].length {
                    RootLength::Long => profile.long += 1,
                    RootLength::Short => profile.short += 1,
                }
            }
        }
        profile
    }

    /// Every partition of the twelve positive roots of `length` into three
    /// pairwise-orthogonal quadruples.
    pub fn enumerate_splittings(&self, length: RootLength) -> Vec<OrthogonalSplitting> {
        let pos = self.positives_of(length);
        let orth = |a: usize, b: usize| dot(&self.roots[a].coords, &self.roots[b].coords).is_zero();
        // 4-cliques of the orthogonality graph.
        let mut cliques: Vec<[usize; 4]> = Vec::new();
        let n = pos.len();
        for a in 0..n {
            for b in a + 1..n {
                if !orth(pos[a], pos[b]) {
                    continue;
                }
                for c in b + 1..n {
                    if !orth(pos[a], pos[c]) || !orth(pos[b], pos[c]) {
                        continue;
                    }
                    for d in c + 1..n {
                        if orth(pos[a], pos[d]) && orth(pos[b], pos[d]) && orth(pos[c], pos[d]) {
                            cliques.push([pos[a], pos[b], pos[c], pos[d]]);
                        }
                    }
                }
            }
        }
        let disjoint = |x: &[usize; 4], y: &[usize; 4]| x.iter().all(|i| !y.contains(i));
        let mut found = Vec::new();
        for i in 0..cliques.len() {
            for j in i + 1..cliques.len() {
                if !disjoint(&cliques[i], &cliques[j]) {
                    continue;
                }
                for k in j + 1..cliques.len() {
                    if disjoint(&cliques[i], &cliques[k]) && disjoint(&cliques[j], &cliques[k]) {
                        found.push(OrthogonalSplitting::new(
                            length,
                            [cliques[i], cliques[j], cliques[k]],
                        ));
                    }
                }
            }
        }
        found
    }

    /// The orthogonal splitting of the positive roots of `length`. There is
    /// exactly one; `enumerate_splittings` is the exhaustive check.
    pub fn orthogonal_splitting(&self, length: RootLength) -> OrthogonalSplitting {
        self.enumerate_splittings(length)
            .into_iter()
            .next()
            .expect("F4 positives admit an orthogonal splitting")
    }

    /// Closure of the reflections in the four simple roots.
    pub fn weyl_group(&self) -> Result<MatrixGroup, Error> {
        let generators = self.simple_reflections()?;
        group_closure(&generators)
    }

    pub fn simple_reflections(&self) -> Result<Vec<ExactMatrix>, Error> {
        self.simples
            .iter()
            .map(|&i| reflection(&self.roots[i].coords))
            .collect()
    }

    /// The matrix maps the root set onto itself.
    pub fn preserves_roots(&self, g: &ExactMatrix) -> bool {
        self.roots
            .iter()
            .all(|r| self.index_of(&g.apply(&r.coords)).is_some())
    }

    /// The permutation of splitting groups induced by `g`, if `g` permutes
    /// them at all. `perm[k]` is the group that group `k` is sent to.
    pub fn group_permutation(
        &self,
        g: &ExactMatrix,
        splitting: &OrthogonalSplitting,
    ) -> Option<[usize; 3]> {
        let mut perm = [usize::MAX; 3];
        for (k, group) in splitting.groups.iter().enumerate() {
            let mut target = None;
            for &root in group {
                let image = self.index_up_to_sign(&g.apply(&self.roots[root].coords))?;
                let image = if self.is_positive(image) {
                    image
                } else {
                    self.index_of(&self.roots[image].negated().coords)?
                };
                let dest = splitting.group_of(image)?;
                match target {
                    None => target = Some(dest),
                    Some(t) if t != dest => return None,
                    _ => {}
                }
            }
            perm[k] = target?;
        }
        let mut sorted = perm;
        sorted.sort();
        (sorted == [0, 1, 2]).then_some(perm)
    }
}

fn positive_roots(roots: &[RootVec], form: &PositivityForm) -> Vec<usize> {
    (0..roots.len())
        .filter(|&i| form.evaluate(&roots[i]).is_positive())
        .collect()
}

/// Positive roots that are not the sum of two positive roots, ordered along
/// the Dynkin chain from its long end.
fn simple_roots(roots: &[RootVec], positives: &[usize]) -> Vec<usize> {
    let is_positive_root = |c: &[Cyc8]| positives.iter().any(|&p| roots[p].coords[..] == *c);
    let simples: Vec<usize> = positives
        .iter()
        .copied()
        .filter(|&p| {
            !positives.iter().any(|&a| {
                let rest: Vec<Cyc8> = roots[p]
                    .coords
                    .iter()
                    .zip(&roots[a].coords)
                    .map(|(x, y)| x - y)
                    .collect();
                is_positive_root(&rest)
            })
        })
        .collect();
    let linked = |a: usize, b: usize| !dot(&roots[a].coords, &roots[b].coords).is_zero();
    let degree = |a: usize| simples.iter().filter(|&&b| b != a && linked(a, b)).count();
    let Some(&start) = simples
        .iter()
        .find(|&&a| degree(a) == 1 && roots[a].length == RootLength::Long)
    else {
        return simples;
    };
    let mut chain = vec![start];
    while chain.len() < simples.len() {
        let last = *chain.last().unwrap();
        match simples
            .iter()
            .find(|&&b| !chain.contains(&b) && linked(last, b))
        {
            Some(&next) => chain.push(next),
            None => return simples,
        }
    }
    chain
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrthogonalityProfile {
    pub long: usize,
    pub short: usize,
}

impl OrthogonalityProfile {
    /// (same-length count, other-length count) for a root of `length`.
    pub fn own_other(&self, length: RootLength) -> (usize, usize) {
        match length {
            RootLength::Long => (self.long, self.short),
            RootLength::Short => (self.short, self.long),
        }
    }
}

/// Three pairwise-orthogonal quadruples partitioning the twelve positive
/// roots of one length. Groups are sorted internally and by first index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrthogonalSplitting {
    pub length: RootLength,
    pub groups: [[usize; 4]; 3],
}

impl OrthogonalSplitting {
    fn new(length: RootLength, mut groups: [[usize; 4]; 3]) -> Self {
        for g in groups.iter_mut() {
            g.sort();
        }
        groups.sort();
        OrthogonalSplitting { length, groups }
    }

    pub fn group_of(&self, root: usize) -> Option<usize> {
        self.groups.iter().position(|g| g.contains(&root))
    }
}

/// Hyperplane reflection v ↦ v − 2⟨v,α⟩/⟨α,α⟩ α.
pub fn reflection(root: &[Cyc8]) -> Result<ExactMatrix, Error> {
    let norm = dot(root, root);
    if norm.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = root.len();
    let factor = &Cyc8::from_int(2) / &norm;
    let mut m = ExactMatrix::identity(n);
    for r in 0..n {
        for c in 0..n {
            let delta = &(&factor * &root[r]) * &root[c];
            let v = m.get(r, c) - &delta;
            m.set(r, c, v);
        }
    }
    Ok(m)
}

/// The orthogonal matrix (1/√2)·[[1,−1,0,0],[1,1,0,0],[0,0,1,−1],[0,0,1,1]]
/// exchanging long and short root directions.
pub fn short_long_duality() -> ExactMatrix {
    ExactMatrix::from_int_rows(
        &[&[1, -1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, -1], &[0, 0, 1, 1]],
        &Cyc8::inv_sqrt2(),
    )
}

/// Some nonzero multiple of `v` equals `w`.
pub fn is_multiple(v: &[Cyc8], w: &[Cyc8]) -> bool {
    let Some(k) = w.iter().position(|e| !e.is_zero()) else {
        return false;
    };
    if v[k].is_zero() {
        return false;
    }
    let lambda = &w[k] / &v[k];
    v.iter().zip(w).all(|(a, b)| &(a * &lambda) == b)
}

/// The matrices s₁…s₄ as printed with the little Weyl group generators.
pub fn reference_generators() -> [ExactMatrix; 4] {
    let one = Cyc8::one();
    [
        ExactMatrix::from_int_rows(
            &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]],
            &one,
        ),
        ExactMatrix::from_int_rows(
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]],
            &one,
        ),
        ExactMatrix::diagonal(&[1, 1, 1, -1].map(Cyc8::from_int)),
        ExactMatrix::from_int_rows(
            &[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]],
            &Cyc8::from_rational(rat(1, 2)),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(rs: &RootSystemF4, c: [i64; 4], den: i64) -> usize {
        let coords = c.map(|n| Cyc8::from_rational(rat(n, den)));
        rs.index_of(&coords).expect("is a root")
    }

    #[test]
    fn counts() {
        let rs = build_f4();
        assert_eq!(rs.roots().len(), 48);
        assert_eq!(rs.count(RootLength::Long), 24);
        assert_eq!(rs.count(RootLength::Short), 24);
        assert_eq!(rs.positives_of(RootLength::Long).len(), 12);
        assert_eq!(rs.positives_of(RootLength::Short).len(), 12);
    }

    #[test]
    fn norms_and_negation() {
        let rs = build_f4();
        assert_eq!(rs.root(root(&rs, [1, -1, 0, 0], 1)).norm_squared(), Cyc8::from_int(2));
        assert_eq!(rs.root(root(&rs, [1, 0, 0, 0], 1)).norm_squared(), Cyc8::one());
        let half = root(&rs, [1, 1, 1, 1], 2);
        assert_eq!(rs.root(half).length(), RootLength::Short);
        for r in rs.roots() {
            assert!(rs.index_of(&r.negated().coords).is_some());
        }
    }

    #[test]
    fn positivity_examples() {
        let rs = build_f4();
        assert!(rs.is_positive(root(&rs, [1, -1, 0, 0], 1)));
        assert!(!rs.is_positive(root(&rs, [0, 0, 0, -1], 1)));
        for (i, r) in rs.roots().iter().enumerate() {
            let neg = rs.index_of(&r.negated().coords).unwrap();
            assert_ne!(rs.is_positive(i), rs.is_positive(neg));
        }
    }

    #[test]
    fn non_generic_form_rejected() {
        let err = PositivityForm::new([1, 1, 0, 0].map(int)).unwrap_err();
        assert!(matches!(err, Error::NonGenericForm(_)));
    }

    #[test]
    fn positives_depend_on_sign_pattern_only() {
        let a = build_f4();
        let b = RootSystemF4::new(PositivityForm::new([97, 13, 5, 1].map(int)).unwrap());
        assert_eq!(a.positives(), b.positives());
        assert_eq!(a.simples(), b.simples());
    }

    #[test]
    fn simple_roots_default() {
        let rs = build_f4();
        let expected = [
            root(&rs, [0, 1, -1, 0], 1),
            root(&rs, [0, 0, 1, -1], 1),
            root(&rs, [0, 0, 0, 1], 1),
            root(&rs, [1, -1, -1, -1], 2),
        ];
        assert_eq!(rs.simples(), &expected);
    }

    #[test]
    fn orthogonality_examples() {
        let rs = build_f4();
        let p = rs.orthogonality_profile(root(&rs, [1, -1, 0, 0], 1));
        assert_eq!(p, OrthogonalityProfile { long: 3, short: 6 });
        let p = rs.orthogonality_profile(root(&rs, [1, 0, 0, 0], 1));
        assert_eq!(p, OrthogonalityProfile { long: 6, short: 3 });
        assert_eq!(p.own_other(RootLength::Short), (3, 6));
    }

    #[test]
    fn reflections_match_reference_generators() {
        let rs = build_f4();
        assert_eq!(rs.simple_reflections().unwrap(), reference_generators().to_vec());
    }

    #[test]
    fn reflection_of_zero_fails() {
        assert_eq!(reflection(&vec![Cyc8::zero(); 4]), Err(Error::ZeroVector));
    }

    #[test]
    fn reflections_are_involutive_orthogonal_and_preserve_roots() {
        let rs = build_f4();
        for r in rs.roots() {
            let m = reflection(&r.coords).unwrap();
            assert_eq!(&m * &m, ExactMatrix::identity(4));
            assert!(m.is_orthogonal());
            assert!(rs.preserves_roots(&m));
        }
    }

    #[test]
    fn duality_examples() {
        let m = short_long_duality();
        assert!(m.is_orthogonal());
        let h = Cyc8::inv_sqrt2();
        let e1 = [1, 0, 0, 0].map(Cyc8::from_int);
        assert_eq!(m.apply(&e1), vec![h.clone(), h.clone(), Cyc8::zero(), Cyc8::zero()]);
        let e12 = [1, -1, 0, 0].map(Cyc8::from_int);
        assert_eq!(
            m.apply(&e12),
            vec![Cyc8::sqrt2(), Cyc8::zero(), Cyc8::zero(), Cyc8::zero()]
        );
    }

    #[test]
    fn duality_exchanges_lengths() {
        let rs = build_f4();
        let m = short_long_duality();
        for r in rs.roots() {
            let image = m.apply(&r.coords);
            let hit = rs
                .roots()
                .iter()
                .find(|s| is_multiple(&s.coords, &image))
                .expect("image is a multiple of a root");
            assert_eq!(hit.length(), r.length().other());
        }
    }
}
