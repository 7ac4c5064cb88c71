//! Λ³ℂ⁶ with polynomial coefficients, the volume pairing Ω, the 𝔤𝔩₆ and
//! SL₆ actions, and the Cartan subspace of ℂ²⊗Λ³ℂ⁶.
//!
//! Indices are 1-based in the public API to match e₁…e₆. A trivector is
//! stored densely over the 20 sorted triples i<j<k in lexicographic order,
//! and Ω(u,v) is the coefficient of e₁₂₃₄₅₆ in u∧v.

use std::fmt;
use std::ops::{Add, Sub};
use std::sync::OnceLock;

use crate::algebra::poly::{s, t, x};
use crate::algebra::{Cyc8, ExactMatrix, MultiPoly};
use crate::error::Error;

pub const DIM: usize = 20;

pub type Triple = [usize; 3];

struct Tables {
    triples: [Triple; DIM],
    /// Index of the complementary triple and the sign of (T, complement).
    complement: [(usize, i64); DIM],
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut triples = Vec::with_capacity(DIM);
        for i in 1..=6 {
            for j in i + 1..=6 {
                for k in j + 1..=6 {
                    triples.push([i, j, k]);
                }
            }
        }
        let triples: [Triple; DIM] = triples.try_into().unwrap();
        let complement = std::array::from_fn(|a| {
            let t = triples[a];
            let rest: Vec<usize> = (1..=6).filter(|i| !t.contains(i)).collect();
            let b = triples.iter().position(|u| u[..] == rest[..]).unwrap();
            let perm: Vec<usize> = t.iter().chain(&rest).copied().collect();
            (b, permutation_sign(&perm))
        });
        Tables {
            triples,
            complement,
        }
    })
}

/// Sign of the permutation given as a sequence of distinct values.
fn permutation_sign(seq: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn triples() -> &'static [Triple; DIM] {
    &tables().triples
}

pub fn triple_index(t: Triple) -> Option<usize> {
    tables().triples.iter().position(|u| *u == t)
}

/// e_a∧e_b∧e_c as (sign, sorted index), or `None` if an index repeats.
pub fn normalize(a: usize, b: usize, c: usize) -> Option<(i64, usize)> {
    if a == b || b == c || a == c {
        return None;
    }
    let mut sorted = [a, b, c];
    sorted.sort();
    let sign = permutation_sign(&[a, b, c]);
    Some((sign, triple_index(sorted)?))
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Trivector {
    coeffs: [MultiPoly; DIM],
}

impl Trivector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(coeffs: [MultiPoly; DIM]) -> Self {
        Trivector { coeffs }
    }

    /// `coeff · e_{ijk}` for any ordering of distinct i, j, k in 1..=6.
    pub fn basis(i: usize, j: usize, k: usize, coeff: MultiPoly) -> Result<Self, Error> {
        if ![i, j, k].iter().all(|n| (1..=6).contains(n)) {
            return Err(Error::MalformedIndices(format!("{{{i},{j},{k}}}")));
        }
        let (sign, idx) =
            normalize(i, j, k).ok_or_else(|| Error::MalformedIndices(format!("{{{i},{j},{k}}}")))?;
        let mut v = Trivector::zero();
        v.coeffs[idx] = coeff.scale(&Cyc8::from_int(sign));
        Ok(v)
    }

    /// e_{ijk} with unit coefficient; panics on malformed indices.
    pub fn e(i: usize, j: usize, k: usize) -> Self {
        Self::basis(i, j, k, MultiPoly::one()).expect("valid triple")
    }

    /// u∧v∧w for vectors given by 6 polynomial coordinates each.
    pub fn decomposable(u: &[MultiPoly; 6], v: &[MultiPoly; 6], w: &[MultiPoly; 6]) -> Self {
        let mut out = Trivector::zero();
        for (idx, &[a, b, c]) in triples().iter().enumerate() {
            let (a, b, c) = (a - 1, b - 1, c - 1);
            // 3×3 minor on rows a, b, c
            let minor = &(&(&u[a] * &(&v[b] * &w[c] - &v[c] * &w[b]))
                - &(&u[b] * &(&v[a] * &w[c] - &v[c] * &w[a])))
                + &(&u[c] * &(&v[a] * &w[b] - &v[b] * &w[a]));
            out.coeffs[idx] = minor;
        }
        out
    }

    pub fn coeffs(&self) -> &[MultiPoly; DIM] {
        &self.coeffs
    }

    pub fn coeff(&self, t: Triple) -> &MultiPoly {
        &self.coeffs[triple_index(t).expect("sorted triple")]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        Trivector {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] * c),
        }
    }

    /// Triples with a nonzero coefficient.
    pub fn support(&self) -> Vec<Triple> {
        (0..DIM)
            .filter(|&k| !self.coeffs[k].is_zero())
            .map(|k| triples()[k])
            .collect()
    }
}

impl<'a> Add<&'a Trivector> for &'a Trivector {
    type Output = Trivector;
    fn add(self, rhs: &'a Trivector) -> Trivector {
        Trivector {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] + &rhs.coeffs[k]),
        }
    }
}

impl<'a> Sub<&'a Trivector> for &'a Trivector {
    type Output = Trivector;
    fn sub(self, rhs: &'a Trivector) -> Trivector {
        Trivector {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] - &rhs.coeffs[k]),
        }
    }
}

impl fmt::Display for Trivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let [a, b, d] = triples()[k];
            write!(f, "({c})e{a}{b}{d}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Coefficient of e₁₂₃₄₅₆ in u∧v.
pub fn omega_pairing(u: &Trivector, v: &Trivector) -> MultiPoly {
    let tab = tables();
    let mut acc = MultiPoly::zero();
    for a in 0..DIM {
        if u.coeffs[a].is_zero() {
            continue;
        }
        let (b, sign) = tab.complement[a];
        if v.coeffs[b].is_zero() {
            continue;
        }
        let term = (&u.coeffs[a] * &v.coeffs[b]).scale(&Cyc8::from_int(sign));
        acc = &acc + &term;
    }
    acc
}

/// A 6×6 matrix with polynomial entries acting on ℂ⁶; column j is the image
/// of e_{j+1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix6 {
    entries: [[MultiPoly; 6]; 6],
}

impl PolyMatrix6 {
    pub fn zero() -> Self {
        PolyMatrix6 {
            entries: Default::default(),
        }
    }

    pub fn from_exact(m: &ExactMatrix) -> Self {
        assert!(m.rows() == 6 && m.cols() == 6, "expected a 6x6 matrix");
        PolyMatrix6 {
            entries: std::array::from_fn(|r| {
                std::array::from_fn(|c| MultiPoly::constant(m.get(r, c).clone()))
            }),
        }
    }

    /// The elementary matrix e_i^∨⊗e_j (1-based), sending e_i to e_j.
    pub fn elementary(i: usize, j: usize) -> Self {
        let mut m = Self::zero();
        m.entries[j - 1][i - 1] = MultiPoly::one();
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: MultiPoly) {
        self.entries[r][c] = value;
    }

    pub fn trace(&self) -> MultiPoly {
        (0..6).map(|k| self.entries[k][k].clone()).sum()
    }

    pub fn mul(&self, rhs: &PolyMatrix6) -> PolyMatrix6 {
        let mut out = Self::zero();
        for r in 0..6 {
            for c in 0..6 {
                out.entries[r][c] = (0..6)
                    .filter(|&k| !self.entries[r][k].is_zero() && !rhs.entries[k][c].is_zero())
                    .map(|k| &self.entries[r][k] * &rhs.entries[k][c])
                    .sum();
            }
        }
        out
    }

    pub fn sub(&self, rhs: &PolyMatrix6) -> PolyMatrix6 {
        PolyMatrix6 {
            entries: std::array::from_fn(|r| {
                std::array::from_fn(|c| &self.entries[r][c] - &rhs.entries[r][c])
            }),
        }
    }
}

/// Derivation action X·(a∧b∧c) = Xa∧b∧c + a∧Xb∧c + a∧b∧Xc.
pub fn gl6_act(m: &PolyMatrix6, u: &Trivector) -> Trivector {
    let mut out = Trivector::zero();
    for (idx, triple) in triples().iter().enumerate() {
        let coeff = &u.coeffs[idx];
        if coeff.is_zero() {
            continue;
        }
        for pos in 0..3 {
            let col = triple[pos] - 1;
            for row in 0..6 {
                let entry = &m.entries[row][col];
                if entry.is_zero() {
                    continue;
                }
                let mut replaced = *triple;
                replaced[pos] = row + 1;
                if let Some((sign, target)) = normalize(replaced[0], replaced[1], replaced[2]) {
                    let term = (entry * coeff).scale(&Cyc8::from_int(sign));
                    out.coeffs[target] = &out.coeffs[target] + &term;
                }
            }
        }
    }
    out
}

/// Λ³h acting on u, computed from the images h·e_i of the basis vectors.
pub fn wedge3_apply(h: &ExactMatrix, u: &Trivector) -> Trivector {
    assert!(h.rows() == 6 && h.cols() == 6, "expected a 6x6 matrix");
    let mut out = Trivector::zero();
    for (idx, &[i, j, k]) in triples().iter().enumerate() {
        let coeff = &u.coeffs[idx];
        if coeff.is_zero() {
            continue;
        }
        for a in 0..6 {
            let ha = h.get(a, i - 1);
            if ha.is_zero() {
                continue;
            }
            for b in 0..6 {
                let hb = h.get(b, j - 1);
                if hb.is_zero() || b == a {
                    continue;
                }
                for c in 0..6 {
                    let hc = h.get(c, k - 1);
                    if hc.is_zero() {
                        continue;
                    }
                    if let Some((sign, target)) = normalize(a + 1, b + 1, c + 1) {
                        let scalar = &(&(ha * hb) * hc) * &Cyc8::from_int(sign);
                        out.coeffs[target] = &out.coeffs[target] + &coeff.scale(&scalar);
                    }
                }
            }
        }
    }
    out
}

/// The induced 20×20 matrix of Λ³h (entries are 3×3 minors of h).
pub fn wedge3_matrix(h: &ExactMatrix) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(DIM, DIM);
    for (col, &[i, j, k]) in triples().iter().enumerate() {
        let image = wedge3_apply(h, &Trivector::e(i, j, k));
        for row in 0..DIM {
            let c = &image.coeffs[row];
            if !c.is_zero() {
                m.set(row, col, c.coeff(&crate::algebra::Monomial::one()));
            }
        }
    }
    m
}

/// f₁⊗part1 + f₂⊗part2 in ℂ²⊗Λ³ℂ⁶.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PencilTrivector {
    pub part1: Trivector,
    pub part2: Trivector,
}

impl PencilTrivector {
    pub fn new(part1: Trivector, part2: Trivector) -> Self {
        PencilTrivector { part1, part2 }
    }

    /// Pairs the ℂ² factor with (s₀, t₀): s₀·part1 + t₀·part2.
    pub fn contract(&self, s0: &MultiPoly, t0: &MultiPoly) -> Trivector {
        &self.part1.scale(s0) + &self.part2.scale(t0)
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        PencilTrivector::new(self.part1.scale(c), self.part2.scale(c))
    }

    pub fn add(&self, other: &PencilTrivector) -> Self {
        PencilTrivector::new(&self.part1 + &other.part1, &self.part2 + &other.part2)
    }

    pub fn is_zero(&self) -> bool {
        self.part1.is_zero() && self.part2.is_zero()
    }
}

/// The action of (g, h) ∈ SL₂×SL₆. The ℂ² factor carries the pencil
/// coordinates (s, t), so g acts on f₁, f₂ through g⁻ᵀ; on the contracted
/// trivector this reads (g, h)·w(s,t) = Λ³h·w(g⁻¹·(s,t)).
pub fn group_act(
    g: &ExactMatrix,
    h: &ExactMatrix,
    v: &PencilTrivector,
) -> Result<PencilTrivector, Error> {
    if g.rows() != 2 || g.cols() != 2 || h.rows() != 6 || h.cols() != 6 {
        return Err(Error::Dimension("expected a 2x2 and a 6x6 matrix".into()));
    }
    if h.determinant()?.is_zero() {
        return Err(Error::Singular);
    }
    let a = g.inverse()?;
    let p1 = wedge3_apply(h, &v.part1);
    let p2 = wedge3_apply(h, &v.part2);
    let k = |r: usize, c: usize| MultiPoly::constant(a.get(r, c).clone());
    Ok(PencilTrivector::new(
        &p1.scale(&k(0, 0)) + &p2.scale(&k(1, 0)),
        &p1.scale(&k(0, 1)) + &p2.scale(&k(1, 1)),
    ))
}

/// The Cartan basis c₁…c₄.
pub fn cartan_basis() -> [PencilTrivector; 4] {
    let pairs = [
        ([1, 3, 5], [2, 4, 6]),
        ([1, 4, 6], [2, 3, 5]),
        ([2, 4, 5], [1, 3, 6]),
        ([2, 3, 6], [1, 4, 5]),
    ];
    pairs.map(|(a, b)| {
        PencilTrivector::new(Trivector::e(a[0], a[1], a[2]), Trivector::e(b[0], b[1], b[2]))
    })
}

/// Σ xⱼ cⱼ with symbolic x₁…x₄.
pub fn generic_cartan_element() -> PencilTrivector {
    cartan_basis()
        .iter()
        .enumerate()
        .fold(PencilTrivector::default(), |acc, (j, c)| {
            acc.add(&c.scale(&x(j + 1)))
        })
}

/// Σ xⱼ cⱼ at a given point x.
pub fn cartan_element_at(point: &[Cyc8; 4]) -> PencilTrivector {
    cartan_basis()
        .iter()
        .zip(point)
        .fold(PencilTrivector::default(), |acc, (c, xj)| {
            acc.add(&c.scale(&MultiPoly::constant(xj.clone())))
        })
}

/// w(s,t,x) = s(x₁e₁₃₅+x₂e₁₄₆+x₃e₂₄₅+x₄e₂₃₆) + t(x₁e₂₄₆+x₂e₂₃₅+x₃e₁₃₆+x₄e₁₄₅).
pub fn pencil_trivector() -> Trivector {
    generic_cartan_element().contract(&s(), &t())
}

/// ω = e₁^∨∧e₂^∨ + e₃^∨∧e₄^∨ + e₅^∨∧e₆^∨ as a Gram matrix.
pub struct SymplecticForm6;

impl SymplecticForm6 {
    pub fn matrix() -> ExactMatrix {
        let mut m = ExactMatrix::zeros(6, 6);
        for k in [0, 2, 4] {
            m.set(k, k + 1, Cyc8::one());
            m.set(k + 1, k, Cyc8::from_int(-1));
        }
        m
    }

    pub fn pair(i: usize, j: usize) -> Cyc8 {
        Self::matrix().get(i - 1, j - 1).clone()
    }
}

/// ω vanishes on span(e_i, e_j, e_k).
pub fn is_omega_isotropic_triple(indices: &[usize]) -> Result<bool, Error> {
    let malformed = || Error::MalformedIndices(format!("{indices:?}"));
    if indices.len() != 3 || indices.iter().any(|i| !(1..=6).contains(i)) {
        return Err(malformed());
    }
    let (a, b, c) = (indices[0], indices[1], indices[2]);
    if a == b || b == c || a == c {
        return Err(malformed());
    }
    Ok([(a, b), (a, c), (b, c)]
        .iter()
        .all(|&(i, j)| SymplecticForm6::pair(i, j).is_zero()))
}
