//! The desmic pencil 8A·x₁x₂x₃x₄ − B·g(x) in ℙ³, its three tetrahedra, the
//! twelve desmic points, the sixteen base-locus lines, the conjugate pencil
//! in y-coordinates and the W(F₄) action on all of these.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::algebra::poly::{c, x, y};
use crate::algebra::{
    coefficient_vectors, proportional, Cyc8, ExactMatrix, Monomial, MultiPoly, Substitution, Var,
};
use crate::error::Error;
use crate::rootsys::{RootLength, RootSystemF4};

/// m = x₁x₂x₃x₄.
pub fn coordinate_product() -> MultiPoly {
    &(&x(1) * &x(2)) * &(&x(3) * &x(4))
}

/// g = 2Σ_{i<j} x_i²x_j² − Σ_k x_k⁴.
pub fn quadric_sum_form() -> MultiPoly {
    let mut g = MultiPoly::zero();
    for i in 1..=4 {
        g = &g - &x(i).pow(4);
        for j in i + 1..=4 {
            g = &g + &(&c(2) * &(&x(i).pow(2) * &x(j).pow(2)));
        }
    }
    g
}

/// Pulls a form in x back along x ↦ g·x.
pub fn pullback(form: &MultiPoly, g: &ExactMatrix) -> Result<MultiPoly, Error> {
    if g.rows() != 4 || g.cols() != 4 {
        return Err(Error::Dimension("expected a 4x4 matrix".into()));
    }
    form.substitute(&Substitution::linear(&Var::XS, &g.to_rows()))
}

/// The projective pair [A:B].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilParams {
    a: Cyc8,
    b: Cyc8,
}

impl PencilParams {
    pub fn new(a: Cyc8, b: Cyc8) -> Result<Self, Error> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroParameters);
        }
        Ok(PencilParams { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self, Error> {
        Self::new(Cyc8::from_int(a), Cyc8::from_int(b))
    }

    /// [A:B] = [3(s⁴+t⁴) : 6s²t²].
    pub fn from_st(s: &Cyc8, t: &Cyc8) -> Result<Self, Error> {
        let s2 = s * s;
        let t2 = t * t;
        let a = Cyc8::from_int(3) * (&s2 * &s2 + &t2 * &t2);
        let b = Cyc8::from_int(6) * (&s2 * &t2);
        Self::new(a, b)
    }

    pub fn a(&self) -> &Cyc8 {
        &self.a
    }

    pub fn b(&self) -> &Cyc8 {
        &self.b
    }

    pub fn same_point(&self, other: &PencilParams) -> bool {
        &self.a * &other.b == &self.b * &other.a
    }

    /// The tetrahedron this member degenerates to, if any: T₁ at [1:0],
    /// T₂ at [1:1], T₃ at [−1:1].
    pub fn tetrahedron(&self) -> Option<usize> {
        if self.b.is_zero() {
            Some(1)
        } else if self.a == self.b {
            Some(2)
        } else if self.a == -&self.b {
            Some(3)
        } else {
            None
        }
    }
}

impl fmt::Display for PencilParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticMember {
    form: MultiPoly,
    params: PencilParams,
}

impl QuarticMember {
    pub fn form(&self) -> &MultiPoly {
        &self.form
    }

    pub fn params(&self) -> &PencilParams {
        &self.params
    }

    pub fn gradient(&self) -> [MultiPoly; 4] {
        Var::XS.map(|v| self.form.partial(v))
    }

    pub fn evaluate(&self, p: &ProjPoint) -> Cyc8 {
        self.form.evaluate_x(p.coords())
    }
}

pub fn pencil_member(p: &PencilParams) -> QuarticMember {
    let m = coordinate_product().scale(&(Cyc8::from_int(8) * p.a()));
    let g = quadric_sum_form().scale(p.b());
    QuarticMember {
        form: &m - &g,
        params: p.clone(),
    }
}

/// [A:B] with `form` = 8A·m − B·g, if the form lies in the pencil.
pub fn pencil_params_of(form: &MultiPoly) -> Option<PencilParams> {
    let alpha = form.coeff(&Monomial::of(&Var::XS));
    let beta = -form.coeff(&Monomial::of(&[Var::X1; 4]));
    let rebuilt = &coordinate_product().scale(&alpha) + &quadric_sum_form().scale(&beta);
    if rebuilt != *form {
        return None;
    }
    let a = alpha * Cyc8::from_rational(crate::algebra::rat(1, 8));
    PencilParams::new(a, -beta).ok()
}

/// A point of ℙ³, scaled so that its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [Cyc8; 4],
}

impl ProjPoint {
    pub fn new(coords: [Cyc8; 4]) -> Result<Self, Error> {
        let k = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroVector)?;
        let inv = coords[k].inverse().ok_or(Error::ZeroVector)?;
        Ok(ProjPoint {
            coords: coords.map(|c| c * &inv),
        })
    }

    pub fn from_ints(coords: [i64; 4]) -> Result<Self, Error> {
        Self::new(coords.map(Cyc8::from_int))
    }

    pub fn coords(&self) -> &[Cyc8; 4] {
        &self.coords
    }

    /// g·p.
    pub fn transform(&self, g: &ExactMatrix) -> Result<ProjPoint, Error> {
        let image = g.apply(&self.coords);
        let image: [Cyc8; 4] = image
            .try_into()
            .map_err(|_| Error::Dimension("expected a 4x4 matrix".into()))?;
        ProjPoint::new(image)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A line of ℙ³ stored as the reduced row echelon basis of its 2-plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine {
    basis: ExactMatrix,
}

impl ProjLine {
    pub fn through(p: &[Cyc8; 4], q: &[Cyc8; 4]) -> Result<Self, Error> {
        let m = ExactMatrix::from_rows(vec![p.to_vec(), q.to_vec()])?;
        let (reduced, pivots) = m.rref();
        if pivots.len() != 2 {
            return Err(Error::Dimension("points do not span a line".into()));
        }
        Ok(ProjLine { basis: reduced })
    }

    /// The line {h₁ = h₂ = 0}.
    pub fn from_equations(h1: &[Cyc8; 4], h2: &[Cyc8; 4]) -> Result<Self, Error> {
        let m = ExactMatrix::from_rows(vec![h1.to_vec(), h2.to_vec()])?;
        let null = m.nullspace();
        if null.len() != 2 {
            return Err(Error::Dimension("equations do not cut out a line".into()));
        }
        Self::through(&to4(&null[0]), &to4(&null[1]))
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn points(&self) -> ([Cyc8; 4], [Cyc8; 4]) {
        (to4(self.basis.row(0)), to4(self.basis.row(1)))
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let (a, b) = self.points();
        let m = ExactMatrix::from_rows(vec![a.to_vec(), b.to_vec(), p.coords().to_vec()])
            .expect("three rows of length 4");
        m.rank() == 2
    }

    /// x_k ↦ s·P_k + t·Q_k for the stored basis P, Q.
    pub fn parametrization(&self) -> Substitution {
        let (p, q) = self.points();
        let mut sub = Substitution::new();
        for k in 0..4 {
            let image = MultiPoly::linear(&[p[k].clone(), q[k].clone()], &[Var::S, Var::T]);
            sub = sub.set(Var::XS[k], image);
        }
        sub
    }

    /// Whether `form` vanishes identically on the line.
    pub fn lies_on(&self, form: &MultiPoly) -> Result<bool, Error> {
        Ok(form.substitute(&self.parametrization())?.is_zero())
    }

    /// The common point of two distinct coplanar lines.
    pub fn meet(&self, other: &ProjLine) -> Option<ProjPoint> {
        let (p, q) = self.points();
        let (r, s) = other.points();
        let mut m = ExactMatrix::zeros(4, 4);
        for k in 0..4 {
            m.set(k, 0, p[k].clone());
            m.set(k, 1, q[k].clone());
            m.set(k, 2, -&r[k]);
            m.set(k, 3, -&s[k]);
        }
        let null = m.nullspace();
        if null.len() != 1 {
            return None;
        }
        let v = &null[0];
        ProjPoint::new(std::array::from_fn(|k| &(&v[0] * &p[k]) + &(&v[1] * &q[k]))).ok()
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.points();
        let show = |v: &[Cyc8; 4]| {
            v.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "⟨[{}],[{}]⟩", show(&p), show(&q))
    }
}

fn to4(v: &[Cyc8]) -> [Cyc8; 4] {
    std::array::from_fn(|k| v[k].clone())
}

fn linear_form(h: &[Cyc8; 4]) -> MultiPoly {
    MultiPoly::linear(h, &Var::XS)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tetrahedron {
    pub label: usize,
    /// Face covectors; face k is opposite vertex k.
    pub faces: [[Cyc8; 4]; 4],
    pub vertices: [ProjPoint; 4],
    pub member_params: PencilParams,
}

impl Tetrahedron {
    fn from_faces(label: usize, faces: [[Cyc8; 4]; 4]) -> Self {
        let vertices = std::array::from_fn(|k| {
            let rows: Vec<Vec<Cyc8>> = (0..4)
                .filter(|&j| j != k)
                .map(|j| faces[j].to_vec())
                .collect();
            let null = ExactMatrix::from_rows(rows)
                .expect("three rows of length 4")
                .nullspace();
            assert_eq!(null.len(), 1, "face triple meets in a point");
            ProjPoint::new(to4(&null[0])).expect("nonzero kernel vector")
        });
        let product: MultiPoly = faces.iter().map(linear_form).product();
        let member_params = pencil_params_of(&product).expect("face product lies in the pencil");
        Tetrahedron {
            label,
            faces,
            vertices,
            member_params,
        }
    }

    pub fn face_forms(&self) -> [MultiPoly; 4] {
        std::array::from_fn(|k| linear_form(&self.faces[k]))
    }

    pub fn face_product(&self) -> MultiPoly {
        self.face_forms().into_iter().product()
    }

    /// The six edges, keyed by their vertex pairs (i, j) with i < j.
    pub fn edges(&self) -> Vec<((usize, usize), ProjLine)> {
        let mut out = Vec::with_capacity(6);
        for i in 0..4 {
            for j in i + 1..4 {
                let line = ProjLine::through(self.vertices[i].coords(), self.vertices[j].coords())
                    .expect("distinct vertices");
                out.push(((i, j), line));
            }
        }
        out
    }

    /// Whether pulling back along `g` permutes the faces up to scalars.
    pub fn is_stabilized_by(&self, g: &ExactMatrix) -> bool {
        self.faces.iter().all(|h| {
            let image = g.transpose().apply(h);
            self.faces.iter().any(|f| crate::rootsys::is_multiple(f, &image))
        })
    }
}

/// T₁ (faces x_i), T₂ (faces Σε_i x_i with Πε = 1), T₃ (Πε = −1).
pub fn tetrahedra() -> [Tetrahedron; 3] {
    let unit = |k: usize| std::array::from_fn(|j| Cyc8::from_int((j == k) as i64));
    let t1 = Tetrahedron::from_faces(1, std::array::from_fn(unit));
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for e2 in [1, -1] {
        for e3 in [1, -1] {
            for e4 in [1, -1] {
                let face = [1, e2, e3, e4].map(Cyc8::from_int);
                if e2 * e3 * e4 == 1 {
                    even.push(face);
                } else {
                    odd.push(face);
                }
            }
        }
    }
    let t2 = Tetrahedron::from_faces(2, even.try_into().unwrap());
    let t3 = Tetrahedron::from_faces(3, odd.try_into().unwrap());
    [t1, t2, t3]
}

/// The tetrahedron whose face product is proportional to `form`.
pub fn catalog_factorization(form: &MultiPoly) -> Option<usize> {
    tetrahedra()
        .iter()
        .find(|t| proportional(form, &t.face_product()).is_some())
        .map(|t| t.label)
}

/// The twelve points with two zero coordinates and the others 1, ±1.
pub fn desmic_points() -> Vec<ProjPoint> {
    let mut out = Vec::with_capacity(12);
    for i in 0..4 {
        for j in i + 1..4 {
            for sign in [1, -1] {
                let mut v = [0; 4];
                v[i] = 1;
                v[j] = sign;
                out.push(ProjPoint::from_ints(v).unwrap());
            }
        }
    }
    out
}

pub fn is_singular_at(member: &QuarticMember, p: &ProjPoint) -> bool {
    member.evaluate(p).is_zero()
        && member
            .gradient()
            .iter()
            .all(|d| d.evaluate_x(p.coords()).is_zero())
}

/// Lines {x_i = 0, h = 0} with h a {−1,0,1} form on the other coordinates
/// on which both m and g vanish.
pub fn base_locus_lines() -> Vec<ProjLine> {
    let m = coordinate_product();
    let g = quadric_sum_form();
    let mut found = BTreeSet::new();
    for i in 0..4 {
        let plane: [Cyc8; 4] = std::array::from_fn(|k| Cyc8::from_int((k == i) as i64));
        let others: Vec<usize> = (0..4).filter(|&k| k != i).collect();
        for code in 0..27 {
            let mut h: [Cyc8; 4] = Default::default();
            let mut rest = code;
            for &k in &others {
                h[k] = Cyc8::from_int(rest % 3 - 1);
                rest /= 3;
            }
            let Ok(line) = ProjLine::from_equations(&plane, &h) else {
                continue;
            };
            if line.lies_on(&m).unwrap() && line.lies_on(&g).unwrap() {
                found.insert(line);
            }
        }
    }
    found.into_iter().collect()
}

#[derive(Clone, Debug)]
pub struct ReyeIncidence {
    pub lines: Vec<ProjLine>,
    pub points: Vec<ProjPoint>,
    /// `table[l][p]` is true iff point p lies on line l.
    pub table: Vec<Vec<bool>>,
}

impl ReyeIncidence {
    pub fn points_on_line(&self, l: usize) -> Vec<usize> {
        (0..self.points.len()).filter(|&p| self.table[l][p]).collect()
    }

    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        (0..self.lines.len()).filter(|&l| self.table[l][p]).collect()
    }

    pub fn incidences(&self) -> usize {
        self.table.iter().flatten().filter(|&&b| b).count()
    }

    /// Every line carries `per_line` points and every point lies on
    /// `per_point` lines.
    pub fn is_configuration(&self, per_line: usize, per_point: usize) -> bool {
        (0..self.lines.len()).all(|l| self.points_on_line(l).len() == per_line)
            && (0..self.points.len()).all(|p| self.lines_through(p).len() == per_point)
    }
}

pub fn reye_incidence() -> ReyeIncidence {
    let lines = base_locus_lines();
    let points = desmic_points();
    let table = lines
        .iter()
        .map(|l| points.iter().map(|p| l.contains(p)).collect())
        .collect();
    ReyeIncidence {
        lines,
        points,
        table,
    }
}

#[derive(Clone, Debug)]
pub struct TangentPlane {
    /// The covector h of the plane {h = 0}.
    pub covector: [Cyc8; 4],
    /// P, Q spanning the line and R completing the plane; the plane is
    /// parametrized as y₁P + y₂Q + y₃R.
    pub plane_basis: [[Cyc8; 4]; 3],
    /// The residual conic in y₁, y₂, y₃: the plane section equals y₃²·conic.
    pub conic: MultiPoly,
}

/// The covector h with ∇F ∝ h at every point of the line.
pub fn tangent_covector_along_line(
    member: &QuarticMember,
    line: &ProjLine,
) -> Result<[Cyc8; 4], Error> {
    let sub = line.parametrization();
    let grads = member
        .gradient()
        .iter()
        .map(|d| d.substitute(&sub))
        .collect::<Result<Vec<_>, _>>()?;
    let k0 = grads.iter().position(|g| !g.is_zero()).ok_or_else(|| {
        Error::DegenerateTangent("gradient vanishes identically along the line".into())
    })?;
    let mut covector: [Cyc8; 4] = Default::default();
    for (k, g) in grads.iter().enumerate() {
        if !g.is_zero() {
            covector[k] = proportional(g, &grads[k0]).ok_or_else(|| {
                Error::DegenerateTangent("tangent plane varies along the line".into())
            })?;
        }
    }
    Ok(covector)
}

/// The constant tangent plane along a base-locus line and the residual
/// conic of the plane section.
pub fn tangent_plane_along_line(
    member: &QuarticMember,
    line: &ProjLine,
) -> Result<TangentPlane, Error> {
    let covector = tangent_covector_along_line(member, line)?;
    let (p, q) = line.points();
    let kernel = ExactMatrix::from_rows(vec![covector.to_vec()])?.nullspace();
    let r = kernel
        .iter()
        .map(|v| to4(v))
        .find(|v| {
            ExactMatrix::from_rows(vec![p.to_vec(), q.to_vec(), v.to_vec()])
                .map(|m| m.rank() == 3)
                .unwrap_or(false)
        })
        .ok_or_else(|| Error::DegenerateTangent("line does not lie in the tangent plane".into()))?;
    let mut plane = Substitution::new();
    for k in 0..4 {
        let image = MultiPoly::linear(
            &[p[k].clone(), q[k].clone(), r[k].clone()],
            &[Var::Y1, Var::Y2, Var::Y3],
        );
        plane = plane.set(Var::XS[k], image);
    }
    let section = member.form().substitute(&plane)?;
    if section.is_zero() {
        return Err(Error::DegenerateTangent(
            "plane section vanishes identically".into(),
        ));
    }
    let conic = section.divide_by_var_power(Var::Y3, 2).ok_or_else(|| {
        Error::DegenerateTangent("plane section is not singular along the line".into())
    })?;
    Ok(TangentPlane {
        covector,
        plane_basis: [p, q, r],
        conic,
    })
}

/// (a, b, c) with a + b + c = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateParams {
    a: Cyc8,
    b: Cyc8,
    c: Cyc8,
}

impl ConjugateParams {
    pub fn new(a: Cyc8, b: Cyc8, c: Cyc8) -> Result<Self, Error> {
        if !(&(&a + &b) + &c).is_zero() {
            return Err(Error::SumNotZero);
        }
        Ok(ConjugateParams { a, b, c })
    }

    pub fn abc(&self) -> [&Cyc8; 3] {
        [&self.a, &self.b, &self.c]
    }
}

/// (y₁²−y₂²)(y₃²−y₄²), (y₁²−y₃²)(y₂²−y₄²), (y₁²−y₄²)(y₂²−y₃²).
pub fn conjugate_products() -> [MultiPoly; 3] {
    let d = |i: usize, j: usize| &y(i).pow(2) - &y(j).pow(2);
    [
        &d(1, 2) * &d(3, 4),
        &d(1, 3) * &d(2, 4),
        &d(1, 4) * &d(2, 3),
    ]
}

/// a·q₁ − b·q₂ + c·q₃ in the y-coordinates.
pub fn conjugate_member(cp: &ConjugateParams) -> MultiPoly {
    let [q1, q2, q3] = conjugate_products();
    &(&q1.scale(&cp.a) - &q2.scale(&cp.b)) + &q3.scale(&cp.c)
}

/// (b−c)(y₁²y₂²+y₃²y₄²) + (c−a)(y₁²y₃²+y₂²y₄²) + (a−b)(y₁²y₄²+y₂²y₃²), which
/// is −1 times [`conjugate_member`] and so cuts out the same surface.
pub fn conjugate_member_expanded(cp: &ConjugateParams) -> MultiPoly {
    let sq = |i: usize, j: usize| &y(i).pow(2) * &y(j).pow(2);
    let pair = |i, j, k, l| &sq(i, j) + &sq(k, l);
    let terms = [
        (&cp.b - &cp.c, pair(1, 2, 3, 4)),
        (&cp.c - &cp.a, pair(1, 3, 2, 4)),
        (&cp.a - &cp.b, pair(1, 4, 2, 3)),
    ];
    terms.iter().map(|(k, p)| p.scale(k)).sum()
}

#[derive(Clone, Debug)]
pub struct MacdonaldSpan {
    pub kind: RootLength,
    /// One product of four root forms per splitting group, in table order.
    pub products: [MultiPoly; 3],
    pub dimension: usize,
    /// r with Σ r_k·products[k] = 0, first nonzero entry 1.
    pub relation: [Cyc8; 3],
    /// Every generator translate of every product stays in the span.
    pub translates_in_span: bool,
}

impl MacdonaldSpan {
    pub fn contains(&self, form: &MultiPoly) -> bool {
        let mut all = self.products.to_vec();
        all.push(form.clone());
        let (_, vectors) = coefficient_vectors(&all);
        let target = vectors.last().unwrap().clone();
        crate::algebra::solve_in_span(&vectors[..3], &target).is_some()
    }
}

/// Primitive integer form of a root with positive leading coefficient.
pub fn root_face_form(coords: &[crate::algebra::Rational; 4]) -> [Cyc8; 4] {
    let half = coords.iter().any(|c| !c.is_integer());
    let scale = crate::algebra::rat(if half { 2 } else { 1 }, 1);
    let lead = coords.iter().find(|c| *c != &crate::algebra::rat(0, 1));
    let sign = match lead {
        Some(c) if c < &crate::algebra::rat(0, 1) => -scale,
        _ => scale,
    };
    std::array::from_fn(|k| Cyc8::from_rational(&coords[k] * &sign))
}

pub fn macdonald_span(rs: &RootSystemF4, kind: RootLength) -> Result<MacdonaldSpan, Error> {
    let splitting = rs.orthogonal_splitting(kind);
    let products: [MultiPoly; 3] = std::array::from_fn(|k| {
        splitting.groups[k]
            .iter()
            .map(|&r| linear_form(&root_face_form(&rs.root(r).rational_coords())))
            .product()
    });
    let (_, vectors) = coefficient_vectors(&products);
    let mut columns = ExactMatrix::zeros(vectors[0].len(), 3);
    for (k, v) in vectors.iter().enumerate() {
        for (i, e) in v.iter().enumerate() {
            columns.set(i, k, e.clone());
        }
    }
    let dimension = columns.rank();
    let null = columns.nullspace();
    let relation = match null.first() {
        Some(v) => {
            let lead = v.iter().find(|e| !e.is_zero()).unwrap().inverse().unwrap();
            std::array::from_fn(|k| &v[k] * &lead)
        }
        None => Default::default(),
    };
    let mut span = MacdonaldSpan {
        kind,
        products,
        dimension,
        relation,
        translates_in_span: false,
    };
    let mut ok = true;
    for g in rs.simple_reflections()? {
        for p in &span.products {
            ok &= span.contains(&pullback(p, &g)?);
        }
    }
    span.translates_in_span = ok;
    Ok(span)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub group_order: usize,
    pub image_order: usize,
    pub kernel_order: usize,
    /// (long permutation, short permutation) of each simple reflection.
    pub generator_images: Vec<([usize; 3], [usize; 3])>,
}

/// The pair of permutations `g` induces on the long and short groups.
pub fn s3s3_image(rs: &RootSystemF4, g: &ExactMatrix) -> Result<([usize; 3], [usize; 3]), Error> {
    let perm = |kind| {
        rs.group_permutation(g, &rs.orthogonal_splitting(kind))
            .ok_or_else(|| {
                Error::Verification(format!("{g} does not permute the {kind} groups"))
            })
    };
    Ok((perm(RootLength::Long)?, perm(RootLength::Short)?))
}

pub fn weyl_to_s3s3(rs: &RootSystemF4) -> Result<ExtensionReport, Error> {
    let group = rs.weyl_group()?;
    let identity = ([0, 1, 2], [0, 1, 2]);
    let mut image = HashSet::new();
    let mut kernel = 0;
    for g in group.elements() {
        let pair = s3s3_image(rs, g)?;
        if pair == identity {
            kernel += 1;
        }
        image.insert(pair);
    }
    let generator_images = rs
        .simple_reflections()?
        .iter()
        .map(|g| s3s3_image(rs, g))
        .collect::<Result<_, _>>()?;
    Ok(ExtensionReport {
        group_order: group.order(),
        image_order: image.len(),
        kernel_order: kernel,
        generator_images,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerReport {
    pub matrix_order: usize,
    /// Order modulo ±1.
    pub projective_order: usize,
    pub all_signed_permutations: bool,
    /// Order of the induced permutation group on the three long groups.
    pub long_image_order: usize,
}

pub fn tetrahedron_stabilizer(
    rs: &RootSystemF4,
    tetra: &Tetrahedron,
) -> Result<StabilizerReport, Error> {
    let group = rs.weyl_group()?;
    let long = rs.orthogonal_splitting(RootLength::Long);
    let stab: Vec<&ExactMatrix> = group
        .elements()
        .iter()
        .filter(|g| tetra.is_stabilized_by(g))
        .collect();
    let classes: BTreeSet<ExactMatrix> = stab
        .iter()
        .map(|g| {
            let n = g.neg();
            if n < **g {
                n
            } else {
                (*g).clone()
            }
        })
        .collect();
    let mut long_image = HashSet::new();
    for g in &stab {
        let perm = rs.group_permutation(g, &long).ok_or_else(|| {
            Error::Verification(format!("{g} does not permute the long groups"))
        })?;
        long_image.insert(perm);
    }
    Ok(StabilizerReport {
        matrix_order: stab.len(),
        projective_order: classes.len(),
        all_signed_permutations: stab.iter().all(|g| g.is_signed_permutation()),
        long_image_order: long_image.len(),
    })
}

#[derive(Clone, Debug)]
pub struct EdgeMeeting {
    pub from: usize,
    pub edge: (usize, usize),
    pub to: usize,
    /// Edges of the target tetrahedron meeting the given edge.
    pub met_edges: Vec<(usize, usize)>,
    pub points: Vec<ProjPoint>,
}

impl EdgeMeeting {
    pub fn meets_opposite_pair(&self) -> bool {
        match self.met_edges[..] {
            [(a, b), (c, d)] => a != c && a != d && b != c && b != d,
            _ => false,
        }
    }
}

/// For every ordered pair of distinct tetrahedra and every edge of the
/// first, the edges of the second it meets.
pub fn edge_meetings() -> Vec<EdgeMeeting> {
    let tetra = tetrahedra();
    let mut out = Vec::new();
    for a in &tetra {
        for b in &tetra {
            if a.label == b.label {
                continue;
            }
            let target = b.edges();
            for (edge, line) in a.edges() {
                let mut met_edges = Vec::new();
                let mut points = Vec::new();
                for (other_edge, other) in &target {
                    if let Some(p) = line.meet(other) {
                        met_edges.push(*other_edge);
                        points.push(p);
                    }
                }
                out.push(EdgeMeeting {
                    from: a.label,
                    edge,
                    to: b.label,
                    met_edges,
                    points,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cyc8;
    use crate::extalg::{cartan_element_at, Trivector};

    fn ints(v: [i64; 4]) -> ProjPoint {
        ProjPoint::from_ints(v).unwrap()
    }

    #[test]
    fn members_at_special_params() {
        let t1 = pencil_member(&PencilParams::from_ints(1, 0).unwrap());
        assert_eq!(*t1.form(), coordinate_product().scale(&Cyc8::from_int(8)));
        let g = pencil_member(&PencilParams::from_ints(0, 1).unwrap());
        assert_eq!(*g.form(), -quadric_sum_form());
        let p = PencilParams::from_st(&Cyc8::one(), &Cyc8::one()).unwrap();
        assert!(p.same_point(&PencilParams::from_ints(1, 1).unwrap()));
        assert!(PencilParams::from_ints(0, 0).is_err());
    }

    #[test]
    fn tetrahedra_params_and_vertices() {
        let [t1, t2, t3] = tetrahedra();
        assert!(t1.member_params.same_point(&PencilParams::from_ints(1, 0).unwrap()));
        assert!(t2.member_params.same_point(&PencilParams::from_ints(1, 1).unwrap()));
        assert!(t3.member_params.same_point(&PencilParams::from_ints(-1, 1).unwrap()));
        let expected: Vec<ProjPoint> = (0..4)
            .map(|k| ints(std::array::from_fn(|j| (j == k) as i64)))
            .collect();
        assert_eq!(t1.vertices.to_vec(), expected);
        let mut t2_product = coordinate_product().scale(&Cyc8::from_int(8));
        for i in 1..=4 {
            t2_product = &t2_product + &x(i).pow(4);
            for j in i + 1..=4 {
                t2_product = &t2_product - &(&c(2) * &(&x(i).pow(2) * &x(j).pow(2)));
            }
        }
        assert_eq!(t2.face_product(), t2_product);
    }

    #[test]
    fn tetrahedra_match_st_conditions() {
        let one = Cyc8::one();
        let [t1, t2, t3] = tetrahedra();
        let at = |s: &Cyc8, t: &Cyc8| PencilParams::from_st(s, t).unwrap();
        assert!(t1.member_params.same_point(&at(&one, &Cyc8::zero())));
        assert!(t2.member_params.same_point(&at(&one, &one)));
        assert!(t3.member_params.same_point(&at(&one, &Cyc8::i())));
        assert_eq!(at(&one, &Cyc8::i()).tetrahedron(), Some(3));
    }

    #[test]
    fn desmic_point_singularity() {
        let pts = desmic_points();
        assert_eq!(pts.len(), 12);
        assert!(pts.contains(&ints([0, 0, 1, 1])));
        for (a, b) in [(1, 0), (0, 1), (1, 1), (3, -7), (2, 5)] {
            let member = pencil_member(&PencilParams::from_ints(a, b).unwrap());
            assert!(pts.iter().all(|p| is_singular_at(&member, p)));
        }
        let m11 = pencil_member(&PencilParams::from_ints(1, 1).unwrap());
        assert!(!is_singular_at(&m11, &ints([1, 2, 3, 7])));
        let m10 = pencil_member(&PencilParams::from_ints(1, 0).unwrap());
        assert!(is_singular_at(&m10, &ints([1, 0, 0, 0])));
    }

    #[test]
    fn sixteen_lines_and_reye() {
        let lines = base_locus_lines();
        assert_eq!(lines.len(), 16);
        let e1 = [1, 0, 0, 0].map(Cyc8::from_int);
        let h = [0, 1, 1, 1].map(Cyc8::from_int);
        let l = ProjLine::from_equations(&e1, &h).unwrap();
        assert!(lines.contains(&l));
        let reye = reye_incidence();
        assert!(reye.is_configuration(3, 4));
        assert_eq!(reye.incidences(), 48);
        let li = reye.lines.iter().position(|x| *x == l).unwrap();
        let on: BTreeSet<ProjPoint> = reye
            .points_on_line(li)
            .into_iter()
            .map(|p| reye.points[p].clone())
            .collect();
        let expected: BTreeSet<ProjPoint> = [[0, 0, 1, -1], [0, 1, 0, -1], [0, 1, -1, 0]]
            .map(ints)
            .into_iter()
            .collect();
        assert_eq!(on, expected);
    }

    #[test]
    fn tangent_plane_constant_along_line() {
        let e1 = [1, 0, 0, 0].map(Cyc8::from_int);
        let h = [0, 1, 1, 1].map(Cyc8::from_int);
        let line = ProjLine::from_equations(&e1, &h).unwrap();
        let t2 = pencil_member(&PencilParams::from_ints(1, 1).unwrap());
        let face = tangent_covector_along_line(&t2, &line).unwrap();
        assert!(crate::rootsys::is_multiple(&face, &[1, 1, 1, 1].map(Cyc8::from_int)));
        let member = pencil_member(&PencilParams::from_ints(2, 1).unwrap());
        let tp = tangent_plane_along_line(&member, &line).unwrap();
        assert_eq!(tp.conic.degree(), Some(2));
        for (a, b) in [(1, 0), (1, 1)] {
            let degenerate = pencil_member(&PencilParams::from_ints(a, b).unwrap());
            assert!(matches!(
                tangent_plane_along_line(&degenerate, &line),
                Err(Error::DegenerateTangent(_))
            ));
        }
    }

    #[test]
    fn conjugate_forms_agree() {
        let p = |a, b, c| ConjugateParams::new(Cyc8::from_int(a), Cyc8::from_int(b), Cyc8::from_int(c));
        for cp in [p(1, -1, 0).unwrap(), p(1, 1, -2).unwrap(), p(3, -5, 2).unwrap()] {
            assert_eq!(conjugate_member(&cp), -conjugate_member_expanded(&cp));
        }
        assert!(p(1, -1, 1).is_err());
        let [q1, q2, q3] = conjugate_products();
        assert!((&(&q1 - &q2) + &q3).is_zero());
    }

    #[test]
    fn desmic_point_trivectors_are_decomposable() {
        let one = MultiPoly::one();
        let zero = MultiPoly::zero();
        let w = cartan_element_at(&[1, 1, 1, 1].map(Cyc8::from_int)).contract(&one, &one);
        let u = [&one, &one, &zero, &zero, &zero, &zero].map(Clone::clone);
        let v = [&zero, &zero, &one, &one, &zero, &zero].map(Clone::clone);
        let z = [&zero, &zero, &zero, &zero, &one, &one].map(Clone::clone);
        assert_eq!(w, Trivector::decomposable(&u, &v, &z));

        let w = cartan_element_at(&[0, 0, 1, 1].map(Cyc8::from_int))
            .contract(&MultiPoly::var(Var::S), &MultiPoly::var(Var::T));
        let expected = &(&Trivector::e(1, 3, 6) + &Trivector::e(1, 4, 5)).scale(&MultiPoly::var(Var::T))
            + &(&Trivector::e(2, 3, 6) + &Trivector::e(2, 4, 5)).scale(&MultiPoly::var(Var::S));
        assert_eq!(w, expected);
    }

    #[test]
    fn edges_meet_opposite_pairs_at_desmic_points() {
        let pts = desmic_points();
        let meetings = edge_meetings();
        assert_eq!(meetings.len(), 36);
        for m in &meetings {
            assert!(m.meets_opposite_pair(), "{m:?}");
            assert!(m.points.iter().all(|p| pts.contains(p)));
        }
    }

    #[test]
    fn catalog() {
        let f = |a, b| pencil_member(&PencilParams::from_ints(a, b).unwrap()).form().clone();
        assert_eq!(catalog_factorization(&f(1, 1)), Some(2));
        assert_eq!(catalog_factorization(&f(1, 0)), Some(1));
        assert_eq!(catalog_factorization(&f(-1, 1)), Some(3));
        assert_eq!(catalog_factorization(&f(2, 1)), None);
    }
}
