//! Representations of the five kinds of algebras, their duals, the induced
//! representations on `Hom(g, V)`, and the encoding of a representation as a
//! Maurer-Cartan element on `g ⊕ V`.

use crate::brackets::{mc_defect, Differential};
use crate::cochains::{Cochain, CochainSpace};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::structures::{
    all_tuples, fundamental_leibniz, subadjacent_lie, validate_structure, wedge2_basis, wedge2_index, Algebra,
    AlgebraKind, ValidationReport, WitnessLog, DEFAULT_WITNESS_CAP,
};

/// Names of the action maps of each kind, in storage order.
pub fn map_names(kind: AlgebraKind) -> &'static [&'static str] {
    match kind {
        AlgebraKind::Associative => &["L", "R"],
        AlgebraKind::Lie => &["rho"],
        AlgebraKind::PreLie => &["rho", "mu"],
        AlgebraKind::Leibniz => &["rhoL", "rhoR"],
        AlgebraKind::ThreeLie => &["rho"],
    }
}

/// A representation `(V; maps)` of an algebra.
///
/// Each map is a list of `dim_v × dim_v` matrices, one per basis element of
/// `g` (for 3-Lie algebras, one per basis element `e_i ∧ e_j`, `i < j`, of
/// `∧²g`). The maps are, in order: associative `L, R`; lie `ρ`; prelie
/// `ρ, μ`; leibniz `ρ^L, ρ^R`; 3lie `ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: Algebra,
    dim_v: usize,
    maps: Vec<Vec<Matrix>>,
}

impl Representation {
    pub fn new(algebra: Algebra, dim_v: usize, maps: Vec<Vec<Matrix>>) -> Result<Self> {
        let kind = algebra.kind();
        let names = map_names(kind);
        if maps.len() != names.len() {
            return Err(Error::Shape {
                what: "number of representation maps",
                expected: names.len(),
                found: maps.len(),
            });
        }
        let count = match kind {
            AlgebraKind::ThreeLie => binomial(algebra.dim(), 2),
            _ => algebra.dim(),
        };
        for m in &maps {
            if m.len() != count {
                return Err(Error::Shape {
                    what: "matrices per representation map",
                    expected: count,
                    found: m.len(),
                });
            }
            for a in m {
                if a.rows() != dim_v || a.cols() != dim_v {
                    return Err(Error::Shape {
                        what: "representation matrix size",
                        expected: dim_v,
                        found: if a.rows() != dim_v { a.rows() } else { a.cols() },
                    });
                }
            }
        }
        Ok(Representation { algebra, dim_v, maps })
    }

    pub fn zero(algebra: Algebra, dim_v: usize) -> Self {
        let kind = algebra.kind();
        let count = match kind {
            AlgebraKind::ThreeLie => binomial(algebra.dim(), 2),
            _ => algebra.dim(),
        };
        let maps = vec![vec![Matrix::zeros(dim_v, dim_v); count]; map_names(kind).len()];
        Representation { algebra, dim_v, maps }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.algebra.kind()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn maps(&self) -> &[Vec<Matrix>] {
        &self.maps
    }

    /// Matrix of map `which` at basis element `i`.
    pub fn action(&self, which: usize, i: usize) -> &Matrix {
        &self.maps[which][i]
    }

    /// `ρ(e_a, e_b)` for a 3-Lie representation, with the sign of the
    /// reordering; `None` when `a == b`.
    pub fn pair_action(&self, a: usize, b: usize) -> Option<(&Matrix, i8)> {
        wedge2_index(self.algebra.dim(), a, b).map(|(i, s)| (&self.maps[0][i], s))
    }

    /// Same representation with one map replaced; used to build perturbed
    /// counterexamples.
    pub fn with_map(&self, which: usize, maps: Vec<Matrix>) -> Result<Self> {
        let mut all = self.maps.clone();
        all[which] = maps;
        Representation::new(self.algebra.clone(), self.dim_v, all)
    }
}

/// `Σ_k v_k maps[k]`.
fn combine(maps: &[Matrix], v: &[Scalar], dim_v: usize) -> Matrix {
    let mut out = Matrix::zeros(dim_v, dim_v);
    for (m, c) in maps.iter().zip(v) {
        if !c.is_zero() {
            out = out.add(&m.scaled(c));
        }
    }
    out
}

/// `ρ(e_a, v)` for a 3-Lie representation and a vector `v`.
fn pair_with_vec(r: &Representation, a: usize, v: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(r.dim_v, r.dim_v);
    for (b, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if let Some((m, s)) = r.pair_action(a, b) {
            let c = if s > 0 { c.clone() } else { -c };
            out = out.add(&m.scaled(&c));
        }
    }
    out
}

fn pair(r: &Representation, a: usize, b: usize) -> Matrix {
    match r.pair_action(a, b) {
        Some((m, s)) if s > 0 => m.clone(),
        Some((m, _)) => m.neg(),
        None => Matrix::zeros(r.dim_v, r.dim_v),
    }
}

pub fn check_representation(r: &Representation) -> ValidationReport {
    check_representation_capped(r, DEFAULT_WITNESS_CAP)
}

/// Checks the kind's representation identities on all basis tuples.
pub fn check_representation_capped(r: &Representation, cap: usize) -> ValidationReport {
    let a = &r.algebra;
    let d = a.dim();
    let m = r.dim_v;
    let mut log = WitnessLog::new(cap);
    let mut check = |name: &'static str, args: &[usize], defect: Matrix| {
        log.check(name, args, defect.entries().to_vec());
    };
    match r.kind() {
        AlgebraKind::Associative => {
            let (l, rr) = (&r.maps[0], &r.maps[1]);
            for t in all_tuples(d, 2) {
                let (x, y) = (t[0], t[1]);
                let xy = a.product(&[x, y]);
                check("L(xy) = L(x)L(y)", &t, combine(l, xy, m).sub(&l[x].mul(&l[y])));
                check("R(xy) = R(y)R(x)", &t, combine(rr, xy, m).sub(&rr[y].mul(&rr[x])));
                check("L(x)R(y) = R(y)L(x)", &t, l[x].commutator(&rr[y]));
            }
        }
        AlgebraKind::Lie => {
            let rho = &r.maps[0];
            for t in all_tuples(d, 2) {
                let (x, y) = (t[0], t[1]);
                let lhs = combine(rho, a.product(&[x, y]), m);
                check("rho([x,y]) = [rho(x),rho(y)]", &t, lhs.sub(&rho[x].commutator(&rho[y])));
            }
        }
        AlgebraKind::PreLie => {
            let (rho, mu) = (&r.maps[0], &r.maps[1]);
            for t in all_tuples(d, 2) {
                let (x, y) = (t[0], t[1]);
                let br: Vec<Scalar> = a
                    .product(&[x, y])
                    .iter()
                    .zip(a.product(&[y, x]))
                    .map(|(p, q)| p - q)
                    .collect();
                let lhs = combine(rho, &br, m);
                check(
                    "rho([x,y]_C) = [rho(x),rho(y)]",
                    &t,
                    lhs.sub(&rho[x].commutator(&rho[y])),
                );
                let lhs = rho[x].mul(&mu[y]).sub(&mu[y].mul(&rho[x]));
                let rhs = combine(mu, a.product(&[x, y]), m).sub(&mu[y].mul(&mu[x]));
                check("rho(x)mu(y) - mu(y)rho(x) = mu(xy) - mu(y)mu(x)", &t, lhs.sub(&rhs));
            }
        }
        AlgebraKind::Leibniz => {
            let (l, rr) = (&r.maps[0], &r.maps[1]);
            for t in all_tuples(d, 2) {
                let (x, y) = (t[0], t[1]);
                let xy = a.product(&[x, y]);
                check(
                    "rhoL([x,y]) = [rhoL(x),rhoL(y)]",
                    &t,
                    combine(l, xy, m).sub(&l[x].commutator(&l[y])),
                );
                check(
                    "rhoR([x,y]) = [rhoL(x),rhoR(y)]",
                    &t,
                    combine(rr, xy, m).sub(&l[x].commutator(&rr[y])),
                );
                check(
                    "rhoR(y)rhoL(x) = -rhoR(y)rhoR(x)",
                    &t,
                    rr[y].mul(&l[x]).add(&rr[y].mul(&rr[x])),
                );
            }
        }
        AlgebraKind::ThreeLie => {
            for t in all_tuples(d, 4) {
                let [x1, x2, x3, x4] = [t[0], t[1], t[2], t[3]];
                let lhs = pair(r, x1, x2).mul(&pair(r, x3, x4));
                let v = a.product(&[x1, x2, x3]);
                let w = a.product(&[x1, x2, x4]);
                let rhs = pair_with_vec(r, x4, v)
                    .neg()
                    .add(&pair_with_vec(r, x3, w))
                    .add(&pair(r, x3, x4).mul(&pair(r, x1, x2)));
                check("first 3-Lie representation identity", &t, lhs.sub(&rhs));
                let lhs = pair_with_vec(r, x1, a.product(&[x2, x3, x4]));
                let rhs = pair(r, x3, x4)
                    .mul(&pair(r, x1, x2))
                    .sub(&pair(r, x2, x4).mul(&pair(r, x1, x3)))
                    .add(&pair(r, x2, x3).mul(&pair(r, x1, x4)));
                check("second 3-Lie representation identity", &t, lhs.sub(&rhs));
            }
        }
    }
    log.finish()
}

fn require_valid(a: &Algebra) -> Result<()> {
    let rep = validate_structure(a);
    if rep.valid {
        Ok(())
    } else {
        Err(Error::InvalidStructure(
            "algebra",
            format!("{} identity fails at {} basis tuples", a.kind(), rep.failures),
        ))
    }
}

fn require_rep(r: &Representation) -> Result<()> {
    let rep = check_representation(r);
    if rep.valid {
        Ok(())
    } else {
        Err(Error::InvalidStructure(
            "representation",
            format!("{} identities fail at {} basis tuples", r.kind(), rep.failures),
        ))
    }
}

/// The regular representation (associative, prelie, leibniz) or the adjoint
/// representation (lie, 3lie) of `a` on itself.
pub fn regular_or_adjoint(a: &Algebra) -> Result<Representation> {
    require_valid(a)?;
    let d = a.dim();
    // left(x)[k, y] = c(x, y)_k and right(x)[k, y] = c(y, x)_k
    let left = |x: usize| {
        let mut m = Matrix::zeros(d, d);
        for y in 0..d {
            for (k, c) in a.product(&[x, y]).iter().enumerate() {
                m[(k, y)] = c.clone();
            }
        }
        m
    };
    let right = |x: usize| {
        let mut m = Matrix::zeros(d, d);
        for y in 0..d {
            for (k, c) in a.product(&[y, x]).iter().enumerate() {
                m[(k, y)] = c.clone();
            }
        }
        m
    };
    let maps = match a.kind() {
        AlgebraKind::Lie => vec![(0..d).map(left).collect()],
        AlgebraKind::ThreeLie => {
            let ad = wedge2_basis(d)
                .into_iter()
                .map(|(x, y)| {
                    let mut m = Matrix::zeros(d, d);
                    for z in 0..d {
                        for (k, c) in a.product(&[x, y, z]).iter().enumerate() {
                            m[(k, z)] = c.clone();
                        }
                    }
                    m
                })
                .collect();
            vec![ad]
        }
        _ => vec![(0..d).map(left).collect(), (0..d).map(right).collect()],
    };
    Representation::new(a.clone(), d, maps)
}

/// The dual representation on `V*`, in the dual basis.
pub fn dual_representation(r: &Representation) -> Result<Representation> {
    require_rep(r)?;
    let t = |ms: &[Matrix]| -> Vec<Matrix> { ms.iter().map(Matrix::transpose).collect() };
    let neg_t = |ms: &[Matrix]| -> Vec<Matrix> { ms.iter().map(|m| m.transpose().neg()).collect() };
    let maps = match r.kind() {
        // (V*; R*, L*) with no sign
        AlgebraKind::Associative => vec![t(&r.maps[1]), t(&r.maps[0])],
        AlgebraKind::Lie | AlgebraKind::ThreeLie => vec![neg_t(&r.maps[0])],
        // (V*; ρ* - μ*, -μ*) with ρ* = -ρ^T, μ* = -μ^T
        AlgebraKind::PreLie => {
            let rho: Vec<Matrix> = r.maps[0]
                .iter()
                .zip(&r.maps[1])
                .map(|(p, q)| q.sub(p).transpose())
                .collect();
            vec![rho, t(&r.maps[1])]
        }
        // (V*; (ρ^L)*, -(ρ^L)* - (ρ^R)*)
        AlgebraKind::Leibniz => {
            let right: Vec<Matrix> = r.maps[0]
                .iter()
                .zip(&r.maps[1])
                .map(|(p, q)| p.add(q).transpose())
                .collect();
            vec![neg_t(&r.maps[0]), right]
        }
    };
    Representation::new(r.algebra.clone(), r.dim_v, maps)
}

/// Index of `f ↦ f(e_y)_o` in `Hom(g, V)`.
pub fn hom_index(dim_v: usize, y: usize, o: usize) -> usize {
    y * dim_v + o
}

/// The induced representation on `Hom(g, V)`: for a pre-Lie representation,
/// a representation of the sub-adjacent Lie algebra; for a 3-Lie
/// representation, a representation of the Leibniz algebra `(∧²g, [,]_F)`.
pub fn hom_coefficient_rep(r: &Representation) -> Result<Representation> {
    let a = &r.algebra;
    let d = a.dim();
    let m = r.dim_v;
    let n = d * m;
    let h = |y: usize, o: usize| hom_index(m, y, o);
    match r.kind() {
        AlgebraKind::PreLie => {
            let (rho, mu) = (&r.maps[0], &r.maps[1]);
            // ρ̂(x)(f)(y) = ρ(x)f(y) + μ(y)f(x) - f(x·y), column by column
            let hat = (0..d)
                .map(|x| {
                    let mut out = Matrix::zeros(n, n);
                    for y0 in 0..d {
                        for o0 in 0..m {
                            let col = h(y0, o0);
                            for o in 0..m {
                                out[(h(y0, o), col)] += &rho[x][(o, o0)];
                            }
                            if y0 == x {
                                for y in 0..d {
                                    for o in 0..m {
                                        out[(h(y, o), col)] += &mu[y][(o, o0)];
                                    }
                                }
                            }
                            for y in 0..d {
                                out[(h(y, o0), col)] -= &a.product(&[x, y])[y0];
                            }
                        }
                    }
                    out
                })
                .collect();
            Representation::new(subadjacent_lie(a)?, n, vec![hat])
        }
        AlgebraKind::ThreeLie => {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (x, y) in wedge2_basis(d) {
                let rxy = pair(r, x, y);
                let mut lm = Matrix::zeros(n, n);
                let mut rm = Matrix::zeros(n, n);
                for z0 in 0..d {
                    for o0 in 0..m {
                        let col = h(z0, o0);
                        for o in 0..m {
                            lm[(h(z0, o), col)] += &rxy[(o, o0)];
                            rm[(h(z0, o), col)] -= &rxy[(o, o0)];
                        }
                        for z in 0..d {
                            let c = &a.product(&[x, y, z])[z0];
                            lm[(h(z, o0), col)] -= c;
                            rm[(h(z, o0), col)] += c;
                            // -ρ(y,z)φ(x) when x = z0, -ρ(z,x)φ(y) when y = z0
                            if x == z0 {
                                let ryz = pair(r, y, z);
                                for o in 0..m {
                                    rm[(h(z, o), col)] -= &ryz[(o, o0)];
                                }
                            }
                            if y == z0 {
                                let rzx = pair(r, z, x);
                                for o in 0..m {
                                    rm[(h(z, o), col)] -= &rzx[(o, o0)];
                                }
                            }
                        }
                    }
                }
                left.push(lm);
                right.push(rm);
            }
            Representation::new(fundamental_leibniz(a)?, n, vec![left, right])
        }
        k => Err(Error::KindMismatch {
            expected: "prelie or 3lie".into(),
            found: k,
        }),
    }
}

/// The structure `π̄` and the action cochain on `g ⊕ V` (g indices first),
/// with the Maurer-Cartan verdict of the action in the dgLa `(·, d_π̄)`.
#[derive(Debug, Clone)]
pub struct SumAlgebraMC {
    pub barpi: Cochain,
    pub barrho: Cochain,
    pub is_mc: bool,
    /// `d_π̄ ρ̄ + ½[ρ̄, ρ̄]`
    pub defect: Cochain,
}

pub fn rep_as_maurer_cartan(r: &Representation) -> Result<SumAlgebraMC> {
    let a = &r.algebra;
    require_valid(a)?;
    let kind = a.kind();
    let d = a.dim();
    let m = r.dim_v;
    let total = d + m;
    let space = CochainSpace::graded(kind, 1, total);
    let in_g = |i: usize| i < d;
    let col = |mat: &Matrix, j: usize, out: &mut [Scalar], neg: bool| {
        for o in 0..m {
            let c = &mat[(o, j)];
            if neg {
                out[d + o] -= c;
            } else {
                out[d + o] += c;
            }
        }
    };
    let barpi = Cochain::from_fn(space, |t| {
        let mut out = vec![Scalar::zero(); total];
        if t.iter().all(|&i| in_g(i)) {
            for (o, c) in a.product(t).iter().enumerate() {
                out[o] = c.clone();
            }
        }
        out
    });
    let barrho = Cochain::from_fn(space, |t| {
        let mut out = vec![Scalar::zero(); total];
        match kind {
            AlgebraKind::ThreeLie => {
                // ρ(x,y)w + ρ(y,z)u + ρ(z,x)v, exactly one argument in V
                let (x, y, z) = (t[0], t[1], t[2]);
                match (in_g(x), in_g(y), in_g(z)) {
                    (true, true, false) => col(&pair(r, x, y), z - d, &mut out, false),
                    (false, true, true) => col(&pair(r, y, z), x - d, &mut out, false),
                    (true, false, true) => col(&pair(r, z, x), y - d, &mut out, false),
                    _ => {}
                }
            }
            AlgebraKind::Lie => {
                // ρ(x)v - ρ(y)u
                let (x, y) = (t[0], t[1]);
                match (in_g(x), in_g(y)) {
                    (true, false) => col(&r.maps[0][x], y - d, &mut out, false),
                    (false, true) => col(&r.maps[0][y], x - d, &mut out, true),
                    _ => {}
                }
            }
            _ => {
                // left(x)v + right(y)u
                let (x, y) = (t[0], t[1]);
                match (in_g(x), in_g(y)) {
                    (true, false) => col(&r.maps[0][x], y - d, &mut out, false),
                    (false, true) => col(&r.maps[1][y], x - d, &mut out, false),
                    _ => {}
                }
            }
        }
        out
    });
    let defect = mc_defect(Differential::Bracket(&barpi), &barrho)?;
    Ok(SumAlgebraMC {
        is_mc: defect.is_zero(),
        barpi,
        barrho,
        defect,
    })
}
