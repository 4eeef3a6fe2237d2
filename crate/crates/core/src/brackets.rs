//! Graded Lie brackets on cochains, Maurer-Cartan calculus and the cup-product
//! dga of an associative algebra morphism complex.
//!
//! A graded element of degree `p` is a [`Cochain`] with values in `g` whose
//! space is [`CochainSpace::graded`]`(kind, p, dim)`.

use crate::cochains::{Arg, Cochain, CochainSpace};
use crate::cohomology::coboundary;
use crate::combinatorics::{shuffles, Shuffle};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::representations::regular_or_adjoint;
use crate::structures::{all_tuples, validate_structure, Algebra, AlgebraKind};

fn graded_degree(c: &Cochain) -> Result<usize> {
    let sp = c.space();
    match sp.graded_degree() {
        Some(p) if sp.dim_v == sp.dim_g => Ok(p),
        _ => Err(Error::Shape {
            what: "graded element (cochain with values in g, degree >= 1)",
            expected: sp.dim_g,
            found: sp.dim_v,
        }),
    }
}

fn check_pair(p: &Cochain, q: &Cochain) -> Result<(usize, usize)> {
    let (a, b) = (p.space(), q.space());
    if a.kind != b.kind {
        return Err(Error::KindMismatch {
            expected: a.kind.to_string(),
            found: b.kind,
        });
    }
    if a.dim_g != b.dim_g {
        return Err(Error::Shape {
            what: "graded element dimension",
            expected: a.dim_g,
            found: b.dim_g,
        });
    }
    Ok((graded_degree(p)?, graded_degree(q)?))
}

fn parity_sign(k: usize) -> Scalar {
    Scalar::sign(k)
}

fn signed(sign: i8, base: &Scalar) -> Scalar {
    if sign > 0 {
        base.clone()
    } else {
        -base
    }
}

/// The kind's composition `P ∘ Q`, of degree `p + q`.
pub fn circ(pc: &Cochain, qc: &Cochain) -> Result<Cochain> {
    let (p, q) = check_pair(pc, qc)?;
    let kind = pc.space().kind;
    let d = pc.space().dim_g;
    let out_space = CochainSpace::graded(kind, p + q, d);
    let plan = CircPlan::new(kind, p, q);
    Ok(Cochain::from_fn(out_space, |xs| {
        let mut out = vec![Scalar::zero(); d];
        plan.apply(pc, qc, xs, &mut out);
        out
    }))
}

/// Shuffles and signs for one `(kind, p, q)`, shared by all output tuples.
struct CircPlan {
    kind: AlgebraKind,
    p: usize,
    q: usize,
    /// `(outer sign, shuffle, k)` families, meaning depends on the kind
    families: Vec<(Scalar, Vec<Shuffle>, usize)>,
}

impl CircPlan {
    fn new(kind: AlgebraKind, p: usize, q: usize) -> Self {
        let mut families = Vec::new();
        match kind {
            AlgebraKind::Associative => {}
            AlgebraKind::Lie => families.push((Scalar::one(), shuffles(&[q + 1, p]), 0)),
            AlgebraKind::PreLie => {
                if p >= 1 {
                    families.push((Scalar::one(), shuffles(&[q, 1, p - 1]), 0));
                }
                families.push((parity_sign(p * q), shuffles(&[p, q]), 1));
            }
            AlgebraKind::Leibniz => {
                for k in 1..=p + 1 {
                    families.push((parity_sign((k - 1) * q), shuffles(&[k - 1, q]), k));
                }
            }
            AlgebraKind::ThreeLie => {
                for k in 1..=p {
                    families.push((parity_sign((k - 1) * q), shuffles(&[k - 1, q]), k));
                }
                families.push((parity_sign(p * q), shuffles(&[p, q]), 0));
            }
        }
        CircPlan { kind, p, q, families }
    }

    fn apply(&self, pc: &Cochain, qc: &Cochain, xs: &[usize], out: &mut [Scalar]) {
        let (p, q) = (self.p, self.q);
        let basis = |v: &[usize]| -> Vec<Arg<'static>> { v.iter().map(|&i| Arg::Basis(i)).collect() };
        let q_at = |args: &[usize]| qc.evaluate(args).expect("shape checked");
        match self.kind {
            AlgebraKind::Associative => {
                // Σ_i (-1)^{iq} P(x_0..x_{i-1}, Q(x_i..x_{i+q}), x_{i+q+1}..)
                for i in 0..=p {
                    let v = q_at(&xs[i..=i + q]);
                    let mut args = basis(&xs[..i]);
                    args.push(Arg::Vec(&v));
                    args.extend(basis(&xs[i + q + 1..]));
                    pc.accumulate(&args, &parity_sign(i * q), out);
                }
            }
            AlgebraKind::Lie => {
                let (_, shs, _) = &self.families[0];
                for sh in shs {
                    let y: Vec<usize> = sh.perm.iter().map(|&j| xs[j]).collect();
                    let v = q_at(&y[..=q]);
                    let mut args = vec![Arg::Vec(&v)];
                    args.extend(basis(&y[q + 1..]));
                    pc.accumulate(&args, &signed(sh.sign, &Scalar::one()), out);
                }
            }
            AlgebraKind::PreLie => {
                let last = xs[p + q];
                for (outer, shs, which) in &self.families {
                    for sh in shs {
                        let y: Vec<usize> = sh.perm.iter().map(|&j| xs[j]).collect();
                        let coef = signed(sh.sign, outer);
                        if *which == 0 {
                            // P(Q(y_0..y_q), y_{q+1}..y_{p+q-1}, last)
                            let v = q_at(&y[..=q]);
                            let mut args = vec![Arg::Vec(&v)];
                            args.extend(basis(&y[q + 1..]));
                            args.push(Arg::Basis(last));
                            pc.accumulate(&args, &coef, out);
                        } else {
                            // P(y_0..y_{p-1}, Q(y_p..y_{p+q-1}, last))
                            let mut qa = y[p..].to_vec();
                            qa.push(last);
                            let v = q_at(&qa);
                            let mut args = basis(&y[..p]);
                            args.push(Arg::Vec(&v));
                            pc.accumulate(&args, &coef, out);
                        }
                    }
                }
            }
            AlgebraKind::Leibniz => {
                for (outer, shs, k) in &self.families {
                    let k = *k;
                    let m = k - 1 + q;
                    for sh in shs {
                        let y: Vec<usize> = sh.perm.iter().map(|&j| xs[j]).collect();
                        let mut qa = y[k - 1..].to_vec();
                        qa.push(xs[m]);
                        let v = q_at(&qa);
                        let mut args = basis(&y[..k - 1]);
                        args.push(Arg::Vec(&v));
                        args.extend(basis(&xs[m + 1..]));
                        pc.accumulate(&args, &signed(sh.sign, outer), out);
                    }
                }
            }
            AlgebraKind::ThreeLie => self.apply_threelie(pc, qc, xs, out),
        }
    }

    fn apply_threelie(&self, pc: &Cochain, qc: &Cochain, xs: &[usize], out: &mut [Scalar]) {
        let (p, q) = (self.p, self.q);
        let pairs = p + q;
        let x_last = xs[2 * pairs];
        let pair = |i: usize| [xs[2 * i], xs[2 * i + 1]];
        let flatten = |idx: &[usize]| -> Vec<usize> { idx.iter().flat_map(|&i| pair(i)).collect() };
        let basis = |v: &[usize]| -> Vec<Arg<'static>> { v.iter().map(|&i| Arg::Basis(i)).collect() };
        for (outer, shs, k) in &self.families {
            let k = *k;
            for sh in shs {
                let coef = signed(sh.sign, outer);
                if k == 0 {
                    // P(X_σ(1..p), Q(X_σ(p+1..p+q), x))
                    let mut qa = flatten(&sh.perm[p..]);
                    qa.push(x_last);
                    let v = qc.evaluate(&qa).expect("shape checked");
                    let mut args = basis(&flatten(&sh.perm[..p]));
                    args.push(Arg::Vec(&v));
                    pc.accumulate(&args, &coef, out);
                    continue;
                }
                // X_{k+q} is the pair at 0-based position k - 1 + q
                let m = k - 1 + q;
                let [xm, ym] = pair(m);
                let head = basis(&flatten(&sh.perm[..k - 1]));
                let qprefix = flatten(&sh.perm[k - 1..]);
                let mut tail = basis(&flatten(&(m + 1..pairs).collect::<Vec<_>>()));
                tail.push(Arg::Basis(x_last));
                for (leg, other, q_first) in [(xm, ym, true), (ym, xm, false)] {
                    let mut qa = qprefix.clone();
                    qa.push(leg);
                    let v = qc.evaluate(&qa).expect("shape checked");
                    let mut args = head.clone();
                    if q_first {
                        args.push(Arg::Vec(&v));
                        args.push(Arg::Basis(other));
                    } else {
                        args.push(Arg::Basis(other));
                        args.push(Arg::Vec(&v));
                    }
                    args.extend(tail.iter().copied());
                    pc.accumulate(&args, &coef, out);
                }
            }
        }
    }
}

/// `[P, Q] = P ∘ Q - (-1)^{pq} Q ∘ P` in the kind's graded Lie algebra.
pub fn graded_bracket(p: &Cochain, q: &Cochain) -> Result<Cochain> {
    let (dp, dq) = check_pair(p, q)?;
    let pq = circ(p, q)?;
    let qp = circ(q, p)?;
    pq.sub(&qp.scale(&parity_sign(dp * dq)))
}

/// The differential of a dgLa on cochains: zero, or `[π, ·]`.
#[derive(Debug, Clone, Copy)]
pub enum Differential<'a> {
    Zero,
    Bracket(&'a Cochain),
}

/// `dx + ½[x, x]` for a degree-1 element `x`.
pub fn mc_defect(d: Differential, x: &Cochain) -> Result<Cochain> {
    let deg = graded_degree(x)?;
    if deg != 1 {
        return Err(Error::Shape {
            what: "Maurer-Cartan element degree",
            expected: 1,
            found: deg,
        });
    }
    let half = Scalar::ratio(1, 2);
    let mut defect = graded_bracket(x, x)?.scale(&half);
    if let Differential::Bracket(pi) = d {
        defect = defect.add(&graded_bracket(pi, x)?)?;
    }
    Ok(defect)
}

#[derive(Debug, Clone)]
pub struct McReport {
    pub is_mc: bool,
    pub defect: Cochain,
}

pub fn mc_check(d: Differential, x: &Cochain) -> Result<McReport> {
    let defect = mc_defect(d, x)?;
    Ok(McReport {
        is_mc: defect.is_zero(),
        defect,
    })
}

/// `d_π f = [π, f]` for a valid structure `π`.
pub fn induced_differential(pi: &Algebra, f: &Cochain) -> Result<Cochain> {
    let rep = validate_structure(pi);
    if !rep.valid {
        return Err(Error::InvalidStructure(
            "structure",
            format!("{} identity fails at {} basis tuples", pi.kind(), rep.failures),
        ));
    }
    graded_bracket(&pi.to_cochain(), f)
}

/// Compares the coboundary of `f` in the regular (adjoint) representation
/// with `(-1)^p [π, f]`, where `p` is the graded degree of `f`.
pub fn coboundary_bracket_identity(a: &Algebra, f: &Cochain) -> Result<bool> {
    if f.space().kind != a.kind() {
        return Err(Error::KindMismatch {
            expected: a.kind().to_string(),
            found: f.space().kind,
        });
    }
    let p = graded_degree(f)?;
    let r = regular_or_adjoint(a)?;
    let lhs = coboundary(&r, f)?;
    let rhs = induced_differential(a, f)?.scale(&parity_sign(p));
    Ok(lhs == rhs)
}

/// A cochain `⊗^p g → h` between two associative algebras, an element of
/// degree `p` in the morphism dga.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismCochain {
    source: Algebra,
    target: Algebra,
    cochain: Cochain,
}

impl MorphismCochain {
    pub fn new(source: Algebra, target: Algebra, degree: usize, coords: Vec<Scalar>) -> Result<Self> {
        for a in [&source, &target] {
            if a.kind() != AlgebraKind::Associative {
                return Err(Error::KindMismatch {
                    expected: AlgebraKind::Associative.to_string(),
                    found: a.kind(),
                });
            }
        }
        let space = CochainSpace::new(AlgebraKind::Associative, degree, source.dim(), target.dim())?;
        let cochain = Cochain::from_vector(space, coords)?;
        Ok(MorphismCochain {
            source,
            target,
            cochain,
        })
    }

    pub fn zero(source: Algebra, target: Algebra, degree: usize) -> Result<Self> {
        let dim = target.dim() * source.dim().pow(degree as u32);
        MorphismCochain::new(source, target, degree, vec![Scalar::zero(); dim])
    }

    /// The degree-1 cochain of a linear map given as a `dim h × dim g` matrix.
    pub fn from_linear_map(source: Algebra, target: Algebra, f: &Matrix) -> Result<Self> {
        if f.rows() != target.dim() || f.cols() != source.dim() {
            return Err(Error::Shape {
                what: "linear map matrix rows",
                expected: target.dim(),
                found: f.rows(),
            });
        }
        let coords = f.transpose().entries().to_vec();
        MorphismCochain::new(source, target, 1, coords)
    }

    pub fn degree(&self) -> usize {
        self.cochain.space().degree
    }

    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    fn with_cochain(&self, cochain: Cochain) -> MorphismCochain {
        MorphismCochain {
            source: self.source.clone(),
            target: self.target.clone(),
            cochain,
        }
    }

    pub fn add(&self, other: &MorphismCochain) -> Result<MorphismCochain> {
        self.same_algebras(other)?;
        Ok(self.with_cochain(self.cochain.add(&other.cochain)?))
    }

    pub fn scale(&self, c: &Scalar) -> MorphismCochain {
        self.with_cochain(self.cochain.scale(c))
    }

    fn same_algebras(&self, other: &MorphismCochain) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::InvalidStructure(
                "morphism cochains",
                "source or target algebras differ".into(),
            ));
        }
        Ok(())
    }
}

/// `(P ⌣ Q)(x_1..x_{p+q}) = (-1)^{pq} P(x_1..x_p) · Q(x_{p+1}..x_{p+q})`.
pub fn cup_product(pm: &MorphismCochain, qm: &MorphismCochain) -> Result<MorphismCochain> {
    pm.same_algebras(qm)?;
    let (p, q) = (pm.degree(), qm.degree());
    let h = &pm.target;
    let space = CochainSpace::new(AlgebraKind::Associative, p + q, pm.source.dim(), h.dim())?;
    let sign = parity_sign(p * q);
    let c = Cochain::from_fn(space, |xs| {
        let a = pm.cochain.evaluate(&xs[..p]).expect("shape");
        let b = qm.cochain.evaluate(&xs[p..]).expect("shape");
        h.apply(&[&a, &b]).iter().map(|x| x * &sign).collect()
    });
    Ok(pm.with_cochain(c))
}

/// `(dP)(x_1..x_{p+1}) = (-1)^p Σ_{i=1}^p (-1)^i P(.., x_i · x_{i+1}, ..)`.
pub fn morphism_differential(pm: &MorphismCochain) -> Result<MorphismCochain> {
    let p = pm.degree();
    let g = &pm.source;
    let space = CochainSpace::new(AlgebraKind::Associative, p + 1, g.dim(), pm.target.dim())?;
    let c = Cochain::from_fn(space, |xs| {
        let mut out = vec![Scalar::zero(); pm.target.dim()];
        for i in 1..=p {
            let prod = g.product(&[xs[i - 1], xs[i]]);
            let mut args: Vec<Arg> = xs[..i - 1].iter().map(|&j| Arg::Basis(j)).collect();
            args.push(Arg::Vec(prod));
            args.extend(xs[i + 1..].iter().map(|&j| Arg::Basis(j)));
            pm.cochain.accumulate(&args, &parity_sign(p + i), &mut out);
        }
        out
    });
    Ok(pm.with_cochain(c))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismReport {
    /// `df + f ⌣ f = 0`
    pub mc: bool,
    /// `f(x·y) = f(x)·f(y)` on all basis pairs
    pub direct: bool,
}

/// Decides whether a linear map `g → h` (a `dim h × dim g` matrix) is an
/// algebra morphism, both through the dga and directly.
pub fn morphism_mc_check(g: &Algebra, h: &Algebra, f: &Matrix) -> Result<MorphismReport> {
    for a in [g, h] {
        let rep = validate_structure(a);
        if a.kind() != AlgebraKind::Associative || !rep.valid {
            return Err(Error::InvalidStructure(
                "associative algebra",
                format!(
                    "{} structure of dimension {} is not a valid associative algebra",
                    a.kind(),
                    a.dim()
                ),
            ));
        }
    }
    let fm = MorphismCochain::from_linear_map(g.clone(), h.clone(), f)?;
    let mc = morphism_differential(&fm)?
        .add(&cup_product(&fm, &fm)?)?
        .cochain()
        .is_zero();
    let col = |i: usize| f.column(i);
    let direct = all_tuples(g.dim(), 2).all(|t| {
        let lhs = f.mul_vec(g.product(&t));
        let rhs = h.apply(&[&col(t[0]), &col(t[1])]);
        lhs == rhs
    });
    if mc != direct {
        return Err(Error::RouteDisagreement(format!("morphism: dga {mc}, direct {direct}")));
    }
    Ok(MorphismReport { mc, direct })
}
