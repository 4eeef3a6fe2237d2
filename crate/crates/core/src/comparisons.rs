//! The cochain maps Φ from the pre-Lie and 3-Lie complexes to complexes with
//! coefficients in `Hom(g, V)`, and the graded Lie homomorphism Ψ from 3-Lie
//! cochains to Leibniz cochains on `∧²g`.

use crate::cochains::{Cochain, CochainSpace};
use crate::cohomology::{coboundary, cochain_space, cohomology_dims};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::representations::{hom_coefficient_rep, Representation};
use crate::structures::{wedge2_basis, wedge_vec_basis, AlgebraKind};

fn expect_kind(kind: AlgebraKind, found: AlgebraKind) -> Result<()> {
    if kind != found {
        return Err(Error::KindMismatch {
            expected: kind.to_string(),
            found,
        });
    }
    Ok(())
}

fn expect_space(what: &'static str, want: &CochainSpace, got: &CochainSpace) -> Result<()> {
    expect_kind(want.kind, got.kind)?;
    for (e, f) in [(want.dim_g, got.dim_g), (want.dim_v, got.dim_v)] {
        if e != f {
            return Err(Error::Shape {
                what,
                expected: e,
                found: f,
            });
        }
    }
    Ok(())
}

/// `Φ(f)(x1, .., x_{n-1}, y) = f(x1, .., x_{n-1})(y)` for
/// `f ∈ C^{n-1}(g^c; Hom(g, V))`; the result lies in `C^n_prelie(g; V)`.
pub fn phi_prelie(r: &Representation, f: &Cochain) -> Result<Cochain> {
    expect_kind(AlgebraKind::PreLie, r.kind())?;
    let d = r.algebra().dim();
    let m = r.dim_v();
    let src = CochainSpace::new(AlgebraKind::Lie, f.space().degree, d, d * m)?;
    expect_space("Hom(g, V)-valued cochain", &src, f.space())?;
    let target = cochain_space(r, f.space().degree + 1)?;
    Ok(Cochain::from_fn(target, |t| {
        let (xs, y) = t.split_at(t.len() - 1);
        let v = f.evaluate(xs).expect("arity checked");
        v[y[0] * m..(y[0] + 1) * m].to_vec()
    }))
}

/// `Φ(f)(X1, .., X_{n-1})(x) = f(X1, .., X_{n-1}, x)` for
/// `f ∈ C^n_3lie(g; V)`; the result lies in `C^{n-1}(∧²g; Hom(g, V))` with
/// `∧²g` indexed by its increasing basis.
pub fn phi_threelie(r: &Representation, f: &Cochain) -> Result<Cochain> {
    expect_kind(AlgebraKind::ThreeLie, r.kind())?;
    expect_space("3-Lie cochain", &cochain_space(r, f.space().degree)?, f.space())?;
    let d = r.algebra().dim();
    let m = r.dim_v();
    let pairs = wedge2_basis(d);
    let target = CochainSpace::new(AlgebraKind::Leibniz, f.space().degree - 1, pairs.len(), d * m)?;
    Ok(Cochain::from_fn(target, |t| {
        let mut args: Vec<usize> = t.iter().flat_map(|&w| [pairs[w].0, pairs[w].1]).collect();
        args.push(0);
        let last = args.len() - 1;
        (0..d)
            .flat_map(|x| {
                args[last] = x;
                f.evaluate(&args).expect("arity checked")
            })
            .collect()
    }))
}

/// `Ψ(P)(X1, .., X_p, x∧y) = P(X1, .., X_p, x)∧y + x∧P(X1, .., X_p, y)` for
/// `P` of graded degree `p` in the 3-Lie graded Lie algebra on `g`.
pub fn psi(p: &Cochain) -> Result<Cochain> {
    let sp = p.space();
    expect_kind(AlgebraKind::ThreeLie, sp.kind)?;
    let d = sp.dim_g;
    let deg = sp.graded_degree().filter(|_| sp.dim_v == d).ok_or(Error::Shape {
        what: "graded element (dim V = dim g, degree >= 1)",
        expected: d,
        found: sp.dim_v,
    })?;
    let pairs = wedge2_basis(d);
    let target = CochainSpace::graded(AlgebraKind::Leibniz, deg, pairs.len());
    let one = Scalar::one();
    Ok(Cochain::from_fn(target, |t| {
        let mut args: Vec<usize> = t[..deg].iter().flat_map(|&w| [pairs[w].0, pairs[w].1]).collect();
        let (x, y) = pairs[t[deg]];
        args.push(x);
        let px = p.evaluate(&args).expect("arity checked");
        *args.last_mut().unwrap() = y;
        let py = p.evaluate(&args).expect("arity checked");
        let mut out = vec![Scalar::zero(); pairs.len()];
        wedge_vec_basis(d, &px, y, &one, &mut out);
        wedge_vec_basis(d, &py, x, &-&one, &mut out);
        out
    }))
}

/// Matrix of a linear map on cochains, column `k` the image of basis `k`.
fn map_matrix(source: CochainSpace, map: impl Fn(&Cochain) -> Result<Cochain>) -> Result<Matrix> {
    let cols: Vec<Vec<Scalar>> = (0..source.dim())
        .map(|k| map(&Cochain::basis(source, k)).map(Cochain::into_vector))
        .collect::<Result<_>>()?;
    let rows = match cols.first() {
        Some(c) => c.len(),
        None => map(&Cochain::zero(source))?.coords().len(),
    };
    let mut m = Matrix::zeros(rows, cols.len());
    for (j, c) in cols.into_iter().enumerate() {
        for (i, x) in c.into_iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeComparison {
    /// Degree in the source (pre-Lie or 3-Lie) complex.
    pub degree: usize,
    pub square_commutes: bool,
    pub bijective: bool,
    /// `(dim H^n source, dim H^{n-1} target)`
    pub iso_dims: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub kind: AlgebraKind,
    pub degrees: Vec<DegreeComparison>,
}

impl ComparisonReport {
    pub fn holds(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| d.square_commutes && d.bijective && d.iso_dims.0 == d.iso_dims.1)
    }
}

/// Checks the commuting square `d ∘ Φ = Φ ∘ d` on every basis cochain, the
/// bijectivity of Φ and the paired cohomology dimensions for degrees
/// `first..=max_degree` of the pre-Lie or 3-Lie complex.
pub fn compare(r: &Representation, max_degree: usize) -> Result<ComparisonReport> {
    let kind = r.kind();
    if !matches!(kind, AlgebraKind::PreLie | AlgebraKind::ThreeLie) {
        return Err(Error::KindMismatch {
            expected: "prelie or 3lie".into(),
            found: kind,
        });
    }
    let hom = hom_coefficient_rep(r)?;
    let first = CochainSpace::first_degree(kind);
    let source = cohomology_dims(r, max_degree)?;
    let target = cohomology_dims(&hom, max_degree - 1)?;
    let mut degrees = Vec::new();
    for n in first..=max_degree {
        let (square_commutes, bijective) = match kind {
            AlgebraKind::PreLie => {
                let sp = cochain_space(&hom, n - 1)?;
                let square = (0..sp.dim()).try_fold(true, |ok, k| -> Result<bool> {
                    let f = Cochain::basis(sp, k);
                    let a = coboundary(r, &phi_prelie(r, &f)?)?;
                    let b = phi_prelie(r, &coboundary(&hom, &f)?)?;
                    Ok(ok && a == b)
                })?;
                let m = map_matrix(sp, |f| phi_prelie(r, f))?;
                (square, m.rows() == m.cols() && m.rank() == m.cols())
            }
            _ => {
                let sp = cochain_space(r, n)?;
                let square = (0..sp.dim()).try_fold(true, |ok, k| -> Result<bool> {
                    let f = Cochain::basis(sp, k);
                    let a = coboundary(&hom, &phi_threelie(r, &f)?)?;
                    let b = phi_threelie(r, &coboundary(r, &f)?)?;
                    Ok(ok && a == b)
                })?;
                let m = map_matrix(sp, |f| phi_threelie(r, f))?;
                (square, m.rows() == m.cols() && m.rank() == m.cols())
            }
        };
        degrees.push(DegreeComparison {
            degree: n,
            square_commutes,
            bijective,
            iso_dims: (source.h(n).unwrap_or(0), target.h(n - 1).unwrap_or(0)),
        });
    }
    Ok(ComparisonReport { kind, degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::graded_bracket;
    use crate::representations::regular_or_adjoint;
    use crate::samples;
    use crate::structures::fundamental_leibniz;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn degree_one_is_identification() {
        let r = regular_or_adjoint(&samples::aff1_prelie()).unwrap();
        let hom = hom_coefficient_rep(&r).unwrap();
        let f = Cochain::from_vector(cochain_space(&hom, 0).unwrap(), (1..=4).map(s).collect()).unwrap();
        let g = phi_prelie(&r, &f).unwrap();
        assert_eq!(g.coords(), f.coords());
        let t = regular_or_adjoint(&samples::threelie_e1()).unwrap();
        let f = Cochain::from_vector(cochain_space(&t, 1).unwrap(), (1..=9).map(s).collect()).unwrap();
        assert_eq!(phi_threelie(&t, &f).unwrap().coords(), f.coords());
    }

    #[test]
    fn prelie_square_and_iso() {
        let r = regular_or_adjoint(&samples::aff1_prelie()).unwrap();
        let rep = compare(&r, 2).unwrap();
        assert!(rep.holds(), "{rep:?}");
    }

    #[test]
    fn threelie_square_and_iso() {
        let r = regular_or_adjoint(&samples::threelie_e1()).unwrap();
        let rep = compare(&r, 2).unwrap();
        assert!(rep.holds(), "{rep:?}");
    }

    #[test]
    fn psi_of_structure_is_fundamental_bracket() {
        for a in [samples::threelie_e1(), samples::threelie_a4()] {
            let lhs = psi(&a.to_cochain()).unwrap();
            assert_eq!(lhs, fundamental_leibniz(&a).unwrap().to_cochain());
        }
    }

    #[test]
    fn psi_of_zero_and_degree_zero() {
        let z = Cochain::zero(CochainSpace::graded(AlgebraKind::ThreeLie, 1, 3));
        assert!(psi(&z).unwrap().is_zero());
        // P = id on g gives Ψ(P)(x∧y) = 2 x∧y
        let id = Cochain::from_fn(CochainSpace::graded(AlgebraKind::ThreeLie, 0, 3), |t| {
            (0..3).map(|i| s((i == t[0]) as i64)).collect()
        });
        let p = psi(&id).unwrap();
        assert!(p
            .coords()
            .chunks(3)
            .enumerate()
            .all(|(w, c)| (0..3).all(|k| c[k] == s(2 * (k == w) as i64))));
    }

    #[test]
    fn psi_is_homomorphism_on_structure() {
        let pi = samples::threelie_a4().to_cochain();
        let lhs = psi(&graded_bracket(&pi, &pi).unwrap()).unwrap();
        let rhs = graded_bracket(&psi(&pi).unwrap(), &psi(&pi).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(lhs.is_zero());
    }

    #[test]
    fn wrong_kinds_rejected() {
        let r = regular_or_adjoint(&samples::aff1()).unwrap();
        assert!(compare(&r, 2).is_err());
        assert!(psi(&samples::aff1().to_cochain()).is_err());
    }
}
