//! The five coboundary operators, their matrices, and cohomology dimensions.
//!
//! Each coboundary is written once, as a list of terms `coef · A · f(args)`
//! for a fixed output tuple, where `A` is an optional action matrix. The same
//! term stream either evaluates a given cochain or fills a matrix row block.

use crate::cochains::{expand_args, Arg, Cochain, CochainSpace};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::representations::{check_representation, Representation};
use crate::structures::{validate_structure, AlgebraKind};

trait TermSink {
    fn term(&mut self, coef: &Scalar, action: Option<&Matrix>, args: &[Arg]);
}

struct EvalSink<'a> {
    f: &'a Cochain,
    out: Vec<Scalar>,
}

impl TermSink for EvalSink<'_> {
    fn term(&mut self, coef: &Scalar, action: Option<&Matrix>, args: &[Arg]) {
        match action {
            None => self.f.accumulate(args, coef, &mut self.out),
            Some(a) => {
                let v = self.f.eval(args);
                for (o, x) in self.out.iter_mut().zip(a.mul_vec(&v)) {
                    o.add_mul(coef, &x);
                }
            }
        }
    }
}

/// Accumulates the rows of one output tuple (`dim_v` rows) of a coboundary
/// matrix.
struct RowSink<'a> {
    source: &'a CochainSpace,
    rows: &'a mut [Scalar],
}

impl TermSink for RowSink<'_> {
    fn term(&mut self, coef: &Scalar, action: Option<&Matrix>, args: &[Arg]) {
        let m = self.source.dim_v;
        let cols = self.source.dim();
        let rows = &mut *self.rows;
        let source = self.source;
        expand_args(args, |t, c| {
            let Some((idx, sign)) = source.locate(t) else {
                return;
            };
            let mut k = coef * c;
            if sign < 0 {
                k = -k;
            }
            let base = idx * m;
            match action {
                None => {
                    for o in 0..m {
                        rows[o * cols + base + o] += &k;
                    }
                }
                Some(a) => {
                    for o in 0..m {
                        for i in 0..m {
                            let x = &a[(o, i)];
                            if !x.is_zero() {
                                rows[o * cols + base + i].add_mul(&k, x);
                            }
                        }
                    }
                }
            }
        });
    }
}

fn sign(k: usize) -> Scalar {
    Scalar::sign(k)
}

fn without(xs: &[usize], skip: &[usize]) -> Vec<usize> {
    xs.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, &x)| x)
        .collect()
}

fn basis_args(xs: &[usize]) -> Vec<Arg<'static>> {
    xs.iter().map(|&i| Arg::Basis(i)).collect()
}

/// Emits the terms of `(d f)(xs)` for `f` of degree `n`.
fn emit(r: &Representation, n: usize, xs: &[usize], sink: &mut impl TermSink) {
    let a = r.algebra();
    let one = Scalar::one();
    match r.kind() {
        AlgebraKind::Associative => {
            let (l, rr) = (&r.maps()[0], &r.maps()[1]);
            sink.term(&one, Some(&l[xs[0]]), &basis_args(&xs[1..]));
            for i in 1..=n {
                let prod = a.product(&[xs[i - 1], xs[i]]);
                let mut args = basis_args(&xs[..i - 1]);
                args.push(Arg::Vec(prod));
                args.extend(basis_args(&xs[i + 1..]));
                sink.term(&sign(i), None, &args);
            }
            sink.term(&sign(n + 1), Some(&rr[xs[n]]), &basis_args(&xs[..n]));
        }
        AlgebraKind::Lie => {
            let rho = &r.maps()[0];
            for i in 0..=n {
                sink.term(&sign(i), Some(&rho[xs[i]]), &basis_args(&without(xs, &[i])));
            }
            for i in 0..=n {
                for j in i + 1..=n {
                    let mut args = vec![Arg::Vec(a.product(&[xs[i], xs[j]]))];
                    args.extend(basis_args(&without(xs, &[i, j])));
                    sink.term(&sign(i + j), None, &args);
                }
            }
        }
        AlgebraKind::PreLie => {
            let (rho, mu) = (&r.maps()[0], &r.maps()[1]);
            let last = xs[n];
            for i in 0..n {
                let s = sign(i);
                sink.term(&s, Some(&rho[xs[i]]), &basis_args(&without(xs, &[i])));
                let mut moved = without(&xs[..n], &[i]);
                moved.push(xs[i]);
                sink.term(&s, Some(&mu[last]), &basis_args(&moved));
                let prod = a.product(&[xs[i], last]);
                let mut args = basis_args(&without(&xs[..n], &[i]));
                args.push(Arg::Vec(prod));
                sink.term(&-&s, None, &args);
            }
            for i in 0..n {
                for j in i + 1..n {
                    let br: Vec<Scalar> = a
                        .product(&[xs[i], xs[j]])
                        .iter()
                        .zip(a.product(&[xs[j], xs[i]]))
                        .map(|(p, q)| p - q)
                        .collect();
                    let mut args = vec![Arg::Vec(&br)];
                    args.extend(basis_args(&without(xs, &[i, j])));
                    sink.term(&sign(i + j), None, &args);
                }
            }
        }
        AlgebraKind::Leibniz => {
            let (l, rr) = (&r.maps()[0], &r.maps()[1]);
            for i in 0..n {
                sink.term(&sign(i), Some(&l[xs[i]]), &basis_args(&without(xs, &[i])));
            }
            sink.term(&sign(n + 1), Some(&rr[xs[n]]), &basis_args(&xs[..n]));
            for i in 0..=n {
                for j in i + 1..=n {
                    let mut args = basis_args(&without(&xs[..j], &[i]));
                    args.push(Arg::Vec(a.product(&[xs[i], xs[j]])));
                    args.extend(basis_args(&xs[j + 1..]));
                    sink.term(&sign(i + 1), None, &args);
                }
            }
        }
        AlgebraKind::ThreeLie => emit_threelie(r, n, xs, sink),
    }
}

fn emit_threelie(r: &Representation, n: usize, xs: &[usize], sink: &mut impl TermSink) {
    let a = r.algebra();
    let z = xs[2 * n];
    let pair = |j: usize| (xs[2 * j], xs[2 * j + 1]);
    let pairs_without = |skip: &[usize], upto: usize| -> Vec<usize> {
        (0..upto)
            .filter(|j| !skip.contains(j))
            .flat_map(|j| [xs[2 * j], xs[2 * j + 1]])
            .collect()
    };
    // Σ_{j<k} (-1)^j f(.., X̂_j, .., [X_j, X_k]_F, .., z), 1-based j
    for j in 0..n {
        let (xj, yj) = pair(j);
        for k in j + 1..n {
            let (xk, yk) = pair(k);
            let s = sign(j + 1);
            let head = basis_args(&pairs_without(&[j], k));
            let mut tail: Vec<Arg> =
                basis_args(&(k + 1..n).flat_map(|i| [xs[2 * i], xs[2 * i + 1]]).collect::<Vec<_>>());
            tail.push(Arg::Basis(z));
            let v = a.product(&[xj, yj, xk]);
            let w = a.product(&[xj, yj, yk]);
            for mid in [[Arg::Vec(v), Arg::Basis(yk)], [Arg::Basis(xk), Arg::Vec(w)]] {
                let mut args = head.clone();
                args.extend(mid);
                args.extend(tail.iter().copied());
                sink.term(&s, None, &args);
            }
        }
    }
    for j in 0..n {
        let (xj, yj) = pair(j);
        let rest = basis_args(&pairs_without(&[j], n));
        let mut args = rest.clone();
        args.push(Arg::Vec(a.product(&[xj, yj, z])));
        sink.term(&sign(j + 1), None, &args);
        if let Some((m, s)) = r.pair_action(xj, yj) {
            let mut args = rest;
            args.push(Arg::Basis(z));
            let c = if s > 0 { sign(j) } else { -sign(j) };
            sink.term(&c, Some(m), &args);
        }
    }
    let (xn, yn) = pair(n - 1);
    let head = pairs_without(&[n - 1], n);
    for (u, v, leg) in [(yn, z, xn), (z, xn, yn)] {
        if let Some((m, s)) = r.pair_action(u, v) {
            let mut args = basis_args(&head);
            args.push(Arg::Basis(leg));
            let c = if s > 0 { sign(n + 1) } else { -sign(n + 1) };
            sink.term(&c, Some(m), &args);
        }
    }
}

fn check_space(r: &Representation, sp: &CochainSpace) -> Result<()> {
    if sp.kind != r.kind() {
        return Err(Error::KindMismatch {
            expected: sp.kind.to_string(),
            found: r.kind(),
        });
    }
    if sp.dim_g != r.algebra().dim() {
        return Err(Error::Shape {
            what: "cochain algebra dimension",
            expected: r.algebra().dim(),
            found: sp.dim_g,
        });
    }
    if sp.dim_v != r.dim_v() {
        return Err(Error::Shape {
            what: "cochain module dimension",
            expected: r.dim_v(),
            found: sp.dim_v,
        });
    }
    Ok(())
}

/// The cochain space of degree `n` for a representation.
pub fn cochain_space(r: &Representation, n: usize) -> Result<CochainSpace> {
    CochainSpace::new(r.kind(), n, r.algebra().dim(), r.dim_v())
}

/// `d f` for `f ∈ C^n(g; V)`.
pub fn coboundary(r: &Representation, f: &Cochain) -> Result<Cochain> {
    let sp = *f.space();
    check_space(r, &sp)?;
    let target = cochain_space(r, sp.degree + 1)?;
    let n = sp.degree;
    Ok(Cochain::from_fn(target, |xs| {
        let mut sink = EvalSink {
            f,
            out: vec![Scalar::zero(); sp.dim_v],
        };
        emit(r, n, xs, &mut sink);
        sink.out
    }))
}

/// Matrix of `d : C^n → C^{n+1}`; column `k` is `d` of the `k`-th basis
/// cochain.
pub fn coboundary_matrix(r: &Representation, n: usize) -> Result<Matrix> {
    let source = cochain_space(r, n)?;
    let target = cochain_space(r, n + 1)?;
    let m = r.dim_v();
    let cols = source.dim();
    let mut entries = vec![Scalar::zero(); target.dim() * cols];
    for (ti, xs) in target.tuples().iter().enumerate() {
        let block = &mut entries[ti * m * cols..(ti + 1) * m * cols];
        let mut sink = RowSink {
            source: &source,
            rows: block,
        };
        emit(r, n, xs, &mut sink);
    }
    Ok(Matrix::from_entries(target.dim(), cols, entries))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeDims {
    pub degree: usize,
    pub dim_c: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub kind: AlgebraKind,
    pub degrees: Vec<DegreeDims>,
}

impl CohomologyReport {
    pub fn h(&self, n: usize) -> Option<usize> {
        self.degrees.iter().find(|d| d.degree == n).map(|d| d.dim_h)
    }
}

/// Default top degree: past the wedge capacity of lie and prelie complexes
/// they vanish; tensor complexes are cut at 4, the 3-Lie complex at 3.
pub fn default_max_degree(kind: AlgebraKind, dim: usize) -> usize {
    match kind {
        AlgebraKind::Lie => dim,
        AlgebraKind::PreLie => dim + 1,
        AlgebraKind::ThreeLie => 3,
        _ => 4,
    }
}

/// `dim Z^n`, `dim B^n` and `dim H^n` from the first degree of the complex up
/// to `max_degree`. Every composite `d_{n+1} ∘ d_n` that is formed is checked
/// to vanish; a nonzero composite is reported as an error.
pub fn cohomology_dims(r: &Representation, max_degree: usize) -> Result<CohomologyReport> {
    let alg = validate_structure(r.algebra());
    if !alg.valid {
        return Err(Error::InvalidStructure(
            "algebra",
            format!("{} identity fails at {} basis tuples", r.kind(), alg.failures),
        ));
    }
    let rep = check_representation(r);
    if !rep.valid {
        return Err(Error::InvalidStructure(
            "representation",
            format!("{} identities fail at {} basis tuples", r.kind(), rep.failures),
        ));
    }
    let first = CochainSpace::first_degree(r.kind());
    if max_degree < first {
        return Err(Error::DegreeOutOfRange {
            kind: r.kind(),
            degree: max_degree,
        });
    }
    let mut prev: Option<(Matrix, usize)> = None;
    let mut degrees = Vec::new();
    for n in first..=max_degree {
        let d = coboundary_matrix(r, n)?;
        if let Some((before, _)) = &prev {
            if !d.mul(before).is_zero() {
                return Err(Error::NonzeroSquare(n - 1, n + 1));
            }
        }
        let (rank, nullity) = d.rank_nullity();
        let dim_b = prev.as_ref().map_or(0, |(_, r)| *r);
        degrees.push(DegreeDims {
            degree: n,
            dim_c: d.cols(),
            dim_z: nullity,
            dim_b,
            dim_h: nullity - dim_b,
        });
        prev = Some((d, rank));
    }
    Ok(CohomologyReport {
        kind: r.kind(),
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::regular_or_adjoint;
    use crate::samples;
    use crate::structures::Algebra;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn hs(r: &CohomologyReport) -> Vec<usize> {
        r.degrees.iter().map(|d| d.dim_h).collect()
    }

    #[test]
    fn abelian_line() {
        let a = Algebra::zero(AlgebraKind::Lie, 1);
        let r = regular_or_adjoint(&a).unwrap();
        assert_eq!(hs(&cohomology_dims(&r, 3).unwrap()), vec![1, 1, 0, 0]);
    }

    #[test]
    fn aff1_adjoint() {
        let r = regular_or_adjoint(&samples::aff1()).unwrap();
        let rep = cohomology_dims(&r, 2).unwrap();
        assert_eq!(hs(&rep), vec![0, 0, 0]);
        let d0 = coboundary_matrix(&r, 0).unwrap();
        assert_eq!((d0.rows(), d0.cols(), d0.rank()), (4, 2, 2));
    }

    #[test]
    fn dual_numbers_regular() {
        let r = regular_or_adjoint(&samples::dual_numbers()).unwrap();
        assert_eq!(hs(&cohomology_dims(&r, 3).unwrap()), vec![2, 1, 1, 1]);
    }

    #[test]
    fn lie_degree_zero_is_action() {
        // (d e1)(x) = [x, e1]
        let r = regular_or_adjoint(&samples::aff1()).unwrap();
        let f = Cochain::basis(cochain_space(&r, 0).unwrap(), 0);
        let df = coboundary(&r, &f).unwrap();
        assert_eq!(df.evaluate(&[0]).unwrap(), vec![s(0), s(0)]);
        assert_eq!(df.evaluate(&[1]).unwrap(), vec![s(-1), s(0)]);
    }

    #[test]
    fn hochschild_of_identity_is_product() {
        let a = samples::dual_numbers();
        let r = regular_or_adjoint(&a).unwrap();
        let sp = cochain_space(&r, 1).unwrap();
        let id = Cochain::from_fn(sp, |t| (0..2).map(|i| if i == t[0] { s(1) } else { s(0) }).collect());
        let d = coboundary(&r, &id).unwrap();
        assert_eq!(
            d,
            Cochain::from_fn(cochain_space(&r, 2).unwrap(), |t| a.product(t).to_vec())
        );
    }

    #[test]
    fn threelie_zero_rep_degree_one() {
        let a = samples::threelie_e1();
        let r = Representation::zero(a.clone(), 1);
        let sp = cochain_space(&r, 1).unwrap();
        // f(e1) = 1, f(e2) = 2, f(e3) = 3
        let f = Cochain::from_vector(sp, vec![s(1), s(2), s(3)]).unwrap();
        let df = coboundary(&r, &f).unwrap();
        for t in df.space().tuples() {
            let want = -f.eval(&[Arg::Vec(a.product(&t))])[0].clone();
            assert_eq!(df.evaluate(&t).unwrap(), vec![want]);
        }
    }

    #[test]
    fn matrix_columns_match_coboundary() {
        for a in samples::named_algebras() {
            let r = regular_or_adjoint(&a).unwrap();
            let n = CochainSpace::first_degree(a.kind()) + 1;
            let m = coboundary_matrix(&r, n).unwrap();
            let sp = cochain_space(&r, n).unwrap();
            for k in 0..sp.dim() {
                let col = coboundary(&r, &Cochain::basis(sp, k)).unwrap();
                assert_eq!(m.column(k), col.to_vector(), "{} column {k}", a.kind());
            }
        }
    }

    #[test]
    fn zero_algebra_zero_rep() {
        for kind in AlgebraKind::ALL {
            let r = Representation::zero(Algebra::zero(kind, 2), 2);
            let first = CochainSpace::first_degree(kind);
            assert!(coboundary_matrix(&r, first).unwrap().is_zero());
            let rep = cohomology_dims(&r, first + 2).unwrap();
            for d in rep.degrees {
                assert_eq!(d.dim_h, d.dim_c, "{kind}");
            }
        }
    }

    #[test]
    fn kernel_count_agrees_with_nullity() {
        let r = regular_or_adjoint(&samples::nonlie_leibniz()).unwrap();
        let rep = cohomology_dims(&r, 3).unwrap();
        for d in &rep.degrees {
            let dm = coboundary_matrix(&r, d.degree).unwrap();
            assert_eq!(dm.kernel_basis().len(), d.dim_z);
        }
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let r = regular_or_adjoint(&samples::aff1()).unwrap();
        let mut bad = r.maps()[0].clone();
        bad[0][(0, 0)] += s(1);
        let bad = r.with_map(0, bad).unwrap();
        assert!(cohomology_dims(&bad, 2).is_err());
        let p = Representation::zero(samples::unit_prelie(), 1);
        assert!(matches!(cohomology_dims(&p, 0), Err(Error::DegreeOutOfRange { .. })));
    }
}
