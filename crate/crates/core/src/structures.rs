//! Algebras given by structure constants, their defining identities, and the
//! two derived structures: the commutator Lie algebra of a pre-Lie algebra and
//! the Leibniz algebra on `∧²g` of a 3-Lie algebra.

use std::fmt;
use std::str::FromStr;

use crate::cochains::{Cochain, CochainSpace};
use crate::combinatorics::{binomial, combinations, normalize_wedge, wedge_rank};
use crate::error::{Error, Result};
use crate::linalg::Scalar;

/// Default number of failing tuples kept in a [`ValidationReport`].
pub const DEFAULT_WITNESS_CAP: usize = 16;

/// `(inputs, [(output index, coefficient)])` with integer coefficients.
pub type IntProduct<'a> = (&'a [usize], &'a [(usize, i64)]);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    Associative,
    Lie,
    PreLie,
    Leibniz,
    ThreeLie,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 5] = [
        AlgebraKind::Associative,
        AlgebraKind::Lie,
        AlgebraKind::PreLie,
        AlgebraKind::Leibniz,
        AlgebraKind::ThreeLie,
    ];

    /// Number of inputs of the defining operation.
    pub fn arity(self) -> usize {
        match self {
            AlgebraKind::ThreeLie => 3,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Associative => "associative",
            AlgebraKind::Lie => "lie",
            AlgebraKind::PreLie => "prelie",
            AlgebraKind::Leibniz => "leibniz",
            AlgebraKind::ThreeLie => "3lie",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        AlgebraKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kind {s:?}"))
    }
}

/// A finite-dimensional algebra: a kind tag plus the dense tensor of structure
/// constants on the standard basis `e_0, ..., e_{dim-1}`.
///
/// For binary kinds `constants[(i*dim + j)*dim + k]` is the `e_k` coefficient
/// of `e_i ∘ e_j`; for 3-Lie algebras `constants[((i*dim + j)*dim + k)*dim + l]`
/// is the `e_l` coefficient of `[e_i, e_j, e_k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    kind: AlgebraKind,
    dim: usize,
    constants: Vec<Scalar>,
}

impl Algebra {
    /// Rejects wrong lengths and, for Lie and 3-Lie algebras, constants that
    /// are not skew-symmetric in their inputs.
    pub fn new(kind: AlgebraKind, dim: usize, constants: Vec<Scalar>) -> Result<Self> {
        let expected = dim.pow(kind.arity() as u32 + 1);
        if constants.len() != expected {
            return Err(Error::Shape {
                what: "structure constants",
                expected,
                found: constants.len(),
            });
        }
        let a = Algebra { kind, dim, constants };
        a.check_skew()?;
        Ok(a)
    }

    pub fn zero(kind: AlgebraKind, dim: usize) -> Self {
        Algebra {
            kind,
            dim,
            constants: vec![Scalar::zero(); dim.pow(kind.arity() as u32 + 1)],
        }
    }

    /// Builds an algebra from `(inputs, output vector)` pairs; unspecified
    /// products are zero. For Lie and 3-Lie algebras only increasing input
    /// tuples may be given and the rest is filled in by skew-symmetry.
    pub fn from_products<I>(kind: AlgebraKind, dim: usize, products: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<Scalar>)>,
    {
        let mut a = Algebra::zero(kind, dim);
        let skew = matches!(kind, AlgebraKind::Lie | AlgebraKind::ThreeLie);
        for (inputs, out) in products {
            if inputs.len() != kind.arity() {
                return Err(Error::Shape {
                    what: "product inputs",
                    expected: kind.arity(),
                    found: inputs.len(),
                });
            }
            if out.len() != dim {
                return Err(Error::Shape {
                    what: "product output",
                    expected: dim,
                    found: out.len(),
                });
            }
            if let Some(&bad) = inputs.iter().find(|&&i| i >= dim) {
                return Err(Error::InvalidStructure(
                    "product inputs",
                    format!("basis index {} out of range", bad + 1),
                ));
            }
            if skew {
                if !inputs.windows(2).all(|w| w[0] < w[1]) {
                    return Err(Error::NotSkew(kind, inputs));
                }
                for perm in permutations(&inputs) {
                    let (_, sign) = normalize_wedge(&perm).expect("distinct");
                    let base = a.offset(&perm);
                    for (k, x) in out.iter().enumerate() {
                        a.constants[base + k] = if sign > 0 { x.clone() } else { -x };
                    }
                }
            } else {
                let base = a.offset(&inputs);
                a.constants[base..base + dim].clone_from_slice(&out);
            }
        }
        Ok(a)
    }

    /// Integer-valued convenience constructor used by fixtures and tests.
    pub fn from_int_products(kind: AlgebraKind, dim: usize, products: &[IntProduct]) -> Result<Self> {
        Self::from_products(
            kind,
            dim,
            products.iter().map(|(inputs, out)| {
                let mut v = vec![Scalar::zero(); dim];
                for &(k, c) in out.iter() {
                    v[k] += Scalar::from_int(c);
                }
                (inputs.to_vec(), v)
            }),
        )
    }

    fn check_skew(&self) -> Result<()> {
        if !matches!(self.kind, AlgebraKind::Lie | AlgebraKind::ThreeLie) {
            return Ok(());
        }
        let n = self.kind.arity();
        for tuple in all_tuples(self.dim, n) {
            let out = self.product(&tuple);
            match normalize_wedge(&tuple) {
                None => {
                    if out.iter().any(|x| !x.is_zero()) {
                        return Err(Error::NotSkew(self.kind, tuple));
                    }
                }
                Some((w, sign)) => {
                    let canon = self.product(w.indices());
                    let ok = out
                        .iter()
                        .zip(canon)
                        .all(|(x, c)| if sign > 0 { x == c } else { *x == -c });
                    if !ok {
                        return Err(Error::NotSkew(self.kind, tuple));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.constants
    }

    fn offset(&self, inputs: &[usize]) -> usize {
        inputs.iter().fold(0, |acc, &i| acc * self.dim + i) * self.dim
    }

    /// Output vector of the operation on basis inputs.
    pub fn product(&self, inputs: &[usize]) -> &[Scalar] {
        debug_assert_eq!(inputs.len(), self.kind.arity());
        let base = self.offset(inputs);
        &self.constants[base..base + self.dim]
    }

    /// The operation applied to arbitrary (dense) vectors, by multilinearity.
    pub fn apply(&self, args: &[&[Scalar]]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.kind.arity());
        let mut out = vec![Scalar::zero(); self.dim];
        let mut idx = vec![0; args.len()];
        self.apply_rec(args, 0, Scalar::one(), &mut idx, &mut out);
        out
    }

    fn apply_rec(&self, args: &[&[Scalar]], pos: usize, coef: Scalar, idx: &mut Vec<usize>, out: &mut [Scalar]) {
        if pos == args.len() {
            for (o, c) in out.iter_mut().zip(self.product(idx)) {
                o.add_mul(&coef, c);
            }
            return;
        }
        for (i, x) in args[pos].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            idx[pos] = i;
            self.apply_rec(args, pos + 1, &coef * x, idx, out);
        }
    }

    /// Sum of the two operations; both must have the same kind and dimension.
    pub fn add(&self, other: &Algebra) -> Result<Algebra> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch {
                expected: self.kind.to_string(),
                found: other.kind,
            });
        }
        if self.dim != other.dim {
            return Err(Error::Shape {
                what: "algebra dimension",
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(Algebra {
            kind: self.kind,
            dim: self.dim,
            constants: self
                .constants
                .iter()
                .zip(&other.constants)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// The operation as a degree-1 element of the kind's graded Lie algebra.
    pub fn to_cochain(&self) -> Cochain {
        let space = CochainSpace::graded(self.kind, 1, self.dim);
        Cochain::from_fn(space, |t| self.product(t).to_vec())
    }

    /// Reads a degree-1 graded element back as structure constants. For 3-Lie
    /// algebras the element must be totally skew.
    pub fn from_cochain(c: &Cochain) -> Result<Algebra> {
        let sp = c.space();
        if sp.graded_degree() != Some(1) || sp.dim_g != sp.dim_v {
            return Err(Error::Shape {
                what: "structure cochain degree",
                expected: 1,
                found: sp.graded_degree().unwrap_or(0),
            });
        }
        let constants = all_tuples(sp.dim_g, sp.arity())
            .flat_map(|t| c.evaluate(&t).expect("arity matches"))
            .collect();
        Algebra::new(sp.kind, sp.dim_g, constants)
    }

    /// Same constants read as a different kind. Skew-symmetry is rechecked.
    pub fn with_kind(&self, kind: AlgebraKind) -> Result<Algebra> {
        Algebra::new(kind, self.dim, self.constants.clone())
    }
}

/// Every tuple in `0..dim` of length `n`, lexicographic.
pub(crate) fn all_tuples(dim: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = code % dim;
            code /= dim;
        }
        t
    })
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// A basis tuple at which a defining identity fails, with the nonzero defect
/// (a vector, or a flattened matrix for representation identities).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub identity: &'static str,
    pub args: Vec<usize>,
    pub defect: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    /// total number of failing tuples, possibly more than `witnesses.len()`
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

/// Accumulates failing tuples up to a cap.
#[derive(Debug)]
pub(crate) struct WitnessLog {
    cap: usize,
    failures: usize,
    witnesses: Vec<Witness>,
}

impl WitnessLog {
    pub(crate) fn new(cap: usize) -> Self {
        WitnessLog {
            cap: cap.max(1),
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    pub(crate) fn check(&mut self, identity: &'static str, args: &[usize], defect: Vec<Scalar>) {
        if defect.iter().all(Scalar::is_zero) {
            return;
        }
        self.failures += 1;
        if self.witnesses.len() < self.cap {
            self.witnesses.push(Witness {
                identity,
                args: args.to_vec(),
                defect,
            });
        }
    }

    pub(crate) fn finish(self) -> ValidationReport {
        ValidationReport {
            valid: self.failures == 0,
            failures: self.failures,
            witnesses: self.witnesses,
        }
    }
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

pub fn validate_structure(a: &Algebra) -> ValidationReport {
    validate_structure_capped(a, DEFAULT_WITNESS_CAP)
}

/// Checks the kind's defining identity on every basis tuple.
pub fn validate_structure_capped(a: &Algebra, cap: usize) -> ValidationReport {
    let d = a.dim;
    let mut log = WitnessLog::new(cap);
    let e: Vec<Vec<Scalar>> = (0..d).map(|i| unit(d, i)).collect();
    let op = |x: &[Scalar], y: &[Scalar]| a.apply(&[x, y]);
    match a.kind {
        AlgebraKind::Associative => {
            for t in all_tuples(d, 3) {
                let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
                let lhs = op(&op(x, y), z);
                let rhs = op(x, &op(y, z));
                log.check("associativity", &t, sub(&lhs, &rhs));
            }
        }
        AlgebraKind::Lie => {
            for t in all_tuples(d, 3) {
                let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
                let s = add(&add(&op(x, &op(y, z)), &op(y, &op(z, x))), &op(z, &op(x, y)));
                log.check("jacobi", &t, s);
            }
        }
        AlgebraKind::PreLie => {
            let assoc = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| sub(&op(&op(x, y), z), &op(x, &op(y, z)));
            for t in all_tuples(d, 3) {
                let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
                log.check("left-symmetry", &t, sub(&assoc(x, y, z), &assoc(y, x, z)));
            }
        }
        AlgebraKind::Leibniz => {
            for t in all_tuples(d, 3) {
                let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
                let lhs = op(x, &op(y, z));
                let rhs = add(&op(&op(x, y), z), &op(y, &op(x, z)));
                log.check("leibniz", &t, sub(&lhs, &rhs));
            }
        }
        AlgebraKind::ThreeLie => {
            let br = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| a.apply(&[x, y, z]);
            for t in all_tuples(d, 5) {
                let [x1, x2, x3, x4, x5] = [&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]], &e[t[4]]];
                let mut f = br(x1, x2, &br(x3, x4, x5));
                f = sub(&f, &br(&br(x1, x2, x3), x4, x5));
                f = sub(&f, &br(x3, &br(x1, x2, x4), x5));
                f = sub(&f, &br(x3, x4, &br(x1, x2, x5)));
                log.check("fundamental identity", &t, f);
            }
        }
    }
    log.finish()
}

/// The commutator Lie algebra `[x, y] = x·y - y·x` of a pre-Lie algebra.
pub fn subadjacent_lie(a: &Algebra) -> Result<Algebra> {
    if a.kind != AlgebraKind::PreLie {
        return Err(Error::KindMismatch {
            expected: AlgebraKind::PreLie.to_string(),
            found: a.kind,
        });
    }
    let d = a.dim;
    let mut constants = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            let (xy, yx) = (a.product(&[i, j]), a.product(&[j, i]));
            constants.extend(xy.iter().zip(yx).map(|(p, q)| p - q));
        }
    }
    Algebra::new(AlgebraKind::Lie, d, constants)
}

/// Basis of `∧²g` in lexicographic order of increasing pairs.
pub fn wedge2_basis(dim: usize) -> Vec<(usize, usize)> {
    combinations(dim, 2).into_iter().map(|c| (c[0], c[1])).collect()
}

/// Index of `e_a ∧ e_b` (any order) in [`wedge2_basis`], with the sign of the
/// reordering; `None` when `a == b`.
pub fn wedge2_index(dim: usize, a: usize, b: usize) -> Option<(usize, i8)> {
    use std::cmp::Ordering::*;
    match a.cmp(&b) {
        Less => Some((wedge_rank(&[a, b], dim), 1)),
        Greater => Some((wedge_rank(&[b, a], dim), -1)),
        Equal => None,
    }
}

/// `v ∧ e_b` in the basis of `∧²g`, accumulated into `out` with factor `coef`.
pub(crate) fn wedge_vec_basis(dim: usize, v: &[Scalar], b: usize, coef: &Scalar, out: &mut [Scalar]) {
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if let Some((idx, sign)) = wedge2_index(dim, k, b) {
            let c = x * coef;
            if sign > 0 {
                out[idx] += c;
            } else {
                out[idx] -= c;
            }
        }
    }
}

/// The Leibniz algebra on the fundamental objects `∧²g` of a 3-Lie algebra:
/// `[x1∧x2, y1∧y2] = [x1,x2,y1]∧y2 + y1∧[x1,x2,y2]`.
pub fn fundamental_leibniz(a: &Algebra) -> Result<Algebra> {
    if a.kind != AlgebraKind::ThreeLie {
        return Err(Error::KindMismatch {
            expected: AlgebraKind::ThreeLie.to_string(),
            found: a.kind,
        });
    }
    let d = a.dim;
    let basis = wedge2_basis(d);
    let n = binomial(d, 2);
    let mut constants = Vec::with_capacity(n * n * n);
    let one = Scalar::one();
    let minus = Scalar::from_int(-1);
    for &(x1, x2) in &basis {
        for &(y1, y2) in &basis {
            let mut out = vec![Scalar::zero(); n];
            wedge_vec_basis(d, a.product(&[x1, x2, y1]), y2, &one, &mut out);
            // y1 ∧ v = -(v ∧ y1)
            wedge_vec_basis(d, a.product(&[x1, x2, y2]), y1, &minus, &mut out);
            constants.extend(out);
        }
    }
    Algebra::new(AlgebraKind::Leibniz, n, constants)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn named_examples_validate() {
        assert!(validate_structure(&samples::dual_numbers()).valid);
        assert!(validate_structure(&samples::aff1()).valid);
        assert!(validate_structure(&samples::unit_prelie()).valid);
        let leib = samples::nonlie_leibniz();
        assert!(validate_structure(&leib).valid);
        // not skew: [e2, e2] = e1 is nonzero
        assert!(leib.product(&[1, 1]).iter().any(|x| !x.is_zero()));
        assert!(validate_structure(&samples::threelie_e1()).valid);
    }

    #[test]
    fn brute_force_oracle_agrees_on_dual_numbers() {
        // all 8 triples by hand: e1 unit, e2^2 = 0
        let a = samples::dual_numbers();
        let mul = |i: usize, j: usize| -> Option<usize> {
            match (i, j) {
                (0, k) | (k, 0) => Some(k),
                _ => None,
            }
        };
        for t in all_tuples(2, 3) {
            let lhs = mul(t[0], t[1]).and_then(|p| mul(p, t[2]));
            let rhs = mul(t[1], t[2]).and_then(|p| mul(t[0], p));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(validate_structure(&a).failures, 0);
    }

    #[test]
    fn skew_storage_is_enforced() {
        let bad = Algebra::new(
            AlgebraKind::Lie,
            1,
            vec![Scalar::one()], // [e1, e1] = e1
        );
        assert!(matches!(bad, Err(Error::NotSkew(..))));
        let bad = Algebra::from_int_products(AlgebraKind::Lie, 2, &[(&[1, 0], &[(0, 1)])]);
        assert!(bad.is_err());
        let a = samples::aff1();
        assert_eq!(a.product(&[1, 0]), &[Scalar::from_int(-1), Scalar::zero()]);
    }

    #[test]
    fn broken_jacobi_reports_witnesses() {
        // [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1 fails Jacobi
        let a = Algebra::from_int_products(
            AlgebraKind::Lie,
            3,
            &[(&[0, 1], &[(2, 1)]), (&[1, 2], &[(0, 1)]), (&[0, 2], &[(0, 1)])],
        )
        .unwrap();
        let r = validate_structure_capped(&a, 2);
        assert!(!r.valid);
        assert_eq!(r.witnesses.len(), 2);
        assert!(r.failures >= 2);
        assert!(r.witnesses.iter().all(|w| w.defect.iter().any(|x| !x.is_zero())));
    }

    #[test]
    fn subadjacent_of_aff1_prelie() {
        let lie = subadjacent_lie(&samples::aff1_prelie()).unwrap();
        assert_eq!(lie.product(&[0, 1]), &[Scalar::from_int(-1), Scalar::zero()]);
        assert!(validate_structure(&lie).valid);
        // commutative pre-Lie gives the abelian algebra
        let c = subadjacent_lie(&samples::unit_prelie()).unwrap();
        assert!(c.constants().iter().all(Scalar::is_zero));
        assert!(subadjacent_lie(&samples::aff1()).is_err());
    }

    #[test]
    fn fundamental_objects_of_e1_bracket() {
        let f = fundamental_leibniz(&samples::threelie_e1()).unwrap();
        assert_eq!(f.dim(), 3);
        assert!(validate_structure(&f).valid);
        // oracle: expand [x1∧x2, y1∧y2] on all 9 pairs by hand.
        // only [e1,e2,e3] = e1 is nonzero (0-based: [0,1,2] = e0).
        // [e0∧e1, e0∧e2] = [e0,e1,e0]∧e2 + e0∧[e0,e1,e2] = e0∧e0 = 0
        // [e0∧e1, e1∧e2] = e1∧[e0,e1,e2] = e1∧e0 = -e0∧e1
        // [e0∧e2, e0∧e1] = e0∧[e0,e2,e1] = e0∧(-e0) = 0
        // [e0∧e2, e1∧e2] = [e0,e2,e1]∧e2 = -e0∧e2
        // [e1∧e2, e0∧e1] = [e1,e2,e0]∧e1 = e0∧e1
        // [e1∧e2, e0∧e2] = [e1,e2,e0]∧e2 = e0∧e2
        let expect = |x: usize, y: usize| -> Vec<i64> {
            match (x, y) {
                (0, 2) => vec![-1, 0, 0],
                (1, 2) => vec![0, -1, 0],
                (2, 0) => vec![1, 0, 0],
                (2, 1) => vec![0, 1, 0],
                _ => vec![0, 0, 0],
            }
        };
        for x in 0..3 {
            for y in 0..3 {
                let want: Vec<Scalar> = expect(x, y).into_iter().map(Scalar::from_int).collect();
                assert_eq!(f.product(&[x, y]), &want[..], "pair {x},{y}");
            }
        }
        let zero = fundamental_leibniz(&Algebra::zero(AlgebraKind::ThreeLie, 3)).unwrap();
        assert!(zero.constants().iter().all(Scalar::is_zero));
    }
}
