//! Coordinates for the five cochain spaces.
//!
//! A cochain domain is a sequence of [`Slot`]s. A slot of arity 1 is a plain
//! tensor factor `g`; a slot of arity `k > 1` is the exterior power `∧^k g`,
//! indexed by increasing tuples. Arguments are always passed *flat*: one basis
//! index (or vector) per copy of `g`, slot after slot.

use crate::combinatorics::{binomial, combinations, sort_with_sign, wedge_rank};
use crate::error::{Error, Result};
use crate::linalg::Scalar;
use crate::structures::AlgebraKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slot {
    pub ambient: usize,
    pub arity: usize,
}

impl Slot {
    pub fn dim(&self) -> usize {
        binomial(self.ambient, self.arity)
    }
}

/// `C^n(g; V)` for one of the five theories.
///
/// The domain shapes are `⊗^n g` (associative, leibniz), `∧^n g` (lie),
/// `∧^{n-1} g ⊗ g` (prelie) and `(∧²g)^{⊗(n-1)} ⊗ g` (3lie).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CochainSpace {
    pub kind: AlgebraKind,
    pub degree: usize,
    pub dim_g: usize,
    pub dim_v: usize,
}

impl CochainSpace {
    pub fn new(kind: AlgebraKind, degree: usize, dim_g: usize, dim_v: usize) -> Result<Self> {
        if degree < Self::first_degree(kind) {
            return Err(Error::DegreeOutOfRange { kind, degree });
        }
        Ok(CochainSpace {
            kind,
            degree,
            dim_g,
            dim_v,
        })
    }

    /// Lowest degree of the cohomology complex: 0, or 1 for prelie and 3lie.
    pub fn first_degree(kind: AlgebraKind) -> usize {
        match kind {
            AlgebraKind::PreLie | AlgebraKind::ThreeLie => 1,
            _ => 0,
        }
    }

    /// The space of graded degree `p` in the graded Lie algebra of the kind,
    /// i.e. cochains with values in `g` of cohomological degree `p + 1`.
    pub fn graded(kind: AlgebraKind, p: usize, dim: usize) -> Self {
        CochainSpace {
            kind,
            degree: p + 1,
            dim_g: dim,
            dim_v: dim,
        }
    }

    /// Degree in the graded Lie algebra; `None` in cohomological degree 0.
    pub fn graded_degree(&self) -> Option<usize> {
        self.degree.checked_sub(1)
    }

    pub fn slots(&self) -> Vec<Slot> {
        let n = self.degree;
        let g = self.dim_g;
        let tensor = Slot { ambient: g, arity: 1 };
        match self.kind {
            AlgebraKind::Associative | AlgebraKind::Leibniz => vec![tensor; n],
            AlgebraKind::Lie => {
                if n == 0 {
                    vec![]
                } else {
                    vec![Slot { ambient: g, arity: n }]
                }
            }
            AlgebraKind::PreLie => {
                let mut s = Vec::new();
                if n > 1 {
                    s.push(Slot {
                        ambient: g,
                        arity: n - 1,
                    });
                }
                s.push(tensor);
                s
            }
            AlgebraKind::ThreeLie => {
                let mut s = vec![Slot { ambient: g, arity: 2 }; n - 1];
                s.push(tensor);
                s
            }
        }
    }

    /// Number of flat arguments from `g`.
    pub fn arity(&self) -> usize {
        match self.kind {
            AlgebraKind::ThreeLie => 2 * self.degree - 1,
            _ => self.degree,
        }
    }

    /// Dimension of the domain (number of canonical argument tuples).
    pub fn domain_dim(&self) -> usize {
        self.slots().iter().map(Slot::dim).product()
    }

    pub fn dim(&self) -> usize {
        self.domain_dim() * self.dim_v
    }

    /// Canonical flat argument tuples in coordinate order.
    pub fn tuples(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::with_capacity(self.arity())];
        for slot in self.slots() {
            let choices = combinations(slot.ambient, slot.arity);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |c| {
                        let mut t = prefix.clone();
                        t.extend_from_slice(c);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// Domain index of a flat basis tuple together with the sign of the
    /// reordering inside wedge slots; `None` if a wedge slot repeats an index.
    pub fn locate(&self, flat: &[usize]) -> Option<(usize, i8)> {
        debug_assert_eq!(flat.len(), self.arity());
        let mut idx = 0;
        let mut sign = 1i8;
        let mut pos = 0;
        let mut buf = [0usize; 16];
        for slot in self.slots() {
            let k = slot.arity;
            let part = &flat[pos..pos + k];
            pos += k;
            let r = if k == 1 {
                part[0]
            } else if k <= buf.len() {
                let b = &mut buf[..k];
                b.copy_from_slice(part);
                sign *= sort_with_sign(b)?;
                wedge_rank(b, slot.ambient)
            } else {
                let mut b = part.to_vec();
                sign *= sort_with_sign(&mut b)?;
                wedge_rank(&b, slot.ambient)
            };
            idx = idx * slot.dim() + r;
        }
        Some((idx, sign))
    }

    fn check_args(&self, n: usize) -> Result<()> {
        if n != self.arity() {
            return Err(Error::Shape {
                what: "cochain arguments",
                expected: self.arity(),
                found: n,
            });
        }
        Ok(())
    }
}

/// An argument of a multilinear map: a basis vector or a dense vector.
#[derive(Debug, Clone, Copy)]
pub enum Arg<'a> {
    Basis(usize),
    Vec(&'a [Scalar]),
}

/// Calls `visit(tuple, coefficient)` for every basis tuple in the multilinear
/// expansion of `args`.
pub(crate) fn expand_args(args: &[Arg], mut visit: impl FnMut(&[usize], &Scalar)) {
    let mut tuple = vec![0; args.len()];
    expand_rec(args, 0, &Scalar::one(), &mut tuple, &mut visit);
}

fn expand_rec(
    args: &[Arg],
    pos: usize,
    coef: &Scalar,
    tuple: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize], &Scalar),
) {
    if pos == args.len() {
        visit(tuple, coef);
        return;
    }
    match args[pos] {
        Arg::Basis(i) => {
            tuple[pos] = i;
            expand_rec(args, pos + 1, coef, tuple, visit);
        }
        Arg::Vec(v) => {
            for (i, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                tuple[pos] = i;
                expand_rec(args, pos + 1, &(coef * x), tuple, visit);
            }
        }
    }
}

/// A cochain: coordinates over the canonical basis, output index innermost.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    space: CochainSpace,
    coords: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(space: CochainSpace) -> Self {
        Cochain {
            space,
            coords: vec![Scalar::zero(); space.dim()],
        }
    }

    pub fn from_vector(space: CochainSpace, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != space.dim() {
            return Err(Error::Shape {
                what: "cochain coordinates",
                expected: space.dim(),
                found: coords.len(),
            });
        }
        Ok(Cochain { space, coords })
    }

    /// The `k`-th coordinate indicator.
    pub fn basis(space: CochainSpace, k: usize) -> Self {
        let mut c = Cochain::zero(space);
        c.coords[k] = Scalar::one();
        c
    }

    /// Builds a cochain from its values on the canonical tuples.
    pub fn from_fn(space: CochainSpace, mut f: impl FnMut(&[usize]) -> Vec<Scalar>) -> Self {
        let mut coords = Vec::with_capacity(space.dim());
        for t in space.tuples() {
            let v = f(&t);
            assert_eq!(v.len(), space.dim_v, "cochain value has wrong length");
            coords.extend(v);
        }
        Cochain { space, coords }
    }

    pub fn space(&self) -> &CochainSpace {
        &self.space
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn to_vector(&self) -> Vec<Scalar> {
        self.coords.clone()
    }

    pub fn into_vector(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Stored value on the canonical tuple with the given domain index.
    pub fn value_at(&self, domain_idx: usize) -> &[Scalar] {
        let m = self.space.dim_v;
        &self.coords[domain_idx * m..(domain_idx + 1) * m]
    }

    /// Value on a flat tuple of basis indices.
    pub fn evaluate(&self, args: &[usize]) -> Result<Vec<Scalar>> {
        self.space.check_args(args.len())?;
        if let Some(&bad) = args.iter().find(|&&i| i >= self.space.dim_g) {
            return Err(Error::InvalidStructure(
                "cochain arguments",
                format!("basis index {} out of range", bad + 1),
            ));
        }
        let mut out = vec![Scalar::zero(); self.space.dim_v];
        self.add_basis_value(args, &Scalar::one(), &mut out);
        Ok(out)
    }

    fn add_basis_value(&self, args: &[usize], coef: &Scalar, out: &mut [Scalar]) {
        if let Some((idx, sign)) = self.space.locate(args) {
            let c = if sign > 0 { coef.clone() } else { -coef };
            for (o, x) in out.iter_mut().zip(self.value_at(idx)) {
                if !x.is_zero() {
                    o.add_mul(&c, x);
                }
            }
        }
    }

    /// Value on arbitrary arguments, by multilinearity.
    pub fn eval(&self, args: &[Arg]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.space.dim_v];
        self.accumulate(args, &Scalar::one(), &mut out);
        out
    }

    /// `out += coef * self(args)`.
    pub fn accumulate(&self, args: &[Arg], coef: &Scalar, out: &mut [Scalar]) {
        debug_assert_eq!(args.len(), self.space.arity());
        expand_args(args, |t, c| self.add_basis_value(t, &(coef * c), out));
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_space(other)?;
        Ok(Cochain {
            space: self.space,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.same_space(other)?;
        Ok(Cochain {
            space: self.space,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain {
            space: self.space,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    fn same_space(&self, other: &Cochain) -> Result<()> {
        if self.space != other.space {
            return Err(Error::Shape {
                what: "cochain space dimension",
                expected: self.space.dim(),
                found: other.space.dim(),
            });
        }
        Ok(())
    }
}
