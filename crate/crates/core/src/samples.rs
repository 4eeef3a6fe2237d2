//! Named example structures and seeded random generators.
//!
//! Random structures are drawn from known families and moved by a random
//! unimodular change of basis, so they stay valid and integral.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Matrix, Scalar};
use crate::representations::{dual_representation, regular_or_adjoint, Representation};
use crate::structures::{all_tuples, Algebra, AlgebraKind, IntProduct};

fn build(kind: AlgebraKind, dim: usize, products: &[IntProduct]) -> Algebra {
    Algebra::from_int_products(kind, dim, products).expect("fixture is well formed")
}

/// `k[e2]/(e2²)` with unit `e1`.
pub fn dual_numbers() -> Algebra {
    build(
        AlgebraKind::Associative,
        2,
        &[(&[0, 0], &[(0, 1)]), (&[0, 1], &[(1, 1)]), (&[1, 0], &[(1, 1)])],
    )
}

/// Upper triangular 2×2 matrices on `e11, e12, e22`.
pub fn upper_triangular() -> Algebra {
    build(
        AlgebraKind::Associative,
        3,
        &[
            (&[0, 0], &[(0, 1)]),
            (&[0, 1], &[(1, 1)]),
            (&[1, 2], &[(1, 1)]),
            (&[2, 2], &[(2, 1)]),
        ],
    )
}

/// `k[x]/(x³)` on `1, x, x²`.
pub fn truncated_polynomials() -> Algebra {
    build(
        AlgebraKind::Associative,
        3,
        &[
            (&[0, 0], &[(0, 1)]),
            (&[0, 1], &[(1, 1)]),
            (&[1, 0], &[(1, 1)]),
            (&[0, 2], &[(2, 1)]),
            (&[2, 0], &[(2, 1)]),
            (&[1, 1], &[(2, 1)]),
        ],
    )
}

/// The non-abelian 2-dimensional Lie algebra, `[e1, e2] = e1`.
pub fn aff1() -> Algebra {
    build(AlgebraKind::Lie, 2, &[(&[0, 1], &[(0, 1)])])
}

pub fn heisenberg() -> Algebra {
    build(AlgebraKind::Lie, 3, &[(&[0, 1], &[(2, 1)])])
}

/// `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h` on `h, e, f`.
pub fn sl2() -> Algebra {
    build(
        AlgebraKind::Lie,
        3,
        &[(&[0, 1], &[(1, 2)]), (&[0, 2], &[(2, -2)]), (&[1, 2], &[(0, 1)])],
    )
}

pub fn abelian(kind: AlgebraKind, dim: usize) -> Algebra {
    Algebra::zero(kind, dim)
}

/// One-dimensional pre-Lie algebra `e·e = e`.
pub fn unit_prelie() -> Algebra {
    build(AlgebraKind::PreLie, 1, &[(&[0, 0], &[(0, 1)])])
}

/// Pre-Lie structure on aff(1): `e2·e1 = e1`.
pub fn aff1_prelie() -> Algebra {
    build(AlgebraKind::PreLie, 2, &[(&[1, 0], &[(0, 1)])])
}

/// Novikov algebra `e2·e2 = e1`.
pub fn novikov_nilpotent() -> Algebra {
    build(AlgebraKind::PreLie, 2, &[(&[1, 1], &[(0, 1)])])
}

/// Leibniz but not Lie: `[e2, e2] = e1`.
pub fn nonlie_leibniz() -> Algebra {
    build(AlgebraKind::Leibniz, 2, &[(&[1, 1], &[(0, 1)])])
}

/// Leibniz but not Lie: `[e2, e1] = e1`, `[e1, e2] = 0`.
pub fn leibniz_left_action() -> Algebra {
    build(AlgebraKind::Leibniz, 2, &[(&[1, 0], &[(0, 1)])])
}

/// `[e1, e2, e3] = e1`.
pub fn threelie_e1() -> Algebra {
    build(AlgebraKind::ThreeLie, 3, &[(&[0, 1, 2], &[(0, 1)])])
}

/// `[e1, e2, e3] = e4`.
pub fn threelie_nilpotent() -> Algebra {
    build(AlgebraKind::ThreeLie, 4, &[(&[0, 1, 2], &[(3, 1)])])
}

/// The simple 4-dimensional 3-Lie algebra, `[e_i, e_j, e_k] = Σ ε_ijkl e_l`.
pub fn threelie_a4() -> Algebra {
    build(
        AlgebraKind::ThreeLie,
        4,
        &[
            (&[0, 1, 2], &[(3, 1)]),
            (&[0, 1, 3], &[(2, -1)]),
            (&[0, 2, 3], &[(1, 1)]),
            (&[1, 2, 3], &[(0, -1)]),
        ],
    )
}

/// One non-trivial example per kind.
pub fn named_algebras() -> Vec<Algebra> {
    vec![dual_numbers(), aff1(), aff1_prelie(), nonlie_leibniz(), threelie_e1()]
}

/// Every named fixture.
pub fn all_named() -> Vec<(&'static str, Algebra)> {
    vec![
        ("dual-numbers", dual_numbers()),
        ("upper-triangular", upper_triangular()),
        ("truncated-polynomials", truncated_polynomials()),
        ("aff1", aff1()),
        ("heisenberg", heisenberg()),
        ("sl2", sl2()),
        ("unit-prelie", unit_prelie()),
        ("aff1-prelie", aff1_prelie()),
        ("novikov-nilpotent", novikov_nilpotent()),
        ("nonlie-leibniz", nonlie_leibniz()),
        ("leibniz-left-action", leibniz_left_action()),
        ("threelie-e1", threelie_e1()),
        ("threelie-nilpotent", threelie_nilpotent()),
        ("threelie-a4", threelie_a4()),
    ]
}

pub fn by_name(name: &str) -> Option<Algebra> {
    all_named().into_iter().find(|(n, _)| *n == name).map(|(_, a)| a)
}

/// Seeded generator used throughout the test suites.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random unimodular integer matrix (product of unit triangular factors),
/// returned with its inverse.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> (Matrix, Matrix) {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = Scalar::from_int(rng.gen_range(-1..=1));
            upper[(j, i)] = Scalar::from_int(rng.gen_range(-1..=1));
        }
    }
    let g = lower.mul(&upper);
    let inv = g.inverse().expect("unimodular");
    (g, inv)
}

/// `μ'(x, ..) = g μ(g⁻¹x, ..)`.
pub fn transport(a: &Algebra, g: &Matrix, g_inv: &Matrix) -> Algebra {
    let d = a.dim();
    let cols: Vec<Vec<Scalar>> = (0..d).map(|j| g_inv.column(j)).collect();
    let constants = all_tuples(d, a.kind().arity())
        .flat_map(|t| {
            let args: Vec<&[Scalar]> = t.iter().map(|&j| cols[j].as_slice()).collect();
            g.mul_vec(&a.apply(&args))
        })
        .collect();
    Algebra::new(a.kind(), d, constants).expect("transport preserves skew-symmetry")
}

fn family(kind: AlgebraKind) -> Vec<Algebra> {
    let assoc = vec![dual_numbers(), upper_triangular(), truncated_polynomials()];
    match kind {
        AlgebraKind::Associative => assoc,
        AlgebraKind::Lie => vec![aff1(), heisenberg(), sl2()],
        AlgebraKind::PreLie => {
            let mut v = vec![unit_prelie(), aff1_prelie(), novikov_nilpotent()];
            v.extend(assoc.iter().map(|a| a.with_kind(AlgebraKind::PreLie).unwrap()));
            v
        }
        AlgebraKind::Leibniz => vec![
            nonlie_leibniz(),
            leibniz_left_action(),
            aff1().with_kind(AlgebraKind::Leibniz).unwrap(),
            heisenberg().with_kind(AlgebraKind::Leibniz).unwrap(),
        ],
        AlgebraKind::ThreeLie => vec![threelie_e1(), threelie_nilpotent(), threelie_a4()],
    }
}

/// A random valid algebra of the given kind with dimension at most `max_dim`
/// (falls back to the smallest family member when nothing fits).
pub fn random_algebra(rng: &mut impl Rng, kind: AlgebraKind, max_dim: usize) -> Algebra {
    let mut fam: Vec<Algebra> = family(kind).into_iter().filter(|a| a.dim() <= max_dim).collect();
    if fam.is_empty() {
        fam = family(kind);
        fam.sort_by_key(Algebra::dim);
        fam.truncate(1);
    }
    let base = fam.choose(rng).expect("nonempty family").clone();
    let scale = Scalar::from_int(rng.gen_range(1..=2));
    let base = Algebra::new(kind, base.dim(), base.constants().iter().map(|c| c * &scale).collect()).unwrap();
    let (g, inv) = random_unimodular(rng, base.dim());
    transport(&base, &g, &inv)
}

/// Regular/adjoint, its dual, a zero module, or a conjugate of the regular
/// representation.
pub fn random_representation(rng: &mut impl Rng, a: &Algebra) -> Representation {
    let reg = regular_or_adjoint(a).expect("valid algebra");
    match rng.gen_range(0..4) {
        0 => reg,
        1 => dual_representation(&reg).expect("valid representation"),
        2 => Representation::zero(a.clone(), rng.gen_range(1..=2)),
        _ => {
            let (p, p_inv) = random_unimodular(rng, reg.dim_v());
            conjugate(&reg, &p, &p_inv)
        }
    }
}

/// `P ρ P⁻¹` for every map.
pub fn conjugate(r: &Representation, p: &Matrix, p_inv: &Matrix) -> Representation {
    let maps = r
        .maps()
        .iter()
        .map(|ms| ms.iter().map(|m| p.mul(m).mul(p_inv)).collect())
        .collect();
    Representation::new(r.algebra().clone(), r.dim_v(), maps).expect("same shapes")
}

/// Adds `±1` to one output coordinate of one canonical product. The result
/// is usually, not always, invalid.
pub fn perturb(rng: &mut impl Rng, a: &Algebra) -> Algebra {
    let kind = a.kind();
    let d = a.dim();
    let inputs: Vec<Vec<usize>> = all_tuples(d, kind.arity())
        .filter(|t| !matches!(kind, AlgebraKind::Lie | AlgebraKind::ThreeLie) || t.windows(2).all(|w| w[0] < w[1]))
        .collect();
    let t = inputs.choose(rng).expect("nonempty domain").clone();
    let mut out = vec![Scalar::zero(); d];
    out[rng.gen_range(0..d)] = Scalar::from_int(if rng.gen_bool(0.5) { 1 } else { -1 });
    let delta = Algebra::from_products(kind, d, [(t, out)]).expect("canonical inputs");
    a.add(&delta).expect("same shape")
}
