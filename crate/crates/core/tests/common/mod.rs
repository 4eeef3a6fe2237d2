//! Brute-force oracle, independent of the library's cochain indexing and
//! elimination: cochains are full functions on every basis tuple, skew
//! subspaces are spanned by explicit antisymmetrized functions, arithmetic is
//! plain `BigRational` and ranks come from a separate elimination.

#![allow(dead_code)]

use algdeform::representations::Representation;
use algdeform::{Algebra, AlgebraKind, Scalar};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(x: &Scalar) -> Q {
    x.to_string().parse().expect("rational")
}

fn sgn(k: usize) -> Q {
    if k.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Operation and module data copied out of the library objects.
pub struct Data {
    pub kind: AlgebraKind,
    pub d: usize,
    pub m: usize,
    /// constants indexed by flat input tuple, output innermost
    c: Vec<Q>,
    /// per map: per basis index (or per ordered pair for 3-Lie) an m×m matrix
    maps: Vec<Vec<Vec<Q>>>,
}

impl Data {
    pub fn new(r: &Representation) -> Data {
        let a = r.algebra();
        let d = a.dim();
        let m = r.dim_v();
        let c = a.constants().iter().map(q).collect();
        let mat = |x: &algdeform::Matrix| x.entries().iter().map(q).collect::<Vec<_>>();
        let maps = match a.kind() {
            AlgebraKind::ThreeLie => {
                let mut full = vec![vec![Q::zero(); m * m]; d * d];
                let mut w = 0;
                for i in 0..d {
                    for j in i + 1..d {
                        let x = mat(&r.maps()[0][w]);
                        full[j * d + i] = x.iter().map(|v| -v).collect();
                        full[i * d + j] = x;
                        w += 1;
                    }
                }
                vec![full]
            }
            _ => r.maps().iter().map(|ms| ms.iter().map(mat).collect()).collect(),
        };
        Data {
            kind: a.kind(),
            d,
            m,
            c,
            maps,
        }
    }

    pub fn of_algebra(a: &Algebra) -> Data {
        let r = Representation::zero(a.clone(), 1);
        Data::new(&r)
    }

    fn arity(&self) -> usize {
        match self.kind {
            AlgebraKind::ThreeLie => 3,
            _ => 2,
        }
    }

    /// Product of dense vectors.
    pub fn mul(&self, args: &[&[Q]]) -> Vec<Q> {
        let d = self.d;
        let mut out = vec![Q::zero(); d];
        for code in 0..d.pow(args.len() as u32) {
            let mut coef = Q::one();
            let mut off = 0;
            let mut rest = code;
            let mut idx = vec![0; args.len()];
            for p in (0..args.len()).rev() {
                idx[p] = rest % d;
                rest /= d;
            }
            for (p, &i) in idx.iter().enumerate() {
                coef *= &args[p][i];
                off = off * d + i;
            }
            if coef.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(&self.c[off * d..(off + 1) * d]) {
                *o += &coef * c;
            }
        }
        out
    }

    fn e(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.d];
        v[i] = Q::one();
        v
    }

    fn act(&self, which: usize, i: usize, v: &[Q]) -> Vec<Q> {
        let a = &self.maps[which][i];
        (0..self.m)
            .map(|o| (0..self.m).map(|k| &a[o * self.m + k] * &v[k]).sum())
            .collect()
    }

    fn act_pair(&self, i: usize, j: usize, v: &[Q]) -> Vec<Q> {
        self.act(0, i * self.d + j, v)
    }
}

/// A full cochain: values on all `d^k` basis tuples, output innermost.
#[derive(Clone)]
struct Full<'a> {
    data: &'a Data,
    k: usize,
    v: Vec<Q>,
}

impl Full<'_> {
    /// Multilinear evaluation on dense vectors.
    fn eval(&self, args: &[Vec<Q>]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.data.m];
        self.expand(args, 0, Q::one(), 0, &mut out);
        out
    }

    fn expand(&self, args: &[Vec<Q>], pos: usize, coef: Q, off: usize, out: &mut [Q]) {
        if pos == args.len() {
            let m = self.data.m;
            for (o, x) in out.iter_mut().zip(&self.v[off * m..(off + 1) * m]) {
                *o += &coef * x;
            }
            return;
        }
        for (i, x) in args[pos].iter().enumerate() {
            if !x.is_zero() {
                self.expand(args, pos + 1, &coef * x, off * self.data.d + i, out);
            }
        }
    }
}

fn add_to(out: &mut [Q], c: &Q, v: &[Q]) {
    for (o, x) in out.iter_mut().zip(v) {
        *o += c * x;
    }
}

fn tuples(d: usize, k: usize) -> Vec<Vec<usize>> {
    (0..d.pow(k as u32))
        .map(|mut code| {
            let mut t = vec![0; k];
            for p in (0..k).rev() {
                t[p] = code % d;
                code /= d;
            }
            t
        })
        .collect()
}

/// Number of flat arguments of an `n`-cochain.
fn flat_arity(kind: AlgebraKind, n: usize) -> usize {
    match kind {
        AlgebraKind::ThreeLie => 2 * n - 1,
        _ => n,
    }
}

/// `(d f)` evaluated at the basis tuple `xs` (flat, `n + 1`-cochain layout).
fn coboundary_at(f: &Full, n: usize, xs: &[usize]) -> Vec<Q> {
    let a = f.data;
    let m = a.m;
    let mut out = vec![Q::zero(); m];
    let e = |i: usize| a.e(i);
    let args = |ids: &[usize]| ids.iter().map(|&i| e(i)).collect::<Vec<_>>();
    let skip = |ids: &[usize], drop: &[usize]| -> Vec<usize> {
        ids.iter()
            .enumerate()
            .filter(|(p, _)| !drop.contains(p))
            .map(|(_, &i)| i)
            .collect()
    };
    match a.kind {
        AlgebraKind::Associative => {
            add_to(&mut out, &Q::one(), &a.act(0, xs[0], &f.eval(&args(&xs[1..]))));
            for i in 1..=n {
                let mut v = args(&xs[..i - 1]);
                v.push(a.mul(&[&e(xs[i - 1]), &e(xs[i])]));
                v.extend(args(&xs[i + 1..]));
                add_to(&mut out, &sgn(i), &f.eval(&v));
            }
            add_to(&mut out, &sgn(n + 1), &a.act(1, xs[n], &f.eval(&args(&xs[..n]))));
        }
        AlgebraKind::Lie => {
            for i in 0..=n {
                add_to(&mut out, &sgn(i), &a.act(0, xs[i], &f.eval(&args(&skip(xs, &[i])))));
                for j in i + 1..=n {
                    let mut v = vec![a.mul(&[&e(xs[i]), &e(xs[j])])];
                    v.extend(args(&skip(xs, &[i, j])));
                    add_to(&mut out, &sgn(i + j), &f.eval(&v));
                }
            }
        }
        AlgebraKind::PreLie => {
            // 1-based i = p + 1, last argument x_{n+1} = xs[n]
            let last = xs[n];
            for p in 0..n {
                let s = sgn(p);
                add_to(&mut out, &s, &a.act(0, xs[p], &f.eval(&args(&skip(xs, &[p])))));
                let mut v = args(&skip(&xs[..n], &[p]));
                v.push(e(xs[p]));
                add_to(&mut out, &s, &a.act(1, last, &f.eval(&v)));
                let mut v = args(&skip(&xs[..n], &[p]));
                v.push(a.mul(&[&e(xs[p]), &e(last)]));
                add_to(&mut out, &-&s, &f.eval(&v));
                for r in p + 1..n {
                    let xy = a.mul(&[&e(xs[p]), &e(xs[r])]);
                    let yx = a.mul(&[&e(xs[r]), &e(xs[p])]);
                    let mut v = vec![xy.iter().zip(&yx).map(|(u, w)| u - w).collect()];
                    v.extend(args(&skip(xs, &[p, r])));
                    add_to(&mut out, &sgn(p + r), &f.eval(&v));
                }
            }
        }
        AlgebraKind::Leibniz => {
            for p in 0..n {
                add_to(&mut out, &sgn(p), &a.act(0, xs[p], &f.eval(&args(&skip(xs, &[p])))));
            }
            add_to(&mut out, &sgn(n + 1), &a.act(1, xs[n], &f.eval(&args(&xs[..n]))));
            for p in 0..=n {
                for r in p + 1..=n {
                    let mut v = args(&skip(&xs[..r], &[p]));
                    v.push(a.mul(&[&e(xs[p]), &e(xs[r])]));
                    v.extend(args(&xs[r + 1..]));
                    add_to(&mut out, &sgn(p + 1), &f.eval(&v));
                }
            }
        }
        AlgebraKind::ThreeLie => {
            // pairs X_j = (xs[2j], xs[2j+1]) for j < n, last argument z
            let z = xs[2 * n];
            let pair_args = |drop: usize, upto: usize| -> Vec<Vec<Q>> {
                (0..upto)
                    .filter(|&j| j != drop)
                    .flat_map(|j| [e(xs[2 * j]), e(xs[2 * j + 1])])
                    .collect()
            };
            for j in 0..n {
                let (xj, yj) = (xs[2 * j], xs[2 * j + 1]);
                for k in j + 1..n {
                    let (xk, yk) = (xs[2 * k], xs[2 * k + 1]);
                    let tail: Vec<Vec<Q>> = (k + 1..n)
                        .flat_map(|i| [e(xs[2 * i]), e(xs[2 * i + 1])])
                        .chain([e(z)])
                        .collect();
                    for (u, w) in [
                        (a.mul(&[&e(xj), &e(yj), &e(xk)]), e(yk)),
                        (e(xk), a.mul(&[&e(xj), &e(yj), &e(yk)])),
                    ] {
                        let mut v = pair_args(j, k);
                        v.push(u);
                        v.push(w);
                        v.extend(tail.iter().cloned());
                        add_to(&mut out, &sgn(j + 1), &f.eval(&v));
                    }
                }
                let mut v = pair_args(j, n);
                v.push(a.mul(&[&e(xj), &e(yj), &e(z)]));
                add_to(&mut out, &sgn(j + 1), &f.eval(&v));
                let mut v = pair_args(j, n);
                v.push(e(z));
                add_to(&mut out, &sgn(j), &a.act_pair(xj, yj, &f.eval(&v)));
            }
            let (xn, yn) = (xs[2 * n - 2], xs[2 * n - 1]);
            let head = pair_args(n - 1, n);
            let mut v = head.clone();
            v.push(e(xn));
            add_to(&mut out, &sgn(n + 1), &a.act_pair(yn, z, &f.eval(&v)));
            let mut v = head;
            v.push(e(yn));
            add_to(&mut out, &sgn(n + 1), &a.act_pair(z, xn, &f.eval(&v)));
        }
    }
    out
}

fn parity(p: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv
}

fn perms(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Blocks of consecutive flat positions on which `n`-cochains are skew.
fn skew_blocks(kind: AlgebraKind, n: usize) -> Vec<usize> {
    match kind {
        AlgebraKind::Associative | AlgebraKind::Leibniz => vec![1; n],
        AlgebraKind::Lie => {
            if n == 0 {
                vec![]
            } else {
                vec![n]
            }
        }
        AlgebraKind::PreLie => {
            let mut b = if n > 1 { vec![n - 1] } else { vec![] };
            b.push(1);
            b
        }
        AlgebraKind::ThreeLie => {
            let mut b = vec![2; n - 1];
            b.push(1);
            b
        }
    }
}

/// Spanning set of the `n`-cochain space as full vectors: antisymmetrize a
/// basis function on each increasing block.
fn cochain_basis<'a>(a: &'a Data, n: usize) -> Vec<Full<'a>> {
    let k = flat_arity(a.kind, n);
    let blocks = skew_blocks(a.kind, n);
    let mut out = Vec::new();
    for t in tuples(a.d, k) {
        if !canonical(a.kind, n, &t) {
            continue;
        }
        for o in 0..a.m {
            let mut v = vec![Q::zero(); a.d.pow(k as u32) * a.m];
            // all block-wise permutations of t
            let mut images: Vec<(Vec<usize>, usize)> = vec![(vec![], 0)];
            let mut pos = 0;
            for &b in &blocks {
                let part = &t[pos..pos + b];
                images = images
                    .into_iter()
                    .flat_map(|(pre, s)| {
                        perms(b).into_iter().map(move |p| {
                            let mut x = pre.clone();
                            x.extend(p.iter().map(|&i| part[i]));
                            (x, s + parity(&p))
                        })
                    })
                    .collect();
                pos += b;
            }
            for (img, s) in images {
                let off = img.iter().fold(0, |acc, &i| acc * a.d + i) * a.m;
                v[off + o] = sgn(s);
            }
            out.push(Full { data: a, k, v });
        }
    }
    out
}

fn canonical(kind: AlgebraKind, n: usize, t: &[usize]) -> bool {
    let mut pos = 0;
    skew_blocks(kind, n).iter().all(|&b| {
        let ok = t[pos..pos + b].windows(2).all(|w| w[0] < w[1]);
        pos += b;
        ok
    })
}

/// `d f` on every basis tuple, or (for ranks) only on the tuples increasing in
/// each skew block; the image is skew, so those coordinates determine it.
fn full_coboundary<'a>(f: &Full<'a>, n: usize, all: bool) -> Vec<Q> {
    let a = f.data;
    let k = flat_arity(a.kind, n + 1);
    tuples(a.d, k)
        .iter()
        .filter(|xs| all || canonical(a.kind, n + 1, xs))
        .flat_map(|xs| coboundary_at(f, n, xs))
        .collect()
}

/// Rank of a list of vectors by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, below) = rows.split_at_mut(r + 1);
        let prow = &top[r];
        for row in below {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &prow[c];
            for (x, y) in row[c..].iter_mut().zip(&prow[c..]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

fn first_degree(kind: AlgebraKind) -> usize {
    match kind {
        AlgebraKind::PreLie | AlgebraKind::ThreeLie => 1,
        _ => 0,
    }
}

/// `(dim C^n, dim H^n)` for `n` from the first degree to `max`.
pub fn cohomology(r: &Representation, max: usize) -> Vec<(usize, usize)> {
    let a = Data::new(r);
    let first = first_degree(a.kind);
    // rank of d_n for n in first..=max
    let mut ranks = Vec::new();
    let mut dims = Vec::new();
    for n in first..=max {
        let basis = cochain_basis(&a, n);
        dims.push(basis.len());
        ranks.push(rank(basis.iter().map(|f| full_coboundary(f, n, false)).collect()));
    }
    (0..dims.len())
        .map(|i| {
            let z = dims[i] - ranks[i];
            let b = if i == 0 { 0 } else { ranks[i - 1] };
            (dims[i], z - b)
        })
        .collect()
}

/// `d(d f) = 0` on every spanning cochain of degree `n`.
pub fn squares_to_zero(r: &Representation, n: usize) -> bool {
    let a = Data::new(r);
    cochain_basis(&a, n).iter().all(|f| {
        let df = Full {
            data: &a,
            k: flat_arity(a.kind, n + 1),
            v: full_coboundary(f, n, true),
        };
        full_coboundary(&df, n + 1, true).iter().all(Zero::is_zero)
    })
}

/// The defining identity of the operation, on all basis tuples.
pub fn is_valid(alg: &Algebra) -> bool {
    let a = Data::of_algebra(alg);
    let d = a.d;
    let e = |i: usize| a.e(i);
    let m = |x: &[Q], y: &[Q]| a.mul(&[x, y]);
    let zero = |v: Vec<Q>| v.iter().all(Zero::is_zero);
    let sub = |u: Vec<Q>, w: Vec<Q>| u.iter().zip(&w).map(|(p, q)| p - q).collect::<Vec<_>>();
    let add = |u: Vec<Q>, w: Vec<Q>| u.iter().zip(&w).map(|(p, q)| p + q).collect::<Vec<_>>();
    match a.kind {
        AlgebraKind::Associative => tuples(d, 3).iter().all(|t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            zero(sub(m(&m(&x, &y), &z), m(&x, &m(&y, &z))))
        }),
        AlgebraKind::Lie => tuples(d, 3).iter().all(|t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            let j = add(add(m(&x, &m(&y, &z)), m(&y, &m(&z, &x))), m(&z, &m(&x, &y)));
            zero(j) && zero(add(m(&x, &y), m(&y, &x)))
        }),
        AlgebraKind::PreLie => tuples(d, 3).iter().all(|t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            let assoc = |x: &[Q], y: &[Q]| sub(m(&m(x, y), &z), m(x, &m(y, &z)));
            zero(sub(assoc(&x, &y), assoc(&y, &x)))
        }),
        AlgebraKind::Leibniz => tuples(d, 3).iter().all(|t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            zero(sub(m(&x, &m(&y, &z)), add(m(&m(&x, &y), &z), m(&y, &m(&x, &z)))))
        }),
        AlgebraKind::ThreeLie => {
            let b = |x: &[Q], y: &[Q], z: &[Q]| a.mul(&[x, y, z]);
            let skew = tuples(d, 3).iter().all(|t| {
                let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
                zero(add(b(&x, &y, &z), b(&y, &x, &z))) && zero(add(b(&x, &y, &z), b(&x, &z, &y)))
            });
            skew && tuples(d, 5).iter().all(|t| {
                let (x1, x2, y1, y2, y3) = (e(t[0]), e(t[1]), e(t[2]), e(t[3]), e(t[4]));
                let lhs = b(&x1, &x2, &b(&y1, &y2, &y3));
                let rhs = add(
                    add(b(&b(&x1, &x2, &y1), &y2, &y3), b(&y1, &b(&x1, &x2, &y2), &y3)),
                    b(&y1, &y2, &b(&x1, &x2, &y3)),
                );
                zero(sub(lhs, rhs))
            })
        }
    }
}
