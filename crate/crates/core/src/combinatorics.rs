//! Shuffles, permutation parity and the canonical basis of exterior powers.
//!
//! Positions are 0-based everywhere in this module; [`Shuffle::one_based`]
//! converts for display and file formats.

/// A permutation that is increasing on each block of consecutive positions,
/// together with its parity sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shuffle {
    /// `perm[i]` is the image of position `i`
    pub perm: Vec<usize>,
    /// `+1` for even, `-1` for odd permutations
    pub sign: i8,
}

impl Shuffle {
    pub fn one_based(&self) -> Vec<usize> {
        self.perm.iter().map(|p| p + 1).collect()
    }

    pub fn is_odd(&self) -> bool {
        self.sign < 0
    }
}

/// Parity sign of a permutation given as a sequence of distinct values,
/// computed by counting inversions.
pub fn parity(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All `(i_1, ..., i_k)`-shuffles of `n = i_1 + ... + i_k` positions,
/// ordered lexicographically by the first block, then the second, and so on.
///
/// Empty blocks are allowed; `shuffles(&[0, n])` is just the identity.
pub fn shuffles(parts: &[usize]) -> Vec<Shuffle> {
    let n: usize = parts.iter().sum();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let remaining: Vec<usize> = (0..n).collect();
    fill_blocks(parts, &remaining, &mut perm, &mut out);
    out
}

fn fill_blocks(parts: &[usize], remaining: &[usize], perm: &mut Vec<usize>, out: &mut Vec<Shuffle>) {
    let Some((&first, rest)) = parts.split_first() else {
        out.push(Shuffle {
            sign: parity(perm),
            perm: perm.clone(),
        });
        return;
    };
    for chosen in combinations(remaining.len(), first) {
        let block: Vec<usize> = chosen.iter().map(|&i| remaining[i]).collect();
        let left: Vec<usize> = remaining
            .iter()
            .enumerate()
            .filter(|(i, _)| chosen.binary_search(i).is_err())
            .map(|(_, &v)| v)
            .collect();
        let mark = perm.len();
        perm.extend_from_slice(&block);
        fill_blocks(rest, &left, perm, out);
        perm.truncate(mark);
    }
}

/// All strictly increasing `k`-tuples from `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance the rightmost index that still has room
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn multinomial(parts: &[usize]) -> usize {
    let mut total = 0;
    let mut acc = 1;
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// A canonical basis element `e_{i_1} ^ ... ^ e_{i_k}` of an exterior power,
/// stored with strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeIndex(Vec<usize>);

impl WedgeIndex {
    /// Returns `None` unless `indices` is strictly increasing.
    pub fn new(indices: Vec<usize>) -> Option<Self> {
        indices.windows(2).all(|w| w[0] < w[1]).then_some(WedgeIndex(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// Position of this element in the lexicographic basis of the `k`-th
    /// exterior power of an `ambient`-dimensional space.
    pub fn rank(&self, ambient: usize) -> usize {
        wedge_rank(&self.0, ambient)
    }
}

/// Sorts `indices` and returns the sorted tuple with the parity of the sorting
/// permutation, or `None` when two indices coincide.
pub fn normalize_wedge(indices: &[usize]) -> Option<(WedgeIndex, i8)> {
    let mut v = indices.to_vec();
    let sign = sort_with_sign(&mut v)?;
    Some((WedgeIndex(v), sign))
}

/// In-place insertion sort tracking transpositions. `None` on a repeat.
pub(crate) fn sort_with_sign(v: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some(sign)
}

/// Lexicographic rank of a strictly increasing tuple among all increasing
/// tuples of the same length drawn from `0..ambient`.
pub(crate) fn wedge_rank(sorted: &[usize], ambient: usize) -> usize {
    let k = sorted.len();
    let mut rank = 0;
    let mut start = 0;
    for (i, &c) in sorted.iter().enumerate() {
        for skipped in start..c {
            rank += binomial(ambient - 1 - skipped, k - 1 - i);
        }
        start = c + 1;
    }
    rank
}
