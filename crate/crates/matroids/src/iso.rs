//! Isomorphism testing through a canonical form: the lexicographically least
//! relabeled basis list over all permutations of the ground set.

use crate::bijection::{for_each_permutation, Bijection};
use crate::matroid::Matroid;

/// Canonical, permutation-invariant encoding of a matroid.
/// Two matroids are isomorphic exactly when their keys are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IsoKey {
    n: usize,
    rank: usize,
    canonical_bases: Vec<u32>,
}

impl IsoKey {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn canonical_bases(&self) -> &[u32] {
        &self.canonical_bases
    }

    /// The canonical representative of the isomorphism class.
    pub fn representative(&self) -> Matroid {
        Matroid::from_raw_bases(self.n, self.canonical_bases.clone())
            .expect("canonical bases come from a valid matroid")
    }
}

pub(crate) fn relabel_bits(mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= 1 << perm[i];
    }
    out
}

/// Compute the canonical key by scanning all permutations of the ground set.
///
/// The scan is exhaustive; cheap invariants only short-circuit comparisons,
/// never the search, so the result cannot depend on the input labeling.
pub fn canonical_key(m: &Matroid) -> IsoKey {
    let n = m.n();
    let bases = m.raw_bases();
    let mut best: Vec<u32> = bases.to_vec();
    best.sort_unstable();
    let mut buf: Vec<u32> = Vec::with_capacity(bases.len());
    for_each_permutation(n, |perm| {
        buf.clear();
        buf.extend(bases.iter().map(|&b| relabel_bits(b, perm)));
        buf.sort_unstable();
        if buf < best {
            std::mem::swap(&mut best, &mut buf);
        }
        false
    });
    IsoKey { n, rank: m.rank_total(), canonical_bases: best }
}

/// Search for a relabeling carrying the bases of `m` exactly onto those of
/// `n`; returns the lexicographically least one in one-line notation.
///
/// Deliberately independent of [`canonical_key`]: the two routes cross-check
/// each other in the test suite.
pub fn is_isomorphic(m: &Matroid, n: &Matroid) -> Option<Bijection> {
    if m.n() != n.n()
        || m.rank_total() != n.rank_total()
        || m.basis_count() != n.basis_count()
        || degree_multiset(m) != degree_multiset(n)
    {
        return None;
    }
    let target = n.raw_bases();
    let source = m.raw_bases();
    let mut found: Option<Bijection> = None;
    let mut buf: Vec<u32> = Vec::with_capacity(source.len());
    for_each_permutation(m.n(), |perm| {
        buf.clear();
        buf.extend(source.iter().map(|&b| relabel_bits(b, perm)));
        buf.sort_unstable();
        if buf == target {
            found = Some(Bijection::new(perm.to_vec()).expect("permutation scan"));
            true
        } else {
            false
        }
    });
    found
}

/// Sorted list of basis-membership counts per element.
fn degree_multiset(m: &Matroid) -> Vec<usize> {
    let mut degrees: Vec<usize> = (0..m.n())
        .map(|i| m.raw_bases().iter().filter(|&&b| b & (1 << i) != 0).count())
        .collect();
    degrees.sort_unstable();
    degrees
}
