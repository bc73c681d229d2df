//! The free product of matroids and the operations built on top of it:
//! rank-minimum search, the strict-inequality check, factorization counting
//! and factor recovery.

use crate::error::{Error, Result};
use crate::iso::{canonical_key, is_isomorphic};
use crate::mask::{SubsetMask, MAX_GROUND_SET};
use crate::matroid::Matroid;

/// An ordered factorization of a matroid into a free product, together with
/// the subset of the product's ground set playing the role of the left
/// factor's ground set.
#[derive(Clone, Debug)]
pub struct FactorSplit {
    pub left: Matroid,
    pub right: Matroid,
    pub witness: SubsetMask,
}

/// `M □ N` on `M.n + N.n` elements, with `N` shifted past `M`.
///
/// A set is independent iff its `S`-part is independent in `M` and the
/// rank-lack of the `S`-part covers the nullity of the `T`-part; the bases
/// are built directly from the corresponding characterization (`S`-part
/// independent, `T`-part spanning, rank-lack equal to nullity) and then
/// revalidated against the exchange axiom.
pub fn free_product(m: &Matroid, n: &Matroid) -> Result<Matroid> {
    let total = m.n() + n.n();
    if total > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(total));
    }

    // Tables over the factor ground sets, indexed by raw mask.
    let mut left: Vec<Option<usize>> = Vec::with_capacity(1 << m.n()); // rank-lack of independent sets
    for a in SubsetMask::all(m.n()) {
        left.push(if m.is_independent(a)? { Some(m.rank_lack(a)?) } else { None });
    }
    let mut right: Vec<Option<usize>> = Vec::with_capacity(1 << n.n()); // nullity of spanning sets
    for b in SubsetMask::all(n.n()) {
        right.push(if n.spans(b)? { Some(n.nullity(b)?) } else { None });
    }

    let mut bases = Vec::new();
    for (a_bits, lack) in left.iter().enumerate() {
        let Some(lack) = lack else { continue };
        for (b_bits, null) in right.iter().enumerate() {
            if *null == Some(*lack) {
                bases.push(a_bits as u32 | ((b_bits as u32) << m.n()));
            }
        }
    }
    Matroid::from_raw_bases(total, bases)
}

/// Minimum of `ρ_L(U)` over all `k`-subsets `U`, with every minimizer in
/// ascending mask order.
pub fn min_rank_over_k_subsets(l: &Matroid, k: usize) -> Result<(usize, Vec<SubsetMask>)> {
    if k > l.n() {
        return Err(Error::KOutOfRange { k, n: l.n() });
    }
    let mut min = usize::MAX;
    let mut minimizers = Vec::new();
    for u in SubsetMask::k_subsets(l.n(), k) {
        let r = l.rank(u)?;
        if r < min {
            min = r;
            minimizers.clear();
        }
        if r == min {
            minimizers.push(u);
        }
    }
    Ok((min, minimizers))
}

/// Exhaustively check the strict rank inequality in `L = M □ N`: every
/// `|S|`-subset `U` that meets a nonloop of `N` and whose complement meets a
/// nonisthmus of `M` has `ρ_L(U) > ρ(M)`.
pub fn strict_rank_check(m: &Matroid, n: &Matroid) -> Result<bool> {
    let l = free_product(m, n)?;
    let s_size = m.n();
    let loops_n = n.loops();
    let ist_m = m.isthmuses();
    for u in SubsetMask::k_subsets(l.n(), s_size) {
        let u_t = shifted_t_part(u, s_size, n.n());
        let v_s = truncated_s_part(u.complement(), s_size);
        let hypothesis = !u_t.is_subset_of(loops_n) && !v_s.is_subset_of(ist_m);
        if hypothesis && l.rank(u)? <= m.rank_total() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The coefficient `α_L(M, N)`: how many subsets `A` of the ground set of
/// `L` satisfy `L|A ≅ M` and `L/A ≅ N`.
pub fn count_factorizations(l: &Matroid, m: &Matroid, n: &Matroid) -> Result<usize> {
    if l.n() != m.n() + n.n() {
        return Err(Error::SizeMismatch { left: l.n(), right: m.n() + n.n() });
    }
    let key_m = canonical_key(m);
    let key_n = canonical_key(n);
    let mut count = 0;
    for a in SubsetMask::k_subsets(l.n(), m.n()) {
        if canonical_key(&l.restrict(a)?) == key_m && canonical_key(&l.contract(a)?) == key_n {
            count += 1;
        }
    }
    Ok(count)
}

/// Recover an ordered free-product factorization of `L` with left factor of
/// size `k`, searching rank-minimizing witnesses in ascending mask order.
///
/// All valid splits agree up to isomorphism, so returning the first is a
/// canonical choice.
pub fn recover_factors(l: &Matroid, k: usize) -> Result<FactorSplit> {
    let (_, minimizers) = min_rank_over_k_subsets(l, k)?;
    for u in minimizers {
        let left = l.restrict(u)?;
        let right = l.contract(u)?;
        let candidate = free_product(&left, &right)?;
        if is_isomorphic(l, &candidate).is_some() {
            return Ok(FactorSplit { left, right, witness: u });
        }
    }
    Err(Error::NotAFreeProduct(k))
}

/// The part of `u` above the split point, as a subset of `N`'s ground set.
pub(crate) fn shifted_t_part(u: SubsetMask, s_size: usize, t_size: usize) -> SubsetMask {
    SubsetMask::new(u.bits() >> s_size, t_size).expect("T part in range")
}

/// The part of `u` below the split point, as a subset of `M`'s ground set.
pub(crate) fn truncated_s_part(u: SubsetMask, s_size: usize) -> SubsetMask {
    let keep = if s_size == 32 { u32::MAX } else { (1u32 << s_size) - 1 };
    SubsetMask::new(u.bits() & keep, s_size).expect("S part in range")
}
