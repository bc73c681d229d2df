//! Exhaustive generation of all matroids on a small ground set up to
//! isomorphism, and the injectivity count behind the Welsh inequality.

use crate::bijection::for_each_permutation;
use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::free_product::free_product;
use crate::iso::{canonical_key, relabel_bits, IsoKey};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use rayon::prelude::*;
use std::collections::HashSet;

/// Hard cap on exhaustive generation; 7 is best-effort, above is rejected.
pub const ENUMERATION_CAP: usize = 7;

/// All isomorphism classes of matroids on `n` elements.
///
/// For each rank, backtracks over antichains of equal-size subsets in
/// ascending mask order, keeping only branches whose outstanding exchange
/// obligations can still be met by later subsets, then dedups by canonical
/// key. The search partitions by first-basis choice across workers; the
/// final sort makes the output independent of worker count.
pub fn enumerate_matroids(n: usize) -> Result<Catalog> {
    let keys = generate_class_keys(n, canonical_min_list)?;
    let classes = keys
        .into_iter()
        .map(|bases| Matroid::from_raw_bases(n, bases))
        .collect::<Result<Vec<Matroid>>>()?;
    Catalog::new(n, classes)
}

/// Count classes with an independently coded dedup pass: same backtracking
/// generator, but keyed by the lexicographically greatest relabeled basis
/// list instead of the least. Must agree with [`enumerate_matroids`].
pub fn count_classes_by_reverse_key(n: usize) -> Result<usize> {
    Ok(generate_class_keys(n, reverse_canonical_list)?.len())
}

fn generate_class_keys(n: usize, key_fn: fn(&Matroid) -> Vec<u32>) -> Result<HashSet<Vec<u32>>>
where
{
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCapExceeded(n));
    }
    // (rank, first-basis index) branches, searched independently.
    let mut branches = Vec::new();
    for r in 0..=n {
        let subsets: Vec<u32> = SubsetMask::k_subsets(n, r).map(|m| m.bits()).collect();
        for i in 0..subsets.len() {
            branches.push((subsets.clone(), i));
        }
    }
    let sets: Vec<HashSet<Vec<u32>>> = branches
        .into_par_iter()
        .map(|(subsets, i)| {
            let mut keys = HashSet::new();
            let mut family = vec![subsets[i]];
            let mut emit = |family: &[u32]| {
                let m = Matroid::from_raw_bases(n, family.to_vec())
                    .expect("backtracking emits only exchange-valid families");
                keys.insert(key_fn(&m));
            };
            emit(&family);
            search(&subsets, &mut family, i + 1, &mut emit);
            keys
        })
        .collect();
    let mut all = HashSet::new();
    for s in sets {
        all.extend(s);
    }
    Ok(all)
}

fn canonical_min_list(m: &Matroid) -> Vec<u32> {
    canonical_key(m).canonical_bases().to_vec()
}

fn reverse_canonical_list(m: &Matroid) -> Vec<u32> {
    let bases = m.raw_bases();
    let mut best: Vec<u32> = bases.to_vec();
    best.sort_unstable();
    let mut buf: Vec<u32> = Vec::with_capacity(bases.len());
    for_each_permutation(m.n(), |perm| {
        buf.clear();
        buf.extend(bases.iter().map(|&b| relabel_bits(b, perm)));
        buf.sort_unstable();
        if buf > best {
            std::mem::swap(&mut best, &mut buf);
        }
        false
    });
    best
}

enum FamilyStatus {
    /// Exchange holds for every pair.
    Valid,
    /// Some exchange obligation is open but a later subset could meet it.
    Extendable,
    /// Some obligation can no longer be met; no extension helps.
    Dead,
}

/// Exchange status of a sorted family whose largest member is `last`.
fn family_status(family: &[u32], last: u32) -> FamilyStatus {
    let mut any_open = false;
    for &b1 in family {
        for &b2 in family {
            if b1 == b2 {
                continue;
            }
            let mut out = b1 & !b2;
            while out != 0 {
                let x = out.trailing_zeros();
                out &= out - 1;
                let stripped = b1 & !(1 << x);
                let mut fixed = false;
                let mut fixable_later = false;
                let mut incoming = b2 & !b1;
                while incoming != 0 {
                    let y = incoming.trailing_zeros();
                    incoming &= incoming - 1;
                    let candidate = stripped | (1 << y);
                    if family.binary_search(&candidate).is_ok() {
                        fixed = true;
                        break;
                    }
                    if candidate > last {
                        fixable_later = true;
                    }
                }
                if !fixed {
                    if !fixable_later {
                        return FamilyStatus::Dead;
                    }
                    any_open = true;
                }
            }
        }
    }
    if any_open {
        FamilyStatus::Extendable
    } else {
        FamilyStatus::Valid
    }
}

fn search<F: FnMut(&[u32])>(subsets: &[u32], family: &mut Vec<u32>, start: usize, emit: &mut F) {
    for i in start..subsets.len() {
        family.push(subsets[i]);
        match family_status(family, subsets[i]) {
            FamilyStatus::Dead => {}
            FamilyStatus::Valid => {
                emit(family);
                search(subsets, family, i + 1, emit);
            }
            FamilyStatus::Extendable => search(subsets, family, i + 1, emit),
        }
        family.pop();
    }
}

/// Oracle generation for tiny ground sets: filter every downward-closed
/// subset family by the independence axioms directly.
pub fn enumerate_by_independence_oracle(n: usize) -> Result<Vec<IsoKey>> {
    if n > 4 {
        return Err(Error::EnumerationCapExceeded(n));
    }
    let num_subsets = 1usize << n;
    let mut keys = HashSet::new();
    // A family is a bit over the 2^n subsets; bit `a` set means subset
    // mask `a` is independent.
    for family in 0u32..(1u32 << num_subsets) {
        if family & 1 == 0 {
            continue; // must contain the empty set
        }
        if !is_independence_family(family, n) {
            continue;
        }
        let bases = maximal_members(family, num_subsets);
        let m = Matroid::from_raw_bases(n, bases).expect("axioms checked directly");
        keys.insert(canonical_key(&m));
    }
    let mut out: Vec<IsoKey> = keys.into_iter().collect();
    out.sort();
    Ok(out)
}

fn is_independence_family(family: u32, n: usize) -> bool {
    let num_subsets = 1usize << n;
    for a in 0..num_subsets {
        if family & (1 << a) == 0 {
            continue;
        }
        // downward closure
        let mut bits = a as u32;
        while bits != 0 {
            let x = bits.trailing_zeros();
            bits &= bits - 1;
            if family & (1 << (a & !(1usize << x))) == 0 {
                return false;
            }
        }
        // augmentation against every larger member
        for b in 0..num_subsets {
            if family & (1 << b) == 0 || (b as u32).count_ones() <= (a as u32).count_ones() {
                continue;
            }
            let mut extra = b as u32 & !(a as u32);
            let mut ok = false;
            while extra != 0 {
                let x = extra.trailing_zeros();
                extra &= extra - 1;
                if family & (1 << (a | (1usize << x))) != 0 {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
    }
    true
}

fn maximal_members(family: u32, num_subsets: usize) -> Vec<u32> {
    let mut max_card = 0;
    for a in 0..num_subsets {
        if family & (1 << a) != 0 {
            max_card = max_card.max((a as u32).count_ones());
        }
    }
    (0..num_subsets)
        .filter(|&a| family & (1 << a) != 0 && (a as u32).count_ones() == max_card)
        .map(|a| a as u32)
        .collect()
}

/// Count all pairwise free products of two catalogs and their distinct
/// isomorphism classes. The boolean certifies injectivity of the ordered
/// product map, and with it the Welsh inequality at this size pair.
pub fn welsh_check_catalogs(left: &Catalog, right: &Catalog) -> Result<(usize, usize, bool)> {
    let pairs: Vec<(&Matroid, &Matroid)> = left
        .iter()
        .flat_map(|m| right.iter().map(move |n| (m, n)))
        .collect();
    let keys = pairs
        .par_iter()
        .map(|(m, n)| Ok(canonical_key(&free_product(m, n)?)))
        .collect::<Result<Vec<IsoKey>>>()?;
    let products = keys.len();
    let distinct = keys.iter().collect::<HashSet<_>>().len();
    Ok((products, distinct, distinct == products))
}

/// [`welsh_check_catalogs`] with the catalogs generated on the fly.
pub fn welsh_check(n: usize, m: usize) -> Result<(usize, usize, bool)> {
    welsh_check_catalogs(&enumerate_matroids(n)?, &enumerate_matroids(m)?)
}
