//! Executable forms of the structural facts about the free product:
//! construction validity, rank additivity, minor recovery, duality,
//! the rank bounds, the weak-map theorem, unique ordered factorization
//! and the Welsh-inequality injectivity count.
//!
//! The same suites back the CLI `verify` verb and the acceptance tests.

use crate::bijection::Bijection;
use crate::catalog::Catalog;
use crate::enumerate::{
    count_classes_by_reverse_key, enumerate_by_independence_oracle, enumerate_matroids,
    welsh_check_catalogs,
};
use crate::error::Result;
use crate::free_product::{
    free_product, min_rank_over_k_subsets, recover_factors, strict_rank_check,
};
use crate::iso::{canonical_key, is_isomorphic, IsoKey};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::weak::{find_weak_map, is_weak_map, theorem_phi_with_pairing};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::{HashMap, HashSet};

/// Fixed seed for the randomized parts of the suites, so reports are
/// reproducible across runs and worker counts.
const SEED: u64 = 0x6d61_7472_6f69_6421;

const RANDOM_PAIRINGS_PER_INSTANCE: usize = 100;

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn from_failures(name: &'static str, scope: String, mut failures: Vec<String>) -> Self {
        failures.sort();
        if failures.is_empty() {
            CheckReport { name, passed: true, detail: scope }
        } else {
            let shown = failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ");
            CheckReport {
                name,
                passed: false,
                detail: format!("{} failures, e.g. {shown}", failures.len()),
            }
        }
    }
}

/// Matroid families indexed by ground-set size: full catalogs up to 6
/// elements, uniform families (which include the free and all-loop
/// matroids) beyond.
pub struct MatroidPool {
    by_size: Vec<Vec<Matroid>>,
}

impl MatroidPool {
    pub fn build(max_size: usize) -> Result<Self> {
        let mut by_size = Vec::new();
        for s in 0..=max_size {
            if s <= 6 {
                by_size.push(enumerate_matroids(s)?.classes().to_vec());
            } else {
                by_size.push((0..=s).map(|k| Matroid::uniform(k, s)).collect::<Result<_>>()?);
            }
        }
        Ok(Self { by_size })
    }

    pub fn from_catalogs(catalogs: &[Catalog], max_size: usize) -> Result<Self> {
        let mut by_size = Vec::new();
        for s in 0..=max_size {
            match catalogs.iter().find(|c| c.n() == s) {
                Some(c) => by_size.push(c.classes().to_vec()),
                None => {
                    by_size.push((0..=s).map(|k| Matroid::uniform(k, s)).collect::<Result<_>>()?)
                }
            }
        }
        Ok(Self { by_size })
    }

    pub fn catalog_sizes(&self) -> usize {
        self.by_size.len() - 1
    }

    /// Ordered factor pairs with combined size at most `max_total`.
    pub fn pairs(&self, max_total: usize) -> Vec<(&Matroid, &Matroid)> {
        let mut out = Vec::new();
        for a in 0..self.by_size.len() {
            for b in 0..self.by_size.len() {
                if a + b > max_total {
                    continue;
                }
                for m in &self.by_size[a] {
                    for n in &self.by_size[b] {
                        out.push((m, n));
                    }
                }
            }
        }
        out
    }

    pub fn of_size(&self, s: usize) -> &[Matroid] {
        &self.by_size[s]
    }
}

fn pair_label(m: &Matroid, n: &Matroid) -> String {
    format!("({m}, {n})")
}

fn par_check<'a, F>(
    name: &'static str,
    pairs: &[(&'a Matroid, &'a Matroid)],
    check: F,
) -> CheckReport
where
    F: Fn(&Matroid, &Matroid) -> Option<String> + Sync,
{
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(m, n)| check(m, n))
        .collect();
    CheckReport::from_failures(name, format!("{} pairs", pairs.len()), failures)
}

/// Free products of all pool pairs pass basis-exchange validation.
pub fn check_construction_validity(pool: &MatroidPool, max_total: usize) -> CheckReport {
    par_check("free-product validity", &pool.pairs(max_total), |m, n| {
        match free_product(m, n) {
            Ok(_) => None,
            Err(e) => Some(format!("{}: {e}", pair_label(m, n))),
        }
    })
}

/// `ρ(M□N) = ρ(M) + ρ(N)`, and the empty matroid is a two-sided unit.
pub fn check_rank_additivity_and_units(pool: &MatroidPool, max_total: usize) -> CheckReport {
    par_check("rank additivity and units", &pool.pairs(max_total), |m, n| {
        let l = match free_product(m, n) {
            Ok(l) => l,
            Err(e) => return Some(format!("{}: {e}", pair_label(m, n))),
        };
        if l.rank_total() != m.rank_total() + n.rank_total() {
            return Some(format!("{}: rank {}", pair_label(m, n), l.rank_total()));
        }
        let e = Matroid::empty();
        if free_product(m, &e).ok().as_ref() != Some(m) || free_product(&e, n).ok().as_ref() != Some(n) {
            return Some(format!("{}: unit law", pair_label(m, n)));
        }
        None
    })
}

/// Restriction to and contraction by the low-index block give back the
/// factors as exact basis sets.
pub fn check_minor_recovery(pool: &MatroidPool, max_total: usize) -> CheckReport {
    par_check("minor recovery", &pool.pairs(max_total), |m, n| {
        let l = free_product(m, n).ok()?;
        let s_block = s_block_mask(m.n(), l.n());
        let back_m = l.restrict(s_block).ok()?;
        let back_n = l.contract(s_block).ok()?;
        if &back_m != m || &back_n != n {
            Some(pair_label(m, n))
        } else {
            None
        }
    })
}

/// `(M□N)* = N*□M*` exactly, after the deterministic relabeling that swaps
/// the two blocks.
pub fn check_duality(pool: &MatroidPool, max_total: usize) -> CheckReport {
    par_check("duality contravariance", &pool.pairs(max_total), |m, n| {
        let l = free_product(m, n).ok()?;
        let swapped = free_product(&n.dual(), &m.dual()).ok()?;
        let relabeled = swapped.relabel(&block_swap(n.n(), m.n()));
        if l.dual() != relabeled {
            Some(pair_label(m, n))
        } else {
            None
        }
    })
}

/// The rank bounds: the minimum rank over `|S|`-subsets of `M□N` is `ρ(M)`,
/// and the strict inequality holds whenever its hypotheses do.
pub fn check_rank_bounds(pool: &MatroidPool, max_total: usize) -> CheckReport {
    par_check("rank bounds", &pool.pairs(max_total), |m, n| {
        let l = free_product(m, n).ok()?;
        match min_rank_over_k_subsets(&l, m.n()) {
            Ok((min, _)) if min == m.rank_total() => {}
            Ok((min, _)) => return Some(format!("{}: min rank {min}", pair_label(m, n))),
            Err(e) => return Some(format!("{}: {e}", pair_label(m, n))),
        }
        match strict_rank_check(m, n) {
            Ok(true) => None,
            Ok(false) => Some(format!("{}: strict inequality", pair_label(m, n))),
            Err(e) => Some(format!("{}: {e}", pair_label(m, n))),
        }
    })
}

/// For every qualifying subset `U` (right size, minimal rank), the exchange
/// construction yields weak maps onto both factors, for the ascending
/// pairing and for randomly sampled pairings of the stranded blocks.
pub fn check_weak_map_theorem(pool: &MatroidPool, max_total: usize) -> CheckReport {
    par_check("weak-map theorem", &pool.pairs(max_total), |m, n| {
        let l = free_product(m, n).ok()?;
        for u in SubsetMask::k_subsets(l.n(), m.n()) {
            if l.rank(u).ok()? != m.rank_total() {
                continue;
            }
            let restricted = l.restrict(u).ok()?;
            let contracted = l.contract(u).ok()?;
            let strand = u.elements().filter(|&x| x >= m.n()).count();
            let mut pairings: Vec<Vec<usize>> = vec![(0..strand).collect()];
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ u64::from(u.bits()));
            for _ in 0..RANDOM_PAIRINGS_PER_INSTANCE {
                let mut p: Vec<usize> = (0..strand).collect();
                p.shuffle(&mut rng);
                pairings.push(p);
            }
            for pairing in &pairings {
                let (phi1, phi2) =
                    match theorem_phi_with_pairing(&l, m, n, u, pairing) {
                        Ok(v) => v,
                        Err(e) => return Some(format!("{}: {e}", pair_label(m, n))),
                    };
                let ok1 = is_weak_map(&restricted, m, &phi1).ok()?;
                let ok2 = is_weak_map(&contracted, n, &phi2).ok()?;
                if !ok1 || !ok2 {
                    return Some(format!("{} at U={{{u}}}", pair_label(m, n)));
                }
            }
        }
        None
    })
}

/// Unique ordered factorization: within each size split the product map on
/// isomorphism classes is injective, and factor recovery round-trips every
/// product.
pub fn check_factorization_uniqueness(pool: &MatroidPool, max_total: usize) -> CheckReport {
    let mut failures = Vec::new();
    let mut pairs_checked = 0usize;
    for a in 0..=max_total.min(pool.catalog_sizes()) {
        for b in 0..=(max_total - a).min(pool.catalog_sizes()) {
            let pairs: Vec<(&Matroid, &Matroid)> = pool
                .of_size(a)
                .iter()
                .flat_map(|m| pool.of_size(b).iter().map(move |n| (m, n)))
                .collect();
            pairs_checked += pairs.len();
            let results: Vec<std::result::Result<IsoKey, String>> = pairs
                .par_iter()
                .map(|(m, n)| {
                    let l = free_product(m, n).map_err(|e| e.to_string())?;
                    let split = recover_factors(&l, m.n()).map_err(|e| e.to_string())?;
                    if is_isomorphic(&split.left, m).is_none() || is_isomorphic(&split.right, n).is_none() {
                        return Err(format!("{}: recovery mismatch", pair_label(m, n)));
                    }
                    Ok(canonical_key(&l))
                })
                .collect();
            let mut seen = HashSet::new();
            for (i, r) in results.iter().enumerate() {
                match r {
                    Err(e) => failures.push(e.clone()),
                    Ok(key) => {
                        if !seen.insert(key.clone()) {
                            let (m, n) = pairs[i];
                            failures.push(format!("{}: product collision", pair_label(m, n)));
                        }
                    }
                }
            }
        }
    }
    CheckReport::from_failures(
        "ordered factorization uniqueness",
        format!("{pairs_checked} pairs"),
        failures,
    )
}

/// Injectivity of the product map between catalogs, plus agreement of the
/// two enumeration strategies (independence-axiom oracle up to 4 elements,
/// reverse-keyed dedup above).
pub fn check_welsh_injectivity(pool: &MatroidPool, max_total: usize) -> CheckReport {
    let mut failures = Vec::new();
    let top = max_total.min(pool.catalog_sizes()).min(6);
    for s in 0..=top {
        let catalog = match Catalog::new(s, pool.of_size(s).to_vec()) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("catalog {s}: {e}"));
                continue;
            }
        };
        if s <= 4 {
            match enumerate_by_independence_oracle(s) {
                Ok(oracle) => {
                    let mut keys = catalog.keys();
                    keys.sort();
                    if keys != oracle {
                        failures.push(format!("catalog {s}: oracle disagrees"));
                    }
                }
                Err(e) => failures.push(format!("catalog {s}: {e}")),
            }
        } else {
            match count_classes_by_reverse_key(s) {
                Ok(count) if count == catalog.len() => {}
                Ok(count) => failures.push(format!(
                    "catalog {s}: reverse-key pass found {count}, expected {}",
                    catalog.len()
                )),
                Err(e) => failures.push(format!("catalog {s}: {e}")),
            }
        }
    }
    let mut checked = 0usize;
    for a in 1..=top {
        for b in 1..=top.saturating_sub(a) {
            let ca = Catalog::new(a, pool.of_size(a).to_vec()).expect("validated above");
            let cb = Catalog::new(b, pool.of_size(b).to_vec()).expect("validated above");
            match welsh_check_catalogs(&ca, &cb) {
                Ok((products, distinct, true)) => {
                    checked += 1;
                    debug_assert_eq!(products, distinct);
                }
                Ok((products, distinct, false)) => failures.push(format!(
                    "({a},{b}): {distinct} distinct of {products} products"
                )),
                Err(e) => failures.push(format!("({a},{b}): {e}")),
            }
        }
    }
    CheckReport::from_failures(
        "Welsh injectivity",
        format!("{checked} size pairs"),
        failures,
    )
}

/// Dual-invariance of catalog key sets and closure of product classes in
/// the catalog of the combined size.
pub fn check_catalog_closure(pool: &MatroidPool, max_total: usize) -> CheckReport {
    let mut failures = Vec::new();
    let top = max_total.min(pool.catalog_sizes()).min(6);
    for s in 0..=top {
        let keys: HashSet<IsoKey> = pool.of_size(s).iter().map(canonical_key).collect();
        for m in pool.of_size(s) {
            if !keys.contains(&canonical_key(&m.dual())) {
                failures.push(format!("catalog {s}: dual of {m} missing"));
            }
        }
    }
    for a in 0..=top {
        for b in 0..=top.saturating_sub(a) {
            let keys: HashSet<IsoKey> = pool.of_size(a + b).iter().map(canonical_key).collect();
            for m in pool.of_size(a) {
                for n in pool.of_size(b) {
                    match free_product(m, n) {
                        Ok(l) => {
                            if !keys.contains(&canonical_key(&l)) {
                                failures.push(format!("{} not in catalog {}", pair_label(m, n), a + b));
                            }
                        }
                        Err(e) => failures.push(format!("{}: {e}", pair_label(m, n))),
                    }
                }
            }
        }
    }
    CheckReport::from_failures("catalog closure", format!("sizes up to {top}"), failures)
}

/// The worked fixture: a three-point line followed by two double points.
/// 25 bases, partitioned exactly into the three announced shapes.
pub fn check_worked_example() -> CheckReport {
    let run = || -> std::result::Result<(), String> {
        let m = Matroid::uniform(2, 3).map_err(|e| e.to_string())?;
        let n: Matroid = "4:0,2;0,3;1,2;1,3".parse().map_err(|e: crate::error::Error| e.to_string())?;
        let l = free_product(&m, &n).map_err(|e| e.to_string())?;
        if l.basis_count() != 25 {
            return Err(format!("{} bases, expected 25", l.basis_count()));
        }
        let excluded: [SubsetMask; 2] = [
            SubsetMask::from_elements(&[0, 1], 4).map_err(|e| e.to_string())?,
            SubsetMask::from_elements(&[2, 3], 4).map_err(|e| e.to_string())?,
        ];
        for basis in l.bases() {
            let a: usize = basis.elements().filter(|&x| x < 3).count();
            let b_mask = SubsetMask::new(basis.bits() >> 3, 4).map_err(|e| e.to_string())?;
            let b = b_mask.len();
            let shape_ok = (a == 0 && b == 4)
                || (a == 1 && b == 3)
                || (a == 2 && b == 2 && !excluded.contains(&b_mask));
            if !shape_ok {
                return Err(format!("basis {{{basis}}} fits no announced shape"));
            }
        }
        Ok(())
    };
    match run() {
        Ok(()) => CheckReport {
            name: "worked example",
            passed: true,
            detail: "25 bases in shapes (i)-(iii)".into(),
        },
        Err(e) => CheckReport { name: "worked example", passed: false, detail: e },
    }
}

/// Empirical weak-order claim: whenever `α_L(M, N) > 0`, weak maps
/// `M□N -> L` and `L -> M⊕N` exist. Stated but not proved in the source
/// material; this is a finding, not a theorem check.
pub fn check_weak_order_claim(pool: &MatroidPool, max_total: usize) -> CheckReport {
    let top = max_total.min(pool.catalog_sizes()).min(6);
    let mut failures = Vec::new();
    let mut positives = 0usize;
    for total in 0..=top {
        for l in pool.of_size(total) {
            // minor key pairs of L, grouped by split size
            let mut minor_pairs: HashMap<(IsoKey, IsoKey), usize> = HashMap::new();
            for k in 0..=total {
                for a in SubsetMask::k_subsets(total, k) {
                    let (Ok(rest), Ok(con)) = (l.restrict(a), l.contract(a)) else { continue };
                    *minor_pairs.entry((canonical_key(&rest), canonical_key(&con))).or_default() += 1;
                }
            }
            let checks: Vec<Option<String>> = (0..=total)
                .flat_map(|s| {
                    pool.of_size(s)
                        .iter()
                        .flat_map(move |m| pool.of_size(total - s).iter().map(move |n| (m, n)))
                })
                .collect::<Vec<_>>()
                .par_iter()
                .map(|(m, n)| {
                    let pair = (canonical_key(m), canonical_key(n));
                    if minor_pairs.get(&pair).copied().unwrap_or(0) == 0 {
                        return None;
                    }
                    let result = (|| -> Result<bool> {
                        let prod = free_product(m, n)?;
                        let sum = m.direct_sum(n)?;
                        Ok(find_weak_map(&prod, l)?.is_some()
                            && find_weak_map(l, &sum)?.is_some())
                    })();
                    match result {
                        Ok(true) => Some(String::new()),
                        Ok(false) => Some(format!("no weak map chain for {} into {l}", pair_label(m, n))),
                        Err(e) => Some(format!("{}: {e}", pair_label(m, n))),
                    }
                })
                .collect();
            for c in checks.into_iter().flatten() {
                if c.is_empty() {
                    positives += 1;
                } else {
                    failures.push(c);
                }
            }
        }
    }
    CheckReport::from_failures(
        "weak-order claim (empirical)",
        format!("{positives} positive-coefficient triples"),
        failures,
    )
}

/// Run every suite, with exhaustive ranges capped at `scale` where a suite's
/// default scope exceeds it.
pub fn run_all(scale: Option<usize>) -> Result<Vec<CheckReport>> {
    let cap = |d: usize| scale.map_or(d, |s| s.min(d));
    let pool = MatroidPool::build(cap(8))?;
    Ok(vec![
        check_construction_validity(&pool, cap(8)),
        check_rank_additivity_and_units(&pool, cap(8)),
        check_minor_recovery(&pool, cap(7)),
        check_duality(&pool, cap(7)),
        check_rank_bounds(&pool, cap(7)),
        check_weak_map_theorem(&pool, cap(7)),
        check_factorization_uniqueness(&pool, cap(6)),
        check_welsh_injectivity(&pool, cap(6)),
        check_catalog_closure(&pool, cap(6)),
        check_worked_example(),
        check_weak_order_claim(&pool, cap(6)),
    ])
}

/// Mask of the low-index block of size `s_size` inside a ground set of
/// size `total`.
pub fn s_block_mask(s_size: usize, total: usize) -> SubsetMask {
    let bits = if s_size == 32 { u32::MAX } else { (1u32 << s_size) - 1 };
    SubsetMask::new(bits, total).expect("block within ground set")
}

/// The relabeling that moves a leading block of size `first` past a trailing
/// block of size `second`.
pub fn block_swap(first: usize, second: usize) -> Bijection {
    let total = first + second;
    let forward = (0..total)
        .map(|i| if i < first { i + second } else { i - first })
        .collect();
    Bijection::new(forward).expect("block swap is a permutation")
}
