//! Bijective weak maps: relabelings under which preimages of independent
//! sets stay independent, plus the explicit block-exchange map that turns a
//! rank-minimizing subset of a free product into weak maps onto the factors.

use crate::bijection::{for_each_permutation, Bijection};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;

/// Is `phi: P -> Q` a weak map, i.e. is `phi^{-1}(I)` independent in `P` for
/// every independent `I` of `Q`?
///
/// Checking preimages of bases suffices: every independent set of `Q` lies
/// inside a basis and independence in `P` is closed downward. The test suite
/// cross-checks this reduction against the all-independents form.
pub fn is_weak_map(p: &Matroid, q: &Matroid, phi: &Bijection) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch { left: p.n(), right: q.n() });
    }
    if phi.size() != p.n() {
        return Err(Error::SizeMismatch { left: phi.size(), right: p.n() });
    }
    for b in q.bases() {
        if !p.is_independent(phi.preimage(b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First bijection in lexicographic one-line order that is a weak map
/// `P -> Q`, if any.
pub fn find_weak_map(p: &Matroid, q: &Matroid) -> Result<Option<Bijection>> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch { left: p.n(), right: q.n() });
    }
    let mut found = None;
    let mut err = None;
    for_each_permutation(p.n(), |perm| {
        let phi = Bijection::new(perm.to_vec()).expect("permutation scan");
        match is_weak_map(p, q, &phi) {
            Ok(true) => {
                found = Some(phi);
                true
            }
            Ok(false) => false,
            Err(e) => {
                err = Some(e);
                true
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// The weak maps produced by a rank-minimizing subset of a free product.
///
/// Given `L = M □ N` (with `M` on the low-index block) and `U` with
/// `|U| = |S|` and `ρ_L(U) = ρ(M)`, exchanges the stranded blocks `V∩S` and
/// `U∩T` through the ascending-order pairing and restricts to `U` and its
/// complement, yielding bijections `L|U -> M` and `L/U -> N`. Both are weak
/// maps.
pub fn theorem_phi(l: &Matroid, m: &Matroid, n: &Matroid, u: SubsetMask) -> Result<(Bijection, Bijection)> {
    let order: Vec<usize> = (0..pairing_size(l, m, u)?).collect();
    theorem_phi_with_pairing(l, m, n, u, &order)
}

/// Same construction with an arbitrary pairing of the stranded blocks:
/// `pairing[i] = j` sends the `i`-th element of `V∩S` (ascending) to the
/// `j`-th element of `U∩T` (ascending).
pub fn theorem_phi_with_pairing(
    l: &Matroid,
    m: &Matroid,
    n: &Matroid,
    u: SubsetMask,
    pairing: &[usize],
) -> Result<(Bijection, Bijection)> {
    let strand = pairing_size(l, m, u)?;
    if n.n() + m.n() != l.n() {
        return Err(Error::SizeMismatch { left: m.n() + n.n(), right: l.n() });
    }
    if pairing.len() != strand {
        return Err(Error::SizeMismatch { left: pairing.len(), right: strand });
    }
    Bijection::new(pairing.to_vec())?;

    let s_size = m.n();
    let s_block = SubsetMask::new(if s_size == 32 { u32::MAX } else { (1u32 << s_size) - 1 }, l.n())
        .expect("block within ground set");
    let v = u.complement();
    let v_s: Vec<usize> = v.intersection(s_block).elements().collect();
    let u_t: Vec<usize> = u.difference(s_block).elements().collect();

    let mut phi: Vec<usize> = (0..l.n()).collect();
    for (i, &x) in v_s.iter().enumerate() {
        let y = u_t[pairing[i]];
        phi[x] = y;
        phi[y] = x;
    }

    let phi1 = Bijection::new(u.elements().map(|x| phi[x]).collect())
        .expect("exchange map sends U onto the S block");
    let phi2 = Bijection::new(v.elements().map(|x| phi[x] - s_size).collect())
        .expect("exchange map sends V onto the T block");
    Ok((phi1, phi2))
}

fn pairing_size(l: &Matroid, m: &Matroid, u: SubsetMask) -> Result<usize> {
    if u.width() != l.n() {
        return Err(Error::WidthMismatch { expected: l.n(), found: u.width() });
    }
    if u.len() != m.n() {
        return Err(Error::HypothesisViolation(format!(
            "|U| = {} but the left factor has {} elements",
            u.len(),
            m.n()
        )));
    }
    if l.rank(u)? != m.rank_total() {
        return Err(Error::HypothesisViolation(format!(
            "rank of U is {} but the left factor has rank {}",
            l.rank(u)?,
            m.rank_total()
        )));
    }
    let s_size = m.n();
    Ok(u.elements().filter(|&x| x >= s_size).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_product::free_product;

    #[test]
    fn identity_is_weak() {
        let m: Matroid = "4:0,2;0,3;1,2;1,3".parse().unwrap();
        assert!(is_weak_map(&m, &m, &Bijection::identity(4)).unwrap());
    }

    #[test]
    fn two_element_weak_maps() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let loop_isthmus: Matroid = "2:0".parse().unwrap();
        assert!(is_weak_map(&u12, &loop_isthmus, &Bijection::identity(2)).unwrap());
        // no bijection is weak in the other direction
        assert!(find_weak_map(&loop_isthmus, &u12).unwrap().is_none());
        assert!(find_weak_map(&u12, &loop_isthmus).unwrap().is_some());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let a = Matroid::free(2).unwrap();
        let b = Matroid::free(3).unwrap();
        assert!(is_weak_map(&a, &b, &Bijection::identity(2)).is_err());
        assert!(find_weak_map(&a, &b).is_err());
    }

    #[test]
    fn theorem_map_on_swapped_two_set() {
        // L = isthmus □ loop = U_{1,2}; U = {1} has rank 1 = ρ(M)
        let m = Matroid::free(1).unwrap();
        let n = Matroid::zero(1).unwrap();
        let l = free_product(&m, &n).unwrap();
        assert_eq!(l, Matroid::uniform(1, 2).unwrap());
        let u = SubsetMask::singleton(1, 2);
        let (phi1, phi2) = theorem_phi(&l, &m, &n, u).unwrap();
        assert!(is_weak_map(&l.restrict(u).unwrap(), &m, &phi1).unwrap());
        assert!(is_weak_map(&l.contract(u).unwrap(), &n, &phi2).unwrap());
    }

    #[test]
    fn theorem_map_at_u_equals_s_is_identity() {
        let m = Matroid::uniform(2, 3).unwrap();
        let n: Matroid = "4:0,2;0,3;1,2;1,3".parse().unwrap();
        let l = free_product(&m, &n).unwrap();
        let u = SubsetMask::from_elements(&[0, 1, 2], 7).unwrap();
        let (phi1, phi2) = theorem_phi(&l, &m, &n, u).unwrap();
        assert_eq!(phi1, Bijection::identity(3));
        assert_eq!(phi2, Bijection::identity(4));
        assert!(is_weak_map(&l.restrict(u).unwrap(), &m, &phi1).unwrap());
        assert!(is_weak_map(&l.contract(u).unwrap(), &n, &phi2).unwrap());
    }

    #[test]
    fn hypothesis_violation_is_rejected() {
        let m = Matroid::uniform(2, 3).unwrap();
        let n = Matroid::zero(2).unwrap();
        let l = free_product(&m, &n).unwrap();
        // wrong size
        let bad = SubsetMask::from_elements(&[0, 1], 5).unwrap();
        assert!(matches!(theorem_phi(&l, &m, &n, bad), Err(Error::HypothesisViolation(_))));
    }
}
