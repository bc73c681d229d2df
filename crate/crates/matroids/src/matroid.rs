//! Matroids represented by their set of bases, with the rank calculus,
//! minors, duality and direct sum derived from that representation.

use crate::bijection::Bijection;
use crate::error::{Error, Result};
use crate::mask::{parse_subset, SubsetMask, MAX_GROUND_SET};
use std::fmt;
use std::str::FromStr;

/// A matroid on the ground set `{0, .., n-1}`, given by its bases.
///
/// Construction always validates the basis-exchange axiom, so every value of
/// this type is a genuine matroid. Values are immutable; all operations are
/// pure and return fresh matroids.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matroid {
    n: usize,
    /// Sorted, deduplicated basis masks of width `n`.
    bases: Vec<u32>,
}

impl Matroid {
    /// Build a matroid from a basis family, validating every invariant.
    pub fn from_bases(n: usize, family: &[SubsetMask]) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        for &m in family {
            if m.width() != n {
                return Err(Error::WidthMismatch { expected: n, found: m.width() });
            }
        }
        let mut bases: Vec<u32> = family.iter().map(|m| m.bits()).collect();
        bases.sort_unstable();
        bases.dedup();
        validate_bases(n, &bases)?;
        Ok(Self { n, bases })
    }

    pub(crate) fn from_raw_bases(n: usize, mut bases: Vec<u32>) -> Result<Self> {
        bases.sort_unstable();
        bases.dedup();
        validate_bases(n, &bases)?;
        Ok(Self { n, bases })
    }

    /// The empty matroid, unit of both the direct sum and the free product.
    pub fn empty() -> Self {
        Self { n: 0, bases: vec![0] }
    }

    /// The uniform matroid `U_{k,n}`: every `k`-subset is a basis.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::KOutOfRange { k, n });
        }
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let bases = SubsetMask::k_subsets(n, k).map(|m| m.bits()).collect();
        Ok(Self { n, bases })
    }

    /// The free matroid on `n` elements: every subset is independent.
    pub fn free(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    /// The rank-zero matroid on `n` elements: every element is a loop.
    pub fn zero(n: usize) -> Result<Self> {
        Self::uniform(0, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground_set(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// Common size of all bases.
    pub fn rank_total(&self) -> usize {
        self.bases[0].count_ones() as usize
    }

    pub fn basis_count(&self) -> usize {
        self.bases.len()
    }

    pub fn bases(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        let n = self.n;
        self.bases.iter().map(move |&b| SubsetMask::new(b, n).expect("stored basis in range"))
    }

    pub(crate) fn raw_bases(&self) -> &[u32] {
        &self.bases
    }

    fn check_width(&self, a: SubsetMask) -> Result<()> {
        if a.width() != self.n {
            return Err(Error::WidthMismatch { expected: self.n, found: a.width() });
        }
        Ok(())
    }

    /// `ρ_M(A)`: size of a largest independent subset of `A`.
    pub fn rank(&self, a: SubsetMask) -> Result<usize> {
        self.check_width(a)?;
        let bits = a.bits();
        Ok(self
            .bases
            .iter()
            .map(|&b| (b & bits).count_ones() as usize)
            .max()
            .expect("bases nonempty"))
    }

    /// `ν_M(A) = |A| - ρ_M(A)`.
    pub fn nullity(&self, a: SubsetMask) -> Result<usize> {
        Ok(a.len() - self.rank(a)?)
    }

    /// `λ_M(A) = ρ(M) - ρ_M(A)`; zero exactly when `A` spans.
    pub fn rank_lack(&self, a: SubsetMask) -> Result<usize> {
        Ok(self.rank_total() - self.rank(a)?)
    }

    pub fn is_independent(&self, a: SubsetMask) -> Result<bool> {
        self.check_width(a)?;
        let bits = a.bits();
        Ok(self.bases.iter().any(|&b| bits & !b == 0))
    }

    pub fn spans(&self, a: SubsetMask) -> Result<bool> {
        Ok(self.rank_lack(a)? == 0)
    }

    /// Elements contained in no basis.
    pub fn loops(&self) -> SubsetMask {
        let union = self.bases.iter().fold(0u32, |acc, &b| acc | b);
        SubsetMask::new(!union & SubsetMask::full(self.n).bits(), self.n).expect("in range")
    }

    /// Elements contained in every basis.
    pub fn isthmuses(&self) -> SubsetMask {
        let inter = self.bases.iter().fold(u32::MAX, |acc, &b| acc & b);
        SubsetMask::new(inter & SubsetMask::full(self.n).bits(), self.n).expect("in range")
    }

    /// `M|A`, renumbered onto `0..|A|-1` by ascending original index.
    pub fn restrict(&self, a: SubsetMask) -> Result<Matroid> {
        Ok(self.restrict_with_map(a)?.0)
    }

    /// `M|A` together with the index map: entry `i` is the original element
    /// that became element `i` of the minor.
    pub fn restrict_with_map(&self, a: SubsetMask) -> Result<(Matroid, Vec<usize>)> {
        self.check_width(a)?;
        let r = self.rank(a)?;
        let mut bases = Vec::new();
        for sub in a.submasks() {
            if sub.len() == r && self.is_independent(sub)? {
                bases.push(sub.compress_into(a).bits());
            }
        }
        let minor = Matroid::from_raw_bases(a.len(), bases)?;
        Ok((minor, a.elements().collect()))
    }

    /// `M/A`, renumbered onto `0..n-|A|-1` by ascending original index.
    ///
    /// Uses the lexicographically least basis `E` of `M|A`; the result does
    /// not depend on that choice.
    pub fn contract(&self, a: SubsetMask) -> Result<Matroid> {
        Ok(self.contract_with_map(a)?.0)
    }

    pub fn contract_with_map(&self, a: SubsetMask) -> Result<(Matroid, Vec<usize>)> {
        self.check_width(a)?;
        let e = self.lex_least_basis_within(a)?;
        self.contract_via(a, e)
    }

    /// Lexicographically least basis of `M|A`, as a subset of the original
    /// ground set.
    pub(crate) fn lex_least_basis_within(&self, a: SubsetMask) -> Result<SubsetMask> {
        self.check_width(a)?;
        let mut e = SubsetMask::empty(self.n);
        for x in a.elements() {
            let cand = e.union(SubsetMask::singleton(x, self.n));
            if self.is_independent(cand)? {
                e = cand;
            }
        }
        Ok(e)
    }

    /// Contraction computed against an explicit basis `e` of `M|A`.
    pub(crate) fn contract_via(&self, a: SubsetMask, e: SubsetMask) -> Result<(Matroid, Vec<usize>)> {
        let comp = a.complement();
        let target = self.rank_total() - self.rank(a)?;
        let mut bases = Vec::new();
        for sub in comp.submasks() {
            if sub.len() == target && self.is_independent(sub.union(e))? {
                bases.push(sub.compress_into(comp).bits());
            }
        }
        let minor = Matroid::from_raw_bases(comp.len(), bases)?;
        Ok((minor, comp.elements().collect()))
    }

    /// `M*`: bases are the complements of the bases of `M`.
    pub fn dual(&self) -> Matroid {
        let full = SubsetMask::full(self.n).bits();
        let bases = self.bases.iter().map(|&b| !b & full).collect();
        Matroid::from_raw_bases(self.n, bases).expect("dual of a matroid is a matroid")
    }

    /// `M ⊕ N`, with the elements of `N` shifted past those of `M`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b in &self.bases {
            for &c in &other.bases {
                bases.push(b | (c << self.n));
            }
        }
        Matroid::from_raw_bases(n, bases)
    }

    /// The image of `M` under a relabeling of its ground set.
    pub fn relabel(&self, p: &Bijection) -> Matroid {
        assert_eq!(p.size(), self.n, "relabeling size mismatch");
        let bases = self.bases().map(|b| p.image(b).bits()).collect();
        Matroid::from_raw_bases(self.n, bases).expect("relabeling preserves the axioms")
    }
}

fn validate_bases(n: usize, bases: &[u32]) -> Result<()> {
    if bases.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mk = |bits: u32| SubsetMask::new(bits, n).expect("validated width");
    let card = bases[0].count_ones();
    for &b in &bases[1..] {
        if b.count_ones() != card {
            return Err(Error::UnequalCardinality { first: mk(bases[0]), second: mk(b) });
        }
    }
    for &b1 in bases {
        for &b2 in bases {
            if b1 == b2 {
                continue;
            }
            let mut out = b1 & !b2;
            while out != 0 {
                let x = out.trailing_zeros();
                out &= out - 1;
                let stripped = b1 & !(1 << x);
                let mut incoming = b2 & !b1;
                let mut ok = false;
                while incoming != 0 {
                    let y = incoming.trailing_zeros();
                    incoming &= incoming - 1;
                    if bases.binary_search(&(stripped | (1 << y))).is_ok() {
                        ok = true;
                        break;
                    }
                }
                if !ok {
                    return Err(Error::ExchangeViolation {
                        from: mk(b1),
                        to: mk(b2),
                        element: x as usize,
                    });
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for Matroid {
    /// Matroid literal: `<n>:<basis>(;<basis>)*`, bases in ascending mask order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        let mut first = true;
        for b in self.bases() {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "{b}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Matroid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains(char::is_whitespace) {
            return Err(Error::Parse("whitespace inside matroid literal".into()));
        }
        let (n_part, bases_part) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in matroid literal {s:?}")))?;
        let n: usize = n_part
            .parse()
            .map_err(|_| Error::Parse(format!("bad ground-set size {n_part:?}")))?;
        let mut family = Vec::new();
        for part in bases_part.split(';') {
            let b = parse_subset(part, n)?;
            if family.contains(&b) {
                return Err(Error::Parse(format!("duplicate basis {b}")));
            }
            family.push(b);
        }
        Matroid::from_bases(n, &family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_double_points() -> Matroid {
        "4:0,2;0,3;1,2;1,3".parse().unwrap()
    }

    #[test]
    fn from_bases_accepts_uniform_and_degenerate() {
        let u23 = Matroid::from_bases(
            3,
            &[
                SubsetMask::from_elements(&[0, 1], 3).unwrap(),
                SubsetMask::from_elements(&[0, 2], 3).unwrap(),
                SubsetMask::from_elements(&[1, 2], 3).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(u23, Matroid::uniform(2, 3).unwrap());
        assert_eq!(u23.rank_total(), 2);

        let loop1 = Matroid::from_bases(1, &[SubsetMask::empty(1)]).unwrap();
        assert_eq!(loop1.rank_total(), 0);
    }

    #[test]
    fn from_bases_rejections() {
        assert_eq!(Matroid::from_bases(2, &[]), Err(Error::EmptyFamily));
        let mixed = [
            SubsetMask::from_elements(&[0], 2).unwrap(),
            SubsetMask::from_elements(&[1], 2).unwrap(),
            SubsetMask::from_elements(&[0, 1], 2).unwrap(),
        ];
        assert!(matches!(
            Matroid::from_bases(2, &mixed),
            Err(Error::UnequalCardinality { .. })
        ));
        // {0,1} and {2,3} with nothing in between violates exchange
        let gap = [
            SubsetMask::from_elements(&[0, 1], 4).unwrap(),
            SubsetMask::from_elements(&[2, 3], 4).unwrap(),
        ];
        assert!(matches!(
            Matroid::from_bases(4, &gap),
            Err(Error::ExchangeViolation { .. })
        ));
    }

    #[test]
    fn rank_calculus() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.rank(SubsetMask::full(3)).unwrap(), 2);
        let loop1: Matroid = "1:e".parse().unwrap();
        assert_eq!(loop1.rank(SubsetMask::singleton(0, 1)).unwrap(), 0);
        let n = two_double_points();
        assert_eq!(n.rank(parse_subset("0,1,2", 4).unwrap()).unwrap(), 2);
        assert_eq!(n.nullity(parse_subset("0,1", 4).unwrap()).unwrap(), 1);
        assert_eq!(n.nullity(SubsetMask::empty(4)).unwrap(), 0);
        assert_eq!(Matroid::free(3).unwrap().nullity(parse_subset("0,2", 3).unwrap()).unwrap(), 0);
        assert_eq!(n.rank_lack(SubsetMask::full(4)).unwrap(), 0);
        assert_eq!(u23.rank_lack(SubsetMask::empty(3)).unwrap(), 2);
        assert_eq!(n.rank_lack(parse_subset("0", 4).unwrap()).unwrap(), 1);
        assert_eq!(
            u23.rank(SubsetMask::empty(4)),
            Err(Error::WidthMismatch { expected: 3, found: 4 })
        );
    }

    #[test]
    fn independence_and_spanning() {
        let n = two_double_points();
        assert!(n.is_independent(SubsetMask::empty(4)).unwrap());
        assert!(n.is_independent(parse_subset("0,2", 4).unwrap()).unwrap());
        assert!(n.spans(parse_subset("0,2", 4).unwrap()).unwrap());
        assert!(!Matroid::zero(1).unwrap().is_independent(SubsetMask::singleton(0, 1)).unwrap());
        assert!(!Matroid::uniform(2, 3).unwrap().spans(parse_subset("0", 3).unwrap()).unwrap());
    }

    #[test]
    fn restriction() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.restrict(SubsetMask::full(3)).unwrap(), u23);
        assert_eq!(
            u23.restrict(parse_subset("0,1", 3).unwrap()).unwrap(),
            Matroid::uniform(2, 2).unwrap()
        );
        let single_double_point = two_double_points()
            .restrict(parse_subset("0,1", 4).unwrap())
            .unwrap();
        assert_eq!(single_double_point, Matroid::uniform(1, 2).unwrap());
        let (_, map) = two_double_points()
            .restrict_with_map(parse_subset("1,3", 4).unwrap())
            .unwrap();
        assert_eq!(map, vec![1, 3]);
    }

    #[test]
    fn contraction() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.contract(SubsetMask::empty(3)).unwrap(), u23);
        assert_eq!(
            u23.contract(parse_subset("0", 3).unwrap()).unwrap(),
            Matroid::uniform(1, 2).unwrap()
        );
        assert_eq!(
            Matroid::free(3).unwrap().contract(parse_subset("0,1", 3).unwrap()).unwrap(),
            Matroid::free(1).unwrap()
        );
    }

    #[test]
    fn duality() {
        assert_eq!(Matroid::uniform(2, 3).unwrap().dual(), Matroid::uniform(1, 3).unwrap());
        let loop1: Matroid = "1:e".parse().unwrap();
        assert_eq!(loop1.dual(), Matroid::free(1).unwrap());
        let m = two_double_points();
        assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn direct_sums() {
        let m = two_double_points();
        assert_eq!(m.direct_sum(&Matroid::empty()).unwrap(), m);
        let li = Matroid::free(1).unwrap().direct_sum(&Matroid::zero(1).unwrap()).unwrap();
        assert_eq!(li.to_string(), "2:0");
        let u = Matroid::uniform(2, 3).unwrap();
        assert_eq!(
            u.direct_sum(&m).unwrap().basis_count(),
            u.basis_count() * m.basis_count()
        );
    }

    #[test]
    fn loops_and_isthmuses() {
        let f = Matroid::free(3).unwrap();
        assert!(f.loops().is_empty());
        assert_eq!(f.isthmuses(), SubsetMask::full(3));
        let loop1: Matroid = "1:e".parse().unwrap();
        assert_eq!(loop1.loops(), SubsetMask::singleton(0, 1));
        assert!(Matroid::uniform(2, 3).unwrap().isthmuses().is_empty());
    }

    #[test]
    fn constructors() {
        assert_eq!(Matroid::uniform(2, 3).unwrap().basis_count(), 3);
        assert_eq!(Matroid::zero(2).unwrap().to_string(), "2:e");
        assert_eq!(Matroid::free(0).unwrap(), Matroid::empty());
        assert_eq!(Matroid::uniform(4, 3), Err(Error::KOutOfRange { k: 4, n: 3 }));
    }

    #[test]
    fn literal_roundtrip_and_rejection() {
        for s in ["3:0,1;0,2;1,2", "1:e", "0:e", "4:0,2;1,2;0,3;1,3"] {
            let m: Matroid = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
        assert!("3:0,1; 0,2".parse::<Matroid>().is_err());
        assert!("3:1,0".parse::<Matroid>().is_err());
        assert!("3:0,3".parse::<Matroid>().is_err());
        assert!("3:0,1;0,1".parse::<Matroid>().is_err());
        assert!("3:0,0".parse::<Matroid>().is_err());
    }
}
