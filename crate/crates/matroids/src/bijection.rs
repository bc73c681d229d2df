//! Relabelings of ground sets: permutation-like maps carrying isomorphisms
//! and weak maps.

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use std::fmt;

/// A bijection between two ground sets of equal size, stored as the image
/// of each source index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bijection {
    forward: Vec<usize>,
}

impl Bijection {
    pub fn new(forward: Vec<usize>) -> Result<Self> {
        let n = forward.len();
        let mut seen = vec![false; n];
        for &img in &forward {
            if img >= n || seen[img] {
                return Err(Error::NotAPermutation(n));
            }
            seen[img] = true;
        }
        Ok(Self { forward })
    }

    pub fn identity(n: usize) -> Self {
        Self { forward: (0..n).collect() }
    }

    pub fn size(&self) -> usize {
        self.forward.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.forward[i]
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.forward.len()];
        for (i, &img) in self.forward.iter().enumerate() {
            inv[img] = i;
        }
        Self { forward: inv }
    }

    /// `self` after `other`: `(other.then(self))(i) = self(other(i))`.
    pub fn compose_after(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size());
        Self {
            forward: other.forward.iter().map(|&i| self.forward[i]).collect(),
        }
    }

    /// Image of a subset of the source ground set.
    pub fn image(&self, a: SubsetMask) -> SubsetMask {
        assert_eq!(a.width(), self.size());
        let mut bits = 0u32;
        for e in a.elements() {
            bits |= 1 << self.forward[e];
        }
        SubsetMask::new(bits, self.size()).expect("permutation preserves width")
    }

    /// Preimage of a subset of the target ground set.
    pub fn preimage(&self, b: SubsetMask) -> SubsetMask {
        assert_eq!(b.width(), self.size());
        let mut bits = 0u32;
        for (i, &img) in self.forward.iter().enumerate() {
            if b.contains(img) {
                bits |= 1 << i;
            }
        }
        SubsetMask::new(bits, self.size()).expect("permutation preserves width")
    }

    /// Parse one-line notation `p0,p1,...,p(n-1)`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Self::new(Vec::new());
        }
        let forward = s
            .split(',')
            .map(|p| p.parse().map_err(|_| Error::Parse(format!("bad image {p:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        Self::new(forward)
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &img in &self.forward {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{img}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Visit every permutation of `0..n` in lexicographic order of one-line
/// notation. The visitor returns `true` to stop the scan early.
pub fn for_each_permutation<F: FnMut(&[usize]) -> bool>(n: usize, mut visit: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if visit(&perm) {
            return;
        }
        // next_permutation in place
        if n < 2 {
            return;
        }
        let mut i = n - 1;
        while i > 0 && perm[i - 1] >= perm[i] {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 1] {
            j -= 1;
        }
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_validation() {
        assert!(Bijection::new(vec![1, 0, 2]).is_ok());
        assert_eq!(Bijection::new(vec![1, 1, 2]), Err(Error::NotAPermutation(3)));
        assert_eq!(Bijection::new(vec![0, 3]), Err(Error::NotAPermutation(2)));
    }

    #[test]
    fn image_preimage_roundtrip() {
        let p = Bijection::new(vec![2, 0, 1]).unwrap();
        let a = SubsetMask::from_elements(&[0, 2], 3).unwrap();
        assert_eq!(p.preimage(p.image(a)), a);
        assert_eq!(p.compose_after(&p.inverse()), Bijection::identity(3));
    }

    #[test]
    fn lexicographic_permutations() {
        let mut seen = Vec::new();
        for_each_permutation(3, |p| {
            seen.push(p.to_vec());
            false
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1, 2]);
        assert_eq!(seen[5], vec![2, 1, 0]);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn one_line_notation() {
        let p = Bijection::parse("2,0,1").unwrap();
        assert_eq!(p.to_string(), "2,0,1");
        assert!(Bijection::parse("2,2,1").is_err());
    }
}
