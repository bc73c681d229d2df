//! Subsets of a ground set `{0, .., n-1}` as bit masks.
//!
//! Bit `i` set means element `i` is present. Every mask carries the ambient
//! ground-set size (its width); set operations require equal widths.

use crate::error::{Error, Result};
use std::fmt;

/// Largest supported ground-set size.
pub const MAX_GROUND_SET: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask {
    width: u8,
    bits: u32,
}

impl SubsetMask {
    pub fn new(bits: u32, width: usize) -> Result<Self> {
        if width > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(width));
        }
        if width < 32 && bits >= 1u32 << width {
            return Err(Error::WidthMismatch {
                expected: width,
                found: 32 - bits.leading_zeros() as usize,
            });
        }
        Ok(Self {
            width: width as u8,
            bits,
        })
    }

    pub fn empty(width: usize) -> Self {
        Self::new(0, width).expect("width within cap")
    }

    pub fn full(width: usize) -> Self {
        Self::new(low_bits(width), width).expect("width within cap")
    }

    pub fn singleton(element: usize, width: usize) -> Self {
        assert!(element < width, "element {element} outside ground set of size {width}");
        Self::new(1 << element, width).expect("width within cap")
    }

    pub fn from_elements(elements: &[usize], width: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &e in elements {
            if e >= width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    found: e + 1,
                });
            }
            bits |= 1 << e;
        }
        Self::new(bits, width)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, element: usize) -> bool {
        element < self.width() && self.bits & (1 << element) != 0
    }

    pub fn union(self, other: Self) -> Self {
        self.check_width(other);
        Self { width: self.width, bits: self.bits | other.bits }
    }

    pub fn intersection(self, other: Self) -> Self {
        self.check_width(other);
        Self { width: self.width, bits: self.bits & other.bits }
    }

    pub fn difference(self, other: Self) -> Self {
        self.check_width(other);
        Self { width: self.width, bits: self.bits & !other.bits }
    }

    pub fn complement(self) -> Self {
        Self { width: self.width, bits: !self.bits & low_bits(self.width()) }
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.check_width(other);
        self.bits & !other.bits == 0
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// All `2^width` subsets of the ground set, in ascending mask order.
    pub fn all(width: usize) -> impl Iterator<Item = SubsetMask> {
        assert!(width <= MAX_GROUND_SET);
        let end = 1u64 << width;
        (0..end).map(move |bits| SubsetMask { width: width as u8, bits: bits as u32 })
    }

    /// All `k`-element subsets of the ground set, in ascending mask order.
    pub fn k_subsets(width: usize, k: usize) -> impl Iterator<Item = SubsetMask> {
        assert!(width <= MAX_GROUND_SET);
        let mut next = if k <= width { Some(low_bits(k)) } else { None };
        let limit = low_bits(width);
        std::iter::from_fn(move || {
            let cur = next?;
            // Gosper's hack for the next mask with the same popcount.
            next = if cur == 0 {
                None
            } else {
                let c = cur & cur.wrapping_neg();
                let r = cur + c;
                let n = r | (((cur ^ r) >> 2) / c);
                (n <= limit).then_some(n)
            };
            Some(SubsetMask { width: width as u8, bits: cur })
        })
    }

    /// All subsets of `self`, in ascending mask order.
    pub fn submasks(self) -> impl Iterator<Item = SubsetMask> {
        let sup = self.bits;
        let width = self.width;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == sup { None } else { Some(cur.wrapping_sub(sup) & sup) };
            Some(SubsetMask { width, bits: cur })
        })
    }

    /// Re-index `self` (a subset of `within`) to the ground set `0..within.len()`,
    /// with surviving elements renumbered by ascending original index.
    pub fn compress_into(self, within: Self) -> Self {
        debug_assert!(self.is_subset_of(within));
        let mut out = 0u32;
        for (new_idx, e) in within.elements().enumerate() {
            if self.contains(e) {
                out |= 1 << new_idx;
            }
        }
        SubsetMask { width: within.len() as u8, bits: out }
    }

    fn check_width(self, other: Self) {
        assert_eq!(
            self.width, other.width,
            "mask width mismatch: {} vs {}",
            self.width, other.width
        );
    }
}

fn low_bits(k: usize) -> u32 {
    if k >= 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        let mut first = true;
        for e in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}/{}", self, self.width)
    }
}

/// Parse the subset literal grammar: `e` for the empty set, otherwise a
/// comma-separated strictly ascending list of 0-based indices.
pub fn parse_subset(s: &str, width: usize) -> Result<SubsetMask> {
    if s == "e" {
        return Ok(SubsetMask::empty(width));
    }
    if s.is_empty() {
        return Err(Error::Parse("empty subset literal".into()));
    }
    let mut elements = Vec::new();
    for part in s.split(',') {
        let e: usize = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad element index {part:?}")))?;
        if e >= width {
            return Err(Error::Parse(format!(
                "element {e} out of range for ground set of size {width}"
            )));
        }
        if let Some(&last) = elements.last() {
            if e <= last {
                return Err(Error::Parse(format!(
                    "indices must be strictly ascending, got {last} then {e}"
                )));
            }
        }
        elements.push(e);
    }
    SubsetMask::from_elements(&elements, width)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a = SubsetMask::from_elements(&[0, 2], 4).unwrap();
        let b = SubsetMask::from_elements(&[1, 2], 4).unwrap();
        assert_eq!(a.union(b), SubsetMask::from_elements(&[0, 1, 2], 4).unwrap());
        assert_eq!(a.intersection(b), SubsetMask::from_elements(&[2], 4).unwrap());
        assert_eq!(a.difference(b), SubsetMask::from_elements(&[0], 4).unwrap());
        assert_eq!(a.complement(), SubsetMask::from_elements(&[1, 3], 4).unwrap());
        assert_eq!(a.len(), 2);
        assert!(a.intersection(b).is_subset_of(a));
    }

    #[test]
    fn width_cap() {
        assert_eq!(SubsetMask::new(0, 33), Err(Error::GroundSetTooLarge(33)));
        assert!(SubsetMask::new(8, 3).is_err());
        assert!(SubsetMask::new(7, 3).is_ok());
    }

    #[test]
    fn k_subset_iteration() {
        let threes: Vec<_> = SubsetMask::k_subsets(5, 3).collect();
        assert_eq!(threes.len(), 10);
        assert!(threes.windows(2).all(|w| w[0].bits() < w[1].bits()));
        assert!(threes.iter().all(|m| m.len() == 3));
        assert_eq!(SubsetMask::k_subsets(4, 0).count(), 1);
        assert_eq!(SubsetMask::k_subsets(4, 4).count(), 1);
        assert_eq!(SubsetMask::k_subsets(3, 4).count(), 0);
    }

    #[test]
    fn submask_iteration() {
        let a = SubsetMask::from_elements(&[1, 3], 4).unwrap();
        let subs: Vec<_> = a.submasks().collect();
        assert_eq!(subs.len(), 4);
        assert!(subs.iter().all(|s| s.is_subset_of(a)));
    }

    #[test]
    fn compress_reindexes_ascending() {
        let within = SubsetMask::from_elements(&[1, 3, 4], 6).unwrap();
        let sub = SubsetMask::from_elements(&[1, 4], 6).unwrap();
        let c = sub.compress_into(within);
        assert_eq!(c.width(), 3);
        assert_eq!(c, SubsetMask::from_elements(&[0, 2], 3).unwrap());
    }

    #[test]
    fn subset_literals() {
        assert_eq!(parse_subset("e", 3).unwrap(), SubsetMask::empty(3));
        assert_eq!(
            parse_subset("0,2", 3).unwrap(),
            SubsetMask::from_elements(&[0, 2], 3).unwrap()
        );
        assert!(parse_subset("2,0", 3).is_err());
        assert!(parse_subset("0,0", 3).is_err());
        assert!(parse_subset("3", 3).is_err());
        assert!(parse_subset("0, 1", 3).is_err());
        assert_eq!(parse_subset("0,2", 4).unwrap().to_string(), "0,2");
        assert_eq!(SubsetMask::empty(4).to_string(), "e");
    }
}
