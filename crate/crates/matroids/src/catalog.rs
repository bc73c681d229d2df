//! Catalogs of pairwise non-isomorphic matroids of a fixed ground-set size,
//! with a deterministic text persistence format.

use crate::error::{Error, Result};
use crate::iso::{canonical_key, IsoKey};
use crate::matroid::Matroid;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

/// A complete list of isomorphism classes on `n` elements. Every entry is
/// stored in canonical form and the list is sorted by
/// `(rank, basis count, canonical key)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Catalog {
    n: usize,
    classes: Vec<Matroid>,
}

impl Catalog {
    /// Sort, canonicalize-check and dedup-check a list of class
    /// representatives. Entries must already be in canonical form.
    pub fn new(n: usize, mut classes: Vec<Matroid>) -> Result<Self> {
        for (i, m) in classes.iter().enumerate() {
            if m.n() != n {
                return Err(Error::CatalogSizeMismatch { expected: n, found: m.n() });
            }
            if canonical_key(m).canonical_bases() != m.raw_bases() {
                return Err(Error::NotCanonical(i));
            }
        }
        classes.sort_by(sort_cmp);
        for i in 1..classes.len() {
            if classes[i - 1] == classes[i] {
                return Err(Error::DuplicateClass(i - 1, i));
            }
        }
        Ok(Self { n, classes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Matroid] {
        &self.classes
    }

    pub fn iter(&self) -> impl Iterator<Item = &Matroid> {
        self.classes.iter()
    }

    pub fn keys(&self) -> Vec<IsoKey> {
        self.classes.iter().map(canonical_key).collect()
    }

    /// Does the catalog contain the class of `m`?
    pub fn contains_class(&self, m: &Matroid) -> bool {
        let rep = canonical_key(m).representative();
        self.classes.binary_search_by(|c| sort_cmp(c, &rep)).is_ok()
    }

    /// Serialize to the catalog text format. Byte-exact across runs.
    pub fn save<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "catalog n={} count={}", self.n, self.classes.len())?;
        for m in &self.classes {
            writeln!(w, "{m}")?;
        }
        Ok(())
    }

    pub fn save_to_path<P: AsRef<Path>>(&self, path: P) -> std::io::Result<()> {
        let mut f = std::fs::File::create(path)?;
        self.save(&mut f)
    }

    /// Parse and re-validate a catalog: every entry passes matroid
    /// validation, is in canonical form, and no two entries coincide.
    pub fn load<R: Read>(r: R) -> Result<Self> {
        let reader = BufReader::new(r);
        let mut lines = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::ParseAt { line: idx + 1, msg: e.to_string() })?;
            lines.push((idx + 1, line));
        }
        let mut content = lines
            .into_iter()
            .filter(|(_, l)| !l.starts_with('#') && !l.is_empty());
        let (header_line, header) = content
            .next()
            .ok_or_else(|| Error::Parse("empty catalog file".into()))?;
        let (n, count) = parse_header(&header)
            .ok_or_else(|| Error::ParseAt { line: header_line, msg: format!("bad header {header:?}") })?;
        let mut classes = Vec::with_capacity(count);
        for (line_no, line) in content {
            let m: Matroid = line
                .parse()
                .map_err(|e: Error| Error::ParseAt { line: line_no, msg: e.to_string() })?;
            classes.push(m);
        }
        if classes.len() != count {
            return Err(Error::Parse(format!(
                "header declares {count} entries, file has {}",
                classes.len()
            )));
        }
        Catalog::new(n, classes)
    }

    pub fn load_from_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        let f = std::fs::File::open(path.as_ref())
            .map_err(|e| Error::Parse(format!("{}: {e}", path.as_ref().display())))?;
        Self::load(f)
    }
}

fn sort_cmp(a: &Matroid, b: &Matroid) -> std::cmp::Ordering {
    (a.rank_total(), a.basis_count(), a.raw_bases())
        .cmp(&(b.rank_total(), b.basis_count(), b.raw_bases()))
}

fn parse_header(s: &str) -> Option<(usize, usize)> {
    let rest = s.strip_prefix("catalog n=")?;
    let (n_part, count_part) = rest.split_once(" count=")?;
    Some((n_part.parse().ok()?, count_part.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_byte_identical() {
        let classes = vec![
            "3:e".parse().unwrap(),
            "3:0".parse().unwrap(),
            "3:0;1".parse().unwrap(),
            "3:0;1;2".parse().unwrap(),
        ];
        let cat = Catalog::new(3, classes).unwrap();
        let mut buf = Vec::new();
        cat.save(&mut buf).unwrap();
        let reloaded = Catalog::load(&buf[..]).unwrap();
        assert_eq!(reloaded, cat);
        let mut buf2 = Vec::new();
        reloaded.save(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
    }

    #[test]
    fn singleton_hand_written_file() {
        let text = "catalog n=3 count=1\n3:0,1;0,2;1,2\n";
        let cat = Catalog::load(text.as_bytes()).unwrap();
        assert_eq!(cat.len(), 1);
        assert_eq!(cat.classes()[0], Matroid::uniform(2, 3).unwrap());
    }

    #[test]
    fn duplicate_class_rejected() {
        let text = "catalog n=3 count=2\n3:0,1;0,2;1,2\n3:0,1;0,2;1,2\n";
        assert!(matches!(Catalog::load(text.as_bytes()), Err(Error::DuplicateClass(_, _))));
    }

    #[test]
    fn comments_and_bad_lines() {
        let text = "# a comment\ncatalog n=2 count=1\n# another\n2:0,1\n";
        assert_eq!(Catalog::load(text.as_bytes()).unwrap().len(), 1);
        let bad = "catalog n=2 count=1\n2:1,0\n";
        assert!(matches!(Catalog::load(bad.as_bytes()), Err(Error::ParseAt { line: 2, .. })));
    }

    #[test]
    fn non_canonical_entry_rejected() {
        // isthmus at 1 / loop at 0; canonical form has the basis at element 0
        let text = "catalog n=2 count=1\n2:1\n";
        assert!(matches!(Catalog::load(text.as_bytes()), Err(Error::NotCanonical(0))));
    }
}
