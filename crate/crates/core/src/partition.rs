//! Part-size vectors of complete multipartite graphs.

use std::fmt;

use crate::code::{Code, Digit};
use crate::error::{Error, Result};

/// The fixed part sizes (n_1, ..., n_p) of a complete multipartite graph.
///
/// Part order is the caller's input order and is preserved everywhere: digit
/// `i` in a [`Code`] always refers to `sizes()[i]`. Immutable after
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionSpec {
    sizes: Vec<usize>,
}

impl PartitionSpec {
    /// Validates a raw size list. Sizes may be zero (empty parts are allowed
    /// for counting and can be removed with [`drop_empty_parts`]); they must
    /// not be negative, and at least one part is required.
    ///
    /// [`drop_empty_parts`]: PartitionSpec::drop_empty_parts
    pub fn new(sizes: &[i64]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::EmptyList);
        }
        for (i, &s) in sizes.iter().enumerate() {
            if s < 0 {
                return Err(Error::NegativeSize(i));
            }
        }
        Ok(PartitionSpec {
            sizes: sizes.iter().map(|&s| s as usize).collect(),
        })
    }

    /// Builds a spec from known-good sizes. Only `drop_empty_parts` may
    /// produce a spec with no parts at all (the null graph).
    pub(crate) fn from_sizes_unchecked(sizes: Vec<usize>) -> Self {
        PartitionSpec { sizes }
    }

    /// Parses the comma-separated text form, e.g. `"2,2,1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut sizes = Vec::new();
        for field in text.split(',') {
            let field = field.trim();
            let value: i64 = field
                .parse()
                .map_err(|_| Error::parse("partition", format!("bad size {field:?}")))?;
            sizes.push(value);
        }
        PartitionSpec::new(&sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of parts, p.
    pub fn part_count(&self) -> usize {
        self.sizes.len()
    }

    /// Graph order N = n_1 + ... + n_p.
    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Number of cross-part edges, m = (N^2 - sum n_i^2) / 2.
    pub fn edge_count(&self) -> usize {
        let n = self.order();
        let sq: usize = self.sizes.iter().map(|&s| s * s).sum();
        (n * n - sq) / 2
    }

    /// True when no part is empty. Coding operations require this.
    pub fn is_normalized(&self) -> bool {
        self.sizes.iter().all(|&s| s > 0)
    }

    /// Removes empty parts. Returns the reduced spec together with the digit
    /// remap table: `remap[old_digit]` is the new digit, or `None` for a
    /// dropped part. Every counting operation is invariant under this.
    ///
    /// If every part is empty the result has no parts at all; it denotes the
    /// null graph, whose only code is the empty string.
    pub fn drop_empty_parts(&self) -> (PartitionSpec, Vec<Option<Digit>>) {
        let mut kept = Vec::new();
        let mut remap = Vec::with_capacity(self.sizes.len());
        for &size in &self.sizes {
            if size > 0 {
                remap.push(Some(kept.len() as Digit));
                kept.push(size);
            } else {
                remap.push(None);
            }
        }
        (PartitionSpec::from_sizes_unchecked(kept), remap)
    }

    /// Multiplicities r_1, ..., r_s of the distinct part sizes, ignoring
    /// empty parts.
    pub fn size_multiplicities(&self) -> Vec<usize> {
        let mut sorted: Vec<usize> = self.sizes.iter().copied().filter(|&s| s > 0).collect();
        sorted.sort_unstable();
        let mut out = Vec::new();
        let mut i = 0;
        while i < sorted.len() {
            let mut j = i;
            while j < sorted.len() && sorted[j] == sorted[i] {
                j += 1;
            }
            out.push(j - i);
            i = j;
        }
        out
    }

    /// Checks the multiplicity constraint: digit `i` must occur exactly
    /// `sizes()[i]` times.
    pub fn validate_code(&self, code: &Code) -> Result<()> {
        let mut counts = vec![0usize; self.sizes.len()];
        for &d in code.digits() {
            let d = d as usize;
            if d >= counts.len() {
                return Err(Error::MultiplicityMismatch {
                    digit: d,
                    expected: 0,
                    actual: code.digits().iter().filter(|&&x| x as usize == d).count(),
                });
            }
            counts[d] += 1;
        }
        for (digit, (&actual, &expected)) in counts.iter().zip(&self.sizes).enumerate() {
            if actual != expected {
                return Err(Error::MultiplicityMismatch {
                    digit,
                    expected,
                    actual,
                });
            }
        }
        Ok(())
    }

    pub fn is_valid_code(&self, code: &Code) -> bool {
        self.validate_code(code).is_ok()
    }

    /// The lexicographically smallest valid code: all digits sorted ascending.
    pub fn first_code(&self) -> Code {
        let mut digits = Vec::with_capacity(self.order());
        for (part, &size) in self.sizes.iter().enumerate() {
            digits.extend(std::iter::repeat(part as Digit).take(size));
        }
        Code::new(digits)
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_plain_specs() {
        let spec = PartitionSpec::new(&[2, 3]).unwrap();
        assert_eq!(spec.part_count(), 2);
        assert_eq!(spec.order(), 5);

        let spec = PartitionSpec::new(&[2, 2, 1]).unwrap();
        assert_eq!(spec.part_count(), 3);
        assert_eq!(spec.order(), 5);
    }

    #[test]
    fn rejects_negative_and_empty() {
        assert_eq!(
            PartitionSpec::new(&[2, -1]).unwrap_err(),
            Error::NegativeSize(1)
        );
        assert_eq!(PartitionSpec::new(&[]).unwrap_err(), Error::EmptyList);
    }

    #[test]
    fn drops_empty_parts_with_remap() {
        let (reduced, remap) = PartitionSpec::new(&[0, 1, 2]).unwrap().drop_empty_parts();
        assert_eq!(reduced.sizes(), &[1, 2]);
        assert_eq!(remap, vec![None, Some(0), Some(1)]);

        let (reduced, remap) = PartitionSpec::new(&[2, 3]).unwrap().drop_empty_parts();
        assert_eq!(reduced.sizes(), &[2, 3]);
        assert_eq!(remap, vec![Some(0), Some(1)]);

        let (reduced, remap) = PartitionSpec::new(&[0, 0, 4]).unwrap().drop_empty_parts();
        assert_eq!(reduced.sizes(), &[4]);
        assert_eq!(remap, vec![None, None, Some(0)]);
    }

    #[test]
    fn edge_count_formula() {
        assert_eq!(PartitionSpec::new(&[2, 3]).unwrap().edge_count(), 6);
        assert_eq!(PartitionSpec::new(&[2, 2]).unwrap().edge_count(), 4);
        assert_eq!(PartitionSpec::new(&[2, 2, 1]).unwrap().edge_count(), 8);
        assert_eq!(PartitionSpec::new(&[7]).unwrap().edge_count(), 0);
    }

    #[test]
    fn size_multiplicities_group_equal_sizes() {
        assert_eq!(
            PartitionSpec::new(&[2, 2, 1]).unwrap().size_multiplicities(),
            vec![1, 2]
        );
        assert_eq!(
            PartitionSpec::new(&[2, 3]).unwrap().size_multiplicities(),
            vec![1, 1]
        );
        // empty parts do not form a size class
        assert_eq!(
            PartitionSpec::new(&[0, 0, 4]).unwrap().size_multiplicities(),
            vec![1]
        );
    }

    #[test]
    fn code_validation() {
        let spec = PartitionSpec::new(&[2, 3]).unwrap();
        assert!(spec.is_valid_code(&Code::parse("01011").unwrap()));
        assert!(!spec.is_valid_code(&Code::parse("01111").unwrap()));
        assert!(!spec.is_valid_code(&Code::parse("0101").unwrap()));
        // digit out of range counts as a multiplicity violation
        assert_eq!(
            spec.validate_code(&Code::parse("01012").unwrap()),
            Err(Error::MultiplicityMismatch {
                digit: 2,
                expected: 0,
                actual: 1
            })
        );
    }

    #[test]
    fn spec_text_round_trip() {
        let spec = PartitionSpec::parse("2, 2,1").unwrap();
        assert_eq!(spec.sizes(), &[2, 2, 1]);
        assert_eq!(spec.to_string(), "2,2,1");
        assert!(PartitionSpec::parse("2,x").is_err());
        assert!(PartitionSpec::parse("").is_err());
    }
}
