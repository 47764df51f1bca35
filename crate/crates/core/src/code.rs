//! Source-removal codes and their run structure.

use std::fmt;

use crate::error::{Error, Result};

/// A code digit. Digit `i` names part `i` of a [`PartitionSpec`].
///
/// [`PartitionSpec`]: crate::PartitionSpec
pub type Digit = u16;

/// A string over {0, ..., p-1} recording the part of each removed source
/// during iterated source deletion. Orders lexicographically by digits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code {
    digits: Vec<Digit>,
}

impl Code {
    pub fn new(digits: Vec<Digit>) -> Self {
        Code { digits }
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Parses either the dotted form `"0.1.0.1.1"` or, when every digit is a
    /// single character 0-9, the compact form `"01011"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Code::new(Vec::new()));
        }
        let mut digits = Vec::new();
        if text.contains('.') {
            for field in text.split('.') {
                let d: Digit = field
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse("code", format!("bad digit {field:?}")))?;
                digits.push(d);
            }
        } else {
            for ch in text.chars() {
                let d = ch
                    .to_digit(10)
                    .ok_or_else(|| Error::parse("code", format!("bad digit {ch:?}")))?;
                digits.push(d as Digit);
            }
        }
        Ok(Code::new(digits))
    }

    /// Compact single-character form, available only when all digits are <= 9.
    pub fn to_compact(&self) -> Option<String> {
        if self.digits.iter().any(|&d| d > 9) {
            return None;
        }
        Some(self.digits.iter().map(|d| d.to_string()).collect())
    }

    /// Maximal-run decomposition: blocks of equal consecutive digits, in order.
    pub fn runs(&self) -> RunPartition {
        let mut runs: Vec<(Digit, usize)> = Vec::new();
        for &d in &self.digits {
            match runs.last_mut() {
                Some((digit, len)) if *digit == d => *len += 1,
                _ => runs.push((d, 1)),
            }
        }
        RunPartition { runs }
    }
}

impl fmt::Display for Code {
    /// Dotted display form, `0.1.0.1.1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// The run partition of a code: maximal blocks of equal consecutive digits.
/// Adjacent blocks always carry distinct digits, and concatenating the blocks
/// reproduces the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunPartition {
    runs: Vec<(Digit, usize)>,
}

impl RunPartition {
    pub fn runs(&self) -> &[(Digit, usize)] {
        &self.runs
    }

    pub fn run_count(&self) -> usize {
        self.runs.len()
    }

    pub fn run_lengths(&self) -> Vec<usize> {
        self.runs.iter().map(|&(_, len)| len).collect()
    }

    /// Concatenates the runs back into the original code.
    pub fn reconstruct(&self) -> Code {
        let mut digits = Vec::new();
        for &(d, len) in &self.runs {
            digits.extend(std::iter::repeat(d).take(len));
        }
        Code::new(digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn runs_of_known_codes() {
        let runs = Code::parse("0.1.0.1.1").unwrap().runs();
        assert_eq!(runs.runs(), &[(0, 1), (1, 1), (0, 1), (1, 2)]);
        assert_eq!(runs.run_count(), 4);

        let runs = Code::parse("0.0.1.1").unwrap().runs();
        assert_eq!(runs.runs(), &[(0, 2), (1, 2)]);
        assert_eq!(runs.run_count(), 2);

        // single part: one run covering the whole code
        let runs = Code::new(vec![0; 5]).runs();
        assert_eq!(runs.runs(), &[(0, 5)]);

        assert_eq!(Code::new(vec![]).runs().run_count(), 0);
    }

    #[test]
    fn parse_and_display() {
        let code = Code::parse("01011").unwrap();
        assert_eq!(code.digits(), &[0, 1, 0, 1, 1]);
        assert_eq!(code.to_string(), "0.1.0.1.1");
        assert_eq!(Code::parse("0.1.0.1.1").unwrap(), code);
        assert_eq!(code.to_compact().unwrap(), "01011");

        let wide = Code::parse("9.10.11").unwrap();
        assert_eq!(wide.digits(), &[9, 10, 11]);
        assert_eq!(wide.to_compact(), None);

        assert!(Code::parse("01x").is_err());
        assert!(Code::parse("0.1.x").is_err());
        assert!(Code::parse("").unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn run_round_trip(digits in proptest::collection::vec(0u16..5, 0..40)) {
            let code = Code::new(digits);
            let runs = code.runs();
            // adjacent runs carry distinct digits
            for pair in runs.runs().windows(2) {
                prop_assert_ne!(pair[0].0, pair[1].0);
            }
            prop_assert!(runs.runs().iter().all(|&(_, len)| len >= 1));
            prop_assert_eq!(runs.run_lengths().iter().sum::<usize>(), code.len());
            prop_assert_eq!(runs.reconstruct(), code);
        }
    }
}
