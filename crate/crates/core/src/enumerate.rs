//! Streaming generation of code families and uniform random sampling.
//!
//! Streams step through the multiset permutations of the digit multiset in
//! lexicographic order, O(N) worst case per item with no extra state, so a
//! stream can be restarted or resumed from any code.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::code::{Code, Digit};
use crate::codec::{has_unique_source, is_canonical};
use crate::error::Result;
use crate::partition::PartitionSpec;

/// Advances `digits` to the next multiset permutation in lexicographic
/// order: find the rightmost ascent, swap in the successor from the suffix,
/// reverse the suffix. Returns false at the last permutation.
fn next_permutation(digits: &mut [Digit]) -> bool {
    let n = digits.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && digits[i - 1] >= digits[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while digits[j] <= digits[i - 1] {
        j -= 1;
    }
    digits.swap(i - 1, j);
    digits[i..].reverse();
    true
}

/// Lexicographic stream of every valid code of a spec. Restarting the stream
/// reproduces it exactly.
#[derive(Debug, Clone)]
pub struct Codes {
    state: Option<Vec<Digit>>,
}

impl Iterator for Codes {
    type Item = Code;

    fn next(&mut self) -> Option<Code> {
        let digits = self.state.as_mut()?;
        let item = Code::new(digits.clone());
        if !next_permutation(digits) {
            self.state = None;
        }
        Some(item)
    }
}

/// Every valid code of `spec`, in lexicographic order, starting from the
/// digits-sorted-ascending code. The total number of items is
/// [`count_a`](crate::counting::count_a)`(spec)`.
pub fn iter_codes(spec: &PartitionSpec) -> Codes {
    Codes {
        state: Some(spec.first_code().digits().to_vec()),
    }
}

/// The tail of [`iter_codes`] strictly after `code`, which must be a valid
/// code of `spec`. Use this to resume an interrupted stream or to partition
/// the code space across workers.
pub fn iter_codes_after(spec: &PartitionSpec, code: &Code) -> Result<Codes> {
    spec.validate_code(code)?;
    let mut digits = code.digits().to_vec();
    let state = if next_permutation(&mut digits) {
        Some(digits)
    } else {
        None
    };
    Ok(Codes { state })
}

/// One code per isomorphism class: the codes fixed by
/// [`canonicalize`](crate::codec::canonicalize), in lexicographic order. The
/// total is [`count_b`](crate::counting::count_b)`(spec)`.
pub fn iter_canonical(spec: &PartitionSpec) -> impl Iterator<Item = Code> {
    let spec = spec.clone();
    iter_codes(&spec.clone()).filter(move |c| is_canonical(&spec, c))
}

/// Every code whose first two digits differ, i.e. whose orientation has a
/// unique source and hence a directed spanning tree. The total is
/// `count_a(spec) * (N^2 - sum n_i^2) / (N (N - 1))`.
pub fn iter_unique_source(spec: &PartitionSpec) -> impl Iterator<Item = Code> {
    iter_codes(spec).filter(has_unique_source)
}

/// A uniform random code of `spec`: a seeded multiset shuffle of the digit
/// multiset. Deterministic for a fixed seed.
pub fn random_code(spec: &PartitionSpec, seed: u64) -> Code {
    let mut digits = spec.first_code().digits().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    digits.shuffle(&mut rng);
    Code::new(digits)
}
