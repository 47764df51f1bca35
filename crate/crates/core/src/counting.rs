//! Exact closed-form counts over arbitrary-precision integers: code counts,
//! isomorphism-class counts, Smirnov word counts, poly-Bernoulli numbers, and
//! the labelled acyclic-orientation count.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::partition::PartitionSpec;

/// Arbitrary-precision nonnegative count. Multinomials overflow 64 bits by
/// N around 21, so there is no fixed-width fast path anywhere.
pub type BigCount = BigUint;

static FACTORIALS: Lazy<RwLock<Vec<BigUint>>> = Lazy::new(|| RwLock::new(vec![BigUint::one()]));

pub fn factorial(n: usize) -> BigCount {
    {
        let table = FACTORIALS.read().unwrap();
        if n < table.len() {
            return table[n].clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap();
    while table.len() <= n {
        let next = table.last().unwrap() * BigUint::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient, zero whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigCount {
    if k < 0 || k > n {
        return BigUint::zero();
    }
    let (n, k) = (n as usize, k as usize);
    exact_div(factorial(n), factorial(k) * factorial(n - k))
}

/// Multinomial coefficient (sum parts)! / prod parts!.
pub fn multinomial(parts: &[usize]) -> BigCount {
    let total: usize = parts.iter().sum();
    let mut denom = BigUint::one();
    for &p in parts {
        denom *= factorial(p);
    }
    exact_div(factorial(total), denom)
}

fn exact_div(numerator: BigUint, denominator: BigUint) -> BigUint {
    let q = &numerator / &denominator;
    assert!(
        &q * &denominator == numerator,
        "division is not exact: {numerator} / {denominator}"
    );
    q
}

static STIRLING_ROWS: Lazy<RwLock<Vec<Vec<BigUint>>>> =
    Lazy::new(|| RwLock::new(vec![vec![BigUint::one()]]));

/// Stirling number of the second kind: partitions of an n-set into k
/// nonempty blocks, via S(n+1, k) = k S(n, k) + S(n, k-1), memoized per
/// process.
pub fn stirling2(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    {
        let rows = STIRLING_ROWS.read().unwrap();
        if n < rows.len() {
            return rows[n][k].clone();
        }
    }
    let mut rows = STIRLING_ROWS.write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let m = rows.len();
        let mut row = Vec::with_capacity(m + 1);
        row.push(BigUint::zero());
        for j in 1..m {
            row.push(BigUint::from(j) * &prev[j] + &prev[j - 1]);
        }
        row.push(BigUint::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Number of acyclic orientations with fixed parts and unlabelled vertices:
/// the multinomial coefficient over the part sizes. Empty parts contribute a
/// factor of one.
pub fn count_a(spec: &PartitionSpec) -> BigCount {
    multinomial(spec.sizes())
}

/// The same count evaluated purely through the source-removal recurrence
/// A(n_1, ..., n_p) = sum_i A(..., n_i - 1, ...), with A(0, ..., 0) = 1 and
/// A = 0 as soon as any entry is negative. Kept as an independent route for
/// cross-checking [`count_a`].
pub fn count_a_recursive(sizes: &[i64]) -> BigCount {
    if sizes.iter().any(|&s| s < 0) {
        return BigUint::zero();
    }
    let mut key: Vec<usize> = sizes.iter().map(|&s| s as usize).collect();
    key.sort_unstable();
    let mut memo: HashMap<Vec<usize>, BigUint> = HashMap::new();
    fn go(key: Vec<usize>, memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
        if key.iter().all(|&s| s == 0) {
            return BigUint::one();
        }
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        let mut i = 0;
        while i < key.len() {
            let mut j = i;
            while j < key.len() && key[j] == key[i] {
                j += 1;
            }
            if key[i] > 0 {
                let mut sub = key.clone();
                sub[i] -= 1;
                sub.sort_unstable();
                total += go(sub, memo) * BigUint::from(j - i);
            }
            i = j;
        }
        memo.insert(key, total.clone());
        total
    }
    go(key, &mut memo)
}

/// Number of non-isomorphic acyclic orientations: count_a divided by
/// r_1! ... r_s!, where the r_j are the multiplicities of equal part sizes.
/// The division is exact because no code is fixed by a nontrivial
/// equal-size digit permutation.
pub fn count_b(spec: &PartitionSpec) -> BigCount {
    let mut denom = BigUint::one();
    for r in spec.size_multiplicities() {
        denom *= factorial(r);
    }
    exact_div(count_a(spec), denom)
}

/// Number of non-isomorphic acyclic orientations containing a directed
/// spanning tree (equivalently, with a unique source):
/// count_b * (N^2 - sum n_i^2) / (N (N - 1)). Needs at least two vertices.
pub fn count_c(spec: &PartitionSpec) -> BigCount {
    let (spec, _) = spec.drop_empty_parts();
    let n = spec.order();
    assert!(n >= 2, "count_c needs at least two vertices, got {n}");
    let sq: usize = spec.sizes().iter().map(|&s| s * s).sum();
    let mut denom = BigUint::from(n) * BigUint::from(n - 1);
    for r in spec.size_multiplicities() {
        denom *= factorial(r);
    }
    exact_div(count_a(&spec) * BigUint::from(n * n - sq), denom)
}

/// Chromatic number of the complete multipartite graph: the number of
/// nonempty parts, also the minimum run count over all codes.
pub fn chromatic_number(spec: &PartitionSpec) -> usize {
    spec.sizes().iter().filter(|&&s| s > 0).count()
}

/// A vector of letter multiplicities (k_1, ..., k_p) for Smirnov word
/// counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmirnovVector {
    counts: Vec<usize>,
}

impl SmirnovVector {
    pub fn new(counts: Vec<usize>) -> Self {
        SmirnovVector { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// True iff some word with these multiplicities avoids equal adjacent
    /// letters: the vector is nonzero and its maximum entry is at most
    /// (1 + total) / 2.
    pub fn is_feasible(&self) -> bool {
        let max = self.counts.iter().copied().max().unwrap_or(0);
        max > 0 && 2 * max <= 1 + self.total()
    }

    pub fn count(&self) -> BigCount {
        smirnov_x(&self.counts)
    }
}

type SmirnovKey = (usize, Vec<usize>);
static SMIRNOV_MEMO: Lazy<RwLock<HashMap<SmirnovKey, BigUint>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Number of Smirnov words counted by first letter, memoized on the
/// (first-letter count, sorted remaining counts) class, which the symmetry
/// of the problem allows. `others` must be sorted and free of zeros.
fn smirnov_x_start(start: usize, others: Vec<usize>) -> BigUint {
    debug_assert!(start >= 1);
    if start == 1 && others.is_empty() {
        return BigUint::one();
    }
    let key = (start, others);
    {
        let memo = SMIRNOV_MEMO.read().unwrap();
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
    }
    let (start, others) = (key.0, &key.1);
    let rem = start - 1;
    let mut total = BigUint::zero();
    let mut i = 0;
    while i < others.len() {
        let mut j = i;
        while j < others.len() && others[j] == others[i] {
            j += 1;
        }
        let mut rest = Vec::with_capacity(others.len());
        rest.extend_from_slice(&others[..i]);
        rest.extend_from_slice(&others[i + 1..]);
        if rem > 0 {
            rest.push(rem);
            rest.sort_unstable();
        }
        total += smirnov_x_start(others[i], rest) * BigUint::from(j - i);
        i = j;
    }
    SMIRNOV_MEMO
        .write()
        .unwrap()
        .insert((start, others.clone()), total.clone());
    total
}

/// Number of words over p letters with the given letter multiplicities in
/// which no two consecutive letters are equal, by dynamic programming over
/// the first letter. Zero-count letters are dropped first; the all-zero
/// vector yields zero (the empty word is not counted).
pub fn smirnov_x(counts: &[usize]) -> BigCount {
    let mut active: Vec<usize> = counts.iter().copied().filter(|&k| k > 0).collect();
    active.sort_unstable();
    let mut total = BigUint::zero();
    let mut i = 0;
    while i < active.len() {
        let mut j = i;
        while j < active.len() && active[j] == active[i] {
            j += 1;
        }
        let mut rest = active.clone();
        rest.remove(i);
        total += smirnov_x_start(active[i], rest) * BigUint::from(j - i);
        i = j;
    }
    total
}

/// The same Smirnov count through the closed alternating sum
///
/// ```text
/// X = (-1)^(k_1+...+k_p) * sum over 1 <= r_i <= k_i of
///     multinomial(r_1, ..., r_p) * prod_i (-1)^(r_i) C(k_i - 1, r_i - 1)
/// ```
///
/// Zero entries are dropped first (the sum requires strictly positive
/// multiplicities); a single-letter vector (k) gives 1 when k = 1 and 0
/// otherwise.
pub fn smirnov_x_closed(counts: &[usize]) -> BigCount {
    let ks: Vec<usize> = counts.iter().copied().filter(|&k| k > 0).collect();
    if ks.is_empty() {
        return BigUint::zero();
    }
    if ks.len() == 1 {
        return if ks[0] == 1 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let total_k: usize = ks.iter().sum();
    let mut sum = BigInt::zero();
    let mut r = vec![1usize; ks.len()];
    loop {
        let mut magnitude = multinomial(&r);
        for (&k, &ri) in ks.iter().zip(&r) {
            magnitude *= binomial(k as i64 - 1, ri as i64 - 1);
        }
        let parity = (total_k + r.iter().sum::<usize>()) % 2;
        let sign = if parity == 0 { Sign::Plus } else { Sign::Minus };
        sum += BigInt::from_biguint(sign, magnitude);

        // odometer step over the box 1..=k_i
        let mut pos = 0;
        loop {
            if pos == r.len() {
                let result = sum
                    .to_biguint()
                    .expect("Smirnov alternating sum must be nonnegative");
                return result;
            }
            if r[pos] < ks[pos] {
                r[pos] += 1;
                break;
            }
            r[pos] = 1;
            pos += 1;
        }
    }
}

/// Coefficient table D(k, r): the coefficient of z^k in
/// (z - z^2 + z^3 - ...)^r. D(0, 0) = 1 (the empty product), D(k, 0) = 0
/// for k >= 1, and every other entry follows from
/// D(k+1, r+1) = D(k, r) - D(k, r+1); in particular D(k, 1) = (-1)^(k-1)
/// and D(k, k) = 1. Closed form: D(k, r) = (-1)^(k+r) C(k-1, k-r).
#[derive(Debug, Clone, Default)]
pub struct DTable {
    rows: Vec<Vec<BigInt>>,
}

impl DTable {
    pub fn new() -> Self {
        DTable::default()
    }

    /// The value when row k is already built.
    fn get(&self, k: usize, r: usize) -> Option<BigInt> {
        if r > k {
            return Some(BigInt::zero());
        }
        self.rows.get(k).map(|row| row[r].clone())
    }

    pub fn value(&mut self, k: usize, r: usize) -> BigInt {
        if r > k {
            return BigInt::zero();
        }
        if self.rows.is_empty() {
            self.rows.push(vec![BigInt::one()]);
        }
        while self.rows.len() <= k {
            let kk = self.rows.len();
            let prev = &self.rows[kk - 1];
            let mut row = Vec::with_capacity(kk + 1);
            row.push(BigInt::zero());
            for r in 1..=kk {
                let above = prev[r - 1].clone();
                let right = prev.get(r).cloned().unwrap_or_else(BigInt::zero);
                row.push(above - right);
            }
            self.rows.push(row);
        }
        self.rows[k][r].clone()
    }
}

static D_TABLE: Lazy<RwLock<DTable>> = Lazy::new(|| RwLock::new(DTable::new()));

/// D(k, r) from the shared per-process table.
pub fn d_value(k: usize, r: usize) -> BigInt {
    if let Some(v) = D_TABLE.read().unwrap().get(k, r) {
        return v;
    }
    D_TABLE.write().unwrap().value(k, r)
}

/// Poly-Bernoulli number B_(n1, n2): the number of acyclic orientations of
/// the labelled complete bipartite graph K_(n1, n2),
/// sum over m of (m!)^2 S(n1 + 1, m + 1) S(n2 + 1, m + 1).
pub fn poly_bernoulli(n1: usize, n2: usize) -> BigCount {
    let mut total = BigUint::zero();
    for m in 0..=n1.min(n2) {
        let f = factorial(m);
        total += &f * &f * stirling2(n1 + 1, m + 1) * stirling2(n2 + 1, m + 1);
    }
    total
}

/// Number of acyclic orientations of the labelled complete multipartite
/// graph: sum over (k_1 <= n_1, ..., k_p <= n_p) of
/// prod_i k_i! S(n_i, k_i) times the Smirnov count X(k_1, ..., k_p).
///
/// The graph with no vertices has exactly one (empty) orientation; the sum
/// cannot see it because the empty word is not a Smirnov word.
pub fn count_labelled(spec: &PartitionSpec) -> BigCount {
    if spec.order() == 0 {
        return BigUint::one();
    }
    fn go(sizes: &[usize], ks: &mut Vec<usize>, coeff: BigUint, total: &mut BigUint) {
        let i = ks.len();
        if i == sizes.len() {
            *total += coeff * smirnov_x(ks);
            return;
        }
        for k in 0..=sizes[i] {
            let s = stirling2(sizes[i], k);
            if s.is_zero() {
                continue;
            }
            ks.push(k);
            go(sizes, ks, &coeff * factorial(k) * s, total);
            ks.pop();
        }
    }
    let mut total = BigUint::zero();
    go(spec.sizes(), &mut Vec::new(), BigUint::one(), &mut total);
    total
}
