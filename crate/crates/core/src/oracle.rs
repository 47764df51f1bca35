//! Independent brute-force ground truth: exhaustive orientation sweeps,
//! isomorphism grouping, Smirnov word filters, truncated generating-series
//! coefficients, DAG longest-path dynamic programming, and the chromatic
//! polynomial cross-check. Everything here is deliberately kept separate
//! from the closed formulas it validates.

use std::collections::{BTreeMap, HashSet};
use std::ops::{AddAssign, Mul};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::code::Code;
use crate::codec::encode;
use crate::counting::BigCount;
use crate::error::{Error, Result};
use crate::orientation::Orientation;
use crate::partition::PartitionSpec;

/// Edge-count guard on exhaustive 2^m sweeps.
pub const SWEEP_EDGE_LIMIT: usize = 24;
/// Graph-order guard on isomorphism grouping and chromatic interpolation.
pub const ISO_ORDER_LIMIT: usize = 7;
/// Total-letter guard on Smirnov brute force and series extraction.
pub const SMIRNOV_TOTAL_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepSummary {
    pub total: u64,
    pub acyclic: u64,
}

fn part_table(spec: &PartitionSpec) -> Vec<usize> {
    let mut parts = Vec::with_capacity(spec.order());
    for (part, &size) in spec.sizes().iter().enumerate() {
        parts.extend(std::iter::repeat(part).take(size));
    }
    parts
}

/// Cross-part vertex pairs (a, b) with a < b, in ascending order of the
/// global indices, which run part by part and occurrence by occurrence.
fn cross_pairs(spec: &PartitionSpec) -> Vec<(usize, usize)> {
    let parts = part_table(spec);
    let n = parts.len();
    let mut pairs = Vec::with_capacity(spec.edge_count());
    for a in 0..n {
        for b in (a + 1)..n {
            if parts[a] != parts[b] {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

/// Enumerates all 2^m direction assignments of the cross-part pairs. Bit t
/// of the mask orients pair t (in `cross_pairs` order): 0 directs the
/// lower-sorted endpoint outward. The visitor sees every orientation with
/// its acyclicity flag.
pub fn sweep_orientations<F>(spec: &PartitionSpec, mut visitor: F) -> Result<SweepSummary>
where
    F: FnMut(&Orientation, bool),
{
    let m = spec.edge_count();
    if m > SWEEP_EDGE_LIMIT {
        return Err(Error::TooLarge {
            actual: m,
            limit: SWEEP_EDGE_LIMIT,
        });
    }
    let n = spec.order();
    let pairs = cross_pairs(spec);
    let mut summary = SweepSummary {
        total: 0,
        acyclic: 0,
    };
    for mask in 0u64..(1u64 << m) {
        let mut adj = vec![false; n * n];
        for (t, &(a, b)) in pairs.iter().enumerate() {
            if (mask >> t) & 1 == 0 {
                adj[a * n + b] = true;
            } else {
                adj[b * n + a] = true;
            }
        }
        let orientation = Orientation::from_raw(spec.clone(), adj);
        let acyclic = orientation.is_acyclic();
        summary.total += 1;
        if acyclic {
            summary.acyclic += 1;
        }
        visitor(&orientation, acyclic);
    }
    Ok(summary)
}

/// Encodes every acyclic orientation of the sweep and tallies codes. The key
/// set must coincide with `iter_codes(spec)` and the multiplicities sum to
/// the labelled count.
pub fn oracle_code_census(spec: &PartitionSpec) -> Result<BTreeMap<Code, u64>> {
    let mut census = BTreeMap::new();
    sweep_orientations(spec, |orientation, acyclic| {
        if acyclic {
            let code = encode(orientation).expect("acyclic orientation must encode");
            *census.entry(code).or_insert(0) += 1;
        }
    })?;
    Ok(census)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                go(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut current, &mut used, &mut out);
    out
}

/// Every vertex permutation of the full symmetry group: equal-size part
/// swaps composed with arbitrary within-part permutations, as maps on
/// global indices.
fn vertex_maps(spec: &PartitionSpec) -> Vec<Vec<usize>> {
    let p = spec.part_count();
    let sizes = spec.sizes();
    let mut offsets = vec![0usize; p + 1];
    for i in 0..p {
        offsets[i + 1] = offsets[i] + sizes[i];
    }
    let part_perms: Vec<Vec<usize>> = permutations(p)
        .into_iter()
        .filter(|perm| (0..p).all(|i| sizes[perm[i]] == sizes[i]))
        .collect();
    let within: Vec<Vec<Vec<usize>>> = sizes.iter().map(|&s| permutations(s)).collect();

    let mut maps = Vec::new();
    for part_perm in &part_perms {
        // odometer over the choice of within-part permutation for each part
        let mut choice = vec![0usize; p];
        loop {
            let mut map = vec![0usize; spec.order()];
            for i in 0..p {
                let pi = &within[i][choice[i]];
                for j in 0..sizes[i] {
                    map[offsets[i] + j] = offsets[part_perm[i]] + pi[j];
                }
            }
            maps.push(map);

            let mut pos = 0;
            loop {
                if pos == p {
                    break;
                }
                choice[pos] += 1;
                if choice[pos] < within[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == p {
                break;
            }
        }
    }
    maps
}

fn orientation_classes(spec: &PartitionSpec) -> Result<(u64, u64)> {
    let n = spec.order();
    if n > ISO_ORDER_LIMIT {
        return Err(Error::TooLarge {
            actual: n,
            limit: ISO_ORDER_LIMIT,
        });
    }
    let pairs = cross_pairs(spec);
    let m = pairs.len();
    let mut pair_index = vec![usize::MAX; n * n];
    for (t, &(a, b)) in pairs.iter().enumerate() {
        pair_index[a * n + b] = t;
    }
    let maps = vertex_maps(spec);

    let mut classes: HashSet<u64> = HashSet::new();
    let mut single_source: HashSet<u64> = HashSet::new();
    let mut indeg = vec![0usize; n];
    let mut removed = vec![false; n];

    for mask in 0u64..(1u64 << m) {
        indeg.iter_mut().for_each(|d| *d = 0);
        for (t, &(a, b)) in pairs.iter().enumerate() {
            if (mask >> t) & 1 == 0 {
                indeg[b] += 1;
            } else {
                indeg[a] += 1;
            }
        }
        let sources = indeg.iter().filter(|&&d| d == 0).count();

        // in-degree peel on the mask representation
        removed.iter_mut().for_each(|r| *r = false);
        let mut work = indeg.clone();
        let mut peeled = 0;
        loop {
            let Some(v) = (0..n).find(|&v| !removed[v] && work[v] == 0) else {
                break;
            };
            removed[v] = true;
            peeled += 1;
            for (t, &(a, b)) in pairs.iter().enumerate() {
                if a == v && (mask >> t) & 1 == 0 && !removed[b] {
                    work[b] -= 1;
                } else if b == v && (mask >> t) & 1 == 1 && !removed[a] {
                    work[a] -= 1;
                }
            }
        }
        if peeled < n {
            continue; // cyclic
        }

        let canon = maps
            .iter()
            .map(|map| {
                let mut out = 0u64;
                for (t, &(a, b)) in pairs.iter().enumerate() {
                    let bit = (mask >> t) & 1;
                    let (ga, gb) = (map[a], map[b]);
                    let (lo, hi, flip) = if ga < gb {
                        (ga, gb, 0)
                    } else {
                        (gb, ga, 1)
                    };
                    out |= (bit ^ flip) << pair_index[lo * n + hi];
                }
                out
            })
            .min()
            .expect("symmetry group is never empty");
        classes.insert(canon);
        if sources == 1 {
            single_source.insert(canon);
        }
    }
    Ok((classes.len() as u64, single_source.len() as u64))
}

/// Number of isomorphism classes of acyclic orientations under the full
/// symmetry group (equal-size part swaps composed with within-part vertex
/// permutations). Must equal `count_b`.
pub fn oracle_isomorphism_classes(spec: &PartitionSpec) -> Result<u64> {
    orientation_classes(spec).map(|(all, _)| all)
}

/// The same grouping restricted to orientations with a unique source. Must
/// equal `count_c`.
pub fn oracle_unique_source_classes(spec: &PartitionSpec) -> Result<u64> {
    orientation_classes(spec).map(|(_, single)| single)
}

/// Counts Smirnov words by walking the tree of multiset arrangements and
/// discarding branches that repeat the previous letter. The empty word is
/// not counted, matching the convention of the counting routes.
pub fn oracle_smirnov(counts: &[usize]) -> Result<BigCount> {
    let total: usize = counts.iter().sum();
    if total > SMIRNOV_TOTAL_LIMIT {
        return Err(Error::TooLarge {
            actual: total,
            limit: SMIRNOV_TOTAL_LIMIT,
        });
    }
    if total == 0 {
        return Ok(BigUint::zero());
    }
    fn go(remaining: &mut [usize], last: Option<usize>, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut acc = 0;
        for i in 0..remaining.len() {
            if remaining[i] == 0 || Some(i) == last {
                continue;
            }
            remaining[i] -= 1;
            acc += go(remaining, Some(i), left - 1);
            remaining[i] += 1;
        }
        acc
    }
    let mut remaining = counts.to_vec();
    Ok(BigUint::from(go(&mut remaining, None, total)))
}

/// A formal multivariate polynomial with exact integer coefficients,
/// truncated to a per-variable exponent cap: products silently drop any
/// term whose exponent exceeds its cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    caps: Vec<usize>,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(caps: Vec<usize>) -> Self {
        TruncatedSeries {
            caps,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(caps: Vec<usize>, exponents: Vec<usize>, coefficient: BigInt) -> Self {
        let mut s = TruncatedSeries::zero(caps);
        s.accumulate(exponents, coefficient);
        s
    }

    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    pub fn coefficient(&self, exponents: &[usize]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }

    fn accumulate(&mut self, exponents: Vec<usize>, coefficient: BigInt) {
        debug_assert_eq!(exponents.len(), self.caps.len());
        if coefficient.is_zero() || exponents.iter().zip(&self.caps).any(|(e, c)| e > c) {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
        }
    }
}

impl AddAssign<&TruncatedSeries> for TruncatedSeries {
    fn add_assign(&mut self, other: &TruncatedSeries) {
        debug_assert_eq!(self.caps, other.caps);
        for (expo, coeff) in &other.terms {
            self.accumulate(expo.clone(), coeff.clone());
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, other: &TruncatedSeries) -> TruncatedSeries {
        debug_assert_eq!(self.caps, other.caps);
        let mut out = TruncatedSeries::zero(self.caps.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.accumulate(expo, ca * cb);
            }
        }
        out
    }
}

/// Extracts the Smirnov count from the generating function: builds
/// g_i = x_i - x_i^2 + ... +- x_i^(k_i) per letter, sums the truncated
/// geometric series over h = g_1 + ... + g_p, and reads off the coefficient
/// of x_1^(k_1) ... x_p^(k_p). Zero-count letters are dropped first.
pub fn series_coefficient(counts: &[usize]) -> Result<BigCount> {
    let total: usize = counts.iter().sum();
    if total > SMIRNOV_TOTAL_LIMIT {
        return Err(Error::TooLarge {
            actual: total,
            limit: SMIRNOV_TOTAL_LIMIT,
        });
    }
    let caps: Vec<usize> = counts.iter().copied().filter(|&k| k > 0).collect();
    if caps.is_empty() {
        return Ok(BigUint::zero());
    }

    let mut h = TruncatedSeries::zero(caps.clone());
    for (var, &cap) in caps.iter().enumerate() {
        for e in 1..=cap {
            let coeff = if (e - 1) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let mut expo = vec![0usize; caps.len()];
            expo[var] = e;
            h.accumulate(expo, coeff);
        }
    }

    let mut acc = h.clone();
    let mut power = h.clone();
    for _ in 2..=total {
        power = &power * &h;
        acc += &power;
    }
    let coefficient = acc.coefficient(&caps);
    Ok(coefficient
        .to_biguint()
        .expect("series coefficient must be nonnegative"))
}

/// Topological-order dynamic program on the decoded DAG: the maximum path
/// length (in edges) and the number of maximum-length directed paths.
pub fn oracle_longest_path(orientation: &Orientation) -> Result<(usize, BigCount)> {
    let order = orientation.peel_order().ok_or(Error::CyclicOrientation)?;
    let n = orientation.order();
    if n == 0 {
        return Ok((0, BigUint::one()));
    }
    // len[v]: longest path ending at v; cnt[v]: how many such paths
    let mut len = vec![0usize; n];
    let mut cnt = vec![BigUint::one(); n];
    for &v in &order {
        let mut best = 0;
        for u in 0..n {
            if orientation.has_edge_global(u, v) {
                best = best.max(len[u] + 1);
            }
        }
        if best > 0 {
            let mut ways = BigUint::zero();
            for u in 0..n {
                if orientation.has_edge_global(u, v) && len[u] + 1 == best {
                    ways += &cnt[u];
                }
            }
            len[v] = best;
            cnt[v] = ways;
        }
    }
    let longest = *len.iter().max().expect("nonempty");
    let mut total = BigUint::zero();
    for v in 0..n {
        if len[v] == longest {
            total += &cnt[v];
        }
    }
    Ok((longest, total))
}

fn count_colorings(parts: &[usize], colors: usize) -> u64 {
    fn go(parts: &[usize], colors: usize, assigned: &mut Vec<usize>) -> u64 {
        let v = assigned.len();
        if v == parts.len() {
            return 1;
        }
        let mut acc = 0;
        'next: for c in 0..colors {
            for u in 0..v {
                if parts[u] != parts[v] && assigned[u] == c {
                    continue 'next;
                }
            }
            assigned.push(c);
            acc += go(parts, colors, assigned);
            assigned.pop();
        }
        acc
    }
    go(parts, colors, &mut Vec::new())
}

/// Interpolates the chromatic polynomial exactly from brute-force proper
/// coloring counts at 0..=N and evaluates (-1)^N chi(-1), the number of
/// acyclic orientations of the labelled graph. Non-integer interpolation
/// coefficients are impossible for a chromatic polynomial and abort.
pub fn stanley_check(spec: &PartitionSpec) -> Result<BigCount> {
    let n = spec.order();
    if n > ISO_ORDER_LIMIT {
        return Err(Error::TooLarge {
            actual: n,
            limit: ISO_ORDER_LIMIT,
        });
    }
    let parts = part_table(spec);
    let values: Vec<BigRational> = (0..=n)
        .map(|colors| BigRational::from_integer(BigInt::from(count_colorings(&parts, colors))))
        .collect();

    // Newton divided differences on the nodes 0..=n
    let mut dd = values;
    for level in 1..=n {
        for i in (level..=n).rev() {
            let delta = &dd[i] - &dd[i - 1];
            dd[i] = delta / BigRational::from_integer(BigInt::from(level));
        }
    }

    // expand the Newton form into monomial coefficients
    let mut coeffs: Vec<BigRational> = vec![dd[n].clone()];
    for i in (0..n).rev() {
        // multiply by (x - i), then add dd[i]
        let node = BigRational::from_integer(BigInt::from(i));
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &node;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    for (deg, c) in coeffs.iter().enumerate() {
        assert!(
            c.is_integer(),
            "chromatic interpolation produced non-integer coefficient {c} at degree {deg}"
        );
    }

    // evaluate at -1 and apply the sign (-1)^N
    let minus_one = -BigRational::one();
    let mut value = BigRational::zero();
    for c in coeffs.iter().rev() {
        value = value * &minus_one + c;
    }
    let mut result = value.to_integer();
    if n % 2 == 1 {
        result = -result;
    }
    assert!(
        !result.is_negative(),
        "(-1)^N chi(-1) must be nonnegative, got {result}"
    );
    Ok(result.to_biguint().expect("nonnegative"))
}

/// Convenience census of a spec's valid codes, used to compare key sets.
pub fn code_set(spec: &PartitionSpec) -> HashSet<Code> {
    crate::enumerate::iter_codes(spec).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::decode;
    use crate::counting::{count_b, count_c, count_labelled, smirnov_x};
    use crate::enumerate::iter_codes;

    fn spec(sizes: &[i64]) -> PartitionSpec {
        PartitionSpec::new(sizes).unwrap()
    }

    fn code(text: &str) -> Code {
        Code::parse(text).unwrap()
    }

    #[test]
    fn sweep_counts() {
        let summary = sweep_orientations(&spec(&[2, 2]), |_, _| {}).unwrap();
        assert_eq!((summary.total, summary.acyclic), (16, 14));

        let summary = sweep_orientations(&spec(&[1, 1]), |_, _| {}).unwrap();
        assert_eq!((summary.total, summary.acyclic), (2, 2));

        let summary = sweep_orientations(&spec(&[2, 3]), |_, _| {}).unwrap();
        assert_eq!(summary.total, 64);
        assert_eq!(
            BigUint::from(summary.acyclic),
            count_labelled(&spec(&[2, 3]))
        );
    }

    #[test]
    fn sweep_guard() {
        assert!(matches!(
            sweep_orientations(&spec(&[5, 5]), |_, _| {}).unwrap_err(),
            Error::TooLarge { .. }
        ));
    }

    #[test]
    fn census_of_k22_multiplicities() {
        let census = oracle_code_census(&spec(&[2, 2])).unwrap();
        let expected: Vec<(&str, u64)> = vec![
            ("0011", 1),
            ("0101", 4),
            ("0110", 2),
            ("1001", 2),
            ("1010", 4),
            ("1100", 1),
        ];
        assert_eq!(census.len(), expected.len());
        for (text, multiplicity) in expected {
            assert_eq!(census[&code(text)], multiplicity, "code {text}");
        }
    }

    #[test]
    fn census_keys_are_exactly_the_codes() {
        for sizes in [vec![1, 1], vec![2, 2], vec![2, 2, 1]] {
            let s = spec(&sizes);
            let census = oracle_code_census(&s).unwrap();
            let keys: HashSet<Code> = census.keys().cloned().collect();
            assert_eq!(keys, code_set(&s));
            let total: u64 = census.values().sum();
            assert_eq!(BigUint::from(total), count_labelled(&s));
        }
        let census = oracle_code_census(&spec(&[1, 1])).unwrap();
        assert_eq!(census[&code("01")], 1);
        assert_eq!(census[&code("10")], 1);
        let census = oracle_code_census(&spec(&[2, 2, 1])).unwrap();
        assert_eq!(census.len(), 30);
    }

    #[test]
    fn isomorphism_classes() {
        assert_eq!(oracle_isomorphism_classes(&spec(&[2, 2])).unwrap(), 3);
        assert_eq!(oracle_isomorphism_classes(&spec(&[2, 3])).unwrap(), 10);
        assert_eq!(oracle_isomorphism_classes(&spec(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(oracle_unique_source_classes(&spec(&[2, 2])).unwrap(), 2);
        assert!(matches!(
            oracle_isomorphism_classes(&spec(&[4, 4])).unwrap_err(),
            Error::TooLarge { .. }
        ));
    }

    #[test]
    fn isomorphism_classes_match_formulas() {
        for sizes in [vec![2, 2], vec![2, 3], vec![1, 1, 1], vec![2, 2, 1], vec![3, 2]] {
            let s = spec(&sizes);
            assert_eq!(
                BigUint::from(oracle_isomorphism_classes(&s).unwrap()),
                count_b(&s),
                "B({s})"
            );
            assert_eq!(
                BigUint::from(oracle_unique_source_classes(&s).unwrap()),
                count_c(&s),
                "C({s})"
            );
        }
    }

    #[test]
    fn smirnov_filter() {
        assert_eq!(oracle_smirnov(&[2, 2]).unwrap(), BigUint::from(2u32));
        assert_eq!(oracle_smirnov(&[3, 1]).unwrap(), BigUint::zero());
        assert_eq!(oracle_smirnov(&[2, 2, 2]).unwrap(), smirnov_x(&[2, 2, 2]));
        assert_eq!(oracle_smirnov(&[]).unwrap(), BigUint::zero());
        assert_eq!(oracle_smirnov(&[0, 0]).unwrap(), BigUint::zero());
        assert!(oracle_smirnov(&[6, 6]).is_err());
    }

    #[test]
    fn series_extraction() {
        assert_eq!(series_coefficient(&[1, 1]).unwrap(), BigUint::from(2u32));
        assert_eq!(series_coefficient(&[2, 0]).unwrap(), BigUint::zero());
        assert_eq!(series_coefficient(&[1, 0]).unwrap(), BigUint::one());
        assert_eq!(series_coefficient(&[2, 2]).unwrap(), BigUint::from(2u32));
        assert_eq!(series_coefficient(&[0, 0]).unwrap(), BigUint::zero());
        assert!(series_coefficient(&[8, 8]).is_err());
    }

    #[test]
    fn truncated_series_drops_overflow() {
        let caps = vec![1, 1];
        let x = TruncatedSeries::monomial(caps.clone(), vec![1, 0], BigInt::one());
        let y = TruncatedSeries::monomial(caps.clone(), vec![0, 1], BigInt::one());
        let mut h = x.clone();
        h += &y;
        let sq = &h * &h;
        // x^2 and y^2 exceed their caps; only the 2xy term survives
        assert_eq!(sq.coefficient(&[1, 1]), BigInt::from(2));
        assert_eq!(sq.coefficient(&[2, 0]), BigInt::zero());
    }

    #[test]
    fn longest_path_known_examples() {
        let o = decode(&spec(&[3, 1, 1]), &code("0.0.0.1.2")).unwrap();
        let (len, count) = oracle_longest_path(&o).unwrap();
        assert_eq!((len, count), (2, BigUint::from(3u32)));

        let o = decode(&spec(&[3, 1, 1]), &code("0.2.0.1.0")).unwrap();
        let (len, count) = oracle_longest_path(&o).unwrap();
        assert_eq!((len, count), (4, BigUint::from(1u32)));

        let o = decode(&spec(&[1, 1]), &code("01")).unwrap();
        let (len, count) = oracle_longest_path(&o).unwrap();
        assert_eq!((len, count), (1, BigUint::one()));
    }

    #[test]
    fn longest_path_rejects_cycles() {
        let s = spec(&[2, 2]);
        let mut cyclic = None;
        sweep_orientations(&s, |o, acyclic| {
            if !acyclic && cyclic.is_none() {
                cyclic = Some(o.clone());
            }
        })
        .unwrap();
        assert_eq!(
            oracle_longest_path(&cyclic.unwrap()).unwrap_err(),
            Error::CyclicOrientation
        );
    }

    #[test]
    fn stanley_values() {
        assert_eq!(stanley_check(&spec(&[2, 2])).unwrap(), BigUint::from(14u32));
        assert_eq!(stanley_check(&spec(&[1, 1])).unwrap(), BigUint::from(2u32));
        assert_eq!(
            stanley_check(&spec(&[2, 3])).unwrap(),
            count_labelled(&spec(&[2, 3]))
        );
        assert!(stanley_check(&spec(&[4, 4])).is_err());
    }

    #[test]
    fn census_multiplicity_of_every_code_is_positive() {
        let s = spec(&[2, 3]);
        let census = oracle_code_census(&s).unwrap();
        for c in iter_codes(&s) {
            assert!(census[&c] >= 1);
        }
    }
}
