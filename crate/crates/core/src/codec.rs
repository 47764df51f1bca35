//! The bijection between acyclic orientations and source-removal codes,
//! canonical forms under part symmetry, and longest-path statistics.

use num_bigint::BigUint;
use num_traits::One;

use crate::code::{Code, Digit};
use crate::counting::BigCount;
use crate::error::{Error, Result};
use crate::orientation::Orientation;
use crate::partition::PartitionSpec;

/// Reconstructs the orientation encoded by `code`: the vertex at code
/// position j is the j-th removed source, so for positions j < k with
/// distinct digits the edge runs from the position-j vertex to the
/// position-k vertex. Occurrence indices are assigned in code-position
/// order (the first appearance of digit i becomes vertex (i, 0), and so on).
///
/// The spec must have no empty parts; the code's digit multiplicities must
/// match the part sizes.
pub fn decode(spec: &PartitionSpec, code: &Code) -> Result<Orientation> {
    if let Some(part) = spec.sizes().iter().position(|&s| s == 0) {
        return Err(Error::EmptyPartPresent(part));
    }
    spec.validate_code(code)?;

    let n = spec.order();
    let mut offsets = Vec::with_capacity(spec.part_count());
    let mut acc = 0;
    for &s in spec.sizes() {
        offsets.push(acc);
        acc += s;
    }
    let mut seen = vec![0usize; spec.part_count()];
    let mut globals = Vec::with_capacity(n);
    for &d in code.digits() {
        let part = d as usize;
        globals.push(offsets[part] + seen[part]);
        seen[part] += 1;
    }

    let mut adj = vec![false; n * n];
    for j in 0..n {
        for k in (j + 1)..n {
            if code.digits()[j] != code.digits()[k] {
                adj[globals[j] * n + globals[k]] = true;
            }
        }
    }
    Ok(Orientation::from_raw(spec.clone(), adj))
}

/// Emits the code of an acyclic orientation by iterated source removal.
/// When several sources coexist they all lie in one part, so the emitted
/// digit does not depend on the choice; ties are broken toward the lowest
/// (part, occurrence) vertex. Fails with [`Error::CyclicOrientation`] when
/// no source remains while vertices do.
pub fn encode(orientation: &Orientation) -> Result<Code> {
    encode_with(orientation, |_| 0)
}

/// `encode` with an explicit tie-break among the available sources; the
/// candidate list is passed in ascending (part, occurrence) order. Exposed
/// for tests that confirm the code is tie-break independent.
pub(crate) fn encode_with(
    orientation: &Orientation,
    choose: impl FnMut(&[usize]) -> usize,
) -> Result<Code> {
    let order = orientation
        .peel_order_with(choose)
        .ok_or(Error::CyclicOrientation)?;
    Ok(Code::new(
        order
            .into_iter()
            .map(|g| orientation.vertex(g).part as Digit)
            .collect(),
    ))
}

/// The unique representative of `code`'s orbit under permutations of
/// equal-size part digits: within each class of equal-size parts, digits are
/// relabelled by order of first appearance, earliest appearance taking the
/// smallest digit of the class. This first-appearance relabelling equals the
/// lexicographic orbit minimum because the group permutes whole digit
/// classes.
pub fn canonicalize(spec: &PartitionSpec, code: &Code) -> Code {
    let perm = canonical_permutation(spec, code);
    Code::new(
        code.digits()
            .iter()
            .map(|&d| perm[d as usize])
            .collect(),
    )
}

/// True when `code` is fixed by [`canonicalize`], i.e. within every class of
/// equal-size parts the digits first appear in ascending order.
pub fn is_canonical(spec: &PartitionSpec, code: &Code) -> bool {
    let classes = size_classes(spec);
    let mut next_slot = vec![0usize; classes.class_members.len()];
    let mut assigned: Vec<Option<Digit>> = vec![None; spec.part_count()];
    for &d in code.digits() {
        let d = d as usize;
        if assigned[d].is_none() {
            let class = classes.class_of[d];
            let expect = classes.class_members[class][next_slot[class]];
            if expect != d as Digit {
                return false;
            }
            next_slot[class] += 1;
            assigned[d] = Some(expect);
        }
    }
    true
}

struct SizeClasses {
    /// class_of[digit] = index into class_members
    class_of: Vec<usize>,
    /// digits of each class, ascending
    class_members: Vec<Vec<Digit>>,
}

fn size_classes(spec: &PartitionSpec) -> SizeClasses {
    let mut class_of = vec![0usize; spec.part_count()];
    let mut sizes_seen: Vec<usize> = Vec::new();
    let mut class_members: Vec<Vec<Digit>> = Vec::new();
    for (digit, &size) in spec.sizes().iter().enumerate() {
        let class = match sizes_seen.iter().position(|&s| s == size) {
            Some(c) => c,
            None => {
                sizes_seen.push(size);
                class_members.push(Vec::new());
                sizes_seen.len() - 1
            }
        };
        class_of[digit] = class;
        class_members[class].push(digit as Digit);
    }
    SizeClasses {
        class_of,
        class_members,
    }
}

fn canonical_permutation(spec: &PartitionSpec, code: &Code) -> Vec<Digit> {
    let classes = size_classes(spec);
    let mut perm: Vec<Option<Digit>> = vec![None; spec.part_count()];
    let mut next_slot = vec![0usize; classes.class_members.len()];
    for &d in code.digits() {
        let d = d as usize;
        assert!(d < spec.part_count(), "digit {d} out of range");
        if perm[d].is_none() {
            let class = classes.class_of[d];
            perm[d] = Some(classes.class_members[class][next_slot[class]]);
            next_slot[class] += 1;
        }
    }
    // digits that never appear (empty parts) keep their own slot
    perm.iter()
        .enumerate()
        .map(|(d, p)| p.unwrap_or(d as Digit))
        .collect()
}

/// True iff the decoded orientation has a unique source, equivalently a
/// directed spanning tree: the code has length one, or its first two digits
/// differ. The empty code has no source at all.
pub fn has_unique_source(code: &Code) -> bool {
    match code.digits() {
        [] => false,
        [_] => true,
        [a, b, ..] => a != b,
    }
}

/// Longest directed path statistics of the decoded orientation, read off the
/// run partition: the length is the run count minus one and the number of
/// maximum-length paths is the product of the run lengths.
pub fn longest_path_stats(code: &Code) -> (usize, BigCount) {
    let runs = code.runs();
    let mut count: BigCount = BigUint::one();
    for &(_, len) in runs.runs() {
        count *= BigUint::from(len);
    }
    (runs.run_count().saturating_sub(1), count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::iter_codes;
    use crate::orientation::Vertex;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spec(sizes: &[i64]) -> PartitionSpec {
        PartitionSpec::new(sizes).unwrap()
    }

    fn code(text: &str) -> Code {
        Code::parse(text).unwrap()
    }

    fn v(part: usize, index: usize) -> Vertex {
        Vertex::new(part, index)
    }

    #[test]
    fn decode_k23_example_orientation() {
        let o = decode(&spec(&[2, 3]), &code("01011")).unwrap();
        let expected = [
            (v(0, 0), v(1, 0)),
            (v(0, 0), v(1, 1)),
            (v(0, 0), v(1, 2)),
            (v(1, 0), v(0, 1)),
            (v(0, 1), v(1, 1)),
            (v(0, 1), v(1, 2)),
        ];
        for &(t, h) in &expected {
            assert!(o.has_edge(t, h), "missing {t} -> {h}");
        }
        assert_eq!(o.edges().len(), 6);
        assert_eq!(o.sources(), vec![v(0, 0)]);
        assert_eq!(o.sinks(), vec![v(1, 1), v(1, 2)]);
    }

    #[test]
    fn decode_all_left_to_right() {
        let o = decode(&spec(&[2, 2]), &code("0011")).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(o.has_edge(v(0, i), v(1, j)));
            }
        }
        assert_eq!(o.sources(), vec![v(0, 0), v(0, 1)]);
    }

    #[test]
    fn decode_single_edge() {
        let o = decode(&spec(&[1, 1]), &code("01")).unwrap();
        assert!(o.has_edge(v(0, 0), v(1, 0)));
        assert_eq!(o.sources(), vec![v(0, 0)]);
        assert_eq!(o.sinks(), vec![v(1, 0)]);
    }

    #[test]
    fn decode_rejects_bad_input() {
        assert!(matches!(
            decode(&spec(&[2, 3]), &code("00011")).unwrap_err(),
            Error::MultiplicityMismatch { .. }
        ));
        assert_eq!(
            decode(&spec(&[2, 0, 3]), &code("00222")).unwrap_err(),
            Error::EmptyPartPresent(1)
        );
    }

    #[test]
    fn encode_recovers_known_code() {
        // built edge by edge, not through decode
        let o = Orientation::from_edges(
            &spec(&[2, 3]),
            &[
                (v(0, 0), v(1, 0)),
                (v(0, 0), v(1, 1)),
                (v(0, 0), v(1, 2)),
                (v(1, 0), v(0, 1)),
                (v(0, 1), v(1, 1)),
                (v(0, 1), v(1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(encode(&o).unwrap(), code("01011"));

        let o = decode(&spec(&[2, 2]), &code("0011")).unwrap();
        assert_eq!(encode(&o).unwrap(), code("0011"));
    }

    #[test]
    fn encode_detects_cycles() {
        let s = spec(&[2, 2]);
        let o = Orientation::from_edges(
            &s,
            &[
                (v(0, 0), v(1, 0)),
                (v(1, 0), v(0, 1)),
                (v(0, 1), v(1, 1)),
                (v(1, 1), v(0, 0)),
            ],
        )
        .unwrap();
        assert_eq!(encode(&o).unwrap_err(), Error::CyclicOrientation);
    }

    #[test]
    fn canonical_form_examples() {
        let s = spec(&[2, 2]);
        assert_eq!(canonicalize(&s, &code("1100")), code("0011"));
        assert_eq!(canonicalize(&s, &code("0101")), code("0101"));
        assert!(is_canonical(&s, &code("0101")));
        assert!(!is_canonical(&s, &code("1100")));

        // distinct sizes: trivial group, identity action
        let s = spec(&[2, 3]);
        for c in iter_codes(&s) {
            assert_eq!(canonicalize(&s, &c), c);
            assert!(is_canonical(&s, &c));
        }
    }

    /// All digit permutations that map parts to equal-size parts.
    fn equal_size_digit_perms(s: &PartitionSpec) -> Vec<Vec<Digit>> {
        let p = s.part_count();
        let mut perms = Vec::new();
        let mut current: Vec<Option<Digit>> = vec![None; p];
        let mut used = vec![false; p];
        fn go(
            s: &PartitionSpec,
            pos: usize,
            current: &mut Vec<Option<Digit>>,
            used: &mut Vec<bool>,
            out: &mut Vec<Vec<Digit>>,
        ) {
            let p = s.part_count();
            if pos == p {
                out.push(current.iter().map(|d| d.unwrap()).collect());
                return;
            }
            for target in 0..p {
                if !used[target] && s.sizes()[target] == s.sizes()[pos] {
                    used[target] = true;
                    current[pos] = Some(target as Digit);
                    go(s, pos + 1, current, used, out);
                    used[target] = false;
                    current[pos] = None;
                }
            }
        }
        go(s, 0, &mut current, &mut used, &mut perms);
        perms
    }

    fn apply_perm(perm: &[Digit], c: &Code) -> Code {
        Code::new(c.digits().iter().map(|&d| perm[d as usize]).collect())
    }

    #[test]
    fn canonical_form_is_orbit_minimum() {
        for sizes in [
            vec![2, 2],
            vec![1, 1, 1],
            vec![2, 2, 1],
            vec![3, 3],
            vec![1, 2, 1],
        ] {
            let sizes: Vec<i64> = sizes.into_iter().collect();
            let s = spec(&sizes);
            let perms = equal_size_digit_perms(&s);
            for c in iter_codes(&s) {
                let orbit_min = perms.iter().map(|perm| apply_perm(perm, &c)).min().unwrap();
                assert_eq!(canonicalize(&s, &c), orbit_min, "spec {s} code {c}");
                assert_eq!(is_canonical(&s, &c), c == orbit_min);
            }
        }
    }

    #[test]
    fn no_code_is_fixed_by_a_nontrivial_symmetry() {
        for sizes in [vec![2, 2], vec![1, 1, 1], vec![2, 2, 1], vec![2, 1, 2, 1]] {
            let s = spec(&sizes);
            let identity: Vec<Digit> = (0..s.part_count() as Digit).collect();
            for perm in equal_size_digit_perms(&s) {
                if perm == identity {
                    continue;
                }
                for c in iter_codes(&s) {
                    assert_ne!(apply_perm(&perm, &c), c, "spec {s} perm {perm:?}");
                }
            }
        }
    }

    #[test]
    fn unique_source_criterion() {
        assert!(has_unique_source(&code("0101")));
        assert!(!has_unique_source(&code("0011")));
        assert!(has_unique_source(&code("0")));
        assert!(!has_unique_source(&Code::new(vec![])));
    }

    #[test]
    fn unique_source_matches_reachability() {
        // a unique source reaches every vertex (directed spanning tree);
        // with several sources no vertex reaches them all
        for sizes in [vec![1, 1], vec![2, 2], vec![2, 3], vec![2, 2, 1], vec![1, 1, 1]] {
            let s = spec(&sizes);
            for c in iter_codes(&s) {
                let o = decode(&s, &c).unwrap();
                let sources = o.sources();
                let reaches_all = if sources.len() == 1 {
                    let n = o.order();
                    let start = o.global(sources[0]);
                    let mut seen = vec![false; n];
                    let mut stack = vec![start];
                    seen[start] = true;
                    while let Some(u) = stack.pop() {
                        for w in 0..n {
                            if o.has_edge_global(u, w) && !seen[w] {
                                seen[w] = true;
                                stack.push(w);
                            }
                        }
                    }
                    seen.into_iter().all(|b| b)
                } else {
                    false
                };
                assert_eq!(has_unique_source(&c), reaches_all, "spec {s} code {c}");
            }
        }
    }

    #[test]
    fn longest_path_examples() {
        let (len, count) = longest_path_stats(&code("01011"));
        assert_eq!((len, count), (3, BigUint::from(2u32)));

        let (len, count) = longest_path_stats(&code("0.0.0.1.2"));
        assert_eq!((len, count), (2, BigUint::from(3u32)));

        let (len, count) = longest_path_stats(&code("0.2.0.1.0"));
        assert_eq!((len, count), (4, BigUint::from(1u32)));
    }

    #[test]
    fn minimum_run_count_is_part_count() {
        // chromatic number of the complete multipartite graph
        for sizes in [vec![2, 3], vec![2, 2, 1], vec![1, 1, 1, 1]] {
            let s = spec(&sizes);
            let min_runs = iter_codes(&s).map(|c| c.runs().run_count()).min().unwrap();
            assert_eq!(min_runs, s.part_count());
        }
    }

    #[test]
    fn code_is_tie_break_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for sizes in [vec![2, 2], vec![2, 3], vec![2, 2, 1], vec![3, 1, 1]] {
            let s = spec(&sizes);
            for c in iter_codes(&s) {
                let o = decode(&s, &c).unwrap();
                for _ in 0..4 {
                    let random = encode_with(&o, |cands| rng.gen_range(0..cands.len())).unwrap();
                    assert_eq!(random, c, "spec {s} code {c}");
                }
            }
        }
    }

    #[test]
    fn decode_on_sources_stays_in_one_part() {
        for sizes in [vec![2, 2], vec![2, 3], vec![2, 2, 1]] {
            let s = spec(&sizes);
            for c in iter_codes(&s) {
                let o = decode(&s, &c).unwrap();
                assert!(o.is_acyclic());
                let sources = o.sources();
                assert!(!sources.is_empty());
                assert!(sources.iter().all(|x| x.part == sources[0].part));
                let sinks = o.sinks();
                assert!(!sinks.is_empty());
                assert!(sinks.iter().all(|x| x.part == sinks[0].part));
            }
        }
    }

    proptest! {
        #[test]
        fn encode_decode_round_trip(
            sizes in proptest::collection::vec(1i64..4, 1..4),
            seed in any::<u64>(),
        ) {
            let s = spec(&sizes);
            let c = crate::enumerate::random_code(&s, seed);
            let o = decode(&s, &c).unwrap();
            prop_assert!(o.is_acyclic());
            prop_assert_eq!(encode(&o).unwrap(), c);
        }

        #[test]
        fn canonicalize_is_idempotent(
            sizes in proptest::collection::vec(1i64..4, 1..5),
            seed in any::<u64>(),
        ) {
            let s = spec(&sizes);
            let c = crate::enumerate::random_code(&s, seed);
            let canon = canonicalize(&s, &c);
            prop_assert!(is_canonical(&s, &canon));
            prop_assert_eq!(canonicalize(&s, &canon), canon);
        }
    }
}
