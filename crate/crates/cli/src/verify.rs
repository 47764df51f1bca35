//! The oracle-vs-formula comparison suite behind `acyclo verify`: every
//! closed formula is replayed against an independent brute-force route, and
//! the first (smallest) mismatch per check is reported.

use num_bigint::BigUint;
use serde::Serialize;

use acyclo::codec::{decode, encode, longest_path_stats};
use acyclo::counting::{
    count_a, count_a_recursive, count_b, count_c, count_labelled, factorial, poly_bernoulli,
    smirnov_x, smirnov_x_closed,
};
use acyclo::enumerate::{iter_canonical, iter_codes, iter_unique_source};
use acyclo::oracle::{
    oracle_code_census, oracle_isomorphism_classes, oracle_longest_path, oracle_smirnov,
    oracle_unique_source_classes, series_coefficient, stanley_check, sweep_orientations,
    ISO_ORDER_LIMIT, SMIRNOV_TOTAL_LIMIT, SWEEP_EDGE_LIMIT,
};
use acyclo::PartitionSpec;

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Outcome {
    cases: usize,
    failure: Option<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            cases: 0,
            failure: None,
        }
    }
}

/// Specs with positive parts, ordered by (N, p, sizes) so the first failure
/// reported is a smallest counterexample.
fn specs_sorted(max_n: usize, max_p: usize) -> Vec<PartitionSpec> {
    let mut out = Vec::new();
    fn go(current: &mut Vec<i64>, sum: usize, max_n: usize, max_p: usize, out: &mut Vec<Vec<i64>>) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == max_p || sum == max_n {
            return;
        }
        for s in 1..=(max_n - sum) {
            current.push(s as i64);
            go(current, sum + s, max_n, max_p, out);
            current.pop();
        }
    }
    let mut raw = Vec::new();
    go(&mut Vec::new(), 0, max_n, max_p, &mut raw);
    raw.sort_by_key(|sizes| {
        (
            sizes.iter().sum::<i64>(),
            sizes.len(),
            sizes.clone(),
        )
    });
    for sizes in raw {
        out.push(PartitionSpec::new(&sizes).unwrap());
    }
    out
}

fn vectors_sorted(max_total: usize, max_p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for p in 1..=max_p {
        let mut current = Vec::new();
        fn go(current: &mut Vec<usize>, left: usize, p: usize, out: &mut Vec<Vec<usize>>) {
            if current.len() == p {
                out.push(current.clone());
                return;
            }
            for k in 0..=left {
                current.push(k);
                go(current, left - k, p, out);
                current.pop();
            }
        }
        go(&mut current, max_total, p, &mut out);
    }
    out.sort_by_key(|v| (v.iter().sum::<usize>(), v.len(), v.clone()));
    out
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

pub fn run(max_n: usize, max_p: usize) -> Report {
    let specs = specs_sorted(max_n, max_p);
    let mut checks = Vec::new();

    // 1. three routes to the code count
    let mut outcome = Outcome::new();
    for s in &specs {
        let closed = count_a(s);
        let sizes: Vec<i64> = s.sizes().iter().map(|&x| x as i64).collect();
        let recursive = count_a_recursive(&sizes);
        let streamed = big(iter_codes(s).count() as u64);
        if closed != recursive || closed != streamed {
            outcome.failure = Some(format!(
                "spec {s}: formula {closed}, recursion {recursive}, stream {streamed}"
            ));
            break;
        }
        outcome.cases += 1;
    }
    checks.push(finish("code count: formula = recursion = stream", outcome));

    // 2. isomorphism classes
    let mut outcome = Outcome::new();
    for s in &specs {
        let formula = count_b(s);
        let streamed = big(iter_canonical(s).count() as u64);
        if formula != streamed {
            outcome.failure = Some(format!(
                "spec {s}: formula {formula}, canonical stream {streamed}"
            ));
            break;
        }
        if s.order() <= ISO_ORDER_LIMIT {
            let grouped = big(oracle_isomorphism_classes(s).unwrap());
            if formula != grouped {
                outcome.failure = Some(format!(
                    "spec {s}: formula {formula}, orbit grouping {grouped}"
                ));
                break;
            }
        }
        outcome.cases += 1;
    }
    checks.push(finish("non-isomorphic count: formula = stream = grouping", outcome));

    // 3. unique-source counts
    let mut outcome = Outcome::new();
    for s in &specs {
        if s.order() < 2 {
            continue;
        }
        let formula = count_c(s);
        let mut orbit = BigUint::from(1u32);
        for r in s.size_multiplicities() {
            orbit *= factorial(r);
        }
        let streamed = big(iter_unique_source(s).count() as u64);
        if &formula * &orbit != streamed {
            outcome.failure = Some(format!(
                "spec {s}: formula*symmetry {}, stream {streamed}",
                formula * orbit
            ));
            break;
        }
        if s.order() <= ISO_ORDER_LIMIT {
            let grouped = big(oracle_unique_source_classes(s).unwrap());
            if formula != grouped {
                outcome.failure = Some(format!(
                    "spec {s}: formula {formula}, orbit grouping {grouped}"
                ));
                break;
            }
        }
        outcome.cases += 1;
    }
    checks.push(finish("unique-source count: formula = stream = grouping", outcome));

    // 4. labelled count against the exhaustive sweep
    let mut outcome = Outcome::new();
    for s in &specs {
        if s.edge_count() > SWEEP_EDGE_LIMIT {
            continue;
        }
        let summary = sweep_orientations(s, |_, _| {}).unwrap();
        let formula = count_labelled(s);
        if summary.total != 1u64 << s.edge_count() || big(summary.acyclic) != formula {
            outcome.failure = Some(format!(
                "spec {s}: sweep {}/{} acyclic, formula {formula}",
                summary.acyclic, summary.total
            ));
            break;
        }
        outcome.cases += 1;
    }
    checks.push(finish("labelled count: formula = orientation sweep", outcome));

    // 5. code census from the sweep
    let mut outcome = Outcome::new();
    for s in &specs {
        if s.edge_count() > SWEEP_EDGE_LIMIT {
            continue;
        }
        let census = oracle_code_census(s).unwrap();
        let keys: Vec<_> = census.keys().cloned().collect();
        let streamed: Vec<_> = iter_codes(s).collect();
        let total: u64 = census.values().sum();
        if keys != streamed {
            outcome.failure = Some(format!("spec {s}: census keys differ from the code stream"));
            break;
        }
        if big(total) != count_labelled(s) {
            outcome.failure = Some(format!(
                "spec {s}: census multiplicities sum to {total}, labelled count {}",
                count_labelled(s)
            ));
            break;
        }
        outcome.cases += 1;
    }
    checks.push(finish("code census: keys = stream, multiplicities sum to labelled", outcome));

    // 6. poly-Bernoulli numbers on bipartite specs
    let mut outcome = Outcome::new();
    'bernoulli: for n1 in 0..=max_n {
        for n2 in 0..=max_n.saturating_sub(n1) {
            let via_stirling = poly_bernoulli(n1, n2);
            let via_smirnov = count_labelled(&PartitionSpec::new(&[n1 as i64, n2 as i64]).unwrap());
            if via_stirling != via_smirnov {
                outcome.failure = Some(format!(
                    "({n1},{n2}): poly-Bernoulli {via_stirling}, labelled {via_smirnov}"
                ));
                break 'bernoulli;
            }
            outcome.cases += 1;
        }
    }
    checks.push(finish("poly-Bernoulli = labelled bipartite count", outcome));

    // 7. the Smirnov quadruple
    let mut outcome = Outcome::new();
    for v in vectors_sorted(max_n.min(SMIRNOV_TOTAL_LIMIT), max_p) {
        let dp = smirnov_x(&v);
        let closed = smirnov_x_closed(&v);
        let filtered = oracle_smirnov(&v).unwrap();
        let series = series_coefficient(&v).unwrap();
        if dp != closed || dp != filtered || dp != series {
            outcome.failure = Some(format!(
                "{v:?}: dp {dp}, closed {closed}, filter {filtered}, series {series}"
            ));
            break;
        }
        outcome.cases += 1;
    }
    checks.push(finish("Smirnov words: dp = closed = filter = series", outcome));

    // 8. Stanley's chromatic evaluation
    let mut outcome = Outcome::new();
    for s in &specs {
        if s.order() > ISO_ORDER_LIMIT {
            continue;
        }
        let interpolated = stanley_check(s).unwrap();
        let formula = count_labelled(s);
        if interpolated != formula {
            outcome.failure = Some(format!(
                "spec {s}: (-1)^N chi(-1) = {interpolated}, labelled {formula}"
            ));
            break;
        }
        outcome.cases += 1;
    }
    checks.push(finish("Stanley: (-1)^N chi(-1) = labelled count", outcome));

    // 9. longest-path statistics
    let mut outcome = Outcome::new();
    'paths: for s in &specs {
        if s.order() > ISO_ORDER_LIMIT {
            continue;
        }
        for c in iter_codes(s) {
            let from_runs = longest_path_stats(&c);
            let from_dp = oracle_longest_path(&decode(s, &c).unwrap()).unwrap();
            if from_runs != from_dp {
                outcome.failure = Some(format!(
                    "spec {s} code {c}: runs say {from_runs:?}, DAG program {from_dp:?}"
                ));
                break 'paths;
            }
            outcome.cases += 1;
        }
    }
    checks.push(finish("longest paths: run statistics = DAG program", outcome));

    // 10. the bijection itself
    let mut outcome = Outcome::new();
    'bijection: for s in &specs {
        if s.order() > 8 {
            continue;
        }
        for c in iter_codes(s) {
            let o = decode(s, &c).unwrap();
            let sources = o.sources();
            if !o.is_acyclic()
                || sources.is_empty()
                || !sources.iter().all(|v| v.part == sources[0].part)
            {
                outcome.failure = Some(format!("spec {s} code {c}: decode output malformed"));
                break 'bijection;
            }
            let back = encode(&o).unwrap();
            if back != c {
                outcome.failure = Some(format!("spec {s}: {c} decoded and re-encoded as {back}"));
                break 'bijection;
            }
            outcome.cases += 1;
        }
    }
    checks.push(finish("bijection: encode(decode(code)) = code", outcome));

    let passed = checks.iter().all(|c| c.passed);
    Report { passed, checks }
}

fn finish(name: &'static str, outcome: Outcome) -> Check {
    Check {
        name,
        cases: outcome.cases,
        passed: outcome.failure.is_none(),
        counterexample: outcome.failure,
    }
}
