//! Explicit orientations of complete multipartite graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::PartitionSpec;

/// A vertex of a complete multipartite graph, identified by its part and an
/// occurrence index within the part. Vertices are unlabelled in the
/// mathematics; the occurrence index is fixed by source-removal order when an
/// orientation comes from [`decode`](crate::codec::decode).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub part: usize,
    pub index: usize,
}

impl Vertex {
    pub fn new(part: usize, index: usize) -> Self {
        Vertex { part, index }
    }

    /// Parses the letter form `a0`, `b12`, ... (part letter + occurrence).
    pub fn parse(text: &str) -> Result<Self> {
        let mut chars = text.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::parse("vertex", "empty vertex name"))?;
        if !letter.is_ascii_lowercase() {
            return Err(Error::parse(
                "vertex",
                format!("expected part letter a-z in {text:?}"),
            ));
        }
        let index: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::parse("vertex", format!("bad occurrence index in {text:?}")))?;
        Ok(Vertex {
            part: (letter as u8 - b'a') as usize,
            index,
        })
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.part < 26 {
            write!(f, "{}{}", (b'a' + self.part as u8) as char, self.index)
        } else {
            write!(f, "{}:{}", self.part, self.index)
        }
    }
}

/// An orientation of a complete multipartite graph: every cross-part vertex
/// pair carries exactly one direction, and parts are independent sets.
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    spec: PartitionSpec,
    /// offsets[i] is the global index of the first vertex of part i;
    /// offsets[p] == N.
    offsets: Vec<usize>,
    /// Row-major adjacency: adj[u * N + v] is true iff the edge u -> v exists.
    adj: Vec<bool>,
}

fn offsets_of(spec: &PartitionSpec) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(spec.part_count() + 1);
    let mut acc = 0;
    offsets.push(0);
    for &s in spec.sizes() {
        acc += s;
        offsets.push(acc);
    }
    offsets
}

impl Orientation {
    pub(crate) fn from_raw(spec: PartitionSpec, adj: Vec<bool>) -> Self {
        let n = spec.order();
        debug_assert_eq!(adj.len(), n * n);
        Orientation {
            offsets: offsets_of(&spec),
            spec,
            adj,
        }
    }

    /// Builds an orientation from an explicit edge list. Every cross-part
    /// pair must appear exactly once, in exactly one direction; within-part
    /// edges are rejected.
    pub fn from_edges(spec: &PartitionSpec, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let n = spec.order();
        let offsets = offsets_of(spec);
        let global = |v: Vertex| -> Result<usize> {
            if v.part >= spec.part_count() || v.index >= spec.sizes()[v.part] {
                return Err(Error::VertexOutOfRange(v));
            }
            Ok(offsets[v.part] + v.index)
        };
        let mut adj = vec![false; n * n];
        for &(tail, head) in edges {
            if tail.part == head.part {
                return Err(Error::WithinPartEdge(tail, head));
            }
            let (t, h) = (global(tail)?, global(head)?);
            if adj[t * n + h] || adj[h * n + t] {
                return Err(Error::DuplicateDirection(tail, head));
            }
            adj[t * n + h] = true;
        }
        let out = Orientation {
            spec: spec.clone(),
            offsets,
            adj,
        };
        // completeness: every cross-part pair got a direction
        for u in 0..n {
            for v in (u + 1)..n {
                let (vu, vv) = (out.vertex(u), out.vertex(v));
                if vu.part != vv.part && !out.adj[u * n + v] && !out.adj[v * n + u] {
                    return Err(Error::MissingDirection(vu, vv));
                }
            }
        }
        Ok(out)
    }

    pub fn spec(&self) -> &PartitionSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.spec.order()
    }

    pub fn edge_count(&self) -> usize {
        self.spec.edge_count()
    }

    /// The vertex at a global index (globals run part by part, occurrence by
    /// occurrence).
    pub fn vertex(&self, global: usize) -> Vertex {
        debug_assert!(global < self.order());
        let part = self.offsets.partition_point(|&off| off <= global) - 1;
        Vertex::new(part, global - self.offsets[part])
    }

    pub fn global(&self, v: Vertex) -> usize {
        debug_assert!(v.part < self.spec.part_count() && v.index < self.spec.sizes()[v.part]);
        self.offsets[v.part] + v.index
    }

    pub fn has_edge(&self, tail: Vertex, head: Vertex) -> bool {
        self.adj[self.global(tail) * self.order() + self.global(head)]
    }

    pub(crate) fn has_edge_global(&self, tail: usize, head: usize) -> bool {
        self.adj[tail * self.order() + head]
    }

    /// Directed edges sorted by (tail, head).
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.order();
        let mut out = Vec::with_capacity(self.edge_count());
        for t in 0..n {
            for h in 0..n {
                if self.adj[t * n + h] {
                    out.push((self.vertex(t), self.vertex(h)));
                }
            }
        }
        out
    }

    fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        for t in 0..n {
            for h in 0..n {
                if self.adj[t * n + h] {
                    outdeg[t] += 1;
                    indeg[h] += 1;
                }
            }
        }
        (indeg, outdeg)
    }

    /// Vertices of in-degree zero.
    pub fn sources(&self) -> Vec<Vertex> {
        let (indeg, _) = self.degrees();
        indeg
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 0)
            .map(|(v, _)| self.vertex(v))
            .collect()
    }

    /// Vertices of out-degree zero.
    pub fn sinks(&self) -> Vec<Vertex> {
        let (_, outdeg) = self.degrees();
        outdeg
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 0)
            .map(|(v, _)| self.vertex(v))
            .collect()
    }

    /// Removes one in-degree-zero vertex at a time until none remain,
    /// returning the removal order (global indices), or `None` on a directed
    /// cycle. `choose` picks among the currently available sources, which are
    /// passed in ascending global order.
    pub(crate) fn peel_order_with(
        &self,
        mut choose: impl FnMut(&[usize]) -> usize,
    ) -> Option<Vec<usize>> {
        let n = self.order();
        let (mut indeg, _) = self.degrees();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut candidates = Vec::new();
        for _ in 0..n {
            candidates.clear();
            candidates.extend((0..n).filter(|&v| !removed[v] && indeg[v] == 0));
            if candidates.is_empty() {
                return None;
            }
            let pick = candidates[choose(&candidates)];
            removed[pick] = true;
            order.push(pick);
            for h in 0..n {
                if self.adj[pick * n + h] && !removed[h] {
                    indeg[h] -= 1;
                }
            }
        }
        Some(order)
    }

    pub(crate) fn peel_order(&self) -> Option<Vec<usize>> {
        self.peel_order_with(|_| 0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.peel_order().is_some()
    }

    /// Edge-list text form: a `parts:` header followed by one `a0 -> b1` line
    /// per directed edge. Requires at most 26 parts.
    pub fn to_edge_list(&self) -> Result<String> {
        if self.spec.part_count() > 26 {
            return Err(Error::PartLabelOverflow(self.spec.part_count()));
        }
        let mut out = format!("parts: {}\n", self.spec);
        for (tail, head) in self.edges() {
            out.push_str(&format!("{tail} -> {head}\n"));
        }
        Ok(out)
    }

    /// Parses the edge-list text form produced by [`to_edge_list`].
    ///
    /// [`to_edge_list`]: Orientation::to_edge_list
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut spec: Option<PartitionSpec> = None;
        let mut edges = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("parts:") {
                if spec.is_some() {
                    return Err(Error::parse("edge list", "duplicate parts: header"));
                }
                spec = Some(PartitionSpec::parse(rest.trim())?);
                continue;
            }
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::parse("edge list", format!("expected `->` in {line:?}")))?;
            edges.push((Vertex::parse(lhs.trim())?, Vertex::parse(rhs.trim())?));
        }
        let spec = spec.ok_or_else(|| Error::parse("edge list", "missing parts: header"))?;
        Orientation::from_edges(&spec, &edges)
    }

    /// DOT digraph form for visualization tooling. Requires at most 26 parts.
    pub fn to_dot(&self) -> Result<String> {
        if self.spec.part_count() > 26 {
            return Err(Error::PartLabelOverflow(self.spec.part_count()));
        }
        let mut out = String::from("digraph {\n");
        for v in 0..self.order() {
            out.push_str(&format!("  {};\n", self.vertex(v)));
        }
        for (tail, head) in self.edges() {
            out.push_str(&format!("  {tail} -> {head};\n"));
        }
        out.push_str("}\n");
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(part: usize, index: usize) -> Vertex {
        Vertex::new(part, index)
    }

    fn k22_left_to_right() -> Orientation {
        let spec = PartitionSpec::new(&[2, 2]).unwrap();
        Orientation::from_edges(
            &spec,
            &[
                (v(0, 0), v(1, 0)),
                (v(0, 0), v(1, 1)),
                (v(0, 1), v(1, 0)),
                (v(0, 1), v(1, 1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_within_part_edges() {
        let spec = PartitionSpec::new(&[2, 2]).unwrap();
        let err = Orientation::from_edges(&spec, &[(v(0, 0), v(0, 1))]).unwrap_err();
        assert_eq!(err, Error::WithinPartEdge(v(0, 0), v(0, 1)));
    }

    #[test]
    fn rejects_incomplete_and_conflicting_lists() {
        let spec = PartitionSpec::new(&[1, 1]).unwrap();
        assert!(matches!(
            Orientation::from_edges(&spec, &[]).unwrap_err(),
            Error::MissingDirection(..)
        ));
        assert!(matches!(
            Orientation::from_edges(&spec, &[(v(0, 0), v(1, 0)), (v(1, 0), v(0, 0))]).unwrap_err(),
            Error::DuplicateDirection(..)
        ));
        assert!(matches!(
            Orientation::from_edges(&spec, &[(v(0, 0), v(1, 5))]).unwrap_err(),
            Error::VertexOutOfRange(..)
        ));
    }

    #[test]
    fn edge_count_matches_formula() {
        let o = k22_left_to_right();
        assert_eq!(o.edges().len(), o.edge_count());
        assert_eq!(o.edge_count(), 4);
    }

    #[test]
    fn sources_and_sinks() {
        let o = k22_left_to_right();
        assert_eq!(o.sources(), vec![v(0, 0), v(0, 1)]);
        assert_eq!(o.sinks(), vec![v(1, 0), v(1, 1)]);
        assert!(o.is_acyclic());
    }

    #[test]
    fn cycle_detection() {
        let spec = PartitionSpec::new(&[2, 2]).unwrap();
        // directed 4-cycle a0 -> b0 -> a1 -> b1 -> a0
        let o = Orientation::from_edges(
            &spec,
            &[
                (v(0, 0), v(1, 0)),
                (v(1, 0), v(0, 1)),
                (v(0, 1), v(1, 1)),
                (v(1, 1), v(0, 0)),
            ],
        )
        .unwrap();
        assert!(!o.is_acyclic());
        assert!(o.sources().is_empty());
        assert!(o.sinks().is_empty());
    }

    #[test]
    fn edge_list_round_trip() {
        let o = k22_left_to_right();
        let text = o.to_edge_list().unwrap();
        assert!(text.starts_with("parts: 2,2\n"));
        assert_eq!(Orientation::parse_edge_list(&text).unwrap(), o);
        assert!(Orientation::parse_edge_list("a0 -> b0").is_err());
    }

    #[test]
    fn dot_output_shape() {
        let spec = PartitionSpec::new(&[1, 1]).unwrap();
        let o = Orientation::from_edges(&spec, &[(v(0, 0), v(1, 0))]).unwrap();
        assert_eq!(o.to_dot().unwrap(), "digraph {\n  a0;\n  b0;\n  a0 -> b0;\n}\n");
    }

    #[test]
    fn vertex_names() {
        assert_eq!(v(0, 0).to_string(), "a0");
        assert_eq!(v(2, 11).to_string(), "c11");
        assert_eq!(Vertex::parse("c11").unwrap(), v(2, 11));
        assert!(Vertex::parse("C1").is_err());
        assert!(Vertex::parse("a").is_err());
    }
}
