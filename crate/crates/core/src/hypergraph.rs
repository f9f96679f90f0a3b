//! Hypergraphs on the vertex set `{1, ..., s}` and the families used by the
//! verification suites.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex subsets are also handled as bitmasks, so `s` is capped.
pub const MAX_VERTICES: usize = 64;

/// A hypergraph with vertices `1..=s` and a canonical, duplicate-free edge list.
///
/// Every edge is sorted and non-empty, and the edge list is sorted
/// lexicographically. Row `i` of an edge code always corresponds to `edges()[i]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    s: usize,
    edges: Vec<Vec<usize>>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(s={}, {:?})", self.s, self.edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClutterCertificate {
    pub is_clutter: bool,
    /// Edge indices `(i, j)` with `edges[i]` strictly inside `edges[j]`.
    pub witness: Option<(usize, usize)>,
    pub uniform_degree: Option<usize>,
}

/// Which case of the uniform-clutter distance formula applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// `d <= s/2` and the partite-path clutter sits on `labels` inside the clutter.
    First { labels: Vec<usize> },
    /// `s/2 < d < s` and the partite-path clutter of size `s - d` sits on
    /// `labels` inside the edge-removed clutter.
    Second { labels: Vec<usize> },
    NotCovered,
}

fn canonical_edge(edge: &[usize]) -> Vec<usize> {
    let mut e = edge.to_vec();
    e.sort_unstable();
    e
}

pub fn mask_of(edge: &[usize]) -> u64 {
    edge.iter().fold(0u64, |m, &v| m | 1 << (v - 1))
}

pub fn edge_of_mask(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

impl Hypergraph {
    /// Validates and canonicalizes. Duplicate edges (after sorting) are rejected.
    pub fn new(s: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph> {
        if s == 0 || s > MAX_VERTICES {
            return Err(Error::BadParams(format!(
                "vertex count {s} outside 1..={MAX_VERTICES}"
            )));
        }
        let mut canon = Vec::with_capacity(edges.len());
        for edge in &edges {
            if edge.is_empty() {
                return Err(Error::BadParams("empty edge".into()));
            }
            if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > s) {
                return Err(Error::InvalidVertex { vertex: v as i64, s });
            }
            let e = canonical_edge(edge);
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadParams(format!("repeated vertex in edge {edge:?}")));
            }
            canon.push(e);
        }
        canon.sort();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::BadParams(format!("duplicate edge {:?}", w[0])));
        }
        Ok(Hypergraph { s, edges: canon })
    }

    pub fn vertex_count(&self) -> usize {
        self.s
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_masks(&self) -> Vec<u64> {
        self.edges.iter().map(|e| mask_of(e)).collect()
    }

    /// Position of `edge` (any vertex order) in the canonical edge list.
    pub fn index_of(&self, edge: &[usize]) -> Option<usize> {
        self.edges.binary_search(&canonical_edge(edge)).ok()
    }

    pub fn classify(&self) -> ClutterCertificate {
        let mut witness = None;
        'outer: for (i, a) in self.edges.iter().enumerate() {
            let ma = mask_of(a);
            for (j, b) in self.edges.iter().enumerate() {
                let mb = mask_of(b);
                if i != j && ma & mb == ma {
                    witness = Some((i, j));
                    break 'outer;
                }
            }
        }
        let first = self.edges.first().map(Vec::len);
        let uniform_degree = first.filter(|&d| self.edges.iter().all(|e| e.len() == d));
        ClutterCertificate {
            is_clutter: witness.is_none(),
            witness,
            uniform_degree,
        }
    }

    /// Replaces every edge by its complement in the vertex set.
    pub fn edge_removed(&self) -> Result<Hypergraph> {
        let full = if self.s == 64 { u64::MAX } else { (1u64 << self.s) - 1 };
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let c = full & !mask_of(e);
                if c == 0 {
                    Err(Error::FullEdge(e.clone()))
                } else {
                    Ok(edge_of_mask(c))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(self.s, edges)
    }

    /// True iff every edge of `other` is an edge of `self`.
    pub fn contains_subclutter(&self, other: &Hypergraph) -> bool {
        other.edges.iter().all(|e| self.index_of(e).is_some())
    }

    /// Decides which case of the uniform-clutter theorem covers `self`,
    /// searching every placement of the partite-path clutter.
    pub fn clutter_branch(&self) -> Result<Branch> {
        let d = self.classify().uniform_degree.ok_or(Error::NotUniform)?;
        let s = self.s;
        if 2 * d <= s {
            Ok(match find_partite_embedding(self, d) {
                Some(labels) => Branch::First { labels },
                None => Branch::NotCovered,
            })
        } else if d < s {
            let removed = self.edge_removed()?;
            Ok(match find_partite_embedding(&removed, s - d) {
                Some(labels) => Branch::Second { labels },
                None => Branch::NotCovered,
            })
        } else {
            Ok(Branch::NotCovered)
        }
    }
}

/// The `2^d` transversals of the parts `{labels[2r], labels[2r+1]}`, each
/// paired with the number of second elements it picks.
pub fn partite_paths(labels: &[usize]) -> Vec<(Vec<usize>, usize)> {
    let d = labels.len() / 2;
    (0..1u64 << d)
        .map(|choice| {
            let edge = (0..d)
                .map(|r| labels[2 * r + (choice >> r & 1) as usize])
                .collect();
            (edge, choice.count_ones() as usize)
        })
        .collect()
}

/// The clutter of partite paths through `d = labels.len() / 2` two-vertex
/// parts, as a hypergraph on `s` vertices.
pub fn partite_path_clutter(s: usize, labels: &[usize]) -> Result<Hypergraph> {
    if labels.is_empty() || !labels.len().is_multiple_of(2) {
        return Err(Error::BadParams(format!(
            "need an even, non-zero number of labels, got {}",
            labels.len()
        )));
    }
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateLabels(labels.to_vec()));
    }
    let edges = partite_paths(labels).into_iter().map(|(e, _)| e).collect();
    Hypergraph::new(s, edges)
}

/// Finds labels `[a_1, b_1, ..., a_d, b_d]` such that every transversal of
/// the parts `{a_r, b_r}` is an edge of `h`. Parts are enumerated with
/// `a_r < b_r` and increasing `a_r`, which covers every placement once.
pub fn find_partite_embedding(h: &Hypergraph, d: usize) -> Option<Vec<usize>> {
    if d == 0 || 2 * d > h.s {
        return None;
    }
    let edges: HashSet<u64> = h.edge_masks().into_iter().collect();
    if edges.len() < 1 << d {
        return None;
    }
    let mut labels = Vec::with_capacity(2 * d);
    let mut used = 0u64;
    search_parts(h.s, d, &edges, &mut labels, &mut used)
}

fn search_parts(
    s: usize,
    d: usize,
    edges: &HashSet<u64>,
    labels: &mut Vec<usize>,
    used: &mut u64,
) -> Option<Vec<usize>> {
    if labels.len() == 2 * d {
        let ok = partite_paths(labels)
            .iter()
            .all(|(e, _)| edges.contains(&mask_of(e)));
        return ok.then(|| labels.clone());
    }
    let min_first = labels.chunks(2).last().map_or(1, |p| p[0] + 1);
    for a in min_first..=s {
        if *used >> (a - 1) & 1 == 1 {
            continue;
        }
        for b in a + 1..=s {
            if *used >> (b - 1) & 1 == 1 {
                continue;
            }
            labels.extend([a, b]);
            *used |= 1 << (a - 1) | 1 << (b - 1);
            if let Some(found) = search_parts(s, d, edges, labels, used) {
                return Some(found);
            }
            *used &= !(1 << (a - 1) | 1 << (b - 1));
            labels.truncate(labels.len() - 2);
        }
    }
    None
}

pub fn path_graph(s: usize) -> Result<Hypergraph> {
    if s < 2 {
        return Err(Error::BadParams("path needs at least 2 vertices".into()));
    }
    Hypergraph::new(s, (1..s).map(|i| vec![i, i + 1]).collect())
}

pub fn cycle_graph(s: usize) -> Result<Hypergraph> {
    if s < 3 {
        return Err(Error::BadParams("cycle needs at least 3 vertices".into()));
    }
    Hypergraph::new(s, (1..=s).map(|i| vec![i, i % s + 1]).collect())
}

pub fn complete_graph(s: usize) -> Result<Hypergraph> {
    if s < 2 {
        return Err(Error::BadParams("complete graph needs at least 2 vertices".into()));
    }
    let edges = (1..=s)
        .flat_map(|i| (i + 1..=s).map(move |j| vec![i, j]))
        .collect();
    Hypergraph::new(s, edges)
}

/// Star with centre 1.
pub fn star(s: usize) -> Result<Hypergraph> {
    if s < 2 {
        return Err(Error::BadParams("star needs at least 2 vertices".into()));
    }
    Hypergraph::new(s, (2..=s).map(|j| vec![1, j]).collect())
}

/// Every subset of `{1..s}` with size in `d2..=d1`.
pub fn interval_hypergraph(s: usize, d1: usize, d2: usize) -> Result<Hypergraph> {
    if !(1 <= d2 && d2 <= d1 && d1 <= s) || s > 20 {
        return Err(Error::BadParams(format!(
            "interval hypergraph needs 1 <= d2 <= d1 <= s <= 20, got s={s} d1={d1} d2={d2}"
        )));
    }
    let edges = (1u64..1 << s)
        .filter(|m| (d2..=d1).contains(&(m.count_ones() as usize)))
        .map(edge_of_mask)
        .collect();
    Hypergraph::new(s, edges)
}

/// Minimum-distance formula attached to each graph of the five-vertex table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Table3Formula {
    /// `(q-2)^2 (q-1)^3`
    FourCycle,
    /// `(q-2) (q-1)^4`
    NoFourCycle,
}

impl Table3Formula {
    pub fn distance(self, q: u64) -> u64 {
        match self {
            Table3Formula::FourCycle => (q - 2).pow(2) * (q - 1).pow(3),
            Table3Formula::NoFourCycle => (q - 2) * (q - 1).pow(4),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Table3Formula::FourCycle => "(q-2)^2(q-1)^3",
            Table3Formula::NoFourCycle => "(q-2)(q-1)^4",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// 1-based position in the table, reading order.
    pub row: usize,
    pub graph: Hypergraph,
    pub formula: Table3Formula,
}

const FIVE_VERTEX_TABLE: &[(&[(usize, usize)], Table3Formula)] = {
    use Table3Formula::*;
    &[
        (&[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)], FourCycle),
        (&[(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)], NoFourCycle),
        (&[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)], FourCycle),
        (&[(1, 3), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)], FourCycle),
        (&[(1, 2), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)], FourCycle),
        (&[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)], FourCycle),
        (&[(1, 2), (1, 3), (1, 4), (1, 5)], NoFourCycle),
        (&[(1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)], FourCycle),
        (&[(1, 2), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)], FourCycle),
        (&[(1, 2), (1, 3), (1, 5), (4, 5)], NoFourCycle),
        (&[(1, 2), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5)], NoFourCycle),
        (&[(1, 2), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (4, 5)], FourCycle),
        (&[(1, 5), (2, 5), (3, 4), (3, 5), (4, 5)], NoFourCycle),
        (&[(1, 5), (2, 3), (3, 4), (3, 5), (4, 5)], NoFourCycle),
        (&[(1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (4, 5)], FourCycle),
        (&[(1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)], FourCycle),
        (&[(1, 2), (1, 5), (2, 3), (4, 5)], NoFourCycle),
        (&[(1, 2), (1, 5), (3, 4), (3, 5), (4, 5)], NoFourCycle),
        (&[(1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)], FourCycle),
        (&[(1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)], FourCycle),
        (&[(1, 5), (2, 3), (2, 5), (3, 4), (4, 5)], FourCycle),
    ]
};

/// The connected graphs on five vertices, labelled as drawn in the table of
/// minimum distances, each with its tabulated formula.
pub fn five_vertex_catalog() -> Vec<CatalogEntry> {
    FIVE_VERTEX_TABLE
        .iter()
        .enumerate()
        .map(|(i, (edges, formula))| CatalogEntry {
            row: i + 1,
            graph: Hypergraph::new(5, edges.iter().map(|&(a, b)| vec![a, b]).collect())
                .expect("catalog graphs are valid"),
            formula: *formula,
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    vertices: i64,
    edges: Vec<Vec<i64>>,
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let raw: HypergraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        locus: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    if raw.vertices < 1 || raw.vertices as usize > MAX_VERTICES {
        return Err(Error::Parse {
            locus: "vertices".into(),
            message: format!("vertex count must be in 1..={MAX_VERTICES}"),
        });
    }
    let s = raw.vertices as usize;
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (i, edge) in raw.edges.iter().enumerate() {
        if edge.is_empty() {
            return Err(Error::Parse {
                locus: format!("edges[{i}]"),
                message: "empty edge".into(),
            });
        }
        if let Some(&v) = edge.iter().find(|&&v| v < 1 || v as usize > s) {
            return Err(Error::InvalidVertex { vertex: v, s });
        }
        edges.push(edge.iter().map(|&v| v as usize).collect::<Vec<_>>());
    }
    Hypergraph::new(s, edges).map_err(|e| Error::Parse {
        locus: "edges".into(),
        message: e.to_string(),
    })
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let raw = HypergraphJson {
        vertices: h.s as i64,
        edges: h
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| v as i64).collect())
            .collect(),
    };
    serde_json::to_string(&raw).expect("hypergraph serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(s: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(s, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = hg(3, &[&[1, 2], &[2, 3]]).classify();
        assert!(c.is_clutter);
        assert_eq!(c.uniform_degree, Some(2));

        let c = hg(3, &[&[1, 2], &[1, 2, 3]]).classify();
        assert!(!c.is_clutter);
        assert_eq!(c.witness, Some((0, 1)));
        assert_eq!(c.uniform_degree, None);

        let c = hg(3, &[&[1], &[2, 3]]).classify();
        assert!(c.is_clutter);
        assert_eq!(c.uniform_degree, None);
    }

    #[test]
    fn edge_removed_examples() {
        let h = hg(5, &[&[1, 2], &[2, 3]]).edge_removed().unwrap();
        assert_eq!(h, hg(5, &[&[3, 4, 5], &[1, 4, 5]]));
        assert_eq!(hg(4, &[&[1, 2, 3]]).edge_removed().unwrap(), hg(4, &[&[4]]));
        assert_eq!(
            hg(3, &[&[1, 2, 3]]).edge_removed(),
            Err(Error::FullEdge(vec![1, 2, 3]))
        );
    }

    #[test]
    fn partite_path_examples() {
        let c = partite_path_clutter(4, &[1, 2, 3, 4]).unwrap();
        assert_eq!(c, hg(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
        assert_eq!(partite_path_clutter(2, &[1, 2]).unwrap(), hg(2, &[&[1], &[2]]));
        let c = partite_path_clutter(6, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(c.edge_count(), 8);
        assert!(c.edges().iter().all(|e| e.len() == 3));
        assert!(c.index_of(&[1, 3, 5]).is_some());
        assert!(c.index_of(&[2, 4, 6]).is_some());
        let cert = c.classify();
        assert!(cert.is_clutter);
        assert_eq!(cert.uniform_degree, Some(3));
        assert_eq!(
            partite_path_clutter(4, &[1, 2, 2, 4]),
            Err(Error::DuplicateLabels(vec![1, 2, 2, 4]))
        );
    }

    #[test]
    fn subclutter_containment() {
        let k5 = complete_graph(5).unwrap();
        let c4 = partite_path_clutter(5, &[1, 2, 3, 4]).unwrap();
        assert!(k5.contains_subclutter(&c4));
        assert!(c4.contains_subclutter(&c4));
        let c5 = cycle_graph(5).unwrap();
        for a in 1..=5 {
            for b in 1..=5 {
                for c in 1..=5 {
                    for d in 1..=5 {
                        if let Ok(p) = partite_path_clutter(5, &[a, b, c, d]) {
                            assert!(!c5.contains_subclutter(&p));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn branch_examples() {
        let c4 = cycle_graph(4).unwrap();
        assert!(matches!(c4.clutter_branch().unwrap(), Branch::First { .. }));
        assert_eq!(cycle_graph(5).unwrap().clutter_branch().unwrap(), Branch::NotCovered);
        let own = partite_path_clutter(6, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(
            own.clutter_branch().unwrap(),
            Branch::First { labels: vec![1, 2, 3, 4, 5, 6] }
        );
        let second = partite_path_clutter(6, &[1, 2, 3, 4])
            .unwrap()
            .edge_removed()
            .unwrap();
        assert!(matches!(second.clutter_branch().unwrap(), Branch::Second { .. }));
        assert_eq!(hg(3, &[&[1], &[2, 3]]).clutter_branch(), Err(Error::NotUniform));
        assert_eq!(hg(2, &[&[1, 2]]).clutter_branch().unwrap(), Branch::NotCovered);
    }

    #[test]
    fn families() {
        assert_eq!(path_graph(4).unwrap(), hg(4, &[&[1, 2], &[2, 3], &[3, 4]]));
        let i = interval_hypergraph(3, 2, 1).unwrap();
        assert_eq!(i.edge_count(), 6);
        assert_eq!(interval_hypergraph(6, 4, 2).unwrap().edge_count(), 15 + 20 + 15);
        assert!(interval_hypergraph(3, 1, 2).is_err());
        assert_eq!(complete_graph(5).unwrap().edge_count(), 10);
        assert_eq!(star(5).unwrap().edge_count(), 4);
        assert_eq!(cycle_graph(5).unwrap().edge_count(), 5);
    }

    fn has_four_cycle(g: &Hypergraph) -> bool {
        find_partite_embedding(g, 2).is_some()
    }

    fn connected(g: &Hypergraph) -> bool {
        let mut reach = 1u64;
        loop {
            let next = g
                .edge_masks()
                .into_iter()
                .filter(|m| m & reach != 0)
                .fold(reach, |r, m| r | m);
            if next == reach {
                return reach == (1 << g.vertex_count()) - 1;
            }
            reach = next;
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut v = p.clone();
                v.insert(pos, n);
                out.push(v);
            }
        }
        out
    }

    fn isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
        a.edge_count() == b.edge_count()
            && permutations(a.vertex_count()).iter().any(|p| {
                a.edges()
                    .iter()
                    .all(|e| b.index_of(&e.iter().map(|&v| p[v - 1]).collect::<Vec<_>>()).is_some())
            })
    }

    #[test]
    fn catalog_is_every_connected_five_vertex_graph() {
        let cat = five_vertex_catalog();
        assert_eq!(cat.len(), 21);
        for e in &cat {
            assert!(connected(&e.graph), "row {}", e.row);
            assert_eq!(
                has_four_cycle(&e.graph),
                e.formula == Table3Formula::FourCycle,
                "row {}",
                e.row
            );
        }
        for (i, a) in cat.iter().enumerate() {
            for b in &cat[i + 1..] {
                assert!(!isomorphic(&a.graph, &b.graph), "rows {} {}", a.row, b.row);
            }
        }
        // every connected labelled graph on 5 vertices is isomorphic to a row
        let all_pairs: Vec<Vec<usize>> = complete_graph(5).unwrap().edges().to_vec();
        for subset in 1u32..1 << 10 {
            let edges = (0..10)
                .filter(|b| subset >> b & 1 == 1)
                .map(|b| all_pairs[b].clone())
                .collect();
            let g = Hypergraph::new(5, edges).unwrap();
            if connected(&g) {
                assert!(cat.iter().any(|e| isomorphic(&g, &e.graph)), "{g:?}");
            }
        }
    }

    #[test]
    fn json_examples() {
        let h = parse_hypergraph(r#"{"vertices":4,"edges":[[1,2],[2,3],[3,4]]}"#).unwrap();
        assert_eq!(h, path_graph(4).unwrap());
        assert!(matches!(
            parse_hypergraph(r#"{"vertices":3,"edges":[[1,2],[2,1]]}"#),
            Err(Error::Parse { .. })
        ));
        assert_eq!(
            parse_hypergraph(r#"{"vertices":2,"edges":[[3]]}"#),
            Err(Error::InvalidVertex { vertex: 3, s: 2 })
        );
        assert!(matches!(
            parse_hypergraph("{\"vertices\":2,\n\"edgs\":[]}"),
            Err(Error::Parse { .. })
        ));
        let h = parse_hypergraph(r#"{"vertices":4,"edges":[[3,2],[2,1]]}"#).unwrap();
        assert_eq!(serialize_hypergraph(&h), r#"{"vertices":4,"edges":[[1,2],[2,3]]}"#);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
            (2usize..8).prop_flat_map(|s| {
                let proper = (1u64 << s) - 2;
                proptest::collection::btree_set(1u64..=proper, 1..12)
                    .prop_map(move |masks| {
                        Hypergraph::new(s, masks.into_iter().map(edge_of_mask).collect()).unwrap()
                    })
            })
        }

        proptest! {
            #[test]
            fn edge_removal_is_an_involution(h in arb_hypergraph()) {
                prop_assert_eq!(h.edge_removed().unwrap().edge_removed().unwrap(), h);
            }

            #[test]
            fn json_round_trip(h in arb_hypergraph()) {
                prop_assert_eq!(parse_hypergraph(&serialize_hypergraph(&h)).unwrap(), h);
            }

            #[test]
            fn classify_is_consistent(h in arb_hypergraph()) {
                let c = h.classify();
                if let Some(d) = c.uniform_degree {
                    prop_assert!(h.edges().iter().all(|e| e.len() == d));
                }
                if !c.is_clutter {
                    let (i, j) = c.witness.unwrap();
                    let (a, b) = (mask_of(&h.edges()[i]), mask_of(&h.edges()[j]));
                    prop_assert!(a & b == a && a != b);
                }
            }

            #[test]
            fn partite_clutters_are_uniform(d in 1usize..5) {
                let labels: Vec<usize> = (1..=2 * d).collect();
                let c = partite_path_clutter(2 * d, &labels).unwrap();
                prop_assert_eq!(c.edge_count(), 1 << d);
                let cert = c.classify();
                prop_assert!(cert.is_clutter);
                prop_assert_eq!(cert.uniform_degree, Some(d));
            }
        }
    }
}
