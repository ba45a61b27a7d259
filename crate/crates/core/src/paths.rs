//! Edge paths and their wall-crossing combinatorics: geodesy and
//! quasi-geodesy tests, bracket numbers, defect, the deletion calculus, and
//! vertex-to-vertex tracking distance.

use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;

use crate::element::Element;
use crate::engine::ElemId;
use crate::error::{Error, Result};
use crate::system::CoxeterSystem;
use crate::walls::Wall;

/// An edge path: a start vertex and a sequence of generator letters. A path
/// with k letters has k + 1 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgePath {
    start: Element,
    letters: Vec<u8>,
}

impl EdgePath {
    pub fn new(start: Element, letters: Vec<u8>) -> Self {
        EdgePath { start, letters }
    }

    pub fn start(&self) -> &Element {
        &self.start
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Debug for EdgePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgePath({:?}, {:?})", self.start.nf(), self.letters)
    }
}

/// Quasi-geodesic parameters: lambda >= 1 and epsilon >= 0, exact rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuasiGeodesicParams {
    lambda: Rational64,
    epsilon: Rational64,
}

impl QuasiGeodesicParams {
    pub fn new(lambda: Rational64, epsilon: Rational64) -> Result<Self> {
        if lambda < Rational64::from_integer(1) {
            return Err(Error::InvalidParams("lambda must be at least 1".into()));
        }
        if epsilon < Rational64::from_integer(0) {
            return Err(Error::InvalidParams("epsilon must be non-negative".into()));
        }
        Ok(QuasiGeodesicParams { lambda, epsilon })
    }

    pub fn lambda(&self) -> Rational64 {
        self.lambda
    }

    pub fn epsilon(&self) -> Rational64 {
        self.epsilon
    }
}

/// Outcome of the quasi-geodesic inequality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuasiGeodesicCheck {
    Satisfied,
    /// First violating parameter pair, scanning spans from widest to
    /// narrowest and left to right within a span.
    Violated { s: usize, t: usize },
}

impl QuasiGeodesicCheck {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, QuasiGeodesicCheck::Satisfied)
    }
}

/// Bracket numbers of a path: for each vertex, the number of walls with an
/// edge strictly before and strictly after it.
#[derive(Debug, Clone)]
pub struct BracketReport {
    pub per_vertex: Vec<usize>,
    pub max: usize,
    /// Distinct walls crossed by the path, in first-crossing order.
    pub walls: Vec<Wall>,
    /// For each vertex, indices into `walls` of the bracketing walls.
    pub witnesses: Vec<Vec<usize>>,
}

/// Vertices and per-edge wall reflections of a path.
pub(crate) struct PathData {
    pub vertices: Vec<ElemId>,
    pub walls: Vec<ElemId>,
}

impl CoxeterSystem {
    pub(crate) fn path_data_ids(&self, start: ElemId, letters: &[u8]) -> Result<PathData> {
        let eng = self.engine();
        let mut vertices = Vec::with_capacity(letters.len() + 1);
        let mut walls = Vec::with_capacity(letters.len());
        let mut u = start;
        vertices.push(u);
        for &s in letters {
            walls.push(eng.conjugate_gen(u, s)?);
            u = eng.right_mult(u, s)?;
            vertices.push(u);
        }
        Ok(PathData { vertices, walls })
    }

    pub(crate) fn path_data(&self, p: &EdgePath) -> Result<PathData> {
        self.path_data_ids(self.id_of(p.start())?, p.letters())
    }

    /// All vertices of the path in order.
    pub fn path_vertices(&self, p: &EdgePath) -> Result<Vec<Element>> {
        let data = self.path_data(p)?;
        Ok(data
            .vertices
            .into_iter()
            .map(|id| self.element_of(id))
            .collect())
    }

    /// Final vertex of the path.
    pub fn path_end(&self, p: &EdgePath) -> Result<Element> {
        let data = self.path_data(p)?;
        Ok(self.element_of(*data.vertices.last().expect("paths have a start")))
    }

    /// The ShortLex geodesic path from a to b.
    pub fn geodesic(&self, a: &Element, b: &Element) -> Result<EdgePath> {
        let eng = self.engine();
        let ia = self.id_of(a)?;
        let ib = self.id_of(b)?;
        let g = eng.mult(eng.inverse(ia)?, ib)?;
        Ok(EdgePath::new(a.clone(), eng.letters_of(g)))
    }

    /// Wall of each edge of the path, in order.
    pub fn wall_sequence(&self, p: &EdgePath) -> Result<Vec<Wall>> {
        let data = self.path_data(p)?;
        Ok(data
            .walls
            .into_iter()
            .map(|r| Wall::from_reflection(self.element_of(r)))
            .collect())
    }

    /// A path is geodesic iff its length equals the distance between its
    /// endpoints; equivalently its wall sequence has no repetition.
    pub fn is_geodesic(&self, p: &EdgePath) -> Result<bool> {
        let data = self.path_data(p)?;
        let a = data.vertices[0];
        let b = *data.vertices.last().unwrap();
        Ok(p.len() == self.engine().dist(a, b)?)
    }

    /// Check |s - t| <= lambda d(v_s, v_t) + epsilon over all integer
    /// parameter pairs, reporting the first violation found scanning spans
    /// widest first.
    pub fn is_quasi_geodesic(
        &self,
        p: &EdgePath,
        params: &QuasiGeodesicParams,
    ) -> Result<QuasiGeodesicCheck> {
        self.path_data(p)?;
        let n = p.len();
        let eng = self.engine();
        // d(v_s, v_t) is the length of the letters between them folded from
        // the identity; one incremental row per base vertex.
        let mut dist = vec![0usize; (n + 1) * (n + 1)];
        for s in 0..=n {
            let mut z = crate::engine::IDENTITY;
            for t in s + 1..=n {
                z = eng.right_mult(z, p.letters()[t - 1])?;
                dist[s * (n + 1) + t] = eng.len(z);
            }
        }
        for span in (1..=n).rev() {
            for s in 0..=(n - span) {
                let t = s + span;
                let d = dist[s * (n + 1) + t] as i64;
                let lhs = Rational64::from_integer(span as i64);
                let rhs = params.lambda * Rational64::from_integer(d) + params.epsilon;
                if lhs > rhs {
                    return Ok(QuasiGeodesicCheck::Violated { s, t });
                }
            }
        }
        Ok(QuasiGeodesicCheck::Satisfied)
    }

    /// Defect of v relative to (a, b): half the triangle slack
    /// (d(a,v) + d(v,b) - d(a,b)) / 2. Zero iff v lies on a geodesic.
    pub fn defect(&self, a: &Element, v: &Element, b: &Element) -> Result<usize> {
        self.defect_ids(self.id_of(a)?, self.id_of(v)?, self.id_of(b)?)
    }

    pub(crate) fn defect_ids(&self, a: ElemId, v: ElemId, b: ElemId) -> Result<usize> {
        let eng = self.engine();
        let slack = eng.dist(a, v)? + eng.dist(v, b)? - eng.dist(a, b)?;
        debug_assert_eq!(slack % 2, 0);
        Ok(slack / 2)
    }

    /// Bracket numbers for every vertex of the path.
    pub fn bracket_report(&self, p: &EdgePath) -> Result<BracketReport> {
        let data = self.path_data(p)?;
        let n = p.len();
        let mut order: Vec<ElemId> = Vec::new();
        let mut first: HashMap<ElemId, usize> = HashMap::new();
        let mut last: HashMap<ElemId, usize> = HashMap::new();
        for (i, &w) in data.walls.iter().enumerate() {
            first.entry(w).or_insert_with(|| {
                order.push(w);
                i
            });
            last.insert(w, i);
        }
        // Wall w brackets vertex t iff first(w) < t <= last(w).
        let mut per_vertex = vec![0usize; n + 1];
        let mut witnesses: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (wi, &w) in order.iter().enumerate() {
            let f = first[&w];
            let l = last[&w];
            for t in (f + 1)..=l {
                per_vertex[t] += 1;
                witnesses[t].push(wi);
            }
        }
        let max = per_vertex.iter().copied().max().unwrap_or(0);
        let walls = order
            .into_iter()
            .map(|r| Wall::from_reflection(self.element_of(r)))
            .collect();
        Ok(BracketReport {
            per_vertex,
            max,
            walls,
            witnesses,
        })
    }

    /// Delete two edges of the path lying in the same wall, reflecting the
    /// segment between them across that wall. Endpoints are preserved and the
    /// path shortens by exactly two edges.
    pub fn delete_pair(&self, p: &EdgePath, i: usize, j: usize) -> Result<EdgePath> {
        let n = p.len();
        if i >= j || j >= n {
            return Err(Error::IndexOutOfRange(format!(
                "delete_pair indices ({i}, {j}) for a path of {n} edges"
            )));
        }
        let data = self.path_data(p)?;
        if data.walls[i] != data.walls[j] {
            return Err(Error::InvalidDeletion(format!(
                "edges {i} and {j} lie in different walls"
            )));
        }
        // Left multiplication by the reflection preserves edge letters, so
        // the reflected middle segment keeps its letters verbatim.
        let mut letters = Vec::with_capacity(n - 2);
        letters.extend_from_slice(&p.letters()[..i]);
        letters.extend_from_slice(&p.letters()[i + 1..j]);
        letters.extend_from_slice(&p.letters()[j + 1..]);
        Ok(EdgePath::new(p.start().clone(), letters))
    }

    /// Subpath between vertex indices i <= j.
    pub fn subpath(&self, p: &EdgePath, i: usize, j: usize) -> Result<EdgePath> {
        let n = p.len();
        if i > j || j > n {
            return Err(Error::IndexOutOfRange(format!(
                "subpath range ({i}, {j}) for a path with {} vertices",
                n + 1
            )));
        }
        let data = self.path_data(p)?;
        Ok(EdgePath::new(
            self.element_of(data.vertices[i]),
            p.letters()[i..j].to_vec(),
        ))
    }

    pub fn concat(&self, p: &EdgePath, q: &EdgePath) -> Result<EdgePath> {
        if self.path_end(p)? != *q.start() {
            return Err(Error::EndpointMismatch);
        }
        let mut letters = p.letters().to_vec();
        letters.extend_from_slice(q.letters());
        Ok(EdgePath::new(p.start().clone(), letters))
    }

    pub fn reverse(&self, p: &EdgePath) -> Result<EdgePath> {
        let end = self.path_end(p)?;
        let letters: Vec<u8> = p.letters().iter().rev().copied().collect();
        Ok(EdgePath::new(end, letters))
    }

    /// One-sided tracking distance: max over vertices of p of the distance
    /// to the nearest vertex of q. A result K means p is K-tracked by q.
    pub fn tracking_distance(&self, p: &EdgePath, q: &EdgePath) -> Result<usize> {
        let pd = self.path_data(p)?;
        self.tracking_distance_ids(&pd.vertices, self.id_of(q.start())?, q.letters())
    }

    pub(crate) fn tracking_distance_ids(
        &self,
        p_vertices: &[ElemId],
        q_start: ElemId,
        q_letters: &[u8],
    ) -> Result<usize> {
        let eng = self.engine();
        let mut worst = 0usize;
        for &u in p_vertices {
            let inv_u = eng.inverse(u)?;
            let mut z = eng.mult(inv_u, q_start)?;
            let mut best = eng.len(z);
            for &s in q_letters {
                if best == 0 {
                    break;
                }
                z = eng.right_mult(z, s)?;
                best = best.min(eng.len(z));
            }
            worst = worst.max(best);
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    fn path(sys: &crate::CoxeterSystem, letters: &str) -> EdgePath {
        EdgePath::new(sys.identity(), w(sys, letters).letters().to_vec())
    }

    fn qg(lambda: i64, epsilon: i64) -> QuasiGeodesicParams {
        QuasiGeodesicParams::new(
            Rational64::from_integer(lambda),
            Rational64::from_integer(epsilon),
        )
        .unwrap()
    }

    #[test]
    fn wall_sequence_examples() {
        let d = dinf();
        let ws = d.wall_sequence(&path(&d, "s")).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].reflection(), &el(&d, "s"));

        let ws = d.wall_sequence(&path(&d, "ts")).unwrap();
        let refs: Vec<_> = ws.iter().map(|q| q.reflection().clone()).collect();
        assert_eq!(refs, vec![el(&d, "t"), el(&d, "tst")]);

        let m = m2();
        let ws = m.wall_sequence(&path(&m, "sts")).unwrap();
        let refs: Vec<_> = ws.iter().map(|q| q.reflection().clone()).collect();
        assert_eq!(refs, vec![el(&m, "s"), el(&m, "t"), el(&m, "s")]);
    }

    #[test]
    fn is_geodesic_examples() {
        let d = dinf();
        assert!(d.is_geodesic(&path(&d, "s")).unwrap());
        assert!(d.is_geodesic(&path(&d, "ststst")).unwrap());
        let m = m2();
        assert!(!m.is_geodesic(&path(&m, "sts")).unwrap());
    }

    #[test]
    fn geodesic_iff_no_repeated_wall() {
        for sys in [dinf(), b2(), a2tilde()] {
            for len in 0..6 {
                for seed in 0..20u64 {
                    let mut letters = Vec::new();
                    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(len);
                    for _ in 0..len {
                        state = state
                            .wrapping_mul(6364136223846793005)
                            .wrapping_add(1442695040888963407);
                        letters.push((state >> 33) as u8 % sys.rank() as u8);
                    }
                    let p = EdgePath::new(sys.identity(), letters);
                    let walls = sys.wall_sequence(&p).unwrap();
                    let distinct: std::collections::BTreeSet<_> =
                        walls.iter().map(|q| q.reflection().clone()).collect();
                    assert_eq!(
                        sys.is_geodesic(&p).unwrap(),
                        distinct.len() == walls.len()
                    );
                }
            }
        }
    }

    #[test]
    fn quasi_geodesic_examples() {
        let d = dinf();
        let geo = path(&d, "ststst");
        assert!(d.is_quasi_geodesic(&geo, &qg(1, 0)).unwrap().is_satisfied());
        let back = path(&d, "stts");
        assert_eq!(
            d.is_quasi_geodesic(&back, &qg(1, 0)).unwrap(),
            QuasiGeodesicCheck::Violated { s: 0, t: 4 }
        );
        assert!(d.is_quasi_geodesic(&back, &qg(1, 4)).unwrap().is_satisfied());
    }

    #[test]
    fn defect_examples() {
        let m = m2();
        assert_eq!(
            m.defect(&m.identity(), &el(&m, "s"), &el(&m, "st")).unwrap(),
            0
        );
        assert_eq!(
            m.defect(&m.identity(), &el(&m, "s"), &el(&m, "t")).unwrap(),
            1
        );
        let d = dinf();
        assert_eq!(
            d.defect(&d.identity(), &el(&d, "s"), &el(&d, "ts")).unwrap(),
            1
        );
    }

    #[test]
    fn bracket_examples() {
        let d = dinf();
        let report = d.bracket_report(&path(&d, "ststst")).unwrap();
        assert_eq!(report.max, 0);
        assert!(report.per_vertex.iter().all(|&b| b == 0));

        let m = m2();
        let report = m.bracket_report(&path(&m, "sts")).unwrap();
        assert_eq!(report.per_vertex, vec![0, 1, 1, 0]);
        assert_eq!(report.max, 1);
        assert_eq!(report.witnesses[1], vec![0]);
        assert_eq!(report.walls[0].reflection(), &el(&m, "s"));

        let report = d.bracket_report(&path(&d, "ss")).unwrap();
        assert_eq!(report.per_vertex, vec![0, 1, 0]);
        assert_eq!(report.max, 1);
    }

    #[test]
    fn delete_pair_examples() {
        let d = dinf();
        let out = d.delete_pair(&path(&d, "ss"), 0, 1).unwrap();
        assert!(out.is_empty());
        assert!(out.start().is_identity());

        let m = m2();
        let out = m.delete_pair(&path(&m, "sts"), 0, 2).unwrap();
        assert_eq!(out.letters(), w(&m, "t").letters());

        let out = m.delete_pair(&path(&m, "stts"), 1, 2).unwrap();
        assert_eq!(out.letters(), w(&m, "ss").letters());

        assert!(matches!(
            m.delete_pair(&path(&m, "st"), 0, 1),
            Err(Error::InvalidDeletion(_))
        ));
        assert!(matches!(
            m.delete_pair(&path(&m, "st"), 1, 1),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn delete_pair_preserves_endpoints_and_parity() {
        let g = grid();
        let p = path(&g, "acbdacab");
        let data_walls = g.wall_sequence(&p).unwrap();
        let end = g.path_end(&p).unwrap();
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                if data_walls[i] != data_walls[j] {
                    continue;
                }
                let out = g.delete_pair(&p, i, j).unwrap();
                assert_eq!(out.len(), p.len() - 2);
                assert_eq!(g.path_end(&out).unwrap(), end);
                // Per-wall crossing parity is unchanged.
                let mut before: std::collections::BTreeMap<_, usize> =
                    std::collections::BTreeMap::new();
                for q in &data_walls {
                    *before.entry(q.reflection().clone()).or_default() += 1;
                }
                let mut after: std::collections::BTreeMap<_, usize> =
                    std::collections::BTreeMap::new();
                for q in g.wall_sequence(&out).unwrap() {
                    *after.entry(q.reflection().clone()).or_default() += 1;
                }
                let keys: std::collections::BTreeSet<_> =
                    before.keys().chain(after.keys()).cloned().collect();
                for key in keys {
                    let x = before.get(&key).copied().unwrap_or(0);
                    let y = after.get(&key).copied().unwrap_or(0);
                    assert_eq!(x % 2, y % 2, "parity of {key:?}");
                }
            }
        }
    }

    #[test]
    fn structural_ops_examples() {
        let d = dinf();
        let p = path(&d, "ts");
        let sub = d.subpath(&p, 0, 1).unwrap();
        assert_eq!(sub.letters(), w(&d, "t").letters());
        assert!(sub.start().is_identity());

        let rev = d.reverse(&p).unwrap();
        assert_eq!(rev.start(), &el(&d, "ts"));
        assert_eq!(rev.letters(), w(&d, "st").letters());

        let back = d.concat(&p, &rev).unwrap();
        assert_eq!(g_end(&d, &back), d.identity());

        let q = EdgePath::new(el(&d, "s"), vec![1]);
        assert!(matches!(d.concat(&p, &q), Err(Error::EndpointMismatch)));
    }

    fn g_end(sys: &crate::CoxeterSystem, p: &EdgePath) -> crate::Element {
        sys.path_end(p).unwrap()
    }

    #[test]
    fn tracking_distance_examples() {
        let m = m2();
        let p = path(&m, "sts");
        assert_eq!(m.tracking_distance(&p, &p).unwrap(), 0);
        let q = path(&m, "t");
        assert_eq!(m.tracking_distance(&p, &q).unwrap(), 1);
        assert_eq!(m.tracking_distance(&q, &p).unwrap(), 0);
    }

    #[test]
    fn crossing_parity_equals_separation() {
        let g = grid();
        for letters in ["acbd", "aabb", "acac", "abcdd", "badcab"] {
            let p = path(&g, letters);
            let end = g.path_end(&p).unwrap();
            let walls = g.wall_sequence(&p).unwrap();
            let mut counts: std::collections::BTreeMap<_, usize> =
                std::collections::BTreeMap::new();
            for q in &walls {
                *counts.entry(q.clone()).or_default() += 1;
            }
            for (q, count) in counts {
                assert_eq!(
                    count % 2 == 1,
                    g.separates(&q, &g.identity(), &end).unwrap()
                );
            }
        }
    }
}
