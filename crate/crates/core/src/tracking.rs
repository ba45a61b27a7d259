//! Geodesic approximation, the straightening construction, double-tracking
//! bounds, and the experiment path families (periodic axes and the grid
//! spiral).

use std::collections::HashSet;

use num_rational::Rational64;

use crate::element::Element;
use crate::engine::{ElemId, IDENTITY};
use crate::error::{Error, Result};
use crate::paths::{EdgePath, QuasiGeodesicParams};
use crate::system::CoxeterSystem;
use crate::walls::Wall;

/// Result of projecting a vertex onto the geodesics between two endpoints.
#[derive(Debug, Clone)]
pub struct ProjectionResult {
    /// Final vertex; always of defect zero relative to the endpoints.
    pub projected: Element,
    /// Walls reflected across, in application order.
    pub reflections_used: Vec<Wall>,
    pub steps: usize,
}

/// An approximation of a path in which every vertex lies on a geodesic
/// between the endpoints.
#[derive(Debug, Clone)]
pub struct ApproximationResult {
    pub approx: EdgePath,
    /// Max distance between an input vertex and its approximation point.
    pub l_achieved: usize,
    /// Vertex index of each approximation point within `approx`.
    pub segment_boundaries: Vec<usize>,
}

/// One induction event of the straightening construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// A subpath between two edges in the same wall was replaced by a
    /// recursively straightened geodesic.
    Splice {
        depth: usize,
        chain: usize,
        from_edge: usize,
        to_edge: usize,
    },
    /// A repeated-wall edge pair was deleted in the single-chain base case.
    DeletePair {
        depth: usize,
        edge_i: usize,
        edge_j: usize,
    },
}

/// Output of the straightening construction.
#[derive(Debug, Clone)]
pub struct StraightenResult {
    pub geodesic: EdgePath,
    /// Tracking distance from the input path to the output geodesic.
    pub k_achieved: usize,
    pub trace: Vec<TraceEvent>,
}

/// The nearest-vertex correspondence between a tracked pair of paths.
#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    /// a(n): index of the nearest vertex of the tracking path, pinned to 0
    /// at 0 and to the last index at the end.
    pub a_of: Vec<usize>,
    pub k: usize,
    /// Verified ceiling on the reverse tracking distance.
    pub bound_checked: usize,
}

/// Arm lengths of the grid spiral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpiralParams {
    pub c: f64,
    pub growth: f64,
}

impl Default for SpiralParams {
    fn default() -> Self {
        SpiralParams { c: 4.0, growth: 1.7 }
    }
}

/// Bound on the reverse tracking distance of a K-tracked pair:
/// lambda2 (2K + 1) + epsilon2 + K.
pub fn double_tracking_bound(lambda2: Rational64, epsilon2: Rational64, k: u64) -> Rational64 {
    let k = Rational64::from_integer(k as i64);
    lambda2 * (Rational64::from_integer(2) * k + Rational64::from_integer(1)) + epsilon2 + k
}

/// The fixed rank-4 grid system: two infinite dihedral factors with all
/// cross orders 2.
pub fn grid_system() -> CoxeterSystem {
    CoxeterSystem::new(
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        vec![
            vec![1, 0, 2, 2],
            vec![0, 1, 2, 2],
            vec![2, 2, 1, 0],
            vec![2, 2, 0, 1],
        ],
    )
    .expect("the grid system is valid")
}

/// Letter sequence of the discretized logarithmic spiral in the grid system:
/// winding k consists of four axis-aligned arms of length round(c g^k),
/// realized by alternating the two generators of the relevant factor.
pub fn spiral_letters(windings: usize, params: SpiralParams) -> Result<Vec<u8>> {
    if windings == 0 {
        return Err(Error::InvalidParams("windings must be at least 1".into()));
    }
    if !(params.c.is_finite() && params.c > 0.0)
        || !(params.growth.is_finite() && params.growth > 0.0)
    {
        return Err(Error::InvalidParams(
            "spiral constants must be positive".into(),
        ));
    }
    // The line of an infinite dihedral factor has its edge between positions
    // p and p+1 labeled by the even generator iff p is even.
    let step = |base: u8, pos: i64, dir: i64| -> u8 {
        let k = if dir > 0 { pos } else { pos - 1 };
        base + if k.rem_euclid(2) == 0 { 0 } else { 1 }
    };
    let mut letters = Vec::new();
    let mut x = 0i64;
    let mut y = 0i64;
    for w in 1..=windings {
        let arm = (params.c * params.growth.powi(w as i32)).round() as i64;
        if arm < 1 {
            return Err(Error::InvalidParams(format!(
                "winding {w} has zero arm length"
            )));
        }
        for _ in 0..arm {
            letters.push(step(0, x, 1));
            x += 1;
        }
        for _ in 0..arm {
            letters.push(step(2, y, 1));
            y += 1;
        }
        for _ in 0..arm {
            letters.push(step(0, x, -1));
            x -= 1;
        }
        for _ in 0..arm {
            letters.push(step(2, y, -1));
            y -= 1;
        }
    }
    Ok(letters)
}

/// The spiral path from the identity of the given grid system.
pub fn spiral_path(sys: &CoxeterSystem, windings: usize, params: SpiralParams) -> Result<EdgePath> {
    if sys.rank() != 4 {
        return Err(Error::InvalidParams(
            "the spiral lives in the rank-4 grid system".into(),
        ));
    }
    Ok(EdgePath::new(sys.identity(), spiral_letters(windings, params)?))
}

impl CoxeterSystem {
    /// Iteratively reflect v across the last doubly-crossed wall of the
    /// concatenated geodesics a -> v -> b until v lies on a geodesic.
    pub fn project_vertex(&self, a: &Element, b: &Element, v: &Element) -> Result<ProjectionResult> {
        let (projected, used) =
            self.project_vertex_ids(self.id_of(a)?, self.id_of(b)?, self.id_of(v)?)?;
        Ok(ProjectionResult {
            projected: self.element_of(projected),
            steps: used.len(),
            reflections_used: used
                .into_iter()
                .map(|r| Wall::from_reflection(self.element_of(r)))
                .collect(),
        })
    }

    pub(crate) fn project_vertex_ids(
        &self,
        a: ElemId,
        b: ElemId,
        v: ElemId,
    ) -> Result<(ElemId, Vec<ElemId>)> {
        let eng = self.engine();
        let mut cur = v;
        let mut used = Vec::new();
        let mut defect = self.defect_ids(a, cur, b)?;
        while defect > 0 {
            let first = self.walls_separating_ids(a, cur)?;
            let second = self.walls_separating_ids(cur, b)?;
            let twice: HashSet<ElemId> = second.iter().map(|(r, _)| *r).collect();
            let hit = first
                .iter()
                .rposition(|(r, _)| twice.contains(r))
                .ok_or_else(|| {
                    Error::InvariantViolation(
                        "positive defect but no doubly-crossed wall".into(),
                    )
                })?;
            let r = first[hit].0;
            used.push(r);
            let next = eng.mult(r, cur)?;
            debug_assert!(eng.dist(a, next).unwrap() < eng.dist(a, cur).unwrap());
            debug_assert!(eng.dist(next, b).unwrap() < eng.dist(cur, b).unwrap());
            cur = next;
            let next_defect = self.defect_ids(a, cur, b)?;
            if next_defect >= defect {
                return Err(Error::InvariantViolation(
                    "projection step did not decrease the defect".into(),
                ));
            }
            defect = next_defect;
        }
        Ok((cur, used))
    }

    /// Project every vertex and join consecutive projections by ShortLex
    /// geodesics. Every vertex of the result lies on a geodesic between the
    /// endpoints; this is verified, not assumed.
    pub fn geodesic_approximation(&self, p: &EdgePath) -> Result<ApproximationResult> {
        let data = self.path_data(p)?;
        let a = data.vertices[0];
        let b = *data.vertices.last().unwrap();
        let (letters, boundaries, l_achieved) =
            self.approximation_ids(a, b, &data.vertices)?;
        let approx = EdgePath::new(p.start().clone(), letters);
        let check = self.path_data(&approx)?;
        for &x in &check.vertices {
            if self.defect_ids(a, x, b)? != 0 {
                return Err(Error::InvariantViolation(
                    "approximation produced a vertex off every geodesic".into(),
                ));
            }
        }
        Ok(ApproximationResult {
            approx,
            l_achieved,
            segment_boundaries: boundaries,
        })
    }

    /// Returns (letters, boundaries, max displacement).
    fn approximation_ids(
        &self,
        a: ElemId,
        b: ElemId,
        vertices: &[ElemId],
    ) -> Result<(Vec<u8>, Vec<usize>, usize)> {
        let eng = self.engine();
        let mut letters: Vec<u8> = Vec::new();
        let mut boundaries = Vec::with_capacity(vertices.len());
        let mut l_achieved = 0usize;
        let mut prev: Option<ElemId> = None;
        for &v in vertices {
            let (w, _) = self.project_vertex_ids(a, b, v)?;
            l_achieved = l_achieved.max(eng.dist(v, w)?);
            if let Some(pw) = prev {
                let join = eng.mult(eng.inverse(pw)?, w)?;
                letters.extend_from_slice(&eng.letters_of(join));
            }
            boundaries.push(letters.len());
            prev = Some(w);
        }
        Ok((letters, boundaries, l_achieved))
    }

    /// The straightening construction: approximate, partition the separating
    /// walls into chains, and splice recursively straightened subpaths until
    /// the path is geodesic with respect to every chain.
    pub fn straighten(&self, p: &EdgePath) -> Result<StraightenResult> {
        let data = self.path_data(p)?;
        let start = data.vertices[0];
        let end = *data.vertices.last().unwrap();
        let eng = self.engine();
        if start == end {
            // Closed paths degenerate: the empty path at the start vertex,
            // tracked at the largest excursion.
            let mut k = 0usize;
            for &v in &data.vertices {
                k = k.max(eng.dist(start, v)?);
            }
            return Ok(StraightenResult {
                geodesic: EdgePath::new(p.start().clone(), Vec::new()),
                k_achieved: k,
                trace: Vec::new(),
            });
        }
        let mut trace = Vec::new();
        let letters = self.straighten_rec(start, p.letters(), 0, &mut trace)?;
        let k_achieved = self.tracking_distance_ids(&data.vertices, start, &letters)?;
        Ok(StraightenResult {
            geodesic: EdgePath::new(p.start().clone(), letters),
            k_achieved,
            trace,
        })
    }

    fn straighten_rec(
        &self,
        start: ElemId,
        letters: &[u8],
        depth: usize,
        trace: &mut Vec<TraceEvent>,
    ) -> Result<Vec<u8>> {
        let caps = self.caps();
        if depth > caps.depth_cap {
            return Err(Error::DepthCapExceeded {
                cap: caps.depth_cap,
            });
        }
        let eng = self.engine();
        let end = eng.mult_word(start, letters)?;
        if start == end {
            return Ok(Vec::new());
        }
        // Every vertex on a geodesic first; the rest of the induction
        // preserves this wall discipline.
        let (approx, _, _) = {
            let data = self.path_data_ids(start, letters)?;
            self.approximation_ids(start, end, &data.vertices)?
        };
        let chains = self.dilworth_ids(start, end)?;
        let sep = self.walls_separating_ids(start, end)?;
        let mut cur = approx;
        if chains.len() > 1 {
            // Deterministic chain order: ShortLex of the least wall.
            let mut order: Vec<(crate::word::Word, usize)> = chains
                .iter()
                .enumerate()
                .map(|(ci, chain)| (eng.nf_word(sep[chain[0]].0), ci))
                .collect();
            order.sort();
            for (rank, &(_, ci)) in order.iter().enumerate() {
                let chain_walls: HashSet<ElemId> =
                    chains[ci].iter().map(|&i| sep[i].0).collect();
                let mut guard = cur.len() + chain_walls.len() + 2;
                loop {
                    if guard == 0 {
                        return Err(Error::InvariantViolation(
                            "chain straightening failed to make progress".into(),
                        ));
                    }
                    guard -= 1;
                    let data = self.path_data_ids(start, &cur)?;
                    let mut found = None;
                    'scan: for (i, &w) in data.walls.iter().enumerate() {
                        if !chain_walls.contains(&w) {
                            continue;
                        }
                        for j in (i + 1)..data.walls.len() {
                            if data.walls[j] == w {
                                let j_last = data
                                    .walls
                                    .iter()
                                    .rposition(|&x| x == w)
                                    .expect("wall occurs");
                                found = Some((i, j_last));
                                break 'scan;
                            }
                        }
                    }
                    let Some((i, j)) = found else { break };
                    let sub_geo =
                        self.straighten_rec(data.vertices[i], &cur[i..j], depth + 1, trace)?;
                    trace.push(TraceEvent::Splice {
                        depth,
                        chain: rank,
                        from_edge: i,
                        to_edge: j,
                    });
                    let mut next = Vec::with_capacity(i + sub_geo.len() + cur.len() - j);
                    next.extend_from_slice(&cur[..i]);
                    next.extend_from_slice(&sub_geo);
                    next.extend_from_slice(&cur[j..]);
                    if next.len() >= cur.len() {
                        return Err(Error::InvariantViolation(
                            "splice failed to shorten the path".into(),
                        ));
                    }
                    cur = next;
                }
            }
        }
        // Within a single chain (or after all chains are respected) the
        // remaining repetitions collapse by deletion, innermost pair first.
        loop {
            let data = self.path_data_ids(start, &cur)?;
            let n = data.walls.len();
            let mut best: Option<(usize, usize)> = None;
            for i in 0..n {
                for j in (i + 1)..n {
                    if data.walls[i] == data.walls[j] {
                        let better = match best {
                            None => true,
                            Some((bi, bj)) => (j - i, i) < (bj - bi, bi),
                        };
                        if better {
                            best = Some((i, j));
                        }
                    }
                }
            }
            let Some((i, j)) = best else { break };
            trace.push(TraceEvent::DeletePair {
                depth,
                edge_i: i,
                edge_j: j,
            });
            let mut next = Vec::with_capacity(cur.len() - 2);
            next.extend_from_slice(&cur[..i]);
            next.extend_from_slice(&cur[i + 1..j]);
            next.extend_from_slice(&cur[j + 1..]);
            cur = next;
        }
        if cur.len() != eng.dist(start, end)? {
            return Err(Error::InvariantViolation(
                "straightening did not reach a geodesic".into(),
            ));
        }
        Ok(cur)
    }

    /// Nearest-vertex correspondence a(n) for a K-tracked pair, with the
    /// double-tracking conclusion verified against the supplied parameters
    /// of the tracking path.
    pub fn tracking_correspondence(
        &self,
        p1: &EdgePath,
        p2: &EdgePath,
        k: usize,
        params2: &QuasiGeodesicParams,
    ) -> Result<CorrespondenceReport> {
        let eng = self.engine();
        let d1 = self.path_data(p1)?;
        let d2 = self.path_data(p2)?;
        let d_start = eng.dist(d1.vertices[0], d2.vertices[0])?;
        if d_start > k {
            return Err(Error::Infeasible(format!(
                "starts are {d_start} apart, beyond K = {k}"
            )));
        }
        let d_end = eng.dist(
            *d1.vertices.last().unwrap(),
            *d2.vertices.last().unwrap(),
        )?;
        if d_end > k {
            return Err(Error::Infeasible(format!(
                "ends are {d_end} apart, beyond K = {k}"
            )));
        }
        let tracked = self.tracking_distance_ids(&d1.vertices, d2.vertices[0], p2.letters())?;
        if tracked > k {
            return Err(Error::Infeasible(format!(
                "p1 is only {tracked}-tracked by p2, beyond K = {k}"
            )));
        }
        if !self.is_quasi_geodesic(p2, params2)?.is_satisfied() {
            return Err(Error::Infeasible(
                "p2 is not a quasi-geodesic for the supplied parameters".into(),
            ));
        }
        let n1 = d1.vertices.len();
        let n2 = d2.vertices.len();
        let mut a_of = Vec::with_capacity(n1);
        for (i, &u) in d1.vertices.iter().enumerate() {
            if i == 0 {
                a_of.push(0);
                continue;
            }
            if i == n1 - 1 {
                a_of.push(n2 - 1);
                continue;
            }
            let inv_u = eng.inverse(u)?;
            let mut z = eng.mult(inv_u, d2.vertices[0])?;
            let mut best = (eng.len(z), 0usize);
            for (j, &s) in p2.letters().iter().enumerate() {
                z = eng.right_mult(z, s)?;
                let d = eng.len(z);
                if d < best.0 {
                    best = (d, j + 1);
                }
            }
            if best.0 > k {
                return Err(Error::Infeasible(format!(
                    "vertex {i} of p1 is {} from p2, beyond K = {k}",
                    best.0
                )));
            }
            a_of.push(best.1);
        }
        // Reverse direction: p2 must be tracked by p1 within the
        // double-tracking bound for p2's parameters.
        let bound = double_tracking_bound(params2.lambda(), params2.epsilon(), k as u64);
        let bound_checked = bound.ceil().to_integer() as usize;
        let reverse = self.tracking_distance_ids(&d2.vertices, d1.vertices[0], p1.letters())?;
        if reverse > bound_checked {
            return Err(Error::InvariantViolation(format!(
                "reverse tracking {reverse} exceeds the double-tracking bound {bound_checked}"
            )));
        }
        Ok(CorrespondenceReport {
            a_of,
            k,
            bound_checked,
        })
    }

    /// Path spelling out k copies of the canonical word of g from the
    /// identity, ending at g^k.
    pub fn periodic_path(&self, g: &Element, k: usize) -> Result<EdgePath> {
        if g.is_identity() {
            return Err(Error::InvalidParams(
                "periodic paths require a non-identity element".into(),
            ));
        }
        self.id_of(g)?;
        let mut letters = Vec::with_capacity(g.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(g.nf().letters());
        }
        Ok(EdgePath::new(self.identity(), letters))
    }

    /// Whether g has infinite order, decided by matrix powering against the
    /// order cap with an exact confirmation for small candidate orders.
    pub fn has_infinite_order(&self, g: &Element) -> Result<bool> {
        let eng = self.engine();
        let id = self.id_of(g)?;
        if id == IDENTITY {
            return Ok(false);
        }
        let m = eng.matrix_of(id);
        match eng.geom.matrix_order(&m, self.caps().order_cap) {
            None => Ok(true),
            Some(order) => {
                let mut q = id;
                for _ in 1..order {
                    q = eng.mult(q, id)?;
                }
                if eng.len(q) == 0 {
                    Ok(false)
                } else {
                    Err(Error::SolverPrecision(format!(
                        "matrix power claims order {order} but the exact power is non-trivial"
                    )))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::QuasiGeodesicCheck;
    use crate::testutil::*;

    fn path(sys: &CoxeterSystem, letters: &str) -> EdgePath {
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
    fn project_vertex_examples() {
        let m = m2();
        // Defect-zero input is returned unchanged.
        let r = m
            .project_vertex(&m.identity(), &el(&m, "st"), &el(&m, "s"))
            .unwrap();
        assert_eq!(r.projected, el(&m, "s"));
        assert_eq!(r.steps, 0);
        assert!(r.reflections_used.is_empty());

        let r = m
            .project_vertex(&m.identity(), &el(&m, "t"), &el(&m, "s"))
            .unwrap();
        assert!(r.projected.is_identity());
        assert_eq!(r.steps, 1);
        assert_eq!(r.reflections_used[0].reflection(), &el(&m, "s"));

        let d = dinf();
        let r = d
            .project_vertex(&d.identity(), &el(&d, "ts"), &el(&d, "s"))
            .unwrap();
        assert!(r.projected.is_identity());
        assert_eq!(r.steps, 1);
        assert_eq!(r.reflections_used[0].reflection(), &el(&d, "s"));
    }

    #[test]
    fn projection_decreases_defect_monotonically() {
        let a = a2tilde();
        let ball = a.ball(4).unwrap();
        for (i, v) in ball.iter().enumerate() {
            let b = &ball[(i * 7 + 3) % ball.len()];
            let r = a.project_vertex(&a.identity(), b, v).unwrap();
            assert_eq!(a.defect(&a.identity(), &r.projected, b).unwrap(), 0);
            assert!(r.steps <= a.defect(&a.identity(), v, b).unwrap());
        }
    }

    #[test]
    fn approximation_examples() {
        let m = m2();
        let geo = path(&m, "st");
        let out = m.geodesic_approximation(&geo).unwrap();
        assert_eq!(out.approx, geo);
        assert_eq!(out.l_achieved, 0);

        let out = m.geodesic_approximation(&path(&m, "sts")).unwrap();
        assert!(out.l_achieved <= 1);
        assert_eq!(m.path_end(&out.approx).unwrap(), el(&m, "t"));

        let g = grid();
        let out = g.geodesic_approximation(&path(&g, "aca")).unwrap();
        assert!(out.l_achieved <= 1);
        let end = g.path_end(&out.approx).unwrap();
        assert_eq!(end, el(&g, "c"));
        for v in g.path_vertices(&out.approx).unwrap() {
            assert_eq!(g.defect(&g.identity(), &v, &end).unwrap(), 0);
        }
    }

    #[test]
    fn straighten_examples() {
        let m = m2();
        let geo = path(&m, "st");
        let out = m.straighten(&geo).unwrap();
        assert_eq!(out.geodesic, geo);
        assert_eq!(out.k_achieved, 0);

        let out = m.straighten(&path(&m, "sts")).unwrap();
        assert_eq!(out.geodesic.letters(), w(&m, "t").letters());
        assert_eq!(out.k_achieved, 1);

        let g = grid();
        let out = g.straighten(&path(&g, "aca")).unwrap();
        assert_eq!(out.geodesic.letters(), w(&g, "c").letters());
        assert_eq!(out.k_achieved, 1);
    }

    #[test]
    fn straighten_output_is_always_geodesic() {
        let systems = [dinf(), b2(), m2x3(), a2tilde(), grid()];
        let mut state = 0x853c49e6748fea9bu64;
        for sys in &systems {
            for len in [4usize, 8, 12] {
                for _ in 0..12 {
                    let mut letters = Vec::with_capacity(len);
                    for _ in 0..len {
                        state = state
                            .wrapping_mul(6364136223846793005)
                            .wrapping_add(1442695040888963407);
                        letters.push((state >> 33) as u8 % sys.rank() as u8);
                    }
                    let p = EdgePath::new(sys.identity(), letters);
                    let out = sys.straighten(&p).unwrap();
                    assert!(sys.is_geodesic(&out.geodesic).unwrap());
                    assert_eq!(
                        sys.path_end(&out.geodesic).unwrap(),
                        sys.path_end(&p).unwrap()
                    );
                    assert_eq!(
                        out.k_achieved,
                        sys.tracking_distance(&p, &out.geodesic).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn double_tracking_bound_formula() {
        let one = Rational64::from_integer(1);
        let zero = Rational64::from_integer(0);
        assert_eq!(double_tracking_bound(one, zero, 0), Rational64::from_integer(1));
        assert_eq!(double_tracking_bound(one, zero, 2), Rational64::from_integer(7));
        assert_eq!(
            double_tracking_bound(Rational64::from_integer(2), Rational64::from_integer(3), 1),
            Rational64::from_integer(10)
        );
    }

    #[test]
    fn correspondence_examples() {
        let m = m2();
        let p = path(&m, "t");
        let rep = m.tracking_correspondence(&p, &p, 0, &qg(1, 0)).unwrap();
        assert_eq!(rep.a_of, vec![0, 1]);

        let q = path(&m, "sts");
        let rep = m.tracking_correspondence(&p, &q, 0, &qg(1, 2)).unwrap();
        assert_eq!(rep.a_of, vec![0, 3]);
        assert!(rep.bound_checked >= 1);

        // Starts farther apart than K are infeasible.
        let far = EdgePath::new(el(&m, "st"), vec![0]);
        assert!(matches!(
            m.tracking_correspondence(&p, &far, 0, &qg(1, 0)),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn periodic_path_examples() {
        let d = dinf();
        let g = el(&d, "st");
        let p0 = d.periodic_path(&g, 0).unwrap();
        assert!(p0.is_empty());
        let p3 = d.periodic_path(&g, 3).unwrap();
        assert_eq!(p3.letters(), w(&d, "ststst").letters());
        assert!(d.is_geodesic(&p3).unwrap());
        assert!(matches!(
            d.periodic_path(&d.identity(), 2),
            Err(Error::InvalidParams(_))
        ));

        let gr = grid();
        let g = el(&gr, "abcd");
        let p2 = gr.periodic_path(&g, 2).unwrap();
        assert_eq!(p2.letters().len(), 8);
        assert!(gr.is_quasi_geodesic(&p2, &qg(2, 2)).unwrap().is_satisfied());
    }

    #[test]
    fn infinite_order_detection() {
        let d = dinf();
        assert!(d.has_infinite_order(&el(&d, "st")).unwrap());
        assert!(!d.has_infinite_order(&el(&d, "s")).unwrap());
        assert!(!d.has_infinite_order(&el(&d, "tst")).unwrap());
        let a = a2();
        assert!(!a.has_infinite_order(&el(&a, "st")).unwrap());
        let g = grid();
        assert!(g.has_infinite_order(&el(&g, "ab")).unwrap());
        assert!(!g.has_infinite_order(&el(&g, "ac")).unwrap());
    }

    #[test]
    fn spiral_shape() {
        let letters = spiral_letters(1, SpiralParams::default()).unwrap();
        assert_eq!(letters.len(), 4 * 7); // round(4 * 1.7) = 7
        let sys = grid_system();
        let p = spiral_path(&sys, 1, SpiralParams::default()).unwrap();
        // Each winding closes up.
        assert!(sys.path_end(&p).unwrap().is_identity());
        let two = spiral_path(&sys, 2, SpiralParams::default()).unwrap();
        assert_eq!(two.len(), 4 * (7 + 12));
        assert!(sys.path_end(&two).unwrap().is_identity());
    }

    #[test]
    fn spiral_growth_is_strict() {
        let sys = grid_system();
        let mut brackets = Vec::new();
        let mut ks = Vec::new();
        for windings in 1..=3 {
            let p = spiral_path(&sys, windings, SpiralParams::default()).unwrap();
            brackets.push(sys.bracket_report(&p).unwrap().max);
            ks.push(sys.straighten(&p).unwrap().k_achieved);
        }
        assert!(brackets.windows(2).all(|w| w[0] < w[1]), "{brackets:?}");
        assert!(ks.windows(2).all(|w| w[0] < w[1]), "{ks:?}");
    }

    #[test]
    fn closed_paths_straighten_to_a_point() {
        let d = dinf();
        let p = path(&d, "stts");
        let out = d.straighten(&p).unwrap();
        assert!(out.geodesic.is_empty());
        assert_eq!(out.k_achieved, 2);
    }

    #[test]
    fn quasi_geodesic_check_used_by_correspondence() {
        let d = dinf();
        let p = path(&d, "ststst");
        assert_eq!(
            d.is_quasi_geodesic(&p, &qg(1, 0)).unwrap(),
            QuasiGeodesicCheck::Satisfied
        );
    }
}
