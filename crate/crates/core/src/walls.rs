//! Walls of the Cayley graph: reflections, sides, separation, the
//! parallel/crossing dichotomy, the chain partial order on separating walls,
//! Dilworth partitioning, and empirical estimation of the Parallel Wall
//! constant.

use std::collections::BTreeMap;
use std::fmt;

use crate::element::Element;
use crate::engine::{CrossState, ElemId};
use crate::error::{Error, Result};
use crate::system::CoxeterSystem;

/// A wall of the Cayley graph, identified by the reflection fixing its edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wall {
    reflection: Element,
}

impl Wall {
    pub(crate) fn from_reflection(reflection: Element) -> Self {
        Wall { reflection }
    }

    /// Canonical form of the reflection r = w s w^{-1}.
    pub fn reflection(&self) -> &Element {
        &self.reflection
    }
}

impl fmt::Debug for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Wall{:?}", self.reflection.nf())
    }
}

/// Position of a vertex relative to a wall, calibrated so the identity's
/// component is `IdentitySide` for every wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    IdentitySide,
    FarSide,
}

/// Outcome of the dual-route crossing test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossVerdict {
    /// The product of the reflections has finite order.
    Cross { order: usize },
    /// No finite order within the cap, confirmed by the root test.
    Parallel,
    /// The two tests disagreed, or the cap was hit without the root test
    /// confirming parallelism.
    Undetermined { detail: String },
}

impl CrossVerdict {
    pub fn is_cross(&self) -> bool {
        matches!(self, CrossVerdict::Cross { .. })
    }

    pub fn is_parallel(&self) -> bool {
        matches!(self, CrossVerdict::Parallel)
    }
}

/// Dilworth-optimal partition of the walls separating a base pair into
/// chains of pairwise parallel walls.
#[derive(Debug, Clone)]
pub struct ChainPartition {
    pub basepair: (Element, Element),
    pub chains: Vec<Vec<Wall>>,
}

impl ChainPartition {
    pub fn wall_count(&self) -> usize {
        self.chains.iter().map(Vec::len).sum()
    }
}

/// Empirical lower bound for the Parallel Wall constant P(n), from an
/// exhaustive search of a ball.
#[derive(Debug, Clone)]
pub struct ParallelWallEstimate {
    pub n: usize,
    pub radius: usize,
    pub estimate: usize,
    /// Extremal (vertex, wall, distance) pairs realizing the estimate.
    pub witnesses: Vec<(Element, Wall, usize)>,
}

impl CoxeterSystem {
    /// Wall of the edge (u, ut): the reflection u t u^{-1}.
    pub fn edge_wall(&self, u: &Element, t: u8) -> Result<Wall> {
        let uid = self.id_of(u)?;
        let r = self.engine().conjugate_gen(uid, t)?;
        Ok(Wall::from_reflection(self.element_of(r)))
    }

    /// Validate an element as a wall reflection.
    pub fn wall_from_reflection(&self, e: &Element) -> Result<Wall> {
        let id = self.id_of(e)?;
        if e.len().is_multiple_of(2) {
            return Err(Error::InvalidSystem("a reflection has odd length".into()));
        }
        let sq = self.engine().mult(id, id)?;
        if self.engine().len(sq) != 0 {
            return Err(Error::InvalidSystem("element is not an involution".into()));
        }
        // Reduced words of reflections are palindromic conjugations: the
        // half-length prefix conjugates a generator onto the reflection.
        let half = e.len() / 2;
        let u = self.engine().ancestor_at_len(id, half);
        let uinv = self.engine().inverse(u)?;
        let mid = self.engine().mult(self.engine().mult(uinv, id)?, u)?;
        if self.engine().len(mid) != 1 {
            return Err(Error::InvalidSystem(
                "element is not a conjugate of a generator".into(),
            ));
        }
        Ok(Wall::from_reflection(self.element_of(id)))
    }

    /// Side of v relative to q: `IdentitySide` iff left-multiplying by the
    /// reflection increases length.
    pub fn side_of(&self, q: &Wall, v: &Element) -> Result<Side> {
        let r = self.id_of(q.reflection())?;
        let vid = self.id_of(v)?;
        self.side_of_ids(r, vid)
    }

    pub(crate) fn side_of_ids(&self, r: ElemId, v: ElemId) -> Result<Side> {
        let eng = self.engine();
        let rv = eng.mult(r, v)?;
        let lv = eng.len(v);
        let lrv = eng.len(rv);
        if lrv > lv {
            Ok(Side::IdentitySide)
        } else if lrv < lv {
            Ok(Side::FarSide)
        } else {
            Err(Error::InvariantViolation(
                "reflection preserved vertex length".into(),
            ))
        }
    }

    /// Whether q separates a from b: equivalently, any edge path from a to b
    /// crosses q an odd number of times.
    pub fn separates(&self, q: &Wall, a: &Element, b: &Element) -> Result<bool> {
        Ok(self.side_of(q, a)? != self.side_of(q, b)?)
    }

    /// Walls of the edges of the ShortLex geodesic from a to b, in crossing
    /// order. As a set this is independent of the geodesic chosen.
    pub fn walls_separating(&self, a: &Element, b: &Element) -> Result<Vec<Wall>> {
        let ids = self.walls_separating_ids(self.id_of(a)?, self.id_of(b)?)?;
        Ok(ids
            .into_iter()
            .map(|(r, _)| Wall::from_reflection(self.element_of(r)))
            .collect())
    }

    /// Separating walls with the start vertex of the geodesic edge realizing
    /// each crossing.
    pub(crate) fn walls_separating_ids(
        &self,
        a: ElemId,
        b: ElemId,
    ) -> Result<Vec<(ElemId, ElemId)>> {
        let eng = self.engine();
        let inv_a = eng.inverse(a)?;
        let g = eng.mult(inv_a, b)?;
        let letters = eng.letters_of(g);
        let mut out = Vec::with_capacity(letters.len());
        let mut u = a;
        for &s in &letters {
            let r = eng.conjugate_gen(u, s)?;
            out.push((r, u));
            u = eng.right_mult(u, s)?;
        }
        Ok(out)
    }

    /// Dual-route parallel/crossing verdict: power test against the order
    /// cap paired with the root bilinear-form test, agreement required.
    pub fn crosses(&self, q1: &Wall, q2: &Wall) -> Result<CrossVerdict> {
        let r1 = self.id_of(q1.reflection())?;
        let r2 = self.id_of(q2.reflection())?;
        if r1 == r2 {
            return Err(Error::IdenticalWalls);
        }
        Ok(match self.cross_ids(r1, r2)? {
            CrossState::Cross { order } => CrossVerdict::Cross { order },
            CrossState::Parallel => CrossVerdict::Parallel,
            CrossState::Undetermined { detail } => CrossVerdict::Undetermined { detail },
        })
    }

    pub(crate) fn cross_ids(&self, r1: ElemId, r2: ElemId) -> Result<CrossState> {
        let eng = self.engine();
        debug_assert_ne!(r1, r2);
        let key = (r1.min(r2), r1.max(r2));
        if let Some(hit) = eng.cross_cache.get(&key) {
            return Ok(hit.clone());
        }
        let state = self.cross_ids_fresh(key.0, key.1)?;
        eng.cross_cache.insert(key, state.clone());
        Ok(state)
    }

    fn cross_ids_fresh(&self, r1: ElemId, r2: ElemId) -> Result<CrossState> {
        let eng = self.engine();
        let caps = self.caps();
        let rho1 = eng.root_of_reflection(r1)?;
        let rho2 = eng.root_of_reflection(r2)?;
        let c = eng.geom.bilinear(&rho1, &rho2);
        let inf_norm = |v: &[f64]| v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        let scale = (inf_norm(&rho1) * inf_norm(&rho2) * eng.rank() as f64).max(1.0);
        let eps_c = (1e-12 * scale).max(caps.root_tol);
        let root_says_cross = c.abs() < 1.0 - eps_c;

        let m1 = eng.matrix_of(r1);
        let m2 = eng.matrix_of(r2);
        let w = eng.geom.matmul(&m1, &m2);
        let power_order = eng.geom.matrix_order(&w, caps.order_cap);

        let l1 = eng.len(r1);
        let l2 = eng.len(r2);
        let state = match (root_says_cross, power_order) {
            (true, Some(order)) => {
                if l1 + l2 <= caps.exact_cross_len {
                    let p = eng.mult(r1, r2)?;
                    let mut q = p;
                    for _ in 1..order {
                        q = eng.mult(q, p)?;
                    }
                    if eng.len(q) != 0 {
                        return Ok(CrossState::Undetermined {
                            detail: format!(
                                "matrix power claims order {order} but exact power is non-trivial"
                            ),
                        });
                    }
                }
                CrossState::Cross { order }
            }
            (false, None) => {
                if l1 + l2 <= caps.exact_parallel_len {
                    let p = eng.mult(r1, r2)?;
                    let lp = eng.len(p).max(1);
                    let mut q = p;
                    for k in 1..=caps.order_cap {
                        if eng.len(q) == 0 {
                            return Ok(CrossState::Undetermined {
                                detail: format!(
                                    "exact power hit the identity at {k} but both float tests said parallel"
                                ),
                            });
                        }
                        // Each further multiplication changes length by at
                        // most l(p); once the identity is unreachable within
                        // the cap the remaining exponents cannot matter.
                        if eng.len(q) > (caps.order_cap - k) * lp {
                            break;
                        }
                        if k < caps.order_cap {
                            q = eng.mult(q, p)?;
                        }
                    }
                }
                CrossState::Parallel
            }
            (true, None) => CrossState::Undetermined {
                detail: format!(
                    "root test predicts finite order (B = {c:.6}) but no power <= {} reached the identity",
                    caps.order_cap
                ),
            },
            (false, Some(order)) => CrossState::Undetermined {
                detail: format!(
                    "matrix power {order} reached the identity but the root test says no finite order (|B| = {:.6})",
                    c.abs()
                ),
            },
        };
        Ok(state)
    }

    /// Vertices of the ball incident to an edge of the wall.
    pub fn wall_support_in_ball(&self, q: &Wall, radius: usize) -> Result<Vec<Element>> {
        let r = self.id_of(q.reflection())?;
        let ball = self.ball_ids(radius)?;
        let mut out = Vec::new();
        for u in ball {
            if self.is_support_vertex(r, u)? {
                out.push(self.element_of(u));
            }
        }
        Ok(out)
    }

    pub(crate) fn is_support_vertex(&self, r: ElemId, u: ElemId) -> Result<bool> {
        let eng = self.engine();
        let uinv = eng.inverse(u)?;
        let conj = eng.mult(eng.mult(uinv, r)?, u)?;
        Ok(eng.len(conj) == 1)
    }

    /// Minimum distance from v to the wall's support inside the ball;
    /// `None` when the support does not meet the ball.
    pub fn wall_distance(&self, v: &Element, q: &Wall, radius: usize) -> Result<Option<usize>> {
        let vid = self.id_of(v)?;
        let r = self.id_of(q.reflection())?;
        let ball = self.ball_ids(radius)?;
        let mut best: Option<usize> = None;
        for u in ball {
            if self.is_support_vertex(r, u)? {
                let d = self.engine().dist(vid, u)?;
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        Ok(best)
    }

    /// Half-length prefix of the reflection's normal form: a support vertex
    /// of the wall nearest the identity.
    pub(crate) fn wall_rep_id(&self, r: ElemId) -> ElemId {
        let len = self.engine().len(r);
        self.engine().ancestor_at_len(r, len / 2)
    }

    /// Chain order on walls: p <= q iff p = q, or p and q are parallel and p
    /// separates x from q's support.
    pub fn chain_leq(&self, p: &Wall, q: &Wall, x: &Element) -> Result<bool> {
        let rp = self.id_of(p.reflection())?;
        let rq = self.id_of(q.reflection())?;
        let xid = self.id_of(x)?;
        if rp == rq {
            return Ok(true);
        }
        match self.cross_ids(rp, rq)? {
            CrossState::Cross { .. } => Ok(false),
            CrossState::Undetermined { detail } => Err(Error::UndeterminedCrossing {
                wall_a: format!("{:?}", p.reflection().nf()),
                wall_b: format!("{:?}", q.reflection().nf()),
                detail,
            }),
            CrossState::Parallel => {
                let rep_q = self.wall_rep_id(rq);
                Ok(self.side_of_ids(rp, xid)? != self.side_of_ids(rp, rep_q)?)
            }
        }
    }

    /// Dilworth-optimal chain partition of the walls separating a and b:
    /// the number of chains equals the width of the separation poset.
    pub fn dilworth_partition(&self, a: &Element, b: &Element) -> Result<ChainPartition> {
        let a_id = self.id_of(a)?;
        let b_id = self.id_of(b)?;
        let chains_idx = self.dilworth_ids(a_id, b_id)?;
        let walls = self.walls_separating_ids(a_id, b_id)?;
        let mut chains: Vec<Vec<Wall>> = chains_idx
            .into_iter()
            .map(|chain| {
                chain
                    .into_iter()
                    .map(|i| Wall::from_reflection(self.element_of(walls[i].0)))
                    .collect()
            })
            .collect();
        chains.sort_by(|x: &Vec<Wall>, y: &Vec<Wall>| {
            x[0].reflection().nf().cmp(y[0].reflection().nf())
        });
        Ok(ChainPartition {
            basepair: (a.clone(), b.clone()),
            chains,
        })
    }

    /// Chains as indices into the crossing-order wall list.
    pub(crate) fn dilworth_ids(&self, a: ElemId, b: ElemId) -> Result<Vec<Vec<usize>>> {
        let walls = self.walls_separating_ids(a, b)?;
        let k = walls.len();
        // Along a geodesic, a wall separates the start from every later
        // wall's support, so for parallel pairs the crossing order is the
        // chain order.
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
        for i in 0..k {
            for j in (i + 1)..k {
                if walls[i].0 == walls[j].0 {
                    return Err(Error::InvariantViolation(
                        "geodesic crossed a wall twice".into(),
                    ));
                }
                match self.cross_ids(walls[i].0, walls[j].0)? {
                    CrossState::Parallel => adj[i].push(j),
                    CrossState::Cross { .. } => {}
                    CrossState::Undetermined { detail } => {
                        return Err(Error::UndeterminedCrossing {
                            wall_a: format!("{:?}", self.engine().nf_word(walls[i].0)),
                            wall_b: format!("{:?}", self.engine().nf_word(walls[j].0)),
                            detail,
                        })
                    }
                }
            }
        }
        let succ = maximum_matching(k, &adj);
        let mut has_pred = vec![false; k];
        for s in succ.iter().flatten() {
            has_pred[*s] = true;
        }
        let mut chains = Vec::new();
        for (start, _) in has_pred.iter().enumerate().filter(|(_, p)| !**p) {
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = succ[cur] {
                chain.push(next);
                cur = next;
            }
            chains.push(chain);
        }
        Ok(chains)
    }

    /// Size of the largest set of pairwise-crossing walls.
    pub fn max_antichain(&self, walls: &[Wall]) -> Result<usize> {
        let mut ids = Vec::new();
        for w in walls {
            let id = self.id_of(w.reflection())?;
            if !ids.contains(&id) {
                ids.push(id);
            }
        }
        self.max_antichain_ids(&ids)
    }

    pub(crate) fn max_antichain_ids(&self, ids: &[ElemId]) -> Result<usize> {
        let k = ids.len();
        if k <= 1 {
            return Ok(k);
        }
        let mut parallel = vec![false; k * k];
        for i in 0..k {
            for j in (i + 1)..k {
                let par = match self.cross_ids(ids[i], ids[j])? {
                    CrossState::Parallel => true,
                    CrossState::Cross { .. } => false,
                    CrossState::Undetermined { detail } => {
                        return Err(Error::UndeterminedCrossing {
                            wall_a: format!("{:?}", self.engine().nf_word(ids[i])),
                            wall_b: format!("{:?}", self.engine().nf_word(ids[j])),
                            detail,
                        })
                    }
                };
                parallel[i * k + j] = par;
                parallel[j * k + i] = par;
            }
        }
        if let Some(width) = self.antichain_by_matching(ids, &parallel)? {
            return Ok(width);
        }
        max_clique_crossing(k, &parallel)
    }

    /// Width via minimum chain cover when the parallel pairs orient into a
    /// genuine partial order; falls back to `None` otherwise.
    fn antichain_by_matching(&self, ids: &[ElemId], parallel: &[bool]) -> Result<Option<usize>> {
        let k = ids.len();
        let reps: Vec<ElemId> = ids.iter().map(|&r| self.wall_rep_id(r)).collect();
        let mut less = vec![false; k * k];
        for i in 0..k {
            for j in 0..k {
                if i == j || !parallel[i * k + j] {
                    continue;
                }
                let i_separates = self.side_of_ids(ids[i], reps[j])? == Side::FarSide;
                let j_sees_identity = self.side_of_ids(ids[j], reps[i])? == Side::IdentitySide;
                less[i * k + j] = i_separates && j_sees_identity;
            }
        }
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                if parallel[i * k + j] && !(less[i * k + j] ^ less[j * k + i]) {
                    return Ok(None);
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                if !less[i * k + j] {
                    continue;
                }
                for l in 0..k {
                    if less[j * k + l] && !less[i * k + l] {
                        return Ok(None);
                    }
                }
            }
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
        for i in 0..k {
            for j in 0..k {
                if less[i * k + j] {
                    adj[i].push(j);
                }
            }
        }
        let succ = maximum_matching(k, &adj);
        let matched = succ.iter().filter(|s| s.is_some()).count();
        Ok(Some(k - matched))
    }

    /// Empirical lower bound for P(n) by exhaustive ball search: one plus the
    /// largest vertex-to-support distance realized by a pair that fewer than
    /// n pairwise-parallel walls separate within the ball.
    pub fn estimate_parallel_wall_constant(
        &self,
        n: usize,
        radius: usize,
    ) -> Result<ParallelWallEstimate> {
        if n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        if radius == 0 {
            return Err(Error::InvalidParams("radius must be at least 1".into()));
        }
        let eng = self.engine();
        let ball = self.ball_ids(radius)?;
        let pos_of: BTreeMap<ElemId, usize> =
            ball.iter().enumerate().map(|(p, &id)| (id, p)).collect();

        // Walls with an edge incident to the ball, and their in-ball support.
        let mut supports: BTreeMap<ElemId, Vec<usize>> = BTreeMap::new();
        for (p, &u) in ball.iter().enumerate() {
            for s in 0..self.rank() as u8 {
                let r = eng.conjugate_gen(u, s)?;
                let entry = supports.entry(r).or_default();
                if !entry.contains(&p) {
                    entry.push(p);
                }
                let ut = eng.right_mult(u, s)?;
                if let Some(&pp) = pos_of.get(&ut) {
                    let entry = supports.get_mut(&r).unwrap();
                    if !entry.contains(&pp) {
                        entry.push(pp);
                    }
                }
            }
        }
        let wall_ids: Vec<ElemId> = supports.keys().copied().collect();

        // Side of every ball vertex relative to every wall.
        let mut side_far: Vec<Vec<bool>> = Vec::with_capacity(wall_ids.len());
        for &r in &wall_ids {
            let mut row = Vec::with_capacity(ball.len());
            for &v in &ball {
                row.push(self.side_of_ids(r, v)? == Side::FarSide);
            }
            side_far.push(row);
        }
        let windex: BTreeMap<ElemId, usize> = wall_ids
            .iter()
            .enumerate()
            .map(|(i, &r)| (r, i))
            .collect();

        let mut pair_dist = vec![0usize; ball.len() * ball.len()];
        for (i, &u) in ball.iter().enumerate() {
            for (j, &v) in ball.iter().enumerate() {
                if i < j {
                    let d = eng.dist(u, v)?;
                    pair_dist[i * ball.len() + j] = d;
                    pair_dist[j * ball.len() + i] = d;
                }
            }
        }

        let mut best = 0usize;
        let mut raw_witnesses: Vec<(usize, ElemId, usize)> = Vec::new();
        for (&q, supp) in &supports {
            let qi = windex[&q];
            for vp in 0..ball.len() {
                let d = supp
                    .iter()
                    .map(|&sp| pair_dist[vp * ball.len() + sp])
                    .min()
                    .expect("wall support met inside the ball");
                if d > radius || d + 1 < best {
                    continue;
                }
                // Walls separating v from the in-ball support of q.
                let mut separators: Vec<usize> = Vec::new();
                for (ri, row) in side_far.iter().enumerate() {
                    if ri == qi {
                        continue;
                    }
                    let sv = row[vp];
                    if supp.iter().all(|&sp| row[sp] != sv) {
                        separators.push(ri);
                    }
                }
                let qualifies = if n == 1 {
                    separators.is_empty()
                } else {
                    self.max_parallel_subset(&wall_ids, &separators)? < n
                };
                if !qualifies {
                    continue;
                }
                if d + 1 > best {
                    best = d + 1;
                    raw_witnesses.clear();
                }
                if d + 1 == best {
                    raw_witnesses.push((vp, q, d));
                }
            }
        }
        raw_witnesses.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        let witnesses = raw_witnesses
            .into_iter()
            .map(|(vp, q, d)| {
                (
                    self.element_of(ball[vp]),
                    Wall::from_reflection(self.element_of(q)),
                    d,
                )
            })
            .collect();
        Ok(ParallelWallEstimate {
            n,
            radius,
            estimate: best,
            witnesses,
        })
    }

    fn max_parallel_subset(&self, wall_ids: &[ElemId], chosen: &[usize]) -> Result<usize> {
        let k = chosen.len();
        if k <= 1 {
            return Ok(k);
        }
        if k > 64 {
            return Err(Error::InvalidParams(
                "too many separating walls for exact parallel-subset search".into(),
            ));
        }
        let mut compat = vec![0u64; k];
        for a in 0..k {
            for b in (a + 1)..k {
                let par = matches!(
                    self.cross_ids(wall_ids[chosen[a]], wall_ids[chosen[b]])?,
                    CrossState::Parallel
                );
                if par {
                    compat[a] |= 1 << b;
                    compat[b] |= 1 << a;
                }
            }
        }
        Ok(max_clique_u64(&compat))
    }
}

/// Kuhn's augmenting-path maximum matching on a DAG given as forward
/// adjacency; returns the matched successor of each node.
fn maximum_matching(k: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        match_l: &mut [Option<usize>],
        match_r: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            let free = match match_r[v] {
                None => true,
                Some(w) => augment(w, adj, match_l, match_r, seen),
            };
            if free {
                match_l[u] = Some(v);
                match_r[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut match_l: Vec<Option<usize>> = vec![None; k];
    let mut match_r: Vec<Option<usize>> = vec![None; k];
    for u in 0..k {
        let mut seen = vec![false; k];
        augment(u, adj, &mut match_l, &mut match_r, &mut seen);
    }
    match_l
}

/// Exact maximum clique on up to 64 vertices by branch and bound.
fn max_clique_u64(compat: &[u64]) -> usize {
    fn expand(compat: &[u64], cand: u64, size: usize, best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            expand(compat, rest & compat[v], size + 1, best);
        }
    }
    let mut best = 0;
    let all = if compat.len() == 64 {
        u64::MAX
    } else {
        (1u64 << compat.len()) - 1
    };
    expand(compat, all, 0, &mut best);
    best
}

fn max_clique_crossing(k: usize, parallel: &[bool]) -> Result<usize> {
    if k > 64 {
        return Err(Error::InvalidParams(
            "wall set too large for brute-force antichain search".into(),
        ));
    }
    let mut compat = vec![0u64; k];
    for i in 0..k {
        for j in 0..k {
            if i != j && !parallel[i * k + j] {
                compat[i] |= 1 << j;
            }
        }
    }
    Ok(max_clique_u64(&compat))
}
