//! Interned element store.
//!
//! Elements are nodes of the ShortLex prefix tree: every prefix of a
//! canonical word is canonical, so an element is keyed by (parent, last
//! letter). Right multiplications by a generator are cached transitions;
//! everything else (products, inverses, conjugates, balls) folds over them.
//!
//! Normal forms of fresh transitions come from the configured solver: the
//! geometric descent (fast path) or Tits rewriting (baseline). Checked mode
//! runs both and treats disagreement as a hard failure.

pub(crate) mod geometric;
pub(crate) mod tits;

use std::sync::Arc;

use dashmap::DashMap;
use parking_lot::RwLock;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::word::Word;
use geometric::Geometry;

pub(crate) type ElemId = u32;
pub(crate) const IDENTITY: ElemId = 0;

/// Cached crossing verdict between two reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum CrossState {
    Cross { order: usize },
    Parallel,
    Undetermined { detail: String },
}

/// Which word-problem backend resolves fresh transitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverKind {
    /// Tits rewriting only. Exact, exponential worst case.
    Tits,
    /// Geometric representation descent over f64.
    #[cfg(feature = "geometric")]
    Geometric,
    /// Run both backends on every fresh transition and require agreement.
    #[cfg(feature = "geometric")]
    Checked,
}

#[allow(clippy::derivable_impls)]
impl Default for SolverKind {
    fn default() -> Self {
        #[cfg(feature = "geometric")]
        {
            SolverKind::Geometric
        }
        #[cfg(not(feature = "geometric"))]
        {
            SolverKind::Tits
        }
    }
}

struct ElemRec {
    parent: ElemId,
    letter: u8,
    len: u32,
    /// Matrix of the inverse element; populated when the geometric solver
    /// drives transitions.
    vmat: Option<Arc<[f64]>>,
}

pub(crate) struct Engine {
    rank: usize,
    matrix: Vec<u32>,
    pub(crate) geom: Geometry,
    pub(crate) solver: SolverKind,
    pub(crate) caps: Caps,
    recs: RwLock<Vec<ElemRec>>,
    children: DashMap<(ElemId, u8), ElemId>,
    right: DashMap<(ElemId, u8), ElemId>,
    inv: DashMap<ElemId, ElemId>,
    mats: DashMap<ElemId, Arc<[f64]>>,
    tits_cache: DashMap<Word, Word>,
    pub(crate) cross_cache: DashMap<(ElemId, ElemId), CrossState>,
    wall_roots: DashMap<ElemId, Arc<[f64]>>,
    edge_walls: DashMap<(ElemId, u8), ElemId>,
}

impl Engine {
    pub fn new(rank: usize, matrix: Vec<u32>, caps: Caps, solver: SolverKind) -> Self {
        let geom = Geometry::new(rank, &matrix);
        let store_vmat = Self::solver_uses_geometry(solver);
        let identity = ElemRec {
            parent: 0,
            letter: u8::MAX,
            len: 0,
            vmat: store_vmat.then(|| Arc::from(geom.identity_mat())),
        };
        Engine {
            rank,
            matrix,
            geom,
            solver,
            caps,
            recs: RwLock::new(vec![identity]),
            children: DashMap::new(),
            right: DashMap::new(),
            inv: DashMap::new(),
            mats: DashMap::new(),
            tits_cache: DashMap::new(),
            cross_cache: DashMap::new(),
            wall_roots: DashMap::new(),
            edge_walls: DashMap::new(),
        }
    }

    fn solver_uses_geometry(solver: SolverKind) -> bool {
        #[cfg(feature = "geometric")]
        {
            matches!(solver, SolverKind::Geometric | SolverKind::Checked)
        }
        #[cfg(not(feature = "geometric"))]
        {
            let _ = solver;
            false
        }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coxeter matrix entry; 0 encodes infinity.
    #[inline]
    pub fn order_raw(&self, i: u8, j: u8) -> u32 {
        self.matrix[i as usize * self.rank + j as usize]
    }

    pub fn len(&self, id: ElemId) -> usize {
        self.recs.read()[id as usize].len as usize
    }

    pub fn letters_of(&self, id: ElemId) -> Vec<u8> {
        let recs = self.recs.read();
        let mut out = Vec::with_capacity(recs[id as usize].len as usize);
        let mut cur = id;
        while cur != IDENTITY {
            let rec = &recs[cur as usize];
            out.push(rec.letter);
            cur = rec.parent;
        }
        out.reverse();
        out
    }

    pub fn nf_word(&self, id: ElemId) -> Word {
        Word::new(self.letters_of(id))
    }

    fn vmat_of(&self, id: ElemId) -> Option<Arc<[f64]>> {
        self.recs.read()[id as usize].vmat.clone()
    }

    /// Child of `p` along the canonical prefix tree; creates it if missing.
    fn canonical_child(&self, p: ElemId, s: u8) -> ElemId {
        if let Some(c) = self.children.get(&(p, s)) {
            return *c;
        }
        let id = *self.children.entry((p, s)).or_insert_with(|| {
            let (plen, pv) = {
                let recs = self.recs.read();
                let rec = &recs[p as usize];
                (rec.len, rec.vmat.clone())
            };
            let vmat = pv.map(|pv| {
                let mut m = pv.to_vec();
                self.geom.refl_mul_left(s as usize, &mut m);
                Arc::from(m)
            });
            let mut recs = self.recs.write();
            let id = recs.len() as ElemId;
            recs.push(ElemRec {
                parent: p,
                letter: s,
                len: plen + 1,
                vmat,
            });
            id
        });
        // A canonical child is a length-increasing right multiplication, and
        // multiplying again by the same involution walks back.
        self.right.insert((p, s), id);
        self.right.insert((id, s), p);
        id
    }

    /// Intern a word known to be canonical (solver output only).
    fn intern_canonical(&self, letters: &[u8]) -> ElemId {
        let mut cur = IDENTITY;
        for &s in letters {
            cur = self.canonical_child(cur, s);
        }
        cur
    }

    fn check_letter(&self, s: u8) -> Result<()> {
        if (s as usize) < self.rank {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange {
                letter: s,
                rank: self.rank,
            })
        }
    }

    fn tits_nf(&self, word: &Word) -> Result<Word> {
        if let Some(hit) = self.tits_cache.get(word) {
            return Ok(hit.clone());
        }
        let nf = tits::normal_form(
            |x, y| self.order_raw(x, y),
            word,
            self.caps.closure_cap,
        )?;
        self.tits_cache.insert(word.clone(), nf.clone());
        Ok(nf)
    }

    fn nf_of_extended(&self, id: ElemId, s: u8) -> Result<Vec<u8>> {
        #[cfg(feature = "geometric")]
        let geometric_nf = |max_len: usize| -> Result<Vec<u8>> {
            let v = self
                .vmat_of(id)
                .ok_or_else(|| Error::SolverPrecision("missing inverse matrix".into()))?;
            // V(w s) = M_s V(w)
            let mut v = v.to_vec();
            self.geom.refl_mul_left(s as usize, &mut v);
            self.geom.descent_nf(v, max_len, self.caps.root_tol)
        };
        let tits_nf = || -> Result<Vec<u8>> {
            let mut letters = self.letters_of(id);
            letters.push(s);
            Ok(self.tits_nf(&Word::new(letters))?.letters().to_vec())
        };
        let max_len = self.len(id) + 2;
        match self.solver {
            SolverKind::Tits => tits_nf(),
            #[cfg(feature = "geometric")]
            SolverKind::Geometric => geometric_nf(max_len),
            #[cfg(feature = "geometric")]
            SolverKind::Checked => {
                let fast = geometric_nf(max_len)?;
                let base = tits_nf()?;
                if fast != base {
                    return Err(Error::SolverDisagreement(format!(
                        "geometric {fast:?} vs tits {base:?} extending element {id} by letter {s}"
                    )));
                }
                Ok(fast)
            }
        }
    }

    pub fn right_mult(&self, id: ElemId, s: u8) -> Result<ElemId> {
        self.check_letter(s)?;
        if let Some(r) = self.right.get(&(id, s)) {
            return Ok(*r);
        }
        let nf = self.nf_of_extended(id, s)?;
        let res = self.intern_canonical(&nf);
        self.right.insert((id, s), res);
        self.right.insert((res, s), id);
        Ok(res)
    }

    /// Fold a word onto an element by right multiplication.
    pub fn mult_word(&self, id: ElemId, letters: &[u8]) -> Result<ElemId> {
        let mut cur = id;
        for &s in letters {
            cur = self.right_mult(cur, s)?;
        }
        Ok(cur)
    }

    pub fn mult(&self, a: ElemId, b: ElemId) -> Result<ElemId> {
        if b == IDENTITY {
            return Ok(a);
        }
        if a == IDENTITY {
            return Ok(b);
        }
        let letters = self.letters_of(b);
        self.mult_word(a, &letters)
    }

    pub fn inverse(&self, id: ElemId) -> Result<ElemId> {
        if id == IDENTITY {
            return Ok(IDENTITY);
        }
        if let Some(r) = self.inv.get(&id) {
            return Ok(*r);
        }
        let mut letters = self.letters_of(id);
        letters.reverse();
        let res = self.mult_word(IDENTITY, &letters)?;
        self.inv.insert(id, res);
        self.inv.insert(res, id);
        Ok(res)
    }

    pub fn gen_id(&self, s: u8) -> Result<ElemId> {
        self.check_letter(s)?;
        Ok(self.canonical_child(IDENTITY, s))
    }

    /// Ancestor along the prefix tree with the given canonical length.
    pub fn ancestor_at_len(&self, id: ElemId, len: usize) -> ElemId {
        let recs = self.recs.read();
        let mut cur = id;
        while recs[cur as usize].len as usize > len {
            cur = recs[cur as usize].parent;
        }
        cur
    }

    pub fn dist(&self, a: ElemId, b: ElemId) -> Result<usize> {
        if a == b {
            return Ok(0);
        }
        let inv_a = self.inverse(a)?;
        Ok(self.len(self.mult(inv_a, b)?))
    }

    /// Intern an externally supplied word; the result is the element it
    /// represents regardless of whether the word was canonical.
    pub fn intern_word(&self, letters: &[u8]) -> Result<ElemId> {
        for &s in letters {
            self.check_letter(s)?;
        }
        self.mult_word(IDENTITY, letters)
    }

    /// Matrix of the element itself (not its inverse).
    pub fn matrix_of(&self, id: ElemId) -> Arc<[f64]> {
        if let Some(m) = self.mats.get(&id) {
            return m.clone();
        }
        let letters = self.letters_of(id);
        let mut m = self.geom.identity_mat();
        for &s in &letters {
            self.geom.refl_mul_right(s as usize, &mut m);
        }
        let m: Arc<[f64]> = Arc::from(m);
        self.mats.insert(id, m.clone());
        m
    }

    /// Reflection element u t u^{-1} of the edge (u, ut).
    pub fn conjugate_gen(&self, u: ElemId, t: u8) -> Result<ElemId> {
        self.check_letter(t)?;
        if let Some(r) = self.edge_walls.get(&(u, t)) {
            return Ok(*r);
        }
        let exact = || -> Result<ElemId> {
            let ut = self.right_mult(u, t)?;
            let uinv = self.inverse(u)?;
            self.mult(ut, uinv)
        };
        #[cfg(feature = "geometric")]
        let fast = || -> Result<ElemId> {
            let vu = self
                .vmat_of(u)
                .ok_or_else(|| Error::SolverPrecision("missing inverse matrix".into()))?;
            // M(r) = M(u) M_t M(u)^{-1}; it equals V(r) since r is an involution.
            let mut a = self.matrix_of(u).to_vec();
            self.geom.refl_mul_right(t as usize, &mut a);
            let m_r = self.geom.matmul(&a, &vu);
            let max_len = 2 * self.len(u) + 3;
            let nf = self.geom.descent_nf(m_r, max_len, self.caps.root_tol)?;
            Ok(self.intern_canonical(&nf))
        };
        let r = match self.solver {
            SolverKind::Tits => exact()?,
            #[cfg(feature = "geometric")]
            SolverKind::Geometric => fast()?,
            #[cfg(feature = "geometric")]
            SolverKind::Checked => {
                let f = fast()?;
                let e = exact()?;
                if f != e {
                    return Err(Error::SolverDisagreement(format!(
                        "conjugate of generator {t} by element {u}: geometric {f} vs exact {e}"
                    )));
                }
                f
            }
        };
        self.edge_walls.insert((u, t), r);
        // The partner vertex of the same edge sees the same wall.
        if let Some(ut) = self.right.get(&(u, t)).map(|v| *v) {
            self.edge_walls.insert((ut, t), r);
        }
        Ok(r)
    }

    /// Unit positive root of a reflection element.
    pub fn root_of_reflection(&self, r: ElemId) -> Result<Arc<[f64]>> {
        if let Some(rho) = self.wall_roots.get(&r) {
            return Ok(rho.clone());
        }
        let m = self.matrix_of(r);
        let rho: Arc<[f64]> = Arc::from(self.geom.extract_root(&m, self.caps.root_tol)?);
        self.wall_roots.insert(r, rho.clone());
        Ok(rho)
    }
}
