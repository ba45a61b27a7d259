//! Coxeter systems and the exact-arithmetic substrate: canonical normal
//! forms, products, inverses, lengths, distances, reduced-word enumeration,
//! and ball enumeration.

use std::fmt;
use std::sync::Arc;

use crate::caps::Caps;
use crate::element::Element;
use crate::engine::{Engine, SolverKind, IDENTITY};
use crate::error::{Error, Result};
use crate::word::Word;

struct Inner {
    names: Vec<String>,
    matrix: Vec<u32>,
    caps: Caps,
    engine: Engine,
}

/// A finitely generated Coxeter system: an ordered generating set and the
/// symmetric matrix of pairwise orders, with entry 0 encoding infinity.
///
/// The generator order defines ShortLex. Cloning shares the element caches;
/// all operations are safe to call from multiple threads.
#[derive(Clone)]
pub struct CoxeterSystem {
    inner: Arc<Inner>,
}

impl CoxeterSystem {
    /// Build a system from generator names and the order matrix (0 = infinity).
    pub fn new(names: Vec<String>, matrix: Vec<Vec<u32>>) -> Result<Self> {
        Self::with_config(names, matrix, Caps::default(), SolverKind::default())
    }

    pub fn with_caps(names: Vec<String>, matrix: Vec<Vec<u32>>, caps: Caps) -> Result<Self> {
        Self::with_config(names, matrix, caps, SolverKind::default())
    }

    pub fn with_config(
        names: Vec<String>,
        matrix: Vec<Vec<u32>>,
        caps: Caps,
        solver: SolverKind,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidSystem("no generators".into()));
        }
        if n > u8::MAX as usize {
            return Err(Error::InvalidSystem(format!("rank {n} exceeds 255")));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidSystem(format!("generator {i} has empty name")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidSystem(format!(
                    "duplicate generator name {name:?}"
                )));
            }
        }
        if matrix.len() != n {
            return Err(Error::InvalidSystem(format!(
                "matrix has {} rows, expected {n}",
                matrix.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidSystem(format!(
                    "matrix row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        for i in 0..n {
            if flat[i * n + i] != 1 {
                return Err(Error::InvalidSystem(format!(
                    "matrix diagonal entry ({i},{i}) must be 1"
                )));
            }
            for j in 0..n {
                if flat[i * n + j] != flat[j * n + i] {
                    return Err(Error::InvalidSystem(format!(
                        "matrix not symmetric at ({i},{j})"
                    )));
                }
                if i != j && flat[i * n + j] == 1 {
                    return Err(Error::InvalidSystem(format!(
                        "off-diagonal entry ({i},{j}) must be >= 2 or 0 for infinity"
                    )));
                }
            }
        }
        let engine = Engine::new(n, flat.clone(), caps.clone(), solver);
        Ok(CoxeterSystem {
            inner: Arc::new(Inner {
                names,
                matrix: flat,
                caps,
                engine,
            }),
        })
    }

    pub fn rank(&self) -> usize {
        self.inner.names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.inner.names
    }

    /// Order of s_i s_j; `None` encodes infinity.
    pub fn order(&self, i: u8, j: u8) -> Result<Option<u32>> {
        let n = self.rank();
        if (i as usize) >= n || (j as usize) >= n {
            return Err(Error::LetterOutOfRange {
                letter: i.max(j),
                rank: n,
            });
        }
        let raw = self.inner.matrix[i as usize * n + j as usize];
        Ok(if raw == 0 { None } else { Some(raw) })
    }

    /// The raw matrix with 0 for infinity, row major.
    pub fn matrix_rows(&self) -> Vec<Vec<u32>> {
        let n = self.rank();
        (0..n)
            .map(|i| self.inner.matrix[i * n..(i + 1) * n].to_vec())
            .collect()
    }

    pub fn caps(&self) -> &Caps {
        &self.inner.caps
    }

    pub fn solver(&self) -> SolverKind {
        self.inner.engine.solver
    }

    pub(crate) fn engine(&self) -> &Engine {
        &self.inner.engine
    }

    pub fn identity(&self) -> Element {
        Element::from_nf(Word::empty())
    }

    pub fn generator(&self, s: u8) -> Result<Element> {
        let id = self.engine().gen_id(s)?;
        Ok(self.element_of(id))
    }

    pub(crate) fn element_of(&self, id: u32) -> Element {
        Element::from_nf(self.engine().nf_word(id))
    }

    pub(crate) fn id_of(&self, e: &Element) -> Result<u32> {
        let id = self.engine().intern_word(e.nf().letters())?;
        if self.engine().len(id) != e.len() {
            return Err(Error::InvariantViolation(
                "element word is not canonical for this system".into(),
            ));
        }
        Ok(id)
    }

    /// Canonical reduced word for the element the word represents.
    pub fn reduce(&self, w: &Word) -> Result<Word> {
        Ok(self.normal_form(w)?.nf().clone())
    }

    /// Canonical element of a word.
    pub fn normal_form(&self, w: &Word) -> Result<Element> {
        let id = self.engine().intern_word(w.letters())?;
        Ok(self.element_of(id))
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        let ia = self.id_of(a)?;
        let ib = self.id_of(b)?;
        Ok(self.element_of(self.engine().mult(ia, ib)?))
    }

    pub fn inverse(&self, a: &Element) -> Result<Element> {
        let ia = self.id_of(a)?;
        Ok(self.element_of(self.engine().inverse(ia)?))
    }

    /// Word length of the canonical form.
    pub fn length(&self, a: &Element) -> usize {
        a.len()
    }

    /// Word metric distance d(a, b) = l(a^{-1} b).
    pub fn distance(&self, a: &Element, b: &Element) -> Result<usize> {
        let ia = self.id_of(a)?;
        let ib = self.id_of(b)?;
        let inv_a = self.engine().inverse(ia)?;
        Ok(self.engine().len(self.engine().mult(inv_a, ib)?))
    }

    /// Every reduced word for the element: the braid-move closure of its
    /// canonical form. Fails loudly when the closure cap is exceeded.
    pub fn all_reduced_words(&self, a: &Element) -> Result<Vec<Word>> {
        self.id_of(a)?;
        let closure = crate::engine::tits::braid_closure(
            |x, y| self.engine().order_raw(x, y),
            a.nf(),
            self.caps().closure_cap,
        )?;
        Ok(closure.into_iter().collect())
    }

    /// Exactly the elements of length at most `radius`, ShortLex sorted.
    pub fn ball(&self, radius: usize) -> Result<Vec<Element>> {
        Ok(self
            .ball_ids(radius)?
            .into_iter()
            .map(|id| self.element_of(id))
            .collect())
    }

    pub(crate) fn ball_ids(&self, radius: usize) -> Result<Vec<u32>> {
        let eng = self.engine();
        let cap = self.caps().ball_cap;
        let mut seen: std::collections::HashSet<u32> = std::collections::HashSet::new();
        let mut out: Vec<u32> = vec![IDENTITY];
        seen.insert(IDENTITY);
        let mut frontier: Vec<u32> = vec![IDENTITY];
        for _ in 0..radius {
            let mut next = Vec::new();
            for &id in &frontier {
                for s in 0..self.rank() as u8 {
                    let nb = eng.right_mult(id, s)?;
                    if seen.insert(nb) {
                        if out.len() >= cap {
                            return Err(Error::BallCapExceeded { cap });
                        }
                        out.push(nb);
                        next.push(nb);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        let mut keyed: Vec<(Word, u32)> = out
            .into_iter()
            .map(|id| (eng.nf_word(id), id))
            .collect();
        keyed.sort();
        Ok(keyed.into_iter().map(|(_, id)| id).collect())
    }

    /// Parse a word from generator names. Single-letter names may be
    /// concatenated without separators; otherwise whitespace separates.
    pub fn word_from_names(&self, text: &str) -> Result<Word> {
        let names = self.generator_names();
        let all_single = names.iter().all(|n| n.chars().count() == 1);
        let mut letters = Vec::new();
        if text.trim().is_empty() {
            return Ok(Word::empty());
        }
        if text.contains(char::is_whitespace) || !all_single {
            for tok in text.split_whitespace() {
                let idx = names.iter().position(|n| n == tok).ok_or_else(|| {
                    Error::InvalidSystem(format!("unknown generator name {tok:?}"))
                })?;
                letters.push(idx as u8);
            }
        } else {
            for ch in text.chars() {
                let tok = ch.to_string();
                let idx = names.iter().position(|n| *n == tok).ok_or_else(|| {
                    Error::InvalidSystem(format!("unknown generator name {tok:?}"))
                })?;
                letters.push(idx as u8);
            }
        }
        Ok(Word::new(letters))
    }

    /// Render a word with generator names, concatenated when all names are
    /// single characters and space separated otherwise.
    pub fn word_to_names(&self, w: &Word) -> String {
        let names = self.generator_names();
        let all_single = names.iter().all(|n| n.chars().count() == 1);
        let parts: Vec<&str> = w
            .letters()
            .iter()
            .map(|&l| names[l as usize].as_str())
            .collect();
        if all_single {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        self.inner.names == other.inner.names && self.inner.matrix == other.inner.matrix
    }
}

impl Eq for CoxeterSystem {}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("generators", &self.inner.names)
            .field("matrix", &self.matrix_rows())
            .finish()
    }
}
