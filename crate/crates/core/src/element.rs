use std::fmt;

use crate::word::Word;

/// A group element, identified by its canonical ShortLex-reduced word.
///
/// Elements are only constructed by system operations, so the inner word is
/// always reduced and ShortLex-minimal for the generator order of the system
/// it was built under.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    nf: Word,
}

impl Element {
    pub(crate) fn from_nf(nf: Word) -> Self {
        Element { nf }
    }

    /// The canonical ShortLex-reduced word for this element.
    pub fn nf(&self) -> &Word {
        &self.nf
    }

    /// Word length of the element.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.nf.len()
    }

    pub fn is_identity(&self) -> bool {
        self.nf.is_empty()
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{:?}", self.nf)
    }
}
