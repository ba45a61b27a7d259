//! Tits rewriting: the exact, always-available word problem baseline.
//!
//! A word is reduced iff its closure under braid moves contains no word with
//! an adjacent equal pair. Deleting such pairs whenever the closure exposes
//! one terminates in a reduced word, and the braid closure of a reduced word
//! is the full set of reduced words for the element.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::word::Word;

/// All words reachable from `start` by braid moves alone.
pub(crate) fn braid_closure<F>(order: F, start: &Word, cap: usize) -> Result<BTreeSet<Word>>
where
    F: Fn(u8, u8) -> u32,
{
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(w) = queue.pop_front() {
        let ls = w.letters();
        for p in 0..ls.len().saturating_sub(1) {
            let x = ls[p];
            let y = ls[p + 1];
            if x == y {
                continue;
            }
            let m = order(x, y);
            if m == 0 {
                continue;
            }
            let m = m as usize;
            if p + m > ls.len() {
                continue;
            }
            let alternates = (0..m).all(|k| ls[p + k] == if k % 2 == 0 { x } else { y });
            if !alternates {
                continue;
            }
            let mut nw = ls.to_vec();
            for (k, slot) in nw[p..p + m].iter_mut().enumerate() {
                *slot = if k % 2 == 0 { y } else { x };
            }
            let nw = Word::new(nw);
            if seen.contains(&nw) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::ClosureCapExceeded { cap });
            }
            seen.insert(nw.clone());
            queue.push_back(nw);
        }
    }
    Ok(seen)
}

/// ShortLex normal form by braid closure and pair deletion.
pub(crate) fn normal_form<F>(order: F, w: &Word, cap: usize) -> Result<Word>
where
    F: Fn(u8, u8) -> u32 + Copy,
{
    let mut cur = w.clone();
    loop {
        let closure = braid_closure(order, &cur, cap)?;
        let mut shortened = None;
        'scan: for cand in &closure {
            let ls = cand.letters();
            for p in 0..ls.len().saturating_sub(1) {
                if ls[p] == ls[p + 1] {
                    let mut nw = ls.to_vec();
                    nw.drain(p..p + 2);
                    shortened = Some(Word::new(nw));
                    break 'scan;
                }
            }
        }
        match shortened {
            Some(next) => cur = next,
            // Closure of a reduced word is all reduced words; take the least.
            None => return Ok(closure.first().expect("closure contains its seed").clone()),
        }
    }
}
