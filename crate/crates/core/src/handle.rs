//! Dehornoy handle reduction.
//!
//! A `σ_i`-handle is a factor `σ_i^e v σ_i^{-e}` where `v` only uses generators
//! above `i`. Reducing the handle that ends leftmost is always permitted, and
//! any sequence of reductions terminates. The terminal word is empty exactly
//! when the input is the identity braid.

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

/// Default number of handle reductions before giving up.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Result of a completed reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HandleReduction {
    pub word: BraidWord,
    pub steps: u64,
}

impl HandleReduction {
    pub fn is_trivial(&self) -> bool {
        self.word.is_empty()
    }
}

/// Reduces with [`DEFAULT_BUDGET`].
pub fn handle_reduce(w: &BraidWord) -> Result<BraidWord> {
    handle_reduce_with_budget(w, DEFAULT_BUDGET).map(|r| r.word)
}

pub fn is_identity(w: &BraidWord, budget: u64) -> Result<bool> {
    Ok(handle_reduce_with_budget(w, budget)?.is_trivial())
}

pub fn handle_reduce_with_budget(w: &BraidWord, budget: u64) -> Result<HandleReduction> {
    let mut letters: Vec<i16> = w.letters().iter().map(|l| l.to_int() as i16).collect();
    let p = w.strands();
    let mut steps = 0u64;
    let mut last = vec![usize::MAX; p + 1];
    while let Some((i, j)) = leftmost_handle(&letters, &mut last) {
        if steps >= budget {
            return Err(Error::BudgetExceeded(budget));
        }
        steps += 1;
        reduce_at(&mut letters, i, j);
    }
    let letters = letters.into_iter().map(|v| Letter::from_int(v as i32).expect("nonzero")).collect();
    Ok(HandleReduction { word: BraidWord::new(p, letters)?, steps })
}

/// Positions `(i, j)` of the handle whose right end is leftmost.
fn leftmost_handle(letters: &[i16], last: &mut [usize]) -> Option<(usize, usize)> {
    last.iter_mut().for_each(|x| *x = usize::MAX);
    for (j, &l) in letters.iter().enumerate() {
        let g = l.unsigned_abs() as usize;
        let i = last[g];
        if i != usize::MAX && letters[i] == -l {
            let blocked = (1..g).any(|k| last[k] != usize::MAX && last[k] > i);
            if !blocked {
                return Some((i, j));
            }
        }
        last[g] = j;
    }
    None
}

fn reduce_at(letters: &mut Vec<i16>, i: usize, j: usize) {
    let head = letters[i];
    let g = head.unsigned_abs();
    let e: i16 = head.signum();
    let up = (g + 1) as i16;
    let mut middle = Vec::with_capacity((j - i) * 3);
    for &l in &letters[i + 1..j] {
        if l.unsigned_abs() == g + 1 {
            let d = l.signum();
            middle.push(-e * up);
            middle.push(d * g as i16);
            middle.push(e * up);
        } else {
            middle.push(l);
        }
    }
    // Free cancellation inside the rewritten factor does not change the element.
    let middle = cancel(middle);
    letters.splice(i..=j, middle);
}

fn cancel(v: Vec<i16>) -> Vec<i16> {
    let mut out: Vec<i16> = Vec::with_capacity(v.len());
    for l in v {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Handle reduction of the word conjugated by the half twist, mapped back.
/// Useful as an alternative normal form that clears handles from the top
/// generators first.
pub fn handle_reduce_top(w: &BraidWord, budget: u64) -> Result<HandleReduction> {
    let r = handle_reduce_with_budget(&w.flip_indices(), budget)?;
    Ok(HandleReduction { word: r.word.flip_indices(), steps: r.steps })
}
