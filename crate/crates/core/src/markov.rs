//! Greedy simplification of braid closures by Markov moves.
//!
//! The working word is treated cyclically. Between candidate rewrites the word
//! is normalized: cyclic free reduction, then destabilization of any generator
//! that occurs exactly once and sits at the edge of its split piece.

use serde::{Deserialize, Serialize};

use crate::braid::{free_reduce_letters, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::handle::{handle_reduce_with_budget, DEFAULT_BUDGET};

/// One step of a Markov-equivalence chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MarkovMove {
    /// `w -> by^{-1} w by`.
    Conjugate { by: Letter },
    /// `w -> w σ_p^{±1}` on one more strand.
    Stabilize { positive: bool },
    /// Remove a generator occurring once at the edge of its piece.
    Destabilize { generator: usize },
    /// Cyclic rotation moving the first `by` letters to the end.
    Shift { by: usize },
    /// Replacement by an equal braid (free or handle reduction).
    Rewrite { from_len: usize, to_len: usize },
}

/// Applies a single move with the strict classical preconditions.
pub fn apply_move(w: &BraidWord, mv: &MarkovMove) -> Result<BraidWord> {
    match mv {
        MarkovMove::Conjugate { by } => {
            let mut letters = vec![by.inverse()];
            letters.extend_from_slice(w.letters());
            letters.push(*by);
            BraidWord::new(w.strands(), letters)
        }
        MarkovMove::Stabilize { positive } => {
            let p = w.strands();
            let mut letters = w.letters().to_vec();
            letters.push(Letter::new(p, *positive));
            BraidWord::new(p + 1, letters)
        }
        MarkovMove::Destabilize { generator } => {
            let p = w.strands();
            let top = p.checked_sub(1).filter(|&g| g >= 1 && g == *generator);
            let last = w.letters().last().copied();
            let once = w.letters().iter().filter(|l| l.generator() == p - 1).count() == 1;
            match (top, last) {
                (Some(g), Some(l)) if l.generator() == g && once => {
                    BraidWord::new(p - 1, w.letters()[..w.len() - 1].to_vec())
                }
                _ => Err(Error::InvalidParameter(format!(
                    "destabilization needs σ_{} occurring once as the last letter",
                    p.saturating_sub(1)
                ))),
            }
        }
        MarkovMove::Shift { by } => Ok(w.rotate(*by)),
        MarkovMove::Rewrite { .. } => Err(Error::InvalidParameter("a rewrite is recorded, not replayed".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkovOptions {
    /// Total handle-reduction steps available across all candidates.
    pub budget: u64,
    /// Maximum conjugator length tried after rotations fail.
    pub conjugator_depth: usize,
}

impl Default for MarkovOptions {
    fn default() -> Self {
        MarkovOptions { budget: DEFAULT_BUDGET, conjugator_depth: 2 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplified {
    pub word: BraidWord,
    pub moves: Vec<MarkovMove>,
    /// Set when the budget ran out; `word` is then the best found so far.
    pub exhausted: bool,
}

impl Simplified {
    /// The closure is a crossingless diagram of `strands` circles.
    pub fn is_trivial(&self) -> bool {
        self.word.is_empty()
    }
}

pub fn markov_simplify(w: &BraidWord) -> Simplified {
    markov_simplify_with(w, MarkovOptions::default())
}

struct Work {
    strands: usize,
    letters: Vec<Letter>,
}

impl Work {
    fn measure(&self) -> (usize, usize) {
        (self.strands, self.letters.len())
    }
}

/// Cyclic free reduction and edge destabilizations until neither applies.
fn normalize(mut work: Work, moves: &mut Vec<MarkovMove>) -> Work {
    loop {
        let before = work.letters.len();
        let mut letters = free_reduce_letters(&work.letters);
        let mut lo = 0;
        let mut hi = letters.len();
        while hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        letters.truncate(hi);
        letters.drain(..lo);
        if letters.len() != before {
            moves.push(MarkovMove::Rewrite { from_len: before, to_len: letters.len() });
        }
        work.letters = letters;

        let p = work.strands;
        let mut counts = vec![0usize; p + 1];
        for l in &work.letters {
            counts[l.generator()] += 1;
        }
        let edge =
            (1..p).find(|&g| counts[g] == 1 && (g == 1 || counts[g - 1] == 0 || g + 1 == p || counts[g + 1] == 0));
        let Some(g) = edge else {
            return work;
        };
        let pos = work.letters.iter().position(|l| l.generator() == g).unwrap();
        if pos + 1 != work.letters.len() {
            moves.push(MarkovMove::Shift { by: pos + 1 });
        }
        moves.push(MarkovMove::Destabilize { generator: g });
        let mut rest: Vec<Letter> = work.letters[pos + 1..].to_vec();
        rest.extend_from_slice(&work.letters[..pos]);
        work.letters = rest
            .into_iter()
            .map(|l| if l.generator() > g { Letter::with_sign(l.generator() - 1, l.sign()) } else { l })
            .collect();
        work.strands -= 1;
    }
}

fn handle_candidate(letters: &[Letter], strands: usize, top: bool, budget: &mut u64) -> Option<Vec<Letter>> {
    let w = BraidWord::new(strands, letters.to_vec()).ok()?;
    let w = if top { w.flip_indices() } else { w };
    match handle_reduce_with_budget(&w, *budget) {
        Ok(r) => {
            *budget -= r.steps;
            let out = if top { r.word.flip_indices() } else { r.word };
            Some(out.into_letters())
        }
        Err(_) => {
            *budget = 0;
            None
        }
    }
}

fn conjugators(strands: usize, depth: usize) -> Vec<Vec<Letter>> {
    let singles: Vec<Letter> = (1..strands).flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
    let mut out: Vec<Vec<Letter>> = singles.iter().map(|&l| vec![l]).collect();
    if depth >= 2 {
        for &a in &singles {
            for &b in &singles {
                if a != b.inverse() {
                    out.push(vec![a, b]);
                }
            }
        }
    }
    out
}

/// Greedy search for a smaller closure-equivalent word. Candidates, in order:
/// handle reduction (bottom and top) of every rotation, then of every
/// conjugate by a word of length at most `conjugator_depth`. The first
/// candidate that strictly lowers `(strands, length)` after normalization is
/// accepted. The returned word is a fixed point of the procedure.
pub fn markov_simplify_with(w: &BraidWord, opts: MarkovOptions) -> Simplified {
    let mut moves = Vec::new();
    let mut work = normalize(Work { strands: w.strands(), letters: w.letters().to_vec() }, &mut moves);
    let mut budget = opts.budget;
    let mut exhausted = false;

    'outer: while !work.letters.is_empty() {
        let current = work.measure();
        let n = work.letters.len();
        for r in 0..n {
            for top in [false, true] {
                let mut rotated = work.letters.clone();
                rotated.rotate_left(r);
                let Some(reduced) = handle_candidate(&rotated, work.strands, top, &mut budget) else {
                    exhausted = true;
                    break 'outer;
                };
                let mut trial_moves = Vec::new();
                if r > 0 {
                    trial_moves.push(MarkovMove::Shift { by: r });
                }
                trial_moves.push(MarkovMove::Rewrite { from_len: n, to_len: reduced.len() });
                let cand = normalize(Work { strands: work.strands, letters: reduced }, &mut trial_moves);
                if cand.measure() < current {
                    moves.extend(trial_moves);
                    work = cand;
                    continue 'outer;
                }
            }
        }
        for conj in conjugators(work.strands, opts.conjugator_depth) {
            let mut letters: Vec<Letter> = conj.iter().rev().map(|l| l.inverse()).collect();
            letters.extend_from_slice(&work.letters);
            letters.extend_from_slice(&conj);
            for top in [false, true] {
                let Some(reduced) = handle_candidate(&letters, work.strands, top, &mut budget) else {
                    exhausted = true;
                    break 'outer;
                };
                let mut trial_moves: Vec<MarkovMove> = conj.iter().map(|&by| MarkovMove::Conjugate { by }).collect();
                trial_moves.push(MarkovMove::Rewrite { from_len: letters.len(), to_len: reduced.len() });
                let cand = normalize(Work { strands: work.strands, letters: reduced }, &mut trial_moves);
                if cand.measure() < current {
                    moves.extend(trial_moves);
                    work = cand;
                    continue 'outer;
                }
            }
        }
        break;
    }

    let word = BraidWord::new(work.strands.max(1), work.letters).expect("generators stay below the strand count");
    Simplified { word, moves, exhausted }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: usize, ints: &[i32]) -> BraidWord {
        BraidWord::from_ints(p, ints).unwrap()
    }

    #[test]
    fn two_destabilizations() {
        let s = markov_simplify(&w(3, &[1, 2]));
        assert!(s.is_trivial());
        assert_eq!(s.word.strands(), 1);
        assert!(!s.exhausted);
    }

    #[test]
    fn negative_destabilization() {
        let s = markov_simplify(&w(2, &[-1]));
        assert!(s.is_trivial());
        assert_eq!(s.word.strands(), 1);
    }

    #[test]
    fn trefoil_is_stuck() {
        let s = markov_simplify(&w(2, &[1, 1, 1]));
        assert_eq!(s.word.to_ints(), vec![1, 1, 1]);
    }

    #[test]
    fn split_strands_survive() {
        let s = markov_simplify(&BraidWord::empty(3));
        assert!(s.is_trivial());
        assert_eq!(s.word.strands(), 3);
        let s = markov_simplify(&w(4, &[1, -1, 3, 3]));
        assert_eq!((s.word.strands(), s.word.to_ints()), (4, vec![3, 3]));
    }

    #[test]
    fn idempotent() {
        let x = w(4, &[1, 2, 2, 3, -2, 1, 1, 3]);
        let once = markov_simplify(&x);
        let twice = markov_simplify(&once.word);
        assert_eq!(once.word, twice.word);
    }

    #[test]
    fn classical_moves() {
        let x = w(3, &[1, -2, 1]);
        let st = apply_move(&x, &MarkovMove::Stabilize { positive: false }).unwrap();
        assert_eq!(st.strands(), 4);
        assert_eq!(apply_move(&st, &MarkovMove::Destabilize { generator: 3 }).unwrap(), x);
        assert!(apply_move(&x, &MarkovMove::Destabilize { generator: 2 }).is_err());
        let c = apply_move(&x, &MarkovMove::Conjugate { by: Letter::pos(2) }).unwrap();
        assert_eq!(c.to_ints(), vec![-2, 1, -2, 1, 2]);
    }
}
