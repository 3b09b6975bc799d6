//! Braid words on a fixed number of strands.
//!
//! A word is a flat list of signed Artin generators. Normal forms are never
//! stored; reductions produce new words on demand.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A signed Artin generator `σ_i^{±1}`, stored as the nonzero integer `±i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i32", try_from = "i32")]
pub struct Letter(i16);

impl Letter {
    pub fn new(generator: usize, positive: bool) -> Letter {
        assert!(generator >= 1 && generator < i16::MAX as usize, "generator index must be >= 1");
        let g = generator as i16;
        Letter(if positive { g } else { -g })
    }

    pub fn pos(generator: usize) -> Letter {
        Letter::new(generator, true)
    }

    pub fn neg(generator: usize) -> Letter {
        Letter::new(generator, false)
    }

    pub fn with_sign(generator: usize, sign: i32) -> Letter {
        Letter::new(generator, sign > 0)
    }

    #[inline]
    pub fn generator(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// `+1` or `-1`.
    #[inline]
    pub fn sign(self) -> i32 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    #[inline]
    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn to_int(self) -> i32 {
        self.0 as i32
    }

    pub fn from_int(value: i32) -> Option<Letter> {
        if value == 0 || value.unsigned_abs() >= i16::MAX as u32 {
            None
        } else {
            Some(Letter(value as i16))
        }
    }
}

impl From<Letter> for i32 {
    fn from(l: Letter) -> i32 {
        l.to_int()
    }
}

impl TryFrom<i32> for Letter {
    type Error = String;
    fn try_from(value: i32) -> Result<Letter, String> {
        Letter::from_int(value).ok_or_else(|| format!("{value} is not a braid letter"))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A word in the Artin generators of the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        if strands == 0 {
            return Err(Error::InvalidParameter("a braid needs at least one strand".into()));
        }
        if let Some(bad) = letters.iter().find(|l| l.generator() >= strands) {
            return Err(Error::GeneratorOutOfRange { generator: bad.generator(), strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed integers (`-2` is `σ_2^{-1}`).
    pub fn from_ints(strands: usize, ints: &[i32]) -> Result<BraidWord> {
        let letters = ints
            .iter()
            .map(|&v| Letter::from_int(v).ok_or_else(|| Error::Parse(format!("{v} is not a generator"))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn empty(strands: usize) -> BraidWord {
        BraidWord::new(strands, Vec::new()).expect("positive strand count")
    }

    /// Parses the whitespace-separated integer format. When `strands` is
    /// `None` the strand count is `max|index| + 1`.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<BraidWord> {
        let ints = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|e| Error::Parse(format!("`{t}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let inferred = ints.iter().map(|v| v.unsigned_abs() as usize).max().unwrap_or(0) + 1;
        BraidWord::from_ints(strands.unwrap_or(inferred), &ints)
    }

    #[inline]
    pub fn strands(&self) -> usize {
        self.strands
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_ints(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.to_int()).collect()
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign() as i64).sum()
    }

    /// Number of occurrences of each generator, indexed `0..strands` (slot 0 unused).
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands.max(1)];
        for l in &self.letters {
            counts[l.generator()] += 1;
        }
        counts
    }

    /// `perm[start] = end`: the strand entering at position `start` exits at `perm[start]`
    /// (0-based positions).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let i = l.generator() - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Component label (cycle index of the permutation) for every strand position.
    pub fn position_components(&self) -> Vec<usize> {
        let perm = self.permutation();
        let mut label = vec![usize::MAX; self.strands];
        let mut next = 0;
        for start in 0..self.strands {
            if label[start] != usize::MAX {
                continue;
            }
            let mut x = start;
            while label[x] == usize::MAX {
                label[x] = next;
                x = perm[x];
            }
            next += 1;
        }
        label
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        self.position_components().iter().max().map_or(0, |m| m + 1)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Flip every crossing: the mirror image of the closure.
    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| l.inverse()).collect() }
    }

    /// Relabel `σ_i -> σ_{p-i}` (conjugation by the half twist).
    pub fn flip_indices(&self) -> BraidWord {
        let p = self.strands;
        BraidWord {
            strands: p,
            letters: self.letters.iter().map(|l| Letter::with_sign(p - l.generator(), l.sign())).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord::new(strands, letters)
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if letter.generator() >= self.strands {
            return Err(Error::GeneratorOutOfRange { generator: letter.generator(), strands: self.strands });
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn extend(&mut self, other: &BraidWord) -> Result<()> {
        for &l in &other.letters {
            self.push(l)?;
        }
        Ok(())
    }

    pub fn power(&self, k: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Same letters viewed on a different number of strands.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Cyclic rotation moving the first `k` letters to the end (a conjugation).
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Letters whose signs are replaced; generator indices are kept.
    pub fn with_signs(&self, signs: &[i32]) -> BraidWord {
        assert_eq!(signs.len(), self.letters.len());
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().zip(signs).map(|(l, &s)| Letter::with_sign(l.generator(), s)).collect(),
        }
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: free_reduce_letters(&self.letters) }
    }

    /// Free reduction followed by cancellation across the ends of the cyclic word.
    pub fn cyclic_reduce(&self) -> BraidWord {
        let mut letters = free_reduce_letters(&self.letters);
        let mut lo = 0;
        let mut hi = letters.len();
        while hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        letters.truncate(hi);
        letters.drain(..lo);
        BraidWord { strands: self.strands, letters }
    }
}

pub(crate) fn free_reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<BraidWord> {
        BraidWord::parse(s, None)
    }
}

/// `(σ_1 σ_2 ⋯ σ_{p-1})^q`, whose closure is the torus link `K(p,q)`.
pub fn toric_braid(p: usize, q: usize) -> Result<BraidWord> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("toric braid needs p >= 2, got {p}")));
    }
    if q < 1 {
        return Err(Error::InvalidParameter(format!("toric braid needs q >= 1, got {q}")));
    }
    let block: Vec<Letter> = (1..p).map(Letter::pos).collect();
    Ok(BraidWord { strands: p, letters: block.repeat(q) })
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
