//! Brute-force ground truth: word predicates, exhaustive enumeration and
//! canonical rotations.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::BigCount;

/// Largest `k * 3^(n-1)` the enumerators will walk.
pub const ENUMERATION_LIMIT: u128 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("letter {letter} at position {pos} is outside the alphabet 1..={k}")]
    LetterOutOfRange { letter: u32, pos: usize, k: u32 },
    #[error("alphabet size must be positive")]
    EmptyAlphabet,
    #[error("instance n={n}, k={k} exceeds the enumeration limit")]
    TooLarge { n: usize, k: usize },
}

/// A word over the alphabet `[k] = {1, ..., k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
    k: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, k: u32) -> Result<Self, WordError> {
        if k == 0 {
            return Err(WordError::EmptyAlphabet);
        }
        if let Some((pos, &letter)) = letters.iter().enumerate().find(|(_, &l)| l == 0 || l > k) {
            return Err(WordError::LetterOutOfRange { letter, pos, k });
        }
        Ok(Self { letters, k })
    }

    /// Parses a digit string such as `"3121"`; each character is one letter.
    pub fn parse(s: &str, k: u32) -> Result<Self, WordError> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(pos, c)| {
                c.to_digit(10)
                    .ok_or(WordError::LetterOutOfRange { letter: 0, pos, k })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(letters, k)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Left rotation by `r` positions.
    pub fn rotate(&self, r: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let r = r % letters.len();
            letters.rotate_left(r);
        }
        Self { letters, k: self.k }
    }

    pub fn reversed(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().copied().collect(),
            k: self.k,
        }
    }

    /// `σ_t ↦ k + 1 - σ_t`.
    pub fn complemented(&self) -> Self {
        Self {
            letters: self.letters.iter().map(|&l| self.k + 1 - l).collect(),
            k: self.k,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.k > 9 { "," } else { "" };
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn adjacent(a: u32, b: u32) -> bool {
    a.abs_diff(b) <= 1
}

pub fn is_smooth(w: &Word) -> bool {
    w.letters.windows(2).all(|p| adjacent(p[0], p[1]))
}

pub fn is_smooth_cyclic(w: &Word) -> bool {
    is_smooth(w)
        && match (w.letters.first(), w.letters.last()) {
            (Some(&a), Some(&b)) => adjacent(a, b),
            _ => true,
        }
}

/// Start index of the lexicographically least rotation (Booth's algorithm, O(n)).
pub fn least_rotation_index<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    // failure function over the doubled string
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k
}

/// Least rotation by comparing all `n` rotations, O(n²).
pub fn least_rotation_naive(w: &Word) -> Word {
    (0..w.len().max(1))
        .map(|r| w.rotate(r))
        .min_by(|a, b| a.letters.cmp(&b.letters))
        .unwrap_or_else(|| w.clone())
}

/// Lexicographically least rotation; the canonical necklace representative.
pub fn canonical_rotation(w: &Word) -> Word {
    w.rotate(least_rotation_index(&w.letters))
}

fn check_size(n: usize, k: usize) -> Result<(), WordError> {
    if k == 0 {
        return Err(WordError::EmptyAlphabet);
    }
    if n == 0 {
        return Ok(());
    }
    let mut bound = k as u128;
    for _ in 1..n {
        bound = bound.saturating_mul(3);
        if bound > ENUMERATION_LIMIT {
            return Err(WordError::TooLarge { n, k });
        }
    }
    if bound > ENUMERATION_LIMIT {
        return Err(WordError::TooLarge { n, k });
    }
    Ok(())
}

/// Whether the enumerators accept `(n, k)`.
pub fn enumeration_admits(n: usize, k: usize) -> bool {
    k >= 1 && check_size(n, k).is_ok()
}

/// Depth-first walk over all smooth words of length `n`, calling `visit` on each.
fn for_each_smooth(n: usize, k: usize, mut visit: impl FnMut(&[u32])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let k = k as u32;
    let mut buf = vec![0u32; n];
    fn rec(buf: &mut [u32], pos: usize, k: u32, visit: &mut dyn FnMut(&[u32])) {
        if pos == buf.len() {
            visit(buf);
            return;
        }
        let (lo, hi) = if pos == 0 {
            (1, k)
        } else {
            let c = buf[pos - 1];
            (c.saturating_sub(1).max(1), (c + 1).min(k))
        };
        for l in lo..=hi {
            buf[pos] = l;
            rec(buf, pos + 1, k, visit);
        }
    }
    rec(&mut buf, 0, k, &mut visit);
}

/// Number of smooth words of length `n` over `[k]`, by enumeration.
pub fn count_smooth_bf(n: usize, k: usize) -> Result<BigCount, WordError> {
    check_size(n, k)?;
    let mut count = 0u64;
    for_each_smooth(n, k, |_| count += 1);
    Ok(count.into())
}

fn wraps(letters: &[u32]) -> bool {
    match (letters.first(), letters.last()) {
        (Some(&a), Some(&b)) => adjacent(a, b),
        _ => true,
    }
}

/// Number of smooth cyclic words of length `n` over `[k]`, by enumeration.
pub fn count_cyclic_bf(n: usize, k: usize) -> Result<BigCount, WordError> {
    check_size(n, k)?;
    let mut count = 0u64;
    for_each_smooth(n, k, |w| {
        if wraps(w) {
            count += 1
        }
    });
    Ok(count.into())
}

/// Number of smooth necklaces of length `n` over `[k]`: distinct canonical
/// rotations of smooth cyclic words. `n = 0` counts the empty necklace.
pub fn count_necklaces_bf(n: usize, k: usize) -> Result<BigCount, WordError> {
    check_size(n, k)?;
    if n == 0 {
        return Ok(1u32.into());
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for_each_smooth(n, k, |w| {
        if wraps(w) {
            let r = least_rotation_index(w);
            let mut canon = w.to_vec();
            canon.rotate_left(r);
            seen.insert(canon);
        }
    });
    Ok(seen.len().into())
}

/// All words of length `n` over `[k]`, lexicographic order. Test helper for
/// exhaustive property checks; `k^n` grows fast.
pub fn all_words(n: usize, k: u32) -> impl Iterator<Item = Word> {
    let total = (k as u64).pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut letters = vec![0u32; n];
        for slot in letters.iter_mut().rev() {
            *slot = (idx % k as u64) as u32 + 1;
            idx /= k as u64;
        }
        Word { letters, k }
    })
}
