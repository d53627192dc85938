//! Permutations of `[n] = {1, …, n}` stored as 1-based image arrays.

use alloc::vec::Vec;
use core::fmt;

/// A permutation `ρ` of `[n]`, written as the word `ρ(1) ρ(2) … ρ(n)`.
///
/// Values are 1-based. Ordering is lexicographic on the word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    /// Checks that `word` is a bijection on `1..=word.len()`.
    pub fn new(word: Vec<u8>) -> Option<Self> {
        if is_permutation_word(&word) {
            Some(Perm(word))
        } else {
            None
        }
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `ρ(i)` for 1-based `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Perm(inv)
    }

    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(is_permutation_word(&word));
        Perm(word)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

pub(crate) fn is_permutation_word(word: &[u8]) -> bool {
    let n = word.len();
    if n > u8::MAX as usize {
        return false;
    }
    let mut seen = alloc::vec![false; n];
    for &v in word {
        let v = v as usize;
        if v == 0 || v > n || seen[v - 1] {
            return false;
        }
        seen[v - 1] = true;
    }
    true
}

/// All `n!` permutations of `[n]` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut word: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Perm(word.clone()));
        if !next_permutation(&mut word) {
            return out;
        }
    }
}

/// Advances `word` to its lexicographic successor; `false` once it was the last.
pub(crate) fn next_permutation(word: &mut [u8]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let perms = all_perms(3);
        assert_eq!(perms.len(), 6);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(perms[0].as_slice(), &[1, 2, 3]);
        assert_eq!(perms[5].as_slice(), &[3, 2, 1]);
        assert_eq!(all_perms(1).len(), 1);
        assert_eq!(all_perms(4).len(), 24);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Perm::new(alloc::vec![1, 1]).is_none());
        assert!(Perm::new(alloc::vec![0, 1]).is_none());
        assert!(Perm::new(alloc::vec![1, 3]).is_none());
        assert!(Perm::new(alloc::vec![2, 1]).is_some());
    }

    #[test]
    fn inverse_round_trip() {
        for p in all_perms(4) {
            let inv = p.inverse();
            for i in 1..=4 {
                assert_eq!(inv.apply(p.apply(i)), i);
            }
        }
    }
}
