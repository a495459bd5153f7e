//! Permutations of `{1, ..., n}` and the Coxeter structure of `S_n`.
//!
//! A [`Permutation`] is stored in one-line notation: `window[i - 1] = w(i)`.
//! The simple reflection `s_i` is the transposition `(i, i+1)`. Left
//! multiplication `s_i w` swaps the *values* `i` and `i+1` in the window,
//! right multiplication `w s_i` swaps the *positions* `i` and `i+1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// An element of `S_n` in one-line notation.
///
/// The derived ordering is lexicographic on the window, which is the
/// enumeration order used everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    window: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n as u8).collect(),
        }
    }

    pub fn from_window(window: Vec<u8>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidWindow {
                    n,
                    window: format!("{window:?}"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { window })
    }

    /// The simple reflection `s_i = (i, i+1)` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_simple_index(n, i)?;
        let mut w = Self::identity(n);
        w.window.swap(i - 1, i);
        Ok(w)
    }

    /// The product `s_{i_1} s_{i_2} ... s_{i_l}` (applied right to left).
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            check_simple_index(n, i)?;
            w.window.swap(i - 1, i);
        }
        Ok(w)
    }

    /// The permutation `i -> images[i - 1]`, with `images` given as `usize`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let window = images
            .iter()
            .map(|&v| u8::try_from(v).unwrap_or(0))
            .collect();
        Self::from_window(window)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[u8] {
        &self.window
    }

    /// `w(i)` for `1 <= i <= n`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// `self ∘ other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        same_size(self, other)?;
        Ok(Permutation {
            window: other
                .window
                .iter()
                .map(|&v| self.window[v as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { window: inv }
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `s_i w`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let mut window = self.window.clone();
        for v in window.iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        Permutation { window }
    }

    /// `w s_i`: swaps the entries in positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut window = self.window.clone();
        window.swap(i - 1, i);
        Permutation { window }
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. the value `i + 1` occurs left of `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.window.iter().position(|&x| x as usize == v);
        pos(i) > pos(i + 1)
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w(i) > w(i + 1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.window[i - 1] > self.window[i]
    }

    pub fn left_descents(&self) -> SimpleReflectionSet {
        let inv = self.inverse();
        let mut set = SimpleReflectionSet::empty(self.n());
        for i in 1..self.n() {
            if inv.window[i - 1] > inv.window[i] {
                set.mask |= 1 << i;
            }
        }
        set
    }

    pub fn right_descents(&self) -> SimpleReflectionSet {
        let mut set = SimpleReflectionSet::empty(self.n());
        for i in 1..self.n() {
            if self.window[i - 1] > self.window[i] {
                set.mask |= 1 << i;
            }
        }
        set
    }

    /// Bruhat order via the rank-matrix (dominance) criterion:
    /// `x <= y` iff `#{a <= i : x(a) >= j} <= #{a <= i : y(a) >= j}` for all `i, j`.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool> {
        same_size(self, other)?;
        Ok(self.bruhat_leq_unchecked(other))
    }

    pub(crate) fn bruhat_leq_unchecked(&self, other: &Permutation) -> bool {
        let n = self.n();
        // counts[j] = #{a <= i : w(a) >= j}, running over prefixes.
        let mut cx = [0u8; 33];
        let mut cy = [0u8; 33];
        debug_assert!(n <= 32);
        for i in 0..n {
            let (a, b) = (self.window[i] as usize, other.window[i] as usize);
            for c in cx.iter_mut().take(a + 1).skip(1) {
                *c += 1;
            }
            for c in cy.iter_mut().take(b + 1).skip(1) {
                *c += 1;
            }
            if (1..=n).any(|j| cx[j] > cy[j]) {
                return false;
            }
        }
        true
    }

    /// Every reduced word of `w`, sorted lexicographically.
    ///
    /// A word `(i_1, ..., i_l)` stands for `s_{i_1} ... s_{i_l}`. Words are
    /// found by stripping right descents, memoized by window.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        let mut memo = BTreeMap::new();
        reduced_words_memo(self, &mut memo)
    }

    /// One reduced word of `w`, built by repeatedly stripping the smallest right descent.
    pub fn a_reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(s) = (1..w.n()).find(|&s| w.has_right_descent(s)) {
            word.push(s);
            w = w.right_mul_simple(s);
        }
        word.reverse();
        word
    }

    pub fn is_involution(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| self.window[v as usize - 1] as usize == i + 1)
    }

    /// `w_0 w w_0`.
    pub fn conjugate_by_longest(&self) -> Permutation {
        let n = self.n() as u8;
        Permutation {
            window: self.window.iter().rev().map(|&v| n + 1 - v).collect(),
        }
    }

    /// Position of this permutation in the lexicographic enumeration of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let w = &self.window;
        let n = w.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller_after = w[i + 1..].iter().filter(|&&v| v < w[i]).count();
            rank = rank * (n - i) + smaller_after;
        }
        rank
    }
}

fn reduced_words_memo(
    w: &Permutation,
    memo: &mut BTreeMap<Vec<u8>, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(words) = memo.get(&w.window) {
        return words.clone();
    }
    let mut words = Vec::new();
    if w.is_identity() {
        words.push(Vec::new());
    } else {
        for s in 1..w.n() {
            if w.has_right_descent(s) {
                for mut word in reduced_words_memo(&w.right_mul_simple(s), memo) {
                    word.push(s);
                    words.push(word);
                }
            }
        }
        words.sort();
    }
    memo.insert(w.window.clone(), words.clone());
    words
}

fn check_simple_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

fn same_size(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, bracketed comma list otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str("[")?;
            for (i, &v) in self.window.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a permutation: {s:?}"));
        let window: Vec<u8> = if let Some(inner) = s.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(bad)?;
            if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
                    .collect::<Result<_>>()?
            }
        } else {
            if s.is_empty() || s.len() > 9 {
                return Err(bad());
            }
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::from_window(window)
    }
}

/// A set of simple reflections `{s_j : j ∈ J}` of `S_n`, `J ⊆ {1, ..., n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleReflectionSet {
    n: usize,
    mask: u64,
}

impl SimpleReflectionSet {
    pub fn empty(n: usize) -> Self {
        SimpleReflectionSet { n, mask: 0 }
    }

    pub fn all(n: usize) -> Self {
        let mut set = Self::empty(n);
        for i in 1..n {
            set.mask |= 1 << i;
        }
        set
    }

    pub fn new<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self> {
        let mut set = Self::empty(n);
        for i in indices {
            check_simple_index(n, i)?;
            set.mask |= 1 << i;
        }
        Ok(set)
    }

    /// All simple reflections except `s_k`: the maximal parabolic missing `s_k`.
    pub fn all_but(n: usize, k: usize) -> Result<Self> {
        check_simple_index(n, k)?;
        let mut set = Self::all(n);
        set.mask &= !(1 << k);
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.mask & (1 << i) != 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(move |&i| self.contains(i))
    }

    /// Maximal intervals `[a, b]` of `{1..n}` joined by the reflections in the
    /// set; `W_J` is the product of the symmetric groups on these blocks.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut blocks = Vec::new();
        let mut start = 1;
        for i in 1..=self.n {
            if i == self.n || !self.contains(i) {
                blocks.push((start, i));
                start = i + 1;
            }
        }
        blocks
    }
}

impl fmt::Debug for SimpleReflectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `w_0` of `S_n`: `i -> n + 1 - i`.
pub fn longest_element(n: usize) -> Permutation {
    Permutation {
        window: (1..=n as u8).rev().collect(),
    }
}

/// Longest element of the parabolic subgroup generated by `J`: reverses each block.
pub fn longest_element_parabolic(j: &SimpleReflectionSet) -> Permutation {
    let mut window = Vec::with_capacity(j.n());
    for (a, b) in j.blocks() {
        window.extend((a..=b).rev().map(|v| v as u8));
    }
    Permutation { window }
}

/// Shortest representative of its coset in `W_J \ W`: `ℓ(s_j w) > ℓ(w)` for all `j ∈ J`.
pub fn is_shortest_coset_rep(w: &Permutation, j: &SimpleReflectionSet) -> bool {
    j.iter().all(|i| !w.has_left_descent(i))
}

/// Lexicographic enumeration of `S_n`.
pub fn enumerate_group(n: usize) -> GroupIter {
    GroupIter {
        next: Some(Permutation::identity(n)),
    }
}

pub struct GroupIter {
    next: Option<Permutation>,
}

impl Iterator for GroupIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.window.clone();
        if next_permutation(&mut w) {
            self.next = Some(Permutation { window: w });
        }
        Some(current)
    }
}

fn next_permutation(w: &mut [u8]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Shortest coset representatives for `W_J \ W`, lexicographic.
pub fn enumerate_shortest_reps(
    n: usize,
    j: SimpleReflectionSet,
) -> impl Iterator<Item = Permutation> {
    enumerate_group(n).filter(move |w| is_shortest_coset_rep(w, &j))
}

/// The parabolic subgroup `W_J`, lexicographic.
pub fn parabolic_subgroup(j: &SimpleReflectionSet) -> Vec<Permutation> {
    let blocks = j.blocks();
    enumerate_group(j.n())
        .filter(|w| {
            blocks
                .iter()
                .all(|&(a, b)| (a..=b).all(|i| (a..=b).contains(&w.apply(i))))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn s(n: usize, word: &[usize]) -> Permutation {
        Permutation::from_word(n, word).unwrap()
    }

    /// Products of all subwords of one reduced word of `y`: exactly `[e, y]`.
    fn subword_ideal(y: &Permutation) -> BTreeSet<Permutation> {
        // bubble-sort reduced word, independent of `reduced_words`
        let mut word = Vec::new();
        let mut w = y.window.clone();
        let mut swapped = true;
        while swapped {
            swapped = false;
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    word.push(i + 1);
                    swapped = true;
                }
            }
        }
        // y = s_{word[last]} ... applied in reverse of sorting
        word.reverse();
        assert_eq!(Permutation::from_word(y.n(), &word).unwrap(), *y);
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << word.len()) {
            let sub: Vec<usize> = (0..word.len())
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| word[b])
                .collect();
            out.insert(Permutation::from_word(y.n(), &sub).unwrap());
        }
        out
    }

    #[test]
    fn compose_examples() {
        let w = p("2314");
        assert_eq!(Permutation::identity(4).compose(&w).unwrap(), w);
        assert_eq!(s(3, &[2]).compose(&s(3, &[1])).unwrap(), p("312"));
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        assert_eq!(
            w.compose(&Permutation::identity(3)),
            Err(Error::SizeMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(longest_element(4).length(), 6);
        assert_eq!(p("2314").length(), 2);
    }

    #[test]
    fn descent_examples() {
        assert!(Permutation::identity(4).left_descents().is_empty());
        let r: Vec<_> = longest_element(3).right_descents().iter().collect();
        assert_eq!(r, vec![1, 2]);
        // ℓ(s_1 w) = 1 and ℓ(s_2 w) = 3 for w = 2314, so the only left descent is s_1.
        let w = p("2314");
        let l: Vec<_> = w.left_descents().iter().collect();
        assert_eq!(l, vec![1]);
        let r: Vec<_> = w.right_descents().iter().collect();
        assert_eq!(r, vec![2]);
        for i in 1..4 {
            assert_eq!(
                w.has_left_descent(i),
                w.left_mul_simple(i).length() < w.length()
            );
        }
    }

    #[test]
    fn bruhat_examples() {
        let e = Permutation::identity(3);
        for w in enumerate_group(3) {
            assert!(e.bruhat_leq(&w).unwrap());
        }
        assert!(s(3, &[1]).bruhat_leq(&s(3, &[1, 2])).unwrap());
        assert!(e.bruhat_leq(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for n in 1..=5 {
            let group: Vec<_> = enumerate_group(n).collect();
            for y in &group {
                let ideal = subword_ideal(y);
                for x in &group {
                    assert_eq!(x.bruhat_leq(y).unwrap(), ideal.contains(x), "{x} <= {y}");
                }
            }
        }
    }

    #[test]
    fn bruhat_is_partial_order_and_graded() {
        for n in 1..=4 {
            let g: Vec<_> = enumerate_group(n).collect();
            for x in &g {
                assert!(x.bruhat_leq(x).unwrap());
                for y in &g {
                    let xy = x.bruhat_leq(y).unwrap();
                    if xy && y.bruhat_leq(x).unwrap() {
                        assert_eq!(x, y);
                    }
                    if xy {
                        assert!(x.length() <= y.length());
                        assert_eq!(x.length() == y.length(), x == y);
                        for z in &g {
                            if y.bruhat_leq(z).unwrap() {
                                assert!(x.bruhat_leq(z).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bruhat_automorphisms() {
        for n in 1..=5 {
            let g: Vec<_> = enumerate_group(n).collect();
            for x in &g {
                for y in &g {
                    let b = x.bruhat_leq(y).unwrap();
                    assert_eq!(b, x.inverse().bruhat_leq(&y.inverse()).unwrap());
                    assert_eq!(
                        b,
                        x.conjugate_by_longest()
                            .bruhat_leq(&y.conjugate_by_longest())
                            .unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn length_changes_by_one() {
        for n in 2..=5 {
            for w in enumerate_group(n) {
                for i in 1..n {
                    let d = w.right_mul_simple(i).length() as isize - w.length() as isize;
                    assert!(d == 1 || d == -1);
                    assert_eq!(d == -1, w.has_right_descent(i));
                }
            }
        }
    }

    #[test]
    fn reduced_word_examples() {
        assert_eq!(
            Permutation::identity(3).reduced_words(),
            vec![Vec::<usize>::new()]
        );
        let w0 = s(3, &[1, 2, 1]);
        assert_eq!(w0, longest_element(3));
        assert_eq!(w0.reduced_words(), vec![vec![1, 2, 1], vec![2, 1, 2]]);
        for n in 1..=5 {
            for w in enumerate_group(n) {
                let words = w.reduced_words();
                assert!(!words.is_empty());
                for word in &words {
                    assert_eq!(word.len(), w.length());
                    assert_eq!(Permutation::from_word(n, word).unwrap(), w);
                }
                assert!(words.contains(&w.a_reduced_word()));
            }
        }
        // w_0 of S_4 has 16 reduced words (standard staircase tableaux count)
        assert_eq!(longest_element(4).reduced_words().len(), 16);
    }

    #[test]
    fn longest_element_examples() {
        assert_eq!(longest_element(3), p("321"));
        let j = SimpleReflectionSet::new(4, [2, 3]).unwrap();
        assert_eq!(longest_element_parabolic(&j), p("1432"));
        // exhaustive: the longest element of the 6-element subgroup
        let sub = parabolic_subgroup(&j);
        assert_eq!(sub.len(), 6);
        let best = sub.iter().max_by_key(|w| w.length()).unwrap();
        assert_eq!(*best, p("1432"));
        assert!(longest_element_parabolic(&SimpleReflectionSet::empty(5)).is_identity());
    }

    #[test]
    fn shortest_reps_examples() {
        for n in 1usize..=4 {
            for mask in 0..(1u64 << (n - 1)) {
                let j = SimpleReflectionSet::new(n, (1..n).filter(|i| mask & (1 << (i - 1)) != 0))
                    .unwrap();
                assert!(is_shortest_coset_rep(&Permutation::identity(n), &j));
            }
        }
        let j = SimpleReflectionSet::new(4, [1, 3]).unwrap();
        let reps: Vec<_> = enumerate_shortest_reps(4, j).collect();
        let expected: BTreeSet<_> = [&[][..], &[2], &[2, 1], &[2, 3], &[2, 1, 3], &[2, 1, 3, 2]]
            .iter()
            .map(|w| s(4, w))
            .collect();
        assert_eq!(reps.iter().cloned().collect::<BTreeSet<_>>(), expected);
        assert_eq!(reps.len(), 6);
        for n in 2..=6 {
            for k in 1..n {
                let j = SimpleReflectionSet::new(n, [k]).unwrap();
                let fact: usize = (1..=n).product();
                assert_eq!(enumerate_shortest_reps(n, j).count(), fact / 2);
            }
        }
        assert_eq!(
            enumerate_shortest_reps(4, SimpleReflectionSet::empty(4)).count(),
            24
        );
    }

    #[test]
    fn coset_count_identity() {
        for n in 1..=6 {
            let fact: usize = (1..=n).product();
            for mask in 0..(1u64 << (n - 1)) {
                let j = SimpleReflectionSet::new(n, (1..n).filter(|i| mask & (1 << (i - 1)) != 0))
                    .unwrap();
                let reps = enumerate_shortest_reps(n, j).count();
                assert_eq!(reps * parabolic_subgroup(&j).len(), fact);
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let g: Vec<_> = enumerate_group(4).collect();
        assert_eq!(g.len(), 24);
        assert_eq!(enumerate_group(3).count(), 6);
        for (i, w) in g.iter().enumerate() {
            assert_eq!(w.lex_rank(), i);
        }
        assert!(g.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("2314").to_string(), "2314");
        assert_eq!(p("[2,3,1,4]"), p("2314"));
        let big = Permutation::from_images(&[2, 1, 3, 4, 5, 6, 7, 8, 9, 10]).unwrap();
        assert_eq!(big.to_string(), "[2,1,3,4,5,6,7,8,9,10]");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("2214".parse::<Permutation>().is_err());
        assert!("x".parse::<Permutation>().is_err());
        assert!("[1,2".parse::<Permutation>().is_err());
    }

    #[test]
    fn blocks_of_reflection_sets() {
        let j = SimpleReflectionSet::new(7, [1, 3, 4]).unwrap();
        assert_eq!(j.blocks(), vec![(1, 2), (3, 5), (6, 6), (7, 7)]);
        assert_eq!(SimpleReflectionSet::all(3).blocks(), vec![(1, 3)]);
        assert!(SimpleReflectionSet::new(3, [3]).is_err());
    }
}
