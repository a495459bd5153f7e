//! Weight words and oriented cup diagrams for the maximal parabolic `q_k`,
//! whose Levi factor is `sl_k ⊕ sl_{n-k}`.
//!
//! Shortest coset representatives correspond to words with `k` letters `∧`
//! and `n-k` letters `∨` through `Φ(w)[p] = ∧ ⇔ w(p) <= k`. A cup diagram on
//! `n` points is oriented by a word when every cup joins a `∧` and a `∨`; a cup
//! is clockwise when its left end is `∧`, and the degree counts clockwise
//! cups. It is admissible when no `∨`-strand lies left of a `∧`-strand.
//!
//! `L_y` occurs in `Δ_x` (in degree `i`, exactly once) iff `Φ(x)` orients the
//! underlying diagram of `d(Φ(y))` admissibly with degree `i`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::perm::{
    enumerate_shortest_reps, longest_element, longest_element_parabolic, Permutation,
    SimpleReflectionSet,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `∧`, written `^`.
    Wedge,
    /// `∨`, written `v`.
    Vee,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::Wedge => '^',
            Letter::Vee => 'v',
        }
    }
}

/// A word in `∧`, `∨` containing both letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightWord {
    letters: Vec<Letter>,
}

impl WeightWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let word = WeightWord { letters };
        if word.k() == 0 || word.k() == word.n() {
            return Err(Error::InvalidWord(word.to_string()));
        }
        Ok(word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    /// Number of wedges.
    pub fn k(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::Wedge).count()
    }

    /// Letter at 1-indexed position `p`.
    pub fn at(&self, p: usize) -> Letter {
        self.letters[p - 1]
    }

    /// Lengths of the maximal runs of equal letters, left to right.
    pub fn signature(&self) -> Vec<usize> {
        let mut runs: Vec<usize> = Vec::new();
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 && self.letters[i - 1] == *l {
                *runs.last_mut().expect("nonempty") += 1;
            } else {
                runs.push(1);
            }
        }
        runs
    }

    pub fn flip_number(&self) -> usize {
        self.signature().len()
    }

    /// All positions holding `letter` form one interval.
    fn contiguous(&self, letter: Letter) -> bool {
        let first = self.letters.iter().position(|&l| l == letter);
        let last = self.letters.iter().rposition(|&l| l == letter);
        match (first, last) {
            (Some(a), Some(b)) => self.letters[a..=b].iter().all(|&l| l == letter),
            _ => true,
        }
    }
}

impl fmt::Display for WeightWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

impl fmt::Debug for WeightWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightWord({self})")
    }
}

impl FromStr for WeightWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                '^' => Ok(Letter::Wedge),
                'v' => Ok(Letter::Vee),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<_>>()?;
        WeightWord::new(letters)
    }
}

/// A planar diagram of non-crossing cups and vertical strands on `1..=n`;
/// no strand sits under a cup.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CupDiagram {
    n: usize,
    /// Sorted by left end.
    cups: Vec<(usize, usize)>,
}

impl CupDiagram {
    pub fn new(n: usize, mut cups: Vec<(usize, usize)>) -> Result<Self> {
        cups.sort_unstable();
        let invalid = |why: &str| Err(Error::InvalidDiagram(String::from(why)));
        let mut used = vec![false; n + 1];
        for &(a, b) in &cups {
            if a == 0 || a >= b || b > n {
                return invalid("cup ends out of range");
            }
            for p in [a, b] {
                if core::mem::replace(&mut used[p], true) {
                    return invalid("point used twice");
                }
            }
        }
        for &(a, b) in &cups {
            for &(c, d) in &cups {
                if a < c && c < b && b < d {
                    return invalid("crossing cups");
                }
            }
            if (a + 1..b).any(|p| !used[p]) {
                return invalid("strand under a cup");
            }
        }
        Ok(CupDiagram { n, cups })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cups(&self) -> &[(usize, usize)] {
        &self.cups
    }

    pub fn strands(&self) -> Vec<usize> {
        let mut used = vec![false; self.n + 1];
        for &(a, b) in &self.cups {
            used[a] = true;
            used[b] = true;
        }
        (1..=self.n).filter(|&p| !used[p]).collect()
    }

    /// Every planar diagram on `n` points.
    pub fn enumerate(n: usize) -> Vec<CupDiagram> {
        let mut out = Vec::new();
        for cups in planar_matchings(1, n) {
            out.push(CupDiagram::new(n, cups).expect("generated diagrams are planar"));
        }
        out.sort();
        out
    }
}

/// Cup sets on `lo..=hi` (strands allowed outside cups).
fn planar_matchings(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    let mut out = planar_matchings(lo + 1, hi);
    for b in (lo + 1..=hi).step_by(2) {
        for inner in perfect_matchings(lo + 1, b - 1) {
            for rest in planar_matchings(b + 1, hi) {
                let mut cups = vec![(lo, b)];
                cups.extend_from_slice(&inner);
                cups.extend_from_slice(&rest);
                out.push(cups);
            }
        }
    }
    out
}

/// Non-crossing perfect matchings of `lo..=hi`.
fn perfect_matchings(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for b in (lo + 1..=hi).step_by(2) {
        for inner in perfect_matchings(lo + 1, b - 1) {
            for rest in perfect_matchings(b + 1, hi) {
                let mut cups = vec![(lo, b)];
                cups.extend_from_slice(&inner);
                cups.extend_from_slice(&rest);
                out.push(cups);
            }
        }
    }
    out
}

impl fmt::Display for CupDiagram {
    /// `cups=(a,b),(c,d);strands=p,q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("cups=")?;
        for (i, (a, b)) in self.cups.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str(";strands=")?;
        for (i, p) in self.strands().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CupDiagram({self})")
    }
}

impl FromStr for CupDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let rest = s.strip_prefix("cups=").ok_or_else(bad)?;
        let (cups_text, strands_text) = rest.split_once(";strands=").ok_or_else(bad)?;
        let number = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let mut cups = Vec::new();
        let mut tail = cups_text;
        while !tail.is_empty() {
            let body = tail.strip_prefix('(').ok_or_else(bad)?;
            let (pair, after) = body.split_once(')').ok_or_else(bad)?;
            let (a, b) = pair.split_once(',').ok_or_else(bad)?;
            cups.push((number(a)?, number(b)?));
            tail = match after.strip_prefix(',') {
                Some(t) if !t.is_empty() => t,
                Some(_) => return Err(bad()),
                None if after.is_empty() => after,
                None => return Err(bad()),
            };
        }
        let strands: Vec<usize> = if strands_text.is_empty() {
            Vec::new()
        } else {
            strands_text.split(',').map(number).collect::<Result<_>>()?
        };
        let n = 2 * cups.len() + strands.len();
        let diagram = CupDiagram::new(n, cups)?;
        if diagram.strands() != strands {
            return Err(Error::InvalidDiagram(s.to_string()));
        }
        Ok(diagram)
    }
}

/// A cup diagram decorated by a word so that every cup joins `∧` and `∨`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedCupDiagram {
    diagram: CupDiagram,
    word: WeightWord,
}

impl OrientedCupDiagram {
    /// `None` when sizes differ or some cup joins equal letters.
    pub fn new(diagram: CupDiagram, word: WeightWord) -> Option<Self> {
        if diagram.n() != word.n() {
            return None;
        }
        let oriented = diagram
            .cups()
            .iter()
            .all(|&(a, b)| word.at(a) != word.at(b));
        oriented.then_some(OrientedCupDiagram { diagram, word })
    }

    pub fn diagram(&self) -> &CupDiagram {
        &self.diagram
    }

    pub fn word(&self) -> &WeightWord {
        &self.word
    }

    /// Number of clockwise cups (left end `∧`).
    pub fn degree(&self) -> usize {
        self.diagram
            .cups()
            .iter()
            .filter(|&&(a, _)| self.word.at(a) == Letter::Wedge)
            .count()
    }

    /// No `∨`-strand to the left of a `∧`-strand.
    pub fn is_admissible(&self) -> bool {
        let mut seen_vee = false;
        for p in self.diagram.strands() {
            match self.word.at(p) {
                Letter::Vee => seen_vee = true,
                Letter::Wedge if seen_vee => return false,
                Letter::Wedge => {}
            }
        }
        true
    }
}

/// Admissible decoration of `c` by `λ`, if any.
pub fn orient(c: &CupDiagram, word: &WeightWord) -> Option<OrientedCupDiagram> {
    OrientedCupDiagram::new(c.clone(), word.clone()).filter(OrientedCupDiagram::is_admissible)
}

/// The degree-zero admissible diagram of `λ`: each `∧` is capped with the
/// nearest unmatched `∨` on its left.
pub fn d_of(word: &WeightWord) -> OrientedCupDiagram {
    let mut open = Vec::new();
    let mut cups = Vec::new();
    for (i, l) in word.letters().iter().enumerate() {
        match l {
            Letter::Vee => open.push(i + 1),
            Letter::Wedge => {
                if let Some(a) = open.pop() {
                    cups.push((a, i + 1));
                }
            }
        }
    }
    let diagram = CupDiagram::new(word.n(), cups).expect("stack matching is planar");
    OrientedCupDiagram::new(diagram, word.clone()).expect("cups join ∨ and ∧")
}

/// All oriented (not necessarily admissible) diagrams on `λ`.
pub fn enumerate_oriented(word: &WeightWord) -> Vec<OrientedCupDiagram> {
    CupDiagram::enumerate(word.n())
        .into_iter()
        .filter_map(|c| OrientedCupDiagram::new(c, word.clone()))
        .collect()
}

pub fn enumerate_admissible(word: &WeightWord) -> Vec<OrientedCupDiagram> {
    enumerate_oriented(word)
        .into_iter()
        .filter(OrientedCupDiagram::is_admissible)
        .collect()
}

/// The maximal parabolic `q_k` of `sl_n`: all simple reflections but `s_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaxParContext {
    n: usize,
    k: usize,
}

impl MaxParContext {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 2 || k == 0 || k >= n {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: n.saturating_sub(1),
            });
        }
        Ok(MaxParContext { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.n - self.k
    }

    /// `min(k, m)`, the largest cup count.
    pub fn a(&self) -> usize {
        self.k.min(self.m())
    }

    pub fn parabolic(&self) -> SimpleReflectionSet {
        SimpleReflectionSet::all_but(self.n, self.k).expect("k is in range")
    }

    pub fn shortest_reps(&self) -> impl Iterator<Item = Permutation> {
        enumerate_shortest_reps(self.n, self.parabolic())
    }

    /// `w_0^q w_0`, the representative of `∨^m ∧^k`.
    pub fn longest_quotient(&self) -> Permutation {
        longest_element_parabolic(&self.parabolic())
            .compose(&longest_element(self.n))
            .expect("same n")
    }

    /// `∧^k ∨^m`.
    pub fn dominant_word(&self) -> WeightWord {
        let mut letters = vec![Letter::Wedge; self.k];
        letters.resize(self.n, Letter::Vee);
        WeightWord { letters }
    }

    /// All `C(n,k)` words, in the order `^ < v` letter by letter.
    pub fn enumerate_words(&self) -> Vec<WeightWord> {
        let mut out = Vec::new();
        let mut letters = Vec::with_capacity(self.n);
        fn go(letters: &mut Vec<Letter>, wedges: usize, vees: usize, out: &mut Vec<WeightWord>) {
            if wedges == 0 && vees == 0 {
                out.push(WeightWord {
                    letters: letters.clone(),
                });
                return;
            }
            for (l, w, v) in [(Letter::Wedge, 1, 0), (Letter::Vee, 0, 1)] {
                if wedges >= w && vees >= v {
                    letters.push(l);
                    go(letters, wedges - w, vees - v, out);
                    letters.pop();
                }
            }
        }
        go(&mut letters, self.k, self.m(), &mut out);
        out
    }

    fn check_word(&self, word: &WeightWord) -> Result<()> {
        if word.n() != self.n || word.k() != self.k {
            return Err(Error::InvalidWord(word.to_string()));
        }
        Ok(())
    }

    fn check_rep(&self, w: &Permutation) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: w.n(),
            });
        }
        if (1..self.n).any(|i| i != self.k && w.has_left_descent(i)) {
            return Err(Error::NotShortestRep(w.to_string()));
        }
        Ok(())
    }

    /// The dominant word moved by `w^{-1}`: position `p` carries `∧` iff `w(p) <= k`.
    pub fn phi(&self, w: &Permutation) -> Result<WeightWord> {
        self.check_rep(w)?;
        let letters = (1..=self.n)
            .map(|p| {
                if w.apply(p) <= self.k {
                    Letter::Wedge
                } else {
                    Letter::Vee
                }
            })
            .collect();
        Ok(WeightWord { letters })
    }

    /// Wedges receive `1..=k` and vees `k+1..=n`, left to right.
    pub fn phi_inverse(&self, word: &WeightWord) -> Result<Permutation> {
        self.check_word(word)?;
        let (mut wedge, mut vee) = (0, self.k);
        let images: Vec<usize> = word
            .letters()
            .iter()
            .map(|l| match l {
                Letter::Wedge => {
                    wedge += 1;
                    wedge
                }
                Letter::Vee => {
                    vee += 1;
                    vee
                }
            })
            .collect();
        Permutation::from_images(&images)
    }

    /// The word whose `d` has the shape of `c`: cups oriented `∨∧`, then the
    /// leftover `∧`'s on the leftmost strands.
    pub fn word_from_diagram(&self, c: &CupDiagram) -> Result<WeightWord> {
        let cups = c.cups().len();
        if c.n() != self.n || cups > self.a() {
            return Err(Error::InvalidDiagram(c.to_string()));
        }
        let mut letters = vec![Letter::Vee; self.n];
        for &(_, b) in c.cups() {
            letters[b - 1] = Letter::Wedge;
        }
        for p in c.strands().into_iter().take(self.k - cups) {
            letters[p - 1] = Letter::Wedge;
        }
        Ok(WeightWord { letters })
    }

    /// Degree of `L_y` in `Δ_x`, or `None` when it does not occur.
    pub fn graded_multiplicity(&self, x: &Permutation, y: &Permutation) -> Result<Option<usize>> {
        let shape = d_of(&self.phi(y)?).diagram;
        Ok(orient(&shape, &self.phi(x)?).map(|o| o.degree()))
    }

    /// `(y, degree)` for every `L_y` in `Δ_x`, ordered by `y`.
    pub fn composition_factors(&self, x: &Permutation) -> Result<Vec<(Permutation, usize)>> {
        let word = self.phi(x)?;
        let mut out = Vec::new();
        for y in self.shortest_reps() {
            if let Some(o) = orient(&d_of(&self.phi(&y)?).diagram, &word) {
                out.push((y, o.degree()));
            }
        }
        Ok(out)
    }

    /// Lusztig's `a`-value: the number of cups of `d(Φ(w))`.
    pub fn a_value(&self, w: &Permutation) -> Result<usize> {
        Ok(d_of(&self.phi(w)?).diagram.cups().len())
    }

    /// `Δ_w` has exactly one composition factor of `a`-value `min(k, m)`.
    pub fn is_thin(&self, w: &Permutation) -> Result<bool> {
        let word = self.phi(w)?;
        let top = self
            .enumerate_words()
            .into_iter()
            .map(|y| d_of(&y).diagram)
            .filter(|d| d.cups().len() == self.a() && orient(d, &word).is_some())
            .count();
        Ok(top == 1)
    }

    /// `∨`'s contiguous when `k < m`, `∧`'s contiguous when `k > m`, either when `k = m`.
    pub fn in_y(&self, word: &WeightWord) -> Result<bool> {
        self.check_word(word)?;
        let vees = word.contiguous(Letter::Vee);
        let wedges = word.contiguous(Letter::Wedge);
        Ok(match self.k.cmp(&self.m()) {
            core::cmp::Ordering::Less => vees,
            core::cmp::Ordering::Greater => wedges,
            core::cmp::Ordering::Equal => vees || wedges,
        })
    }

    /// `w ∈ {e, w_0^q w_0}`.
    pub fn is_extremal(&self, w: &Permutation) -> Result<bool> {
        self.check_rep(w)?;
        Ok(w.is_identity() || *w == self.longest_quotient())
    }

    /// For `k ∈ {1, n-1, n/2}` the positives are `e` and `w_0^q w_0`; otherwise
    /// they are the representatives with `Φ(w) ∈ Y`.
    pub fn is_kostant_positive(&self, w: &Permutation) -> Result<bool> {
        if self.k == 1 || self.k == self.n - 1 || 2 * self.k == self.n {
            self.is_extremal(w)
        } else {
            self.in_y(&self.phi(w)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn w(s: &str) -> WeightWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ctx(n: usize, k: usize) -> MaxParContext {
        MaxParContext::new(n, k).unwrap()
    }

    fn cups(n: usize, c: &[(usize, usize)]) -> CupDiagram {
        CupDiagram::new(n, c.to_vec()).unwrap()
    }

    fn s(n: usize, word: &[usize]) -> Permutation {
        Permutation::from_word(n, word).unwrap()
    }

    #[test]
    fn words() {
        assert_eq!(ctx(4, 2).dominant_word(), w("^^vv"));
        assert_eq!(ctx(3, 1).dominant_word(), w("^vv"));
        assert_eq!(ctx(7, 3).dominant_word(), w("^^^vvvv"));
        let listed: BTreeSet<_> = ["^^vv", "^v^v", "^vv^", "v^^v", "v^v^", "vv^^"]
            .iter()
            .map(|t| w(t))
            .collect();
        let found: BTreeSet<_> = ctx(4, 2).enumerate_words().into_iter().collect();
        assert_eq!(found, listed);
        assert_eq!(ctx(5, 2).enumerate_words().len(), 10);
        for n in 2..=8usize {
            for k in 1..n {
                let words = ctx(n, k).enumerate_words();
                let binom = (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i);
                assert_eq!(words.len(), binom);
                assert!(words.iter().all(|x| x.k() == k && x.n() == n));
            }
        }
        assert!("^^^".parse::<WeightWord>().is_err());
        assert!("^x".parse::<WeightWord>().is_err());
    }

    #[test]
    fn phi_examples_and_round_trip() {
        let c = ctx(4, 2);
        assert_eq!(c.phi(&Permutation::identity(4)).unwrap(), w("^^vv"));
        assert_eq!(c.phi(&s(4, &[2])).unwrap(), w("^v^v"));
        assert_eq!(c.phi(&s(4, &[2, 1, 3, 2])).unwrap(), w("vv^^"));
        assert!(c.phi(&s(4, &[1])).is_err());
        assert!(c.phi_inverse(&w("^vvv")).is_err());
        for n in 2..=7 {
            for k in 1..n {
                let c = ctx(n, k);
                let reps: Vec<_> = c.shortest_reps().collect();
                assert_eq!(reps.len(), c.enumerate_words().len());
                for r in &reps {
                    assert_eq!(&c.phi_inverse(&c.phi(r).unwrap()).unwrap(), r);
                }
                for x in c.enumerate_words() {
                    assert_eq!(c.phi(&c.phi_inverse(&x).unwrap()).unwrap(), x);
                }
                let top = c.longest_quotient();
                let mut expected = vec![Letter::Vee; n - k];
                expected.resize(n, Letter::Wedge);
                assert_eq!(c.phi(&top).unwrap().letters(), &expected[..]);
            }
        }
    }

    #[test]
    fn canonical_diagrams() {
        assert!(d_of(&w("^^vv")).diagram().cups().is_empty());
        assert_eq!(d_of(&w("^v^v")).diagram(), &cups(4, &[(2, 3)]));
        let d = d_of(&w("vv^^vv^"));
        assert_eq!(d.diagram(), &cups(7, &[(1, 4), (2, 3), (6, 7)]));
        assert_eq!(d.diagram().strands(), vec![5]);
        assert_eq!(
            ctx(7, 3).word_from_diagram(d.diagram()).unwrap(),
            w("vv^^vv^")
        );
        assert_eq!(
            ctx(4, 2).word_from_diagram(&cups(4, &[])).unwrap(),
            w("^^vv")
        );
        assert!(ctx(5, 1)
            .word_from_diagram(&cups(5, &[(1, 2), (3, 4)]))
            .is_err());
    }

    #[test]
    fn canonical_round_trip_and_uniqueness() {
        for n in 2..=7 {
            for k in 1..n {
                let c = ctx(n, k);
                for x in c.enumerate_words() {
                    let d = d_of(&x);
                    assert_eq!(d.degree(), 0);
                    assert!(d.is_admissible());
                    assert_eq!(c.word_from_diagram(d.diagram()).unwrap(), x);
                    if n <= 6 {
                        let zero: Vec<_> = enumerate_admissible(&x)
                            .into_iter()
                            .filter(|o| o.degree() == 0)
                            .collect();
                        assert_eq!(zero, vec![d]);
                    }
                }
            }
        }
    }

    #[test]
    fn diagram_counts_and_degrees() {
        let x = w("^v^v");
        assert_eq!(enumerate_oriented(&x).len(), 6);
        let admissible = enumerate_admissible(&x);
        assert_eq!(admissible.len(), 5);
        assert!(!admissible.iter().any(|o| o.diagram().cups().is_empty()));
        let nested = OrientedCupDiagram::new(cups(4, &[(1, 4), (2, 3)]), x.clone()).unwrap();
        assert_eq!(nested.degree(), 1);
        let mut degrees: Vec<_> = enumerate_admissible(&w("^^vv"))
            .iter()
            .map(|o| o.degree())
            .collect();
        degrees.sort();
        assert_eq!(degrees, vec![0, 1, 2]);
        let dom = ctx(3, 1).dominant_word();
        let brute: Vec<_> = CupDiagram::enumerate(3)
            .into_iter()
            .filter_map(|c| orient(&c, &dom))
            .collect();
        assert_eq!(enumerate_admissible(&dom), brute);
        assert_eq!(brute.len(), 2);
    }

    #[test]
    fn planar_diagram_counts() {
        // central binomial coefficients C(n, n/2)
        let counts: Vec<_> = (1..=8).map(|n| CupDiagram::enumerate(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 6, 10, 20, 35, 70]);
    }

    #[test]
    fn orient_examples() {
        let c = cups(4, &[(2, 3)]);
        assert_eq!(orient(&c, &w("^^vv")).map(|o| o.degree()), Some(1));
        assert_eq!(orient(&c, &w("vv^^")), None);
        let d = d_of(&w("v^^v"));
        assert_eq!(orient(d.diagram(), &w("v^^v")).map(|o| o.degree()), Some(0));
    }

    #[test]
    fn diagram_text_form() {
        let d: CupDiagram = "cups=(1,4),(2,3),(6,7);strands=5".parse().unwrap();
        assert_eq!(d.to_string(), "cups=(1,4),(2,3),(6,7);strands=5");
        assert_eq!(d.n(), 7);
        let e: CupDiagram = "cups=;strands=1,2,3".parse().unwrap();
        assert_eq!(e.to_string(), "cups=;strands=1,2,3");
        for bad in [
            "cups=(1,3),(2,4);strands=",
            "cups=(1,3);strands=2",
            "cups=(1,2);strands=4",
            "cups=(1,2),;strands=3",
            "(1,2)",
        ] {
            assert!(bad.parse::<CupDiagram>().is_err(), "{bad}");
        }
        for n in 1..=6 {
            for c in CupDiagram::enumerate(n) {
                assert_eq!(c.to_string().parse::<CupDiagram>().unwrap(), c);
            }
        }
    }

    #[test]
    fn multiplicity_tables_n4_k2() {
        let c = ctx(4, 2);
        let e = Permutation::identity(4);
        assert_eq!(
            c.composition_factors(&e).unwrap(),
            vec![(p("1234"), 0), (p("1324"), 1), (p("3412"), 2)]
        );
        let s2 = s(4, &[2]);
        let mut expected = vec![
            (s2.clone(), 0),
            (s(4, &[2, 1]), 1),
            (s(4, &[2, 3]), 1),
            (s(4, &[2, 1, 3, 2]), 1),
            (s(4, &[2, 1, 3]), 2),
        ];
        expected.sort();
        assert_eq!(c.composition_factors(&s2).unwrap(), expected);
        for x in c.shortest_reps() {
            assert_eq!(c.graded_multiplicity(&x, &x).unwrap(), Some(0));
        }
    }

    #[test]
    fn a_values_and_thin_modules() {
        let c = ctx(4, 2);
        assert_eq!(c.a_value(&Permutation::identity(4)).unwrap(), 0);
        assert_eq!(c.a_value(&s(4, &[2, 1, 3, 2])).unwrap(), 2);
        let thin: Vec<_> = c
            .shortest_reps()
            .filter(|x| c.is_thin(x).unwrap())
            .collect();
        let mut expected = vec![
            Permutation::identity(4),
            s(4, &[2, 1]),
            s(4, &[2, 3]),
            s(4, &[2, 1, 3, 2]),
        ];
        expected.sort();
        assert_eq!(thin, expected);
        for n in 2..=7 {
            for k in 1..n {
                let c = ctx(n, k);
                let max = c.shortest_reps().map(|x| c.a_value(&x).unwrap()).max();
                assert_eq!(max, Some(c.a()));
            }
        }
    }

    #[test]
    fn signatures() {
        assert_eq!(w("v^^v^^^").signature(), vec![1, 2, 1, 3]);
        assert_eq!(w("v^^v^^^").flip_number(), 4);
        for n in 2..=7 {
            for k in 1..n {
                let c = ctx(n, k);
                assert_eq!(c.dominant_word().signature(), vec![k, n - k]);
                assert!(c.enumerate_words().iter().all(|x| x.flip_number() >= 2));
            }
        }
    }

    #[test]
    fn y_sets() {
        let y = |n, k| -> BTreeSet<WeightWord> {
            let c = ctx(n, k);
            c.enumerate_words()
                .into_iter()
                .filter(|x| c.in_y(x).unwrap())
                .collect()
        };
        let set = |ws: &[&str]| ws.iter().map(|t| w(t)).collect::<BTreeSet<_>>();
        assert_eq!(y(5, 2), set(&["^^vvv", "^vvv^", "vvv^^"]));
        assert_eq!(y(4, 2), set(&["^^vv", "^vv^", "v^^v", "vv^^"]));
        for n in 3..=8 {
            for k in 1..n {
                if 2 * k < n {
                    assert_eq!(y(n, k).len(), k + 1);
                }
            }
        }
    }

    #[test]
    fn positives() {
        let c = ctx(4, 2);
        let pos: Vec<_> = c
            .shortest_reps()
            .filter(|x| c.is_kostant_positive(x).unwrap())
            .collect();
        assert_eq!(pos, vec![p("1234"), p("3412")]);
        let c = ctx(5, 2);
        let pos: BTreeSet<_> = c
            .shortest_reps()
            .filter(|x| c.is_kostant_positive(x).unwrap())
            .collect();
        let expected: BTreeSet<_> = ["^^vvv", "^vvv^", "vvv^^"]
            .iter()
            .map(|t| c.phi_inverse(&w(t)).unwrap())
            .collect();
        assert_eq!(pos, expected);
    }

    #[test]
    fn thin_iff_in_y() {
        for n in 2..=7 {
            for k in 1..n {
                let c = ctx(n, k);
                for x in c.shortest_reps() {
                    let word = c.phi(&x).unwrap();
                    assert_eq!(c.is_thin(&x).unwrap(), c.in_y(&word).unwrap(), "{word}");
                    if word.flip_number() == 2 {
                        assert!(c.is_extremal(&x).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn extreme_parabolic_chain() {
        for n in 2..=7 {
            let c = ctx(n, 1);
            let chain: Vec<_> = (0..n).map(|i| s(n, &(1..=i).collect::<Vec<_>>())).collect();
            let mut reps: Vec<_> = c.shortest_reps().collect();
            reps.sort();
            let mut sorted = chain.clone();
            sorted.sort();
            assert_eq!(reps, sorted);
            for (i, x) in chain.iter().enumerate() {
                let mut expected = vec![(x.clone(), 0)];
                if i + 1 < n {
                    expected.push((x.right_mul_simple(i + 1), 1));
                }
                expected.sort();
                assert_eq!(c.composition_factors(x).unwrap(), expected);
            }
        }
    }
}
