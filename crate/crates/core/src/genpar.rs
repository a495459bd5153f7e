//! Parabolics `p_μ` for an arbitrary composition `μ ⊨ n`.
//!
//! The blocks of `μ = (μ_1, μ_2, …)` are the consecutive intervals
//! `X_1 = {1..μ_1}`, `X_2 = {μ_1+1..μ_1+μ_2}`, …; the Levi factor of `p_μ` is
//! block diagonal with these blocks.
//!
//! Two partial answers are available. A representative in `G_μ ω_{ν,μ}` for
//! some rearrangement `ν` of `μ` is Kostant positive. A parabolic Verma module
//! that is not thin (relative to the right cell of `w_0^μ w_0`) is Kostant
//! negative. Everything else is [`Verdict::Unknown`].

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::cells::right_cell;
use crate::kl::{KlTable, ParabolicMultiplicities};
use crate::perm::{
    enumerate_shortest_reps, is_shortest_coset_rep, longest_element, longest_element_parabolic,
    Permutation, SimpleReflectionSet,
};
use crate::{Error, Result, Verdict};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition(Composition { parts }.to_string()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Blocks as inclusive ranges `(first, last)`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut start = 1;
        self.parts
            .iter()
            .map(|&p| {
                let block = (start, start + p - 1);
                start += p;
                block
            })
            .collect()
    }

    /// The parts in weakly decreasing order.
    pub fn sorted_partition(&self) -> Vec<usize> {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    pub fn similar(&self, other: &Composition) -> bool {
        self.sorted_partition() == other.sorted_partition()
    }

    /// Simple reflections inside blocks: all `s_i` except block boundaries.
    pub fn parabolic(&self) -> SimpleReflectionSet {
        let n = self.n();
        let inside = self
            .blocks()
            .into_iter()
            .flat_map(|(a, b)| a..b)
            .collect::<Vec<_>>();
        SimpleReflectionSet::new(n, inside).expect("indices below n")
    }

    pub fn shortest_reps(&self) -> impl Iterator<Item = Permutation> {
        enumerate_shortest_reps(self.n(), self.parabolic())
    }

    /// `w_0^μ`.
    pub fn longest_element(&self) -> Permutation {
        longest_element_parabolic(&self.parabolic())
    }

    /// `w_0^μ w_0`.
    pub fn longest_quotient(&self) -> Permutation {
        self.longest_element()
            .compose(&longest_element(self.n()))
            .expect("same n")
    }

    fn block_sizes(&self) -> &[usize] {
        &self.parts
    }
}

impl fmt::Display for Composition {
    /// `2,1,3,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidComposition(s.to_string()))
            })
            .collect::<Result<_>>()?;
        Composition::new(parts)
    }
}

/// The permutation sending block `i` of `from` onto block `target[i]` of
/// `to`, order-preservingly.
fn transport(from: &Composition, to: &Composition, target: &[usize]) -> Permutation {
    let (src, dst) = (from.blocks(), to.blocks());
    let mut images = vec![0; from.n()];
    for (i, &(a, b)) in src.iter().enumerate() {
        let start = dst[target[i]].0;
        for p in a..=b {
            images[p - 1] = start + (p - a);
        }
    }
    Permutation::from_images(&images).expect("blocks partition 1..n")
}

/// Permutations moving blocks of `μ` onto blocks of the same size, order-preservingly.
pub fn g_mu(mu: &Composition) -> Vec<Permutation> {
    let sizes = mu.block_sizes();
    let mut out = Vec::new();
    let mut target = Vec::with_capacity(sizes.len());
    let mut used = vec![false; sizes.len()];
    fn go(
        mu: &Composition,
        sizes: &[usize],
        target: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        let i = target.len();
        if i == sizes.len() {
            out.push(transport(mu, mu, target));
            return;
        }
        for j in 0..sizes.len() {
            if !used[j] && sizes[j] == sizes[i] {
                used[j] = true;
                target.push(j);
                go(mu, sizes, target, used, out);
                target.pop();
                used[j] = false;
            }
        }
    }
    go(mu, sizes, &mut target, &mut used, &mut out);
    out.sort();
    out
}

/// `π ∈ G_μ`: every block of `μ` lands order-preservingly on a block of equal size.
pub fn in_g_mu(mu: &Composition, pi: &Permutation) -> bool {
    let blocks = mu.blocks();
    pi.n() == mu.n()
        && blocks.iter().all(|&(a, b)| {
            let start = pi.apply(a);
            (a..=b).all(|p| pi.apply(p) == start + (p - a))
                && blocks.iter().any(|&(c, d)| c == start && d - c == b - a)
        })
}

/// `ω_{μ,ν}`: the `r`-th block of each size in `μ` goes to the `r`-th block of that size in `ν`.
pub fn omega(mu: &Composition, nu: &Composition) -> Result<Permutation> {
    if !mu.similar(nu) {
        return Err(Error::Dissimilar(mu.to_string(), nu.to_string()));
    }
    let (src, dst) = (mu.block_sizes(), nu.block_sizes());
    let mut taken = vec![false; dst.len()];
    let target: Vec<usize> = src
        .iter()
        .map(|&size| {
            let j = (0..dst.len())
                .find(|&j| !taken[j] && dst[j] == size)
                .expect("similar compositions");
            taken[j] = true;
            j
        })
        .collect();
    Ok(transport(mu, nu, &target))
}

/// All distinct rearrangements of `μ`, sorted.
pub fn similar_compositions(mu: &Composition) -> Vec<Composition> {
    let mut parts = mu.sorted_partition();
    parts.reverse();
    let mut out = vec![Composition::new(parts.clone()).expect("positive parts")];
    while next_permutation(&mut parts) {
        out.push(Composition::new(parts.clone()).expect("positive parts"));
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_rep(mu: &Composition, w: &Permutation) -> Result<()> {
    if w.n() != mu.n() {
        return Err(Error::SizeMismatch {
            left: mu.n(),
            right: w.n(),
        });
    }
    if !is_shortest_coset_rep(w, &mu.parabolic()) {
        return Err(Error::NotShortestRep(w.to_string()));
    }
    Ok(())
}

/// `w ∈ G_μ ω_{ν,μ}` for some `ν ∼ μ`.
pub fn positive_sufficient(mu: &Composition, w: &Permutation) -> Result<bool> {
    check_rep(mu, w)?;
    for nu in similar_compositions(mu) {
        let om = omega(&nu, mu)?;
        if in_g_mu(mu, &w.compose(&om.inverse())?) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The right cell of `w_0^μ w_0`, lexicographic.
pub fn right_cell_of_longest_quotient(mu: &Composition) -> Vec<Permutation> {
    right_cell(&mu.longest_quotient())
}

/// Kazhdan-Lusztig data shared by all representatives of one composition.
pub struct CompositionContext<'a> {
    mu: Composition,
    mults: ParabolicMultiplicities<'a>,
    cell: Vec<Permutation>,
}

impl<'a> CompositionContext<'a> {
    pub fn new(table: &'a KlTable, mu: Composition) -> Result<Self> {
        if table.n() != mu.n() {
            return Err(Error::SizeMismatch {
                left: table.n(),
                right: mu.n(),
            });
        }
        let mults = ParabolicMultiplicities::new(table, mu.parabolic())?;
        let cell = right_cell_of_longest_quotient(&mu);
        if let Some(u) = cell
            .iter()
            .find(|u| !is_shortest_coset_rep(u, &mu.parabolic()))
        {
            return Err(Error::Invariant(alloc::format!(
                "{u} in the cell of w_0^μ w_0 is not a shortest representative"
            )));
        }
        Ok(CompositionContext { mu, mults, cell })
    }

    pub fn composition(&self) -> &Composition {
        &self.mu
    }

    /// The right cell of `w_0^μ w_0`.
    pub fn cell(&self) -> &[Permutation] {
        &self.cell
    }

    /// `(u, [Δ_w : L_u])` over `u` in the cell with nonzero ungraded multiplicity.
    pub fn cell_multiplicities(&self, w: &Permutation) -> Result<Vec<(Permutation, i64)>> {
        check_rep(&self.mu, w)?;
        let mut out = Vec::new();
        for u in &self.cell {
            let m = self.mults.multiplicity(w, u)?.eval_at_one();
            if m != 0 {
                out.push((u.clone(), m));
            }
        }
        Ok(out)
    }

    /// Exactly one `u` in the cell occurs in `Δ_w`, and it occurs once.
    pub fn is_thin(&self, w: &Permutation) -> Result<bool> {
        let found = self.cell_multiplicities(w)?;
        Ok(matches!(found.as_slice(), [(_, 1)]))
    }

    pub fn positive_sufficient(&self, w: &Permutation) -> Result<bool> {
        positive_sufficient(&self.mu, w)
    }

    pub fn classify(&self, w: &Permutation) -> Result<Verdict> {
        Ok(if self.positive_sufficient(w)? {
            Verdict::Positive
        } else if !self.is_thin(w)? {
            Verdict::Negative
        } else {
            Verdict::Unknown
        })
    }
}

pub fn is_thin_general(table: &KlTable, mu: &Composition, w: &Permutation) -> Result<bool> {
    CompositionContext::new(table, mu.clone())?.is_thin(w)
}

pub fn classify_general(table: &KlTable, mu: &Composition, w: &Permutation) -> Result<Verdict> {
    CompositionContext::new(table, mu.clone())?.classify(w)
}
