//! The minimal parabolic `p_k`, whose Levi factor is generated by the single
//! simple reflection `s_k = (k, k+1)`.
//!
//! Every shortest coset representative factors uniquely as `σ ∘ τ` with `σ`
//! fixing `k` and `k+1` and `τ = τ_{i,j}` one of the `C(n,2)` elements sending
//! `i ↦ k`, `j ↦ k+1` and preserving the order of the remaining points. The
//! parabolic Verma module of `σ ∘ τ_{i,j}` is Kostant positive exactly when
//! `j = i + 1`.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::perm::{enumerate_group, enumerate_shortest_reps, Permutation, SimpleReflectionSet};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinParContext {
    n: usize,
    k: usize,
}

/// `w = sigma ∘ tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinParFactorization {
    pub sigma: Permutation,
    pub tau: Permutation,
    /// The pair `(i, j)` with `tau = τ_{i,j}`.
    pub pair: (usize, usize),
    /// `j = i + 1`.
    pub positive: bool,
}

/// Bigrassmannian elements of `[e, s_k τ] \ [e, τ]` for `τ = τ_{i,j}`, `j > i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseAnalysis {
    /// 1: `i = k`; 2: `j = k+1`; 3: `i > k`; 4: `j < k+1`; 5: `i < k < k+1 < j`.
    pub case_id: u8,
    /// The chain of bigrassmannians predicted for the case, in its natural order.
    pub predicted: Vec<Permutation>,
}

impl MinParContext {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 2 || k == 0 || k >= n {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: n.saturating_sub(1),
            });
        }
        Ok(MinParContext { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `{s_k}`.
    pub fn parabolic(&self) -> SimpleReflectionSet {
        SimpleReflectionSet::new(self.n, [self.k]).expect("k is in range")
    }

    pub fn shortest_reps(&self) -> impl Iterator<Item = Permutation> {
        enumerate_shortest_reps(self.n, self.parabolic())
    }

    /// `τ_{i,j}`: `i ↦ k`, `j ↦ k+1`, increasing on the other points.
    pub fn tau(&self, i: usize, j: usize) -> Result<Permutation> {
        let n = self.n;
        if i == 0 || j > n || i >= j {
            return Err(Error::IndexOutOfRange {
                index: if i == 0 || i >= j { i } else { j },
                max: n,
            });
        }
        let mut rest = (1..=n).filter(|&v| v != self.k && v != self.k + 1);
        let images: Vec<usize> = (1..=n)
            .map(|p| match p {
                _ if p == i => self.k,
                _ if p == j => self.k + 1,
                _ => rest.next().expect("n - 2 free values"),
            })
            .collect();
        Permutation::from_images(&images)
    }

    /// `(X⁺, X⁻)`: `X⁺` ordered by `i`, `X⁻` ordered by `(i, j)`.
    pub fn enumerate_x(&self) -> (Vec<Permutation>, Vec<Permutation>) {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for i in 1..self.n {
            for j in i + 1..=self.n {
                let t = self.tau(i, j).expect("valid pair");
                if j == i + 1 {
                    plus.push(t);
                } else {
                    minus.push(t);
                }
            }
        }
        (plus, minus)
    }

    /// Elements fixing `k` and `k+1`.
    pub fn hat_g(&self) -> Vec<Permutation> {
        let (k, n) = (self.k, self.n);
        enumerate_group(n)
            .filter(|s| s.apply(k) == k && s.apply(k + 1) == k + 1)
            .collect()
    }

    /// The centralizer of `s_k`: elements leaving `{k, k+1}` invariant.
    pub fn g(&self) -> Vec<Permutation> {
        let (k, n) = (self.k, self.n);
        enumerate_group(n)
            .filter(|s| matches!((s.apply(k), s.apply(k + 1)), (a, b) if a.min(b) == k && a.max(b) == k + 1))
            .collect()
    }

    /// The unique `(σ, τ)` with `w = σ ∘ τ`.
    ///
    /// `σ` fixes `k` and `k+1`, so `τ(i) = k` forces `w(i) = k`: the pair is
    /// read off the positions of `k` and `k+1` in `w`.
    pub fn factorize(&self, w: &Permutation) -> Result<MinParFactorization> {
        self.check_rep(w)?;
        let pos = w.inverse();
        let (i, j) = (pos.apply(self.k), pos.apply(self.k + 1));
        let tau = self.tau(i, j)?;
        let sigma = w.compose(&tau.inverse())?;
        if sigma.apply(self.k) != self.k || sigma.apply(self.k + 1) != self.k + 1 {
            return Err(Error::Invariant(alloc::format!("no factorization of {w}")));
        }
        Ok(MinParFactorization {
            sigma,
            tau,
            pair: (i, j),
            positive: j == i + 1,
        })
    }

    pub fn is_kostant_positive(&self, w: &Permutation) -> Result<bool> {
        Ok(self.factorize(w)?.positive)
    }

    /// The bigrassmannian chain predicted for `τ_{i,j}`, `j >= i + 2`.
    ///
    /// Cases 2 and 4 are conjugated by `w_0` into cases 1 and 3 of the mirror
    /// context `(n, n-k)`; there `τ_{i,j}` becomes `τ_{n+1-j, n+1-i}`.
    pub fn case_analysis(&self, i: usize, j: usize) -> Result<CaseAnalysis> {
        self.tau(i, j)?;
        if j == i + 1 {
            return Err(Error::PositiveCase { i, j });
        }
        let (n, k) = (self.n, self.k);
        let word = |word: Vec<usize>| Permutation::from_word(n, &word).expect("indices in range");
        // s_k s_{k+1} … s_l
        let up = |l: usize| word((k..=l).collect());
        // s_k s_{k-1} … s_l
        let down = |l: usize| word((l..=k).rev().collect());

        let (case_id, predicted) = if i == k {
            (1, (k..j).map(up).collect())
        } else if j == k + 1 {
            let mirror = MinParContext::new(n, n - k)?.case_analysis(n + 1 - j, n + 1 - i)?;
            (
                2,
                mirror
                    .predicted
                    .iter()
                    .map(Permutation::conjugate_by_longest)
                    .collect(),
            )
        } else if i > k {
            (3, (i..j).map(up).collect())
        } else if j <= k {
            let mirror = MinParContext::new(n, n - k)?.case_analysis(n + 1 - j, n + 1 - i)?;
            (
                4,
                mirror
                    .predicted
                    .iter()
                    .map(Permutation::conjugate_by_longest)
                    .collect(),
            )
        } else {
            let mut list: Vec<Permutation> = (k..j).map(up).collect();
            list.extend((i..k).rev().map(down));
            (5, list)
        };
        Ok(CaseAnalysis { case_id, predicted })
    }

    /// `|X⁺| / |X⁻| = (n-1) / (C(n,2) - (n-1))`; `None` when `X⁻` is empty (`n = 2`).
    pub fn ratio(&self) -> Option<Ratio<usize>> {
        let plus = self.n - 1;
        let minus = self.n * (self.n - 1) / 2 - plus;
        (minus != 0).then(|| Ratio::new(plus, minus))
    }

    fn check_rep(&self, w: &Permutation) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: w.n(),
            });
        }
        if w.has_left_descent(self.k) {
            return Err(Error::NotShortestRep(w.to_string()));
        }
        Ok(())
    }
}
