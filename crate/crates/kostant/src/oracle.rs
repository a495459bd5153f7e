//! Brute-force reference implementations used to cross-check the core crate.
//!
//! Nothing here is fast; everything here is written independently of the
//! algorithm it checks.

use std::collections::{BTreeSet, HashMap};

use kostant_core::kl::KlTable;
use kostant_core::perm::{enumerate_group, Permutation};

/// The lower Bruhat interval of `w`: products of all subwords of one reduced word.
pub fn subword_lower_interval(w: &Permutation) -> BTreeSet<Permutation> {
    let word = w.a_reduced_word();
    let mut reachable = BTreeSet::from([Permutation::identity(w.n())]);
    for &s in &word {
        let next: Vec<_> = reachable.iter().map(|x| x.right_mul_simple(s)).collect();
        reachable.extend(next);
    }
    reachable
}

/// `x ≤ w` by the subword property.
pub fn subword_bruhat_leq(x: &Permutation, w: &Permutation) -> bool {
    x.n() == w.n() && subword_lower_interval(w).contains(x)
}

/// Dense `q`-polynomials, constant term first.
type Poly = Vec<i64>;

fn add_into(acc: &mut Poly, p: &[i64], shift: usize, scale: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += scale * c;
    }
}

fn mul(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; (a.len() + b.len()).saturating_sub(1)];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Kazhdan-Lusztig polynomials from R-polynomials, by inverting
/// `q^{ℓ(w)-ℓ(x)} P_{x,w}(q^{-1}) - P_{x,w}(q) = Σ_{x<y≤w} R_{x,y} P_{y,w}`.
///
/// Returns `(x, w) ↦ coefficients`, omitting zero polynomials.
pub fn kl_by_r_polynomials(n: usize) -> HashMap<(Permutation, Permutation), Vec<i64>> {
    let elements: Vec<Permutation> = enumerate_group(n).collect();
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let len: Vec<usize> = elements.iter().map(Permutation::length).collect();
    let count = elements.len();
    let leq: Vec<Vec<bool>> = elements
        .iter()
        .map(|x| elements.iter().map(|w| subword_bruhat_leq(x, w)).collect())
        .collect();

    let mut by_length: Vec<usize> = (0..count).collect();
    by_length.sort_by_key(|&i| len[i]);

    // R_{x,w}: for a right descent s of w,
    // R_{x,w} = R_{xs,ws} if xs < x, else (q-1) R_{x,ws} + q R_{xs,ws}.
    let mut r = vec![vec![Poly::new(); count]; count];
    for &w in &by_length {
        if len[w] == 0 {
            r[w][w] = vec![1];
            continue;
        }
        let s = (1..n)
            .find(|&s| elements[w].has_right_descent(s))
            .expect("w != e");
        let ws = index[&elements[w].right_mul_simple(s)];
        for x in 0..count {
            let xs = index[&elements[x].right_mul_simple(s)];
            r[x][w] = if len[xs] < len[x] {
                r[xs][ws].clone()
            } else {
                let mut p = mul(&[-1, 1], &r[x][ws]);
                add_into(&mut p, &r[xs][ws], 1, 1);
                trim(p)
            };
        }
    }

    let mut p = vec![vec![Poly::new(); count]; count];
    let mut out = HashMap::new();
    for w in 0..count {
        let mut below: Vec<usize> = (0..count).filter(|&x| leq[x][w]).collect();
        below.sort_by_key(|&x| std::cmp::Reverse(len[x]));
        for x in below {
            let poly = if x == w {
                vec![1]
            } else {
                let mut s = Poly::new();
                for y in (0..count).filter(|&y| y != x && leq[x][y] && leq[y][w]) {
                    add_into(&mut s, &mul(&r[x][y], &p[y][w]), 0, 1);
                }
                // P has degree < d/2 while q^d P(q^{-1}) lives strictly above it
                let bound = (len[w] - len[x] - 1) / 2;
                trim(s.iter().take(bound + 1).map(|c| -c).collect())
            };
            if !poly.is_empty() {
                out.insert((elements[x].clone(), elements[w].clone()), poly.clone());
            }
            p[x][w] = poly;
        }
    }
    out
}

/// Which one-sided preorder to close.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Left,
    Right,
}

/// One-sided cells as strongly connected components of the `μ`-graph.
///
/// `y ≤_L w` is generated by `μ(y,w) ≠ 0` or `μ(w,y) ≠ 0` together with
/// `L(y) ⊄ L(w)` for left descent sets `L`; right cells use right descents.
pub fn mu_graph_cells(table: &KlTable, kind: CellKind) -> BTreeSet<BTreeSet<Permutation>> {
    let elements = table.elements();
    let count = elements.len();
    let n = table.n();
    let descents = |w: &Permutation| -> BTreeSet<usize> {
        match kind {
            CellKind::Left => (1..n).filter(|&s| w.has_left_descent(s)).collect(),
            CellKind::Right => (1..n).filter(|&s| w.has_right_descent(s)).collect(),
        }
    };
    let desc: Vec<_> = elements.iter().map(descents).collect();
    let mut reach = vec![vec![false; count]; count];
    for y in 0..count {
        reach[y][y] = true;
        for w in 0..count {
            let mu = table.mu(&elements[y], &elements[w]).expect("same n")
                + table.mu(&elements[w], &elements[y]).expect("same n");
            if mu != 0 && !desc[y].is_subset(&desc[w]) {
                reach[y][w] = true;
            }
        }
    }
    for k in 0..count {
        let via = reach[k].clone();
        for row in reach.iter_mut().filter(|row| row[k]) {
            for (cell, &step) in row.iter_mut().zip(&via) {
                *cell |= step;
            }
        }
    }
    (0..count)
        .map(|i| {
            (0..count)
                .filter(|&j| reach[i][j] && reach[j][i])
                .map(|j| elements[j].clone())
                .collect()
        })
        .collect()
}

/// Bigrassmannians below `w` that are maximal among them, by subword search.
pub fn brute_socle(w: &Permutation) -> BTreeSet<Permutation> {
    let below: Vec<Permutation> = subword_lower_interval(w)
        .into_iter()
        .filter(|x| x.left_descents().len() == 1 && x.right_descents().len() == 1)
        .collect();
    below
        .iter()
        .filter(|x| !below.iter().any(|y| y != *x && subword_bruhat_leq(x, y)))
        .cloned()
        .collect()
}

/// Planar cup diagrams on `n` points from all partial matchings: cups may
/// not cross and no unmatched point may sit under a cup.
pub fn brute_planar_matchings(n: usize) -> BTreeSet<Vec<(usize, usize)>> {
    fn go(
        n: usize,
        next: usize,
        used: &mut Vec<bool>,
        cups: &mut Vec<(usize, usize)>,
        out: &mut BTreeSet<Vec<(usize, usize)>>,
    ) {
        if next > n {
            let planar = cups.iter().all(|&(a, b)| {
                cups.iter().all(|&(c, d)| !(a < c && c < b && b < d))
                    && (a + 1..b).all(|p| cups.iter().any(|&(c, d)| c == p || d == p))
            });
            if planar {
                let mut sorted = cups.clone();
                sorted.sort();
                out.insert(sorted);
            }
            return;
        }
        if used[next] {
            return go(n, next + 1, used, cups, out);
        }
        go(n, next + 1, used, cups, out);
        for partner in next + 1..=n {
            if !used[partner] {
                used[next] = true;
                used[partner] = true;
                cups.push((next, partner));
                go(n, next + 1, used, cups, out);
                cups.pop();
                used[next] = false;
                used[partner] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    go(n, 1, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out
}
