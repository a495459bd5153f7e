//! Robinson-Schensted tableaux and Kazhdan-Lusztig cells of `S_n`.
//!
//! Cells of the symmetric group are read off RSK: two permutations lie in the
//! same right cell when one tableau agrees, the same left cell when the other
//! agrees, and the same two-sided cell when the shapes agree. Which tableau
//! governs right cells is [`RIGHT_CELL_TABLEAU`]; it is pinned against the
//! cell graph built from `μ`-coefficients.

use alloc::vec;
use alloc::vec::Vec;

use crate::perm::{enumerate_group, longest_element, Permutation};
use crate::{Error, Result};

/// A Young tableau stored row by row, top row first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Rows and columns strictly increase and the entries are exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let size: usize = self.rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; size + 1];
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 && row.len() > self.rows[r - 1].len() {
                return false;
            }
            for (c, &x) in row.iter().enumerate() {
                let x = usize::from(x);
                if x == 0 || x > size || seen[x] {
                    return false;
                }
                seen[x] = true;
                if c > 0 && row[c - 1] >= row[c] {
                    return false;
                }
                if r > 0 && self.rows[r - 1][c] >= row[c] {
                    return false;
                }
            }
        }
        true
    }

    /// Row-inserts `x`; returns the row in which a new box was created.
    fn insert(&mut self, mut x: u8) -> usize {
        for (r, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&y| y > x) {
                Some(c) => x = core::mem::replace(&mut row[c], x),
                None => {
                    row.push(x);
                    return r;
                }
            }
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }
}

/// Insertion tableau `p` and recording tableau `q` of a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableauPair {
    pub p: Tableau,
    pub q: Tableau,
}

impl TableauPair {
    pub fn shape(&self) -> Vec<usize> {
        self.p.shape()
    }
}

/// Row-insertion RSK of the window `w(1) w(2) … w(n)`.
pub fn rsk(w: &Permutation) -> TableauPair {
    let mut p = Tableau { rows: Vec::new() };
    let mut q = Tableau { rows: Vec::new() };
    for (i, &x) in w.window().iter().enumerate() {
        let r = p.insert(x);
        if r == q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[r].push(i as u8 + 1);
    }
    TableauPair { p, q }
}

/// Which RSK tableau is constant on right cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauSide {
    Insertion,
    Recording,
}

/// Right multiplication acts on window positions, i.e. by Knuth moves,
/// which preserve the insertion tableau.
pub const RIGHT_CELL_TABLEAU: TableauSide = TableauSide::Insertion;

fn tableau(pair: TableauPair, side: TableauSide) -> Tableau {
    match side {
        TableauSide::Insertion => pair.p,
        TableauSide::Recording => pair.q,
    }
}

fn other(side: TableauSide) -> TableauSide {
    match side {
        TableauSide::Insertion => TableauSide::Recording,
        TableauSide::Recording => TableauSide::Insertion,
    }
}

fn same_size(x: &Permutation, y: &Permutation) -> Result<()> {
    if x.n() == y.n() {
        Ok(())
    } else {
        Err(Error::SizeMismatch {
            left: x.n(),
            right: y.n(),
        })
    }
}

pub fn same_right_cell(x: &Permutation, y: &Permutation) -> Result<bool> {
    same_size(x, y)?;
    Ok(tableau(rsk(x), RIGHT_CELL_TABLEAU) == tableau(rsk(y), RIGHT_CELL_TABLEAU))
}

pub fn same_left_cell(x: &Permutation, y: &Permutation) -> Result<bool> {
    same_size(x, y)?;
    let side = other(RIGHT_CELL_TABLEAU);
    Ok(tableau(rsk(x), side) == tableau(rsk(y), side))
}

pub fn same_two_sided_cell(x: &Permutation, y: &Permutation) -> Result<bool> {
    same_size(x, y)?;
    Ok(rsk(x).shape() == rsk(y).shape())
}

/// The right cell of `w`, lexicographic.
pub fn right_cell(w: &Permutation) -> Vec<Permutation> {
    let t = tableau(rsk(w), RIGHT_CELL_TABLEAU);
    enumerate_group(w.n())
        .filter(|u| tableau(rsk(u), RIGHT_CELL_TABLEAU) == t)
        .collect()
}

/// The left cell of `w`, lexicographic.
pub fn left_cell(w: &Permutation) -> Vec<Permutation> {
    let side = other(RIGHT_CELL_TABLEAU);
    let t = tableau(rsk(w), side);
    enumerate_group(w.n())
        .filter(|u| tableau(rsk(u), side) == t)
        .collect()
}

/// The two-sided cell of `w`, lexicographic.
pub fn two_sided_cell(w: &Permutation) -> Vec<Permutation> {
    let shape = rsk(w).shape();
    enumerate_group(w.n())
        .filter(|u| rsk(u).shape() == shape)
        .collect()
}

/// `w != e` and `w` has a unique reduced expression.
pub fn is_small_cell_member(w: &Permutation) -> bool {
    !w.is_identity() && w.reduced_words().len() == 1
}

/// The two-sided cell containing the simple reflections.
pub fn small_cell(n: usize) -> Vec<Permutation> {
    enumerate_group(n).filter(is_small_cell_member).collect()
}

/// The side on which the small cell is multiplied by `w_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `{u w_0}` or `{w_0 u}` for `u` in the small cell, sorted.
pub fn penultimate_cell_from(n: usize, side: Side) -> Vec<Permutation> {
    let w0 = longest_element(n);
    let mut cell: Vec<Permutation> = small_cell(n)
        .iter()
        .map(|u| match side {
            Side::Left => w0.compose(u),
            Side::Right => u.compose(&w0),
        })
        .collect::<Result<_>>()
        .expect("sizes agree");
    cell.sort();
    cell
}

/// `{u w_0 : u in the small cell}`, sorted.
pub fn penultimate_cell(n: usize) -> Vec<Permutation> {
    penultimate_cell_from(n, Side::Right)
}

pub fn is_involution(w: &Permutation) -> bool {
    w.is_involution()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rsk_examples() {
        let e = rsk(&Permutation::identity(4));
        assert_eq!(e.p.rows(), &[vec![1, 2, 3, 4]]);
        assert_eq!(e.q, e.p);
        let w0 = rsk(&longest_element(4));
        assert_eq!(w0.p.rows(), &[vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(w0.q, w0.p);
        let t = rsk(&p("2314"));
        assert_eq!(t.shape(), vec![3, 1]);
        assert_eq!(t.p.rows(), &[vec![1, 3, 4], vec![2]]);
        assert_eq!(t.q.rows(), &[vec![1, 2, 4], vec![3]]);
    }

    #[test]
    fn rsk_is_a_bijection_and_inverse_swaps() {
        for n in 1..=6 {
            let mut seen = BTreeSet::new();
            for w in enumerate_group(n) {
                let t = rsk(&w);
                assert!(t.p.is_standard() && t.q.is_standard());
                assert_eq!(t.p.shape(), t.q.shape());
                let ti = rsk(&w.inverse());
                assert_eq!((ti.p, ti.q), (t.q.clone(), t.p.clone()));
                assert!(seen.insert((t.p, t.q)));
            }
        }
    }

    #[test]
    fn extreme_cells_are_singletons() {
        let e = Permutation::identity(4);
        assert!(same_two_sided_cell(&e, &e).unwrap());
        for w in enumerate_group(4).filter(|w| !w.is_identity()) {
            assert!(!same_two_sided_cell(&e, &w).unwrap());
        }
        assert_eq!(
            two_sided_cell(&longest_element(4)),
            vec![longest_element(4)]
        );
    }

    #[test]
    fn involutions() {
        assert!(is_involution(&Permutation::identity(3)));
        assert!(is_involution(&Permutation::simple(4, 2).unwrap()));
        assert_eq!(enumerate_group(4).filter(is_involution).count(), 10);
    }

    #[test]
    fn one_involution_per_one_sided_cell() {
        for n in 1..=5 {
            for w in enumerate_group(n) {
                assert_eq!(
                    right_cell(&w).iter().filter(|u| u.is_involution()).count(),
                    1
                );
                assert_eq!(
                    left_cell(&w).iter().filter(|u| u.is_involution()).count(),
                    1
                );
            }
        }
    }

    #[test]
    fn cells_nest_and_left_cells_are_inverted_right_cells() {
        for n in 1..=5 {
            for w in enumerate_group(n) {
                let two = two_sided_cell(&w);
                assert!(right_cell(&w).iter().all(|u| two.contains(u)));
                assert!(left_cell(&w).iter().all(|u| two.contains(u)));
                let mut inverted: Vec<_> =
                    right_cell(&w).iter().map(Permutation::inverse).collect();
                inverted.sort();
                assert_eq!(inverted, left_cell(&w.inverse()));
            }
        }
    }

    #[test]
    fn small_cell_structure() {
        for n in 2..=6 {
            let small = small_cell(n);
            for k in 1..n {
                assert!(is_small_cell_member(&Permutation::simple(n, k).unwrap()));
            }
            assert!(!is_small_cell_member(&Permutation::identity(n)));
            let s1 = Permutation::simple(n, 1).unwrap();
            assert_eq!(small, two_sided_cell(&s1));
            let right_cells: BTreeSet<_> = small.iter().map(|u| rsk(u).p).collect();
            let left_cells: BTreeSet<_> = small.iter().map(|u| rsk(u).q).collect();
            assert_eq!(right_cells.len(), n - 1);
            assert_eq!(left_cells.len(), n - 1);
        }
    }

    #[test]
    fn penultimate_cell_is_a_two_sided_cell_on_either_side() {
        for n in 2..=6 {
            let right = penultimate_cell(n);
            assert_eq!(right, penultimate_cell_from(n, Side::Left));
            assert_eq!(right, two_sided_cell(&right[0]));
        }
        let mut expected = vec![p("132"), p("213"), p("231"), p("312")];
        expected.sort();
        assert_eq!(penultimate_cell(3), expected);
    }
}
