//! Bigrassmannian permutations and Bruhat intervals.
//!
//! Intervals are found by filtering a scan of the whole group, which is fine
//! for the `n <= 7` range this crate targets.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::perm::{enumerate_group, Permutation};
use crate::{Error, Result};

/// Exactly one left descent and exactly one right descent.
pub fn is_bigrassmannian(w: &Permutation) -> bool {
    w.left_descents().len() == 1 && w.right_descents().len() == 1
}

/// `{z : x <= z <= y}`, lexicographic.
pub fn interval(x: &Permutation, y: &Permutation) -> Result<Vec<Permutation>> {
    if !x.bruhat_leq(y)? {
        return Err(Error::NotComparable(x.to_string(), y.to_string()));
    }
    Ok(enumerate_group(x.n())
        .filter(|z| x.bruhat_leq_unchecked(z) && z.bruhat_leq_unchecked(y))
        .collect())
}

/// Bigrassmannian elements of `[e, u] \ [e, w]`, for `w <= u`.
pub fn complement_bigrassmannians(u: &Permutation, w: &Permutation) -> Result<Vec<Permutation>> {
    if !w.bruhat_leq(u)? {
        return Err(Error::NotComparable(w.to_string(), u.to_string()));
    }
    Ok(enumerate_group(u.n())
        .filter(|z| is_bigrassmannian(z) && z.bruhat_leq_unchecked(u) && !z.bruhat_leq_unchecked(w))
        .collect())
}

/// The Bruhat-maximal bigrassmannian elements of `[e, w]`.
///
/// These index the socle constituents of the cokernel of `Δ_w ↪ Δ_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleDescriptor {
    pub generators: Vec<Permutation>,
}

impl SocleDescriptor {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        self.generators.len() == 1
    }
}

pub fn socle_descriptor(w: &Permutation) -> SocleDescriptor {
    let below: Vec<Permutation> = enumerate_group(w.n())
        .filter(|z| is_bigrassmannian(z) && z.bruhat_leq_unchecked(w))
        .collect();
    let generators = below
        .iter()
        .filter(|&z| {
            !below
                .iter()
                .any(|other| other != z && z.bruhat_leq_unchecked(other))
        })
        .cloned()
        .collect();
    SocleDescriptor { generators }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::longest_element;
    use alloc::vec;

    fn s(n: usize, word: &[usize]) -> Permutation {
        Permutation::from_word(n, word).unwrap()
    }

    #[test]
    fn bigrassmannian_examples() {
        assert!(!is_bigrassmannian(&Permutation::identity(4)));
        for k in 1..4 {
            assert!(is_bigrassmannian(&s(4, &[k])));
        }
        let found: Vec<_> = enumerate_group(3).filter(is_bigrassmannian).collect();
        let mut expected = vec![s(3, &[1]), s(3, &[2]), s(3, &[1, 2]), s(3, &[2, 1])];
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn interval_examples() {
        let e = Permutation::identity(3);
        assert_eq!(interval(&e, &e).unwrap(), vec![e.clone()]);
        assert_eq!(interval(&e, &longest_element(3)).unwrap().len(), 6);
        let mut expected = vec![e.clone(), s(3, &[1]), s(3, &[2]), s(3, &[1, 2])];
        expected.sort();
        assert_eq!(interval(&e, &s(3, &[1, 2])).unwrap(), expected);
        assert!(matches!(
            interval(&s(3, &[1]), &s(3, &[2])),
            Err(Error::NotComparable(..))
        ));
    }

    #[test]
    fn complement_examples() {
        let w = s(3, &[1, 2]);
        assert!(complement_bigrassmannians(&w, &w).unwrap().is_empty());
        let mut expected = vec![s(3, &[1]), s(3, &[1, 2])];
        expected.sort();
        assert_eq!(
            complement_bigrassmannians(&s(3, &[1, 2]), &s(3, &[2])).unwrap(),
            expected
        );
        assert!(complement_bigrassmannians(&s(3, &[2]), &s(3, &[1])).is_err());
    }

    #[test]
    fn complement_misses_lower_interval() {
        for n in 2..=4 {
            let g: Vec<_> = enumerate_group(n).collect();
            for u in &g {
                for w in g.iter().filter(|w| w.bruhat_leq_unchecked(u)) {
                    let lower = interval(&Permutation::identity(n), w).unwrap();
                    for z in complement_bigrassmannians(u, w).unwrap() {
                        assert!(!lower.contains(&z));
                    }
                }
            }
        }
    }

    #[test]
    fn socle_examples() {
        for k in 1..4 {
            let sk = s(4, &[k]);
            assert_eq!(socle_descriptor(&sk).generators, vec![sk.clone()]);
        }
        assert!(socle_descriptor(&Permutation::identity(3)).is_empty());
        let soc = socle_descriptor(&longest_element(3));
        assert!(soc.len() >= 2);
        let mut expected = vec![s(3, &[1, 2]), s(3, &[2, 1])];
        expected.sort();
        assert_eq!(soc.generators, expected);
    }

    #[test]
    fn simple_socle_iff_bigrassmannian() {
        for n in 1..=6 {
            for w in enumerate_group(n) {
                let soc = socle_descriptor(&w);
                assert_eq!(soc.is_simple(), is_bigrassmannian(&w), "{w}");
                for a in &soc.generators {
                    assert!(is_bigrassmannian(a));
                    assert_eq!(a.left_descents().len(), 1);
                    assert_eq!(a.right_descents().len(), 1);
                    for b in &soc.generators {
                        if a != b {
                            assert!(!a.bruhat_leq_unchecked(b));
                        }
                    }
                }
            }
        }
    }
}
