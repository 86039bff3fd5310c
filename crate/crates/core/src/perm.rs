use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `0..n`, stored as its image list: `images[i]` is the
/// image of `i`. Composition follows the right action used for flags:
/// `a.then(&b)` maps `i` to `b(a(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &im) in images.iter().enumerate() {
            if im >= n {
                return Err(Error::Input(format!("image {im} of {i} is out of range for length {n}")));
            }
            if seen[im] {
                return Err(Error::Input(format!("{im} is hit twice, not a bijection")));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds an involution from disjoint transpositions; unlisted points are fixed.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Input(format!("pair ({a}, {b}) out of range for {n}")));
            }
            if images[a] != a || images[b] != b {
                return Err(Error::Input(format!("pair ({a}, {b}) overlaps another pair")));
            }
            images[a] = b;
            images[b] = a;
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different length");
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| self.images[im] == i)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().enumerate().filter(|(i, &im)| *i == im).map(|(i, _)| i)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.len() == other.len()
            && (0..self.len()).all(|i| other.images[self.images[i]] == self.images[other.images[i]])
    }

    /// Conjugate by a relabeling: the permutation `relabel⁻¹ ∘ self ∘ relabel`,
    /// i.e. `relabel(i) ↦ relabel(self(i))`.
    pub fn relabel(&self, relabel: &Permutation) -> Permutation {
        let mut images = vec![0; self.len()];
        for i in 0..self.len() {
            images[relabel.apply(i)] = relabel.apply(self.images[i]);
        }
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}
