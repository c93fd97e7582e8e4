//! Permutations of {0, .., degree-1}, the element type for all concrete
//! groups in this crate.

use crate::error::{Error, Result};

/// A permutation stored as its image vector: `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u16).collect() }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let deg = images.len();
        let mut seen = vec![false; deg];
        for &i in &images {
            let i = i as usize;
            if i >= deg || seen[i] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Build from disjoint-cycle notation (0-based points).
    pub fn from_cycles(degree: usize, cycles: &[&[u16]]) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cyc in cycles {
            for w in 0..cyc.len() {
                let a = cyc[w] as usize;
                let b = cyc[(w + 1) % cyc.len()];
                if a >= degree || b as usize >= degree {
                    return Err(Error::InvalidArgument("cycle point out of range".into()));
                }
                images[a] = b;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u16 == j)
    }

    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut n = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            n += 1;
        }
        n
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        // (01) then (012): 0 ->1-> 2
        assert_eq!(b.compose(&a).apply(0), 2);
        assert!(a.compose(&a).is_identity());
        assert_eq!(b.inverse(), b.compose(&b));
        assert_eq!(b.order(), 3);
    }

    #[test]
    fn rejects_bad_images() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
    }
}
