//! Concrete finite permutation groups, fully materialized.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Perm;

pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// A finite group given by permutation generators, with every element
/// enumerated. The identity is always at index 0.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

/// Conjugacy classes of a [`FiniteGroup`], with deterministic
/// least-element-index representatives.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub representatives: Vec<usize>,
    pub centralizer_orders: Vec<usize>,
}

impl FiniteGroup {
    /// Enumerate the group generated by `generators` (common degree required).
    pub fn enumerate(generators: Vec<Perm>) -> Result<Self> {
        Self::enumerate_with_cap(generators, DEFAULT_ORDER_CAP)
    }

    pub fn enumerate_with_cap(generators: Vec<Perm>, cap: usize) -> Result<Self> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => return Err(Error::InvalidArgument("at least one generator required".into())),
        };
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidArgument("generators have mixed degrees".into()));
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            let g = elements[i].clone();
            for gen in &generators {
                let h = g.compose(gen);
                if !index.contains_key(&h) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(h.clone(), elements.len());
                    frontier.push(elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(FiniteGroup { degree, generators, elements, index })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i].compose(&self.elements[j]);
        self.index[&p]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        // g x g^-1
        let p = self.elements[g].compose(&self.elements[x]).compose(&self.elements[g].inverse());
        self.index[&p]
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.elements[i].order()
    }

    /// Smallest exponent killing every element.
    pub fn exponent(&self) -> u64 {
        let mut e: u64 = 1;
        for i in 0..self.order() {
            e = num_integer::lcm(e, self.element_order(i));
        }
        e
    }

    /// Conjugacy classes via orbit computation under generator conjugation.
    pub fn conjugacy_classes(&self) -> ConjugacyData {
        let n = self.order();
        let gen_idx: Vec<usize> = self.generators.iter().map(|g| self.index[g]).collect();
        let gen_inv: Vec<usize> = gen_idx.iter().map(|&g| self.inv(g)).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut orbit = vec![start];
            class_of[start] = cid;
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for (&g, &gi) in gen_idx.iter().zip(&gen_inv) {
                    let y = self.mul(self.mul(g, x), gi);
                    if class_of[y] == usize::MAX {
                        class_of[y] = cid;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let centralizer_orders: Vec<usize> = classes.iter().map(|c| n / c.len()).collect();
        ConjugacyData { classes, class_of, representatives, centralizer_orders }
    }

    /// The centralizer of `x` as a new group on the same degree.
    pub fn centralizer(&self, x: usize) -> Result<FiniteGroup> {
        let members: Vec<usize> =
            (0..self.order()).filter(|&g| self.mul(g, x) == self.mul(x, g)).collect();
        let gens: Vec<Perm> = members.iter().map(|&g| self.elements[g].clone()).collect();
        let sub = FiniteGroup::enumerate(gens)?;
        debug_assert_eq!(sub.order(), members.len());
        Ok(sub)
    }

    /// Left cosets of the subgroup whose element indices are `sub` (must be
    /// closed). Returns (coset id per element, number of cosets) where coset
    /// ids are dense in 0.. and ordered by least member element index.
    pub fn left_cosets(&self, sub: &[usize]) -> (Vec<usize>, usize) {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut next = 0usize;
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &h in sub {
                coset_of[self.mul(g, h)] = next;
            }
            next += 1;
        }
        (coset_of, next)
    }

    /// A canonical content hash of the generator list, used as the on-disk
    /// character-table cache key.
    pub fn generator_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut gens: Vec<&Perm> = self.generators.iter().collect();
        gens.sort();
        let mut h = Sha256::new();
        h.update((self.degree as u64).to_le_bytes());
        for g in gens {
            for &i in g.images() {
                h.update(i.to_le_bytes());
            }
            h.update([0xff]);
        }
        format!("{:x}", h.finalize())
    }
}

/// Generators for the symmetric group on `n` points.
pub fn symmetric_group_gens(n: usize) -> Vec<Perm> {
    assert!(n >= 1);
    if n == 1 {
        return vec![Perm::identity(1)];
    }
    let transposition = Perm::from_cycles(n, &[&[0, 1]]).unwrap();
    if n == 2 {
        return vec![transposition];
    }
    let cycle: Vec<u16> = (0..n as u16).collect();
    vec![transposition, Perm::from_cycles(n, &[&cycle]).unwrap()]
}

pub fn symmetric_group(n: usize) -> FiniteGroup {
    FiniteGroup::enumerate(symmetric_group_gens(n)).unwrap()
}

pub fn cyclic_group(n: usize) -> FiniteGroup {
    let cycle: Vec<u16> = (0..n as u16).collect();
    FiniteGroup::enumerate(vec![Perm::from_cycles(n, &[&cycle]).unwrap()]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_group() {
        let g = FiniteGroup::enumerate(vec![Perm::from_cycles(2, &[&[0, 1]]).unwrap()]).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn s3_structure() {
        let g = symmetric_group(3);
        assert_eq!(g.order(), 6);
        let cd = g.conjugacy_classes();
        let mut sizes: Vec<usize> = cd.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        // orbit-stabilizer on every class
        for (c, &z) in cd.classes.iter().zip(&cd.centralizer_orders) {
            assert_eq!(c.len() * z, g.order());
        }
    }

    #[test]
    fn order_cap() {
        let gens = symmetric_group_gens(8);
        match FiniteGroup::enumerate_with_cap(gens, 1000) {
            Err(Error::OrderCapExceeded { cap: 1000 }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn centralizer_cases() {
        let g = symmetric_group(3);
        assert_eq!(g.centralizer(0).unwrap().order(), 6);
        let transposition = g.index_of(&Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        assert_eq!(g.centralizer(transposition).unwrap().order(), 2);

        let s5 = symmetric_group(5);
        let five_cycle = s5.index_of(&Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()).unwrap();
        assert_eq!(s5.centralizer(five_cycle).unwrap().order(), 5);
    }

    #[test]
    fn exponent_of_s4() {
        assert_eq!(symmetric_group(4).exponent(), 12);
    }
}
