//! Root systems of classical and exceptional Cartan types, with Weyl groups
//! realized as permutation groups on the root list. Roots are stored as
//! integer coordinate vectors in the simple-root basis, so closure tests and
//! Cartan integers are exact.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Perm;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// One irreducible factor with its rank and twist label (1 = split).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct CartanComponent {
    pub family: Family,
    pub rank: usize,
    pub twist: u8,
}

/// A (possibly reducible) Cartan type.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct CartanType {
    pub components: Vec<CartanComponent>,
}

impl CartanComponent {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Self::twisted(family, rank, 1)
    }

    pub fn twisted(family: Family, rank: usize, twist: u8) -> Result<Self> {
        let rank_ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !rank_ok {
            return Err(Error::UnsupportedType(format!(
                "{}{rank}: rank out of range",
                family.letter()
            )));
        }
        let twist_ok = match twist {
            1 => true,
            2 => matches!(
                (family, rank),
                (Family::A, _) | (Family::D, _) | (Family::E, 6)
                    // Suzuki-Ree labels are accepted but data-incomplete
                    | (Family::B, 2) | (Family::F, 4) | (Family::G, 2)
            ),
            3 => family == Family::D && rank == 4,
            _ => false,
        };
        if !twist_ok {
            return Err(Error::UnsupportedType(format!(
                "{}{}{rank}: invalid twist",
                twist,
                family.letter()
            )));
        }
        Ok(CartanComponent { family, rank, twist })
    }

    /// Number of roots of the split form.
    pub fn num_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Classical Weyl group order.
    pub fn weyl_order(&self) -> u64 {
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        let n = self.rank;
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Cartan matrix (rows/cols in Bourbaki order) and half squared lengths
    /// `d[i]` such that gram[i][j] = cartan[i][j] * d[j] is symmetric.
    fn cartan_and_lengths(&self) -> (Vec<Vec<i64>>, Vec<i64>) {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
        }
        let mut chain = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        let d: Vec<i64>;
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    chain(i, i + 1);
                }
                d = vec![1; n];
            }
            Family::B => {
                // last simple root short
                for i in 0..n - 1 {
                    chain(i, i + 1);
                }
                c[n - 2][n - 1] = -2;
                c[n - 1][n - 2] = -1;
                let mut dd = vec![2; n];
                dd[n - 1] = 1;
                d = dd;
            }
            Family::C => {
                // last simple root long
                for i in 0..n - 1 {
                    chain(i, i + 1);
                }
                c[n - 2][n - 1] = -1;
                c[n - 1][n - 2] = -2;
                let mut dd = vec![1; n];
                dd[n - 1] = 2;
                d = dd;
            }
            Family::D => {
                // chain 0..n-2 with a fork to n-1 at node n-3
                if n >= 3 {
                    for i in 0..n - 2 {
                        chain(i, i + 1);
                    }
                    chain(n - 3, n - 1);
                }
                // n == 2: two disconnected A1 nodes
                d = vec![1; n];
            }
            Family::E => {
                // Bourbaki: node 1 attached to node 3 (0-based: 1 to 2);
                // chain 0-2-3-4-..; here use: chain through 0,2,3,4,.. and
                // node 1 hangs off node 3 (0-based index 3).
                chain(0, 2);
                for i in 2..n - 1 {
                    chain(i, i + 1);
                }
                chain(1, 3);
                d = vec![1; n];
            }
            Family::F => {
                chain(0, 1);
                chain(2, 3);
                c[1][2] = -2;
                c[2][1] = -1;
                d = vec![2, 2, 1, 1];
            }
            Family::G => {
                c[0][1] = -1;
                c[1][0] = -3;
                d = vec![1, 3];
            }
        }
        (c, d)
    }
}

impl CartanType {
    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Ok(CartanType { components: vec![CartanComponent::new(family, rank)?] })
    }

    pub fn new(components: Vec<CartanComponent>) -> Result<Self> {
        if components.is_empty() {
            return Ok(CartanType { components });
        }
        Ok(CartanType { components })
    }

    pub fn empty() -> Self {
        CartanType { components: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn num_roots(&self) -> usize {
        self.components.iter().map(|c| c.num_roots()).sum()
    }

    pub fn weyl_order(&self) -> u64 {
        self.components.iter().map(|c| c.weyl_order()).product()
    }

    pub fn is_twisted(&self) -> bool {
        self.components.iter().any(|c| c.twist != 1)
    }

    /// The split form (twist labels dropped).
    pub fn split_form(&self) -> CartanType {
        CartanType {
            components: self
                .components
                .iter()
                .map(|c| CartanComponent { twist: 1, ..*c })
                .collect(),
        }
    }

    /// The dual type: B_n and C_n swap, everything else is self-dual.
    pub fn dual(&self) -> CartanType {
        CartanType {
            components: self
                .components
                .iter()
                .map(|c| {
                    let family = match (c.family, c.rank) {
                        (Family::B, r) if r >= 3 => Family::C,
                        (Family::C, r) if r >= 3 => Family::B,
                        (f, _) => f,
                    };
                    CartanComponent { family, ..*c }
                })
                .collect(),
        }
    }

    /// Canonical order of the components, for stable labels.
    pub fn normalized(&self) -> CartanType {
        let mut comps = self.components.clone();
        comps.sort();
        CartanType { components: comps }
    }

    /// Parse labels like "A1", "2A3", "3D4", "B2xG2".
    pub fn parse(s: &str) -> Result<Self> {
        let mut comps = Vec::new();
        for part in s.split(['x', '+']) {
            let part = part.trim();
            if part.is_empty() || part == "0" || part.eq_ignore_ascii_case("empty") {
                continue;
            }
            let bytes = part.as_bytes();
            let mut i = 0;
            let mut twist = 1u8;
            if bytes[0] == b'2' || bytes[0] == b'3' {
                twist = bytes[0] - b'0';
                i = 1;
            }
            if i >= bytes.len() {
                return Err(Error::UnsupportedType(part.to_string()));
            }
            let family = match bytes[i].to_ascii_uppercase() {
                b'A' => Family::A,
                b'B' => Family::B,
                b'C' => Family::C,
                b'D' => Family::D,
                b'E' => Family::E,
                b'F' => Family::F,
                b'G' => Family::G,
                _ => return Err(Error::UnsupportedType(part.to_string())),
            };
            let rank: usize = part[i + 1..]
                .parse()
                .map_err(|_| Error::UnsupportedType(part.to_string()))?;
            comps.push(CartanComponent::twisted(family, rank, twist)?);
        }
        Ok(CartanType { components: comps })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                if c.twist == 1 {
                    format!("{}{}", c.family.letter(), c.rank)
                } else {
                    format!("{}{}{}", c.twist, c.family.letter(), c.rank)
                }
            })
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// A concrete root system with its Weyl group acting on the root list.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub cartan_type: CartanType,
    pub rank: usize,
    /// All roots in the simple-root basis; positives first, then the
    /// negation of each positive in the same order.
    pub roots: Vec<Vec<i64>>,
    pub num_positive: usize,
    /// Cartan matrix of the full (possibly reducible) type.
    pub cartan: Vec<Vec<i64>>,
    /// Symmetric Gram matrix of the simple roots (integer normalization).
    pub gram: Vec<Vec<i64>>,
    /// The Weyl group as a permutation group on `roots`.
    pub weyl: FiniteGroup,
    /// Index of each simple reflection inside `weyl`.
    pub simple_reflections: Vec<usize>,
    root_index: HashMap<Vec<i64>, usize>,
}

/// Cap on Weyl enumeration; everything in the curated support set is far
/// below this.
const WEYL_CAP: usize = 1_000_000;

fn supported_for_build(c: &CartanComponent) -> bool {
    match c.family {
        Family::A => c.rank <= 5,
        Family::B | Family::C | Family::D => c.rank <= 5,
        Family::F => true,
        Family::G => true,
        Family::E => false,
    }
}

impl RootSystemData {
    pub fn build(cartan_type: &CartanType) -> Result<Self> {
        for c in &cartan_type.components {
            if !supported_for_build(c) {
                return Err(Error::UnsupportedType(format!(
                    "{cartan_type}: component beyond the desk-scale build cap"
                )));
            }
        }
        let rank = cartan_type.rank();
        if rank == 0 {
            return Err(Error::UnsupportedType("empty type has no root system".into()));
        }
        // assemble block-diagonal Cartan and Gram matrices
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut d = vec![0i64; rank];
        let mut off = 0usize;
        for comp in &cartan_type.components {
            let (c, dl) = comp.cartan_and_lengths();
            for i in 0..comp.rank {
                for j in 0..comp.rank {
                    cartan[off + i][off + j] = c[i][j];
                }
                d[off + i] = dl[i];
            }
            off += comp.rank;
        }
        let mut gram = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                gram[i][j] = cartan[i][j] * d[j];
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                debug_assert_eq!(gram[i][j], gram[j][i], "gram must be symmetric");
            }
        }

        // generate all roots by closing the simple roots under simple
        // reflections: s_j(v) = v - <v, alpha_j^vee> e_j
        let reflect = |v: &[i64], j: usize, cartan: &Vec<Vec<i64>>| -> Vec<i64> {
            let pairing: i64 = (0..rank).map(|i| v[i] * cartan[i][j]).sum();
            let mut w = v.to_vec();
            w[j] -= pairing;
            w
        };
        let mut set: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            set.insert(e.clone(), ());
            queue.push(e);
        }
        while let Some(v) = queue.pop() {
            for j in 0..rank {
                let w = reflect(&v, j, &cartan);
                if !set.contains_key(&w) {
                    set.insert(w.clone(), ());
                    queue.push(w);
                }
            }
        }
        let mut positives: Vec<Vec<i64>> = set
            .keys()
            .filter(|v| v.iter().sum::<i64>() > 0)
            .cloned()
            .collect();
        positives.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
        let num_positive = positives.len();
        let mut roots = positives;
        for i in 0..num_positive {
            let neg: Vec<i64> = roots[i].iter().map(|x| -x).collect();
            roots.push(neg);
        }
        debug_assert_eq!(roots.len(), cartan_type.num_roots());
        let root_index: HashMap<Vec<i64>, usize> =
            roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();

        // simple reflections as permutations of the root list
        let mut gens = Vec::with_capacity(rank);
        for j in 0..rank {
            let images: Vec<u16> = roots
                .iter()
                .map(|v| root_index[&reflect(v, j, &cartan)] as u16)
                .collect();
            gens.push(Perm::from_images(images)?);
        }
        let weyl = FiniteGroup::enumerate_with_cap(gens.clone(), WEYL_CAP)?;
        let simple_reflections: Vec<usize> =
            gens.iter().map(|g| weyl.index_of(g).unwrap()).collect();

        Ok(RootSystemData {
            cartan_type: cartan_type.clone(),
            rank,
            roots,
            num_positive,
            cartan,
            gram,
            weyl,
            simple_reflections,
            root_index,
        })
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    pub fn negative_of(&self, i: usize) -> usize {
        if i < self.num_positive {
            i + self.num_positive
        } else {
            i - self.num_positive
        }
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive
    }

    /// Inner product of two roots via the Gram matrix.
    pub fn inner(&self, a: usize, b: usize) -> i64 {
        let (u, v) = (&self.roots[a], &self.roots[b]);
        let mut acc = 0i64;
        for i in 0..self.rank {
            if u[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if v[j] != 0 {
                    acc += u[i] * self.gram[i][j] * v[j];
                }
            }
        }
        acc
    }

    /// Cartan integer 2(a,b)/(b,b).
    pub fn cartan_pairing(&self, a: usize, b: usize) -> i64 {
        let num = 2 * self.inner(a, b);
        let den = self.inner(b, b);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Index of `a + b` inside the root list, when it is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let v: Vec<i64> =
            self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.root_index.get(&v).copied()
    }

    /// The diagram automorphism of the requested order as a permutation of
    /// the root list (normalizing the Weyl action).
    pub fn diagram_automorphism(&self, order: u8) -> Result<Perm> {
        if self.cartan_type.components.len() != 1 {
            return Err(Error::UnsupportedType(
                "diagram automorphism only supported for irreducible types".into(),
            ));
        }
        let comp = self.cartan_type.components[0];
        let n = self.rank;
        let simple_perm: Vec<usize> = match (order, comp.family, comp.rank) {
            (2, Family::A, r) if r >= 2 => (0..n).rev().collect(),
            (2, Family::D, r) if r >= 3 => {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(n - 2, n - 1);
                p
            }
            (3, Family::D, 4) => vec![2, 1, 3, 0],
            _ => {
                return Err(Error::UnsupportedType(format!(
                    "{} admits no diagram automorphism of order {order}",
                    self.cartan_type
                )))
            }
        };
        // validate: the permutation must preserve the Cartan matrix
        for i in 0..n {
            for j in 0..n {
                if self.cartan[simple_perm[i]][simple_perm[j]] != self.cartan[i][j] {
                    return Err(Error::Internal(
                        "diagram permutation does not preserve the Cartan matrix".into(),
                    ));
                }
            }
        }
        let images: Vec<u16> = self
            .roots
            .iter()
            .map(|v| {
                let mut w = vec![0i64; n];
                for i in 0..n {
                    w[simple_perm[i]] = v[i];
                }
                self.root_index[&w] as u16
            })
            .collect();
        Perm::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(label: &str) -> RootSystemData {
        RootSystemData::build(&CartanType::parse(label).unwrap()).unwrap()
    }

    #[test]
    fn classical_counts() {
        // (label, #roots, |W|)
        let table: &[(&str, usize, u64)] = &[
            ("A1", 2, 2),
            ("A2", 6, 6),
            ("A3", 12, 24),
            ("A4", 20, 120),
            ("B2", 8, 8),
            ("C2", 8, 8),
            ("B3", 18, 48),
            ("C3", 18, 48),
            ("B4", 32, 384),
            ("D4", 24, 192),
            ("D5", 40, 1920),
            ("G2", 12, 12),
            ("F4", 48, 1152),
            ("A1xB2", 10, 16),
        ];
        for &(label, nroots, worder) in table {
            let rs = build(label);
            assert_eq!(rs.num_roots(), nroots, "{label} roots");
            assert_eq!(rs.weyl.order() as u64, worder, "{label} weyl order");
            assert_eq!(rs.num_roots(), rs.cartan_type.num_roots());
            assert_eq!(worder, rs.cartan_type.weyl_order());
        }
    }

    #[test]
    fn roots_closed_under_negation() {
        let rs = build("G2");
        for i in 0..rs.num_roots() {
            let j = rs.negative_of(i);
            let neg: Vec<i64> = rs.roots[i].iter().map(|x| -x).collect();
            assert_eq!(rs.roots[j], neg);
        }
    }

    #[test]
    fn parse_and_display() {
        for s in ["A1", "2A3", "3D4", "B2xG2", "C3"] {
            let t = CartanType::parse(s).unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!(CartanType::parse("E9").is_err());
        assert!(CartanType::parse("H3").is_err());
        assert!(CartanType::parse("2B3").is_err());
    }

    #[test]
    fn dual_types() {
        assert_eq!(CartanType::parse("B3").unwrap().dual(), CartanType::parse("C3").unwrap());
        assert_eq!(CartanType::parse("B2").unwrap().dual(), CartanType::parse("B2").unwrap());
        assert_eq!(CartanType::parse("A4").unwrap().dual(), CartanType::parse("A4").unwrap());
    }

    #[test]
    fn automorphism_a2_swaps_simples() {
        let rs = build("A2");
        let tau = rs.diagram_automorphism(2).unwrap();
        // simple roots are roots 0 and 1 (height one)
        let e0 = rs.root_index(&[1, 0]).unwrap();
        let e1 = rs.root_index(&[0, 1]).unwrap();
        assert_eq!(tau.apply(e0 as u16) as usize, e1);
        assert_eq!(tau.order(), 2);
    }

    #[test]
    fn automorphism_rejected_for_a1() {
        let rs = build("A1");
        assert!(rs.diagram_automorphism(2).is_err());
    }

    #[test]
    fn triality_on_d4() {
        let rs = build("D4");
        let tau = rs.diagram_automorphism(3).unwrap();
        assert_eq!(tau.order(), 3);
        // tau normalizes W: conjugates of the simple reflections are again
        // reflections (elements of W of order 2 fixing a root pair)
        for &s in &rs.simple_reflections {
            let p = tau.compose(rs.weyl.element(s)).compose(&tau.inverse());
            let idx = rs.weyl.index_of(&p);
            assert!(idx.is_some(), "conjugate must stay in W");
            assert_eq!(p.order(), 2);
        }
    }

    #[test]
    fn tau_normalizes_weyl_a3() {
        let rs = build("A3");
        let tau = rs.diagram_automorphism(2).unwrap();
        for &s in &rs.simple_reflections {
            let p = tau.compose(rs.weyl.element(s)).compose(&tau.inverse());
            assert!(rs.weyl.index_of(&p).is_some());
        }
    }

    #[test]
    fn oversized_type_rejected() {
        assert!(RootSystemData::build(&CartanType::parse("A6").unwrap()).is_err());
        assert!(RootSystemData::build(&CartanType::parse("E6").unwrap()).is_err());
    }
}
