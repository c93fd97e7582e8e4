//! Closed subsystems of a root system, up to Weyl-group conjugacy.
//!
//! Two engines are provided: an exhaustive scan over subsets of the positive
//! roots (used when the positive count is small), and the Borel-de Siebenthal
//! recursion through extended-diagram and Levi node deletions (used for the
//! larger ranks). Both deduplicate by a canonical W-orbit representative, so
//! their outputs can be compared directly.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::roots::{CartanComponent, CartanType, Family, RootSystemData};

/// One W-conjugacy class of closed subsystems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemRecord {
    /// Canonical representative: sorted root indices into the ambient list.
    pub roots: Vec<u16>,
    pub cartan_type: CartanType,
    pub rank: usize,
    pub is_proper: bool,
}

/// Root subsets as bitmasks over the ambient root list (at most 50 roots for
/// every supported type, so u128 is plenty).
pub type RootMask = u128;

pub struct SubsystemContext<'a> {
    pub rs: &'a RootSystemData,
    /// sums[i][j] = index of roots[i] + roots[j] when that is again a root.
    sums: Vec<Vec<Option<u16>>>,
}

impl<'a> SubsystemContext<'a> {
    pub fn new(rs: &'a RootSystemData) -> Result<Self> {
        let n = rs.num_roots();
        if n > 128 {
            return Err(Error::UnsupportedType(format!(
                "{}: too many roots for mask-based subsystem search",
                rs.cartan_type
            )));
        }
        let mut sums = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                sums[i][j] = rs.sum_index(i, j).map(|k| k as u16);
            }
        }
        Ok(SubsystemContext { rs, sums })
    }

    fn mask_roots(&self, mask: RootMask) -> Vec<u16> {
        (0..self.rs.num_roots() as u16).filter(|&i| mask >> i & 1 == 1).collect()
    }

    /// Is `mask` symmetric and closed under root addition?
    pub fn is_closed(&self, mask: RootMask) -> bool {
        let members = self.mask_roots(mask);
        for &i in &members {
            if mask >> self.rs.negative_of(i as usize) & 1 == 0 {
                return false;
            }
            for &j in &members {
                if let Some(k) = self.sums[i as usize][j as usize] {
                    if mask >> k & 1 == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Smallest closed symmetric subset containing `seed`.
    pub fn closure(&self, seed: &[u16]) -> RootMask {
        let mut mask: RootMask = 0;
        let mut queue: Vec<u16> = Vec::new();
        let push = |mask: &mut RootMask, queue: &mut Vec<u16>, i: u16| {
            if *mask >> i & 1 == 0 {
                *mask |= 1 << i;
                queue.push(i);
            }
        };
        for &i in seed {
            push(&mut mask, &mut queue, i);
            push(&mut mask, &mut queue, self.rs.negative_of(i as usize) as u16);
        }
        while let Some(i) = queue.pop() {
            for j in self.mask_roots(mask) {
                if let Some(k) = self.sums[i as usize][j as usize] {
                    push(&mut mask, &mut queue, k);
                }
            }
        }
        mask
    }

    /// Canonical representative of the W-orbit of `mask`: the image (as a
    /// sorted index list, equivalently the mask compared as an integer after
    /// bit reversal -- we just compare sorted lists) that is lexicographically
    /// least over all Weyl elements.
    pub fn canonical_orbit_rep(&self, mask: RootMask) -> Vec<u16> {
        let members = self.mask_roots(mask);
        let mut best: Option<Vec<u16>> = None;
        for w in self.rs.weyl.elements() {
            let mut image: Vec<u16> = members.iter().map(|&i| w.apply(i)).collect();
            image.sort_unstable();
            if best.as_ref().map_or(true, |b| image < *b) {
                best = Some(image);
            }
        }
        best.unwrap_or_default()
    }

    /// Indecomposable positive members: the simple system of the subsystem
    /// with respect to the ambient positivity.
    pub fn simple_system(&self, mask: RootMask) -> Vec<u16> {
        let positives: Vec<u16> = self
            .mask_roots(mask)
            .into_iter()
            .filter(|&i| self.rs.is_positive(i as usize))
            .collect();
        positives
            .iter()
            .copied()
            .filter(|&p| {
                !positives.iter().any(|&q| {
                    positives.iter().any(|&r| self.sums[q as usize][r as usize] == Some(p))
                })
            })
            .collect()
    }

    /// Connected components of a simple system (edges where the inner
    /// product is nonzero).
    fn components(&self, simples: &[u16]) -> Vec<Vec<u16>> {
        let n = simples.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let i = comp[head];
                head += 1;
                for j in 0..n {
                    if !seen[j]
                        && self.rs.inner(simples[i] as usize, simples[j] as usize) != 0
                    {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp.into_iter().map(|i| simples[i]).collect());
        }
        comps
    }

    /// Highest root of the irreducible subsystem generated by `simples`
    /// (greedy climb inside the closure).
    fn highest_root(&self, simples: &[u16], comp_mask: RootMask) -> u16 {
        let mut r = simples[0];
        loop {
            let mut advanced = false;
            for &d in simples {
                if let Some(k) = self.sums[r as usize][d as usize] {
                    if comp_mask >> k & 1 == 1 {
                        r = k;
                        advanced = true;
                        break;
                    }
                }
            }
            if !advanced {
                return r;
            }
        }
    }

    /// Cartan type of a closed subsystem, read off from the Cartan matrix of
    /// its simple system.
    pub fn classify(&self, mask: RootMask) -> Result<CartanType> {
        let simples = self.simple_system(mask);
        let mut comps: Vec<CartanComponent> = Vec::new();
        for comp in self.components(&simples) {
            comps.push(self.classify_component(&comp)?);
        }
        comps.sort();
        CartanType::new(comps)
    }

    fn classify_component(&self, simples: &[u16]) -> Result<CartanComponent> {
        let r = simples.len();
        let len = |i: usize| self.rs.inner(simples[i] as usize, simples[i] as usize);
        let weight = |i: usize, j: usize| {
            let a = self.rs.cartan_pairing(simples[i] as usize, simples[j] as usize);
            let b = self.rs.cartan_pairing(simples[j] as usize, simples[i] as usize);
            (a * b) as u8
        };
        if r == 1 {
            return CartanComponent::new(Family::A, 1);
        }
        let mut adj = vec![Vec::new(); r];
        let mut max_weight = 0u8;
        for i in 0..r {
            for j in i + 1..r {
                let w = weight(i, j);
                if w > 0 {
                    adj[i].push(j);
                    adj[j].push(i);
                    max_weight = max_weight.max(w);
                }
            }
        }
        if max_weight == 3 {
            if r != 2 {
                return Err(Error::DataIntegrity("triple edge in rank > 2 diagram".into()));
            }
            return CartanComponent::new(Family::G, 2);
        }
        let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
        if max_weight == 2 {
            if r == 2 {
                return CartanComponent::new(Family::B, 2);
            }
            // must be a path; order it from an endpoint
            if degrees.iter().any(|&d| d > 2) {
                return Err(Error::DataIntegrity("branching doubly-laced diagram".into()));
            }
            let start = (0..r).find(|&i| degrees[i] == 1).ok_or_else(|| {
                Error::DataIntegrity("doubly-laced diagram is not a path".into())
            })?;
            let mut path = vec![start];
            let mut prev = usize::MAX;
            while path.len() < r {
                let cur = *path.last().unwrap();
                let next = *adj[cur].iter().find(|&&x| x != prev).ok_or_else(|| {
                    Error::DataIntegrity("broken path in diagram".into())
                })?;
                prev = cur;
                path.push(next);
            }
            let double_pos = (0..r - 1)
                .find(|&k| weight(path[k], path[k + 1]) == 2)
                .expect("double edge must lie on the path");
            if double_pos != 0 && double_pos != r - 2 {
                if r == 4 {
                    return CartanComponent::new(Family::F, 4);
                }
                return Err(Error::DataIntegrity("interior double edge outside F4".into()));
            }
            // orient so the double edge is at the far end
            let ordered: Vec<usize> =
                if double_pos == 0 { path.iter().rev().copied().collect() } else { path };
            // the terminal node: short for B, long for C
            let (end, before) = (ordered[r - 1], ordered[r - 2]);
            let family = if len(end) < len(before) { Family::B } else { Family::C };
            return CartanComponent::new(family, r);
        }
        // simply laced
        if degrees.iter().all(|&d| d <= 2) {
            return CartanComponent::new(Family::A, r);
        }
        let center = (0..r).find(|&i| degrees[i] == 3).unwrap();
        if degrees.iter().filter(|&&d| d == 3).count() != 1 {
            return Err(Error::DataIntegrity("diagram with multiple branch nodes".into()));
        }
        let mut arms: Vec<usize> = adj[center]
            .iter()
            .map(|&first| {
                let mut length = 1;
                let (mut prev, mut cur) = (center, first);
                while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                    prev = cur;
                    cur = next;
                    length += 1;
                }
                length
            })
            .collect();
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, _] => CartanComponent::new(Family::D, r),
            [1, 2, k] if (2..=4).contains(k) => CartanComponent::new(Family::E, r),
            _ => Err(Error::DataIntegrity("unrecognized branching diagram".into())),
        }
    }

    fn record(&self, canonical: Vec<u16>) -> Result<SubsystemRecord> {
        let mask: RootMask = canonical.iter().fold(0, |m, &i| m | 1 << i);
        debug_assert!(self.is_closed(mask), "canonical set must re-verify as closed");
        let cartan_type = self.classify(mask)?;
        let rank = cartan_type.rank();
        let is_proper = canonical.len() < self.rs.num_roots();
        Ok(SubsystemRecord { roots: canonical, cartan_type, rank, is_proper })
    }

    /// Exhaustive engine: every subset of the positive roots whose symmetric
    /// span is closed.
    pub fn enumerate_exhaustive(&self) -> Result<Vec<SubsystemRecord>> {
        let np = self.rs.num_positive;
        if np > 20 {
            return Err(Error::UnsupportedType(
                "exhaustive subsystem scan limited to 20 positive roots".into(),
            ));
        }
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        let mut out = Vec::new();
        for bits in 0u32..1 << np {
            let mut mask: RootMask = 0;
            for i in 0..np {
                if bits >> i & 1 == 1 {
                    mask |= 1 << i;
                    mask |= 1 << self.rs.negative_of(i);
                }
            }
            if !self.is_closed(mask) {
                continue;
            }
            let canonical = self.canonical_orbit_rep(mask);
            if seen.insert(canonical.clone()) {
                out.push(self.record(canonical)?);
            }
        }
        sort_records(&mut out);
        Ok(out)
    }

    /// Borel-de Siebenthal engine: recursively delete one node of an
    /// extended component diagram (maximal equal-rank subsystems) or one
    /// node of the plain diagram (Levi subsystems).
    pub fn enumerate_borel_de_siebenthal(&self) -> Result<Vec<SubsystemRecord>> {
        let full: RootMask = (0..self.rs.num_roots()).fold(0, |m, i| m | 1 << i);
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        let mut out = Vec::new();
        let mut stack = vec![full];
        // the empty subsystem is reached by deleting the last Levi node
        while let Some(mask) = stack.pop() {
            let canonical = self.canonical_orbit_rep(mask);
            if !seen.insert(canonical.clone()) {
                continue;
            }
            out.push(self.record(canonical)?);
            let simples = self.simple_system(mask);
            // Levi children: drop one simple root
            for drop in 0..simples.len() {
                let rest: Vec<u16> = simples
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != drop)
                    .map(|(_, &s)| s)
                    .collect();
                stack.push(self.closure(&rest));
            }
            // extended-diagram children: per component, add the lowest root
            // and drop one node of that component
            for comp in self.components(&simples) {
                let comp_mask = self.closure(&comp);
                let lowest =
                    self.rs.negative_of(self.highest_root(&comp, comp_mask) as usize) as u16;
                let others: Vec<u16> =
                    simples.iter().copied().filter(|s| !comp.contains(s)).collect();
                for drop in 0..comp.len() {
                    let mut seed = others.clone();
                    seed.push(lowest);
                    for (k, &s) in comp.iter().enumerate() {
                        if k != drop {
                            seed.push(s);
                        }
                    }
                    stack.push(self.closure(&seed));
                }
            }
        }
        sort_records(&mut out);
        Ok(out)
    }
}

fn sort_records(records: &mut Vec<SubsystemRecord>) {
    records.sort_by(|a, b| {
        (a.roots.len(), &a.roots).cmp(&(b.roots.len(), &b.roots))
    });
}

/// Conjugacy classes of closed subsystems of `rs`, choosing the engine by
/// size: exhaustive up to 20 positive roots, Borel-de Siebenthal above.
pub fn closed_subsystems(rs: &RootSystemData) -> Result<Vec<SubsystemRecord>> {
    let ctx = SubsystemContext::new(rs)?;
    if rs.num_positive <= 20 {
        ctx.enumerate_exhaustive()
    } else {
        ctx.enumerate_borel_de_siebenthal()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(label: &str) -> RootSystemData {
        RootSystemData::build(&CartanType::parse(label).unwrap()).unwrap()
    }

    fn type_labels(records: &[SubsystemRecord]) -> Vec<String> {
        let mut v: Vec<String> =
            records.iter().map(|r| r.cartan_type.to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn a2_has_three_classes() {
        let rs = build("A2");
        let recs = closed_subsystems(&rs).unwrap();
        assert_eq!(recs.len(), 3);
        assert_eq!(type_labels(&recs), vec!["A1", "A2", "empty"]);
    }

    #[test]
    fn g2_has_six_classes() {
        let rs = build("G2");
        let recs = closed_subsystems(&rs).unwrap();
        assert_eq!(recs.len(), 6);
        assert_eq!(
            type_labels(&recs),
            vec!["A1", "A1", "A1xA1", "A2", "G2", "empty"]
        );
        // the two A1 classes are the long and short root lines
        let ctx = SubsystemContext::new(&rs).unwrap();
        let mut a1_lengths: Vec<i64> = recs
            .iter()
            .filter(|r| r.cartan_type.to_string() == "A1")
            .map(|r| {
                let s = ctx.simple_system(r.roots.iter().fold(0, |m, &i| m | 1 << i));
                rs.inner(s[0] as usize, s[0] as usize)
            })
            .collect();
        a1_lengths.sort_unstable();
        assert_eq!(a1_lengths.len(), 2);
        assert!(a1_lengths[0] < a1_lengths[1]);
    }

    #[test]
    fn b2_subsystems() {
        let rs = build("B2");
        let recs = closed_subsystems(&rs).unwrap();
        // empty, A1 long, A1 short, A1xA1, B2
        assert_eq!(recs.len(), 5);
        assert_eq!(type_labels(&recs), vec!["A1", "A1", "A1xA1", "B2", "empty"]);
    }

    #[test]
    fn engines_agree_on_small_ranks() {
        for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
            let rs = build(label);
            let ctx = SubsystemContext::new(&rs).unwrap();
            let ex = ctx.enumerate_exhaustive().unwrap();
            let bds = ctx.enumerate_borel_de_siebenthal().unwrap();
            assert_eq!(ex, bds, "engines disagree on {label}");
        }
    }

    #[test]
    fn every_record_is_closed() {
        let rs = build("B3");
        let ctx = SubsystemContext::new(&rs).unwrap();
        for rec in closed_subsystems(&rs).unwrap() {
            let mask: RootMask = rec.roots.iter().fold(0, |m, &i| m | 1 << i);
            assert!(ctx.is_closed(mask));
            assert_eq!(rec.rank, ctx.simple_system(mask).len());
        }
    }

    #[test]
    fn b3_contains_dual_relevant_types() {
        let rs = build("B3");
        let labels = type_labels(&closed_subsystems(&rs).unwrap());
        // B3 contains A1xA1xA1 (the three orthogonal short/long pairs), B2
        // Levi, A2 Levi, and the full system among others
        assert!(labels.contains(&"B2".to_string()));
        assert!(labels.contains(&"A2".to_string()));
        assert!(labels.contains(&"B3".to_string()));
        assert!(labels.contains(&"A1xA1xA1".to_string()));
    }

    #[test]
    fn classification_of_c3_full_system() {
        let rs = build("C3");
        let ctx = SubsystemContext::new(&rs).unwrap();
        let full: RootMask = (0..rs.num_roots()).fold(0, |m, i| m | 1 << i);
        assert_eq!(ctx.classify(full).unwrap().to_string(), "C3");
    }

    #[test]
    fn bds_handles_rank_five() {
        let rs = build("B5");
        let ctx = SubsystemContext::new(&rs).unwrap();
        let recs = ctx.enumerate_borel_de_siebenthal().unwrap();
        let labels = type_labels(&recs);
        assert!(labels.contains(&"B5".to_string()));
        assert!(labels.contains(&"A4".to_string()));
        assert!(labels.contains(&"B4".to_string()));
        assert!(labels.contains(&"empty".to_string()));
        // D5 sits inside B5 as the long-root subsystem
        assert!(labels.contains(&"D5".to_string()));
    }
}
