//! Exact character tables by the Dixon-Schneider method: simultaneous
//! eigenvectors of the class-sum matrices over a suitable prime field,
//! lifted to cyclotomic values through power-map multiplicities.

use std::sync::Arc;

use crate::classfn::{inner_product, ClassContext, ClassFunction};
use crate::cyclo::{rat_int, Cyclotomic};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub ctx: Arc<ClassContext>,
    /// Sorted by degree, then lexicographically by value sequence.
    pub irreducibles: Vec<ClassFunction>,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime p = 1 mod exponent with p > 2*sqrt(|G|).
fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let floor = 2.0 * (order as f64).sqrt();
    let mut p = exponent + 1;
    loop {
        if (p as f64) > floor && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'cand: for g in 2..p {
        for &f in &factors {
            if pow_mod(g, (p - 1) / f, p) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("prime has a primitive root")
}

/// A subspace of F_p^n kept in reduced row echelon form.
struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_rows(mut rows: Vec<Vec<u64>>, p: u64) -> Subspace {
        let n = rows[0].len();
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..n {
            let Some(r) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, r);
            let inv = inv_mod(rows[rank][col], p);
            for x in rows[rank].iter_mut() {
                *x = *x * inv % p;
            }
            for r2 in 0..rows.len() {
                if r2 != rank && rows[r2][col] != 0 {
                    let f = rows[r2][col];
                    for c in 0..n {
                        let sub = f * rows[rank][c] % p;
                        rows[r2][c] = (rows[r2][c] + p - sub) % p;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        Subspace { rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Characteristic polynomial mod p via Hessenberg reduction; returns
/// coefficients of det(xI - R), lowest degree first.
fn char_poly(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    // reduce to upper Hessenberg by similarity
    for col in 0..n.saturating_sub(2) {
        if let Some(piv) = ((col + 1)..n).find(|&r| h[r][col] != 0) {
            h.swap(piv, col + 1);
            for r in 0..n {
                h[r].swap(piv, col + 1);
            }
            let inv = inv_mod(h[col + 1][col], p);
            for r in (col + 2)..n {
                if h[r][col] != 0 {
                    let f = h[r][col] * inv % p;
                    for c in 0..n {
                        let sub = f * h[col + 1][c] % p;
                        h[r][c] = (h[r][c] + p - sub) % p;
                    }
                    // column operation: col+1 += f * r
                    for r2 in 0..n {
                        let add = f * h[r2][r] % p;
                        h[r2][col + 1] = (h[r2][col + 1] + add) % p;
                    }
                }
            }
        }
    }
    // char poly of Hessenberg by recurrence; p_k = char poly of leading k x k
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        // p_k(x) = (x - h[k-1][k-1]) p_{k-1}(x)
        //          - sum_{m=1}^{k-1} h[k-1-m][k-1] * (prod subdiag) * p_{k-1-m}(x)
        let mut pk = vec![0u64; k + 1];
        let prev = &polys[k - 1];
        for (d, &c) in prev.iter().enumerate() {
            pk[d + 1] = (pk[d + 1] + c) % p;
            let sub = h[k - 1][k - 1] * c % p;
            pk[d] = (pk[d] + p - sub) % p;
        }
        let mut beta = 1u64;
        for m in 1..k {
            beta = beta * h[k - m][k - m - 1] % p;
            if beta == 0 {
                break;
            }
            let coeff = h[k - 1 - m][k - 1] * beta % p;
            if coeff == 0 {
                continue;
            }
            for (d, &c) in polys[k - 1 - m].iter().enumerate() {
                let sub = coeff * c % p;
                pk[d] = (pk[d] + p - sub) % p;
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

fn poly_roots(poly: &[u64], p: u64) -> Vec<u64> {
    let mut roots = Vec::new();
    for x in 0..p {
        let mut acc = 0u64;
        for &c in poly.iter().rev() {
            acc = (acc * x + c) % p;
        }
        if acc == 0 {
            roots.push(x);
        }
    }
    roots
}

/// Nullspace basis of a square matrix mod p.
fn nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut pivot_of_col = vec![usize::MAX; n];
    let mut rank = 0usize;
    for col in 0..n {
        let Some(r) = (rank..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, r);
        let inv = inv_mod(m[rank][col], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r2 in 0..n {
            if r2 != rank && m[r2][col] != 0 {
                let f = m[r2][col];
                for c in 0..n {
                    let sub = f * m[rank][c] % p;
                    m[r2][c] = (m[r2][c] + p - sub) % p;
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
    }
    let mut basis = Vec::new();
    for col in 0..n {
        if pivot_of_col[col] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; n];
        v[col] = 1;
        for c in 0..n {
            let r = pivot_of_col[c];
            if r != usize::MAX {
                v[c] = (p - m[r][col] % p) % p;
            }
        }
        basis.push(v);
    }
    basis
}

/// Exact character table of the group behind `ctx`.
pub fn character_table(ctx: Arc<ClassContext>) -> Result<CharacterTable> {
    let g = &ctx.group;
    let conj = &ctx.conj;
    let n = conj.classes.len();
    let order = g.order() as u64;

    if n == 1 {
        let chi = ClassFunction::new(ctx.clone(), vec![Cyclotomic::one()]);
        return Ok(CharacterTable { ctx, irreducibles: vec![chi] });
    }

    // power maps and class data
    let reps: Vec<usize> = conj.representatives.clone();
    let sizes: Vec<u64> = conj.classes.iter().map(|c| c.len() as u64).collect();
    let rep_orders: Vec<u64> = reps.iter().map(|&r| g.element_order(r)).collect();
    let exponent = rep_orders.iter().fold(1u64, |a, &b| num_integer::lcm(a, b));
    let p = dixon_prime(exponent, order);
    let z = primitive_root(p);

    // class multiplication coefficients: mats[i][j][k] = #{(x,y) in C_i x C_j : xy = g_k}
    let mut mats = vec![vec![vec![0u64; n]; n]; n];
    for (k, &gk) in reps.iter().enumerate() {
        for x in 0..g.order() {
            let i = conj.class_of[x];
            let j = conj.class_of[g.mul(g.inv(x), gk)];
            mats[i][j][k] += 1;
        }
    }

    // split F_p^n into common eigenspaces of the class matrices
    let mut spaces = vec![Subspace::from_rows(
        (0..n).map(|r| (0..n).map(|c| u64::from(r == c)).collect()).collect(),
        p,
    )];
    for mi in &mats {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
                continue;
            }
            let d = s.dim();
            // images of basis rows under M_i
            let images: Vec<Vec<u64>> = s
                .rows
                .iter()
                .map(|v| {
                    (0..n)
                        .map(|j| {
                            let mut acc = 0u64;
                            for k in 0..n {
                                if v[k] != 0 && mi[j][k] != 0 {
                                    acc = (acc + mi[j][k] * v[k]) % p;
                                }
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            // restriction matrix: R[s'][r] = coefficient of basis row s' in image of row r
            let mut rmat = vec![vec![0u64; d]; d];
            for (r, w) in images.iter().enumerate() {
                for (s2, &piv) in s.pivots.iter().enumerate() {
                    rmat[s2][r] = w[piv];
                }
            }
            let cp = char_poly(rmat.clone(), p);
            let roots = poly_roots(&cp, p);
            if roots.len() <= 1 {
                next.push(s);
                continue;
            }
            for lam in roots {
                let mut shifted = rmat.clone();
                for i in 0..d {
                    shifted[i][i] = (shifted[i][i] + p - lam) % p;
                }
                let null = nullspace(shifted, p);
                if null.is_empty() {
                    continue;
                }
                let ambient: Vec<Vec<u64>> = null
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; n];
                        for (r, &c) in coords.iter().enumerate() {
                            if c != 0 {
                                for (col, &b) in s.rows[r].iter().enumerate() {
                                    v[col] = (v[col] + c * b) % p;
                                }
                            }
                        }
                        v
                    })
                    .collect();
                next.push(Subspace::from_rows(ambient, p));
            }
        }
        spaces = next;
    }
    if spaces.len() != n || spaces.iter().any(|s| s.dim() != 1) {
        return Err(Error::Internal("class matrices failed to split the class algebra".into()));
    }

    // inverse classes
    let inv_class: Vec<usize> = reps.iter().map(|&r| conj.class_of[g.inv(r)]).collect();

    let mut irreducibles = Vec::with_capacity(n);
    for s in &spaces {
        let v = &s.rows[0];
        if v[0] == 0 {
            return Err(Error::Internal("eigenvector vanishes at the identity class".into()));
        }
        let norm = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| x * norm % p).collect();
        // degree from the orthogonality relation
        let mut s_acc = 0u64;
        for j in 0..n {
            s_acc = (s_acc + omega[j] * omega[inv_class[j]] % p * inv_mod(sizes[j], p)) % p;
        }
        let d_sq = order % p * inv_mod(s_acc, p) % p;
        let deg = (1..p / 2 + 1)
            .find(|&t| t * t % p == d_sq)
            .ok_or_else(|| Error::Internal("degree square root not found".into()))?;
        // mod-p character values per class
        let chi_p: Vec<u64> = (0..n).map(|j| deg * omega[j] % p * inv_mod(sizes[j], p) % p).collect();

        // lift class by class through power-map multiplicities
        let mut values = Vec::with_capacity(n);
        for j in 0..n {
            let o = rep_orders[j];
            if o == 1 {
                values.push(Cyclotomic::from_rational(rat_int(deg as i64)));
                continue;
            }
            // classes of powers of the representative
            let mut power_class = Vec::with_capacity(o as usize);
            let mut acc = 0usize; // identity
            for _ in 0..o {
                power_class.push(conj.class_of[acc]);
                acc = g.mul(acc, reps[j]);
            }
            let zo = pow_mod(z, (p - 1) / o, p);
            let zo_inv = inv_mod(zo, p);
            let o_inv = inv_mod(o % p, p);
            let mut value = Cyclotomic::zero();
            for k in 0..o {
                let mut m = 0u64;
                for (t, &ct) in power_class.iter().enumerate() {
                    m = (m + chi_p[ct] * pow_mod(zo_inv, t as u64 * k % o, p)) % p;
                }
                m = m * o_inv % p;
                if m == 0 {
                    continue;
                }
                if m > deg {
                    return Err(Error::Internal(format!(
                        "character lift produced multiplicity {m} above degree {deg}"
                    )));
                }
                let term = Cyclotomic::root_of_unity(o, k as i64)?.scale(&rat_int(m as i64));
                value = value.add(&term);
            }
            values.push(value);
        }
        irreducibles.push(ClassFunction::new(ctx.clone(), values));
    }

    // fixed ordering: by degree, then lexicographic value sequence
    irreducibles.sort_by(|a, b| {
        a.degree()
            .cmp(b.degree())
            .then_with(|| a.values.cmp(&b.values))
    });

    // lift-failure guard: every row must have norm exactly 1
    for chi in &irreducibles {
        let norm = inner_product(chi, chi)?;
        if norm != Cyclotomic::one() {
            return Err(Error::Internal("lifted character has norm != 1".into()));
        }
    }

    Ok(CharacterTable { ctx, irreducibles })
}

impl CharacterTable {
    /// Sum of squared degrees, for sanity checks.
    pub fn degree_square_sum(&self) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for chi in &self.irreducibles {
            acc = acc.add(&chi.degree().mul(chi.degree()));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group};
    use crate::perm::Perm;

    fn table_of(g: crate::group::FiniteGroup) -> CharacterTable {
        character_table(Arc::new(ClassContext::new(g))).unwrap()
    }

    fn degrees(t: &CharacterTable) -> Vec<i64> {
        t.irreducibles
            .iter()
            .map(|c| {
                let r = c.degree().as_rational().unwrap();
                assert!(r.is_integer());
                use num_traits::ToPrimitive;
                r.to_integer().to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn cyclic_of_order_2() {
        let t = table_of(cyclic_group(2));
        assert_eq!(degrees(&t), vec![1, 1]);
        let m: Vec<Vec<Cyclotomic>> =
            t.irreducibles.iter().map(|c| c.values.clone()).collect();
        let one = Cyclotomic::one();
        let neg = Cyclotomic::from_int(-1);
        assert!(m.contains(&vec![one.clone(), one.clone()]));
        assert!(m.contains(&vec![one, neg]));
    }

    #[test]
    fn s3_table() {
        let t = table_of(symmetric_group(3));
        assert_eq!(degrees(&t), vec![1, 1, 2]);
        assert_eq!(t.degree_square_sum(), Cyclotomic::from_int(6));
    }

    #[test]
    fn s5_table() {
        let t = table_of(symmetric_group(5));
        let mut d = degrees(&t);
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 4, 4, 5, 5, 6]);
    }

    #[test]
    fn cyclic_4_has_complex_values() {
        let t = table_of(cyclic_group(4));
        assert_eq!(degrees(&t), vec![1, 1, 1, 1]);
        let i = Cyclotomic::root_of_unity(4, 1).unwrap();
        assert!(t.irreducibles.iter().any(|c| c.values.contains(&i)));
    }

    #[test]
    fn row_orthogonality_s4() {
        let t = table_of(symmetric_group(4));
        for (a, ca) in t.irreducibles.iter().enumerate() {
            for (b, cb) in t.irreducibles.iter().enumerate() {
                let ip = inner_product(ca, cb).unwrap();
                let expect =
                    if a == b { Cyclotomic::one() } else { Cyclotomic::zero() };
                assert_eq!(ip, expect, "rows {a},{b}");
            }
        }
    }

    #[test]
    fn column_orthogonality_s4() {
        let t = table_of(symmetric_group(4));
        let n = t.ctx.num_classes();
        for gc in 0..n {
            for hc in 0..n {
                let mut acc = Cyclotomic::zero();
                for chi in &t.irreducibles {
                    acc = acc.add(&chi.values[gc].mul(&chi.values[hc].conj()));
                }
                let expect = if gc == hc {
                    Cyclotomic::from_int(t.ctx.conj.centralizer_orders[gc] as i64)
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(acc, expect);
            }
        }
    }

    #[test]
    fn deterministic_ordering() {
        let t1 = table_of(symmetric_group(4));
        let t2 = table_of(symmetric_group(4));
        for (a, b) in t1.irreducibles.iter().zip(&t2.irreducibles) {
            assert_eq!(a.values, b.values);
        }
    }

    #[test]
    fn regular_character_decomposition() {
        // <regular, chi> = chi(1)
        let g = symmetric_group(3);
        let t = table_of(g);
        let ctx = t.ctx.clone();
        let mut reg_values = vec![Cyclotomic::zero(); ctx.num_classes()];
        reg_values[0] = Cyclotomic::from_int(ctx.group.order() as i64);
        let reg = ClassFunction::new(ctx, reg_values);
        for chi in &t.irreducibles {
            assert_eq!(&inner_product(&reg, chi).unwrap(), chi.degree());
        }
    }

    #[test]
    fn permutation_character_of_s3_on_points() {
        // natural action of S3 on 3 points: <1, pi> = 1 orbit
        let g = symmetric_group(3);
        let ctx = Arc::new(ClassContext::new(g));
        let values: Vec<Cyclotomic> = ctx
            .conj
            .representatives
            .iter()
            .map(|&r| {
                let perm = ctx.group.element(r);
                let fixed =
                    (0..3u16).filter(|&pt| perm.apply(pt) == pt).count();
                Cyclotomic::from_int(fixed as i64)
            })
            .collect();
        let pi = ClassFunction::new(ctx.clone(), values);
        let one = ClassFunction::constant(ctx, Cyclotomic::one());
        assert_eq!(inner_product(&one, &pi).unwrap(), Cyclotomic::one());
    }

    #[test]
    fn group_mismatch_rejected() {
        let a = table_of(symmetric_group(3));
        let b = table_of(cyclic_group(6));
        assert!(inner_product(&a.irreducibles[0], &b.irreducibles[0]).is_err());
        let _ = Perm::identity(1);
    }
}
