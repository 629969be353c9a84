//! Fixtures and brute-force oracles shared by the unit tests.

use num_traits::{One, ToPrimitive, Zero};

pub use crate::corpus::algebras::{dual_numbers, f4, row_ring, upper_triangular};
pub use crate::corpus::random::random_module_pair;
use crate::bimod::Bimodule;
use crate::exactla::{FieldSpec, Scalar};
use crate::rings::Algebra;

pub fn f2() -> FieldSpec {
    FieldSpec::Prime(2)
}

pub fn f3() -> FieldSpec {
    FieldSpec::Prime(3)
}

/// Rank by plain elimination on `u64` residues or fraction-free `i128` rows.
pub fn oracle_rank(field: FieldSpec, rows: &[Vec<Scalar>]) -> usize {
    match field {
        FieldSpec::Prime(p) => {
            let mut m: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| r.iter().map(|s| if let Scalar::Mod(x) = s { *x } else { unreachable!() }).collect())
                .collect();
            let cols = m.first().map_or(0, Vec::len);
            let mut rank = 0;
            for c in 0..cols {
                let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
                m.swap(rank, piv);
                let inv = (1..p).find(|x| x * m[rank][c] % p == 1).unwrap();
                for x in m[rank].iter_mut() {
                    *x = *x * inv % p;
                }
                for r in 0..m.len() {
                    if r != rank && m[r][c] != 0 {
                        let factor = m[r][c];
                        for k in 0..cols {
                            m[r][k] = (m[r][k] + p * p - factor * m[rank][k] % p) % p;
                        }
                    }
                }
                rank += 1;
            }
            rank
        }
        FieldSpec::Rationals => {
            let mut m: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| {
                    let rats: Vec<_> = r.iter().map(|s| if let Scalar::Rat(x) = s { x.clone() } else { unreachable!() }).collect();
                    let mut l = num_bigint::BigInt::one();
                    for x in &rats {
                        l = num_integer::Integer::lcm(&l, x.denom());
                    }
                    rats.iter().map(|x| (x.numer() * (&l / x.denom())).to_i128().unwrap()).collect()
                })
                .collect();
            let cols = m.first().map_or(0, Vec::len);
            let mut rank = 0;
            for c in 0..cols {
                let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
                m.swap(rank, piv);
                for r in rank + 1..m.len() {
                    let (a, b) = (m[rank][c], m[r][c]);
                    for k in 0..cols {
                        m[r][k] = a * m[r][k] - b * m[rank][k];
                    }
                    let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                    if g > 1 {
                        for x in m[r].iter_mut() {
                            *x /= g;
                        }
                    }
                }
                rank += 1;
            }
            rank
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b.is_zero() {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `dim M ⊗_A N` as ambient minus the rank of `(m·a)⊗n - m⊗(a·n)` over all basis triples.
pub fn oracle_tensor_dim(m: &Bimodule, n: &Bimodule) -> usize {
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let mut rows = Vec::new();
    for i in 0..dm {
        for a in 0..m.right().dim() {
            let ma = m.right_act(a).column(i);
            for k in 0..dn {
                let an = n.left_act(a).column(k);
                let mut v = vec![f.zero(); dm * dn];
                for (r, x) in ma.iter().enumerate() {
                    v[r * dn + k] = f.add(&v[r * dn + k], x);
                }
                for (s, y) in an.iter().enumerate() {
                    v[i * dn + s] = f.sub(&v[i * dn + s], y);
                }
                rows.push(v);
            }
        }
    }
    dm * dn - if rows.is_empty() { 0 } else { oracle_rank(f, &rows) }
}

/// Rank of the balancing relations of `A ⊗_A A` read straight off the table.
pub fn brute_balancing_rank(a: &Algebra) -> usize {
    let f = a.field();
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut v = vec![f.zero(); n * n];
                for l in 0..n {
                    let c = a.structure_constant(i, j, l);
                    v[l * n + k] = f.add(&v[l * n + k], c);
                    let d = a.structure_constant(j, k, l);
                    v[i * n + l] = f.sub(&v[i * n + l], d);
                }
                rows.push(v);
            }
        }
    }
    oracle_rank(f, &rows)
}

/// Every vector of `F_2^n`.
pub fn all_vectors_f2(n: usize) -> Vec<Vec<Scalar>> {
    let f = f2();
    (0..1u32 << n)
        .map(|m| (0..n).map(|i| f.from_i64(((m >> i) & 1) as i64)).collect())
        .collect()
}
