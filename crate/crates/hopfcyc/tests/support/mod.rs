//! Helpers shared by the integration tests: an integer-only elimination
//! oracle and seeded random inputs.

#![allow(dead_code)]

use hopfcyc::exact::{SparseMatrix, SparseVec, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

/// Rank by Bareiss fraction-free elimination. Rows are first cleared of
/// denominators, so every intermediate value is an integer.
pub fn bareiss_rank(rows: &[Vec<Q>]) -> usize {
    let n = rows.len();
    if n == 0 {
        return 0;
    }
    let m = rows[0].len();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..m {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        for i in rank + 1..n {
            for j in col + 1..m {
                let v = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                let (q, r) = v.div_rem(&prev);
                assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

pub fn dense_mul_vec(rows: &[Vec<Q>], v: &SparseVec) -> Vec<Q> {
    rows.iter().map(|r| v.iter().fold(Q::zero(), |acc, (j, c)| acc + &r[*j] * c)).collect()
}

pub fn to_dense(v: &SparseVec, n: usize) -> Vec<Q> {
    (0..n).map(|i| v.get(&i).cloned().unwrap_or_else(Q::zero)).collect()
}

fn small_q<R: Rng>(rng: &mut R) -> Q {
    let n: i64 = rng.gen_range(-4..=4);
    let d: i64 = if rng.gen_bool(0.25) { rng.gen_range(1..=5) } else { 1 };
    Q::new(n.into(), d.into())
}

/// An r×c matrix of rank at most k, built as a product of random factors.
pub fn random_low_rank<R: Rng>(rng: &mut R, r: usize, c: usize, k: usize) -> Vec<Vec<Q>> {
    let b: Vec<Vec<Q>> = (0..r).map(|_| (0..k).map(|_| small_q(rng)).collect()).collect();
    let cm: Vec<Vec<Q>> = (0..k).map(|_| (0..c).map(|_| small_q(rng)).collect()).collect();
    (0..r).map(|i| (0..c).map(|j| (0..k).fold(Q::zero(), |acc, t| acc + &b[i][t] * &cm[t][j])).collect()).collect()
}

/// A random matrix up to 20×20; half dense, half deliberately rank deficient.
pub fn random_matrix<R: Rng>(rng: &mut R) -> Vec<Vec<Q>> {
    let r = rng.gen_range(1..=20);
    let c = rng.gen_range(1..=20);
    if rng.gen_bool(0.5) {
        (0..r).map(|_| (0..c).map(|_| if rng.gen_bool(0.3) { Q::zero() } else { small_q(rng) }).collect()).collect()
    } else {
        let k = rng.gen_range(0..=r.min(c));
        random_low_rank(rng, r, c, k)
    }
}

/// Compares rank, kernel and image of the library against the oracle.
pub fn check_against_oracle(rows: &[Vec<Q>]) -> Result<(), String> {
    let m = SparseMatrix::from_dense(rows);
    let cols = rows.first().map_or(0, |r| r.len());
    let want = bareiss_rank(rows);
    if m.rank() != want {
        return Err(format!("rank {} vs oracle {want}", m.rank()));
    }
    if m.transpose().rank() != want {
        return Err("row rank differs from column rank".into());
    }
    let ker = hopfcyc::exact::kernel_basis(&m);
    if ker.len() + want != cols {
        return Err(format!("nullity {} with rank {want} on {cols} columns", ker.len()));
    }
    for v in &ker {
        if dense_mul_vec(rows, v).iter().any(|x| !x.is_zero()) {
            return Err("kernel vector not annihilated".into());
        }
    }
    let kd: Vec<Vec<Q>> = ker.iter().map(|v| to_dense(v, cols)).collect();
    if bareiss_rank(&kd) != ker.len() {
        return Err("kernel basis is dependent".into());
    }
    let img = hopfcyc::exact::image_basis(&m);
    if img.len() != want {
        return Err(format!("image basis has {} vectors, rank {want}", img.len()));
    }
    // the image vectors together with the columns still have rank `want`
    let mut tr: Vec<Vec<Q>> = m.transpose().to_dense();
    tr.extend(img.iter().map(|v| to_dense(v, rows.len())));
    if bareiss_rank(&tr) != want {
        return Err("image basis leaves the column space".into());
    }
    Ok(())
}
