//! Exact rational scalars and the sparse linear algebra kernel.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use indexmap::IndexSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

pub type Q = Rational;

/// Sparse vector: index -> nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Q>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("empty rational literal")]
    Empty,
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed rational `{0}`")]
    Malformed(String),
}

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Q, ScalarError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ScalarError::Empty);
    }
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| ScalarError::Malformed(s.to_string()))?;
    let d = BigInt::from_str(den).map_err(|_| ScalarError::Malformed(s.to_string()))?;
    if d.is_zero() {
        return Err(ScalarError::ZeroDenominator(s.to_string()));
    }
    Ok(Q::new(n, d))
}

/// Add `c` to entry `k`, dropping the entry if it cancels.
pub fn add_to<K: Ord>(map: &mut BTreeMap<K, Q>, k: K, c: Q) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `acc += c * other`
pub fn axpy<K: Ord + Clone>(acc: &mut BTreeMap<K, Q>, c: &Q, other: &BTreeMap<K, Q>) {
    if c.is_zero() {
        return;
    }
    for (k, v) in other {
        add_to(acc, k.clone(), c * v);
    }
}

pub fn scaled<K: Ord + Clone>(c: &Q, v: &BTreeMap<K, Q>) -> BTreeMap<K, Q> {
    let mut out = BTreeMap::new();
    axpy(&mut out, c, v);
    out
}

pub fn sub_maps<K: Ord + Clone>(a: &BTreeMap<K, Q>, b: &BTreeMap<K, Q>) -> BTreeMap<K, Q> {
    let mut out = a.clone();
    axpy(&mut out, &(-Q::one()), b);
    out
}

pub fn add_maps<K: Ord + Clone>(a: &BTreeMap<K, Q>, b: &BTreeMap<K, Q>) -> BTreeMap<K, Q> {
    let mut out = a.clone();
    axpy(&mut out, &Q::one(), b);
    out
}

/// Interned symbol table; higher modules address coordinates by structured labels.
#[derive(Debug, Clone)]
pub struct Basis<K: Hash + Eq> {
    set: IndexSet<K>,
}

impl<K: Hash + Eq + Clone> Default for Basis<K> {
    fn default() -> Self {
        Self { set: IndexSet::new() }
    }
}

impl<K: Hash + Eq + Clone> Basis<K> {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn from_iter<I: IntoIterator<Item = K>>(it: I) -> Self {
        Self { set: it.into_iter().collect() }
    }
    pub fn intern(&mut self, k: K) -> usize {
        self.set.insert_full(k).0
    }
    pub fn index(&self, k: &K) -> Option<usize> {
        self.set.get_index_of(k)
    }
    pub fn label(&self, i: usize) -> &K {
        &self.set[i]
    }
    pub fn len(&self) -> usize {
        self.set.len()
    }
    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }
    pub fn iter(&self) -> impl Iterator<Item = &K> {
        self.set.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        for r in &rows {
            debug_assert!(r.keys().all(|&c| c < cols));
            debug_assert!(r.values().all(|v| !v.is_zero()));
        }
        Self { rows: rows.len(), cols, data: rows }
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| (i, v.clone()))
                    .collect()
            })
            .collect();
        Self { rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given sparse vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, v) in col {
                m.data[i].insert(j, v.clone());
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.cols]; self.rows];
        for (i, r) in self.data.iter().enumerate() {
            for (&j, v) in r {
                out[i][j] = v.clone();
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.data[i].get(&j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, r) in self.data.iter().enumerate() {
            for (&j, v) in r {
                t.data[j].insert(i, v.clone());
            }
        }
        t
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, r) in self.data.iter().enumerate() {
            let mut acc = Q::zero();
            // iterate over the sparser side
            if r.len() <= v.len() {
                for (j, a) in r {
                    if let Some(b) = v.get(j) {
                        acc += a * b;
                    }
                }
            } else {
                for (j, b) in v {
                    if let Some(a) = r.get(j) {
                        acc += a * b;
                    }
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        for (i, r) in self.data.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (k, a) in r {
                axpy(&mut acc, a, &other.data[*k]);
            }
            out.data[i] = acc;
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        SparseMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

impl fmt::Display for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn eliminate(target: &mut SparseVec, pivot_col: usize, pivot_row: &SparseVec) {
    if let Some(c) = target.get(&pivot_col).cloned() {
        let neg = -c;
        axpy(target, &neg, pivot_row);
    }
}

/// Gauss-Jordan elimination. Pivot rule: leftmost column first, then the
/// lowest remaining row index holding a nonzero entry in that column.
pub fn rref(m: &SparseMatrix) -> (SparseMatrix, Vec<usize>) {
    let mut rows = m.data.clone();
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for c in 0..m.cols {
        if next == rows.len() {
            break;
        }
        let Some(r) = (next..rows.len()).find(|&r| rows[r].contains_key(&c)) else {
            continue;
        };
        rows.swap(r, next);
        let inv = rows[next][&c].recip();
        if !inv.is_one() {
            for v in rows[next].values_mut() {
                *v *= &inv;
            }
        }
        let prow = rows[next].clone();
        let (before, rest) = rows.split_at_mut(next);
        let after = &mut rest[1..];
        crate::par::for_each_mut(before, |row| eliminate(row, c, &prow));
        crate::par::for_each_mut(after, |row| eliminate(row, c, &prow));
        pivots.push(c);
        next += 1;
    }
    (SparseMatrix { rows: m.rows, cols: m.cols, data: rows }, pivots)
}

pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let (r, pivots) = rref(m);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut out = Vec::new();
    for f in (0..m.cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = SparseVec::new();
        v.insert(f, Q::one());
        for (i, &p) in pivots.iter().enumerate() {
            if let Some(a) = r.data[i].get(&f) {
                v.insert(p, -a.clone());
            }
        }
        out.push(v);
    }
    out
}

/// Columns of `m` forming a basis of its column space (pivot columns).
pub fn image_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let (_, pivots) = rref(m);
    let cols = m.columns();
    pivots.into_iter().map(|p| cols[p].clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: Vec<Q>,
    pub basis: Vec<Vec<Q>>,
    pub parameters: Vec<String>,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// particular + sum params[i] * basis[i]
    pub fn point(&self, params: &[Q]) -> Vec<Q> {
        assert_eq!(params.len(), self.basis.len());
        let mut x = self.particular.clone();
        for (p, b) in params.iter().zip(&self.basis) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += p * bi;
            }
        }
        x
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("inconsistent linear system")]
pub struct Inconsistent;

pub fn dense_vec(v: &SparseVec, n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); n];
    for (&i, c) in v {
        out[i] = c.clone();
    }
    out
}

pub fn sparse_vec(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn solve_affine(m: &SparseMatrix, rhs: &[Q]) -> Result<SolutionSpace, Inconsistent> {
    assert_eq!(rhs.len(), m.rows, "rhs length must equal row count");
    let n = m.cols;
    let mut aug_rows = m.data.clone();
    for (i, b) in rhs.iter().enumerate() {
        if !b.is_zero() {
            aug_rows[i].insert(n, b.clone());
        }
    }
    let aug = SparseMatrix::from_rows(n + 1, aug_rows);
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return Err(Inconsistent);
    }
    let mut particular = vec![Q::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        if let Some(b) = r.data[i].get(&n) {
            particular[p] = b.clone();
        }
    }
    let basis: Vec<Vec<Q>> = kernel_basis(m).iter().map(|v| dense_vec(v, n)).collect();
    let parameters = (0..basis.len()).map(|i| format!("t{i}")).collect();
    Ok(SolutionSpace { particular, basis, parameters })
}

/// Express each vector of `images` in the basis `sub`; None if one lies outside.
pub fn coordinates(sub: &[SparseVec], images: &[SparseVec], ambient: usize) -> Option<Vec<SparseVec>> {
    let m = SparseMatrix::from_columns(ambient, sub);
    let mut out = Vec::new();
    for img in images {
        let rhs = dense_vec(img, ambient);
        let sol = solve_affine(&m, &rhs).ok()?;
        out.push(sparse_vec(&sol.particular));
    }
    Some(out)
}

/// Incrementally reduced spanning set used for membership tests and quotients.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, SparseVec)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vs: I) -> Self {
        let mut e = Self::new();
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        for (p, row) in &self.rows {
            eliminate(&mut v, *p, row);
        }
        v
    }

    /// Returns true when `v` enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for c in r.values_mut() {
            *c *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            eliminate(row, p, &r);
        }
        self.rows.push((p, r));
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }
}

/// Basis of span(sup) modulo span(sub): the vectors of `sup`, in order,
/// that are independent of `sub` together with those already chosen.
pub fn quotient_basis(sub: &[SparseVec], sup: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::from_vectors(sub);
    sup.iter().filter(|v| e.insert((*v).clone())).cloned().collect()
}

/// Standard-basis complement of a subspace of Q^n, chosen by non-pivot columns.
pub fn complement_basis(sub: &[SparseVec], n: usize) -> Vec<SparseVec> {
    let std: Vec<SparseVec> = (0..n)
        .map(|i| {
            let mut v = SparseVec::new();
            v.insert(i, Q::one());
            v
        })
        .collect();
    quotient_basis(sub, &std)
}

/// Intersection of two subspaces given by spanning sets.
pub fn intersect(a: &[SparseVec], b: &[SparseVec], n: usize) -> Vec<SparseVec> {
    // x = sum s_i a_i = sum t_j b_j  <=>  [A | -B](s,t) = 0
    let mut cols: Vec<SparseVec> = a.to_vec();
    cols.extend(b.iter().map(|v| scaled(&(-Q::one()), v)));
    let m = SparseMatrix::from_columns(n, &cols);
    let mut out = Echelon::new();
    let mut res = Vec::new();
    for k in kernel_basis(&m) {
        let mut x = SparseVec::new();
        for (i, ai) in a.iter().enumerate() {
            if let Some(s) = k.get(&i) {
                axpy(&mut x, s, ai);
            }
        }
        if out.insert(x.clone()) {
            res.push(x);
        }
    }
    res
}

// ---------------------------------------------------------------------------
// Small dense matrices (module/comodule data)

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub n: usize,
    pub m: usize,
    pub a: Vec<Vec<Q>>,
}

impl Mat {
    pub fn zeros(n: usize, m: usize) -> Self {
        Self { n, m, a: vec![vec![Q::zero(); m]; n] }
    }
    pub fn identity(n: usize) -> Self {
        let mut r = Self::zeros(n, n);
        for i in 0..n {
            r.a[i][i] = Q::one();
        }
        r
    }
    pub fn from_rows(a: Vec<Vec<Q>>) -> Self {
        let n = a.len();
        let m = a.first().map_or(0, |r| r.len());
        assert!(a.iter().all(|r| r.len() == m), "ragged matrix");
        Self { n, m, a }
    }
    pub fn from_ints(a: &[&[i64]]) -> Self {
        Self::from_rows(a.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }
    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }
    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.m, o.n);
        let mut r = Mat::zeros(self.n, o.m);
        for i in 0..self.n {
            for k in 0..self.m {
                let x = &self.a[i][k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..o.m {
                    if !o.a[k][j].is_zero() {
                        r.a[i][j] += x * &o.a[k][j];
                    }
                }
            }
        }
        r
    }
    pub fn add(&self, o: &Mat) -> Mat {
        let mut r = self.clone();
        for i in 0..self.n {
            for j in 0..self.m {
                r.a[i][j] += &o.a[i][j];
            }
        }
        r
    }
    pub fn sub(&self, o: &Mat) -> Mat {
        self.add(&o.scale(&-Q::one()))
    }
    pub fn scale(&self, c: &Q) -> Mat {
        let mut r = self.clone();
        for row in r.a.iter_mut() {
            for x in row.iter_mut() {
                *x *= c;
            }
        }
        r
    }
    pub fn commutator(&self, o: &Mat) -> Mat {
        self.mul(o).sub(&o.mul(self))
    }
    pub fn transpose(&self) -> Mat {
        let mut r = Mat::zeros(self.m, self.n);
        for i in 0..self.n {
            for j in 0..self.m {
                r.a[j][i] = self.a[i][j].clone();
            }
        }
        r
    }
    pub fn kron(&self, o: &Mat) -> Mat {
        let mut r = Mat::zeros(self.n * o.n, self.m * o.m);
        for i in 0..self.n {
            for j in 0..self.m {
                if self.a[i][j].is_zero() {
                    continue;
                }
                for k in 0..o.n {
                    for l in 0..o.m {
                        r.a[i * o.n + k][j * o.m + l] = &self.a[i][j] * &o.a[k][l];
                    }
                }
            }
        }
        r
    }
    /// Row vector e_i * self, as sparse.
    pub fn row_sparse(&self, i: usize) -> SparseVec {
        sparse_vec(&self.a[i])
    }
    /// Row-vector times matrix.
    pub fn apply_row(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, c) in v {
            for (j, x) in self.a[i].iter().enumerate() {
                if !x.is_zero() {
                    add_to(&mut out, j, c * x);
                }
            }
        }
        out
    }
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.n, self.m);
        let n = self.n;
        let mut rows = Vec::new();
        for i in 0..n {
            let mut r = sparse_vec(&self.a[i]);
            r.insert(n + i, Q::one());
            rows.push(r);
        }
        let (r, piv) = rref(&SparseMatrix::from_rows(2 * n, rows));
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        let mut out = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.a[i][j] = r.get(i, n + j);
            }
        }
        Some(out)
    }
    pub fn max_abs_entry(&self) -> Q {
        self.a.iter().flatten().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .a
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn rref_identity_and_rank_one() {
        let (r, p) = rref(&m(&[&[1, 0], &[0, 1]]));
        assert_eq!(r, SparseMatrix::identity(2));
        assert_eq!(p, vec![0, 1]);
        let (r, p) = rref(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernels() {
        let k = kernel_basis(&SparseMatrix::zeros(3, 3));
        assert_eq!(k.len(), 3);
        assert!(kernel_basis(&SparseMatrix::identity(4)).is_empty());
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k, vec![sparse_vec(&[qi(-1), qi(1)])]);
    }

    #[test]
    fn affine() {
        let s = solve_affine(&SparseMatrix::identity(2), &[qi(3), q(1, 2)]).unwrap();
        assert_eq!(s.particular, vec![qi(3), q(1, 2)]);
        assert!(s.basis.is_empty());
        assert_eq!(solve_affine(&m(&[&[0]]), &[qi(1)]), Err(Inconsistent));
    }

    #[test]
    fn parse() {
        assert_eq!(parse_rational("3/2").unwrap(), q(3, 2));
        assert_eq!(parse_rational(" -4 ").unwrap(), qi(-4));
        assert!(matches!(parse_rational("1/0"), Err(ScalarError::ZeroDenominator(_))));
        assert!(parse_rational("x").is_err());
        assert_eq!(q(6, 4).to_string(), "3/2");
        assert_eq!(qi(1).to_string(), "1");
    }

    #[test]
    fn quotient_and_intersection() {
        let e = |i: usize| {
            let mut v = SparseVec::new();
            v.insert(i, qi(1));
            v
        };
        let c = complement_basis(&[add_maps(&e(0), &e(1))], 3);
        assert_eq!(c, vec![e(0), e(2)]);
        let i = intersect(&[e(0), e(1)], &[e(1), e(2)], 3);
        assert_eq!(i.len(), 1);
        assert!(Echelon::from_vectors(&i).contains(&e(1)));
    }

    #[test]
    fn inverse() {
        let a = Mat::from_ints(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.mul(&a.inverse().unwrap()), Mat::identity(2));
        assert!(Mat::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
